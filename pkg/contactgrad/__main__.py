# type: ignore
# Ignore mypy tests for this file; Attributes for the `contactgrad` package are defined dynamically in
#     __init__.py, so mypy complains about attributes not existing (even though they're well defined).

""" Command-line interface """
import json
import logging
import re
import sys
from fractions import Fraction
from typing import Any, Dict, List

import click
import pandas as pd
import tabulate

import contactgrad
from .core.logger import setup_logging
from .core.report import FORMATS, render_reports
from .classify.tables import DEFAULT_TABLES, TABLE_IDS, run_tables
from .__utils__ import parse_algebra, algebra_names

LOGGER = None

CONTEXT_SETTINGS = dict(help_option_names=['-h', '--help'])

_MATRIX_ENTRY = re.compile(r"^(\d+),(\d+)$")


@click.group(context_settings=CONTEXT_SETTINGS)
@click.version_option(version=contactgrad.__version__)
@click.option("--debug", is_flag=True)
@click.option("--silent", is_flag=True)
def cli(debug, silent):
    """
    Exact verification of the classification of symmetric contact spaces.

    Use ``contactgrad COMMAND -h`` to get help for given ``COMMAND``.
    """
    if not debug:
        sys.tracebacklimit = 0

    global LOGGER  # pylint: disable=global-statement
    contactgrad.config.ensure_base_dirs(verbose=False)
    setup_logging(silent=silent)

    LOGGER = logging.getLogger(__name__)


def _fail(ex: contactgrad.exceptions.ContactGradException):
    print(ex.message)
    sys.exit(1)


def _render_fields(fields: Dict[str, Any], output_format: str) -> str:
    """Key/value payload of the single-object commands in the requested format."""
    if output_format == "json":
        return json.dumps(fields, sort_keys=True, indent=2, default=str)
    if output_format == "csv":
        return pd.DataFrame([[key, str(value)] for key, value in fields.items()],
                            columns=["field", "value"]).to_csv(index=False)
    return tabulate.tabulate([[key, value] for key, value in fields.items()], headers=["field", "value"],
                             tablefmt="pipe")


@cli.command(name='help')
@click.pass_context
def help_cmd(ctx):
    """
    Show this message and exit.
    """
    print(ctx.parent.get_help())
    print("\nAlgebra names: " + ", ".join(algebra_names()))


@cli.command()
@click.option("--table", "-t", "table_ids", multiple=True, type=click.Choice(TABLE_IDS),
              help="Table to verify; repeat for several (default: all).")
@click.option("--format", "output_format", type=click.Choice(FORMATS), default="md", help="Output format.")
@click.option("--jobs", "-j", type=int, default=None, help="Number of worker processes.")
def tables(table_ids, output_format, jobs):
    """
    Regenerate the tables and diff them against the bundled data.
    """
    reports = run_tables(table_ids or DEFAULT_TABLES, jobs=jobs)
    print(render_reports(reports, output_format), end="")
    if not all(report.ok for report in reports):
        sys.exit(1)


@cli.command()
@click.option("--table", "-t", "table_id", required=True, type=click.Choice(TABLE_IDS), help="Table to verify.")
@click.option("--format", "output_format", type=click.Choice(FORMATS), default="md", help="Output format.")
def verify(table_id, output_format):
    """
    Verify a single table and print its summary line.
    """
    report, = run_tables([table_id], jobs=1)
    print(render_reports([report], output_format), end="")
    if output_format != "md":  # Markdown already ends with the summary
        print(report.summary)
    if not report.ok:
        sys.exit(1)


def _triple_for(algebra, root: str):
    rs = algebra.root_system
    if rs is None:
        if root != "long":
            raise click.BadParameter("only --root long is available without a root system", param_hint="--root")
        return contactgrad.contact_sl2(algebra)
    if root == "long":
        return contactgrad.regular_sl2(algebra, rs.highest_root)
    if root == "short":
        if rs.highest_short_root is None:
            raise click.BadParameter("{label} is simply laced".format(label=rs.label), param_hint="--root")
        return contactgrad.regular_sl2(algebra, rs.highest_short_root)
    try:
        coords = tuple(int(c) for c in root.split(","))
    except ValueError:
        raise click.BadParameter("expected long, short or comma-separated coordinates", param_hint="--root")
    return contactgrad.regular_sl2(algebra, coords)


@cli.command()
@click.option("--algebra", "-a", required=True, help="Algebra name, e.g. g2-split or su(1,2).")
@click.option("--root", "-r", default="long", help="long, short or simple-root coordinates such as 1,2.")
@click.option("--format", "output_format", type=click.Choice(FORMATS), default="md", help="Output format.")
def gradation(algebra, root, output_format):
    """
    Gradation, canonical decomposition and criteria of the regular sl2 of a root.
    """
    try:
        L = parse_algebra(algebra)
        triple = _triple_for(L, root)
        grad = contactgrad.ad_h_gradation(L, triple)
        decomposition = contactgrad.canonical_decomposition(L, triple)
        contact = contactgrad.is_contact_gradation(grad, L)
        symmetric = contactgrad.is_symmetric_type(L, triple, decomposition)
    except contactgrad.exceptions.ContactGradException as ex:
        _fail(ex)
    fields = {"algebra": L.name, "triple": triple.label, "depth": grad.depth, "parity": grad.parity,
              "eigenvalues": json.dumps({str(i): dim for i, dim in grad.eigenvalues.items()}),
              "contact": bool(contact), "symmetric type": bool(symmetric), "short": contactgrad.is_short(triple, grad)}
    fields.update(("dim " + key, value) for key, value in decomposition.dims.items())
    fields["V+W eigenvalues"] = json.dumps(sorted(grad.restricted_eigenvalues(decomposition.V + decomposition.W)))
    print(_render_fields(fields, output_format))


@cli.command()
@click.option("--form", "-f", "form", required=True, help="Real form, e.g. e6(-26), su(2,3) or sl(3,C).")
@click.option("--check", "check", type=click.Choice(["contact", "depth-one"]), default=None,
              help="Node set to test against the Satake diagram.")
def satake(form, check):
    """
    Print the Satake diagram of a real form and its Djokovic verdict.
    """
    try:
        diagram = contactgrad.satake_lookup(form)
    except contactgrad.exceptions.ContactGradException as ex:
        _fail(ex)
    print(diagram.ascii())
    if check == "contact":
        nodes = diagram.lift(contactgrad.contact_grading_node_set(diagram.root_system))
        verdict = "passes" if contactgrad.djokovic_consistent(diagram, nodes) else "fails"
        print("contact nodes {nodes}: {verdict} Djoković criterion".format(nodes=sorted(nodes), verdict=verdict))
    elif check == "depth-one":
        for node in sorted(contactgrad.depth_one_node_set(diagram.root_system)):
            verdict = "passes" if contactgrad.djokovic_consistent(diagram, diagram.lift([node])) else "fails"
            print("node {node}: {verdict} Djoković criterion".format(node=node, verdict=verdict))


def _parse_xi(algebra, text: str):
    """Element given as "i,j=expr;..." matrix entries (0-based) or "label=expr;..." basis coordinates."""
    entries = {}
    coordinates = {}
    for item in filter(None, (part.strip() for part in text.split(";"))):
        key, sep, value = item.rpartition("=")
        if not sep:
            raise click.BadParameter("expected key=value in '{item}'".format(item=item), param_hint="--xi")
        match = _MATRIX_ENTRY.match(key.strip())
        if match:
            entries[(int(match.group(1)), int(match.group(2)))] = value.strip()
        else:
            coordinates[key.strip()] = Fraction(value.strip())
    if entries and coordinates:
        raise click.BadParameter("mixes matrix entries and basis labels", param_hint="--xi")
    if coordinates:
        return algebra.vector(coordinates)
    size = getattr(getattr(algebra, 'base', algebra), 'size', None)
    if size is None:
        raise click.BadParameter("{name} has no matrix realization".format(name=algebra.name), param_hint="--xi")
    return contactgrad.element(algebra, contactgrad.ComplexMatrix.from_entries(size, entries))


@cli.command()
@click.option("--algebra", "-a", required=True, help="Real algebra name, e.g. so(5) or sl2(C)-real.")
@click.option("--xi", "-x", required=True, help="xi as 'i,j=expr;...' matrix entries or 'label=expr;...'.")
@click.option("--format", "output_format", type=click.Choice(FORMATS), default="md", help="Output format.")
def contactize(algebra, xi, output_format):
    """
    Contactization data of theta = B(xi, .) and the symplectic symmetric criterion.
    """
    try:
        L = parse_algebra(algebra)
        element = _parse_xi(L, xi)
        data = contactgrad.build_contactization(L, element)
        certificate = contactgrad.verify_symplectic_symmetric(L, element, data)
    except contactgrad.exceptions.ContactGradException as ex:
        _fail(ex)
    fields = data.to_dict()
    fields.update(("certificate " + key, value) for key, value in certificate.to_dict().items())
    fields["problems"] = "; ".join(data.check()) or "none"
    print(_render_fields(fields, output_format))
    if not certificate or fields["problems"] != "none":
        sys.exit(1)


@cli.command()
@click.option("--jobs", "-j", type=int, default=None, help="Number of worker processes.")
def selftest(jobs):
    """
    Run the Jacobi suite and every table; exit nonzero on any failure.
    """
    reports = run_tables(("jacobi",) + DEFAULT_TABLES, jobs=jobs)
    rows = [[report.table_id, report.title, report.summary, "ok" if report.ok else "FAILED"] for report in reports]
    print(tabulate.tabulate(rows, headers=["table", "title", "summary", "status"], tablefmt="pipe"))
    failed = [report.table_id for report in reports if not report.ok]  # type: List[str]
    if failed:
        print("Failed: " + ", ".join(failed))
        sys.exit(1)


if __name__ == '__main__':
    cli()  # pylint: disable=no-value-for-parameter
