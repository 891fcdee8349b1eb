"""
Satake diagrams of real forms, the Djokovic consistency test and the enumerations built on it.

A gradation of a complex simple Lie algebra defined by a node set P descends to the real form with a given Satake
diagram iff every node of P is white and no arrow joins a node of P to a node outside P.
"""
import logging
import re
from typing import Any, Dict, FrozenSet, Iterable, Iterator, List, Optional, Set, Tuple

from ..exceptions import InvalidRealFormException, UnknownRealFormException
from .config import get_config
from .datasets import evaluate, holds, load_dataset
from .rootsys import (MAX_RANK, MIN_RANK, RootSystem, build_root_system, contact_grading_node_set, depth_one_node_set,
                      simple_types)

LOGGER = logging.getLogger(__name__)

__all__ = ["SatakeDiagram", "SatakeDatabase", "satake_lookup", "djokovic_consistent",
           "enumerate_contact_real_forms", "enumerate_depth_one_real_forms", "family_predicate_holds",
           "ContactFormEntry", "census_disagreements"]

WHITE = "white"
BLACK = "black"

# Real forms of type B and D in the so(p,q) families share one row of the contact classification.
CONTACT_LABELS = {"BI": "BDI", "DI": "BDI"}


class SatakeDiagram:
    """Dynkin diagram with black/white nodes and arrows; complex forms carry the doubled diagram (i' = i + rank)."""

    def __init__(self, type_label: str, rank: int, colors: Dict[int, str], arrows: Iterable[Tuple[int, int]],
                 name: str, label: str, params: Optional[Dict[str, int]] = None, complex_form: bool = False,
                 alias_of: Optional[str] = None):
        self.type_label = type_label
        self.rank = rank
        self.colors = dict(colors)
        self.arrows = frozenset(tuple(sorted(pair)) for pair in arrows)  # type: FrozenSet[Tuple[int, ...]]
        self.name = name
        self.label = label
        self.params = dict(params or {})
        self.complex_form = complex_form
        self.alias_of = alias_of

    def __repr__(self):
        return "SatakeDiagram({name}, {label})".format(name=self.name, label=self.label)

    @property
    def root_system(self) -> RootSystem:
        return build_root_system(self.type_label, self.rank)

    @property
    def nodes(self) -> List[int]:
        return sorted(self.colors)

    @property
    def white_nodes(self) -> Set[int]:
        return {i for i, color in self.colors.items() if color == WHITE}

    @property
    def is_compact(self) -> bool:
        return not self.white_nodes

    @property
    def colors_bitmask(self) -> int:
        """Bit i-1 is set iff node i is black."""
        return sum(1 << (i - 1) for i, color in self.colors.items() if color == BLACK)

    @property
    def real_rank(self) -> int:
        """Number of orbits of white nodes under the arrows."""
        return len(self.white_nodes) - len(self.arrows)

    @property
    def is_inner_type(self) -> bool:
        """
        The diagram symmetry of the form (arrows on white nodes, opposition on the black part) is the opposition
        involution of the whole diagram.
        """
        rs = self.root_system
        symmetry = {i: i for i in self.colors}
        for a, b in self.arrows:
            symmetry[a], symmetry[b] = b, a
        black = [i for i, color in self.colors.items() if color == BLACK]
        if black and not self.complex_form:
            symmetry.update(rs.opposition_involution(black))
        return symmetry == rs.opposition_involution()

    def lift(self, nodes: Iterable[int]) -> FrozenSet[int]:
        """Node set of the complex algebra as a node set of this diagram (adds i' for complex forms)."""
        nodes = frozenset(nodes)
        if self.complex_form:
            return nodes | frozenset(i + self.rank for i in nodes)
        return nodes

    def validate(self) -> List[str]:
        problems = []
        seen = set()  # type: Set[int]
        for pair in self.arrows:
            for node in pair:
                if self.colors.get(node) != WHITE:
                    problems.append("arrow {pair} touches a non-white node".format(pair=pair))
                if node in seen:
                    problems.append("node {node} carries two arrows".format(node=node))
                seen.add(node)
        return problems

    def ascii(self) -> str:
        """Plain-text dump: 'o' white, '*' black, bonds '-', '=', '#' by multiplicity, then the arrows."""
        rs = self.root_system
        symbol = {WHITE: "o", BLACK: "*"}
        lines = ["{type}{rank} {name} [{label}]{alias}".format(
            type=self.type_label, rank=self.rank, name=self.name, label=self.label,
            alias=" = {other}".format(other=self.alias_of) if self.alias_of else "")]
        lines.append("nodes: " + "  ".join("{i}{c}".format(i=self._node_label(i), c=symbol[self.colors[i]])
                                           for i in self.nodes))
        bonds = []
        for copy in range(2 if self.complex_form else 1):
            for i in range(rs.rank):
                for j in range(i + 1, rs.rank):
                    multiplicity = rs.cartan[i][j] * rs.cartan[j][i]
                    if multiplicity:
                        offset = copy * self.rank
                        bonds.append("{a}{bond}{b}".format(a=self._node_label(i + 1 + offset),
                                                           bond="-=#"[multiplicity - 1],
                                                           b=self._node_label(j + 1 + offset)))
        lines.append("bonds: " + " ".join(bonds))
        lines.append("arrows: " + (" ".join("{a}<->{b}".format(a=self._node_label(a), b=self._node_label(b))
                                             for a, b in sorted(self.arrows)) or "none"))
        return "\n".join(lines)

    def _node_label(self, node: int) -> str:
        return "{i}'".format(i=node - self.rank) if self.complex_form and node > self.rank else str(node)

    def to_dict(self) -> Dict[str, Any]:
        return {"name": self.name, "label": self.label, "type": "{t}{r}".format(t=self.type_label, r=self.rank),
                "params": self.params, "black": sorted(i for i in self.nodes if self.colors[i] == BLACK),
                "arrows": [list(pair) for pair in sorted(self.arrows)], "complex": self.complex_form,
                "alias_of": self.alias_of, "real_rank": self.real_rank}


def _template_regex(template: str):
    pattern = re.escape(template)
    pattern = re.sub(r"\\\{(\w+)\\\}", r"(?P<\1>\\d+)", pattern)
    return re.compile("^" + pattern + "$")


class SatakeDatabase:
    """All diagrams of the dataset; classical families are evaluated on demand."""

    def __init__(self, content: Dict[str, Any]):
        self.version = content["version"]
        self.families = content["families"]
        self.exceptional = content["exceptional"]
        self.complex = content["complex"]

    def _family_diagram(self, family: Dict[str, Any], n: int, params: Dict[str, int]) -> SatakeDiagram:
        values = dict(params, n=n)
        colors = {i: WHITE if holds(family["white"], i=i, **values) else BLACK for i in range(1, n + 1)}
        arrows = []
        arrow = family.get("arrow")
        if arrow:
            for i in range(1, n + 1):
                if holds(arrow["when"], i=i, **values):
                    arrows.append((i, evaluate(arrow["partner"], i=i, **values)))
        alias = family.get("alias")
        alias_of = alias["of"] if alias and holds(alias["when"], **values) else None
        return SatakeDiagram(family["type"], n, colors, arrows, family["name"].format(n=n, **params),
                             family["label"], params, alias_of=alias_of)

    def _family_members(self, family: Dict[str, Any], n: int) -> Iterator[Dict[str, int]]:
        ranged = family.get("range") or {}
        if ranged:
            (key, (low, high)), = ranged.items()
            candidates = [{key: value} for value in range(evaluate(low, n=n), evaluate(high, n=n) + 1)]
        else:
            candidates = [{}]
        for params in candidates:
            for key, expression in (family.get("derived") or {}).items():
                params[key] = evaluate(expression, n=n, **params)
            if holds(family["valid"], n=n, **params):
                yield params

    def _exceptional_diagram(self, record: Dict[str, Any]) -> SatakeDiagram:
        rank = record["rank"]
        black = range(1, rank + 1) if record["black"] == "all" else record["black"]
        colors = {i: BLACK if i in black else WHITE for i in range(1, rank + 1)}
        return SatakeDiagram(record["type"], rank, colors, [tuple(pair) for pair in record.get("arrows", [])],
                             record["name"], record["label"])

    def complex_diagram(self, type_label: str, rank: int) -> SatakeDiagram:
        record = self.complex[type_label]
        params = {key: evaluate(expression, n=rank) for key, expression in (record.get("derived") or {}).items()}
        colors = {i: WHITE for i in range(1, 2 * rank + 1)}
        arrows = [(i, i + rank) for i in range(1, rank + 1)]
        return SatakeDiagram(type_label, rank, colors, arrows, record["name"].format(n=rank, **params),
                             "complex", params, complex_form=True)

    def real_forms(self, type_label: str, rank: int) -> List[SatakeDiagram]:
        """Every real form of the given complex type (aliases included, complex forms excluded)."""
        diagrams = []
        for family in self.families:
            if family["type"] == type_label:
                diagrams.extend(self._family_diagram(family, rank, params)
                                for params in self._family_members(family, rank))
        diagrams.extend(self._exceptional_diagram(record) for record in self.exceptional
                        if record["type"] == type_label and record["rank"] == rank)
        return diagrams

    def all_diagrams(self, max_rank: int, include_complex: bool = False) -> List[SatakeDiagram]:
        diagrams = []
        for type_label, rank in simple_types(max_rank):
            diagrams.extend(self.real_forms(type_label, rank))
            if include_complex:
                diagrams.append(self.complex_diagram(type_label, rank))
        return diagrams

    def census(self, max_rank: int) -> Dict[str, int]:
        """Number of non-alias real forms per complex type."""
        return {"{t}{r}".format(t=type_label, r=rank):
                sum(1 for diagram in self.real_forms(type_label, rank) if not diagram.alias_of)
                for type_label, rank in simple_types(max_rank)}

    def lookup(self, name: str) -> SatakeDiagram:
        """
        Diagram of a real form given by name ("su(2,3)", "so*(10)", "e6(-26)", "sl(3,C)") or exceptional label.
        :raises UnknownRealFormException: no such form in the database
        """
        compact_name = name.replace(" ", "")
        for record in self.exceptional:
            if compact_name == record["name"] or (compact_name == record["label"] and record["label"] != "compact"):
                return self._exceptional_diagram(record)
        for family in self.families:
            match = _template_regex(family["name"]).match(compact_name)
            if not match:
                continue
            params = {key: int(value) for key, value in match.groupdict().items()}
            symmetric = family.get("symmetric")
            if symmetric:
                low, high = sorted(params[key] for key in symmetric)
                params.update({symmetric[0]: low, symmetric[1]: high})
            rank = evaluate(family["rank"], **params)
            if not isinstance(rank, int) or not MIN_RANK[family["type"]] <= rank <= MAX_RANK.get(family["type"], rank):
                continue
            for member in self._family_members(family, rank):
                if all(dict(member, n=rank).get(key) == value for key, value in params.items()):
                    return self._family_diagram(family, rank, member)
        for type_label, record in self.complex.items():
            match = _template_regex(record["name"]).match(compact_name)
            if not match:
                continue
            for rank in range(MIN_RANK[type_label], MAX_RANK.get(type_label, get_config().max_rank) + 1):
                diagram = self.complex_diagram(type_label, rank)
                if diagram.name == compact_name:
                    return diagram
        raise UnknownRealFormException(name)


_DATABASE = {}  # type: Dict[Any, SatakeDatabase]


def load_database() -> SatakeDatabase:
    data_dir = get_config().data_dir
    if data_dir not in _DATABASE:
        _DATABASE[data_dir] = SatakeDatabase(load_dataset("satake"))
    return _DATABASE[data_dir]


def satake_lookup(real_form_name: str, params: Optional[Dict[str, int]] = None) -> SatakeDiagram:
    """
    :param params: optional family parameters, substituted into the name first (e.g. "su({p},{q})", {p: 1, q: 3})
    :raises UnknownRealFormException: name not in the database
    """
    name = real_form_name.format(**params) if params else real_form_name
    return load_database().lookup(name)


def djokovic_consistent(diag: SatakeDiagram, nodes: Iterable[int]) -> bool:
    """
    Every node of the set is white and no arrow joins the set to its complement.
    :raises InvalidRealFormException: a node outside the diagram
    """
    nodes = frozenset(nodes)
    if not nodes <= set(diag.colors):
        raise InvalidRealFormException(diag.name, {"nodes": sorted(nodes)})
    if any(diag.colors[i] != WHITE for i in nodes):
        return False
    return all((a in nodes) == (b in nodes) for a, b in diag.arrows)


class ContactFormEntry:
    def __init__(self, diagram: SatakeDiagram, nodes: FrozenSet[int], a1_edge_case: bool = False):
        self.diagram = diagram
        self.nodes = nodes
        self.a1_edge_case = a1_edge_case

    @property
    def name(self) -> str:
        return self.diagram.name

    @property
    def label(self) -> str:
        return CONTACT_LABELS.get(self.diagram.label, self.diagram.label)

    def __repr__(self):
        return "ContactFormEntry({name}, {label})".format(name=self.name, label=self.label)


def enumerate_contact_real_forms(max_rank: Optional[int] = None,
                                 include_edge_cases: bool = False) -> List[ContactFormEntry]:
    """
    Noncompact absolutely simple real forms whose Satake diagram admits the contact node set. A1 forms are
    flagged as edge cases and only returned on request.
    """
    max_rank = max_rank or get_config().max_rank
    result = []
    for diagram in load_database().all_diagrams(max_rank):
        if diagram.is_compact:
            continue
        nodes = contact_grading_node_set(diagram.root_system)
        if not djokovic_consistent(diagram, nodes):
            continue
        edge = diagram.type_label == 'A' and diagram.rank == 1
        if edge and not include_edge_cases:
            LOGGER.debug("Skipping A1 edge case %s", diagram.name)
            continue
        result.append(ContactFormEntry(diagram, nodes, edge))
    LOGGER.info("Contact real forms up to rank %d: %d", max_rank, len(result))
    return result


def enumerate_depth_one_real_forms(max_rank: Optional[int] = None) -> List[Tuple[str, int]]:
    """(form, node) for every noncompact form (complex forms included) and mark-1 node passing the test."""
    max_rank = max_rank or get_config().max_rank
    result = []
    for diagram in load_database().all_diagrams(max_rank, include_complex=True):
        if diagram.is_compact:
            continue
        for node in sorted(depth_one_node_set(diagram.root_system)):
            if djokovic_consistent(diagram, diagram.lift([node])):
                result.append((diagram.name, node))
    return result


def family_predicate_holds(diagram: SatakeDiagram, predicates: Dict[str, Any]) -> bool:
    """
    Evaluates the contact-classification predicate of the diagram's family, e.g. "(p >= 2) & (q >= 2)" for BDI.
    Families without a predicate never admit a contact gradation.
    """
    label = CONTACT_LABELS.get(diagram.label, diagram.label)
    if label not in predicates:
        return False
    values = dict(diagram.params, n=diagram.rank)
    return holds(predicates[label], **values)


def census_disagreements(max_rank: Optional[int] = None) -> Dict[str, Tuple[int, int]]:
    """
    Complex types whose number of encoded real forms differs from the curated census, as (encoded, census).
    Types missing from the census count as 0.
    """
    max_rank = max_rank or get_config().max_rank
    counts = load_dataset("real_form_census")["counts"]
    encoded = load_database().census(max_rank)
    return {label: (count, counts.get(label, 0)) for label, count in sorted(encoded.items())
            if count != counts.get(label, 0)}
