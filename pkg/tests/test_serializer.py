import json

import pytest

from contactgrad.core.liealg import chevalley_algebra
from contactgrad.core.rootsys import build_root_system
from contactgrad.core.serializer import Serializer


def test_root_system_json():
    rs = build_root_system('G', 2)
    content = Serializer.root_system_to_json(rs)
    data = json.loads(content)
    assert data["highest_root"] == [3, 2]
    assert data["highest_root_weights"] == {"2": 1}
    assert len(data["roots"]) == 12
    assert Serializer.root_system_from_json(content).label == rs.label


def test_tampered_root_system_dump():
    data = Serializer.root_system_to_dict(build_root_system('A', 2))
    data["roots"] = data["roots"][1:]
    with pytest.raises(ValueError):
        Serializer.root_system_from_json(json.dumps(data))


def test_structure_dump_and_digest():
    algebra = chevalley_algebra('A', 1)
    assert Serializer.structure_dump(algebra) == "0 1 1 2\n0 2 2 -2\n1 2 0 1\n"
    digest = Serializer.structure_digest(algebra)
    assert len(digest) == 64
    assert digest == Serializer.digest("0 1 1 2\n0 2 2 -2\n1 2 0 1\n")
    assert digest != Serializer.structure_digest(chevalley_algebra('A', 2))
