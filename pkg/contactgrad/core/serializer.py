"""Canonical text forms of root systems and structure constants, used for golden files."""
import hashlib
import json
from typing import Any, Dict, List

from .liealg import LieAlgebra, dump_structure
from .rootsys import RootSystem, build_root_system

__all__ = []  # type: List[str]


class Serializer:
    ENCODING = 'utf-8'

    @staticmethod
    def root_system_to_dict(rs: RootSystem) -> Dict[str, Any]:
        return {"type": rs.type_label, "rank": rs.rank,
                "cartan": [list(row) for row in rs.cartan],
                "roots": sorted(list(root) for root in rs.roots),
                "highest_root": list(rs.highest_root),
                "highest_root_weights": {str(i): c for i, c in
                                         sorted(rs.fundamental_weight_decomp_of_highest_root.items())}}

    @staticmethod
    def root_system_to_json(rs: RootSystem) -> str:
        return json.dumps(Serializer.root_system_to_dict(rs), sort_keys=True)

    @staticmethod
    def root_system_from_json(content: str) -> RootSystem:
        """
        Rebuilds the root system named in a dump.
        :raises ValueError: the dumped roots differ from the rebuilt ones
        """
        data = json.loads(content)
        rs = build_root_system(data["type"], data["rank"])
        if Serializer.root_system_to_dict(rs)["roots"] != data["roots"]:
            raise ValueError("Dumped roots of {type}{rank} do not match".format(type=data["type"], rank=data["rank"]))
        return rs

    @staticmethod
    def structure_dump(algebra: LieAlgebra) -> str:
        return "\n".join(dump_structure(algebra)) + "\n"

    @staticmethod
    def digest(content: str) -> str:
        return hashlib.sha256(content.encode(Serializer.ENCODING)).hexdigest()

    @staticmethod
    def structure_digest(algebra: LieAlgebra) -> str:
        return Serializer.digest(Serializer.structure_dump(algebra))
