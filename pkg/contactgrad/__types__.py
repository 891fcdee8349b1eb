"""Module to define different types used through the contactgrad codebase"""
from fractions import Fraction
from typing import Dict, List, Tuple

# Sparse rational vector: basis index -> nonzero coefficient
SparseVector = Dict[int, Fraction]
# Sparse rational matrix stored by rows: row index -> sparse row
SparseRows = Dict[int, SparseVector]
# Root in the simple-root basis
RootCoords = Tuple[int, ...]
# Structure constants [b_i, b_j] = sum_k c_ij^k b_k, stored for i < j only
StructureTable = Dict[Tuple[int, int], SparseVector]
# Covector on a Lie algebra, same storage as a vector
Covector = SparseVector
Partition = List[int]
