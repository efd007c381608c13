"""
KBlowup Core - Exact Linear Algebra

Thin helpers around sympy's sparse DomainMatrix over QQ.
Zero-sized shapes are handled here so callers never special-case them.

PURE MATH - No I/O
"""
from typing import Iterable, Mapping, Sequence

from sympy import QQ
from sympy.polys.matrices import DomainMatrix

Column = Mapping[int, object]


def from_columns(columns: Sequence[Column], nrows: int) -> DomainMatrix:
    """
    Build an nrows x len(columns) matrix from sparse column vectors.

    Args:
        columns: One mapping row-index -> coefficient per column
        nrows: Number of rows

    Returns:
        Sparse DomainMatrix over QQ
    """
    dod: dict[int, dict[int, object]] = {}
    for j, col in enumerate(columns):
        for i, value in col.items():
            if not value:
                continue
            if i < 0 or i >= nrows:
                raise IndexError(f"row {i} outside 0..{nrows - 1}")
            dod.setdefault(i, {})[j] = QQ.convert(value)
    return DomainMatrix.from_dod(dod, (nrows, len(columns)), QQ)


def zeros(nrows: int, ncols: int) -> DomainMatrix:
    return DomainMatrix.from_dod({}, (nrows, ncols), QQ)


def identity(n: int) -> DomainMatrix:
    return DomainMatrix.from_dod({i: {i: QQ.one} for i in range(n)}, (n, n), QQ)


def rank(matrix: DomainMatrix) -> int:
    nrows, ncols = matrix.shape
    if nrows == 0 or ncols == 0:
        return 0
    return matrix.rank()


def matmul(left: DomainMatrix, right: DomainMatrix) -> DomainMatrix:
    if left.shape[1] != right.shape[0]:
        raise ValueError(f"shape mismatch {left.shape} x {right.shape}")
    if 0 in left.shape or 0 in right.shape:
        return zeros(left.shape[0], right.shape[1])
    return left * right


def nullspace(matrix: DomainMatrix) -> DomainMatrix:
    """Kernel basis as the columns of an (ncols x k) matrix."""
    nrows, ncols = matrix.shape
    if ncols == 0:
        return zeros(0, 0)
    if nrows == 0 or not matrix.to_dod():
        return identity(ncols)
    rows = matrix.nullspace()
    if rows.shape[0] == 0:
        return zeros(ncols, 0)
    return rows.transpose()


def hstack(blocks: Iterable[DomainMatrix], nrows: int) -> DomainMatrix:
    """Concatenate column blocks; empty blocks are skipped."""
    dod: dict[int, dict[int, object]] = {}
    offset = 0
    for block in blocks:
        if block.shape[0] != nrows:
            raise ValueError(f"block has {block.shape[0]} rows, expected {nrows}")
        for i, row in block.to_dod().items():
            target = dod.setdefault(i, {})
            for j, value in row.items():
                target[j + offset] = value
        offset += block.shape[1]
    return DomainMatrix.from_dod(dod, (nrows, offset), QQ)


def block_diagonal(blocks: Sequence[DomainMatrix]) -> DomainMatrix:
    dod: dict[int, dict[int, object]] = {}
    row_off = col_off = 0
    for block in blocks:
        for i, row in block.to_dod().items():
            target = dod.setdefault(i + row_off, {})
            for j, value in row.items():
                target[j + col_off] = value
        row_off += block.shape[0]
        col_off += block.shape[1]
    return DomainMatrix.from_dod(dod, (row_off, col_off), QQ)


def is_zero(matrix: DomainMatrix) -> bool:
    return not matrix.to_dod()


def restricted_rank(matrix: DomainMatrix, subspace: DomainMatrix) -> int:
    """Rank of a map restricted to the subspace spanned by the given columns."""
    return rank(matmul(matrix, subspace))


def submatrix(matrix: DomainMatrix, rows: Sequence[int], cols: Sequence[int]) -> DomainMatrix:
    """Rows and columns picked by index lists (which may be empty)."""
    row_pos = {r: k for k, r in enumerate(rows)}
    col_pos = {c: k for k, c in enumerate(cols)}
    dod: dict[int, dict[int, object]] = {}
    for i, row in matrix.to_dod().items():
        if i not in row_pos:
            continue
        picked = {col_pos[j]: v for j, v in row.items() if j in col_pos}
        if picked:
            dod[row_pos[i]] = picked
    return DomainMatrix.from_dod(dod, (len(rows), len(cols)), QQ)
