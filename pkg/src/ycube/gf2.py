"""Bit-packed GF(2) linear algebra.

Vectors are Python ints used as bitsets (bit i = column i), so a matrix is a
list of ints plus a column count.  Arbitrary-precision ints keep every row in
a handful of machine words at the sizes this package works with, and XOR is
the whole ring structure.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, List, Optional, Sequence


def rank(rows: Iterable[int]) -> int:
    """Rank of the row set, by elimination on lowest set bits."""
    r = 0
    pivots: List[int] = []  # reduced rows, each with a unique lowest set bit
    for row in rows:
        for p in pivots:
            low = p & -p
            if row & low:
                row ^= p
        if row:
            pivots.append(row)
            r += 1
    return r


def row_basis(rows: Iterable[int]) -> List[int]:
    """Independent spanning subset, reduced so each basis row owns its pivot bit."""
    basis: List[int] = []
    for row in rows:
        for p in basis:
            low = p & -p
            if row & low:
                row ^= p
        if row:
            # back-reduce earlier rows against the new pivot
            low = row & -row
            basis = [(p ^ row) if (p & low) else p for p in basis]
            basis.append(row)
    return basis


def reduce_vector(basis: Sequence[int], vec: int) -> int:
    """Residual of vec after elimination against a row_basis result."""
    for p in basis:
        low = p & -p
        if vec & low:
            vec ^= p
    return vec


def in_span(basis: Sequence[int], vec: int) -> bool:
    return reduce_vector(basis, vec) == 0


def nullspace(rows: Sequence[int], ncols: int) -> List[int]:
    """Basis of {v : every row has even overlap with v}.

    Standard pivot/free-column split on the row-reduced matrix.
    """
    reduced = row_basis(rows)
    pivot_cols = []
    for p in reduced:
        pivot_cols.append((p & -p).bit_length() - 1)
    pivot_set = set(pivot_cols)
    basis: List[int] = []
    for col in range(ncols):
        if col in pivot_set:
            continue
        v = 1 << col
        for p, pc in zip(reduced, pivot_cols):
            if p & (1 << col):
                v ^= 1 << pc
        basis.append(v)
    return basis


def solve(rows: Sequence[int], rhs_bits: int, ncols: int) -> Optional[int]:
    """One solution x of the system {<row_i, x> = rhs_i}, or None.

    rhs_bits packs the right-hand side, bit i for equation i.
    """
    # eliminate on (row, rhs) pairs
    pivots: List[tuple[int, int]] = []
    for i, row in enumerate(rows):
        b = (rhs_bits >> i) & 1
        for p, pb in pivots:
            low = p & -p
            if row & low:
                row ^= p
                b ^= pb
        if row:
            pivots.append((row, b))
        elif b:
            return None
    x = 0
    # back-substitute from the last pivot up; pivot bit of x is still clear,
    # so toggling it flips the row parity to match
    for p, pb in reversed(pivots):
        col = (p & -p).bit_length() - 1
        if ((p & x).bit_count() & 1) != pb:
            x ^= 1 << col
    return x


def invert(rows: Sequence[int], n: int) -> List[int]:
    """Inverse of an invertible n x n matrix (row i = bitset over n columns)."""
    aug = [(rows[i], 1 << i) for i in range(n)]
    # forward elimination to echelon form
    out: List[tuple[int, int]] = []
    for row, inv in aug:
        for p, pinv in out:
            low = p & -p
            if row & low:
                row ^= p
                inv ^= pinv
        if not row:
            raise ValueError("matrix is singular")
        out.append((row, inv))
    # back substitution
    for i in range(len(out) - 1, -1, -1):
        p, pinv = out[i]
        low = p & -p
        for j in range(i):
            q, qinv = out[j]
            if q & low:
                out[j] = (q ^ p, qinv ^ pinv)
    # rows of `out` now have single-pivot left parts; sort by pivot column
    result = [0] * n
    for p, pinv in out:
        col = (p & -p).bit_length() - 1
        result[col] = pinv
    return result


def transpose(rows: Sequence[int], ncols: int) -> List[int]:
    cols = [0] * ncols
    for i, row in enumerate(rows):
        while row:
            low = row & -row
            cols[low.bit_length() - 1] |= 1 << i
            row ^= low
    return cols


@dataclass
class GF2Matrix:
    """Thin named wrapper when a bare list of ints is too anonymous."""

    rows: List[int]
    ncols: int

    def rank(self) -> int:
        return rank(self.rows)

    def nullspace(self) -> List[int]:
        return nullspace(self.rows, self.ncols)

    def row_basis(self) -> List[int]:
        return row_basis(self.rows)

    @property
    def nrows(self) -> int:
        return len(self.rows)


def bits_to_indices(bits: int) -> List[int]:
    out = []
    while bits:
        low = bits & -bits
        out.append(low.bit_length() - 1)
        bits ^= low
    return out


def indices_to_bits(indices: Iterable[int]) -> int:
    bits = 0
    for i in indices:
        bits ^= 1 << i
    return bits


# ---------------------------------------------------------------------------
# stabilizer-code level algebra
#
# These work on any object exposing n_qubits, x_rows(), z_rows() and audit()
# (see StabilizerCode).  CSS structure is assumed: X-type generators are pure
# X, Z-type pure Z, so row spaces live in separate symplectic halves.


def gsd_exponent(code) -> int:
    """log2 of the ground-state degeneracy: n - rank(hx) - rank(hz)."""
    if not code.audit():
        raise ValueError("stabilizer audit failed; generators do not commute")
    return code.n_qubits - rank(code.x_rows()) - rank(code.z_rows())


def in_stabilizer_group(code, op) -> bool:
    """Membership of a PauliString in the group generated by the terms."""
    if op.n != code.n_qubits:
        raise ValueError("operator length mismatch")
    return in_span(row_basis(code.x_rows()), op.x_bits) and in_span(
        row_basis(code.z_rows()), op.z_bits
    )


def logical_basis(code):
    """k anticommuting logical pairs (X-like, Z-like), each with empty
    syndrome and outside the stabilizer group.

    Candidates come from the two kernels (operators commuting with every
    generator); quotienting by the generator row spaces leaves k independent
    classes on each side, and the invertible pairing matrix between the sides
    is absorbed into the X side so that pair i anticommutes only within i.
    """
    from .pauli import PauliString

    if not code.audit():
        raise ValueError("stabilizer audit failed; generators do not commute")
    n = code.n_qubits
    hx = code.x_rows()
    hz = code.z_rows()

    def quotient(kernel_rows, mod_rows):
        basis = row_basis(mod_rows)
        start = len(basis)
        out = []
        for vec in kernel_rows:
            r = reduce_vector(basis, vec)
            if r:
                basis.append(r)
                out.append(vec)
        assert len(basis) - start == len(out)
        return out

    # Z-like logicals: z_bits in ker(hx), modulo Z-type generator rows
    z_logicals = quotient(nullspace(hx, n), hz)
    # X-like logicals: x_bits in ker(hz), modulo X-type generator rows
    x_logicals = quotient(nullspace(hz, n), hx)
    k = len(z_logicals)
    assert len(x_logicals) == k
    if k == 0:
        return []
    # pairing matrix P[i] has bit j set iff x_i overlaps z_j oddly
    pairing = []
    for xv in x_logicals:
        bits = 0
        for j, zv in enumerate(z_logicals):
            if (xv & zv).bit_count() & 1:
                bits |= 1 << j
        pairing.append(bits)
    u = invert(pairing, k)
    pairs = []
    for i in range(k):
        xv = 0
        row = u[i]
        while row:
            low = row & -row
            xv ^= x_logicals[low.bit_length() - 1]
            row ^= low
        pairs.append(
            (PauliString(n, x_bits=xv, z_bits=0), PauliString(n, x_bits=0, z_bits=z_logicals[i]))
        )
    return pairs
