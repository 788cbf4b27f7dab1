"""Bit-packed GF(2) algebra against a dense elimination oracle."""

import pytest
from hypothesis import given, strategies as st

from ycube import PauliString, gf2

from oracles import dense_rank

NCOLS = 12
rows_strategy = st.lists(
    st.integers(min_value=0, max_value=(1 << NCOLS) - 1), min_size=0, max_size=12
)


def _parity(a: int) -> int:
    return a.bit_count() & 1


@given(rows_strategy, st.integers(0, 2**32 - 1))
def test_rank_matches_dense_oracle(rows, seed):
    assert gf2.rank(rows) == dense_rank([list(map(int, bin(r)[2:].zfill(NCOLS)[::-1])) for r in rows])
    # row order cannot matter
    assert gf2.rank(rows) == gf2.rank(sorted(rows)) == gf2.rank(sorted(rows, reverse=True))


@given(rows_strategy)
def test_row_basis_spans_and_reduces(rows):
    basis = gf2.row_basis(rows)
    assert len(basis) == gf2.rank(rows)
    # every original row reduces to zero against the basis
    for r in rows:
        assert gf2.in_span(basis, r)
    # each basis row owns its pivot: no other row touches that column
    for i, b in enumerate(basis):
        low = b & -b
        assert all(not (other & low) for j, other in enumerate(basis) if j != i)


@given(rows_strategy, st.integers(min_value=0, max_value=(1 << NCOLS) - 1))
def test_reduce_vector_idempotent(rows, vec):
    basis = gf2.row_basis(rows)
    res = gf2.reduce_vector(basis, vec)
    assert gf2.reduce_vector(basis, res) == res
    assert gf2.in_span(basis, vec ^ res)


@given(rows_strategy)
def test_nullspace_dimension_and_orthogonality(rows):
    ns = gf2.nullspace(rows, NCOLS)
    assert len(ns) == NCOLS - gf2.rank(rows)
    for v in ns:
        for r in rows:
            assert _parity(r & v) == 0
    # nullspace vectors are independent
    assert gf2.rank(ns) == len(ns)


@given(rows_strategy, st.integers(min_value=0, max_value=(1 << NCOLS) - 1))
def test_solve_consistent_system(rows, x):
    rhs = 0
    for i, r in enumerate(rows):
        rhs |= _parity(r & x) << i
    got = gf2.solve(rows, rhs, NCOLS)
    assert got is not None
    for i, r in enumerate(rows):
        assert _parity(r & got) == (rhs >> i) & 1


def test_solve_inconsistent():
    # x0 = 0 and x0 = 1 simultaneously
    assert gf2.solve([1, 1], 0b10, 4) is None
    # zero row demanding odd parity
    assert gf2.solve([0b11, 0], 0b10, 4) is None


@given(st.lists(st.integers(0, (1 << 6) - 1), min_size=6, max_size=6))
def test_invert_round_trip(rows):
    if gf2.rank(rows) < 6:
        with pytest.raises(ValueError):
            gf2.invert(rows, 6)
        return
    inv = gf2.invert(rows, 6)
    # M * M^-1 = I, entry (i, j) = <row_i, col_j of inverse>
    cols = gf2.transpose(inv, 6)
    for i in range(6):
        for j in range(6):
            assert _parity(rows[i] & cols[j]) == (1 if i == j else 0)


@given(rows_strategy)
def test_transpose_involution(rows):
    t = gf2.transpose(rows, NCOLS)
    assert gf2.transpose(t, len(rows)) == [r & ((1 << NCOLS) - 1) for r in rows]


@given(st.lists(st.integers(0, NCOLS - 1), unique=True))
def test_bits_indices_round_trip(idx):
    bits = gf2.indices_to_bits(idx)
    assert gf2.bits_to_indices(bits) == sorted(idx)


def test_matrix_wrapper():
    m = gf2.GF2Matrix([0b101, 0b011], 3)
    assert m.nrows == 2 and m.ncols == 3
    assert m.rank() == 2
    assert len(m.nullspace()) == 1
    assert len(m.row_basis()) == 2


# ---------------------------------------------------------------------------
# code-level algebra on the square torus


def test_gsd_exponent(code44torus):
    assert gf2.gsd_exponent(code44torus) == 15


def test_in_stabilizer_group(code44torus):
    code = code44torus
    # an even product of generators is in the group
    op = code.terms[0].pauli * code.terms[7].pauli * code.terms[19].pauli
    assert gf2.in_stabilizer_group(code, op)
    assert gf2.in_stabilizer_group(code, PauliString.identity(code.n_qubits))
    # a single edge operator is not
    assert not gf2.in_stabilizer_group(code, PauliString.single(code.n_qubits, "X", 0))
    with pytest.raises(ValueError):
        gf2.in_stabilizer_group(code, PauliString.identity(3))


def test_logical_basis_structure(code44torus):
    code = code44torus
    pairs = gf2.logical_basis(code)
    assert len(pairs) == 15
    xs = [p[0] for p in pairs]
    zs = [p[1] for p in pairs]
    for x in xs:
        assert x.z_bits == 0 and not x.is_identity()
        assert len(code.syndrome(x)) == 0
        assert not gf2.in_stabilizer_group(code, x)
    for z in zs:
        assert z.x_bits == 0 and not z.is_identity()
        assert len(code.syndrome(z)) == 0
        assert not gf2.in_stabilizer_group(code, z)
    # symplectic pairing is exactly diagonal
    for i, x in enumerate(xs):
        for j, z in enumerate(zs):
            assert x.symplectic_form(z) == (1 if i == j else 0)
