import random

import numpy as np
import pytest

from bcnrecon import (
    Bcn,
    LogicalMatrix,
    boolean_to_algebraic,
    decode_bits,
    encode_bits,
    stp,
    stp_logical,
    tabulate,
)


def random_logical(rng, rows=None, cols=None):
    rows = rows or rng.randint(1, 4)
    cols = cols or rng.randint(1, 4)
    return LogicalMatrix(rows, tuple(rng.randint(1, rows) for _ in range(cols)))


class TestLogicalMatrix:
    def test_rejects_nonpositive_rows(self):
        with pytest.raises(ValueError, match="rows"):
            LogicalMatrix(0, ())

    def test_rejects_out_of_range_index(self):
        with pytest.raises(ValueError, match="column 2"):
            LogicalMatrix(2, (1, 3))

    def test_dense_round_trip(self):
        m = LogicalMatrix(3, (2, 1, 3, 2))
        assert LogicalMatrix.from_dense(m.to_dense()) == m
        expected = np.array([[0, 1, 0, 0], [1, 0, 0, 1], [0, 0, 1, 0]])
        assert np.array_equal(m.to_dense(), expected)

    def test_from_dense_rejects_non_basis_column(self):
        with pytest.raises(ValueError, match="column 1"):
            LogicalMatrix.from_dense(np.array([[1, 0], [1, 1]]))

    def test_identity(self):
        assert LogicalMatrix.identity(3).col_index == (1, 2, 3)


class TestStp:
    def test_identity_case(self):
        eye = np.eye(2, dtype=np.int64)
        assert np.array_equal(stp(eye, eye), eye)

    def test_equal_inner_dims_reduce_to_matmul(self):
        a = np.array([[1, 2], [3, 4]])
        b = np.array([[5, 6], [7, 8]])
        assert np.array_equal(stp(a, b), a @ b)

    def test_basis_column_rule(self):
        # evaluating the Kronecker formula by hand for delta_2^1 x delta_2^2:
        # (d1 kron I_2) is 4x2 selecting rows 1,2; applied to d2 gives row 2 of 4
        d1 = np.array([[1], [0]])
        d2 = np.array([[0], [1]])
        assert np.array_equal(stp(d1, d2), np.array([[0], [1], [0], [0]]))

    def test_reduces_to_matmul_when_conformable(self):
        rng = random.Random(1)
        for _ in range(50):
            n, k, m = (rng.randint(1, 4) for _ in range(3))
            a = np.array([[rng.randint(-3, 3) for _ in range(k)] for _ in range(n)])
            b = np.array([[rng.randint(-3, 3) for _ in range(m)] for _ in range(k)])
            assert np.array_equal(stp(a, b), a @ b)

    def test_associative_on_random_integer_matrices(self):
        rng = random.Random(2)
        for _ in range(100):
            dims = [rng.randint(1, 3) for _ in range(6)]
            a = np.array([[rng.randint(0, 2) for _ in range(dims[1])] for _ in range(dims[0])])
            b = np.array([[rng.randint(0, 2) for _ in range(dims[3])] for _ in range(dims[2])])
            c = np.array([[rng.randint(0, 2) for _ in range(dims[5])] for _ in range(dims[4])])
            assert np.array_equal(stp(stp(a, b), c), stp(a, stp(b, c)))

    def test_rejects_vectors(self):
        with pytest.raises(ValueError, match="2-D"):
            stp(np.array([1, 0]), np.eye(2))


class TestStpLogical:
    def test_logical_times_column(self):
        assert stp_logical(LogicalMatrix(2, (2, 1)), LogicalMatrix(2, (1,))) == \
            LogicalMatrix(2, (2,))

    def test_identity_absorbs(self):
        rng = random.Random(3)
        for _ in range(20):
            x = random_logical(rng, rows=4, cols=1)
            assert stp_logical(LogicalMatrix.identity(4), x) == x

    def test_basis_times_basis(self):
        assert stp_logical(LogicalMatrix(2, (1,)), LogicalMatrix(2, (1,))) == \
            LogicalMatrix(4, (1,))

    def test_general_basis_index_rule(self):
        # delta_M^j x delta_N^i lands at position (j-1)*N + i
        for m in range(1, 5):
            for n in range(1, 5):
                for j in range(1, m + 1):
                    for i in range(1, n + 1):
                        got = stp_logical(LogicalMatrix(m, (j,)), LogicalMatrix(n, (i,)))
                        assert got == LogicalMatrix(m * n, ((j - 1) * n + i,))

    def test_agrees_with_dense_stp(self):
        rng = random.Random(4)
        for _ in range(200):
            a = random_logical(rng)
            b = random_logical(rng)
            got = stp_logical(a, b)
            assert np.array_equal(got.to_dense(), stp(a.to_dense(), b.to_dense()))

    def test_associative(self):
        rng = random.Random(5)
        for _ in range(200):
            a, b, c = (random_logical(rng) for _ in range(3))
            assert stp_logical(stp_logical(a, b), c) == stp_logical(a, stp_logical(b, c))


class TestBitEncoding:
    def test_extremes(self):
        assert encode_bits((1, 1, 1)) == 1
        assert encode_bits((0, 0, 0)) == 8
        assert encode_bits(()) == 1

    def test_round_trip(self):
        for width in range(0, 5):
            for index in range(1, 2**width + 1):
                assert encode_bits(decode_bits(index, width)) == index

    def test_rejects_non_bits(self):
        with pytest.raises(ValueError, match="bits"):
            encode_bits((1, 2))

    def test_rejects_bad_index(self):
        with pytest.raises(ValueError, match="outside"):
            decode_bits(5, 2)


class TestBooleanToAlgebraic:
    def test_and_gate_dynamics(self):
        f = tabulate(lambda bits: bits[0] & bits[1], 2)
        h = tabulate(lambda bits: bits[0], 1)
        transition, readout = boolean_to_algebraic(f, h)
        assert transition == LogicalMatrix(2, (1, 2, 2, 2))
        assert readout == LogicalMatrix(2, (1, 2))

    def test_negation_readout(self):
        f = tabulate(lambda bits: bits[1], 2)
        h = tabulate(lambda bits: 1 - bits[0], 1)
        transition, readout = boolean_to_algebraic(f, h)
        assert transition == LogicalMatrix(2, (1, 2, 1, 2))
        assert readout == LogicalMatrix(2, (2, 1))

    def test_missing_row_is_named(self):
        f = tabulate(lambda bits: bits[0] & bits[1], 2)
        del f[(0, 1)]
        h = tabulate(lambda bits: bits[0], 1)
        with pytest.raises(ValueError, match=r"missing row \(0, 1\)"):
            boolean_to_algebraic(f, h)

    def test_readout_arity_must_match_state_width(self):
        f = tabulate(lambda bits: bits[0] & bits[1], 2)
        h = tabulate(lambda bits: bits[0], 2)
        with pytest.raises(ValueError, match="state bits"):
            boolean_to_algebraic(f, h)

    def test_value_wider_than_key_rejected(self):
        with pytest.raises(ValueError):
            boolean_to_algebraic({(1,): (1, 0)}, {(1,): (1,)})

    def test_autonomous_tables_allowed(self):
        # zero input bits: the key carries only the state
        f = tabulate(lambda bits: 1 - bits[0], 1)
        h = tabulate(lambda bits: bits[0], 1)
        transition, readout = boolean_to_algebraic(f, h)
        assert transition.cols == 2 and readout == LogicalMatrix(2, (1, 2))

    def test_simulation_round_trip(self):
        rng = random.Random(6)
        for _ in range(20):
            n = rng.randint(1, 3)
            m = rng.randint(0, 2)
            q = rng.randint(1, 2)
            f = tabulate(lambda bits: tuple(rng.randint(0, 1) for _ in range(n)), n + m)
            h = tabulate(lambda bits: tuple(rng.randint(0, 1) for _ in range(q)), n)
            transition, readout = boolean_to_algebraic(f, h)
            bcn = Bcn(2**n, 2**m, 2**q, transition, readout)
            for u_index in range(1, 2**m + 1):
                u_bits = decode_bits(u_index, m)
                for x_index in range(1, 2**n + 1):
                    x_bits = decode_bits(x_index, n)
                    assert bcn.step(x_index, u_index) == encode_bits(f[u_bits + x_bits])
                    assert bcn.output(x_index) == encode_bits(h[x_bits])
