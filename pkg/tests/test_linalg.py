import random
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from nilorbits import linalg, polys
from nilorbits.linalg import LinForm, LinMatrix, RatMatrix


def naive_rank(rows):
    """Textbook Gaussian elimination over Fraction: the oracle."""
    m = [[Fraction(x) for x in r] for r in rows]
    rank, ncols = 0, len(m[0]) if m else 0
    for c in range(ncols):
        piv = next((i for i in range(rank, len(m)) if m[i][c] != 0), None)
        if piv is None:
            continue
        m[rank], m[piv] = m[piv], m[rank]
        for i in range(len(m)):
            if i != rank and m[i][c] != 0:
                f = m[i][c] / m[rank][c]
                m[i] = [a - f * b for a, b in zip(m[i], m[rank])]
        rank += 1
    return rank


small = st.integers(-4, 4)
matrices = st.integers(1, 6).flatmap(
    lambda r: st.integers(1, 6).flatmap(
        lambda c: st.lists(st.lists(small, min_size=c, max_size=c), min_size=r, max_size=r)))
fractions = st.fractions(min_value=-5, max_value=5, max_denominator=6)


def test_e8_cartan_rank():
    from nilorbits.roots import build

    assert linalg.rank(build("E8").cartan) == 8


def test_rank_of_rank_one():
    assert linalg.rank([[1, 2], [2, 4]]) == 1


def test_solve_examples():
    x, kern = linalg.solve([[1, 0], [0, 1]], [3, 4])
    assert x == (3, 4) and kern == []
    assert linalg.solve([[1, 1], [1, 1]], [1, 2]) is None
    x, kern = linalg.solve([[1, 1]], [2])
    assert len(kern) == 1 and x[0] + x[1] == 2


def test_solve_rejects_bad_rhs():
    with pytest.raises(ValueError):
        linalg.solve([[1, 0]], [1, 2])


@settings(max_examples=150, deadline=None)
@given(matrices)
def test_rank_matches_oracle(rows):
    assert linalg.rank(rows) == naive_rank(rows)
    cols = [list(c) for c in zip(*rows)]
    assert linalg.rank(cols) == linalg.rank(rows)


@settings(max_examples=100, deadline=None)
@given(matrices)
def test_kernel_is_kernel(rows):
    kern = linalg.kernel(rows)
    assert len(kern) == len(rows[0]) - naive_rank(rows)
    for v in kern:
        assert all(x == 0 for x in linalg.mat_vec(rows, v))


@settings(max_examples=100, deadline=None)
@given(matrices, st.data())
def test_solve_consistency(rows, data):
    b = data.draw(st.lists(small, min_size=len(rows), max_size=len(rows)))
    res = linalg.solve(rows, b)
    aug = [r + [bi] for r, bi in zip(rows, b)]
    assert (res is not None) == (naive_rank(aug) == naive_rank(rows))
    if res is not None:
        assert linalg.mat_vec(rows, res[0]) == [Fraction(v) for v in b]


@settings(max_examples=60, deadline=None)
@given(st.lists(st.lists(fractions, min_size=4, max_size=4), min_size=3, max_size=3))
def test_fraction_entries(rows):
    red, piv = linalg.rref(rows)
    assert len(piv) == naive_rank(rows)
    for r, c in zip(red, piv):
        assert r[c] == 1


@settings(max_examples=60, deadline=None)
@given(matrices)
def test_modular_rank_never_exceeds_rational(rows):
    assert linalg.rank_mod_p(rows, 3) <= linalg.rank(rows)
    assert linalg.rank_mod_p(rows, (1 << 61) - 1) == linalg.rank(rows)


def test_random_prime_bits():
    p = linalg.random_prime(random.Random(1))
    assert 1 << 61 <= p < 1 << 62


def test_ratmatrix_shape_checked():
    with pytest.raises(ValueError):
        RatMatrix(2, 2, ((Fraction(1),),))
    assert RatMatrix.identity(3)[1, 1] == 1


# -- matrices of linear forms ---------------------------------------------

def T(k):
    return LinForm.var(k)


def test_symbolic_rank_examples():
    M = LinMatrix.from_rows([[T(0), T(1)], [T(1), T(0)]], 2)
    assert linalg.symbolic_rank(M) == 2
    M = LinMatrix.from_rows([[T(0), T(0)], [T(0), T(0)]], 1)
    assert linalg.symbolic_rank(M) == 1
    assert linalg.symbolic_rank(LinMatrix.from_rows([[0, 0], [0, 0]], 0)) == 0


def test_symbolic_rank_cancellation():
    # T0*T1 - T1*T0 vanishes identically; a point-wise test agrees
    M = LinMatrix.from_rows([[T(0), T(1)], [T(0).scale(2), T(1).scale(2)]], 2)
    assert linalg.symbolic_rank(M) == 1


def test_symbolic_budget():
    n = 7
    M = LinMatrix.from_rows([[T(i * n + j) + T(j * n + i).scale(3) for j in range(n)] for i in range(n)], n * n)
    with pytest.raises(linalg.PolynomialBudgetExceeded):
        linalg.symbolic_rank(M, budget=50)


def test_evaluate_checks_length():
    M = LinMatrix.from_rows([[T(0), T(1)]], 2)
    with pytest.raises(ValueError):
        linalg.evaluate(M, [1])
    assert linalg.evaluate(M, [2, 3]).entries == ((2, 3),)


def test_undeclared_indeterminate():
    with pytest.raises(ValueError):
        LinMatrix.from_rows([[T(3)]], 2)


@settings(max_examples=40, deadline=None)
@given(st.integers(1, 4), st.integers(1, 4), st.integers(0, 10**6))
def test_lower_bound_below_symbolic(r, c, seed):
    rng = random.Random(seed)
    m = 3
    rows = [[LinForm.make(rng.randint(-1, 1), {k: rng.randint(-2, 2) for k in range(m)}) for _ in range(c)]
            for _ in range(r)]
    M = LinMatrix.from_rows(rows, m)
    exact = linalg.symbolic_rank(M)
    lb = linalg.generic_rank_lower_bound(M, 5, range(-30, 31), rng)
    assert lb <= exact
    assert linalg.generic_rank_lower_bound(M, 5, range(-30, 31), rng, modulus=101) <= exact


# -- polynomials -------------------------------------------------------------

polys_st = st.dictionaries(st.tuples(st.integers(0, 3), st.integers(0, 3)), st.integers(-5, 5).filter(bool),
                           max_size=5)


@settings(max_examples=100, deadline=None)
@given(polys_st, polys_st.filter(bool))
def test_exact_division_roundtrip(a, b):
    prod = polys.mul(a, b)
    if a:
        assert polys.exact_div(prod, b) == a
    else:
        assert prod == {}


@settings(max_examples=60, deadline=None)
@given(polys_st, polys_st, st.tuples(st.integers(-3, 3), st.integers(-3, 3)))
def test_poly_evaluation_homomorphism(a, b, pt):
    assert polys.evaluate(polys.mul(a, b), pt) == polys.evaluate(a, pt) * polys.evaluate(b, pt)
    assert polys.evaluate(polys.sub(a, b), pt) == polys.evaluate(a, pt) - polys.evaluate(b, pt)


def test_inexact_division_raises():
    x = {(1, 0): 1}
    with pytest.raises(ArithmeticError):
        polys.exact_div({(0, 1): 1}, x)
