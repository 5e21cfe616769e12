"""Exact linear algebra over Q, over prime fields, and over Q(T_1, ..., T_m).

Matrices are dense.  Rational matrices are cleared of denominators row by row
and then reduced with fraction-free (Bareiss) elimination over the integers,
which keeps every intermediate entry a minor of the input.  Matrices whose
entries are linear forms in indeterminates are handled either by
specialisation (:func:`evaluate`, :func:`generic_rank_lower_bound`) or by
fraction-free elimination over a polynomial ring (:func:`symbolic_rank`).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Mapping, Sequence

import gmpy2

from nilorbits import polys
from nilorbits.polys import PolynomialBudgetExceeded

Rational = Fraction

__all__ = [
    "Rational",
    "RatMatrix",
    "LinForm",
    "LinMatrix",
    "PolynomialBudgetExceeded",
    "rank",
    "rank_mod_p",
    "solve",
    "kernel",
    "rref",
    "evaluate",
    "generic_rank_lower_bound",
    "symbolic_rank",
    "random_prime",
    "mat_vec",
]


@dataclass(frozen=True)
class RatMatrix:
    rows: int
    cols: int
    entries: tuple[tuple[Fraction, ...], ...]

    def __post_init__(self):
        if len(self.entries) != self.rows or any(len(r) != self.cols for r in self.entries):
            raise ValueError("entries do not match the declared shape")

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence], cols: int | None = None) -> "RatMatrix":
        entries = tuple(tuple(Fraction(x) for x in r) for r in rows)
        if cols is None:
            cols = len(entries[0]) if entries else 0
        return cls(len(entries), cols, entries)

    @classmethod
    def zeros(cls, rows: int, cols: int) -> "RatMatrix":
        return cls(rows, cols, tuple((Fraction(0),) * cols for _ in range(rows)))

    @classmethod
    def identity(cls, n: int) -> "RatMatrix":
        return cls.from_rows([[int(i == j) for j in range(n)] for i in range(n)], n)

    def __getitem__(self, ij):
        i, j = ij
        return self.entries[i][j]

    def tolist(self) -> list[list[Fraction]]:
        return [list(r) for r in self.entries]


def _shape(M) -> tuple[list[Sequence], int]:
    if isinstance(M, RatMatrix):
        return list(M.entries), M.cols
    rows = list(M)
    return rows, (len(rows[0]) if rows else 0)


def _integer_row(row: Iterable) -> list[int]:
    row = list(row)
    den = 1
    for x in row:
        if isinstance(x, Fraction) and x.denominator != 1:
            den = den * x.denominator // math.gcd(den, x.denominator)
    if den == 1:
        return [int(x) for x in row]
    return [int(x * den) for x in row]


def _bareiss_rank(rows: list[list[int]], ncols: int) -> int:
    rows = [r for r in rows if any(r)]
    prev = 1
    r = 0
    nrows = len(rows)
    for c in range(ncols):
        if r == nrows:
            break
        piv = None
        for i in range(r, nrows):
            if rows[i][c]:
                if piv is None or abs(rows[i][c]) < abs(rows[piv][c]):
                    piv = i
        if piv is None:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        prow = rows[r]
        p = prow[c]
        for i in range(r + 1, nrows):
            row = rows[i]
            a = row[c]
            if a:
                rows[i] = [(p * x - a * y) // prev for x, y in zip(row, prow)]
            elif p != prev:
                rows[i] = [p * x // prev for x in row]
        prev = p
        r += 1
    return r


def rank(M) -> int:
    """Rank over Q of a rational matrix (RatMatrix or nested sequences)."""
    rows, ncols = _shape(M)
    return _bareiss_rank([_integer_row(r) for r in rows], ncols)


def rref(M) -> tuple[list[list[Fraction]], list[int]]:
    """Reduced row echelon form over Q; returns (nonzero rows, pivot columns)."""
    rows, ncols = _shape(M)
    irows, pivots, den = _ff_gauss_jordan([_integer_row(r) for r in rows], ncols)
    return [[Fraction(x, den) for x in row] for row in irows], pivots


def _ff_gauss_jordan(rows: list[list[int]], ncols: int):
    """Fraction-free Gauss-Jordan.

    Returns (rows, pivots, d) where rows[k] has the common value d at column
    pivots[k] and zeros at the other pivot columns; rows / d is the RREF.
    """
    rows = [r for r in rows if any(r)]
    prev = 1
    r = 0
    pivots: list[int] = []
    nrows = len(rows)
    for c in range(ncols):
        if r == nrows:
            break
        piv = None
        for i in range(r, nrows):
            if rows[i][c]:
                if piv is None or abs(rows[i][c]) < abs(rows[piv][c]):
                    piv = i
        if piv is None:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        prow = rows[r]
        p = prow[c]
        for i in range(nrows):
            if i == r:
                continue
            row = rows[i]
            a = row[c]
            if a:
                rows[i] = [(p * x - a * y) // prev for x, y in zip(row, prow)]
            elif p != prev:
                rows[i] = [p * x // prev for x in row]
        pivots.append(c)
        prev = p
        r += 1
    return rows[:r], pivots, prev


def kernel(M) -> list[tuple[Fraction, ...]]:
    """Basis of the right null space.

    The basis is the one read off the reduced echelon form: vector k has a 1
    in the k-th free column and 0 in every other free column, so coordinates
    of any kernel element are its entries at the free columns.
    """
    rows, ncols = _shape(M)
    irows, pivots, den = _ff_gauss_jordan([_integer_row(r) for r in rows], ncols)
    pivset = set(pivots)
    basis = []
    for f in range(ncols):
        if f in pivset:
            continue
        v = [Fraction(0)] * ncols
        v[f] = Fraction(1)
        for row, pc in zip(irows, pivots):
            if row[f]:
                v[pc] = Fraction(-row[f], den)
        basis.append(tuple(v))
    return basis


def solve(M, b: Sequence) -> tuple[tuple[Fraction, ...], list[tuple[Fraction, ...]]] | None:
    """Solve M x = b over Q.

    Returns None when the system is inconsistent, otherwise a particular
    solution (free variables set to zero) and a kernel basis of M.
    """
    rows, ncols = _shape(M)
    if len(rows) != len(b):
        raise ValueError("right-hand side length does not match the row count")
    aug = [_integer_row(list(r) + [bi]) for r, bi in zip(rows, b)]
    irows, pivots, den = _ff_gauss_jordan(aug, ncols + 1)
    if pivots and pivots[-1] == ncols:
        return None
    x = [Fraction(0)] * ncols
    for row, pc in zip(irows, pivots):
        x[pc] = Fraction(row[ncols], den)
    basis = []
    pivset = set(pivots)
    for f in range(ncols):
        if f in pivset:
            continue
        v = [Fraction(0)] * ncols
        v[f] = Fraction(1)
        for row, pc in zip(irows, pivots):
            if row[f]:
                v[pc] = Fraction(-row[f], den)
        basis.append(tuple(v))
    return tuple(x), basis


def mat_vec(M, v: Sequence) -> list[Fraction]:
    rows, _ = _shape(M)
    return [sum((a * x for a, x in zip(r, v) if a and x), Fraction(0)) for r in rows]


# -- prime fields -----------------------------------------------------------

def random_prime(rng, bits: int = 62) -> int:
    """A random prime in [2^(bits-1), 2^bits)."""
    while True:
        p = int(gmpy2.next_prime(rng.randrange(1 << (bits - 1), 1 << bits)))
        if p < 1 << bits:
            return p


def _reduce_mod(x, p: int) -> int:
    if isinstance(x, Fraction):
        if x.denominator % p == 0:
            raise ZeroDivisionError(f"denominator divisible by {p}")
        return x.numerator * pow(x.denominator, -1, p) % p
    return int(x) % p


def rank_mod_p(M, p: int) -> int:
    """Rank over F_p of a rational matrix whose denominators are prime to p.

    Never exceeds the rank over Q, so any value found here is a certified
    lower bound for the rational rank.
    """
    src, ncols = _shape(M)
    rows = []
    for r in src:
        row = [_reduce_mod(x, p) for x in r]
        if any(row):
            rows.append(row)
    return _rank_mod_p_rows(rows, ncols, p)


def _rank_mod_p_rows(rows: list[list[int]], ncols: int, p: int) -> int:
    r = 0
    nrows = len(rows)
    for c in range(ncols):
        if r == nrows:
            break
        piv = None
        for i in range(r, nrows):
            if rows[i][c]:
                piv = i
                break
        if piv is None:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        inv = pow(rows[r][c], -1, p)
        prow = [x * inv % p for x in rows[r][c:]]
        for i in range(r + 1, nrows):
            row = rows[i]
            a = row[c]
            if a:
                row[c:] = [(x - a * y) % p for x, y in zip(row[c:], prow)]
        r += 1
    return r


# -- linear forms -----------------------------------------------------------

@dataclass(frozen=True)
class LinForm:
    """constant + sum coeffs[k] * T_k with no zero coefficients stored."""

    constant: Fraction = Fraction(0)
    coeffs: tuple[tuple[int, Fraction], ...] = ()

    @classmethod
    def make(cls, constant=0, coeffs: Mapping[int, object] | None = None) -> "LinForm":
        items = tuple(sorted((k, Fraction(v)) for k, v in (coeffs or {}).items() if v))
        return cls(Fraction(constant), items)

    @classmethod
    def var(cls, k: int) -> "LinForm":
        return cls(Fraction(0), ((k, Fraction(1)),))

    def __add__(self, other: "LinForm") -> "LinForm":
        d = dict(self.coeffs)
        for k, v in other.coeffs:
            d[k] = d.get(k, 0) + v
        return LinForm.make(self.constant + other.constant, d)

    def scale(self, c) -> "LinForm":
        c = Fraction(c)
        if not c:
            return LinForm()
        return LinForm(self.constant * c, tuple((k, v * c) for k, v in self.coeffs))

    def is_zero(self) -> bool:
        return not self.constant and not self.coeffs

    def max_index(self) -> int:
        return self.coeffs[-1][0] if self.coeffs else -1

    def __call__(self, point: Sequence) -> Fraction:
        return self.constant + sum((v * point[k] for k, v in self.coeffs), Fraction(0))


@dataclass(frozen=True)
class LinMatrix:
    rows: int
    cols: int
    entries: tuple[tuple[LinForm, ...], ...]
    num_indeterminates: int

    def __post_init__(self):
        if len(self.entries) != self.rows or any(len(r) != self.cols for r in self.entries):
            raise ValueError("entries do not match the declared shape")
        for r in self.entries:
            for f in r:
                if f.max_index() >= self.num_indeterminates:
                    raise ValueError("linear form uses an undeclared indeterminate")

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence], num_indeterminates: int) -> "LinMatrix":
        entries = tuple(
            tuple(f if isinstance(f, LinForm) else LinForm.make(f) for f in r) for r in rows
        )
        cols = len(entries[0]) if entries else 0
        return cls(len(entries), cols, entries, num_indeterminates)


def evaluate(L: LinMatrix, point: Sequence) -> RatMatrix:
    """Substitute T_k = point[k] entrywise."""
    if len(point) != L.num_indeterminates:
        raise ValueError(
            f"point has {len(point)} coordinates, expected {L.num_indeterminates}"
        )
    pt = [Fraction(x) for x in point]
    return RatMatrix(L.rows, L.cols, tuple(tuple(f(pt) for f in r) for r in L.entries))


def generic_rank_lower_bound(L: LinMatrix, trials: int, sample_set: Sequence[int], rng,
                             modulus: int | None = None) -> int:
    """Best rank seen over random specialisations.

    Specialisation can only lower the rank, so the result is a certified lower
    bound for the rank over Q(T).  With ``modulus`` the ranks are taken over
    F_p, which is again only ever lower.
    """
    if trials < 1:
        raise ValueError("trials must be positive")
    sample_set = list(sample_set)
    if not sample_set:
        raise ValueError("sample set is empty")
    best = 0
    cap = min(L.rows, L.cols)
    for _ in range(trials):
        pt = [rng.choice(sample_set) for _ in range(L.num_indeterminates)]
        M = evaluate(L, pt)
        best = max(best, rank(M) if modulus is None else rank_mod_p(M, modulus))
        if best == cap:
            break
    return best


DEFAULT_TERM_BUDGET = 20000


def _linform_poly(f: LinForm, scale: int, m: int) -> polys.Poly:
    out: polys.Poly = {}
    if f.constant:
        out[(0,) * m] = int(f.constant * scale)
    for k, v in f.coeffs:
        e = [0] * m
        e[k] = 1
        out[tuple(e)] = int(v * scale)
    return out


def symbolic_rank(L: LinMatrix, budget: int = DEFAULT_TERM_BUDGET) -> int:
    """Rank over the rational function field Q(T_1, ..., T_m).

    Fraction-free elimination with full pivoting (smallest pivot first).
    Raises PolynomialBudgetExceeded when an intermediate entry would exceed
    ``budget`` terms.
    """
    m = L.num_indeterminates
    A = []
    for r in L.entries:
        den = 1
        for f in r:
            for v in [f.constant] + [c for _, c in f.coeffs]:
                den = den * v.denominator // math.gcd(den, v.denominator)
        row = [_linform_poly(f, den, m) for f in r]
        if any(row):
            A.append(row)
    n, ncols = len(A), L.cols
    cols = list(range(ncols))
    prev = polys.const(1, m)
    rk = 0
    for k in range(min(n, ncols)):
        best = None
        for i in range(k, n):
            for jj in range(k, ncols):
                e = A[i][cols[jj]]
                if e and (best is None or len(e) < best[0]):
                    best = (len(e), i, jj)
        if best is None:
            break
        _, i, jj = best
        A[k], A[i] = A[i], A[k]
        cols[k], cols[jj] = cols[jj], cols[k]
        pk = A[k][cols[k]]
        for i in range(k + 1, n):
            aik = A[i][cols[k]]
            row = A[i]
            for jj in range(k + 1, ncols):
                j = cols[jj]
                t = polys.mul(pk, row[j], budget)
                if aik and A[k][j]:
                    t = polys.sub(t, polys.mul(aik, A[k][j], budget))
                row[j] = polys.exact_div(t, prev, budget) if t else {}
                if len(row[j]) > budget:
                    raise PolynomialBudgetExceeded(f"entry exceeds {budget} terms")
            row[cols[k]] = {}
        prev = pk
        rk += 1
    return rk
