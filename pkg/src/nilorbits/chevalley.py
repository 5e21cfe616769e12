"""Simple Lie algebras in a Chevalley basis with exact structure constants.

Basis order: x_1..x_N (positive roots in GAP order), y_1..y_N (the opposite
root vectors), h_1..h_l (simple coroots).  With N = number of positive roots,
basis index k < N is x_{k+1}, N <= k < 2N is y_{k-N+1}, and 2N + i is h_{i+1}.

Signs follow the extraspecial-pair convention: N_{a,b} = +(p+1) for every
extraspecial pair (a, b), and all other constants are forced by the
relations in Carter, "Simple groups of Lie type", Thm 4.1.2.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Mapping, Sequence

from nilorbits.linalg import RatMatrix
from nilorbits.roots import RootSystem, build as build_roots


def _structure_constants(rs: RootSystem) -> dict[tuple[tuple, tuple], int]:
    """N_{a,b} for all pairs of roots (as coefficient tuples) with a + b a root."""
    pos = rs.positive_roots
    order = {r: k for k, r in enumerate(pos)}
    neg = lambda r: tuple(-x for x in r)
    plus = lambda a, b: tuple(x + y for x, y in zip(a, b))

    def p_of(a, b):
        p = 0
        c = b
        while True:
            c = tuple(y - x for x, y in zip(a, c))
            if not rs.is_root(c):
                return p
            p += 1

    Npos: dict[tuple, Fraction] = {}

    def N(a, b) -> Fraction:
        """Structure constant for any roots with a + b a root."""
        a_pos = order.get(a) is not None
        b_pos = order.get(b) is not None
        if a_pos and b_pos:
            return Npos[(a, b)]
        if not a_pos and not b_pos:
            return -Npos[(neg(a), neg(b))]
        if not a_pos:
            # N_{a,b} = -N_{b,a}
            return -N(b, a)
        # a positive, b negative; write b = -bb
        bb = neg(b)
        c = plus(a, b)
        if c in order:
            # c = a - bb > 0 so bb + c = a; (a, -bb, -c) sums to zero
            return Fraction(rs.norm(c), rs.norm(a)) * -Npos[(bb, c)]
        cc = neg(c)
        # cc = bb - a > 0 so cc + a = bb; (a, -bb, cc) sums to zero
        return Fraction(rs.norm(cc), rs.norm(bb)) * Npos[(cc, a)]

    by_height: dict[int, list] = {}
    for r in pos:
        by_height.setdefault(sum(r), []).append(r)
    for ht in sorted(by_height):
        if ht == 1:
            continue
        for xi in by_height[ht]:
            pairs = []
            for a in pos:
                if sum(a) >= ht:
                    break
                b = tuple(x - y for x, y in zip(xi, a))
                if b in order and order[a] < order[b]:
                    pairs.append((a, b))
            r1, s1 = pairs[0]
            p1 = p_of(r1, s1)
            Npos[(r1, s1)] = Fraction(p1 + 1)
            Npos[(s1, r1)] = -Fraction(p1 + 1)
            for r, s in pairs[1:]:
                total = Fraction(0)
                d = tuple(x - y for x, y in zip(s, r1))
                if rs.is_root(d):
                    total += N(s, neg(r1)) * N(r, neg(s1)) / rs.norm(d)
                d = tuple(x - y for x, y in zip(r, r1))
                if rs.is_root(d):
                    total += N(neg(r1), r) * N(s, neg(s1)) / rs.norm(d)
                val = Fraction(rs.norm(xi), p1 + 1) * total
                Npos[(r, s)] = val
                Npos[(s, r)] = -val

    out: dict[tuple[tuple, tuple], int] = {}
    allroots = list(pos) + [neg(r) for r in pos]
    for a in allroots:
        for b in allroots:
            c = plus(a, b)
            if rs.is_root(c):
                v = N(a, b)
                if v.denominator != 1:
                    raise ArithmeticError(f"non-integral structure constant for {a}, {b}")
                out[(a, b)] = int(v)
    return out


@dataclass(eq=False)
class LieAlgebra:
    rs: RootSystem
    dim: int
    table: list = field(repr=False)  # table[a][b] = tuple of (k, c) with [b_a, b_b] = sum c b_k
    root_of: list = field(repr=False)  # basis index -> root coefficient tuple, None for Cartan
    N: dict = field(repr=False)

    @property
    def rank(self) -> int:
        return self.rs.rank

    @property
    def num_positive(self) -> int:
        return self.rs.num_positive

    def x(self, k: int) -> int:
        """Basis index of x_k for a 1-based positive-root index."""
        return k - 1

    def y(self, k: int) -> int:
        return self.num_positive + k - 1

    def h(self, i: int) -> int:
        """Basis index of h_i, 1-based."""
        return 2 * self.num_positive + i - 1

    def root_vector(self, signed_index: int) -> int:
        return self.x(signed_index) if signed_index > 0 else self.y(-signed_index)

    def is_cartan(self, k: int) -> bool:
        return k >= 2 * self.num_positive

    def basis_name(self, k: int) -> str:
        n = self.num_positive
        if k < n:
            return f"x{k + 1}"
        if k < 2 * n:
            return f"y{k - n + 1}"
        return f"h{k - 2 * n + 1}"

    def element(self, coeffs: Mapping[int, object]) -> "LieElement":
        return LieElement(self, {k: Fraction(v) for k, v in coeffs.items() if v})

    def basis_element(self, k: int) -> "LieElement":
        return LieElement(self, {k: Fraction(1)})

    def zero(self) -> "LieElement":
        return LieElement(self, {})

    def cartan_element(self, a: Sequence) -> "LieElement":
        """h = sum_j a_j h_j."""
        return self.element({self.h(j + 1): v for j, v in enumerate(a)})

    def bracket_vec(self, u: Mapping[int, object], v: Mapping[int, object]) -> dict:
        """Bracket of coefficient dicts; values may be int or Fraction."""
        out: dict = {}
        table = self.table
        for a, ca in u.items():
            row = table[a]
            for b, cb in v.items():
                cab = ca * cb
                for k, c in row[b]:
                    out[k] = out.get(k, 0) + cab * c
        return {k: c for k, c in out.items() if c}

    def bracket(self, a: "LieElement", b: "LieElement") -> "LieElement":
        if a.algebra is not self or b.algebra is not self:
            raise ValueError("elements belong to a different Lie algebra")
        return LieElement(self, self.bracket_vec(a.coeffs, b.coeffs))

    def ad_columns(self, u: Mapping[int, object], cols: Iterable[int]) -> list[dict]:
        return [self.bracket_vec(u, {j: 1}) for j in cols]

    def ad_matrix(self, a: "LieElement") -> RatMatrix:
        """Matrix of bracket(a, .) in the fixed basis."""
        n = self.dim
        M = [[Fraction(0)] * n for _ in range(n)]
        for j in range(n):
            for k, c in self.bracket_vec(a.coeffs, {j: 1}).items():
                M[k][j] = Fraction(c)
        return RatMatrix.from_rows(M, n)

    def eigenvalue(self, k: int, labels: Sequence) -> object:
        """ad h eigenvalue of basis vector k, for h with alpha_i(h) = labels[i]."""
        r = self.root_of[k]
        if r is None:
            return 0
        return sum(c * d for c, d in zip(r, labels))

    def labels_of(self, h: "LieElement") -> tuple:
        """(alpha_1(h), ..., alpha_l(h)) for h in the Cartan subalgebra."""
        l = self.rank
        a = [h.coeffs.get(self.h(j + 1), 0) for j in range(l)]
        if any(k < 2 * self.num_positive for k in h.coeffs):
            raise ValueError("element is not in the Cartan subalgebra")
        return tuple(sum(self.rs.cartan[i][j] * a[j] for j in range(l)) for i in range(l))

    def grade(self, h: "LieElement") -> "Grading":
        labels = self.labels_of(h)
        comps: dict[int, list[int]] = {}
        for k in range(self.dim):
            ev = Fraction(self.eigenvalue(k, labels))
            if ev.denominator != 1:
                raise ValueError(f"ad h has non-integral eigenvalue {ev}")
            comps.setdefault(int(ev), []).append(k)
        return Grading(h, comps)


@dataclass(frozen=True, eq=False)
class LieElement:
    algebra: LieAlgebra
    coeffs: dict

    def __add__(self, other: "LieElement") -> "LieElement":
        out = dict(self.coeffs)
        for k, v in other.coeffs.items():
            out[k] = out.get(k, 0) + v
        return LieElement(self.algebra, {k: v for k, v in out.items() if v})

    def __sub__(self, other: "LieElement") -> "LieElement":
        return self + other.scale(-1)

    def __neg__(self) -> "LieElement":
        return self.scale(-1)

    def scale(self, c) -> "LieElement":
        c = Fraction(c)
        return LieElement(self.algebra, {k: v * c for k, v in self.coeffs.items()} if c else {})

    __rmul__ = scale

    def __eq__(self, other) -> bool:
        return isinstance(other, LieElement) and self.algebra is other.algebra and self.coeffs == other.coeffs

    def __hash__(self):
        return hash(tuple(sorted(self.coeffs.items())))

    def is_zero(self) -> bool:
        return not self.coeffs

    def vector(self) -> list[Fraction]:
        v = [Fraction(0)] * self.algebra.dim
        for k, c in self.coeffs.items():
            v[k] = Fraction(c)
        return v

    def __repr__(self) -> str:
        if not self.coeffs:
            return "0"
        parts = []
        for k in sorted(self.coeffs):
            c = self.coeffs[k]
            name = self.algebra.basis_name(k)
            parts.append(name if c == 1 else f"({c})*{name}")
        return " + ".join(parts)


@dataclass(frozen=True)
class Grading:
    h: LieElement
    components: dict

    def __getitem__(self, k: int) -> list[int]:
        return self.components.get(k, [])

    def degree_of(self, k: int) -> int:
        for d, idx in self.components.items():
            if k in idx:
                return d
        raise KeyError(k)


_ALGEBRAS: dict[str, LieAlgebra] = {}


def build_algebra(rs: RootSystem | str) -> LieAlgebra:
    """Chevalley basis Lie algebra of an exceptional root system (cached per type)."""
    if isinstance(rs, str):
        rs = build_roots(rs)
    if rs.kind in _ALGEBRAS:
        return _ALGEBRAS[rs.kind]
    Nc = _structure_constants(rs)
    n = rs.num_positive
    l = rs.rank
    dim = 2 * n + l
    pos = rs.positive_roots
    root_of: list = list(pos) + [tuple(-x for x in r) for r in pos] + [None] * l
    index_of_root = {r: k for k, r in enumerate(root_of) if r is not None}
    coroot = [tuple(int(c) for c in rs.coroot_coords(r)) for r in pos]
    table = [[() for _ in range(dim)] for _ in range(dim)]
    for a in range(dim):
        ra = root_of[a]
        for b in range(dim):
            rb = root_of[b]
            if ra is None and rb is None:
                continue
            if ra is None:
                i = a - 2 * n
                c = rs.pairing(rb, i)
                table[a][b] = ((b, c),) if c else ()
            elif rb is None:
                i = b - 2 * n
                c = rs.pairing(ra, i)
                table[a][b] = ((a, -c),) if c else ()
            else:
                s = tuple(x + y for x, y in zip(ra, rb))
                if not any(s):
                    sign = 1 if a < n else -1
                    cr = coroot[a if a < n else a - n]
                    table[a][b] = tuple((2 * n + i, sign * c) for i, c in enumerate(cr) if c)
                elif s in index_of_root:
                    table[a][b] = ((index_of_root[s], Nc[(ra, rb)]),)
    L = LieAlgebra(rs=rs, dim=dim, table=table, root_of=root_of, N=Nc)
    _ALGEBRAS[rs.kind] = L
    return L
