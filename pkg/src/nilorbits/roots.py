"""The exceptional root systems with positive roots in GAP order.

Simple roots are numbered as in GAP.  For E6, E7, E8 and G2 this agrees with
Bourbaki; for F4 the GAP simple roots are Bourbaki's a4, a1, a3, a2.  The
``gap_from_display`` permutation translates between the two.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property
from typing import Sequence

KINDS = ("G2", "F4", "E6", "E7", "E8")

# Symmetric bilinear form on simple roots (GAP numbering), scaled so that
# short roots have squared length 2.
def _gram(kind: str) -> list[list[int]]:
    if kind == "G2":
        return [[2, -3], [-3, 6]]
    if kind == "F4":
        # GAP nodes: 1=b4 (short), 2=b1, 3=b3 (short), 4=b2
        g = [[0] * 4 for _ in range(4)]
        for i, n in enumerate((2, 4, 2, 4)):
            g[i][i] = n
        for i, j, v in ((1, 3, -2), (3, 2, -2), (2, 0, -1)):
            g[i][j] = g[j][i] = v
        return g
    n = int(kind[1])
    edges = [(0, 2), (2, 3), (3, 4), (1, 3)] + [(k, k + 1) for k in range(4, n - 1)]
    g = [[0] * n for _ in range(n)]
    for i in range(n):
        g[i][i] = 2
    for i, j in edges:
        g[i][j] = g[j][i] = -1
    return g


# GAP simple root k (1-based) is display (Bourbaki) simple root
# GAP_FROM_DISPLAY[kind][k-1].
GAP_FROM_DISPLAY = {
    "G2": (1, 2),
    "F4": (4, 1, 3, 2),
    "E6": (1, 2, 3, 4, 5, 6),
    "E7": (1, 2, 3, 4, 5, 6, 7),
    "E8": (1, 2, 3, 4, 5, 6, 7, 8),
}


def display_to_gap(v: Sequence, perm: Sequence[int]) -> tuple:
    return tuple(v[k - 1] for k in perm)


def gap_to_display(v: Sequence, perm: Sequence[int]) -> tuple:
    out = [None] * len(perm)
    for i, k in enumerate(perm):
        out[k - 1] = v[i]
    return tuple(out)


@dataclass(frozen=True)
class Root:
    coeffs: tuple[int, ...]
    index: int  # 1-based position among positive roots; negated for negative roots

    @property
    def positive(self) -> bool:
        return self.index > 0


@dataclass(frozen=True, eq=False)
class RootSystem:
    kind: str
    gram: tuple[tuple[int, ...], ...]
    cartan: tuple[tuple[int, ...], ...]
    positive_roots: tuple[tuple[int, ...], ...]
    root_index: dict = field(repr=False)

    @property
    def rank(self) -> int:
        return len(self.cartan)

    @property
    def num_positive(self) -> int:
        return len(self.positive_roots)

    def norm(self, coeffs: Sequence[int]) -> int:
        """(a, a) in the scaling where short roots have squared length 2."""
        return self.inner(coeffs, coeffs)

    def inner(self, a: Sequence[int], b: Sequence[int]) -> int:
        g = self.gram
        return sum(a[i] * g[i][j] * b[j] for i in range(len(a)) if a[i] for j in range(len(b)) if b[j])

    def pairing_coeffs(self, a: Sequence[int], b: Sequence[int]) -> int:
        """<a, b^vee> = 2 (a, b) / (b, b) for a root b."""
        return 2 * self.inner(a, b) // self.norm(b)

    def pairing(self, alpha, j: int) -> int:
        """<alpha, alpha_j^vee> for a Root or coefficient vector and 0-based simple index j."""
        c = alpha.coeffs if isinstance(alpha, Root) else alpha
        return sum(c[i] * self.cartan[i][j] for i in range(self.rank) if c[i])

    @cached_property
    def is_simply_laced(self) -> bool:
        return len({self.gram[i][i] for i in range(self.rank)}) == 1

    @cached_property
    def long_norm(self) -> int:
        return max(self.gram[i][i] for i in range(self.rank))

    def is_long(self, coeffs: Sequence[int]) -> bool:
        """True only for long roots of a system with two root lengths."""
        return not self.is_simply_laced and self.norm(coeffs) == self.long_norm

    def root(self, index: int) -> Root:
        """Root from a signed 1-based index."""
        c = self.positive_roots[abs(index) - 1]
        return Root(c if index > 0 else tuple(-x for x in c), index)

    def index_of(self, coeffs: Sequence[int]) -> int:
        """Signed 1-based index; 0 when coeffs is not a root."""
        c = tuple(coeffs)
        k = self.root_index.get(c)
        if k is not None:
            return k
        k = self.root_index.get(tuple(-x for x in c))
        return -k if k is not None else 0

    def is_root(self, coeffs: Sequence[int]) -> bool:
        return self.index_of(coeffs) != 0

    @property
    def highest_root(self) -> tuple[int, ...]:
        return self.positive_roots[-1]

    def coroot_coords(self, coeffs: Sequence[int]) -> tuple[Fraction, ...]:
        """beta^vee = sum_i c_i alpha_i^vee; integral for roots."""
        n = self.norm(coeffs)
        return tuple(Fraction(c * self.gram[i][i], n) for i, c in enumerate(coeffs))

    def display_roots(self) -> list[tuple[int, ...]]:
        perm = GAP_FROM_DISPLAY[self.kind]
        return [gap_to_display(r, perm) for r in self.positive_roots]

    def dominant_labels(self, h_coords: Sequence) -> tuple:
        """Labels (alpha_1(h), ..., alpha_l(h)) of the dominant Weyl translate of h.

        h = sum a_j h_j is given by its coordinates a.  Applies simple
        reflections while some label is negative; terminates because the
        Weyl group is finite.
        """
        l = self.rank
        lab = [sum(self.cartan[i][j] * h_coords[j] for j in range(l)) for i in range(l)]
        while True:
            i = next((k for k in range(l) if lab[k] < 0), None)
            if i is None:
                break
            # s_i(h) = h - alpha_i(h) alpha_i^vee; alpha_k(alpha_i^vee) = C[k][i]
            c = lab[i]
            lab = [lab[k] - c * self.cartan[k][i] for k in range(l)]
        return tuple(lab)


# Order in which simple roots are tried when extending a root by one step.
# GAP extends F4 roots in Bourbaki index order, not in its own numbering.
_EXTENSION_ORDER = {"F4": (1, 3, 2, 0)}


def _generate(cartan, l: int, order: Sequence[int]) -> list[tuple[int, ...]]:
    """Positive roots height by height: for each root of the previous height
    (in list order) and each simple root (in ``order``), append root + alpha_i
    when it is a root not yet listed."""
    simple = [tuple(int(i == j) for j in range(l)) for i in range(l)]
    roots = list(simple)
    known = set(roots)
    level = list(simple)
    while level:
        nxt = []
        for r in level:
            for i in order:
                new = tuple(x + (k == i) for k, x in enumerate(r))
                if new in known:
                    continue
                # alpha_i-string through r: p = how far we can go down
                p = 0
                down = list(r)
                while True:
                    down[i] -= 1
                    if tuple(down) in known:
                        p += 1
                    else:
                        break
                q = p - sum(r[k] * cartan[k][i] for k in range(l))
                if q > 0:
                    known.add(new)
                    nxt.append(new)
        roots.extend(nxt)
        level = nxt
    return roots


_CACHE: dict[str, RootSystem] = {}


def build(kind: str) -> RootSystem:
    """Root system of an exceptional type, positive roots in GAP order."""
    if kind not in KINDS:
        raise ValueError(f"unknown exceptional type {kind!r}; expected one of {KINDS}")
    if kind in _CACHE:
        return _CACHE[kind]
    g = _gram(kind)
    l = len(g)
    cartan = tuple(tuple(2 * g[i][j] // g[j][j] for j in range(l)) for i in range(l))
    pos = _generate(cartan, l, _EXTENSION_ORDER.get(kind, range(l)))
    rs = RootSystem(
        kind=kind,
        gram=tuple(tuple(r) for r in g),
        cartan=cartan,
        positive_roots=tuple(pos),
        root_index={r: k + 1 for k, r in enumerate(pos)},
    )
    _CACHE[kind] = rs
    return rs
