"""Nilpotent orbit representatives from weighted Dynkin diagrams.

The diagram fixes a unique h in the Cartan subalgebra (``h_from_diagram``).
The diagram belongs to a nilpotent orbit exactly when some x in g(2) has
h in [x, g(-2)], and then almost every x in g(2) does, so a few random trials
decide validity with high probability and a success is a constructive
certificate (f, h, e).
"""

from __future__ import annotations

import logging
import random
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from itertools import product
from typing import Sequence

from nilorbits import linalg
from nilorbits.chevalley import LieAlgebra, LieElement, build_algebra
from nilorbits.linalg import LinForm, LinMatrix
from nilorbits.roots import GAP_FROM_DISPLAY, RootSystem, display_to_gap, gap_to_display

log = logging.getLogger(__name__)

# Diagram labels print in a different node order from the root tables for G2
# (Table 1 draws the long node first).
DIAGRAM_GAP_FROM_DISPLAY = dict(GAP_FROM_DISPLAY, G2=(2, 1))


class InvalidDiagramError(ValueError):
    """The trial budget ran out without finding h in [x, g(-2)]."""

    def __init__(self, diagram, trials: int, g2_dim: int, message: str | None = None):
        self.diagram = diagram
        self.trials = trials
        self.g2_dim = g2_dim
        super().__init__(
            message or f"diagram {diagram} is probably not the diagram of a nilpotent orbit: "
            f"{trials} random elements of g(2) (dim {g2_dim}) all failed"
        )


class NotCompletableError(ValueError):
    pass


@dataclass(frozen=True, order=True)
class WeightedDiagram:
    labels: tuple[int, ...]  # GAP simple-root order

    def __post_init__(self):
        if any(v not in (0, 1, 2) for v in self.labels):
            raise ValueError(f"diagram labels must be 0, 1 or 2, got {self.labels}")

    @classmethod
    def from_display(cls, kind: str, labels: Sequence[int]) -> "WeightedDiagram":
        return cls(tuple(int(v) for v in display_to_gap(labels, DIAGRAM_GAP_FROM_DISPLAY[kind])))

    def display(self, kind: str) -> tuple[int, ...]:
        return gap_to_display(self.labels, DIAGRAM_GAP_FROM_DISPLAY[kind])

    def is_zero(self) -> bool:
        return not any(self.labels)

    def __str__(self) -> str:
        return " ".join(map(str, self.labels))


@dataclass(frozen=True)
class Sl2Triple:
    f: LieElement
    h: LieElement
    e: LieElement

    def check(self) -> bool:
        L = self.e.algebra
        return (
            L.bracket(self.e, self.f) == self.h
            and L.bracket(self.h, self.e) == self.e.scale(2)
            and L.bracket(self.h, self.f) == self.f.scale(-2)
        )


@dataclass
class OrbitConfig:
    omega_bound: int = 50
    trials: int = 25
    nicify: bool = True
    exact_mode: bool = False
    symbolic_budget: int = linalg.DEFAULT_TERM_BUDGET

    @property
    def omega(self) -> list[int]:
        b = self.omega_bound
        return [v for v in range(-b, b + 1) if v]


# -- h and the grading ------------------------------------------------------

def h_from_diagram(L: LieAlgebra, D: WeightedDiagram) -> LieElement:
    """The unique h = sum a_j h_j with alpha_i(h) = D_i."""
    sol = linalg.solve(L.rs.cartan, D.labels)
    if sol is None:  # pragma: no cover - Cartan matrices are invertible
        raise ArithmeticError("singular Cartan matrix")
    return L.cartan_element(sol[0])


@dataclass
class _Graded:
    """g(-2), g(0), g(2) for one diagram, with the bracket data the trials need."""

    L: LieAlgebra
    D: WeightedDiagram
    h: LieElement
    g2: list[int]
    gm2: list[int]
    g0: list[int]
    # pieces[i] = list of (row, col, c): [x_{g2[i]}, y_{gm2[col]}] has c at g0[row]
    pieces: list = field(repr=False)
    hvec: list = field(repr=False)

    def matrix(self, mu: Sequence) -> list[list]:
        M = [[0] * len(self.gm2) for _ in self.g0]
        for m, piece in zip(mu, self.pieces):
            if m:
                for r, c, v in piece:
                    M[r][c] += m * v
        return M

    def linmatrix(self) -> LinMatrix:
        """[x, .] : g(-2) -> g(0) for generic x = sum T_i x_i, entries linear in T."""
        acc = [[{} for _ in self.gm2] for _ in self.g0]
        for i, piece in enumerate(self.pieces):
            for r, c, v in piece:
                acc[r][c][i] = acc[r][c].get(i, 0) + v
        return LinMatrix.from_rows([[LinForm.make(0, d) for d in row] for row in acc], len(self.g2))


@lru_cache(maxsize=512)
def _graded(kind: str, labels: tuple[int, ...]) -> _Graded:
    L = build_algebra(kind)
    D = WeightedDiagram(labels)
    h = h_from_diagram(L, D)
    g2, gm2, g0 = [], [], []
    for k in range(L.dim):
        ev = L.eigenvalue(k, labels)
        if ev == 2:
            g2.append(k)
        elif ev == -2:
            gm2.append(k)
        elif ev == 0:
            g0.append(k)
    row_of = {k: r for r, k in enumerate(g0)}
    pieces = []
    for a in g2:
        piece = []
        for col, b in enumerate(gm2):
            for k, c in L.table[a][b]:
                piece.append((row_of[k], col, c))
        pieces.append(piece)
    hvec = [h.coeffs.get(k, Fraction(0)) for k in g0]
    return _Graded(L, D, h, g2, gm2, g0, pieces, hvec)


def graded_pieces(L: LieAlgebra, D: WeightedDiagram) -> _Graded:
    return _graded(L.rs.kind, D.labels)


# -- Lemma-1 test -----------------------------------------------------------

def _coords_in(G: _Graded, x: LieElement) -> list:
    pos = {k: i for i, k in enumerate(G.g2)}
    mu = [0] * len(G.g2)
    for k, v in x.coeffs.items():
        if k not in pos:
            raise ValueError(f"element has a component {x.algebra.basis_name(k)} outside g(2)")
        mu[pos[k]] = v
    return mu


def _solve_for_y(G: _Graded, mu: Sequence):
    return linalg.solve(G.matrix(mu), G.hvec)


def _member(G: _Graded, mu: Sequence) -> bool:
    if not any(G.hvec):
        return True
    if not any(mu):
        return False
    return _solve_for_y(G, mu) is not None


def in_bracket_image(L: LieAlgebra, h: LieElement, x: LieElement) -> LieElement | None:
    """y in g(-2) with [x, y] = h, or None when h is not in [x, g(-2)]."""
    D = WeightedDiagram(tuple(int(v) for v in L.labels_of(h)))
    G = graded_pieces(L, D)
    mu = _coords_in(G, x)
    if not any(mu):
        return None if any(G.hvec) else L.zero()
    sol = _solve_for_y(G, mu)
    if sol is None:
        return None
    y, _ = sol
    return L.element({k: v for k, v in zip(G.gm2, y)})


def complete_sl2(L: LieAlgebra, h: LieElement, e: LieElement) -> Sl2Triple:
    """Find f in g(-2) with [e, f] = h."""
    if e.is_zero():
        raise NotCompletableError("the zero element lies in no sl2-triple")
    f = in_bracket_image(L, h, e)
    if f is None:
        raise NotCompletableError("h is not in [e, g(-2)]")
    t = Sl2Triple(f, h, e)
    assert t.check()
    return t


# -- representative search --------------------------------------------------

def nicify(L: LieAlgebra, h: LieElement, x: LieElement, max_value: int = 1000) -> LieElement:
    """Replace the coefficients of x one at a time by the first of 0, 1, 2, ...
    that keeps h in [x', g(-2)]."""
    D = WeightedDiagram(tuple(int(v) for v in L.labels_of(h)))
    G = graded_pieces(L, D)
    mu = list(_coords_in(G, x))
    if not _member(G, mu):
        raise ValueError("h is not in [x, g(-2)]")
    for i in range(len(mu)):
        old = mu[i]
        for v in range(max_value + 1):
            mu[i] = v
            if v == old or _member(G, mu):
                break
        else:
            mu[i] = old
    return L.element({k: v for k, v in zip(G.g2, mu) if v})


def _random_trials(G: _Graded, rng: random.Random, config: OrbitConfig):
    omega = config.omega
    for t in range(1, config.trials + 1):
        mu = [rng.choice(omega) for _ in G.g2]
        sol = _solve_for_y(G, mu)
        if sol is not None:
            return t, mu, sol[0]
    return None


def find_representative(L: LieAlgebra, D: WeightedDiagram, rng: random.Random,
                        config: OrbitConfig | None = None) -> tuple[LieElement, Sl2Triple]:
    config = config or OrbitConfig()
    G = graded_pieces(L, D)
    if not G.g2:
        raise InvalidDiagramError(D, 0, 0, f"g(2) is zero for diagram {D}; no nonzero representative")
    found = _random_trials(G, rng, config)
    if found is None:
        raise InvalidDiagramError(D, config.trials, len(G.g2))
    t, mu, _ = found
    log.debug("diagram %s: random x found after %d trial(s)", D, t)
    x = L.element({k: v for k, v in zip(G.g2, mu)})
    if config.nicify:
        x = nicify(L, G.h, x)
    return x, complete_sl2(L, G.h, x)


# -- validity of diagrams ---------------------------------------------------

def dimension_obstruction(L: LieAlgebra, D: WeightedDiagram) -> bool:
    """True when sl2 theory rules D out from the grading dimensions alone.

    For the grading of an sl2-triple, ad e maps g(k) injectively into g(k+2)
    for k <= -1, so dim g(k) >= dim g(k+2) for every k >= 0 (using
    dim g(-k) = dim g(k)).
    """
    dims: dict[int, int] = {}
    for k in range(L.dim):
        ev = L.eigenvalue(k, D.labels)
        dims[ev] = dims.get(ev, 0) + 1
    top = max(dims)
    return any(dims.get(k, 0) < dims.get(k + 2, 0) for k in range(0, top))


def generic_validity(L: LieAlgebra, D: WeightedDiagram, budget: int = linalg.DEFAULT_TERM_BUDGET) -> bool:
    """Exact test over Q(T): h lies in [x, g(-2)] for generic x in g(2).

    Equivalent to validity because the set of good x is dense when nonempty.
    Raises PolynomialBudgetExceeded for large cases.
    """
    G = graded_pieces(L, D)
    if not G.g2:
        return False
    A = G.linmatrix()
    aug = LinMatrix.from_rows(
        [list(row) + [LinForm.make(hv)] for row, hv in zip(A.entries, G.hvec)], A.num_indeterminates
    )
    return linalg.symbolic_rank(A, budget) == linalg.symbolic_rank(aug, budget)


def all_diagrams(l: int) -> list[WeightedDiagram]:
    return [WeightedDiagram(t) for t in product((0, 1, 2), repeat=l) if any(t)]


def candidate_rng(seed: int, kind: str, D: WeightedDiagram) -> random.Random:
    return random.Random(f"{seed}:{kind}:{','.join(map(str, D.labels))}")


@dataclass(frozen=True)
class OrbitData:
    diagram: WeightedDiagram
    triple: Sl2Triple  # certificate: re-checkable by bracket arithmetic
    trials_used: int

    @property
    def e(self) -> LieElement:
        return self.triple.e


def check_diagram(L: LieAlgebra, D: WeightedDiagram, rng: random.Random,
                  config: OrbitConfig | None = None, stats: dict | None = None) -> OrbitData | None:
    """Randomised validity test; a positive answer carries its triple.

    A success is a proof of validity.  In exact mode a failure of all random
    trials is confirmed by the generic test over Q(T); ``stats["exact"]`` is
    then "invalid", "valid" (more trials were run until one succeeded) or
    "budget" (symbolic budget exceeded, the random verdict stands).
    """
    config = config or OrbitConfig()
    stats = {} if stats is None else stats
    if dimension_obstruction(L, D):
        return None
    G = graded_pieces(L, D)
    if not G.g2:
        return None
    found = _random_trials(G, rng, config)
    if found is None and config.exact_mode:
        try:
            valid = generic_validity(L, D, config.symbolic_budget)
        except linalg.PolynomialBudgetExceeded:
            stats["exact"] = "budget"
            log.debug("diagram %s: symbolic budget exceeded, random verdict stands", D)
            return None
        stats["exact"] = "valid" if valid else "invalid"
        if valid:
            # the good set is dense, so more trials must succeed
            while found is None:
                found = _random_trials(G, rng, config)
    if found is None:
        return None
    t, mu, _ = found
    x = L.element({k: v for k, v in zip(G.g2, mu)})
    if config.nicify:
        x = nicify(L, G.h, x)
    return OrbitData(D, complete_sl2(L, G.h, x), t)


def enumerate_orbits(L: LieAlgebra, seed: int = 0, config: OrbitConfig | None = None) -> list[OrbitData]:
    """All nonzero diagrams that pass the validity test, sorted by labels."""
    config = config or OrbitConfig()
    out = []
    for D in all_diagrams(L.rank):
        res = check_diagram(L, D, candidate_rng(seed, L.rs.kind, D), config)
        if res is not None:
            out.append(res)
    out.sort(key=lambda o: o.diagram.labels)
    return out


def enumerate_diagrams(L: LieAlgebra, config: OrbitConfig | None = None, seed: int = 0) -> list[WeightedDiagram]:
    return [o.diagram for o in enumerate_orbits(L, seed, config)]


# -- weighted Dynkin diagram of a given element ------------------------------

def sl2_from_cartan_grading(L: LieAlgebra, e: LieElement) -> Sl2Triple:
    """An sl2-triple (f, h, e) with h in the Cartan subalgebra.

    e must be homogeneous for some Cartan grading: every root in its support
    takes the value 2 on some h0.  Solves jointly for h = sum a_j h_j and f in
    the h0-eigenspace for -2 with beta(h) = 2 on the support and [e, f] = h.
    """
    rs = L.rs
    l = rs.rank
    supp = []
    for k in e.coeffs:
        r = L.root_of[k]
        if r is None:
            raise NotCompletableError("element has a Cartan component")
        supp.append(r)
    if not supp:
        raise NotCompletableError("the zero element lies in no sl2-triple")
    # beta(h) = sum_j a_j <beta, alpha_j^vee>
    C = rs.cartan
    rows = [[sum(b[i] * C[i][j] for i in range(l)) for j in range(l)] for b in supp]
    sol = linalg.solve(rows, [2] * len(supp))
    if sol is None:
        raise NotCompletableError("not completable over the Cartan: support admits no grading")
    a0 = sol[0]
    labels0 = [sum(C[i][j] * a0[j] for j in range(l)) for i in range(l)]
    fcols = [k for k in range(L.dim) if L.eigenvalue(k, labels0) == -2]
    # unknowns: a_1..a_l, then f coefficients on fcols
    eqs: dict[object, dict[int, object]] = {}
    for col, k in enumerate(fcols):
        for kk, c in L.bracket_vec(e.coeffs, {k: 1}).items():
            eqs.setdefault(kk, {})[l + col] = eqs.setdefault(kk, {}).get(l + col, 0) + c
    for j in range(l):
        hk = L.h(j + 1)
        eqs.setdefault(hk, {})[j] = eqs.setdefault(hk, {}).get(j, 0) - 1
    nunk = l + len(fcols)
    M, rhs = [], []
    for row in eqs.values():
        M.append([row.get(u, 0) for u in range(nunk)])
        rhs.append(0)
    for r in rows:
        M.append(list(r) + [0] * len(fcols))
        rhs.append(2)
    sol = linalg.solve(M, rhs)
    if sol is None:
        raise NotCompletableError("not completable over the Cartan")
    z = sol[0]
    h = L.cartan_element(z[:l])
    labels = L.labels_of(h)
    f = L.element({k: v for k, v in zip(fcols, z[l:]) if L.eigenvalue(k, labels) == -2})
    t = Sl2Triple(f, h, e)
    if not t.check():  # pragma: no cover - guaranteed by the projection argument
        raise NotCompletableError("failed to assemble an sl2-triple")
    return t


def weighted_dynkin(L: LieAlgebra, e: LieElement) -> WeightedDiagram:
    """Weighted Dynkin diagram of e (GAP order)."""
    t = sl2_from_cartan_grading(L, e)
    a = [t.h.coeffs.get(L.h(j + 1), 0) for j in range(L.rank)]
    lab = L.rs.dominant_labels(a)
    return WeightedDiagram(tuple(int(v) for v in lab))


# -- decorated diagrams of representatives -----------------------------------

@dataclass(frozen=True)
class RepDiagram:
    nodes: tuple[tuple[int, bool], ...]  # (root index, is long)
    edges: tuple[tuple[int, int, int, bool], ...]  # (i, j, lines, dotted), i < j, lines > 0


def rep_diagram(rs: RootSystem, roots: Sequence[int]) -> RepDiagram:
    """Dynkin diagram of a set of roots given by signed 1-based indices."""
    if len(set(roots)) != len(roots):
        raise ValueError("roots must be distinct")
    coeffs = [rs.root(k).coeffs for k in roots]
    nodes = tuple((k, rs.is_long(c)) for k, c in zip(roots, coeffs))
    edges = []
    for i in range(len(roots)):
        for j in range(i + 1, len(roots)):
            a = rs.pairing_coeffs(coeffs[i], coeffs[j])
            b = rs.pairing_coeffs(coeffs[j], coeffs[i])
            n = a * b
            if n:
                lo, hi = sorted((roots[i], roots[j]))
                edges.append((lo, hi, min(n, 3), a > 0 and b > 0))
    return RepDiagram(nodes, tuple(sorted(edges)))


def root_sum_element(L: LieAlgebra, roots: Sequence[int]) -> LieElement:
    """Sum of root vectors for signed 1-based root indices."""
    return L.element({L.root_vector(k): 1 for k in roots})


# -- representatives from root subsystems -------------------------------------

class SubsystemNotFoundError(LookupError):
    pass


def _component_shape(name: str) -> tuple[str, int, bool]:
    """'A5' -> ('A', 5, False); 'Ã2' or 'A2~' -> ('A', 2, True)."""
    s = name.strip()
    tilde = False
    if s.endswith("~"):
        s, tilde = s[:-1], True
    if len(s) >= 2 and s[1] == "̃":  # combining tilde after the letter
        s, tilde = s[0] + s[2:], True
    if s and s[0] == "Ã":  # precomposed A with tilde
        s, tilde = "A" + s[1:], True
    if len(s) < 2 or s[0] not in "ABCDEFG" or not s[1:].isdigit():
        raise ValueError(f"cannot parse component type {name!r}")
    return s[0], int(s[1:]), tilde


def _component_graph(letter: str, n: int) -> tuple[list[tuple[int, int]], list[str]]:
    """Edges (0-based) and node lengths ('L' or 'S') of a simple type."""
    chain = [(i, i + 1) for i in range(n - 1)]
    if letter == "A":
        return chain, ["L"] * n
    if letter == "B":
        return chain, ["L"] * (n - 1) + ["S"]
    if letter == "C":
        return chain, ["S"] * (n - 1) + ["L"]
    if letter == "D" and n >= 4:
        return chain[:-1] + [(n - 3, n - 1)], ["L"] * n
    if letter == "E" and n in (6, 7, 8):
        return [(0, 2), (2, 3), (3, 4), (1, 3)] + [(k, k + 1) for k in range(4, n - 1)], ["L"] * n
    if letter == "F" and n == 4:
        return chain, ["L", "L", "S", "S"]
    if letter == "G" and n == 2:
        return chain, ["S", "L"]
    raise ValueError(f"unsupported simple type {letter}{n}")


def _target_gram(rs: RootSystem, components: Sequence[str]):
    """Nodes in search order, their norms, and the required inner products."""
    long_n, short_n = rs.long_norm, 2
    norms: list[int] = []
    gram: dict[tuple[int, int], int] = {}
    order: list[int] = []
    for comp in components:
        letter, n, tilde = _component_shape(comp)
        edges, lengths = _component_graph(letter, n)
        if rs.is_simply_laced and (tilde or len(set(lengths)) > 1):
            raise ValueError(f"{comp} needs two root lengths; {rs.kind} has one")
        if tilde:
            lengths = ["S"] * n
        base = len(norms)
        norms += [long_n if x == "L" else short_n for x in lengths]
        for i, j in edges:
            gram[(base + i, base + j)] = gram[(base + j, base + i)] = -max(norms[base + i], norms[base + j]) // 2
        # breadth-first so every node after the first has a chosen neighbour
        adj = {i: [] for i in range(n)}
        for i, j in edges:
            adj[i].append(j)
            adj[j].append(i)
        seen, queue = [0], [0]
        while queue:
            v = queue.pop(0)
            for w in sorted(adj[v]):
                if w not in seen:
                    seen.append(w)
                    queue.append(w)
        order += [base + v for v in seen]
    return order, norms, gram


def _pi_system_diagram(rs: RootSystem, betas: Sequence[Sequence[int]]) -> tuple:
    """Diagram of sum x_beta for a simple system beta_1..beta_m.

    Differences of the beta_i are not roots, so h = sum c_i h_{beta_i} with
    sum_i c_i <beta_j, beta_i^vee> = 2 for all j.
    """
    m = len(betas)
    cart = [[rs.pairing_coeffs(betas[j], betas[i]) for i in range(m)] for j in range(m)]
    c = linalg.solve(cart, [2] * m)[0]
    a = [sum(ci * cr[j] for ci, cr in zip(c, (rs.coroot_coords(b) for b in betas))) for j in range(rs.rank)]
    return tuple(int(v) for v in rs.dominant_labels(a))


@dataclass(frozen=True)
class SubsystemEmbedding:
    roots: tuple[int, ...]  # signed root indices, in component-node order
    e: LieElement
    diagram: WeightedDiagram


def subsystem_representative(L: LieAlgebra, components: Sequence[str], max_solutions: int = 2000,
                             max_nodes: int = 2_000_000) -> list[SubsystemEmbedding]:
    """Sums of root vectors over simple systems of the requested type.

    Backtracks over roots so that the chosen roots have the Gram matrix of the
    requested Cartan type and pairwise differences that are not roots.  The
    Weyl group is transitive on roots of a given length, so the first root is
    fixed to the highest root of its length.  Embeddings are deduplicated by
    weighted Dynkin diagram; search stops after ``max_solutions`` embeddings or
    ``max_nodes`` search steps.
    """
    rs = L.rs
    order, norms, gram = _target_gram(rs, components)
    m = len(norms)
    if m > rs.rank:
        raise SubsystemNotFoundError("subsystem rank exceeds the rank of the algebra")
    allroots = [rs.root(k) for k in range(1, rs.num_positive + 1)]
    allroots += [rs.root(-k) for k in range(1, rs.num_positive + 1)]
    gcols = [[rs.gram[i][j] for i in range(rs.rank)] for j in range(rs.rank)]
    gvec = [tuple(sum(g[i] * c for i, c in enumerate(r.coeffs)) for g in gcols) for r in allroots]
    inner = [[sum(a * b for a, b in zip(r.coeffs, gv)) for gv in gvec] for r in allroots]
    diff_is_root = lambda a, b: rs.is_root(tuple(x - y for x, y in zip(allroots[a].coeffs, allroots[b].coeffs)))
    first_norm = norms[order[0]]
    start = max((k for k, r in enumerate(allroots) if r.positive and inner[k][k] == first_norm),
                key=lambda k: (sum(allroots[k].coeffs), allroots[k].index))

    found: dict[tuple, SubsystemEmbedding] = {}
    chosen: dict[int, int] = {order[0]: start}
    steps = 0
    solutions = 0

    def extend(pos: int) -> bool:
        nonlocal steps, solutions
        if pos == m:
            roots = tuple(allroots[chosen[i]].index for i in range(m))
            key = _pi_system_diagram(rs, [allroots[chosen[i]].coeffs for i in range(m)])
            if key not in found:
                e = root_sum_element(L, roots)
                D = weighted_dynkin(L, e)
                assert D.labels == key
                found[key] = SubsystemEmbedding(roots, e, D)
            solutions += 1
            return solutions >= max_solutions
        node = order[pos]
        # filter by the first chosen node's constraint, then check the rest
        anchor = next(iter(chosen))
        want = gram.get((node, anchor), 0)
        row = inner[chosen[anchor]]
        for r in range(len(allroots)):
            if row[r] != want or inner[r][r] != norms[node]:
                continue
            steps += 1
            if steps > max_nodes:
                return True
            ok = True
            for j, s in chosen.items():
                if inner[r][s] != gram.get((node, j), 0) or diff_is_root(r, s):
                    ok = False
                    break
            if not ok:
                continue
            chosen[node] = r
            stop = extend(pos + 1)
            del chosen[node]
            if stop:
                return True
        return False

    extend(1)
    if not found:
        raise SubsystemNotFoundError(f"no embedding of {'+'.join(components)} in {rs.kind}")
    return [found[k] for k in sorted(found)]
