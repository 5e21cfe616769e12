"""Centralizers of nilpotent elements: index certificates and double centralizers.

Index.  For a Lie algebra K with basis x_1..x_n and structure constants
c_ij^k, the matrix A(i, j) = sum_k c_ij^k T_k has rank n - ind(K) over Q(T).
A specialization can only drop the rank, and Vinberg's inequality gives
ind(C_g(e)) >= rank(g), so a single point with n - rank A = rank(g) proves
ind(C_g(e)) = rank(g).  Ranks may be taken modulo a prime for the same reason.

Double centralizers.  For x = sum T_i x_i in C_e, C_{e,x} is the kernel of
ad x on C_e.  Its dimension is at least rank(g) (Richardson), so a sampled x
reaching rank(g) settles the minimum.  Otherwise the generic rank of ad x is
computed over Q(T) when small enough, or bounded by Schwartz-Zippel sampling.
"""

from __future__ import annotations

import json
import logging
import math
import random
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

from nilorbits import linalg
from nilorbits.chevalley import LieAlgebra, LieElement, build_algebra
from nilorbits.linalg import LinForm, LinMatrix

log = logging.getLogger(__name__)


class ClosureError(ArithmeticError):
    """A bracket of basis elements does not lie in the span of the basis."""


# -- subalgebras -------------------------------------------------------------

@dataclass(eq=False)
class Subalgebra:
    """A subalgebra of ``parent`` with basis b_1..b_n.

    ``coord_cols`` are parent basis indices with b_i[coord_cols[j]] = delta_ij,
    so the coordinates of any element of the span are read off those columns.
    ``structure[i][j]`` is a tuple of (k, c) with [b_i, b_j] = sum c b_k.
    """

    parent: LieAlgebra
    basis: list[LieElement]
    coord_cols: list[int]
    structure: list = field(repr=False)

    @property
    def dim(self) -> int:
        return len(self.basis)

    def coords(self, v: dict) -> dict[int, Fraction]:
        """Coordinates of a parent vector (coefficient dict) known to lie in the span."""
        out = {}
        for j, c in enumerate(self.coord_cols):
            val = v.get(c)
            if val:
                out[j] = val
        return out

    def combine(self, coords: dict) -> dict:
        out: dict = {}
        for j, t in coords.items():
            for k, v in self.basis[j].coeffs.items():
                out[k] = out.get(k, 0) + t * v
        return {k: v for k, v in out.items() if v}

    def element(self, coords: Sequence) -> LieElement:
        return self.parent.element(self.combine(dict(enumerate(coords))))

    def contains(self, v: LieElement) -> bool:
        return self.combine(self.coords(v.coeffs)) == {k: c for k, c in v.coeffs.items() if c}


def _structure_table(parent: LieAlgebra, basis: list[LieElement], coord_cols: list[int]) -> list:
    n = len(basis)
    sub = Subalgebra(parent, basis, coord_cols, [])
    table = [[()] * n for _ in range(n)]
    for i in range(n):
        for j in range(i + 1, n):
            v = parent.bracket_vec(basis[i].coeffs, basis[j].coeffs)
            if not v:
                continue
            co = sub.coords(v)
            if sub.combine(co) != v:
                raise ClosureError(f"bracket of basis elements {i}, {j} leaves the span")
            table[i][j] = tuple(sorted(co.items()))
            table[j][i] = tuple((k, -c) for k, c in table[i][j])
    return table


def subalgebra_from_vectors(parent: LieAlgebra, vectors: Sequence[dict]) -> Subalgebra:
    """Subalgebra spanned by the given coefficient dicts (must be closed)."""
    if not vectors:
        return Subalgebra(parent, [], [], [])
    cols = sorted({k for v in vectors for k in v})
    pos = {k: i for i, k in enumerate(cols)}
    rows = []
    for v in vectors:
        r = [0] * len(cols)
        for k, c in v.items():
            r[pos[k]] = c
        rows.append(r)
    red, pivots = linalg.rref(rows)
    basis = [parent.element({cols[i]: x for i, x in enumerate(r) if x}) for r in red]
    coord_cols = [cols[p] for p in pivots]
    return Subalgebra(parent, basis, coord_cols, _structure_table(parent, basis, coord_cols))


def _support_grading(L: LieAlgebra, e: LieElement):
    """Labels of some h0 in the Cartan with beta(h0) = 2 on the support of e, or None."""
    rs = L.rs
    l = rs.rank
    supp = [L.root_of[k] for k in e.coeffs]
    if any(r is None for r in supp):
        return None
    C = rs.cartan
    rows = [[sum(b[i] * C[i][j] for i in range(l)) for j in range(l)] for b in supp]
    sol = linalg.solve(rows, [2] * len(supp))
    if sol is None:
        return None
    a = sol[0]
    return tuple(sum(C[i][j] * a[j] for j in range(l)) for i in range(l))


def centralizer(L: LieAlgebra, e: LieElement, grading: Sequence | None = None) -> Subalgebra:
    """C_g(e) as the kernel of ad e.

    When e is homogeneous for a Cartan grading (``grading`` gives the labels
    alpha_i(h0), default: solved from the support of e), the kernel is
    computed blockwise on the eigenspaces of ad h0, and every basis vector is
    homogeneous.
    """
    if e.is_zero():
        basis = [L.basis_element(k) for k in range(L.dim)]
        return Subalgebra(L, basis, list(range(L.dim)), _structure_table(L, basis, list(range(L.dim))))
    labels = tuple(grading) if grading is not None else _support_grading(L, e)
    if labels is None:
        blocks = {0: list(range(L.dim))}
    else:
        blocks = {}
        for k in range(L.dim):
            blocks.setdefault(L.eigenvalue(k, labels), []).append(k)
    basis: list[LieElement] = []
    coord_cols: list[int] = []
    for lam in sorted(blocks):
        cols = blocks[lam]
        images = [L.bracket_vec(e.coeffs, {k: 1}) for k in cols]
        targets = sorted({k for im in images for k in im})
        if not targets:
            for k in cols:
                basis.append(L.basis_element(k))
                coord_cols.append(k)
            continue
        tpos = {k: i for i, k in enumerate(targets)}
        M = [[0] * len(cols) for _ in targets]
        for j, im in enumerate(images):
            for k, c in im.items():
                M[tpos[k]][j] = c
        kern = linalg.kernel(M)
        free = [j for j in range(len(cols)) if j not in set(linalg.rref(M)[1])]
        for v, fc in zip(kern, free):
            basis.append(L.element({cols[j]: x for j, x in enumerate(v) if x}))
            coord_cols.append(cols[fc])
    return Subalgebra(L, basis, coord_cols, _structure_table(L, basis, coord_cols))


def is_abelian(K: Subalgebra) -> bool:
    return all(not entry for row in K.structure for entry in row)


# -- index ----------------------------------------------------------------

def index_form_matrix(K: Subalgebra) -> LinMatrix:
    """A(i, j) = sum_k c_ij^k T_k."""
    n = K.dim
    return LinMatrix.from_rows(
        [[LinForm.make(0, dict(K.structure[i][j])) for j in range(n)] for i in range(n)], n
    )


def _index_matrix_at(K: Subalgebra, point: Sequence, p: int | None = None) -> list[list]:
    n = K.dim
    A = [[0] * n for _ in range(n)]
    for i in range(n):
        row = K.structure[i]
        for j in range(n):
            s = 0
            for k, c in row[j]:
                s += c * point[k]
            A[i][j] = s if p is None else _mod(s, p)
    return A


def _mod(x, p: int) -> int:
    if isinstance(x, Fraction):
        return x.numerator * pow(x.denominator, -1, p) % p
    return int(x) % p


def _rank(M: list[list], p: int | None) -> int:
    if p is None:
        return linalg.rank(M)
    return linalg._rank_mod_p_rows([[_mod(x, p) for x in r] for r in M if any(r)], len(M[0]) if M else 0, p)


@dataclass
class AnalysisConfig:
    omega_bound: int = 50
    trials: int = 25
    modular: bool = True  # ranks mod a random 62-bit prime while sampling
    # double centralizer lower bounds
    symbolic_max_dim: int = 8
    symbolic_budget: int = linalg.DEFAULT_TERM_BUDGET
    lb_sample_bound: int = 2**20
    lb_error: float = 1e-9
    # witness post-processing
    nicify_witness: bool = True
    nicify_max_dim: int = 64
    degree: int | None = None  # restrict x to C_e ∩ g(degree)

    @property
    def omega(self) -> list[int]:
        b = self.omega_bound
        return [v for v in range(-b, b + 1) if v]


@dataclass
class IndexCertificate:
    kind: str
    diagram: tuple[int, ...]  # GAP order
    e: dict  # basis index -> coefficient
    dim_K: int
    functional: list  # [(parent basis index, value)]: f on K is v -> sum value * v[index]
    point: list  # the same values as T_k in the K basis
    rank_A: int
    rank_g: int
    modulus: int | None
    conclusion: str  # "certified" | "inconclusive"
    trials_used: int
    seed: int | None = None

    @property
    def index(self) -> int:
        return self.dim_K - self.rank_A

    def to_json(self) -> dict:
        return {
            "kind": self.kind,
            "diagram": list(self.diagram),
            "e": _vec_json(self.e),
            "dim_K": self.dim_K,
            "functional": [[k, str(v)] for k, v in self.functional],
            "rank_A": self.rank_A,
            "rank_g": self.rank_g,
            "index_upper_bound": self.index,
            "modulus": self.modulus,
            "conclusion": self.conclusion,
            "trials_used": self.trials_used,
            "seed": self.seed,
        }

    @classmethod
    def from_json(cls, d: dict) -> "IndexCertificate":
        functional = [(int(k), Fraction(v)) for k, v in d["functional"]]
        return cls(
            kind=d["kind"], diagram=tuple(d["diagram"]), e=_vec_from_json(d["e"]), dim_K=d["dim_K"],
            functional=functional, point=[v for _, v in functional], rank_A=d["rank_A"],
            rank_g=d["rank_g"], modulus=d["modulus"], conclusion=d["conclusion"],
            trials_used=d["trials_used"], seed=d.get("seed"),
        )


def _vec_json(v: dict) -> list:
    return [[int(k), str(Fraction(c))] for k, c in sorted(v.items())]


def _vec_from_json(v: list) -> dict:
    return {int(k): Fraction(c) for k, c in v}


def verify_elashvili(L: LieAlgebra, e: LieElement, rng: random.Random, config: AnalysisConfig | None = None,
                     K: Subalgebra | None = None, diagram: Sequence[int] = ()) -> IndexCertificate:
    """Search for f in K* with dim K^f = rank(g), K = C_g(e)."""
    config = config or AnalysisConfig()
    K = K if K is not None else centralizer(L, e)
    n, l = K.dim, L.rank
    p = linalg.random_prime(rng) if config.modular else None
    omega = config.omega
    best, best_point, used = -1, None, 0
    for t in range(1, config.trials + 1):
        point = [rng.choice(omega) for _ in range(n)]
        r = _rank(_index_matrix_at(K, point), p)
        if n - r < l:
            raise AssertionError(f"index {n - r} below rank {l}: contradicts Vinberg's inequality")
        if r > best:
            best, best_point, used = r, point, t
        if n - r == l:
            break
    best_point = best_point or []
    return IndexCertificate(
        kind=L.rs.kind, diagram=tuple(diagram), e=dict(e.coeffs), dim_K=n,
        functional=[(K.coord_cols[k], Fraction(v)) for k, v in enumerate(best_point)],
        point=list(best_point), rank_A=max(best, 0), rank_g=l, modulus=p,
        conclusion="certified" if n - best == l else "inconclusive", trials_used=used,
    )


def recheck_index(cert: IndexCertificate) -> bool:
    """Recompute C_g(e), evaluate A(i, j) = f([x_i, x_j]) from the stored
    functional, and redo the rank from scratch (over F_p when a modulus is
    recorded, over Q otherwise)."""
    L = build_algebra(cert.kind)
    e = L.element(cert.e)
    K = centralizer(L, e)
    if K.dim != cert.dim_K:
        return False
    phi = dict(cert.functional)
    n = K.dim
    A = [[0] * n for _ in range(n)]
    for i in range(n):
        for j in range(i + 1, n):
            v = L.bracket_vec(K.basis[i].coeffs, K.basis[j].coeffs)
            s = sum((c * phi[k] for k, c in v.items() if k in phi), Fraction(0))
            A[i][j], A[j][i] = s, -s
    if cert.modulus is not None and not _is_prime(cert.modulus):
        return False
    r = _rank(A, cert.modulus)
    ok = r == cert.rank_A
    if cert.conclusion == "certified":
        ok = ok and n - r == L.rank
    return ok


def _is_prime(p: int) -> bool:
    import gmpy2

    return bool(gmpy2.is_prime(p, 50))


# -- double centralizers ------------------------------------------------------

def _ad_on(K: Subalgebra, x_coords: Sequence, p: int | None = None, idx: Sequence[int] | None = None):
    """Matrix of ad x on K in K-coordinates, x = sum x_coords[i] b_{idx[i]}."""
    n = K.dim
    idx = range(n) if idx is None else idx
    M = [[0] * n for _ in range(n)]
    for t, i in zip(x_coords, idx):
        if not t:
            continue
        row = K.structure[i]
        for j in range(n):
            for k, c in row[j]:
                M[k][j] += t * c
    if p is not None:
        M = [[_mod(v, p) for v in r] for r in M]
    return M


def ad_linmatrix(K: Subalgebra, idx: Sequence[int] | None = None) -> LinMatrix:
    """ad(sum T_i b_{idx[i]}) on K as a matrix of linear forms."""
    n = K.dim
    idx = list(range(n)) if idx is None else list(idx)
    acc = [[{} for _ in range(n)] for _ in range(n)]
    for t, i in enumerate(idx):
        for j in range(n):
            for k, c in K.structure[i][j]:
                acc[k][j][t] = acc[k][j].get(t, 0) + c
    return LinMatrix.from_rows([[LinForm.make(0, d) for d in row] for row in acc], len(idx))


def double_centralizer(L: LieAlgebra, e: LieElement, x: LieElement, K: Subalgebra | None = None) -> Subalgebra:
    """C_{e,x}: elements commuting with both e and x, for x in C_e."""
    if not L.bracket(e, x).is_zero():
        raise ValueError("x does not commute with e")
    K = K if K is not None else centralizer(L, e)
    co = K.coords(x.coeffs)
    if K.combine(co) != {k: c for k, c in x.coeffs.items() if c}:  # pragma: no cover
        raise ValueError("x is not in the computed centralizer")
    if K.dim == 0:
        return Subalgebra(L, [], [], [])
    M = _ad_on(K, [co.get(i, 0) for i in range(K.dim)])
    kern = linalg.kernel(M)
    return subalgebra_from_vectors(L, [K.combine(dict(enumerate(v))) for v in kern])


@dataclass
class DoubleCentralizerResult:
    kind: str
    diagram: tuple[int, ...]
    e: dict
    dim_Ce: int
    rank_g: int
    min_dim: int  # certified upper bound, attained by the witness
    lower_bound: int
    lower_bound_mode: str  # "exact" | "probabilistic"
    lower_bound_method: str  # "richardson" | "symbolic" | "sampling"
    error_bound: float  # 0 for exact modes
    witness: dict  # x in C_e, parent coordinates
    abelian: bool
    degree: int | None = None
    seed: int | None = None

    @property
    def exceptional(self) -> bool:
        return self.min_dim > self.rank_g

    def to_json(self) -> dict:
        return {
            "kind": self.kind,
            "diagram": list(self.diagram),
            "e": _vec_json(self.e),
            "dim_Ce": self.dim_Ce,
            "rank_g": self.rank_g,
            "min_dim": self.min_dim,
            "lower_bound": self.lower_bound,
            "lower_bound_mode": self.lower_bound_mode,
            "lower_bound_method": self.lower_bound_method,
            "error_bound": self.error_bound,
            "witness": _vec_json(self.witness),
            "abelian": self.abelian,
            "degree": self.degree,
            "seed": self.seed,
        }

    @classmethod
    def from_json(cls, d: dict) -> "DoubleCentralizerResult":
        return cls(
            kind=d["kind"], diagram=tuple(d["diagram"]), e=_vec_from_json(d["e"]), dim_Ce=d["dim_Ce"],
            rank_g=d["rank_g"], min_dim=d["min_dim"], lower_bound=d["lower_bound"],
            lower_bound_mode=d["lower_bound_mode"], lower_bound_method=d["lower_bound_method"],
            error_bound=d["error_bound"], witness=_vec_from_json(d["witness"]), abelian=d["abelian"],
            degree=d.get("degree"), seed=d.get("seed"),
        )


def recheck_double_centralizer(res: DoubleCentralizerResult) -> bool:
    """Re-verify the certified parts: the witness commutes with e, its double
    centralizer has dimension min_dim over Q, the abelian flag, and (for
    Richardson-certified rows) min_dim = rank(g)."""
    L = build_algebra(res.kind)
    e, x = L.element(res.e), L.element(res.witness)
    if not L.bracket(e, x).is_zero():
        return False
    D = double_centralizer(L, e, x)
    ok = D.dim == res.min_dim and is_abelian(D) == res.abelian
    if res.lower_bound_method == "richardson":
        ok = ok and res.min_dim == L.rank
    return ok


def _sampling_trials(n: int, size: int, target: float) -> int:
    """Trials t with (n / size)^t <= target."""
    q = n / size
    return max(1, math.ceil(math.log(target) / math.log(q)))


def min_double_centralizer(L: LieAlgebra, e: LieElement, rng: random.Random,
                           config: AnalysisConfig | None = None, K: Subalgebra | None = None,
                           h: LieElement | None = None, diagram: Sequence[int] = ()) -> DoubleCentralizerResult:
    """Minimal dim C_{e,x} over x in C_e, with a witness.

    With ``config.degree`` set, x ranges over C_e ∩ g(degree) for the grading
    by h (default: the h of an sl2-triple through e with h in the Cartan).
    """
    config = config or AnalysisConfig()
    rank_g = L.rank
    if config.degree is not None or K is None:
        if h is None and not e.is_zero():
            from nilorbits.orbits import sl2_from_cartan_grading

            h = sl2_from_cartan_grading(L, e).h
        grading = L.labels_of(h) if h is not None else None
        K = centralizer(L, e, grading)
    n = K.dim
    if config.degree is None:
        idx = list(range(n))
    else:
        labels = L.labels_of(h) if h is not None else (0,) * rank_g
        idx = [i for i, b in enumerate(K.basis)
               if {L.eigenvalue(k, labels) for k in b.coeffs} == {config.degree}]
    p = linalg.random_prime(rng) if config.modular else None
    omega = config.omega

    best_r, best_x = -1, None
    for _ in range(max(1, config.trials)):
        xs = [rng.choice(omega) for _ in idx]
        r = _rank(_ad_on(K, xs, idx=idx), p)
        if n - r < rank_g:
            raise AssertionError(f"dim C_(e,x) = {n - r} below rank {rank_g}")
        if r > best_r:
            best_r, best_x = r, xs
        if n - r == rank_g:
            break
    if not idx:
        best_r, best_x = (_rank(_ad_on(K, [], idx=[]), None) if n else 0), []

    # witness: nicify while keeping the rank, then measure exactly over Q
    if config.nicify_witness and n <= config.nicify_max_dim and best_x:
        best_x = _nicify_coords(best_x, lambda xs: _rank(_ad_on(K, xs, p, idx), p) >= best_r)
    Mx = _ad_on(K, best_x, idx=idx)
    exact_r = linalg.rank(Mx) if n else 0
    min_dim = n - exact_r
    witness_coords = {i: t for i, t in zip(idx, best_x) if t}
    witness = K.combine(witness_coords)

    # lower bound on min over the searched space
    error = 0.0
    if min_dim == rank_g:
        lb, mode, method = rank_g, "exact", "richardson"
    else:
        lb, mode, method = None, None, None
        if len(idx) <= config.symbolic_max_dim:
            try:
                g_rank = linalg.symbolic_rank(ad_linmatrix(K, idx), config.symbolic_budget)
                lb, mode, method = n - g_rank, "exact", "symbolic"
            except linalg.PolynomialBudgetExceeded:
                log.info("symbolic rank over budget for %s; falling back to sampling", diagram)
        if lb is None:
            b = config.lb_sample_bound
            S = [v for v in range(-b, b + 1) if v] if b <= 64 else None
            size = 2 * b
            trials = _sampling_trials(n, size, config.lb_error)
            top = exact_r
            for _ in range(trials):
                xs = [rng.choice(S) if S else rng.choice((-1, 1)) * rng.randint(1, b) for _ in idx]
                top = max(top, linalg.rank(_ad_on(K, xs, idx=idx)))
            # (n/size)^trials bounds the chance that the generic rank exceeds top
            lb, mode, method = n - top, "probabilistic", "sampling"
            error = (n / size) ** trials
            if top > exact_r:  # pragma: no cover - the random search was unlucky
                log.warning("sampling found a larger rank than the search; widening trials would help")

    D = _kernel_subalgebra(K, Mx)
    return DoubleCentralizerResult(
        kind=L.rs.kind, diagram=tuple(diagram), e=dict(e.coeffs), dim_Ce=n, rank_g=rank_g,
        min_dim=min_dim, lower_bound=lb, lower_bound_mode=mode, lower_bound_method=method,
        error_bound=error, witness=witness, abelian=is_abelian(D), degree=config.degree,
    )


def _kernel_subalgebra(K: Subalgebra, M: list[list]) -> Subalgebra:
    if K.dim == 0:
        return Subalgebra(K.parent, [], [], [])
    kern = linalg.kernel(M)
    return subalgebra_from_vectors(K.parent, [K.combine(dict(enumerate(v))) for v in kern])


def _nicify_coords(xs: list, ok, max_value: int = 1000) -> list:
    """Coordinate scan over 0, 1, 2, ... keeping ``ok`` true; basis order."""
    xs = list(xs)
    for i in range(len(xs)):
        old = xs[i]
        for v in range(max_value + 1):
            xs[i] = v
            if v == old or ok(xs):
                break
        else:
            xs[i] = old
    return xs


def dumps(records: Sequence) -> str:
    """Deterministic JSON for a list of certificates."""
    return json.dumps([r.to_json() for r in records], sort_keys=True, indent=1)
