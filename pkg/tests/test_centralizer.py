import json
import random
from fractions import Fraction

import pytest

from nilorbits import linalg
from nilorbits.centralizer import (
    AnalysisConfig,
    ClosureError,
    DoubleCentralizerResult,
    IndexCertificate,
    centralizer,
    double_centralizer,
    index_form_matrix,
    is_abelian,
    min_double_centralizer,
    recheck_double_centralizer,
    recheck_index,
    subalgebra_from_vectors,
    verify_elashvili,
)
from nilorbits.chevalley import build_algebra
from nilorbits.orbits import WeightedDiagram, find_representative, root_sum_element

from conftest import enumeration


def g2_rep(g2, display):
    D = WeightedDiagram.from_display("G2", display)
    return find_representative(g2, D, random.Random(0))


def root_sl2(L):
    n = L.rs.num_positive
    return subalgebra_from_vectors(L, [{L.x(n): 1}, {L.y(n): 1}, L.bracket_vec({L.x(n): 1}, {L.y(n): 1})])


def test_centralizer_of_zero(g2):
    K = centralizer(g2, g2.zero())
    assert K.dim == 14


def test_centralizer_regular_g2(g2):
    e, _ = g2_rep(g2, (2, 2))
    assert centralizer(g2, e).dim == 2


def test_centralizer_highest_root_e8(e8):
    n = e8.rs.num_positive
    e = e8.basis_element(e8.x(n))
    assert centralizer(e8, e).dim == 190
    # independent count: ad x_theta sends root vectors to multiples of root
    # vectors (distinct inputs give distinct outputs), plus the line through h_theta
    cartan = set(range(2 * n, e8.dim))
    image, hits_cartan = set(), False
    for k in range(e8.dim):
        out = set(e8.bracket_vec(e.coeffs, {k: 1}))
        if out & cartan:
            hits_cartan = True
        image |= out - cartan
    assert len(image) + hits_cartan == 58


def test_centralizer_elements_commute(f4):
    for o in enumeration("F4").orbits:
        K = centralizer(f4, o.e)
        assert all(f4.bracket(o.e, b).is_zero() for b in K.basis)
        # kernel dimension agrees with the rank of the full ad matrix
        assert K.dim == f4.dim - linalg.rank(f4.ad_matrix(o.e))


def test_structure_table_antisymmetric(g2):
    e, _ = g2_rep(g2, (2, 0))
    K = centralizer(g2, e)
    for i in range(K.dim):
        for j in range(K.dim):
            assert dict(K.structure[i][j]) == {k: -c for k, c in K.structure[j][i]}


def test_closure_detected(g2):
    with pytest.raises(ClosureError):
        subalgebra_from_vectors(g2, [{g2.x(1): 1}, {g2.x(2): 1}])


def test_index_form_matrix_examples(g2):
    cartan = subalgebra_from_vectors(g2, [{g2.h(1): 1}, {g2.h(2): 1}])
    A = index_form_matrix(cartan)
    assert all(f.is_zero() for row in A.entries for f in row)
    assert is_abelian(cartan)
    S = root_sl2(g2)
    assert not is_abelian(S)
    assert linalg.symbolic_rank(index_form_matrix(S)) == 2


def test_elashvili_zero_orbit(g2):
    cert = verify_elashvili(g2, g2.zero(), random.Random(1))
    assert cert.conclusion == "certified" and cert.dim_K == 14 and cert.index == 2


def test_elashvili_subregular_g2(g2):
    e, _ = g2_rep(g2, (2, 0))
    cert = verify_elashvili(g2, e, random.Random(1))
    assert cert.dim_K == 4 and cert.index == 2 and cert.conclusion == "certified"


def test_index_certificate_cross_check(f4):
    """dim K^f from the rank of A equals the kernel of the transposed system
    sum_i A(i, j) a_i = 0, built directly from brackets."""
    for o in enumeration("F4").orbits[:6]:
        K = centralizer(f4, o.e)
        cert = verify_elashvili(f4, o.e, random.Random(2), AnalysisConfig(modular=False), K=K)
        phi = dict(cert.functional)
        n = K.dim
        A = [[sum((c * phi.get(k, 0) for k, c in f4.bracket_vec(K.basis[i].coeffs, K.basis[j].coeffs).items()),
                  Fraction(0)) for j in range(n)] for i in range(n)]
        AT = [list(col) for col in zip(*A)]
        assert len(linalg.kernel(AT)) == cert.index == f4.rank


def test_index_certificate_json_roundtrip(tmp_path, f4):
    o = enumeration("F4").orbits[3]
    cert = verify_elashvili(f4, o.e, random.Random(4), diagram=o.diagram.labels)
    d = json.loads(json.dumps(cert.to_json()))
    again = IndexCertificate.from_json(d)
    assert recheck_index(again)
    d["rank_A"] += 1
    assert not recheck_index(IndexCertificate.from_json(d))


def test_inconclusive_never_refutes(e6):
    o = enumeration("E6").orbits[0]
    cert = verify_elashvili(e6, o.e, random.Random(0), AnalysisConfig(trials=1, omega_bound=1))
    assert cert.conclusion in ("certified", "inconclusive")
    assert cert.index >= e6.rank


def test_double_centralizer_examples(g2):
    e, _ = g2_rep(g2, (2, 0))
    K = centralizer(g2, e)
    assert double_centralizer(g2, e, g2.zero()).dim == K.dim
    D = double_centralizer(g2, e, e)
    assert D.contains(e)
    with pytest.raises(ValueError):
        double_centralizer(g2, e, g2.basis_element(g2.y(1)))


def test_min_double_centralizer_g2():
    L = build_algebra("G2")
    got = {}
    for o in enumeration("G2").orbits:
        r = min_double_centralizer(L, o.e, random.Random(0), h=o.triple.h)
        got[o.diagram.display("G2")] = (r.min_dim, r.lower_bound_mode)
        assert r.min_dim >= L.rank and r.lower_bound == r.min_dim
    assert got[(2, 0)] == (3, "exact")
    assert got[(2, 2)] == (2, "exact")


def test_min_double_centralizer_f4_exception(f4):
    e = root_sum_element(f4, [8, 9, 10, 18])
    r = min_double_centralizer(f4, e, random.Random(1))
    assert r.min_dim == 6 and r.abelian
    assert r.lower_bound_mode == "probabilistic" and r.error_bound <= 1e-9


def test_scaling_invariance(f4):
    e = root_sum_element(f4, [8, 9, 10, 18])
    a = min_double_centralizer(f4, e, random.Random(1))
    b = min_double_centralizer(f4, e.scale(Fraction(-7, 3)), random.Random(1))
    assert a.min_dim == b.min_dim


def test_richardson_bound_on_samples(f4):
    rng = random.Random(9)
    for o in enumeration("F4").orbits:
        K = centralizer(f4, o.e)
        for _ in range(3):
            x = K.element([rng.randint(-3, 3) for _ in range(K.dim)])
            assert double_centralizer(f4, o.e, x, K).dim >= f4.rank


def test_double_centralizer_json_recheck(g2):
    e, t = g2_rep(g2, (2, 0))
    r = min_double_centralizer(g2, e, random.Random(0), h=t.h)
    again = DoubleCentralizerResult.from_json(json.loads(json.dumps(r.to_json())))
    assert recheck_double_centralizer(again)
    again.min_dim = 2
    assert not recheck_double_centralizer(again)
