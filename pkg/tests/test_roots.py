import pytest
from hypothesis import given, settings, strategies as st

from nilorbits.roots import GAP_FROM_DISPLAY, KINDS, build, display_to_gap, gap_to_display
from nilorbits.tables import load_root_table

COUNTS = {"G2": 6, "F4": 24, "E6": 36, "E7": 63, "E8": 120}


@pytest.mark.parametrize("kind", KINDS)
def test_positive_roots_match_golden(kind):
    rs = build(kind)
    assert rs.num_positive == COUNTS[kind]
    assert list(rs.positive_roots) == load_root_table(kind)


def test_unknown_kind():
    with pytest.raises(ValueError):
        build("B3")


def test_g2_cartan():
    assert build("G2").cartan == ((2, -1), (-3, 2))


def test_f4_gap_numbering():
    rs = build("F4")
    # GAP node 1 is Bourbaki a4 (short), node 2 is a1 (long)
    assert not rs.is_long((1, 0, 0, 0)) and rs.is_long((0, 1, 0, 0))
    assert GAP_FROM_DISPLAY["F4"] == (4, 1, 3, 2)


def test_e6_highest_root():
    # printed as 1 2 3 2 1 with 2 over the branch node
    assert build("E6").highest_root == (1, 2, 2, 3, 2, 1)


@pytest.mark.parametrize("kind", KINDS)
def test_highest_root_is_dominant(kind):
    rs = build(kind)
    theta = rs.highest_root
    assert all(rs.pairing(theta, j) >= 0 for j in range(rs.rank))
    assert all(sum(r) <= sum(theta) for r in rs.positive_roots)


@pytest.mark.parametrize("kind", KINDS)
def test_root_strings_and_indices(kind):
    rs = build(kind)
    for k, r in enumerate(rs.positive_roots, 1):
        assert rs.index_of(r) == k
        assert rs.index_of(tuple(-x for x in r)) == -k
        assert rs.root(-k).coeffs == tuple(-x for x in r)
    assert rs.index_of((0,) * rs.rank) == 0


@pytest.mark.parametrize("kind", KINDS)
def test_coroots_integral(kind):
    rs = build(kind)
    for r in rs.positive_roots:
        assert all(c.denominator == 1 for c in rs.coroot_coords(r))


@settings(max_examples=50, deadline=None)
@given(st.sampled_from(KINDS), st.data())
def test_dominant_labels_is_dominant_and_w_invariant(kind, data):
    rs = build(kind)
    a = data.draw(st.lists(st.integers(-6, 6), min_size=rs.rank, max_size=rs.rank))
    lab = rs.dominant_labels(a)
    assert all(v >= 0 for v in lab)
    # apply a simple reflection to h first: same dominant representative
    i = data.draw(st.integers(0, rs.rank - 1))
    labels = [sum(rs.cartan[k][j] * a[j] for j in range(rs.rank)) for k in range(rs.rank)]
    b = list(a)
    b[i] -= labels[i]  # s_i(h) = h - alpha_i(h) h_i
    assert rs.dominant_labels(b) == lab


@settings(max_examples=30)
@given(st.sampled_from(KINDS), st.data())
def test_display_permutation_roundtrip(kind, data):
    perm = GAP_FROM_DISPLAY[kind]
    v = tuple(data.draw(st.lists(st.integers(0, 2), min_size=len(perm), max_size=len(perm))))
    assert gap_to_display(display_to_gap(v, perm), perm) == v
