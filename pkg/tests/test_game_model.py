import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from fraccore.errors import DimensionMismatch
from fraccore.game_model import (
    ComprehensiveSet,
    FirmSystem,
    GeneralizedGame,
    HalfSpace,
    coalition_cylinder,
    contains,
    cover_labels,
    in_induced_cover,
    point_orthant,
    tau,
    validate_game,
)
from fraccore.rationals import Q, rat, vec


def orthant_set(*points):
    return ComprehensiveSet(tuple(point_orthant(p) for p in points))


def test_contains_orthant_generator():
    # feasible vector for the lone-worker firm that hands everything to
    # player 2: (0, 10, 0) itself is feasible, exceeding a coordinate is not
    u = orthant_set((0, 10, 0))
    assert contains(u, (0, 10, 0))
    assert not contains(u, (0, 10, 1))
    assert contains(u, (-5, 3, -1))


def test_contains_dimension_check():
    u = orthant_set((0, 0))
    with pytest.raises(DimensionMismatch):
        contains(u, (0, 0, 0))


def test_tau_boundary_point():
    u = orthant_set((0, 0, 0))
    assert tau([u], (0, 0, 0)) == 0


def test_tau_closed_form():
    u = orthant_set((0, 0, 0))
    # coordinate gaps are 1, 2, 3; the binding one is 1
    assert tau([u], (-1, -2, -3)) == 1


def test_tau_union_takes_max():
    u = ComprehensiveSet((point_orthant((1, 0)), point_orthant((0, 1))))
    # raising from (-1,-1): first cell allows min(2,1)=1, second min(1,2)=1
    assert tau([u], (-1, -1)) == 1
    v = ComprehensiveSet((point_orthant((3, 3)),))
    assert tau([u, v], (-1, -1)) == 4


def test_induced_cover_membership():
    u1 = orthant_set((1, 0))
    u2 = orthant_set((0, 1))
    fam = [u1, u2]
    assert in_induced_cover(fam, 0, (0, 0))
    assert in_induced_cover(fam, 1, (0, 0))
    assert in_induced_cover(fam, 0, (1, 0))
    assert not in_induced_cover(fam, 1, (1, 0))
    assert cover_labels(fam, (1, 0)) == frozenset({0})


def test_single_set_covers_everything():
    u = orthant_set((2, -1))
    assert in_induced_cover([u], 0, (100, -50))


def test_negative_normal_rejected():
    with pytest.raises(ValueError):
        HalfSpace((1, -1), 0)
    with pytest.raises(ValueError):
        HalfSpace((0, 0), 1)


def test_cylinder():
    c = coalition_cylinder(3, (0, 2), 5)
    s = ComprehensiveSet((c,))
    assert contains(s, (5, 1000, 0))
    assert not contains(s, (5, 0, 1))


def test_validate_game_passes_on_sane_game():
    # three players, two firms in R^2
    u1 = orthant_set((1, 1, 1))
    u2 = ComprehensiveSet((coalition_cylinder(3, (0, 1), 4),))
    fs = FirmSystem(firms=[(1, 0), (0, 1)], resource=(1, 1))
    game = GeneralizedGame((u1, u2), fs)
    report = validate_game(game)
    assert report.ok, report.failures()


def test_validate_game_zero_firm_fails():
    u1 = orthant_set((0, 0))
    fs = FirmSystem(firms=[(0, 0)], resource=(0, 1))
    report = validate_game(GeneralizedGame((u1,), fs))
    names = {c.name: c.passed for c in report.checks}
    assert not names["firm_totals_positive"]
    assert not report.ok


def test_validate_game_resource_outside_cone():
    u1 = orthant_set((0, 0))
    fs = FirmSystem(firms=[(1, 0)], resource=(0, 1))
    report = validate_game(GeneralizedGame((u1,), fs))
    names = {c.name: c.passed for c in report.checks}
    assert not names["resource_in_cone"]


small_rats = st.fractions(min_value=-5, max_value=5, max_denominator=4).map(rat)


@st.composite
def comprehensive_families(draw, dim=3):
    nsets = draw(st.integers(1, 3))
    sets = []
    for _ in range(nsets):
        nprims = draw(st.integers(1, 2))
        prims = []
        for _ in range(nprims):
            kind = draw(st.booleans())
            if kind:
                p = draw(st.lists(small_rats, min_size=dim, max_size=dim))
                prims.append(point_orthant(p))
            else:
                members = draw(st.lists(st.integers(0, dim - 1), min_size=1, unique=True))
                prims.append(coalition_cylinder(dim, members, draw(small_rats)))
        sets.append(ComprehensiveSet(tuple(prims)))
    return sets


@given(comprehensive_families(), st.lists(small_rats, min_size=3, max_size=3), small_rats)
@settings(max_examples=60, deadline=None)
def test_translation_property(fam, x, s):
    ones = vec((1, 1, 1))
    shifted = tuple(a + s for a in x)
    assert tau(fam, shifted) == tau(fam, x) - s


@given(comprehensive_families(), st.lists(small_rats, min_size=3, max_size=3))
@settings(max_examples=60, deadline=None)
def test_cover_property(fam, x):
    labels = cover_labels(fam, x)
    assert labels, "the induced cover must cover every point"
    for i in labels:
        assert in_induced_cover(fam, i, x)


@given(
    comprehensive_families(),
    st.lists(small_rats, min_size=3, max_size=3),
    small_rats,
)
@settings(max_examples=60, deadline=None)
def test_ray_invariance(fam, x, t):
    before = cover_labels(fam, x)
    after = cover_labels(fam, tuple(a + t for a in x))
    assert before == after


@given(comprehensive_families(), st.lists(small_rats, min_size=3, max_size=3))
@settings(max_examples=60, deadline=None)
def test_boundary_property(fam, x):
    t = tau(fam, x)
    eps = Q(1, 1000)
    on_boundary = tuple(a + t for a in x)
    above = tuple(a + t + eps for a in x)
    assert any(contains(u, on_boundary) for u in fam)
    assert not any(contains(u, above) for u in fam)


@given(
    comprehensive_families(),
    st.lists(small_rats, min_size=3, max_size=3),
    st.lists(st.fractions(min_value=0, max_value=3, max_denominator=4).map(rat), min_size=3, max_size=3),
)
@settings(max_examples=60, deadline=None)
def test_monotonicity(fam, x, drop):
    lower = tuple(a - d for a, d in zip(x, drop))
    for u in fam:
        if contains(u, x):
            assert contains(u, lower)


def test_properness_always_holds_for_class():
    u = orthant_set((3, 3, 3), (0, 5, 1))
    assert u.is_proper()
