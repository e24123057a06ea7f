import pytest

from fraccore.errors import BoundaryTouchesBalanced, NotIsolated
from fraccore.gallery import single_bubble_cover, two_bubble_cover
from fraccore.game_model import FirmSystem
from fraccore.topology.complexes import OrientedComplex, SimplicialComplex, propagate_orientation
from fraccore.topology.degree import Degree, LabeledCover
from fraccore.topology.index import (
    balanced_components,
    component_index,
    index_sum_check,
)


def test_single_bubble_indices():
    lc = single_bubble_cover(1)
    comps = balanced_components(lc)
    assert len(comps) == 1
    assert component_index(lc, comps[0]) == 1
    lc2 = single_bubble_cover(-1)
    comps2 = balanced_components(lc2)
    assert len(comps2) == 1
    assert component_index(lc2, comps2[0]) == -1


@pytest.mark.parametrize(
    "signs,boundary,indices",
    [((1, 1), 2, [1, 1]), ((1, -1), 0, [1, -1]), ((-1, -1), -2, [-1, -1])],
)
def test_two_bubble_index_sum(signs, boundary, indices):
    lc = two_bubble_cover(*signs)
    rep = index_sum_check(lc)
    assert rep.boundary_degree == Degree(boundary)
    assert [ix for _, ix in rep.components] == indices
    assert rep.sum_matches


def _two_ring_cover(center_labels, rim_label=0):
    """A disk with an inner fan (six triangles around vertex 0) and an
    outer annulus ring, so the inner component stays off the boundary."""
    facets = []
    for i in range(6):
        facets.append(tuple(sorted((0, 1 + i, 1 + (i + 1) % 6))))
    for i in range(6):
        a, b = 1 + i, 1 + (i + 1) % 6
        a2, b2 = 7 + i, 7 + (i + 1) % 6
        facets.append(tuple(sorted((a, b, b2))))
        facets.append(tuple(sorted((a, a2, b2))))
    K = SimplicialComplex(13, tuple(facets))
    oc = propagate_orientation(K)
    fs = FirmSystem(firms=[(2, 1), (0, 2), (1, 0)], resource=(1, 1))
    labels = [center_labels] + [frozenset({rim_label})] * 12
    return LabeledCover(oc, tuple(labels), fs)


def test_constant_boundary_component_has_index_zero():
    # the center vertex carries all three labels, so the inner fan is one
    # balanced component; its neighborhood boundary is constantly labeled
    lc = _two_ring_cover(frozenset({0, 1, 2}))
    comps = balanced_components(lc)
    assert len(comps) == 1 and len(comps[0]) == 6
    assert component_index(lc, comps[0]) == 0


def test_component_validation():
    lc = single_bubble_cover(1)
    with pytest.raises(ValueError):
        component_index(lc, frozenset({0}))  # facet 0 is not balanced


def test_not_isolated_raises():
    lc = two_bubble_cover(1, 1)
    comps = balanced_components(lc)
    assert len(comps) == 2
    # passing only one half of a genuinely split pair works; passing a
    # proper subset of one component trips the isolation check
    first = comps[0]
    partial = frozenset(list(sorted(first))[:1])
    if partial != first:
        with pytest.raises(NotIsolated):
            component_index(lc, partial)


def test_boundary_touching_component_raises():
    # a single triangle region whose only facet is balanced: the component
    # touches the region's own boundary, so no isolating collar exists
    K = SimplicialComplex(3, ((0, 1, 2),))
    oc = OrientedComplex(K, (1,))
    fs = FirmSystem(firms=[(2, 1), (0, 2), (1, 0)], resource=(1, 1))
    lc = LabeledCover(oc, (frozenset({0}), frozenset({1}), frozenset({2})), fs)
    comps = balanced_components(lc)
    assert comps
    with pytest.raises(BoundaryTouchesBalanced):
        component_index(lc, comps[0])
