import pytest

from helpers_fibered import product_bundle_complex, sphere_complex
from fraccore.errors import CoboundaryUnsolvable, NotSimplicial, NotSphere
from fraccore.topology.complexes import (
    propagate_orientation,
    simplex_boundary,
    validate_closed_manifold,
)
from fraccore.topology.hopf import first_homology, hopf_invariant
from fraccore.topology.s3_12 import COLORING, FACETS, checksum, load, SHA256


def test_asset_checksum_and_load():
    assert checksum() == SHA256
    oc, coloring = load()
    assert oc.complex.num_vertices == 12
    assert len(coloring) == 12
    assert sorted(coloring).count(0) == 3
    assert {coloring.count(c) for c in range(4)} == {3}


def test_asset_manifold_checks():
    oc, _ = load()
    rep = validate_closed_manifold(oc.complex)
    assert rep.closed and rep.connected and rep.orientable
    assert rep.euler == 0
    assert rep.links_ok


def test_asset_is_homology_sphere():
    oc, _ = load()
    betti, torsion = first_homology(oc.complex)
    assert betti == 0 and torsion == []


def test_asset_hopf_invariant_is_one():
    oc, coloring = load()
    assert hopf_invariant(oc, coloring) == 1


def test_orientation_reversal_negates_invariant():
    oc, coloring = load()
    assert hopf_invariant(oc.reversed(), coloring) == -1


def test_mirror_construction_cross_check():
    K, coloring = sphere_complex(flip=True)
    rep = validate_closed_manifold(K)
    assert rep.closed and rep.connected and rep.orientable and rep.euler == 0
    assert first_homology(K) == (0, [])
    oc = propagate_orientation(K)
    assert abs(hopf_invariant(oc, coloring)) == 1


def test_builder_reproduces_asset():
    K, coloring = sphere_complex(flip=False)
    assert K.facets == FACETS
    assert tuple(coloring) == COLORING


def test_constant_map_is_trivial():
    oc, _ = load()
    assert hopf_invariant(oc, [0] * 12) == 0


def test_every_facet_has_at_most_three_colors():
    _, coloring = load()
    for facet in FACETS:
        assert len({coloring[v] for v in facet}) <= 3


def test_four_colored_facet_rejected():
    oc = simplex_boundary(4)  # boundary of the 4-simplex is a 3-sphere
    with pytest.raises(NotSimplicial):
        hopf_invariant(oc, [0, 1, 2, 3, 0])


def test_non_sphere_input_rejected():
    oc = simplex_boundary(2)
    with pytest.raises(NotSphere):
        hopf_invariant(oc, [0, 1, 2])


def test_product_bundle_has_unsolvable_coboundary():
    K, coloring = product_bundle_complex()
    rep = validate_closed_manifold(K)
    assert rep.closed and rep.connected and rep.orientable
    assert rep.euler == 0 and rep.links_ok
    betti, torsion = first_homology(K)
    assert betti == 1  # not a homology sphere
    oc = propagate_orientation(K)
    with pytest.raises(CoboundaryUnsolvable):
        hopf_invariant(oc, coloring)
