"""Test fixtures: fibered assemblies related to the sphere asset.

`product_bundle_complex` glues four trivially fibered solid tori over the
faces of a tetrahedron (all transitions untwisted), giving the product
circle bundle over the 2-sphere; its second cohomology is nonzero, which
exercises the coboundary-unsolvable path.  `mirror_sphere_complex` is the
level-reversed build of the shipped sphere asset, an independent
construction whose coloring map has the opposite Hopf sign.
"""

from fraccore.topology.complexes import SimplicialComplex


def _vid(color, a):
    return 3 * color + (a % 3)


def product_bundle_complex():
    facets = set()
    for face in [(0, 1, 2), (0, 1, 3), (0, 2, 3), (1, 2, 3)]:
        i, j, k = face
        for a in range(3):
            t1 = (_vid(i, a), _vid(j, a), _vid(k, a), _vid(i, a + 1))
            t2 = (_vid(j, a), _vid(k, a), _vid(i, a + 1), _vid(j, a + 1))
            t3 = (_vid(k, a), _vid(i, a + 1), _vid(j, a + 1), _vid(k, a + 1))
            for t in (t1, t2, t3):
                facets.add(tuple(sorted(t)))
    return SimplicialComplex(12, tuple(sorted(facets))), [v // 3 for v in range(12)]


def _rim(i, l, flip=False):
    if flip:
        i = -i
    return 3 * (i % 3) + (l % 3)


def _core(l):
    return 9 + (l % 3)


def sphere_complex(flip=False):
    """The shipped asset's construction; ``flip`` mirrors the rim order,
    producing the opposite-chirality assembly."""
    tets = []
    for l in range(3):
        for i in range(3):
            a = _rim(i, l, flip)
            b = _rim(i + 1, l, flip)
            a1 = _rim(i, l + 1, flip)
            b1 = _rim(i + 1, l + 1, flip)
            c0 = _core(l)
            c1 = _core(l + 1)
            tets += [(c0, b, a, c1), (b, a, c1, b1), (a, c1, b1, a1)]
    for i in range(3):
        a = [_rim(i, l, flip) for l in range(3)]
        b = [_rim(i + 1, l, flip) for l in range(3)]
        tets += [
            (a[0], a[1], a[2], b[2]),
            (a[0], a[1], b[1], b[2]),
            (a[0], a[2], b[2], b[0]),
            (a[0], b[0], b[1], b[2]),
        ]
    facets = sorted(set(tuple(sorted(t)) for t in tets))
    coloring = [0] * 12
    for i in range(3):
        for l in range(3):
            coloring[_rim(i, l, flip)] = (l - i) % 3
    for l in range(3):
        coloring[_core(l)] = 3
    return SimplicialComplex(12, tuple(facets)), coloring
