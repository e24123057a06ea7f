"""PL degree of labeled covers, rainbow detection, induced labelings.

The chordal map of a vertex labeling sends vertex u to the firm vector of
its (choice-reduced) label; its degree as a map to the sphere around the
resource is computed by exact signed ray crossing in affine-hull
coordinates.  A facet whose labels already admit convex balancing weights
means the chordal image hits the resource and no degree exists; that facet
is returned instead.
"""

from __future__ import annotations

from dataclasses import dataclass

from ..balance import balancing_weights, convex_balancing_weights
from ..errors import CapExceeded, DimensionMismatch, NotClosedManifold
from ..game_model import FirmSystem, GeneralizedGame, cover_labels
from ..linalg import det, gaussian_solve, rank, solve_square
from ..rationals import ONE, ZERO, Q, rat, vec
from .complexes import (
    OrientedComplex,
    SimplicialComplex,
    barycentric_subdivision,
    simplex_boundary,
)


@dataclass(frozen=True)
class LabeledCover:
    """Oriented complex, a nonempty firm-index label set per vertex, and the
    firm system the labels refer to."""

    oriented: OrientedComplex
    labels: tuple
    firm_system: FirmSystem

    def __post_init__(self):
        object.__setattr__(
            self, "labels", tuple(frozenset(ls) for ls in self.labels)
        )
        if len(self.labels) != self.oriented.complex.num_vertices:
            raise ValueError("one label set per vertex")
        m = self.firm_system.count
        for ls in self.labels:
            if not ls:
                raise ValueError("every vertex needs at least one label")
            if any(i < 0 or i >= m for i in ls):
                raise ValueError("label outside the firm range")


@dataclass(frozen=True)
class Degree:
    value: int


@dataclass(frozen=True)
class BalancedSimplexFound:
    facet: tuple


def lowest_label(labels) -> int:
    return min(labels)


def _affine_coordinates(fs: FirmSystem, k: int):
    """Coordinates of v_i - r in a canonical basis of their span.

    The span must have dimension k+1 for a degree on a k-manifold.
    """
    diffs = [tuple(a - b for a, b in zip(v, fs.resource)) for v in fs.firms]
    basis = []
    for d in diffs:
        if rank(basis + [list(d)]) > len(basis):
            basis.append(list(d))
    if len(basis) != k + 1:
        raise DimensionMismatch(
            f"affine hull of firms and resource has dimension {len(basis)}, "
            f"need {k + 1}"
        )
    cols = list(zip(*basis))  # dim x (k+1)
    coords = []
    for d in diffs:
        sol = gaussian_solve([list(row) for row in cols], list(d))
        assert sol is not None, "firm vector outside the measured span"
        coords.append(tuple(sol[0]))
    return coords


def _ray_candidates(k: int):
    s = 1
    while True:
        yield tuple(rat(s) ** p for p in range(k + 1))
        s += 1


def pl_degree(lc: LabeledCover, choice_rule=lowest_label):
    """Exact degree of the label-induced chordal map, or a balanced facet.

    Needs a closed coherently oriented complex.  The crossing ray is chosen
    from a deterministic moment-curve sequence and re-chosen until every
    facet is transversal (bad directions lie on finitely many hyperplanes,
    which the moment curve meets finitely often).
    """
    oc = lc.oriented
    K = oc.complex
    if any(len(inc) != 2 for inc in K.ridges().values()):
        raise NotClosedManifold("pl_degree needs every ridge in exactly two facets")
    if not oc.coherent():
        raise NotClosedManifold("orientation is not coherent")
    k = K.dim
    coords = _affine_coordinates(lc.firm_system, k)
    chosen = [choice_rule(ls) for ls in lc.labels]
    for facet in K.facets:
        label_set = sorted({chosen[u] for u in facet})
        if convex_balancing_weights(label_set, lc.firm_system) is not None:
            return BalancedSimplexFound(facet)
    # orientation convention: the sphere around the resource is oriented so
    # that the identity labeling of the standard simplex boundary has degree
    # +1; in the greedy difference basis that costs a factor (-1)^(k+1)
    normalizer = (-1) ** (k + 1)
    for ray in _ray_candidates(k):
        total = 0
        degenerate = False
        for facet, sign in zip(K.facets, oc.orientation):
            cols = [coords[chosen[u]] for u in facet]
            matrix = [[cols[j][row] for j in range(k + 1)] for row in range(k + 1)]
            sol = solve_square(matrix, list(ray))
            if sol is None:
                # degenerate image simplex: fine unless the ray meets its span
                if gaussian_solve(matrix, list(ray)) is not None:
                    degenerate = True
                    break
                continue
            if any(c == ZERO for c in sol):
                degenerate = True
                break
            if all(c > ZERO for c in sol):
                total += sign * (1 if det(matrix) > ZERO else -1)
        if not degenerate:
            return Degree(normalizer * total)
    raise AssertionError("unreachable: ray search always terminates")


def rainbow_simplices(lc: LabeledCover, mode: str = "cone"):
    """Facets whose vertex-label union contains a balanced firm subset."""
    check = balancing_weights if mode == "cone" else convex_balancing_weights
    if mode not in ("cone", "convex"):
        raise ValueError("mode must be 'cone' or 'convex'")
    out = []
    for facet in lc.oriented.complex.facets:
        union = sorted(set().union(*(lc.labels[u] for u in facet)))
        if check(union, lc.firm_system) is not None:
            out.append(facet)
    return out


def subdivide_cover(lc: LabeledCover) -> LabeledCover:
    """One barycentric subdivision; new vertices inherit the label set of
    the lowest vertex of their carrier face."""
    sub = barycentric_subdivision(lc.oriented)
    labels = tuple(lc.labels[min(face)] for face in sub.carriers)
    return LabeledCover(sub.oriented, labels, lc.firm_system)


def closed_star_cover(
    oc: OrientedComplex, coloring, firm_system: FirmSystem
) -> LabeledCover:
    """The cover by unions of closed vertex stars per color, as a labeled
    barycentric subdivision.

    A point belongs to the color-c set exactly when some facet containing
    its carrier face has a vertex of color c, so a subdivision vertex gets
    the union of the vertex colors over the facets containing its carrier.
    """
    sub = barycentric_subdivision(oc)
    face_colors = {}
    for facet in oc.complex.facets:
        colors = frozenset(coloring[v] for v in facet)
        from itertools import combinations as _comb

        for size in range(1, len(facet) + 1):
            for face in _comb(facet, size):
                face_colors[face] = face_colors.get(face, frozenset()) | colors
    labels = tuple(face_colors[face] for face in sub.carriers)
    return LabeledCover(sub.oriented, labels, firm_system)


# ---------------------------------------------------------------------------
# induced labelings of region boundaries
# ---------------------------------------------------------------------------

MAX_DEPTH = 6


@dataclass(frozen=True)
class SimplexRegion:
    """A geometric simplex given by its vertex positions in R^n."""

    vertices: tuple

    def __post_init__(self):
        object.__setattr__(self, "vertices", tuple(vec(v) for v in self.vertices))


@dataclass(frozen=True)
class CubeRegion:
    """An axis cube in sum-zero coordinates of R^n (frame e_i - e_last)."""

    center: tuple
    halfwidth: "Q"

    def __post_init__(self):
        object.__setattr__(self, "center", vec(self.center))
        object.__setattr__(self, "halfwidth", rat(self.halfwidth))


def _subdivide_with_positions(oc: OrientedComplex, positions, depth: int):
    for _ in range(depth):
        sub = barycentric_subdivision(oc)
        new_positions = []
        for face in sub.carriers:
            pts = [positions[v] for v in face]
            n = len(pts)
            new_positions.append(
                tuple(sum(col, ZERO) / n for col in zip(*pts))
            )
        oc = sub.oriented
        positions = new_positions
    return oc, positions


def _cube_boundary_grid(n_coords: int, center, halfwidth, depth: int):
    """Triangulated boundary of a cube in d = n_coords - 1 frame coords."""
    d = n_coords - 1
    if d not in (2, 3):
        raise DimensionMismatch("cube regions support payoff dimensions 3 and 4")
    steps = 2**depth
    frame = []
    for i in range(d):
        u = [ZERO] * n_coords
        u[i] = ONE
        u[-1] = -ONE
        frame.append(tuple(u))

    def position(coeffs):
        pos = list(center)
        for c, u in zip(coeffs, frame):
            for j in range(n_coords):
                pos[j] += halfwidth * c * u[j]
        return tuple(pos)

    verts = {}
    positions = []

    def vid(coeffs):
        key = tuple(coeffs)
        if key not in verts:
            verts[key] = len(positions)
            positions.append(position(key))
        return verts[key]

    facets = []
    grid = [rat(-1) + rat(2 * t) / steps for t in range(steps + 1)]
    if d == 2:
        # the four sides of a square, oriented as one counterclockwise cycle
        path = []
        for t in range(steps):
            path.append((grid[t], rat(-1)))
        for t in range(steps):
            path.append((rat(1), grid[t]))
        for t in range(steps):
            path.append((grid[steps - t], rat(1)))
        for t in range(steps):
            path.append((rat(-1), grid[steps - t]))
        ids = [vid(c) for c in path]
        m = len(ids)
        signs = []
        for a in range(m):
            u, w = ids[a], ids[(a + 1) % m]
            facets.append((u, w))
            signs.append(1 if u < w else -1)
        return (
            OrientedComplex(
                SimplicialComplex(len(positions), tuple(facets)), tuple(signs)
            ),
            positions,
        )
    # d == 3: six faces, each a triangulated grid; orientation fixed by
    # propagation afterwards (cube surface is connected and orientable)
    for axis in range(3):
        for side in (-1, 1):
            for a in range(steps):
                for b in range(steps):
                    corners = []
                    for da, db in ((0, 0), (1, 0), (1, 1), (0, 1)):
                        c = [None] * 3
                        c[axis] = rat(side)
                        c[(axis + 1) % 3] = grid[a + da]
                        c[(axis + 2) % 3] = grid[b + db]
                        corners.append(vid(tuple(c)))
                    facets.append(tuple(sorted((corners[0], corners[1], corners[2]))))
                    facets.append(tuple(sorted((corners[0], corners[2], corners[3]))))
    K = SimplicialComplex(len(positions), tuple(facets))
    from .complexes import propagate_orientation

    oc = propagate_orientation(K)
    assert oc is not None
    return oc, positions


def induce_labeling(game: GeneralizedGame, region, depth: int) -> LabeledCover:
    """Triangulate the region's boundary and label every vertex with its
    exact induced-cover membership set."""
    if depth > MAX_DEPTH:
        raise CapExceeded(f"subdivision depth {depth} exceeds cap {MAX_DEPTH}")
    n = game.dim
    if isinstance(region, SimplexRegion):
        pts = region.vertices
        if any(len(p) != n for p in pts):
            raise DimensionMismatch("region vertices must live in the payoff space")
        k = len(pts) - 1
        oc = simplex_boundary(k)
        positions = list(pts)
        oc, positions = _subdivide_with_positions(oc, positions, depth)
    elif isinstance(region, CubeRegion):
        if len(region.center) != n:
            raise DimensionMismatch("region center must live in the payoff space")
        oc, positions = _cube_boundary_grid(n, region.center, region.halfwidth, depth)
    else:
        raise TypeError("region must be a SimplexRegion or CubeRegion")
    labels = tuple(cover_labels(game.utilities, p) for p in positions)
    return LabeledCover(oc, labels, game.firm_system)
