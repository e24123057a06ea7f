"""Data model for TU, coalitional NTU and generalized cooperative games.

Utility sets are finite unions of half-space intersections whose normals are
componentwise nonnegative (and nonzero).  That class is closed under the
constructions used throughout the package (coalition cylinders, point
orthants, comprehensive hulls of simplices), is automatically comprehensive,
and admits a closed form for the best uniform raise ("uplift") of a point,
which keeps every membership and blocking decision exact.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations

from .errors import DimensionMismatch
from .exact_linear import Feasible, LinearSystem, maximize, solve_feasibility
from .rationals import ONE, ZERO, Q, dot, rat, vec


@dataclass(frozen=True)
class HalfSpace:
    """{x : <normal, x> <= offset} with normal >= 0, normal != 0."""

    normal: tuple
    offset: "Q"

    def __post_init__(self):
        object.__setattr__(self, "normal", vec(self.normal))
        object.__setattr__(self, "offset", rat(self.offset))
        if any(a < ZERO for a in self.normal):
            raise ValueError("half-space normal must be componentwise nonnegative")
        if all(a == ZERO for a in self.normal):
            raise ValueError("half-space normal must be nonzero")

    @property
    def dim(self) -> int:
        return len(self.normal)

    def gauge(self) -> "Q":
        """<normal, all-ones>; positive by the normal invariants."""
        return sum(self.normal, ZERO)


@dataclass(frozen=True)
class Primitive:
    """Closed convex comprehensive cell: the intersection of its half-spaces."""

    halfspaces: tuple

    def __post_init__(self):
        object.__setattr__(self, "halfspaces", tuple(self.halfspaces))
        if not self.halfspaces:
            raise ValueError("a primitive needs at least one half-space")
        dims = {h.dim for h in self.halfspaces}
        if len(dims) != 1:
            raise DimensionMismatch("half-spaces of mixed dimension in one primitive")

    @property
    def dim(self) -> int:
        return self.halfspaces[0].dim

    def contains(self, x) -> bool:
        return all(dot(h.normal, x) <= h.offset for h in self.halfspaces)

    def uplift(self, x) -> "Q":
        """max t with x + t*ones inside this cell (finite: gauges are > 0)."""
        return min((h.offset - dot(h.normal, x)) / h.gauge() for h in self.halfspaces)


@dataclass(frozen=True)
class ComprehensiveSet:
    """Finite union of primitives over a common dimension."""

    primitives: tuple

    def __post_init__(self):
        object.__setattr__(self, "primitives", tuple(self.primitives))
        if not self.primitives:
            raise ValueError("a comprehensive set needs at least one primitive")
        dims = {p.dim for p in self.primitives}
        if len(dims) != 1:
            raise DimensionMismatch("primitives of mixed dimension in one set")

    @property
    def dim(self) -> int:
        return self.primitives[0].dim

    def uplift(self, x) -> "Q":
        return max(p.uplift(x) for p in self.primitives)

    def is_proper(self) -> bool:
        """True iff some point is excluded (exclusion witness constructed).

        Positive gauges make the all-ones ray escape every primitive, so the
        origin raised one step past its uplift is always a witness.
        """
        origin = (ZERO,) * self.dim
        t = self.uplift(origin) + ONE
        witness = tuple(t for _ in range(self.dim))
        return not any(p.contains(witness) for p in self.primitives)


def point_orthant(p) -> Primitive:
    """p - R^n_+ : everything componentwise below p."""
    p = vec(p)
    n = len(p)
    hs = []
    for i in range(n):
        normal = [ZERO] * n
        normal[i] = ONE
        hs.append(HalfSpace(tuple(normal), p[i]))
    return Primitive(tuple(hs))


def coalition_cylinder(n: int, members, bound) -> Primitive:
    """{x : sum over members <= bound} as a single half-space in R^n."""
    normal = [ZERO] * n
    for i in members:
        normal[i] = ONE
    return Primitive((HalfSpace(tuple(normal), rat(bound)),))


def comprehensive_hull(points) -> Primitive:
    """Exact half-space representation of conv(points) - R^n_+.

    The polyhedron is full-dimensional with recession cone the negative
    orthant, so every facet normal is componentwise nonnegative.  Facets are
    enumerated by their incident generators: a subset of the points plus a
    subset of the dropped axes whose orthogonality system has a line of
    solutions; candidates failing nonnegativity or validity are discarded.
    """
    from itertools import combinations

    from .linalg import nullspace

    pts = [vec(p) for p in points]
    n = len(pts[0])
    if any(len(p) != n for p in pts):
        raise DimensionMismatch("points of mixed dimension")
    seen = {}
    for t_size in range(1, len(pts) + 1):
        for t_idx in combinations(range(len(pts)), t_size):
            anchor = pts[t_idx[0]]
            rows = [
                [pts[i][k] - anchor[k] for k in range(n)] for i in t_idx[1:]
            ]
            for j_size in range(0, n):
                for axes in combinations(range(n), j_size):
                    system = list(rows)
                    for j in axes:
                        e = [ZERO] * n
                        e[j] = ONE
                        system.append(e)
                    if not system:
                        continue
                    kernel = nullspace(system)
                    if len(kernel) != 1:
                        continue
                    normal = kernel[0]
                    if all(c <= ZERO for c in normal):
                        normal = tuple(-c for c in normal)
                    if any(c < ZERO for c in normal) or all(c == ZERO for c in normal):
                        continue
                    offset = dot(normal, anchor)
                    if any(dot(normal, p) > offset for p in pts):
                        continue
                    scale = sum(normal, ZERO)
                    key = (tuple(c / scale for c in normal), offset / scale)
                    seen[key] = HalfSpace(key[0], key[1])
    if not seen:
        raise ValueError("no supporting half-spaces found")
    return Primitive(tuple(seen[k] for k in sorted(seen)))


def contains(cset: ComprehensiveSet, x) -> bool:
    """Exact membership in the union."""
    x = vec(x)
    if len(x) != cset.dim:
        raise DimensionMismatch(f"point of dim {len(x)} vs set of dim {cset.dim}")
    return any(p.contains(x) for p in cset.primitives)


def tau(utilities, x) -> "Q":
    """Best uniform raise: max t with x + t*ones in the union of all sets.

    Closed form: max over primitives of min over half-spaces of
    (offset - <a,x>) / <a,ones>; finite because every gauge is positive.
    """
    x = vec(x)
    utilities = tuple(utilities)
    if not utilities:
        raise ValueError("tau needs at least one utility set")
    for u in utilities:
        if u.dim != len(x):
            raise DimensionMismatch("point dimension does not match utilities")
    return max(u.uplift(x) for u in utilities)


def in_induced_cover(utilities, i: int, x) -> bool:
    """True iff set i attains the global uplift at x (x + tau(x)*ones in U_i)."""
    utilities = tuple(utilities)
    x = vec(x)
    level = tau(utilities, x)
    return utilities[i].uplift(x) == level


def cover_labels(utilities, x) -> frozenset:
    """All indices whose set attains the uplift at x (never empty)."""
    utilities = tuple(utilities)
    x = vec(x)
    best = max(u.uplift(x) for u in utilities)
    return frozenset(i for i, u in enumerate(utilities) if u.uplift(x) == best)


@dataclass(frozen=True)
class FirmSystem:
    """Firm resource vectors in R^d plus the resource vector r."""

    firms: tuple
    resource: tuple

    def __post_init__(self):
        object.__setattr__(self, "firms", tuple(vec(v) for v in self.firms))
        object.__setattr__(self, "resource", vec(self.resource))
        d = len(self.resource)
        for v in self.firms:
            if len(v) != d:
                raise DimensionMismatch("firm vector dimension != resource dimension")

    @property
    def count(self) -> int:
        return len(self.firms)

    @property
    def dim(self) -> int:
        return len(self.resource)

    def check_positive_totals(self) -> bool:
        return all(sum(v, ZERO) > ZERO for v in self.firms)

    def resource_in_cone(self) -> bool:
        m, d = self.count, self.dim
        eqs = []
        for k in range(d):
            eqs.append((tuple(self.firms[i][k] for i in range(m)), self.resource[k]))
        nonneg = []
        for i in range(m):
            e = [ZERO] * m
            e[i] = -ONE
            nonneg.append((tuple(e), ZERO))
        return isinstance(
            solve_feasibility(LinearSystem(m, equalities=tuple(eqs), leq=tuple(nonneg))),
            Feasible,
        )


@dataclass(frozen=True)
class GeneralizedGame:
    """Utility sets in R^n, a firm system in R^d, optional distinguished firm."""

    utilities: tuple
    firm_system: FirmSystem
    distinguished: int | None = None

    def __post_init__(self):
        object.__setattr__(self, "utilities", tuple(self.utilities))
        if len(self.utilities) != self.firm_system.count:
            raise DimensionMismatch("one utility set per firm is required")
        dims = {u.dim for u in self.utilities}
        if len(dims) > 1:
            raise DimensionMismatch("utility sets of mixed dimension")
        if self.distinguished is not None and not (
            0 <= self.distinguished < len(self.utilities)
        ):
            raise IndexError("distinguished firm index out of range")

    @property
    def dim(self) -> int:
        return self.utilities[0].dim

    @property
    def firm_count(self) -> int:
        return len(self.utilities)


@dataclass(frozen=True)
class CheckResult:
    name: str
    passed: bool
    detail: str = ""


@dataclass(frozen=True)
class ValidationReport:
    checks: tuple

    @property
    def ok(self) -> bool:
        return all(c.passed for c in self.checks)

    def failures(self):
        return [c for c in self.checks if not c.passed]


def validate_game(game: GeneralizedGame) -> ValidationReport:
    """Run the definitional checks; failures are reported, not raised."""
    checks = []
    # normal nonnegativity is structural (constructors reject violations)
    checks.append(CheckResult("normals_nonnegative", True, "enforced at construction"))
    for i, u in enumerate(game.utilities):
        checks.append(
            CheckResult(
                f"utility_{i}_proper",
                u.is_proper(),
                "some point must be excluded",
            )
        )
    fs = game.firm_system
    checks.append(
        CheckResult(
            "firm_totals_positive",
            fs.check_positive_totals(),
            "<v_i, ones> > 0 for every firm",
        )
    )
    checks.append(
        CheckResult(
            "resource_nonzero", any(c != ZERO for c in fs.resource), "r != 0"
        )
    )
    checks.append(
        CheckResult("resource_in_cone", fs.resource_in_cone(), "r in cone(V)")
    )
    return ValidationReport(tuple(checks))


# ---------------------------------------------------------------------------
# classical games
# ---------------------------------------------------------------------------


def coalitions(n: int):
    """All nonempty coalitions of range(n) in (size, lex) order."""
    out = []
    for size in range(1, n + 1):
        out.extend(tuple(c) for c in combinations(range(n), size))
    return out


@dataclass(frozen=True)
class TUGame:
    """Characteristic function on all nonempty coalitions of range(n)."""

    n: int
    values: dict = field(compare=False)

    def __post_init__(self):
        fixed = {}
        for coal, val in self.values.items():
            key = tuple(sorted(coal))
            if not key or any(i < 0 or i >= self.n for i in key):
                raise ValueError(f"bad coalition {coal}")
            fixed[key] = rat(val)
        object.__setattr__(self, "values", fixed)
        missing = [c for c in coalitions(self.n) if c not in fixed]
        if missing:
            raise ValueError(f"missing coalition values: {missing}")

    def value(self, coal) -> "Q":
        return self.values[tuple(sorted(coal))]

    @property
    def grand(self) -> tuple:
        return tuple(range(self.n))


@dataclass(frozen=True)
class CoalitionalNTUGame:
    """One comprehensive set V(S) in R^S per nonempty coalition S.

    ``sets`` maps sorted coalition tuples to ComprehensiveSets over |S|
    coordinates, ordered as the sorted members.
    """

    n: int
    sets: dict = field(compare=False)

    def __post_init__(self):
        fixed = {}
        for coal, cs in self.sets.items():
            key = tuple(sorted(coal))
            fixed[key] = cs
            if cs.dim != len(key):
                raise DimensionMismatch(
                    f"V({key}) must live in {len(key)} coordinates"
                )
        object.__setattr__(self, "sets", fixed)
        missing = [c for c in coalitions(self.n) if c not in fixed]
        if missing:
            raise ValueError(f"missing coalition sets: {missing}")

    def bounded_above(self) -> bool:
        """Each V(S) cut to the nonnegative orthant must be bounded (by LP)."""
        from .exact_linear import Unbounded

        for coal, cs in self.sets.items():
            k = len(coal)
            for p in cs.primitives:
                rows = [(h.normal, h.offset) for h in p.halfspaces]
                nonneg = []
                for j in range(k):
                    e = [ZERO] * k
                    e[j] = -ONE
                    nonneg.append((tuple(e), ZERO))
                sys = LinearSystem(k, leq=tuple(rows) + tuple(nonneg))
                for j in range(k):
                    obj = [ZERO] * k
                    obj[j] = ONE
                    if isinstance(maximize(obj, sys), Unbounded):
                        return False
        return True
