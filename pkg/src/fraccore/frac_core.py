"""Exact decision procedures for fractional cores and cores of generalized
games, plus the embedding of classical TU/NTU games.

A point belongs to the fractional core exactly when it lies in every utility
set of some balanced firm set and escapes the interior of every utility set.
For this representation class a point escapes an interior iff the set's
uplift there is <= 0, so the fractional core is a finite union of
polyhedra: pick one primitive per active firm (membership) and one reversed
half-space per primitive anywhere (escape).  The solver explores exactly
that certificate space depth-first, pruning by LP feasibility; at every node
it additionally tests an LP point against the definition directly, which
short-circuits most nonempty instances long before the tree is exhausted.

Everything is deterministic: subsets in (size, lex) order, primitives and
half-spaces in construction order.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product

from .balance import balanced_subsets, balancing_weights
from .errors import CapExceeded, OverlapAmbiguity
from .exact_linear import (
    Feasible,
    Infeasible,
    LinearSystem,
    Optimal,
    Unbounded,
    maximize,
    solve_feasibility,
)
from .game_model import (
    CoalitionalNTUGame,
    ComprehensiveSet,
    FirmSystem,
    GeneralizedGame,
    HalfSpace,
    Primitive,
    TUGame,
    coalition_cylinder,
    coalitions,
    contains,
    tau,
)
from .rationals import ONE, ZERO, Q, vec

DEFAULT_SUBSET_CAP = 20
DEFAULT_NODE_CAP = 1_000_000


@dataclass(frozen=True)
class FractionalCoreWitness:
    point: tuple  # x' = base + level * ones
    base: tuple  # sum-zero representative
    level: "Q"  # the uplift of the base
    active: tuple  # balanced firm subset actually used
    weights: tuple  # balancing weights for the active subset


@dataclass(frozen=True)
class Nonempty:
    witness: FractionalCoreWitness


@dataclass(frozen=True)
class Empty:
    pass


@dataclass(frozen=True)
class CorePoint:
    point: tuple


@dataclass(frozen=True)
class BalancedGame:
    pass


@dataclass(frozen=True)
class ViolatedGame:
    subset: tuple
    point: tuple


@dataclass(frozen=True)
class Unsupported:
    reason: str


# ---------------------------------------------------------------------------
# embedding of classical games
# ---------------------------------------------------------------------------


def coalition_firm_system(n: int) -> FirmSystem:
    """Firms 1_S/|S| for every nonempty coalition, resource ones/n."""
    firms = []
    for coal in coalitions(n):
        v = [ZERO] * n
        share = Q(1, len(coal))
        for i in coal:
            v[i] = share
        firms.append(tuple(v))
    return FirmSystem(firms=tuple(firms), resource=(Q(1, n),) * n)


def embed_coalitional(game) -> GeneralizedGame:
    """Classical game -> generalized game over the coalition firm system.

    TU coalitions become single-half-space cylinders sum_S x_i <= value;
    NTU coalition sets become cylinders mentioning only their coordinates.
    The grand coalition is the distinguished firm (its firm vector equals
    the resource).
    """
    n = game.n
    coals = coalitions(n)
    utilities = []
    if isinstance(game, TUGame):
        for coal in coals:
            utilities.append(
                ComprehensiveSet((coalition_cylinder(n, coal, game.value(coal)),))
            )
    elif isinstance(game, CoalitionalNTUGame):
        for coal in coals:
            cs = game.sets[coal]
            prims = []
            for p in cs.primitives:
                lifted = []
                for h in p.halfspaces:
                    normal = [ZERO] * n
                    for local, player in enumerate(coal):
                        normal[player] = h.normal[local]
                    lifted.append(HalfSpace(tuple(normal), h.offset))
                prims.append(Primitive(tuple(lifted)))
            utilities.append(ComprehensiveSet(tuple(prims)))
    else:
        raise TypeError(f"cannot embed {type(game).__name__}")
    return GeneralizedGame(
        tuple(utilities),
        coalition_firm_system(n),
        distinguished=coals.index(tuple(range(n))),
    )


# ---------------------------------------------------------------------------
# witness verification (independent of the search)
# ---------------------------------------------------------------------------


def unblocked(game: GeneralizedGame, x) -> bool:
    """No firm's utility set contains x in its interior."""
    x = vec(x)
    return all(u.uplift(x) <= ZERO for u in game.utilities)


def verify_fractional_core_point(game: GeneralizedGame, x, active=None):
    """Check the definition directly; returns (ok, reason).

    With ``active`` given, membership is required for exactly that subset;
    otherwise the member set of x must support balancing weights.
    """
    x = vec(x)
    blocked = [i for i, u in enumerate(game.utilities) if u.uplift(x) > ZERO]
    if blocked:
        return False, f"blocked by firms {blocked}"
    if active is not None:
        members = tuple(sorted(active))
        missing = [i for i in members if not contains(game.utilities[i], x)]
        if missing:
            return False, f"point outside utility sets {missing}"
    else:
        members = tuple(
            i for i, u in enumerate(game.utilities) if contains(u, x)
        )
        if not members:
            return False, "point is in no utility set"
    weights = balancing_weights(members, game.firm_system)
    if weights is None:
        return False, f"member set {members} is not balanced"
    return True, "admissible and unblocked"


def make_witness(game: GeneralizedGame, x, active) -> FractionalCoreWitness:
    x = vec(x)
    n = game.dim
    level = sum(x, ZERO) / n
    base = tuple(c - level for c in x)
    assert tau(game.utilities, base) == level, "level must equal the uplift"
    active = tuple(sorted(active))
    weights = balancing_weights(active, game.firm_system)
    assert weights is not None
    return FractionalCoreWitness(x, base, level, active, weights)


# ---------------------------------------------------------------------------
# certificate search
# ---------------------------------------------------------------------------


class _Budget:
    __slots__ = ("left",)

    def __init__(self, n):
        self.left = n

    def spend(self):
        self.left -= 1
        if self.left < 0:
            raise CapExceeded("certificate search exceeded its node cap")


def _feasible_point(rows, n):
    res = solve_feasibility(LinearSystem(n, leq=tuple(rows)))
    return res.witness if isinstance(res, Feasible) else None


def _probe_point(rows, n):
    """A point pushed toward the upper boundary (max total payoff)."""
    res = maximize((ONE,) * n, LinearSystem(n, leq=tuple(rows)))
    if isinstance(res, (Optimal, Unbounded)):
        return res.witness
    return None


def _membership_rows(prim: Primitive):
    return [(h.normal, h.offset) for h in prim.halfspaces]


def _escape_options(prim: Primitive):
    """Rows forcing the point out of the primitive's interior (disjunctive)."""
    return [
        [(tuple(-a for a in h.normal), -h.offset)] for h in prim.halfspaces
    ]


def _search(n, rows, pending, accept, budget):
    """DFS over disjunctive row groups.  ``pending`` is a list of option
    lists; ``accept(point)`` is the exact definition check."""
    budget.spend()
    # forced extensions first: single-option groups add rows without branching
    while pending and len(pending[0]) == 1:
        rows = rows + pending[0][0]
        pending = pending[1:]
    point = _feasible_point(rows, n)
    if point is None:
        return None
    if accept(point):
        return point
    probe = _probe_point(rows, n)
    if probe is not None and accept(probe):
        return probe
    if not pending:
        # a full certificate's polyhedron: any feasible point qualifies;
        # reaching here with accept failing would indicate an interior
        # computed inconsistently with the membership rows
        raise OverlapAmbiguity("leaf certificate point failed re-verification")
    head, rest = pending[0], pending[1:]
    for option in head:
        found = _search(n, rows + option, rest, accept, budget)
        if found is not None:
            return found
    return None


def fractional_core_solve(
    game: GeneralizedGame,
    subset_cap: int = DEFAULT_SUBSET_CAP,
    node_cap: int = DEFAULT_NODE_CAP,
):
    """Decide fractional-core nonemptiness exactly.

    Iterates balanced firm subsets smallest-support first; for each,
    searches the certificate polyhedra (membership in one primitive per
    active firm, escape from every primitive's interior).
    """
    n = game.dim
    budget = _Budget(node_cap)
    all_prims = [p for u in game.utilities for p in u.primitives]
    escapes = [_escape_options(q) for q in all_prims]
    for subset in balanced_subsets(game.firm_system, "cone", subset_cap):

        def accept(point, _subset=subset):
            x = vec(point)
            if any(u.uplift(x) > ZERO for u in game.utilities):
                return False
            return all(contains(game.utilities[i], x) for i in _subset)

        memberships = [
            [_membership_rows(p) for p in game.utilities[i].primitives]
            for i in subset
        ]
        pending = memberships + escapes
        found = _search(n, [], pending, accept, budget)
        if found is not None:
            return Nonempty(make_witness(game, found, subset))
    return Empty()


def core_solve(
    game: GeneralizedGame,
    subset_cap: int = DEFAULT_SUBSET_CAP,
    node_cap: int = DEFAULT_NODE_CAP,
):
    """Decide core nonemptiness: a point of the distinguished firm's set
    escaping every other firm's interior."""
    if game.distinguished is None:
        raise ValueError("core_solve needs a distinguished firm")
    n = game.dim
    dist = game.distinguished
    budget = _Budget(node_cap)
    others = [
        p
        for f, u in enumerate(game.utilities)
        if f != dist
        for p in u.primitives
    ]

    def accept(point):
        if not contains(game.utilities[dist], point):
            return False
        return all(
            game.utilities[f].uplift(point) <= ZERO
            for f in range(game.firm_count)
            if f != dist
        )

    memberships = [
        [_membership_rows(p) for p in game.utilities[dist].primitives]
    ]
    pending = memberships + [_escape_options(q) for q in others]
    found = _search(n, [], pending, accept, budget)
    if found is None:
        return Empty()
    return CorePoint(vec(found))


def is_balanced_game(
    game: GeneralizedGame,
    subset_cap: int = DEFAULT_SUBSET_CAP,
):
    """Check that every balanced intersection sits inside the distinguished
    firm's set (which must be a single primitive)."""
    if game.distinguished is None:
        raise ValueError("is_balanced_game needs a distinguished firm")
    dist = game.distinguished
    target = game.utilities[dist]
    if len(target.primitives) > 1:
        return Unsupported("distinguished utility set must be a single primitive")
    target_rows = target.primitives[0].halfspaces
    n = game.dim
    for subset in balanced_subsets(game.firm_system, "cone", subset_cap):
        if dist in subset:
            continue  # the intersection then lies inside the target trivially
        prim_lists = [game.utilities[i].primitives for i in subset]
        for choice in product(*prim_lists):
            rows = []
            for prim in choice:
                rows.extend(_membership_rows(prim))
            sys = LinearSystem(n, leq=tuple(rows))
            for h in target_rows:
                res = maximize(h.normal, sys)
                if isinstance(res, Infeasible):
                    break
                if isinstance(res, Optimal) and res.value <= h.offset:
                    continue
                if isinstance(res, Optimal):
                    return ViolatedGame(subset, res.witness)
                # unbounded: walk the ray far enough to leave the target
                base, ray = res.witness, res.ray
                gain = sum(a * rdir for a, rdir in zip(h.normal, ray))
                assert gain > ZERO
                steps = (h.offset - sum(a * b for a, b in zip(h.normal, base))) / gain
                t = steps + ONE if steps > ZERO else ONE
                point = tuple(b + t * rdir for b, rdir in zip(base, ray))
                return ViolatedGame(subset, point)
    return BalancedGame()
