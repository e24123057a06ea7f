"""Exact rational linear feasibility and optimization.

Two-phase primal simplex over exact rationals with Bland's rule (lowest
eligible index for both entering and leaving variables), which guarantees
termination.  Variables are free; internally they are split into positive
and negative parts.  Strict inequalities are reduced to maximizing a uniform
slack variable capped at 1, so no epsilon heuristics appear anywhere.

All functions are pure and safe to call concurrently.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import MalformedSystem
from .rationals import ONE, ZERO, Q, rat, vec


@dataclass(frozen=True)
class LinearSystem:
    """A system over ``num_vars`` free rational variables.

    ``equalities`` rows mean <a,x> = b, ``leq`` rows <a,x> <= b and ``lt``
    rows <a,x> < b.
    """

    num_vars: int
    equalities: tuple = ()
    leq: tuple = ()
    lt: tuple = ()

    def __post_init__(self):
        object.__setattr__(
            self, "equalities", tuple((vec(a), rat(b)) for a, b in self.equalities)
        )
        object.__setattr__(self, "leq", tuple((vec(a), rat(b)) for a, b in self.leq))
        object.__setattr__(self, "lt", tuple((vec(a), rat(b)) for a, b in self.lt))
        if self.num_vars < 0:
            raise MalformedSystem("negative variable count")
        for a, _ in self.equalities + self.leq + self.lt:
            if len(a) != self.num_vars:
                raise MalformedSystem(
                    f"row of length {len(a)} in a system over {self.num_vars} variables"
                )


@dataclass(frozen=True)
class Feasible:
    witness: tuple


@dataclass(frozen=True)
class Infeasible:
    pass


@dataclass(frozen=True)
class Optimal:
    value: "Q"
    witness: tuple


@dataclass(frozen=True)
class Unbounded:
    """A feasible point plus a ray along which the objective grows."""

    witness: tuple
    ray: tuple


# ---------------------------------------------------------------------------
# simplex core: max c.y  s.t.  A y = b, y >= 0
# ---------------------------------------------------------------------------


def _pivot(rows, obj, basis, r, col):
    prow = rows[r]
    inv = ONE / prow[col]
    if inv != ONE:
        rows[r] = prow = [x * inv for x in prow]
    for i, row in enumerate(rows):
        if i != r and row[col] != ZERO:
            f = row[col]
            rows[i] = [x - f * p for x, p in zip(row, prow)]
    f = obj[col]
    if f != ZERO:
        obj[:] = [x - f * p for x, p in zip(obj, prow)]
    basis[r] = col


def _bland_loop(rows, obj, basis, ncols):
    """Run primal simplex to optimality.  Returns None, or the entering
    column index if the problem is unbounded in that direction."""
    while True:
        col = next((j for j in range(ncols) if obj[j] < ZERO), None)
        if col is None:
            return None
        best = None  # (ratio, basis var, row index)
        for i, row in enumerate(rows):
            if row[col] > ZERO:
                ratio = row[-1] / row[col]
                key = (ratio, basis[i])
                if best is None or key < best[0]:
                    best = (key, i)
        if best is None:
            return col
        _pivot(rows, obj, basis, best[1], col)


def _objective_row(rows, basis, c, ncols):
    obj = [-cj for cj in c] + [ZERO]
    for i, bi in enumerate(basis):
        cb = c[bi]
        if cb != ZERO:
            obj = [x + cb * y for x, y in zip(obj, rows[i])]
    return obj


def _solve_standard(a_rows, b, c):
    """max c.y s.t. a_rows y = b, y >= 0.

    Returns ("infeasible",) | ("optimal", value, y) | ("unbounded", y, ray).
    """
    m = len(a_rows)
    n = len(c)
    rows = []
    for arow, bi in zip(a_rows, b):
        if bi < ZERO:
            rows.append([-x for x in arow] + [-bi])
        else:
            rows.append(list(arow) + [bi])
    # phase 1: one artificial per row, minimize their sum
    for i, row in enumerate(rows):
        rhs = row.pop()
        row.extend(ONE if j == i else ZERO for j in range(m))
        row.append(rhs)
    basis = list(range(n, n + m))
    c1 = [ZERO] * n + [-ONE] * m
    obj = _objective_row(rows, basis, c1, n + m)
    _bland_loop(rows, obj, basis, n + m)  # bounded: objective <= 0
    if obj[-1] < ZERO:
        return ("infeasible",)
    # drive leftover artificials out of the basis; drop redundant rows
    keep = []
    for i in range(len(rows)):
        if basis[i] >= n:
            col = next((j for j in range(n) if rows[i][j] != ZERO), None)
            if col is None:
                continue  # redundant constraint
            _pivot(rows, obj, basis, i, col)
        keep.append(i)
    rows = [rows[i] for i in keep]
    basis = [basis[i] for i in keep]
    rows = [row[:n] + [row[-1]] for row in rows]
    # phase 2
    obj = _objective_row(rows, basis, list(c), n)
    entering = _bland_loop(rows, obj, basis, n)
    y = [ZERO] * n
    for i, bi in enumerate(basis):
        y[bi] = rows[i][-1]
    if entering is not None:
        ray = [ZERO] * n
        ray[entering] = ONE
        for i, bi in enumerate(basis):
            ray[bi] = -rows[i][entering]
        return ("unbounded", y, ray)
    return ("optimal", obj[-1], y)


# ---------------------------------------------------------------------------
# public operations over free-variable systems
# ---------------------------------------------------------------------------


def _standard_form(objective, equalities, leqs, n):
    """Split x into u - w and add one slack per inequality."""
    nslack = len(leqs)
    a_rows = []
    b = []
    for a, rhs in equalities:
        a_rows.append(list(a) + [-x for x in a] + [ZERO] * nslack)
        b.append(rhs)
    for k, (a, rhs) in enumerate(leqs):
        srow = [ZERO] * nslack
        srow[k] = ONE
        a_rows.append(list(a) + [-x for x in a] + srow)
        b.append(rhs)
    c = list(objective) + [-x for x in objective] + [ZERO] * nslack
    return a_rows, b, c


def _recover(y, n):
    return tuple(y[j] - y[n + j] for j in range(n))


def maximize(objective, sys: LinearSystem):
    """Exact maximum of <objective, x> over a system without strict rows."""
    objective = vec(objective)
    if len(objective) != sys.num_vars:
        raise MalformedSystem("objective length does not match variable count")
    if sys.lt:
        raise MalformedSystem("maximize does not accept strict inequalities")
    if sys.num_vars == 0:
        ok = all(b >= ZERO for _, b in sys.leq) and all(
            b == ZERO for _, b in sys.equalities
        )
        return Optimal(ZERO, ()) if ok else Infeasible()
    a_rows, b, c = _standard_form(objective, sys.equalities, sys.leq, sys.num_vars)
    res = _solve_standard(a_rows, b, c)
    if res[0] == "infeasible":
        return Infeasible()
    if res[0] == "unbounded":
        return Unbounded(_recover(res[1], sys.num_vars), _recover(res[2], sys.num_vars))
    return Optimal(res[1], _recover(res[2], sys.num_vars))


def solve_feasibility(sys: LinearSystem):
    """Decide exact feasibility, strict rows included.

    With strict rows present, maximizes a uniform slack s (capped at 1) over
    <a,x> + s <= b; the system has a rational solution iff the optimum is
    positive.
    """
    if not sys.lt:
        res = maximize([ZERO] * sys.num_vars, sys)
        if isinstance(res, Infeasible):
            return Infeasible()
        return Feasible(res.witness)
    n = sys.num_vars
    eqs = tuple((tuple(a) + (ZERO,), b) for a, b in sys.equalities)
    leqs = [(tuple(a) + (ZERO,), b) for a, b in sys.leq]
    leqs += [(tuple(a) + (ONE,), b) for a, b in sys.lt]
    leqs.append(((ZERO,) * n + (ONE,), ONE))
    relaxed = LinearSystem(n + 1, eqs, tuple(leqs))
    res = maximize([ZERO] * n + [ONE], relaxed)
    if isinstance(res, Infeasible) or res.value <= ZERO:
        return Infeasible()
    return Feasible(res.witness[:n])
