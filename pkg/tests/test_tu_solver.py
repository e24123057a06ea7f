import random

from fraccore.game_model import TUGame, coalitions
from fraccore.gallery import loss_sharing_tu, loss_sharing_tu_modified
from fraccore.rationals import Q
from fraccore.tu_solver import (
    Accept,
    Balanced,
    CorePoint,
    Empty,
    Reject,
    Violated,
    check_core_point,
    core_nonempty,
    is_balanced_tu,
)


def test_worked_core_exists():
    game = loss_sharing_tu()
    res = core_nonempty(game)
    assert isinstance(res, CorePoint)
    assert check_core_point(game, res.allocation) == Accept()
    assert check_core_point(game, (-8, -12, -15)) == Accept()


def test_worked_core_empties_when_grand_weakens():
    game = loss_sharing_tu_modified()
    assert core_nonempty(game) == Empty()


def test_additive_game_core_is_the_valuation():
    c = (Q(3), Q(-1), Q(5))
    values = {coal: sum(c[i] for i in coal) for coal in coalitions(3)}
    game = TUGame(3, values)
    res = core_nonempty(game)
    assert isinstance(res, CorePoint)
    assert check_core_point(game, c) == Accept()


def test_balanced_original():
    res = is_balanced_tu(loss_sharing_tu())
    assert isinstance(res, Balanced)
    assert res.optimum == Q(-35)


def test_violated_family_is_the_pair_family():
    res = is_balanced_tu(loss_sharing_tu_modified())
    assert isinstance(res, Violated)
    assert res.family.subsets == ((0, 1), (0, 2), (1, 2))
    assert res.family.weights == (Q(1, 2), Q(1, 2), Q(1, 2))
    # half of each pair's value: -11 - 14 - 16
    assert res.value == Q(-41)
    assert res.family.verify(3)


def test_zero_game_balanced():
    values = {coal: 0 for coal in coalitions(3)}
    assert isinstance(is_balanced_tu(TUGame(3, values)), Balanced)


def test_reject_blocking_coalition():
    game = loss_sharing_tu()
    res = check_core_point(game, (-35, 0, 0))
    assert isinstance(res, Reject)
    assert res.coalition == (0,)


def test_reject_inefficient():
    game = loss_sharing_tu()
    res = check_core_point(game, (0, 0, 0))
    assert isinstance(res, Reject)
    assert res.coalition is None


def _random_tu(rng, n):
    values = {coal: rng.randint(-20, 20) for coal in coalitions(n)}
    return TUGame(n, values)


def test_core_balancedness_equivalence_quick():
    rng = random.Random(4242)
    for _ in range(150):
        n = rng.randint(2, 4)
        game = _random_tu(rng, n)
        has_core = isinstance(core_nonempty(game), CorePoint)
        balanced = isinstance(is_balanced_tu(game), Balanced)
        assert has_core == balanced


def test_every_core_point_reverifies():
    rng = random.Random(11)
    for _ in range(60):
        game = _random_tu(rng, 3)
        res = core_nonempty(game)
        if isinstance(res, CorePoint):
            assert check_core_point(game, res.allocation) == Accept()
