"""JSON formats: games, TU games, labeled complexes, reports.

Rationals serialize as plain integers when integral and as "p/q" strings
otherwise; serialization is canonical (sorted keys, two-space indent, one
trailing newline) so parse/serialize round-trips are byte-identical.
"""

from __future__ import annotations

import json

from .game_model import (
    ComprehensiveSet,
    FirmSystem,
    GeneralizedGame,
    HalfSpace,
    Primitive,
    TUGame,
)
from .rationals import rat, rat_json
from .topology.complexes import OrientedComplex, SimplicialComplex
from .topology.degree import LabeledCover


class MalformedInput(ValueError):
    """Raised with a path to the offending field."""


def serialize(obj) -> str:
    return json.dumps(obj, indent=2, sort_keys=True) + "\n"


def _num(value, path):
    try:
        return rat(value)
    except (ValueError, TypeError) as exc:
        raise MalformedInput(f"{path}: not a rational: {value!r}") from exc


def _numvec(values, path):
    if not isinstance(values, list):
        raise MalformedInput(f"{path}: expected a list")
    return tuple(_num(v, f"{path}[{i}]") for i, v in enumerate(values))


def game_to_json(game: GeneralizedGame) -> dict:
    return {
        "schema": "fraccore.game/1",
        "dimension": game.dim,
        "firms": [[rat_json(c) for c in v] for v in game.firm_system.firms],
        "resource": [rat_json(c) for c in game.firm_system.resource],
        "utilities": [
            {
                "primitives": [
                    {
                        "halfspaces": [
                            {
                                "a": [rat_json(c) for c in h.normal],
                                "b": rat_json(h.offset),
                            }
                            for h in p.halfspaces
                        ]
                    }
                    for p in u.primitives
                ]
            }
            for u in game.utilities
        ],
        "distinguished": game.distinguished,
    }


def game_from_json(obj) -> GeneralizedGame:
    if not isinstance(obj, dict):
        raise MalformedInput("$: expected an object")
    try:
        utilities = []
        for ui, uobj in enumerate(obj["utilities"]):
            prims = []
            for pi, pobj in enumerate(uobj["primitives"]):
                hss = []
                for hi, hobj in enumerate(pobj["halfspaces"]):
                    path = f"$.utilities[{ui}].primitives[{pi}].halfspaces[{hi}]"
                    hss.append(
                        HalfSpace(_numvec(hobj["a"], path + ".a"), _num(hobj["b"], path + ".b"))
                    )
                prims.append(Primitive(tuple(hss)))
            utilities.append(ComprehensiveSet(tuple(prims)))
        fs = FirmSystem(
            firms=[_numvec(v, f"$.firms[{i}]") for i, v in enumerate(obj["firms"])],
            resource=_numvec(obj["resource"], "$.resource"),
        )
        game = GeneralizedGame(
            tuple(utilities), fs, distinguished=obj.get("distinguished")
        )
        if "dimension" in obj and int(obj["dimension"]) != game.dim:
            raise MalformedInput(
                f"$.dimension: {obj['dimension']} but half-spaces have {game.dim}"
            )
        return game
    except KeyError as exc:
        raise MalformedInput(f"$: missing field {exc}") from exc
    except (ValueError, TypeError) as exc:
        raise MalformedInput(f"$: {exc}") from exc


def tu_to_json(game: TUGame) -> dict:
    values = {
        ",".join(str(i + 1) for i in coal): rat_json(v)
        for coal, v in game.values.items()
    }
    return {"schema": "fraccore.tu/1", "n": game.n, "values": values}


def tu_from_json(obj) -> TUGame:
    if not isinstance(obj, dict):
        raise MalformedInput("$: expected an object")
    try:
        n = int(obj["n"])
        values = {}
        for key, v in obj["values"].items():
            coal = tuple(int(s) - 1 for s in key.split(","))
            values[coal] = _num(v, f"$.values[{key!r}]")
        return TUGame(n, values)
    except KeyError as exc:
        raise MalformedInput(f"$: missing field {exc}") from exc
    except (ValueError, TypeError) as exc:
        raise MalformedInput(f"$: {exc}") from exc


def cover_to_json(lc: LabeledCover) -> dict:
    return {
        "schema": "fraccore.cover/1",
        "vertices": lc.oriented.complex.num_vertices,
        "facets": [list(f) for f in lc.oriented.complex.facets],
        "orientation": list(lc.oriented.orientation),
        "labels": [sorted(ls) for ls in lc.labels],
        "firms": [[rat_json(c) for c in v] for v in lc.firm_system.firms],
        "resource": [rat_json(c) for c in lc.firm_system.resource],
    }


def cover_from_json(obj) -> LabeledCover:
    if not isinstance(obj, dict):
        raise MalformedInput("$: expected an object")
    try:
        K = SimplicialComplex(int(obj["vertices"]), tuple(tuple(f) for f in obj["facets"]))
        oc = OrientedComplex(K, tuple(obj["orientation"]))
        fs = FirmSystem(
            firms=[_numvec(v, f"$.firms[{i}]") for i, v in enumerate(obj["firms"])],
            resource=_numvec(obj["resource"], "$.resource"),
        )
        labels = tuple(frozenset(ls) for ls in obj["labels"])
        return LabeledCover(oc, labels, fs)
    except KeyError as exc:
        raise MalformedInput(f"$: missing field {exc}") from exc
    except (ValueError, TypeError) as exc:
        raise MalformedInput(f"$: {exc}") from exc


def complex_to_json(oc: OrientedComplex, labels=None) -> dict:
    out = {
        "schema": "fraccore.complex/1",
        "vertices": oc.complex.num_vertices,
        "facets": [list(f) for f in oc.complex.facets],
        "orientation": list(oc.orientation),
    }
    if labels is not None:
        out["labels"] = [sorted(ls) for ls in labels]
    return out


def complex_from_json(obj):
    if not isinstance(obj, dict):
        raise MalformedInput("$: expected an object")
    try:
        K = SimplicialComplex(int(obj["vertices"]), tuple(tuple(f) for f in obj["facets"]))
        orientation = obj.get("orientation")
        if orientation is None:
            from .topology.complexes import propagate_orientation

            oc = propagate_orientation(K)
            if oc is None:
                raise MalformedInput("$.orientation: missing and not derivable")
        else:
            oc = OrientedComplex(K, tuple(orientation))
        labels = obj.get("labels")
        if labels is not None:
            labels = tuple(frozenset(ls) for ls in labels)
        return oc, labels
    except KeyError as exc:
        raise MalformedInput(f"$: missing field {exc}") from exc
    except (ValueError, TypeError) as exc:
        raise MalformedInput(f"$: {exc}") from exc


def point_from_json(obj, path="$.point"):
    return _numvec(obj, path)


def rational_vector_json(v):
    return [rat_json(c) for c in v]
