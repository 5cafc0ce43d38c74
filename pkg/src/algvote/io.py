"""JSON encodings for profiles, targets, approval profiles and pairs vectors.

Every number is written as a rational string (``"5"``, ``"-7/2"``).  Floats
are refused on input.
"""

from __future__ import annotations

import json
from fractions import Fraction
from pathlib import Path
from typing import Sequence

from algvote.combinatorics import Shape, Tabloid, ordered_pairs
from algvote.constructor import OutcomeTarget, RankedApprovalProfile
from algvote.exactlinalg import as_fraction, fraction_str
from algvote.pairsmaps import n_from_pairs_length
from algvote.positional import WeightingVector
from algvote.profiles import Profile


class SchemaError(ValueError):
    pass


def parse_rational(x) -> Fraction:
    if isinstance(x, float):
        raise SchemaError(f"floating point value {x!r}; write it as a rational string")
    try:
        return as_fraction(x)
    except (TypeError, ValueError) as exc:
        raise SchemaError(str(exc)) from None


def parse_vector(text_or_list) -> list[Fraction]:
    """``"1,1/2,0"`` or a JSON list."""
    if isinstance(text_or_list, str):
        items = [s for s in text_or_list.replace(" ", "").split(",") if s != ""]
    else:
        items = list(text_or_list)
    return [parse_rational(x) for x in items]


def vector_json(v: Sequence) -> list[str]:
    return [fraction_str(x) for x in v]


def parse_shape(obj) -> Shape:
    try:
        if isinstance(obj, str):
            return Shape(int(s) for s in obj.split(",") if s.strip())
        if not isinstance(obj, list) or not all(isinstance(p, int) for p in obj):
            raise SchemaError(f"shape must be a list of integers, got {obj!r}")
        return Shape(obj)
    except ValueError as exc:
        raise SchemaError(str(exc)) from None


def profile_to_json(p: Profile) -> dict:
    return {
        "shape": list(p.shape.parts),
        "votes": [{"tabloid": str(t), "coeff": fraction_str(c)} for t, c in p.items() if c],
    }


def profile_from_json(obj) -> Profile:
    if not isinstance(obj, dict) or "shape" not in obj:
        raise SchemaError("profile must be an object with 'shape' and 'votes'")
    shape = parse_shape(obj["shape"])
    votes: dict[Tabloid, Fraction] = {}
    for vote in obj.get("votes", []):
        try:
            t = Tabloid.parse(vote["tabloid"])
            c = parse_rational(vote["coeff"])
        except (KeyError, TypeError) as exc:
            raise SchemaError(f"bad vote entry {vote!r}") from exc
        except ValueError as exc:
            raise SchemaError(str(exc)) from None
        if t.shape != shape:
            raise SchemaError(f"tabloid {t} does not have shape {shape}")
        votes[t] = votes.get(t, Fraction(0)) + c
    return Profile.from_votes(shape, votes)


def targets_to_json(shape: Shape, targets: Sequence[OutcomeTarget]) -> dict:
    return {
        "shape": list(shape.parts),
        "targets": [{"weights": vector_json(t.weighting.weights), "result": vector_json(t.target)}
                    for t in targets],
    }


def targets_from_json(obj) -> tuple[Shape, list[OutcomeTarget]]:
    if not isinstance(obj, dict) or "shape" not in obj or "targets" not in obj:
        raise SchemaError("targets file must be an object with 'shape' and 'targets'")
    shape = parse_shape(obj["shape"])
    out = []
    for t in obj["targets"]:
        try:
            w = WeightingVector(shape, parse_vector(t["weights"]))
            out.append(OutcomeTarget(w, parse_vector(t["result"])))
        except (KeyError, TypeError) as exc:
            raise SchemaError(f"bad target entry {t!r}") from exc
        except SchemaError:
            raise
        except ValueError as exc:
            raise SchemaError(str(exc)) from None
    return shape, out


def approval_to_json(rap: RankedApprovalProfile) -> list[dict]:
    return [profile_to_json(b) for b in rap.blocks]


def approval_from_json(obj) -> RankedApprovalProfile:
    if not isinstance(obj, list):
        raise SchemaError("a ranked approval profile is a JSON array of profiles")
    try:
        return RankedApprovalProfile([profile_from_json(b) for b in obj])
    except SchemaError:
        raise
    except ValueError as exc:
        raise SchemaError(str(exc)) from None


def pairs_to_json(v: Sequence) -> dict[str, str]:
    n = n_from_pairs_length(len(v))
    return {f"{i}>{j}": fraction_str(x) for (i, j), x in zip(ordered_pairs(n), v)}


def pairs_from_json(obj) -> list[Fraction]:
    if not isinstance(obj, dict):
        raise SchemaError("pairs vector must be an object keyed 'i>j'")
    try:
        n = n_from_pairs_length(len(obj))
    except ValueError as exc:
        raise SchemaError(str(exc)) from None
    out = []
    for i, j in ordered_pairs(n):
        key = f"{i}>{j}"
        if key not in obj:
            raise SchemaError(f"missing pair {key}")
        out.append(parse_rational(obj[key]))
    return out


def load_json(path: str | Path):
    try:
        with open(path) as fh:
            return json.load(fh)
    except OSError as exc:
        raise SchemaError(f"cannot read {path}: {exc.strerror}") from None
    except json.JSONDecodeError as exc:
        raise SchemaError(f"{path}: invalid JSON ({exc})") from None


def dump_json(obj, path: str | Path | None = None) -> str:
    text = json.dumps(obj, indent=2)
    if path is not None:
        Path(path).write_text(text + "\n")
    return text
