"""Command line interface.

Exit codes: 0 success, 1 internal defect, 2 input error, 3 infeasible construction.
"""

from __future__ import annotations

import argparse
import sys
from typing import Sequence

from algvote import io
from algvote.combinatorics import Shape, enumerate_tabloids
from algvote.constructor import (
    ConstructionError,
    approval_positional_paradox,
    approval_tally,
    construct_profile,
    normalize_to_counts,
    positional_outcome,
)
from algvote.exactlinalg import dot, fraction_str
from algvote.pairsmaps import (
    borda_analogue,
    borda_analogue_tau,
    condorcet_winner,
    copeland_scores,
    pairs_matrix,
    pairs_vector,
    partial_pairs_matrix,
    recoverable,
    recoverable_weight_space,
    reversal_symmetric,
)
from algvote.positional import (
    WeightingVector,
    equivalent,
    format_ordinal,
    lift_weights,
    ordinal,
    reverse_equivalent,
    sum_zero_decompose,
    tally,
)

EXIT_DEFECT, EXIT_INPUT, EXIT_INFEASIBLE = 1, 2, 3


class Infeasible(Exception):
    pass


def _fmt(v: Sequence) -> str:
    return "[" + ", ".join(fraction_str(x) for x in v) + "]"


def _emit(args, payload, lines: list[str]) -> None:
    if args.out:
        io.dump_json(payload, args.out)
    if args.json:
        print(io.dump_json(payload))
    else:
        print("\n".join(lines))


def cmd_tally(args) -> None:
    p = io.profile_from_json(io.load_json(args.profile))
    if args.counts and not p.is_voter_counts():
        raise ValueError("profile is not made of nonnegative integer voter counts")
    w = WeightingVector(p.shape, io.parse_vector(args.weights))
    scores = tally(p.shape, w, p)
    groups = ordinal(scores)
    payload = {
        "shape": list(p.shape.parts),
        "weights": io.vector_json(w.weights),
        "scores": io.vector_json(scores),
        "ordinal": [list(g) for g in groups],
    }
    lines = [f"shape {p.shape}, weights {w}"]
    lines += [f"  c{c}: {fraction_str(s)}" for c, s in enumerate(scores, start=1)]
    lines.append(f"ranking: {format_ordinal(groups)}")
    _emit(args, payload, lines)


def cmd_pairs(args) -> None:
    p = io.profile_from_json(io.load_json(args.profile))
    if p.shape.is_full():
        if args.tau is not None:
            raise ValueError("--tau applies only to partial (top-k) profiles")
    else:
        k = p.shape.m - 1
        if args.k is not None and args.k != k:
            raise ValueError(f"--k {args.k} does not match profile shape {p.shape}")
        if args.tau is None:
            raise ValueError("partial profiles need --tau")
    tau = io.parse_rational(args.tau) if args.tau is not None else None
    v = pairs_vector(p, tau)
    scores = copeland_scores(v)
    winner = condorcet_winner(v)
    payload = {
        "shape": list(p.shape.parts),
        "tau": fraction_str(tau) if tau is not None else None,
        "pairs": io.pairs_to_json(v),
        "copeland": scores,
        "condorcet_winner": winner,
    }
    lines = ["pairs: " + ", ".join(f"{k}: {x}" for k, x in payload["pairs"].items())]
    lines += [f"  c{c}: copeland {s:+d}" for c, s in enumerate(scores, start=1)]
    lines.append(f"Condorcet winner: c{winner}" if winner else "Condorcet winner: none")
    _emit(args, payload, lines)


def cmd_analyze_weights(args) -> None:
    if not args.weights:
        raise ValueError("give at least one --weights vector")
    shape = io.parse_shape(args.shape) if args.shape else None
    vectors = []
    for text in args.weights:
        raw = io.parse_vector(text)
        w = WeightingVector(shape if shape else Shape.full(len(raw)), raw)
        vectors.append((raw, lift_weights(w)))
    n = len(vectors[0][1])
    if any(len(lifted) != n for _, lifted in vectors):
        raise ValueError("weighting vectors have different lengths")

    classes: list[list[int]] = []
    for i, (_, lifted) in enumerate(vectors):
        for cls in classes:
            if equivalent(vectors[cls[0]][1], lifted):
                cls.append(i)
                break
        else:
            classes.append([i])

    report, lines = [], []
    for i, (raw, lifted) in enumerate(vectors):
        ones, hat = sum_zero_decompose(lifted)
        entry = {
            "weights": io.vector_json(raw),
            "lifted": io.vector_json(lifted),
            "ones_part": io.vector_json(ones),
            "sum_zero_part": io.vector_json(hat),
            "reversal_symmetric": reversal_symmetric(lifted),
            "class": next(c for c, cls in enumerate(classes) if i in cls),
        }
        report.append(entry)
        lines.append(f"w{i} = {_fmt(raw)}: lifted {_fmt(lifted)}, sum-zero part {_fmt(hat)}, "
                     f"class {entry['class']}, "
                     f"{'reversal-symmetric' if entry['reversal_symmetric'] else 'not reversal-symmetric'}")
    relations = []
    for i in range(len(vectors)):
        for j in range(i + 1, len(vectors)):
            wi, wj = vectors[i][1], vectors[j][1]
            hi, hj = sum_zero_decompose(wi)[1], sum_zero_decompose(wj)[1]
            nontrivial = any(hi) and any(hj)
            rel = {
                "pair": [i, j],
                "equivalent": equivalent(wi, wj),
                "reverse_equivalent": reverse_equivalent(wi, wj),
                "same_effective_space": nontrivial and (equivalent(wi, wj) or reverse_equivalent(wi, wj)),
                "effective_spaces_orthogonal": nontrivial and dot(hi, hj) == 0,
            }
            relations.append(rel)
            flags = [k for k in ("equivalent", "reverse_equivalent", "same_effective_space",
                                 "effective_spaces_orthogonal") if rel[k]]
            lines.append(f"w{i}, w{j}: {', '.join(flags) if flags else 'unrelated'}")
    payload = {"vectors": report, "classes": classes, "relations": relations}
    _emit(args, payload, lines)


def cmd_recoverable(args) -> None:
    n = args.n
    if args.k is None:
        if args.tau is not None:
            raise ValueError("--tau needs --k")
        shape, m = Shape.full(n), pairs_matrix(n)
        tau = None
    else:
        if args.tau is None:
            raise ValueError("--k needs --tau")
        tau = io.parse_rational(args.tau)
        shape, m = Shape.top_k(n, args.k), partial_pairs_matrix(n, args.k, tau)
    space = recoverable_weight_space(shape, m)
    payload = {
        "shape": list(shape.parts),
        "tau": fraction_str(tau) if tau is not None else None,
        "dimension": space.dim,
        "basis": [io.vector_json(b) for b in space.basis],
    }
    lines = [f"shape {shape}" + (f", tau {fraction_str(tau)}" if tau is not None else ""),
             f"recoverable weighting vectors: dimension {space.dim}"]
    lines += [f"  {_fmt(b)}" for b in space.basis]
    if tau is not None:
        b = borda_analogue(n, args.k).weights
        bt = borda_analogue_tau(n, args.k, tau).weights
        payload["b"], payload["b_tau"] = io.vector_json(b), io.vector_json(bt)
        lines += [f"b     = {_fmt(b)}", f"b_tau = {_fmt(bt)}"]
    tests = []
    for text in args.test or []:
        w = io.parse_vector(text)
        ok = recoverable(shape, w, m)
        tests.append({"weights": io.vector_json(w), "recoverable": ok})
        lines.append(f"{_fmt(w)}: {'recoverable' if ok else 'not recoverable'}")
    payload["tests"] = tests
    _emit(args, payload, lines)


def cmd_construct(args) -> None:
    shape, targets = io.targets_from_json(io.load_json(args.targets))
    result = construct_profile(shape, targets)
    if result is None:
        raise Infeasible(f"no profile on shape {shape} meets all {len(targets)} targets")
    p = result.profile
    lines = [f"profile on shape {shape} meeting {len(targets)} target(s); "
             f"solution space has {result.kernel.dim} free direction(s)"]
    if args.integer:
        q, alpha, c = normalize_to_counts(p)
        for t in targets:
            if ordinal(tally(shape, t.weighting, q)) != ordinal(t.target):
                raise ConstructionError("normalized profile changed an ordinal outcome")
        lines.append(f"scaled by {alpha} and shifted by {fraction_str(c)}: "
                     "ordinal outcomes are preserved, exact scores are not")
        p = q
    for t in targets:
        lines.append(f"  weights {t.weighting}: {_fmt(tally(shape, t.weighting, p))}")
    payload = io.profile_to_json(p)
    lines += [f"  {v['coeff']} x {v['tabloid']}" for v in payload["votes"]]
    _emit(args, payload, lines)


def cmd_construct_approval(args) -> None:
    r_app, r_pos = io.parse_vector(args.r_app), io.parse_vector(args.r_pos)
    w = io.parse_vector(args.weights)
    rap = approval_positional_paradox(args.n, r_app, r_pos, w)
    lines = [f"approval outcome (sum-zero): {_fmt(approval_tally(rap)[1])}",
             f"positional outcome under {_fmt(w)}: {_fmt(positional_outcome(rap, w))}",
             f"construction branch: {rap.meta['branch']}"]
    _emit(args, io.approval_to_json(rap), lines)


def cmd_tabloids(args) -> None:
    shape = io.parse_shape(args.shape)
    tabs = enumerate_tabloids(shape)
    payload = {"shape": list(shape.parts), "tabloids": [str(t) for t in tabs]}
    _emit(args, payload, [f"{i}: {t}" for i, t in enumerate(tabs)])


def _common(p: argparse.ArgumentParser) -> None:
    p.add_argument("--json", action="store_true", help="print JSON instead of a table")
    p.add_argument("--out", metavar="FILE", help="also write the JSON result to FILE")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="algvote",
        description="Exact positional, pairwise and approval voting analysis over Q.",
        epilog="Vectors are comma separated rationals; write --weights=-1,0,1 when one starts with '-'.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("tally", help="positional tally of a profile")
    p.add_argument("profile")
    p.add_argument("--weights", required=True)
    p.add_argument("--counts", action="store_true", help="require nonnegative integer voter counts")
    _common(p)
    p.set_defaults(func=cmd_tally)

    p = sub.add_parser("pairs", help="pairs vector, Copeland scores and Condorcet winner")
    p.add_argument("profile")
    p.add_argument("--k", type=int)
    p.add_argument("--tau")
    _common(p)
    p.set_defaults(func=cmd_pairs)

    p = sub.add_parser("analyze-weights", help="equivalence classes, reversal symmetry, orthogonality")
    p.add_argument("--weights", action="append", help="repeat for each vector")
    p.add_argument("--shape", help="interpret weights as partial weights for this shape")
    _common(p)
    p.set_defaults(func=cmd_analyze_weights)

    p = sub.add_parser("recoverable", help="weighting vectors recoverable from a pairs map")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k", type=int, help="top-k ballots; omit for full rankings")
    p.add_argument("--tau")
    p.add_argument("--test", action="append", metavar="WEIGHTS", help="membership test, repeatable")
    _common(p)
    p.set_defaults(func=cmd_recoverable)

    p = sub.add_parser("construct", help="profile meeting prescribed outcomes (see also 'construct approval')")
    p.add_argument("targets")
    p.add_argument("--integer", action="store_true", help="normalize to nonnegative integer voter counts")
    _common(p)
    p.set_defaults(func=cmd_construct)

    p = sub.add_parser("construct-approval", help="approval versus positional paradox")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--r-app", required=True)
    p.add_argument("--r-pos", required=True)
    p.add_argument("--weights", required=True, help="nontrivial sum-zero weighting vector")
    _common(p)
    p.set_defaults(func=cmd_construct_approval)

    p = sub.add_parser("tabloids", help="list tabloids of a shape in canonical order")
    p.add_argument("--shape", required=True)
    _common(p)
    p.set_defaults(func=cmd_tabloids)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    argv = list(sys.argv[1:] if argv is None else argv)
    if argv[:2] == ["construct", "approval"]:
        argv = ["construct-approval"] + argv[2:]
    args = build_parser().parse_args(argv)
    try:
        args.func(args)
    except Infeasible as exc:
        print(f"infeasible: {exc}", file=sys.stderr)
        return EXIT_INFEASIBLE
    except ConstructionError as exc:
        print(f"internal error: {exc}", file=sys.stderr)
        return EXIT_DEFECT
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    return 0


if __name__ == "__main__":
    sys.exit(main())
