"""Command line front end.

Exit codes: 0 on success, 1 when a verification finds a counterexample,
2 on usage errors.
"""

from __future__ import annotations

import argparse
import json
import random
import sys
import time
from itertools import combinations
from pathlib import Path
from typing import List, Optional

from . import abct_class as ac
from . import grassmann as gr
from . import matroid_strata as ms
from . import minor_groebner as mg
from .symfunc import render_text

TABLE_CLASS_RANGE = range(5, 10)
TABLE_DEGREE_RANGE = range(5, 11)


class UsageError(Exception):
    pass


def _emit(args, text: str, payload) -> None:
    if getattr(args, "json", False):
        print(json.dumps(payload, indent=2, sort_keys=True))
    else:
        print(text)


def _require(cond: bool, flag: str, message: str) -> None:
    if not cond:
        raise UsageError(f"{flag}: {message}")


# ---------------------------------------------------------------------------
# subcommands
# ---------------------------------------------------------------------------


def cmd_class(args) -> int:
    _require(args.n >= 5, "--n", "the class formula needs n >= 5")
    start = time.perf_counter()
    res = ac.abct_class(args.n)
    elapsed = time.perf_counter() - start
    payload = res.to_json()
    if args.time:
        payload["seconds"] = round(elapsed, 3)
    _emit(args, str(res), payload)
    if args.time and not args.json:
        print(f"time: {elapsed:.3f} s", file=sys.stderr)
    return 0


def cmd_degree(args) -> int:
    _require(args.n >= 5, "--n", "the degree formula needs n >= 5")
    deg = ac.pluecker_degree(args.n)
    payload = {"n": args.n, "degree": str(deg)}
    text = str(deg)
    code = 0
    if args.oracle:
        other = ac.degree_skew_oracle(args.n)
        payload["oracle"] = str(other)
        payload["agree"] = other == deg
        text += f"\noracle (skew SYT): {other} {'agree' if other == deg else 'DISAGREE'}"
        code = 0 if other == deg else 1
    _emit(args, text, payload)
    return code


def cmd_euler(args) -> int:
    _require(args.n >= 5, "--n", "needs n >= 5")
    chk = ac.euler_coefficient_check(args.n)
    payload = {
        "n": chk.n,
        "coeff": str(chk.coeff),
        "closed_form": str(chk.closed_form),
        "eulerian": str(chk.eulerian),
        "all_equal": chk.all_equal,
    }
    text = (
        f"coefficient of s[{args.n - 5}] in [V(3,{args.n})]: {chk.coeff}\n"
        f"2^{args.n - 3} - {args.n - 2} = {chk.closed_form}\n"
        f"A({args.n - 3},1) = {chk.eulerian}\n"
        f"{'equal' if chk.all_equal else 'NOT EQUAL'}"
    )
    _emit(args, text, payload)
    return 0 if chk.all_equal else 1


def cmd_verify_class(args) -> int:
    _require(args.max_n >= 5, "--max-n", "needs max-n >= 5")
    rows = []
    failure = None
    for n in range(5, args.max_n + 1):
        rec = ac.abct_class(n).expansion
        gen = ac.genseries_oracle(n - 5)
        por = ac.porteous_oracle(n)
        ok = rec == gen == por
        rows.append({"n": n, "genseries": rec == gen, "porteous": rec == por})
        if not ok and failure is None:
            failure = {
                "n": n,
                "recursion": render_text(rec),
                "genseries": render_text(gen),
                "porteous": render_text(por),
            }
    lines = [
        f"n={r['n']}: genseries {'ok' if r['genseries'] else 'FAIL'}, "
        f"porteous {'ok' if r['porteous'] else 'FAIL'}"
        for r in rows
    ]
    if failure:
        lines.append("first counterexample: " + json.dumps(failure))
    _emit(args, "\n".join(lines), {"results": rows, "counterexample": failure})
    return 1 if failure else 0


def geometry_trial(n: int, d: int, seed: int) -> List[dict]:
    """One seeded round of geometric checks; returns failure records (empty = pass)."""
    rng = random.Random(seed)
    failures = []

    W = gr.random_matrix(2, n, rng)
    I = tuple(sorted(rng.sample(range(n), d + 1)))
    v = gr.vandermonde_check(W, d, I)
    if not v.equal:
        failures.append({
            "check": "vandermonde", "seed": seed, "W": W.to_json(), "d": d,
            "I": [i + 1 for i in I], "lhs": str(v.lhs), "rhs": str(v.rhs),
        })

    # small entries so that nonuniform matroids actually occur
    W_small = gr.random_matrix(2, n, rng, bound=2)
    P = gr.pluecker_coordinates(W_small)
    if not P.is_zero():
        image = gr.pluecker_coordinates(gr.veronese_matrix(W_small, d))
        lhs = image.support()
        expected = frozenset(
            J for J in combinations(range(n), d + 1)
            if all(pair in P.support() for pair in combinations(J, 2))
        )
        rank2 = ms.Rank2Matroid(n, P.support())
        via_matroid = ms.veronese_image_matroid(rank2, d).bases
        if not (lhs == expected == via_matroid):
            failures.append({
                "check": "matroid-functoriality", "seed": seed, "W": W_small.to_json(), "d": d,
            })

    if n >= 6:
        point = gr.sample_vdn_point(n, 2, seed)
        rank = gr.exact_rank(gr.veronese_matrix(point, 2))
        if rank > 5:
            failures.append({"check": "rank", "seed": seed, "point": point.to_json(), "rank": rank})
        P3 = gr.pluecker_coordinates(point)
        for J in combinations(range(n), 6):
            r = gr.quartic_residual(P3, J)
            if r != 0:
                failures.append({
                    "check": "quartic", "seed": seed, "point": point.to_json(),
                    "I": [i + 1 for i in J], "residual": str(r),
                })
                break
    return failures


def cmd_verify_geometry(args) -> int:
    _require(args.n >= 2, "--n", "needs n >= 2")
    _require(args.d >= 1, "--d", "needs d >= 1")
    _require(args.d + 1 <= args.n, "--d", "needs d + 1 <= n")
    _require(args.trials >= 1, "--trials", "needs at least one trial")
    failures = []
    for t in range(args.trials):
        failures.extend(geometry_trial(args.n, args.d, args.seed + t))
        if failures:
            break
    payload = {
        "n": args.n, "d": args.d, "seed": args.seed, "trials": args.trials,
        "passed": not failures, "counterexample": failures[0] if failures else None,
    }
    if failures:
        text = "FAIL\nfirst counterexample: " + json.dumps(failures[0], sort_keys=True)
    else:
        text = f"ok: {args.trials} trials (n={args.n}, d={args.d}, seed={args.seed})"
    _emit(args, text, payload)
    return 1 if failures else 0


def cmd_matroid_image(args) -> int:
    _require(args.d >= 1, "--d", "needs d >= 1")
    try:
        M = ms.Rank2Matroid.from_json(Path(args.file).read_text())
    except (OSError, ValueError, KeyError, TypeError) as exc:
        raise UsageError(f"--file: {exc}") from exc
    _require(args.d + 1 <= M.n, "--d", "needs d + 1 <= n")
    image = ms.veronese_image_matroid(M, args.d)
    ok = image.empty or ms.exchange_axiom_holds(image.bases)
    payload = image.to_json()
    payload["is_matroid"] = image.is_matroid()
    if image.empty:
        text = "empty"
    else:
        text = "\n".join("{" + ",".join(str(i + 1) for i in B) + "}" for B in image.sorted_bases())
    _emit(args, text, payload)
    return 0 if ok else 1


def cmd_enumerate(args) -> int:
    _require(args.n >= 2, "--n", "needs n >= 2")
    mats = list(ms.enumerate_rank2_matroids(args.n))
    mats.sort(key=lambda m: sorted(m.bases))
    if args.json:
        print(json.dumps({"n": args.n, "count": len(mats), "matroids": [m.to_json() for m in mats]}))
    else:
        for m in mats:
            print(" ".join("{" + f"{a + 1},{b + 1}" + "}" for a, b in sorted(m.bases)))
        print(f"count: {len(mats)}")
    return 0


def cmd_strata_dim(args) -> int:
    _require(args.n >= 4, "--n", "needs n >= 4")
    _require(args.d >= 1 and args.d + 1 <= args.n, "--d", "needs 1 <= d <= n - 1")
    M = ms.preset_matroid(args.preset, args.n)
    dim = ms.strata_dimension_experiment(M, args.d, args.seed)
    payload = {"preset": args.preset, "n": args.n, "d": args.d, "seed": args.seed, "dimension": dim}
    _emit(args, str(dim), payload)
    return 0


def cmd_groebner(args) -> int:
    _require(args.cols >= 3, "--cols", "needs at least 3 columns")
    G = mg.minors_ideal_generators(args.cols)
    report = mg.buchberger_check(G, mg.lex_order(args.cols), trace=args.trace)
    payload = {
        "cols": args.cols,
        "generators": len(G),
        "pairs": report.pairs,
        "skipped": report.skipped,
        "is_groebner": report.is_groebner,
        "failing_pair": report.failing_pair,
    }
    lines = [
        f"generators: {len(G)}",
        f"pairs: {report.pairs}",
        f"skipped by coprime criterion: {report.skipped}",
    ]
    if args.trace:
        payload["remainder_terms"] = [[list(p), k] for p, k in report.remainder_sizes]
        lines += [f"  S({i},{j}) remainder terms: {k}" for (i, j), k in report.remainder_sizes]
    lines.append("groebner basis: yes" if report.is_groebner else f"groebner basis: NO, pair {report.failing_pair}")
    _emit(args, "\n".join(lines), payload)
    return 0 if report.is_groebner else 1


def small_tables() -> dict:
    return {
        "classes": {n: ac.abct_class(n).expansion for n in TABLE_CLASS_RANGE},
        "degrees": {n: ac.pluecker_degree(n) for n in TABLE_DEGREE_RANGE},
    }


def cmd_tables(args) -> int:
    tables = small_tables()
    lines = ["Classes of V(3,n) in G(3,n)"]
    lines += [f"[V(3,{n})] = {render_text(e)}" for n, e in tables["classes"].items()]
    lines.append("")
    lines.append("Pluecker degrees")
    lines += [f"deg V(3,{n}) = {d}" for n, d in tables["degrees"].items()]
    payload = {
        "classes": [ac.abct_class(n).to_json() for n in TABLE_CLASS_RANGE],
        "degrees": [{"n": n, "degree": str(d)} for n, d in tables["degrees"].items()],
    }
    _emit(args, "\n".join(lines), payload)
    return 0


# ---------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="abct", description="Classes, degrees and checks for the ABCT variety V(3,n)."
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, func, help_text):
        p = sub.add_parser(name, help=help_text)
        p.add_argument("--json", action="store_true", help="machine-readable output")
        p.set_defaults(func=func)
        return p

    p = add("class", cmd_class, "class of V(3,n) in the Schur basis")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--time", action="store_true", help="report wall time")

    p = add("degree", cmd_degree, "Pluecker degree of V(3,n)")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--oracle", action="store_true", help="cross-check with skew tableau counts")

    p = add("euler", cmd_euler, "one-row coefficient vs Eulerian number")
    p.add_argument("--n", type=int, required=True)

    p = add("verify-class", cmd_verify_class, "recursion vs both oracles")
    p.add_argument("--max-n", type=int, required=True)

    p = add("verify-geometry", cmd_verify_geometry, "Vandermonde, quartics, rank, functoriality")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--d", type=int, default=2)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--trials", type=int, default=20)

    p = add("matroid-image", cmd_matroid_image, "Veronese image of a rank-2 matroid")
    p.add_argument("--file", required=True, help='JSON {"n": ..., "bases": [[i, j], ...]}, 1-based')
    p.add_argument("--d", type=int, default=2)

    p = add("enumerate-matroids", cmd_enumerate, "all rank-2 matroids on [n]")
    p.add_argument("--n", type=int, required=True)

    p = add("strata-dim", cmd_strata_dim, "dimension of the image of a matroid cell")
    p.add_argument("--preset", choices=["m1", "m2", "uniform"], required=True)
    p.add_argument("--n", type=int, default=6)
    p.add_argument("--d", type=int, default=2)
    p.add_argument("--seed", type=int, default=0)

    p = add("groebner-check", cmd_groebner, "Buchberger criterion for the theta'_2 minors")
    p.add_argument("--cols", type=int, default=6)
    p.add_argument("--trace", action="store_true", help="print each remainder's term count")

    add("paper-tables", cmd_tables, "class and degree tables for small n")
    return parser


def run(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args)
    except UsageError as exc:
        parser.print_usage(sys.stderr)
        print(f"{parser.prog} {args.command}: error: {exc}", file=sys.stderr)
        return 2


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
