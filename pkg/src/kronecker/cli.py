"""Command-line interface: ``kronecker <subcommand> ...``.

Exit codes: 0 success, 2 usage error, 3 theorem violation (or a failed
verification suite), 4 brick construction failure.  Standard output is
deterministic; timings go to standard error.
"""
from __future__ import annotations

import argparse
import json
import sys
import time
from typing import Sequence

from . import bricks, components, roots, sequences
from .errors import ConstructionError, InvalidParameter, KroneckerError, TheoremViolation
from .report import Report, jsonable
from .reps import Rep, hom_dim

EXIT_OK, EXIT_USAGE, EXIT_THEOREM, EXIT_CONSTRUCTION = 0, 2, 3, 4


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        raise _UsageError(message)


class _UsageError(Exception):
    pass


def _n(text: str) -> int:
    try:
        n = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"n must be an integer, got {text!r}") from None
    if n < 3:
        raise argparse.ArgumentTypeError(f"n must be >= 3, got {n}")
    return n


def _vec(text: str) -> roots.DimVector:
    try:
        return roots.DimVector.parse(text)
    except InvalidParameter as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _range(text: str) -> tuple[int, int]:
    lo, sep, hi = text.partition("..")
    try:
        bounds = (int(lo), int(hi)) if sep else (int(lo), int(lo))
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected a range 'lo..hi', got {text!r}") from None
    if bounds[0] > bounds[1]:
        raise argparse.ArgumentTypeError(f"empty range {text!r}")
    return bounds


def _n_range(text: str) -> list[int]:
    lo, hi = _range(text)
    if lo < 3:
        raise argparse.ArgumentTypeError(f"n must be >= 3, got {lo}")
    return list(range(lo, hi + 1))


def _positive(text: str) -> int:
    try:
        v = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected an integer, got {text!r}") from None
    if v < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {v}")
    return v


def _vec_str(v) -> str:
    a, b = v
    return f"{a},{b}"


def _emit_json(obj) -> None:
    print(json.dumps(jsonable(obj), sort_keys=True))


# -- subcommands -------------------------------------------------------------

def cmd_seq(args) -> int:
    cache = sequences.get_cache(args.n)
    if args.kind == "A":
        vals = [cache.a(i) for i in range(args.upto + 1)]
    elif args.kind == "B":
        vals = [cache.b(i) for i in range(args.upto + 1)]
    else:
        vals = [cache.s(r) for r in range(1, args.upto + 1, 2)]
    print(" ".join(str(v) for v in vals))
    return EXIT_OK


def cmd_root(args) -> int:
    print(roots.classify(args.n, args.vec))
    return EXIT_OK


def cmd_orbit(args) -> int:
    lo, hi = args.range
    for i in range(lo, hi + 1):
        v = roots.coxeter_apply(args.n, args.vec, i)
        print(f"{i} {_vec_str(v)} {roots.classify(args.n, v) if v.is_nonnegative() else 'negative'}")
    return EXIT_OK


def cmd_brick(args) -> int:
    cert = bricks.construct_brick(args.n, args.vec, method="exact" if args.verify else "auto")
    if args.out:
        cert.rep.dump(args.out)
    if args.cert:
        with open(args.cert, "w") as fh:
            json.dump(jsonable(cert.to_json()), fh, sort_keys=True)
            fh.write("\n")
    if args.json:
        _emit_json(cert.to_json())
    else:
        print(f"dim {_vec_str(cert.root)} case {cert.case} end_dim {cert.end_dim} method {cert.method}")
        for step in cert.case_trace:
            print("  " + " ".join(f"{k}={_vec_str(v) if isinstance(v, roots.DimVector) else v}"
                                  for k, v in step.items()))
    return EXIT_OK


def cmd_homdim(args) -> int:
    m, n = Rep.load(args.rep1), Rep.load(args.rep2)
    if m.n != n.n:
        raise InvalidParameter(f"representations live on K_{m.n} and K_{n.n}")
    print(hom_dim(m, n, method=args.method).dimension)
    return EXIT_OK


def cmd_ql(args) -> int:
    options = bricks.quasi_length_options(args.n, args.vec)
    for r in options:
        seed, layer = bricks.indecomposable_dim_for_quasilength(args.n, args.vec, r)
        print(f"r={r} seed={_vec_str(seed)} layer={_vec_str(layer)}")
    return EXIT_OK


def cmd_census(args) -> int:
    seed = components.ComponentSeed(args.n, args.seed)
    res = components.length_census(seed, args.length)
    if args.json:
        _emit_json(res.to_json())
    else:
        print(f"length {res.length} count {res.count}")
        for coord, dim in res.hits:
            print(f"{coord} {_vec_str(dim)}")
    return EXIT_OK


def cmd_pairs(args) -> int:
    ws = components.samelength_pair_search(args.n, args.r, args.s, args.max_i, primitive=not args.a_strip)
    if args.json:
        _emit_json([w.to_json() for w in ws])
    else:
        for w in ws:
            print(f"i={w.i} seed={_vec_str(w.seed)} M={w.node_m}:{_vec_str(w.dim_m)} "
                  f"N={w.node_n}:{_vec_str(w.dim_n)} length={w.length}")
    return EXIT_OK


def cmd_dimset(args) -> int:
    a = components.ComponentSeed(args.n, args.seedA)
    b = components.ComponentSeed(args.n, args.seedB)
    print("true" if components.dimset_equal(a, b) else "false")
    return EXIT_OK


def _run_suite(args) -> Report:
    ns = args.n or [3]
    suite = args.suite
    if suite == "identities":
        return sequences.verify_identities(ns, args.upto)
    if suite == "inequalities":
        rep = sequences.verify_inequalities(ns, args.upto)
        lemmas = components.verify_orbit_lemmas(ns, args.sum_bound)
        rep.merge(lemmas)
        rep.info.update(lemmas.info)
        rep.wall_time += lemmas.wall_time
        return rep
    if suite == "bricks":
        return bricks.verify_bricks(ns, args.sum_bound)
    combined = Report(suite)
    for n in ns:
        if suite == "beta":
            part = components.verify_beta(n, args.seed_bound, args.length_bound)
        elif suite == "pairs":
            part = components.verify_pairs(n, args.r_max, args.max_i)
        else:
            part = components.verify_dimset(n, args.seed_bound)
        combined.merge(part)
        combined.wall_time += part.wall_time
        for key, val in part.info.items():
            combined.info[key if len(ns) == 1 else f"n={n}:{key}"] = val
    return combined


def cmd_verify(args) -> int:
    report = _run_suite(args)
    print(f"[verify] {report.suite}: {report.wall_time:.3f}s", file=sys.stderr)
    if args.json:
        _emit_json(report.to_dict())
    else:
        print(f"suite {report.suite} cases {report.cases} failures {len(report.failures)}")
        for key, val in report.info.items():
            print(f"  {key}: {json.dumps(jsonable(val), sort_keys=True)}")
        if report.failures:
            print(f"first failure: {json.dumps(jsonable(report.first_failure), sort_keys=True)}")
    if report.ok:
        return EXIT_OK
    return EXIT_CONSTRUCTION if args.suite == "bricks" else EXIT_THEOREM


# -- parser ------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="kronecker", description="Exact computations on wild Kronecker quivers K_n.")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    s = sub.add_parser("seq", help="print A, B or s values")
    s.add_argument("--n", type=_n, required=True)
    s.add_argument("--kind", choices=("A", "B", "s"), required=True)
    s.add_argument("--upto", type=int, required=True)
    s.set_defaults(func=cmd_seq)

    s = sub.add_parser("root", help="root classification")
    s.add_argument("action", choices=("classify",))
    s.add_argument("--n", type=_n, required=True)
    s.add_argument("--vec", type=_vec, required=True)
    s.set_defaults(func=cmd_root)

    s = sub.add_parser("orbit", help="Coxeter orbit of a vector")
    s.add_argument("--n", type=_n, required=True)
    s.add_argument("--vec", type=_vec, required=True)
    s.add_argument("--range", type=_range, default=(-3, 3))
    s.set_defaults(func=cmd_orbit)

    s = sub.add_parser("brick", help="construct and certify a brick")
    s.add_argument("--n", type=_n, required=True)
    s.add_argument("--vec", type=_vec, required=True)
    s.add_argument("--out", help="write the representation as JSON")
    s.add_argument("--cert", help="write the certificate as JSON")
    s.add_argument("--verify", action="store_true", help="certify with exact rational elimination")
    s.add_argument("--json", action="store_true")
    s.set_defaults(func=cmd_brick)

    s = sub.add_parser("homdim", help="dim Hom between two representations in JSON files")
    s.add_argument("--rep1", required=True)
    s.add_argument("--rep2", required=True)
    s.add_argument("--method", choices=("auto", "exact"), default="auto")
    s.set_defaults(func=cmd_homdim)

    s = sub.add_parser("ql", help="admissible quasi-lengths of an imaginary root")
    s.add_argument("--n", type=_n, required=True)
    s.add_argument("--vec", type=_vec, required=True)
    s.set_defaults(func=cmd_ql)

    s = sub.add_parser("census", help="nodes of a given length in a regular component")
    s.add_argument("--n", type=_n, required=True)
    s.add_argument("--seed", type=_vec, required=True)
    s.add_argument("--length", type=_positive, required=True)
    s.add_argument("--json", action="store_true")
    s.set_defaults(func=cmd_census)

    s = sub.add_parser("pairs", help="same-length pairs (tau^i X)_r, X_s")
    s.add_argument("--n", type=_n, required=True)
    s.add_argument("--r", type=_positive, required=True)
    s.add_argument("--s", type=_positive, required=True)
    s.add_argument("--max-i", dest="max_i", type=_positive, required=True)
    s.add_argument("--a-strip", action="store_true",
                   help="strip only common A_t factors instead of reducing to lowest terms")
    s.add_argument("--json", action="store_true")
    s.set_defaults(func=cmd_pairs)

    s = sub.add_parser("dimset", help="do two components share their dimension vectors")
    s.add_argument("--n", type=_n, required=True)
    s.add_argument("--seedA", type=_vec, required=True)
    s.add_argument("--seedB", type=_vec, required=True)
    s.set_defaults(func=cmd_dimset)

    s = sub.add_parser("verify", help="run a verification suite")
    s.add_argument("--suite", required=True,
                   choices=("identities", "inequalities", "bricks", "beta", "pairs", "dimset"))
    s.add_argument("--n", type=_n_range, help="n or range lo..hi (default 3)")
    s.add_argument("--upto", type=_positive, default=25, help="index bound for sequence suites")
    s.add_argument("--sum-bound", dest="sum_bound", type=_positive, default=30)
    s.add_argument("--seed-bound", dest="seed_bound", type=_positive, default=8)
    s.add_argument("--length-bound", dest="length_bound", type=_positive, default=200)
    s.add_argument("--r-max", dest="r_max", type=_positive, default=3)
    s.add_argument("--max-i", dest="max_i", type=_positive, default=3)
    s.add_argument("--json", action="store_true")
    s.set_defaults(func=cmd_verify)
    return p


def _join_ranges(argv: Sequence[str]) -> list[str]:
    # "--range -2..2" would otherwise be read as an option
    out: list[str] = []
    it = iter(argv)
    for tok in it:
        if tok in ("--range", "--n"):
            nxt = next(it, None)
            out.append(tok if nxt is None else f"{tok}={nxt}")
        else:
            out.append(tok)
    return out


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    argv = _join_ranges(sys.argv[1:] if argv is None else argv)
    start = time.perf_counter()
    try:
        args = parser.parse_args(argv)
        code = args.func(args)
    except _UsageError as exc:
        print(f"kronecker: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except TheoremViolation as exc:
        print(f"kronecker: theorem violation: {exc}", file=sys.stderr)
        return EXIT_THEOREM
    except ConstructionError as exc:
        print(f"kronecker: construction failed: {exc}", file=sys.stderr)
        print(json.dumps(jsonable(exc.case_trace)), file=sys.stderr)
        return EXIT_CONSTRUCTION
    except (InvalidParameter, OSError, json.JSONDecodeError) as exc:
        print(f"kronecker: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except KroneckerError as exc:
        print(f"kronecker: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_THEOREM
    print(f"[time] {time.perf_counter() - start:.3f}s", file=sys.stderr)
    return code


if __name__ == "__main__":
    sys.exit(main())
