"""Command-line interface: ``bicliquekit <command> ...``.

Exit status: 0 success, 1 validation failure or refusal, 2 usage error.
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from pathlib import Path

from . import bounds, constructions
from .core import (
    BicliqueError,
    KSet,
    achieved_type,
    cover_to_family,
    family_to_cover,
    is_regular,
    verify_type,
)
from .io import emit_cover, emit_family, parse_cover, parse_family
from .polycert import certify_koli, certify_lemma_b, certify_regular
from .search import SearchProblem, snevily_check, solve


class _Failed(Exception):
    """Command ran but its check did not pass (exit 1, no error banner)."""


def _k_set(args, required=True):
    if getattr(args, "k_set", None):
        return KSet.parse(args.k_set)
    if getattr(args, "k", None) is not None:
        return KSet.order(args.k)
    if required:
        raise BicliqueError("pass --k-set L1,L2,... or --k N")
    return None


def _read(path: str) -> str:
    try:
        return Path(path).read_text()
    except OSError as exc:
        raise BicliqueError(f"cannot read {path}: {exc.strerror}") from None


def _write(path, text: str):
    if path is None or path == "-":
        sys.stdout.write(text)
    else:
        Path(path).write_text(text)


def _dump(obj):
    print(json.dumps(obj, indent=2))


# -- commands ---------------------------------------------------------------------


def cmd_verify(args):
    cover = parse_cover(_read(args.cover))
    k_set = _k_set(args, required=False)
    report = achieved_type(cover)
    regular = is_regular(cover) if cover.host.kind == "complete" else None
    result = {
        "host": {"kind": cover.host.kind, "size": cover.host.size},
        "d": cover.d,
        "achieved_type": sorted(report.types),
        "vacuous": report.vacuous,
        "regular": regular,
        "k_set": list(k_set.elements) if k_set else None,
        "ok": None,
        "violations": [],
    }
    if k_set is not None:
        v = verify_type(cover, k_set)
        result["ok"] = v.ok
        result["violations"] = [{"edge": list(e), "count": c} for e, c in v.violations]
    if args.json:
        _dump(result)
    else:
        print(f"host: {cover.host.kind}({cover.host.size}), d = {cover.d}")
        print(f"achieved type: {{{','.join(map(str, result['achieved_type']))}}}" + (" (vacuous)" if report.vacuous else ""))
        if regular is not None:
            print(f"regular: {'yes' if regular else 'no'}")
        if k_set is not None:
            print(f"type {k_set}: {'ok' if result['ok'] else 'FAILED'}")
            for item in result["violations"][:20]:
                print(f"  edge {tuple(item['edge'])} covered {item['count']} times")
            if len(result["violations"]) > 20:
                print(f"  ... {len(result['violations']) - 20} more")
    if result["ok"] is False:
        raise _Failed


def cmd_construct(args):
    kind = args.kind
    if kind == "star":
        text = emit_cover(constructions.star_cover(args.n))
    elif kind == "hypercube":
        text = emit_cover(constructions.hypercube_cover(args.d))
    elif kind == "even-subsets":
        text = emit_cover(constructions.even_subsets_cover(args.d, args.i))
    elif kind == "product":
        text = emit_cover(constructions.product_cover(args.d, args.k))
    else:
        text = emit_family(constructions.snevily_sharp_family(args.d, args.k))
    _write(args.out, text)


def cmd_bounds(args):
    k_set = _k_set(args, required=False)
    report = bounds.bound_report(args.d, k=None if k_set else args.k, k_set=k_set) if k_set else bounds.bound_report(args.d, args.k)
    data = report.as_dict()
    if args.json:
        _dump(data)
        return
    width = max(len(key) for key in data)
    for key, value in data.items():
        print(f"{key:<{width}}  {value}")


_SEARCH_MODES = {"nkd": "complete", "regular": "regular", "cross": "cross"}


def cmd_search(args):
    k_set = _k_set(args)
    problem = SearchProblem(args.d, k_set, _SEARCH_MODES[args.target], args.budget)
    started = time.perf_counter()
    result = solve(problem)
    elapsed = time.perf_counter() - started
    if args.witness_out:
        if problem.mode == "cross":
            _write(args.witness_out, emit_family(result.to_family()))
        else:
            _write(args.witness_out, emit_cover(result.to_cover()))
    data = {
        "mode": problem.mode,
        "d": problem.d,
        "k_set": list(k_set.elements),
        "optimum": result.optimum,
        "exhausted": result.exhausted,
        "nodes_explored": result.nodes_explored,
        "witness": [{"a": sorted(p.a), "b": sorted(p.b)} for p in result.witness],
    }
    if args.json:
        _dump(data)
    else:
        status = "exhausted (optimal)" if result.exhausted else "budget hit (lower bound)"
        print(f"{args.target} d={problem.d} K={k_set}: optimum {result.optimum}, {status}, {result.nodes_explored} nodes")
        for p in result.witness:
            print(f"  {p}")
    if args.verbose:
        print(f"elapsed {elapsed:.3f}s", file=sys.stderr)


def cmd_certify(args):
    method = args.method
    if args.target == "lemma-b":
        if args.d is None or args.k is None:
            raise BicliqueError("certify lemma-b needs --d and --k")
        cert = certify_lemma_b(args.d, args.k, method=method)
    else:
        if args.cover:
            cover = parse_cover(_read(args.cover))
            k_set = _k_set(args, required=False) or KSet.of(sorted(achieved_type(cover).types))
        elif args.d is not None and args.k is not None:
            k_set = KSet.order(args.k)
            if args.target == "koli":
                cover = constructions.product_cover(args.d, args.k)
            else:
                if args.k != args.d:
                    raise BicliqueError("certify regular from --d/--k uses the hypercube cover and needs k == d; pass --cover otherwise")
                cover = constructions.hypercube_cover(args.d)
        else:
            raise BicliqueError(f"certify {args.target} needs --cover F or --d D --k K")
        fn = certify_koli if args.target == "koli" else certify_regular
        cert = fn(cover, k_set, method=method)
    data = cert.as_dict()
    if args.json:
        _dump(data)
    else:
        print(f"{cert.kind}: rank {cert.rank} of {cert.family_size} polynomials in dimension {cert.ambient_dim}")
        print(f"expected rank {cert.expected_rank}; method {cert.method}")
        for name, ok in sorted(cert.checks.items()):
            print(f"check {name}: {'pass' if ok else 'FAIL'}")
        print("certified" if cert.ok else "NOT certified")
    if not cert.ok:
        raise _Failed


def cmd_convert(args):
    if args.direction == "cover-to-family":
        _write(args.out, emit_family(cover_to_family(parse_cover(_read(args.inp)))))
    else:
        _write(args.out, emit_cover(family_to_cover(parse_family(_read(args.inp)))))


def cmd_snevily(args):
    rows = snevily_check(args.d_max, args.k_max)
    if args.json:
        _dump([r.as_dict() for r in rows])
    else:
        print(f"{'d':>2} {'K':<10} {'max m':>5} {'C(d,k)':>6}  status")
        for r in rows:
            status = "equal" if r.max_m == r.bound else ("below" if r.holds else "COUNTEREXAMPLE")
            print(f"{r.d:>2} {str(r.k_set):<10} {r.max_m:>5} {r.bound:>6}  {status}")
    bad = [r for r in rows if not r.holds]
    if bad:
        for r in bad:
            print(f"COUNTEREXAMPLE: d={r.d} K={r.k_set} m={r.max_m} > {r.bound}", file=sys.stderr)
        raise _Failed


# -- parser -----------------------------------------------------------------------


def _add_k(p, shorthand=True):
    p.add_argument("--k-set", help="comma-separated K, e.g. 1,2")
    if shorthand:
        p.add_argument("--k", type=int, help="shorthand for K = {1..N}")


def _positive(text):
    v = int(text)
    if v < 1:
        raise argparse.ArgumentTypeError(f"must be >= 1, got {v}")
    return v


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="bicliquekit", description="Biclique covers of type K: build, verify, search, certify.")
    parser.add_argument("--threads", type=_positive, default=1, help="worker cap (all kernels currently run single-threaded)")
    parser.add_argument("--verbose", action="store_true", help="print timings to stderr")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("verify", help="achieved type, regularity and type-K check of a cover file")
    p.add_argument("--cover", required=True)
    _add_k(p)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("construct", help="write a constructed cover or family")
    p.add_argument("kind", choices=["star", "hypercube", "even-subsets", "product", "snevily-family"])
    p.add_argument("--n", type=int)
    p.add_argument("--d", type=int)
    p.add_argument("--i", type=int)
    p.add_argument("--k", type=int)
    p.add_argument("--out")
    p.set_defaults(func=cmd_construct)

    p = sub.add_parser("bounds", help="every closed-form bound for (d, k)")
    p.add_argument("--d", type=int, required=True)
    _add_k(p)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_bounds)

    p = sub.add_parser("search", help="exact n(K,d), n_r(K,d) or maximum cross family")
    p.add_argument("target", choices=list(_SEARCH_MODES))
    p.add_argument("--d", type=int, required=True)
    _add_k(p)
    p.add_argument("--budget", type=int)
    p.add_argument("--witness-out")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_search)

    p = sub.add_parser("certify", help="rank certificate for the proof polynomials")
    p.add_argument("target", choices=["koli", "regular", "lemma-b"])
    p.add_argument("--cover")
    p.add_argument("--d", type=int)
    p.add_argument("--k", type=int)
    p.add_argument("--k-set")
    p.add_argument("--method", choices=["auto", "modular", "exact"], default="auto")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_certify)

    p = sub.add_parser("convert", help="crown cover <-> cross family")
    p.add_argument("direction", choices=["cover-to-family", "family-to-cover"])
    p.add_argument("--in", dest="inp", required=True)
    p.add_argument("--out", required=True)
    p.set_defaults(func=cmd_convert)

    p = sub.add_parser("snevily", help="max cross family size against C(d,k)")
    p.add_argument("--d-max", type=int, required=True)
    p.add_argument("--k-max", type=int, required=True)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_snevily)
    return parser


_REQUIRED_PARAMS = {
    "star": ("n",),
    "hypercube": ("d",),
    "even-subsets": ("d", "i"),
    "product": ("d", "k"),
    "snevily-family": ("d", "k"),
}


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.command == "construct":
        missing = [f"--{name}" for name in _REQUIRED_PARAMS[args.kind] if getattr(args, name) is None]
        if missing:
            parser.error(f"construct {args.kind} requires {' '.join(missing)}")
    try:
        args.func(args)
    except _Failed:
        return 1
    except BicliqueError as exc:
        if getattr(args, "json", False):
            _dump({"error": {"type": type(exc).__name__, "message": str(exc)}})
        else:
            print(f"error: {exc}", file=sys.stderr)
        return 1
    return 0


if __name__ == "__main__":
    sys.exit(main())
