"""Command-line surface: reproducible batch runs over the evaluators,
relation families, relation search, and harmonic identity checks.

Exit codes: 0 all verdicts pass, 1 a verdict failed, 2 usage error,
3 unwritable output path.  Reports are byte-identical across runs for
identical arguments; every number is rendered exactly (polynomial strings,
never floats).
"""

from __future__ import annotations

import argparse
import json
import re
import sys
from dataclasses import dataclass

from .errors import FFMzvError, ParseError
from .fields import FieldSpec
from .harmonic import (GFRing, RationalRing, TruncatedPolyRing, ZModRing,
                       check_thmC, check_thmD, random_instance)
from .poly import Poly, irreducible_polys, is_irreducible, parse_poly
from .relations import (Finite, Thm3Config, TruncatedExact, Vadic,
                        evaluate_relation, gen_thm2, gen_thm3, gen_thmA,
                        gen_thmB)
from .search import SearchScope, compare_with_universal, find_relations
from .zeta import (TruncationConfig, parse_composition,
                   truncated_mzv, vadic_mzv, vadic_mzv_auto, finite_mzv)


@dataclass(frozen=True)
class RunConfig:
    command: str
    args: argparse.Namespace

    @property
    def format(self) -> str:
        return self.args.format

    @property
    def out(self) -> str | None:
        return self.args.out


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="mzv",
        description="Exact zeta-value computations over F_q(t): truncated, "
                    "finite, and v-adic evaluation, relation families, "
                    "relation search, and generic harmonic-sum checks.")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p):
        p.add_argument("--q", type=int, default=2, help="field size (prime power)")
        p.add_argument("--modulus", default=None,
                       help="extension modulus, e.g. 'x^2+x+1'")
        p.add_argument("--format", choices=("json", "csv", "plain"),
                       default="json")
        p.add_argument("--out", default=None, help="output path (default stdout)")
        p.add_argument("--seed", type=int, default=0)

    p = sub.add_parser("compute", help="evaluate one zeta value")
    common(p)
    p.add_argument("--tuple", required=True, help="composition, e.g. '(1,2)'")
    p.add_argument("--star", action="store_true")
    p.add_argument("--v", default=None, help="monic prime, e.g. 't^2+t+1'")
    p.add_argument("--D", type=int, default=None, help="truncation bound")
    p.add_argument("--N", type=int, default=None, help="v-adic precision")

    p = sub.add_parser("verify", help="evaluate a relation family instance")
    common(p)
    p.add_argument("--family", required=True,
                   choices=("thm2", "thm3", "thmA", "thmB"))
    p.add_argument("--tuple", default=None)
    p.add_argument("--pairs", default=None, help="e.g. '(1:3),(2:1)'")
    p.add_argument("--star", action="store_true")
    p.add_argument("--evaluator", required=True,
                   choices=("trunc", "finite", "vadic"))
    p.add_argument("--v", default=None)
    p.add_argument("--D", type=int, default=None)
    p.add_argument("--N", type=int, default=4)

    p = sub.add_parser("search", help="relation scan at fixed precision")
    common(p)
    p.add_argument("--v", required=True)
    p.add_argument("--weight-max", type=int, required=True)
    p.add_argument("--depth-max", type=int, required=True)
    p.add_argument("--N", type=int, required=True)
    p.add_argument("--D", type=int, default=None)
    p.add_argument("--include-negatives", action="store_true")
    p.add_argument("--all-tuples", action="store_true",
                   help="drop the q-even-only filter")

    p = sub.add_parser("harmonic", help="random harmonic-identity checks")
    common(p)
    p.add_argument("--ring", default="zmod:12",
                   help="zmod:M | polymod:P:K | rationals | gf:Q")
    p.add_argument("--checks", type=int, default=20)
    p.add_argument("--doubling", action="store_true",
                   help="check the characteristic-2 doubling identity")
    p.add_argument("--index-size", type=int, default=4)
    p.add_argument("--magma-size", type=int, default=3)

    p = sub.add_parser("primes", help="list monic irreducibles")
    common(p)
    p.add_argument("--degree-max", type=int, required=True)

    return parser


def parse_args(argv) -> RunConfig:
    parser = _build_parser()
    args = parser.parse_args(argv)
    return RunConfig(command=args.command, args=args)


def _field_spec(args) -> FieldSpec:
    text = f"q={args.q}"
    if args.modulus:
        text += f";modulus={args.modulus}"
    return FieldSpec.parse(text)


def _parse_prime(text: str, spec: FieldSpec) -> Poly:
    v = parse_poly(text, spec)
    if not (v.is_monic() and is_irreducible(v)):
        raise ParseError(f"{text!r} is not a monic prime")
    return v


def _parse_pairs(text: str) -> Thm3Config:
    pairs = []
    for match in re.finditer(r"\(\s*(-?\d+)\s*:\s*(\d+)\s*\)", text):
        pairs.append((int(match.group(1)), int(match.group(2))))
    if not pairs:
        raise ParseError(f"no (s:k) pairs in {text!r}")
    return Thm3Config(tuple(pairs))


def _run_compute(args, spec: FieldSpec) -> dict:
    s = parse_composition(args.tuple)
    result = {"command": "compute", "q": spec.q, "tuple": str(s),
              "star": args.star}
    if args.N is not None:
        if args.v is None:
            raise ParseError("--N requires --v")
        v = _parse_prime(args.v, spec)
        if args.D is None:
            report = vadic_mzv_auto(v, s, args.N, args.star, spec)
        else:
            report = vadic_mzv(v, s, TruncationConfig(args.D, args.N, args.star),
                               spec)
        result.update(evaluator="vadic", v=str(v), N=args.N, D=report.D,
                      value=str(report.value), stabilized=report.stabilized,
                      stable_from=report.stable_from)
    elif args.v is not None:
        v = _parse_prime(args.v, spec)
        value = finite_mzv(v, s, args.star, spec)
        result.update(evaluator="finite", v=str(v), value=str(value))
    else:
        if args.D is None:
            raise ParseError("truncated evaluation requires --D")
        value = truncated_mzv(args.D, s, args.star, spec)
        result.update(evaluator="trunc", D=args.D, value=str(value))
    result["passed"] = True
    return result


def _run_verify(args, spec: FieldSpec) -> dict:
    if args.family in ("thm2", "thmA"):
        if args.tuple is None:
            raise ParseError(f"--family {args.family} requires --tuple")
        s = parse_composition(args.tuple)
        rel = gen_thm2(s, spec) if args.family == "thm2" else gen_thmA(s, spec)
        inp = str(s)
    else:
        if args.pairs is None:
            raise ParseError(f"--family {args.family} requires --pairs")
        cfg = _parse_pairs(args.pairs)
        rel = gen_thm3(cfg, spec) if args.family == "thm3" else gen_thmB(cfg, spec)
        inp = ",".join(f"({s}:{k})" for s, k in cfg.pairs)

    if args.evaluator == "trunc":
        if args.D is None:
            raise ParseError("--evaluator trunc requires --D")
        evaluator = TruncatedExact(D=args.D, star=args.star)
    elif args.evaluator == "finite":
        if args.v is None:
            raise ParseError("--evaluator finite requires --v")
        evaluator = Finite(v=_parse_prime(args.v, spec), star=args.star)
    else:
        if args.v is None:
            raise ParseError("--evaluator vadic requires --v")
        evaluator = Vadic(v=_parse_prime(args.v, spec), N=args.N, D=args.D,
                          star=args.star)
    value, verdict = evaluate_relation(rel, evaluator)
    return {"command": "verify", "q": spec.q, "family": args.family,
            "input": inp, "evaluator": args.evaluator, "star": args.star,
            "terms": len(rel.terms), "value": str(value),
            "verdict": str(verdict), "passed": verdict.passed}


def _run_search(args, spec: FieldSpec) -> dict:
    v = _parse_prime(args.v, spec)
    scope = SearchScope(spec=spec, v=v, weight_max=args.weight_max,
                        depth_max=args.depth_max, N=args.N, D=args.D,
                        q_even_only=not args.all_tuples,
                        include_negatives=args.include_negatives)
    found = find_relations(scope)
    report = compare_with_universal(found, scope)
    report["command"] = "search"
    report["passed"] = report["containment"]
    return report


def _make_ring(text: str):
    parts = text.split(":")
    kind = parts[0]
    if kind == "zmod":
        return ZModRing(int(parts[1]))
    if kind == "polymod":
        return TruncatedPolyRing(int(parts[1]), int(parts[2]))
    if kind == "rationals":
        return RationalRing()
    if kind == "gf":
        return GFRing(FieldSpec.parse(f"q={parts[1]}"))
    raise ParseError(f"unknown ring {text!r}")


def _run_harmonic(args) -> dict:
    ring = _make_ring(args.ring)
    failures = []
    for i in range(args.checks):
        seed = args.seed + i
        inst = random_instance(seed, ring, (args.index_size, args.magma_size),
                               doubling=args.doubling)
        if args.doubling:
            if not inst.base:
                continue
            pairs = tuple((s, 2 + (seed + j) % 2)
                          for j, s in enumerate(inst.base))
            residual, ok = check_thmD(inst, pairs)
        else:
            depth = min(len(inst.magma) | 1, 3)
            s = tuple(inst.magma[:depth])
            residual, ok = check_thmC(inst, s)
        if not ok:
            failures.append({"seed": seed, "residual": ring.to_str(residual),
                             "instance": inst.to_json(seed)})
    return {"command": "harmonic", "ring": ring.name, "checks": args.checks,
            "doubling": args.doubling, "failures": failures,
            "passed": not failures}


def _run_primes(args, spec: FieldSpec) -> dict:
    primes = []
    for d in range(1, args.degree_max + 1):
        primes.extend(str(v) for v in irreducible_polys(spec, d))
    return {"command": "primes", "q": spec.q, "degree_max": args.degree_max,
            "primes": primes, "passed": True}


def _csv_rows(result: dict) -> list[list[str]]:
    if result["command"] == "primes":
        return [["prime"]] + [[p] for p in result["primes"]]
    if result["command"] == "search":
        header = ["key", "value"]
        rows = [[k, json.dumps(result[k], sort_keys=True)
                 if isinstance(result[k], (dict, list)) else str(result[k])]
                for k in sorted(result)]
        return [header] + rows
    keys = sorted(result)
    return [keys, [json.dumps(result[k], sort_keys=True)
                   if isinstance(result[k], (dict, list)) else str(result[k])
                   for k in keys]]


def emit_report(result: dict, cfg: RunConfig) -> int:
    """Write the report in the requested format; return the exit code."""
    if cfg.format == "json":
        text = json.dumps(result, sort_keys=True, indent=2) + "\n"
    elif cfg.format == "csv":
        text = "\n".join(",".join(f'"{c}"' if "," in c else c for c in row)
                         for row in _csv_rows(result)) + "\n"
    else:
        text = "".join(f"{k}: {result[k]}\n" for k in sorted(result))
    if cfg.out:
        try:
            with open(cfg.out, "w") as fh:
                fh.write(text)
        except OSError as exc:
            print(f"cannot write {cfg.out}: {exc}", file=sys.stderr)
            return 3
    else:
        sys.stdout.write(text)
    return 0 if result.get("passed", True) else 1


def main(argv=None) -> int:
    try:
        cfg = parse_args(argv if argv is not None else sys.argv[1:])
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else 2
    args = cfg.args
    try:
        if cfg.command == "compute":
            result = _run_compute(args, _field_spec(args))
        elif cfg.command == "verify":
            result = _run_verify(args, _field_spec(args))
        elif cfg.command == "search":
            result = _run_search(args, _field_spec(args))
        elif cfg.command == "harmonic":
            result = _run_harmonic(args)
        else:
            result = _run_primes(args, _field_spec(args))
    except (FFMzvError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    return emit_report(result, cfg)


if __name__ == "__main__":
    sys.exit(main())
