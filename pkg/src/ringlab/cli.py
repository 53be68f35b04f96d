"""Command-line interface: file-driven ring analysis with stable reports.

One command per process.  Human-readable text goes to stdout; ``--json``
switches to a canonical machine schema (sorted keys, no timestamps).  Exit
codes: 0 success, 1 usage, 2 invalid spec, 3 budget or size guard exceeded,
4 verification failure.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Any, Dict, List, Optional, Sequence

from . import __version__
from .core import DEFAULT_GUARDS, GuardConfig, RingTable, nilradical
from .errors import (
    BudgetExceededError,
    LatticeGuardError,
    RingLabError,
    SizeGuardError,
    SpecError,
)
from .ideals import (
    IdealSet,
    all_ideals,
    ideal_power,
    is_divided,
    is_primary,
    is_prime,
    proper_ideals,
)
from .classify import classify_ideal, is_n_oa_fast, list_n_oa_ideals
from .factorize import Certificate, find_factorization, is_n_oaf, oaf_dim
from .specdoc import (
    SpecDocument,
    build_ring,
    parse_spec_document,
    resolve_ideal,
)
from .verify import (
    CorpusEntry,
    default_corpus,
    example_local_algebra_spec,
    run_corpus,
)
from . import specdoc

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_SPEC = 2
EXIT_BUDGET = 3
EXIT_VERIFY = 4


class _Parser(argparse.ArgumentParser):
    """argparse flavor that reports usage problems with exit code 1."""

    def error(self, message: str) -> None:  # type: ignore[override]
        self.print_usage(sys.stderr)
        sys.stderr.write(f"{self.prog}: error: {message}\n")
        sys.exit(EXIT_USAGE)


def _build_parser() -> _Parser:
    # the shared flags may appear before or after the subcommand; SUPPRESS
    # keeps the subparser pass from clobbering values set earlier
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", default=argparse.SUPPRESS,
                        help="machine-readable output")
    common.add_argument("--max-ring-size", type=int, default=argparse.SUPPRESS)
    common.add_argument("--max-ideals", type=int, default=argparse.SUPPRESS)
    common.add_argument("--tuple-budget", type=int, default=argparse.SUPPRESS)

    parser = _Parser(prog="ringlab", description=__doc__.splitlines()[0],
                     parents=[common])
    sub = parser.add_subparsers(dest="command", required=True)

    def with_spec(name: str, help_: str) -> argparse.ArgumentParser:
        p = sub.add_parser(name, help=help_, parents=[common])
        p.add_argument("spec", help="path to a ring spec file")
        return p

    with_spec("info", "ring summary")
    with_spec("ideals", "enumerate the ideal lattice with canonical generators")

    check = with_spec("check-ideal", "classify one ideal at one n")
    check.add_argument("--gens", nargs="*", default=None,
                       help="generator expressions of the target ideal")
    check.add_argument("--ideal", default=None,
                       help="name of an ideal declared in the spec file")
    check.add_argument("--n", type=int, required=True)

    factor = with_spec("factor", "factor an ideal over a generator class")
    factor.add_argument("--gens", nargs="*", default=None)
    factor.add_argument("--ideal", default=None)
    factor.add_argument("--n", type=int, default=None)
    factor.add_argument("--mode", choices=("oa", "prime"), default="prime")
    factor.add_argument("--replay", action="store_true",
                        help="replay the certificate before printing it")

    classify = with_spec("classify", "n-OAF verdicts for n = 1..max-n")
    classify.add_argument("--max-n", type=int, default=4)

    verify = sub.add_parser("verify", help="run the structural check corpus",
                            parents=[common])
    verify.add_argument("--corpus", default="default",
                        help='"default" or a path to a corpus file')

    sub.add_parser("worked-examples", parents=[common],
                   help="golden transcript of the two reference computations")
    return parser


def _guards(args: argparse.Namespace) -> GuardConfig:
    return GuardConfig(
        max_ring_size=getattr(args, "max_ring_size", DEFAULT_GUARDS.max_ring_size),
        full_check_size=DEFAULT_GUARDS.full_check_size,
        max_ideals=getattr(args, "max_ideals", DEFAULT_GUARDS.max_ideals),
        tuple_budget=getattr(args, "tuple_budget", DEFAULT_GUARDS.tuple_budget),
    )


def _load_document(path: str) -> SpecDocument:
    try:
        with open(path, "r", encoding="utf-8") as handle:
            text = handle.read()
    except OSError as exc:
        raise SpecError(f"cannot read spec file {path}: {exc}") from None
    return parse_spec_document(text)


def _gen_token(token: Any) -> Any:
    """CLI generator tokens: JSON arrays for composite rings, raw otherwise."""
    if isinstance(token, str) and token.lstrip().startswith("["):
        try:
            return json.loads(token)
        except json.JSONDecodeError as exc:
            raise SpecError(f"bad generator expression {token!r}: {exc.msg}") from None
    return token


def _target_ideal(args: argparse.Namespace, doc: SpecDocument,
                  ring: RingTable) -> IdealSet:
    if args.ideal is not None:
        if args.ideal not in doc.ideals:
            raise SpecError(f"spec file declares no ideal named {args.ideal!r}")
        return resolve_ideal(ring, doc.ideals[args.ideal])
    if args.gens is None:
        raise SpecError("provide --gens or --ideal to pick the target ideal")
    return resolve_ideal(ring, [_gen_token(t) for t in args.gens])


def _ring_summary(ring: RingTable) -> Dict[str, Any]:
    return {
        "name": ring.name,
        "size": ring.size,
        "local": ring.is_local,
        "units": len(ring.units),
        "maximal_ideals": [m.describe() for m in ring.maximal_ideals],
        "nilradical": nilradical(ring).describe(),
    }


def _emit(args: argparse.Namespace, ring: Optional[RingTable],
          payload: Any, text_lines: Sequence[str]) -> None:
    if args.json:
        report = {
            "command": args.command,
            "ring_summary": _ring_summary(ring) if ring is not None else None,
            "payload": payload,
            "tool_version": __version__,
        }
        print(json.dumps(report, sort_keys=True, indent=2))
    else:
        for line in text_lines:
            print(line)


def _summary_lines(ring: RingTable) -> List[str]:
    s = _ring_summary(ring)
    return [
        f"ring {s['name']}: size={s['size']} local={s['local']} units={s['units']}",
        f"maximal ideals: {', '.join(s['maximal_ideals'])}",
        f"nilradical: {s['nilradical']}",
    ]


def _cmd_info(args: argparse.Namespace, guards: GuardConfig) -> int:
    doc = _load_document(args.spec)
    ring = build_ring(doc.ring, guards)
    _emit(args, ring, _ring_summary(ring), _summary_lines(ring))
    return EXIT_OK


def _cmd_ideals(args: argparse.Namespace, guards: GuardConfig) -> int:
    doc = _load_document(args.spec)
    ring = build_ring(doc.ring, guards)
    lattice = all_ideals(ring, max_ideals=guards.max_ideals)
    payload = [
        {"generators": [ring.element_names[g] for g in i.generators],
         "size": len(i), "prime": i.is_proper and is_prime(i)}
        for i in lattice
    ]
    lines = _summary_lines(ring) + [f"ideals ({len(lattice)}):"] + [
        f"  {i.describe():20} size={len(i):4} prime={i.is_proper and is_prime(i)}"
        for i in lattice
    ]
    _emit(args, ring, payload, lines)
    return EXIT_OK


def _cmd_check_ideal(args: argparse.Namespace, guards: GuardConfig) -> int:
    doc = _load_document(args.spec)
    ring = build_ring(doc.ring, guards)
    ideal = _target_ideal(args, doc, ring)
    if not ideal.is_proper:
        raise SpecError("target ideal is the whole ring; pick a proper ideal")
    report = classify_ideal(ideal, args.n, guards.tuple_budget)
    payload = {
        "ideal": ideal.describe(),
        "n": args.n,
        "prime": report.is_prime,
        "primary": is_primary(ideal),
        "n_absorbing": report.is_n_absorbing,
        "n_oa": report.is_n_oa,
        "witness": [ring.element_names[w] for w in report.witness]
        if report.witness else None,
        "witness_kind": report.witness_kind,
    }
    lines = _summary_lines(ring) + [
        f"ideal {ideal.describe()} at n={args.n}:",
        f"  prime={payload['prime']} primary={payload['primary']}",
        f"  {args.n}-absorbing={payload['n_absorbing']} {args.n}-OA={payload['n_oa']}",
    ]
    if payload["witness"]:
        lines.append(
            f"  witness ({payload['witness_kind']}): ({', '.join(payload['witness'])})"
        )
    _emit(args, ring, payload, lines)
    return EXIT_OK


def _certificate_payload(cert: Certificate, ring: RingTable) -> Dict[str, Any]:
    return {
        "target": cert.target.describe(),
        "factors": [f.describe() for f in cert.factors],
        "class": cert.class_tag,
        "factor_reports": [
            {"ideal": r.ideal.describe(), "prime": r.is_prime, "n_oa": r.is_n_oa}
            for r in cert.reports
        ],
    }


def _cmd_factor(args: argparse.Namespace, guards: GuardConfig) -> int:
    doc = _load_document(args.spec)
    ring = build_ring(doc.ring, guards)
    ideal = _target_ideal(args, doc, ring)
    if not ideal.is_proper:
        raise SpecError("target ideal is the whole ring; pick a proper ideal")
    if args.mode == "oa":
        if args.n is None:
            raise SpecError("--mode oa needs --n")
        generators = list_n_oa_ideals(ring, args.n)
        tag = f"{args.n}-OA"
    else:
        generators = [p for p in proper_ideals(ring) if is_prime(p)]
        tag = "prime"
    cert = find_factorization(ideal, generators, class_tag=tag, n=args.n)
    lines = _summary_lines(ring)
    if cert is None:
        payload: Dict[str, Any] = {
            "target": ideal.describe(), "class": tag, "factors": None,
            "witness": f"{ideal.describe()} is not a product of {tag} ideals",
        }
        lines.append(f"factor {ideal.describe()} over {tag} ideals: NONE")
        lines.append(f"  witness: {payload['witness']}")
    else:
        replayed = cert.replay() if args.replay else None
        payload = _certificate_payload(cert, ring)
        payload["replayed"] = replayed
        lines.append(
            f"factor {ideal.describe()} over {tag} ideals: "
            + " * ".join(f.describe() for f in cert.factors)
        )
        if args.replay:
            lines.append(f"  replay: {'OK' if replayed else 'FAILED'}")
    _emit(args, ring, payload, lines)
    if args.replay and cert is not None and not payload["replayed"]:
        return EXIT_VERIFY
    return EXIT_OK


def _cmd_classify(args: argparse.Namespace, guards: GuardConfig) -> int:
    doc = _load_document(args.spec)
    ring = build_ring(doc.ring, guards)
    if args.max_n < 1:
        raise SpecError("--max-n must be at least 1")
    verdicts = []
    for n in range(1, args.max_n + 1):
        ok, witness = is_n_oaf(ring, n)
        verdicts.append(
            {"n": n, "n_oaf": ok, "witness": witness.describe() if witness else None}
        )
    dim = oaf_dim(ring, args.max_n)
    payload = {"verdicts": verdicts, "oaf_dim": dim, "max_n": args.max_n}
    lines = _summary_lines(ring)
    for v in verdicts:
        if v["n_oaf"]:
            lines.append(f"n={v['n']} YES")
        else:
            lines.append(f"n={v['n']} NO (witness {v['witness']})")
    lines.append(f"oaf_dim (n<={args.max_n}) = {dim if dim is not None else 'NONE'}")
    _emit(args, ring, payload, lines)
    return EXIT_OK


def _load_corpus(path: str) -> List[CorpusEntry]:
    try:
        with open(path, "r", encoding="utf-8") as handle:
            obj = json.load(handle)
    except OSError as exc:
        raise SpecError(f"cannot read corpus file {path}: {exc}") from None
    except json.JSONDecodeError as exc:
        raise SpecError(
            f"corpus syntax error at line {exc.lineno}, column {exc.colno}: {exc.msg}"
        ) from None
    if not isinstance(obj, list):
        raise SpecError("corpus file must hold a list of entries")
    entries = []
    for i, item in enumerate(obj):
        if not isinstance(item, dict) or "name" not in item or "ring" not in item:
            raise SpecError(f"corpus entry {i} needs 'name' and 'ring'")
        entries.append(
            CorpusEntry(
                name=str(item["name"]),
                spec=specdoc.parse_ring_spec(item["ring"]),
                tags=frozenset(item.get("tags", [])),
            )
        )
    return entries


def _cmd_verify(args: argparse.Namespace, guards: GuardConfig) -> int:
    corpus = default_corpus() if args.corpus == "default" else _load_corpus(args.corpus)
    results = run_corpus(corpus, guards=guards)
    payload = [r.to_json() for r in results]
    failures = sum(1 for r in results if r.verdict == "fail")
    skipped = sum(1 for r in results if r.verdict == "skipped")
    lines = []
    for r in results:
        mark = r.verdict.upper() + ("(vacuous)" if r.vacuous else "")
        n_part = f"n={r.n}" if r.n is not None else "    "
        lines.append(f"{mark:14} {r.check:28} {r.ring:24} {n_part:5} {r.detail}")
    lines.append(
        f"total={len(results)} failures={failures} skipped={skipped}"
    )
    _emit(args, None, payload, lines)
    return EXIT_VERIFY if failures else EXIT_OK


def _worked_example_local() -> Dict[str, Any]:
    """The 32-element local algebra: lattice slice, 3-OA class, verdicts."""
    ring = build_ring(example_local_algebra_spec())
    maximal = ring.maximal_ideals[0]
    cubed = ideal_power(maximal, 3)
    above_cubed = [i for i in all_ideals(ring) if cubed <= i]
    oa3 = list_n_oa_ideals(ring, 3)
    cert = find_factorization(resolve_ideal(ring, ["x"]), oa3, class_tag="3-OA", n=3)
    verdicts = [{"n": n, "n_oaf": is_n_oaf(ring, n)[0]} for n in range(1, 5)]
    witness3 = is_n_oaf(ring, 3)[1]
    squared = ideal_power(maximal, 2)
    divided, incomparable = is_divided(squared)
    return {
        "ring": _ring_summary(ring),
        "powers": {
            "M": maximal.describe(), "M^2": squared.describe(),
            "M^3": cubed.describe(), "M^4": ideal_power(maximal, 4).describe(),
        },
        "ideals_above_M3": [i.describe() for i in above_cubed],
        "three_oa_ideals": [i.describe() for i in oa3],
        "factor_x_at_3": None if cert is None else [f.describe() for f in cert.factors],
        "unfactorable_witness_at_3": witness3.describe() if witness3 else None,
        "n_oaf_verdicts": verdicts,
        "oaf_dim": oaf_dim(ring, 4),
        "M2_divided": divided,
        "M2_divided_witness": incomparable.describe() if incomparable else None,
    }


def _worked_example_idealization() -> Dict[str, Any]:
    """Chain ring of length 2 idealized by itself: factorable, not all 2-OA."""
    spec = specdoc.TrivialExtensionSpec(
        specdoc.AlgebraSpec(
            modulus=2, basis=("1", "x"), products=(("x", "x", "0"),),
            name="F2[X]/(X^2)",
        ),
        specdoc.SelfModuleSpec(),
    )
    ring = build_ring(spec)
    maximal = ring.maximal_ideals[0]
    squared = ideal_power(maximal, 2)
    non_oa = [i for i in proper_ideals(ring) if not is_n_oa_fast(i, 2)]
    return {
        "ring": _ring_summary(ring),
        "is_2_oaf": is_n_oaf(ring, 2)[0],
        "maximal_squared": {
            "describe": squared.describe(), "size": len(squared),
            "nonzero": not squared.is_zero,
        },
        "non_2_oa_ideals": [i.describe() for i in non_oa],
    }


def _cmd_worked_examples(args: argparse.Namespace, guards: GuardConfig) -> int:
    local = _worked_example_local()
    ideal_ext = _worked_example_idealization()
    payload = {"local_algebra": local, "chain_idealization": ideal_ext}
    lines = [
        "== 32-element local algebra: Z2-basis {1,x,y,y2,y3}, x^2=xy=y^4=0 ==",
        f"ring: size={local['ring']['size']} local={local['ring']['local']} "
        f"units={local['ring']['units']}",
        f"M={local['powers']['M']}  M^2={local['powers']['M^2']}  "
        f"M^3={local['powers']['M^3']}  M^4={local['powers']['M^4']}",
        f"ideals containing M^3 ({len(local['ideals_above_M3'])}): "
        + ", ".join(local["ideals_above_M3"]),
        f"3-OA ideals ({len(local['three_oa_ideals'])}): "
        + ", ".join(local["three_oa_ideals"]),
        "factor (x) over 3-OA ideals: "
        + ("NONE" if local["factor_x_at_3"] is None
           else " * ".join(local["factor_x_at_3"])),
        "n-OAF verdicts: " + ", ".join(
            f"n={v['n']} {'YES' if v['n_oaf'] else 'NO'}"
            for v in local["n_oaf_verdicts"]
        )
        + f" (witness at n=3: {local['unfactorable_witness_at_3']})",
        f"oaf_dim (n<=4) = {local['oaf_dim']}",
        f"is_divided(M^2) = {local['M2_divided']} "
        f"(incomparable with {local['M2_divided_witness']})",
        "",
        "== chain-ring idealization: A = F2[X]/(X^2), R = A prop A ==",
        f"ring: size={ideal_ext['ring']['size']} local={ideal_ext['ring']['local']}",
        f"R is 2-OAF: {ideal_ext['is_2_oaf']}",
        f"(M prop A)^2 = {ideal_ext['maximal_squared']['describe']}: "
        f"size={ideal_ext['maximal_squared']['size']} "
        f"nonzero={ideal_ext['maximal_squared']['nonzero']}",
        f"non-2-OA proper ideals ({len(ideal_ext['non_2_oa_ideals'])}): "
        + ", ".join(ideal_ext["non_2_oa_ideals"]),
    ]
    _emit(args, None, payload, lines)
    return EXIT_OK


_DISPATCH = {
    "info": _cmd_info,
    "ideals": _cmd_ideals,
    "check-ideal": _cmd_check_ideal,
    "factor": _cmd_factor,
    "classify": _cmd_classify,
    "verify": _cmd_verify,
    "worked-examples": _cmd_worked_examples,
}


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    args.json = getattr(args, "json", False)
    guards = _guards(args)
    try:
        return _DISPATCH[args.command](args, guards)
    except SpecError as exc:
        print(f"spec error: {exc}", file=sys.stderr)
        return EXIT_SPEC
    except (SizeGuardError, LatticeGuardError, BudgetExceededError) as exc:
        print(f"guard exceeded: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    except RingLabError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_SPEC


if __name__ == "__main__":
    sys.exit(main())
