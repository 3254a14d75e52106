"""Command-line front end.

    fpg show main
    fpg abelianize main
    fpg tietze main --eliminate t=main.17 --eliminate u2=main.16
    fpg tc main --subgroup "a1; u3; b a1 a2 a3"
    fpg cert check corpus.cert
    fpg cert search main "a1 a3 a1^-1 a3^-1"
    fpg rep verify main
    fpg brown --crosscheck
    fpg verify-paper --json

Exit status: 0 success, 1 verification failure, 2 usage or parse error.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from .abelian import abelianization
from .brown import ComplexError, assemble, crosscheck_assembly, expected_counts, shipped_complex, parse_complex
from .consequence import (
    CertificateSyntaxError,
    check_certificate,
    format_certificate,
    parse_certificate,
    search_certificate,
    verify_corpus,
)
from .cosets import CapExceeded, default_max_cosets, permutation_rep, todd_coxeter, verify_table
from .datasets import NAMES, builtin
from .gf2 import derive_assignment, image_order, verify_relations
from .presentation import FinitePresentation, PresentationError, parse_presentation, tietze_eliminate
from .verify import CHECK_NAMES, TIETZE_STEPS, run_suite
from .words import Word, WordSyntaxError

OK, FAILED, USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def read_text(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    return Path(path).read_text()


def load_presentation(spec: str) -> FinitePresentation:
    """A dataset name, a presentation file, or ``-`` for standard input."""
    if spec in NAMES:
        return builtin(spec)
    if spec != "-" and not Path(spec).exists():
        # surfaces as UnknownDataset for bare names
        return builtin(spec)
    return parse_presentation(read_text(spec))


def cmd_show(args) -> int:
    print(load_presentation(args.presentation).serialize(), end="")
    return OK


def cmd_abelianize(args) -> int:
    print(abelianization(load_presentation(args.presentation)))
    return OK


def cmd_tietze(args) -> int:
    P = load_presentation(args.presentation)
    steps = []
    for item in args.eliminate or []:
        g, sep, r = item.partition("=")
        if not sep:
            raise UsageError(f"--eliminate expects GEN=RELATOR, got {item!r}")
        steps.append((g, r))
    if not steps and args.presentation == "main":
        steps = list(TIETZE_STEPS)
    for g, r in steps:
        P = tietze_eliminate(P, g, r)
    print(P.serialize(), end="")
    if args.abelianize:
        print(f"# abelianization: {abelianization(P)}")
    return OK


def _subgroup(text: str | None) -> list[Word]:
    if not text:
        return []
    return [Word.parse(part) for part in text.split(";") if part.strip()]


def cmd_tc(args) -> int:
    P = load_presentation(args.presentation)
    H = _subgroup(args.subgroup)
    cap = args.max_cosets if args.max_cosets is not None else default_max_cosets()
    out = todd_coxeter(P, H, max_cosets=cap, strategy=args.strategy)
    if isinstance(out, CapExceeded):
        print(f"cap-exceeded at {out.cosets_used}")
        return FAILED
    print(f"index={out.index}")
    if args.verify and not verify_table(P, H, out.table):
        print("table audit failed")
        return FAILED
    if args.perm:
        for g, p in permutation_rep(out).items():
            print(f"{g}: {' '.join(map(str, p))}")
    return OK


def cmd_cert(args) -> int:
    if args.cert_cmd == "check":
        name, target, cert = parse_certificate(read_text(args.file))
        P = load_presentation(args.presentation or name)
        ok = check_certificate(P, target, cert)
        print(f"{'valid' if ok else 'invalid'}: {len(cert)} factors over {name}")
        return OK if ok else FAILED
    if args.cert_cmd == "search":
        P = load_presentation(args.presentation)
        if args.max_factors < 0 or args.max_conj < 0:
            raise UsageError("limits must be non-negative")
        target = Word.parse(args.target)
        cert = search_certificate(P, target, max_factors=args.max_factors, max_conj_len=args.max_conj)
        if cert is None:
            print("none within limits")
            return FAILED
        print(format_certificate(args.presentation, target, cert), end="")
        return OK
    rep = verify_corpus()
    for name, target, ok in rep.entries:
        print(f"{'ok  ' if ok else 'FAIL'} {name}")
    print(f"{rep.passed}/{len(rep.entries)} valid")
    return OK if rep.ok else FAILED


def cmd_rep(args) -> int:
    P = load_presentation(args.presentation)
    rep = derive_assignment()
    report = verify_relations(P, rep)
    for name, ok in report:
        print(f"{'pass' if ok else 'FAIL'} {name}")
    passed = sum(ok for _, ok in report)
    print(f"{passed}/{len(report)} relators hold; image order {image_order({g: rep[g] for g in P.generators})}")
    return OK if passed == len(report) else FAILED


def cmd_brown(args) -> int:
    data = parse_complex(read_text(args.file)) if args.file else shipped_complex()
    P = assemble(data)
    if args.emit:
        print(P.serialize(), end="")
        return OK
    gens, rels = expected_counts(data)
    print(f"vertices={len(data.vertices)} edges={len(data.edges)} triangles={len(data.triangles)}")
    print(f"generators={len(P.generators)} relators={len(P.relators)} (expected {gens}, {rels})")
    status = OK if (len(P.generators), len(P.relators)) == (gens, rels) else FAILED
    if args.crosscheck:
        rep = crosscheck_assembly(data)
        bad = [n for n, ok in rep.gf2 if not ok]
        print(f"after substitution: torsion={rep.abelian_torsion} rank={rep.abelian_rank}")
        print(f"gf2: {len(rep.gf2) - len(bad)}/{len(rep.gf2)} pass")
        if not rep.ok:
            status = FAILED
    return status


def cmd_verify_paper(args) -> int:
    only = None
    if args.only:
        only = [n.strip() for item in args.only for n in item.split(",") if n.strip()]
        unknown = [n for n in only if n not in CHECK_NAMES]
        if unknown:
            raise UsageError(f"unknown check(s) {unknown}; choose from {CHECK_NAMES}")
    results = run_suite(only=only)
    ok = all(r.ok for r in results)
    if args.json:
        payload = {"ok": ok, "checks": [
            {"name": r.name, "ok": r.ok, "detail": r.detail, "seconds": round(r.seconds, 3)} for r in results
        ]}
        print(json.dumps(payload, indent=2))
    else:
        for r in results:
            print(r.line())
        print(f"{sum(r.ok for r in results)}/{len(results)} checks passed")
    return OK if ok else FAILED


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="fpg", description="Finitely presented group workbench.")
    sub = ap.add_subparsers(dest="cmd", required=True)

    p = sub.add_parser("show", help="print a presentation")
    p.add_argument("presentation", help="dataset name, file, or -")
    p.set_defaults(func=cmd_show)

    p = sub.add_parser("abelianize", help="abelian invariants")
    p.add_argument("presentation")
    p.set_defaults(func=cmd_abelianize)

    p = sub.add_parser("tietze", help="eliminate generators")
    p.add_argument("presentation")
    p.add_argument("--eliminate", action="append", metavar="GEN=RELATOR")
    p.add_argument("--abelianize", action="store_true")
    p.set_defaults(func=cmd_tietze)

    p = sub.add_parser("tc", help="Todd-Coxeter coset enumeration")
    p.add_argument("presentation")
    p.add_argument("--subgroup", help="generators separated by ';'")
    p.add_argument("--max-cosets", type=int)
    p.add_argument("--strategy", choices=["hlt", "felsch"], default="hlt")
    p.add_argument("--perm", action="store_true", help="print the permutation representation")
    p.add_argument("--verify", action="store_true", help="audit the finished table")
    p.set_defaults(func=cmd_tc)

    p = sub.add_parser("cert", help="consequence certificates")
    csub = p.add_subparsers(dest="cert_cmd", required=True)
    c = csub.add_parser("check")
    c.add_argument("file")
    c.add_argument("--presentation", help="override the presentation named in the file")
    c = csub.add_parser("search")
    c.add_argument("presentation")
    c.add_argument("target")
    c.add_argument("--max-factors", type=int, default=8)
    c.add_argument("--max-conj", type=int, default=8)
    csub.add_parser("corpus", help="validate the shipped corpus")
    p.set_defaults(func=cmd_cert)

    p = sub.add_parser("rep", help="mod 2 homology representation")
    rsub = p.add_subparsers(dest="rep_cmd", required=True)
    r = rsub.add_parser("verify")
    r.add_argument("presentation")
    p.set_defaults(func=cmd_rep)

    p = sub.add_parser("brown", help="assemble a presentation from orbit data")
    p.add_argument("file", nargs="?", help="complex file or - (default: shipped complex)")
    p.add_argument("--emit", action="store_true", help="print the assembled presentation")
    p.add_argument("--crosscheck", action="store_true")
    p.set_defaults(func=cmd_brown)

    p = sub.add_parser("verify-paper", help="run the full verification suite")
    p.add_argument("--only", action="append", metavar="CHECK", help=f"subset of {','.join(CHECK_NAMES)}")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_verify_paper)
    return ap


def cmd_dispatch(argv: list[str] | None = None) -> int:
    ap = build_parser()
    argv = sys.argv[1:] if argv is None else list(argv)
    try:
        args = ap.parse_args(argv)
    except SystemExit as exc:
        return USAGE if exc.code else OK
    try:
        return args.func(args)
    except (UsageError, PresentationError, WordSyntaxError, CertificateSyntaxError, ComplexError,
            OSError, KeyError) as exc:
        print(f"fpg: error: {exc}", file=sys.stderr)
        return USAGE


def main() -> None:
    sys.exit(cmd_dispatch())


if __name__ == "__main__":
    main()
