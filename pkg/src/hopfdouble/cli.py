"""Command-line front end.

Exit codes: 0 pass, 1 verification failure, 2 parse error, 3 invalid group,
4 degenerate pairing, 5 non-positive Gram form (or no integral at all).
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path
from typing import Sequence

from . import io
from .axioms import verify_cstar, verify_hopf_star
from .double import build_double, compare_with_oracle, verify_double, verify_theta
from .exceptions import (
    DegeneratePairingError,
    GramNotPositiveError,
    HopfError,
    IndexAlignmentError,
    InvalidGroupError,
    MissingIntegralError,
    PairingVerificationError,
    SingularGaloisMapError,
    SpecFormatError,
)
from .gns import gns_build, gns_report, verify_isometry
from .hopf import dualize, function_algebra, group_algebra
from .pairing import (
    PairingSpec,
    canonical_pairing,
    dual_pairing,
    flip,
    nondegeneracy,
    verify_actions,
    verify_galois,
    verify_pairing,
)
from .report import AxiomReport, CheckResult
from .tensor import Tolerance, default_tolerance

EXIT_OK, EXIT_FAIL, EXIT_PARSE, EXIT_GROUP, EXIT_DEGENERATE, EXIT_GRAM = range(6)

KINDS = {
    "group-algebra": group_algebra,
    "function-algebra": function_algebra,
    "dual": lambda G: dualize(group_algebra(G)),
}


class ParseFailure(Exception):
    pass


def _err(msg: str) -> None:
    print(f"error: {msg}", file=sys.stderr)


def _tolerance(args, *objs) -> Tolerance:
    base = default_tolerance(*objs)
    return Tolerance(
        abs=args.tolerance if args.tolerance is not None else base.abs,
        rel=args.rel_tolerance if args.rel_tolerance is not None else base.rel,
    )


def _load(reader, path):
    try:
        return reader(path)
    except (OSError, SpecFormatError) as exc:
        raise ParseFailure(str(exc)) from exc


def _emit(doc: dict, as_json: bool) -> None:
    if as_json:
        sys.stdout.write(io.dumps(doc, pretty=True))
        return
    lines = [f"tolerance: abs={doc['tolerance']['abs']:.3e} rel={doc['tolerance']['rel']:.3e}"]
    for name, section in doc.get("sections", {}).items():
        lines.append(f"[{name}]")
        if "entries" in section:
            lines.append(AxiomReport(tuple(CheckResult(e["check"], e["residual"], e["pass"]) for e in section["entries"])).to_text())
        else:
            lines.extend(f"  {k}: {v}" for k, v in section.items())
    for key, value in doc.items():
        if key not in ("tolerance", "sections"):
            lines.append(f"{key}: {value}")
    sys.stdout.write("\n".join(lines) + "\n")


def _report_doc(tol: Tolerance, sections: dict[str, AxiomReport | dict], **extra) -> dict:
    out_sections = {}
    overall = True
    for name, sec in sections.items():
        if isinstance(sec, AxiomReport):
            out_sections[name] = sec.to_dict()
            overall &= sec.overall
        else:
            out_sections[name] = sec
            overall &= bool(sec.get("pass", True))
    doc = {"tolerance": tol.to_dict(), "sections": out_sections}
    doc.update(extra)
    doc["overall"] = overall
    return doc


def _failed(name: str, exc: Exception) -> AxiomReport:
    print(f"{name}: {exc}", file=sys.stderr)
    return AxiomReport((CheckResult(name, 1.0, False),))


# -- subcommands --------------------------------------------------------------

def cmd_make(args) -> int:
    G = _load(io.read_group, args.group_file)
    H = KINDS[args.kind](G)
    io.write_spec(H, args.out_file)
    print(f"wrote {args.kind} spec of dimension {H.dim} to {args.out_file}")
    return EXIT_OK


def cmd_pairing(args) -> int:
    if args.group is not None:
        Pr = canonical_pairing(_load(io.read_group, args.group))
    else:
        Pr = dual_pairing(_load(io.read_spec, args.dual))
    if args.flip:
        Pr = flip(Pr)
    io.write_pairing(Pr, args.out_file)
    print(f"wrote pairing ({Pr.A.dim} x {Pr.B.dim}) to {args.out_file}")
    return EXIT_OK


def _spec_sections(H, tol) -> dict:
    sections: dict = {"hopf_star": verify_hopf_star(H, tol)}
    try:
        sections["cstar"] = verify_cstar(H, tol)
    except MissingIntegralError as exc:
        sections["cstar"] = _failed("integral_available", exc)
    return sections


def _pairing_sections(Pr: PairingSpec, tol) -> dict:
    sections = {
        "A.hopf_star": verify_hopf_star(Pr.A, tol),
        "B.hopf_star": verify_hopf_star(Pr.B, tol),
        "pairing": verify_pairing(Pr, tol),
        "actions": verify_actions(Pr, tol),
    }
    try:
        sections["galois"] = verify_galois(Pr, tol)
    except SingularGaloisMapError as exc:
        sections["galois"] = _failed("galois_invertible", exc)
    rank, smin, ok = nondegeneracy(Pr, tol)
    sections["nondegeneracy"] = {"rank": rank, "min_singular": smin, "pass": ok}
    return sections


def cmd_verify(args) -> int:
    data = _load(io.load_json, args.input)
    try:
        if io.is_double_dict(data):
            D = io.double_from_dict(data)
            tol = _tolerance(args, D.H)
            sections = {"double": verify_double(D, tol), "theta": verify_theta(D, tol)}
        elif isinstance(data, dict) and "P" in data:
            Pr = io.pairing_from_dict(data, base=Path(args.input).parent)
            tol = _tolerance(args, Pr)
            sections = _pairing_sections(Pr, tol)
        else:
            H = io.spec_from_dict(data)
            tol = _tolerance(args, H)
            sections = _spec_sections(H, tol)
    except (OSError, SpecFormatError) as exc:
        raise ParseFailure(str(exc)) from exc
    doc = _report_doc(tol, sections)
    _emit(doc, args.json)
    return EXIT_OK if doc["overall"] else EXIT_FAIL


def cmd_double(args) -> int:
    Pr = _load(io.read_pairing, args.pairing_file)
    tol = _tolerance(args, Pr)
    try:
        D = build_double(Pr, tol, force=args.force)
    except DegeneratePairingError as exc:
        _err(str(exc))
        return EXIT_DEGENERATE
    except (PairingVerificationError, MissingIntegralError) as exc:
        _err(str(exc))
        return EXIT_FAIL
    io.write_double(D, args.out_file)
    sections: dict = {}
    extra: dict = {"dim": D.H.dim}
    if args.verify:
        sections["double"] = verify_double(D, tol)
        sections["theta"] = verify_theta(D, tol)
    if args.oracle:
        G = _load(io.read_group, args.oracle)
        try:
            dev = compare_with_oracle(D, G, tol)
            sections["oracle"] = {"deviation": dev, "pass": dev <= tol.abs}
        except IndexAlignmentError as exc:
            sections["oracle"] = {"error": str(exc), "pass": False}
    doc = _report_doc(tol, sections, **extra)
    _emit(doc, args.json)
    return EXIT_OK if doc["overall"] else EXIT_FAIL


def cmd_gns(args) -> int:
    data = _load(io.load_json, args.spec_file)
    try:
        D = io.double_from_dict(data) if io.is_double_dict(data) else None
        H = D.H if D is not None else io.spec_from_dict(data)
    except SpecFormatError as exc:
        raise ParseFailure(str(exc)) from exc
    tol = _tolerance(args, H)
    norms = []
    if args.norms:
        raw = _load(io.load_json, args.norms)
        if not isinstance(raw, list):
            raise ParseFailure("norms file must be a JSON list of coordinate vectors")
        try:
            norms = [io.decode_complex(x, 1, "norm element") for x in raw]
        except SpecFormatError as exc:
            raise ParseFailure(str(exc)) from exc
        if any(x.shape != (H.dim,) for x in norms):
            raise ParseFailure(f"norm elements must have length {H.dim}")
    try:
        g = gns_build(H, tol)
        report = gns_report(g, args.samples, args.seed, tol, norms)
        sections: dict = {"cstar": report.pop("cstar")}
        extra = report
        if D is not None:
            gA, gB = gns_build(D.source.A, tol), gns_build(D.source.B, tol)
            iso = verify_isometry(D, gA, gB, g, tol, samples=args.samples, seed=args.seed)
            sections["isometry"] = iso.to_dict()
    except (GramNotPositiveError, MissingIntegralError) as exc:
        _err(str(exc))
        return EXIT_GRAM
    tol_doc = {"tolerance": tol.to_dict(), "samples": args.samples, "seed": args.seed}
    overall = all(s["overall"] for s in sections.values())
    doc = {**tol_doc, "sections": sections, **extra, "overall": overall}
    _emit(doc, args.json)
    return EXIT_OK if overall else EXIT_FAIL


# -- argument parsing ---------------------------------------------------------

def _add_tol(p: argparse.ArgumentParser) -> None:
    p.add_argument("--tolerance", type=float, default=None, help="absolute residual tolerance")
    p.add_argument("--rel-tolerance", type=float, default=None, help="relative tolerance (SVD/norm checks)")


def _add_format(p: argparse.ArgumentParser, default_json: bool = False) -> None:
    g = p.add_mutually_exclusive_group()
    g.add_argument("--json", dest="json", action="store_true", default=default_json)
    g.add_argument("--text", dest="json", action="store_false")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="hopfdouble", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("make", help="build a Hopf spec from a group table")
    p.add_argument("group_file")
    p.add_argument("kind", choices=sorted(KINDS))
    p.add_argument("out_file")
    p.set_defaults(func=cmd_make)

    p = sub.add_parser("pairing", help="write a canonical or dual pairing")
    src = p.add_mutually_exclusive_group(required=True)
    src.add_argument("--group", help="group table: evaluation pairing of C[G] with F(G)")
    src.add_argument("--dual", help="spec file H: evaluation pairing of H with its dual")
    p.add_argument("--flip", action="store_true", help="swap the roles of A and B")
    p.add_argument("out_file")
    p.set_defaults(func=cmd_pairing)

    p = sub.add_parser("verify", help="verify a spec, pairing or double export")
    p.add_argument("input")
    _add_tol(p)
    _add_format(p)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("double", help="construct the quantum double of a pairing")
    p.add_argument("pairing_file")
    p.add_argument("out_file")
    p.add_argument("--verify", action="store_true")
    p.add_argument("--oracle", metavar="GROUP_FILE", help="compare against the brute-force group double")
    p.add_argument("--force", action="store_true", help="skip pairing axiom checks")
    _add_tol(p)
    _add_format(p)
    p.set_defaults(func=cmd_double)

    p = sub.add_parser("gns", help="GNS representation, norms and isometry report")
    p.add_argument("spec_file")
    p.add_argument("--samples", type=int, default=100)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--norms", metavar="FILE", help="JSON list of coordinate vectors")
    _add_tol(p)
    _add_format(p, default_json=True)
    p.set_defaults(func=cmd_gns)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except ParseFailure as exc:
        _err(str(exc))
        return EXIT_PARSE
    except InvalidGroupError as exc:
        _err(str(exc))
        return EXIT_GROUP
    except HopfError as exc:
        _err(str(exc))
        return EXIT_FAIL


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
