"""Command-line front end.

    xilab selftest [--format json|csv] [--out PATH] [tolerance flags]
    xilab verify CASE [--x F] [--m I] [--n I] [--beta RE,IM]
                 [--variant printed|corrected|both] [--jobs N] [...]
    xilab bounds [--grid MIN:MAX:POINTS] [...]
    xilab report [--format json|csv] [--out PATH] [--jobs N] [...]

Exit codes: 0 all pass, 1 verification failure, 2 usage error,
3 numerical non-convergence.  XILAB_PROFILE may point to a key=value
tolerance profile file; command-line flags override it.

Printed variants of disputed formulas report DIVERGENT/FAIL verdicts as
evidence; they are informational and do not affect exit codes.
"""

import argparse
import math
import sys

from . import identities, report
from .errors import DomainError, NonConvergenceError, XilabError

EXIT_PASS = 0
EXIT_VERIFICATION_FAILURE = 1
EXIT_USAGE = 2
EXIT_NONCONVERGENCE = 3

VERIFY_SELECTORS = identities.CASE_NAMES + ("all",)


def _add_common(parser):
    parser.add_argument("--quad-tol", type=float, default=None,
                        help="absolute quadrature tolerance (default 1e-10)")
    parser.add_argument("--identity-tol", type=float, default=None,
                        help="identity residual tolerance (default 1e-7)")
    parser.add_argument("--format", choices=("json", "csv"), default="json",
                        help="output format (default json)")
    parser.add_argument("--out", default=None, help="output path; '-' or "
                        "omitted prints to stdout")
    parser.add_argument("--jobs", type=int, default=1,
                        help="case fan-out width; results are identical for "
                        "any value")


def _build_parser():
    parser = argparse.ArgumentParser(
        prog="xilab",
        description="Numerical verification workbench for xi/digamma "
                    "integral identities and Hardy-integral bounds.")
    sub = parser.add_subparsers(dest="command", required=True)

    p_self = sub.add_parser("selftest", help="kernel oracle battery")
    _add_common(p_self)

    p_verify = sub.add_parser("verify", help="identity verification")
    p_verify.add_argument("case", choices=VERIFY_SELECTORS)
    p_verify.add_argument("--x", type=float, default=None)
    p_verify.add_argument("--m", type=int, default=None)
    p_verify.add_argument("--n", type=int, default=None)
    p_verify.add_argument("--beta", default=None, metavar="RE,IM",
                          help="complex beta as re,im (im optional)")
    p_verify.add_argument("--variant", choices=("printed", "corrected", "both"),
                          default="both")
    _add_common(p_verify)

    p_bounds = sub.add_parser("bounds", help="sandwich scan and constants")
    p_bounds.add_argument("--grid", default="0.01:100:25", metavar="MIN:MAX:N")
    _add_common(p_bounds)

    p_report = sub.add_parser("report", help="full run: selftest + all "
                              "verifications + bounds")
    p_report.add_argument("--grid", default="0.01:100:25", metavar="MIN:MAX:N")
    _add_common(p_report)
    return parser


def _profile_from_args(args) -> report.ToleranceProfile:
    prof = report.ToleranceProfile.from_environment()
    return prof.replace(quad_tol=args.quad_tol, identity_tol=args.identity_tol)


def _parse_grid(spec: str):
    parts = spec.split(":")
    if len(parts) != 3:
        raise DomainError(f"grid spec must be MIN:MAX:POINTS, got {spec!r}")
    lo, hi, n = float(parts[0]), float(parts[1]), int(parts[2])
    if not (0.0 < lo < hi) or n < 2:
        raise DomainError(f"grid needs 0 < min < max and points >= 2, got {spec!r}")
    return lo, hi, n


def _parse_beta(spec: str) -> complex:
    parts = spec.split(",")
    if len(parts) not in (1, 2):
        raise DomainError(f"beta must be RE or RE,IM, got {spec!r}")
    re = float(parts[0])
    im = float(parts[1]) if len(parts) == 2 else 0.0
    return complex(re, im)


def _verify_triples(args):
    """Explicit-parameter single case, or the default grid for a selector."""
    explicit = any(v is not None for v in (args.x, args.m, args.n, args.beta))
    if not explicit:
        triples = identities.default_cases(args.case)
    else:
        if args.case == "all":
            raise DomainError("explicit parameters need a single case name")
        name = args.case
        if name in ("hardy11", "koshliakov12"):
            if args.x is None:
                raise DomainError(f"{name} needs --x")
            params = {"x": args.x}
        elif name == "genpsi":
            if args.m is None or args.x is None:
                raise DomainError("genpsi needs --m and --x")
            if not 0 <= args.m <= 3:
                raise DomainError("genpsi supports m in 0..3")
            params = {"m": args.m, "x": args.x}
        elif name == "kosh2":
            if args.x is None:
                raise DomainError("kosh2 needs --x")
            params = {"x": args.x}
        elif name == "cosine13":
            if args.beta is None:
                raise DomainError("cosine13 needs --beta")
            params = {"beta": _parse_beta(args.beta)}
        else:  # ximoment
            if args.n is None:
                raise DomainError("ximoment needs --n")
            params = {"n": args.n}
        triples = []
        if name in identities.VARIANT_FAMILIES:
            corrected = (identities.KOSH2_CORRECTED if name == "kosh2"
                         else identities.COSINE13_CORRECTED)
            if args.variant in ("printed", "both"):
                triples.append((name, params, identities.PRINTED))
            if args.variant in ("corrected", "both"):
                triples.append((name, params, corrected))
        else:
            triples.append((name, params, identities.PRINTED))
    if args.variant != "both":
        triples = [t for t in triples
                   if t[0] not in identities.VARIANT_FAMILIES
                   or t[2].form == args.variant]
    return triples


def _emit(text: str, out):
    if out in (None, "-"):
        sys.stdout.write(text)
    else:
        with open(out, "w", encoding="utf-8") as fh:
            fh.write(text)


def _emit_report(rep, args):
    if args.format == "json":
        _emit(report.report_to_json(rep), args.out)
        return
    sections = []
    if rep.selftest:
        sections.append(report.selftest_to_csv(rep.selftest))
    if rep.cases:
        sections.append(report.cases_to_csv(rep.cases))
    if rep.bounds_rows:
        sections.append(report.bounds_to_csv(rep.bounds_rows))
    if args.out in (None, "-"):
        sys.stdout.write("\n".join(sections))
        return
    if len(sections) == 1:
        _emit(sections[0], args.out)
        return
    base = args.out[:-4] if args.out.endswith(".csv") else args.out
    names = []
    if rep.selftest:
        names.append(("selftest", report.selftest_to_csv(rep.selftest)))
    if rep.cases:
        names.append(("cases", report.cases_to_csv(rep.cases)))
    if rep.bounds_rows:
        names.append(("bounds", report.bounds_to_csv(rep.bounds_rows)))
    for suffix, text in names:
        _emit(text, f"{base}.{suffix}.csv")


def _summarize(rep):
    for s in rep.selftest:
        print(f"selftest {s.name:28s} {'pass' if s.passed else 'FAIL'}  {s.detail}",
              file=sys.stderr)
    for c in rep.cases:
        tag = " (informational)" if report._case_informational(c) else ""
        res = "" if not math.isfinite(c.residual) else f" residual={c.residual:.3g}"
        print(f"case {c.name} {c.variant.form} {c.params}: {c.verdict}{res}{tag}",
              file=sys.stderr)
    if rep.bounds_rows:
        ok = sum(1 for r in rep.bounds_rows if r.sandwich_ok_derived)
        print(f"bounds: {ok}/{len(rep.bounds_rows)} derived sandwich rows ok",
              file=sys.stderr)
    if rep.constants:
        print(f"constants: c1 delta={rep.constants['c1_delta']:.3g}, "
              f"c2 delta={rep.constants['c2_delta']:.3g}", file=sys.stderr)
    print(f"overall: {rep.overall}", file=sys.stderr)


def main(argv=None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        profile = _profile_from_args(args)
        if args.command == "selftest":
            rep = report.build_report(profile, selector=None,
                                      with_bounds=False)
        elif args.command == "verify":
            triples = _verify_triples(args)
            cases = report.run_cases(triples, profile, jobs=args.jobs)
            rep = report.RunReport(report.TOOL_VERSION, profile, [], cases,
                                   [], None, None,
                                   report.variant_evidence(cases, []),
                                   "PASS")
            for case in cases:
                if report._case_informational(case):
                    continue
                if case.verdict not in (identities.PASS, identities.SKIPPED):
                    rep.overall = "FAIL"
        elif args.command == "bounds":
            grid = _parse_grid(args.grid)
            rows, constants, squeeze = report.run_bounds(grid, profile)
            rep = report.RunReport(report.TOOL_VERSION, profile, [], [],
                                   rows, constants, squeeze,
                                   report.variant_evidence([], rows), "PASS")
            bad = any(not r.sandwich_ok_derived or "nonpositive" in r.flags
                      or "monotonicity-break" in r.flags for r in rows)
            if bad or not constants["within_tolerance"]:
                rep.overall = "FAIL"
        else:
            grid = _parse_grid(args.grid)
            rep = report.build_report(profile, selector="all",
                                      grid_spec=grid, jobs=args.jobs)
        _emit_report(rep, args)
        _summarize(rep)
        return EXIT_PASS if rep.overall == "PASS" else EXIT_VERIFICATION_FAILURE
    except NonConvergenceError as exc:
        print(f"xilab: non-convergence: {exc}", file=sys.stderr)
        return EXIT_NONCONVERGENCE
    except DomainError as exc:
        print(f"xilab: usage error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except XilabError as exc:
        print(f"xilab: error: {exc}", file=sys.stderr)
        return EXIT_VERIFICATION_FAILURE


if __name__ == "__main__":
    sys.exit(main())
