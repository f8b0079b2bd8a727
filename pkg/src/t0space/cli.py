"""Command-line front door.

Every command prints a canonical JSON run report to standard output. Exit
codes: 0 when all checks pass, 1 when some check fails (the report says
which), 2 on usage, parsing, or cap errors.
"""

import argparse
import sys

from .catalog import run_catalog_check
from .classify import classify
from .core import closed_sets, set_repr, sober_check
from .docio import load_space, space_to_doc
from .errors import ParseError, WorkbenchError
from .fuzz import fuzz_csv_rows, fuzz_run
from .hasse import render_figure, to_dot
from .maps import is_embedding, is_homeomorphic
from .power import (
    eta_map,
    hoare_space,
    product_checks,
    product_space,
    smyth_space,
    xi_map,
)
from .reflect import preservation_checks, reflect_omega, sobrify
from .report import ReportTimer, build_report, emit, load_report, verify_report
from .rudin import RudinProblem, product_rudin_checks, rudin_search
from .core import irreducible_sets


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="t0space",
        description="Workbench for finite T0 spaces and certified counterexamples",
    )
    sub = parser.add_subparsers(dest="cmd", required=True)

    p = sub.add_parser("classify", help="property verdicts for a space document")
    p.add_argument("file")

    p = sub.add_parser("power", help="build a power space")
    p.add_argument("which", choices=["smyth", "hoare"])
    p.add_argument("file")

    p = sub.add_parser("reflect", help="omega-well-filtered reflection")
    p.add_argument("file")

    p = sub.add_parser("sobrify", help="sobrification")
    p.add_argument("file")

    p = sub.add_parser("rudin", help="minimal closed sets meeting a compact family")
    p.add_argument("file")
    p.add_argument("--family", required=True,
                   help="semicolon-separated point sets, comma-separated names")
    p.add_argument("--closed", required=True, help="comma-separated point names")

    p = sub.add_parser("product", help="product space with theorem checks")
    p.add_argument("files", nargs="+")
    p.add_argument("--check", action="store_true")

    p = sub.add_parser("catalog", help="run a named catalog check")
    p.add_argument("name")
    p.add_argument("check")

    p = sub.add_parser("fuzz", help="seeded random-space invariant battery")
    p.add_argument("--n", type=int, default=4)
    p.add_argument("--cases", type=int, default=100)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--workers", type=int, default=1)
    p.add_argument("--csv", help="write the per-case verdict table here")

    p = sub.add_parser("verify", help="re-check certificates in a report")
    p.add_argument("report")

    p = sub.add_parser("export-dot", help="Hasse diagram of a space document")
    p.add_argument("file")
    p.add_argument("-o", "--out", required=True)
    p.add_argument("--fig", help="also render the diagram to this image file")

    return parser


def _named_masks(space, text):
    index = {space.point_name(i): i for i in range(space.n)}
    mask = 0
    for name in [t for t in text.split(",") if t.strip()]:
        name = name.strip()
        if name not in index:
            raise ParseError(f"unknown point name {name!r}")
        mask |= 1 << index[name]
    return mask


def cmd_classify(args, timer):
    space = load_space(args.file)
    report = classify(space)
    from .fuzz import run_invariant_battery

    battery = run_invariant_battery(space)
    passed = all(battery.values())
    verdicts = dict(report.verdicts)
    verdicts.update({f"invariant:{k}": v for k, v in battery.items()})
    return build_report(
        ["classify", args.file], verdicts,
        certificates=list(report.certificates.values()),
        details={"space": space_to_doc(space)},
        passed=passed, timer=timer,
    ), passed


def cmd_power(args, timer):
    space = load_space(args.file)
    if args.which == "smyth":
        ps = smyth_space(space)
        emb = is_embedding(xi_map(space, ps))
        verdicts = {"xi-embedding": emb}
        elems = [set_repr(space, k) for k in ps.elems]
    else:
        hs = hoare_space(space, irreducible_sets(space))
        emb = is_embedding(eta_map(space, hs))
        diamonds = set(hs.space.opens)
        box_closed = {
            hs.space.full ^ d for d in diamonds
        } == {
            _box(hs.elems, c) for c in closed_sets(space)
        }
        verdicts = {"eta-embedding": emb, "closed-sets-are-boxes": box_closed}
        elems = [set_repr(space, a) for a in hs.elems]
    passed = all(verdicts.values())
    return build_report(
        ["power", args.which, args.file], verdicts,
        details={"points": elems},
        passed=passed, timer=timer,
    ), passed


def _box(members, c):
    out = 0
    for i, a in enumerate(members):
        if a & ~c == 0:
            out |= 1 << i
    return out


def cmd_reflect(args, timer):
    space = load_space(args.file)
    refl = reflect_omega(space)
    verdicts = {
        "reflection-omega-well-filtered": True,  # enforced at construction
        "unit-embedding": is_embedding(refl.eta),
        "homeomorphic-to-input": is_homeomorphic(space, refl.space.space),
    }
    pres = preservation_checks(space)
    verdicts.update({f"preserves:{k}": v for k, v in pres.items()})
    passed = all(verdicts.values())
    return build_report(
        ["reflect", args.file], verdicts,
        details={"points": [set_repr(space, a) for a in refl.space.elems]},
        passed=passed, timer=timer,
    ), passed


def cmd_sobrify(args, timer):
    space = load_space(args.file)
    refl = sobrify(space)
    verdicts = {
        "unit-embedding": is_embedding(refl.eta),
        "sober": sober_check(refl.space.space).verdict,
        "homeomorphic-to-input": is_homeomorphic(space, refl.space.space),
    }
    passed = all(verdicts.values())
    return build_report(
        ["sobrify", args.file], verdicts,
        details={"points": [set_repr(space, a) for a in refl.space.elems]},
        passed=passed, timer=timer,
    ), passed


def cmd_rudin(args, timer):
    space = load_space(args.file)
    family = tuple(
        _named_masks(space, part) for part in args.family.split(";") if part.strip()
    )
    closed = _named_masks(space, args.closed)
    problem = RudinProblem(space, family, closed)
    solution = rudin_search(problem)
    verdicts = {
        "has-irreducible-member": any(solution.irreducible_flags),
        "members-meet-family": all(
            all(m & k for k in family) for m in solution.minimal_members
        ),
        "members-inside-closed-set": all(
            m & ~closed == 0 for m in solution.minimal_members
        ),
    }
    passed = all(verdicts.values())
    return build_report(
        ["rudin", args.file], verdicts,
        details={
            "minimal": [set_repr(space, m) for m in solution.minimal_members],
            "irreducible": list(solution.irreducible_flags),
        },
        passed=passed, timer=timer,
    ), passed


def cmd_product(args, timer):
    factors = [load_space(f) for f in args.files]
    prod = product_space(factors)
    verdicts = {}
    details = {"points": prod.space.n, "opens": len(prod.space.opens)}
    if args.check:
        verdicts.update({f"lemma:{k}": v for k, v in product_checks(prod).items()})
        verdicts.update({f"rudin:{k}": v for k, v in product_rudin_checks(prod).items()})
        from .reflect import product_reflection_check

        verdicts.update(
            {f"reflection:{k}": v for k, v in product_reflection_check(factors).items()}
        )
    passed = all(verdicts.values()) if verdicts else True
    return build_report(
        ["product", *args.files], verdicts, details=details,
        passed=passed, timer=timer,
    ), passed


def cmd_catalog(args, timer):
    results = run_catalog_check(args.name, args.check)
    verdicts = {}
    details = {}
    certs = []
    passed = True
    for name, res in sorted(results.items()):
        verdicts[name] = res.verdict
        details[name] = {"status": res.status, **res.details}
        if res.certificate is not None:
            certs.append(res.certificate)
        passed = passed and res.passed
    return build_report(
        ["catalog", args.name, args.check], verdicts,
        certificates=certs, details=details, passed=passed, timer=timer,
    ), passed


def cmd_fuzz(args, timer):
    report = fuzz_run(args.n, args.cases, args.seed, args.workers)
    if args.csv:
        with open(args.csv, "w", encoding="utf-8") as fh:
            fh.write("\n".join(fuzz_csv_rows(report)) + "\n")
    passed = report["failed"] == 0
    details = {k: report[k] for k in
               ("n", "cases", "seed", "passed", "failed", "check-pass-counts",
                "failures")}
    verdicts = {"all-cases-pass": passed}
    return build_report(
        ["fuzz", f"--n={args.n}", f"--cases={args.cases}", f"--seed={args.seed}"],
        verdicts, details=details, passed=passed, timer=timer,
    ), passed


def cmd_verify(args, timer):
    doc = load_report(args.report)
    results = verify_report(doc)
    passed = all(results.values())
    return build_report(
        ["verify", args.report], results, passed=passed, timer=timer,
    ), passed


def cmd_export_dot(args, timer):
    space = load_space(args.file)
    dot = to_dot(space, title=args.file)
    with open(args.out, "w", encoding="utf-8") as fh:
        fh.write(dot)
    details = {"dot": args.out}
    if args.fig:
        render_figure(space, args.fig)
        details["figure"] = args.fig
    return build_report(
        ["export-dot", args.file], {"written": True}, details=details,
        passed=True, timer=timer,
    ), True


HANDLERS = {
    "classify": cmd_classify,
    "power": cmd_power,
    "reflect": cmd_reflect,
    "sobrify": cmd_sobrify,
    "rudin": cmd_rudin,
    "product": cmd_product,
    "catalog": cmd_catalog,
    "fuzz": cmd_fuzz,
    "verify": cmd_verify,
    "export-dot": cmd_export_dot,
}


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    timer = ReportTimer()
    try:
        report, passed = HANDLERS[args.cmd](args, timer)
    except (ParseError, WorkbenchError) as exc:
        sys.stderr.write(f"error: {exc}\n")
        return 2
    sys.stdout.write(emit(report))
    return 0 if passed else 1


if __name__ == "__main__":
    sys.exit(main())
