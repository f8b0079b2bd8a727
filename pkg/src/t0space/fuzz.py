"""Seeded fuzzing: random spaces run through the finite-scale invariant
battery. Case seeds derive from the run seed and case index, so sharding
across workers cannot change the report."""

import random
from multiprocessing import Pool

from .bitsets import canonical
from .classify import (
    is_omega_well_filtered,
    is_well_filtered,
    omega_d_equivalences,
)
from .core import (
    FiniteSpace,
    irreducible_sets,
    point_closures,
    sober_check,
)
from .generators import random_space
from .maps import is_homeomorphic
from .reflect import reflect_omega, sobrify
from .rudin import d_c_omega, rd_omega, wd_omega


def run_invariant_battery(space: FiniteSpace) -> dict[str, bool]:
    """The finite-scale invariants: sobriety, the collapsed family chain,
    the six-way omega-d agreement, well-filtered agreement, and both
    reflections being homeomorphic to the space."""
    checks = {}
    checks["sober"] = sober_check(space).verdict
    sc = canonical(point_closures(space))
    dc = d_c_omega(space).members
    rd = rd_omega(space).members
    wd = wd_omega(space).members
    irr = irreducible_sets(space).members
    checks["family-chain-collapses"] = sc == dc == rd == wd == irr
    checks["omega-d-six-conditions"] = omega_d_equivalences(space)
    checks["wf-agrees-omega-wf"] = is_well_filtered(space) == is_omega_well_filtered(
        space
    )
    checks["reflection-homeomorphic"] = is_homeomorphic(
        space, reflect_omega(space).space.space
    )
    checks["sobrification-homeomorphic"] = is_homeomorphic(
        space, sobrify(space).space.space
    )
    return checks


def case_seed(seed: int, index: int) -> str:
    return f"{seed}:{index}"


def run_case(args) -> dict:
    seed, n, index = args
    rng = random.Random(case_seed(seed, index))
    space = random_space(rng, n)
    checks = run_invariant_battery(space)
    return {
        "case": index,
        "points": space.n,
        "opens": len(space.opens),
        "checks": checks,
        "pass": all(checks.values()),
    }


def fuzz_run(n: int, cases: int, seed: int, workers: int = 1) -> dict:
    """Aggregated fuzz report; case order in the report is by index, so the
    outcome is independent of scheduling."""
    args = [(seed, n, i) for i in range(cases)]
    if workers > 1:
        with Pool(workers) as pool:
            results = pool.map(run_case, args)
    else:
        results = [run_case(a) for a in args]
    results.sort(key=lambda r: r["case"])
    failures = [r for r in results if not r["pass"]]
    check_names = sorted(results[0]["checks"]) if results else []
    summary = {
        name: sum(1 for r in results if r["checks"][name]) for name in check_names
    }
    return {
        "n": n,
        "cases": cases,
        "seed": seed,
        "passed": len(results) - len(failures),
        "failed": len(failures),
        "check-pass-counts": summary,
        "failures": [r["case"] for r in failures],
        "results": results,
    }


def fuzz_csv_rows(report: dict) -> list[str]:
    """Per-case verdict table as comma-delimited rows (header first)."""
    names = sorted(report["results"][0]["checks"]) if report["results"] else []
    rows = [",".join(["case", "points", "opens", *names, "pass"])]
    for r in report["results"]:
        cells = [str(r["case"]), str(r["points"]), str(r["opens"])]
        cells += ["1" if r["checks"][k] else "0" for k in names]
        cells.append("1" if r["pass"] else "0")
        rows.append(",".join(cells))
    return rows
