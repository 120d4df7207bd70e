"""Named verification suites aggregating the package's exact checks.

Each suite returns CheckResult rows; a row is the outcome of one exact
check (no tolerances anywhere).  The CLI `verify` command renders these
and exits nonzero if any row failed.
"""

from __future__ import annotations

from dataclasses import dataclass

from .action import CoverParams, build_action, parameter_sweep
from .atlas import (
    Hyperplane,
    core,
    enumerate_hyperplanes,
    enumerate_subgroups_brute,
    galois_closure,
    gaussian_count,
    parse_generator_words,
    read_fixture,
)
from .calculus import decomposition_report, genus_quotient_by_core
from .errors import GonalError
from .groupring import (
    build_group,
    composite_scalar,
    frobenius_check,
    verify_cross_terms,
    verify_scalar_identity,
)

SUITES = ("groupring", "counts", "identities", "fixtures", "all")


@dataclass
class CheckResult:
    name: str
    passed: bool
    detail: str = ""


def _checked(name: str, fn) -> CheckResult:
    try:
        detail = fn()
        return CheckResult(name, True, detail or "")
    except (GonalError, AssertionError) as exc:
        return CheckResult(name, False, str(exc))


def suite_counts(max_n: int = 6) -> list[CheckResult]:
    """Gaussian binomials against brute-force subspace enumeration."""
    results = []
    for q in (2, 3):
        for n in range(1, max_n + 1):

            def run(q=q, n=n):
                for k in range(n + 1):
                    subs = enumerate_subgroups_brute(n, k, q)
                    expected = gaussian_count(n, k, q)
                    assert len(subs) == expected, (
                        f"brute force found {len(subs)} {k}-dim subspaces "
                        f"of F_{q}^{n}, formula says {expected}"
                    )
                    assert len(set(subs)) == len(subs)
                return f"all k checked against {sum(gaussian_count(n, k, q) for k in range(n + 1))} subspaces"

            results.append(_checked(f"counts-q{q}-n{n}", run))
    return results


def suite_identities() -> list[CheckResult]:
    """Dimension identities across the whole parameter sweep."""
    sweep = parameter_sweep()

    def run_all():
        for params in sweep:
            decomposition_report(params)
        return f"{len(sweep)} parameter triples"

    results = [_checked("identities-sweep", run_all)]

    def run_example():
        rep = decomposition_report(CoverParams(5, 2, 3))
        assert (rep.t, rep.prym_dim, rep.g_t) == (3, 1, 3), (
            f"expected (t, prym, g_T) = (3, 1, 3), got {(rep.t, rep.prym_dim, rep.g_t)}"
        )
        return "t=3, prym_dim=1, g_T=3"

    results.append(_checked("identities-worked-example-p5-q2", run_example))
    return results


def suite_groupring(cap: int = 512) -> list[CheckResult]:
    """Frobenius structure and the q^(n-1) operator identity, exhaustively."""
    results = []
    for p, q, r in [(5, 2, 3), (3, 2, 4)]:
        params = CoverParams(p, q, r)
        tag = f"{p}-{q}-{r}"
        try:
            group = build_group(params, cap=cap)
        except GonalError as exc:
            results.append(CheckResult(f"groupring-{tag}-build", False, str(exc)))
            continue
        results.append(CheckResult(f"groupring-{tag}-build", True, f"order {group.order}"))
        results.append(
            _checked(
                f"groupring-{tag}-frobenius",
                lambda g=group: f"{frobenius_check(g).kernel_orbit_count} kernel orbits",
            )
        )

        def run_scalar(params=params, group=group):
            scalars = {
                verify_scalar_identity(group, h) for h in enumerate_hyperplanes(params)
            }
            expected = q ** (params.n - 1)
            assert scalars == {expected}, f"scalars {scalars} != {{{expected}}}"
            return f"scalar {expected} on all {params.m} hyperplanes"

        results.append(_checked(f"groupring-{tag}-scalar", run_scalar))

        def run_cross(params=params, group=group):
            for h in enumerate_hyperplanes(params):
                verify_cross_terms(group, h)
            return f"all twisted terms vanish on {params.m} hyperplanes"

        results.append(_checked(f"groupring-{tag}-cross-terms", run_cross))
        results.append(
            CheckResult(
                f"groupring-{tag}-composite-scalar",
                True,
                f"derived: composed diagram is multiplication by {composite_scalar(params)}",
            )
        )
    return results


FIXTURE_EXPECTATIONS = {
    # name -> (core dim, Galois group, genus of the quotient by the core)
    "L1": (0, "Z_3^12 ⋊ Z_13", 2657206),
    "L2": (3, "Z_3^9 ⋊ Z_13", 98416),
    "L3": (6, "Z_3^6 ⋊ Z_13", 3646),
    "L4": (9, "Z_3^3 ⋊ Z_13", 136),
}


def suite_fixtures() -> list[CheckResult]:
    """The bundled (13, 3, 3) sample subgroups reproduce their known data."""
    params = CoverParams(13, 3, 3)
    action = build_action(params)
    results = []
    for name, (core_dim, group_desc, genus) in FIXTURE_EXPECTATIONS.items():

        def run(name=name, core_dim=core_dim, group_desc=group_desc, genus=genus):
            sub = parse_generator_words(read_fixture(name + ".gens"), params)
            assert sub.dim == params.n - 1, f"{name} is not a hyperplane"
            h = Hyperplane.from_subspace(sub)
            report = galois_closure(h, params, action)
            assert report.core_dim == core_dim, (
                f"{name}: core dim {report.core_dim}, expected {core_dim}"
            )
            assert report.group == group_desc, f"{name}: group {report.group}"
            got_genus = genus_quotient_by_core(params, report.core_dim)
            assert got_genus == genus, f"{name}: quotient genus {got_genus}"
            return f"core 3^{core_dim}, {group_desc}, quotient genus {genus}"

        results.append(_checked(f"fixture-{name}", run))

    def run_cores(params=params, action=action):
        for lname, kname in [("L2", "K2"), ("L3", "K3"), ("L4", "K4")]:
            sub = parse_generator_words(read_fixture(lname + ".gens"), params)
            h = Hyperplane.from_subspace(sub)
            expected = parse_generator_words(read_fixture(kname + ".gens"), params)
            assert core(h, action) == expected, f"{kname} does not span the core of {lname}"
        return "published core generators span the computed cores"

    results.append(_checked("fixture-core-generators", run_cores))
    return results


def run_suite(suite: str, cap: int | None = None) -> list[CheckResult]:
    if suite not in SUITES:
        raise ValueError(f"unknown suite {suite!r}; choose from {', '.join(SUITES)}")
    results = []
    if suite in ("counts", "all"):
        results += suite_counts()
    if suite in ("identities", "all"):
        results += suite_identities()
    if suite in ("groupring", "all"):
        results += suite_groupring(cap=cap or 512)
    if suite in ("fixtures", "all"):
        results += suite_fixtures()
    return results
