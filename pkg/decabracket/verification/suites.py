"""
Verification suites behind the ``verify`` command.

Each check is a module-level function returning a CheckOutcome. Checks are
registered per suite and run either inline or in a bounded process pool; the
report always lists them in registry order.
"""

from __future__ import annotations

import itertools
import logging
import random
import time
from concurrent.futures import ProcessPoolExecutor, as_completed
from typing import Callable, Dict, List, Optional, Tuple

from decabracket.brackets.fobracket import (
    IDENTITY,
    SLOT_PERMUTATIONS,
    SWAP_AB,
    bracket_entry,
    bracket_table,
    bracket_via_m4,
    contributing_permutations,
    entry_triples,
    monomial_table,
    monomial_tables,
    rho_identity_holds,
)
from decabracket.brackets.serialization import dump_tables_json, parse_tables_json
from decabracket.config import (
    CECH_SPOT_CHECK_BOUND,
    CECH_SWEEP_BOUND,
    CUBIC_DEGREE,
    PENCIL_SAMPLES,
    RANDOM_SEED,
    SECTION_DEGREE,
    SERRE_DEGREE,
)
from decabracket.homotopy.ainf import POSSIBLE_TREES, M4Ordering, eval_tree, m4_closed, ordered_arguments
from decabracket.homotopy.cech import (
    CechBasisElement,
    CechElement,
    CohomologyClass,
    basis_elements,
    differential,
    homotopy_q,
    include,
    multiply,
    project,
)
from decabracket.homotopy.trees import PLANTED_TREES
from decabracket.poisson.poissonlab import (
    ambient_jacobi_witness,
    bivector_of,
    compatible_on_P5,
    equivariance_holds,
    euler_trivector_solvable,
    is_poisson_on_P5,
    jacobiator,
    pencil_bivector,
    random_pencils,
    rank_of_family,
    skew_symmetry_holds,
    support_grading_holds,
    torus_weights,
)
from decabracket.polynomials.multidegree import MultiIndex, all_permutations, delta_set
from decabracket.polynomials.polynomial import parse_polynomial, x_ring
from decabracket.verification.report import (
    STATUS_FAIL,
    STATUS_FLAGGED,
    STATUS_INFO,
    STATUS_PASS,
    CheckOutcome,
    CheckResult,
    VerifyReport,
)

logger = logging.getLogger(__name__)

CheckFunction = Callable[[], CheckOutcome]


def _passed(cases: int, detail: Optional[str] = None) -> CheckOutcome:
    return CheckOutcome(STATUS_PASS, cases, detail=detail)


def _failed(cases: int, witness: str) -> CheckOutcome:
    return CheckOutcome(STATUS_FAIL, cases, witness=witness)


# --- Čech homotopy data ----------------------------------------------------


def homotopy_failure(x: CechElement) -> Optional[str]:
    """Name the first homotopy-data identity that fails on x, or None."""
    dx = differential(x)
    qx = homotopy_q(x)
    if not differential(dx).is_zero():
        return "d d != 0"
    if not homotopy_q(qx).is_zero():
        return "Q Q != 0"
    if not project(qx).is_zero():
        return "pi Q != 0"
    lhs = x - include(project(x), x.n)
    rhs = differential(qx) + homotopy_q(dx)
    # all four operators preserve the isotypic pieces A(e)
    for exponent in sorted({basis.exponent for basis in itertools.chain(lhs.terms, rhs.terms)}):
        if lhs.isotypic_part(exponent) != rhs.isotypic_part(exponent):
            return f"id - iota pi != dQ + Qd on the piece x^{exponent}"
    return None


def _cech_identities(n: int, bound: int) -> CheckOutcome:
    cases = 0
    for basis in basis_elements(n, bound):
        failure = homotopy_failure(CechElement.from_terms(n, [(basis, 1)]))
        cases += 1
        if failure:
            return _failed(cases, f"{failure} at {basis}")
    for entries in itertools.product(range(-bound, bound + 1), repeat=n + 1):
        exponent = MultiIndex(entries)
        if not (exponent.is_nonnegative() or exponent.is_negative()):
            continue
        h = CohomologyClass.monomial(exponent)
        cases += 1
        if not homotopy_q(include(h)).is_zero():
            return _failed(cases, f"Q iota != 0 at x^{exponent}")
        if project(include(h)) != h:
            return _failed(cases, f"pi iota != id at x^{exponent}")
    logger.info(f"[CECH] homotopy identities hold on P^{n} for {cases} cases")
    return _passed(cases, f"n={n}, max |e_i| <= {bound}")


def check_cech_identities() -> CheckOutcome:
    return _cech_identities(2, CECH_SWEEP_BOUND)


def check_cech_identities_p1() -> CheckOutcome:
    return _cech_identities(1, CECH_SPOT_CHECK_BOUND)


def check_cech_identities_p3() -> CheckOutcome:
    return _cech_identities(3, CECH_SPOT_CHECK_BOUND)


def product_failure(x: CechElement, y: CechElement, z: CechElement) -> Optional[str]:
    if multiply(multiply(x, y), z) != multiply(x, multiply(y, z)):
        return "associativity"
    sign = (-1) ** next(iter(x.degrees()))
    if differential(multiply(x, y)) != multiply(differential(x), y) + multiply(x, differential(y)).scale(sign):
        return "Leibniz rule"
    product = multiply(x, y)
    degree = next(iter(x.degrees())) + next(iter(y.degrees()))
    if product.degree_part(degree) != product:
        return "degree grading"
    twist = next(iter(x.terms)).twist + next(iter(y.terms)).twist
    if product.twist_part(twist) != product:
        return "twist grading"
    return None


def check_cech_products(samples: int = 2000) -> CheckOutcome:
    rng = random.Random(RANDOM_SEED)
    elements = basis_elements(2, 2)
    by_first: Dict[int, List[CechBasisElement]] = {}
    for basis in elements:
        by_first.setdefault(basis.indices[0], []).append(basis)

    def pick_after(previous: CechBasisElement) -> CechBasisElement:
        # half of the draws chain onto the previous factor so that products are nonzero
        if rng.random() < 0.5:
            return rng.choice(by_first[previous.indices[-1]])
        return rng.choice(elements)

    for case in range(1, samples + 1):
        first = rng.choice(elements)
        second = pick_after(first)
        third = pick_after(second)
        x, y, z = (CechElement.from_terms(2, [(b, 1)]) for b in (first, second, third))
        failure = product_failure(x, y, z)
        if failure:
            return _failed(case, f"{failure} fails for {first}, {second}, {third}")
    return _passed(samples, f"seed {RANDOM_SEED}")


# --- m4 -----------------------------------------------------------------------


def check_m4_oracle() -> CheckOutcome:
    """Tree sum equals the closed formulas over all four orderings; only the expected trees survive."""
    cases = 0
    for ordering in M4Ordering:
        for alpha, a, b, c in itertools.product(
            delta_set(SERRE_DEGREE), delta_set(SECTION_DEGREE), delta_set(SECTION_DEGREE), delta_set(CUBIC_DEGREE)
        ):
            cases += 1
            args = ordered_arguments(ordering, alpha, a, b, c)
            values = {tree.name: eval_tree(tree, args) for tree in PLANTED_TREES}
            survivors = {name for name, value in values.items() if not value.is_zero()}
            label = f"{ordering.value} alpha={alpha} a={a} b={b} c={c}"
            if not survivors <= POSSIBLE_TREES[ordering]:
                return _failed(cases, f"{label}: unexpected trees {sorted(survivors)}")
            total = CohomologyClass(2)
            for tree in PLANTED_TREES:
                total = total - values[tree.name].scale(tree.epsilon)
            closed = m4_closed(ordering, alpha, a, b, c)
            if total != closed:
                return _failed(cases, f"{label}: tree {total} != closed {closed}")
            if not total.is_zero() and set(total.terms) != {alpha + a + b + c}:
                return _failed(cases, f"{label}: output {total} is not a multiple of x^(alpha+a+b+c)")
        logger.info(f"[AINF] ordering {ordering.value} agrees")
    return _passed(cases)


# --- bracket tables -----------------------------------------------------------


def check_rho_identity() -> CheckOutcome:
    cases = 0
    for a, b, c, alpha, beta in itertools.product(
        delta_set(SECTION_DEGREE),
        delta_set(SECTION_DEGREE),
        delta_set(CUBIC_DEGREE),
        delta_set(SERRE_DEGREE),
        delta_set(SERRE_DEGREE),
    ):
        for sigma in SLOT_PERMUTATIONS:
            cases += 1
            if not rho_identity_holds(sigma, a, b, c, alpha, beta):
                return _failed(cases, f"sigma={sigma} a={a} b={b} c={c} alpha={alpha} beta={beta}")
    return _passed(cases)


def _oracle(engine: str) -> CheckOutcome:
    cases = 0
    for c, a, b in entry_triples():
        cases += 1
        expected = bracket_entry(c, a, b)
        actual = bracket_via_m4(c, a, b, engine=engine)
        if actual != expected:
            return _failed(cases, f"c={c} a={a} b={b}: m4 route gives {actual}, closed formula {expected}")
    logger.info(f"[TABLES] m4 oracle ({engine}) agrees on {cases} triples")
    return _passed(cases, f"engine={engine}")


def check_oracle_closed() -> CheckOutcome:
    return _oracle("closed")


def check_oracle_tree() -> CheckOutcome:
    return _oracle("tree")


def check_table_shape() -> CheckOutcome:
    """Skew-symmetry, support grading and integrality of every table."""
    cases = 0
    for table in monomial_tables():
        cases += 1
        if not skew_symmetry_holds(table):
            return _failed(cases, f"table {table.name} is not skew")
        if not support_grading_holds(table):
            return _failed(cases, f"table {table.name} violates the support grading: {sorted(map(str, torus_weights(table)))}")
        for pair, value in table.entries.items():
            if any(coeff.denominator != 1 for coeff in value.values()):
                return _failed(cases, f"table {table.name} has a non-integer coefficient at {pair}")
    return _passed(cases)


def check_permutation_pattern() -> CheckOutcome:
    """Which slot permutations contribute for c = (0,0,3), (1,2,0) and (1,1,1)."""
    pair = {IDENTITY, SWAP_AB}
    found_003 = contributing_permutations(MultiIndex.of(0, 0, 3))
    if not found_003 <= pair:
        return _failed(1, f"c=(0,0,3): permutations {sorted(found_003 - pair)} contribute")
    found_120 = contributing_permutations(MultiIndex.of(1, 2, 0))
    if found_120 & pair:
        return _failed(2, f"c=(1,2,0): permutations {sorted(found_120 & pair)} contribute")
    found_111 = contributing_permutations(MultiIndex.of(1, 1, 1))
    if found_111 != set(SLOT_PERMUTATIONS):
        return _failed(3, f"c=(1,1,1): only {sorted(found_111)} contribute")
    return _passed(3)


def check_linearity() -> CheckOutcome:
    fermat = bracket_table(parse_polynomial("x0^3 + x1^3 + x2^3", x_ring()))
    expected = monomial_table(MultiIndex.of(3, 0, 0)) + monomial_table(MultiIndex.of(0, 3, 0)) + monomial_table(MultiIndex.of(0, 0, 3))
    if fermat.entries != expected.entries:
        return _failed(1, "Fermat table differs from the sum of its monomial tables")
    if not bracket_table(x_ring().zero).is_zero():
        return _failed(2, "F = 0 gives a nonzero table")
    return _passed(2)


def check_json_roundtrip() -> CheckOutcome:
    tables = monomial_tables()
    text = dump_tables_json(tables)
    if dump_tables_json(tables) != text:
        return _failed(1, "JSON output is not deterministic")
    if parse_tables_json(text) != tables:
        return _failed(2, "parsed tables differ from the emitted ones")
    return _passed(2)


# --- Poisson properties on P^5 -------------------------------------------------


def _bivectors():
    return [bivector_of(table) for table in monomial_tables()]


def check_jacobi() -> CheckOutcome:
    for index, (table, P) in enumerate(zip(monomial_tables(), _bivectors()), start=1):
        verdict = is_poisson_on_P5(P)
        if not verdict:
            return _failed(index, f"table {table.name}: chart {verdict.chart}, component {verdict.component}: {verdict.value}")
    return _passed(10)


def check_compatibility() -> CheckOutcome:
    tables = monomial_tables()
    bivectors = _bivectors()
    cases = 0
    for first, second in itertools.combinations(range(len(bivectors)), 2):
        cases += 1
        verdict = compatible_on_P5(bivectors[first], bivectors[second])
        if not verdict:
            return _failed(
                cases,
                f"{tables[first].name} / {tables[second].name}: chart {verdict.chart}, component {verdict.component}: {verdict.value}",
            )
    return _passed(cases)


def check_pencils() -> CheckOutcome:
    bivectors = _bivectors()
    samples = random_pencils(random.Random(RANDOM_SEED), PENCIL_SAMPLES, len(bivectors))
    for case, sample in enumerate(samples, start=1):
        verdict = is_poisson_on_P5(pencil_bivector(bivectors, sample))
        if not verdict:
            return _failed(case, f"{sample.describe()}: chart {verdict.chart}, component {verdict.component}")
    return _passed(len(samples), f"seed {RANDOM_SEED}")


def check_rank() -> CheckOutcome:
    rank = rank_of_family(monomial_tables())
    if rank != 10:
        return _failed(1, f"rank is {rank}, expected 10")
    return _passed(1, "rank 10")


def check_equivariance() -> CheckOutcome:
    """sigma-transported table is projectively sgn(sigma) times the table of sigma.c, by both routes."""
    cases = 0
    for sigma in all_permutations(3):
        for c in delta_set(CUBIC_DEGREE):
            cases += 1
            solve_route, chart_route, _ = equivariance_holds(sigma, monomial_table(c), monomial_table(c.permuted(sigma)))
            if solve_route != chart_route:
                return _failed(cases, f"sigma={sigma} c={c}: linear solve says {solve_route}, charts say {chart_route}")
            if not solve_route:
                return _failed(cases, f"sigma={sigma} c={c}: not projectively equal to sgn(sigma) * table({c.permuted(sigma)})")
    return _passed(cases)


def check_ambient_equivariance() -> CheckOutcome:
    """Record whether the transport is exact on the 6-variable algebra (not a pass/fail criterion)."""
    cases = 0
    exact = 0
    for sigma in all_permutations(3):
        for c in delta_set(CUBIC_DEGREE):
            cases += 1
            _, _, same = equivariance_holds(sigma, monomial_table(c), monomial_table(c.permuted(sigma)))
            exact += int(same)
    return CheckOutcome(STATUS_INFO, cases, detail=f"exact ambient equality with the sign character in {exact} of {cases} cases")


def check_negative_control() -> CheckOutcome:
    """Some ambient Jacobiator must be nonzero although the induced bracket on P^5 is Poisson."""
    tables = monomial_tables()
    witness = ambient_jacobi_witness(_bivectors())
    if witness is None:
        return CheckOutcome(
            STATUS_FLAGGED,
            10 + 45,
            detail="every ambient Jacobiator vanishes, contradicting the expected failure on the polynomial algebra",
        )
    names = " + ".join(tables[index].name for index in witness.members)
    if not witness.chart_verdict:
        return _failed(len(witness.members), f"{names}: chart Jacobiator also nonzero ({witness.chart_verdict.value})")
    return _passed(len(witness.members), f"ambient witness {names} at {witness.component}: {witness.value}")


def check_euler_consistency() -> CheckOutcome:
    cases = 0
    nonzero = 0
    for table, P in zip(monomial_tables(), _bivectors()):
        cases += 1
        J = jacobiator(P)
        nonzero += int(not J.is_zero())
        if not euler_trivector_solvable(J):
            return _failed(cases, f"table {table.name}: ambient Jacobiator is not of the form E ^ W")
    return _passed(cases, f"{nonzero} nonzero ambient Jacobiators, all of the form E ^ W")


def check_torus_weights() -> CheckOutcome:
    for case, table in enumerate(monomial_tables(), start=1):
        expected = {table.label - MultiIndex.of(1, 1, 1)}
        if torus_weights(table) != expected:
            return _failed(case, f"table {table.name}: weights {sorted(map(str, torus_weights(table)))}")
    return _passed(10)


SUITES: Dict[str, List[Tuple[str, CheckFunction]]] = {
    "cech": [
        ("homotopy_identities", check_cech_identities),
        ("homotopy_identities_p1", check_cech_identities_p1),
        ("homotopy_identities_p3", check_cech_identities_p3),
        ("product_laws", check_cech_products),
    ],
    "ainf": [
        ("tree_vs_closed", check_m4_oracle),
    ],
    "tables": [
        ("rho_identity", check_rho_identity),
        ("oracle_closed", check_oracle_closed),
        ("oracle_tree", check_oracle_tree),
        ("skew_grading_integrality", check_table_shape),
        ("permutation_pattern", check_permutation_pattern),
        ("linearity", check_linearity),
        ("json_roundtrip", check_json_roundtrip),
    ],
    "poisson": [
        ("jacobi", check_jacobi),
        ("compatibility", check_compatibility),
        ("random_pencils", check_pencils),
        ("rank", check_rank),
        ("equivariance", check_equivariance),
        ("ambient_equivariance", check_ambient_equivariance),
        ("negative_control", check_negative_control),
        ("euler_consistency", check_euler_consistency),
        ("torus_weights", check_torus_weights),
    ],
}
SUITE_NAMES = ("all",) + tuple(SUITES)


def selected_checks(suite: str) -> List[Tuple[str, str]]:
    if suite not in SUITE_NAMES:
        raise ValueError(f"unknown suite {suite!r}; expected one of {SUITE_NAMES}")
    names = list(SUITES) if suite == "all" else [suite]
    return [(name, check) for name in names for check, _ in SUITES[name]]


def run_check(suite: str, name: str) -> CheckResult:
    """Run one registered check, turning an unexpected exception into a failure."""
    function = dict(SUITES[suite])[name]
    start = time.perf_counter()
    try:
        outcome = function()
    except Exception as e:
        logger.exception(f"[VERIFY] {suite}/{name} raised")
        outcome = _failed(0, f"{type(e).__name__}: {e}")
    elapsed = time.perf_counter() - start
    logger.info(f"[VERIFY] {suite}/{name}: {outcome.status} ({outcome.cases} cases, {elapsed:.2f}s)")
    return CheckResult(suite, name, outcome.status, outcome.cases, elapsed, outcome.witness, outcome.detail)


def run_suite(suite: str = "all", jobs: int = 1) -> VerifyReport:
    """
    Run the selected suite.

    Args:
        suite: 'all' or one of the suite names
        jobs: Maximum number of worker processes (1 runs inline)

    Returns:
        VerifyReport with results in registry order
    """
    if jobs < 1:
        raise ValueError(f"jobs must be at least 1, got {jobs}")
    plan = selected_checks(suite)
    start = time.perf_counter()
    if jobs == 1 or len(plan) == 1:
        results = [run_check(*item) for item in plan]
    else:
        finished: Dict[Tuple[str, str], CheckResult] = {}
        with ProcessPoolExecutor(max_workers=min(jobs, len(plan))) as pool:
            futures = {pool.submit(run_check, *item): item for item in plan}
            for future in as_completed(futures):
                finished[futures[future]] = future.result()
        results = [finished[item] for item in plan]
    return VerifyReport(suite=suite, jobs=jobs, results=results, total_time=time.perf_counter() - start)


__all__ = [
    "SUITES",
    "SUITE_NAMES",
    "homotopy_failure",
    "product_failure",
    "run_check",
    "run_suite",
    "selected_checks",
]
