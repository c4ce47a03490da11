"""Named verification suites: every congruence identity checked from two
independent sides, packaged as pass/fail cases for the CLI.

Each suite builder returns the list of cases for a size bound; run_suite
executes them (optionally across threads) and assembles a report whose case
order is fixed by case id, independent of the execution order.
"""

from __future__ import annotations

import random
import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from typing import Callable

from .binomial import binom_mod_prime_power
from .chern import chern_regular, chern_valuation_regular, verify_chern_vanishing
from .modring import (
    PrimePower,
    Residue,
    check_cyclotomic_vanishing,
    check_poly_root_factorization,
    check_root_factorization,
    element_of_order_p_minus_1,
    factorize,
    is_prime,
    mult_order,
    vp,
)
from .polyring import (
    DensePoly,
    closed_form_even,
    closed_form_even_additive,
    closed_form_odd,
    pochhammer_poly,
    verify_pt_lemma,
    verify_q_homogenization,
    verify_shift_identity,
    verify_weak_even_lemma,
)
from .stirling import (
    ValuationKind,
    oracle_max,
    stirling_exact,
    stirling_mod_pr,
    stirling_valuation,
)

RANDOM_PAIR_SEED = 0x5D1A
RANDOM_PAIR_COUNT = 10_000

# (p, r) family used by the odd-prime lemma suites.
ODD_PRIME_POWER_SET = (
    (3, 1), (3, 2), (3, 3), (3, 4),
    (5, 1), (5, 2), (5, 3),
    (7, 1), (7, 2),
    (11, 1),
    (13, 1),
)


@dataclass(frozen=True)
class Case:
    case_id: str
    statement: str
    run: Callable[[], tuple[bool, str]]


@dataclass(frozen=True)
class CaseResult:
    suite: str
    case_id: str
    statement: str
    passed: bool
    detail: str = ""


@dataclass
class VerificationReport:
    suite: str
    cases: list[CaseResult] = field(default_factory=list)
    duration: float = 0.0

    @property
    def passed(self) -> int:
        return sum(1 for c in self.cases if c.passed)

    @property
    def failed(self) -> int:
        return sum(1 for c in self.cases if not c.passed)

    @property
    def all_passed(self) -> bool:
        return self.failed == 0


def _odd_set(max_n: int | None):
    if max_n is None:
        return list(ODD_PRIME_POWER_SET)
    return [(p, r) for p, r in ODD_PRIME_POWER_SET if p**r <= max_n]


def _suite_thm11(max_n: int | None) -> list[Case]:
    limit = 120 if max_n is None else max_n
    if limit > oracle_max():
        raise ValueError(f"max n {limit} exceeds the oracle bound {oracle_max()}")
    statement = "branch congruences for c(n,k) mod p^(v_p(n)) agree with the exact triangle"
    cases = []
    for n in range(2, limit + 1):
        for p in sorted(factorize(n)):

            def run(n=n, p=p):
                N = p ** vp(n, p)
                for k in range(0, n + 1):
                    res = stirling_mod_pr(n, k, p)
                    want = stirling_exact(n, k) % N
                    if int(res.value) != want:
                        return False, (
                            f"k={k}: formula gives {int(res.value)} "
                            f"[{res.branch.value}], exact is {want} (mod {N})"
                        )
                return True, f"k=0..{n} match (mod {N})"

            cases.append(Case(f"thm1.1/n={n:04d}/p={p:03d}", statement, run))
    return cases


def _valuation_case(p: int, r: int) -> tuple[bool, str]:
    q = p**r
    for k in range(1, q + 1):
        got = stirling_valuation(PrimePower(p, r), k)
        exact = stirling_exact(q, k)
        actual = vp(exact, p)
        if got.kind is ValuationKind.EXACT:
            if actual != got.value:
                return False, f"k={k}: claimed v={got.value}, exact v={actual}"
        else:
            if actual < got.value:
                return False, f"k={k}: claimed v>={got.value}, exact v={actual}"
    return True, f"k=1..{q} valuations confirmed"


def _suite_cor12(max_n: int | None) -> list[Case]:
    limit = 512 if max_n is None else max_n
    limit = min(limit, oracle_max())
    statement = "v_p(c(p^r,k)) = r-1-v_p(l) on the (p-1)-ladder, >= r off it (p odd)"
    cases = []
    for p in (3, 5, 7, 11, 13):
        r = 1
        while p**r <= limit:
            cases.append(
                Case(f"cor1.2/p={p:03d}/r={r}", statement,
                     lambda p=p, r=r: _valuation_case(p, r))
            )
            r += 1
    return cases


def _suite_cor13(max_n: int | None) -> list[Case]:
    limit = 512 if max_n is None else max_n
    limit = min(limit, oracle_max())
    statement = "v_2(c(2^r,k)): r-2-v_2(l) for even gaps; r-1 at l=0 and l=2^(r-2), else >= r"
    cases = []
    r = 3
    while 2**r <= limit:
        cases.append(
            Case(f"cor1.3/r={r:02d}", statement, lambda r=r: _valuation_case(2, r))
        )
        r += 1
    return cases


def _suite_thm21(max_n: int | None) -> list[Case]:
    limit = 343 if max_n is None else max_n
    statement = "P_{p^r}(t) = (1 - t^(p-1))^(p^(r-1)) mod p^r (p odd)"
    cases = []
    for p in (3, 5, 7, 11, 13):
        r = 1
        while p**r <= limit:

            def run(p=p, r=r):
                q = p**r
                lhs = pochhammer_poly(q, q)
                rhs = closed_form_odd(PrimePower(p, r))
                if lhs == rhs:
                    return True, f"all {len(lhs.coeffs)} coefficients agree (mod {q})"
                return False, "product and closed form differ"

            cases.append(Case(f"thm2.1/p={p:03d}/r={r}", statement, run))
            r += 1
    return cases


def _suite_thm23(max_n: int | None) -> list[Case]:
    limit = 1024 if max_n is None else max_n
    statement = "P_{2^r}(t) matches the even closed forms mod 2^r"
    cases = []

    def run_r1():
        ok = pochhammer_poly(2, 2) == closed_form_even(2) == DensePoly(2, (1, 1))
        return ok, "P_2 = 1 + t"

    def run_r2():
        explicit = DensePoly(4, (1, 2)) * DensePoly(4, (1, 0, 3))
        ok = pochhammer_poly(4, 4) == closed_form_even(4) == explicit
        return ok, "P_4 = (1 + 2t)(1 - t^2) mod 4"

    cases.append(Case("thm2.3/r=01", statement, run_r1))
    if limit >= 4:
        cases.append(Case("thm2.3/r=02", statement, run_r2))
    r = 3
    while 2**r <= limit:

        def run(r=r):
            q = 2**r
            product = pochhammer_poly(q, q)
            additive = closed_form_even_additive(r)
            multiplicative = closed_form_even(q)
            if product != additive:
                return False, "additive form differs from the product"
            if product != multiplicative:
                return False, "multiplicative form differs from the product"
            return True, f"both closed forms match the product (mod {q})"

        cases.append(Case(f"thm2.3/r={r:02d}", statement, run))
        r += 1
    return cases


def _suite_lemma31(max_n: int | None) -> list[Case]:
    statement = "P_{p^r}(p t) = 1 mod p^(r+1) (p odd)"
    return [
        Case(f"lemma3.1/p={p:03d}/r={r}", statement,
             lambda p=p, r=r: (verify_pt_lemma(PrimePower(p, r)),
                               f"P_{p**r}(p t) collapses to 1 (mod {p**(r+1)})"))
        for p, r in _odd_set(max_n)
    ]


def _root_factorization_case(p: int, r: int) -> tuple[bool, str]:
    pp = PrimePower(p, r)
    N = pp.modulus
    omega = element_of_order_p_minus_1(pp)
    if not check_poly_root_factorization(omega, pp):
        return False, "polynomial factorization fails for some unit k"
    if N <= 81:
        pairs = ((a, b) for a in range(N) for b in range(N))
        scope = f"all {N * N} pairs"
    else:
        rng = random.Random(RANDOM_PAIR_SEED + N)
        pairs = ((rng.randrange(N), rng.randrange(N)) for _ in range(RANDOM_PAIR_COUNT))
        scope = f"{RANDOM_PAIR_COUNT} random pairs"
    for a, b in pairs:
        out = check_root_factorization(Residue(a, N), Residue(b, N), omega, p - 1)
        if not out.holds:
            return False, f"fails at a={a}, b={b}: lhs={int(out.lhs)} rhs={int(out.rhs)}"
    return True, f"omega={int(omega)}: scalar identity over {scope}; polynomial identity over all units"


def _suite_lemma32(max_n: int | None) -> list[Case]:
    statement = ("a^(p-1) - b^(p-1) = prod_i (a - omega^i b) in Z/p^r "
                 "(scalars and polynomials), omega of order p-1")
    return [
        Case(f"lemma3.2/p={p:03d}/r={r}", statement,
             lambda p=p, r=r: _root_factorization_case(p, r))
        for p, r in _odd_set(max_n)
    ]


def _suite_remark33(max_n: int | None) -> list[Case]:
    statement = "the root-product identity is not universal: it fails in Z/12Z"

    def run():
        omega = Residue(7, 12)
        out = check_root_factorization(Residue(-1, 12), Residue(7, 12), omega, 2)
        ok = (not out.holds) and int(out.lhs) == 0 and int(out.rhs) == 4
        return ok, f"Z/12: lhs={int(out.lhs)} rhs={int(out.rhs)} identity fails as expected"

    return [Case("remark3.3/Z12", statement, run)]


def _suite_cor44(max_n: int | None) -> list[Case]:
    statement = "Phi_(p-1)(omega) = 0 in Z/p^r for omega of order p-1"

    def run(p, r):
        pp = PrimePower(p, r)
        omega = element_of_order_p_minus_1(pp)
        order = mult_order(omega)
        if order != p - 1:
            return False, f"omega={int(omega)} has order {order}, wanted {p - 1}"
        if not check_cyclotomic_vanishing(omega, p - 1):
            return False, f"Phi_{p - 1}({int(omega)}) != 0 (mod {pp.modulus})"
        return True, f"omega={int(omega)}: order {p - 1} and Phi_{p - 1}(omega) = 0"

    return [
        Case(f"cor4.4/p={p:03d}/r={r}", statement, lambda p=p, r=r: run(p, r))
        for p, r in _odd_set(max_n)
    ]


def _even_lemma_cases(max_n: int | None, suite: str, statement: str, check) -> list[Case]:
    limit = 1024 if max_n is None else max_n
    cases = []
    r = 2
    while 2**r <= limit:
        cases.append(
            Case(f"{suite}/r={r:02d}", statement,
                 lambda r=r: (check(r), f"identity holds at r={r}"))
        )
        r += 1
    return cases


def _suite_lemma51(max_n: int | None) -> list[Case]:
    return _even_lemma_cases(
        max_n, "lemma5.1",
        "P_{2^r}(t) = (1 - t^2)^(2^(r-2)) mod 2^(r-1)",
        verify_weak_even_lemma,
    )


def _suite_lemma52(max_n: int | None) -> list[Case]:
    return _even_lemma_cases(
        max_n, "lemma5.2",
        "P_{2^r}(t) = P_{2^(r-1)}(t) P_{2^(r-1)}(-t) (1 - 2^(r-1) t) mod 2^r",
        verify_shift_identity,
    )


def _suite_qhomog(max_n: int | None) -> list[Case]:
    statement = "v_p(c(p^r, p^r - j)) + j >= r + 1 for 1 <= j <= p^r (p odd)"
    pairs = [(p, r) for p, r in _odd_set(max_n) if p <= 7]
    return [
        Case(f"q-homog/p={p:03d}/r={r}", statement,
             lambda p=p, r=r: (verify_q_homogenization(PrimePower(p, r)),
                               f"j=1..{p**r} all pass"))
        for p, r in pairs
    ]


def _suite_thm14(max_n: int | None) -> list[Case]:
    vanish_set = [q for q in (3, 9, 27, 5, 25, 7, 49) if max_n is None or q <= max_n]
    valuation_limit = min(343 if max_n is None else max_n, oracle_max())
    cases = []
    vanish_statement = ("regular classes of C_{p^r} vanish exactly off the (p-1)-ladder; "
                        "non-free orbits vanish entirely (p odd)")
    for q in sorted(vanish_set):
        fac = factorize(q)
        (p, r), = fac.items()

        def run(p=p, r=r):
            report = verify_chern_vanishing(PrimePower(p, r))
            if not report.passed:
                bad = [d for d, ok in report.orbit_results if not ok]
                return False, f"regular_ok={report.regular_ok} ({report.regular_detail}); bad orbits {bad}"
            return True, report.regular_detail + "; all non-free orbits trivial"

        cases.append(Case(f"thm1.4/vanishing/q={q:05d}", vanish_statement, run))

    val_statement = "regular class exponents e = r-1-v_p(l) match exact valuations"
    for q in range(3, valuation_limit + 1, 2):
        fac = factorize(q)
        if len(fac) != 1:
            continue
        (p, r), = fac.items()

        def run_val(p=p, r=r, q=q):
            pp = PrimePower(p, r)
            for k in range(1, q + 1):
                cv = chern_valuation_regular(pp, k)
                exact = stirling_exact(q, q - k)
                if cv.zero:
                    if exact % q != 0:
                        return False, f"k={k}: claimed zero but exact residue is {exact % q}"
                elif vp(exact, p) != cv.valuation:
                    return False, f"k={k}: claimed e={cv.valuation}, exact e={vp(exact, p)}"
            return True, f"k=1..{q} exponents confirmed"

        cases.append(Case(f"thm1.4/valuation/q={q:05d}", val_statement, run_val))
    return cases


SUITES: dict[str, Callable[[int | None], list[Case]]] = {
    "thm1.1": _suite_thm11,
    "cor1.2": _suite_cor12,
    "cor1.3": _suite_cor13,
    "thm2.1": _suite_thm21,
    "thm2.3": _suite_thm23,
    "lemma3.1": _suite_lemma31,
    "lemma3.2": _suite_lemma32,
    "remark3.3": _suite_remark33,
    "cor4.4": _suite_cor44,
    "lemma5.1": _suite_lemma51,
    "lemma5.2": _suite_lemma52,
    "q-homog": _suite_qhomog,
    "thm1.4": _suite_thm14,
}

SUITE_ORDER = tuple(SUITES)


def run_suite(name: str, max_n: int | None = None, jobs: int = 1) -> VerificationReport:
    """Execute one named suite and return its report, cases sorted by id."""
    if name not in SUITES:
        raise KeyError(name)
    cases = SUITES[name](max_n)
    start = time.perf_counter()
    if jobs > 1 and len(cases) > 1:
        with ThreadPoolExecutor(max_workers=jobs) as pool:
            outcomes = list(pool.map(lambda c: c.run(), cases))
    else:
        outcomes = [c.run() for c in cases]
    results = [
        CaseResult(name, c.case_id, c.statement, ok, detail)
        for c, (ok, detail) in zip(cases, outcomes)
    ]
    results.sort(key=lambda cr: cr.case_id)
    return VerificationReport(name, results, time.perf_counter() - start)


def run_all(max_n: int | None = None, jobs: int = 1) -> list[VerificationReport]:
    """Run every suite in canonical order."""
    return [run_suite(name, max_n, jobs) for name in SUITE_ORDER]
