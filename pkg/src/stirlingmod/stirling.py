"""Signless Stirling numbers of the first kind c(n,k).

Two independent routes live here: an exact big-integer triangle (the oracle,
bounded by STIRLING_ORACLE_MAX rows), and fast residues mod p^r from the
branch congruences driven by binomial coefficients, glued to a residue mod n
by the Chinese remainder theorem.
"""

from __future__ import annotations

import os
import threading
from dataclasses import dataclass
from enum import Enum

from .binomial import binom_mod_prime_power
from .modring import PrimePower, Residue, crt_combine, factorize, is_prime, vp

DEFAULT_ORACLE_MAX = 512
ORACLE_MAX_ENV = "STIRLING_ORACLE_MAX"

# Test-only hook: naming a branch tag here offsets that branch's value by +1,
# so verification suites can prove they would catch a wrong constant.
CORRUPT_BRANCH_ENV = "STIRLINGMOD_CORRUPT_BRANCH"


class Branch(Enum):
    """Which congruence case produced a residue."""

    ODD_ZERO = "OddZero"
    ODD_BINOMIAL = "OddBinomial"
    EVEN_R1 = "EvenR1"
    EVEN_R2_EVEN = "EvenR2Even"
    EVEN_R2_ODD = "EvenR2Odd"
    EVEN_BIG_ODD = "EvenBigOdd"
    EVEN_BIG_EVEN = "EvenBigEven"
    OUT_OF_RANGE = "OutOfRange"


@dataclass(frozen=True)
class StirlingResult:
    n: int
    k: int
    modulus: PrimePower
    value: Residue
    branch: Branch


class ExactStirlingTable:
    """Triangular table of exact c(i,j), grown row by row on demand.

    Recurrence: c(i,j) = c(i-1,j-1) + (i-1)*c(i-1,j), c(0,0) = 1.
    Row sums equal i! since the row generating polynomial at t=1 is i!.
    """

    def __init__(self, n_max: int):
        if n_max < 0:
            raise ValueError("n_max must be >= 0")
        self.n_max = n_max
        self._rows: list[list[int]] = [[1]]
        self._lock = threading.Lock()

    def row(self, n: int) -> list[int]:
        if n > self.n_max:
            raise ValueError(f"oracle bound exceeded: n={n} > {self.n_max}")
        if n >= len(self._rows):
            with self._lock:
                while len(self._rows) <= n:
                    prev = self._rows[-1]
                    i = len(self._rows)
                    row = [0] * (i + 1)
                    for j in range(1, i + 1):
                        row[j] = prev[j - 1] + (i - 1) * (prev[j] if j < i else 0)
                    self._rows.append(row)
        return self._rows[n]

    def value(self, n: int, k: int) -> int:
        if n == 0 and k == 0:
            return 1
        if k < 0 or k > n:
            return 0
        return self.row(n)[k]


def oracle_max() -> int:
    """Row bound for the exact table; override with STIRLING_ORACLE_MAX."""
    return int(os.environ.get(ORACLE_MAX_ENV, DEFAULT_ORACLE_MAX))


_table: ExactStirlingTable | None = None
_table_guard = threading.Lock()


def _shared_table() -> ExactStirlingTable:
    global _table
    bound = oracle_max()
    with _table_guard:
        if _table is None or _table.n_max < bound:
            existing = _table
            _table = ExactStirlingTable(bound)
            if existing is not None:
                _table._rows = existing._rows
    return _table


def stirling_exact(n: int, k: int) -> int:
    """Exact c(n,k) from the triangle; 0 outside 0 <= k <= n except c(0,0)=1.

    >>> stirling_exact(8, 3)
    13132
    """
    if n < 0:
        raise ValueError("n must be >= 0")
    if n > oracle_max():
        raise ValueError(f"oracle bound exceeded: n={n} > {oracle_max()}")
    return _shared_table().value(n, k)


def _signed(l: int, x: int, N: int) -> int:
    """(-1)^l * x reduced into [0, N)."""
    x %= N
    return (N - x) % N if l % 2 else x


def _corrupt_offset(branch: Branch) -> int:
    return 1 if os.environ.get(CORRUPT_BRANCH_ENV, "") == branch.value else 0


def stirling_mod_pr(n: int, k: int, p: int) -> StirlingResult:
    """c(n,k) mod p^r with r = v_p(n), via the branch congruences.

    Requires p | n. Binomials are taken with the out-of-range-zero
    convention, which also covers k = 0 and k = n.
    """
    if n <= 0:
        raise ValueError("n must be positive")
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")
    r = vp(n, p)
    if r == 0:
        raise ValueError(f"p must divide n: {p} does not divide {n}")
    pp = PrimePower(p, r)
    N = pp.modulus

    if k < 0 or k > n:
        return StirlingResult(n, k, pp, Residue(0, N), Branch.OUT_OF_RANGE)

    d = n - k
    if p != 2:
        if d % (p - 1):
            branch, value = Branch.ODD_ZERO, 0
        else:
            l = d // (p - 1)
            branch = Branch.ODD_BINOMIAL
            value = _signed(l, int(binom_mod_prime_power(n // p, l, pp)), N)
    elif r == 1:
        branch = Branch.EVEN_R1
        value = int(binom_mod_prime_power(n // 2, d, pp))
    else:
        l, odd = divmod(d, 2)
        c_l = int(binom_mod_prime_power(n // 4, l, pp))
        if r == 2:
            if odd:
                branch = Branch.EVEN_R2_ODD
                value = _signed(l, c_l * (n // 2), N)
            else:
                branch = Branch.EVEN_R2_EVEN
                value = _signed(l, c_l, N)
        else:
            if odd:
                branch = Branch.EVEN_BIG_ODD
                value = _signed(l, c_l * (n // 2), N)
            else:
                branch = Branch.EVEN_BIG_EVEN
                c_prev = int(binom_mod_prime_power(n // 4, l - 1, pp))
                value = _signed(l, c_l - (n // 2) * c_prev, N)

    value = (value + _corrupt_offset(branch)) % N
    return StirlingResult(n, k, pp, Residue(value, N), branch)


def stirling_mod_n(n: int, k: int) -> Residue:
    """c(n,k) mod n, assembled by CRT from every prime power in n.

    Works for any n >= 2 without the exact table, since each prime p | n is
    covered by its branch congruence at r = v_p(n).
    """
    if n < 2:
        raise ValueError("n must be >= 2")
    parts = [stirling_mod_pr(n, k, p).value for p in sorted(factorize(n))]
    return crt_combine(parts)


class ValuationKind(Enum):
    AT_LEAST_R = "AtLeastR"
    EXACT = "Exact"


@dataclass(frozen=True)
class StirlingValuation:
    kind: ValuationKind
    value: int


def stirling_valuation(pp: PrimePower, k: int) -> StirlingValuation:
    """v_p(c(p^r, k)) for 1 <= k <= p^r, in closed form.

    Odd p: off the (p-1)-ladder the valuation is at least r. On it, with
    l = (p^r - k)/(p-1), the residue mod p^r is (-1)^l C(p^(r-1), l), so for
    1 <= l <= p^(r-1) the valuation is exactly r - 1 - v_p(l); for
    l > p^(r-1) the binomial vanishes and only v >= r can be asserted (the
    exact value is not pinned by the congruence). l = 0 means k = p^r, c = 1.

    p = 2 needs r >= 3 (no closed form is asserted for r <= 2; use the exact
    table there). With 2^r - k = 2l+1 the valuation is at least r except at
    l = 0 and l = 2^(r-2), where it is exactly r-1. With 2^r - k = 2l the
    residue is +/-[C(2^(r-2), l) - 2^(r-1) C(2^(r-2), l-1)], giving exactly
    r - 2 - v_2(l) for 1 <= l <= 2^(r-2), exactly r - 1 at l = 2^(r-2) + 1
    (only the second term survives), and at least r beyond that.
    """
    p, r = pp.p, pp.r
    q = pp.modulus
    if k < 1 or k > q:
        raise ValueError(f"out of range: k={k} not in 1..{q}")
    if p == 2 and r < 3:
        raise ValueError("p=2 requires r >= 3; use the exact table for small r")
    d = q - k
    if p != 2:
        if d % (p - 1):
            return StirlingValuation(ValuationKind.AT_LEAST_R, r)
        l = d // (p - 1)
        if l == 0:
            return StirlingValuation(ValuationKind.EXACT, 0)
        if l > p ** (r - 1):
            return StirlingValuation(ValuationKind.AT_LEAST_R, r)
        return StirlingValuation(ValuationKind.EXACT, r - 1 - vp(l, p))
    if d == 0:
        return StirlingValuation(ValuationKind.EXACT, 0)
    l, odd = divmod(d, 2)
    quarter = 2 ** (r - 2)
    if odd:
        if l == 0 or l == quarter:
            return StirlingValuation(ValuationKind.EXACT, r - 1)
        return StirlingValuation(ValuationKind.AT_LEAST_R, r)
    if l <= quarter:
        return StirlingValuation(ValuationKind.EXACT, r - 2 - vp(l, 2))
    if l == quarter + 1:
        return StirlingValuation(ValuationKind.EXACT, r - 1)
    return StirlingValuation(ValuationKind.AT_LEAST_R, r)
