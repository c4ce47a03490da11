"""Dense polynomial arithmetic over Z/NZ and the rising products P_n(t).

P_n(t) = prod_{k=0}^{n-1} (1 + k t); its coefficient of t^k is the signless
first-kind Stirling number c(n, n-k). The verify_* operations re-derive each
congruence identity from both of its sides independently.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache, reduce
from operator import add
from typing import Iterable, Sequence

from .binomial import binom_mod_prime_power
from .modring import PrimePower, factorize, vp

# Factor lists shorter than this are multiplied sequentially; longer ones go
# through a balanced product tree (constant-factor tuning, not correctness).
TREE_THRESHOLD = 32


def _mul_coeffs(a: Sequence[int], b: Sequence[int], N: int) -> tuple[int, ...]:
    """Schoolbook product of coefficient vectors, reduced mod N."""
    if not a or not b:
        return ()
    if len(a) < len(b):
        a, b = b, a
    out = [0] * (len(a) + len(b) - 1)
    la = len(a)
    for i, x in enumerate(b):
        if x:
            out[i : i + la] = map(add, out[i : i + la], (x * y for y in a))
    return tuple(c % N for c in out)


class DensePoly:
    """Polynomial over Z/NZ, coefficients ascending by degree.

    Canonical form: every coefficient in [0, N), trailing zeros trimmed, the
    zero polynomial being the empty vector. Instances are immutable.
    """

    __slots__ = ("modulus", "coeffs")

    def __init__(self, modulus: int, coeffs: Iterable[int] = ()):
        if not isinstance(modulus, int) or modulus < 2:
            raise ValueError("modulus must be an integer >= 2")
        reduced = [c % modulus for c in coeffs]
        while reduced and reduced[-1] == 0:
            reduced.pop()
        object.__setattr__(self, "modulus", modulus)
        object.__setattr__(self, "coeffs", tuple(reduced))

    def __setattr__(self, name, val):
        raise AttributeError("DensePoly is immutable")

    @classmethod
    def one(cls, modulus: int) -> "DensePoly":
        return cls(modulus, (1,))

    @classmethod
    def zero(cls, modulus: int) -> "DensePoly":
        return cls(modulus)

    @property
    def degree(self) -> int:
        """Degree of the canonical form; -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    def coeff(self, k: int) -> int:
        return self.coeffs[k] if 0 <= k < len(self.coeffs) else 0

    def is_one(self) -> bool:
        return self.coeffs == (1,)

    def _check(self, other: "DensePoly") -> None:
        if self.modulus != other.modulus:
            raise ValueError("modulus mismatch")

    def __add__(self, other: "DensePoly") -> "DensePoly":
        self._check(other)
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return DensePoly(self.modulus, out)

    def __sub__(self, other: "DensePoly") -> "DensePoly":
        self._check(other)
        out = list(self.coeffs) + [0] * max(0, len(other.coeffs) - len(self.coeffs))
        for i, c in enumerate(other.coeffs):
            out[i] -= c
        return DensePoly(self.modulus, out)

    def __mul__(self, other: "DensePoly") -> "DensePoly":
        self._check(other)
        return DensePoly(self.modulus, _mul_coeffs(self.coeffs, other.coeffs, self.modulus))

    def __pow__(self, e: int) -> "DensePoly":
        if e < 0:
            raise ValueError("negative power")
        acc = DensePoly.one(self.modulus)
        base = self
        while e:
            if e & 1:
                acc = acc * base
            base = base * base if e > 1 else base
            e >>= 1
        return acc

    def __call__(self, x: int) -> int:
        acc = 0
        for c in reversed(self.coeffs):
            acc = (acc * x + c) % self.modulus
        return acc

    def scale_t(self, c: int) -> "DensePoly":
        """Substitute t -> c*t: coefficient k is scaled by c^k."""
        out = []
        power = 1
        for coeff in self.coeffs:
            out.append(coeff * power)
            power = power * c % self.modulus
        return DensePoly(self.modulus, out)

    def negate_t(self) -> "DensePoly":
        """Substitute t -> -t."""
        return self.scale_t(self.modulus - 1)

    def truncated(self, max_degree: int) -> "DensePoly":
        return DensePoly(self.modulus, self.coeffs[: max_degree + 1])

    def __eq__(self, other):
        if isinstance(other, DensePoly):
            return self.modulus == other.modulus and self.coeffs == other.coeffs
        return NotImplemented

    def __hash__(self):
        return hash((self.modulus, self.coeffs))

    def __repr__(self):
        return f"DensePoly({self.modulus}, {list(self.coeffs)})"

    def __str__(self):
        return self.render()

    def render(self) -> str:
        """Human form "c0 + c1*t + c2*t^2 + ...", zero terms omitted."""
        terms = []
        for k, c in enumerate(self.coeffs):
            if c == 0:
                continue
            if k == 0:
                terms.append(str(c))
            elif k == 1:
                terms.append("t" if c == 1 else f"{c}*t")
            else:
                terms.append(f"t^{k}" if c == 1 else f"{c}*t^{k}")
        return " + ".join(terms) if terms else "0"


def poly_mul(a: DensePoly, b: DensePoly) -> DensePoly:
    """Product of two polynomials over the same modulus."""
    return a * b


def poly_prod(factors: Sequence[DensePoly], modulus: int) -> DensePoly:
    """Product of many factors; balanced tree above TREE_THRESHOLD."""
    for f in factors:
        if f.modulus != modulus:
            raise ValueError("modulus mismatch")
    if not factors:
        return DensePoly.one(modulus)
    return _prod_range(factors, 0, len(factors))


def _prod_range(factors: Sequence[DensePoly], lo: int, hi: int) -> DensePoly:
    if hi - lo < TREE_THRESHOLD:
        return reduce(poly_mul, factors[lo:hi])
    mid = (lo + hi) // 2
    return _prod_range(factors, lo, mid) * _prod_range(factors, mid, hi)


@lru_cache(maxsize=256)
def _pochhammer_cached(n: int, modulus: int) -> DensePoly:
    factors = [DensePoly(modulus, (1, k)) for k in range(n)]
    return poly_prod(factors, modulus)


def pochhammer_poly(n: int, modulus: int) -> DensePoly:
    """P_n(t) = prod_{k=0}^{n-1} (1 + k t) mod N, built by product tree.

    P_1 is the unit polynomial (the k=0 factor is 1). The mod-N degree can
    drop below n-1 when leading coefficients vanish.

    >>> pochhammer_poly(2, 4).coeffs
    (1, 1)
    """
    if n < 1:
        raise ValueError("n must be >= 1")
    return _pochhammer_cached(n, modulus)


def closed_form_odd(pp: PrimePower, m: int = 1) -> DensePoly:
    """(1 - t^(p-1))^(p^(r-1) * m) mod p^r for odd p and gcd(m, p) = 1.

    Expanded term by term through binomials mod p^r, so no polynomial powers
    are formed.
    """
    p, r = pp.p, pp.r
    if p == 2:
        raise ValueError("requires odd prime")
    if m < 1 or m % p == 0:
        raise ValueError("m must be positive and coprime to p")
    N = pp.modulus
    exponent = p ** (r - 1) * m
    coeffs = [0] * ((p - 1) * exponent + 1)
    for l in range(exponent + 1):
        c = int(binom_mod_prime_power(exponent, l, pp))
        coeffs[(p - 1) * l] = (N - c) % N if l % 2 else c
    return DensePoly(N, coeffs)


def closed_form_even(n: int) -> DensePoly:
    """The even closed form of P_n mod 2^r, r = v_2(n), by r branch.

    r = 1: (1 + t)^(n/2) mod 2;
    r = 2: (1 + (n/2) t) (1 - t^2)^(n/4) mod 4;
    r >= 3: (1 - t^2)^(n/4) (1 + (n/2) t (t + 1)) mod 2^r.
    """
    if n < 2 or n % 2:
        raise ValueError("n must be even")
    r = vp(n, 2)
    pp = PrimePower(2, r)
    N = pp.modulus
    if r == 1:
        half = n // 2
        coeffs = [int(binom_mod_prime_power(half, j, pp)) for j in range(half + 1)]
        return DensePoly(N, coeffs)
    quarter = n // 4
    base = [0] * (2 * quarter + 1)
    for l in range(quarter + 1):
        c = int(binom_mod_prime_power(quarter, l, pp))
        base[2 * l] = (N - c) % N if l % 2 else c
    alternating = DensePoly(N, base)
    half = n // 2
    if r == 2:
        return DensePoly(N, (1, half)) * alternating
    return alternating * DensePoly(N, (1, half, half))


def closed_form_even_additive(r: int) -> DensePoly:
    """(1-t^2)^(2^(r-2)) + 2^(r-1) (t + t^2 + t^(2^(r-1)+1) + t^(2^(r-1)+2)),
    mod 2^r, valid for r >= 3."""
    if r < 3:
        raise ValueError("r must be >= 3")
    pp = PrimePower(2, r)
    N = pp.modulus
    quarter = 2 ** (r - 2)
    coeffs = [0] * (2 * quarter + 3)
    for l in range(quarter + 1):
        c = int(binom_mod_prime_power(quarter, l, pp))
        coeffs[2 * l] = (N - c) % N if l % 2 else c
    half = 2 ** (r - 1)
    for e in (1, 2, half + 1, half + 2):
        coeffs[e] = (coeffs[e] + half) % N
    return DensePoly(N, coeffs)


@dataclass(frozen=True)
class PrimeCongruence:
    p: int
    r: int
    ok: bool
    # (degree, product coefficient, closed-form coefficient) of the first
    # difference, when any
    first_diff: tuple[int, int, int] | None


@dataclass(frozen=True)
class CongruenceReport:
    n: int
    checks: tuple[PrimeCongruence, ...]

    @property
    def ok(self) -> bool:
        return all(c.ok for c in self.checks)


def verify_congruence(n: int) -> CongruenceReport:
    """Compare P_n mod p^r against the closed form, for every prime p | n."""
    if n < 2:
        raise ValueError("n must be >= 2")
    checks = []
    for p, r in sorted(factorize(n).items()):
        N = p**r
        lhs = pochhammer_poly(n, N)
        if p == 2:
            rhs = closed_form_even(n)
        else:
            rhs = closed_form_odd(PrimePower(p, r), n // N)
        first_diff = None
        if lhs != rhs:
            for k in range(max(len(lhs.coeffs), len(rhs.coeffs))):
                if lhs.coeff(k) != rhs.coeff(k):
                    first_diff = (k, lhs.coeff(k), rhs.coeff(k))
                    break
        checks.append(PrimeCongruence(p, r, lhs == rhs, first_diff))
    return CongruenceReport(n, tuple(checks))


def verify_pt_lemma(pp: PrimePower) -> bool:
    """True iff P_{p^r}(p t) reduces to the constant 1 mod p^(r+1), p odd."""
    if pp.p == 2:
        raise ValueError("requires odd prime")
    bigger = pp.p ** (pp.r + 1)
    poly = pochhammer_poly(pp.modulus, bigger)
    return poly.scale_t(pp.p).is_one()


def verify_shift_identity(r: int) -> bool:
    """True iff P_{2^r}(t) = P_{2^(r-1)}(t) P_{2^(r-1)}(-t) (1 - 2^(r-1) t)
    mod 2^r (the half-shift of the defining product)."""
    if r < 2:
        raise ValueError("r must be >= 2")
    N = 2**r
    half = 2 ** (r - 1)
    lhs = pochhammer_poly(N, N)
    p_half = pochhammer_poly(half, N)
    rhs = p_half * p_half.negate_t() * DensePoly(N, (1, N - half))
    return lhs == rhs


def verify_weak_even_lemma(r: int) -> bool:
    """True iff P_{2^r}(t) = (1 - t^2)^(2^(r-2)) mod 2^(r-1)."""
    if r < 2:
        raise ValueError("r must be >= 2")
    pp = PrimePower(2, r - 1)
    N = pp.modulus
    quarter = 2 ** (r - 2)
    coeffs = [0] * (2 * quarter + 1)
    for l in range(quarter + 1):
        c = int(binom_mod_prime_power(quarter, l, pp))
        coeffs[2 * l] = (N - c) % N if l % 2 else c
    return pochhammer_poly(2**r, N) == DensePoly(N, coeffs)


def verify_q_homogenization(pp: PrimePower) -> bool:
    """Valuation form of "the two-variable product collapses mod p^(r+1)".

    The coefficient of X^(p^r - j) in prod_{i<p^r}(X + i p Y) is
    c(p^r, p^r - j) p^j Y^j, so the claim is v_p(c(p^r, p^r - j)) + j >= r+1
    for every 1 <= j <= p^r (the j = p^r coefficient is 0 and passes
    vacuously). Checked against the exact table.
    """
    from .stirling import stirling_exact

    if pp.p == 2:
        raise ValueError("requires odd prime")
    q = pp.modulus
    for j in range(1, q + 1):
        c = stirling_exact(q, q - j)
        if c == 0:
            continue
        if vp(c, pp.p) + j < pp.r + 1:
            return False
    return True
