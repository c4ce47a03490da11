"""Arithmetic in Z/NZ: canonical residues, prime powers, multiplicative orders,
cyclotomic polynomials, and root-product factorization checks.

Everything here is immutable after construction and free of global state, so
values can be shared freely across threads.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from math import gcd, isqrt
from typing import Sequence


def is_prime(p: int) -> bool:
    """Deterministic trial division up to sqrt(p)."""
    if p < 2:
        return False
    if p < 4:
        return True
    if p % 2 == 0:
        return False
    d = 3
    while d * d <= p:
        if p % d == 0:
            return False
        d += 2
    return True


def vp(n: int, p: int) -> int:
    """p-adic valuation: the largest e with p^e dividing n.

    >>> vp(12, 2)
    2
    >>> vp(7, 5)
    0
    """
    if n == 0:
        raise ValueError("valuation of zero undefined")
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")
    n = abs(n)
    e = 0
    while n % p == 0:
        n //= p
        e += 1
    return e


def factorize(n: int) -> dict[int, int]:
    """Prime factorization {p: exponent} by trial division (desk scale)."""
    if n < 1:
        raise ValueError("factorize expects a positive integer")
    out: dict[int, int] = {}
    for p in (2, 3):
        while n % p == 0:
            out[p] = out.get(p, 0) + 1
            n //= p
    d = 5
    while d * d <= n:
        for p in (d, d + 2):
            while n % p == 0:
                out[p] = out.get(p, 0) + 1
                n //= p
        d += 6
    if n > 1:
        out[n] = out.get(n, 0) + 1
    return out


def euler_phi(n: int) -> int:
    phi = 1
    for p, e in factorize(n).items():
        phi *= (p - 1) * p ** (e - 1)
    return phi


def divisors(n: int) -> list[int]:
    """All positive divisors of n, ascending."""
    divs = [1]
    for p, e in factorize(n).items():
        divs = [d * p**i for d in divs for i in range(e + 1)]
    return sorted(divs)


class Residue:
    """Canonical representative of an integer class in Z/NZ.

    Arithmetic requires equal moduli; plain ints are coerced. Values are
    always reduced into [0, N).
    """

    __slots__ = ("value", "modulus")

    def __init__(self, value: int, modulus: int):
        if not isinstance(modulus, int) or modulus < 2:
            raise ValueError("modulus must be an integer >= 2")
        object.__setattr__(self, "modulus", modulus)
        object.__setattr__(self, "value", value % modulus)

    def __setattr__(self, name, val):  # immutable after construction
        raise AttributeError("Residue is immutable")

    def _coerce(self, other) -> "Residue":
        if isinstance(other, Residue):
            if other.modulus != self.modulus:
                raise ValueError("modulus mismatch")
            return other
        if isinstance(other, int):
            return Residue(other, self.modulus)
        return NotImplemented

    def __add__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return Residue(self.value + o.value, self.modulus)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return Residue(self.value - o.value, self.modulus)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return Residue(o.value - self.value, self.modulus)

    def __mul__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return Residue(self.value * o.value, self.modulus)

    __rmul__ = __mul__

    def __neg__(self):
        return Residue(-self.value, self.modulus)

    def __pow__(self, exponent: int):
        if exponent < 0:
            return self.inverse() ** (-exponent)
        return Residue(pow(self.value, exponent, self.modulus), self.modulus)

    def inverse(self) -> "Residue":
        if gcd(self.value, self.modulus) != 1:
            raise ValueError(f"not invertible: {self.value} mod {self.modulus}")
        return Residue(pow(self.value, -1, self.modulus), self.modulus)

    def is_unit(self) -> bool:
        return gcd(self.value, self.modulus) == 1

    def __eq__(self, other):
        if isinstance(other, Residue):
            return self.value == other.value and self.modulus == other.modulus
        if isinstance(other, int):
            return self.value == other % self.modulus
        return NotImplemented

    def __hash__(self):
        return hash((self.value, self.modulus))

    def __int__(self) -> int:
        return self.value

    def __repr__(self):
        return f"Residue({self.value}, {self.modulus})"

    def __str__(self):
        return f"{self.value} (mod {self.modulus})"


@dataclass(frozen=True)
class PrimePower:
    """A modulus of the shape p^r with p prime and r >= 1."""

    p: int
    r: int

    def __post_init__(self):
        if not is_prime(self.p):
            raise ValueError(f"{self.p} is not prime")
        if self.r < 1:
            raise ValueError("exponent must be >= 1")

    @property
    def modulus(self) -> int:
        return self.p**self.r

    def residue(self, value: int) -> Residue:
        return Residue(value, self.modulus)

    def __str__(self):
        return f"{self.p}^{self.r}"


def mult_order(x: Residue) -> int:
    """Smallest d >= 1 with x^d = 1 in Z/NZ.

    The order divides phi(N), so only divisors of phi(N) are tried.
    """
    if not x.is_unit():
        raise ValueError(f"not invertible: {x.value} mod {x.modulus}")
    for d in divisors(euler_phi(x.modulus)):
        if pow(x.value, d, x.modulus) == 1:
            return d
    raise AssertionError("unreachable: order must divide phi(N)")


def smallest_primitive_root(p: int) -> int:
    """Smallest g >= 2 of order p-1 mod p (p an odd prime).

    g qualifies iff g^((p-1)/q) != 1 mod p for every prime q dividing p-1.
    """
    if p == 3:
        return 2
    checks = [(p - 1) // q for q in factorize(p - 1)]
    g = 2
    while True:
        if all(pow(g, e, p) != 1 for e in checks):
            return g
        g += 1


def element_of_order_p_minus_1(pp: PrimePower) -> Residue:
    """A unit of order exactly p-1 in Z/p^rZ, deterministically chosen.

    Takes the smallest primitive root g mod p and returns g^(p^(r-1)) mod p^r,
    which kills the p-part of g's order while keeping the (p-1)-part.
    """
    if pp.p == 2:
        raise ValueError("requires odd prime")
    g = smallest_primitive_root(pp.p)
    return Residue(pow(g, pp.p ** (pp.r - 1), pp.modulus), pp.modulus)


def _intpoly_trim(coeffs: list[int]) -> list[int]:
    while coeffs and coeffs[-1] == 0:
        coeffs.pop()
    return coeffs


def _intpoly_mul(a: Sequence[int], b: Sequence[int]) -> list[int]:
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return out


def _intpoly_divexact(num: Sequence[int], den: Sequence[int]) -> list[int]:
    """Exact division of integer polynomials; den must be monic."""
    num = list(num)
    dn = len(den) - 1
    assert den[-1] == 1, "divisor must be monic"
    quot = [0] * (len(num) - dn)
    for i in range(len(quot) - 1, -1, -1):
        c = num[i + dn]
        quot[i] = c
        if c:
            for j, y in enumerate(den):
                num[i + j] -= c * y
    assert not any(num), "division was not exact"
    return quot


@lru_cache(maxsize=None)
def _cyclotomic_cached(n: int) -> tuple[int, ...]:
    if n == 1:
        return (-1, 1)
    xn_minus_1 = [-1] + [0] * (n - 1) + [1]
    den = [1]
    for d in divisors(n)[:-1]:
        den = _intpoly_mul(den, _cyclotomic_cached(d))
    return tuple(_intpoly_divexact(xn_minus_1, den))


def cyclotomic(n: int) -> list[int]:
    """Coefficients of the n-th cyclotomic polynomial, ascending degree.

    Computed by exact division of X^n - 1 by the product of the lower
    cyclotomics; monic, degree phi(n).

    >>> cyclotomic(4)
    [1, 0, 1]
    """
    if n < 1:
        raise ValueError("n must be >= 1")
    return list(_cyclotomic_cached(n))


def check_cyclotomic_vanishing(omega: Residue, n: int) -> bool:
    """True iff the n-th cyclotomic polynomial vanishes at omega in Z/NZ."""
    acc = 0
    for c in reversed(cyclotomic(n)):
        acc = (acc * omega.value + c) % omega.modulus
    return acc == 0


@dataclass(frozen=True)
class RootFactorization:
    """Outcome of comparing a^n - b^n with prod_i (a - omega^i b)."""

    holds: bool
    lhs: Residue
    rhs: Residue


def check_root_factorization(a: Residue, b: Residue, omega: Residue, n: int) -> RootFactorization:
    """Compare a^n - b^n against the product over the powers of omega.

    The identity holds over Z/p^rZ when omega has order p-1 and n = p-1, but
    fails in general rings (e.g. Z/12Z), so both sides are returned.
    """
    if not (a.modulus == b.modulus == omega.modulus):
        raise ValueError("modulus mismatch")
    if mult_order(omega) != n:
        raise ValueError(f"omega has wrong order: expected {n}, got {mult_order(omega)}")
    lhs = a**n - b**n
    rhs = Residue(1, a.modulus)
    for i in range(n):
        rhs = rhs * (a - omega**i * b)
    return RootFactorization(lhs == rhs, lhs, rhs)


def check_poly_root_factorization(omega: Residue, pp: PrimePower) -> bool:
    """Polynomial form of the root factorization over Z/p^rZ[t].

    Checks 1 - k^(p-1) t^(p-1) = prod_{i=0}^{p-2} (1 - omega^i k t) for every
    unit k mod p^r.
    """
    from .polyring import DensePoly, poly_prod  # avoid import cycle

    N = pp.modulus
    if omega.modulus != N:
        raise ValueError("modulus mismatch")
    if mult_order(omega) != pp.p - 1:
        raise ValueError(f"omega has wrong order: expected {pp.p - 1}")
    p = pp.p
    omega_powers = [pow(omega.value, i, N) for i in range(p - 1)]
    for k in range(1, N):
        if k % p == 0:
            continue
        factors = [DensePoly(N, [1, -(w * k)]) for w in omega_powers]
        product = poly_prod(factors, N)
        target = DensePoly(N, [1] + [0] * (p - 2) + [-pow(k, p - 1, N)])
        if product != target:
            return False
    return True


def crt_pair(a: Residue, b: Residue) -> Residue:
    """Combine residues with coprime moduli into one mod the product."""
    g, s, _ = _xgcd(a.modulus, b.modulus)
    if g != 1:
        raise ValueError("moduli are not coprime")
    m = a.modulus * b.modulus
    # x = a + (b - a) * inv(Ma mod Mb) * Ma
    diff = (b.value - a.value) % b.modulus
    return Residue(a.value + diff * s % b.modulus * a.modulus, m)


def crt_combine(parts: Sequence[Residue]) -> Residue:
    """Iterative pairwise CRT over residues with pairwise coprime moduli."""
    if not parts:
        raise ValueError("nothing to combine")
    acc = parts[0]
    for part in parts[1:]:
        acc = crt_pair(acc, part)
    return acc


def _xgcd(a: int, b: int) -> tuple[int, int, int]:
    """(g, s, t) with g = gcd(a, b) = s*a + t*b."""
    prevx, x = 1, 0
    prevy, y = 0, 1
    while b:
        q, r = divmod(a, b)
        x, prevx = prevx - q * x, x
        y, prevy = prevy - q * y, y
        a, b = b, r
    return a, prevx, prevy
