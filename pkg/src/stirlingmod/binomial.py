"""Binomial coefficients modulo prime powers, with p-adic valuation tracking.

C(m,k) mod p^r is evaluated without ever forming C(m,k): the running product
keeps a unit mod p^r and a separate power-of-p exponent, which Kummer's
carry-count theorem guarantees ends up nonnegative.
"""

from __future__ import annotations

from dataclasses import dataclass

from .modring import PrimePower, Residue, crt_combine, factorize, is_prime


@dataclass(frozen=True)
class BinomValuation:
    """v_p(C(m,k)) together with the inputs that produced it."""

    m: int
    k: int
    p: int
    valuation: int

    @classmethod
    def compute(cls, m: int, k: int, p: int) -> "BinomValuation":
        return cls(m, k, p, kummer_valuation(m, k, p))


def kummer_valuation(m: int, k: int, p: int) -> int:
    """v_p(C(m,k)) as the number of carries when adding k and m-k in base p.

    Never forms C(m,k) itself.

    >>> kummer_valuation(9, 3, 3)
    1
    """
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")
    if k < 0 or k > m:
        raise ValueError(f"out of range: k={k} not in 0..{m}")
    a, b = k, m - k
    carry = 0
    carries = 0
    while a or b or carry:
        s = a % p + b % p + carry
        carry = 1 if s >= p else 0
        carries += carry
        a //= p
        b //= p
    return carries


def binom_mod_prime_power(m: int, k: int, pp: PrimePower) -> Residue:
    """C(m,k) mod p^r, with C(m,k) = 0 outside 0 <= k <= m.

    Walks the product C(m,k) = prod_{i=1}^{k} (m-k+i)/i, stripping the p-part
    of every factor into a signed exponent and folding the unit parts into a
    residue mod p^r (denominator units are invertible once their p-part is
    gone). The net exponent is nonnegative by Kummer's theorem.
    """
    N = pp.modulus
    if k < 0 or k > m:
        return Residue(0, N)
    p, r = pp.p, pp.r
    unit = 1
    exponent = 0
    for i in range(1, k + 1):
        num = m - k + i
        while num % p == 0:
            num //= p
            exponent += 1
        den = i
        while den % p == 0:
            den //= p
            exponent -= 1
        unit = unit * num % N
        if den != 1:
            unit = unit * pow(den, -1, N) % N
    assert exponent >= 0, "net p-exponent of a binomial cannot be negative"
    if exponent >= r:
        return Residue(0, N)
    return Residue(unit * p**exponent, N)


def binom_mod(m: int, k: int, n: int) -> Residue:
    """C(m,k) mod n via CRT over the prime-power factorization of n."""
    if n < 2:
        raise ValueError("modulus must be >= 2")
    parts = [
        binom_mod_prime_power(m, k, PrimePower(p, r))
        for p, r in sorted(factorize(n).items())
    ]
    return crt_combine(parts)
