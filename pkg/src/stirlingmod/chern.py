"""Chern classes of permutation representations of cyclic groups.

For a cyclic group of order n the even cohomology is Z[t]/(n t) with t the
first Chern class of the defining character, so a total Chern class is just a
coefficient vector over Z/nZ. The regular representation's classes are the
rows c(n, n-k) mod n; an orbit with stabilizer of order d contributes
P_{n/d}(d t), and disjoint unions multiply (Whitney).

The exponent reported by chern_valuation_regular follows the odd-prime
valuation rule e = r - 1 - v_p(l); the competing r - 2 - v_2(l) shape belongs
to the p = 2 case and is contradicted by the exact table (see the acceptance
suite, which checks e against exact valuations for p^r <= 343).
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import reduce

from .modring import PrimePower, divisors, vp
from .polyring import DensePoly, pochhammer_poly, poly_mul
from .stirling import stirling_mod_n


@dataclass(frozen=True)
class CyclicGroup:
    """Cyclic group of order n."""

    n: int

    def __post_init__(self):
        if self.n < 1:
            raise ValueError("group order must be >= 1")


class PermutationGSet:
    """A finite set with cyclic-group action, as a multiset of orbits.

    Each orbit is recorded by its stabilizer order d (cyclic groups have one
    subgroup per divisor); the orbit has n/d points.
    """

    __slots__ = ("group", "orbits")

    def __init__(self, group: CyclicGroup, orbits):
        orbits = tuple(sorted(orbits))
        for d in orbits:
            if d < 1 or group.n % d:
                raise ValueError(f"stabilizer order {d} does not divide {group.n}")
        object.__setattr__(self, "group", group)
        object.__setattr__(self, "orbits", orbits)

    def __setattr__(self, name, val):
        raise AttributeError("PermutationGSet is immutable")

    @property
    def dimension(self) -> int:
        """Total number of points = dimension of the linearization."""
        return sum(self.group.n // d for d in self.orbits)

    def __repr__(self):
        return f"PermutationGSet(C_{self.group.n}, orbits={list(self.orbits)})"


class ChernVector:
    """Total Chern class of a representation of C_n.

    coefficients[k] is a_k with c_k = a_k t^k; the vector always has length
    dimension+1 (zero-padded), a_0 = 1, and entries for k >= 1 are reduced
    mod n.
    """

    __slots__ = ("group", "coefficients")

    def __init__(self, group: CyclicGroup, coefficients):
        coefficients = tuple(coefficients)
        if not coefficients or coefficients[0] != 1:
            raise ValueError("total class must start with a_0 = 1")
        reduced = (1,) + tuple(c % group.n for c in coefficients[1:])
        object.__setattr__(self, "group", group)
        object.__setattr__(self, "coefficients", reduced)

    def __setattr__(self, name, val):
        raise AttributeError("ChernVector is immutable")

    @property
    def dimension(self) -> int:
        return len(self.coefficients) - 1

    def nonzero_classes(self) -> list[tuple[int, int]]:
        """(k, a_k) for every nonvanishing class with k >= 1."""
        return [(k, a) for k, a in enumerate(self.coefficients) if k >= 1 and a]

    def is_trivial(self) -> bool:
        """True when every class above degree zero vanishes."""
        return not self.nonzero_classes()

    def render_lines(self) -> list[str]:
        """Lines "c_k = a_k t^k", zero classes omitted; c_0 always present."""
        lines = ["c_0 = 1"]
        for k, a in self.nonzero_classes():
            t_part = "t" if k == 1 else f"t^{k}"
            lines.append(f"c_{k} = {t_part}" if a == 1 else f"c_{k} = {a} {t_part}")
        return lines

    def __eq__(self, other):
        if isinstance(other, ChernVector):
            return self.group == other.group and self.coefficients == other.coefficients
        return NotImplemented

    def __hash__(self):
        return hash((self.group, self.coefficients))

    def __repr__(self):
        return f"ChernVector(C_{self.group.n}, {list(self.coefficients)})"


def chern_regular(n: int) -> ChernVector:
    """Total class of the regular representation: a_k = c(n, n-k) mod n.

    Residues come from the congruence fast path (CRT over the primes of n),
    which also works beyond the exact-table bound.
    """
    group = CyclicGroup(n)
    if n == 1:
        return ChernVector(group, (1, 0))
    coeffs = [1] + [int(stirling_mod_n(n, n - k)) for k in range(1, n + 1)]
    return ChernVector(group, coeffs)


def chern_orbit(n: int, d: int) -> ChernVector:
    """Total class of the orbit with stabilizer order d: P_{n/d}(d t) mod n.

    Built directly as a polynomial mod n (valid for composite n); a_k is
    c(n/d, n/d - k) d^k mod n. d = 1 recovers the regular representation.
    """
    group = CyclicGroup(n)
    if d < 1 or n % d:
        raise ValueError(f"{d} does not divide {n}")
    points = n // d
    if n == 1:
        return ChernVector(group, (1, 0))
    poly = pochhammer_poly(points, n).scale_t(d)
    return ChernVector(group, [poly.coeff(k) if k else 1 for k in range(points + 1)])


def chern_permutation(gset: PermutationGSet) -> ChernVector:
    """Whitney product over the orbits, truncated at the total dimension."""
    n = gset.group.n
    dim = gset.dimension
    if n == 1:
        return ChernVector(gset.group, (1,) + (0,) * dim)
    factors = [
        DensePoly(n, chern_orbit(n, d).coefficients) for d in gset.orbits
    ]
    if factors:
        total = reduce(poly_mul, factors).truncated(dim)
    else:
        total = DensePoly.one(n)
    return ChernVector(gset.group, [total.coeff(k) if k else 1 for k in range(dim + 1)])


@dataclass(frozen=True)
class ChernVanishingReport:
    """Vanishing pattern check for C_{p^r}, p odd."""

    prime_power: PrimePower
    regular_ok: bool
    regular_detail: str
    orbit_results: tuple[tuple[int, bool], ...]

    @property
    def passed(self) -> bool:
        return self.regular_ok and all(ok for _, ok in self.orbit_results)


def verify_chern_vanishing(pp: PrimePower) -> ChernVanishingReport:
    """Check both vanishing clauses for C_{p^r}, p odd.

    (a) regular representation: a_k != 0 exactly when (p-1) | k, 1 <= k <= p^r;
    (b) every orbit with stabilizer order d > 1 has all classes above degree
        zero equal to zero.
    """
    if pp.p == 2:
        raise ValueError("requires odd prime")
    n = pp.modulus
    top = (pp.p - 1) * pp.p ** (pp.r - 1)  # degree of the total class mod n
    reg = chern_regular(n)
    regular_ok = True
    detail = f"k=1..{n}: nonzero exactly at multiples of {pp.p - 1} up to {top}"
    for k in range(1, n + 1):
        expected_nonzero = k % (pp.p - 1) == 0 and k <= top
        if (reg.coefficients[k] != 0) != expected_nonzero:
            regular_ok = False
            detail = f"pattern breaks at k={k}: a_k={reg.coefficients[k]}"
            break
    orbit_results = []
    for d in divisors(n):
        if d == 1:
            continue
        orbit_results.append((d, chern_orbit(n, d).is_trivial()))
    return ChernVanishingReport(pp, regular_ok, detail, tuple(orbit_results))


@dataclass(frozen=True)
class ChernClassValuation:
    """Whether c_k of the regular representation of C_{p^r} vanishes, and if
    not, the exponent e with c_k = p^e * unit * t^k."""

    zero: bool
    valuation: int | None


def chern_valuation_regular(pp: PrimePower, k: int) -> ChernClassValuation:
    """Closed-form valuation of c_k for the regular representation of C_{p^r}.

    c_k vanishes iff (p-1) does not divide k or k exceeds the degree
    (p-1) p^(r-1) of the total class mod p^r; otherwise, with l = k/(p-1),
    the class is p^e times a unit times t^k where e = r - 1 - v_p(l).
    """
    p, r = pp.p, pp.r
    if p == 2:
        raise ValueError("requires odd prime")
    if k < 1 or k > pp.modulus:
        raise ValueError(f"out of range: k={k} not in 1..{pp.modulus}")
    if k % (p - 1):
        return ChernClassValuation(True, None)
    l = k // (p - 1)
    if l > p ** (r - 1):
        return ChernClassValuation(True, None)
    return ChernClassValuation(False, r - 1 - vp(l, p))
