"""Root computation to arbitrary digit precision.

The pipeline scales the cubic so that candidate roots become units, seeds
Newton iteration at residue roots mod p, and lifts with modulus doubling.
The explicit series expansion is kept as an independent cross-check, and the
repeated-root case is solved in closed form (lifting cannot apply there).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from .classify import CubicInstance, Domain, atom_for_valuation
from .errors import (
    InternalInconsistency,
    NonconvergentSeed,
    NotDoubleRoot,
    SingularSeed,
)
from .fp_cubic import FpCubic, linear_root, roots_exhaustive
from .padic import DigitExpansion, PadicRational, Prime
from .residues import nth_roots_mod_p

DEFAULT_DIGITS = 20

CASE_CUBE = "cube_root"  # |A| < |B| = 1: seed from x^3 = B0
CASE_SQRT = "square_root"  # |B| < |A| = 1: seed from x^2 = -A0
CASE_FULL = "full_cubic"  # |A| = |B| = 1: seed from x^3 + A0*x = B0
CASE_LINEAR = "linear"  # |A| = |B| > 1: seed from A0*x = B0


@dataclass(frozen=True)
class ScaledEquation:
    """y^3 + A*y = B with A = a*p^(2k), B = b*p^(3k).

    Unit roots y correspond bijectively to roots x = y * p^(-k) of the
    original cubic, i.e. to roots of valuation -k.
    """

    k: int
    a: PadicRational
    b: PadicRational

    @property
    def prime(self) -> Prime:
        return self.a.prime


@dataclass(frozen=True)
class HenselSeed:
    """A congruence root r0 together with the exact lifting polynomial.

    poly holds the four coefficients (cubic, quadratic, linear, constant) of
    the polynomial whose unit root is being lifted; the quadratic entry is
    always zero here.  gamma is the norm exponent absorbed into the cubic
    coefficient in the linear case.
    """

    r0: int
    poly: tuple[Fraction, Fraction, Fraction, Fraction]
    case: str
    prime: Prime
    gamma: int = 0

    @property
    def is_singular(self) -> bool:
        p = self.prime.p
        c3, c2, c1, _ = _poly_residues(self.poly, p, 1)[0]
        return ((3 * c3 * self.r0 + 2 * c2) * self.r0 + c1) % p == 0


@dataclass(frozen=True)
class RootRecord:
    """One computed root: unit digits, valuation, location, multiplicity."""

    expansion: DigitExpansion
    valuation: int
    domain: Domain
    multiplicity: int

    def approximation(self) -> Fraction:
        """Exact rational representative of the truncated expansion."""
        return self.expansion.approximation()


# -- integer kernels for lifting --


def _poly_residues(
    poly: tuple[Fraction, ...], p: int, power: int
) -> tuple[tuple[int, ...], int]:
    """Coefficients as residues mod p^power (all must have ord_p >= 0)."""
    m = p**power
    out = []
    for c in poly:
        fr = Fraction(c)
        out.append(fr.numerator * pow(fr.denominator, -1, m) % m)
    return tuple(out), m


def _eval_cubic(c: tuple[int, ...], y: int, m: int) -> int:
    c3, c2, c1, c0 = c
    return (((c3 * y + c2) * y + c1) * y + c0) % m


def _eval_deriv(c: tuple[int, ...], y: int, m: int) -> int:
    c3, c2, c1, _ = c
    return ((3 * c3 * y + 2 * c2) * y + c1) % m


def _vp_bounded(n: int, p: int, cap: int) -> Optional[int]:
    """ord_p of a residue mod p^cap: the exact value below cap, else None."""
    if n == 0:
        return None
    v = 0
    while n % p == 0:
        n //= p
        v += 1
    return v if v < cap else None


def _newton_unit_root(
    poly: tuple[Fraction, ...], theta: int, index: int, p: int, n: int
) -> int:
    """The unique unit root mod p^n over a seed satisfying the index-i lemma.

    Requires f(theta) = 0 mod p^(2*index+1) and ord_p f'(theta) = index.
    Each step at least doubles the residual valuation beyond the index.
    """
    nwork = n + index + 2
    c, m = _poly_residues(poly, p, nwork)
    pi = p**index
    theta %= m
    while True:
        fv = _eval_cubic(c, theta, m)
        s = _vp_bounded(fv, p, nwork)
        if s is None or s - index >= n:
            return theta % p**n
        w = _eval_deriv(c, theta, m) // pi
        step_mod = p ** (nwork - index)
        delta = (fv // pi) * pow(w, -1, step_mod) % step_mod
        theta = (theta - delta) % m


def _singular_branch_roots(
    poly: tuple[Fraction, ...], rho: int, p: int, n: int, v_disc: int
) -> list[int]:
    """All unit roots (residues mod p^n) over a class where f' vanishes mod p.

    Bounded search at raised Hensel index: solution classes over rho are
    refined one digit at a time; a class is lifted as soon as the index-i
    hypotheses hold (f = 0 mod p^(2i+1), ord f' = i exactly), and classes with
    no nearby root die out by a level controlled by ord_p of the discriminant.
    Requires a nonzero discriminant of valuation v_disc.
    """
    depth_cap = 2 * v_disc + 6
    c, _ = _poly_residues(poly, p, depth_cap + 1)
    roots: list[int] = []
    classes = [rho % p]
    level = 1
    while classes and level <= depth_cap:
        modulus = p**level
        nxt = []
        for theta in classes:
            i = _vp_bounded(_eval_deriv(c, theta, modulus), p, level)
            if i is not None and 2 * i + 1 <= level:
                # f(theta) = 0 mod p^level already covers mod p^(2i+1)
                roots.append(_newton_unit_root(poly, theta, i, p, n))
                continue
            step = modulus
            for d in range(p):
                cand = theta + d * step
                if _eval_cubic(c, cand, modulus * p) == 0:
                    nxt.append(cand)
        classes = nxt
        level += 1
    if classes:
        raise InternalInconsistency(
            f"singular branch did not resolve within depth {depth_cap}"
        )
    return sorted(set(roots))


def _digits_of_residue(r: int, p: int, n: int) -> tuple[int, ...]:
    digs = []
    for _ in range(n):
        digs.append(r % p)
        r //= p
    return tuple(digs)


# -- public operations --


def candidate_scalings(inst: CubicInstance) -> list[ScaledEquation]:
    """The (at most three, deduplicated) shifts k that can yield unit roots.

    k = e_b/3 when 3 | e_b, k = e_a/2 when 2 | e_a, and k = e_b - e_a, where
    e_a, e_b are the norm exponents of the coefficients.
    """
    ea = inst.a.norm_exponent()
    eb = inst.b.norm_exponent()
    ks = {eb - ea}
    if eb % 3 == 0:
        ks.add(eb // 3)
    if ea % 2 == 0:
        ks.add(ea // 2)
    return [
        ScaledEquation(k, inst.a.times_power(2 * k), inst.b.times_power(3 * k))
        for k in sorted(ks)
    ]


def formula_case(eq: ScaledEquation) -> Optional[str]:
    """Which congruence seeds the scaled equation, or None when no unit roots exist."""
    ea = eq.a.norm_exponent()
    eb = eq.b.norm_exponent()
    if ea < eb == 0:
        return CASE_CUBE
    if eb < ea == 0:
        return CASE_SQRT
    if ea == eb == 0:
        return CASE_FULL
    if ea == eb > 0:
        return CASE_LINEAR
    return None


def congruence_initials(eq: ScaledEquation) -> list[HenselSeed]:
    """One Hensel seed per residue root of the reduced congruence.

    An empty list means the congruence has no roots (the scaling contributes
    nothing); calling this on a shape that admits no unit roots is an error.
    """
    case = formula_case(eq)
    if case is None:
        raise ValueError("scaled equation admits no unit roots")
    prime = eq.prime
    p = prime.p
    one, zero = Fraction(1), Fraction(0)
    if case == CASE_LINEAR:
        gamma = eq.a.norm_exponent()
        astar = eq.a.unit_part().value
        bstar = eq.b.unit_part().value
        poly = (Fraction(p) ** gamma, zero, astar, -bstar)
        r0 = linear_root(eq.a.leading_digit(), eq.b.leading_digit(), prime)
        return [HenselSeed(r0, poly, case, prime, gamma)]

    poly = (one, zero, eq.a.value, -eq.b.value)
    if case == CASE_CUBE:
        residues = nth_roots_mod_p(eq.b.leading_digit(), 3, prime)
    elif case == CASE_SQRT:
        residues = nth_roots_mod_p(-eq.a.leading_digit() % p, 2, prime)
    else:
        residues = roots_exhaustive(
            FpCubic(prime, eq.a.leading_digit(), eq.b.leading_digit())
        )
    return [HenselSeed(r0, poly, case, prime) for r0 in residues]


def lift(seed: HenselSeed, n: int) -> DigitExpansion:
    """Digits of the unique unit root over a simple seed, to n digits.

    Newton iteration with modulus doubling; the result y satisfies
    f(y) = 0 mod p^n exactly.
    """
    if n < 1:
        raise ValueError("need at least one digit")
    if seed.is_singular:
        raise SingularSeed(
            f"derivative vanishes mod p at r0={seed.r0}; route to the repeated-root path"
        )
    p = seed.prime.p
    root = _newton_unit_root(seed.poly, seed.r0, 0, p, n)
    return DigitExpansion(seed.prime, 0, _digits_of_residue(root, p, n))


def _taylor_at_seed(seed: HenselSeed) -> tuple[Fraction, Fraction, Fraction, Fraction]:
    f3, f2, f1, f0 = (Fraction(c) for c in seed.poly)
    r0 = Fraction(seed.r0)
    c0 = ((f3 * r0 + f2) * r0 + f1) * r0 + f0
    c1 = (3 * f3 * r0 + 2 * f2) * r0 + f1
    c2 = 3 * f3 * r0 + f2
    return c0, c1, c2, f3


def _floor_log(p: int, x: int) -> int:
    e = 0
    while p ** (e + 1) <= x:
        e += 1
    return e


def series_agreement_exponent(seed: HenselSeed, terms: int) -> Optional[int]:
    """Certified power of p to which the truncated series matches the lift.

    Derived from the valuation of the first omitted term; weakly monotone in
    the number of terms.  None when the seed is already an exact root (every
    precision agrees).
    """
    if terms < 1:
        raise ValueError("need at least one series term")
    c0, c1, _, _ = _taylor_at_seed(seed)
    p = seed.prime.p
    if c1 == 0 or PadicRational(seed.prime, c1).valuation > 0:
        raise SingularSeed("series expansion needs an invertible linear coefficient")
    if c0 == 0:
        return None
    w = int(PadicRational(seed.prime, c0 / c1**2).valuation)
    if w < 1:
        raise NonconvergentSeed("series requires ord_p(c0/c1^2) >= 1")
    return max(1, (terms + 1) * w - _floor_log(p, 2 * terms + 1))


def series_root(
    seed: HenselSeed, terms: int, digits: Optional[int] = None
) -> DigitExpansion:
    """Truncated explicit-series evaluation of the lifted root (cross-check only).

    Sums `terms` outer terms of the double series exactly in rational
    arithmetic, then expands; agreement with the Newton lift is certified to
    series_agreement_exponent(seed, terms) digits.
    """
    if terms < 1:
        raise ValueError("need at least one series term")
    c0, c1, c2, c3 = _taylor_at_seed(seed)
    p = seed.prime.p
    prime = seed.prime
    if c1 == 0 or PadicRational(prime, c1).valuation > 0:
        raise SingularSeed("series expansion needs an invertible linear coefficient")
    if c0 == 0:
        result = Fraction(seed.r0)
    else:
        w = int(PadicRational(prime, c0 / c1**2).valuation)
        if w < 1:
            raise NonconvergentSeed("series requires ord_p(c0/c1^2) >= 1")
        z = c0 / c1**2
        y = c0 * c3 / c1
        total = Fraction(0)
        for k in range(terms):
            inner = Fraction(0)
            for j in range(k + 1):
                inner += (
                    Fraction((-1) ** (k - j), 2 * k - j + 1)
                    * c2**j
                    * math.comb(k, j)
                    * math.comb(3 * k - j, k)
                    * y ** (k - j)
                )
            total += inner * z**k
        result = Fraction(seed.r0) - (c0 / c1) * total
    if digits is None:
        digits = series_agreement_exponent(seed, terms) or terms + 1
    return PadicRational(prime, result).digits(digits)


def double_root_closed_form(
    inst: CubicInstance,
) -> tuple[PadicRational, PadicRational]:
    """The repeated root r = 3b/(2a) and the simple root s = -2r, exactly.

    Only valid when the full discriminant -4a^3 - 27b^2 vanishes; the factor
    identity x^3 + ax - b = (x - r)^2 (x - s) is verified before returning.
    """
    a = inst.a.value
    b = inst.b.value
    if -4 * a**3 - 27 * b**2 != 0:
        raise NotDoubleRoot("closed form applies only when the discriminant is zero")
    r = 3 * b / (2 * a)
    s = -2 * r
    if not (r * r + 2 * r * s == a and r * r * s == b):
        raise InternalInconsistency("repeated-root factorization failed to verify")
    return PadicRational(inst.prime, r), PadicRational(inst.prime, s)


def _record_from_exact(x: PadicRational, n: int, multiplicity: int) -> RootRecord:
    exp = x.digits(n)
    return RootRecord(exp, exp.valuation, atom_for_valuation(exp.valuation), multiplicity)


def residual_bound(inst: CubicInstance, record: RootRecord, n: int) -> int:
    """Guaranteed ord_p of x^3 + a*x - b at the record's truncated root.

    The unit-level lift satisfies its polynomial mod p^n (guard 0); unwinding
    the scaling multiplies the residual by p^(3v), and the linear-seeded case
    additionally divides by the p^gamma absorbed into the lifting polynomial.
    """
    ea = inst.a.norm_exponent()
    eb = inst.b.norm_exponent()
    gamma = 0
    if 3 * ea > 2 * eb and record.valuation == ea - eb:
        gamma = 3 * ea - 2 * eb
    return n + 3 * record.valuation - gamma


def all_roots(inst: CubicInstance, n: int = DEFAULT_DIGITS) -> list[RootRecord]:
    """Every root of x^3 + ax = b in Q_p, each to n unit digits.

    Records are sorted by (valuation, unit residue); the multiplicity-weighted
    length equals the whole-field root count.  Each record's unit-level lift y
    satisfies f(y) = 0 mod p^n (guard 0).
    """
    if n < 1:
        raise ValueError("need at least one digit")
    p = inst.prime.p
    a = inst.a.value
    b = inst.b.value
    if -4 * a**3 - 27 * b**2 == 0:
        r, s = double_root_closed_form(inst)
        records = [_record_from_exact(r, n, 2), _record_from_exact(s, n, 1)]
    else:
        records = []
        for eq in candidate_scalings(inst):
            if formula_case(eq) is None:
                continue
            unit_roots: list[int] = []
            for seed in congruence_initials(eq):
                if seed.is_singular:
                    disc = -4 * eq.a.value**3 - 27 * eq.b.value**2
                    v_disc = int(PadicRational(inst.prime, disc).valuation)
                    nwork = max(n, v_disc + 4)
                    unit_roots.extend(
                        _singular_branch_roots(seed.poly, seed.r0, p, nwork, v_disc)
                    )
                else:
                    unit_roots.append(_newton_unit_root(seed.poly, seed.r0, 0, p, n))
            v = -eq.k
            for y in sorted(unit_roots):
                exp = DigitExpansion(inst.prime, v, _digits_of_residue(y % p**n, p, n))
                records.append(RootRecord(exp, v, atom_for_valuation(v), 1))
    records.sort(key=lambda rec: (rec.valuation, rec.expansion.unit_residue()))
    return records
