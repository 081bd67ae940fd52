"""Roots of x^3 + a0*x = b0 over the prime field F_p.

The count comes from the discriminant together with the order-3 recurrence
u_{n+3} = b0*u_n - a0*u_{n+1} evaluated at n = p-2; the exhaustive scan is
retained as an oracle and as the source of Hensel starting points.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import ScanBoundExceeded, ZeroResidue
from .padic import Prime
from .residues import scan_bound

Matrix = tuple[tuple[int, int, int], ...]


@dataclass(frozen=True)
class FpCubic:
    """Reduced cubic x^3 + a0*x - b0 with a0, b0 units mod p."""

    prime: Prime
    a0: int
    b0: int

    def __post_init__(self) -> None:
        p = self.prime.p
        object.__setattr__(self, "a0", self.a0 % p)
        object.__setattr__(self, "b0", self.b0 % p)
        if self.a0 == 0 or self.b0 == 0:
            raise ZeroResidue("reduced cubic needs a0*b0 nonzero mod p")


def discriminant_mod_p(c: FpCubic) -> int:
    """(-4*a0^3 - 27*b0^2) mod p."""
    return (-4 * c.a0**3 - 27 * c.b0**2) % c.prime.p


def _initial_state(c: FpCubic) -> tuple[int, int, int]:
    p = c.prime.p
    return (0, -c.a0 % p, c.b0)


def _mat_mul(x: Matrix, y: Matrix, p: int) -> Matrix:
    return tuple(
        tuple(sum(x[i][k] * y[k][j] for k in range(3)) % p for j in range(3))
        for i in range(3)
    )


def _mat_pow(m: Matrix, e: int, p: int) -> Matrix:
    acc: Matrix = ((1, 0, 0), (0, 1, 0), (0, 0, 1))
    while e:
        if e & 1:
            acc = _mat_mul(acc, m, p)
        m = _mat_mul(m, m, p)
        e >>= 1
    return acc


def u_term(c: FpCubic, n: int) -> int:
    """u_n mod p via companion-matrix exponentiation, O(log n) multiplications."""
    if n < 1:
        raise ValueError("recurrence index starts at 1")
    p = c.prime.p
    u1, u2, u3 = _initial_state(c)
    if n <= 3:
        return (u1, u2, u3)[n - 1]
    step: Matrix = ((0, 1, 0), (0, 0, 1), (c.b0, -c.a0 % p, 0))
    m = _mat_pow(step, n - 1, p)
    return (m[0][0] * u1 + m[0][1] * u2 + m[0][2] * u3) % p


def u_term_iterated(c: FpCubic, n: int) -> int:
    """u_n mod p by direct O(n) iteration (oracle for u_term)."""
    if n < 1:
        raise ValueError("recurrence index starts at 1")
    p = c.prime.p
    u1, u2, u3 = _initial_state(c)
    if n <= 3:
        return (u1, u2, u3)[n - 1]
    for _ in range(n - 3):
        u1, u2, u3 = u2, u3, (c.b0 * u1 - c.a0 * u2) % p
    return u3


def count_roots_formula(c: FpCubic) -> int:
    """Number of F_p roots of x^3 + a0*x - b0, per the discriminant/recurrence test.

    Returns 3 when D*u_{p-2}^2 == 0, 0 when it equals 9*a0^2, and 1 otherwise.
    The value 3 counts multiplicity when D == 0 (distinct enumeration then
    finds two roots: a double and a simple one).
    """
    p = c.prime.p
    t = discriminant_mod_p(c) * pow(u_term(c, p - 2), 2, p) % p
    if t == 0:
        return 3
    if t == 9 * c.a0**2 % p:
        return 0
    return 1


def roots_exhaustive(c: FpCubic) -> list[int]:
    """All distinct F_p roots of x^3 + a0*x - b0, by scan (sorted)."""
    p = c.prime.p
    if p > scan_bound():
        raise ScanBoundExceeded(f"prime {p} exceeds the scan bound {scan_bound()}")
    return [x for x in range(p) if (x * x * x + c.a0 * x - c.b0) % p == 0]


def linear_root(a_star0: int, b_star0: int, prime: Prime) -> int:
    """The unique root of a_star0 * x = b_star0 in F_p."""
    p = prime.p
    a_star0 %= p
    if a_star0 == 0:
        raise ZeroResidue("linear congruence needs an invertible coefficient")
    return b_star0 * pow(a_star0, -1, p) % p
