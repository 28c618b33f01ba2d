"""Frobenius eigenvalues from point counts over small fields.

For an elliptic curve the affine count over F_{p^n} is p^n - s_n where
s_n is the n-th power sum of a conjugate pair of eigenvalues of modulus
sqrt(p); for a genus-g curve the projective count is p^n + 1 - s_n with
2g eigenvalues.  Everything integral is computed with exact integer
recurrences; complex floats only appear when reporting eigenvalues and
checking their moduli.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .finite_field import is_prime
from .variety import CountSequence

MODULUS_TOL = 1e-9
ROOT_RESIDUAL_TOL = 1e-8
WEIL_CHECK_TOL = 1e-6


@dataclass(frozen=True)
class FrobeniusAlpha:
    """One eigenvalue alpha (im >= 0) with alpha + conj(alpha) = trace_a."""

    re: float
    im: float
    p: int
    trace_a: int

    def __post_init__(self):
        if abs(self.alpha * self.alpha.conjugate() - self.p) > MODULUS_TOL * self.p:
            raise ValueError("eigenvalue modulus differs from sqrt(p)")
        if self.trace_a * self.trace_a > 4 * self.p:
            raise ValueError("trace violates the Hasse bound")

    @property
    def alpha(self) -> complex:
        return complex(self.re, self.im)

    def power_sum(self, n: int) -> int:
        """alpha^n + conj(alpha)^n, exactly."""
        return trace_power_sum(self.trace_a, self.p, n)


@dataclass(frozen=True)
class WeilNumbers:
    """2g reciprocal zeta-numerator roots for a genus-g curve over F_p."""

    p: int
    genus: int
    coeffs: tuple[int, ...]      # b_0..b_{2g} with b_0 = 1
    roots: tuple[complex, ...]   # the alpha_i, conjugation-closed

    def __post_init__(self):
        conj = sorted(self.roots, key=_root_key)
        conj_bar = sorted((r.conjugate() for r in self.roots), key=_root_key)
        for u, v in zip(conj, conj_bar):
            if abs(u - v) > 1e-6 * max(1.0, abs(u)):
                raise ValueError("roots not closed under conjugation")
        sq = math.sqrt(self.p)
        for r in self.roots:
            if abs(abs(r) - sq) > WEIL_CHECK_TOL * sq:
                raise ValueError("Weil bound violated")

    def power_sum(self, n: int) -> int:
        """s_n = sum of alpha_i^n via the Newton recurrence, exactly."""
        return _newton_power_sums(self.coeffs, n)[n]

    def predict_projective_count(self, n: int) -> int:
        return self.p ** n + 1 - self.power_sum(n)


def _root_key(z: complex) -> tuple[float, float]:
    return (round(z.real, 9), round(z.imag, 9))


def trace_power_sum(a: int, p: int, n: int) -> int:
    """s_n = alpha^n + conj(alpha)^n for the pair with sum a, product p.

    Integer recurrence s_n = a*s_{n-1} - p*s_{n-2}, s_0 = 2, s_1 = a; no
    floating point, hence no drift for any n.
    """
    if n < 0:
        raise ValueError("n must be >= 0")
    s_prev, s = 2, a
    if n == 0:
        return s_prev
    for _ in range(n - 1):
        s_prev, s = s, a * s - p * s_prev
    return s


def hasse_alpha(p: int, n1_affine: int) -> FrobeniusAlpha:
    """Eigenvalue pair from the affine count over the prime field.

    The affine count N_1 = p - a determines the trace a; the pair is the
    two roots of x^2 - a*x + p, and we report the one in the upper half
    plane.  Counts with |a| > 2*sqrt(p) cannot come from an elliptic
    curve and are rejected.
    """
    if not is_prime(p):
        raise ValueError("not prime")
    a = p - n1_affine
    if a * a > 4 * p:
        raise ValueError("not an elliptic-curve count")
    return FrobeniusAlpha(a / 2.0, math.sqrt(4 * p - a * a) / 2.0, p, a)


def predict_affine_count(alpha: FrobeniusAlpha, n: int) -> int:
    """p^n - (alpha^n + conj(alpha)^n), exactly."""
    if n < 1:
        raise ValueError("n must be >= 1")
    return alpha.p ** n - alpha.power_sum(n)


def correction_term(alpha: FrobeniusAlpha, n: int) -> int:
    """The oscillating part of the count: N_affine - p^n = -s_n."""
    if n < 1:
        raise ValueError("n must be >= 1")
    return -alpha.power_sum(n)


def _newton_power_sums(coeffs: tuple[int, ...], n_max: int) -> list[int]:
    """Power sums s_0..s_n_max of the reciprocal roots of sum b_j t^j.

    Newton's identities, run forward: for n <= deg,
    s_n = -(n*b_n + sum_{i=1}^{n-1} s_i b_{n-i}); beyond the degree the
    b-weighted window slides with no n*b_n term.
    """
    deg = len(coeffs) - 1
    s = [deg]  # s_0 = number of roots
    for n in range(1, n_max + 1):
        acc = n * coeffs[n] if n <= deg else 0
        for i in range(max(1, n - deg), n):
            acc += s[i] * coeffs[n - i]
        s.append(-acc)
    return s


def weil_numbers_from_counts(p: int, g: int, counts: CountSequence) -> WeilNumbers:
    """Recover the 2g eigenvalues from projective counts N_1..N_g.

    The power sums s_n = p^n + 1 - N_n determine b_1..b_g by Newton's
    identities; b_{g+1}..b_{2g} follow from the functional-equation
    symmetry b_{2g-j} = p^(g-j) * b_j.  The eigenvalues are the roots of
    sum b_j u^(2g-j), found numerically and verified.
    """
    if g < 1:
        raise ValueError("genus must be >= 1")
    if not counts.projective_flag:
        raise ValueError("projective counts required")
    if len(counts.counts) < g:
        raise ValueError("need at least g counts")
    if counts.p != p:
        raise ValueError("count sequence is over a different prime")
    s = [2 * g]
    for n in range(1, g + 1):
        s.append(p ** n + 1 - counts.counts[n - 1])
    b = [1]
    for j in range(1, g + 1):
        acc = sum(s[i] * b[j - i] for i in range(1, j + 1))
        if acc % j:
            raise ValueError("inconsistent counts")
        b.append(-acc // j)
    for j in range(g - 1, -1, -1):
        b.append(p ** (g - j) * b[j])
    coeffs = tuple(b)

    roots = np.roots(np.array(coeffs, dtype=float))
    scale = sum(abs(c) for c in coeffs)
    for r in roots:
        residual = abs(np.polyval(np.array(coeffs, dtype=complex), r))
        if residual > ROOT_RESIDUAL_TOL * scale * max(1.0, abs(r)) ** (2 * g):
            raise ValueError("inconsistent counts")
    sq = math.sqrt(p)
    for r in roots:
        if abs(abs(r) - sq) > WEIL_CHECK_TOL * sq:
            raise ValueError("Weil bound violated")
    ordered = tuple(sorted((complex(r) for r in roots), key=_root_key))
    return WeilNumbers(p, g, coeffs, ordered)


def verify_weil_rh(roots, p: int, k: int) -> tuple[bool, float]:
    """Check | |alpha| - p^(k/2) | <= 1e-9 * p^(k/2) for every root.

    Returns (ok, max relative deviation).
    """
    target = p ** (k / 2.0)
    worst = 0.0
    for r in roots:
        worst = max(worst, abs(abs(complex(r)) - target) / target)
    return worst <= MODULUS_TOL, worst
