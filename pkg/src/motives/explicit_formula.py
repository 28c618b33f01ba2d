"""Prime counting: sieve, logarithmic integral, explicit formula.

The truncated explicit formula approximates the prime counting function
as a Moebius-weighted sum of a smooth term per root-rescaled argument:

    approx(x) = sum_{m=1..M} mu(m)/m * f(x^(1/m)),   x^(1/M) >= 2

where f(y) combines the principal-value logarithmic integral, one
oscillating term per nontrivial zeta zero pair, the constant ln 2, and
an archimedean tail integral.  Zero ordinates are external data, read
from a text file and validated, never computed here.

li is evaluated by adaptive quadrature with the singularity at t = 1
removed by a symmetric fold; the complex terms li(y^rho) reduce to an
exponential integral evaluated by fixed Gauss-Legendre panels along a
horizontal ray, accurate to well below 1e-8 per term.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from importlib import resources

import numpy as np
from scipy.integrate import quad

LN2 = math.log(2.0)
_QUAD_OPTS = dict(epsabs=1e-12, epsrel=1e-12, limit=200)

_ANCHOR = 14.13
_ANCHOR_TOL = 0.01


# ----------------------------------------------------------------------
# primes

@dataclass(frozen=True)
class PrimeCounter:
    """Sieve of Eratosthenes up to limit with cumulative prime counts."""

    limit: int
    is_prime: np.ndarray
    pi_table: np.ndarray

    @classmethod
    def build(cls, limit: int) -> "PrimeCounter":
        if limit < 2:
            raise ValueError("sieve limit must be >= 2")
        flags = np.ones(limit + 1, dtype=bool)
        flags[:2] = False
        for d in range(2, int(limit ** 0.5) + 1):
            if flags[d]:
                flags[d * d::d] = False
        flags.setflags(write=False)
        pi = np.cumsum(flags)
        pi.setflags(write=False)
        return cls(limit, flags, pi)


def sieve_pi(x: float, pc: PrimeCounter) -> int:
    """Exact number of primes <= floor(x)."""
    n = math.floor(x)
    if n > pc.limit:
        raise ValueError("beyond sieve limit")
    if n < 2:
        return 0
    return int(pc.pi_table[n])


def mobius(m: int) -> int:
    """Moebius function by trial factorization."""
    if m < 1:
        raise ValueError("m must be >= 1")
    out = 1
    d = 2
    while d * d <= m:
        if m % d == 0:
            m //= d
            if m % d == 0:
                return 0
            out = -out
        d += 1
    if m > 1:
        out = -out
    return out


# ----------------------------------------------------------------------
# logarithmic integral

def _inv_log(t: float) -> float:
    return 1.0 / math.log(t)


def _folded(s: float) -> float:
    # 1/ln(1+s) + 1/ln(1-s); the 1/s poles cancel, limit 1 at s = 0
    if s < 1e-6:
        return 1.0 + s * s / 12.0
    return 1.0 / math.log1p(s) + 1.0 / math.log1p(-s)


def li(x: float) -> float:
    """Principal value of the integral of dt/ln t from 0 to x.

    The divergence at t = 1 is removed by folding the interval
    symmetrically about 1, which leaves a bounded integrand; the pieces
    are integrated adaptively with absolute target well below 1e-9.
    """
    if x <= 0:
        raise ValueError("x must be positive")
    if x == 1:
        raise ValueError("divergent")
    if x < 1:
        return quad(_inv_log, 0.0, x, **_QUAD_OPTS)[0]
    h = min(x - 1.0, 1.0)
    total = quad(_folded, 0.0, h, **_QUAD_OPTS)[0]
    if 1.0 - h > 0.0:
        total += quad(_inv_log, 0.0, 1.0 - h, **_QUAD_OPTS)[0]
    if x > 1.0 + h:
        pieces = [1.0 + h]
        step = 64.0
        while pieces[-1] * step < x:
            pieces.append(pieces[-1] * step)
        pieces.append(x)
        for a, b in zip(pieces, pieces[1:]):
            total += quad(_inv_log, a, b, **_QUAD_OPTS)[0]
    return total


_LI_GRID_NODES, _LI_GRID_WEIGHTS = np.polynomial.legendre.leggauss(8)


def li_grid(n_max: int, n_min: int = 3) -> np.ndarray:
    """li at every integer in [n_min, n_max], n_min >= 2.

    Anchored at li(n_min) from the adaptive routine, then extended by
    8-node Gauss-Legendre panels over each unit interval, whose error is
    negligible against the 1e-9 budget for a smooth integrand on
    t >= 2.
    """
    if n_min < 2 or n_max < n_min:
        raise ValueError("need 2 <= n_min <= n_max")
    lefts = np.arange(n_min, n_max, dtype=float)
    nodes = lefts[:, None] + (_LI_GRID_NODES[None, :] + 1.0) / 2.0
    panel = (1.0 / np.log(nodes)) @ _LI_GRID_WEIGHTS / 2.0
    out = np.empty(n_max - n_min + 1)
    out[0] = li(float(n_min))
    np.cumsum(panel, out=out[1:])
    out[1:] += out[0]
    return out


def archimedean_tail(y: float) -> float:
    """Integral of dt / (t (t^2 - 1) ln t) from y to infinity, y > 1.

    Substituting s = 1/t gives a bounded integrand on (0, 1/y].
    """
    if y <= 1:
        raise ValueError("y must be > 1")

    def g(s: float) -> float:
        if s == 0.0:
            return 0.0
        return s / ((1.0 - s * s) * -math.log(s))

    return quad(g, 0.0, 1.0 / y, **_QUAD_OPTS)[0]


# ----------------------------------------------------------------------
# zeta zero data

@dataclass(frozen=True)
class ZeroTable:
    """Increasing positive ordinates t_j of zeros 1/2 + i t_j."""

    ordinates: tuple[float, ...]

    def __post_init__(self):
        if not self.ordinates:
            raise ValueError("no zeros")
        arr = self.ordinates
        if arr[0] <= 0:
            raise ValueError("ordinates must be positive")
        if any(b <= a for a, b in zip(arr, arr[1:])):
            raise ValueError("not increasing")
        if abs(arr[0] - _ANCHOR) > _ANCHOR_TOL:
            raise ValueError("failed anchor: first ordinate is not near 14.13")

    def __len__(self):
        return len(self.ordinates)


def load_zeros(path) -> ZeroTable:
    """Read a zero table: one decimal ordinate per line, '#' comments."""
    ordinates = []
    with open(path) as fh:
        for lineno, raw in enumerate(fh, start=1):
            line = raw.split("#", 1)[0].strip()
            if not line:
                continue
            try:
                ordinates.append(float(line))
            except ValueError:
                raise ValueError(f"cannot parse ordinate on line {lineno}") from None
    return ZeroTable(tuple(ordinates))


def default_zero_table() -> ZeroTable:
    """The zero table shipped with the package (150 ordinates)."""
    ref = resources.files("motives").joinpath("data/zeta_zeros.txt")
    with resources.as_file(ref) as path:
        return load_zeros(path)


# ----------------------------------------------------------------------
# explicit formula

_RAY_PANELS = 12
_RAY_END = 60.0
_nodes16, _weights16 = np.polynomial.legendre.leggauss(16)
_edges = np.linspace(0.0, _RAY_END, _RAY_PANELS + 1)
_RAY_U = np.concatenate([
    (_edges[i] + _edges[i + 1]) / 2.0 + (_edges[i + 1] - _edges[i]) / 2.0 * _nodes16
    for i in range(_RAY_PANELS)])
_RAY_W = np.concatenate([
    (_edges[i + 1] - _edges[i]) / 2.0 * _weights16 for i in range(_RAY_PANELS)])
_RAY_WE = _RAY_W * np.exp(-_RAY_U)


def zero_pair_terms(y: float, gammas: np.ndarray) -> np.ndarray:
    """2 Re li(y^rho) for each rho = 1/2 + i gamma, as a vector.

    li(y^rho) = Ei(rho ln y) and Re Ei(z) = -Re E1(-z); E1 is integrated
    along the horizontal ray from -rho ln y, where the integrand decays
    like e^(-u) and stays far from the pole (|Im| = gamma ln y > 9).
    The truncation at u = 60 leaves a tail below 1e-26 of the term.
    """
    if y < 2:
        raise ValueError("y must be >= 2")
    ln_y = math.log(y)
    w = -(0.5 + 1j * np.asarray(gammas, dtype=float)) * ln_y
    integral = (_RAY_WE / (w[:, None] + _RAY_U[None, :])).sum(axis=1)
    e1 = np.exp(-w) * integral
    return -2.0 * e1.real


def smooth_term(y: float, gammas: np.ndarray) -> float:
    """f(y): li(y) minus the zero-pair corrections, minus ln 2, plus the
    archimedean tail."""
    val = li(y) - LN2 + archimedean_tail(y)
    if len(gammas):
        val -= float(zero_pair_terms(y, gammas).sum())
    return val


def _rescale_orders(x: float) -> int:
    # largest M with x^(1/M) >= 2, robust against float log noise
    m = max(1, int(math.floor(math.log(x) / LN2 + 1e-9)))
    while x ** (1.0 / (m + 1)) >= 2.0:
        m += 1
    while m > 1 and x ** (1.0 / m) < 2.0:
        m -= 1
    return m


def riemann_approx(x: float, zeros: ZeroTable, K: int) -> float:
    """Truncated explicit-formula approximation to the prime count at x.

    Uses the first K zero pairs; K = 0 gives the smooth main term.  At
    prime x the full formula would converge to the count minus 1/2, so
    comparisons should sample away from primes.
    """
    if x < 2:
        raise ValueError("x must be >= 2")
    if K < 0 or K > len(zeros):
        raise ValueError("K exceeds the zero table")
    gammas = np.asarray(zeros.ordinates[:K], dtype=float)
    total = 0.0
    for m in range(1, _rescale_orders(x) + 1):
        mu = mobius(m)
        if mu:
            total += mu / m * smooth_term(x ** (1.0 / m), gammas)
    return total


def approximation_rows(xs, zeros: ZeroTable, K: int, pc: PrimeCounter):
    """(x, pi(x), li(x), approx_K(x)) for each grid point."""
    rows = []
    for x in xs:
        rows.append((float(x), sieve_pi(x, pc), li(float(x)),
                     riemann_approx(float(x), zeros, K)))
    return rows


def half_integer_grid(lo: float, hi: float) -> np.ndarray:
    """Points k + 1/2 inside [lo, hi]; never integers, so never primes."""
    start = math.floor(lo) + 0.5
    if start < lo:
        start += 1.0
    return np.arange(start, hi + 1e-12, 1.0)


def rh_bound_ratio(range_max: int, pc: PrimeCounter) -> float:
    """sup over 3 <= n <= range_max of |pi(n) - li(n)| / (sqrt(n) ln n)."""
    if range_max < 3:
        raise ValueError("range_max must be >= 3")
    if range_max > pc.limit:
        raise ValueError("beyond sieve limit")
    ns = np.arange(3, range_max + 1, dtype=float)
    pi_vals = pc.pi_table[3:range_max + 1].astype(float)
    li_vals = li_grid(range_max)
    ratios = np.abs(pi_vals - li_vals) / (np.sqrt(ns) * np.log(ns))
    return float(ratios.max())
