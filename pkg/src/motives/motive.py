"""Weight-graded eigenvalue calculus for pure motives.

A motive is represented by the only data its point counts see: for each
weight k, a conjugation-closed multiset of complex eigenvalues of
modulus q^(k/2).  Direct sum is weightwise union, tensor product adds
weights and multiplies eigenvalues, and the signed trace formula turns
a motive into a count of points over F_{q^n}.  Nothing here constructs
motives from cycles; the representation is the linear-algebra shadow
and the count identities are what get verified.
"""

from __future__ import annotations

from dataclasses import dataclass

from .weil import FrobeniusAlpha
from .zeta import trace_formula_count

PURITY_TOL = 1e-9


def _eig_key(z: complex):
    return (round(z.real, 9), round(z.imag, 9))


@dataclass(frozen=True)
class Motive:
    """Graded eigenvalue data over the field with base_q elements."""

    base_q: int
    pieces: tuple[tuple[int, tuple[complex, ...]], ...]

    def __post_init__(self):
        if self.base_q < 2:
            raise ValueError("base must be a prime power >= 2")
        for k, alphas in self.pieces:
            if k < 0 or not isinstance(k, int):
                raise ValueError("weights must be nonnegative integers")
            if not alphas:
                raise ValueError("empty weight piece must be omitted")
            target = self.base_q ** (k / 2.0)
            for a in alphas:
                if abs(abs(a) - target) > PURITY_TOL * target:
                    raise ValueError("purity violated: eigenvalue modulus "
                                     "is not q^(k/2)")
            plain = sorted(alphas, key=_eig_key)
            conj = sorted((a.conjugate() for a in alphas), key=_eig_key)
            for u, v in zip(plain, conj):
                if abs(u - v) > 1e-9 * max(1.0, abs(u)):
                    raise ValueError("weight piece not closed under "
                                     "conjugation")

    def weight_table(self) -> dict[int, tuple[complex, ...]]:
        return dict(self.pieces)

    def betti(self, k: int) -> int:
        return len(self.weight_table().get(k, ()))


def make_motive(base_q: int, pieces: dict) -> Motive:
    """Normalize a weight -> eigenvalues mapping into a Motive."""
    out = []
    for k in sorted(pieces):
        alphas = tuple(sorted((complex(a) for a in pieces[k]), key=_eig_key))
        if alphas:
            out.append((int(k), alphas))
    return Motive(base_q, tuple(out))


def zero_motive(base_q: int) -> Motive:
    """The empty motive, unit for direct sum (zero points everywhere)."""
    return Motive(base_q, ())


def unit_motive(base_q: int) -> Motive:
    """h of a single point: one weight-0 eigenvalue 1."""
    return make_motive(base_q, {0: (1,)})


def lefschetz_motive(base_q: int) -> Motive:
    """The weight-2 line piece: single eigenvalue q."""
    return make_motive(base_q, {2: (base_q,)})


def direct_sum(a: Motive, b: Motive) -> Motive:
    """Weightwise multiset union."""
    if a.base_q != b.base_q:
        raise ValueError("base mismatch")
    merged: dict[int, list[complex]] = {}
    for m in (a, b):
        for k, alphas in m.pieces:
            merged.setdefault(k, []).extend(alphas)
    return make_motive(a.base_q, merged)


def tensor(a: Motive, b: Motive) -> Motive:
    """Weights add, eigenvalues multiply pairwise."""
    if a.base_q != b.base_q:
        raise ValueError("base mismatch")
    merged: dict[int, list[complex]] = {}
    for j, left in a.pieces:
        for k, right in b.pieces:
            bucket = merged.setdefault(j + k, [])
            for x in left:
                for y in right:
                    bucket.append(x * y)
    return make_motive(a.base_q, merged)


def tensor_power(a: Motive, e: int) -> Motive:
    if e < 0:
        raise ValueError("negative tensor power")
    out = unit_motive(a.base_q)
    for _ in range(e):
        out = tensor(out, a)
    return out


def motive_of_projective_space(dim: int, base_q: int) -> Motive:
    """h(1) + L + L^2 + ... + L^dim: eigenvalue q^k in weight 2k."""
    if dim < 0:
        raise ValueError("dimension must be >= 0")
    return make_motive(base_q, {2 * k: (base_q ** k,) for k in range(dim + 1)})


def motive_of_elliptic_curve(alpha: FrobeniusAlpha) -> Motive:
    """Point, conjugate eigenvalue pair in weight 1, and line piece."""
    return make_motive(alpha.p, {
        0: (1,),
        1: (alpha.alpha, alpha.alpha.conjugate()),
        2: (alpha.p,),
    })


def point_count(m: Motive, n: int) -> int:
    """Points over F_{q^n} by the signed trace formula."""
    return trace_formula_count(m.weight_table(), n)
