"""Exact arithmetic in F_p and F_{p^n}.

Extension fields are built as F_p[x]/(f) for a monic irreducible f of
degree n.  Elements are length-n coefficient vectors (constant term
first), every coefficient reduced into [0, p).  The modulus is chosen
deterministically: the lexicographically smallest monic irreducible
polynomial of the requested degree, comparing coefficient vectors from
the constant term upward.  Two runs on any platform therefore agree on
every element and every enumeration order.

Plain polynomials over F_p are passed around as Python tuples of ints,
constant term first, with no trailing zeros (the zero polynomial is the
empty tuple).
"""

from __future__ import annotations

import functools
from dataclasses import dataclass
from typing import Iterator

#: Full enumeration of F_q (and q x q solution grids downstream) is only
#: sensible at desk scale; reject anything bigger outright.
MAX_FIELD_SIZE = 2 ** 26

_MR_WITNESSES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)


def is_prime(m: int) -> bool:
    """Deterministic Miller-Rabin, exact for m < 3.3e24 (far above our range)."""
    if m < 2:
        return False
    for sp in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        if m == sp:
            return True
        if m % sp == 0:
            return False
    d = m - 1
    r = 0
    while d % 2 == 0:
        d //= 2
        r += 1
    for a in _MR_WITNESSES:
        x = pow(a, d, m)
        if x in (1, m - 1):
            continue
        for _ in range(r - 1):
            x = x * x % m
            if x == m - 1:
                break
        else:
            return False
    return True


def prime_factors(m: int) -> list[int]:
    """Distinct prime factors of m, ascending (trial division; m is small)."""
    out = []
    d = 2
    while d * d <= m:
        if m % d == 0:
            out.append(d)
            while m % d == 0:
                m //= d
        d += 1
    if m > 1:
        out.append(m)
    return out


# ----------------------------------------------------------------------
# dense polynomial arithmetic over F_p (tuples, constant term first)

def _trim(c: list[int]) -> tuple[int, ...]:
    while c and c[-1] == 0:
        c.pop()
    return tuple(c)


def poly_add(a, b, p):
    n = max(len(a), len(b))
    return _trim([((a[i] if i < len(a) else 0) + (b[i] if i < len(b) else 0)) % p
                  for i in range(n)])


def poly_sub(a, b, p):
    n = max(len(a), len(b))
    return _trim([((a[i] if i < len(a) else 0) - (b[i] if i < len(b) else 0)) % p
                  for i in range(n)])


def poly_mul(a, b, p):
    if not a or not b:
        return ()
    out = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                out[i + j] = (out[i + j] + ai * bj) % p
    return _trim(out)


def poly_divmod(a, b, p):
    """Quotient and remainder of a by b over F_p; b must be nonzero."""
    if not b:
        raise ZeroDivisionError("zero divisor")
    a = list(a)
    db, lb = len(b) - 1, b[-1]
    inv_lb = pow(lb, p - 2, p)
    q = [0] * max(len(a) - db, 0)
    for i in range(len(a) - 1, db - 1, -1):
        c = a[i]
        if c:
            f = c * inv_lb % p
            q[i - db] = f
            for j in range(db + 1):
                a[i - db + j] = (a[i - db + j] - f * b[j]) % p
    return _trim(q), _trim(a)


def poly_mod(a, b, p):
    return poly_divmod(a, b, p)[1]


def poly_gcd(a, b, p):
    while b:
        a, b = b, poly_mod(a, b, p)
    if a:
        inv = pow(a[-1], p - 2, p)
        a = tuple(c * inv % p for c in a)
    return a


def poly_gcdext(a, b, p):
    """(g, s, t) with s*a + t*b = g, g monic (or zero)."""
    r0, r1 = a, b
    s0, s1 = (1,), ()
    t0, t1 = (), (1,)
    while r1:
        q, r = poly_divmod(r0, r1, p)
        r0, r1 = r1, r
        s0, s1 = s1, poly_sub(s0, poly_mul(q, s1, p), p)
        t0, t1 = t1, poly_sub(t0, poly_mul(q, t1, p), p)
    if r0:
        inv = pow(r0[-1], p - 2, p)
        scale = (inv,)
        r0 = poly_mul(r0, scale, p)
        s0 = poly_mul(s0, scale, p)
        t0 = poly_mul(t0, scale, p)
    return r0, s0, t0


def poly_powmod(a, e: int, mod, p):
    """a^e mod `mod` over F_p, square and multiply."""
    result = (1,)
    a = poly_mod(a, mod, p)
    while e:
        if e & 1:
            result = poly_mod(poly_mul(result, a, p), mod, p)
        a = poly_mod(poly_mul(a, a, p), mod, p)
        e >>= 1
    return result


def is_irreducible(f, p: int) -> bool:
    """Rabin's criterion for a monic f of degree >= 1 over F_p.

    f is irreducible iff x^(p^n) == x mod f and, for every prime r | n,
    gcd(x^(p^(n/r)) - x, f) = 1.  Frobenius powers x^(p^k) are computed by
    iterating y -> y^p mod f, which keeps every exponent at most p.
    """
    n = len(f) - 1
    if n < 1 or f[-1] != 1:
        raise ValueError("modulus must be monic of degree >= 1")
    if n == 1:
        return True
    x = (0, 1)
    frob = [x]  # frob[k] = x^(p^k) mod f
    for _ in range(n):
        frob.append(poly_powmod(frob[-1], p, f, p))
    if frob[n] != poly_mod(x, f, p):
        return False
    for r in prime_factors(n):
        g = poly_gcd(poly_sub(frob[n // r], x, p), f, p)
        if g != (1,):
            return False
    return True


# ----------------------------------------------------------------------
# field and element types

@dataclass(frozen=True)
class FieldSpec:
    """A concrete F_{p^n}: prime p, degree n, monic irreducible modulus."""

    p: int
    n: int
    modulus: tuple[int, ...]  # length n+1, constant term first, leading 1

    @property
    def q(self) -> int:
        return self.p ** self.n

    def zero(self) -> "FFElement":
        return FFElement(self, (0,) * self.n)

    def one(self) -> "FFElement":
        return FFElement(self, (1,) + (0,) * (self.n - 1))

    def element(self, coeffs) -> "FFElement":
        """Element from any int sequence of length <= n (reduced mod p)."""
        c = [int(v) % self.p for v in coeffs]
        if len(c) > self.n:
            c = list(poly_mod(_trim(c), self.modulus, self.p))
        c += [0] * (self.n - len(c))
        return FFElement(self, tuple(c[: self.n]))

    def from_index(self, k: int) -> "FFElement":
        """Element number k in enumeration order: base-p digits of k."""
        digits = []
        for _ in range(self.n):
            k, d = divmod(k, self.p)
            digits.append(d)
        return FFElement(self, tuple(digits))

    def __repr__(self):
        return f"FieldSpec(p={self.p}, n={self.n})"


class FFElement:
    """Element of a FieldSpec: immutable coefficient vector in [0, p)^n."""

    __slots__ = ("field", "coeffs", "_hash")

    def __init__(self, field: FieldSpec, coeffs: tuple[int, ...]):
        if len(coeffs) != field.n:
            raise ValueError("coefficient vector has wrong length")
        object.__setattr__(self, "field", field)
        object.__setattr__(self, "coeffs", coeffs)
        object.__setattr__(self, "_hash", None)

    def __setattr__(self, *_):
        raise AttributeError("FFElement is immutable")

    def _check(self, other: "FFElement"):
        if not isinstance(other, FFElement):
            raise TypeError("FFElement expected")
        if other.field != self.field:
            raise ValueError("field mismatch")

    def __add__(self, other):
        self._check(other)
        p = self.field.p
        return FFElement(self.field, tuple((a + b) % p for a, b in zip(self.coeffs, other.coeffs)))

    def __sub__(self, other):
        self._check(other)
        p = self.field.p
        return FFElement(self.field, tuple((a - b) % p for a, b in zip(self.coeffs, other.coeffs)))

    def __neg__(self):
        p = self.field.p
        return FFElement(self.field, tuple(-a % p for a in self.coeffs))

    def __mul__(self, other):
        self._check(other)
        f = self.field
        prod = poly_mul(_trim(list(self.coeffs)), _trim(list(other.coeffs)), f.p)
        return f.element(poly_mod(prod, f.modulus, f.p))

    def inverse(self) -> "FFElement":
        """Multiplicative inverse via the extended Euclidean algorithm."""
        f = self.field
        a = _trim(list(self.coeffs))
        if not a:
            raise ZeroDivisionError("zero divisor")
        g, s, _ = poly_gcdext(a, f.modulus, f.p)
        if g != (1,):  # cannot happen for an irreducible modulus
            raise ZeroDivisionError("zero divisor")
        return f.element(s)

    def __truediv__(self, other):
        self._check(other)
        return self * other.inverse()

    def __pow__(self, e: int):
        if not isinstance(e, int) or e < 0:
            raise ValueError("exponent must be a nonnegative integer")
        result = self.field.one()
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def is_zero(self) -> bool:
        return all(c == 0 for c in self.coeffs)

    def index(self) -> int:
        """Position in enumeration order (base-p value of the vector)."""
        k = 0
        for c in reversed(self.coeffs):
            k = k * self.field.p + c
        return k

    def __eq__(self, other):
        return (isinstance(other, FFElement) and other.field == self.field
                and other.coeffs == self.coeffs)

    def __hash__(self):
        h = self._hash
        if h is None:
            h = hash((self.field.p, self.field.n, self.coeffs))
            object.__setattr__(self, "_hash", h)
        return h

    def __repr__(self):
        return f"FFElement{self.coeffs}"


@functools.lru_cache(maxsize=None)
def make_field(p: int, n: int) -> FieldSpec:
    """Construct F_{p^n} with the deterministic smallest modulus.

    Monic degree-n candidates are scanned in lexicographic order of
    (c_0, c_1, ..., c_{n-1}) and the first irreducible one wins, so equal
    (p, n) always yield byte-identical fields.  Candidates with a root in
    F_p (in particular c_0 = 0) are skipped before the Rabin test; the
    result is cached, FieldSpec being immutable.
    """
    if not isinstance(p, int) or not is_prime(p):
        raise ValueError("not prime")
    if not isinstance(n, int) or n < 1:
        raise ValueError("degree must be >= 1")
    if p ** n > MAX_FIELD_SIZE:
        raise ValueError("field too large")
    if n == 1:
        return FieldSpec(p, 1, (0, 1))
    for k in range(p ** n):
        lower = []
        t = k
        # c_0 is the most significant digit of k, so ascending k scans
        # (c_0, ..., c_{n-1}) in lexicographic order
        for i in range(n - 1, -1, -1):
            lower.append(t // p ** i)
            t %= p ** i
        if lower[0] == 0:
            continue
        f = tuple(lower) + (1,)
        if any(_eval_mod_p(f, x, p) == 0 for x in range(p)):
            continue
        if is_irreducible(f, p):
            return FieldSpec(p, n, f)
    raise RuntimeError("no irreducible polynomial found")  # unreachable


def _eval_mod_p(f, x: int, p: int) -> int:
    acc = 0
    for c in reversed(f):
        acc = (acc * x + c) % p
    return acc


def enumerate_elements(field: FieldSpec) -> Iterator[FFElement]:
    """All q elements in the fixed order k = 0..q-1 (base-p digit vectors)."""
    for k in range(field.q):
        yield field.from_index(k)


def arith(a: FFElement, b, op: str) -> FFElement:
    """Single dispatch surface: op in {add, sub, mul, div, pow}.

    For pow, b is a nonnegative integer exponent instead of an element.
    """
    if op == "pow":
        return a ** b
    if not isinstance(b, FFElement):
        raise TypeError("FFElement expected")
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    if op == "div":
        return a / b
    raise ValueError(f"unknown op {op!r}")


def multiplicative_generator(field: FieldSpec) -> FFElement:
    """Smallest (in enumeration order) generator of the cyclic group F_q^*."""
    q1 = field.q - 1
    checks = [q1 // r for r in prime_factors(q1)] if q1 > 1 else []
    for k in range(1, field.q):
        g = field.from_index(k)
        if all((g ** c) != field.one() for c in checks):
            return g
    raise RuntimeError("no generator found")  # unreachable for a field
