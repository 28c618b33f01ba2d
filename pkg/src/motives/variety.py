"""Polynomial systems over Z and exhaustive point counting over F_q.

A PolySystem is a list of multivariate polynomials with integer
coefficients.  Counting reduces every coefficient mod p and enumerates
assignments; elements of F_q are handled as integer ids (the position in
the field's canonical enumeration) so that whole chunks of the search
space evaluate as numpy arrays.  The domain is partitioned into fixed
chunks and the per-chunk integer counts are summed, so results are
identical for any worker count.

Text format, one polynomial per line: integer-coefficient monomials
joined with + and -, variables x1..xk (x, y, z accepted for k <= 3),
'^' for powers, '*' optional, '#' starts a comment.  Example:

    y^2 + y - x^3 - x
"""

from __future__ import annotations

import re
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass

import numpy as np

from .finite_field import FieldSpec, is_prime, make_field, multiplicative_generator

DEFAULT_WORK_LIMIT = 2 ** 28

# monomials: ((e_1, ..., e_k), coeff); a polynomial is a sorted tuple of them
Monomial = tuple[tuple[int, ...], int]
Poly = tuple[Monomial, ...]


@dataclass(frozen=True)
class PolySystem:
    """Polynomials with integer coefficients in num_vars variables."""

    num_vars: int
    polys: tuple[Poly, ...]
    homogeneous_flag: bool = False

    def __post_init__(self):
        if self.num_vars < 1:
            raise ValueError("need at least one variable")
        for poly in self.polys:
            for exps, _ in poly:
                if len(exps) != self.num_vars:
                    raise ValueError("exponent vector has wrong length")
                if any(e < 0 for e in exps):
                    raise ValueError("negative exponent")

    def is_homogeneous(self) -> bool:
        for poly in self.polys:
            degs = {sum(exps) for exps, c in poly if c != 0}
            if len(degs) > 1:
                return False
        return True


@dataclass(frozen=True)
class CountSequence:
    """Counts N_1..N_m over F_{p^1}..F_{p^m} under one convention."""

    p: int
    counts: tuple[int, ...]
    projective_flag: bool = False

    def __post_init__(self):
        if not is_prime(self.p):
            raise ValueError("not prime")
        if len(self.counts) < 1:
            raise ValueError("empty count sequence")
        if any(c < 0 for c in self.counts):
            raise ValueError("negative count")


# ----------------------------------------------------------------------
# parsing

_TOKEN = re.compile(r"\s*(?:(\d+)|([A-Za-z]\w*)|(\^)|(\*\*)|(\*)|([+-])|(.))")
_ALIASES = {"x": 1, "y": 2, "z": 3}


def _parse_poly(line: str) -> dict[tuple[int, ...], int]:
    """One polynomial as {exponent-map-by-index: coeff}; indices 1-based."""
    terms: dict[tuple, int] = {}
    tokens = []
    for m in _TOKEN.finditer(line):
        num, name, caret, dstar, star, sign, bad = m.groups()
        if bad is not None and bad.strip():
            raise ValueError(f"cannot parse {bad!r} in polynomial {line!r}")
        if num:
            tokens.append(("num", int(num)))
        elif name:
            tokens.append(("var", name))
        elif caret or dstar:
            tokens.append(("pow", None))
        elif star:
            tokens.append(("mul", None))
        elif sign:
            tokens.append(("sign", sign))
    i = 0
    first = True
    while i < len(tokens):
        sign = 1
        while i < len(tokens) and tokens[i][0] == "sign":
            if tokens[i][1] == "-":
                sign = -sign
            i += 1
            first = False
        if i >= len(tokens):
            if not first:
                raise ValueError(f"dangling sign in {line!r}")
            break
        coeff = sign
        exps: dict[int, int] = {}
        saw_factor = False
        while i < len(tokens) and tokens[i][0] != "sign":
            kind, val = tokens[i]
            if kind == "num":
                coeff *= val
                i += 1
            elif kind == "var":
                if val in _ALIASES:
                    idx = _ALIASES[val]
                elif val[0] == "x" and val[1:].isdigit():
                    idx = int(val[1:])
                    if idx < 1:
                        raise ValueError(f"bad variable {val!r}")
                else:
                    raise ValueError(f"unknown variable {val!r}")
                i += 1
                e = 1
                if i < len(tokens) and tokens[i][0] == "pow":
                    i += 1
                    if i >= len(tokens) or tokens[i][0] != "num":
                        raise ValueError(f"missing exponent in {line!r}")
                    e = tokens[i][1]
                    i += 1
                exps[idx] = exps.get(idx, 0) + e
            elif kind == "mul":
                i += 1
            else:
                raise ValueError(f"misplaced token in {line!r}")
            saw_factor = True
        if not saw_factor:
            raise ValueError(f"empty term in {line!r}")
        key = tuple(sorted(exps.items()))
        terms[key] = terms.get(key, 0) + coeff
        first = False
    return {k: v for k, v in terms.items() if v != 0}


def parse_poly_system(text: str, num_vars: int | None = None) -> PolySystem:
    """Parse the one-polynomial-per-line text format."""
    raw = []
    for line in text.splitlines():
        line = line.split("#", 1)[0].strip()
        if line:
            raw.append(_parse_poly(line))
    if not raw:
        raise ValueError("no polynomials in input")
    seen = 0
    for terms in raw:
        for key in terms:
            for idx, _ in key:
                seen = max(seen, idx)
    k = num_vars if num_vars is not None else max(seen, 1)
    if seen > k:
        raise ValueError("variable index exceeds declared num_vars")
    polys = []
    for terms in raw:
        mono = []
        for key, coeff in sorted(terms.items()):
            vec = [0] * k
            for idx, e in key:
                vec[idx - 1] = e
            mono.append((tuple(vec), coeff))
        polys.append(tuple(mono))
    system = PolySystem(k, tuple(polys))
    if system.is_homogeneous():
        system = PolySystem(k, tuple(polys), homogeneous_flag=True)
    return system


def format_poly_system(system: PolySystem) -> str:
    """Inverse of parse_poly_system, canonical form (for reports)."""
    names = (["x", "y", "z"] if system.num_vars <= 3
             else [f"x{i + 1}" for i in range(system.num_vars)])
    lines = []
    for poly in system.polys:
        parts = []
        for exps, coeff in poly:
            factors = []
            for j, e in enumerate(exps):
                if e == 1:
                    factors.append(names[j])
                elif e > 1:
                    factors.append(f"{names[j]}^{e}")
            mag = abs(coeff)
            body = "*".join(([str(mag)] if (mag != 1 or not factors) else []) + factors)
            parts.append(("- " if coeff < 0 else "+ ") + body)
        if not parts:
            lines.append("0")
        else:
            head = parts[0][2:] if parts[0][0] == "+" else "-" + parts[0][2:]
            lines.append(" ".join([head] + parts[1:]))
    return "\n".join(lines)


# ----------------------------------------------------------------------
# encoded-field tables: elements as ids 0..q-1 in enumeration order

class FieldTables:
    """Vectorized arithmetic on element ids for one FieldSpec.

    Addition works digitwise on base-p coefficient vectors (XOR for p=2);
    multiplication goes through discrete log/exp tables built from a
    multiplicative generator.  Prime fields skip the tables and use
    modular arithmetic on the ids directly.
    """

    def __init__(self, spec: FieldSpec):
        self.spec = spec
        self.p = spec.p
        self.n = spec.n
        self.q = spec.q
        self._digits = None
        self._exp = None
        self._log = None
        self._pow: dict[int, np.ndarray] = {}

    @property
    def digits(self) -> np.ndarray:
        if self._digits is None:
            ids = np.arange(self.q, dtype=np.int64)
            cols = [(ids // self.p ** i) % self.p for i in range(self.n)]
            self._digits = np.stack(cols, axis=1).astype(np.int16)
        return self._digits

    def _build_log(self):
        one = self.spec.one()
        g = multiplicative_generator(self.spec)
        exp = np.zeros(self.q - 1, dtype=np.int64)
        x = one
        for k in range(self.q - 1):
            exp[k] = x.index()
            x = x * g
        log = np.zeros(self.q, dtype=np.int64)
        log[exp] = np.arange(self.q - 1)
        self._exp, self._log = exp, log

    def add_ids(self, a, b):
        if self.p == 2:
            return a ^ b
        if self.n == 1:
            return (a + b) % self.p
        dsum = (self.digits[a] + self.digits[b]) % self.p
        pvec = self.p ** np.arange(self.n, dtype=np.int64)
        return dsum.astype(np.int64) @ pvec

    def neg_ids(self, a):
        if self.p == 2:
            return a
        if self.n == 1:
            return (self.p - a) % self.p
        dneg = (self.p - self.digits[a]) % self.p
        pvec = self.p ** np.arange(self.n, dtype=np.int64)
        return dneg.astype(np.int64) @ pvec

    def mul_ids(self, a, b):
        if self.n == 1:
            return a * b % self.p
        if self._exp is None:
            self._build_log()
        out = self._exp[(self._log[a] + self._log[b]) % (self.q - 1)]
        return np.where((a != 0) & (b != 0), out, 0)

    def pow_ids(self, a, e: int):
        """a^e elementwise for integer e >= 1 (0^e = 0)."""
        if self.n == 1:
            result = np.ones_like(a)
            base = a % self.p
            k = e
            while k:
                if k & 1:
                    result = result * base % self.p
                base = base * base % self.p
                k >>= 1
            return result
        if e not in self._pow:
            if self._exp is None:
                self._build_log()
            ids = np.arange(self.q, dtype=np.int64)
            tab = self._exp[(e * self._log) % (self.q - 1)]
            tab = np.where(ids == 0, 0, tab)
            self._pow[e] = tab
        return self._pow[e][a]

    def const_id(self, c: int) -> int:
        return c % self.p  # constants occupy ids 0..p-1


_TABLE_CACHE: dict[tuple, FieldTables] = {}


def _tables_for(spec: FieldSpec) -> FieldTables:
    key = (spec.p, spec.n, spec.modulus)
    tab = _TABLE_CACHE.get(key)
    if tab is None:
        tab = _TABLE_CACHE[key] = FieldTables(spec)
    return tab


# ----------------------------------------------------------------------
# evaluation and counting

def _eval_polys_zero_mask(tables: FieldTables, polys, var_ids) -> np.ndarray:
    """Boolean mask: all polynomials vanish at the given id assignments."""
    size = len(var_ids[0]) if var_ids else 0
    mask = np.ones(size, dtype=bool)
    for poly in polys:
        acc = np.zeros(size, dtype=np.int64)
        for exps, coeff in poly:
            cid = tables.const_id(coeff)
            if cid == 0:
                continue
            term = np.full(size, cid, dtype=np.int64)
            for j, e in enumerate(exps):
                if e:
                    term = tables.mul_ids(term, tables.pow_ids(var_ids[j], e))
            acc = tables.add_ids(acc, term)
        mask &= acc == 0
    return mask


def _chunk_vars(q: int, k: int, start: int, stop: int):
    idx = np.arange(start, stop, dtype=np.int64)
    return [(idx // q ** (k - 1 - j)) % q for j in range(k)]


def _count_chunk(spec: FieldSpec, polys, k: int, start: int, stop: int) -> int:
    tables = _tables_for(spec)
    var_ids = _chunk_vars(spec.q, k, start, stop)
    return int(_eval_polys_zero_mask(tables, polys, var_ids).sum())


def _count_chunk_worker(payload) -> int:
    p, n, modulus, polys, k, start, stop = payload
    return _count_chunk(FieldSpec(p, n, modulus), polys, k, start, stop)


def _separable_split(system: PolySystem):
    """For a single 2-variable equation with no mixed monomials, return
    (x_terms, y_terms) as univariate polynomials; otherwise None."""
    if system.num_vars != 2 or len(system.polys) != 1:
        return None
    xs, ys = [], []
    for (ex, ey), coeff in system.polys[0]:
        if ex and ey:
            return None
        if ey:
            ys.append(((ey,), coeff))
        else:
            xs.append(((ex,), coeff))
    return tuple(xs), tuple(ys)


def count_affine(system: PolySystem, spec: FieldSpec, *,
                 work_limit: int = DEFAULT_WORK_LIMIT,
                 workers: int = 1,
                 method: str = "auto",
                 chunk_size: int = 1 << 18) -> int:
    """Number of points of F_q^k at which every polynomial vanishes.

    method: "product" enumerates the full q^k grid in chunks (optionally
    across worker processes); "separable" enumerates each variable once
    for single-equation systems that split as g(x) + h(y); "auto" picks
    "separable" when it applies.  All methods count exactly; workers
    only affect the product grid.

    The work limit caps the number of tuples the chosen method will
    enumerate (q^k for the product grid).
    """
    q, k = spec.q, system.num_vars
    split = _separable_split(system) if method in ("auto", "separable") else None
    if method == "separable" and split is None:
        raise ValueError("system is not separable")

    if split is not None:
        if 2 * q > work_limit:
            raise ValueError("search space too large")
        tables = _tables_for(spec)
        ids = np.arange(q, dtype=np.int64)
        gx = tables.neg_ids(_eval_accumulate(tables, split[0], ids))
        gy = _eval_accumulate(tables, split[1], ids)
        hist = np.bincount(gy, minlength=q)
        return int(hist[gx].sum())

    total = q ** k
    if total > work_limit:
        raise ValueError("search space too large")
    chunks = [(s, min(s + chunk_size, total)) for s in range(0, total, chunk_size)]
    if workers <= 1 or len(chunks) == 1:
        return sum(_count_chunk(spec, system.polys, k, s, t) for s, t in chunks)
    payloads = [(spec.p, spec.n, spec.modulus, system.polys, k, s, t) for s, t in chunks]
    with ProcessPoolExecutor(max_workers=workers) as pool:
        return sum(pool.map(_count_chunk_worker, payloads, chunksize=1))


def _eval_accumulate(tables: FieldTables, monomials, ids) -> np.ndarray:
    """Evaluate a univariate monomial list at every id."""
    acc = np.zeros(len(ids), dtype=np.int64)
    for (e,), coeff in monomials:
        cid = tables.const_id(coeff)
        if cid == 0:
            continue
        term = np.full(len(ids), cid, dtype=np.int64)
        if e:
            term = tables.mul_ids(term, tables.pow_ids(ids, e))
        acc = tables.add_ids(acc, term)
    return acc


def _projective_rep_count(k: int, q: int) -> int:
    return sum(q ** (k - 1 - i) for i in range(k))


def count_projective_variety(system: PolySystem, spec: FieldSpec, *,
                             work_limit: int = DEFAULT_WORK_LIMIT) -> int:
    """Points of projective (k-1)-space at which all polynomials vanish.

    Representatives are normalized so the first nonzero coordinate is 1,
    scanning left to right; each projective point is enumerated once.
    """
    if not system.homogeneous_flag or not system.is_homogeneous():
        raise ValueError("not homogeneous")
    k, q = system.num_vars, spec.q
    if _projective_rep_count(k, q) > work_limit:
        raise ValueError("search space too large")
    tables = _tables_for(spec)
    one = 1 % q  # id of the unit element
    total = 0
    for lead in range(k):
        free = k - 1 - lead
        block = q ** free
        idx = np.arange(block, dtype=np.int64)
        var_ids = []
        for j in range(k):
            if j < lead:
                var_ids.append(np.zeros(block, dtype=np.int64))
            elif j == lead:
                var_ids.append(np.full(block, one, dtype=np.int64))
            else:
                var_ids.append((idx // q ** (k - 1 - j)) % q)
        total += int(_eval_polys_zero_mask(tables, system.polys, var_ids).sum())
    return total


def count_projective_space(dim: int, spec: FieldSpec, *,
                           work_limit: int = DEFAULT_WORK_LIMIT) -> int:
    """|P^dim(F_q)| by enumerating representatives, checked against
    1 + q + ... + q^dim."""
    if dim < 0:
        raise ValueError("dimension must be >= 0")
    empty = PolySystem(dim + 1, ((),), homogeneous_flag=True)
    enumerated = count_projective_variety(empty, spec, work_limit=work_limit)
    closed = (spec.q ** (dim + 1) - 1) // (spec.q - 1)
    if enumerated != closed:
        raise AssertionError("projective enumeration disagrees with closed form")
    return enumerated


def affine_count_sequence(system: PolySystem, p: int, n_max: int, *,
                          extra_point: bool = False,
                          work_limit: int = DEFAULT_WORK_LIMIT,
                          workers: int = 1,
                          method: str = "auto") -> CountSequence:
    """Counts over F_{p^1}..F_{p^n_max} by exhaustive enumeration.

    extra_point=True adds one point at infinity per field, the projective
    convention for curves given in affine form.
    """
    counts = []
    for n in range(1, n_max + 1):
        c = count_affine(system, make_field(p, n), work_limit=work_limit,
                         workers=workers, method=method)
        counts.append(c + 1 if extra_point else c)
    return CountSequence(p, tuple(counts), projective_flag=extra_point)
