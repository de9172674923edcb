"""Exact arithmetic in cyclotomic fields and decision procedures for
vanishing sums of roots of unity.

Values of ``Q(zeta_n)`` are stored in the Zumbroich basis: an exponent ``i``
is a basis element iff, for every prime power ``p^e || n``, the ``p``-adic
component of ``i`` has a nonzero leading digit (odd ``p``) or a zero leading
bit (``p = 2``).  Every value is kept at its minimal conductor, so equality
is equality of the coefficient maps.
"""

from __future__ import annotations

import cmath
import math
import re
from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Sequence

import numpy as np

from .errors import (
    ConditionStarViolated,
    NotCoprime,
    NotZeroSum,
    ParseError,
    UnsupportedLength,
)

__all__ = [
    "Cyclotomic",
    "RootOfUnity",
    "SumDecomposition",
    "SigmaVerdict",
    "add",
    "mul",
    "conj",
    "galois",
    "root",
    "root_p_part",
    "vanishing_sum_feasible",
    "classify_zero_sum",
    "sigma_six_test",
    "parse_cyclotomic",
    "parse_root",
    "parse_roots",
    "expansion_matrix",
    "zumbroich_basis",
]


def factorize(n: int) -> list[tuple[int, int]]:
    out = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            e = 0
            while n % d == 0:
                n //= d
                e += 1
            out.append((d, e))
        d += 1
    if n > 1:
        out.append((n, 1))
    return out


def _norm(c):
    if isinstance(c, bool):
        raise TypeError("booleans are not coefficients")
    if isinstance(c, int):
        return c
    if isinstance(c, Fraction):
        return c.numerator if c.denominator == 1 else c
    raise TypeError(f"exact rational coefficient required, got {type(c).__name__}")


class _Field:
    """Zumbroich basis data for one conductor."""

    def __init__(self, n: int):
        self.n = n
        self.primes = factorize(n)
        self._pinfo = []
        for p, e in self.primes:
            q = p**e
            u = pow(n // q, -1, q) if q > 1 else 0
            self._pinfo.append((p, q, u, p ** (e - 1), n // p))
        self.basis = tuple(i for i in range(n) if self._is_basis(i))
        self.position = {j: k for k, j in enumerate(self.basis)}
        self.expansions = tuple(self._expand(i) for i in range(n))
        mat = np.zeros((n, len(self.basis)), dtype=np.int64)
        for i, terms in enumerate(self.expansions):
            for j, c in terms:
                mat[i, self.position[j]] = c
        self.matrix = mat

    def _is_basis(self, i: int) -> bool:
        for p, q, u, top, _ in self._pinfo:
            t = (i * u) % q // top
            if (p == 2 and t == 1) or (p != 2 and t == 0):
                return False
        return True

    def _expand(self, i: int) -> tuple[tuple[int, int], ...]:
        n = self.n
        terms = {i % n: 1}
        for p, q, u, top, shift in self._pinfo:
            new: dict[int, int] = {}
            for j, c in terms.items():
                t = (j * u) % q // top
                if p == 2 and t == 1:
                    k = (j + shift) % n
                    new[k] = new.get(k, 0) - c
                elif p != 2 and t == 0:
                    for s in range(1, p):
                        k = (j + s * shift) % n
                        new[k] = new.get(k, 0) - c
                else:
                    new[j] = new.get(j, 0) + c
            terms = {j: c for j, c in new.items() if c}
        return tuple(sorted(terms.items()))


@lru_cache(maxsize=256)
def _field(n: int) -> _Field:
    return _Field(n)


def zumbroich_basis(n: int) -> tuple[int, ...]:
    """Exponents ``i`` such that the ``zeta_n^i`` form the canonical basis."""
    return _field(n).basis


def expansion_matrix(n: int) -> np.ndarray:
    """Integer matrix whose row ``i`` holds ``zeta_n^i`` in the canonical basis.

    A count vector ``c`` (``c[i]`` copies of ``zeta_n^i``) sums to zero iff
    ``c @ expansion_matrix(n)`` is the zero vector.
    """
    return _field(n).matrix


def _canonical(n: int, d: dict) -> dict:
    exps = _field(n).expansions
    out: dict[int, object] = {}
    for i, c in d.items():
        if not c:
            continue
        for j, s in exps[i % n]:
            out[j] = out.get(j, 0) + s * c
    return {j: _norm(c) for j, c in out.items() if c}


def _reduce(n: int, d: dict) -> tuple[int, dict]:
    """Shrink ``n`` to the minimal conductor of the canonical value ``d``."""
    while True:
        if not d:
            return 1, {}
        if n == 1:
            return 1, d
        changed = False
        for p, e in factorize(n):
            if p == 2 and e == 1:
                # Q(zeta_2m) = Q(zeta_m) for odd m; basis exponents are even
                n, d = n // 2, _canonical(n // 2, {i // 2: c for i, c in d.items()})
                changed = True
                break
            if e >= 2 or p == 2:
                if all(i % p == 0 for i in d):
                    n, d = n // p, _canonical(n // p, {i // p: c for i, c in d.items()})
                    changed = True
                    break
                continue
            m = n // p
            fibers: dict[int, list] = {}
            for i, c in d.items():
                fibers.setdefault(i % m, []).append(c)
            if all(len(cs) == p - 1 and all(c == cs[0] for c in cs) for cs in fibers.values()):
                new = {}
                for r, cs in fibers.items():
                    # member of the fiber divisible by p
                    i0 = (r * p * pow(p, -1, m)) % n if m > 1 else 0
                    new[i0 // p] = -cs[0]
                n, d = m, _canonical(m, new)
                changed = True
                break
        if not changed:
            return n, d


class Cyclotomic:
    """An exact element of a cyclotomic field, immutable and hashable."""

    __slots__ = ("_n", "_c", "_hash")

    def __init__(self, conductor: int = 1, coeffs: dict | None = None):
        n = int(conductor)
        if n < 1:
            raise ValueError("conductor must be positive")
        raw = {}
        for i, c in (coeffs or {}).items():
            i = int(i) % n
            raw[i] = raw.get(i, 0) + _norm(c)
        self._n, self._c = _reduce(n, _canonical(n, raw))
        self._hash = None

    @classmethod
    def _raw(cls, n: int, d: dict) -> "Cyclotomic":
        obj = cls.__new__(cls)
        obj._n, obj._c = _reduce(n, d)
        obj._hash = None
        return obj

    @classmethod
    def zeta(cls, n: int, k: int = 1) -> "Cyclotomic":
        return cls(n, {k % n: 1})

    @classmethod
    def rational(cls, q) -> "Cyclotomic":
        return cls(1, {0: _norm(q)})

    @classmethod
    def from_counts(cls, n: int, counts: Sequence[int]) -> "Cyclotomic":
        """Sum of ``counts[i]`` copies of ``zeta_n^i``."""
        f = _field(n)
        vec = np.asarray(counts, dtype=np.int64) @ f.matrix
        d = {f.basis[k]: int(v) for k, v in enumerate(vec) if v}
        return cls._raw(n, d)

    @property
    def conductor(self) -> int:
        return self._n

    @property
    def coeffs(self) -> dict:
        return dict(self._c)

    def is_zero(self) -> bool:
        return not self._c

    def is_rational(self) -> bool:
        return self._n == 1

    def rational_value(self) -> Fraction:
        if self._n != 1:
            raise ValueError(f"{self} is not rational")
        return Fraction(self._c.get(0, 0))

    def _lift(self, m: int) -> dict:
        if m == self._n:
            return self._c
        s = m // self._n
        return _canonical(m, {i * s: c for i, c in self._c.items()})

    @staticmethod
    def _coerce(x) -> "Cyclotomic":
        if isinstance(x, Cyclotomic):
            return x
        if isinstance(x, RootOfUnity):
            return x.to_cyclotomic()
        if isinstance(x, (int, Fraction)) and not isinstance(x, bool):
            return Cyclotomic.rational(x)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        m = math.lcm(self._n, other._n)
        a, b = self._lift(m), other._lift(m)
        d = dict(a)
        for i, c in b.items():
            v = d.get(i, 0) + c
            if v:
                d[i] = _norm(v)
            else:
                d.pop(i, None)
        return Cyclotomic._raw(m, d)

    __radd__ = __add__

    def __neg__(self):
        return Cyclotomic._raw(self._n, {i: -c for i, c in self._c.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return other + (-self)

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        if other._n == 1:
            q = other._c.get(0, 0)
            return Cyclotomic._raw(self._n, {i: _norm(c * q) for i, c in self._c.items() if c * q})
        if self._n == 1:
            return other * self
        m = math.lcm(self._n, other._n)
        a, b = self._lift(m), other._lift(m)
        prod: dict[int, object] = {}
        for i, c in a.items():
            for j, e in b.items():
                k = (i + j) % m
                prod[k] = prod.get(k, 0) + c * e
        return Cyclotomic._raw(m, _canonical(m, prod))

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, Cyclotomic):
            if other._n != 1:
                raise TypeError("division only by rationals")
            other = other.rational_value()
        if isinstance(other, bool) or not isinstance(other, (int, Fraction)):
            return NotImplemented
        q = Fraction(other)
        if q == 0:
            raise ZeroDivisionError
        return Cyclotomic._raw(self._n, {i: _norm(Fraction(c) / q) for i, c in self._c.items()})

    def __pow__(self, k: int):
        if k < 0:
            raise ValueError("negative powers are not supported")
        out = Cyclotomic.rational(1)
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def __eq__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return False
        return self._n == other._n and self._c == other._c

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self._n, frozenset(self._c.items())))
        return self._hash

    def __bool__(self):
        return bool(self._c)

    def galois(self, k: int) -> "Cyclotomic":
        if math.gcd(k, self._n) != 1:
            raise NotCoprime(f"{k} is not coprime to the conductor {self._n}")
        n = self._n
        return Cyclotomic._raw(n, _canonical(n, {(i * k) % n: c for i, c in self._c.items()}))

    def conj(self) -> "Cyclotomic":
        return self.galois(-1)

    def sort_key(self):
        return (self._n, tuple(sorted(self._c.items())))

    def to_complex(self) -> complex:
        """Floating approximation, for display only."""
        n = self._n
        return sum(float(c) * cmath.exp(2j * cmath.pi * i / n) for i, c in self._c.items()) + 0j

    def __str__(self):
        if not self._c:
            return "0"
        parts = []
        for i, c in sorted(self._c.items()):
            if i == 0:
                atom, coef = "", c
            else:
                atom = f"ζ({self._n})" if i == 1 else f"ζ({self._n})^{i}"
                coef = c
            if atom == "":
                s = str(coef)
            elif coef == 1:
                s = atom
            elif coef == -1:
                s = "-" + atom
            else:
                s = f"{coef}*{atom}"
            if parts and not s.startswith("-"):
                s = "+" + s
            parts.append(s)
        return "".join(parts)

    def __repr__(self):
        return f"Cyclotomic({self})"


@dataclass(frozen=True, order=True)
class RootOfUnity:
    """``zeta_order^exponent`` kept with ``gcd(order, exponent) = 1``."""

    order: int
    exponent: int

    def __post_init__(self):
        m, k = int(self.order), int(self.exponent)
        if m < 1:
            raise ValueError("order must be positive")
        k %= m
        g = math.gcd(k, m)
        if k == 0:
            m, k = 1, 0
        else:
            m, k = m // g, k // g
        object.__setattr__(self, "order", m)
        object.__setattr__(self, "exponent", k)

    def as_fraction(self) -> Fraction:
        return Fraction(self.exponent, self.order)

    @classmethod
    def from_fraction(cls, f: Fraction) -> "RootOfUnity":
        return cls(f.denominator, f.numerator)

    def __mul__(self, other: "RootOfUnity") -> "RootOfUnity":
        if not isinstance(other, RootOfUnity):
            return NotImplemented
        m = math.lcm(self.order, other.order)
        return RootOfUnity(m, self.exponent * (m // self.order) + other.exponent * (m // other.order))

    def __pow__(self, k: int) -> "RootOfUnity":
        return RootOfUnity(self.order, self.exponent * k)

    def __neg__(self) -> "RootOfUnity":
        return self * RootOfUnity(2, 1)

    def inverse(self) -> "RootOfUnity":
        return RootOfUnity(self.order, -self.exponent)

    conj = inverse

    def to_cyclotomic(self) -> Cyclotomic:
        return Cyclotomic.zeta(self.order, self.exponent)

    def __str__(self):
        if self.order == 1:
            return "1"
        if self.order == 2:
            return "-1"
        if self.order % 4 == 2:
            return "-" + str(-self)
        if self.exponent == 1:
            return f"ζ({self.order})"
        return f"ζ({self.order})^{self.exponent}"


def root(n: int, k: int = 1) -> RootOfUnity:
    return RootOfUnity(n, k)


def add(a, b) -> Cyclotomic:
    return Cyclotomic._coerce(a) + Cyclotomic._coerce(b)


def mul(a, b) -> Cyclotomic:
    return Cyclotomic._coerce(a) * Cyclotomic._coerce(b)


def conj(a) -> Cyclotomic:
    return Cyclotomic._coerce(a).conj()


def galois(a, k: int) -> Cyclotomic:
    return Cyclotomic._coerce(a).galois(k)


def root_p_part(e: RootOfUnity, p: int) -> RootOfUnity:
    """The ``p``-power-order factor of ``e``; it is a power of ``e``."""
    o = e.order
    pa = 1
    while o % (pa * p) == 0:
        pa *= p
    m = o // pa
    c = m * pow(m, -1, pa) if pa > 1 else 0
    return e**c


def vanishing_sum_feasible(n: int, m: int) -> bool:
    """Necessary condition for ``n`` elements of ``U_m`` to sum to zero:
    ``n`` is a nonnegative integer combination of the primes dividing ``m``."""
    if n < 0 or m < 1:
        return False
    primes = [p for p, _ in factorize(m)]
    reach = [False] * (n + 1)
    reach[0] = True
    for t in range(1, n + 1):
        reach[t] = any(t >= p and reach[t - p] for p in primes)
    return reach[n]


# -- classification of short vanishing sums ---------------------------------

_PATTERNS = {
    "U2": (Fraction(0), Fraction(1, 2)),
    "U3": (Fraction(0), Fraction(1, 3), Fraction(2, 3)),
    "R5:3": (
        Fraction(1, 5),
        Fraction(2, 5),
        Fraction(3, 5),
        Fraction(4, 5),
        Fraction(5, 6),
        Fraction(7, 6),
    ),
}


@dataclass(frozen=True)
class SumDecomposition:
    """A vanishing sum split into rotated standard blocks.

    ``blocks`` holds ``(delta, pattern)`` pairs; ``pattern`` is ``"U2"``
    (``{1, -1}``), ``"U3"`` (the cube roots of unity) or ``"R5:3"``
    (``zeta_5, ..., zeta_5^4, zeta_2 zeta_3, zeta_2 zeta_3^2``).
    """

    k: int
    case: str
    blocks: tuple[tuple[RootOfUnity, str], ...]

    @property
    def deltas(self) -> tuple[RootOfUnity, ...]:
        return tuple(d for d, _ in self.blocks)

    def roots(self) -> tuple[RootOfUnity, ...]:
        out = []
        for d, pat in self.blocks:
            out.extend(d * RootOfUnity.from_fraction(f) for f in _PATTERNS[pat])
        return tuple(sorted(out))

    def describe(self) -> str:
        if self.case == "a" and self.k == 4:
            pairs = " ".join(f"({d}, {-d})" for d in self.deltas)
            return f"case (a) k=4, pairs {pairs}"
        if self.case == "a":
            return f"case (a) k={self.k}, δ={self.deltas[0]}"
        if len(self.deltas) == 1:
            return f"case ({self.case}), δ={self.deltas[0]}"
        return f"case ({self.case}), δ=({', '.join(str(d) for d in self.deltas)})"


def _as_root(r) -> RootOfUnity:
    if isinstance(r, RootOfUnity):
        return r
    return RootOfUnity(*r)


def _sum_is_zero(n: int, exps: Sequence[int]) -> bool:
    return not _field(n).matrix[list(exps)].sum(axis=0).any()


def _match_blocks(counter: Counter, pattern: tuple[Fraction, ...]) -> list[Fraction] | None:
    """Split a multiset of fractions (mod 1) into translates of ``pattern``.

    Returns the chosen translates or ``None``.  The block containing the
    smallest remaining element is forced when the pattern contains 0 and
    translates are read off that element; for patterns without 0 every
    anchoring is tried.
    """
    items = +counter
    if not items:
        return []
    first = min(items)
    for off in pattern:
        delta = (first - off) % 1
        need = Counter((delta + o) % 1 for o in pattern)
        if all(items[x] >= c for x, c in need.items()):
            rest = _match_blocks(items - need, pattern)
            if rest is not None:
                return [delta] + rest
    return None


def _min_delta(delta: Fraction, pattern: tuple[Fraction, ...]) -> RootOfUnity:
    # a block delta*P equals delta'*P for every delta' = delta*(p_i - p_j) that
    # keeps the multiset; pick the smallest (order, exponent) representative
    block = Counter((delta + o) % 1 for o in pattern)
    best = None
    for x in block:
        for o in pattern:
            cand = (x - o) % 1
            if Counter((cand + q) % 1 for q in pattern) == block:
                r = RootOfUnity.from_fraction(cand)
                if best is None or r < best:
                    best = r
    return best


def classify_zero_sum(roots: Iterable) -> SumDecomposition:
    """Decompose a vanishing sum of ``k in {2, 3, 4, 6}`` roots of unity.

    For ``k = 6`` the cases are tried in the order three antipodal pairs
    (b1), two rotated cube-root triples (b2), the ``R5:3`` block (b3).
    """
    rs = [_as_root(r) for r in roots]
    k = len(rs)
    if k not in (2, 3, 4, 6):
        raise UnsupportedLength(f"vanishing sums of length {k} are not classified")
    n = math.lcm(*(r.order for r in rs))
    if not _sum_is_zero(n, [r.exponent * (n // r.order) for r in rs]):
        raise NotZeroSum("the roots do not sum to zero")
    counter = Counter(r.as_fraction() for r in rs)
    if k in (2, 4):
        order = [("a", "U2")]
    elif k == 3:
        order = [("a", "U3")]
    else:
        order = [("b1", "U2"), ("b2", "U3"), ("b3", "R5:3")]
    for case, pat in order:
        found = _match_blocks(counter, _PATTERNS[pat])
        if found is not None:
            deltas = sorted(_min_delta(d, _PATTERNS[pat]) for d in found)
            return SumDecomposition(k, case, tuple((d, pat) for d in deltas))
    raise AssertionError(f"unclassified vanishing sum {[str(r) for r in rs]}")


@dataclass(frozen=True)
class SigmaVerdict:
    """Outcome of the constrained six-term zero test."""

    sigma: Cyclotomic
    is_zero: bool
    deltas: tuple[RootOfUnity, ...]
    part1: bool
    part2: bool
    part3: bool
    witness: tuple[RootOfUnity, ...] | None
    consistent: bool


_I = RootOfUnity(4, 1)
_MINUS_I = RootOfUnity(4, 3)
_MINUS_ONE = RootOfUnity(2, 1)
_ONE = RootOfUnity(1, 0)


def _is_two_power(m: int) -> bool:
    return m & (m - 1) == 0


def sigma_six_test(eps: Sequence, eta: Sequence) -> SigmaVerdict:
    """Zero test for ``eps1+eps2+eps3+eta1+eta2+eta3`` over 2-power roots of
    unity with ``eps1*eps2*eps3 = eta1*eta2*eta3 = 1``.

    ``part1``/``part2``/``part3`` flag which conclusions apply; ``consistent``
    records whether the computed sum agrees with all of them.
    """
    eps = tuple(_as_root(e) for e in eps)
    eta = tuple(_as_root(e) for e in eta)
    if len(eps) != 3 or len(eta) != 3:
        raise ValueError("need three eps and three eta")
    if not all(_is_two_power(r.order) for r in eps + eta):
        raise ValueError("all roots must have 2-power order")
    if eps[0] * eps[1] * eps[2] != _ONE or eta[0] * eta[1] * eta[2] != _ONE:
        raise ConditionStarViolated("eps1*eps2*eps3 and eta1*eta2*eta3 must both be 1")
    n = math.lcm(*(r.order for r in eps + eta))
    sigma = Cyclotomic._raw(n, _canonical(n, Counter(r.exponent * (n // r.order) for r in eps + eta)))
    is_zero = sigma.is_zero()
    deltas = tuple(sorted(e.conj() * h for e, h in zip(eps, eta)))

    part1 = all(d.order <= 2 for d in deltas)
    part2 = n <= 4
    part3 = all(d.order <= 4 for d in deltas) and any(e.order >= 8 for e in eps)
    consistent = True
    witness = None
    if part1 and is_zero:
        consistent = False
    if part2:
        e_sorted = sorted(eps, key=lambda r: -r.order)
        h_sorted = sorted(eta, key=lambda r: -r.order)
        if h_sorted[0].order > e_sorted[0].order:
            e_sorted, h_sorted = h_sorted, e_sorted
        predicted = {e_sorted[0], e_sorted[1]} == {_I, _MINUS_I} and h_sorted[0] == h_sorted[1] == _MINUS_ONE
        if predicted != is_zero:
            consistent = False
        if is_zero:
            witness = (e_sorted[0], e_sorted[1], h_sorted[0], h_sorted[1])
    if part3 and is_zero:
        if deltas not in (tuple(sorted((_I, _I, _MINUS_ONE))), tuple(sorted((_MINUS_I, _MINUS_I, _MINUS_ONE)))):
            consistent = False
    return SigmaVerdict(sigma, is_zero, deltas, part1, part2, part3, witness, consistent)


# -- text forms ---------------------------------------------------------------

_ATOM = r"(?:ζ\((\d+)\)|z(\d+)|E\((\d+)\))(?:\^(-?\d+))?"
_TERM = re.compile(r"\s*([+-])?\s*(?:(\d+(?:/\d+)?)\s*\*?\s*)?(" + _ATOM + r")?\s*")


def parse_cyclotomic(text: str) -> Cyclotomic:
    """Parse the rendering produced by ``str(Cyclotomic)``.

    Accepts ``ζ(n)^k``, ``z<n>^k`` and ``E(n)^k`` atoms with optional
    rational coefficients, e.g. ``"1 + ζ(4)"`` or ``"-3/2*z5^2"``.
    """
    s = text.strip()
    if not s:
        raise ParseError("empty cyclotomic expression")
    total = Cyclotomic.rational(0)
    pos = 0
    first = True
    while pos < len(s):
        m = _TERM.match(s, pos)
        if m is None or m.end() == pos:
            raise ParseError(f"cannot parse {s[pos:]!r}")
        sign, coef, atom, n1, n2, n3, k = m.groups()
        if sign is None and not first:
            raise ParseError(f"missing operator before {s[pos:]!r}")
        if coef is None and atom is None:
            raise ParseError(f"dangling sign in {s!r}")
        c = Fraction(coef) if coef is not None else Fraction(1)
        if sign == "-":
            c = -c
        if atom is not None:
            n = int(n1 or n2 or n3)
            if n < 1:
                raise ParseError("root order must be positive")
            term = Cyclotomic.zeta(n, int(k) if k is not None else 1) * c
        else:
            term = Cyclotomic.rational(c)
        total = total + term
        pos = m.end()
        first = False
    return total


_ROOT_FACTOR = re.compile(r"^(?:ζ\((\d+)\)|z(\d+)|E\((\d+)\))(?:\^(-?\d+))?$")


def parse_root(token: str) -> RootOfUnity:
    """Parse one root of unity: ``1``, ``-1``, ``z5^2``, ``-ζ(4)``, ``z2*z3^2``."""
    t = token.strip()
    neg = t.startswith("-")
    if neg:
        t = t[1:]
    if not t:
        raise ParseError(f"empty root token {token!r}")
    out = _ONE
    for factor in t.split("*"):
        factor = factor.strip()
        if factor == "1":
            continue
        m = _ROOT_FACTOR.match(factor)
        if m is None:
            raise ParseError(f"not a root of unity: {token!r}")
        n = int(m.group(1) or m.group(2) or m.group(3))
        if n < 1:
            raise ParseError(f"root order must be positive in {token!r}")
        k = int(m.group(4)) if m.group(4) is not None else 1
        out = out * RootOfUnity(n, k)
    return -out if neg else out


def parse_roots(text: str | Sequence[str]) -> list[RootOfUnity]:
    tokens = text.split() if isinstance(text, str) else list(text)
    return [parse_root(t) for t in tokens]
