"""Independent reference computations used to cross-check the library.

Nothing here imports the routines it is meant to check: cyclotomic values
are reduced modulo the cyclotomic polynomial in the power basis, group data
comes from Cayley tables by brute force.
"""

from __future__ import annotations

import itertools
import math
from fractions import Fraction
from functools import lru_cache

import numpy as np


# -- polynomials over Z, coefficient lists lowest degree first -----------------


def poly_divmod(a: list, b: list) -> tuple[list, list]:
    """Division by a monic integer polynomial."""
    a = list(a)
    q = [0] * max(len(a) - len(b) + 1, 1)
    db = len(b) - 1
    assert b[-1] == 1
    for i in range(len(a) - 1, db - 1, -1):
        c = a[i]
        if c:
            q[i - db] = c
            for j, bj in enumerate(b):
                a[i - db + j] -= c * bj
    rem = a[:db] if db else []
    return q, rem


@lru_cache(maxsize=None)
def cyclotomic_polynomial(n: int) -> tuple:
    p = [-1] + [0] * (n - 1) + [1]
    for d in range(1, n):
        if n % d == 0:
            p, r = poly_divmod(p, list(cyclotomic_polynomial(d)))
            assert not any(r)
    while len(p) > 1 and p[-1] == 0:
        p.pop()
    return tuple(p)


@lru_cache(maxsize=None)
def power_basis_table(n: int) -> np.ndarray:
    """Row ``e`` holds ``x^e mod Phi_n`` in the power basis ``1, x, ..., x^(phi-1)``."""
    phi = cyclotomic_polynomial(n)
    deg = len(phi) - 1
    rows = []
    for e in range(n):
        mono = [0] * e + [1]
        _, r = poly_divmod(mono, list(phi)) if e >= deg else ([], mono)
        rows.append(list(r) + [0] * (deg - len(r)))
    return np.array(rows, dtype=np.int64)


def reduce_terms(n: int, terms) -> tuple:
    """``sum q * zeta_n^e`` for ``(e, q)`` in ``terms`` as a power-basis vector."""
    T = power_basis_table(n)
    out = [Fraction(0)] * T.shape[1]
    for e, q in terms:
        for i, v in enumerate(T[e % n]):
            if v:
                out[i] += Fraction(q) * int(v)
    return tuple(out)


def cyclotomic_as_terms(c, n: int) -> list:
    """Terms of a library value lifted to conductor ``n`` (must be a multiple)."""
    k = c.conductor
    assert n % k == 0
    return [(e * (n // k), q) for e, q in c.coeffs.items()]


def sum_is_zero(n: int, exponents) -> bool:
    T = power_basis_table(n)
    return not T[list(exponents)].sum(axis=0).any()


def zero_multisets(m: int, k: int) -> tuple[np.ndarray, np.ndarray]:
    """All size-``k`` multisets of exponents mod ``m`` and a mask of those
    summing to zero."""
    combos = np.array(list(itertools.combinations_with_replacement(range(m), k)), dtype=np.int64).reshape(-1, k)
    T = power_basis_table(m)
    zero = np.empty(len(combos), dtype=bool)
    step = 1 << 16
    for s in range(0, len(combos), step):
        zero[s : s + step] = ~T[combos[s : s + step]].sum(axis=1).any(axis=1)
    return combos, zero


# -- brute force on Cayley tables ------------------------------------------------


def cayley(G) -> np.ndarray:
    n = G.order
    i = np.arange(n)
    return G.mul(i[:, None], i[None, :])


def brute_inverse(t: np.ndarray) -> np.ndarray:
    return np.argmax(t == 0, axis=1)


def brute_classes(t: np.ndarray) -> list[frozenset]:
    n = len(t)
    inv = brute_inverse(t)
    seen, out = set(), []
    for g in range(n):
        if g in seen:
            continue
        cls = frozenset(int(t[t[inv[x], g], x]) for x in range(n))
        seen |= cls
        out.append(cls)
    return out


def brute_center(t: np.ndarray) -> set:
    return {g for g in range(len(t)) if (t[g] == t[:, g]).all()}


def brute_orders(t: np.ndarray) -> list[int]:
    out = []
    for g in range(len(t)):
        x, k = g, 1
        while x != 0:
            x = int(t[x, g])
            k += 1
        out.append(k)
    return out


def brute_is_subgroup(t: np.ndarray, S) -> bool:
    S = set(S)
    return 0 in S and all(int(t[a, b]) in S for a in S for b in S)


def brute_normal_subgroups(t: np.ndarray) -> list[frozenset]:
    """Unions of classes that are closed under products (small groups only)."""
    classes = [c for c in brute_classes(t) if 0 not in c]
    out = []
    for r in range(len(classes) + 1):
        for pick in itertools.combinations(classes, r):
            S = {0}.union(*pick)
            if len(t) % len(S) == 0 and brute_is_subgroup(t, S):
                out.append(frozenset(S))
    return out


def brute_derived_order(t: np.ndarray) -> int:
    n = len(t)
    inv = brute_inverse(t)
    comms = {int(t[t[inv[a], inv[b]], t[a, b]]) for a in range(n) for b in range(n)}
    S = set(comms) | {0}
    while True:
        new = {int(t[a, b]) for a in S for b in S} - S
        if not new:
            return len(S)
        S |= new


def class_structure_constants(t: np.ndarray, classes: list[frozenset]) -> np.ndarray:
    """``a[i, j, k] = #{(x, y) in C_i x C_j : xy = g_k}`` for a fixed ``g_k`` in ``C_k``."""
    r = len(classes)
    reps = [min(c) for c in classes]
    index = {}
    for k, c in enumerate(classes):
        for g in c:
            index[g] = k
    a = np.zeros((r, r, r), dtype=np.int64)
    for i, ci in enumerate(classes):
        for j, cj in enumerate(classes):
            for x in ci:
                for y in cj:
                    z = int(t[x, y])
                    k = index[z]
                    if z == reps[k]:
                        a[i, j, k] += 1
    return a


def is_prime(n: int) -> bool:
    return n > 1 and all(n % d for d in range(2, math.isqrt(n) + 1))
