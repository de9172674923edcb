"""Named groups and families: cyclic, abelian, dihedral, quaternion,
symmetric/alternating, extraspecial, Frobenius metacyclic, and the
abelian-by-C6 (or S3) constructions with ``A = C8 x C8``."""

from __future__ import annotations

import itertools
from typing import Sequence

import numpy as np

from ..errors import NoFixedPointFreeAction
from .core import (
    ConcreteGroup,
    FiniteGroup,
    TableGroup,
    from_permutations,
    semidirect,
)


def cyclic(n: int, name: str = "") -> TableGroup:
    i = np.arange(n)
    return TableGroup((i[:, None] + i[None, :]) % n, name=name or f"C{n}", provenance={"builtin": ["cyclic", n]}, check=False)


def abelian(invariants: Sequence[int], name: str = "") -> FiniteGroup:
    inv = [int(d) for d in invariants if int(d) != 1]
    label = name or ("x".join(f"C{d}" for d in inv) if inv else "C1")
    if len(inv) > 1:
        G = semidirect(inv, cyclic(1), {}, name=label)
    else:
        G = cyclic(inv[0] if inv else 1, name=label)
    G.provenance = {"builtin": ["abelian", *inv]}
    return G


def dihedral(n: int, name: str = "") -> FiniteGroup:
    """Dihedral group of order ``2n``."""
    G = semidirect([n], cyclic(2), {1: [[-1]]}, name=name or f"D{2 * n}")
    G.provenance = {"builtin": ["dihedral", n]}
    return G


def dicyclic(n: int, name: str = "") -> TableGroup:
    """``<a, x | a^(2n) = 1, x^2 = a^n, x a x^-1 = a^-1>`` of order ``4n``.

    For ``n`` a power of two this is the generalized quaternion group.
    """
    m = 2 * n
    elems = [(k, e) for e in (0, 1) for k in range(m)]
    idx = {el: i for i, el in enumerate(elems)}

    def prod(u, v):
        k1, e1 = u
        k2, e2 = v
        if e1 == 0:
            return ((k1 + k2) % m, e2)
        # a^k1 x a^k2 x^e2 = a^(k1-k2) x x^e2
        if e2 == 0:
            return ((k1 - k2) % m, 1)
        return ((k1 - k2 + n) % m, 0)

    t = [[idx[prod(u, v)] for v in elems] for u in elems]
    return TableGroup(t, name=name or f"Q{4 * n}", provenance={"builtin": ["dicyclic", n]}, check=False)


def quaternion(order: int = 8, name: str = "") -> TableGroup:
    if order < 8 or order & (order - 1):
        raise ValueError("generalized quaternion groups have order 2^k, k >= 3")
    G = dicyclic(order // 4, name=name or f"Q{order}")
    G.provenance = {"builtin": ["quaternion", order]}
    return G


def symmetric(n: int, name: str = "") -> ConcreteGroup:
    if n < 2:
        G = from_permutations([[0]], name=name or "S1")
    else:
        cyc = list(range(1, n)) + [0]
        tr = [1, 0] + list(range(2, n))
        G = from_permutations([cyc, tr], name=name or f"S{n}")
    G.provenance = {"builtin": ["symmetric", n]}
    return G


def alternating(n: int, name: str = "") -> ConcreteGroup:
    gens = [list(range(max(n, 1)))]
    for k in range(2, n):
        # 3-cycle (0 1 k)
        p = list(range(n))
        p[0], p[1], p[k] = 1, k, 0
        gens.append(p)
    G = from_permutations(gens[1:] or gens, name=name or f"A{n}")
    G.provenance = {"builtin": ["alternating", n]}
    return G


def extraspecial(p: int, n: int, kind: str, name: str = "") -> TableGroup:
    """Extraspecial group of order ``p^(1+2n)``.

    Built as pairs ``(s, v)`` with ``v`` in ``F_p^(2n)`` and product
    ``(s1 + s2 + beta(v1, v2), v1 + v2)``.  For ``p = 2`` the form ``beta``
    makes the squaring map a quadratic form of plus type (``kind="+"``) or
    minus type (``kind="-"``).  For odd ``p`` ``kind="+"`` gives exponent
    ``p`` (Heisenberg type) and ``kind="-"`` exponent ``p^2``.
    """
    dim = 2 * n
    vecs = list(itertools.product(range(p), repeat=dim))
    beta = np.zeros((dim, dim), dtype=np.int64)
    for i in range(n):
        beta[2 * i, 2 * i + 1] = 1
    if p == 2 and kind == "-":
        beta[0, 0] = 1
        beta[1, 1] = 1
    if p != 2 and kind == "-":
        return _extraspecial_odd_minus(p, n, name)
    vec_arr = np.array(vecs, dtype=np.int64)
    pw = p ** np.arange(dim)[::-1]
    B = (vec_arr @ beta @ vec_arr.T) % p
    V = len(vecs)
    sums = (vec_arr[:, None, :] + vec_arr[None, :, :]) % p
    vsum = sums @ pw
    table = np.empty((p * V, p * V), dtype=np.int64)
    for s1 in range(p):
        for s2 in range(p):
            snew = (s1 + s2 + B) % p
            table[s1 * V : (s1 + 1) * V, s2 * V : (s2 + 1) * V] = snew * V + vsum
    label = name or f"{p}^(1+{dim}){kind}"
    return TableGroup(table, name=label, provenance={"builtin": ["extraspecial", p, n, kind]}, check=False)


def _extraspecial_odd_minus(p: int, n: int, name: str) -> FiniteGroup:
    # M(p^3) = <a, b | a^(p^2), b^p, b a b^-1 = a^(1+p)>
    M = semidirect([p * p], cyclic(p), {1: [[1 + p]]}, name=f"M{p**3}")
    if n == 1:
        M.name = name or f"{p}^(1+2)-"
        M.provenance = {"builtin": ["extraspecial", p, n, "-"]}
        return M
    raise NotImplementedError("only order p^3 for the exponent p^2 type")


def sl23(name: str = "SL(2,3)") -> ConcreteGroup:
    """``SL(2, 3)`` acting on the eight nonzero vectors of ``F_3^2``."""
    vecs = [(a, b) for a in range(3) for b in range(3) if (a, b) != (0, 0)]
    idx = {v: i for i, v in enumerate(vecs)}

    def perm(m):
        return [idx[((m[0][0] * a + m[0][1] * b) % 3, (m[1][0] * a + m[1][1] * b) % 3)] for a, b in vecs]

    g = from_permutations([perm([[1, 1], [0, 1]]), perm([[1, 0], [1, 1]])], name=name)
    g.provenance = {"builtin": ["sl23"]}
    return g


# -- finite fields and Frobenius groups -------------------------------------


def _poly_mod(a: list[int], b: list[int], p: int) -> list[int]:
    """Remainder of ``a`` by monic ``b`` over ``F_p``; coefficients low to high."""
    a = a[:]
    db = len(b) - 1
    while len(a) - 1 >= db and any(a):
        while a and a[-1] % p == 0:
            a.pop()
        if len(a) - 1 < db:
            break
        c = a[-1]
        shift = len(a) - 1 - db
        for i, x in enumerate(b):
            a[shift + i] = (a[shift + i] - c * x) % p
        a.pop()
    return [x % p for x in a]


def irreducible_polynomial(p: int, n: int) -> list[int]:
    """The lexicographically first monic irreducible polynomial of degree
    ``n`` over ``F_p`` (coefficients low to high, leading 1 included)."""
    if n == 1:
        return [0, 1]
    for tail in itertools.product(range(p), repeat=n):
        f = list(tail) + [1]
        if f[0] == 0:
            continue
        reducible = False
        for d in range(1, n // 2 + 1):
            for g_tail in itertools.product(range(p), repeat=d):
                g = list(g_tail) + [1]
                r = _poly_mod(f, g, p)
                if not any(r):
                    reducible = True
                    break
            if reducible:
                break
        if not reducible:
            return f
    raise AssertionError("no irreducible polynomial found")


def _mat_order(m: np.ndarray, p: int, bound: int) -> int:
    ident = np.eye(len(m), dtype=np.int64)
    x = m % p
    for k in range(1, bound + 1):
        if (x == ident).all():
            return k
        x = (x @ m) % p
    return 0


def field_multiplier(p: int, n: int, m: int) -> np.ndarray:
    """Matrix over ``F_p`` of multiplication by an element of order ``m`` in
    ``F_(p^n)``, in the power basis of the first irreducible polynomial."""
    q = p**n
    if m < 1 or (q - 1) % m:
        raise NoFixedPointFreeAction(f"F_{q} has no element of multiplicative order {m}")
    f = irreducible_polynomial(p, n)
    comp = np.zeros((n, n), dtype=np.int64)
    for i in range(1, n):
        comp[i, i - 1] = 1
    comp[:, n - 1] = [(-c) % p for c in f[:n]]
    powers = [np.eye(n, dtype=np.int64)]
    for _ in range(1, n):
        powers.append((powers[-1] @ comp) % p)
    for coeffs in itertools.product(range(p), repeat=n):
        if not any(coeffs):
            continue
        mat = sum(c * P for c, P in zip(coeffs, powers)) % p
        if _mat_order(mat, p, q - 1) == m:
            return mat
    raise AssertionError("no element of the requested order found")


def frobenius_metacyclic(p: int, n: int, m: int, name: str = "") -> ConcreteGroup:
    """``(C_p)^n x| C_m`` with ``C_m`` acting as multiplication by an element
    of order ``m`` of ``F_(p^n)``; fixed-point-free whenever ``m > 1``."""
    mat = field_multiplier(p, n, m)
    G = semidirect([p] * n, cyclic(m), {1: mat} if m > 1 else {}, name=name or f"F({p}^{n}:{m})")
    G.provenance = {"builtin": ["frobenius", p, n, m]}
    return G


def m5_group(name: str = "m5") -> ConcreteGroup:
    """``(C2^4 x C3^4) x| C5`` with ``C5`` acting irreducibly and without fixed
    points on both factors (order 6480)."""
    mu = field_multiplier(2, 4, 5)
    mv = field_multiplier(3, 4, 5)
    block = np.zeros((8, 8), dtype=np.int64)
    block[:4, :4] = mu
    block[4:, 4:] = mv
    G = semidirect([2] * 4 + [3] * 4, cyclic(5), {1: block}, name=name)
    G.provenance = {"builtin": ["m5"]}
    return G


# -- A x| C6 and A x| S3 with A homocyclic of rank 2 ------------------------

ORDER3 = np.array([[0, -1], [1, -1]], dtype=np.int64)
SWAP = np.array([[0, 1], [1, 0]], dtype=np.int64)


def xy_involution(e: int, case: int) -> np.ndarray:
    """Involution commuting with ``ORDER3`` on ``C_e x C_e``.

    ``case=1`` inverts every element; ``case=2`` is ``a -> a^(-1) a^(e/2 x)``.
    """
    eye = np.eye(2, dtype=np.int64)
    if case == 1:
        return (-eye) % e
    if case == 2:
        return ((e // 2) * ORDER3 - eye) % e
    raise ValueError("case must be 1 or 2")


def xy_group(e: int = 8, case: int = 1, complement: str = "C6", name: str = "") -> ConcreteGroup:
    """``(C_e x C_e) x| H`` with ``H = C6`` (order-3 part ``ORDER3``, involution
    from ``xy_involution``) or ``H = S3`` (involution swapping coordinates)."""
    if complement == "C6":
        y = xy_involution(e, case)
        gen = (ORDER3 @ y) % e
        G = semidirect([e, e], cyclic(6), {1: gen}, name=name or f"XY{e}.{case}")
        G.provenance = {"builtin": ["xy", e, case, "C6"]}
    elif complement == "S3":
        S3 = symmetric(3)
        # images of the generators of S3: 3-cycle and transposition
        G = semidirect([e, e], S3, _s3_action(S3, e), name=name or f"XS{e}")
        G.provenance = {"builtin": ["xy", e, 0, "S3"]}
    else:
        raise ValueError("complement must be C6 or S3")
    return G


def _s3_action(S3: ConcreteGroup, e: int) -> dict:
    out = {}
    for g in S3.generators:
        perm = S3.coords[g]
        if len(set(perm.tolist())) == 3 and all(perm[i] != i for i in range(3)):
            out[g] = ORDER3 % e if perm[0] == 1 else (ORDER3 @ ORDER3) % e
        else:
            out[g] = SWAP
    return out


def heisenberg(p: int, name: str = "") -> TableGroup:
    return extraspecial(p, 1, "+", name=name or f"He{p}")
