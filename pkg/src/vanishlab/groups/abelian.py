"""Abelian subgroups: explicit bases, characters and annihilators."""

from __future__ import annotations

from fractions import Fraction

import numpy as np

from ..cyclo import RootOfUnity, factorize
from ..errors import NotAbelian, NotMember, NotPGroup
from .subgroup import Subgroup, generate


def smith_normal_form(M: np.ndarray):
    """Return ``(D, V, Vinv)`` with ``U M V = diag(D)`` for some unimodular ``U``.

    Only the column transform is tracked.  ``M`` is a small square integer
    matrix; entries are Python ints to avoid overflow.
    """
    A = [[int(x) for x in row] for row in M]
    n_rows, n_cols = len(A), len(A[0]) if A else 0
    V = [[int(i == j) for j in range(n_cols)] for i in range(n_cols)]
    Vi = [[int(i == j) for j in range(n_cols)] for i in range(n_cols)]

    def col_op(i, j, q):
        # column i -= q * column j
        for r in range(n_rows):
            A[r][i] -= q * A[r][j]
        for r in range(n_cols):
            V[r][i] -= q * V[r][j]
        # inverse: row j += q * row i
        for c in range(n_cols):
            Vi[j][c] += q * Vi[i][c]

    def col_swap(i, j):
        for r in range(n_rows):
            A[r][i], A[r][j] = A[r][j], A[r][i]
        for r in range(n_cols):
            V[r][i], V[r][j] = V[r][j], V[r][i]
        Vi[i], Vi[j] = Vi[j], Vi[i]

    def col_neg(i):
        for r in range(n_rows):
            A[r][i] = -A[r][i]
        for r in range(n_cols):
            V[r][i] = -V[r][i]
        Vi[i] = [-x for x in Vi[i]]

    def row_op(i, j, q):
        A[i] = [a - q * b for a, b in zip(A[i], A[j])]

    def row_swap(i, j):
        A[i], A[j] = A[j], A[i]

    t = 0
    while t < min(n_rows, n_cols):
        nz = [(abs(A[r][c]), r, c) for r in range(t, n_rows) for c in range(t, n_cols) if A[r][c]]
        if not nz:
            break
        _, r, c = min(nz)
        row_swap(t, r)
        col_swap(t, c)
        while True:
            done = True
            for r in range(t + 1, n_rows):
                q = A[r][t] // A[t][t]
                if q:
                    row_op(r, t, q)
                if A[r][t]:
                    done = False
            for c in range(t + 1, n_cols):
                q = A[t][c] // A[t][t]
                if q:
                    col_op(c, t, q)
                if A[t][c]:
                    done = False
            if done:
                # divisibility of the remaining block
                bad = [(r, c) for r in range(t + 1, n_rows) for c in range(t + 1, n_cols) if A[r][c] % A[t][t]]
                if not bad:
                    break
                r, _ = bad[0]
                A[t] = [a + b for a, b in zip(A[t], A[r])]
                continue
            nz = [(abs(A[r][t]), r, t) for r in range(t, n_rows) if A[r][t]]
            nz += [(abs(A[t][c]), t, c) for c in range(t, n_cols) if A[t][c]]
            _, r, c = min(nz)
            row_swap(t, r)
            col_swap(t, c)
        if A[t][t] < 0:
            col_neg(t)
        t += 1
    D = [A[i][i] if i < n_rows else 0 for i in range(n_cols)]
    return D, V, Vi


class AbelianBasis:
    """An abelian subgroup written as ``Z_{d1} x ... x Z_{dr}``, ``d1 | d2 | ...``.

    ``coords[k]`` are the coordinates of ``A.members[k]``.
    """

    def __init__(self, A: Subgroup):
        G = A.parent
        if not A.is_abelian():
            raise NotAbelian("subgroup is not abelian")
        self.subgroup = A
        gens = A.generators
        k = len(gens)
        # coordinates of every member with respect to gens, built incrementally
        span = {0: (0,) * k}
        rel = np.zeros((k, k), dtype=object)
        for i, g in enumerate(gens):
            pw, t = g, 1
            while pw not in span:
                pw = G.mul(pw, g)
                t += 1
            rel[i, i] = t
            c = span[pw]
            for j in range(i):
                rel[i, j] = -c[j]
            new = {}
            for e, v in span.items():
                x = e
                for s in range(t):
                    if s:
                        x = G.mul(x, g)
                    w = list(v)
                    w[i] = s
                    new[x] = tuple(w)
            span = new
        if k:
            D, V, Vi = smith_normal_form(rel)
        else:
            D, V, Vi = [], [], []
        keep = [i for i, d in enumerate(D) if d != 1]
        self.invariants = [int(D[i]) for i in keep]
        self.generators = []
        for i in keep:
            h = 0
            for j, g in enumerate(gens):
                h = G.mul(h, G.power(g, int(Vi[i][j])))
            self.generators.append(h)
        X = np.array([span[int(m)] for m in A.members], dtype=object).reshape(len(A.members), k)
        if keep:
            Vk = np.array([[V[j][i] for i in keep] for j in range(k)], dtype=object)
            Y = (X.dot(Vk)) % np.array(self.invariants, dtype=object)
            self.coords = Y.astype(np.int64)
        else:
            self.coords = np.zeros((len(A.members), 0), dtype=np.int64)
        self.exponent = int(np.lcm.reduce(self.invariants)) if self.invariants else 1
        w = np.cumprod([1] + self.invariants[:-1]).astype(np.int64) if self.invariants else np.zeros(0, np.int64)
        self._weights = w
        keys = self.coords @ w if len(w) else np.zeros(len(A.members), dtype=np.int64)
        self._by_key = np.empty(A.order, dtype=np.int64)
        self._by_key[keys] = A.members

    @property
    def rank(self) -> int:
        return len(self.invariants)

    def coords_of(self, g) -> np.ndarray:
        A = self.subgroup
        g = np.asarray(g, dtype=np.int64)
        if not A.mask[g].all():
            raise NotMember("element outside the abelian subgroup")
        pos = np.searchsorted(A.members, g)
        return self.coords[pos]

    def element(self, coords) -> np.ndarray:
        c = np.asarray(coords, dtype=np.int64) % np.asarray(self.invariants, dtype=np.int64)
        return self._by_key[c @ self._weights] if len(self._weights) else np.zeros(c.shape[:-1], np.int64)


def abelian_basis(A: Subgroup) -> AbelianBasis:
    cache = A.parent.cache.setdefault("abelian_basis", {})
    key = A.members.tobytes()
    if key not in cache:
        cache[key] = AbelianBasis(A)
    return cache[key]


class AbelianDual:
    """All characters of an abelian subgroup.

    A character is an integer vector ``t`` with ``0 <= t_j < d_j``; it maps
    the element with coordinates ``c`` to ``zeta_e^(sum_j t_j c_j e/d_j)``,
    ``e`` the exponent.  Characters are numbered like the elements of
    ``Z_{d1} x ... x Z_{dr}`` in ``np.ndindex`` order.
    """

    def __init__(self, A: Subgroup):
        self.base = A
        self.basis = abelian_basis(A)
        inv = self.basis.invariants
        self.exponent = self.basis.exponent
        self.scale = np.array([self.exponent // d for d in inv], dtype=np.int64)
        self.characters = (
            np.array(list(np.ndindex(*inv)), dtype=np.int64).reshape(-1, len(inv))
            if inv
            else np.zeros((1, 0), dtype=np.int64)
        )

    def __len__(self):
        return len(self.characters)

    def exponents(self, chars=None, elements=None) -> np.ndarray:
        """Matrix of exponents ``k`` with ``alpha(a) = zeta_e^k``."""
        T = self.characters if chars is None else self.characters[np.asarray(chars)]
        C = self.basis.coords if elements is None else self.basis.coords_of(elements)
        return ((T * self.scale) @ C.T) % self.exponent

    def value(self, char: int, element: int) -> RootOfUnity:
        k = int(self.exponents([char], [element])[0, 0])
        return RootOfUnity(self.exponent, k)

    def index_of(self, t) -> int:
        inv = self.basis.invariants
        return int(np.ravel_multi_index(tuple(np.asarray(t) % inv), inv)) if inv else 0

    def product(self, i: int, j: int) -> int:
        return self.index_of(self.characters[i] + self.characters[j])

    def action(self, y: int) -> np.ndarray:
        """Permutation of characters under ``alpha^y(a) = alpha(y a y^-1)``."""
        G = self.base.parent
        A = self.base
        conj = G.conj(A.members, G.inv(y))  # y a y^-1
        if not A.mask[conj].all():
            raise NotMember("element does not normalize the subgroup")
        # images of basis generators determine the permuted character
        gens = np.asarray(self.basis.generators, dtype=np.int64)
        img = self.basis.coords_of(G.conj(gens, G.inv(y)))  # coords of y g_i y^-1
        # alpha_t^y(g_i) = zeta^{sum_j t_j s_j img[i, j]}; solve for t' with t'_i s_i = that
        e = self.exponent
        vals = ((self.characters * self.scale) @ img.T) % e
        t_new = vals // self.scale
        return np.array([self.index_of(t) for t in t_new], dtype=np.int64)


def perp(D: AbelianDual, B: Subgroup) -> np.ndarray:
    """Indices of characters trivial on ``B``."""
    gens = np.asarray(B.generators, dtype=np.int64)
    if gens.size == 0:
        return np.arange(len(D))
    return np.flatnonzero((D.exponents(elements=gens) == 0).all(axis=1))


def perp_down(D: AbelianDual, chars) -> Subgroup:
    """Elements of the base on which every character in ``chars`` is trivial."""
    chars = np.asarray(chars, dtype=np.int64)
    A = D.base
    if chars.size == 0:
        return Subgroup(A.parent, A.members)
    ok = (D.exponents(chars=chars) == 0).all(axis=0)
    return Subgroup(A.parent, A.members[ok])


def omega_sub(A: Subgroup, i: int) -> Subgroup:
    """``{a in A : a^(p^i) = 1}`` for an abelian ``p``-group ``A``."""
    if not A.is_abelian():
        raise NotAbelian("subgroup is not abelian")
    f = factorize(A.order)
    if len(f) > 1:
        raise NotPGroup("subgroup is not a p-group")
    if not f:
        return Subgroup(A.parent, [0])
    p = f[0][0]
    o = A.parent.element_order(A.members)
    return Subgroup(A.parent, A.members[(p**i) % o == 0])


def power_sub(A: Subgroup, k: int) -> Subgroup:
    """``{a^k : a in A}``."""
    if not A.is_abelian():
        raise NotAbelian("subgroup is not abelian")
    return Subgroup(A.parent, np.unique(A.parent.power(A.members, k)))


def all_subgroups_abelian(A: Subgroup, cap: int = 5000) -> list[Subgroup]:
    """Every subgroup of an abelian group, via joins of cyclic subgroups."""
    G = A.parent
    cyclic = {}
    for a in A.members:
        C = generate(G, [int(a)])
        cyclic.setdefault(C.members.tobytes(), C)
    found = {G.trivial().members.tobytes(): G.trivial()}
    frontier = list(found.values())
    cyc = list(cyclic.values())
    while frontier:
        nxt = []
        for S in frontier:
            for C in cyc:
                if C <= S:
                    continue
                J = S.join(C)
                k = J.members.tobytes()
                if k not in found:
                    found[k] = J
                    nxt.append(J)
                    if len(found) > cap:
                        raise ValueError("too many subgroups")
        frontier = nxt
    return sorted(found.values(), key=lambda S: S.key())


def character_fraction(D: AbelianDual, char: int, element: int) -> Fraction:
    return D.value(char, element).as_fraction()
