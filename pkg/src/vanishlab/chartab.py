"""Exact character tables by class-matrix eigenvectors over a prime field.

The central characters of a group are the common eigenvectors of its class
matrices.  They are found over ``F_q`` with ``q = 1 mod exp(G)``, turned into
character values mod ``q``, and lifted to cyclotomic integers through the
eigenvalue multiplicities of each representing matrix.
"""

from __future__ import annotations

import math
from fractions import Fraction
from typing import Sequence

import numpy as np

from .cyclo import Cyclotomic, expansion_matrix, factorize
from .errors import NotNormal, TooManyClasses
from .groups.core import EmbeddedGroup, FiniteGroup
from .groups.subgroup import Subgroup

MAX_CLASSES = 300

__all__ = [
    "CharacterTable",
    "ClassFunction",
    "character_table",
    "character_degrees",
    "induce",
    "restrict",
    "inner_product",
    "inertia_subgroup",
    "MAX_CLASSES",
]


# -- linear algebra over F_q --------------------------------------------------


def _is_prime(n: int) -> bool:
    return n >= 2 and all(n % d for d in range(2, math.isqrt(n) + 1))


def choose_prime(order: int, exponent: int) -> int:
    """Smallest prime ``q = 1 mod exponent`` with ``q > 2 sqrt(order)``."""
    q = exponent + 1
    while not (_is_prime(q) and q * q > 4 * order):
        q += exponent
    return q


def primitive_root(q: int) -> int:
    fs = [p for p, _ in factorize(q - 1)]
    for g in range(2, q):
        if all(pow(g, (q - 1) // p, q) != 1 for p in fs):
            return g
    return 1


def rref_mod(A: np.ndarray, q: int) -> tuple[np.ndarray, list[int]]:
    """Reduced row echelon form over ``F_q``; returns (nonzero rows, pivots)."""
    A = np.array(A, dtype=np.int64) % q
    rows, cols = A.shape
    pivots = []
    r = 0
    for c in range(cols):
        if r == rows:
            break
        nz = np.flatnonzero(A[r:, c])
        if nz.size == 0:
            continue
        i = r + int(nz[0])
        if i != r:
            A[[r, i]] = A[[i, r]]
        A[r] = (A[r] * pow(int(A[r, c]), -1, q)) % q
        f = A[:, c].copy()
        f[r] = 0
        A = (A - np.outer(f, A[r])) % q
        pivots.append(c)
        r += 1
    return A[:r], pivots


def nullspace_mod(A: np.ndarray, q: int) -> np.ndarray:
    """Basis (as rows) of ``{x : A x = 0}`` over ``F_q``."""
    n = A.shape[1]
    R, piv = rref_mod(A, q)
    free = [c for c in range(n) if c not in set(piv)]
    out = np.zeros((len(free), n), dtype=np.int64)
    for k, f in enumerate(free):
        out[k, f] = 1
        for i, p in enumerate(piv):
            out[k, p] = (-R[i, f]) % q
    return out


def charpoly_mod(M: np.ndarray, q: int) -> np.ndarray:
    """Characteristic polynomial over ``F_q`` (coefficients low to high)."""
    H = np.array(M, dtype=np.int64) % q
    d = H.shape[0]
    for m in range(d - 2):
        nz = np.flatnonzero(H[m + 1 :, m])
        if nz.size == 0:
            continue
        i = m + 1 + int(nz[0])
        if i != m + 1:
            H[[m + 1, i]] = H[[i, m + 1]]
            H[:, [m + 1, i]] = H[:, [i, m + 1]]
        u = (H[m + 2 :, m] * pow(int(H[m + 1, m]), -1, q)) % q
        if not u.any():
            continue
        H[m + 2 :] = (H[m + 2 :] - np.outer(u, H[m + 1])) % q
        H[:, m + 1] = (H[:, m + 1] + H[:, m + 2 :] @ u) % q
    # recurrence for upper Hessenberg matrices
    polys = [np.zeros(d + 1, dtype=np.int64)]
    polys[0][0] = 1
    for m in range(1, d + 1):
        p = np.zeros(d + 1, dtype=np.int64)
        prev = polys[m - 1]
        p[1:] = prev[:-1]
        p = (p - H[m - 1, m - 1] * prev) % q
        prod = 1
        for i in range(m - 1, 0, -1):
            prod = (prod * H[i, i - 1]) % q
            if prod == 0:
                break
            c = (H[i - 1, m - 1] * prod) % q
            if c:
                p = (p - c * polys[i - 1]) % q
        polys.append(p)
    return polys[d]


def roots_mod(poly: np.ndarray, q: int) -> list[int]:
    xs = np.arange(q, dtype=np.int64)
    vals = np.zeros(q, dtype=np.int64)
    for c in poly[::-1]:
        vals = (vals * xs + int(c)) % q
    return np.flatnonzero(vals == 0).tolist()


# -- the table ----------------------------------------------------------------


class _ClassMatrices:
    """Class matrices ``M_j`` with ``(M_j)[l, k] = #{x in C_j : x^-1 g_k in C_l}``."""

    def __init__(self, G: FiniteGroup):
        self.G = G
        self.cp = G.classes
        self._cache: dict[int, np.ndarray] = {}

    def __getitem__(self, j: int) -> np.ndarray:
        if j not in self._cache:
            G, cp = self.G, self.cp
            r = len(cp)
            xs = G.inv(cp.members[j])
            y = cp.class_of[G.mul(xs[:, None], cp.reps[None, :])]
            M = np.zeros((r, r), dtype=np.int64)
            for k in range(r):
                M[:, k] = np.bincount(y[:, k], minlength=r)
            self._cache[j] = M
        return self._cache[j]


def _split_spaces(G: FiniteGroup, q: int) -> np.ndarray:
    """Common eigenvectors of all class matrices mod ``q``, one per row."""
    cp = G.classes
    r = len(cp)
    mats = _ClassMatrices(G)
    spaces = [np.eye(r, dtype=np.int64)]
    done = []
    order = sorted(range(r), key=lambda j: (int(cp.sizes[j]), j))
    for j in order:
        if not spaces:
            break
        M = mats[j] % q
        nxt = []
        for B in spaces:
            _, piv = rref_mod(B, q)
            R = (M @ B.T)[piv, :] % q
            lams = roots_mod(charpoly_mod(R, q), q)
            if len(lams) == 1:
                nxt.append(B)
                continue
            for lam in lams:
                N = nullspace_mod((R - lam * np.eye(len(B), dtype=np.int64)) % q, q)
                sub, _ = rref_mod((N @ B) % q, q)
                (done if len(sub) == 1 else nxt).append(sub)
        spaces = [B for B in nxt if len(B) > 1]
        done.extend(B for B in nxt if len(B) == 1)
    if spaces:
        raise AssertionError("class matrices did not separate the characters")
    W = np.concatenate(done, axis=0)
    if len(W) != r:
        raise AssertionError(f"found {len(W)} characters for {r} classes")
    return W


class CharacterTable:
    """The irreducible characters of a group, one row per character.

    Values are stored as eigenvalue multiplicities: for class ``j`` with
    representative order ``o``, ``mult[j][i, k]`` is how often ``zeta_o^k``
    occurs as an eigenvalue of a representation affording character ``i``.
    """

    def __init__(self, G: FiniteGroup, max_classes: int = MAX_CLASSES):
        cp = G.classes
        r = len(cp)
        if r > max_classes:
            raise TooManyClasses(f"{r} classes exceed the bound {max_classes}")
        self.group = G
        self.classes = cp
        E = G.exponent
        q = choose_prime(G.order, E)
        self.prime = q
        sizes = cp.sizes
        W = _split_spaces(G, q)
        W = (W * np.array([pow(int(w), -1, q) for w in W[:, 0]], dtype=np.int64)[:, None]) % q
        inv_sizes = np.array([pow(int(s), -1, q) for s in sizes], dtype=np.int64)
        S = (W * W[:, cp.inverse_class] % q * inv_sizes % q).sum(axis=1) % q
        degrees = []
        for s in S:
            target = G.order * pow(int(s), -1, q) % q
            cands = [d for d in range(1, math.isqrt(G.order) + 1) if d * d % q == target]
            if len(cands) != 1 or G.order % cands[0]:
                raise AssertionError("could not recover a character degree")
            degrees.append(cands[0])
        deg = np.array(degrees, dtype=np.int64)
        X = (deg[:, None] * W % q) * inv_sizes[None, :] % q

        # lift: eigenvalue multiplicities from powers of each representative
        z = pow(primitive_root(q), (q - 1) // E, q)
        maxo = int(cp.rep_orders.max())
        powcls = np.zeros((r, maxo), dtype=np.int64)
        pw = np.zeros(r, dtype=np.int64)
        for l in range(maxo):
            powcls[:, l] = cp.class_of[pw]
            pw = G.mul(pw, cp.reps)
        mult = []
        fourier = {}
        for j in range(r):
            o = int(cp.rep_orders[j])
            if o not in fourier:
                zo = pow(z, E // o, q)
                zpow = np.ones(o, dtype=np.int64)
                for t in range(1, o):
                    zpow[t] = zpow[t - 1] * zo % q
                ls = np.arange(o)
                # F[l, k] = zo^(-k l)
                fourier[o] = zpow[(-np.outer(ls, ls)) % o]
            F = fourier[o]
            vals = X[:, powcls[j, :o]]  # chars x l
            m = (vals @ F) % q * pow(o, -1, q) % q
            if (m > deg[:, None]).any() or not (m.sum(axis=1) == deg).all():
                raise AssertionError(f"lifting failed on class {j}")
            mult.append(m)
        # canonical coordinates in Q(zeta_o) give the sort key
        coords = [mult[j] @ expansion_matrix(int(cp.rep_orders[j])) for j in range(r)]
        keys = [
            (int(deg[i]), tuple(tuple(int(v) for v in coords[j][i]) for j in range(r)))
            for i in range(r)
        ]
        perm = sorted(range(r), key=lambda i: keys[i])
        self.degrees = [int(deg[i]) for i in perm]
        self.modp = X[perm]
        self.mult = [m[perm] for m in mult]
        self._coords = [c[perm] for c in coords]
        self._values: dict[tuple[int, int], Cyclotomic] = {}

    def __len__(self):
        return len(self.degrees)

    def __repr__(self):
        return f"<CharacterTable of {self.group.name} with {len(self)} rows>"

    def value(self, i: int, j: int) -> Cyclotomic:
        key = (i, j)
        if key not in self._values:
            o = int(self.classes.rep_orders[j])
            self._values[key] = Cyclotomic.from_counts(o, self.mult[j][i])
        return self._values[key]

    def values(self) -> list[list[Cyclotomic]]:
        return [[self.value(i, j) for j in range(len(self))] for i in range(len(self))]

    def row(self, i: int) -> "ClassFunction":
        return ClassFunction(self.group, [self.value(i, j) for j in range(len(self))])

    def zero_mask(self) -> np.ndarray:
        """``mask[i, j]`` is True iff character ``i`` vanishes on class ``j``."""
        return np.stack([~c.any(axis=1) for c in self._coords], axis=1)

    def value_ids(self) -> np.ndarray:
        """Integer ids such that equal ids mean equal values within a class column."""
        ids = np.zeros((len(self), len(self)), dtype=np.int64)
        for j, c in enumerate(self._coords):
            _, inv = np.unique(c, axis=0, return_inverse=True)
            ids[:, j] = inv.ravel()
        return ids

    def orthogonality_residues(self) -> tuple[np.ndarray, np.ndarray]:
        """Exact Gram matrices of both orthogonality relations.

        Returns integer matrices ``(first, second)`` that must equal
        ``|G| I`` and ``diag(|C_G(g_j)|)`` respectively; entries are integers
        because each relation is evaluated in the canonical basis and its
        rational part is read off (non-rational parts are checked to vanish).
        """
        E = self.group.exponent
        r = len(self)
        sizes = self.classes.sizes
        # embed every multiplicity vector into exponents mod E
        big = np.zeros((r, r, E), dtype=np.int64)  # class, char, exponent
        for j in range(r):
            o = int(self.classes.rep_orders[j])
            big[j][:, np.arange(o) * (E // o)] = self.mult[j]
        mat = expansion_matrix(E)
        one = mat[0]
        piv = int(np.flatnonzero(one)[0])
        bf = big.astype(np.float64)
        w = sizes.astype(np.float64)[:, None, None]
        by_char = (bf * w).transpose(1, 0, 2).reshape(r, r * E)
        by_class = bf.reshape(r, r * E)
        acc1 = np.zeros((r, r, E))
        acc2 = np.zeros((r, r, E))
        # coefficient of zeta^t in chi_a(g) conj(chi_b(g)) is sum_k m_a[k] m_b[k - t]
        for t in range(E):
            rolled = np.roll(bf, t, axis=2)
            acc1[:, :, t] = by_char @ rolled.transpose(1, 0, 2).reshape(r, r * E).T
            acc2[:, :, t] = by_class @ rolled.reshape(r, r * E).T
        out = []
        for acc in (acc1, acc2):
            coords = np.rint(acc).astype(np.int64) @ mat
            c = coords[:, :, piv] // one[piv]
            rational = (coords == c[:, :, None] * one[None, None, :]).all(axis=2)
            res = np.where(rational, c, -1).astype(object)
            res[~rational] = None
            out.append(res)
        first, second = out
        return first, second

    def check_orthogonality(self) -> bool:
        first, second = self.orthogonality_residues()
        n = self.group.order
        r = len(self)
        cent = self.classes.centralizer_orders()
        ok1 = all(first[a, b] == (n if a == b else 0) for a in range(r) for b in range(r))
        ok2 = all(second[a, b] == (int(cent[a]) if a == b else 0) for a in range(r) for b in range(r))
        return ok1 and ok2

    def export_text(self) -> str:
        cp = self.classes
        head = "\t".join(
            [
                self.group.name or "G",
                str(self.group.order),
                "sizes=" + ",".join(map(str, cp.sizes.tolist())),
                "orders=" + ",".join(map(str, cp.rep_orders.tolist())),
            ]
        )
        lines = [head]
        for i in range(len(self)):
            lines.append("\t".join(str(self.value(i, j)) for j in range(len(self))))
        return "\n".join(lines) + "\n"


def character_table(G: FiniteGroup, max_classes: int = MAX_CLASSES) -> CharacterTable:
    if "character_table" not in G.cache:
        G.cache["character_table"] = CharacterTable(G, max_classes=max_classes)
    return G.cache["character_table"]


def character_degrees(G: FiniteGroup) -> list[int]:
    return list(character_table(G).degrees)


# -- class functions ----------------------------------------------------------


class ClassFunction:
    """Cyclotomic values on the conjugacy classes of ``group``."""

    def __init__(self, group: FiniteGroup, values: Sequence):
        self.group = group
        self.values = [Cyclotomic._coerce(v) for v in values]
        if len(self.values) != len(group.classes):
            raise ValueError("one value per conjugacy class required")

    def __call__(self, g: int) -> Cyclotomic:
        return self.values[int(self.group.classes.class_of[int(g)])]

    def __add__(self, other: "ClassFunction") -> "ClassFunction":
        return ClassFunction(self.group, [a + b for a, b in zip(self.values, other.values)])

    def __mul__(self, other) -> "ClassFunction":
        if isinstance(other, ClassFunction):
            return ClassFunction(self.group, [a * b for a, b in zip(self.values, other.values)])
        return ClassFunction(self.group, [a * other for a in self.values])

    __rmul__ = __mul__

    def __eq__(self, other):
        return isinstance(other, ClassFunction) and other.group is self.group and other.values == self.values

    def conj(self) -> "ClassFunction":
        return ClassFunction(self.group, [v.conj() for v in self.values])

    def degree(self) -> Cyclotomic:
        return self.values[0]

    def __repr__(self):
        return "ClassFunction(" + ", ".join(map(str, self.values)) + ")"


def inner_product(f: ClassFunction, g: ClassFunction) -> Cyclotomic:
    """``(1/|G|) sum_x f(x) conj(g(x))``."""
    sizes = f.group.classes.sizes
    total = Cyclotomic.rational(0)
    for s, a, b in zip(sizes, f.values, g.values):
        if a and b:
            total = total + a * b.conj() * int(s)
    return total / f.group.order


def _as_subgroup_group(H) -> EmbeddedGroup:
    if isinstance(H, Subgroup):
        return H.as_group()
    if isinstance(H, EmbeddedGroup):
        return H
    raise TypeError("expected a Subgroup or its embedded group")


def induce(alpha: ClassFunction, G: FiniteGroup) -> ClassFunction:
    """Induce a class function of a subgroup (an ``EmbeddedGroup`` of ``G``)."""
    H = alpha.group
    if not isinstance(H, EmbeddedGroup) or H.parent is not G:
        raise ValueError("alpha must live on a subgroup of G")
    hcp = H.classes
    gcp = G.classes
    fuse = gcp.class_of[H.members[hcp.reps]]
    sums = [Cyclotomic.rational(0) for _ in range(len(gcp))]
    for c, k in enumerate(fuse):
        if alpha.values[c]:
            sums[k] = sums[k] + alpha.values[c] * int(hcp.sizes[c])
    cent = gcp.centralizer_orders()
    return ClassFunction(G, [s * Fraction(int(cent[k]), H.order) for k, s in enumerate(sums)])


def restrict(chi: ClassFunction, H) -> ClassFunction:
    E = _as_subgroup_group(H)
    if E.parent is not chi.group:
        raise ValueError("subgroup of a different group")
    cls = chi.group.classes.class_of[E.members[E.classes.reps]]
    return ClassFunction(E, [chi.values[k] for k in cls])


def inertia_subgroup(G: FiniteGroup, N: Subgroup, nu: int | ClassFunction) -> Subgroup:
    """``I_G(nu) = {g : nu(g n g^-1) = nu(n) for all n}``.

    ``nu`` is a row index of ``character_table(N.as_group())`` or a class
    function on that group.
    """
    if not N.is_normal():
        raise NotNormal("inertia subgroups need a normal subgroup")
    E = N.as_group()
    ncp = E.classes
    if isinstance(nu, ClassFunction):
        vals = nu.values
    else:
        vals = character_table(E).row(int(nu)).values
    ids = {}
    vid = np.array([ids.setdefault(v, len(ids)) for v in vals], dtype=np.int64)
    reps = E.members[ncp.reps]
    allg = G.elements()
    # image of each representative under conjugation by every g
    img = G.mul(G.mul(allg[:, None], reps[None, :]), G.inv(allg)[:, None])
    local = ncp.class_of[E.position[img]]
    ok = (vid[local] == vid[None, :]).all(axis=1)
    return Subgroup.from_mask(G, ok, name="I")
