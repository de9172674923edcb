"""Finite groups as enumerated index sets with vectorized multiplication.

Every group numbers its elements ``0 .. |G|-1`` with ``0`` the identity.
Products take and return numpy index arrays (or plain ints for scalars).
Groups of order at most ``TABLE_LIMIT`` carry a dense multiplication
table; larger ones multiply through their concrete representation.
"""

from __future__ import annotations

import os
from typing import Sequence

import numpy as np

from ..errors import NotAGroup, NotAnAction, NotMember, TooLarge

TABLE_LIMIT = 4096
DEFAULT_MAX_ORDER = 20000
EXHAUSTIVE_ASSOCIATIVITY = 512


def max_order() -> int:
    """Size guard for enumerated groups, overridable via VANISHLAB_MAX_ORDER."""
    v = os.environ.get("VANISHLAB_MAX_ORDER")
    return int(v) if v else DEFAULT_MAX_ORDER


def _index_dtype(n: int):
    return np.int16 if n < 2**15 else np.int32


class FiniteGroup:
    """Base class; subclasses implement ``_product`` on int64 index arrays."""

    def __init__(self, order: int, name: str = "", provenance=None):
        self.order = int(order)
        self.name = name
        self.provenance = provenance
        self.table = self._build_table() if self.order <= TABLE_LIMIT else None
        self._orders, self._inv = self._orders_and_inverses()
        self._gens: list[int] | None = None
        self._classes = None
        self.cache: dict = {}

    def __repr__(self):
        return f"<{type(self).__name__} {self.name or '?'} of order {self.order}>"

    def __len__(self):
        return self.order

    def _product(self, a: np.ndarray, b: np.ndarray) -> np.ndarray:
        raise NotImplementedError

    def _build_table(self) -> np.ndarray:
        n = self.order
        t = np.empty((n, n), dtype=_index_dtype(n))
        cols = np.arange(n, dtype=np.int64)
        step = max(1, (1 << 20) // n)
        for s in range(0, n, step):
            rows = np.arange(s, min(n, s + step), dtype=np.int64)
            a = np.repeat(rows, n)
            b = np.tile(cols, len(rows))
            t[s : s + len(rows)] = self._product(a, b).reshape(len(rows), n)
        return t

    def _orders_and_inverses(self):
        n = self.order
        g = np.arange(n, dtype=np.int64)
        orders = np.zeros(n, dtype=np.int64)
        inv = np.zeros(n, dtype=np.int64)
        prev = np.zeros(n, dtype=np.int64)
        pw = g.copy()
        k = 1
        while True:
            hit = (pw == 0) & (orders == 0)
            orders[hit] = k
            inv[hit] = prev[hit]
            if orders.all():
                break
            if k > n:
                raise NotAGroup("some element has no finite order")
            prev = pw
            pw = self.mul(pw, g)
            k += 1
        return orders, inv

    # -- element level ----------------------------------------------------

    def mul(self, a, b):
        scalar = np.ndim(a) == 0 and np.ndim(b) == 0
        a = np.asarray(a, dtype=np.int64)
        b = np.asarray(b, dtype=np.int64)
        if self.table is not None:
            r = self.table[a, b].astype(np.int64)
        else:
            a, b = np.broadcast_arrays(a, b)
            r = self._product(a.ravel(), b.ravel()).reshape(a.shape)
        return int(r) if scalar else r

    def inv(self, a):
        r = self._inv[np.asarray(a, dtype=np.int64)]
        return int(r) if np.ndim(a) == 0 else r

    def element_order(self, g):
        r = self._orders[np.asarray(g, dtype=np.int64)]
        return int(r) if np.ndim(g) == 0 else r

    @property
    def orders(self) -> np.ndarray:
        return self._orders

    @property
    def exponent(self) -> int:
        return int(np.lcm.reduce(self._orders))

    def power(self, g, k: int):
        scalar = np.ndim(g) == 0
        g = np.asarray(g, dtype=np.int64)
        if k < 0:
            g = self.inv(g)
            k = -k
        out = np.zeros_like(g)
        base = g
        while k:
            if k & 1:
                out = self.mul(out, base)
            base = self.mul(base, base)
            k >>= 1
        return int(out) if scalar else out

    def conj(self, g, x):
        """``g^x = x^-1 g x``."""
        return self.mul(self.mul(self.inv(x), g), x)

    def commutator(self, a, b):
        """``[a, b] = a^-1 b^-1 a b``."""
        return self.mul(self.mul(self.inv(a), self.inv(b)), self.mul(a, b))

    def elements(self) -> np.ndarray:
        return np.arange(self.order, dtype=np.int64)

    def label(self, g: int) -> str:
        return str(int(g))

    # -- cached structure -------------------------------------------------

    @property
    def generators(self) -> list[int]:
        if self._gens is None:
            self._gens = _greedy_generators(self, range(1, self.order))
        return self._gens

    @property
    def classes(self):
        if self._classes is None:
            from .classes import ConjugacyPartition

            self._classes = ConjugacyPartition(self)
        return self._classes

    def is_abelian(self) -> bool:
        gs = np.asarray(self.generators, dtype=np.int64)
        if gs.size == 0:
            return True
        return bool((self.mul(gs[:, None], gs[None, :]) == self.mul(gs[None, :], gs[:, None])).all())

    def whole(self):
        from .subgroup import Subgroup

        return Subgroup(self, np.arange(self.order), gens=self.generators)

    def trivial(self):
        from .subgroup import Subgroup

        return Subgroup(self, [0], gens=[])


def closure_mask(G: FiniteGroup, gens: Sequence[int], start: np.ndarray | None = None) -> np.ndarray:
    """Membership mask of the subgroup generated by ``gens`` (plus ``start``)."""
    mask = np.zeros(G.order, dtype=bool)
    mask[0] = True
    frontier = np.array([0], dtype=np.int64)
    if start is not None:
        mask |= start
        frontier = np.flatnonzero(mask)
    gens = np.unique(np.asarray(list(gens), dtype=np.int64))
    gens = gens[gens != 0]
    if gens.size == 0:
        return mask
    while frontier.size:
        cand = np.unique(G.mul(frontier[:, None], gens[None, :]).ravel())
        cand = cand[~mask[cand]]
        mask[cand] = True
        frontier = cand
    return mask


def _greedy_generators(G: FiniteGroup, candidates) -> list[int]:
    gens: list[int] = []
    mask = np.zeros(G.order, dtype=bool)
    mask[0] = True
    for g in candidates:
        g = int(g)
        if mask[g]:
            continue
        gens.append(g)
        mask = closure_mask(G, gens, start=mask)
    return gens


class TableGroup(FiniteGroup):
    """A group given by its Cayley table.

    The table is relabelled so that the identity has index 0.  With
    ``check=True`` the Latin-square property and associativity are
    verified (exhaustively up to order 512, on 10*|G| random triples above).
    """

    def __init__(self, table, name: str = "", provenance=None, check: bool = True):
        t = np.asarray(table, dtype=np.int64)
        if t.ndim != 2 or t.shape[0] != t.shape[1] or t.shape[0] == 0:
            raise NotAGroup("Cayley table must be a nonempty square array")
        n = t.shape[0]
        if n > max_order():
            raise TooLarge(f"order {n} exceeds the configured limit {max_order()}")
        if check:
            if t.min() < 0 or t.max() >= n:
                raise NotAGroup("table entries out of range")
            ident = np.arange(n)
            if not (np.sort(t, axis=1) == ident).all() or not (np.sort(t, axis=0) == ident[:, None]).all():
                raise NotAGroup("table is not a Latin square")
            rows = np.flatnonzero((t == ident).all(axis=1))
            if rows.size == 0:
                raise NotAGroup("no identity element")
            e = int(rows[0])
            if not (t[:, e] == ident).all():
                raise NotAGroup("no two-sided identity element")
        else:
            e = int(np.flatnonzero((t == np.arange(n)).all(axis=1))[0])
        if e != 0:
            perm = np.arange(n)
            perm[0], perm[e] = e, 0
            # new label i corresponds to old label perm[i]; perm is an involution
            t = perm[t[np.ix_(perm, perm)]]
        self._t = t
        if check:
            _check_associative(t)
        super().__init__(n, name, provenance)

    def _product(self, a, b):
        return self._t[a, b]


def _check_associative(t: np.ndarray) -> None:
    n = t.shape[0]
    if n <= EXHAUSTIVE_ASSOCIATIVITY:
        for a in range(n):
            if not (t[t[a]] == t[a][t]).all():
                raise NotAGroup(f"associativity fails for first factor {a}")
    else:
        rng = np.random.default_rng(0)
        a, b, c = rng.integers(0, n, size=(3, 10 * n))
        if not (t[t[a, b], c] == t[a, t[b, c]]).all():
            raise NotAGroup("associativity fails on a sampled triple")


# -- concrete representations -------------------------------------------------


class PermutationRep:
    """Permutations of ``0..degree-1``; ``(pq)(i) = q(p(i))``."""

    def __init__(self, degree: int):
        self.degree = degree
        self.identity = np.arange(degree, dtype=np.int64)
        self.radix = [degree] * degree

    def mul(self, x, y):
        return np.take_along_axis(y, x, axis=1)

    def label(self, row) -> str:
        return cycle_string(row)


def cycle_string(perm) -> str:
    seen = set()
    out = []
    for i in range(len(perm)):
        if i in seen or perm[i] == i:
            continue
        cyc = []
        j = i
        while j not in seen:
            seen.add(j)
            cyc.append(j + 1)
            j = int(perm[j])
        out.append("(" + " ".join(map(str, cyc)) + ")")
    return "".join(out) or "()"


class SemidirectRep:
    """Pairs ``(a, h)`` with ``a`` in ``Z_d1 x ... x Z_dr`` and ``h`` in ``H``.

    ``(a1, h1)(a2, h2) = (a1 + phi(h1) a2, h1 h2)``, so ``h`` acts on ``A``
    by ``a -> phi(h) a`` under conjugation ``h a h^-1``.
    """

    def __init__(self, moduli: Sequence[int], H: FiniteGroup, phi: np.ndarray):
        self.moduli = np.asarray(moduli, dtype=np.int64)
        self.H = H
        self.phi = phi
        r = len(moduli)
        self.r = r
        self.identity = np.zeros(r + 1, dtype=np.int64)
        self.radix = list(map(int, moduli)) + [H.order]

    def mul(self, x, y):
        r = self.r
        a = (x[:, :r] + np.einsum("nij,nj->ni", self.phi[x[:, r]], y[:, :r])) % self.moduli
        h = self.H.mul(x[:, r], y[:, r])
        return np.concatenate([a, h[:, None]], axis=1)

    def label(self, row) -> str:
        return f"({','.join(map(str, row[: self.r]))};{self.H.label(int(row[self.r]))})"


class ProductRep:
    def __init__(self, factors: Sequence[FiniteGroup]):
        self.factors = list(factors)
        self.identity = np.zeros(len(factors), dtype=np.int64)
        self.radix = [F.order for F in factors]

    def mul(self, x, y):
        return np.stack([F.mul(x[:, i], y[:, i]) for i, F in enumerate(self.factors)], axis=1)

    def label(self, row) -> str:
        return "(" + ",".join(F.label(int(v)) for F, v in zip(self.factors, row)) + ")"


class ConcreteGroup(FiniteGroup):
    """The closure of concrete generators under a representation's product."""

    def __init__(self, rep, generators, name: str = "", provenance=None):
        self.rep = rep
        gens = np.atleast_2d(np.asarray(generators, dtype=np.int64))
        if gens.size == 0:
            gens = rep.identity[None, :]
        w = 1
        weights = []
        for r in rep.radix:
            weights.append(w)
            w *= int(r)
        if w >= 2**62:
            raise TooLarge("element encoding exceeds 62 bits")
        self._weights = np.asarray(weights, dtype=np.int64)
        limit = max_order()
        elems = [rep.identity[None, :]]
        seen = {int(rep.identity @ self._weights)}
        frontier = rep.identity[None, :]
        ng = len(gens)
        count = 1
        while len(frontier):
            cand = rep.mul(np.repeat(frontier, ng, axis=0), np.tile(gens, (len(frontier), 1)))
            keys = cand @ self._weights
            _, first = np.unique(keys, return_index=True)
            first.sort()
            fresh = [i for i in first if int(keys[i]) not in seen]
            seen.update(int(keys[i]) for i in fresh)
            frontier = cand[fresh]
            count += len(fresh)
            if count > limit:
                raise TooLarge(f"group order exceeds the configured limit {limit}")
            if len(frontier):
                elems.append(frontier)
        self.coords = np.concatenate(elems, axis=0)
        keys = self.coords @ self._weights
        self._order_keys = np.argsort(keys, kind="stable")
        self._sorted_keys = keys[self._order_keys]
        super().__init__(len(self.coords), name, provenance)
        self._gens = _greedy_generators(self, [i for i in self.index_of(gens) if i != 0])

    def index_of(self, coords) -> np.ndarray:
        c = np.atleast_2d(np.asarray(coords, dtype=np.int64))
        keys = c @ self._weights
        pos = np.searchsorted(self._sorted_keys, keys)
        pos = np.minimum(pos, len(self._sorted_keys) - 1)
        if not (self._sorted_keys[pos] == keys).all():
            raise NotMember("coordinates do not describe a group element")
        return self._order_keys[pos]

    def _product(self, a, b):
        return self.index_of(self.rep.mul(self.coords[a], self.coords[b]))

    def label(self, g: int) -> str:
        return self.rep.label(self.coords[int(g)])


class EmbeddedGroup(FiniteGroup):
    """A subgroup re-enumerated as a group in its own right."""

    def __init__(self, parent: FiniteGroup, members: np.ndarray, name: str = ""):
        self.parent = parent
        self.members = np.asarray(members, dtype=np.int64)
        self.position = np.full(parent.order, -1, dtype=np.int64)
        self.position[self.members] = np.arange(len(self.members))
        super().__init__(len(self.members), name, provenance={"subgroup_of": parent.name})

    def _product(self, a, b):
        return self.position[self.parent.mul(self.members[a], self.members[b])]

    def label(self, g: int) -> str:
        return self.parent.label(int(self.members[int(g)]))


class QuotientGroup(FiniteGroup):
    """``G/N`` with cosets numbered by their smallest element."""

    def __init__(self, parent: FiniteGroup, normal_members: np.ndarray, name: str = ""):
        self.parent = parent
        n = np.asarray(normal_members, dtype=np.int64)
        coset = np.full(parent.order, -1, dtype=np.int64)
        reps = []
        for g in range(parent.order):
            if coset[g] >= 0:
                continue
            coset[parent.mul(g, n)] = len(reps)
            reps.append(g)
        self.projection = coset
        self.reps = np.asarray(reps, dtype=np.int64)
        super().__init__(len(reps), name, provenance={"quotient_of": parent.name})

    def _product(self, a, b):
        return self.projection[self.parent.mul(self.reps[a], self.reps[b])]


def direct_product(factors: Sequence[FiniteGroup], name: str = "") -> ConcreteGroup:
    gens = []
    for i, F in enumerate(factors):
        for g in F.generators:
            row = np.zeros(len(factors), dtype=np.int64)
            row[i] = g
            gens.append(row)
    return ConcreteGroup(
        ProductRep(factors),
        gens,
        name=name or "x".join(F.name for F in factors),
        provenance={"direct_product": [F.name for F in factors]},
    )


def _extend_action(H: FiniteGroup, moduli: np.ndarray, gen_mats: dict) -> np.ndarray:
    """Extend generator matrices to a homomorphism ``H -> GL``; checks relations."""
    r = len(moduli)
    phi = np.zeros((H.order, r, r), dtype=np.int64)
    done = np.zeros(H.order, dtype=bool)
    phi[0] = np.eye(r, dtype=np.int64)
    done[0] = True
    frontier = [0]
    items = [(int(h), np.asarray(m, dtype=np.int64) % moduli[:, None]) for h, m in gen_mats.items()]
    while frontier:
        nxt = []
        for h in frontier:
            for s, m in items:
                hs = H.mul(h, s)
                val = (phi[h] @ m) % moduli[:, None]
                if done[hs]:
                    if not (phi[hs] == val).all():
                        raise NotAnAction("action matrices do not respect the relations of the acting group")
                else:
                    phi[hs] = val
                    done[hs] = True
                    nxt.append(hs)
        frontier = nxt
    if not done.all():
        raise NotAnAction("action matrices are not given on a generating set")
    return phi


def _check_automorphism(moduli: np.ndarray, m: np.ndarray) -> None:
    r = len(moduli)
    for i in range(r):
        for j in range(r):
            if (moduli[j] * m[i, j]) % moduli[i]:
                raise NotAnAction(f"matrix entry ({i},{j}) does not give a homomorphism")
    grids = np.indices(tuple(int(d) for d in moduli)).reshape(r, -1).T
    images = (grids @ m.T) % moduli
    w = np.cumprod([1] + [int(d) for d in moduli[:-1]])
    if len(np.unique(images @ w)) != len(grids):
        raise NotAnAction("action matrix is not invertible on the abelian group")


def semidirect(moduli: Sequence[int], H: FiniteGroup, action: dict, name: str = "") -> ConcreteGroup:
    """``A x| H`` with ``A = Z_{d1} x ... x Z_{dr}``.

    ``action`` maps generator indices of ``H`` to integer ``r x r`` matrices
    acting on column vectors of ``A``.
    """
    mod = np.asarray(moduli, dtype=np.int64)
    r = len(mod)
    for m in action.values():
        m = np.asarray(m, dtype=np.int64)
        if m.shape != (r, r):
            raise NotAnAction("action matrix has the wrong shape")
        _check_automorphism(mod, m % mod[:, None])
    phi = _extend_action(H, mod, action)
    gens = []
    for i in range(r):
        row = np.zeros(r + 1, dtype=np.int64)
        row[i] = 1
        gens.append(row)
    for h in H.generators:
        row = np.zeros(r + 1, dtype=np.int64)
        row[r] = h
        gens.append(row)
    prov = {
        "semidirect": {
            "moduli": [int(d) for d in mod],
            "acting": H.name,
            "action": {int(h): np.asarray(m).tolist() for h, m in action.items()},
        }
    }
    G = ConcreteGroup(SemidirectRep(mod, H, phi), gens, name=name, provenance=prov)
    acting = H.provenance.get("builtin") if isinstance(H.provenance, dict) else None
    G.semidirect_data = dict(prov["semidirect"], acting_call=acting)
    return G


def from_cayley(table, name: str = "") -> TableGroup:
    return TableGroup(table, name=name, provenance={"cayley": True})


def from_permutations(generators, name: str = "", degree: int | None = None) -> ConcreteGroup:
    """Close 0-based image lists under composition.

    All generators must have the same degree; ``degree`` pads shorter lists
    with fixed points.
    """
    gens = [list(map(int, g)) for g in generators]
    d = degree if degree is not None else max((len(g) for g in gens), default=1)
    rows = []
    for g in gens:
        g = g + list(range(len(g), d))
        if sorted(g) != list(range(d)):
            raise NotAGroup(f"not a permutation of 0..{d - 1}: {g}")
        rows.append(g)
    if not rows:
        rows = [list(range(d))]
    return ConcreteGroup(PermutationRep(d), rows, name=name, provenance={"permutations": rows})
