"""Structural subgroups: centre, commutators, Sylow and Fitting subgroups,
quotients and the normal-subgroup lattice."""

from __future__ import annotations

import math
from typing import Iterable

import numpy as np

from ..cyclo import factorize
from ..errors import NotAbelian, NotCoprime, NotNormal, NotPrime, TooLarge
from .core import FiniteGroup, QuotientGroup, closure_mask
from .subgroup import Subgroup, generate


def _check_prime(p: int) -> None:
    if p < 2 or any(p % d == 0 for d in range(2, math.isqrt(p) + 1)):
        raise NotPrime(f"{p} is not prime")


def center(G: FiniteGroup) -> Subgroup:
    cp = G.classes
    return Subgroup(G, cp.reps[cp.sizes == 1], name="Z")


def centralizer_mask(G: FiniteGroup, elements: Iterable[int]) -> np.ndarray:
    allg = G.elements()
    mask = np.ones(G.order, dtype=bool)
    for g in elements:
        mask &= G.mul(allg, int(g)) == G.mul(int(g), allg)
    return mask


def centralizer(G: FiniteGroup, elements) -> Subgroup:
    """``C_G(S)``; ``elements`` is an element, an iterable, or a Subgroup."""
    if isinstance(elements, Subgroup):
        elements = elements.generators
    elif np.ndim(elements) == 0:
        elements = [int(elements)]
    return Subgroup.from_mask(G, centralizer_mask(G, elements))


def normalizer(G: FiniteGroup, H: Subgroup) -> Subgroup:
    allg = G.elements()
    mask = np.ones(G.order, dtype=bool)
    for h in H.generators:
        mask &= H.mask[G.conj(h, allg)]
    return Subgroup.from_mask(G, mask)


def normal_closure(G: FiniteGroup, elements: Iterable[int], within: Subgroup | None = None) -> Subgroup:
    """Smallest subgroup containing ``elements`` and normalized by ``within``
    (default ``G``)."""
    conj_by = within.generators if within is not None else G.generators
    H = generate(G, elements)
    while True:
        gens = np.asarray(H.generators, dtype=np.int64)
        if gens.size == 0 or not conj_by:
            return H
        xs = np.asarray(conj_by, dtype=np.int64)
        images = G.conj(gens[:, None], xs[None, :]).ravel()
        missing = images[~H.mask[images]]
        if missing.size == 0:
            return H
        H = generate(G, list(H.generators) + [int(missing[0])])


def derived_subgroup(G: FiniteGroup, within: Subgroup | None = None) -> Subgroup:
    """Commutator subgroup of ``within`` (default ``G``)."""
    gens = np.asarray(within.generators if within is not None else G.generators, dtype=np.int64)
    if gens.size == 0:
        return G.trivial()
    comms = G.commutator(gens[:, None], gens[None, :]).ravel()
    return normal_closure(G, np.unique(comms), within=within)


def commutator(G: FiniteGroup, H: Subgroup, y: int) -> Subgroup:
    """``[H, y] = <h^-1 h^y : h in H>``."""
    hs = H.members
    return generate(G, np.unique(G.commutator(hs, int(y))))


def commutator_subgroup(G: FiniteGroup, H: Subgroup, K: Subgroup) -> Subgroup:
    """``[H, K]`` for subgroups normalized by ``<H, K>``."""
    a = np.asarray(H.generators, dtype=np.int64)
    b = np.asarray(K.generators, dtype=np.int64)
    if a.size == 0 or b.size == 0:
        return G.trivial()
    comms = np.unique(G.commutator(a[:, None], b[None, :]).ravel())
    return normal_closure(G, comms, within=H.join(K))


def derived_series(G: FiniteGroup) -> list[Subgroup]:
    series = [G.whole()]
    while True:
        D = derived_subgroup(G, within=series[-1])
        if D.order == series[-1].order:
            return series
        series.append(D)


def lower_central_series(G: FiniteGroup) -> list[Subgroup]:
    W = G.whole()
    series = [W]
    while True:
        D = commutator_subgroup(G, series[-1], W)
        if D.order == series[-1].order:
            return series
        series.append(D)


def is_solvable(G: FiniteGroup) -> bool:
    key = "solvable"
    if key not in G.cache:
        G.cache[key] = derived_series(G)[-1].order == 1
    return G.cache[key]


def is_nilpotent(G: FiniteGroup) -> bool:
    key = "nilpotent"
    if key not in G.cache:
        G.cache[key] = lower_central_series(G)[-1].order == 1
    return G.cache[key]


def sylow(G: FiniteGroup, p: int) -> Subgroup:
    """One Sylow ``p``-subgroup, found by ascent through normalizers.

    At each step the first element (by index) of ``N_G(H) - H`` whose
    ``p``-th power lies in ``H`` is adjoined.
    """
    _check_prime(p)
    key = ("sylow", p)
    if key in G.cache:
        return G.cache[key]
    target = 1
    while G.order % (target * p) == 0:
        target *= p
    H = G.trivial()
    while H.order < target:
        N = normalizer(G, H)
        cand = N.members[~H.mask[N.members]]
        ok = H.mask[G.power(cand, p)]
        g = int(cand[np.argmax(ok)])
        H = generate(G, H.generators + [g])
    H.name = f"Syl{p}"
    G.cache[key] = H
    return H


def p_core(G: FiniteGroup, p: int) -> Subgroup:
    """``O_p(G)``: the union of the classes contained in a Sylow p-subgroup."""
    _check_prime(p)
    P = sylow(G, p)
    cp = G.classes
    inside = np.bincount(cp.class_of[P.members], minlength=len(cp))
    full = np.flatnonzero(inside == cp.sizes)
    return Subgroup.from_mask(G, cp.class_mask(full), name=f"O{p}")


def fitting(G: FiniteGroup) -> Subgroup:
    if "fitting" not in G.cache:
        gens = []
        for p, _ in factorize(G.order):
            gens.extend(p_core(G, p).generators)
        F = generate(G, gens, name="F")
        G.cache["fitting"] = F
    return G.cache["fitting"]


def element_p_part(G: FiniteGroup, g, p: int):
    """``g^(m m')`` where ``o(g) = m p^a`` and ``m m' = 1 mod p^a``."""
    _check_prime(p)
    o = G.element_order(g)
    if np.ndim(o):
        return np.array([element_p_part(G, int(x), p) for x in np.asarray(g)], dtype=np.int64)
    pa = 1
    while o % (pa * p) == 0:
        pa *= p
    if pa == 1:
        return 0
    m = o // pa
    return G.power(g, m * pow(m, -1, pa))


def quotient(G: FiniteGroup, N: Subgroup, name: str = "") -> tuple[QuotientGroup, np.ndarray]:
    if not N.is_normal():
        raise NotNormal("quotient requires a normal subgroup")
    Q = QuotientGroup(G, N.members, name=name or f"{G.name}/{N.order}")
    return Q, Q.projection


def normal_subgroups(G: FiniteGroup, cap: int | None = None) -> list[Subgroup]:
    """All normal subgroups, sorted by (order, members).

    Built from the normal closures of single classes by repeated joins.
    Raises TooLarge when more than ``cap`` subgroups appear.
    """
    key = "normal_subgroups"
    if key in G.cache:
        return G.cache[key]
    cp = G.classes
    principal = {}
    for r in cp.reps[1:]:
        N = normal_closure(G, [int(r)])
        principal.setdefault(N.members.tobytes(), N)
    found = {G.trivial().members.tobytes(): G.trivial()}
    frontier = list(found.values())
    prin = list(principal.values())
    while frontier:
        nxt = []
        for N in frontier:
            for M in prin:
                if M <= N:
                    continue
                J = Subgroup.from_mask(G, closure_mask(G, M.generators, start=N.mask))
                k = J.members.tobytes()
                if k not in found:
                    found[k] = J
                    nxt.append(J)
                    if cap is not None and len(found) > cap:
                        raise TooLarge(f"more than {cap} normal subgroups")
        frontier = nxt
    out = sorted(found.values(), key=lambda S: S.key())
    G.cache[key] = out
    return out


def coprime_action_decompose(G: FiniteGroup, A: Subgroup, P: Subgroup) -> tuple[Subgroup, Subgroup]:
    """``([A, P], C_A(P))`` for an abelian ``A`` normalized by ``P`` of
    coprime order."""
    if math.gcd(A.order, P.order) != 1:
        raise NotCoprime("|A| and |P| must be coprime")
    if not A.is_abelian():
        raise NotAbelian("A must be abelian")
    gens = []
    for x in P.generators:
        gens.extend(np.unique(G.commutator(A.members, x)).tolist())
    AP = generate(G, gens, name="[A,P]")
    C = Subgroup.from_mask(G, A.mask & centralizer_mask(G, P.generators), name="C_A(P)")
    return AP, C
