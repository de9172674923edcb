"""Subgroups as sorted member sets inside a parent group."""

from __future__ import annotations

from typing import Iterable

import numpy as np

from ..errors import NotMember
from .core import EmbeddedGroup, FiniteGroup, _greedy_generators, closure_mask


class Subgroup:
    """A subgroup of ``parent`` stored as a sorted index array plus mask."""

    def __init__(self, parent: FiniteGroup, members, gens=None, name: str = ""):
        self.parent = parent
        m = np.unique(np.asarray(members, dtype=np.int64))
        self.members = m
        self.mask = np.zeros(parent.order, dtype=bool)
        self.mask[m] = True
        self.order = len(m)
        self.name = name
        self._gens = None if gens is None else [int(g) for g in gens]
        self._group = None

    @classmethod
    def from_mask(cls, parent: FiniteGroup, mask: np.ndarray, gens=None, name: str = "") -> "Subgroup":
        return cls(parent, np.flatnonzero(mask), gens=gens, name=name)

    def __repr__(self):
        return f"<Subgroup {self.name or ''} of order {self.order} in {self.parent.name}>"

    def __len__(self):
        return self.order

    def __contains__(self, g) -> bool:
        return bool(self.mask[int(g)])

    def __iter__(self):
        return iter(self.members.tolist())

    def __eq__(self, other):
        return (
            isinstance(other, Subgroup)
            and other.parent is self.parent
            and other.order == self.order
            and bool((other.members == self.members).all())
        )

    def __hash__(self):
        return hash((id(self.parent), self.members.tobytes()))

    def __le__(self, other: "Subgroup") -> bool:
        return bool(other.mask[self.members].all())

    def key(self):
        return (self.order, tuple(self.members.tolist()))

    @property
    def index(self) -> int:
        return self.parent.order // self.order

    @property
    def generators(self) -> list[int]:
        if self._gens is None:
            self._gens = _greedy_generators(self.parent, self.members[1:])
        return self._gens

    def is_trivial(self) -> bool:
        return self.order == 1

    def is_whole(self) -> bool:
        return self.order == self.parent.order

    def is_abelian(self) -> bool:
        gs = np.asarray(self.generators, dtype=np.int64)
        if gs.size == 0:
            return True
        G = self.parent
        return bool((G.mul(gs[:, None], gs[None, :]) == G.mul(gs[None, :], gs[:, None])).all())

    def is_normal(self) -> bool:
        cp = self.parent.classes
        inside = np.bincount(cp.class_of[self.members], minlength=len(cp))
        return bool(((inside == 0) | (inside == cp.sizes)).all())

    def as_group(self) -> EmbeddedGroup:
        if self._group is None:
            self._group = EmbeddedGroup(self.parent, self.members, name=self.name or f"sub{self.order}")
            self._group._gens = [int(self._group.position[g]) for g in self.generators]
        return self._group

    def local(self, g) -> int:
        """Index of parent element ``g`` inside ``as_group()``."""
        if not self.mask[int(g)]:
            raise NotMember(f"element {g} is not in the subgroup")
        return int(self.as_group().position[int(g)])

    def intersect(self, other: "Subgroup") -> "Subgroup":
        return Subgroup.from_mask(self.parent, self.mask & other.mask)

    def join(self, other: "Subgroup") -> "Subgroup":
        return generate(self.parent, self.generators + other.generators)


def generate(G: FiniteGroup, elements: Iterable[int], name: str = "") -> Subgroup:
    """Subgroup generated by ``elements``, with a small generating set kept."""
    gens = _greedy_generators(G, [int(e) for e in elements])
    return Subgroup.from_mask(G, closure_mask(G, gens), gens=gens, name=name)
