"""Conjugacy classes and power maps."""

from __future__ import annotations

import numpy as np


class ConjugacyPartition:
    """Conjugacy classes of a group, numbered by their smallest element.

    Class 0 is the identity class.  ``class_of[g]`` is the class index of
    element ``g``; ``members[c]`` is the sorted element array of class ``c``.
    """

    def __init__(self, G):
        self.group = G
        n = G.order
        class_of = np.full(n, -1, dtype=np.int64)
        gens = np.asarray(G.generators, dtype=np.int64)
        ginv = G.inv(gens) if gens.size else gens
        members = []
        for g in range(n):
            if class_of[g] >= 0:
                continue
            c = len(members)
            class_of[g] = c
            orbit = [np.array([g], dtype=np.int64)]
            frontier = orbit[0]
            while frontier.size and gens.size:
                # x^-1 f x for every generator x
                cand = G.mul(G.mul(ginv[None, :], frontier[:, None]), gens[None, :]).ravel()
                cand = np.unique(cand)
                cand = cand[class_of[cand] < 0]
                class_of[cand] = c
                orbit.append(cand)
                frontier = cand
            members.append(np.sort(np.concatenate(orbit)))
        self.class_of = class_of
        self.members = members
        self.reps = np.array([m[0] for m in members], dtype=np.int64)
        self.sizes = np.array([len(m) for m in members], dtype=np.int64)
        self.rep_orders = G.element_order(self.reps)
        self.inverse_class = class_of[G.inv(self.reps)]
        self._power_maps: dict[int, np.ndarray] = {}

    def __len__(self):
        return len(self.members)

    @property
    def count(self) -> int:
        return len(self.members)

    def centralizer_orders(self) -> np.ndarray:
        return self.group.order // self.sizes

    def power_map(self, k: int) -> np.ndarray:
        """Class of ``g^k`` for each class representative ``g``."""
        if k not in self._power_maps:
            self._power_maps[k] = self.class_of[self.group.power(self.reps, k)]
        return self._power_maps[k]

    def class_mask(self, classes) -> np.ndarray:
        """Element mask of a union of classes."""
        sel = np.zeros(len(self.members), dtype=bool)
        sel[np.asarray(list(classes), dtype=np.int64)] = True
        return sel[self.class_of]
