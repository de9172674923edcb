"""Exact computation of vanishing elements of finite groups.

Submodules: ``cyclo`` (cyclotomic numbers and vanishing sums of roots of
unity), ``groups`` (finite groups and their structure), ``chartab``
(character tables), ``vanish`` (vanishing sets and structural checks),
``groupspec`` and ``corpus`` (group files and batch runs).
"""

from .chartab import CharacterTable, character_table, induce, inertia_subgroup, inner_product, restrict
from .cyclo import Cyclotomic, RootOfUnity, classify_zero_sum, parse_roots, root, sigma_six_test
from .groupspec import GroupSpec, ingest
from .vanish import (
    ALPHA,
    check_lemma_suite,
    check_nif_chain,
    check_ppart_reduction,
    check_theorem_a,
    construct_and_check_a6_family,
    induced_vanishing_criterion,
    nonvanishing_structure,
    pv,
    vanishing_set,
)

__version__ = "0.1.0"
