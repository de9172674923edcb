"""Finite groups: enumeration, structure and constructors."""

from .abelian import (
    AbelianBasis,
    AbelianDual,
    abelian_basis,
    all_subgroups_abelian,
    omega_sub,
    perp,
    perp_down,
    power_sub,
    smith_normal_form,
)
from .classes import ConjugacyPartition
from .constructors import (
    abelian,
    alternating,
    cyclic,
    dicyclic,
    dihedral,
    extraspecial,
    field_multiplier,
    frobenius_metacyclic,
    heisenberg,
    irreducible_polynomial,
    m5_group,
    quaternion,
    sl23,
    symmetric,
    xy_group,
    xy_involution,
)
from .core import (
    TABLE_LIMIT,
    ConcreteGroup,
    EmbeddedGroup,
    FiniteGroup,
    QuotientGroup,
    TableGroup,
    direct_product,
    from_cayley,
    from_permutations,
    max_order,
    semidirect,
)
from .structure import (
    center,
    centralizer,
    commutator,
    commutator_subgroup,
    coprime_action_decompose,
    derived_series,
    derived_subgroup,
    element_p_part,
    fitting,
    is_nilpotent,
    is_solvable,
    lower_central_series,
    normal_closure,
    normal_subgroups,
    normalizer,
    p_core,
    quotient,
    sylow,
)
from .subgroup import Subgroup, generate


def abelian_dual(A: Subgroup) -> AbelianDual:
    return AbelianDual(A)
