from fractions import Fraction

import numpy as np
import pytest

from vanishlab.chartab import character_table
from vanishlab.errors import (
    NotApplicable,
    NotMember,
    NotNormal,
    PreconditionViolated,
    SettingViolated,
)
from vanishlab.groups import (
    Subgroup,
    abelian,
    alternating,
    center,
    cyclic,
    dicyclic,
    dihedral,
    extraspecial,
    frobenius_metacyclic,
    generate,
    heisenberg,
    is_nilpotent,
    m5_group,
    p_core,
    quaternion,
    semidirect,
    sl23,
    sylow,
    symmetric,
)
from vanishlab.vanish import (
    ALPHA,
    _setting_parts,
    check_lemma_suite,
    check_nif_chain,
    check_ppart_reduction,
    check_theorem_a,
    construct_and_check_a6_family,
    induced_vanishing_criterion,
    nonvanishing_set,
    nonvanishing_structure,
    nv_product_witness,
    ppart_exclusion_witness,
    pv,
    theorem_a_index,
    vanishing_set,
)


def float_vanishing(G):
    """Vanishing elements from complex evaluation of the table."""
    T = character_table(G)
    vals = np.array([[T.value(i, j).to_complex() for j in range(len(T))] for i in range(len(T))])
    cls = (np.abs(vals) < 1e-9).any(axis=0)
    return set(np.flatnonzero(cls[G.classes.class_of]).tolist())


SAMPLE = [
    symmetric(3),
    symmetric(4),
    alternating(5),
    quaternion(8),
    dihedral(6),
    dicyclic(6),
    sl23(),
    frobenius_metacyclic(2, 2, 3),
    extraspecial(2, 2, "-"),
]


@pytest.mark.parametrize("G", SAMPLE, ids=[G.name for G in SAMPLE])
def test_vanishing_set_matches_float_evaluation(G):
    assert set(vanishing_set(G).tolist()) == float_vanishing(G)
    assert len(vanishing_set(G)) + len(nonvanishing_set(G)) == G.order


def test_small_examples():
    S3 = symmetric(3)
    V = vanishing_set(S3)
    assert sorted(S3.orders[V].tolist()) == [2, 2, 2]
    assert pv(S3) == Fraction(1, 2)
    Q = quaternion(8)
    assert sorted(Q.orders[vanishing_set(Q)].tolist()) == [4] * 6
    assert pv(Q) == Fraction(3, 4)
    assert len(vanishing_set(abelian([4, 6]))) == 0


@pytest.mark.parametrize("G", [cyclic(1), cyclic(12), abelian([2, 2, 2]), symmetric(3), quaternion(8), alternating(4)])
def test_zero_proportion_iff_abelian(G):
    assert (pv(G) == 0) == generate(G, G.elements()).is_abelian()


@pytest.mark.parametrize("G", [quaternion(8), dihedral(8), quaternion(16), extraspecial(3, 1, "+"), heisenberg(5), extraspecial(2, 2, "+")])
def test_nilpotent_nonvanishing_is_center(G):
    assert is_nilpotent(G)
    assert set(nonvanishing_set(G).tolist()) == set(center(G).members.tolist())


def test_report_fields():
    rep = nonvanishing_structure(symmetric(3))
    assert rep.pv == Fraction(1, 2)
    assert rep.nv_is_subgroup and rep.nv_abelian and rep.nv_normal
    assert rep.theorem_a_m == 2 and rep.below_alpha
    assert rep.vanishing_count == 3
    cls, g, row = rep.witnesses[0]
    assert character_table(symmetric(3)).value(row, cls).is_zero()
    js = rep.to_json()
    assert js["pv"] == "1/2" and js["pv_num"] == 1 and js["pv_den"] == 2
    assert list(js)[:3] == ["name", "order", "vanishing_count"]


def test_theorem_a_index():
    assert theorem_a_index(Fraction(5, 6)) == 6
    assert theorem_a_index(Fraction(0)) == 1
    assert theorem_a_index(Fraction(43, 48)) is None


def test_m5_structure():
    G = m5_group()
    rep = nonvanishing_structure(G)
    assert rep.pv == Fraction(133, 135)
    U, V = p_core(G, 2), p_core(G, 3)
    assert set(nonvanishing_set(G).tolist()) == set(U.members.tolist()) | set(V.members.tolist())
    assert not rep.nv_is_subgroup
    x, y, xy = nv_product_witness(G)
    assert xy == G.mul(x, y)
    assert xy in set(vanishing_set(G).tolist())
    assert nv_product_witness(symmetric(3)) is None


def test_check_theorem_a_verdicts():
    assert check_theorem_a(symmetric(3)).detail == "m = 2"
    v = check_theorem_a(frobenius_metacyclic(5, 1, 4))
    assert v.status == "pass" and v.detail == "m = 4"
    assert check_theorem_a(alternating(5)).status == "not-applicable"
    assert pv(alternating(5)) == Fraction(59, 60) > ALPHA


def test_induced_criterion():
    G = symmetric(3)
    A = p_core(G, 3)
    assert induced_vanishing_criterion(G, A, 0) == (False, None)
    three = int(A.members[1])
    assert induced_vanishing_criterion(G, A, three) == (False, None)
    with pytest.raises(NotMember):
        induced_vanishing_criterion(G, A, int(vanishing_set(G)[0]))
    with pytest.raises(NotNormal):
        H = sylow(G, 2)
        induced_vanishing_criterion(G, H, int(H.members[1]))
    # criterion agrees with V(G) on a normal subgroup
    S4 = symmetric(4)
    V4 = p_core(S4, 2)
    for a in V4.members:
        assert induced_vanishing_criterion(S4, V4, int(a))[0] == (int(a) in set(vanishing_set(S4).tolist()))


def test_induced_criterion_in_m5():
    G = m5_group()
    w = ppart_exclusion_witness(G)
    assert w is not None and w["index"] == 5
    U, V = p_core(G, 2), p_core(G, 3)
    F = U.join(V)
    ok, idx = induced_vanishing_criterion(G, F, w["uv"])
    assert ok and idx is not None
    assert induced_vanishing_criterion(G, F, w["u"]) == (False, None)


def test_ppart_reduction():
    S3 = symmetric(3)
    v = check_ppart_reduction(S3, p_core(S3, 3))
    assert v.status == "pass" and v.prime == 2 and v.checked == 3
    G = semidirect([4, 12], cyclic(2), {1: [[-1, 0], [0, -1]]})
    A = Subgroup.from_mask(G, G.coords[:, 2] == 0)
    v = check_ppart_reduction(G, A)
    assert v.status == "pass" and v.prime == 2 and v.checked == 48
    with pytest.raises(PreconditionViolated):
        check_ppart_reduction(S3, S3.whole())
    with pytest.raises(PreconditionViolated):
        check_ppart_reduction(m5_group(), p_core(m5_group(), 2).join(p_core(m5_group(), 3)))


def test_lemma_suite_examples():
    verdicts = {v.name: v for v in check_lemma_suite(quaternion(8))}
    assert verdicts["vP"].status == "pass"
    assert len(verdicts) == 9
    verdicts = {v.name: v for v in check_lemma_suite(symmetric(4))}
    assert verdicts["lifting"].status == "pass"
    assert verdicts["vP"].status == "not-applicable"
    assert all(v.ok for v in verdicts.values())


@pytest.mark.parametrize("G", [dicyclic(6), frobenius_metacyclic(2, 2, 3), sl23(), dihedral(9), alternating(5)])
def test_lemma_suite_has_no_failures(G):
    assert all(v.ok for v in check_lemma_suite(G))


def test_family_cases():
    one = construct_and_check_a6_family(8, 1)
    assert one.matched_case == "(1)" and one.computed_pv == Fraction(23, 24) and one.nv_matches
    two = construct_and_check_a6_family(8, 2)
    assert two.matched_case == "(2)" and two.computed_pv == Fraction(5, 6) and two.nv_matches
    assert two.generator in ("x", "x^-1")
    s3 = construct_and_check_a6_family(8, 0, "S3")
    assert s3.matched_case == "unclassified" and s3.computed_pv == Fraction(43, 48) and s3.ok


def test_family_setting_violations():
    G = semidirect([3, 3], cyclic(6), {1: [[-1, 0], [0, -1]]})
    with pytest.raises(SettingViolated):
        _setting_parts(G)
    with pytest.raises(SettingViolated):
        _setting_parts(semidirect([2, 2], cyclic(3), {1: [[0, 1], [1, 1]]}))


def test_nif_chain():
    assert check_nif_chain(abelian([2, 3])).status == "pass"
    v = check_nif_chain(symmetric(3))
    assert v.status == "pass" and "order 3" in v.detail
    with pytest.raises(NotApplicable):
        check_nif_chain(sl23())
    assert pv(sl23()) == Fraction(11, 12)
