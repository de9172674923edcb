import math
from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from oracles import brute_classes, cayley, class_structure_constants, is_prime
from vanishlab.chartab import (
    ClassFunction,
    character_degrees,
    character_table,
    choose_prime,
    induce,
    inertia_subgroup,
    inner_product,
    restrict,
    CharacterTable,
)
from vanishlab.cyclo import Cyclotomic
from vanishlab.errors import NotNormal, TooManyClasses
from vanishlab.groups import (
    abelian,
    alternating,
    dicyclic,
    dihedral,
    extraspecial,
    frobenius_metacyclic,
    p_core,
    quaternion,
    sl23,
    sylow,
    symmetric,
)

z = Cyclotomic.zeta
ONE = Cyclotomic.rational(1)

GROUPS = [
    abelian([3]),
    abelian([2, 4]),
    symmetric(3),
    quaternion(8),
    symmetric(4),
    alternating(4),
    alternating(5),
    dihedral(7),
    dicyclic(5),
    sl23(),
    extraspecial(3, 1, "+"),
    frobenius_metacyclic(5, 1, 4),
    frobenius_metacyclic(2, 2, 3),
]
IDS = [G.name for G in GROUPS]


def class_index(G, g):
    return int(G.classes.class_of[g])


@pytest.mark.parametrize("G", GROUPS, ids=IDS)
def test_central_characters_satisfy_class_algebra(G):
    """omega(C_i) omega(C_j) = sum_k a_ijk omega(C_k), computed from the Cayley table."""
    T = character_table(G)
    t = cayley(G)
    classes = brute_classes(t)
    a = class_structure_constants(t, classes)
    # column of our table for each brute-force class
    col = [class_index(G, min(c)) for c in classes]
    for i in range(len(T)):
        d = T.degrees[i]
        omega = [T.value(i, col[k]) * Fraction(len(classes[k]), d) for k in range(len(classes))]
        for x in range(len(classes)):
            for y in range(x, len(classes)):
                rhs = Cyclotomic.rational(0)
                for k in range(len(classes)):
                    if a[x, y, k]:
                        rhs = rhs + omega[k] * int(a[x, y, k])
                assert omega[x] * omega[y] == rhs


@pytest.mark.parametrize("G", GROUPS, ids=IDS)
def test_orthogonality_in_exact_arithmetic(G):
    T = character_table(G)
    rows = [T.row(i) for i in range(len(T))]
    for i, f in enumerate(rows):
        for j, g in enumerate(rows):
            assert inner_product(f, g) == Cyclotomic.rational(int(i == j))
    assert T.check_orthogonality()
    assert sum(d * d for d in T.degrees) == G.order


@pytest.mark.parametrize("G", GROUPS, ids=IDS)
def test_values_respect_galois_and_power_maps(G):
    T = character_table(G)
    cp = G.classes
    for j in range(len(T)):
        g = int(cp.reps[j])
        o = int(cp.rep_orders[j])
        for k in range(2, o):
            if math.gcd(k, o) != 1:
                continue
            jk = class_index(G, G.power(g, k))
            for i in range(len(T)):
                assert T.value(i, j).galois(k) == T.value(i, jk)


def test_known_tables():
    S3 = symmetric(3)
    T = character_table(S3)
    assert T.degrees == [1, 1, 2]
    orders = S3.classes.rep_orders.tolist()
    col = {o: orders.index(o) for o in (1, 2, 3)}
    assert [T.value(2, col[o]) for o in (1, 2, 3)] == [Cyclotomic.rational(v) for v in (2, 0, -1)]
    assert character_degrees(quaternion(8)) == [1, 1, 1, 1, 2]
    assert character_degrees(symmetric(4)) == [1, 1, 2, 3, 3]
    assert character_degrees(alternating(5)) == [1, 3, 3, 4, 5]
    assert character_degrees(sl23()) == [1, 1, 1, 2, 2, 2, 3]


def test_a5_golden_ratio_values():
    G = alternating(5)
    T = character_table(G)
    five = [j for j in range(len(T)) if G.classes.rep_orders[j] == 5]
    golden = ONE + z(5) + z(5, 4)  # (1 + sqrt5)/2
    assert abs(golden.to_complex() - (1 + 5**0.5) / 2) < 1e-12
    threes = [i for i in range(len(T)) if T.degrees[i] == 3]
    vals = {T.value(i, j) for i in threes for j in five}
    assert golden in vals
    assert all(v.conductor == 5 for v in vals)


def test_abelian_tables_never_vanish():
    T = character_table(abelian([2, 6]))
    assert not T.zero_mask().any()
    assert T.degrees == [1] * 12


def test_export_text_layout():
    text = character_table(symmetric(3)).export_text()
    lines = text.splitlines()
    assert lines[0].split("\t")[:2] == ["S3", "6"]
    assert len(lines) == 4
    assert lines[0].split("\t")[2:] == ["sizes=1,2,3", "orders=1,3,2"]
    assert sorted(lines[1:]) == ["1\t1\t-1", "1\t1\t1", "2\t-1\t0"]


def test_too_many_classes():
    with pytest.raises(TooManyClasses):
        CharacterTable(abelian([64]), max_classes=10)


@given(st.integers(1, 5000), st.sampled_from([1, 2, 4, 6, 12, 60, 420]))
def test_choose_prime(order, exponent):
    q = choose_prime(order, exponent)
    assert is_prime(q) and q % exponent == 1 % exponent and q * q > 4 * order


# -- induction and restriction ----------------------------------------------------


@pytest.mark.parametrize(
    "G,H",
    [
        (symmetric(4), lambda G: sylow(G, 2)),
        (symmetric(4), lambda G: sylow(G, 3)),
        (alternating(5), lambda G: sylow(G, 5)),
        (frobenius_metacyclic(5, 1, 4), lambda G: p_core(G, 5)),
    ],
)
def test_frobenius_reciprocity(G, H):
    S = H(G).as_group()
    TG = character_table(G)
    TS = character_table(S)
    for i in range(len(TS)):
        psi = TS.row(i)
        ind = induce(psi, G)
        assert ind.degree() == psi.degree() * (G.order // S.order)
        for k in range(len(TG)):
            chi = TG.row(k)
            assert inner_product(ind, chi) == inner_product(psi, restrict(chi, S))


def test_class_function_algebra():
    G = symmetric(3)
    T = character_table(G)
    sq = T.row(2) * T.row(2)
    # chi_2^2 = 1 + sign + chi_2
    assert sq == T.row(0) + T.row(1) + T.row(2)
    assert sq.conj() == sq
    with pytest.raises(ValueError):
        ClassFunction(G, [1, 2])


def test_inertia_subgroups():
    G = symmetric(4)
    V = p_core(G, 2)
    TV = character_table(V.as_group())
    orders = sorted(inertia_subgroup(G, V, i).order for i in range(len(TV)))
    assert orders == [8, 8, 8, 24]
    with pytest.raises(NotNormal):
        inertia_subgroup(G, sylow(G, 3), 0)
