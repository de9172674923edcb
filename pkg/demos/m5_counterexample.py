"""The group of order 6480 where nonvanishing elements are not closed under
products, and where the p-part reduction fails at index 5."""

from vanishlab import induced_vanishing_criterion, nonvanishing_structure
from vanishlab.groups import m5_group, p_core
from vanishlab.vanish import nv_product_witness, ppart_exclusion_witness

G = m5_group()
U, V = p_core(G, 2), p_core(G, 3)
rep = nonvanishing_structure(G)
print(f"order {G.order}, |O_2| = {U.order}, |O_3| = {V.order}")
print(f"pv = {rep.pv}, N_v has {G.order - rep.vanishing_count} elements, subgroup: {rep.nv_is_subgroup}")
x, y, xy = nv_product_witness(G)
print(f"x = {x} and y = {y} are nonvanishing, xy = {xy} vanishes")
w = ppart_exclusion_witness(G)
print("index-5 witness:", w)
F = U.join(V)
print("some character of F induces to zero at uv:", induced_vanishing_criterion(G, F, w["uv"]))
print("and at u:", induced_vanishing_criterion(G, F, w["u"]))
