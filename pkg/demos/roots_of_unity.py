"""Exact cyclotomic arithmetic and the classification of short vanishing sums."""

from vanishlab import Cyclotomic, classify_zero_sum, parse_roots, root, sigma_six_test
from vanishlab.cyclo import RootOfUnity, vanishing_sum_feasible

z = Cyclotomic.zeta

print("zeta_3 + zeta_3^2 =", z(3) + z(3, 2))
print("zeta_2 * zeta_3   =", z(2) * z(3), "(stored at conductor", (z(2) * z(3)).conductor, ")")
print("zeta_8 + zeta_8^5 is zero:", (z(8) + z(8, 5)).is_zero())

# which lengths admit a vanishing sum in U_m?
for m in (9, 10, 12):
    print(f"lengths with a zero sum in U_{m}:", [k for k in range(1, 9) if vanishing_sum_feasible(k, m)])

for text in ("z3 z3^2 1", "z4 -z4 1 -1", "z5 z5^2 z5^3 z5^4 z6 z6^5", "1 -1 z8 -z8 z3 -z3"):
    print(f"{text:28s} ->", classify_zero_sum(parse_roots(text)).describe())

i, m1, one = root(4), RootOfUnity(2, 1), RootOfUnity(1, 0)
v = sigma_six_test([i, -i, one], [m1, m1, one])
print("eps = (i, -i, 1), eta = (-1, -1, 1): zero =", v.is_zero, "witness =", [str(w) for w in v.witness])
