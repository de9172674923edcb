"""(C8 x C8) extended by C6 or S3: the two involution twists and their
vanishing proportions."""

from vanishlab import construct_and_check_a6_family

for case, complement in ((1, "C6"), (2, "C6"), (0, "S3")):
    r = construct_and_check_a6_family(8, case, complement)
    print(
        f"{complement} twist {case}: order {r.parameters['order']}, case {r.matched_case}, "
        f"predicted {r.predicted_pv}, computed {r.computed_pv}, N_v = {r.nv_expected} ({r.nv_matches})"
    )
