"""Frozen 50-digit reference values; regenerate with tools/make_reference_values.py."""

Q_PRIME_05 = 0.10000000000000000
P_PRIME_05 = 0.16666666666666667
GAMMA_05 = 0.95000000000000000
C_05 = 0.47500000000000000
N0_05 = 649.62224834992985
N0_01 = 26540.958848326489
N1_05 = 900.00000000000000
N2_05 = 649.62224834992985
N2_BRANCH_05 = 81.754012113436855
MU1_05 = 0.90220576310316502
MU2_05 = 0.89157415774952093
MU2_AT_1 = 0.90832691319598394
MU2_CLOSED_AT_1 = 0.90832691319598394
K1_05 = 1.0310090741640402
K2_05 = 1.0340571724069825
K_PRIME_05 = 1.0310090741640402
R_05 = 0.0076674737691686844
R_PRIME_05 = 0.0059375000000000000
ALPHA_05 = 4.7342060126031367
ALPHA_PRIME_05 = 4.7163502207723490
N3_EXACT_05 = 902.39376045385917
N3_ESTIMATE_05 = 7594597.9759759285
FINAL_05 = 42598400.000000000
SMALL_05 = 320.66666666666667
MEAN_QUARTER_05_650 = 0.10854907934013380
MEAN_INF_05_10 = 1.1754341305156951
MEAN_INF_05_650 = 0.10829579839896366
SENDOV_DIST_05_ROOTS_OF_UNITY = 0.29621793413114551
SENDOV_DIST_05_NEG_ROOTS = 0.46059922322064422

FINAL_BOUND_TABLE = {
    0.1: 317024843773.81497,
    0.2: 3967285156.2500000,
    0.3: 396116006.38127651,
    0.4: 97957658.179012346,
    0.5: 42598400.000000000,
    0.6: 29024491.312299954,
    0.7: 31181143.359459084,
    0.8: 61988830.566406250,
    0.9: 434876328.90783946,
}
