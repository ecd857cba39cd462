"""Frozen reference data shared by the test modules.

REFERENCE_ORBITS maps a period n to (point, L, Q): a surface given by its
bilinear and biquadratic coefficient vectors together with a rational point
of primitive period exactly n under the composed map.  The period-6 surface
carries a second known orbit of period 2 (EXTRA_TWO_PERIODIC).

COUNT_SURFACE_* is the surface whose F_{3^m} point counts KNOWN_COUNTS_P3
(m = 1..11) and zeta data below were computed; SYMMETRIC_C, P2_COEFFS and
the FACTOR_A * FACTOR_B splitting of P2 are frozen from an independent run
of the whole pipeline, cross-checked against the published splitting.

POWER_SUM_RELATIONS encodes the recurrences P_k = N_k + sum(a_j P_j) + c
as {k: (c, {j: a_j})}; they are the independent oracle for the closed-form
power-sum computation and hold identically in the counts.
"""

REFERENCE_ORBITS = {
    1: (((0, 0, 1), (1, 0, 1)),
        (-1, 1, 1, 0, -1, -2, 0, 1, 0),
        (-2, -1, -1, 1, -2, 0, 1, -2, -1, 0, 1, -1, 1, 1, 1, 0, -2, -2,
         -1, -2, -1, -2, -2, 1, 0, -2, -1, 1, -1, -1, 1, 1, -2, 1, 1, 1)),
    2: (((3, 1, 3), (1, 0, 0)),
        (1, -3, 2, 0, 1, -3, -1, -3, -1),
        (-2, -4, -2, -2, -3, 2, 0, -2, 0, 1, -2, 0, 1, 2, 1, -4, 0, 0,
         3, 2, -3, 1, -2, 1, -4, -2, 1, 1, 2, 2, 2, -1, 1, 2, -4, 0)),
    3: (((1, -1, 0), (1, 0, 0)),
        (0, -2, 0, 0, -2, 1, 1, -1, -2),
        (0, 1, 0, 1, -1, -2, -1, 0, 0, 0, -1, -2, -2, 1, -1, -1, -1, 1,
         -1, -2, -1, -1, 0, 1, 1, 0, -2, -2, 1, 1, -2, -2, -2, -2, 1, -2)),
    4: (((1, 0, -1), (1, -1, 0)),
        (-1, -1, 0, -1, 0, -1, 0, 0, -1),
        (-1, 0, -1, 0, 0, -1, -1, 0, -1, 0, 0, -1, -1, 0, 0, 0, 0, 0,
         0, 0, 0, -1, 0, -1, 0, -1, 0, 0, -1, 0, 0, -1, 0, -1, 0, 0)),
    5: (((1, -1, 0), (1, 0, 1)),
        (0, 0, -1, -1, 0, 0, 0, -1, -1),
        (-1, -1, 0, 0, 0, 0, -1, 0, 0, 0, -1, -1, 0, 0, -1, 0, 0, 0,
         0, -1, 0, -1, 0, -1, -1, 0, -1, 0, -1, -1, -1, -1, 0, 0, 0, -1)),
    6: (((1, 0, 0), (1, 0, 0)),
        (0, 0, -1, -1, 0, -1, 0, -1, 0),
        (0, 0, 0, -1, 0, -1, -1, 0, 0, 0, -1, -1, -1, -1, 0, 0, -1, -1,
         0, -1, 0, 0, 0, 0, 0, -1, 0, 0, -1, 0, 0, 0, -1, 0, 0, 0)),
    7: (((1, -2, 1), (1, -1, -1)),
        (0, -1, 0, -1, 0, -1, -1, 0, 0),
        (-1, -1, -1, -1, 0, 0, 0, 0, -1, -1, -1, -1, -1, 0, 0, 0, 0, 0,
         0, 0, -1, -1, 0, 0, 0, -1, -1, -1, 0, -1, 0, 0, 0, -1, -1, -1)),
    8: (((1, 0, 0), (1, 0, 0)),
        (0, 0, -1, -1, -1, 0, 0, -1, -1),
        (0, -1, 0, -1, -1, 0, 0, 0, 0, -1, -1, -1, -1, -1, 0, 0, -1, -1,
         0, 0, -1, -1, -1, 0, 0, 0, -1, -1, -1, 0, 0, -1, -1, 0, 0, -1)),
    9: (((0, 1, 0), (1, 0, 0)),
        (-1, 0, 0, 0, 0, -1, 0, -1, 0),
        (-1, 0, 0, -1, -1, -1, -1, 0, -1, -1, -1, -1, 0, 0, -1, -1, -1, -1,
         0, -1, -1, 0, 0, 0, -1, -1, 0, -1, -1, 0, 0, -1, -1, -1, 0, 0)),
    10: (((1, -1, 0), (0, 1, -1)),
         (0, -1, 0, -1, -1, 0, 0, -1, -1),
         (-1, -1, 0, 0, 0, 0, 0, 0, 0, 0, -1, -1, -1, 0, 0, -1, -1, -1,
          0, 0, 0, -1, -1, 0, -1, 0, -1, 0, -1, 0, -1, -1, -1, 0, 0, 0)),
    11: (((1, 0, -1), (-2, 1, 0)),
         (-1, 0, 0, -1, -1, -1, -1, 0, -1),
         (0, -1, 0, -1, -1, 0, 0, 0, -1, -1, 0, -1, 0, 0, 0, 0, -1, 0,
          0, 0, 0, -1, -1, 0, -1, -1, -1, 0, 0, -1, 0, 0, -1, -1, -1, -1)),
    12: (((2, 1, -2), (0, -2, 1)),
         (-1, -1, -1, -1, -1, 0, 0, -1, 0),
         (0, -1, 0, 0, 0, 0, -1, 0, 0, -1, 0, 0, 0, 0, -1, -1, -1, -1,
          -1, -1, 0, -1, -1, 0, -1, -1, 0, -1, 0, -1, -1, 0, -1, -1, -1, -1)),
    13: (((0, 1, 0), (1, -1, -1)),
         (0, -1, 0, -1, -1, 0, -1, 0, -1),
         (-1, 0, -1, -1, 0, 0, -1, 0, -1, 0, 0, -1, 0, -1, 0, 0, -1, -1,
          -1, 0, -1, 0, 0, 0, 0, -1, 0, -1, -1, -1, 0, -1, 0, 0, 0, -1)),
    14: (((0, -2, -1), (-1, -3, 2)),
         (0, -1, -1, -1, 0, 0, 0, 0, -1),
         (0, 0, -1, -1, 0, 0, 0, -1, 0, 0, 0, 0, -1, -1, -1, -1, -1, 0,
          -1, -1, -1, 0, -1, 0, 0, -1, 0, 0, 0, -1, -1, 0, -1, -1, -1, 0)),
    15: (((1, 1, 0), (1, -1, -1)),
         (-1, -1, 0, -1, 0, -1, 0, -1, -1),
         (0, -1, -1, 0, 0, 0, -1, 0, 0, 0, -1, 0, 0, -1, 0, 0, -1, -1,
          -1, -1, -1, 0, 0, -1, 0, 0, -1, -1, 0, 0, -1, -1, 0, 0, -1, 0)),
    16: (((1, 0, -1), (1, -1, 0)),
         (-1, -1, 0, -1, 0, 0, 0, 0, -1),
         (0, 0, -1, -1, 0, 0, -1, 0, -1, 0, -1, -1, -1, 0, 0, 0, -1, 0,
          -1, 0, -1, 0, 0, -1, 0, 0, -1, -1, 0, 0, -1, -1, -1, 0, 0, 0)),
}

# second known orbit on the period-6 surface
EXTRA_TWO_PERIODIC = ((0, 1, 0), (1, 0, -1))

COUNT_SURFACE_L = (1, 0, 0, 0, 1, 0, 0, 0, 1)
COUNT_SURFACE_Q = (2, 2, 2, 0, 1, 1, 1, 2, 1, 1, 2, 1, 0, 0, 2, 2, 2, 2,
                   0, 1, 0, 2, 0, 2, 2, 0, 2, 1, 1, 1, 0, 1, 0, 0, 0, 0)

KNOWN_COUNTS_P3 = (13, 97, 784, 6877, 60238, 533440, 4782322,
                   43047613, 387464230, 3486563272, 31382110828)

# P_k = N_k + sum(a_j * P_j) + c, stored as {k: (c, {j: a_j})}
POWER_SUM_RELATIONS = {
    1: (-10, {}),
    2: (116, {}),
    3: (-730, {1: 27}),
    4: (-8344, {2: 36}),
    5: (-59050, {3: 45, 1: -405}),
    6: (-515404, {4: 54, 2: -729}),
    7: (-4782970, {5: 63, 3: -1134, 1: 5103}),
    8: (-43191064, {6: 72, 4: -1620, 2: 11664}),
    9: (-387420490, {7: 81, 5: -2187, 3: 21870, 1: -59049}),
    10: (-3485485324, {8: 90, 6: -2835, 4: 36450, 2: -164025}),
    11: (-31381059610, {9: 99, 7: -3564, 5: 56133, 3: -360855, 1: 649539}),
}

SYMMETRIC_C = (3, -102, -270, 3780, 8505, -60507, -110808,
               373977, 551124, -472392, -472392)

P2_COEFFS = (1, -3, -3, 0, -27, 0, 486, 1458, 0, -6561, 19683,
             -236196, 177147, -531441, 0, 9565938, 28697814, 0,
             -129140163, 0, -1162261467, -10460353203, 31381059609)

# P2 splits over Z into a quadratic and a degree-20 factor (ascending)
FACTOR_A = (1, -6, 9)
FACTOR_B = (1, 3, 6, 9, -27, -243, -729, -729, 2187, 13122, 78732,
            118098, 177147, -531441, -4782969, -14348907, -14348907,
            43046721, 258280326, 1162261467, 3486784401)


def surface_json(n):
    """The surface of REFERENCE_ORBITS[n] in the shape parse_surface takes."""
    _, L, Q = REFERENCE_ORBITS[n]
    return {"L": list(L), "Q": list(Q)}


def count_surface_json():
    return {"L": list(COUNT_SURFACE_L), "Q": list(COUNT_SURFACE_Q)}
