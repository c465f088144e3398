"""Golden values for the 7- and 9-petal Gauss codes and the Stevedore knot."""

NINE_L = [0, 1, 2, 2, 1, 0] * 9
NINE_A = [0, 0, 0, 1, 2, 3] * 9
NINE_N = [
    1, 1, 1, 2, 3, 4, 5, 5, 5, 6, 7, 8, 9, 9, 9, 1, 2, 3,
    4, 4, 4, 5, 6, 7, 8, 8, 8, 9, 1, 2, 3, 3, 3, 4, 5, 6,
    7, 7, 7, 8, 9, 1, 2, 2, 2, 3, 4, 5, 6, 6, 6, 7, 8, 9,
]
NINE_UNSIGNED = [
    1, 10, 19, 20, 12, 4, 5, 14, 23, 24, 16, 8, 9, 18, 27, 19, 11, 3,
    4, 13, 22, 23, 15, 7, 8, 17, 26, 27, 10, 2, 3, 12, 21, 22, 14, 6,
    7, 16, 25, 26, 18, 1, 2, 11, 20, 21, 13, 5, 6, 15, 24, 25, 17, 9,
]

NINE_PARTNER = [
    41, 28, 15, 44, 31, 18, 47, 34, 21, 50, 37, 24, 53, 40, 27, 2, 43, 30,
    5, 46, 33, 8, 49, 36, 11, 52, 39, 14, 1, 42, 17, 4, 45, 20, 7, 48,
    23, 10, 51, 26, 13, 0, 29, 16, 3, 32, 19, 6, 35, 22, 9, 38, 25, 12,
]
# signed row as printed in the source; its entry 41 is missing a minus sign
# (the second visit of crossing 1 is an underpass, see STEVEDORE_CODE)
PRINTED_SIGNED_TYPO_INDEX = 41
PRINTED_SIGNED = [
    1, 10, 19, 20, 12, 4, 5, 14, -23, 24, 16, 8, 9, 18, 27, -19, 11, -3,
    -4, 13, 22, 23, 15, 7, -8, -17, -26, -27, -10, 2, 3, -12, 21, -22, -14, 6,
    -7, -16, 25, 26, -18, 1, -2, -11, -20, -21, -13, -5, -6, -15, -24, -25, 17, -9,
]
STEVEDORE_CODE = [
    1, 10, 19, 20, 12, 4, 5, 14, -23, 24, 16, 8, 9, 18, 27, -19, 11, -3, -4, 13, 22, 23,
    15, 7, -8, -17, -26, -27, -10, 2, 3, -12, 21, -22, -14, 6, -7, -16, 25, 26, -18, -1,
    -2, -11, -20, -21, -13, -5, -6, -15, -24, -25, 17, -9,
]

# (layer, index) pairs along the 7- and 9-petal split projections
PAIRS_7 = [
    (0, 1), (1, 1), (1, 2), (0, 3), (0, 4), (1, 4), (1, 5), (0, 6), (0, 7), (1, 7), (1, 1), (0, 2),
    (0, 3), (1, 3), (1, 4), (0, 5), (0, 6), (1, 6), (1, 7), (0, 1), (0, 2), (1, 2), (1, 3), (0, 4),
    (0, 5), (1, 5), (1, 6), (0, 7),
]
PAIRS_9 = [
    (0, 1), (1, 1), (2, 1), (2, 2), (1, 3), (0, 4), (0, 5), (1, 5), (2, 5),
    (2, 6), (1, 7), (0, 8), (0, 9), (1, 9), (2, 9), (2, 1), (1, 2), (0, 3),
    (0, 4), (1, 4), (2, 4), (2, 5), (1, 6), (0, 7), (0, 8), (1, 8), (2, 8),
    (2, 9), (1, 1), (0, 2), (0, 3), (1, 3), (2, 3), (2, 4), (1, 5), (0, 6),
    (0, 7), (1, 7), (2, 7), (2, 8), (1, 9), (0, 1), (0, 2), (1, 2), (2, 2),
    (2, 3), (1, 4), (0, 5), (0, 6), (1, 6), (2, 6), (2, 7), (1, 8), (0, 9),
]
