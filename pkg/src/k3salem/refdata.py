"""Reference data for the verification cases in characteristic 7 and 17389.

Frozen inputs and expected outputs for the end-to-end checks: the
rank-4 block Grams, the known square-2 polarizations, the three
involution matrices for p = 7 with their singularity types, the
degree-22 Salem polynomial of their product, and the six base
vectors of the sigma = 10 construction at p = 17389.
"""

REFDATA_VERSION = 1

P7_GRAM_H = (
    (-2, -1, 0, 0),
    (-1, -6, 0, -2),
    (0, 0, -42, -7),
    (0, -2, -7, -2),
)

P7_H0 = (1, 1) + (0,) * 20

P7_H1 = (5, 5, -2, 3, 2, -11, -12, -8, -16, -24, -20, -15, -10, -5, -8, -5, -10, -15, -12, -9, -6, -3)

P7_H2 = (5, 5, -1, 0, 0, -2, -13, -9, -17, -25, -20, -15, -10, -5, -11, -7, -14, -21, -17, -13, -9, -5)

P7_H3 = (3, 6, -2, 2, 2, -9, -5, -4, -7, -10, -8, -6, -4, -2, 0, 0, 0, 0, 0, 0, 0, 0)

P7_SINGULARITIES = ("A4+A5+A7", "2A1+A7+A9", "A2+D7+E8")

P7_ROOT_COUNT_H0 = 486

P7_M1 = (
    (24, 24, -10, 15, 10, -55, -57, -38, -76, -114, -95, -71, -48, -24, -40, -25, -50, -75, -60, -45, -30, -15),
    (24, 24, -10, 15, 10, -55, -57, -38, -76, -114, -95, -72, -48, -24, -40, -25, -50, -75, -60, -45, -30, -15),
    (5, 5, -3, 3, 2, -11, -12, -8, -16, -24, -20, -15, -10, -5, -8, -5, -10, -15, -12, -9, -6, -3),
    (30, 30, -12, 17, 12, -66, -72, -48, -96, -144, -120, -90, -60, -30, -48, -30, -60, -90, -72, -54, -36, -18),
    (-35, -35, 14, -21, -15, 77, 84, 56, 112, 168, 140, 105, 70, 35, 56, 35, 70, 105, 84, 63, 42, 21),
    (10, 10, -4, 6, 4, -23, -24, -16, -32, -48, -40, -30, -20, -10, -16, -10, -20, -30, -24, -18, -12, -6),
    (0, 0, 0, 0, 0, 0, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0),
    (0, 0, 0, 0, 0, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0),
    (0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0),
    (0, 0, 0, 0, 0, 0, 0, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0),
    (4, 5, -2, 3, 2, -11, -10, -7, -14, -20, -16, -12, -8, -4, -8, -5, -10, -15, -12, -9, -6, -3),
    (1, -1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0),
    (0, 1, 0, 0, 0, 0, -3, -2, -4, -6, -5, -4, -3, -2, 0, 0, 0, 0, 0, 0, 0, 0),
    (0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0),
    (5, 5, -2, 3, 2, -11, -12, -8, -16, -24, -20, -15, -10, -5, -9, -6, -12, -18, -15, -12, -8, -4),
    (0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1),
    (0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 0),
    (0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 0, 0),
    (0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 0, 0, 0),
    (0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 0, 0, 0, 0),
    (0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 0, 0, 0, 0, 0),
    (0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 0, 0, 0, 0, 0, 0),
)

P7_M2 = (
    (6, 6, 0, 0, 0, -3, -15, -10, -20, -29, -24, -18, -12, -6, -12, -8, -16, -24, -20, -16, -12, -6),
    (6, 6, 0, 0, 0, -3, -15, -10, -20, -30, -24, -18, -12, -6, -12, -8, -16, -24, -20, -16, -12, -6),
    (0, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0),
    (6, 6, 1, -1, 0, -2, -16, -10, -20, -30, -24, -18, -12, -6, -12, -8, -16, -24, -20, -16, -12, -6),
    (21, 21, 0, 0, -1, -7, -56, -35, -70, -105, -84, -63, -42, -21, -42, -28, -56, -84, -70, -56, -42, -21),
    (6, 6, 0, 0, 0, -3, -16, -10, -20, -30, -24, -18, -12, -6, -12, -8, -16, -24, -20, -16, -12, -6),
    (0, 1, 0, 0, 0, -1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0),
    (0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1),
    (0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, -3, -2, -4, -6, -5, -4, -3, -2),
    (1, -1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0),
    (0, 1, 0, 0, 0, 0, -3, -2, -4, -6, -5, -4, -3, -2, 0, 0, 0, 0, 0, 0, 0, 0),
    (0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0),
    (0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0),
    (0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0),
    (0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 0, 0, 0, 0, 0, 0, 0),
    (0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 0, 0),
    (0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 0, 0, 0),
    (0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 0, 0, 0, 0),
    (0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 0, 0, 0, 0, 0),
    (0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 0, 0, 0, 0, 0, 0),
    (2, 2, 0, 0, 0, -1, -5, -4, -7, -10, -8, -6, -4, -2, -5, -4, -7, -10, -8, -6, -4, -2),
    (0, 0, 0, 0, 0, 0, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0),
)

P7_M3 = (
    (14, 27, -9, 9, 9, -42, -30, -24, -42, -60, -48, -36, -24, -12, 0, 0, 0, 0, 0, 0, 0, 0),
    (8, 14, -5, 5, 5, -23, -15, -12, -21, -30, -24, -18, -12, -6, 0, 0, 0, 0, 0, 0, 0, 0),
    (5, 9, -4, 3, 3, -14, -10, -8, -14, -20, -16, -12, -8, -4, 0, 0, 0, 0, 0, 0, 0, 0),
    (21, 39, -13, 12, 13, -60, -40, -32, -56, -80, -64, -48, -32, -16, 0, 0, 0, 0, 0, 0, 0, 0),
    (-49, -84, 28, -28, -29, 133, 105, 84, 147, 210, 168, 126, 84, 42, 0, 0, 0, 0, 0, 0, 0, 0),
    (1, 3, -1, 1, 1, -5, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0),
    (0, 0, 0, 0, 0, 0, 0, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0),
    (3, 6, -2, 2, 2, -9, -8, -5, -10, -15, -12, -9, -6, -3, 0, 0, 0, 0, 0, 0, 0, 0),
    (0, 0, 0, 0, 0, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0),
    (0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0),
    (0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0),
    (0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0),
    (0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0),
    (0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0),
    (0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 0, 0, 0, 0, 0, 0, 0),
    (0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 0, 0, 0, 0, 0, 0),
    (0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 0, 0, 0, 0, 0),
    (0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 0, 0, 0, 0),
    (0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 0, 0, 0),
    (0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 0, 0),
    (0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 0),
    (0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1),
)

P7_SALEM_COEFFS_DESC = (
    1, -993, -1152, -123, 924, 584, -500, -1022, -661, 105, 476, 878,
    476, 105, -661, -1022, -500, 584, 924, -123, -1152, -993, 1,
)

P7_SALEM_ROOT = 994.15889

P17389_GRAM_H = (
    (-2, -1, 0, 0),
    (-1, -30, 0, -4),
    (0, 0, -521670, -17389),
    (0, -4, -17389, -590),
)

# six square-2 vectors (a, 1, v) against the basis u1, u2, eta1..eta4
P17389_BASE_VECTORS = (
    (1, 1, 15, 31, 0, -3),
    (1, 1, 9, 18, -1, 25),
    (1, 1, 51, 4, 0, -7),
    (1, 1, 30, 29, 0, 3),
    (1, 1, 55, -4, 0, 7),
    (2, 1, 19, 23, -2, 56),
)

# leading digits of the Salem root of the product, times 10^100
P17389_ROOT_MANTISSA = 4.2539
P17389_ROOT_EXPONENT = 100
