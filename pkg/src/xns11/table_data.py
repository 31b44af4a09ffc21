"""Published table of j-values at the points [n]P, -6 <= n <= 6.

Each row: (sign, numerator factors, denominator factors, CM discriminant,
discriminant of the quadratic field K).  Kept as plain data so computed
rows can be compared against it.
"""

REFERENCE_TABLE = {
    6: (1, {2: 3, 3: 9, 5: 3, 11: 3, 17: 6, 29: 3, 53: 3, 191: 3}, {769: 11}, None, -3 * 14327),
    5: (-1, {2: 18, 3: 3, 5: 3, 23: 3, 29: 3}, {}, -163, -163),
    4: (0, {}, {}, -3, -3),
    3: (1, {2: 6, 3: 3}, {}, -4, -1),
    2: (-1, {2: 15, 3: 3, 5: 3, 11: 3}, {}, -67, -67),
    1: (1, {2: 4, 3: 3, 5: 3}, {}, -12, -3),
    0: (1, {2: 3, 3: 3, 11: 3}, {}, -16, -1),
    -1: (-1, {2: 15, 3: 1, 5: 3}, {}, -27, -3),
    -2: (1, {2: 8, 3: 3, 5: 6, 11: 3, 53: 3}, {23: 11}, None, -67),
    -3: (-1, {2: 9, 3: 3, 5: 3, 13: 1, 71: 3, 181: 3}, {43: 11}, None, -3),
    -4: (1, {2: 18, 3: 3, 5: 3, 7: 1, 11: 3, 23: 3, 29: 3, 103: 3}, {67: 11}, None, -3),
    -5: (-1, {2: 4, 3: 3, 5: 1, 17: 6, 29: 3, 367: 3, 2381: 3}, {397: 11}, None, -163),
    -6: (
        -1,
        {2: 3, 3: 1, 11: 3, 17: 6, 19: 1, 23: 3, 41: 3, 53: 3, 167: 3, 2777: 3, 23431: 3},
        {80233: 11},
        None,
        -3 * 14327,
    ),
}
