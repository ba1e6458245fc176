"""Reference data transcribed by hand, kept apart from :mod:`wallach.catalog`.

The acceptance checks compare the catalog against these literals, so the
two must never share code.
"""
from __future__ import annotations

# line -> (params at the smallest admissible values, (d1, d2, d3), (a1, a2, a3) as "p/q")
TABLE1_FIXTURE = {
    1: ((1, 1, 1), (1, 1, 1), ("1/2", "1/2", "1/2")),
    2: ((1, 1, 1), (2, 2, 2), ("1/6", "1/6", "1/6")),
    3: ((1, 1, 1), (4, 4, 4), ("1/8", "1/8", "1/8")),
    4: ((2,), (2, 6, 3), ("3/8", "1/8", "1/4")),
    5: ((4,), (6, 6, 6), ("1/6", "1/6", "1/6")),
    6: ((), (16, 16, 24), ("1/4", "1/4", "1/6")),
    7: ((), (16, 16, 16), ("1/6", "1/6", "1/6")),
    8: ((), (14, 28, 12), ("1/4", "1/8", "7/24")),
    9: ((), (32, 32, 32), ("2/9", "2/9", "2/9")),
    10: ((), (30, 40, 24), ("2/9", "1/6", "5/18")),
    11: ((), (35, 35, 35), ("5/18", "5/18", "5/18")),
    12: ((), (64, 64, 48), ("1/5", "1/5", "4/15")),
    13: ((), (64, 64, 64), ("4/15", "4/15", "4/15")),
    14: ((), (8, 8, 20), ("5/18", "5/18", "1/9")),
    15: ((), (8, 8, 8), ("1/9", "1/9", "1/9")),
}

# a few more parametric evaluations of the Table 1 formulas
TABLE1_EXTRA = {
    (1, (2, 2, 1)): ((4, 2, 2), ("1/6", "1/3", "1/3")),
    (1, (3, 2, 1)): ((6, 3, 2), ("1/8", "1/4", "3/8")),
    (2, (2, 1, 1)): ((4, 4, 2), ("1/8", "1/8", "1/4")),
    (3, (1, 1, 2)): ((4, 8, 8), ("1/5", "1/10", "1/10")),
    (4, (3,)): ((6, 12, 8), ("1/3", "1/6", "1/4")),
    (5, (5,)): ((8, 8, 12), ("3/16", "3/16", "1/8")),
}

# Table 2 filter outcomes from the case analysis of the classification proof.
# Lines with no parameters: accepted target line or None.
TABLE2_EXCEPTIONAL = {
    14: None, 15: 6, 16: None, 17: 7, 18: 8, 19: None, 20: None, 21: None, 22: None,
    23: 9, 24: None, 25: 10, 26: None, 27: None, 28: None, 29: 11, 30: None, 31: 12,
    32: None, 33: 13, 34: None, 35: 14, 36: 15, 37: None,
}

ALWAYS_REJECT = (1, 3, 5, 7, 9, 10, 11, 12)


def expected_table2(line: int, params: tuple) -> tuple[int | None, tuple]:
    """Expected ``(table1_line, table1_params)`` for a classical Table 2 line."""
    if line in ALWAYS_REJECT:
        return None, ()
    if line == 2:
        (p,) = params
        return (4, (p,)) if p >= 2 else (None, ())
    if line in (4, 6, 13):
        nonzero = tuple(x for x in params if x)
        target = {4: 2, 6: 1, 13: 3}[line]
        return (target, nonzero) if len(nonzero) == 3 else (None, ())
    if line == 8:
        p, q = params
        if p >= 1 and q >= 1 and (p == 1 or q == 1) and p + q >= 4:
            return 5, (p + q,)
        return None, ()
    raise KeyError(line)


CLASSICAL_PARAM_COUNT = {1: 2, 2: 1, 3: 2, 4: 4, 5: 1, 6: 4, 7: 1, 8: 2, 9: 1, 10: 1, 11: 2, 12: 1, 13: 4}

# Killing table as printed: name -> (dim, B(beta_max, beta_max))
TABLE3_FIXTURE = {
    "g2": (14, 16),
    "f4": (52, 36),
    "e6": (78, 48),
    "e7": (133, 72),
    "e8": (248, 120),
    "so(9)": (36, 28),
    "so(16)": (120, 56),
    "su(8)": (63, 32),
    "sp(3)": (21, 16),
}
