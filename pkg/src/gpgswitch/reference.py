"""Published reference data for P(3,1), P(5,1) and P(7,1).

Signatures are written in the edge-name grammar of ``textio``. Labels are
the published ones; for P(7,1) the empty signature is labelled 1.
"""

SIGMAS = {
    3: {
        0: "",
        1: "u0-u1",
        2: "u0-v0",
        3: "u0-u1, v0-v1",
        4: "u0-u1, v1-v2",
        5: "u0-v0, u1-u2",
        6: "u0-v0, u1-v1",
        7: "u0-v0, u1-u2, v1-v2",
        8: "u0-v0, u1-v1, u2-v2",
    },
    5: {
        0: "",
        1: "u0-u1",
        2: "u0-v0",
        3: "u0-u1, v0-v1",
        4: "u0-u1, v1-v2",
        5: "u0-u1, u2-u3",
        6: "u0-u1, v2-u2",
        7: "u0-v0, u1-v1",
        8: "u0-u1, v2-v3",
        9: "u0-u1, v3-u3",
        10: "u0-v0, u2-v2",
        11: "u0-u1, v0-v1, u2-u3",
        12: "u0-u1, v1-v2, u2-u3",
        13: "u0-u1, v3-v4, u2-u3",
        14: "u0-v0, u1-u2, u3-u4",
        15: "u0-v0, u1-u2, v1-v2",
        16: "u0-v0, u1-u2, v2-v3",
        17: "u0-v0, u2-u3, v2-v3",
        18: "u0-v0, u1-v1, u2-u3",
        19: "u0-v0, v2-u2, u3-u4",
        20: "u0-v0, u1-v1, u2-v2",
        21: "u0-v0, u1-v1, u3-v3",
        22: "u0-u1, u2-u3, v0-v1, v2-v3",
        23: "u0-u1, u2-u3, v0-v1, v3-v4",
        24: "u0-u1, u2-u3, v1-v2, v3-v4",
        25: "u0-v0, u1-u2, u3-u4, v1-v2",
        26: "u0-v0, u1-u2, u3-u4, v3-v2",
        27: "u0-v0, u1-v1, u2-u3, v2-v3",
        28: "u0-v0, u1-v1, u2-u3, v3-v4",
        29: "u0-v0, u2-v2, u3-u4, v3-v4",
        30: "u0-v0, u1-v1, u2-v2, u3-u4",
        31: "u0-v0, u1-v1, u2-v2, u3-v3",
        32: "u0-v0, u1-u2, v1-v2, u3-u4, v3-v4",
        33: "u0-v0, u1-v1, u2-v2, u3-u4, v3-v4",
        34: "u0-v0, u1-v1, u2-v2, u3-v3, u4-v4",
    },
    7: {
        1: "",
        2: "u0-u1",
        3: "u0-v0",
        4: "u0-u1, v0-v1",
        5: "u0-u1, v1-v2",
        6: "u0-u1, v2-u2",
        7: "u0-u1, u2-u3",
        8: "u0-v0, u1-v1",
        9: "u0-u1, v2-v3",
        10: "u0-u1, v3-u3",
        11: "u0-v0, v2-u2",
        12: "u0-u1, u3-u4",
        13: "u0-u1, v3-v4",
        14: "u0-u1, v4-u4",
        15: "u0-v0, v3-u3",
        16: "u0-u1, u2-u3, u4-u5",
        17: "u0-u1, u2-u3, v4-v5",
        18: "u0-u1, u4-u3, v5-v6",
        19: "u0-v0, u1-u2, u3-u4",
        20: "u0-v0, u1-u2, u4-u5",
        21: "u0-v0, u1-u2, u5-u6",
        22: "u0-v0, u2-u3, u4-u5",
        23: "u0-v0, u1-u2, v2-v3",
        24: "u0-v0, u1-u2, v3-v4",
        25: "u0-v0, u1-u2, v4-v5",
        26: "u0-v0, u1-u2, v5-v6",
        27: "u0-v0, u2-u3, v3-v4",
        28: "u0-v0, u2-u3, v4-v5",
        29: "u0-v0, u2-u3, v5-v6",
        30: "u0-v0, u3-u4, v5-v6",
        31: "v0-u0, v1-u1, u3-u4",
        32: "v0-u0, v2-u2, u3-u4",
        33: "v0-u0, v2-u2, u4-u5",
        34: "v0-u0, v3-u3, u1-u2",
        35: "v0-u0, v3-u3, u4-u5",
        36: "v0-u0, v1-u1, u3-v3",
        37: "v0-u0, v1-u1, u4-v4",
        38: "v0-u0, v2-u2, u4-v4",
        39: "v0-u0, u1-u2, u3-u4, u5-u6",
        40: "v0-u0, u1-u2, u3-u4, v5-v6",
        41: "v0-u0, u1-u2, v3-v4, u5-u6",
        42: "v0-u0, v2-u2, u3-u4, u5-u6",
        43: "v0-u0, v2-u2, u3-u4, v5-v6",
        44: "v0-u0, v2-u2, u4-u5, v5-v6",
        45: "v0-u0, v3-u3, u1-u2, u4-u5",
        46: "v0-u0, v3-u3, u1-u2, v4-v5",
        47: "v0-u0, v3-u3, u4-u5, v5-v6",
        48: "v0-u0, v2-u2, v4-u4, u5-u6",
    },
}

# (source label, switching vertices, target label); the result of switching
# the source is claimed to be automorphic to the target.
RESIGNINGS = {
    3: [
        (6, "u0, u1, u2", 2),
        (7, "u1, v1, v0", 4),
        (8, "u0, u1, u2", 0),
    ],
    5: [
        (7, "u0, u1", 5),
        (11, "u1, u2, v1, v2", 1),
        (12, "u1, u2, v1", 6),
        (13, "u1, v1, u2, v2, v3", 9),
        (14, "u0, u1, u4", 10),
        (15, "u0, u1, v1", 4),
        (17, "u0, u1, u2, v1, v2", 4),
        (18, "u1, u2, u0", 9),
        (20, "u0, u1, u2", 5),
        (21, "u0, u1, u2, u3, u4", 10),
        (22, "u1, v1, u2, v2", 0),
        (23, "u1, u2, v1, v2, v3", 2),
        (24, "u1, u2, v2, v3", 6),
        (25, "u0, u1, u4, v0, v1, v4", 6),
        (26, "u0, u1, u4", 19),
        (27, "u0, u1, u2, v2", 8),
        (28, "u0, u1, u2", 16),
        (29, "u3, v2, v3", 16),
        (30, "u0, u1, u2, u4", 6),
        (31, "u0, u1, u2, u3, u4", 2),
        (32, "v2, u2, u3, v3", 2),
        (33, "u0, u1, u2, u3, v3", 8),
        (34, "u0, u1, u2, u3, u4", 0),
    ],
    7: [
        (8, "u0, u1", 7),
        (17, "u1, v1, u2, v2", 16),
        (18, "u0, v0, u6, v6", 17),
        (20, "u1, u0", 19),
        (21, "u1, u0, u6", 11),
        (25, "u0, u1", 24),
        (26, "v1, v0, v6, u1", 23),
        (29, "v6, v0", 24),
        (30, "v6, v0", 25),
        (31, "u0, u1", 16),
        (34, "u2, u3", 32),
        (36, "u0, u1", 19),
        (37, "u0, u1", 22),
        (39, "u6, u0, u1", 33),
        (40, "u0, u1, u4, u5, u6, v4, v5", 33),
        (41, "u0, u1, u6", 33),
        (42, "u0, u1, u2, u3, u6, v4, v5", 38),
        (44, "u0, u5, u6, v5", 46),
        (45, "u0, u1", 42),
        (46, "u2, u3", 43),
        (47, "u4, v5, v4, v3", 44),
    ],
}

# Forbidden triples of P(7,1) with the vertex sets that reduce them.
FORBIDDEN = [
    ("1", "u0-u1, v0-v1, v2-u2", "u1, v1, v2"),
    ("2", "u0-u1, v1-v2, u2-u3", "u1, v2, u2"),
    ("3", "u0-u1, v1-v2, v4-v5", "u1, v2, u2, u3, u4, v3, v4"),
    ("4", "u0-u1, v0-v1, u3-u4", "u1, v1, u2, v2, v3, u3"),
    ("5", "u0-u1, v0-v6, u3-u4", "v0, u1, v1, u2, v2, u3, v3"),
    ("6", "u0-v0, u1-v1, v2-v3", "v1, v2, v0"),
    ("7", "u0-v0, u1-v1, u2-v2", "u0, u1, u2"),
]

# Negative-cycle counts per orbit: (C3, C4) for P(3,1), (C4, C5, C6) for
# P(5,1), (C4, C6, C7, C8) for P(7,1).
TABLE_LENGTHS = {3: (3, 4), 5: (4, 5, 6), 7: (4, 6, 7, 8)}

TABLES = {
    3: {
        0: (0, 0), 1: (1, 1), 2: (0, 2), 3: (2, 0), 4: (2, 2), 5: (1, 3),
    },
    5: {
        0: (0, 0, 0), 1: (1, 1, 2), 2: (2, 0, 2), 3: (0, 2, 0),
        4: (2, 2, 2), 5: (2, 0, 4), 6: (3, 1, 2), 8: (2, 2, 4),
        9: (3, 1, 4), 10: (4, 0, 2), 16: (4, 2, 2), 19: (5, 1, 0),
    },
    7: {
        1: (0, 0, 0, 0), 2: (1, 2, 1, 3), 3: (2, 2, 0, 2), 4: (0, 0, 2, 0),
        5: (2, 2, 2, 2), 6: (3, 2, 1, 3), 7: (2, 4, 0, 4), 9: (2, 4, 2, 4),
        10: (3, 4, 1, 3), 11: (4, 2, 0, 4), 12: (2, 4, 0, 6), 13: (2, 4, 2, 6),
        14: (3, 4, 1, 5), 15: (4, 4, 0, 2),
        16: (3, 6, 1, 5), 19: (4, 4, 0, 4), 22: (4, 6, 0, 2), 23: (4, 2, 2, 4),
        24: (4, 4, 2, 4), 27: (4, 4, 2, 2), 28: (4, 6, 2, 2), 32: (5, 2, 1, 5),
        33: (5, 4, 1, 3), 35: (5, 4, 1, 1), 38: (6, 2, 0, 4), 43: (6, 2, 2, 4),
        47: (7, 0, 1, 6),
    },
}

# Orbit counts and matching-type counts (size -> count up to automorphism).
ORBIT_COUNTS = {3: 6, 5: 12, 7: 27}
MATCHING_TYPES = {
    3: {1: 2, 2: 4, 3: 2},
    5: {1: 2, 2: 8, 3: 11, 4: 10, 5: 3},
    7: {2: 12},
}
# Counts obtained after discarding forbidden matchings; reported, not gated.
MATCHING_TYPES_EXCLUDING_FORBIDDEN = {7: {3: 23, 4: 10}}
