"""Displayed values of the E6 bracket, transcribed in :mod:`notation` syntax."""

# Six 3x3 blocks, keyed by (row block, column block).  Rows are the left
# factor (1,0,0), (0,1,0), (0,0,1); columns the right factor likewise.
E6_TABLE = {
    (0, 1): [
        ["(wb,1,1)_3-(1,wb,wb)_9", "(wb,1,1)_3-(1,wb,wb)_9", "(wb,1,1)_3-(1,wb,wb)_9"],
        ["(1,wb,1)_3-(w,w,wb)_9", "(wb,w,wb)_3-(1,1,w)_9", "(w,1,w)_3-(wb,wb,1)_9"],
        ["(1,1,wb)_3-(w,wb,w)_9", "(w,w,1)_3-(wb,1,wb)_9", "(wb,wb,w)_3-(1,w,1)_9"],
    ],
    (0, 3): [
        ["(w,1,1)_9-(w,w,w)_1", "(1,wb,wb)_9-(1,1,1)_1", "(1,wb,wb)_9-(1,1,1)_1"],
        ["(w,w,wb)_9-(1,w,wb)_1", "(wb,wb,1)_9-(w,wb,1)_1", "(w,w,wb)_9-(1,w,wb)_1"],
        ["(w,wb,w)_9-(1,wb,w)_1", "(w,wb,w)_9-(1,wb,w)_1", "(wb,1,wb)_9-(w,1,wb)_1"],
    ],
    (0, 9): [
        ["(1,1,1)_1-(wb,1,1)_3", "(w,w,w)_1-(1,w,w)_3", "(w,w,w)_1-(1,w,w)_3"],
        ["(wb,1,w)_1-(wb,w,wb)_3", "(wb,1,w)_1-(wb,w,wb)_3", "(w,wb,1)_1-(w,1,w)_3"],
        ["(wb,w,1)_1-(wb,wb,w)_3", "(w,1,wb)_1-(w,w,1)_3", "(wb,w,1)_1-(wb,wb,w)_3"],
    ],
    (1, 3): [
        ["(w,1,1)_0-(wb,wb,wb)_9", "(1,w,1)_0-(w,1,wb)_9", "(1,1,w)_0-(w,wb,1)_9"],
        ["(w,w,wb)_0-(1,wb,w)_9", "(1,wb,wb)_0-(w,wb,1)_9", "(1,w,1)_0-(1,1,1)_9"],
        ["(w,wb,w)_0-(1,w,wb)_9", "(1,1,w)_0-(1,1,1)_9", "(1,wb,wb)_0-(w,1,wb)_9"],
    ],
    (3, 9): [
        ["(wb,wb,wb)_0-(wb,1,1)_1", "(1,w,wb)_0-(wb,w,wb)_1", "(1,wb,w)_0-(wb,wb,w)_1"],
        ["(w,w,w)_0-(1,wb,1)_1", "(1,w,wb)_0-(w,w,1)_1", "(w,1,wb)_0-(wb,1,1)_1"],
        ["(w,w,w)_0-(1,1,wb)_1", "(w,wb,1)_0-(wb,1,1)_1", "(1,wb,w)_0-(w,1,w)_1"],
    ],
    (9, 1): [
        ["(1,w,w)_0-(wb,w,w)_3", "(1,1,wb)_0-(1,w,1)_3", "(1,wb,1)_0-(1,1,w)_3"],
        ["(wb,w,wb)_0-(wb,1,wb)_3", "(wb,1,1)_0-(wb,wb,1)_3", "(wb,wb,w)_0-(w,1,1)_3"],
        ["(wb,wb,w)_0-(wb,wb,1)_3", "(wb,w,wb)_0-(w,1,1)_3", "(wb,1,1)_0-(wb,1,wb)_3"],
    ],
}

SEEDS = [
    ("(1,0,0)_0", "(1,0,0)_1", "(wb,1,1)_3-(1,wb,wb)_9"),
    ("(1,0,0)_1", "(1,0,0)_9", "-(1,w,w)_0+(wb,w,w)_3"),
]

# Products displayed while checking invariance under c (x, y, [x, y]).
C_CHECK_PRODUCTS = [
    ("(1,0,0)_0", "(1,0,0)_1", "(wb,1,1)_3-(1,wb,wb)_9"),
    ("(1,0,0)_T", "(1,0,0)_0", "(wb,1,1)_2-(1,wb,wb)_8"),
    ("(1,0,0)_9", "(1,0,0)_X", "(wb,1,1)_T-(1,wb,wb)_5"),
    ("(1,0,0)_1", "(1,0,0)_3", "(w,1,1)_0-(wb,wb,wb)_9"),
    ("(1,0,0)_X", "(1,0,0)_T", "(w,1,1)_9-(wb,wb,wb)_5"),
    ("(1,0,0)_T", "(1,0,0)_1", "(w,1,1)_E-(wb,wb,wb)_7"),
    ("(1,0,0)_9", "(1,0,0)_E", "(w,wb,wb)_8-(wb,w,w)_4"),
]

# Images under c of displayed c-check values: (vector, c(vector)).
C_CHECK_IMAGES = [
    ("(wb,1,1)_2-(1,wb,wb)_8", "-(wb,1,1)_2+(1,wb,wb)_8"),
    ("(wb,1,1)_T-(1,wb,wb)_5", "(w,1,1)_T-(w,wb,wb)_6"),
    ("(w,1,1)_0-(wb,wb,wb)_9", "-(wb,1,1)_0+(w,1,1)_3"),
    ("(w,1,1)_9-(wb,wb,wb)_5", "-(1,w,w)_3+(wb,w,w)_6"),
    ("-(wb,wb,wb)_7", "-(w,1,1)_E"),
]

# Six intermediate products of the non-collinear Jacobi case.
JACOBI_PRODUCTS = [
    ("(wb,1,1)_3", "(1,0,0)_2", "-t(w,wb,wb)_5+t(wb,w,w)_E"),
    ("(wb,1,1)_4", "(1,0,0)_0", "3(wb,0,0)_5+t(1,wb,wb)_7"),
    ("(1,wb,wb)_X", "(1,0,0)_0", "-t(w,w,w)_6-3(w,0,0)_E"),
    ("(1,0,0)_2", "(1,wb,wb)_9", "t(wb,1,1)_6+3(wb,0,0)_7"),
    ("(w,1,1)_T", "(1,0,0)_1", "t(1,w,w)_E+t(w,wb,wb)_7"),
    ("(wb,wb,wb)_8", "(1,0,0)_1", "t(1,wb,wb)_5+t(1,wb,wb)_6"),
]

# Further displayed products used while establishing anti-symmetry and the
# second seed.
OTHER_PRODUCTS = [
    ("(w,0,0)_0", "(w,w,w)_1", "3(w,wb,wb)_3-3(1,wb,wb)_9"),
    ("(0,wb,0)_0", "(w,w,w)_1", "0"),
    ("(0,0,wb)_0", "(w,w,w)_1", "0"),
    ("1/3t(1,1,1)_1", "(1,0,0)_9", "-(t,0,0)_0+(wb,1,1)_3"),
    ("1/3t(1,w,wb)_1", "(1,0,0)_9", "-(0,tw,0)_0+(w,1,w)_3"),
    ("1/3t(1,wb,w)_1", "(1,0,0)_9", "-(0,0,tw)_0+(w,w,1)_3"),
    ("(t,0,0)_1", "(1,0,0)_9", "-t(1,w,w)_0-t(wb,w,w)_3"),
    ("(1,0,0)_8", "(1,0,0)_9", "(wb,1,1)_E-(1,wb,wb)_4"),
    ("(1,0,0)_8", "(1,0,0)_3", "-(1,w,w)_7+(wb,w,w)_X"),
    ("(w,0,0)_E", "(w,0,0)_9", "-(w,wb,wb)_8+(1,wb,wb)_4"),
    ("1/3t(w,w,w)_1", "1/3t(w,wb,wb)_0", "(w,wb,wb)_3+(1,wb,wb)_9"),
    ("1/3t(w,wb,wb)_0", "1/3t(w,w,w)_1", "-(w,wb,wb)_3-(1,wb,wb)_9"),
    ("-(wb,0,0)_3", "(1,0,0)_4", "(w,1,1)_T-(w,wb,wb)_6"),
    ("(1,0,0)_1", "(w,0,0)_9", "-(wb,1,1)_0+(w,1,1)_3"),
    ("(1,0,0)_4", "(1,0,0)_T", "-(1,w,w)_3+(wb,w,w)_6"),
]


def e6_table_errata() -> dict:
    """E6_TABLE with the (3, 9) block re-indexed: entry (i, j) is the printed (i, i - j mod 3).

    Opt-in only; the printed values stay the reference for comparisons.
    """
    out = {key: [list(row) for row in rows] for key, rows in E6_TABLE.items()}
    printed = E6_TABLE[(3, 9)]
    out[(3, 9)] = [[printed[i][(i - j) % 3] for j in range(3)] for i in range(3)]
    return out


# ---------------------------------------------------------------------------
# F4 data.  A term is ``[scalar*]unit_block`` with unit one of 1, i, j, k or w
# (the quaternion w = (-1+i+j+k)/2); scalars w, wb, t act by left
# multiplication by the quaternions w, wbar and w - wbar = i+j+k.

# (row labels, column labels, 4x4 grid of products row x column)
F4_PRODUCTS = [
    (["wb*1_0", "wb*i_0", "wb*j_0", "wb*k_0"], ["wb*1_1", "wb*i_1", "wb*j_1", "wb*k_1"], [
        ["j_3+k_9", "t*j_3+t*k_9", "-j_3-k_9", "j_3+k_9"],
        ["-i_3+j_9", "-j_3+k_9", "1_3-1_9", "k_3-i_9"],
        ["k_3+1_9", "-j_3+k_9", "i_3+i_9", "-1_3+j_9"],
        ["-1_3-i_9", "-j_3+k_9", "-k_3-j_9", "-i_3+1_9"],
    ]),
    (["1_0", "i_0", "j_0", "k_0"], ["wb*1_3", "wb*i_3", "wb*j_3", "wb*k_3"], [
        ["k_9+i_1", "k_9+i_1", "t*k_9+t*i_1", "-k_9-i_1"],
        ["-1_9-j_1", "-j_9+1_1", "-k_9+i_1", "-i_9-k_1"],
        ["-j_9+k_1", "i_9-j_1", "-k_9+i_1", "1_9-1_1"],
        ["i_9+1_1", "-1_9+k_1", "-k_9+i_1", "j_9+j_1"],
    ]),
    (["w*1_0", "w*i_0", "w*j_0", "w*k_0"], ["wb*1_9", "wb*i_9", "wb*j_9", "wb*k_9"], [
        ["i_1+j_3", "-i_1-j_3", "i_1+j_3", "t*i_1+t*j_3"],
        ["j_1+1_3", "k_1+k_3", "-1_1+i_3", "-i_1+j_3"],
        ["-1_1-k_3", "-j_1-i_3", "-k_1+1_3", "-i_1+j_3"],
        ["-k_1+i_3", "1_1-1_3", "j_1-k_3", "-i_1+j_3"],
    ]),
    (["1_1", "i_1", "j_1", "k_1"], ["wb*1_3", "wb*i_3", "wb*j_3", "wb*k_3"], [
        ["-k_0-i_9", "-i_0+j_9", "1_0-k_9", "j_0-1_9"],
        ["-1_0-k_9", "-1_0-k_9", "-t*1_0+t*k_9", "1_0+k_9"],
        ["i_0-1_9", "j_0+i_9", "-1_0+k_9", "-k_0+j_9"],
        ["-j_0+j_9", "-k_0+1_9", "1_0-k_9", "i_0+i_9"],
    ]),
    (["wb*1_3", "wb*i_3", "wb*j_3", "wb*k_3"], ["1_9", "i_9", "j_9", "k_9"], [
        ["-i_0-j_1", "k_0-1_1", "-j_0+k_1", "1_0-i_1"],
        ["-k_0+k_1", "j_0+j_1", "-i_0+1_1", "1_0-i_1"],
        ["-1_0-i_1", "1_0+i_1", "-1_0-i_1", "-t*1_0+t*i_1"],
        ["j_0-1_1", "-i_0+k_1", "k_0+j_1", "-1_0+i_1"],
    ]),
    (["w*1_9", "w*i_9", "w*j_9", "w*k_9"], ["w*1_1", "w*i_1", "w*j_1", "w*k_1"], [
        ["-j_0-k_3", "1_0-j_3", "i_0-1_3", "-k_0+i_3"],
        ["k_0-1_3", "-1_0+j_3", "-j_0+i_3", "i_0+k_3"],
        ["-i_0+i_3", "1_0-j_3", "k_0+k_3", "-j_0+1_3"],
        ["-1_0-j_3", "-t*1_0+t*j_3", "1_0+j_3", "-1_0-j_3"],
    ]),
]

# Block actions q_s -> sign * (q or q^*) * right_s at block target(s), as
# {source: (sign, starred, right factor, target)}; right factors are products
# of 1, i, j, k, w, wb.
C_ACTION = {
    "0": (1, True, "1", "0"), "1": (-1, False, "1", "1"),
    "3": (-1, False, "w", "9"), "9": (-1, False, "wb", "3"),
    "4": (-1, True, "1", "X"), "X": (-1, True, "1", "4"),
    "T": (-1, True, "1", "T"), "2": (-1, True, "jw", "2"),
    "8": (-1, True, "i", "8"), "5": (-1, True, "kw", "6"),
    "6": (-1, True, "iw", "5"), "7": (-1, True, "j", "E"),
    "E": (-1, True, "k", "7"),
}

WORD_ACTIONS = {
    "c^(a^-1) c c^a": {
        "0": (1, False, "1", "0"), "1": (-1, False, "kwb", "1"),
        "2": (1, False, "jw", "T"), "3": (-1, False, "iwb", "3"),
        "4": (1, True, "iw", "7"), "5": (1, False, "iw", "4"),
        "6": (1, False, "kw", "X"), "7": (-1, True, "j", "5"),
        "8": (-1, True, "iwb", "2"), "9": (-1, False, "jwb", "9"),
        "X": (1, True, "jwb", "E"), "E": (-1, True, "kw", "6"),
        "T": (1, True, "k", "8"),
    },
    "(c^(a^-2) c^(a^5) c^(a^-2) c)^2 b": {
        "0": (1, False, "1", "0"), "1": (1, False, "w", "3"),
        "2": (1, False, "j", "T"), "3": (-1, False, "i", "9"),
        "4": (1, False, "wb", "4"), "5": (-1, False, "kwb", "5"),
        "6": (1, True, "wb", "E"), "7": (1, False, "kw", "7"),
        "8": (1, True, "kw", "2"), "9": (1, False, "iwb", "1"),
        "X": (-1, False, "jw", "6"), "E": (1, True, "iw", "X"),
        "T": (1, True, "jw", "8"),
    },
    "(b c^(a^-1) b)^2": {
        "0": (1, False, "w", "0"), "1": (1, False, "1", "1"),
        "3": (1, False, "kw", "3"), "9": (-1, False, "jwb", "9"),
        "2": (1, False, "j", "X"), "X": (1, False, "wb", "4"),
        "4": (-1, False, "iw", "2"), "5": (1, True, "j", "8"),
        "8": (1, True, "w", "6"), "6": (1, False, "iwb", "5"),
        "7": (1, True, "k", "T"), "T": (1, True, "i", "E"),
        "E": (-1, False, "k", "7"),
    },
}

# Right multipliers induced on W by the matrices M1..M4.
M_RIGHT = {"M1": "jw", "M2": "i", "M3": "kw", "M4": "j"}

# Root label in W_0 and the two vectors spanning its eigenspace.
F4_CORRESPONDENCES = [
    ("1_0", "i_1+wb*j_3+k_9", "w*i_1+j_3+w*k_9"),
    ("i_0", "1_T-wb*j_2+k_8", "w_T-j_2+wb*k_8"),
    ("j_0", "1_X+w*i_E-w*k_6", "w_X+i_E-wb*k_6"),
    ("k_0", "1_4-i_5+wb*j_7", "w_4-w*i_5+w*j_7"),
]

STABILIZER_WORDS_W0 = ["d", "d^a", "c^(a^-1) c c^a", "(c^(a^-2) c^(a^5) c^(a^-2) c)^2 b"]

# Characteristic 2: a = i+j, b = j+k, c = k+i.  Rows x_0, columns y_1.
CHAR2_TABLE = {
    ("a", "a"): "c_3+c_9", ("a", "b"): "a_3+a_9", ("a", "c"): "b_3+b_9",
    ("b", "a"): "a_3+b_9", ("b", "b"): "b_3+c_9", ("b", "c"): "c_3+a_9",
    ("c", "a"): "b_3+a_9", ("c", "b"): "c_3+b_9", ("c", "c"): "a_3+c_9",
}
