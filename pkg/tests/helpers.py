"""Shared fixtures: two small instances worked out by hand.

EX1 is a one-sided path (depot at an extremity), EX2 has the depot in
the middle.  The canonical forms and optimal values below were derived
manually and double-checked against exhaustive enumeration.
"""

from pathrd import CanonicalSide, GeneralInstance

EX1_DOC = {
    "vertices": [
        {"id": 0},
        {"id": 1, "release": 0},
        {"id": 2, "release": 5},
        {"id": 3, "release": 21},
    ],
    "edges": [
        {"u": 0, "v": 3, "d": 3},
        {"u": 3, "v": 2, "d": 3},
        {"u": 2, "v": 1, "d": 4},
    ],
    "depot": 0,
}

EX1_SIDE = CanonicalSide(
    r=(0, 5, 21),
    tau=(10, 6, 3),
    labels=(1, 2, 3),
    riders=((), (), ()),
)

EX2_DOC = {
    "vertices": [
        {"id": 1, "release": 3},
        {"id": 0},
        {"id": 2, "release": 6},
        {"id": 3, "release": 0},
    ],
    "edges": [
        {"u": 1, "v": 0, "d": 4},
        {"u": 0, "v": 2, "d": 2},
        {"u": 2, "v": 3, "d": 3},
    ],
    "depot": 0,
}

EX2_LEFT = CanonicalSide(r=(3,), tau=(4,), labels=(1,), riders=((),))
EX2_RIGHT = CanonicalSide(r=(0, 6), tau=(5, 2), labels=(3, 2), riders=((), ()))
EX2_GENERAL = GeneralInstance(EX2_LEFT, EX2_RIGHT)
