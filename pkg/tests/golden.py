"""Frozen golden tables the tests check against.

These are transcribed independently of the library's built-in literals; the
tests compare the two, so a typo in either transcription shows up as a
mismatch rather than silently agreeing.
"""

# Full 3-line gate tables, (input, output) bitstrings in encoding order.
GATE_ROWS = {
    "cl": [
        ("000", "000"), ("001", "001"), ("010", "011"), ("011", "010"),
        ("100", "101"), ("101", "100"), ("110", "111"), ("111", "110"),
    ],
    "toffoli": [
        ("000", "000"), ("001", "001"), ("010", "010"), ("011", "011"),
        ("100", "100"), ("101", "101"), ("110", "111"), ("111", "110"),
    ],
    "x": [
        ("000", "000"), ("001", "001"), ("010", "011"), ("011", "010"),
        ("100", "101"), ("101", "100"), ("110", "110"), ("111", "111"),
    ],
    "i": [
        ("000", "000"), ("001", "001"), ("010", "010"), ("011", "011"),
        ("100", "101"), ("101", "100"), ("110", "110"), ("111", "111"),
    ],
}

# Restrictions of the gates above: ancilla fixing -> the four surviving rows.
RESTRICTION_ROWS = {
    ("cl", (3, 0)): [("000", "000"), ("010", "011"), ("100", "101"), ("110", "111")],
    ("cl", (3, 1)): [("001", "001"), ("011", "010"), ("101", "100"), ("111", "110")],
    ("toffoli", (3, 0)): [("000", "000"), ("010", "010"), ("100", "100"), ("110", "111")],
    ("toffoli", (3, 1)): [("001", "001"), ("011", "011"), ("101", "101"), ("111", "110")],
    ("x", (3, 0)): [("000", "000"), ("010", "011"), ("100", "101"), ("110", "110")],
    ("x", (3, 1)): [("001", "001"), ("011", "010"), ("101", "100"), ("111", "111")],
    ("i", (3, 1)): [("001", "001"), ("011", "011"), ("101", "100"), ("111", "111")],
    ("cl", (1, 0)): [("000", "000"), ("001", "001"), ("010", "011"), ("011", "010")],
}
