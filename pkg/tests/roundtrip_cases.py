"""Curated one-state systems whose input-output equations must realize.

Each entry is (rate, output) for x' = rate, y = output.  The first block
stays in the plain rational class; the second is input-affine and is
realized in that mode.  Every case must come back REALIZED and verify.
"""

RATIONAL_CASES = [
    ("x*u^2", "x + u"),
    ("0", "x*u"),
    ("x", "x"),
    ("u", "x"),
    ("x + u", "x"),
    ("x*u", "x"),
    ("u^2", "x"),
    ("x^2", "x"),
    ("1/x", "x"),
    ("x^2", "1/x"),
]

AFFINE_CASES = [
    ("u", "x*u"),
    ("0", "x + u"),
    ("0", "x*u"),
    ("1", "x*u"),
    ("x", "x + u"),
    ("x*u", "x"),
    ("u + 1", "2*x"),
    ("x + u", "x + u"),
    ("-x + u", "2*x*u"),
    ("u/2", "2*x/3 + u/5"),
]
