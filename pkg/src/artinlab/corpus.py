"""Fixed example data shared by the CLI checks and the test-suite."""
from __future__ import annotations

XY = ("x", "y")

# the simple-locus algebra and its distinguished element
A_GENS = ("5*x^4 + 2*x*y^2", "2*x^2*y + 5*y^4")
F_SIMPLE = "x^5 + x^2*y^2 + y^5"

# B0 exactly as published, and with the second generator replaced by the
# true y-partial of b0 (see the decisions ledger)
B0_GENS = ("5*x^4 + 3*x^2*y^3", "3*x^3*y^2 + 5*y^5", "y^6")
B0_JACOBIAN_GENS = ("5*x^4 + 3*x^2*y^3", "3*x^3*y^2 + 5*y^4", "y^6")
B0_ELEMENT = "x^5 + x^3*y^3 + y^5"

# (polynomial, variables, homogeneous) with isolated singularity at 0
BS_CORPUS = (
    ("x^2 + y^2", XY, True),
    ("x^3 + y^3", XY, True),
    ("x^4 + y^4", XY, True),
    ("x^2*y + y^3", XY, True),
    ("x*y", XY, True),
    ("x^2 + y^2 + z^2", ("x", "y", "z"), True),
    ("x^3 + y^3 + z^3", ("x", "y", "z"), True),
    ("x^3 + y^4", XY, False),
    ("x^3 + x*y^3", XY, False),
    ("x^3 + y^5", XY, False),
    ("x^2*y + y^4", XY, False),
    ("x^5 + x^2*y^2 + y^5", XY, False),
    ("x^5 + y^5 + x^3*y^3", XY, False),
    ("x^2 + y^7", XY, False),
    ("x^4 + x^2*y^2 + y^6", XY, False),
    ("x^2 + x^3", ("x",), False),
)

# (generators, variables, element) pairs for the two flatness conditions
FLAT_CORPUS = (
    (A_GENS, XY, F_SIMPLE),
    (A_GENS, XY, "5*x^4 + 2*x*y^2"),
    (A_GENS, XY, "0"),
    (A_GENS, XY, "1"),
    (A_GENS, XY, "x"),
    (A_GENS, XY, "x*y"),
    (A_GENS, XY, "x^2*y^2"),
    (A_GENS, XY, "x^3 + y^3"),
    (A_GENS, XY, "x^2*y^2 + 7*x^5"),
    (B0_GENS, XY, B0_ELEMENT),
    (B0_GENS, XY, "y^5"),
    (B0_JACOBIAN_GENS, XY, B0_ELEMENT),
    (B0_JACOBIAN_GENS, XY, "x^3*y^3"),
    (("x^2",), ("x",), "x"),
    (("x^2",), ("x",), "3"),
    (("x^3",), ("x",), "x^2"),
    (("x^3",), ("x",), "x"),
    (("2*x + 3*x^2",), ("x",), "x^2 + x^3"),
    (("5*x^4 + 3*x^2*y^3", "5*y^4 + 3*x^3*y^2"), XY, "x^5 + y^5 + x^3*y^3"),
    (("x^2", "y^2"), XY, "x*y"),
    (("x^2", "y^2"), XY, "x + y"),
    (("x*y", "x^2 - y^2"), XY, "x^2"),
    (("x^3", "y^2"), XY, "x^2*y"),
)

# Weil algebras used for tensor checks: name -> (generators, variables)
WEIL = {
    "eps2": (("e^2",), ("e",)),
    "eps3": (("e^3",), ("e",)),
    "eps4": (("e^4",), ("e",)),
    "dual2": (("e^2", "d^2"), ("e", "d")),
    "r": ((), ()),
}

# (base algebra generators, base variables, source Weil, target Weil, images or kind)
TENSOR_CORPUS = (
    (A_GENS, XY, "eps3", "eps2", ("e",)),
    (A_GENS, XY, "eps2", "r", "augmentation"),
    (A_GENS, XY, "eps2", "eps2", "identity"),
    ((("x^2",)), ("x",), "eps4", "eps2", ("e",)),
    ((("x^2",)), ("x",), "dual2", "eps2", ("e", "0")),
    ((("x^3",)), ("x",), "eps4", "eps3", ("e^2",)),
    ((("x^2", "y^2")), XY, "dual2", "r", "augmentation"),
)

# (A gens, A vars, a0, B gens, B vars, b0), each pair with equal nilpotency index >= 2
PUSHOUT_CORPUS = (
    (A_GENS, XY, F_SIMPLE, B0_GENS, XY, B0_ELEMENT),
    (("e^2",), ("e",), "e", ("e^2",), ("e",), "e"),
    (("x^3",), ("x",), "x", ("y^3",), ("y",), "y"),
    (A_GENS, XY, F_SIMPLE, ("e^2",), ("e",), "e"),
    (("x^2", "y^2"), XY, "x*y", ("e^2",), ("e",), "e"),
    (("x^4",), ("x",), "x^2", ("e^3",), ("e",), "e^2"),
)
