from fractions import Fraction

import numpy as np
import pytest

from cdl import construct
from cdl.fileformat import (ParseError, load_points, read_annihilator, read_points,
                            save_points, write_annihilator, write_points)
from cdl.poly import ZonalPoly

GOOD = """# cross polytope in C^2
dimension: 2
tolerance: 1e-8
points:
1 0 0 0
0 0 1 0   # second basis vector
-1 0 0 0
0 0 -1 0
"""


def test_read():
    X = read_points(GOOD)
    assert X.dim == 2 and len(X) == 4 and X.tol == 1e-8


def test_roundtrip_exact(tmp_path):
    X = construct.coxeter_27()
    Y = read_points(write_points(X))
    np.testing.assert_array_equal(X.points, Y.points)
    p = tmp_path / "c27.txt"
    save_points(X, p)
    Z = load_points(p)
    np.testing.assert_array_equal(X.points, Z.points)
    assert Z.name == str(p)


@pytest.mark.parametrize("text,line,fragment", [
    ("dimension: 2\npoints:\n1 0 0\n", 3, "expected 4 numbers"),
    ("dimension: 2\npoints:\n1 0 0 0\n1 0 1 0\n", 4, "norm"),
    ("dimension: x\npoints:\n1 0\n", 1, "bad value"),
    ("points:\n1 0\n", 1, "before 'dimension:'"),
    ("dimension: 1\ncolour: red\n", 2, "unknown field"),
    ("dimension: 1\n1 0\n", 2, "expected a 'field: value'"),
    ("dimension: 1\npoints:\n1 zero\n", 3, ""),
    ("dimension: 1\npoints:\n", 1, "no points"),
    ("# nothing\n", 1, "missing 'dimension:'"),
    ("dimension: 0\n", 1, "positive"),
])
def test_errors(text, line, fragment):
    with pytest.raises(ParseError) as exc:
        read_points(text)
    assert exc.value.line == line
    assert str(exc.value).startswith(f"line {line}: ")
    assert fragment in str(exc.value)


def test_annihilator_roundtrip():
    text = "dimension: 3\n0 0 1/3\n1 1 2\n2 0 0.5 -0.25\n"
    F = read_annihilator(text)
    assert F.dim == 3
    assert F.coeffs[(0, 0)] == Fraction(1, 3)
    assert F.coeffs[(2, 0)] == complex(0.5, -0.25)
    G = read_annihilator(write_annihilator(F))
    assert G.coeffs == F.coeffs


def test_annihilator_errors():
    with pytest.raises(ParseError, match="line 2"):
        read_annihilator("dimension: 2\n1 2\n")
    with pytest.raises(ParseError, match="line 2"):
        read_annihilator("dimension: 2\n-1 0 1\n")
    with pytest.raises(ParseError, match="line 2"):
        read_annihilator("dimension: 2\n1 0 1/0\n")
    with pytest.raises(ParseError, match="missing"):
        read_annihilator("1 0 1\n")


def test_write_annihilator_fraction():
    F = ZonalPoly(2, {(0, 0): Fraction(1, 2), (1, 0): 0.25})
    assert write_annihilator(F) == "dimension: 2\n0 0 1/2\n1 0 0.25\n"
