"""Text formats for point sets and annihilator polynomials.

Point-set file::

    # optional comments
    dimension: 3
    tolerance: 1e-06
    points:
    re im re im re im      # one row per point, d pairs
    ...

Annihilator file: ``dimension: d`` followed by lines ``k l coeff`` where
coeff is an integer, a rational ``p/q`` or a decimal, optionally with an
imaginary part given as a fourth column.
"""

from __future__ import annotations

from fractions import Fraction

import numpy as np

from .poly import ZonalPoly
from .space import DEFAULT_TOL, PointSet


class ParseError(ValueError):
    def __init__(self, line: int, msg: str):
        super().__init__(f"line {line}: {msg}")
        self.line = line
        self.msg = msg


def _lines(text: str):
    for i, ln in enumerate(text.splitlines(), 1):
        ln = ln.split("#", 1)[0].strip()
        if ln:
            yield i, ln


def _field(i, ln, conv):
    key, val = ln.split(":", 1)
    try:
        return conv(val.strip())
    except ValueError:
        raise ParseError(i, f"bad value for '{key.strip()}': {val.strip()!r}") from None


def read_points(text: str, name: str = "") -> PointSet:
    dim, tol, rows = None, DEFAULT_TOL, []
    in_points = False
    for i, ln in _lines(text):
        if not in_points and ":" in ln:
            key = ln.split(":", 1)[0].strip().lower()
            if key == "dimension":
                dim = _field(i, ln, int)
                if dim < 1:
                    raise ParseError(i, "dimension must be positive")
            elif key == "tolerance":
                tol = _field(i, ln, float)
            elif key == "points":
                if dim is None:
                    raise ParseError(i, "'points:' before 'dimension:'")
                in_points = True
                rest = ln.split(":", 1)[1].strip()
                if rest:
                    raise ParseError(i, "point rows start on the line after 'points:'")
            else:
                raise ParseError(i, f"unknown field '{key}'")
            continue
        if not in_points:
            raise ParseError(i, "expected a 'field: value' line")
        parts = ln.split()
        if len(parts) != 2 * dim:
            raise ParseError(i, f"expected {2 * dim} numbers (re im pairs), got {len(parts)}")
        try:
            vals = np.array([float(t) for t in parts])
        except ValueError as exc:
            raise ParseError(i, str(exc)) from None
        rows.append((i, vals[0::2] + 1j * vals[1::2]))
    if dim is None:
        raise ParseError(1, "missing 'dimension:' field")
    if not rows:
        raise ParseError(1, "no points")
    for i, v in rows:
        nv = np.linalg.norm(v)
        if abs(nv - 1) > 1e-6:
            raise ParseError(i, f"point has norm {nv:.12g}, expected 1")
    return PointSet(dim, np.array([v for _, v in rows]), tol, name)


def write_points(X: PointSet) -> str:
    out = [f"dimension: {X.dim}", f"tolerance: {X.tol!r}", "points:"]
    for p in X.points:
        out.append(" ".join(f"{c.real:.17g} {c.imag:.17g}" for c in p))
    return "\n".join(out) + "\n"


def load_points(path: str) -> PointSet:
    with open(path) as fh:
        return read_points(fh.read(), name=str(path))


def save_points(X: PointSet, path: str) -> None:
    with open(path, "w") as fh:
        fh.write(write_points(X))


def _number(tok: str):
    if "/" in tok:
        return Fraction(tok)
    try:
        return Fraction(int(tok))
    except ValueError:
        return float(tok)


def read_annihilator(text: str) -> ZonalPoly:
    dim, coeffs = None, {}
    for i, ln in _lines(text):
        if ":" in ln:
            key = ln.split(":", 1)[0].strip().lower()
            if key != "dimension":
                raise ParseError(i, f"unknown field '{key}'")
            dim = _field(i, ln, int)
            continue
        parts = ln.split()
        if len(parts) not in (3, 4):
            raise ParseError(i, "expected 'k l coeff [imag]'")
        try:
            k, l = int(parts[0]), int(parts[1])
            c = _number(parts[2])
            if len(parts) == 4:
                c = complex(c) + 1j * float(_number(parts[3]))
        except (ValueError, ZeroDivisionError) as exc:
            raise ParseError(i, str(exc)) from None
        if k < 0 or l < 0:
            raise ParseError(i, "degrees must be nonnegative")
        coeffs[(k, l)] = coeffs.get((k, l), 0) + c
    if dim is None:
        raise ParseError(1, "missing 'dimension:' field")
    return ZonalPoly(dim, coeffs)


def write_annihilator(F: ZonalPoly) -> str:
    out = [f"dimension: {F.dim}"]
    for (k, l), c in sorted(F.coeffs.items()):
        if isinstance(c, Fraction):
            out.append(f"{k} {l} {c}")
        else:
            c = complex(c)
            out.append(f"{k} {l} {c.real!r}" + (f" {c.imag!r}" if c.imag else ""))
    return "\n".join(out) + "\n"
