"""Absolute, linear-programming and antipodal bounds; annihilator polynomials."""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

import numpy as np

from .design import DESIGN_TOL, is_design
from .poly import (JacobiExpansion, LowerSet, ZonalPoly, convolve, expand, harm_dim,
                   jacobi, lowerset_closure, monomial_basis, parse_lower_set, x_poly,
                   xbar_poly)
from .space import PointSet, angle_set

SIDE_TOL = 1e-9
ANNIHILATOR_TOL = 1e-8


class BoundError(ValueError):
    """A side condition needed for a bound does not hold; ``failures`` says which."""

    def __init__(self, message, failures=()):
        super().__init__(message)
        self.failures = list(failures)


def _lower(U) -> LowerSet:
    if isinstance(U, LowerSet):
        return U
    if isinstance(U, str):
        return parse_lower_set(U)
    return lowerset_closure(U)


def _sum_m(d, members) -> int:
    return sum(harm_dim(d, m) for m in members)


def absolute_design_bound(d: int, U) -> int:
    """|X| >= sum of dim Harm(k,l) over U for any U*U-design."""
    return _sum_m(d, _lower(U).members)


def absolute_code_bound(d: int, S) -> int:
    """|X| <= sum of dim Harm(k,l) over S for any S-code."""
    return _sum_m(d, _lower(S).members)


####
# annihilators
####

@dataclass(frozen=True)
class Annihilator:
    poly: ZonalPoly
    expansion: JacobiExpansion
    span_set: LowerSet

    @classmethod
    def from_poly(cls, F: ZonalPoly) -> "Annihilator":
        return cls(F, expand(F.dim, F), F.support())

    def value_at_one(self):
        return sum(self.poly.coeffs.values())

    def residual(self, angles) -> float:
        vals = np.atleast_1d(self.poly(np.asarray(angles, dtype=complex)))
        return float(np.abs(vals).max()) if vals.size else 0.0

    def annihilates(self, angles, tol: float = ANNIHILATOR_TOL) -> bool:
        return self.residual(angles) <= tol and complex(self.poly(1.0)).real > 0


def _rationalize(c, den: int = 10 ** 6, tol: float = 1e-11):
    c = complex(c)
    if abs(c.imag) > tol:
        return c
    f = Fraction(c.real).limit_denominator(den)
    return f if abs(float(f) - c.real) <= tol else c.real


def product_annihilator(d: int, alphas) -> ZonalPoly:
    F = ZonalPoly(d, {(0, 0): Fraction(1)})
    x = x_poly(d)
    for a in alphas:
        a = _rationalize(a)
        F = F * (x - (a if isinstance(a, Fraction) else ZonalPoly(d, {(0, 0): a})))
    return F


def find_annihilator(A, d: int | None = None, S_hint=None,
                     tol: float = ANNIHILATOR_TOL) -> Annihilator:
    """An annihilator for the angle set A (an AngleSet or a list of values).

    Default is prod (x - alpha).  If every angle has the same modulus the
    degree-(1,1) form x conj(x) - |alpha|^2 is returned instead.  With
    ``S_hint`` the least-norm F in span{x^a conj(x)^b : (a,b) in S_hint}
    with F(alpha) = 0 and F(1) = 1 is fitted and checked.
    """
    alphas = np.asarray(A.alphas if hasattr(A, "alphas") else A, dtype=complex)
    if d is None:
        raise ValueError("dimension d is required")
    if S_hint is not None:
        S = _lower(S_hint)
        basis = monomial_basis(S.members)
        M = np.array([[a ** k * np.conj(a) ** l for k, l in basis] for a in alphas]).reshape(len(alphas), len(basis))
        rows = np.vstack([M, np.ones((1, len(basis)))])
        rhs = np.zeros(len(alphas) + 1, dtype=complex)
        rhs[-1] = 1
        c, *_ = np.linalg.lstsq(rows, rhs, rcond=None)
        F = ZonalPoly(d, {tuple(b): _rationalize(v) for b, v in zip(basis, c)})
        ann = Annihilator.from_poly(F)
        if not ann.annihilates(alphas, tol):
            raise BoundError(f"no annihilator in the span of {S} (residual {ann.residual(alphas):.3g})")
        return ann
    mods = np.abs(alphas)
    if len(alphas) and np.ptp(mods) <= tol and mods[0] < 1 - tol:
        r2 = _rationalize(mods[0] ** 2)
        F = x_poly(d) * xbar_poly(d) - (r2 if isinstance(r2, Fraction) else ZonalPoly(d, {(0, 0): r2}))
        return Annihilator.from_poly(F)
    return Annihilator.from_poly(product_annihilator(d, alphas))


def tight_annihilator(d: int, S) -> ZonalPoly:
    """sum of g_{k,l} over S."""
    F = ZonalPoly(d, {})
    for m in _lower(S).members:
        F = F + jacobi(d, m)
    return F


####
# certificates
####

@dataclass
class BoundCertificate:
    kind: str
    value: object
    witness: dict = field(default_factory=dict)
    tight: bool | None = None
    branches: dict = field(default_factory=dict)

    def to_dict(self) -> dict:
        v = self.value
        out = {"kind": self.kind, "decimal": float(v), "tight": self.tight}
        if isinstance(v, (int, Fraction)):
            v = Fraction(v)
            out["numerator"], out["denominator"] = v.numerator, v.denominator
        if self.branches:
            out["branches"] = {k: (float(b) if b is not None else None) for k, b in self.branches.items()}
        w = {}
        for key, val in self.witness.items():
            if isinstance(val, (LowerSet, ZonalPoly)):
                w[key] = str(val)
            elif isinstance(val, np.ndarray):
                w[key] = [[float(a.real), float(a.imag)] for a in val.ravel()]
            elif isinstance(val, (str, int, float, list)):
                w[key] = val
        out["witness"] = w
        return out


def _side_conditions(F: ZonalPoly, E: JacobiExpansion, mode: str, angles, T) -> list:
    fails = []
    if E[(0, 0)] == 0 or complex(E[(0, 0)]).real <= 0:
        fails.append("f_{0,0} must be positive")
    if F != F.conj():
        fails.append("F is not real-valued (coefficients not conjugate-symmetric)")
    vals = np.atleast_1d(F(np.asarray(angles, dtype=complex)))
    if vals.size and np.abs(vals.imag).max() > SIDE_TOL:
        fails.append("F takes non-real values on the angle set")
    for (k, l), f in sorted(E.terms.items()):
        fr = complex(f).real
        if mode == "upper" and fr < (0 if isinstance(f, Fraction) else -SIDE_TOL):
            fails.append(f"f_{{{k},{l}}} = {f} < 0")
        if mode == "lower" and (k, l) not in T and fr > (0 if isinstance(f, Fraction) else SIDE_TOL):
            fails.append(f"f_{{{k},{l}}} = {f} > 0 outside T")
    for a, v in zip(np.atleast_1d(angles), vals):
        if mode == "upper" and v.real > SIDE_TOL:
            fails.append(f"F({complex(a):.6g}) = {v.real:.3g} > 0")
        if mode == "lower" and v.real < -SIDE_TOL:
            fails.append(f"F({complex(a):.6g}) = {v.real:.3g} < 0")
    return fails


def lp_bound(d: int, F: ZonalPoly, mode: str, angles, T=None) -> BoundCertificate:
    """Delsarte-type bound F(1)/f_{0,0}.

    mode "upper": f_{k,l} >= 0 for all (k,l) and F <= 0 on the angles, so any
    code with those angles has |X| <= F(1)/f_{0,0}.
    mode "lower": f_{k,l} <= 0 outside T and F >= 0 on the angles, so any
    T-design with those angles has |X| >= F(1)/f_{0,0}.
    """
    if mode not in ("upper", "lower"):
        raise ValueError("mode must be 'upper' or 'lower'")
    if mode == "lower" and T is None:
        raise ValueError("lower bounds need the design strength T")
    if F.dim != d:
        raise ValueError("F was built for a different dimension")
    angles = np.asarray(getattr(angles, "alphas", angles), dtype=complex)
    T = _lower(T) if T is not None else None
    E = expand(d, F)
    fails = _side_conditions(F, E, mode, angles, T)
    if fails:
        raise BoundError("side conditions fail: " + "; ".join(fails), fails)
    F1 = sum(F.coeffs.values())
    f00 = E[(0, 0)]
    if F.is_exact:
        value = Fraction(F1) / Fraction(f00)
    else:
        value = float(complex(F1).real / complex(f00).real)
    kind = "lp-upper" if mode == "upper" else "lp-lower"
    return BoundCertificate(kind, value, {"F": F, "angles": angles, "T": T, "mode": mode, "dim": d})


def recheck(cert: BoundCertificate) -> bool:
    """Re-evaluate an lp certificate's side conditions from its own witness."""
    w = cert.witness
    F = w["F"]
    return not _side_conditions(F, expand(F.dim, F), w["mode"], w["angles"], w["T"])


def coefficient_bound_check(ann: Annihilator, X_size: int) -> dict:
    """|X| <= F(1)/f_{k,l} for every (k,l) with f_{k,l} > 0."""
    F1 = ann.value_at_one()
    out = {}
    for deg, f in sorted(ann.expansion.terms.items()):
        fr = complex(f).real
        if fr < -SIDE_TOL:
            raise BoundError(f"negative coefficient f_{tuple(deg)} = {f}")
        if fr <= SIDE_TOL:
            continue
        ratio = Fraction(F1) / Fraction(f) if ann.poly.is_exact else complex(F1).real / fr
        out[tuple(deg)] = (X_size <= ratio + (0 if isinstance(ratio, Fraction) else 1e-9), ratio)
    return out


def antipodal_bound(d: int, S, n: int) -> BoundCertificate:
    """n * min(sum_{S_n} m, sum_{S \\ S_n} m), S_n = {(k,l) in S : k = l mod n}.
    An empty branch does not take part in the minimum."""
    if n < 2:
        raise ValueError("n must be at least 2")
    S = _lower(S)
    Sn = {m for m in S.members if (m[0] - m[1]) % n == 0}
    rest = set(S.members) - Sn
    b1 = _sum_m(d, Sn)
    b2 = _sum_m(d, rest) if rest else None
    value = n * min(b for b in (b1, b2) if b is not None)
    return BoundCertificate("antipodal", value,
                            {"S": S, "S_n": sorted(list(m) for m in Sn), "n": n},
                            branches={"S_n": b1, "rest": b2})


def projective_code_bound(d: int, S) -> int:
    """sum of m_{k,k} over the diagonal of S."""
    return _sum_m(d, [m for m in _lower(S).members if m[0] == m[1]])


@dataclass
class TightnessReport:
    size_matches: bool
    annihilates: bool
    design: bool
    S: LowerSet
    expected_size: int

    @property
    def tight(self) -> bool:
        return self.size_matches and self.annihilates and self.design

    @property
    def consistent(self) -> bool:
        """Any two of the three conditions force the third."""
        return sum((self.size_matches, self.annihilates, self.design)) != 2

    def to_dict(self) -> dict:
        return {"S": str(self.S), "expected_size": self.expected_size,
                "size_matches": self.size_matches, "annihilates": self.annihilates,
                "design": self.design, "tight": self.tight, "consistent": self.consistent}


def tightness_check(X: PointSet, S, tol: float = DESIGN_TOL) -> TightnessReport:
    S = _lower(S)
    d = X.dim
    m = absolute_code_bound(d, S)
    A = angle_set(X)
    F = tight_annihilator(d, S)
    ann = float(np.abs(np.atleast_1d(F(A.alphas))).max()) <= 1e-8 * max(1, m)
    SS = lowerset_closure(convolve(S.members, S.members))
    ok, _ = is_design(X, SS, tol)
    return TightnessReport(len(X) == m, ann, ok, S, m)


####
# annihilators appearing with the standard examples
####

def sic_annihilator(d: int) -> ZonalPoly:
    x, xb = x_poly(d), xbar_poly(d)
    return (d * ((d + 1) * x * xb - 1) * (x * x + xb * xb + 2 * x + 2 * xb + 2)) / 2


def sic_cover_angles(d: int) -> np.ndarray:
    r = 1 / np.sqrt(d + 1)
    return np.array([r, -r, 1j * r, -1j * r, 1j, -1, -1j])


def kerdock_annihilator(d: int) -> ZonalPoly:
    """For covers with angles (+-1+-i)/sqrt(2d), 0, +-i, -1."""
    x, xb = x_poly(d), xbar_poly(d)
    return (d * (x ** 4 + xb ** 4) + 2 * d * (x ** 3 + xb ** 3)
            + (d + 1) * (x ** 2 + xb ** 2) + 2 * (x * xb + x + xb))


def kerdock_angles(d: int) -> np.ndarray:
    r = 1 / np.sqrt(2 * d)
    return np.array([(1 + 1j) * r, (1 - 1j) * r, (-1 + 1j) * r, (-1 - 1j) * r, 0, 1j, -1j, -1])


def kerdock_even_annihilator(d: int) -> ZonalPoly:
    """For covers with angles +-1/sqrt(d), +-i/sqrt(d), 0, +-i, -1.  The last
    factor is x + conj(x) + 2 so that the angle -1 is a root."""
    x, xb = x_poly(d), xbar_poly(d)
    return d * (d + 1) * (d * x * xb - 1) * (x + xb) * (x + xb + 2)


def kerdock_even_angles(d: int) -> np.ndarray:
    r = 1 / np.sqrt(d)
    return np.array([r, -r, 1j * r, -1j * r, 0, 1j, -1j, -1])


def simplex_annihilator(d: int) -> ZonalPoly:
    return 1 + d * (x_poly(d) + xbar_poly(d))


BUILTIN_ANNIHILATORS = {
    "sic": (sic_annihilator, sic_cover_angles, "upper"),
    "kerdock": (kerdock_annihilator, kerdock_angles, "upper"),
    "kerdock-even": (kerdock_even_annihilator, kerdock_even_angles, "upper"),
    "simplex": (simplex_annihilator, None, "lower"),
}

