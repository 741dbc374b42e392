"""Zonal Jacobi polynomials g_{k,l} on the complex sphere, and friends.

Coefficients are kept as exact ``Fraction`` values wherever the input is
rational; evaluation happens in complex floating point.  Polynomials whose
coefficients are complex floats (e.g. product annihilators built from
irrational angles) are also accepted by every routine here, they just lose
exactness.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from math import comb, factorial
from typing import Iterable, Mapping, NamedTuple

import numpy as np


class BiDegree(NamedTuple):
    k: int
    l: int


def _bideg(deg) -> BiDegree:
    k, l = int(deg[0]), int(deg[1])
    if k < 0 or l < 0:
        raise ValueError(f"bidegree must be nonnegative, got {(k, l)}")
    return BiDegree(k, l)


###############################################################################
#   LOWER SETS
###############################################################################

@dataclass(frozen=True)
class LowerSet:
    """A finite downward-closed subset of N^2 (product order)."""

    members: frozenset = field(default_factory=frozenset)

    def __post_init__(self):
        mem = frozenset(_bideg(m) for m in self.members)
        for k, l in mem:
            if k > 0 and (k - 1, l) not in mem:
                raise ValueError(f"not downward closed: {(k, l)} without {(k - 1, l)}")
            if l > 0 and (k, l - 1) not in mem:
                raise ValueError(f"not downward closed: {(k, l)} without {(k, l - 1)}")
        object.__setattr__(self, "members", mem)

    def __contains__(self, deg) -> bool:
        return tuple(deg) in self.members

    def __iter__(self):
        return iter(self.sorted())

    def __len__(self) -> int:
        return len(self.members)

    def sorted(self) -> list[BiDegree]:
        """Members by total degree, then by decreasing k."""
        return sorted(self.members, key=lambda m: (m.k + m.l, -m.k))

    def maximal(self) -> list[BiDegree]:
        mx = [m for m in self.members
              if (m.k + 1, m.l) not in self.members and (m.k, m.l + 1) not in self.members]
        return sorted(mx, key=lambda m: (-m.k, m.l))

    def __str__(self) -> str:
        if not self.members:
            return "{}"
        return "cl{" + ",".join(f"({k},{l})" for k, l in self.maximal()) + "}"

    __repr__ = __str__

    @classmethod
    def total(cls, t: int) -> "LowerSet":
        """{(k,l) : k + l <= t}."""
        return cls(frozenset((k, l) for k in range(t + 1) for l in range(t + 1 - k)))


def lowerset_closure(maximal: Iterable) -> LowerSet:
    out = set()
    for k, l in (_bideg(m) for m in maximal):
        out.update((a, b) for a in range(k + 1) for b in range(l + 1))
    return LowerSet(frozenset(out))


def convolve(U: Iterable, V: Iterable) -> set[BiDegree]:
    """U*V = {(k+l', k'+l) : (k,l) in U, (k',l') in V}."""
    return {BiDegree(k + l2, k2 + l) for (k, l) in U for (k2, l2) in V}


def parse_lower_set(text: str) -> LowerSet:
    """Parse strings like ``k+l<=2``, ``cl{(5,0),(3,2)}`` or ``{(0,0),(1,0)}``."""
    import re

    s = text.replace(" ", "")
    m = re.fullmatch(r"\{?(?:k\+l|i\+j)<=(\d+)\}?", s)
    if m:
        return LowerSet.total(int(m.group(1)))
    pairs = [(int(a), int(b)) for a, b in re.findall(r"\((\d+),(\d+)\)", s)]
    if not pairs and s not in ("{}", "cl{}"):
        raise ValueError(f"cannot parse lower set {text!r}")
    if s.startswith("cl"):
        return lowerset_closure(pairs)
    return LowerSet(frozenset(pairs))


###############################################################################
#   POLYNOMIALS IN x AND conj(x)
###############################################################################

def _clean(coeffs: Mapping) -> dict:
    return {(int(a), int(b)): c for (a, b), c in coeffs.items() if c != 0}


@dataclass(frozen=True)
class ZonalPoly:
    """Sum of c_{a,b} x^a conj(x)^b.  ``coeffs`` maps (a, b) -> coefficient."""

    dim: int
    coeffs: Mapping = field(default_factory=dict)

    def __post_init__(self):
        object.__setattr__(self, "coeffs", _clean(self.coeffs))

    @property
    def is_exact(self) -> bool:
        return all(isinstance(c, (int, Fraction)) for c in self.coeffs.values())

    @property
    def degree(self) -> int:
        return max((a + b for a, b in self.coeffs), default=0)

    def support(self) -> LowerSet:
        """Smallest lower set containing every monomial exponent."""
        return lowerset_closure(self.coeffs)

    def __call__(self, z):
        return evaluate(self, z)

    def __add__(self, other):
        other = _as_poly(other, self.dim)
        c = dict(self.coeffs)
        for key, v in other.coeffs.items():
            c[key] = c.get(key, 0) + v
        return ZonalPoly(self.dim, c)

    __radd__ = __add__

    def __neg__(self):
        return ZonalPoly(self.dim, {key: -v for key, v in self.coeffs.items()})

    def __sub__(self, other):
        return self + (-_as_poly(other, self.dim))

    def __rsub__(self, other):
        return _as_poly(other, self.dim) - self

    def __mul__(self, other):
        if not isinstance(other, ZonalPoly):
            return ZonalPoly(self.dim, {key: v * other for key, v in self.coeffs.items()})
        c: dict = {}
        for (a, b), u in self.coeffs.items():
            for (a2, b2), v in other.coeffs.items():
                key = (a + a2, b + b2)
                c[key] = c.get(key, 0) + u * v
        return ZonalPoly(self.dim, c)

    __rmul__ = __mul__

    def __pow__(self, e: int):
        if not isinstance(e, int) or e < 0:
            raise ValueError("only nonnegative integer powers")
        out = ZonalPoly(self.dim, {(0, 0): Fraction(1)})
        for _ in range(e):
            out = out * self
        return out

    def __truediv__(self, s):
        if isinstance(s, int):
            s = Fraction(s)
        return ZonalPoly(self.dim, {key: v / s for key, v in self.coeffs.items()})

    def conj(self) -> "ZonalPoly":
        """Swap the roles of x and conj(x) (and conjugate the coefficients)."""
        return ZonalPoly(self.dim, {(b, a): _conj(v) for (a, b), v in self.coeffs.items()})

    def __eq__(self, other):
        if not isinstance(other, ZonalPoly):
            return NotImplemented
        return self.dim == other.dim and self.coeffs == other.coeffs

    def __hash__(self):
        return hash((self.dim, tuple(sorted(self.coeffs.items()))))

    def __str__(self):
        if not self.coeffs:
            return "0"
        parts = []
        for (a, b), c in sorted(self.coeffs.items(), key=lambda t: (-(t[0][0] + t[0][1]), -t[0][0])):
            mono = "".join(s for s in (f"x^{a}" if a > 1 else "x" if a == 1 else "",
                                       f"xb^{b}" if b > 1 else "xb" if b == 1 else ""))
            parts.append(f"({c})" + (f"*{mono}" if mono else ""))
        return " + ".join(parts)


def _conj(v):
    return v.conjugate() if isinstance(v, complex) else v


def _as_poly(p, dim) -> ZonalPoly:
    if isinstance(p, ZonalPoly):
        return p
    if isinstance(p, int):
        p = Fraction(p)
    return ZonalPoly(dim, {(0, 0): p})


def x_poly(d: int) -> ZonalPoly:
    return ZonalPoly(d, {(1, 0): Fraction(1)})


def xbar_poly(d: int) -> ZonalPoly:
    return ZonalPoly(d, {(0, 1): Fraction(1)})


def evaluate(p: ZonalPoly, z):
    """Evaluate p at z (scalar or array) in complex floating point."""
    z = np.asarray(z, dtype=complex)
    if not p.coeffs:
        return np.zeros_like(z) if z.ndim else 0j
    amax = max(a for a, _ in p.coeffs)
    bmax = max(b for _, b in p.coeffs)
    # powers are cheap compared with the bookkeeping of a true bivariate Horner
    zp = [np.ones_like(z)]
    for _ in range(amax):
        zp.append(zp[-1] * z)
    zc = np.conj(z)
    zcp = [np.ones_like(z)]
    for _ in range(bmax):
        zcp.append(zcp[-1] * zc)
    out = np.zeros_like(z)
    for (a, b), c in p.coeffs.items():
        out = out + complex(c) * zp[a] * zcp[b]
    return out if out.ndim else complex(out)


###############################################################################
#   HARMONIC DIMENSIONS AND g_{k,l}
###############################################################################

def _binom(n: int, r: int) -> int:
    return comb(n, r) if 0 <= r <= n else 0


def harm_dim(d: int, deg) -> int:
    """m_{k,l} = dim Harm(k,l)."""
    if d < 1:
        raise ValueError("d must be >= 1")
    k, l = _bideg(deg)
    return (_binom(d + k - 1, d - 1) * _binom(d + l - 1, d - 1)
            - _binom(d + k - 2, d - 1) * _binom(d + l - 2, d - 1))


def hom_dim(d: int, deg) -> int:
    k, l = _bideg(deg)
    return _binom(d + k - 1, d - 1) * _binom(d + l - 1, d - 1)


@lru_cache(maxsize=4096)
def _jacobi_coeffs(d: int, k: int, l: int) -> tuple:
    pre = Fraction(d + k + l - 1, factorial(d - 1))
    out = []
    for r in range(min(k, l) + 1):
        c = pre * (-1) ** r * Fraction(factorial(d + k + l - r - 2),
                                       factorial(r) * factorial(k - r) * factorial(l - r))
        out.append(((k - r, l - r), c))
    return tuple(out)


def jacobi(d: int, deg) -> ZonalPoly:
    """The zonal polynomial g_{k,l} for Harm(k,l) in C^d, with g(1) = m_{k,l}."""
    if d < 2:
        raise ValueError("jacobi polynomials need d >= 2")
    k, l = _bideg(deg)
    if k == 0 and l == 0:
        return ZonalPoly(d, {(0, 0): Fraction(1)})
    return ZonalPoly(d, dict(_jacobi_coeffs(d, k, l)))


def leading_coeff(d: int, deg) -> Fraction:
    """Coefficient of x^k conj(x)^l in g_{k,l}."""
    k, l = _bideg(deg)
    if k == 0 and l == 0:
        return Fraction(1)
    return _jacobi_coeffs(d, k, l)[0][1]


###############################################################################
#   EXPANSION IN THE JACOBI BASIS
###############################################################################

@dataclass(frozen=True)
class JacobiExpansion:
    dim: int
    terms: Mapping = field(default_factory=dict)

    def __post_init__(self):
        object.__setattr__(self, "terms", {_bideg(kl): c for kl, c in _clean(self.terms).items()})

    def __getitem__(self, deg):
        return self.terms.get(tuple(deg), 0)

    def synthesize(self) -> ZonalPoly:
        return synthesize(self)

    def support(self) -> LowerSet:
        return lowerset_closure(self.terms)


def synthesize(E: JacobiExpansion) -> ZonalPoly:
    out = ZonalPoly(E.dim, {})
    for deg, c in E.terms.items():
        out = out + jacobi(E.dim, deg) * c
    return out


def expand(d: int, F: ZonalPoly) -> JacobiExpansion:
    """Write F as sum f_{k,l} g_{k,l}.

    g_{a,b} has leading monomial x^a conj(x)^b and otherwise only monomials
    (a-r, b-r), so peeling off the highest total degree first is a
    triangular solve.
    """
    if d < 2:
        raise ValueError("d must be >= 2")
    rest = dict(F.coeffs)
    terms: dict = {}
    while rest:
        a, b = max(rest, key=lambda m: (m[0] + m[1], m[0]))
        c = rest.pop((a, b))
        f = c / leading_coeff(d, (a, b))
        terms[(a, b)] = f
        for (a2, b2), v in _jacobi_coeffs(d, a, b)[1:] if (a, b) != (0, 0) else ():
            nv = rest.get((a2, b2), 0) - f * v
            if nv == 0:
                rest.pop((a2, b2), None)
            else:
                rest[(a2, b2)] = nv
    return JacobiExpansion(d, terms)


def _rec_a(d, k, l):
    return Fraction(k + 1, d + k + l)


def _rec_b(d, k, l):
    return Fraction(d + l - 2, d + k + l - 2) if l > 0 else Fraction(0)


def times_x(E: JacobiExpansion) -> JacobiExpansion:
    """Multiply an expansion by x using the three-term recurrence
    x g_{k,l} = a_{k,l} g_{k+1,l} + b_{k,l} g_{k,l-1}."""
    d = E.dim
    out: dict = {}
    for (k, l), c in E.terms.items():
        out[(k + 1, l)] = out.get((k + 1, l), 0) + c * _rec_a(d, k, l)
        if l > 0:
            out[(k, l - 1)] = out.get((k, l - 1), 0) + c * _rec_b(d, k, l)
    return JacobiExpansion(d, out)


def times_xbar(E: JacobiExpansion) -> JacobiExpansion:
    d = E.dim
    out: dict = {}
    for (k, l), c in E.terms.items():
        out[(k, l + 1)] = out.get((k, l + 1), 0) + c * _rec_a(d, l, k)
        if k > 0:
            out[(k - 1, l)] = out.get((k - 1, l), 0) + c * _rec_b(d, l, k)
    return JacobiExpansion(d, out)


def expand_by_recurrence(d: int, F: ZonalPoly) -> JacobiExpansion:
    """Same result as :func:`expand`, built monomial by monomial from the
    recurrence.  Slower; kept as an independent cross-check."""
    total: dict = {}
    cache: dict = {(0, 0): JacobiExpansion(d, {(0, 0): Fraction(1)})}

    def mono(a, b):
        if (a, b) not in cache:
            cache[(a, b)] = times_x(mono(a - 1, b)) if a > 0 else times_xbar(mono(a, b - 1))
        return cache[(a, b)]

    for (a, b), c in sorted(F.coeffs.items()):
        for deg, v in mono(a, b).terms.items():
            total[deg] = total.get(deg, 0) + c * v
    return JacobiExpansion(d, total)


def product_expand(d: int, degA, degB) -> JacobiExpansion:
    """Jacobi expansion of g_A * g_B."""
    return expand(d, jacobi(d, degA) * jacobi(d, degB))


###############################################################################
#   GEGENBAUER
###############################################################################

def _lam(d, k):
    if k == 0:
        return Fraction(0)
    return Fraction(k, d + 2 * k - 2)


def gegenbauer(d: int, k: int) -> list[Fraction]:
    """Coefficients (lowest degree first) of Q_{d,k}, normalised by
    Q_{d,0} = 1, Q_{d,1} = d x."""
    if d < 2 or k < 0:
        raise ValueError("need d >= 2 and k >= 0")
    q_prev, q = [Fraction(1)], [Fraction(0), Fraction(d)]
    if k == 0:
        return q_prev
    for j in range(1, k):
        # Q_{j+1} = (x Q_j + (lam_{j-1} - 1) Q_{j-1}) / lam_{j+1}
        nxt = [Fraction(0)] + q
        for i, c in enumerate(q_prev):
            nxt[i] += (_lam(d, j - 1) - 1) * c
        lam = _lam(d, j + 1)
        q_prev, q = q, [c / lam for c in nxt]
    return q


def gegenbauer_eval(d: int, k: int, t):
    coeffs = gegenbauer(d, k)
    return np.polynomial.polynomial.polyval(np.asarray(t, dtype=float), [float(c) for c in coeffs])


def monomial_basis(U: Iterable) -> list[BiDegree]:
    """Canonical column order: total degree, then decreasing k."""
    return sorted({_bideg(u) for u in U}, key=lambda m: (m.k + m.l, -m.k))


def all_bidegrees(cutoff: int) -> list[BiDegree]:
    return [BiDegree(k, t - k) for t in range(cutoff + 1) for k in range(t, -1, -1)]


__all__ = [
    "BiDegree", "LowerSet", "ZonalPoly", "JacobiExpansion", "harm_dim", "hom_dim",
    "jacobi", "evaluate", "expand", "expand_by_recurrence", "synthesize",
    "product_expand", "gegenbauer", "gegenbauer_eval", "lowerset_closure",
    "convolve", "parse_lower_set", "leading_coeff", "times_x", "times_xbar",
    "x_poly", "xbar_poly", "monomial_basis", "all_bidegrees",
]
