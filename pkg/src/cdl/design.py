"""Design tests: residuals, moments, strength discovery."""

from __future__ import annotations

from dataclasses import dataclass, field
from math import comb

import numpy as np

from .poly import (LowerSet, all_bidegrees, gegenbauer, harm_dim,
                   jacobi, _bideg)
from .space import PointSet, embed_real, gram

DESIGN_TOL = 1e-7
MOMENT_TOL = 1e-9
DEFAULT_CUTOFF = 8


class MomentTable:
    """Caches M[a, b] = sum_{x,y} (x^*y)^a conj(x^*y)^b for one point set.

    Every zonal double sum is a fixed linear combination of these, so a whole
    strength scan costs one pass of Gram powers.
    """

    def __init__(self, X: PointSet):
        self.X = X
        self.n = len(X)
        self._G = gram(X).ravel()
        self._pow = [np.ones_like(self._G)]
        self._M: dict = {}

    def _power(self, a):
        while len(self._pow) <= a:
            self._pow.append(self._pow[-1] * self._G)
        return self._pow[a]

    def __getitem__(self, ab) -> complex:
        a, b = ab
        if (a, b) not in self._M:
            self._M[(a, b)] = complex(np.vdot(self._power(b), self._power(a)))
        return self._M[(a, b)]

    def zonal_sum(self, deg) -> complex:
        """sum_{x,y} g_{k,l}(x^* y)."""
        g = jacobi(self.X.dim, deg)
        return sum(complex(c) * self[ab] for ab, c in g.coeffs.items())


def zonal_sum(X: PointSet, deg) -> complex:
    return MomentTable(X).zonal_sum(deg)


def design_residual(X: PointSet, deg, table: MomentTable | None = None) -> float:
    """|sum_{x,y} g_{k,l}(x^*y)| / (|X| m_{k,l}); zero iff (k,l)-harmonic averages vanish."""
    k, l = _bideg(deg)
    if (k, l) == (0, 0):
        raise ValueError("the residual at (0,0) is undefined")
    table = table or MomentTable(X)
    return abs(table.zonal_sum((k, l))) / (len(X) * harm_dim(X.dim, (k, l)))


@dataclass
class DesignReport:
    residuals: dict
    verdict: LowerSet
    cutoff: int
    tol: float
    checked: list = field(default_factory=list)

    def passed(self, deg) -> bool:
        deg = tuple(deg)
        return deg == (0, 0) or self.residuals.get(deg, np.inf) <= self.tol

    def to_dict(self) -> dict:
        return {
            "verdict": str(self.verdict),
            "members": sorted([list(m) for m in self.verdict.members]),
            "cutoff": self.cutoff,
            "tol": self.tol,
            "residuals": [{"k": k, "l": l, "residual": float(r)}
                          for (k, l), r in sorted(self.residuals.items())],
        }


def _largest_lower_set(passing: set, cutoff: int) -> LowerSet:
    ok = {(0, 0)} | passing
    members = set()
    for k, l in all_bidegrees(cutoff):
        if all((a, b) in ok for a in range(k + 1) for b in range(l + 1)):
            members.add((k, l))
    return LowerSet(frozenset(members))


def max_design_strength(X: PointSet, cutoff: int = DEFAULT_CUTOFF,
                        tol: float = DESIGN_TOL) -> DesignReport:
    """Largest lower set inside {k+l <= cutoff} on which X is a design."""
    if cutoff < 1:
        raise ValueError("cutoff must be at least 1")
    table = MomentTable(X)
    res = {}
    for deg in all_bidegrees(cutoff):
        if deg != (0, 0):
            res[tuple(deg)] = design_residual(X, deg, table)
    passing = {deg for deg, r in res.items() if r <= tol}
    return DesignReport(res, _largest_lower_set(passing, cutoff), cutoff, tol)


def is_design(X: PointSet, T, tol: float = DESIGN_TOL):
    T = T if isinstance(T, LowerSet) else LowerSet(frozenset(T))
    table = MomentTable(X)
    res = {tuple(m): design_residual(X, m, table) for m in T.members if tuple(m) != (0, 0)}
    ok = all(r <= tol for r in res.values())
    passing = {deg for deg, r in res.items() if r <= tol}
    cutoff = max((k + l for k, l in T.members), default=0)
    verdict = LowerSet(frozenset(m for m in _largest_lower_set(passing, cutoff).members
                                 if m in T))
    return ok, DesignReport(res, verdict, cutoff, tol, checked=T.sorted())


# ----------------------------------------------------------------------------
# moments and regularity
# ----------------------------------------------------------------------------

def sphere_moment(d: int, deg) -> float:
    """Average of (x^*y)^k conj(x^*y)^l over the sphere: delta_{kl} / C(d+k-1, k)."""
    k, l = _bideg(deg)
    return 1.0 / comb(d + k - 1, k) if k == l else 0.0


def moment(X: PointSet, deg, table: MomentTable | None = None) -> complex:
    """(1/|X|^2) sum_{x,y} (x^*y)^k (y^*x)^l."""
    k, l = _bideg(deg)
    table = table or MomentTable(X)
    return table[(k, l)] / len(X) ** 2


def regularity_check(X: PointSet, deg, tol: float = MOMENT_TOL,
                     table: MomentTable | None = None) -> bool:
    """True when the (k,l) moment matches the sphere moment, i.e. X averages
    all of Hom(k,l) correctly."""
    return abs(moment(X, deg, table) - sphere_moment(X.dim, deg)) <= tol


def real_design_check(X: PointSet, t: int, tol: float = DESIGN_TOL) -> bool:
    """Is phi(X) a real spherical t-design in S^{2d-1}?  Uses Gegenbauer sums."""
    R = embed_real(X)
    ip = (R @ R.T).ravel()
    n, D = len(X), 2 * X.dim
    powers = [np.ones_like(ip)]
    for _ in range(t):
        powers.append(powers[-1] * ip)
    sums = [p.sum() for p in powers]
    for i in range(1, t + 1):
        q = gegenbauer(D, i)
        total = sum(float(c) * sums[j] for j, c in enumerate(q))
        norm = float(sum(q))  # Q(1)
        if abs(total) / (n * norm) > tol:
            return False
    return True


def regularity_chain(X: PointSet, deg, tol: float = DESIGN_TOL,
                     table: MomentTable | None = None) -> bool:
    """Residual test along (k,l), (k-1,l-1), ... which is what (k,l)-regularity
    amounts to in terms of harmonic pieces."""
    k, l = _bideg(deg)
    table = table or MomentTable(X)
    return all(design_residual(X, (k - i, l - i), table) <= tol
               for i in range(min(k, l) + 1) if (k - i, l - i) != (0, 0))


__all__ = [
    "MomentTable", "zonal_sum", "design_residual", "DesignReport", "max_design_strength",
    "is_design", "sphere_moment", "moment", "regularity_check", "real_design_check",
    "regularity_chain", "DESIGN_TOL", "DEFAULT_CUTOFF",
]
