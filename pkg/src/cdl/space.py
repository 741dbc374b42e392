"""Finite point sets on the unit sphere of C^d and their inner-product data."""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np
from scipy.sparse import coo_matrix
from scipy.sparse.csgraph import connected_components
from scipy.spatial import cKDTree

DEFAULT_TOL = 1e-8
UNIT_TOL = 1e-12


class DuplicatePointsError(ValueError):
    """Two points of a set coincide (an off-diagonal inner product equals 1)."""


@dataclass(frozen=True, eq=False)
class PointSet:
    """An ordered list of unit vectors in C^d.

    ``points`` is an (n, d) complex array, one point per row.
    """

    dim: int
    points: np.ndarray
    tol: float = DEFAULT_TOL
    name: str = ""

    def __post_init__(self):
        P = np.array(self.points, dtype=complex, copy=True)
        if P.ndim != 2 or P.shape[1] != self.dim:
            raise ValueError(f"expected an (n, {self.dim}) array, got shape {P.shape}")
        norms = np.linalg.norm(P, axis=1)
        bad = np.flatnonzero(np.abs(norms - 1) > UNIT_TOL * max(1, self.dim))
        if bad.size:
            raise ValueError(f"point {bad[0]} has norm {norms[bad[0]]!r}, not 1")
        P.setflags(write=False)
        object.__setattr__(self, "points", P)

    def __len__(self):
        return self.points.shape[0]

    def __iter__(self):
        return iter(self.points)

    def __getitem__(self, i):
        return self.points[i]

    def transform(self, U: np.ndarray) -> "PointSet":
        """Apply the linear map U to every point (U should be unitary)."""
        return PointSet(self.dim, self.points @ np.asarray(U).T, self.tol, self.name)

    def with_points(self, pts, name=None) -> "PointSet":
        return PointSet(self.dim, pts, self.tol, self.name if name is None else name)


def normalized(rows) -> np.ndarray:
    P = np.asarray(rows, dtype=complex)
    return P / np.linalg.norm(P, axis=1, keepdims=True)


def gram(X: PointSet) -> np.ndarray:
    """G[i, j] = x_i^* x_j (conjugate-linear in the first slot)."""
    P = X.points
    return P.conj() @ P.T


# ----------------------------------------------------------------------------
# inner product set
# ----------------------------------------------------------------------------

@dataclass(frozen=True, eq=False)
class AngleSet:
    """The inner-product set A(X) with pair counts.

    ``labels[i, j]`` is 0 on the diagonal and r >= 1 when x_i^* x_j is
    (clustered to) ``alphas[r-1]``.  ``conj_index[r]`` gives the label of the
    conjugate angle, so relation r transposes to relation ``conj_index[r]``.
    """

    alphas: np.ndarray
    counts: np.ndarray
    labels: np.ndarray = field(repr=False)
    conj_index: np.ndarray = field(repr=False)

    @property
    def s(self) -> int:
        return len(self.alphas)

    def values(self) -> np.ndarray:
        """alpha_0 = 1 followed by alpha_1..alpha_s."""
        return np.concatenate([[1.0 + 0j], self.alphas])

    def strict(self) -> np.ndarray:
        """A*(X): the angles of modulus < 1."""
        return self.alphas[np.abs(self.alphas) < 1 - 1e-9]

    def index_of(self, alpha, tol=1e-6) -> int:
        """Label (1-based) of the angle closest to ``alpha``."""
        dist = np.abs(self.alphas - complex(alpha))
        r = int(np.argmin(dist))
        if dist[r] > tol:
            raise KeyError(f"{alpha} is not an angle of this set")
        return r + 1


def _angle_key(a: complex, tol: float):
    mod = round(abs(a) / max(tol, 1e-12)) * tol
    if abs(a) < tol:
        return (0.0, 0.0)
    arg = np.angle(a)
    if arg < 0:
        arg += 2 * np.pi
    if arg > 2 * np.pi - 1e-9:
        arg = 0.0
    return (-mod, round(arg, 9))


def cluster_values(vals: np.ndarray, tol: float):
    """Single-linkage clustering of complex values with radius ``tol``.

    Returns (representatives, counts, inverse) where ``inverse`` maps each
    input value to its cluster.  Representatives are count-weighted means.
    """
    vals = np.asarray(vals, dtype=complex).ravel()
    grid = max(tol * 1e-3, 1e-13)
    keys = np.stack([np.round(vals.real / grid), np.round(vals.imag / grid)], axis=1)
    uniq, inv, cnt = np.unique(keys, axis=0, return_inverse=True, return_counts=True)
    inv = inv.ravel()
    m = len(uniq)
    sums = np.zeros(m, dtype=complex)
    np.add.at(sums, inv, vals)
    means = sums / cnt
    pts = np.stack([means.real, means.imag], axis=1)
    pairs = cKDTree(pts).query_pairs(r=tol, output_type="ndarray")
    graph = coo_matrix((np.ones(len(pairs)), (pairs[:, 0], pairs[:, 1])), shape=(m, m)) \
        if len(pairs) else coo_matrix((m, m))
    ncomp, comp = connected_components(graph, directed=False)
    ccount = np.bincount(comp, weights=cnt, minlength=ncomp).astype(int)
    csum = np.zeros(ncomp, dtype=complex)
    np.add.at(csum, comp, sums)
    reps = csum / ccount
    return reps, ccount, comp[inv]


def angle_set(X: PointSet, tol: float | None = None) -> AngleSet:
    tol = X.tol if tol is None else tol
    n = len(X)
    G = gram(X)
    off = ~np.eye(n, dtype=bool)
    reps, counts, inv = cluster_values(G[off], tol)
    dup = np.abs(reps - 1) <= tol
    if dup.any():
        flat = np.flatnonzero(off.ravel())[np.flatnonzero(dup[inv])[0]]
        i, j = divmod(int(flat), n)
        raise DuplicatePointsError(f"points {i} and {j} coincide")
    order = sorted(range(len(reps)), key=lambda r: _angle_key(reps[r], tol))
    rank = np.empty(len(reps), dtype=int)
    rank[order] = np.arange(1, len(reps) + 1)
    labels = np.zeros((n, n), dtype=np.int32)
    labels[off] = rank[inv]
    alphas = reps[order]
    counts = counts[order]
    conj_index = np.zeros(len(alphas) + 1, dtype=int)
    for r, a in enumerate(alphas, start=1):
        conj_index[r] = int(np.argmin(np.abs(alphas - np.conj(a)))) + 1
    return AngleSet(alphas, counts, labels, conj_index)


# ----------------------------------------------------------------------------
# antipodal structure
# ----------------------------------------------------------------------------

def antipodal_cover(L: PointSet, n: int) -> PointSet:
    """L, wL, ..., w^{n-1}L stacked in that order (w = exp(2 pi i/n))."""
    if n < 2:
        raise ValueError("n must be at least 2")
    w = np.exp(2j * np.pi / n)
    pts = np.concatenate([L.points * w ** j for j in range(n)])
    Y = PointSet(L.dim, pts, L.tol, L.name and f"{L.name}-cover{n}")
    try:
        check_distinct(Y)
    except DuplicatePointsError as exc:
        raise ValueError(f"two points of L differ by a {n}-th root of unity ({exc})") from None
    return Y


def check_distinct(X: PointSet) -> None:
    G = gram(X)
    np.fill_diagonal(G, 0)
    hit = np.argwhere(np.abs(G - 1) <= X.tol)
    if len(hit):
        i, j = hit[0]
        raise DuplicatePointsError(f"points {i} and {j} coincide")


def detect_antipodal(X: PointSet, n: int):
    """Fibres of an n-antipodal structure, or None.

    Returns a list of index lists; fibre f is [i, idx(w x_i), idx(w^2 x_i), ...]
    with representative i the smallest index not already used.
    """
    w = np.exp(2j * np.pi / n)
    G = gram(X)
    # x_i = w x_j  <=>  x_i^* x_j = conj(w)
    hit = np.abs(G - np.conj(w)) <= X.tol
    if not (hit.sum(axis=0) == 1).all():
        return None
    succ = hit.argmax(axis=0)  # succ[j] = index of w x_j
    seen = np.zeros(len(X), dtype=bool)
    fibres = []
    for i in range(len(X)):
        if seen[i]:
            continue
        orb = [i]
        j = succ[i]
        while j != i and len(orb) <= n:
            orb.append(int(j))
            j = succ[j]
        if len(orb) != n:
            return None
        seen[orb] = True
        fibres.append(orb)
    return fibres


def fibre(X: PointSet, n: int) -> PointSet:
    fib = detect_antipodal(X, n)
    if fib is None:
        raise ValueError(f"set is not {n}-antipodal")
    return X.with_points(X.points[[f[0] for f in fib]])


def embed_real(X: PointSet) -> np.ndarray:
    """phi: C^d -> R^{2d}, (Re x_1, Im x_1, ..., Re x_d, Im x_d)."""
    P = X.points
    out = np.empty((len(X), 2 * X.dim))
    out[:, 0::2] = P.real
    out[:, 1::2] = P.imag
    return out


def from_real(R: np.ndarray, tol=DEFAULT_TOL) -> PointSet:
    R = np.asarray(R, dtype=float)
    return PointSet(R.shape[1] // 2, R[:, 0::2] + 1j * R[:, 1::2], tol)


# ----------------------------------------------------------------------------
# derived codes
# ----------------------------------------------------------------------------

def householder_to_e1(z: np.ndarray) -> np.ndarray:
    """A unitary U with U z = e_1 (z a unit vector)."""
    z = np.asarray(z, dtype=complex)
    d = len(z)
    theta = np.angle(z[0]) if abs(z[0]) > 1e-15 else 0.0
    ph = np.exp(1j * theta)
    v = z.copy()
    v[0] += ph
    H = np.eye(d, dtype=complex) - 2 * np.outer(v, v.conj()) / np.vdot(v, v).real
    return -np.conj(ph) * H


def derived_code(X: PointSet, z: int, alpha, twist: np.ndarray | None = None,
                 tol: float | None = None) -> PointSet:
    """Project the alpha-neighbours of x_z onto z-perp and rescale into Omega(d-1).

    ``twist`` is an optional (d-1)x(d-1) unitary applied afterwards; any
    choice gives the same code up to a global unitary.
    """
    tol = X.tol if tol is None else tol
    alpha = complex(alpha)
    if abs(alpha) >= 1 - tol:
        raise ValueError("derived codes need |alpha| < 1")
    zv = X.points[z]
    ips = X.points @ zv.conj()  # z^* y for each y
    sel = np.flatnonzero(np.abs(ips - alpha) <= max(tol, 1e-6))
    if sel.size == 0:
        raise ValueError(f"no point y with z^* y = {alpha}")
    U = householder_to_e1(zv)
    Y = X.points[sel] @ U.T
    W = Y[:, 1:] / np.sqrt(1 - abs(alpha) ** 2)
    if twist is not None:
        W = W @ np.asarray(twist).T
    name = X.name and f"{X.name}-derived"
    return PointSet(X.dim - 1, W, X.tol, name)


def random_unitary(d: int, rng: np.random.Generator) -> np.ndarray:
    A = rng.normal(size=(d, d)) + 1j * rng.normal(size=(d, d))
    Q, R = np.linalg.qr(A)
    return Q * (np.diag(R) / np.abs(np.diag(R)))


def random_points(d: int, n: int, rng: np.random.Generator, tol=DEFAULT_TOL) -> PointSet:
    A = rng.normal(size=(n, d)) + 1j * rng.normal(size=(n, d))
    return PointSet(d, normalized(A), tol)
