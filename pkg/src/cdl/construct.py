"""Generators for the example codes and designs, with the small finite-field
and Galois-ring arithmetic they rely on.  Every generator is deterministic."""

from __future__ import annotations

from dataclasses import dataclass
from itertools import permutations, product
from typing import Callable

import numpy as np
from scipy.linalg import helmert

from .grouprep import hoggar_group, orbit, sic_d2_group
from .space import PointSet, antipodal_cover, derived_code, from_real, gram


class ConstructionError(RuntimeError):
    """A generator's built-in sanity guard failed."""


def _dedupe(rows: np.ndarray, decimals: int = 9) -> np.ndarray:
    keys = np.round(rows, decimals) + 0.0
    _, idx = np.unique(np.concatenate([keys.real, keys.imag], axis=1), axis=0, return_index=True)
    return rows[np.sort(idx)]


def _expect(n: int, X: PointSet, what: str) -> PointSet:
    if len(X) != n:
        raise ConstructionError(f"{what}: expected {n} points, built {len(X)}")
    return X


def isprime(n: int) -> bool:
    return n >= 2 and all(n % k for k in range(2, int(n ** 0.5) + 1))


def _require_prime(p: int, odd: bool = False):
    if not isprime(p) or (odd and p == 2):
        raise ValueError(f"{p} is not an {'odd ' if odd else ''}prime")


####
# simple families
####

def standard_basis(d: int) -> PointSet:
    return PointSet(d, np.eye(d, dtype=complex), name=f"basis{d}")


def cross_polytope(d: int, n: int = 2) -> PointSet:
    """n-antipodal cover of the standard basis of C^d (2d points for n=2)."""
    X = antipodal_cover(standard_basis(d), n)
    return PointSet(d, X.points, name=f"cross-polytope-{d}-{n}")


def regular_simplex_cover(d: int) -> PointSet:
    """2d+1 points whose real images form a regular simplex in R^{2d}."""
    D = 2 * d
    H = helmert(D + 1)  # rows orthonormal and orthogonal to the all-ones vector
    R = H.T * np.sqrt((D + 1) / D)
    return PointSet(d, from_real(R).points, name=f"simplex-{d}")


####
# SIC-POVM covers
####

SIC_D2_SEED = np.array([1.0, (-1 - np.sqrt(3)) / 2 * (1 + 1j)])
HOGGAR_SEED = np.array([0, 0, 1 + 1j, 1 - 1j, 1 + 1j, -1 - 1j, 0, 2], dtype=complex)


def sic_d2() -> PointSet:
    """4-antipodal cover of a SIC-POVM in C^2 (16 points)."""
    X = orbit(sic_d2_group(), SIC_D2_SEED)
    return _expect(16, PointSet(2, X.points, name="sic-d2"), "sic-d2")


def hoggar() -> PointSet:
    """4-antipodal cover of the Hoggar lines in C^8 (256 points)."""
    X = orbit(hoggar_group(), HOGGAR_SEED)
    return _expect(256, PointSet(8, X.points, name="hoggar"), "hoggar")


####
# Galois ring GR(4^r) and the Kerdock sets
####

_PRIMITIVE_BINARY = {
    1: (1, 1),
    2: (1, 1, 1),
    3: (1, 1, 0, 1),
    4: (1, 1, 0, 0, 1),
    5: (1, 0, 1, 0, 0, 1),
    6: (1, 1, 0, 0, 0, 0, 1),
}


def _polymul(a, b):
    return np.convolve(np.asarray(a, dtype=np.int64), np.asarray(b, dtype=np.int64))


def hensel_lift(f2) -> np.ndarray:
    """Lift a monic binary polynomial (low degree first) to Z_4.

    Splitting f = e(x) + o(x) into even and odd parts, the lift h satisfies
    h(x^2) = (-1)^r (e(x)^2 - o(x)^2) mod 4.
    """
    f = np.asarray(f2, dtype=np.int64)
    r = len(f) - 1
    e = np.where(np.arange(r + 1) % 2 == 0, f, 0)
    o = np.where(np.arange(r + 1) % 2 == 1, f, 0)
    sq = _polymul(e, e) - _polymul(o, o)
    sq = (-1) ** r * sq
    if np.any(sq[1::2] % 4):
        raise ArithmeticError("odd coefficients survived the Graeffe step")
    return sq[0::2] % 4


class GaloisRing:
    """GR(4^r) = Z_4[x]/(h), h the Hensel lift of a primitive binary polynomial.

    Elements are length-r integer vectors of coefficients in Z_4 (low degree
    first).  ``x`` is a root of h of multiplicative order 2^r - 1, so its
    powers together with 0 form the Teichmuller set.
    """

    def __init__(self, r: int):
        if r not in _PRIMITIVE_BINARY:
            raise ValueError(f"no tabulated primitive polynomial of degree {r}")
        self.r = r
        self.h = hensel_lift(_PRIMITIVE_BINARY[r])
        # companion matrix of x: acts on coefficient column vectors
        C = np.zeros((r, r), dtype=np.int64)
        C[1:, :-1] = np.eye(r - 1, dtype=np.int64)
        C[:, -1] = (-self.h[:r]) % 4
        self._C = C

    @property
    def size(self) -> int:
        return 4 ** self.r

    def elements(self) -> np.ndarray:
        """All 4^r elements, lexicographic in their coefficient vectors."""
        return np.array(list(product(range(4), repeat=self.r)), dtype=np.int64)

    def mult_matrix(self, a) -> np.ndarray:
        """Matrix of y -> a*y on coefficient vectors."""
        M = np.zeros((self.r, self.r), dtype=np.int64)
        P = np.eye(self.r, dtype=np.int64)
        for c in a:
            M = (M + c * P) % 4
            P = (self._C @ P) % 4
        return M

    def mul(self, a, b) -> np.ndarray:
        return (self.mult_matrix(a) @ np.asarray(b, dtype=np.int64)) % 4

    def trace(self, a) -> int:
        return int(np.trace(self.mult_matrix(a)) % 4)

    def teichmuller(self) -> np.ndarray:
        """0 followed by 1, x, x^2, ..., x^{2^r - 2}."""
        m = 2 ** self.r - 1
        out = [np.zeros(self.r, dtype=np.int64)]
        v = np.zeros(self.r, dtype=np.int64)
        v[0] = 1
        for _ in range(m):
            out.append(v)
            v = (self._C @ v) % 4
        if not (v[0] == 1 and not v[1:].any()):
            raise ArithmeticError("x does not have order 2^r - 1")
        T = np.array(out)
        if len({tuple(t) for t in T}) != m + 1:
            raise ArithmeticError("Teichmuller set has repeats")
        return T


def kerdock_words(r: int) -> np.ndarray:
    """The 4^r words (Tr(lam * tau))_{tau in T} over Z_4, one per lam in GR(4^r)."""
    R = GaloisRing(r)
    tr = np.array([R.trace(np.eye(r, dtype=np.int64)[i]) for i in range(r)])
    cols = [(R.mult_matrix(tau).T @ tr) % 4 for tau in R.teichmuller()]
    F = np.array(cols).T  # (r, d)
    return (R.elements() @ F) % 4


def _allowed_kerdock_angles(d: int, odd: bool) -> np.ndarray:
    if odd:
        base = [(a + b * 1j) / np.sqrt(2 * d) for a in (1, -1) for b in (1, -1)]
    else:
        base = [u / np.sqrt(d) for u in (1, 1j, -1, -1j)]
    return np.array(base + [0, 1, 1j, -1, -1j])


def kerdock_fibre(r: int) -> PointSet:
    """d(d+1) unit vectors in C^d, d = 2^r, forming d+1 mutually unbiased bases."""
    d = 2 ** r
    W = kerdock_words(r)
    vecs = (1j ** W) / np.sqrt(d)
    # keep one word per Z_4 coset {w + eps}: the cover supplies the phases
    keep = _dedupe_projective(vecs)
    if r % 2:
        extra = np.eye(d) * np.exp(1j * np.pi / 4)
    else:
        extra = np.eye(d, dtype=complex)
    L = np.concatenate([vecs[keep], extra])
    return PointSet(d, L, name=f"kerdock-fibre-{r}")


def _dedupe_projective(vecs: np.ndarray) -> list:
    seen, keep = set(), []
    for i, v in enumerate(vecs):
        j = int(np.flatnonzero(np.abs(v) > 1e-12)[0])
        u = v * (abs(v[j]) / v[j])
        k = (np.round(u, 9) + 0.0).tobytes()
        if k not in seen:
            seen.add(k)
            keep.append(i)
    return keep


def kerdock_code_set(r: int) -> PointSet:
    """4-antipodal cover of the Z_4 Kerdock MUB fibre; 4d(d+1) points, d = 2^r."""
    if r < 1:
        raise ValueError("r must be positive")
    d = 2 ** r
    L = kerdock_fibre(r)
    if len(L) != d * (d + 1):
        raise ConstructionError(f"Kerdock fibre has {len(L)} vectors, expected {d * (d + 1)}")
    X = antipodal_cover(L, 4)
    G = gram(X)
    allowed = _allowed_kerdock_angles(d, r % 2 == 1)
    dist = np.abs(G.ravel()[:, None] - allowed[None, :]).min(axis=1)
    if dist.max() > 1e-8:
        raise ConstructionError("Kerdock inner products fall outside the weight classes")
    return PointSet(d, X.points, name=f"kerdock-{r}")


def mub_partition(L: PointSet, tol: float = 1e-8) -> list:
    """Split an MUB set into its orthonormal bases; raises if it is not one."""
    from scipy.sparse.csgraph import connected_components

    G = np.abs(gram(L))
    ncomp, comp = connected_components(G < tol, directed=False)
    bases = [np.flatnonzero(comp == c) for c in range(ncomp)]
    d = L.dim
    if any(len(b) != d for b in bases):
        raise ConstructionError("orthogonality classes are not bases")
    for a in range(ncomp):
        for b in range(a + 1, ncomp):
            block = G[np.ix_(bases[a], bases[b])]
            if np.abs(block - 1 / np.sqrt(d)).max() > tol:
                raise ConstructionError(f"bases {a} and {b} are not unbiased")
    return bases


def mub_cover(family: str, r: int) -> PointSet:
    """4-antipodal cover of d+1 MUBs in C^d, d = 2^r.

    ``family`` is "odd" or "even" and must match the parity of r; it selects
    the fibre angle set {(+-1+-i)/sqrt(2d), 0} or {+-1/sqrt(d), +-i/sqrt(d), 0}.
    """
    if family not in ("odd", "even"):
        raise ValueError("family must be 'odd' or 'even'")
    if (r % 2 == 1) != (family == "odd"):
        raise ValueError(f"r={r} does not belong to the {family} family")
    L = kerdock_fibre(r)
    mub_partition(L)
    X = kerdock_code_set(r)
    return PointSet(X.dim, X.points, name=f"mub-{family}-{r}")


####
# Coxeter's configurations
####

def coxeter_27() -> PointSet:
    w = np.exp(2j * np.pi / 3)
    rows = []
    for mu, nu in product(range(3), repeat=2):
        a, b = w ** mu, w ** nu
        rows += [(0, a, -b), (-a, 0, b), (a, -b, 0)]
    X = PointSet(3, np.array(rows) / np.sqrt(2), name="coxeter-27")
    return _expect(27, X, "coxeter-27")


def _signed_permutations(forms, scale) -> np.ndarray:
    rows = []
    for f in forms:
        for p in set(permutations(range(len(f)))):
            v = np.array([f[i] for i in p], dtype=complex)
            rows += [v, -v]
    return _dedupe(np.array(rows) * scale)


def coxeter_42() -> PointSet:
    lam = (-1 - np.sqrt(7) * 1j) / 2
    c = 1 / (2 * np.sqrt(2))
    forms = [
        (c * lam ** 2, c * lam ** 2, 0),
        (c * (lam + 2), -c * (lam + 2), 0),
        (lam / np.sqrt(2), 0, 0),
        (c * lam, c * lam, 2 * c),
        (c * lam, -c * lam, 2 * c),
        (-c * lam, -c * lam, 2 * c),
    ]
    return _expect(42, PointSet(3, _signed_permutations(forms, 1), name="coxeter-42"), "coxeter-42")


def coxeter_56() -> PointSet:
    lam = (-1 - np.sqrt(7) * 1j) / 2
    lb = np.conj(lam)
    rows = []
    for s in product((1, -1), repeat=3):
        rows.append(np.array(s) * lam)
    for s in product((1, -1), repeat=3):
        base = np.array([s[0] * lam ** 2, s[1], s[2]])
        for p in set(permutations(range(3))):
            rows.append(base[list(p)])
    for s in product((1, -1), repeat=2):
        base = np.array([s[0] * lb ** 2, s[1] * lb, 0])
        for p in set(permutations(range(3))):
            rows.append(base[list(p)])
    X = PointSet(3, _dedupe(np.array(rows, dtype=complex) / np.sqrt(6)), name="coxeter-56")
    return _expect(56, X, "coxeter-56")


def coxeter_240() -> PointSet:
    """Vertices of the Witting polytope.  Cube roots of unity w together with
    the overall sign give all sixth roots; the first block carries a minus in
    its second slot like the others do."""
    w = np.exp(2j * np.pi / 3)
    rows = []
    for s in (1, -1):
        for mu, nu, la in product(range(3), repeat=3):
            a, b, c = w ** mu, w ** nu, w ** la
            rows += [s * np.array(v) / np.sqrt(3) for v in
                     ((0, a, -b, c), (-a, 0, b, c), (a, -b, 0, c), (-a, -b, -c, 0))]
    for j in range(4):
        for la in range(3):
            for s in (1, -1):
                v = np.zeros(4, dtype=complex)
                v[j] = s * 1j * w ** la
                rows.append(v)
    X = PointSet(4, _dedupe(np.array(rows)), name="coxeter-240")
    return _expect(240, X, "coxeter-240")


def coxeter_756() -> PointSet:
    rows = []
    for i, j in [(i, j) for i in range(6) for j in range(i + 1, 6)]:
        for a, b in product((1, -1), repeat=2):
            v = np.zeros(6, dtype=complex)
            v[i], v[j] = a, b
            rows.append(v / np.sqrt(2))
    for pos in range(6):
        for signs in product((1, -1), repeat=6):
            if signs.count(-1) % 2:
                continue
            v = np.array(signs, dtype=complex)
            v[pos] *= np.sqrt(3) * 1j
            rows.append(v / np.sqrt(8))
    base = np.array(rows)
    w3 = np.exp(2j * np.pi / 3)
    pts = np.concatenate([base * w3 ** k for k in range(3)])
    X = PointSet(6, _dedupe(pts), name="coxeter-756")
    return _expect(756, X, "coxeter-756")


def derived_80() -> PointSet:
    """Derived code of the 756-point set at an angle of modulus 1/2."""
    X = coxeter_756()
    Y = derived_code(X, 0, 0.5)
    return _expect(80, PointSet(5, Y.points, name="derived-80"), "derived-80")


def derived_270() -> PointSet:
    """Derived code of the 756-point set at the angle 0."""
    X = coxeter_756()
    Y = derived_code(X, 0, 0.0)
    return _expect(270, PointSet(5, Y.points, name="derived-270"), "derived-270")


####
# finite fields
####

@dataclass(frozen=True)
class PrimeField:
    p: int

    def __post_init__(self):
        _require_prime(self.p)

    def elements(self) -> range:
        return range(self.p)

    def legendre(self, a: int) -> int:
        a %= self.p
        if a == 0:
            return 0
        return 1 if pow(a, (self.p - 1) // 2, self.p) == 1 else -1

    def squares(self) -> list:
        return sorted({x * x % self.p for x in range(1, self.p)})

    def inv(self, a: int) -> int:
        return pow(a, self.p - 2, self.p)


class CubicExtension:
    """GF(q^3) as GF(q)[x]/(f), f the lexicographically smallest monic
    irreducible cubic.  Elements are coefficient triples (low degree first)."""

    def __init__(self, q: int):
        _require_prime(q)
        self.q = q
        self.f = self._smallest_irreducible()
        C = np.zeros((3, 3), dtype=np.int64)
        C[1, 0] = C[2, 1] = 1
        C[:, 2] = [(-c) % q for c in self.f[:3]]
        self._C = C

    def _smallest_irreducible(self):
        q = self.q
        for c2, c1, c0 in product(range(q), repeat=3):
            # a cubic is irreducible over GF(q) iff it has no root
            if all((x ** 3 + c2 * x * x + c1 * x + c0) % q for x in range(q)):
                return (c0, c1, c2, 1)
        raise ArithmeticError("no irreducible cubic found")

    def mult_matrix(self, a) -> np.ndarray:
        M = np.zeros((3, 3), dtype=np.int64)
        P = np.eye(3, dtype=np.int64)
        for c in a:
            M = (M + c * P) % self.q
            P = (self._C @ P) % self.q
        return M

    def trace(self, a) -> int:
        return int(np.trace(self.mult_matrix(a)) % self.q)

    def powers(self, g, count: int) -> np.ndarray:
        M = self.mult_matrix(g)
        out = np.zeros((count, 3), dtype=np.int64)
        v = np.array([1, 0, 0], dtype=np.int64)
        for e in range(count):
            out[e] = v
            v = (M @ v) % self.q
        return out

    def primitive_element(self) -> tuple:
        order = self.q ** 3 - 1
        for g in product(range(self.q), repeat=3):
            if not any(g):
                continue
            P = self.powers(g, order + 1)
            keys = {tuple(v) for v in P[:order]}
            if len(keys) == order:
                return g
        raise ArithmeticError("no primitive element")


def singer_difference_set(q: int) -> list:
    """Exponents e mod q^2+q+1 with Tr(gamma^e) = 0, gamma primitive in GF(q^3)."""
    F = CubicExtension(q)
    n = q * q + q + 1
    P = F.powers(F.primitive_element(), n)
    D = [e for e in range(n) if F.trace(P[e]) == 0]
    if len(D) != q + 1:
        raise ConstructionError(f"Singer set has {len(D)} elements, expected {q + 1}")
    diffs = sorted((a - b) % n for a in D for b in D if a != b)
    if diffs != list(range(1, n)):
        raise ConstructionError("trace-zero set is not a planar difference set")
    return D


def singer_design(q: int, cover: bool = False) -> PointSet:
    """Normalized characters of Z_n restricted to the Singer set (n = q^2+q+1
    points in C^{q+1}); ``cover`` returns the n-antipodal cover instead."""
    D = np.array(singer_difference_set(q))
    n = q * q + q + 1
    g = np.arange(n)
    pts = np.exp(2j * np.pi * np.outer(g, D) / n) / np.sqrt(len(D))
    X = PointSet(len(D), pts, name=f"singer-{q}")
    if cover:
        X = PointSet(X.dim, antipodal_cover(X, n).points, name=f"singer-{q}-cover")
    return X


def mub_odd_prime(p: int, with_basis: bool = False, cover: int = 0) -> PointSet:
    """Vectors v_{i,y} with entries w^{i x^2 + y x}/sqrt(p), w = exp(2 pi i/p).

    ``with_basis`` appends the standard basis (a complete set of p+1 MUBs);
    ``cover`` > 1 returns that antipodal cover of the result.
    """
    _require_prime(p, odd=True)
    x = np.arange(p)
    rows = [np.exp(2j * np.pi * ((i * x * x + y * x) % p) / p) / np.sqrt(p)
            for i in range(p) for y in range(p)]
    pts = np.array(rows)
    if with_basis:
        pts = np.concatenate([pts, np.eye(p)])
    X = PointSet(p, pts, name=f"mub-prime-{p}")
    if cover > 1:
        X = PointSet(p, antipodal_cover(X, cover).points, name=f"mub-prime-{p}-cover{cover}")
    return X


####
# nonbinary block designs
####

def block_design_lambda(rows, t: int, q: int):
    """lambda_t of a word list over {0..q} (0 = blank), or None if it varies.

    Every rank-t word y over the same length is tested, so this is only
    practical for small d and q.
    """
    W = np.asarray(rows, dtype=int)
    d = W.shape[1]
    ranks = (W != 0).sum(axis=1)
    if len(set(ranks)) != 1:
        return None
    from itertools import combinations

    counts = set()
    for pos in combinations(range(d), t):
        sub = W[:, pos]
        full = (sub != 0).all(axis=1)
        for vals in product(range(1, q + 1), repeat=t):
            counts.add(int((full & (sub == vals).all(axis=1)).sum()))
            if len(counts) > 1:
                return None
    return counts.pop()


def psi(rows, q: int) -> np.ndarray:
    """psi(x)_k = w^{x_k}/sqrt(rank x) for x_k in 1..q, 0 where x_k = 0."""
    W = np.asarray(rows, dtype=int)
    r = (W != 0).sum(axis=1, keepdims=True)
    w = np.exp(2j * np.pi / q)
    return np.where(W != 0, w ** W, 0) / np.sqrt(r)


def oa_design(rows, q: int, t: int = 2) -> PointSet:
    if q < 3:
        raise ValueError("q must be at least 3")
    if t < 2:
        raise ValueError("strength must be at least 2")
    lam = block_design_lambda(rows, t, q)
    if lam is None:
        raise ConstructionError(f"word list is not a nonbinary block {t}-design")
    P = psi(rows, q)
    return PointSet(P.shape[1], P, name=f"oa-{len(P)}")


def oa_9_4_3() -> np.ndarray:
    """OA(9,4,3,2) from the lines of AG(2,3), symbols shifted to 1..3."""
    return np.array([[a, b, (a + b) % 3, (a + 2 * b) % 3] for a in range(3) for b in range(3)]) + 1


####
# Paley tournament
####

def paley_tournament_design(q: int) -> PointSet:
    """q points in C^d, d=(q-1)/2: x -> (exp(2 pi i t x/q))_{t square}/sqrt(d)."""
    _require_prime(q)
    if q % 4 != 3:
        raise ValueError("q must be 3 mod 4")
    QR = np.array(PrimeField(q).squares())
    x = np.arange(q)
    pts = np.exp(2j * np.pi * np.outer(x, QR) / q) / np.sqrt(len(QR))
    return PointSet(len(QR), pts, name=f"paley-{q}")


####
# registry
####

@dataclass(frozen=True)
class GalleryEntry:
    name: str
    build: Callable[..., PointSet]
    params: tuple
    size: int
    dim: int
    strength: str | None = None
    note: str = ""


GALLERY = {
    e.name: e for e in [
        GalleryEntry("cross-polytope", cross_polytope, (3, 2), 6, 3, "cl{(1,1)}"),
        GalleryEntry("simplex", regular_simplex_cover, (2,), 5, 2),
        GalleryEntry("sic-d2", sic_d2, (), 16, 2, "cl{(3,2),(2,3)}"),
        GalleryEntry("hoggar", hoggar, (), 256, 8, "cl{(3,2),(2,3)}"),
        GalleryEntry("kerdock-1", kerdock_code_set, (1,), 24, 2, "cl{(7,0),(4,3),(3,4),(0,7)}"),
        GalleryEntry("kerdock-2", kerdock_code_set, (2,), 80, 4, "cl{(3,2),(2,3)}"),
        GalleryEntry("kerdock-3", kerdock_code_set, (3,), 288, 8, "cl{(7,0),(4,2),(2,4),(0,7)}"),
        GalleryEntry("coxeter-27", coxeter_27, (), 27, 3, "cl{(5,0),(3,2),(2,3),(0,5)}"),
        GalleryEntry("coxeter-42", coxeter_42, (), 42, 3, "cl{(3,2),(2,3)}"),
        GalleryEntry("coxeter-56", coxeter_56, (), 56, 3, "cl{(3,2),(2,3)}"),
        GalleryEntry("coxeter-240", coxeter_240, (), 240, 4, "k+l<=7"),
        GalleryEntry("coxeter-756", coxeter_756, (), 756, 6, "cl{(5,3),(3,5)}"),
        GalleryEntry("derived-80", derived_80, (), 80, 5, "cl{(3,2),(2,3)}"),
        GalleryEntry("derived-270", derived_270, (), 270, 5, "cl{(5,2),(2,5)}"),
        GalleryEntry("mub-odd-prime", mub_odd_prime, (3,), 9, 3),
        GalleryEntry("singer", singer_design, (2,), 7, 3),
        GalleryEntry("paley", paley_tournament_design, (7,), 7, 3),
        GalleryEntry("oa-9-4-3", lambda: oa_design(oa_9_4_3(), 3), (), 9, 4, "k+l<=2"),
    ]
}

# generators reachable from the command line: name -> (callable, parameter types)
GENERATORS = {
    "cross-polytope": (cross_polytope, (int, int)),
    "simplex": (regular_simplex_cover, (int,)),
    "sic-d2": (sic_d2, ()),
    "hoggar": (hoggar, ()),
    "kerdock": (kerdock_code_set, (int,)),
    "mub-cover": (mub_cover, (str, int)),
    "coxeter-27": (coxeter_27, ()),
    "coxeter-42": (coxeter_42, ()),
    "coxeter-56": (coxeter_56, ()),
    "coxeter-240": (coxeter_240, ()),
    "coxeter-756": (coxeter_756, ()),
    "derived-80": (derived_80, ()),
    "derived-270": (derived_270, ()),
    "mub-odd-prime": (mub_odd_prime, (int,)),
    "singer": (singer_design, (int,)),
    "oa-9-4-3": (lambda: oa_design(oa_9_4_3(), 3), ()),
    "paley": (paley_tournament_design, (int,)),
}


def build(name: str, *params) -> PointSet:
    if name not in GENERATORS:
        raise KeyError(f"unknown construction {name!r}")
    fn, types = GENERATORS[name]
    if len(params) > len(types):
        raise ValueError(f"{name} takes at most {len(types)} parameters")
    return fn(*[t(p) for t, p in zip(types, params)])


def gallery(names=None) -> dict:
    names = list(GALLERY) if names is None else names
    return {n: GALLERY[n].build(*GALLERY[n].params) for n in names}
