"""Association schemes carried by inner-product relations.

Relations are integer label matrices (0 on the diagonal).  Closure under
products is checked exactly; eigenmatrices and Krein parameters are floating
point because their entries are generally irrational.
"""

from __future__ import annotations

import os
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from itertools import product
from math import comb

import numpy as np

from .design import DESIGN_TOL, is_design
from .poly import (LowerSet, convolve, evaluate, jacobi, lowerset_closure,
                   monomial_basis, parse_lower_set)
from .space import PointSet, angle_set, check_distinct, detect_antipodal, gram

EIG_TOL = 1e-6
KREIN_TOL = 1e-8
SLOW_THRESHOLD = 500


def _threads(threads):
    if threads is None:
        threads = int(os.environ.get("CDL_THREADS", "1") or 1)
    return max(1, int(threads))


def _lower(U) -> LowerSet:
    if isinstance(U, LowerSet):
        return U
    if isinstance(U, str):
        return parse_lower_set(U)
    return lowerset_closure(U)


####
# relations
####

@dataclass(eq=False)
class RelationPartition:
    """Relation index per ordered pair.  ``alphas[i]`` is the inner product
    on R_i (alphas[0] = 1), or None for schemes not coming from a point set.
    ``conj[i]`` is the index of the transposed relation."""

    labels: np.ndarray
    conj: np.ndarray
    alphas: np.ndarray | None = None
    X: PointSet | None = None

    @property
    def n(self) -> int:
        return self.labels.shape[0]

    @property
    def s(self) -> int:
        return len(self.conj) - 1

    def adjacency(self, i: int, dtype=np.float64) -> np.ndarray:
        return (self.labels == i).astype(dtype)

    def valencies_per_point(self) -> np.ndarray:
        """(n, s+1) table of k_i(x)."""
        out = np.zeros((self.n, self.s + 1), dtype=np.int64)
        for i in range(self.s + 1):
            out[:, i] = (self.labels == i).sum(axis=1)
        return out

    @classmethod
    def from_labels(cls, labels) -> "RelationPartition":
        L = np.asarray(labels, dtype=np.int64)
        n = L.shape[0]
        if L.shape != (n, n):
            raise ValueError("label matrix must be square")
        if (np.diag(L) != 0).any() or (L[~np.eye(n, dtype=bool)] == 0).any():
            raise ValueError("relation 0 must be exactly the diagonal")
        s = int(L.max())
        if set(np.unique(L)) != set(range(s + 1)):
            raise ValueError("relation labels must be 0..s with none empty")
        conj = np.zeros(s + 1, dtype=np.int64)
        for i in range(1, s + 1):
            t = np.unique(L.T[L == i])
            if len(t) != 1:
                raise ValueError(f"transpose of relation {i} is not a single relation")
            conj[i] = t[0]
        return cls(L, conj)


def relations(X: PointSet, order=None, tol: float | None = None) -> RelationPartition:
    """Inner-product relations of X.  ``order`` optionally fixes alpha_1..alpha_s."""
    A = angle_set(X, tol)
    labels = A.labels.astype(np.int64)
    alphas = A.alphas
    if order is not None:
        order = np.asarray(order, dtype=complex)
        if len(order) != A.s:
            raise ValueError(f"order lists {len(order)} angles, the set has {A.s}")
        perm = np.zeros(A.s + 1, dtype=np.int64)
        for new, a in enumerate(order, start=1):
            perm[A.index_of(a)] = new
        if len(set(perm[1:])) != A.s:
            raise ValueError("order does not list each angle once")
        labels = perm[labels]
        alphas = order
    vals = np.concatenate([[1.0 + 0j], alphas])
    conj = np.array([int(np.argmin(np.abs(vals - np.conj(a)))) for a in vals])
    return RelationPartition(labels, conj, vals, X)


####
# scheme verification
####

@dataclass
class SchemeReport:
    is_scheme: bool
    n: int
    s: int
    witness: dict | None = None
    p: np.ndarray | None = None           # p[i, j, k]
    valencies: np.ndarray | None = None
    symmetric: bool | None = None
    commutative: bool | None = None
    P: np.ndarray | None = None
    Q: np.ndarray | None = None
    multiplicities: np.ndarray | None = None
    krein: np.ndarray | None = None       # q[i, j, k]
    idem_conj: np.ndarray | None = None
    notes: dict = field(default_factory=dict)
    rel: RelationPartition | None = field(default=None, repr=False)

    def to_dict(self) -> dict:
        def cx(M):
            if M is None:
                return None
            M = np.asarray(M)
            return {"re": np.round(M.real, 12).tolist(), "im": np.round(M.imag, 12).tolist()}

        out = {"is_scheme": self.is_scheme, "n": self.n, "s": self.s, "witness": self.witness,
               "symmetric": self.symmetric, "commutative": self.commutative}
        if self.notes:
            out["notes"] = self.notes
        if self.rel is not None and self.rel.alphas is not None:
            out["alphas"] = [[float(a.real), float(a.imag)] for a in self.rel.alphas]
        if self.valencies is not None:
            out["valencies"] = [int(v) for v in self.valencies]
        if self.p is not None:
            out["intersection_numbers"] = self.p.astype(int).tolist()
        if self.P is not None:
            out["P"], out["Q"] = cx(self.P), cx(self.Q)
            out["multiplicities"] = [int(round(m)) for m in self.multiplicities.real]
            out["krein"] = np.round(self.krein.real, 10).tolist()
        return out


class _ClassIndex:
    """Sort order of the flattened label matrix, for per-relation min/max."""

    def __init__(self, labels: np.ndarray):
        flat = labels.ravel()
        self.order = np.argsort(flat, kind="stable")
        counts = np.bincount(flat)
        self.ends = np.cumsum(counts)
        self.starts = self.ends - counts
        self.n = labels.shape[0]

    def minmax(self, M: np.ndarray):
        v = M.ravel()[self.order]
        return np.minimum.reduceat(v, self.starts), np.maximum.reduceat(v, self.starts)

    def witness(self, M: np.ndarray, k: int):
        seg = self.order[self.starts[k]:self.ends[k]]
        vals = M.ravel()[seg]
        a, b = seg[np.argmin(vals)], seg[np.argmax(vals)]
        return [list(divmod(int(a), self.n)), list(divmod(int(b), self.n)),
                int(round(vals.min())), int(round(vals.max()))]


def _products(rel: RelationPartition, pairs, threads: int):
    mats = [rel.adjacency(i) for i in range(rel.s + 1)]
    if threads == 1:
        for i, j in pairs:
            yield i, j, mats[i] @ mats[j]
        return
    with ThreadPoolExecutor(threads) as ex:
        chunk = threads * 2
        for start in range(0, len(pairs), chunk):
            batch = pairs[start:start + chunk]
            futs = [ex.submit(np.matmul, mats[i], mats[j]) for i, j in batch]
            for (i, j), f in zip(batch, futs):
                yield i, j, f.result()


def closure_pattern(rel: RelationPartition, threads=None) -> np.ndarray:
    """B[i, j] = True when A_i A_j lies in span(A_0..A_s)."""
    idx = _ClassIndex(rel.labels)
    s = rel.s
    B = np.zeros((s + 1, s + 1), dtype=bool)
    pairs = list(product(range(s + 1), repeat=2))
    for i, j, M in _products(rel, pairs, _threads(threads)):
        lo, hi = idx.minmax(M)
        B[i, j] = bool((lo == hi).all())
    return B


def check_scheme(rel: RelationPartition, threads=None, spectral: bool = True) -> SchemeReport:
    """Exact check that the relations form a commutative association scheme.

    Stops at the first product A_i A_j that is not constant on some relation
    and reports (i, j, k) with two pairs of R_k and their differing counts.
    """
    n, s = rel.n, rel.s
    idx = _ClassIndex(rel.labels)
    p = np.zeros((s + 1, s + 1, s + 1), dtype=np.int64)
    pairs = list(product(range(s + 1), repeat=2))
    for i, j, M in _products(rel, pairs, _threads(threads)):
        lo, hi = idx.minmax(M)
        bad = np.flatnonzero(lo != hi)
        if bad.size:
            k = int(bad[0])
            xy, xy2, c1, c2 = idx.witness(M, k)
            return SchemeReport(False, n, s, witness={
                "reason": "product not constant on a relation", "i": i, "j": j, "k": k,
                "pair_a": xy, "pair_b": xy2, "count_a": c1, "count_b": c2}, rel=rel)
        p[i, j] = np.rint(lo).astype(np.int64)
    val = p[np.arange(s + 1), rel.conj, 0]
    comm = bool((p == p.transpose(1, 0, 2)).all())
    if not comm:
        i, j, k = map(int, np.argwhere(p != p.transpose(1, 0, 2))[0])
        return SchemeReport(False, n, s, witness={
            "reason": "not commutative", "i": i, "j": j, "k": k,
            "p_ij": int(p[i, j, k]), "p_ji": int(p[j, i, k])}, p=p, valencies=val,
            commutative=False, rel=rel)
    rep = SchemeReport(True, n, s, p=p, valencies=val,
                       symmetric=bool((rel.conj == np.arange(s + 1)).all()),
                       commutative=True, rel=rel)
    if spectral:
        P, Q = eigenmatrices(rep)
        rep.P, rep.Q = P, Q
        rep.multiplicities = Q[0].real.copy()
        rep.krein = krein(rep)
        rep.idem_conj = _idempotent_conjugates(Q)
    return rep


def intersection_matrices(rep: SchemeReport) -> np.ndarray:
    """B[i] with (B_i)_{k, j} = p_{i,j}^k."""
    return rep.p.transpose(0, 2, 1).astype(float)


def _idempotent_conjugates(Q: np.ndarray) -> np.ndarray:
    Qc = np.conj(Q)
    out = np.zeros(Q.shape[1], dtype=np.int64)
    for j in range(Q.shape[1]):
        out[j] = int(np.argmin(np.abs(Q - Qc[:, [j]]).max(axis=0)))
    return out


def eigenmatrices(rep: SchemeReport, seed: int = 20100601):
    """(P, Q) with A_i = sum_j P[j, i] E_j and E_j = (1/n) sum_i Q[i, j] A_i.

    Rows of P are the common left eigenvectors of the intersection matrices,
    scaled to have first entry 1.  Column order: E_0, then (for point sets)
    the idempotent proportional to the Gram matrix and its transpose, then
    the rest by multiplicity.
    """
    if rep.p is None or not rep.is_scheme:
        raise ValueError("eigenmatrices need a verified scheme")
    s, n = rep.s, rep.n
    B = intersection_matrices(rep)
    rng = np.random.default_rng(seed)
    c = rng.normal(size=s + 1) + 1j * rng.normal(size=s + 1)
    M = np.tensordot(c, B, axes=1)
    w, V = np.linalg.eig(M.T)
    gaps = np.abs(w[:, None] - w[None, :]) + np.eye(s + 1)
    if gaps.min() < EIG_TOL:
        raise ArithmeticError("random combination has a repeated eigenvalue")
    P = (V / V[0]).T
    # each row must be an eigenvector of every B_i, with eigenvalue P[m, i]
    for i in range(s + 1):
        if np.abs(P @ B[i] - P[:, [i]] * P).max() > 1e-6 * n:
            raise ArithmeticError("intersection matrices are not simultaneously diagonalized")
    Q = n * np.linalg.inv(P)
    order = _order_idempotents(rep, P, Q)
    P, Q = P[order], Q[:, order]
    return P, Q


def _order_idempotents(rep, P, Q):
    s = rep.s
    mult = Q[0].real
    triv = int(np.argmin(np.abs(P - rep.valencies[None, :]).max(axis=1)))
    rest = [j for j in range(s + 1) if j != triv]
    first = []
    rel = rep.rel
    if rel is not None and rel.alphas is not None and rel.X is not None:
        d = rel.X.dim
        target = d * rel.alphas
        for tgt in (target, np.conj(target)):
            hit = [j for j in rest if np.abs(Q[:, j] - tgt).max() < 1e-6 * max(1, d)]
            if hit and hit[0] not in first:
                first.append(hit[0])
    rest = [j for j in rest if j not in first]
    rest.sort(key=lambda j: (round(mult[j], 6), tuple(np.round(-Q[:, j].imag, 6)),
                             tuple(np.round(-Q[:, j].real, 6))))
    return [triv] + first + rest


def krein(rep: SchemeReport) -> np.ndarray:
    """q[i, j, k] with E_i o E_j = (1/n) sum_k q_{i,j}^k E_k."""
    P, Q, n = rep.P, rep.Q, rep.n
    if P is None:
        P, Q = eigenmatrices(rep)
    q = np.einsum("li,lj,kl->ijk", Q, Q, P) / n
    if np.abs(q.imag).max() > 1e-6 * n:
        raise ArithmeticError("Krein parameters are not real")
    return q.real


def idempotent(rep: SchemeReport, j: int) -> np.ndarray:
    """E_j as an n x n matrix."""
    return rep.Q[rep.rel.labels, j] / rep.n


####
# designs and idempotents
####

def idempotents_from_design(X: PointSet, U, tol: float = DESIGN_TOL) -> list:
    """F_{k,l} = (1/|X|) g_{k,l}(Gram) for (k,l) in U, plus I - sum F when |U| = s."""
    U = _lower(U)
    A = angle_set(X)
    if len(U) not in (A.s, A.s + 1):
        raise ValueError(f"|U| = {len(U)} but s = {A.s}")
    UU = lowerset_closure(convolve(U.members, U.members))
    ok, _ = is_design(X, UU, tol)
    if not ok:
        raise ValueError(f"X is not a {UU}-design")
    G = gram(X)
    n = len(X)
    Fs = [evaluate(jacobi(X.dim, m), G) / n for m in U.sorted()]
    if len(U) == A.s:
        Fs.append(np.eye(n) - sum(Fs))
    return Fs


####
# fusion and quotient
####

@dataclass
class FusionResult:
    ok: bool
    Q: np.ndarray | None
    report: SchemeReport | None
    failure: str | None = None


def fusion_check(rep: SchemeReport, adj_partition, idem_partition, verify: bool = True) -> FusionResult:
    """Bannai-Muzychuk: the blocks give a fusion scheme iff sum_{j in D_b} Q[i, j]
    is constant for i in each L_a.  The fused second eigenmatrix is returned."""
    adj = [list(b) for b in adj_partition]
    idem = [list(b) for b in idem_partition]
    if len(adj) != len(idem):
        raise ValueError("partitions must have the same number of blocks")
    s = rep.s
    if sorted(x for b in adj for x in b) != list(range(s + 1)) or \
            sorted(x for b in idem for x in b) != list(range(s + 1)):
        raise ValueError("each partition must cover 0..s exactly once")
    if adj[0] != [0] or idem[0] != [0]:
        raise ValueError("the first blocks must be {0}")
    Q = rep.Q
    Qf = np.zeros((len(adj), len(idem)), dtype=complex)
    for a, La in enumerate(adj):
        for b, Db in enumerate(idem):
            sums = Q[np.ix_(La, Db)].sum(axis=1)
            if np.abs(sums - sums[0]).max() > 1e-8 * rep.n:
                return FusionResult(False, None, None, f"block ({a},{b}) not constant")
            Qf[a, b] = sums[0]
    fused = None
    if verify:
        lab = np.zeros(s + 1, dtype=np.int64)
        for a, La in enumerate(adj):
            lab[La] = a
        frel = RelationPartition.from_labels(lab[rep.rel.labels])
        fused = check_scheme(frel, spectral=False)
        if not fused.is_scheme:
            return FusionResult(False, Qf, fused, "fused relations are not a scheme")
    return FusionResult(True, Qf, fused)


def quotient_scheme(X, n_fold: int, tol: float | None = None) -> SchemeReport:
    """Scheme on the fibres of an n-antipodal X, relations given by |x^*y|.

    ``X`` may be a point set or a SchemeReport built from one.  Whether every
    modulus in {1} u |A(L)| \\ {0} is attained by exactly n angles of X is
    recorded in ``notes["counting_condition"]``; the quotient is computed
    either way.
    """
    if isinstance(X, SchemeReport):
        X = X.rel.X
    fib = detect_antipodal(X, n_fold)
    if fib is None:
        raise ValueError(f"set is not {n_fold}-antipodal")
    reps = X.points[[f[0] for f in fib]]
    G = np.abs(reps.conj() @ reps.T)
    m = len(reps)
    tol = X.tol if tol is None else tol
    off = ~np.eye(m, dtype=bool)
    merged = []
    for v in np.sort(G[off])[::-1]:
        if not merged or merged[-1] - v > tol:
            merged.append(v)
    merged = np.array(merged)
    labels = np.zeros((m, m), dtype=np.int64)
    labels[off] = 1 + np.argmin(np.abs(G[off][:, None] - merged[None, :]), axis=1)
    rel = RelationPartition.from_labels(labels)
    rel.alphas = np.concatenate([[1.0], merged]).astype(complex)

    vals = angle_set(X).values()
    mods = np.abs(vals[np.abs(vals) > tol])
    counts = {float(a): int((np.abs(mods - a) <= tol).sum())
              for a in np.concatenate([[1.0], merged[merged > tol]])}
    rep = check_scheme(rel)
    rep.notes["counting_condition"] = all(c == n_fold for c in counts.values())
    rep.notes["modulus_counts"] = [[a, c] for a, c in counts.items()]
    return rep


####
# Jacobi matrices
####

def jacobi_matrix(d: int, angles, U, basis: str = "jacobi"):
    """(G, det G) with G[r, c] = g_{k,l}(alpha_r) (or alpha^k conj(alpha)^l for
    basis="monomial"); columns ordered by (k+l, -k)."""
    if isinstance(U, (LowerSet, str)):
        cols = _lower(U).sorted()
    else:
        cols = monomial_basis(U)
    angles = np.asarray(angles, dtype=complex)
    if len(angles) != len(cols):
        raise ValueError(f"{len(angles)} angles but {len(cols)} bidegrees")
    if basis == "jacobi":
        G = np.column_stack([evaluate(jacobi(d, c), angles) for c in cols])
    elif basis == "monomial":
        G = np.column_stack([angles ** k * np.conj(angles) ** l for k, l in cols])
    else:
        raise ValueError("basis must be 'jacobi' or 'monomial'")
    return G, complex(np.linalg.det(G))


####
# inner product invariance and the partial-regularity criterion
####

@dataclass
class InvarianceReport:
    invariant: bool
    valencies: list
    table: np.ndarray = field(repr=False)


def invariance_check(X_or_rel) -> InvarianceReport:
    rel = X_or_rel if isinstance(X_or_rel, RelationPartition) else relations(X_or_rel)
    T = rel.valencies_per_point()
    inv = bool((T == T[0]).all())
    return InvarianceReport(inv, T[0].tolist() if inv else [], T)


@dataclass
class PartialRegularityReport:
    design: bool
    outside_constant: bool
    outside_symmetric: bool
    det: complex
    predicts_scheme: bool
    witness: dict | None = None

    def to_dict(self):
        return {"design": self.design, "outside_constant": self.outside_constant,
                "outside_symmetric": self.outside_symmetric,
                "det": [self.det.real, self.det.imag], "predicts_scheme": self.predicts_scheme,
                "witness": self.witness}


def partial_regularity_scheme_check(rel: RelationPartition, U, I, tol: float = DESIGN_TOL,
                                    threads=None) -> PartialRegularityReport:
    """Sufficient condition for a scheme: X a U*U-design, intersection numbers
    for pairs (i, j) not both in I constant per angle and symmetric, and the
    Jacobi matrix on rows I nonsingular.  I is a set of relation labels in 1..s."""
    X = rel.X
    U = _lower(U)
    I = sorted(int(i) for i in I)
    if len(I) != len(U):
        raise ValueError("|I| must equal |U|")
    if not set(I) <= set(range(1, rel.s + 1)):
        raise ValueError("I must be a subset of 1..s")
    UU = lowerset_closure(convolve(U.members, U.members))
    design, _ = is_design(X, UU, tol)
    pairs = [(i, j) for i, j in product(range(rel.s + 1), repeat=2)
             if not (i in I and j in I)]
    idx = _ClassIndex(rel.labels)
    const, sym, witness = True, True, None
    vals = {}
    for i, j, M in _products(rel, pairs, _threads(threads)):
        lo, hi = idx.minmax(M)
        if (lo != hi).any():
            const = False
            k = int(np.flatnonzero(lo != hi)[0])
            witness = {"i": i, "j": j, "k": k}
            break
        vals[(i, j)] = lo
    if const:
        for (i, j), v in vals.items():
            if not np.array_equal(v, vals[(j, i)]):
                sym = False
                witness = {"i": i, "j": j, "reason": "p_ij != p_ji"}
                break
    _, det = jacobi_matrix(X.dim, rel.alphas[I], U)
    nonsing = abs(det) > 1e-9
    return PartialRegularityReport(design, const, sym, det,
                                   design and const and sym and nonsing, witness)


####
# schemes to designs
####

def embed_scheme(rep: SchemeReport, j: int = 1, tol: float = 1e-8) -> PointSet:
    """Points whose Gram matrix is (n/m_j) E_j, one per vertex of the scheme."""
    if not rep.is_scheme:
        raise ValueError("need a verified scheme")
    m = int(round(rep.multiplicities[j]))
    G = rep.Q[rep.rel.labels, j] / rep.multiplicities[j]
    G = (G + G.conj().T) / 2
    w, V = np.linalg.eigh(G)
    if w.min() < -1e-8 * rep.n:
        raise ValueError("idempotent is not positive semidefinite")
    top = np.argsort(w)[::-1][:m]
    if np.abs(np.delete(w, top)).max(initial=0) > 1e-7 * rep.n:
        raise ValueError(f"idempotent does not have rank {m}")
    Ufac = V[:, top] * np.sqrt(w[top])
    X = PointSet(m, Ufac.conj(), tol)
    check_distinct(X)
    return X


def krein_chain(rep: SchemeReport, i: int, j: int = 1) -> np.ndarray:
    """c^{(i)}: c^{(0)} = e_0, c^{(t)}_l = sum_{l'} c^{(t-1)}_{l'} q_{j,l'}^l."""
    q = rep.krein
    c = np.zeros(rep.s + 1)
    c[0] = 1.0
    for _ in range(i):
        c = c @ q[j]
    return c


def krein_moment(rep: SchemeReport, a: int, b: int, j: int = 1) -> float:
    """The nested Krein sum for (a, b); equals d^{a+b} times the (a,b) moment."""
    ca, cb = krein_chain(rep, a, j), krein_chain(rep, b, j)
    hat = rep.idem_conj
    q0 = rep.krein[:, :, 0]
    return float(np.einsum("l,h,lh->", ca, cb, q0[:, hat]))


@dataclass
class KreinDesignReport:
    passes: dict
    values: dict
    verdict: LowerSet

    def to_dict(self):
        return {"verdict": str(self.verdict),
                "passes": [[k, l, v] for (k, l), v in sorted(self.passes.items())]}


def krein_design_check(rep: SchemeReport, j: int = 1, T=None, cutoff: int = 8,
                       rtol: float = 1e-7) -> KreinDesignReport:
    """Which (a, b) satisfy the Krein-parameter moment condition for the
    embedding through E_j.  ``T`` restricts the bidegrees examined (default
    all a+b <= cutoff)."""
    d = int(round(rep.multiplicities[j]))
    if T is None:
        degs = [(a, b) for a in range(cutoff + 1) for b in range(cutoff + 1 - a)]
    else:
        degs = [tuple(m) for m in _lower(T).members]
    passes, values = {}, {}
    for a, b in degs:
        v = krein_moment(rep, a, b, j)
        target = d ** (2 * a) / comb(d + a - 1, a) if a == b else 0.0
        scale = max(1.0, d ** (a + b))
        values[(a, b)] = v
        passes[(a, b)] = abs(v - target) <= rtol * scale
    members = {m for m in passes
               if all(passes.get((x, y), False) for x in range(m[0] + 1) for y in range(m[1] + 1))}
    return KreinDesignReport(passes, values, LowerSet(frozenset(members)))


####
# Paley tournaments and skew conference matrices
####

def paley_tournament(q: int) -> RelationPartition:
    """Relations R_1: y - x a nonzero square mod q, R_2: a non-square (q = 3 mod 4)."""
    if q % 4 != 3:
        raise ValueError("q must be 3 mod 4")
    sq = {x * x % q for x in range(1, q)}
    diff = (np.arange(q)[None, :] - np.arange(q)[:, None]) % q
    labels = np.where(diff == 0, 0, np.where(np.isin(diff, list(sq)), 1, 2))
    return RelationPartition.from_labels(labels)


def is_skew_conference(C) -> bool:
    C = np.asarray(C)
    m = C.shape[0]
    off = ~np.eye(m, dtype=bool)
    return (C.shape == (m, m) and (np.diag(C) == 0).all() and np.isin(C[off], (1, -1)).all()
            and (C.T == -C).all() and (C @ C.T == (m - 1) * np.eye(m)).all())


def skew_conference_matrices(order: int) -> list:
    """All skew conference matrices of the given order, by exhaustive search
    over the upper triangle (only sensible for order <= 6)."""
    iu = np.triu_indices(order, 1)
    out = []
    for signs in product((1, -1), repeat=len(iu[0])):
        C = np.zeros((order, order), dtype=np.int64)
        C[iu] = signs
        C = C - C.T
        if is_skew_conference(C):
            out.append(C)
    return out


def conference_to_points(C) -> PointSet:
    """L u (-L) where L has Gram matrix I + (i/sqrt(2d-1)) C, 2d = order of C."""
    C = np.asarray(C)
    if not is_skew_conference(C):
        raise ValueError("not a skew conference matrix")
    m = C.shape[0]
    if m % 2:
        raise ValueError("order must be even")
    d = m // 2
    G = np.eye(m) + 1j * C / np.sqrt(m - 1)
    w, V = np.linalg.eigh(G)
    top = np.argsort(w)[::-1][:d]
    L = (V[:, top] * np.sqrt(w[top])).conj()
    pts = np.concatenate([L, -L])
    return PointSet(d, pts)


def design_to_conference(X: PointSet) -> np.ndarray:
    """Inverse of conference_to_points for a 2-antipodal set."""
    fib = detect_antipodal(X, 2)
    if fib is None:
        raise ValueError("set is not 2-antipodal")
    Y = X.points[[f[0] for f in fib]]
    G = Y.conj() @ Y.T
    m = len(Y)
    C = -1j * np.sqrt(m - 1) * (G - np.eye(m))
    Ci = np.rint(C.real).astype(np.int64)
    if np.abs(C - Ci).max() > 1e-6 or not is_skew_conference(Ci):
        raise ValueError("Gram matrix does not come from a skew conference matrix")
    return Ci
