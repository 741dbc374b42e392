"""Finite unitary groups, their orbits, and Molien-type invariant counts."""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property

import numpy as np

from .design import max_design_strength, DEFAULT_CUTOFF, DESIGN_TOL
from .poly import LowerSet, convolve, harm_dim, hom_dim, lowerset_closure, _bideg
from .space import PointSet

GROUP_CAP = 100_000
DRIFT = 1e-6


def _key(M: np.ndarray, decimals: int = 6):
    R = np.round(np.asarray(M), decimals) + 0.0  # +0.0 folds -0.0 into 0.0
    return R.tobytes()


@dataclass(eq=False)
class FiniteUnitaryGroup:
    dim: int
    elements: list
    generators: list = field(default_factory=list)
    name: str = ""

    @property
    def order(self) -> int:
        return len(self.elements)

    def __len__(self):
        return len(self.elements)

    @cached_property
    def eigenvalues(self) -> np.ndarray:
        """(|G|, d) array of eigenvalues, computed once."""
        return np.array([np.linalg.eigvals(g) for g in self.elements])

    def element_keys(self) -> set:
        return {_key(g) for g in self.elements}


def close_group(generators, cap: int = GROUP_CAP, tol: float = 1e-8,
                name: str = "") -> FiniteUnitaryGroup:
    """Breadth-first closure of the generated group."""
    gens = [np.asarray(g, dtype=complex) for g in generators]
    if not gens:
        raise ValueError("need at least one generator")
    d = gens[0].shape[0]
    for g in gens:
        if g.shape != (d, d):
            raise ValueError("generators must be square and of one size")
        if np.abs(g.conj().T @ g - np.eye(d)).max() > 1e-10:
            raise ValueError("generator is not unitary")
    ident = np.eye(d, dtype=complex)
    elements = [ident]
    index = {_key(ident): 0}
    frontier = [ident]
    while frontier:
        nxt = []
        for g in frontier:
            for s in gens:
                h = s @ g
                k = _key(h)
                j = index.get(k)
                if j is not None:
                    if np.abs(elements[j] - h).max() > tol:
                        raise RuntimeError("hash collision between distinct group elements")
                    continue
                index[k] = len(elements)
                elements.append(h)
                nxt.append(h)
                if len(elements) > cap:
                    raise ValueError(f"group order exceeds cap {cap}")
        frontier = nxt
    return FiniteUnitaryGroup(d, elements, gens, name)


def shift_matrix(d: int) -> np.ndarray:
    """P_x with (P_x)_{i,j} = delta_{i+1,j} (indices mod d)."""
    return np.roll(np.eye(d, dtype=complex), 1, axis=1)


def clock_matrix(d: int) -> np.ndarray:
    return np.diag(np.exp(2j * np.pi * np.arange(d) / d))


def pauli_group(d: int, phase: bool = False) -> FiniteUnitaryGroup:
    gens = [shift_matrix(d), clock_matrix(d)]
    if phase:
        gens.append(1j * np.eye(d))
    return close_group(gens, name=f"pauli{d}")


def sic_d2_group() -> FiniteUnitaryGroup:
    """<P_x, P_z, iI> acting on C^2."""
    return close_group([shift_matrix(2), clock_matrix(2), 1j * np.eye(2)], name="sic-d2-group")


def hoggar_group() -> FiniteUnitaryGroup:
    """Three-qubit Pauli group with phases {+-1, +-i}, acting on C^8."""
    I2 = np.eye(2)
    X, Z = shift_matrix(2), clock_matrix(2)
    gens = []
    for pos in range(3):
        for P in (X, Z):
            mats = [I2, I2, I2]
            mats[pos] = P
            gens.append(np.kron(np.kron(mats[0], mats[1]), mats[2]))
    gens.append(1j * np.eye(8))
    return close_group(gens, name="hoggar-group")


def trivial_group(d: int) -> FiniteUnitaryGroup:
    return FiniteUnitaryGroup(d, [np.eye(d, dtype=complex)], [], "trivial")


def orbit(G: FiniteUnitaryGroup, x, tol: float = 1e-8) -> PointSet:
    """Distinct vectors g x, in group-element order."""
    x = np.asarray(x, dtype=complex)
    x = x / np.linalg.norm(x)
    pts, seen = [], {}
    for g in G.elements:
        y = g @ x
        k = _key(y, 7)
        j = seen.get(k)
        if j is not None and np.abs(pts[j] - y).max() <= tol:
            continue
        seen[k] = len(pts)
        pts.append(y)
    return PointSet(G.dim, np.array(pts), tol)


# ----------------------------------------------------------------------------
# characters and Molien coefficients
# ----------------------------------------------------------------------------

def _complete_homogeneous(eigs: np.ndarray, kmax: int) -> np.ndarray:
    """h_0..h_kmax of each row of eigenvalues, via Newton's identities."""
    m = eigs.shape[0]
    p = np.empty((m, kmax + 1), dtype=complex)
    pw = np.ones_like(eigs)
    for i in range(kmax + 1):
        p[:, i] = pw.sum(axis=1)
        pw = pw * eigs
    h = np.zeros((m, kmax + 1), dtype=complex)
    h[:, 0] = 1
    for k in range(1, kmax + 1):
        h[:, k] = sum(p[:, i] * h[:, k - i] for i in range(1, k + 1)) / k
    return h


def hom_characters(G: FiniteUnitaryGroup, kmax: int, lmax: int) -> np.ndarray:
    """chi[g, k, l] = trace of g on Hom(k,l)."""
    hk = _complete_homogeneous(G.eigenvalues, max(kmax, lmax))
    return hk[:, :kmax + 1, None] * hk[:, None, :lmax + 1].conj()


def harm_characters(G: FiniteUnitaryGroup, kmax: int, lmax: int) -> np.ndarray:
    chi = hom_characters(G, kmax, lmax)
    out = chi.copy()
    out[:, 1:, 1:] -= chi[:, :-1, :-1]
    return out


def _to_int(v: float, what: str) -> int:
    r = round(float(np.real(v)))
    if abs(v - r) > DRIFT:
        raise ArithmeticError(f"{what}: {v} is not close to an integer")
    return int(r)


@dataclass
class MolienTable:
    kmax: int
    lmax: int
    entries: dict
    kind: str

    def __getitem__(self, deg):
        return self.entries[tuple(deg)]

    def as_array(self) -> np.ndarray:
        A = np.zeros((self.kmax + 1, self.lmax + 1), dtype=int)
        for (k, l), v in self.entries.items():
            A[k, l] = v
        return A

    def to_dict(self) -> dict:
        return {"kind": self.kind, "kmax": self.kmax, "lmax": self.lmax,
                "table": self.as_array().tolist()}


def molien_hom(G: FiniteUnitaryGroup, kmax: int, lmax: int) -> MolienTable:
    """dim Hom(k,l)^G for k <= kmax, l <= lmax."""
    avg = hom_characters(G, kmax, lmax).mean(axis=0)
    entries = {(k, l): _to_int(avg[k, l], f"hom({k},{l})")
               for k in range(kmax + 1) for l in range(lmax + 1)}
    return MolienTable(kmax, lmax, entries, "hom-invariants")


def molien_harm(G: FiniteUnitaryGroup, kmax: int, lmax: int) -> MolienTable:
    """dim Harm(k,l)^G, computed twice: as a difference of the integer Hom
    table, and from the (1 - xy)-weighted series directly.  The two must agree."""
    hom = molien_hom(G, kmax, lmax)
    diff = {}
    for (k, l), v in hom.entries.items():
        diff[(k, l)] = v - (hom[(k - 1, l - 1)] if k and l else 0)
    weighted = harm_characters(G, kmax, lmax).mean(axis=0)
    for (k, l), v in diff.items():
        w = _to_int(weighted[k, l], f"harm({k},{l})")
        if w != v:
            raise ArithmeticError(f"Molien routes disagree at {(k, l)}: {v} vs {w}")
    return MolienTable(kmax, lmax, diff, "harm-invariants")


def harm_character_norm(G: FiniteUnitaryGroup, deg) -> float:
    k, l = _bideg(deg)
    chi = harm_characters(G, k, l)[:, k, l]
    return float(np.mean(np.abs(chi) ** 2))


def harm_irreducible(G: FiniteUnitaryGroup, deg) -> bool:
    """Is Harm(k,l) an irreducible G-module?  (character norm equals 1)"""
    return _to_int(harm_character_norm(G, deg), f"norm{tuple(deg)}") == 1


def hom_character_norm(G: FiniteUnitaryGroup, deg) -> int:
    """(chi, chi) for Hom(k,l), i.e. the x^k z^k y^l w^l coefficient of the
    four-variable Molien series.  Equals min(k,l)+1 exactly when the pieces
    Harm(k-i, l-i) are irreducible and pairwise distinct."""
    k, l = _bideg(deg)
    chi = hom_characters(G, k, l)[:, k, l]
    return _to_int(np.mean(np.abs(chi) ** 2), f"hom-norm{(k, l)}")


def harm_pairwise_distinct(G: FiniteUnitaryGroup, degs) -> bool:
    """Are the G-modules Harm(k,l), (k,l) in degs, pairwise non-isomorphic?
    Assumes each is irreducible, so the test is (chi, chi') = 0."""
    degs = [_bideg(m) for m in degs]
    if not degs:
        return True
    kmax = max(k for k, _ in degs)
    lmax = max(l for _, l in degs)
    chi = harm_characters(G, kmax, lmax)
    for a in range(len(degs)):
        for b in range(a + 1, len(degs)):
            ca, cb = chi[:, degs[a][0], degs[a][1]], chi[:, degs[b][0], degs[b][1]]
            if _to_int(abs(np.mean(ca.conj() * cb)), f"pair{degs[a]}{degs[b]}") != 0:
                return False
    return True


def harm_chain_irreducible(G: FiniteUnitaryGroup, deg) -> bool:
    k, l = _bideg(deg)
    return hom_character_norm(G, (k, l)) == min(k, l) + 1


@dataclass
class OrbitStrength:
    U: LowerSet
    invariants_vanish: bool
    all_irreducible: bool
    pairwise_distinct: bool
    guaranteed: LowerSet
    empirical: LowerSet | None
    harm_table: dict

    def to_dict(self) -> dict:
        return {
            "U": str(self.U),
            "invariants_vanish": self.invariants_vanish,
            "all_irreducible": self.all_irreducible,
            "pairwise_distinct": self.pairwise_distinct,
            "guaranteed": str(self.guaranteed),
            "empirical": None if self.empirical is None else str(self.empirical),
        }


def orbit_design_strength(G: FiniteUnitaryGroup, U: LowerSet, x=None,
                          cutoff: int = DEFAULT_CUTOFF, tol: float = DESIGN_TOL,
                          rng: np.random.Generator | None = None) -> OrbitStrength:
    """Group-theoretic design guarantees for orbits, next to a measured strength.

    (a) all Harm(k,l)^G = 0 on U minus (0,0)  ->  every orbit is a U-design
    (b) every Harm(k,l), (k,l) in U, irreducible and no two of them
        isomorphic as G-modules  ->  every orbit is a U*U-design

    The second condition in (b) is needed: for the d = 2 Pauli group
    Harm(1,0) and Harm(0,1) are isomorphic, z1^2 + z2^2 is invariant, and
    orbits are not (2,0)-designs.
    """
    kmax = max(k for k, _ in U.members)
    lmax = max(l for _, l in U.members)
    harm = molien_harm(G, kmax, lmax)
    vanish = all(harm[m] == 0 for m in U.members if m != (0, 0))
    irred = all(harm_irreducible(G, m) for m in U.members if m != (0, 0))
    distinct = irred and harm_pairwise_distinct(G, U.members)
    guaranteed = {(0, 0)}
    if vanish:
        guaranteed |= set(U.members)
    if irred and distinct:
        guaranteed |= set(lowerset_closure(convolve(U.members, U.members)).members)
    emp = None
    if x is not None or rng is not None:
        if x is None:
            x = rng.normal(size=G.dim) + 1j * rng.normal(size=G.dim)
        emp = max_design_strength(orbit(G, x), cutoff, tol).verdict
    return OrbitStrength(U, vanish, irred, distinct, LowerSet(frozenset(guaranteed)), emp,
                         dict(harm.entries))


def closed_form_hom(d: int, kmax: int, lmax: int) -> dict:
    return {(k, l): hom_dim(d, (k, l)) for k in range(kmax + 1) for l in range(lmax + 1)}


def closed_form_harm(d: int, kmax: int, lmax: int) -> dict:
    return {(k, l): harm_dim(d, (k, l)) for k in range(kmax + 1) for l in range(lmax + 1)}


def read_group(text: str) -> FiniteUnitaryGroup:
    """Parse a group file: ``dimension: d``, ``generators: m``, then m blocks
    of d rows, each row d pairs ``re im``."""
    from .fileformat import ParseError

    lines = [(i, ln.split("#", 1)[0].strip()) for i, ln in enumerate(text.splitlines(), 1)]
    lines = [(i, ln) for i, ln in lines if ln]
    head = {}
    body = []
    for i, ln in lines:
        if ":" in ln:
            key, val = ln.split(":", 1)
            head[key.strip()] = (i, val.strip())
        else:
            body.append((i, ln))
    try:
        d = int(head["dimension"][1])
        m = int(head["generators"][1])
    except (KeyError, ValueError):
        raise ParseError(1, "group file needs integer 'dimension:' and 'generators:' fields")
    if len(body) != d * m:
        raise ParseError(body[-1][0] if body else 1, f"expected {d * m} matrix rows, got {len(body)}")
    gens = []
    for g in range(m):
        M = np.empty((d, d), dtype=complex)
        for r in range(d):
            i, ln = body[g * d + r]
            parts = ln.split()
            if len(parts) != 2 * d:
                raise ParseError(i, f"expected {2 * d} numbers, got {len(parts)}")
            try:
                vals = [float(t) for t in parts]
            except ValueError as exc:
                raise ParseError(i, str(exc))
            M[r] = np.array(vals[0::2]) + 1j * np.array(vals[1::2])
        gens.append(M)
    return close_group(gens)
