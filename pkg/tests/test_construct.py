import numpy as np
import pytest

from cdl import construct
from cdl.construct import (GaloisRing, PrimeField, CubicExtension, block_design_lambda, build,
                           hensel_lift, isprime, kerdock_words, mub_partition, oa_9_4_3, psi,
                           singer_difference_set)
from cdl.design import is_design, max_design_strength
from cdl.poly import lowerset_closure, parse_lower_set
from cdl.space import angle_set, fibre, gram
from conftest import cached


def test_isprime():
    assert [p for p in range(30) if isprime(p)] == [2, 3, 5, 7, 11, 13, 17, 19, 23, 29]


@pytest.mark.parametrize("name,params,size", [
    ("cross-polytope", (3,), 6), ("simplex", (2,), 5), ("sic-d2", (), 16),
    ("kerdock", (1,), 24), ("kerdock", (2,), 80), ("coxeter-27", (), 27),
    ("coxeter-42", (), 42), ("coxeter-56", (), 56), ("coxeter-240", (), 240),
    ("mub-odd-prime", (5,), 25), ("singer", (2,), 7), ("paley", (7,), 7), ("oa-9-4-3", (), 9),
])
def test_sizes(name, params, size):
    assert len(cached(name, *params)) == size


def test_unknown_name():
    with pytest.raises(KeyError):
        build("nope")


class TestGaloisRing:
    def test_hensel_lift_r3(self):
        # x^3 + x + 1 lifts to x^3 + 2x^2 + x + 3 over Z4
        h = hensel_lift([1, 1, 0, 1])
        assert list(h) == [3, 1, 2, 1]

    def test_teichmuller_closed(self):
        R = GaloisRing(3)
        T = R.teichmuller()
        assert len(T) == 8

    def test_kerdock_words(self):
        W = kerdock_words(3)
        assert W.shape == (64, 8)


class TestMUB:
    def test_partition_counts(self):
        for fam, r, d in (("odd", 1, 2), ("even", 2, 4), ("odd", 3, 8)):
            X = construct.mub_cover(fam, r)
            L = fibre(X, 4)
            bases = mub_partition(L)
            assert len(bases) == d + 1 and all(len(b) == d for b in bases)
            assert len(X) == 4 * d * (d + 1)

    def test_odd_prime(self):
        for p in (3, 5, 7):
            X = construct.mub_odd_prime(p, with_basis=True)
            G = np.abs(gram(X))
            bases = mub_partition(X)
            assert len(bases) == p + 1
            vals = set(np.round(G[~np.eye(len(X), dtype=bool)], 9))
            assert vals <= {0.0, round(1 / np.sqrt(p), 9)}

    def test_odd_prime_cover_design(self):
        X = construct.mub_odd_prime(3, True, 3)
        assert is_design(X, parse_lower_set("k+l<=2"))[0]

    def test_rejects_non_prime(self):
        with pytest.raises(ValueError):
            construct.mub_odd_prime(9)


class TestFields:
    def test_prime_field(self):
        F = PrimeField(7)
        assert set(F.squares()) == {1, 2, 4}
        assert F.inv(3) == 5
        assert [F.legendre(a) for a in range(1, 7)] == [1, 1, -1, 1, -1, -1]

    def test_singer(self):
        for q in (2, 3, 5):
            D = singer_difference_set(q)
            n = q * q + q + 1
            assert len(D) == q + 1
            diffs = sorted((a - b) % n for a in D for b in D if a != b)
            assert diffs == list(range(1, n))

    def test_singer_design(self):
        from cdl.design import regularity_check
        from cdl.scheme import check_scheme, relations
        for q in (2, 3):
            X = construct.singer_design(q)
            n = q * q + q + 1
            assert len(X) == n and X.dim == q + 1
            assert regularity_check(X, (1, 1))
            assert check_scheme(relations(X)).is_scheme
            Y = construct.singer_design(q, cover=True)
            assert len(Y) == n * n
            assert is_design(Y, parse_lower_set("k+l<=2"))[0]


class TestBlockDesigns:
    def test_oa(self):
        rows = oa_9_4_3()
        assert block_design_lambda(rows, 2, 3) == 1
        P = psi(rows, 3)
        assert P.shape == (9, 4)
        X = construct.oa_design(rows, 3)
        assert max_design_strength(X, 4).verdict == parse_lower_set("k+l<=2")


def test_gallery_strengths():
    for name, entry in construct.GALLERY.items():
        if entry.strength is None or name in ("coxeter-756", "derived-80", "derived-270", "hoggar"):
            continue
        X = construct.gallery([name])[name]
        assert len(X) == entry.size and X.dim == entry.dim
        cutoff = max(k + l for k, l in parse_lower_set(entry.strength).members) + 1
        got = max_design_strength(X, min(cutoff, 8)).verdict
        want = parse_lower_set(entry.strength)
        assert got == want or (name == "coxeter-240" and got == lowerset_closure(
            [(8, 0), (6, 2), (5, 3), (3, 5), (2, 6), (0, 8)])), name
