from collections import Counter

import pytest

from qdissect import theta
from qdissect.combinatorics import (
    ENUMERATION_LIMIT,
    ONE_DOUBLE_STAR,
    ONE_STAR,
    crank,
    enumerate_class,
    enumerate_vectors,
    kim_star_spec,
    parity_weighted_enumeration,
    partition_p,
    pentagonal_d,
    series_counts,
    star_crank,
    star_weight,
    statistic_distribution,
    weighted_count,
)
from qdissect.products import expand_bivariate

# The V_4 vectors of size 3: (weight, multirank) multiset, frozen.
V4_N3_MULTISET = Counter({
    (1, 1): 3, (1, -1): 3, (1, 2): 3, (1, -2): 3,
    (1, 0): 2, (1, 3): 2, (1, -3): 2,
    (1, 4): 1, (1, -4): 1, (1, 5): 1, (1, -5): 1, (1, 6): 1, (1, -6): 1,
    (-1, 1): 1, (-1, -1): 1, (-1, 2): 1, (-1, -2): 1,
})


class TestPartitionClasses:
    def test_ordinary(self):
        assert set(enumerate_class(4, "P")) == {
            (4,), (3, 1), (2, 2), (2, 1, 1), (1, 1, 1, 1)
        }

    def test_distinct_even(self):
        assert set(enumerate_class(6, "DE")) == {(6,), (4, 2)}
        assert enumerate_class(2, "DE") == ((2,),)
        assert enumerate_class(1, "DE") == ()

    def test_distinct_odd(self):
        assert set(enumerate_class(8, "DO")) == {(7, 1), (5, 3)}

    def test_odd_parts(self):
        assert set(enumerate_class(5, "O")) == {(5,), (3, 1, 1), (1, 1, 1, 1, 1)}

    def test_empty_partition(self):
        for cls in ("P", "O", "DE", "DO", "PSTAR"):
            assert enumerate_class(0, cls) == ((),)

    def test_unknown_class(self):
        with pytest.raises(ValueError):
            enumerate_class(3, "X")
        with pytest.raises(ValueError):
            enumerate_class(-1, "P")


class TestCrank:
    def test_no_ones_gives_largest_part(self):
        assert crank((4,)) == 4
        assert crank((2, 2)) == 2

    def test_with_ones(self):
        assert crank((1,)) == -1
        assert crank((3, 1, 1)) == -1
        assert crank((4, 3, 1)) == 1
        assert crank((2, 1, 1)) == -2

    def test_empty(self):
        assert crank(()) == 0


class TestStarObjects:
    def test_three_objects_at_one(self):
        objs = enumerate_class(1, "PSTAR")
        assert objs == ((1,), ONE_STAR, ONE_DOUBLE_STAR)

    def test_overridden_statistics(self):
        assert (star_weight((1,)), star_crank((1,))) == (-1, 0)
        assert (star_weight(ONE_STAR), star_crank(ONE_STAR)) == (1, 1)
        assert (star_weight(ONE_DOUBLE_STAR), star_crank(ONE_DOUBLE_STAR)) == (1, -1)

    def test_larger_sizes_use_ordinary_crank(self):
        objs = enumerate_class(3, "PSTAR")
        assert objs == enumerate_class(3, "P")
        assert all(star_weight(o) == 1 for o in objs)

    def test_kim_identity(self):
        # weighted crank counts over P* match f1/((zq;q)(q/z;q)) coefficientwise
        gf = expand_bivariate(kim_star_spec(), 9)
        for n in range(9):
            dist = Counter()
            for obj in enumerate_class(n, "PSTAR"):
                dist[star_crank(obj)] += star_weight(obj)
            dist = {m: c for m, c in dist.items() if c}
            assert dist == gf.z_coefficients(n), f"n = {n}"


class TestVectorEnumeration:
    def test_v4_n3_table(self):
        vectors = enumerate_vectors("V", 4, 3)
        assert len(vectors) == 28
        assert Counter((v.weight, v.statistic) for v in vectors) == V4_N3_MULTISET

    def test_w2_n1_cranks(self):
        assert statistic_distribution("W2", None, 1) == {1: 1, -1: 1, 2: 1, -2: 1}

    def test_totals_match_w(self):
        for family, t in (("V", 1), ("V", 4), ("W2", None)):
            w_param = t if family == "V" else 2
            w = theta.build("w", 7, w_param)
            for n in range(7):
                assert weighted_count(family, t, n) == w[n], (family, t, n)

    def test_distribution_matches_gf(self):
        for family, t in (("V", 2), ("W2", None)):
            gf = series_counts(family, t, 7)
            for n in range(7):
                assert statistic_distribution(family, t, n) == gf.z_coefficients(n)

    def test_weighted_count_by_residue(self):
        dist = statistic_distribution("V", 4, 3)
        for k in range(5):
            want = sum(c for m, c in dist.items() if (m - k) % 5 == 0)
            assert weighted_count("V", 4, 3, k=k, modulus=5) == want == 4

    def test_rank_coefficient_variant_keeps_totals(self):
        for h in (1, 3):
            dist = statistic_distribution("V", 4, 3, rank_coefficient=h)
            assert sum(dist.values()) == 20

    def test_guardrail(self):
        with pytest.raises(ValueError):
            enumerate_vectors("V", 1, ENUMERATION_LIMIT + 1)
        with pytest.raises(ValueError):
            statistic_distribution("W2", None, 999)

    def test_family_validation(self):
        with pytest.raises(ValueError):
            enumerate_vectors("V", None, 2)
        with pytest.raises(ValueError):
            enumerate_vectors("W2", 3, 2)
        with pytest.raises(ValueError):
            enumerate_vectors("Q", 1, 2)

    def test_render_components(self):
        vectors = enumerate_vectors("V", 4, 3)
        rendered = {v.render_components() for v in vectors}
        assert "[];[3];[];[];[];[];[]" in rendered
        assert "[2];[1];[];[];[];[];[]" in rendered


class TestScalarOracles:
    def test_partition_p(self):
        got = [partition_p(n) for n in range(11)]
        assert got == [1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42]

    def test_pentagonal_d_matches_series(self):
        d = theta.build("d", 60)
        assert all(pentagonal_d(n) == d[n] for n in range(60))

    def test_parity_weighted_matches_c(self):
        c1 = theta.build("c", 7, 1)
        assert all(parity_weighted_enumeration("V", 1, n) == c1[n] for n in range(7))

    def test_parity_weighted_matches_d(self):
        d = theta.build("d", 7)
        assert all(
            parity_weighted_enumeration("W2", None, n) == d[n] for n in range(7)
        )
