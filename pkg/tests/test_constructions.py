import random
from fractions import Fraction

import pytest

from cupcap import (FlatPlacement, Point, PointSet,
                    build_base_capfree, build_base_cupfree, build_convex_free,
                    build_free_set, combine_flat, cup_cap_threshold,
                    free_set_size_bound, longest_cap_size, longest_cup_size,
                    max_collinear, normalize_integer_coords, orientation,
                    verify_construction)
from cupcap.geom import cross_sign

import oracles


class TestBaseCupfree:
    def test_3_5(self):
        ps = build_base_cupfree(3, 5)
        assert len(ps) == 4
        assert len(max_collinear(ps)) == 2
        assert longest_cup_size(ps) <= 4
        assert longest_cap_size(ps) == 2

    def test_4_5(self):
        ps = build_base_cupfree(4, 5)
        assert len(ps) == 6
        assert len(max_collinear(ps)) == 3
        assert longest_cup_size(ps) <= 4

    def test_3_3(self):
        assert len(build_base_cupfree(3, 3)) == 2

    def test_size_formula(self):
        # (l-1)*floor((m-1)/2), plus one when m-1 is odd
        for l in (3, 4, 5):
            for m in range(3, 9):
                ps = build_base_cupfree(l, m)
                expect = (l - 1) * ((m - 1) // 2) + ((m - 1) % 2)
                assert len(ps) == expect
                assert len(ps) >= free_set_size_bound(l, m, 3)

    def test_validation(self):
        with pytest.raises(ValueError):
            build_base_cupfree(2, 5)

    def test_cup_bound_against_oracle(self):
        ps = build_base_cupfree(3, 4)
        assert oracles.brute_longest_cup(list(ps)) <= 3
        assert longest_cup_size(ps) == oracles.brute_longest_cup(list(ps))


class TestBaseCapfree:
    def test_mirror_of_cupfree(self):
        ps = build_base_capfree(3, 5)
        assert len(ps) == 4
        assert longest_cup_size(ps) == 2
        assert longest_cap_size(ps) <= 4

    def test_5_4(self):
        ps = build_base_capfree(5, 4)
        assert len(ps) == 5
        assert len(max_collinear(ps)) == 4
        assert longest_cap_size(ps) <= 3

    def test_3_3(self):
        assert len(build_base_capfree(3, 3)) == 2

    def test_cap_bound_against_oracle(self):
        ps = build_base_capfree(3, 5)
        assert oracles.brute_longest_cap(list(ps)) <= 4
        assert longest_cap_size(ps) == oracles.brute_longest_cap(list(ps))


class TestCombineFlat:
    def test_singletons(self):
        out = combine_flat(PointSet.of([(0, 0)]), PointSet.of([(5, 5)]))
        assert len(out) == 2

    def test_two_by_two_exhaustive_orientations(self):
        a = PointSet.of([(0, 0), (1, 1)])
        b = PointSet.of([(0, 0), (1, -1)])
        out = combine_flat(a, b)
        pts = sorted(out, key=lambda p: p.x)
        left, right = pts[:2], pts[2:]
        # all 8 cross-part orientation checks
        for p, q in [(left[0], left[1])]:
            for r in right:
                assert cross_sign(p, q, r) == 1
        for p, q in [(right[0], right[1])]:
            for r in left:
                assert cross_sign(p, q, r) == -1

    def test_cardinality_additive(self):
        a = build_base_cupfree(3, 4)
        b = build_base_capfree(3, 4)
        assert len(combine_flat(a, b)) == len(a) + len(b)

    def test_loop_bounded(self):
        a = build_base_cupfree(4, 6)
        b = build_base_capfree(4, 6)
        combine_flat(a, b, max_attempts=10_000)  # must not raise

    def test_empty_rejected(self):
        with pytest.raises(ValueError):
            combine_flat(PointSet([]), PointSet.of([(0, 0)]))


class TestBuildFreeSet:
    def test_3_4_4(self):
        ps = build_free_set(3, 4, 4)
        assert len(ps) == 6
        cert = verify_construction(ps, ("x", 3, 4, 4))
        assert cert.passes

    def test_exact_binomial_for_l3(self):
        for m in range(3, 7):
            for n in range(3, 7):
                ps = build_free_set(3, m, n)
                assert len(ps) == cup_cap_threshold(m, n) - 1

    def test_recursive_size_identity(self):
        for (m, n) in [(4, 4), (4, 5), (5, 4), (5, 5)]:
            whole = build_free_set(4, m, n)
            a = build_free_set(4, m - 1, n)
            b = build_free_set(4, m, n - 1)
            assert len(whole) == len(a) + len(b)

    def test_4_4_4(self):
        ps = build_free_set(4, 4, 4)
        assert len(ps) >= 8
        assert len(max_collinear(ps)) <= 3
        assert verify_construction(ps, ("x", 4, 4, 4)).passes

    def test_certificates_pass_small_sweep(self):
        for l in (3, 4):
            for m in range(3, 6):
                for n in range(3, 6):
                    ps = build_free_set(l, m, n)
                    cert = verify_construction(ps, ("x", l, m, n))
                    assert cert.passes, (l, m, n)
                    assert cert.size >= free_set_size_bound(l, m, n)

    def test_deterministic(self):
        assert build_free_set(4, 5, 5) == build_free_set(4, 5, 5)

    def test_collinear_cap_against_oracle(self):
        ps = build_free_set(4, 5, 5)
        assert oracles.brute_max_collinear(list(ps)) <= 3
        assert len(max_collinear(ps)) == oracles.brute_max_collinear(list(ps))


class TestBuildConvexFree:
    def test_sizes(self):
        assert len(build_convex_free(3, 6)) == 16
        assert len(build_convex_free(4, 6)) == 22
        assert len(build_convex_free(3, 7)) == 32

    def test_certificate_3_6(self):
        ps = build_convex_free(3, 6)
        cert = verify_construction(ps, ("es", 3, 6))
        assert cert.passes
        assert cert.max_convex_points <= 5
        assert cert.max_collinear_points <= 2

    def test_certificate_4_6(self):
        cert = verify_construction(build_convex_free(4, 6), ("es", 4, 6))
        assert cert.passes
        assert cert.max_convex_points <= 5
        assert cert.max_collinear_points <= 3

    def test_small_n_rejected(self):
        with pytest.raises(ValueError):
            build_convex_free(3, 5)

    def test_max_convex_against_oracle(self):
        # oracle-check the exact DP on construction coordinates (12 of the
        # 16 points keep the subset enumeration tractable)
        from cupcap import max_convex_subset
        sub = build_convex_free(3, 6)[:12]
        assert len(max_convex_subset(sub)) == \
            oracles.brute_max_convex_subset(list(sub))


class TestAffineRobustness:
    def test_certificate_invariant_under_affine_map(self):
        ps = build_free_set(4, 4, 5)
        placed = FlatPlacement(Fraction(3), Fraction(1, 7),
                               Fraction(-11), Fraction(5)).apply_set(ps)
        c0 = verify_construction(ps, ("x", 4, 4, 5))
        c1 = verify_construction(placed, ("x", 4, 4, 5))
        assert (c0.max_collinear_points, c0.longest_cup_points,
                c0.longest_cap_points, c0.passes) == \
               (c1.max_collinear_points, c1.longest_cup_points,
                c1.longest_cap_points, c1.passes)

    def test_normalize_preserves_orientations(self):
        rng = random.Random(4)
        ps = PointSet.of([(Fraction(rng.randrange(-50, 50), rng.randrange(1, 9)),
                           Fraction(rng.randrange(-50, 50), rng.randrange(1, 9)))
                          for _ in range(8)])
        out = normalize_integer_coords(ps)
        assert all(p.x.denominator == 1 and p.y.denominator == 1 for p in out)
        for i in range(8):
            for j in range(8):
                for k in range(8):
                    assert orientation(ps[i], ps[j], ps[k]) == \
                        orientation(out[i], out[j], out[k])


class TestVerifyConstruction:
    def test_collinear_triple_fails_x_claim(self):
        bad = PointSet.of([(0, 0), (1, 1), (2, 2)])
        cert = verify_construction(bad, ("x", 3, 4, 4))
        assert not cert.no_collinear_ell
        assert not cert.passes

    def test_es_claim_checks_exact_size(self):
        ps = build_convex_free(3, 6)
        trimmed = ps[:15]
        cert = verify_construction(trimmed, ("es", 3, 6))
        assert not cert.passes  # size must be exact

    def test_unknown_claim(self):
        with pytest.raises(ValueError):
            verify_construction(PointSet.of([(0, 0)]), ("zzz", 1))
