import itertools
import math
import os
import random
import sys
from fractions import Fraction

import pytest
import sympy

SRC_DIR = os.path.join(os.path.dirname(__file__), '..', 'src')
sys.path.insert(0, SRC_DIR)

from weilcid_exact import IntPoly, poly_eval  # noqa: E402
from weilcid_fixtures import REFERENCE_TABLES  # noqa: E402
from weilcid_weil import (  # noqa: E402
    WeilPoly, dim2_a2_range, dim2_a3_range, dim3_a3_range, dim3_a4_range,
    dim3_a5_range, enumerate_weil, from_free_coeffs, in_reducible_dim3_family,
    is_irreducible, is_weil, is_weil_dim2, is_weil_dim3, p_rank, real_companion,
    validate_weil,
)


def weil(p, free, m=1):
    return validate_weil(from_free_coeffs(p, m, len(free), free))


def free_keys(name):
    return sorted(REFERENCE_TABLES[name]['rows'])


class TestFromFreeCoeffs:
    def test_examples(self):
        assert from_free_coeffs(3, 1, 2, (0, 0)).poly == IntPoly([9, 0, 0, 0, 1])
        assert from_free_coeffs(2, 1, 2, (-1, 0)).poly == IntPoly([4, -2, 0, -1, 1])
        assert from_free_coeffs(2, 1, 4, (0, 0, 0, 0)).poly == IntPoly([16] + [0] * 7 + [1])
        f = from_free_coeffs(2, 1, 3, (-2, 2, -2)).poly
        assert f == IntPoly.from_descending([1, -2, 2, -2, 4, -8, 8])

    def test_q_symmetry(self):
        for p, m, g in ((2, 1, 2), (3, 1, 3), (2, 3, 2), (5, 1, 3)):
            q = p ** m
            c = from_free_coeffs(p, m, g, range(1, g + 1))
            a = c.coefficients
            assert a[0] == q ** g
            for j in range(2 * g + 1):
                assert a[2 * g - j] * q ** (2 * g - j) == q ** g * a[j]

    def test_candidate_accessors(self):
        c = from_free_coeffs(3, 1, 3, (0, 0, -7))
        assert c.q == 3
        assert c.coeff(6) == 1
        assert c.coeff(3) == -7
        assert c.free_dict() == {5: 0, 4: 0, 3: -7}

    def test_rejects_bad_input(self):
        with pytest.raises(ValueError, match="free coefficients"):
            from_free_coeffs(2, 1, 2, (1,))
        with pytest.raises(ValueError, match="prime"):
            from_free_coeffs(4, 1, 2, (0, 0))
        with pytest.raises(ValueError):
            from_free_coeffs(2, 0, 2, (0, 0))
        with pytest.raises(ValueError):
            from_free_coeffs(2, 1, 0, ())


class TestRealCompanion:
    def test_examples(self):
        assert real_companion(from_free_coeffs(3, 1, 2, (0, 0))) == IntPoly([-6, 0, 1])
        assert real_companion(from_free_coeffs(2, 1, 2, (-1, 0))) == IntPoly([-4, -1, 1])
        assert real_companion(from_free_coeffs(5, 1, 1, (3,))) == IntPoly([3, 1])

    def test_expansion_identity(self):
        # f(x) = x^g h(x + q/x) at rational points
        for p, free in ((2, (-2, 2, -2)), (3, (1, -2, 4)), (2, (0, 0, 1, -3)), (7, (4, 9))):
            c = from_free_coeffs(p, 1, len(free), free)
            h = real_companion(c)
            for x in (Fraction(1), Fraction(3, 2), Fraction(-5, 7), Fraction(11)):
                lhs = poly_eval(c.poly, x)
                rhs = x ** c.g * poly_eval(h, x + Fraction(c.q) / x)
                assert lhs == rhs


class TestIsWeil:
    def test_examples(self):
        assert is_weil(from_free_coeffs(3, 1, 2, (0, 0)))
        assert is_weil(from_free_coeffs(2, 1, 2, (-3, 5)))
        assert is_weil(from_free_coeffs(2, 1, 3, (-2, 2, -2)))
        assert is_weil(from_free_coeffs(2, 1, 4, (0, 0, 0, 0)))
        assert not is_weil(from_free_coeffs(2, 1, 2, (0, 5)))
        assert not is_weil(from_free_coeffs(2, 1, 2, (5, 0)))

    def test_boundary_roots(self):
        # (x^2 - 2)^2: every root on the circle, h has roots at both ends
        assert is_weil(from_free_coeffs(2, 1, 2, (0, -4)))
        # square q: (x - 2)^4 with a real double root
        assert is_weil(from_free_coeffs(2, 2, 2, (-8, 24)))

    def test_validate(self):
        w = validate_weil(from_free_coeffs(3, 1, 2, (0, 0)))
        assert isinstance(w, WeilPoly)
        with pytest.raises(ValueError, match="not a Weil"):
            validate_weil(from_free_coeffs(2, 1, 2, (0, 5)))


class TestDimension2Bounds:
    def test_examples(self):
        assert is_weil_dim2(-2, 2, 2)
        assert not is_weil_dim2(0, 5, 2)
        assert is_weil_dim2(0, 0, 3)
        assert is_weil_dim2(-3, 5, 2)
        assert not is_weil_dim2(5, 0, 2)

    @pytest.mark.parametrize("q", [2, 3, 5, 7])
    def test_agrees_with_general_test(self, q):
        b = math.isqrt(16 * q)
        for a3 in range(-b - 2, b + 3):
            for a2 in range(-6 * q - 2, 6 * q + 3):
                c = from_free_coeffs(q, 1, 2, (a3, a2))
                assert is_weil_dim2(a3, a2, q) == is_weil(c), (a3, a2)

    @pytest.mark.parametrize("q", [2, 3, 5])
    def test_ranges_cover_every_weil_pair(self, q):
        inside = {(a3, a2) for a3 in dim2_a3_range(q) for a2 in dim2_a2_range(a3, q)
                  if is_weil_dim2(a3, a2, q)}
        b = math.isqrt(16 * q)
        everything = {(a3, a2) for a3 in range(-b, b + 1) for a2 in range(-6 * q, 6 * q + 1)
                      if is_weil_dim2(a3, a2, q)}
        assert inside == everything


class TestDimension3Bounds:
    def test_examples(self):
        assert is_weil_dim3(0, 0, -7, 3)
        assert is_weil_dim3(-2, 2, -2, 2)
        assert not is_weil_dim3(20, 0, 0, 2)

    def test_reducible_family(self):
        # (x^2 - 2)^2 (x^2 + x + 2)
        assert in_reducible_dim3_family(1, -2, -4, 2)
        assert not is_weil_dim3(1, -2, -4, 2)
        assert is_weil(from_free_coeffs(2, 1, 3, (1, -2, -4)))
        assert not in_reducible_dim3_family(3, -2, -12, 2)

    def _check_box(self, q, bounds):
        self._check_points(q, itertools.product(*(range(-b, b + 1) for b in bounds)))

    def _check_points(self, q, points):
        for a5, a4, a3 in points:
            c = from_free_coeffs(q, 1, 3, (a5, a4, a3))
            expected = is_weil(c)
            got = is_weil_dim3(a5, a4, a3, q) or in_reducible_dim3_family(a5, a4, a3, q)
            assert got == expected, (a5, a4, a3)

    def test_agrees_with_general_test_near_origin(self):
        self._check_box(2, [4, 10, 20])

    @pytest.mark.slow
    @pytest.mark.parametrize("q", [2, 3])
    def test_agrees_with_general_test(self, q):
        self._check_box(q, [math.isqrt(36 * q), 15 * q, math.isqrt(400 * q ** 3)])

    @pytest.mark.slow
    def test_agrees_with_general_test_sampled_q5(self):
        q = 5
        rng = random.Random(29)
        bounds = [math.isqrt(36 * q), 15 * q, math.isqrt(400 * q ** 3)]
        points = {tuple(rng.randint(-b, b) for b in bounds) for _ in range(20000)}
        # the edges of the induced a3 ranges, where the conditions are tight
        for a5 in range(-bounds[0], bounds[0] + 1):
            for a4 in range(-9 * q - 1, (a5 * a5 + 9 * q) // 3 + 2):
                allowed = dim3_a3_range(a5, a4, q)
                edges = [allowed.start, allowed.stop - 1] if allowed else [0]
                for e in edges:
                    points.update((a5, a4, a3) for a3 in (e - 1, e, e + 1))
        self._check_points(q, sorted(points))

    @pytest.mark.parametrize("q", [2, 3])
    def test_ranges_cover_every_weil_triple(self, q):
        from_ranges = {(a5, a4, a3)
                       for a5 in dim3_a5_range(q)
                       for a4 in dim3_a4_range(a5, q)
                       for a3 in dim3_a3_range(a5, a4, q)
                       if is_weil_dim3(a5, a4, a3, q)}
        bounds = [math.isqrt(36 * q), 15 * q, math.isqrt(400 * q ** 3)]
        everything = {t for t in itertools.product(*(range(-b, b + 1) for b in bounds))
                      if is_weil_dim3(*t, q)}
        assert from_ranges == everything


class TestIrreducibility:
    def test_examples(self):
        assert is_irreducible(weil(3, (0, 0)))
        assert is_irreducible(weil(2, (0, 0, 0, 0)))
        assert is_irreducible(weil(2, (-2, 2, -2)))

    def test_reducible(self):
        # (x^2 - 2x + 2)^2
        w = weil(2, (-4, 8))
        assert not is_irreducible(w)
        assert not is_irreducible(w, use_mod_certificate=False)
        # (x^2 - 2)^2
        assert not is_irreducible(weil(2, (0, -4)))
        # (x^2 - 2)^2 (x^2 + x + 2)
        assert not is_irreducible(weil(2, (1, -2, -4)))

    def test_square_q_rejected(self):
        with pytest.raises(ValueError, match="square"):
            is_irreducible(weil(2, (0, 0), m=2))

    @pytest.mark.parametrize("q", [2, 3, 5])
    def test_certificate_agrees_with_exhaustive_search(self, q):
        for a3 in dim2_a3_range(q):
            for a2 in dim2_a2_range(a3, q):
                if not is_weil_dim2(a3, a2, q):
                    continue
                w = weil(q, (a3, a2))
                assert is_irreducible(w) == is_irreducible(w, use_mod_certificate=False)

    def test_against_sympy(self):
        x = sympy.symbols("x")
        for a3 in dim2_a3_range(3):
            for a2 in dim2_a2_range(a3, 3):
                if not is_weil_dim2(a3, a2, 3):
                    continue
                w = weil(3, (a3, a2))
                expr = sum(c * x ** i for i, c in enumerate(w.coefficients))
                assert is_irreducible(w) == sympy.Poly(expr, x).is_irreducible


class TestPRank:
    def test_examples(self):
        assert p_rank(weil(2, (-1, 0))) == 1
        assert p_rank(weil(2, (0, -2))) == 0
        assert p_rank(weil(3, (0, 0, -7))) == 3
        assert p_rank(weil(3, (0, 0))) == 0

    def test_ordinary_iff_middle_coefficient_is_unit(self):
        for name in ('p2_g2', 'p3_g2', 'p2_g3'):
            p = REFERENCE_TABLES[name]['p']
            for free in free_keys(name):
                w = weil(p, free)
                assert (p_rank(w) == w.g) == (w.coeff(w.g) % p != 0)

    def test_matches_reference_rows(self):
        for name in ('p2_g2', 'p3_g2', 'p2_g3'):
            table = REFERENCE_TABLES[name]
            for free, (rank, _) in table['rows'].items():
                assert p_rank(weil(table['p'], free)) == rank, (name, free)


class TestEnumeration:
    def test_p2_g2(self):
        found = [w.free_coeffs for w in enumerate_weil(2, 2)]
        assert len(found) == 19
        assert found == sorted(found)
        assert found == free_keys('p2_g2')

    def test_p3_g2(self):
        found = [w.free_coeffs for w in enumerate_weil(3, 2)]
        assert len(found) == 34
        assert found == free_keys('p3_g2')

    def test_p2_g3(self):
        found = [w.free_coeffs for w in enumerate_weil(2, 3)]
        assert len(found) == 80
        assert found == free_keys('p2_g3')

    def test_generic_box_matches_bounds_g2(self):
        fast = [w.free_coeffs for w in enumerate_weil(3, 2)]
        generic = [w.free_coeffs for w in enumerate_weil(3, 2, use_bounds=False)]
        assert fast == generic

    def test_fixed_coefficients(self):
        found = [w.free_coeffs for w in enumerate_weil(3, 3, fixed={5: 0, 4: 0})]
        assert all(free[:2] == (0, 0) for free in found)
        assert set(free_keys('p3_g3_a5a4zero')) <= set(found)
        assert [w.free_coeffs for w in enumerate_weil(2, 2, fixed={3: -1, 2: 0})] == [(-1, 0)]
        assert list(enumerate_weil(2, 2, fixed={2: 100})) == []

    def test_fixed_index_out_of_range(self):
        with pytest.raises(ValueError, match="not a free coefficient"):
            list(enumerate_weil(2, 2, fixed={4: 0}))

    def test_every_result_is_weil_and_irreducible(self):
        for w in enumerate_weil(5, 2):
            assert is_weil(w)
            assert is_irreducible(w, use_mod_certificate=False)

    @pytest.mark.slow
    def test_p3_g3_count(self):
        assert sum(1 for _ in enumerate_weil(3, 3)) == 348

    @pytest.mark.slow
    def test_p5_g3_count(self):
        assert sum(1 for _ in enumerate_weil(5, 3)) == 2032

    @pytest.mark.slow
    def test_generic_box_matches_bounds_g3(self):
        fast = [w.free_coeffs for w in enumerate_weil(2, 3)]
        generic = [w.free_coeffs for w in enumerate_weil(2, 3, use_bounds=False)]
        assert fast == generic
