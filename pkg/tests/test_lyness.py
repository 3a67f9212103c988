import random
from fractions import Fraction

import pytest

from dynspan.exact import CycNumber, ExactMatrix
from dynspan.lyness import (
    lyness_homomesy_check,
    lyness_map,
    lyness_matrix,
    lyness_numeric_orbit_sum,
    lyness_orbit,
    lyness_orbit_sum_operator,
    lyness_pullback,
    monomial_value,
)

F = Fraction


class TestExponentMatrix:
    def test_order_five(self):
        m = lyness_matrix()
        identity = ExactMatrix.identity(5)
        assert m**5 == identity
        assert m != identity
        assert m**2 != identity

    def test_unit_eigenvalue_multiplicity(self):
        m = lyness_matrix()
        assert (m - ExactMatrix.identity(5)).rank() == 4

    @pytest.mark.parametrize("t", [1, 2, 3, 4])
    def test_primitive_root_multiplicities(self, t):
        m = lyness_matrix()
        zeta = CycNumber.root(5, t)
        rows = [
            [m.entries[i][j] - (zeta if i == j else 0) for j in range(5)]
            for i in range(5)
        ]
        assert ExactMatrix.from_rows(rows).rank() == 4


class TestMap:
    def test_orbit_of_ones(self):
        assert lyness_orbit(1, 1) == [
            (F(1), F(1)),
            (F(1), F(2)),
            (F(2), F(3)),
            (F(3), F(2)),
            (F(2), F(1)),
        ]
        assert lyness_map(F(2), F(1)) == (F(1), F(1))

    def test_fifth_iterate_is_identity(self):
        rng = random.Random(3)
        count = 0
        while count < 100:
            x = F(rng.randint(-20, 20), rng.randint(1, 10))
            y = F(rng.randint(-20, 20), rng.randint(1, 10))
            try:
                pt = (x, y)
                for _ in range(5):
                    pt = lyness_map(*pt)
            except ValueError:
                continue
            assert pt == (x, y)
            count += 1

    @pytest.mark.parametrize(
        "x,y", [(0, 1), (1, -1), (-1, 2), (2, -3), (F(-1, 2), F(-1, 2))]
    )
    def test_domain_violations(self, x, y):
        with pytest.raises(ValueError, match="domain"):
            lyness_map(x, y)


class TestPullback:
    def test_x_pulls_back_to_y(self):
        assert lyness_pullback((1, 0, 0, 0, 0)) == (0, 1, 0, 0, 0)

    def test_y_plus_one_pulls_back(self):
        assert lyness_pullback((0, 0, 0, 1, 0)) == (-1, 0, 0, 0, 1)

    def test_zero_vector(self):
        assert lyness_pullback((0, 0, 0, 0, 0)) == (0, 0, 0, 0, 0)

    def test_substitution_identity_at_random_points(self):
        rng = random.Random(4)
        checked = 0
        while checked < 50:
            x = F(rng.randint(-15, 15), rng.randint(1, 6))
            y = F(rng.randint(-15, 15), rng.randint(1, 6))
            try:
                tx, ty = lyness_map(x, y)
                for _ in range(20):
                    v = tuple(rng.randint(-3, 3) for _ in range(5))
                    assert monomial_value(v, tx, ty) == monomial_value(
                        lyness_pullback(v), x, y
                    )
            except ValueError:
                continue
            checked += 1


class TestOrbitSums:
    def test_log_statistic_is_zero_mesic(self):
        assert lyness_homomesy_check((-2, 0, 1, 0, 0))

    def test_zero_vector_is_zero_mesic(self):
        assert lyness_homomesy_check((0, 0, 0, 0, 0))

    def test_x_alone_is_not(self):
        assert not lyness_homomesy_check((1, 0, 0, 0, 0))
        w = lyness_orbit_sum_operator().apply((1, 0, 0, 0, 0))
        assert w == tuple(F(v) for v in (-1, -1, 1, 1, 1))
        # the orbit sum of e1 is the exponent vector of the classical invariant
        assert lyness_matrix().apply(w) == w
        assert lyness_pullback((-1, -1, 1, 1, 1)) == (-1, -1, 1, 1, 1)

    def test_numeric_sum_cancels_at_ones(self):
        assert abs(lyness_numeric_orbit_sum((-2, 0, 1, 0, 0), (1, 1))) < 1e-12

    def test_numeric_sum_of_x_is_log_12(self):
        import math

        total = lyness_numeric_orbit_sum((1, 0, 0, 0, 0), (1, 1))
        assert abs(total - math.log(12)) < 1e-12

    def test_zero_vector_numeric(self):
        assert lyness_numeric_orbit_sum((0, 0, 0, 0, 0), (F(3, 7), F(5, 2))) == 0.0

    def test_zero_mesic_vectors_have_tiny_sums(self):
        rng = random.Random(6)
        count = 0
        while count < 25:
            x = F(rng.randint(-10, 10), rng.randint(1, 6))
            y = F(rng.randint(-10, 10), rng.randint(1, 6))
            try:
                total = lyness_numeric_orbit_sum((-2, 0, 1, 0, 0), (x, y))
            except ValueError:
                continue
            assert abs(total) < 1e-9
            count += 1

    def test_exponent_sums_match_exact_products(self):
        # a zero orbit-sum exponent vector forces the orbit product to +-1
        rng = random.Random(8)
        count = 0
        while count < 20:
            x = F(rng.randint(-10, 10), rng.randint(1, 4))
            y = F(rng.randint(-10, 10), rng.randint(1, 4))
            try:
                orbit = lyness_orbit(x, y)
            except ValueError:
                continue
            product = F(1)
            for px, py in orbit:
                product *= monomial_value((-2, 0, 1, 0, 0), px, py)
            assert abs(product) == 1
            count += 1

    def test_bad_vector_length(self):
        with pytest.raises(ValueError):
            lyness_homomesy_check((1, 2, 3))
