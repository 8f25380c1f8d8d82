import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import Z5, element_pairs, element_triples, elements, groups, units
from oracles import leibniz_det, circulant, poly_mul_mod, sympy_det, sympy_inverse
from whtorsion.group_ring import (
    CyclicGroupSpec,
    GroupRingElement,
    ParseError,
    add,
    apply_automorphism,
    augmentation,
    circulant_determinant,
    format_element,
    invert_unit,
    involution,
    is_unit,
    mul,
    parse_element,
)


def E(text, n=5, eps=1):
    return parse_element(text, CyclicGroupSpec(n, eps))


def C(coeffs, eps=1):
    return GroupRingElement(CyclicGroupSpec(len(coeffs), eps), tuple(coeffs))


class TestGroupSpec:
    def test_rejects_bad_order(self):
        with pytest.raises(ValueError):
            CyclicGroupSpec(0)

    def test_negative_epsilon_needs_even_order(self):
        with pytest.raises(ValueError):
            CyclicGroupSpec(5, -1)
        assert CyclicGroupSpec(6, -1).omega(3) == -1

    def test_coefficient_length_checked(self):
        with pytest.raises(ValueError):
            GroupRingElement(Z5, (1, 2))


class TestArithmetic:
    def test_add_examples(self):
        assert add(E("1 - t"), E("t")) == E("1")
        x = E("1 - t - t^4")
        assert add(x, GroupRingElement.zero(Z5)) == x
        assert add(x, x).coeffs == (2, -2, 0, 0, -2)

    def test_mul_examples(self):
        assert mul(E("t"), E("t^4")) == E("1")
        x = E("1 - t - t^4")
        # frozen from oracles.poly_mul_mod
        assert mul(x, x).coeffs == (3, -2, 1, 1, -2)
        assert mul(x, GroupRingElement.one(Z5)) == x

    def test_mismatched_groups(self):
        with pytest.raises(ValueError):
            add(E("t"), E("t", n=7))
        with pytest.raises(ValueError):
            mul(E("t", n=6), E("t", n=6, eps=-1))

    def test_augmentation_examples(self):
        assert augmentation(E("1 - t - t^4")) == -1
        assert augmentation(GroupRingElement.norm(Z5)) == 5
        assert augmentation(GroupRingElement.zero(Z5)) == 0

    @given(element_pairs())
    def test_mul_matches_polynomial_oracle(self, xy):
        x, y = xy
        assert list((x * y).coeffs) == poly_mul_mod(list(x.coeffs), list(y.coeffs))

    @given(element_triples())
    def test_ring_axioms(self, xyz):
        x, y, z = xyz
        assert x * y == y * x
        assert (x * y) * z == x * (y * z)
        assert x * (y + z) == x * y + x * z


class TestInvolution:
    def test_examples(self):
        x = E("1 - t - t^4")
        assert involution(x) == x
        assert involution(E("t")) == E("t^4")
        assert involution(E("t", 6, -1)) == E("-t^5", 6, -1)

    @given(element_pairs())
    def test_involutive_multiplicative_additive(self, xy):
        x, y = xy
        assert involution(involution(x)) == x
        assert involution(x * y) == involution(x) * involution(y)
        assert involution(x + y) == involution(x) + involution(y)


class TestDeterminant:
    @pytest.mark.parametrize(
        "coeffs, expected",
        [
            # frozen from oracles.leibniz_det
            ([1, -1, 0, 0, -1], -1),
            ([-2, 1, 3, 1, -2], 1),
            ([1, 1, 1, 1, 1], 0),
            ([1, 1, 0, 0, 0], 2),
        ],
    )
    def test_examples(self, coeffs, expected):
        assert leibniz_det(circulant(coeffs)) == expected
        assert circulant_determinant(C(coeffs)) == expected

    @given(element_pairs(orders=(1, 2, 3, 4, 5, 6)))
    def test_agrees_with_leibniz(self, xy):
        x, _ = xy
        assert circulant_determinant(x) == leibniz_det(circulant(list(x.coeffs)))

    @settings(max_examples=40)
    @given(element_pairs(orders=(7, 8, 9)))
    def test_agrees_with_sympy(self, xy):
        x, _ = xy
        assert circulant_determinant(x) == sympy_det(list(x.coeffs))

    @given(element_pairs())
    def test_multiplicative(self, xy):
        x, y = xy
        assert circulant_determinant(x * y) == circulant_determinant(x) * circulant_determinant(y)


class TestUnits:
    def test_is_unit_examples(self):
        assert is_unit(E("1 - t - t^4"))
        assert not is_unit(GroupRingElement.norm(Z5))
        assert is_unit(E("-t^3"))

    def test_invert_examples(self):
        assert invert_unit(E("t^2")) == E("t^3")
        assert invert_unit(E("1")) == E("1")
        sigma = E("1 - t - t^4")
        # frozen from oracles.sympy_inverse
        assert invert_unit(sigma).coeffs == (1, 0, -1, -1, 0)
        assert list(invert_unit(sigma).coeffs) == sympy_inverse([1, -1, 0, 0, -1])

    def test_invert_rejects_non_unit(self):
        with pytest.raises(ValueError):
            invert_unit(E("1 + t"))

    @given(st.data())
    def test_units_have_augmentation_pm1_and_invert(self, data):
        g = data.draw(groups((1, 2, 5, 7, 8, 9, 12)))
        u = data.draw(units(g))
        assert abs(augmentation(u)) == 1
        assert u * invert_unit(u) == GroupRingElement.one(g)

    def test_negative_power(self):
        s = E("1 - t - t^4")
        assert s ** -2 * s ** 2 == E("1")


class TestAutomorphism:
    def test_examples(self):
        x = E("1 - t - t^4")
        assert apply_automorphism(2, x) == E("1 - t^2 - t^3")
        assert apply_automorphism(1, x) == x
        assert apply_automorphism(4, apply_automorphism(4, x)) == apply_automorphism(16 % 5, x) == x

    def test_rejects_non_coprime(self):
        with pytest.raises(ValueError):
            apply_automorphism(2, E("t", n=6))

    @given(st.data())
    def test_ring_automorphism(self, data):
        g = data.draw(groups((5, 7, 8, 9)))
        x, y = data.draw(elements(g)), data.draw(elements(g))
        a = data.draw(st.sampled_from([a for a in range(1, g.n) if __import__("math").gcd(a, g.n) == 1]))
        f = lambda z: apply_automorphism(a, z)
        assert f(x * y) == f(x) * f(y)
        assert f(x + y) == f(x) + f(y)
        assert circulant_determinant(f(x)) == circulant_determinant(x)


class TestParsing:
    def test_examples(self):
        assert E("1 - t - t^4").coeffs == (1, -1, 0, 0, -1)
        assert E("t^7") == E("t^2")
        assert E("3 + 2t^2 - t^2").coeffs == (3, 0, 1, 0, 0)

    @pytest.mark.parametrize(
        "text, canon",
        [
            ("1-t-t^4", "1 - t - t^4"),
            ("  -2 +t+ 3t^2 + t^3 -2t^4", "-2 + t + 3t^2 + t^3 - 2t^4"),
            ("t - t", "0"),
            ("5t^5", "5"),
            ("2*t^3 + t^-1", "2t^3 + t^4"),
            ("-t", "-t"),
        ],
    )
    def test_canonical_form(self, text, canon):
        assert format_element(E(text)) == canon

    @pytest.mark.parametrize("text, pos", [("", 0), ("1 +", 3), ("t^x", 2), ("1 2", 2), ("t^", 2), ("+", 1)])
    def test_errors_carry_position(self, text, pos):
        with pytest.raises(ParseError) as info:
            E(text)
        assert info.value.pos == pos

    @given(st.data())
    def test_round_trip(self, data):
        g = data.draw(groups())
        x = data.draw(elements(g, -30, 30))
        assert parse_element(format_element(x), g) == x
