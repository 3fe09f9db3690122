import random

import pytest

from arccodes.field import make_field, field_from_order
from arccodes.opoly import (
    applicable_families,
    evaluate,
    interpolate,
    is_o_polynomial,
    is_two_to_one_with_linear,
    linear_shift_image,
    make_custom_opoly,
    make_family_opoly,
    parse_opoly_descriptor,
    value_table,
)


def test_translation_gf4_is_square():
    F = make_field(2, 2)
    f = make_family_opoly(F, "translation", h=1)
    assert f.coeffs == (0, 0, 1)
    assert evaluate(f, 2) == F.mul(2, 2)


def test_segre_is_sixth_power():
    F = make_field(2, 3)
    f = make_family_opoly(F, "segre")
    assert f.coeffs == (0, 0, 0, 0, 0, 0, 1)
    g = F.primitive_element()
    assert evaluate(f, g) == F.pow(g, 6)


def test_family_applicability_errors():
    with pytest.raises(ValueError):
        make_family_opoly(make_field(2, 2), "segre")  # m=2 even
    with pytest.raises(ValueError):
        make_family_opoly(make_field(2, 4), "translation", h=2)  # gcd(2,4)=2
    with pytest.raises(ValueError):
        make_family_opoly(make_field(3, 2), "translation", h=1)  # odd char
    with pytest.raises(ValueError):
        make_family_opoly(make_field(2, 3), "glynn3")  # needs m=1 mod 4, m>=5
    with pytest.raises(ValueError):
        make_family_opoly(make_field(2, 2), "subiaco")  # a would need to leave GF(4)
    with pytest.raises(ValueError):
        make_family_opoly(make_field(2, 3), "adelaide")  # m odd
    with pytest.raises(ValueError):
        make_family_opoly(make_field(2, 3), "nosuch")


def test_is_o_polynomial_verdicts():
    F = make_field(2, 2)
    assert is_o_polynomial(make_family_opoly(F, "translation", h=1)).ok
    v = is_o_polynomial(make_custom_opoly(F, [0, 1]))  # f(x) = x
    assert not v.ok and v.condition == "quotient-permutation"
    v = is_o_polynomial(make_custom_opoly(F, [1, 1]))  # f(0) != 0
    assert not v.ok
    assert is_o_polynomial(make_family_opoly(make_field(2, 3), "segre")).ok


def test_two_to_one_verdicts():
    F = make_field(2, 2)
    assert is_two_to_one_with_linear(make_family_opoly(F, "translation", h=1)).ok
    v = is_two_to_one_with_linear(make_custom_opoly(F, [0, 0, 0, 1]))  # x^3
    assert not v.ok and v.witness is not None
    with pytest.raises(ValueError):
        is_two_to_one_with_linear(make_custom_opoly(F, [1]))  # f(0) != 0


@pytest.mark.parametrize("q", [4, 8, 16, 32])
def test_builtin_families_validate(q):
    F = field_from_order(q)
    fams = applicable_families(F)
    assert fams, "at least the translation family applies"
    for f in fams:
        tab = value_table(f)
        assert tab[0] == 0 and tab[1] == 1
        assert is_o_polynomial(f).ok, f.descriptor()
        assert is_two_to_one_with_linear(f).ok, f.descriptor()
        assert len(linear_shift_image(f)) == q // 2


def test_expected_families_present():
    names8 = {f.family for f in applicable_families(make_field(2, 3))}
    assert names8 == {"translation", "segre", "glynn1", "glynn2", "cherowitzo",
                      "payne", "subiaco"}
    names16 = {f.family for f in applicable_families(make_field(2, 4))}
    assert names16 == {"translation", "subiaco", "adelaide"}
    names32 = {f.family for f in applicable_families(make_field(2, 5))}
    assert names32 == {"translation", "segre", "glynn1", "glynn3", "cherowitzo",
                       "payne", "subiaco"}


def test_payne_exponents():
    # q=32: the three exponents are the 1/6, 1/2, 5/6 powers mod q-1
    F = make_field(2, 5)
    f = make_family_opoly(F, "payne")
    exps = {i for i, c in enumerate(f.coeffs) if c}
    assert exps == {6, 16, 26}
    assert (6 * 26) % 31 == 1  # x^26 really is the sixth root


def test_two_to_one_exhaustive_q64():
    F = make_field(2, 6)
    f = make_family_opoly(F, "translation", h=1)
    assert is_two_to_one_with_linear(f).ok
    assert len(linear_shift_image(f)) == 32


def test_descriptor_parse_round_trip():
    F = make_field(2, 3)
    for text in ("translation:h=2", "segre", "subiaco:a=1"):
        f = parse_opoly_descriptor(F, text)
        assert parse_opoly_descriptor(F, f.descriptor()).coeffs == f.coeffs
    f = parse_opoly_descriptor(F, "custom:coeffs=0,0,1")
    assert f.coeffs == (0, 0, 1)
    with pytest.raises(ValueError):
        parse_opoly_descriptor(F, "translation:h")


def test_interpolation_reconstructs_values():
    F = make_field(2, 3)
    rng = random.Random(7)
    values = [rng.randrange(F.q) for _ in range(F.q)]
    coeffs = interpolate(F, values)
    assert len(coeffs) <= F.q
    f = make_custom_opoly(F, coeffs)
    assert value_table(f) == values


def test_subiaco_interpolated_form_matches_pointwise():
    F = make_field(2, 4)
    f = make_family_opoly(F, "subiaco")
    a = f.param("a")
    assert F.trace(F.inv(a)) == 1
    assert f.degree < F.q


def test_adelaide_q16():
    F = make_field(2, 4)
    f = make_family_opoly(F, "adelaide")
    assert f.param("t") == 5
    assert is_o_polynomial(f).ok
    with pytest.raises(ValueError):
        make_family_opoly(F, "adelaide", t=7)  # not +-(q-1)/3 mod q+1
