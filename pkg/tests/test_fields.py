import pytest
from hypothesis import given, settings, strategies as st

from ffmzv import FieldSpec, fq_inv
from ffmzv.errors import DivisionByZero, InvalidFieldSpec

F2 = FieldSpec.parse("q=2")
F3 = FieldSpec.parse("q=3")
F4 = FieldSpec.parse("q=4")
F9 = FieldSpec.parse("q=9")


def test_parse_and_spec_string_round_trip():
    for text in ("q=2", "q=3", "q=4", "q=9", "q=8"):
        spec = FieldSpec.parse(text)
        again = FieldSpec.parse(spec.spec_string())
        assert again == spec


def test_explicit_modulus():
    spec = FieldSpec.parse("q=9;modulus=x^2+1")
    assert spec.q == 9 and spec.p == 3 and spec.f == 2
    with pytest.raises(InvalidFieldSpec):
        FieldSpec.parse("q=9;modulus=x^2+2")  # x^2+2 = (x+1)(x+2) over F_3


def test_non_prime_power_rejected():
    for q in (6, 12, 1):
        with pytest.raises(InvalidFieldSpec):
            FieldSpec.parse(f"q={q}")


def test_f3_inverse():
    assert fq_inv(2, F3) == 2


def test_f4_generator_inverse():
    # generator x has index 2; x * (x+1) = x^2 + x = 1 for modulus x^2+x+1
    assert fq_inv(2, F4) == 3
    assert F4.mul(2, 3) == 1


def test_zero_not_invertible():
    with pytest.raises(DivisionByZero):
        fq_inv(0, F2)


@settings(max_examples=60, deadline=None)
@given(st.sampled_from([F2, F3, F4, F9]), st.data())
def test_field_axioms(spec, data):
    a = data.draw(st.integers(0, spec.q - 1))
    b = data.draw(st.integers(0, spec.q - 1))
    c = data.draw(st.integers(0, spec.q - 1))
    assert spec.add(a, b) == spec.add(b, a)
    assert spec.mul(a, b) == spec.mul(b, a)
    assert spec.add(spec.add(a, b), c) == spec.add(a, spec.add(b, c))
    assert spec.mul(spec.mul(a, b), c) == spec.mul(a, spec.mul(b, c))
    assert spec.mul(a, spec.add(b, c)) == spec.add(spec.mul(a, b), spec.mul(a, c))
    assert spec.add(a, spec.neg(a)) == 0
    if a:
        assert spec.mul(a, spec.inv(a)) == 1


@settings(max_examples=40, deadline=None)
@given(st.sampled_from([F4, F9]), st.integers(0, 8))
def test_coords_round_trip(spec, a):
    a %= spec.q
    assert spec.from_coords(spec.coords(a)) == a


def test_pow_matches_repeated_mul():
    for spec in (F3, F4):
        for a in range(1, spec.q):
            acc = 1
            for e in range(1, 6):
                acc = spec.mul(acc, a)
                assert spec.pow(a, e) == acc
            assert spec.pow(a, -1) == spec.inv(a)
