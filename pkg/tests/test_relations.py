import pytest

from ffmzv import (Composition, FieldSpec, Finite, FormalRelation,
                   Thm3Config, TruncatedExact, Vadic, evaluate_relation,
                   gen_thm2, gen_thm3, gen_thmA, gen_thmB, is_q_even,
                   is_trivial_zero, parse_poly)
from ffmzv.errors import InvalidEvaluator, InvalidFamilyInput

F2 = FieldSpec.parse("q=2")
F3 = FieldSpec.parse("q=3")
F4 = FieldSpec.parse("q=4")
T2 = parse_poly("t", F2)
V2 = parse_poly("t^2+t+1", F2)


def test_is_q_even():
    assert is_q_even(5, F2)  # q=2: every integer
    assert is_q_even(4, F3) and not is_q_even(3, F3)
    assert is_q_even(6, F4) and not is_q_even(4, F4)


def test_thm2_sign_pattern_q3():
    rel = gen_thm2(Composition((2, 4, 6)), F3)
    got = {factors[0]: coeff for coeff, factors in rel.terms}
    # sgn over S_3 in F_3: even perms -> 1, odd -> 2
    assert got == {
        (2, 4, 6): 1, (4, 6, 2): 1, (6, 2, 4): 1,
        (2, 6, 4): 2, (4, 2, 6): 2, (6, 4, 2): 2,
    }


def test_thm2_input_validation():
    with pytest.raises(InvalidFamilyInput):
        gen_thm2(Composition((2, 2, 4)), F3)  # repeated entry
    with pytest.raises(InvalidFamilyInput):
        gen_thm2(Composition((2, 4)), F3)  # even depth
    with pytest.raises(InvalidFamilyInput):
        gen_thm2(Composition((2, 3, 4)), F3)  # 3 not q-even


def test_thm3_examples():
    rel = gen_thm3(Thm3Config(((1, 3),)), F2)
    assert set(f[0] for _, f in rel.terms) == {(1, 2), (2, 1), (1, 1, 1)}
    assert all(c == 1 for c, _ in rel.terms)
    # phi = 2 kills the base term, leaving only the fused tuple
    rel = gen_thm3(Thm3Config(((1, 2),)), F2)
    assert [(c, f) for c, f in rel.terms] == [(1, ((2,),))]
    # k = 1: no fused term, phi = 1
    rel = gen_thm3(Thm3Config(((1, 1),)), F2)
    assert [(c, f) for c, f in rel.terms] == [(1, ((1,),))]


def test_thm3_input_validation():
    with pytest.raises(InvalidFamilyInput):
        gen_thm3(Thm3Config(((2, 2),)), F3)  # wrong characteristic
    with pytest.raises(InvalidFamilyInput):
        gen_thm3(Thm3Config(((1, 2), (2, 1))), F2)  # 2*1 collides with 2
    with pytest.raises(InvalidFamilyInput):
        gen_thm3(Thm3Config(((1, 0),)), F2)
    with pytest.raises(InvalidFamilyInput):
        gen_thm3(Thm3Config(((4, 2),)), F4)  # 4 not q-even for q=4


def test_thmA_depth1_is_empty():
    # permutation sum at depth 1 cancels identically with its expansion
    rel = gen_thmA(Composition((2,)), F3)
    assert rel.terms == ()


def test_thmA_char2_collapse():
    rel = gen_thmA(Composition((1, 2, 3)), F2)
    assert all(c == 1 for c, _ in rel.terms)


def test_thmA_truncation_exact():
    rel = gen_thmA(Composition((2, 4, 6)), F3)
    for D in (1, 2, 3):
        _, verdict = evaluate_relation(rel, TruncatedExact(D))
        assert verdict.kind == "Zero", D


def test_thmB_truncation_exact():
    for pairs in [((1, 3),), ((1, 2), (3, 2)), ((1, 1), (2, 2))]:
        rel = gen_thmB(Thm3Config(pairs), F2)
        for D in (1, 2, 3):
            _, verdict = evaluate_relation(rel, TruncatedExact(D))
            assert verdict.kind == "Zero", (pairs, D)


def test_thm2_vadic_verdict():
    rel = gen_thm2(Composition((1, 2, 3)), F2)
    for star in (False, True):
        _, verdict = evaluate_relation(
            rel, Vadic(T2, N=3, star=star))
        assert verdict.passed and str(verdict) == "ValuationAtLeast(3)"


def test_thm2_finite_verdict():
    rel = gen_thm2(Composition((1, 2, 3)), F2)
    for v in (T2, V2):
        _, verdict = evaluate_relation(rel, Finite(v))
        assert verdict.kind == "Zero", v


def test_invalid_evaluator():
    rel = gen_thm2(Composition((2,)), F3)
    with pytest.raises(InvalidEvaluator):
        evaluate_relation(rel, "trunc")


def test_json_round_trip():
    rel = gen_thmB(Thm3Config(((1, 2), (3, 2))), F2)
    text = rel.to_json_lines()
    back = FormalRelation.from_json_lines(text, F2)
    assert back.terms == rel.terms and back.tag == rel.tag


def test_is_trivial_zero():
    assert not is_trivial_zero(Composition((1, -1, 1, 1)), T2, F2)
    assert is_trivial_zero(Composition((-1, 1, 1, 1, 1)), T2, F2)
    assert not is_trivial_zero(Composition((-1,)), T2, F2)
    assert not is_trivial_zero(Composition((1, 2)), T2, F2)


def test_trivial_zero_actually_vanishes():
    s = Composition((-1, 1, 1, 1, 1))
    assert is_trivial_zero(s, T2, F2)
    rel = FormalRelation.build([(1, (s.entries,))], "custom", F2)
    _, verdict = evaluate_relation(rel, Vadic(T2, N=3))
    assert verdict.passed
