import pytest

from ffmzv import (Composition, FieldSpec, SearchScope, Vadic,
                   compare_with_universal, enumerate_tuples, evaluate_relation,
                   find_relations, parse_poly, value_matrix)
from ffmzv.errors import InvalidScope

F2 = FieldSpec.parse("q=2")
F3 = FieldSpec.parse("q=3")
T2 = parse_poly("t", F2)
T3 = parse_poly("t", F3)


def test_enumerate_tuples_pinned():
    scope = SearchScope(F3, T3, weight_max=4, depth_max=2, N=2)
    assert [c.entries for c in enumerate_tuples(scope)] == \
        [(2,), (4,), (2, 2)]
    scope = SearchScope(F2, T2, weight_max=2, depth_max=2, N=2)
    assert [c.entries for c in enumerate_tuples(scope)] == \
        [(1,), (2,), (1, 1)]


def test_enumerate_tuples_negatives():
    scope = SearchScope(F2, T2, weight_max=2, depth_max=1, N=2,
                        include_negatives=True)
    assert [c.entries for c in enumerate_tuples(scope)] == \
        [(-2,), (-1,), (1,), (2,)]


def test_invalid_scope():
    with pytest.raises(InvalidScope):
        SearchScope(F2, T2, weight_max=0, depth_max=1, N=2)
    with pytest.raises(InvalidScope):
        SearchScope(F2, T2, weight_max=2, depth_max=0, N=2)
    with pytest.raises(InvalidScope):
        SearchScope(F2, T2, weight_max=2, depth_max=1, N=0)


def test_qeven_depth1_column_is_zero():
    # depth-1 q-even values vanish v-adically, so their columns are zero
    scope = SearchScope(F3, T3, weight_max=4, depth_max=1, N=3)
    _, vectors = value_matrix(enumerate_tuples(scope), scope)
    for vec in vectors:
        assert vec.stabilized and set(vec.coords) == {0}, vec.tuple


def test_found_relations_are_sound():
    scope = SearchScope(F2, T2, weight_max=4, depth_max=3, N=2)
    rels = find_relations(scope)
    assert rels
    for rel in rels:
        _, verdict = evaluate_relation(rel, Vadic(T2, N=2))
        assert verdict.passed, rel.terms


def test_precision_monotonicity():
    # relations found at higher precision remain relations at lower precision
    lo = SearchScope(F2, T2, weight_max=4, depth_max=3, N=2)
    hi = SearchScope(F2, T2, weight_max=4, depth_max=3, N=3)
    n_lo = len(find_relations(lo))
    n_hi = len(find_relations(hi))
    assert n_hi <= n_lo
    for rel in find_relations(hi):
        _, verdict = evaluate_relation(rel, Vadic(T2, N=2))
        assert verdict.passed


def test_small_scope_containment():
    scope = SearchScope(F2, T2, weight_max=4, depth_max=3, N=2)
    rels = find_relations(scope)
    report = compare_with_universal(rels, scope)
    assert report["containment"] is True
    assert report["dim_found"] == len(rels)
    assert report["dim_universal"] <= report["dim_found"]
    assert report["residual"] == report["dim_found"] - report["dim_universal"]
    assert report["unstabilized_columns"] == []


def test_describe_is_json_ready():
    import json
    scope = SearchScope(F3, T3, weight_max=4, depth_max=2, N=2)
    json.dumps(scope.describe(), sort_keys=True)
