"""Relation search at fixed v-adic precision: enumerate exponent tuples,
coordinate their v-adic values over F_q, take the nullspace, and compare the
found relations with the span of the universal families plus structural
zeros.

Relations found this way are precision-relative ("mod v^N candidates"); only
the containment of the generated families is asserted exactly.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .errors import InvalidScope, ScopeMismatch
from .fields import FieldSpec
from .linalg import FqMatrix, nullspace, stack_rank
from .poly import Poly
from .relations import (FormalRelation, Thm3Config, gen_thm2, gen_thm3,
                        is_q_even, is_trivial_zero)
from .zeta import Composition, TruncationConfig, vadic_mzv, vadic_mzv_auto


@dataclass(frozen=True)
class SearchScope:
    spec: FieldSpec
    v: Poly
    weight_max: int
    depth_max: int
    N: int
    D: int | None = None  # None: auto-extend per column until stabilized
    q_even_only: bool = True
    include_negatives: bool = False
    d_cap: int = 40

    def __post_init__(self):
        if self.weight_max < 1:
            raise InvalidScope("weight_max must be >= 1")
        if self.depth_max < 1:
            raise InvalidScope("depth_max must be >= 1")
        if self.N < 1 or self.N * self.v.degree() < 1:
            raise InvalidScope("need N * deg(v) >= 1")

    def describe(self) -> dict:
        return {
            "q": self.spec.q,
            "v": str(self.v),
            "weight_max": self.weight_max,
            "depth_max": self.depth_max,
            "N": self.N,
            "D": self.D,
            "q_even_only": self.q_even_only,
            "include_negatives": self.include_negatives,
        }


@dataclass(frozen=True)
class ValueVector:
    tuple: Composition
    coords: tuple[int, ...]  # F_q indices on the basis {t^i mod v^N}
    stabilized: bool


def enumerate_tuples(scope: SearchScope) -> list[Composition]:
    """All in-scope compositions, ordered by (depth, entries)."""
    spec = scope.spec
    values = [e for e in range(1, scope.weight_max + 1)
              if not scope.q_even_only or is_q_even(e, spec)]
    if scope.include_negatives:
        values += [-e for e in range(1, scope.weight_max + 1)
                   if not scope.q_even_only or is_q_even(e, spec)]
    values.sort()
    out = []
    for depth in range(1, scope.depth_max + 1):
        for entries in itertools.product(values, repeat=depth):
            if sum(abs(e) for e in entries) <= scope.weight_max:
                out.append(Composition(entries))
    out.sort(key=lambda c: (c.depth, c.entries))
    return out


def _value_vector(s: Composition, scope: SearchScope) -> ValueVector:
    if scope.D is None:
        report = vadic_mzv_auto(scope.v, s, scope.N, False, scope.spec,
                                d_cap=scope.d_cap)
    else:
        cfg = TruncationConfig(D=scope.D, N=scope.N)
        report = vadic_mzv(scope.v, s, cfg, scope.spec)
    m = scope.N * scope.v.degree()
    coords = tuple(report.value.rep.coeff_index(i) for i in range(m))
    return ValueVector(tuple=s, coords=coords, stabilized=report.stabilized)


def value_matrix(tuples: list[Composition],
                 scope: SearchScope) -> tuple[FqMatrix, list[ValueVector]]:
    """Matrix whose column j holds the F_q coordinates of tuple j's v-adic
    value at precision N; unstabilized columns flagged, never dropped."""
    vectors = [_value_vector(s, scope) for s in tuples]
    m = scope.N * scope.v.degree()
    rows = [[vec.coords[i] for vec in vectors] for i in range(m)]
    return FqMatrix(scope.spec, rows, cols=len(tuples)), vectors


def find_relations(scope: SearchScope) -> list[FormalRelation]:
    """Nullspace basis of the value matrix, one single-factor relation per
    basis vector (coefficients are F_q element indices)."""
    tuples = enumerate_tuples(scope)
    matrix, _ = value_matrix(tuples, scope)
    basis = nullspace(matrix)
    out = []
    for vec in basis:
        terms = tuple((c, (s.entries,)) for c, s in zip(vec, tuples) if c)
        out.append(FormalRelation(terms=terms, tag="custom", spec=scope.spec))
    return out


def _universal_relations(scope: SearchScope,
                         tuples: list[Composition]) -> list[FormalRelation]:
    """All generated-family instances whose terms stay inside the scope's
    tuple list, plus unit relations for structural zeros."""
    spec = scope.spec
    in_scope = {s.entries for s in tuples}
    rels = []

    evens = sorted(e for e in range(1, scope.weight_max + 1)
                   if is_q_even(e, spec))
    for n in range(1, scope.depth_max + 1, 2):
        for combo in itertools.combinations(evens, n):
            if sum(combo) > scope.weight_max:
                continue
            rel = gen_thm2(Composition(combo), spec)
            if all(f in in_scope for _, fs in rel.terms for f in fs):
                rels.append(rel)

    if spec.p == 2:
        for phi in range(2, scope.depth_max + 1):
            for s0 in itertools.combinations_with_replacement(evens, phi):
                if sum(s0) > scope.weight_max:
                    continue
                pairs = tuple(sorted((s, s0.count(s)) for s in set(s0)))
                entries = set(s0) | {2 * s for s, k in pairs if k > 1}
                if len(entries) < len(set(s0)) + sum(1 for _, k in pairs if k > 1):
                    continue
                if any(k > 1 and not is_q_even(2 * s, spec) for s, k in pairs):
                    continue
                rel = gen_thm3(Thm3Config(pairs), spec)
                if rel.terms and all(f in in_scope
                                     for _, fs in rel.terms for f in fs):
                    rels.append(rel)

    for s in tuples:
        if is_trivial_zero(s, scope.v, spec):
            rels.append(FormalRelation(terms=((1, (s.entries,)),),
                                       tag="custom", spec=spec))
    return rels


def _relation_vector(rel: FormalRelation, index: dict[tuple, int],
                     spec: FieldSpec, cols: int) -> list[int]:
    vec = [0] * cols
    for coeff, factors in rel.terms:
        if len(factors) != 1:
            raise ScopeMismatch("only single-factor relations live in the scan space")
        f = factors[0]
        if f not in index:
            raise ScopeMismatch(f"tuple {f} outside scope")
        vec[index[f]] = spec.add(vec[index[f]], coeff % spec.q)
    return vec


def compare_with_universal(found: list[FormalRelation],
                           scope: SearchScope) -> dict:
    """Report comparing the found nullspace with the universal span.

    Containment of the universal span in the found span is theorem-backed
    once columns stabilize; the residual counts found directions beyond it.
    """
    tuples = enumerate_tuples(scope)
    index = {s.entries: j for j, s in enumerate(tuples)}
    spec = scope.spec
    cols = len(tuples)

    found_vecs = [_relation_vector(r, index, spec, cols) for r in found]
    universal = _universal_relations(scope, tuples)
    uni_vecs = [_relation_vector(r, index, spec, cols) for r in universal]

    dim_found = stack_rank(spec, found_vecs)
    dim_universal = stack_rank(spec, uni_vecs)
    stacked = stack_rank(spec, found_vecs + uni_vecs)
    containment = stacked == dim_found

    _, vectors = value_matrix(tuples, scope)
    unstabilized = [str(vec.tuple) for vec in vectors if not vec.stabilized]

    return {
        "scope": scope.describe(),
        "dim_found": dim_found,
        "dim_universal": dim_universal,
        "containment": containment,
        "residual": dim_found - dim_universal,
        "unstabilized_columns": unstabilized,
        "relations": [r.to_json_lines() for r in found],
    }
