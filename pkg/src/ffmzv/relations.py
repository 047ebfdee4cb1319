"""Universal F_q-linear relation families among zeta values, as formal
objects, plus evaluation of any formal relation under any carrier.

Family tags (also the CLI --family names):
  thm2 -- alternating sum over all permutations of a distinct q-even tuple
          of odd depth.
  thm3 -- characteristic-2 doubling family over multiplicity pairs (s, k).
  thmA -- the thm2 sum rewritten as products of a depth-1 value with
          signed permutation sums of the shortened tuple; exact at every
          truncation level.
  thmB -- the thm3 sum rewritten likewise (characteristic 2); exact at
          every truncation level.

The term builders are shared with the generic harmonic-sum checker, so the
same combinatorics is exercised over arbitrary commutative rings.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from itertools import permutations

from .errors import InvalidEvaluator, InvalidFamilyInput
from .fields import FieldSpec
from .lfrac import LFrac
from .poly import Poly
from .power_sums import default_vanish_cap, vanish_degree
from .residue import AtLeast, ResidueElem
from .zeta import (Composition, TruncationConfig, _truncated_frac, finite_mzv,
                   vadic_mzv, vadic_mzv_auto)

# -- generic term builders (integer coefficients, plain tuples) -----------------


def _perm_sign(perm: tuple[int, ...]) -> int:
    sign = 1
    seen = [False] * len(perm)
    for i in range(len(perm)):
        if seen[i]:
            continue
        length = 0
        j = i
        while not seen[j]:
            seen[j] = True
            j = perm[j]
            length += 1
        if length % 2 == 0:
            sign = -sign
    return sign


def _signed_orders(entries: tuple[int, ...]):
    """(sgn(sigma), sigma(entries)) over all of S_n (entries distinct)."""
    n = len(entries)
    for perm in permutations(range(n)):
        yield _perm_sign(perm), tuple(entries[i] for i in perm)


def signed_perm_terms(entries: tuple[int, ...]) -> list[tuple[int, tuple]]:
    """Alternating permutation sum: [(sgn, (ordered tuple,))]."""
    return [(sign, (order,)) for sign, order in _signed_orders(entries)]


def signed_perm_identity_terms(entries: tuple[int, ...]) -> list[tuple[int, tuple]]:
    """Permutation sum minus its product expansion; sums to zero at every
    truncation level.  Terms are (coeff, factor-tuples)."""
    n = len(entries)
    terms = list(signed_perm_terms(entries))
    for j in range(n):
        head = (entries[j],)
        rest = entries[:j] + entries[j + 1:]
        outer = -1 * (-1) ** (n - 1 - j)
        if not rest:
            terms.append((outer, (head,)))
            continue
        for sign, order in _signed_orders(rest):
            terms.append((outer * sign, (head, order)))
    return terms


def _reorders(multiset: tuple[int, ...]) -> list[tuple[int, ...]]:
    """Distinct orderings of a multiset (set semantics)."""
    return sorted(set(permutations(multiset)))


def _remove(multiset: tuple[int, ...], value: int, count: int = 1) -> tuple[int, ...]:
    out = list(multiset)
    for _ in range(count):
        out.remove(value)
    return tuple(out)


def _doubling_base(pairs) -> tuple[tuple[int, ...], int]:
    s0 = tuple(s for s, k in pairs for _ in range(k))
    phi = sum(k for _, k in pairs)
    return s0, phi


def doubling_terms(pairs) -> list[tuple[int, tuple]]:
    """Doubling-family sum: for each (s,k) with k > 1 the re-orders of the
    base multiset with two copies of s fused into 2s, plus phi times the
    re-orders of the base multiset itself."""
    s0, phi = _doubling_base(pairs)
    terms = []
    for s, k in pairs:
        if k > 1:
            fused = _remove(s0, s, 2) + (2 * s,)
            terms.extend((1, (order,)) for order in _reorders(fused))
    terms.extend((phi, (order,)) for order in _reorders(s0))
    return terms


def doubling_identity_terms(pairs) -> list[tuple[int, tuple]]:
    """Doubling-family sum minus its product expansion (characteristic-2
    identity; signs written as -1 and reduced by the caller)."""
    s0, phi = _doubling_base(pairs)
    terms = list(doubling_terms(pairs))

    def product_terms(head_entry, tail_multiset, coeff):
        head = (head_entry,)
        if not tail_multiset:
            terms.append((-coeff, (head,)))
            return
        for order in _reorders(tail_multiset):
            terms.append((-coeff, (head, order)))

    for j, (sj, kj) in enumerate(pairs):
        # Every j contributes cross products against the other fused tuples;
        # restricting j here breaks cancellation whenever another
        # multiplicity equals 2 (coefficients sit in characteristic 2, so
        # the even-multiplicity terms cost nothing when they do cancel).
        for i, (si, ki) in enumerate(pairs):
            if i == j or ki <= 1:
                continue
            fused = _remove(s0, si, 2) + (2 * si,)
            product_terms(sj, _remove(fused, sj), 1)
        if kj > 2:
            product_terms(sj, _remove(s0, sj, 3) + (2 * sj,), 1)
        if kj > 1:
            product_terms(2 * sj, _remove(s0, sj, 2), 1)
        product_terms(sj, _remove(s0, sj), phi)
    return terms


# -- formal relations ------------------------------------------------------------


@dataclass(frozen=True)
class FormalRelation:
    """F_p-linear combination of products of zeta values, canonically
    reduced: factors sorted within each term, like terms combined,
    zero-coefficient and identity factors dropped."""
    terms: tuple  # of (coeff in [1, p-1], factor tuple of entry-tuples)
    tag: str
    spec: FieldSpec

    @staticmethod
    def build(raw_terms, tag: str, spec: FieldSpec) -> "FormalRelation":
        p = spec.p
        combined: dict[tuple, int] = {}
        for coeff, factors in raw_terms:
            key = tuple(sorted(tuple(f) for f in factors if len(f) > 0))
            combined[key] = (combined.get(key, 0) + coeff) % p
        terms = tuple(sorted((key, c) for key, c in combined.items() if c))
        return FormalRelation(terms=tuple((c, key) for key, c in terms),
                              tag=tag, spec=spec)

    def to_json_lines(self) -> str:
        lines = []
        for coeff, factors in self.terms:
            lines.append(json.dumps({
                "coeff": [coeff],
                "factors": [list(f) for f in factors],
                "tag": self.tag,
            }))
        return "\n".join(lines)

    @staticmethod
    def from_json_lines(text: str, spec: FieldSpec) -> "FormalRelation":
        raw = []
        tag = "custom"
        for line in text.splitlines():
            line = line.strip()
            if not line:
                continue
            obj = json.loads(line)
            tag = obj.get("tag", tag)
            raw.append((obj["coeff"][0], tuple(tuple(f) for f in obj["factors"])))
        return FormalRelation.build(raw, tag, spec)


@dataclass(frozen=True)
class Thm3Config:
    """Multiplicity pairs for the doubling families: ((s_1, k_1), ...)."""
    pairs: tuple[tuple[int, int], ...]

    @property
    def phi(self) -> int:
        return sum(k for _, k in self.pairs)


def is_q_even(s: int, spec: FieldSpec) -> bool:
    return s % (spec.q - 1) == 0 if spec.q > 2 else True


def _check_perm_input(s: Composition, spec: FieldSpec):
    entries = s.entries
    if len(set(entries)) != len(entries):
        raise InvalidFamilyInput("entries must be distinct")
    if len(entries) % 2 == 0:
        raise InvalidFamilyInput("depth must be odd")
    for e in entries:
        if not is_q_even(e, spec):
            raise InvalidFamilyInput(f"entry {e} is not q-even for q={spec.q}")


def _check_doubling_input(cfg: Thm3Config, spec: FieldSpec):
    if spec.p != 2:
        raise InvalidFamilyInput("doubling families require characteristic 2")
    seen = []
    for s, k in cfg.pairs:
        if k < 1:
            raise InvalidFamilyInput("multiplicities must be >= 1")
        if not is_q_even(s, spec):
            raise InvalidFamilyInput(f"entry {s} is not q-even for q={spec.q}")
        seen.append(s)
        if k > 1:
            if not is_q_even(2 * s, spec):
                raise InvalidFamilyInput(f"doubled entry {2*s} is not q-even")
            seen.append(2 * s)
    if len(set(seen)) != len(seen):
        raise InvalidFamilyInput(
            "entries (and doubled entries at multiplicity > 1) must be distinct")


def gen_thm2(s: Composition, spec: FieldSpec) -> FormalRelation:
    """Alternating permutation relation on a distinct q-even tuple of odd
    depth; n! single-factor terms."""
    _check_perm_input(s, spec)
    return FormalRelation.build(signed_perm_terms(s.entries), "thm2", spec)


def gen_thm3(cfg: Thm3Config, spec: FieldSpec) -> FormalRelation:
    """Characteristic-2 doubling relation from multiplicity pairs."""
    _check_doubling_input(cfg, spec)
    return FormalRelation.build(doubling_terms(cfg.pairs), "thm3", spec)


def gen_thmA(s: Composition, spec: FieldSpec) -> FormalRelation:
    """Permutation-sum product identity, valid at every truncation level."""
    _check_perm_input(s, spec)
    return FormalRelation.build(signed_perm_identity_terms(s.entries), "thmA", spec)


def gen_thmB(cfg: Thm3Config, spec: FieldSpec) -> FormalRelation:
    """Doubling product identity (characteristic 2), valid at every
    truncation level."""
    _check_doubling_input(cfg, spec)
    return FormalRelation.build(doubling_identity_terms(cfg.pairs), "thmB", spec)


def is_trivial_zero(s: Composition, v: Poly, spec: FieldSpec) -> bool:
    """Structural vanishing test for mixed-sign tuples at depth > 1: a
    negative entry too deep in the tuple forces every chain to hit a
    vanishing power sum."""
    entries = s.entries
    r = len(entries)
    if r <= 1:
        return False
    dv = v.degree()
    bound: dict[int, int] = {}

    def L(m: int) -> int:
        if m not in bound:
            bound[m] = vanish_degree(m, spec, default_vanish_cap(m, spec))
        return bound[m]

    neg = [i for i in range(1, r + 1) if entries[i - 1] < 0]
    for i in neg:
        if r - i > L(-entries[i - 1]) + dv:
            return True
    for i in neg:
        if dv > r - i > L(-entries[i - 1]):
            for j in neg:
                if i - j > L(-entries[j - 1]):
                    return True
    return False


# -- evaluation ------------------------------------------------------------------


@dataclass(frozen=True)
class TruncatedExact:
    D: int
    star: bool = False


@dataclass(frozen=True)
class Finite:
    v: Poly
    star: bool = False


@dataclass(frozen=True)
class Vadic:
    v: Poly
    N: int
    D: int | None = None  # None: auto-extend until stabilized
    star: bool = False


@dataclass(frozen=True)
class Verdict:
    kind: str  # "Zero" | "NonZero" | "ValuationAtLeast"
    n: int | None = None

    def __str__(self) -> str:
        if self.kind == "ValuationAtLeast":
            return f"ValuationAtLeast({self.n})"
        return self.kind

    @property
    def passed(self) -> bool:
        return self.kind in ("Zero", "ValuationAtLeast")


_residue_factor_cache: dict[tuple, ResidueElem] = {}


def _factor_value(factor: tuple[int, ...], evaluator, spec: FieldSpec):
    s = Composition(factor)
    if isinstance(evaluator, TruncatedExact):
        return _truncated_frac(evaluator.D, s, evaluator.star, spec)
    if isinstance(evaluator, Finite):
        key = (spec, evaluator.v, 1, None, evaluator.star, factor)
        hit = _residue_factor_cache.get(key)
        if hit is None:
            hit = finite_mzv(evaluator.v, s, evaluator.star, spec)
            _residue_factor_cache[key] = hit
        return hit
    if isinstance(evaluator, Vadic):
        key = (spec, evaluator.v, evaluator.N, evaluator.D, evaluator.star, factor)
        hit = _residue_factor_cache.get(key)
        if hit is None:
            if evaluator.D is None:
                hit = vadic_mzv_auto(evaluator.v, s, evaluator.N,
                                     evaluator.star, spec).value
            else:
                cfg = TruncationConfig(D=evaluator.D, N=evaluator.N,
                                       star=evaluator.star)
                hit = vadic_mzv(evaluator.v, s, cfg, spec).value
            _residue_factor_cache[key] = hit
        return hit
    raise InvalidEvaluator(f"unknown evaluator {evaluator!r}")


def evaluate_relation(rel: FormalRelation, evaluator) -> tuple[object, Verdict]:
    """Sum of coeff * product of factor values in the evaluator's carrier;
    returns (value, verdict)."""
    spec = rel.spec
    if isinstance(evaluator, TruncatedExact):
        acc = LFrac.zero(spec)
        one: object = LFrac.one(spec)
    elif isinstance(evaluator, Finite):
        acc = ResidueElem.zero(evaluator.v, 1)
        one = ResidueElem.one(evaluator.v, 1)
    elif isinstance(evaluator, Vadic):
        acc = ResidueElem.zero(evaluator.v, evaluator.N)
        one = ResidueElem.one(evaluator.v, evaluator.N)
    else:
        raise InvalidEvaluator(f"unknown evaluator {evaluator!r}")

    for coeff, factors in rel.terms:
        prod = one
        for factor in factors:
            prod = prod * _factor_value(factor, evaluator, spec)
        acc = acc + prod.scale_int(coeff)

    if isinstance(evaluator, TruncatedExact):
        value = acc.to_ratfn()
        return value, Verdict("Zero" if value.is_zero() else "NonZero")
    if isinstance(evaluator, Finite):
        return acc, Verdict("Zero" if acc.is_zero() else "NonZero")
    if acc.is_zero():
        return acc, Verdict("ValuationAtLeast", evaluator.N)
    val = acc.valuation()
    n = val.n if isinstance(val, AtLeast) else val
    if n >= evaluator.N:
        return acc, Verdict("ValuationAtLeast", evaluator.N)
    return acc, Verdict("NonZero")
