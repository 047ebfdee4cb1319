"""Zeta values built from power sums: truncated (exact in F_q(t)), finite
(in F_v), and v-adic (in A/(v^N) with stabilization tracking).

All flavors are nested sums of products of power sums over decreasing index
chains; a single dynamic program over the top index serves every carrier.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import ParseError
from .fields import FieldSpec
from .lfrac import LFrac
from .poly import Poly
from .power_sums import _exact_frac, _residue_sum
from .ratfn import RationalFn
from .residue import AtLeast, ResidueElem


@dataclass(frozen=True)
class Composition:
    """Integer exponent tuple (s_1, ..., s_r)."""
    entries: tuple[int, ...]

    def __post_init__(self):
        if not self.entries:
            raise ValueError("composition must be nonempty")
        object.__setattr__(self, "entries", tuple(int(e) for e in self.entries))

    @property
    def depth(self) -> int:
        return len(self.entries)

    @property
    def weight(self) -> int | None:
        """Sum of entries, defined only when all entries are positive."""
        if all(e > 0 for e in self.entries):
            return sum(self.entries)
        return None

    def __str__(self) -> str:
        return "(" + ",".join(str(e) for e in self.entries) + ")"


def parse_composition(text: str) -> Composition:
    s = text.strip()
    if s.startswith("(") and s.endswith(")"):
        s = s[1:-1]
    parts = [p.strip() for p in s.split(",") if p.strip()]
    if not parts:
        raise ParseError(f"empty composition literal: {text!r}")
    try:
        return Composition(tuple(int(p) for p in parts))
    except ValueError as exc:
        raise ParseError(f"bad composition literal: {text!r}") from exc


@dataclass(frozen=True)
class TruncationConfig:
    D: int
    N: int = 1
    star: bool = False

    def __post_init__(self):
        if self.D < 1:
            raise ValueError("D must be >= 1")
        if self.N < 1:
            raise ValueError("N must be >= 1")


@dataclass(frozen=True)
class StabilizationReport:
    value: ResidueElem
    stable_from: int
    stabilized: bool
    D: int


def _top_terms(entries, D, star, zero, sd):
    """T[d] = sum over chains with top index exactly d of the product of
    power sums; built depth-by-depth with prefix sums of the inner tail."""
    tail = [sd(d, entries[-1]) for d in range(D)]
    for j in range(len(entries) - 2, -1, -1):
        prefix = []
        acc = zero
        for d in range(D):
            if star:
                acc = acc + tail[d]
                prefix.append(acc)
            else:
                prefix.append(acc)
                acc = acc + tail[d]
        tail = [sd(d, entries[j]) * prefix[d] for d in range(D)]
    return tail


_trunc_cache: dict[tuple, LFrac] = {}


def _truncated_frac(D: int, s: Composition, star: bool, spec: FieldSpec) -> LFrac:
    key = (spec, D, s.entries, star)
    hit = _trunc_cache.get(key)
    if hit is not None:
        return hit
    terms = _top_terms(s.entries, D, star, LFrac.zero(spec),
                       lambda d, k: _exact_frac(spec, d, k))
    out = LFrac.zero(spec)
    for t in terms:
        out = out + t
    _trunc_cache[key] = out
    return out


def truncated_mzv(D: int, s: Composition, star: bool, spec: FieldSpec) -> RationalFn:
    """Exact sum over chains D > d_1 > ... > d_r >= 0 of prod S_{d_i}(s_i)
    (weak inequalities when star)."""
    if D < 1:
        raise ValueError("D must be >= 1")
    return _truncated_frac(D, s, star, spec).to_ratfn()


def finite_mzv(v: Poly, s: Composition, star: bool, spec: FieldSpec) -> ResidueElem:
    """Sum over chains with d_1 < deg v, reduced mod v; element of F_v."""
    D = v.degree()
    zero = ResidueElem.zero(v, 1)
    terms = _top_terms(s.entries, D, star, zero,
                       lambda d, k: _residue_sum(spec, d, k, v, 1, False))
    out = zero
    for t in terms:
        out = out + t
    return out


def vadic_mzv(v: Poly, s: Composition, cfg: TruncationConfig,
              spec: FieldSpec) -> StabilizationReport:
    """Partial v-adic sum through top degree cfg.D - 1 at precision cfg.N,
    over coprime power sums, with stabilization metadata."""
    D, N, star = cfg.D, cfg.N, cfg.star
    zero = ResidueElem.zero(v, N)
    top = _top_terms(s.entries, D, star, zero,
                     lambda d, k: _residue_sum(spec, d, k, v, N, True))
    value = zero
    for t in top:
        value = value + t
    stable_from = D
    while stable_from > 1 and top[stable_from - 1].is_zero():
        stable_from -= 1
    stabilized = stable_from <= D - 1
    if stabilized:
        for d in (D - 2, D - 1):
            if d < 0:
                continue
            for k in s.entries:
                val = _residue_sum(spec, d, k, v, N, True).valuation()
                bound = val.n if isinstance(val, AtLeast) else val
                if bound < N:
                    stabilized = False
    return StabilizationReport(value=value, stable_from=stable_from,
                               stabilized=stabilized, D=D)


def vadic_mzv_auto(v: Poly, s: Composition, N: int, star: bool,
                   spec: FieldSpec, d_cap: int = 40) -> StabilizationReport:
    """vadic_mzv with D extended until stabilization or the cap.

    Coprime power sums of degree d > N*deg(v) vanish mod v^N, so the partial
    sums always freeze shortly past that bound; the cap is a safety net.
    """
    D = min(max(N * v.degree() + 3, len(s.entries) + 1), d_cap)
    while True:
        report = vadic_mzv(v, s, TruncationConfig(D=D, N=N, star=star), spec)
        if report.stabilized or D >= d_cap:
            return report
        D = min(D + 2, d_cap)
