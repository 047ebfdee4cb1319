"""Dense polynomials over F_q in the variable t.

Coefficients are stored component-wise: a polynomial of degree n-1 is an
(f, n) int64 array whose column i holds the F_p coordinates of the t^i
coefficient.  Multiplication runs f^2 numpy convolutions followed by a
reduction of the generator powers, which keeps degree-thousands arithmetic
fast enough for exact zeta computations.

The zero polynomial has an empty coefficient array and degree() == -1
(the distinguished "minus infinity" stand-in).
"""

from __future__ import annotations

import re

import numpy as np

from .errors import DivisionByZero, ParseError
from .fields import FieldSpec

_irred_cache: dict[tuple, bool] = {}


class Poly:
    __slots__ = ("spec", "c")

    def __init__(self, spec: FieldSpec, comps: np.ndarray):
        # comps must already be reduced mod p; trailing zero columns stripped here
        n = comps.shape[1]
        while n > 0 and not comps[:, n - 1].any():
            n -= 1
        self.spec = spec
        self.c = np.ascontiguousarray(comps[:, :n])

    # -- constructors ---------------------------------------------------------

    @classmethod
    def zero(cls, spec: FieldSpec) -> "Poly":
        return cls(spec, np.zeros((spec.f, 0), dtype=np.int64))

    @classmethod
    def const(cls, spec: FieldSpec, a: int) -> "Poly":
        arr = np.array([spec.coords(a)], dtype=np.int64).T
        return cls(spec, arr)

    @classmethod
    def one(cls, spec: FieldSpec) -> "Poly":
        return cls.const(spec, 1)

    @classmethod
    def t(cls, spec: FieldSpec) -> "Poly":
        return cls.from_indices(spec, [0, 1])

    @classmethod
    def from_indices(cls, spec: FieldSpec, coeffs) -> "Poly":
        """Build from a list of F_q element indices, ascending powers of t."""
        arr = np.zeros((spec.f, len(coeffs)), dtype=np.int64)
        for i, a in enumerate(coeffs):
            arr[:, i] = spec.coords(a)
        return cls(spec, arr)

    # -- basic queries ---------------------------------------------------------

    def degree(self) -> int:
        """Degree, with -1 standing in for deg(0) = -infinity."""
        return self.c.shape[1] - 1

    def is_zero(self) -> bool:
        return self.c.shape[1] == 0

    def coeff_index(self, i: int) -> int:
        if i < 0 or i >= self.c.shape[1]:
            return 0
        return self.spec.from_coords(self.c[:, i])

    def coeff_indices(self) -> list[int]:
        return [self.coeff_index(i) for i in range(self.c.shape[1])]

    def lead_index(self) -> int:
        return self.coeff_index(self.degree())

    def is_monic(self) -> bool:
        return not self.is_zero() and self.lead_index() == 1

    def constant_index(self) -> int:
        return self.coeff_index(0)

    # -- equality / hashing -----------------------------------------------------

    def __eq__(self, other):
        if not isinstance(other, Poly):
            return NotImplemented
        return (self.spec == other.spec and self.c.shape == other.c.shape
                and bool((self.c == other.c).all()))

    def __hash__(self):
        return hash((self.spec, self.c.shape[1], self.c.tobytes()))

    def __repr__(self):
        return f"Poly({poly_str(self)!r})"

    def __str__(self):
        return poly_str(self)

    # -- arithmetic --------------------------------------------------------------

    def __add__(self, other: "Poly") -> "Poly":
        n = max(self.c.shape[1], other.c.shape[1])
        out = np.zeros((self.spec.f, n), dtype=np.int64)
        out[:, : self.c.shape[1]] = self.c
        out[:, : other.c.shape[1]] += other.c
        return Poly(self.spec, out % self.spec.p)

    def __neg__(self) -> "Poly":
        return Poly(self.spec, (-self.c) % self.spec.p)

    def __sub__(self, other: "Poly") -> "Poly":
        n = max(self.c.shape[1], other.c.shape[1])
        out = np.zeros((self.spec.f, n), dtype=np.int64)
        out[:, : self.c.shape[1]] = self.c
        out[:, : other.c.shape[1]] -= other.c
        return Poly(self.spec, out % self.spec.p)

    def __mul__(self, other: "Poly") -> "Poly":
        spec = self.spec
        if self.is_zero() or other.is_zero():
            return Poly.zero(spec)
        f, p = spec.f, spec.p
        n = self.c.shape[1] + other.c.shape[1] - 1
        full = np.zeros((2 * f - 1, n), dtype=np.int64)
        for i in range(f):
            if not self.c[i].any():
                continue
            for j in range(f):
                if not other.c[j].any():
                    continue
                full[i + j] += np.convolve(self.c[i], other.c[j])
        full %= p
        if f == 1:
            return Poly(spec, full)
        out = full[:f].copy()
        for j in range(f, 2 * f - 1):
            row = full[j]
            if not row.any():
                continue
            red = spec.x_power_coords(j)
            for k in range(f):
                if red[k]:
                    out[k] += red[k] * row
        return Poly(spec, out % p)

    def scale(self, a: int) -> "Poly":
        """Multiply by the F_q element with index a."""
        spec = self.spec
        if a == 0 or self.is_zero():
            return Poly.zero(spec)
        if a == 1:
            return self
        return Poly(spec, (_scalar_matrix(spec, a) @ self.c) % spec.p)

    def shift(self, k: int) -> "Poly":
        """Multiply by t^k."""
        if self.is_zero() or k == 0:
            return self
        out = np.zeros((self.spec.f, self.c.shape[1] + k), dtype=np.int64)
        out[:, k:] = self.c
        return Poly(self.spec, out)

    def __divmod__(self, other: "Poly") -> tuple["Poly", "Poly"]:
        spec = self.spec
        if other.is_zero():
            raise DivisionByZero("polynomial division by zero")
        m = other.degree()
        if self.degree() < m:
            return Poly.zero(spec), self
        p = spec.p
        inv_lead = spec.inv(other.lead_index())
        r = self.c.copy()
        qcomp = np.zeros((spec.f, self.degree() - m + 1), dtype=np.int64)
        pw = np.array([p ** i for i in range(spec.f)], dtype=np.int64)
        for i in range(self.degree(), m - 1, -1):
            idx = int(r[:, i] @ pw)
            if idx == 0:
                continue
            factor = spec.mul(idx, inv_lead)
            qcomp[:, i - m] = spec.coords(factor)
            r[:, i - m: i + 1] = (r[:, i - m: i + 1]
                                  - _scalar_matrix(spec, factor) @ other.c) % p
        return Poly(spec, qcomp), Poly(spec, r[:, :m] if m > 0 else r[:, :0])

    def __floordiv__(self, other):
        return divmod(self, other)[0]

    def __mod__(self, other):
        return divmod(self, other)[1]

    def exact_div(self, other: "Poly") -> "Poly":
        q, r = divmod(self, other)
        if not r.is_zero():
            raise ValueError("exact division has nonzero remainder")
        return q

    def __pow__(self, e: int) -> "Poly":
        if e < 0:
            raise ValueError("negative power of a polynomial")
        out = Poly.one(self.spec)
        base = self
        while e:
            if e & 1:
                out = out * base
            base = base * base
            e >>= 1
        return out

    def monic(self) -> "Poly":
        if self.is_zero():
            return self
        lead = self.lead_index()
        return self if lead == 1 else self.scale(self.spec.inv(lead))

    def derivative(self) -> "Poly":
        n = self.c.shape[1]
        if n <= 1:
            return Poly.zero(self.spec)
        out = self.c[:, 1:] * np.arange(1, n, dtype=np.int64)
        return Poly(self.spec, out % self.spec.p)


def _scalar_matrix(spec: FieldSpec, a: int) -> np.ndarray:
    cache = getattr(spec, "_scal_mats", None)
    if cache is None:
        cache = {}
        spec._scal_mats = cache
    m = cache.get(a)
    if m is None:
        f = spec.f
        m = np.zeros((f, f), dtype=np.int64)
        for i in range(f):
            basis = spec.from_coords([1 if k == i else 0 for k in range(f)])
            m[:, i] = spec.coords(spec.mul(a, basis))
        cache[a] = m
    return m


def poly_gcd(a: Poly, b: Poly) -> Poly:
    """Monic gcd via the Euclidean algorithm."""
    while not b.is_zero():
        a, b = b, a % b
    return a.monic()


def poly_ext_gcd(a: Poly, b: Poly) -> tuple[Poly, Poly, Poly]:
    """Return (g, u, w) with u*a + w*b = g monic."""
    spec = a.spec
    r0, r1 = a, b
    u0, u1 = Poly.one(spec), Poly.zero(spec)
    w0, w1 = Poly.zero(spec), Poly.one(spec)
    while not r1.is_zero():
        q, r = divmod(r0, r1)
        r0, r1 = r1, r
        u0, u1 = u1, u0 - q * u1
        w0, w1 = w1, w0 - q * w1
    if r0.is_zero():
        return r0, u0, w0
    lead_inv = spec.inv(r0.lead_index())
    return r0.scale(lead_inv), u0.scale(lead_inv), w0.scale(lead_inv)


# -- enumeration and irreducibility --------------------------------------------


def monic_polys(spec: FieldSpec, d: int):
    """All monic polynomials of degree d, lexicographic on coefficient vectors."""
    if d == 0:
        yield Poly.one(spec)
        return
    q = spec.q
    for idx in range(q ** d):
        coeffs = []
        m = idx
        for _ in range(d):
            coeffs.append(m % q)
            m //= q
        coeffs.append(1)
        yield Poly.from_indices(spec, coeffs)


def is_irreducible(v: Poly) -> bool:
    """Irreducibility by trial division against monic divisors of degree <= deg/2.

    Results are cached; the cache is idempotent (pure recomputation).
    """
    key = (v.spec, v.c.shape[1], v.c.tobytes())
    hit = _irred_cache.get(key)
    if hit is not None:
        return hit
    d = v.degree()
    if d < 1:
        res = False
    else:
        res = True
        for e in range(1, d // 2 + 1):
            for w in monic_polys(v.spec, e):
                if (v % w).is_zero():
                    res = False
                    break
            if not res:
                break
    _irred_cache[key] = res
    return res


def irreducible_polys(spec: FieldSpec, degree: int):
    """Monic irreducible polynomials of the given exact degree."""
    for v in monic_polys(spec, degree):
        if is_irreducible(v):
            yield v


# -- parsing / printing ----------------------------------------------------------

_TERM_RE = re.compile(
    r"^\s*(?:\(([^()]*)\)|(\d+)|a(?:\^(\d+))?|(\d+)\*a(?:\^(\d+))?)?"
    r"\s*\*?\s*(t(?:\^(\d+))?)?\s*$"
)


def _parse_fq_scalar(text: str, spec: FieldSpec) -> int:
    """Parse an F_q scalar like "2", "a", "a^2", "2*a", or "a+1"."""
    total = 0
    for raw in text.replace("-", "+-").split("+"):
        term = raw.strip()
        if not term:
            continue
        neg = term.startswith("-")
        if neg:
            term = term[1:].strip()
        m = re.match(r"^(?:(\d+)\*?)?(?:a(?:\^(\d+))?)?$", term)
        if not m or (m.group(1) is None and "a" not in term):
            if not term.isdigit():
                raise ParseError(f"bad scalar term {raw!r}")
        coef = int(m.group(1)) if m.group(1) else 1
        if "a" in term:
            e = int(m.group(2)) if m.group(2) else 1
            if e >= spec.f and spec.f > 1:
                raise ParseError(f"generator power a^{e} exceeds basis degree")
            if spec.f == 1:
                raise ParseError("generator 'a' used in a prime field")
            val = spec.from_coords([coef % spec.p if k == e else 0
                                    for k in range(spec.f)])
        else:
            val = spec.from_int(coef)
        if neg:
            val = spec.neg(val)
        total = spec.add(total, val)
    return total


def parse_poly(text: str, spec: FieldSpec) -> Poly:
    """Parse a polynomial literal such as "t^3+a*t+1" over F_q."""
    text = text.strip()
    if not text:
        raise ParseError("empty polynomial literal")
    coeffs: dict[int, int] = {}
    # split on + and - at depth zero of parentheses
    terms: list[str] = []
    depth, cur = 0, ""
    for ch in text:
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
        if ch in "+-" and depth == 0 and cur.strip():
            terms.append(cur)
            cur = ch if ch == "-" else ""
        else:
            cur += ch
    if cur.strip():
        terms.append(cur)
    for term in terms:
        term = term.strip()
        neg = term.startswith("-")
        if neg:
            term = term[1:].strip()
        if "t" in term:
            left, _, right = term.partition("t")
            left = left.strip().rstrip("*").strip()
            exp = 1
            right = right.strip()
            if right.startswith("^"):
                exp = int(right[1:])
            elif right:
                raise ParseError(f"bad polynomial term {term!r}")
        else:
            left, exp = term, 0
        left = left.strip()
        if left.startswith("(") and left.endswith(")"):
            left = left[1:-1]
        scalar = _parse_fq_scalar(left, spec) if left else 1
        if neg:
            scalar = spec.neg(scalar)
        coeffs[exp] = spec.add(coeffs.get(exp, 0), scalar)
    deg = max(coeffs) if coeffs else 0
    return Poly.from_indices(spec, [coeffs.get(i, 0) for i in range(deg + 1)])


def _scalar_str(a: int, spec: FieldSpec) -> str:
    coords = spec.coords(a)
    parts = []
    for e in range(spec.f - 1, -1, -1):
        c = coords[e]
        if not c:
            continue
        if e == 0:
            parts.append(str(c))
        else:
            gen = "a" if e == 1 else f"a^{e}"
            parts.append(gen if c == 1 else f"{c}*{gen}")
    return "+".join(parts) if parts else "0"


def poly_str(x: Poly) -> str:
    if x.is_zero():
        return "0"
    spec = x.spec
    parts = []
    for e in range(x.degree(), -1, -1):
        a = x.coeff_index(e)
        if a == 0:
            continue
        s = _scalar_str(a, spec)
        if e == 0:
            parts.append(s)
            continue
        base = "t" if e == 1 else f"t^{e}"
        if s == "1":
            parts.append(base)
        elif "+" in s:
            parts.append(f"({s})*{base}")
        else:
            parts.append(f"{s}*{base}")
    return "+".join(parts)
