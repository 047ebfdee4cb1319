"""Table-driven arithmetic for the finite field F_q with q = p^f.

Field elements are represented as plain integers in [0, q): the element with
coordinate vector (c_0, ..., c_{f-1}) on the power basis of the generator is
encoded as sum(c_i * p^i).  FieldSpec owns the modulus and the operation
tables; all element-level functions take the index representation.
"""

from __future__ import annotations

import re

from .errors import DivisionByZero, InvalidFieldSpec, ParseError


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    d = 2
    while d * d <= n:
        if n % d == 0:
            return False
        d += 1
    return True


def _split_prime_power(q: int) -> tuple[int, int]:
    """Return (p, f) with q = p^f, p prime."""
    for p in range(2, q + 1):
        if not is_prime(p):
            continue
        f = 0
        m = q
        while m % p == 0:
            m //= p
            f += 1
        if m == 1 and f >= 1:
            return p, f
    raise InvalidFieldSpec(f"{q} is not a prime power")


# -- F_p[x] helpers on ascending int lists (used only for the field modulus) --

def _fp_trim(a):
    while a and a[-1] == 0:
        a.pop()
    return a


def _fp_mul(a, b, p):
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                out[i + j] = (out[i + j] + ai * bj) % p
    return _fp_trim(out)


def _fp_mod(a, b, p):
    a = list(a)
    inv_lead = pow(b[-1], p - 2, p)
    while len(a) >= len(b):
        c = a[-1] % p
        if c:
            shift = len(a) - len(b)
            factor = (c * inv_lead) % p
            for i, bi in enumerate(b):
                a[shift + i] = (a[shift + i] - factor * bi) % p
        a.pop()
        _fp_trim(a)
        if not a:
            break
    return a


def _fp_irreducible(mod, p) -> bool:
    """Trial division by all monic polynomials of degree <= deg(mod)/2."""
    deg = len(mod) - 1
    if deg < 1:
        return False
    for d in range(1, deg // 2 + 1):
        for idx in range(p ** d):
            div = []
            m = idx
            for _ in range(d):
                div.append(m % p)
                m //= p
            div.append(1)
            if not _fp_mod(mod, div, p):
                return False
    return True


def _default_modulus(p: int, f: int) -> tuple[int, ...]:
    """Lexicographically smallest monic irreducible of degree f over F_p."""
    for idx in range(p ** f):
        cand = []
        m = idx
        for _ in range(f):
            cand.append(m % p)
            m //= p
        cand.append(1)
        if _fp_irreducible(cand, p):
            return tuple(cand)
    raise InvalidFieldSpec(f"no irreducible modulus of degree {f} over F_{p}")


_MOD_TERM = re.compile(r"^(?:(\d+)\*?)?(?:x(?:\^(\d+))?)?$")


def _parse_modulus(text: str, p: int) -> tuple[int, ...]:
    coeffs: dict[int, int] = {}
    for raw in text.replace("-", "+-").split("+"):
        term = raw.strip()
        if not term:
            continue
        neg = term.startswith("-")
        if neg:
            term = term[1:].strip()
        m = _MOD_TERM.match(term)
        if not m or (m.group(1) is None and "x" not in term):
            if not term.isdigit():
                raise ParseError(f"bad modulus term {raw!r}")
        coef = int(m.group(1)) if m.group(1) else (int(term) if term.isdigit() else 1)
        if "x" in term:
            exp = int(m.group(2)) if m.group(2) else 1
        else:
            exp = 0
        if neg:
            coef = -coef
        coeffs[exp] = (coeffs.get(exp, 0) + coef) % p
    deg = max(coeffs) if coeffs else 0
    return tuple(coeffs.get(i, 0) for i in range(deg + 1))


class FieldSpec:
    """Description of F_q on a fixed polynomial basis over F_p.

    Construction checks that p is prime and that the modulus is a monic
    irreducible of degree f over F_p (ignored when f == 1).
    """

    def __init__(self, p: int, f: int = 1, modulus: tuple[int, ...] | None = None):
        if not is_prime(p):
            raise InvalidFieldSpec(f"characteristic {p} is not prime")
        if f < 1:
            raise InvalidFieldSpec("extension degree must be >= 1")
        if f == 1:
            modulus = (0, 1)  # placeholder, never used
        else:
            if modulus is None:
                modulus = _default_modulus(p, f)
            modulus = tuple(c % p for c in modulus)
            if len(modulus) != f + 1 or modulus[-1] != 1:
                raise InvalidFieldSpec("modulus must be monic of degree f")
            if not _fp_irreducible(list(modulus), p):
                raise InvalidFieldSpec("modulus is not irreducible over F_p")
        self.p = p
        self.f = f
        self.q = p ** f
        self.modulus = modulus
        self._mul_table: list[list[int]] | None = None
        self._inv_table: list[int] | None = None
        self._xpow: list[tuple[int, ...]] | None = None

    # -- identity / hashing -------------------------------------------------

    def __eq__(self, other):
        return (isinstance(other, FieldSpec)
                and (self.p, self.f, self.modulus) == (other.p, other.f, other.modulus))

    def __hash__(self):
        return hash((self.p, self.f, self.modulus))

    def __repr__(self):
        return f"FieldSpec(q={self.q})" if self.f == 1 else \
            f"FieldSpec(q={self.q}, modulus={self.modulus_string()})"

    # -- parsing / printing --------------------------------------------------

    @classmethod
    def parse(cls, text: str) -> "FieldSpec":
        """Parse a field-spec string such as "q=9;modulus=x^2+1" or "q=3"."""
        q = None
        modulus_text = None
        for part in text.split(";"):
            part = part.strip()
            if not part:
                continue
            if "=" not in part:
                raise ParseError(f"bad field spec fragment {part!r}")
            key, _, val = part.partition("=")
            key = key.strip()
            if key == "q":
                q = int(val)
            elif key == "modulus":
                modulus_text = val.strip()
            else:
                raise ParseError(f"unknown field spec key {key!r}")
        if q is None:
            raise ParseError("field spec must set q")
        p, f = _split_prime_power(q)
        modulus = _parse_modulus(modulus_text, p) if (modulus_text and f > 1) else None
        return cls(p, f, modulus)

    def modulus_string(self) -> str:
        terms = []
        for e in range(self.f, -1, -1):
            c = self.modulus[e]
            if not c:
                continue
            if e == 0:
                terms.append(str(c))
            else:
                base = "x" if e == 1 else f"x^{e}"
                terms.append(base if c == 1 else f"{c}*{base}")
        return "+".join(terms) if terms else "0"

    def spec_string(self) -> str:
        if self.f == 1:
            return f"q={self.q}"
        return f"q={self.q};modulus={self.modulus_string()}"

    # -- coordinates ---------------------------------------------------------

    def coords(self, a: int) -> tuple[int, ...]:
        out = []
        for _ in range(self.f):
            out.append(a % self.p)
            a //= self.p
        return tuple(out)

    def from_coords(self, coords) -> int:
        a = 0
        for c in reversed(list(coords)):
            a = a * self.p + (int(c) % self.p)
        return a

    def from_int(self, n: int) -> int:
        """Embed an integer via F_p."""
        return n % self.p

    def elements(self):
        return range(self.q)

    # -- arithmetic ----------------------------------------------------------

    def add(self, a: int, b: int) -> int:
        p, f = self.p, self.f
        out, w = 0, 1
        for _ in range(f):
            out += ((a + b) % p) * w
            a //= p
            b //= p
            w *= p
        return out

    def neg(self, a: int) -> int:
        p = self.p
        out, w = 0, 1
        for _ in range(self.f):
            out += (-a % p) * w
            a //= p
            w *= p
        return out

    def sub(self, a: int, b: int) -> int:
        return self.add(a, self.neg(b))

    def _build_tables(self):
        p, f, q = self.p, self.f, self.q
        mul = [[0] * q for _ in range(q)]
        for a in range(q):
            ca = self.coords(a)
            for b in range(a, q):
                cb = self.coords(b)
                prod = _fp_mul(list(ca), list(cb), p)
                if f > 1:
                    prod = _fp_mod(prod, list(self.modulus), p)
                v = self.from_coords(prod + [0] * f)
                mul[a][b] = v
                mul[b][a] = v
        inv = [0] * q
        for a in range(1, q):
            for b in range(1, q):
                if mul[a][b] == 1:
                    inv[a] = b
                    break
        self._mul_table = mul
        self._inv_table = inv

    def mul(self, a: int, b: int) -> int:
        if self._mul_table is None:
            self._build_tables()
        return self._mul_table[a][b]

    def inv(self, a: int) -> int:
        if a == 0:
            raise DivisionByZero("inverse of zero field element")
        if self._inv_table is None:
            self._build_tables()
        return self._inv_table[a]

    def pow(self, a: int, e: int) -> int:
        if e < 0:
            a, e = self.inv(a), -e
        out = 1
        while e:
            if e & 1:
                out = self.mul(out, a)
            a = self.mul(a, a)
            e >>= 1
        return out

    def x_power_coords(self, j: int) -> tuple[int, ...]:
        """Coordinates of x^j reduced mod the modulus, for 0 <= j <= 2f-2."""
        if self._xpow is None:
            xp = []
            cur = [1]
            for _ in range(2 * self.f - 1):
                xp.append(tuple(cur + [0] * (self.f - len(cur))))
                cur = [0] + cur
                if self.f > 1:
                    cur = _fp_mod(cur, list(self.modulus), self.p) or [0]
                else:
                    cur = _fp_mod(cur, [0, 1], self.p) or [0]
            self._xpow = xp
        return self._xpow[j]


def fq_inv(a: int, spec: FieldSpec) -> int:
    """Multiplicative inverse in F_q.  Raises DivisionByZero on zero input."""
    return spec.inv(a)
