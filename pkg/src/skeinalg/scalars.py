"""Exact arithmetic over rational functions in the two variables v and s.

LaurentPoly is a sparse Laurent polynomial with exact rational coefficients.
RationalFunction is a reduced fraction of two Laurent polynomials kept in a
canonical form (denominator shifted to minimal exponents zero, its
lexicographically-first coefficient scaled to one), so equal values always
have identical representations and equality is a cheap structural check.

Coefficients are ints or fractions.Fraction; float never enters.
"""

from __future__ import annotations

import re
from fractions import Fraction

Monomial = tuple[int, int]  # (exponent of v, exponent of s)


def _cdiv(a, b):
    """Exact coefficient division, never float."""
    if b == 1:
        return a
    return Fraction(a) / b


class LaurentPoly:
    """Sparse Laurent polynomial in v and s.

    ``terms`` maps (v_exponent, s_exponent) to a nonzero rational
    coefficient.  Iteration order for rendering is lexicographic on the
    exponent pair.
    """

    __slots__ = ("terms",)

    def __init__(self, terms: dict[Monomial, Fraction | int] | None = None):
        self.terms = {m: c for m, c in (terms or {}).items() if c}

    @classmethod
    def _raw(cls, terms: dict) -> "LaurentPoly":
        # trusted constructor: terms must already be zero-free
        poly = object.__new__(cls)
        poly.terms = terms
        return poly

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __eq__(self, other) -> bool:
        return isinstance(other, LaurentPoly) and self.terms == other.terms

    __hash__ = None

    def __neg__(self) -> "LaurentPoly":
        return LaurentPoly._raw({m: -c for m, c in self.terms.items()})

    def __add__(self, other: "LaurentPoly") -> "LaurentPoly":
        a, b = self.terms, other.terms
        if not a:
            return other
        if not b:
            return self
        if len(a) < len(b):
            a, b = b, a
        out = dict(a)
        for m, c in b.items():
            r = out.get(m)
            if r is None:
                out[m] = c
            else:
                r = r + c
                if r:
                    out[m] = r
                else:
                    del out[m]
        return LaurentPoly._raw(out)

    def __sub__(self, other: "LaurentPoly") -> "LaurentPoly":
        return self + (-other)

    def __mul__(self, other: "LaurentPoly") -> "LaurentPoly":
        a, b = self.terms, other.terms
        if not a or not b:
            return _P_ZERO
        if len(b) == 1:
            [((mv, ms), mc)] = b.items()
            if mv == 0 and ms == 0:
                if mc == 1:
                    return self
                return LaurentPoly._raw({m: c * mc for m, c in a.items()})
            return LaurentPoly._raw(
                {(m[0] + mv, m[1] + ms): c * mc for m, c in a.items()}
            )
        if len(a) == 1:
            return other * self
        out: dict[Monomial, Fraction | int] = {}
        for (av, as_), ac in a.items():
            for (bv, bs), bc in b.items():
                m = (av + bv, as_ + bs)
                c = ac * bc
                r = out.get(m)
                if r is None:
                    out[m] = c
                else:
                    r = r + c
                    if r:
                        out[m] = r
                    else:
                        del out[m]
        return LaurentPoly._raw(out)

    def scaled(self, c) -> "LaurentPoly":
        if not c:
            return _P_ZERO
        if c == 1:
            return self
        return LaurentPoly._raw({m: k * c for m, k in self.terms.items()})

    def min_exps(self) -> Monomial:
        terms = self.terms
        return (min(dv for dv, _ in terms), min(ds for _, ds in terms))

    def shifted(self, dv: int, ds: int) -> "LaurentPoly":
        if dv == 0 and ds == 0:
            return self
        return LaurentPoly._raw(
            {(mv + dv, ms + ds): c for (mv, ms), c in self.terms.items()}
        )

    def sorted_terms(self):
        return sorted(self.terms.items())

    def __repr__(self) -> str:
        return f"LaurentPoly({render_poly(self)!r})"


_P_ZERO = LaurentPoly._raw({})
_P_ONE = LaurentPoly._raw({(0, 0): 1})


def _is_poly_one(p: LaurentPoly) -> bool:
    return p.terms == {(0, 0): 1}


# ---------------------------------------------------------------------------
# polynomial gcd machinery (term dicts with min exponents >= 0)
#
# Bivariate gcd via content/primitive-part recursion: view the polynomial in
# v with coefficients in Q[s] and run a primitive pseudo-remainder sequence.
# Univariate s-polynomials below are dicts {s_exponent: coefficient}.
# ---------------------------------------------------------------------------


def _s_norm(p: dict) -> dict:
    return {e: c for e, c in p.items() if c}


def _s_mul(a: dict, b: dict) -> dict:
    out: dict = {}
    for ea, ca in a.items():
        for eb, cb in b.items():
            e = ea + eb
            r = out.get(e)
            if r is None:
                out[e] = ca * cb
            else:
                r = r + ca * cb
                if r:
                    out[e] = r
                else:
                    del out[e]
    return out

def _s_sub(a: dict, b: dict) -> dict:
    out = dict(a)
    for e, c in b.items():
        r = out.get(e)
        if r is None:
            out[e] = -c
        else:
            r = r - c
            if r:
                out[e] = r
            else:
                del out[e]
    return out


def _s_divmod(a: dict, b: dict) -> tuple[dict, dict]:
    db = max(b)
    lb = b[db]
    rem = dict(a)
    quo: dict = {}
    while rem:
        dr = max(rem)
        if dr < db:
            break
        c = _cdiv(rem[dr], lb)
        quo[dr - db] = c
        for e, k in b.items():
            tgt = e + dr - db
            r = rem.get(tgt, 0) - c * k
            if r:
                rem[tgt] = r
            else:
                rem.pop(tgt, None)
    return quo, rem


def _s_gcd(a: dict, b: dict) -> dict:
    """Monic gcd of univariate polynomials over Q (dict degree -> coeff)."""
    a, b = _s_norm(a), _s_norm(b)
    while b:
        _, r = _s_divmod(a, b)
        a, b = b, r
    if not a:
        return {}
    lead = a[max(a)]
    if lead == 1:
        return a
    return {e: _cdiv(c, lead) for e, c in a.items()}


def _s_divexact(a: dict, b: dict) -> dict:
    quo, rem = _s_divmod(a, b)
    if rem:
        raise ArithmeticError("inexact univariate division")
    return quo


def _to_vs(terms: dict) -> dict[int, dict]:
    out: dict[int, dict] = {}
    for (dv, ds), c in terms.items():
        out.setdefault(dv, {})[ds] = c
    return out


def _from_vs(vs: dict[int, dict]) -> dict:
    return {(dv, ds): c for dv, row in vs.items() for ds, c in row.items()}


def _vs_content(vs: dict[int, dict]) -> dict:
    rows = sorted(vs.values(), key=len)
    g: dict = {}
    for row in rows:
        g = _s_gcd(g, row)
        if g == {0: 1}:
            break
    return g


def _vs_pp(vs: dict[int, dict], content: dict) -> dict[int, dict]:
    if content == {0: 1}:
        return vs
    return {dv: _s_divexact(row, content) for dv, row in vs.items()}


def _v_prem(a: dict[int, dict], b: dict[int, dict]) -> dict[int, dict]:
    """Pseudo-remainder of a by b with respect to v."""
    db = max(b)
    lb = b[db]
    rem = a
    while rem:
        dr = max(rem)
        if dr < db:
            break
        lr = rem[dr]
        new: dict[int, dict] = {}
        for dv, row in rem.items():
            if dv != dr:
                new[dv] = _s_mul(row, lb)
        for dv, row in b.items():
            tgt = dv + dr - db
            if tgt == dr:
                continue
            cur = new.get(tgt, {})
            cur = _s_sub(cur, _s_mul(row, lr))
            if cur:
                new[tgt] = cur
            else:
                new.pop(tgt, None)
        rem = new
    return rem


def _shift_info(terms: dict) -> tuple[Monomial, dict]:
    mv = min(dv for dv, _ in terms)
    ms = min(ds for _, ds in terms)
    if mv == 0 and ms == 0:
        return (0, 0), terms
    return (mv, ms), {(dv - mv, ds - ms): c for (dv, ds), c in terms.items()}


def _unit_normalize(terms: dict) -> dict:
    """Scale and shift so min exponents are 0 and the lex-first coefficient is 1."""
    if not terms:
        return terms
    _, terms = _shift_info(terms)
    lead = terms[min(terms)]
    if lead == 1:
        return terms
    return {m: _cdiv(c, lead) for m, c in terms.items()}


def _poly_gcd_terms(a: dict, b: dict) -> dict:
    """Gcd of two term dicts, canonically normalized; gcd(0, x) = x normalized."""
    if not a:
        return _unit_normalize(b)
    if not b:
        return _unit_normalize(a)
    _, a = _shift_info(a)
    _, b = _shift_info(b)
    va, vb = _to_vs(a), _to_vs(b)
    ca, cb = _vs_content(va), _vs_content(vb)
    pa, pb = _vs_pp(va, ca), _vs_pp(vb, cb)
    cg = _s_gcd(ca, cb)
    if max(pa) < max(pb):
        pa, pb = pb, pa
    while True:
        if not pb:
            gp = pa
            break
        if max(pb) == 0:
            gp = {0: {0: 1}}
            break
        rem = _v_prem(pa, pb)
        if rem:
            pa, pb = pb, _vs_pp(rem, _vs_content(rem))
        else:
            pa, pb = pb, {}
    out = {dv: _s_mul(row, cg) for dv, row in gp.items()}
    return _unit_normalize(_from_vs(out))


def _divexact_terms(a: dict, g: dict) -> dict:
    """Exact division of polynomial term dicts; ArithmeticError if inexact."""
    if not a:
        return {}
    a = dict(a)
    gl = max(g)
    gc = g[gl]
    quo: dict = {}
    while a:
        al = max(a)
        mv, ms = al[0] - gl[0], al[1] - gl[1]
        if mv < 0 or ms < 0:
            raise ArithmeticError("inexact polynomial division")
        c = _cdiv(a[al], gc)
        quo[(mv, ms)] = c
        for (dv, ds), k in g.items():
            key = (dv + mv, ds + ms)
            r = a.get(key, 0) - c * k
            if r:
                a[key] = r
            else:
                a.pop(key, None)
    return quo


def poly_gcd(a: LaurentPoly, b: LaurentPoly) -> LaurentPoly:
    """Gcd of Laurent polynomials, up to units: normalized canonically."""
    return LaurentPoly._raw(_poly_gcd_terms(a.terms, b.terms))


def poly_lcm(a: LaurentPoly, b: LaurentPoly) -> LaurentPoly:
    if not a.terms or not b.terms:
        return _P_ZERO
    _, at = _shift_info(a.terms)
    _, bt = _shift_info(b.terms)
    g = _poly_gcd_terms(at, bt)
    quo = _divexact_terms(bt, g)
    prod = LaurentPoly._raw(at) * LaurentPoly._raw(quo)
    return LaurentPoly._raw(_unit_normalize(prod.terms))


# ---------------------------------------------------------------------------
# rational functions
# ---------------------------------------------------------------------------


def _canonical_pair(num: LaurentPoly, den: LaurentPoly) -> tuple[LaurentPoly, LaurentPoly]:
    dt = den.terms
    if not dt:
        raise ZeroDivisionError("rational function with zero denominator")
    nt = num.terms
    if not nt:
        return _P_ZERO, _P_ONE
    if len(dt) == 1:
        [((dv, ds), c)] = dt.items()
        if dv == 0 and ds == 0 and c == 1:
            return num, _P_ONE
        inv = _cdiv(1, c)
        return (
            LaurentPoly._raw({(mv - dv, ms - ds): k * inv for (mv, ms), k in nt.items()}),
            _P_ONE,
        )
    (nv, ns), nshift = _shift_info(nt)
    (dv, ds), dshift = _shift_info(dt)
    g = _poly_gcd_terms(nshift, dshift)
    if g != {(0, 0): 1}:
        nshift = _divexact_terms(nshift, g)
        dshift = _divexact_terms(dshift, g)
    if len(dshift) == 1:
        return _canonical_pair(
            LaurentPoly._raw(nshift).shifted(nv - dv, ns - ds),
            LaurentPoly._raw(dshift),
        )
    lead = dshift[min(dshift)]
    if lead != 1:
        inv = _cdiv(1, lead)
        nshift = {m: c * inv for m, c in nshift.items()}
        dshift = {m: c * inv for m, c in dshift.items()}
    return LaurentPoly._raw(nshift).shifted(nv - dv, ns - ds), LaurentPoly._raw(dshift)


def _reduce_against(num: LaurentPoly, den_terms: dict) -> tuple[LaurentPoly, dict]:
    """Cancel the common factor of num and a canonical denominator dict.

    The denominator stays canonical (its quotient by a canonical gcd keeps
    minimal exponents zero and lex-first coefficient one).
    """
    (nv, ns), nshift = _shift_info(num.terms)
    g = _poly_gcd_terms(nshift, den_terms)
    if g == {(0, 0): 1}:
        return num, den_terms
    nq = _divexact_terms(nshift, g)
    dq = _divexact_terms(den_terms, g)
    return LaurentPoly._raw(nq).shifted(nv, ns), dq


class RationalFunction:
    """Element of the field of rational functions in v and s, always canonical."""

    __slots__ = ("num", "den")

    def __init__(self, num: LaurentPoly, den: LaurentPoly = _P_ONE):
        self.num, self.den = _canonical_pair(num, den)

    @classmethod
    def _raw(cls, num: LaurentPoly, den: LaurentPoly) -> "RationalFunction":
        x = object.__new__(cls)
        x.num = num
        x.den = den
        return x

    def __bool__(self) -> bool:
        return bool(self.num.terms)

    def __eq__(self, other) -> bool:
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self.num.terms == other.num.terms and self.den.terms == other.den.terms

    __hash__ = None

    def __neg__(self) -> "RationalFunction":
        return RationalFunction._raw(-self.num, self.den)

    def __add__(self, other) -> "RationalFunction":
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        d1, d2 = self.den, other.den
        if d1.terms == d2.terms:
            num = self.num + other.num
            if _is_poly_one(d1):
                return RationalFunction._raw(num, _P_ONE)
            if not num.terms:
                return ZERO
            num, den = _reduce_against(num, d1.terms)
            return RationalFunction._raw(num, LaurentPoly._raw(den))
        if _is_poly_one(d1):
            # a/1 + n2/d2 is already reduced: a common prime would divide n2
            num = self.num * d2 + other.num
            if not num.terms:
                return ZERO
            return RationalFunction._raw(num, d2)
        if _is_poly_one(d2):
            num = self.num + other.num * d1
            if not num.terms:
                return ZERO
            return RationalFunction._raw(num, d1)
        # distinct non-unit denominators: any common factor of the combined
        # fraction divides g = gcd(d1, d2), so one small reduction suffices
        g = _poly_gcd_terms(d1.terms, d2.terms)
        if g == {(0, 0): 1}:
            num = self.num * d2 + other.num * d1
            if not num.terms:
                return ZERO
            return RationalFunction._raw(num, d1 * d2)
        d1q = LaurentPoly._raw(_divexact_terms(d1.terms, g))
        d2q = LaurentPoly._raw(_divexact_terms(d2.terms, g))
        num = self.num * d2q + other.num * d1q
        if not num.terms:
            return ZERO
        den = d1 * d2q
        (nv, ns), nshift = _shift_info(num.terms)
        g2 = _poly_gcd_terms(nshift, g)
        if g2 != {(0, 0): 1}:
            num = LaurentPoly._raw(_divexact_terms(nshift, g2)).shifted(nv, ns)
            den = LaurentPoly._raw(_divexact_terms(den.terms, g2))
        return RationalFunction._raw(num, den)

    __radd__ = __add__

    def __sub__(self, other) -> "RationalFunction":
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other) -> "RationalFunction":
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other) -> "RationalFunction":
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        if not self.num.terms or not other.num.terms:
            return ZERO
        one1, one2 = _is_poly_one(self.den), _is_poly_one(other.den)
        if one1 and one2:
            return RationalFunction._raw(self.num * other.num, _P_ONE)
        # cross-reduce: each numerator is already coprime to its own
        # denominator, so the result needs no further reduction
        if one2:
            n2, d1 = _reduce_against(other.num, self.den.terms)
            return RationalFunction._raw(self.num * n2, LaurentPoly._raw(d1))
        if one1:
            n1, d2 = _reduce_against(self.num, other.den.terms)
            return RationalFunction._raw(n1 * other.num, LaurentPoly._raw(d2))
        n1, d2 = _reduce_against(self.num, other.den.terms)
        n2, d1 = _reduce_against(other.num, self.den.terms)
        return RationalFunction._raw(n1 * n2, LaurentPoly._raw(d1) * LaurentPoly._raw(d2))

    __rmul__ = __mul__

    def __truediv__(self, other) -> "RationalFunction":
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return RationalFunction(self.num * other.den, self.den * other.num)

    def __rtruediv__(self, other) -> "RationalFunction":
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return other / self

    def __pow__(self, k: int) -> "RationalFunction":
        if k < 0:
            return (ONE / self) ** (-k)
        out = ONE
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def __repr__(self) -> str:
        return f"RationalFunction({render_rational(self)!r})"

    def __str__(self) -> str:
        return render_rational(self)


def _coerce(x):
    if isinstance(x, RationalFunction):
        return x
    if isinstance(x, (int, Fraction)):
        if not x:
            return ZERO
        return RationalFunction._raw(LaurentPoly._raw({(0, 0): x}), _P_ONE)
    return NotImplemented


def monomial(coeff, dv: int = 0, ds: int = 0) -> RationalFunction:
    """The scalar coeff * v^dv * s^ds."""
    if not coeff:
        return ZERO
    return RationalFunction._raw(LaurentPoly._raw({(dv, ds): coeff}), _P_ONE)


def from_int(n) -> RationalFunction:
    return monomial(n)


def v_power(k: int) -> RationalFunction:
    return monomial(1, k, 0)


def s_power(k: int) -> RationalFunction:
    return monomial(1, 0, k)


ZERO = RationalFunction._raw(_P_ZERO, _P_ONE)
ONE = RationalFunction._raw(_P_ONE, _P_ONE)
V = v_power(1)
S = s_power(1)


def qint(i: int) -> RationalFunction:
    """The quantum integer (s^i - s^-i)/(s - s^-1), for any integer i."""
    if i == 0:
        return ZERO
    if i < 0:
        return -qint(-i)
    return RationalFunction._raw(
        LaurentPoly._raw({(0, i - 1 - 2 * j): 1 for j in range(i)}), _P_ONE
    )


def delta() -> RationalFunction:
    """Value of a disjoint circle: (v^-1 - v)/(s - s^-1)."""
    return _DELTA


_DELTA = RationalFunction(
    LaurentPoly({(-1, 0): 1, (1, 0): -1}), LaurentPoly({(0, 1): 1, (0, -1): -1})
)


def bar(x: RationalFunction) -> RationalFunction:
    """Image of x under v -> v^-1, s -> s^-1 (a ring involution)."""
    num = LaurentPoly._raw({(-dv, -ds): c for (dv, ds), c in x.num.terms.items()})
    den = LaurentPoly._raw({(-dv, -ds): c for (dv, ds), c in x.den.terms.items()})
    if not num.terms:
        return ZERO
    # the substitution preserves reducedness; only re-normalize units
    (dv, ds), dterms = _shift_info(den.terms)
    lead = dterms[min(dterms)]
    num = num.shifted(-dv, -ds)
    if lead != 1:
        inv = _cdiv(1, lead)
        num = num.scaled(inv)
        dterms = {m: c * inv for m, c in dterms.items()}
    return RationalFunction._raw(num, LaurentPoly._raw(dterms))


# ---------------------------------------------------------------------------
# text rendering and parsing
# ---------------------------------------------------------------------------


def _render_term(m: Monomial, c) -> tuple[bool, str]:
    dv, ds = m
    negative = c < 0
    mag = -c if negative else c
    factors = []
    if mag != 1 or (dv == 0 and ds == 0):
        factors.append(str(mag))
    if dv:
        factors.append("v" if dv == 1 else f"v^{dv}")
    if ds:
        factors.append("s" if ds == 1 else f"s^{ds}")
    return negative, "*".join(factors)


def render_poly(p: LaurentPoly) -> str:
    if not p.terms:
        return "0"
    pieces = []
    for i, (m, c) in enumerate(p.sorted_terms()):
        negative, body = _render_term(m, c)
        if i == 0:
            pieces.append(("-" if negative else "") + body)
        else:
            pieces.append((" - " if negative else " + ") + body)
    return "".join(pieces)


def render_rational(x: RationalFunction) -> str:
    if _is_poly_one(x.den):
        return render_poly(x.num)
    return f"({render_poly(x.num)}) / ({render_poly(x.den)})"


_TERM_RE = re.compile(
    r"^(?P<coeff>\d+(?:/\d+)?)?"
    r"(?:\*?(?P<v>v(?:\^(?P<ve>-?\d+))?))?"
    r"(?:\*?(?P<s>s(?:\^(?P<se>-?\d+))?))?$"
)


def _split_terms(text: str):
    text = text.replace(" ", "")
    if not text:
        raise ValueError("empty polynomial text")
    chunks = []
    start = 0
    for i, ch in enumerate(text):
        if i > 0 and ch in "+-" and text[i - 1] not in "^+-*/":
            chunks.append(text[start:i])
            start = i
    chunks.append(text[start:])
    return chunks


def parse_poly(text: str) -> LaurentPoly:
    """Parse the rendering grammar, e.g. ``-3*v^-2*s^4 + s``."""
    terms: dict[Monomial, Fraction | int] = {}
    for chunk in _split_terms(text):
        sign = 1
        if chunk and chunk[0] in "+-":
            sign = -1 if chunk[0] == "-" else 1
            chunk = chunk[1:]
        if chunk == "0":
            continue
        m = _TERM_RE.match(chunk)
        if not m or not chunk:
            raise ValueError(f"malformed polynomial term: {chunk!r}")
        if not (m.group("coeff") or m.group("v") or m.group("s")):
            raise ValueError(f"malformed polynomial term: {chunk!r}")
        coeff: Fraction | int
        if m.group("coeff"):
            raw = m.group("coeff")
            coeff = Fraction(raw) if "/" in raw else int(raw)
        else:
            coeff = 1
        dv = 0
        if m.group("v"):
            dv = int(m.group("ve")) if m.group("ve") else 1
        ds = 0
        if m.group("s"):
            ds = int(m.group("se")) if m.group("se") else 1
        key = (dv, ds)
        cur = terms.get(key, 0) + sign * coeff
        if cur:
            terms[key] = cur
        else:
            terms.pop(key, None)
    return LaurentPoly(terms)


_FRACTION_RE = re.compile(r"^\((?P<num>.*)\)\s*/\s*\((?P<den>.*)\)$")


def parse_rational(text: str) -> RationalFunction:
    """Parse either a plain polynomial or ``(num) / (den)``."""
    text = text.strip()
    m = _FRACTION_RE.match(text)
    if m:
        return RationalFunction(parse_poly(m.group("num")), parse_poly(m.group("den")))
    return RationalFunction(parse_poly(text))
