"""Exact sparse Laurent-polynomial arithmetic over the integers.

A Laurent polynomial in m ambient variables is a finite sum of terms
c * x1^a1 * ... * xm^am with arbitrary-precision integer coefficients c and
signed integer exponents a_i.  Terms are kept as a tuple of
(exponent-vector, coefficient) pairs, sorted in descending lexicographic
order on the exponent vectors, with no zero coefficients.  Structural
equality of this canonical form therefore coincides with mathematical
equality, and values are hashable and immutable.

The module also provides reduced fractions of ordinary polynomials
(RationalFn), exact Laurent division, multivariate integer gcd via
subresultant remainder sequences, formal substitution, and the
reducibility decision for X^d + 1 over the rationals or the complexes.
"""

from __future__ import annotations

import math
import re
from enum import Enum
from fractions import Fraction
from typing import Iterable, Mapping, Sequence

Exps = tuple  # exponent vector: one signed int per ambient variable


class DimensionMismatch(ValueError):
    """Operands live in Laurent rings with different ambient variable counts."""


class NotDivisible(ArithmeticError):
    """Exact division failed: no quotient exists in the Laurent ring."""


class ZeroImageInverted(ZeroDivisionError):
    """Substitution asked to invert a zero image (pole)."""


class ParseError(ValueError):
    """Text did not conform to the polynomial or matrix grammar."""

    def __init__(self, message: str, pos: int):
        super().__init__(f"{message} (at position {pos})")
        self.pos = pos


class FieldTag(Enum):
    """Scalar field assumed for the reducibility decision of X^d + 1."""

    RATIONALS = "Q"
    COMPLEXES = "C"


class LaurentPoly:
    """Immutable sparse Laurent polynomial with integer coefficients."""

    __slots__ = ("m", "terms", "_hash")

    def __init__(self, m: int, terms: Mapping[Exps, int] | Iterable[tuple[Exps, int]]):
        items = terms.items() if isinstance(terms, Mapping) else terms
        acc: dict[Exps, int] = {}
        for exps, c in items:
            if len(exps) != m:
                raise DimensionMismatch(
                    f"exponent vector of length {len(exps)} in ambient dimension {m}"
                )
            if c:
                nc = acc.get(exps, 0) + c
                if nc:
                    acc[exps] = nc
                else:
                    del acc[exps]
        object.__setattr__(self, "m", m)
        object.__setattr__(self, "terms", tuple(sorted(acc.items(), reverse=True)))
        object.__setattr__(self, "_hash", None)

    def __setattr__(self, name, value):
        raise AttributeError("LaurentPoly is immutable")

    # -- constructors -------------------------------------------------

    @classmethod
    def zero(cls, m: int) -> "LaurentPoly":
        return cls(m, {})

    @classmethod
    def const(cls, m: int, c: int) -> "LaurentPoly":
        return cls(m, {(0,) * m: c})

    @classmethod
    def variable(cls, m: int, i: int) -> "LaurentPoly":
        """The coordinate monomial x_i (1-indexed)."""
        if not 1 <= i <= m:
            raise DimensionMismatch(f"variable index {i} outside 1..{m}")
        exps = tuple(1 if j == i - 1 else 0 for j in range(m))
        return cls(m, {exps: 1})

    @classmethod
    def monomial(cls, m: int, exps: Sequence[int], coeff: int = 1) -> "LaurentPoly":
        return cls(m, {tuple(exps): coeff})

    # -- structure ----------------------------------------------------

    @property
    def is_zero(self) -> bool:
        return not self.terms

    @property
    def is_one(self) -> bool:
        return len(self.terms) == 1 and self.terms[0][1] == 1 and not any(self.terms[0][0])

    @property
    def is_monomial(self) -> bool:
        return len(self.terms) == 1

    def support_vars(self) -> frozenset[int]:
        """1-indexed set of variables occurring with nonzero exponent."""
        out = set()
        for exps, _ in self.terms:
            for i, e in enumerate(exps):
                if e:
                    out.add(i + 1)
        return frozenset(out)

    def min_exponents(self) -> Exps:
        """Per-variable minimum exponent over all terms (zeros if empty)."""
        if not self.terms:
            return (0,) * self.m
        mins = list(self.terms[0][0])
        for exps, _ in self.terms[1:]:
            for i, e in enumerate(exps):
                if e < mins[i]:
                    mins[i] = e
        return tuple(mins)

    def is_ordinary(self) -> bool:
        """True when no term carries a negative exponent."""
        return all(e >= 0 for exps, _ in self.terms for e in exps)

    def sort_key(self):
        return self.terms

    # -- arithmetic ---------------------------------------------------

    def _check(self, other: "LaurentPoly") -> None:
        if self.m != other.m:
            raise DimensionMismatch(f"ambient dimensions differ: {self.m} vs {other.m}")

    def __add__(self, other: "LaurentPoly") -> "LaurentPoly":
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        self._check(other)
        acc = dict(self.terms)
        for exps, c in other.terms:
            nc = acc.get(exps, 0) + c
            if nc:
                acc[exps] = nc
            else:
                del acc[exps]
        return LaurentPoly(self.m, acc)

    def __neg__(self) -> "LaurentPoly":
        return LaurentPoly(self.m, [(exps, -c) for exps, c in self.terms])

    def __sub__(self, other: "LaurentPoly") -> "LaurentPoly":
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, int):
            return LaurentPoly(self.m, [(exps, c * other) for exps, c in self.terms])
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        self._check(other)
        acc: dict[Exps, int] = {}
        for ea, ca in self.terms:
            for eb, cb in other.terms:
                key = tuple(x + y for x, y in zip(ea, eb))
                nc = acc.get(key, 0) + ca * cb
                if nc:
                    acc[key] = nc
                else:
                    del acc[key]
        return LaurentPoly(self.m, acc)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> "LaurentPoly":
        if k < 0:
            raise ValueError("negative powers are only defined for RationalFn values")
        result = LaurentPoly.const(self.m, 1)
        base = self
        while k:
            if k & 1:
                result = result * base
            base_needed = k > 1
            if base_needed:
                base = base * base
            k >>= 1
        return result

    def shift(self, offsets: Exps) -> "LaurentPoly":
        """Multiply by the monomial with the given exponent vector."""
        return LaurentPoly(
            self.m,
            [(tuple(e + o for e, o in zip(exps, offsets)), c) for exps, c in self.terms],
        )

    def derivative(self, i: int) -> "LaurentPoly":
        """Formal partial derivative with respect to x_i (1-indexed)."""
        acc: dict[Exps, int] = {}
        j = i - 1
        for exps, c in self.terms:
            e = exps[j]
            if e:
                key = exps[:j] + (e - 1,) + exps[j + 1 :]
                acc[key] = acc.get(key, 0) + c * e
        return LaurentPoly(self.m, acc)

    def evaluate(self, point: Sequence[int | Fraction]) -> Fraction:
        """Exact evaluation; coordinates hit by a negative exponent must be nonzero."""
        if len(point) != self.m:
            raise DimensionMismatch(f"point of length {len(point)} in dimension {self.m}")
        pt = [Fraction(v) for v in point]
        total = Fraction(0)
        for exps, c in self.terms:
            v = Fraction(c)
            for x, e in zip(pt, exps):
                if e:
                    v *= x**e
            total += v
        return total

    # -- comparison ---------------------------------------------------

    def __eq__(self, other) -> bool:
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return self.m == other.m and self.terms == other.terms

    def __hash__(self) -> int:
        h = self._hash
        if h is None:
            h = hash((self.m, self.terms))
            object.__setattr__(self, "_hash", h)
        return h

    def __repr__(self) -> str:
        return f"LaurentPoly({self.m}, {render_poly(self)!r})"


def exact_div(a: LaurentPoly, b: LaurentPoly) -> LaurentPoly:
    """Exact quotient a / b in the Laurent ring; NotDivisible if none exists.

    Both operands are shifted by monomials into the ordinary polynomial
    ring, where single-divisor leading-term reduction under descending
    lex order either terminates with zero remainder or proves that no
    exact quotient exists.
    """
    a._check(b)
    if b.is_zero:
        raise ZeroDivisionError("division by the zero polynomial")
    if a.is_zero:
        return LaurentPoly.zero(a.m)
    sa = a.min_exponents()
    sb = b.min_exponents()
    rem = {tuple(e - s for e, s in zip(exps, sa)): c for exps, c in a.terms}
    bterms = [(tuple(e - s for e, s in zip(exps, sb)), c) for exps, c in b.terms]
    bl_exps = max(t[0] for t in bterms)
    bl_c = dict(bterms)[bl_exps]
    quot: dict[Exps, int] = {}
    while rem:
        r_exps = max(rem)
        r_c = rem[r_exps]
        t_exps = tuple(x - y for x, y in zip(r_exps, bl_exps))
        if any(e < 0 for e in t_exps) or r_c % bl_c:
            raise NotDivisible("leading term not divisible; quotient does not exist")
        t_c = r_c // bl_c
        quot[t_exps] = quot.get(t_exps, 0) + t_c
        for exps, c in bterms:
            key = tuple(x + y for x, y in zip(t_exps, exps))
            nc = rem.get(key, 0) - t_c * c
            if nc:
                rem[key] = nc
            else:
                rem.pop(key, None)
    shift = tuple(x - y for x, y in zip(sa, sb))
    return LaurentPoly(a.m, {tuple(e + s for e, s in zip(exps, shift)): c for exps, c in quot.items()})


# ---------------------------------------------------------------------------
# multivariate gcd (ordinary polynomials, integer coefficients)
# ---------------------------------------------------------------------------


def _deg_in(p: LaurentPoly, v: int) -> int:
    return max(exps[v] for exps, _ in p.terms)


def _coeff_of(p: LaurentPoly, v: int, d: int) -> LaurentPoly:
    """Coefficient of x_{v+1}^d, as a polynomial with the v-slot zeroed."""
    acc = {}
    for exps, c in p.terms:
        if exps[v] == d:
            acc[exps[:v] + (0,) + exps[v + 1 :]] = c
    return LaurentPoly(p.m, acc)


def _lc_in(p: LaurentPoly, v: int) -> LaurentPoly:
    return _coeff_of(p, v, _deg_in(p, v))


def _var_shift(p: LaurentPoly, v: int, k: int) -> LaurentPoly:
    return LaurentPoly(
        p.m, [(exps[:v] + (exps[v] + k,) + exps[v + 1 :], c) for exps, c in p.terms]
    )


def _prem(f: LaurentPoly, g: LaurentPoly, v: int) -> LaurentPoly:
    """Pseudo-remainder lc(g)^(deg f - deg g + 1) * f mod g in variable v."""
    dg = _deg_in(g, v)
    lg = _lc_in(g, v)
    e = _deg_in(f, v) - dg + 1
    r = f
    while not r.is_zero and _deg_in(r, v) >= dg:
        lr = _lc_in(r, v)
        r = lg * r - _var_shift(lr * g, v, _deg_in(r, v) - dg)
        e -= 1
    return r * (lg**e) if e else r


def _content_in(p: LaurentPoly, v: int) -> LaurentPoly:
    g = LaurentPoly.zero(p.m)
    for d in range(_deg_in(p, v) + 1):
        cf = _coeff_of(p, v, d)
        if not cf.is_zero:
            g = poly_gcd(g, cf)
            if g.is_one:
                break
    return g


def _normalize_sign(p: LaurentPoly) -> LaurentPoly:
    if p.terms and p.terms[0][1] < 0:
        return -p
    return p


def _prs_gcd(f: LaurentPoly, g: LaurentPoly, v: int) -> LaurentPoly:
    # subresultant polynomial remainder sequence on primitive inputs
    if _deg_in(f, v) < _deg_in(g, v):
        f, g = g, f
    r0, r1 = f, g
    coef = LaurentPoly.const(f.m, 1)
    h = LaurentPoly.const(f.m, 1)
    while True:
        d = _deg_in(r0, v) - _deg_in(r1, v)
        rem = _prem(r0, r1, v)
        if rem.is_zero:
            return r1
        if _deg_in(rem, v) == 0:
            return LaurentPoly.const(f.m, 1)
        r0, r1 = r1, exact_div(rem, coef * h**d)
        coef = _lc_in(r0, v)
        if d > 0:
            h = exact_div(coef**d, h ** (d - 1)) if d > 1 else coef


def poly_gcd(a: LaurentPoly, b: LaurentPoly) -> LaurentPoly:
    """Greatest common divisor of two ordinary integer polynomials.

    Content and primitive part are split off recursively in the highest
    occurring variable; primitive parts go through a subresultant
    remainder sequence.  The result is normalized to a positive leading
    coefficient under lex order and divides both inputs exactly.
    """
    a._check(b)
    if not (a.is_ordinary() and b.is_ordinary()):
        raise ValueError("poly_gcd expects ordinary polynomials (no negative exponents)")
    if a.is_zero:
        return _normalize_sign(b)
    if b.is_zero:
        return _normalize_sign(a)
    va, vb = a.support_vars(), b.support_vars()
    if not va and not vb:
        return LaurentPoly.const(a.m, math.gcd(a.terms[0][1], b.terms[0][1]))
    v = max(va | vb) - 1
    if v + 1 not in va:
        return poly_gcd(a, _content_in(b, v))
    if v + 1 not in vb:
        return poly_gcd(_content_in(a, v), b)
    ca = _content_in(a, v)
    cb = _content_in(b, v)
    c = poly_gcd(ca, cb)
    pa = exact_div(a, ca)
    pb = exact_div(b, cb)
    g = _prs_gcd(pa, pb, v)
    if not g.is_one:
        g = exact_div(g, _content_in(g, v))
    return _normalize_sign(c * g)


def xd_plus_one_reducible(d: int, field: FieldTag) -> bool:
    """Whether X^d + 1 factors nontrivially over the given scalar field.

    Over the complexes every degree >= 2 splits.  Over the rationals the
    polynomial is irreducible exactly when d is a power of two; any odd
    factor q > 1 of d yields the factor X^(d/q) + 1.
    """
    if d < 1:
        raise ValueError("d must be a positive integer")
    if field is FieldTag.COMPLEXES:
        return d >= 2
    return (d & (d - 1)) != 0


def odd_divisor(d: int) -> int | None:
    """Smallest odd divisor > 1 of d, or None when d is a power of two."""
    while d % 2 == 0:
        d //= 2
    if d == 1:
        return None
    for q in range(3, d + 1, 2):
        if d % q == 0:
            return q
    return d


# ---------------------------------------------------------------------------
# reduced rational functions
# ---------------------------------------------------------------------------


class RationalFn:
    """Reduced fraction of ordinary integer polynomials.

    Invariants: the denominator is nonzero, shares no factor (including
    integer content) with the numerator, and carries a positive leading
    coefficient under lex order.  The denominator is 1 exactly when the
    value is a polynomial.
    """

    __slots__ = ("num", "den")

    def __init__(self, num: LaurentPoly, den: LaurentPoly, _reduced: bool = False):
        if den.is_zero:
            raise ZeroDivisionError("zero denominator")
        if not (num.is_ordinary() and den.is_ordinary()):
            raise ValueError("RationalFn components must be ordinary polynomials")
        if not _reduced:
            num, den = _reduce_fraction(num, den)
        object.__setattr__(self, "num", num)
        object.__setattr__(self, "den", den)

    def __setattr__(self, name, value):
        raise AttributeError("RationalFn is immutable")

    @classmethod
    def const(cls, m: int, c: int) -> "RationalFn":
        return cls(LaurentPoly.const(m, c), LaurentPoly.const(m, 1), _reduced=True)

    @classmethod
    def from_laurent(cls, p: LaurentPoly) -> "RationalFn":
        """Split a Laurent polynomial into an ordinary numerator over a monomial."""
        mins = p.min_exponents()
        den_exps = tuple(max(0, -e) for e in mins)
        num = p.shift(den_exps)
        den = LaurentPoly.monomial(p.m, den_exps)
        return cls(num, den, _reduced=True)

    @property
    def m(self) -> int:
        return self.num.m

    @property
    def is_zero(self) -> bool:
        return self.num.is_zero

    @property
    def is_polynomial(self) -> bool:
        return self.den.is_one

    def as_laurent(self) -> LaurentPoly:
        """Convert back when the denominator is a monomial; NotDivisible otherwise."""
        if not self.den.is_monomial:
            raise NotDivisible("denominator is not a monomial")
        return exact_div(self.num, self.den)

    def __add__(self, other: "RationalFn") -> "RationalFn":
        if not isinstance(other, RationalFn):
            return NotImplemented
        return RationalFn(
            self.num * other.den + other.num * self.den, self.den * other.den
        )

    def __neg__(self) -> "RationalFn":
        return RationalFn(-self.num, self.den, _reduced=True)

    def __sub__(self, other: "RationalFn") -> "RationalFn":
        return self + (-other)

    def __mul__(self, other: "RationalFn") -> "RationalFn":
        if not isinstance(other, RationalFn):
            return NotImplemented
        return RationalFn(self.num * other.num, self.den * other.den)

    def __truediv__(self, other: "RationalFn") -> "RationalFn":
        if not isinstance(other, RationalFn):
            return NotImplemented
        if other.is_zero:
            raise ZeroDivisionError("division by zero rational function")
        return RationalFn(self.num * other.den, self.den * other.num)

    def __pow__(self, k: int) -> "RationalFn":
        if k < 0:
            if self.is_zero:
                raise ZeroDivisionError("negative power of zero")
            return RationalFn(self.den, self.num) ** (-k)
        result = RationalFn.const(self.m, 1)
        base = self
        while k:
            if k & 1:
                result = result * base
            if k > 1:
                base = base * base
            k >>= 1
        return result

    def __eq__(self, other) -> bool:
        if not isinstance(other, RationalFn):
            return NotImplemented
        return self.num == other.num and self.den == other.den

    def __hash__(self) -> int:
        return hash((self.num, self.den))

    def __repr__(self) -> str:
        if self.is_polynomial:
            return f"RationalFn({render_poly(self.num)!r})"
        return f"RationalFn({render_poly(self.num)!r} / {render_poly(self.den)!r})"


def _reduce_fraction(num: LaurentPoly, den: LaurentPoly) -> tuple[LaurentPoly, LaurentPoly]:
    if num.is_zero:
        return num, LaurentPoly.const(num.m, 1)
    if den.is_monomial:
        # fast path: cancel the common monomial factor and integer content
        dexps, dc = den.terms[0]
        mins = num.min_exponents()
        common = tuple(min(a, b) for a, b in zip(mins, dexps))
        num = num.shift(tuple(-e for e in common))
        den = LaurentPoly.monomial(num.m, tuple(a - b for a, b in zip(dexps, common)), dc)
        content = 0
        for _, c in num.terms:
            content = math.gcd(content, c)
            if content == 1:
                break
        g = math.gcd(content, dc)
        if g > 1:
            num = LaurentPoly(num.m, [(e, c // g) for e, c in num.terms])
            den = LaurentPoly.monomial(num.m, den.terms[0][0], dc // g)
    else:
        g = poly_gcd(num, den)
        if not g.is_one:
            num = exact_div(num, g)
            den = exact_div(den, g)
    if den.terms[0][1] < 0:
        num, den = -num, -den
    return num, den


def substitute(e: LaurentPoly, images: Sequence[RationalFn]) -> RationalFn:
    """Formal substitution x_i -> images[i-1], reduced.

    Raises ZeroImageInverted when a variable with a negative exponent in
    some term of e is mapped to zero.
    """
    if len(images) != e.m:
        raise DimensionMismatch(f"{len(images)} images for {e.m} variables")
    if not images:
        raise DimensionMismatch("substitution requires at least one image")
    mt = images[0].m
    for img in images:
        if img.m != mt:
            raise DimensionMismatch("images live in different ambient rings")
    total = RationalFn.const(mt, 0)
    for exps, c in e.terms:
        term = RationalFn.const(mt, c)
        for i, ei in enumerate(exps):
            if not ei:
                continue
            img = images[i]
            if ei < 0 and img.is_zero:
                raise ZeroImageInverted(f"x{i + 1} has a negative exponent but maps to 0")
            term = term * img**ei
        total = total + term
    return total


# ---------------------------------------------------------------------------
# canonical text form
# ---------------------------------------------------------------------------


def render_poly(p: LaurentPoly, names: Sequence[str] | None = None) -> str:
    """Canonical text form: terms joined by ' + '/' - ', factors by '*'."""
    if p.is_zero:
        return "0"
    if names is None:
        names = [f"x{i + 1}" for i in range(p.m)]
    pieces = []
    for idx, (exps, c) in enumerate(p.terms):
        mag = abs(c)
        factors = []
        if mag != 1 or not any(exps):
            factors.append(str(mag))
        for i, e in enumerate(exps):
            if e == 0:
                continue
            factors.append(names[i] if e == 1 else f"{names[i]}^{e}")
        body = "*".join(factors)
        if idx == 0:
            pieces.append(body if c > 0 else f"-{body}")
        else:
            pieces.append(f" + {body}" if c > 0 else f" - {body}")
    return "".join(pieces)


_TOKEN = re.compile(r"\s*(?:(?P<int>\d+)|(?P<var>x\d+)|(?P<op>[-+*^−]))")


def _tokenize_poly(text: str):
    tokens = []
    pos = 0
    while pos < len(text):
        mobj = _TOKEN.match(text, pos)
        if mobj is None:
            stripped = text[pos:].lstrip()
            if not stripped:
                break
            raise ParseError(f"unexpected character {stripped[0]!r}", pos)
        if mobj.group("int") is not None:
            tokens.append(("int", int(mobj.group("int")), mobj.start("int")))
        elif mobj.group("var") is not None:
            tokens.append(("var", int(mobj.group("var")[1:]), mobj.start("var")))
        else:
            op = mobj.group("op")
            tokens.append(("op", "-" if op == "−" else op, mobj.start("op")))
        pos = mobj.end()
    return tokens


def parse_poly(text: str, m: int | None = None) -> LaurentPoly:
    """Parse the canonical text form back into a Laurent polynomial.

    Variables are 1-indexed (x1, x2, ...); when m is omitted it is
    inferred as the largest index seen.
    """
    tokens = _tokenize_poly(text)
    if not tokens:
        raise ParseError("empty polynomial", 0)
    raw_terms: list[tuple[int, dict[int, int]]] = []
    i = 0
    sign = 1
    if tokens[0][0] == "op" and tokens[0][1] in "+-":
        sign = -1 if tokens[0][1] == "-" else 1
        i = 1

    def parse_factor(i, coeff, exps):
        kind, val, pos = tokens[i]
        if kind == "int":
            return i + 1, coeff * val
        if kind == "var":
            if val < 1:
                raise ParseError("variable indices are 1-based", pos)
            e = 1
            j = i + 1
            if j < len(tokens) and tokens[j] == ("op", "^", tokens[j][2]):
                j += 1
                esign = 1
                if j < len(tokens) and tokens[j][0] == "op" and tokens[j][1] == "-":
                    esign = -1
                    j += 1
                if j >= len(tokens) or tokens[j][0] != "int":
                    raise ParseError("expected integer exponent after '^'", pos)
                e = esign * tokens[j][1]
                j += 1
            exps[val] = exps.get(val, 0) + e
            return j, coeff
        raise ParseError(f"expected a coefficient or variable, got {val!r}", pos)

    while i < len(tokens):
        coeff = sign
        exps: dict[int, int] = {}
        i, coeff = parse_factor(i, coeff, exps)
        while i < len(tokens) and tokens[i][0] == "op" and tokens[i][1] == "*":
            if i + 1 >= len(tokens):
                raise ParseError("dangling '*'", tokens[i][2])
            i, coeff = parse_factor(i + 1, coeff, exps)
        raw_terms.append((coeff, exps))
        if i < len(tokens):
            kind, val, pos = tokens[i]
            if kind != "op" or val not in "+-":
                raise ParseError(f"expected '+' or '-', got {val!r}", pos)
            sign = -1 if val == "-" else 1
            i += 1
            if i >= len(tokens):
                raise ParseError("trailing sign", pos)

    max_var = max((max(exps) for _, exps in raw_terms if exps), default=0)
    if m is None:
        m = max_var
    elif max_var > m:
        raise ParseError(f"variable x{max_var} outside ambient dimension {m}", 0)
    acc: dict[Exps, int] = {}
    for coeff, exps in raw_terms:
        key = tuple(exps.get(i + 1, 0) for i in range(m))
        acc[key] = acc.get(key, 0) + coeff
    return LaurentPoly(m, acc)
