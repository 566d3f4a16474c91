"""Exact coefficient fields and multivariate polynomials in canonical form.

Polynomials are immutable maps from exponent tuples to nonzero coefficients.
Coefficients over the rationals are :class:`fractions.Fraction`; over GF(p)
they are plain ints in ``range(p)``.
"""
from __future__ import annotations

import re
from dataclasses import dataclass, field as dc_field
from fractions import Fraction
from functools import cached_property
from typing import Callable, Iterable, Mapping, Sequence, Union

Monomial = tuple
Coeff = Union[int, Fraction]


class PolyError(ValueError):
    """Raised for malformed rings, polynomials, or mismatched operands."""


def _is_prime(p: int) -> bool:
    if p < 2:
        return False
    if p % 2 == 0:
        return p == 2
    i = 3
    while i * i <= p:
        if p % i == 0:
            return False
        i += 2
    return True


@dataclass(frozen=True)
class CoefficientField:
    """Either the rationals (``kind='QQ'``) or a prime field GF(p), p odd."""

    kind: str
    p: int = 0

    def __post_init__(self):
        if self.kind == "QQ":
            if self.p:
                raise PolyError("the rationals take no modulus")
        elif self.kind == "GF":
            if not isinstance(self.p, int) or not _is_prime(self.p) or self.p == 2:
                raise PolyError(f"{self.p} is not an odd prime")
        else:
            raise PolyError(f"unknown field kind {self.kind!r}")

    @classmethod
    def rationals(cls) -> "CoefficientField":
        return cls("QQ")

    @classmethod
    def prime(cls, p: int) -> "CoefficientField":
        return cls("GF", p)

    @classmethod
    def parse(cls, text: str) -> "CoefficientField":
        text = text.strip()
        if text in ("QQ", "Q"):
            return cls.rationals()
        m = re.fullmatch(r"(?:GF|F|ZZ/)\(?\s*(\d+)\s*\)?", text)
        if not m:
            raise PolyError(f"cannot parse field {text!r}")
        return cls.prime(int(m.group(1)))

    @property
    def is_prime_field(self) -> bool:
        return self.kind == "GF"

    @property
    def characteristic(self) -> int:
        return self.p

    def __str__(self):
        return "QQ" if self.kind == "QQ" else f"GF({self.p})"

    def __call__(self, value) -> Coeff:
        """Coerce an int, Fraction, or numeric string into the field."""
        if isinstance(value, str):
            value = Fraction(value.strip())
        if self.kind == "QQ":
            return Fraction(value)
        if isinstance(value, Fraction):
            if value.denominator % self.p == 0:
                raise ZeroDivisionError(f"denominator vanishes mod {self.p}")
            return value.numerator * pow(value.denominator, -1, self.p) % self.p
        return int(value) % self.p

    def reduce(self, c: Coeff) -> Coeff:
        return c % self.p if self.p else c

    def inv(self, c: Coeff) -> Coeff:
        if not c:
            raise ZeroDivisionError("inverse of zero")
        if self.p:
            return pow(c, self.p - 2, self.p)
        return 1 / Fraction(c)

    def elements(self) -> range:
        if not self.p:
            raise PolyError("the rationals are not enumerable")
        return range(self.p)

    def format(self, c: Coeff) -> str:
        return str(c)


QQ = CoefficientField.rationals()


def GF(p: int) -> CoefficientField:
    return CoefficientField.prime(p)


# -- monomial orders --------------------------------------------------------

def _grevlex_key(e: Sequence[int]) -> tuple:
    return (sum(e),) + tuple(-x for x in reversed(e))


def _lex_key(e: Sequence[int]) -> tuple:
    return tuple(e)


def order_key(order: str, nvars: int) -> Callable[[Monomial], tuple]:
    """Return a sort key (larger key = larger monomial) for an order name.

    ``order`` is ``'grevlex'``, ``'lex'``, or ``'elim:k'`` meaning grevlex on
    the first k variables, ties broken by grevlex on the rest.
    """
    if order == "grevlex":
        return _grevlex_key
    if order == "lex":
        return _lex_key
    if order.startswith("elim:"):
        k = int(order[5:])
        if not 0 < k < nvars:
            raise PolyError(f"block split {k} out of range for {nvars} variables")

        def key(e):
            return _grevlex_key(e[:k]) + _grevlex_key(e[k:])
        return key
    raise PolyError(f"unknown monomial order {order!r}")


@dataclass(frozen=True)
class PolyRing:
    field: CoefficientField
    names: tuple
    order: str = "grevlex"
    key: Callable = dc_field(init=False, repr=False, compare=False, hash=False)

    def __post_init__(self):
        names = tuple(self.names)
        object.__setattr__(self, "names", names)
        if not names:
            raise PolyError("a ring needs at least one variable")
        if len(set(names)) != len(names):
            raise PolyError(f"duplicate variable names in {names}")
        for nm in names:
            if not re.fullmatch(r"[A-Za-z_][A-Za-z_0-9']*", nm):
                raise PolyError(f"bad variable name {nm!r}")
        object.__setattr__(self, "key", order_key(self.order, len(names)))

    @property
    def nvars(self) -> int:
        return len(self.names)

    def __str__(self):
        return f"{self.field}[{','.join(self.names)}]"

    @classmethod
    def from_string(cls, text: str, order: str = "grevlex") -> "PolyRing":
        """Parse ``QQ[x,y,z]`` or ``GF(11)[x,y]``."""
        m = re.fullmatch(r"\s*(.+?)\s*\[(.*)\]\s*", text)
        if not m:
            raise PolyError(f"cannot parse ring {text!r}")
        names = [s.strip() for s in m.group(2).split(",") if s.strip()]
        return cls(CoefficientField.parse(m.group(1)), tuple(names), order)

    def with_order(self, order: str) -> "PolyRing":
        return PolyRing(self.field, self.names, order)

    @cached_property
    def zero(self) -> "Polynomial":
        return Polynomial(self, {})

    @cached_property
    def one(self) -> "Polynomial":
        return self.const(1)

    @cached_property
    def gens(self) -> tuple:
        out = []
        for i in range(self.nvars):
            e = [0] * self.nvars
            e[i] = 1
            out.append(Polynomial(self, {tuple(e): self.field(1)}))
        return tuple(out)

    def gen(self, name: str) -> "Polynomial":
        try:
            return self.gens[self.names.index(name)]
        except ValueError:
            raise PolyError(f"unknown variable {name!r}") from None

    def const(self, c) -> "Polynomial":
        c = self.field(c)
        return Polynomial(self, {(0,) * self.nvars: c} if c else {})

    def monomial(self, exps: Sequence[int], coeff=1) -> "Polynomial":
        c = self.field(coeff)
        return Polynomial(self, {tuple(exps): c} if c else {})

    def from_terms(self, terms: Mapping) -> "Polynomial":
        """Build a polynomial from a mapping that may hold zero coefficients."""
        f = self.field
        return Polynomial(self, {tuple(m): f(c) for m, c in terms.items() if f(c)})

    def parse(self, text: str) -> "Polynomial":
        return parse_poly(self, text)

    def __call__(self, value) -> "Polynomial":
        if isinstance(value, Polynomial):
            if value.ring != self:
                raise PolyError("polynomial belongs to a different ring")
            return value
        if isinstance(value, str):
            return parse_poly(self, value)
        return self.const(value)


def make_ring(field: CoefficientField, names: Iterable[str], order: str = "grevlex") -> PolyRing:
    return PolyRing(field, tuple(names), order)


def _mono_mul(a: Monomial, b: Monomial) -> Monomial:
    return tuple([x + y for x, y in zip(a, b)])


class Polynomial:
    """An immutable polynomial; ``terms`` maps exponent tuples to coefficients."""

    __slots__ = ("ring", "terms", "_sorted", "_hash")

    def __init__(self, ring: PolyRing, terms: dict):
        self.ring = ring
        self.terms = terms
        self._sorted = None
        self._hash = None

    # -- structure --
    def sorted_terms(self) -> list:
        """Terms as ``(monomial, coeff)`` pairs, descending in the ring order."""
        if self._sorted is None:
            key = self.ring.key
            self._sorted = sorted(self.terms.items(), key=lambda t: key(t[0]), reverse=True)
        return self._sorted

    def __bool__(self):
        return bool(self.terms)

    def is_zero(self) -> bool:
        return not self.terms

    def __len__(self):
        return len(self.terms)

    @property
    def lead_monomial(self) -> Monomial:
        if not self.terms:
            raise PolyError("zero polynomial has no leading term")
        return self.sorted_terms()[0][0]

    @property
    def lead_coeff(self) -> Coeff:
        if not self.terms:
            raise PolyError("zero polynomial has no leading term")
        return self.sorted_terms()[0][1]

    def degree(self) -> int:
        """Total degree; -1 for the zero polynomial."""
        return max((sum(m) for m in self.terms), default=-1)

    def is_homogeneous(self) -> bool:
        return len({sum(m) for m in self.terms}) <= 1

    def is_constant(self) -> bool:
        return all(not any(m) for m in self.terms)

    def constant_value(self) -> Coeff:
        if not self.is_constant():
            raise PolyError(f"{self} is not a constant")
        return self.terms.get((0,) * self.ring.nvars, self.ring.field(0))

    def variables_used(self) -> set:
        return {self.ring.names[i] for m in self.terms for i, e in enumerate(m) if e}

    def monic(self) -> "Polynomial":
        if not self.terms:
            return self
        return self.scale(self.ring.field.inv(self.lead_coeff))

    def coefficient(self, exps: Sequence[int]) -> Coeff:
        return self.terms.get(tuple(exps), self.ring.field(0))

    # -- arithmetic --
    def _coerce(self, other) -> "Polynomial":
        if isinstance(other, Polynomial):
            if other.ring != self.ring:
                raise PolyError(f"ring mismatch: {self.ring} vs {other.ring}")
            return other
        if isinstance(other, (int, Fraction)):
            return self.ring.const(other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        red = self.ring.field.reduce
        out = dict(self.terms)
        for m, c in other.terms.items():
            s = red(out.get(m, 0) + c)
            if s:
                out[m] = s
            else:
                out.pop(m, None)
        return Polynomial(self.ring, out)

    __radd__ = __add__

    def __neg__(self):
        red = self.ring.field.reduce
        return Polynomial(self.ring, {m: red(-c) for m, c in self.terms.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return other - self

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        red = self.ring.field.reduce
        out: dict = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                m = _mono_mul(m1, m2)
                out[m] = out.get(m, 0) + c1 * c2
        return Polynomial(self.ring, {m: r for m, c in out.items() if (r := red(c))})

    __rmul__ = __mul__

    def scale(self, c) -> "Polynomial":
        f = self.ring.field
        c = f(c)
        if not c:
            return self.ring.zero
        return Polynomial(self.ring, {m: f.reduce(v * c) for m, v in self.terms.items()})

    def mul_term(self, mono: Monomial, c) -> "Polynomial":
        f = self.ring.field
        return Polynomial(self.ring, {_mono_mul(m, mono): f.reduce(v * c) for m, v in self.terms.items()})

    def __pow__(self, k: int):
        if not isinstance(k, int) or k < 0:
            raise PolyError("exponent must be a non-negative integer")
        result, base = self.ring.one, self
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base * base
        return result

    def exact_div(self, other: "Polynomial") -> "Polynomial":
        """Quotient ``self / other``; raises if the division leaves a remainder."""
        other = self._coerce(other)
        if not other:
            raise ZeroDivisionError("division by the zero polynomial")
        f = self.ring.field
        key = self.ring.key
        lm, lc = other.lead_monomial, other.lead_coeff
        inv = f.inv(lc)
        rem = dict(self.terms)
        quot: dict = {}
        while rem:
            m = max(rem, key=key)
            if any(a < b for a, b in zip(m, lm)):
                raise PolyError(f"{other} does not divide {self}")
            qm = tuple(a - b for a, b in zip(m, lm))
            qc = f.reduce(rem[m] * inv)
            quot[qm] = qc
            for m2, c2 in other.terms.items():
                mm = _mono_mul(m2, qm)
                v = f.reduce(rem.get(mm, 0) - qc * c2)
                if v:
                    rem[mm] = v
                else:
                    rem.pop(mm, None)
        return Polynomial(self.ring, quot)

    def substitute(self, mapping: Mapping[str, "Polynomial"]) -> "Polynomial":
        """Replace variables by polynomials (of the same ring)."""
        ring = self.ring
        images = [mapping.get(nm, g) for nm, g in zip(ring.names, ring.gens)]
        images = [ring(im) for im in images]
        powers: list = [dict() for _ in images]

        def power(i, k):
            if k not in powers[i]:
                powers[i][k] = images[i] ** k
            return powers[i][k]

        out = ring.zero
        for m, c in self.terms.items():
            t = ring.const(c)
            for i, k in enumerate(m):
                if k:
                    t = t * power(i, k)
            out = out + t
        return out

    def to_ring(self, ring: PolyRing, positions: Sequence[int] | None = None) -> "Polynomial":
        """Map into ``ring``; variable i goes to slot ``positions[i]``.

        By default variables are matched by name.
        """
        if positions is None:
            try:
                positions = [ring.names.index(nm) for nm in self.ring.names]
            except ValueError:
                raise PolyError(f"{ring} lacks variables of {self.ring}") from None
        n = ring.nvars
        out = {}
        for m, c in self.terms.items():
            e = [0] * n
            for i, k in enumerate(m):
                if k:
                    e[positions[i]] = k
            out[tuple(e)] = ring.field(c)
        return Polynomial(ring, {m: c for m, c in out.items() if c})

    def evaluate(self, point: Sequence) -> Coeff:
        f = self.ring.field
        total = f(0)
        for m, c in self.terms.items():
            v = c
            for x, k in zip(point, m):
                if k:
                    v = v * f(x) ** k
            total = f.reduce(total + v)
        return total

    # -- comparison / printing --
    def __eq__(self, other):
        if isinstance(other, Polynomial):
            return self.ring == other.ring and self.terms == other.terms
        if isinstance(other, (int, Fraction)):
            return self == self.ring.const(other)
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.ring.names, frozenset(self.terms.items())))
        return self._hash

    def __str__(self):
        if not self.terms:
            return "0"
        names = self.ring.names
        parts = []
        for m, c in self.sorted_terms():
            factors = []
            for nm, k in zip(names, m):
                if k == 1:
                    factors.append(nm)
                elif k:
                    factors.append(f"{nm}^{k}")
            neg = c < 0
            a = -c if neg else c
            if not factors:
                body = str(a)
            elif a == 1:
                body = "*".join(factors)
            else:
                body = f"{a}*" + "*".join(factors)
            if not parts:
                parts.append(("-" if neg else "") + body)
            else:
                parts.append(("- " if neg else "+ ") + body)
        return " ".join(parts)

    def __repr__(self):
        return f"Polynomial({self})"


_TOKEN = re.compile(r"\s*(?:(\d+(?:/\d+)?)|([A-Za-z_][A-Za-z_0-9']*)|(\^)|(\*)|([+-])|(\S))")


def parse_poly(ring: PolyRing, text: str) -> Polynomial:
    """Parse ``x^2 - 1/2*y*z`` style input into a canonical polynomial."""
    if not text or not text.strip():
        raise PolyError("empty polynomial")
    tokens = []
    for m in _TOKEN.finditer(text):
        num, name, caret, star, sign, bad = m.groups()
        if bad is not None:
            raise PolyError(f"unexpected character {bad!r} in {text!r}")
        if num is not None:
            tokens.append(("num", num))
        elif name is not None:
            tokens.append(("var", name))
        elif caret:
            tokens.append(("^", caret))
        elif star:
            tokens.append(("*", star))
        elif sign:
            tokens.append(("sign", sign))
    pos = 0
    f = ring.field
    n = ring.nvars
    acc: dict = {}

    def peek():
        return tokens[pos] if pos < len(tokens) else (None, None)

    first = True
    while pos < len(tokens) or first:
        sign = 1
        kind, val = peek()
        if kind == "sign":
            sign = -1 if val == "-" else 1
            pos += 1
        elif not first:
            raise PolyError(f"expected + or - in {text!r}")
        first = False
        coeff = f(sign)
        exps = [0] * n
        expect_factor = True
        while expect_factor:
            kind, val = peek()
            if kind == "num":
                pos += 1
                try:
                    c = f(Fraction(val))
                except (ZeroDivisionError, ValueError) as err:
                    raise PolyError(f"malformed rational {val!r}") from err
                coeff = f.reduce(coeff * c)
            elif kind == "var":
                pos += 1
                if val not in ring.names:
                    raise PolyError(f"unknown variable {val!r}")
                k = 1
                if peek()[0] == "^":
                    pos += 1
                    kind2, val2 = peek()
                    if kind2 != "num" or "/" in val2 or int(val2) < 1:
                        raise PolyError(f"bad exponent in {text!r}")
                    pos += 1
                    k = int(val2)
                exps[ring.names.index(val)] += k
            else:
                raise PolyError(f"expected a factor in {text!r}")
            if peek()[0] == "*":
                pos += 1
            else:
                expect_factor = False
        key = tuple(exps)
        s = f.reduce(acc.get(key, 0) + coeff)
        if s:
            acc[key] = s
        else:
            acc.pop(key, None)
    return Polynomial(ring, acc)


def poly_arith(op: str, a: Polynomial, b=None) -> Polynomial:
    """Dispatch ``add|sub|mul|pow|scale`` by name (used by the CLI)."""
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    if op == "pow":
        return a ** b
    if op == "scale":
        return a.scale(b)
    raise PolyError(f"unknown operation {op!r}")
