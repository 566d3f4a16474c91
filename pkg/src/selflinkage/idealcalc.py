"""Ideals: products, intersections, colon ideals, and Hilbert data.

Intersections eliminate an auxiliary variable ``t`` from ``t*I + (1-t)*J``
under a block order; colon ideals are built on top of that via
``I : (f) = (I cap (f)) / f``.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from math import factorial
from typing import Iterable, Sequence

from .groebner import GroebnerBasis, buchberger, _divides
from .polyring import PolyError, PolyRing, Polynomial


class Ideal:
    """A generator list in a fixed ring with a lazily computed reduced basis."""

    def __init__(self, ring: PolyRing, generators: Iterable = ()):
        gens = []
        for g in generators:
            g = ring(g)
            if g and g not in gens:
                gens.append(g)
        self.ring = ring
        self.gens = tuple(gens)
        self._gb: GroebnerBasis | None = None

    @classmethod
    def parse(cls, ring: PolyRing, text: str) -> "Ideal":
        parts = [s for s in text.replace("(", "").replace(")", "").split(",") if s.strip()]
        return cls(ring, [ring.parse(s) for s in parts])

    def groebner_basis(self) -> GroebnerBasis:
        if self._gb is None:
            self._gb = buchberger(list(self.gens), self.ring)
        return self._gb

    def _check(self, other: "Ideal"):
        if other.ring != self.ring:
            raise PolyError(f"ring mismatch: {self.ring} vs {other.ring}")

    def contains(self, p) -> bool:
        return self.groebner_basis().contains(self.ring(p))

    __contains__ = contains

    def is_subset(self, other: "Ideal") -> bool:
        self._check(other)
        return all(other.contains(g) for g in self.gens)

    def __eq__(self, other):
        if not isinstance(other, Ideal):
            return NotImplemented
        self._check(other)
        return self.groebner_basis() == other.groebner_basis()

    def __hash__(self):
        return hash(self.groebner_basis())

    def is_zero(self) -> bool:
        return not self.gens

    def is_unit(self) -> bool:
        return self.groebner_basis().is_unit()

    def is_homogeneous(self) -> bool:
        return all(g.is_homogeneous() for g in self.gens)

    def reduced_generators(self) -> list:
        return list(self.groebner_basis().polys)

    def __add__(self, other: "Ideal") -> "Ideal":
        self._check(other)
        return Ideal(self.ring, self.gens + other.gens)

    def __mul__(self, other: "Ideal") -> "Ideal":
        return ideal_product(self, other)

    def __repr__(self):
        return f"Ideal({', '.join(map(str, self.gens))})"

    def __str__(self):
        return "(" + ", ".join(map(str, self.gens)) + ")"


def ideal_product(I: Ideal, J: Ideal) -> Ideal:
    I._check(J)
    return Ideal(I.ring, [a * b for a in I.gens for b in J.gens])


def _aux_name(names: Sequence[str]) -> str:
    n = 0
    while f"_t{n}" in names:
        n += 1
    return f"_t{n}"


def ideal_intersect(I: Ideal, J: Ideal) -> Ideal:
    """``I cap J`` by eliminating t from ``t*I + (1-t)*J``."""
    I._check(J)
    ring = I.ring
    if I.is_zero() or J.is_zero():
        return Ideal(ring, [])
    big = PolyRing(ring.field, (_aux_name(ring.names),) + ring.names, "elim:1")
    shift = list(range(1, ring.nvars + 1))
    t = big.gens[0]
    gens = [t * g.to_ring(big, shift) for g in I.gens]
    gens += [(1 - t) * g.to_ring(big, shift) for g in J.gens]
    gb = buchberger(gens)
    kept = []
    for p in gb:
        if all(m[0] == 0 for m in p.terms):
            kept.append(Polynomial(ring, {m[1:]: c for m, c in p.terms.items()}))
    result = Ideal(ring, kept)
    if ring.order == "grevlex":
        # the t-free part of a reduced basis in the block order is already
        # the reduced grevlex basis of the elimination ideal
        result._gb = GroebnerBasis(ring, sorted(result.gens, key=lambda p: ring.key(p.lead_monomial), reverse=True))
    return result


def _colon_principal(I: Ideal, f: Polynomial) -> Ideal:
    inter = ideal_intersect(I, Ideal(I.ring, [f]))
    return Ideal(I.ring, [g.exact_div(f) for g in inter.gens])


def ideal_colon(I: Ideal, J: Ideal) -> Ideal:
    """``{h : h*J subset I}`` as the intersection of the principal colons."""
    I._check(J)
    if J.is_zero():
        raise PolyError("colon by the zero ideal")
    result = None
    for f in J.gens:
        if I.contains(f):
            continue
        part = _colon_principal(I, f)
        result = part if result is None else ideal_intersect(result, part)
    if result is None:
        return Ideal(I.ring, [1])
    return result


# -- Hilbert series --------------------------------------------------------

def _minimalize(mons: Iterable[tuple]) -> list:
    mons = sorted(set(mons), key=sum)
    out: list = []
    for m in mons:
        if not any(_divides(g, m) for g in out):
            out.append(m)
    return out


def _poly_mul(a: list, b: list) -> list:
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return out


def _poly_add(a: list, b: list) -> list:
    n = max(len(a), len(b))
    return [(a[i] if i < len(a) else 0) + (b[i] if i < len(b) else 0) for i in range(n)]


def _trim(a: list) -> list:
    while len(a) > 1 and a[-1] == 0:
        a = a[:-1]
    return a


def hilbert_numerator(monomials: Sequence[tuple], nvars: int) -> list:
    """Numerator N(t) with HS(R/M) = N(t) / (1-t)^nvars for a monomial ideal M."""
    gens = _minimalize(monomials)
    if not gens:
        return [1]
    counts = [0] * nvars
    coprime = True
    seen = [False] * nvars
    for g in gens:
        for i, e in enumerate(g):
            if e:
                counts[i] += 1
                if seen[i]:
                    coprime = False
                seen[i] = True
    if coprime:
        out = [1]
        for g in gens:
            d = sum(g)
            out = _poly_mul(out, [1] + [0] * (d - 1) + [-1])
        return _trim(out)
    pivot = max(range(nvars), key=lambda i: (counts[i], -i))
    e = 1
    p = tuple(e if i == pivot else 0 for i in range(nvars))
    plus = [g for g in gens if not _divides(p, g)] + [p]
    colon = [tuple(max(0, a - b) for a, b in zip(g, p)) for g in gens]
    left = hilbert_numerator(plus, nvars)
    right = hilbert_numerator(colon, nvars)
    return _trim(_poly_add(left, [0] * e + right))


def _binom_poly(shift: int, k: int) -> list:
    """Coefficients (ascending in t) of binomial(t + shift, k)."""
    out = [Fraction(1)]
    for j in range(k):
        out = _poly_mul(out, [Fraction(shift - j), Fraction(1)])
    return [Fraction(c) / factorial(k) for c in out]


@dataclass(frozen=True)
class HilbertData:
    """Hilbert series and polynomial of ``R/I`` for a homogeneous ideal."""

    nvars: int
    numerator: tuple            # over (1-t)^nvars
    reduced_numerator: tuple    # over (1-t)^(dim+1)
    polynomial: tuple           # Fractions, ascending powers of t
    dim: int                    # projective dimension, -1 when empty
    degree: int
    stability_bound: int

    def P(self, t: int) -> Fraction:
        return sum((c * t ** i for i, c in enumerate(self.polynomial)), Fraction(0))

    def hilbert_function(self, t: int) -> int:
        n = self.nvars
        total = 0
        for i, c in enumerate(self.numerator):
            if c and t - i >= 0:
                total += c * _int_binom(t - i + n - 1, n - 1)
        return total

    def polynomial_str(self, var: str = "t") -> str:
        terms = []
        for i in reversed(range(len(self.polynomial))):
            c = self.polynomial[i]
            if not c:
                continue
            mono = "" if i == 0 else (var if i == 1 else f"{var}^{i}")
            if mono and c == 1:
                s = mono
            elif mono and c == -1:
                s = "-" + mono
            else:
                s = f"{c}*{mono}" if mono else str(c)
            terms.append(s)
        return " + ".join(terms).replace("+ -", "- ") or "0"


def _int_binom(a: int, b: int) -> int:
    if b < 0 or a < b or a < 0:
        return 0
    from math import comb
    return comb(a, b)


def hilbert(I: Ideal) -> HilbertData:
    if not I.is_homogeneous():
        raise PolyError("Hilbert data needs homogeneous generators")
    n = I.ring.nvars
    if I.is_unit():
        return HilbertData(n, (0,), (0,), (Fraction(0),), -1, 0, 0)
    gb = I.groebner_basis()
    num = hilbert_numerator(gb.leading_monomials, n)
    q = list(num)
    k = 0
    while k < n and sum(q) == 0:
        # synthetic division by (1 - t)
        out = []
        acc = 0
        for c in q[:-1]:
            acc += c
            out.append(acc)
        q = out or [0]
        k += 1
    D = n - k
    degree = sum(q)
    if D == 0:
        poly = (Fraction(0),)
        bound = len(q)
    else:
        acc = [Fraction(0)]
        for i, c in enumerate(q):
            if c:
                acc = _poly_add(acc, [c * x for x in _binom_poly(D - 1 - i, D - 1)])
        poly = tuple(_trim(acc))
        bound = len(q) - 1 - D + 1
    return HilbertData(n, tuple(num), tuple(q), poly, D - 1, degree, bound)


def affine_dimension(I: Ideal) -> int:
    """Krull dimension of ``R/I`` from the leading-term ideal; -1 if I = (1)."""
    if I.is_unit():
        return -1
    lms = [frozenset(i for i, e in enumerate(m) if e) for m in I.groebner_basis().leading_monomials]
    n = I.ring.nvars
    for size in range(n, -1, -1):
        for S in combinations(range(n), size):
            s = set(S)
            if not any(sup <= s for sup in lms):
                return size
    return 0


def codim(I: Ideal, n: int | None = None) -> int:
    """Codimension of the projective scheme of ``I`` in P^n (n+1 if empty)."""
    if n is None:
        n = I.ring.nvars - 1
    if n != I.ring.nvars - 1:
        raise PolyError(f"ring {I.ring} does not model P^{n}")
    data = hilbert(I)
    if data.dim < 0:
        return n + 1
    return n - data.dim
