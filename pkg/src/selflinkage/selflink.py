"""Self-linkage verification and the symmetric determinantal construction.

C is self-linked through F = {f=0} and G = {g=0} when f, g lie in I_C,
(f, g) is a complete intersection and ``(f, g) : I_C = I_C``.  Conversely a
symmetric alpha with a column lambda produce such a pair: g = det(alpha) and
f = det of alpha bordered by lambda (and gamma in the corner).
"""
from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations_with_replacement
from math import factorial

from .idealcalc import HilbertData, Ideal, affine_dimension, codim, hilbert, ideal_colon, ideal_product
from .polymatrix import GradedProfile, PolyMatrix, border, check_graded, det, maximal_minors
from .polyring import CoefficientField, PolyError, PolyRing, Polynomial


class DegenerateDatum(PolyError):
    """Symmetric data whose minors do not cut out a codimension-2 scheme."""


class ImpossibleProfile(PolyError):
    """Twists and degrees that no integer data can satisfy."""


class LinkageFailed(PolyError):
    """A linkage handed to :func:`compare_linkages` does not verify."""


def _is_codim2_scheme(I: Ideal) -> bool:
    # the empty scheme has codim n+1 by convention, which is 2 in P^1
    if I.is_zero() or not I.is_homogeneous():
        return False
    return hilbert(I).dim >= 0 and codim(I) == 2


def _complete_intersection_codim(X: Ideal) -> int:
    if X.is_homogeneous():
        return codim(X)
    return X.ring.nvars - affine_dimension(X)


@dataclass
class SelfLinkCertificate:
    I_C: Ideal
    f: Polynomial
    g: Polynomial
    d: int
    m: int
    swapped: bool
    contains: bool
    regular_sequence: bool
    colon_equal: bool
    square_contained: bool
    colon_generators: list

    @property
    def verdict(self) -> bool:
        return self.contains and self.regular_sequence and self.colon_equal

    @property
    def inconsistent(self) -> bool:
        return self.colon_equal and not self.square_contained

    def to_dict(self) -> dict:
        return {
            "ring": str(self.I_C.ring),
            "order": self.I_C.ring.order,
            "ideal": [str(p) for p in self.I_C.gens],
            "f": str(self.f),
            "g": str(self.g),
            "d": self.d,
            "m": self.m,
            "swapped": self.swapped,
            "verdict": self.verdict,
            "contains": self.contains,
            "regular_sequence": self.regular_sequence,
            "colon_equal": self.colon_equal,
            "square_contained": self.square_contained,
            "colon_generators": [str(p) for p in self.colon_generators],
            "inconsistent": self.inconsistent,
        }


def square_containment(I_C: Ideal, f: Polynomial, g: Polynomial) -> bool:
    X = Ideal(I_C.ring, [f, g])
    return all(X.contains(p) for p in ideal_product(I_C, I_C).gens)


def verify_selflinked(I_C: Ideal, f: Polynomial, g: Polynomial) -> SelfLinkCertificate:
    """Check that C is self-linked through {f=0} and {g=0}."""
    f, g = I_C.ring(f), I_C.ring(g)
    if not f or not g:
        raise PolyError("f and g must be nonzero")
    swapped = f.degree() > g.degree()
    if swapped:
        f, g = g, f
    X = Ideal(I_C.ring, [f, g])
    contains = I_C.contains(f) and I_C.contains(g)
    regular = _complete_intersection_codim(X) == 2
    colon = ideal_colon(X, I_C)
    return SelfLinkCertificate(
        I_C=I_C, f=f, g=g, d=f.degree(), m=g.degree(), swapped=swapped,
        contains=contains, regular_sequence=regular,
        colon_equal=colon == I_C,
        square_contained=square_containment(I_C, f, g),
        colon_generators=colon.reduced_generators(),
    )


# -- the converse construction ---------------------------------------------

@dataclass
class SymmetricDatum:
    ring: PolyRing
    profile: GradedProfile
    lam: PolyMatrix
    alpha: PolyMatrix
    gamma: Polynomial = None

    def __post_init__(self):
        if self.gamma is None:
            self.gamma = self.ring.zero
        if not self.alpha.is_symmetric():
            raise PolyError("alpha must be symmetric")
        if self.gamma and self.profile.d != self.profile.m:
            raise ImpossibleProfile("gamma must vanish unless d = m")
        report = check_graded(self.profile, self.lam, self.alpha, self.gamma)
        if not report.ok:
            if not report.possible:
                raise ImpossibleProfile("; ".join(report.violations))
            raise PolyError("degree profile violated: " + "; ".join(report.violations))

    def to_dict(self) -> dict:
        return {
            "twists": list(self.profile.twists),
            "d": self.profile.d,
            "m": self.profile.m,
            "lambda": str(self.lam),
            "alpha": str(self.alpha),
            "gamma": str(self.gamma),
        }


@dataclass
class Construction:
    f: Polynomial
    g: Polynomial
    I_C: Ideal
    minors: list
    certificate: SelfLinkCertificate


def construct(datum: SymmetricDatum) -> Construction:
    ring = datum.ring
    g = det(datum.alpha)
    if not g:
        raise DegenerateDatum("det(alpha) = 0")
    f = det(border(datum.gamma, datum.lam, datum.alpha))
    mins = maximal_minors(datum.lam.hstack(datum.alpha))
    I_C = Ideal(ring, mins)
    if not _is_codim2_scheme(I_C):
        raise DegenerateDatum("degenerate datum: minors do not define a codimension-2 scheme")
    if not f:
        raise DegenerateDatum("degenerate datum: bordered determinant vanishes")
    return Construction(f, g, I_C, mins, verify_selflinked(I_C, f, g))


def minor_identity_check(lam: PolyMatrix, alpha: PolyMatrix, f: Polynomial, g: Polynomial) -> bool:
    """True iff every product f_i f_j of maximal minors of (lam | alpha) lies in (f, g)."""
    if lam.cols != 1 or lam.rows != alpha.rows:
        raise PolyError("lambda does not fit alpha")
    mins = maximal_minors(lam.hstack(alpha))
    X = Ideal(alpha.ring, [f, g])
    gb = X.groebner_basis()
    return all(gb.contains(a * b) for i, a in enumerate(mins) for b in mins[i:])


def profile_from_data(twists, lam: PolyMatrix, alpha: PolyMatrix, d=None, m=None) -> GradedProfile:
    """Read m off det(alpha) and solve 2*sum(a) = r*d + (r-1)*m for d."""
    twists = tuple(twists)
    r = len(twists)
    if m is None:
        g = det(alpha)
        if not g:
            raise DegenerateDatum("det(alpha) = 0")
        m = g.degree()
    if d is None:
        num = 2 * sum(twists) - (r - 1) * m
        if num % r:
            raise ImpossibleProfile(f"twists {list(twists)} admit no integer d with m = {m}")
        d = num // r
    return GradedProfile(twists, d, m)


def _homogeneous_random(ring: PolyRing, degree: int, rng: random.Random) -> Polynomial:
    if degree < 0:
        return ring.zero
    field = ring.field
    terms = {}
    for combo in combinations_with_replacement(range(ring.nvars), degree):
        e = [0] * ring.nvars
        for i in combo:
            e[i] += 1
        c = rng.randrange(field.p) if field.p else rng.randint(-5, 5)
        terms[tuple(e)] = c
    return ring.from_terms(terms)


def projective_ring(field: CoefficientField, n: int) -> PolyRing:
    names = "xyzw"[: n + 1] if n <= 3 else tuple(f"x{i}" for i in range(n + 1))
    return PolyRing(field, tuple(names))


def infer_degrees(twists, d=None, m=None) -> tuple:
    """Pick (d, m) with 2*sum(twists) = r*d + (r-1)*m and d <= m.

    Among several fits the smallest m > d wins (for r = 1, m = d + 1);
    pass d and m explicitly to override.
    """
    r = len(twists)
    if d is not None and m is not None:
        return d, m
    s2 = 2 * sum(twists)
    fits = []
    for dd in ([d] if d is not None else range(max(1, max(twists)), s2 + 1)):
        if r == 1:
            if dd != s2:
                continue
            mm = m if m is not None else dd + 1
        else:
            rest = s2 - r * dd
            if rest < 0 or rest % (r - 1):
                continue
            mm = rest // (r - 1)
            if m is not None and mm != m:
                continue
        if mm >= dd:
            fits.append((dd, mm))
    if not fits:
        raise ImpossibleProfile(f"no degrees (d, m) fit twists {list(twists)}")
    fits.sort(key=lambda t: (t[1] == t[0], t[1]))
    return fits[0]


def random_datum(field: CoefficientField, n: int, r: int, twists=None, seed: int = 0,
                 d: int | None = None, m: int | None = None, retries: int = 25) -> SymmetricDatum:
    """Seeded random symmetric data with the prescribed degree profile."""
    if twists is None:
        if d is None or m is None:
            raise ImpossibleProfile("give either twists or both d and m")
        target = Fraction(r * (d + m) - m, 2)
        if target.denominator != 1:
            raise ImpossibleProfile(f"no integer twists: their sum would be {target}")
        base, extra = divmod(int(target), r)
        twists = [base + (1 if i < extra else 0) for i in range(r)]
    twists = tuple(twists)
    if len(twists) != r:
        raise PolyError(f"expected {r} twists")
    d, m = infer_degrees(twists, d, m)
    profile = GradedProfile(twists, d, m)
    target = profile.twist_sum_target()
    if target.denominator != 1 or sum(twists) != target:
        raise ImpossibleProfile(f"twists {list(twists)} do not fit d={d}, m={m}")
    ring = projective_ring(field, n)
    rng = random.Random(seed)
    for _ in range(retries):
        lam = PolyMatrix.column(ring, [_homogeneous_random(ring, profile.lambda_degree(i), rng) for i in range(r)])
        grid = [[None] * r for _ in range(r)]
        for i in range(r):
            for j in range(i, r):
                grid[i][j] = grid[j][i] = _homogeneous_random(ring, profile.alpha_degree(i, j), rng)
        alpha = PolyMatrix(ring, grid)
        if not det(alpha):
            continue
        I_C = Ideal(ring, maximal_minors(lam.hstack(alpha)))
        if not _is_codim2_scheme(I_C):
            continue
        if not det(border(ring.zero, lam, alpha)):
            continue
        return SymmetricDatum(ring, profile, lam, alpha)
    raise DegenerateDatum(f"no admissible datum after {retries} attempts")


# -- parity ---------------------------------------------------------------

def euler_char(n: int, h: int) -> Fraction:
    """chi(O_{P^n}(h)) = (h+n)...(h+1)/n!."""
    if n < 1:
        raise PolyError("n must be positive")
    num = 1
    for j in range(1, n + 1):
        num *= h + j
    return Fraction(num, factorial(n))


@dataclass
class ParityReport:
    n: int
    d: int
    m: int
    status: str
    rho: int | None = None
    residues: tuple | None = None
    chi_values: dict = field(default_factory=dict)
    chi_sum: Fraction | None = None
    dm_even: bool = False

    def to_dict(self) -> dict:
        return {
            "n": self.n, "d": self.d, "m": self.m,
            "parity_status": self.status,
            "rho": self.rho,
            "residues": list(self.residues) if self.residues is not None else None,
            "chi": {k: [str(v) for v in vals] for k, vals in self.chi_values.items()},
            "chi_shift_sum": None if self.chi_sum is None else str(self.chi_sum),
            "dm_even": self.dm_even,
        }


def parity_check(n: int, d: int, m: int, C_data: HilbertData) -> ParityReport:
    """The two congruences mod 2, with chi(O_C(rho)) read off the Hilbert polynomial."""
    if d < 1 or m < 1:
        raise PolyError("d and m must be positive")
    if C_data.nvars != n + 1:
        raise PolyError(f"Hilbert data lives in P^{C_data.nvars - 1}, not P^{n}")
    dm_even = (d * m) % 2 == 0
    excess = d + m - n - 1
    if n % 4 != 1 or excess % 2:
        return ParityReport(n, d, m, "vacuous", dm_even=dm_even)
    rho = excess // 2
    chi_C = C_data.P(rho)
    if chi_C.denominator != 1:
        raise PolyError(f"Hilbert polynomial is not integral at {rho}")
    chi = euler_char(n, rho)
    chi_d, chi_m = euler_char(n, rho - d), euler_char(n, rho - m)
    r1 = int(chi - chi_d - chi_C) % 2
    r2 = int(chi - chi_m - chi_C) % 2
    status = "holds" if r1 == 0 and r2 == 0 else "fails"
    return ParityReport(
        n, d, m, status, rho, (r1, r2),
        {"d": (chi, chi_d, chi_C), "m": (chi, chi_m, chi_C)},
        chi_d + chi_m, dm_even)


# -- comparing two linkages sharing G ----------------------------------------

@dataclass
class LinkageComparison:
    first: SelfLinkCertificate
    second: SelfLinkCertificate
    equal: bool
    degree_hypothesis: bool

    def to_dict(self) -> dict:
        return {
            "verdict": self.equal,
            "equal": self.equal,
            "degree_hypothesis": self.degree_hypothesis,
            "first": self.first.to_dict(),
            "second": self.second.to_dict(),
        }


def compare_linkages(I_C: Ideal, g: Polynomial, f: Polynomial, h: Polynomial) -> LinkageComparison:
    """Compare (f, g) with (h, g) for two verified self-linkages sharing g.

    Only reports whether the two complete intersections agree; equality is
    not assumed even when deg f, deg h <= deg g.
    """
    ring = I_C.ring
    g, f, h = ring(g), ring(f), ring(h)
    first = verify_selflinked(I_C, f, g)
    second = verify_selflinked(I_C, h, g)
    for name, cert in (("(f, g)", first), ("(h, g)", second)):
        if not cert.verdict:
            raise LinkageFailed(f"C is not self-linked through {name}")
    equal = Ideal(ring, [f, g]) == Ideal(ring, [h, g])
    hyp = f.degree() <= g.degree() and h.degree() <= g.degree()
    return LinkageComparison(first, second, equal, hyp)
