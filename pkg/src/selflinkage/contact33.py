"""The double-line scheme (x^2, xy, y^2) and its self-linkages.

Covers the Hilbert-Burch data of (x, y)^2, the classification of the
linkages (f, g) of degrees (2, 3), the cubic contact problem
``y^3 + L x^2 = eta^3 + M xi^2``, and the resulting pair of distinct
complete intersections linking the same scheme.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import isqrt

from .idealcalc import Ideal
from .polymatrix import PolyMatrix, minors
from .polyring import CoefficientField, PolyError, PolyRing, Polynomial
from .selflink import SelfLinkCertificate, verify_selflinked


class NoRootInField(PolyError):
    """A root the construction needs does not exist in the coefficient field."""

    def __init__(self, what: str, field: CoefficientField):
        super().__init__(f"no {what} in {field}")
        self.what = what
        self.field = field


# -- roots -----------------------------------------------------------------

def _int_root(n: int, k: int) -> int | None:
    if n < 0:
        if k % 2 == 0:
            return None
        r = _int_root(-n, k)
        return None if r is None else -r
    r = isqrt(n) if k == 2 else round(n ** (1.0 / k))
    for c in (r - 1, r, r + 1):
        if c >= 0 and c ** k == n:
            return c
    if k != 2:
        # float guess can be off for very large n
        lo, hi = 0, 1 << (n.bit_length() // k + 1)
        while lo <= hi:
            mid = (lo + hi) // 2
            if mid ** k < n:
                lo = mid + 1
            elif mid ** k > n:
                hi = mid - 1
            else:
                return mid
    return None


def roots(field: CoefficientField, c, k: int) -> list:
    """All k-th roots of c in the field, in a fixed order.

    GF(p): exhaustive search, ascending.  QQ: exact perfect-power tests on
    numerator and denominator; the positive root comes first.
    """
    c = field(c)
    if field.is_prime_field:
        return [a for a in range(field.p) if pow(a, k, field.p) == c]
    c = Fraction(c)
    if c == 0:
        return [Fraction(0)]
    num = _int_root(c.numerator, k)
    den = _int_root(c.denominator, k)
    if num is None or den is None:
        return []
    r = Fraction(num, den)
    return [r, -r] if k % 2 == 0 else [r]


# -- Example 3.3 data --------------------------------------------------------

def _pair(ring: PolyRing, x: str, y: str):
    if ring.nvars < 3:
        raise PolyError("the example needs P^n with n >= 2, i.e. at least 3 variables")
    return ring.gen(x), ring.gen(y)


def example33(ring: PolyRing, x: str = "x", y: str = "y"):
    """The ideal (x^2, xy, y^2) with its Hilbert-Burch matrices A (3x2), B (1x3)."""
    X, Y = _pair(ring, x, y)
    I = Ideal(ring, [X ** 2, X * Y, Y ** 2])
    A = PolyMatrix(ring, [[Y, 0], [-X, Y], [0, -X]])
    B = PolyMatrix(ring, [[X ** 2, X * Y, Y ** 2]])
    return I, A, B


def hilbert_burch_check(A: PolyMatrix, B: PolyMatrix, I: Ideal) -> bool:
    if A.shape != (3, 2) or B.shape != (1, 3):
        raise PolyError(f"expected shapes (3, 2) and (1, 3), got {A.shape} and {B.shape}")
    if not (B @ A).is_zero():
        return False
    return Ideal(A.ring, minors(A, 2)) == I


# -- Claim 3.3.1 -----------------------------------------------------------------

def quadratic_rank(q: Polynomial, x: str = "x", y: str = "y") -> int:
    """Rank of a binary quadratic form in the designated pair (char != 2)."""
    ring = q.ring
    ix, iy = ring.names.index(x), ring.names.index(y)

    def mono(a, b):
        e = [0] * ring.nvars
        e[ix], e[iy] = a, b
        return e

    if not q:
        return 0
    a, b, c = q.coefficient(mono(2, 0)), q.coefficient(mono(1, 1)), q.coefficient(mono(0, 2))
    disc = ring.field.reduce(b * b - 4 * a * c)
    return 2 if disc else 1


@dataclass
class Classification:
    case: str
    detail: str
    rank: int | None = None
    certificate: SelfLinkCertificate | None = None

    def to_dict(self) -> dict:
        return {
            "case": self.case,
            "detail": self.detail,
            "rank": self.rank,
            "verdict": self.case in ("i", "ii"),
            "certificate": None if self.certificate is None else self.certificate.to_dict(),
        }


def classify33(f: Polynomial, g: Polynomial, x: str = "x", y: str = "y") -> Classification:
    """Sort a linkage of (x, y)^2 into the two normal forms, or reject it."""
    ring = f.ring
    g = ring(g)
    X, Y = _pair(ring, x, y)
    for p in (f, g):
        if p.variables_used() - {x, y}:
            raise PolyError(f"{p} involves variables outside {{{x}, {y}}}")
    if not (f.is_homogeneous() and g.is_homogeneous()) or (f.degree(), g.degree()) != (2, 3):
        return Classification("rejected", "deg f = 2 and deg g = 3 are forced since deg C = 3")
    rank = quadratic_rank(f, x, y)
    cert = verify_selflinked(Ideal(ring, [X ** 2, X * Y, Y ** 2]), f, g)
    if not cert.contains:
        return Classification("rejected", "f and g must lie in I_C", rank, cert)
    if not cert.regular_sequence:
        return Classification("rejected", "(f,g) must be a regular sequence", rank, cert)
    if not cert.colon_equal:
        return Classification("rejected", "(f,g):I_C must equal I_C", rank, cert)
    if rank == 1:
        return Classification("i", "f is the square of a linear form", rank, cert)
    return Classification("ii", "f is a product of two independent linear forms", rank, cert)


# -- Claim 3.3.2 -----------------------------------------------------------------

@dataclass
class ContactSolution:
    field: CoefficientField
    L: tuple
    branch: str
    method: str
    xi: tuple
    eta: tuple
    M: tuple
    a: object = None
    verified: bool = False

    def to_dict(self) -> dict:
        def form(v):
            return [str(v[0]), str(v[1])]
        return {
            "field": str(self.field),
            "L": form(self.L),
            "branch": self.branch,
            "method": self.method,
            "a": None if self.a is None else str(self.a),
            "xi": form(self.xi),
            "eta": form(self.eta),
            "M": form(self.M),
            "verified": self.verified,
            "verdict": self.verified,
        }


def _cubic_coeffs(field, form):
    """(x^3, x^2y, xy^2, y^3) coefficients of form^3 for form = (a, b)."""
    a, b = form
    r = field.reduce
    return (r(a ** 3), r(3 * a * a * b), r(3 * a * b * b), r(b ** 3))


def _m_xi2(field, M, xi):
    m0, m1 = M
    s0, s1 = xi
    r = field.reduce
    return (r(m0 * s0 * s0), r(2 * m0 * s0 * s1 + m1 * s0 * s0),
            r(m0 * s1 * s1 + 2 * m1 * s0 * s1), r(m1 * s1 * s1))


def contact_identity_holds(field, L, xi, eta, M) -> bool:
    """Coefficientwise check of y^3 + L x^2 = eta^3 + M xi^2."""
    lhs = (field(L[0]), field(L[1]), field(0), field(1))
    e, q = _cubic_coeffs(field, eta), _m_xi2(field, M, xi)
    return all(field.reduce(l - a - b) == 0 for l, a, b in zip(lhs, e, q))


def _independent(field, u, v) -> bool:
    return field.reduce(u[0] * v[1] - u[1] * v[0]) != 0


def _check(sol: ContactSolution) -> ContactSolution:
    """Re-verify the identity coefficientwise and as polynomials, plus independence."""
    f = sol.field
    ok = (contact_identity_holds(f, sol.L, sol.xi, sol.eta, sol.M)
          and _independent(f, (1, 0), sol.xi)
          and _independent(f, sol.xi, sol.eta))
    if ok:
        ring = PolyRing(f, ("x", "y"))
        x, y = ring.gens
        lin = lambda v: x.scale(v[0]) + y.scale(v[1])  # noqa: E731
        ok = y ** 3 + lin(sol.L) * x ** 2 == lin(sol.eta) ** 3 + lin(sol.M) * lin(sol.xi) ** 2
    sol.verified = ok
    return sol


def _branch_formulas(field: CoefficientField, L0, L1):
    """Closed-form solutions; yields candidates in a fixed order."""
    inv = field.inv
    r = field.reduce
    if L0:
        cube = roots(field, L0, 3)
        if not cube:
            raise NoRootInField(f"cube root of {L0}", field)
        R1 = cube[0]
        t = r(L1 * inv(3 * L0))
        eta = (R1, r(R1 * t))
        xi = (field(0), field(1))
        M = (r(-L1 * L1 * inv(3 * L0)), r(1 - L1 ** 3 * inv(27 * L0 * L0)))
        yield "L0!=0", None, xi, eta, M
        return
    if not L1:
        yield "L=0", None, (field(1), field(1)), (field(0), field(1)), (field(0), field(0))
        return
    sqrt3 = roots(field, 3, 2)
    if not sqrt3:
        raise NoRootInField("square root of 3", field)
    tried_square = False
    for s in sqrt3:
        for sign in (1, -1):
            denom = r(3 + sign * 2 * s)
            if not denom:
                continue
            tried_square = True
            for a in roots(field, r(L1 * inv(denom)), 2):
                if not a:
                    continue
                for R2 in roots(field, inv(r(12 * a)), 2):
                    xi = (r(R2 * (3 * a * a - L1)), r(R2 * 6 * a))
                    yield "L0=0,L1!=0", a, xi, (a, field(1)), (field(-1), field(0))
    if tried_square:
        raise NoRootInField(f"square root of L1/(3 -/+ 2*sqrt(3)) with a square root of 1/(12a), L1 = {L1}", field)


def _tangent_search(field: CoefficientField, L0, L1):
    """Complete search over GF(p): xi = y + s*x, eta with eta(1, -s) = u != 0.

    xi^2 divides y^3 + L x^2 - eta^3 iff that cubic vanishes doubly at
    (1, -s), i.e. u^3 = L0 - L1*s - s^3 and 3*e1*u^2 = 3*s^2 + L1.
    """
    r = field.reduce
    for s in field.elements():
        c = r(L0 - L1 * s - s ** 3)
        for u in roots(field, c, 3):
            if not u:
                continue
            e1 = r((3 * s * s + L1) * field.inv(3 * u * u))
            e0 = r(u + e1 * s)
            xi = (s, field(1))
            eta = (e0, e1)
            # M xi^2 = y^3 + L x^2 - eta^3, read off the x^3 and y^3 coefficients
            m1 = r(1 - e1 ** 3)
            if s:
                m0 = r((L0 - e0 ** 3) * field.inv(s * s))
            else:
                # xi = y: M xi^2 has no x^3 term, match x*y^2 instead
                m0 = r(-3 * e0 * e1 * e1)
            yield xi, eta, (m0, m1)


def cube_contact(field: CoefficientField, L0, L1) -> ContactSolution:
    """Linear forms xi, eta, M with ``y^3 + L x^2 = eta^3 + M xi^2``.

    The closed-form branch for L is tried first.  Over a prime field, if a
    root it needs is missing, a complete search over the tangency point
    of xi takes over; only when that also fails is NoRootInField raised.
    """
    if field.is_prime_field and field.p == 3:
        raise PolyError("characteristic 3 is not supported")
    L0, L1 = field(L0), field(L1)
    L = (L0, L1)
    missing = None
    try:
        for branch, a, xi, eta, M in _branch_formulas(field, L0, L1):
            sol = _check(ContactSolution(field, L, branch, "formula", xi, eta, M, a))
            if sol.verified:
                return sol
    except NoRootInField as err:
        missing = err
    if field.is_prime_field:
        branch = "L0!=0" if L0 else ("L=0" if not L1 else "L0=0,L1!=0")
        for xi, eta, M in _tangent_search(field, L0, L1):
            sol = _check(ContactSolution(field, L, branch, "search", xi, eta, M))
            if sol.verified:
                return sol
    if missing is not None:
        raise missing
    raise NoRootInField("solution of the contact equation", field)


# -- conditions a) - d) --------------------------------------------------------

@dataclass
class Demo33Report:
    field: CoefficientField
    L: tuple
    f: Polynomial
    g: Polynomial
    g_hat: Polynomial
    h: Polynomial
    contact: ContactSolution
    not_generically_gorenstein: str
    linked_fg: SelfLinkCertificate
    linked_hg: SelfLinkCertificate
    h_ghat_is_xi2_eta3: bool
    f_not_in_hg: bool
    distinct: bool
    notes: list = field(default_factory=list)

    @property
    def verdict(self) -> bool:
        return (self.linked_fg.verdict and self.linked_hg.verdict
                and self.h_ghat_is_xi2_eta3 and self.distinct)

    def to_dict(self) -> dict:
        return {
            "field": str(self.field),
            "L": [str(self.L[0]), str(self.L[1])],
            "f": str(self.f), "g": str(self.g), "g_hat": str(self.g_hat), "h": str(self.h),
            "contact": self.contact.to_dict(),
            "a_not_generically_gorenstein": self.not_generically_gorenstein,
            "b_selflinked_f_g": self.linked_fg.verdict,
            "c_selflinked_h_ghat": self.linked_hg.verdict,
            "c_h_ghat_equals_xi2_eta3": self.h_ghat_is_xi2_eta3,
            "d_distinct": self.distinct,
            "d_f_not_in_h_g": self.f_not_in_hg,
            "verdict": self.verdict,
            "certificates": {"f_g": self.linked_fg.to_dict(), "h_ghat": self.linked_hg.to_dict()},
        }


def demo33(field: CoefficientField, L0, L1) -> Demo33Report:
    """Two different complete intersections (f, g), (h, g_hat) linking (x, y)^2 to itself."""
    L0, L1 = field(L0), field(L1)
    if not L0 and not L1:
        raise PolyError("L = 0 makes g_hat = g and h = xi^2 with no second linkage to compare")
    sol = cube_contact(field, L0, L1)
    ring = PolyRing(field, ("x", "y", "z"))
    x, y, _ = ring.gens

    def lin(v):
        return x.scale(v[0]) + y.scale(v[1])

    L, xi, eta = lin(sol.L), lin(sol.xi), lin(sol.eta)
    f, g = x ** 2, y ** 3
    g_hat = g + L * f
    h = xi ** 2
    C = Ideal(ring, [x ** 2, x * y, y ** 2])
    linked_fg = verify_selflinked(C, f, g)
    linked_hg = verify_selflinked(C, h, g_hat)
    same = Ideal(ring, [h, g_hat]) == Ideal(ring, [xi ** 2, eta ** 3])
    distinct = Ideal(ring, [f, g]) != Ideal(ring, [h, g_hat])
    f_out = not Ideal(ring, [h, g]).contains(f)
    return Demo33Report(
        field, (L0, L1), f, g, g_hat, h, sol,
        "documented, not computed: (x,y)^2 is not generically Gorenstein",
        linked_fg, linked_hg, same, f_out, distinct)
