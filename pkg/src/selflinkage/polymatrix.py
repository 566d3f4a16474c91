"""Polynomial matrices: determinants, adjugates, maximal minors, bordering.

Determinants use cofactor expansion memoized over column subsets; an
independent fraction-free (Bareiss) elimination is kept as a cross-check.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

from .polyring import PolyError, PolyRing, Polynomial


class PolyMatrix:
    """Row-major grid of polynomials over one ring."""

    def __init__(self, ring: PolyRing, rows: Sequence[Sequence]):
        grid = [[ring(e) for e in row] for row in rows]
        if not grid or not grid[0]:
            raise PolyError("a matrix needs at least one entry")
        if any(len(r) != len(grid[0]) for r in grid):
            raise PolyError("ragged matrix rows")
        self.ring = ring
        self.entries = tuple(tuple(r) for r in grid)

    @classmethod
    def parse(cls, ring: PolyRing, text: str) -> "PolyMatrix":
        """Parse ``[0, x, 0; x, 0, y; 0, y, -x]``."""
        body = text.strip()
        if body.startswith("[") and body.endswith("]"):
            body = body[1:-1]
        rows = [r for r in body.split(";")]
        if not body.strip():
            raise PolyError("empty matrix literal")
        return cls(ring, [[ring.parse(e) for e in r.split(",")] for r in rows])

    @classmethod
    def column(cls, ring: PolyRing, entries: Sequence) -> "PolyMatrix":
        return cls(ring, [[e] for e in entries])

    @classmethod
    def identity(cls, ring: PolyRing, n: int) -> "PolyMatrix":
        return cls(ring, [[1 if i == j else 0 for j in range(n)] for i in range(n)])

    @property
    def rows(self) -> int:
        return len(self.entries)

    @property
    def cols(self) -> int:
        return len(self.entries[0])

    @property
    def shape(self) -> tuple:
        return self.rows, self.cols

    def __getitem__(self, ij):
        i, j = ij
        return self.entries[i][j]

    def __eq__(self, other):
        if not isinstance(other, PolyMatrix):
            return NotImplemented
        return self.ring == other.ring and self.entries == other.entries

    def __hash__(self):
        return hash(self.entries)

    def transpose(self) -> "PolyMatrix":
        return PolyMatrix(self.ring, list(zip(*self.entries)))

    T = property(transpose)

    def is_symmetric(self) -> bool:
        return self.rows == self.cols and all(
            self.entries[i][j] == self.entries[j][i]
            for i in range(self.rows) for j in range(i))

    def __matmul__(self, other: "PolyMatrix") -> "PolyMatrix":
        if self.ring != other.ring:
            raise PolyError("ring mismatch")
        if self.cols != other.rows:
            raise PolyError(f"cannot multiply {self.shape} by {other.shape}")
        zero = self.ring.zero
        out = []
        for i in range(self.rows):
            row = []
            for j in range(other.cols):
                s = zero
                for k in range(self.cols):
                    a, b = self.entries[i][k], other.entries[k][j]
                    if a and b:
                        s = s + a * b
                row.append(s)
            out.append(row)
        return PolyMatrix(self.ring, out)

    def scale(self, p) -> "PolyMatrix":
        p = self.ring(p)
        return PolyMatrix(self.ring, [[e * p for e in r] for r in self.entries])

    def is_zero(self) -> bool:
        return all(not e for r in self.entries for e in r)

    def delete_column(self, j: int) -> "PolyMatrix":
        return PolyMatrix(self.ring, [r[:j] + r[j + 1:] for r in self.entries])

    def submatrix(self, rows: Sequence[int], cols: Sequence[int]) -> "PolyMatrix":
        return PolyMatrix(self.ring, [[self.entries[i][j] for j in cols] for i in rows])

    def hstack(self, other: "PolyMatrix") -> "PolyMatrix":
        if self.rows != other.rows:
            raise PolyError("row counts differ")
        return PolyMatrix(self.ring, [a + b for a, b in zip(self.entries, other.entries)])

    def __str__(self):
        return "[" + "; ".join(", ".join(map(str, r)) for r in self.entries) + "]"

    def __repr__(self):
        return f"PolyMatrix({self})"


def _require_square(M: PolyMatrix):
    if M.rows != M.cols:
        raise PolyError(f"matrix of shape {M.shape} is not square")


def det(M: PolyMatrix) -> Polynomial:
    """Laplace expansion along rows, memoized on the set of unused columns."""
    _require_square(M)
    n = M.rows
    E = M.entries
    memo: dict = {}

    def expand(row: int, cols: tuple) -> Polynomial:
        if row == n:
            return M.ring.one
        hit = memo.get(cols)
        if hit is not None:
            return hit
        total = M.ring.zero
        for pos, j in enumerate(cols):
            e = E[row][j]
            if not e:
                continue
            sub = expand(row + 1, cols[:pos] + cols[pos + 1:])
            if sub:
                term = e * sub
                total = total - term if pos % 2 else total + term
        memo[cols] = total
        return total

    return expand(0, tuple(range(n)))


def det_bareiss(M: PolyMatrix) -> Polynomial:
    """Fraction-free elimination with exact polynomial division."""
    _require_square(M)
    n = M.rows
    A = [list(r) for r in M.entries]
    sign = 1
    prev = M.ring.one
    for k in range(n - 1):
        if not A[k][k]:
            swap = next((i for i in range(k + 1, n) if A[i][k]), None)
            if swap is None:
                return M.ring.zero
            A[k], A[swap] = A[swap], A[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                A[i][j] = (A[i][j] * A[k][k] - A[i][k] * A[k][j]).exact_div(prev)
            A[i][k] = M.ring.zero
        prev = A[k][k]
    d = A[n - 1][n - 1]
    return d if sign > 0 else -d


def adjugate(M: PolyMatrix) -> PolyMatrix:
    """Transposed cofactor matrix, so ``M @ adj(M) = det(M) * Id``."""
    _require_square(M)
    n = M.rows
    if n == 1:
        return PolyMatrix(M.ring, [[1]])
    idx = list(range(n))
    out = [[None] * n for _ in range(n)]
    for i in range(n):
        for j in range(n):
            minor = det(M.submatrix([r for r in idx if r != j], [c for c in idx if c != i]))
            out[i][j] = -minor if (i + j) % 2 else minor
    return PolyMatrix(M.ring, out)


def maximal_minors(M: PolyMatrix) -> list:
    """For an r x (r+1) matrix: f_i = (-1)^(i+1) det(M without column i), i from 1."""
    if M.cols != M.rows + 1:
        raise PolyError(f"expected an r x (r+1) matrix, got {M.shape}")
    return [det(M.delete_column(i)) * (-1 if i % 2 else 1) for i in range(M.cols)]


def minors(M: PolyMatrix, k: int) -> list:
    """All k x k minors (row subsets outer, column subsets inner)."""
    from itertools import combinations
    return [det(M.submatrix(rs, cs))
            for rs in combinations(range(M.rows), k)
            for cs in combinations(range(M.cols), k)]


def border(gamma: Polynomial, lam: PolyMatrix, alpha: PolyMatrix) -> PolyMatrix:
    """The symmetric matrix ``[[gamma, lam^t], [lam, alpha]]``."""
    if not alpha.is_symmetric():
        raise PolyError("alpha must be symmetric")
    if lam.cols != 1 or lam.rows != alpha.rows:
        raise PolyError(f"lambda of shape {lam.shape} does not fit alpha {alpha.shape}")
    ring = alpha.ring
    lt = [lam.entries[i][0] for i in range(lam.rows)]
    rows = [[ring(gamma)] + lt]
    rows += [[lt[i]] + list(alpha.entries[i]) for i in range(alpha.rows)]
    return PolyMatrix(ring, rows)


# -- graded bookkeeping ----------------------------------------------------

@dataclass(frozen=True)
class GradedProfile:
    """Twists a_1..a_r of E = sum O(-a_i) and the degrees d, m of F and G."""

    twists: tuple
    d: int
    m: int

    @property
    def r(self) -> int:
        return len(self.twists)

    def twist_sum_target(self) -> Fraction:
        return Fraction(self.r * (self.d + self.m) - self.m, 2)

    def lambda_degree(self, i: int) -> int:
        return self.d - self.twists[i]

    def alpha_degree(self, i: int, j: int) -> int:
        return self.d + self.m - self.twists[i] - self.twists[j]

    @property
    def gamma_degree(self) -> int:
        return self.d - self.m


@dataclass
class GradedReport:
    ok: bool
    possible: bool
    violations: list = field(default_factory=list)

    def to_dict(self) -> dict:
        return {"ok": self.ok, "possible": self.possible, "violations": list(self.violations)}


def _degree_ok(p: Polynomial, deg: int) -> bool:
    return not p or (p.is_homogeneous() and p.degree() == deg)


def check_graded(profile: GradedProfile, lam: PolyMatrix | None = None,
                 alpha: PolyMatrix | None = None, gamma: Polynomial | None = None) -> GradedReport:
    """List every degree condition the data breaks; zero entries are exempt."""
    violations = []
    target = profile.twist_sum_target()
    possible = target.denominator == 1
    if not possible:
        violations.append(f"no integer twists: sum must be {target}")
    elif sum(profile.twists) != target:
        violations.append(f"sum of twists is {sum(profile.twists)}, expected {target}")
    r = profile.r
    if lam is not None:
        if lam.shape != (r, 1):
            violations.append(f"lambda has shape {lam.shape}, expected ({r}, 1)")
        else:
            for i in range(r):
                if not _degree_ok(lam[i, 0], profile.lambda_degree(i)):
                    violations.append(f"lambda[{i}] = {lam[i, 0]} should have degree {profile.lambda_degree(i)}")
    if alpha is not None:
        if alpha.shape != (r, r):
            violations.append(f"alpha has shape {alpha.shape}, expected ({r}, {r})")
        else:
            if not alpha.is_symmetric():
                violations.append("alpha is not symmetric")
            for i in range(r):
                for j in range(r):
                    if not _degree_ok(alpha[i, j], profile.alpha_degree(i, j)):
                        violations.append(
                            f"alpha[{i},{j}] = {alpha[i, j]} should have degree {profile.alpha_degree(i, j)}")
    if gamma is not None and gamma:
        if profile.gamma_degree < 0:
            violations.append(f"gamma must vanish when d < m (got {gamma})")
        elif not _degree_ok(gamma, profile.gamma_degree):
            violations.append(f"gamma = {gamma} should have degree {profile.gamma_degree}")
    return GradedReport(not violations, possible, violations)
