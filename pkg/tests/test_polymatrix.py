from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from selflinkage.polymatrix import (GradedProfile, PolyMatrix, adjugate, border, check_graded, det,
                                    det_bareiss, maximal_minors, minors)
from selflinkage.idealcalc import Ideal
from selflinkage.polyring import GF, QQ, PolyError, make_ring

from oracles import leibniz_det, monomials

R = make_ring(QQ, ["x", "y", "z"])
x, y, z = R.gens
ALPHA = PolyMatrix.parse(R, "[0, x, 0; x, 0, y; 0, y, -x]")


def test_parse_and_shape():
    assert ALPHA.shape == (3, 3) and ALPHA.is_symmetric()
    assert ALPHA[1, 2] == y
    assert ALPHA.T == ALPHA
    with pytest.raises(PolyError):
        PolyMatrix.parse(R, "[x, y; z]")
    with pytest.raises(PolyError):
        PolyMatrix.parse(R, "[]")


def test_det_examples():
    assert det(PolyMatrix(R, [[x ** 2 + z]])) == x ** 2 + z
    assert det(PolyMatrix.parse(R, "[0, x; x, y^3]")) == -x ** 2
    assert det(ALPHA) == x ** 3
    assert det_bareiss(ALPHA) == x ** 3
    with pytest.raises(PolyError):
        det(PolyMatrix.parse(R, "[x, y]"))


def test_adjugate_examples():
    S = make_ring(QQ, ["a", "b", "c"])
    M = PolyMatrix.parse(S, "[a, b; b, c]")
    assert adjugate(M) == PolyMatrix.parse(S, "[c, -b; -b, a]")
    assert adjugate(PolyMatrix.identity(R, 3)) == PolyMatrix.identity(R, 3)
    assert ALPHA @ adjugate(ALPHA) == PolyMatrix.identity(R, 3).scale(x ** 3)
    assert adjugate(ALPHA) @ ALPHA == PolyMatrix.identity(R, 3).scale(x ** 3)


def test_maximal_minors_examples():
    A = PolyMatrix.parse(R, "[y, 0; -x, y; 0, -x]")
    got = maximal_minors(A.T)
    assert {p.monic() for p in got} == {y ** 2, x * y, x ** 2}
    assert {p.monic() for p in maximal_minors(PolyMatrix.parse(R, "[x, y^3]"))} == {y ** 3, x}
    lam = PolyMatrix.column(R, [1, 0, 0])
    fs = maximal_minors(lam.hstack(ALPHA))
    assert fs[0] == det(ALPHA)
    assert {p.monic() for p in fs} == {x ** 3, x * y, x ** 2, y ** 2}
    assert Ideal(R, fs) == Ideal(R, [x ** 2, x * y, y ** 2])
    with pytest.raises(PolyError):
        maximal_minors(ALPHA)


def test_minors_two_by_two():
    A = PolyMatrix.parse(R, "[y, 0; -x, y; 0, -x]")
    assert Ideal(R, minors(A, 2)) == Ideal(R, [x ** 2, x * y, y ** 2])


def test_border_examples():
    B = border(R.zero, PolyMatrix(R, [[x]]), PolyMatrix(R, [[y ** 3]]))
    assert B == PolyMatrix.parse(R, "[0, x; x, y^3]")
    lam = PolyMatrix.column(R, [1, 0, 0])
    B3 = border(R.zero, lam, ALPHA)
    assert B3.is_symmetric()
    expected = -(lam.T @ adjugate(ALPHA) @ lam)[0, 0]
    assert det(B3) == expected == y ** 2
    with pytest.raises(PolyError):
        border(R.zero, lam, PolyMatrix.parse(R, "[0, x, 0; y, 0, y; 0, y, -x]"))
    with pytest.raises(PolyError):
        border(R.zero, PolyMatrix.column(R, [1, 0]), ALPHA)


def test_check_graded_examples():
    rep = check_graded(GradedProfile((1,), 2, 3), PolyMatrix(R, [[x]]), PolyMatrix(R, [[y ** 3]]))
    assert rep.ok
    assert check_graded(GradedProfile((2, 2, 2), 2, 3), PolyMatrix.column(R, [1, 0, 0]), ALPHA).ok
    bad = check_graded(GradedProfile((1, 1), 2, 3))
    assert not bad.ok and not bad.possible
    assert GradedProfile((1, 1), 2, 3).twist_sum_target() == Fraction(7, 2)


def test_check_graded_violations_listed():
    rep = check_graded(GradedProfile((1,), 2, 3), PolyMatrix(R, [[x ** 2]]), PolyMatrix(R, [[y ** 3]]))
    assert not rep.ok and rep.possible and len(rep.violations) == 1
    # zero entries are exempt from degree conditions
    assert check_graded(GradedProfile((2, 2, 2), 2, 3), PolyMatrix.column(R, [0, 0, 1]), ALPHA).ok
    rep = check_graded(GradedProfile((1,), 2, 3), gamma=x)
    assert not rep.ok


def test_profile_degrees():
    prof = GradedProfile((2, 3, 4), 4, 5)
    assert prof.lambda_degree(0) == 2 and prof.alpha_degree(1, 2) == 2 and prof.gamma_degree == -1


# property tests

F = GF(31)
S = make_ring(F, ["x", "y", "z"])


@st.composite
def entries(draw, deg_max=2):
    deg = draw(st.integers(0, deg_max))
    mons = monomials(3, deg)
    cs = draw(st.lists(st.integers(0, 30), min_size=len(mons), max_size=len(mons)))
    return S.from_terms(dict(zip(mons, cs)))


@st.composite
def square(draw, max_n=4, symmetric=False):
    n = draw(st.integers(1, max_n))
    grid = [[None] * n for _ in range(n)]
    for i in range(n):
        for j in range(n):
            if symmetric and j < i:
                grid[i][j] = grid[j][i]
            else:
                grid[i][j] = draw(entries())
    return PolyMatrix(S, grid)


@settings(max_examples=30, deadline=None)
@given(square(), st.data())
def test_row_swap_and_repeat(M, data):
    n = M.rows
    if n < 2:
        return
    i = data.draw(st.integers(0, n - 1))
    j = data.draw(st.integers(0, n - 1).filter(lambda k: k != i))
    rows = list(M.entries)
    rows[i], rows[j] = rows[j], rows[i]
    assert det(PolyMatrix(S, rows)) == -det(M)
    rows = list(M.entries)
    rows[j] = rows[i]
    assert det(PolyMatrix(S, rows)).is_zero()


@settings(max_examples=30, deadline=None)
@given(square())
def test_laplace_bareiss_leibniz_agree(M):
    d = det(M)
    assert d == det_bareiss(M)
    assert d == leibniz_det(M)
    assert det(M.T) == d


@settings(max_examples=25, deadline=None)
@given(square(symmetric=True))
def test_adjugate_identity(M):
    d = det(M)
    I = PolyMatrix.identity(S, M.rows).scale(d)
    adj = adjugate(M)
    assert M @ adj == I and adj @ M == I


@settings(max_examples=25, deadline=None)
@given(square(max_n=3, symmetric=True), st.data())
def test_bordered_identity(alpha, data):
    lam = PolyMatrix.column(S, [data.draw(entries()) for _ in range(alpha.rows)])
    B = border(S.zero, lam, alpha)
    assert B.is_symmetric()
    assert det(B) == -(lam.T @ adjugate(alpha) @ lam)[0, 0]


@settings(max_examples=25, deadline=None)
@given(square(max_n=3), st.data())
def test_maximal_minor_signs(M, data):
    col = PolyMatrix.column(S, [data.draw(entries()) for _ in range(M.rows)])
    N = col.hstack(M)
    fs = maximal_minors(N)
    assert fs[0] == det(M)
    # expanding the stacked matrix [row_i; N] along its first row gives 0
    for i in range(N.rows):
        total = sum((N[i, j] * fs[j] for j in range(N.cols)), S.zero)
        assert total.is_zero()
