from fractions import Fraction

import pytest
from hypothesis import assume, given, settings, strategies as st

from selflinkage.contact33 import (NoRootInField, classify33, contact_identity_holds, cube_contact, demo33,
                                   example33, hilbert_burch_check, quadratic_rank, roots)
from selflinkage.idealcalc import Ideal, codim, hilbert
from selflinkage.polymatrix import PolyMatrix
from selflinkage.polyring import GF, QQ, PolyError, make_ring

from oracles import contact_solvable

R = make_ring(QQ, ["x", "y", "z"])
x, y, z = R.gens


def test_example33_data():
    I, A, B = example33(R)
    assert I == Ideal(R, [x ** 2, x * y, y ** 2])
    assert A == PolyMatrix.parse(R, "[y, 0; -x, y; 0, -x]")
    assert B == PolyMatrix.parse(R, "[x^2, x*y, y^2]")
    assert hilbert(I).degree == 3 and codim(I) == 2
    with pytest.raises(PolyError):
        example33(make_ring(QQ, ["x", "y"]))


def test_hilbert_burch_examples():
    I, A, B = example33(R)
    assert hilbert_burch_check(A, B, I)
    bent = PolyMatrix(R, [[x, 0], [-x, y], [0, -x]])
    assert not (B @ bent).is_zero()
    assert not hilbert_burch_check(bent, B, I)
    assert hilbert_burch_check(A.scale(R.const(5)), B, I)
    with pytest.raises(PolyError):
        hilbert_burch_check(A.T, B, I)


def test_classify_examples():
    assert classify33(x ** 2, y ** 3).case == "i"
    rej = classify33(x ** 2, x * y ** 2)
    assert rej.case == "rejected" and rej.detail == "(f,g) must be a regular sequence"
    assert classify33(x * y, x ** 3 - y ** 3).case == "ii"
    assert classify33(x ** 3, y ** 3).case == "rejected"
    with pytest.raises(PolyError):
        classify33(x * z, y ** 3)


def test_quadratic_rank():
    assert quadratic_rank(x ** 2) == 1
    assert quadratic_rank((x + 2 * y) ** 2) == 1
    assert quadratic_rank(x * y) == 2
    assert quadratic_rank(x ** 2 + y ** 2) == 2


def test_roots():
    assert roots(GF(11), 3, 2) == [5, 6]
    assert roots(GF(7), 3, 3) == []
    assert roots(GF(7), 1, 3) == [1, 2, 4]
    assert roots(QQ, Fraction(4, 9), 2) == [Fraction(2, 3), Fraction(-2, 3)]
    assert roots(QQ, -8, 3) == [-2]
    assert roots(QQ, 3, 2) == []
    assert roots(QQ, 10 ** 30, 3) == [10 ** 10]


def test_contact_examples():
    sol = cube_contact(QQ, 0, 0)
    assert sol.branch == "L=0" and sol.eta == (0, 1) and sol.M == (0, 0) and sol.verified
    sol = cube_contact(QQ, 1, 0)
    assert (sol.xi, sol.eta, sol.M) == ((0, 1), (1, 0), (0, 1)) and sol.branch == "L0!=0"
    sol = cube_contact(GF(11), 0, 1)
    assert sol.branch == "L0=0,L1!=0" and sol.method == "formula"
    assert sol.a == 5 and GF(11).reduce(sol.a ** 2) == 3
    assert sol.eta == (5, 1) and sol.M == (10, 0) and sol.xi == (2, 2)
    assert contact_identity_holds(GF(11), (0, 1), sol.xi, sol.eta, sol.M)


def test_contact_missing_root():
    with pytest.raises(NoRootInField) as info:
        cube_contact(QQ, 0, 1)
    assert "square root of 3" in str(info.value)
    with pytest.raises(NoRootInField):
        cube_contact(QQ, 2, 0)
    with pytest.raises(PolyError):
        cube_contact(GF(3), 1, 0)


def test_contact_identity_symbolic():
    ring = make_ring(GF(11), ["x", "y"])
    gx, gy = ring.gens
    sol = cube_contact(GF(11), 0, 1)
    lin = lambda v: gx.scale(v[0]) + gy.scale(v[1])
    assert gy ** 3 + lin(sol.L) * gx ** 2 == lin(sol.eta) ** 3 + lin(sol.M) * lin(sol.xi) ** 2


@pytest.mark.parametrize("p", [5, 7])
def test_contact_matches_bruteforce_small(p):
    F = GF(p)
    solvable = contact_solvable(p)
    for L0 in range(p):
        for L1 in range(p):
            try:
                sol = cube_contact(F, L0, L1)
            except NoRootInField:
                assert (L0, L1) not in solvable
                continue
            assert (L0, L1) in solvable and sol.verified
            assert contact_identity_holds(F, (L0, L1), sol.xi, sol.eta, sol.M)


def test_gf7_unsolvable_set():
    # snapshot of the brute-force oracle over GF(7)
    all_pairs = {(a, b) for a in range(7) for b in range(7)}
    assert all_pairs - contact_solvable(7) == {(0, 1), (0, 2), (0, 4), (3, 0), (4, 0)}


def test_demo33_examples():
    rep = demo33(GF(11), 0, 1)
    assert rep.verdict and rep.f_not_in_hg and rep.distinct and rep.h_ghat_is_xi2_eta3
    rep = demo33(QQ, 1, 0)
    assert rep.verdict
    ring = rep.f.ring
    assert rep.h == ring.parse("y^2") and rep.g_hat == ring.parse("x^3 + y^3")
    assert Ideal(ring, [rep.f, rep.g]) != Ideal(ring, [rep.h, rep.g_hat])
    with pytest.raises(NoRootInField):
        demo33(QQ, 0, 1)
    with pytest.raises(PolyError):
        demo33(QQ, 0, 0)


def test_demo33_keys():
    d = demo33(GF(11), 0, 1).to_dict()
    for key in ("a_not_generically_gorenstein", "b_selflinked_f_g", "c_selflinked_h_ghat",
                "c_h_ghat_equals_xi2_eta3", "d_distinct", "verdict"):
        assert key in d


# property tests

@settings(max_examples=40, deadline=None)
@given(st.sampled_from([5, 7, 11, 13, 101]), st.data())
def test_contact_solutions_satisfy_identity(p, data):
    F = GF(p)
    L0, L1 = data.draw(st.integers(0, p - 1)), data.draw(st.integers(0, p - 1))
    try:
        sol = cube_contact(F, L0, L1)
    except NoRootInField:
        return
    assert contact_identity_holds(F, (L0, L1), sol.xi, sol.eta, sol.M)
    assert F.reduce(sol.xi[1])  # x and xi independent
    assert F.reduce(sol.xi[0] * sol.eta[1] - sol.xi[1] * sol.eta[0])


@settings(max_examples=15, deadline=None)
@given(st.sampled_from([7, 11, 13]), st.integers(0, 12), st.integers(0, 12))
def test_demo33_consistency(p, L0, L1):
    F = GF(p)
    assume((L0 % p, L1 % p) != (0, 0))
    try:
        rep = demo33(F, L0, L1)
    except NoRootInField:
        return
    assert rep.h_ghat_is_xi2_eta3
    assert rep.linked_hg.verdict and rep.linked_fg.verdict
    assert rep.distinct and rep.f_not_in_hg


@settings(max_examples=40, deadline=None)
@given(st.sampled_from([QQ, GF(7), GF(101)]), st.tuples(*[st.integers(-5, 5)] * 4),
       st.tuples(*[st.integers(-3, 3)] * 3))
def test_rank_invariant_under_substitution(field, m, q):
    a, b, c, d = m
    assume(field.reduce(a * d - b * c))
    ring = make_ring(field, ["x", "y", "z"])
    gx, gy, _ = ring.gens
    form = gx ** 2 * q[0] + gx * gy * q[1] + gy ** 2 * q[2]
    assume(form)
    moved = form.substitute({"x": gx * a + gy * b, "y": gx * c + gy * d})
    assert quadratic_rank(moved) == quadratic_rank(form)
