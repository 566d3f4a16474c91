"""Worked examples replayed by ``selflinkage selftest``."""
from __future__ import annotations

import time
from dataclasses import dataclass

from .contact33 import NoRootInField, classify33, cube_contact, demo33, example33, hilbert_burch_check
from .idealcalc import Ideal, codim, hilbert
from .polymatrix import GradedProfile, PolyMatrix
from .polyring import GF, QQ, PolyRing
from .selflink import (SymmetricDatum, compare_linkages, construct, euler_char,
                       parity_check, verify_selflinked)


@dataclass
class CaseResult:
    name: str
    passed: bool
    detail: str
    seconds: float

    def to_dict(self) -> dict:
        return {"name": self.name, "passed": self.passed, "detail": self.detail,
                "seconds": round(self.seconds, 4)}


def _double_line(names):
    R = PolyRing(QQ, tuple(names))
    x, y = R.gen("x"), R.gen("y")
    return R, x, y, Ideal(R, [x ** 2, x * y, y ** 2])


def _example33_linkages():
    out = []
    for names in ("xyz", "xyzw"):
        R, x, y, C = _double_line(names)
        for f, g in ((x ** 2, y ** 3), (x * y, x ** 3 - y ** 3)):
            cert = verify_selflinked(C, f, g)
            out.append(cert.verdict and cert.colon_generators == C.reduced_generators())
    return all(out), f"{sum(out)}/4 linkages verified"


def _hilbert_burch():
    R = PolyRing(QQ, tuple("xyz"))
    I, A, B = example33(R)
    data = hilbert(I)
    ok = hilbert_burch_check(A, B, I) and data.degree == 3 and codim(I) == 2
    return ok, f"degree {data.degree}, codim {codim(I)}"


def _classify():
    R, x, y, _ = _double_line("xyz")
    got = [classify33(x ** 2, y ** 3).case, classify33(x ** 2, x * y ** 2).case,
           classify33(x * y, x ** 3 - y ** 3).case]
    return got == ["i", "rejected", "ii"], f"cases {got}"


def _contact_gf11():
    sol = cube_contact(GF(11), 0, 1)
    ok = sol.verified and sol.a == 5 and sol.xi == (2, 2) and sol.eta == (5, 1) and sol.M == (10, 0)
    return ok, f"a={sol.a}, xi={sol.xi}, eta={sol.eta}, M={sol.M}"


def _contact_qq_missing_root():
    try:
        cube_contact(QQ, 0, 1)
    except NoRootInField as err:
        return True, str(err)
    return False, "expected NoRootInField"


def _demo(field, L0, L1):
    def run():
        rep = demo33(field, L0, L1)
        return rep.verdict and rep.f_not_in_hg, f"h = {rep.h}, g_hat = {rep.g_hat}"
    return run


def _remark32():
    R = PolyRing(QQ, tuple("uvw"))
    u, v, _ = R.gens
    rep = compare_linkages(Ideal(R, [u, v]), u ** 2 - v ** 2, v, u)
    return not rep.equal, f"(u^2 - v^2, v) vs (u^2 - v^2, u): equal={rep.equal}"


def _construct_r1():
    R = PolyRing(QQ, tuple("xyz"))
    x, y, _ = R.gens
    datum = SymmetricDatum(R, GradedProfile((1,), 2, 3), PolyMatrix.column(R, [x]), PolyMatrix(R, [[y ** 3]]))
    c = construct(datum)
    return c.f == -x ** 2 and c.g == y ** 3 and c.certificate.verdict, f"f = {c.f}, g = {c.g}"


def _construct_r3():
    R = PolyRing(QQ, tuple("xyz"))
    x, y, _ = R.gens
    alpha = PolyMatrix.parse(R, "[0, x, 0; x, 0, y; 0, y, -x]")
    datum = SymmetricDatum(R, GradedProfile((2, 2, 2), 2, 3), PolyMatrix.column(R, [1, 0, 0]), alpha)
    c = construct(datum)
    ok = c.g == x ** 3 and c.f == y ** 2 and c.I_C == Ideal(R, [x ** 2, x * y, y ** 2]) and c.certificate.verdict
    return ok, f"f = {c.f}, g = {c.g}"


def _parity():
    R = PolyRing(QQ, tuple(f"x{i}" for i in range(6)))
    data = hilbert(Ideal(R, [R.gens[0] ** 2, R.gens[1] ** 4]))
    rep = parity_check(5, 4, 4, data)
    vac = parity_check(3, 2, 3, hilbert(Ideal(PolyRing(QQ, tuple("xyzw")), ["x", "y"])))
    ok = rep.status == "holds" and rep.residues == (0, 0) and rep.rho == 1 and vac.status == "vacuous"
    return ok, f"status {rep.status}, rho {rep.rho}, residues {rep.residues}"


def _euler():
    vals = [euler_char(5, 1), euler_char(5, -3), euler_char(5, -7)]
    return vals == [6, 0, -6], f"{[str(v) for v in vals]}"


CASES = [
    ("example33-linkages", _example33_linkages),
    ("hilbert-burch", _hilbert_burch),
    ("classify33", _classify),
    ("contact-gf11-L=y", _contact_gf11),
    ("contact-qq-L=y-no-root", _contact_qq_missing_root),
    ("demo33-gf11-L=y", _demo(GF(11), 0, 1)),
    ("demo33-qq-L=x", _demo(QQ, 1, 0)),
    ("remark32", _remark32),
    ("construct-r1", _construct_r1),
    ("construct-r3", _construct_r3),
    ("parity-ci24-p5", _parity),
    ("euler-char", _euler),
]


def run_corpus() -> list:
    results = []
    for name, fn in CASES:
        t0 = time.perf_counter()
        try:
            ok, detail = fn()
        except Exception as err:  # a crash is a failed case, not a crashed run
            ok, detail = False, f"{type(err).__name__}: {err}"
        results.append(CaseResult(name, bool(ok), detail, time.perf_counter() - t0))
    return results
