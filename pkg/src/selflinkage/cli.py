"""Command-line entry point.

Exit codes: 0 success or positive verdict, 1 negative verdict, 2 bad input,
3 unsupported request (missing root in the field, impossible degree profile).
"""
from __future__ import annotations

import argparse
import json
import logging
import sys
from pathlib import Path

from . import contact33, idealcalc, polymatrix, selflink
from .groebner import normal_form
from .idealcalc import Ideal
from .polymatrix import PolyMatrix
from .polyring import CoefficientField, PolyError, PolyRing
from .regression import run_corpus

log = logging.getLogger("selflinkage")

EXIT_OK, EXIT_NEGATIVE, EXIT_INPUT, EXIT_UNSUPPORTED = 0, 1, 2, 3

COMMANDS = ("gb", "nf", "colon", "intersect", "hilbert", "verify", "construct", "parity",
            "compare", "contact", "demo33", "minors", "det", "selftest")


class Session:
    """Ring plus named objects read from a session file."""

    def __init__(self, ring: PolyRing):
        self.ring = ring
        self.names: dict = {}

    @classmethod
    def load(cls, path: str, ring_text: str | None, order: str) -> "Session":
        ring = PolyRing.from_string(ring_text, order) if ring_text else None
        pending = []
        for lineno, raw in enumerate(Path(path).read_text().splitlines(), 1):
            line = raw.split("#", 1)[0].strip()
            if not line:
                continue
            word, _, rest = line.partition(" ")
            rest = rest.strip()
            if word == "ring":
                if ring is not None and ring_text is None:
                    raise PolyError(f"line {lineno}: only one ring per session")
                if ring_text is None:
                    ring = PolyRing.from_string(rest, order)
            elif word == "order":
                order = rest
                if ring is not None:
                    ring = ring.with_order(order)
            elif word in ("poly", "ideal", "matrix"):
                name, eq, body = rest.partition("=")
                if not eq:
                    raise PolyError(f"line {lineno}: expected '{word} NAME = ...'")
                pending.append((lineno, word, name.strip(), body.strip()))
            else:
                raise PolyError(f"line {lineno}: unknown declaration {word!r}")
        if ring is None:
            raise PolyError("session declares no ring")
        session = cls(ring)
        for lineno, kind, name, body in pending:
            if name in session.names:
                raise PolyError(f"line {lineno}: {name!r} defined twice")
            session.names[name] = (kind, session.expand(body))
        return session

    def expand(self, text: str) -> str:
        """Replace a bare defined name by its definition."""
        if text is None:
            return None
        hit = self.names.get(text.strip())
        return hit[1] if hit else text


def _ring(args, session):
    if session is not None:
        return session.ring
    return PolyRing.from_string(args.ring, args.order)


def _poly(ring, text, session):
    text = session.expand(text) if session else text
    if text is None:
        raise PolyError("missing polynomial argument")
    return ring.parse(text)


def _ideal(ring, text, session):
    text = session.expand(text) if session else text
    if text is None:
        raise PolyError("missing ideal argument")
    return Ideal.parse(ring, text)


def _matrix(ring, text, session):
    text = session.expand(text) if session else text
    if text is None:
        raise PolyError("missing matrix argument")
    return PolyMatrix.parse(ring, text)


def _gens(I):
    return [str(p) for p in I]


def _linear_pair(field, text):
    ring = PolyRing(field, ("x", "y"))
    L = ring.parse(text)
    if L and (not L.is_homogeneous() or L.degree() != 1):
        raise PolyError(f"L must be a linear form in x, y, got {L}")
    return L.coefficient((1, 0)), L.coefficient((0, 1))


def _cmd_gb(a, ring, s):
    I = _ideal(ring, a.ideal, s)
    return EXIT_OK, {"inputs": {"ideal": ", ".join(_gens(I.gens))},
                     "basis": _gens(I.groebner_basis())}


def _cmd_nf(a, ring, s):
    I = _ideal(ring, a.ideal, s)
    p = _poly(ring, a.poly, s)
    r = normal_form(p, I.groebner_basis())
    return EXIT_OK, {"inputs": {"ideal": ", ".join(_gens(I.gens)), "poly": str(p)},
                     "normal_form": str(r), "member": not r}


def _cmd_colon(a, ring, s):
    I, J = _ideal(ring, a.ideal, s), _ideal(ring, a.by, s)
    K = idealcalc.ideal_colon(I, J)
    return EXIT_OK, {"inputs": {"ideal": ", ".join(_gens(I.gens)), "by": ", ".join(_gens(J.gens))},
                     "colon_generators": _gens(K.reduced_generators())}


def _cmd_intersect(a, ring, s):
    I, J = _ideal(ring, a.ideal, s), _ideal(ring, a.other, s)
    K = idealcalc.ideal_intersect(I, J)
    return EXIT_OK, {"inputs": {"ideal": ", ".join(_gens(I.gens)), "with": ", ".join(_gens(J.gens))},
                     "generators": _gens(K.reduced_generators())}


def _hilbert_dict(data):
    return {"numerator": list(data.numerator), "reduced_numerator": list(data.reduced_numerator),
            "hilbert_polynomial": data.polynomial_str(), "dim": data.dim, "degree": data.degree,
            "stability_bound": data.stability_bound}


def _cmd_hilbert(a, ring, s):
    I = _ideal(ring, a.ideal, s)
    data = idealcalc.hilbert(I)
    out = _hilbert_dict(data)
    out["codim"] = idealcalc.codim(I)
    out["inputs"] = {"ideal": ", ".join(_gens(I.gens))}
    return EXIT_OK, out


def _cmd_verify(a, ring, s):
    I = _ideal(ring, a.ideal, s)
    f, g = _poly(ring, a.f, s), _poly(ring, a.g, s)
    cert = selflink.verify_selflinked(I, f, g)
    out = cert.to_dict()
    out["inputs"] = {"ideal": ", ".join(_gens(I.gens)), "f": str(f), "g": str(g)}
    return (EXIT_OK if cert.verdict else EXIT_NEGATIVE), out


def _cmd_construct(a, ring, s):
    twists = [int(t) for t in a.twists.replace(" ", "").split(",") if t]
    lam = _matrix(ring, a.lam, s)
    if lam.cols != 1 and lam.rows == 1:
        lam = lam.transpose()
    alpha = _matrix(ring, a.alpha, s)
    gamma = _poly(ring, a.gamma, s) if a.gamma else ring.zero
    profile = selflink.profile_from_data(twists, lam, alpha, a.d, a.m)
    datum = selflink.SymmetricDatum(ring, profile, lam, alpha, gamma)
    c = selflink.construct(datum)
    cert = c.certificate
    out = cert.to_dict()
    out.update({
        "f": str(c.f), "g": str(c.g), "minors": _gens(c.minors),
        "minor_identity": selflink.minor_identity_check(lam, alpha, c.f, c.g),
        "datum": datum.to_dict(),
        "inputs": {"twists": ",".join(map(str, twists)), "lambda": str(lam), "alpha": str(alpha),
                   "gamma": str(gamma), "d": str(profile.d), "m": str(profile.m)},
    })
    return (EXIT_OK if cert.verdict else EXIT_NEGATIVE), out


def _cmd_parity(a, ring, s):
    I = _ideal(ring, a.ideal, s)
    n = a.n if a.n is not None else ring.nvars - 1
    data = idealcalc.hilbert(I)
    rep = selflink.parity_check(n, a.d, a.m, data)
    out = rep.to_dict()
    out["verdict"] = rep.status != "fails"
    out["hilbert"] = _hilbert_dict(data)
    out["inputs"] = {"ideal": ", ".join(_gens(I.gens)), "n": str(n), "d": str(a.d), "m": str(a.m)}
    return (EXIT_NEGATIVE if rep.status == "fails" else EXIT_OK), out


def _cmd_compare(a, ring, s):
    I = _ideal(ring, a.ideal, s)
    g, f, h = _poly(ring, a.g, s), _poly(ring, a.f, s), _poly(ring, a.h, s)
    try:
        rep = selflink.compare_linkages(I, g, f, h)
    except selflink.LinkageFailed as err:
        return EXIT_NEGATIVE, {"verdict": False, "equal": None, "detail": str(err),
                               "inputs": {"ideal": ", ".join(_gens(I.gens)), "g": str(g), "f": str(f), "h": str(h)}}
    out = rep.to_dict()
    out["inputs"] = {"ideal": ", ".join(_gens(I.gens)), "g": str(g), "f": str(f), "h": str(h)}
    return (EXIT_OK if rep.equal else EXIT_NEGATIVE), out


def _cmd_contact(a, ring, s):
    field = CoefficientField.parse(a.field)
    L0, L1 = _linear_pair(field, a.L)
    sol = contact33.cube_contact(field, L0, L1)
    out = sol.to_dict()
    out["inputs"] = {"field": str(field), "L": a.L}
    return (EXIT_OK if sol.verified else EXIT_NEGATIVE), out


def _cmd_demo33(a, ring, s):
    field = CoefficientField.parse(a.field)
    L0, L1 = _linear_pair(field, a.L)
    rep = contact33.demo33(field, L0, L1)
    out = rep.to_dict()
    out["inputs"] = {"field": str(field), "L": a.L}
    return (EXIT_OK if rep.verdict else EXIT_NEGATIVE), out


def _cmd_minors(a, ring, s):
    M = _matrix(ring, a.matrix, s)
    if a.size is None:
        mins = polymatrix.maximal_minors(M)
    else:
        mins = polymatrix.minors(M, a.size)
    return EXIT_OK, {"inputs": {"matrix": str(M)}, "minors": _gens(mins),
                     "ideal": _gens(Ideal(ring, mins).reduced_generators())}


def _cmd_det(a, ring, s):
    M = _matrix(ring, a.matrix, s)
    out = {"inputs": {"matrix": str(M)}, "det": str(polymatrix.det(M))}
    if a.adjugate:
        out["adjugate"] = str(polymatrix.adjugate(M))
    return EXIT_OK, out


def _cmd_selftest(a, ring, s):
    results = run_corpus()
    ok = all(r.passed for r in results)
    return (EXIT_OK if ok else EXIT_NEGATIVE), {"verdict": ok, "cases": [r.to_dict() for r in results]}


HANDLERS = {name: globals()[f"_cmd_{name}"] for name in COMMANDS}


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--ring", default="QQ[x,y,z]", help='e.g. "QQ[x,y,z]" or "GF(11)[x,y]"')
    common.add_argument("--order", default="grevlex", choices=["grevlex", "lex"])
    common.add_argument("--json", action="store_true", help="print the report as JSON")
    common.add_argument("--file", help="session file with ring/poly/ideal/matrix declarations")
    common.add_argument("-v", "--verbose", action="store_true")

    parser = argparse.ArgumentParser(prog="selflinkage", description=__doc__,
                                     formatter_class=argparse.RawDescriptionHelpFormatter)
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, help_text):
        return sub.add_parser(name, parents=[common], help=help_text)

    p = add("gb", "reduced Groebner basis")
    p.add_argument("--ideal", required=True)
    p = add("nf", "normal form modulo an ideal")
    p.add_argument("--ideal", required=True)
    p.add_argument("--poly", required=True)
    p = add("colon", "colon ideal I : J")
    p.add_argument("--ideal", required=True)
    p.add_argument("--by", required=True)
    p = add("intersect", "intersection of two ideals")
    p.add_argument("--ideal", required=True)
    p.add_argument("--with", dest="other", required=True)
    p = add("hilbert", "Hilbert series, polynomial, degree, codimension")
    p.add_argument("--ideal", required=True)
    p = add("verify", "check that C is self-linked through f and g")
    p.add_argument("--ideal", required=True)
    p.add_argument("--f", required=True)
    p.add_argument("--g", required=True)
    p = add("construct", "build f, g and I_C from symmetric determinantal data")
    p.add_argument("--twists", required=True, help="comma separated a_1..a_r")
    p.add_argument("--lambda", dest="lam", required=True)
    p.add_argument("--alpha", required=True)
    p.add_argument("--gamma")
    p.add_argument("--d", type=int)
    p.add_argument("--m", type=int)
    p = add("parity", "the parity congruences for C in P^n")
    p.add_argument("--ideal", required=True)
    p.add_argument("--n", type=int)
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--m", type=int, required=True)
    p = add("compare", "compare (f, g) with (h, g) for two self-linkages")
    p.add_argument("--ideal", required=True)
    p.add_argument("--g", required=True)
    p.add_argument("--f", required=True)
    p.add_argument("--h", required=True)
    p = add("contact", "solve y^3 + L x^2 = eta^3 + M xi^2")
    p.add_argument("--field", required=True)
    p.add_argument("--L", required=True)
    p = add("demo33", "two distinct self-linkages of (x, y)^2")
    p.add_argument("--field", required=True)
    p.add_argument("--L", required=True)
    p = add("minors", "maximal (or k x k) minors of a matrix")
    p.add_argument("--matrix", required=True)
    p.add_argument("--size", type=int)
    p = add("det", "determinant (and adjugate) of a square matrix")
    p.add_argument("--matrix", required=True)
    p.add_argument("--adjugate", action="store_true")
    add("selftest", "replay the worked-example corpus")
    return parser


def _summary(doc: dict) -> str:
    lines = [f"{doc['command']}: exit {doc['exit_code']}"]
    if "error" in doc:
        lines.append(f"error: {doc['error']}")
        return "\n".join(lines)
    for key, val in doc["result"].items():
        if key in ("inputs", "certificates", "first", "second", "datum"):
            continue
        if isinstance(val, list) and val and isinstance(val[0], dict):
            for item in val:
                lines.append("  " + ", ".join(f"{k}={v}" for k, v in item.items()))
            continue
        lines.append(f"  {key}: {val}")
    return "\n".join(lines)


def run(argv) -> tuple:
    """Run one command; returns ``(exit_code, report_document)``."""
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        code = EXIT_INPUT if exc.code else EXIT_OK
        return code, {"command": None, "exit_code": code, "error": "bad arguments"}
    logging.basicConfig(level=logging.DEBUG if args.verbose else logging.WARNING,
                        stream=sys.stderr, format="%(name)s: %(message)s")
    doc = {"command": args.command}
    try:
        session = Session.load(args.file, None, args.order) if args.file else None
        ring = _ring(args, session)
        doc["ring"] = str(ring)
        doc["order"] = ring.order
        log.debug("running %s over %s", args.command, ring)
        code, result = HANDLERS[args.command](args, ring, session)
        doc["result"] = result
        doc["verdict"] = result.get("verdict", code == EXIT_OK)
    except (contact33.NoRootInField, selflink.ImpossibleProfile) as err:
        code = EXIT_UNSUPPORTED
        doc["error"] = str(err)
        doc["error_kind"] = type(err).__name__
    except (PolyError, ZeroDivisionError, ValueError, OSError) as err:
        code = EXIT_INPUT
        doc["error"] = str(err)
        doc["error_kind"] = type(err).__name__
    doc["exit_code"] = code
    return code, doc


def replay_argv(doc: dict) -> list:
    """Rebuild a command line from a report's printed inputs."""
    argv = [doc["command"], "--json"]
    if "ring" in doc and doc["command"] not in ("contact", "demo33"):
        argv += ["--ring", doc["ring"], "--order", doc.get("order", "grevlex")]
    flags = {"lambda": "--lambda", "with": "--with", "by": "--by"}
    for key, val in doc["result"].get("inputs", {}).items():
        if key == "gamma" and val == "0":
            continue
        argv += [flags.get(key, f"--{key}"), val]
    return argv


def main(argv=None) -> int:
    code, doc = run(sys.argv[1:] if argv is None else argv)
    if doc.get("command") is None:
        return code
    if "error" in doc:
        print(f"selflinkage {doc['command']}: {doc['error']}", file=sys.stderr)
    if "--json" in (sys.argv[1:] if argv is None else argv):
        print(json.dumps(doc, indent=2, sort_keys=True))
    else:
        print(_summary(doc))
    return code


if __name__ == "__main__":
    sys.exit(main())
