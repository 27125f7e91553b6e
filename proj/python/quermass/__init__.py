"""Exact relative quermassintegrals of convex polytopes in the plane and in space.

Rational numbers are returned as :class:`fractions.Fraction`; inputs may be
``Fraction``, ``int`` or rational literal strings such as ``"3/4"``.
"""

import json
from fractions import Fraction

from . import _quermass as _q
from ._quermass import Polytope, QuermassError, is_homothetic, is_summand, load_body, minkowski_sum

__all__ = [
    "Polytope",
    "QuermassError",
    "cross_check",
    "error_code",
    "f_ij",
    "is_concave",
    "is_convex",
    "is_homothetic",
    "is_log_concave",
    "is_summand",
    "load_body",
    "minkowski_difference",
    "minkowski_sum",
    "parallel_body_seq",
    "polytope",
    "quermassintegrals",
    "relative_inradius",
    "run_campaign",
    "scale",
    "steiner_eval",
    "translate",
    "verify_pair",
    "verify_sequence",
    "vertices",
    "volume",
]


def _lit(x):
    if isinstance(x, Fraction):
        return f"{x.numerator}/{x.denominator}"
    if isinstance(x, bool) or not isinstance(x, (int, str)):
        raise TypeError(f"expected Fraction, int or str, got {type(x).__name__}")
    return str(x)


def _lits(xs):
    return [_lit(x) for x in xs]


def _fracs(xs):
    return [Fraction(x) for x in xs]


def _verdict(d):
    return {
        "holds": d["holds"],
        "witnesses": [(list(idx), Fraction(s)) for idx, s in d["witnesses"]],
        "equality_indices": list(d["equality_indices"]),
    }


def error_code(exc):
    """Code name carried by a QuermassError, e.g. ``"ParseError"``."""
    return str(exc).split(":", 1)[0]


def polytope(points, dim=None):
    points = [list(p) for p in points]
    if dim is None:
        dim = len(points[0]) if points else 0
    return Polytope([_lits(p) for p in points], dim)


def vertices(p):
    return [_fracs(v) for v in p.vertices]


def scale(p, factor):
    return _q.scale(p, _lit(factor))


def translate(p, offset):
    return _q.translate(p, _lits(offset))


def volume(p):
    return Fraction(_q.volume(p))


def minkowski_difference(k, e):
    return _q.minkowski_difference(k, e)


def relative_inradius(k, e):
    return Fraction(_q.relative_inradius(k, e))


def quermassintegrals(k, e):
    return _fracs(_q.quermassintegrals(k, e))


def steiner_eval(seq, lam):
    return Fraction(_q.steiner_eval(_lits(seq), _lit(lam)))


def parallel_body_seq(mseq, lam):
    return _fracs(_q.parallel_body_seq(_lits(mseq), _lit(lam)))


def f_ij(seq, i, j):
    return Fraction(_q.f_ij(_lits(seq), i, j))


def is_concave(seq):
    return _verdict(_q.is_concave(_lits(seq)))


def is_convex(seq):
    return _verdict(_q.is_convex(_lits(seq)))


def is_log_concave(seq):
    return _verdict(_q.is_log_concave(_lits(seq)))


def _reports(text):
    out = json.loads(text)["reports"]
    for r in out:
        r["slack"] = Fraction(r["slack"])
        r["values"] = {k: Fraction(v) for k, v in r["values"].items()}
    return out


def verify_pair(m, e, checks="all"):
    """Reports for K = M + E over every admissible index tuple."""
    return _reports(_q.verify_pair(m, e, checks))


def verify_sequence(kseq, dim_m=None, checks="all"):
    return _reports(_q.verify_sequence(_lits(kseq), dim_m, checks))


def run_campaign(dim, trials, seed, mode="summand", checks="all"):
    return json.loads(_q.run_campaign(dim, trials, seed, mode, checks))


def cross_check(k, e, samples, seed):
    return json.loads(_q.cross_check(k, e, samples, seed))
