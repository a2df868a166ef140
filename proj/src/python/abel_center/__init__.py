"""Exact center and Melnikov computations for Abel equations.

Polynomials are coefficient lists, lowest degree first. Coefficients may be
int, Fraction or rational strings such as "-3/4"; exact results come back
as Fraction.
"""

import json
from fractions import Fraction

from . import _core
from ._core import BlowUp, InputError, InvariantError, StepLimitExceeded

__version__ = _core.__version__

__all__ = [
    "BlowUp",
    "InputError",
    "InvariantError",
    "StepLimitExceeded",
    "ggs_certificate",
    "generate_master",
    "iterated_integral",
    "melnikov",
    "moments",
    "necessary_conditions",
    "pcc_check",
    "return_map",
    "right_factor",
    "run_cli",
    "transport",
    "universal_check",
    "verify_first_integral",
]


def _q(value):
    return str(Fraction(value))


def _poly(coeffs):
    return [_q(c) for c in coeffs]


def _fractions(values):
    return [Fraction(v) for v in values]


def _equation(species, interval):
    return json.dumps({"species": [_poly(a) for a in species], "interval": [_q(v) for v in interval]})


def return_map(species, interval=(0, 1), order=10, verify=False):
    """c_1..c_order of the return map of dy/dx + sum a_i y^(i+1) = 0."""
    return _fractions(json.loads(_core.return_map(_equation(species, interval), order, verify)))


def necessary_conditions(species, interval=(0, 1)):
    """(int a1, int a2, int a1 a2) over the interval."""
    return tuple(_fractions(json.loads(_core.necessary_conditions(_equation(species, interval)))))


def universal_check(species, interval=(0, 1), max_length=4, max_weight=0):
    return json.loads(_core.universal_check(_equation(species, interval), max_length, max_weight))


def iterated_integral(word, interval=(0, 1)):
    """Iterated integral of a word of forms, outermost first."""
    x0, x1 = interval
    return Fraction(_core.iterated_integral(json.dumps([_poly(f) for f in word]), _q(x0), _q(x1)))


def right_factor(P, d):
    """(W, left) with P = left o W and W monic of degree d without constant term, or None."""
    found = _core.right_factor(json.dumps(_poly(P)), d)
    if found is None:
        return None
    parts = json.loads(found)
    return _fractions(parts["W"]), _fractions(parts["left"])


def pcc_check(A, B, interval=(0, 1)):
    x0, x1 = interval
    return json.loads(_core.pcc_check(json.dumps(_poly(A)), json.dumps(_poly(B)), _q(x0), _q(x1)))


def moments(q, A, interval=(0, 1), kmax=10):
    """int q A^k over the interval for k = 0..kmax."""
    x0, x1 = interval
    return _fractions(json.loads(_core.moments(json.dumps(_poly(q)), json.dumps(_poly(A)), _q(x0), _q(x1), kmax)))


def melnikov(a, orders, interval=(0, 1), order=1, kmax=20, force=False):
    """M_order as a series in 1/h; orders is a list of (p_j, q_j) pairs."""
    system = {
        "a": _poly(a),
        "orders": [{"p": _poly(p), "q": _poly(q)} for p, q in orders],
        "interval": [_q(v) for v in interval],
    }
    return json.loads(_core.melnikov(json.dumps(system), order, kmax, force))


def verify_first_integral(foliation, integral):
    """foliation and integral in the JSON shapes used by the command line tool."""
    return _core.verify_first_integral(json.dumps(foliation), json.dumps(integral))


def generate_master(k, r=(0, 1)):
    return json.loads(_core.generate_master(k, json.dumps(_poly(r))))


def ggs_certificate(order=10, word_length=3):
    return json.loads(_core.ggs_certificate(order, word_length))


def transport(species, y0, interval=(0, 1), tol=1e-12, reverse=False):
    """Numeric y(x1) from y(x0) = y0, or the reverse."""
    return _core.transport(_equation(species, interval), y0, tol, reverse)


def run_cli(args):
    """(exit code, stdout, stderr) of the command line tool."""
    return _core.run_cli(list(args))
