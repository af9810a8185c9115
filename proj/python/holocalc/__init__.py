"""Exact exterior calculus, G2/Spin(7) structure checks and example catalogs."""

import json as _json

from . import _core
from ._core import DomainError, canonical_zeta, check_names, cone_phi, cone_psi, l2_cohomology, suite_names, wcp2_from_weights

__all__ = [
    "DomainError", "an_record", "canonical_zeta", "catalog", "check_names", "cli", "cone_phi", "cone_psi",
    "decompose", "indicial_roots", "l2_cohomology", "phi0", "psi0", "run_check", "run_suite", "s3r4_action",
    "suite_names", "verify", "wcp2_from_weights",
]


def run_suite(suite, seed=0):
    return _json.loads(_core.run_suite(suite, seed))


def run_check(name, seed=0):
    return _json.loads(_core.run_check(name, seed))


def verify(suite="all", seed=0):
    """Records for one suite or every suite."""
    suites = suite_names() if suite == "all" else [suite]
    return [r for s in suites for r in run_suite(s, seed)]


def cli(*args):
    """Runs a command line; returns (exit_code, stdout, stderr)."""
    return _core.cli_run([str(a) for a in args])


def indicial_roots(delta, m):
    """(λ₊, λ₋) of λ(λ + m − 2) = δ as dicts with exact text and a float."""
    p, q, pf, qf = _core.indicial_roots(str(delta), m)
    return {"exact": p, "approx": pf}, {"exact": q, "approx": qf}


def phi0():
    return _json.loads(_core.phi0())


def psi0():
    return _json.loads(_core.psi0())


def decompose(form):
    """Type components of a 2- or 3-form given in the form JSON encoding."""
    text = form if isinstance(form, str) else _json.dumps(form)
    return _json.loads(_core.decompose(text))


def an_record(n, zeta):
    return _json.loads(_core.an_record(n, list(zeta)))


def s3r4_action(p1, p2, q1, q2):
    return _json.loads(_core.s3r4_action(p1, p2, q1, q2))


def catalog(family, bound):
    return _json.loads(_core.catalog(family, bound))
