"""Acceptance battery: ten criteria, one pass/fail line each.

Run with ``pytest -s tests/test_acceptance.py`` to see the per-criterion
lines; each test also enforces its wall-clock budget.
"""

import json
import math
import random
import time
from contextlib import contextmanager
from fractions import Fraction

from cuntzrep.basis import BasisLabel, RepSpec
from cuntzrep.operators import adjoint, apply, boson, fermion
from cuntzrep.scalars import RadicalScalar
from cuntzrep.states import StateVector
from cuntzrep.suites import check_all, run_suite

FOCK = RepSpec.parse("1")
WEDGE = RepSpec.parse("12")
TRIPLE = RepSpec.parse("112")
CORE_REPS = (FOCK, WEDGE, TRIPLE)


@contextmanager
def criterion(num, name, budget):
    start = time.monotonic()
    try:
        yield
    except Exception:
        print(f"ACCEPTANCE {num} {name}: FAIL")
        raise
    elapsed = time.monotonic() - start
    verdict = "PASS" if elapsed < budget else "FAIL"
    print(f"ACCEPTANCE {num} {name}: {verdict} ({elapsed:.1f}s, budget {budget}s)")
    assert elapsed < budget, f"criterion {num} took {elapsed:.1f}s, budget {budget}s"


def _assert_passed(report):
    assert report.passed, (report.suite, str(report.rep), report.failures[:3])


def test_01_cuntz_relations():
    with criterion(1, "cuntz-relations", 5):
        for rep in CORE_REPS:
            _assert_passed(run_suite("cuntz", rep, n_max=4, m_max=4, depth=6))


def test_02_car_identities():
    with criterion(2, "car-identities", 30):
        for rep in CORE_REPS:
            _assert_passed(run_suite("car", rep, n_max=5, m_max=5, depth=6))


def test_03_ccr_identities():
    with criterion(3, "ccr-identities", 60):
        for rep in (FOCK, WEDGE):
            _assert_passed(run_suite("ccr", rep, n_max=3, m_max=3, depth=5))


def test_04_fermionization():
    with criterion(4, "fermionization", 60):
        for rep in CORE_REPS:
            _assert_passed(run_suite("main", rep, n_max=4, m_max=4, depth=5))


def test_05_shift_relations():
    with criterion(5, "shift-relations", 30):
        for rep in CORE_REPS:
            for suite in ("lemma23", "wfamily", "rho"):
                _assert_passed(run_suite(suite, rep, n_max=4, m_max=4, depth=5))


def test_06_closed_forms():
    with criterion(6, "closed-forms", 30):
        for rep in CORE_REPS:
            _assert_passed(run_suite("closedforms", rep, n_max=4, m_max=4, depth=4))


def test_07_fock_values():
    with criterion(7, "fock-values", 5):
        report = run_suite("fock", FOCK, n_max=6, m_max=6, depth=6)
        _assert_passed(report)
        vac = StateVector.basis(FOCK, BasisLabel(0, "", 0))
        assert apply(adjoint(boson(1)), vac) == apply(adjoint(fermion(1)), vac)
        assert apply(adjoint(boson(2)), vac) == apply(adjoint(fermion(2)), vac)


def test_08_wedge_values():
    with criterion(8, "wedge-values", 30):
        report = run_suite("wedge", WEDGE, n_max=4, m_max=4, depth=5)
        _assert_passed(report)
        flags = report.measured["dual_vacuum_annihilation"]
        assert flags["even_plain"] and flags["odd_starred"]
        assert not flags["odd_plain"] and not flags["even_starred"]
        lam = {k: RadicalScalar.from_json(v) for k, v in report.measured["lambda"].items()}
        mu = {k: RadicalScalar.from_json(v) for k, v in report.measured["mu"].items()}
        one = RadicalScalar.from_rational(1)
        for n in ("1", "2", "3", "4"):
            assert lam[n] == one + mu[n]
        assert report.measured["lambda_from_commutation"] == report.measured["lambda"]


def test_09_scalar_arithmetic():
    with criterion(9, "scalar-arithmetic", 5):
        rng = random.Random(20260819)
        radicands = (1, 2, 3, 5, 6, 7)
        coeffs = [
            Fraction(num, den)
            for num in range(-6, 7)
            for den in range(1, 5)
            if num
        ]

        def draw():
            terms = {}
            for _ in range(rng.randint(1, 2)):
                d = rng.choice(radicands)
                terms[d] = terms.get(d, Fraction(0)) + rng.choice(coeffs)
            return RadicalScalar({d: c for d, c in terms.items() if c})

        for _ in range(10_000):
            a, b, c = draw(), draw(), draw()
            ab = a * b
            bc = b * c
            assert (a + b) * c == a * c + bc
            assert a * bc == ab * c
            assert a + b == b + a
            exact = (ab + c).to_float()
            floated = a.to_float() * b.to_float() + c.to_float()
            assert math.isclose(exact, floated, rel_tol=1e-9, abs_tol=1e-9)


def test_10_determinism():
    with criterion(10, "determinism", 60):
        def snapshot():
            reports = check_all(WEDGE, n_max=3, m_max=3, depth=3)
            return json.dumps([r.to_json() for r in reports], sort_keys=False)

        assert snapshot() == snapshot()
