"""The twelve acceptance criteria, one test each, all exact.

Each test logs a ``[PASS]``/``[FAIL]`` line that is printed in the
"acceptance criteria" section of the pytest summary.
"""

import re
import subprocess
import sys
import time
from pathlib import Path

import pytest

from altruns.algebra import Polynomial
from altruns.cli import run_cli
from altruns.families import family_poly, special_number
from altruns.gf import closed_form, verify_gf
from altruns.identities import (
    carlitz_original_diff,
    ma_p,
    ma_r,
    number_closed_forms,
    stanley_r,
    verify_range,
)
from altruns.oracles import oracle_row
from altruns.triangles import cf_partition_oracle, u_basis_identity, u_number, v_number, v_row

GOLDEN = Path(__file__).parent / "golden"


def parse_poly(text):
    """Read a listed polynomial such as ``2x+28x^2`` into a Polynomial."""
    coeffs = {}
    for sign, num, var, exp in re.findall(r"([+-]?)(\d*)(x?)(?:\^(\d+))?", text.replace(" ", "")):
        if not num and not var:
            continue
        power = (int(exp) if exp else 1) if var else 0
        coeffs[power] = int(sign + (num or "1"))
    return Polynomial([coeffs.get(i, 0) for i in range(max(coeffs) + 1)])


def run_criterion(log, tag, description, check, limit=None):
    start = time.perf_counter()
    try:
        failure = check()
    except AssertionError as exc:
        failure = str(exc) or "assertion failed"
    elapsed = time.perf_counter() - start
    if failure is None and limit is not None and elapsed >= limit:
        failure = f"took {elapsed:.2f}s, limit {limit}s"
    status = "PASS" if failure is None else "FAIL"
    timing = f" ({elapsed:.2f}s" + (f" < {limit}s)" if limit else ")")
    log.append(f"[{status}] {tag} {description}{timing}" + ("" if failure is None else f": {failure}"))
    assert failure is None, failure


def _ok(report):
    assert report.ok, report.line()


def test_ac01_runs_oracle(criterion_log):
    listed = {2: "2x", 3: "2x+4x^2", 4: "2x+12x^2+10x^3", 5: "2x+28x^2+58x^3+32x^4"}

    def check():
        for n in range(2, 10):
            assert oracle_row(n, "alt_runs").counts == tuple(family_poly("R", n).integer_coeffs()), n
        for n, text in listed.items():
            assert family_poly("R", n) == parse_poly(text), n

    run_criterion(criterion_log, "AC1", "alt_runs oracle = R_n for n=2..9, listed R_2..R_5", check, 30)


def test_ac02_theorem1(criterion_log):
    def check():
        _ok(verify_range("THM1_EVEN", 1, 20))
        _ok(verify_range("THM1_ODD", 2, 20))

    run_criterion(criterion_log, "AC2", "THM1_EVEN n=1..20, THM1_ODD n=2..20", check, 10)


def test_ac03_carlitz(criterion_log):
    def check():
        d2 = carlitz_original_diff(2)
        s1, s0 = d2.row("even", 1), d2.row("even", 0)
        assert (s1.original, s1.true, s1.corrected) == (2, 12, 12)
        assert s1.true == family_poly("R", 4).coeffs[2]
        assert s0.original_ok and s0.corrected_ok
        for n in range(2, 6):
            d = carlitz_original_diff(n, truth="oracle")
            assert d.mismatches("even"), n
            _ok(d.corrected)

    run_criterion(criterion_log, "AC3", "original formula defect at n=2, corrected formula n=2..5", check)


def test_ac04_peaks(criterion_log):
    listed = {2: "1+x", 3: "1+5x", 4: "1+18x+5x^2", 5: "1+58x+61x^2"}

    def check():
        _ok(verify_range("PEAK_COR", 1, 20))
        _ok(verify_range("THM2", 1, 20))
        for n in range(1, 10):
            assert oracle_row(n, "pk").counts == tuple(family_poly("P", n).integer_coeffs()), n
            assert oracle_row(n, "lpk").counts == tuple(family_poly("PHAT", n).integer_coeffs()), n
        for n, text in listed.items():
            assert family_poly("PHAT", n) == parse_poly(text), n

    run_criterion(criterion_log, "AC4", "PEAK_COR, THM2 n=1..20; pk/lpk oracles n<=9", check)


def test_ac05_signed(criterion_log):
    def check():
        _ok(verify_range("RHAT_COR", 1, 15))
        for n in range(1, 8):
            assert oracle_row(n, "signed_runs_up").counts == tuple(family_poly("RHAT", n).integer_coeffs()), n

    run_criterion(criterion_log, "AC5", "RHAT_COR n=1..15; signed oracle n<=7", check, 60)


def test_ac06_derivative_polynomials(criterion_log):
    def check():
        for ident in ("DERIV_THM", "BRIDGE_Q_P", "BRIDGE_QHAT_PHAT"):
            _ok(verify_range(ident, 1, 20))

    run_criterion(criterion_log, "AC6", "DERIV_THM, BRIDGE_Q_P, BRIDGE_QHAT_PHAT n=1..20", check)


def test_ac07_special_numbers(criterion_log):
    def check():
        closed = {}
        for n in range(1, 13):
            closed.update(number_closed_forms(n))
        tan_sec = closed_form("TAN_SEC", 24)
        springer = closed_form("SPRINGER_GF", 24)
        fact = 1
        for n in range(25):
            fact = fact * n if n else 1
            e = special_number("EULER", n)
            at_zero = (family_poly("Q", n) if n % 2 else family_poly("QHAT", n))(0)
            assert e == at_zero == tan_sec[n] * fact, n
            if f"E_{n}" in closed:
                assert closed[f"E_{n}"] == e, n
            if n <= 9:
                assert oracle_row(n, "zigzag_count").total == e, n
            s = special_number("SPRINGER", n)
            assert s == family_poly("QHAT", n)(1) == springer[n] * fact, n
            if f"s_{n}" in closed:
                assert closed[f"s_{n}"] == s, n
            if n <= 7:
                assert oracle_row(n, "snake_count").total == s, n
        assert [special_number("EULER", n) for n in range(6)] == [1, 1, 1, 2, 5, 16]
        _ok(verify_gf("TAN_SEC", 24))
        _ok(verify_gf("SPRINGER_GF", 24))

    run_criterion(criterion_log, "AC7", "E_n and s_n agree across four routes", check)


def test_ac08_explicit_formulas(criterion_log):
    def check():
        for n in range(2, 10):
            row = family_poly("R", n).integer_coeffs()
            assert [stanley_r(n, k) for k in range(len(row))] == row, n
            assert [ma_r(n, k) for k in range(len(row))] == row, n
        for n in range(1, 21):
            q = family_poly("Q", n).integer_coeffs()
            assert all(ma_p(n, m) == (q[m] if m < len(q) else 0) for m in range(n + 1, -1, -2)), n

    run_criterion(criterion_log, "AC8", "Stanley/Ma reproduce R_n n=2..9; ma_p = Q_n n<=20", check)


def test_ac09_divisibility(criterion_log):
    run_criterion(criterion_log, "AC9", "DIVISIBILITY n=2..60",
                  lambda: _ok(verify_range("DIVISIBILITY", 2, 60)), 10)


def test_ac10_central_factorial(criterion_log):
    def check():
        for n in range(26):
            for k in range(n + 1):
                assert u_number(n, k) == u_number(n, k, "explicit"), (n, k)
                assert v_number(n, k) == v_number(n, k, "explicit"), (n, k)
        for n in range(1, 21):
            _ok(u_basis_identity(n))
        _ok(verify_range("U_BASIS", 1, 20))
        for n in range(1, 5):
            assert cf_partition_oracle("U", n) == [u_number(n, k) for k in range(1, n + 1)], n
        for n in range(5):
            assert cf_partition_oracle("V", n) == v_row(n), n
        assert cf_partition_oracle("V", 2) == [1, 10, 1]

    run_criterion(criterion_log, "AC10", "U/V recurrence = explicit n<=25, U_BASIS, partition oracles", check)


def test_ac11_csc_lemma(criterion_log):
    run_criterion(criterion_log, "AC11", "CSC_LEMMA derivative orders 0..31",
                  lambda: _ok(verify_range("CSC_LEMMA", 1, 16)))


def test_ac12_cli(criterion_log):
    cases = [
        (["triangle", "U", "--rows", "3", "--format", "bfile"], "triangle_U_3.bfile"),
        (["triangle", "V", "--rows", "4", "--format", "csv"], "triangle_V_4.csv"),
        (["poly", "R", "--n", "5", "--format", "csv"], "poly_R_5.csv"),
        (["poly", "PHAT", "--n", "5", "--format", "bfile"], "poly_PHAT_5.bfile"),
    ]

    def check():
        for argv, golden in cases:
            code, out = run_cli(argv)
            assert code == 0 and out == (GOLDEN / golden).read_bytes(), golden
        proc = subprocess.run([sys.executable, "-m", "altruns", "verify", "all", "--max-n", "12"],
                              capture_output=True, check=False)
        assert proc.returncode == 0, proc.stdout.decode()[-500:]

    run_criterion(criterion_log, "AC12", "golden b-file/CSV, verify all --max-n 12", check, 180)
