import math

import pytest

from altruns.algebra import CotCscExpression, Polynomial
from altruns.cli import verify_tasks
from altruns.errors import UnsupportedIndex
from altruns.families import family_poly, special_number
from altruns.gf import GfId, verify_gf
from altruns.identities import (
    CHECKS,
    IdentityId,
    carlitz_original_diff,
    csc_lemma_closed_forms,
    derivative_closed_forms,
    identity_range,
    ma_p,
    ma_r,
    number_closed_forms,
    stanley_r,
    stanley_terms,
    theorem1_rhs,
    verify_identity,
    verify_range,
)
from altruns.oracles import oracle_row


def test_registry_complete():
    assert set(CHECKS) == set(IdentityId)
    tasks = verify_tasks("all", 12)
    assert {name for kind, name, _ in tasks if kind == "identity"} == {i.value for i in IdentityId}
    assert {name for kind, name, _ in tasks if kind == "gf"} == {g.value for g in GfId}


def test_thm1_small_cases():
    # R_2 = 2x, R_4 = 2x + 12x^2 + 10x^3, R_3 = 2x + 4x^2
    assert theorem1_rhs(1, odd=False) == Polynomial([0, 2])
    assert theorem1_rhs(2, odd=False) == Polynomial([0, 2, 12, 10])
    assert theorem1_rhs(2, odd=True) == Polynomial([0, 2, 4])
    assert verify_identity("THM1_EVEN", 1).ok
    assert verify_identity("THM2", 2).ok


def test_thm1_odd_needs_n2():
    with pytest.raises(UnsupportedIndex):
        verify_identity("THM1_ODD", 1)
    with pytest.raises(UnsupportedIndex):
        verify_identity("BRIDGE_RHAT_PHAT", 8)


def test_csc_lemma_hand_case():
    # with c = csc^2 and t = cot: D^2 c = 6c^2 - 4c, D^3 c = t(8c - 24c^2)
    even, odd = csc_lemma_closed_forms(2)
    assert even == CotCscExpression(Polynomial([0, -4, 6]), Polynomial())
    assert odd == CotCscExpression(Polynomial(), Polynomial([0, 8, -24]))
    assert verify_identity("CSC_LEMMA", 2).ok


def test_divisibility_example():
    assert verify_identity("DIVISIBILITY", 7).ok


def test_derivative_closed_forms_small():
    forms = derivative_closed_forms(1)
    assert forms["Q_1"] == Polynomial([1, 0, 1])
    assert forms["QHAT_2"] == Polynomial([1, 0, 2])


@pytest.mark.parametrize("ident", list(IdentityId))
def test_every_identity_through_12(ident):
    r = verify_range(ident, identity_range(ident, 12).start, identity_range(ident, 12).stop - 1)
    assert r.ok, r.line()


@pytest.mark.parametrize("n", range(1, 11))
def test_number_cor_three_routes(n):
    forms = number_closed_forms(n)
    for key, value in forms.items():
        kind, idx = key.split("_")
        idx = int(idx)
        if kind == "E":
            evaluated = (family_poly("Q", idx) if idx % 2 else family_poly("QHAT", idx))(0)
            assert value == evaluated == special_number("EULER", idx)
            if idx <= 9:
                assert value == oracle_row(idx, "zigzag_count").total
        else:
            assert value == family_poly("QHAT", idx)(1) == special_number("SPRINGER", idx)
            if idx <= 7:
                assert value == oracle_row(idx, "snake_count").total


def test_carlitz_n2_rows():
    diff = carlitz_original_diff(2)
    s0 = diff.row("even", 0)
    assert (s0.true, s0.original, s0.corrected) == (10, 10, 10)
    s1 = diff.row("even", 1)
    assert (s1.k, s1.true, s1.original, s1.corrected) == (2, 12, 2, 12)
    assert diff.corrected.ok


@pytest.mark.parametrize("n", range(2, 6))
def test_carlitz_against_brute_force(n):
    diff = carlitz_original_diff(n, truth="oracle")
    assert diff.mismatches("even")
    assert not diff.mismatches("odd")
    assert all(r.corrected_ok for r in diff.rows)
    assert diff == carlitz_original_diff(n)


def test_carlitz_bad_inputs():
    with pytest.raises(UnsupportedIndex):
        carlitz_original_diff(1)
    with pytest.raises(ValueError):
        carlitz_original_diff(2, truth="guess")


def test_stanley_terms():
    # R(3,2) = 4; the i=0 summand vanishes because 0^n = 0
    assert stanley_terms(3, 2) == [0, -4, 8]
    assert stanley_r(3, 2) == 4


@pytest.mark.parametrize("n", range(2, 13))
def test_explicit_formulas_reproduce_runs(n):
    row = family_poly("R", n).integer_coeffs()
    assert [stanley_r(n, k) for k in range(len(row))] == row
    assert [ma_r(n, s) for s in range(len(row))] == row


def test_ma_examples():
    assert ma_r(2, 1) == 2
    assert ma_r(2, 0) == 0
    assert ma_r(4, 3) == 10
    # Q_1 = 1 + x^2, Q_2 = 2x + 2x^3
    assert (ma_p(1, 2), ma_p(1, 0)) == (1, 1)
    assert (ma_p(2, 3), ma_p(2, 1)) == (2, 2)
    with pytest.raises(UnsupportedIndex):
        ma_p(3, 3)


@pytest.mark.parametrize("n", range(1, 21))
def test_ma_p_matches_q(n):
    q = family_poly("Q", n).integer_coeffs()
    for m in range(n + 1, -1, -2):
        assert ma_p(n, m) == (q[m] if m < len(q) else 0)


def test_factorial_sanity_of_sweep():
    assert sum(family_poly("R", 20).integer_coeffs()) == math.factorial(20)


def test_gf_reports():
    for g in GfId:
        assert verify_gf(g, 12).ok
