import pytest

from hypercurves import strata
from hypercurves.hankel import formula_min_a1b1l


def test_dim_W_examples():
    assert strata.dim_W(3) == 4
    assert strata.dim_W(1) == 2
    assert strata.dim_W(2 * 3 - 1) == 6


def test_stratum_dims():
    assert strata.stratum_dims(4)[:3] == (1, 3, 5)
    assert strata.stratum_dims(4)[3] == 7
    assert strata.secant_stratum_dim(2, 5) == 3


@pytest.mark.parametrize("n, ell, expected", [(5, 1, 4), (5, 2, 8), (5, 3, 9), (5, 4, 10)])
def test_fiber_codim_examples(n, ell, expected):
    assert strata.fiber_codim(n, ell) == expected


def test_factor_sum_example():
    # one W_3 factor and n - 2 W_1 factors at rank 2: 2 + 2 * 3
    assert strata.factor_codim_sum(5, 4, 2) == 8


@pytest.mark.parametrize("n, d, margins", [(5, 4, (3, 5, 4, 3)), (4, 3, (2, 3, 2, 3)), (10, 9, (8, 15, 14, 3))])
def test_case_margins(n, d, margins):
    assert strata.case_margins(n, d) == margins


@pytest.mark.parametrize("n, d", [(4, 4), (3, 2), (6, 1)])
def test_hypothesis_violations(n, d):
    with pytest.raises(strata.HypothesisError):
        strata.case_margins(n, d)


def test_audit_4_3():
    a = strata.audit(4, 3)
    assert a.verdict == "pass"
    assert a.min_margin == 2 and a.tight_cases == (1, 3)
    assert not a.cases[3].nonempty
    assert a.as_record()["note"] == strata.D3_NOTE


def test_audit_10_9():
    a = strata.audit(10, 9)
    assert a.verdict == "pass"
    assert a.min_margin == 3 and a.tight_cases == (4,)


def test_sweep_all_pass_and_margins_are_differences():
    audits = strata.sweep(30)
    assert len(audits) == sum(n - 2 for n in range(4, 31))
    for a in audits:
        assert a.verdict == "pass"
        assert min(a.margins) >= 2
        for c in a.cases:
            assert c.margin == c.fiber_codim - c.stratum_dim


def test_factor_sum_matches_fiber_codim_for_d_at_least_3():
    for n in range(4, 31):
        for d in range(3, n):
            for ell in range(1, 5):
                s = min(4, 2 * d - 3, ell) + (n - 2) * min(2, 2 * d - 1, ell)
                assert strata.factor_codim_sum(n, d, ell) == s
                if strata.stratum_nonempty(ell, d):
                    assert s == strata.fiber_codim(n, ell), (n, d, ell)


def test_only_mismatch_is_quadrics_rank_two():
    mismatches = {t for a in strata.sweep(30) for t in a.mismatches}
    assert {(n, d, ell) for n, d, ell in mismatches} == {(n, 2, 2) for n in range(4, 31)}
    # G lives in W_0 there, outside the range a, b >= 1 of the rank formula
    assert strata.factor_codim_sum(5, 2, 2) == formula_min_a1b1l(3, 0, 2) + 3 * formula_min_a1b1l(1, 2, 2) == 7
    assert strata.fiber_codim(5, 2) == 8


def test_refined_margins_pass():
    assert all(a.refined_verdict == "pass" for a in strata.sweep(30))
