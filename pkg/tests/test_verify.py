import numpy as np
import pytest

from multiwright import verify
from multiwright.series import ThreeParams


@pytest.mark.parametrize("name", sorted(verify.SUITES))
def test_suite_is_deterministic(name):
    a = verify.SUITES[name](11)
    b = verify.SUITES[name](11)
    assert a == b


def test_seed_changes_draws():
    a = verify.suite_eigen(1, draws=2)
    b = verify.suite_eigen(2, draws=2)
    assert a[0]["params"] != b[0]["params"]


def test_unknown_suite():
    with pytest.raises(ValueError):
        verify.run_suites(["nope"])


def test_eigen_draws_stay_in_envelope():
    rng = np.random.default_rng(3)
    for _ in range(200):
        params, lam = verify.draw_eigen(rng)
        assert params.n in (1, 2)
        assert all(0.3 <= a <= 1 for a in params.alphas)
        assert all(0.3 <= v <= 2 for v in params.nus)
        assert all(params.rho + b - 1 > 0 for b in params.b)


def test_mittag_leffler_draws_are_well_conditioned():
    rng = np.random.default_rng(5)
    for _ in range(300):
        a, b, z = verify.draw_mittag_leffler(rng)
        assert 0.3 <= a <= 1.5 and 0.5 <= b <= 3 and abs(z) <= 3
        assert verify.series_condition(ThreeParams(0.0, a, b - 1), z) <= verify.MAX_CONDITION


def test_condition_estimate_flags_cancellation():
    p = ThreeParams(0.0, 0.31, 0.5)
    assert verify.series_condition(p, -2.9) > 1e10
    assert verify.series_condition(p, 2.9) == 1.0


@pytest.mark.parametrize("seed", [0, 1, 2, 3])
def test_reductions_pass_for_several_seeds(seed):
    records = verify.suite_reductions(seed)
    assert all(r["status"] in ("pass", "erratum-candidate") for r in records)
    assert sum(r["status"] == "erratum-candidate" for r in records) == 2


def test_erratum_records_come_with_corrected_form():
    records = verify.suite_recurrences(verify.DEFAULT_SEED, draws=2)
    printed = [r for r in records if "[printed]" in r["id"]]
    fixed = [r for r in records if "[caputo-limit]" in r["id"]]
    assert printed and all(r["status"] == "erratum-candidate" for r in printed)
    assert fixed and all(r["status"] == "pass" for r in fixed)
