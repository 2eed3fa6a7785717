"""The property-suite battery: runner plumbing, regimes, and the checks
actually firing on corrupted expectations."""

import pytest

from spinor_forge import props
from spinor_forge.props import (
    CheckResult,
    GRADE2_TABLE,
    GRADED_NORM_TABLE,
    GRADED_PAIRING_TABLE,
    PLAIN_NORM_TABLE,
    SUITES,
    TOP_TABLE,
    check_bracket_relations,
    check_car_relations,
    check_ck_invariance,
    check_eps_duality,
    check_grade2_symmetry,
    check_graded_pairing_symmetry,
    check_graded_symmetry,
    check_h_eigenvalues,
    check_matrix_agreement,
    check_norm_dimension,
    check_pi_completeness,
    check_plain_symmetry,
    check_q_isometry,
    check_top_symmetry,
    run_suites,
)


class TestCheckResult:
    def test_bool_and_repr(self):
        good = CheckResult("sample", 3, True, "fine")
        bad = CheckResult("sample", 3, False, "broken")
        assert good and not bad
        assert "ok" in repr(good)
        assert "FAIL" in repr(bad)

    def test_to_dict(self):
        out = CheckResult("sample", 2, True, "fine").to_dict()
        assert out == {"check": "sample", "n": 2, "ok": True, "detail": "fine"}


class TestTables:
    def test_shapes(self):
        for table in (
            PLAIN_NORM_TABLE,
            GRADED_NORM_TABLE,
            GRADE2_TABLE,
            TOP_TABLE,
            GRADED_PAIRING_TABLE,
        ):
            assert sorted(table) == [0, 1, 2, 3]
            for sym, par in table.values():
                assert sym in (1, -1) and par in (0, 1)

    def test_frozen_rows(self):
        assert PLAIN_NORM_TABLE[0] == (1, 0)
        assert PLAIN_NORM_TABLE[2] == (-1, 0)
        assert GRADED_NORM_TABLE[1] == (-1, 1)
        assert GRADE2_TABLE[2] == (1, 0)
        assert TOP_TABLE[3] == (1, 1)
        assert GRADED_PAIRING_TABLE[0] == (-1, 0)


class TestRunner:
    def test_all_suites_pass_small_n(self):
        results = run_suites(2)
        assert len(results) == sum(len(fns) for fns in SUITES.values())
        assert all(results)
        ids = [r.check for r in results]
        assert len(set(ids)) == len(ids)

    def test_suite_filter(self):
        results = run_suites(3, ["norms"])
        assert [r.check for r in results] == [
            "norm-dimension",
            "plain-symmetry",
            "graded-symmetry",
            "ck-invariance",
        ]
        assert all(results)

    def test_filter_order_follows_request(self):
        results = run_suites(2, ["pairings", "fock"])
        assert results[0].check == "grade2-symmetry"
        assert results[-1].check == "h-eigenvalues"

    def test_unknown_suite(self):
        with pytest.raises(ValueError, match="unknown suite"):
            run_suites(2, ["norms", "spectra"])

    @pytest.mark.parametrize("n", [0, 9, -1])
    def test_n_out_of_range(self, n):
        with pytest.raises(ValueError, match="1 <= n <= 8"):
            run_suites(n)


class TestFockChecks:
    @pytest.mark.parametrize("n", [1, 4])
    def test_car_relations(self, n):
        out = check_car_relations(n)
        assert out and out.n == n
        assert "operator identities" in out.detail

    @pytest.mark.parametrize("n", [2, 5])
    def test_h_eigenvalues(self, n):
        out = check_h_eigenvalues(n)
        assert out
        assert "[H, e_a] = e_a" in out.detail


class TestCliffordChecks:
    def test_q_isometry_exhaustive_regime(self):
        out = check_q_isometry(2)
        assert out and "exhaustive over all" in out.detail

    def test_q_isometry_sampled_regime(self):
        out = check_q_isometry(6)
        assert out and "stratified" in out.detail

    @pytest.mark.parametrize("n", [3, 5])
    def test_pi_completeness(self, n):
        out = check_pi_completeness(n)
        assert out
        regime = "exhaustive" if n <= 3 else "seeded"
        assert regime in out.detail

    @pytest.mark.parametrize("n", [2, 6])
    def test_eps_duality(self, n):
        assert check_eps_duality(n)


class TestNormChecks:
    @pytest.mark.parametrize("n", [1, 6])
    def test_norm_dimension(self, n):
        out = check_norm_dimension(n)
        assert out and "dimension 1" in out.detail

    @pytest.mark.parametrize("n", [2, 4, 7])
    def test_symmetry_checks(self, n):
        assert check_plain_symmetry(n)
        assert check_graded_symmetry(n)

    @pytest.mark.parametrize("n", [3, 4, 6])
    def test_ck_invariance(self, n):
        out = check_ck_invariance(n)
        assert out
        if n <= 3:
            assert "direct, exhaustive" in out.detail
        else:
            assert "transpose characterization" in out.detail


class TestPairingChecks:
    @pytest.mark.parametrize("n", [4, 7])
    def test_grade2_symmetry(self, n):
        assert check_grade2_symmetry(n)

    @pytest.mark.parametrize("n", [3, 5])
    def test_top_symmetry(self, n):
        out = check_top_symmetry(n)
        assert out and "support pairs" in out.detail

    @pytest.mark.parametrize("n", [3, 5])
    def test_graded_pairing_symmetry(self, n):
        assert check_graded_pairing_symmetry(n)

    def test_bracket_relations_exhaustive_and_random(self):
        out = check_bracket_relations(2, pairs=40)
        assert out and "exhaustive" in out.detail

    def test_bracket_relations_large_n(self):
        assert check_bracket_relations(6, pairs=30)

    def test_matrix_agreement_exhaustive(self):
        out = check_matrix_agreement(2)
        assert out and "exhaustive" in out.detail

    def test_matrix_agreement_sampled(self):
        out = check_matrix_agreement(6, samples=120)
        assert out and "120 seeded" in out.detail


class TestChecksAreLive:
    """Corrupting an expected table row must flip the verdict; the
    checks compare against the tables rather than restating them."""

    def test_plain_symmetry_detects_wrong_row(self, monkeypatch):
        monkeypatch.setitem(props.PLAIN_NORM_TABLE, 2, (1, 0))
        out = check_plain_symmetry(2)
        assert not out and "expected" in out.detail

    def test_grade2_detects_wrong_sign(self, monkeypatch):
        monkeypatch.setitem(props.GRADE2_TABLE, 2, (-1, 0))
        assert not check_grade2_symmetry(2)

    def test_grade2_detects_wrong_parity(self, monkeypatch):
        monkeypatch.setitem(props.GRADE2_TABLE, 3, (1, 0))
        assert not check_grade2_symmetry(3)

    def test_top_detects_wrong_sign(self, monkeypatch):
        monkeypatch.setitem(props.TOP_TABLE, 1, (1, 1))
        assert not check_top_symmetry(1)

    def test_graded_pairing_detects_wrong_sign(self, monkeypatch):
        monkeypatch.setitem(props.GRADED_PAIRING_TABLE, 2, (-1, 0))
        assert not check_graded_pairing_symmetry(2)

    def test_graded_norm_detects_wrong_row(self, monkeypatch):
        monkeypatch.setitem(props.GRADED_NORM_TABLE, 3, (-1, 1))
        assert not check_graded_symmetry(3)
