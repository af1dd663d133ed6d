"""Eigen machinery and the law checkers."""

from __future__ import annotations

import json
import random

import pytest
from hypothesis import given
from hypothesis import strategies as st

from supertropical import (
    DomainError,
    Matrix,
    ZERO,
    char_poly,
    check_charpoly_power,
    check_corner_root_power,
    check_det_rule,
    check_eigen_power,
    check_eigenpair,
    check_frobenius,
    check_tangible_equality,
    check_trace_power,
    eigenvalues,
    ghost,
    is_root,
    parse_matrix,
    search_eigenpairs,
    tangible,
)
from conftest import matrices, sample_matrix, scalars

A = parse_matrix("0 0\n1 2")


class TestEigenvalues:
    def test_golden(self):
        report = eigenvalues(A)
        assert report.eigenvalues == ((tangible(0), 1), (tangible(2), 1))
        assert report.ghost_region == ()

    def test_power_matrix(self):
        report = eigenvalues(parse_matrix("1 2\n3 4"))
        assert report.eigenvalues == ((tangible(4), 1),)
        (iv,) = report.ghost_region
        assert iv.lo is None and iv.hi == 1

    def test_diagonal(self):
        report = eigenvalues(parse_matrix("5 -inf\n-inf 2"))
        assert report.eigenvalues == ((tangible(2), 1), (tangible(5), 1))

    @given(matrices(max_n=3))
    def test_eigenvalues_are_roots(self, a):
        f = char_poly(a)
        for value, _ in eigenvalues(a).eigenvalues:
            assert is_root(f, value)


class TestEigenpair:
    def test_exact_pair(self):
        v = (tangible(0), tangible(2))
        verdict = check_eigenpair(A, v, tangible(2))
        assert verdict.holds
        assert [d["lhs"] for d in verdict.detail] == ["2", "4"]

    def test_ghost_surpassing_pair(self):
        v = (tangible(0), tangible(-1))
        verdict = check_eigenpair(A, v, tangible(0))
        assert verdict.holds
        assert [d["lhs"] for d in verdict.detail] == ["0", "1g"]

    def test_failing_pair(self):
        v = (tangible(0), tangible(0))
        verdict = check_eigenpair(A, v, tangible(0))
        assert not verdict.holds
        assert verdict.detail[1]["ok"] is False
        assert verdict.witness is not None

    def test_non_tangible_rejected(self):
        with pytest.raises(DomainError):
            check_eigenpair(A, (tangible(0), ghost(2)), tangible(2))
        with pytest.raises(DomainError):
            check_eigenpair(A, (tangible(0), tangible(2)), ghost(2))
        with pytest.raises(DomainError):
            check_eigenpair(A, (tangible(0), ZERO), tangible(2))


class TestEigenPower:
    def test_exact_pair_squares(self):
        v = (tangible(0), tangible(2))
        verdict = check_eigen_power(A, v, tangible(2), 2)
        assert verdict.holds
        assert [d["lhs"] for d in verdict.detail] == ["4", "6"]

    def test_ghost_pair_squares(self):
        v = (tangible(0), tangible(-1))
        verdict = check_eigen_power(A, v, tangible(0), 2)
        assert verdict.holds
        assert [d["lhs"] for d in verdict.detail] == ["1g", "3g"]

    def test_power_one_reduces(self):
        v = (tangible(0), tangible(2))
        assert check_eigen_power(A, v, tangible(2), 1).holds

    def test_precondition_error(self):
        with pytest.raises(DomainError):
            check_eigen_power(A, (tangible(0), tangible(0)), tangible(0), 2)

    @pytest.mark.parametrize("seed", range(15))
    def test_found_pairs_hold_for_all_powers(self, seed):
        rng = random.Random(f"pairs:{seed}")
        a = sample_matrix(rng, rng.randint(2, 3))
        for v, x in search_eigenpairs(a, lattice=range(-2, 3), max_results=3):
            for m in (2, 3, 4):
                assert check_eigen_power(a, v, x, m).holds


class TestCharpolyPower:
    def test_golden_detail(self):
        verdict = check_charpoly_power(A, 2)
        assert verdict.holds
        by_i = {d["i"]: d for d in verdict.detail}
        assert by_i[0] == {"i": 0, "coeff": "5g", "power": "4", "relation": "ghost-surpass"}
        assert by_i[1]["relation"] == "equal"

    def test_diagonal_all_equal(self):
        d = parse_matrix("3 -inf\n-inf 1")
        for m in (1, 2, 3, 4):
            verdict = check_charpoly_power(d, m)
            assert verdict.holds
            assert all(rec["relation"] == "equal" for rec in verdict.detail)

    def test_power_one_all_equal(self):
        verdict = check_charpoly_power(A, 1)
        assert verdict.holds
        assert all(rec["relation"] == "equal" for rec in verdict.detail)

    @given(matrices(max_n=3), st.integers(min_value=1, max_value=4))
    def test_always_holds(self, a, m):
        assert check_charpoly_power(a, m).holds


class TestTangibleEquality:
    def test_golden_not_applicable(self):
        verdict = check_tangible_equality(A, 2)
        assert verdict.holds is None
        assert not verdict.applicable

    def test_diagonal_holds(self):
        assert check_tangible_equality(parse_matrix("1 -inf\n-inf 2"), 3).holds

    def test_one_by_one(self):
        assert check_tangible_equality(Matrix(((tangible(7),),)), 5).holds

    @given(matrices(max_n=3), st.integers(min_value=1, max_value=3))
    def test_never_fails(self, a, m):
        assert check_tangible_equality(a, m).holds is not False


class TestCornerRootPower:
    def test_golden(self):
        verdict = check_corner_root_power(A, 2)
        assert verdict.holds
        assert verdict.detail == ({"corner_root": "4", "base_root": "2"},)

    def test_diagonal(self):
        assert check_corner_root_power(parse_matrix("5 -inf\n-inf 2"), 3).holds

    def test_power_one(self):
        assert check_corner_root_power(A, 1).holds

    @given(matrices(max_n=3), st.integers(min_value=1, max_value=4))
    def test_always_holds(self, a, m):
        assert check_corner_root_power(a, m).holds


class TestDetRule:
    def test_golden_with_itself(self):
        verdict = check_det_rule(A, A)
        assert verdict.holds
        assert verdict.detail[0]["lhs"] == "5g"
        assert verdict.detail[0]["rhs"] == "4"

    @given(matrices(max_n=4), matrices(max_n=4))
    def test_always_holds(self, a, b):
        if a.n != b.n:
            return
        verdict = check_det_rule(a, b)
        assert verdict.holds
        record = verdict.detail[0]
        if record["tangible_equality"] is not None:
            assert record["tangible_equality"] is True


class TestTracePower:
    def test_golden(self):
        assert check_trace_power(parse_matrix("1 2\n3 4"), 2).holds

    @given(matrices(max_n=4), st.integers(min_value=1, max_value=4))
    def test_always_holds(self, a, m):
        assert check_trace_power(a, m).holds


class TestFrobeniusCheck:
    def test_tie_case(self):
        verdict = check_frobenius(tangible(3), tangible(3), 2)
        assert verdict.holds
        assert verdict.detail[0] == {"lhs": "6g", "rhs": "6g"}

    def test_bad_exponent(self):
        with pytest.raises(DomainError):
            check_frobenius(tangible(1), tangible(2), 0)

    @given(scalars, scalars, st.integers(min_value=1, max_value=5))
    def test_always_holds(self, a, b, n):
        assert check_frobenius(a, b, n).holds


class TestVerdictJson:
    def test_pass_schema(self):
        data = check_charpoly_power(A, 2).to_json_dict()
        assert data["theorem"] == "charpoly-power"
        assert data["holds"] is True
        assert "not_applicable" not in data
        assert isinstance(data["detail"], list)
        json.dumps(data)

    def test_not_applicable_schema(self):
        data = check_tangible_equality(A, 2).to_json_dict()
        assert data["not_applicable"] is True
        assert "holds" not in data

    def test_failure_carries_witness(self):
        verdict = check_eigenpair(A, (tangible(0), tangible(0)), tangible(0))
        data = verdict.to_json_dict()
        assert data["holds"] is False
        assert data["witness"]["matrix"]["n"] == 2
        json.dumps(data)
