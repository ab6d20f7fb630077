import json
import random

import pytest
from sympy import Matrix, ZZ
from sympy.matrices.normalforms import smith_normal_form

from gorenstein import (
    InnerCornerViolation, NotGorensteinError, Permutation, bar_diagram, build_system,
    candidate_alpha, canonical_weight, first_violation, is_factorial, rational_feasible,
    smith_invariants, solve, solve_system, system_json, verify_alpha,
)
from gorenstein.divisor import interval_matrix
from oracles import covers_by_definition, integer_feasible_boxed, interval_sums_hold, sym

LEFT = (6, 3, 1, 4, 7, 2, 5)
RIGHT = (5, 3, 1, 7, 4, 2, 6)
W2 = (3, 7, 1, 4, 8, 2, 6, 5)


def sympy_invariants(rows):
    if not rows or not rows[0]:
        return []
    snf = smith_normal_form(Matrix(rows), domain=ZZ)
    return [abs(int(snf[k, k])) for k in range(min(snf.shape)) if snf[k, k] != 0]


class TestSystem:
    def test_left_problem(self):
        sys = build_system(LEFT)
        assert sys.n == 7 and sys.unknowns == 6 and len(sys.covers) == 7

    def test_longest_and_identity(self):
        assert build_system(Permutation.longest(5)).covers == ()
        sys = build_system(Permutation.identity(5))
        assert sys.rows() == [[1 if c == r else 0 for c in range(4)] for r in range(4)]


class TestCandidate:
    def test_examples(self):
        assert candidate_alpha(LEFT) == (-1, 0, 1, 1, -1, 1)
        assert candidate_alpha(W2) == (1, -1, 1, 1, -1, 1, 0)
        assert candidate_alpha(Permutation.identity(6)) == (1,) * 5

    def test_example_two_checked_by_solver(self):
        assert solve(W2) == candidate_alpha(W2)

    def test_mixed_corners(self):
        with pytest.raises(InnerCornerViolation) as info:
            candidate_alpha((1, 3, 4, 6, 2, 5))
        assert info.value.descent == 4
        assert info.value.distances == (3, 2)


class TestVerify:
    def test_examples(self):
        sys = build_system(LEFT)
        assert verify_alpha(sys, (-1, 0, 1, 1, -1, 1))
        assert not verify_alpha(sys, (1,) * 6)
        assert first_violation(sys, (1,) * 6) == (1, 5)
        assert sum((1, 1, 1, 1, 1, 1)[0:4]) == 4  # cover (1,5) spans α_1..α_4
        assert verify_alpha(build_system(Permutation.longest(4)), (7, -3, 2))

    def test_length_mismatch(self):
        with pytest.raises(ValueError):
            verify_alpha(build_system(LEFT), (1, 1))


class TestSolve:
    def test_examples(self):
        alpha = solve_system(build_system(LEFT))
        assert alpha == (-1, 0, 1, 1, -1, 1)
        assert verify_alpha(build_system(LEFT), alpha)
        assert solve_system(build_system(RIGHT)) is None
        assert solve(Permutation.identity(4)) == (1, 1, 1)

    def test_free_variables_take_default(self):
        # no cover crosses any gap of the longest element
        sys = build_system((4, 3, 2, 1))
        assert solve_system(sys) == (1, 1, 1)
        assert solve_system(sys, default=(5, -2, 0)) == (5, -2, 0)
        assert solve_system(build_system((2, 1, 4, 3))) == candidate_alpha((2, 1, 4, 3))

    @pytest.mark.parametrize("n", range(1, 6))
    def test_against_boxed_search(self, n):
        for w in sym(n):
            got = solve(w)
            assert (got is not None) == integer_feasible_boxed(w, bound=3)
            if got is not None:
                assert interval_sums_hold(w, got)

    @pytest.mark.parametrize("n", range(1, 7))
    def test_rational_equals_integer(self, n):
        for w in sym(n):
            assert rational_feasible(build_system(w)) == (solve(w) is not None)

    def test_rational_examples(self):
        assert rational_feasible(build_system(LEFT))
        assert not rational_feasible(build_system(RIGHT))
        assert rational_feasible(build_system(Permutation.longest(3)))

    @pytest.mark.parametrize("n", range(2, 7))
    def test_seq_bars(self, n):
        for w in sym(n):
            alpha = solve(w)
            if alpha is None:
                continue
            cov = set(covers_by_definition(w))
            for i in range(1, n + 1):
                for j in range(i + 1, n + 1):
                    if w[i - 1] < w[j - 1]:
                        s = sum(alpha[i - 1:j - 1])
                        assert s >= 1
                        assert (s == 1) == ((i, j) in cov)


class TestSmith:
    def test_doc_example_against_sympy(self):
        m = [[2, 4, 4], [-6, 6, 12], [10, -4, -16]]
        assert smith_invariants(m) == sympy_invariants(m) == [2, 6, 12]

    def test_random_integer_matrices(self):
        rng = random.Random(7)
        for _ in range(200):
            r, c = rng.randint(1, 6), rng.randint(1, 6)
            m = [[rng.randint(-9, 9) for _ in range(c)] for _ in range(r)]
            assert smith_invariants(m) == sympy_invariants(m), m

    def test_big_entries(self):
        m = [[10**30, 3], [7, 10**25 + 1]]
        assert smith_invariants(m) == sympy_invariants(m)

    @pytest.mark.parametrize("n", range(2, 7))
    def test_interval_matrices_against_sympy(self, n):
        for w in sym(n)[::3]:
            m = interval_matrix(w)
            if m and m[0]:
                assert smith_invariants(m) == sympy_invariants(m)


class TestFactorial:
    def test_examples(self):
        assert is_factorial(Permutation.identity(5))
        assert is_factorial(Permutation.longest(5))
        assert not is_factorial(LEFT)
        assert len(interval_matrix(LEFT)[0]) == 7 > len(interval_matrix(LEFT))
        assert not is_factorial((2, 1, 4, 3))

    @pytest.mark.parametrize("n", range(1, 7))
    def test_against_sympy_and_implies_gorenstein(self, n):
        for w in sym(n):
            m = interval_matrix(w)
            ncov = len(covers_by_definition(w))
            expect = ncov == 0 or sympy_invariants(m) == [1] * ncov
            assert is_factorial(w) == expect
            if expect:
                assert solve(w) is not None


class TestCanonicalWeight:
    def test_examples(self):
        assert canonical_weight(W2) == (-2, 0, -2, -2, 0, -2, -1)
        assert canonical_weight(Permutation.identity(5)) == (-2,) * 4
        assert canonical_weight(LEFT) == (0, -1, -2, -2, 0, -2)

    def test_rejects_non_gorenstein(self):
        with pytest.raises(NotGorensteinError, match="descent 4"):
            canonical_weight((1, 3, 4, 6, 2, 5))
        with pytest.raises(NotGorensteinError, match="pattern"):
            canonical_weight(RIGHT)

    @pytest.mark.parametrize("n", range(1, 7))
    def test_relation_to_candidate(self, n):
        for w in sym(n):
            if solve(w) is None:
                with pytest.raises(NotGorensteinError):
                    canonical_weight(w)
                continue
            assert canonical_weight(w) == tuple(-1 - a for a in candidate_alpha(w))


class TestDiagram:
    def _bar_lines(self, text):
        return [ln for ln in text.splitlines() if "-" in ln]

    def test_bar_counts(self):
        assert len(self._bar_lines(bar_diagram(LEFT))) == 7
        assert len(self._bar_lines(bar_diagram(RIGHT))) == 9
        assert len(self._bar_lines(bar_diagram((1, 2)))) == 1

    def test_layout(self):
        text = bar_diagram(LEFT)
        lines = text.splitlines()
        assert lines[0].split() == ["6", "3", "1", "4", "7", "2", "5"]
        assert lines[-1].split() == [f"a{r}" for r in range(1, 7)]
        assert set(text) <= set("0123456789a |-+\n")
        # first bar spans columns 1..5 and crosses vertical bars 1..4
        assert lines[2].count("+") == 4

    def test_deterministic(self):
        assert bar_diagram(RIGHT) == bar_diagram(RIGHT)

    def test_values_row(self):
        text = bar_diagram(LEFT, solve(LEFT))
        assert text.splitlines()[-1].split() == ["-1", "0", "1", "1", "-1", "1"]


def test_system_json():
    d = json.loads(system_json(LEFT))
    assert d == {"n": 7, "covers": [list(c) for c in covers_by_definition(LEFT)],
                 "alpha": [-1, 0, 1, 1, -1, 1], "feasible": True}
    d = json.loads(system_json(RIGHT))
    assert d["alpha"] is None and d["feasible"] is False and len(d["covers"]) == 9
