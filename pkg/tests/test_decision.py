"""Decision tests: Bayes closed forms against exhaustive enumeration."""

import itertools
from fractions import Fraction

import pytest

from cohwalk.decision import (
    DEFAULT_PRIOR,
    PriorSpec,
    classical_error,
    classical_posterior_all_same,
    classical_report,
    coherence_threshold,
    enumerate_two_trial_table,
    quantum_error,
    quantum_posterior_all_zero,
    quantum_report,
)

HALF = Fraction(1, 2)


def enumerate_classical_error(m, prior=DEFAULT_PRIOR):
    """Oracle: walk all 2^m reading tuples under the independent model.

    The rule guesses constant when all readings agree, balanced
    otherwise; the error mass is accumulated outcome by outcome in exact
    rational arithmetic.
    """
    error = Fraction(0)
    for outcome in itertools.product((1, -1), repeat=m):
        p_given_plus = Fraction(1) if all(s == 1 for s in outcome) else Fraction(0)
        p_given_minus = Fraction(1) if all(s == -1 for s in outcome) else Fraction(0)
        p_given_balanced = Fraction(1, 2**m)
        guess_constant = len(set(outcome)) == 1
        if guess_constant:
            error += prior.p_balanced * p_given_balanced
        else:
            error += (
                prior.p_constant_plus * p_given_plus
                + prior.p_constant_minus * p_given_minus
            )
    return error


def enumerate_classical_posterior(m, prior=DEFAULT_PRIOR):
    """Oracle: P(constant +1 | all readings +1) by direct joint masses."""
    joint_plus = prior.p_constant_plus * Fraction(1)
    joint_balanced = prior.p_balanced * Fraction(1, 2**m)
    return joint_plus / (joint_plus + joint_balanced)


def enumerate_quantum_error(m, nu):
    """Oracle: sum the error mass over all 2^m exit-indicator tuples."""
    miss = 1 - nu
    error = Fraction(0) if isinstance(nu, Fraction) else 0.0
    for outcome in itertools.product((0, 1), repeat=m):
        ones = sum(outcome)
        p_given_c = nu**ones * miss ** (m - ones)
        p_given_b = 1 if ones == 0 else 0
        guess_balanced = ones == 0
        if guess_balanced:
            error += HALF * p_given_c
        else:
            error += HALF * p_given_b
    return error


class TestClassical:
    def test_posterior_examples(self):
        assert classical_posterior_all_same(2) == Fraction(2, 3)
        assert classical_posterior_all_same(1) == HALF
        assert classical_posterior_all_same(3) == Fraction(4, 5)

    def test_posterior_closed_form(self):
        for m in range(1, 21):
            expected = Fraction(2 ** (m - 1), 1 + 2 ** (m - 1))
            assert classical_posterior_all_same(m) == expected
            assert enumerate_classical_posterior(m) == expected

    def test_error_examples(self):
        assert classical_error(2) == Fraction(1, 4)
        assert classical_error(3) == Fraction(1, 8)
        assert classical_error(10) == Fraction(1, 1024)

    def test_error_matches_exhaustive_enumeration(self):
        for m in range(1, 17):
            assert classical_error(m) == enumerate_classical_error(m)
            assert classical_error(m) == Fraction(1, 2**m)

    def test_general_prior_against_oracle(self):
        prior = PriorSpec(Fraction(1, 6), Fraction(1, 3), HALF)
        for m in range(1, 11):
            assert classical_error(m, prior) == enumerate_classical_error(m, prior)
            assert classical_posterior_all_same(m, prior) == enumerate_classical_posterior(
                m, prior
            )

    def test_prior_must_normalize(self):
        with pytest.raises(ValueError):
            PriorSpec(HALF, HALF, HALF)

    def test_without_replacement_against_full_enumeration(self):
        # oracle: all balanced arrangements x all ordered position draws
        n, m = 8, 3
        plus = n // 2
        arrangements = [
            arr
            for arr in itertools.product((1, -1), repeat=n)
            if sum(arr) == 0
        ]
        draws = list(itertools.permutations(range(n), m))
        same = sum(
            1
            for arr in arrangements
            for pos in draws
            if len({arr[i] for i in pos}) == 1
        )
        p_same = Fraction(same, len(arrangements) * len(draws))
        expected = DEFAULT_PRIOR.p_balanced * p_same
        assert classical_error(m, n_paths=n) == expected
        assert plus == 4

    def test_report_fields(self):
        report = classical_report(2)
        assert report.strategy == "classical"
        assert report.posterior_ambiguous == Fraction(2, 3)
        assert report.error_probability == Fraction(1, 4)


class TestQuantum:
    def test_posterior_examples(self):
        assert quantum_posterior_all_zero(2, Fraction(0)) == (HALF, HALF)
        assert quantum_posterior_all_zero(1, Fraction(1)) == (0, 1)
        assert quantum_posterior_all_zero(2, HALF) == (Fraction(1, 5), Fraction(4, 5))

    def test_error_examples(self):
        assert quantum_error(2, HALF) == Fraction(1, 8)
        assert quantum_error(5, Fraction(1)) == 0
        assert quantum_error(1, Fraction(0)) == HALF

    def test_error_matches_exhaustive_enumeration(self):
        for m in range(1, 11):
            for nu in (Fraction(0), Fraction(1, 3), HALF, Fraction(9, 10)):
                assert quantum_error(m, nu) == enumerate_quantum_error(m, nu)

    def test_monotone_in_trials_and_coherence(self):
        for nu in (0.2, 0.5, 0.8):
            errors = [quantum_error(m, nu) for m in range(1, 12)]
            assert all(b < a for a, b in zip(errors, errors[1:]))
        for m in (1, 3, 7):
            errors = [quantum_error(m, nu) for nu in (0.1, 0.3, 0.5, 0.7, 0.9)]
            assert all(b < a for a, b in zip(errors, errors[1:]))

    def test_one_sided_under_balanced(self):
        # idealized balanced runs can never trigger a constant guess
        for m in (1, 4, 9):
            _, p_balanced = quantum_posterior_all_zero(m, Fraction(1))
            assert p_balanced == 1
            err = quantum_error(m, Fraction(1))
            assert err == 0

    def test_finite_n_correction_is_small(self):
        n = 1000
        for m in range(1, 11):
            for nu in (0.25, 0.5, 0.9):
                idealized = float(quantum_error(m, nu))
                exact = float(quantum_error(m, nu, n_paths=n))
                assert abs(exact - idealized) <= 10 * m / n

    def test_report_fields(self):
        report = quantum_report(2, HALF)
        assert report.strategy == "quantum"
        assert report.nu == HALF
        assert report.posterior_ambiguous == Fraction(1, 5)
        assert report.error_probability == Fraction(1, 8)


class TestThreshold:
    def test_two_trial_value(self):
        expected = (2**0.5 - 1) / 2**0.5
        assert coherence_threshold(2) == pytest.approx(expected, abs=1e-12)

    def test_single_trial_is_zero(self):
        assert coherence_threshold(1) == 0.0

    def test_limit_approaches_half(self):
        assert coherence_threshold(200) == pytest.approx(0.5, abs=0.002)

    def test_sign_flip_around_threshold(self):
        for m in range(1, 11):
            star = coherence_threshold(m)
            above = float(quantum_error(m, min(star + 0.01, 1.0)))
            classical = float(classical_error(m))
            assert above < classical
            if star - 0.01 >= 0:
                below = float(quantum_error(m, star - 0.01))
                assert below > classical


class TestTwoTrialTable:
    def test_classical_rows(self):
        table = enumerate_two_trial_table(HALF)["classical"]
        rows = {outcome: (pc, pb, guess) for outcome, pc, pb, guess in table}
        assert rows[(1, 1)] == (Fraction(2, 3), Fraction(1, 3), "constant")
        assert rows[(1, -1)] == (0, 1, "balanced")
        assert rows[(-1, 1)] == (0, 1, "balanced")
        assert rows[(-1, -1)] == (Fraction(2, 3), Fraction(1, 3), "constant")

    def test_quantum_rows(self):
        table = enumerate_two_trial_table(HALF)["quantum"]
        rows = {outcome: (pc, pb, guess) for outcome, pc, pb, guess in table}
        assert rows[(1, 1)][0] == 1
        assert rows[(1, 1)][2] == "constant"
        assert rows[(0, 0)][0] == Fraction(1, 5)
        assert rows[(0, 0)][2] == "balanced"

    def test_posteriors_normalize(self):
        tables = enumerate_two_trial_table(Fraction(3, 10))
        for rows in tables.values():
            for _, pc, pb, _ in rows:
                assert pc + pb == 1
