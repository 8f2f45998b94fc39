"""Bayesian error analysis for the constant-vs-balanced decision problem.

Two strategies distinguish a constant pattern from a balanced one using
m trials:

* classical: read m phase shifters; guess constant iff all m agree.
* quantum:   run the 3-step walk m times and watch the exit edge; guess
  balanced iff the particle never exits.

Closed forms use the independent-sample model for the shifter readings
(each balanced shifter +1 or -1 with probability 1/2, valid for m much
smaller than N) and the large-N detection probabilities nu (constant)
and 0 (balanced).  Both idealizations can be switched off: pass
``n_paths`` to use the exact finite-N detection probabilities, or the
exact without-replacement sampling law for the classical strategy.

All closed forms are plain arithmetic, so passing ``fractions.Fraction``
values for probabilities keeps every result exact.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .decoherence import detection_probability
from .ensemble import EnsembleParams, hypergeometric_prob_exact


@dataclass(frozen=True)
class PriorSpec:
    """Prior over the three hypotheses: constant +1, constant -1, balanced."""

    p_constant_plus: Fraction = Fraction(1, 4)
    p_constant_minus: Fraction = Fraction(1, 4)
    p_balanced: Fraction = Fraction(1, 2)

    def __post_init__(self):
        total = self.p_constant_plus + self.p_constant_minus + self.p_balanced
        if total != 1:
            raise ValueError(f"prior probabilities sum to {total}, not 1")
        if min(self.p_constant_plus, self.p_constant_minus, self.p_balanced) < 0:
            raise ValueError("prior probabilities must be non-negative")


DEFAULT_PRIOR = PriorSpec()


@dataclass(frozen=True)
class DecisionReport:
    """Summary of an m-trial strategy: rule, ambiguous posterior, error."""

    strategy: str
    m: int
    nu: object = None
    posterior_ambiguous: object = None
    guess_rule: str = ""
    error_probability: object = None


def _all_same_given_balanced(m, n_paths=None):
    """P(all m sampled shifters agree | balanced pattern)."""
    if n_paths is None:
        return 2 * Fraction(1, 2**m)
    if n_paths % 2 != 0:
        raise ValueError("balanced patterns need an even number of paths")
    if m > n_paths:
        raise ValueError("cannot sample more shifters than paths")
    params = EnsembleParams(n_paths, Fraction(1, 2), m, m)
    return 2 * hypergeometric_prob_exact(params)


def classical_posterior_all_same(m, prior=DEFAULT_PRIOR, n_paths=None):
    """P(constant +1 | m sampled shifters all read +1).

    Equals 2^(m-1) / (1 + 2^(m-1)) under the default prior; other priors
    go through the same Bayes computation.
    """
    if m < 1:
        raise ValueError("m must be at least 1")
    like_balanced = _all_same_given_balanced(m, n_paths) / 2  # all +1 specifically
    evidence = prior.p_constant_plus + prior.p_balanced * like_balanced
    return prior.p_constant_plus / evidence


def classical_error(m, prior=DEFAULT_PRIOR, n_paths=None):
    """Error probability of "guess constant iff all m readings agree".

    The rule only errs on a balanced pattern that happens to give m equal
    readings, so the error is p_balanced * P(all same | balanced), which
    is 2^-m under the default prior and independent sampling.
    """
    if m < 1:
        raise ValueError("m must be at least 1")
    return prior.p_balanced * _all_same_given_balanced(m, n_paths)


def quantum_posterior_all_zero(m, nu, n_paths=None):
    """Posteriors (P(constant), P(balanced)) after m runs with no exit.

    Equal priors 1/2 on constant and balanced.  Idealized likelihoods
    give P(constant | m misses) = (1-nu)^m / (1 + (1-nu)^m).
    """
    if m < 1:
        raise ValueError("m must be at least 1")
    p_c = detection_probability("constant", nu, n_paths=n_paths)
    p_b = detection_probability("balanced", nu, n_paths=n_paths)
    miss_c = (1 - p_c) ** m
    miss_b = (1 - p_b) ** m
    evidence = miss_c + miss_b
    return miss_c / evidence, miss_b / evidence


def quantum_error(m, nu, n_paths=None):
    """Error probability of "guess balanced iff the particle never exits".

    Idealized: P(constant) * (1-nu)^m = (1-nu)^m / 2, since a balanced
    pattern can never produce an exit.  With ``n_paths`` the finite-N
    leak (1-nu)*N/(N+1)^2 makes the balanced side fallible too.
    """
    if m < 1:
        raise ValueError("m must be at least 1")
    p_c = detection_probability("constant", nu, n_paths=n_paths)
    p_b = detection_probability("balanced", nu, n_paths=n_paths)
    half = Fraction(1, 2)
    err = half * (1 - p_c) ** m + half * (1 - (1 - p_b) ** m)
    return err


def coherence_threshold(m):
    """Overlap nu* above which the quantum strategy beats the classical one.

    Solving (1/2)(1-nu)^m = 2^-m gives nu* = 1 - 2^(1/m)/2.  At m = 1
    the threshold is 0: any coherence at all already helps.
    """
    if m < 1:
        raise ValueError("m must be at least 1")
    return 1.0 - 2.0 ** (1.0 / m) / 2.0


def classical_report(m, prior=DEFAULT_PRIOR, n_paths=None):
    return DecisionReport(
        strategy="classical",
        m=m,
        posterior_ambiguous=classical_posterior_all_same(m, prior, n_paths),
        guess_rule="constant iff all m readings agree",
        error_probability=classical_error(m, prior, n_paths),
    )


def quantum_report(m, nu, n_paths=None):
    p_c, _ = quantum_posterior_all_zero(m, nu, n_paths)
    return DecisionReport(
        strategy="quantum",
        m=m,
        nu=nu,
        posterior_ambiguous=p_c,
        guess_rule="balanced iff no run exits",
        error_probability=quantum_error(m, nu, n_paths),
    )


def enumerate_two_trial_table(nu):
    """Posterior tables for both two-trial strategies under default priors.

    Returns ``{"classical": [...], "quantum": [...]}`` where each row is
    ``(outcome, p_constant, p_balanced, guess)``.  Classical outcomes are
    the shifter readings, quantum outcomes the exit indicators; the
    quantum likelihoods are the idealized ones, P(exit | constant) = nu
    and P(exit | balanced) = 0.
    """
    third = Fraction(1, 3)
    classical = [
        ((1, 1), 1 - third, third, "constant"),
        ((1, -1), 0, 1, "balanced"),
        ((-1, 1), 0, 1, "balanced"),
        ((-1, -1), 1 - third, third, "constant"),
    ]
    miss_sq = (1 - nu) ** 2
    p_c_00 = miss_sq / (miss_sq + 1)
    quantum = [
        ((0, 0), p_c_00, 1 - p_c_00, "balanced"),
        ((0, 1), 1, 0, "constant"),
        ((1, 0), 1, 0, "constant"),
        ((1, 1), 1, 0, "constant"),
    ]
    return {"classical": classical, "quantum": quantum}
