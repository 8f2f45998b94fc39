"""Distinguishing a balanced pattern from one with a small known bias.

Here the promise is that the mean sign is either 0 (balanced) or a known
epsilon > 0.  The quantum strategy runs the walk m times and declares
the biased case on the first exit; since a balanced pattern (large N)
never produces an exit, this errs on one side only, missing the bias
with probability (1 - nu*eps^2)^m.  The classical strategy reads m
shifters and thresholds their mean Y at eps/2, which can err in both
directions; multiplicative Chernoff bounds control both tails, and
exact binomial or hypergeometric summation provides the ground truth.

Ties at Y exactly eps/2 count as the biased case.  Threshold arithmetic
tolerates the float representation of nominal epsilon values (0.2 read
as 0.2000...011 must not shift an integer cutoff), handled by a 1e-9
slack when the real-valued cutoff is mapped to an integer count.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import NamedTuple

from .ensemble import EnsembleParams, binomial_prob, hypergeometric_prob

TIE_TOL = 1e-9
BOUND_TOL = 1e-12
MAX_EXACT_TRIALS = 10**4


class MissProbability(NamedTuple):
    exact: float       # (1 - nu*eps^2)^m
    approx: float      # exp(-m*nu*eps^2)
    gap: float         # approx - exact, always >= 0


class ClassicalErrorBounds(NamedTuple):
    chernoff_false_eps: float   # bound on P(Y >= eps/2 | balanced)
    chernoff_false_bal: float   # bound on P(Y < eps/2 | biased)
    approx_false_eps: float     # quoted small-eps form exp(-eps^2 m / 8)
    approx_false_bal: float


class TailProbabilities(NamedTuple):
    false_eps: float    # P(Y >= eps/2 | balanced)
    false_bal: float    # P(Y < eps/2 | biased)


@dataclass(frozen=True)
class EpsilonReport:
    """Both strategies' error figures for one (m, epsilon, nu) setting."""

    epsilon: float
    m: int
    nu: float
    quantum_miss: float
    classical_false_eps: float
    classical_false_bal: float
    exact_false_eps: float | None = None
    exact_false_bal: float | None = None

    def __post_init__(self):
        if self.exact_false_eps is not None:
            if self.exact_false_eps > self.classical_false_eps + BOUND_TOL:
                raise AssertionError("exact false-eps tail exceeds its bound")
        if self.exact_false_bal is not None:
            if self.exact_false_bal > self.classical_false_bal + BOUND_TOL:
                raise AssertionError("exact false-balanced tail exceeds its bound")


def quantum_miss_probability(m, epsilon, nu=1.0):
    """Probability that m runs on a biased pattern never see an exit.

    Decoherence scales the per-run detection probability eps^2 down to
    nu*eps^2, so the miss probability is (1 - nu*eps^2)^m, with
    exp(-m*nu*eps^2) as the standard overestimate.
    """
    if m < 0:
        raise ValueError("m must be non-negative")
    if not 0 < epsilon < 1:
        raise ValueError("epsilon must lie in (0, 1)")
    if not 0 <= nu <= 1:
        raise ValueError("nu must lie in [0, 1]")
    rate = nu * epsilon * epsilon
    exact = (1.0 - rate) ** m
    approx = math.exp(-m * rate)
    return MissProbability(exact, approx, approx - exact)


def y_statistic(samples):
    """Mean of a sequence of +/-1 shifter readings."""
    samples = list(samples)
    if not samples:
        raise ValueError("y_statistic needs at least one sample")
    if any(s not in (1, -1) for s in samples):
        raise ValueError("samples must be +1 or -1")
    return sum(samples) / len(samples)


def is_epsilon_decision(y, epsilon):
    """Threshold rule: declare the biased case iff Y >= eps/2 (ties included)."""
    return y >= epsilon / 2 - TIE_TOL


def detection_count_threshold(m, epsilon):
    """Smallest +1 count k with mean (2k - m)/m >= eps/2.

    Y >= eps/2 is equivalent to k >= m*(1 + eps/2)/2; the 1e-9 slack
    keeps integer cutoffs stable under float epsilon values.
    """
    return math.ceil(m * (1 + epsilon / 2) / 2 - TIE_TOL)


def chernoff_upper(mu, delta):
    """Multiplicative Chernoff bound on the upper tail.

    For a sum of independent 0/1 variables with mean mu,
    P(X > (1+delta) mu) < [e^delta / (1+delta)^(1+delta)]^mu,
    evaluated in log space.
    """
    if mu <= 0:
        raise ValueError("mu must be positive")
    if delta <= 0:
        raise ValueError("delta must be positive")
    return math.exp(mu * (delta - (1 + delta) * math.log1p(delta)))


def chernoff_lower(mu, delta):
    """Chernoff bound on the lower tail: P(X < (1-delta) mu) < exp(-mu delta^2 / 2)."""
    if mu <= 0:
        raise ValueError("mu must be positive")
    if not 0 < delta < 1:
        raise ValueError("delta must lie in (0, 1)")
    return math.exp(-mu * delta * delta / 2)


def classical_error_bounds(m, epsilon):
    """Chernoff bounds for both failure modes of the threshold test.

    False-eps side (balanced truth): mu = m/2 and delta = eps/2.
    False-balanced side (biased truth): mu = m(1+eps)/2 and
    delta = eps / (2(1+eps)).  Both sides are conventionally quoted as
    exp(-eps^2 m / 8) for small eps; that quoted form is returned
    alongside the exact expressions.  (The exact expressions actually
    behave as exp(-eps^2 m / 16) to lowest order, so the quoted form is
    the more aggressive of the two; the exact values are authoritative.)
    """
    if m < 1:
        raise ValueError("m must be at least 1")
    if not 0 < epsilon <= 0.5:
        raise ValueError("epsilon must lie in (0, 0.5]")
    false_eps = chernoff_upper(m / 2, epsilon / 2)
    false_bal = chernoff_lower(m * (1 + epsilon) / 2, epsilon / (2 * (1 + epsilon)))
    quoted = math.exp(-epsilon * epsilon * m / 8)
    return ClassicalErrorBounds(false_eps, false_bal, quoted, quoted)


def exact_tail_probabilities(m, epsilon, n_paths=None):
    """Exact error probabilities of the threshold test by direct summation.

    With ``n_paths`` unset the readings are independent (binomial counts
    with success probability 1/2 or (1+eps)/2); with it they are drawn
    without replacement from a fixed composition of n_paths shifters
    (hypergeometric counts).  Terms are accumulated with compensated
    summation from the far tail.
    """
    if m < 1:
        raise ValueError("m must be at least 1")
    if not 0 < epsilon <= 1:
        raise ValueError("epsilon must lie in (0, 1]")
    k_min = detection_count_threshold(m, epsilon)

    if n_paths is None:
        if m > MAX_EXACT_TRIALS:
            raise ValueError(f"binomial summation limited to m <= {MAX_EXACT_TRIALS}")
        false_eps = math.fsum(
            binomial_prob(m, k, 0.5) for k in range(m, k_min - 1, -1)
        )
        p_plus = (1 + epsilon) / 2
        false_bal = math.fsum(binomial_prob(m, k, p_plus) for k in range(k_min))
        return TailProbabilities(false_eps, false_bal)

    n = n_paths
    if m > n:
        raise ValueError("cannot sample more shifters than paths")
    if n % 2 != 0:
        raise ValueError("balanced composition needs an even number of paths")
    k_biased = (1 + epsilon) * n / 2
    if abs(k_biased - round(k_biased)) > 1e-9:
        raise ValueError(f"(1+epsilon)*N/2 = {k_biased} is not an integer")
    false_eps = math.fsum(
        hypergeometric_prob(EnsembleParams(n, 0.5, m, k))
        for k in range(m, k_min - 1, -1)
    )
    p_biased = round(k_biased) / n
    false_bal = math.fsum(
        hypergeometric_prob(EnsembleParams(n, p_biased, m, k)) for k in range(k_min)
    )
    return TailProbabilities(false_eps, false_bal)


def epsilon_report(m, epsilon, nu=1.0, n_paths=None, include_exact=True):
    """Assemble the full error report for one parameter setting."""
    miss = quantum_miss_probability(m, epsilon, nu)
    bounds = classical_error_bounds(m, epsilon)
    exact_eps = exact_bal = None
    if include_exact:
        tails = exact_tail_probabilities(m, epsilon, n_paths)
        exact_eps, exact_bal = tails.false_eps, tails.false_bal
    return EpsilonReport(
        epsilon=epsilon,
        m=m,
        nu=nu,
        quantum_miss=miss.exact,
        classical_false_eps=bounds.chernoff_false_eps,
        classical_false_bal=bounds.chernoff_false_bal,
        exact_false_eps=exact_eps,
        exact_false_bal=exact_bal,
    )
