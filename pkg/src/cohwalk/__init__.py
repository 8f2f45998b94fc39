"""Coherence-limited interferometer walk: simulation and decision errors.

A single particle crosses an N-path interferometer built from two
Fourier vertices; the phase shifters on the paths are promised to be
all equal, perfectly balanced, or biased by a known epsilon.  This
package simulates the walk exactly, dampens the path interference with
per-path marker qubits (overlap parameter nu), and reproduces the
closed-form exit probabilities, coherence measures, Bayesian error
rates, Chernoff bounds and subsequence statistics that govern how well
each promise class can be identified, with brute-force and Monte Carlo
cross-checks for all of them.
"""

__version__ = "0.1.0"

from .walk import (
    BoundaryError,
    PhasePattern,
    WalkGraph,
    build_graph,
    exit_amplitude,
    exit_probability_ideal,
    initial_state,
    run_walk,
    state_norm,
    step,
)
from .decoherence import (
    AncillaSpec,
    coherence_l1,
    compute_X,
    detection_probability,
    exit_probability,
    exit_probability_bound,
    full_tensor_oracle,
    overlaps,
    rho_int,
)
from .decision import (
    DEFAULT_PRIOR,
    DecisionReport,
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
from .epsilon import (
    ClassicalErrorBounds,
    EpsilonReport,
    MissProbability,
    TailProbabilities,
    chernoff_lower,
    chernoff_upper,
    classical_error_bounds,
    detection_count_threshold,
    epsilon_report,
    exact_tail_probabilities,
    is_epsilon_decision,
    quantum_miss_probability,
    y_statistic,
)
from .ensemble import (
    EnsembleParams,
    binomial_prob,
    convergence_gap,
    hypergeometric_prob,
    hypergeometric_prob_exact,
)
from .montecarlo import (
    MCResult,
    TrialConfig,
    analytic_error,
    run_experiment,
    sample_pattern,
    simulate_classical_trials,
    simulate_quantum_trials,
)
