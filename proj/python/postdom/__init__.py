"""Exact posterior dominance computations.

Probabilities are fractions.Fraction values (ints and "n/d" strings are
accepted on input). States, signals and sets of states are 0-based indices.
"""

from ._core import (
    PostdomError,
    apply_sequence,
    check_prop1,
    conditional_prior,
    fosd_dominates,
    gamma_strengthen,
    is_gamma_optimistic,
    is_gamma_pessimistic,
    is_mlrp,
    lr_dominates,
    lr_dominates_oracle,
    optimism_witness,
    posterior_curve,
    prior_lr_dominates,
    run_suite,
    segment_coefficient,
    signal_conditional,
    signal_marginal,
    strengthening_sequence,
    suite_names,
    upper_set_decomposition,
    worked_example,
)

__all__ = [name for name in dir() if not name.startswith("_")]
