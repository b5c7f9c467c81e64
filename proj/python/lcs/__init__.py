"""Learned compressive sampling: pattern learning, decoding and evaluation."""

from ._core import (
    LcsError,
    Pattern,
    Transform,
    best_n_pattern,
    captured_fraction,
    compute_scores,
    evaluate,
    generalization_bound,
    learn,
    learn_pattern,
    log_binomial,
    lowpass_signals,
    normalized_error,
    psnr,
    reconstruct,
    sample_uniform,
    sample_variable_density,
    tune_variable_density,
)

__all__ = [
    "LcsError",
    "Pattern",
    "Transform",
    "best_n_pattern",
    "captured_fraction",
    "compute_scores",
    "evaluate",
    "generalization_bound",
    "learn",
    "learn_pattern",
    "log_binomial",
    "lowpass_signals",
    "normalized_error",
    "psnr",
    "reconstruct",
    "sample_uniform",
    "sample_variable_density",
    "tune_variable_density",
]
