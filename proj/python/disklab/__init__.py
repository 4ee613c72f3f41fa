"""Weighted Bergman, tent, and mixed-norm space laboratory on the unit disc."""

from ._disklab import (  # noqa: F401
    AnalyticFunction,
    ConvergenceReport,
    QuadConfig,
    RadialWeight,
    SpaceKind,
    SpaceSpec,
    bloch_norm,
    classify_dcheck,
    classify_dhat,
    condition_Dp,
    discrete_kernel_D,
    integrate_Tg,
    jn_index,
    kernel_Htilde,
    lp_seminorm,
    mixed_norm,
    mixed_norm_fn,
    nontangential_max,
    project,
    run_experiment,
    tent_norm,
    tent_norm_fn,
    w_maximal,
)

__all__ = [
    "AnalyticFunction",
    "ConvergenceReport",
    "QuadConfig",
    "RadialWeight",
    "SpaceKind",
    "SpaceSpec",
    "bloch_norm",
    "classify_dcheck",
    "classify_dhat",
    "condition_Dp",
    "discrete_kernel_D",
    "integrate_Tg",
    "jn_index",
    "kernel_Htilde",
    "lp_seminorm",
    "mixed_norm",
    "mixed_norm_fn",
    "nontangential_max",
    "project",
    "run_experiment",
    "tent_norm",
    "tent_norm_fn",
    "w_maximal",
]
