"""Quantum switch of time-dependent channels."""

from ._core import (
    ChannelFamily,
    ChannelKind,
    PostSelectionError,
    apply_channel,
    apply_cqs,
    certify_cp_divisibility,
    commutativity_defect,
    evolve_reduced,
    helstrom_error,
    kraus,
    run_experiment,
    scan_monotonicity,
    trace_distance,
    uqs_outputs,
)

__all__ = [
    "ChannelFamily",
    "ChannelKind",
    "PostSelectionError",
    "apply_channel",
    "apply_cqs",
    "certify_cp_divisibility",
    "commutativity_defect",
    "evolve_reduced",
    "helstrom_error",
    "kraus",
    "run_experiment",
    "scan_monotonicity",
    "trace_distance",
    "uqs_outputs",
]
