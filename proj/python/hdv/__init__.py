"""Bipolar MAP hypervector engine.

Deterministic seeded vector generation, the bind/bundle/permute algebra,
named codebooks with nearest-neighbor cleanup, and the three modeling
layers built on them: action-sequence prediction, style mapping, and
project-context queries. All heavy lifting lives in the compiled
extension; this package only re-exports it.
"""

from hdv._core import (
    Accumulator,
    ActionEvent,
    AttributeResolution,
    CleanupResult,
    Codebook,
    Hypervector,
    Profile,
    RestyleOutcome,
    SequenceModel,
    StyleMapping,
    TrainReport,
    bind,
    build_mapping,
    build_style_profile,
    context_similarity,
    default_tau,
    dot,
    encode_context,
    encode_window,
    generate,
    infer_style,
    load_codebook,
    load_context_profile,
    load_model,
    load_style_profile,
    merge,
    normalize,
    parse_seed,
    permute,
    predict,
    profile_vector,
    query_role,
    read_action_log,
    restyle,
    save_codebook,
    save_model,
    save_profile,
    similarity,
    train,
    transition_map,
    translate_value,
    write_action_log,
)

__all__ = [
    "Accumulator",
    "ActionEvent",
    "AttributeResolution",
    "CleanupResult",
    "Codebook",
    "Hypervector",
    "Profile",
    "RestyleOutcome",
    "SequenceModel",
    "StyleMapping",
    "TrainReport",
    "bind",
    "build_mapping",
    "build_style_profile",
    "context_similarity",
    "default_tau",
    "dot",
    "encode_context",
    "encode_window",
    "generate",
    "infer_style",
    "load_codebook",
    "load_context_profile",
    "load_model",
    "load_style_profile",
    "merge",
    "normalize",
    "parse_seed",
    "permute",
    "predict",
    "profile_vector",
    "query_role",
    "read_action_log",
    "restyle",
    "save_codebook",
    "save_model",
    "save_profile",
    "similarity",
    "train",
    "transition_map",
    "translate_value",
    "write_action_log",
]
