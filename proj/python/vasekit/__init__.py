"""Python surface of the vasekit engine: verifiable caption rewards,
group-relative advantages, dataset filtering replay and eval metrics."""

from ._vasekit import (  # noqa: F401
    DatasetManifest,
    Lexicon,
    RewardConfig,
    RewardWeights,
    ScoreRecord,
    VasekitError,
    __version__,
    compute_penalty,
    compute_reward,
    cosine,
    dimensional_reward,
    embed_hashed_bow,
    evaluate_run,
    extract_slots,
    fragment_filter,
    group_advantages,
    load_manifest,
    normalize_text,
    quality_gate,
    recall_at_k,
    rouge_l,
    select_best_view,
    sequence_match_ratio,
    split_dataset,
    tokenize,
    validate_manifest,
    view_selection,
)
