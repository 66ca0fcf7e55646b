//! Reciprocal-rank language identification.
//!
//! A language is represented by a ranked list of its most frequent words
//! and a relative character frequency table. Word evidence is scored as
//! `P + 1/sqrt(D + rank)` per matched word; character evidence filters
//! out languages below a fraction of the best character score; the
//! classifier abstains instead of guessing when either kind of evidence
//! is missing. Tables are plain text files that can be trained from any
//! per-language corpus and hand-edited through an overrides mechanism.

pub mod classifier;
pub mod curation;
pub mod ensemble;
pub mod error;
pub mod evaluation;
pub mod model;
pub mod store;
pub mod tokenizer;
pub mod trainer;

pub use classifier::{
    char_scores, classify, get_language_scores, get_winner, get_winner_score, survivors,
    word_score, AbstainReason, LanguageScore, Outcome, Prediction,
};
pub use curation::{harvest, to_overrides, CandidateWord, DEFAULT_TOP_N};
pub use ensemble::{ensemble_classify, CharFrequencyFallback, FallbackClassifier};
pub use error::{Error, Result};
pub use evaluation::{
    evaluate, experiment_pairs, run_experiment, sample_chunks, Averages, ClassMetrics, EvalReport,
};
pub use model::{
    apply_overrides, CharFreqTable, ClassifierModel, OverrideOp, OverridesSet, RankTable,
    ScoringParams, DEFAULT_CAPACITY, DEFAULT_CHAR_CUTOFF_RATIO, DEFAULT_DAMPING,
    DEFAULT_PRESENCE_WEIGHT,
};
pub use store::{
    load_model, load_model_with, read_overrides, save_model, write_overrides,
};
pub use tokenizer::{tokenize, TokenStream};
pub use trainer::{train, train_with_stats, CorpusSpec, TrainingStats};
