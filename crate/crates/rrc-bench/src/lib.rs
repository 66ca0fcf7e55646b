//! Benchmark fixtures shared by the criterion benches.

use std::collections::BTreeMap;

use rrc_core::{CharFreqTable, ClassifierModel, RankTable, ScoringParams};

/// A small two-language model with realistic table sizes.
pub fn bench_model() -> ClassifierModel {
    let mut ranks = BTreeMap::new();
    let mut chars = BTreeMap::new();

    let en_words: Vec<(String, u64)> = EN_WORDS
        .iter()
        .enumerate()
        .map(|(i, w)| (w.to_string(), (EN_WORDS.len() - i) as u64))
        .collect();
    ranks.insert(
        "en".to_string(),
        RankTable::from_ranked("en", en_words, 5000).unwrap(),
    );
    chars.insert(
        "en".to_string(),
        CharFreqTable::from_counts("en", ('a'..='z').map(|c| (c, 1)).collect::<Vec<_>>()).unwrap(),
    );

    let es_words: Vec<(String, u64)> = ES_WORDS
        .iter()
        .enumerate()
        .map(|(i, w)| (w.to_string(), (ES_WORDS.len() - i) as u64))
        .collect();
    ranks.insert(
        "es".to_string(),
        RankTable::from_ranked("es", es_words, 5000).unwrap(),
    );
    let mut es_chars: Vec<(char, u64)> = ('a'..='z').map(|c| (c, 1)).collect();
    es_chars.extend([('á', 1), ('é', 1), ('í', 1), ('ó', 1), ('ú', 1), ('ñ', 1)]);
    chars.insert(
        "es".to_string(),
        CharFreqTable::from_counts("es", es_chars).unwrap(),
    );

    ClassifierModel::new(ranks, chars, ScoringParams::default()).unwrap()
}

pub const SAMPLE_TEXT: &str = "the quick brown fox jumps over the lazy dog and \
    all of them were there when it happened, which is more than you can say \
    for most of the people who have been about this place in the last year.";

const EN_WORDS: &[&str] = &[
    "the", "of", "and", "to", "a", "in", "is", "was", "for", "as", "on", "with", "that", "by",
    "at", "from", "it", "his", "he", "this", "are", "be", "an", "or", "which", "you", "not",
    "we", "have", "has", "had", "they", "their", "but", "were", "all", "its", "one", "also",
    "can", "will", "about", "more", "when", "who", "what", "there", "been", "if", "out",
];

const ES_WORDS: &[&str] = &[
    "de", "la", "el", "en", "y", "a", "que", "los", "se", "del", "las", "un", "por", "con",
    "una", "su", "para", "es", "al", "lo", "como", "más", "o", "pero", "sus", "le", "ha",
    "me", "si", "sin", "sobre", "este", "ya", "entre", "cuando", "todo", "esta", "ser",
];
