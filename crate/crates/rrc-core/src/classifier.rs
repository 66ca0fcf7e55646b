//! Scores a text against every language in a model.
//!
//! Word evidence for a language is the sum over matched words of
//! `P + 1/sqrt(D + rank)`. Character evidence inverts the per-language
//! relative frequencies with a uniform prior, sums per-character
//! probabilities, and drops languages scoring below `cutoff_ratio` of the
//! best. The two are multiplied; a text with no surviving character
//! evidence or no word evidence gets an abstention rather than a guess.

use std::collections::BTreeMap;

use crate::model::{ClassifierModel, RankTable};
use crate::tokenizer::tokenize;

/// Per-language score breakdown for one classified text.
#[derive(Debug, Clone, PartialEq)]
pub struct LanguageScore {
    pub language: String,
    pub char_score: f64,
    pub word_score: f64,
    pub combined: f64,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum AbstainReason {
    /// Tokenization produced nothing at all.
    EmptyInput,
    /// No language passed the character cutoff.
    NoCharEvidence,
    /// Characters matched but no surviving language recognized any word.
    NoWordEvidence,
}

#[derive(Debug, Clone, PartialEq)]
pub enum Outcome {
    Winner { language: String, score: f64 },
    Abstain(AbstainReason),
}

#[derive(Debug, Clone, PartialEq)]
pub struct Prediction {
    pub outcome: Outcome,
    /// Surviving languages, sorted by combined score descending with ties
    /// broken by ascending language code. Informational on abstention.
    pub breakdown: Vec<LanguageScore>,
}

impl Prediction {
    pub fn winner(&self) -> Option<&str> {
        match &self.outcome {
            Outcome::Winner { language, .. } => Some(language),
            Outcome::Abstain(_) => None,
        }
    }

    pub fn is_abstention(&self) -> bool {
        matches!(self.outcome, Outcome::Abstain(_))
    }
}

/// Sum of `P + 1/sqrt(D + rank)` over tokens present in the table.
/// Tokens absent from the table contribute nothing.
pub fn word_score(words: &[String], table: &RankTable, presence_weight: f64, damping: f64) -> f64 {
    let mut score = 0.0;
    for word in words {
        if let Some(rank) = table.rank(word) {
            score += presence_weight + 1.0 / (damping + rank as f64).sqrt();
        }
    }
    score
}

/// Per-language character scores: each character contributes
/// `freq(c|L) / Σ_L' freq(c|L')` to language `L`; characters unseen in
/// every table contribute nothing anywhere.
pub fn char_scores(chars: &[char], model: &ClassifierModel) -> BTreeMap<String, f64> {
    let mut scores: BTreeMap<String, f64> = model
        .languages()
        .map(|l| (l.to_string(), 0.0))
        .collect();
    for &c in chars {
        let denom: f64 = model.char_tables().values().map(|t| t.freq(c)).sum();
        if denom <= 0.0 {
            continue;
        }
        for (lang, table) in model.char_tables() {
            let f = table.freq(c);
            if f > 0.0 {
                *scores.get_mut(lang).expect("language present") += f / denom;
            }
        }
    }
    scores
}

/// Languages scoring at least `cutoff_ratio` of the best character score.
/// All-zero (or empty) input survives nothing.
pub fn survivors(scores: &BTreeMap<String, f64>, cutoff_ratio: f64) -> Vec<String> {
    let best = scores.values().cloned().fold(0.0_f64, f64::max);
    if best <= 0.0 {
        return Vec::new();
    }
    let threshold = cutoff_ratio * best;
    scores
        .iter()
        .filter(|(_, &s)| s >= threshold)
        .map(|(l, _)| l.clone())
        .collect()
}

pub fn classify(text: &str, model: &ClassifierModel) -> Prediction {
    let stream = tokenize(text);
    if stream.is_empty() {
        return Prediction {
            outcome: Outcome::Abstain(AbstainReason::EmptyInput),
            breakdown: Vec::new(),
        };
    }

    let params = model.params();
    let scores = char_scores(&stream.chars, model);
    let surviving = survivors(&scores, params.char_cutoff_ratio);
    if surviving.is_empty() {
        return Prediction {
            outcome: Outcome::Abstain(AbstainReason::NoCharEvidence),
            breakdown: Vec::new(),
        };
    }

    let mut breakdown: Vec<LanguageScore> = surviving
        .into_iter()
        .map(|language| {
            let char_score = scores[&language];
            let table = model.rank_table(&language).expect("language present");
            let word_score = word_score(
                &stream.words,
                table,
                params.presence_weight,
                params.damping,
            );
            LanguageScore {
                combined: char_score * word_score,
                language,
                char_score,
                word_score,
            }
        })
        .collect();
    breakdown.sort_by(|a, b| {
        b.combined
            .partial_cmp(&a.combined)
            .expect("scores are finite")
            .then_with(|| a.language.cmp(&b.language))
    });

    let best = &breakdown[0];
    if best.word_score == 0.0 {
        return Prediction {
            outcome: Outcome::Abstain(AbstainReason::NoWordEvidence),
            breakdown,
        };
    }
    Prediction {
        outcome: Outcome::Winner {
            language: best.language.clone(),
            score: best.combined,
        },
        breakdown,
    }
}

/// Winning language code, or `None` on abstention.
pub fn get_winner(text: &str, model: &ClassifierModel) -> Option<String> {
    classify(text, model).winner().map(str::to_string)
}

/// Winning language and its combined score, or `None` on abstention.
pub fn get_winner_score(text: &str, model: &ClassifierModel) -> Option<(String, f64)> {
    let prediction = classify(text, model);
    match prediction.outcome {
        Outcome::Winner { language, score } => Some((language, score)),
        Outcome::Abstain(_) => None,
    }
}

/// Ordered (language, combined score) pairs for the surviving languages;
/// may be empty on abstention.
pub fn get_language_scores(text: &str, model: &ClassifierModel) -> Vec<(String, f64)> {
    classify(text, model)
        .breakdown
        .into_iter()
        .map(|s| (s.language, s.combined))
        .collect()
}
