//! Bootstraps new high-value words from already-classified texts.
//!
//! Texts are classified with the current model (abstentions contribute to
//! no language). For each predicted language, all words across its texts
//! are ranked by frequency; words in the top `top_n` ranks that are
//! missing from that language's rank table become candidates, unless the
//! candidate word by itself fails the character cutoff for its language.

use std::collections::BTreeMap;

use crate::classifier::{char_scores, classify, survivors};
use crate::model::{ClassifierModel, OverrideOp, OverridesSet};
use crate::tokenizer::tokenize;

/// A word seen frequently in texts classified as a language but missing
/// from (or ranked in) that language's table.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CandidateWord {
    pub language: String,
    pub word: String,
    /// 1-based rank by frequency among all words of the language's texts.
    pub conversational_rank: u32,
    /// Rank in the existing table, `None` when absent.
    pub base_rank: Option<u32>,
}

/// Default number of top conversational ranks to examine per language.
pub const DEFAULT_TOP_N: usize = 100;

pub fn harvest(
    texts: &[impl AsRef<str>],
    model: &ClassifierModel,
    top_n: usize,
) -> Vec<CandidateWord> {
    // words per predicted language
    let mut counts: BTreeMap<String, BTreeMap<String, u64>> = BTreeMap::new();
    for text in texts {
        let text = text.as_ref();
        let Some(language) = classify(text, model).winner().map(str::to_string) else {
            continue;
        };
        let per_lang = counts.entry(language).or_default();
        for word in tokenize(text).words {
            *per_lang.entry(word).or_insert(0) += 1;
        }
    }

    let mut candidates = Vec::new();
    for (language, word_counts) in counts {
        let table = match model.rank_table(&language) {
            Some(t) => t,
            None => continue,
        };
        // conversational rank over ALL words, then keep the unknown ones
        let mut ranked: Vec<(String, u64)> = word_counts.into_iter().collect();
        ranked.sort_by(|a, b| b.1.cmp(&a.1).then_with(|| a.0.cmp(&b.0)));
        for (i, (word, _)) in ranked.into_iter().take(top_n).enumerate() {
            if table.contains(&word) {
                continue;
            }
            if !passes_char_cutoff(&word, &language, model) {
                continue;
            }
            candidates.push(CandidateWord {
                language: language.clone(),
                word,
                conversational_rank: i as u32 + 1,
                base_rank: None,
            });
        }
    }
    candidates
}

/// A candidate is kept only if its language survives the character cutoff
/// when the word alone is treated as a text.
fn passes_char_cutoff(word: &str, language: &str, model: &ClassifierModel) -> bool {
    let stream = tokenize(word);
    let scores = char_scores(&stream.chars, model);
    survivors(&scores, model.params().char_cutoff_ratio)
        .iter()
        .any(|l| l == language)
}

/// Turn candidates into rank-table insertions. Per language, insertions
/// are ordered by ascending conversational rank so that after
/// `apply_overrides` the k-th conversational word sits at rank k.
pub fn to_overrides(candidates: &[CandidateWord]) -> OverridesSet {
    let mut sorted: Vec<&CandidateWord> = candidates.iter().collect();
    sorted.sort_by(|a, b| {
        a.language
            .cmp(&b.language)
            .then(a.conversational_rank.cmp(&b.conversational_rank))
    });
    let mut set = OverridesSet::new();
    for c in sorted {
        set.push(
            &c.language,
            OverrideOp::Insert {
                word: c.word.clone(),
                rank: c.conversational_rank as u64,
            },
        )
        .expect("harvested words satisfy entry rules");
    }
    set
}
