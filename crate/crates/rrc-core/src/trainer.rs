//! Builds rank tables and character tables from per-language text corpora.

use std::collections::BTreeMap;
use std::fs;
use std::path::PathBuf;

use crate::error::{Error, Result};
use crate::model::{
    CharFreqTable, ClassifierModel, RankTable, ScoringParams, DEFAULT_CAPACITY,
};
use crate::tokenizer::tokenize;

/// Input file lists per language plus the rank-table capacity.
#[derive(Debug, Clone)]
pub struct CorpusSpec {
    pub files: BTreeMap<String, Vec<PathBuf>>,
    pub capacity: usize,
    pub params: ScoringParams,
}

impl CorpusSpec {
    pub fn new(files: BTreeMap<String, Vec<PathBuf>>) -> Self {
        CorpusSpec {
            files,
            capacity: DEFAULT_CAPACITY,
            params: ScoringParams::default(),
        }
    }
}

/// Per-language totals observed during training (pre-truncation).
#[derive(Debug, Clone, Default)]
pub struct TrainingStats {
    /// language -> (word tokens counted, characters counted)
    pub per_language: BTreeMap<String, (u64, u64)>,
}

pub fn train(spec: &CorpusSpec) -> Result<ClassifierModel> {
    train_with_stats(spec).map(|(model, _)| model)
}

pub fn train_with_stats(spec: &CorpusSpec) -> Result<(ClassifierModel, TrainingStats)> {
    spec.params.validate()?;
    let mut rank_tables = BTreeMap::new();
    let mut char_tables = BTreeMap::new();
    let mut stats = TrainingStats::default();

    for (language, files) in &spec.files {
        if files.is_empty() {
            return Err(Error::EmptyCorpusSpec {
                language: language.clone(),
            });
        }
        let mut word_counts: BTreeMap<String, u64> = BTreeMap::new();
        let mut char_counts: BTreeMap<char, u64> = BTreeMap::new();
        for path in files {
            let text = fs::read_to_string(path).map_err(|e| Error::io(path, e))?;
            let stream = tokenize(&text);
            for word in stream.words {
                *word_counts.entry(word).or_insert(0) += 1;
            }
            for c in stream.chars {
                *char_counts.entry(c).or_insert(0) += 1;
            }
        }
        let token_total: u64 = word_counts.values().sum();
        let char_total: u64 = char_counts.values().sum();
        if char_total == 0 {
            return Err(Error::EmptyCorpus {
                language: language.clone(),
            });
        }
        stats
            .per_language
            .insert(language.clone(), (token_total, char_total));
        rank_tables.insert(
            language.clone(),
            RankTable::from_counts(language, word_counts, spec.capacity)?,
        );
        char_tables.insert(
            language.clone(),
            CharFreqTable::from_counts(language, char_counts)?,
        );
    }

    let model = ClassifierModel::new(rank_tables, char_tables, spec.params)?;
    Ok((model, stats))
}
