//! Per-language word-rank and character-frequency tables, the combined
//! classifier model, and the overrides editing mechanism.

use std::collections::{BTreeMap, HashMap};

use crate::error::{Error, Result};

/// Rank tables keep at most this many words unless configured otherwise.
pub const DEFAULT_CAPACITY: usize = 5000;
/// Score added for every word found in a rank table.
pub const DEFAULT_PRESENCE_WEIGHT: f64 = 0.05;
/// Damping constant inside the square root of the rank score.
pub const DEFAULT_DAMPING: f64 = 10.0;
/// Languages scoring below this fraction of the best character score are
/// dropped before word scoring.
pub const DEFAULT_CHAR_CUTOFF_RATIO: f64 = 0.75;

/// Scoring constants shared by every language in a model.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ScoringParams {
    pub presence_weight: f64,
    pub damping: f64,
    pub char_cutoff_ratio: f64,
}

impl Default for ScoringParams {
    fn default() -> Self {
        ScoringParams {
            presence_weight: DEFAULT_PRESENCE_WEIGHT,
            damping: DEFAULT_DAMPING,
            char_cutoff_ratio: DEFAULT_CHAR_CUTOFF_RATIO,
        }
    }
}

impl ScoringParams {
    pub fn validate(&self) -> Result<()> {
        if self.presence_weight < 0.0 || !self.presence_weight.is_finite() {
            return Err(Error::InvalidParams(format!(
                "presence weight must be >= 0, got {}",
                self.presence_weight
            )));
        }
        if self.damping <= 0.0 || !self.damping.is_finite() {
            return Err(Error::InvalidParams(format!(
                "damping must be > 0, got {}",
                self.damping
            )));
        }
        if self.char_cutoff_ratio <= 0.0 || self.char_cutoff_ratio > 1.0 {
            return Err(Error::InvalidParams(format!(
                "char cutoff ratio must be in (0, 1], got {}",
                self.char_cutoff_ratio
            )));
        }
        Ok(())
    }
}

/// Checks the rules every rank-table word must obey.
pub(crate) fn check_entry(language: &str, word: &str) -> Result<()> {
    let reason = if word.is_empty() {
        Some("empty word")
    } else if word.chars().any(char::is_whitespace) {
        Some("contains whitespace")
    } else if word.chars().any(char::is_numeric) {
        Some("contains a digit")
    } else if word.starts_with("http") {
        Some("starts with http")
    } else if word != word.to_lowercase() {
        Some("not lower-cased")
    } else {
        None
    };
    match reason {
        Some(reason) => Err(Error::InvalidEntry {
            language: language.to_string(),
            word: word.to_string(),
            reason: reason.to_string(),
        }),
        None => Ok(()),
    }
}

/// Ordered word list for one language. A word's 1-based position is its
/// rank; each entry carries the corpus count it was ranked by so models
/// can be saved and merged without losing information.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RankTable {
    language: String,
    entries: Vec<(String, u64)>,
    index: HashMap<String, u32>,
    capacity: usize,
}

impl RankTable {
    /// Build from unordered counts: sort by descending count, ties broken
    /// by ascending word order, then truncate to `capacity`.
    pub fn from_counts(
        language: &str,
        counts: impl IntoIterator<Item = (String, u64)>,
        capacity: usize,
    ) -> Result<Self> {
        let mut entries: Vec<(String, u64)> = counts.into_iter().collect();
        entries.sort_by(|a, b| b.1.cmp(&a.1).then_with(|| a.0.cmp(&b.0)));
        entries.truncate(capacity);
        Self::from_ranked(language, entries, capacity)
    }

    /// Build from an already-ordered list (rank = position). Validates the
    /// entry rules and distinctness; never repairs.
    pub fn from_ranked(
        language: &str,
        mut entries: Vec<(String, u64)>,
        capacity: usize,
    ) -> Result<Self> {
        entries.truncate(capacity);
        let mut index = HashMap::with_capacity(entries.len());
        for (pos, (word, _)) in entries.iter().enumerate() {
            check_entry(language, word)?;
            if index.insert(word.clone(), pos as u32 + 1).is_some() {
                return Err(Error::InvalidEntry {
                    language: language.to_string(),
                    word: word.clone(),
                    reason: "duplicate entry".to_string(),
                });
            }
        }
        Ok(RankTable {
            language: language.to_string(),
            entries,
            index,
            capacity,
        })
    }

    pub fn empty(language: &str, capacity: usize) -> Self {
        RankTable {
            language: language.to_string(),
            entries: Vec::new(),
            index: HashMap::new(),
            capacity,
        }
    }

    pub fn language(&self) -> &str {
        &self.language
    }

    pub fn capacity(&self) -> usize {
        self.capacity
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// 1-based rank of `word`, or `None` if absent.
    pub fn rank(&self, word: &str) -> Option<u32> {
        self.index.get(word).copied()
    }

    pub fn contains(&self, word: &str) -> bool {
        self.index.contains_key(word)
    }

    /// Entries in rank order with their counts.
    pub fn entries(&self) -> &[(String, u64)] {
        &self.entries
    }

    pub fn words(&self) -> impl Iterator<Item = &str> {
        self.entries.iter().map(|(w, _)| w.as_str())
    }

    /// Place `word` at `rank` (1-based), removing any existing occurrence
    /// first; everything at or below that rank shifts one deeper and the
    /// table is re-truncated to capacity. A rank past the end appends.
    fn insert_at(&mut self, word: &str, rank: u64) -> Result<()> {
        if rank < 1 {
            return Err(Error::InvalidRank { rank });
        }
        check_entry(&self.language, word)?;
        self.remove(word);
        let pos = ((rank - 1) as usize).min(self.entries.len());
        // Inserted words have no corpus count; borrow the count of the
        // entry they displace so saved files stay count-ordered.
        let count = self
            .entries
            .get(pos)
            .or_else(|| self.entries.last())
            .map(|(_, c)| *c)
            .unwrap_or(1);
        self.entries.insert(pos, (word.to_string(), count));
        self.entries.truncate(self.capacity);
        self.rebuild_index();
        Ok(())
    }

    /// Remove `word` and close the gap. Returns whether it was present.
    fn remove(&mut self, word: &str) -> bool {
        if let Some(pos) = self.entries.iter().position(|(w, _)| w == word) {
            self.entries.remove(pos);
            self.rebuild_index();
            true
        } else {
            false
        }
    }

    fn rebuild_index(&mut self) {
        self.index.clear();
        for (pos, (word, _)) in self.entries.iter().enumerate() {
            self.index.insert(word.clone(), pos as u32 + 1);
        }
    }
}

/// Relative character frequencies for one language, kept alongside the
/// raw counts they were normalized from so saving is lossless.
#[derive(Debug, Clone, PartialEq)]
pub struct CharFreqTable {
    language: String,
    counts: BTreeMap<char, u64>,
    freqs: HashMap<char, f64>,
    total: u64,
}

impl CharFreqTable {
    pub fn from_counts(
        language: &str,
        counts: impl IntoIterator<Item = (char, u64)>,
    ) -> Result<Self> {
        let counts: BTreeMap<char, u64> = counts.into_iter().collect();
        if counts.values().any(|&c| c == 0) {
            return Err(Error::InvalidParams(format!(
                "language {language}: character counts must be positive"
            )));
        }
        let total: u64 = counts.values().sum();
        if total == 0 {
            return Err(Error::EmptyCorpus {
                language: language.to_string(),
            });
        }
        let freqs = counts
            .iter()
            .map(|(&c, &n)| (c, n as f64 / total as f64))
            .collect();
        Ok(CharFreqTable {
            language: language.to_string(),
            counts,
            freqs,
            total,
        })
    }

    pub fn language(&self) -> &str {
        &self.language
    }

    /// Relative frequency of `c`, 0 when unseen.
    pub fn freq(&self, c: char) -> f64 {
        self.freqs.get(&c).copied().unwrap_or(0.0)
    }

    /// Raw counts, sorted by character.
    pub fn counts(&self) -> &BTreeMap<char, u64> {
        &self.counts
    }

    pub fn total(&self) -> u64 {
        self.total
    }
}

/// An immutable set of per-language rank tables and character tables plus
/// the scoring constants. Safe to share across threads.
#[derive(Debug, Clone, PartialEq)]
pub struct ClassifierModel {
    rank_tables: BTreeMap<String, RankTable>,
    char_tables: BTreeMap<String, CharFreqTable>,
    params: ScoringParams,
}

impl ClassifierModel {
    pub fn new(
        rank_tables: BTreeMap<String, RankTable>,
        char_tables: BTreeMap<String, CharFreqTable>,
        params: ScoringParams,
    ) -> Result<Self> {
        params.validate()?;
        for lang in rank_tables.keys() {
            if !char_tables.contains_key(lang) {
                return Err(Error::MissingLanguageFile {
                    language: lang.clone(),
                    expected: format!("{lang}_chars"),
                });
            }
        }
        for lang in char_tables.keys() {
            if !rank_tables.contains_key(lang) {
                return Err(Error::MissingLanguageFile {
                    language: lang.clone(),
                    expected: format!("{lang}_words"),
                });
            }
        }
        Ok(ClassifierModel {
            rank_tables,
            char_tables,
            params,
        })
    }

    /// A model with no languages; classification over it always abstains.
    pub fn empty() -> Self {
        ClassifierModel {
            rank_tables: BTreeMap::new(),
            char_tables: BTreeMap::new(),
            params: ScoringParams::default(),
        }
    }

    pub fn languages(&self) -> impl Iterator<Item = &str> {
        self.rank_tables.keys().map(|s| s.as_str())
    }

    pub fn num_languages(&self) -> usize {
        self.rank_tables.len()
    }

    pub fn rank_table(&self, language: &str) -> Option<&RankTable> {
        self.rank_tables.get(language)
    }

    pub fn char_table(&self, language: &str) -> Option<&CharFreqTable> {
        self.char_tables.get(language)
    }

    pub fn rank_tables(&self) -> &BTreeMap<String, RankTable> {
        &self.rank_tables
    }

    pub fn char_tables(&self) -> &BTreeMap<String, CharFreqTable> {
        &self.char_tables
    }

    pub fn params(&self) -> ScoringParams {
        self.params
    }

    pub fn with_params(mut self, params: ScoringParams) -> Result<Self> {
        params.validate()?;
        self.params = params;
        Ok(self)
    }
}

/// One edit to a language's rank table.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum OverrideOp {
    /// Place `word` at 1-based `rank`, shifting later entries down.
    Insert { word: String, rank: u64 },
    /// Remove `word`, closing the gap.
    Delete { word: String },
}

/// An ordered list of (language, edit) pairs, applied top to bottom.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct OverridesSet {
    ops: Vec<(String, OverrideOp)>,
}

impl OverridesSet {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn push(&mut self, language: &str, op: OverrideOp) -> Result<()> {
        if let OverrideOp::Insert { word, rank } = &op {
            if *rank < 1 {
                return Err(Error::InvalidRank { rank: *rank });
            }
            check_entry(language, word)?;
        }
        self.ops.push((language.to_string(), op));
        Ok(())
    }

    pub fn ops(&self) -> &[(String, OverrideOp)] {
        &self.ops
    }

    pub fn is_empty(&self) -> bool {
        self.ops.is_empty()
    }

    pub fn len(&self) -> usize {
        self.ops.len()
    }
}

/// Apply `overrides` to a copy of `model`, leaving the original intact.
pub fn apply_overrides(
    model: &ClassifierModel,
    overrides: &OverridesSet,
) -> Result<ClassifierModel> {
    let mut rank_tables = model.rank_tables.clone();
    for (language, op) in overrides.ops() {
        let table = rank_tables
            .get_mut(language)
            .ok_or_else(|| Error::UnknownLanguage {
                language: language.clone(),
            })?;
        match op {
            OverrideOp::Insert { word, rank } => table.insert_at(word, *rank)?,
            OverrideOp::Delete { word } => {
                table.remove(word);
            }
        }
    }
    ClassifierModel::new(rank_tables, model.char_tables.clone(), model.params)
}
