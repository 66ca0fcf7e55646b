//! Abstention-fallback ensembling: a second, forced-choice classifier is
//! consulted only when the rank classifier abstains.

use crate::classifier::{char_scores, classify};
use crate::model::ClassifierModel;
use crate::tokenizer::tokenize;

/// A classifier that always answers, restricted to a declared language set.
pub trait FallbackClassifier {
    /// Forced-choice classification; must return a code from `languages`.
    fn classify_forced(&self, text: &str) -> String;

    /// The declared language set.
    fn languages(&self) -> Vec<String>;
}

/// Winner of the rank classifier when it has one, otherwise the fallback's
/// forced choice. The fallback's language set should be contained in the
/// model's.
pub fn ensemble_classify(
    text: &str,
    model: &ClassifierModel,
    fallback: &dyn FallbackClassifier,
) -> String {
    match classify(text, model).winner() {
        Some(language) => language.to_string(),
        None => fallback.classify_forced(text),
    }
}

/// Deterministic stub fallback: picks the language whose character table
/// best matches the text (ties and no-evidence cases resolve to the
/// lowest language code). Stands in for an external model in tests.
pub struct CharFrequencyFallback<'a> {
    model: &'a ClassifierModel,
}

impl<'a> CharFrequencyFallback<'a> {
    pub fn new(model: &'a ClassifierModel) -> Self {
        assert!(
            model.num_languages() > 0,
            "fallback needs at least one language"
        );
        CharFrequencyFallback { model }
    }
}

impl FallbackClassifier for CharFrequencyFallback<'_> {
    fn classify_forced(&self, text: &str) -> String {
        let stream = tokenize(text);
        let scores = char_scores(&stream.chars, self.model);
        scores
            .iter()
            .max_by(|a, b| {
                a.1.partial_cmp(b.1)
                    .expect("scores are finite")
                    // on ties, later comparisons prefer the earlier key
                    .then_with(|| b.0.cmp(a.0))
            })
            .map(|(l, _)| l.clone())
            .expect("model has languages")
    }

    fn languages(&self) -> Vec<String> {
        self.model.languages().map(str::to_string).collect()
    }
}
