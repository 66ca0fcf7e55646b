//! Chunk sampling, per-class metrics, and the experiment harness.

use std::collections::BTreeMap;
use std::fs;
use std::path::PathBuf;

use crate::classifier::classify;
use crate::error::{Error, Result};
use crate::model::ClassifierModel;

/// Greedily split `text` into whitespace-delimited chunks. A chunk closes
/// as soon as its length (characters of the included words plus single
/// separating spaces) reaches `target_size`; the final chunk may be
/// shorter. Rejoining the chunks with single spaces reproduces the word
/// sequence of the input.
pub fn sample_chunks(text: &str, target_size: usize) -> Vec<String> {
    assert!(target_size >= 1, "target size must be at least 1");
    let mut chunks = Vec::new();
    let mut current = String::new();
    let mut current_len = 0usize;
    for word in text.split_whitespace() {
        if !current.is_empty() {
            current.push(' ');
            current_len += 1;
        }
        current.push_str(word);
        current_len += word.chars().count();
        if current_len >= target_size {
            chunks.push(std::mem::take(&mut current));
            current_len = 0;
        }
    }
    if !current.is_empty() {
        chunks.push(current);
    }
    chunks
}

/// Precision / recall / F1 for one true class, in percent.
#[derive(Debug, Clone, PartialEq)]
pub struct ClassMetrics {
    pub label: String,
    pub precision: f64,
    pub recall: f64,
    pub f1: f64,
    pub support: usize,
}

#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct Averages {
    pub precision: f64,
    pub recall: f64,
    pub f1: f64,
}

#[derive(Debug, Clone, PartialEq)]
pub struct EvalReport {
    /// One row per true class, sorted by label.
    pub classes: Vec<ClassMetrics>,
    pub accuracy: f64,
    pub macro_avg: Averages,
    pub weighted_avg: Averages,
    pub abstentions: usize,
    pub total: usize,
    /// Whether abstention was counted as an extra class in the macro
    /// denominator.
    pub abstain_as_class: bool,
}

/// Compute a report from (true label, predicted label or abstention)
/// pairs. Abstentions are always marked incorrect: they cost recall of
/// the true class and accuracy, and by default do not enter the macro
/// denominator; `abstain_as_class` adds one zero-metric class to it.
pub fn evaluate(
    pairs: &[(String, Option<String>)],
    abstain_as_class: bool,
) -> Result<EvalReport> {
    if pairs.is_empty() {
        return Err(Error::EmptyEvaluation);
    }

    let mut support: BTreeMap<&str, usize> = BTreeMap::new();
    let mut predicted: BTreeMap<&str, usize> = BTreeMap::new();
    let mut correct: BTreeMap<&str, usize> = BTreeMap::new();
    let mut abstentions = 0usize;
    let mut total_correct = 0usize;

    for (truth, prediction) in pairs {
        *support.entry(truth).or_insert(0) += 1;
        match prediction {
            Some(label) => {
                *predicted.entry(label).or_insert(0) += 1;
                if label == truth {
                    *correct.entry(truth).or_insert(0) += 1;
                    total_correct += 1;
                }
            }
            None => abstentions += 1,
        }
    }

    let total = pairs.len();
    let accuracy = percent(total_correct, total);

    let mut classes = Vec::with_capacity(support.len());
    for (&label, &sup) in &support {
        let tp = correct.get(label).copied().unwrap_or(0);
        let pred = predicted.get(label).copied().unwrap_or(0);
        let precision = percent(tp, pred);
        let recall = percent(tp, sup);
        let f1 = if precision + recall > 0.0 {
            2.0 * precision * recall / (precision + recall)
        } else {
            0.0
        };
        classes.push(ClassMetrics {
            label: label.to_string(),
            precision,
            recall,
            f1,
            support: sup,
        });
    }

    let macro_denominator = classes.len() + usize::from(abstain_as_class);
    let macro_avg = Averages {
        precision: classes.iter().map(|c| c.precision).sum::<f64>() / macro_denominator as f64,
        recall: classes.iter().map(|c| c.recall).sum::<f64>() / macro_denominator as f64,
        f1: classes.iter().map(|c| c.f1).sum::<f64>() / macro_denominator as f64,
    };
    let weighted_avg = Averages {
        precision: classes
            .iter()
            .map(|c| c.precision * c.support as f64)
            .sum::<f64>()
            / total as f64,
        recall: classes
            .iter()
            .map(|c| c.recall * c.support as f64)
            .sum::<f64>()
            / total as f64,
        f1: classes.iter().map(|c| c.f1 * c.support as f64).sum::<f64>() / total as f64,
    };

    Ok(EvalReport {
        classes,
        accuracy,
        macro_avg,
        weighted_avg,
        abstentions,
        total,
        abstain_as_class,
    })
}

fn percent(numerator: usize, denominator: usize) -> f64 {
    if denominator == 0 {
        0.0
    } else {
        100.0 * numerator as f64 / denominator as f64
    }
}

impl EvalReport {
    /// Aligned plain-text report, percentages to two decimals.
    pub fn render_text(&self) -> String {
        let mut out = String::new();
        out.push_str(&format!(
            "{:<12} {:>10} {:>10} {:>10} {:>10}\n",
            "", "precision", "recall", "f1-score", "support"
        ));
        for c in &self.classes {
            out.push_str(&format!(
                "{:<12} {:>10.2} {:>10.2} {:>10.2} {:>10}\n",
                c.label, c.precision, c.recall, c.f1, c.support
            ));
        }
        out.push('\n');
        out.push_str(&format!(
            "{:<12} {:>10} {:>10} {:>10.2} {:>10}\n",
            "accuracy", "", "", self.accuracy, self.total
        ));
        out.push_str(&format!(
            "{:<12} {:>10.2} {:>10.2} {:>10.2} {:>10}\n",
            "macro avg",
            self.macro_avg.precision,
            self.macro_avg.recall,
            self.macro_avg.f1,
            self.total
        ));
        out.push_str(&format!(
            "{:<12} {:>10.2} {:>10.2} {:>10.2} {:>10}\n",
            "weighted avg",
            self.weighted_avg.precision,
            self.weighted_avg.recall,
            self.weighted_avg.f1,
            self.total
        ));
        out.push_str(&format!("abstentions: {}\n", self.abstentions));
        out
    }

    /// Machine-readable tab-separated report: one row per class plus
    /// accuracy, macro and weighted rows.
    pub fn render_tsv(&self) -> String {
        let mut out = String::from("label\tprecision\trecall\tf1\tsupport\n");
        for c in &self.classes {
            out.push_str(&format!(
                "{}\t{:.2}\t{:.2}\t{:.2}\t{}\n",
                c.label, c.precision, c.recall, c.f1, c.support
            ));
        }
        out.push_str(&format!(
            "accuracy\t{:.2}\t{:.2}\t{:.2}\t{}\n",
            self.accuracy, self.accuracy, self.accuracy, self.total
        ));
        out.push_str(&format!(
            "macro_avg\t{:.2}\t{:.2}\t{:.2}\t{}\n",
            self.macro_avg.precision, self.macro_avg.recall, self.macro_avg.f1, self.total
        ));
        out.push_str(&format!(
            "weighted_avg\t{:.2}\t{:.2}\t{:.2}\t{}\n",
            self.weighted_avg.precision,
            self.weighted_avg.recall,
            self.weighted_avg.f1,
            self.total
        ));
        out
    }
}

/// Chunk every test file at `target_size`, label each chunk with its
/// file's language, classify, and evaluate.
pub fn run_experiment(
    model: &ClassifierModel,
    test_files: &BTreeMap<String, Vec<PathBuf>>,
    target_size: usize,
    abstain_as_class: bool,
) -> Result<EvalReport> {
    let pairs = experiment_pairs(model, test_files, target_size)?;
    evaluate(&pairs, abstain_as_class)
}

/// The labeled (truth, prediction) pairs behind `run_experiment`, exposed
/// so callers can post-process predictions (e.g. ensembles).
pub fn experiment_pairs(
    model: &ClassifierModel,
    test_files: &BTreeMap<String, Vec<PathBuf>>,
    target_size: usize,
) -> Result<Vec<(String, Option<String>)>> {
    let mut pairs = Vec::new();
    for (language, files) in test_files {
        for path in files {
            let text = fs::read_to_string(path).map_err(|e| Error::io(path, e))?;
            for chunk in sample_chunks(&text, target_size) {
                let prediction = classify(&chunk, model).winner().map(str::to_string);
                pairs.push((language.clone(), prediction));
            }
        }
    }
    Ok(pairs)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn greedy_chunking() {
        assert_eq!(sample_chunks("aa bb cc", 4), vec!["aa bb", "cc"]);
    }

    #[test]
    fn short_final_chunk() {
        assert_eq!(sample_chunks("hello", 16), vec!["hello"]);
    }

    #[test]
    fn target_one_gives_one_chunk_per_word() {
        assert_eq!(sample_chunks("a b c", 1), vec!["a", "b", "c"]);
    }

    #[test]
    fn empty_text_gives_no_chunks() {
        assert!(sample_chunks("", 8).is_empty());
        assert!(sample_chunks("   ", 8).is_empty());
    }

    #[test]
    fn chunk_length_counts_characters_not_bytes() {
        // four two-byte characters: closes at the second word with k=3
        assert_eq!(sample_chunks("éé éé", 3), vec!["éé éé"]);
        assert_eq!(sample_chunks("éé éé", 2), vec!["éé", "éé"]);
    }

    fn pairs(spec: &[(&str, Option<&str>)]) -> Vec<(String, Option<String>)> {
        spec.iter()
            .map(|(t, p)| (t.to_string(), p.map(str::to_string)))
            .collect()
    }

    #[test]
    fn perfect_classifier() {
        let report = evaluate(
            &pairs(&[("a", Some("a")), ("b", Some("b"))]),
            false,
        )
        .unwrap();
        assert_eq!(report.accuracy, 100.0);
        assert!(report.classes.iter().all(|c| c.f1 == 100.0));
    }

    #[test]
    fn hand_computed_four_sample_example() {
        let report = evaluate(
            &pairs(&[
                ("a", Some("a")),
                ("a", None),
                ("b", Some("b")),
                ("b", Some("a")),
            ]),
            false,
        )
        .unwrap();
        assert_eq!(report.accuracy, 50.0);
        let a = &report.classes[0];
        assert_eq!((a.precision, a.recall, a.f1), (50.0, 50.0, 50.0));
        let b = &report.classes[1];
        assert_eq!(b.precision, 100.0);
        assert_eq!(b.recall, 50.0);
        assert!((b.f1 - 200.0 / 3.0).abs() < 1e-9);
        assert!((report.macro_avg.f1 - (50.0 + 200.0 / 3.0) / 2.0).abs() < 1e-9);
        assert!((report.macro_avg.f1 - 58.33).abs() < 0.01);
        assert_eq!(report.abstentions, 1);
    }

    #[test]
    fn all_abstained_single_class() {
        let report = evaluate(&pairs(&[("a", None), ("a", None)]), false).unwrap();
        assert_eq!(report.accuracy, 0.0);
        let a = &report.classes[0];
        assert_eq!((a.precision, a.recall, a.f1), (0.0, 0.0, 0.0));
        assert_eq!(report.abstentions, 2);
    }

    #[test]
    fn empty_input_is_an_error() {
        assert!(matches!(evaluate(&[], false), Err(Error::EmptyEvaluation)));
    }

    #[test]
    fn weighted_recall_equals_accuracy() {
        let report = evaluate(
            &pairs(&[
                ("a", Some("b")),
                ("a", Some("a")),
                ("b", None),
                ("c", Some("c")),
                ("c", Some("c")),
            ]),
            false,
        )
        .unwrap();
        assert!((report.weighted_avg.recall - report.accuracy).abs() < 1e-9);
    }

    #[test]
    fn abstain_class_mode_widens_macro_denominator() {
        let p = pairs(&[("a", Some("a")), ("a", None), ("b", Some("b"))]);
        let base = evaluate(&p, false).unwrap();
        let extra = evaluate(&p, true).unwrap();
        let n = base.classes.len() as f64;
        assert!((extra.macro_avg.f1 - base.macro_avg.f1 * n / (n + 1.0)).abs() < 1e-9);
        // accuracy and weighted averages unchanged
        assert_eq!(extra.accuracy, base.accuracy);
        assert_eq!(extra.weighted_avg, base.weighted_avg);
    }
}
