//! Model directory persistence.
//!
//! A model directory holds two UTF-8 files per language code `LL`:
//!
//! - `LL_words`: one `word<TAB>count` record per line, sorted by descending
//!   count with ties broken by ascending word order; the line number is the
//!   word's rank.
//! - `LL_chars`: one `char<TAB>count` record per line, same sort rule,
//!   positive integer counts.
//!
//! Overrides live in a separate `overrides.tsv`: lines of either
//! `LL<TAB>+<TAB>word<TAB>rank` (insert) or `LL<TAB>-<TAB>word` (delete),
//! applied top to bottom.

use std::collections::BTreeMap;
use std::fs;
use std::io::Write;
use std::path::Path;

use crate::error::{Error, Result};
use crate::model::{
    CharFreqTable, ClassifierModel, OverrideOp, OverridesSet, RankTable, ScoringParams,
    DEFAULT_CAPACITY,
};

const WORDS_SUFFIX: &str = "_words";
const CHARS_SUFFIX: &str = "_chars";

/// Load a model directory using the default scoring constants and rank
/// capacity. An empty directory yields a model with zero languages.
pub fn load_model(dir: &Path) -> Result<ClassifierModel> {
    load_model_with(dir, ScoringParams::default(), DEFAULT_CAPACITY)
}

pub fn load_model_with(
    dir: &Path,
    params: ScoringParams,
    capacity: usize,
) -> Result<ClassifierModel> {
    let mut word_langs = Vec::new();
    let mut char_langs = Vec::new();
    let read_dir = fs::read_dir(dir).map_err(|e| Error::io(dir, e))?;
    for entry in read_dir {
        let entry = entry.map_err(|e| Error::io(dir, e))?;
        let name = entry.file_name();
        let Some(name) = name.to_str() else { continue };
        if let Some(lang) = name.strip_suffix(WORDS_SUFFIX) {
            word_langs.push(lang.to_string());
        } else if let Some(lang) = name.strip_suffix(CHARS_SUFFIX) {
            char_langs.push(lang.to_string());
        }
    }

    for lang in &word_langs {
        if !char_langs.contains(lang) {
            return Err(Error::MissingLanguageFile {
                language: lang.clone(),
                expected: format!("{lang}{CHARS_SUFFIX}"),
            });
        }
    }
    for lang in &char_langs {
        if !word_langs.contains(lang) {
            return Err(Error::MissingLanguageFile {
                language: lang.clone(),
                expected: format!("{lang}{WORDS_SUFFIX}"),
            });
        }
    }

    let mut rank_tables = BTreeMap::new();
    let mut char_tables = BTreeMap::new();
    for lang in &word_langs {
        let words_path = dir.join(format!("{lang}{WORDS_SUFFIX}"));
        let entries = read_word_file(&words_path)?;
        rank_tables.insert(
            lang.clone(),
            RankTable::from_ranked(lang, entries, capacity)?,
        );

        let chars_path = dir.join(format!("{lang}{CHARS_SUFFIX}"));
        let counts = read_char_file(&chars_path)?;
        char_tables.insert(lang.clone(), CharFreqTable::from_counts(lang, counts)?);
    }

    ClassifierModel::new(rank_tables, char_tables, params)
}

fn read_word_file(path: &Path) -> Result<Vec<(String, u64)>> {
    let text = fs::read_to_string(path).map_err(|e| Error::io(path, e))?;
    let mut entries = Vec::new();
    for (i, line) in text.lines().enumerate() {
        if line.is_empty() {
            continue;
        }
        let (word, count) = split_record(path, i + 1, line)?;
        entries.push((word.to_string(), count));
    }
    Ok(entries)
}

fn read_char_file(path: &Path) -> Result<Vec<(char, u64)>> {
    let text = fs::read_to_string(path).map_err(|e| Error::io(path, e))?;
    let mut counts = Vec::new();
    for (i, line) in text.lines().enumerate() {
        if line.is_empty() {
            continue;
        }
        let (field, count) = split_record(path, i + 1, line)?;
        let mut chars = field.chars();
        let (Some(c), None) = (chars.next(), chars.next()) else {
            return Err(Error::ModelFormat {
                path: path.to_path_buf(),
                line: i + 1,
                message: format!("expected a single character, got {field:?}"),
            });
        };
        if count == 0 {
            return Err(Error::ModelFormat {
                path: path.to_path_buf(),
                line: i + 1,
                message: "character counts must be positive".to_string(),
            });
        }
        counts.push((c, count));
    }
    Ok(counts)
}

fn split_record<'a>(path: &Path, line_no: usize, line: &'a str) -> Result<(&'a str, u64)> {
    let format_err = |message: String| Error::ModelFormat {
        path: path.to_path_buf(),
        line: line_no,
        message,
    };
    let (field, count) = line
        .split_once('\t')
        .ok_or_else(|| format_err("expected <value><TAB><count>".to_string()))?;
    let count: u64 = count
        .parse()
        .map_err(|_| format_err(format!("invalid count {count:?}")))?;
    Ok((field, count))
}

/// Write `model` to `dir` (created if needed). `load_model` on the result
/// reproduces the model exactly.
pub fn save_model(model: &ClassifierModel, dir: &Path) -> Result<()> {
    fs::create_dir_all(dir).map_err(|e| Error::io(dir, e))?;
    for (lang, table) in model.rank_tables() {
        let path = dir.join(format!("{lang}{WORDS_SUFFIX}"));
        let mut out = String::new();
        for (word, count) in table.entries() {
            out.push_str(word);
            out.push('\t');
            out.push_str(&count.to_string());
            out.push('\n');
        }
        write_file(&path, &out)?;
    }
    for (lang, table) in model.char_tables() {
        let path = dir.join(format!("{lang}{CHARS_SUFFIX}"));
        let mut records: Vec<(char, u64)> = table.counts().iter().map(|(&c, &n)| (c, n)).collect();
        records.sort_by(|a, b| b.1.cmp(&a.1).then_with(|| a.0.cmp(&b.0)));
        let mut out = String::new();
        for (c, count) in records {
            out.push(c);
            out.push('\t');
            out.push_str(&count.to_string());
            out.push('\n');
        }
        write_file(&path, &out)?;
    }
    Ok(())
}

fn write_file(path: &Path, contents: &str) -> Result<()> {
    let mut f = fs::File::create(path).map_err(|e| Error::io(path, e))?;
    f.write_all(contents.as_bytes())
        .map_err(|e| Error::io(path, e))
}

/// Parse an `overrides.tsv` file.
pub fn read_overrides(path: &Path) -> Result<OverridesSet> {
    let text = fs::read_to_string(path).map_err(|e| Error::io(path, e))?;
    let mut set = OverridesSet::new();
    for (i, line) in text.lines().enumerate() {
        if line.is_empty() {
            continue;
        }
        let format_err = |message: String| Error::ModelFormat {
            path: path.to_path_buf(),
            line: i + 1,
            message,
        };
        let fields: Vec<&str> = line.split('\t').collect();
        match fields.as_slice() {
            [lang, "+", word, rank] => {
                let rank: u64 = rank
                    .parse()
                    .map_err(|_| format_err(format!("invalid rank {rank:?}")))?;
                set.push(
                    lang,
                    OverrideOp::Insert {
                        word: word.to_string(),
                        rank,
                    },
                )?;
            }
            [lang, "-", word] => {
                set.push(
                    lang,
                    OverrideOp::Delete {
                        word: word.to_string(),
                    },
                )?;
            }
            _ => {
                return Err(format_err(
                    "expected LL<TAB>+<TAB>word<TAB>rank or LL<TAB>-<TAB>word".to_string(),
                ))
            }
        }
    }
    Ok(set)
}

pub fn write_overrides(set: &OverridesSet, path: &Path) -> Result<()> {
    let mut out = String::new();
    for (lang, op) in set.ops() {
        match op {
            OverrideOp::Insert { word, rank } => {
                out.push_str(&format!("{lang}\t+\t{word}\t{rank}\n"));
            }
            OverrideOp::Delete { word } => {
                out.push_str(&format!("{lang}\t-\t{word}\n"));
            }
        }
    }
    write_file(path, &out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::fs;

    #[test]
    fn load_simple_model() {
        let dir = tempfile::tempdir().unwrap();
        fs::write(dir.path().join("en_words"), "the\t3\nof\t2\nand\t1\n").unwrap();
        fs::write(dir.path().join("en_chars"), "e\t2\nt\t1\nh\t1\n").unwrap();
        let model = load_model(dir.path()).unwrap();
        assert_eq!(model.rank_table("en").unwrap().rank("of"), Some(2));
        assert_eq!(model.char_table("en").unwrap().freq('e'), 0.5);
    }

    #[test]
    fn missing_counterpart_names_language() {
        let dir = tempfile::tempdir().unwrap();
        fs::write(dir.path().join("de_words"), "und\t1\n").unwrap();
        let err = load_model(dir.path()).unwrap_err();
        match err {
            Error::MissingLanguageFile { language, .. } => assert_eq!(language, "de"),
            other => panic!("unexpected error {other:?}"),
        }
    }

    #[test]
    fn empty_directory_is_zero_language_model() {
        let dir = tempfile::tempdir().unwrap();
        let model = load_model(dir.path()).unwrap();
        assert_eq!(model.num_languages(), 0);
    }

    #[test]
    fn malformed_line_reports_position() {
        let dir = tempfile::tempdir().unwrap();
        fs::write(dir.path().join("en_words"), "the\t3\nbroken line\n").unwrap();
        fs::write(dir.path().join("en_chars"), "e\t1\n").unwrap();
        let err = load_model(dir.path()).unwrap_err();
        match err {
            Error::ModelFormat { line, .. } => assert_eq!(line, 2),
            other => panic!("unexpected error {other:?}"),
        }
    }

    #[test]
    fn invalid_word_entry_is_an_error() {
        let dir = tempfile::tempdir().unwrap();
        fs::write(dir.path().join("en_words"), "http-link\t3\n").unwrap();
        fs::write(dir.path().join("en_chars"), "e\t1\n").unwrap();
        assert!(matches!(
            load_model(dir.path()),
            Err(Error::InvalidEntry { .. })
        ));
    }

    #[test]
    fn zero_char_count_rejected() {
        let dir = tempfile::tempdir().unwrap();
        fs::write(dir.path().join("en_words"), "the\t3\n").unwrap();
        fs::write(dir.path().join("en_chars"), "e\t0\n").unwrap();
        assert!(load_model(dir.path()).is_err());
    }

    #[test]
    fn word_file_truncated_to_capacity() {
        let dir = tempfile::tempdir().unwrap();
        fs::write(dir.path().join("en_words"), "a\t3\nb\t2\nc\t1\n").unwrap();
        fs::write(dir.path().join("en_chars"), "e\t1\n").unwrap();
        let model = load_model_with(dir.path(), ScoringParams::default(), 2).unwrap();
        assert_eq!(model.rank_table("en").unwrap().len(), 2);
        assert_eq!(model.rank_table("en").unwrap().rank("c"), None);
    }

    #[test]
    fn save_load_round_trip() {
        let src = tempfile::tempdir().unwrap();
        fs::write(src.path().join("en_words"), "the\t3\nof\t2\n").unwrap();
        fs::write(src.path().join("en_chars"), "e\t2\nt\t1\n").unwrap();
        fs::write(src.path().join("fr_words"), "de\t5\nla\t4\n").unwrap();
        fs::write(src.path().join("fr_chars"), "e\t7\nà\t1\n").unwrap();
        let model = load_model(src.path()).unwrap();

        let dst = tempfile::tempdir().unwrap();
        save_model(&model, dst.path()).unwrap();
        let reloaded = load_model(dst.path()).unwrap();
        assert_eq!(model, reloaded);
    }

    #[test]
    fn overrides_round_trip() {
        let mut set = OverridesSet::new();
        set.push(
            "en",
            OverrideOp::Insert {
                word: "please".to_string(),
                rank: 11,
            },
        )
        .unwrap();
        set.push(
            "en",
            OverrideOp::Delete {
                word: "of".to_string(),
            },
        )
        .unwrap();
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("overrides.tsv");
        write_overrides(&set, &path).unwrap();
        let read = read_overrides(&path).unwrap();
        assert_eq!(set, read);
    }

    #[test]
    fn malformed_overrides_rejected() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("overrides.tsv");
        fs::write(&path, "en\t*\tword\n").unwrap();
        assert!(matches!(
            read_overrides(&path),
            Err(Error::ModelFormat { line: 1, .. })
        ));
    }
}
