//! Splits raw text into the word tokens used for rank scoring and the
//! character stream used for frequency scoring.
//!
//! The rules, applied in order:
//!
//! 1. Every angle-bracket span (`<` up to the next `>`, or end of string
//!    if unclosed) is replaced by a single space.
//! 2. The text is split on whitespace and any raw token whose lower-cased
//!    form starts with `http` is dropped whole, so URLs never leak word
//!    fragments.
//! 3. Within each surviving token, punctuation becomes a space, except a
//!    period or ASCII apostrophe with alphabetic characters on both sides
//!    (`U.S.A` stays intact, the outer quotes of `'Rick's'` do not).
//! 4. The result is re-split on whitespace.
//! 5. Tokens containing a numeric character are dropped, as is any
//!    residual token starting with `http`.
//! 6. Word tokens are lower-cased.
//!
//! The character stream is every non-whitespace character of the text
//! after step 1, case preserved.

/// Word tokens plus the character stream of one input text.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct TokenStream {
    /// Lower-cased word tokens, in order of appearance.
    pub words: Vec<String>,
    /// Non-whitespace characters outside angle-bracket spans, case preserved.
    pub chars: Vec<char>,
}

impl TokenStream {
    pub fn is_empty(&self) -> bool {
        self.words.is_empty() && self.chars.is_empty()
    }
}

pub fn tokenize(text: &str) -> TokenStream {
    let stripped = strip_angle_spans(text);

    let chars: Vec<char> = stripped.chars().filter(|c| !c.is_whitespace()).collect();

    let mut words = Vec::new();
    for raw in stripped.split_whitespace() {
        if starts_with_http(raw) {
            continue;
        }
        let replaced = replace_punctuation(raw);
        for piece in replaced.split_whitespace() {
            if piece.chars().any(char::is_numeric) {
                continue;
            }
            let lower = piece.to_lowercase();
            if lower.starts_with("http") {
                continue;
            }
            words.push(lower);
        }
    }

    TokenStream { words, chars }
}

/// Replace each `<...>` span (brackets included) with a single space.
/// An unclosed `<` removes everything to the end of the string.
fn strip_angle_spans(text: &str) -> String {
    if !text.contains('<') {
        return text.to_string();
    }
    let mut out = String::with_capacity(text.len());
    let mut in_span = false;
    for c in text.chars() {
        if in_span {
            if c == '>' {
                in_span = false;
                out.push(' ');
            }
        } else if c == '<' {
            in_span = true;
        } else {
            out.push(c);
        }
    }
    if in_span {
        out.push(' ');
    }
    out
}

fn starts_with_http(token: &str) -> bool {
    let mut expected = "http".chars();
    for c in token.chars().take(4) {
        match expected.next() {
            Some(e) if c.to_lowercase().eq(e.to_lowercase()) => {}
            _ => return false,
        }
    }
    expected.next().is_none()
}

/// Punctuation is anything neither alphabetic nor numeric; a period or
/// ASCII apostrophe flanked by alphabetic characters is kept.
fn replace_punctuation(token: &str) -> String {
    let cs: Vec<char> = token.chars().collect();
    let mut out = String::with_capacity(token.len());
    for (i, &c) in cs.iter().enumerate() {
        let keep = if c.is_alphabetic() || c.is_numeric() {
            true
        } else if c == '\'' || c == '.' {
            i > 0
                && cs[i - 1].is_alphabetic()
                && i + 1 < cs.len()
                && cs[i + 1].is_alphabetic()
        } else {
            false
        };
        out.push(if keep { c } else { ' ' });
    }
    out
}
