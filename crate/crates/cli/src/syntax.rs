//! Whitespace-separated word syntax.
//!
//! A token is a generator name optionally followed by `^k` for a nonzero
//! integer `k`; `^-1` marks an inverse. The token `1` stands for the empty
//! word. Which names exist depends on the instance, see
//! [`Frontend::expand`](crate::frontend::Frontend::expand).

use lcm_core::SignedLetter;

use crate::error::CliError;
use crate::frontend::Frontend;

pub const DEFAULT_MAX_WORD_LEN: usize = 64;

#[derive(Clone, Debug, PartialEq, Eq)]
struct Token<'a> {
    base: &'a str,
    exponent: i64,
}

fn tokenize(text: &str) -> Result<Vec<Token<'_>>, CliError> {
    let mut out = Vec::new();
    for raw in text.split_whitespace() {
        if raw == "1" {
            continue;
        }
        let (base, exponent) = match raw.split_once('^') {
            None => (raw, 1),
            Some((base, exp)) => {
                let exponent: i64 = exp
                    .parse()
                    .map_err(|_| CliError::usage(format!("bad exponent in `{raw}`")))?;
                if exponent == 0 {
                    return Err(CliError::usage(format!("zero exponent in `{raw}`")));
                }
                (base, exponent)
            }
        };
        if base.is_empty() {
            return Err(CliError::usage(format!("missing generator in `{raw}`")));
        }
        out.push(Token { base, exponent });
    }
    Ok(out)
}

fn expanded<'a, F: Frontend + ?Sized>(
    monoid: &F,
    text: &'a str,
    max_len: usize,
) -> Result<Vec<(Token<'a>, Vec<usize>)>, CliError> {
    let tokens = tokenize(text)?;
    let mut total: u128 = 0;
    let mut out = Vec::with_capacity(tokens.len());
    for t in tokens {
        let letters = monoid.expand(t.base).ok_or_else(|| {
            CliError::usage(format!("`{}` is not a generator of {}", t.base, monoid.spec()))
        })?;
        total += letters.len() as u128 * t.exponent.unsigned_abs() as u128;
        if total > max_len as u128 {
            return Err(CliError::usage(format!(
                "word is longer than {max_len} letters; raise --max-word-len"
            )));
        }
        out.push((t, letters));
    }
    Ok(out)
}

/// A positive word as zero-based generator indices.
pub fn parse_positive<F: Frontend + ?Sized>(
    monoid: &F,
    text: &str,
    max_len: usize,
) -> Result<Vec<usize>, CliError> {
    let mut word = Vec::new();
    for (t, letters) in expanded(monoid, text, max_len)? {
        if t.exponent < 0 {
            return Err(CliError::usage(format!(
                "inverse `{}^{}` not allowed in a monoid word",
                t.base, t.exponent
            )));
        }
        for _ in 0..t.exponent {
            word.extend_from_slice(&letters);
        }
    }
    Ok(word)
}

/// A word in generators and their inverses.
pub fn parse_signed<F: Frontend + ?Sized>(
    monoid: &F,
    text: &str,
    max_len: usize,
) -> Result<Vec<SignedLetter>, CliError> {
    let mut word = Vec::new();
    for (t, letters) in expanded(monoid, text, max_len)? {
        for _ in 0..t.exponent.unsigned_abs() {
            if t.exponent > 0 {
                word.extend(letters.iter().map(|&g| SignedLetter::positive(g)));
            } else {
                word.extend(letters.iter().rev().map(|&g| SignedLetter::negative(g)));
            }
        }
    }
    Ok(word)
}
