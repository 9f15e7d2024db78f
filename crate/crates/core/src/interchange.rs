//! Interchange forms: `⟨a,b,c⟩` text and `{"generators": [...]}` /
//! `{"semigroup": [...], "generators": [...]}` objects.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::ideal::RelativeIdeal;
use crate::semigroup::NumericalSemigroup;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SemigroupSpec {
    pub generators: Vec<i64>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct IdealSpec {
    pub semigroup: Vec<i64>,
    pub generators: Vec<i64>,
}

impl From<&NumericalSemigroup> for SemigroupSpec {
    fn from(h: &NumericalSemigroup) -> Self {
        SemigroupSpec {
            generators: h.minimal_generators().to_vec(),
        }
    }
}

impl From<&RelativeIdeal> for IdealSpec {
    fn from(e: &RelativeIdeal) -> Self {
        IdealSpec {
            semigroup: e.semigroup().minimal_generators().to_vec(),
            generators: e.min_gens().to_vec(),
        }
    }
}

/// Parses a base-10 integer. Well-formed integers outside the `i64` range
/// are reported as [`Error::Overflow`] rather than as malformed input.
pub fn parse_integer(text: &str) -> Result<i64> {
    let digits = text.strip_prefix(['-', '+']).unwrap_or(text);
    if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
        return Err(Error::InvalidNumber(text.to_string()));
    }
    text.parse::<i64>().map_err(|_| Error::Overflow)
}

/// Parses `⟨3,4,5⟩`, `<3,4,5>`, `[3, 4, 5]` or `3 4 5`.
pub fn parse_generator_list(text: &str) -> Result<Vec<i64>> {
    let inner = text
        .trim()
        .trim_start_matches(['⟨', '<', '['])
        .trim_end_matches(['⟩', '>', ']']);
    let gens = inner
        .split(|c: char| c == ',' || c.is_whitespace())
        .filter(|s| !s.is_empty())
        .map(parse_integer)
        .collect::<Result<Vec<i64>>>()?;
    if gens.is_empty() {
        return Err(Error::EmptyGenerators);
    }
    Ok(gens)
}
