use std::fmt;
use std::str::FromStr;

use super::Generator;
use crate::error::{Error, Result};

/// A formal product of generator powers, read left to right.
///
/// Adjacent powers of the same generator are merged and zero exponents
/// dropped, so the letter list is always freely reduced in that sense.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct GroupWord {
    letters: Vec<(Generator, i64)>,
}

impl GroupWord {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn letter(g: Generator, exponent: i64) -> Self {
        let mut w = Self::new();
        w.push(g, exponent);
        w
    }

    pub fn letters(&self) -> &[(Generator, i64)] {
        &self.letters
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    /// Number of letters counted with multiplicity.
    pub fn length(&self) -> u64 {
        self.letters.iter().map(|(_, e)| e.unsigned_abs()).sum()
    }

    pub fn push(&mut self, g: Generator, exponent: i64) {
        if exponent == 0 {
            return;
        }
        if let Some(last) = self.letters.last_mut() {
            if last.0 == g {
                last.1 += exponent;
                if last.1 == 0 {
                    self.letters.pop();
                }
                return;
            }
        }
        self.letters.push((g, exponent));
    }

    pub fn concat(&self, other: &GroupWord) -> GroupWord {
        let mut out = self.clone();
        for &(g, e) in &other.letters {
            out.push(g, e);
        }
        out
    }

    pub fn inverse(&self) -> GroupWord {
        let mut out = GroupWord::new();
        for &(g, e) in self.letters.iter().rev() {
            out.push(g, -e);
        }
        out
    }
}

impl FromIterator<(Generator, i64)> for GroupWord {
    fn from_iter<I: IntoIterator<Item = (Generator, i64)>>(iter: I) -> Self {
        let mut w = GroupWord::new();
        for (g, e) in iter {
            w.push(g, e);
        }
        w
    }
}

impl fmt::Display for GroupWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, (g, e)) in self.letters.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            if *e == 1 {
                write!(f, "{g}")?;
            } else {
                write!(f, "{g}^{e}")?;
            }
        }
        Ok(())
    }
}

impl FromStr for GroupWord {
    type Err = Error;

    /// Whitespace-separated letters such as `x0 x1^-1 c2^3 f12`. The empty
    /// string (or `1`) is the empty word.
    fn from_str(s: &str) -> Result<Self> {
        let mut w = GroupWord::new();
        for token in s.split_whitespace() {
            if token == "1" {
                continue;
            }
            let (name, exp) = match token.split_once('^') {
                Some((name, exp)) => {
                    let exp: i64 = exp
                        .parse()
                        .map_err(|_| Error::Parse(format!("exponent in `{token}`")))?;
                    (name, exp)
                }
                None => (token, 1),
            };
            let g: Generator = name
                .parse()
                .map_err(|_| Error::UnknownGenerator(token.to_string()))?;
            w.push(g, exp);
        }
        Ok(w)
    }
}
