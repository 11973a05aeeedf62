use std::fmt;
use std::str::FromStr;

use super::{Tree, TreePair};
use crate::error::{Error, Result};

/// Named elements of `T`.
///
/// `x_n` are the standard generators of `F` (`x_n = 1 ⊕ x_(n-1)`), `c_n` is the
/// rotation `(S_n, S_n, 2)` of order `n + 2` (so `c_0` is `f_1/2` and `c_1` is
/// the generator `c`), and `g_n = x_(n-1) x_n` for `n >= 1`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Generator {
    X(u32),
    C(u32),
    G(u32),
}

impl Generator {
    pub fn index(self) -> u32 {
        match self {
            Generator::X(n) | Generator::C(n) | Generator::G(n) => n,
        }
    }
}

impl fmt::Display for Generator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Generator::X(n) => write!(f, "x{n}"),
            Generator::C(n) => write!(f, "c{n}"),
            Generator::G(n) => write!(f, "g{n}"),
        }
    }
}

impl FromStr for Generator {
    type Err = Error;

    /// Accepts `x<i>`, `c<n>`, `g<n>` (n >= 1), and the aliases `c` (= `c1`)
    /// and `f12` (= `c0`).
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "c" => return Ok(Generator::C(1)),
            "f12" => return Ok(Generator::C(0)),
            _ => {}
        }
        let unknown = || Error::UnknownGenerator(s.to_string());
        let mut chars = s.chars();
        let head = chars.next().ok_or_else(unknown)?;
        let digits = chars.as_str();
        if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
            return Err(unknown());
        }
        let n: u32 = digits.parse().map_err(|_| unknown())?;
        match head {
            'x' => Ok(Generator::X(n)),
            'c' => Ok(Generator::C(n)),
            'g' if n >= 1 => Ok(Generator::G(n)),
            _ => Err(unknown()),
        }
    }
}

impl TreePair {
    pub fn generator(g: Generator) -> Result<Self> {
        match g {
            Generator::X(n) => Ok(Self::x(n)),
            Generator::C(n) => {
                let s = Tree::s_tree(n as usize);
                Self::new(s.clone(), s, 2)
            }
            Generator::G(0) => Err(Error::UnknownGenerator("g0".into())),
            Generator::G(n) => Self::x(n - 1).multiply(&Self::x(n)),
        }
    }

    fn x(n: u32) -> Self {
        let x0 = Self::new(
            Tree::node(2, vec![Tree::caret(2), Tree::leaf(2)]),
            Tree::node(2, vec![Tree::leaf(2), Tree::caret(2)]),
            1,
        )
        .expect("x0 is a valid diagram");
        let id = Self::identity(2);
        (0..n).fold(x0, |acc, _| id.oplus(&acc).expect("x_n lies in F"))
    }
}
