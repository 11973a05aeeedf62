use std::fmt;

use crate::error::{Error, Result};
use crate::treepair::{Generator, GroupWord};

/// The map `t ↦ (-1)^flip · t + translation` of the integers.
///
/// Products act left to right like tree pairs: `a.then(b)` applies `a`
/// first.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub struct DihedralElement {
    pub translation: i64,
    pub flip: bool,
}

impl DihedralElement {
    pub const IDENTITY: Self = Self {
        translation: 0,
        flip: false,
    };

    pub fn new(translation: i64, flip: bool) -> Self {
        Self { translation, flip }
    }

    fn sign(self) -> i64 {
        if self.flip {
            -1
        } else {
            1
        }
    }

    pub fn apply(self, t: i64) -> i64 {
        self.sign() * t + self.translation
    }

    pub fn then(self, next: Self) -> Self {
        Self {
            translation: next.sign() * self.translation + next.translation,
            flip: self.flip ^ next.flip,
        }
    }

    pub fn inverse(self) -> Self {
        Self {
            translation: -self.sign() * self.translation,
            flip: self.flip,
        }
    }

    pub fn pow(self, e: i64) -> Self {
        let base = if e < 0 { self.inverse() } else { self };
        (0..e.unsigned_abs()).fold(Self::IDENTITY, |acc, _| acc.then(base))
    }

    pub fn is_identity(self) -> bool {
        self == Self::IDENTITY
    }

    /// Least `k <= cap` with `self^k = 1`.
    pub fn order(self, cap: u32) -> Option<u32> {
        let mut acc = self;
        for k in 1..=cap {
            if acc.is_identity() {
                return Some(k);
            }
            acc = acc.then(self);
        }
        None
    }
}

impl fmt::Display for DihedralElement {
    /// `(k, s)`
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.translation, u8::from(self.flip))
    }
}

/// Image of a word in the `g_k` and `c_2n` in the infinite dihedral group:
/// odd `g` goes to the translation `g_1`, even `g` to the identity, and
/// `c_2n = g_(2n-1)⁻¹ c_(2n-2)` to the reflection `g_1⁻ⁿ c_0`.
pub fn dihedral_alpha(word: &GroupWord) -> Result<DihedralElement> {
    word.letters()
        .iter()
        .try_fold(DihedralElement::IDENTITY, |acc, &(g, e)| {
            let image = match g {
                Generator::C(n) if n % 2 == 0 => DihedralElement::new(i64::from(n / 2), true),
                Generator::G(k) if k % 2 == 1 => DihedralElement::new(1, false),
                Generator::G(_) => DihedralElement::IDENTITY,
                other => return Err(Error::UnsupportedLetter(other.to_string())),
            };
            Ok(acc.then(image.pow(e)))
        })
}
