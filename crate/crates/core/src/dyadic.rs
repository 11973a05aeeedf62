//! Exact dyadic arithmetic.
//!
//! [`Dyadic`] is a signed value `p / 2^k`, used for interval endpoints and
//! affine offsets. [`DyadicRational`] is a point of the circle `[0, 1)` and is
//! what the group acts on. Both are kept in lowest terms, so structural
//! equality is value equality.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Neg, Sub};
use std::str::FromStr;

use num_bigint::{BigInt, BigUint, Sign};
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// A finite word of binary digits, read as the fraction `0.b1 b2 b3 ...`.
///
/// Trailing zeros are allowed and carry no value; the empty word is `0`.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct BinaryWord(Vec<u8>);

impl BinaryWord {
    pub fn new() -> Self {
        Self(Vec::new())
    }

    /// Builds a word from digits, rejecting anything other than 0 and 1.
    pub fn from_bits(bits: &[u8]) -> Result<Self> {
        if let Some(&bad) = bits.iter().find(|&&b| b > 1) {
            return Err(Error::Parse(format!("binary digit {bad}")));
        }
        Ok(Self(bits.to_vec()))
    }

    pub fn bits(&self) -> &[u8] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn push(&mut self, bit: bool) {
        self.0.push(bit as u8);
    }

    pub fn ones(&self) -> usize {
        self.0.iter().filter(|&&b| b == 1).count()
    }

    /// Digit-sum parity of the word.
    pub fn parity(&self) -> u8 {
        (self.ones() % 2) as u8
    }

    pub fn into_bits(self) -> Vec<u8> {
        self.0
    }
}

impl fmt::Display for BinaryWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for b in &self.0 {
            write!(f, "{b}")?;
        }
        Ok(())
    }
}

impl From<Vec<bool>> for BinaryWord {
    fn from(bits: Vec<bool>) -> Self {
        Self(bits.into_iter().map(u8::from).collect())
    }
}

/// Signed dyadic number `numerator / 2^exponent` in lowest terms.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Dyadic {
    num: BigInt,
    exp: u32,
}

fn strip_twos(num: &mut BigInt, exp: &mut u32) {
    if num.is_zero() {
        *exp = 0;
        return;
    }
    let tz = num.trailing_zeros().unwrap_or(0).min(u64::from(*exp));
    if tz > 0 {
        *num >>= tz;
        *exp -= tz as u32;
    }
}

impl Dyadic {
    pub fn new(num: impl Into<BigInt>, exp: u32) -> Self {
        let mut num = num.into();
        let mut exp = exp;
        strip_twos(&mut num, &mut exp);
        Self { num, exp }
    }

    pub fn zero() -> Self {
        Self::new(0, 0)
    }

    pub fn one() -> Self {
        Self::new(1, 0)
    }

    pub fn numerator(&self) -> &BigInt {
        &self.num
    }

    pub fn exponent(&self) -> u32 {
        self.exp
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_negative(&self) -> bool {
        self.num.is_negative()
    }

    /// Multiplies by `2^shift`; negative shifts divide.
    ///
    /// Panics if the exponent leaves the `u32` range.
    pub fn mul_pow2(&self, shift: i64) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let exp = i64::from(self.exp) - shift;
        if exp >= 0 {
            let exp = u32::try_from(exp).expect("dyadic exponent overflow");
            Self::new(self.num.clone(), exp)
        } else {
            Self::new(&self.num << (-exp) as u64, 0)
        }
    }

    /// Largest integer not exceeding the value.
    pub fn floor(&self) -> BigInt {
        // Arithmetic shift on BigInt rounds towards negative infinity.
        &self.num >> self.exp
    }

    /// The value reduced modulo 1, as a point of the circle.
    pub fn fract(&self) -> DyadicRational {
        let whole = self.floor() << self.exp;
        let rem = (&self.num - whole)
            .to_biguint()
            .expect("remainder of floor division is non-negative");
        DyadicRational::from_parts(rem, self.exp)
    }

    fn aligned(&self, other: &Self) -> (BigInt, BigInt, u32) {
        let exp = self.exp.max(other.exp);
        (
            &self.num << (exp - self.exp),
            &other.num << (exp - other.exp),
            exp,
        )
    }
}

impl Add for &Dyadic {
    type Output = Dyadic;

    fn add(self, rhs: &Dyadic) -> Dyadic {
        let (a, b, exp) = self.aligned(rhs);
        Dyadic::new(a + b, exp)
    }
}

impl Sub for &Dyadic {
    type Output = Dyadic;

    fn sub(self, rhs: &Dyadic) -> Dyadic {
        let (a, b, exp) = self.aligned(rhs);
        Dyadic::new(a - b, exp)
    }
}

impl Add for Dyadic {
    type Output = Dyadic;

    fn add(self, rhs: Dyadic) -> Dyadic {
        &self + &rhs
    }
}

impl Sub for Dyadic {
    type Output = Dyadic;

    fn sub(self, rhs: Dyadic) -> Dyadic {
        &self - &rhs
    }
}

impl Neg for Dyadic {
    type Output = Dyadic;

    fn neg(self) -> Dyadic {
        Dyadic {
            num: -self.num,
            exp: self.exp,
        }
    }
}

impl Ord for Dyadic {
    fn cmp(&self, other: &Self) -> Ordering {
        let (a, b, _) = self.aligned(other);
        a.cmp(&b)
    }
}

impl PartialOrd for Dyadic {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl From<i64> for Dyadic {
    fn from(n: i64) -> Self {
        Self::new(n, 0)
    }
}

impl From<&DyadicRational> for Dyadic {
    fn from(d: &DyadicRational) -> Self {
        Self::new(BigInt::from_biguint(Sign::Plus, d.num.clone()), d.exp)
    }
}

impl fmt::Display for Dyadic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.exp == 0 {
            write!(f, "{}", self.num)
        } else {
            write!(f, "{}/2^{}", self.num, self.exp)
        }
    }
}

/// A dyadic point of the unit circle: `numerator / 2^exponent` in `[0, 1)`.
///
/// The numerator is odd unless the value is zero, in which case the exponent
/// is zero as well. The value 1 is the same point as 0.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct DyadicRational {
    num: BigUint,
    exp: u32,
}

impl DyadicRational {
    /// Builds `num / 2^exp`, reduced modulo 1 and into lowest terms.
    pub fn from_parts(num: impl Into<BigUint>, exp: u32) -> Self {
        let mut num: BigUint = num.into();
        let modulus = BigUint::one() << exp;
        if num >= modulus {
            num %= &modulus;
        }
        if num.is_zero() {
            return Self::zero();
        }
        let tz = num.trailing_zeros().unwrap_or(0).min(u64::from(exp));
        Self {
            num: num >> tz,
            exp: exp - tz as u32,
        }
    }

    pub fn new(num: u64, exp: u32) -> Self {
        Self::from_parts(BigUint::from(num), exp)
    }

    pub fn zero() -> Self {
        Self {
            num: BigUint::zero(),
            exp: 0,
        }
    }

    pub fn half() -> Self {
        Self::new(1, 1)
    }

    pub fn numerator(&self) -> &BigUint {
        &self.num
    }

    pub fn exponent(&self) -> u32 {
        self.exp
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    /// Value of `sum w_i 2^-i`.
    pub fn from_word(word: &BinaryWord) -> Self {
        let mut num = BigUint::zero();
        for &b in word.bits() {
            num <<= 1u32;
            if b == 1 {
                num += 1u32;
            }
        }
        let exp = u32::try_from(word.len()).expect("dyadic exponent overflow");
        Self::from_parts(num, exp)
    }

    /// Binary expansion, optionally zero-padded to `length` digits.
    pub fn to_word(&self, length: Option<usize>) -> Result<BinaryWord> {
        let k = self.exp as usize;
        let len = match length {
            Some(len) if len < k => {
                return Err(Error::WordTooShort {
                    value: self.to_string(),
                    length: len,
                })
            }
            Some(len) => len,
            None => k,
        };
        let mut bits = Vec::with_capacity(len);
        for i in (0..k).rev() {
            bits.push(u8::from(self.num.bit(i as u64)));
        }
        bits.resize(len, 0);
        Ok(BinaryWord(bits))
    }

    /// Digit-sum parity of the canonical binary expansion; 0 has parity 0.
    pub fn parity(&self) -> u8 {
        (self.num.count_ones() % 2) as u8
    }

    /// The point written as `0.b1b2...bk` (or `0` for zero).
    pub fn to_binary_string(&self) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        format!("0.{}", self.to_word(None).expect("canonical length"))
    }

    pub fn to_dyadic(&self) -> Dyadic {
        Dyadic::from(self)
    }
}

impl Ord for DyadicRational {
    fn cmp(&self, other: &Self) -> Ordering {
        let exp = self.exp.max(other.exp);
        let a = &self.num << (exp - self.exp);
        let b = &other.num << (exp - other.exp);
        a.cmp(&b)
    }
}

impl PartialOrd for DyadicRational {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for DyadicRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            write!(f, "0")
        } else {
            write!(f, "{}/2^{}", self.num, self.exp)
        }
    }
}

impl FromStr for DyadicRational {
    type Err = Error;

    /// Accepts `p/2^k`, `p/2^k` with `2^k` written out (e.g. `3/8`), a binary
    /// point form `0.101`, or a bare integer (taken modulo 1).
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let bad = || Error::Parse(format!("dyadic value `{s}`"));
        if let Some(digits) = s.strip_prefix("0.") {
            let bits: Vec<u8> = digits
                .chars()
                .map(|c| match c {
                    '0' => Ok(0),
                    '1' => Ok(1),
                    _ => Err(bad()),
                })
                .collect::<Result<_>>()?;
            return Ok(Self::from_word(&BinaryWord(bits)));
        }
        let (num, den) = match s.split_once('/') {
            Some((n, d)) => (n.trim(), Some(d.trim())),
            None => (s, None),
        };
        let num: BigUint = num.parse().map_err(|_| bad())?;
        let exp = match den {
            None => 0,
            Some(d) => {
                if let Some(k) = d.strip_prefix("2^") {
                    k.parse::<u32>().map_err(|_| Error::ExponentOverflow)?
                } else {
                    let d: BigUint = d.parse().map_err(|_| bad())?;
                    if d.is_zero() || d.count_ones() != 1 {
                        return Err(bad());
                    }
                    u32::try_from(d.bits() - 1).map_err(|_| Error::ExponentOverflow)?
                }
            }
        };
        Ok(Self::from_parts(num, exp))
    }
}
