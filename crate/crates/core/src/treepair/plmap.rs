use std::fmt;

use num_bigint::BigInt;
use num_traits::One;

use super::{Address, TreePair};
use crate::dyadic::{Dyadic, DyadicRational};
use crate::error::{Error, Result};

/// One affine piece `t ↦ 2^slope_exp · t + offset` on `[start, end)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Piece {
    pub start: Dyadic,
    pub end: Dyadic,
    pub slope_exp: i64,
    pub offset: Dyadic,
}

impl Piece {
    pub fn apply(&self, t: &Dyadic) -> Dyadic {
        &t.mul_pow2(self.slope_exp) + &self.offset
    }

    pub fn contains(&self, t: &Dyadic) -> bool {
        &self.start <= t && t < &self.end
    }
}

impl fmt::Display for Piece {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}, {}): ", self.start, self.end)?;
        match self.slope_exp {
            0 => write!(f, "t")?,
            e => write!(f, "2^{e} t")?,
        }
        if self.offset.is_negative() {
            write!(f, " - {}", -self.offset.clone())
        } else if self.offset.is_zero() {
            Ok(())
        } else {
            write!(f, " + {}", self.offset)
        }
    }
}

/// A piecewise-linear circle map with dyadic breakpoints.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PlMap {
    pieces: Vec<Piece>,
}

fn address_value(addr: &Address) -> Dyadic {
    let num = addr
        .iter()
        .fold(BigInt::from(0), |acc, &b| (acc << 1u32) + BigInt::from(b));
    Dyadic::new(num, addr.len() as u32)
}

impl PlMap {
    pub fn pieces(&self) -> &[Piece] {
        &self.pieces
    }

    pub fn evaluate(&self, t: &DyadicRational) -> DyadicRational {
        let t = t.to_dyadic();
        let piece = self
            .pieces
            .iter()
            .find(|p| p.contains(&t))
            .expect("pieces cover [0, 1)");
        piece.apply(&t).fract()
    }

    /// Checks that the pieces describe an orientation-preserving circle
    /// homeomorphism: they partition `[0, 1)`, consecutive images meet
    /// (modulo 1, including across the seam at 0), and the image lengths
    /// add up to 1.
    pub fn check_homeomorphism(&self) -> std::result::Result<(), String> {
        let first = self.pieces.first().ok_or("no pieces")?;
        if !first.start.is_zero() {
            return Err(format!("first piece starts at {}", first.start));
        }
        let last = self.pieces.last().expect("non-empty");
        if last.end != Dyadic::one() {
            return Err(format!("last piece ends at {}", last.end));
        }
        let mut measure = Dyadic::zero();
        for (i, p) in self.pieces.iter().enumerate() {
            if p.start >= p.end {
                return Err(format!("piece {i} is empty"));
            }
            let next = &self.pieces[(i + 1) % self.pieces.len()];
            if i + 1 < self.pieces.len() && p.end != next.start {
                return Err(format!("gap between pieces {i} and {}", i + 1));
            }
            let left_limit = p.apply(&p.end).fract();
            let next_start = next.apply(&next.start).fract();
            if left_limit != next_start {
                return Err(format!(
                    "discontinuity at {}: {left_limit} vs {next_start}",
                    p.end.fract()
                ));
            }
            measure = measure + (&p.end - &p.start).mul_pow2(p.slope_exp);
        }
        if measure != Dyadic::one() {
            return Err(format!("image has length {measure}"));
        }
        Ok(())
    }
}

impl fmt::Display for PlMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, p) in self.pieces.iter().enumerate() {
            if i > 0 {
                writeln!(f)?;
            }
            write!(f, "{p}")?;
        }
        Ok(())
    }
}

impl TreePair {
    /// One affine piece per domain leaf.
    pub fn to_plmap(&self) -> Result<PlMap> {
        if self.arity() != 2 {
            return Err(Error::UnsupportedArity {
                operation: "to_plmap",
                expected: 2,
                arity: self.arity(),
            });
        }
        let pieces = self
            .leaf_map()
            .into_iter()
            .map(|(d, r)| {
                let start = address_value(&d);
                let end = &start + &Dyadic::new(BigInt::one(), d.len() as u32);
                let slope_exp = d.len() as i64 - r.len() as i64;
                let offset = &address_value(&r) - &start.mul_pow2(slope_exp);
                Piece {
                    start,
                    end,
                    slope_exp,
                    offset,
                }
            })
            .collect();
        Ok(PlMap { pieces })
    }
}
