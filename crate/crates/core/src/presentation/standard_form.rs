//! Rewriting words in `g_k` and `c_2n` to the shape `p · c_2n^m · q⁻¹`
//! with `p`, `q` positive words in the `g_k` and `0 <= m < 2n + 2`.
//!
//! The word is consumed left to right, keeping the prefix in that shape.
//! Appending `g_k⁻¹` just extends `q`. Appending `g_k` moves it left through
//! `q⁻¹` (cancelling or shifting indices by two as it passes) and then
//! through the power of `c`, raising the `c` index first if `k` is too
//! large. Appending a power of `c` inverts the tail `q⁻¹ c^r`, brings it to
//! shape with the same procedure, and merges the two `c` powers after
//! raising the smaller index. Every step removes one letter from the input
//! and the index raises are bounded by the largest index seen, so the
//! procedure terminates.

use std::fmt;

use crate::error::{Error, Result};
use crate::treepair::{Generator, GroupWord};

/// `p · c_(2n)^m · q⁻¹`, with `p` and `q` given as lists of `g` indices.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct StandardForm {
    pub p: Vec<u32>,
    pub n: u32,
    pub m: u32,
    pub q: Vec<u32>,
}

fn g_word(indices: &[u32]) -> GroupWord {
    indices.iter().map(|&k| (Generator::G(k), 1)).collect()
}

impl StandardForm {
    pub fn p_word(&self) -> GroupWord {
        g_word(&self.p)
    }

    pub fn q_word(&self) -> GroupWord {
        g_word(&self.q)
    }

    /// The word `p c_2n^m q⁻¹`.
    pub fn to_word(&self) -> GroupWord {
        let mut w = self.p_word();
        w.push(Generator::C(2 * self.n), self.m as i64);
        w.concat(&self.q_word().inverse())
    }

    fn period(&self) -> u32 {
        2 * self.n + 2
    }

    /// Right multiplication by `g_k`.
    fn push_g(&mut self, mut k: u32) {
        let mut i = 0;
        while i < self.q.len() {
            let qi = self.q[i];
            if qi == k {
                self.q.remove(i);
                return;
            }
            if qi < k {
                k += 2;
            } else {
                self.q[i] = qi + 2;
            }
            i += 1;
        }
        self.g_past_c(k);
    }

    // Rewrites c_2n^m g_k as (positive) c_2n'^m'.
    fn g_past_c(&mut self, k: u32) {
        if self.m == 0 {
            self.p.push(k);
            return;
        }
        while k >= self.period() {
            self.raise_left();
        }
        let (n, m) = (self.n, self.m);
        if k > m {
            self.p.push(k - m);
        } else if k == m {
            self.m += 2;
        } else {
            self.p.push(2 * n + 2 + k - m);
            self.m += 2;
        }
        self.n += 1;
    }

    // c_2n^m = g_(2n+2-m) c_(2n+2)^m
    fn raise_left(&mut self) {
        if self.m > 0 {
            self.p.push(self.period() - self.m);
        }
        self.n += 1;
    }

    /// Right multiplication by `c_2j^r`.
    fn push_c(&mut self, j: u32, r: i64) {
        let period = 2 * j as i64 + 2;
        let r = r.rem_euclid(period) as u32;
        if r == 0 {
            return;
        }
        // (q⁻¹ c_2j^r)⁻¹ = c_2j^(period - r) q, which is positive.
        let mut tail = StandardForm {
            p: Vec::new(),
            n: j,
            m: period as u32 - r,
            q: Vec::new(),
        };
        for &k in &self.q {
            tail.push_g(k);
        }
        // So q⁻¹ c_2j^r = c_2j'^(-m') p'⁻¹.
        let mut j = tail.n;
        let mut r = (tail.period() - tail.m) % tail.period();
        self.q = tail.p;
        if self.m == 0 {
            self.n = j;
        } else if r == 0 {
            j = self.n;
        }
        while self.n < j {
            self.raise_left();
        }
        while j < self.n {
            // c_2j^r = c_(2j+2)^(r+2) g_r⁻¹
            self.q.push(r);
            j += 1;
            r += 2;
        }
        self.m = (self.m + r) % self.period();
    }
}

impl fmt::Display for StandardForm {
    /// `p = g1, n = 2, m = 2, q = 1`
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let show = |w: GroupWord| {
            if w.is_empty() {
                "1".to_string()
            } else {
                w.to_string()
            }
        };
        write!(
            f,
            "p = {}, n = {}, m = {}, q = {}",
            show(self.p_word()),
            self.n,
            self.m,
            show(self.q_word())
        )
    }
}

/// Brings a word in the `g_k` and `c_2n` to standard form.
pub fn symbolic_standard_form(word: &GroupWord) -> Result<StandardForm> {
    let mut form = StandardForm::default();
    for &(g, e) in word.letters() {
        match g {
            Generator::G(k) => {
                for _ in 0..e.unsigned_abs() {
                    if e > 0 {
                        form.push_g(k);
                    } else {
                        form.q.insert(0, k);
                    }
                }
            }
            Generator::C(c) if c % 2 == 0 => form.push_c(c / 2, e),
            other => return Err(Error::UnsupportedLetter(other.to_string())),
        }
    }
    Ok(form)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::treepair::TreePair;

    fn sf(s: &str) -> StandardForm {
        symbolic_standard_form(&s.parse().unwrap()).unwrap()
    }

    fn same(s: &str) {
        let form = sf(s);
        assert!(form.m < 2 * form.n + 2, "{s}: {form}");
        let lhs = TreePair::from_word(&s.parse().unwrap()).unwrap();
        assert_eq!(
            lhs,
            TreePair::from_word(&form.to_word()).unwrap(),
            "{s}: {form}"
        );
    }

    #[test]
    fn examples() {
        let f = sf("c0 g1");
        assert_eq!((f.p.len(), f.n, f.m, f.q.len()), (0, 1, 3, 0));
        let f = sf("c2^2 g3");
        assert_eq!((f.p.clone(), f.n, f.m, f.q.len()), (vec![1], 2, 2, 0));
        let f = sf("g1");
        assert_eq!((f.p.clone(), f.m, f.q.len()), (vec![1], 0, 0));
        assert_eq!(f.to_string(), "p = g1, n = 0, m = 0, q = 1");
    }

    #[test]
    fn semantics_are_kept() {
        for w in [
            "c0 g1",
            "c2^2 g3",
            "g1^-1 g2 g1",
            "g2^-1 c0 g1",
            "c2 g4^-1 c0 g2 g2",
            "g3^-2 c4^-1 g1 c2^3 g5",
            "c0 c2 c4 c0",
            "g1 c0 g1 c0",
        ] {
            same(w);
        }
    }

    #[test]
    fn rejects_other_letters() {
        for w in ["x0", "c1", "c3 g1"] {
            assert!(matches!(
                symbolic_standard_form(&w.parse().unwrap()),
                Err(Error::UnsupportedLetter(_))
            ));
        }
    }
}
