use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;

use num_traits::One;

use super::RegMode;
use crate::error::{Error, Result};
use crate::wordalg::{shuffle, shuffle_power, shuffle_words, stuffle, stuffle_power, LinComb, Word};
use crate::Rational;

/// Parts `w_i` of `w = Σ_i w_i ∘ y_1^{∘i}`, each in `ℌ⁰`.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Decomposition {
    pub parts: Vec<LinComb>,
}

impl Decomposition {
    pub fn degree(&self) -> usize {
        self.parts.len().saturating_sub(1)
    }

    pub fn part(&self, i: usize) -> LinComb {
        self.parts.get(i).cloned().unwrap_or_default()
    }

    fn add_scaled(&mut self, other: &Decomposition, shift: usize, c: Rational) {
        let need = other.parts.len() + shift;
        if self.parts.len() < need {
            self.parts.resize(need, LinComb::zero());
        }
        for (i, p) in other.parts.iter().enumerate() {
            self.parts[i + shift].add_scaled(p, c);
        }
    }

    fn trim(mut self) -> Self {
        while self.parts.len() > 1 && self.parts.last().is_some_and(LinComb::is_zero) {
            self.parts.pop();
        }
        self
    }
}

fn factorial(n: usize) -> Rational {
    (1..=n as i128).fold(Rational::one(), |acc, k| acc * k)
}

/// Closed-form shuffle decomposition.
///
/// For `w = v u y_1^h` with a letter `u ≠ y_1`,
/// `w_i = (−1)^{h−i}/i! · (v ⧢ y_1^{h−i}) u`; for `w = y_1^d` only
/// `w_d = 1/d!` survives.
pub fn decompose_shuffle(w: &Word) -> Result<Decomposition> {
    if !w.is_h1() {
        return Err(Error::NotInH1);
    }
    let h = w.trailing_y_ones();
    if h == 0 {
        return Ok(Decomposition {
            parts: vec![LinComb::word(w.clone())],
        });
    }
    let n = w.len();
    if h == n {
        let mut parts = vec![LinComb::zero(); n + 1];
        parts[n] = LinComb::term(Word::empty(), Rational::one() / factorial(n));
        return Ok(Decomposition { parts });
    }
    let v = w.prefix(n - h - 1);
    let u = Word::new(vec![w.letters()[n - h - 1].clone()]);
    let parts = (0..=h)
        .map(|i| {
            let sign = if (h - i).is_multiple_of(2) { Rational::one() } else { -Rational::one() };
            shuffle_words(&v, &Word::y_one_power(h - i))
                .concat_right(&u)
                .scaled(sign / factorial(i))
        })
        .collect();
    Ok(Decomposition { parts })
}

fn mode_product(mode: RegMode, a: &LinComb, b: &LinComb) -> Result<LinComb> {
    match mode {
        RegMode::Shuffle => Ok(shuffle(a, b)),
        RegMode::Stuffle => stuffle(a, b),
    }
}

struct Decomposer {
    mode: RegMode,
    memo: BTreeMap<Word, Decomposition>,
    y1: LinComb,
}

impl Decomposer {
    fn word(&mut self, w: &Word) -> Result<Decomposition> {
        if let Some(d) = self.memo.get(w) {
            return Ok(d.clone());
        }
        let h = w.trailing_y_ones();
        let out = if h == 0 {
            Decomposition {
                parts: vec![LinComb::word(w.clone())],
            }
        } else {
            // v ∘ y_1 = h·w + Q, where every word of Q has fewer trailing y_1
            let v = w.prefix(w.len() - 1);
            let mut q = mode_product(self.mode, &LinComb::word(v.clone()), &self.y1)?;
            let hw = Rational::from_integer(h as i128);
            if q.coeff(w) != hw {
                return Err(Error::Internal("unexpected leading coefficient in decomposition"));
            }
            q.add_term(w.clone(), -hw);
            let inv = Rational::one() / hw;
            let mut out = Decomposition::default();
            out.add_scaled(&self.word(&v)?, 1, inv);
            for (qw, c) in q.iter() {
                if qw.trailing_y_ones() >= h {
                    return Err(Error::Internal("decomposition does not reduce trailing y_1"));
                }
                let sub = self.word(qw)?;
                out.add_scaled(&sub, 0, -*c * inv);
            }
            out.trim()
        };
        self.memo.insert(w.clone(), out.clone());
        Ok(out)
    }
}

/// Decomposition of a linear combination under either product, by
/// recursive elimination of trailing `y_1`.
pub fn decompose(w: &LinComb, mode: RegMode) -> Result<Decomposition> {
    if !w.is_h1() {
        return Err(Error::NotInH1);
    }
    let mut dec = Decomposer {
        mode,
        memo: BTreeMap::new(),
        y1: LinComb::word(Word::y_one_power(1)),
    };
    let mut out = Decomposition {
        parts: vec![LinComb::zero()],
    };
    for (word, c) in w.iter() {
        let d = dec.word(word)?;
        out.add_scaled(&d, 0, *c);
    }
    Ok(out.trim())
}

/// Stuffle decomposition of a single word.
pub fn decompose_stuffle(w: &Word) -> Result<Decomposition> {
    decompose(&LinComb::word(w.clone()), RegMode::Stuffle)
}

/// Shuffle decomposition through the generic elimination (cross-check for
/// the closed form).
pub fn decompose_shuffle_generic(w: &Word) -> Result<Decomposition> {
    decompose(&LinComb::word(w.clone()), RegMode::Shuffle)
}

/// `Σ_i w_i ∘ y_1^{∘i}`.
pub fn recompose(d: &Decomposition, mode: RegMode) -> Result<LinComb> {
    let y1 = LinComb::word(Word::y_one_power(1));
    let mut out = LinComb::zero();
    for (i, p) in d.parts.iter().enumerate() {
        if p.is_zero() {
            continue;
        }
        let power = match mode {
            RegMode::Shuffle => shuffle_power(&y1, i),
            RegMode::Stuffle => stuffle_power(&y1, i)?,
        };
        out.add_scaled(&mode_product(mode, p, &power)?, Rational::one());
    }
    Ok(out)
}
