use alloc::collections::btree_map::Entry;
use alloc::collections::BTreeMap;
use alloc::vec::Vec;
use core::fmt;

use num_traits::{One, Zero};

use super::{ArgSymbol, ArgVector, Index};
use crate::error::{Error, Result};
use crate::Rational;

/// Letter of the alphabet: `x` or `y_a`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Letter {
    X,
    Y(ArgSymbol),
}

impl Letter {
    pub fn y_one() -> Self {
        Letter::Y(ArgSymbol::one())
    }

    pub fn is_y_one(&self) -> bool {
        matches!(self, Letter::Y(s) if s.is_one())
    }
}

/// Noncommutative word.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Word {
    letters: Vec<Letter>,
}

impl Word {
    pub fn empty() -> Self {
        Self::default()
    }

    pub fn new(letters: Vec<Letter>) -> Self {
        Self { letters }
    }

    /// `y_1^n`.
    pub fn y_one_power(n: usize) -> Self {
        Self {
            letters: alloc::vec![Letter::y_one(); n],
        }
    }

    pub fn letters(&self) -> &[Letter] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn depth(&self) -> usize {
        self.letters.iter().filter(|l| matches!(l, Letter::Y(_))).count()
    }

    pub fn is_h1(&self) -> bool {
        !matches!(self.letters.first(), Some(Letter::X))
    }

    /// In `ℌ¹` and not ending with `y_1`.
    pub fn is_h0(&self) -> bool {
        self.is_h1() && !matches!(self.letters.last(), Some(l) if l.is_y_one())
    }

    /// Number of trailing `y_1` letters.
    pub fn trailing_y_ones(&self) -> usize {
        self.letters.iter().rev().take_while(|l| l.is_y_one()).count()
    }

    pub fn prefix(&self, n: usize) -> Word {
        Word::new(self.letters[..n].to_vec())
    }

    pub fn concat(&self, other: &Word) -> Word {
        let mut letters = Vec::with_capacity(self.len() + other.len());
        letters.extend_from_slice(&self.letters);
        letters.extend_from_slice(&other.letters);
        Word { letters }
    }

    pub fn prepend(&self, l: &Letter) -> Word {
        let mut letters = Vec::with_capacity(self.len() + 1);
        letters.push(l.clone());
        letters.extend_from_slice(&self.letters);
        Word { letters }
    }

    /// Blocks `(a_i, n_i)` of `y_{a_1} x^{n_1} ⋯ y_{a_d} x^{n_d}`.
    pub fn blocks(&self) -> Result<Vec<(ArgSymbol, u32)>> {
        let mut out: Vec<(ArgSymbol, u32)> = Vec::new();
        for l in &self.letters {
            match l {
                Letter::Y(s) => out.push((s.clone(), 0)),
                Letter::X => match out.last_mut() {
                    Some(b) => b.1 += 1,
                    None => return Err(Error::NotInH1),
                },
            }
        }
        Ok(out)
    }

    pub fn from_blocks(blocks: &[(ArgSymbol, u32)]) -> Word {
        let mut letters = Vec::new();
        for (s, n) in blocks {
            letters.push(Letter::Y(s.clone()));
            letters.extend(core::iter::repeat_n(Letter::X, *n as usize));
        }
        Word { letters }
    }

    /// Inverse of [`word_from_index`]: `(k, c)` with `k_i = n_i + 1`.
    pub fn to_index_args(&self) -> Result<(Index, ArgVector)> {
        let blocks = self.blocks()?;
        let k = Index::new(blocks.iter().map(|b| b.1 + 1).collect())?;
        let z = ArgVector::new(blocks.into_iter().map(|b| b.0).collect());
        Ok((k, z))
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.letters.is_empty() {
            return f.write_str("1");
        }
        for l in &self.letters {
            match l {
                Letter::X => f.write_str("x")?,
                Letter::Y(s) => write!(f, "y[{s}]")?,
            }
        }
        Ok(())
    }
}

/// `w_{k;z} = y_{z_1} x^{k_1-1} ⋯ y_{z_d} x^{k_d-1}`.
pub fn word_from_index(k: &Index, z: &ArgVector) -> Result<Word> {
    if k.depth() != z.len() {
        return Err(Error::DepthMismatch {
            index: k.depth(),
            args: z.len(),
        });
    }
    let blocks: Vec<_> = z
        .symbols()
        .iter()
        .cloned()
        .zip(k.parts().iter().map(|&ki| ki - 1))
        .collect();
    Ok(Word::from_blocks(&blocks))
}

/// `ι`: replaces `y_{z_i}` with `y_{z_{i,d}}`.
pub fn iota(w: &Word) -> Result<Word> {
    let (k, z) = w.to_index_args()?;
    let tails = ArgVector::new(z.tail_products());
    word_from_index(&k, &tails)
}

/// Finite `ℚ`-linear combination of words.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct LinComb {
    terms: BTreeMap<Word, Rational>,
}

impl LinComb {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn word(w: Word) -> Self {
        Self::term(w, Rational::one())
    }

    pub fn term(w: Word, c: Rational) -> Self {
        let mut out = Self::zero();
        out.add_term(w, c);
        out
    }

    pub fn one() -> Self {
        Self::word(Word::empty())
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Word, &Rational)> {
        self.terms.iter()
    }

    pub fn coeff(&self, w: &Word) -> Rational {
        self.terms.get(w).copied().unwrap_or_else(Rational::zero)
    }

    pub fn add_term(&mut self, w: Word, c: Rational) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(w) {
            Entry::Vacant(e) => {
                e.insert(c);
            }
            Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    pub fn add_scaled(&mut self, other: &LinComb, c: Rational) {
        for (w, v) in &other.terms {
            self.add_term(w.clone(), *v * c);
        }
    }

    pub fn scaled(&self, c: Rational) -> LinComb {
        let mut out = LinComb::zero();
        out.add_scaled(self, c);
        out
    }

    pub fn sub(&self, other: &LinComb) -> LinComb {
        let mut out = self.clone();
        out.add_scaled(other, -Rational::one());
        out
    }

    /// Right concatenation by a fixed word.
    pub fn concat_right(&self, u: &Word) -> LinComb {
        LinComb {
            terms: self.terms.iter().map(|(w, c)| (w.concat(u), *c)).collect(),
        }
    }

    /// Left multiplication by a letter.
    pub fn prepend(&self, l: &Letter) -> LinComb {
        LinComb {
            terms: self.terms.iter().map(|(w, c)| (w.prepend(l), *c)).collect(),
        }
    }

    pub fn is_h1(&self) -> bool {
        self.terms.keys().all(Word::is_h1)
    }
}

impl FromIterator<(Word, Rational)> for LinComb {
    fn from_iter<I: IntoIterator<Item = (Word, Rational)>>(iter: I) -> Self {
        let mut out = LinComb::zero();
        for (w, c) in iter {
            out.add_term(w, c);
        }
        out
    }
}

impl fmt::Display for LinComb {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (i, (w, c)) in self.terms.iter().enumerate() {
            if i > 0 {
                f.write_str(" + ")?;
            }
            write!(f, "({c}){w}")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_complex::Complex64;

    fn sample() -> (Index, ArgVector) {
        let k = Index::from_slice(&[2, 1, 3]).unwrap();
        let z = ArgVector::from_values(&[
            Complex64::new(0.3, 0.2),
            Complex64::new(-1.0, 0.0),
            Complex64::new(2.0, -1.0),
        ]);
        (k, z)
    }

    #[test]
    fn index_word_round_trip() {
        let (k, z) = sample();
        let w = word_from_index(&k, &z).unwrap();
        assert_eq!(w.len() as u32, k.weight());
        assert_eq!(w.depth(), 3);
        let (k2, z2) = w.to_index_args().unwrap();
        assert_eq!(k2, k);
        assert_eq!(z2, z);
    }

    #[test]
    fn depth_mismatch_is_reported() {
        let (k, _) = sample();
        let z = ArgVector::ones(2);
        assert_eq!(
            word_from_index(&k, &z),
            Err(Error::DepthMismatch { index: 3, args: 2 })
        );
    }

    #[test]
    fn iota_uses_tail_products() {
        let (k, z) = sample();
        let w = iota(&word_from_index(&k, &z).unwrap()).unwrap();
        let (_, c) = w.to_index_args().unwrap();
        assert_eq!(c.symbols(), z.tail_products().as_slice());
    }

    #[test]
    fn word_predicates() {
        let y1 = Letter::y_one();
        let w = Word::new(alloc::vec![Letter::Y(ArgSymbol::root_of_unity(2, 1)), Letter::X, y1.clone(), y1]);
        assert!(w.is_h1());
        assert!(!w.is_h0());
        assert_eq!(w.trailing_y_ones(), 2);
        let xw = Word::new(alloc::vec![Letter::X]);
        assert!(!xw.is_h1());
        assert_eq!(xw.blocks(), Err(Error::NotInH1));
        assert!(Word::empty().is_h0());
    }

    #[test]
    fn lincomb_cancels() {
        let w = Word::y_one_power(2);
        let mut a = LinComb::word(w.clone());
        a.add_term(w.clone(), -Rational::one());
        assert!(a.is_zero());
        let b = LinComb::term(w.clone(), Rational::new(1, 2));
        assert_eq!(b.sub(&b), LinComb::zero());
        assert_eq!(b.scaled(Rational::from_integer(4)).coeff(&w), Rational::from_integer(2));
    }
}
