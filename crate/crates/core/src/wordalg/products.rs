use alloc::vec::Vec;

use num_traits::One;

use super::{ArgSymbol, Letter, LinComb, Word};
use crate::error::Result;
use crate::Rational;

/// Shuffle product of two words.
pub fn shuffle_words(a: &Word, b: &Word) -> LinComb {
    let (a, b) = (a.letters(), b.letters());
    let (p, q) = (a.len(), b.len());
    // row[j] holds the shuffles of a[i..] and b[j..] for the current i
    let mut next: Vec<LinComb> = (0..=q)
        .map(|j| LinComb::word(Word::new(b[j..].to_vec())))
        .collect();
    for i in (0..p).rev() {
        let mut row = alloc::vec![LinComb::zero(); q + 1];
        row[q] = LinComb::word(Word::new(a[i..].to_vec()));
        for j in (0..q).rev() {
            let mut acc = next[j].prepend(&a[i]);
            acc.add_scaled(&row[j + 1].prepend(&b[j]), Rational::one());
            row[j] = acc;
        }
        next = row;
    }
    next.swap_remove(0)
}

fn prepend_block(lc: &LinComb, s: &ArgSymbol, n: u32) -> LinComb {
    let mut head = alloc::vec![Letter::Y(s.clone())];
    head.extend(core::iter::repeat_n(Letter::X, n as usize));
    let head = Word::new(head);
    lc.iter().map(|(w, c)| (head.concat(w), *c)).collect()
}

/// Stuffle (harmonic) product of two words in `ℌ¹`.
pub fn stuffle_words(a: &Word, b: &Word) -> Result<LinComb> {
    let (a, b) = (a.blocks()?, b.blocks()?);
    let (p, q) = (a.len(), b.len());
    let tail = |blocks: &[(ArgSymbol, u32)]| LinComb::word(Word::from_blocks(blocks));
    let mut next: Vec<LinComb> = (0..=q).map(|j| tail(&b[j..])).collect();
    for i in (0..p).rev() {
        let mut row = alloc::vec![LinComb::zero(); q + 1];
        row[q] = tail(&a[i..]);
        for j in (0..q).rev() {
            let (sa, na) = &a[i];
            let (sb, nb) = &b[j];
            let mut acc = prepend_block(&next[j], sa, *na);
            acc.add_scaled(&prepend_block(&row[j + 1], sb, *nb), Rational::one());
            acc.add_scaled(
                &prepend_block(&next[j + 1], &sa.product(sb), na + nb + 1),
                Rational::one(),
            );
            row[j] = acc;
        }
        next = row;
    }
    Ok(next.swap_remove(0))
}

/// Bilinear extension of [`shuffle_words`].
pub fn shuffle(u: &LinComb, v: &LinComb) -> LinComb {
    let mut out = LinComb::zero();
    for (a, ca) in u.iter() {
        for (b, cb) in v.iter() {
            out.add_scaled(&shuffle_words(a, b), *ca * *cb);
        }
    }
    out
}

/// Bilinear extension of [`stuffle_words`].
pub fn stuffle(u: &LinComb, v: &LinComb) -> Result<LinComb> {
    let mut out = LinComb::zero();
    for (a, ca) in u.iter() {
        for (b, cb) in v.iter() {
            out.add_scaled(&stuffle_words(a, b)?, *ca * *cb);
        }
    }
    Ok(out)
}

/// `u ⧢ u ⧢ ⋯` (`n` factors); the empty product is `1`.
pub fn shuffle_power(u: &LinComb, n: usize) -> LinComb {
    (0..n).fold(LinComb::one(), |acc, _| shuffle(&acc, u))
}

/// `u ∗ u ∗ ⋯` (`n` factors); the empty product is `1`.
pub fn stuffle_power(u: &LinComb, n: usize) -> Result<LinComb> {
    (0..n).try_fold(LinComb::one(), |acc, _| stuffle(&acc, u))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::wordalg::{word_from_index, ArgVector, Index};
    use num_complex::Complex64;

    fn w(k: &[u32], z: &ArgVector) -> Word {
        word_from_index(&Index::from_slice(k).unwrap(), z).unwrap()
    }

    #[test]
    fn shuffle_of_letters() {
        let x = Word::new(alloc::vec![Letter::X]);
        let y = Word::y_one_power(1);
        let s = shuffle_words(&x, &y);
        assert_eq!(s.len(), 2);
        let yy = shuffle_words(&y, &y);
        assert_eq!(yy.coeff(&Word::y_one_power(2)), Rational::from_integer(2));
    }

    #[test]
    fn stuffle_of_depth_one() {
        // y_a * y_b = y_a y_b + y_b y_a + y_{ab} x
        let z = ArgVector::from_values(&[Complex64::new(0.5, 0.1), Complex64::new(-0.2, 0.3)]);
        let a = w(&[1], &z.slice(0, 1));
        let b = w(&[1], &z.slice(1, 2));
        let s = stuffle_words(&a, &b).unwrap();
        assert_eq!(s.len(), 3);
        let merged = Word::new(alloc::vec![
            Letter::Y(z.get(0).product(z.get(1))),
            Letter::X
        ]);
        assert_eq!(s.coeff(&merged), Rational::one());
    }

    #[test]
    fn stuffle_of_y1_squares() {
        // y1 * y1 = 2 y1 y1 + y1 x
        let y = LinComb::word(Word::y_one_power(1));
        let s = stuffle(&y, &y).unwrap();
        assert_eq!(s.coeff(&Word::y_one_power(2)), Rational::from_integer(2));
        let y1x = Word::new(alloc::vec![Letter::y_one(), Letter::X]);
        assert_eq!(s.coeff(&y1x), Rational::one());
        assert_eq!(s.len(), 2);
    }

    #[test]
    fn powers() {
        let y = LinComb::word(Word::y_one_power(1));
        let p = shuffle_power(&y, 3);
        assert_eq!(p.coeff(&Word::y_one_power(3)), Rational::from_integer(6));
        assert_eq!(stuffle_power(&y, 0).unwrap(), LinComb::one());
    }
}
