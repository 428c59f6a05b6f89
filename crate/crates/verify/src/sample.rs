//! Seeded generation of indices and argument points.

use std::f64::consts::TAU;

use mpl_core::wordalg::{ArgSymbol, ArgVector, Index};
use mpl_core::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// Minimum angular distance kept from the positive real axis.
pub const CUT_MARGIN: f64 = 0.05;

pub fn rng(seed: u64, stream: u64) -> ChaCha8Rng {
    let mut r = ChaCha8Rng::seed_from_u64(seed);
    r.set_stream(stream);
    r
}

/// Every index with `1 <= depth <= depth_max` and `weight <= weight_max`,
/// ordered by depth, then weight, then lexicographically.
pub fn indices(depth_max: usize, weight_max: u32) -> Vec<Index> {
    fn fill(prefix: &mut Vec<u32>, left: usize, weight: u32, out: &mut Vec<Vec<u32>>) {
        if left == 0 {
            if weight == 0 {
                out.push(prefix.clone());
            }
            return;
        }
        for k in 1..=weight.saturating_sub(left as u32 - 1) {
            prefix.push(k);
            fill(prefix, left - 1, weight - k, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    for d in 1..=depth_max {
        for w in d as u32..=weight_max {
            let mut parts = Vec::new();
            fill(&mut Vec::new(), d, w, &mut parts);
            out.extend(parts.into_iter().map(|p| Index::new(p).expect("positive entries")));
        }
    }
    out
}

/// Random index of the given depth with entries in `1..=max_entry`.
pub fn random_index<R: Rng>(rng: &mut R, depth: usize, max_entry: u32) -> Index {
    Index::new((0..depth).map(|_| rng.random_range(1..=max_entry)).collect()).expect("positive")
}

/// Modulus uniform in `[rmin, rmax]`, argument at least `CUT_MARGIN` away
/// from the positive real axis.
pub fn off_cut<R: Rng>(rng: &mut R, rmin: f64, rmax: f64) -> Complex64 {
    let r = rng.random_range(rmin..=rmax);
    let theta = rng.random_range(CUT_MARGIN..=TAU - CUT_MARGIN);
    Complex64::from_polar(r, theta)
}

/// True when every consecutive product keeps `margin` radians from `ℝ_{≥0}`.
pub fn clear_of_cut(z: &[Complex64], margin: f64) -> bool {
    (0..z.len()).all(|i| {
        let mut p = Complex64::new(1.0, 0.0);
        z[i..].iter().all(|w| {
            p *= w;
            p.arg().abs() >= margin
        })
    })
}

/// Point whose tail products `z_{i,d}` are drawn by [`off_cut`] and whose
/// consecutive products all avoid `ℝ_{≥0}`.
pub fn tail_point<R: Rng>(rng: &mut R, d: usize, rmin: f64, rmax: f64) -> ArgVector {
    loop {
        let tails: Vec<Complex64> = (0..d).map(|_| off_cut(rng, rmin, rmax)).collect();
        let z: Vec<Complex64> = (0..d)
            .map(|i| if i + 1 < d { tails[i] / tails[i + 1] } else { tails[i] })
            .collect();
        if clear_of_cut(&z, CUT_MARGIN) {
            return ArgVector::from_values(&z);
        }
    }
}

/// Point with entries drawn by [`off_cut`] and all products off `ℝ_{≥0}`.
pub fn entry_point<R: Rng>(rng: &mut R, d: usize, rmin: f64, rmax: f64, margin: f64) -> ArgVector {
    loop {
        let z: Vec<Complex64> = (0..d).map(|_| off_cut(rng, rmin, rmax)).collect();
        if clear_of_cut(&z, margin) {
            return ArgVector::from_values(&z);
        }
    }
}

/// All depth-`d` vectors of `N`-th roots of unity for `N` in `orders`,
/// without repeats (an `N = 2` point is also an `N = 4` point).
pub fn root_points(orders: &[u32], d: usize) -> Vec<ArgVector> {
    let mut seen: Vec<Vec<(i64, i64)>> = Vec::new();
    let mut out = Vec::new();
    for &n in orders {
        let total = (n as usize).pow(d as u32);
        for code in 0..total {
            let mut c = code;
            let entries: Vec<ArgSymbol> = (0..d)
                .map(|_| {
                    let j = (c % n as usize) as i64;
                    c /= n as usize;
                    ArgSymbol::root_of_unity(n, j)
                })
                .collect();
            let key: Vec<(i64, i64)> = entries.iter().map(|s| s.turn()).collect();
            if seen.contains(&key) {
                continue;
            }
            seen.push(key);
            out.push(ArgVector::new(entries));
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn index_enumeration() {
        let all = indices(2, 4);
        assert_eq!(all.len(), 10);
        assert_eq!(all[0].parts(), &[1]);
        assert_eq!(all[4].parts(), &[1, 1]);
        assert_eq!(all.last().unwrap().parts(), &[3, 1]);
    }

    #[test]
    fn roots_are_deduplicated() {
        assert_eq!(root_points(&[2, 4], 2).len(), 16);
        assert_eq!(root_points(&[2], 1).len(), 2);
    }

    #[test]
    fn tail_points_respect_region() {
        let mut r = rng(1, 0);
        for _ in 0..50 {
            let z = tail_point(&mut r, 2, 1.3, 3.0);
            for t in z.tail_products() {
                let m = t.value().norm();
                assert!((1.3 - 1e-12..=3.0 + 1e-12).contains(&m));
            }
            assert!(clear_of_cut(&z.values(), CUT_MARGIN));
        }
    }

    #[test]
    fn seeded_streams_repeat() {
        let a: f64 = rng(9, 3).random();
        let b: f64 = rng(9, 3).random();
        let c: f64 = rng(9, 4).random();
        assert_eq!(a, b);
        assert_ne!(a, c);
    }
}
