use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt;
use core::hash::{Hash, Hasher};

use num_complex::Complex64;
use num_rational::Ratio;
use num_traits::{One, Zero};
use smallvec::SmallVec;

use crate::mathf::{self, TAU};

type Turn = Ratio<i64>;

/// Sorted `(slot id, exponent)` pairs; inline for the common short case.
type Slots = SmallVec<[(u32, i32); 2]>;

/// Symbolic argument: `e^{2πi·turn} · Π slot^exp`.
///
/// Equality, ordering and hashing look only at the symbolic part; the cached
/// numeric value is derived data.
#[derive(Clone)]
pub struct ArgSymbol {
    turn: Turn,
    slots: Slots,
    value: Complex64,
}

fn normalize_turn(t: Turn) -> Turn {
    let f = t - t.floor();
    if f < Turn::zero() {
        f + Turn::one()
    } else {
        f
    }
}

fn root_value(turn: Turn) -> Complex64 {
    match (*turn.numer(), *turn.denom()) {
        (0, _) => Complex64::new(1.0, 0.0),
        (1, 2) => Complex64::new(-1.0, 0.0),
        (1, 4) => Complex64::new(0.0, 1.0),
        (3, 4) => Complex64::new(0.0, -1.0),
        (n, d) => mathf::cis(TAU * n as f64 / d as f64),
    }
}

fn exact_root_turn(v: Complex64) -> Option<Turn> {
    const TABLE: [(f64, f64, i64, i64); 4] = [(1.0, 0.0, 0, 1), (-1.0, 0.0, 1, 2), (0.0, 1.0, 1, 4), (0.0, -1.0, 3, 4)];
    TABLE
        .iter()
        .find(|&&(re, im, _, _)| v.re == re && v.im == im)
        .map(|&(_, _, n, d)| Turn::new(n, d))
}

impl ArgSymbol {
    pub fn one() -> Self {
        Self::root_of_unity(1, 0)
    }

    /// `e^{2πi j/n}`.
    pub fn root_of_unity(n: u32, j: i64) -> Self {
        assert!(n > 0, "root of unity order must be positive");
        let turn = normalize_turn(Turn::new(j, n as i64));
        Self {
            turn,
            slots: Slots::new(),
            value: root_value(turn),
        }
    }

    /// Free symbol for argument slot `id`. Exact fourth roots of unity are
    /// recognized and stored symbolically instead.
    pub fn slot(id: u32, value: Complex64) -> Self {
        if let Some(turn) = exact_root_turn(value) {
            return Self {
                turn,
                slots: Slots::new(),
                value: root_value(turn),
            };
        }
        Self {
            turn: Turn::zero(),
            slots: smallvec::smallvec![(id, 1)],
            value,
        }
    }

    pub fn value(&self) -> Complex64 {
        self.value
    }

    pub fn is_one(&self) -> bool {
        self.turn.is_zero() && self.slots.is_empty()
    }

    /// True when the symbol is a pure root of unity (no free slots).
    pub fn is_root_of_unity(&self) -> bool {
        self.slots.is_empty()
    }

    pub fn turn(&self) -> (i64, i64) {
        (*self.turn.numer(), *self.turn.denom())
    }

    pub fn product(&self, other: &ArgSymbol) -> ArgSymbol {
        let turn = normalize_turn(self.turn + other.turn);
        let mut slots = Slots::with_capacity(self.slots.len() + other.slots.len());
        let (mut i, mut j) = (0, 0);
        while i < self.slots.len() || j < other.slots.len() {
            let next = match (self.slots.get(i), other.slots.get(j)) {
                (Some(&a), Some(&b)) => match a.0.cmp(&b.0) {
                    Ordering::Less => {
                        i += 1;
                        a
                    }
                    Ordering::Greater => {
                        j += 1;
                        b
                    }
                    Ordering::Equal => {
                        i += 1;
                        j += 1;
                        (a.0, a.1 + b.1)
                    }
                },
                (Some(&a), None) => {
                    i += 1;
                    a
                }
                (None, Some(&b)) => {
                    j += 1;
                    b
                }
                (None, None) => unreachable!(),
            };
            if next.1 != 0 {
                slots.push(next);
            }
        }
        let value = if slots.is_empty() {
            root_value(turn)
        } else {
            self.value * other.value
        };
        ArgSymbol { turn, slots, value }
    }

    pub fn reciprocal(&self) -> ArgSymbol {
        let turn = normalize_turn(-self.turn);
        let slots: Slots = self.slots.iter().map(|&(s, e)| (s, -e)).collect();
        let value = if slots.is_empty() {
            root_value(turn)
        } else {
            self.value.inv()
        };
        ArgSymbol { turn, slots, value }
    }

    /// Reduced turns compare as plain integer pairs, which is cheaper than
    /// rational comparison and just as canonical.
    fn key(&self) -> ((i64, i64), &[(u32, i32)]) {
        ((*self.turn.numer(), *self.turn.denom()), &self.slots)
    }
}

impl PartialEq for ArgSymbol {
    fn eq(&self, other: &Self) -> bool {
        self.key() == other.key()
    }
}

impl Eq for ArgSymbol {}

impl PartialOrd for ArgSymbol {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for ArgSymbol {
    fn cmp(&self, other: &Self) -> Ordering {
        self.key().cmp(&other.key())
    }
}

impl Hash for ArgSymbol {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.key().hash(state);
    }
}

impl fmt::Debug for ArgSymbol {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for ArgSymbol {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_one() {
            return f.write_str("1");
        }
        let mut first = true;
        if !self.turn.is_zero() {
            write!(f, "e({}/{})", self.turn.numer(), self.turn.denom())?;
            first = false;
        }
        for &(s, e) in &self.slots {
            if !first {
                f.write_str("*")?;
            }
            first = false;
            if e == 1 {
                write!(f, "z{}", s + 1)?;
            } else {
                write!(f, "z{}^{}", s + 1, e)?;
            }
        }
        Ok(())
    }
}

/// Argument tuple `(z_1, …, z_d)` with symbolic provenance.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ArgVector {
    entries: Vec<ArgSymbol>,
}

impl ArgVector {
    pub fn empty() -> Self {
        Self::default()
    }

    pub fn new(entries: Vec<ArgSymbol>) -> Self {
        Self { entries }
    }

    /// Slot `i` gets id `i`; exact fourth roots of unity become phases.
    pub fn from_values(values: &[Complex64]) -> Self {
        Self {
            entries: values
                .iter()
                .enumerate()
                .map(|(i, &v)| ArgSymbol::slot(i as u32, v))
                .collect(),
        }
    }

    /// Entries `e^{2πi j/n}` given as `(n, j)` pairs.
    pub fn roots_of_unity(roots: &[(u32, i64)]) -> Self {
        Self {
            entries: roots.iter().map(|&(n, j)| ArgSymbol::root_of_unity(n, j)).collect(),
        }
    }

    pub fn ones(d: usize) -> Self {
        Self {
            entries: alloc::vec![ArgSymbol::one(); d],
        }
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn symbols(&self) -> &[ArgSymbol] {
        &self.entries
    }

    pub fn get(&self, i: usize) -> &ArgSymbol {
        &self.entries[i]
    }

    pub fn values(&self) -> Vec<Complex64> {
        self.entries.iter().map(ArgSymbol::value).collect()
    }

    pub fn is_all_ones(&self) -> bool {
        self.entries.iter().all(ArgSymbol::is_one)
    }

    /// `1/z`, entrywise.
    pub fn reciprocal(&self) -> Self {
        Self {
            entries: self.entries.iter().map(ArgSymbol::reciprocal).collect(),
        }
    }

    /// Entries `lo..hi` (0-based, half-open).
    pub fn slice(&self, lo: usize, hi: usize) -> Self {
        if lo >= hi {
            return Self::empty();
        }
        Self {
            entries: self.entries[lo..hi].to_vec(),
        }
    }

    /// `(z_1 z_2, z_3, …, z_d)`; requires depth at least 2.
    pub fn merged_front(&self) -> Self {
        assert!(self.len() >= 2, "merged_front needs depth >= 2");
        let mut entries = Vec::with_capacity(self.len() - 1);
        entries.push(self.entries[0].product(&self.entries[1]));
        entries.extend_from_slice(&self.entries[2..]);
        Self { entries }
    }

    /// Product of entries `lo..hi` (empty product is 1).
    pub fn range_product(&self, lo: usize, hi: usize) -> ArgSymbol {
        self.entries[lo..hi.max(lo)]
            .iter()
            .fold(ArgSymbol::one(), |acc, s| acc.product(s))
    }

    /// Tail products `z_{i,d}` for `i = 1..=d`.
    pub fn tail_products(&self) -> Vec<ArgSymbol> {
        let mut out = alloc::vec![ArgSymbol::one(); self.len()];
        let mut acc = ArgSymbol::one();
        for i in (0..self.len()).rev() {
            acc = self.entries[i].product(&acc);
            out[i] = acc.clone();
        }
        out
    }

    pub fn reversed(&self) -> Self {
        let mut entries = self.entries.clone();
        entries.reverse();
        Self { entries }
    }

    pub fn concat(&self, other: &ArgVector) -> Self {
        let mut entries = self.entries.clone();
        entries.extend_from_slice(&other.entries);
        Self { entries }
    }

    /// Largest modulus among the tail products.
    pub fn max_tail_modulus(&self) -> f64 {
        self.tail_products()
            .iter()
            .map(|s| s.value().norm())
            .fold(0.0, f64::max)
    }
}

impl fmt::Display for ArgVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (i, s) in self.entries.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{s}")?;
        }
        f.write_str(")")
    }
}
