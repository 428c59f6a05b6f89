use alloc::vec::Vec;
use core::fmt;

use crate::error::{Error, Result};

/// Index `k = (k_1, …, k_d)` of positive integers.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Index {
    parts: Vec<u32>,
}

impl Index {
    pub fn new(parts: Vec<u32>) -> Result<Self> {
        if parts.contains(&0) {
            return Err(Error::ZeroIndexEntry);
        }
        Ok(Self { parts })
    }

    pub fn from_slice(parts: &[u32]) -> Result<Self> {
        Self::new(parts.to_vec())
    }

    pub fn empty() -> Self {
        Self::default()
    }

    pub fn ones(d: usize) -> Self {
        Self {
            parts: alloc::vec![1; d],
        }
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    pub fn weight(&self) -> u32 {
        self.parts.iter().sum()
    }

    pub fn depth(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    pub fn reversed(&self) -> Self {
        let mut parts = self.parts.clone();
        parts.reverse();
        Self { parts }
    }

    /// Entries `lo..hi` (0-based, half-open).
    pub fn slice(&self, lo: usize, hi: usize) -> Self {
        if lo >= hi {
            return Self::empty();
        }
        Self {
            parts: self.parts[lo..hi].to_vec(),
        }
    }

    /// `(k_1 - 1, k_2, …)`, or `None` when `k_1 = 1`.
    pub fn decrement_first(&self) -> Option<Self> {
        match self.parts.first() {
            Some(&k) if k > 1 => {
                let mut parts = self.parts.clone();
                parts[0] -= 1;
                Some(Self { parts })
            }
            _ => None,
        }
    }

    /// `(k_1 + k_2, k_3, …)`.
    pub fn merged_front(&self) -> Self {
        assert!(self.depth() >= 2, "merged_front needs depth >= 2");
        let mut parts = Vec::with_capacity(self.depth() - 1);
        parts.push(self.parts[0] + self.parts[1]);
        parts.extend_from_slice(&self.parts[2..]);
        Self { parts }
    }

    /// Entrywise `k + l`.
    pub fn shifted(&self, l: &[u32]) -> Self {
        assert_eq!(l.len(), self.depth());
        Self {
            parts: self.parts.iter().zip(l).map(|(a, b)| a + b).collect(),
        }
    }

    pub fn concat(&self, other: &Index) -> Self {
        let mut parts = self.parts.clone();
        parts.extend_from_slice(&other.parts);
        Self { parts }
    }

    pub fn is_all_ones(&self) -> bool {
        self.parts.iter().all(|&k| k == 1)
    }
}

impl fmt::Display for Index {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.parts.is_empty() {
            return f.write_str("()");
        }
        f.write_str("(")?;
        for (i, k) in self.parts.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{k}")?;
        }
        f.write_str(")")
    }
}
