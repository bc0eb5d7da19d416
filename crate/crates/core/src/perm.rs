//! Permutations of leaf positions and their cluster decomposition.

use std::fmt;
use std::ops::Range;

use crate::error::{Error, Result};

/// A bijection of `{0, …, n-1}` stored as its image sequence.
///
/// Text form is 1-based: `[2,1,3]` sends leaf 1 to leaf 2.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    images: Vec<usize>,
}

impl Permutation {
    pub fn identity(n: usize) -> Self {
        assert!(n >= 1, "permutations act on at least one leaf");
        Permutation {
            images: (0..n).collect(),
        }
    }

    /// From 0-based images.
    pub fn from_images(images: Vec<usize>) -> Result<Self> {
        if images.is_empty() {
            return Err(Error::InvalidPermutation("empty image list".into()));
        }
        let n = images.len();
        let mut seen = vec![false; n];
        for &v in &images {
            if v >= n {
                return Err(Error::InvalidPermutation(format!(
                    "image {} out of range 1..={n}",
                    v + 1
                )));
            }
            if std::mem::replace(&mut seen[v], true) {
                return Err(Error::InvalidPermutation(format!(
                    "image {} repeated",
                    v + 1
                )));
            }
        }
        Ok(Permutation { images })
    }

    /// From the 1-based one-line notation `[σ(1), …, σ(n)]`.
    pub fn from_one_based(images: &[usize]) -> Result<Self> {
        if images.contains(&0) {
            return Err(Error::InvalidPermutation("images are 1-based".into()));
        }
        Self::from_images(images.iter().map(|&v| v - 1).collect())
    }

    pub fn to_one_based(&self) -> Vec<usize> {
        self.images.iter().map(|&v| v + 1).collect()
    }

    /// Cyclic shift `i ↦ i + shift (mod n)`.
    pub fn cyclic_shift(n: usize, shift: usize) -> Self {
        Permutation {
            images: (0..n).map(|i| (i + shift) % n).collect(),
        }
    }

    pub(crate) fn from_images_unchecked(images: Vec<usize>) -> Self {
        debug_assert!(Self::from_images(images.clone()).is_ok());
        Permutation { images }
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    pub fn image(&self, i: usize) -> usize {
        self.images[i]
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    pub fn inverse(&self) -> Self {
        let mut inv = vec![0; self.images.len()];
        for (i, &v) in self.images.iter().enumerate() {
            inv[v] = i;
        }
        Permutation { images: inv }
    }

    /// `self` first, then `next`.
    pub fn then(&self, next: &Permutation) -> Self {
        assert_eq!(self.degree(), next.degree(), "degree mismatch");
        Permutation {
            images: self.images.iter().map(|&v| next.images[v]).collect(),
        }
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &v)| i == v)
    }

    /// The shift `c` if this is `i ↦ i + c (mod n)`.
    pub fn cyclic_offset(&self) -> Option<usize> {
        let n = self.images.len();
        let c = self.images[0];
        self.images
            .iter()
            .enumerate()
            .all(|(i, &v)| v == (i + c) % n)
            .then_some(c)
    }

    pub fn clusters(&self) -> ClusterPartition {
        let mut runs = Vec::new();
        let mut start = 0;
        for i in 1..self.images.len() {
            if self.images[i] != self.images[i - 1] + 1 {
                runs.push(start..i);
                start = i;
            }
        }
        runs.push(start..self.images.len());
        ClusterPartition { runs }
    }

    pub fn cluster_count(&self) -> usize {
        1 + self
            .images
            .windows(2)
            .filter(|w| w[1] != w[0] + 1)
            .count()
    }

    /// Positions `a` such that swapping entries `a`, `a + 1` of the image
    /// list, in order, sorts it. Equivalently `self` is the adjacent
    /// transposition at the first position, then the one at the second, and
    /// so on.
    pub fn bubble_sort_swaps(&self) -> Vec<usize> {
        let mut arr = self.images.clone();
        let mut swaps = Vec::new();
        let n = arr.len();
        for pass in 0..n {
            let mut moved = false;
            for a in 0..n - 1 - pass.min(n - 1) {
                if arr[a] > arr[a + 1] {
                    arr.swap(a, a + 1);
                    swaps.push(a);
                    moved = true;
                }
            }
            if !moved {
                break;
            }
        }
        swaps
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("[")?;
        for (i, v) in self.images.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{}", v + 1)?;
        }
        f.write_str("]")
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Permutation{self}")
    }
}

/// Maximal runs of consecutive positions whose images are also consecutive.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClusterPartition {
    runs: Vec<Range<usize>>,
}

impl ClusterPartition {
    /// 0-based half-open position ranges, left to right.
    pub fn runs(&self) -> &[Range<usize>] {
        &self.runs
    }

    pub fn len(&self) -> usize {
        self.runs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.runs.is_empty()
    }

    pub fn sizes(&self) -> Vec<usize> {
        self.runs.iter().map(|r| r.len()).collect()
    }
}

impl fmt::Display for ClusterPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, r) in self.runs.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            if r.len() == 1 {
                write!(f, "{{{}}}", r.start + 1)?;
            } else {
                write!(f, "{{{}..{}}}", r.start + 1, r.end)?;
            }
        }
        Ok(())
    }
}
