//! Exact dyadic intervals and the piecewise-affine map view of an element.

use std::fmt;

use num_bigint::BigUint;
use num_traits::{One, Zero};

/// The half-open interval `[start / 2^depth, (start + 1) / 2^depth)`.
///
/// Endpoints are exact integers over a power of two; nothing here touches
/// floating point.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct DyadicInterval {
    start: BigUint,
    depth: u32,
}

impl DyadicInterval {
    pub fn unit() -> Self {
        DyadicInterval {
            start: BigUint::zero(),
            depth: 0,
        }
    }

    /// `[numerator / 2^depth, (numerator + 1) / 2^depth)`, if it lies in `[0, 1)`.
    pub fn new(numerator: BigUint, depth: u32) -> Option<Self> {
        if numerator < (BigUint::one() << depth) {
            Some(DyadicInterval {
                start: numerator,
                depth,
            })
        } else {
            None
        }
    }

    pub fn halves(&self) -> (DyadicInterval, DyadicInterval) {
        let start = &self.start << 1u32;
        let depth = self.depth + 1;
        let right = DyadicInterval {
            start: &start + 1u32,
            depth,
        };
        (DyadicInterval { start, depth }, right)
    }

    /// Width exponent `k`: the interval has width `1 / 2^k`.
    pub fn width_exponent(&self) -> u32 {
        self.depth
    }

    /// Left endpoint as a reduced fraction `(numerator, exponent)`.
    pub fn left(&self) -> (BigUint, u32) {
        reduce_dyadic(self.start.clone(), self.depth)
    }

    /// Right endpoint as a reduced fraction `(numerator, exponent)`.
    pub fn right(&self) -> (BigUint, u32) {
        reduce_dyadic(&self.start + 1u32, self.depth)
    }

    /// Whether `self` ends exactly where `next` begins.
    pub fn abuts(&self, next: &DyadicInterval) -> bool {
        // (start + 1) / 2^d == next.start / 2^e
        let lhs = (&self.start + 1u32) << next.depth;
        let rhs = &next.start << self.depth;
        lhs == rhs
    }

    pub fn contains_interval(&self, other: &DyadicInterval) -> bool {
        other.depth >= self.depth && (&other.start >> (other.depth - self.depth)) == self.start
    }
}

fn reduce_dyadic(mut num: BigUint, mut exp: u32) -> (BigUint, u32) {
    while exp > 0 && (&num % 2u32).is_zero() {
        num >>= 1u32;
        exp -= 1;
    }
    if num.is_zero() {
        exp = 0;
    }
    (num, exp)
}

fn write_dyadic(f: &mut fmt::Formatter<'_>, (num, exp): (BigUint, u32)) -> fmt::Result {
    if exp == 0 {
        write!(f, "{num}")
    } else {
        write!(f, "{num}/{}", BigUint::one() << exp)
    }
}

impl fmt::Display for DyadicInterval {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("[")?;
        write_dyadic(f, self.left())?;
        f.write_str(",")?;
        write_dyadic(f, self.right())?;
        f.write_str(")")
    }
}

impl fmt::Debug for DyadicInterval {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// One affine piece: `source` maps onto `target`, orientation preserving.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Piece {
    pub source: DyadicInterval,
    pub target: DyadicInterval,
}

/// Right-continuous piecewise-affine bijection of `[0, 1)`.
///
/// Sources are listed left to right and partition `[0, 1)`; targets also
/// partition `[0, 1)`, in permuted order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PiecewiseMap {
    pieces: Vec<Piece>,
}

impl PiecewiseMap {
    pub(crate) fn from_pieces(pieces: Vec<Piece>) -> Self {
        debug_assert!(partitions_unit(pieces.iter().map(|p| &p.source)));
        PiecewiseMap { pieces }
    }

    pub fn pieces(&self) -> &[Piece] {
        &self.pieces
    }

    /// Connected components of the closure of the graph.
    ///
    /// Consecutive pieces belong to the same component exactly when the
    /// target of one ends where the target of the next begins.
    pub fn graph_components(&self) -> usize {
        1 + self
            .pieces
            .windows(2)
            .filter(|w| !w[0].target.abuts(&w[1].target))
            .count()
    }
}

impl fmt::Display for PiecewiseMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, p) in self.pieces.iter().enumerate() {
            if i > 0 {
                writeln!(f)?;
            }
            write!(f, "{} -> {}", p.source, p.target)?;
        }
        Ok(())
    }
}

/// Whether the intervals, sorted by left endpoint, tile `[0, 1)` without gaps.
pub fn partitions_unit<'a, I>(intervals: I) -> bool
where
    I: IntoIterator<Item = &'a DyadicInterval>,
{
    let mut sorted: Vec<&DyadicInterval> = intervals.into_iter().collect();
    if sorted.is_empty() {
        return false;
    }
    sorted.sort_by(|a, b| {
        let l = &a.start << b.depth;
        let r = &b.start << a.depth;
        l.cmp(&r)
    });
    let first = sorted[0].start.is_zero();
    let chained = sorted.windows(2).all(|w| w[0].abuts(w[1]));
    let last = sorted[sorted.len() - 1];
    let ends_at_one = (&last.start + 1u32) == (BigUint::one() << last.depth);
    first && chained && ends_at_one
}
