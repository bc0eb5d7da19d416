//! Exact word lengths by breadth-first search of the Cayley graph.
//!
//! Vertices are elements of V, deduplicated by the canonical text of their
//! reduced diagram; edges are right multiplication by the eight letters.
//! Each level is expanded completely (possibly in parallel) before the next
//! begins, and new vertices are committed in frontier order, so sequential
//! and parallel runs produce identical balls, witnesses included.

use std::collections::HashMap;
use std::fmt;

use crate::element::Element;
use crate::error::ResourceError;
use crate::par::Exec;
use crate::word::{Letter, Word};

pub const DEFAULT_RADIUS: usize = 7;

/// Approximate cap on the memory held by a search.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct MemoryBudget {
    bytes: usize,
}

impl MemoryBudget {
    pub fn from_megabytes(mb: usize) -> Self {
        MemoryBudget {
            bytes: mb.saturating_mul(1 << 20),
        }
    }

    pub fn from_bytes(bytes: usize) -> Self {
        MemoryBudget { bytes }
    }

    pub fn unlimited() -> Self {
        MemoryBudget { bytes: usize::MAX }
    }

    pub fn bytes(self) -> usize {
        self.bytes
    }

    fn check(self, estimated: usize, completed_radius: usize) -> Result<(), ResourceError> {
        if estimated > self.bytes {
            Err(ResourceError::MemoryBudget {
                budget_bytes: self.bytes,
                estimated_bytes: estimated,
                completed_radius,
            })
        } else {
            Ok(())
        }
    }
}

impl Default for MemoryBudget {
    fn default() -> Self {
        MemoryBudget::from_megabytes(4096)
    }
}

/// Rough heap footprint of one stored vertex.
fn entry_bytes(e: &Element, key_len: usize) -> usize {
    const ARC_CARET: usize = 56;
    128 + key_len + 2 * ARC_CARET * (e.leaf_count() - 1) + 8 * e.leaf_count()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum LengthResult {
    Known(usize),
    /// Not within the searched radius.
    Unknown { radius: usize },
}

impl LengthResult {
    pub fn known(self) -> Option<usize> {
        match self {
            LengthResult::Known(d) => Some(d),
            LengthResult::Unknown { .. } => None,
        }
    }
}

impl fmt::Display for LengthResult {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            LengthResult::Known(d) => write!(f, "{d}"),
            LengthResult::Unknown { radius } => write!(f, "unknown beyond radius {radius}"),
        }
    }
}

#[derive(Clone, Debug)]
pub struct BallEntry {
    pub element: Element,
    pub distance: usize,
    parent: u32,
    letter: u8,
}

/// Every element within a given word distance of the identity.
#[derive(Clone, Debug)]
pub struct CayleyBall {
    entries: Vec<BallEntry>,
    index: HashMap<String, u32>,
    level_starts: Vec<usize>,
    estimated_bytes: usize,
}

/// Reduced products of `e` with every letter, with their keys.
fn neighbours(e: &Element) -> Vec<(Letter, String, Element)> {
    Letter::ALL
        .iter()
        .map(|&l| {
            let p = e.multiply(l.element());
            (l, p.to_string(), p)
        })
        .collect()
}

impl CayleyBall {
    pub fn build(radius: usize, budget: MemoryBudget, exec: Exec) -> Result<Self, ResourceError> {
        let id = Element::identity();
        let key = id.to_string();
        let mut ball = CayleyBall {
            estimated_bytes: entry_bytes(&id, key.len()),
            entries: vec![BallEntry {
                element: id,
                distance: 0,
                parent: u32::MAX,
                letter: 0,
            }],
            index: HashMap::from([(key, 0)]),
            level_starts: vec![0, 1],
        };
        for d in 1..=radius {
            ball.grow(budget, exec)?;
            debug_assert_eq!(ball.radius(), d);
        }
        Ok(ball)
    }

    /// Adds the next distance level.
    pub fn grow(&mut self, budget: MemoryBudget, exec: Exec) -> Result<(), ResourceError> {
        let radius = self.radius();
        let start = self.level_starts[radius];
        let end = self.level_starts[radius + 1];
        let frontier = &self.entries[start..end];

        // at most 7 new vertices per frontier vertex (each letter's inverse
        // leads back), each no larger than its parent plus two carets
        let avg = self.estimated_bytes / self.entries.len() + 2 * 112 + 16;
        let projected = self.estimated_bytes + 7 * frontier.len() * avg;
        budget.check(projected, radius)?;

        let expanded = exec.map(frontier, |entry| neighbours(&entry.element));
        let distance = radius + 1;
        for (offset, cands) in expanded.into_iter().enumerate() {
            let parent = (start + offset) as u32;
            for (letter, key, element) in cands {
                if self.index.contains_key(&key) {
                    continue;
                }
                self.estimated_bytes += entry_bytes(&element, key.len());
                let id = self.entries.len() as u32;
                self.index.insert(key, id);
                self.entries.push(BallEntry {
                    element,
                    distance,
                    parent,
                    letter: letter.index(),
                });
            }
        }
        self.level_starts.push(self.entries.len());
        Ok(())
    }

    pub fn radius(&self) -> usize {
        self.level_starts.len() - 2
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn estimated_bytes(&self) -> usize {
        self.estimated_bytes
    }

    /// Number of elements at each exact distance `0..=radius`.
    pub fn sizes(&self) -> Vec<usize> {
        self.level_starts.windows(2).map(|w| w[1] - w[0]).collect()
    }

    pub fn entries(&self) -> &[BallEntry] {
        &self.entries
    }

    pub fn level(&self, distance: usize) -> &[BallEntry] {
        &self.entries[self.level_starts[distance]..self.level_starts[distance + 1]]
    }

    fn find(&self, x: &Element) -> Option<usize> {
        self.index.get(&x.canonical_key()).map(|&i| i as usize)
    }

    pub fn distance(&self, x: &Element) -> LengthResult {
        match self.find(x) {
            Some(i) => LengthResult::Known(self.entries[i].distance),
            None => LengthResult::Unknown {
                radius: self.radius(),
            },
        }
    }

    /// A geodesic word for `x`, if it lies in the ball.
    pub fn witness(&self, x: &Element) -> Option<Word> {
        self.find(x).map(|i| self.witness_of(i))
    }

    pub fn witness_of(&self, mut i: usize) -> Word {
        let mut letters = Vec::with_capacity(self.entries[i].distance);
        while i != 0 {
            let e = &self.entries[i];
            letters.push(Letter::from_index(e.letter));
            i = e.parent as usize;
        }
        letters.reverse();
        Word::from_letters(letters)
    }
}

/// Counts of elements at each exact distance `0..=radius`.
pub fn ball_sizes(radius: usize, budget: MemoryBudget, exec: Exec) -> Result<Vec<usize>, ResourceError> {
    Ok(CayleyBall::build(radius, budget, exec)?.sizes())
}

struct SearchSide {
    seen: HashMap<String, usize>,
    frontier: Vec<Element>,
    depth: usize,
    bytes: usize,
}

impl SearchSide {
    fn new(start: Element) -> Self {
        let key = start.canonical_key();
        let start = start.reduce();
        SearchSide {
            bytes: entry_bytes(&start, key.len()),
            seen: HashMap::from([(key, 0)]),
            frontier: vec![start],
            depth: 0,
        }
    }
}

/// Word length of `x`, if at most `radius`, by bidirectional search from the
/// identity and from `x`.
pub fn exact_word_length(
    x: &Element,
    radius: usize,
    budget: MemoryBudget,
    exec: Exec,
) -> Result<LengthResult, ResourceError> {
    if x.is_identity() {
        return Ok(LengthResult::Known(0));
    }
    let mut sides = [SearchSide::new(Element::identity()), SearchSide::new(x.clone())];
    while sides[0].depth + sides[1].depth < radius {
        let which = usize::from(sides[1].frontier.len() < sides[0].frontier.len());
        let completed = sides[0].depth + sides[1].depth;
        let (this, other) = if which == 0 {
            let (a, b) = sides.split_at_mut(1);
            (&mut a[0], &b[0])
        } else {
            let (a, b) = sides.split_at_mut(1);
            (&mut b[0], &a[0])
        };

        let avg = this.bytes / this.seen.len() + 240;
        budget.check(this.bytes + other.bytes + 7 * this.frontier.len() * avg, completed)?;

        let expanded = exec.map(&this.frontier, neighbours);
        let depth = this.depth + 1;
        let mut next = Vec::new();
        let mut best: Option<usize> = None;
        for (_, key, element) in expanded.into_iter().flatten() {
            if this.seen.contains_key(&key) {
                continue;
            }
            if let Some(&d) = other.seen.get(&key) {
                best = Some(best.map_or(depth + d, |b| b.min(depth + d)));
            }
            this.bytes += entry_bytes(&element, key.len());
            this.seen.insert(key, depth);
            next.push(element);
        }
        this.frontier = next;
        this.depth = depth;
        if let Some(d) = best {
            return Ok(LengthResult::Known(d));
        }
    }
    Ok(LengthResult::Unknown { radius })
}
