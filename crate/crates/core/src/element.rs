//! Tree-pair diagrams with a leaf permutation: elements of Thompson's group V.
//!
//! An [`Element`] sends leaf `i` of its domain tree affinely onto leaf
//! `perm(i)` of its range tree. Many diagrams describe the same group element;
//! [`Element::reduce`] picks the unique reduced one. Products are written
//! left to right: `a.multiply(&b)` applies `a` first, then `b`.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::interval::{Piece, PiecewiseMap};
use crate::perm::{ClusterPartition, Permutation};
use crate::tree::Tree;

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Element {
    domain: Tree,
    range: Tree,
    perm: Permutation,
}

impl Element {
    pub fn new(domain: Tree, range: Tree, perm: Permutation) -> Result<Self> {
        let (d, r, p) = (domain.leaf_count(), range.leaf_count(), perm.degree());
        if d != r || d != p {
            return Err(Error::LeafCountMismatch {
                domain: d,
                range: r,
                perm: p,
            });
        }
        Ok(Element {
            domain,
            range,
            perm,
        })
    }

    /// `(domain, range, identity)`, an element of F.
    pub fn from_trees(domain: Tree, range: Tree) -> Result<Self> {
        let n = domain.leaf_count();
        Self::new(domain, range, Permutation::identity(n))
    }

    pub fn identity() -> Self {
        Element {
            domain: Tree::Leaf,
            range: Tree::Leaf,
            perm: Permutation::identity(1),
        }
    }

    pub fn domain(&self) -> &Tree {
        &self.domain
    }

    pub fn range(&self) -> &Tree {
        &self.range
    }

    pub fn perm(&self) -> &Permutation {
        &self.perm
    }

    pub fn leaf_count(&self) -> usize {
        self.perm.degree()
    }

    pub fn is_identity(&self) -> bool {
        self.reduce().leaf_count() == 1
    }

    /// Domain positions `i` at which a reducing step applies: leaves `i`,
    /// `i + 1` are siblings in the domain, their images are consecutive, and
    /// those images are siblings in the range.
    pub fn reduction_sites(&self) -> Vec<usize> {
        self.domain
            .sibling_pairs()
            .into_iter()
            .filter(|&i| self.reducible_at(i))
            .collect()
    }

    fn reducible_at(&self, i: usize) -> bool {
        let j = self.perm.image(i);
        self.perm.image(i + 1) == j + 1 && self.range.is_sibling_pair(j)
    }

    pub fn is_reduced(&self) -> bool {
        self.domain
            .sibling_pairs()
            .into_iter()
            .all(|i| !self.reducible_at(i))
    }

    /// Removes the matching caret pair at domain leaves `i`, `i + 1`.
    pub fn contract_at(&self, i: usize) -> Result<Element> {
        if i + 1 >= self.leaf_count() || !self.domain.is_sibling_pair(i) || !self.reducible_at(i) {
            return Err(Error::Contract(format!(
                "no reducible caret pair at leaves {}, {}",
                i + 1,
                i + 2
            )));
        }
        Ok(self.contract_unchecked(i))
    }

    fn contract_unchecked(&self, i: usize) -> Element {
        let j = self.perm.image(i);
        let images = self
            .perm
            .images()
            .iter()
            .enumerate()
            .filter(|&(k, _)| k != i + 1)
            .map(|(_, &v)| if v > j { v - 1 } else { v })
            .collect();
        Element {
            domain: self.domain.contract(i),
            range: self.range.contract(j),
            perm: Permutation::from_images_unchecked(images),
        }
    }

    /// Adds a caret below domain leaf `i` and below its image, the inverse of
    /// a reduction step. The group element is unchanged.
    pub fn expand_at(&self, i: usize) -> Element {
        assert!(i < self.leaf_count(), "leaf {i} out of range");
        let j = self.perm.image(i);
        let mut images = Vec::with_capacity(self.leaf_count() + 1);
        for (k, &v) in self.perm.images().iter().enumerate() {
            let v = if v > j { v + 1 } else { v };
            images.push(v);
            if k == i {
                images.push(j + 1);
            }
        }
        Element {
            domain: self.domain.expand(i),
            range: self.range.expand(j),
            perm: Permutation::from_images_unchecked(images),
        }
    }

    /// The unique reduced diagram of this element.
    ///
    /// Applies the leftmost available reduction until none is left.
    pub fn reduce(&self) -> Element {
        let mut cur = self.clone();
        // a contraction at i can only enable a new one next to the merged leaf,
        // so restart the scan just left of it
        let mut from = 0;
        'scan: loop {
            let sites = cur.domain.sibling_pairs();
            for &i in sites.iter().filter(|&&i| i + 1 >= from) {
                if cur.reducible_at(i) {
                    cur = cur.contract_unchecked(i);
                    from = i.saturating_sub(1);
                    continue 'scan;
                }
            }
            return cur;
        }
    }

    pub fn inverse(&self) -> Element {
        Element {
            domain: self.range.clone(),
            range: self.domain.clone(),
            perm: self.perm.inverse(),
        }
    }

    /// Same element, with domain tree grafted so that domain leaf `i`
    /// carries `subtrees[i]`; the range is grafted to match.
    pub fn refine_domain(&self, subtrees: &[Tree]) -> Element {
        let n = self.leaf_count();
        assert_eq!(subtrees.len(), n);
        let inv = self.perm.inverse();
        let range_subtrees: Vec<Tree> = (0..n).map(|j| subtrees[inv.image(j)].clone()).collect();

        let mut range_offset = vec![0usize; n];
        let mut acc = 0;
        for j in 0..n {
            range_offset[j] = acc;
            acc += range_subtrees[j].leaf_count();
        }
        let mut images = Vec::with_capacity(acc);
        for (i, sub) in subtrees.iter().enumerate() {
            let base = range_offset[self.perm.image(i)];
            images.extend(base..base + sub.leaf_count());
        }
        Element {
            domain: self.domain.graft(subtrees),
            range: self.range.graft(&range_subtrees),
            perm: Permutation::from_images_unchecked(images),
        }
    }

    /// Same element, expanded so that the domain tree is `target`.
    ///
    /// Panics unless `target` refines the current domain tree.
    pub fn with_domain(&self, target: &Tree) -> Element {
        if &self.domain == target {
            return self.clone();
        }
        let subtrees = self.domain.subtrees_within(target);
        self.refine_domain(&subtrees)
    }

    /// Same element, expanded so that the range tree is `target`.
    pub fn with_range(&self, target: &Tree) -> Element {
        if &self.range == target {
            return self.clone();
        }
        self.inverse().with_domain(target).inverse()
    }

    /// Unreduced product: `self` first, then `next`, over the common
    /// refinement of the middle trees.
    pub fn compose_unreduced(&self, next: &Element) -> Element {
        let middle = self.range.common_refinement(&next.domain);
        let first = self.with_range(&middle);
        let second = next.with_domain(&middle);
        Element {
            domain: first.domain,
            range: second.range,
            perm: first.perm.then(&second.perm),
        }
    }

    /// Reduced product: `self` first, then `next`.
    pub fn multiply(&self, next: &Element) -> Element {
        self.compose_unreduced(next).reduce()
    }

    /// Whether both diagrams describe the same group element.
    pub fn same_element(&self, other: &Element) -> bool {
        self.reduce() == other.reduce()
    }

    /// N(x): carets in each tree of the reduced diagram.
    pub fn caret_count(&self) -> usize {
        self.reduce().domain.caret_count()
    }

    pub fn cluster_partition(&self) -> ClusterPartition {
        self.perm.clusters()
    }

    /// B(x): clusters of the permutation. The count does not depend on the
    /// diagram, so no reduction is needed.
    pub fn cluster_count(&self) -> usize {
        self.perm.cluster_count()
    }

    pub fn in_f(&self) -> bool {
        self.reduce().perm.is_identity()
    }

    pub fn in_t(&self) -> bool {
        self.reduce().perm.cyclic_offset().is_some()
    }

    /// Piecewise-affine map of the reduced diagram.
    pub fn interval_map(&self) -> PiecewiseMap {
        let r = self.reduce();
        let sources = r.domain.leaf_intervals();
        let targets = r.range.leaf_intervals();
        let pieces = sources
            .into_iter()
            .enumerate()
            .map(|(i, source)| Piece {
                source,
                target: targets[r.perm.image(i)].clone(),
            })
            .collect();
        PiecewiseMap::from_pieces(pieces)
    }

    /// Canonical text of the reduced diagram, used as a deduplication key.
    pub fn canonical_key(&self) -> String {
        self.reduce().to_string()
    }
}

impl fmt::Display for Element {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}|{}|{}", self.domain, self.range, self.perm)
    }
}

impl fmt::Debug for Element {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Element({self})")
    }
}

impl FromStr for Element {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        crate::text::parse_element(s)
    }
}
