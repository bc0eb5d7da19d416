//! Full ordered binary trees.
//!
//! A [`Tree`] is either a leaf or a caret with exactly two children. Trees
//! are immutable and share structure through [`Arc`], so cloning is cheap and
//! every "modifying" operation returns a new tree.
//!
//! Leaves are numbered left to right starting at 0 in this API; the text
//! formats are the only place where 1-based leaf numbers appear.

use std::fmt;
use std::str::FromStr;
use std::sync::Arc;

use crate::error::Error;
use crate::interval::DyadicInterval;

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Tree {
    Leaf,
    Caret(Arc<Caret>),
}

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Caret {
    leaves: usize,
    left: Tree,
    right: Tree,
}

impl Caret {
    pub fn left(&self) -> &Tree {
        &self.left
    }

    pub fn right(&self) -> &Tree {
        &self.right
    }
}

impl Default for Tree {
    fn default() -> Self {
        Tree::Leaf
    }
}

impl Tree {
    pub fn leaf() -> Tree {
        Tree::Leaf
    }

    pub fn caret(left: Tree, right: Tree) -> Tree {
        let leaves = left.leaf_count() + right.leaf_count();
        Tree::Caret(Arc::new(Caret {
            leaves,
            left,
            right,
        }))
    }

    /// A tree in which every left child is a leaf.
    pub fn right_comb(carets: usize) -> Tree {
        (0..carets).fold(Tree::Leaf, |acc, _| Tree::caret(Tree::Leaf, acc))
    }

    /// Right comb with the given number of leaves (at least one).
    pub fn comb_with_leaves(leaves: usize) -> Tree {
        assert!(leaves >= 1, "a tree has at least one leaf");
        Tree::right_comb(leaves - 1)
    }

    pub fn is_leaf(&self) -> bool {
        matches!(self, Tree::Leaf)
    }

    pub fn children(&self) -> Option<(&Tree, &Tree)> {
        match self {
            Tree::Leaf => None,
            Tree::Caret(c) => Some((&c.left, &c.right)),
        }
    }

    pub fn leaf_count(&self) -> usize {
        match self {
            Tree::Leaf => 1,
            Tree::Caret(c) => c.leaves,
        }
    }

    pub fn caret_count(&self) -> usize {
        self.leaf_count() - 1
    }

    pub fn depth(&self) -> usize {
        match self {
            Tree::Leaf => 0,
            Tree::Caret(c) => 1 + c.left.depth().max(c.right.depth()),
        }
    }

    pub fn is_right_comb(&self) -> bool {
        let mut node = self;
        while let Tree::Caret(c) = node {
            if !c.left.is_leaf() {
                return false;
            }
            node = &c.right;
        }
        true
    }

    /// Left indices `i` of every caret whose children are the leaves `i` and
    /// `i + 1`, in increasing order.
    pub fn sibling_pairs(&self) -> Vec<usize> {
        let mut out = Vec::new();
        self.collect_sibling_pairs(0, &mut out);
        out
    }

    fn collect_sibling_pairs(&self, offset: usize, out: &mut Vec<usize>) {
        if let Tree::Caret(c) = self {
            if c.left.is_leaf() && c.right.is_leaf() {
                out.push(offset);
            } else {
                c.left.collect_sibling_pairs(offset, out);
                c.right
                    .collect_sibling_pairs(offset + c.left.leaf_count(), out);
            }
        }
    }

    /// Whether leaves `i` and `i + 1` are the two children of one caret.
    pub fn is_sibling_pair(&self, i: usize) -> bool {
        let mut node = self;
        let mut offset = 0;
        while let Tree::Caret(c) = node {
            if c.left.is_leaf() && c.right.is_leaf() {
                return offset == i;
            }
            let split = offset + c.left.leaf_count();
            if i + 1 < split {
                node = &c.left;
            } else if i >= split {
                node = &c.right;
                offset = split;
            } else {
                return false;
            }
        }
        false
    }

    /// Replaces the caret whose children are leaves `i`, `i + 1` by a leaf.
    ///
    /// Panics if those leaves are not siblings.
    pub fn contract(&self, i: usize) -> Tree {
        assert!(self.is_sibling_pair(i), "leaves {i}, {} are not siblings", i + 1);
        self.contract_unchecked(i, 0)
    }

    fn contract_unchecked(&self, i: usize, offset: usize) -> Tree {
        match self {
            Tree::Leaf => unreachable!("contract walked past a leaf"),
            Tree::Caret(c) => {
                if c.left.is_leaf() && c.right.is_leaf() {
                    return Tree::Leaf;
                }
                let split = offset + c.left.leaf_count();
                if i < split {
                    Tree::caret(c.left.contract_unchecked(i, offset), c.right.clone())
                } else {
                    Tree::caret(c.left.clone(), c.right.contract_unchecked(i, split))
                }
            }
        }
    }

    /// Replaces leaf `i` by a single caret.
    pub fn expand(&self, i: usize) -> Tree {
        assert!(i < self.leaf_count(), "leaf {i} out of range");
        self.graft_one(i, &Tree::caret(Tree::Leaf, Tree::Leaf))
    }

    fn graft_one(&self, i: usize, subtree: &Tree) -> Tree {
        match self {
            Tree::Leaf => subtree.clone(),
            Tree::Caret(c) => {
                let l = c.left.leaf_count();
                if i < l {
                    Tree::caret(c.left.graft_one(i, subtree), c.right.clone())
                } else {
                    Tree::caret(c.left.clone(), c.right.graft_one(i - l, subtree))
                }
            }
        }
    }

    /// Replaces leaf `j` by `subtrees[j]` for every leaf.
    pub fn graft(&self, subtrees: &[Tree]) -> Tree {
        assert_eq!(subtrees.len(), self.leaf_count(), "one subtree per leaf");
        let mut iter = subtrees.iter();
        self.graft_iter(&mut iter)
    }

    fn graft_iter<'a, I: Iterator<Item = &'a Tree>>(&self, iter: &mut I) -> Tree {
        match self {
            Tree::Leaf => iter.next().expect("subtree count checked").clone(),
            Tree::Caret(c) => {
                let left = c.left.graft_iter(iter);
                let right = c.right.graft_iter(iter);
                Tree::caret(left, right)
            }
        }
    }

    /// The smallest tree containing both `self` and `other` as rooted subtrees.
    pub fn common_refinement(&self, other: &Tree) -> Tree {
        match (self, other) {
            (Tree::Leaf, t) | (t, Tree::Leaf) => t.clone(),
            (Tree::Caret(a), Tree::Caret(b)) => {
                if Arc::ptr_eq(a, b) {
                    return self.clone();
                }
                Tree::caret(
                    a.left.common_refinement(&b.left),
                    a.right.common_refinement(&b.right),
                )
            }
        }
    }

    /// Whether `refinement` is obtained from `self` by grafting trees on leaves.
    pub fn is_refined_by(&self, refinement: &Tree) -> bool {
        match (self, refinement) {
            (Tree::Leaf, _) => true,
            (Tree::Caret(_), Tree::Leaf) => false,
            (Tree::Caret(a), Tree::Caret(b)) => {
                a.left.is_refined_by(&b.left) && a.right.is_refined_by(&b.right)
            }
        }
    }

    /// The subtree of `refinement` hanging below each leaf of `self`.
    ///
    /// Panics unless `self.is_refined_by(refinement)`.
    pub fn subtrees_within(&self, refinement: &Tree) -> Vec<Tree> {
        let mut out = Vec::with_capacity(self.leaf_count());
        self.collect_subtrees_within(refinement, &mut out);
        out
    }

    fn collect_subtrees_within(&self, refinement: &Tree, out: &mut Vec<Tree>) {
        match (self, refinement) {
            (Tree::Leaf, t) => out.push(t.clone()),
            (Tree::Caret(a), Tree::Caret(b)) => {
                a.left.collect_subtrees_within(&b.left, out);
                a.right.collect_subtrees_within(&b.right, out);
            }
            (Tree::Caret(_), Tree::Leaf) => panic!("tree is not a refinement"),
        }
    }

    /// Dyadic intervals of the leaves, left to right.
    pub fn leaf_intervals(&self) -> Vec<DyadicInterval> {
        let mut out = Vec::with_capacity(self.leaf_count());
        self.collect_intervals(DyadicInterval::unit(), &mut out);
        out
    }

    fn collect_intervals(&self, at: DyadicInterval, out: &mut Vec<DyadicInterval>) {
        match self {
            Tree::Leaf => out.push(at),
            Tree::Caret(c) => {
                let (l, r) = at.halves();
                c.left.collect_intervals(l, out);
                c.right.collect_intervals(r, out);
            }
        }
    }

    /// Appends the preorder shape bits (1 = caret, 0 = leaf).
    pub(crate) fn push_shape(&self, out: &mut Vec<u8>) {
        match self {
            Tree::Leaf => out.push(b'.'),
            Tree::Caret(c) => {
                out.push(b'(');
                c.left.push_shape(out);
                out.push(b',');
                c.right.push_shape(out);
                out.push(b')');
            }
        }
    }
}

impl fmt::Display for Tree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut buf = Vec::with_capacity(4 * self.leaf_count());
        self.push_shape(&mut buf);
        // push_shape only emits ASCII
        f.write_str(std::str::from_utf8(&buf).expect("ascii"))
    }
}

impl fmt::Debug for Tree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Tree({self})")
    }
}

impl FromStr for Tree {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        crate::text::parse_tree(s)
    }
}
