//! Collapsing every cluster of an element to a single leaf by multiplying
//! with elements of F on both sides.
//!
//! For a reduced `x` with clusters of sizes `k_1, …, k_B` (domain order), the
//! tree `A` is a right comb with `B - 1` carets whose leaf `j` carries a right
//! comb with `k_j - 1` carets. `A'` is built the same way from the cluster
//! sizes listed in the order their images appear in the range. Then
//! `y = (A, domain(x), id)` and `z = (range(x), A', id)` make every cluster
//! carry the same subtree on both sides of `y·x·z`, which therefore reduces to
//! a diagram with one leaf per cluster.

use crate::element::Element;
use crate::error::{Error, Result};
use crate::tree::Tree;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CollapseResult {
    /// Left factor, in F.
    pub y: Element,
    /// Right factor, in F.
    pub z: Element,
    /// Reduced `y·x·z`.
    pub collapsed: Element,
    /// Carets per tree of the constructed (possibly unreduced) diagram of `y`.
    pub y_diagram_carets: usize,
    pub z_diagram_carets: usize,
}

/// Comb of combs: a right comb over the blocks, each block a right comb.
fn comb_of_combs(block_sizes: &[usize]) -> Tree {
    let spine = Tree::comb_with_leaves(block_sizes.len());
    let blocks: Vec<Tree> = block_sizes
        .iter()
        .map(|&k| Tree::comb_with_leaves(k))
        .collect();
    spine.graft(&blocks)
}

pub fn collapse_clusters(x: &Element) -> Result<CollapseResult> {
    if !x.is_reduced() {
        return Err(Error::Contract("collapse_clusters expects a reduced diagram".into()));
    }
    let clusters = x.cluster_partition();
    let domain_sizes = clusters.sizes();

    let mut by_image: Vec<(usize, usize)> = clusters
        .runs()
        .iter()
        .map(|r| (x.perm().image(r.start), r.len()))
        .collect();
    by_image.sort_unstable();
    let range_sizes: Vec<usize> = by_image.into_iter().map(|(_, k)| k).collect();

    let a = comb_of_combs(&domain_sizes);
    let a_prime = comb_of_combs(&range_sizes);
    let y = Element::from_trees(a, x.domain().clone())?;
    let z = Element::from_trees(x.range().clone(), a_prime)?;
    let collapsed = y.multiply(x).multiply(&z);

    Ok(CollapseResult {
        y_diagram_carets: y.domain().caret_count(),
        z_diagram_carets: z.range().caret_count(),
        y,
        z,
        collapsed,
    })
}
