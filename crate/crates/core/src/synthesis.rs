//! Explicit words for elements.
//!
//! Elements of F are written over {x0, x1} by rotating each tree into a
//! right comb. Right-multiplying `(T, U, id)` by
//!
//! ```text
//! r_0 = x0^-1
//! r_k = x0^(k-1) x1^-1 x0^-(k-1)     (k >= 1)
//! ```
//!
//! performs the right rotation `((A,B),C) -> (A,(B,C))` at depth `k` of the
//! right spine of `U`. Rotations are emitted at non-decreasing depth, so after
//! free reduction the conjugating powers telescope and the word for
//! `(T, comb, id)` has at most `3N` letters.
//!
//! General elements are factored as `(D, comb, id) · (comb, comb, σ) ·
//! (comb, R, id)`. The middle factor is a product of adjacent transpositions,
//! each the conjugate of `pi` by a cyclic shift of the comb; the shifts are
//! written with one `c^±1` between two F words.

use crate::element::Element;
use crate::error::{Error, Result};
use crate::tree::Tree;
use crate::word::{Generator, Letter, Word};

/// `fNormalFormWord(f)` has at most this many letters per caret of `f`.
pub const F_WORD_LENGTH_FACTOR: usize = 6;

fn rotation_word(depth: usize) -> Word {
    if depth == 0 {
        return Word::power(Generator::X0, -1);
    }
    let k = depth as i64 - 1;
    Word::concat([
        &Word::power(Generator::X0, k),
        &Word::power(Generator::X1, -1),
        &Word::power(Generator::X0, -k),
    ])
}

/// Rotates right at the node reached by `depth` right steps from the root.
fn rotate_on_spine(tree: &Tree, depth: usize) -> Tree {
    let (left, right) = tree.children().expect("spine node is a caret");
    if depth > 0 {
        return Tree::caret(left.clone(), rotate_on_spine(right, depth - 1));
    }
    let (a, b) = left.children().expect("rotation needs a left caret");
    Tree::caret(a.clone(), Tree::caret(b.clone(), right.clone()))
}

/// Word for `(tree, right comb, id)`.
fn to_comb_word(tree: &Tree) -> Word {
    let mut word = Word::new();
    let mut cur = tree.clone();
    let mut depth = 0;
    loop {
        let mut node = &cur;
        for _ in 0..depth {
            node = node.children().expect("spine").1;
        }
        match node.children() {
            None => break,
            Some((left, _)) if left.is_leaf() => depth += 1,
            Some(_) => {
                cur = rotate_on_spine(&cur, depth);
                word.extend(&rotation_word(depth));
            }
        }
    }
    word.free_reduce()
}

/// Word over {x0, x1} for `(domain, range, id)`; the trees need not form a
/// reduced diagram.
pub fn f_word_for_trees(domain: &Tree, range: &Tree) -> Word {
    assert_eq!(domain.leaf_count(), range.leaf_count());
    Word::concat([&to_comb_word(domain), &to_comb_word(range).inverse()]).free_reduce()
}

/// Word over {x0, x1} evaluating to `f`, of length at most
/// [`F_WORD_LENGTH_FACTOR`] times its caret count.
pub fn f_normal_form_word(f: &Element) -> Result<Word> {
    let r = f.reduce();
    if !r.perm().is_identity() {
        return Err(Error::Contract(format!("{f} is not in F")));
    }
    Ok(f_word_for_trees(r.domain(), r.range()))
}

/// Word for `(comb, comb, i -> i + shift mod n)`, `n >= 3`.
fn comb_shift_word(n: usize, shift: usize) -> Word {
    debug_assert!(n >= 3);
    let shift = shift % n;
    if shift == 0 {
        return Word::new();
    }
    let comb = Tree::comb_with_leaves(n);
    let leaf = Tree::Leaf;
    // c refined by blocks A, B, X sends (A,(B,X)) to (X,(A,B)): shift by |X|.
    // c^-1 refined sends (X,(A,B)) to (A,(B,X)): shift by -|X|.
    let (domain, letter, range) = if shift <= n - 2 {
        let a = Tree::comb_with_leaves(n - shift - 1);
        let x = Tree::comb_with_leaves(shift);
        (
            Tree::caret(a.clone(), Tree::caret(leaf.clone(), x.clone())),
            Letter::pos(Generator::C),
            Tree::caret(x, Tree::caret(a, leaf)),
        )
    } else {
        let a = Tree::comb_with_leaves(n - 2);
        (
            Tree::caret(leaf.clone(), Tree::caret(a.clone(), leaf.clone())),
            Letter::neg(Generator::C),
            Tree::caret(a, Tree::caret(leaf.clone(), leaf)),
        )
    };
    let mut word = f_word_for_trees(&comb, &domain);
    word.push(letter);
    word.extend(&f_word_for_trees(&range, &comb));
    word
}

/// A word over {x0, x1, c, pi} evaluating to `x`.
///
/// Length is polynomial in the caret count (cubic in the worst case); it is a
/// correctness witness, not a short word.
pub fn synthesize_word(x: &Element) -> Word {
    let mut r = x.reduce();
    if r.perm().is_identity() {
        return f_word_for_trees(r.domain(), r.range());
    }
    if r.leaf_count() < 3 {
        // pi and c need three leaves to act on
        r = r.expand_at(0);
    }
    let n = r.leaf_count();
    let comb = Tree::comb_with_leaves(n);

    let mut word = f_word_for_trees(r.domain(), &comb);
    // transposition at a: shift a to 0, swap the first two leaves, shift back
    let mut current_shift = 0;
    for a in r.perm().bubble_sort_swaps() {
        let shift = (n - a) % n;
        word.extend(&comb_shift_word(n, (shift + n - current_shift) % n));
        word.push(Letter::pos(Generator::Pi));
        current_shift = shift;
    }
    word.extend(&comb_shift_word(n, (n - current_shift) % n));
    word.extend(&f_word_for_trees(&comb, r.range()));
    word.free_reduce()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn e(s: &str) -> Element {
        s.parse().unwrap()
    }

    #[test]
    fn rotation_words_rotate() {
        for depth in 0..4 {
            let mut t = Tree::right_comb(depth);
            t = t.graft(
                &(0..t.leaf_count())
                    .map(|i| {
                        if i + 1 == t.leaf_count() {
                            "((.,.),.)".parse().unwrap()
                        } else {
                            Tree::Leaf
                        }
                    })
                    .collect::<Vec<_>>(),
            );
            let rotated = rotate_on_spine(&t, depth);
            let expected = Element::from_trees(t, rotated).unwrap();
            assert!(rotation_word(depth).evaluate().same_element(&expected), "depth {depth}");
        }
    }

    #[test]
    fn f_words_small_examples() {
        assert!(f_normal_form_word(&Element::identity()).unwrap().is_empty());
        let x0 = Generator::X0.element();
        assert_eq!(f_normal_form_word(x0).unwrap().to_string(), "x0");
        let sq = x0.multiply(x0);
        let w = f_normal_form_word(&sq).unwrap();
        assert_eq!(w.len(), 2);
        assert_eq!(w.evaluate(), sq);
        let x1 = Generator::X1.element();
        assert_eq!(f_normal_form_word(x1).unwrap().to_string(), "x1");
    }

    #[test]
    fn f_word_rejects_non_f() {
        assert!(f_normal_form_word(Generator::C.element()).is_err());
    }

    #[test]
    fn comb_shifts() {
        for n in 3..8 {
            for shift in 0..n {
                let comb = Tree::comb_with_leaves(n);
                let expected = Element::new(
                    comb.clone(),
                    comb,
                    crate::perm::Permutation::cyclic_shift(n, shift),
                )
                .unwrap();
                assert!(
                    comb_shift_word(n, shift).evaluate().same_element(&expected),
                    "n={n} shift={shift}"
                );
            }
        }
    }

    #[test]
    fn synthesized_words_evaluate_back() {
        for s in [
            "(.,.)|(.,.)|[2,1]",
            "(.,(.,(.,.)))|(.,(.,(.,.)))|[1,3,2,4]",
            "((.,.),((.,.),(.,(.,.))))|(.,((.,.),((.,.),(.,.))))|[3,4,1,2,7,5,6]",
            "(.,(.,.))|((.,.),.)|[3,1,2]",
        ] {
            let x = e(s);
            let w = synthesize_word(&x);
            assert_eq!(w.evaluate(), x.reduce(), "{s}: {w}");
        }
        assert!(synthesize_word(&Element::identity()).is_empty());
    }

    #[test]
    fn y1_word_is_short() {
        let y1 = e("(.,(.,(.,.)))|(.,(.,(.,.)))|[1,3,2,4]");
        let w = synthesize_word(&y1);
        assert_eq!(w.to_string(), "x1 c^-1 x0^-1 pi x0 c x1^-1");
    }
}
