//! The y_n family, random surveys of the two bounds against exact lengths,
//! and empirical constants over a full Cayley ball.

use std::fmt;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::bounds::{birget_upper, format_birget, format_new_upper, new_upper};
use crate::element::Element;
use crate::error::{Error, ResourceError, Result};
use crate::oracle::{CayleyBall, MemoryBudget};
use crate::par::Exec;
use crate::perm::Permutation;
use crate::synthesis::synthesize_word;
use crate::tree::Tree;
use crate::word::{generator_metadata, Generator, Word};

/// Right comb with `2n + 1` carets on both sides, swapping leaves `2n` and
/// `2n + 1` (1-based).
pub fn counterexample_y(n: usize) -> Element {
    assert!(n >= 1, "y_n is defined for n >= 1");
    let comb = Tree::right_comb(2 * n + 1);
    let mut images: Vec<usize> = (0..2 * n + 2).collect();
    images.swap(2 * n - 1, 2 * n);
    let perm = Permutation::from_images(images).expect("transposition");
    Element::new(comb.clone(), comb, perm).expect("leaf counts match")
}

/// How a written product is turned into an element.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Convention {
    /// Evaluate the expression exactly as written, left to right.
    AsWritten,
    /// Evaluate with every x0 exponent negated, which is the same as reading
    /// the product right to left since y_1 is an involution.
    Mirrored,
}

impl Convention {
    fn sign(self) -> i64 {
        match self {
            Convention::AsWritten => 1,
            Convention::Mirrored => -1,
        }
    }
}

impl fmt::Display for Convention {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Convention::AsWritten => "as-written",
            Convention::Mirrored => "mirrored",
        })
    }
}

fn x0_power(exponent: i64) -> Element {
    Word::power(Generator::X0, exponent).evaluate()
}

/// `x0^(-(2n-2)) y_1 x0^(2n-2)` under the given convention.
pub fn conjugated_y1(n: usize, convention: Convention) -> Element {
    let k = convention.sign() * (2 * n as i64 - 2);
    x0_power(-k)
        .multiply(&counterexample_y(1))
        .multiply(&x0_power(k))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConjugationReport {
    pub n: usize,
    pub as_written: bool,
    pub mirrored: bool,
}

impl ConjugationReport {
    pub fn validating(&self) -> Vec<Convention> {
        let mut v = Vec::new();
        if self.as_written {
            v.push(Convention::AsWritten);
        }
        if self.mirrored {
            v.push(Convention::Mirrored);
        }
        v
    }
}

impl fmt::Display for ConjugationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "n: {}", self.n)?;
        writeln!(f, "as-written: {}", self.as_written)?;
        write!(f, "mirrored: {}", self.mirrored)
    }
}

pub fn verify_conjugation_identity(n: usize) -> ConjugationReport {
    let y = counterexample_y(n);
    ConjugationReport {
        n,
        as_written: conjugated_y1(n, Convention::AsWritten) == y,
        mirrored: conjugated_y1(n, Convention::Mirrored) == y,
    }
}

/// The convention under which the conjugation identity holds, decided at
/// `n = 2` where exactly one of them can.
pub fn validated_convention() -> Result<Convention> {
    match verify_conjugation_identity(2).validating().as_slice() {
        [c] => Ok(*c),
        other => Err(Error::Contract(format!(
            "conjugation identity validates under {} conventions",
            other.len()
        ))),
    }
}

/// `P_n = y_1 · y_2 · … · y_n` and a word for it built from the expression
/// `y_1 x0^-2 y_1 x0^-2 … y_1 x0^(2n-2)` with each `y_1` replaced by its
/// synthesized word.
pub fn counterexample_product(n: usize) -> Result<(Element, Word)> {
    assert!(n >= 1, "P_n is defined for n >= 1");
    let product = (1..=n).fold(Element::identity(), |acc, k| acc.multiply(&counterexample_y(k)));
    let sign = validated_convention()?.sign();
    let y1 = synthesize_word(&counterexample_y(1));
    let step = Word::power(Generator::X0, -2 * sign);
    let mut word = y1.clone();
    for _ in 1..n {
        word.extend(&step);
        word.extend(&y1);
    }
    word.extend(&Word::power(Generator::X0, sign * (2 * n as i64 - 2)));
    Ok((product, word))
}

#[derive(Clone, Debug, PartialEq)]
pub struct ProductStats {
    pub n: usize,
    pub carets: usize,
    pub clusters: usize,
    pub word_length: usize,
    pub new_upper: f64,
    pub birget_upper: f64,
}

pub fn product_stats(n: usize) -> Result<ProductStats> {
    let (p, w) = counterexample_product(n)?;
    let carets = p.caret_count();
    let clusters = p.cluster_count();
    Ok(ProductStats {
        n,
        carets,
        clusters,
        word_length: w.len(),
        new_upper: new_upper(carets, clusters)?,
        birget_upper: birget_upper(carets),
    })
}

/// Uniform full binary tree with the given number of carets (Rémy's
/// growth process).
pub fn random_tree<R: Rng + ?Sized>(carets: usize, rng: &mut R) -> Tree {
    const NONE: usize = usize::MAX;
    // node 0 starts as the only leaf; children[i] is set for carets only
    let mut parent = vec![NONE];
    let mut children: Vec<Option<(usize, usize)>> = vec![None];
    let mut root = 0;
    for _ in 0..carets {
        let target = rng.gen_range(0..parent.len());
        let caret = parent.len();
        let leaf = caret + 1;
        parent.extend([parent[target], caret]);
        children.extend([
            if rng.gen_bool(0.5) {
                Some((target, leaf))
            } else {
                Some((leaf, target))
            },
            None,
        ]);
        match parent[caret] {
            NONE => root = caret,
            p => {
                let (l, r) = children[p].as_mut().expect("parent is a caret");
                if *l == target {
                    *l = caret;
                } else {
                    *r = caret;
                }
            }
        }
        parent[target] = caret;
    }

    // post-order assembly without recursion
    let mut built: Vec<Option<Tree>> = vec![None; parent.len()];
    let mut stack = vec![(root, false)];
    while let Some((node, ready)) = stack.pop() {
        match children[node] {
            None => built[node] = Some(Tree::Leaf),
            Some((l, r)) if ready => {
                let left = built[l].take().expect("left built");
                let right = built[r].take().expect("right built");
                built[node] = Some(Tree::caret(left, right));
            }
            Some((l, r)) => stack.extend([(node, true), (r, false), (l, false)]),
        }
    }
    built[root].take().expect("root built")
}

fn rng_for(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Two independent uniform trees and a uniform permutation, reduced.
pub fn random_element(carets: usize, seed: u64) -> Element {
    let mut rng = rng_for(seed);
    let domain = random_tree(carets, &mut rng);
    let range = random_tree(carets, &mut rng);
    let mut images: Vec<usize> = (0..=carets).collect();
    images.shuffle(&mut rng);
    let perm = Permutation::from_images(images).expect("shuffle is a bijection");
    Element::new(domain, range, perm).expect("equal leaf counts").reduce()
}

/// Random element of F from two uniform trees, reduced.
pub fn random_f_element(carets: usize, seed: u64) -> Element {
    let mut rng = rng_for(seed);
    let domain = random_tree(carets, &mut rng);
    let range = random_tree(carets, &mut rng);
    Element::from_trees(domain, range).expect("equal leaf counts").reduce()
}

/// Random element of T: two uniform trees and a uniform cyclic shift, reduced.
pub fn random_t_element(carets: usize, seed: u64) -> Element {
    let mut rng = rng_for(seed);
    let domain = random_tree(carets, &mut rng);
    let range = random_tree(carets, &mut rng);
    let shift = rng.gen_range(0..=carets);
    let perm = Permutation::cyclic_shift(carets + 1, shift);
    Element::new(domain, range, perm).expect("equal leaf counts").reduce()
}

#[derive(Clone, Debug, PartialEq)]
pub struct SurveyRecord {
    pub element: Element,
    pub carets: usize,
    pub clusters: usize,
    pub exact_length: Option<usize>,
    pub birget: f64,
    pub new_bound: f64,
}

impl SurveyRecord {
    pub fn for_element(element: Element, exact_length: Option<usize>) -> Self {
        let element = element.reduce();
        let carets = element.caret_count();
        let clusters = element.cluster_count();
        SurveyRecord {
            birget: birget_upper(carets),
            new_bound: new_upper(carets, clusters).expect("B <= N + 1 for reduced diagrams"),
            element,
            carets,
            clusters,
            exact_length,
        }
    }

    pub fn csv_row(&self) -> String {
        format!(
            "\"{}\",{},{},{},{},{}",
            self.element,
            self.carets,
            self.clusters,
            self.exact_length.map(|d| d.to_string()).unwrap_or_default(),
            format_birget(self.carets),
            format_new_upper(self.carets, self.clusters).expect("valid range"),
        )
    }
}

pub const CSV_HEADER: &str = "element,N,B,exact_length,birget_upper,new_upper";

pub fn records_to_csv(records: &[SurveyRecord]) -> String {
    let mut out = String::from(CSV_HEADER);
    out.push('\n');
    for r in records {
        out.push_str(&r.csv_row());
        out.push('\n');
    }
    out
}

/// `count` random elements with `carets` carets before reduction; record `i`
/// uses seed `seed + i`. Exact lengths are filled in when the element lies in
/// the ball of the given radius.
pub fn survey_bounds(
    count: usize,
    carets: usize,
    radius: usize,
    seed: u64,
    budget: MemoryBudget,
    exec: Exec,
) -> Result<Vec<SurveyRecord>, ResourceError> {
    let ball = CayleyBall::build(radius, budget, exec)?;
    Ok(exec.map_range(0..count, |i| {
        let x = random_element(carets, seed.wrapping_add(i as u64));
        let len = ball.distance(&x).known();
        SurveyRecord::for_element(x, len)
    }))
}

/// Largest `new_upper - birget_upper` over the records.
pub fn additive_gap(records: &[SurveyRecord]) -> f64 {
    records
        .iter()
        .map(|r| r.new_bound - r.birget)
        .fold(f64::NEG_INFINITY, f64::max)
}

/// An exact non-negative rational `num / den`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Ratio {
    pub num: u64,
    pub den: u64,
}

impl Ratio {
    pub fn new(num: u64, den: u64) -> Self {
        let g = gcd(num, den).max(1);
        Ratio {
            num: num / g,
            den: den / g,
        }
    }

    pub fn value(self) -> f64 {
        self.num as f64 / self.den as f64
    }

    fn gt(self, other: Ratio) -> bool {
        (self.num as u128) * (other.den as u128) > (other.num as u128) * (self.den as u128)
    }
}

fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

impl fmt::Display for Ratio {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den == 1 {
            write!(f, "{}", self.num)
        } else {
            write!(f, "{}/{}", self.num, self.den)
        }
    }
}

/// Empirical constants over a complete ball.
#[derive(Clone, Debug, PartialEq)]
pub struct ConstantsReport {
    pub radius: usize,
    pub ball_sizes: Vec<usize>,
    /// max N(x) / ||x|| over non-identity x.
    pub lower: Ratio,
    pub lower_witness: Element,
    /// max ||x|| / (N + B log2 B + 1) over non-identity x.
    pub upper: f64,
    pub upper_witness: Element,
}

pub fn upper_ratio(length: usize, carets: usize, clusters: usize) -> f64 {
    let denom = new_upper(carets, clusters).expect("valid cluster count") + 1.0;
    length as f64 / denom
}

impl ConstantsReport {
    pub fn from_ball(ball: &CayleyBall) -> Self {
        let mut lower = Ratio::new(0, 1);
        let mut lower_witness = Element::identity();
        let mut upper = 0.0;
        let mut upper_witness = Element::identity();
        for e in ball.entries().iter().filter(|e| e.distance > 0) {
            let n = e.element.caret_count();
            let b = e.element.cluster_count();
            let r = Ratio::new(n as u64, e.distance as u64);
            if r.gt(lower) {
                lower = r;
                lower_witness = e.element.clone();
            }
            let u = upper_ratio(e.distance, n, b);
            if u > upper {
                upper = u;
                upper_witness = e.element.clone();
            }
        }
        ConstantsReport {
            radius: ball.radius(),
            ball_sizes: ball.sizes(),
            lower,
            lower_witness,
            upper,
            upper_witness,
        }
    }
}

impl fmt::Display for ConstantsReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let sizes: Vec<String> = self.ball_sizes.iter().map(|s| s.to_string()).collect();
        writeln!(f, "radius: {}", self.radius)?;
        writeln!(f, "generators: {}", generator_metadata())?;
        writeln!(f, "ball_sizes: {}", sizes.join(","))?;
        writeln!(f, "ball_total: {}", self.ball_sizes.iter().sum::<usize>())?;
        writeln!(f, "c1: {}", self.lower)?;
        writeln!(f, "c1_decimal: {:.6}", self.lower.value())?;
        writeln!(f, "c1_witness: {}", self.lower_witness)?;
        writeln!(f, "c2: {:.6}", self.upper)?;
        write!(f, "c2_witness: {}", self.upper_witness)
    }
}

pub fn estimate_constants(
    radius: usize,
    budget: MemoryBudget,
    exec: Exec,
) -> Result<ConstantsReport, ResourceError> {
    Ok(ConstantsReport::from_ball(&CayleyBall::build(radius, budget, exec)?))
}
