//! Acceptance suite. Prints one PASS/FAIL line per criterion and exits
//! non-zero if any criterion fails. Every tolerance is a constant below.

use std::process::ExitCode;
use std::time::{Duration, Instant};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use thompson_core::experiments::{
    self, counterexample_product, counterexample_y, product_stats, random_element,
    random_f_element, random_t_element, upper_ratio, verify_conjugation_identity, Convention,
};
use thompson_core::{
    collapse_clusters, new_upper, synthesize_word, CayleyBall, Element, Exec, MemoryBudget, Tree,
};

const AC1_ELEMENTS: usize = 1000;
const AC1_MAX_CARETS: usize = 12;
const AC1_ORDERS: usize = 10;
const AC1_TIME_LIMIT: Duration = Duration::from_secs(30);

const AC2_ELEMENTS: usize = 500;
const AC2_EXPANSIONS: usize = 5;

const BALL_RADIUS: usize = 6;

const AC4_ELEMENTS: usize = 500;
const AC4_MAX_CARETS: usize = 15;
const AC4_TIME_LIMIT: Duration = Duration::from_secs(60);

const AC5_TIME_LIMIT: Duration = Duration::from_secs(600);
const AC5_CONSTANT_FLOOR: f64 = 1.0 / 8.0;
const FLOAT_SLACK: f64 = 1e-9;

const AC6_IDENTITY_RANGE: std::ops::RangeInclusive<usize> = 2..=5;
const AC6_WORD_RANGE: std::ops::RangeInclusive<usize> = 1..=5;
const AC6_GROWTH_RANGE: std::ops::RangeInclusive<usize> = 1..=8;
const AC6_ENVELOPE_LOW: usize = 1;
const AC6_ENVELOPE_HIGH: usize = 4;
const AC6_WORD_SLOPE: usize = 11;
/// Powers of two over which new_upper(P_n) / |word_n| must strictly increase.
const AC6_RATIO_EXPONENTS: std::ops::RangeInclusive<u32> = 3..=10;

const AC7_ELEMENTS: usize = 500;
const AC7_MAX_CARETS: usize = 10;

const AC8_ELEMENTS: usize = 200;
const AC8_MAX_CARETS: usize = 15;

const SEED: u64 = 0x5eed;

type Outcome = Result<String, String>;

fn check(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn within(limit: Duration, start: Instant) -> Result<Duration, String> {
    let t = start.elapsed();
    check(t <= limit, || format!("took {t:.2?}, limit {limit:?}"))?;
    Ok(t)
}

fn expand_randomly(x: &Element, rng: &mut ChaCha8Rng) -> Element {
    let steps = rng.gen_range(1..=6);
    (0..steps).fold(x.clone(), |acc, _| {
        let i = rng.gen_range(0..acc.leaf_count());
        acc.expand_at(i)
    })
}

fn reduce_in_random_order(x: &Element, rng: &mut ChaCha8Rng) -> Element {
    let mut cur = x.clone();
    loop {
        let sites = cur.reduction_sites();
        if sites.is_empty() {
            return cur;
        }
        cur = cur
            .contract_at(sites[rng.gen_range(0..sites.len())])
            .expect("listed site contracts");
    }
}

fn ac1_elements() -> Vec<Element> {
    (0..AC1_ELEMENTS)
        .map(|i| random_element(i % (AC1_MAX_CARETS + 1), SEED + i as u64))
        .collect()
}

fn ac2_elements() -> Vec<(Element, Vec<Element>)> {
    let mut rng = ChaCha8Rng::seed_from_u64(SEED ^ 2);
    (0..AC2_ELEMENTS)
        .map(|i| {
            let x = random_element(i % (AC1_MAX_CARETS + 1), SEED + 10_000 + i as u64);
            let ex = (0..AC2_EXPANSIONS).map(|_| expand_randomly(&x, &mut rng)).collect();
            (x, ex)
        })
        .collect()
}

fn ac1(elements: &[Element]) -> Outcome {
    let start = Instant::now();
    let mut rng = ChaCha8Rng::seed_from_u64(SEED ^ 1);
    for x in elements {
        let expanded = expand_randomly(x, &mut rng);
        let canonical = expanded.reduce();
        check(canonical == *x, || format!("reduce of an expansion of {x} gave {canonical}"))?;
        for _ in 0..AC1_ORDERS {
            let r = reduce_in_random_order(&expanded, &mut rng);
            check(r == canonical, || format!("{expanded}: orders disagree ({r} vs {canonical})"))?;
        }
    }
    let t = within(AC1_TIME_LIMIT, start)?;
    Ok(format!(
        "{} elements x {AC1_ORDERS} orders agree, {t:.2?}",
        elements.len()
    ))
}

fn ac2(cases: &[(Element, Vec<Element>)]) -> Outcome {
    let mut diagrams = 0;
    for (x, expansions) in cases {
        let b = x.cluster_count();
        for d in expansions {
            let runs = d.perm().clusters().len();
            check(runs == b, || format!("{d}: {runs} runs, reduced element has {b}"))?;
            diagrams += 1;
        }
    }
    Ok(format!("{} elements, {diagrams} expanded diagrams", cases.len()))
}

fn ac3(ac1: &[Element], ac2: &[(Element, Vec<Element>)], ball: &CayleyBall) -> Outcome {
    let all = ac1
        .iter()
        .chain(ac2.iter().map(|(x, _)| x))
        .chain(ball.entries().iter().map(|e| &e.element));
    let mut count = 0;
    for x in all {
        let c = x.interval_map().graph_components();
        let b = x.cluster_count();
        check(c == b, || format!("{x}: {c} components, {b} clusters"))?;
        count += 1;
    }
    Ok(format!("{count} elements (incl. radius-{BALL_RADIUS} ball of {})", ball.len()))
}

fn ac4() -> Outcome {
    let start = Instant::now();
    for i in 0..AC4_ELEMENTS {
        let x = random_element(i % (AC4_MAX_CARETS + 1), SEED + 20_000 + i as u64);
        let (n, b) = (x.caret_count(), x.cluster_count());
        let r = collapse_clusters(&x).map_err(|e| format!("{x}: {e}"))?;
        check(r.y.perm().is_identity() && r.z.perm().is_identity(), || {
            format!("{x}: y or z has a non-identity permutation")
        })?;
        check(r.y_diagram_carets == n && r.z_diagram_carets == n, || {
            format!(
                "{x}: constructed diagrams have {}/{} carets, N = {n}",
                r.y_diagram_carets, r.z_diagram_carets
            )
        })?;
        check(r.y.domain().caret_count() == n && r.y.range().caret_count() == n, || {
            format!("{x}: y trees do not both have N carets")
        })?;
        check(r.z.domain().caret_count() == n && r.z.range().caret_count() == n, || {
            format!("{x}: z trees do not both have N carets")
        })?;
        check(r.collapsed.leaf_count() == b, || {
            format!("{x}: collapsed has {} leaves, B = {b}", r.collapsed.leaf_count())
        })?;
        check(r.collapsed.cluster_partition().sizes().iter().all(|&k| k == 1), || {
            format!("{x}: collapsed clusters not all singletons")
        })?;
        let yxz = r.y.multiply(&x).multiply(&r.z);
        check(yxz == r.collapsed, || format!("{x}: y x z != collapsed"))?;
    }
    let t = within(AC4_TIME_LIMIT, start)?;
    Ok(format!("{AC4_ELEMENTS} elements, {t:.2?}"))
}

fn ac5(parallel: &CayleyBall) -> Outcome {
    let start = Instant::now();
    let seq = CayleyBall::build(BALL_RADIUS, MemoryBudget::default(), Exec::Sequential)
        .map_err(|e| e.to_string())?;
    let report = experiments::ConstantsReport::from_ball(parallel);
    let again = experiments::ConstantsReport::from_ball(&seq);
    check(report == again, || "sequential and parallel reports differ".into())?;
    check(
        parallel.sizes() == seq.sizes()
            && parallel
                .entries()
                .iter()
                .zip(seq.entries())
                .all(|(a, b)| a.element == b.element && a.distance == b.distance),
        || "ball enumeration order is not deterministic".into(),
    )?;

    let c1 = report.lower.value();
    let c2 = report.upper;
    check(c1.is_finite() && c2.is_finite(), || "non-finite constant".into())?;
    check(c1 >= AC5_CONSTANT_FLOOR && c2 >= AC5_CONSTANT_FLOOR, || {
        format!("constants below {AC5_CONSTANT_FLOOR}: c1 = {c1}, c2 = {c2}")
    })?;
    for e in parallel.entries().iter().filter(|e| e.distance > 0) {
        let (n, b) = (e.element.caret_count(), e.element.cluster_count());
        // exact rational comparison for c1
        check(
            (n as u128) * (report.lower.den as u128) <= (report.lower.num as u128) * (e.distance as u128),
            || format!("{}: N = {n} exceeds c1 * {}", e.element, e.distance),
        )?;
        check(upper_ratio(e.distance, n, b) <= c2 + FLOAT_SLACK, || {
            format!("{}: length {} exceeds c2 bound", e.element, e.distance)
        })?;
    }
    let t = within(AC5_TIME_LIMIT, start)?;
    println!("---- constants (radius {BALL_RADIUS}) ----\n{report}\n----");
    Ok(format!(
        "radius {BALL_RADIUS}, {} elements, c1 = {} ({c1:.6}), c2 = {c2:.6}, deterministic, {t:.2?}",
        parallel.len(),
        report.lower
    ))
}

fn ac6(ball: &CayleyBall) -> Outcome {
    // (a) conjugation identity
    let mut conventions = Vec::new();
    for n in AC6_IDENTITY_RANGE {
        let v = verify_conjugation_identity(n).validating();
        check(v.len() == 1, || format!("n = {n}: {} conventions validate", v.len()))?;
        conventions.push(v[0]);
    }
    check(conventions.windows(2).all(|w| w[0] == w[1]), || {
        "validating convention changes with n".into()
    })?;
    let convention: Convention = conventions[0];

    // (b) product word
    for n in AC6_WORD_RANGE {
        let (p, w) = counterexample_product(n).map_err(|e| e.to_string())?;
        let direct = (1..=n).fold(Element::identity(), |acc, k| acc.multiply(&counterexample_y(k)));
        check(p == direct, || format!("n = {n}: product mismatch"))?;
        check(w.evaluate() == direct, || format!("n = {n}: word does not evaluate to P_n"))?;
    }

    // (c) linear envelopes, with least-squares slopes through the origin reported
    let stats: Vec<_> = AC6_GROWTH_RANGE
        .map(product_stats)
        .collect::<Result<_, _>>()
        .map_err(|e| e.to_string())?;
    for s in &stats {
        for (what, v) in [("N", s.carets), ("B", s.clusters)] {
            check(
                AC6_ENVELOPE_LOW * s.n <= v && v <= AC6_ENVELOPE_HIGH * s.n,
                || format!("{what}(P_{}) = {v} outside [{AC6_ENVELOPE_LOW}n, {AC6_ENVELOPE_HIGH}n]", s.n),
            )?;
        }
    }
    let slope = |f: &dyn Fn(&experiments::ProductStats) -> usize| {
        let num: f64 = stats.iter().map(|s| (s.n * f(s)) as f64).sum();
        let den: f64 = stats.iter().map(|s| (s.n * s.n) as f64).sum();
        num / den
    };
    let (fit_n, fit_b) = (slope(&|s| s.carets), slope(&|s| s.clusters));

    // (d) witness length vs new_upper growth
    for s in &stats {
        check(s.word_length <= AC6_WORD_SLOPE * s.n, || {
            format!("|word(P_{})| = {} > {AC6_WORD_SLOPE}n", s.n, s.word_length)
        })?;
    }
    let mut last = 0.0;
    let mut ratios = Vec::new();
    for k in AC6_RATIO_EXPONENTS {
        let s = product_stats(1 << k).map_err(|e| e.to_string())?;
        check(s.word_length <= AC6_WORD_SLOPE * s.n, || {
            format!("|word(P_{})| = {} > {AC6_WORD_SLOPE}n", s.n, s.word_length)
        })?;
        let ratio = s.new_upper / s.word_length as f64;
        check(ratio > last, || {
            format!("new_upper/|word| not increasing at n = {}: {ratio:.4} after {last:.4}", s.n)
        })?;
        ratios.push(format!("{}:{ratio:.3}", s.n));
        last = ratio;
    }

    // P_1 against the ball, when reachable
    let p1 = ball
        .distance(&counterexample_y(1))
        .known()
        .map_or_else(|| format!("> {BALL_RADIUS}"), |d| d.to_string());

    Ok(format!(
        "convention {convention}; N(P_n) = {}, B(P_n) = {} for n = 1..8; envelope [{AC6_ENVELOPE_LOW}n, {AC6_ENVELOPE_HIGH}n], fitted N ~ {fit_n:.3}n, B ~ {fit_b:.3}n; |word| <= {AC6_WORD_SLOPE}n; new_upper/|word| {}; ||P_1|| {p1}",
        stats.iter().map(|s| s.carets.to_string()).collect::<Vec<_>>().join(","),
        stats.iter().map(|s| s.clusters.to_string()).collect::<Vec<_>>().join(","),
        ratios.join(" "),
    ))
}

fn ac7() -> Outcome {
    let mut longest = 0;
    for i in 0..AC7_ELEMENTS {
        let x = random_element(i % (AC7_MAX_CARETS + 1), SEED + 30_000 + i as u64);
        let w = synthesize_word(&x);
        check(w.evaluate() == x, || format!("{x}: synthesized word {w} evaluates elsewhere"))?;
        longest = longest.max(w.len());
    }
    let fixtures: Vec<&str> = include_str!("fixtures/elements.txt")
        .lines()
        .filter(|l| !l.trim().is_empty() && !l.starts_with('#'))
        .collect();
    for line in &fixtures {
        let x: Element = line.parse().map_err(|e| format!("{line}: {e}"))?;
        check(x.to_string() == *line, || format!("{line} printed as {x}"))?;
        for t in [x.domain(), x.range()] {
            let back: Tree = t.to_string().parse().map_err(|e| format!("{t}: {e}"))?;
            check(back == *t, || format!("tree {t} does not round trip"))?;
        }
        let w = synthesize_word(&x);
        let reparsed: thompson_core::Word = w.to_string().parse().map_err(|e| format!("{w}: {e}"))?;
        check(reparsed == w, || format!("word {w} does not round trip"))?;
    }
    Ok(format!(
        "{AC7_ELEMENTS} synthesis round trips (longest word {longest}), {} fixtures",
        fixtures.len()
    ))
}

fn ac8() -> Outcome {
    let mut nonidentity = 0;
    let mut seed = SEED + 40_000;
    for i in 0..AC8_ELEMENTS {
        let f = random_f_element(1 + i % AC8_MAX_CARETS, SEED + 50_000 + i as u64);
        let n = f.caret_count();
        check(f.in_f() && f.cluster_count() == 1, || format!("{f}: B != 1"))?;
        let nu = new_upper(n, 1).map_err(|e| e.to_string())?;
        check(nu == n as f64, || format!("{f}: new_upper {nu} != N = {n}"))?;
    }
    // rotation-free T elements lie in F and were covered above
    let mut in_f = 0;
    while nonidentity < AC8_ELEMENTS {
        let t = random_t_element(1 + nonidentity % AC8_MAX_CARETS, seed);
        seed += 1;
        check(t.in_t(), || format!("{t}: sampled element not in T"))?;
        if t.perm().is_identity() {
            check(t.cluster_count() == 1, || format!("{t}: F element with B != 1"))?;
            in_f += 1;
            continue;
        }
        check(t.cluster_count() == 2, || format!("{t}: B = {}", t.cluster_count()))?;
        nonidentity += 1;
    }
    Ok(format!(
        "{AC8_ELEMENTS} F elements with B = 1 and new_upper = N, {AC8_ELEMENTS} T elements with a non-identity rotation and B = 2 ({in_f} rotation-free samples skipped)"
    ))
}

fn main() -> ExitCode {
    let mut failed = 0;
    let mut report = |id: usize, name: &str, outcome: Outcome| match outcome {
        Ok(detail) => println!("AC{id} PASS {name}: {detail}"),
        Err(why) => {
            failed += 1;
            println!("AC{id} FAIL {name}: {why}");
        }
    };

    let ac1_set = ac1_elements();
    let ac2_set = ac2_elements();
    let ball = CayleyBall::build(BALL_RADIUS, MemoryBudget::default(), Exec::default());

    report(1, "reduction canonicality", ac1(&ac1_set));
    report(2, "cluster invariance", ac2(&ac2_set));
    match &ball {
        Ok(ball) => {
            report(3, "component equivalence", ac3(&ac1_set, &ac2_set, ball));
            report(4, "cluster collapse", ac4());
            report(5, "bound sweep", ac5(ball));
            report(6, "counterexample family", ac6(ball));
        }
        Err(e) => {
            report(3, "component equivalence", Err(e.to_string()));
            report(4, "cluster collapse", ac4());
            report(5, "bound sweep", Err(e.to_string()));
            report(6, "counterexample family", Err(e.to_string()));
        }
    }
    report(7, "round trips", ac7());
    report(8, "specializations", ac8());

    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        println!("{failed} criteria failed");
        ExitCode::FAILURE
    }
}
