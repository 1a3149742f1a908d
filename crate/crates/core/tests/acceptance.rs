//! Exit criteria. Run with `cargo test --test acceptance -- --nocapture` to
//! see one PASS/FAIL line per criterion.

use std::time::{Duration, Instant};

use rand::seq::IndexedRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use zarlab::dehn::{is_identity, solve, Verdict};
use zarlab::harness::{
    run_density_suite, run_example_suite, run_lemma_decomposition_suite, run_sc_check,
    run_theorem_check,
};
use zarlab::presentation::{
    check_metric_condition, max_piece_length, symmetrized_family, Lambda, Params,
};
use zarlab::word::{free_reduce, Family, Letter, Sign, Word};
use zarlab::word_maps::{in_subbasic_closed_group, separating_polynomial};

struct Verdicts {
    lines: Vec<String>,
    all_ok: bool,
}

impl Verdicts {
    fn new() -> Self {
        Verdicts {
            lines: Vec::new(),
            all_ok: true,
        }
    }

    fn record(
        &mut self,
        n: u32,
        name: &str,
        ok: bool,
        elapsed: Duration,
        limit: Option<Duration>,
        detail: String,
    ) {
        let in_time = limit.is_none_or(|l| elapsed < l);
        let ok = ok && in_time;
        self.all_ok &= ok;
        let limit = limit.map_or(String::new(), |l| format!(" (limit {} s)", l.as_secs()));
        let line = format!(
            "criterion {n} [{}] {name}: {detail}; {:.2} s{limit}",
            if ok { "PASS" } else { "FAIL" },
            elapsed.as_secs_f64()
        );
        println!("{line}");
        self.lines.push(line);
    }
}

fn k(k: u32) -> Params {
    Params::new(k).unwrap()
}

/// `w_i` spelled out from its text form, independent of the library's builder.
fn relator_from_text(k: u32, i: u32) -> Word {
    let toks: Vec<String> = (1..=k)
        .map(|r| format!("a{r} x{i}{}", if r % 2 == 1 { "'" } else { "" }))
        .collect();
    toks.join(" ").parse().unwrap()
}

fn letters(a_max: u32, x_max: u32) -> Vec<Letter> {
    let mut out = Vec::new();
    for i in 1..=a_max {
        out.push(Letter::new(Family::A, i, Sign::Pos));
        out.push(Letter::new(Family::A, i, Sign::Neg));
    }
    for i in 1..=x_max {
        out.push(Letter::new(Family::X, i, Sign::Pos));
        out.push(Letter::new(Family::X, i, Sign::Neg));
    }
    out
}

fn reduced_word(rng: &mut ChaCha8Rng, len: usize, pool: &[Letter]) -> Word {
    let mut out: Vec<Letter> = Vec::new();
    while out.len() < len {
        let l = *pool.choose(rng).unwrap();
        if out.last().is_some_and(|p| p.is_inverse_of(l)) {
            continue;
        }
        out.push(l);
    }
    free_reduce(out)
}

/// A product of 1..=3 conjugates `g r^{±1} g^{-1}` of rotated relators.
fn conjugate_product(rng: &mut ChaCha8Rng, kk: u32) -> Word {
    let pool = letters(kk + 1, 5);
    let factors = rng.random_range(1..=3);
    let mut acc = Word::empty();
    for _ in 0..factors {
        let i = rng.random_range(1..=5);
        let r = relator_from_text(kk, i);
        let j = rng.random_range(0..r.len());
        let rot: Word = r.letters()[j..]
            .iter()
            .chain(&r.letters()[..j])
            .copied()
            .collect();
        let rot = if rng.random_bool(0.5) {
            rot.inverse()
        } else {
            rot
        };
        let glen = rng.random_range(0..=6);
        let g = reduced_word(rng, glen, &pool);
        acc = acc.concat(&g).concat(&rot).concat(&g.inverse());
    }
    acc
}

fn criterion_1(v: &mut Verdicts) {
    let start = Instant::now();
    let mut ok = true;
    let mut detail = Vec::new();
    for kk in [8u32, 10, 12] {
        let params = k(kk);
        let fam = symmetrized_family(&params, &(1..=20).collect()).unwrap();
        let piece = max_piece_length(&fam).unwrap().length;
        let lengths = fam.words().all(|w| w.len() == 2 * kk as usize);
        let metric = check_metric_condition(&fam, Lambda::new(1, kk as u64).unwrap()).unwrap();
        let report = run_sc_check(&params, 20).unwrap();
        ok &= piece == 1 && lengths && metric && report.ok();
        detail.push(format!(
            "k={kk}: max piece {piece}, lengths 2k {lengths}, C'(1/{kk}) {metric}"
        ));
    }
    v.record(
        1,
        "small cancellation",
        ok,
        start.elapsed(),
        Some(Duration::from_secs(10)),
        detail.join("; "),
    );
}

fn criterion_2(v: &mut Verdicts) {
    let start = Instant::now();
    let params = k(8);
    let c = separating_polynomial(&params);
    let mut members = 0;
    for i in 1..=50 {
        let value = c.eval(&Word::letter(Letter::x(i)));
        let sol = solve(&value, &params);
        if in_subbasic_closed_group(&c, &Word::letter(Letter::x(i)), &params)
            && sol.trace.len() == 1
            && sol.trace.verify(&value, &params).is_ok()
        {
            members += 1;
        }
    }
    let a9_out = !in_subbasic_closed_group(&c, &Word::letter(Letter::a(9)), &params);
    let report = run_theorem_check(&params, 50).unwrap();
    let ok = members == 50 && a9_out && report.ok();
    v.record(
        2,
        "separation witness",
        ok,
        start.elapsed(),
        Some(Duration::from_secs(5)),
        format!("{members}/50 x_i in C with one-step traces, a9 excluded {a9_out}"),
    );
}

fn criterion_3(v: &mut Verdicts) {
    let start = Instant::now();
    let r = run_lemma_decomposition_suite(&k(8), 5, 1000, 42, 40).unwrap();
    let trials = 1000u64;
    let skipped_frac = r.skipped as f64 / trials as f64;
    let ok = r.failed == 0 && skipped_frac < 0.5 && r.checks() == trials + 1;
    v.record(
        3,
        "decomposition lemma suite",
        ok,
        start.elapsed(),
        None,
        format!(
            "passed {} failed {} skipped {} ({:.1}%), {} trials exercised Dehn steps",
            r.passed,
            r.failed,
            r.skipped,
            100.0 * skipped_frac,
            r.stat_u64("trials_with_reductions").unwrap_or(0)
        ),
    );
}

fn criterion_4(v: &mut Verdicts) {
    let start = Instant::now();
    let r = run_density_suite(&k(8), 200, 7).unwrap();
    let junction = r.stat_u64("junction_cancellations");
    let ok = r.failed == 0 && r.checks() == 200 && junction.is_some();
    v.record(
        4,
        "density suite",
        ok,
        start.elapsed(),
        None,
        format!(
            "failed {}, fresh letter escaped {} times, junction cancellations {:?}",
            r.failed,
            r.stat_u64("fresh_letter_escapes").unwrap_or(0),
            junction
        ),
    );
}

fn criterion_5(v: &mut Verdicts) {
    let start = Instant::now();
    let params = k(8);
    let mut rng = ChaCha8Rng::seed_from_u64(5);

    // (a) known-trivial words
    let mut trivial_ok = 0;
    for _ in 0..300 {
        let w = conjugate_product(&mut rng, 8);
        let sol = solve(&w, &params);
        if sol.verdict == Verdict::Identity && sol.trace.verify(&w, &params).is_ok() {
            trivial_ok += 1;
        }
    }

    // (b) short words are nontrivial
    let pool = letters(9, 3);
    let mut short_total = 0u64;
    let mut short_ok = 0u64;
    let mut frontier: Vec<Vec<Letter>> = vec![vec![]];
    for _ in 1..=4 {
        let mut next = Vec::new();
        for w in &frontier {
            for &l in &pool {
                if w.last().is_some_and(|p| p.is_inverse_of(l)) {
                    continue;
                }
                let mut ext = w.clone();
                ext.push(l);
                next.push(ext);
            }
        }
        for w in &next {
            short_total += 1;
            if solve(&free_reduce(w.iter().copied()), &params).verdict == Verdict::Nontrivial {
                short_ok += 1;
            }
        }
        frontier = next;
    }
    for _ in 0..10_000 {
        let len = rng.random_range(5..=8);
        let w = reduced_word(&mut rng, len, &pool);
        short_total += 1;
        if solve(&w, &params).verdict == Verdict::Nontrivial {
            short_ok += 1;
        }
    }

    // (c) conjugation invariance, over a mix of trivial and random words
    let conj_pool = letters(9, 5);
    let mut conj_ok = 0;
    for s in 0..200 {
        let w = if s % 2 == 0 {
            conjugate_product(&mut rng, 8)
        } else {
            let len = rng.random_range(1..=30);
            reduced_word(&mut rng, len, &conj_pool)
        };
        let glen = rng.random_range(0..=6);
        let g = reduced_word(&mut rng, glen, &conj_pool);
        let conj = g.concat(&w).concat(&g.inverse());
        if is_identity(&w, &params).0 == is_identity(&conj, &params).0 {
            conj_ok += 1;
        }
    }

    let ok = trivial_ok == 300 && short_ok == short_total && conj_ok == 200;
    v.record(
        5,
        "Dehn solver soundness/completeness",
        ok,
        start.elapsed(),
        Some(Duration::from_secs(60)),
        format!(
            "(a) {trivial_ok}/300 identity with verified traces; (b) {short_ok}/{short_total} short words nontrivial; (c) {conj_ok}/200 conjugation-invariant"
        ),
    );
}

fn criterion_6(v: &mut Verdicts) {
    let start = Instant::now();
    let r = run_example_suite(500, 11, 50).unwrap();
    // 50 D-membership checks, 1 for (x1, y2), 500 renaming trials, 100 kill points.
    let ok = r.failed == 0 && r.checks() == 50 + 1 + 500 + 100;
    v.record(
        6,
        "semigroup example suite",
        ok,
        start.elapsed(),
        Some(Duration::from_secs(5)),
        format!("passed {} failed {}", r.passed, r.failed),
    );
}

fn criterion_7(v: &mut Verdicts) {
    let start = Instant::now();
    const CASES: usize = 10_000;
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let pool = letters(4, 4);
    let raw = |rng: &mut ChaCha8Rng| -> Vec<Letter> {
        let len = rng.random_range(0..=30);
        (0..len).map(|_| *pool.choose(rng).unwrap()).collect()
    };
    let mut fails = [0usize; 4];
    for _ in 0..CASES {
        let s = raw(&mut rng);
        let once = free_reduce(s.iter().copied());
        if free_reduce(once.letters().iter().copied()) != once {
            fails[0] += 1;
        }
    }
    for _ in 0..CASES {
        let (u, w) = (free_reduce(raw(&mut rng)), free_reduce(raw(&mut rng)));
        if u.concat(&w).inverse() != w.inverse().concat(&u.inverse()) {
            fails[1] += 1;
        }
    }
    for _ in 0..CASES {
        let (a, b, c) = (
            free_reduce(raw(&mut rng)),
            free_reduce(raw(&mut rng)),
            free_reduce(raw(&mut rng)),
        );
        if a.concat(&b).concat(&c) != a.concat(&b.concat(&c)) {
            fails[2] += 1;
        }
    }
    let mut rotations = 0;
    while rotations < CASES {
        let w = free_reduce(raw(&mut rng));
        if w.is_empty() || !w.is_cyclically_reduced() {
            continue;
        }
        rotations += 1;
        let n = w.len();
        let j = rng.random_range(0..n);
        let back = w
            .rotate(j)
            .and_then(|r| if j == 0 { Ok(r) } else { r.rotate(n - j) });
        if back.as_ref() != Ok(&w) {
            fails[3] += 1;
        }
    }
    let ok = fails.iter().all(|&f| f == 0);
    v.record(
        7,
        "word algebra properties",
        ok,
        start.elapsed(),
        None,
        format!(
            "{CASES} cases each; failures: idempotence {}, anti-homomorphism {}, associativity {}, rotation {}",
            fails[0], fails[1], fails[2], fails[3]
        ),
    );
}

#[test]
fn acceptance_criteria() {
    let mut v = Verdicts::new();
    criterion_1(&mut v);
    criterion_2(&mut v);
    criterion_3(&mut v);
    criterion_4(&mut v);
    criterion_5(&mut v);
    criterion_6(&mut v);
    criterion_7(&mut v);
    assert!(v.all_ok, "failing criteria:\n{}", v.lines.join("\n"));
}
