use std::collections::BTreeSet;

use rand::Rng;

use super::gen::{self, trial_rng, TrialRng};
use super::{Counterexample, Outcome, SuiteReport, Tally};
use crate::dehn::{solve, Verdict};
use crate::error::{Error, Result};
use crate::presentation::{
    check_metric_condition, max_piece_length, relator, symmetrized_family, GenericPresentation,
    Lambda, Params, RelatorSet,
};
use crate::word::{free_reduce, Letter, Word};
use crate::word_maps::{
    difference_word, fresh_index, in_subbasic_closed_semigroup, separating_polynomial,
    SemigroupPolynomial, Term,
};
use crate::zero_monoid::{
    eval_s, kill_generator, project, s_equal, s_mul, Gen, SPolynomial, SWord,
};

/// Smallest fraction of non-skipped trials a randomized suite must reach.
const MIN_EFFECTIVE_FRACTION: f64 = 0.5;

fn effective_fraction_check(tally: &mut Tally, trials: u64, skipped: u64) {
    let effective = (trials - skipped) as f64 / trials as f64;
    tally.stat("effective_fraction", effective);
    tally.record(Outcome::check(effective >= MIN_EFFECTIVE_FRACTION, || {
        Counterexample::new(
            "effective-fraction",
            format!(
                "only {:.1}% of trials met the hypothesis",
                100.0 * effective
            ),
        )
    }));
}

fn require_trials(trials: u64) -> Result<()> {
    if trials == 0 {
        return Err(Error::InvalidParams("trials must be at least 1".into()));
    }
    Ok(())
}

/// Piece analysis of `w_1..w_N`: maximal pieces have length 1, every member
/// has length `2k`, and `C'(1/k)` holds while `C'(1/(2k))` fails under the
/// strict inequality.
pub fn run_sc_check(params: &Params, max_index: u32) -> Result<SuiteReport> {
    sc_check(params, max_index)
}

pub(crate) fn sc_check(params: &Params, max_index: u32) -> Result<SuiteReport> {
    if max_index == 0 {
        return Err(Error::InvalidParams("max index must be at least 1".into()));
    }
    let k = params.k();
    let mut tally = Tally::new("sc-check", false);
    tally.param("k", k);
    tally.param("max_index", max_index);

    let indices: BTreeSet<u32> = (1..=max_index).collect();
    let family = symmetrized_family(params, &indices)?;
    let expected = 4 * k as usize * max_index as usize;
    tally.stat("members", family.len());
    tally.record(Outcome::check(family.len() == expected, || {
        Counterexample::new(
            "members-per-index",
            format!("{} members, expected {expected}", family.len()),
        )
    }));

    let bad_len = family.words().find(|w| w.len() != params.relator_len());
    tally.record(Outcome::check(bad_len.is_none(), || {
        Counterexample::new("member-length", "member of the wrong length")
            .input("member", bad_len.unwrap())
    }));

    let not_closed = family.words().find(|w| {
        !family.contains(&w.inverse())
            || (0..w.len()).any(|j| !w.rotate(j).is_ok_and(|r| family.contains(&r)))
    });
    tally.record(Outcome::check(not_closed.is_none(), || {
        Counterexample::new("symmetrized", "closure under inversion/rotation fails")
            .input("member", not_closed.unwrap())
    }));

    let piece = max_piece_length(&family)?;
    tally.stat("max_piece", piece.length);
    tally.stat(
        "piece_witness",
        format!("{} | {}", piece.witness.0, piece.witness.1),
    );
    tally.record(Outcome::check(piece.length == 1, || {
        Counterexample::new(
            "max-piece",
            format!("longest piece has length {}", piece.length),
        )
        .input("first", &piece.witness.0)
        .input("second", &piece.witness.1)
    }));

    let one_over_k = Lambda::new(1, k as u64)?;
    let holds = check_metric_condition(&family, one_over_k)?;
    tally.stat("c_prime_1_over_k", holds);
    tally.record(Outcome::check(holds, || {
        Counterexample::new("c-prime-1/k", "C'(1/k) does not hold")
    }));

    let one_over_2k = Lambda::new(1, 2 * k as u64)?;
    let strict = check_metric_condition(&family, one_over_2k)?;
    tally.stat("c_prime_1_over_2k_strict", strict);
    tally.record(Outcome::check(!strict, || {
        Counterexample::new(
            "c-prime-1/2k",
            "strict C'(1/(2k)) unexpectedly holds with pieces of length 1",
        )
    }));
    Ok(tally.finish())
}

/// `C'(λ)` for a loaded presentation.
pub fn run_presentation_check(pres: &GenericPresentation, lambda: Lambda) -> Result<SuiteReport> {
    let mut tally = Tally::new("sc-check", false);
    tally.param("lambda", lambda.to_string());
    tally.param("relators", pres.relators().len());
    let piece = max_piece_length(pres)?;
    tally.stat("members", pres.members().len());
    tally.stat("max_piece", piece.length);
    tally.stat(
        "piece_witness",
        format!(
            "{} | {}",
            pres.render(&piece.witness.0),
            pres.render(&piece.witness.1)
        ),
    );
    tally.stat("c_prime_1_over_6", pres.is_c_prime_sixth());
    let holds = check_metric_condition(pres, lambda)?;
    tally.record(Outcome::check(holds, || {
        Counterexample::new("c-prime", format!("C'({lambda}) fails"))
            .input("first", pres.render(&piece.witness.0))
            .input("second", pres.render(&piece.witness.1))
    }));
    Ok(tally.finish())
}

/// Every `x_i` (i ≤ N) lies in the zero set of the separating polynomial,
/// each closing in one Dehn step, while `a_{k+1}` does not.
pub fn run_theorem_check(params: &Params, max_index: u32) -> Result<SuiteReport> {
    theorem_check(params, max_index)
}

pub(crate) fn theorem_check(params: &Params, max_index: u32) -> Result<SuiteReport> {
    if max_index == 0 {
        return Err(Error::InvalidParams("max index must be at least 1".into()));
    }
    let mut tally = Tally::new("theorem", false);
    tally.param("k", params.k());
    tally.param("max_index", max_index);
    let c = separating_polynomial(params);
    tally.stat("polynomial", c.to_string());

    let mut members = 0u64;
    for i in 1..=max_index {
        let x = Word::letter(Letter::x(i));
        let value = c.eval(&x);
        let sol = solve(&value, params);
        let ok = value == relator(params, i)?
            && sol.verdict == Verdict::Identity
            && sol.trace.len() == 1
            && sol.trace.verify(&value, params).is_ok();
        if ok {
            members += 1;
        }
        tally.record(Outcome::check(ok, || {
            Counterexample::new(
                "x_i-in-C",
                format!(
                    "x_{i}: verdict {}, trace length {}",
                    sol.verdict,
                    sol.trace.len()
                ),
            )
            .input("value", &value)
            .trace(sol.trace.lines())
        }));
    }
    tally.stat("members_in_C", members);

    let free = Word::letter(params.free_letter());
    let value = c.eval(&free);
    let sol = solve(&value, params);
    tally.stat("free_letter_verdict", sol.verdict.to_string());
    tally.record(Outcome::check(sol.verdict == Verdict::Nontrivial, || {
        Counterexample::new("a_k+1-not-in-C", format!("verdict {}", sol.verdict))
            .input("value", &value)
    }));
    Ok(tally.finish())
}

/// One instance of the decomposition lemma: `V = V⁺V⁻` with `V⁺` positive
/// and `V⁻` negative in `x_m`. Skipped unless `x_m` survives reduction.
pub fn decomposition_trial(params: &Params, m: u32, plus: &Word, minus: &Word) -> (Outcome, usize) {
    let v = plus.concat(minus);
    if !plus.polarity(m).positive || !minus.polarity(m).negative {
        return (
            Outcome::Fail(Box::new(
                Counterexample::new("decomposition", "generated halves have the wrong polarity")
                    .input("V+", plus)
                    .input("V-", minus),
            )),
            0,
        );
    }
    if v.is_empty() || !v.contains_x(m) {
        return (Outcome::Skip, 0);
    }
    let sol = solve(&v, params);
    let verified = sol.trace.verify(&v, params);
    let ok = sol.verdict == Verdict::Nontrivial && verified.is_ok();
    let steps = sol.trace.len();
    let outcome = Outcome::check(ok, || {
        Counterexample::new(
            "decomposition",
            match verified {
                Err(e) => format!("trace does not verify: {e}"),
                Ok(()) => format!("verdict {}", sol.verdict),
            },
        )
        .input("V+", plus)
        .input("V-", minus)
        .input("V", &v)
        .trace(sol.trace.lines())
    });
    (outcome, steps)
}

/// Random reduced word with `x_m` restricted to one sign; with probability
/// one half a long initial segment of a relator of another index is spliced
/// in, so the solver has real reductions to perform.
fn polar_word(
    rng: &mut TrialRng,
    params: &Params,
    pool: &[Letter],
    others: &[u32],
    len: usize,
) -> Word {
    let w = gen::random_word(rng, len, pool);
    if !rng.random_bool(0.5) {
        return w;
    }
    let o = others[rng.random_range(0..others.len())];
    let member = gen::random_member(rng, params, o);
    let seg_len = rng.random_range(params.k() as usize + 1..=params.relator_len());
    let at = rng.random_range(0..=w.len());
    let letters = w.letters();
    free_reduce(
        letters[..at]
            .iter()
            .chain(&member.letters()[..seg_len])
            .chain(&letters[at..])
            .copied(),
    )
}

pub fn run_lemma_decomposition_suite(
    params: &Params,
    m: u32,
    trials: u64,
    seed: u64,
    max_len: usize,
) -> Result<SuiteReport> {
    lemma_decomposition(params, m, trials, seed, max_len, true)
}

pub(crate) fn lemma_decomposition(
    params: &Params,
    m: u32,
    trials: u64,
    seed: u64,
    max_len: usize,
    parallel: bool,
) -> Result<SuiteReport> {
    require_trials(trials)?;
    if m == 0 || max_len == 0 {
        return Err(Error::InvalidParams(
            "m and max_len must be at least 1".into(),
        ));
    }
    let mut tally = Tally::new("lemma-decomposition", parallel);
    tally.param("k", params.k());
    tally.param("m", m);
    tally.param("trials", trials);
    tally.param("seed", seed);
    tally.param("max_len", max_len as u64);

    let others: Vec<u32> = (1..).filter(|&i| i != m).take(2).collect();
    let mut base = gen::a_letters(params.k() + 1);
    base.extend(gen::x_letters(others.iter().copied()));
    let mut plus_pool = base.clone();
    plus_pool.push(Letter::x(m));
    let mut minus_pool = base;
    minus_pool.push(Letter::x(m).inverse());

    let steps = tally.trials(trials, |t| {
        let mut rng = trial_rng(seed, t);
        let l1 = rng.random_range(1..=max_len);
        let l2 = rng.random_range(1..=max_len);
        let plus = polar_word(&mut rng, params, &plus_pool, &others, l1);
        let minus = polar_word(&mut rng, params, &minus_pool, &others, l2);
        decomposition_trial(params, m, &plus, &minus)
    });
    let skipped = tally.report.skipped;
    tally.stat(
        "trials_with_reductions",
        steps.iter().filter(|&&s| s > 0).count(),
    );
    tally.stat("dehn_steps_total", steps.iter().sum::<usize>());
    effective_fraction_check(&mut tally, trials, skipped);
    Ok(tally.finish())
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct DensityInfo {
    pub fresh: u32,
    /// `P(x_m) = Q(x_m)` in the group.
    pub closed: bool,
    /// `x_m` vanished from the reduced `P(x_m)·Q(x_m)^{-1}`.
    pub junction_cancelled: bool,
}

/// For a fresh index `m`, decides whether `x_m` lies in `{x : P(x) = Q(x)}`.
/// When it does, the equation must also hold at further fresh letters and at
/// random group elements.
pub fn density_trial(
    params: &Params,
    p: &SemigroupPolynomial,
    q: &SemigroupPolynomial,
    rng: &mut TrialRng,
) -> (Outcome, DensityInfo) {
    let m = fresh_index([p.as_group(), q.as_group()]);
    let xm = Word::letter(Letter::x(m));
    let v = difference_word(p, q, &xm);
    let sol = solve(&v, params);
    let info = DensityInfo {
        fresh: m,
        closed: sol.verdict == Verdict::Identity,
        junction_cancelled: !v.contains_x(m),
    };
    let fail = |detail: String| {
        Outcome::Fail(Box::new(
            Counterexample::new("density", detail)
                .input("P", p)
                .input("Q", q)
                .input("m", m)
                .input("V", &v)
                .trace(sol.trace.lines()),
        ))
    };
    if let Err(e) = sol.trace.verify(&v, params) {
        return (fail(format!("trace does not verify: {e}")), info);
    }
    if !info.closed {
        return (Outcome::Pass, info);
    }
    if v.contains_x(m) {
        return (
            fail("a difference word containing x_m reduced to 1".into()),
            info,
        );
    }
    for t in 1..=5 {
        let x = Word::letter(Letter::x(m + t));
        if !in_subbasic_closed_semigroup(p, q, &x, params) {
            return (fail(format!("P = Q at x_{m} but not at x_{}", m + t)), info);
        }
    }
    let mut pool = gen::a_letters(params.k() + 1);
    pool.extend(gen::x_letters(1..=m + 5));
    for _ in 0..5 {
        let len = rng.random_range(0..=6);
        let g = gen::random_word(rng, len, &pool);
        if !in_subbasic_closed_semigroup(p, q, &g, params) {
            return (fail(format!("P = Q at x_{m} but not at {g}")), info);
        }
    }
    (Outcome::Pass, info)
}

/// `Q` agreeing with `P` as a map: the leading coefficient is multiplied by
/// a conjugate of a relator.
fn twin(
    rng: &mut TrialRng,
    params: &Params,
    p: &SemigroupPolynomial,
    pool: &[Letter],
) -> SemigroupPolynomial {
    let glen = rng.random_range(0..=3);
    let g = gen::random_word(rng, glen, pool);
    let i = rng.random_range(1..=4);
    let r = gen::random_member(rng, params, i);
    let factor = g.concat(&r).concat(&g.inverse());
    let mut terms = p.as_group().terms();
    if let Some(Term::Coef(head)) = terms.first_mut() {
        *head = head.concat(&factor);
    }
    SemigroupPolynomial::normalize(terms).expect("exponents stay positive")
}

pub fn run_density_suite(params: &Params, trials: u64, seed: u64) -> Result<SuiteReport> {
    density(params, trials, seed, true)
}

pub(crate) fn density(
    params: &Params,
    trials: u64,
    seed: u64,
    parallel: bool,
) -> Result<SuiteReport> {
    require_trials(trials)?;
    let mut tally = Tally::new("density", parallel);
    tally.param("k", params.k());
    tally.param("trials", trials);
    tally.param("seed", seed);
    let pool = gen::coefficient_pool(params);

    let infos = tally.trials(trials, |t| {
        let mut rng = trial_rng(seed, t);
        let p = gen::random_semigroup_polynomial(&mut rng, &pool);
        let q = if rng.random_bool(0.25) {
            twin(&mut rng, params, &p, &pool)
        } else {
            gen::random_semigroup_polynomial(&mut rng, &pool)
        };
        density_trial(params, &p, &q, &mut rng)
    });
    let closed = infos.iter().filter(|i| i.closed).count();
    tally.stat("fresh_letter_escapes", infos.len() - closed);
    tally.stat("fresh_letter_in_closed_set", closed);
    tally.stat(
        "junction_cancellations",
        infos.iter().filter(|i| i.junction_cancelled).count(),
    );
    Ok(tally.finish())
}

fn sw_gen(g: Gen) -> SWord {
    SWord::gen(g)
}

/// Equality at `x_i` versus `x_j` (and `y_i` versus `y_j`) for indices
/// above every coefficient; at a fresh `x_i` equality must also coincide
/// with equality of the normal forms.
pub fn renaming_trial(p: &SPolynomial, q: &SPolynomial, i: u32, j: u32) -> Outcome {
    let eq_at = |s: &SWord| s_equal(&eval_s(p, s), &eval_s(q, s));
    let (xi, xj) = (eq_at(&sw_gen(Gen::X(i))), eq_at(&sw_gen(Gen::X(j))));
    let (yi, yj) = (eq_at(&sw_gen(Gen::Y(i))), eq_at(&sw_gen(Gen::Y(j))));
    let formal = p == q;
    let detail = if xi != xj {
        Some(format!("P = Q at x_{i} is {xi} but at x_{j} is {xj}"))
    } else if yi != yj {
        Some(format!("P = Q at y_{i} is {yi} but at y_{j} is {yj}"))
    } else if xi != formal {
        Some(format!(
            "P = Q at x_{i} is {xi} but formal equality is {formal}"
        ))
    } else {
        None
    };
    match detail {
        None => Outcome::Pass,
        Some(d) => Outcome::Fail(Box::new(
            Counterexample::new("renaming", d)
                .input("P", p)
                .input("Q", q),
        )),
    }
}

/// Evaluating then projecting to `S / ⟨⟨y_i⟩⟩` agrees with evaluating the
/// projected polynomial at the projected point.
pub fn kill_trial(p: &SPolynomial, s: &SWord, i: u32) -> Outcome {
    let lhs = project(&eval_s(p, s), i);
    let killed = kill_generator(p, i);
    let rhs = project(&eval_s(&killed, &project(s, i)), i);
    Outcome::check(s_equal(&lhs, &rhs), || {
        Counterexample::new("kill-generator", format!("{lhs} != {rhs}"))
            .input("P", p)
            .input("s", s)
            .input("i", i)
    })
}

pub fn run_example_suite(trials: u64, seed: u64, max_index: u32) -> Result<SuiteReport> {
    example(trials, seed, max_index, true)
}

pub(crate) fn example(
    trials: u64,
    seed: u64,
    max_index: u32,
    parallel: bool,
) -> Result<SuiteReport> {
    require_trials(trials)?;
    let mut tally = Tally::new("sgp-example", parallel);
    tally.param("trials", trials);
    tally.param("seed", seed);
    tally.param("max_index", max_index);

    for i in 1..=max_index {
        let prod = s_mul(&sw_gen(Gen::X(i)), &sw_gen(Gen::Y(i)));
        tally.record(Outcome::check(prod.is_zero(), || {
            Counterexample::new("D-membership", format!("x_{i} y_{i} = {prod}"))
        }));
    }
    let prod = s_mul(&sw_gen(Gen::X(1)), &sw_gen(Gen::Y(2)));
    tally.record(Outcome::check(!prod.is_zero(), || {
        Counterexample::new("x1-y2-not-in-D", "x1 y2 = 0")
    }));

    const POLY_INDEX: u32 = 4;
    let formal_equal = tally.trials(trials, |t| {
        let mut rng = trial_rng(seed, t);
        let p = gen::random_spolynomial(&mut rng, POLY_INDEX);
        let q = if rng.random_bool(0.25) {
            p.clone()
        } else {
            gen::random_spolynomial(&mut rng, POLY_INDEX)
        };
        let top = p
            .max_index()
            .into_iter()
            .chain(q.max_index())
            .max()
            .unwrap_or(0);
        let i = top + 1;
        let j = i + rng.random_range(1..=5);
        (renaming_trial(&p, &q, i, j), p == q)
    });
    tally.stat(
        "renaming_trials_formally_equal",
        formal_equal.iter().filter(|&&e| e).count(),
    );

    const KILL_POINTS: u64 = 100;
    tally.trials(KILL_POINTS, |t| {
        let mut rng = trial_rng(!seed, t);
        let p = gen::random_spolynomial(&mut rng, POLY_INDEX);
        let s = gen::random_sword(&mut rng, POLY_INDEX + 1);
        let i = rng.random_range(1..=POLY_INDEX);
        (kill_trial(&p, &s, i), ())
    });
    tally.stat("kill_generator_points", KILL_POINTS);
    Ok(tally.finish())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::word::word;

    fn k8() -> Params {
        Params::new(8).unwrap()
    }

    #[test]
    fn decomposition_examples() {
        let (o, _) = decomposition_trial(&k8(), 5, &word("a1 x5 a2"), &word("a3 x5'"));
        assert_eq!(o, Outcome::Pass);
        let (o, _) = decomposition_trial(&k8(), 5, &word("x5"), &word("x5'"));
        assert_eq!(o, Outcome::Skip);
        let (o, _) = decomposition_trial(&k8(), 5, &word("x5'"), &word("a1"));
        assert!(matches!(o, Outcome::Fail(_)));
    }

    #[test]
    fn density_example() {
        let p: SemigroupPolynomial = "X a1 X".parse().unwrap();
        let q: SemigroupPolynomial = "a2 X^2".parse().unwrap();
        let (o, info) = density_trial(&k8(), &p, &q, &mut trial_rng(0, 0));
        assert_eq!(o, Outcome::Pass);
        assert_eq!(
            info,
            DensityInfo {
                fresh: 1,
                closed: false,
                junction_cancelled: false
            }
        );
        let (o, info) = density_trial(&k8(), &p, &p, &mut trial_rng(0, 0));
        assert_eq!(o, Outcome::Pass);
        assert!(info.closed && info.junction_cancelled);
    }

    #[test]
    fn invalid_suite_params() {
        assert!(run_sc_check(&k8(), 0).is_err());
        assert!(run_lemma_decomposition_suite(&k8(), 5, 0, 1, 10).is_err());
        assert!(run_density_suite(&k8(), 0, 1).is_err());
        assert!(Params::new(7).is_err());
    }

    #[test]
    fn small_runs_pass() {
        let r = run_sc_check(&Params::new(10).unwrap(), 10).unwrap();
        assert!(r.ok(), "{r}");
        assert_eq!(r.stat_u64("max_piece"), Some(1));
        let r = run_theorem_check(&Params::new(12).unwrap(), 10).unwrap();
        assert!(r.ok(), "{r}");
        assert_eq!(r.passed, 11);
    }
}
