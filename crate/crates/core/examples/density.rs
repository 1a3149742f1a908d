// Positive equations P(x) = Q(x) tested at a fresh generator, then the
// seeded trial suites behind it.

use zarlab::dehn::solve;
use zarlab::harness::{decomposition_trial, Suite, SuiteConfig};
use zarlab::presentation::Params;
use zarlab::word::{Letter, Word};
use zarlab::word_maps::{difference_word, fresh_index, SemigroupPolynomial};

pub fn run() -> zarlab::Result<()> {
    let params = Params::new(8)?;
    let p: SemigroupPolynomial = "a1 X a2 X^2".parse()?;
    let q: SemigroupPolynomial = "a1 X a3".parse()?;
    let m = fresh_index([p.as_group(), q.as_group()]);
    let xm = Word::letter(Letter::x(m));
    let v = difference_word(&p, &q, &xm);
    println!("P = {p}, Q = {q}, fresh x{m}");
    println!("P(x{m}) Q(x{m})^-1 = {v}: {}", solve(&v, &params).verdict);

    let (outcome, steps) = decomposition_trial(&params, m, &p.eval(&xm), &q.eval(&xm).inverse());
    println!("decomposition trial: {outcome:?} after {steps} Dehn steps");

    for suite in [Suite::LemmaDecomposition, Suite::Density] {
        let report = SuiteConfig {
            trials: 100,
            seed: 7,
            ..SuiteConfig::new(suite)
        }
        .run()?;
        println!("{report}");
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> zarlab::Result<()> {
    run()
}
