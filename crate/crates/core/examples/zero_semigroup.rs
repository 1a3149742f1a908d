// The semigroup with x_i y_i = 0: multiplication, projections and the
// renaming checks.

use zarlab::harness::{Suite, SuiteConfig};
use zarlab::zero_monoid::{eval_s, kill_generator, project, s_mul, Gen, SPolynomial, SWord};

pub fn run() -> zarlab::Result<()> {
    let u: SWord = "x1 y2".parse()?;
    let v: SWord = "y1 x3".parse()?;
    println!("({u}) ({v}) = {}", s_mul(&u, &v));
    println!("({v}) ({u}) = {}", s_mul(&v, &u));
    println!("project(x1 y2, 2) = {}", project(&u, 2));

    let p: SPolynomial = "x1 X y1".parse()?;
    for g in [Gen::X(1), Gen::Y(1), Gen::X(5)] {
        println!("P({g}) = {}", eval_s(&p, &SWord::gen(g)));
    }
    println!("P with y1 killed: {}", kill_generator(&p, 1));

    let report = SuiteConfig {
        trials: 100,
        seed: 3,
        max_index: 10,
        ..SuiteConfig::new(Suite::SemigroupExample)
    }
    .run()?;
    println!("{report}");
    Ok(())
}

#[allow(dead_code)]
fn main() -> zarlab::Result<()> {
    run()
}
