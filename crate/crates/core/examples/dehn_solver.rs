// Solves the word problem with Dehn's algorithm and checks the trace.

use zarlab::dehn::solve;
use zarlab::presentation::{relator, Params};
use zarlab::word::Word;

pub fn run() -> zarlab::Result<()> {
    let params = Params::new(8)?;
    let w2 = relator(&params, 2)?;
    let g: Word = "a3 x5'".parse()?;

    // A product of two conjugates of relators.
    let v = g
        .concat(&w2)
        .concat(&g.inverse())
        .concat(&relator(&params, 4)?.rotate(5)?.inverse());
    let sol = solve(&v, &params);
    println!("V = {v}");
    println!("verdict: {}", sol.verdict);
    for line in sol.trace.lines() {
        println!("  {line}");
    }
    sol.trace
        .verify(&v, &params)
        .map_err(zarlab::Error::Presentation)?;
    println!("trace verified");

    for text in ["a9", "x1 x1'", "a1 x2 a1'"] {
        let w: Word = text.parse()?;
        println!("{text:>10} -> {}", solve(&w, &params).verdict);
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> zarlab::Result<()> {
    run()
}
