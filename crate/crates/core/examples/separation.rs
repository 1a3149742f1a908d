// The polynomial that vanishes on every generator x_i but not at a_{k+1}.

use zarlab::dehn::{is_identity, solve};
use zarlab::presentation::Params;
use zarlab::word::{Letter, Word};
use zarlab::word_maps::separating_polynomial;

pub fn run() -> zarlab::Result<()> {
    let params = Params::new(8)?;
    let p = separating_polynomial(&params);
    println!("P(X) = {p}");

    for i in 1..=5 {
        let (trivial, trace) = is_identity(&p.eval(&Word::letter(Letter::x(i))), &params);
        println!("P(x{i}) = 1: {trivial} ({} step)", trace.len());
    }

    let free = Word::letter(params.free_letter());
    let value = p.eval(&free);
    println!("P({free}) = {value}");
    println!("verdict: {}", solve(&value, &params).verdict);
    Ok(())
}

#[allow(dead_code)]
fn main() -> zarlab::Result<()> {
    run()
}
