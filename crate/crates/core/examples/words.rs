// Free-group words: parsing, reduction, inverses and polarity.

use zarlab::word::{Letter, Word};

pub fn run() -> zarlab::Result<()> {
    let w: Word = "a1 x3' a2 x3".parse()?;
    println!("w        = {w}");
    println!("w^-1     = {}", w.inverse());
    println!("w w^-1   = {}", w.concat(&w.inverse()));
    println!("w^3      = {}", w.pow(3));

    let u: Word = "x2 a1".parse()?;
    let v = u.concat(&"a1' x2 x2".parse()?);
    println!("{u} . a1' x2 x2 = {v}");

    for text in ["x3 a1 x3", "a2 x3'", "a1 x3' a2 x3"] {
        let pol = text.parse::<Word>()?.polarity(3);
        println!(
            "{text:>14}: positive in x3 {}, negative in x3 {}",
            pol.positive, pol.negative
        );
    }
    println!("rotation by 1: {}", w.rotate(1)?);
    println!("single letter: {}", Word::letter(Letter::x(7).inverse()));

    match "a1 x0".parse::<Word>() {
        Ok(_) => unreachable!("index 0 is rejected"),
        Err(e) => println!("parse error: {e}"),
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> zarlab::Result<()> {
    run()
}
