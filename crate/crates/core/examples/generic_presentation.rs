// Loads an arbitrary one-letter-per-generator presentation and runs Dehn's
// algorithm only when the metric condition holds.

use zarlab::dehn::solve;
use zarlab::harness::run_presentation_check;
use zarlab::presentation::{GenericPresentation, Lambda};

const SURFACE: &str = "\
# genus two surface group
generators: a b c d
relator: abABcdCD
";

const TORUS: &str = "\
generators: a b
relator: abAB
";

pub fn run() -> zarlab::Result<()> {
    for text in [SURFACE, TORUS] {
        let pres: GenericPresentation = text.parse()?;
        println!(
            "relators: {:?}",
            pres.relators()
                .iter()
                .map(|r| pres.render(r))
                .collect::<Vec<_>>()
        );
        println!("C'(1/6): {}", pres.is_c_prime_sixth());
        let report = run_presentation_check(&pres, Lambda::new(1, 6)?)?;
        println!("{report}");
        for w in ["abAB", "ab"] {
            let word = pres.parse_word(w)?;
            println!("  {w:>6} -> {}", solve(&word, &pres).verdict);
        }
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> zarlab::Result<()> {
    run()
}
