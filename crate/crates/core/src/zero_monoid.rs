//! The monomial semigroup `S = ⟨x_1, x_2, …, y_1, y_2, … | x_i y_i = 0⟩`.
//!
//! The only relations send words to zero, so a nonzero element is exactly a
//! word with no factor `x_i y_i`, and equality is syntactic.
//!
//! Text form: `x<n>` / `y<n>` tokens separated by spaces, or the single token
//! `0`. Polynomials use the same tokens plus `X` / `X^<n>` with `n ≥ 0`.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum Gen {
    X(u32),
    Y(u32),
}

impl Gen {
    pub fn index(self) -> u32 {
        match self {
            Gen::X(i) | Gen::Y(i) => i,
        }
    }
}

impl fmt::Display for Gen {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Gen::X(i) => write!(f, "x{i}"),
            Gen::Y(i) => write!(f, "y{i}"),
        }
    }
}

fn parse_gen(tok: &str, pos: usize) -> Result<Gen> {
    let (ctor, digits): (fn(u32) -> Gen, &str) = if let Some(d) = tok.strip_prefix('x') {
        (Gen::X, d)
    } else if let Some(d) = tok.strip_prefix('y') {
        (Gen::Y, d)
    } else {
        return Err(Error::parse(
            pos,
            format!("expected x<n>, y<n> or 0, got {tok:?}"),
        ));
    };
    if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
        return Err(Error::parse(pos, format!("bad generator index in {tok:?}")));
    }
    match digits.parse::<u32>() {
        Ok(i) if i >= 1 => Ok(ctor(i)),
        _ => Err(Error::parse(pos, format!("bad generator index in {tok:?}"))),
    }
}

/// An element of `S`: zero, or a nonempty word with no factor `x_i y_i`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum SWord {
    Zero,
    Word(Vec<Gen>),
}

fn has_zero_factor(gens: &[Gen]) -> bool {
    gens.windows(2)
        .any(|p| matches!((p[0], p[1]), (Gen::X(i), Gen::Y(j)) if i == j))
}

/// Rewrites to zero iff some factor `x_i y_i` occurs.
pub fn s_normalize(raw: Vec<Gen>) -> Result<SWord> {
    if raw.is_empty() {
        return Err(Error::EmptySemigroupWord);
    }
    Ok(if has_zero_factor(&raw) {
        SWord::Zero
    } else {
        SWord::Word(raw)
    })
}

pub fn s_mul(u: &SWord, v: &SWord) -> SWord {
    match (u, v) {
        (SWord::Word(a), SWord::Word(b)) => {
            let joined: Vec<Gen> = a.iter().chain(b).copied().collect();
            if has_zero_factor(&joined) {
                SWord::Zero
            } else {
                SWord::Word(joined)
            }
        }
        _ => SWord::Zero,
    }
}

pub fn s_equal(u: &SWord, v: &SWord) -> bool {
    u == v
}

impl SWord {
    pub fn gen(g: Gen) -> Self {
        SWord::Word(vec![g])
    }

    pub fn is_zero(&self) -> bool {
        matches!(self, SWord::Zero)
    }

    pub fn contains(&self, g: Gen) -> bool {
        match self {
            SWord::Zero => false,
            SWord::Word(w) => w.contains(&g),
        }
    }

    pub fn max_index(&self) -> Option<u32> {
        match self {
            SWord::Zero => None,
            SWord::Word(w) => w.iter().map(|g| g.index()).max(),
        }
    }

    /// `None` for `e = 0`: there is no identity.
    pub fn pow(&self, e: u32) -> Option<SWord> {
        if e == 0 {
            return None;
        }
        Some((1..e).fold(self.clone(), |acc, _| s_mul(&acc, self)))
    }
}

/// Image in the quotient `S / ⟨⟨y_i⟩⟩`, where `y_i` is also sent to zero.
pub fn project(s: &SWord, i: u32) -> SWord {
    if s.contains(Gen::Y(i)) {
        SWord::Zero
    } else {
        s.clone()
    }
}

impl fmt::Display for SWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SWord::Zero => f.write_str("0"),
            SWord::Word(w) => {
                let toks: Vec<String> = w.iter().map(|g| g.to_string()).collect();
                f.write_str(&toks.join(" "))
            }
        }
    }
}

impl FromStr for SWord {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        if s == "0" {
            return Ok(SWord::Zero);
        }
        if s.is_empty() {
            return Err(Error::EmptySemigroupWord);
        }
        let mut raw = Vec::new();
        for (pos, tok) in s.split(' ').enumerate() {
            if tok == "0" {
                return Err(Error::parse(pos, "\"0\" is only valid as the whole word"));
            }
            raw.push(parse_gen(tok, pos)?);
        }
        s_normalize(raw)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum STerm {
    Coef(SWord),
    Var(u32),
}

/// An element of `S * ⟨x⟩⁺`, normalized: coefficients and powers alternate,
/// exponents are positive, and any zero coefficient collapses the whole
/// polynomial to the constant zero.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct SPolynomial {
    terms: Vec<STerm>,
}

impl SPolynomial {
    pub fn normalize<I: IntoIterator<Item = STerm>>(raw: I) -> Result<Self> {
        let mut terms: Vec<STerm> = Vec::new();
        for t in raw {
            match t {
                STerm::Var(0) => {}
                STerm::Var(e) => match terms.last_mut() {
                    Some(STerm::Var(last)) => *last += e,
                    _ => terms.push(STerm::Var(e)),
                },
                STerm::Coef(c) => match terms.last_mut() {
                    Some(STerm::Coef(last)) => *last = s_mul(last, &c),
                    _ => terms.push(STerm::Coef(c)),
                },
            }
        }
        if terms.is_empty() {
            return Err(Error::EmptySemigroupWord);
        }
        if terms.iter().any(|t| matches!(t, STerm::Coef(SWord::Zero))) {
            terms = vec![STerm::Coef(SWord::Zero)];
        }
        Ok(SPolynomial { terms })
    }

    pub fn constant(s: SWord) -> Self {
        SPolynomial {
            terms: vec![STerm::Coef(s)],
        }
    }

    pub fn variable() -> Self {
        SPolynomial {
            terms: vec![STerm::Var(1)],
        }
    }

    pub fn terms(&self) -> &[STerm] {
        &self.terms
    }

    pub fn is_constant(&self) -> bool {
        !self.terms.iter().any(|t| matches!(t, STerm::Var(_)))
    }

    pub fn is_zero(&self) -> bool {
        self.terms == [STerm::Coef(SWord::Zero)]
    }

    pub fn coefficients(&self) -> impl Iterator<Item = &SWord> {
        self.terms.iter().filter_map(|t| match t {
            STerm::Coef(c) => Some(c),
            STerm::Var(_) => None,
        })
    }

    pub fn max_index(&self) -> Option<u32> {
        self.coefficients().filter_map(|c| c.max_index()).max()
    }

    pub fn mul(&self, other: &SPolynomial) -> SPolynomial {
        SPolynomial::normalize(self.terms.iter().chain(&other.terms).cloned())
            .expect("product of nonempty polynomials is nonempty")
    }
}

pub fn eval_s(p: &SPolynomial, s: &SWord) -> SWord {
    let mut acc: Option<SWord> = None;
    for t in &p.terms {
        let factor = match t {
            STerm::Coef(c) => c.clone(),
            STerm::Var(e) => s.pow(*e).expect("normalized exponents are positive"),
        };
        acc = Some(match acc {
            None => factor,
            Some(a) => s_mul(&a, &factor),
        });
    }
    acc.expect("normalized polynomials are nonempty")
}

/// Pushes `p` into `S̄[x]` with `S̄ = S / ⟨⟨y_i⟩⟩`.
pub fn kill_generator(p: &SPolynomial, i: u32) -> SPolynomial {
    SPolynomial::normalize(p.terms.iter().map(|t| match t {
        STerm::Coef(c) => STerm::Coef(project(c, i)),
        STerm::Var(e) => STerm::Var(*e),
    }))
    .expect("projection keeps polynomials nonempty")
}

impl fmt::Display for SPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let toks: Vec<String> = self
            .terms
            .iter()
            .map(|t| match t {
                STerm::Coef(c) => c.to_string(),
                STerm::Var(1) => "X".to_string(),
                STerm::Var(e) => format!("X^{e}"),
            })
            .collect();
        f.write_str(&toks.join(" "))
    }
}

impl FromStr for SPolynomial {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        if s.is_empty() {
            return Err(Error::EmptySemigroupWord);
        }
        let mut raw = Vec::new();
        for (pos, tok) in s.split(' ').enumerate() {
            if tok.is_empty() {
                return Err(Error::parse(
                    pos,
                    "tokens must be separated by single spaces",
                ));
            }
            let term = if tok == "0" {
                STerm::Coef(SWord::Zero)
            } else if let Some(rest) = tok.strip_prefix('X') {
                let e: i64 = match rest.strip_prefix('^') {
                    None if rest.is_empty() => 1,
                    Some(num) => num
                        .parse()
                        .map_err(|_| Error::parse(pos, format!("bad exponent in {tok:?}")))?,
                    _ => return Err(Error::parse(pos, format!("bad variable token {tok:?}"))),
                };
                if e < 0 {
                    return Err(Error::parse(
                        pos,
                        "negative exponent in a semigroup polynomial",
                    ));
                }
                STerm::Var(u32::try_from(e).map_err(|_| Error::parse(pos, "exponent too large"))?)
            } else {
                STerm::Coef(SWord::gen(parse_gen(tok, pos)?))
            };
            raw.push(term);
        }
        SPolynomial::normalize(raw)
    }
}
