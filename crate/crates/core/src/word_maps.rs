//! One-variable word maps over `Γ(k)`: elements of `Γ * ⟨x⟩` and of the
//! positive part `Γ * ⟨x⟩⁺`, with evaluation and membership in the
//! sub-basic closed sets `{x : W(x) = 1}` and `{x : P(x) = Q(x)}`.
//!
//! Text form: space-separated tokens, coefficient letters in the word
//! grammar and the variable written `X` or `X^<n>`, e.g.
//! `a1 X^-1 a2 X a3 X^-1 a4 X a5 X^-1 a6 X a7 X^-1 a8 X`.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::dehn::{equal_in_group, is_identity, RelatorSource};
use crate::error::{Error, Result};
use crate::presentation::Params;
use crate::word::{free_reduce, parse_letter, Letter, Word};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Term {
    Coef(Word),
    Var(i64),
}

/// `g_0 x^{i_1} g_1 … x^{i_n} g_n` in normal form: no zero exponents, and no
/// two powers of `x` separated by an empty coefficient.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct GroupPolynomial {
    head: Word,
    body: Vec<(i64, Word)>,
}

impl GroupPolynomial {
    pub fn normalize<I: IntoIterator<Item = Term>>(terms: I) -> Self {
        let mut p = GroupPolynomial::default();
        for t in terms {
            match t {
                Term::Coef(w) => {
                    let slot = match p.body.last_mut() {
                        Some((_, c)) => c,
                        None => &mut p.head,
                    };
                    *slot = slot.concat(&w);
                }
                Term::Var(0) => {}
                Term::Var(e) => match p.body.last_mut() {
                    Some((last, c)) if c.is_empty() => {
                        *last += e;
                        if *last == 0 {
                            p.body.pop();
                        }
                    }
                    _ => p.body.push((e, Word::empty())),
                },
            }
        }
        p
    }

    pub fn constant(w: Word) -> Self {
        GroupPolynomial {
            head: w,
            body: Vec::new(),
        }
    }

    /// The identity map `x ↦ x`.
    pub fn variable() -> Self {
        GroupPolynomial {
            head: Word::empty(),
            body: vec![(1, Word::empty())],
        }
    }

    pub fn head(&self) -> &Word {
        &self.head
    }

    pub fn body(&self) -> &[(i64, Word)] {
        &self.body
    }

    pub fn is_constant(&self) -> bool {
        self.body.is_empty()
    }

    pub fn terms(&self) -> Vec<Term> {
        let mut out = vec![Term::Coef(self.head.clone())];
        for (e, c) in &self.body {
            out.push(Term::Var(*e));
            out.push(Term::Coef(c.clone()));
        }
        out
    }

    pub fn coefficients(&self) -> impl Iterator<Item = &Word> {
        std::iter::once(&self.head).chain(self.body.iter().map(|(_, c)| c))
    }

    pub fn mul(&self, other: &GroupPolynomial) -> GroupPolynomial {
        GroupPolynomial::normalize(self.terms().into_iter().chain(other.terms()))
    }

    pub fn eval(&self, x: &Word) -> Word {
        let mut acc = self.head.clone();
        for (e, c) in &self.body {
            acc = acc.concat(&x.pow(*e)).concat(c);
        }
        acc
    }

    pub fn coefficient_indices(&self) -> BTreeSet<u32> {
        self.coefficients().flat_map(|c| c.x_indices()).collect()
    }
}

/// `a_1 x^-1 a_2 x … a_{k-1} x^-1 a_k x`, whose zero set contains every `x_i`.
pub fn separating_polynomial(params: &Params) -> GroupPolynomial {
    GroupPolynomial::normalize((1..=params.k()).flat_map(|r| {
        [
            Term::Coef(Word::letter(Letter::a(r))),
            Term::Var(if r % 2 == 1 { -1 } else { 1 }),
        ]
    }))
}

/// An element of `Γ * ⟨x⟩⁺`: every exponent is positive.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct SemigroupPolynomial(GroupPolynomial);

impl SemigroupPolynomial {
    /// `x^0` is accepted and dropped; negative exponents are rejected.
    pub fn normalize<I: IntoIterator<Item = Term>>(terms: I) -> Result<Self> {
        let terms: Vec<Term> = terms.into_iter().collect();
        if let Some(pos) = terms
            .iter()
            .position(|t| matches!(t, Term::Var(e) if *e < 0))
        {
            return Err(Error::parse(
                pos,
                "negative exponent in a semigroup polynomial",
            ));
        }
        Ok(SemigroupPolynomial(GroupPolynomial::normalize(terms)))
    }

    pub fn as_group(&self) -> &GroupPolynomial {
        &self.0
    }

    pub fn is_constant(&self) -> bool {
        self.0.is_constant()
    }

    pub fn eval(&self, x: &Word) -> Word {
        self.0.eval(x)
    }

    pub fn mul(&self, other: &SemigroupPolynomial) -> SemigroupPolynomial {
        SemigroupPolynomial(self.0.mul(&other.0))
    }

    pub fn coefficient_indices(&self) -> BTreeSet<u32> {
        self.0.coefficient_indices()
    }
}

impl TryFrom<GroupPolynomial> for SemigroupPolynomial {
    type Error = Error;

    fn try_from(p: GroupPolynomial) -> Result<Self> {
        SemigroupPolynomial::normalize(p.terms())
    }
}

/// `1 + max` of every `x`-index in any coefficient; 1 if there are none.
pub fn fresh_index<'a, I: IntoIterator<Item = &'a GroupPolynomial>>(ps: I) -> u32 {
    ps.into_iter()
        .flat_map(|p| p.coefficient_indices())
        .max()
        .map_or(1, |m| m + 1)
}

/// `P(x) · Q(x)^{-1}`, reduced.
pub fn difference_word(p: &SemigroupPolynomial, q: &SemigroupPolynomial, x: &Word) -> Word {
    p.eval(x).concat(&q.eval(x).inverse())
}

/// `W(x) = 1`, the complement of the open set `O_W`.
pub fn in_subbasic_closed_group<S: RelatorSource + ?Sized>(
    p: &GroupPolynomial,
    x: &Word,
    source: &S,
) -> bool {
    is_identity(&p.eval(x), source).0
}

/// `P(x) = Q(x)`, the complement of the open set `O_{P,Q}`.
pub fn in_subbasic_closed_semigroup<S: RelatorSource + ?Sized>(
    p: &SemigroupPolynomial,
    q: &SemigroupPolynomial,
    x: &Word,
    source: &S,
) -> bool {
    equal_in_group(&p.eval(x), &q.eval(x), source)
}

fn parse_terms(s: &str) -> Result<Vec<Term>> {
    if s.is_empty() {
        return Err(Error::parse(
            0,
            "empty polynomial; write the identity as \"e\"",
        ));
    }
    let mut terms = Vec::new();
    let mut pending: Vec<Letter> = Vec::new();
    let flush = |pending: &mut Vec<Letter>, terms: &mut Vec<Term>| {
        if !pending.is_empty() {
            terms.push(Term::Coef(free_reduce(pending.drain(..))));
        }
    };
    for (pos, tok) in s.split(' ').enumerate() {
        if tok.is_empty() {
            return Err(Error::parse(
                pos,
                "tokens must be separated by single spaces",
            ));
        }
        if tok == "e" {
            continue;
        }
        if let Some(rest) = tok.strip_prefix('X') {
            let e = match rest.strip_prefix('^') {
                None if rest.is_empty() => 1,
                Some(num) => num
                    .parse::<i64>()
                    .map_err(|_| Error::parse(pos, format!("bad exponent in {tok:?}")))?,
                _ => return Err(Error::parse(pos, format!("bad variable token {tok:?}"))),
            };
            flush(&mut pending, &mut terms);
            terms.push(Term::Var(e));
        } else {
            pending.push(parse_letter(tok, pos)?);
        }
    }
    flush(&mut pending, &mut terms);
    Ok(terms)
}

fn render_terms(p: &GroupPolynomial, f: &mut fmt::Formatter<'_>) -> fmt::Result {
    let mut toks: Vec<String> = Vec::new();
    let push_word =
        |toks: &mut Vec<String>, w: &Word| toks.extend(w.letters().iter().map(|l| l.to_string()));
    push_word(&mut toks, &p.head);
    for (e, c) in &p.body {
        toks.push(if *e == 1 {
            "X".to_string()
        } else {
            format!("X^{e}")
        });
        push_word(&mut toks, c);
    }
    if toks.is_empty() {
        return f.write_str("e");
    }
    f.write_str(&toks.join(" "))
}

impl fmt::Display for GroupPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        render_terms(self, f)
    }
}

impl fmt::Display for SemigroupPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        render_terms(&self.0, f)
    }
}

impl FromStr for GroupPolynomial {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Ok(GroupPolynomial::normalize(parse_terms(s)?))
    }
}

impl FromStr for SemigroupPolynomial {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let terms = parse_terms(s)?;
        // Report the token position rather than the term position.
        for (pos, tok) in s.split(' ').enumerate() {
            if tok.starts_with("X^-") {
                return Err(Error::parse(
                    pos,
                    "negative exponent in a semigroup polynomial",
                ));
            }
        }
        SemigroupPolynomial::normalize(terms)
    }
}
