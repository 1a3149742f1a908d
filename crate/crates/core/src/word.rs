//! Freely reduced words over the two-family alphabet `A ∪ X`.
//!
//! The alphabet is unbounded: a [`Letter`] carries its family, a positive
//! index and a sign, so no registry of generators is ever needed. Words are
//! immutable values and every operation hands back a fresh [`Word`].
//!
//! Text form: letters are separated by single spaces, each written as
//! `a<n>` or `x<n>` with a trailing `'` for the inverse, and the empty word
//! is `e`. For example `a1 x3' a2 x3`.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum Family {
    A,
    X,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum Sign {
    Pos,
    Neg,
}

impl Sign {
    pub fn flip(self) -> Sign {
        match self {
            Sign::Pos => Sign::Neg,
            Sign::Neg => Sign::Pos,
        }
    }
}

/// A signed generator `a_i^{±1}` or `x_i^{±1}`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Letter {
    pub family: Family,
    pub index: u32,
    pub sign: Sign,
}

impl Letter {
    pub const fn new(family: Family, index: u32, sign: Sign) -> Self {
        Letter {
            family,
            index,
            sign,
        }
    }

    pub const fn a(index: u32) -> Self {
        Letter::new(Family::A, index, Sign::Pos)
    }

    pub const fn x(index: u32) -> Self {
        Letter::new(Family::X, index, Sign::Pos)
    }

    pub fn inverse(self) -> Self {
        Letter {
            sign: self.sign.flip(),
            ..self
        }
    }

    pub fn is_inverse_of(self, other: Letter) -> bool {
        self.family == other.family && self.index == other.index && self.sign != other.sign
    }
}

impl fmt::Display for Letter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let fam = match self.family {
            Family::A => 'a',
            Family::X => 'x',
        };
        write!(f, "{}{}", fam, self.index)?;
        if self.sign == Sign::Neg {
            f.write_str("'")?;
        }
        Ok(())
    }
}

impl FromStr for Letter {
    type Err = Error;

    fn from_str(tok: &str) -> Result<Self> {
        parse_letter(tok, 0)
    }
}

pub(crate) fn parse_letter(tok: &str, position: usize) -> Result<Letter> {
    let (body, sign) = match tok.strip_suffix('\'') {
        Some(b) => (b, Sign::Neg),
        None => (tok, Sign::Pos),
    };
    let mut chars = body.chars();
    let family = match chars.next() {
        Some('a') => Family::A,
        Some('x') => Family::X,
        _ => {
            return Err(Error::parse(
                position,
                format!("expected a letter like a1 or x3', got {tok:?}"),
            ))
        }
    };
    let digits = chars.as_str();
    if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
        return Err(Error::parse(
            position,
            format!("bad letter index in {tok:?}"),
        ));
    }
    let index: u32 = digits
        .parse()
        .map_err(|_| Error::parse(position, format!("letter index overflows in {tok:?}")))?;
    if index == 0 {
        return Err(Error::parse(position, "letter indices start at 1"));
    }
    Ok(Letter::new(family, index, sign))
}

/// Whether a word avoids `x_m^{-1}` (positive) and/or avoids `x_m` (negative).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Polarity {
    pub positive: bool,
    pub negative: bool,
}

/// A freely reduced word. The empty word is the identity.
#[derive(Debug, Clone, Default, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Word {
    letters: Vec<Letter>,
}

/// Single left-to-right stack pass.
pub fn free_reduce<I: IntoIterator<Item = Letter>>(raw: I) -> Word {
    let mut out: Vec<Letter> = Vec::new();
    for l in raw {
        if out.last().is_some_and(|&top| top.is_inverse_of(l)) {
            out.pop();
        } else {
            out.push(l);
        }
    }
    Word { letters: out }
}

impl FromIterator<Letter> for Word {
    fn from_iter<I: IntoIterator<Item = Letter>>(iter: I) -> Self {
        free_reduce(iter)
    }
}

impl Word {
    pub fn empty() -> Self {
        Word::default()
    }

    pub fn letter(l: Letter) -> Self {
        Word { letters: vec![l] }
    }

    pub fn letters(&self) -> &[Letter] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    /// Product `self · other`; cancellation only happens at the junction.
    pub fn concat(&self, other: &Word) -> Word {
        let mut cut = 0;
        let (l, r) = (&self.letters, &other.letters);
        while cut < l.len() && cut < r.len() && l[l.len() - 1 - cut].is_inverse_of(r[cut]) {
            cut += 1;
        }
        let mut letters = Vec::with_capacity(l.len() + r.len() - 2 * cut);
        letters.extend_from_slice(&l[..l.len() - cut]);
        letters.extend_from_slice(&r[cut..]);
        Word { letters }
    }

    pub fn inverse(&self) -> Word {
        Word {
            letters: self.letters.iter().rev().map(|l| l.inverse()).collect(),
        }
    }

    pub fn pow(&self, e: i64) -> Word {
        let base = if e < 0 { self.inverse() } else { self.clone() };
        let mut acc = Word::empty();
        for _ in 0..e.unsigned_abs() {
            acc = acc.concat(&base);
        }
        acc
    }

    pub fn is_cyclically_reduced(&self) -> bool {
        match (self.letters.first(), self.letters.last()) {
            (Some(&f), Some(&l)) => self.letters.len() == 1 || !f.is_inverse_of(l),
            _ => true,
        }
    }

    /// The `j`-th cyclic permutation `b_{j+1} … b_n b_1 … b_j`.
    pub fn rotate(&self, j: usize) -> Result<Word> {
        let n = self.letters.len();
        if j >= n {
            return Err(Error::RotationOutOfRange { index: j, len: n });
        }
        if !self.is_cyclically_reduced() {
            return Err(Error::NotCyclicallyReduced);
        }
        let mut letters = Vec::with_capacity(n);
        letters.extend_from_slice(&self.letters[j..]);
        letters.extend_from_slice(&self.letters[..j]);
        Ok(Word { letters })
    }

    pub fn polarity(&self, m: u32) -> Polarity {
        let mut p = Polarity {
            positive: true,
            negative: true,
        };
        for l in self
            .letters
            .iter()
            .filter(|l| l.family == Family::X && l.index == m)
        {
            match l.sign {
                Sign::Pos => p.negative = false,
                Sign::Neg => p.positive = false,
            }
        }
        p
    }

    pub fn contains_x(&self, m: u32) -> bool {
        self.letters
            .iter()
            .any(|l| l.family == Family::X && l.index == m)
    }

    /// Length of the maximal common initial segment.
    pub fn common_prefix_len(&self, other: &Word) -> usize {
        common_prefix(&self.letters, &other.letters)
    }

    /// Every start position of `needle` in `self`, ascending.
    pub fn find_occurrences(&self, needle: &Word) -> Result<Vec<usize>> {
        if needle.is_empty() {
            return Err(Error::EmptyNeedle);
        }
        Ok(self
            .letters
            .windows(needle.len())
            .enumerate()
            .filter(|(_, w)| *w == needle.letters.as_slice())
            .map(|(i, _)| i)
            .collect())
    }

    /// Indices `i` such that `x_i^{±1}` occurs.
    pub fn x_indices(&self) -> BTreeSet<u32> {
        self.letters
            .iter()
            .filter(|l| l.family == Family::X)
            .map(|l| l.index)
            .collect()
    }

    pub fn max_index(&self, family: Family) -> Option<u32> {
        self.letters
            .iter()
            .filter(|l| l.family == family)
            .map(|l| l.index)
            .max()
    }
}

pub(crate) fn common_prefix(u: &[Letter], v: &[Letter]) -> usize {
    u.iter().zip(v).take_while(|(a, b)| a == b).count()
}

pub fn longest_common_prefix(u: &Word, v: &Word) -> usize {
    u.common_prefix_len(v)
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.letters.is_empty() {
            return f.write_str("e");
        }
        for (i, l) in self.letters.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{l}")?;
        }
        Ok(())
    }
}

impl FromStr for Word {
    type Err = Error;

    /// Accepts only the strict grammar; the result is freely reduced.
    fn from_str(s: &str) -> Result<Self> {
        if s == "e" {
            return Ok(Word::empty());
        }
        if s.is_empty() {
            return Err(Error::parse(0, "empty input; write the identity as \"e\""));
        }
        let mut raw = Vec::new();
        for (pos, tok) in s.split(' ').enumerate() {
            if tok.is_empty() {
                return Err(Error::parse(
                    pos,
                    "tokens must be separated by single spaces",
                ));
            }
            if tok == "e" {
                return Err(Error::parse(pos, "\"e\" is only valid as the whole word"));
            }
            raw.push(parse_letter(tok, pos)?);
        }
        Ok(free_reduce(raw))
    }
}

/// Convenience for tests and examples: panics on malformed input.
pub fn word(s: &str) -> Word {
    s.parse()
        .unwrap_or_else(|e| panic!("bad word literal {s:?}: {e}"))
}
