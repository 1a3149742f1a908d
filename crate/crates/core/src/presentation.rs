//! Relator families, symmetrized closures, pieces and the metric
//! small-cancellation condition.
//!
//! The group `Γ(k)` has generators `a_1..a_{k+1}` and `x_1, x_2, …` with one
//! relator per index,
//!
//! ```text
//! w_i = a_1 x_i^-1 a_2 x_i a_3 x_i^-1 … a_{k-1} x_i^-1 a_k x_i
//! ```
//!
//! The relator set is infinite, so it is only ever materialized over a finite
//! index set chosen by the caller (usually [`relevant_indices`] of the words
//! at hand).

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::word::{free_reduce, Family, Letter, Sign, Word};

/// The parameter `k` of `Γ(k)`: even and at least 8.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Params {
    k: u32,
}

impl Params {
    pub fn new(k: u32) -> Result<Self> {
        if k < 8 {
            return Err(Error::InvalidParams(format!(
                "k must be at least 8, got {k}"
            )));
        }
        if !k.is_multiple_of(2) {
            return Err(Error::InvalidParams(format!("k must be even, got {k}")));
        }
        Ok(Params { k })
    }

    pub fn k(&self) -> u32 {
        self.k
    }

    /// Every relator of `Γ(k)` has length `2k`.
    pub fn relator_len(&self) -> usize {
        2 * self.k as usize
    }

    /// The free letter `a_{k+1}`, which occurs in no relator.
    pub fn free_letter(&self) -> Letter {
        Letter::a(self.k + 1)
    }
}

impl Default for Params {
    fn default() -> Self {
        Params { k: 8 }
    }
}

/// `w_i`.
pub fn relator(params: &Params, i: u32) -> Result<Word> {
    if i == 0 {
        return Err(Error::InvalidParams(
            "relator index must be at least 1".into(),
        ));
    }
    let xi = Letter::x(i);
    let letters = (1..=params.k).flat_map(|r| {
        let x = if r % 2 == 1 { xi.inverse() } else { xi };
        [Letter::a(r), x]
    });
    Ok(free_reduce(letters))
}

/// `(index, rotation, sign)`: the member `(w_{index, rotation})^{±1}`.
///
/// Generic presentations reuse the same shape with `index` numbering the
/// relator lines from 1.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct RelatorId {
    pub index: u32,
    pub inverse: bool,
    pub rotation: u32,
}

impl fmt::Display for RelatorId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let eps = if self.inverse { "-1" } else { "+1" };
        write!(f, "({},{},{})", self.index, self.rotation, eps)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Member {
    pub id: RelatorId,
    pub word: Word,
}

/// Anything exposing a finite symmetrized relator set, sorted by word.
pub trait RelatorSet {
    fn members(&self) -> &[Member];
}

/// All cyclic permutations of each relator and of its inverse, deduplicated
/// by word (keeping the least id) and sorted by word.
fn symmetrize(relators: &[(u32, Word)]) -> Result<Vec<Member>> {
    let mut all = Vec::new();
    for (index, r) in relators {
        if r.is_empty() {
            continue;
        }
        for j in 0..r.len() {
            let rot = r.rotate(j)?;
            let id = RelatorId {
                index: *index,
                inverse: false,
                rotation: j as u32,
            };
            all.push(Member {
                id: RelatorId {
                    inverse: true,
                    ..id
                },
                word: rot.inverse(),
            });
            all.push(Member { id, word: rot });
        }
    }
    all.sort_by(|p, q| p.word.cmp(&q.word).then(p.id.cmp(&q.id)));
    all.dedup_by(|later, earlier| later.word == earlier.word);
    Ok(all)
}

/// The symmetrized closure of `{w_i : i ∈ indices}`.
#[derive(Debug, Clone)]
pub struct RelatorFamily {
    params: Params,
    indices: BTreeSet<u32>,
    members: Vec<Member>,
}

pub fn symmetrized_family(params: &Params, indices: &BTreeSet<u32>) -> Result<RelatorFamily> {
    if indices.is_empty() {
        return Err(Error::InvalidParams("index set must be nonempty".into()));
    }
    let relators = indices
        .iter()
        .map(|&i| Ok((i, relator(params, i)?)))
        .collect::<Result<Vec<_>>>()?;
    Ok(RelatorFamily {
        params: *params,
        indices: indices.clone(),
        members: symmetrize(&relators)?,
    })
}

impl RelatorFamily {
    pub fn params(&self) -> &Params {
        &self.params
    }

    pub fn indices(&self) -> &BTreeSet<u32> {
        &self.indices
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn contains(&self, w: &Word) -> bool {
        self.members.binary_search_by(|m| m.word.cmp(w)).is_ok()
    }

    pub fn words(&self) -> impl Iterator<Item = &Word> {
        self.members.iter().map(|m| &m.word)
    }
}

impl RelatorSet for RelatorFamily {
    fn members(&self) -> &[Member] {
        &self.members
    }
}

/// The set `{i : x_i^{±1} occurs in v}`.
pub fn relevant_indices(v: &Word) -> BTreeSet<u32> {
    v.x_indices()
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PieceReport {
    pub length: usize,
    /// Lexicographically least pair of members realizing `length`.
    pub witness: (Word, Word),
}

/// Longest maximal common initial segment over all pairs of distinct members.
pub fn max_piece_length<S: RelatorSet + ?Sized>(set: &S) -> Result<PieceReport> {
    let members = set.members();
    if members.len() < 2 {
        return Err(Error::TooFewRelators(members.len()));
    }
    let mut best = (0usize, 0usize, 1usize);
    for i in 0..members.len() {
        for j in i + 1..members.len() {
            let l = members[i].word.common_prefix_len(&members[j].word);
            if l > best.0 {
                best = (l, i, j);
            }
        }
    }
    let (length, i, j) = best;
    Ok(PieceReport {
        length,
        witness: (members[i].word.clone(), members[j].word.clone()),
    })
}

/// For each member, the longest piece that is one of its initial segments.
fn longest_piece_per_member(members: &[Member]) -> Vec<usize> {
    let mut longest = vec![0usize; members.len()];
    for i in 0..members.len() {
        for j in i + 1..members.len() {
            let l = members[i].word.common_prefix_len(&members[j].word);
            longest[i] = longest[i].max(l);
            longest[j] = longest[j].max(l);
        }
    }
    longest
}

/// A rational `num/den` strictly between 0 and 1.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Lambda {
    pub num: u64,
    pub den: u64,
}

impl Lambda {
    pub fn new(num: u64, den: u64) -> Result<Self> {
        if num == 0 || den == 0 || num >= den {
            return Err(Error::LambdaOutOfRange(num, den));
        }
        Ok(Lambda { num, den })
    }

    /// `len < λ·total`, exactly.
    pub fn bounds_strictly(&self, len: usize, total: usize) -> bool {
        (len as u128) * (self.den as u128) < (self.num as u128) * (total as u128)
    }
}

pub const SIXTH: Lambda = Lambda { num: 1, den: 6 };

impl fmt::Display for Lambda {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.num, self.den)
    }
}

impl FromStr for Lambda {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let (p, q) = s
            .split_once('/')
            .ok_or_else(|| Error::parse(0, format!("expected p/q, got {s:?}")))?;
        let p = p
            .trim()
            .parse()
            .map_err(|_| Error::parse(0, format!("bad numerator in {s:?}")))?;
        let q = q
            .trim()
            .parse()
            .map_err(|_| Error::parse(0, format!("bad denominator in {s:?}")))?;
        Lambda::new(p, q)
    }
}

/// `C'(λ)`: every piece `U` that is a subword of a member `W` has `|U| < λ|W|`.
///
/// A piece occurring in `W` is an initial segment of some cyclic permutation
/// of `W`, which is again a member, so it suffices to bound the longest piece
/// starting each member.
pub fn check_metric_condition<S: RelatorSet + ?Sized>(set: &S, lambda: Lambda) -> Result<bool> {
    let members = set.members();
    if members.len() < 2 {
        return Err(Error::TooFewRelators(members.len()));
    }
    let longest = longest_piece_per_member(members);
    Ok(members
        .iter()
        .zip(&longest)
        .all(|(m, &l)| lambda.bounds_strictly(l, m.word.len())))
}

/// A finite presentation over single-character generators, loaded from text.
///
/// Generator number `p` (from 1, in declaration order) is stored as the letter
/// `a_p`, so the word machinery is shared with `Γ(k)`.
#[derive(Debug, Clone)]
pub struct GenericPresentation {
    generators: Vec<char>,
    relators: Vec<Word>,
    members: Vec<Member>,
    sixth: bool,
}

impl GenericPresentation {
    pub fn new(generators: Vec<char>, relators: Vec<Word>) -> Result<Self> {
        for (n, r) in relators.iter().enumerate() {
            if r.is_empty() || !r.is_cyclically_reduced() {
                return Err(Error::Presentation(format!(
                    "relator {} is not cyclically reduced",
                    n + 1
                )));
            }
        }
        let numbered: Vec<(u32, Word)> = relators
            .iter()
            .enumerate()
            .map(|(n, r)| (n as u32 + 1, r.clone()))
            .collect();
        let members = symmetrize(&numbered)?;
        let sixth = members.len() < 2
            || longest_piece_per_member(&members)
                .iter()
                .zip(&members)
                .all(|(&l, m)| SIXTH.bounds_strictly(l, m.word.len()));
        Ok(GenericPresentation {
            generators,
            relators,
            members,
            sixth,
        })
    }

    /// Whether the presentation satisfies `C'(1/6)`; computed once on load.
    pub fn is_c_prime_sixth(&self) -> bool {
        self.sixth
    }

    pub fn generators(&self) -> &[char] {
        &self.generators
    }

    pub fn relators(&self) -> &[Word] {
        &self.relators
    }

    fn letter_for(&self, c: char) -> Option<Letter> {
        let lower = c.to_ascii_lowercase();
        let p = self.generators.iter().position(|&g| g == lower)?;
        let sign = if c.is_ascii_uppercase() {
            Sign::Neg
        } else {
            Sign::Pos
        };
        Some(Letter::new(Family::A, p as u32 + 1, sign))
    }

    /// Parses `abAB`-style strings; lowercase is a generator, uppercase its
    /// inverse. Input must already be freely reduced.
    pub fn parse_word(&self, s: &str) -> Result<Word> {
        let mut raw = Vec::new();
        for (pos, c) in s.chars().enumerate() {
            raw.push(
                self.letter_for(c)
                    .ok_or_else(|| Error::parse(pos, format!("unknown generator {c:?}")))?,
            );
        }
        let w = free_reduce(raw.iter().copied());
        if w.len() != raw.len() {
            return Err(Error::Presentation(format!("{s:?} is not freely reduced")));
        }
        Ok(w)
    }

    pub fn render(&self, w: &Word) -> String {
        if w.is_empty() {
            return "e".into();
        }
        w.letters()
            .iter()
            .map(|l| {
                let c = self
                    .generators
                    .get(l.index as usize - 1)
                    .copied()
                    .unwrap_or('?');
                if l.sign == Sign::Neg {
                    c.to_ascii_uppercase()
                } else {
                    c
                }
            })
            .collect()
    }
}

impl RelatorSet for GenericPresentation {
    fn members(&self) -> &[Member] {
        &self.members
    }
}

impl FromStr for GenericPresentation {
    type Err = Error;

    /// ```text
    /// # comment
    /// generators: a b c
    /// relator: abcABC
    /// ```
    fn from_str(text: &str) -> Result<Self> {
        let mut generators: Option<Vec<char>> = None;
        let mut raw_relators = Vec::new();
        for (lineno, line) in text.lines().enumerate() {
            let line = line.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let (key, value) = line.split_once(':').ok_or_else(|| {
                Error::Presentation(format!("line {}: expected key: value", lineno + 1))
            })?;
            match key.trim() {
                "generators" => {
                    if generators.is_some() {
                        return Err(Error::Presentation(format!(
                            "line {}: duplicate generators line",
                            lineno + 1
                        )));
                    }
                    let mut gens = Vec::new();
                    for tok in value.split_whitespace() {
                        let mut cs = tok.chars();
                        match (cs.next(), cs.next()) {
                            (Some(c), None) if c.is_ascii_lowercase() && !gens.contains(&c) => gens.push(c),
                            _ => {
                                return Err(Error::Presentation(format!(
                                    "line {}: generators must be distinct single lowercase letters, got {tok:?}",
                                    lineno + 1
                                )))
                            }
                        }
                    }
                    generators = Some(gens);
                }
                "relator" => {
                    if generators.is_none() {
                        return Err(Error::Presentation(format!(
                            "line {}: relator before generators",
                            lineno + 1
                        )));
                    }
                    raw_relators.push((lineno + 1, value.trim().to_string()));
                }
                other => {
                    return Err(Error::Presentation(format!(
                        "line {}: unknown key {other:?}",
                        lineno + 1
                    )))
                }
            }
        }
        let generators =
            generators.ok_or_else(|| Error::Presentation("missing generators line".into()))?;
        let shell = GenericPresentation {
            generators: generators.clone(),
            relators: vec![],
            members: vec![],
            sixth: true,
        };
        let mut relators = Vec::new();
        for (lineno, s) in raw_relators {
            let w = shell
                .parse_word(&s)
                .map_err(|e| Error::Presentation(format!("line {lineno}: {e}")))?;
            if w.is_empty() || !w.is_cyclically_reduced() {
                return Err(Error::Presentation(format!(
                    "line {lineno}: relator {s:?} is not cyclically reduced"
                )));
            }
            relators.push(w);
        }
        GenericPresentation::new(generators, relators)
    }
}
