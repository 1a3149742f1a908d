//! Dehn's algorithm with certified traces.
//!
//! A candidate is an occurrence in `V` of an initial segment `U` of some
//! relator member `R = U·S` with `|U| > |R|/2`. Replacing `U` by `S^{-1}`
//! keeps the group element and strictly shortens the word. Under `C'(1/6)`
//! every nonempty reduced word equal to 1 has such a candidate, so reaching a
//! nonempty fixed point proves the word nontrivial.
//!
//! Candidates are ordered by position, then longest match, then relator id,
//! and the first one is always applied, so traces are reproducible.

use std::fmt;

use serde::Serialize;

use crate::presentation::{
    relator, relevant_indices, symmetrized_family, GenericPresentation, Member, Params, RelatorId,
    RelatorSet,
};
use crate::word::{common_prefix, free_reduce, Word};

/// Where relator members come from for a given word.
pub trait RelatorSource {
    /// Members that may share a long subword with `v`.
    fn members_for(&self, v: &Word) -> Vec<Member>;

    /// Rebuilds a member from its id, for trace verification.
    fn member(&self, id: RelatorId) -> Option<Word>;

    /// Whether a nonempty fixed point may be reported as nontrivial.
    fn certifies_nontrivial(&self) -> bool;

    fn render(&self, w: &Word) -> String {
        w.to_string()
    }
}

/// `Γ(k)`: only relators whose `x`-index occurs in `v` can contain a subword
/// of `v` of length ≥ 2, so the family is built over those indices alone.
impl RelatorSource for Params {
    fn members_for(&self, v: &Word) -> Vec<Member> {
        let indices = relevant_indices(v);
        if indices.is_empty() || 2 * v.len() <= self.relator_len() {
            return Vec::new();
        }
        symmetrized_family(self, &indices)
            .map(|f| f.members().to_vec())
            .unwrap_or_default()
    }

    fn member(&self, id: RelatorId) -> Option<Word> {
        let r = relator(self, id.index)
            .ok()?
            .rotate(id.rotation as usize)
            .ok()?;
        Some(if id.inverse { r.inverse() } else { r })
    }

    fn certifies_nontrivial(&self) -> bool {
        true
    }
}

impl RelatorSource for GenericPresentation {
    fn members_for(&self, _v: &Word) -> Vec<Member> {
        self.members().to_vec()
    }

    fn member(&self, id: RelatorId) -> Option<Word> {
        let r = self.relators().get((id.index as usize).checked_sub(1)?)?;
        let r = r.rotate(id.rotation as usize).ok()?;
        Some(if id.inverse { r.inverse() } else { r })
    }

    fn certifies_nontrivial(&self) -> bool {
        self.is_c_prime_sixth()
    }

    fn render(&self, w: &Word) -> String {
        GenericPresentation::render(self, w)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Candidate {
    pub position: usize,
    pub relator: RelatorId,
    /// `|U|`; `U` is the first `matched` letters of the member.
    pub matched: usize,
    /// `S`, with `member = U·S`.
    pub remainder: Word,
    pub member: Word,
}

impl Candidate {
    pub fn segment(&self) -> &[crate::word::Letter] {
        &self.member.letters()[..self.matched]
    }
}

/// All candidates in `v`, one per (position, member) with the maximal match.
pub fn find_candidates<S: RelatorSource + ?Sized>(v: &Word, source: &S) -> Vec<Candidate> {
    let members = source.members_for(v);
    let letters = v.letters();
    let mut out = Vec::new();
    for pos in 0..letters.len() {
        let tail = &letters[pos..];
        for m in &members {
            let rlen = m.word.len();
            if 2 * tail.len() <= rlen {
                continue;
            }
            let l = common_prefix(tail, m.word.letters());
            if 2 * l > rlen {
                out.push(Candidate {
                    position: pos,
                    relator: m.id,
                    matched: l,
                    remainder: free_reduce(m.word.letters()[l..].iter().copied()),
                    member: m.word.clone(),
                });
            }
        }
    }
    out.sort_by(|p, q| {
        p.position
            .cmp(&q.position)
            .then(q.matched.cmp(&p.matched))
            .then(p.relator.cmp(&q.relator))
    });
    out
}

/// Replaces `U` at the candidate's position by `S^{-1}` and reduces.
pub fn apply(v: &Word, c: &Candidate) -> Word {
    let letters = v.letters();
    let replacement = c.remainder.inverse();
    free_reduce(
        letters[..c.position]
            .iter()
            .chain(replacement.letters())
            .chain(&letters[c.position + c.matched..])
            .copied(),
    )
}

pub fn dehn_step<S: RelatorSource + ?Sized>(v: &Word, source: &S) -> Option<(Word, Candidate)> {
    let c = find_candidates(v, source).into_iter().next()?;
    Some((apply(v, &c), c))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Step {
    pub before: Word,
    pub candidate: Candidate,
    pub after: Word,
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct DehnTrace {
    pub steps: Vec<Step>,
}

impl DehnTrace {
    pub fn len(&self) -> usize {
        self.steps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.steps.is_empty()
    }

    /// The word the trace ends on, if any step was taken.
    pub fn last_word(&self) -> Option<&Word> {
        self.steps.last().map(|s| &s.after)
    }

    /// Re-derives every step from scratch: the member is rebuilt from its id,
    /// `U` must sit in the before-word at the recorded position, the
    /// after-word must be the reduced replacement, lengths must drop, and
    /// consecutive steps must chain.
    pub fn verify<S: RelatorSource + ?Sized>(
        &self,
        start: &Word,
        source: &S,
    ) -> Result<(), String> {
        let mut current = start.clone();
        for (n, step) in self.steps.iter().enumerate() {
            let c = &step.candidate;
            if step.before != current {
                return Err(format!(
                    "step {n}: does not continue from the previous word"
                ));
            }
            let member = source
                .member(c.relator)
                .ok_or_else(|| format!("step {n}: unknown relator {}", c.relator))?;
            if member != c.member {
                return Err(format!(
                    "step {n}: recorded member differs from relator {}",
                    c.relator
                ));
            }
            if 2 * c.matched <= member.len() {
                return Err(format!(
                    "step {n}: matched segment is not more than half the relator"
                ));
            }
            let rebuilt_remainder = free_reduce(member.letters()[c.matched..].iter().copied());
            if rebuilt_remainder != c.remainder {
                return Err(format!("step {n}: remainder does not complete the relator"));
            }
            let before = step.before.letters();
            if c.position + c.matched > before.len()
                || before[c.position..c.position + c.matched] != member.letters()[..c.matched]
            {
                return Err(format!(
                    "step {n}: segment not found at position {}",
                    c.position
                ));
            }
            if apply(&step.before, c) != step.after {
                return Err(format!(
                    "step {n}: after-word is not the reduced replacement"
                ));
            }
            if step.after.len() >= step.before.len() {
                return Err(format!("step {n}: length did not decrease"));
            }
            current = step.after.clone();
        }
        Ok(())
    }

    /// One line per step: before-length, relator id, position, after-length.
    pub fn lines(&self) -> Vec<String> {
        self.steps
            .iter()
            .map(|s| {
                format!(
                    "{} {} @{} -> {}",
                    s.before.len(),
                    s.candidate.relator,
                    s.candidate.position,
                    s.after.len()
                )
            })
            .collect()
    }
}

impl fmt::Display for DehnTrace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for line in self.lines() {
            writeln!(f, "{line}")?;
        }
        Ok(())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Verdict {
    Identity,
    Nontrivial,
    /// Reduction stalled on a presentation not known to be `C'(1/6)`.
    Inconclusive,
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Verdict::Identity => "IDENTITY",
            Verdict::Nontrivial => "NONTRIVIAL",
            Verdict::Inconclusive => "INCONCLUSIVE",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Solution {
    pub verdict: Verdict,
    pub trace: DehnTrace,
    /// The fixed point the reduction stopped at.
    pub residue: Word,
}

pub fn solve<S: RelatorSource + ?Sized>(v: &Word, source: &S) -> Solution {
    let mut trace = DehnTrace::default();
    let mut current = v.clone();
    while !current.is_empty() {
        match dehn_step(&current, source) {
            Some((next, candidate)) => {
                trace.steps.push(Step {
                    before: current,
                    candidate,
                    after: next.clone(),
                });
                current = next;
            }
            None => break,
        }
    }
    let verdict = if current.is_empty() {
        Verdict::Identity
    } else if source.certifies_nontrivial() {
        Verdict::Nontrivial
    } else {
        Verdict::Inconclusive
    };
    Solution {
        verdict,
        trace,
        residue: current,
    }
}

/// `true` iff Dehn reduction reaches the empty word.
pub fn is_identity<S: RelatorSource + ?Sized>(v: &Word, source: &S) -> (bool, DehnTrace) {
    let s = solve(v, source);
    (s.verdict == Verdict::Identity, s.trace)
}

pub fn equal_in_group<S: RelatorSource + ?Sized>(u: &Word, v: &Word, source: &S) -> bool {
    is_identity(&u.concat(&v.inverse()), source).0
}
