use proptest::prelude::*;

use zarlab::dehn::{equal_in_group, is_identity, solve, Verdict};
use zarlab::presentation::{relator, Params};
use zarlab::word::{free_reduce, Family, Letter, Sign, Word};
use zarlab::word_maps::{difference_word, fresh_index, GroupPolynomial, SemigroupPolynomial, Term};
use zarlab::zero_monoid::{eval_s, s_equal, s_mul, Gen, SPolynomial, STerm, SWord};

fn k8() -> Params {
    Params::new(8).unwrap()
}

fn letter(a_max: u32, x_max: u32) -> impl Strategy<Value = Letter> {
    prop_oneof![
        (1..=a_max, any::<bool>()).prop_map(|(i, s)| Letter::new(
            Family::A,
            i,
            if s { Sign::Pos } else { Sign::Neg }
        )),
        (1..=x_max, any::<bool>()).prop_map(|(i, s)| Letter::new(
            Family::X,
            i,
            if s { Sign::Pos } else { Sign::Neg }
        )),
    ]
}

fn word(max_len: usize) -> impl Strategy<Value = Word> {
    prop::collection::vec(letter(9, 5), 0..=max_len).prop_map(free_reduce)
}

/// `g · r · g^{-1}` for a rotated relator or its inverse.
fn conjugate() -> impl Strategy<Value = Word> {
    (1u32..=5, 0usize..16, any::<bool>(), word(6)).prop_map(|(i, j, inv, g)| {
        let r = relator(&k8(), i).unwrap().rotate(j).unwrap();
        let r = if inv { r.inverse() } else { r };
        g.concat(&r).concat(&g.inverse())
    })
}

fn group_poly(signed: bool) -> impl Strategy<Value = Vec<Term>> {
    let exp = if signed {
        (-3i64..=3).boxed()
    } else {
        (0i64..=3).boxed()
    };
    (word(4), prop::collection::vec((exp, word(4)), 0..=4)).prop_map(|(head, body)| {
        let mut terms = vec![Term::Coef(head)];
        for (e, c) in body {
            terms.push(Term::Var(e));
            terms.push(Term::Coef(c));
        }
        terms
    })
}

/// Evaluates raw terms directly, without normalizing first.
fn eval_raw(terms: &[Term], x: &Word) -> Word {
    terms.iter().fold(Word::empty(), |acc, t| match t {
        Term::Coef(c) => acc.concat(c),
        Term::Var(e) => acc.concat(&x.pow(*e)),
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn conjugation_invariance(v in word(20), g in word(6)) {
        let conj = g.concat(&v).concat(&g.inverse());
        prop_assert_eq!(is_identity(&v, &k8()).0, is_identity(&conj, &k8()).0);
    }

    #[test]
    fn conjugates_of_relators_are_trivial(cs in prop::collection::vec(conjugate(), 1..=3)) {
        let w = cs.iter().fold(Word::empty(), |acc, c| acc.concat(c));
        let sol = solve(&w, &k8());
        prop_assert_eq!(sol.verdict, Verdict::Identity);
        prop_assert!(sol.trace.verify(&w, &k8()).is_ok());
        prop_assert!(sol.trace.len() <= w.len());
    }

    #[test]
    fn traces_verify_and_terminate(v in word(40)) {
        let sol = solve(&v, &k8());
        prop_assert!(sol.trace.verify(&v, &k8()).is_ok());
        prop_assert!(sol.trace.len() <= v.len());
        prop_assert_eq!(sol.verdict == Verdict::Identity, sol.residue.is_empty());
    }

    #[test]
    fn equality_is_reflexive(w in word(30)) {
        prop_assert!(equal_in_group(&w, &w, &k8()));
    }

    #[test]
    fn normalize_preserves_evaluation(terms in group_poly(true), xs in prop::collection::vec(word(5), 1..=4)) {
        let p = GroupPolynomial::normalize(terms.clone());
        for x in &xs {
            prop_assert_eq!(p.eval(x), eval_raw(&terms, x));
        }
        prop_assert!(p.body().iter().all(|(e, _)| *e != 0));
        prop_assert!(p.body().windows(2).all(|w| !w[0].1.is_empty()));
    }

    #[test]
    fn evaluation_is_multiplicative(a in group_poly(true), b in group_poly(true), x in word(6)) {
        let (p, q) = (GroupPolynomial::normalize(a), GroupPolynomial::normalize(b));
        prop_assert_eq!(p.mul(&q).eval(&x), p.eval(&x).concat(&q.eval(&x)));
    }

    #[test]
    fn constants_ignore_the_point(c in word(10), x in word(6), y in word(6)) {
        let p = GroupPolynomial::constant(c);
        prop_assert_eq!(p.eval(&x), p.eval(&y));
    }

    #[test]
    fn render_parse_round_trip(terms in group_poly(true)) {
        let p = GroupPolynomial::normalize(terms);
        let text = p.to_string();
        prop_assert_eq!(text.parse::<GroupPolynomial>().unwrap().to_string(), text);
    }

    /// For a fresh m, the unreduced `P(x_m)·Q(x_m)^{-1}` splits into a
    /// prefix positive in x_m and a suffix negative in x_m, and after
    /// reduction any surviving x_m makes the word nontrivial.
    #[test]
    fn decomposition_feeds_the_lemma(a in group_poly(false), b in group_poly(false)) {
        let p = SemigroupPolynomial::normalize(a).unwrap();
        let q = SemigroupPolynomial::normalize(b).unwrap();
        let m = fresh_index([p.as_group(), q.as_group()]);
        let xm = Word::letter(Letter::x(m));
        let (plus, minus) = (p.eval(&xm), q.eval(&xm).inverse());
        prop_assert!(plus.polarity(m).positive);
        prop_assert!(minus.polarity(m).negative);
        let v = difference_word(&p, &q, &xm);
        prop_assert_eq!(&v, &plus.concat(&minus));
        if v.contains_x(m) {
            prop_assert_eq!(solve(&v, &k8()).verdict, Verdict::Nontrivial);
        }
    }
}

fn gen() -> impl Strategy<Value = Gen> {
    (1u32..=4, any::<bool>()).prop_map(|(i, x)| if x { Gen::X(i) } else { Gen::Y(i) })
}

fn sword() -> impl Strategy<Value = SWord> {
    prop_oneof![
        1 => Just(SWord::Zero),
        8 => prop::collection::vec(gen(), 1..=5).prop_map(|g| zarlab::zero_monoid::s_normalize(g).unwrap()),
    ]
}

fn spoly() -> impl Strategy<Value = SPolynomial> {
    prop::collection::vec(
        prop_oneof![
            sword().prop_map(STerm::Coef),
            (1u32..=3).prop_map(STerm::Var)
        ],
        1..=6,
    )
    .prop_map(|t| SPolynomial::normalize(t).unwrap())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(10_000))]

    #[test]
    fn s_mul_associative(a in sword(), b in sword(), c in sword()) {
        prop_assert_eq!(s_mul(&s_mul(&a, &b), &c), s_mul(&a, &s_mul(&b, &c)));
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(500))]

    #[test]
    fn zero_absorbs(a in sword()) {
        prop_assert!(s_mul(&SWord::Zero, &a).is_zero());
        prop_assert!(s_mul(&a, &SWord::Zero).is_zero());
    }

    #[test]
    fn fresh_renaming_invariance(p in spoly(), q in spoly(), gap in 1u32..5) {
        let i = 5;
        let j = i + gap;
        for ctor in [Gen::X as fn(u32) -> Gen, Gen::Y] {
            let at = |n| {
                let s = SWord::gen(ctor(n));
                s_equal(&eval_s(&p, &s), &eval_s(&q, &s))
            };
            prop_assert_eq!(at(i), at(j));
        }
    }

    #[test]
    fn spolynomial_round_trip(p in spoly()) {
        let text = p.to_string();
        prop_assert_eq!(text.parse::<SPolynomial>().unwrap(), p);
    }
}
