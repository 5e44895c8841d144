//! Family-independent access to normal forms.

use std::fmt;

use serde_json::{json, Value};

use super::bform::{dform_json, grid_b, parse_b, BForm};
use super::dform::{enumerate_valid, DForm};
use super::dtilde::{grid_d, parse_d, psi1_word, DAffForm};
use crate::coxeter::{is_fully_commutative, Budget, CoxeterSystem, Family, Generator, GroupElement, Word};
use crate::error::{Error, Result};

/// A normal form of a fully commutative element of any supported family.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum NormalForm {
    /// Finite type D.
    D(DForm),
    /// Type B~.
    B(BForm),
    /// Type D~.
    Daff(DAffForm),
}

impl NormalForm {
    /// Class name: `finite`, `affine1`, `first` or `second`.
    pub fn class_name(&self) -> &'static str {
        match self {
            NormalForm::D(_) => "finite",
            NormalForm::B(f) => f.class_name(),
            NormalForm::Daff(f) => f.class_name(),
        }
    }

    /// Affine length given by the closed formula.
    pub fn affine_length(&self) -> usize {
        match self {
            NormalForm::D(_) => 0,
            NormalForm::B(f) => f.affine_length(),
            NormalForm::Daff(f) => f.affine_length(),
        }
    }

    /// Coxeter length given by the closed formula.
    pub fn length(&self, sys: &CoxeterSystem) -> usize {
        match self {
            NormalForm::D(f) => f.len(),
            NormalForm::B(f) => f.length(sys.n()),
            NormalForm::Daff(f) => f.length(sys.n()),
        }
    }

    /// Whether the form carries the `sb1`/`s_1` exchange.
    pub fn psi1_flag(&self) -> bool {
        matches!(self, NormalForm::Daff(f) if f.psi1_flag())
    }

    /// The rendered reduced word.
    pub fn word(&self, sys: &CoxeterSystem) -> Result<Word> {
        match self {
            NormalForm::D(f) => f.word(sys),
            NormalForm::B(f) => f.word(sys),
            NormalForm::Daff(f) => f.word(sys),
        }
    }

    /// Checks the defining conditions.
    pub fn validate(&self, sys: &CoxeterSystem) -> Result<()> {
        match self {
            NormalForm::D(f) => f.validate(sys.n()),
            NormalForm::B(f) => f.validate(sys),
            NormalForm::Daff(f) => f.validate(sys),
        }
    }

    /// JSON parameters.
    pub fn params_json(&self) -> Value {
        match self {
            NormalForm::D(f) => json!({ "v": dform_json(f) }),
            NormalForm::B(f) => f.params_json(),
            NormalForm::Daff(f) => f.params_json(),
        }
    }

    /// Full JSON encoding including the rendered word.
    pub fn to_json(&self, sys: &CoxeterSystem) -> Result<Value> {
        let w = self.word(sys)?;
        Ok(json!({
            "class": self.class_name(),
            "params": self.params_json(),
            "psi1": self.psi1_flag(),
            "word": sys.tokens(&w),
            "length": w.len(),
            "affine_length": self.affine_length(),
        }))
    }
}

impl fmt::Display for NormalForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            NormalForm::D(x) => write!(f, "finite {x}"),
            NormalForm::B(x) => x.fmt(f),
            NormalForm::Daff(x) => x.fmt(f),
        }
    }
}

/// Parses a fully commutative element into its normal form.
pub fn parse(sys: &CoxeterSystem, x: &GroupElement) -> Result<NormalForm> {
    match sys.family() {
        Family::D => {
            if !is_fully_commutative(sys, x) {
                return Err(Error::NotFc);
            }
            Ok(NormalForm::D(DForm::parse(sys, x, sys.n())?))
        }
        Family::Btilde => Ok(NormalForm::B(parse_b(sys, x)?)),
        Family::Dtilde => Ok(NormalForm::Daff(parse_d(sys, x)?)),
        Family::Ctilde => Err(Error::Domain("normal forms are not provided for type C~".into())),
    }
}

/// Parses a reduced word of a fully commutative element.
pub fn parse_word(sys: &CoxeterSystem, w: &Word) -> Result<NormalForm> {
    parse(sys, &GroupElement::from_word(sys, w)?)
}

/// One fully commutative element produced by [`enumerate_fc`].
#[derive(Debug, Clone)]
pub struct FcEntry {
    /// The normal form.
    pub form: NormalForm,
    /// The rendered word of the form.
    pub word: Word,
    /// The ShortLex-minimal reduced word.
    pub canonical: Word,
    /// The element.
    pub element: GroupElement,
}

impl FcEntry {
    /// Coxeter length.
    pub fn length(&self) -> usize {
        self.word.len()
    }

    /// Affine length.
    pub fn affine_length(&self) -> usize {
        self.form.affine_length()
    }
}

/// All fully commutative elements with Coxeter length at most `max_len`
/// (unbounded for `None`) and affine length at most `max_affine`, ordered by
/// affine length, then length, then ShortLex.
pub fn enumerate_fc(
    sys: &CoxeterSystem,
    max_len: Option<usize>,
    max_affine: usize,
    budget: Budget,
) -> Result<Vec<FcEntry>> {
    let max_affine = max_len.map_or(max_affine, |l| max_affine.min(l));
    let forms: Vec<NormalForm> = match sys.family() {
        Family::D => enumerate_valid(sys.n(), max_len).into_iter().map(NormalForm::D).collect(),
        Family::Btilde => grid_b(sys, max_len, max_affine)?.into_iter().map(NormalForm::B).collect(),
        Family::Dtilde => grid_d(sys, max_len, max_affine)?.into_iter().map(NormalForm::Daff).collect(),
        Family::Ctilde => {
            return Err(Error::Domain("normal forms are not provided for type C~".into()));
        }
    };
    budget.check(forms.len())?;
    let mut out = Vec::with_capacity(forms.len());
    for form in forms {
        let word = form.word(sys)?;
        let element = GroupElement::from_word(sys, &word)?;
        let canonical = element.canonical_word(sys);
        out.push(FcEntry {
            form,
            word,
            canonical,
            element,
        });
    }
    out.sort_by(|a, b| {
        (a.affine_length(), a.length(), &a.canonical).cmp(&(b.affine_length(), b.length(), &b.canonical))
    });
    Ok(out)
}

/// Affine length of an element: occurrences of `t` in a reduced word for
/// B~ and C~, of `sbN` for fully commutative elements of D~, and zero in
/// type D.
pub fn affine_length(sys: &CoxeterSystem, x: &GroupElement) -> Result<usize> {
    match sys.affine() {
        None => Ok(0),
        Some(a) => {
            if sys.family() == Family::Dtilde && !is_fully_commutative(sys, x) {
                return Err(Error::NotFc);
            }
            Ok(x.canonical_word(sys).count(a))
        }
    }
}

/// Which diagram automorphism to apply.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Psi {
    /// Exchanges `sb1` and `s_1`.
    One,
    /// Exchanges `sbN` and `s_N` (type D~ only).
    N,
}

/// Applies a diagram automorphism letter by letter.
pub fn psi(sys: &CoxeterSystem, w: &Word, which: Psi) -> Result<Word> {
    match (sys.family(), which) {
        (Family::D | Family::Dtilde, Psi::One) => Ok(psi1_word(sys, w)),
        (Family::Dtilde, Psi::N) => {
            let a = sys.index(Generator::SigmaBarN);
            let b = sys.sigma(sys.n());
            Ok(Word(
                w.letters()
                    .iter()
                    .map(|&l| if l == a { b } else if l == b { a } else { l })
                    .collect(),
            ))
        }
        (f, _) => Err(Error::Domain(format!(
            "the requested automorphism is not defined for type {}",
            f.name()
        ))),
    }
}

/// Kinds of extremal elements of the finite parabolic subgroup.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Extremal {
    /// `s_N` occurs.
    B,
    /// `s_{N-1}` occurs at least twice.
    D,
}

/// Tests extremality of a fully commutative element generated by
/// `sb1, s_1, ..., s_N`.
pub fn extremal(sys: &CoxeterSystem, x: &GroupElement, kind: Extremal) -> Result<bool> {
    if !is_fully_commutative(sys, x) {
        return Err(Error::NotFc);
    }
    let w = x.canonical_word(sys);
    if sys.affine().is_some_and(|a| w.count(a) > 0) || sys.family() == Family::Ctilde {
        return Err(Error::Domain("element outside the finite parabolic subgroup".into()));
    }
    let n = sys.n();
    Ok(match kind {
        Extremal::B => w.count(sys.sigma(n)) > 0,
        Extremal::D => w.count(sys.sigma(n - 1)) >= 2,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coxeter::{enumerate_ball, is_reduced_fc_word};
    use std::collections::HashSet;

    fn elem(sys: &CoxeterSystem, s: &str) -> GroupElement {
        GroupElement::from_word(sys, &sys.parse_word(s).unwrap()).unwrap()
    }

    #[test]
    fn d4_has_48() {
        let sys = CoxeterSystem::new(Family::D, 4).unwrap();
        let all = enumerate_fc(&sys, None, 0, Budget::new(1000)).unwrap();
        assert_eq!(all.len(), 48);
        let b4 = CoxeterSystem::new(Family::Btilde, 5).unwrap();
        assert_eq!(enumerate_fc(&b4, None, 0, Budget::new(1000)).unwrap().len(), 48);
        let d4 = CoxeterSystem::new(Family::Dtilde, 5).unwrap();
        let zero = enumerate_fc(&d4, Some(0), 0, Budget::new(1000)).unwrap();
        assert_eq!(zero.len(), 1);
        assert!(zero[0].word.is_empty());
    }

    #[test]
    fn matches_ball_and_is_sorted() {
        let sys = CoxeterSystem::new(Family::Btilde, 5).unwrap();
        let all = enumerate_fc(&sys, Some(4), 1, Budget::new(100_000)).unwrap();
        let ball: HashSet<GroupElement> = enumerate_ball(&sys, 4, Budget::new(100_000))
            .unwrap()
            .into_iter()
            .filter(|e| is_fully_commutative(&sys, &e.element) && e.word.count(sys.affine().unwrap()) <= 1)
            .map(|e| e.element)
            .collect();
        let got: HashSet<GroupElement> = all.iter().map(|e| e.element.clone()).collect();
        assert_eq!(got, ball);
        assert_eq!(got.len(), all.len());
        for e in &all {
            assert!(is_reduced_fc_word(&sys, &e.word));
        }
        assert!(all
            .windows(2)
            .all(|w| (w[0].affine_length(), w[0].length(), &w[0].canonical)
                < (w[1].affine_length(), w[1].length(), &w[1].canonical)));
    }

    #[test]
    fn extremal_examples() {
        let sys = CoxeterSystem::new(Family::D, 4).unwrap();
        assert!(extremal(&sys, &elem(&sys, "s3"), Extremal::B).unwrap());
        assert!(extremal(&sys, &elem(&sys, "s2 s1 sb1 s2"), Extremal::D).unwrap());
        let id = GroupElement::identity(&sys);
        assert!(!extremal(&sys, &id, Extremal::B).unwrap());
        assert!(!extremal(&sys, &id, Extremal::D).unwrap());
        assert!(matches!(extremal(&sys, &elem(&sys, "s1 s2 s1"), Extremal::B), Err(Error::NotFc)));
    }

    #[test]
    fn psi_examples() {
        let sys = CoxeterSystem::new(Family::D, 4).unwrap();
        let w = sys.parse_word("s1 s2").unwrap();
        assert_eq!(sys.format(&psi(&sys, &w, Psi::One).unwrap()), "sb1 s2");
        assert!(psi(&sys, &w, Psi::N).is_err());
        let dt = CoxeterSystem::new(Family::Dtilde, 5).unwrap();
        let w = dt.parse_word("s3 sb3 s2").unwrap();
        assert_eq!(dt.format(&psi(&dt, &w, Psi::N).unwrap()), "sb3 s3 s2");
        for e in enumerate_ball(&dt, 6, Budget::new(100_000)).unwrap() {
            for which in [Psi::One, Psi::N] {
                let once = psi(&dt, &e.word, which).unwrap();
                assert_eq!(psi(&dt, &once, which).unwrap(), e.word);
                let g = GroupElement::from_word(&dt, &once).unwrap();
                assert_eq!(g.length(&dt), e.word.len());
            }
        }
    }

    #[test]
    fn affine_length_of_elements() {
        let b = CoxeterSystem::new(Family::Btilde, 5).unwrap();
        assert_eq!(affine_length(&b, &elem(&b, "t s3 t")).unwrap(), 2);
        let d = CoxeterSystem::new(Family::Dtilde, 5).unwrap();
        assert!(matches!(affine_length(&d, &elem(&d, "s2 sb3 s2")), Err(Error::NotFc)));
        assert_eq!(affine_length(&d, &elem(&d, "sb3 s2 s1 sb1 s2 sb3")).unwrap(), 2);
        assert!(parse(&b, &elem(&b, "s3 t s3 t")).is_err());
    }
}
