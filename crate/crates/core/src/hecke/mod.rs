//! Hecke algebras on the basis `{g_w}` and the tower morphisms `R_n`, `Q_n`,
//! `P_n`.

pub mod tower;

use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::fmt;

use num_bigint::BigInt;

use crate::coxeter::{CoxeterSystem, GroupElement, Letter, Word};
use crate::error::{Error, Result};
use crate::laurent::{rows_independent, LaurentPoly, LinComb};

pub use tower::{check_homomorphism, check_leading_shape, independent_on_ball, morphism_image, HeckeMap, HeckeMorphism};

/// An element of the Hecke algebra, keyed by canonical words.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HeckeElt {
    sys: CoxeterSystem,
    body: LinComb<Word>,
}

impl HeckeElt {
    /// The zero element.
    pub fn zero(sys: &CoxeterSystem) -> Self {
        HeckeElt {
            sys: sys.clone(),
            body: LinComb::zero(),
        }
    }

    /// The unit `g_1`.
    pub fn one(sys: &CoxeterSystem) -> Self {
        Self::basis(sys, Word::empty(), LaurentPoly::one())
    }

    /// `c g_w` for a key already in canonical form.
    fn basis(sys: &CoxeterSystem, key: Word, c: LaurentPoly) -> Self {
        HeckeElt {
            sys: sys.clone(),
            body: LinComb::term(key, c),
        }
    }

    /// `g_w` for the element represented by any word.
    pub fn g(sys: &CoxeterSystem, w: &Word) -> Result<Self> {
        let key = GroupElement::from_word(sys, w)?.canonical_word(sys);
        Ok(Self::basis(sys, key, LaurentPoly::one()))
    }

    /// `g_s`.
    pub fn generator(sys: &CoxeterSystem, s: Letter) -> Self {
        Self::basis(sys, Word(vec![s]), LaurentPoly::one())
    }

    /// A combination whose keys are converted to canonical words.
    pub fn from_terms(sys: &CoxeterSystem, terms: impl IntoIterator<Item = (Word, LaurentPoly)>) -> Result<Self> {
        let mut out = Self::zero(sys);
        for (w, c) in terms {
            let key = GroupElement::from_word(sys, &w)?.canonical_word(sys);
            out.body.add_term(key, &c);
        }
        Ok(out)
    }

    /// The system.
    pub fn system(&self) -> &CoxeterSystem {
        &self.sys
    }

    /// The coefficients keyed by canonical words.
    pub fn body(&self) -> &LinComb<Word> {
        &self.body
    }

    /// Coefficient of `g_w` for a canonical word `w`.
    pub fn coeff(&self, w: &Word) -> LaurentPoly {
        self.body.coeff(w)
    }

    /// True for zero.
    pub fn is_zero(&self) -> bool {
        self.body.is_zero()
    }

    fn check_same(&self, other: &HeckeElt) -> Result<()> {
        if self.sys != other.sys {
            return Err(Error::SystemMismatch);
        }
        Ok(())
    }

    /// Sum.
    pub fn add(&self, other: &HeckeElt) -> Result<Self> {
        self.check_same(other)?;
        Ok(HeckeElt {
            sys: self.sys.clone(),
            body: &self.body + &other.body,
        })
    }

    /// Difference.
    pub fn sub(&self, other: &HeckeElt) -> Result<Self> {
        self.check_same(other)?;
        Ok(HeckeElt {
            sys: self.sys.clone(),
            body: &self.body - &other.body,
        })
    }

    /// Scalar multiple.
    pub fn scale(&self, c: &LaurentPoly) -> Self {
        HeckeElt {
            sys: self.sys.clone(),
            body: self.body.scale(c),
        }
    }

    /// `g_s h`.
    pub fn mult_left_gen(&self, s: Letter) -> Self {
        let sys = &self.sys;
        let q = LaurentPoly::q();
        let qm1 = &q - &LaurentPoly::one();
        let mut out = LinComb::zero();
        for (w, c) in &self.body {
            let x = GroupElement::from_word(sys, w).expect("keys are valid words");
            let sw = x.gen_times(sys, s).canonical_word(sys);
            if x.has_left_descent(s) {
                out.add_term(sw, &(&q * c));
                out.add_term(w.clone(), &(&qm1 * c));
            } else {
                out.add_term(sw, c);
            }
        }
        HeckeElt {
            sys: sys.clone(),
            body: out,
        }
    }

    /// `g_{s_1} ... g_{s_k} h` for a word `s_1 ... s_k`.
    pub fn mult_left_word(&self, w: &Word) -> Self {
        w.letters().iter().rev().fold(self.clone(), |acc, &s| acc.mult_left_gen(s))
    }

    /// Product `self * other`.
    pub fn mult(&self, other: &HeckeElt) -> Result<Self> {
        self.check_same(other)?;
        let mut out = LinComb::zero();
        for (w, c) in &self.body {
            out.add_scaled(&other.mult_left_word(w).body, c);
        }
        Ok(HeckeElt {
            sys: self.sys.clone(),
            body: out,
        })
    }

    /// The image at `q = 1` in the group algebra.
    pub fn at_one(&self) -> BTreeMap<Word, BigInt> {
        self.body
            .iter()
            .map(|(w, c)| (w.clone(), c.at_one()))
            .filter(|(_, c)| *c != BigInt::from(0))
            .collect()
    }

    /// JSON list of `{"basis_word": [...], "coeff": {...}}`.
    pub fn to_json(&self) -> serde_json::Value {
        serde_json::Value::Array(
            self.body
                .iter()
                .map(|(w, c)| serde_json::json!({ "basis_word": self.sys.tokens(w), "coeff": c.to_json() }))
                .collect(),
        )
    }
}

impl fmt::Display for HeckeElt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.body.is_zero() {
            return f.write_str("0");
        }
        let parts: Vec<String> = self
            .body
            .iter()
            .map(|(w, c)| {
                let key = if w.is_empty() { "1".to_string() } else { self.sys.format(w).replace(' ', ".") };
                format!("({c}) g[{key}]")
            })
            .collect();
        f.write_str(&parts.join(" + "))
    }
}

/// `g_s^{-1} = p g_s + (p - 1)`.
pub fn gen_inverse(sys: &CoxeterSystem, s: Letter) -> HeckeElt {
    let p = LaurentPoly::p();
    let mut out = HeckeElt::generator(sys, s).scale(&p);
    out.body.add_term(Word::empty(), &(&p - &LaurentPoly::one()));
    out
}

/// Affine length of a basis key: the number of affine letters in its
/// canonical word.
pub fn key_affine_length(sys: &CoxeterSystem, w: &Word) -> Result<usize> {
    let a = sys
        .affine()
        .ok_or_else(|| Error::Domain(format!("{} has no affine generator", sys.name())))?;
    if sys.family() == crate::coxeter::Family::Dtilde && !crate::coxeter::is_fully_commutative(sys, &GroupElement::from_word(sys, w)?) {
        return Err(Error::Domain(format!(
            "affine length is not defined on the non fully commutative {}",
            sys.format(w)
        )));
    }
    Ok(w.count(a))
}

/// Split of a Hecke element by maximal affine length, then maximal length.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Leading {
    /// The largest affine length of a key.
    pub max_affine: usize,
    /// The terms of maximal affine length and, among those, maximal length.
    pub top: LinComb<Word>,
    /// Everything else.
    pub rest: LinComb<Word>,
}

/// Splits `h` into its top stratum and the rest.
pub fn leading_decomposition(h: &HeckeElt) -> Result<Leading> {
    let mut keyed = Vec::new();
    for (w, c) in h.body.iter() {
        keyed.push(((key_affine_length(&h.sys, w)?, w.len()), w.clone(), c.clone()));
    }
    let best = keyed.iter().map(|(k, _, _)| *k).max().unwrap_or((0, 0));
    let mut top = LinComb::zero();
    let mut rest = LinComb::zero();
    for (k, w, c) in keyed {
        if k == best {
            top.add_term(w, &c);
        } else {
            rest.add_term(w, &c);
        }
    }
    Ok(Leading {
        max_affine: best.0,
        top,
        rest,
    })
}

/// Column indices for basis words, longest first, so that a leading term of
/// maximal length is the first entry of its row.
pub(crate) fn longest_first<'a>(keys: impl Iterator<Item = &'a Word>) -> HashMap<&'a Word, usize> {
    let mut all: Vec<&Word> = keys.collect::<BTreeSet<_>>().into_iter().collect();
    all.sort_by(|a, b| b.len().cmp(&a.len()).then(a.cmp(b)));
    all.into_iter().enumerate().map(|(i, w)| (w, i)).collect()
}

/// True when the elements are linearly independent over `Z[q, q^{-1}]`.
pub fn check_independent(images: &[HeckeElt]) -> bool {
    let cols = longest_first(images.iter().flat_map(|h| h.body.keys()));
    let rows: Vec<Vec<(usize, LaurentPoly)>> = images
        .iter()
        .map(|h| h.body.iter().map(|(w, c)| (cols[w], c.clone())).collect())
        .collect();
    rows_independent(&rows)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coxeter::{enumerate_ball, Budget, Family};
    use proptest::prelude::*;

    fn b4() -> CoxeterSystem {
        CoxeterSystem::from_subscript(Family::Btilde, 3).unwrap()
    }

    #[test]
    fn quadratic_relation() {
        let sys = b4();
        let s = sys.sigma(1);
        let gs = HeckeElt::generator(&sys, s);
        assert_eq!(HeckeElt::one(&sys).mult_left_gen(s), gs);
        let sq = gs.mult(&gs).unwrap();
        let q = LaurentPoly::q();
        let want = HeckeElt::one(&sys).scale(&q).add(&gs.scale(&(&q - &LaurentPoly::one()))).unwrap();
        assert_eq!(sq, want);
        let g12 = gs.mult(&HeckeElt::generator(&sys, sys.sigma(2))).unwrap();
        assert_eq!(g12, HeckeElt::g(&sys, &sys.parse_word("s1 s2").unwrap()).unwrap());
        assert_eq!(sq.mult(&gs).unwrap(), gs.mult(&sq).unwrap());
    }

    #[test]
    fn inverse() {
        let sys = b4();
        for s in 0..sys.rank() as Letter {
            let inv = gen_inverse(&sys, s);
            let gs = HeckeElt::generator(&sys, s);
            assert_eq!(gs.mult(&inv).unwrap(), HeckeElt::one(&sys));
            assert_eq!(inv.mult(&gs).unwrap(), HeckeElt::one(&sys));
            let at1 = inv.at_one();
            assert_eq!(at1.len(), 1);
            assert_eq!(at1[&Word(vec![s])], BigInt::from(1));
        }
        // The sign-swapped `p g_s + (1 - p)` is not an inverse.
        let s = sys.sigma(1);
        let p = LaurentPoly::p();
        let mut swapped = HeckeElt::generator(&sys, s).scale(&p);
        swapped.body.add_term(Word::empty(), &(&LaurentPoly::one() - &p));
        assert_ne!(HeckeElt::generator(&sys, s).mult(&swapped).unwrap(), HeckeElt::one(&sys));
    }

    #[test]
    fn independence() {
        let sys = b4();
        let gs = HeckeElt::generator(&sys, 1);
        assert!(check_independent(&[HeckeElt::one(&sys), gs.clone()]));
        assert!(!check_independent(&[gs.clone(), gs.scale(&LaurentPoly::q())]));
    }

    #[test]
    fn leading_of_identity() {
        let sys = b4();
        let l = leading_decomposition(&HeckeElt::one(&sys)).unwrap();
        assert_eq!(l.max_affine, 0);
        assert_eq!(l.top, HeckeElt::one(&sys).body);
        assert!(l.rest.is_zero());
        let d = CoxeterSystem::from_subscript(Family::Dtilde, 4).unwrap();
        let braid = HeckeElt::g(&d, &d.parse_word("s2 sb3 s2").unwrap()).unwrap();
        assert!(leading_decomposition(&braid).is_err());
    }

    fn ball_words(sys: &CoxeterSystem, r: usize) -> Vec<Word> {
        enumerate_ball(sys, r, Budget::new(100_000))
            .unwrap()
            .into_iter()
            .map(|e| e.word)
            .collect()
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(40))]

        #[test]
        fn associative(a in 0usize..200, b in 0usize..200, c in 0usize..200) {
            let sys = b4();
            let ws = ball_words(&sys, 4);
            let g = |i: usize| HeckeElt::g(&sys, &ws[i % ws.len()]).unwrap();
            let (x, y, z) = (g(a), g(b), g(c));
            let left = x.mult(&y).unwrap().mult(&z).unwrap();
            let right = x.mult(&y.mult(&z).unwrap()).unwrap();
            prop_assert_eq!(left, right);
        }

        #[test]
        fn specializes_to_group_algebra(a in 0usize..200, b in 0usize..200) {
            let sys = b4();
            let ws = ball_words(&sys, 4);
            let (u, v) = (&ws[a % ws.len()], &ws[b % ws.len()]);
            let x = HeckeElt::g(&sys, u).unwrap().add(&HeckeElt::generator(&sys, 0).scale(&LaurentPoly::q())).unwrap();
            let y = HeckeElt::g(&sys, v).unwrap();
            let prod = x.mult(&y).unwrap().at_one();
            let mut want: BTreeMap<Word, BigInt> = BTreeMap::new();
            for (w, c) in x.at_one() {
                let e = GroupElement::from_word(&sys, &w).unwrap().mul(&GroupElement::from_word(&sys, v).unwrap());
                *want.entry(e.canonical_word(&sys)).or_insert_with(|| BigInt::from(0)) += c;
            }
            want.retain(|_, c| *c != BigInt::from(0));
            prop_assert_eq!(prod, want);
        }
    }
}
