//! Temperley-Lieb algebras on the fully commutative basis `{T_w}`.
//!
//! Products are reduced to the basis by the quadratic relation and by the
//! vanishing of `V(T_s, T_t)` (for `m(s,t) = 3`) and `Z(T_s, T_t)` (for
//! `m(s,t) = 4`).

pub mod lemmas;
pub mod tower;

use std::collections::HashMap;
use std::fmt;
use std::sync::Mutex;

use crate::coxeter::{is_fully_commutative, CoxeterSystem, GroupElement, Letter, Word};
use crate::error::{Error, Result};
use crate::laurent::{LaurentPoly, LinComb};

pub use tower::{check_faithful, check_tl_relations, tl_morphism_image, TLMorphism};

/// An element of a Temperley-Lieb algebra, keyed by canonical words of fully
/// commutative elements.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TLElt {
    sys: CoxeterSystem,
    body: LinComb<Word>,
}

impl TLElt {
    /// Zero.
    pub fn zero(sys: &CoxeterSystem) -> Self {
        TLElt {
            sys: sys.clone(),
            body: LinComb::zero(),
        }
    }

    /// The unit `T_1`.
    pub fn one(sys: &CoxeterSystem) -> Self {
        TLElt {
            sys: sys.clone(),
            body: LinComb::term(Word::empty(), LaurentPoly::one()),
        }
    }

    /// `T_w` for a fully commutative element given by any reduced word.
    pub fn basis(sys: &CoxeterSystem, w: &Word) -> Result<Self> {
        let x = GroupElement::from_word(sys, w)?;
        if x.length(sys) != w.len() {
            return Err(Error::NotReduced);
        }
        if !is_fully_commutative(sys, &x) {
            return Err(Error::NotFc);
        }
        Ok(TLElt {
            sys: sys.clone(),
            body: LinComb::term(x.canonical_word(sys), LaurentPoly::one()),
        })
    }

    /// Builds an element from canonical keys. Keys are trusted.
    pub fn from_body(sys: &CoxeterSystem, body: LinComb<Word>) -> Self {
        TLElt { sys: sys.clone(), body }
    }

    /// The system.
    pub fn system(&self) -> &CoxeterSystem {
        &self.sys
    }

    /// Coefficients keyed by canonical words.
    pub fn body(&self) -> &LinComb<Word> {
        &self.body
    }

    /// Coefficient of `T_w` for a canonical word `w`.
    pub fn coeff(&self, w: &Word) -> LaurentPoly {
        self.body.coeff(w)
    }

    /// True for zero.
    pub fn is_zero(&self) -> bool {
        self.body.is_zero()
    }

    fn check_same(&self, other: &TLElt) -> Result<()> {
        if self.sys != other.sys {
            return Err(Error::SystemMismatch);
        }
        Ok(())
    }

    /// Sum.
    pub fn add(&self, other: &TLElt) -> Result<Self> {
        self.check_same(other)?;
        Ok(TLElt {
            sys: self.sys.clone(),
            body: &self.body + &other.body,
        })
    }

    /// Difference.
    pub fn sub(&self, other: &TLElt) -> Result<Self> {
        self.check_same(other)?;
        Ok(TLElt {
            sys: self.sys.clone(),
            body: &self.body - &other.body,
        })
    }

    /// Scalar multiple.
    pub fn scale(&self, c: &LaurentPoly) -> Self {
        TLElt {
            sys: self.sys.clone(),
            body: self.body.scale(c),
        }
    }

    /// JSON list of `{"basis_word", "coeff", "fc": true}`.
    pub fn to_json(&self) -> serde_json::Value {
        serde_json::Value::Array(
            self.body
                .iter()
                .map(|(w, c)| {
                    serde_json::json!({ "basis_word": self.sys.tokens(w), "coeff": c.to_json(), "fc": true })
                })
                .collect(),
        )
    }
}

impl fmt::Display for TLElt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.body.is_zero() {
            return f.write_str("0");
        }
        let parts: Vec<String> = self
            .body
            .iter()
            .map(|(w, c)| {
                let key = if w.is_empty() { "1".to_string() } else { self.sys.format(w).replace(' ', ".") };
                format!("({c}) T[{key}]")
            })
            .collect();
        f.write_str(&parts.join(" + "))
    }
}

/// The reduction engine for one system, with a memo of `T_u T_s`.
#[derive(Debug)]
pub struct TLAlgebra {
    sys: CoxeterSystem,
    memo: Mutex<HashMap<(Word, Letter), LinComb<Word>>>,
}

impl TLAlgebra {
    /// A fresh engine.
    pub fn new(sys: &CoxeterSystem) -> Self {
        TLAlgebra {
            sys: sys.clone(),
            memo: Mutex::new(HashMap::new()),
        }
    }

    /// The system.
    pub fn system(&self) -> &CoxeterSystem {
        &self.sys
    }

    /// Nonempty elements of the parabolic subgroup `<s, t>` other than the
    /// longest one, as alternating words.
    fn dihedral_lower(s: Letter, t: Letter, m: usize) -> Vec<Word> {
        let mut out = vec![Word::empty()];
        for len in 1..m {
            for start in [s, t] {
                let other = if start == s { t } else { s };
                out.push(Word((0..len).map(|i| if i % 2 == 0 { start } else { other }).collect()));
            }
        }
        out
    }

    /// `T_u T_s` for a canonical fully commutative key `u`.
    pub fn basis_times_gen(&self, u: &Word, s: Letter) -> LinComb<Word> {
        let key = (u.clone(), s);
        if let Some(hit) = self.memo.lock().expect("memo lock").get(&key) {
            return hit.clone();
        }
        let out = self.compute_basis_times_gen(u, s);
        self.memo.lock().expect("memo lock").insert(key, out.clone());
        out
    }

    fn compute_basis_times_gen(&self, u: &Word, s: Letter) -> LinComb<Word> {
        let sys = &self.sys;
        let x = GroupElement::from_word(sys, u).expect("keys are valid words");
        let xs = x.times_gen(sys, s);
        if x.has_right_descent(s) {
            let q = LaurentPoly::q();
            let mut out = LinComb::term(xs.canonical_word(sys), q.clone());
            out.add_term(u.clone(), &(&q - &LaurentPoly::one()));
            return out;
        }
        if is_fully_commutative(sys, &xs) {
            return LinComb::term(xs.canonical_word(sys), LaurentPoly::one());
        }
        // A right descent r commuting with s moves past it: T_u T_s = T_{u'} T_s T_r.
        for r in 0..sys.rank() as Letter {
            if r != s && sys.order(r, s) == 2 && x.has_right_descent(r) {
                let mut y = x.clone();
                y.mul_gen_right(sys, r);
                let head = self.basis_times_gen(&y.canonical_word(sys), s);
                return self.mult_right_gen_body(&head, r);
            }
        }
        // u = u' (... t s t) with the alternating suffix of length m - 1, so
        // T_u T_s = T_{u'} T_{braid} and the braid is replaced through V or Z.
        for t in 0..sys.rank() as Letter {
            let m = sys.order(s, t) as usize;
            if t == s || !(3..=4).contains(&m) {
                continue;
            }
            let mut y = x.clone();
            let mut ok = true;
            for i in 0..m - 1 {
                let letter = if i % 2 == 0 { t } else { s };
                if !y.has_right_descent(letter) {
                    ok = false;
                    break;
                }
                y.mul_gen_right(sys, letter);
            }
            if !ok {
                continue;
            }
            let prefix = y.canonical_word(sys);
            let mut out = LinComb::zero();
            for d in Self::dihedral_lower(s, t, m) {
                let part = self.mult_right_word(&LinComb::term(prefix.clone(), LaurentPoly::one()), &d);
                out = &out - &part;
            }
            return out;
        }
        panic!(
            "no braid tail found for {} * {} although the product is not fully commutative",
            sys.format(u),
            sys.token(s)
        );
    }

    /// `h T_s`.
    pub fn mult_right_gen_body(&self, h: &LinComb<Word>, s: Letter) -> LinComb<Word> {
        let mut out = LinComb::zero();
        for (u, c) in h {
            out.add_scaled(&self.basis_times_gen(u, s), c);
        }
        out
    }

    /// `h T_{s_1} ... T_{s_k}`.
    pub fn mult_right_word(&self, h: &LinComb<Word>, w: &Word) -> LinComb<Word> {
        w.letters().iter().fold(h.clone(), |acc, &s| self.mult_right_gen_body(&acc, s))
    }

    /// `t T_s`.
    pub fn mult_right_gen(&self, t: &TLElt, s: Letter) -> Result<TLElt> {
        self.check(t)?;
        Ok(TLElt::from_body(&self.sys, self.mult_right_gen_body(&t.body, s)))
    }

    /// Image of an arbitrary word `s_1 ... s_k` as `T_{s_1} ... T_{s_k}`.
    pub fn reduce_word(&self, w: &Word) -> Result<TLElt> {
        self.sys.check_word(w)?;
        let one = LinComb::term(Word::empty(), LaurentPoly::one());
        Ok(TLElt::from_body(&self.sys, self.mult_right_word(&one, w)))
    }

    /// Product.
    pub fn mult(&self, a: &TLElt, b: &TLElt) -> Result<TLElt> {
        self.check(a)?;
        self.check(b)?;
        let mut out = LinComb::zero();
        for (v, c) in &b.body {
            out.add_scaled(&self.mult_right_word(&a.body, v), c);
        }
        Ok(TLElt::from_body(&self.sys, out))
    }

    /// `T_s^{-1} = p T_s + (p - 1)`.
    pub fn gen_inverse(&self, s: Letter) -> TLElt {
        let p = LaurentPoly::p();
        let mut body = LinComb::term(Word(vec![s]), p.clone());
        body.add_term(Word::empty(), &(&p - &LaurentPoly::one()));
        TLElt::from_body(&self.sys, body)
    }

    fn check(&self, t: &TLElt) -> Result<()> {
        if t.sys != self.sys {
            return Err(Error::SystemMismatch);
        }
        Ok(())
    }

    /// Number of memoized products.
    pub fn memo_len(&self) -> usize {
        self.memo.lock().expect("memo lock").len()
    }
}

/// `T_{s_1} ... T_{s_k}` with a fresh engine.
pub fn reduce_word(sys: &CoxeterSystem, w: &Word) -> Result<TLElt> {
    TLAlgebra::new(sys).reduce_word(w)
}

/// `V(x, y) = xyx + xy + yx + x + y + 1` evaluated through the engine.
pub fn eval_v(alg: &TLAlgebra, x: Letter, y: Letter) -> Result<TLElt> {
    eval_sum(alg, &[&[x, y, x], &[x, y], &[y, x], &[x], &[y], &[]])
}

/// `Z(x, y) = xyxy + xyx + yxy + xy + yx + x + y + 1` evaluated through the
/// engine.
pub fn eval_z(alg: &TLAlgebra, x: Letter, y: Letter) -> Result<TLElt> {
    eval_sum(
        alg,
        &[&[x, y, x, y], &[x, y, x], &[y, x, y], &[x, y], &[y, x], &[x], &[y], &[]],
    )
}

fn eval_sum(alg: &TLAlgebra, monomials: &[&[Letter]]) -> Result<TLElt> {
    let mut out = TLElt::zero(alg.system());
    for m in monomials {
        out = out.add(&alg.reduce_word(&Word(m.to_vec()))?)?;
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coxeter::{enumerate_ball, Budget, Family};
    use crate::normal_forms::enumerate_fc;
    use proptest::prelude::*;

    fn sys(f: Family, rank: usize) -> CoxeterSystem {
        CoxeterSystem::new(f, rank).unwrap()
    }

    fn lp(terms: &[(i32, i64)]) -> LaurentPoly {
        LaurentPoly::from_terms(terms.iter().map(|&(e, c)| (e, c)))
    }

    #[test]
    fn quadratic_and_braids() {
        let b = sys(Family::Btilde, 5);
        let alg = TLAlgebra::new(&b);
        let w = |s: &str| b.parse_word(s).unwrap();
        let r = alg.reduce_word(&w("s1 s1")).unwrap();
        assert_eq!(r.coeff(&w("s1")), lp(&[(1, 1), (0, -1)]));
        assert_eq!(r.coeff(&Word::empty()), LaurentPoly::q());
        let r = alg.reduce_word(&w("s1 s2 s1")).unwrap();
        assert_eq!(r.body().len(), 5);
        for k in ["s1 s2", "s2 s1", "s1", "s2", ""] {
            assert_eq!(r.coeff(&w(k)), LaurentPoly::constant(-1));
        }
        let r = alg.reduce_word(&w("s3 t s3 t")).unwrap();
        assert_eq!(r.body().len(), 7);
        for k in ["s3 t s3", "t s3 t", "s3 t", "t s3", "s3", "t", ""] {
            let key = GroupElement::from_word(&b, &w(k)).unwrap().canonical_word(&b);
            assert_eq!(r.coeff(&key), LaurentPoly::constant(-1));
        }
        let r = alg.reduce_word(&w("s1 s3")).unwrap();
        assert_eq!(r, TLElt::basis(&b, &w("s1 s3")).unwrap());
    }

    #[test]
    fn v_and_z_vanish() {
        let b = sys(Family::Btilde, 5);
        let alg = TLAlgebra::new(&b);
        assert!(eval_v(&alg, b.sigma_bar1(), b.sigma(2)).unwrap().is_zero());
        assert!(eval_z(&alg, b.sigma(3), b.affine().unwrap()).unwrap().is_zero());
        let g = alg.gen_inverse(b.sigma(2));
        let x = alg.mult(&TLElt::basis(&b, &Word(vec![b.sigma(2)])).unwrap(), &g).unwrap();
        assert_eq!(x, TLElt::one(&b));
    }

    #[test]
    fn d4_keys_stay_in_the_48() {
        let d = sys(Family::D, 4);
        let fc: std::collections::HashSet<Word> = enumerate_fc(&d, None, 0, Budget::new(10_000))
            .unwrap()
            .into_iter()
            .map(|e| e.canonical)
            .collect();
        assert_eq!(fc.len(), 48);
        let alg = TLAlgebra::new(&d);
        for e in enumerate_ball(&d, 12, Budget::new(10_000)).unwrap() {
            let r = alg.reduce_word(&e.word).unwrap();
            assert!(r.body().keys().all(|k| fc.contains(k)));
        }
    }

    fn word_strategy(rank: usize, len: usize) -> impl Strategy<Value = Vec<u8>> {
        proptest::collection::vec(0..rank as u8, 0..len)
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(64))]

        #[test]
        fn commutation_moves_do_not_matter(w in word_strategy(5, 9), pos in 0usize..8) {
            let b = sys(Family::Btilde, 5);
            let alg = TLAlgebra::new(&b);
            let mut v = w.clone();
            if pos + 1 < v.len() && b.commute(v[pos], v[pos + 1]) {
                v.swap(pos, pos + 1);
            }
            prop_assert_eq!(alg.reduce_word(&Word(w)).unwrap(), alg.reduce_word(&Word(v)).unwrap());
        }

        #[test]
        fn square_insertion(w in word_strategy(5, 8), pos in 0usize..8, s in 0u8..5) {
            let b = sys(Family::Btilde, 5);
            let alg = TLAlgebra::new(&b);
            let pos = pos.min(w.len());
            let with = |extra: &[u8]| {
                let mut v = w[..pos].to_vec();
                v.extend_from_slice(extra);
                v.extend_from_slice(&w[pos..]);
                alg.reduce_word(&Word(v)).unwrap()
            };
            let lhs = with(&[s, s]);
            let rhs = with(&[s]).scale(&lp(&[(1, 1), (0, -1)])).add(&with(&[]).scale(&LaurentPoly::q())).unwrap();
            prop_assert_eq!(lhs, rhs);
        }

        #[test]
        fn associative(a in word_strategy(5, 5), b_ in word_strategy(5, 5), c in word_strategy(5, 5)) {
            let b = sys(Family::Btilde, 5);
            let alg = TLAlgebra::new(&b);
            let (x, y, z) = (
                alg.reduce_word(&Word(a)).unwrap(),
                alg.reduce_word(&Word(b_)).unwrap(),
                alg.reduce_word(&Word(c)).unwrap(),
            );
            let left = alg.mult(&alg.mult(&x, &y).unwrap(), &z).unwrap();
            let right = alg.mult(&x, &alg.mult(&y, &z).unwrap()).unwrap();
            prop_assert_eq!(left, right);
        }
    }
}
