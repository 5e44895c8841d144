//! Leading-term structure of `Q_n(h_w)` and `P_n(h_w)`.

use super::tower::TLMorphism;
use super::TLElt;
use crate::coxeter::{Budget, CoxeterSystem, Family, Generator, GroupElement, Word};
use crate::error::{Error, Result};
use crate::hecke::HeckeMap;
use crate::laurent::LaurentPoly;
use crate::normal_forms::dform::DForm;
use crate::normal_forms::{enumerate_fc, parse, parse_word, DAffForm, NormalForm};
use crate::towers::{is_w1_or_finite, map_i, map_j, Report};

fn canonical(sys: &CoxeterSystem, w: &Word) -> Result<Word> {
    Ok(GroupElement::from_word(sys, w)?.canonical_word(sys))
}

fn key_of(sys: &CoxeterSystem, f: &NormalForm) -> Result<Word> {
    canonical(sys, &f.word(sys)?)
}

fn p_pow(k: usize) -> LaurentPoly {
    LaurentPoly::monomial(1, -(k as i32))
}

fn neg_one_pow(k: usize) -> LaurentPoly {
    LaurentPoly::constant(if k % 2 == 0 { 1 } else { -1 })
}

/// Compares an image with an expected list of `(word, coefficient)` terms.
fn compare_exact(sys: &CoxeterSystem, got: &TLElt, want: &[(&str, LaurentPoly)]) -> Result<Report> {
    let mut report = Report::default();
    let mut expected = TLElt::zero(sys);
    for (w, c) in want {
        expected = expected.add(&TLElt::basis(sys, &sys.parse_word(w)?)?.scale(c))?;
        let key = canonical(sys, &sys.parse_word(w)?)?;
        let have = got.coeff(&key);
        report.record(have == *c, || format!("coefficient of T[{w}] is {have}, expected {c}"));
    }
    report.record(got.body().len() == want.len(), || {
        format!("{} terms instead of {}", got.body().len(), want.len())
    });
    report.record(*got == expected, || format!("expansion {got} differs"));
    Ok(report)
}

/// `Q_n(h_t) = p T_{s t s} + (p - 1) T_{s t}` with `s` the new generator.
pub fn check_basic_b(src: &CoxeterSystem) -> Result<Report> {
    let m = TLMorphism::new(HeckeMap::Q, src)?;
    let tgt = m.target().clone();
    let img = m.image(&Word(vec![src.index(Generator::T)]))?;
    let s = tgt.token(tgt.sigma(src.n() + 1));
    let p = LaurentPoly::p();
    compare_exact(
        &tgt,
        &img,
        &[
            (&format!("{s} t {s}"), p.clone()),
            (&format!("{s} t"), &p - &LaurentPoly::one()),
        ],
    )
}

/// The thirteen-term expansion of `P_n(h_a)` for the affine generator `a`.
pub fn check_basic_d(src: &CoxeterSystem) -> Result<Report> {
    let m = TLMorphism::new(HeckeMap::P, src)?;
    let tgt = m.target().clone();
    let img = m.image(&Word(vec![src.affine().expect("affine letter")]))?;
    let n = tgt.token(tgt.sigma(tgt.n()));
    let n1 = tgt.token(tgt.sigma(tgt.n() - 1));
    let b = tgt.token(tgt.affine().expect("affine letter"));
    let p = LaurentPoly::p();
    let p2 = &p * &p;
    let want: Vec<(String, LaurentPoly)> = vec![
        (format!("{n} {n1} {b}"), LaurentPoly::one()),
        (format!("{n1} {b} {n}"), p.clone()),
        (format!("{n} {b} {n1}"), p.clone()),
        (format!("{b} {n1} {n}"), p2.clone()),
        (format!("{n} {n1}"), p.clone()),
        (format!("{n1} {n}"), p2.clone()),
        (format!("{n1} {b}"), p.clone()),
        (format!("{b} {n1}"), p2.clone()),
        (format!("{b} {n}"), &p2 + &p),
        (n.clone(), p2.clone()),
        (n1.clone(), p2.clone()),
        (b.clone(), p2.clone()),
        (String::new(), &p2 - &p),
    ];
    let want: Vec<(&str, LaurentPoly)> = want.iter().map(|(w, c)| (w.as_str(), c.clone())).collect();
    compare_exact(&tgt, &img, &want)
}

/// Reports for the type B~ expansions.
#[derive(Debug, Clone, Default)]
pub struct BReports {
    /// Affine length zero: the image is `T_w` itself.
    pub finite: Report,
    /// Affine length one and first type: top term `p^L T_{I(w)}`.
    pub formula_b: Report,
    /// Second type: top terms `(-1)^L T_{I(w)}` and `(-p)^L T_{J(w)}`.
    pub formula_2b: Report,
    /// Second type beginning and ending with `t`: the other terms of affine
    /// length `L` carry the left factor `T_t T_s T_t`.
    pub precise_b: Report,
}

/// Checks the type B~ expansions for all fully commutative `w` with
/// `l(w) <= max_len` and `L(w) <= max_affine`.
pub fn check_formulas_b(src: &CoxeterSystem, max_len: usize, max_affine: usize, budget: Budget) -> Result<BReports> {
    if src.family() != Family::Btilde {
        return Err(Error::Domain(format!("{} is not of type B~", src.name())));
    }
    let m = TLMorphism::new(HeckeMap::Q, src)?;
    let tgt = m.target().clone();
    let t = tgt.affine().expect("affine letter");
    let s = tgt.sigma(src.n() + 1);
    let mut out = BReports::default();
    for e in enumerate_fc(src, Some(max_len), max_affine, budget)? {
        let img = m.image(&e.word)?;
        let big_l = e.affine_length();
        let (_, fi) = map_i(src, &e.form)?;
        let ki = key_of(&tgt, &fi)?;
        let li = ki.len();
        let name = || src.format(&e.word);
        if big_l == 0 {
            let ok = img == TLElt::basis(&tgt, &ki)?;
            out.finite.record(ok, || format!("Q(h_{}) is not T_w", name()));
            continue;
        }
        if is_w1_or_finite(&e.form) {
            let mut ok = img.coeff(&ki) == p_pow(big_l);
            for (x, _) in img.body() {
                if x != &ki {
                    ok &= x.count(t) <= big_l && x.len() < li;
                }
            }
            out.formula_b.record(ok, || format!("leading term of Q(h_{}) is not p^L T_I(w)", name()));
            continue;
        }
        let (_, fj) = map_j(src, &e.form)?;
        let kj = key_of(&tgt, &fj)?;
        let mut ok = img.coeff(&ki) == neg_one_pow(big_l);
        let minus_p = LaurentPoly::monomial(if big_l % 2 == 0 { 1 } else { -1 }, -(big_l as i32));
        ok &= img.coeff(&kj) == minus_p;
        let mut others = Vec::new();
        for (x, _) in img.body() {
            if x != &ki && x != &kj {
                let lx = x.count(t);
                ok &= lx < big_l || (lx == big_l && x.len() < li);
                if lx == big_l {
                    others.push(x.clone());
                }
            }
        }
        out.formula_2b.record(ok, || format!("leading terms of Q(h_{}) do not match", name()));
        let letters = e.word.letters();
        let src_t = src.affine().expect("affine letter");
        if letters.first() == Some(&src_t) && letters.last() == Some(&src_t) {
            let mut ok = true;
            for x in &others {
                let mut y = GroupElement::from_word(&tgt, x)?;
                for g in [t, s, t] {
                    ok &= y.has_left_descent(g);
                    y.mul_gen_left(&tgt, g);
                }
            }
            out.precise_b.record(ok, || format!("stratum L of Q(h_{}) lacks the factor T_t T_s T_t", name()));
        }
    }
    Ok(out)
}

/// Reports for the type D~ expansions.
#[derive(Debug, Clone, Default)]
pub struct DReports {
    /// Affine length zero: the image is `T_w` itself.
    pub finite: Report,
    /// Affine length at least two.
    pub formula_lge2: Report,
    /// Affine length one.
    pub formula_d: Report,
}

/// Whether the target form `x` of affine length one is `I(w)` for some `w`.
pub fn in_image_of_i(src: &CoxeterSystem, x: &NormalForm) -> Result<bool> {
    let NormalForm::Daff(DAffForm::AffineOne { i, j, v }) = x else {
        return Ok(false);
    };
    let n = src.n() as i32;
    let mut candidates = vec![DAffForm::AffineOne {
        i: *i,
        j: *j,
        v: v.clone(),
    }];
    if v.terms.first() == Some(&(n + 1, src.n() + 1)) {
        let rest = DForm::new(v.terms[1..].to_vec());
        candidates.push(DAffForm::AffineOne {
            i: n + 1,
            j: *j,
            v: rest.clone(),
        });
        candidates.push(DAffForm::AffineOne {
            i: n,
            j: -(n - 1),
            v: rest,
        });
    }
    for c in candidates {
        let c = NormalForm::Daff(c);
        if c.validate(src).is_ok() && map_i(src, &c)?.1 == *x {
            return Ok(true);
        }
    }
    Ok(false)
}

/// Checks the type D~ expansions for all fully commutative `w` with
/// `l(w) <= max_len` and `L(w) <= max_affine`.
pub fn check_formulas_d(src: &CoxeterSystem, max_len: usize, max_affine: usize, budget: Budget) -> Result<DReports> {
    if src.family() != Family::Dtilde {
        return Err(Error::Domain(format!("{} is not of type D~", src.name())));
    }
    let m = TLMorphism::new(HeckeMap::P, src)?;
    let tgt = m.target().clone();
    let a = tgt.affine().expect("affine letter");
    let nn = src.n() as i32;
    let sn = src.sigma(src.n());
    let mut out = DReports::default();
    for e in enumerate_fc(src, Some(max_len), max_affine, budget)? {
        let img = m.image(&e.word)?;
        let big_l = e.affine_length();
        let (_, fi) = map_i(src, &e.form)?;
        let ki = key_of(&tgt, &fi)?;
        let li = ki.len();
        let name = || src.format(&e.word);
        match &e.form {
            NormalForm::Daff(DAffForm::Finite(_)) => {
                let ok = img == TLElt::basis(&tgt, &ki)?;
                out.finite.record(ok, || format!("P(h_{}) is not T_w", name()));
            }
            NormalForm::Daff(DAffForm::FirstType { .. }) => {
                let mut ok = img.coeff(&ki) == p_pow(big_l);
                for (x, _) in img.body() {
                    if x != &ki {
                        ok &= x.count(a) <= big_l && x.len() < li;
                    }
                }
                out.formula_lge2.record(ok, || format!("leading term of P(h_{}) is not p^L T_I(w)", name()));
            }
            NormalForm::Daff(DAffForm::SecondType { .. }) => {
                let (_, fj) = map_j(src, &e.form)?;
                let kj = key_of(&tgt, &fj)?;
                let mut ok = img.coeff(&ki).is_one() && img.coeff(&kj) == p_pow(2 * big_l);
                for (x, _) in img.body() {
                    if x != &ki && x != &kj {
                        let lx = x.count(a);
                        ok &= lx < big_l || (lx == big_l && x.len() < li);
                    }
                }
                out.formula_lge2.record(ok, || format!("leading terms of P(h_{}) do not match", name()));
            }
            NormalForm::Daff(DAffForm::AffineOne { i, j, v }) => {
                let in_d_minus = !v.word(src)?.letters().contains(&sn);
                let mut expected: Vec<(Word, LaurentPoly)> = Vec::new();
                if *i == nn + 1 || crate::towers::ij::extra_affine_one(src, *i, *j, v)? {
                    expected.push((ki.clone(), LaurentPoly::p()));
                } else if !in_d_minus {
                    expected.push((ki.clone(), LaurentPoly::one()));
                } else {
                    expected.push((ki.clone(), LaurentPoly::one()));
                    let mut bar = crate::normal_forms::interval(src, *i, src.n() - 1)?.letters().to_vec();
                    bar.push(src.affine().expect("affine letter"));
                    bar.extend_from_slice(crate::normal_forms::interval(src, *j, src.n())?.letters());
                    bar.extend_from_slice(v.word(src)?.letters());
                    let fbar = parse_word(src, &Word(bar))?;
                    let (_, ibar) = map_i(src, &fbar)?;
                    expected.push((key_of(&tgt, &ibar)?, LaurentPoly::p()));
                }
                let mut ok = expected.iter().all(|(k, c)| img.coeff(k) == *c);
                for (x, _) in img.body() {
                    if expected.iter().any(|(k, _)| k == x) {
                        continue;
                    }
                    ok &= x.count(a) <= 1 && x.len() <= li;
                    if x.len() == li && x.count(a) == 1 {
                        let xf = parse(&tgt, &GroupElement::from_word(&tgt, x)?)?;
                        ok &= !in_image_of_i(src, &xf)?;
                    }
                }
                out.formula_d.record(ok, || format!("top stratum of P(h_{}) does not match", name()));
            }
            _ => return Err(Error::SystemMismatch),
        }
    }
    Ok(out)
}
