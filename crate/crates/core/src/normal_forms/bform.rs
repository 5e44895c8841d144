//! Normal forms of fully commutative elements of type B~.
//!
//! With `N` the largest sigma index and `t` the affine generator:
//!
//! * finite: an element of the parabolic subgroup of type `D_{N+1}`;
//! * affine length one: `<i,N] t v`;
//! * first type: `<i,N] t (<-N,N] t)^k <f,N]^{-1}` with `k >= 1`;
//! * second type: `<i_1,N] t ... <i_p,N] t <j_1,N] t ... <j_k,N] t w_r`
//!   where the `j_s` alternate between `1` and `-1`.

use std::fmt;

use serde_json::json;

use super::dform::{enumerate_valid, inverse_interval_param, DForm};
use super::interval::{interval, interval_len};
use super::peel::peel;
use crate::coxeter::{CoxeterSystem, Family, GroupElement, Side, Word};
use crate::error::{Error, Result};

/// A normal form in type B~.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum BForm {
    /// Affine length zero.
    Finite(DForm),
    /// `<i,N] t v`.
    AffineOne {
        /// Left endpoint of the interval before `t`.
        i: i32,
        /// The element after `t`.
        v: DForm,
    },
    /// `<i,N] t (<-N,N] t)^k <f,N]^{-1}`, affine length `k + 1`.
    FirstType {
        /// Left endpoint of the leading interval.
        i: i32,
        /// Number of repeated `<-N,N] t` factors.
        k: usize,
        /// Left endpoint of the trailing inverted interval.
        f: i32,
    },
    /// Second type, affine length `p + k`.
    SecondType {
        /// Left endpoints `i_1 > ... > |i_p|` of the leading blocks.
        i_list: Vec<i32>,
        /// Sign `j_1` of the first alternating block; `None` iff `k = 0`.
        j_start: Option<i32>,
        /// Number of alternating `<+-1,N] t` blocks.
        k: usize,
        /// The trailing element `w_r`.
        tail: DForm,
    },
}

fn check_system(sys: &CoxeterSystem) -> Result<()> {
    if sys.family() != Family::Btilde {
        return Err(Error::Domain(format!("{} is not of type B~", sys.name())));
    }
    if sys.n() < 3 {
        return Err(Error::Domain(format!(
            "normal forms are not provided for {}",
            sys.name()
        )));
    }
    Ok(())
}

fn invalid(msg: impl Into<String>) -> Error {
    Error::InvalidForm(msg.into())
}

/// Whether `<i, N] t s ...` can be fully commutative: the left descents of
/// `v` must lie in `{s_N}` together with `{sb1, s_1, ..., s_{i-1}}` for
/// `i >= 2`, `{s_1}` for `i = -1`, `{sb1}` for `i = 1`, and anything for
/// `i = N + 1`.
fn affine_one_allows(sys: &CoxeterSystem, i: i32, s: u8) -> bool {
    let n = sys.n();
    if s == sys.sigma(n) || i == n as i32 + 1 {
        return true;
    }
    match i {
        2.. => s == sys.sigma_bar1() || (1..i as usize).any(|q| sys.sigma(q) == s),
        1 => s == sys.sigma_bar1(),
        -1 => s == sys.sigma(1),
        _ => false,
    }
}

/// A condition on the left endpoints of `v` alone: for `i > 1` each
/// `m_j` equals `N - j + 1` or has `|m_j| < i`; for `i = +-1`, `v` is an
/// inverse interval or alternates starting from `-i`; otherwise `v` is an
/// inverse interval. It is sufficient but misses the elements where `v`
/// has two left descents.
pub fn affine_one_endpoint_rule(i: i32, v: &DForm, n: usize) -> bool {
    let nn = n as i32;
    if i > 1 {
        v.terms
            .iter()
            .enumerate()
            .all(|(idx, &(m, _))| m == nn - idx as i32 || m.abs() < i)
    } else if i == 1 || i == -1 {
        is_inverse_interval_form(v, n) || v.is_alternating_from(-i)
    } else {
        is_inverse_interval_form(v, n)
    }
}

impl BForm {
    /// Class name used in JSON output.
    pub fn class_name(&self) -> &'static str {
        match self {
            BForm::Finite(_) => "finite",
            BForm::AffineOne { .. } => "affine1",
            BForm::FirstType { .. } => "first",
            BForm::SecondType { .. } => "second",
        }
    }

    /// Affine length given by the closed formula.
    pub fn affine_length(&self) -> usize {
        match self {
            BForm::Finite(_) => 0,
            BForm::AffineOne { .. } => 1,
            BForm::FirstType { k, .. } => k + 1,
            BForm::SecondType { i_list, k, .. } => i_list.len() + k,
        }
    }

    /// The `j_s` values of a second type form.
    pub fn j_values(&self) -> Vec<i32> {
        match self {
            BForm::SecondType {
                j_start: Some(j), k, ..
            } => (0..*k).map(|s| if s % 2 == 0 { *j } else { -*j }).collect(),
            _ => Vec::new(),
        }
    }

    /// The rendered reduced word.
    pub fn word(&self, sys: &CoxeterSystem) -> Result<Word> {
        check_system(sys)?;
        let n = sys.n();
        let t = sys.affine().expect("B~ has t");
        let mut out: Vec<u8> = Vec::new();
        let push_block = |out: &mut Vec<u8>, m: i32| -> Result<()> {
            out.extend_from_slice(interval(sys, m, n)?.letters());
            out.push(t);
            Ok(())
        };
        match self {
            BForm::Finite(v) => out.extend_from_slice(v.word(sys)?.letters()),
            BForm::AffineOne { i, v } => {
                push_block(&mut out, *i)?;
                out.extend_from_slice(v.word(sys)?.letters());
            }
            BForm::FirstType { i, k, f } => {
                push_block(&mut out, *i)?;
                for _ in 0..*k {
                    push_block(&mut out, -(n as i32))?;
                }
                out.extend_from_slice(interval(sys, *f, n)?.reversed().letters());
            }
            BForm::SecondType { i_list, tail, .. } => {
                for &i in i_list {
                    push_block(&mut out, i)?;
                }
                for j in self.j_values() {
                    push_block(&mut out, j)?;
                }
                out.extend_from_slice(tail.word(sys)?.letters());
            }
        }
        Ok(Word(out))
    }

    /// Length of the rendered word.
    pub fn length(&self, n: usize) -> usize {
        let nn = n as i32;
        match self {
            BForm::Finite(v) => v.len(),
            BForm::AffineOne { i, v } => interval_len(*i, n) + 1 + v.len(),
            BForm::FirstType { i, k, f } => {
                interval_len(*i, n) + 1 + k * (interval_len(-nn, n) + 1) + interval_len(*f, n)
            }
            BForm::SecondType { i_list, tail, .. } => {
                i_list.iter().map(|&i| interval_len(i, n) + 1).sum::<usize>()
                    + self.j_values().iter().map(|&j| interval_len(j, n) + 1).sum::<usize>()
                    + tail.len()
            }
        }
    }

    /// Checks every constraint of the normal form.
    pub fn validate(&self, sys: &CoxeterSystem) -> Result<()> {
        check_system(sys)?;
        let n = sys.n();
        let nn = n as i32;
        let in_range = |x: i32| -nn <= x && x <= nn + 1;
        match self {
            BForm::Finite(v) => v.validate(n),
            BForm::FirstType { i, k, f } => {
                if !in_range(*i) {
                    return Err(invalid(format!("first type: i = {i} outside [-{n}, {}]", n + 1)));
                }
                if !in_range(*f) {
                    return Err(invalid(format!("first type: f = {f} outside [-{n}, {}]", n + 1)));
                }
                if *k == 0 {
                    return Err(invalid("first type: k must be at least 1"));
                }
                Ok(())
            }
            BForm::AffineOne { i, v } => {
                if !in_range(*i) {
                    return Err(invalid(format!("affine length one: i = {i} outside [-{n}, {}]", n + 1)));
                }
                v.validate(n)?;
                let g = GroupElement::from_word(sys, &v.word(sys)?)?;
                for s in g.descents(Side::Left) {
                    if !affine_one_allows(sys, *i, s) {
                        return Err(invalid(format!(
                            "affine length one: v has left descent {} not allowed after <{i},{n}]",
                            sys.token(s)
                        )));
                    }
                }
                Ok(())
            }
            BForm::SecondType {
                i_list,
                j_start,
                k,
                tail,
            } => {
                let p = i_list.len();
                if p + k < 2 {
                    return Err(invalid("second type: affine length p + k must be at least 2"));
                }
                if j_start.is_some() != (*k > 0) {
                    return Err(invalid("second type: j_1 is set exactly when k > 0"));
                }
                if let Some(j) = j_start {
                    if j.abs() != 1 {
                        return Err(invalid("second type: j_1 must be 1 or -1"));
                    }
                }
                tail.validate(n)?;
                if p > 0 {
                    if i_list[0] > nn + 1 {
                        return Err(invalid(format!("second type: i_1 = {} exceeds {}", i_list[0], n + 1)));
                    }
                    for w in i_list.windows(2) {
                        if w[0] <= w[1].abs() {
                            return Err(invalid(format!(
                                "second type: i sequence {i_list:?} is not strictly decreasing"
                            )));
                        }
                    }
                    let ip = i_list[p - 1];
                    if ip.abs() == 1 {
                        return Err(invalid("second type: |i_p| = 1 belongs to the alternating part"));
                    }
                    if ip < -nn {
                        return Err(invalid(format!("second type: i_p = {ip} below -{n}")));
                    }
                    if ip <= 0 {
                        if *k != 0 {
                            return Err(invalid("second type: i_p <= 0 forces k = 0"));
                        }
                        if !tail.is_identity() {
                            return Err(invalid("second type: i_p <= 0 forces w_r = 1"));
                        }
                        if ip == -nn {
                            return Err(invalid(format!("second type: i_p = -{n} is excluded")));
                        }
                    }
                    if *k == 0 && ip > 0 {
                        if let Some(m1) = tail.first_m() {
                            if m1.abs() >= ip {
                                return Err(invalid(format!(
                                    "second type: |m_1| = {} must be below i_p = {ip}",
                                    m1.abs()
                                )));
                            }
                        }
                    }
                }
                if *k > 0 {
                    let jk = *self.j_values().last().unwrap();
                    if !tail.is_alternating_from(-jk) {
                        return Err(invalid(format!(
                            "second type: w_r must alternate +-1 starting with {}",
                            -jk
                        )));
                    }
                }
                Ok(())
            }
        }
    }

    /// JSON parameters.
    pub fn params_json(&self) -> serde_json::Value {
        match self {
            BForm::Finite(v) => json!({ "v": dform_json(v) }),
            BForm::AffineOne { i, v } => json!({ "i": i, "v": dform_json(v) }),
            BForm::FirstType { i, k, f } => json!({ "i": i, "k": k, "f": f }),
            BForm::SecondType {
                i_list,
                j_start,
                k,
                tail,
            } => json!({
                "p": i_list.len(),
                "i": i_list,
                "j_start": j_start,
                "k": k,
                "w_r": dform_json(tail),
            }),
        }
    }
}

/// JSON encoding of a D-form as a list of `[m, n]` pairs.
pub fn dform_json(v: &DForm) -> serde_json::Value {
    json!(v.terms.iter().map(|&(m, k)| json!([m, k])).collect::<Vec<_>>())
}

fn is_inverse_interval_form(v: &DForm, n: usize) -> bool {
    inverse_interval_params(n).iter().any(|(_, f)| f == v)
}

/// The D-form of `<h,n]^{-1}` for every `h`.
pub fn inverse_interval_params(n: usize) -> Vec<(i32, DForm)> {
    let nn = n as i32;
    (-nn..=nn + 1)
        .map(|h| {
            let mut terms: Vec<(i32, usize)> = Vec::new();
            if h == nn + 1 {
            } else if h >= 1 {
                for k in (h as usize..=n).rev() {
                    terms.push((k as i32, k));
                }
            } else if h == -1 || h == 0 {
                // s_n ... s_2 sb1 (h = -1) or s_n ... s_2 sb1 s_1 (h = 0).
                for k in (2..=n).rev() {
                    terms.push((k as i32, k));
                }
                terms.push((if h == -1 { -1 } else { 0 }, 1));
            } else {
                // s_n ... s_2 sb1 s_1 s_2 ... s_|h| = <n,n]...<|h|+1,|h|+1] <-|h|,|h|]
                let a = (-h) as usize;
                for k in (a + 1..=n).rev() {
                    terms.push((k as i32, k));
                }
                terms.push((h, a));
            }
            (h, DForm::new(terms))
        })
        .collect()
}

/// Parses a fully commutative element of `B~` into its normal form.
pub fn parse_b(sys: &CoxeterSystem, x: &GroupElement) -> Result<BForm> {
    check_system(sys)?;
    let n = sys.n();
    let t = sys.affine().unwrap();
    let peeled = peel(sys, x, t)?;
    let mut seq = Vec::with_capacity(peeled.blocks.len());
    for b in &peeled.blocks {
        let g = GroupElement::from_word(sys, b)?;
        let f = DForm::parse(sys, &g, n)?;
        let i = match f.terms.as_slice() {
            [] => n as i32 + 1,
            [(m, k)] if *k == n => *m,
            _ => return Err(Error::Domain(format!("unexpected block {f}"))),
        };
        seq.push(i);
    }
    let tail_el = GroupElement::from_word(sys, &peeled.tail)?;
    let tail = DForm::parse(sys, &tail_el, n)?;
    classify_b(sys, &seq, tail, &tail_el)
}

/// Classifies a block sequence `(i_1, ..., i_m)` with tail into a form.
pub fn classify_b(sys: &CoxeterSystem, seq: &[i32], tail: DForm, tail_el: &GroupElement) -> Result<BForm> {
    let n = sys.n();
    let nn = n as i32;
    let m = seq.len();
    let form = match m {
        0 => BForm::Finite(tail),
        1 => BForm::AffineOne { i: seq[0], v: tail },
        _ if seq[1..].iter().all(|&s| s == -nn) => {
            let f = inverse_interval_param(sys, tail_el, n)
                .ok_or_else(|| Error::Domain(format!("first type tail {tail} is not <f,{n}]^-1")))?;
            BForm::FirstType {
                i: seq[0],
                k: m - 1,
                f,
            }
        }
        _ => {
            let run = seq.iter().rev().take_while(|s| s.abs() == 1).count();
            let p = m - run;
            BForm::SecondType {
                i_list: seq[..p].to_vec(),
                j_start: (run > 0).then(|| seq[p]),
                k: run,
                tail,
            }
        }
    };
    Ok(form)
}

/// Every valid form with length at most `max_len` and affine length at most
/// `max_affine`.
pub fn grid_b(sys: &CoxeterSystem, max_len: Option<usize>, max_affine: usize) -> Result<Vec<BForm>> {
    check_system(sys)?;
    let n = sys.n();
    let nn = n as i32;
    let fits = |l: usize| max_len.is_none_or(|ml| l <= ml);
    let tails = enumerate_valid(n, max_len);
    let mut out = Vec::new();
    for v in &tails {
        out.push(BForm::Finite(v.clone()));
    }
    if max_affine >= 1 {
        for i in -nn..=nn + 1 {
            for v in &tails {
                out.push(BForm::AffineOne { i, v: v.clone() });
            }
        }
    }
    for k in 1..max_affine {
        for i in -nn..=nn + 1 {
            for f in -nn..=nn + 1 {
                out.push(BForm::FirstType { i, k, f });
            }
        }
    }
    // Second type: decreasing sequences i_1 > |i_2| ..., then alternating j.
    let mut seqs: Vec<Vec<i32>> = vec![Vec::new()];
    let mut frontier: Vec<Vec<i32>> = vec![Vec::new()];
    for _ in 0..max_affine {
        let mut next = Vec::new();
        for s in &frontier {
            if s.last().is_some_and(|&x| x <= 1) {
                continue;
            }
            let hi = s.last().map_or(nn + 1, |&x| x - 1);
            for x in -nn..=hi {
                if s.last().is_some_and(|&l| l <= x.abs()) || x.abs() == 1 {
                    continue;
                }
                let mut v = s.clone();
                v.push(x);
                next.push(v);
            }
        }
        seqs.extend(next.iter().cloned());
        frontier = next;
    }
    for i_list in &seqs {
        let p = i_list.len();
        for k in 0..=max_affine.saturating_sub(p) {
            if p + k < 2 {
                continue;
            }
            let starts: Vec<Option<i32>> = if k == 0 { vec![None] } else { vec![Some(1), Some(-1)] };
            for j_start in starts {
                for v in &tails {
                    out.push(BForm::SecondType {
                        i_list: i_list.clone(),
                        j_start,
                        k,
                        tail: v.clone(),
                    });
                }
            }
        }
    }
    Ok(out
        .into_iter()
        .filter(|f| fits(f.length(n)) && f.affine_length() <= max_affine && f.validate(sys).is_ok())
        .collect())
}

impl fmt::Display for BForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            BForm::Finite(v) => write!(f, "finite {v}"),
            BForm::AffineOne { i, v } => write!(f, "affine1 i={i} v={v}"),
            BForm::FirstType { i, k, f: ff } => write!(f, "first i={i} k={k} f={ff}"),
            BForm::SecondType {
                i_list,
                j_start,
                k,
                tail,
            } => write!(f, "second i={i_list:?} j1={j_start:?} k={k} w_r={tail}"),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coxeter::{enumerate_ball, is_fully_commutative, is_reduced, Budget};
    use std::collections::HashSet;

    fn brute_force(rank: usize, max_len: usize) -> usize {
        let sys = CoxeterSystem::new(Family::Btilde, rank).unwrap();
        let ball = enumerate_ball(&sys, max_len, Budget::new(10_000_000)).unwrap();
        let mut fc = HashSet::new();
        for e in ball.iter().filter(|e| is_fully_commutative(&sys, &e.element)) {
            let f = parse_b(&sys, &e.element).unwrap();
            let g = GroupElement::from_word(&sys, &f.word(&sys).unwrap()).unwrap();
            assert_eq!(g, e.element, "{f}");
            f.validate(&sys).unwrap_or_else(|err| panic!("{f}: {err}"));
            fc.insert(e.element.clone());
        }
        let mut seen = HashSet::new();
        for f in grid_b(&sys, Some(max_len), max_len).unwrap() {
            let w = f.word(&sys).unwrap();
            assert!(is_reduced(&sys, &w).unwrap(), "{f}");
            let g = GroupElement::from_word(&sys, &w).unwrap();
            assert!(fc.contains(&g), "{f}");
            assert!(seen.insert(g), "duplicate {f}");
        }
        assert_eq!(seen.len(), fc.len());
        fc.len()
    }

    #[test]
    fn bijective_on_small_balls() {
        assert_eq!(brute_force(5, 9), brute_force(5, 9));
        brute_force(6, 7);
    }

    #[test]
    fn endpoint_rule_is_sufficient_but_not_necessary() {
        let sys = CoxeterSystem::new(Family::Btilde, 5).unwrap();
        let n = sys.n();
        let mut missed = 0;
        for i in -(n as i32)..=n as i32 + 1 {
            for v in enumerate_valid(n, None) {
                let f = BForm::AffineOne { i, v: v.clone() };
                let ok = f.validate(&sys).is_ok();
                if affine_one_endpoint_rule(i, &v, n) {
                    assert!(ok, "{f}");
                } else if ok {
                    missed += 1;
                }
            }
        }
        assert_eq!(missed, 9);
    }

    #[test]
    fn inverse_interval_forms_match_words() {
        let sys = CoxeterSystem::new(Family::Btilde, 6).unwrap();
        let n = sys.n();
        for (h, form) in inverse_interval_params(n) {
            let g = GroupElement::from_word(&sys, &form.word(&sys).unwrap()).unwrap();
            let want = GroupElement::from_word(&sys, &interval(&sys, h, n).unwrap().reversed()).unwrap();
            assert_eq!(g, want, "h = {h}");
            assert_eq!(DForm::parse(&sys, &want, n).unwrap(), form);
        }
    }

    #[test]
    fn examples() {
        let sys = CoxeterSystem::new(Family::Btilde, 5).unwrap();
        let parse = |s: &str| {
            let g = GroupElement::from_word(&sys, &sys.parse_word(s).unwrap()).unwrap();
            parse_b(&sys, &g).unwrap()
        };
        assert_eq!(parse("t"), BForm::AffineOne { i: 4, v: DForm::identity() });
        assert_eq!(
            parse("sb1 s2 s3 t s1 s2 s3 t"),
            BForm::SecondType {
                i_list: vec![],
                j_start: Some(-1),
                k: 2,
                tail: DForm::identity()
            }
        );
        assert_eq!(
            parse("s3 s2 s1 sb1 s2 s3 t s3 s2"),
            BForm::AffineOne {
                i: -3,
                v: DForm::new(vec![(3, 3), (2, 2)])
            }
        );
        assert_eq!(
            parse("s3 s2 s1 sb1 s2 s3 t s3 s2 s1 sb1 s2 s3 t s3 s2"),
            BForm::FirstType { i: -3, k: 1, f: 2 }
        );
    }
}
