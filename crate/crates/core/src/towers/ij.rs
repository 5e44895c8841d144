//! The injections `I` and `J` between fully commutative elements of
//! consecutive ranks in types B~ and D~.

use std::collections::{HashMap, HashSet};
use std::fmt;
use std::str::FromStr;

use super::Report;
use crate::coxeter::{Budget, CoxeterSystem, Family, Generator, GroupElement, Letter, Word};
use crate::error::{Error, Result};
use crate::normal_forms::dform::DForm;
use crate::normal_forms::{bform::classify_b, dtilde::classify_d, enumerate_fc, parse, BForm, DAffForm, NormalForm};

/// Which of the two injections.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Injection {
    /// The map `I`.
    I,
    /// The map `J`.
    J,
}

impl fmt::Display for Injection {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Injection::I => "I",
            Injection::J => "J",
        })
    }
}

impl FromStr for Injection {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "I" => Ok(Injection::I),
            "J" => Ok(Injection::J),
            _ => Err(Error::Domain(format!("unknown injection {s:?}"))),
        }
    }
}

fn target(src: &CoxeterSystem) -> Result<CoxeterSystem> {
    match src.family() {
        Family::Btilde | Family::Dtilde => CoxeterSystem::new(src.family(), src.rank() + 1),
        _ => Err(Error::Domain(format!("I and J are defined on B~ and D~, not {}", src.name()))),
    }
}

/// `<m, k] v` as a finite form.
fn prepend(m: i32, k: usize, v: &DForm) -> DForm {
    let mut terms = vec![(m, k)];
    terms.extend(v.terms.iter().copied());
    DForm::new(terms)
}

fn tail_element(tgt: &CoxeterSystem, v: &DForm) -> Result<GroupElement> {
    GroupElement::from_word(tgt, &v.word(tgt)?)
}

fn map_b(src: &CoxeterSystem, tgt: &CoxeterSystem, form: &BForm, which: Injection) -> Result<BForm> {
    let n = src.n();
    Ok(match form {
        BForm::Finite(v) => BForm::Finite(v.clone()),
        BForm::AffineOne { i, v } => BForm::AffineOne {
            i: *i,
            v: prepend(n as i32 + 1, n + 1, v),
        },
        BForm::FirstType { .. } => form.clone(),
        BForm::SecondType { .. } if which == Injection::I => form.clone(),
        BForm::SecondType { i_list, tail, .. } => {
            // Each t moves left past its interval: t <i_1,N+1] t <i_2,N+1] ... w_r.
            let seq: Vec<i32> = i_list.iter().copied().chain(form.j_values()).collect();
            let (&last, rest) = seq.split_last().expect("second type has affine length >= 2");
            let shifted: Vec<i32> = std::iter::once(n as i32 + 2).chain(rest.iter().copied()).collect();
            let tail = prepend(last, n + 1, tail);
            let el = tail_element(tgt, &tail)?;
            classify_b(tgt, &shifted, tail, &el)?
        }
    })
}

fn flip(x: i32) -> i32 {
    if x.abs() == 1 {
        -x
    } else {
        x
    }
}

/// `<N,N]<-(N-1),N-1] a v` with `s_N` a left descent of `v`. These take the
/// generic substitution rather than the exceptional one.
pub(crate) fn extra_affine_one(src: &CoxeterSystem, i: i32, j: i32, v: &DForm) -> Result<bool> {
    let n = src.n();
    let nn = n as i32;
    Ok(i == nn && j == -(nn - 1) && GroupElement::from_word(src, &v.word(src)?)?.has_left_descent(src.sigma(n)))
}

fn map_d(src: &CoxeterSystem, tgt: &CoxeterSystem, form: &DAffForm, which: Injection) -> Result<DAffForm> {
    let n = src.n();
    let nn = n as i32;
    Ok(match form {
        DAffForm::Finite(v) => DAffForm::Finite(v.clone()),
        DAffForm::AffineOne { i, j, v } if *i == nn + 1 => DAffForm::AffineOne {
            i: nn + 2,
            j: *j,
            v: prepend(nn + 1, n + 1, v),
        },
        DAffForm::AffineOne { i, j, v } if extra_affine_one(src, *i, *j, v)? => DAffForm::AffineOne {
            i: nn + 2,
            j: -nn,
            v: prepend(nn + 1, n + 1, v),
        },
        DAffForm::AffineOne { .. } => form.clone(),
        DAffForm::FirstType { eps, eta, i, k, f } => match (eps, eta) {
            (0, 0) => form.clone(),
            (0, 1) if *i == -(nn - 1) => DAffForm::FirstType {
                eps: 0,
                eta: 0,
                i: -nn,
                k: *k,
                f: *f,
            },
            (1, 0) if *i == -(nn - 1) => DAffForm::FirstType {
                eps: 0,
                eta: 0,
                i: nn + 1,
                k: k + 1,
                f: *f,
            },
            _ => return Err(Error::InvalidForm(format!("unexpected first type {form}"))),
        },
        DAffForm::SecondType { .. } if which == Injection::I => form.clone(),
        DAffForm::SecondType { pairs, k, tail, psi1 } => {
            // Blocks <i_t,N]<j_t,N-1] a become <j_{t-1},N+1]<i_t,N] a'.
            let mut seq: Vec<(i32, i32)> = pairs.clone();
            seq.extend(std::iter::repeat_n((-1, 1), *k));
            let mut tail = tail.clone();
            if *psi1 {
                seq = seq.iter().map(|&(i, j)| (flip(i), flip(j))).collect();
                tail = tail.psi1();
            }
            let mut shifted = Vec::with_capacity(seq.len());
            let mut prev = nn + 2;
            for &(i, j) in &seq {
                shifted.push((prev, i));
                prev = j;
            }
            let tail = prepend(prev, n + 1, &tail);
            let el = tail_element(tgt, &tail)?;
            classify_d(tgt, &shifted, tail, &el)?
        }
    })
}

/// Image of a normal form under `I` or `J`, computed on parameters.
pub fn map_form(src: &CoxeterSystem, form: &NormalForm, which: Injection) -> Result<(CoxeterSystem, NormalForm)> {
    let tgt = target(src)?;
    form.validate(src)?;
    let out = match form {
        NormalForm::B(b) if src.family() == Family::Btilde => NormalForm::B(map_b(src, &tgt, b, which)?),
        NormalForm::Daff(d) if src.family() == Family::Dtilde => NormalForm::Daff(map_d(src, &tgt, d, which)?),
        _ => return Err(Error::SystemMismatch),
    };
    Ok((tgt, out))
}

/// `I(w)`.
pub fn map_i(src: &CoxeterSystem, form: &NormalForm) -> Result<(CoxeterSystem, NormalForm)> {
    map_form(src, form, Injection::I)
}

/// `J(w)`.
pub fn map_j(src: &CoxeterSystem, form: &NormalForm) -> Result<(CoxeterSystem, NormalForm)> {
    map_form(src, form, Injection::J)
}

/// Whether the form lies in the part where `I` and `J` agree: finite, affine
/// length one, or first type.
pub fn is_w1_or_finite(form: &NormalForm) -> bool {
    !matches!(
        form,
        NormalForm::B(BForm::SecondType { .. }) | NormalForm::Daff(DAffForm::SecondType { .. })
    )
}

/// The word obtained by letterwise substitution into the rendered normal
/// form, following the case analysis of the definition.
pub fn substituted_word(src: &CoxeterSystem, form: &NormalForm, which: Injection) -> Result<(CoxeterSystem, Word)> {
    let tgt = target(src)?;
    let n = src.n();
    let w = form.word(src)?;
    let a = src.affine().expect("affine letter");
    let s = |i: usize| tgt.index(Generator::Sigma(i));
    let a2 = tgt.affine().expect("affine letter");
    let second = !is_w1_or_finite(form);
    let (rule, first_rule): (Vec<Letter>, Option<Vec<Letter>>) = match (src.family(), form) {
        (Family::Btilde, _) if second => match which {
            Injection::I => (vec![s(n + 1), a2], None),
            Injection::J => (vec![a2, s(n + 1)], None),
        },
        (Family::Btilde, _) => (vec![s(n + 1), a2, s(n + 1)], None),
        (Family::Dtilde, _) if second => match which {
            Injection::I => (vec![s(n + 1), s(n), a2], None),
            Injection::J => (vec![a2, s(n), s(n + 1)], None),
        },
        (Family::Dtilde, NormalForm::Daff(DAffForm::FirstType { eps: 1, .. })) => {
            (vec![s(n), a2, s(n + 1)], Some(vec![s(n + 1), a2, s(n)]))
        }
        (Family::Dtilde, NormalForm::Daff(DAffForm::AffineOne { i, j, v }))
            if *i != n as i32 + 1 && !extra_affine_one(src, *i, *j, v)? =>
        {
            (vec![s(n + 1), s(n), a2], None)
        }
        (Family::Dtilde, _) => (vec![s(n), a2, s(n + 1)], None),
        _ => return Err(Error::SystemMismatch),
    };
    let mut out = Vec::new();
    let mut first = first_rule;
    for &l in w.letters() {
        if l == a {
            out.extend(first.take().unwrap_or_else(|| rule.clone()));
        } else {
            let g = src.generator(l);
            out.push(tgt.index(g));
        }
    }
    Ok((tgt, Word(out)))
}

/// Agreement of the parameter map with the substitution oracle, together
/// with full commutativity, preservation of affine length and the length
/// law, for one form.
pub fn check_form(src: &CoxeterSystem, form: &NormalForm, which: Injection) -> Result<std::result::Result<(), String>> {
    let (tgt, img) = map_form(src, form, which)?;
    let (_, sub) = substituted_word(src, form, which)?;
    let el = GroupElement::from_word(&tgt, &sub)?;
    let rendered = GroupElement::from_word(&tgt, &img.word(&tgt)?)?;
    let l = form.word(src)?.len();
    let big_l = form.affine_length();
    let want = if src.family() == Family::Btilde && !is_w1_or_finite(form) {
        l + big_l
    } else {
        l + 2 * big_l
    };
    let desc = || format!("{which}({})", src.format(&form.word(src).unwrap()));
    if rendered != el {
        return Ok(Err(format!("{}: parameter image {img} differs from substitution", desc())));
    }
    if sub.len() != want || el.length(&tgt) != want {
        return Ok(Err(format!("{}: length {} instead of {want}", desc(), el.length(&tgt))));
    }
    if img.affine_length() != big_l {
        return Ok(Err(format!("{}: affine length changed", desc())));
    }
    match parse(&tgt, &el) {
        Ok(p) if p == img => Ok(Ok(())),
        Ok(p) => Ok(Err(format!("{}: parses to {p}, expected {img}", desc()))),
        Err(e) => Ok(Err(format!("{}: image is not fc ({e})", desc()))),
    }
}

/// Checks `I` and `J` on every fully commutative element with
/// `l(w) <= max_len`: the per-form laws of [`check_form`], injectivity,
/// type preservation, `Im I ∩ Im J = I(W1 ⊔ D)`, and for type B~ that
/// `J(w)` starts with `t` while `I(w)` has no left descent `t` on the
/// second type.
pub fn check_injections(src: &CoxeterSystem, max_len: usize, budget: Budget) -> Result<Report> {
    let entries = enumerate_fc(src, Some(max_len), max_len, budget)?;
    let mut report = Report::default();
    let mut im_i: HashMap<NormalForm, Word> = HashMap::new();
    let mut im_j: HashMap<NormalForm, Word> = HashMap::new();
    let mut both = HashSet::new();
    for e in &entries {
        let name = || src.format(&e.word);
        for which in [Injection::I, Injection::J] {
            let verdict = check_form(src, &e.form, which)?;
            report.record(verdict.is_ok(), || format!("{which} on {}: {}", name(), verdict.clone().unwrap_err()));
        }
        let (tgt, i) = map_i(src, &e.form)?;
        let (_, j) = map_j(src, &e.form)?;
        report.record(
            i.class_name() == e.form.class_name() && j.class_name() == e.form.class_name(),
            || format!("type not preserved on {}", name()),
        );
        let shared = is_w1_or_finite(&e.form);
        report.record((i == j) == shared, || format!("I and J agree exactly off W1 and D, fails on {}", name()));
        if shared {
            both.insert(i.clone());
        }
        if src.family() == Family::Btilde && !shared {
            let t = tgt.affine().expect("affine letter");
            let starts = j.word(&tgt)?.letters().first() == Some(&t);
            let el = GroupElement::from_word(&tgt, &i.word(&tgt)?)?;
            report.record(starts && !el.has_left_descent(t), || {
                format!("left descent t misplaced for I or J of {}", name())
            });
        }
        if let Some(prev) = im_i.insert(i, e.word.clone()) {
            report.record(false, || format!("I identifies {} and {}", src.format(&prev), name()));
        }
        if let Some(prev) = im_j.insert(j, e.word.clone()) {
            report.record(false, || format!("J identifies {} and {}", src.format(&prev), name()));
        }
    }
    let meet: HashSet<&NormalForm> = im_i.keys().filter(|k| im_j.contains_key(*k)).collect();
    let both_ref: HashSet<&NormalForm> = both.iter().collect();
    report.record(meet == both_ref, || {
        format!("Im I ∩ Im J has {} elements, I(W1 ⊔ D) has {}", meet.len(), both_ref.len())
    });
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::normal_forms::parse_word;

    fn sys(f: Family, rank: usize) -> CoxeterSystem {
        CoxeterSystem::new(f, rank).unwrap()
    }

    #[test]
    fn b_examples() {
        let b = sys(Family::Btilde, 5);
        let f = parse_word(&b, &b.parse_word("sb1 s2 s3 t s1 s2 s3 t").unwrap()).unwrap();
        let (tgt, w) = substituted_word(&b, &f, Injection::I).unwrap();
        assert_eq!(tgt.format(&w), "sb1 s2 s3 s4 t s1 s2 s3 s4 t");
        let (_, w) = substituted_word(&b, &f, Injection::J).unwrap();
        assert_eq!(tgt.format(&w), "sb1 s2 s3 t s4 s1 s2 s3 t s4");
        let (_, j) = map_j(&b, &f).unwrap();
        let canon = GroupElement::from_word(&tgt, &j.word(&tgt).unwrap()).unwrap().canonical_word(&tgt);
        assert_eq!(j.word(&tgt).unwrap().letters()[0], tgt.affine().unwrap());
        assert_eq!(canon.len(), 10);
        let fin = parse_word(&b, &b.parse_word("s1 s2").unwrap()).unwrap();
        assert_eq!(map_i(&b, &fin).unwrap().1, fin);
        assert_eq!(map_j(&b, &fin).unwrap().1, fin);
    }

    #[test]
    fn d_first_type_eps_one() {
        let d = sys(Family::Dtilde, 5);
        let f = NormalForm::Daff(DAffForm::FirstType {
            eps: 1,
            eta: 0,
            i: -2,
            k: 0,
            f: 2,
        });
        let (tgt, img) = map_i(&d, &f).unwrap();
        assert_eq!(
            img,
            NormalForm::Daff(DAffForm::FirstType {
                eps: 0,
                eta: 0,
                i: 4,
                k: 1,
                f: 2
            })
        );
        let (_, w) = substituted_word(&d, &f, Injection::I).unwrap();
        assert_eq!(tgt.format(&w)[..11].to_string(), "s4 sb4 s3 s");
        assert_eq!(check_form(&d, &f, Injection::J).unwrap(), Ok(()));
    }

    #[test]
    fn b_exhaustive() {
        for (rank, len) in [(5, 9), (6, 7)] {
            let r = check_injections(&sys(Family::Btilde, rank), len, Budget::new(5_000_000)).unwrap();
            assert!(r.passed() && r.checked > 0, "{:?}", r.failures);
        }
    }

    #[test]
    fn d_exhaustive() {
        for (rank, len) in [(5, 9), (6, 7)] {
            let r = check_injections(&sys(Family::Dtilde, rank), len, Budget::new(5_000_000)).unwrap();
            assert!(r.passed() && r.checked > 0, "{:?}", r.failures);
        }
    }
}
