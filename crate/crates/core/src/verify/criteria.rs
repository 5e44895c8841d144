//! Individual checks behind the verification suites. Each returns an
//! [`Outcome`]: a [`Report`] plus a one-line summary.

use std::collections::{HashMap, HashSet};

use rand::SeedableRng;

use super::fixtures::{check_families, parse_families, parse_list, APPENDIX_A, APPENDIX_B, APPENDIX_C};
use crate::coxeter::{
    enumerate_ball, is_fully_commutative, is_reduced, is_reduced_phi, Budget, CoxeterSystem, Family, GroupElement,
    Letter, Word,
};
use crate::error::Result;
use crate::hecke::{check_leading_shape, independent_on_ball, HeckeMap};
use crate::normal_forms::{enumerate_fc, parse};
use crate::tl::lemmas::{check_basic_b, check_basic_d, check_formulas_b, check_formulas_d};
use crate::tl::{check_faithful, check_tl_relations};
use crate::towers::{centralizer_check, check_injections, check_square, length_law_check, GroupMap, Report};

/// Result of one check.
#[derive(Debug, Clone, Default)]
pub struct Outcome {
    /// Cases and failures.
    pub report: Report,
    /// Short human-readable summary.
    pub summary: String,
}

impl Outcome {
    fn new(report: Report, summary: impl Into<String>) -> Self {
        Outcome {
            report,
            summary: summary.into(),
        }
    }

    /// True when nothing failed.
    pub fn passed(&self) -> bool {
        self.report.passed()
    }
}

fn sys(f: Family, k: usize) -> Result<CoxeterSystem> {
    CoxeterSystem::from_subscript(f, k)
}

/// The fully commutative elements of `W(D_4)` against the listed ones.
pub fn appendix_a() -> Result<Outcome> {
    let d = sys(Family::D, 4)?;
    let listed = parse_list(&d, APPENDIX_A)?;
    let mut report = Report::default();
    let mut fixture: HashMap<GroupElement, String> = HashMap::new();
    for e in &listed {
        let x = GroupElement::from_word(&d, &e.word)?;
        let ok = x.length(&d) == e.word.len() && is_fully_commutative(&d, &x);
        report.record(ok, || format!("[{}] {} is not a reduced fc word", e.tag, d.format(&e.word)));
        let dup = fixture.insert(x, e.tag.clone());
        report.record(dup.is_none(), || format!("[{}] repeats [{}]", e.tag, dup.clone().unwrap_or_default()));
    }
    let enumerated = enumerate_fc(&d, None, 0, Budget::from_env())?;
    let mut matched = 0;
    for e in &enumerated {
        let hit = fixture.contains_key(&e.element);
        matched += hit as usize;
        report.record(hit, || format!("{} is fc but not listed", d.format(&e.canonical)));
    }
    let got: HashSet<&GroupElement> = enumerated.iter().map(|e| &e.element).collect();
    for (x, tag) in &fixture {
        report.record(got.contains(x), || format!("[{tag}] is listed but not enumerated"));
    }
    report.record(enumerated.len() == 48, || format!("{} fc elements instead of 48", enumerated.len()));
    Ok(Outcome::new(report, format!("{matched}/{} matched", listed.len())))
}

/// Agreement of the incremental and the root-multiset reducedness tests on
/// every word of length at most `max_len` whose proper prefixes are reduced.
pub fn reduced_words(k: usize, max_len: usize) -> Result<Outcome> {
    let b = sys(Family::Btilde, k)?;
    let mut report = Report::default();
    let mut stack = vec![Word::empty()];
    let mut reduced = 0usize;
    while let Some(w) = stack.pop() {
        if w.len() == max_len {
            continue;
        }
        for s in 0..b.rank() as Letter {
            let mut ws = w.clone();
            ws.0.push(s);
            let a = is_reduced(&b, &ws)?;
            let c = is_reduced_phi(&b, &ws)?;
            report.record(a == c, || format!("tests disagree on {}", b.format(&ws)));
            if a {
                reduced += 1;
                stack.push(ws);
            }
        }
    }
    let summary = format!("{} words checked on {}, {} reduced", report.checked, b.name(), reduced + 1);
    Ok(Outcome::new(report, summary))
}

/// Length laws of `L_n` on `W(B~_k)` and `F_n` on `W(C~_k)`.
pub fn length_laws(b_ks: &[usize], c_ks: &[usize], max_len: usize, budget: Budget) -> Result<Outcome> {
    let mut report = Report::default();
    for &k in b_ks {
        report.absorb(length_law_check(GroupMap::L, &sys(Family::Btilde, k)?, max_len, budget)?);
    }
    for &k in c_ks {
        report.absorb(length_law_check(GroupMap::F, &sys(Family::Ctilde, k)?, max_len, budget)?);
    }
    let summary = format!("{} elements, l <= {max_len}", report.checked);
    Ok(Outcome::new(report, summary))
}

/// Parse, render, validation, trichotomy and closed formulas on every fully
/// commutative element of length at most `max_len`, and equality of the
/// enumeration with the breadth-first oracle.
pub fn normal_forms(f: Family, k: usize, max_len: usize, budget: Budget) -> Result<Outcome> {
    let s = sys(f, k)?;
    let affine = s.affine();
    let mut report = Report::default();
    let oracle: Vec<_> = enumerate_ball(&s, max_len, budget)?
        .into_iter()
        .filter(|e| is_fully_commutative(&s, &e.element))
        .collect();
    let mut forms = HashMap::new();
    for e in &oracle {
        let name = || s.format(&e.word);
        let form = match parse(&s, &e.element) {
            Ok(form) => form,
            Err(err) => {
                report.record(false, || format!("{} does not parse: {err}", name()));
                continue;
            }
        };
        let big_l = affine.map_or(0, |a| e.word.count(a));
        let w = form.word(&s)?;
        let ok = form.validate(&s).is_ok()
            && GroupElement::from_word(&s, &w)? == e.element
            && w.len() == e.word.len()
            && form.length(&s) == e.word.len()
            && form.affine_length() == big_l
            && match big_l {
                0 => form.class_name() == "finite",
                1 => form.class_name() == "affine1",
                _ => matches!(form.class_name(), "first" | "second"),
            };
        report.record(ok, || format!("{} has inconsistent form {form}", name()));
        forms.insert(e.element.clone(), form);
    }
    let enumerated = enumerate_fc(&s, Some(max_len), max_len, budget)?;
    let mut seen = HashSet::new();
    for e in &enumerated {
        report.record(seen.insert(e.element.clone()), || {
            format!("{} is enumerated twice", s.format(&e.canonical))
        });
        report.record(forms.get(&e.element) == Some(&e.form), || {
            format!("enumerated form {} is not the parsed form", e.form)
        });
    }
    report.record(seen.len() == oracle.len(), || {
        format!("{} enumerated against {} by breadth-first search", seen.len(), oracle.len())
    });
    Ok(Outcome::new(
        report,
        format!("{} fc elements of {} with l <= {max_len}", oracle.len(), s.name()),
    ))
}

/// The listed families of positive affine length for `B~_4` or `D~_4`.
pub fn appendix_families(f: Family) -> Result<Outcome> {
    let (s, text) = match f {
        Family::Dtilde => (sys(Family::Dtilde, 4)?, APPENDIX_C),
        _ => (sys(Family::Btilde, 4)?, APPENDIX_B),
    };
    let fx = parse_families(&s, text)?;
    let r = check_families(&s, &fx)?;
    let summary = format!(
        "{} instances of {} ({} distinct), {} mismatches",
        r.report.checked,
        s.name(),
        r.distinct,
        r.report.failures.len()
    );
    Ok(Outcome::new(r.report, summary))
}

/// The fc-level injections `I` and `J` from subscript `k` to `k + 1`.
pub fn injections(k: usize, max_len: usize, budget: Budget) -> Result<Outcome> {
    let mut report = check_injections(&sys(Family::Btilde, k)?, max_len, budget)?;
    report.absorb(check_injections(&sys(Family::Dtilde, k)?, max_len, budget)?);
    let summary = format!("{} cases, l <= {max_len}, {k} -> {}", report.checked, k + 1);
    Ok(Outcome::new(report, summary))
}

/// The two commuting squares and homomorphy of every map involved.
pub fn squares(ns: &[usize]) -> Result<Outcome> {
    let mut report = Report::default();
    for &n in ns {
        report.absorb(check_square(n)?);
    }
    let summary = format!("{} relations and squares", report.checked);
    Ok(Outcome::new(report, summary))
}

/// Leading term of `Q_n(e_w)` on `W(B~_k)`.
pub fn hecke_leading(k: usize, max_len: usize, budget: Budget) -> Result<Outcome> {
    let report = check_leading_shape(HeckeMap::Q, &sys(Family::Btilde, k)?, max_len, budget)?;
    let summary = format!("{} elements, l <= {max_len}", report.checked);
    Ok(Outcome::new(report, summary))
}

/// Defining relations of the Temperley-Lieb algebras of `B~_k` and `D~_k`.
pub fn tl_relations(k: usize) -> Result<Outcome> {
    let mut report = check_tl_relations(&sys(Family::Btilde, k)?)?;
    report.absorb(check_tl_relations(&sys(Family::Dtilde, k)?)?);
    let summary = format!("{} relations", report.checked);
    Ok(Outcome::new(report, summary))
}

/// Images of the affine generators under `Q_n` and `P_n`.
pub fn basic_expansions(k: usize) -> Result<Outcome> {
    let mut report = check_basic_b(&sys(Family::Btilde, k)?)?;
    report.absorb(check_basic_d(&sys(Family::Dtilde, k)?)?);
    Ok(Outcome::new(report, "2-term and 13-term expansions"))
}

/// Top-stratum expansions of `Q_n(h_w)` and `P_n(h_w)`.
pub fn tl_lemmas(k: usize, max_len: usize, max_affine: usize, budget: Budget) -> Result<Outcome> {
    let b = check_formulas_b(&sys(Family::Btilde, k)?, max_len, max_affine, budget)?;
    let d = check_formulas_d(&sys(Family::Dtilde, k)?, max_len, max_affine, budget)?;
    let parts = [
        ("finite B", b.finite),
        ("affine one and first type B", b.formula_b),
        ("second type B", b.formula_2b),
        ("second type B left factor", b.precise_b),
        ("finite D", d.finite),
        ("affine length >= 2 D", d.formula_lge2),
        ("affine one D", d.formula_d),
    ];
    let mut report = Report::default();
    let mut counts = Vec::new();
    for (name, r) in parts {
        report.record(r.checked > 0, || format!("{name}: no applicable element"));
        counts.push(format!("{name} {}", r.checked));
        report.absorb(r);
    }
    Ok(Outcome::new(report, counts.join(", ")))
}

/// Linear independence of the images of basis elements of length at most
/// `max_len`: Hecke and Temperley-Lieb `Q_n` on `B~_kb`, Temperley-Lieb
/// `P_n` on `D~_kd`.
pub fn faithfulness(kb: usize, kd: usize, max_len: usize, budget: Budget) -> Result<Outcome> {
    let mut report = Report::default();
    let (h, ok) = independent_on_ball(HeckeMap::Q, &sys(Family::Btilde, kb)?, max_len, budget)?;
    report.record(ok, || format!("Hecke Q images on B~_{kb} are dependent"));
    let (tq, ok) = check_faithful(HeckeMap::Q, &sys(Family::Btilde, kb)?, max_len, budget)?;
    report.record(ok, || format!("Temperley-Lieb Q images on B~_{kb} are dependent"));
    let (tp, ok) = check_faithful(HeckeMap::P, &sys(Family::Dtilde, kd)?, max_len, budget)?;
    report.record(ok, || format!("Temperley-Lieb P images on D~_{kd} are dependent"));
    Ok(Outcome::new(
        report,
        format!("ranks {h} (Hecke Q), {tq} (TL Q), {tp} (TL P), l <= {max_len}"),
    ))
}

/// `t` commutes with `L_n` of `samples` random elements of the ball.
pub fn centralizer(k: usize, radius: usize, samples: usize, seed: u64, budget: Budget) -> Result<Outcome> {
    let mut rng = rand::rngs::StdRng::seed_from_u64(seed);
    let report = centralizer_check(&sys(Family::Btilde, k)?, radius, samples, budget, &mut rng)?;
    let summary = format!("{} samples, radius {radius}", report.checked);
    Ok(Outcome::new(report, summary))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_instances_pass() {
        let budget = Budget::new(1_000_000);
        assert!(appendix_a().unwrap().passed());
        assert!(reduced_words(4, 4).unwrap().passed());
        assert!(normal_forms(Family::Btilde, 4, 5, budget).unwrap().passed());
        assert!(normal_forms(Family::Dtilde, 4, 5, budget).unwrap().passed());
        assert!(length_laws(&[3], &[3], 4, budget).unwrap().passed());
        assert!(centralizer(3, 4, 20, 1, budget).unwrap().passed());
    }

    #[test]
    fn reduced_word_count() {
        let o = reduced_words(4, 2).unwrap();
        // 5 letters, then 4 new letters after each.
        assert_eq!(o.report.checked, 5 + 5 * 5);
        assert!(o.summary.starts_with("30 words checked on B~_4, 26 reduced"));
    }
}
