//! Fixture lists: the fully commutative elements of `W(D_4)` and the
//! families of positive affine length in `W(B~_4)` and `W(D~_4)`.
//!
//! The list format is one tagged word per line. The family format is
//! documented at the top of `fixtures/appendix_b.txt`.

use std::collections::{HashMap, HashSet};

use crate::coxeter::{is_fully_commutative, Budget, CoxeterSystem, Family, Generator, GroupElement, Letter, Word};
use crate::error::{Error, Result};
use crate::normal_forms::{enumerate_fc, parse};
use crate::towers::Report;

/// The 48 elements of `W^c(D_4)`.
pub const APPENDIX_A: &str = include_str!("../../fixtures/appendix_a.txt");
/// Families of `W^c(B~_4)` of positive affine length.
pub const APPENDIX_B: &str = include_str!("../../fixtures/appendix_b.txt");
/// Families of `W^c(D~_4)` of positive affine length.
pub const APPENDIX_C: &str = include_str!("../../fixtures/appendix_c.txt");

fn fixture_err(line: usize, msg: impl Into<String>) -> Error {
    Error::Fixture { line, msg: msg.into() }
}

fn parse_fixture_word(sys: &CoxeterSystem, text: &str, line: usize) -> Result<Word> {
    let text = text.trim();
    if text == "1" {
        return Ok(Word::empty());
    }
    sys.parse_word(text).map_err(|e| fixture_err(line, e.to_string()))
}

fn content_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.split('#').next().unwrap_or("").trim()))
        .filter(|(_, l)| !l.is_empty())
}

/// One tagged word of a list fixture.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ListEntry {
    /// Position in the reference list.
    pub tag: String,
    /// The word.
    pub word: Word,
}

/// Reads a list fixture: `TAG word...` per line.
pub fn parse_list(sys: &CoxeterSystem, text: &str) -> Result<Vec<ListEntry>> {
    content_lines(text)
        .map(|(n, l)| {
            let (tag, rest) = l.split_once(char::is_whitespace).ok_or_else(|| fixture_err(n, "missing word"))?;
            Ok(ListEntry {
                tag: tag.to_string(),
                word: parse_fixture_word(sys, rest, n)?,
            })
        })
        .collect()
}

/// A piece of a family template.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Segment {
    /// A named set of words.
    Set(String),
    /// A fixed word.
    Literal(Word),
    /// `lo..=hi` blocks taken cyclically from the list.
    Power { blocks: Vec<Word>, lo: usize, hi: usize },
}

/// A family of words `seg_1 seg_2 ...` with a declared class.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Case {
    /// `first`, `second` or `affine1`.
    pub class: String,
    /// Whether the images under `sb1 <-> s1` are included.
    pub psi1: bool,
    /// Position in the reference list.
    pub tag: String,
    /// Template.
    pub segments: Vec<Segment>,
}

/// Two decompositions of one element.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Unique {
    /// Declared class.
    pub class: String,
    /// Position in the reference list.
    pub tag: String,
    /// Left decomposition.
    pub left: Vec<Segment>,
    /// Right decomposition.
    pub right: Vec<Segment>,
}

/// Listed words that are not words of the group.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Invalid {
    /// Declared class.
    pub class: String,
    /// Position in the reference list.
    pub tag: String,
    /// The words as listed.
    pub texts: Vec<String>,
}

/// A parsed family fixture.
#[derive(Debug, Clone, Default)]
pub struct FamilyFixture {
    /// Named sets.
    pub sets: HashMap<String, Vec<Word>>,
    /// Families.
    pub cases: Vec<Case>,
    /// Uniqueness notes.
    pub uniques: Vec<Unique>,
    /// Unrepresentable entries.
    pub invalid: Vec<Invalid>,
}

/// Fully commutative elements of the parabolic subgroup `<sb1, s1, ..., sN>`
/// of `sys`, as words of `sys`.
fn finite_fc(sys: &CoxeterSystem) -> Result<Vec<Word>> {
    let d = CoxeterSystem::from_subscript(Family::D, sys.n() + 1)?;
    enumerate_fc(&d, None, 0, Budget::from_env())?
        .iter()
        .map(|e| sys.parse_word(&d.format(&e.word)))
        .collect()
}

fn parse_segments(sys: &CoxeterSystem, text: &str, line: usize) -> Result<Vec<Segment>> {
    text.split(" . ")
        .map(|seg| {
            let seg = seg.trim();
            if let Some(name) = seg.strip_prefix('$') {
                return Ok(Segment::Set(name.to_string()));
            }
            if let Some(body) = seg.strip_prefix('(') {
                let (blocks, exp) = body.split_once(")^").ok_or_else(|| fixture_err(line, "bad power"))?;
                let (lo, hi) = exp.split_once("..").ok_or_else(|| fixture_err(line, "bad exponent range"))?;
                let bound = |s: &str| s.trim().parse::<usize>().map_err(|_| fixture_err(line, "bad exponent"));
                return Ok(Segment::Power {
                    blocks: blocks
                        .split('/')
                        .map(|b| parse_fixture_word(sys, b, line))
                        .collect::<Result<_>>()?,
                    lo: bound(lo)?,
                    hi: bound(hi)?,
                });
            }
            Ok(Segment::Literal(parse_fixture_word(sys, seg, line)?))
        })
        .collect()
}

fn parse_head(head: &str, line: usize) -> Result<(String, bool, String)> {
    let mut class = None;
    let mut psi1 = false;
    let mut tag = None;
    for tok in head.split_whitespace() {
        match tok {
            "psi1" => psi1 = true,
            t if t.starts_with('@') => tag = Some(t[1..].to_string()),
            t if class.is_none() => class = Some(t.to_string()),
            t => return Err(fixture_err(line, format!("unexpected {t:?}"))),
        }
    }
    Ok((
        class.ok_or_else(|| fixture_err(line, "missing class"))?,
        psi1,
        tag.ok_or_else(|| fixture_err(line, "missing tag"))?,
    ))
}

/// Reads a family fixture for `sys`.
pub fn parse_families(sys: &CoxeterSystem, text: &str) -> Result<FamilyFixture> {
    let mut fx = FamilyFixture::default();
    let mut fc_cache: Option<Vec<Word>> = None;
    for (n, l) in content_lines(text) {
        let (kw, rest) = l.split_once(char::is_whitespace).ok_or_else(|| fixture_err(n, "empty directive"))?;
        match kw {
            "set" => {
                let (name, body) = rest.split_once('=').ok_or_else(|| fixture_err(n, "missing '='"))?;
                let body = body.trim();
                let words = if let Some(minus) = body.strip_prefix("@fc") {
                    if fc_cache.is_none() {
                        fc_cache = Some(finite_fc(sys)?);
                    }
                    let all = fc_cache.clone().unwrap_or_default();
                    let minus = minus.trim();
                    let removed: HashSet<GroupElement> = match minus.strip_prefix('-') {
                        Some(list) => list
                            .split('|')
                            .map(|w| GroupElement::from_word(sys, &parse_fixture_word(sys, w, n)?))
                            .collect::<Result<_>>()?,
                        None if minus.is_empty() => HashSet::new(),
                        None => return Err(fixture_err(n, "expected '- list' after @fc")),
                    };
                    let mut kept = Vec::new();
                    for w in all {
                        if !removed.contains(&GroupElement::from_word(sys, &w)?) {
                            kept.push(w);
                        }
                    }
                    kept
                } else {
                    body.split('|').map(|w| parse_fixture_word(sys, w, n)).collect::<Result<_>>()?
                };
                fx.sets.insert(name.trim().to_string(), words);
            }
            "case" => {
                let (head, body) = rest.split_once(':').ok_or_else(|| fixture_err(n, "missing ':'"))?;
                let (class, psi1, tag) = parse_head(head, n)?;
                let segments = parse_segments(sys, body, n)?;
                for s in &segments {
                    if let Segment::Set(name) = s {
                        if !fx.sets.contains_key(name) {
                            return Err(fixture_err(n, format!("unknown set {name}")));
                        }
                    }
                }
                fx.cases.push(Case {
                    class,
                    psi1,
                    tag,
                    segments,
                });
            }
            "unique" => {
                let (head, body) = rest.split_once(':').ok_or_else(|| fixture_err(n, "missing ':'"))?;
                let (class, _, tag) = parse_head(head, n)?;
                let (l, r) = body.split_once('=').ok_or_else(|| fixture_err(n, "missing '='"))?;
                fx.uniques.push(Unique {
                    class,
                    tag,
                    left: parse_segments(sys, l, n)?,
                    right: parse_segments(sys, r, n)?,
                });
            }
            "invalid" => {
                let (head, body) = rest.split_once(':').ok_or_else(|| fixture_err(n, "missing ':'"))?;
                let (class, _, tag) = parse_head(head, n)?;
                fx.invalid.push(Invalid {
                    class,
                    tag,
                    texts: body.split('|').map(|w| w.trim().to_string()).collect(),
                });
            }
            other => return Err(fixture_err(n, format!("unknown directive {other:?}"))),
        }
    }
    Ok(fx)
}

impl FamilyFixture {
    fn expand(&self, segments: &[Segment]) -> Vec<Word> {
        let mut acc = vec![Word::empty()];
        for seg in segments {
            let options: Vec<Word> = match seg {
                Segment::Set(name) => self.sets[name].clone(),
                Segment::Literal(w) => vec![w.clone()],
                Segment::Power { blocks, lo, hi } => (*lo..=*hi)
                    .map(|k| {
                        (0..k)
                            .fold(Word::empty(), |w, i| w.concat(&blocks[i % blocks.len()]))
                    })
                    .collect(),
            };
            acc = acc
                .iter()
                .flat_map(|a| options.iter().map(move |o| a.concat(o)))
                .collect();
        }
        acc
    }

    /// Every instance of a case, including the images under `sb1 <-> s1` if
    /// flagged.
    pub fn instances(&self, sys: &CoxeterSystem, case: &Case) -> Result<Vec<Word>> {
        let mut out = self.expand(&case.segments);
        if case.psi1 {
            let (a, b) = (sys.index(Generator::SigmaBar1), sys.sigma(1));
            let swap = |l: Letter| if l == a { b } else if l == b { a } else { l };
            let mirrored: Vec<Word> = out.iter().map(|w| Word(w.letters().iter().map(|&l| swap(l)).collect())).collect();
            out.extend(mirrored);
        }
        Ok(out)
    }
}

/// Outcome of a family fixture check.
#[derive(Debug, Clone, Default)]
pub struct FamilyReport {
    /// One case per instance and per uniqueness note.
    pub report: Report,
    /// Number of distinct elements among the instances.
    pub distinct: usize,
}

/// Checks that every instance is fully commutative and parses to its
/// declared class, and that both sides of each uniqueness note give the same
/// element, which parses to the declared class. Each invalid entry counts as
/// a failure.
pub fn check_families(sys: &CoxeterSystem, fx: &FamilyFixture) -> Result<FamilyReport> {
    let mut out = FamilyReport::default();
    let mut seen = HashSet::new();
    let mut judge = |w: &Word, class: &str, tag: &str, report: &mut Report| -> Result<()> {
        let x = GroupElement::from_word(sys, w)?;
        let reduced = x.length(sys) == w.len();
        let fc = reduced && is_fully_commutative(sys, &x);
        let got = if fc { parse(sys, &x)?.class_name() } else { "not fc" };
        report.record(got == class, || format!("[{tag}] {} is {got}, expected {class}", sys.format(w)));
        seen.insert(x);
        Ok(())
    };
    for case in &fx.cases {
        for w in fx.instances(sys, case)? {
            judge(&w, &case.class, &case.tag, &mut out.report)?;
        }
    }
    for u in &fx.uniques {
        let l = fx.expand(&u.left);
        let r = fx.expand(&u.right);
        for (a, b) in l.iter().zip(&r) {
            let same = GroupElement::from_word(sys, a)? == GroupElement::from_word(sys, b)?;
            out.report.record(same, || {
                format!("[{}] {} and {} differ", u.tag, sys.format(a), sys.format(b))
            });
            judge(a, &u.class, &u.tag, &mut out.report)?;
        }
    }
    for inv in &fx.invalid {
        for t in &inv.texts {
            out.report.record(false, || {
                format!("[{}] {t} is not a word of {}, expected {}", inv.tag, sys.name(), inv.class)
            });
        }
    }
    out.distinct = seen.len();
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn list_has_48_rows() {
        let d = CoxeterSystem::from_subscript(Family::D, 4).unwrap();
        let rows = parse_list(&d, APPENDIX_A).unwrap();
        assert_eq!(rows.len(), 48);
        assert_eq!(rows[0].word, Word::empty());
    }

    #[test]
    fn families_parse() {
        let b = CoxeterSystem::from_subscript(Family::Btilde, 4).unwrap();
        let fx = parse_families(&b, APPENDIX_B).unwrap();
        assert_eq!(fx.sets["FC"].len(), 48);
        assert!(!fx.cases.is_empty() && fx.uniques.len() == 1);
        let d = CoxeterSystem::from_subscript(Family::Dtilde, 4).unwrap();
        let fx = parse_families(&d, APPENDIX_C).unwrap();
        let case = &fx.cases[0];
        let inst = fx.instances(&d, case).unwrap();
        assert_eq!(inst.len(), 8);
        assert_eq!(inst[0].len(), 13);
    }

    #[test]
    fn bad_lines_are_reported() {
        let b = CoxeterSystem::from_subscript(Family::Btilde, 4).unwrap();
        assert!(matches!(parse_families(&b, "case first @x: $NOPE"), Err(Error::Fixture { line: 1, .. })));
        assert!(matches!(parse_families(&b, "set X = s9"), Err(Error::Fixture { .. })));
    }

    fn failures(f: Family, text: &str) -> (FamilyReport, Vec<String>) {
        let sys = CoxeterSystem::from_subscript(f, 4).unwrap();
        let fx = parse_families(&sys, text).unwrap();
        let r = check_families(&sys, &fx).unwrap();
        let f = r.report.failures.clone();
        (r, f)
    }

    #[test]
    fn b_mismatches_are_the_known_ones() {
        let (r, fails) = failures(Family::Btilde, APPENDIX_B);
        assert_eq!(r.report.checked, 547);
        let by_tag = |t: &str| fails.iter().filter(|x| x.starts_with(t)).count();
        assert_eq!(by_tag("[s2]"), 80);
        assert!(fails.iter().filter(|x| x.starts_with("[s2]")).all(|x| x.contains("s3 t s3") && x.contains("not fc")));
        assert_eq!(by_tag("[s3]"), 2);
        let a2: Vec<&String> = fails.iter().filter(|x| x.starts_with("[a2]")).collect();
        assert_eq!(a2.len(), 3);
        for w in ["s2 s3 t s2 s1 is", "s2 s3 t s2 s3 is", "s2 s3 t s2 s3 s1 s2 is"] {
            assert!(a2.iter().any(|x| x.contains(w)), "{w}");
        }
        assert_eq!(fails.len(), 85);
    }

    #[test]
    fn d_mismatches_are_the_known_ones() {
        let (r, fails) = failures(Family::Dtilde, APPENDIX_C);
        assert_eq!(r.report.checked, 549);
        assert_eq!(fails.len(), 7);
        assert!(fails.iter().all(|x| x.starts_with("[a6] s3 sb1 s1 s2 sb3 s3")));
    }
}
