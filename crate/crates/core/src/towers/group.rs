//! The group monomorphisms `F_n`, `L_n`, `G_n` and the inclusions `beta`,
//! `delta`.

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;

use rand::seq::SliceRandom;
use rand::Rng;

use crate::coxeter::{
    enumerate_ball, is_reduced_phi, Budget, CoxeterSystem, Family, Generator, GroupElement, Letter, Word,
};
use crate::error::{Error, Result};

/// A group-level map.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum GroupMap {
    /// `C~ -> C~` of one more generator, `t -> s_N t s_N`.
    F,
    /// `B~ -> B~` of one more generator, `t -> s_N t s_N`.
    L,
    /// `D~ -> D~` of one more generator, `sbN -> s_N s_{N-1} sbN s_{N-1} s_N`.
    G,
    /// `B~ -> C~` of the same rank, `sb1 -> s0 s1 s0`.
    Beta,
    /// `D~ -> B~` of the same rank, `sbN -> t s_N t`.
    Delta,
}

impl GroupMap {
    /// The family of the source group.
    pub fn source_family(self) -> Family {
        match self {
            GroupMap::F => Family::Ctilde,
            GroupMap::L | GroupMap::Beta => Family::Btilde,
            GroupMap::G | GroupMap::Delta => Family::Dtilde,
        }
    }

    /// The target system for a given source.
    pub fn target(self, src: &CoxeterSystem) -> Result<CoxeterSystem> {
        if src.family() != self.source_family() {
            return Err(Error::Domain(format!(
                "{self} is defined on type {}, not on {}",
                self.source_family().name(),
                src.name()
            )));
        }
        match self {
            GroupMap::F | GroupMap::L | GroupMap::G => CoxeterSystem::new(src.family(), src.rank() + 1),
            GroupMap::Beta => CoxeterSystem::new(Family::Ctilde, src.rank()),
            GroupMap::Delta => CoxeterSystem::new(Family::Btilde, src.rank()),
        }
    }

    /// Image of one source generator as a target word.
    pub fn generator_image(self, src: &CoxeterSystem, tgt: &CoxeterSystem, g: Generator) -> Vec<Letter> {
        let n = src.n();
        let idx = |g: Generator| tgt.index(g);
        match (self, g) {
            (GroupMap::F | GroupMap::L, Generator::T) => {
                vec![idx(Generator::Sigma(n + 1)), idx(Generator::T), idx(Generator::Sigma(n + 1))]
            }
            (GroupMap::G, Generator::SigmaBarN) => vec![
                idx(Generator::Sigma(n + 1)),
                idx(Generator::Sigma(n)),
                idx(Generator::SigmaBarN),
                idx(Generator::Sigma(n)),
                idx(Generator::Sigma(n + 1)),
            ],
            (GroupMap::Beta, Generator::SigmaBar1) => {
                vec![idx(Generator::S0), idx(Generator::Sigma(1)), idx(Generator::S0)]
            }
            (GroupMap::Delta, Generator::SigmaBarN) => {
                vec![idx(Generator::T), idx(Generator::Sigma(n)), idx(Generator::T)]
            }
            (_, g) => vec![idx(g)],
        }
    }

    /// Letterwise substitution of a source word.
    pub fn apply(self, src: &CoxeterSystem, w: &Word) -> Result<(CoxeterSystem, Word)> {
        let tgt = self.target(src)?;
        src.check_word(w)?;
        let table: Vec<Vec<Letter>> = src
            .generators()
            .iter()
            .map(|&g| self.generator_image(src, &tgt, g))
            .collect();
        let out = w.letters().iter().flat_map(|&l| table[l as usize].iter().copied()).collect();
        Ok((tgt, Word(out)))
    }

    /// Image of a group element, through its canonical word.
    pub fn apply_element(self, src: &CoxeterSystem, x: &GroupElement) -> Result<(CoxeterSystem, GroupElement)> {
        let (tgt, w) = self.apply(src, &x.canonical_word(src))?;
        let g = GroupElement::from_word(&tgt, &w)?;
        Ok((tgt, g))
    }
}

impl fmt::Display for GroupMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            GroupMap::F => "Fn",
            GroupMap::L => "Ln",
            GroupMap::G => "Gn",
            GroupMap::Beta => "beta",
            GroupMap::Delta => "delta",
        })
    }
}

impl FromStr for GroupMap {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "Fn" => Ok(GroupMap::F),
            "Ln" => Ok(GroupMap::L),
            "Gn" => Ok(GroupMap::G),
            "beta" => Ok(GroupMap::Beta),
            "delta" => Ok(GroupMap::Delta),
            _ => Err(Error::Domain(format!("unknown group map {s:?}"))),
        }
    }
}

/// Outcome of a family of checks: the number of cases and the failures.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Report {
    /// Number of cases examined.
    pub checked: usize,
    /// Descriptions of failing cases.
    pub failures: Vec<String>,
}

impl Report {
    /// True when nothing failed.
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }

    /// Records one case.
    pub fn record(&mut self, ok: bool, what: impl FnOnce() -> String) {
        self.checked += 1;
        if !ok {
            self.failures.push(what());
        }
    }

    /// Merges another report into this one.
    pub fn absorb(&mut self, other: Report) {
        self.checked += other.checked;
        self.failures.extend(other.failures);
    }
}

/// Checks that the images of the generators satisfy every defining relation
/// of the source group.
pub fn check_homomorphism(map: GroupMap, src: &CoxeterSystem) -> Result<Report> {
    let tgt = map.target(src)?;
    let images: Vec<GroupElement> = src
        .generators()
        .iter()
        .map(|&g| GroupElement::from_word(&tgt, &Word(map.generator_image(src, &tgt, g))))
        .collect::<Result<_>>()?;
    let mut report = Report::default();
    for a in 0..src.rank() {
        for b in a..src.rank() {
            let m = src.order(a as Letter, b as Letter) as usize;
            let mut prod = GroupElement::identity(&tgt);
            let ab = images[a].mul(&images[b]);
            for _ in 0..m {
                prod = prod.mul(&ab);
            }
            report.record(prod.is_identity(), || {
                format!(
                    "{map}: ({} {})^{m} is not the identity",
                    src.token(a as Letter),
                    src.token(b as Letter)
                )
            });
        }
    }
    Ok(report)
}

/// Checks the two commuting squares on generators for the source index `n`
/// (`W(B~_n) -> W(B~_{n+1})`), together with homomorphy of every map
/// involved.
pub fn check_square(n: usize) -> Result<Report> {
    let mut report = Report::default();
    let b = CoxeterSystem::from_subscript(Family::Btilde, n)?;
    let d = CoxeterSystem::from_subscript(Family::Dtilde, n)?;
    let c = CoxeterSystem::from_subscript(Family::Ctilde, n)?;
    for l in 0..b.rank() as Letter {
        let w = Word(vec![l]);
        let (b1, lw) = GroupMap::L.apply(&b, &w)?;
        let (c1, left) = GroupMap::Beta.apply(&b1, &lw)?;
        let (c0, bw) = GroupMap::Beta.apply(&b, &w)?;
        let (c1b, right) = GroupMap::F.apply(&c0, &bw)?;
        debug_assert_eq!(c1, c1b);
        let ok = GroupElement::from_word(&c1, &left)? == GroupElement::from_word(&c1, &right)?;
        report.record(ok, || format!("beta L_{n} and F_{n} beta differ on {}", b.token(l)));
    }
    for l in 0..d.rank() as Letter {
        let w = Word(vec![l]);
        let (d1, gw) = GroupMap::G.apply(&d, &w)?;
        let (b1, left) = GroupMap::Delta.apply(&d1, &gw)?;
        let (b0, dw) = GroupMap::Delta.apply(&d, &w)?;
        let (_, right) = GroupMap::L.apply(&b0, &dw)?;
        let ok = GroupElement::from_word(&b1, &left)? == GroupElement::from_word(&b1, &right)?;
        report.record(ok, || format!("delta G_{n} and L_{n} delta differ on {}", d.token(l)));
    }
    report.absorb(check_homomorphism(GroupMap::L, &b)?);
    report.absorb(check_homomorphism(GroupMap::F, &c)?);
    report.absorb(check_homomorphism(GroupMap::G, &d)?);
    report.absorb(check_homomorphism(GroupMap::Beta, &b)?);
    report.absorb(check_homomorphism(GroupMap::Delta, &d)?);
    let b1 = CoxeterSystem::from_subscript(Family::Btilde, n + 1)?;
    let d1 = CoxeterSystem::from_subscript(Family::Dtilde, n + 1)?;
    report.absorb(check_homomorphism(GroupMap::Beta, &b1)?);
    report.absorb(check_homomorphism(GroupMap::Delta, &d1)?);
    Ok(report)
}

/// Checks that `map` is injective on the ball of radius `radius`.
pub fn check_injective(map: GroupMap, src: &CoxeterSystem, radius: usize, budget: Budget) -> Result<Report> {
    let mut report = Report::default();
    let mut seen: HashMap<GroupElement, Word> = HashMap::new();
    for e in enumerate_ball(src, radius, budget)? {
        let (_, img) = map.apply_element(src, &e.element)?;
        let clash = seen.insert(img, e.word.clone());
        report.record(clash.is_none(), || {
            format!(
                "{map} identifies {} and {}",
                src.format(clash.as_ref().unwrap()),
                src.format(&e.word)
            )
        });
    }
    Ok(report)
}

/// For every element of the ball of radius `max_len`, checks that the
/// substituted word is reduced (multiset criterion) with length
/// `l + 2 L` and the same affine length.
pub fn length_law_check(map: GroupMap, src: &CoxeterSystem, max_len: usize, budget: Budget) -> Result<Report> {
    if !matches!(map, GroupMap::F | GroupMap::L) {
        return Err(Error::Domain(format!("the length law concerns Fn and Ln, not {map}")));
    }
    let a = src.affine().expect("affine letter");
    let mut report = Report::default();
    for e in enumerate_ball(src, max_len, budget)? {
        let (tgt, img) = map.apply(src, &e.word)?;
        let big_l = e.word.count(a);
        let g = GroupElement::from_word(&tgt, &img)?;
        let canon = g.canonical_word(&tgt);
        let ok = is_reduced_phi(&tgt, &img)?
            && g.length(&tgt) == e.word.len() + 2 * big_l
            && canon.count(tgt.affine().unwrap()) == big_l;
        report.record(ok, || format!("{map} length law fails on {}", src.format(&e.word)));
    }
    Ok(report)
}

/// Checks that `t` commutes with the `L_n` images of `samples` random
/// elements of the ball of radius `radius`.
pub fn centralizer_check<R: Rng>(
    src: &CoxeterSystem,
    radius: usize,
    samples: usize,
    budget: Budget,
    rng: &mut R,
) -> Result<Report> {
    let ball = enumerate_ball(src, radius, budget)?;
    let tgt = GroupMap::L.target(src)?;
    let t = GroupElement::generator(&tgt, tgt.index(Generator::T));
    let mut report = Report::default();
    for e in ball.choose_multiple(rng, samples) {
        let (_, x) = GroupMap::L.apply_element(src, &e.element)?;
        report.record(t.mul(&x) == x.mul(&t), || {
            format!("t does not commute with L_n({})", src.format(&e.word))
        });
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;

    fn img(map: GroupMap, fam: Family, k: usize, w: &str) -> String {
        let src = CoxeterSystem::from_subscript(fam, k).unwrap();
        let (tgt, out) = map.apply(&src, &src.parse_word(w).unwrap()).unwrap();
        tgt.format(&out)
    }

    #[test]
    fn substitution_examples() {
        assert_eq!(img(GroupMap::L, Family::Btilde, 3, "t"), "s3 t s3");
        assert_eq!(img(GroupMap::L, Family::Btilde, 3, "s1 s2"), "s1 s2");
        assert_eq!(img(GroupMap::G, Family::Dtilde, 3, "sb2"), "s3 s2 sb3 s2 s3");
        assert_eq!(img(GroupMap::Beta, Family::Btilde, 4, "sb1"), "s0 s1 s0");
        assert_eq!(img(GroupMap::Beta, Family::Btilde, 4, "s2"), "s2");
        assert_eq!(img(GroupMap::Delta, Family::Dtilde, 4, "sb3"), "t s3 t");
        let b = CoxeterSystem::from_subscript(Family::Btilde, 3).unwrap();
        assert!(GroupMap::G.apply(&b, &Word::empty()).is_err());
    }

    #[test]
    fn squares_commute() {
        for n in [3, 4] {
            let r = check_square(n).unwrap();
            assert!(r.passed(), "{:?}", r.failures);
            assert!(r.checked > 0);
        }
    }

    #[test]
    fn injective_and_length_law() {
        let b = CoxeterSystem::from_subscript(Family::Btilde, 4).unwrap();
        assert!(check_injective(GroupMap::L, &b, 5, Budget::new(1_000_000)).unwrap().passed());
        let r = length_law_check(GroupMap::L, &b, 5, Budget::new(1_000_000)).unwrap();
        assert!(r.passed(), "{:?}", r.failures);
        let c = CoxeterSystem::from_subscript(Family::Ctilde, 3).unwrap();
        assert!(length_law_check(GroupMap::F, &c, 5, Budget::new(1_000_000)).unwrap().passed());
    }

    #[test]
    fn centralizer() {
        let b = CoxeterSystem::from_subscript(Family::Btilde, 4).unwrap();
        let mut rng = rand::rngs::StdRng::seed_from_u64(7);
        let r = centralizer_check(&b, 5, 50, Budget::new(1_000_000), &mut rng).unwrap();
        assert!(r.passed());
        assert_eq!(r.checked, 50);
    }
}
