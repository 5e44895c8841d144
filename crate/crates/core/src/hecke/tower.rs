//! The algebra morphisms `R_n`, `Q_n`, `P_n` lifting `F_n`, `L_n`, `G_n`.

use std::fmt;
use std::str::FromStr;

use super::{check_independent, gen_inverse, key_affine_length, HeckeElt};
use crate::coxeter::{enumerate_ball, Budget, CoxeterSystem, Family, Generator, GroupElement, Letter, Word};
use crate::error::{Error, Result};
use crate::towers::{GroupMap, Report};

/// A Hecke-level tower morphism.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum HeckeMap {
    /// Type C~, lifting `F_n`.
    R,
    /// Type B~, lifting `L_n`.
    Q,
    /// Type D~, lifting `G_n`.
    P,
}

impl HeckeMap {
    /// The group map it lifts.
    pub fn group_map(self) -> GroupMap {
        match self {
            HeckeMap::R => GroupMap::F,
            HeckeMap::Q => GroupMap::L,
            HeckeMap::P => GroupMap::G,
        }
    }

    /// The source family.
    pub fn family(self) -> Family {
        self.group_map().source_family()
    }
}

impl fmt::Display for HeckeMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            HeckeMap::R => "Rn",
            HeckeMap::Q => "Qn",
            HeckeMap::P => "Pn",
        })
    }
}

impl FromStr for HeckeMap {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "Rn" => Ok(HeckeMap::R),
            "Qn" => Ok(HeckeMap::Q),
            "Pn" => Ok(HeckeMap::P),
            _ => Err(Error::Domain(format!("unknown Hecke morphism {s:?}"))),
        }
    }
}

/// A morphism with its generator images precomputed.
#[derive(Debug, Clone)]
pub struct HeckeMorphism {
    map: HeckeMap,
    src: CoxeterSystem,
    tgt: CoxeterSystem,
    images: Vec<HeckeElt>,
}

fn product(sys: &CoxeterSystem, factors: &[HeckeElt]) -> Result<HeckeElt> {
    let mut acc = HeckeElt::one(sys);
    for f in factors.iter().rev() {
        acc = f.mult(&acc)?;
    }
    Ok(acc)
}

impl HeckeMorphism {
    /// Builds the morphism on the given source system.
    pub fn new(map: HeckeMap, src: &CoxeterSystem) -> Result<Self> {
        let tgt = map.group_map().target(src)?;
        let n = src.n();
        let g = |x: Generator| HeckeElt::generator(&tgt, tgt.index(x));
        let inv = |x: Generator| gen_inverse(&tgt, tgt.index(x));
        let images = src
            .generators()
            .iter()
            .map(|&x| match (map, x) {
                (HeckeMap::R | HeckeMap::Q, Generator::T) => product(
                    &tgt,
                    &[g(Generator::Sigma(n + 1)), g(Generator::T), inv(Generator::Sigma(n + 1))],
                ),
                (HeckeMap::P, Generator::SigmaBarN) => product(
                    &tgt,
                    &[
                        g(Generator::Sigma(n + 1)),
                        g(Generator::Sigma(n)),
                        g(Generator::SigmaBarN),
                        inv(Generator::Sigma(n)),
                        inv(Generator::Sigma(n + 1)),
                    ],
                ),
                _ => Ok(g(x)),
            })
            .collect::<Result<_>>()?;
        Ok(HeckeMorphism {
            map,
            src: src.clone(),
            tgt,
            images,
        })
    }

    /// Which morphism.
    pub fn map(&self) -> HeckeMap {
        self.map
    }

    /// The target system.
    pub fn target(&self) -> &CoxeterSystem {
        &self.tgt
    }

    /// Image of a source generator.
    pub fn generator_image(&self, s: Letter) -> &HeckeElt {
        &self.images[s as usize]
    }

    /// Image of `e_w`, through a reduced word of `w`.
    pub fn image(&self, w: &Word) -> Result<HeckeElt> {
        let canon = GroupElement::from_word(&self.src, w)?.canonical_word(&self.src);
        let mut acc = HeckeElt::one(&self.tgt);
        for &s in canon.letters().iter().rev() {
            acc = self.images[s as usize].mult(&acc)?;
        }
        Ok(acc)
    }

    /// Image of an element of the source algebra.
    pub fn apply(&self, h: &HeckeElt) -> Result<HeckeElt> {
        if h.system() != &self.src {
            return Err(Error::SystemMismatch);
        }
        let mut out = HeckeElt::zero(&self.tgt);
        for (w, c) in h.body() {
            out = out.add(&self.image(w)?.scale(c))?;
        }
        Ok(out)
    }
}

/// Image of `e_w` under `map` on the source system `src`.
pub fn morphism_image(map: HeckeMap, src: &CoxeterSystem, w: &Word) -> Result<HeckeElt> {
    HeckeMorphism::new(map, src)?.image(w)
}

/// Checks every defining relation of the source algebra on the generator
/// images.
pub fn check_homomorphism(map: HeckeMap, src: &CoxeterSystem) -> Result<Report> {
    let m = HeckeMorphism::new(map, src)?;
    let tgt = m.target().clone();
    let q = crate::laurent::LaurentPoly::q();
    let qm1 = &q - &crate::laurent::LaurentPoly::one();
    let mut report = Report::default();
    for a in 0..src.rank() as Letter {
        let ga = m.generator_image(a);
        let sq = ga.mult(ga)?;
        let want = HeckeElt::one(&tgt).scale(&q).add(&ga.scale(&qm1))?;
        report.record(sq == want, || format!("{map}: quadratic relation fails for {}", src.token(a)));
        for b in a + 1..src.rank() as Letter {
            let order = src.order(a, b) as usize;
            let gb = m.generator_image(b);
            let alt = |x: &HeckeElt, y: &HeckeElt| -> Result<HeckeElt> {
                let factors: Vec<HeckeElt> = (0..order).map(|i| if i % 2 == 0 { x.clone() } else { y.clone() }).collect();
                product(&tgt, &factors)
            };
            let ok = alt(ga, gb)? == alt(gb, ga)?;
            report.record(ok, || {
                format!("{map}: braid relation fails for {} {}", src.token(a), src.token(b))
            });
        }
    }
    Ok(report)
}

/// For each `w` with `l(w) <= max_len`, checks that the image of `e_w` is
/// `A g_{x_0} + ...` with `x_0` the group image of `w`, `A` a power of `q`,
/// and every other key `x` shorter than `x_0` with `L(x) <= L(w)`.
pub fn check_leading_shape(map: HeckeMap, src: &CoxeterSystem, max_len: usize, budget: Budget) -> Result<Report> {
    if map == HeckeMap::P {
        return Err(Error::Domain("the leading term shape concerns Rn and Qn".into()));
    }
    let m = HeckeMorphism::new(map, src)?;
    let tgt = m.target().clone();
    let a = src.affine().expect("affine letter");
    let mut report = Report::default();
    for e in enumerate_ball(src, max_len, budget)? {
        let h = m.image(&e.word)?;
        let (_, x0) = map.group_map().apply_element(src, &e.element)?;
        let top = x0.canonical_word(&tgt);
        let big_l = e.word.count(a);
        let mut ok = h.coeff(&top).is_q_power();
        for (x, _) in h.body() {
            if x != &top {
                ok &= x.len() < top.len() && key_affine_length(&tgt, x)? <= big_l;
            }
        }
        report.record(ok, || format!("{map}: leading shape fails on {}", src.format(&e.word)));
    }
    Ok(report)
}

/// Whether the images of `e_w` over the ball of radius `radius` are
/// linearly independent. Returns the number of images and the verdict.
pub fn independent_on_ball(map: HeckeMap, src: &CoxeterSystem, radius: usize, budget: Budget) -> Result<(usize, bool)> {
    let m = HeckeMorphism::new(map, src)?;
    let images: Vec<HeckeElt> = enumerate_ball(src, radius, budget)?
        .iter()
        .map(|e| m.image(&e.word))
        .collect::<Result<_>>()?;
    Ok((images.len(), check_independent(&images)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hecke::leading_decomposition;
    use crate::laurent::LaurentPoly;

    fn sys(f: Family, k: usize) -> CoxeterSystem {
        CoxeterSystem::from_subscript(f, k).unwrap()
    }

    #[test]
    fn image_of_t() {
        let b = sys(Family::Btilde, 3);
        let h = morphism_image(HeckeMap::Q, &b, &b.parse_word("t").unwrap()).unwrap();
        let tgt = b.clone();
        let tgt = HeckeMap::Q.group_map().target(&tgt).unwrap();
        let p = LaurentPoly::p();
        let want = HeckeElt::from_terms(
            &tgt,
            [
                (tgt.parse_word("s3 t s3").unwrap(), p.clone()),
                (tgt.parse_word("s3 t").unwrap(), &p - &LaurentPoly::one()),
            ],
        )
        .unwrap();
        assert_eq!(h, want);
        let s1 = morphism_image(HeckeMap::Q, &b, &b.parse_word("s1").unwrap()).unwrap();
        assert_eq!(s1, HeckeElt::g(&tgt, &tgt.parse_word("s1").unwrap()).unwrap());
        let lead = leading_decomposition(&h).unwrap();
        assert_eq!(lead.max_affine, 1);
        assert_eq!(lead.top.len(), 1);
        assert_eq!(lead.top.coeff(&tgt.parse_word("s3 t s3").unwrap()), p);
    }

    #[test]
    fn homomorphisms() {
        for k in [3, 4] {
            assert!(check_homomorphism(HeckeMap::Q, &sys(Family::Btilde, k)).unwrap().passed());
            assert!(check_homomorphism(HeckeMap::R, &sys(Family::Ctilde, k)).unwrap().passed());
            assert!(check_homomorphism(HeckeMap::P, &sys(Family::Dtilde, k)).unwrap().passed());
        }
    }

    #[test]
    fn leading_shape_and_independence() {
        let b = sys(Family::Btilde, 3);
        let r = check_leading_shape(HeckeMap::Q, &b, 5, Budget::new(100_000)).unwrap();
        assert!(r.passed(), "{:?}", r.failures);
        let c = sys(Family::Ctilde, 3);
        assert!(check_leading_shape(HeckeMap::R, &c, 5, Budget::new(100_000)).unwrap().passed());
        let (rows, ok) = independent_on_ball(HeckeMap::Q, &b, 4, Budget::new(100_000)).unwrap();
        assert!(ok && rows > 10);
    }
}
