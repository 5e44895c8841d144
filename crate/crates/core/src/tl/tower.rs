//! The morphisms `Q_n` and `P_n` induced on Temperley-Lieb algebras, the
//! relation report and truncated faithfulness.

use super::{eval_v, eval_z, TLAlgebra, TLElt};
use crate::coxeter::{enumerate_ball, is_fully_commutative, Budget, CoxeterSystem, Generator, Letter, Word};
use crate::error::{Error, Result};
use crate::hecke::HeckeMap;
use crate::laurent::{rows_independent, LaurentPoly, LinComb};
use crate::towers::Report;

/// A Temperley-Lieb tower morphism with precomputed generator images.
#[derive(Debug)]
pub struct TLMorphism {
    map: HeckeMap,
    src: CoxeterSystem,
    alg: TLAlgebra,
    images: Vec<TLElt>,
}

impl TLMorphism {
    /// Builds `Q_n` (type B~) or `P_n` (type D~) on the source system.
    pub fn new(map: HeckeMap, src: &CoxeterSystem) -> Result<Self> {
        if map == HeckeMap::R {
            return Err(Error::Domain("Temperley-Lieb morphisms are provided for Qn and Pn".into()));
        }
        let tgt = map.group_map().target(src)?;
        let alg = TLAlgebra::new(&tgt);
        let n = src.n();
        let g = |x: Generator| tgt.index(x);
        let mut images = Vec::with_capacity(src.rank());
        for &x in src.generators() {
            let img = match (map, x) {
                (HeckeMap::Q, Generator::T) => {
                    let head = alg.reduce_word(&Word(vec![g(Generator::Sigma(n + 1)), g(Generator::T)]))?;
                    alg.mult(&head, &alg.gen_inverse(g(Generator::Sigma(n + 1))))?
                }
                (HeckeMap::P, Generator::SigmaBarN) => {
                    let head = alg.reduce_word(&Word(vec![
                        g(Generator::Sigma(n + 1)),
                        g(Generator::Sigma(n)),
                        g(Generator::SigmaBarN),
                    ]))?;
                    let a = alg.mult(&head, &alg.gen_inverse(g(Generator::Sigma(n))))?;
                    alg.mult(&a, &alg.gen_inverse(g(Generator::Sigma(n + 1))))?
                }
                _ => alg.reduce_word(&Word(vec![g(x)]))?,
            };
            images.push(img);
        }
        Ok(TLMorphism {
            map,
            src: src.clone(),
            alg,
            images,
        })
    }

    /// Which morphism.
    pub fn map(&self) -> HeckeMap {
        self.map
    }

    /// The target engine.
    pub fn algebra(&self) -> &TLAlgebra {
        &self.alg
    }

    /// The target system.
    pub fn target(&self) -> &CoxeterSystem {
        self.alg.system()
    }

    /// Image of a source generator.
    pub fn generator_image(&self, s: Letter) -> &TLElt {
        &self.images[s as usize]
    }

    /// Image of `h_w` for a reduced fully commutative word `w`.
    pub fn image(&self, w: &Word) -> Result<TLElt> {
        TLElt::basis(&self.src, w)?;
        let mut acc: LinComb<Word> = LinComb::term(Word::empty(), LaurentPoly::one());
        for &s in w.letters() {
            let mut next = LinComb::zero();
            for (v, c) in self.images[s as usize].body() {
                next.add_scaled(&self.alg.mult_right_word(&acc, v), c);
            }
            acc = next;
        }
        Ok(TLElt::from_body(self.alg.system(), acc))
    }
}

/// Image of `h_w` under `Q_n` or `P_n`.
pub fn tl_morphism_image(map: HeckeMap, src: &CoxeterSystem, w: &Word) -> Result<TLElt> {
    TLMorphism::new(map, src)?.image(w)
}

/// Evaluates every defining relation of the Temperley-Lieb algebra through
/// the engine: commutations, braids, quadratic relations, and `V = 0` or
/// `Z = 0` for each pair with `m = 3` or `m = 4`.
pub fn check_tl_relations(sys: &CoxeterSystem) -> Result<Report> {
    let alg = TLAlgebra::new(sys);
    let mut report = Report::default();
    let q = LaurentPoly::q();
    let qm1 = &q - &LaurentPoly::one();
    let word = |v: &[Letter]| Word(v.to_vec());
    for a in 0..sys.rank() as Letter {
        let sq = alg.reduce_word(&word(&[a, a]))?;
        let rhs = alg
            .reduce_word(&word(&[a]))?
            .scale(&qm1)
            .add(&TLElt::one(sys).scale(&q))?;
        report.record(sq == rhs, || format!("T^2 = (q-1)T + q fails for {}", sys.token(a)));
        for b in a + 1..sys.rank() as Letter {
            let m = sys.order(a, b) as usize;
            let alt = |x: Letter, y: Letter| word(&(0..m).map(|i| if i % 2 == 0 { x } else { y }).collect::<Vec<_>>());
            let lhs = alg.reduce_word(&alt(a, b))?;
            let rhs = alg.reduce_word(&alt(b, a))?;
            report.record(lhs == rhs, || format!("braid relation fails for {} {}", sys.token(a), sys.token(b)));
            let vanish = match m {
                3 => Some(eval_v(&alg, a, b)?),
                4 => Some(eval_z(&alg, a, b)?),
                _ => None,
            };
            if let Some(v) = vanish {
                report.record(v.is_zero(), || {
                    format!("ideal generator does not vanish for {} {}", sys.token(a), sys.token(b))
                });
            }
        }
    }
    Ok(report)
}

/// Fully commutative elements of length at most `max_len`, as canonical
/// words, by breadth-first search.
pub fn fc_ball(sys: &CoxeterSystem, max_len: usize, budget: Budget) -> Result<Vec<Word>> {
    Ok(enumerate_ball(sys, max_len, budget)?
        .into_iter()
        .filter(|e| is_fully_commutative(sys, &e.element))
        .map(|e| e.word)
        .collect())
}

/// Images of all fully commutative basis elements of length at most
/// `max_len`, and whether they are linearly independent.
pub fn check_faithful(map: HeckeMap, src: &CoxeterSystem, max_len: usize, budget: Budget) -> Result<(usize, bool)> {
    let m = TLMorphism::new(map, src)?;
    let images: Vec<TLElt> = fc_ball(src, max_len, budget)?
        .iter()
        .map(|w| m.image(w))
        .collect::<Result<_>>()?;
    Ok((images.len(), independent(&images)))
}

/// Linear independence of Temperley-Lieb elements over `Z[q, q^{-1}]`.
pub fn independent(images: &[TLElt]) -> bool {
    let cols = crate::hecke::longest_first(images.iter().flat_map(|h| h.body().keys()));
    let rows: Vec<Vec<(usize, LaurentPoly)>> = images
        .iter()
        .map(|h| {
            let mut r: Vec<(usize, LaurentPoly)> = h.body().iter().map(|(w, c)| (cols[w], c.clone())).collect();
            r.sort_by_key(|(j, _)| *j);
            r
        })
        .collect();
    rows_independent(&rows)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coxeter::Family;

    #[test]
    fn relations_hold() {
        for (f, k) in [(Family::Btilde, 4), (Family::Dtilde, 4), (Family::D, 4), (Family::Ctilde, 3)] {
            let sys = CoxeterSystem::from_subscript(f, k).unwrap();
            let r = check_tl_relations(&sys).unwrap();
            assert!(r.passed(), "{:?}", r.failures);
        }
    }

    #[test]
    fn small_faithfulness() {
        let b = CoxeterSystem::from_subscript(Family::Btilde, 3).unwrap();
        let (rows, ok) = check_faithful(HeckeMap::Q, &b, 5, Budget::new(100_000)).unwrap();
        assert!(ok && rows > 10);
        let d = CoxeterSystem::from_subscript(Family::Dtilde, 4).unwrap();
        let (rows, ok) = check_faithful(HeckeMap::P, &d, 4, Budget::new(100_000)).unwrap();
        assert!(ok && rows > 10);
    }
}
