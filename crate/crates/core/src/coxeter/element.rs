//! Group elements as exact matrices in the geometric representation.

use std::cmp::Ordering;
use std::hash::{Hash, Hasher};

use super::quadint::QuadInt;
use super::system::{CoxeterSystem, Letter, Word};
use crate::error::Result;

/// Left or right side.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Side {
    /// Multiplication or descent on the left.
    Left,
    /// Multiplication or descent on the right.
    Right,
}

/// An element of a Coxeter group, stored as the matrix of its action on the
/// simple roots (column `j` holds `w(alpha_j)`) together with its inverse.
///
/// Equality and hashing use the matrix only.
#[derive(Debug, Clone)]
pub struct GroupElement {
    r: usize,
    m: Vec<QuadInt>,
    inv: Vec<QuadInt>,
}

impl PartialEq for GroupElement {
    fn eq(&self, other: &Self) -> bool {
        self.m == other.m
    }
}

impl Eq for GroupElement {}

impl Hash for GroupElement {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.m.hash(state);
    }
}

fn identity_matrix(r: usize) -> Vec<QuadInt> {
    let mut m = vec![QuadInt::zero(); r * r];
    for i in 0..r {
        m[i * r + i] = QuadInt::one();
    }
    m
}

fn matmul(r: usize, a: &[QuadInt], b: &[QuadInt]) -> Vec<QuadInt> {
    let mut c = vec![QuadInt::zero(); r * r];
    for i in 0..r {
        for k in 0..r {
            let x = a[i * r + k];
            if x.is_zero() {
                continue;
            }
            for j in 0..r {
                let y = b[k * r + j];
                if !y.is_zero() {
                    c[i * r + j] += x * y;
                }
            }
        }
    }
    c
}

// Replaces row `s` of `m` by its image under the generator `s` acting on the
// left: row_s <- -row_s - sum_{t != s} c(s,t) row_t.
fn left_gen(sys: &CoxeterSystem, r: usize, m: &mut [QuadInt], s: Letter) {
    let su = s as usize;
    for j in 0..r {
        let mut v = -m[su * r + j];
        for t in 0..r {
            if t != su {
                let c = sys.form(s, t as Letter);
                if !c.is_zero() {
                    v -= c * m[t * r + j];
                }
            }
        }
        m[su * r + j] = v;
    }
}

// Column operation for right multiplication by `s`:
// col_t <- col_t - c(s,t) col_s, col_s <- -col_s.
fn right_gen(sys: &CoxeterSystem, r: usize, m: &mut [QuadInt], s: Letter) {
    let su = s as usize;
    for t in 0..r {
        if t == su {
            continue;
        }
        let c = sys.form(s, t as Letter);
        if c.is_zero() {
            continue;
        }
        for i in 0..r {
            let x = m[i * r + su];
            if !x.is_zero() {
                m[i * r + t] -= c * x;
            }
        }
    }
    for i in 0..r {
        m[i * r + su] = -m[i * r + su];
    }
}

fn column_sign(r: usize, m: &[QuadInt], j: usize) -> Ordering {
    for i in 0..r {
        let s = m[i * r + j].signum();
        if s != Ordering::Equal {
            return s;
        }
    }
    Ordering::Equal
}

impl GroupElement {
    /// The identity of `sys`.
    pub fn identity(sys: &CoxeterSystem) -> Self {
        let r = sys.rank();
        GroupElement {
            r,
            m: identity_matrix(r),
            inv: identity_matrix(r),
        }
    }

    /// The generator at letter `s`.
    pub fn generator(sys: &CoxeterSystem, s: Letter) -> Self {
        let mut g = Self::identity(sys);
        g.mul_gen_right(sys, s);
        g
    }

    /// Product of the generators of `w`, left to right.
    pub fn from_word(sys: &CoxeterSystem, w: &Word) -> Result<Self> {
        sys.check_word(w)?;
        let mut g = Self::identity(sys);
        for &s in w.letters() {
            g.mul_gen_right(sys, s);
        }
        Ok(g)
    }

    /// Number of generators of the ambient system.
    pub fn rank(&self) -> usize {
        self.r
    }

    /// Matrix entry `(i, j)`: coordinate `i` of `w(alpha_j)`.
    pub fn entry(&self, i: usize, j: usize) -> QuadInt {
        self.m[i * self.r + j]
    }

    /// In place right multiplication by a generator.
    pub fn mul_gen_right(&mut self, sys: &CoxeterSystem, s: Letter) {
        right_gen(sys, self.r, &mut self.m, s);
        left_gen(sys, self.r, &mut self.inv, s);
    }

    /// In place left multiplication by a generator.
    pub fn mul_gen_left(&mut self, sys: &CoxeterSystem, s: Letter) {
        left_gen(sys, self.r, &mut self.m, s);
        right_gen(sys, self.r, &mut self.inv, s);
    }

    /// `self * s`.
    pub fn times_gen(&self, sys: &CoxeterSystem, s: Letter) -> Self {
        let mut g = self.clone();
        g.mul_gen_right(sys, s);
        g
    }

    /// `s * self`.
    pub fn gen_times(&self, sys: &CoxeterSystem, s: Letter) -> Self {
        let mut g = self.clone();
        g.mul_gen_left(sys, s);
        g
    }

    /// Group product `self * other`.
    pub fn mul(&self, other: &GroupElement) -> Self {
        GroupElement {
            r: self.r,
            m: matmul(self.r, &self.m, &other.m),
            inv: matmul(self.r, &other.inv, &self.inv),
        }
    }

    /// The inverse element.
    pub fn inverse(&self) -> Self {
        GroupElement {
            r: self.r,
            m: self.inv.clone(),
            inv: self.m.clone(),
        }
    }

    /// True for the identity.
    pub fn is_identity(&self) -> bool {
        self.m == identity_matrix(self.r)
    }

    /// True when `l(ws) < l(w)`, i.e. `w(alpha_s)` is negative.
    pub fn has_right_descent(&self, s: Letter) -> bool {
        column_sign(self.r, &self.m, s as usize) == Ordering::Less
    }

    /// True when `l(sw) < l(w)`, i.e. `w^{-1}(alpha_s)` is negative.
    pub fn has_left_descent(&self, s: Letter) -> bool {
        column_sign(self.r, &self.inv, s as usize) == Ordering::Less
    }

    /// Descent test on either side.
    pub fn has_descent(&self, side: Side, s: Letter) -> bool {
        match side {
            Side::Left => self.has_left_descent(s),
            Side::Right => self.has_right_descent(s),
        }
    }

    /// The descent set on `side`, in alphabet order.
    pub fn descents(&self, side: Side) -> Vec<Letter> {
        (0..self.r as Letter)
            .filter(|&s| self.has_descent(side, s))
            .collect()
    }

    /// ShortLex minimal reduced word: repeatedly strip the smallest left
    /// descent.
    pub fn canonical_word(&self, sys: &CoxeterSystem) -> Word {
        let mut x = self.clone();
        let mut out = Vec::new();
        'outer: loop {
            for s in 0..self.r as Letter {
                if x.has_left_descent(s) {
                    out.push(s);
                    x.mul_gen_left(sys, s);
                    continue 'outer;
                }
            }
            break;
        }
        Word(out)
    }

    /// Coxeter length.
    pub fn length(&self, sys: &CoxeterSystem) -> usize {
        let mut x = self.clone();
        let mut n = 0;
        'outer: loop {
            for s in 0..self.r as Letter {
                if x.has_left_descent(s) {
                    n += 1;
                    x.mul_gen_left(sys, s);
                    continue 'outer;
                }
            }
            return n;
        }
    }
}

/// Convenience wrapper for [`GroupElement::from_word`].
pub fn element_of(sys: &CoxeterSystem, w: &Word) -> Result<GroupElement> {
    GroupElement::from_word(sys, w)
}

/// Number of occurrences of `gen` in `w`.
pub fn count_occurrences(w: &Word, gen: Letter) -> usize {
    w.count(gen)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coxeter::system::Family;

    fn all_systems() -> Vec<CoxeterSystem> {
        vec![
            CoxeterSystem::new(Family::D, 4).unwrap(),
            CoxeterSystem::new(Family::Btilde, 5).unwrap(),
            CoxeterSystem::new(Family::Ctilde, 4).unwrap(),
            CoxeterSystem::new(Family::Dtilde, 4).unwrap(),
            CoxeterSystem::new(Family::Dtilde, 5).unwrap(),
        ]
    }

    #[test]
    fn relations_hold() {
        for sys in all_systems() {
            let r = sys.rank() as Letter;
            for s in 0..r {
                for t in 0..r {
                    let m = sys.order(s, t) as usize;
                    let mut g = GroupElement::identity(&sys);
                    for _ in 0..m {
                        g.mul_gen_right(&sys, s);
                        g.mul_gen_right(&sys, t);
                    }
                    assert!(g.is_identity(), "{} ({s}{t})^{m}", sys.name());
                    if m > 1 {
                        let mut h = GroupElement::identity(&sys);
                        for k in 0..m - 1 {
                            h.mul_gen_right(&sys, if k % 2 == 0 { s } else { t });
                        }
                        assert!(!h.is_identity());
                    }
                }
            }
        }
    }

    #[test]
    fn inverse_is_consistent() {
        let sys = CoxeterSystem::new(Family::Btilde, 5).unwrap();
        let w = sys.parse_word("s3 t s3 s2 sb1 t s1").unwrap();
        let g = GroupElement::from_word(&sys, &w).unwrap();
        assert!(g.mul(&g.inverse()).is_identity());
        let h = GroupElement::from_word(&sys, &w.reversed()).unwrap();
        assert_eq!(h, g.inverse());
        let mut left = GroupElement::identity(&sys);
        for &s in w.letters().iter().rev() {
            left.mul_gen_left(&sys, s);
        }
        assert_eq!(left, g);
    }

    #[test]
    fn descents_of_s1s2() {
        let sys = CoxeterSystem::new(Family::D, 4).unwrap();
        let g = GroupElement::from_word(&sys, &sys.parse_word("s1 s2").unwrap()).unwrap();
        assert_eq!(g.descents(Side::Left), vec![sys.sigma(1)]);
        assert_eq!(g.descents(Side::Right), vec![sys.sigma(2)]);
        assert!(GroupElement::identity(&sys).descents(Side::Left).is_empty());
        let h = GroupElement::from_word(&sys, &sys.parse_word("s2 s1").unwrap()).unwrap();
        assert_ne!(g, h);
    }

    #[test]
    fn canonical_words() {
        let sys = CoxeterSystem::new(Family::D, 4).unwrap();
        let c = |s: &str| {
            let g = GroupElement::from_word(&sys, &sys.parse_word(s).unwrap()).unwrap();
            sys.format(&g.canonical_word(&sys))
        };
        assert_eq!(c("s3 s1"), "s1 s3");
        assert_eq!(c("s1 sb1"), "sb1 s1");
        assert_eq!(c(""), "");
        assert_eq!(c("s1 s1"), "");
        assert_eq!(c("s2 s1 s2"), "s1 s2 s1");
    }
}
