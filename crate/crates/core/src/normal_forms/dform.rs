//! Products of interval words `<m_1, n_1] ... <m_r, n_r]` describing the
//! elements of the finite parabolic subgroup of type D.

use std::fmt;

use super::interval::{interval, interval_defined, interval_len};
use crate::coxeter::{CoxeterSystem, GroupElement, Word};
use crate::error::{Error, Result};

/// A sequence of nonempty intervals `(m_i, n_i)` with `n_1 > ... > n_r >= 1`
/// and `|m_i| <= n_i`.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct DForm {
    /// The pairs `(m_i, n_i)`.
    pub terms: Vec<(i32, usize)>,
}

impl DForm {
    /// The empty product.
    pub fn identity() -> Self {
        DForm { terms: Vec::new() }
    }

    /// Builds from pairs.
    pub fn new(terms: Vec<(i32, usize)>) -> Self {
        DForm { terms }
    }

    /// True for the empty product.
    pub fn is_identity(&self) -> bool {
        self.terms.is_empty()
    }

    /// Number of intervals.
    pub fn r(&self) -> usize {
        self.terms.len()
    }

    /// The first left endpoint `m_1`.
    pub fn first_m(&self) -> Option<i32> {
        self.terms.first().map(|t| t.0)
    }

    /// Length of the rendered word.
    pub fn len(&self) -> usize {
        self.terms.iter().map(|&(m, k)| interval_len(m, k)).sum()
    }

    /// True when the rendered word is empty.
    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// The rendered word.
    pub fn word(&self, sys: &CoxeterSystem) -> Result<Word> {
        let mut out = Vec::new();
        for &(m, k) in &self.terms {
            out.extend_from_slice(interval(sys, m, k)?.letters());
        }
        Ok(Word(out))
    }

    /// Image under the automorphism exchanging `sb1` and `s_1`.
    pub fn psi1(&self) -> DForm {
        DForm {
            terms: self
                .terms
                .iter()
                .map(|&(m, k)| if m.abs() == 1 { (-m, k) } else { (m, k) })
                .collect(),
        }
    }

    /// Checks `n >= n_1 > ... > n_r >= 1` and `|m_i| <= n_i`.
    pub fn check_shape(&self, n: usize) -> Result<()> {
        let mut prev = n + 1;
        for (idx, &(m, k)) in self.terms.iter().enumerate() {
            if k == 0 || k >= prev {
                return Err(Error::InvalidForm(format!(
                    "interval {} has right endpoint {k}, expected below {prev}",
                    idx + 1
                )));
            }
            if !interval_defined(m, k) || m == k as i32 + 1 {
                return Err(Error::InvalidForm(format!(
                    "interval {} is <{m},{k}]; need |m| <= {k}",
                    idx + 1
                )));
            }
            prev = k;
        }
        Ok(())
    }

    /// Checks the conditions characterizing fully commutative elements:
    /// the entries `+-1` alternate, and either
    /// `m_1 > ... > m_s >= 2` followed only by `+-1` entries, or
    /// `m_1 > ... > m_{r-1} > -m_r >= 0` with `m_{r-1} > 1` and `m_r != -1`.
    pub fn validate(&self, n: usize) -> Result<()> {
        self.check_shape(n)?;
        let ms: Vec<i32> = self.terms.iter().map(|t| t.0).collect();
        let units: Vec<i32> = ms.iter().copied().filter(|m| m.abs() == 1).collect();
        if units.windows(2).any(|w| w[0] == w[1]) {
            return Err(Error::InvalidForm(
                "occurrences of 1 and -1 do not alternate".into(),
            ));
        }
        if self.is_identity() {
            return Ok(());
        }
        let s = ms.iter().take_while(|&&m| m >= 2).count();
        let decreasing = |v: &[i32]| v.windows(2).all(|w| w[0] > w[1]);
        let case1 = decreasing(&ms[..s]) && ms[s..].iter().all(|m| m.abs() == 1);
        let r = ms.len();
        let last = ms[r - 1];
        let case2 = last <= 0
            && last != -1
            && decreasing(&ms[..r - 1])
            && (r == 1 || (ms[r - 2] > -last && ms[r - 2] > 1));
        if case1 || case2 {
            Ok(())
        } else {
            Err(Error::InvalidForm(format!(
                "left endpoints {ms:?} are neither decreasing then alternating +-1 nor decreasing with a nonpositive last entry"
            )))
        }
    }

    /// Checks that the form is `<e, r_1] <-e, r_2] <e, r_3] ...` for the
    /// given starting sign `e`.
    pub fn is_alternating_from(&self, first: i32) -> bool {
        self.terms
            .iter()
            .enumerate()
            .all(|(i, &(m, _))| m == if i % 2 == 0 { first } else { -first })
    }

    /// The unique form of an element of the parabolic subgroup generated by
    /// `sb1, s_1, ..., s_n`, found by peeling left cosets of the smaller
    /// parabolic subgroups.
    pub fn parse(sys: &CoxeterSystem, x: &GroupElement, n: usize) -> Result<DForm> {
        let mut w = x.clone();
        let mut terms = Vec::new();
        for k in (1..=n).rev() {
            let mut found = None;
            for m in -(k as i32)..=(k as i32 + 1) {
                let iv = interval(sys, m, k)?;
                let mut y = w.clone();
                for &s in iv.letters() {
                    y.mul_gen_left(sys, s);
                }
                if in_parabolic(sys, &y, k) {
                    found = Some((m, y));
                    break;
                }
            }
            let (m, y) = found.ok_or_else(|| {
                Error::Domain("element outside the finite parabolic subgroup".into())
            })?;
            if m != k as i32 + 1 {
                terms.push((m, k));
            }
            w = y;
        }
        if !w.is_identity() {
            return Err(Error::Domain(
                "element outside the finite parabolic subgroup".into(),
            ));
        }
        Ok(DForm { terms })
    }
}

/// True when `y` lies in the subgroup generated by `sb1, s_1, ..., s_{k-1}`
/// (trivial for `k = 1`).
fn in_parabolic(sys: &CoxeterSystem, y: &GroupElement, k: usize) -> bool {
    if k == 1 {
        return y.is_identity();
    }
    let allowed = |l: u8| l == sys.sigma_bar1() || (1..k).any(|i| sys.sigma(i) == l);
    let mut z = y.clone();
    'outer: loop {
        for s in 0..sys.rank() as u8 {
            if z.has_left_descent(s) {
                if !allowed(s) {
                    return false;
                }
                z.mul_gen_left(sys, s);
                continue 'outer;
            }
        }
        return true;
    }
}

/// Finds `f` with `<f, n]^{-1} = x`, for `-n <= f <= n + 1`.
pub fn inverse_interval_param(sys: &CoxeterSystem, x: &GroupElement, n: usize) -> Option<i32> {
    (-(n as i32)..=(n as i32 + 1)).find(|&f| {
        interval(sys, f, n)
            .ok()
            .and_then(|w| GroupElement::from_word(sys, &w.reversed()).ok())
            .is_some_and(|g| &g == x)
    })
}

/// Every form accepted by [`DForm::validate`] for the parabolic subgroup
/// generated by `sb1, s_1, ..., s_n`, with length at most `max_len`.
pub fn enumerate_valid(n: usize, max_len: Option<usize>) -> Vec<DForm> {
    let mut out = Vec::new();
    let mut cur = Vec::new();
    fn rec(
        n_prev: usize,
        n: usize,
        len: usize,
        max_len: Option<usize>,
        cur: &mut Vec<(i32, usize)>,
        out: &mut Vec<DForm>,
    ) {
        let f = DForm::new(cur.clone());
        if f.validate(n).is_ok() {
            out.push(f);
        }
        for k in (1..n_prev).rev() {
            for m in -(k as i32)..=(k as i32) {
                let l = len + interval_len(m, k);
                if max_len.is_some_and(|ml| l > ml) {
                    continue;
                }
                cur.push((m, k));
                rec(k, n, l, max_len, cur, out);
                cur.pop();
            }
        }
    }
    rec(n + 1, n, 0, max_len, &mut cur, &mut out);
    out
}

impl fmt::Display for DForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("1");
        }
        let parts: Vec<String> = self.terms.iter().map(|(m, k)| format!("<{m},{k}]")).collect();
        f.write_str(&parts.join(""))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coxeter::{enumerate_ball, is_fully_commutative, Budget, Family};
    use std::collections::HashSet;

    fn check_finite(rank: usize, total: usize, fc: usize) {
        let sys = CoxeterSystem::new(Family::D, rank).unwrap();
        let n = sys.n();
        let ball = enumerate_ball(&sys, 100, Budget::new(100_000)).unwrap();
        assert_eq!(ball.len(), total);
        let mut fc_count = 0;
        let mut valid_elements = HashSet::new();
        for e in &ball {
            let form = DForm::parse(&sys, &e.element, n).unwrap();
            let g = GroupElement::from_word(&sys, &form.word(&sys).unwrap()).unwrap();
            assert_eq!(g, e.element);
            assert_eq!(form.len(), e.word.len(), "{form} not reduced");
            let is_fc = is_fully_commutative(&sys, &e.element);
            assert_eq!(form.validate(n).is_ok(), is_fc, "{form}");
            if is_fc {
                fc_count += 1;
                valid_elements.insert(e.element.clone());
            }
        }
        assert_eq!(fc_count, fc);
        let grid = enumerate_valid(n, None);
        assert_eq!(grid.len(), fc);
        for f in grid {
            let g = GroupElement::from_word(&sys, &f.word(&sys).unwrap()).unwrap();
            assert!(valid_elements.contains(&g));
        }
    }

    #[test]
    fn d4_brute_force() {
        check_finite(4, 192, 48);
    }

    #[test]
    fn d5_brute_force() {
        check_finite(5, 1920, 167);
    }

    #[test]
    fn examples() {
        let sys = CoxeterSystem::new(Family::D, 4).unwrap();
        let g = GroupElement::from_word(&sys, &sys.parse_word("s1 sb1").unwrap()).unwrap();
        assert_eq!(DForm::parse(&sys, &g, 3).unwrap().terms, vec![(0, 1)]);
        let id = GroupElement::identity(&sys);
        assert!(DForm::parse(&sys, &id, 3).unwrap().is_identity());
        assert_eq!(DForm::new(vec![(-1, 3), (1, 2)]).psi1().terms, vec![(1, 3), (-1, 2)]);
    }
}
