//! Interval words `<m, k]`.
//!
//! For `k >= 1` and `-k <= m <= k + 1`:
//! `<i, k] = s_i ... s_k` for `i >= 2`, `<1, k] = s_1 s_2 ... s_k`,
//! `<-1, k] = sb1 s_2 ... s_k`, `<0, k] = s_1 sb1 s_2 ... s_k`,
//! `<-i, k] = s_i ... s_2 s_1 sb1 s_2 ... s_k` for `i >= 2`, and
//! `<k + 1, k]` is empty.

use crate::coxeter::{CoxeterSystem, Generator, Letter, Word};
use crate::error::{Error, Result};

/// True when `<m, k]` is defined.
pub fn interval_defined(m: i32, k: usize) -> bool {
    let k = k as i32;
    m == k + 1 || (k >= 1 && -k <= m && m <= k)
}

/// Length of `<m, k]`.
pub fn interval_len(m: i32, k: usize) -> usize {
    let ki = k as i32;
    let l = if m == ki + 1 {
        0
    } else if m >= 1 {
        ki - m + 1
    } else if m == -1 {
        ki
    } else if m == 0 {
        ki + 1
    } else {
        -m + ki
    };
    l as usize
}

/// Letters of `<m, k]` given the letters of `sb1` and `s_1, ..., s_k`.
fn interval_letters(m: i32, k: usize, sb1: Letter, sigma: impl Fn(usize) -> Letter) -> Vec<Letter> {
    let ki = k as i32;
    let mut v = Vec::new();
    if m == ki + 1 {
        return v;
    }
    if m >= 1 {
        v.extend((m as usize..=k).map(&sigma));
    } else if m == -1 {
        v.push(sb1);
        v.extend((2..=k).map(&sigma));
    } else if m == 0 {
        v.push(sigma(1));
        v.push(sb1);
        v.extend((2..=k).map(&sigma));
    } else {
        let i = (-m) as usize;
        v.extend((1..=i).rev().map(&sigma));
        v.push(sb1);
        v.extend((2..=k).map(&sigma));
    }
    v
}

/// The word `<m, k]` of a system containing `sb1, s_1, ..., s_k`.
pub fn interval(sys: &CoxeterSystem, m: i32, k: usize) -> Result<Word> {
    if !interval_defined(m, k) || k > sys.n() || sys.try_index(Generator::SigmaBar1).is_none() {
        return Err(Error::Interval { m, n: k as i32 });
    }
    Ok(Word(interval_letters(m, k, sys.sigma_bar1(), |i| sys.sigma(i))))
}

/// The word `<m, k]^{-1}`.
pub fn interval_inv(sys: &CoxeterSystem, m: i32, k: usize) -> Result<Word> {
    Ok(interval(sys, m, k)?.reversed())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coxeter::Family;

    #[test]
    fn examples() {
        let sys = CoxeterSystem::new(Family::Btilde, 5).unwrap();
        let f = |m, k| sys.format(&interval(&sys, m, k).unwrap());
        assert_eq!(f(2, 3), "s2 s3");
        assert_eq!(f(-2, 3), "s2 s1 sb1 s2 s3");
        assert_eq!(f(4, 3), "");
        assert_eq!(f(-1, 1), "sb1");
        assert_eq!(f(0, 1), "s1 sb1");
        assert_eq!(f(1, 3), "s1 s2 s3");
        assert_eq!(f(-3, 3), "s3 s2 s1 sb1 s2 s3");
        assert!(interval(&sys, -4, 3).is_err());
        assert!(interval(&sys, 2, 4).is_err());
    }

    #[test]
    fn lengths_match_words() {
        let sys = CoxeterSystem::new(Family::D, 6).unwrap();
        for k in 0..=5 {
            for m in -(k as i32)..=(k as i32 + 1) {
                if interval_defined(m, k) {
                    assert_eq!(interval(&sys, m, k).unwrap().len(), interval_len(m, k));
                }
            }
        }
    }
}
