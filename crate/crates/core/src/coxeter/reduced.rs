//! Reducedness tests, commutation classes and full commutativity.

use std::collections::{BTreeSet, HashSet, VecDeque};

use super::budget::Budget;
use super::element::GroupElement;
use super::system::{CoxeterSystem, Letter, Word};
use crate::error::{Error, Result};

/// Incremental test: each letter must raise the length of the prefix.
pub fn is_reduced(sys: &CoxeterSystem, w: &Word) -> Result<bool> {
    sys.check_word(w)?;
    let mut g = GroupElement::identity(sys);
    for &s in w.letters() {
        if g.has_right_descent(s) {
            return Ok(false);
        }
        g.mul_gen_right(sys, s);
    }
    Ok(true)
}

/// The reflections `h_j = (s_1...s_{j-1}) s_j (s_1...s_{j-1})^{-1}`.
pub fn phi_multiset(sys: &CoxeterSystem, w: &Word) -> Result<Vec<GroupElement>> {
    sys.check_word(w)?;
    let mut prefix = GroupElement::identity(sys);
    let mut out = Vec::with_capacity(w.len());
    for &s in w.letters() {
        let inv = prefix.inverse();
        prefix.mul_gen_right(sys, s);
        out.push(prefix.mul(&inv));
    }
    Ok(out)
}

/// Reducedness through distinctness of the reflections `h_j`.
pub fn is_reduced_phi(sys: &CoxeterSystem, w: &Word) -> Result<bool> {
    let phi = phi_multiset(sys, w)?;
    let mut seen = HashSet::with_capacity(phi.len());
    Ok(phi.into_iter().all(|h| seen.insert(h)))
}

/// All words obtained from the reduced word `w` by swapping adjacent
/// commuting letters, in ShortLex order.
pub fn commutation_class(sys: &CoxeterSystem, w: &Word) -> Result<Vec<Word>> {
    commutation_class_with(sys, w, Budget::default())
}

/// [`commutation_class`] with an explicit ceiling.
pub fn commutation_class_with(sys: &CoxeterSystem, w: &Word, budget: Budget) -> Result<Vec<Word>> {
    if !is_reduced(sys, w)? {
        return Err(Error::NotReduced);
    }
    let mut seen: BTreeSet<Word> = BTreeSet::new();
    let mut queue = VecDeque::new();
    seen.insert(w.clone());
    queue.push_back(w.clone());
    while let Some(u) = queue.pop_front() {
        let l = u.letters();
        for i in 0..l.len().saturating_sub(1) {
            if l[i] != l[i + 1] && sys.commute(l[i], l[i + 1]) {
                let mut v = l.to_vec();
                v.swap(i, i + 1);
                let v = Word(v);
                if !seen.contains(&v) {
                    seen.insert(v.clone());
                    budget.check(seen.len())?;
                    queue.push_back(v);
                }
            }
        }
    }
    Ok(seen.into_iter().collect())
}

/// True when `w` contains a contiguous alternating factor `sts...` of length
/// `m(s,t) >= 3`.
pub fn has_braid_factor(sys: &CoxeterSystem, w: &Word) -> bool {
    let l = w.letters();
    for i in 0..l.len() {
        let mut j = i + 1;
        if j >= l.len() || l[j] == l[i] {
            continue;
        }
        let (s, t) = (l[i], l[j]);
        let m = sys.order(s, t) as usize;
        if m < 3 {
            continue;
        }
        while j + 1 < l.len() && j + 1 - i < m && l[j + 1] == if (j + 1 - i) % 2 == 0 { s } else { t } {
            j += 1;
        }
        if j + 1 - i >= m {
            return true;
        }
    }
    false
}

/// Full commutativity of a reduced word, by scanning its commutation class.
pub fn is_fc_word(sys: &CoxeterSystem, w: &Word) -> Result<bool> {
    let class = commutation_class(sys, w)?;
    Ok(!class.iter().any(|u| has_braid_factor(sys, u)))
}

/// Full commutativity of an element.
pub fn is_fully_commutative(sys: &CoxeterSystem, x: &GroupElement) -> bool {
    let w = x.canonical_word(sys);
    if w.len() > super::heap::MAX_HEAP {
        return is_fc_word(sys, &w).unwrap_or(false);
    }
    super::heap::Heap::new(sys, &w).is_fc()
}

/// Every reduced word of `x`, found by depth-first search over left
/// descents.
pub fn all_reduced_words(sys: &CoxeterSystem, x: &GroupElement, budget: Budget) -> Result<Vec<Word>> {
    fn rec(
        sys: &CoxeterSystem,
        x: &GroupElement,
        prefix: &mut Vec<Letter>,
        out: &mut Vec<Word>,
        budget: Budget,
    ) -> Result<()> {
        let desc = x.descents(super::element::Side::Left);
        if desc.is_empty() {
            out.push(Word(prefix.clone()));
            return budget.check(out.len());
        }
        for s in desc {
            prefix.push(s);
            rec(sys, &x.gen_times(sys, s), prefix, out, budget)?;
            prefix.pop();
        }
        Ok(())
    }
    let mut out = Vec::new();
    rec(sys, x, &mut Vec::new(), &mut out, budget)?;
    out.sort();
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coxeter::system::Family;
    use proptest::prelude::*;

    fn w(sys: &CoxeterSystem, s: &str) -> Word {
        sys.parse_word(s).unwrap()
    }

    #[test]
    fn reduced_examples() {
        let d4 = CoxeterSystem::new(Family::D, 4).unwrap();
        assert!(!is_reduced(&d4, &w(&d4, "s1 s1")).unwrap());
        assert!(!is_reduced_phi(&d4, &w(&d4, "s1 s1")).unwrap());
        assert!(is_reduced(&d4, &w(&d4, "s1 s2 s1")).unwrap());
        assert!(is_reduced_phi(&d4, &w(&d4, "s1 s2")).unwrap());
        let b = CoxeterSystem::new(Family::Btilde, 5).unwrap();
        assert!(is_reduced(&b, &w(&b, "s3 s2 s1 sb1 s2 s3")).unwrap());
        assert_eq!(phi_multiset(&d4, &w(&d4, "s1 s1")).unwrap().len(), 2);
    }

    #[test]
    fn classes() {
        let d4 = CoxeterSystem::new(Family::D, 4).unwrap();
        let show = |s: &str| -> Vec<String> {
            commutation_class(&d4, &w(&d4, s))
                .unwrap()
                .iter()
                .map(|u| d4.format(u))
                .collect()
        };
        assert_eq!(show("s1 sb1 s2"), vec!["sb1 s1 s2", "s1 sb1 s2"]);
        assert_eq!(show("s1 s2 s1"), vec!["s1 s2 s1"]);
        assert_eq!(show("s1 s3"), vec!["s1 s3", "s3 s1"]);
        assert_eq!(
            commutation_class(&d4, &w(&d4, "s1 s1")),
            Err(Error::NotReduced)
        );
    }

    #[test]
    fn braid_factors() {
        let b = CoxeterSystem::new(Family::Btilde, 5).unwrap();
        assert!(has_braid_factor(&b, &w(&b, "s1 s2 s1")));
        assert!(!has_braid_factor(&b, &w(&b, "s3 t s3")));
        assert!(has_braid_factor(&b, &w(&b, "s1 s3 t s3 t")));
        assert!(!has_braid_factor(&b, &w(&b, "s1 s3 s1")));
    }

    #[test]
    fn fc_examples() {
        let d4 = CoxeterSystem::new(Family::D, 4).unwrap();
        let g = GroupElement::from_word(&d4, &w(&d4, "s1 s2 s1")).unwrap();
        assert!(!is_fully_commutative(&d4, &g));
        assert!(is_fc_word(&d4, &w(&d4, "s2 s1 s3 s2")).unwrap());
        let b = CoxeterSystem::new(Family::Btilde, 5).unwrap();
        let core = w(&b, "s3 s2 s1 sb1 s2 s3");
        assert!(is_fc_word(&b, &core).unwrap());
        let g = GroupElement::from_word(&b, &core).unwrap();
        assert!(is_fully_commutative(&b, &g));
    }

    fn random_word(rank: usize, len: usize) -> impl Strategy<Value = Vec<u8>> {
        proptest::collection::vec(0..rank as u8, 0..=len)
    }

    proptest! {
        #[test]
        fn reduced_oracles_agree(letters in random_word(5, 14)) {
            let b = CoxeterSystem::new(Family::Btilde, 5).unwrap();
            let word = Word(letters);
            prop_assert_eq!(is_reduced(&b, &word).unwrap(), is_reduced_phi(&b, &word).unwrap());
        }

        #[test]
        fn reduced_matches_length(letters in random_word(5, 12)) {
            let d = CoxeterSystem::new(Family::Dtilde, 5).unwrap();
            let word = Word(letters);
            let g = GroupElement::from_word(&d, &word).unwrap();
            prop_assert_eq!(is_reduced(&d, &word).unwrap(), g.length(&d) == word.len());
        }

        #[test]
        fn class_members_represent_same_element(letters in random_word(5, 10)) {
            let b = CoxeterSystem::new(Family::Btilde, 5).unwrap();
            let g = GroupElement::from_word(&b, &Word(letters)).unwrap();
            let word = g.canonical_word(&b);
            for u in commutation_class(&b, &word).unwrap() {
                prop_assert!(is_reduced(&b, &u).unwrap());
                prop_assert_eq!(GroupElement::from_word(&b, &u).unwrap(), g.clone());
            }
        }

        #[test]
        fn fc_paths_agree(letters in random_word(5, 12)) {
            let b = CoxeterSystem::new(Family::Btilde, 5).unwrap();
            let g = GroupElement::from_word(&b, &Word(letters)).unwrap();
            let word = g.canonical_word(&b);
            let by_class = is_fc_word(&b, &word).unwrap();
            prop_assert_eq!(by_class, is_fully_commutative(&b, &g));
            let words = all_reduced_words(&b, &g, Budget::new(1_000_000)).unwrap();
            let class = commutation_class(&b, &word).unwrap();
            prop_assert_eq!(by_class, words.len() == class.len());
        }
    }
}
