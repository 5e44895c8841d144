//! Breadth-first enumeration of the elements of bounded length.

use std::collections::HashSet;

use super::budget::Budget;
use super::element::GroupElement;
use super::system::{CoxeterSystem, Word};
use crate::error::Result;

/// One element of a ball together with its canonical word.
#[derive(Debug, Clone)]
pub struct BallEntry {
    /// The element.
    pub element: GroupElement,
    /// Its ShortLex minimal reduced word.
    pub word: Word,
}

/// Every element of length at most `max_len`, ordered by length then
/// ShortLex, each exactly once.
pub fn enumerate_ball(sys: &CoxeterSystem, max_len: usize, budget: Budget) -> Result<Vec<BallEntry>> {
    let mut out = vec![BallEntry {
        element: GroupElement::identity(sys),
        word: Word::empty(),
    }];
    let mut layer = vec![GroupElement::identity(sys)];
    for _ in 0..max_len {
        let mut seen: HashSet<GroupElement> = HashSet::new();
        let mut next = Vec::new();
        for x in &layer {
            for s in 0..sys.rank() as u8 {
                if !x.has_right_descent(s) {
                    let y = x.times_gen(sys, s);
                    if !seen.contains(&y) {
                        seen.insert(y.clone());
                        next.push(y);
                        budget.check(out.len() + next.len())?;
                    }
                }
            }
        }
        if next.is_empty() {
            break;
        }
        let mut entries: Vec<BallEntry> = next
            .iter()
            .map(|e| BallEntry {
                word: e.canonical_word(sys),
                element: e.clone(),
            })
            .collect();
        entries.sort_by(|a, b| a.word.cmp(&b.word));
        out.extend(entries);
        layer = next;
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coxeter::system::Family;

    #[test]
    fn d4_ball_sizes() {
        let sys = CoxeterSystem::new(Family::D, 4).unwrap();
        assert_eq!(enumerate_ball(&sys, 0, Budget::new(10)).unwrap().len(), 1);
        assert_eq!(enumerate_ball(&sys, 1, Budget::new(10)).unwrap().len(), 5);
        let all = enumerate_ball(&sys, 20, Budget::new(1000)).unwrap();
        assert_eq!(all.len(), 192);
        let longest = all.last().unwrap();
        assert_eq!(longest.element.length(&sys), 12);
        for e in &all {
            assert_eq!(GroupElement::from_word(&sys, &e.word).unwrap(), e.element);
            assert_eq!(e.word.len(), e.element.length(&sys));
        }
        for w in all.windows(2) {
            assert!(w[0].word < w[1].word);
        }
    }

    #[test]
    fn budget_is_enforced() {
        let sys = CoxeterSystem::new(Family::Btilde, 5).unwrap();
        assert!(matches!(
            enumerate_ball(&sys, 10, Budget::new(100)),
            Err(crate::error::Error::Budget { limit: 100 })
        ));
    }
}
