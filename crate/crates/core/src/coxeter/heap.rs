//! Heaps of words: the poset on letter positions generated by
//! non-commuting pairs.
//!
//! A word is reduced and fully commutative exactly when its heap has no
//! convex chain labelled `s s` or alternating `s t s ...` of length
//! `m(s, t)`.

use super::system::{CoxeterSystem, Letter, Word};

/// Longest word a heap can hold.
pub const MAX_HEAP: usize = 128;

/// The heap of a word, as down-sets and up-sets of each position.
#[derive(Debug, Clone)]
pub struct Heap {
    letters: Vec<Letter>,
    down: Vec<u128>,
    up: Vec<u128>,
    orders: Vec<Vec<u8>>,
}

/// A convex chain of positions, listed bottom to top.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Chain {
    /// Positions in the word.
    pub positions: Vec<usize>,
}

fn bit(i: usize) -> u128 {
    1u128 << i
}

impl Heap {
    /// Builds the heap of `w`. Panics when `w` is longer than [`MAX_HEAP`].
    pub fn new(sys: &CoxeterSystem, w: &Word) -> Self {
        let letters = w.letters().to_vec();
        let n = letters.len();
        assert!(n <= MAX_HEAP, "heap of a word longer than {MAX_HEAP}");
        let r = sys.rank();
        let orders: Vec<Vec<u8>> = (0..r as Letter)
            .map(|a| (0..r as Letter).map(|b| sys.order(a, b)).collect())
            .collect();
        let linked = |a: Letter, b: Letter| orders[a as usize][b as usize] != 2;
        let mut down = vec![0u128; n];
        for i in 0..n {
            let mut d = bit(i);
            for j in 0..i {
                if d & bit(j) == 0 && linked(letters[i], letters[j]) {
                    d |= down[j];
                }
            }
            down[i] = d;
        }
        let mut up = vec![0u128; n];
        for i in (0..n).rev() {
            let mut u = bit(i);
            for j in i + 1..n {
                if u & bit(j) == 0 && linked(letters[i], letters[j]) {
                    u |= up[j];
                }
            }
            up[i] = u;
        }
        Heap {
            letters,
            down,
            up,
            orders,
        }
    }

    /// Number of elements.
    pub fn len(&self) -> usize {
        self.letters.len()
    }

    /// True for the empty heap.
    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    /// Letter at a position.
    pub fn letter(&self, i: usize) -> Letter {
        self.letters[i]
    }

    /// Positions below or equal to `i`, as a bit mask.
    pub fn down_set(&self, i: usize) -> u128 {
        self.down[i]
    }

    /// Positions above or equal to `i`, as a bit mask.
    pub fn up_set(&self, i: usize) -> u128 {
        self.up[i]
    }

    /// True when position `i` is a maximal element.
    pub fn is_maximal(&self, i: usize) -> bool {
        self.up[i] == bit(i)
    }

    /// True when position `i` is a minimal element.
    pub fn is_minimal(&self, i: usize) -> bool {
        self.down[i] == bit(i)
    }

    /// True when the last occurrence of `s` is maximal. For a reduced fully
    /// commutative word this is the right descent test.
    pub fn has_right_descent(&self, s: Letter) -> bool {
        match self.letters.iter().rposition(|&l| l == s) {
            Some(i) => self.is_maximal(i),
            None => false,
        }
    }

    /// True when the first occurrence of `s` is minimal.
    pub fn has_left_descent(&self, s: Letter) -> bool {
        match self.letters.iter().position(|&l| l == s) {
            Some(i) => self.is_minimal(i),
            None => false,
        }
    }

    fn interval(&self, lo: usize, hi: usize) -> u128 {
        self.down[hi] & self.up[lo]
    }

    /// Finds a convex chain witnessing that the word is not both reduced
    /// and fully commutative. Chains `s s` are reported first.
    pub fn find_convex_chain(&self) -> Option<Chain> {
        let n = self.len();
        // s s chains.
        for i in 0..n {
            if let Some(j) = (i + 1..n).find(|&j| self.letters[j] == self.letters[i]) {
                if self.interval(i, j) == bit(i) | bit(j) {
                    return Some(Chain {
                        positions: vec![i, j],
                    });
                }
            }
        }
        let r = self.orders.len();
        for a in 0..r {
            for b in a + 1..r {
                let m = self.orders[a][b] as usize;
                if m < 3 {
                    continue;
                }
                let sub: Vec<usize> = (0..n)
                    .filter(|&i| self.letters[i] as usize == a || self.letters[i] as usize == b)
                    .collect();
                if sub.len() < m {
                    continue;
                }
                for start in 0..=sub.len() - m {
                    let window = &sub[start..start + m];
                    let alternating = window
                        .windows(2)
                        .all(|p| self.letters[p[0]] != self.letters[p[1]]);
                    if !alternating {
                        continue;
                    }
                    let mask = window.iter().fold(0u128, |acc, &i| acc | bit(i));
                    if self.interval(window[0], window[m - 1]) == mask {
                        return Some(Chain {
                            positions: window.to_vec(),
                        });
                    }
                }
            }
        }
        None
    }

    /// True when the word is reduced and fully commutative.
    pub fn is_fc(&self) -> bool {
        self.find_convex_chain().is_none()
    }

    /// The lexicographically least linear extension: repeatedly take the
    /// smallest letter among the minimal remaining elements.
    pub fn lex_min_word(&self) -> Word {
        let n = self.len();
        let mut remaining: u128 = if n == 128 { u128::MAX } else { bit(n) - 1 };
        let mut out = Vec::with_capacity(n);
        while remaining != 0 {
            let mut best: Option<usize> = None;
            for i in 0..n {
                if remaining & bit(i) != 0 && self.down[i] & remaining == bit(i) {
                    match best {
                        Some(b) if self.letters[b] <= self.letters[i] => {}
                        _ => best = Some(i),
                    }
                }
            }
            let i = best.expect("a finite poset has a minimal element");
            out.push(self.letters[i]);
            remaining &= !bit(i);
        }
        Word(out)
    }

    /// Splits the word around a convex chain `x_1 < ... < x_m` as
    /// `A . chain . U`, a linear extension where `A` holds the elements not
    /// above `x_1` and `U` the elements above `x_1` outside the chain.
    pub fn split_at_chain(&self, chain: &Chain) -> (Word, Word, Word) {
        let first = chain.positions[0];
        let above = self.up[first];
        let in_chain = chain.positions.iter().fold(0u128, |acc, &i| acc | bit(i));
        let mut a = Vec::new();
        let mut u = Vec::new();
        for i in 0..self.len() {
            if above & bit(i) == 0 {
                a.push(self.letters[i]);
            } else if in_chain & bit(i) == 0 {
                u.push(self.letters[i]);
            }
        }
        let c = chain.positions.iter().map(|&i| self.letters[i]).collect();
        (Word(a), Word(c), Word(u))
    }
}

/// True when `w` is reduced and fully commutative.
pub fn is_reduced_fc_word(sys: &CoxeterSystem, w: &Word) -> bool {
    Heap::new(sys, w).is_fc()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coxeter::element::GroupElement;
    use crate::coxeter::reduced::{is_fc_word, is_reduced};
    use crate::coxeter::system::Family;
    use proptest::prelude::*;

    #[test]
    fn chains_found() {
        let sys = CoxeterSystem::new(Family::D, 4).unwrap();
        let w = sys.parse_word("s1 s3 s2 s1").unwrap();
        assert!(!Heap::new(&sys, &w).is_fc());
        let w = sys.parse_word("s2 s1 s3 s2").unwrap();
        assert!(Heap::new(&sys, &w).is_fc());
        let w = sys.parse_word("s2 s1 s3 s2 s1").unwrap();
        let h = Heap::new(&sys, &w);
        assert!(!h.is_fc());
        let w = sys.parse_word("s1 s3 s1").unwrap();
        assert_eq!(Heap::new(&sys, &w).find_convex_chain().unwrap().positions, vec![0, 2]);
    }

    #[test]
    fn split_puts_chain_contiguous() {
        let sys = CoxeterSystem::new(Family::D, 4).unwrap();
        let w = sys.parse_word("s3 s1 s2").unwrap();
        let mut full = w.letters().to_vec();
        full.push(sys.sigma(1));
        let h = Heap::new(&sys, &Word(full.clone()));
        let chain = h.find_convex_chain().unwrap();
        let (a, c, u) = h.split_at_chain(&chain);
        assert_eq!(c.len(), 3);
        let joined = a.concat(&c).concat(&u);
        assert_eq!(
            GroupElement::from_word(&sys, &joined).unwrap(),
            GroupElement::from_word(&sys, &Word(full)).unwrap()
        );
    }

    proptest! {
        #[test]
        fn heap_fc_matches_class_scan(letters in proptest::collection::vec(0u8..5, 0..12)) {
            let sys = CoxeterSystem::new(Family::Btilde, 5).unwrap();
            let w = Word(letters);
            let expected = is_reduced(&sys, &w).unwrap() && is_fc_word(&sys, &w).unwrap();
            prop_assert_eq!(Heap::new(&sys, &w).is_fc(), expected);
        }

        #[test]
        fn lex_min_is_canonical_for_fc(letters in proptest::collection::vec(0u8..5, 0..12)) {
            let sys = CoxeterSystem::new(Family::Dtilde, 5).unwrap();
            let w = Word(letters);
            let h = Heap::new(&sys, &w);
            if h.is_fc() {
                let g = GroupElement::from_word(&sys, &w).unwrap();
                prop_assert_eq!(h.lex_min_word(), g.canonical_word(&sys));
                for s in 0..5u8 {
                    prop_assert_eq!(h.has_right_descent(s), g.has_right_descent(s));
                    prop_assert_eq!(h.has_left_descent(s), g.has_left_descent(s));
                }
            }
        }

        #[test]
        fn chain_split_preserves_element(letters in proptest::collection::vec(0u8..5, 0..12)) {
            let sys = CoxeterSystem::new(Family::Btilde, 5).unwrap();
            let w = Word(letters);
            let h = Heap::new(&sys, &w);
            if let Some(chain) = h.find_convex_chain() {
                let (a, c, u) = h.split_at_chain(&chain);
                let joined = a.concat(&c).concat(&u);
                prop_assert_eq!(
                    GroupElement::from_word(&sys, &joined).unwrap(),
                    GroupElement::from_word(&sys, &w).unwrap()
                );
                let cl = c.letters();
                for p in cl.windows(2) {
                    prop_assert!(p[0] == p[1] || !sys.commute(p[0], p[1]));
                }
            }
        }
    }
}
