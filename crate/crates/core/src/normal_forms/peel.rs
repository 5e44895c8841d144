//! Splitting a fully commutative element at its affine letters.

use crate::coxeter::{CoxeterSystem, GroupElement, Heap, Letter, Word};
use crate::error::{Error, Result};

/// `w = b_1 a b_2 a ... b_m a tail` where `a` is the affine letter, `b_j`
/// is the part of the heap below the `j`-th `a` and above the previous one,
/// and `tail` is the part not below the last `a`.
#[derive(Debug, Clone)]
pub struct Peeled {
    /// Words of the blocks `b_1, ..., b_m`.
    pub blocks: Vec<Word>,
    /// Word of the tail.
    pub tail: Word,
}

/// Peels the canonical word of the fully commutative element `x`.
pub fn peel(sys: &CoxeterSystem, x: &GroupElement, affine: Letter) -> Result<Peeled> {
    let w = x.canonical_word(sys);
    let heap = Heap::new(sys, &w);
    if !heap.is_fc() {
        return Err(Error::NotFc);
    }
    let positions: Vec<usize> = (0..w.len()).filter(|&i| w.letters()[i] == affine).collect();
    let mut blocks = Vec::with_capacity(positions.len());
    let mut taken: u128 = 0;
    for &a in &positions {
        let mask = heap.down_set(a) & !taken & !(1u128 << a);
        blocks.push(Word(
            (0..w.len())
                .filter(|&i| mask & (1u128 << i) != 0)
                .map(|i| w.letters()[i])
                .collect(),
        ));
        taken |= heap.down_set(a);
    }
    let tail = Word(
        (0..w.len())
            .filter(|&i| taken & (1u128 << i) == 0)
            .map(|i| w.letters()[i])
            .collect(),
    );
    Ok(Peeled { blocks, tail })
}
