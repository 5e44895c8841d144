//! Exact rank of matrices over `Z[q, q^{-1}]`.
//!
//! Two independent algorithms: a sparse echelon reduction that exploits unit
//! pivots, and dense fraction-free (Bareiss) elimination over `Z[q]`. A rank
//! over a prime field after specializing `q` gives a lower bound, used to
//! certify independence quickly.

use std::collections::{BTreeMap, HashMap};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::poly::LaurentPoly;

/// A dense rectangular matrix of Laurent polynomials.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PolyMatrix {
    rows: Vec<Vec<LaurentPoly>>,
    cols: usize,
}

impl PolyMatrix {
    /// Builds a matrix; panics when the rows have different lengths.
    pub fn new(rows: Vec<Vec<LaurentPoly>>) -> Self {
        let cols = rows.first().map_or(0, |r| r.len());
        assert!(rows.iter().all(|r| r.len() == cols), "matrix is not rectangular");
        PolyMatrix { rows, cols }
    }

    /// The `n x n` identity.
    pub fn identity(n: usize) -> Self {
        PolyMatrix::new(
            (0..n)
                .map(|i| {
                    (0..n)
                        .map(|j| if i == j { LaurentPoly::one() } else { LaurentPoly::zero() })
                        .collect()
                })
                .collect(),
        )
    }

    /// Number of rows.
    pub fn nrows(&self) -> usize {
        self.rows.len()
    }

    /// Number of columns.
    pub fn ncols(&self) -> usize {
        self.cols
    }

    /// The rows.
    pub fn rows(&self) -> &[Vec<LaurentPoly>] {
        &self.rows
    }

    /// Sparse rows `(column, entry)` without zero entries.
    pub fn sparse_rows(&self) -> Vec<Vec<(usize, LaurentPoly)>> {
        self.rows
            .iter()
            .map(|r| {
                r.iter()
                    .enumerate()
                    .filter(|(_, x)| !x.is_zero())
                    .map(|(j, x)| (j, x.clone()))
                    .collect()
            })
            .collect()
    }
}

/// Rank over the fraction field, by sparse echelon reduction.
pub fn rank(m: &PolyMatrix) -> usize {
    rank_sparse(&m.sparse_rows())
}

type Row = BTreeMap<usize, LaurentPoly>;

fn unit_inverse(u: &LaurentPoly) -> Option<LaurentPoly> {
    let (e, c) = u.as_monomial()?;
    if c.abs().is_one() {
        Some(LaurentPoly::monomial(c.clone(), -e))
    } else {
        None
    }
}

fn axpy(row: &mut Row, a: &LaurentPoly, other: &Row, b: &LaurentPoly) {
    // row <- a * row + b * other
    if !a.is_one() {
        for v in row.values_mut() {
            *v = &*v * a;
        }
    }
    for (&j, x) in other {
        let add = x * b;
        let e = row.entry(j).or_default();
        *e += &add;
        if e.is_zero() {
            row.remove(&j);
        }
    }
}

fn remove_content(row: &mut Row) {
    let mut g = BigInt::zero();
    for v in row.values() {
        for (_, c) in v.terms() {
            g = g.gcd(c);
            if g.is_one() {
                return;
            }
        }
    }
    if g.is_zero() || g.is_one() {
        return;
    }
    let d = LaurentPoly::constant(g);
    for v in row.values_mut() {
        *v = v.div_exact(&d).expect("content divides every entry");
    }
}

/// Rank of sparse rows, reducing each row against pivots keyed by leading
/// column (the smallest column index with a nonzero entry).
pub fn rank_sparse(rows: &[Vec<(usize, LaurentPoly)>]) -> usize {
    let mut basis: HashMap<usize, Row> = HashMap::new();
    for r in rows {
        let mut row: Row = r
            .iter()
            .filter(|(_, x)| !x.is_zero())
            .map(|(j, x)| (*j, x.clone()))
            .collect();
        loop {
            let Some((&c, v)) = row.iter().next() else {
                break;
            };
            let v = v.clone();
            match basis.get(&c) {
                None => {
                    basis.insert(c, row);
                    break;
                }
                Some(b) => {
                    let pivot = &b[&c];
                    match unit_inverse(pivot) {
                        Some(inv) => {
                            let factor = -(&v * &inv);
                            axpy(&mut row, &LaurentPoly::one(), b, &factor);
                        }
                        None => {
                            let pivot = pivot.clone();
                            axpy(&mut row, &pivot, b, &(-&v));
                            remove_content(&mut row);
                        }
                    }
                }
            }
        }
    }
    basis.len()
}

/// Specializations `(p, q0)` tried before exact elimination.
const SPECIALIZATIONS: [(u64, u64); 2] = [(2_147_483_647, 3), (2_147_483_629, 5)];

fn pow_mod(mut b: u64, mut e: u64, p: u64) -> u64 {
    let mut r = 1;
    b %= p;
    while e > 0 {
        if e & 1 == 1 {
            r = r * b % p;
        }
        b = b * b % p;
        e >>= 1;
    }
    r
}

/// Value of `f(q0)` modulo the prime `p`, for `0 < q0 < p < 2^32`.
pub fn eval_mod(f: &LaurentPoly, p: u64, q0: u64) -> u64 {
    let inv = pow_mod(q0, p - 2, p);
    let modulus = BigInt::from(p);
    f.terms().fold(0, |acc, (e, c)| {
        let base = if e >= 0 { pow_mod(q0, e as u64, p) } else { pow_mod(inv, e.unsigned_abs() as u64, p) };
        let c = c.mod_floor(&modulus).to_u64_digits().1.first().copied().unwrap_or(0);
        (acc + c * base) % p
    })
}

/// Rank over `F_p` of the rows with `q = q0`, for a prime `p < 2^32`.
/// Never exceeds the rank over `Z[q, q^{-1}]`.
pub fn rank_mod_p(rows: &[Vec<(usize, LaurentPoly)>], p: u64, q0: u64) -> usize {
    let mut basis: HashMap<usize, BTreeMap<usize, u64>> = HashMap::new();
    for r in rows {
        let mut row: BTreeMap<usize, u64> = r
            .iter()
            .map(|(j, x)| (*j, eval_mod(x, p, q0)))
            .filter(|(_, v)| *v != 0)
            .collect();
        while let Some((&c, &v)) = row.iter().next() {
            let Some(b) = basis.get(&c) else {
                let inv = pow_mod(v, p - 2, p);
                for x in row.values_mut() {
                    *x = *x * inv % p;
                }
                basis.insert(c, row);
                break;
            };
            for (&j, &x) in b {
                let e = row.entry(j).or_insert(0);
                *e = (*e + p - v * x % p) % p;
                if *e == 0 {
                    row.remove(&j);
                }
            }
        }
    }
    basis.len()
}

/// True when the rows are linearly independent over `Z[q, q^{-1}]`. A
/// full-rank specialization is a certificate: a maximal minor that is
/// nonzero at `q0` modulo `p` is a nonzero Laurent polynomial. Otherwise the
/// exact rank decides.
pub fn rows_independent(rows: &[Vec<(usize, LaurentPoly)>]) -> bool {
    SPECIALIZATIONS.iter().any(|&(p, q0)| rank_mod_p(rows, p, q0) == rows.len()) || rank_sparse(rows) == rows.len()
}

/// Rank by dense fraction-free elimination over `Z[q]`, after multiplying
/// each row by a power of `q` that clears negative exponents.
pub fn rank_bareiss(m: &PolyMatrix) -> usize {
    let mut a: Vec<Vec<LaurentPoly>> = m
        .rows
        .iter()
        .map(|r| {
            let low = r.iter().filter_map(|x| x.min_exp()).min().unwrap_or(0);
            r.iter().map(|x| x.shift(-low)).collect()
        })
        .collect();
    let nr = a.len();
    let nc = m.cols;
    let mut prev = LaurentPoly::one();
    let mut k = 0;
    for col in 0..nc {
        if k == nr {
            break;
        }
        let Some(p) = (k..nr).find(|&i| !a[i][col].is_zero()) else {
            continue;
        };
        a.swap(k, p);
        for i in k + 1..nr {
            for j in col + 1..nc {
                let num = &(&a[k][col] * &a[i][j]) - &(&a[i][col] * &a[k][j]);
                a[i][j] = num
                    .div_exact(&prev)
                    .expect("fraction-free elimination divides exactly");
            }
            a[i][col] = LaurentPoly::zero();
        }
        prev = a[k][col].clone();
        k += 1;
    }
    k
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn lp(terms: &[(i32, i64)]) -> LaurentPoly {
        LaurentPoly::from_terms(terms.iter().copied())
    }

    #[test]
    fn examples() {
        let id = PolyMatrix::identity(3);
        assert_eq!(rank(&id), 3);
        assert_eq!(rank_bareiss(&id), 3);
        let m = PolyMatrix::new(vec![
            vec![lp(&[(1, 1)]), lp(&[(0, 1)])],
            vec![lp(&[(2, 1)]), lp(&[(1, 1)])],
        ]);
        assert_eq!(rank(&m), 1);
        assert_eq!(rank_bareiss(&m), 1);
        let n = PolyMatrix::new(vec![
            vec![lp(&[(1, 1), (0, -1)]), lp(&[(0, 2)])],
            vec![lp(&[(0, 2)]), lp(&[(1, 1), (0, 1)])],
        ]);
        // det = q^2 - 1 - 4 != 0
        assert_eq!(rank(&n), 2);
        assert_eq!(rank_bareiss(&n), 2);
        // q - 3 vanishes at the first specialization only.
        let rows = vec![vec![(0, lp(&[(1, 1), (0, -3)]))]];
        assert_eq!(rank_mod_p(&rows, 2_147_483_647, 3), 0);
        assert!(rows_independent(&rows));
        assert_eq!(eval_mod(&lp(&[(-1, 1)]), 7, 3), 5);
    }

    fn arb_entry() -> impl Strategy<Value = LaurentPoly> {
        prop_oneof![
            3 => Just(LaurentPoly::zero()),
            2 => (-2i32..3, proptest::collection::vec(-2i64..3, 1..3)).prop_map(|(low, cs)| {
                LaurentPoly::from_dense(low, cs.into_iter().map(BigInt::from).collect())
            }),
        ]
    }

    fn arb_matrix() -> impl Strategy<Value = PolyMatrix> {
        (1usize..5, 1usize..5).prop_flat_map(|(r, c)| {
            proptest::collection::vec(proptest::collection::vec(arb_entry(), c), r)
                .prop_map(PolyMatrix::new)
        })
    }

    proptest! {
        #[test]
        fn algorithms_agree(m in arb_matrix()) {
            prop_assert_eq!(rank(&m), rank_bareiss(&m));
        }

        #[test]
        fn dependent_row_does_not_raise_rank(m in arb_matrix(), a in arb_entry(), b in arb_entry()) {
            let mut rows = m.rows().to_vec();
            let extra: Vec<LaurentPoly> = (0..m.ncols())
                .map(|j| &(&a * &rows[0][j]) + &(&b * &rows[rows.len() - 1][j]))
                .collect();
            rows.push(extra);
            let bigger = PolyMatrix::new(rows);
            prop_assert_eq!(rank(&bigger), rank(&m));
        }

        #[test]
        fn specialization_is_a_lower_bound(m in arb_matrix()) {
            let rows = m.sparse_rows();
            let exact = rank_sparse(&rows);
            for (p, q0) in SPECIALIZATIONS {
                prop_assert!(rank_mod_p(&rows, p, q0) <= exact);
            }
            prop_assert_eq!(rows_independent(&rows), exact == rows.len());
        }

        #[test]
        fn invariant_under_scaling_and_permutation(m in arb_matrix(), k in -3i32..3) {
            let mut rows: Vec<Vec<LaurentPoly>> = m.rows().to_vec();
            rows.reverse();
            for x in rows[0].iter_mut() {
                *x = x.shift(k);
            }
            prop_assert_eq!(rank(&PolyMatrix::new(rows)), rank(&m));
        }
    }
}
