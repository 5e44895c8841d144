//! Normal forms of fully commutative elements of type D~.
//!
//! With `N` the largest sigma index and `a = sbN` the affine generator:
//!
//! * finite: an element of the parabolic subgroup of type `D_{N+1}`;
//! * affine length one: `<i,N] <j,N-1] a v`;
//! * first type: `a^e s_N^h <i,N-1] a (s_N <-(N-1),N-1] a)^k <f,N]^{-1}`;
//! * second type: `<i_1,N] <j_1,N-1] a ... <i_p,N] <j_p,N-1] a
//!   (<-1,N] <1,N-1] a)^k w_r`, or its image under the automorphism
//!   exchanging `sb1` and `s_1`.

use std::collections::HashMap;
use std::fmt;

use serde_json::json;

use super::bform::{dform_json, inverse_interval_params};
use super::dform::{enumerate_valid, inverse_interval_param, DForm};
use super::interval::{interval, interval_len};
use super::peel::peel;
use crate::coxeter::{CoxeterSystem, Family, GroupElement, Side, Word};
use crate::error::{Error, Result};

/// A normal form in type D~.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum DAffForm {
    /// Affine length zero.
    Finite(DForm),
    /// `<i,N] <j,N-1] a v`.
    AffineOne {
        /// Left endpoint of the `N` interval.
        i: i32,
        /// Left endpoint of the `N-1` interval.
        j: i32,
        /// The element after `a`.
        v: DForm,
    },
    /// `a^e s_N^h <i,N-1] a (s_N <-(N-1),N-1] a)^k <f,N]^{-1}`, affine
    /// length `k + 1 + e`.
    FirstType {
        /// Exponent `e` of the leading `a`.
        eps: u8,
        /// Exponent `h` of the leading `s_N`.
        eta: u8,
        /// Left endpoint of the leading interval.
        i: i32,
        /// Number of repeated factors.
        k: usize,
        /// Left endpoint of the trailing inverted interval.
        f: i32,
    },
    /// Second type, affine length `p + k`. The fields describe the form
    /// before the optional exchange of `sb1` and `s_1`.
    SecondType {
        /// The pairs `(i_t, j_t)`.
        pairs: Vec<(i32, i32)>,
        /// Number of `<-1,N] <1,N-1] a` factors.
        k: usize,
        /// The trailing element `w_r`.
        tail: DForm,
        /// Whether the exchange of `sb1` and `s_1` is applied.
        psi1: bool,
    },
}

fn check_system(sys: &CoxeterSystem) -> Result<()> {
    if sys.family() != Family::Dtilde {
        return Err(Error::Domain(format!("{} is not of type D~", sys.name())));
    }
    if sys.n() < 3 {
        return Err(Error::Domain(format!(
            "normal forms are not provided for {}",
            sys.name()
        )));
    }
    Ok(())
}

fn invalid(msg: impl Into<String>) -> Error {
    Error::InvalidForm(msg.into())
}

fn flip(x: i32) -> i32 {
    if x.abs() == 1 {
        -x
    } else {
        x
    }
}

/// True when `<i,N] <j,N-1]` is one of the blocks that can precede `a`:
/// `(N+1, N)` (empty), or `i <= N+1`, `|j| <= N-1` and `|j| < i` or
/// `j = -i = +-1`, excluding `(1, 0)` which contains `s_1 s_2 s_1`.
pub fn is_block(n: usize, i: i32, j: i32) -> bool {
    let nn = n as i32;
    if i == nn + 1 && j == nn {
        return true;
    }
    (-nn..=nn + 1).contains(&i)
        && j.abs() < nn
        && (j.abs() < i || (j == -i && j.abs() == 1))
        && (i, j) != (1, 0)
}

fn block_word(sys: &CoxeterSystem, i: i32, j: i32) -> Result<Vec<u8>> {
    let n = sys.n();
    let mut w = interval(sys, i, n)?.letters().to_vec();
    w.extend_from_slice(interval(sys, j, n - 1)?.letters());
    Ok(w)
}

fn block_len(n: usize, i: i32, j: i32) -> usize {
    interval_len(i, n) + interval_len(j, n - 1)
}

/// The automorphism exchanging `sb1` and `s_1`, letter by letter.
pub fn psi1_word(sys: &CoxeterSystem, w: &Word) -> Word {
    let (a, b) = (sys.sigma_bar1(), sys.sigma(1));
    Word(
        w.letters()
            .iter()
            .map(|&l| if l == a { b } else if l == b { a } else { l })
            .collect(),
    )
}

impl DAffForm {
    /// Class name used in JSON output.
    pub fn class_name(&self) -> &'static str {
        match self {
            DAffForm::Finite(_) => "finite",
            DAffForm::AffineOne { .. } => "affine1",
            DAffForm::FirstType { .. } => "first",
            DAffForm::SecondType { .. } => "second",
        }
    }

    /// Affine length given by the closed formula.
    pub fn affine_length(&self) -> usize {
        match self {
            DAffForm::Finite(_) => 0,
            DAffForm::AffineOne { .. } => 1,
            DAffForm::FirstType { eps, k, .. } => k + 1 + *eps as usize,
            DAffForm::SecondType { pairs, k, .. } => pairs.len() + k,
        }
    }

    /// Whether the exchange of `sb1` and `s_1` is applied.
    pub fn psi1_flag(&self) -> bool {
        matches!(self, DAffForm::SecondType { psi1: true, .. })
    }

    /// Length of the rendered word.
    pub fn length(&self, n: usize) -> usize {
        let nn = n as i32;
        match self {
            DAffForm::Finite(v) => v.len(),
            DAffForm::AffineOne { i, j, v } => block_len(n, *i, *j) + 1 + v.len(),
            DAffForm::FirstType { eps, eta, i, k, f } => {
                (*eps + *eta) as usize
                    + interval_len(*i, n - 1)
                    + 1
                    + k * (block_len(n, nn, -(nn - 1)) + 1)
                    + interval_len(*f, n)
            }
            DAffForm::SecondType { pairs, k, tail, .. } => {
                pairs.iter().map(|&(i, j)| block_len(n, i, j) + 1).sum::<usize>()
                    + k * (block_len(n, -1, 1) + 1)
                    + tail.len()
            }
        }
    }

    /// The rendered reduced word.
    pub fn word(&self, sys: &CoxeterSystem) -> Result<Word> {
        check_system(sys)?;
        let n = sys.n();
        let nn = n as i32;
        let a = sys.affine().expect("D~ has sbN");
        let mut out: Vec<u8> = Vec::new();
        match self {
            DAffForm::Finite(v) => out.extend_from_slice(v.word(sys)?.letters()),
            DAffForm::AffineOne { i, j, v } => {
                out.extend(block_word(sys, *i, *j)?);
                out.push(a);
                out.extend_from_slice(v.word(sys)?.letters());
            }
            DAffForm::FirstType { eps, eta, i, k, f } => {
                if *eps > 1 || *eta > 1 {
                    return Err(invalid("first type: exponents must be 0 or 1"));
                }
                if *eps == 1 {
                    out.push(a);
                }
                if *eta == 1 {
                    out.push(sys.sigma(n));
                }
                out.extend_from_slice(interval(sys, *i, n - 1)?.letters());
                out.push(a);
                for _ in 0..*k {
                    out.extend(block_word(sys, nn, -(nn - 1))?);
                    out.push(a);
                }
                out.extend_from_slice(interval(sys, *f, n)?.reversed().letters());
            }
            DAffForm::SecondType { pairs, k, tail, psi1 } => {
                for &(i, j) in pairs {
                    out.extend(block_word(sys, i, j)?);
                    out.push(a);
                }
                for _ in 0..*k {
                    out.extend(block_word(sys, -1, 1)?);
                    out.push(a);
                }
                out.extend_from_slice(tail.word(sys)?.letters());
                if *psi1 {
                    return Ok(psi1_word(sys, &Word(out)));
                }
            }
        }
        Ok(Word(out))
    }

    /// Checks the defining conditions of the form.
    pub fn validate(&self, sys: &CoxeterSystem) -> Result<()> {
        check_system(sys)?;
        let n = sys.n();
        let nn = n as i32;
        match self {
            DAffForm::Finite(v) => v.validate(n),
            DAffForm::AffineOne { i, j, v } => validate_affine_one(sys, *i, *j, v),
            DAffForm::FirstType { eps, eta, i, k, f } => {
                if *eps > 1 || *eta > 1 {
                    return Err(invalid("first type: exponents must be 0 or 1"));
                }
                if eps * eta != 0 {
                    return Err(invalid("first type: e and h cannot both be 1"));
                }
                if !(-(nn - 1)..=nn).contains(i) {
                    return Err(invalid(format!("first type: i = {i} outside [-{}, {n}]", n - 1)));
                }
                if eps + eta > 0 && *i != -(nn - 1) {
                    return Err(invalid(format!("first type: a leading a or s_N forces i = -{}", n - 1)));
                }
                if !(-nn..=nn + 1).contains(f) {
                    return Err(invalid(format!("first type: f = {f} outside [-{n}, {}]", n + 1)));
                }
                if k + 1 + (*eps as usize) < 2 {
                    return Err(invalid("first type: affine length must be at least 2"));
                }
                Ok(())
            }
            DAffForm::SecondType { pairs, k, tail, psi1 } => {
                validate_second_base(n, pairs, *k, tail)?;
                if *psi1 && *k == 0 {
                    let mirrored: Vec<(i32, i32)> = pairs.iter().map(|&(i, j)| (flip(i), flip(j))).collect();
                    if validate_second_base(n, &mirrored, *k, &tail.psi1()).is_ok() {
                        return Err(invalid(
                            "second type: the mirrored element already has an unmirrored form",
                        ));
                    }
                }
                Ok(())
            }
        }
    }

    /// The form of the image under the exchange of `sb1` and `s_1`.
    pub fn psi1(&self, sys: &CoxeterSystem) -> DAffForm {
        match self {
            DAffForm::Finite(v) => DAffForm::Finite(v.psi1()),
            DAffForm::AffineOne { i, j, v } => DAffForm::AffineOne {
                i: flip(*i),
                j: flip(*j),
                v: v.psi1(),
            },
            DAffForm::FirstType { eps, eta, i, k, f } => DAffForm::FirstType {
                eps: *eps,
                eta: *eta,
                i: flip(*i),
                k: *k,
                f: flip(*f),
            },
            DAffForm::SecondType { pairs, k, tail, psi1 } => {
                let toggled = DAffForm::SecondType {
                    pairs: pairs.clone(),
                    k: *k,
                    tail: tail.clone(),
                    psi1: !psi1,
                };
                if *psi1 || toggled.validate(sys).is_ok() {
                    toggled
                } else {
                    DAffForm::SecondType {
                        pairs: pairs.iter().map(|&(i, j)| (flip(i), flip(j))).collect(),
                        k: *k,
                        tail: tail.psi1(),
                        psi1: false,
                    }
                }
            }
        }
    }

    /// JSON parameters.
    pub fn params_json(&self) -> serde_json::Value {
        match self {
            DAffForm::Finite(v) => json!({ "v": dform_json(v) }),
            DAffForm::AffineOne { i, j, v } => json!({ "i": i, "j": j, "v": dform_json(v) }),
            DAffForm::FirstType { eps, eta, i, k, f } => {
                json!({ "epsilon": eps, "eta": eta, "i": i, "k": k, "f": f })
            }
            DAffForm::SecondType { pairs, k, tail, .. } => json!({
                "p": pairs.len(),
                "i": pairs.iter().map(|p| p.0).collect::<Vec<_>>(),
                "j": pairs.iter().map(|p| p.1).collect::<Vec<_>>(),
                "k": k,
                "w_r": dform_json(tail),
            }),
        }
    }
}

fn validate_second_base(n: usize, pairs: &[(i32, i32)], k: usize, tail: &DForm) -> Result<()> {
    let nn = n as i32;
    let p = pairs.len();
    if p + k < 2 {
        return Err(invalid("second type: affine length p + k must be at least 2"));
    }
    if 2 * p > n + 1 {
        return Err(invalid(format!("second type: p = {p} exceeds (N+1)/2")));
    }
    tail.validate(n)?;
    let mut chain: Vec<i32> = pairs.iter().flat_map(|&(i, j)| [i, j]).collect();
    if let Some(last) = chain.last_mut() {
        *last = last.abs();
    }
    if chain.first().is_some_and(|&i| i > nn + 1) {
        return Err(invalid(format!("second type: i_1 exceeds {}", n + 1)));
    }
    if chain.windows(2).any(|w| w[0] <= w[1]) || chain.last().is_some_and(|&x| x < 0) {
        return Err(invalid(format!(
            "second type: i_1 > j_1 > ... > i_p > |j_p| >= 0 fails for {pairs:?}"
        )));
    }
    let alternating_tail = |tail: &DForm| tail.is_alternating_from(-1);
    if let Some(&(ip, jp)) = pairs.last() {
        if ip <= 1 {
            return Err(invalid(format!("second type: i_p = {ip} must exceed 1")));
        }
        if jp == -1 {
            return Err(invalid("second type: j_p = -1 is excluded"));
        }
        if jp <= 0 {
            if k != 0 || !tail.is_identity() {
                return Err(invalid("second type: j_p <= 0 forces k = 0 and w_r = 1"));
            }
            if jp == -(nn - 1) {
                return Err(invalid(format!("second type: j_p = -{} is excluded", n - 1)));
            }
        }
        if k == 0 && jp > 1 && tail.first_m().is_some_and(|m| m.abs() >= jp) {
            return Err(invalid(format!("second type: w_r must have |m_1| < j_p = {jp}")));
        }
        if (k > 0 || jp == 1) && !alternating_tail(tail) {
            return Err(invalid("second type: w_r must be <-1,r_1] <1,r_2] ..."));
        }
    } else if !alternating_tail(tail) {
        return Err(invalid("second type: w_r must be <-1,r_1] <1,r_2] ..."));
    }
    Ok(())
}

/// Left descents of the element with D-form `v`.
fn left_descents(sys: &CoxeterSystem, v: &DForm) -> Result<Vec<u8>> {
    Ok(GroupElement::from_word(sys, &v.word(sys)?)?.descents(Side::Left))
}

/// Whether `<i,N] <j,N-1] a s ...` can be fully commutative.
fn affine_one_allows(sys: &CoxeterSystem, i: i32, j: i32, s: u8) -> bool {
    let n = sys.n();
    let nn = n as i32;
    let top = i == nn + 1;
    if top && j == nn {
        return true;
    }
    if s == sys.sigma(n) {
        return top || (i == nn && j == -(nn - 1));
    }
    match j {
        2.. => s == sys.sigma_bar1() || (1..j as usize).any(|q| sys.sigma(q) == s),
        1 => s == sys.sigma_bar1(),
        -1 => s == sys.sigma(1),
        _ => false,
    }
}

fn validate_affine_one(sys: &CoxeterSystem, i: i32, j: i32, v: &DForm) -> Result<()> {
    let n = sys.n();
    v.validate(n)?;
    if !is_block(n, i, j) || (i < 1 && i != -1) {
        return Err(invalid(format!(
            "affine length one: (i, j) = ({i}, {j}) is not an admissible leading block"
        )));
    }
    for s in left_descents(sys, v)? {
        if !affine_one_allows(sys, i, j, s) {
            return Err(invalid(format!(
                "affine length one: v has left descent {} not allowed after <{i},{n}] <{j},{}]",
                sys.token(s),
                n - 1
            )));
        }
    }
    Ok(())
}

/// The conditions on `v` phrased through its left endpoints: for
/// `|j| = 1`, left descents in `{s_-j}` (plus `s_N` when `i = N+1`); for
/// `j < -1` or `j = 0`, `v = 1` (or `<f,N]^{-1}` when `i = N+1`); for
/// `j > 1`, `|m_1| < j`, or when `i = N+1` a leading run
/// `m_s = n_s = N-s+1` followed by `|m| < j`. Sufficient, but it misses
/// some elements.
pub fn affine_one_endpoint_rule(sys: &CoxeterSystem, i: i32, j: i32, v: &DForm) -> bool {
    let n = sys.n();
    let nn = n as i32;
    let top = i == nn + 1;
    if top && j == nn {
        return true;
    }
    if j.abs() == 1 {
        let sm = if j == 1 { sys.sigma_bar1() } else { sys.sigma(1) };
        left_descents(sys, v)
            .is_ok_and(|l| l.into_iter().all(|s| s == sm || (top && s == sys.sigma(n))))
    } else if j < -1 || j == 0 {
        if top {
            inverse_interval_params(n).iter().any(|(_, f)| f == v)
        } else {
            v.is_identity()
        }
    } else {
        let run = if top {
            v.terms
                .iter()
                .enumerate()
                .take_while(|&(s, &(m, k))| m == nn - s as i32 && k == n - s)
                .count()
        } else {
            0
        };
        v.terms.get(run).is_none_or(|&(m, _)| m.abs() < j)
    }
}

/// Lookup from block elements to their `(i, j)` parameters.
struct BlockTable(HashMap<GroupElement, (i32, i32)>);

impl BlockTable {
    fn new(sys: &CoxeterSystem) -> Result<Self> {
        let n = sys.n();
        let nn = n as i32;
        let mut map = HashMap::new();
        for i in -nn..=nn + 1 {
            for j in -(nn - 1)..=nn {
                if !is_block(n, i, j) {
                    continue;
                }
                let w = Word(block_word(sys, i, j)?);
                let g = GroupElement::from_word(sys, &w)?;
                if g.length(sys) == w.len() {
                    map.entry(g).or_insert((i, j));
                }
            }
        }
        Ok(BlockTable(map))
    }
}

/// Parses a fully commutative element of `D~` into its normal form.
pub fn parse_d(sys: &CoxeterSystem, x: &GroupElement) -> Result<DAffForm> {
    check_system(sys)?;
    let n = sys.n();
    let a = sys.affine().unwrap();
    let peeled = peel(sys, x, a)?;
    let table = BlockTable::new(sys)?;
    let mut seq = Vec::with_capacity(peeled.blocks.len());
    for b in &peeled.blocks {
        let g = GroupElement::from_word(sys, b)?;
        let ij = table
            .0
            .get(&g)
            .ok_or_else(|| Error::Domain(format!("unexpected block {}", sys.format(b))))?;
        seq.push(*ij);
    }
    let tail_el = GroupElement::from_word(sys, &peeled.tail)?;
    let tail = DForm::parse(sys, &tail_el, n)?;
    classify_d(sys, &seq, tail, &tail_el)
}

/// Classifies a block sequence `((i_1, j_1), ..., (i_m, j_m))` with tail.
pub fn classify_d(
    sys: &CoxeterSystem,
    seq: &[(i32, i32)],
    tail: DForm,
    tail_el: &GroupElement,
) -> Result<DAffForm> {
    let n = sys.n();
    let nn = n as i32;
    let m = seq.len();
    let form_a = (nn + 1, -(nn - 1));
    let form_b = (nn, -(nn - 1));
    let first_type = m >= 2 && seq[1..].iter().any(|&b| b == form_a || b == form_b);
    let form = if m == 0 {
        DAffForm::Finite(tail)
    } else if m == 1 {
        DAffForm::AffineOne {
            i: seq[0].0,
            j: seq[0].1,
            v: tail,
        }
    } else if first_type {
        let f = inverse_interval_param(sys, tail_el, n)
            .ok_or_else(|| Error::Domain(format!("first type tail {tail} is not <f,{n}]^-1")))?;
        let bad = || Error::Domain(format!("unexpected first type blocks {seq:?}"));
        if seq[2..].iter().any(|&b| b != form_b) {
            return Err(bad());
        }
        if seq[1] == form_a {
            if seq[0] != (nn + 1, nn) {
                return Err(bad());
            }
            DAffForm::FirstType {
                eps: 1,
                eta: 0,
                i: -(nn - 1),
                k: m - 2,
                f,
            }
        } else {
            let (eta, i) = match seq[0] {
                (i1, j1) if i1 == nn + 1 && j1 == nn => (0, nn),
                (i1, j1) if i1 == nn + 1 => (0, j1),
                b if b == form_b => (1, -(nn - 1)),
                _ => return Err(bad()),
            };
            DAffForm::FirstType {
                eps: 0,
                eta,
                i,
                k: m - 1,
                f,
            }
        }
    } else {
        let last = seq[m - 1];
        let is_d = |b: (i32, i32)| b == (-1, 1) || b == (1, -1);
        let run = if is_d(last) {
            seq.iter().rev().take_while(|&&b| b == last).count()
        } else {
            0
        };
        let p = m - run;
        let psi1 = if run > 0 { last == (1, -1) } else { seq[p - 1].1 == -1 };
        let mut pairs = seq[..p].to_vec();
        let mut tail = tail;
        if psi1 {
            pairs = pairs.iter().map(|&(i, j)| (flip(i), flip(j))).collect();
            tail = tail.psi1();
        }
        DAffForm::SecondType {
            pairs,
            k: run,
            tail,
            psi1,
        }
    };
    Ok(form)
}

/// Every valid form with length at most `max_len` and affine length at most
/// `max_affine`.
pub fn grid_d(sys: &CoxeterSystem, max_len: Option<usize>, max_affine: usize) -> Result<Vec<DAffForm>> {
    check_system(sys)?;
    let n = sys.n();
    let nn = n as i32;
    let fits = |l: usize| max_len.is_none_or(|ml| l <= ml);
    let tails = enumerate_valid(n, max_len);
    let mut out = Vec::new();
    for v in &tails {
        out.push(DAffForm::Finite(v.clone()));
    }
    let blocks: Vec<(i32, i32)> = (-nn..=nn + 1)
        .flat_map(|i| (-(nn - 1)..=nn).map(move |j| (i, j)))
        .filter(|&(i, j)| is_block(n, i, j))
        .collect();
    if max_affine >= 1 {
        for &(i, j) in &blocks {
            for v in &tails {
                out.push(DAffForm::AffineOne { i, j, v: v.clone() });
            }
        }
    }
    for eps in 0..=1u8 {
        for eta in 0..=1u8 {
            for i in -(nn - 1)..=nn {
                for k in 0..max_affine {
                    for f in -nn..=nn + 1 {
                        out.push(DAffForm::FirstType { eps, eta, i, k, f });
                    }
                }
            }
        }
    }
    let mut chains: Vec<Vec<(i32, i32)>> = vec![Vec::new()];
    let mut frontier: Vec<Vec<(i32, i32)>> = vec![Vec::new()];
    for _ in 0..max_affine {
        let mut next = Vec::new();
        for c in &frontier {
            let bound = c.last().map_or(nn + 2, |&(_, j)| j);
            for &(i, j) in &blocks {
                if i < bound && i > 1 && j.abs() < i {
                    let mut v = c.clone();
                    v.push((i, j));
                    next.push(v);
                }
            }
        }
        chains.extend(next.iter().cloned());
        frontier = next;
    }
    for pairs in &chains {
        let p = pairs.len();
        for k in 0..=max_affine.saturating_sub(p) {
            if p + k < 2 {
                continue;
            }
            for v in &tails {
                for psi1 in [false, true] {
                    out.push(DAffForm::SecondType {
                        pairs: pairs.clone(),
                        k,
                        tail: v.clone(),
                        psi1,
                    });
                }
            }
        }
    }
    Ok(out
        .into_iter()
        .filter(|f| fits(f.length(n)) && f.affine_length() <= max_affine && f.validate(sys).is_ok())
        .collect())
}

impl fmt::Display for DAffForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            DAffForm::Finite(v) => write!(f, "finite {v}"),
            DAffForm::AffineOne { i, j, v } => write!(f, "affine1 i={i} j={j} v={v}"),
            DAffForm::FirstType { eps, eta, i, k, f: ff } => {
                write!(f, "first e={eps} h={eta} i={i} k={k} f={ff}")
            }
            DAffForm::SecondType { pairs, k, tail, psi1 } => {
                write!(f, "second pairs={pairs:?} k={k} w_r={tail}")?;
                if *psi1 {
                    f.write_str(" psi1")?;
                }
                Ok(())
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coxeter::{enumerate_ball, is_fully_commutative, is_reduced, Budget};
    use std::collections::HashSet;

    fn brute_force(rank: usize, max_len: usize) -> usize {
        let sys = CoxeterSystem::new(Family::Dtilde, rank).unwrap();
        let ball = enumerate_ball(&sys, max_len, Budget::new(10_000_000)).unwrap();
        let mut fc = HashSet::new();
        for e in ball.iter().filter(|e| is_fully_commutative(&sys, &e.element)) {
            let f = parse_d(&sys, &e.element).unwrap();
            let g = GroupElement::from_word(&sys, &f.word(&sys).unwrap()).unwrap();
            assert_eq!(g, e.element, "{f}");
            f.validate(&sys).unwrap_or_else(|err| panic!("{f}: {err}"));
            let mirror = GroupElement::from_word(&sys, &psi1_word(&sys, &e.word)).unwrap();
            assert_eq!(parse_d(&sys, &mirror).unwrap(), f.psi1(&sys), "{f}");
            fc.insert(e.element.clone());
        }
        let mut seen = HashSet::new();
        for f in grid_d(&sys, Some(max_len), max_len).unwrap() {
            let w = f.word(&sys).unwrap();
            assert!(is_reduced(&sys, &w).unwrap(), "{f}");
            let g = GroupElement::from_word(&sys, &w).unwrap();
            assert!(fc.contains(&g), "{f}");
            assert!(seen.insert(g), "duplicate {f}");
        }
        assert_eq!(seen.len(), fc.len());
        fc.len()
    }

    #[test]
    fn bijective_on_small_balls() {
        brute_force(5, 9);
        brute_force(6, 7);
    }

    fn parse(sys: &CoxeterSystem, s: &str) -> DAffForm {
        parse_d(sys, &GroupElement::from_word(sys, &sys.parse_word(s).unwrap()).unwrap()).unwrap()
    }

    #[test]
    fn examples() {
        let sys = CoxeterSystem::new(Family::Dtilde, 5).unwrap();
        assert_eq!(
            parse(&sys, "sb3"),
            DAffForm::AffineOne { i: 4, j: 3, v: DForm::identity() }
        );
        assert_eq!(
            parse(&sys, "s1 s2 s3 sb1 s2 sb3 s1 s2 s3 sb1 s2 sb3"),
            DAffForm::SecondType {
                pairs: vec![],
                k: 2,
                tail: DForm::identity(),
                psi1: true
            }
        );
        assert_eq!(
            parse(&sys, "s3 s2 s1 sb1 s2 sb3 s3"),
            DAffForm::AffineOne { i: 3, j: -2, v: DForm::new(vec![(3, 3)]) }
        );
        let first = parse(&sys, "sb3 s2 s1 sb1 s2 sb3 s3");
        assert_eq!(first, DAffForm::FirstType { eps: 1, eta: 0, i: -2, k: 0, f: 3 });
        assert_eq!(first.affine_length(), 2);
        let second = parse(&sys, "sb3 s2 s1 s3 s2 sb3");
        assert_eq!(
            second,
            DAffForm::SecondType { pairs: vec![(4, 3), (2, 1)], k: 0, tail: DForm::identity(), psi1: false }
        );
    }

    #[test]
    fn endpoint_rule_is_sufficient_but_not_necessary() {
        let sys = CoxeterSystem::new(Family::Dtilde, 5).unwrap();
        let n = sys.n() as i32;
        let mut missed = Vec::new();
        for i in -n..=n + 1 {
            for j in -(n - 1)..=n {
                if !is_block(sys.n(), i, j) || (i < 1 && i != -1) {
                    continue;
                }
                for v in enumerate_valid(sys.n(), None) {
                    let f = DAffForm::AffineOne { i, j, v: v.clone() };
                    let ok = f.validate(&sys).is_ok();
                    if affine_one_endpoint_rule(&sys, i, j, &v) {
                        assert!(ok, "{f}");
                    } else if ok {
                        missed.push(f);
                    }
                }
            }
        }
        assert!(missed.contains(&DAffForm::AffineOne { i: 3, j: -2, v: DForm::new(vec![(3, 3)]) }));
        assert!(!missed.is_empty());
    }

    #[test]
    fn rejects_bad_forms() {
        let sys = CoxeterSystem::new(Family::Dtilde, 5).unwrap();
        let bad = DAffForm::FirstType { eps: 1, eta: 1, i: -2, k: 1, f: 4 };
        assert!(matches!(bad.validate(&sys), Err(Error::InvalidForm(_))));
        let bad = DAffForm::AffineOne { i: 1, j: 0, v: DForm::identity() };
        assert!(bad.validate(&sys).is_err());
        let d3 = CoxeterSystem::new(Family::Dtilde, 4).unwrap();
        assert!(matches!(parse_d(&d3, &GroupElement::identity(&d3)), Err(Error::Domain(_))));
    }
}
