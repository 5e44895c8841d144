//! Coxeter systems of types D, B~, C~ and D~, their alphabets and words.

use std::cmp::Ordering;
use std::fmt;

use super::quadint::QuadInt;
use crate::error::{Error, Result};

/// The four supported families.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Family {
    /// Finite type D_{n+1}: generators sb1, s1, ..., sn.
    D,
    /// Affine type B~_{n+1}: generators sb1, s1, ..., sn, t.
    Btilde,
    /// Affine type C~_{n+1}: generators s0, s1, ..., sn, t.
    Ctilde,
    /// Affine type D~_{n+1}: generators sb1, s1, ..., sn, sbn.
    Dtilde,
}

impl Family {
    /// Short name used in messages and on the command line.
    pub fn name(self) -> &'static str {
        match self {
            Family::D => "D",
            Family::Btilde => "Btilde",
            Family::Ctilde => "Ctilde",
            Family::Dtilde => "Dtilde",
        }
    }

    /// Smallest accepted number of generators.
    pub fn min_rank(self) -> usize {
        match self {
            Family::D | Family::Ctilde => 3,
            Family::Btilde | Family::Dtilde => 4,
        }
    }

    /// Number of generators of the system whose largest sigma index is `n`.
    pub fn rank_of_n(self, n: usize) -> usize {
        match self {
            Family::D => n + 1,
            _ => n + 2,
        }
    }

    /// Largest sigma index `n` for a system with `rank` generators.
    pub fn n_of_rank(self, rank: usize) -> usize {
        match self {
            Family::D => rank - 1,
            _ => rank - 2,
        }
    }

    /// Number of generators of the group written with subscript `k`
    /// (`D_k`, `B~_k`, `C~_k`, `D~_k`).
    pub fn rank_of_subscript(self, k: usize) -> usize {
        match self {
            Family::D => k,
            _ => k + 1,
        }
    }

    /// Subscript `k` of the group with `rank` generators.
    pub fn subscript_of_rank(self, rank: usize) -> usize {
        match self {
            Family::D => rank,
            _ => rank - 1,
        }
    }
}

impl std::str::FromStr for Family {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "D" => Ok(Family::D),
            "Btilde" => Ok(Family::Btilde),
            "Ctilde" => Ok(Family::Ctilde),
            "Dtilde" => Ok(Family::Dtilde),
            _ => Err(Error::Domain(format!("unknown family {s:?}"))),
        }
    }
}

/// A generator identifier.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Generator {
    /// sigma_i, `1 <= i <= n`.
    Sigma(usize),
    /// sigma_{1 bar}.
    SigmaBar1,
    /// sigma_{n bar} (type D~ only).
    SigmaBarN,
    /// The affine generator t of B~ and C~.
    T,
    /// sigma_0 of C~.
    S0,
}

/// A letter: the position of a generator in the alphabet of its system.
pub type Letter = u8;

/// A word over the alphabet of some system.
///
/// Letters are alphabet positions, so the derived order on letters is the
/// alphabet order. Words compare in ShortLex order.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash)]
pub struct Word(pub Vec<Letter>);

impl Word {
    /// The empty word.
    pub fn empty() -> Self {
        Word(Vec::new())
    }

    /// Number of letters.
    pub fn len(&self) -> usize {
        self.0.len()
    }

    /// True for the empty word.
    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Letters as a slice.
    pub fn letters(&self) -> &[Letter] {
        &self.0
    }

    /// Concatenation.
    pub fn concat(&self, other: &Word) -> Word {
        let mut v = self.0.clone();
        v.extend_from_slice(&other.0);
        Word(v)
    }

    /// The reversed word (a word for the inverse element).
    pub fn reversed(&self) -> Word {
        Word(self.0.iter().rev().copied().collect())
    }

    /// Number of occurrences of `letter`.
    pub fn count(&self, letter: Letter) -> usize {
        self.0.iter().filter(|&&l| l == letter).count()
    }
}

impl From<Vec<Letter>> for Word {
    fn from(v: Vec<Letter>) -> Self {
        Word(v)
    }
}

impl Ord for Word {
    fn cmp(&self, other: &Self) -> Ordering {
        self.0
            .len()
            .cmp(&other.0.len())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Word {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// A Coxeter system of one of the four families.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct CoxeterSystem {
    family: Family,
    n: usize,
    gens: Vec<Generator>,
    orders: Vec<u8>,
    coeffs: Vec<QuadInt>,
}

impl CoxeterSystem {
    /// Builds the system of `family` with `rank` generators.
    pub fn new(family: Family, rank: usize) -> Result<Self> {
        let min = family.min_rank();
        if rank < min {
            return Err(Error::Rank {
                family: family.name(),
                rank,
                min,
            });
        }
        let n = family.n_of_rank(rank);
        let mut gens = Vec::with_capacity(rank);
        match family {
            Family::Ctilde => gens.push(Generator::S0),
            _ => gens.push(Generator::SigmaBar1),
        }
        gens.extend((1..=n).map(Generator::Sigma));
        match family {
            Family::D => {}
            Family::Btilde | Family::Ctilde => gens.push(Generator::T),
            Family::Dtilde => gens.push(Generator::SigmaBarN),
        }
        let mut sys = CoxeterSystem {
            family,
            n,
            gens,
            orders: vec![2; rank * rank],
            coeffs: Vec::new(),
        };
        for i in 0..rank {
            sys.orders[i * rank + i] = 1;
        }
        for i in 1..n {
            sys.set_order(Generator::Sigma(i), Generator::Sigma(i + 1), 3);
        }
        match family {
            Family::D | Family::Btilde | Family::Dtilde => {
                if n >= 2 {
                    sys.set_order(Generator::SigmaBar1, Generator::Sigma(2), 3);
                }
            }
            Family::Ctilde => sys.set_order(Generator::S0, Generator::Sigma(1), 4),
        }
        match family {
            Family::Btilde | Family::Ctilde => sys.set_order(Generator::Sigma(n), Generator::T, 4),
            Family::Dtilde => {
                sys.set_order(Generator::SigmaBarN, Generator::Sigma(n - 1), 3);
                if n == 2 {
                    // D~_3 is the four-cycle: sigma_{2 bar} is attached to both
                    // branches of the fork at sigma_1 and sigma_{1 bar}.
                    sys.set_order(Generator::SigmaBarN, Generator::SigmaBar1, 3);
                }
            }
            Family::D => {}
        }
        sys.coeffs = sys
            .orders
            .iter()
            .map(|&m| match m {
                1 => QuadInt::new(2, 0),
                2 => QuadInt::zero(),
                3 => QuadInt::new(-1, 0),
                4 => QuadInt::new(0, -1),
                _ => unreachable!(),
            })
            .collect();
        Ok(sys)
    }

    /// Builds the system of `family` whose largest sigma index is `n`.
    pub fn from_n(family: Family, n: usize) -> Result<Self> {
        Self::new(family, family.rank_of_n(n))
    }

    /// Builds the group with the usual subscript (`D_k`, `B~_k`, ...).
    pub fn from_subscript(family: Family, k: usize) -> Result<Self> {
        Self::new(family, family.rank_of_subscript(k))
    }

    fn set_order(&mut self, a: Generator, b: Generator, m: u8) {
        let r = self.rank();
        let i = self.index(a) as usize;
        let j = self.index(b) as usize;
        self.orders[i * r + j] = m;
        self.orders[j * r + i] = m;
    }

    /// The family.
    pub fn family(&self) -> Family {
        self.family
    }

    /// Number of generators.
    pub fn rank(&self) -> usize {
        self.gens.len()
    }

    /// Largest sigma index.
    pub fn n(&self) -> usize {
        self.n
    }

    /// The usual subscript of the group.
    pub fn subscript(&self) -> usize {
        self.family.subscript_of_rank(self.rank())
    }

    /// The generators in alphabet order.
    pub fn generators(&self) -> &[Generator] {
        &self.gens
    }

    /// Generator at alphabet position `l`.
    pub fn generator(&self, l: Letter) -> Generator {
        self.gens[l as usize]
    }

    /// Alphabet position of `g`, if it belongs to the system.
    pub fn try_index(&self, g: Generator) -> Option<Letter> {
        self.gens.iter().position(|&x| x == g).map(|p| p as Letter)
    }

    /// Alphabet position of `g`; panics if `g` is foreign.
    pub fn index(&self, g: Generator) -> Letter {
        self.try_index(g)
            .unwrap_or_else(|| panic!("{g:?} is not a generator of {}", self.name()))
    }

    /// Letter of sigma_i.
    pub fn sigma(&self, i: usize) -> Letter {
        self.index(Generator::Sigma(i))
    }

    /// Letter of sigma_{1 bar}.
    pub fn sigma_bar1(&self) -> Letter {
        self.index(Generator::SigmaBar1)
    }

    /// The affine letter: t in B~ and C~, sigma_{n bar} in D~.
    pub fn affine(&self) -> Option<Letter> {
        match self.family {
            Family::Btilde | Family::Ctilde => self.try_index(Generator::T),
            Family::Dtilde => self.try_index(Generator::SigmaBarN),
            Family::D => None,
        }
    }

    /// Order m(s, t) of the product of two generators.
    pub fn order(&self, a: Letter, b: Letter) -> u8 {
        self.orders[a as usize * self.rank() + b as usize]
    }

    /// True when the two generators commute.
    pub fn commute(&self, a: Letter, b: Letter) -> bool {
        self.order(a, b) <= 2
    }

    /// The coefficient 2B(a, b) = -2cos(pi / m(a, b)) of the bilinear form.
    pub fn form(&self, a: Letter, b: Letter) -> QuadInt {
        self.coeffs[a as usize * self.rank() + b as usize]
    }

    /// Display name such as `B~_4`.
    pub fn name(&self) -> String {
        let f = match self.family {
            Family::D => "D",
            Family::Btilde => "B~",
            Family::Ctilde => "C~",
            Family::Dtilde => "D~",
        };
        format!("{f}_{}", self.subscript())
    }

    /// Token for a letter.
    pub fn token(&self, l: Letter) -> String {
        match self.generator(l) {
            Generator::Sigma(i) => format!("s{i}"),
            Generator::SigmaBar1 => "sb1".to_string(),
            Generator::SigmaBarN => format!("sb{}", self.n),
            Generator::T => "t".to_string(),
            Generator::S0 => "s0".to_string(),
        }
    }

    /// Tokens of a word.
    pub fn tokens(&self, w: &Word) -> Vec<String> {
        w.0.iter().map(|&l| self.token(l)).collect()
    }

    /// Space separated rendering of a word.
    pub fn format(&self, w: &Word) -> String {
        self.tokens(w).join(" ")
    }

    /// Parses a whitespace separated word.
    pub fn parse_word(&self, text: &str) -> Result<Word> {
        text.split_whitespace()
            .enumerate()
            .map(|(position, token)| {
                self.parse_token(token).ok_or_else(|| Error::Alphabet {
                    token: token.to_string(),
                    position,
                })
            })
            .collect::<Result<Vec<_>>>()
            .map(Word)
    }

    fn parse_token(&self, token: &str) -> Option<Letter> {
        let g = match token {
            "t" => Generator::T,
            "s0" => Generator::S0,
            "sb1" => Generator::SigmaBar1,
            _ => {
                if let Some(rest) = token.strip_prefix("sb") {
                    let i: usize = rest.parse().ok()?;
                    if i != self.n || rest.starts_with('0') {
                        return None;
                    }
                    Generator::SigmaBarN
                } else if let Some(rest) = token.strip_prefix('s') {
                    if rest.starts_with('0') {
                        return None;
                    }
                    Generator::Sigma(rest.parse().ok()?)
                } else {
                    return None;
                }
            }
        };
        self.try_index(g)
    }

    /// Checks that every letter of `w` lies in the alphabet.
    pub fn check_word(&self, w: &Word) -> Result<()> {
        match w.0.iter().position(|&l| l as usize >= self.rank()) {
            Some(position) => Err(Error::Alphabet {
                token: format!("#{}", w.0[position]),
                position,
            }),
            None => Ok(()),
        }
    }
}

impl fmt::Display for CoxeterSystem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.name())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn btilde_alphabet_and_orders() {
        let sys = CoxeterSystem::new(Family::Btilde, 5).unwrap();
        assert_eq!(sys.n(), 3);
        let w = sys.parse_word("sb1 s1 s2 s3 t").unwrap();
        assert_eq!(w.0, vec![0, 1, 2, 3, 4]);
        let (s3, t, sb1, s2, s1) = (3, 4, 0, 2, 1);
        assert_eq!(sys.order(s3, t), 4);
        assert_eq!(sys.order(sb1, s2), 3);
        assert_eq!(sys.order(sb1, s1), 2);
        assert_eq!(sys.order(s1, t), 2);
    }

    #[test]
    fn d4_orders() {
        let sys = CoxeterSystem::new(Family::D, 4).unwrap();
        for a in 0..4 {
            for b in 0..4 {
                let m = sys.order(a, b);
                assert!(if a == b { m == 1 } else { m == 2 || m == 3 });
            }
        }
        assert_eq!(sys.order(0, 1), 2);
    }

    #[test]
    fn dtilde_orders() {
        let sys = CoxeterSystem::new(Family::Dtilde, 5).unwrap();
        let sb3 = sys.index(Generator::SigmaBarN);
        assert_eq!(sys.order(sb3, sys.sigma(2)), 3);
        assert_eq!(sys.order(sb3, sys.sigma(3)), 2);
        assert_eq!(sys.order(sb3, sys.sigma_bar1()), 2);
        assert_eq!(sys.token(sb3), "sb3");
    }

    #[test]
    fn rank_errors() {
        assert!(matches!(
            CoxeterSystem::new(Family::Btilde, 3),
            Err(Error::Rank { .. })
        ));
        assert!(CoxeterSystem::new(Family::D, 3).is_ok());
        assert!(CoxeterSystem::new(Family::Ctilde, 3).is_ok());
    }

    #[test]
    fn strict_parsing() {
        let sys = CoxeterSystem::new(Family::D, 4).unwrap();
        let err = sys.parse_word("s1 t").unwrap_err();
        assert_eq!(
            err,
            Error::Alphabet {
                token: "t".into(),
                position: 1
            }
        );
        assert!(sys.parse_word("s01").is_err());
        assert!(sys.parse_word("s4").is_err());
        assert_eq!(sys.format(&sys.parse_word(" s3  s1 ").unwrap()), "s3 s1");
    }

    #[test]
    fn shortlex_order() {
        let a = Word(vec![3]);
        let b = Word(vec![0, 1]);
        let c = Word(vec![0, 2]);
        assert!(a < b && b < c);
    }

    #[test]
    fn subscripts() {
        let sys = CoxeterSystem::from_subscript(Family::Btilde, 4).unwrap();
        assert_eq!(sys.rank(), 5);
        assert_eq!(sys.name(), "B~_4");
        let d = CoxeterSystem::from_subscript(Family::D, 4).unwrap();
        assert_eq!(d.rank(), 4);
    }
}
