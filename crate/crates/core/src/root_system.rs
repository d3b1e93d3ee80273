//! Cartan data and positive roots for the simple root systems.
//!
//! Nodes use Bourbaki numbering and are 1-based in every public function.
//! The stored Cartan matrix follows `C[i][j] = 2(αᵢ, αⱼ) / (αᵢ, αᵢ)`, so row
//! `i` holds the pairings `⟨αⱼ, αᵢ^∨⟩` and a root with simple-root
//! coefficients `m` has fundamental-weight coordinates `C · m`.
//!
//! The invariant form is normalised so that short simple roots have
//! `(α, α) = 2`; the symmetrizer `d` satisfies `dᵢ Cᵢⱼ = dⱼ Cⱼᵢ` with
//! `dᵢ = (αᵢ, αᵢ) / 2`.

use std::collections::HashSet;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::rational::Rational;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum Letter {
    A,
    B,
    C,
    D,
    E,
    F,
    G,
}

impl Letter {
    pub const ALL: [Letter; 7] = [
        Letter::A,
        Letter::B,
        Letter::C,
        Letter::D,
        Letter::E,
        Letter::F,
        Letter::G,
    ];

    pub fn as_char(self) -> char {
        match self {
            Letter::A => 'A',
            Letter::B => 'B',
            Letter::C => 'C',
            Letter::D => 'D',
            Letter::E => 'E',
            Letter::F => 'F',
            Letter::G => 'G',
        }
    }

    pub fn from_char(c: char) -> Result<Letter> {
        Letter::ALL
            .into_iter()
            .find(|l| l.as_char() == c.to_ascii_uppercase())
            .ok_or(Error::UnknownLetter(c))
    }
}

/// A Cartan–Killing type such as `E6` or `B4`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct SimpleType {
    letter: Letter,
    rank: usize,
}

impl SimpleType {
    pub fn new(letter: Letter, rank: usize) -> Result<Self> {
        let (ok, constraint) = match letter {
            Letter::A => (rank >= 1, "A needs rank ≥ 1"),
            Letter::B => (rank >= 2, "B needs rank ≥ 2"),
            Letter::C => (rank >= 2, "C needs rank ≥ 2"),
            Letter::D => (rank >= 3, "D needs rank ≥ 3"),
            Letter::E => ((6..=8).contains(&rank), "E needs rank 6, 7 or 8"),
            Letter::F => (rank == 4, "F needs rank 4"),
            Letter::G => (rank == 2, "G needs rank 2"),
        };
        if ok {
            Ok(SimpleType { letter, rank })
        } else {
            Err(Error::InvalidRank {
                letter: letter.as_char(),
                rank,
                constraint,
            })
        }
    }

    pub fn letter(&self) -> Letter {
        self.letter
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    /// Every valid type with `rank ≤ max_rank`, ordered by letter then rank.
    pub fn all_up_to(max_rank: usize) -> Vec<SimpleType> {
        Letter::ALL
            .into_iter()
            .flat_map(|letter| (1..=max_rank).filter_map(move |r| SimpleType::new(letter, r).ok()))
            .collect()
    }

    /// Number of positive roots, from the closed-form counts.
    pub fn positive_root_count(&self) -> usize {
        let l = self.rank;
        match (self.letter, l) {
            (Letter::A, _) => l * (l + 1) / 2,
            (Letter::B, _) | (Letter::C, _) => l * l,
            (Letter::D, _) => l * (l - 1),
            (Letter::E, 6) => 36,
            (Letter::E, 7) => 63,
            (Letter::E, _) => 120,
            (Letter::F, _) => 24,
            (Letter::G, _) => 6,
        }
    }

    /// Edges of the Dynkin diagram as `(short, long, ratio)` with 1-based
    /// nodes; `ratio = (long, long) / (short, short)` and is 1 for simple bonds.
    fn bonds(&self) -> Vec<(usize, usize, i64)> {
        let l = self.rank;
        let chain = |n: usize| (1..n).map(|i| (i, i + 1, 1)).collect::<Vec<_>>();
        match self.letter {
            Letter::A => chain(l),
            Letter::B => {
                let mut b = chain(l - 1);
                b.push((l, l - 1, 2));
                b
            }
            Letter::C => {
                let mut b = chain(l - 1);
                b.push((l - 1, l, 2));
                b
            }
            Letter::D => {
                let mut b = chain(l - 1);
                b.push((l - 2, l, 1));
                b
            }
            Letter::E => {
                let mut b = vec![(1, 3, 1), (2, 4, 1)];
                b.extend((3..l).map(|i| (i, i + 1, 1)));
                b
            }
            Letter::F => vec![(1, 2, 1), (3, 2, 2), (3, 4, 1)],
            Letter::G => vec![(1, 2, 3)],
        }
    }

    /// Cartan matrix with `C[i][j] = 2(αᵢ, αⱼ) / (αᵢ, αᵢ)` (0-based storage).
    pub fn cartan_matrix(&self) -> Vec<Vec<i64>> {
        let l = self.rank;
        let mut c = vec![vec![0i64; l]; l];
        for (i, row) in c.iter_mut().enumerate() {
            row[i] = 2;
        }
        for (short, long, ratio) in self.bonds() {
            c[short - 1][long - 1] = -ratio;
            c[long - 1][short - 1] = -1;
        }
        c
    }
}

impl fmt::Display for SimpleType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.letter.as_char(), self.rank)
    }
}

impl FromStr for SimpleType {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let mut chars = s.chars();
        let letter = chars.next().ok_or_else(|| Error::BadTypeName(s.to_string()))?;
        let rank: usize = chars
            .as_str()
            .parse()
            .map_err(|_| Error::BadTypeName(s.to_string()))?;
        SimpleType::new(Letter::from_char(letter)?, rank)
    }
}

impl Serialize for SimpleType {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for SimpleType {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// A positive root, stored by its simple-root coefficients.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Root {
    coeffs: Vec<i64>,
    length_sq: i64,
}

impl Root {
    pub fn coeffs(&self) -> &[i64] {
        &self.coeffs
    }

    /// `(α, α)`; short roots have length squared 2.
    pub fn length_sq(&self) -> i64 {
        self.length_sq
    }

    pub fn height(&self) -> i64 {
        self.coeffs.iter().sum()
    }

    /// True when the root lies in the span of the given 1-based nodes.
    pub fn supported_on(&self, nodes: &[usize]) -> bool {
        self.coeffs
            .iter()
            .enumerate()
            .all(|(i, &m)| m == 0 || nodes.contains(&(i + 1)))
    }
}

/// An integral weight `λ = Σ aᵢ ϖᵢ`, stored by its fundamental-weight
/// coordinates.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Weight(Vec<i64>);

impl Weight {
    pub fn new(coords: Vec<i64>) -> Self {
        Weight(coords)
    }

    pub fn zero(rank: usize) -> Self {
        Weight(vec![0; rank])
    }

    /// The fundamental weight `ϖ_k` (1-based `k`).
    pub fn fundamental(rank: usize, k: usize) -> Self {
        let mut v = vec![0; rank];
        v[k - 1] = 1;
        Weight(v)
    }

    pub fn coords(&self) -> &[i64] {
        &self.0
    }

    pub fn rank(&self) -> usize {
        self.0.len()
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&a| a == 0)
    }

    pub fn is_dominant(&self) -> bool {
        self.0.iter().all(|&a| a >= 0)
    }

    pub fn scaled(&self, c: i64) -> Weight {
        Weight(self.0.iter().map(|a| a * c).collect())
    }
}

impl std::ops::Add for &Weight {
    type Output = Weight;
    fn add(self, rhs: &Weight) -> Weight {
        Weight(self.0.iter().zip(&rhs.0).map(|(a, b)| a + b).collect())
    }
}

impl fmt::Display for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, a) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{a}")?;
        }
        write!(f, ")")
    }
}

#[derive(Debug, Clone)]
pub struct RootSystem {
    simple_type: SimpleType,
    cartan: Vec<Vec<i64>>,
    symmetrizer: Vec<i64>,
    positive_roots: Vec<Root>,
    cartan_inverse: Vec<Vec<Rational>>,
}

impl RootSystem {
    pub fn build(simple_type: SimpleType) -> Self {
        let cartan = simple_type.cartan_matrix();
        let symmetrizer = symmetrizer(&cartan);
        let cartan_inverse = invert(&cartan);
        let positive_roots = positive_roots(&cartan, &symmetrizer);
        RootSystem {
            simple_type,
            cartan,
            symmetrizer,
            positive_roots,
            cartan_inverse,
        }
    }

    pub fn simple_type(&self) -> SimpleType {
        self.simple_type
    }

    pub fn rank(&self) -> usize {
        self.simple_type.rank
    }

    pub fn cartan(&self) -> &[Vec<i64>] {
        &self.cartan
    }

    pub fn symmetrizer(&self) -> &[i64] {
        &self.symmetrizer
    }

    /// Positive roots ordered by height, then lexicographically.
    pub fn positive_roots(&self) -> &[Root] {
        &self.positive_roots
    }

    pub fn cartan_inverse(&self) -> &[Vec<Rational>] {
        &self.cartan_inverse
    }

    pub fn highest_root(&self) -> &Root {
        self.positive_roots.last().expect("root systems are non-empty")
    }

    pub fn rho(&self) -> Weight {
        Weight(vec![1; self.rank()])
    }

    pub fn check_node(&self, k: usize) -> Result<()> {
        if (1..=self.rank()).contains(&k) {
            Ok(())
        } else {
            Err(Error::NodeOutOfRange {
                node: k,
                rank: self.rank(),
            })
        }
    }

    pub fn check_weight(&self, lam: &Weight) -> Result<()> {
        if lam.rank() == self.rank() {
            Ok(())
        } else {
            Err(Error::WeightLength {
                expected: self.rank(),
                got: lam.rank(),
            })
        }
    }

    /// Fundamental-weight coordinates of an element of the root lattice.
    pub fn root_to_weight(&self, coeffs: &[i64]) -> Weight {
        Weight(
            self.cartan
                .iter()
                .map(|row| row.iter().zip(coeffs).map(|(c, m)| c * m).sum())
                .collect(),
        )
    }

    /// `λ_ad`, the highest root in fundamental-weight coordinates.
    pub fn highest_root_fw(&self) -> Weight {
        self.root_to_weight(self.highest_root().coeffs())
    }

    /// `ξ_k(λ)`, the coefficient of `α_k` when `λ` is written in simple roots.
    pub fn xi(&self, lam: &Weight, k: usize) -> Result<Rational> {
        self.check_node(k)?;
        self.check_weight(lam)?;
        Ok(self.xi_unchecked(lam, k))
    }

    pub(crate) fn xi_unchecked(&self, lam: &Weight, k: usize) -> Rational {
        self.cartan_inverse[k - 1]
            .iter()
            .zip(lam.coords())
            .filter(|(_, &a)| a != 0)
            .map(|(c, &a)| c * &Rational::from(a))
            .sum()
    }

    /// All simple-root coordinates of `λ`.
    pub fn simple_root_coords(&self, lam: &Weight) -> Vec<Rational> {
        (1..=self.rank()).map(|k| self.xi_unchecked(lam, k)).collect()
    }

    /// `⟨λ, α^∨⟩ = Σ aᵢ mᵢ dᵢ / d(α)` with `d(α) = (α, α) / 2`.
    pub fn coroot_pairing(&self, lam: &Weight, alpha: &Root) -> Rational {
        let num: i64 = lam
            .coords()
            .iter()
            .zip(alpha.coeffs())
            .zip(&self.symmetrizer)
            .map(|((a, m), d)| a * m * d)
            .sum();
        Rational::new(2 * num, alpha.length_sq())
    }

    /// The invariant form on weights, `(ϖᵢ, ϖⱼ) = (C⁻¹)ⱼᵢ dⱼ`.
    pub fn weight_form(&self, lam: &Weight, mu: &Weight) -> Rational {
        let mut acc = Rational::zero();
        for (i, &a) in lam.coords().iter().enumerate() {
            if a == 0 {
                continue;
            }
            for (j, &b) in mu.coords().iter().enumerate() {
                if b == 0 {
                    continue;
                }
                acc += &(&self.cartan_inverse[j][i] * &Rational::from(a * b * self.symmetrizer[j]));
            }
        }
        acc
    }
}

fn symmetrizer(cartan: &[Vec<i64>]) -> Vec<i64> {
    let l = cartan.len();
    let mut d: Vec<Option<Rational>> = vec![None; l];
    d[0] = Some(Rational::one());
    let mut stack = vec![0];
    while let Some(i) = stack.pop() {
        for j in 0..l {
            if i != j && cartan[i][j] != 0 && d[j].is_none() {
                let di = d[i].clone().unwrap();
                d[j] = Some(di * Rational::new(cartan[i][j], cartan[j][i]));
                stack.push(j);
            }
        }
    }
    let d: Vec<Rational> = d.into_iter().map(|x| x.expect("Dynkin diagram is connected")).collect();
    let min = d.iter().min().unwrap().clone();
    d.iter()
        .map(|x| {
            let v = (x / &min).to_integer().expect("length ratios are 1, 2 or 3");
            i64::try_from(v).unwrap()
        })
        .collect()
}

/// Exact inverse by Gauss–Jordan elimination.
fn invert(m: &[Vec<i64>]) -> Vec<Vec<Rational>> {
    let n = m.len();
    let mut a: Vec<Vec<Rational>> = m
        .iter()
        .enumerate()
        .map(|(i, row)| {
            row.iter()
                .map(|&x| Rational::from(x))
                .chain((0..n).map(|j| if i == j { Rational::one() } else { Rational::zero() }))
                .collect()
        })
        .collect();
    for col in 0..n {
        let pivot = (col..n)
            .find(|&r| !a[r][col].is_zero())
            .expect("Cartan matrices are non-singular");
        a.swap(col, pivot);
        let p = a[col][col].clone();
        for x in a[col].iter_mut() {
            *x = &*x / &p;
        }
        for r in 0..n {
            if r != col && !a[r][col].is_zero() {
                let f = a[r][col].clone();
                let pivot_row = a[col].clone();
                for (x, y) in a[r].iter_mut().zip(&pivot_row) {
                    *x = &*x - &(&f * y);
                }
            }
        }
    }
    a.into_iter().map(|row| row[n..].to_vec()).collect()
}

/// Positive roots by height induction with root strings: `α + αᵢ` is a root
/// iff `p − ⟨α, αᵢ^∨⟩ > 0`, where `p` is the largest `j` with `α − jαᵢ` a root.
fn positive_roots(cartan: &[Vec<i64>], symmetrizer: &[i64]) -> Vec<Root> {
    let l = cartan.len();
    let mut known: HashSet<Vec<i64>> = HashSet::new();
    let mut level: Vec<Vec<i64>> = (0..l)
        .map(|i| {
            let mut e = vec![0; l];
            e[i] = 1;
            e
        })
        .collect();
    let mut all = Vec::new();
    while !level.is_empty() {
        level.sort();
        known.extend(level.iter().cloned());
        let mut next = Vec::new();
        for alpha in &level {
            for i in 0..l {
                let mut p = 0;
                let mut down = alpha.clone();
                loop {
                    down[i] -= 1;
                    if known.contains(&down) {
                        p += 1;
                    } else {
                        break;
                    }
                }
                let pairing: i64 = cartan[i].iter().zip(alpha).map(|(c, m)| c * m).sum();
                if p - pairing > 0 {
                    let mut up = alpha.clone();
                    up[i] += 1;
                    next.push(up);
                }
            }
        }
        next.sort();
        next.dedup();
        all.append(&mut level);
        level = next;
    }
    all.into_iter()
        .map(|coeffs| {
            let length_sq = (0..l)
                .flat_map(|i| (0..l).map(move |j| (i, j)))
                .map(|(i, j)| coeffs[i] * coeffs[j] * symmetrizer[i] * cartan[i][j])
                .sum();
            Root { coeffs, length_sq }
        })
        .collect()
}
