//! Bundle-level invariants of `E_λ = G ×_P V_λ` over `X = G/P(α_k)`.
//!
//! * `h⁰(X, E_λ) = dim W_λ` when `λ` is dominant for `G`, and 0 otherwise
//!   (Bott–Borel–Weil, with `b` spanned by the negative roots).
//! * `c₁(E_λ) = dim V_λ · ξ_k(λ)/ξ_k(ϖ_k) · c₁(E_{ϖ_k})`.
//! * On a Hermitian symmetric `X`,
//!   `J(E_λ, −K_X) = 2 dim W_λ / (dim W_λ − dim V_λ) · ξ_k(λ)/ξ_k(λ_ad)`.

use std::fmt;

use num_bigint::{BigInt, BigUint};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::parabolic::{levi, LeviData, Parabolic};
use crate::rational::Rational;
use crate::rep_dimension::{weyl_dim_g, weyl_dim_levi};
use crate::root_system::{Letter, RootSystem, SimpleType, Weight};

/// First eigenvalue of the symmetric Kähler–Einstein metric on a Hermitian
/// symmetric space with positive-dimensional automorphism group.
pub const LAMBDA1_KE: i64 = 2;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum Family {
    AIII,
    BI,
    DI,
    DIII,
    CI,
    EIII,
    EVII,
}

impl Family {
    pub fn description(self) -> &'static str {
        match self {
            Family::AIII => "Grassmannian",
            Family::BI => "odd quadric",
            Family::DI => "even quadric",
            Family::DIII => "spinor variety",
            Family::CI => "Lagrangian Grassmannian",
            Family::EIII => "Cayley plane",
            Family::EVII => "Freudenthal variety",
        }
    }

    pub fn is_classical(self) -> bool {
        !matches!(self, Family::EIII | Family::EVII)
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

fn subscript(n: usize) -> String {
    n.to_string()
        .chars()
        .map(|c| char::from_u32('₀' as u32 + c.to_digit(10).unwrap()).unwrap())
        .collect()
}

/// Group-theoretic name of `G/P(α_k)` as it appears in the classification.
fn klein_form(t: SimpleType, k: usize) -> String {
    let n = t.rank();
    let group = match t.letter() {
        Letter::A => format!("SL({})", n + 1),
        Letter::B => format!("Spin({})", 2 * n + 1),
        Letter::C => format!("Sp({n},C)"),
        Letter::D => format!("Spin({})", 2 * n),
        _ => t.to_string(),
    };
    format!("{group}/P(α{})", subscript(k))
}

/// The entry of the classification table isomorphic to `G/P(α_k)`, found
/// from diagram automorphisms (`E6`: 1 ↔ 6, `D_n`: n−1 ↔ n, `D4` triality)
/// and the coincidence `D3 = A3`. Independent of any root computation.
pub fn table_representative(t: SimpleType, k: usize) -> Option<(SimpleType, usize, Family)> {
    let n = t.rank();
    if !(1..=n).contains(&k) {
        return None;
    }
    match (t.letter(), n, k) {
        (Letter::A, _, _) => Some((t, k, Family::AIII)),
        (Letter::B, _, 1) => Some((t, 1, Family::BI)),
        (Letter::C, _, k) if k == n => Some((t, n, Family::CI)),
        (Letter::D, _, 1) => Some((t, 1, Family::DI)),
        (Letter::D, 3, 2 | 3) => Some((SimpleType::new(Letter::A, 3).unwrap(), 1, Family::AIII)),
        (Letter::D, _, k) if k + 1 >= n => Some((t, n, Family::DIII)),
        (Letter::E, 6, 1 | 6) => Some((t, 1, Family::EIII)),
        (Letter::E, 7, 7) => Some((t, 7, Family::EVII)),
        _ => None,
    }
}

/// A compact irreducible Hermitian symmetric space `G/P(α_k)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "HermitianSpaceWire", into = "HermitianSpaceWire")]
pub struct HermitianSpace {
    ambient: SimpleType,
    node: usize,
    family: Family,
    klein_label: String,
}

impl HermitianSpace {
    /// Accepts any `(G, k)` whose node has coefficient one in the highest
    /// root; the family is that of the isomorphic table entry.
    pub fn new(ambient: SimpleType, node: usize) -> Result<Self> {
        let rs = RootSystem::build(ambient);
        Self::with_root_system(&rs, node)
    }

    pub fn with_root_system(rs: &RootSystem, node: usize) -> Result<Self> {
        rs.check_node(node)?;
        let ambient = rs.simple_type();
        let coefficient = rs.xi_unchecked(&rs.highest_root_fw(), node);
        if coefficient != Rational::one() {
            return Err(Error::NotHermitian {
                simple_type: ambient,
                node,
                coefficient: coefficient.to_string(),
            });
        }
        let (rep_type, rep_node, family) = table_representative(ambient, node)
            .expect("every cominuscule node has a table representative");
        let mut klein_label = klein_form(ambient, node);
        if (rep_type, rep_node) != (ambient, node) {
            klein_label = format!("{klein_label} ≅ {}", klein_form(rep_type, rep_node));
        }
        Ok(HermitianSpace {
            ambient,
            node,
            family,
            klein_label,
        })
    }

    pub fn ambient(&self) -> SimpleType {
        self.ambient
    }

    pub fn node(&self) -> usize {
        self.node
    }

    pub fn family(&self) -> Family {
        self.family
    }

    pub fn klein_label(&self) -> &str {
        &self.klein_label
    }

    pub fn parabolic(&self) -> Parabolic {
        Parabolic::maximal(self.ambient, self.node).expect("node validated on construction")
    }

    /// The homogeneous bundle used for each classical family in the sharp
    /// estimate `J = 2`; `None` for the exceptional families.
    pub fn classical_witness(&self) -> Option<Weight> {
        let n = self.ambient.rank();
        match self.family {
            Family::AIII | Family::CI | Family::DIII => Some(Weight::fundamental(n, 1)),
            Family::BI | Family::DI => Some(Weight::fundamental(n, n)),
            Family::EIII | Family::EVII => None,
        }
    }
}

#[derive(Serialize, Deserialize)]
struct HermitianSpaceWire {
    #[serde(rename = "type")]
    ambient: SimpleType,
    node: usize,
    family: Family,
    klein_label: String,
}

impl From<HermitianSpace> for HermitianSpaceWire {
    fn from(s: HermitianSpace) -> Self {
        HermitianSpaceWire {
            ambient: s.ambient,
            node: s.node,
            family: s.family,
            klein_label: s.klein_label,
        }
    }
}

impl TryFrom<HermitianSpaceWire> for HermitianSpace {
    type Error = String;

    fn try_from(w: HermitianSpaceWire) -> std::result::Result<Self, String> {
        let s = HermitianSpace::new(w.ambient, w.node).map_err(|e| e.to_string())?;
        if s.family != w.family || s.klein_label != w.klein_label {
            return Err(format!(
                "{}/P(α{}) is {} \"{}\", not {} \"{}\"",
                w.ambient, w.node, s.family, s.klein_label, w.family, w.klein_label
            ));
        }
        Ok(s)
    }
}

/// The classification table: the four infinite families up to `max_rank`
/// followed by the two exceptional spaces, in table order.
pub fn hermitian_table(max_rank: usize) -> Vec<HermitianSpace> {
    let mut out = Vec::new();
    let mut push = |letter, rank, node| {
        let t = SimpleType::new(letter, rank).unwrap();
        out.push(HermitianSpace::new(t, node).expect("table entries are cominuscule"));
    };
    // SL(n)/P(α_k), n ≥ 2.
    for rank in 1..=max_rank {
        for k in 1..=rank {
            push(Letter::A, rank, k);
        }
    }
    for n in 2..=max_rank {
        push(Letter::B, n, 1);
    }
    for n in 3..=max_rank {
        push(Letter::D, n, 1);
    }
    for n in 4..=max_rank {
        push(Letter::D, n, n);
    }
    for n in 2..=max_rank {
        push(Letter::C, n, n);
    }
    if max_rank >= 6 {
        push(Letter::E, 6, 1);
    }
    if max_rank >= 7 {
        push(Letter::E, 7, 7);
    }
    out
}

/// Coefficient-one test on the highest root: `ξ_k(λ_ad) = 1`.
pub fn is_hermitian(rs: &RootSystem, k: usize) -> Result<bool> {
    Ok(rs.xi(&rs.highest_root_fw(), k)? == Rational::one())
}

fn check_parabolic(rs: &RootSystem, p: &Parabolic, lam: &Weight) -> Result<()> {
    rs.check_weight(lam)?;
    if p.ambient() != rs.simple_type() {
        return Err(Error::TypeMismatch {
            parabolic: p.ambient(),
            root_system: rs.simple_type(),
        });
    }
    if !p.is_dominant_for(lam) {
        return Err(Error::NotParabolicDominant(lam.to_string()));
    }
    Ok(())
}

/// `h⁰(X, E_λ)` by Bott–Borel–Weil.
pub fn h0_bbw(rs: &RootSystem, p: &Parabolic, lam: &Weight) -> Result<BigUint> {
    check_parabolic(rs, p, lam)?;
    if lam.is_dominant() {
        Ok(weyl_dim_g(rs, lam)?.value)
    } else {
        Ok(BigUint::default())
    }
}

/// `c₁(E_λ)` as a multiple of the generator `c₁(E_{ϖ_k})`.
pub fn c1_ratio(rs: &RootSystem, p: &Parabolic, lam: &Weight) -> Result<Rational> {
    let k = p.node()?;
    check_parabolic(rs, p, lam)?;
    let ld = levi(rs, p)?;
    c1_ratio_with(rs, &ld, k, lam)
}

fn c1_ratio_with(rs: &RootSystem, ld: &LeviData, k: usize, lam: &Weight) -> Result<Rational> {
    let rank = Rational::from(BigInt::from(weyl_dim_levi(rs, ld, lam)?.value));
    let gen = rs.xi_unchecked(&Weight::fundamental(rs.rank(), k), k);
    Ok(rank * rs.xi_unchecked(lam, k) / gen)
}

/// `J(E, L) = 2 m h⁰ ⟨c₁(E) c₁(L)^{m−1}, [X]⟩ / (r (h⁰ − r) ⟨c₁(L)^m, [X]⟩)`,
/// with `deg_e` and `deg_l` standing for the two intersection numbers.
pub fn j_general(m: u64, h0: &BigUint, r: &BigUint, deg_e: &Rational, deg_l: &Rational) -> Result<Rational> {
    if h0 <= r {
        return Err(Error::UndefinedJ {
            h0: h0.to_string(),
            rank: r.to_string(),
        });
    }
    if m == 0 || *r == BigUint::default() || deg_l.is_zero() {
        return Err(Error::DegenerateJInput);
    }
    let big = |x: &BigUint| Rational::from(BigInt::from(x.clone()));
    let (h0, r) = (big(h0), big(r));
    let m = Rational::from(BigInt::from(m));
    let two = Rational::from(2);
    Ok(two * m * h0.clone() * deg_e.clone() / (r.clone() * (h0 - r) * deg_l.clone()))
}

/// Everything known about `E_λ` on a Hermitian symmetric space.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "BundleReportWire", into = "BundleReportWire")]
pub struct BundleReport {
    pub space: HermitianSpace,
    pub lam: Weight,
    /// `dim V_λ`.
    pub rank: BigUint,
    /// `dim W_λ`, or 0 when `λ` is not dominant for `G`.
    pub h0: BigUint,
    pub xi_k_lam: Rational,
    pub xi_k_ad: Rational,
    pub c1_ratio: Rational,
    /// `None` when `h⁰ ≤ rank`.
    pub j_value: Option<Rational>,
}

impl BundleReport {
    pub fn lambda1_reference(&self) -> Rational {
        Rational::from(LAMBDA1_KE)
    }

    /// True when the bound meets the Kähler–Einstein eigenvalue.
    pub fn sharp(&self) -> bool {
        self.j_value.as_ref() == Some(&self.lambda1_reference())
    }

    /// `2 ξ_k(λ) / ξ_k(λ_ad)`, the linear lower bound for `J`.
    pub fn pruning_bound(&self) -> Rational {
        Rational::from(2) * self.xi_k_lam.clone() / self.xi_k_ad.clone()
    }

    /// Ratio `⟨c₁(E_λ) c₁(−K)^{m−1}⟩ / ⟨c₁(−K)^m⟩ = (dim V_λ / m) · ξ_k(λ)/ξ_k(λ_ad)`.
    pub fn degree_ratio(&self, dim_x: u64) -> Rational {
        Rational::from(BigInt::from(self.rank.clone())) / Rational::from(BigInt::from(dim_x))
            * self.xi_k_lam.clone()
            / self.xi_k_ad.clone()
    }
}

#[derive(Serialize, Deserialize)]
struct BundleReportWire {
    #[serde(rename = "type")]
    ambient: SimpleType,
    family: Family,
    klein_label: String,
    node: usize,
    weight: Weight,
    #[serde(with = "crate::bigjson")]
    rank: BigUint,
    #[serde(with = "crate::bigjson")]
    h0: BigUint,
    xi_k: Rational,
    xi_k_ad: Rational,
    c1_ratio: Rational,
    j: Option<Rational>,
    lambda1_reference: Rational,
    sharp: bool,
}

impl From<BundleReport> for BundleReportWire {
    fn from(b: BundleReport) -> Self {
        let lambda1_reference = b.lambda1_reference();
        let sharp = b.sharp();
        BundleReportWire {
            ambient: b.space.ambient,
            family: b.space.family,
            klein_label: b.space.klein_label,
            node: b.space.node,
            weight: b.lam,
            rank: b.rank,
            h0: b.h0,
            xi_k: b.xi_k_lam,
            xi_k_ad: b.xi_k_ad,
            c1_ratio: b.c1_ratio,
            j: b.j_value,
            lambda1_reference,
            sharp,
        }
    }
}

impl TryFrom<BundleReportWire> for BundleReport {
    type Error = String;

    fn try_from(w: BundleReportWire) -> std::result::Result<Self, String> {
        let space = HermitianSpace::try_from(HermitianSpaceWire {
            ambient: w.ambient,
            node: w.node,
            family: w.family,
            klein_label: w.klein_label,
        })?;
        let report = BundleReport {
            space,
            lam: w.weight,
            rank: w.rank,
            h0: w.h0,
            xi_k_lam: w.xi_k,
            xi_k_ad: w.xi_k_ad,
            c1_ratio: w.c1_ratio,
            j_value: w.j,
        };
        if report.lambda1_reference() != w.lambda1_reference || report.sharp() != w.sharp {
            return Err("lambda1_reference/sharp inconsistent with the report".into());
        }
        Ok(report)
    }
}

/// Root data, Levi data and `ξ_k(λ_ad)` for one Hermitian space, built once
/// and reused across many weights.
#[derive(Debug, Clone)]
pub struct BundleCalculator {
    space: HermitianSpace,
    rs: RootSystem,
    levi: LeviData,
    xi_ad: Rational,
}

impl BundleCalculator {
    pub fn new(space: HermitianSpace) -> Self {
        let rs = RootSystem::build(space.ambient);
        let levi = levi(&rs, &space.parabolic()).expect("maximal parabolic of the right type");
        let xi_ad = rs.xi_unchecked(&rs.highest_root_fw(), space.node);
        BundleCalculator {
            space,
            rs,
            levi,
            xi_ad,
        }
    }

    pub fn space(&self) -> &HermitianSpace {
        &self.space
    }

    pub fn root_system(&self) -> &RootSystem {
        &self.rs
    }

    pub fn levi(&self) -> &LeviData {
        &self.levi
    }

    pub fn xi_ad(&self) -> &Rational {
        &self.xi_ad
    }

    /// `ξ_k(λ)`.
    pub fn xi(&self, lam: &Weight) -> Rational {
        self.rs.xi_unchecked(lam, self.space.node)
    }

    /// Report for any weight dominant for the parabolic; `j_value` is `None`
    /// when `E_λ` has no more sections than its rank.
    pub fn report(&self, lam: &Weight) -> Result<BundleReport> {
        let p = self.space.parabolic();
        check_parabolic(&self.rs, &p, lam)?;
        let rank = weyl_dim_levi(&self.rs, &self.levi, lam)?.value;
        let h0 = h0_bbw(&self.rs, &p, lam)?;
        let xi_k_lam = self.xi(lam);
        let c1_ratio = c1_ratio_with(&self.rs, &self.levi, self.space.node, lam)?;
        let j_value = (h0 > rank).then(|| {
            let w = Rational::from(BigInt::from(h0.clone()));
            let v = Rational::from(BigInt::from(rank.clone()));
            Rational::from(2) * w.clone() / (w - v) * xi_k_lam.clone() / self.xi_ad.clone()
        });
        Ok(BundleReport {
            space: self.space.clone(),
            lam: lam.clone(),
            rank,
            h0,
            xi_k_lam,
            xi_k_ad: self.xi_ad.clone(),
            c1_ratio,
            j_value,
        })
    }

    /// `J(E_λ, −K_X)` for a nontrivial weight dominant for `G`.
    pub fn j_hom(&self, lam: &Weight) -> Result<BundleReport> {
        self.rs.check_weight(lam)?;
        if lam.is_zero() {
            return Err(Error::TrivialWeight);
        }
        if !lam.is_dominant() {
            if !self.space.parabolic().is_dominant_for(lam) {
                return Err(Error::NotParabolicDominant(lam.to_string()));
            }
            return Err(Error::VanishingSections(lam.to_string()));
        }
        let report = self.report(lam)?;
        assert!(report.h0 > report.rank, "W_λ ⊋ V_λ for nontrivial dominant λ");
        Ok(report)
    }
}

/// `J(E_λ, −K_X)`; see [`BundleCalculator::j_hom`].
pub fn j_hom(space: &HermitianSpace, lam: &Weight) -> Result<BundleReport> {
    BundleCalculator::new(space.clone()).j_hom(lam)
}
