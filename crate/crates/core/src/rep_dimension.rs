//! Dimensions of irreducible representations.
//!
//! [`weyl_dim_g`] and [`weyl_dim_levi`] evaluate the Weyl dimension formula
//! over `Δ₊` and over the Levi roots respectively. [`freudenthal_dim`] sums
//! weight multiplicities from Freudenthal's recursion and shares no code
//! with the Weyl product beyond the root data, so the two serve as
//! independent checks on each other.

use std::collections::HashMap;

use num_bigint::{BigInt, BigUint};
use num_traits::{Signed, ToPrimitive};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::parabolic::LeviData;
use crate::rational::Rational;
use crate::root_system::{Root, RootSystem, Weight};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum DimContext {
    FullGroup,
    Levi,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DimResult {
    pub value: BigUint,
    pub context: DimContext,
    pub lam: Weight,
}

/// Largest rank accepted by [`freudenthal_dim`].
pub const FREUDENTHAL_MAX_RANK: usize = 7;
/// Largest dimension [`freudenthal_dim`] will accumulate before giving up.
pub const FREUDENTHAL_MAX_DIM: u64 = 100_000;

/// `∏ ⟨λ + ρ', α^∨⟩ / ⟨ρ', α^∨⟩` over `roots`.
fn weyl_product<'a>(
    rs: &RootSystem,
    roots: impl Iterator<Item = &'a Root>,
    lam: &Weight,
    rho: &Weight,
) -> BigUint {
    let shifted = lam + rho;
    let product: Rational = roots
        .map(|alpha| rs.coroot_pairing(&shifted, alpha) / rs.coroot_pairing(rho, alpha))
        .product();
    let value = product
        .to_integer()
        .unwrap_or_else(|| panic!("Weyl product for {lam} is not an integer: {product}"));
    value
        .to_biguint()
        .unwrap_or_else(|| panic!("Weyl product for {lam} is negative: {value}"))
}

/// `dim W_λ` for `λ` dominant for `G`.
pub fn weyl_dim_g(rs: &RootSystem, lam: &Weight) -> Result<DimResult> {
    rs.check_weight(lam)?;
    if !lam.is_dominant() {
        return Err(Error::NotDominant(lam.to_string()));
    }
    Ok(DimResult {
        value: weyl_product(rs, rs.positive_roots().iter(), lam, &rs.rho()),
        context: DimContext::FullGroup,
        lam: lam.clone(),
    })
}

/// `dim V_λ`, the irreducible `P(Σ)`-representation with highest weight `λ`.
///
/// The Levi half-sum is replaced by `ρ_L = Σ_{i∉Σ} ϖᵢ`, which pairs with every
/// Levi coroot exactly as the intrinsic one does. The coefficients of `λ` on
/// crossed nodes pair to zero with Levi coroots and so drop out.
pub fn weyl_dim_levi(rs: &RootSystem, ld: &LeviData, lam: &Weight) -> Result<DimResult> {
    rs.check_weight(lam)?;
    let p = ld.parabolic();
    if !p.is_dominant_for(lam) {
        return Err(Error::NotParabolicDominant(lam.to_string()));
    }
    let mut rho_l = vec![1; rs.rank()];
    for &k in p.sigma() {
        rho_l[k - 1] = 0;
    }
    Ok(DimResult {
        value: weyl_product(rs, ld.levi_positive_roots().iter(), lam, &Weight::new(rho_l)),
        context: DimContext::Levi,
        lam: lam.clone(),
    })
}

/// `dim W_λ` as the sum of all weight multiplicities, each obtained from
/// Freudenthal's formula
///
/// `(|λ+ρ|² − |μ+ρ|²) m(μ) = 2 Σ_{α>0} Σ_{j≥1} m(μ+jα) (μ+jα, α)`.
///
/// Weights are visited level by level in depth below `λ`; every weight other
/// than `λ` is reachable from a weight one level up by subtracting a simple
/// root.
pub fn freudenthal_dim(rs: &RootSystem, lam: &Weight) -> Result<DimResult> {
    rs.check_weight(lam)?;
    if !lam.is_dominant() {
        return Err(Error::NotDominant(lam.to_string()));
    }
    if rs.rank() > FREUDENTHAL_MAX_RANK {
        return Err(Error::GuardExceeded(format!(
            "rank {} exceeds {FREUDENTHAL_MAX_RANK}",
            rs.rank()
        )));
    }
    let l = rs.rank();
    let form = IntegerForm::new(rs);
    let simple: Vec<Vec<i64>> = (0..l).map(|i| rs.cartan().iter().map(|row| row[i]).collect()).collect();
    let roots: Vec<(Vec<i64>, i64)> = rs
        .positive_roots()
        .iter()
        .map(|a| (rs.root_to_weight(a.coeffs()).coords().to_vec(), a.height()))
        .collect();

    let rho = vec![1i64; l];
    let shift = |w: &[i64]| w.iter().zip(&rho).map(|(a, b)| a + b).collect::<Vec<_>>();
    let top = lam.coords().to_vec();
    let top_norm = form.norm(&shift(&top))?;

    let mut mult: HashMap<Vec<i64>, (i64, BigInt)> = HashMap::new();
    mult.insert(top.clone(), (0, BigInt::from(1)));
    let mut total = BigInt::from(1);
    let mut level = vec![top];
    let mut depth = 0i64;
    while !level.is_empty() {
        depth += 1;
        let mut candidates: Vec<Vec<i64>> = level
            .iter()
            .flat_map(|nu| {
                simple
                    .iter()
                    .map(move |s| nu.iter().zip(s).map(|(a, b)| a - b).collect::<Vec<_>>())
            })
            .collect();
        candidates.sort();
        candidates.dedup();

        let mut next = Vec::new();
        for mu in candidates {
            let den = top_norm - form.norm(&shift(&mu))?;
            let mut num = BigInt::from(0);
            for (alpha, height) in &roots {
                let mut j = 1;
                while j * height <= depth {
                    let up: Vec<i64> = mu.iter().zip(alpha).map(|(m, a)| m + j * a).collect();
                    if let Some((_, m)) = mult.get(&up) {
                        num += m * BigInt::from(form.pair(&up, alpha)?);
                    }
                    j += 1;
                }
            }
            num *= 2;
            if den == 0 {
                debug_assert!(num == BigInt::from(0), "Freudenthal identity violated at {mu:?}");
                continue;
            }
            let den = BigInt::from(den);
            assert!(
                (&num % &den) == BigInt::from(0),
                "Freudenthal quotient is not integral at {mu:?}"
            );
            let m = num / den;
            assert!(!m.is_negative(), "negative multiplicity at {mu:?}");
            if m == BigInt::from(0) {
                continue;
            }
            total += &m;
            if total > BigInt::from(FREUDENTHAL_MAX_DIM) {
                return Err(Error::GuardExceeded(format!(
                    "dimension of {lam} exceeds {FREUDENTHAL_MAX_DIM}"
                )));
            }
            mult.insert(mu.clone(), (depth, m));
            next.push(mu);
        }
        level = next;
    }
    Ok(DimResult {
        value: total.to_biguint().expect("dimension is positive"),
        context: DimContext::FullGroup,
        lam: lam.clone(),
    })
}

/// The invariant form on fundamental-weight coordinates, scaled to integers.
struct IntegerForm {
    gram: Vec<Vec<i64>>,
}

impl IntegerForm {
    fn new(rs: &RootSystem) -> Self {
        let l = rs.rank();
        let entries: Vec<Vec<Rational>> = (0..l)
            .map(|i| {
                (0..l)
                    .map(|j| rs.weight_form(&Weight::fundamental(l, i + 1), &Weight::fundamental(l, j + 1)))
                    .collect()
            })
            .collect();
        let lcm = entries
            .iter()
            .flatten()
            .fold(BigInt::from(1), |acc, r| num_integer::lcm(acc, r.denom().clone()));
        let scale = Rational::from(lcm);
        let gram = entries
            .iter()
            .map(|row| {
                row.iter()
                    .map(|r| (r * &scale).to_integer().unwrap().to_i64().expect("small Gram entries"))
                    .collect()
            })
            .collect();
        IntegerForm { gram }
    }

    fn pair(&self, x: &[i64], y: &[i64]) -> Result<i64> {
        let overflow = || Error::GuardExceeded("integer overflow in the invariant form".into());
        let mut acc: i64 = 0;
        for (i, &a) in x.iter().enumerate() {
            if a == 0 {
                continue;
            }
            for (j, &b) in y.iter().enumerate() {
                let t = a
                    .checked_mul(b)
                    .and_then(|t| t.checked_mul(self.gram[i][j]))
                    .ok_or_else(overflow)?;
                acc = acc.checked_add(t).ok_or_else(overflow)?;
            }
        }
        Ok(acc)
    }

    fn norm(&self, x: &[i64]) -> Result<i64> {
        self.pair(x, x)
    }
}
