//! Exact minimisation of `J(E_λ, −K_X)` over nontrivial dominant weights.
//!
//! `J(E_λ, −K_X) > 2 ξ_k(λ)/ξ_k(λ_ad)` holds strictly for every nontrivial
//! dominant `λ` (the prefactor `2W/(W − V)` exceeds 2). The right-hand side is
//! linear in `λ` with positive coefficients, so once an incumbent value `B` is
//! known only the finitely many `λ` with `2 ξ_k(λ)/ξ_k(λ_ad) < B` can beat or
//! tie it. Candidates are visited in increasing order of that bound, which
//! lets the scan stop at the first one whose bound reaches the incumbent.

use serde::{Deserialize, Serialize};

use crate::error::Result;
use crate::invariants::{BundleCalculator, HermitianSpace};
use crate::rational::Rational;
use crate::root_system::Weight;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Candidate {
    pub weight: Weight,
    pub j: Rational,
}

/// Best homogeneous-bundle bound for one Hermitian space, with the data
/// needed to check it.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SearchOutcome {
    pub space: HermitianSpace,
    pub best_j: Rational,
    /// Every weight attaining `best_j`, in lexicographic order.
    pub minimizers: Vec<Weight>,
    pub candidates_examined: usize,
    /// Every weight not in `examined` has `2 ξ_k(λ)/ξ_k(λ_ad) ≥` this value.
    pub pruning_bound_used: Rational,
    pub incumbent_seed: Weight,
    /// `2 ξ_k(ϖᵢ)/ξ_k(λ_ad)` for each node `i`.
    pub pruning_coefficients: Vec<Rational>,
    /// Evaluated weights in evaluation order.
    pub examined: Vec<Candidate>,
}

impl SearchOutcome {
    /// The linear lower bound `2 ξ_k(λ)/ξ_k(λ_ad)` for `J(E_λ, −K_X)`.
    pub fn lower_bound(&self, lam: &Weight) -> Rational {
        self.pruning_coefficients
            .iter()
            .zip(lam.coords())
            .filter(|(_, &a)| a != 0)
            .map(|(c, &a)| c * &Rational::from(a))
            .sum()
    }

    pub fn was_examined(&self, lam: &Weight) -> bool {
        self.examined.iter().any(|c| &c.weight == lam)
    }

    /// True when `lam` is either examined or excluded by the certificate.
    pub fn certifies(&self, lam: &Weight) -> bool {
        self.was_examined(lam) || self.lower_bound(lam) >= self.pruning_bound_used
    }
}

struct Search<'a> {
    calc: &'a BundleCalculator,
    coefficients: Vec<Rational>,
    examined: Vec<Candidate>,
}

impl<'a> Search<'a> {
    fn new(calc: &'a BundleCalculator) -> Self {
        let rs = calc.root_system();
        let two = Rational::from(2);
        let coefficients = (1..=rs.rank())
            .map(|i| &two * &calc.xi(&Weight::fundamental(rs.rank(), i)) / calc.xi_ad().clone())
            .collect::<Vec<_>>();
        assert!(
            coefficients.iter().all(Rational::is_positive),
            "inverse Cartan entries are positive"
        );
        Search {
            calc,
            coefficients,
            examined: Vec::new(),
        }
    }

    fn evaluate(&mut self, lam: &Weight) -> Result<Rational> {
        if let Some(c) = self.examined.iter().find(|c| &c.weight == lam) {
            return Ok(c.j.clone());
        }
        let j = self
            .calc
            .j_hom(lam)?
            .j_value
            .expect("J is defined for nontrivial dominant weights");
        self.examined.push(Candidate {
            weight: lam.clone(),
            j: j.clone(),
        });
        Ok(j)
    }

    /// All nonzero dominant weights whose bound is `< limit`, sorted by
    /// bound then coordinates.
    fn region(&self, limit: &Rational) -> Vec<(Rational, Weight)> {
        fn walk(
            coefficients: &[Rational],
            limit: &Rational,
            i: usize,
            partial: Rational,
            coords: &mut Vec<i64>,
            out: &mut Vec<(Rational, Weight)>,
        ) {
            if i == coefficients.len() {
                if coords.iter().any(|&a| a != 0) {
                    out.push((partial, Weight::new(coords.clone())));
                }
                return;
            }
            let mut value = partial;
            let mut a = 0;
            while &value < limit {
                coords.push(a);
                walk(coefficients, limit, i + 1, value.clone(), coords, out);
                coords.pop();
                value = value + coefficients[i].clone();
                a += 1;
            }
        }
        let mut out = Vec::new();
        walk(&self.coefficients, limit, 0, Rational::zero(), &mut Vec::new(), &mut out);
        out.sort();
        out
    }

    fn run(mut self, seed: Weight, seed_j: Rational) -> Result<SearchOutcome> {
        let mut best = seed_j;
        for (bound, lam) in self.region(&best.clone()) {
            if bound >= best {
                break;
            }
            let j = self.evaluate(&lam)?;
            if j < best {
                best = j;
            }
        }
        let mut minimizers: Vec<Weight> = self
            .examined
            .iter()
            .filter(|c| c.j == best)
            .map(|c| c.weight.clone())
            .collect();
        minimizers.sort();
        Ok(SearchOutcome {
            space: self.calc.space().clone(),
            best_j: best.clone(),
            minimizers,
            candidates_examined: self.examined.len(),
            pruning_bound_used: best,
            incumbent_seed: seed,
            pruning_coefficients: self.coefficients,
            examined: self.examined,
        })
    }
}

/// Exact minimum of `J(E_λ, −K_X)` over all nontrivial dominant `λ`, seeded
/// with the best fundamental weight.
pub fn minimize_j(space: &HermitianSpace) -> Result<SearchOutcome> {
    let calc = BundleCalculator::new(space.clone());
    let mut search = Search::new(&calc);
    let rank = calc.root_system().rank();
    let mut seed: Option<(Weight, Rational)> = None;
    for i in 1..=rank {
        let w = Weight::fundamental(rank, i);
        let j = search.evaluate(&w)?;
        if seed.as_ref().is_none_or(|(_, b)| &j < b) {
            seed = Some((w, j));
        }
    }
    let (seed, seed_j) = seed.expect("rank ≥ 1");
    search.run(seed, seed_j)
}

/// Same search, with the incumbent taken from `seed` instead of the
/// fundamental weights.
pub fn minimize_j_from(space: &HermitianSpace, seed: &Weight) -> Result<SearchOutcome> {
    let calc = BundleCalculator::new(space.clone());
    let mut search = Search::new(&calc);
    let seed_j = search.evaluate(seed)?;
    search.run(seed.clone(), seed_j)
}
