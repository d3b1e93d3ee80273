//! Parabolic subalgebras `p(Σ)` and their Levi factors.
//!
//! A parabolic is named by its crossed nodes `Σ`; the Levi factor is spanned
//! by the roots supported on the uncrossed nodes `Π − Σ`.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::root_system::{Letter, Root, RootSystem, SimpleType, Weight};

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Parabolic {
    ambient: SimpleType,
    sigma: Vec<usize>,
}

impl Parabolic {
    /// `sigma` holds 1-based node labels; duplicates are ignored.
    pub fn new(ambient: SimpleType, sigma: impl IntoIterator<Item = usize>) -> Result<Self> {
        let mut sigma: Vec<usize> = sigma.into_iter().collect();
        sigma.sort_unstable();
        sigma.dedup();
        if sigma.is_empty() {
            return Err(Error::EmptySigma);
        }
        if let Some(&bad) = sigma.iter().find(|&&k| k == 0 || k > ambient.rank()) {
            return Err(Error::NodeOutOfRange {
                node: bad,
                rank: ambient.rank(),
            });
        }
        Ok(Parabolic { ambient, sigma })
    }

    /// The maximal parabolic `P(α_k)`.
    pub fn maximal(ambient: SimpleType, k: usize) -> Result<Self> {
        Parabolic::new(ambient, [k])
    }

    pub fn ambient(&self) -> SimpleType {
        self.ambient
    }

    pub fn sigma(&self) -> &[usize] {
        &self.sigma
    }

    pub fn is_maximal(&self) -> bool {
        self.sigma.len() == 1
    }

    /// The crossed node of a maximal parabolic.
    pub fn node(&self) -> Result<usize> {
        if self.is_maximal() {
            Ok(self.sigma[0])
        } else {
            Err(Error::NotMaximal(self.sigma.len()))
        }
    }

    /// Uncrossed nodes `Π − Σ`.
    pub fn levi_nodes(&self) -> Vec<usize> {
        (1..=self.ambient.rank())
            .filter(|k| !self.sigma.contains(k))
            .collect()
    }

    /// `aᵢ ≥ 0` for every uncrossed node `i`.
    pub fn is_dominant_for(&self, lam: &Weight) -> bool {
        lam.coords()
            .iter()
            .enumerate()
            .all(|(i, &a)| a >= 0 || self.sigma.contains(&(i + 1)))
    }
}

impl fmt::Display for Parabolic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:", self.ambient)?;
        for (i, k) in self.sigma.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "x{k}")?;
        }
        Ok(())
    }
}

/// Crossed-node notation: `"E6:x1"`, `"A5:x2,x4"` (the `x` is optional after
/// the first node).
impl FromStr for Parabolic {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::BadTypeName(s.to_string());
        let (ty, nodes) = s.split_once(':').ok_or_else(bad)?;
        let ambient: SimpleType = ty.parse()?;
        let sigma = nodes
            .split(',')
            .map(|n| n.trim().trim_start_matches('x').parse::<usize>().map_err(|_| bad()))
            .collect::<Result<Vec<_>>>()?;
        Parabolic::new(ambient, sigma)
    }
}

/// `λ` is dominant for `G` when every coefficient is non-negative.
pub fn is_dominant_for_g(lam: &Weight) -> bool {
    lam.is_dominant()
}

/// A simple factor of the Levi: `nodes[i]` is the ambient node that plays
/// the role of node `i + 1` in the Bourbaki numbering of `simple_type`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct LeviComponent {
    pub simple_type: SimpleType,
    pub nodes: Vec<usize>,
}

#[derive(Debug, Clone)]
pub struct LeviData {
    parabolic: Parabolic,
    levi_positive_roots: Vec<Root>,
    components: Vec<LeviComponent>,
    dim_x: usize,
}

impl LeviData {
    pub fn parabolic(&self) -> &Parabolic {
        &self.parabolic
    }

    pub fn levi_positive_roots(&self) -> &[Root] {
        &self.levi_positive_roots
    }

    pub fn components(&self) -> &[LeviComponent] {
        &self.components
    }

    /// `dim G/P(Σ) = |Δ₊| − |Δ₊(Levi)|`.
    pub fn dim_x(&self) -> usize {
        self.dim_x
    }
}

pub fn levi(rs: &RootSystem, p: &Parabolic) -> Result<LeviData> {
    if p.ambient() != rs.simple_type() {
        return Err(Error::TypeMismatch {
            parabolic: p.ambient(),
            root_system: rs.simple_type(),
        });
    }
    let nodes = p.levi_nodes();
    let levi_positive_roots: Vec<Root> = rs
        .positive_roots()
        .iter()
        .filter(|a| a.supported_on(&nodes))
        .cloned()
        .collect();
    let components = connected_components(rs.cartan(), &nodes)
        .into_iter()
        .map(|comp| identify(rs.cartan(), &comp))
        .collect();
    Ok(LeviData {
        parabolic: p.clone(),
        dim_x: rs.positive_roots().len() - levi_positive_roots.len(),
        levi_positive_roots,
        components,
    })
}

/// Components of the Dynkin subdiagram on `nodes`, each sorted, ordered by
/// smallest node.
fn connected_components(cartan: &[Vec<i64>], nodes: &[usize]) -> Vec<Vec<usize>> {
    let mut seen = vec![false; cartan.len() + 1];
    let mut out = Vec::new();
    for &start in nodes {
        if seen[start] {
            continue;
        }
        seen[start] = true;
        let mut comp = vec![start];
        let mut stack = vec![start];
        while let Some(i) = stack.pop() {
            for &j in nodes {
                if !seen[j] && cartan[i - 1][j - 1] != 0 {
                    seen[j] = true;
                    comp.push(j);
                    stack.push(j);
                }
            }
        }
        comp.sort_unstable();
        out.push(comp);
    }
    out
}

/// Matches the induced Cartan submatrix against each type of the same rank,
/// in letter order, so coincidences such as `A3 = D3` and `B2 = C2` resolve
/// to the earlier letter.
fn identify(cartan: &[Vec<i64>], comp: &[usize]) -> LeviComponent {
    let r = comp.len();
    for letter in Letter::ALL {
        let Ok(t) = SimpleType::new(letter, r) else {
            continue;
        };
        let target = t.cartan_matrix();
        let mut assign = Vec::with_capacity(r);
        let mut used = vec![false; r];
        if match_nodes(cartan, comp, &target, &mut assign, &mut used) {
            return LeviComponent {
                simple_type: t,
                nodes: assign.iter().map(|&i| comp[i]).collect(),
            };
        }
    }
    unreachable!("every connected Dynkin subdiagram is of finite type")
}

fn match_nodes(
    cartan: &[Vec<i64>],
    comp: &[usize],
    target: &[Vec<i64>],
    assign: &mut Vec<usize>,
    used: &mut [bool],
) -> bool {
    let a = assign.len();
    if a == comp.len() {
        return true;
    }
    for cand in 0..comp.len() {
        if used[cand] {
            continue;
        }
        let ok = (0..a).all(|b| {
            let (x, y) = (comp[cand] - 1, comp[assign[b]] - 1);
            cartan[x][y] == target[a][b] && cartan[y][x] == target[b][a]
        });
        if ok {
            used[cand] = true;
            assign.push(cand);
            if match_nodes(cartan, comp, target, assign, used) {
                return true;
            }
            assign.pop();
            used[cand] = false;
        }
    }
    false
}
