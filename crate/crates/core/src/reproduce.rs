//! Every reference result, recomputed: the classification table,
//! the classical witnesses with `J = 2`, and the exceptional searches.

use serde::{Deserialize, Serialize};

use crate::error::Result;
use crate::invariants::{hermitian_table, BundleCalculator, BundleReport, HermitianSpace, LAMBDA1_KE};
use crate::rational::Rational;
use crate::root_system::{Letter, SimpleType, Weight};
use crate::text::{decimal, TextTable};
use crate::weight_search::{minimize_j, SearchOutcome};

pub const TABLE_RANK_BOUND: usize = 8;

/// Representative instances for the classical table: type letter, ranks,
/// crossed node (`None` means every node).
const CLASSICAL: [(Letter, std::ops::RangeInclusive<usize>, Option<usize>); 5] = [
    (Letter::A, 1..=5, None),
    (Letter::B, 2..=6, Some(1)),
    (Letter::D, 3..=6, Some(1)),
    (Letter::C, 2..=6, Some(0)),
    (Letter::D, 4..=7, Some(0)),
];

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassicalRow {
    pub report: BundleReport,
    pub best_j: Rational,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ExceptionalBlock {
    pub space: HermitianSpace,
    pub highest_root: Weight,
    /// Bundles singled out in the analysis (the fundamental weights whose
    /// lower bound is below the optimum's `J`).
    pub named: Vec<BundleReport>,
    pub search: SearchOutcome,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PaperResults {
    pub table_rank_bound: usize,
    pub hermitian_table: Vec<HermitianSpace>,
    pub classical: Vec<ClassicalRow>,
    pub exceptional: Vec<ExceptionalBlock>,
    pub lambda1_reference: Rational,
}

fn classical_spaces() -> Vec<HermitianSpace> {
    let mut out = Vec::new();
    for (letter, ranks, node) in CLASSICAL {
        for rank in ranks {
            let t = SimpleType::new(letter, rank).unwrap();
            let nodes: Vec<usize> = match node {
                None => (1..=rank).collect(),
                Some(0) => vec![rank],
                Some(k) => vec![k],
            };
            out.extend(nodes.into_iter().map(|k| HermitianSpace::new(t, k).unwrap()));
        }
    }
    out
}

fn exceptional_block(ambient: &str, node: usize, named: &[usize]) -> Result<ExceptionalBlock> {
    let space = HermitianSpace::new(ambient.parse()?, node)?;
    let calc = BundleCalculator::new(space.clone());
    let rank = space.ambient().rank();
    let named = named
        .iter()
        .map(|&i| calc.j_hom(&Weight::fundamental(rank, i)))
        .collect::<Result<Vec<_>>>()?;
    Ok(ExceptionalBlock {
        highest_root: calc.root_system().highest_root_fw(),
        search: minimize_j(&space)?,
        space,
        named,
    })
}

pub fn paper_results() -> Result<PaperResults> {
    let classical = classical_spaces()
        .into_iter()
        .map(|space| {
            let witness = space.classical_witness().expect("classical family");
            let report = BundleCalculator::new(space.clone()).j_hom(&witness)?;
            let best_j = minimize_j(&space)?.best_j;
            Ok(ClassicalRow { report, best_j })
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(PaperResults {
        table_rank_bound: TABLE_RANK_BOUND,
        hermitian_table: hermitian_table(TABLE_RANK_BOUND),
        classical,
        exceptional: vec![
            exceptional_block("E6", 1, &[6, 2])?,
            exceptional_block("E7", 7, &[1])?,
        ],
        lambda1_reference: Rational::from(LAMBDA1_KE),
    })
}

fn fmt_weight(w: &Weight) -> String {
    let terms: Vec<String> = w
        .coords()
        .iter()
        .enumerate()
        .filter(|(_, &a)| a != 0)
        .map(|(i, &a)| {
            let sub: String = (i + 1)
                .to_string()
                .chars()
                .map(|c| char::from_u32('₀' as u32 + c.to_digit(10).unwrap()).unwrap())
                .collect();
            if a == 1 {
                format!("ϖ{sub}")
            } else {
                format!("{a}ϖ{sub}")
            }
        })
        .collect();
    if terms.is_empty() {
        "0".into()
    } else {
        terms.join("+")
    }
}

fn fmt_vector(v: &[Rational]) -> String {
    let parts: Vec<String> = v.iter().map(Rational::to_string).collect();
    format!("({})", parts.join(", "))
}

fn with_decimal(cells: &mut Vec<String>, value: &Rational, decimals: bool) {
    if decimals {
        cells.push(format!("≈{}", decimal(value)));
    }
}

impl PaperResults {
    pub fn render_text(&self, decimals: bool) -> String {
        let mut out = String::new();
        out.push_str(&format!(
            "Irreducible compact Hermitian symmetric spaces G/P(α_k), rank ≤ {}\n\n",
            self.table_rank_bound
        ));
        let mut t = TextTable::new(["family", "description", "type", "node", "Klein form"]);
        for s in &self.hermitian_table {
            t.push([
                s.family().to_string(),
                s.family().description().to_string(),
                s.ambient().to_string(),
                s.node().to_string(),
                s.klein_label().to_string(),
            ]);
        }
        out.push_str(&t.render());

        out.push_str("\nClassical families: homogeneous bundles with J(E_λ, −K_X) = 2\n\n");
        let mut header: Vec<&str> = vec!["family", "space", "λ", "rank", "h⁰", "ξ_k(λ)", "J"];
        if decimals {
            header.push("J (decimal, non-authoritative)");
        }
        header.extend(["min J", "sharp"]);
        let mut t = TextTable::new(header);
        for row in &self.classical {
            let r = &row.report;
            let j = r.j_value.clone().expect("classical witnesses have J");
            let mut cells = vec![
                r.space.family().to_string(),
                r.space.klein_label().to_string(),
                fmt_weight(&r.lam),
                r.rank.to_string(),
                r.h0.to_string(),
                r.xi_k_lam.to_string(),
                j.to_string(),
            ];
            with_decimal(&mut cells, &j, decimals);
            cells.push(row.best_j.to_string());
            cells.push(if r.sharp() { "yes" } else { "no" }.to_string());
            t.push(cells);
        }
        out.push_str(&t.render());

        for block in &self.exceptional {
            let s = &block.space;
            out.push_str(&format!(
                "\n{} = {} ({}), Bourbaki numbering\n\n",
                s.family(),
                s.klein_label(),
                s.family().description()
            ));
            out.push_str(&format!("  highest root λ_ad = {}\n", fmt_weight(&block.highest_root)));
            out.push_str(&format!(
                "  lower bound J(E_λ, −K_X) ≥ 2 ξ_{k}(λ)/ξ_{k}(λ_ad) = Σ cᵢ aᵢ with c = {}\n\n",
                fmt_vector(&block.search.pruning_coefficients),
                k = s.node()
            ));
            let mut header = vec!["λ", "rank", "h⁰", "ξ_k(λ)", "lower bound", "J"];
            if decimals {
                header.push("J (decimal, non-authoritative)");
            }
            let mut t = TextTable::new(header);
            for r in &block.named {
                let j = r.j_value.clone().expect("named bundles have J");
                let mut cells = vec![
                    fmt_weight(&r.lam),
                    r.rank.to_string(),
                    r.h0.to_string(),
                    r.xi_k_lam.to_string(),
                    r.pruning_bound().to_string(),
                    j.to_string(),
                ];
                with_decimal(&mut cells, &j, decimals);
                t.push(cells);
            }
            out.push_str(&t.render());
            let search = &block.search;
            let minimizers: Vec<String> = search.minimizers.iter().map(fmt_weight).collect();
            out.push_str(&format!(
                "\n  exact search: min J = {} at {{{}}}; {} candidates examined; \
                 every other dominant λ has lower bound ≥ {}\n",
                search.best_j,
                minimizers.join(", "),
                search.candidates_examined,
                search.pruning_bound_used
            ));
        }
        out.push_str(&format!(
            "\nReference: λ₁ of the symmetric Kähler–Einstein metric = {}. \
             Bounds are the best over irreducible homogeneous bundles; \
             sharpness is claimed only where J = {}.\n",
            self.lambda1_reference, self.lambda1_reference
        ));
        out
    }
}
