//! Command-line front end for `hsym-core`.
//!
//! Exit codes: 0 on success, 2 for malformed or invalid input, 3 when the
//! input is valid but the requested formula does not apply (non-Hermitian
//! space, trivial weight, vanishing sections).

use std::io::{self, Write};

use clap::{Parser, Subcommand, ValueEnum};
use hsym_core::invariants::{hermitian_table, h0_bbw};
use hsym_core::parabolic::{levi, LeviComponent};
use hsym_core::rep_dimension::{weyl_dim_g, weyl_dim_levi, DimContext};
use hsym_core::reproduce::paper_results;
use hsym_core::text::{decimal, TextTable};
use hsym_core::weight_search::minimize_j;
use hsym_core::{
    BundleCalculator, BundleReport, ErrorKind, HermitianSpace, Parabolic, Rational, RootSystem, SearchOutcome,
    SimpleType, Weight,
};
use num_bigint::BigUint;
use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Table,
    Json,
}

#[derive(Debug, Parser)]
#[command(name = "hsym", version, about = "Exact invariants of homogeneous bundles on Hermitian symmetric spaces")]
pub struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Table)]
    pub format: Format,
    /// Add a 6-significant-digit approximation next to rationals (tables only).
    #[arg(long, global = true)]
    pub decimal: bool,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Cartan data and positive roots of a simple type, e.g. `E6`.
    Roots { space: String },
    /// Levi decomposition of p(Σ); SPACE may carry the crossed nodes, as in `E6:x1`.
    Levi {
        space: String,
        #[arg(long, value_delimiter = ',')]
        sigma: Vec<usize>,
    },
    /// Dimension of W_λ, or of V_λ for the maximal parabolic at --levi-node.
    Dim {
        space: String,
        #[arg(long, allow_hyphen_values = true)]
        weight: String,
        #[arg(long)]
        levi_node: Option<usize>,
    },
    /// h⁰(X, E_λ) on X = G/P(α_k) by Bott–Borel–Weil.
    H0 {
        space: String,
        #[arg(long)]
        node: Option<usize>,
        #[arg(long, allow_hyphen_values = true)]
        weight: String,
    },
    /// J(E_λ, −K_X) and the full bundle report.
    J {
        space: String,
        #[arg(long)]
        node: Option<usize>,
        #[arg(long, allow_hyphen_values = true)]
        weight: String,
    },
    /// Exact minimum of J(E_λ, −K_X) over nontrivial dominant weights.
    Search {
        space: String,
        #[arg(long)]
        node: Option<usize>,
    },
    /// The classification of compact irreducible Hermitian symmetric spaces.
    Hermitian {
        #[arg(long, default_value_t = 8)]
        max_rank: usize,
    },
    /// Recompute every reference value in one report.
    ReproducePaper,
}

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{0}")]
    Core(#[from] hsym_core::Error),
    #[error("{0}")]
    Usage(String),
    #[error("{0}")]
    Io(#[from] io::Error),
    #[error("{0}")]
    Json(#[from] serde_json::Error),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Core(e) => match e.kind() {
                ErrorKind::Input => 2,
                ErrorKind::Domain | ErrorKind::Resource => 3,
            },
            CliError::Usage(_) => 2,
            CliError::Io(_) | CliError::Json(_) => 1,
        }
    }
}

pub type CliResult<T> = Result<T, CliError>;

/// `"E6"` or `"E6:x1,x3"`.
fn parse_space(s: &str) -> CliResult<(SimpleType, Vec<usize>)> {
    match s.split_once(':') {
        Some(_) => {
            let p: Parabolic = s.parse()?;
            Ok((p.ambient(), p.sigma().to_vec()))
        }
        None => Ok((s.parse()?, Vec::new())),
    }
}

fn single_node(space: &str, flag: Option<usize>) -> CliResult<(SimpleType, usize)> {
    let (t, crossed) = parse_space(space)?;
    match (crossed.as_slice(), flag) {
        ([], Some(k)) => Ok((t, k)),
        ([k], None) => Ok((t, *k)),
        ([k], Some(f)) if *k == f => Ok((t, f)),
        ([], None) => Err(CliError::Usage(format!(
            "no crossed node: pass --node k or write the space as {t}:xk"
        ))),
        _ => Err(CliError::Usage(format!(
            "expected exactly one crossed node, got {space:?} with --node {flag:?}"
        ))),
    }
}

pub fn parse_weight(s: &str, rank: usize) -> CliResult<Weight> {
    let coords = s
        .split(',')
        .map(|a| a.trim().parse::<i64>())
        .collect::<Result<Vec<_>, _>>()
        .map_err(|_| CliError::Usage(format!("cannot parse weight {s:?}: expected integers a1,a2,…")))?;
    if coords.len() != rank {
        return Err(hsym_core::Error::WeightLength {
            expected: rank,
            got: coords.len(),
        }
        .into());
    }
    Ok(Weight::new(coords))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RootEntry {
    pub coeffs: Vec<i64>,
    pub height: i64,
    pub length_sq: i64,
    pub weight: Weight,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RootsOutput {
    #[serde(rename = "type")]
    pub simple_type: SimpleType,
    pub cartan: Vec<Vec<i64>>,
    pub symmetrizer: Vec<i64>,
    pub cartan_inverse: Vec<Vec<Rational>>,
    pub rho: Weight,
    pub highest_root: Vec<i64>,
    pub highest_root_weight: Weight,
    pub positive_roots: Vec<RootEntry>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct LeviOutput {
    #[serde(rename = "type")]
    pub simple_type: SimpleType,
    pub sigma: Vec<usize>,
    pub dim_x: usize,
    pub levi_positive_roots: usize,
    pub components: Vec<LeviComponent>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DimOutput {
    #[serde(rename = "type")]
    pub simple_type: SimpleType,
    pub weight: Weight,
    pub context: DimContext,
    pub levi_node: Option<usize>,
    #[serde(with = "big")]
    pub value: BigUint,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct H0Output {
    #[serde(rename = "type")]
    pub simple_type: SimpleType,
    pub node: usize,
    pub weight: Weight,
    pub dominant: bool,
    #[serde(with = "big")]
    pub h0: BigUint,
}

mod big {
    use num_bigint::BigUint;
    use serde::{Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(v: &BigUint, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(v)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<BigUint, D::Error> {
        String::deserialize(d)?.parse().map_err(serde::de::Error::custom)
    }
}

fn kv_table(rows: Vec<(&str, String)>) -> String {
    let mut t = TextTable::new(["quantity", "value"]);
    for (k, v) in rows {
        t.push([k.to_string(), v]);
    }
    t.render()
}

fn rat_cell(r: &Rational, decimals: bool) -> String {
    if decimals {
        format!("{r}  (≈{}, non-authoritative)", decimal(r))
    } else {
        r.to_string()
    }
}

fn emit_json<T: Serialize>(out: &mut dyn Write, value: &T) -> CliResult<()> {
    serde_json::to_writer_pretty(&mut *out, value)?;
    writeln!(out)?;
    Ok(())
}

fn roots(t: SimpleType) -> RootsOutput {
    let rs = RootSystem::build(t);
    RootsOutput {
        simple_type: t,
        cartan: rs.cartan().to_vec(),
        symmetrizer: rs.symmetrizer().to_vec(),
        cartan_inverse: rs.cartan_inverse().to_vec(),
        rho: rs.rho(),
        highest_root: rs.highest_root().coeffs().to_vec(),
        highest_root_weight: rs.highest_root_fw(),
        positive_roots: rs
            .positive_roots()
            .iter()
            .map(|a| RootEntry {
                coeffs: a.coeffs().to_vec(),
                height: a.height(),
                length_sq: a.length_sq(),
                weight: rs.root_to_weight(a.coeffs()),
            })
            .collect(),
    }
}

fn render_roots(r: &RootsOutput) -> String {
    let matrix = |rows: Vec<Vec<String>>| {
        let mut t = TextTable::new((1..=rows.len()).map(|i| format!("{i}")));
        for row in rows {
            t.push(row);
        }
        t.render()
    };
    let mut s = format!("Root system {} (Bourbaki numbering)\n\nCartan matrix C[i][j] = 2(αi,αj)/(αi,αi):\n", r.simple_type);
    s += &matrix(r.cartan.iter().map(|row| row.iter().map(i64::to_string).collect()).collect());
    s += "\nInverse Cartan matrix (row k gives ξ_k(ϖ_i)):\n";
    s += &matrix(r.cartan_inverse.iter().map(|row| row.iter().map(Rational::to_string).collect()).collect());
    let sym: Vec<String> = r.symmetrizer.iter().map(i64::to_string).collect();
    s += &format!("\nsymmetrizer d = ({})\nρ = {}\n", sym.join(","), r.rho);
    s += &format!(
        "highest root = {:?} = {} in fundamental weights\n\n{} positive roots:\n",
        r.highest_root,
        r.highest_root_weight,
        r.positive_roots.len()
    );
    let mut t = TextTable::new(["#", "simple-root coefficients", "height", "(α,α)", "fundamental-weight coordinates"]);
    for (i, a) in r.positive_roots.iter().enumerate() {
        t.push([
            (i + 1).to_string(),
            format!("{:?}", a.coeffs),
            a.height.to_string(),
            a.length_sq.to_string(),
            a.weight.to_string(),
        ]);
    }
    s + &t.render()
}

fn render_report(r: &BundleReport, decimals: bool) -> String {
    let s = &r.space;
    let mut rows = vec![
        ("space", format!("{} ({}, {})", s.klein_label(), s.family(), s.family().description())),
        ("weight λ", r.lam.to_string()),
        ("rank = dim V_λ", r.rank.to_string()),
        ("h⁰ = dim W_λ", r.h0.to_string()),
        ("ξ_k(λ)", r.xi_k_lam.to_string()),
        ("ξ_k(λ_ad)", r.xi_k_ad.to_string()),
        ("c₁ ratio", r.c1_ratio.to_string()),
        ("lower bound 2ξ_k(λ)/ξ_k(λ_ad)", r.pruning_bound().to_string()),
    ];
    rows.push((
        "j",
        match &r.j_value {
            Some(j) => rat_cell(j, decimals),
            None => "undefined".into(),
        },
    ));
    rows.push(("λ₁ reference", r.lambda1_reference().to_string()));
    rows.push(("sharp", r.sharp().to_string()));
    kv_table(rows)
}

fn render_search(o: &SearchOutcome, decimals: bool) -> String {
    let s = &o.space;
    let minimizers: Vec<String> = o.minimizers.iter().map(Weight::to_string).collect();
    let coefficients: Vec<String> = o.pruning_coefficients.iter().map(Rational::to_string).collect();
    let mut out = format!(
        "Best homogeneous-bundle bound on {} ({})\n\n",
        s.klein_label(),
        s.family()
    );
    out += &kv_table(vec![
        ("best J", rat_cell(&o.best_j, decimals)),
        ("minimizers", minimizers.join(" ")),
        ("incumbent seed", o.incumbent_seed.to_string()),
        ("candidates examined", o.candidates_examined.to_string()),
        ("pruning coefficients 2ξ_k(ϖ_i)/ξ_k(λ_ad)", format!("({})", coefficients.join(", "))),
        ("certificate", format!("every unexamined λ has lower bound ≥ {}", o.pruning_bound_used)),
    ]);
    let mut header = vec!["examined λ", "J"];
    if decimals {
        header.push("J (decimal, non-authoritative)");
    }
    let mut t = TextTable::new(header);
    for c in &o.examined {
        let mut row = vec![c.weight.to_string(), c.j.to_string()];
        if decimals {
            row.push(decimal(&c.j));
        }
        t.push(row);
    }
    out + "\n" + &t.render()
}

pub fn run(cli: &Cli, out: &mut dyn Write) -> CliResult<()> {
    let json = cli.format == Format::Json;
    match &cli.command {
        Command::Roots { space } => {
            let (t, crossed) = parse_space(space)?;
            if !crossed.is_empty() {
                return Err(CliError::Usage("roots takes a bare type such as E6".into()));
            }
            let r = roots(t);
            if json {
                emit_json(out, &r)?;
            } else {
                write!(out, "{}", render_roots(&r))?;
            }
        }
        Command::Levi { space, sigma } => {
            let (t, mut crossed) = parse_space(space)?;
            crossed.extend(sigma);
            let p = Parabolic::new(t, crossed)?;
            let rs = RootSystem::build(t);
            let ld = levi(&rs, &p)?;
            let r = LeviOutput {
                simple_type: t,
                sigma: p.sigma().to_vec(),
                dim_x: ld.dim_x(),
                levi_positive_roots: ld.levi_positive_roots().len(),
                components: ld.components().to_vec(),
            };
            if json {
                emit_json(out, &r)?;
            } else {
                let comps: Vec<String> = r
                    .components
                    .iter()
                    .map(|c| format!("{} on nodes {:?} (in its own Bourbaki order)", c.simple_type, c.nodes))
                    .collect();
                write!(
                    out,
                    "{}",
                    kv_table(vec![
                        ("parabolic", p.to_string()),
                        ("Levi semisimple components", if comps.is_empty() { "none".into() } else { comps.join("; ") }),
                        ("Levi positive roots", r.levi_positive_roots.to_string()),
                        ("center dimension", r.sigma.len().to_string()),
                        ("dim X", r.dim_x.to_string()),
                    ])
                )?;
            }
        }
        Command::Dim { space, weight, levi_node } => {
            let (t, crossed) = parse_space(space)?;
            let rs = RootSystem::build(t);
            let lam = parse_weight(weight, t.rank())?;
            let node = match (crossed.as_slice(), levi_node) {
                ([], n) => *n,
                ([k], None) => Some(*k),
                ([k], Some(n)) if k == n => Some(*n),
                _ => return Err(CliError::Usage("dim takes at most one crossed node".into())),
            };
            let dim = match node {
                None => weyl_dim_g(&rs, &lam)?,
                Some(k) => weyl_dim_levi(&rs, &levi(&rs, &Parabolic::maximal(t, k)?)?, &lam)?,
            };
            let r = DimOutput {
                simple_type: t,
                weight: lam,
                context: dim.context,
                levi_node: node,
                value: dim.value,
            };
            if json {
                emit_json(out, &r)?;
            } else {
                let what = match node {
                    None => "dim W_λ".to_string(),
                    Some(k) => format!("dim V_λ for P(α{k})"),
                };
                write!(out, "{}", kv_table(vec![("weight λ", r.weight.to_string()), (&what, r.value.to_string())]))?;
            }
        }
        Command::H0 { space, node, weight } => {
            let (t, k) = single_node(space, *node)?;
            let rs = RootSystem::build(t);
            let lam = parse_weight(weight, t.rank())?;
            let p = Parabolic::maximal(t, k)?;
            let h0 = h0_bbw(&rs, &p, &lam)?;
            let r = H0Output {
                simple_type: t,
                node: k,
                dominant: lam.is_dominant(),
                weight: lam,
                h0,
            };
            if json {
                emit_json(out, &r)?;
            } else {
                let note = if r.dominant { "dominant: H⁰ = W_λ" } else { "not dominant for G: H⁰ = 0" };
                write!(
                    out,
                    "{}",
                    kv_table(vec![
                        ("X", format!("{}/P(α{})", t, k)),
                        ("weight λ", r.weight.to_string()),
                        ("h⁰(X, E_λ)", r.h0.to_string()),
                        ("Bott–Borel–Weil", note.to_string()),
                    ])
                )?;
            }
        }
        Command::J { space, node, weight } => {
            let (t, k) = single_node(space, *node)?;
            let lam = parse_weight(weight, t.rank())?;
            let space = HermitianSpace::new(t, k)?;
            let r = BundleCalculator::new(space).j_hom(&lam)?;
            if json {
                emit_json(out, &r)?;
            } else {
                write!(out, "{}", render_report(&r, cli.decimal))?;
            }
        }
        Command::Search { space, node } => {
            let (t, k) = single_node(space, *node)?;
            let o = minimize_j(&HermitianSpace::new(t, k)?)?;
            if json {
                emit_json(out, &o)?;
            } else {
                write!(out, "{}", render_search(&o, cli.decimal))?;
            }
        }
        Command::Hermitian { max_rank } => {
            let table = hermitian_table(*max_rank);
            if json {
                emit_json(out, &table)?;
            } else {
                let mut t = TextTable::new(["family", "description", "type", "node", "Klein form"]);
                for s in &table {
                    t.push([
                        s.family().to_string(),
                        s.family().description().to_string(),
                        s.ambient().to_string(),
                        s.node().to_string(),
                        s.klein_label().to_string(),
                    ]);
                }
                write!(out, "{}", t.render())?;
            }
        }
        Command::ReproducePaper => {
            let results = paper_results()?;
            if json {
                emit_json(out, &results)?;
            } else {
                write!(out, "{}", results.render_text(cli.decimal))?;
            }
        }
    }
    Ok(())
}
