//! Test-only oracles built from the classical orthonormal-coordinate models
//! of each root system. Nothing here touches the library's height-induction
//! or Cartan-matrix code paths.

#![allow(dead_code)]

use std::collections::BTreeSet;

use hsym_core::{Letter, Rational, SimpleType};

/// Roots and simple roots in orthonormal coordinates, doubled so that the
/// half-integral E8 and F4 vectors become integral.
pub struct OrthonormalModel {
    pub roots: Vec<Vec<i64>>,
    pub simple: Vec<Vec<i64>>,
}

fn unit(n: usize, i: usize, scale: i64) -> Vec<i64> {
    let mut v = vec![0; n];
    v[i] = scale;
    v
}

fn add(a: &[i64], b: &[i64]) -> Vec<i64> {
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

fn sub(a: &[i64], b: &[i64]) -> Vec<i64> {
    a.iter().zip(b).map(|(x, y)| x - y).collect()
}

fn neg(a: &[i64]) -> Vec<i64> {
    a.iter().map(|x| -x).collect()
}

fn dot(a: &[i64], b: &[i64]) -> i64 {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

/// ±eᵢ ± eⱼ for i < j, doubled.
fn pm_pairs(n: usize) -> Vec<Vec<i64>> {
    let mut out = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            for si in [2, -2] {
                for sj in [2, -2] {
                    let mut v = vec![0; n];
                    v[i] = si;
                    v[j] = sj;
                    out.push(v);
                }
            }
        }
    }
    out
}

fn e8_model() -> OrthonormalModel {
    let mut roots = pm_pairs(8);
    for mask in 0u32..256 {
        if mask.count_ones() % 2 == 0 {
            roots.push((0..8).map(|i| if mask >> i & 1 == 1 { -1 } else { 1 }).collect());
        }
    }
    let e = |i: usize| unit(8, i - 1, 2);
    let mut a1 = vec![-1; 8];
    a1[0] = 1;
    a1[7] = 1;
    let simple = vec![
        a1,
        add(&e(1), &e(2)),
        sub(&e(2), &e(1)),
        sub(&e(3), &e(2)),
        sub(&e(4), &e(3)),
        sub(&e(5), &e(4)),
        sub(&e(6), &e(5)),
        sub(&e(7), &e(6)),
    ];
    OrthonormalModel { roots, simple }
}

pub fn orthonormal_model(t: SimpleType) -> OrthonormalModel {
    let l = t.rank();
    match t.letter() {
        Letter::A => {
            let n = l + 1;
            let e = |i: usize| unit(n, i, 2);
            let roots = (0..n)
                .flat_map(|i| (0..n).filter(move |&j| j != i).map(move |j| (i, j)))
                .map(|(i, j)| sub(&e(i), &e(j)))
                .collect();
            let simple = (0..l).map(|i| sub(&e(i), &e(i + 1))).collect();
            OrthonormalModel { roots, simple }
        }
        Letter::B | Letter::C | Letter::D => {
            let e = |i: usize| unit(l, i, 2);
            let mut roots = pm_pairs(l);
            let mut simple: Vec<Vec<i64>> = (0..l - 1).map(|i| sub(&e(i), &e(i + 1))).collect();
            match t.letter() {
                Letter::B => {
                    roots.extend((0..l).flat_map(|i| [e(i), neg(&e(i))]));
                    simple.push(e(l - 1));
                }
                Letter::C => {
                    roots.extend((0..l).flat_map(|i| [unit(l, i, 4), unit(l, i, -4)]));
                    simple.push(unit(l, l - 1, 4));
                }
                _ => simple.push(add(&e(l - 2), &e(l - 1))),
            }
            OrthonormalModel { roots, simple }
        }
        Letter::E => {
            let full = e8_model();
            // E6 and E7 are the E8 roots in the span of their simple roots.
            let simple: Vec<Vec<i64>> = full.simple[..l].to_vec();
            let roots = full
                .roots
                .iter()
                .filter(|r| {
                    let c = coefficients(&full.simple, r).expect("E8 simple roots span R^8");
                    c[l..].iter().all(Rational::is_zero)
                })
                .cloned()
                .collect();
            OrthonormalModel { roots, simple }
        }
        Letter::F => {
            let e = |i: usize| unit(4, i, 2);
            let mut roots = pm_pairs(4);
            roots.extend((0..4).flat_map(|i| [e(i), neg(&e(i))]));
            for mask in 0u32..16 {
                roots.push((0..4).map(|i| if mask >> i & 1 == 1 { -1 } else { 1 }).collect());
            }
            let simple = vec![sub(&e(1), &e(2)), sub(&e(2), &e(3)), e(3), vec![1, -1, -1, -1]];
            OrthonormalModel { roots, simple }
        }
        Letter::G => {
            let mut roots = Vec::new();
            for i in 0..3 {
                for j in 0..3 {
                    if i != j {
                        let mut v = vec![0; 3];
                        v[i] = 2;
                        v[j] = -2;
                        roots.push(v);
                        let mut w = vec![-2; 3];
                        w[i] = 4;
                        roots.push(w.clone());
                        roots.push(neg(&w));
                    }
                }
            }
            roots.sort();
            roots.dedup();
            let simple = vec![vec![2, -2, 0], vec![-4, 2, 2]];
            OrthonormalModel { roots, simple }
        }
    }
}

/// Coefficients of `v` in the basis `simple`, by solving the Gram system
/// exactly; `None` if `v` is not in their span.
pub fn coefficients(simple: &[Vec<i64>], v: &[i64]) -> Option<Vec<Rational>> {
    let l = simple.len();
    let mut a: Vec<Vec<Rational>> = (0..l)
        .map(|i| {
            let mut row: Vec<Rational> = (0..l).map(|j| Rational::from(dot(&simple[i], &simple[j]))).collect();
            row.push(Rational::from(dot(&simple[i], v)));
            row
        })
        .collect();
    for col in 0..l {
        let p = (col..l).find(|&r| !a[r][col].is_zero()).unwrap();
        a.swap(col, p);
        let piv = a[col][col].clone();
        for x in a[col].iter_mut() {
            *x = &*x / &piv;
        }
        for r in 0..l {
            if r != col && !a[r][col].is_zero() {
                let f = a[r][col].clone();
                let pr = a[col].clone();
                for (x, y) in a[r].iter_mut().zip(&pr) {
                    *x = &*x - &(&f * y);
                }
            }
        }
    }
    let c: Vec<Rational> = a.into_iter().map(|row| row[l].clone()).collect();
    let n = v.len();
    let recon: Vec<Rational> = (0..n)
        .map(|k| {
            c.iter()
                .zip(simple)
                .map(|(ci, s)| ci * &Rational::from(s[k]))
                .sum()
        })
        .collect();
    let target: Vec<Rational> = v.iter().map(|&x| Rational::from(x)).collect();
    (recon == target).then_some(c)
}

/// Positive roots of `t` as simple-root coefficient vectors.
pub fn oracle_positive_roots(t: SimpleType) -> BTreeSet<Vec<i64>> {
    let model = orthonormal_model(t);
    let mut out = BTreeSet::new();
    for r in &model.roots {
        let c = coefficients(&model.simple, r).unwrap_or_else(|| panic!("{t}: root outside the simple span"));
        let c: Vec<i64> = c
            .iter()
            .map(|x| {
                let n = x.to_integer().expect("root coordinates are integral");
                i64::try_from(n).unwrap()
            })
            .collect();
        assert!(c.iter().all(|&x| x >= 0) || c.iter().all(|&x| x <= 0), "{t}: mixed-sign root");
        if c.iter().all(|&x| x >= 0) {
            out.insert(c);
        }
    }
    out
}

/// `2(αᵢ, αⱼ) / (αᵢ, αᵢ)` from the orthonormal simple roots.
pub fn oracle_cartan(t: SimpleType) -> Vec<Vec<i64>> {
    let s = orthonormal_model(t).simple;
    s.iter()
        .map(|a| {
            s.iter()
                .map(|b| {
                    let num = 2 * dot(a, b);
                    let den = dot(a, a);
                    assert_eq!(num % den, 0);
                    num / den
                })
                .collect()
        })
        .collect()
}
