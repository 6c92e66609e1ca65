//! Helpers shared by the integration tests.
#![allow(dead_code)]

use cyltab::{CylBox, CylParams, CylPartition, CylTableau, SkewShape};

pub fn params(k: usize, n: usize) -> CylParams {
    CylParams::new(k, n).unwrap()
}

pub fn partition(k: usize, n: usize, window: &[i64]) -> CylPartition {
    CylPartition::new(params(k, n), window.to_vec()).unwrap()
}

/// Builds a tableau from rows given as `(first column, entries)`; an empty
/// row sits at `first column - 1`.
pub fn tab(k: usize, n: usize, rows: &[(i64, &[u32])]) -> CylTableau {
    let p = params(k, n);
    let inner: Vec<i64> = rows.iter().map(|(c, _)| c - 1).collect();
    let outer: Vec<i64> = rows.iter().map(|(c, e)| c - 1 + e.len() as i64).collect();
    let shape = SkewShape::new(CylPartition::new(p, outer).unwrap(), CylPartition::new(p, inner).unwrap()).unwrap();
    CylTableau::new(shape, rows.iter().map(|(_, e)| e.to_vec()).collect()).unwrap()
}

pub fn boxes(list: &[(usize, i64)]) -> Vec<CylBox> {
    list.iter().map(|&(r, c)| CylBox::new(r, c)).collect()
}

pub fn word(s: &str) -> Vec<u32> {
    s.chars().map(|c| c.to_digit(10).unwrap()).collect()
}

pub fn word_str(w: &[u32]) -> String {
    w.iter().map(|a| a.to_string()).collect()
}

pub mod checks;
pub mod examples;

/// Valid windows `w` with `w[0] = 0` (columns are fixed up to translation).
pub fn normalized_windows(k: usize, n: usize) -> Vec<CylPartition> {
    let width = (n - k) as i64;
    let mut out = Vec::new();
    let mut w = vec![0i64; k];
    fn go(i: usize, w: &mut Vec<i64>, width: i64, k: usize, n: usize, out: &mut Vec<CylPartition>) {
        if i == w.len() {
            out.push(partition(k, n, w));
            return;
        }
        for v in (-width..=w[i - 1]).rev() {
            w[i] = v;
            go(i + 1, w, width, k, n, out);
        }
    }
    go(1, &mut w, width, k, n, &mut out);
    out
}

/// Partitions `ν ⊇ base` with `|ν/base| ≤ budget` (`grow`), or
/// `ν ⊆ base` with `|base/ν| ≤ budget` (`!grow`).
pub fn neighbours(base: &CylPartition, budget: usize, grow: bool) -> Vec<CylPartition> {
    let k = base.params().k();
    let mut out = Vec::new();
    let mut d = vec![0i64; k];
    fn go(i: usize, left: i64, d: &mut Vec<i64>, base: &CylPartition, grow: bool, out: &mut Vec<CylPartition>) {
        if i == d.len() {
            let w: Vec<i64> =
                base.window().iter().zip(d.iter()).map(|(b, x)| if grow { b + x } else { b - x }).collect();
            if let Ok(p) = CylPartition::new(base.params(), w) {
                out.push(p);
            }
            return;
        }
        for x in 0..=left {
            d[i] = x;
            go(i + 1, left - x, d, base, grow, out);
        }
    }
    go(0, budget as i64, &mut d, base, grow, &mut out);
    out
}

/// Every semistandard tableau with `k ≤ 3`-style parameters, at most
/// `max_boxes` boxes and letters in `1..=letters`, with inner window
/// normalized to start at 0.
pub fn tableau_space(k: usize, n: usize, max_boxes: usize, letters: u32) -> Vec<CylTableau> {
    let mut out = Vec::new();
    for mu in normalized_windows(k, n) {
        for lam in neighbours(&mu, max_boxes, true) {
            let shape = SkewShape::new(lam, mu.clone()).unwrap();
            out.extend(cyltab::enumerate::enumerate_ssct(&shape, letters));
        }
    }
    out
}

/// Box sets accepted by forward multi-insertion into `t`: `ν/μ` for
/// partitions `ν ⊇ μ` with `ν/μ` a horizontal strip of at most `max` boxes.
pub fn forward_sets(t: &CylTableau, max: usize) -> Vec<Vec<CylBox>> {
    let mu = t.shape().inner();
    neighbours(mu, max, true)
        .into_iter()
        .filter_map(|nu| {
            let s = SkewShape::new(nu, mu.clone()).ok()?;
            s.is_horizontal_strip().then(|| s.boxes())
        })
        .collect()
}

/// Box sets accepted by reverse multi-insertion from `t`: `λ/ρ` for
/// partitions `ρ ⊆ λ` with `λ/ρ` a horizontal strip of at most `max` boxes.
pub fn reverse_sets(t: &CylTableau, max: usize) -> Vec<Vec<CylBox>> {
    let lam = t.shape().outer();
    neighbours(lam, max, false)
        .into_iter()
        .filter_map(|rho| {
            let s = SkewShape::new(lam.clone(), rho).ok()?;
            s.is_horizontal_strip().then(|| s.boxes())
        })
        .collect()
}

/// Cylinder parameters of the exhaustive insertion sweep.
pub fn sweep_params() -> Vec<(usize, usize)> {
    let mut v = Vec::new();
    for k in 1..=3 {
        for w in 1..=3 {
            v.push((k, k + w));
        }
    }
    v
}
