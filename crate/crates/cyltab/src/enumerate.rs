//! Exhaustive enumeration of cylindric partitions and tableaux, truncated
//! Schur polynomials, and exact checks of the Cauchy-type identities.
//!
//! The identities are equalities of power series with infinitely many
//! summands.  They are checked degree by degree: only finitely many shapes
//! contribute below a degree bound, so each side is computed exactly up to
//! that bound and compared coefficientwise.

use std::collections::BTreeSet;

use num_bigint::BigUint;
use num_traits::One;
use rayon::prelude::*;

use crate::geometry::{cyl_embed, project, CylBox, CylParams, CylPartition, GeometryError, Point, SkewShape};
use crate::poly::{Exponents, SparsePolynomial};
use crate::tableau::{CylTableau, Letter};

/// Result of an identity check.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IdentityReport {
    pub lhs: SparsePolynomial,
    pub rhs: SparsePolynomial,
    pub equal: bool,
    pub mismatches: Vec<(Exponents, BigUint, BigUint)>,
}

impl IdentityReport {
    pub fn compare(lhs: SparsePolynomial, rhs: SparsePolynomial) -> Self {
        let mismatches = lhs.mismatches(&rhs);
        IdentityReport { equal: mismatches.is_empty(), lhs, rhs, mismatches }
    }
}

/// All `μ ⊆ α ∩ β` with `|α/μ| = m`, in lexicographic window order.
pub fn enumerate_inner(alpha: &CylPartition, beta: &CylPartition, m: usize) -> Vec<CylPartition> {
    assert_eq!(alpha.params(), beta.params(), "cylinder parameters differ");
    let a = alpha.window();
    let ranges: Vec<(i64, i64)> = a.iter().zip(beta.window()).map(|(&ai, &bi)| (ai - m as i64, ai.min(bi))).collect();
    windows_with_budget(alpha.params(), &ranges, |i, v| (a[i] - v) as usize, m)
}

/// All `λ ⊇ α ∪ β` with `|λ/β| = m`, in lexicographic window order.
pub fn enumerate_outer(alpha: &CylPartition, beta: &CylPartition, m: usize) -> Vec<CylPartition> {
    assert_eq!(alpha.params(), beta.params(), "cylinder parameters differ");
    let b = beta.window();
    let ranges: Vec<(i64, i64)> = b.iter().zip(alpha.window()).map(|(&bi, &ai)| (ai.max(bi), bi + m as i64)).collect();
    windows_with_budget(beta.params(), &ranges, |i, v| (v - b[i]) as usize, m)
}

/// Windows with entry `i` in `ranges[i]`, total `cost` exactly `budget`,
/// that are valid partitions.
fn windows_with_budget(
    params: CylParams,
    ranges: &[(i64, i64)],
    cost: impl Fn(usize, i64) -> usize,
    budget: usize,
) -> Vec<CylPartition> {
    fn go(
        i: usize,
        ranges: &[(i64, i64)],
        cost: &dyn Fn(usize, i64) -> usize,
        left: usize,
        cur: &mut Vec<i64>,
        out: &mut Vec<Vec<i64>>,
    ) {
        if i == ranges.len() {
            if left == 0 {
                out.push(cur.clone());
            }
            return;
        }
        let (lo, mut hi) = ranges[i];
        if let Some(&prev) = cur.last() {
            hi = hi.min(prev);
        }
        for v in lo..=hi {
            let c = cost(i, v);
            if c <= left {
                cur.push(v);
                go(i + 1, ranges, cost, left - c, cur, out);
                cur.pop();
            }
        }
    }
    let mut raw = Vec::new();
    go(0, ranges, &cost, budget, &mut Vec::new(), &mut raw);
    raw.into_iter().filter_map(|w| CylPartition::new(params, w).ok()).collect()
}

/// Calls `visit` with every filling of the shape's boxes (row-major) that
/// is semistandard over `1..=bound`; with `distinct`, letters are used at
/// most once.  Fillings arrive in lexicographic order.
fn for_each_filling(shape: &SkewShape, bound: Letter, distinct: bool, mut visit: impl FnMut(&[Letter])) {
    let params = shape.params();
    let boxes = shape.boxes();
    let inner = shape.inner().window();
    let mut offset = vec![0usize; params.k()];
    for r in 1..params.k() {
        offset[r] = offset[r - 1] + shape.row_len(r - 1);
    }
    let index = |b: CylBox| -> Option<usize> {
        shape.contains_box(b).then(|| offset[b.row] + (b.col - inner[b.row] - 1) as usize)
    };
    // For each box, the earlier boxes it must exceed (weakly or strictly)
    // and the earlier boxes it must stay strictly below.
    let mut lower: Vec<Vec<(usize, bool)>> = vec![Vec::new(); boxes.len()];
    let mut upper: Vec<Vec<usize>> = vec![Vec::new(); boxes.len()];
    for (i, b) in boxes.iter().enumerate() {
        let (x, y) = (b.row as i64, b.col);
        let left = index(project(Point::new(x, y - 1), params));
        let right = index(project(Point::new(x, y + 1), params));
        let above = index(project(Point::new(x - 1, y), params));
        let below = index(project(Point::new(x + 1, y), params));
        for (nb, strict) in [(left, false), (above, true)] {
            if let Some(j) = nb.filter(|&j| j < i) {
                lower[i].push((j, strict));
            }
        }
        // Boxes of a row are indexed left to right, so a right neighbour is
        // always filled later; the box below is filled earlier only across
        // the wrap from row k-1 to row 0.
        debug_assert!(right.map_or(true, |j| j > i));
        if let Some(j) = below.filter(|&j| j < i) {
            upper[i].push(j);
        }
    }
    let mut vals = vec![0; boxes.len()];
    let mut used = vec![false; bound as usize + 1];
    #[allow(clippy::too_many_arguments)]
    fn go(
        i: usize,
        bound: Letter,
        distinct: bool,
        lower: &[Vec<(usize, bool)>],
        upper: &[Vec<usize>],
        vals: &mut Vec<Letter>,
        used: &mut Vec<bool>,
        visit: &mut dyn FnMut(&[Letter]),
    ) {
        if i == vals.len() {
            visit(vals);
            return;
        }
        let mut lo = 1;
        for &(j, strict) in &lower[i] {
            lo = lo.max(vals[j] + u32::from(strict));
        }
        let mut hi = bound;
        for &j in &upper[i] {
            hi = hi.min(vals[j].saturating_sub(1));
        }
        for a in lo..=hi {
            if distinct && used[a as usize] {
                continue;
            }
            vals[i] = a;
            used[a as usize] = true;
            go(i + 1, bound, distinct, lower, upper, vals, used, visit);
            used[a as usize] = false;
        }
        vals[i] = 0;
    }
    go(0, bound, distinct, &lower, &upper, &mut vals, &mut used, &mut visit);
}

fn rows_of(shape: &SkewShape, vals: &[Letter]) -> Vec<Vec<Letter>> {
    let mut rows = Vec::with_capacity(shape.params().k());
    let mut at = 0;
    for r in 0..shape.params().k() {
        let len = shape.row_len(r);
        rows.push(vals[at..at + len].to_vec());
        at += len;
    }
    rows
}

/// All semistandard fillings of `shape` over `1..=num_letters`.
pub fn enumerate_ssct(shape: &SkewShape, num_letters: Letter) -> Vec<CylTableau> {
    let mut out = Vec::new();
    for_each_filling(shape, num_letters, false, |vals| {
        out.push(CylTableau::from_parts_unchecked(shape.clone(), rows_of(shape, vals)));
    });
    out
}

/// The number of standard fillings of `shape`.
pub fn count_standard(shape: &SkewShape) -> u128 {
    let mut count = 0u128;
    for_each_filling(shape, shape.size() as Letter, true, |_| count += 1);
    count
}

fn weight_exponents(vals: &[Letter], num_vars: usize) -> Exponents {
    let mut e = vec![0u32; num_vars];
    for &a in vals {
        e[a as usize - 1] += 1;
    }
    e
}

/// The Schur polynomial `s_{λ/μ}(x_1, …, x_v)`.
pub fn schur_poly(shape: &SkewShape, num_vars: usize) -> SparsePolynomial {
    let mut p = SparsePolynomial::zero(num_vars);
    for_each_filling(shape, num_vars as Letter, false, |vals| {
        p.add_term(weight_exponents(vals, num_vars), BigUint::one());
    });
    p
}

fn sum_par(terms: Vec<SparsePolynomial>, arity: usize) -> SparsePolynomial {
    terms.into_par_iter().reduce(
        || SparsePolynomial::zero(arity),
        |mut a, b| {
            a.add_assign(&b);
            a
        },
    )
}

fn shape(outer: &CylPartition, inner: &CylPartition) -> SkewShape {
    SkewShape::new(outer.clone(), inner.clone()).expect("enumerated partitions are nested")
}

/// `Σ_μ s_{α/μ}(x) s_{β/μ}(y)` over `μ` with `|α/μ| ≤ max_x_degree`.
fn cauchy_lhs(
    alpha: &CylPartition,
    beta: &CylPartition,
    max_x_degree: usize,
    nx: usize,
    ny: usize,
) -> SparsePolynomial {
    let mus: Vec<CylPartition> = (0..=max_x_degree).flat_map(|j| enumerate_inner(alpha, beta, j)).collect();
    let terms =
        mus.par_iter().map(|mu| schur_poly(&shape(alpha, mu), nx).tensor(&schur_poly(&shape(beta, mu), ny))).collect();
    sum_par(terms, nx + ny)
}

/// `Σ_λ s_{λ/β}(x) s_{λ/α}(y)` over `λ` with `|λ/β| ≤ max_x_degree`.
fn cauchy_rhs(
    alpha: &CylPartition,
    beta: &CylPartition,
    max_x_degree: usize,
    nx: usize,
    ny: usize,
) -> SparsePolynomial {
    let lams: Vec<CylPartition> = (0..=max_x_degree).flat_map(|j| enumerate_outer(alpha, beta, j)).collect();
    let terms = lams
        .par_iter()
        .map(|lam| schur_poly(&shape(lam, beta), nx).tensor(&schur_poly(&shape(lam, alpha), ny)))
        .collect();
    sum_par(terms, nx + ny)
}

/// Checks `Σ_μ s_{α/μ}(x) s_{β/μ}(y) = Σ_λ s_{λ/β}(x) s_{λ/α}(y)` for all
/// terms of `x`-degree at most `max_degree`.  Variables are ordered
/// `x_1 … x_nx, y_1 … y_ny`.
pub fn verify_cauchy(
    alpha: &CylPartition,
    beta: &CylPartition,
    max_degree: usize,
    num_vars_x: usize,
    num_vars_y: usize,
) -> IdentityReport {
    let lhs = cauchy_lhs(alpha, beta, max_degree, num_vars_x, num_vars_y);
    let rhs = cauchy_rhs(alpha, beta, max_degree, num_vars_x, num_vars_y);
    IdentityReport::compare(lhs, rhs)
}

/// Checks `Σ_{μ ⊆ α} s_{α/μ} = Σ_{λ ⊇ α} s_{λ/α}` up to degree `max_degree`.
pub fn verify_oneschur(alpha: &CylPartition, max_degree: usize, num_vars: usize) -> IdentityReport {
    let sum = |shapes: Vec<SkewShape>| {
        let terms = shapes.par_iter().map(|s| schur_poly(s, num_vars)).collect();
        sum_par(terms, num_vars)
    };
    let lhs =
        sum((0..=max_degree).flat_map(|j| enumerate_inner(alpha, alpha, j)).map(|mu| shape(alpha, &mu)).collect());
    let rhs =
        sum((0..=max_degree).flat_map(|j| enumerate_outer(alpha, alpha, j)).map(|lam| shape(&lam, alpha)).collect());
    IdentityReport::compare(lhs, rhs)
}

/// Checks `Σ_μ f_{α/μ} f_{β/μ} = Σ_λ f_{λ/α} f_{λ/β}` with `|α/μ| = |λ/β| = m`.
pub fn verify_fcount(alpha: &CylPartition, beta: &CylPartition, m: usize) -> (u128, u128) {
    let lhs = enumerate_inner(alpha, beta, m)
        .par_iter()
        .map(|mu| count_standard(&shape(alpha, mu)) * count_standard(&shape(beta, mu)))
        .sum();
    let rhs = enumerate_outer(alpha, beta, m)
        .par_iter()
        .map(|lam| count_standard(&shape(lam, alpha)) * count_standard(&shape(lam, beta)))
        .sum();
    (lhs, rhs)
}

/// A regular (finite) partition, weakly decreasing with zero parts dropped.
fn normalize(p: &[u32]) -> Vec<u32> {
    p.iter().copied().filter(|&x| x > 0).collect()
}

fn part(p: &[u32], i: usize) -> u32 {
    p.get(i).copied().unwrap_or(0)
}

fn is_partition(p: &[u32]) -> bool {
    p.windows(2).all(|w| w[0] >= w[1])
}

/// The Schur polynomial of the regular skew shape `outer/inner`, by direct
/// enumeration of semistandard Young tableaux.
pub fn regular_skew_schur(outer: &[u32], inner: &[u32], num_vars: usize) -> SparsePolynomial {
    assert!(is_partition(outer) && is_partition(inner), "regular partitions must be weakly decreasing");
    let outer = normalize(outer);
    let rows = outer.len();
    if (0..rows.max(inner.len())).any(|i| part(inner, i) > part(&outer, i)) {
        return SparsePolynomial::zero(num_vars);
    }
    let cells: Vec<(usize, u32)> = (0..rows).flat_map(|i| (part(inner, i)..outer[i]).map(move |j| (i, j))).collect();
    let index = |i: usize, j: u32| cells.iter().position(|&c| c == (i, j));
    let constraints: Vec<(Option<usize>, Option<usize>)> = cells
        .iter()
        .map(|&(i, j)| {
            let left = if j > 0 { index(i, j - 1) } else { None };
            let above = if i > 0 { index(i - 1, j) } else { None };
            (left, above)
        })
        .collect();
    let mut poly = SparsePolynomial::zero(num_vars);
    let mut vals = vec![0u32; cells.len()];
    fn go(
        i: usize,
        nv: u32,
        cons: &[(Option<usize>, Option<usize>)],
        vals: &mut Vec<u32>,
        poly: &mut SparsePolynomial,
    ) {
        if i == vals.len() {
            poly.add_term(weight_exponents(vals, nv as usize), BigUint::one());
            return;
        }
        let (left, above) = cons[i];
        let lo = left.map_or(1, |j| vals[j]).max(above.map_or(1, |j| vals[j] + 1));
        for a in lo..=nv {
            vals[i] = a;
            go(i + 1, nv, cons, vals, poly);
        }
    }
    go(0, num_vars as u32, &constraints, &mut vals, &mut poly);
    poly
}

/// All regular partitions contained in `p`.
fn partitions_inside(p: &[u32]) -> Vec<Vec<u32>> {
    fn go(i: usize, p: &[u32], cap: u32, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if i == p.len() {
            out.push(normalize(cur));
            return;
        }
        for v in 0..=p[i].min(cap) {
            cur.push(v);
            go(i + 1, p, v, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(0, p, u32::MAX, &mut Vec::new(), &mut out);
    out
}

/// All regular partitions of `g`.
fn partitions_of(g: u32) -> Vec<Vec<u32>> {
    fn go(left: u32, cap: u32, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if left == 0 {
            out.push(cur.clone());
            return;
        }
        for v in (1..=left.min(cap)).rev() {
            cur.push(v);
            go(left - v, v, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(g, g, &mut Vec::new(), &mut out);
    out
}

/// All regular partitions containing `nu` with at most `extra` more cells.
fn partitions_containing(nu: &[u32], extra: u32) -> Vec<Vec<u32>> {
    let mut seen: BTreeSet<Vec<u32>> = BTreeSet::new();
    let mut frontier = vec![normalize(nu)];
    seen.insert(normalize(nu));
    for _ in 0..extra {
        let mut next = Vec::new();
        for p in &frontier {
            for i in 0..=p.len() {
                if i == 0 || part(p, i - 1) > part(p, i) {
                    let mut q = p.clone();
                    if i == q.len() {
                        q.push(1);
                    } else {
                        q[i] += 1;
                    }
                    if seen.insert(q.clone()) {
                        next.push(q);
                    }
                }
            }
        }
        frontier = next;
    }
    seen.into_iter().collect()
}

fn size(p: &[u32]) -> u32 {
    p.iter().sum()
}

/// Report of the regular skew-shape reduction: the regular identity
/// itself, and the cylindric Cauchy sums for embedded partitions on a
/// cylinder large enough that both sides agree with the regular ones up to
/// the degree bound.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SkewReductionReport {
    /// Regular left side (with the `Σ_γ s_γ(x) s_γ(y)` factor) vs regular right side.
    pub regular: IdentityReport,
    /// Cylindric Cauchy sums for the embedded partitions, truncated to the degree bound.
    pub cylindric: IdentityReport,
    pub k: usize,
    pub n: usize,
    /// Whether the regular and cylindric left sides, and right sides, coincide.
    pub cross_check: bool,
    pub equal: bool,
}

/// Checks, up to total degree `max_degree`,
/// `Σ_μ s_{α/μ}(x) s_{β/μ}(y) · Σ_γ s_γ(x) s_γ(y) = Σ_λ s_{λ/β}(x) s_{λ/α}(y)`
/// for regular partitions, and cross-checks each side against the
/// cylindric Cauchy sums of the embedded partitions.
pub fn verify_skew_reduction(
    alpha: &[u32],
    beta: &[u32],
    max_degree: u32,
    num_vars: usize,
) -> Result<SkewReductionReport, GeometryError> {
    if !is_partition(alpha) || !is_partition(beta) {
        return Err(GeometryError::NotAPartition);
    }
    let (alpha, beta) = (normalize(alpha), normalize(beta));
    let d = max_degree;
    let arity = 2 * num_vars;
    let both = |outer_x: &[u32], inner_x: &[u32], outer_y: &[u32], inner_y: &[u32]| {
        regular_skew_schur(outer_x, inner_x, num_vars).tensor(&regular_skew_schur(outer_y, inner_y, num_vars))
    };

    let meet: Vec<u32> = (0..alpha.len().min(beta.len())).map(|i| alpha[i].min(beta[i])).collect();
    let mut first = SparsePolynomial::zero(arity);
    for mu in partitions_inside(&meet) {
        if size(&alpha) + size(&beta) - 2 * size(&mu) <= d {
            first.add_assign(&both(&alpha, &mu, &beta, &mu));
        }
    }
    let mut gamma_sum = SparsePolynomial::zero(arity);
    for g in 0..=d / 2 {
        for gamma in partitions_of(g) {
            gamma_sum.add_assign(&both(&gamma, &[], &gamma, &[]));
        }
    }
    let lhs = first.mul(&gamma_sum).truncate(d);

    let join: Vec<u32> = (0..alpha.len().max(beta.len())).map(|i| part(&alpha, i).max(part(&beta, i))).collect();
    let mut rhs = SparsePolynomial::zero(arity);
    for lam in partitions_containing(&join, d) {
        if 2 * size(&lam) - size(&alpha) - size(&beta) <= d {
            rhs.add_assign(&both(&lam, &beta, &lam, &alpha));
        }
    }
    let regular = IdentityReport::compare(lhs, rhs);

    let k = alpha.len().max(beta.len()) + 2 * d as usize + 1;
    let n = k + part(&alpha, 0).max(part(&beta, 0)) as usize + 2 * d as usize + 1;
    let params = CylParams::new(k, n)?;
    let (ca, cb) = (cyl_embed(&alpha, params)?, cyl_embed(&beta, params)?);
    let cyl_lhs = cauchy_lhs(&ca, &cb, d as usize, num_vars, num_vars).truncate(d);
    let cyl_rhs = cauchy_rhs(&ca, &cb, d as usize, num_vars, num_vars).truncate(d);
    let cylindric = IdentityReport::compare(cyl_lhs, cyl_rhs);

    let cross_check = cylindric.lhs == regular.lhs && cylindric.rhs == regular.rhs;
    let equal = regular.equal && cylindric.equal && cross_check;
    Ok(SkewReductionReport { regular, cylindric, k, n, cross_check, equal })
}
