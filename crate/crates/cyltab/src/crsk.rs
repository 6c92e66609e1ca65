//! The cylindric Robinson–Schensted–Knuth correspondence.
//!
//! `crsk` maps a pair `(T, U)` of tableaux sharing an inner shape `μ` to a
//! pair `(P, Q)` sharing an outer shape `λ`, preserving weights
//! (`wt P = wt T`, `wt Q = wt U`).  For each letter `i` of `U` in increasing
//! order, the boxes of `U` holding `i` are multi-inserted into `P`, and the
//! new set is recorded in `Q` with the letter `i`.

use thiserror::Error;

use crate::forward::full_multi;
use crate::geometry::{CylPartition, SkewShape};
use crate::insertion::InsertionError;
use crate::reverse::reverse_full_multi;
use crate::tableau::CylTableau;

/// Errors raised by the correspondence.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CrskError {
    #[error("the two tableaux do not share an inner shape")]
    MismatchedInnerShapes,
    #[error("the two tableaux do not share an outer shape")]
    MismatchedOuterShapes,
    #[error(transparent)]
    Insertion(#[from] InsertionError),
}

/// Input side: `T` on `α/μ`, `U` on `β/μ`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct CrskInput {
    pub t: CylTableau,
    pub u: CylTableau,
    pub mu: CylPartition,
}

/// Output side: `P` on `λ/β`, `Q` on `λ/α`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct CrskOutput {
    pub p: CylTableau,
    pub q: CylTableau,
    pub lambda: CylPartition,
}

impl CrskInput {
    /// Pairs two tableaux, checking that their inner shapes agree.
    pub fn new(t: CylTableau, u: CylTableau) -> Result<Self, CrskError> {
        if t.shape().inner() != u.shape().inner() {
            return Err(CrskError::MismatchedInnerShapes);
        }
        let mu = t.shape().inner().clone();
        Ok(CrskInput { t, u, mu })
    }
}

impl CrskOutput {
    /// Pairs two tableaux, checking that their outer shapes agree.
    pub fn new(p: CylTableau, q: CylTableau) -> Result<Self, CrskError> {
        if p.shape().outer() != q.shape().outer() {
            return Err(CrskError::MismatchedOuterShapes);
        }
        let lambda = p.shape().outer().clone();
        Ok(CrskOutput { p, q, lambda })
    }
}

/// Runs the correspondence.
pub fn crsk(input: &CrskInput) -> Result<CrskOutput, CrskError> {
    crsk_with(input, |_, _| {})
}

/// Runs the correspondence, calling `observe(P, Q)` after every letter.
pub fn crsk_with(
    input: &CrskInput,
    mut observe: impl FnMut(&CylTableau, &CylTableau),
) -> Result<CrskOutput, CrskError> {
    let CrskInput { t, u, mu } = input;
    if t.shape().inner() != mu || u.shape().inner() != mu {
        return Err(CrskError::MismatchedInnerShapes);
    }
    let mut p = t.clone();
    let alpha = t.shape().outer().clone();
    let mut q_rows = vec![Vec::new(); alpha.params().k()];
    let mut q_outer = alpha.clone();
    for i in u.letters() {
        let s = u.boxes_with(i);
        let result = full_multi(&p, &s)?;
        for b in &result.new_set {
            q_rows[b.row].push(i);
        }
        p = result.tableau;
        q_outer = p.shape().outer().clone();
        let q_shape = SkewShape::new(q_outer.clone(), alpha.clone()).expect("outer shape only grows");
        let q = CylTableau::from_parts_unchecked(q_shape, q_rows.clone());
        observe(&p, &q);
    }
    let q_shape = SkewShape::new(q_outer.clone(), alpha).expect("outer shape only grows");
    let q = CylTableau::new(q_shape, q_rows).map_err(InsertionError::from)?;
    Ok(CrskOutput { p, q, lambda: q_outer })
}

/// Runs the inverse correspondence.
pub fn crsk_inverse(output: &CrskOutput) -> Result<CrskInput, CrskError> {
    let CrskOutput { p, q, lambda } = output;
    if p.shape().outer() != lambda || q.shape().outer() != lambda {
        return Err(CrskError::MismatchedOuterShapes);
    }
    let mut t = p.clone();
    let beta = p.shape().inner().clone();
    let mut u_rows: Vec<std::collections::VecDeque<u32>> = vec![Default::default(); beta.params().k()];
    for i in q.letters().into_iter().rev() {
        let s = q.boxes_with(i);
        let result = reverse_full_multi(&t, &s)?;
        for b in result.reverse_new_set.iter().rev() {
            u_rows[b.row].push_front(i);
        }
        t = result.tableau;
    }
    let mu = t.shape().inner().clone();
    let u_shape = SkewShape::new(beta, mu.clone()).expect("inner shape only shrinks");
    let u = CylTableau::new(u_shape, u_rows.into_iter().map(Vec::from).collect()).map_err(InsertionError::from)?;
    Ok(CrskInput { t, u, mu })
}
