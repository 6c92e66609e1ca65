//! Geometry of the cylinder `C_{k,n}`.
//!
//! The cylinder is the integer plane modulo the shift `(-k, n-k)`: the point
//! `(x, y)` (plane row `x`, growing downward; plane column `y`, growing
//! rightward) is identified with `(x - k, y + (n - k))`.  A [`CylBox`] is an
//! equivalence class of points, stored canonically with its row in `[0, k)`.
//!
//! A [`CylPartition`] is a bi-infinite weakly decreasing sequence
//! `(λ_m)_{m ∈ Z}` with `λ_m = λ_{m+k} + (n - k)`; only one window
//! `λ_0, …, λ_{k-1}` is stored.  A point `(x, y)` lies in `λ` iff `y ≤ λ_x`.

use std::cmp::Ordering;
use std::fmt;

use thiserror::Error;

/// Errors raised while constructing or combining geometric values.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GeometryError {
    /// The cylinder requires `k ≥ 1` and `n > k`.
    #[error("invalid cylinder parameters k={k}, n={n}: need k >= 1 and n > k")]
    InvalidParams { k: usize, n: usize },
    /// A plane row was not congruent to the box's row modulo `k`.
    #[error("plane row {plane_row} is not congruent to box row {row} modulo k")]
    RowNotCongruent { row: usize, plane_row: i64 },
    /// A window did not have exactly `k` entries.
    #[error("window has length {len}, expected k={k}")]
    WindowLength { len: usize, k: usize },
    /// The window is not weakly decreasing at `index`.
    #[error("window is not weakly decreasing at index {index}")]
    WindowNotDecreasing { index: usize },
    /// The last window entry is smaller than `λ_0 - (n - k)`.
    #[error("wrap constraint violated: last entry {last} < first entry {first} - (n - k)")]
    WrapViolated { first: i64, last: i64 },
    /// Two values live on different cylinders.
    #[error("cylinder parameters differ")]
    ParamsMismatch,
    /// The inner partition of a skew shape is not contained in the outer one.
    #[error("inner partition is not contained in the outer partition")]
    NotContained,
    /// A regular partition has more than `k` nonzero parts.
    #[error("regular partition has {parts} parts but k={k}")]
    TooManyParts { parts: usize, k: usize },
    /// A regular partition's first part exceeds `n - k`.
    #[error("regular partition part {part} exceeds n - k = {width}")]
    PartTooWide { part: u32, width: i64 },
    /// A regular partition is not weakly decreasing.
    #[error("regular partition is not weakly decreasing")]
    NotAPartition,
}

/// The pair `(k, n)` fixing the cylinder `C_{k,n}`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CylParams {
    k: usize,
    n: usize,
}

impl CylParams {
    /// Creates parameters, rejecting `k = 0` and `n ≤ k`.
    pub fn new(k: usize, n: usize) -> Result<Self, GeometryError> {
        if k == 0 || n <= k {
            return Err(GeometryError::InvalidParams { k, n });
        }
        Ok(CylParams { k, n })
    }

    /// Vertical period.
    pub fn k(&self) -> usize {
        self.k
    }

    /// Total period parameter.
    pub fn n(&self) -> usize {
        self.n
    }

    /// Horizontal period `n - k`.
    pub fn width(&self) -> i64 {
        (self.n - self.k) as i64
    }

    fn ki(&self) -> i64 {
        self.k as i64
    }
}

/// A point of the integer plane: `x` is the plane row, `y` the plane column.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Point {
    pub x: i64,
    pub y: i64,
}

impl Point {
    pub fn new(x: i64, y: i64) -> Self {
        Point { x, y }
    }

    /// Translates the point by `m` copies of the cylinder shift `(-k, n-k)`.
    pub fn shifted(self, params: CylParams, m: i64) -> Point {
        Point::new(self.x - m * params.ki(), self.y + m * params.width())
    }

    /// The route order on points: `P ≤ Q` iff `P` is in a higher plane row
    /// than `Q`, or in the same row and weakly to the right of `Q`.
    pub fn route_cmp(&self, other: &Point) -> Ordering {
        self.x.cmp(&other.x).then(other.y.cmp(&self.y))
    }

    /// Strict form of [`Point::route_cmp`].
    pub fn route_lt(&self, other: &Point) -> bool {
        self.route_cmp(other) == Ordering::Less
    }
}

impl fmt::Display for Point {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.x, self.y)
    }
}

/// A box of the cylinder, stored with its canonical row in `[0, k)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CylBox {
    pub row: usize,
    pub col: i64,
}

impl CylBox {
    pub fn new(row: usize, col: i64) -> Self {
        CylBox { row, col }
    }
}

impl fmt::Display for CylBox {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Box({},{})", self.row, self.col)
    }
}

/// Projects a plane point onto its canonical box.
pub fn project(p: Point, params: CylParams) -> CylBox {
    let m = p.x.div_euclid(params.ki());
    let q = p.shifted(params, m);
    CylBox::new(q.x as usize, q.y)
}

/// Returns the point of the box's preimage that lies in `plane_row`.
pub fn lift(b: CylBox, plane_row: i64, params: CylParams) -> Result<Point, GeometryError> {
    let diff = plane_row - b.row as i64;
    if diff.rem_euclid(params.ki()) != 0 {
        return Err(GeometryError::RowNotCongruent { row: b.row, plane_row });
    }
    Ok(Point::new(b.row as i64, b.col).shifted(params, -diff / params.ki()))
}

/// Rotates a box by 180°: the image of `(x, y)` is `(-x, -y)`.
pub fn flip_box(b: CylBox, params: CylParams) -> CylBox {
    project(Point::new(-(b.row as i64), -b.col), params)
}

/// A cylindric partition, stored as one window `λ_0, …, λ_{k-1}`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CylPartition {
    params: CylParams,
    window: Vec<i64>,
}

impl CylPartition {
    /// Validates a window: `λ_0 ≥ … ≥ λ_{k-1} ≥ λ_0 - (n - k)`.
    pub fn new(params: CylParams, window: Vec<i64>) -> Result<Self, GeometryError> {
        if window.len() != params.k {
            return Err(GeometryError::WindowLength { len: window.len(), k: params.k });
        }
        if let Some(index) = window.windows(2).position(|w| w[0] < w[1]) {
            return Err(GeometryError::WindowNotDecreasing { index });
        }
        let (first, last) = (window[0], window[params.k - 1]);
        if last < first - params.width() {
            return Err(GeometryError::WrapViolated { first, last });
        }
        Ok(CylPartition { params, window })
    }

    pub fn params(&self) -> CylParams {
        self.params
    }

    pub fn window(&self) -> &[i64] {
        &self.window
    }

    /// `λ_m` for any integer `m`.
    pub fn value(&self, m: i64) -> i64 {
        window_value(self.params, &self.window, m)
    }

    /// Whether the plane point lies in the partition (`y ≤ λ_x`).
    pub fn contains_point(&self, p: Point) -> bool {
        p.y <= self.value(p.x)
    }

    /// Whether the box lies in the partition.
    pub fn contains_box(&self, b: CylBox) -> bool {
        b.col <= self.window[b.row]
    }

    /// Whether `self ⊆ other`, i.e. `self_m ≤ other_m` for every `m`.
    pub fn is_contained_in(&self, other: &CylPartition) -> Result<bool, GeometryError> {
        if self.params != other.params {
            return Err(GeometryError::ParamsMismatch);
        }
        Ok(self.window.iter().zip(&other.window).all(|(a, b)| a <= b))
    }

    /// The 180° rotation: `(Flip λ)_m = -1 - λ_{-m}`.
    pub fn flip(&self) -> CylPartition {
        let window = (0..self.params.ki()).map(|i| -1 - self.value(-i)).collect();
        CylPartition { params: self.params, window }
    }
}

/// `λ_m` computed from a raw window (used by partially built shapes too).
pub(crate) fn window_value(params: CylParams, window: &[i64], m: i64) -> i64 {
    let k = params.ki();
    window[m.rem_euclid(k) as usize] - m.div_euclid(k) * params.width()
}

/// Whether `inner ⊆ outer` holds.
pub fn partition_contains(inner: &CylPartition, outer: &CylPartition) -> Result<bool, GeometryError> {
    inner.is_contained_in(outer)
}

/// A skew shape `λ/μ`: the ordered pair of partitions, not just its box set.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SkewShape {
    outer: CylPartition,
    inner: CylPartition,
}

impl SkewShape {
    /// Builds `outer / inner`, requiring equal parameters and `inner ⊆ outer`.
    pub fn new(outer: CylPartition, inner: CylPartition) -> Result<Self, GeometryError> {
        if !inner.is_contained_in(&outer)? {
            return Err(GeometryError::NotContained);
        }
        Ok(SkewShape { outer, inner })
    }

    /// The empty shape `α/α`.
    pub fn empty(alpha: CylPartition) -> Self {
        SkewShape { outer: alpha.clone(), inner: alpha }
    }

    pub fn outer(&self) -> &CylPartition {
        &self.outer
    }

    pub fn inner(&self) -> &CylPartition {
        &self.inner
    }

    pub fn params(&self) -> CylParams {
        self.outer.params
    }

    /// Number of boxes, `Σ_i (λ_i - μ_i)`.
    pub fn size(&self) -> usize {
        self.outer.window.iter().zip(&self.inner.window).map(|(l, m)| (l - m) as usize).sum()
    }

    /// Number of boxes in canonical row `r`.
    pub fn row_len(&self, r: usize) -> usize {
        (self.outer.window[r] - self.inner.window[r]) as usize
    }

    /// The boxes of the shape in row-major order.
    pub fn boxes(&self) -> Vec<CylBox> {
        (0..self.params().k)
            .flat_map(|r| (self.inner.window[r] + 1..=self.outer.window[r]).map(move |c| CylBox::new(r, c)))
            .collect()
    }

    /// Whether the box lies in `λ/μ`.
    pub fn contains_box(&self, b: CylBox) -> bool {
        self.outer.contains_box(b) && !self.inner.contains_box(b)
    }

    /// Whether the plane point lies in `λ/μ`.
    pub fn contains_point(&self, p: Point) -> bool {
        self.outer.contains_point(p) && !self.inner.contains_point(p)
    }

    /// `λ_i ≥ μ_i ≥ λ_{i+1}` for every `i`: no two boxes share a column.
    pub fn is_horizontal_strip(&self) -> bool {
        (0..self.params().ki()).all(|i| self.inner.value(i) >= self.outer.value(i + 1))
    }

    /// `Flip(λ/μ) = Flip(μ)/Flip(λ)`.
    pub fn flip(&self) -> SkewShape {
        SkewShape { outer: self.inner.flip(), inner: self.outer.flip() }
    }
}

/// Embeds a regular partition as a cylindric one by padding with zeros.
pub fn cyl_embed(parts: &[u32], params: CylParams) -> Result<CylPartition, GeometryError> {
    if parts.windows(2).any(|w| w[0] < w[1]) {
        return Err(GeometryError::NotAPartition);
    }
    let nonzero: Vec<u32> = parts.iter().copied().filter(|&p| p > 0).collect();
    if nonzero.len() > params.k {
        return Err(GeometryError::TooManyParts { parts: nonzero.len(), k: params.k });
    }
    if let Some(&first) = nonzero.first() {
        if i64::from(first) > params.width() {
            return Err(GeometryError::PartTooWide { part: first, width: params.width() });
        }
    }
    let mut window: Vec<i64> = nonzero.iter().map(|&p| i64::from(p)).collect();
    window.resize(params.k, 0);
    CylPartition::new(params, window)
}
