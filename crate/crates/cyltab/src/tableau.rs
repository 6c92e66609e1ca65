//! Semistandard cylindric tableaux.
//!
//! A [`CylTableau`] fills a skew shape `λ/μ` with positive integers so that
//! rows weakly increase left to right and columns strictly increase top to
//! bottom, both read in the periodic plane picture.  Row `r` stores the
//! entries of columns `μ_r + 1 ..= λ_r` from left to right.

use std::collections::BTreeMap;
use std::fmt;

use thiserror::Error;

use crate::geometry::{flip_box, project, CylBox, CylParams, GeometryError, Point, SkewShape};

/// A letter of the alphabet: a positive integer.
pub type Letter = u32;

/// Errors raised by tableau validation and transformation.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TableauError {
    #[error("expected {expected} rows, found {found}")]
    RowCountMismatch { expected: usize, found: usize },
    #[error("row {row} has {found} entries, shape requires {expected}")]
    RowLengthMismatch { row: usize, expected: usize, found: usize },
    #[error("row {row} contains the non-positive letter 0")]
    NonPositiveLetter { row: usize },
    #[error("row {row} decreases at column {col}")]
    RowNotWeaklyIncreasing { row: usize, col: i64 },
    #[error("column {col} does not strictly increase below row {row}")]
    ColumnNotStrictlyIncreasing { row: usize, col: i64 },
    #[error("letter {letter} exceeds the alphabet bound {bound}")]
    LetterOutOfAlphabet { letter: Letter, bound: Letter },
    #[error(transparent)]
    Geometry(#[from] GeometryError),
}

/// A semistandard cylindric tableau.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CylTableau {
    shape: SkewShape,
    rows: Vec<Vec<Letter>>,
}

/// Letter multiplicities of a tableau.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash)]
pub struct Weight(pub BTreeMap<Letter, usize>);

impl Weight {
    /// Total number of letters counted.
    pub fn total(&self) -> usize {
        self.0.values().sum()
    }

    /// Dense vector `(w_1, …, w_m)` where `m` is the largest letter present.
    pub fn to_vec(&self) -> Vec<usize> {
        let max = self.0.keys().next_back().copied().unwrap_or(0);
        (1..=max).map(|a| self.0.get(&a).copied().unwrap_or(0)).collect()
    }
}

/// A monomial `x_1^{e_1} x_2^{e_2} …`, stored sparsely.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash)]
pub struct Monomial(pub BTreeMap<Letter, usize>);

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "1");
        }
        let parts: Vec<String> =
            self.0.iter().map(|(v, e)| if *e == 1 { format!("x{v}") } else { format!("x{v}^{e}") }).collect();
        write!(f, "{}", parts.join("*"))
    }
}

impl CylTableau {
    /// Validates a filling of `shape` (conditions (a) and (b) of semistandardness).
    pub fn new(shape: SkewShape, rows: Vec<Vec<Letter>>) -> Result<Self, TableauError> {
        let k = shape.params().k();
        if rows.len() != k {
            return Err(TableauError::RowCountMismatch { expected: k, found: rows.len() });
        }
        for (r, row) in rows.iter().enumerate() {
            let expected = shape.row_len(r);
            if row.len() != expected {
                return Err(TableauError::RowLengthMismatch { row: r, expected, found: row.len() });
            }
            if row.contains(&0) {
                return Err(TableauError::NonPositiveLetter { row: r });
            }
        }
        let t = CylTableau { shape, rows };
        t.check_order()?;
        Ok(t)
    }

    /// The empty tableau on `α/α`.
    pub fn empty(alpha: crate::geometry::CylPartition) -> Self {
        let k = alpha.params().k();
        CylTableau { shape: SkewShape::empty(alpha), rows: vec![Vec::new(); k] }
    }

    /// Builds a tableau without validation; callers guarantee semistandardness.
    pub(crate) fn from_parts_unchecked(shape: SkewShape, rows: Vec<Vec<Letter>>) -> Self {
        CylTableau { shape, rows }
    }

    fn check_order(&self) -> Result<(), TableauError> {
        let params = self.params();
        for (r, row) in self.rows.iter().enumerate() {
            let start = self.shape.inner().window()[r] + 1;
            if let Some(i) = row.windows(2).position(|w| w[0] > w[1]) {
                return Err(TableauError::RowNotWeaklyIncreasing { row: r, col: start + i as i64 + 1 });
            }
            for (i, &a) in row.iter().enumerate() {
                let col = start + i as i64;
                let below = project(Point::new(r as i64 + 1, col), params);
                if let Some(b) = self.entry(below) {
                    if a >= b {
                        return Err(TableauError::ColumnNotStrictlyIncreasing { row: r, col });
                    }
                }
            }
        }
        Ok(())
    }

    pub fn shape(&self) -> &SkewShape {
        &self.shape
    }

    pub fn params(&self) -> CylParams {
        self.shape.params()
    }

    pub fn rows(&self) -> &[Vec<Letter>] {
        &self.rows
    }

    pub fn into_parts(self) -> (SkewShape, Vec<Vec<Letter>>) {
        (self.shape, self.rows)
    }

    /// Number of boxes.
    pub fn size(&self) -> usize {
        self.rows.iter().map(Vec::len).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.size() == 0
    }

    /// The entry in box `b`, if `b` belongs to the shape.
    pub fn entry(&self, b: CylBox) -> Option<Letter> {
        let start = self.shape.inner().window()[b.row] + 1;
        let i = b.col - start;
        if i < 0 {
            return None;
        }
        self.rows[b.row].get(i as usize).copied()
    }

    /// The entry at a plane point, if the point lies in the shape.
    pub fn entry_at(&self, p: Point) -> Option<Letter> {
        self.entry(project(p, self.params()))
    }

    /// Boxes paired with their entries, row-major.
    pub fn cells(&self) -> Vec<(CylBox, Letter)> {
        self.shape.boxes().into_iter().map(|b| (b, self.entry(b).expect("box in shape"))).collect()
    }

    /// Boxes holding the letter `a`.
    pub fn boxes_with(&self, a: Letter) -> Vec<CylBox> {
        self.cells().into_iter().filter(|&(_, e)| e == a).map(|(b, _)| b).collect()
    }

    /// The distinct letters present, ascending.
    pub fn letters(&self) -> Vec<Letter> {
        self.weight().0.keys().copied().collect()
    }

    /// The largest letter present (0 for the empty tableau).
    pub fn max_letter(&self) -> Letter {
        self.rows.iter().flatten().copied().max().unwrap_or(0)
    }

    /// Letter multiplicities.
    pub fn weight(&self) -> Weight {
        let mut w = BTreeMap::new();
        for &a in self.rows.iter().flatten() {
            *w.entry(a).or_insert(0) += 1;
        }
        Weight(w)
    }

    /// The weight monomial `x^{wt}`.
    pub fn weight_monomial(&self) -> Monomial {
        Monomial(self.weight().0)
    }

    /// Whether the letters are exactly `1..=m`, each once, with `m` the box count.
    pub fn is_standard(&self) -> bool {
        let mut letters: Vec<Letter> = self.rows.iter().flatten().copied().collect();
        letters.sort_unstable();
        letters.iter().enumerate().all(|(i, &a)| a as usize == i + 1)
    }

    /// Rotates the tableau by 180° and reverses the alphabet `1..=bound`
    /// via `a ↦ bound + 1 - a`.
    pub fn flip(&self, bound: Letter) -> Result<CylTableau, TableauError> {
        if let Some(&a) = self.rows.iter().flatten().find(|&&a| a > bound) {
            return Err(TableauError::LetterOutOfAlphabet { letter: a, bound });
        }
        let params = self.params();
        let shape = self.shape.flip();
        let image: BTreeMap<CylBox, Letter> =
            self.cells().into_iter().map(|(b, a)| (flip_box(b, params), bound + 1 - a)).collect();
        let mut rows = vec![Vec::new(); params.k()];
        for b in shape.boxes() {
            rows[b.row].push(image[&b]);
        }
        Ok(CylTableau { shape, rows })
    }

    /// The word of the tableau: row 0, then rows `k-1, k-2, …, 1`, each read
    /// left to right.  This is the bottom-to-top reading of the drawn window
    /// whose lowest row is the periodic copy of row 0.
    pub fn word(&self) -> Vec<Letter> {
        let k = self.rows.len();
        std::iter::once(0).chain((1..k).rev()).flat_map(|r| self.rows[r].iter().copied()).collect()
    }

    /// Moves every box one plane row down (a translate of the periodic picture).
    pub fn shift_down(&self) -> CylTableau {
        let params = self.params();
        let k = params.k() as i64;
        let roll = |p: &crate::geometry::CylPartition| {
            let w = (0..k).map(|i| p.value(i - 1)).collect();
            crate::geometry::CylPartition::new(params, w).expect("translate of a partition")
        };
        let shape = SkewShape::new(roll(self.shape.outer()), roll(self.shape.inner())).expect("translate of a shape");
        let mut rows = self.rows.clone();
        rows.rotate_right(1);
        CylTableau { shape, rows }
    }
}

/// Validates a filling; free-function form of [`CylTableau::new`].
pub fn tableau_validate(shape: SkewShape, rows: Vec<Vec<Letter>>) -> Result<CylTableau, TableauError> {
    CylTableau::new(shape, rows)
}
