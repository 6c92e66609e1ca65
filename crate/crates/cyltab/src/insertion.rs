//! Types shared by forward and reverse insertion: the mutable working state,
//! insertion queues, bumping routes and the per-row event log.

use std::collections::VecDeque;

use thiserror::Error;

use crate::geometry::{lift, window_value, CylBox, CylParams, CylPartition, GeometryError, Point, SkewShape};
use crate::tableau::{CylTableau, Letter, TableauError};

/// A violated precondition of a multi-insertion.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Precondition {
    /// The box set lists a box twice.
    DuplicateBox,
    /// A box row is outside `[0, k)`.
    RowOutOfRange,
    /// Forward: a box already lies in the inner shape.
    OverlapsInner,
    /// Reverse: a box lies outside the outer shape.
    OutsideOuter,
    /// The enlarged inner (or reduced outer) shape is not a cylindric partition.
    NotAPartition,
    /// The boxes do not form a horizontal strip.
    NotHorizontalStrip,
}

impl std::fmt::Display for Precondition {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let s = match self {
            Precondition::DuplicateBox => "box set contains a duplicate",
            Precondition::RowOutOfRange => "box row outside [0, k)",
            Precondition::OverlapsInner => "box set meets the inner shape",
            Precondition::OutsideOuter => "box set leaves the outer shape",
            Precondition::NotAPartition => "resulting boundary is not a cylindric partition",
            Precondition::NotHorizontalStrip => "box set is not a horizontal strip",
        };
        f.write_str(s)
    }
}

/// Errors raised by insertion algorithms.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum InsertionError {
    #[error("{0} is not an inside cocorner")]
    NotInsideCocorner(CylBox),
    #[error("{0} is not an outside corner")]
    NotOutsideCorner(CylBox),
    #[error("insertion queue is not regular")]
    QueueNotRegular,
    #[error("insertion queue is not reverse-regular")]
    QueueNotReverseRegular,
    #[error("queue row {0} is outside [0, k)")]
    QueueRowOutOfRange(usize),
    #[error("precondition violated: {0}")]
    PreconditionViolated(Precondition),
    #[error(transparent)]
    Tableau(#[from] TableauError),
    #[error(transparent)]
    Geometry(#[from] GeometryError),
}

/// One pending insertion: the letter and the canonical row it enters.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct QueueItem {
    pub letter: Letter,
    pub row: usize,
    /// Route bookkeeping: the route index and the plane row being entered.
    pub(crate) tag: Option<(usize, i64)>,
}

impl QueueItem {
    pub fn new(letter: Letter, row: usize) -> Self {
        QueueItem { letter, row, tag: None }
    }
}

/// A first-in-first-out queue of `(letter, row)` pairs.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct InsertionQueue {
    items: VecDeque<QueueItem>,
}

impl InsertionQueue {
    pub fn new() -> Self {
        Self::default()
    }

    /// Builds an untagged queue from `(letter, row)` pairs.
    pub fn from_pairs(pairs: &[(Letter, usize)]) -> Self {
        InsertionQueue { items: pairs.iter().map(|&(a, r)| QueueItem::new(a, r)).collect() }
    }

    pub fn push(&mut self, item: QueueItem) {
        self.items.push_back(item);
    }

    pub fn len(&self) -> usize {
        self.items.len()
    }

    pub fn is_empty(&self) -> bool {
        self.items.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = &QueueItem> {
        self.items.iter()
    }

    /// The queue contents as `(letter, row)` pairs.
    pub fn pairs(&self) -> Vec<(Letter, usize)> {
        self.items.iter().map(|q| (q.letter, q.row)).collect()
    }

    /// Regular: within each row, letters appear in weakly increasing order.
    pub fn is_regular(&self) -> bool {
        self.row_monotone(|prev, next| prev <= next)
    }

    /// Reverse-regular: within each row, letters appear in weakly decreasing order.
    pub fn is_reverse_regular(&self) -> bool {
        self.row_monotone(|prev, next| prev >= next)
    }

    fn row_monotone(&self, ok: impl Fn(Letter, Letter) -> bool) -> bool {
        let mut last: std::collections::HashMap<usize, Letter> = Default::default();
        self.items.iter().all(|q| {
            let fine = last.get(&q.row).map_or(true, |&p| ok(p, q.letter));
            last.insert(q.row, q.letter);
            fine
        })
    }

    pub(crate) fn into_items(self) -> VecDeque<QueueItem> {
        self.items
    }
}

/// The chain of plane points visited by one insertion chain.
///
/// `points[0]` is the canonical lift (plane row in `[0, k)`) of `origin`;
/// consecutive points lie in consecutive plane rows.  `steps[i]` is the
/// position in the run's event log of the event that produced `points[i]`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct BumpingRoute {
    pub origin: CylBox,
    pub points: Vec<Point>,
    pub steps: Vec<usize>,
}

impl BumpingRoute {
    pub(crate) fn start(origin: CylBox, step: usize) -> Self {
        BumpingRoute { origin, points: vec![Point::new(origin.row as i64, origin.col)], steps: vec![step] }
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn first(&self) -> Point {
        self.points[0]
    }

    pub fn last(&self) -> Point {
        *self.points.last().expect("routes are nonempty")
    }

    /// The route point in plane row `x`, if the route visits that row.
    pub fn at_row(&self, x: i64) -> Option<(Point, usize)> {
        self.points.iter().zip(&self.steps).find(|(p, _)| p.x == x).map(|(p, s)| (*p, *s))
    }

    /// The same route translated by `m` cylinder shifts.
    pub fn shifted(&self, params: CylParams, m: i64) -> BumpingRoute {
        BumpingRoute {
            origin: self.origin,
            points: self.points.iter().map(|p| p.shifted(params, m)).collect(),
            steps: self.steps.clone(),
        }
    }
}

/// What happened to a row during one step of a multi-insertion.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum EventKind {
    /// A box of the inserted set was removed from the row while seeding.
    Seeded { removed: Letter },
    /// A box of the inserted set was absorbed with no entry moving.
    Degenerate,
    /// `inserted` displaced `removed`.
    Bumped { inserted: Letter, removed: Letter },
    /// `inserted` landed, changing the row's extent.
    Landed { inserted: Letter },
}

/// One logged event; the event's position in the log is its time stamp.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct RowEvent {
    pub row: usize,
    pub kind: EventKind,
}

/// Partial tableau used while a multi-insertion is in progress: the entry
/// rows and both boundary windows, which need not be partitions mid-run.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InsertionState {
    params: CylParams,
    pub(crate) outer: Vec<i64>,
    pub(crate) inner: Vec<i64>,
    pub(crate) rows: Vec<VecDeque<Letter>>,
}

impl InsertionState {
    pub fn from_tableau(t: &CylTableau) -> Self {
        InsertionState {
            params: t.params(),
            outer: t.shape().outer().window().to_vec(),
            inner: t.shape().inner().window().to_vec(),
            rows: t.rows().iter().map(|r| r.iter().copied().collect()).collect(),
        }
    }

    pub fn params(&self) -> CylParams {
        self.params
    }

    pub fn outer(&self) -> &[i64] {
        &self.outer
    }

    pub fn inner(&self) -> &[i64] {
        &self.inner
    }

    /// Entry rows, each left to right.
    pub fn rows(&self) -> Vec<Vec<Letter>> {
        self.rows.iter().map(|r| r.iter().copied().collect()).collect()
    }

    /// Validates the state as a semistandard tableau.
    pub fn to_tableau(&self) -> Result<CylTableau, InsertionError> {
        let shape = SkewShape::new(
            CylPartition::new(self.params, self.outer.clone())?,
            CylPartition::new(self.params, self.inner.clone())?,
        )?;
        Ok(CylTableau::new(shape, self.rows())?)
    }

    pub(crate) fn inner_value(&self, m: i64) -> i64 {
        window_value(self.params, &self.inner, m)
    }

    pub(crate) fn outer_value(&self, m: i64) -> i64 {
        window_value(self.params, &self.outer, m)
    }
}

/// Collects routes and events during a tracked run.
#[derive(Debug, Default)]
pub(crate) struct Tracker {
    pub routes: Vec<BumpingRoute>,
    pub events: Vec<RowEvent>,
}

impl Tracker {
    pub fn log(&mut self, row: usize, kind: EventKind) -> usize {
        self.events.push(RowEvent { row, kind });
        self.events.len() - 1
    }

    /// Extends route `tag.0` with box `(row, col)` lifted to plane row `tag.1`.
    pub fn extend(&mut self, params: CylParams, tag: Option<(usize, i64)>, row: usize, col: i64, step: usize) {
        if let Some((route, plane)) = tag {
            let p = lift(CylBox::new(row, col), plane, params).expect("tag rows are congruent");
            self.routes[route].points.push(p);
            self.routes[route].steps.push(step);
        }
    }
}

/// Groups a box set by row after checking rows and duplicates; each row's
/// columns are sorted ascending.
pub(crate) fn boxes_by_row(params: CylParams, s: &[CylBox]) -> Result<Vec<Vec<i64>>, InsertionError> {
    let mut by_row = vec![Vec::new(); params.k()];
    for b in s {
        if b.row >= params.k() {
            return Err(InsertionError::PreconditionViolated(Precondition::RowOutOfRange));
        }
        by_row[b.row].push(b.col);
    }
    for cols in &mut by_row {
        cols.sort_unstable();
        if cols.windows(2).any(|w| w[0] == w[1]) {
            return Err(InsertionError::PreconditionViolated(Precondition::DuplicateBox));
        }
    }
    Ok(by_row)
}

/// Rejects queue items whose row is not canonical.
pub(crate) fn check_queue_rows(params: CylParams, q: &InsertionQueue) -> Result<(), InsertionError> {
    match q.iter().find(|item| item.row >= params.k()) {
        Some(item) => Err(InsertionError::QueueRowOutOfRange(item.row)),
        None => Ok(()),
    }
}
