//! Reverse insertion: reverse row-insertion, reverse one-step and full
//! multi-insertion, reverse routes and the reverse new set.
//!
//! Everything mirrors the forward algorithms: entries move up instead of
//! down, replace the rightmost strictly smaller entry, and land at the right
//! end of the inner shape, shrinking it.

use crate::geometry::{lift, CylBox, CylPartition};
use crate::insertion::{
    boxes_by_row, check_queue_rows, BumpingRoute, EventKind, InsertionError, InsertionQueue, InsertionState,
    Precondition, QueueItem, RowEvent, Tracker,
};
use crate::tableau::CylTableau;

/// Outcome of a reverse full multi-insertion.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ReverseMultiResult {
    pub tableau: CylTableau,
    /// Boxes lost by the inner shape, row-major; always a horizontal strip.
    pub reverse_new_set: Vec<CylBox>,
    /// One route per removed box, sorted by the box; plane rows decrease.
    pub routes: Vec<BumpingRoute>,
    pub events: Vec<RowEvent>,
    pub rounds: usize,
}

/// Reverse-inserts from the outside corner `b`.
pub fn reverse_insert(t: &CylTableau, b: CylBox) -> Result<(CylTableau, BumpingRoute), InsertionError> {
    let params = t.params();
    let k = params.k() as i64;
    let mut st = InsertionState::from_tableau(t);
    let r = b.row;
    if r >= params.k() || b.col != st.outer[r] || st.outer_value(r as i64 + 1) >= b.col {
        return Err(InsertionError::NotOutsideCorner(b));
    }
    let mut route = BumpingRoute::start(b, 0);
    st.outer[r] -= 1;
    if b.col <= st.inner[r] {
        st.inner[r] = st.outer[r];
        return Ok((st.to_tableau()?, route));
    }
    let mut x = st.rows[r].pop_back().expect("box lies in the shape");
    let mut plane = r as i64 - 1;
    loop {
        let rr = plane.rem_euclid(k) as usize;
        let row = &mut st.rows[rr];
        let (col, landed) = match row.iter().rposition(|&e| e < x) {
            None => {
                row.push_front(x);
                st.inner[rr] -= 1;
                (st.inner[rr] + 1, true)
            }
            Some(i) => {
                x = std::mem::replace(&mut row[i], x);
                (st.inner[rr] + 1 + i as i64, false)
            }
        };
        route.points.push(lift(CylBox::new(rr, col), plane, params)?);
        route.steps.push(route.steps.len());
        if landed {
            break;
        }
        plane -= 1;
    }
    Ok((st.to_tableau()?, route))
}

/// Checks the preconditions of [`reverse_full_multi`].
fn check_reverse(st: &InsertionState, s: &[CylBox]) -> Result<Vec<Vec<i64>>, InsertionError> {
    let params = st.params();
    let by_row = boxes_by_row(params, s)?;
    let mut shrunk = st.outer.clone();
    for (r, cols) in by_row.iter().enumerate() {
        if cols.iter().any(|&c| c > st.outer[r]) {
            return Err(InsertionError::PreconditionViolated(Precondition::OutsideOuter));
        }
        let start = st.outer[r] - cols.len() as i64 + 1;
        if cols.iter().enumerate().any(|(i, &c)| c != start + i as i64) {
            return Err(InsertionError::PreconditionViolated(Precondition::NotAPartition));
        }
        shrunk[r] -= cols.len() as i64;
    }
    let shrunk = CylPartition::new(params, shrunk)
        .map_err(|_| InsertionError::PreconditionViolated(Precondition::NotAPartition))?;
    if (0..params.k() as i64).any(|i| shrunk.value(i) < st.outer_value(i + 1)) {
        return Err(InsertionError::PreconditionViolated(Precondition::NotHorizontalStrip));
    }
    Ok(by_row)
}

/// Removes the boxes from the outer shape, plane rows `seed_row` down to
/// `seed_row - k + 1`, right to left within a row.
fn seed(st: &mut InsertionState, by_row: &[Vec<i64>], seed_row: i64, tr: &mut Tracker) -> InsertionQueue {
    let k = st.params().k() as i64;
    let mut q = InsertionQueue::new();
    for h in (seed_row - k + 1..=seed_row).rev() {
        let r = h.rem_euclid(k) as usize;
        for &col in by_row[r].iter().rev() {
            let origin = CylBox::new(r, col);
            if col > st.inner[r] {
                let x = st.rows[r].pop_back().expect("box lies in the shape");
                st.outer[r] -= 1;
                let step = tr.log(r, EventKind::Seeded { removed: x });
                tr.routes.push(BumpingRoute::start(origin, step));
                let tag = Some((tr.routes.len() - 1, r as i64 - 1));
                q.push(QueueItem { letter: x, row: (r as i64 - 1).rem_euclid(k) as usize, tag });
            } else {
                st.inner[r] = col - 1;
                st.outer[r] = col - 1;
                let step = tr.log(r, EventKind::Degenerate);
                tr.routes.push(BumpingRoute::start(origin, step));
            }
        }
    }
    q
}

/// One reverse round: each letter lands at the left end of its row when it
/// is at most every entry, else replaces the rightmost strictly smaller
/// entry, which moves to the previous row.
fn step(st: &mut InsertionState, q: InsertionQueue, tr: &mut Tracker) -> InsertionQueue {
    let params = st.params();
    let k = params.k() as i64;
    let mut out = InsertionQueue::new();
    for item in q.into_items() {
        let (x, r) = (item.letter, item.row);
        let row = &mut st.rows[r];
        match row.iter().rposition(|&e| e < x) {
            None => {
                row.push_front(x);
                let col = st.inner[r];
                st.inner[r] -= 1;
                let step = tr.log(r, EventKind::Landed { inserted: x });
                tr.extend(params, item.tag, r, col, step);
            }
            Some(i) => {
                let removed = std::mem::replace(&mut row[i], x);
                let step = tr.log(r, EventKind::Bumped { inserted: x, removed });
                tr.extend(params, item.tag, r, st.inner[r] + 1 + i as i64, step);
                let tag = item.tag.map(|(route, plane)| (route, plane - 1));
                out.push(QueueItem { letter: removed, row: (r as i64 - 1).rem_euclid(k) as usize, tag });
            }
        }
    }
    out
}

fn strip_tags(q: InsertionQueue) -> InsertionQueue {
    InsertionQueue::from_pairs(&q.pairs())
}

/// Seeds the queue of a reverse full multi-insertion without running it.
pub fn reverse_seed_queue(
    t: &CylTableau,
    s: &[CylBox],
    seed_row: i64,
) -> Result<(InsertionState, InsertionQueue), InsertionError> {
    let mut st = InsertionState::from_tableau(t);
    let by_row = check_reverse(&st, s)?;
    let q = seed(&mut st, &by_row, seed_row, &mut Tracker::default());
    Ok((st, strip_tags(q)))
}

/// Reverse one-step multi-insertion on a partial state.
pub fn reverse_one_step_multi(
    mut state: InsertionState,
    q: InsertionQueue,
) -> Result<(InsertionState, InsertionQueue), InsertionError> {
    check_queue_rows(state.params(), &q)?;
    if !q.is_reverse_regular() {
        return Err(InsertionError::QueueNotReverseRegular);
    }
    let out = step(&mut state, strip_tags(q), &mut Tracker::default());
    Ok((state, out))
}

/// Reverse full multi-insertion of the box set `s` (seed row 0).
pub fn reverse_full_multi(t: &CylTableau, s: &[CylBox]) -> Result<ReverseMultiResult, InsertionError> {
    reverse_full_multi_from_row(t, s, 0)
}

/// Reverse full multi-insertion seeded from plane row `seed_row`.
pub fn reverse_full_multi_from_row(
    t: &CylTableau,
    s: &[CylBox],
    seed_row: i64,
) -> Result<ReverseMultiResult, InsertionError> {
    let mut st = InsertionState::from_tableau(t);
    let by_row = check_reverse(&st, s)?;
    let mut tr = Tracker::default();
    let mut q = seed(&mut st, &by_row, seed_row, &mut tr);
    let mut rounds = 0;
    while !q.is_empty() {
        q = step(&mut st, q, &mut tr);
        rounds += 1;
    }
    let tableau = st.to_tableau()?;
    let old = t.shape().inner().window();
    let reverse_new_set =
        (0..t.params().k()).flat_map(|r| (st.inner[r] + 1..=old[r]).map(move |c| CylBox::new(r, c))).collect();
    let mut routes = tr.routes;
    routes.sort_by_key(|rt| rt.origin);
    Ok(ReverseMultiResult { tableau, reverse_new_set, routes, events: tr.events, rounds })
}
