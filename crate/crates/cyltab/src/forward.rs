//! Forward insertion: internal row-insertion, one-step multi-insertion and
//! full multi-insertion, with bumping-route tracking and the new set.

use crate::geometry::{lift, CylBox, CylPartition};
use crate::insertion::{
    boxes_by_row, check_queue_rows, BumpingRoute, EventKind, InsertionError, InsertionQueue, InsertionState,
    Precondition, QueueItem, RowEvent, Tracker,
};
use crate::tableau::CylTableau;

/// Outcome of a full multi-insertion.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MultiInsertResult {
    pub tableau: CylTableau,
    /// Boxes gained by the outer shape, row-major; always a horizontal strip.
    pub new_set: Vec<CylBox>,
    /// One route per inserted box, sorted by the box.
    pub routes: Vec<BumpingRoute>,
    /// Every seeding, bump and landing in execution order.
    pub events: Vec<RowEvent>,
    /// Number of one-step rounds executed after seeding.
    pub rounds: usize,
}

/// Inserts the entry of the inside cocorner `b` into the tableau.
///
/// The box joins the inner shape.  If `b` lies outside the outer shape it
/// joins that too and nothing moves; otherwise its entry bumps down row by
/// row, replacing the leftmost strictly greater entry, until it lands at the
/// end of a row.
pub fn internal_insert(t: &CylTableau, b: CylBox) -> Result<(CylTableau, BumpingRoute), InsertionError> {
    let params = t.params();
    let mut st = InsertionState::from_tableau(t);
    let r = b.row;
    if r >= params.k() || b.col != st.inner[r] + 1 || st.inner_value(r as i64 - 1) < b.col {
        return Err(InsertionError::NotInsideCocorner(b));
    }
    let mut route = BumpingRoute::start(b, 0);
    st.inner[r] += 1;
    if b.col > st.outer[r] {
        st.outer[r] = b.col;
        return Ok((st.to_tableau()?, route));
    }
    let mut x = st.rows[r].pop_front().expect("box lies in the shape");
    let mut plane = r as i64 + 1;
    loop {
        let rr = plane.rem_euclid(params.k() as i64) as usize;
        let row = &mut st.rows[rr];
        let (col, landed) = match row.iter().position(|&e| e > x) {
            None => {
                row.push_back(x);
                st.outer[rr] += 1;
                (st.outer[rr], true)
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
        plane += 1;
    }
    Ok((st.to_tableau()?, route))
}

/// Checks the preconditions of [`full_multi`] and returns the boxes by row.
fn check_forward(st: &InsertionState, s: &[CylBox]) -> Result<Vec<Vec<i64>>, InsertionError> {
    let params = st.params();
    let by_row = boxes_by_row(params, s)?;
    let mut grown = st.inner.clone();
    for (r, cols) in by_row.iter().enumerate() {
        if cols.iter().any(|&c| c <= st.inner[r]) {
            return Err(InsertionError::PreconditionViolated(Precondition::OverlapsInner));
        }
        if cols.iter().enumerate().any(|(i, &c)| c != st.inner[r] + 1 + i as i64) {
            return Err(InsertionError::PreconditionViolated(Precondition::NotAPartition));
        }
        grown[r] += cols.len() as i64;
    }
    let grown = CylPartition::new(params, grown)
        .map_err(|_| InsertionError::PreconditionViolated(Precondition::NotAPartition))?;
    if (0..params.k() as i64).any(|i| st.inner_value(i) < grown.value(i + 1)) {
        return Err(InsertionError::PreconditionViolated(Precondition::NotHorizontalStrip));
    }
    Ok(by_row)
}

/// Removes the boxes into the inner shape, plane rows `seed_row ..
/// seed_row + k`, left to right within a row, and returns the seeded queue.
fn seed(st: &mut InsertionState, by_row: &[Vec<i64>], seed_row: i64, tr: &mut Tracker) -> InsertionQueue {
    let k = st.params().k() as i64;
    let mut q = InsertionQueue::new();
    for h in seed_row..seed_row + k {
        let r = h.rem_euclid(k) as usize;
        for &col in &by_row[r] {
            let origin = CylBox::new(r, col);
            if col <= st.outer[r] {
                let x = st.rows[r].pop_front().expect("box lies in the shape");
                st.inner[r] += 1;
                let step = tr.log(r, EventKind::Seeded { removed: x });
                tr.routes.push(BumpingRoute::start(origin, step));
                let tag = Some((tr.routes.len() - 1, r as i64 + 1));
                q.push(QueueItem { letter: x, row: (r + 1) % k as usize, tag });
            } else {
                st.inner[r] = col;
                st.outer[r] = col;
                let step = tr.log(r, EventKind::Degenerate);
                tr.routes.push(BumpingRoute::start(origin, step));
            }
        }
    }
    q
}

/// One round: every queued letter either lands at the end of its row or
/// replaces the leftmost strictly greater entry, which moves to the next row.
fn step(st: &mut InsertionState, q: InsertionQueue, tr: &mut Tracker) -> InsertionQueue {
    let params = st.params();
    let k = params.k();
    let mut out = InsertionQueue::new();
    for item in q.into_items() {
        let (x, r) = (item.letter, item.row);
        let row = &mut st.rows[r];
        match row.iter().position(|&e| e > x) {
            None => {
                row.push_back(x);
                st.outer[r] += 1;
                let step = tr.log(r, EventKind::Landed { inserted: x });
                tr.extend(params, item.tag, r, st.outer[r], step);
            }
            Some(i) => {
                let removed = std::mem::replace(&mut row[i], x);
                let step = tr.log(r, EventKind::Bumped { inserted: x, removed });
                tr.extend(params, item.tag, r, st.inner[r] + 1 + i as i64, step);
                let tag = item.tag.map(|(route, plane)| (route, plane + 1));
                out.push(QueueItem { letter: removed, row: (r + 1) % k, tag });
            }
        }
    }
    out
}

/// Seeds the queue of a full multi-insertion without running it.
pub fn seed_queue(
    t: &CylTableau,
    s: &[CylBox],
    seed_row: i64,
) -> Result<(InsertionState, InsertionQueue), InsertionError> {
    let mut st = InsertionState::from_tableau(t);
    let by_row = check_forward(&st, s)?;
    let q = seed(&mut st, &by_row, seed_row, &mut Tracker::default());
    Ok((st, strip_tags(q)))
}

fn strip_tags(q: InsertionQueue) -> InsertionQueue {
    let pairs = q.pairs();
    InsertionQueue::from_pairs(&pairs)
}

/// One-step multi-insertion on a partial state with a regular queue.
pub fn one_step_multi(
    mut state: InsertionState,
    q: InsertionQueue,
) -> Result<(InsertionState, InsertionQueue), InsertionError> {
    check_queue_rows(state.params(), &q)?;
    if !q.is_regular() {
        return Err(InsertionError::QueueNotRegular);
    }
    let out = step(&mut state, strip_tags(q), &mut Tracker::default());
    Ok((state, out))
}

/// Full multi-insertion of the box set `s` (seed row 0).
pub fn full_multi(t: &CylTableau, s: &[CylBox]) -> Result<MultiInsertResult, InsertionError> {
    full_multi_from_row(t, s, 0)
}

/// Full multi-insertion seeded from plane row `seed_row`; the result does
/// not depend on the choice.
pub fn full_multi_from_row(t: &CylTableau, s: &[CylBox], seed_row: i64) -> Result<MultiInsertResult, InsertionError> {
    let mut st = InsertionState::from_tableau(t);
    let by_row = check_forward(&st, s)?;
    let mut tr = Tracker::default();
    let mut q = seed(&mut st, &by_row, seed_row, &mut tr);
    let mut rounds = 0;
    while !q.is_empty() {
        q = step(&mut st, q, &mut tr);
        rounds += 1;
    }
    let tableau = st.to_tableau()?;
    let old = t.shape().outer().window();
    let new_set =
        (0..t.params().k()).flat_map(|r| (old[r] + 1..=st.outer[r]).map(move |c| CylBox::new(r, c))).collect();
    let mut routes = tr.routes;
    routes.sort_by_key(|rt| rt.origin);
    Ok(MultiInsertResult { tableau, new_set, routes, events: tr.events, rounds })
}
