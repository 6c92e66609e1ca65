//! Property checkers shared by the sweep tests and the acceptance report.
//! Each returns `Err` with a description of the first violated property.

use cyltab::forward::full_multi_from_row;
use cyltab::insertion::{EventKind, RowEvent};
use cyltab::reverse::reverse_full_multi_from_row;
use cyltab::{
    flip_box, full_multi, internal_insert, project, reverse_full_multi, BumpingRoute, CylBox, CylParams, CylTableau,
    Point,
};

/// Number of shared-row route comparisons made, to show the lemma checks
/// are not vacuous.
pub static SHARED_ROW_COMPARISONS: std::sync::atomic::AtomicUsize = std::sync::atomic::AtomicUsize::new(0);

/// Alphabet bound used to flip tableaux in the sweeps.
pub const FLIP_BOUND: u32 = 3;

fn sorted(mut s: Vec<CylBox>) -> Vec<CylBox> {
    s.sort();
    s
}

fn describe(t: &CylTableau, s: &[CylBox]) -> String {
    format!(
        "k={} n={} inner={:?} outer={:?} rows={:?} s={:?}",
        t.params().k(),
        t.params().n(),
        t.shape().inner().window(),
        t.shape().outer().window(),
        t.rows(),
        s
    )
}

/// Translates a route so that its first point lies in plane rows `[0, k)`.
fn canonical(params: CylParams, points: &[Point]) -> Vec<Point> {
    let m = points[0].x.div_euclid(params.k() as i64);
    points.iter().map(|p| p.shifted(params, m)).collect()
}

fn rows_monotone(params: CylParams, events: &[RowEvent], increasing: bool) -> bool {
    let ok = |a: u32, b: u32| if increasing { a <= b } else { a >= b };
    (0..params.k()).all(|r| {
        let mine = events.iter().filter(|e| e.row == r);
        let removed: Vec<u32> = mine
            .clone()
            .filter_map(|e| match e.kind {
                EventKind::Seeded { removed } | EventKind::Bumped { removed, .. } => Some(removed),
                _ => None,
            })
            .collect();
        let inserted: Vec<u32> = mine
            .filter_map(|e| match e.kind {
                EventKind::Bumped { inserted, .. } | EventKind::Landed { inserted } => Some(inserted),
                _ => None,
            })
            .collect();
        removed.windows(2).all(|w| ok(w[0], w[1])) && inserted.windows(2).all(|w| ok(w[0], w[1]))
    })
}

/// Lifted-route checks of the row-bumping lemma and its corollaries, for
/// every pair of routes including translates by up to two cylinder shifts.
/// `forward` selects the conclusion: for forward routes with `G_1 < H_1`
/// the later-starting route `H` is strictly left in shared rows and got
/// there first; for reverse routes `H` is strictly left but `G` got there
/// first.
fn route_pairs(params: CylParams, routes: &[BumpingRoute], forward: bool) -> Result<(), String> {
    let mut boxes = std::collections::BTreeSet::new();
    for rt in routes {
        for p in &rt.points {
            if !boxes.insert(project(*p, params)) {
                return Err(format!("box {:?} lies on two routes", project(*p, params)));
            }
        }
    }
    for (i, g) in routes.iter().enumerate() {
        for (j, h0) in routes.iter().enumerate() {
            for m in -2..=2i64 {
                if i == j && m == 0 {
                    continue;
                }
                let h = h0.shifted(params, m);
                if !g.first().route_lt(&h.first()) {
                    continue;
                }
                if g.last().route_lt(&h.last()) != g.first().route_lt(&h.first()) {
                    return Err(format!("start/end order differs for routes {i} and {j} (shift {m})"));
                }
                for (gp, gs) in g.points.iter().zip(&g.steps) {
                    if h.points.contains(gp) {
                        return Err(format!("point {gp:?} shared by routes {i} and {j} (shift {m})"));
                    }
                    if let Some((hp, hs)) = h.at_row(gp.x) {
                        SHARED_ROW_COMPARISONS.fetch_add(1, std::sync::atomic::Ordering::Relaxed);
                        if hp.y >= gp.y {
                            return Err(format!("row {}: later route not strictly left ({i},{j},{m})", gp.x));
                        }
                        if forward && hs >= *gs {
                            return Err(format!("row {}: later route did not arrive first ({i},{j},{m})", gp.x));
                        }
                        if !forward && hs <= *gs {
                            return Err(format!("row {}: earlier route did not arrive first ({i},{j},{m})", gp.x));
                        }
                    }
                }
            }
        }
    }
    Ok(())
}

/// Which property groups an instance check covers.
#[derive(Debug, Clone, Copy)]
pub struct Groups {
    /// Inverse round trips, seed-row independence, Flip conjugation,
    /// agreement with internal insertion, termination.
    pub round_trip: bool,
    /// Route shape, the row-bumping lemma and its corollaries, new sets.
    pub bumping: bool,
}

pub const ALL: Groups = Groups { round_trip: true, bumping: true };

/// Checks forward-insertion properties on one instance `(t, s)`.
pub fn forward_instance(t: &CylTableau, s: &[CylBox], groups: Groups) -> Result<(), String> {
    let params = t.params();
    let ctx = || describe(t, s);
    let res = full_multi(t, s).map_err(|e| format!("full_multi failed: {e} on {}", ctx()))?;
    let back =
        reverse_full_multi(&res.tableau, &res.new_set).map_err(|e| format!("reverse failed: {e} on {}", ctx()))?;

    if groups.round_trip {
        if back.tableau != *t || sorted(back.reverse_new_set.clone()) != sorted(s.to_vec()) {
            return Err(format!("reverse(full_multi) is not the identity on {}", ctx()));
        }
        if res.new_set.len() != s.len() || res.tableau.weight() != t.weight() {
            return Err(format!("size or weight not preserved on {}", ctx()));
        }
        for r in 1..params.k() as i64 {
            let other = full_multi_from_row(t, s, r).map_err(|e| format!("seed row {r}: {e}"))?;
            if other.tableau != res.tableau || other.new_set != res.new_set {
                return Err(format!("seed row {r} changes the result on {}", ctx()));
            }
        }
        let bound = (t.size() + s.len()) * params.k() * t.max_letter().max(1) as usize;
        if res.rounds > bound.max(1) {
            return Err(format!("{} rounds exceed the bound {bound} on {}", res.rounds, ctx()));
        }
        let ft = t.flip(FLIP_BOUND).map_err(|e| e.to_string())?;
        let fs: Vec<CylBox> = s.iter().map(|&b| flip_box(b, params)).collect();
        let fr =
            reverse_full_multi(&ft, &fs).map_err(|e| format!("reverse on flipped input failed: {e} on {}", ctx()))?;
        let conj = fr.tableau.flip(FLIP_BOUND).map_err(|e| e.to_string())?;
        let conj_set: Vec<CylBox> = fr.reverse_new_set.iter().map(|&b| flip_box(b, params)).collect();
        if conj != res.tableau || sorted(conj_set) != sorted(res.new_set.clone()) {
            return Err(format!("Flip conjugation fails on {}", ctx()));
        }
        // A single inside cocorner behaves as an internal insertion.
        if let [b] = s {
            if t.shape().inner().value(b.row as i64 - 1) >= b.col {
                let (it, route) = internal_insert(t, *b).map_err(|e| format!("internal_insert: {e} on {}", ctx()))?;
                if it != res.tableau || route.points != res.routes[0].points {
                    return Err(format!("singleton multi-insertion differs from internal insertion on {}", ctx()));
                }
            }
        }
    }

    if groups.bumping {
        let strip = cyltab::SkewShape::new(res.tableau.shape().outer().clone(), t.shape().outer().clone())
            .map_err(|e| format!("outer shape shrank: {e}"))?;
        if !strip.is_horizontal_strip() || sorted(strip.boxes()) != sorted(res.new_set.clone()) {
            return Err(format!("new set is not a horizontal strip on {}", ctx()));
        }
        if res.routes.len() != s.len() {
            return Err(format!("expected one route per box on {}", ctx()));
        }
        for rt in &res.routes {
            if rt.points.windows(2).any(|w| w[1].x != w[0].x + 1 || w[1].y > w[0].y) {
                return Err(format!("route {:?} does not trend weakly left on {}", rt.points, ctx()));
            }
            if rt.steps.windows(2).any(|w| w[1] <= w[0]) {
                return Err(format!("route time stamps are not increasing on {}", ctx()));
            }
        }
        route_pairs(params, &res.routes, true).map_err(|e| format!("{e} on {}", ctx()))?;
        if !rows_monotone(params, &res.events, true) {
            return Err(format!("per-row bumped or inserted letters not weakly increasing on {}", ctx()));
        }
        // Reverse routes retrace forward routes.
        let mut fwd: Vec<Vec<Point>> = res.routes.iter().map(|r| canonical(params, &r.points)).collect();
        let mut rev: Vec<Vec<Point>> = back
            .routes
            .iter()
            .map(|r| {
                let mut p = r.points.clone();
                p.reverse();
                canonical(params, &p)
            })
            .collect();
        fwd.sort();
        rev.sort();
        if fwd != rev {
            return Err(format!("reverse routes do not retrace forward routes on {}", ctx()));
        }
    }
    Ok(())
}

/// Checks reverse-insertion properties on one instance `(t, s)`.
pub fn reverse_instance(t: &CylTableau, s: &[CylBox], groups: Groups) -> Result<(), String> {
    let params = t.params();
    let ctx = || describe(t, s);
    let res = reverse_full_multi(t, s).map_err(|e| format!("reverse_full_multi failed: {e} on {}", ctx()))?;

    if groups.round_trip {
        let back =
            full_multi(&res.tableau, &res.reverse_new_set).map_err(|e| format!("forward failed: {e} on {}", ctx()))?;
        if back.tableau != *t || sorted(back.new_set.clone()) != sorted(s.to_vec()) {
            return Err(format!("full_multi(reverse) is not the identity on {}", ctx()));
        }
        for r in 1..params.k() as i64 {
            let other = reverse_full_multi_from_row(t, s, r).map_err(|e| format!("seed row {r}: {e}"))?;
            if other.tableau != res.tableau || other.reverse_new_set != res.reverse_new_set {
                return Err(format!("seed row {r} changes the reverse result on {}", ctx()));
            }
        }
        let ft = t.flip(FLIP_BOUND).map_err(|e| e.to_string())?;
        let fs: Vec<CylBox> = s.iter().map(|&b| flip_box(b, params)).collect();
        let fr = full_multi(&ft, &fs).map_err(|e| format!("forward on flipped input failed: {e} on {}", ctx()))?;
        let conj = fr.tableau.flip(FLIP_BOUND).map_err(|e| e.to_string())?;
        let conj_set: Vec<CylBox> = fr.new_set.iter().map(|&b| flip_box(b, params)).collect();
        if conj != res.tableau || sorted(conj_set) != sorted(res.reverse_new_set.clone()) {
            return Err(format!("Flip conjugation fails on {}", ctx()));
        }
    }

    if groups.bumping {
        let strip = cyltab::SkewShape::new(t.shape().inner().clone(), res.tableau.shape().inner().clone())
            .map_err(|e| format!("inner shape grew: {e}"))?;
        if !strip.is_horizontal_strip() || sorted(strip.boxes()) != sorted(res.reverse_new_set.clone()) {
            return Err(format!("reverse new set is not a horizontal strip on {}", ctx()));
        }
        for rt in &res.routes {
            if rt.points.windows(2).any(|w| w[1].x != w[0].x - 1 || w[1].y < w[0].y) {
                return Err(format!("reverse route {:?} does not trend weakly right on {}", rt.points, ctx()));
            }
        }
        route_pairs(params, &res.routes, false).map_err(|e| format!("{e} on {}", ctx()))?;
        if !rows_monotone(params, &res.events, false) {
            return Err(format!("per-row bumped or inserted letters not weakly decreasing on {}", ctx()));
        }
    }
    Ok(())
}

/// Runs the instance checks over the whole sweep for one cylinder; returns
/// the number of forward and reverse instances checked.
pub fn insertion_sweep(k: usize, n: usize, groups: Groups) -> Result<(usize, usize), String> {
    use rayon::prelude::*;
    let space = super::tableau_space(k, n, 4, 3);
    let counts = space
        .par_iter()
        .map(|t| {
            let fs = super::forward_sets(t, 3);
            for s in &fs {
                forward_instance(t, s, groups)?;
            }
            let rs = super::reverse_sets(t, 3);
            for s in &rs {
                reverse_instance(t, s, groups)?;
            }
            Ok((fs.len(), rs.len()))
        })
        .collect::<Result<Vec<_>, String>>()?;
    Ok(counts.into_iter().fold((0, 0), |a, b| (a.0 + b.0, a.1 + b.1)))
}

/// Checks that CRSK is a weight-preserving bijection from all `(μ, T, U)`
/// with `|α/μ| = j` onto all `(λ, P, Q)` with `|λ/β| = j`, for every
/// `j ≤ budget`, with letters in `1..=letters`; also checks the inverse,
/// both symmetries, and that every intermediate recording tableau is
/// semistandard.  Returns the number of pairs mapped.
pub fn crsk_bijection(
    alpha: &cyltab::CylPartition,
    beta: &cyltab::CylPartition,
    budget: usize,
    letters: u32,
) -> Result<usize, String> {
    use cyltab::crsk::crsk_with;
    use cyltab::enumerate::{enumerate_inner, enumerate_outer, enumerate_ssct};
    use cyltab::{crsk_inverse, tableau_validate, CrskInput, CrskOutput, SkewShape};
    use std::collections::BTreeSet;

    let ctx = format!("alpha={:?} beta={:?}", alpha.window(), beta.window());
    let mut mapped = 0;
    for j in 0..=budget {
        let mut image = BTreeSet::new();
        let mut left = 0;
        for mu in enumerate_inner(alpha, beta, j) {
            let ts = enumerate_ssct(&SkewShape::new(alpha.clone(), mu.clone()).unwrap(), letters);
            let us = enumerate_ssct(&SkewShape::new(beta.clone(), mu.clone()).unwrap(), letters);
            for t in &ts {
                for u in &us {
                    left += 1;
                    let input = CrskInput::new(t.clone(), u.clone()).map_err(|e| e.to_string())?;
                    let mut bad_q = None;
                    let out = crsk_with(&input, |_, q| {
                        if bad_q.is_none() && tableau_validate(q.shape().clone(), q.rows().to_vec()).is_err() {
                            bad_q = Some(q.rows().to_vec());
                        }
                    })
                    .map_err(|e| format!("crsk failed: {e} ({ctx})"))?;
                    if let Some(rows) = bad_q {
                        return Err(format!("intermediate Q {rows:?} not semistandard ({ctx})"));
                    }
                    if out.p.weight() != t.weight() || out.q.weight() != u.weight() {
                        return Err(format!("weights not preserved ({ctx})"));
                    }
                    if out.p.shape().inner() != beta || out.q.shape().inner() != alpha || out.p.size() != j {
                        return Err(format!("output shapes wrong ({ctx})"));
                    }
                    let back = crsk_inverse(&out).map_err(|e| format!("crsk_inverse failed: {e} ({ctx})"))?;
                    if back != input {
                        return Err(format!(
                            "crsk_inverse(crsk) is not the identity ({ctx}) T={:?} U={:?}",
                            t.rows(),
                            u.rows()
                        ));
                    }
                    let swapped =
                        cyltab::crsk(&CrskInput::new(u.clone(), t.clone()).unwrap()).map_err(|e| e.to_string())?;
                    if swapped.p != out.q || swapped.q != out.p {
                        return Err(format!("symmetry fails ({ctx}) T={:?} U={:?}", t.rows(), u.rows()));
                    }
                    if t == u && out.p != out.q {
                        return Err(format!("T = U but P != Q ({ctx})"));
                    }
                    let inv_swapped = crsk_inverse(&CrskOutput::new(out.q.clone(), out.p.clone()).unwrap())
                        .map_err(|e| e.to_string())?;
                    if inv_swapped.t != *u || inv_swapped.u != *t {
                        return Err(format!("inverse symmetry fails ({ctx})"));
                    }
                    if !image.insert((out.p.clone(), out.q.clone())) {
                        return Err(format!("crsk is not injective ({ctx})"));
                    }
                }
            }
        }
        let mut right = BTreeSet::new();
        for lam in enumerate_outer(alpha, beta, j) {
            let ps = enumerate_ssct(&SkewShape::new(lam.clone(), beta.clone()).unwrap(), letters);
            let qs = enumerate_ssct(&SkewShape::new(lam.clone(), alpha.clone()).unwrap(), letters);
            for p in &ps {
                for q in &qs {
                    right.insert((p.clone(), q.clone()));
                }
            }
        }
        if image != right {
            return Err(format!(
                "image differs from the right side at size {j}: {} vs {} ({ctx})",
                image.len(),
                right.len()
            ));
        }
        mapped += left;
    }
    Ok(mapped)
}

/// Runs the transformation on one permutation and checks the certificate,
/// the monovariant and the switch-position pattern.
pub fn transform_instance(w: &[u32]) -> Result<(), String> {
    use cyltab::knuth::{monovariant, transform_trace};
    let run = transform_trace(w).map_err(|e| format!("{w:?}: {e}"))?;
    let identity: Vec<u32> = (1..=w.len() as u32).collect();
    if run.certificate.end != identity || !run.certificate.is_valid() {
        return Err(format!("{w:?}: certificate does not replay to the identity"));
    }
    let mut values = vec![monovariant(w).unwrap()];
    values.extend(run.critical_words.iter().map(|c| monovariant(c).unwrap()));
    if values.windows(2).any(|p| p[1] >= p[0]) {
        return Err(format!("{w:?}: monovariant does not strictly decrease"));
    }
    for pair in run.steps.windows(2) {
        let (a, b) = (pair[0].position, pair[1].position);
        if a > 0 && !(b + 1 == a || b + 2 == a) {
            return Err(format!("{w:?}: switch position moved from {a} to {b}"));
        }
    }
    if run.steps.iter().filter(|s| s.position == 0).count() != run.critical_words.len() {
        return Err(format!("{w:?}: critical words do not match first-pair switches"));
    }
    Ok(())
}

/// Connects two rearrangements and checks the certificate move by move.
pub fn connect_instance(w: &[u32], v: &[u32]) -> Result<(), String> {
    let cert = cyltab::knuth::connect(w, v).map_err(|e| format!("{w:?} -> {v:?}: {e}"))?;
    let words = cert.replay().map_err(|e| format!("{w:?} -> {v:?}: replay failed: {e}"))?;
    if cert.start != w || cert.end != v || words.last().map(|x| x.as_slice()) != Some(v) {
        return Err(format!("{w:?} -> {v:?}: certificate has wrong endpoints"));
    }
    let mut sorted_w = w.to_vec();
    sorted_w.sort_unstable();
    for x in &words {
        let mut s = x.clone();
        s.sort_unstable();
        if s != sorted_w {
            return Err(format!("{w:?} -> {v:?}: intermediate word {x:?} is not a rearrangement"));
        }
    }
    Ok(())
}

/// Every word of length `len` over `1..=letters`.
pub fn all_words(len: usize, letters: u32) -> Vec<Vec<u32>> {
    let mut out = vec![vec![]];
    for _ in 0..len {
        out =
            out.into_iter().flat_map(|w: Vec<u32>| (1..=letters).map(move |a| [w.clone(), vec![a]].concat())).collect();
    }
    out
}

/// Checks `connect` on every ordered pair of rearrangements of words of
/// length at most `max_len` over `1..=letters`; returns the pair count.
pub fn connect_sweep(max_len: usize, letters: u32) -> Result<usize, String> {
    use rayon::prelude::*;
    let mut classes: std::collections::BTreeMap<Vec<u32>, Vec<Vec<u32>>> = Default::default();
    for len in 1..=max_len {
        for w in all_words(len, letters) {
            let mut key = w.clone();
            key.sort_unstable();
            classes.entry(key).or_default().push(w);
        }
    }
    let pairs: Vec<(&Vec<u32>, &Vec<u32>)> =
        classes.values().flat_map(|ws| ws.iter().flat_map(move |w| ws.iter().map(move |v| (w, v)))).collect();
    pairs.par_iter().try_for_each(|(w, v)| connect_instance(w, v))?;
    Ok(pairs.len())
}

/// Checks the transformation on every permutation of length at most
/// `max_len`; returns the number of permutations.
pub fn transform_sweep(max_len: usize) -> Result<usize, String> {
    use itertools::Itertools;
    use rayon::prelude::*;
    let perms: Vec<Vec<u32>> = (1..=max_len).flat_map(|m| (1..=m as u32).permutations(m)).collect();
    perms.par_iter().try_for_each(|w| transform_instance(w))?;
    Ok(perms.len())
}

/// Checks the bijection properties on every tableau of the insertion sweep.
pub fn marble_sweep() -> Result<usize, String> {
    let mut count = 0;
    for (k, n) in super::sweep_params() {
        for t in super::tableau_space(k, n, 4, 3) {
            let g = cyltab::marble::tableau_to_game(&t, 3).map_err(|e| e.to_string())?;
            if !cyltab::marble::game_validate(&g) {
                return Err(format!("game of {:?} is invalid", t.rows()));
            }
            let back = cyltab::marble::game_to_tableau(t.shape().inner(), &g).map_err(|e| e.to_string())?;
            if back != t {
                return Err(format!("decoding the game of {:?} gives {:?}", t.rows(), back.rows()));
            }
            if g.final_arrangement() != Some(cyltab::marble::arrangement(t.shape().outer())) {
                return Err(format!("final arrangement of {:?} is not Arr(outer)", t.rows()));
            }
            count += 1;
        }
    }
    Ok(count)
}

/// Standard tableaux are exactly those whose games pass one marble per
/// turn; returns the number of standard tableaux seen.
pub fn marble_standard_check() -> Result<usize, String> {
    use cyltab::enumerate::enumerate_ssct;
    let mut standard = 0;
    for (k, n) in super::sweep_params() {
        for mu in super::normalized_windows(k, n) {
            for lam in super::neighbours(&mu, 4, true) {
                let shape = cyltab::SkewShape::new(lam, mu.clone()).unwrap();
                let size = shape.size();
                for t in enumerate_ssct(&shape, size as u32) {
                    let g = cyltab::marble::tableau_to_game(&t, size).map_err(|e| e.to_string())?;
                    let one_each = g.turns.iter().all(|turn| turn.total() == 1);
                    if t.is_standard() != one_each {
                        return Err(format!("standardness and one-marble turns disagree on {:?}", t.rows()));
                    }
                    standard += usize::from(one_each);
                }
            }
        }
    }
    Ok(standard)
}

/// Every legal turn from an arrangement.
fn turns_from(a: &cyltab::marble::Arrangement) -> Vec<cyltab::marble::Turn> {
    let mut out = vec![vec![]];
    for &c in a.counts() {
        out = out.into_iter().flat_map(|v: Vec<u64>| (0..=c).map(move |x| [v.clone(), vec![x]].concat())).collect();
    }
    out.into_iter().map(cyltab::marble::Turn::new).collect()
}

/// Final arrangements of all games of length `t` from `start`.
fn game_ends(start: &cyltab::marble::Arrangement, t: usize) -> Vec<cyltab::marble::Arrangement> {
    let mut ends = vec![start.clone()];
    for _ in 0..t {
        ends = ends.iter().flat_map(|a| turns_from(a).into_iter().map(move |turn| a.apply(&turn).unwrap())).collect();
    }
    ends
}

/// For `k ≤ 3`, `n - k ≤ 3` and games of length `t ≤ 3`: games starting at
/// `Arr(α)` and games ending at `Arr(α)` are equinumerous, counted by
/// playing every game, and the counts match the tableaux with inner
/// (respectively outer) shape `α` and letters at most `t`.
pub fn marble_count_check() -> Result<usize, String> {
    use cyltab::enumerate::enumerate_ssct;
    use cyltab::marble::{arrangement, Arrangement};
    let mut cases = 0;
    for (k, n) in super::sweep_params() {
        let p = super::params(k, n);
        let mut arrangements = vec![vec![]];
        for _ in 0..k {
            arrangements = arrangements
                .into_iter()
                .flat_map(|v: Vec<u64>| (0..=p.width() as u64).map(move |x| [v.clone(), vec![x]].concat()))
                .collect();
        }
        let arrangements: Vec<Arrangement> =
            arrangements.into_iter().filter_map(|c| Arrangement::new(p, c).ok()).collect();
        for alpha in super::normalized_windows(k, n) {
            let target = arrangement(&alpha);
            for t in 0..=3 {
                let ctx = format!("k={k} n={n} alpha={:?} t={t}", alpha.window());
                let starting = game_ends(&target, t).len();
                let ending: usize =
                    arrangements.iter().map(|a| game_ends(a, t).iter().filter(|e| **e == target).count()).sum();
                if starting != ending {
                    return Err(format!("{starting} games start and {ending} end at Arr(alpha) ({ctx})"));
                }
                let budget = t * p.width() as usize;
                let from: usize = super::neighbours(&alpha, budget, true)
                    .into_iter()
                    .map(|l| enumerate_ssct(&cyltab::SkewShape::new(l, alpha.clone()).unwrap(), t as u32).len())
                    .sum();
                let to: usize = super::neighbours(&alpha, budget, false)
                    .into_iter()
                    .map(|m| enumerate_ssct(&cyltab::SkewShape::new(alpha.clone(), m).unwrap(), t as u32).len())
                    .sum();
                if from != starting || to != ending {
                    return Err(format!(
                        "tableau counts {from}/{to} differ from game counts {starting}/{ending} ({ctx})"
                    ));
                }
                cases += 1;
            }
        }
    }
    Ok(cases)
}
