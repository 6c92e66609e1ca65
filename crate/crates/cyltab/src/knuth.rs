//! Words, elementary Knuth moves, rotation, and the word-transformation
//! algorithm showing that any two rearrangements of a word are cyclically
//! Knuth equivalent.
//!
//! The moves act on three consecutive letters starting at `pos`:
//!
//! * `K'`: `y z x → y x z` when `x < y ≤ z`; `K'⁻¹` undoes it.
//! * `K''`: `x z y → z x y` when `x ≤ y < z`; `K''⁻¹` undoes it.
//! * `R`: moves the last letter to the front.
//!
//! Each Knuth move switches two adjacent letters `a, b` next to a
//! *catalyst* `c` whose value lies between them (inclusively on one side).
//! The transformation algorithm treats a permutation as a circular word
//! with `1` leftmost and repeatedly performs the leftmost available switch
//! until the word is `1 2 … m`.

use std::fmt;

use num_bigint::BigUint;
use thiserror::Error;

use crate::tableau::Letter;

/// A word over the positive integers.
pub type Word = Vec<Letter>;

/// Errors raised by word operations.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum KnuthError {
    #[error("move pattern does not match at position {0}")]
    PatternMismatch(usize),
    #[error("word is not a permutation of 1..m")]
    NotAPermutation,
    #[error("words are not rearrangements of each other")]
    NotSameMultiset,
    #[error("word is empty")]
    EmptyWord,
    #[error("no admissible move realizes the switch at position {0}")]
    LiftedMoveInvalid(usize),
    #[error("transformation made no progress")]
    Stuck,
}

/// The five kinds of elementary cyclic Knuth moves.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum MoveKind {
    Kprime,
    KprimeInv,
    Kdprime,
    KdprimeInv,
    Rotate,
}

impl MoveKind {
    pub fn name(self) -> &'static str {
        match self {
            MoveKind::Kprime => "Kprime",
            MoveKind::KprimeInv => "KprimeInv",
            MoveKind::Kdprime => "Kdprime",
            MoveKind::KdprimeInv => "KdprimeInv",
            MoveKind::Rotate => "Rotate",
        }
    }

    pub fn from_name(s: &str) -> Option<MoveKind> {
        [MoveKind::Kprime, MoveKind::KprimeInv, MoveKind::Kdprime, MoveKind::KdprimeInv, MoveKind::Rotate]
            .into_iter()
            .find(|k| k.name() == s)
    }
}

/// A move applied at a 0-based window start (`pos` is 0 for rotations).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Move {
    pub kind: MoveKind,
    pub pos: usize,
}

impl Move {
    pub fn new(kind: MoveKind, pos: usize) -> Self {
        Move { kind, pos }
    }

    pub fn rotate() -> Self {
        Move { kind: MoveKind::Rotate, pos: 0 }
    }

    /// Moves undoing this one on a word of length `len`.
    pub fn inverse(self, len: usize) -> Vec<Move> {
        let kind = match self.kind {
            MoveKind::Kprime => MoveKind::KprimeInv,
            MoveKind::KprimeInv => MoveKind::Kprime,
            MoveKind::Kdprime => MoveKind::KdprimeInv,
            MoveKind::KdprimeInv => MoveKind::Kdprime,
            MoveKind::Rotate => return vec![Move::rotate(); len.saturating_sub(1)],
        };
        vec![Move::new(kind, self.pos)]
    }
}

impl fmt::Display for Move {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.kind {
            MoveKind::Rotate => write!(f, "R"),
            k => write!(f, "{}@{}", k.name(), self.pos),
        }
    }
}

/// A replayable chain of moves from `start` to `end`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Certificate {
    pub start: Word,
    pub moves: Vec<Move>,
    pub end: Word,
}

impl Certificate {
    /// Replays the moves, returning every intermediate word (start included).
    pub fn replay(&self) -> Result<Vec<Word>, KnuthError> {
        let mut words = vec![self.start.clone()];
        for &m in &self.moves {
            let next = apply_move(words.last().expect("nonempty"), m)?;
            words.push(next);
        }
        Ok(words)
    }

    /// Whether replaying the moves from `start` ends at `end`.
    pub fn is_valid(&self) -> bool {
        self.replay().is_ok_and(|w| w.last() == Some(&self.end))
    }
}

/// Applies one move, checking its pattern.
pub fn apply_move(w: &[Letter], m: Move) -> Result<Word, KnuthError> {
    let mut out = w.to_vec();
    if m.kind == MoveKind::Rotate {
        if !out.is_empty() {
            out.rotate_right(1);
        }
        return Ok(out);
    }
    let p = m.pos;
    if p + 2 >= w.len() {
        return Err(KnuthError::PatternMismatch(p));
    }
    let (a, b, c) = (w[p], w[p + 1], w[p + 2]);
    let ok = match m.kind {
        // y z x -> y x z with x < y <= z
        MoveKind::Kprime => c < a && a <= b,
        // y x z -> y z x with x < y <= z
        MoveKind::KprimeInv => b < a && a <= c,
        // x z y -> z x y with x <= y < z
        MoveKind::Kdprime => a <= c && c < b,
        // z x y -> x z y with x <= y < z
        MoveKind::KdprimeInv => b <= c && c < a,
        MoveKind::Rotate => unreachable!(),
    };
    if !ok {
        return Err(KnuthError::PatternMismatch(p));
    }
    match m.kind {
        MoveKind::Kprime | MoveKind::KprimeInv => out.swap(p + 1, p + 2),
        _ => out.swap(p, p + 1),
    }
    Ok(out)
}

/// Every move whose pattern matches, followed by the rotation.
pub fn applicable_moves(w: &[Letter]) -> Vec<Move> {
    let kinds = [MoveKind::Kprime, MoveKind::KprimeInv, MoveKind::Kdprime, MoveKind::KdprimeInv];
    let mut out: Vec<Move> = (0..w.len().saturating_sub(2))
        .flat_map(|p| kinds.into_iter().map(move |k| Move::new(k, p)))
        .filter(|&m| apply_move(w, m).is_ok())
        .collect();
    out.push(Move::rotate());
    out
}

fn is_permutation(w: &[Letter]) -> bool {
    let mut seen = vec![false; w.len() + 1];
    w.iter().all(|&a| {
        let a = a as usize;
        (1..=w.len()).contains(&a) && !std::mem::replace(&mut seen[a], true)
    })
}

/// Positions (1-based) of the letters `1..m` in a permutation.
pub fn monovariant_digits(w: &[Letter]) -> Result<Vec<usize>, KnuthError> {
    if !is_permutation(w) {
        return Err(KnuthError::NotAPermutation);
    }
    let mut pos = vec![0; w.len()];
    for (i, &a) in w.iter().enumerate() {
        pos[a as usize - 1] = i + 1;
    }
    Ok(pos)
}

/// `N(w)`: the base-`(m+1)` number whose digits are the positions of `1..m`.
pub fn monovariant(w: &[Letter]) -> Result<BigUint, KnuthError> {
    let base = BigUint::from(w.len() + 1);
    Ok(monovariant_digits(w)?.into_iter().fold(BigUint::default(), |acc, d| acc * &base + BigUint::from(d)))
}

/// A word's permutation lift.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Lift {
    /// `p(w)`: the permutation order-isomorphic to the perturbed word.
    pub perm: Word,
    /// 0-based position `t` of the anchor (where `p(w)` holds 1).
    pub anchor: usize,
}

/// Lifts a word to a permutation by breaking ties cyclically from an anchor.
///
/// With `s` the smallest letter, the anchor `t` is the leftmost `s` if the
/// word does not end in `s`; otherwise it is the first `s` after the
/// first position that is preceded by a letter other than `s`.  Letter `w_i` is then ranked by
/// the key `(w_i, (i - t) mod m)`.
pub fn lift_word(w: &[Letter]) -> Result<Lift, KnuthError> {
    let m = w.len();
    let s = *w.iter().min().ok_or(KnuthError::EmptyWord)?;
    let anchor = if w[m - 1] != s {
        w.iter().position(|&a| a == s).expect("minimum occurs")
    } else {
        (1..m).find(|&t| w[t] == s && w[t - 1] != s).unwrap_or(0)
    };
    let mut order: Vec<usize> = (0..m).collect();
    order.sort_by_key(|&i| (w[i], (i + m - anchor) % m));
    let mut perm = vec![0; m];
    for (rank, &i) in order.iter().enumerate() {
        perm[i] = rank as Letter + 1;
    }
    Ok(Lift { perm, anchor })
}

/// One switch performed by the transformation algorithm.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SwitchStep {
    /// The circular word (anchored with 1 leftmost) before the switch.
    pub before: Word,
    /// 0-based position of the left letter of the switched pair.
    pub position: usize,
    /// Whether the first two letters were switched.
    pub critical: bool,
}

/// A full run of the transformation algorithm.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct TransformTrace {
    pub certificate: Certificate,
    pub steps: Vec<SwitchStep>,
    /// Anchored words produced by the critical switches, in order.
    pub critical_words: Vec<Word>,
}

/// Whether switching `a, b` next to catalyst `c` is a legal Knuth move.
/// `c_left` says whether the catalyst precedes the pair.
fn switch_ok(a: Letter, b: Letter, c: Letter, c_left: bool) -> bool {
    match (c_left, a > b) {
        (true, true) => b < c && c <= a,
        (true, false) => a < c && c <= b,
        (false, false) => a <= c && c < b,
        (false, true) => b <= c && c < a,
    }
}

fn switch_kind(a: Letter, b: Letter, c_left: bool) -> MoveKind {
    match (c_left, a > b) {
        (true, true) => MoveKind::Kprime,
        (true, false) => MoveKind::KprimeInv,
        (false, false) => MoveKind::Kdprime,
        (false, true) => MoveKind::KdprimeInv,
    }
}

/// Runs the algorithm on a word paired letter by letter with its lift; the
/// lift drives every decision and each move is checked on both words.
struct Engine {
    word: Word,
    perm: Word,
    moves: Vec<Move>,
}

impl Engine {
    fn apply(&mut self, m: Move) -> Result<(), KnuthError> {
        let word = apply_move(&self.word, m)?;
        let perm = apply_move(&self.perm, m)?;
        self.word = word;
        self.perm = perm;
        self.moves.push(m);
        Ok(())
    }

    fn anchor(&mut self) -> Result<(), KnuthError> {
        let m = self.perm.len();
        let idx = self.perm.iter().position(|&a| a == 1).expect("permutation contains 1");
        for _ in 0..(m - idx) % m {
            self.apply(Move::rotate())?;
        }
        Ok(())
    }

    /// The leftmost pair `(i, i+1)` of the anchored circular permutation
    /// that some cyclic neighbour can catalyse.
    fn next_switch(&self) -> Option<usize> {
        let m = self.perm.len();
        if m < 3 {
            return None;
        }
        let p = &self.perm;
        (0..m - 1).find(|&i| {
            let (a, b) = (p[i], p[i + 1]);
            let between = |c: Letter| a.min(b) < c && c < a.max(b);
            between(p[(i + m - 1) % m]) || between(p[(i + 2) % m])
        })
    }

    /// Switches positions `j, j+1` of the anchored word, then re-anchors.
    fn switch(&mut self, j: usize) -> Result<(), KnuthError> {
        let m = self.perm.len();
        let left = (j + m - 1) % m;
        let right = (j + 2) % m;
        // Catalyst options, preferring ones that need no rotation.
        let mut options = vec![(true, left), (false, right)];
        if j == 0 {
            options.reverse();
        }
        let chosen = options.into_iter().find(|&(c_left, c)| {
            switch_ok(self.perm[j], self.perm[j + 1], self.perm[c], c_left)
                && switch_ok(self.word[j], self.word[j + 1], self.word[c], c_left)
        });
        let (c_left, _) = chosen.ok_or(KnuthError::LiftedMoveInvalid(j))?;
        let kind = switch_kind(self.perm[j], self.perm[j + 1], c_left);
        // Bring the window to a linear position, rotating if it wraps.
        let window_start = if c_left { j as i64 - 1 } else { j as i64 };
        let turns = if window_start < 0 {
            1
        } else if window_start as usize + 2 >= m {
            m - window_start as usize
        } else {
            0
        };
        for _ in 0..turns {
            self.apply(Move::rotate())?;
        }
        let pos = (window_start + turns as i64).rem_euclid(m as i64) as usize;
        self.apply(Move::new(kind, pos))?;
        self.anchor()
    }

    fn is_sorted(&self) -> bool {
        self.perm.iter().enumerate().all(|(i, &a)| a as usize == i + 1)
    }

    fn run(&mut self, steps: &mut Vec<SwitchStep>, critical_words: &mut Vec<Word>) -> Result<(), KnuthError> {
        self.anchor()?;
        let m = self.perm.len();
        // The monovariant argument bounds the run; this guard only turns a
        // logic error into an error value instead of a hang.
        let limit = (m + 1).pow(3) * (m + 1);
        while !self.is_sorted() {
            if steps.len() > limit {
                return Err(KnuthError::Stuck);
            }
            let j = self.next_switch().ok_or(KnuthError::Stuck)?;
            steps.push(SwitchStep { before: self.perm.clone(), position: j, critical: j == 0 });
            self.switch(j)?;
            if j == 0 {
                critical_words.push(self.perm.clone());
            }
        }
        Ok(())
    }
}

/// Runs the transformation algorithm on a permutation, recording each switch.
pub fn transform_trace(w: &[Letter]) -> Result<TransformTrace, KnuthError> {
    if w.is_empty() {
        return Err(KnuthError::EmptyWord);
    }
    if !is_permutation(w) {
        return Err(KnuthError::NotAPermutation);
    }
    let mut engine = Engine { word: w.to_vec(), perm: w.to_vec(), moves: Vec::new() };
    let (mut steps, mut critical_words) = (Vec::new(), Vec::new());
    engine.run(&mut steps, &mut critical_words)?;
    let certificate = Certificate { start: w.to_vec(), moves: engine.moves, end: engine.word };
    Ok(TransformTrace { certificate, steps, critical_words })
}

/// Transforms a permutation into `1 2 … m`.
pub fn word_transform(w: &[Letter]) -> Result<Certificate, KnuthError> {
    Ok(transform_trace(w)?.certificate)
}

/// Moves taking a general word to its sorted rearrangement, driven by its lift.
///
/// The lift keeps equal letters in increasing order only until a switch of
/// the first two positions carries a letter past an equal one; after that
/// a switch chosen on the lift may be illegal on the word (for `11212` the
/// lift `12435` reaches `12354` while the word is already `11122`).  The
/// run therefore stops as soon as the word is sorted, and re-lifts the
/// current word whenever the lift asks for an illegal move.
fn sort_moves(w: &[Letter]) -> Result<Vec<Move>, KnuthError> {
    let lift = lift_word(w)?;
    let mut engine = Engine { word: w.to_vec(), perm: lift.perm, moves: Vec::new() };
    engine.anchor()?;
    let m = w.len();
    let limit = 4 * (m + 1).pow(4);
    let mut switches = 0;
    let mut relifted = false;
    while !engine.word.windows(2).all(|p| p[0] <= p[1]) {
        if switches > limit {
            return Err(KnuthError::Stuck);
        }
        let j = engine.next_switch().ok_or(KnuthError::Stuck)?;
        match engine.switch(j) {
            Ok(()) => {
                switches += 1;
                relifted = false;
            }
            Err(KnuthError::LiftedMoveInvalid(_)) if !relifted => {
                engine.perm = lift_word(&engine.word)?.perm;
                engine.anchor()?;
                relifted = true;
            }
            Err(e) => return Err(e),
        }
    }
    Ok(engine.moves)
}

/// Merges runs of rotations modulo the word length.
fn compress(moves: Vec<Move>, len: usize) -> Vec<Move> {
    let mut out = Vec::with_capacity(moves.len());
    let mut pending = 0;
    for m in moves {
        if m.kind == MoveKind::Rotate {
            pending += 1;
            continue;
        }
        out.extend(std::iter::repeat(Move::rotate()).take(pending % len.max(1)));
        pending = 0;
        out.push(m);
    }
    out.extend(std::iter::repeat(Move::rotate()).take(pending % len.max(1)));
    out
}

/// A certificate that `w` and `v` are cyclically Knuth equivalent.
pub fn connect(w: &[Letter], v: &[Letter]) -> Result<Certificate, KnuthError> {
    let (mut sw, mut sv) = (w.to_vec(), v.to_vec());
    sw.sort_unstable();
    sv.sort_unstable();
    if sw != sv {
        return Err(KnuthError::NotSameMultiset);
    }
    let mut moves = Vec::new();
    if w != v {
        moves = sort_moves(w)?;
        let back = sort_moves(v)?;
        moves.extend(back.into_iter().rev().flat_map(|m| m.inverse(v.len())));
    }
    let certificate = Certificate { start: w.to_vec(), moves: compress(moves, w.len()), end: v.to_vec() };
    if !certificate.is_valid() {
        return Err(KnuthError::LiftedMoveInvalid(0));
    }
    Ok(certificate)
}

/// A certificate made of rotations only, if `v` is a rotation of `w`.
pub fn rotation_certificate(w: &[Letter], v: &[Letter]) -> Option<Certificate> {
    if w.len() != v.len() {
        return None;
    }
    let turns = (0..w.len().max(1)).find(|&r| {
        let mut u = w.to_vec();
        u.rotate_right(r % w.len().max(1));
        u == v
    })?;
    Some(Certificate { start: w.to_vec(), moves: vec![Move::rotate(); turns], end: v.to_vec() })
}
