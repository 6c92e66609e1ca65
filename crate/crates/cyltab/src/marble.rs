//! The marble-passing picture of cylindric tableaux.
//!
//! `k` players `p_0, …, p_{k-1}` sit in a ring holding `n - k` marbles in
//! total; on each turn every player `p_i` passes some of their marbles to
//! `p_{i+1}`, simultaneously.  A partition `α` gives the arrangement in
//! which `p_i` holds `α_{i-1} - α_i` marbles, and the horizontal strip of
//! letter `j` in a tableau is read as turn `j`: player `p_r` passes as many
//! marbles as there are `j`s in row `r`.

use thiserror::Error;

use crate::geometry::{CylParams, CylPartition, SkewShape};
use crate::tableau::{CylTableau, Letter, TableauError};

/// Errors raised by the marble-game bijection.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MarbleError {
    #[error("arrangement has {len} players, expected k={k}")]
    WrongPlayerCount { len: usize, k: usize },
    #[error("arrangement holds {total} marbles, expected n - k = {expected}")]
    WrongTotal { total: u64, expected: u64 },
    #[error("initial arrangement does not match the inner shape")]
    InitialMismatch,
    #[error("turn {0} is invalid")]
    InvalidTurn(usize),
    #[error("tableau letter {letter} exceeds the game length {turns}")]
    LetterBeyondGame { letter: Letter, turns: usize },
    #[error(transparent)]
    Tableau(#[from] TableauError),
}

/// Marbles held by each player.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Arrangement {
    counts: Vec<u64>,
}

impl Arrangement {
    /// Builds an arrangement of `n - k` marbles among `k` players.
    pub fn new(params: CylParams, counts: Vec<u64>) -> Result<Self, MarbleError> {
        if counts.len() != params.k() {
            return Err(MarbleError::WrongPlayerCount { len: counts.len(), k: params.k() });
        }
        let total: u64 = counts.iter().sum();
        let expected = params.width() as u64;
        if total != expected {
            return Err(MarbleError::WrongTotal { total, expected });
        }
        Ok(Arrangement { counts })
    }

    pub fn counts(&self) -> &[u64] {
        &self.counts
    }

    /// Applies a turn if every player holds enough marbles.
    pub fn apply(&self, turn: &Turn) -> Option<Arrangement> {
        let k = self.counts.len();
        if turn.passes.len() != k || turn.passes.iter().zip(&self.counts).any(|(a, c)| a > c) {
            return None;
        }
        let mut counts = self.counts.clone();
        for (i, &a) in turn.passes.iter().enumerate() {
            counts[i] -= a;
            counts[(i + 1) % k] += a;
        }
        Some(Arrangement { counts })
    }
}

/// Marbles passed by each player: `passes[i]` go from `p_i` to `p_{i+1}`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Turn {
    pub passes: Vec<u64>,
}

impl Turn {
    pub fn new(passes: Vec<u64>) -> Self {
        Turn { passes }
    }

    /// Total number of marbles changing hands.
    pub fn total(&self) -> u64 {
        self.passes.iter().sum()
    }
}

/// An initial arrangement and a sequence of turns.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct MarbleGame {
    pub initial: Arrangement,
    pub turns: Vec<Turn>,
}

impl MarbleGame {
    /// Arrangements after each turn, starting with the initial one; `None`
    /// if some turn passes more marbles than a player holds.
    pub fn arrangements(&self) -> Option<Vec<Arrangement>> {
        let mut out = vec![self.initial.clone()];
        for turn in &self.turns {
            let next = out.last().expect("nonempty").apply(turn)?;
            out.push(next);
        }
        Some(out)
    }

    /// The arrangement after the last turn, if the game is valid.
    pub fn final_arrangement(&self) -> Option<Arrangement> {
        self.arrangements().and_then(|mut a| a.pop())
    }
}

/// `Arr(α)`: player `p_i` holds `α_{i-1} - α_i` marbles.
pub fn arrangement(alpha: &CylPartition) -> Arrangement {
    let counts = (0..alpha.params().k() as i64).map(|i| (alpha.value(i - 1) - alpha.value(i)) as u64).collect();
    Arrangement { counts }
}

/// Whether every turn is legal for the arrangement it is applied to.
pub fn game_validate(g: &MarbleGame) -> bool {
    g.arrangements().is_some()
}

/// Encodes a tableau over `1..=turns` as a game of length `turns`.
pub fn tableau_to_game(t: &CylTableau, turns: usize) -> Result<MarbleGame, MarbleError> {
    let max = t.max_letter();
    if max as usize > turns {
        return Err(MarbleError::LetterBeyondGame { letter: max, turns });
    }
    let turns = (1..=turns as Letter)
        .map(|j| Turn::new(t.rows().iter().map(|row| row.iter().filter(|&&a| a == j).count() as u64).collect()))
        .collect();
    Ok(MarbleGame { initial: arrangement(t.shape().inner()), turns })
}

/// Decodes a game into the unique tableau with inner shape `mu`.
pub fn game_to_tableau(mu: &CylPartition, g: &MarbleGame) -> Result<CylTableau, MarbleError> {
    let params = mu.params();
    if g.initial != arrangement(mu) {
        return Err(MarbleError::InitialMismatch);
    }
    let mut current = g.initial.clone();
    for (i, turn) in g.turns.iter().enumerate() {
        current = current.apply(turn).ok_or(MarbleError::InvalidTurn(i + 1))?;
    }
    let k = params.k();
    let mut rows = vec![Vec::new(); k];
    for (j, turn) in g.turns.iter().enumerate() {
        for (r, &a) in turn.passes.iter().enumerate() {
            rows[r].extend(std::iter::repeat(j as Letter + 1).take(a as usize));
        }
    }
    let outer: Vec<i64> = (0..k).map(|r| mu.window()[r] + rows[r].len() as i64).collect();
    let outer = CylPartition::new(params, outer).map_err(TableauError::from)?;
    let shape = SkewShape::new(outer, mu.clone()).map_err(TableauError::from)?;
    Ok(CylTableau::new(shape, rows)?)
}
