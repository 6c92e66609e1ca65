//! Worked examples shared by the example tests and the acceptance report.

use super::tab;
use cyltab::CylTableau;

pub fn insertion_before() -> CylTableau {
    tab(3, 5, &[(1, &[1, 4]), (0, &[2, 5, 6]), (0, &[3, 7, 7])])
}

pub fn insertion_after() -> CylTableau {
    tab(3, 5, &[(2, &[3, 7]), (0, &[1, 4, 6]), (0, &[2, 5, 7])])
}

pub fn multi_r() -> CylTableau {
    tab(3, 6, &[(1, &[2, 3, 5]), (0, &[2, 6]), (-2, &[1, 2, 4])])
}

pub fn multi_r3() -> CylTableau {
    tab(3, 6, &[(1, &[1, 2, 4]), (1, &[2, 3, 5]), (0, &[2, 6])])
}

pub fn crsk_u() -> CylTableau {
    tab(3, 6, &[(1, &[2, 4]), (0, &[1, 3, 5]), (-2, &[1, 1, 3, 4])])
}

pub fn crsk_p() -> CylTableau {
    tab(3, 6, &[(3, &[1, 2, 3]), (3, &[2, 5]), (2, &[2, 4, 6])])
}

pub fn crsk_q() -> CylTableau {
    tab(3, 6, &[(4, &[2, 4]), (2, &[1, 1, 3]), (1, &[1, 3, 4, 5])])
}

/// The marble-game example tableau.
pub fn marble_tableau() -> CylTableau {
    tab(3, 7, &[(1, &[1, 2, 2, 5, 6]), (0, &[1, 2, 6, 6, 6]), (-2, &[1, 1, 4, 5])])
}

/// Its turns.
pub const MARBLE_TURNS: [[u64; 3]; 6] = [[1, 1, 2], [2, 1, 0], [0, 0, 0], [0, 0, 1], [1, 0, 1], [1, 3, 0]];

/// Anchored words before each switch, with the 1-based position of the
/// switched pair, for the run starting at 159362847.
pub const TRACE: &[(&str, usize)] = &[
    ("159362847", 3),
    ("153962847", 1),
    ("139628475", 2),
    ("193628475", 1),
    ("136284759", 3),
    ("132684759", 1),
    ("126847593", 4),
    ("126487593", 2),
    ("162487593", 1),
    ("124875936", 3),
    ("128475936", 2),
    ("182475936", 1),
    ("124759368", 3),
    ("127459368", 2),
    ("172459368", 1),
    ("124593687", 5),
    ("124539687", 4),
    ("124359687", 2),
    ("142359687", 1),
    ("123596874", 4),
    ("123956874", 3),
    ("129356874", 2),
    ("192356874", 1),
    ("123568749", 5),
    ("123586749", 4),
    ("123856749", 3),
    ("128356749", 2),
    ("182356749", 1),
    ("123567498", 6),
    ("123564798", 5),
    ("123546798", 3),
    ("125346798", 2),
    ("152346798", 1),
    ("123467985", 6),
    ("123469785", 5),
    ("123496785", 4),
    ("123946785", 3),
    ("129346785", 2),
    ("192346785", 1),
    ("123467859", 7),
    ("123467589", 6),
    ("123465789", 4),
    ("123645789", 3),
    ("126345789", 2),
    ("162345789", 1),
    ("123457896", 8),
    ("123457869", 7),
    ("123457689", 5),
    ("123475689", 4),
    ("123745689", 3),
    ("127345689", 2),
    ("172345689", 1),
    ("123456897", 8),
    ("123456879", 6),
    ("123458679", 5),
    ("123485679", 4),
    ("123845679", 3),
    ("128345679", 2),
    ("182345679", 1),
    ("123456798", 7),
    ("123456978", 6),
    ("123459678", 5),
    ("123495678", 4),
    ("123945678", 3),
    ("129345678", 2),
    ("192345678", 1),
];

pub const MONOVARIANTS: &[&str] = &[
    "152794863",
    "142683759",
    "129573648",
    "128369547",
    "127358496",
    "126347985",
    "123946875",
    "123845769",
    "123745698",
    "123495687",
    "123485679",
    "123459678",
    "123456978",
    "123456798",
    "123456789",
];
