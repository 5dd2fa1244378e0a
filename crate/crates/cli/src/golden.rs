//! Published counts of numerical semigroups, used as regression data.

use std::fmt;

use gapset_core::CountTable;

/// Largest genus covered by the totals below.
pub const MAX_GENUS: u32 = 15;

/// Number of numerical semigroups of genus `g`.
pub const N_G: [u64; 16] = [
    1, 1, 2, 4, 7, 12, 23, 39, 67, 118, 204, 343, 592, 1001, 1693, 2857,
];

/// Number of those with conductor at most three times the multiplicity.
pub const N_PRIME: [u64; 16] = [
    1, 1, 2, 4, 6, 11, 20, 33, 57, 99, 168, 287, 487, 824, 1395, 2351,
];

/// `ROWS[m - 1][g]` for `m <= 6`, `g <= 14`.
pub const ROWS: [[u64; 15]; 6] = [
    [1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0],
    [0, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1],
    [0, 0, 1, 2, 2, 2, 3, 3, 3, 4, 4, 4, 5, 5, 5],
    [0, 0, 0, 1, 3, 4, 6, 7, 9, 11, 13, 15, 18, 20, 23],
    [0, 0, 0, 0, 1, 4, 7, 10, 13, 16, 22, 24, 32, 35, 43],
    [0, 0, 0, 0, 0, 1, 5, 11, 17, 27, 37, 49, 66, 85, 106],
];

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Cell {
    Total(u32),
    Generic(u32),
    Row { genus: u32, multiplicity: u32 },
}

impl fmt::Display for Cell {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Cell::Total(g) => write!(f, "n_{g}"),
            Cell::Generic(g) => write!(f, "n'_{g}"),
            Cell::Row {
                genus,
                multiplicity,
            } => write!(f, "n_{{{genus},{multiplicity}}}"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Mismatch {
    pub cell: Cell,
    pub expected: u64,
    pub computed: u64,
}

impl fmt::Display for Mismatch {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{}: expected {}, computed {}",
            self.cell, self.expected, self.computed
        )
    }
}

/// Expected value of one cell, if it is published.
pub fn expected(cell: &Cell) -> Option<u64> {
    match *cell {
        Cell::Total(g) => N_G.get(g as usize).copied(),
        Cell::Generic(g) => N_PRIME.get(g as usize).copied(),
        Cell::Row {
            genus,
            multiplicity,
        } => ROWS
            .get((multiplicity as usize).checked_sub(1)?)
            .and_then(|row| row.get(genus as usize))
            .copied(),
    }
}

/// Every published cell that `table` also covers and gets wrong.
pub fn compare(table: &CountTable) -> Vec<Mismatch> {
    let mut out = Vec::new();
    let mut check = |cell: Cell, computed: u64| {
        if let Some(expected) = expected(&cell) {
            if expected != computed {
                out.push(Mismatch {
                    cell,
                    expected,
                    computed,
                });
            }
        }
    };
    for g in 0..=table.max_genus() {
        check(Cell::Total(g), table.n_g(g));
        check(Cell::Generic(g), table.n_prime(g));
    }
    for m in 1..=table.max_multiplicity() {
        for (g, &n) in table.row(m).unwrap_or(&[]).iter().enumerate() {
            check(
                Cell::Row {
                    genus: g as u32,
                    multiplicity: m,
                },
                n,
            );
        }
    }
    out
}

/// Like [`compare`] for a lone row.
pub fn compare_row(m: u32, row: &[u64]) -> Vec<Mismatch> {
    row.iter()
        .enumerate()
        .filter_map(|(g, &computed)| {
            let cell = Cell::Row {
                genus: g as u32,
                multiplicity: m,
            };
            let expected = expected(&cell)?;
            (expected != computed).then_some(Mismatch {
                cell,
                expected,
                computed,
            })
        })
        .collect()
}
