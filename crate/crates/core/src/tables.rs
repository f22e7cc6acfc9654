//! Published reference values for q = 3, n = 4.
//!
//! Each table entry lists C_3(r+1, I, 4) under its column r.

use crate::codes::CodeSpec;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct TableEntry {
    /// 1 or 2.
    pub table: u8,
    /// Column label; the code is C_3(r+1, I, 4).
    pub r: i64,
    pub i: &'static [u32],
    pub length: usize,
    pub dimension: usize,
    pub distance: usize,
}

impl TableEntry {
    pub fn spec(&self) -> CodeSpec {
        CodeSpec::sandwich(3, 4, self.r + 1, self.i)
    }

    pub fn triple(&self) -> [usize; 3] {
        [self.length, self.dimension, self.distance]
    }
}

const fn e(table: u8, r: i64, i: &'static [u32], k: usize, d: usize) -> TableEntry {
    TableEntry {
        table,
        r,
        i,
        length: 81,
        dimension: k,
        distance: d,
    }
}

pub const TABLE_I: [TableEntry; 12] = [
    e(1, 0, &[1], 5, 54),
    e(1, 2, &[1], 27, 18),
    e(1, 4, &[1], 62, 6),
    e(1, 6, &[1], 80, 2),
    e(1, 0, &[3], 1, 81),
    e(1, 2, &[3], 19, 27),
    e(1, 4, &[3], 54, 9),
    e(1, 6, &[3], 76, 3),
    e(1, 0, &[1, 3], 5, 54),
    e(1, 2, &[1, 3], 31, 18),
    e(1, 4, &[1, 3], 66, 6),
    e(1, 6, &[1, 3], 80, 2),
];

pub const TABLE_II: [TableEntry; 21] = [
    e(2, 1, &[0], 9, 45),
    e(2, 3, &[0], 40, 9),
    e(2, 5, &[0], 70, 5),
    e(2, 1, &[2], 11, 36),
    e(2, 3, &[2], 39, 16),
    e(2, 5, &[2], 72, 4),
    e(2, 1, &[4], 5, 54),
    e(2, 3, &[4], 33, 18),
    e(2, 5, &[4], 66, 6),
    e(2, 1, &[0, 2], 15, 27),
    e(2, 3, &[0, 2], 48, 9),
    e(2, 5, &[0, 2], 76, 3),
    e(2, 1, &[0, 4], 9, 45),
    e(2, 3, &[0, 4], 42, 9),
    e(2, 5, &[0, 4], 70, 5),
    e(2, 1, &[2, 4], 11, 36),
    e(2, 3, &[2, 4], 41, 16),
    e(2, 5, &[2, 4], 72, 4),
    e(2, 1, &[0, 2, 4], 15, 27),
    e(2, 3, &[0, 2, 4], 50, 9),
    e(2, 5, &[0, 2, 4], 76, 3),
];

/// Both tables in order.
pub fn all_entries() -> impl Iterator<Item = &'static TableEntry> {
    TABLE_I.iter().chain(TABLE_II.iter())
}

/// Worked example at q = 3, n = 4.
pub mod example {
    pub const DIM_RM_4: usize = 50;
    pub const DIM_RM_5: usize = 66;
    /// Θ^{(5)}_3.
    pub const THETA_5_3: [u32; 4] = [11, 19, 33, 57];
    /// dim C_3(5, {1}, 4).
    pub const DIM_C_5_1: usize = 62;
}
