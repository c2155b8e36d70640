//! Colorings of semiarc diagrams by finite biquandles.
//!
//! At a positive crossing the relations are `u_out = u_in ⊻ o_in` and
//! `o_out = o_in ⊼ u_in`; at a negative crossing the same relations hold with
//! inputs and outputs exchanged. Both are `(p₂, q₂) = B(p, q)` with
//! `B(p, q) = (p ⊻ q, q ⊼ p)`.

mod linear;
mod search;

pub use linear::{coloring_matrix, count_solutions_snf, RelationMatrix};
pub use search::{
    count_colorings, count_colorings_with, enumerate_colorings, enumerate_colorings_with, enumerate_colorings_with_loops,
};

use std::fmt;

use serde::Serialize;
use thiserror::Error;

use crate::algebra::FiniteBiquandle;
use crate::diagram::{Crossing, SemiarcDiagram, Sign};

/// Largest assignment space [`brute_force_colorings`] will scan.
pub const BRUTE_FORCE_LIMIT: u128 = 10_000_000;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ColoringError {
    #[error("biquandle is not linear; build it with make_linear_biquandle")]
    NotLinear,
    #[error("brute force would scan {space} assignments (limit {limit})")]
    TooLarge { space: u128, limit: u128 },
    #[error("integer overflow during Smith normal form")]
    Overflow,
    #[error("malformed relation matrix: {0}")]
    Matrix(String),
}

/// A semiarc labeling, one 0-based element per semiarc. Displayed 1-based.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct Coloring(Vec<u8>);

impl Coloring {
    pub fn new(values: Vec<u8>) -> Self {
        Coloring(values)
    }

    pub fn values(&self) -> &[u8] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    #[inline]
    pub fn get(&self, semiarc: usize) -> usize {
        self.0[semiarc] as usize
    }
}

impl fmt::Display for Coloring {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (i, v) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{}", *v as usize + 1)?;
        }
        f.write_str(")")
    }
}

/// Slots `[p, q, p₂, q₂]` of a crossing in the `(p₂, q₂) = B(p, q)` form.
#[inline]
pub(crate) fn relation_slots(c: &Crossing) -> [usize; 4] {
    match c.sign {
        Sign::Positive => [c.under_in, c.over_in, c.under_out, c.over_out],
        Sign::Negative => [c.under_out, c.over_out, c.under_in, c.over_in],
    }
}

/// True when `values` satisfies every crossing relation of `d` over `y`.
pub fn is_coloring(d: &SemiarcDiagram, y: &FiniteBiquandle, values: &[u8]) -> bool {
    if values.len() != d.semiarc_count() || values.iter().any(|&v| v as usize >= y.order()) {
        return false;
    }
    d.crossings().iter().all(|c| {
        let [p, q, p2, q2] = relation_slots(c).map(|s| values[s] as usize);
        y.under(p, q) == p2 && y.over(q, p) == q2
    })
}

/// Every coloring by exhaustive scan, sorted. Test oracle.
pub fn brute_force_colorings(d: &SemiarcDiagram, y: &FiniteBiquandle) -> Result<Vec<Coloring>, ColoringError> {
    let n = y.order();
    let m = d.semiarc_count();
    let space = (n as u128).checked_pow(m as u32).unwrap_or(u128::MAX);
    if space > BRUTE_FORCE_LIMIT {
        return Err(ColoringError::TooLarge { space, limit: BRUTE_FORCE_LIMIT });
    }
    let mut out = Vec::new();
    let mut values = vec![0u8; m];
    loop {
        if is_coloring(d, y, &values) {
            out.push(Coloring(values.clone()));
        }
        // odometer with the last semiarc fastest, so output is already sorted
        let mut i = m;
        loop {
            if i == 0 {
                return Ok(out);
            }
            i -= 1;
            values[i] += 1;
            if (values[i] as usize) < n {
                break;
            }
            values[i] = 0;
        }
    }
}

/// Colorings as a tab-separated table: a header of semiarc ids, then one
/// 1-based row per coloring.
pub fn coloring_table(semiarc_count: usize, colorings: &[Coloring]) -> String {
    let header: Vec<String> = (0..semiarc_count).map(|s| format!("s{s}")).collect();
    let mut out = header.join("\t");
    out.push('\n');
    for c in colorings {
        let row: Vec<String> = c.0.iter().map(|v| (*v as usize + 1).to_string()).collect();
        out.push_str(&row.join("\t"));
        out.push('\n');
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{biquandle_z, make_dihedral};
    use crate::diagram::{parse_pd, torus_2n};

    #[test]
    fn kink_over_r3_is_constant() {
        let r3 = make_dihedral(3).unwrap();
        let kink = parse_pd("X+ 0 1 1 0\n").unwrap();
        let all = brute_force_colorings(&kink, r3.as_biquandle()).unwrap();
        assert_eq!(all.len(), 3);
        assert!(all.iter().all(|c| c.values()[0] == c.values()[1]));
    }

    #[test]
    fn kink_over_z_has_four_colorings() {
        let kink = parse_pd("X+ 0 1 1 0\n").unwrap();
        let all = brute_force_colorings(&kink, &biquandle_z()).unwrap();
        assert_eq!(all.len(), 4);
        // Z is not idempotent: the loop carries the negative of the incoming residue
        for c in &all {
            let (s, l) = (c.get(0) as i64 + 1, c.get(1) as i64 + 1);
            assert_eq!((s + l).rem_euclid(4), 0, "{c}");
        }
    }

    #[test]
    fn brute_force_guard() {
        let r9 = make_dihedral(9).unwrap();
        let t = torus_2n(5).unwrap();
        assert!(matches!(brute_force_colorings(&t, r9.as_biquandle()), Err(ColoringError::TooLarge { .. })));
    }

    #[test]
    fn table_layout() {
        let c = vec![Coloring::new(vec![0, 1]), Coloring::new(vec![2, 2])];
        assert_eq!(coloring_table(2, &c), "s0\ts1\n1\t2\n3\t3\n");
        assert_eq!(c[0].to_string(), "(1,2)");
    }
}
