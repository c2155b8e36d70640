use serde::Serialize;

use crate::algebra::FiniteBiquandle;
use crate::diagram::{SemiarcDiagram, Sign};

use super::ColoringError;

/// Homogeneous linear system `M x ≡ 0 (mod modulus)`, one column per semiarc.
///
/// `free_loops` unconstrained extra unknowns stand for crossingless components.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RelationMatrix {
    pub modulus: u64,
    pub cols: usize,
    pub rows: Vec<Vec<i64>>,
    pub free_loops: usize,
}

impl RelationMatrix {
    pub fn new(modulus: u64, cols: usize, rows: Vec<Vec<i64>>) -> Result<Self, ColoringError> {
        if modulus == 0 {
            return Err(ColoringError::Matrix("modulus must be positive".into()));
        }
        if let Some(r) = rows.iter().find(|r| r.len() != cols) {
            return Err(ColoringError::Matrix(format!("row of length {} in a {cols}-column matrix", r.len())));
        }
        Ok(RelationMatrix { modulus, cols, rows, free_loops: 0 })
    }

    /// Rows as tab-separated lines.
    pub fn to_tsv(&self) -> String {
        let mut out = String::new();
        for r in &self.rows {
            let cells: Vec<String> = r.iter().map(|v| v.to_string()).collect();
            out.push_str(&cells.join("\t"));
            out.push('\n');
        }
        out
    }
}

/// Relations of `d` over a linear biquandle `x ⊼ y = a·x + b·y`, `x ⊻ y = c·x + d·y`.
///
/// Each crossing adds its under relation, then its over relation:
/// positive gives `u_out − c·u_in − d·o_in` and `o_out − a·o_in − b·u_in`;
/// negative the same with inputs and outputs exchanged. Entries are reduced to `0..n`.
pub fn coloring_matrix(d: &SemiarcDiagram, y: &FiniteBiquandle) -> Result<RelationMatrix, ColoringError> {
    let lf = y.linear_form().ok_or(ColoringError::NotLinear)?;
    let n = lf.modulus as i64;
    let cols = d.semiarc_count();
    let mut rows = Vec::with_capacity(2 * d.crossings().len());
    for c in d.crossings() {
        let (ui, oi, uo, oo) = match c.sign {
            Sign::Positive => (c.under_in, c.over_in, c.under_out, c.over_out),
            Sign::Negative => (c.under_out, c.over_out, c.under_in, c.over_in),
        };
        let mut under = vec![0i64; cols];
        under[uo] += 1;
        under[ui] -= lf.c as i64;
        under[oi] -= lf.d as i64;
        let mut over = vec![0i64; cols];
        over[oo] += 1;
        over[oi] -= lf.a as i64;
        over[ui] -= lf.b as i64;
        for row in [under, over] {
            rows.push(row.into_iter().map(|v| v.rem_euclid(n)).collect());
        }
    }
    Ok(RelationMatrix { modulus: lf.modulus, cols, rows, free_loops: d.free_loops() })
}

fn gcd(a: u128, b: u128) -> u128 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

/// Nonzero diagonal of an integer diagonalization by unimodular row and column
/// operations, pivoting on the smallest absolute value.
fn diagonalize(rows: &[Vec<i64>], cols: usize) -> Result<Vec<i128>, ColoringError> {
    let mut a: Vec<Vec<i128>> = rows.iter().map(|r| r.iter().map(|&v| v as i128).collect()).collect();
    let nrows = a.len();
    let mut diag = Vec::new();
    let mut t = 0;
    while t < nrows.min(cols) {
        let mut best: Option<(usize, usize)> = None;
        for i in t..nrows {
            for j in t..cols {
                if a[i][j] != 0 && best.map_or(true, |(bi, bj)| a[i][j].abs() < a[bi][bj].abs()) {
                    best = Some((i, j));
                }
            }
        }
        let Some((pi, pj)) = best else { break };
        a.swap(t, pi);
        for row in a.iter_mut() {
            row.swap(t, pj);
        }
        let p = a[t][t];
        let mut clean = true;
        for i in t + 1..nrows {
            let q = a[i][t] / p;
            if q != 0 {
                for j in t..cols {
                    let sub = q.checked_mul(a[t][j]).ok_or(ColoringError::Overflow)?;
                    a[i][j] = a[i][j].checked_sub(sub).ok_or(ColoringError::Overflow)?;
                }
            }
            clean &= a[i][t] == 0;
        }
        for j in t + 1..cols {
            let q = a[t][j] / p;
            if q != 0 {
                for row in a.iter_mut().skip(t) {
                    let sub = q.checked_mul(row[t]).ok_or(ColoringError::Overflow)?;
                    row[j] = row[j].checked_sub(sub).ok_or(ColoringError::Overflow)?;
                }
            }
            clean &= a[t][j] == 0;
        }
        // leftover remainders are smaller than p, so the next pivot search shrinks them
        if clean {
            diag.push(p);
            t += 1;
        }
    }
    Ok(diag)
}

/// Number of `x ∈ (Z/n)^cols` with `M x ≡ 0`: `n^(cols − r) · ∏ gcd(dᵢ, n)` over
/// the `r` nonzero diagonal entries, times `n` per free loop.
pub fn count_solutions_snf(m: &RelationMatrix) -> Result<u128, ColoringError> {
    let n = m.modulus as u128;
    let diag = diagonalize(&m.rows, m.cols)?;
    let free = (m.cols - diag.len() + m.free_loops) as u32;
    let mut count = n.checked_pow(free).ok_or(ColoringError::Overflow)?;
    for d in diag {
        count = count.checked_mul(gcd(d.unsigned_abs(), n)).ok_or(ColoringError::Overflow)?;
    }
    Ok(count)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{biquandle_t, biquandle_z, make_dihedral, make_linear_biquandle};
    use crate::coloring::count_colorings;
    use crate::diagram::{chain, pretzel, torus_2n};
    use proptest::prelude::*;

    fn brute_count(m: &RelationMatrix) -> u128 {
        let n = m.modulus as i64;
        let total = (n as u64).pow(m.cols as u32);
        let mut count = 0;
        for code in 0..total {
            let mut c = code;
            let x: Vec<i64> = (0..m.cols)
                .map(|_| {
                    let v = (c % n as u64) as i64;
                    c /= n as u64;
                    v
                })
                .collect();
            if m.rows.iter().all(|r| r.iter().zip(&x).map(|(a, b)| a * b).sum::<i64>().rem_euclid(n) == 0) {
                count += 1;
            }
        }
        count
    }

    #[test]
    fn zero_matrix_counts_everything() {
        let m = RelationMatrix::new(4, 3, vec![vec![0, 0, 0]]).unwrap();
        assert_eq!(count_solutions_snf(&m).unwrap(), 64);
        let empty = RelationMatrix::new(7, 0, vec![]).unwrap();
        assert_eq!(count_solutions_snf(&empty).unwrap(), 1);
    }

    #[test]
    fn unknot_matrix_is_empty() {
        let r5 = make_dihedral(5).unwrap();
        let m = coloring_matrix(&crate::diagram::SemiarcDiagram::unknot(), r5.as_biquandle()).unwrap();
        assert_eq!((m.rows.len(), m.cols), (0, 0));
        assert_eq!(count_solutions_snf(&m).unwrap(), 5);
    }

    #[test]
    fn printed_torus_matrix_has_sixteen_solutions() {
        let rows = vec![
            vec![0, 3, 3, 0, 0, 0, 0, 0],
            vec![0, 0, 0, 3, 3, 0, 0, 0],
            vec![0, 0, 0, 0, 0, 3, 3, 0],
            vec![3, 0, 0, 0, 0, 0, 0, 3],
            vec![1, 0, 2, 3, 0, 0, 0, 0],
            vec![0, 0, 1, 0, 2, 3, 0, 0],
            vec![0, 0, 0, 0, 1, 0, 2, 3],
            vec![2, 3, 0, 0, 0, 0, 1, 0],
        ];
        let m = RelationMatrix::new(4, 8, rows).unwrap();
        assert_eq!(count_solutions_snf(&m).unwrap(), 16);
        assert_eq!(brute_count(&m), 16);
    }

    #[test]
    fn generated_torus_matrix() {
        let m = coloring_matrix(&torus_2n(4).unwrap(), &biquandle_z()).unwrap();
        assert_eq!((m.rows.len(), m.cols, m.modulus), (8, 8, 4));
        assert_eq!(count_solutions_snf(&m).unwrap(), 16);
        let r3 = make_dihedral(3).unwrap();
        let m = coloring_matrix(&torus_2n(3).unwrap(), r3.as_biquandle()).unwrap();
        assert_eq!(count_solutions_snf(&m).unwrap(), 9);
    }

    #[test]
    fn non_linear_is_rejected() {
        assert_eq!(coloring_matrix(&torus_2n(2).unwrap(), &biquandle_t()), Err(ColoringError::NotLinear));
    }

    #[test]
    fn agrees_with_enumeration_on_families() {
        let targets = [
            make_dihedral(3).unwrap().into_biquandle(),
            make_dihedral(4).unwrap().into_biquandle(),
            make_dihedral(9).unwrap().into_biquandle(),
            biquandle_z(),
            make_linear_biquandle(5, 2, 0, 1, 4).unwrap(),
        ];
        let diagrams = [torus_2n(5).unwrap(), chain(3).unwrap(), pretzel(&[3, -2, 3]).unwrap()];
        for y in &targets {
            for d in &diagrams {
                let m = coloring_matrix(d, y).unwrap();
                assert_eq!(count_solutions_snf(&m).unwrap(), count_colorings(d, y));
            }
        }
    }

    proptest! {
        #[test]
        fn snf_matches_brute_force(
            modulus in prop::sample::select(vec![4u64, 9]),
            cols in 1usize..6,
            nrows in 0usize..6,
            seed in prop::collection::vec(-12i64..12, 36),
        ) {
            let rows: Vec<Vec<i64>> = (0..nrows).map(|i| seed[i * 6..i * 6 + cols].to_vec()).collect();
            let m = RelationMatrix::new(modulus, cols, rows).unwrap();
            prop_assert_eq!(count_solutions_snf(&m).unwrap(), brute_count(&m));
        }
    }
}
