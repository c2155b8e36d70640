use std::fmt;

use serde::Serialize;

use super::FiniteBiquandle;

/// A map between finite biquandles, stored as the image of each 0-based element.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct Endomorphism(Vec<u8>);

impl Endomorphism {
    pub fn new(images: Vec<u8>) -> Self {
        Endomorphism(images)
    }

    /// Parses a 1-based image list such as `2,4,2,4`.
    pub fn parse(text: &str) -> Option<Self> {
        text.split(|c: char| c == ',' || c.is_whitespace())
            .filter(|s| !s.is_empty())
            .map(|s| s.parse::<usize>().ok().filter(|&v| v >= 1 && v <= 256).map(|v| (v - 1) as u8))
            .collect::<Option<Vec<u8>>>()
            .map(Endomorphism)
    }

    pub fn identity(n: usize) -> Self {
        Endomorphism((0..n as u8).collect())
    }

    /// `x ↦ k·x` on the residues of a linear biquandle of order `n`.
    pub fn scaling(n: usize, k: i64) -> Self {
        Endomorphism(
            (0..n)
                .map(|i| super::residue_to_index(n, k * super::index_to_residue(n, i) as i64) as u8)
                .collect(),
        )
    }

    pub fn images(&self) -> &[u8] {
        &self.0
    }

    #[inline]
    pub fn apply(&self, x: usize) -> usize {
        self.0[x] as usize
    }

    /// `self ∘ other`.
    pub fn compose(&self, other: &Endomorphism) -> Endomorphism {
        Endomorphism(other.0.iter().map(|&x| self.0[x as usize]).collect())
    }

    /// True when the map preserves both operations from `src` into `dst`.
    pub fn is_hom(&self, src: &FiniteBiquandle, dst: &FiniteBiquandle) -> bool {
        let n = src.order();
        if self.0.len() != n || self.0.iter().any(|&v| v as usize >= dst.order()) {
            return false;
        }
        (0..n).all(|x| {
            (0..n).all(|y| {
                let (fx, fy) = (self.apply(x), self.apply(y));
                self.apply(src.over(x, y)) == dst.over(fx, fy) && self.apply(src.under(x, y)) == dst.under(fx, fy)
            })
        })
    }
}

impl fmt::Display for Endomorphism {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, v) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{}", *v as usize + 1)?;
        }
        Ok(())
    }
}

const UNSET: u8 = u8::MAX;

/// All homomorphisms `src → dst`, in lexicographic order of image arrays.
///
/// Backtracks over images in element order; every assignment forces the images
/// of `x ⊼ y` and `x ⊻ y` for assigned pairs, so contradictions surface early.
pub fn enumerate_homs(src: &FiniteBiquandle, dst: &FiniteBiquandle) -> Vec<Endomorphism> {
    let mut out = Vec::new();
    let mut map = vec![UNSET; src.order()];
    search(src, dst, &mut map, &mut out);
    out.sort();
    out
}

/// `enumerate_homs(y, y)`.
pub fn enumerate_endos(y: &FiniteBiquandle) -> Vec<Endomorphism> {
    enumerate_homs(y, y)
}

fn search(src: &FiniteBiquandle, dst: &FiniteBiquandle, map: &mut Vec<u8>, out: &mut Vec<Endomorphism>) {
    let Some(x) = map.iter().position(|&v| v == UNSET) else {
        out.push(Endomorphism(map.clone()));
        return;
    };
    for v in 0..dst.order() {
        let mut next = map.clone();
        next[x] = v as u8;
        if propagate(src, dst, &mut next) {
            search(src, dst, &mut next, out);
        }
    }
}

/// Closes the partial map under the operations. Returns false on a contradiction.
fn propagate(src: &FiniteBiquandle, dst: &FiniteBiquandle, map: &mut [u8]) -> bool {
    let n = src.order();
    loop {
        let mut changed = false;
        for x in 0..n {
            if map[x] == UNSET {
                continue;
            }
            for y in 0..n {
                if map[y] == UNSET {
                    continue;
                }
                let (fx, fy) = (map[x] as usize, map[y] as usize);
                for (s, t) in [(src.over(x, y), dst.over(fx, fy)), (src.under(x, y), dst.under(fx, fy))] {
                    if map[s] == UNSET {
                        map[s] = t as u8;
                        changed = true;
                    } else if map[s] as usize != t {
                        return false;
                    }
                }
            }
        }
        if !changed {
            return true;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn scaling_maps() {
        assert_eq!(Endomorphism::scaling(4, 2).to_string(), "2 4 2 4");
        assert_eq!(Endomorphism::scaling(9, 3).to_string(), "3 6 9 3 6 9 3 6 9");
        assert_eq!(Endomorphism::scaling(5, 1), Endomorphism::identity(5));
    }
    use crate::algebra::{make_dihedral, make_linear_biquandle};

    fn brute_force(src: &FiniteBiquandle, dst: &FiniteBiquandle) -> Vec<Endomorphism> {
        let (n, m) = (src.order(), dst.order());
        let total = m.pow(n as u32);
        let mut out = Vec::new();
        for code in 0..total {
            let mut c = code;
            let mut images = vec![0u8; n];
            for slot in images.iter_mut().rev() {
                *slot = (c % m) as u8;
                c /= m;
            }
            let f = Endomorphism(images);
            if f.is_hom(src, dst) {
                out.push(f);
            }
        }
        out
    }

    #[test]
    fn endos_of_r3_match_brute_force() {
        let r3 = make_dihedral(3).unwrap();
        let homs = enumerate_endos(r3.as_biquandle());
        assert_eq!(homs, brute_force(r3.as_biquandle(), r3.as_biquandle()));
        // constants (3) and affine bijections x ↦ ±x + b (6)
        assert_eq!(homs.len(), 9);
    }

    #[test]
    fn endos_of_r9_are_affine() {
        let r9 = make_dihedral(9).unwrap();
        let endos = enumerate_endos(r9.as_biquandle());
        let mut affine: Vec<Endomorphism> = (0..9i64)
            .flat_map(|a| (0..9i64).map(move |b| (a, b)))
            .map(|(a, b)| {
                Endomorphism(
                    (0..9usize)
                        .map(|i| {
                            let x = crate::algebra::index_to_residue(9, i) as i64;
                            crate::algebra::residue_to_index(9, a * x + b) as u8
                        })
                        .collect(),
                )
            })
            .collect();
        affine.sort();
        affine.dedup();
        assert_eq!(endos, affine);
    }

    #[test]
    fn homs_from_trivial_biquandle() {
        let one = make_dihedral(1).unwrap();
        let z = make_linear_biquandle(4, 3, 0, 1, 2).unwrap();
        // only elements with y ⊼ y = y ⊻ y = y are images of the one-point biquandle
        let homs = enumerate_homs(one.as_biquandle(), &z);
        let fixed = (0..4).filter(|&y| z.over(y, y) == y && z.under(y, y) == y).count();
        assert_eq!(homs.len(), fixed);
        let r5 = make_dihedral(5).unwrap();
        assert_eq!(enumerate_homs(one.as_biquandle(), r5.as_biquandle()).len(), 5);
    }

    #[test]
    fn endos_of_z_match_brute_force() {
        let z = make_linear_biquandle(4, 3, 0, 1, 2).unwrap();
        assert_eq!(enumerate_endos(&z), brute_force(&z, &z));
    }

    #[test]
    fn parse_and_display() {
        let f = Endomorphism::parse("2,4,2,4").unwrap();
        assert_eq!(f.images(), &[1, 3, 1, 3]);
        assert_eq!(f.to_string(), "2 4 2 4");
        assert!(Endomorphism::parse("0,1").is_none());
    }
}
