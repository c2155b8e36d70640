//! Coloring quivers: one vertex per coloring, one edge `c → φ∘c` per
//! endomorphism `φ` in the chosen set.

use std::collections::BTreeMap;

use serde::Serialize;
use thiserror::Error;

use crate::algebra::{Endomorphism, FiniteBiquandle};
use crate::coloring::{enumerate_colorings_with_loops, Coloring};
use crate::diagram::SemiarcDiagram;
use crate::exec::Exec;
pub use crate::poly::ExponentPolynomial;

/// Isomorphism testing refuses quivers with more vertices than this.
pub const MAX_ISO_VERTICES: usize = 5000;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum QuiverError {
    #[error("map {index} ({map}) is not an endomorphism of the target")]
    NotEndomorphism { index: usize, map: String },
    #[error("quiver has {0} vertices; isomorphism testing is capped at {MAX_ISO_VERTICES}")]
    TooLarge(usize),
}

/// Edge `(source, target, endomorphism index)`.
pub type Edge = (usize, usize, usize);

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ColoringQuiver {
    /// Sorted colorings; free-loop labels are trailing coordinates.
    pub vertices: Vec<Coloring>,
    /// Vertex-major, then in endomorphism order.
    pub edges: Vec<Edge>,
    pub endomorphisms: Vec<Endomorphism>,
}

impl ColoringQuiver {
    pub fn in_degrees(&self) -> Vec<u64> {
        let mut deg = vec![0u64; self.vertices.len()];
        for &(_, t, _) in &self.edges {
            deg[t] += 1;
        }
        deg
    }
}

pub fn build_quiver(d: &SemiarcDiagram, y: &FiniteBiquandle, s: &[Endomorphism]) -> Result<ColoringQuiver, QuiverError> {
    build_quiver_with(d, y, s, Exec::default())
}

pub fn build_quiver_with(
    d: &SemiarcDiagram,
    y: &FiniteBiquandle,
    s: &[Endomorphism],
    exec: Exec,
) -> Result<ColoringQuiver, QuiverError> {
    if let Some((index, f)) = s.iter().enumerate().find(|(_, f)| !f.is_hom(y, y)) {
        return Err(QuiverError::NotEndomorphism { index, map: f.to_string() });
    }
    let vertices = enumerate_colorings_with_loops(d, y, exec);
    let targets = exec.map(&vertices, |c| {
        s.iter()
            .map(|f| {
                let image = Coloring::new(c.values().iter().map(|&v| f.apply(v as usize) as u8).collect());
                vertices.binary_search(&image).expect("endomorphic image of a coloring is a coloring")
            })
            .collect::<Vec<_>>()
    });
    let edges = targets
        .into_iter()
        .enumerate()
        .flat_map(|(v, ts)| ts.into_iter().enumerate().map(move |(k, t)| (v, t, k)))
        .collect();
    Ok(ColoringQuiver { vertices, edges, endomorphisms: s.to_vec() })
}

/// `Σ_v u^{in-degree(v)}`.
pub fn in_degree_polynomial(q: &ColoringQuiver) -> ExponentPolynomial {
    ExponentPolynomial::from_exponents(q.in_degrees())
}

/// Multidigraph as per-vertex neighbor multiplicities, on a shared index space.
struct Union {
    n1: usize,
    out: Vec<Vec<(usize, u32)>>,
    inn: Vec<Vec<(usize, u32)>>,
}

impl Union {
    fn new(a: &ColoringQuiver, b: &ColoringQuiver) -> Self {
        let n1 = a.vertices.len();
        let n = n1 + b.vertices.len();
        let mut out: Vec<BTreeMap<usize, u32>> = vec![BTreeMap::new(); n];
        let mut inn: Vec<BTreeMap<usize, u32>> = vec![BTreeMap::new(); n];
        let all = a.edges.iter().map(|&(s, t, _)| (s, t)).chain(b.edges.iter().map(|&(s, t, _)| (s + n1, t + n1)));
        for (s, t) in all {
            *out[s].entry(t).or_insert(0) += 1;
            *inn[t].entry(s).or_insert(0) += 1;
        }
        let flat = |m: Vec<BTreeMap<usize, u32>>| m.into_iter().map(|e| e.into_iter().collect()).collect();
        Union { n1, out: flat(out), inn: flat(inn) }
    }

    fn len(&self) -> usize {
        self.out.len()
    }

    /// Colour refinement to a stable partition; colours are renumbered canonically
    /// from signatures, so equal colours mean the same thing on both sides.
    fn refine(&self, mut colors: Vec<usize>) -> Vec<usize> {
        let mut classes = distinct(&colors);
        loop {
            type Signature = (usize, Vec<(usize, u32)>, Vec<(usize, u32)>);
            let sigs: Vec<Signature> = (0..self.len())
                .map(|v| {
                    let profile = |adj: &[(usize, u32)]| {
                        let mut m: BTreeMap<usize, u32> = BTreeMap::new();
                        for &(w, k) in adj {
                            *m.entry(colors[w]).or_insert(0) += k;
                        }
                        m.into_iter().collect::<Vec<_>>()
                    };
                    (colors[v], profile(&self.out[v]), profile(&self.inn[v]))
                })
                .collect();
            let mut ids: BTreeMap<&Signature, usize> = BTreeMap::new();
            for sig in &sigs {
                let next = ids.len();
                ids.entry(sig).or_insert(next);
            }
            // ids follow signature order, which keeps the renumbering side-independent
            for (k, v) in ids.values_mut().enumerate() {
                *v = k;
            }
            colors = sigs.iter().map(|sig| ids[sig]).collect();
            let now = distinct(&colors);
            if now == classes {
                return colors;
            }
            classes = now;
        }
    }

    fn balanced(&self, colors: &[usize]) -> bool {
        let mut hist: BTreeMap<usize, i64> = BTreeMap::new();
        for (v, &c) in colors.iter().enumerate() {
            *hist.entry(c).or_insert(0) += if v < self.n1 { 1 } else { -1 };
        }
        hist.values().all(|&x| x == 0)
    }

    fn search(&self, colors: Vec<usize>) -> bool {
        let colors = self.refine(colors);
        if !self.balanced(&colors) {
            return false;
        }
        let mut size: BTreeMap<usize, usize> = BTreeMap::new();
        for &c in &colors[..self.n1] {
            *size.entry(c).or_insert(0) += 1;
        }
        let target = size.iter().filter(|(_, &k)| k > 1).min_by_key(|(_, &k)| k).map(|(&c, _)| c);
        let Some(cell) = target else {
            return self.is_isomorphism(&colors);
        };
        let v = (0..self.n1).find(|&v| colors[v] == cell).expect("cell is nonempty");
        let fresh = colors.iter().max().map_or(0, |m| m + 1);
        for w in (self.n1..self.len()).filter(|&w| colors[w] == cell) {
            let mut next = colors.clone();
            next[v] = fresh;
            next[w] = fresh;
            if self.search(next) {
                return true;
            }
        }
        false
    }

    /// With a discrete partition, colours pair vertices; check every edge multiplicity.
    fn is_isomorphism(&self, colors: &[usize]) -> bool {
        let mut partner: BTreeMap<usize, usize> = BTreeMap::new();
        for w in self.n1..self.len() {
            partner.insert(colors[w], w);
        }
        let map: Vec<usize> = (0..self.n1).map(|v| partner[&colors[v]]).collect();
        (0..self.n1).all(|v| {
            let mut image: Vec<(usize, u32)> = self.out[v].iter().map(|&(t, k)| (map[t], k)).collect();
            image.sort_unstable();
            image == self.out[map[v]]
        })
    }
}

fn distinct(colors: &[usize]) -> usize {
    let mut c = colors.to_vec();
    c.sort_unstable();
    c.dedup();
    c.len()
}

/// True iff the underlying multidigraphs are isomorphic (edge labels ignored).
pub fn quivers_isomorphic(a: &ColoringQuiver, b: &ColoringQuiver) -> Result<bool, QuiverError> {
    for q in [a, b] {
        if q.vertices.len() > MAX_ISO_VERTICES {
            return Err(QuiverError::TooLarge(q.vertices.len()));
        }
    }
    if a.vertices.len() != b.vertices.len() || a.edges.len() != b.edges.len() {
        return Ok(false);
    }
    if in_degree_polynomial(a) != in_degree_polynomial(b) {
        return Ok(false);
    }
    let u = Union::new(a, b);
    Ok(u.search(vec![0; u.len()]))
}


#[cfg(test)]
mod separation {
    use super::*;
    use crate::algebra::make_dihedral;
    use crate::diagram::{builtin_knots, connected_sum, pretzel, torus_2n};

    fn tripling() -> (FiniteBiquandle, Endomorphism) {
        let y = make_dihedral(9).unwrap().into_biquandle();
        (y, Endomorphism::parse("3,6,9,3,6,9,3,6,9").unwrap())
    }

    #[test]
    fn pretzel_versus_granny() {
        let (y, f) = tripling();
        let granny = connected_sum(&torus_2n(3).unwrap(), 0, &torus_2n(3).unwrap(), 0).unwrap().0;
        let qg = build_quiver(&granny, &y, &[f.clone()]).unwrap();
        assert_eq!(in_degree_polynomial(&qg).to_string(), "3u^27 + 78");
        for r in [1, 2] {
            let p = pretzel(&[9, 2 * r, 9]).unwrap();
            let qp = build_quiver(&p, &y, &[f.clone()]).unwrap();
            assert_eq!(in_degree_polynomial(&qp).to_string(), "9u^9 + 72");
            assert!(!quivers_isomorphic(&qp, &qg).unwrap());
        }
    }

    #[test]
    fn tripling_fibers_are_uniform() {
        // colorings form a Z/9-module and x ↦ 3x is linear, so every nonempty
        // fiber is a coset of the kernel, whose size is the R_3 count
        let (y, f) = tripling();
        let r3 = make_dihedral(3).unwrap().into_biquandle();
        for rec in builtin_knots().records() {
            let q = build_quiver(&rec.diagram, &y, &[f.clone()]).unwrap();
            let kernel = crate::coloring::count_colorings(&rec.diagram, &r3) as u64;
            let p = in_degree_polynomial(&q);
            assert!(p.terms().all(|(e, _)| e == 0 || e == kernel), "{}: {p}", rec.name);
        }
    }
}
