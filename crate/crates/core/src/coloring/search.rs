use crate::algebra::FiniteBiquandle;
use crate::diagram::SemiarcDiagram;
use crate::exec::Exec;

use super::{relation_slots, Coloring};

const UNSET: u8 = u8::MAX;
/// Partial assignments are expanded up to this many before parallel work starts.
const FRONTIER_TARGET: usize = 64;

/// Pairs of slot positions in a relation tuple.
const PAIRS: [(usize, usize); 6] = [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)];

/// The n² relation tuples `(p, q, p ⊻ q, q ⊼ p)` indexed by any one or two slot values.
struct RelationIndex {
    n: usize,
    tuples: Vec<[u8; 4]>,
    single: Vec<Vec<u32>>,
    pair: Vec<Vec<u32>>,
}

impl RelationIndex {
    fn new(y: &FiniteBiquandle) -> Self {
        let n = y.order();
        let mut tuples = Vec::with_capacity(n * n);
        for p in 0..n {
            for q in 0..n {
                tuples.push([p as u8, q as u8, y.under(p, q) as u8, y.over(q, p) as u8]);
            }
        }
        let mut single = vec![Vec::new(); 4 * n];
        let mut pair = vec![Vec::new(); PAIRS.len() * n * n];
        for (id, t) in tuples.iter().enumerate() {
            for slot in 0..4 {
                single[slot * n + t[slot] as usize].push(id as u32);
            }
            for (k, &(i, j)) in PAIRS.iter().enumerate() {
                pair[(k * n + t[i] as usize) * n + t[j] as usize].push(id as u32);
            }
        }
        RelationIndex { n, tuples, single, pair }
    }

    fn candidates(&self, known: &[(usize, u8)]) -> &[u32] {
        match known {
            [(i, vi), (j, vj), ..] => {
                let k = PAIRS.iter().position(|&p| p == (*i, *j)).expect("slots in increasing order");
                &self.pair[(k * self.n + *vi as usize) * self.n + *vj as usize]
            }
            [(i, vi)] => &self.single[i * self.n + *vi as usize],
            [] => &[],
        }
    }
}

struct Solver {
    slots: Vec<[usize; 4]>,
    incident: Vec<Vec<usize>>,
    index: RelationIndex,
    n: usize,
    m: usize,
}

impl Solver {
    fn new(d: &SemiarcDiagram, y: &FiniteBiquandle) -> Self {
        let slots: Vec<[usize; 4]> = d.crossings().iter().map(relation_slots).collect();
        let mut incident = vec![Vec::new(); d.semiarc_count()];
        for (x, s) in slots.iter().enumerate() {
            for &a in s {
                if incident[a].last() != Some(&x) {
                    incident[a].push(x);
                }
            }
        }
        Solver { slots, incident, index: RelationIndex::new(y), n: y.order(), m: d.semiarc_count() }
    }

    /// Deduces everything forced at crossing `x`. Newly set semiarcs go on `queue`.
    fn deduce(&self, x: usize, assign: &mut [u8], queue: &mut Vec<usize>) -> bool {
        let s = self.slots[x];
        let mut known = [(0usize, 0u8); 4];
        let mut k = 0;
        for (slot, &a) in s.iter().enumerate() {
            if assign[a] != UNSET {
                known[k] = (slot, assign[a]);
                k += 1;
            }
        }
        if k == 0 {
            return true;
        }
        // agreed value per slot over all consistent tuples; UNSET marks disagreement
        let mut agreed = [None::<u8>; 4];
        let mut found = false;
        for &id in self.index.candidates(&known[..k]) {
            let t = &self.index.tuples[id as usize];
            if known[..k].iter().any(|&(slot, v)| t[slot] != v) {
                continue;
            }
            // repeated semiarcs within one crossing must carry one value
            if (0..4).any(|i| (i + 1..4).any(|j| s[i] == s[j] && t[i] != t[j])) {
                continue;
            }
            found = true;
            for slot in 0..4 {
                agreed[slot] = match agreed[slot] {
                    None => Some(t[slot]),
                    Some(v) if v == t[slot] => Some(v),
                    Some(_) => Some(UNSET),
                };
            }
        }
        if !found {
            return false;
        }
        for slot in 0..4 {
            let a = s[slot];
            if assign[a] == UNSET {
                if let Some(v) = agreed[slot].filter(|&v| v != UNSET) {
                    assign[a] = v;
                    queue.push(a);
                }
            }
        }
        true
    }

    fn propagate(&self, assign: &mut [u8], mut queue: Vec<usize>) -> bool {
        while let Some(a) = queue.pop() {
            for &x in &self.incident[a] {
                if !self.deduce(x, assign, &mut queue) {
                    return false;
                }
            }
        }
        true
    }

    /// Children of a partial assignment: branch on its lowest unset semiarc.
    fn branch(&self, assign: &[u8]) -> Option<Vec<Vec<u8>>> {
        let a = assign.iter().position(|&v| v == UNSET)?;
        let mut kids = Vec::with_capacity(self.n);
        for v in 0..self.n {
            let mut next = assign.to_vec();
            next[a] = v as u8;
            if self.propagate(&mut next, vec![a]) {
                kids.push(next);
            }
        }
        Some(kids)
    }

    fn visit(&self, assign: Vec<u8>, leaf: &mut dyn FnMut(Vec<u8>)) {
        match self.branch(&assign) {
            None => leaf(assign),
            Some(kids) => {
                for k in kids {
                    self.visit(k, leaf);
                }
            }
        }
    }

    /// Breadth-first expansion into independent subproblems, plus any leaves met on the way.
    fn frontier(&self) -> (Vec<Vec<u8>>, Vec<Vec<u8>>) {
        let mut open = vec![vec![UNSET; self.m]];
        let mut done = Vec::new();
        while !open.is_empty() && open.len() < FRONTIER_TARGET {
            let mut next = Vec::new();
            for a in open {
                match self.branch(&a) {
                    None => done.push(a),
                    Some(kids) => next.extend(kids),
                }
            }
            open = next;
        }
        (open, done)
    }
}

/// All colorings of `d` by `y`, sorted lexicographically. Free loops are not materialized.
pub fn enumerate_colorings(d: &SemiarcDiagram, y: &FiniteBiquandle) -> Vec<Coloring> {
    enumerate_colorings_with(d, y, Exec::default())
}

pub fn enumerate_colorings_with(d: &SemiarcDiagram, y: &FiniteBiquandle, exec: Exec) -> Vec<Coloring> {
    let solver = Solver::new(d, y);
    let (open, done) = solver.frontier();
    let parts = exec.map(&open, |a| {
        let mut out = Vec::new();
        solver.visit(a.clone(), &mut |leaf| out.push(leaf));
        out
    });
    let mut all: Vec<Coloring> = done.into_iter().chain(parts.into_iter().flatten()).map(Coloring).collect();
    all.sort_unstable();
    all
}

/// Colorings with one extra trailing coordinate per free loop, so the list has
/// exactly `Col_Y(d)` entries. Still sorted.
pub fn enumerate_colorings_with_loops(d: &SemiarcDiagram, y: &FiniteBiquandle, exec: Exec) -> Vec<Coloring> {
    let mut all = enumerate_colorings_with(d, y, exec);
    for _ in 0..d.free_loops() {
        all = all
            .into_iter()
            .flat_map(|c| {
                (0..y.order()).map(move |v| {
                    let mut values = c.0.clone();
                    values.push(v as u8);
                    Coloring(values)
                })
            })
            .collect();
    }
    all
}

/// `Col_Y(d)`, including a factor `|Y|` per free loop.
pub fn count_colorings(d: &SemiarcDiagram, y: &FiniteBiquandle) -> u128 {
    count_colorings_with(d, y, Exec::default())
}

pub fn count_colorings_with(d: &SemiarcDiagram, y: &FiniteBiquandle, exec: Exec) -> u128 {
    let solver = Solver::new(d, y);
    let (open, done) = solver.frontier();
    let parts = exec.map(&open, |a| {
        let mut count = 0u128;
        solver.visit(a.clone(), &mut |_| count += 1);
        count
    });
    let diagram_count = done.len() as u128 + parts.iter().sum::<u128>();
    let loops = (y.order() as u128).checked_pow(d.free_loops() as u32).expect("count fits in u128");
    diagram_count.checked_mul(loops).expect("count fits in u128")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{biquandle_t, biquandle_z, make_dihedral, make_linear_biquandle};
    use crate::coloring::{brute_force_colorings, is_coloring};
    use crate::diagram::{chain, connected_sum, parse_pd, pretzel, torus_2n, SemiarcDiagram};

    #[test]
    fn matches_brute_force_on_small_diagrams() {
        let targets = [
            make_dihedral(3).unwrap().into_biquandle(),
            make_dihedral(4).unwrap().into_biquandle(),
            biquandle_z(),
            biquandle_t(),
            make_dihedral(1).unwrap().into_biquandle(),
        ];
        let diagrams = [
            torus_2n(1).unwrap(),
            torus_2n(2).unwrap(),
            torus_2n(3).unwrap(),
            torus_2n(4).unwrap(),
            pretzel(&[1, 1, 1]).unwrap(),
            pretzel(&[2, -1]).unwrap(),
            parse_pd("X+ 0 1 1 0\n").unwrap(),
            parse_pd("X- 0 1 1 0\n").unwrap(),
            parse_pd("X+ 0 2 1 3\nX- 1 3 0 2\n").unwrap(),
        ];
        for d in &diagrams {
            for y in &targets {
                let fast = enumerate_colorings_with(d, y, Exec::Sequential);
                assert_eq!(fast, brute_force_colorings(d, y).unwrap());
                assert_eq!(fast, enumerate_colorings_with(d, y, Exec::Parallel));
                assert_eq!(count_colorings(d, y), fast.len() as u128);
            }
        }
    }

    #[test]
    fn one_element_target_has_one_coloring() {
        let one = make_dihedral(1).unwrap().into_biquandle();
        for d in [torus_2n(5).unwrap(), chain(3).unwrap(), pretzel(&[3, 3, 3]).unwrap()] {
            assert_eq!(enumerate_colorings(&d, &one).len(), 1);
        }
    }

    #[test]
    fn free_loops_multiply() {
        let r5 = make_dihedral(5).unwrap();
        assert_eq!(count_colorings(&SemiarcDiagram::unknot(), r5.as_biquandle()), 5);
        let d = SemiarcDiagram::new(torus_2n(3).unwrap().crossings().to_vec(), 2).unwrap();
        assert_eq!(count_colorings(&d, r5.as_biquandle()), 5 * 25);
        assert_eq!(enumerate_colorings(&d, r5.as_biquandle()).len(), 5);
        let full = enumerate_colorings_with_loops(&d, r5.as_biquandle(), Exec::Sequential);
        assert_eq!(full.len(), 125);
        assert!(full.windows(2).all(|w| w[0] < w[1]));
    }

    #[test]
    fn known_counts() {
        let r = |n| make_dihedral(n).unwrap().into_biquandle();
        assert_eq!(count_colorings(&torus_2n(3).unwrap(), &r(3)), 9);
        assert_eq!(count_colorings(&torus_2n(4).unwrap(), &biquandle_z()), 16);
        assert_eq!(count_colorings(&pretzel(&[9, 2, 9]).unwrap(), &r(9)), 81);
        assert_eq!(count_colorings(&chain(5).unwrap(), &r(4)), 64);
        let t = torus_2n(3).unwrap();
        let (g, _) = connected_sum(&t, 0, &t, 0).unwrap();
        assert_eq!(count_colorings(&g, &r(3)), 27);
        assert_eq!(count_colorings(&g, &r(9)), 81);
    }

    #[test]
    fn endomorphic_images_are_colorings() {
        let z = biquandle_z();
        let d = torus_2n(4).unwrap();
        let endos = crate::algebra::enumerate_endos(&z);
        for c in enumerate_colorings(&d, &z) {
            for f in &endos {
                let img: Vec<u8> = c.values().iter().map(|&v| f.apply(v as usize) as u8).collect();
                assert!(is_coloring(&d, &z, &img));
            }
        }
    }

    #[test]
    fn constant_colorings_exist_for_quandles() {
        let q = make_linear_biquandle(7, 1, 0, 3, 5).unwrap();
        let d = pretzel(&[3, -2, 5]).unwrap();
        for v in 0..7u8 {
            assert!(is_coloring(&d, &q, &vec![v; d.semiarc_count()]));
        }
    }
}
