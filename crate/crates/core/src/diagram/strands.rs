use serde::Serialize;

use super::SemiarcDiagram;

/// A maximal overpass: semiarcs in traversal order, joined across crossings
/// where they pass over and broken where they pass under.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct Strand(pub Vec<usize>);

/// Strands of a diagram with their incidence at each crossing.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct StrandData {
    pub strands: Vec<Strand>,
    /// Strand index of every semiarc.
    pub strand_of: Vec<usize>,
    /// Per crossing: the over strand.
    pub over: Vec<usize>,
    /// Per crossing: the incoming and outgoing under strands, which are adjacent.
    pub under: Vec<(usize, usize)>,
}

/// Splits the semiarcs into strands.
///
/// A strand starts right after an undercrossing. A component that never
/// passes under is a single strand starting at its lowest semiarc.
pub fn strands(d: &SemiarcDiagram) -> StrandData {
    let m = d.semiarc_count();
    // over continuation of each semiarc, None where it dives under
    let mut over_next: Vec<Option<usize>> = vec![None; m];
    let mut starts_strand = vec![false; m];
    for c in d.crossings() {
        over_next[c.over_in] = Some(c.over_out);
        starts_strand[c.under_out] = true;
    }
    let mut strand_of = vec![usize::MAX; m];
    let mut list = Vec::new();
    let walk = |start: usize, strand_of: &mut Vec<usize>, list: &mut Vec<Strand>| {
        let id = list.len();
        let mut arcs = Vec::new();
        let mut s = start;
        loop {
            strand_of[s] = id;
            arcs.push(s);
            match over_next[s] {
                Some(t) if strand_of[t] == usize::MAX && !starts_strand[t] => s = t,
                _ => break,
            }
        }
        list.push(Strand(arcs));
    };
    for s in 0..m {
        if starts_strand[s] && strand_of[s] == usize::MAX {
            walk(s, &mut strand_of, &mut list);
        }
    }
    for s in 0..m {
        if strand_of[s] == usize::MAX {
            walk(s, &mut strand_of, &mut list);
        }
    }
    let over = d.crossings().iter().map(|c| strand_of[c.over_in]).collect();
    let under = d.crossings().iter().map(|c| (strand_of[c.under_in], strand_of[c.under_out])).collect();
    StrandData { strands: list, strand_of, over, under }
}
