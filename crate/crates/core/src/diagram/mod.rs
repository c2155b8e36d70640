//! Oriented virtual link diagrams as signed crossings over semiarcs.
//!
//! A semiarc runs from the crossing where it is an output to the crossing
//! where it is an input. Virtual crossings are not recorded; the diagram is
//! abstract Gauss data.

mod families;
mod knots;
mod moves;
mod parse;
mod strands;

pub use families::{chain, pretzel, pretzel_with_maxima, torus_2n};
pub use knots::{builtin_knots, parse_knot_table, KnotRecord, KnotTable};
pub use moves::{apply_r1, apply_r1_to_loop, apply_r2, connected_sum, KinkKind, R2Variant};
pub use parse::{parse_pd, serialize_pd};
pub use strands::{strands, Strand, StrandData};

use std::fmt;

use serde::Serialize;
use thiserror::Error;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum Sign {
    Positive,
    Negative,
}

impl Sign {
    pub fn flip(self) -> Sign {
        match self {
            Sign::Positive => Sign::Negative,
            Sign::Negative => Sign::Positive,
        }
    }
}

impl fmt::Display for Sign {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Sign::Positive => "+",
            Sign::Negative => "-",
        })
    }
}

/// One classical crossing: the under strand passes `under_in → under_out`, the
/// over strand `over_in → over_out`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct Crossing {
    pub sign: Sign,
    pub under_in: usize,
    pub over_in: usize,
    pub under_out: usize,
    pub over_out: usize,
}

impl Crossing {
    pub fn new(sign: Sign, under_in: usize, over_in: usize, under_out: usize, over_out: usize) -> Self {
        Crossing { sign, under_in, over_in, under_out, over_out }
    }

    pub fn inputs(&self) -> [usize; 2] {
        [self.under_in, self.over_in]
    }

    pub fn outputs(&self) -> [usize; 2] {
        [self.under_out, self.over_out]
    }

    fn map_ids(&self, f: impl Fn(usize) -> usize) -> Crossing {
        Crossing {
            sign: self.sign,
            under_in: f(self.under_in),
            over_in: f(self.over_in),
            under_out: f(self.under_out),
            over_out: f(self.over_out),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DiagramError {
    #[error("{0}")]
    Dangling(String),
    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },
    #[error("invalid semiarc {0}")]
    InvalidSemiarc(usize),
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub(crate) enum ProblemKind {
    NoSource,
    NoTarget,
    DuplicateInput,
    DuplicateOutput,
}

/// A record-level defect of one semiarc. "Source" is the record that consumes
/// the semiarc as `u_in`/`o_in`; "target" is the record producing it as `u_out`/`o_out`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub(crate) struct Problem {
    pub semiarc: usize,
    pub kind: ProblemKind,
}

impl fmt::Display for Problem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = self.semiarc;
        match self.kind {
            ProblemKind::NoSource => write!(f, "semiarc {s} has no source (it is never u_in or o_in)"),
            ProblemKind::NoTarget => write!(f, "semiarc {s} has no target (it is never u_out or o_out)"),
            ProblemKind::DuplicateInput => write!(f, "semiarc {s} is an input of more than one crossing"),
            ProblemKind::DuplicateOutput => write!(f, "semiarc {s} is an output of more than one crossing"),
        }
    }
}

/// Semiarc count implied by the records, plus every head/tail defect in id order.
pub(crate) fn check_records(crossings: &[Crossing]) -> (usize, Vec<Problem>) {
    let semiarc_count = crossings
        .iter()
        .flat_map(|c| [c.under_in, c.over_in, c.under_out, c.over_out])
        .max()
        .map_or(0, |m| m + 1);
    let mut ins = vec![0usize; semiarc_count];
    let mut outs = vec![0usize; semiarc_count];
    for c in crossings {
        for s in c.inputs() {
            ins[s] += 1;
        }
        for s in c.outputs() {
            outs[s] += 1;
        }
    }
    let mut problems = Vec::new();
    for s in 0..semiarc_count {
        let kind_in = match ins[s] {
            0 => Some(ProblemKind::NoSource),
            1 => None,
            _ => Some(ProblemKind::DuplicateInput),
        };
        let kind_out = match outs[s] {
            0 => Some(ProblemKind::NoTarget),
            1 => None,
            _ => Some(ProblemKind::DuplicateOutput),
        };
        problems.extend(kind_in.into_iter().chain(kind_out).map(|kind| Problem { semiarc: s, kind }));
    }
    (semiarc_count, problems)
}

/// A validated diagram: semiarcs `0..semiarc_count`, each with exactly one
/// source crossing and one target crossing, plus crossingless loops.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct SemiarcDiagram {
    semiarc_count: usize,
    crossings: Vec<Crossing>,
    free_loops: usize,
}

impl SemiarcDiagram {
    pub fn new(crossings: Vec<Crossing>, free_loops: usize) -> Result<Self, DiagramError> {
        let (semiarc_count, problems) = check_records(&crossings);
        if !problems.is_empty() {
            let msgs: Vec<String> = problems.iter().map(|p| p.to_string()).collect();
            return Err(DiagramError::Dangling(msgs.join("; ")));
        }
        Ok(SemiarcDiagram { semiarc_count, crossings, free_loops })
    }

    /// The crossingless unknot.
    pub fn unknot() -> Self {
        SemiarcDiagram { semiarc_count: 0, crossings: Vec::new(), free_loops: 1 }
    }

    pub fn semiarc_count(&self) -> usize {
        self.semiarc_count
    }

    pub fn crossings(&self) -> &[Crossing] {
        &self.crossings
    }

    pub fn free_loops(&self) -> usize {
        self.free_loops
    }

    /// For each semiarc, the index of the crossing it enters.
    pub fn targets(&self) -> Vec<usize> {
        let mut t = vec![0; self.semiarc_count];
        for (i, c) in self.crossings.iter().enumerate() {
            for s in c.inputs() {
                t[s] = i;
            }
        }
        t
    }

    /// For each semiarc, the semiarc that follows it along its component.
    pub fn successors(&self) -> Vec<usize> {
        let mut next = vec![0; self.semiarc_count];
        for c in &self.crossings {
            next[c.under_in] = c.under_out;
            next[c.over_in] = c.over_out;
        }
        next
    }

    /// Semiarcs grouped by link component (in traversal order), free loops excluded.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let next = self.successors();
        let mut seen = vec![false; self.semiarc_count];
        let mut out = Vec::new();
        for start in 0..self.semiarc_count {
            if seen[start] {
                continue;
            }
            let mut comp = Vec::new();
            let mut s = start;
            while !seen[s] {
                seen[s] = true;
                comp.push(s);
                s = next[s];
            }
            out.push(comp);
        }
        out
    }

    /// Number of link components including free loops.
    pub fn component_count(&self) -> usize {
        self.components().len() + self.free_loops
    }

    pub(crate) fn from_parts_unchecked(semiarc_count: usize, crossings: Vec<Crossing>, free_loops: usize) -> Self {
        SemiarcDiagram { semiarc_count, crossings, free_loops }
    }
}
