//! Wirtinger coloring sequences and counting bounds for the bridge indices.
//!
//! A coloring move at a crossing whose over strand is colored copies the color
//! of one under strand onto the other, uncolored, under strand. Colors are
//! abstract tokens, one per seed.

use serde::Serialize;
use thiserror::Error;

use crate::algebra::{FiniteBiquandle, Quandle};
use crate::diagram::{strands, SemiarcDiagram, StrandData};
use crate::exec::Exec;

/// Default cap on seed-set size for [`min_seed_size`].
pub const DEFAULT_K_MAX: usize = 6;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum BridgeError {
    #[error("unknown strand {strand}; the diagram has {count} strands")]
    UnknownStrand { strand: usize, count: usize },
    #[error("coloring count is zero, but constant colorings always exist")]
    ZeroCount,
    #[error("target has {0} element(s); counting bounds need at least 2")]
    TrivialTarget(usize),
}

/// One coloring move: at `crossing`, `strand` receives color `token`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct MoveStep {
    pub crossing: usize,
    pub strand: usize,
    pub token: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SeedReport {
    /// Seed strands in increasing order; seed `i` carries token `i`.
    pub seed_set: Vec<usize>,
    pub saturated: bool,
    pub sequence: Vec<MoveStep>,
    /// Final token per strand.
    pub labels: Vec<Option<usize>>,
    /// Seeds plus one per crossingless loop, when saturated.
    pub b1_upper: Option<usize>,
}

/// A crossing that can fire under `labels`: (strand to color, strand to copy from).
fn eligible(sd: &StrandData, labels: &[Option<usize>], x: usize) -> Option<(usize, usize)> {
    labels[sd.over[x]]?;
    let (a, b) = sd.under[x];
    match (labels[a], labels[b]) {
        (Some(_), None) => Some((b, a)),
        (None, Some(_)) => Some((a, b)),
        _ => None,
    }
}

fn check_seeds(sd: &StrandData, seeds: &[usize]) -> Result<Vec<usize>, BridgeError> {
    let count = sd.strands.len();
    if let Some(&strand) = seeds.iter().find(|&&s| s >= count) {
        return Err(BridgeError::UnknownStrand { strand, count });
    }
    let mut s = seeds.to_vec();
    s.sort_unstable();
    s.dedup();
    Ok(s)
}

/// Applies coloring moves from `seeds` until none applies, always firing the
/// lowest-index eligible crossing.
pub fn wirtinger_saturate(d: &SemiarcDiagram, seeds: &[usize]) -> Result<SeedReport, BridgeError> {
    let sd = strands(d);
    let seed_set = check_seeds(&sd, seeds)?;
    let mut labels = vec![None; sd.strands.len()];
    for (token, &s) in seed_set.iter().enumerate() {
        labels[s] = Some(token);
    }
    let mut sequence = Vec::new();
    while let Some((x, (to, from))) = (0..d.crossings().len()).find_map(|x| eligible(&sd, &labels, x).map(|e| (x, e))) {
        let token = labels[from].expect("source strand is colored");
        labels[to] = Some(token);
        sequence.push(MoveStep { crossing: x, strand: to, token });
    }
    let saturated = labels.iter().all(Option::is_some);
    let b1_upper = saturated.then_some(seed_set.len() + d.free_loops());
    Ok(SeedReport { seed_set, saturated, sequence, labels, b1_upper })
}

/// Colored-strand closure without bookkeeping.
fn saturates(sd: &StrandData, seeds: &[usize]) -> bool {
    let mut colored = vec![false; sd.strands.len()];
    let mut left = sd.strands.len();
    for &s in seeds {
        if !colored[s] {
            colored[s] = true;
            left -= 1;
        }
    }
    let mut changed = true;
    while changed && left > 0 {
        changed = false;
        for x in 0..sd.over.len() {
            if !colored[sd.over[x]] {
                continue;
            }
            let (a, b) = sd.under[x];
            if colored[a] != colored[b] {
                colored[a] = true;
                colored[b] = true;
                left -= 1;
                changed = true;
            }
        }
    }
    left == 0
}

/// Result of [`min_seed_size`].
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SeedSearch {
    /// Seeds needed: the witness size plus one per crossingless loop.
    pub size: usize,
    /// Lexicographically least saturating strand set of the minimal size.
    pub witness: Vec<usize>,
}

/// Smallest saturating seed set with at most `k_max` strands, searched by
/// increasing size and lexicographically within a size.
pub fn min_seed_size(d: &SemiarcDiagram, k_max: usize) -> Option<SeedSearch> {
    min_seed_size_with(d, k_max, Exec::default())
}

pub fn min_seed_size_with(d: &SemiarcDiagram, k_max: usize, exec: Exec) -> Option<SeedSearch> {
    let sd = strands(d);
    let n = sd.strands.len();
    if n == 0 {
        return Some(SeedSearch { size: d.free_loops(), witness: Vec::new() });
    }
    for k in 1..=k_max.min(n) {
        let firsts: Vec<usize> = (0..=n - k).collect();
        // least witness per leading strand; the overall least has the smallest lead
        let found = exec.map(&firsts, |&first| first_combination(&sd, n, k, first));
        if let Some(witness) = found.into_iter().flatten().next() {
            return Some(SeedSearch { size: k + d.free_loops(), witness });
        }
    }
    None
}

/// Lexicographically least saturating k-subset of `0..n` whose least element is `first`.
fn first_combination(sd: &StrandData, n: usize, k: usize, first: usize) -> Option<Vec<usize>> {
    let mut combo: Vec<usize> = (first..first + k).collect();
    loop {
        if saturates(sd, &combo) {
            return Some(combo);
        }
        // advance positions 1..k, keeping combo[0] fixed
        let mut i = k;
        loop {
            if i <= 1 {
                return None;
            }
            i -= 1;
            if combo[i] < n - k + i {
                combo[i] += 1;
                for j in i + 1..k {
                    combo[j] = combo[j - 1] + 1;
                }
                break;
            }
        }
    }
}

fn log_ceil(order: usize, count: u128) -> Result<u32, BridgeError> {
    if order < 2 {
        return Err(BridgeError::TrivialTarget(order));
    }
    if count == 0 {
        return Err(BridgeError::ZeroCount);
    }
    let mut b = 0u32;
    let mut power = 1u128;
    while power < count {
        power = power.saturating_mul(order as u128);
        b += 1;
    }
    Ok(b)
}

/// Largest `⌈log_|X| Col⌉` over quandle counts: a lower bound for the first bridge index.
pub fn b1_lower(counts: &[(&Quandle, u128)]) -> Result<u32, BridgeError> {
    counts.iter().try_fold(0, |acc, (q, c)| Ok(acc.max(log_ceil(q.order(), *c)?)))
}

/// Largest `⌈log_|X| Col⌉` over biquandle counts: a lower bound for the second bridge index.
pub fn b2_lower(counts: &[(&FiniteBiquandle, u128)]) -> Result<u32, BridgeError> {
    counts.iter().try_fold(0, |acc, (y, c)| Ok(acc.max(log_ceil(y.order(), *c)?)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{biquandle_z, make_dihedral};
    use crate::diagram::{chain, parse_pd, pretzel, torus_2n};
    use rand::rngs::StdRng;
    use rand::seq::SliceRandom;
    use rand::{Rng, SeedableRng};

    #[test]
    fn trefoil_saturates_from_two_strands() {
        let t = torus_2n(3).unwrap();
        let r = wirtinger_saturate(&t, &[0, 1]).unwrap();
        assert!(r.saturated);
        assert_eq!(r.sequence.len(), 1);
        assert_eq!(r.b1_upper, Some(2));
        assert!(!wirtinger_saturate(&t, &[2]).unwrap().saturated);
    }

    #[test]
    fn all_strands_saturate() {
        let c = chain(5).unwrap();
        let all: Vec<usize> = (0..strands(&c).strands.len()).collect();
        let r = wirtinger_saturate(&c, &all).unwrap();
        assert!(r.saturated && r.sequence.is_empty());
    }

    #[test]
    fn chain_needs_more_than_one_seed() {
        let c = chain(3).unwrap();
        for s in 0..strands(&c).strands.len() {
            assert!(!wirtinger_saturate(&c, &[s]).unwrap().saturated);
        }
        assert!(matches!(wirtinger_saturate(&c, &[99]), Err(BridgeError::UnknownStrand { strand: 99, .. })));
    }

    #[test]
    fn minimal_seeds() {
        let kink = parse_pd("X+ 0 1 1 0\n").unwrap();
        assert_eq!(min_seed_size(&kink, DEFAULT_K_MAX).unwrap().size, 1);
        let t = min_seed_size(&torus_2n(3).unwrap(), DEFAULT_K_MAX).unwrap();
        assert_eq!((t.size, t.witness.clone()), (2, vec![0, 1]));
        assert_eq!(min_seed_size(&pretzel(&[3, 3, 3]).unwrap(), DEFAULT_K_MAX).unwrap().size, 3);
        assert_eq!(min_seed_size(&SemiarcDiagram::unknot(), 3).unwrap().size, 1);
        assert!(min_seed_size(&chain(5).unwrap(), 1).is_none());
    }

    #[test]
    fn parallel_and_sequential_witnesses_agree() {
        for d in [chain(5).unwrap(), pretzel(&[3, -2, 5]).unwrap(), torus_2n(7).unwrap()] {
            assert_eq!(min_seed_size_with(&d, 6, Exec::Sequential), min_seed_size_with(&d, 6, Exec::Parallel));
        }
    }

    #[test]
    fn witness_is_lexicographically_least() {
        let d = pretzel(&[3, 3, 3]).unwrap();
        let found = min_seed_size(&d, 6).unwrap();
        let sd = strands(&d);
        let n = sd.strands.len();
        let k = found.witness.len();
        // independent scan over all k-subsets in lexicographic order
        let mut first = None;
        for mask in 0u32..(1 << n) {
            if mask.count_ones() as usize != k {
                continue;
            }
            let set: Vec<usize> = (0..n).filter(|i| mask & (1 << i) != 0).collect();
            if saturates(&sd, &set) && first.as_ref().map_or(true, |f: &Vec<usize>| set < *f) {
                first = Some(set);
            }
        }
        assert_eq!(first.unwrap(), found.witness);
    }

    #[test]
    fn saturation_is_monotone_and_confluent() {
        let mut rng = StdRng::seed_from_u64(7);
        let diagrams = [chain(5).unwrap(), pretzel(&[3, 3, 3]).unwrap(), pretzel(&[9, 2, 9]).unwrap()];
        for d in &diagrams {
            let sd = strands(d);
            let n = sd.strands.len();
            for _ in 0..40 {
                let k = rng.gen_range(1..=n.min(4));
                let mut seeds: Vec<usize> = (0..n).collect();
                seeds.shuffle(&mut rng);
                seeds.truncate(k);
                let base = wirtinger_saturate(d, &seeds).unwrap();
                // random firing order reaches the same colored set
                let mut colored: Vec<bool> = (0..n).map(|s| seeds.contains(&s)).collect();
                loop {
                    let fire: Vec<usize> = (0..d.crossings().len())
                        .filter(|&x| colored[sd.over[x]] && colored[sd.under[x].0] != colored[sd.under[x].1])
                        .collect();
                    let Some(&x) = fire.choose(&mut rng) else { break };
                    colored[sd.under[x].0] = true;
                    colored[sd.under[x].1] = true;
                }
                let by_report: Vec<bool> = base.labels.iter().map(Option::is_some).collect();
                assert_eq!(colored, by_report);
                if base.saturated {
                    let mut more = seeds.clone();
                    more.push(rng.gen_range(0..n));
                    assert!(wirtinger_saturate(d, &more).unwrap().saturated);
                }
            }
        }
    }

    #[test]
    fn counting_bounds() {
        let r3 = make_dihedral(3).unwrap();
        let z = biquandle_z();
        assert_eq!(b1_lower(&[(&r3, 9)]).unwrap(), 2);
        assert_eq!(b1_lower(&[(&r3, 3)]).unwrap(), 1);
        assert_eq!(b2_lower(&[(&z, 16)]).unwrap(), 2);
        assert_eq!(b2_lower(&[(&z, 17)]).unwrap(), 3);
        assert_eq!(b1_lower(&[(&r3, 0)]), Err(BridgeError::ZeroCount));
        let r1 = make_dihedral(1).unwrap();
        assert_eq!(b1_lower(&[(&r1, 1)]), Err(BridgeError::TrivialTarget(1)));
    }

    #[test]
    fn lower_bound_never_exceeds_seed_count() {
        let r = |n| make_dihedral(n).unwrap();
        let qs = [r(3), r(4), r(5), r(9)];
        for d in [torus_2n(3).unwrap(), torus_2n(5).unwrap(), chain(3).unwrap(), pretzel(&[3, 3, 3]).unwrap()] {
            let counts: Vec<(&Quandle, u128)> =
                qs.iter().map(|q| (q, crate::coloring::count_colorings(&d, q.as_biquandle()))).collect();
            let lower = b1_lower(&counts).unwrap() as usize;
            assert!(lower <= min_seed_size(&d, 6).unwrap().size);
        }
    }
}
