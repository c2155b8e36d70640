//! Line format:
//!
//! ```text
//! X+ u_in o_in u_out o_out
//! X- u_in o_in u_out o_out
//! L k          # k crossingless components
//! V a b c d    # virtual crossing: a continues as c, b continues as d
//! ```
//!
//! `#` starts a comment. Virtual crossings are erased on parse by merging the
//! semiarcs they join and renumbering the survivors in increasing order.

use std::collections::BTreeMap;

use super::{check_records, Crossing, DiagramError, SemiarcDiagram, Sign};

struct UnionFind(Vec<usize>);

impl UnionFind {
    fn find(&mut self, x: usize) -> usize {
        let mut r = x;
        while self.0[r] != r {
            r = self.0[r];
        }
        let mut y = x;
        while self.0[y] != r {
            let next = self.0[y];
            self.0[y] = r;
            y = next;
        }
        r
    }

    fn union(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra != rb {
            let (lo, hi) = if ra < rb { (ra, rb) } else { (rb, ra) };
            self.0[hi] = lo;
        }
    }
}

fn err(line: usize, msg: impl Into<String>) -> DiagramError {
    DiagramError::Parse { line, msg: msg.into() }
}

pub fn parse_pd(text: &str) -> Result<SemiarcDiagram, DiagramError> {
    let mut records: Vec<(usize, Sign, [usize; 4])> = Vec::new();
    let mut virtuals: Vec<(usize, [usize; 4])> = Vec::new();
    let mut free_loops = 0usize;
    for (i, raw) in text.lines().enumerate() {
        let line_no = i + 1;
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let mut tokens = line.split_whitespace();
        let head = tokens.next().unwrap_or_default();
        let nums = tokens
            .map(|t| t.parse::<usize>().map_err(|_| err(line_no, format!("expected a semiarc id, found {t:?}"))))
            .collect::<Result<Vec<_>, _>>()?;
        match head {
            "X+" | "X-" | "V" => {
                let ids: [usize; 4] = nums
                    .try_into()
                    .map_err(|v: Vec<usize>| err(line_no, format!("{head} takes 4 semiarc ids, found {}", v.len())))?;
                match head {
                    "X+" => records.push((line_no, Sign::Positive, ids)),
                    "X-" => records.push((line_no, Sign::Negative, ids)),
                    _ => virtuals.push((line_no, ids)),
                }
            }
            "L" => {
                let [k] = nums[..] else {
                    return Err(err(line_no, "L takes one count"));
                };
                free_loops += k;
            }
            other => return Err(err(line_no, format!("unknown record {other:?}"))),
        }
    }

    if !virtuals.is_empty() {
        let max_id = records
            .iter()
            .flat_map(|r| r.2)
            .chain(virtuals.iter().flat_map(|v| v.1))
            .max()
            .unwrap_or(0);
        let mut uf = UnionFind((0..=max_id).collect());
        for (_, [a, b, c, d]) in &virtuals {
            uf.union(*a, *c);
            uf.union(*b, *d);
        }
        let mut used: BTreeMap<usize, usize> = BTreeMap::new();
        for r in &records {
            for s in r.2 {
                used.insert(uf.find(s), 0);
            }
        }
        for (k, v) in used.values_mut().enumerate() {
            *v = k;
        }
        // classes touched only by virtual crossings are crossingless loops
        let mut loop_classes: Vec<usize> = virtuals.iter().flat_map(|v| v.1).map(|s| uf.find(s)).collect();
        loop_classes.sort_unstable();
        loop_classes.dedup();
        free_loops += loop_classes.iter().filter(|c| !used.contains_key(c)).count();
        for r in &mut records {
            for s in &mut r.2 {
                *s = used[&uf.find(*s)];
            }
        }
    }

    let crossings: Vec<Crossing> = records
        .iter()
        .map(|&(_, sign, [a, b, c, d])| Crossing::new(sign, a, b, c, d))
        .collect();
    let (count, problems) = check_records(&crossings);
    if let Some(p) = problems.first() {
        let line = records
            .iter()
            .rev()
            .find(|r| r.2.contains(&p.semiarc))
            .map_or_else(|| first_gap_line(&records, p.semiarc), |r| r.0);
        return Err(err(line, p.to_string()));
    }
    Ok(SemiarcDiagram::from_parts_unchecked(count, crossings, free_loops))
}

/// Line of the first record mentioning an id above `missing`, for ids that never appear.
fn first_gap_line(records: &[(usize, Sign, [usize; 4])], missing: usize) -> usize {
    records
        .iter()
        .find(|r| r.2.iter().any(|&s| s > missing))
        .map_or(1, |r| r.0)
}

/// Canonical text: one crossing per line in stored order, then `L k` when loops exist.
pub fn serialize_pd(d: &SemiarcDiagram) -> String {
    let mut out = String::new();
    for c in d.crossings() {
        out.push_str(&format!("X{} {} {} {} {}\n", c.sign, c.under_in, c.over_in, c.under_out, c.over_out));
    }
    if d.free_loops() > 0 {
        out.push_str(&format!("L {}\n", d.free_loops()));
    }
    out
}
