use super::{Crossing, DiagramError, SemiarcDiagram, Sign};

/// Closure of the 2-braid `σ₁ⁿ`: n positive crossings, 2n semiarcs.
///
/// Crossing `i` has inputs `2i` (over) and `2i+1` (under) and outputs
/// `2i+2` (under) and `2i+3` (over), indices mod 2n.
pub fn torus_2n(n: usize) -> Result<SemiarcDiagram, DiagramError> {
    if n == 0 {
        return Err(DiagramError::InvalidParameter("torus_2n needs n ≥ 1".into()));
    }
    let m = 2 * n;
    let crossings = (0..n)
        .map(|i| Crossing::new(Sign::Positive, 2 * i + 1, 2 * i, (2 * i + 2) % m, (2 * i + 3) % m))
        .collect();
    SemiarcDiagram::new(crossings, 0)
}

/// Closed necklace of `k` rings, ring `r` clasping rings `r ± 1 (mod k)`.
///
/// Ring `r` owns semiarcs `4r..4r+4`. Its outer group `{4r, 4r+1}` passes
/// over ring `r+1`; its inner group `{4r+2, 4r+3}` passes over ring `r-1`.
pub fn chain(k: usize) -> Result<SemiarcDiagram, DiagramError> {
    if k < 3 || k % 2 == 0 {
        return Err(DiagramError::InvalidParameter(format!("chain needs an odd k ≥ 3, got {k}")));
    }
    let mut crossings = Vec::with_capacity(2 * k);
    for r in 0..k {
        let s = (r + 1) % k;
        // ring r over ring s
        crossings.push(Crossing::new(Sign::Negative, 4 * s + 3, 4 * r, 4 * s, 4 * r + 1));
        // ring s over ring r
        crossings.push(Crossing::new(Sign::Negative, 4 * r + 1, 4 * s + 2, 4 * r + 2, 4 * s + 3));
    }
    SemiarcDiagram::new(crossings, 0)
}

/// Pretzel link with one vertical twist band per entry.
///
/// A positive entry twists with the NW–SE strand on top, a negative entry
/// with the NE–SW strand on top. Orientation follows a traversal that starts
/// through the first unvisited crossing of the lowest index.
pub fn pretzel(twists: &[i64]) -> Result<SemiarcDiagram, DiagramError> {
    pretzel_with_maxima(twists).map(|(d, _)| d)
}

/// As [`pretzel`], also returning the semiarc carrying each top arc: the arc
/// joining band `i` to band `i+1` for each `i`, ending with the outer arc.
/// An arc on a crossingless component has no semiarc and maps to `None`.
pub fn pretzel_with_maxima(twists: &[i64]) -> Result<(SemiarcDiagram, Vec<Option<usize>>), DiagramError> {
    if twists.is_empty() {
        return Err(DiagramError::InvalidParameter("pretzel needs at least one band".into()));
    }
    let mut p = Planar::default();
    let mut bands = Vec::new();
    for &t in twists {
        bands.push(p.band(t));
    }
    let k = bands.len();
    let mut tops = Vec::with_capacity(k);
    for i in 0..k {
        let j = (i + 1) % k;
        tops.push(p.wire(bands[i].tr, bands[j].tl));
        p.wire(bands[i].br, bands[j].bl);
    }
    let (d, edge_arc) = p.finish()?;
    let maxima = tops.iter().map(|&e| edge_arc[e]).collect();
    Ok((d, maxima))
}

const NW: usize = 0;
const NE: usize = 1;
const SW: usize = 2;
const SE: usize = 3;
const CORNER_POS: [(i64, i64); 4] = [(-1, 1), (1, 1), (-1, -1), (1, -1)];

#[derive(Clone, Copy)]
enum Node {
    Corner { crossing: usize, corner: usize },
    Junction,
}

struct PlanarCrossing {
    corners: [usize; 4],
    nw_se_over: bool,
}

struct Band {
    tl: usize,
    tr: usize,
    bl: usize,
    br: usize,
}

/// Crossings with four corners joined by wires through degree-2 junctions.
#[derive(Default)]
struct Planar {
    nodes: Vec<Node>,
    edges: Vec<(usize, usize)>,
    node_edges: Vec<Vec<usize>>,
    crossings: Vec<PlanarCrossing>,
}

impl Planar {
    fn node(&mut self, n: Node) -> usize {
        self.nodes.push(n);
        self.node_edges.push(Vec::new());
        self.nodes.len() - 1
    }

    fn wire(&mut self, a: usize, b: usize) -> usize {
        self.edges.push((a, b));
        let e = self.edges.len() - 1;
        self.node_edges[a].push(e);
        self.node_edges[b].push(e);
        e
    }

    fn crossing(&mut self, nw_se_over: bool) -> [usize; 4] {
        let id = self.crossings.len();
        let corners = [NW, NE, SW, SE].map(|corner| self.node(Node::Corner { crossing: id, corner }));
        self.crossings.push(PlanarCrossing { corners, nw_se_over });
        corners
    }

    /// A vertical twist band with |t| crossings; returns its four junctions.
    fn band(&mut self, t: i64) -> Band {
        let b = Band {
            tl: self.node(Node::Junction),
            tr: self.node(Node::Junction),
            bl: self.node(Node::Junction),
            br: self.node(Node::Junction),
        };
        let (mut left, mut right) = (b.tl, b.tr);
        for _ in 0..t.unsigned_abs() {
            let c = self.crossing(t > 0);
            self.wire(left, c[NW]);
            self.wire(right, c[NE]);
            left = c[SW];
            right = c[SE];
        }
        self.wire(left, b.bl);
        self.wire(right, b.br);
        b
    }

    fn other_end(&self, e: usize, from: usize) -> usize {
        let (a, b) = self.edges[e];
        if a == from {
            b
        } else {
            a
        }
    }

    /// Walks a wire from a corner; returns the corner reached and the edges used.
    fn follow(&self, start: usize, used: &mut [bool]) -> (usize, Vec<usize>) {
        let mut node = start;
        let mut e = self.node_edges[start][0];
        let mut path = Vec::new();
        loop {
            used[e] = true;
            path.push(e);
            node = self.other_end(e, node);
            if let Node::Corner { .. } = self.nodes[node] {
                return (node, path);
            }
            let next = self.node_edges[node].iter().copied().find(|&f| f != e).unwrap_or(e);
            e = next;
        }
    }

    fn finish(self) -> Result<(SemiarcDiagram, Vec<Option<usize>>), DiagramError> {
        let nc = self.crossings.len();
        // per crossing and corner: semiarc entering there, semiarc leaving there
        let mut enter: Vec<[Option<usize>; 4]> = vec![[None; 4]; nc];
        let mut leave: Vec<[Option<usize>; 4]> = vec![[None; 4]; nc];
        let mut used = vec![false; self.edges.len()];
        let mut edge_arc = vec![None; self.edges.len()];
        let mut next_arc = 0usize;
        let opposite = |c: usize| 3 - c;
        for x in 0..nc {
            for exit_corner in [SE, SW] {
                if leave[x][exit_corner].is_some() || enter[x][exit_corner].is_some() {
                    continue;
                }
                let (mut cx, mut corner) = (x, exit_corner);
                loop {
                    let start = self.crossings[cx].corners[corner];
                    let (arrive, path) = self.follow(start, &mut used);
                    let Node::Corner { crossing: ax, corner: ac } = self.nodes[arrive] else {
                        unreachable!()
                    };
                    let s = next_arc;
                    next_arc += 1;
                    for e in path {
                        edge_arc[e] = Some(s);
                    }
                    leave[cx][corner] = Some(s);
                    enter[ax][ac] = Some(s);
                    cx = ax;
                    corner = opposite(ac);
                    if leave[cx][corner].is_some() {
                        break;
                    }
                }
            }
        }
        // wires never reached from a crossing close up into crossingless loops
        let mut free_loops = 0;
        for e in 0..self.edges.len() {
            if used[e] {
                continue;
            }
            free_loops += 1;
            let (start, _) = self.edges[e];
            let (mut node, mut cur) = (start, e);
            loop {
                used[cur] = true;
                node = self.other_end(cur, node);
                match self.node_edges[node].iter().copied().find(|&f| !used[f]) {
                    Some(f) => cur = f,
                    None => break,
                }
            }
        }

        let mut crossings = Vec::with_capacity(nc);
        for (x, pc) in self.crossings.iter().enumerate() {
            let pass = |a: usize, b: usize| -> (usize, usize, usize, usize) {
                // (entry corner, exit corner, in semiarc, out semiarc)
                if enter[x][a].is_some() {
                    (a, b, enter[x][a].unwrap(), leave[x][b].unwrap())
                } else {
                    (b, a, enter[x][b].unwrap(), leave[x][a].unwrap())
                }
            };
            let diag1 = pass(NW, SE);
            let diag2 = pass(NE, SW);
            let (over, under) = if pc.nw_se_over { (diag1, diag2) } else { (diag2, diag1) };
            let dir = |p: (usize, usize, usize, usize)| {
                let (a, b) = (CORNER_POS[p.0], CORNER_POS[p.1]);
                (b.0 - a.0, b.1 - a.1)
            };
            let (o, u) = (dir(over), dir(under));
            let sign = if o.0 * u.1 - o.1 * u.0 > 0 { Sign::Positive } else { Sign::Negative };
            crossings.push(Crossing::new(sign, under.2, over.2, under.3, over.3));
        }
        let d = SemiarcDiagram::new(crossings, free_loops)?;
        Ok((d, edge_arc))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn torus_small_cases() {
        let t1 = torus_2n(1).unwrap();
        assert_eq!(t1.crossings(), &[Crossing::new(Sign::Positive, 1, 0, 0, 1)]);
        assert_eq!(t1.component_count(), 1);
        let t3 = torus_2n(3).unwrap();
        assert_eq!((t3.crossings().len(), t3.semiarc_count(), t3.component_count()), (3, 6, 1));
        assert_eq!(torus_2n(4).unwrap().component_count(), 2);
        assert!(torus_2n(0).is_err());
    }

    #[test]
    fn chain_shape() {
        for k in [3, 5, 7] {
            let c = chain(k).unwrap();
            assert_eq!(c.crossings().len(), 2 * k);
            assert_eq!(c.component_count(), k);
        }
        assert!(chain(4).is_err());
        assert!(chain(1).is_err());
    }

    #[test]
    fn pretzel_shapes() {
        let p = pretzel(&[1]).unwrap();
        assert_eq!((p.crossings().len(), p.component_count()), (1, 1));
        let p = pretzel(&[3, 3, 3]).unwrap();
        assert_eq!((p.crossings().len(), p.component_count()), (9, 1));
        let (p, maxima) = pretzel_with_maxima(&[9, 2, 9]).unwrap();
        assert_eq!((p.crossings().len(), p.semiarc_count(), p.component_count()), (20, 40, 1));
        assert_eq!(maxima.len(), 3);
        assert!(maxima.iter().all(|m| m.is_some()));
        // P(1,1,1) is the trefoil; P(2,2) has two components
        assert_eq!(pretzel(&[1, 1, 1]).unwrap().component_count(), 1);
        assert_eq!(pretzel(&[2, 2]).unwrap().component_count(), 2);
        assert_eq!(pretzel(&[0]).unwrap(), SemiarcDiagram::new(vec![], 1).unwrap());
        assert!(pretzel(&[]).is_err());
    }

    #[test]
    fn pretzel_twist_bands_share_signs() {
        // all crossings of a single band have one sign
        for t in [-4i64, -1, 2, 5] {
            let p = pretzel(&[t, 1, 1]).unwrap();
            let band: Vec<Sign> = p.crossings()[..t.unsigned_abs() as usize].iter().map(|c| c.sign).collect();
            assert!(band.windows(2).all(|w| w[0] == w[1]), "{t}: {band:?}");
        }
    }
}
