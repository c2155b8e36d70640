use super::{Crossing, DiagramError, SemiarcDiagram, Sign};

/// The four ways a kink can sit on a strand, by sign and by which of the two
/// passes the incoming semiarc takes.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum KinkKind {
    PositiveEnterUnder,
    PositiveEnterOver,
    NegativeEnterUnder,
    NegativeEnterOver,
}

impl KinkKind {
    pub const ALL: [KinkKind; 4] = [
        KinkKind::PositiveEnterUnder,
        KinkKind::PositiveEnterOver,
        KinkKind::NegativeEnterUnder,
        KinkKind::NegativeEnterOver,
    ];

    pub fn sign(self) -> Sign {
        match self {
            KinkKind::PositiveEnterUnder | KinkKind::PositiveEnterOver => Sign::Positive,
            _ => Sign::Negative,
        }
    }

    fn crossing(self, incoming: usize, loop_arc: usize, outgoing: usize) -> Crossing {
        let (s, l, t) = (incoming, loop_arc, outgoing);
        match self {
            KinkKind::PositiveEnterUnder | KinkKind::NegativeEnterUnder => Crossing::new(self.sign(), s, l, l, t),
            KinkKind::PositiveEnterOver | KinkKind::NegativeEnterOver => Crossing::new(self.sign(), l, s, t, l),
        }
    }
}

/// Placement of a Reidemeister II bigon between semiarcs `a` and `b`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct R2Variant {
    /// `a` passes over `b` at both new crossings; otherwise `b` passes over `a`.
    pub a_over: bool,
    /// Sign of the crossing `a` meets first.
    pub first_sign: Sign,
    /// `b` runs in the same direction as `a`; otherwise it meets the crossings in reverse order.
    pub parallel: bool,
}

impl R2Variant {
    pub fn all() -> Vec<R2Variant> {
        let mut v = Vec::new();
        for a_over in [true, false] {
            for first_sign in [Sign::Positive, Sign::Negative] {
                for parallel in [true, false] {
                    v.push(R2Variant { a_over, first_sign, parallel });
                }
            }
        }
        v
    }
}

fn check_semiarc(d: &SemiarcDiagram, s: usize) -> Result<(), DiagramError> {
    if s < d.semiarc_count() {
        Ok(())
    } else {
        Err(DiagramError::InvalidSemiarc(s))
    }
}

/// Replaces the input occurrence of `old` (at the crossing it enters) with `new`.
fn retarget(crossings: &mut [Crossing], old: usize, new: usize) {
    for c in crossings.iter_mut() {
        if c.under_in == old {
            c.under_in = new;
            return;
        }
        if c.over_in == old {
            c.over_in = new;
            return;
        }
    }
}

/// Adds a kink on `semiarc`. The original id keeps its source; the kink's
/// loop and outgoing semiarc get the two next ids.
pub fn apply_r1(d: &SemiarcDiagram, semiarc: usize, kind: KinkKind) -> Result<SemiarcDiagram, DiagramError> {
    check_semiarc(d, semiarc)?;
    let m = d.semiarc_count();
    let (loop_arc, outgoing) = (m, m + 1);
    let mut crossings = d.crossings().to_vec();
    retarget(&mut crossings, semiarc, outgoing);
    crossings.push(kind.crossing(semiarc, loop_arc, outgoing));
    Ok(SemiarcDiagram::from_parts_unchecked(m + 2, crossings, d.free_loops()))
}

/// Turns one crossingless loop into a one-crossing kink.
pub fn apply_r1_to_loop(d: &SemiarcDiagram, kind: KinkKind) -> Result<SemiarcDiagram, DiagramError> {
    if d.free_loops() == 0 {
        return Err(DiagramError::InvalidParameter("diagram has no crossingless loop".into()));
    }
    let m = d.semiarc_count();
    let mut crossings = d.crossings().to_vec();
    // a kink on a closed loop: incoming and outgoing are the same semiarc
    crossings.push(kind.crossing(m, m + 1, m));
    Ok(SemiarcDiagram::from_parts_unchecked(m + 2, crossings, d.free_loops() - 1))
}

/// Pushes `a` across `b` (or `b` across `a`), adding two crossings of opposite sign.
///
/// New ids: `a` continues as `m` then `m+1`, `b` as `m+2` then `m+3`, where m
/// is the old semiarc count.
pub fn apply_r2(d: &SemiarcDiagram, a: usize, b: usize, variant: R2Variant) -> Result<SemiarcDiagram, DiagramError> {
    check_semiarc(d, a)?;
    check_semiarc(d, b)?;
    if a == b {
        return Err(DiagramError::InvalidParameter("R2 needs two distinct semiarcs".into()));
    }
    let m = d.semiarc_count();
    let (a_mid, a_end, b_mid, b_end) = (m, m + 1, m + 2, m + 3);
    let mut crossings = d.crossings().to_vec();
    retarget(&mut crossings, a, a_end);
    retarget(&mut crossings, b, b_end);
    // b's (in, out) at the first and second crossing along a
    let (b1, b2) = if variant.parallel { ((b, b_mid), (b_mid, b_end)) } else { ((b_mid, b_end), (b, b_mid)) };
    let make = |sign: Sign, (ai, ao): (usize, usize), (bi, bo): (usize, usize)| {
        if variant.a_over {
            Crossing::new(sign, bi, ai, bo, ao)
        } else {
            Crossing::new(sign, ai, bi, ao, bo)
        }
    };
    crossings.push(make(variant.first_sign, (a, a_mid), b1));
    crossings.push(make(variant.first_sign.flip(), (a_mid, a_end), b2));
    Ok(SemiarcDiagram::from_parts_unchecked(m + 4, crossings, d.free_loops()))
}

/// Splices `d2` into `d1` at `s1` and `s2`: `s1` now runs into the crossing
/// `s2` entered, and `s2` into the crossing `s1` entered.
///
/// Semiarc `i` of `d2` becomes `i + m1`; the returned vector is that relabeling.
pub fn connected_sum(
    d1: &SemiarcDiagram,
    s1: usize,
    d2: &SemiarcDiagram,
    s2: usize,
) -> Result<(SemiarcDiagram, Vec<usize>), DiagramError> {
    check_semiarc(d1, s1)?;
    check_semiarc(d2, s2)?;
    let m1 = d1.semiarc_count();
    let relabel: Vec<usize> = (0..d2.semiarc_count()).map(|i| i + m1).collect();
    let s2 = relabel[s2];
    let mut crossings = d1.crossings().to_vec();
    let first_new = crossings.len();
    crossings.extend(d2.crossings().iter().map(|c| c.map_ids(|s| s + m1)));
    let (left, right) = crossings.split_at_mut(first_new);
    retarget(left, s1, s2);
    retarget(right, s2, s1);
    let d = SemiarcDiagram::from_parts_unchecked(m1 + d2.semiarc_count(), crossings, d1.free_loops() + d2.free_loops());
    Ok((d, relabel))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::diagram::{serialize_pd, torus_2n};

    fn revalidate(d: &SemiarcDiagram) {
        let again = SemiarcDiagram::new(d.crossings().to_vec(), d.free_loops()).unwrap();
        assert_eq!(&again, d);
    }

    #[test]
    fn r1_adds_one_crossing() {
        let t = torus_2n(3).unwrap();
        for kind in KinkKind::ALL {
            for s in 0..t.semiarc_count() {
                let k = apply_r1(&t, s, kind).unwrap();
                revalidate(&k);
                assert_eq!(k.crossings().len(), 4);
                assert_eq!(serialize_pd(&k).lines().count(), 4);
                assert_eq!(k.component_count(), 1);
            }
        }
        assert!(matches!(apply_r1(&t, 6, KinkKind::PositiveEnterOver), Err(DiagramError::InvalidSemiarc(6))));
    }

    #[test]
    fn r1_on_loop() {
        let u = SemiarcDiagram::unknot();
        let k = apply_r1_to_loop(&u, KinkKind::PositiveEnterUnder).unwrap();
        revalidate(&k);
        assert_eq!(k.crossings(), &[Crossing::new(Sign::Positive, 0, 1, 1, 0)]);
        assert!(apply_r1_to_loop(&k, KinkKind::PositiveEnterUnder).is_err());
    }

    #[test]
    fn r2_adds_two_opposite_crossings() {
        let t = torus_2n(4).unwrap();
        for v in R2Variant::all() {
            let r = apply_r2(&t, 0, 5, v).unwrap();
            revalidate(&r);
            let new = &r.crossings()[4..];
            assert_eq!(new[0].sign, new[1].sign.flip());
            assert_eq!(r.component_count(), 2);
        }
        assert!(apply_r2(&t, 1, 1, R2Variant::all()[0]).is_err());
    }

    #[test]
    fn connected_sum_is_additive() {
        let t = torus_2n(3).unwrap();
        let (g, relabel) = connected_sum(&t, 0, &t, 0).unwrap();
        revalidate(&g);
        assert_eq!(g.crossings().len(), 6);
        assert_eq!(g.semiarc_count(), 12);
        assert_eq!(g.component_count(), 1);
        assert_eq!(relabel, (6..12).collect::<Vec<_>>());
        assert!(connected_sum(&t, 0, &t, 9).is_err());
    }
}
