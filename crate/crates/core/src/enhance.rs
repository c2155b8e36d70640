//! Column group enhancement of the quandle counting invariant.
//!
//! For each coloring, the labels it uses generate a subquandle; the columns of
//! the full operation table indexed by that subquandle generate a permutation
//! group, and the group order is recorded.

use std::collections::{BTreeMap, BTreeSet};

use serde::Serialize;
use thiserror::Error;

use crate::algebra::{column_permutation, group_order, subquandle_closure, AlgebraError, Quandle, DEFAULT_GROUP_CAP};
use crate::coloring::enumerate_colorings_with_loops;
use crate::diagram::SemiarcDiagram;
use crate::exec::Exec;
use crate::poly::ExponentPolynomial;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum EnhanceError {
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
}

/// Multiset of subgroup orders, one per coloring.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct EnhancementMultiset(BTreeMap<u64, u64>);

impl EnhancementMultiset {
    pub fn cardinality(&self) -> u64 {
        self.0.values().sum()
    }

    pub fn multiplicity(&self, order: u64) -> u64 {
        self.0.get(&order).copied().unwrap_or(0)
    }

    /// `(order, multiplicity)` in increasing order.
    pub fn iter(&self) -> impl Iterator<Item = (u64, u64)> + '_ {
        self.0.iter().map(|(&k, &v)| (k, v))
    }

    pub fn to_polynomial(&self) -> ExponentPolynomial {
        let mut p = ExponentPolynomial::new();
        for (e, c) in self.iter() {
            p.add_term(e, c);
        }
        p
    }
}

/// Order of the group generated by the columns of `q` at the elements of `sub`.
pub fn column_group_order(q: &Quandle, sub: &[usize]) -> Result<u64, EnhanceError> {
    let gens = sub.iter().map(|&y| column_permutation(q, y)).collect::<Result<Vec<_>, _>>()?;
    Ok(group_order(&gens, DEFAULT_GROUP_CAP)?)
}

pub fn column_group_multiset(d: &SemiarcDiagram, q: &Quandle) -> Result<EnhancementMultiset, EnhanceError> {
    column_group_multiset_with(d, q, Exec::default())
}

pub fn column_group_multiset_with(d: &SemiarcDiagram, q: &Quandle, exec: Exec) -> Result<EnhancementMultiset, EnhanceError> {
    let colorings = enumerate_colorings_with_loops(d, q.as_biquandle(), exec);
    let mut closure_of: BTreeMap<Vec<usize>, Vec<usize>> = BTreeMap::new();
    let mut per_coloring = Vec::with_capacity(colorings.len());
    for c in &colorings {
        let labels: Vec<usize> = c.values().iter().map(|&v| v as usize).collect::<BTreeSet<_>>().into_iter().collect();
        if !closure_of.contains_key(&labels) {
            let sub = subquandle_closure(q, &labels)?;
            closure_of.insert(labels.clone(), sub);
        }
        per_coloring.push(closure_of[&labels].clone());
    }
    let distinct: Vec<Vec<usize>> = closure_of.values().cloned().collect::<BTreeSet<_>>().into_iter().collect();
    let orders = exec.map(&distinct, |sub| column_group_order(q, sub));
    let mut order_of = BTreeMap::new();
    for (sub, o) in distinct.into_iter().zip(orders) {
        order_of.insert(sub, o?);
    }
    let mut m = EnhancementMultiset::default();
    for sub in per_coloring {
        *m.0.entry(order_of[&sub]).or_insert(0) += 1;
    }
    Ok(m)
}

/// Group orders as exponents, multiplicities as coefficients.
pub fn column_group_polynomial(d: &SemiarcDiagram, q: &Quandle) -> Result<ExponentPolynomial, EnhanceError> {
    Ok(column_group_multiset(d, q)?.to_polynomial())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::make_dihedral;
    use crate::coloring::count_colorings;
    use crate::diagram::{builtin_knots, torus_2n};

    fn r(n: usize) -> Quandle {
        make_dihedral(n).unwrap()
    }

    #[test]
    fn six_one_and_nine_twenty_four_agree() {
        let knots = builtin_knots();
        for name in ["6_1", "9_24"] {
            let d = &knots.get(name).unwrap().diagram;
            let p = column_group_polynomial(d, &r(9)).unwrap();
            assert_eq!(p.to_string(), "54u^18 + 18u^6 + 9u^2", "{name}");
        }
    }

    #[test]
    fn single_columns_of_dihedral_are_involutions() {
        let q = r(9);
        for y in 0..9 {
            assert_eq!(column_group_order(&q, &[y]).unwrap(), 2);
        }
        assert_eq!(column_group_order(&q, &[0, 3, 6]).unwrap(), 6);
        assert_eq!(column_group_order(&q, &(0..9).collect::<Vec<_>>()).unwrap(), 18);
    }

    #[test]
    fn mass_is_the_count() {
        let d = torus_2n(5).unwrap();
        for n in [3, 5, 6, 10] {
            let m = column_group_multiset(&d, &r(n)).unwrap();
            assert_eq!(m.cardinality() as u128, count_colorings(&d, r(n).as_biquandle()));
            assert_eq!(m.to_polynomial().mass(), m.cardinality());
        }
    }

    #[test]
    fn trivial_quandle_gives_trivial_groups() {
        let d = torus_2n(3).unwrap();
        let p = column_group_polynomial(&d, &Quandle::trivial(3)).unwrap();
        assert_eq!(p.to_string(), "3u");
    }

    #[test]
    fn sequential_matches_parallel() {
        let d = &builtin_knots().get("7_4").unwrap().diagram;
        let a = column_group_multiset_with(d, &r(15), Exec::Sequential).unwrap();
        let b = column_group_multiset_with(d, &r(15), Exec::Parallel).unwrap();
        assert_eq!(a, b);
    }
}
