use std::collections::{HashSet, VecDeque};
use std::fmt;

use super::{AlgebraError, Quandle};

/// Default exploration cap for [`group_order`].
pub const DEFAULT_GROUP_CAP: usize = 1_000_000;

/// A bijection of `0..n`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Permutation(Vec<u8>);

impl Permutation {
    pub fn new(images: Vec<u8>) -> Result<Self, AlgebraError> {
        let mut seen = vec![false; images.len()];
        for &v in &images {
            let v = v as usize;
            if v >= images.len() || seen[v] {
                return Err(AlgebraError::InvalidParameter(format!("{images:?} is not a permutation")));
            }
            seen[v] = true;
        }
        Ok(Permutation(images))
    }

    pub fn identity(n: usize) -> Self {
        Permutation((0..n as u8).collect())
    }

    pub fn degree(&self) -> usize {
        self.0.len()
    }

    pub fn images(&self) -> &[u8] {
        &self.0
    }

    #[inline]
    pub fn apply(&self, x: usize) -> usize {
        self.0[x] as usize
    }

    /// `self ∘ other` (apply `other` first).
    pub fn compose(&self, other: &Permutation) -> Permutation {
        Permutation(other.0.iter().map(|&x| self.0[x as usize]).collect())
    }

    pub fn inverse(&self) -> Permutation {
        let mut inv = vec![0u8; self.0.len()];
        for (i, &v) in self.0.iter().enumerate() {
            inv[v as usize] = i as u8;
        }
        Permutation(inv)
    }

    /// Order as the lcm of cycle lengths.
    pub fn order(&self) -> u64 {
        let mut seen = vec![false; self.0.len()];
        let mut acc = 1u64;
        for start in 0..self.0.len() {
            if seen[start] {
                continue;
            }
            let mut len = 0u64;
            let mut x = start;
            while !seen[x] {
                seen[x] = true;
                x = self.apply(x);
                len += 1;
            }
            acc = lcm(acc, len);
        }
        acc
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, v) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{}↦{}", i + 1, *v as usize + 1)?;
        }
        Ok(())
    }
}

fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

fn lcm(a: u64, b: u64) -> u64 {
    a / gcd(a, b) * b
}

/// The column map `x ↦ x ⊳ y`.
pub fn column_permutation(q: &Quandle, y: usize) -> Result<Permutation, AlgebraError> {
    let n = q.order();
    if y >= n {
        return Err(AlgebraError::InvalidParameter(format!("element {} outside 1..={n}", y + 1)));
    }
    Ok(Permutation((0..n).map(|x| q.op(x, y) as u8).collect()))
}

/// Order of the group generated by `gens`, by breadth-first closure.
///
/// Fails with [`AlgebraError::GroupCapExceeded`] once more than `cap` elements are found.
pub fn group_order(gens: &[Permutation], cap: usize) -> Result<u64, AlgebraError> {
    let Some(first) = gens.first() else {
        return Ok(1);
    };
    let n = first.degree();
    if gens.iter().any(|g| g.degree() != n) {
        return Err(AlgebraError::InvalidParameter("generators act on different ground sets".into()));
    }
    let id = Permutation::identity(n);
    let mut seen: HashSet<Permutation> = HashSet::from([id.clone()]);
    let mut queue = VecDeque::from([id]);
    while let Some(p) = queue.pop_front() {
        for g in gens {
            let q = g.compose(&p);
            if seen.insert(q.clone()) {
                if seen.len() > cap {
                    return Err(AlgebraError::GroupCapExceeded { cap });
                }
                queue.push_back(q);
            }
        }
    }
    Ok(seen.len() as u64)
}

/// Smallest subquandle containing `elements`, closed under `⊳` and the inverse column maps.
pub fn subquandle_closure(q: &Quandle, elements: &[usize]) -> Result<Vec<usize>, AlgebraError> {
    let n = q.order();
    if elements.is_empty() {
        return Err(AlgebraError::InvalidParameter("closure of the empty set".into()));
    }
    if let Some(&bad) = elements.iter().find(|&&e| e >= n) {
        return Err(AlgebraError::InvalidParameter(format!("element {} outside 1..={n}", bad + 1)));
    }
    let mut member = vec![false; n];
    let mut list = Vec::new();
    for &e in elements {
        if !member[e] {
            member[e] = true;
            list.push(e);
        }
    }
    // list grows while we scan it; every new pair gets visited
    let mut i = 0;
    while i < list.len() {
        let a = list[i];
        for j in 0..=i {
            let b = list[j];
            for (x, y) in [(a, b), (b, a)] {
                for z in [q.op(x, y), q.op_inv(x, y)] {
                    if !member[z] {
                        member[z] = true;
                        list.push(z);
                    }
                }
            }
        }
        i += 1;
    }
    Ok((0..n).filter(|&e| member[e]).collect())
}
