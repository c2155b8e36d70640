//! Finite biquandles and quandles as validated operation tables.

mod biquandle;
mod hom;
mod perm;
mod text;

pub use biquandle::{
    make_linear_biquandle, validate_axioms, validate_tables, AxiomViolation, FiniteBiquandle, LinearForm,
    ValidationReport, MAX_ORDER,
};
pub(crate) use biquandle::{index_to_residue, residue_to_index};
pub use hom::{enumerate_endos, enumerate_homs, Endomorphism};
pub use perm::{column_permutation, group_order, subquandle_closure, Permutation, DEFAULT_GROUP_CAP};
pub use text::{parse_biquandle, parse_tables, serialize_biquandle};

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AlgebraError {
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("shape error: {0}")]
    Shape(String),
    #[error("axiom violation: {0}")]
    Axiom(AxiomViolation),
    #[error("not a quandle: {0}")]
    NotAQuandle(String),
    #[error("group exploration exceeded the cap of {cap} elements")]
    GroupCapExceeded { cap: usize },
    #[error("parse error at line {line}: {msg}")]
    Parse { line: usize, msg: String },
}

/// A biquandle whose over operation is trivial, `x ⊼ y = x`. Its under
/// operation is written `x ⊳ y`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Quandle {
    inner: FiniteBiquandle,
    inverse: Vec<u8>,
}

impl Quandle {
    pub fn order(&self) -> usize {
        self.inner.order()
    }

    /// `x ⊳ y`.
    #[inline]
    pub fn op(&self, x: usize, y: usize) -> usize {
        self.inner.under(x, y)
    }

    /// The inverse column map: the unique `z` with `z ⊳ y = x`.
    #[inline]
    pub fn op_inv(&self, x: usize, y: usize) -> usize {
        self.inverse[x * self.order() + y] as usize
    }

    pub fn as_biquandle(&self) -> &FiniteBiquandle {
        &self.inner
    }

    pub fn into_biquandle(self) -> FiniteBiquandle {
        self.inner
    }

    /// The quandle with `x ⊳ y = x`.
    pub fn trivial(n: usize) -> Quandle {
        make_linear_biquandle(n, 1, 0, 1, 0)
            .and_then(Quandle::try_from)
            .expect("trivial quandle")
    }
}

impl TryFrom<FiniteBiquandle> for Quandle {
    type Error = AlgebraError;

    fn try_from(b: FiniteBiquandle) -> Result<Self, Self::Error> {
        let n = b.order();
        for x in 0..n {
            for y in 0..n {
                if b.over(x, y) != x {
                    return Err(AlgebraError::NotAQuandle(format!(
                        "{} ⊼ {} = {}, expected {}",
                        x + 1,
                        y + 1,
                        b.over(x, y) + 1,
                        x + 1
                    )));
                }
            }
        }
        let mut inverse = vec![0u8; n * n];
        for y in 0..n {
            for z in 0..n {
                inverse[b.under(z, y) * n + y] = z as u8;
            }
        }
        Ok(Quandle { inner: b, inverse })
    }
}

/// The dihedral quandle `R_n`: `x ⊳ y = 2y − x mod n`.
pub fn make_dihedral(n: usize) -> Result<Quandle, AlgebraError> {
    if n == 0 {
        return Err(AlgebraError::InvalidParameter("dihedral quandle order must be positive".into()));
    }
    make_linear_biquandle(n, 1, 0, -1, 2).and_then(Quandle::try_from)
}

/// The 4-element biquandle `Z`: `x ⊼ y = 3x`, `x ⊻ y = x + 2y` on `Z/4`.
pub fn biquandle_z() -> FiniteBiquandle {
    make_linear_biquandle(4, 3, 0, 1, 2).expect("Z is a biquandle")
}

/// The 4-element biquandle `T` used for the second-bridge-index bound.
pub fn biquandle_t() -> FiniteBiquandle {
    FiniteBiquandle::from_tables(
        &[vec![1, 3, 4, 2], vec![3, 1, 2, 4], vec![2, 4, 3, 1], vec![4, 2, 1, 3]],
        &[vec![1, 4, 2, 3], vec![2, 3, 1, 4], vec![4, 1, 3, 2], vec![3, 2, 4, 1]],
    )
    .expect("T is a biquandle")
}

/// The 4-element example biquandle given as list-of-lists tables.
pub fn biquandle_example4() -> FiniteBiquandle {
    FiniteBiquandle::from_tables(
        &[vec![2, 3, 1, 4], vec![3, 2, 4, 1], vec![4, 1, 3, 2], vec![1, 4, 2, 3]],
        &[vec![3, 1, 2, 4], vec![4, 2, 1, 3], vec![2, 4, 3, 1], vec![1, 3, 4, 2]],
    )
    .expect("example is a biquandle")
}
