use std::fmt;

use serde::Serialize;

use super::AlgebraError;

/// Largest supported ground set. Colorings store elements as `u8`.
pub const MAX_ORDER: usize = 255;

/// Parameters of a linear biquandle on `Z/n`:
/// `x ⊼ y = a·x + b·y` and `x ⊻ y = c·x + d·y`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct LinearForm {
    pub modulus: u64,
    pub a: u64,
    pub b: u64,
    pub c: u64,
    pub d: u64,
}

/// A finite biquandle stored as two row-major operation tables.
///
/// Elements are indexed `0..n` in code; element `i` is printed as `i + 1`.
/// For linear biquandles element `i` stands for the residue `(i + 1) mod n`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct FiniteBiquandle {
    n: usize,
    over: Vec<u8>,
    under: Vec<u8>,
    linear: Option<LinearForm>,
}

/// One violated axiom, with the witness that breaks it. Elements are 0-based.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub enum AxiomViolation {
    /// A one-crossing kink with incoming label `x` does not have exactly one
    /// coloring, or that coloring does not exit with `x`. `variant` is 1..=4:
    /// (positive, loop leaves under), (positive, loop leaves over), then the
    /// two negative analogues.
    Kink { variant: u8, x: usize },
    /// `x ↦ x ⊼ y` is not a bijection: `x1 ⊼ y == x2 ⊼ y`.
    OverColumn { y: usize, x1: usize, x2: usize },
    /// `x ↦ x ⊻ y` is not a bijection.
    UnderColumn { y: usize, x1: usize, x2: usize },
    /// `S(x, y) = (y ⊼ x, x ⊻ y)` sends two pairs to the same image.
    Sideways { first: (usize, usize), second: (usize, usize) },
    /// Component `law` (1, 2 or 3) of the braid relation for `S` fails at `(x, y, z)`.
    Exchange { law: u8, x: usize, y: usize, z: usize },
}

impl fmt::Display for AxiomViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            AxiomViolation::Kink { variant, x } => {
                write!(f, "kink condition {variant} fails for incoming label {}", x + 1)
            }
            AxiomViolation::OverColumn { y, x1, x2 } => write!(
                f,
                "over column {} is not a bijection ({} and {} collide)",
                y + 1,
                x1 + 1,
                x2 + 1
            ),
            AxiomViolation::UnderColumn { y, x1, x2 } => write!(
                f,
                "under column {} is not a bijection ({} and {} collide)",
                y + 1,
                x1 + 1,
                x2 + 1
            ),
            AxiomViolation::Sideways { first, second } => write!(
                f,
                "sideways map is not a bijection: ({},{}) and ({},{}) collide",
                first.0 + 1,
                first.1 + 1,
                second.0 + 1,
                second.1 + 1
            ),
            AxiomViolation::Exchange { law, x, y, z } => write!(
                f,
                "exchange law {} fails at (x,y,z)=({},{},{})",
                law,
                x + 1,
                y + 1,
                z + 1
            ),
        }
    }
}

/// Outcome of [`validate_axioms`]: one entry per violated axiom, empty iff the tables form a biquandle.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct ValidationReport {
    pub violations: Vec<AxiomViolation>,
}

impl ValidationReport {
    pub fn is_valid(&self) -> bool {
        self.violations.is_empty()
    }
}

impl FiniteBiquandle {
    /// Builds a biquandle from 0-based row-major tables, validating every axiom.
    pub fn from_flat(n: usize, over: Vec<u8>, under: Vec<u8>) -> Result<Self, AlgebraError> {
        check_shape_flat(n, &over, &under)?;
        let b = FiniteBiquandle { n, over, under, linear: None };
        let report = validate_axioms(&b);
        match report.violations.into_iter().next() {
            Some(v) => Err(AlgebraError::Axiom(v)),
            None => Ok(b),
        }
    }

    /// Builds a biquandle from 1-based nested tables (row `x`, column `y`), the
    /// list-of-lists layout with `⊼` first.
    pub fn from_tables(over: &[Vec<usize>], under: &[Vec<usize>]) -> Result<Self, AlgebraError> {
        let n = over.len();
        let over = flatten(n, over, "over")?;
        let under = flatten(n, under, "under")?;
        Self::from_flat(n, over, under)
    }

    /// Builds without validation. Only for tables known to be valid by construction
    /// and for tests that need to inspect invalid tables.
    pub fn from_flat_unchecked(n: usize, over: Vec<u8>, under: Vec<u8>) -> Result<Self, AlgebraError> {
        check_shape_flat(n, &over, &under)?;
        Ok(FiniteBiquandle { n, over, under, linear: None })
    }

    pub(crate) fn with_linear(mut self, form: LinearForm) -> Self {
        self.linear = Some(form);
        self
    }

    pub fn order(&self) -> usize {
        self.n
    }

    /// `x ⊼ y`.
    #[inline]
    pub fn over(&self, x: usize, y: usize) -> usize {
        self.over[x * self.n + y] as usize
    }

    /// `x ⊻ y`.
    #[inline]
    pub fn under(&self, x: usize, y: usize) -> usize {
        self.under[x * self.n + y] as usize
    }

    pub fn linear_form(&self) -> Option<LinearForm> {
        self.linear
    }

    pub fn over_table(&self) -> &[u8] {
        &self.over
    }

    pub fn under_table(&self) -> &[u8] {
        &self.under
    }

    /// True when `x ⊼ y = x` for all `x, y`.
    pub fn is_quandle(&self) -> bool {
        (0..self.n).all(|x| (0..self.n).all(|y| self.over(x, y) == x))
    }

    /// Nested 1-based tables, `⊼` first.
    pub fn to_tables(&self) -> (Vec<Vec<usize>>, Vec<Vec<usize>>) {
        let nest = |t: &[u8]| {
            t.chunks(self.n.max(1))
                .take(self.n)
                .map(|row| row.iter().map(|&e| e as usize + 1).collect())
                .collect()
        };
        (nest(&self.over), nest(&self.under))
    }
}

fn check_shape_flat(n: usize, over: &[u8], under: &[u8]) -> Result<(), AlgebraError> {
    if n == 0 {
        return Err(AlgebraError::InvalidParameter("biquandle order must be positive".into()));
    }
    if n > MAX_ORDER {
        return Err(AlgebraError::InvalidParameter(format!(
            "biquandle order {n} exceeds the supported maximum {MAX_ORDER}"
        )));
    }
    for (name, t) in [("over", over), ("under", under)] {
        if t.len() != n * n {
            return Err(AlgebraError::Shape(format!(
                "{name} table has {} entries, expected {}",
                t.len(),
                n * n
            )));
        }
        if let Some(pos) = t.iter().position(|&e| e as usize >= n) {
            return Err(AlgebraError::Shape(format!(
                "{name} table entry at row {}, column {} is {}, outside 1..={n}",
                pos / n + 1,
                pos % n + 1,
                t[pos] as usize + 1
            )));
        }
    }
    Ok(())
}

fn flatten(n: usize, rows: &[Vec<usize>], name: &str) -> Result<Vec<u8>, AlgebraError> {
    if rows.len() != n {
        return Err(AlgebraError::Shape(format!("{name} table has {} rows, expected {n}", rows.len())));
    }
    let mut out = Vec::with_capacity(n * n);
    for (i, row) in rows.iter().enumerate() {
        if row.len() != n {
            return Err(AlgebraError::Shape(format!(
                "{name} table row {} has {} entries, expected {n}",
                i + 1,
                row.len()
            )));
        }
        for (j, &e) in row.iter().enumerate() {
            if e == 0 || e > n {
                return Err(AlgebraError::Shape(format!(
                    "{name} table entry at row {}, column {} is {e}, outside 1..={n}",
                    i + 1,
                    j + 1
                )));
            }
            out.push((e - 1) as u8);
        }
    }
    Ok(out)
}

/// Exhaustive axiom check. Reports the first witness of each violated axiom.
///
/// The axioms are the ones that make coloring counts invariant under the
/// Reidemeister moves for the crossing rule used by [`crate::coloring`]
/// (positive crossing: `u_out = u_in ⊻ o_in`, `o_out = o_in ⊼ u_in`):
///
/// 1. every one-crossing kink has a unique coloring per incoming label, and it
///    exits with the same label;
/// 2. the column maps `x ↦ x ⊼ y`, `x ↦ x ⊻ y` and the sideways map
///    `S(x, y) = (y ⊼ x, x ⊻ y)` are bijections;
/// 3. `S` satisfies the braid relation `(S×1)(1×S)(S×1) = (1×S)(S×1)(1×S)`,
///    checked componentwise:
///    `(z ⊼ (x ⊻ y)) ⊼ (y ⊼ x) = (z ⊼ y) ⊼ x`,
///    `(y ⊼ x) ⊻ (z ⊼ (x ⊻ y)) = (y ⊻ z) ⊼ (x ⊻ (z ⊼ y))`,
///    `(x ⊻ y) ⊻ z = (x ⊻ (z ⊼ y)) ⊻ (y ⊻ z)`.
///
/// For quandles these reduce to idempotency, invertible columns and right
/// self-distributivity.
pub fn validate_axioms(b: &FiniteBiquandle) -> ValidationReport {
    let n = b.n;
    let mut violations = Vec::new();

    for variant in 1..=4u8 {
        if let Some(x) = (0..n).find(|&s| !kink_ok(b, variant, s)) {
            violations.push(AxiomViolation::Kink { variant, x });
        }
    }

    for (over, op) in [(true, FiniteBiquandle::over as fn(&FiniteBiquandle, usize, usize) -> usize), (false, FiniteBiquandle::under)] {
        'cols: for y in 0..n {
            let mut seen = vec![usize::MAX; n];
            for x in 0..n {
                let img = op(b, x, y);
                if seen[img] != usize::MAX {
                    let x1 = seen[img];
                    violations.push(if over {
                        AxiomViolation::OverColumn { y, x1, x2: x }
                    } else {
                        AxiomViolation::UnderColumn { y, x1, x2: x }
                    });
                    break 'cols;
                }
                seen[img] = x;
            }
        }
    }

    let mut seen = vec![usize::MAX; n * n];
    'pairs: for x in 0..n {
        for y in 0..n {
            let img = b.over(y, x) * n + b.under(x, y);
            if seen[img] != usize::MAX {
                let prev = seen[img];
                violations.push(AxiomViolation::Sideways { first: (prev / n, prev % n), second: (x, y) });
                break 'pairs;
            }
            seen[img] = x * n + y;
        }
    }

    let (o, u) = (|x, y| b.over(x, y), |x, y| b.under(x, y));
    let mut failed = [false; 3];
    for x in 0..n {
        for y in 0..n {
            for z in 0..n {
                let laws = [
                    o(o(z, u(x, y)), o(y, x)) == o(o(z, y), x),
                    u(o(y, x), o(z, u(x, y))) == o(u(y, z), u(x, o(z, y))),
                    u(u(x, y), z) == u(u(x, o(z, y)), u(y, z)),
                ];
                for (i, ok) in laws.into_iter().enumerate() {
                    if !ok && !failed[i] {
                        failed[i] = true;
                        violations.push(AxiomViolation::Exchange { law: i as u8 + 1, x, y, z });
                    }
                }
            }
        }
    }

    ValidationReport { violations }
}

/// Solves the kink `variant` for incoming label `s`: exactly one (loop, exit)
/// pair must satisfy the crossing relations, and its exit label must be `s`.
fn kink_ok(b: &FiniteBiquandle, variant: u8, s: usize) -> bool {
    let n = b.n;
    let mut solutions = 0;
    let mut exit = usize::MAX;
    for l in 0..n {
        for t in 0..n {
            let holds = match variant {
                // positive, u_in=s, o_in=l, u_out=l, o_out=t
                1 => l == b.under(s, l) && t == b.over(l, s),
                // positive, o_in=s, u_in=l, o_out=l, u_out=t
                2 => l == b.over(s, l) && t == b.under(l, s),
                // negative, u_in=s, o_in=l, u_out=l, o_out=t
                3 => s == b.under(l, t) && l == b.over(t, l),
                // negative, o_in=s, u_in=l, o_out=l, u_out=t
                _ => l == b.under(t, l) && s == b.over(l, t),
            };
            if holds {
                solutions += 1;
                exit = t;
            }
        }
    }
    solutions == 1 && exit == s
}

/// Validates raw 1-based nested tables, reporting shape problems as an error.
pub fn validate_tables(over: &[Vec<usize>], under: &[Vec<usize>]) -> Result<ValidationReport, AlgebraError> {
    let n = over.len();
    let o = flatten(n, over, "over")?;
    let u = flatten(n, under, "under")?;
    let b = FiniteBiquandle::from_flat_unchecked(n, o, u)?;
    Ok(validate_axioms(&b))
}

fn modulus(n: usize, v: i64) -> usize {
    v.rem_euclid(n as i64) as usize
}

/// Element index of residue `r` mod `n` (residue 0 is the last element).
pub(crate) fn residue_to_index(n: usize, r: i64) -> usize {
    (modulus(n, r) + n - 1) % n
}

/// Residue represented by element index `i`.
pub(crate) fn index_to_residue(n: usize, i: usize) -> u64 {
    ((i + 1) % n) as u64
}

/// Linear biquandle `x ⊼ y = a·x + b·y`, `x ⊻ y = c·x + d·y` on `Z/n`.
pub fn make_linear_biquandle(n: usize, a: i64, b: i64, c: i64, d: i64) -> Result<FiniteBiquandle, AlgebraError> {
    if n == 0 {
        return Err(AlgebraError::InvalidParameter("modulus must be positive".into()));
    }
    if n > MAX_ORDER {
        return Err(AlgebraError::InvalidParameter(format!("modulus {n} exceeds {MAX_ORDER}")));
    }
    let mut over = Vec::with_capacity(n * n);
    let mut under = Vec::with_capacity(n * n);
    for xi in 0..n {
        let x = index_to_residue(n, xi) as i64;
        for yi in 0..n {
            let y = index_to_residue(n, yi) as i64;
            over.push(residue_to_index(n, a * x + b * y) as u8);
            under.push(residue_to_index(n, c * x + d * y) as u8);
        }
    }
    let form = LinearForm {
        modulus: n as u64,
        a: modulus(n, a) as u64,
        b: modulus(n, b) as u64,
        c: modulus(n, c) as u64,
        d: modulus(n, d) as u64,
    };
    Ok(FiniteBiquandle::from_flat(n, over, under)?.with_linear(form))
}
