//! Pattern admission and the Arf / saturation predicates.
//!
//! A pattern is a linear expression `a₁x₁ + ⋯ + aₖxₖ` with non-zero
//! integer coefficients; a semigroup admits it when the expression lands
//! in the semigroup for every non-increasing tuple of members.

use crate::error::{Error, Result};
use crate::semigroup::{gcd, NumericalSemigroup};

/// A linear pattern with non-zero coefficients.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Pattern {
    coeffs: Vec<i64>,
}

/// Outcome of an admission check; a failure carries the first violating
/// tuple and the value the pattern took on it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Admission {
    Admits,
    Fails { tuple: Vec<u64>, value: i64 },
}

impl Admission {
    pub fn admitted(&self) -> bool {
        matches!(self, Admission::Admits)
    }
}

impl Pattern {
    pub fn new(coeffs: Vec<i64>) -> Self {
        assert!(!coeffs.is_empty(), "pattern must have at least one term");
        assert!(
            coeffs.iter().all(|&a| a != 0),
            "pattern coefficients must be non-zero"
        );
        Pattern { coeffs }
    }

    /// `x₁ + x₂ − x₃`, whose admission characterizes the Arf property.
    pub fn arf() -> Self {
        Pattern::new(vec![1, 1, -1])
    }

    pub fn coeffs(&self) -> &[i64] {
        &self.coeffs
    }

    /// All leading partial sums `a₁ + ⋯ + aⱼ` must be ≥ 1; by Abel
    /// summation this forces `p(s₁,…,sₖ) ≥ s₁` on non-increasing tuples,
    /// which is what makes the admission check below the conductor
    /// complete.
    fn check_shape(&self) -> Result<()> {
        let mut sum = 0i64;
        for (j, &a) in self.coeffs.iter().enumerate() {
            sum += a;
            if sum < 1 {
                return Err(Error::NotAdmissibleShape {
                    position: j + 1,
                    sum,
                });
            }
        }
        Ok(())
    }

    fn eval(&self, tuple: &[u64]) -> i128 {
        self.coeffs
            .iter()
            .zip(tuple)
            .map(|(&a, &s)| a as i128 * s as i128)
            .sum()
    }
}

/// Decide whether `s` admits `p`: `p(s₁,…,sₖ) ∈ Γ` for every tuple of
/// members `s₁ ≥ s₂ ≥ ⋯ ≥ sₖ`.
///
/// Since every admissible shape satisfies `p(tuple) ≥ s₁`, tuples with
/// `s₁ ≥ c` are automatic and only `s₁ < c` is enumerated. Patterns whose
/// leading partial sums are not all positive are rejected rather than
/// half-checked.
pub fn admits_pattern(s: &NumericalSemigroup, p: &Pattern) -> Result<Admission> {
    p.check_shape()?;
    let below: &[u64] = {
        let small = s.small_elements();
        &small[..small.len().saturating_sub(1)]
    };
    let mut tuple = vec![0u64; p.coeffs.len()];
    Ok(search(s, p, below, &mut tuple, 0))
}

fn search(
    s: &NumericalSemigroup,
    p: &Pattern,
    choices: &[u64],
    tuple: &mut Vec<u64>,
    depth: usize,
) -> Admission {
    if depth == tuple.len() {
        let v = p.eval(tuple);
        let ok = i64::try_from(v).map(|v| s.contains(v)).unwrap_or(v > 0);
        if ok {
            return Admission::Admits;
        }
        return Admission::Fails {
            tuple: tuple.clone(),
            value: v as i64,
        };
    }
    for &c in choices {
        if depth > 0 && c > tuple[depth - 1] {
            break;
        }
        tuple[depth] = c;
        let r = search(s, p, choices, tuple, depth + 1);
        if !r.admitted() {
            return r;
        }
    }
    Admission::Admits
}

/// Arf property: admission of `x₁ + x₂ − x₃`.
pub fn is_arf(s: &NumericalSemigroup) -> bool {
    admits_pattern(s, &Pattern::arf())
        .expect("the Arf pattern has an admissible shape")
        .admitted()
}

/// Saturation: `s + gcd(Γ ∩ [0, s]) ∈ Γ` for every positive member `s`.
/// Members at or past the conductor satisfy it trivially, so only
/// `s ∈ (0, c)` is checked.
pub fn is_saturated(s: &NumericalSemigroup) -> bool {
    let small = s.small_elements();
    let c = s.conductor();
    let mut g = 0u64;
    for &m in small {
        g = gcd(g, m);
        if m == 0 || m >= c {
            continue;
        }
        if !s.contains((m + g) as i64) {
            return false;
        }
    }
    true
}
