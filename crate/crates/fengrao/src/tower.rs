//! Semigroups of the recursive tower over `F_{q²}`: the value semigroup
//! at level `n` is `Γₙ = qΓₙ₋₁ ∪ (cₙ + ℕ)` with conductor
//! `cₙ = qⁿ − q^{(n+1)/2}` for odd `n` and `qⁿ − q^{n/2}` for even `n`.
//!
//! Everything here is a closed form in `(q, n)`: the inductive descriptor,
//! the Apery cardinalities at the powers of `q`, the pruned candidate list
//! for the second Feng-Rao number, and the number itself.

use crate::error::{Error, Result};
use crate::inductive::InductiveDescriptor;

/// Tower parameters. `q` is any integer ≥ 2; the function-field
/// interpretation additionally wants `q` to be a perfect square, but the
/// semigroup formulas do not.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct TowerParams {
    q: u64,
    n: u32,
}

fn qpow(q: u64, e: u32) -> Result<u64> {
    q.checked_pow(e).ok_or(Error::Overflow {
        context: "power of q",
    })
}

impl TowerParams {
    pub fn new(q: u64, n: u32) -> Result<Self> {
        if q < 2 {
            return Err(Error::InvalidDescriptor {
                reason: format!("tower base q must be at least 2, got {q}"),
            });
        }
        if n < 1 {
            return Err(Error::InvalidDescriptor {
                reason: "tower level n must be at least 1".into(),
            });
        }
        // all derived quantities are bounded by qⁿ
        qpow(q, n)?;
        Ok(TowerParams { q, n })
    }

    pub fn q(&self) -> u64 {
        self.q
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    /// Whether `q` is a perfect square (the field-theoretic requirement).
    pub fn q_is_square(&self) -> bool {
        let r = self.q.isqrt();
        r * r == self.q
    }

    fn conductor_at_level(&self, level: u32) -> u64 {
        let half = level.div_ceil(2);
        self.q.pow(level) - self.q.pow(half)
    }

    /// The conductor `cₙ` of the level-`n` semigroup.
    pub fn conductor(&self) -> u64 {
        self.conductor_at_level(self.n)
    }

    /// The depth-(n−1) descriptor with every multiplier `q` and
    /// `b = (c₂/q, …, cₙ/q)`. Level 1 is `ℕ`.
    pub fn descriptor(&self) -> InductiveDescriptor {
        if self.n == 1 {
            return InductiveDescriptor::trivial();
        }
        let a = vec![self.q; self.n as usize - 1];
        let b: Vec<u64> = (2..=self.n)
            .map(|lvl| {
                let c = self.conductor_at_level(lvl);
                debug_assert_eq!(c % self.q, 0);
                c / self.q
            })
            .collect();
        InductiveDescriptor::new(a, b).expect("tower values form a valid descriptor")
    }

    /// The closed-form Apery cardinalities `(qⁱ, ♯S_{qⁱ})` for
    /// `i = 0..n−1`, in increasing `qⁱ`. Requires `n ≥ 2`.
    ///
    /// `♯S₁ = q^{⌊n/2⌋}`, `♯S_{qⁿ⁻¹} = qⁿ⁻¹`, and in between
    /// `♯S_{qⁱ} = (q^{⌊m−i/2⌋} − 1) + qⁱ` for `n = 2m` and
    /// `(q^{⌈m−i/2⌉} − 1) + qⁱ` for `n = 2m + 1`.
    pub fn apery_cardinalities(&self) -> Vec<(u64, u64)> {
        assert!(self.n >= 2, "the cardinality lemma needs n >= 2");
        let (q, n) = (self.q, self.n);
        let m = n / 2;
        let mut out = vec![(1, q.pow(m))];
        for i in 1..n - 1 {
            // ⌊m − i/2⌋ for even n, ⌈m − i/2⌉ for odd n; with integer i
            // both reduce to m − ⌈i/2⌉ and m − ⌊i/2⌋ respectively
            let e = if n % 2 == 0 {
                m - i.div_ceil(2)
            } else {
                m - i / 2
            };
            out.push((q.pow(i), (q.pow(e) - 1) + q.pow(i)));
        }
        out.push((q.pow(n - 1), q.pow(n - 1)));
        out
    }

    /// The pruned list whose minimum is `E(Γₙ, 2)`:
    /// `q^{⌊n/2⌋}`, `qⁿ⁻¹`, and `(qᵏ − 1) + qⁿ⁻¹⁻²ᵏ` for
    /// `k ∈ [1, ⌊n/2⌋ − 1]`. Requires `n ≥ 2`.
    pub fn reduction_candidates(&self) -> Vec<u64> {
        assert!(self.n >= 2, "the candidate list needs n >= 2");
        let (q, n) = (self.q, self.n);
        let mut out = vec![q.pow(n / 2), q.pow(n - 1)];
        for k in 1..n / 2 {
            out.push((q.pow(k) - 1) + q.pow(n - 1 - 2 * k));
        }
        out
    }

    /// Closed-form `E(Γₙ, 2)`.
    pub fn e2_closed(&self) -> u64 {
        let (q, n) = (self.q, self.n);
        match n {
            1 => 1,
            2 | 3 => q,
            4 => 2 * q - 1,
            5 => q * q,
            _ => {
                let e = (n - 1).div_ceil(3);
                q.pow(e) + q.pow(n - 1 - 2 * e) - 1
            }
        }
    }
}
