//! Inductive numerical semigroups `Γ(a, b)`, built from `Γ₀ = ℕ` by
//! `Γᵢ = aᵢΓ₋₁ ∪ (aᵢbᵢ + ℕ)` with `aᵢ ≥ 2` and `b₁ ≥ 1`, `bᵢ₊₁ ≥ aᵢbᵢ`.
//!
//! Provides the partition into arithmetic-progression blocks, recursive
//! closed-form Apery sets on the fundamental interval, the closed-form
//! Apery cardinalities and second Feng-Rao number, the closed-form genus,
//! recognition of inductive semigroups, and the multiple/quotient
//! constructions they are based on.

use crate::error::{Error, Result};
use crate::semigroup::{gcd, AperySet, NumericalSemigroup};

/// The pair of sequences `(a, b)` defining `Γ(a, b)`.
///
/// Depth 0 encodes `Γ₀ = ℕ`. The same semigroup admits several
/// factorizations; equality of descriptors is not equality of the built
/// sets.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InductiveDescriptor {
    a: Vec<u64>,
    b: Vec<u64>,
}

/// The disjoint decomposition of an inductive semigroup into arithmetic
/// progressions `Λ¹..Λⁿ` plus the ray past the conductor.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Partition {
    blocks: Vec<Vec<u64>>,
    ray_start: u64,
}

impl Partition {
    /// Blocks `Λ¹..Λⁿ`; a block is empty when its `λ` is zero.
    pub fn blocks(&self) -> &[Vec<u64>] {
        &self.blocks
    }

    /// First element of the ray `Λⁿ⁺¹`, i.e. conductor + 1.
    pub fn ray_start(&self) -> u64 {
        self.ray_start
    }
}

impl InductiveDescriptor {
    /// Depth-0 descriptor for `Γ₀ = ℕ`.
    pub fn trivial() -> Self {
        InductiveDescriptor {
            a: Vec::new(),
            b: Vec::new(),
        }
    }

    pub fn new(a: Vec<u64>, b: Vec<u64>) -> Result<Self> {
        if a.len() != b.len() {
            return Err(Error::InvalidDescriptor {
                reason: format!("a has {} entries but b has {}", a.len(), b.len()),
            });
        }
        if let Some(&bad) = a.iter().find(|&&x| x < 2) {
            return Err(Error::InvalidDescriptor {
                reason: format!("every a_i must be at least 2, found {bad}"),
            });
        }
        if !b.is_empty() && b[0] < 1 {
            return Err(Error::InvalidDescriptor {
                reason: "b_1 must be at least 1".into(),
            });
        }
        for i in 0..a.len().saturating_sub(1) {
            let floor = a[i].checked_mul(b[i]).ok_or(Error::Overflow {
                context: "a_i * b_i",
            })?;
            if b[i + 1] < floor {
                return Err(Error::InvalidDescriptor {
                    reason: format!(
                        "b_{} = {} is below a_{} * b_{} = {}",
                        i + 2,
                        b[i + 1],
                        i + 1,
                        i + 1,
                        floor
                    ),
                });
            }
        }
        let d = InductiveDescriptor { a, b };
        // the conductor and the multiplicity must fit in u64
        d.checked_conductor()?;
        d.checked_multiplicity()?;
        Ok(d)
    }

    /// Build a descriptor from the multipliers and the block lengths,
    /// deriving `b₁ = λ₁` and `bᵢ₊₁ = λᵢ₊₁ + aᵢbᵢ`.
    pub fn from_multipliers(a: &[u64], lambda: &[u64]) -> Result<Self> {
        assert_eq!(a.len(), lambda.len());
        let mut b = Vec::with_capacity(a.len());
        for i in 0..a.len() {
            let next = if i == 0 {
                lambda[0]
            } else {
                let floor = a[i - 1].checked_mul(b[i - 1]).ok_or(Error::Overflow {
                    context: "a_i * b_i",
                })?;
                lambda[i].checked_add(floor).ok_or(Error::Overflow {
                    context: "lambda_i + a_i * b_i",
                })?
            };
            b.push(next);
        }
        Self::new(a.to_vec(), b)
    }

    pub fn depth(&self) -> usize {
        self.a.len()
    }

    pub fn a(&self) -> &[u64] {
        &self.a
    }

    pub fn b(&self) -> &[u64] {
        &self.b
    }

    /// `λ₁ = b₁`, `λᵢ₊₁ = bᵢ₊₁ − aᵢbᵢ` — the block lengths of the partition.
    pub fn lambda(&self) -> Vec<u64> {
        let mut out = Vec::with_capacity(self.a.len());
        for i in 0..self.a.len() {
            if i == 0 {
                out.push(self.b[0]);
            } else {
                out.push(self.b[i] - self.a[i - 1] * self.b[i - 1]);
            }
        }
        out
    }

    /// `A₁..Aₙ` plus the sentinel `Aₙ₊₁ = 1`, where `Aᵢ = aᵢ·aᵢ₊₁⋯aₙ`.
    pub fn suffix_products(&self) -> Vec<u64> {
        let n = self.a.len();
        let mut out = vec![1u64; n + 1];
        for i in (0..n).rev() {
            out[i] = out[i + 1] * self.a[i];
        }
        out
    }

    fn checked_multiplicity(&self) -> Result<u64> {
        let mut p = 1u64;
        for &x in &self.a {
            p = p.checked_mul(x).ok_or(Error::Overflow {
                context: "multiplicity a_1 * ... * a_n",
            })?;
        }
        Ok(p)
    }

    fn checked_conductor(&self) -> Result<u64> {
        match (self.a.last(), self.b.last()) {
            (Some(&a), Some(&b)) => a.checked_mul(b).ok_or(Error::Overflow {
                context: "conductor a_n * b_n",
            }),
            _ => Ok(0),
        }
    }

    /// `A₁`, the multiplicity of the built semigroup (1 at depth 0).
    pub fn multiplicity(&self) -> u64 {
        self.checked_multiplicity()
            .expect("validated on construction")
    }

    /// `aₙbₙ` (0 at depth 0).
    pub fn conductor(&self) -> u64 {
        self.checked_conductor().expect("validated on construction")
    }

    /// Membership without materializing the set, by unwinding
    /// `Γᵢ = aᵢΓᵢ₋₁ ∪ (aᵢbᵢ + ℕ)` from the top.
    pub fn contains(&self, x: u64) -> bool {
        let mut x = x;
        for i in (0..self.a.len()).rev() {
            if x >= self.a[i] * self.b[i] {
                return true;
            }
            if !x.is_multiple_of(self.a[i]) {
                return false;
            }
            x /= self.a[i];
        }
        true
    }

    fn prefix(&self, depth: usize) -> InductiveDescriptor {
        InductiveDescriptor {
            a: self.a[..depth].to_vec(),
            b: self.b[..depth].to_vec(),
        }
    }

    /// Materialize `Γ(a, b)` in canonical form.
    pub fn build(&self) -> NumericalSemigroup {
        let mut small: Vec<u64> = vec![0];
        let mut conductor = 0u64;
        for i in 0..self.a.len() {
            let (a, b) = (self.a[i], self.b[i]);
            let mut next: Vec<u64> = small.iter().map(|&s| a * s).collect();
            for v in conductor + 1..=b {
                next.push(a * v);
            }
            small = next;
            conductor = a * b;
        }
        NumericalSemigroup::from_small_unchecked(small)
    }

    /// The disjoint blocks of the built semigroup.
    pub fn partition(&self) -> Result<Partition> {
        let n = self.a.len();
        if n == 0 {
            return Err(Error::InvalidDescriptor {
                reason: "partition requires depth >= 1".into(),
            });
        }
        let lambda = self.lambda();
        let big_a = self.suffix_products();
        let mut blocks = Vec::with_capacity(n);
        // Λ¹ = {0, A₁, ..., λ₁A₁}
        blocks.push((0..=lambda[0]).map(|t| t * big_a[0]).collect());
        for k in 1..n {
            let base = self.b[k - 1] * big_a[k - 1];
            blocks.push((1..=lambda[k]).map(|t| base + t * big_a[k]).collect());
        }
        Ok(Partition {
            blocks,
            ray_start: self.conductor() + 1,
        })
    }

    fn blocks_union(&self) -> Vec<u64> {
        let p = self.partition().expect("depth >= 1");
        let mut out = Vec::new();
        for b in p.blocks {
            out.extend(b);
        }
        out
    }

    /// Closed-form `Ap(Γₙ, x)` for `x` in the fundamental interval
    /// `[1, A₁]`, via the recursive case analysis on `x mod aₙ`.
    ///
    /// Equals `build().apery_set(x)` elementwise.
    pub fn apery_closed(&self, x: u64) -> Result<AperySet> {
        let mult = self.multiplicity();
        if x < 1 || x > mult {
            return Err(Error::OutOfFundamentalInterval {
                x,
                multiplicity: mult,
            });
        }
        if self.a.is_empty() {
            // Γ₀ = ℕ, x = 1
            return Ok(AperySet::new(x, vec![0]));
        }
        Ok(AperySet::new(x, self.apery_closed_rec(x)))
    }

    fn apery_closed_rec(&self, x: u64) -> Vec<u64> {
        let n = self.a.len();
        debug_assert!(x >= 1 && x <= self.multiplicity());
        if n == 1 {
            return apery_depth_one(self.a[0], self.b[0], x);
        }
        let an = self.a[n - 1];
        let bn = self.b[n - 1];
        let c = an * bn;
        let mult = self.multiplicity();
        if x == 1 {
            // (1)
            return self.blocks_union();
        }
        if x < an {
            // (2): the extra elements start right past the conductor
            let mut v = self.blocks_union();
            v.extend(c + 1..c + x);
            return v;
        }
        if x == mult {
            // (6)
            let prefix = self.prefix(n - 1);
            let k = mult / an; // multiplicity of Γₙ₋₁
            let mut v: Vec<u64> = prefix
                .apery_closed_rec(k)
                .into_iter()
                .map(|w| an * w)
                .collect();
            v.extend((c..c + mult).filter(|&w| !(w % an == 0 && (bn..bn + k).contains(&(w / an)))));
            v.sort_unstable();
            return v;
        }
        let k = x / an;
        let j = x % an;
        if j == 0 {
            // (3)
            let prefix = self.prefix(n - 1);
            let mut v: Vec<u64> = prefix
                .apery_closed_rec(k)
                .into_iter()
                .map(|w| an * w)
                .collect();
            v.extend(
                (c..c + k * an).filter(|&w| !(w % an == 0 && (bn..bn + k).contains(&(w / an)))),
            );
            v.sort_unstable();
            return v;
        }
        if j == 1 {
            // (4): x = k·aₙ + 1, branching on whether aₙbₙ − kaₙ ∈ Γₙ,
            // i.e. whether bₙ − k ∈ Γₙ₋₁
            let base = self.apery_closed_rec(k * an);
            let mut v = self.blocks_union();
            v.extend(base.iter().filter(|&&w| w > c).map(|&w| w + 1));
            if !self.prefix(n - 1).contains(bn - k) {
                v.push(c + 1);
            }
            v.sort_unstable();
            return v;
        }
        // (5): x = k·aₙ + j with 1 < j < aₙ. Only the cardinality grows
        // linearly from the j = 1 case; the set itself does not extend it
        // (raising j shifts w − x for every ray element), so the ray part
        // is taken directly: w ∈ (c, c + x) belongs iff w − x is a gap.
        let mut v = self.blocks_union();
        v.extend((c + 1..c + x).filter(|&w| !self.contains(w - x)));
        v
    }

    /// The closed-form cardinalities `♯S₁` and `♯S_{Aᵢ}` as pairs
    /// `(x, ♯Ap(Γₙ, x))`, in increasing `x`.
    ///
    /// `♯S₁ = λ₁ + ⋯ + λₙ + 1` and `♯S_{Aᵢ} = λ₁ + ⋯ + λᵢ₋₁ + Aᵢ`.
    pub fn apery_cardinalities_closed(&self) -> Vec<(u64, u64)> {
        let n = self.a.len();
        let lambda = self.lambda();
        let big_a = self.suffix_products();
        let total: u64 = lambda.iter().sum();
        let mut out = vec![(1, total + 1)];
        for i in (1..=n).rev() {
            let prefix_sum: u64 = lambda[..i - 1].iter().sum();
            out.push((big_a[i - 1], prefix_sum + big_a[i - 1]));
        }
        out
    }

    /// `E(Γ(a, b), 2)` by scanning the closed-form candidate cardinalities.
    pub fn e2_closed(&self) -> u64 {
        let n = self.a.len();
        if n == 0 {
            return 1;
        }
        let lambda = self.lambda();
        let mut l: u64 = lambda.iter().sum();
        let mut a = 1u64;
        let mut e = l + a;
        for i in (0..n).rev() {
            l -= lambda[i];
            a *= self.a[i];
            e = e.min(l + a);
        }
        e
    }

    /// Closed-form genus `Σ bᵢ(aᵢ − 1)`.
    pub fn genus_closed(&self) -> u64 {
        self.a.iter().zip(&self.b).map(|(&a, &b)| b * (a - 1)).sum()
    }
}

/// `Ap(a₁ℕ ∪ (a₁b₁ + ℕ), x)` for `x ∈ [1, a₁]` — the base of the
/// recursion, with three cases.
fn apery_depth_one(a1: u64, b1: u64, x: u64) -> Vec<u64> {
    let c = a1 * b1;
    if x == a1 {
        let mut v = vec![0];
        v.extend(c + 1..c + a1);
        return v;
    }
    let mut v: Vec<u64> = (0..=b1).map(|t| t * a1).collect();
    v.extend(c + 1..c + x);
    v
}

/// The gap-divisibility characterization alone, without recovering a
/// descriptor — allocation-free, for hot paths that only need a yes/no.
pub(crate) fn has_inductive_gaps(s: &NumericalSemigroup) -> bool {
    if s.is_natural() {
        return true;
    }
    let small = s.small_elements();
    let mut prev = 0u64;
    for w in small.windows(2) {
        let d = w[1] - w[0];
        if prev != 0 && !prev.is_multiple_of(d) {
            return false;
        }
        prev = d;
    }
    true
}

/// Recognize an inductive semigroup by the divisibility of consecutive
/// element gaps up to the conductor, recovering a canonical descriptor
/// from the maximal runs of equal gaps.
///
/// The recovered descriptor rebuilds the same set; it need not match the
/// descriptor the set was built from.
pub fn is_inductive(s: &NumericalSemigroup) -> Option<InductiveDescriptor> {
    if s.is_natural() {
        return Some(InductiveDescriptor::trivial());
    }
    let small = s.small_elements();
    let deltas: Vec<u64> = small.windows(2).map(|w| w[1] - w[0]).collect();
    // gaps past the conductor are all 1 and divide anything
    if deltas.windows(2).any(|w| w[0] % w[1] != 0) {
        return None;
    }
    let mut big_a: Vec<u64> = Vec::new();
    let mut lambda: Vec<u64> = Vec::new();
    for &d in &deltas {
        if big_a.last() == Some(&d) {
            *lambda.last_mut().unwrap() += 1;
        } else {
            big_a.push(d);
            lambda.push(1);
        }
    }
    let n = big_a.len();
    let mut a = Vec::with_capacity(n);
    for k in 0..n {
        let next = if k + 1 < n { big_a[k + 1] } else { 1 };
        a.push(big_a[k] / next);
    }
    let mut b = Vec::with_capacity(n);
    b.push(lambda[0]);
    for k in 1..n {
        b.push(lambda[k] + a[k - 1] * b[k - 1]);
    }
    let d = InductiveDescriptor::new(a, b).expect("runs yield a valid descriptor");
    debug_assert_eq!(&d.build(), s);
    Some(d)
}

/// The naive recursive test: divide the small elements by their gcd and
/// recurse; a gcd of 1 leaves only `ℕ` itself inductive.
pub fn is_inductive_naive(s: &NumericalSemigroup) -> bool {
    if s.is_natural() {
        return true;
    }
    let a = s.small_elements()[1..].iter().copied().fold(0, gcd);
    if a == 1 {
        return false;
    }
    let scaled: Vec<u64> = s.small_elements().iter().map(|&x| x / a).collect();
    // sums of scaled elements below the new maximum come from members of s,
    // so the scaled set is always closed
    let quotient =
        NumericalSemigroup::from_small_elements(&scaled).expect("scaled small set is closed");
    is_inductive_naive(&quotient)
}

/// `aΓ ∪ (b + ℕ)`, canonicalized. No relation between `a`, `b` and the
/// conductor of `Γ` is required.
pub fn multiple_of(s: &NumericalSemigroup, a: u64, b: u64) -> NumericalSemigroup {
    assert!(a >= 1 && b >= 1);
    let mut bits = vec![false; b as usize + 1];
    for &x in s.small_elements() {
        if x <= b / a {
            bits[(a * x) as usize] = true;
        }
    }
    let mut v = s.conductor();
    while v <= b / a {
        bits[(a * v) as usize] = true;
        v += 1;
    }
    bits[b as usize] = true;
    NumericalSemigroup::from_membership(&bits)
}

/// `Γ/a = {x ∈ ℕ | ax ∈ Γ}`, canonicalized.
pub fn quotient_by(s: &NumericalSemigroup, a: u64) -> NumericalSemigroup {
    assert!(a >= 1);
    let hi = s.conductor().div_ceil(a);
    let bits: Vec<bool> = (0..=hi).map(|x| s.contains((a * x) as i64)).collect();
    NumericalSemigroup::from_membership(&bits)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn d(a: &[u64], b: &[u64]) -> InductiveDescriptor {
        InductiveDescriptor::new(a.to_vec(), b.to_vec()).unwrap()
    }

    #[test]
    fn build_examples() {
        assert_eq!(
            d(&[3], &[1]).build(),
            NumericalSemigroup::from_small_elements(&[0, 3]).unwrap()
        );
        assert_eq!(
            d(&[2, 2, 2], &[1, 2, 6]).build(),
            NumericalSemigroup::from_small_elements(&[0, 8, 10, 12]).unwrap()
        );
        assert!(InductiveDescriptor::trivial().build().is_natural());
        assert_eq!(d(&[2, 2, 2], &[1, 2, 6]).conductor(), 12);
    }

    #[test]
    fn descriptor_validation() {
        assert!(matches!(
            InductiveDescriptor::new(vec![1], vec![1]),
            Err(Error::InvalidDescriptor { .. })
        ));
        assert!(matches!(
            InductiveDescriptor::new(vec![2, 2], vec![3, 4]),
            Err(Error::InvalidDescriptor { .. })
        ));
        assert!(matches!(
            InductiveDescriptor::new(vec![2], vec![0]),
            Err(Error::InvalidDescriptor { .. })
        ));
    }

    #[test]
    fn lambda_and_suffix_products() {
        let d = d(&[2, 2, 2], &[1, 2, 6]);
        assert_eq!(d.lambda(), vec![1, 0, 2]);
        assert_eq!(d.suffix_products(), vec![8, 4, 2, 1]);
        assert_eq!(d.multiplicity(), 8);
    }

    #[test]
    fn partition_examples() {
        let p = d(&[2, 2, 2], &[1, 2, 6]).partition().unwrap();
        assert_eq!(p.blocks()[0], vec![0, 8]);
        assert!(p.blocks()[1].is_empty());
        assert_eq!(p.blocks()[2], vec![10, 12]);
        assert_eq!(p.ray_start(), 13);

        let p = d(&[3], &[1]).partition().unwrap();
        assert_eq!(p.blocks()[0], vec![0, 3]);
        assert_eq!(p.ray_start(), 4);
    }

    #[test]
    fn partition_union_is_the_semigroup() {
        for desc in [
            d(&[2, 2, 2], &[1, 2, 6]),
            d(&[3], &[1]),
            d(&[4, 2], &[2, 9]),
            d(&[3, 2, 2], &[2, 7, 15]),
        ] {
            let s = desc.build();
            let p = desc.partition().unwrap();
            let mut union: Vec<u64> = p.blocks().iter().flatten().copied().collect();
            let before = union.len();
            union.sort_unstable();
            union.dedup();
            assert_eq!(union.len(), before, "blocks must be disjoint");
            let mut expected: Vec<u64> = s
                .small_elements()
                .iter()
                .copied()
                .filter(|&x| x < p.ray_start())
                .collect();
            expected.sort_unstable();
            assert_eq!(union, expected);
        }
    }

    #[test]
    fn is_inductive_examples() {
        let s = NumericalSemigroup::from_small_elements(&[0, 8, 10, 12]).unwrap();
        let rec = is_inductive(&s).unwrap();
        assert_eq!(rec.a(), &[4, 2]);
        assert_eq!(rec.b(), &[1, 6]);
        assert_eq!(rec.build(), s);

        let three_five = NumericalSemigroup::from_generators(&[3, 5]).unwrap();
        assert!(is_inductive(&three_five).is_none());

        let nat = NumericalSemigroup::natural();
        assert_eq!(is_inductive(&nat).unwrap().depth(), 0);
    }

    #[test]
    fn is_inductive_naive_examples() {
        assert!(is_inductive_naive(&NumericalSemigroup::natural()));
        let s = NumericalSemigroup::from_small_elements(&[0, 8, 10, 12]).unwrap();
        assert!(is_inductive_naive(&s));
        let three_five = NumericalSemigroup::from_generators(&[3, 5]).unwrap();
        assert!(!is_inductive_naive(&three_five));
    }

    #[test]
    fn apery_closed_examples() {
        assert_eq!(
            d(&[3], &[1]).apery_closed(3).unwrap().elements(),
            &[0, 4, 5]
        );
        let desc = d(&[2, 2, 2], &[1, 2, 6]);
        assert_eq!(desc.apery_closed(2).unwrap().elements(), &[0, 8, 13]);
        assert_eq!(desc.apery_closed(1).unwrap().elements(), &[0, 8, 10, 12]);
        assert!(matches!(
            desc.apery_closed(9),
            Err(Error::OutOfFundamentalInterval { .. })
        ));
        assert!(matches!(
            desc.apery_closed(0),
            Err(Error::OutOfFundamentalInterval { .. })
        ));
    }

    #[test]
    fn apery_closed_matches_definition_on_whole_interval() {
        for desc in [
            d(&[3], &[1]),
            d(&[2, 2, 2], &[1, 2, 6]),
            d(&[4, 2], &[2, 9]),
            d(&[3, 3], &[2, 8]),
            d(&[2, 3, 2], &[3, 7, 21]),
        ] {
            let s = desc.build();
            for x in 1..=desc.multiplicity() {
                let closed = desc.apery_closed(x).unwrap();
                let oracle = s.apery_set(x as i64).unwrap();
                assert_eq!(closed, oracle, "x = {x} in {desc:?}");
            }
        }
    }

    /// Case (6) is the k = A₁⁽ⁿ⁻¹⁾ instance of case (3); check they agree.
    #[test]
    fn apery_case_six_extends_case_three() {
        for desc in [
            d(&[2, 2, 2], &[1, 2, 6]),
            d(&[4, 2], &[2, 9]),
            d(&[3, 3], &[2, 8]),
        ] {
            let n = desc.depth();
            let an = desc.a()[n - 1];
            let bn = desc.b()[n - 1];
            let c = an * bn;
            let mult = desc.multiplicity();
            let k = mult / an;
            let prefix = desc.prefix(n - 1);
            let mut via_three: Vec<u64> = prefix
                .apery_closed(k)
                .unwrap()
                .elements()
                .iter()
                .map(|&w| an * w)
                .collect();
            via_three.extend(
                (c..c + k * an).filter(|&w| !(w % an == 0 && (bn..bn + k).contains(&(w / an)))),
            );
            via_three.sort_unstable();
            assert_eq!(desc.apery_closed(mult).unwrap().elements(), via_three);
        }
    }

    #[test]
    fn apery_cardinalities_examples() {
        let desc = d(&[2, 2, 2], &[1, 2, 6]);
        assert_eq!(
            desc.apery_cardinalities_closed(),
            vec![(1, 4), (2, 3), (4, 5), (8, 8)]
        );
        assert_eq!(
            d(&[3], &[1]).apery_cardinalities_closed(),
            vec![(1, 2), (3, 3)]
        );
        // ♯S_{A₁} = A₁ always
        for desc in [d(&[4, 2], &[2, 9]), d(&[2, 3, 2], &[3, 7, 21])] {
            let cards = desc.apery_cardinalities_closed();
            let (x, card) = *cards.last().unwrap();
            assert_eq!(x, desc.multiplicity());
            assert_eq!(card, desc.multiplicity());
        }
    }

    #[test]
    fn e2_closed_examples() {
        let sharp1 = InductiveDescriptor::from_multipliers(&[4, 4, 4, 4], &[2, 2, 2, 2]).unwrap();
        assert_eq!(sharp1.b(), &[2, 10, 42, 170]);
        assert_eq!(sharp1.e2_closed(), 9);
        let sharp4 = InductiveDescriptor::from_multipliers(&[2, 2, 2, 2], &[6, 6, 6, 6]).unwrap();
        assert_eq!(sharp4.b(), &[6, 18, 42, 90]);
        assert_eq!(sharp4.e2_closed(), 14);
        assert_eq!(d(&[2, 2, 2], &[1, 2, 6]).e2_closed(), 3);
        assert_eq!(InductiveDescriptor::trivial().e2_closed(), 1);
    }

    #[test]
    fn genus_closed_examples() {
        assert_eq!(InductiveDescriptor::trivial().genus_closed(), 0);
        assert_eq!(d(&[2, 2, 2], &[1, 2, 6]).genus_closed(), 9);
        assert_eq!(d(&[9], &[8]).genus_closed(), 64);
        let desc = d(&[2, 2, 2], &[1, 2, 6]);
        assert_eq!(desc.genus_closed(), desc.build().genus());
    }

    #[test]
    fn multiple_of_examples() {
        let three_five = NumericalSemigroup::from_generators(&[3, 5]).unwrap();
        assert_eq!(
            multiple_of(&three_five, 5, 11),
            NumericalSemigroup::ordinary(11)
        );
        assert!(multiple_of(&three_five, 1, 1).is_natural());
        let s = NumericalSemigroup::from_small_elements(&[0, 3]).unwrap();
        assert_eq!(
            multiple_of(&s, 2, 12),
            NumericalSemigroup::from_small_elements(&[0, 6, 8, 10, 12]).unwrap()
        );
    }

    #[test]
    fn quotient_examples() {
        let s = NumericalSemigroup::from_small_elements(&[0, 8, 10, 12]).unwrap();
        assert_eq!(quotient_by(&s, 1), s);
        assert_eq!(
            quotient_by(&s, 2),
            NumericalSemigroup::from_small_elements(&[0, 4]).unwrap()
        );
        // fold then quotient is the identity once b >= a * c
        for gens in [&[3u64, 5][..], &[4, 7, 9], &[2, 3]] {
            let s = NumericalSemigroup::from_generators(gens).unwrap();
            for a in 2..5 {
                let folded = multiple_of(&s, a, a * s.conductor().max(1));
                assert_eq!(quotient_by(&folded, a), s);
            }
        }
    }

    #[test]
    fn descriptor_membership_matches_built_set() {
        let desc = d(&[2, 3, 2], &[3, 7, 21]);
        let s = desc.build();
        for x in 0..s.conductor() + 10 {
            assert_eq!(desc.contains(x), s.contains(x as i64), "x = {x}");
        }
    }
}
