//! Numerical semigroups in canonical form, together with the definitional
//! (brute-force) computations every closed formula in this crate is checked
//! against: Apery sets, divisor sets, Feng-Rao distances and the second
//! Feng-Rao number.
//!
//! A numerical semigroup is an additively closed subset of the nonnegative
//! integers containing 0 whose complement is finite. It is stored as the
//! sorted list of its members up to and including the conductor `c`; every
//! integer `>= c` is a member.

use rayon::prelude::*;

use crate::error::{Error, Result};

pub(crate) fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a
}

/// A numerical semigroup, canonically encoded.
///
/// Canonical form makes set equality coincide with structural equality.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct NumericalSemigroup {
    /// Members in `[0, conductor]`, strictly increasing. Starts at 0 and
    /// ends at the conductor.
    small: Vec<u64>,
    conductor: u64,
    genus: u64,
    multiplicity: u64,
}

/// The Apery set of a semigroup relative to a base `x >= 1`:
/// the members `w` with `w - x` not a member.
///
/// The base does not have to be a member; for a positive gap the
/// cardinality exceeds the base.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AperySet {
    base: u64,
    elements: Vec<u64>,
}

impl AperySet {
    pub(crate) fn new(base: u64, elements: Vec<u64>) -> Self {
        debug_assert!(elements.windows(2).all(|w| w[0] < w[1]));
        AperySet { base, elements }
    }

    pub fn base(&self) -> u64 {
        self.base
    }

    /// The elements, strictly increasing.
    pub fn elements(&self) -> &[u64] {
        &self.elements
    }

    pub fn cardinality(&self) -> u64 {
        self.elements.len() as u64
    }
}

impl NumericalSemigroup {
    /// The full semigroup of nonnegative integers.
    pub fn natural() -> Self {
        NumericalSemigroup {
            small: vec![0],
            conductor: 0,
            genus: 0,
            multiplicity: 1,
        }
    }

    /// The ordinary semigroup `{0, c, c+1, ...}`.
    pub fn ordinary(c: u64) -> Self {
        if c <= 1 {
            return Self::natural();
        }
        NumericalSemigroup {
            small: vec![0, c],
            conductor: c,
            genus: c - 1,
            multiplicity: c,
        }
    }

    /// Canonicalize from a membership table. `bits[i]` is the membership of
    /// `i`; the caller guarantees `bits[0]`, a true last entry, and that the
    /// encoded set together with the ray beyond the table is additively
    /// closed with finite complement.
    pub(crate) fn from_membership(bits: &[bool]) -> Self {
        debug_assert!(bits[0] && *bits.last().unwrap());
        let mut c = bits.len() - 1;
        while c > 0 && bits[c - 1] {
            c -= 1;
        }
        let small: Vec<u64> = (0..=c).filter(|&i| bits[i]).map(|i| i as u64).collect();
        let conductor = c as u64;
        let genus = conductor + 1 - small.len() as u64;
        let multiplicity = if small.len() > 1 { small[1] } else { 1 };
        NumericalSemigroup {
            small,
            conductor,
            genus,
            multiplicity,
        }
    }

    /// Wrap an already-canonical small-element list: strictly increasing,
    /// starting at 0, additively closed, with the true conductor last.
    pub(crate) fn from_small_unchecked(small: Vec<u64>) -> Self {
        let conductor = *small.last().unwrap();
        let genus = conductor + 1 - small.len() as u64;
        let multiplicity = if small.len() > 1 { small[1] } else { 1 };
        NumericalSemigroup {
            small,
            conductor,
            genus,
            multiplicity,
        }
    }

    /// Smallest numerical semigroup containing `gens`.
    ///
    /// Sieves sums upward until a run of `min(gens)` consecutive members
    /// appears; the start of that run is the conductor.
    pub fn from_generators(gens: &[u64]) -> Result<Self> {
        assert!(!gens.is_empty(), "generator set must be non-empty");
        assert!(gens.iter().all(|&g| g > 0), "generators must be positive");
        let g = gens.iter().copied().fold(0, gcd);
        if g != 1 {
            return Err(Error::NotCoprime { gcd: g });
        }
        let m = *gens.iter().min().unwrap() as usize;
        let mut bits = vec![true];
        let mut run = 1usize;
        let mut n = 0usize;
        while run < m {
            n += 1;
            let member = gens
                .iter()
                .any(|&g| n >= g as usize && bits[n - g as usize]);
            bits.push(member);
            run = if member { run + 1 } else { 0 };
        }
        bits.truncate(n + 2 - m); // keep 0..=conductor
        Ok(Self::from_membership(&bits))
    }

    /// The semigroup `elems ∪ (max(elems) + ℕ)`, if that set is closed.
    ///
    /// `elems` must be strictly increasing and start at 0. The trailing
    /// consecutive run is collapsed so the stored last element is the true
    /// conductor.
    pub fn from_small_elements(elems: &[u64]) -> Result<Self> {
        assert!(
            !elems.is_empty() && elems[0] == 0,
            "small elements must start at 0"
        );
        assert!(
            elems.windows(2).all(|w| w[0] < w[1]),
            "small elements must be strictly increasing"
        );
        let max = *elems.last().unwrap();
        let mut bits = vec![false; max as usize + 1];
        for &e in elems {
            bits[e as usize] = true;
        }
        for (i, &u) in elems.iter().enumerate() {
            for &v in &elems[i..] {
                let s = u.checked_add(v).ok_or(Error::Overflow {
                    context: "small-element sum",
                })?;
                if s < max && !bits[s as usize] {
                    return Err(Error::NotClosed { u, v });
                }
            }
        }
        Ok(Self::from_membership(&bits))
    }

    /// Members up to and including the conductor.
    pub fn small_elements(&self) -> &[u64] {
        &self.small
    }

    pub fn conductor(&self) -> u64 {
        self.conductor
    }

    /// Number of gaps.
    pub fn genus(&self) -> u64 {
        self.genus
    }

    /// Least positive member (1 for the full semigroup of naturals).
    pub fn multiplicity(&self) -> u64 {
        self.multiplicity
    }

    /// `c - 1`; -1 for the naturals.
    pub fn frobenius(&self) -> i64 {
        self.conductor as i64 - 1
    }

    pub fn is_natural(&self) -> bool {
        self.conductor == 0
    }

    pub fn contains(&self, x: i64) -> bool {
        x >= 0 && self.has(x as u64)
    }

    #[inline]
    pub(crate) fn has(&self, x: u64) -> bool {
        x >= self.conductor || self.small.binary_search(&x).is_ok()
    }

    /// The `i`-th smallest member, 1-indexed: `rho(1) = 0`.
    pub fn rho(&self, i: u64) -> u64 {
        assert!(i >= 1, "rho is 1-indexed");
        let len = self.small.len() as u64;
        if i <= len {
            self.small[(i - 1) as usize]
        } else {
            self.conductor + (i - len)
        }
    }

    /// Number of members in `[0, x]`.
    pub fn members_up_to(&self, x: u64) -> u64 {
        if x >= self.conductor {
            self.small.len() as u64 + (x - self.conductor)
        } else {
            match self.small.binary_search(&x) {
                Ok(i) => i as u64 + 1,
                Err(i) => i as u64,
            }
        }
    }

    /// Membership table for `0..=limit`.
    pub(crate) fn membership_bits(&self, limit: u64) -> Vec<bool> {
        let mut bits = vec![false; limit as usize + 1];
        for &s in &self.small {
            if s <= limit {
                bits[s as usize] = true;
            }
        }
        for i in self.conductor..=limit {
            bits[i as usize] = true;
        }
        bits
    }

    /// `Ap(Γ, x)` by definition: members `w` with `w - x` not a member.
    /// Every such `w` is below `c + x`, so the scan is complete.
    pub fn apery_set(&self, x: i64) -> Result<AperySet> {
        if x <= 0 {
            return Err(Error::InvalidBase { base: x });
        }
        let x = x as u64;
        let elements = (0..self.conductor + x)
            .filter(|&w| self.has(w) && !(w >= x && self.has(w - x)))
            .collect();
        Ok(AperySet::new(x, elements))
    }

    /// Divisors of a member `x`: members `α` with `x - α` also a member.
    pub fn divisors(&self, x: u64) -> Result<Vec<u64>> {
        if !self.has(x) {
            return Err(Error::NotMember { x });
        }
        Ok((0..=x)
            .filter(|&a| self.has(a) && self.has(x - a))
            .collect())
    }

    /// `ν(x)`, the number of divisors of the member `x`.
    pub fn nu(&self, x: u64) -> Result<u64> {
        if !self.has(x) {
            return Err(Error::NotMember { x });
        }
        let mut count = 0;
        for a in 0..=x {
            if self.has(a) && self.has(x - a) {
                count += 1;
            }
        }
        Ok(count)
    }

    /// `δ_FR(m)`: the minimum of `ν` over members `m₁ ≥ m`.
    ///
    /// The scan stops at `max(m, 2c - 1)` because `ν(m₁) = m₁ + 1 - 2g` for
    /// `m₁ ≥ 2c - 1`, which is strictly increasing.
    pub fn feng_rao_distance(&self, m: u64) -> Result<u64> {
        if !self.has(m) {
            return Err(Error::NotMember { x: m });
        }
        let hi = m.max((2 * self.conductor).saturating_sub(1));
        let bits = self.membership_bits(hi);
        let mut best = u64::MAX;
        for m1 in m..=hi {
            if !bits[m1 as usize] {
                continue;
            }
            let mut nu = 0;
            for a in 0..=m1 {
                if bits[a as usize] && bits[(m1 - a) as usize] {
                    nu += 1;
                }
            }
            best = best.min(nu);
        }
        Ok(best)
    }

    /// `δʳ(m)`: minimum cardinality of `D(m₁) ∪ ... ∪ D(m_r)` over member
    /// tuples `m ≤ m₁ < ... < m_r ≤ m + window`.
    ///
    /// There is no canonical finite search bound, so the window is an
    /// explicit parameter; `None` uses the generous default `2c + r`
    /// (`ν` is strictly increasing past `2c − 1`).
    pub fn generalized_feng_rao_distance(
        &self,
        r: u64,
        m: u64,
        window: Option<u64>,
    ) -> Result<u64> {
        assert!(r >= 1);
        if !self.has(m) {
            return Err(Error::NotMember { x: m });
        }
        let window = window.unwrap_or(2 * self.conductor + r);
        let hi = m + window;
        let bits = self.membership_bits(hi);
        let members: Vec<u64> = (m..=hi).filter(|&x| bits[x as usize]).collect();
        if (members.len() as u64) < r {
            return Err(Error::WindowTooSmall {
                m,
                window,
                found: members.len() as u64,
                needed: r,
            });
        }
        // Divisor sets as bitsets of u64 words for cheap unions.
        let words = (hi as usize + 64) / 64;
        let divisor_words: Vec<Vec<u64>> = members
            .iter()
            .map(|&x| {
                let mut w = vec![0u64; words];
                for a in 0..=x {
                    if bits[a as usize] && bits[(x - a) as usize] {
                        w[(a / 64) as usize] |= 1 << (a % 64);
                    }
                }
                w
            })
            .collect();

        fn search(sets: &[Vec<u64>], start: usize, left: u64, acc: &mut Vec<u64>, best: &mut u64) {
            if left == 0 {
                let size: u64 = acc.iter().map(|w| w.count_ones() as u64).sum();
                *best = (*best).min(size);
                return;
            }
            for i in start..=sets.len() - left as usize {
                let saved = acc.clone();
                for (a, b) in acc.iter_mut().zip(&sets[i]) {
                    *a |= b;
                }
                search(sets, i + 1, left - 1, acc, best);
                *acc = saved;
            }
        }

        let mut best = u64::MAX;
        let mut acc = vec![0u64; words];
        search(&divisor_words, 0, r, &mut acc, &mut best);
        Ok(best)
    }

    /// Cardinality of `Ap(Γ, x)` against a precomputed membership table
    /// covering `0..conductor + x`.
    fn apery_cardinality_with(&self, bits: &[bool], x: u64) -> u64 {
        let mut count = 0;
        for w in 0..self.conductor + x {
            if bits[w as usize] && !(w >= x && bits[(w - x) as usize]) {
                count += 1;
            }
        }
        count
    }

    /// `E(Γ, 2)` straight from the definition:
    /// the minimum of `♯Ap(Γ, x)` over `1 ≤ x ≤ ρ₂`.
    pub fn feng_rao_number_2_bruteforce(&self) -> u64 {
        let rho2 = self.multiplicity;
        let bits = self.membership_bits(self.conductor + rho2);
        (1..=rho2)
            .into_par_iter()
            .map(|x| self.apery_cardinality_with(&bits, x))
            .min()
            .expect("rho2 >= 1")
    }
}
