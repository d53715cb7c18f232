//! Property-based cross-validation: definitional oracles against the
//! closed forms, and the structural identities the closed forms rely on.

use fengrao::inductive::{is_inductive, multiple_of, quotient_by, InductiveDescriptor};
use fengrao::NumericalSemigroup;
use proptest::prelude::*;

fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

/// Coprime generator sets of moderate size.
fn gens_strategy() -> impl Strategy<Value = Vec<u64>> {
    prop::collection::vec(2u64..50, 2..5).prop_filter("generators must be coprime", |g| {
        g.iter().copied().fold(0, gcd) == 1
    })
}

/// Valid inductive descriptors with conductor ≤ 2000.
fn descriptor_strategy() -> impl Strategy<Value = InductiveDescriptor> {
    (1usize..=3).prop_flat_map(|n| {
        (
            prop::collection::vec(2u64..=4, n),
            prop::collection::vec(0u64..=4, n),
        )
            .prop_filter_map("conductor bound", |(a, mut lambda)| {
                lambda[0] = lambda[0].max(1);
                let d = InductiveDescriptor::from_multipliers(&a, &lambda).ok()?;
                (d.conductor() <= 2000).then_some(d)
            })
    })
}

proptest! {
    #[test]
    fn generated_semigroups_are_closed(gens in gens_strategy()) {
        let s = NumericalSemigroup::from_generators(&gens).unwrap();
        let small = s.small_elements();
        for &u in small {
            for &v in small {
                prop_assert!(s.contains((u + v) as i64), "{u} + {v}");
            }
        }
        for &g in &gens {
            prop_assert!(s.contains(g as i64));
        }
    }

    /// Selmer's identity: `g = (Σ Ap(Γ, x)) / x − (x − 1)/2` for members x.
    #[test]
    fn selmer_identity(gens in gens_strategy(), x in 1u64..30) {
        let s = NumericalSemigroup::from_generators(&gens).unwrap();
        let ap = s.apery_set(x as i64).unwrap();
        if s.contains(x as i64) {
            let sum: u64 = ap.elements().iter().sum();
            prop_assert_eq!(2 * x * s.genus(), 2 * sum - x * (x - 1));
        }
    }

    /// `♯Ap(Γ, x) = x` iff `x ∈ Γ`, and `> x` on gaps.
    #[test]
    fn apery_cardinality_detects_membership(gens in gens_strategy(), x in 1u64..40) {
        let s = NumericalSemigroup::from_generators(&gens).unwrap();
        let card = s.apery_set(x as i64).unwrap().cardinality();
        if s.contains(x as i64) {
            prop_assert_eq!(card, x);
        } else {
            prop_assert!(card > x);
        }
    }

    /// Divisor sets are symmetric: `α` divides `x` iff `x − α` does.
    #[test]
    fn divisors_symmetric(gens in gens_strategy(), x in 0u64..60) {
        let s = NumericalSemigroup::from_generators(&gens).unwrap();
        if s.contains(x as i64) {
            let d = s.divisors(x).unwrap();
            for &a in &d {
                prop_assert!(d.binary_search(&(x - a)).is_ok());
            }
            prop_assert_eq!(d.len() as u64, s.nu(x).unwrap());
        }
    }

    /// δ¹ from the generalized search equals the dedicated scan.
    #[test]
    fn generalized_r1_matches_feng_rao(gens in gens_strategy(), off in 0u64..15) {
        let s = NumericalSemigroup::from_generators(&gens).unwrap();
        let m = s.conductor() + off;
        prop_assert_eq!(
            s.generalized_feng_rao_distance(1, m, None).unwrap(),
            s.feng_rao_distance(m).unwrap()
        );
    }

    /// The partition blocks are disjoint and union to the members below
    /// the ray.
    #[test]
    fn partition_covers(d in descriptor_strategy()) {
        let s = d.build();
        let p = d.partition().unwrap();
        let mut union: Vec<u64> = p.blocks().iter().flatten().copied().collect();
        let n = union.len();
        union.sort_unstable();
        union.dedup();
        prop_assert_eq!(union.len(), n, "blocks overlap");
        let expected: Vec<u64> = s
            .small_elements()
            .iter()
            .copied()
            .filter(|&x| x < p.ray_start())
            .collect();
        prop_assert_eq!(union, expected);
    }

    /// Closed-form Apery sets equal the definitional ones on the whole
    /// fundamental interval.
    #[test]
    fn apery_closed_matches_oracle(d in descriptor_strategy()) {
        let s = d.build();
        for x in 1..=d.multiplicity() {
            prop_assert_eq!(
                d.apery_closed(x).unwrap(),
                s.apery_set(x as i64).unwrap(),
                "x = {}", x
            );
        }
    }

    /// Cardinalities climb by exactly one between `kaₙ` steps:
    /// `♯Ap(kaₙ + j) = ♯Ap(kaₙ + 1) + (j − 1)`, and dropping to a
    /// multiple of `aₙ` never increases them.
    #[test]
    fn apery_cardinality_laddering(d in descriptor_strategy()) {
        prop_assume!(d.depth() >= 1);
        let s = d.build();
        let an = *d.a().last().unwrap();
        let mult = d.multiplicity();
        let card = |x: u64| s.apery_set(x as i64).unwrap().cardinality();
        for k in 1..mult / an {
            let base = card(k * an + 1);
            for j in 2..an.min(mult - k * an) {
                prop_assert_eq!(card(k * an + j), base + (j - 1), "k = {}, j = {}", k, j);
            }
            prop_assert!(card(k * an) <= base, "k = {}", k);
        }
    }

    /// End-to-end consistency: the minimum over the closed-form
    /// candidate cardinalities is the brute-force E₂, and every candidate
    /// matches its definitional value.
    #[test]
    fn e2_candidates_match_oracle(d in descriptor_strategy()) {
        let s = d.build();
        for (x, card) in d.apery_cardinalities_closed() {
            prop_assert_eq!(card, s.apery_set(x as i64).unwrap().cardinality(), "x = {}", x);
        }
        prop_assert_eq!(d.e2_closed(), s.feng_rao_number_2_bruteforce());
    }

    /// `Ap(aΓ ∪ (ab + ℕ), at)` has `♯Ap(Γ, t) + (a − 1)t` elements when
    /// `b` clears the conductor of `Γ`.
    #[test]
    fn folding_scales_apery_cardinality(
        gens in gens_strategy(),
        a in 2u64..5,
        extra in 0u64..5,
        t in 1u64..8,
    ) {
        let s = NumericalSemigroup::from_generators(&gens).unwrap();
        let b = s.conductor().max(1) + extra;
        let folded = multiple_of(&s, a, a * b);
        prop_assert_eq!(
            folded.apery_set((a * t) as i64).unwrap().cardinality(),
            s.apery_set(t as i64).unwrap().cardinality() + (a - 1) * t
        );
    }

    /// Recognition round-trips: the recovered descriptor rebuilds the
    /// same set, and building never loses inductiveness.
    #[test]
    fn recognition_round_trip(d in descriptor_strategy()) {
        let s = d.build();
        let rec = is_inductive(&s).expect("built sets are inductive");
        prop_assert_eq!(rec.build(), s);
        prop_assert_eq!(rec.genus_closed(), d.genus_closed());
        prop_assert_eq!(rec.e2_closed(), d.e2_closed());
    }

    /// Quotient undoes folding when the ray starts late enough.
    #[test]
    fn quotient_inverts_folding(gens in gens_strategy(), a in 2u64..6) {
        let s = NumericalSemigroup::from_generators(&gens).unwrap();
        let folded = multiple_of(&s, a, a * s.conductor().max(1));
        prop_assert_eq!(quotient_by(&folded, a), s);
    }

    /// Genus closed form equals the gap count.
    #[test]
    fn genus_closed_matches(d in descriptor_strategy()) {
        prop_assert_eq!(d.genus_closed(), d.build().genus());
    }

    /// δ² is eventually exactly `m + 1 − 2g + E₂`, and never below it
    /// from the conductor on.
    #[test]
    fn delta2_asymptotics(d in descriptor_strategy()) {
        prop_assume!(d.conductor() <= 60);
        let s = d.build();
        let (c, g) = (s.conductor(), s.genus());
        let e2 = d.e2_closed();
        for m in c..=2 * c + 4 {
            let d2 = s.generalized_feng_rao_distance(2, m, None).unwrap();
            let line = (m + 1 + e2) as i64 - 2 * g as i64;
            if m >= (2 * c).saturating_sub(1) {
                prop_assert_eq!(d2 as i64, line, "m = {}", m);
            } else {
                prop_assert!(d2 as i64 >= line, "m = {}", m);
            }
        }
    }
}
