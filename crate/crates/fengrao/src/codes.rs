//! Lower bounds for the second generalized Hamming weight of one-point
//! evaluation codes, and the table generator comparing them.
//!
//! For a code of degree `m` on a semigroup with genus `g` and second
//! Feng-Rao number `E₂`, the bound `d₂(C_m) ≥ m + 2 − 2g + E₂` competes
//! with the Griesmer order bound `GOB(m+1) = δ(m+1) + ⌈δ(m+1)/q⌉`, where
//! `δ` is the classical Feng-Rao distance (closed form on Arf
//! semigroups).

use crate::error::{Error, Result};
use crate::inductive::{has_inductive_gaps, is_inductive};
use crate::patterns::is_arf;
use crate::semigroup::NumericalSemigroup;
use crate::tower::TowerParams;

/// Which bound wins a table cell.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Winner {
    GoppaLike,
    Gob,
    Tie,
}

/// One table row: the two bounds for the code of degree `m`, both
/// evaluated at `m + 1`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BoundsRow {
    pub m: u64,
    pub d2_goppa_like: i64,
    pub gob: u64,
    pub winner: Winner,
}

/// The comparison table for a tower semigroup over a contiguous `m`
/// range.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BoundsTable {
    pub q: u64,
    pub n: u32,
    pub m_from: u64,
    pub m_to: u64,
    pub rows: Vec<BoundsRow>,
}

/// `δ(m)` assuming the Arf property, without re-verifying it: `2i` where
/// `i` counts the members ≤ m − c, capped by `m + 1 − 2g` from `2c − 1`
/// on.
fn delta_arf_unchecked(s: &NumericalSemigroup, m: u64) -> u64 {
    let c = s.conductor();
    if m >= (2 * c).saturating_sub(1) {
        return m + 1 - 2 * s.genus();
    }
    2 * s.members_up_to(m - c)
}

/// Closed-form Feng-Rao distance `δ(m)` on an Arf semigroup, for members
/// `m ≥ c`. Equals `feng_rao_distance(m)` there.
pub fn delta_arf_closed(s: &NumericalSemigroup, m: u64) -> Result<u64> {
    // inductive semigroups are Arf; test that first since it is linear
    // while the pattern search is cubic
    if !has_inductive_gaps(s) && !is_arf(s) {
        return Err(Error::NotArf);
    }
    if m < s.conductor() {
        return Err(Error::BelowConductor {
            m,
            conductor: s.conductor(),
        });
    }
    Ok(delta_arf_unchecked(s, m))
}

/// `d₂(C_m) ≥ m + 2 − 2g + E₂` for `m ≥ c`; negative values are possible
/// below `2g − 1` and returned as-is.
///
/// `E₂` comes from the closed form when the semigroup is inductive and
/// from the definitional minimum otherwise.
pub fn d2_lower_bound(s: &NumericalSemigroup, m: u64) -> Result<i64> {
    if m < s.conductor() {
        return Err(Error::BelowConductor {
            m,
            conductor: s.conductor(),
        });
    }
    let e2 = match is_inductive(s) {
        Some(d) => d.e2_closed(),
        None => s.feng_rao_number_2_bruteforce(),
    };
    Ok(m as i64 + 2 - 2 * s.genus() as i64 + e2 as i64)
}

/// Griesmer order bound `GOB(m+1) = δ(m+1) + ⌈δ(m+1)/q⌉` for a code over
/// a field with `q` elements.
pub fn griesmer_order_bound(s: &NumericalSemigroup, q: u64, m: u64) -> Result<u64> {
    assert!(q >= 2);
    let delta = match delta_arf_closed(s, m + 1) {
        Ok(d) => d,
        // non-Arf or below the closed form's domain: fall back to the
        // definitional distance
        Err(Error::NotArf) | Err(Error::BelowConductor { .. }) => s.feng_rao_distance(m + 1)?,
        Err(e) => return Err(e),
    };
    Ok(delta + delta.div_ceil(q))
}

/// The comparison bound `d_r(C_m) ≥ δ_FR(m + r)`, reported side by side
/// with the dedicated `r = 2` bound.
pub fn generic_dr_bound(s: &NumericalSemigroup, r: u64, m: u64) -> Result<u64> {
    assert!(r >= 1);
    s.feng_rao_distance(m + r)
}

/// The range `[2g − 1, 2c − 2]` the comparison tables cover.
pub fn default_bounds_range(p: &TowerParams) -> (u64, u64) {
    let d = p.descriptor();
    let g = d.genus_closed();
    let c = d.conductor();
    (2 * g - 1, 2 * c - 2)
}

/// Build the bound-comparison table for the level-`n` tower semigroup
/// over `m ∈ [m_from, m_to]`.
pub fn bounds_table(p: &TowerParams, m_from: u64, m_to: u64) -> Result<BoundsTable> {
    assert!(m_from <= m_to);
    let d = p.descriptor();
    let s = d.build();
    let g = d.genus_closed();
    let e2 = p.e2_closed();
    let mut rows = Vec::with_capacity((m_to - m_from + 1) as usize);
    for m in m_from..=m_to {
        if m + 1 < s.conductor() {
            return Err(Error::BelowConductor {
                m: m + 1,
                conductor: s.conductor(),
            });
        }
        let d2 = m as i64 + 2 - 2 * g as i64 + e2 as i64;
        let delta = delta_arf_unchecked(&s, m + 1);
        let gob = delta + delta.div_ceil(p.q());
        let winner = match d2.cmp(&(gob as i64)) {
            std::cmp::Ordering::Greater => Winner::GoppaLike,
            std::cmp::Ordering::Less => Winner::Gob,
            std::cmp::Ordering::Equal => Winner::Tie,
        };
        rows.push(BoundsRow {
            m,
            d2_goppa_like: d2,
            gob,
            winner,
        });
    }
    Ok(BoundsTable {
        q: p.q(),
        n: p.n(),
        m_from,
        m_to,
        rows,
    })
}
