//! The h-invariant, partial trace ideals, the canonical ideal and the
//! Gorenstein-type classification of `k[H]`.
//!
//! For a fractional monomial ideal `I`, every homomorphism `I -> R` is
//! multiplication by an element of `R : I`, so the least colength of an image
//! is attained at `t^{v(R:I)} I`:
//!
//! ```text
//! h(I) = ℓ(R/I) + v(R:I)
//! ```
//!
//! Several predicates below have two or three equivalent characterizations.
//! Each one is evaluated every way and a disagreement is reported as
//! [`Error::InternalInconsistency`].

use std::sync::Arc;

use serde::{Serialize, Serializer};

use crate::error::{inconsistency, Error, Result};
use crate::gorenstein_search::bg_upper_bound;
use crate::ideal::RelativeIdeal;
use crate::semigroup::NumericalSemigroup;

fn require_proper(h: &NumericalSemigroup) -> Result<()> {
    if h.is_full() {
        Err(Error::FullSemigroup)
    } else {
        Ok(())
    }
}

/// Least `c` with `E + c ⊆ H`, scanning upward from `-v(E)`.
pub fn least_integral_shift(e: &RelativeIdeal) -> i64 {
    let h = e.semigroup();
    let mut c = -e.value();
    while !e.min_gens().iter().all(|&g| h.contains(g + c)) {
        c += 1;
    }
    c
}

/// `E` itself when integral, otherwise `E + c` for the least integral shift `c`.
pub fn integral_representative(e: &RelativeIdeal) -> Result<(i64, RelativeIdeal)> {
    if e.is_integral() {
        return Ok((0, e.clone()));
    }
    let c = least_integral_shift(e);
    Ok((c, e.shift(c)?))
}

/// `ℓ(R/I) + v(R:I)` for an integral `I`.
fn h_of_integral(i: &RelativeIdeal) -> Result<u64> {
    let dual = RelativeIdeal::unit(i.semigroup()).colon(i)?;
    let h = i.colength()? as i64 + dual.value();
    u64::try_from(h).map_err(|_| inconsistency(format!("negative h-invariant for {i}")))
}

/// `h(E)`, the least colength of a homomorphic image of `E` in `R`.
pub fn h_invariant(e: &RelativeIdeal) -> Result<u64> {
    let (c, integral) = integral_representative(e)?;
    let h = h_of_integral(&integral)?;

    // the value must not depend on which integral copy of E is used
    let h_ring = e.semigroup();
    let mut next = c + 1;
    while !e.min_gens().iter().all(|&g| h_ring.contains(g + next)) {
        next += 1;
    }
    let again = h_of_integral(&e.shift(next)?)?;
    if again != h {
        return Err(inconsistency(format!(
            "h-invariant of {e} is {h} at shift {c} but {again} at shift {next}"
        )));
    }
    Ok(h)
}

/// The monomial partial trace ideal `t^{v(R:E')} E'` of `E`.
pub fn monomial_partial_trace(e: &RelativeIdeal) -> Result<RelativeIdeal> {
    let (_, integral) = integral_representative(e)?;
    let dual = RelativeIdeal::unit(e.semigroup()).colon(&integral)?;
    let j = integral.shift(dual.value())?;
    if j.colength()? != h_invariant(e)? || !is_partial_trace(&j)? {
        return Err(inconsistency(format!(
            "{j} does not realize the h-invariant of {e}"
        )));
    }
    Ok(j)
}

/// Whether the integral ideal `E` is a partial trace ideal of itself.
///
/// Three equivalent conditions are checked: `R:E ⊆ k[t]`, `ℓ(R/E) = h(E)`,
/// and `E` is a reduction of `tr(E)`.
pub fn is_partial_trace(e: &RelativeIdeal) -> Result<bool> {
    if !e.is_integral() {
        return Err(Error::NotIntegral);
    }
    let dual = RelativeIdeal::unit(e.semigroup()).colon(e)?;
    let by_value = dual.value() >= 0;
    let by_colength = e.colength()? == h_invariant(e)?;
    let by_reduction = e.is_reduction(&e.trace())?;
    if by_value != by_colength || by_value != by_reduction {
        return Err(inconsistency(format!(
            "partial-trace tests disagree for {e} in {}: value {by_value}, \
             colength {by_colength}, reduction {by_reduction}",
            e.semigroup()
        )));
    }
    Ok(by_value)
}

/// `K(H) = {z : F - z ∉ H}`, the standard canonical ideal, `0 ∈ K ⊆ N`.
pub fn canonical_ideal(h: &Arc<NumericalSemigroup>) -> Result<RelativeIdeal> {
    require_proper(h)?;
    let f = h.frobenius();
    let gens: Vec<i64> = (0..=f + 1).filter(|&z| !h.contains(f - z)).collect();
    RelativeIdeal::from_generators(h, &gens)
}

pub fn h_omega(h: &Arc<NumericalSemigroup>) -> Result<u64> {
    h_invariant(&canonical_ideal(h)?)
}

pub fn trace_omega(h: &Arc<NumericalSemigroup>) -> Result<RelativeIdeal> {
    Ok(canonical_ideal(h)?.trace())
}

/// `m ⊆ tr(ω)`.
pub fn is_nearly_gorenstein(h: &Arc<NumericalSemigroup>) -> Result<bool> {
    RelativeIdeal::maximal(h).is_subset(&trace_omega(h)?)
}

/// `m K' = m b` where `K'` is the least integral shift of `K(H)` and
/// `(t^b)`, `b = v(K')`, its monomial minimal reduction.
pub fn is_almost_gorenstein(h: &Arc<NumericalSemigroup>) -> Result<bool> {
    let k = canonical_ideal(h)?;
    let (_, k_int) = integral_representative(&k)?;
    let m = RelativeIdeal::maximal(h);
    Ok(m.product(&k_int)? == m.shift(k_int.value())?)
}

/// `m² = t^e m`, cross-checked against `edim = e`.
pub fn has_minimal_multiplicity(h: &Arc<NumericalSemigroup>) -> Result<bool> {
    let m = RelativeIdeal::maximal(h);
    let by_square = m.product(&m)? == m.shift(h.multiplicity())?;
    let by_edim = h.embedding_dimension() as i64 == h.multiplicity();
    if by_square != by_edim {
        return Err(inconsistency(format!(
            "minimal multiplicity tests disagree for {h}"
        )));
    }
    Ok(by_square)
}

fn require_proper_ideal(e: &RelativeIdeal) -> Result<RelativeIdeal> {
    if !e.is_integral() {
        return Err(Error::NotIntegral);
    }
    if e.is_unit() {
        return Err(Error::UnitIdeal);
    }
    Ok(RelativeIdeal::maximal(e.semigroup()))
}

/// `(mE :_R m) = E`.
pub fn is_weakly_m_full(e: &RelativeIdeal) -> Result<bool> {
    let m = require_proper_ideal(e)?;
    Ok(m.product(e)?.colon_in_r(&m)? == *e)
}

/// `mE ≠ m(E :_R m)`.
pub fn is_burch(e: &RelativeIdeal) -> Result<bool> {
    let m = require_proper_ideal(e)?;
    Ok(m.product(e)? != m.product(&e.colon_in_r(&m)?)?)
}

fn serialize_semigroup<S: Serializer>(
    h: &Arc<NumericalSemigroup>,
    serializer: S,
) -> std::result::Result<S::Ok, S::Error> {
    h.minimal_generators().serialize(serializer)
}

/// Per-semigroup invariants. Construction via [`classify`] checks every
/// relation that holds between these fields unconditionally.
#[derive(Clone, Debug, Serialize)]
pub struct InvariantReport {
    #[serde(serialize_with = "serialize_semigroup")]
    pub semigroup: Arc<NumericalSemigroup>,
    #[serde(rename = "type")]
    pub type_: usize,
    pub multiplicity: i64,
    #[serde(rename = "edim")]
    pub embedding_dimension: usize,
    pub frobenius: i64,
    pub h_omega: u64,
    #[serde(rename = "gorenstein")]
    pub is_gorenstein: bool,
    #[serde(rename = "nearly_gorenstein")]
    pub is_nearly_gorenstein: bool,
    #[serde(rename = "almost_gorenstein")]
    pub is_almost_gorenstein: bool,
    #[serde(rename = "minimal_multiplicity")]
    pub has_minimal_multiplicity: bool,
    pub trace_omega: RelativeIdeal,
    pub bg_upper: Option<u64>,
}

/// Computes the [`InvariantReport`] of `H`. With `bg_bound = Some(b)` a
/// Gorenstein subsemigroup search of depth `b` supplies `bg_upper`.
pub fn classify(h: &Arc<NumericalSemigroup>, bg_bound: Option<u32>) -> Result<InvariantReport> {
    require_proper(h)?;
    let k = canonical_ideal(h)?;
    let h_omega = h_invariant(&k)?;
    let trace_omega = k.trace();
    let m = RelativeIdeal::maximal(h);
    let report = InvariantReport {
        semigroup: h.clone(),
        type_: h.cm_type(),
        multiplicity: h.multiplicity(),
        embedding_dimension: h.embedding_dimension(),
        frobenius: h.frobenius(),
        h_omega,
        is_gorenstein: h.is_symmetric()?,
        is_nearly_gorenstein: m.is_subset(&trace_omega)?,
        is_almost_gorenstein: is_almost_gorenstein(h)?,
        has_minimal_multiplicity: has_minimal_multiplicity(h)?,
        trace_omega,
        bg_upper: match bg_bound {
            Some(b) => bg_upper_bound(h, b)?.best_colength,
            None => None,
        },
    };
    report.check(&k)?;
    Ok(report)
}

impl InvariantReport {
    fn check(&self, k: &RelativeIdeal) -> Result<()> {
        let h = &self.semigroup;
        let fail = |what: &str| Err(inconsistency(format!("{h}: {what}")));
        if self.is_gorenstein != (self.h_omega == 0) {
            return fail("Gorenstein does not match h(ω) = 0");
        }
        if self.h_omega == 1 {
            return fail("h(ω) = 1");
        }
        if self.h_omega == 2 {
            let m = RelativeIdeal::maximal(h);
            if self.trace_omega != m {
                return fail("h(ω) = 2 but tr(ω) ≠ m");
            }
            if self.embedding_dimension != 1 + self.type_ {
                return fail("h(ω) = 2 but edim ≠ 1 + type");
            }
            let j = monomial_partial_trace(k)?;
            let m2 = m.product(&m)?;
            if j.colength()? != 2 || !m2.is_subset(&j)? || !j.is_subset(&m)? {
                return fail("h(ω) = 2 but the partial trace of ω is not between m² and m");
            }
        }
        if self.is_almost_gorenstein && !self.is_nearly_gorenstein {
            return fail("almost Gorenstein but not nearly Gorenstein");
        }
        if self.has_minimal_multiplicity && self.is_nearly_gorenstein != self.is_almost_gorenstein {
            return fail("minimal multiplicity but nearly ≠ almost Gorenstein");
        }
        if let Some(bg) = self.bg_upper {
            if self.h_omega > 2 * bg {
                return fail("h(ω) exceeds twice the Gorenstein subring colength");
            }
        }
        Ok(())
    }
}
