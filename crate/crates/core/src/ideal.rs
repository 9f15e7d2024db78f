//! Relative ideals of a numerical semigroup: sets `E ⊆ Z` with `E + H ⊆ E`,
//! bounded below. They are exactly the monomial fractional ideals of `k[H]`.
//!
//! An ideal is stored by its Apéry vector with respect to the multiplicity `m`
//! of `H` (entry `r` is the least element of `E` congruent to `r` mod `m`), from
//! which the unique minimal generating set is derived. Every operation below is
//! an exact residue-wise formula on these vectors.

use std::fmt;
use std::sync::Arc;

use serde::{Serialize, Serializer};

use crate::error::{inconsistency, Error, Result};
use crate::semigroup::NumericalSemigroup;

/// Generators are kept below this magnitude so that sums of a few of them
/// cannot overflow.
pub const GENERATOR_LIMIT: i64 = 1 << 40;

#[derive(Clone, Debug)]
pub struct RelativeIdeal {
    semigroup: Arc<NumericalSemigroup>,
    apery: Vec<i64>,
    min_gens: Vec<i64>,
}

fn check_magnitude(x: i64) -> Result<i64> {
    if x.abs() < GENERATOR_LIMIT {
        Ok(x)
    } else {
        Err(Error::Overflow)
    }
}

impl RelativeIdeal {
    /// The ideal generated by `gens`, reduced to its minimal generators.
    pub fn from_generators(semigroup: &Arc<NumericalSemigroup>, gens: &[i64]) -> Result<Self> {
        if gens.is_empty() {
            return Err(Error::EmptyGenerators);
        }
        for &g in gens {
            check_magnitude(g)?;
        }
        let h = semigroup.as_ref();
        let m = h.multiplicity();
        let apery = (0..m)
            .map(|r| {
                gens.iter()
                    .map(|&g| g + h.apery()[(r - g).rem_euclid(m) as usize])
                    .min()
                    .unwrap()
            })
            .collect();
        Ok(Self::from_apery(semigroup.clone(), apery))
    }

    /// The ring itself, `[0]`.
    pub fn unit(semigroup: &Arc<NumericalSemigroup>) -> Self {
        Self::from_apery(semigroup.clone(), semigroup.apery().to_vec())
    }

    /// The maximal ideal, generated by the minimal generators of `H`.
    pub fn maximal(semigroup: &Arc<NumericalSemigroup>) -> Self {
        Self::from_generators(semigroup, semigroup.minimal_generators())
            .expect("minimal generators are a valid generating set")
    }

    fn from_apery(semigroup: Arc<NumericalSemigroup>, apery: Vec<i64>) -> Self {
        let m = semigroup.multiplicity();
        let holds = |x: i64| x >= apery[x.rem_euclid(m) as usize];
        let mut min_gens: Vec<i64> = apery
            .iter()
            .copied()
            .filter(|&w| {
                semigroup
                    .minimal_generators()
                    .iter()
                    .all(|&a| !holds(w - a))
            })
            .collect();
        min_gens.sort_unstable();
        RelativeIdeal {
            semigroup,
            apery,
            min_gens,
        }
    }

    fn derive(&self, apery: Vec<i64>) -> Self {
        Self::from_apery(self.semigroup.clone(), apery)
    }

    fn same_ring(&self, other: &Self) -> Result<()> {
        if self.semigroup.same_as(&other.semigroup) {
            Ok(())
        } else {
            Err(Error::MixedSemigroups)
        }
    }

    fn require_integral(&self) -> Result<()> {
        if self.is_integral() {
            Ok(())
        } else {
            Err(Error::NotIntegral)
        }
    }

    #[inline]
    fn residue(&self, x: i64) -> usize {
        self.semigroup.residue(x)
    }

    pub fn semigroup(&self) -> &Arc<NumericalSemigroup> {
        &self.semigroup
    }

    pub fn min_gens(&self) -> &[i64] {
        &self.min_gens
    }

    /// Least element of the ideal by residue class modulo the multiplicity.
    pub fn apery(&self) -> &[i64] {
        &self.apery
    }

    /// `v(E)`, the least element.
    pub fn value(&self) -> i64 {
        self.min_gens[0]
    }

    pub fn max_gen(&self) -> i64 {
        *self.min_gens.last().unwrap()
    }

    /// Number of minimal generators, `μ(E)`.
    pub fn num_generators(&self) -> usize {
        self.min_gens.len()
    }

    #[inline]
    pub fn contains(&self, x: i64) -> bool {
        x >= self.apery[self.residue(x)]
    }

    /// `E ⊆ H`.
    pub fn is_integral(&self) -> bool {
        self.apery
            .iter()
            .zip(self.semigroup.apery())
            .all(|(e, h)| e >= h)
    }

    pub fn is_unit(&self) -> bool {
        self.min_gens == [0]
    }

    pub fn is_subset(&self, other: &Self) -> Result<bool> {
        self.same_ring(other)?;
        Ok(self.apery.iter().zip(&other.apery).all(|(a, b)| a >= b))
    }

    pub fn equals(&self, other: &Self) -> Result<bool> {
        self.same_ring(other)?;
        Ok(self.min_gens == other.min_gens)
    }

    pub fn sum(&self, other: &Self) -> Result<Self> {
        self.same_ring(other)?;
        Ok(self.derive(
            self.apery
                .iter()
                .zip(&other.apery)
                .map(|(&a, &b)| a.min(b))
                .collect(),
        ))
    }

    pub fn intersection(&self, other: &Self) -> Result<Self> {
        self.same_ring(other)?;
        Ok(self.derive(
            self.apery
                .iter()
                .zip(&other.apery)
                .map(|(&a, &b)| a.max(b))
                .collect(),
        ))
    }

    /// `E + E'`, the product of the corresponding monomial ideals.
    pub fn product(&self, other: &Self) -> Result<Self> {
        self.same_ring(other)?;
        let m = self.semigroup.multiplicity();
        let apery = (0..m)
            .map(|r| {
                self.min_gens
                    .iter()
                    .map(|&g| g + other.apery[(r - g).rem_euclid(m) as usize])
                    .min()
                    .unwrap()
            })
            .collect();
        Ok(self.derive(apery))
    }

    /// `E^n`, with `E^0 = R`.
    pub fn power(&self, n: u32) -> Self {
        let mut acc = Self::unit(&self.semigroup);
        for _ in 0..n {
            acc = acc.product(self).expect("same ring");
        }
        acc
    }

    /// `E + c`, i.e. multiplication by `t^c`.
    pub fn shift(&self, c: i64) -> Result<Self> {
        check_magnitude(c)?;
        check_magnitude(self.max_gen() + c)?;
        check_magnitude(self.value() + c)?;
        let m = self.semigroup.multiplicity();
        let mut apery = vec![0; m as usize];
        for (r, &w) in self.apery.iter().enumerate() {
            apery[(r as i64 + c).rem_euclid(m) as usize] = w + c;
        }
        Ok(self.derive(apery))
    }

    /// `E : E' = {z : z + E' ⊆ E}`.
    pub fn colon(&self, other: &Self) -> Result<Self> {
        self.same_ring(other)?;
        let m = self.semigroup.multiplicity();
        // z + g' ∈ E for each generator g' of E', residue by residue
        let apery = (0..m)
            .map(|r| {
                other
                    .min_gens
                    .iter()
                    .map(|&g| self.apery[(r + g).rem_euclid(m) as usize] - g)
                    .max()
                    .unwrap()
            })
            .collect();
        Ok(self.derive(apery))
    }

    /// `E :_R E' = (E : E') ∩ R`, for integral `E`.
    pub fn colon_in_r(&self, other: &Self) -> Result<Self> {
        self.require_integral()?;
        self.colon(other)?
            .intersection(&Self::unit(&self.semigroup))
    }

    /// `ℓ(R/E) = |H \ E|` for integral `E`.
    pub fn colength(&self) -> Result<u64> {
        self.require_integral()?;
        let m = self.semigroup.multiplicity();
        Ok(self
            .apery
            .iter()
            .zip(self.semigroup.apery())
            .map(|(e, h)| ((e - h) / m) as u64)
            .sum())
    }

    /// `tr(E) = (R : E) E`.
    pub fn trace(&self) -> Self {
        let unit = Self::unit(&self.semigroup);
        unit.colon(self)
            .and_then(|dual| dual.product(self))
            .expect("same ring")
    }

    /// `R : E = E : E`, cross-checked against `E = (R : E) E`.
    pub fn is_trace_ideal(&self) -> Result<bool> {
        self.require_integral()?;
        let unit = Self::unit(&self.semigroup);
        let by_colon = unit.colon(self)? == self.colon(self)?;
        let by_trace = *self == self.trace();
        if by_colon != by_trace {
            return Err(inconsistency(format!(
                "trace-ideal tests disagree for {self} in {}",
                self.semigroup
            )));
        }
        Ok(by_colon)
    }

    /// `{x ∈ H : x ≥ v(E)}`, the integral closure of an integral ideal.
    pub fn integral_closure(&self) -> Result<Self> {
        self.require_integral()?;
        let m = self.semigroup.multiplicity();
        let v = self.value();
        let apery = self
            .semigroup
            .apery()
            .iter()
            .enumerate()
            .map(|(r, &w)| w.max(v + (r as i64 - v).rem_euclid(m)))
            .collect();
        Ok(self.derive(apery))
    }

    /// Whether `self ⊆ other` is a reduction of `other`.
    ///
    /// Decided twice: by `other ⊆ closure(self)`, and by searching for `n` with
    /// `other^(n+1) = self · other^n`. The two must agree.
    pub fn is_reduction(&self, other: &Self) -> Result<bool> {
        self.same_ring(other)?;
        self.require_integral()?;
        other.require_integral()?;
        if !self.is_subset(other)? {
            return Err(Error::NotNested);
        }
        let by_closure = other.is_subset(&self.integral_closure()?)?;

        let bound = self.semigroup.genus() as u32 + 2;
        let v = other.value();
        let mut by_powers = false;
        let mut pow = Self::unit(&self.semigroup);
        for _ in 0..=bound {
            let next = pow.product(other)?;
            if next == self.product(&pow)? {
                by_powers = true;
                break;
            }
            // once other^(n+1) = other^n + v the comparison repeats verbatim
            if next == pow.shift(v)? {
                break;
            }
            pow = next;
        }

        if by_closure != by_powers {
            return Err(inconsistency(format!(
                "reduction tests disagree for {self} ⊆ {other} in {}",
                self.semigroup
            )));
        }
        Ok(by_closure)
    }

    /// `dim_k ((E :_R m) / E)`; zero for `E = R`.
    pub fn socle_dimension(&self) -> Result<u64> {
        self.require_integral()?;
        if self.is_unit() {
            return Ok(0);
        }
        let maximal = Self::maximal(&self.semigroup);
        let socle = self.colon_in_r(&maximal)?;
        let m = self.semigroup.multiplicity();
        Ok(self
            .apery
            .iter()
            .zip(&socle.apery)
            .map(|(e, s)| ((e - s) / m) as u64)
            .sum())
    }

    /// `R/E` is Gorenstein, i.e. has a one-dimensional socle.
    pub fn is_quotient_gorenstein(&self) -> Result<bool> {
        Ok(self.socle_dimension()? == 1)
    }
}

impl PartialEq for RelativeIdeal {
    fn eq(&self, other: &Self) -> bool {
        self.semigroup.same_as(&other.semigroup) && self.min_gens == other.min_gens
    }
}

impl Eq for RelativeIdeal {}

impl fmt::Display for RelativeIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.min_gens)
    }
}

impl Serialize for RelativeIdeal {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        self.min_gens.serialize(serializer)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ring(gens: &[i64]) -> Arc<NumericalSemigroup> {
        Arc::new(NumericalSemigroup::build(gens).unwrap())
    }

    fn ideal(h: &Arc<NumericalSemigroup>, gens: &[i64]) -> RelativeIdeal {
        RelativeIdeal::from_generators(h, gens).unwrap()
    }

    #[test]
    fn minimal_generators() {
        let h = ring(&[3, 4, 5]);
        assert_eq!(ideal(&h, &[3, 4, 6]).min_gens(), &[3, 4]);
        assert_eq!(ideal(&h, &[0]).min_gens(), &[0]);
        assert_eq!(ideal(&h, &[-1, 0, 1, 2]).min_gens(), &[-1, 0, 1]);
        assert_eq!(
            RelativeIdeal::from_generators(&h, &[]).unwrap_err(),
            Error::EmptyGenerators
        );
    }

    #[test]
    fn membership_and_order() {
        let h = ring(&[3, 4, 5]);
        let e = ideal(&h, &[4, 5]);
        assert_eq!(e.value(), 4);
        assert!(!e.contains(6));
        assert!(e.contains(7) && e.contains(8) && !e.contains(3));
        assert!(ideal(&h, &[3, 4]).is_subset(&ideal(&h, &[0])).unwrap());
        let other = ring(&[2, 3]);
        assert_eq!(
            e.is_subset(&ideal(&other, &[0])).unwrap_err(),
            Error::MixedSemigroups
        );
    }

    #[test]
    fn sum_product_shift() {
        let h = ring(&[3, 4, 5]);
        let m = RelativeIdeal::maximal(&h);
        assert_eq!(m.product(&m).unwrap().min_gens(), &[6, 7, 8]);
        assert_eq!(ideal(&h, &[4, 5]).shift(-1).unwrap().min_gens(), &[3, 4]);
        assert_eq!(
            ideal(&h, &[3]).sum(&ideal(&h, &[4])).unwrap().min_gens(),
            &[3, 4]
        );
    }

    #[test]
    fn colons() {
        let h = ring(&[3, 4, 5]);
        let r = RelativeIdeal::unit(&h);
        let big_m = ideal(&h, &[4, 5]);
        let dual = r.colon(&big_m).unwrap();
        assert_eq!(dual.min_gens(), &[-1, 0, 1]);
        assert_eq!(r.colon(&r).unwrap().min_gens(), &[0]);
        let i = ideal(&h, &[3, 4]);
        // {0, 3, 4, 5, ...} qualifies, which is H itself
        assert_eq!(i.colon(&i).unwrap().min_gens(), &[0]);

        let m = RelativeIdeal::maximal(&h);
        let m2 = m.product(&m).unwrap();
        assert_eq!(m2.colon_in_r(&m).unwrap(), m);
        assert_eq!(r.colon_in_r(&r).unwrap().min_gens(), &[0]);
        // (t^4, t^5) :_R m gains the socle monomial t^6
        assert_eq!(big_m.colon_in_r(&m).unwrap().min_gens(), &[4, 5, 6]);
        assert_eq!(dual.colon_in_r(&m).unwrap_err(), Error::NotIntegral);
    }

    #[test]
    fn colengths() {
        let h = ring(&[3, 4, 5]);
        assert_eq!(ideal(&h, &[4, 5]).colength().unwrap(), 3);
        assert_eq!(ideal(&h, &[0]).colength().unwrap(), 0);
        assert_eq!(ideal(&h, &[3, 4]).colength().unwrap(), 2);
        assert_eq!(ideal(&h, &[1]).colength().unwrap_err(), Error::NotIntegral);
    }

    #[test]
    fn traces() {
        let h = ring(&[3, 4, 5]);
        let m = RelativeIdeal::maximal(&h);
        assert_eq!(ideal(&h, &[4, 5]).trace(), m);
        assert_eq!(ideal(&h, &[0]).trace().min_gens(), &[0]);
        assert_eq!(ideal(&h, &[3, 4]).trace(), m);
        assert!(m.is_trace_ideal().unwrap());
        assert!(!ideal(&h, &[3, 4]).is_trace_ideal().unwrap());
        assert!(ideal(&h, &[0]).is_trace_ideal().unwrap());
    }

    #[test]
    fn closure_and_reduction() {
        let h = ring(&[3, 4, 5]);
        let m = RelativeIdeal::maximal(&h);
        assert_eq!(
            ideal(&h, &[4, 5]).integral_closure().unwrap().min_gens(),
            &[4, 5, 6]
        );
        assert!(ideal(&h, &[3]).is_reduction(&m).unwrap());
        assert!(!ideal(&h, &[4]).is_reduction(&m).unwrap());
        assert_eq!(
            m.is_reduction(&ideal(&h, &[4])).unwrap_err(),
            Error::NotNested
        );
    }

    #[test]
    fn socles() {
        let h = ring(&[3, 4, 5]);
        let i = ideal(&h, &[3, 4]);
        assert_eq!(i.socle_dimension().unwrap(), 1);
        assert!(i.is_quotient_gorenstein().unwrap());
        let r = ideal(&h, &[0]);
        assert_eq!(r.socle_dimension().unwrap(), 0);
        assert!(!r.is_quotient_gorenstein().unwrap());
        let m = RelativeIdeal::maximal(&h);
        assert_eq!(m.socle_dimension().unwrap(), 1);
        assert!(m.is_quotient_gorenstein().unwrap());
        // R/(t^4, t^5) has basis 1, t^3, t^6 and socle t^6
        assert_eq!(ideal(&h, &[4, 5]).socle_dimension().unwrap(), 1);
    }

    #[test]
    fn over_the_full_semigroup() {
        let h = ring(&[1]);
        let e = ideal(&h, &[3, 5]);
        assert_eq!(e.min_gens(), &[3]);
        assert_eq!(e.colength().unwrap(), 3);
        assert_eq!(RelativeIdeal::unit(&h).colon(&e).unwrap().min_gens(), &[-3]);
    }
}
