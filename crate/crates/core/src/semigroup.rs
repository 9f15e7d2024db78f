//! Numerical semigroups `H = <a_1, ..., a_l>` with `gcd = 1`.
//!
//! Membership is sieved once on construction and compacted to the Apéry set
//! with respect to the multiplicity, after which `contains` is a table lookup.

use std::fmt;
use std::hash::{Hash, Hasher};

use crate::error::{inconsistency, Error, Result};

/// Largest membership sieve `build` will allocate.
pub const SIEVE_CAP: u64 = 1 << 28;

#[derive(Clone, Debug)]
pub struct NumericalSemigroup {
    generators: Vec<i64>,
    minimal_generators: Vec<i64>,
    frobenius: i64,
    gaps: Vec<i64>,
    apery: Vec<i64>,
    pseudo_frobenius: Vec<i64>,
}

pub(crate) fn gcd(mut a: i64, mut b: i64) -> i64 {
    a = a.abs();
    b = b.abs();
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a
}

impl NumericalSemigroup {
    /// Builds the semigroup generated by `generators`.
    ///
    /// Duplicates are dropped and the minimal generating set is recomputed.
    pub fn build(generators: &[i64]) -> Result<Self> {
        if generators.is_empty() {
            return Err(Error::EmptyGenerators);
        }
        if let Some(&bad) = generators.iter().find(|&&g| g <= 0) {
            return Err(Error::NonPositiveGenerator(bad));
        }
        let mut gens = generators.to_vec();
        gens.sort_unstable();
        gens.dedup();

        let g = gens.iter().fold(0, |acc, &x| gcd(acc, x));
        if g != 1 {
            return Err(Error::GcdNotOne(g));
        }

        let a1 = gens[0];
        let amax = *gens.last().unwrap();
        // a_1 * a_max bounds the Frobenius number from above.
        let bound = a1
            .checked_mul(amax)
            .and_then(|p| p.checked_add(amax.checked_mul(2)?))
            .ok_or(Error::Overflow)?;
        if bound as u64 >= SIEVE_CAP {
            return Err(Error::SieveTooLarge(bound as u64 + 1));
        }
        let len = bound as usize + 1;
        let mut sieve = vec![false; len];
        sieve[0] = true;
        for x in 1..len {
            sieve[x] = gens
                .iter()
                .any(|&g| g as usize <= x && sieve[x - g as usize]);
        }

        Self::from_sieve(gens, &sieve)
    }

    /// Finishes construction from a membership table in which every index at
    /// or past the end belongs to `H` and the end lies beyond `F + m`.
    fn from_sieve(generators: Vec<i64>, sieve: &[bool]) -> Result<Self> {
        let len = sieve.len();
        let frobenius = sieve.iter().rposition(|&b| !b).map_or(-1, |x| x as i64);
        let genus = sieve.iter().filter(|&&b| !b).count();

        let m = (1..len)
            .find(|&x| sieve[x])
            .ok_or_else(|| inconsistency("membership table has no positive element"))?;
        if frobenius + m as i64 >= len as i64 {
            return Err(inconsistency("membership table ends before F + m"));
        }
        let mut apery = vec![i64::MAX; m];
        let mut missing = m;
        for x in 0..len {
            if sieve[x] && apery[x % m] == i64::MAX {
                apery[x % m] = x as i64;
                missing -= 1;
                if missing == 0 {
                    break;
                }
            }
        }
        if missing != 0 {
            return Err(inconsistency(
                "membership table did not cover every residue",
            ));
        }
        let h = Self::from_apery(generators, apery)?;
        if h.frobenius != frobenius || h.gaps.len() != genus {
            return Err(inconsistency(
                "Apéry set disagrees with the membership table",
            ));
        }
        Ok(h)
    }

    /// Finishes construction from the Apéry set with respect to the multiplicity
    /// `m = apery.len()`, where `apery[0] = 0`.
    fn from_apery(generators: Vec<i64>, apery: Vec<i64>) -> Result<Self> {
        let m = apery.len();
        let frobenius = apery.iter().max().copied().unwrap_or(0) - m as i64;
        let in_h = |x: i64| x >= 0 && x >= apery[x as usize % m];
        let gaps: Vec<i64> = (1..=frobenius).filter(|&x| !in_h(x)).collect();

        // w in Ap(H, m) is a minimal generator iff it is not w' + h for another
        // nonzero w' in the Apéry set
        let mut minimal_generators: Vec<i64> = apery
            .iter()
            .copied()
            .filter(|&w| w != 0)
            .filter(|&w| !apery.iter().any(|&u| u != 0 && u != w && in_h(w - u)))
            .collect();
        minimal_generators.push(m as i64);
        minimal_generators.sort_unstable();

        let mut h = NumericalSemigroup {
            generators,
            minimal_generators,
            frobenius,
            gaps,
            apery,
            pseudo_frobenius: Vec::new(),
        };
        h.pseudo_frobenius = h
            .gaps
            .iter()
            .copied()
            .filter(|&x| h.minimal_generators.iter().all(|&g| h.contains(x + g)))
            .collect();
        if !h.is_full() && h.pseudo_frobenius.last() != Some(&h.frobenius) {
            return Err(inconsistency("Frobenius number is not pseudo-Frobenius"));
        }
        Ok(h)
    }

    /// `H \ {g}` for a minimal generator `g`; `None` if `g` is not one.
    pub fn remove_minimal_generator(&self, g: i64) -> Option<Self> {
        if !self.minimal_generators.contains(&g) {
            return None;
        }
        let child = if g == self.multiplicity() {
            let len = (self.frobenius.max(g) + 2 * g + 2) as usize;
            let sieve: Vec<bool> = (0..len as i64)
                .map(|x| x != g && self.contains(x))
                .collect();
            Self::from_sieve(Vec::new(), &sieve)
        } else {
            // g is the Apéry element of its residue; the next one up is g + m
            let mut apery = self.apery.clone();
            apery[self.residue(g)] = g + self.multiplicity();
            Self::from_apery(Vec::new(), apery)
        }
        .expect("removing a minimal generator leaves a numerical semigroup");
        Some(NumericalSemigroup {
            generators: child.minimal_generators.clone(),
            ..child
        })
    }

    /// `x ∈ H`, decided against the Apéry set.
    #[inline]
    pub fn contains(&self, x: i64) -> bool {
        x >= 0 && x >= self.apery[self.residue(x)]
    }

    #[inline]
    pub(crate) fn residue(&self, x: i64) -> usize {
        x.rem_euclid(self.multiplicity()) as usize
    }

    /// The generators as given, sorted and deduplicated.
    pub fn generators(&self) -> &[i64] {
        &self.generators
    }

    pub fn minimal_generators(&self) -> &[i64] {
        &self.minimal_generators
    }

    pub fn multiplicity(&self) -> i64 {
        self.minimal_generators[0]
    }

    pub fn embedding_dimension(&self) -> usize {
        self.minimal_generators.len()
    }

    /// Largest gap, or `-1` for `H = N`.
    pub fn frobenius(&self) -> i64 {
        self.frobenius
    }

    pub fn gaps(&self) -> &[i64] {
        &self.gaps
    }

    pub fn genus(&self) -> usize {
        self.gaps.len()
    }

    /// Entry `r` is the least element of `H` congruent to `r` modulo the multiplicity.
    pub fn apery(&self) -> &[i64] {
        &self.apery
    }

    pub fn is_full(&self) -> bool {
        self.frobenius < 0
    }

    /// Gaps `x` with `x + h ∈ H` for every nonzero `h ∈ H`.
    pub fn pseudo_frobenius(&self) -> Result<&[i64]> {
        if self.is_full() {
            return Err(Error::FullSemigroup);
        }
        Ok(&self.pseudo_frobenius)
    }

    /// Cohen-Macaulay type `|PF(H)|`; the regular ring `k[t]` has type 1.
    pub fn cm_type(&self) -> usize {
        if self.is_full() {
            1
        } else {
            self.pseudo_frobenius.len()
        }
    }

    /// `|gaps| = (F + 1) / 2`. Cross-checked against `type = 1`.
    pub fn is_symmetric(&self) -> Result<bool> {
        if self.is_full() {
            return Err(Error::FullSemigroup);
        }
        let symmetric = 2 * self.gaps.len() as i64 == self.frobenius + 1;
        if symmetric != (self.pseudo_frobenius.len() == 1) {
            return Err(inconsistency(format!(
                "{self}: symmetry {symmetric} disagrees with type {}",
                self.pseudo_frobenius.len()
            )));
        }
        Ok(symmetric)
    }

    pub(crate) fn same_as(&self, other: &Self) -> bool {
        std::ptr::eq(self, other) || self.minimal_generators == other.minimal_generators
    }
}

impl PartialEq for NumericalSemigroup {
    fn eq(&self, other: &Self) -> bool {
        self.minimal_generators == other.minimal_generators
    }
}

impl Eq for NumericalSemigroup {}

impl Hash for NumericalSemigroup {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.minimal_generators.hash(state);
    }
}

impl fmt::Display for NumericalSemigroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("⟨")?;
        for (i, g) in self.minimal_generators.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{g}")?;
        }
        f.write_str("⟩")
    }
}
