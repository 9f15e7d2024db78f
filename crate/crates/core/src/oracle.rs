//! Brute-force reference computations over explicitly sieved integer windows.
//!
//! Nothing here calls into [`crate::semigroup`], [`crate::ideal`] or
//! [`crate::invariants`]: membership in `H` is recomputed from the raw
//! generators, ideals are materialized as bit vectors, and every answer is
//! obtained by enumerating the window. The oracle is slow and is only meant to
//! certify the closed formulas in tests.
//!
//! A [`SieveTable`] is sized for a Frobenius number and a largest generator
//! magnitude `g`. Answers are exact on the nominal window `[-B, B]` with
//! `B = 2F + 2g + 4`; operands are materialized on `[-2B, 2B]`, which holds a
//! decomposition of every sum or colon witness that lands in the nominal
//! window. Every relative ideal contains all integers above `v + F`, which is
//! what makes the region beyond the window decidable.

use crate::error::{Error, Result};
use crate::semigroup::gcd;

/// Default limit on the number of cells a table may allocate.
pub const DEFAULT_WINDOW_CAP: u64 = 1_000_000;

/// A subset of `Z` known exactly on `[lower, upper]`, empty below `lower` and
/// full above `upper`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExplicitSet {
    lower: i64,
    upper: i64,
    bits: Vec<bool>,
}

impl ExplicitSet {
    pub fn lower(&self) -> i64 {
        self.lower
    }

    pub fn upper(&self) -> i64 {
        self.upper
    }

    pub fn contains(&self, x: i64) -> bool {
        if x < self.lower {
            false
        } else if x > self.upper {
            true
        } else {
            self.bits[(x - self.lower) as usize]
        }
    }

    /// Least element.
    pub fn least(&self) -> i64 {
        (self.lower..=self.upper)
            .find(|&x| self.contains(x))
            .unwrap_or(self.upper + 1)
    }

    /// Elements inside `[lo, hi]`.
    pub fn elements_in(&self, lo: i64, hi: i64) -> impl Iterator<Item = i64> + '_ {
        (lo..=hi).filter(move |&x| self.contains(x))
    }

    fn restricted(&self, lower: i64, upper: i64) -> ExplicitSet {
        ExplicitSet {
            lower,
            upper,
            bits: (lower..=upper).map(|x| self.contains(x)).collect(),
        }
    }
}

/// Membership of `H` sieved from raw generators, plus the window geometry.
#[derive(Clone, Debug)]
pub struct SieveTable {
    generators: Vec<i64>,
    frobenius: i64,
    max_abs_generator: i64,
    radius: i64,
    /// `H ∩ [0, 2 * outer]`
    semigroup: Vec<bool>,
    /// `|H ∩ [0, x]|`
    prefix: Vec<u32>,
}

fn sieve(gens: &[i64], top: usize) -> Vec<bool> {
    let mut s = vec![false; top + 1];
    s[0] = true;
    for x in 1..=top {
        s[x] = gens.iter().any(|&g| g as usize <= x && s[x - g as usize]);
    }
    s
}

impl SieveTable {
    /// Table for `H = <generators>` serving ideals whose generators have
    /// absolute value at most `max_abs_ideal_generator`.
    pub fn new(generators: &[i64], max_abs_ideal_generator: i64, cap: u64) -> Result<Self> {
        if generators.is_empty() {
            return Err(Error::EmptyGenerators);
        }
        if let Some(&bad) = generators.iter().find(|&&g| g <= 0) {
            return Err(Error::NonPositiveGenerator(bad));
        }
        let g = generators.iter().fold(0, |acc, &x| gcd(acc, x));
        if g != 1 {
            return Err(Error::GcdNotOne(g));
        }
        let min = *generators.iter().min().unwrap();
        let max = *generators.iter().max().unwrap();
        let needed_for_frobenius = (min as u64).saturating_mul(max as u64);
        if needed_for_frobenius > cap {
            return Err(Error::WindowTooSmall {
                needed: needed_for_frobenius,
                cap,
            });
        }
        let probe = sieve(generators, (min * max) as usize);
        let frobenius = probe.iter().rposition(|&b| !b).map_or(-1, |x| x as i64);

        let max_abs_generator = max_abs_ideal_generator.max(max);
        let radius = 2 * frobenius.max(0) + 2 * max_abs_generator + 4;
        let outer = 2 * radius;
        let needed = (4 * outer + 1) as u64;
        if needed > cap {
            return Err(Error::WindowTooSmall { needed, cap });
        }
        let semigroup = sieve(generators, 2 * outer as usize);
        let mut prefix = Vec::with_capacity(semigroup.len());
        let mut count = 0u32;
        for &b in &semigroup {
            count += b as u32;
            prefix.push(count);
        }
        Ok(SieveTable {
            generators: generators.to_vec(),
            frobenius,
            max_abs_generator,
            radius,
            semigroup,
            prefix,
        })
    }

    pub fn generators(&self) -> &[i64] {
        &self.generators
    }

    pub fn frobenius(&self) -> i64 {
        self.frobenius
    }

    /// `B`: answers are exact on `[-B, B]`.
    pub fn radius(&self) -> i64 {
        self.radius
    }

    fn outer(&self) -> i64 {
        2 * self.radius
    }

    pub fn in_semigroup(&self, x: i64) -> bool {
        if x < 0 {
            false
        } else if x as usize >= self.semigroup.len() {
            true
        } else {
            self.semigroup[x as usize]
        }
    }

    /// `|H ∩ [0, x]|`.
    fn count_up_to(&self, x: i64) -> i64 {
        if x < 0 {
            0
        } else if (x as usize) < self.prefix.len() {
            self.prefix[x as usize] as i64
        } else {
            *self.prefix.last().unwrap() as i64 + (x - self.prefix.len() as i64 + 1)
        }
    }

    /// `∪ (g + H)` on the operand window.
    pub fn materialize(&self, gens: &[i64]) -> Result<ExplicitSet> {
        if gens.is_empty() {
            return Err(Error::EmptyGenerators);
        }
        if let Some(&g) = gens.iter().find(|g| g.abs() > self.max_abs_generator) {
            let needed = 4 * (2 * (2 * self.frobenius.max(0) + 2 * g.abs() + 4)) + 1;
            return Err(Error::WindowTooSmall {
                needed: needed as u64,
                cap: (4 * self.outer() + 1) as u64,
            });
        }
        let outer = self.outer();
        Ok(ExplicitSet {
            lower: -outer,
            upper: outer,
            bits: (-outer..=outer)
                .map(|x| gens.iter().any(|&g| self.in_semigroup(x - g)))
                .collect(),
        })
    }

    /// `|H \ E|`, counted element by element.
    pub fn oracle_colength(&self, gens: &[i64]) -> Result<u64> {
        let e = self.materialize(gens)?;
        let outer = self.outer();
        if (-outer..=outer).any(|x| e.contains(x) && !self.in_semigroup(x)) {
            return Err(Error::NotIntegral);
        }
        Ok((0..=outer)
            .filter(|&x| self.in_semigroup(x) && !e.contains(x))
            .count() as u64)
    }

    /// `{z : z + E' ⊆ E}` on the nominal window.
    pub fn oracle_colon(&self, gens: &[i64], other: &[i64]) -> Result<ExplicitSet> {
        let e = self.materialize(gens)?;
        let e2 = self.materialize(other)?;
        let outer = self.outer();
        let members: Vec<i64> = e2.elements_in(-outer, outer).collect();
        let r = self.radius;
        Ok(ExplicitSet {
            lower: -r,
            upper: r,
            bits: (-r..=r)
                .map(|z| members.iter().all(|&y| e.contains(z + y)))
                .collect(),
        })
    }

    /// `(R : E) E` on the nominal window.
    pub fn oracle_trace(&self, gens: &[i64]) -> Result<ExplicitSet> {
        let e = self.materialize(gens)?;
        let outer = self.outer();
        let members: Vec<i64> = e.elements_in(-outer, outer).collect();
        let dual: Vec<i64> = (-outer..=outer)
            .filter(|&z| members.iter().all(|&y| self.in_semigroup(z + y)))
            .collect();
        let r = self.radius;
        let mut bits = vec![false; (2 * r + 1) as usize];
        for &a in &dual {
            for &y in &members {
                let s = a + y;
                if (-r..=r).contains(&s) {
                    bits[(s + r) as usize] = true;
                }
            }
        }
        Ok(ExplicitSet {
            lower: -r,
            upper: r,
            bits,
        })
    }

    /// `min { |H \ (E + c)| : E + c ⊆ H }` together with the least minimizing `c`.
    ///
    /// Every shift with `E + c ⊆ [0, ∞)` and `v(E) + c ≤ F + 1` is examined;
    /// beyond that `|H \ (E + c)|` only grows. Counting uses the identity
    /// `|H \ (E + c)| = |H ∩ [0, v + c + F + 1]| - |E ∩ [v, v + F + 1]|`
    /// for `E + c ⊆ H`.
    pub fn oracle_h(&self, gens: &[i64]) -> Result<(u64, i64)> {
        let e = self.materialize(gens)?;
        let outer = self.outer();
        let v = e.least();
        let f = self.frobenius.max(0);
        let top = v + f + 1;
        let members: Vec<i64> = e.elements_in(v, top).collect();
        let in_e = members.len() as i64;

        let mut best: Option<(i64, i64)> = None;
        for c in -v..=(-v + f + 1) {
            let colength = self.count_up_to(top + c) - in_e;
            if best.is_some_and(|(b, _)| colength >= b) {
                continue;
            }
            if members.iter().all(|&x| self.in_semigroup(x + c)) {
                best = Some((colength, c));
            }
        }
        let (colength, c) = best.expect("shift past the Frobenius number is integral");
        debug_assert!(top + c <= outer);
        Ok((colength as u64, c))
    }
}

fn table_for(semigroup: &[i64], ideals: &[&[i64]]) -> Result<SieveTable> {
    let max_abs = ideals
        .iter()
        .flat_map(|g| g.iter())
        .map(|g| g.abs())
        .max()
        .unwrap_or(0);
    SieveTable::new(semigroup, max_abs, DEFAULT_WINDOW_CAP)
}

pub fn oracle_colength(semigroup: &[i64], gens: &[i64]) -> Result<u64> {
    table_for(semigroup, &[gens])?.oracle_colength(gens)
}

pub fn oracle_colon(semigroup: &[i64], gens: &[i64], other: &[i64]) -> Result<ExplicitSet> {
    table_for(semigroup, &[gens, other])?.oracle_colon(gens, other)
}

pub fn oracle_trace(semigroup: &[i64], gens: &[i64]) -> Result<ExplicitSet> {
    table_for(semigroup, &[gens])?.oracle_trace(gens)
}

pub fn oracle_h(semigroup: &[i64], gens: &[i64]) -> Result<u64> {
    Ok(table_for(semigroup, &[gens])?.oracle_h(gens)?.0)
}

/// Explicit set of `E` on the nominal window, for comparisons.
pub fn oracle_ideal(semigroup: &[i64], gens: &[i64]) -> Result<ExplicitSet> {
    let t = table_for(semigroup, &[gens])?;
    let e = t.materialize(gens)?;
    Ok(e.restricted(-t.radius, t.radius))
}
