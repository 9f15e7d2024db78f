//! Herzog's structure matrix for non-symmetric `H = <a_1, a_2, a_3>`.
//!
//! The defining ideal of `k[H]` is generated by the 2×2 minors of
//!
//! ```text
//! | X^α   Y^β   Z^γ  |
//! | Y^β'  Z^γ'  X^α' |
//! ```
//!
//! with `c_1 a_1 = β' a_2 + γ a_3`, `c_2 a_2 = α a_1 + γ' a_3` and
//! `c_3 a_3 = α' a_1 + β a_2`, where `c_i` is the least positive multiple of
//! `a_i` in the semigroup generated by the other two.

use std::sync::Arc;

use serde::Serialize;

use crate::error::{inconsistency, Error, Result};
use crate::ideal::RelativeIdeal;
use crate::semigroup::NumericalSemigroup;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct HerzogData {
    /// `(a_1, a_2, a_3)` after normalization.
    pub ordering: [i64; 3],
    pub alpha: i64,
    pub beta: i64,
    pub gamma: i64,
    pub alpha_p: i64,
    pub beta_p: i64,
    pub gamma_p: i64,
    pub c1: i64,
    pub c2: i64,
    pub c3: i64,
    pub d1: i64,
    pub d2: i64,
    pub d3: i64,
    pub m_deg: i64,
    pub n_deg: i64,
}

/// `x ∈ <p, q>`.
fn in_two_generated(x: i64, p: i64, q: i64) -> bool {
    (0..=x / p).any(|i| (x - i * p) % q == 0)
}

/// Least `k > 0` with `k a ∈ <p, q>`. Bounded by `q` since `q a ∈ <q>`.
fn least_multiple(a: i64, p: i64, q: i64) -> i64 {
    (1..=q)
        .find(|&k| in_two_generated(k * a, p, q))
        .expect("q * a lies in <p, q>")
}

/// The unique `(x, y)` with `x, y > 0`, `x < x_bound` and `target = x p + y q`.
fn positive_representation(target: i64, p: i64, q: i64, x_bound: i64) -> Result<(i64, i64)> {
    let mut found = None;
    for x in 1..x_bound {
        let rest = target - x * p;
        if rest <= 0 {
            break;
        }
        if rest % q == 0 {
            if found.is_some() {
                return Err(Error::AmbiguousRepresentation(target));
            }
            found = Some((x, rest / q));
        }
    }
    found.ok_or_else(|| {
        inconsistency(format!(
            "{target} has no positive representation by {p}, {q}"
        ))
    })
}

impl HerzogData {
    /// Reads the matrix off the given ordering of the three generators.
    pub fn for_ordering(a: [i64; 3]) -> Result<Self> {
        let [a1, a2, a3] = a;
        let c1 = least_multiple(a1, a2, a3);
        let c2 = least_multiple(a2, a1, a3);
        let c3 = least_multiple(a3, a1, a2);
        let (beta_p, gamma) = positive_representation(c1 * a1, a2, a3, c2)?;
        let (alpha, gamma_p) = positive_representation(c2 * a2, a1, a3, c1)?;
        let (alpha_p, beta) = positive_representation(c3 * a3, a1, a2, c1)?;

        let data = HerzogData {
            ordering: a,
            alpha,
            beta,
            gamma,
            alpha_p,
            beta_p,
            gamma_p,
            c1,
            c2,
            c3,
            d1: a3 * c3,
            d2: a1 * c1,
            d3: a2 * c2,
            m_deg: a1 * alpha + a3 * c3,
            n_deg: a1 * alpha_p + a2 * c2,
        };
        data.check()?;
        Ok(data)
    }

    fn check(&self) -> Result<()> {
        let [a1, a2, a3] = self.ordering;
        let fail = |what: &str| {
            Err(inconsistency(format!(
                "matrix of {:?}: {what}",
                self.ordering
            )))
        };
        if self.c1 != self.alpha + self.alpha_p
            || self.c2 != self.beta + self.beta_p
            || self.c3 != self.gamma + self.gamma_p
        {
            return fail("c_i is not the sum of its row exponents");
        }
        let m = [
            a1 * self.alpha + self.d1,
            a2 * self.beta + self.d2,
            a3 * self.gamma + self.d3,
        ];
        let n = [
            a1 * self.alpha_p + self.d3,
            a2 * self.beta_p + self.d1,
            a3 * self.gamma_p + self.d2,
        ];
        if m.iter().any(|&x| x != self.m_deg) || n.iter().any(|&x| x != self.n_deg) {
            return fail("resolution shifts disagree");
        }
        Ok(())
    }

    /// `a_1α, a_2β, a_3γ, a_2β', a_3γ', a_1α'`: the degrees of the matrix entries.
    pub fn entry_degrees(&self) -> [i64; 6] {
        let [a1, a2, a3] = self.ordering;
        [
            a1 * self.alpha,
            a2 * self.beta,
            a3 * self.gamma,
            a2 * self.beta_p,
            a3 * self.gamma_p,
            a1 * self.alpha_p,
        ]
    }

    /// `αβ'(γ + γ')`.
    pub fn h_omega(&self) -> i64 {
        self.alpha * self.beta_p * (self.gamma + self.gamma_p)
    }
}

const ORDERINGS: [[usize; 3]; 6] = [
    [0, 1, 2],
    [0, 2, 1],
    [1, 0, 2],
    [1, 2, 0],
    [2, 0, 1],
    [2, 1, 0],
];

/// The structure matrix in an ordering where `a_1α` is the least entry degree.
///
/// Every ordering of the generators is tried; the first whose `a_1α` attains
/// the minimum of its six entry degrees is returned.
pub fn structure_matrix(h: &NumericalSemigroup) -> Result<HerzogData> {
    let gens = h.minimal_generators();
    if gens.len() != 3 {
        return Err(Error::NotThreeGenerated);
    }
    if h.is_symmetric()? {
        return Err(Error::SymmetricSemigroup);
    }
    let pf = h.pseudo_frobenius()?;
    if pf.len() != 2 {
        return Err(inconsistency(format!(
            "{h} is 3-generated of type {}",
            pf.len()
        )));
    }
    let pf_gap = pf[1] - pf[0];

    for idx in ORDERINGS {
        let data = HerzogData::for_ordering([gens[idx[0]], gens[idx[1]], gens[idx[2]]])?;
        if (data.n_deg - data.m_deg).abs() != pf_gap {
            return Err(inconsistency(format!(
                "{h}: |n - m| = {} but f2 - f1 = {pf_gap}",
                (data.n_deg - data.m_deg).abs()
            )));
        }
        let degrees = data.entry_degrees();
        if degrees[0] == *degrees.iter().min().unwrap() {
            return Ok(data);
        }
    }
    Err(inconsistency(format!("{h}: no ordering puts a_1α first")))
}

/// `h(ω_R) = αβ'(γ + γ')` from the normalized structure matrix.
pub fn h_omega_formula(h: &NumericalSemigroup) -> Result<u64> {
    Ok(structure_matrix(h)?.h_omega() as u64)
}

/// The canonical ideals `(t^{a_1α}, t^{a_2β'})`, `(t^{a_2β}, t^{a_3γ'})` and
/// `(t^{a_3γ}, t^{a_1α'})`.
pub fn canonical_pairs(h: &Arc<NumericalSemigroup>) -> Result<[RelativeIdeal; 3]> {
    let d = structure_matrix(h)?;
    let e = d.entry_degrees();
    Ok([
        RelativeIdeal::from_generators(h, &[e[0], e[3]])?,
        RelativeIdeal::from_generators(h, &[e[1], e[4]])?,
        RelativeIdeal::from_generators(h, &[e[2], e[5]])?,
    ])
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::invariants::{canonical_ideal, h_omega};

    fn ring(gens: &[i64]) -> Arc<NumericalSemigroup> {
        Arc::new(NumericalSemigroup::build(gens).unwrap())
    }

    fn exponents(d: &HerzogData) -> [i64; 6] {
        [d.alpha, d.beta, d.gamma, d.alpha_p, d.beta_p, d.gamma_p]
    }

    #[test]
    fn three_four_five() {
        let d = structure_matrix(&ring(&[3, 4, 5])).unwrap();
        assert_eq!(d.ordering, [3, 4, 5]);
        assert_eq!(exponents(&d), [1, 1, 1, 2, 1, 1]);
        assert_eq!((d.c1, d.c2, d.c3), (3, 2, 2));
        assert_eq!(d.entry_degrees(), [3, 4, 5, 4, 5, 6]);
        assert_eq!(d.h_omega(), 2);
    }

    #[test]
    fn three_five_seven() {
        let d = structure_matrix(&ring(&[3, 5, 7])).unwrap();
        assert_eq!(exponents(&d), [1, 1, 1, 3, 1, 1]);
        assert_eq!((d.c1, d.c2, d.c3), (4, 2, 2));
        assert_eq!(d.entry_degrees(), [3, 5, 7, 5, 7, 9]);
        assert_eq!(h_omega_formula(&ring(&[3, 5, 7])).unwrap(), 2);
    }

    #[test]
    fn rejects_symmetric_and_wrong_size() {
        assert_eq!(
            structure_matrix(&ring(&[4, 5, 6])).unwrap_err(),
            Error::SymmetricSemigroup
        );
        assert_eq!(
            structure_matrix(&ring(&[3, 4])).unwrap_err(),
            Error::NotThreeGenerated
        );
        assert_eq!(
            structure_matrix(&ring(&[5, 6, 7, 8])).unwrap_err(),
            Error::NotThreeGenerated
        );
        assert_eq!(
            structure_matrix(&ring(&[1])).unwrap_err(),
            Error::NotThreeGenerated
        );
    }

    #[test]
    fn ambiguous_representation_is_reported() {
        // 30 = 2·3 + 3·8 = 2·6 + 3·6
        assert_eq!(
            positive_representation(30, 2, 3, 20).unwrap_err(),
            Error::AmbiguousRepresentation(30)
        );
    }

    #[test]
    fn closing_family() {
        for n in 1..=10i64 {
            let h = ring(&[2 * n + 1, 2 * n + 2, 2 * n + 3]);
            assert_eq!(h_omega_formula(&h).unwrap(), n as u64 + 1, "n = {n}");
        }
    }

    #[test]
    fn canonical_pairs_normalize_to_k() {
        for gens in [&[3, 4, 5][..], &[3, 5, 7], &[5, 7, 11], &[7, 8, 9]] {
            let h = ring(gens);
            let k = canonical_ideal(&h).unwrap();
            for pair in canonical_pairs(&h).unwrap() {
                assert_eq!(pair.shift(-pair.value()).unwrap(), k, "{h}");
            }
        }
        let h = ring(&[3, 4, 5]);
        let gens: Vec<Vec<i64>> = canonical_pairs(&h)
            .unwrap()
            .iter()
            .map(|p| p.min_gens().to_vec())
            .collect();
        assert_eq!(gens, [vec![3, 4], vec![4, 5], vec![5, 6]]);
    }

    #[test]
    fn permutation_robust() {
        for gens in [[5, 7, 11], [11, 5, 7], [7, 11, 5]] {
            let h = ring(&gens);
            assert_eq!(h_omega_formula(&h).unwrap(), h_omega(&h).unwrap());
        }
        for a in [[5, 7, 11], [11, 5, 7], [7, 11, 5], [5, 11, 7]] {
            let d = HerzogData::for_ordering(a).unwrap();
            let mut e = d.entry_degrees().to_vec();
            e.sort_unstable();
            let mut base = HerzogData::for_ordering([5, 7, 11])
                .unwrap()
                .entry_degrees()
                .to_vec();
            base.sort_unstable();
            assert_eq!(e, base);
        }
    }
}
