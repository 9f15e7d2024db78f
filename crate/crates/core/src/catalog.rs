//! Enumerations of semigroup families used by sweeps and catalog tests.

use crate::error::{Error, Result};
use crate::semigroup::{gcd, NumericalSemigroup};

/// Every numerical semigroup `H ≠ N` whose minimal generators all lie in
/// `[2, max_generator]`, ordered lexicographically by minimal generators.
pub fn semigroups_with_generators_up_to(max_generator: i64) -> Vec<NumericalSemigroup> {
    fn walk(
        x: i64,
        max: i64,
        chosen: &mut Vec<i64>,
        reach: &mut Vec<bool>,
        out: &mut Vec<Vec<i64>>,
    ) {
        if x > max {
            if !chosen.is_empty() && chosen.iter().fold(0, |a, &b| gcd(a, b)) == 1 {
                out.push(chosen.clone());
            }
            return;
        }
        if !reach[x as usize] {
            // x becomes a minimal generator
            let saved = reach.clone();
            for y in x as usize..reach.len() {
                if reach[y - x as usize] {
                    reach[y] = true;
                }
            }
            chosen.push(x);
            walk(x + 1, max, chosen, reach, out);
            chosen.pop();
            *reach = saved;
        }
        walk(x + 1, max, chosen, reach, out);
    }

    let mut out = Vec::new();
    let mut reach = vec![false; max_generator.max(1) as usize + 1];
    reach[0] = true;
    walk(2, max_generator, &mut Vec::new(), &mut reach, &mut out);
    out.sort();
    out.iter()
        .map(|g| NumericalSemigroup::build(g).expect("gcd checked"))
        .collect()
}

/// Every minimally three-generated `<a, b, c>` with `a < b < c ≤ max_generator`.
pub fn three_generated_up_to(max_generator: i64) -> Vec<NumericalSemigroup> {
    let mut out = Vec::new();
    for a in 2..=max_generator {
        for b in a + 1..=max_generator {
            if b % a == 0 {
                continue;
            }
            for c in b + 1..=max_generator {
                if gcd(gcd(a, b), c) != 1 {
                    continue;
                }
                let h = NumericalSemigroup::build(&[a, b, c]).expect("gcd checked");
                if h.embedding_dimension() == 3 {
                    out.push(h);
                }
            }
        }
    }
    out
}

/// One affine term `k·n + b` of a family template.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct AffineTerm {
    pub slope: i64,
    pub offset: i64,
}

impl AffineTerm {
    pub fn at(&self, n: i64) -> Option<i64> {
        self.slope.checked_mul(n)?.checked_add(self.offset)
    }
}

fn parse_term(s: &str) -> Option<AffineTerm> {
    let s: String = s.chars().filter(|c| !c.is_whitespace()).collect();
    if s.is_empty() {
        return None;
    }
    let Some(pos) = s.find('n') else {
        return Some(AffineTerm {
            slope: 0,
            offset: s.parse().ok()?,
        });
    };
    let coeff = s[..pos].trim_end_matches('*');
    let slope = match coeff {
        "" | "+" => 1,
        "-" => -1,
        c => c.parse().ok()?,
    };
    let rest = &s[pos + 1..];
    let offset = if rest.is_empty() {
        0
    } else {
        let (sign, digits) = rest.split_at(1);
        let v: i64 = digits.parse().ok()?;
        match sign {
            "+" => v,
            "-" => -v,
            _ => return None,
        }
    };
    Some(AffineTerm { slope, offset })
}

/// Parses a template such as `2n+1, 2n+2, 2n+3`; brackets are optional.
pub fn parse_template(template: &str) -> Result<Vec<AffineTerm>> {
    let inner = template
        .trim()
        .trim_start_matches(['⟨', '<', '['])
        .trim_end_matches(['⟩', '>', ']']);
    let terms: Option<Vec<AffineTerm>> = inner.split(',').map(parse_term).collect();
    match terms {
        Some(t) => Ok(t),
        None => Err(Error::InvalidTemplate(template.to_string())),
    }
}

/// Generator lists of the template for `n` in `lo..=hi`.
pub fn expand_template(terms: &[AffineTerm], lo: i64, hi: i64) -> Result<Vec<Vec<i64>>> {
    (lo..=hi)
        .map(|n| {
            terms
                .iter()
                .map(|t| t.at(n).ok_or(Error::Overflow))
                .collect()
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn catalog_sizes() {
        // counted independently by brute force over subsets of [2, n]
        assert_eq!(semigroups_with_generators_up_to(15).len(), 538);
        assert_eq!(semigroups_with_generators_up_to(3).len(), 1);
        assert_eq!(semigroups_with_generators_up_to(4).len(), 2);
    }

    #[test]
    fn three_generated_are_minimal() {
        let all = three_generated_up_to(10);
        assert!(all.iter().all(|h| h.embedding_dimension() == 3));
        assert!(all.iter().any(|h| h.minimal_generators() == [3, 4, 5]));
        assert!(!all.iter().any(|h| h.minimal_generators() == [3, 6, 7]));
    }

    #[test]
    fn templates() {
        let t = parse_template("⟨2n+1, 2n+2, 2n+3⟩").unwrap();
        assert_eq!(
            expand_template(&t, 1, 2).unwrap(),
            vec![vec![3, 4, 5], vec![5, 6, 7]]
        );
        let t = parse_template("n, n+1, 3*n-2, 7").unwrap();
        assert_eq!(expand_template(&t, 4, 4).unwrap(), vec![vec![4, 5, 10, 7]]);
        assert_eq!(
            parse_template("2m+1").unwrap_err(),
            Error::InvalidTemplate("2m+1".into())
        );
        assert!(parse_template("").is_err());
        assert!(parse_template("n+1,,n").is_err());
    }
}
