//! q-colourability by inclusion–exclusion over vertex subsets.
//!
//! With `g(W)` the number of non-empty independent sets inside `W`,
//! `sum over W of (-1)^|V \ W| g(W)^q` counts ordered q-tuples of non-empty
//! independent sets covering `V`, which is positive exactly when `G` is
//! q-colourable.

use std::collections::HashMap;

use num_bigint::BigInt;
use num_traits::{Pow, Zero};

use super::table::SubsetTable;
use crate::error::{Error, Result};
use crate::graph::Graph;

pub const IE_MAX_N: usize = 26;

/// `g(W) = g(W \ {v}) + g(W \ N[v]) + 1` with `v` the lowest member of `W`.
///
/// Both right-hand subsets have smaller bitmasks than `W`, so filling the
/// table in increasing mask order is sufficient.
pub fn tabulate_g(g: &Graph) -> Result<SubsetTable<u32>> {
    let n = g.n();
    if n > IE_MAX_N {
        return Err(Error::Resource(format!(
            "independent-set table on {n} vertices exceeds 2^{IE_MAX_N} entries"
        )));
    }
    let adj = g.adjacency_masks().expect("n <= 64");
    let mut table = vec![0u32; 1 << n];
    for w in 1usize..1 << n {
        let v = w.trailing_zeros() as usize;
        let without = w & (w - 1);
        table[w] = table[without] + table[without & !(adj[v] as usize)] + 1;
    }
    Ok(SubsetTable::new(n, table))
}

// Net signed multiplicity of each g-value.
fn histogram(table: &SubsetTable<u32>) -> HashMap<u32, i64> {
    let n = table.n() as u32;
    let mut hist: HashMap<u32, i64> = HashMap::new();
    for (w, &value) in table.values().iter().enumerate() {
        let sign = if (n - w.count_ones()).is_multiple_of(2) { 1 } else { -1 };
        *hist.entry(value).or_default() += sign;
    }
    hist
}

fn sum_from_histogram(hist: &HashMap<u32, i64>, q: u32) -> BigInt {
    let mut entries: Vec<(&u32, &i64)> = hist.iter().filter(|(_, &m)| m != 0).collect();
    entries.sort_unstable();
    entries.into_iter().fold(BigInt::zero(), |acc, (&value, &mult)| {
        acc + BigInt::from(mult) * Pow::pow(BigInt::from(value), q)
    })
}

/// The inclusion–exclusion sums for each `q` in `qs`, sharing one table.
pub fn ie_sums(table: &SubsetTable<u32>, qs: impl IntoIterator<Item = u32>) -> Vec<BigInt> {
    let hist = histogram(table);
    qs.into_iter().map(|q| sum_from_histogram(&hist, q)).collect()
}

pub fn ie_sum(g: &Graph, q: u32) -> Result<BigInt> {
    Ok(ie_sums(&tabulate_g(g)?, [q]).remove(0))
}

/// Whether `G` is q-colourable, with the sum that decides it.
///
/// The graph without vertices has no non-empty independent sets, so its sum
/// is 0 for every `q >= 1` even though it is trivially colourable; it is
/// answered positively.
pub fn ie_decide(g: &Graph, q: u32) -> Result<(bool, BigInt)> {
    let sum = ie_sum(g, q)?;
    Ok((g.n() == 0 || sum > BigInt::zero(), sum))
}

/// The least `q` whose inclusion–exclusion sum is positive.
pub fn chromatic_number_ie(g: &Graph) -> Result<usize> {
    let table = tabulate_g(g)?;
    let hist = histogram(&table);
    (0..=g.n() as u32)
        .find(|&q| sum_from_histogram(&hist, q) > BigInt::zero())
        .map(|q| q as usize)
        .ok_or_else(|| Error::InvariantViolation("no q <= n passed inclusion–exclusion".into()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::{chromatic_number_dp, exhaustive_decide};
    use crate::families::{self, PAW_U, PAW_V, PAW_W, PAW_X};
    use proptest::prelude::*;

    #[test]
    fn paw_table_and_sums() {
        let table = tabulate_g(&families::paw()).unwrap();
        let set = |vs: &[usize]| vs.iter().fold(0u64, |m, &v| m | 1 << v);
        let expected: [(&[usize], u32); 16] = [
            (&[], 0),
            (&[PAW_U], 1),
            (&[PAW_V], 1),
            (&[PAW_W], 1),
            (&[PAW_X], 1),
            (&[PAW_U, PAW_V], 2),
            (&[PAW_U, PAW_W], 2),
            (&[PAW_U, PAW_X], 2),
            (&[PAW_V, PAW_W], 2),
            (&[PAW_V, PAW_X], 3),
            (&[PAW_W, PAW_X], 3),
            (&[PAW_U, PAW_V, PAW_W], 3),
            (&[PAW_U, PAW_V, PAW_X], 4),
            (&[PAW_U, PAW_W, PAW_X], 4),
            (&[PAW_V, PAW_W, PAW_X], 5),
            (&[PAW_U, PAW_V, PAW_W, PAW_X], 6),
        ];
        for (vs, g) in expected {
            assert_eq!(table.get_mask(set(vs)), g, "g({vs:?})");
        }
        assert_eq!(ie_decide(&families::paw(), 2).unwrap(), (false, 0.into()));
        assert_eq!(ie_decide(&families::paw(), 3).unwrap(), (true, 18.into()));
        assert_eq!(ie_decide(&families::empty(1), 1).unwrap(), (true, 1.into()));
        assert_eq!(chromatic_number_ie(&families::paw()).unwrap(), 3);
    }

    #[test]
    fn complete_graphs() {
        for q in 0..=8 {
            assert_eq!(chromatic_number_ie(&families::complete(q)).unwrap(), q);
        }
    }

    #[test]
    fn agrees_with_dp_on_random_graphs() {
        for seed in 0..30 {
            let g = families::random_gnp(1 + seed as usize % 10, 0.5, seed);
            assert_eq!(chromatic_number_ie(&g).unwrap(), chromatic_number_dp(&g, false).unwrap().0);
        }
    }

    fn count_covering_tuples(g: &Graph, q: u32) -> i64 {
        let n = g.n();
        let adj = g.adjacency_masks().unwrap();
        let sets: Vec<u64> = (1u64..1 << n)
            .filter(|&s| (0..n).all(|v| s >> v & 1 == 0 || adj[v] & s == 0))
            .collect();
        let full = (1u64 << n) - 1;
        let mut count = 0;
        let mut idx = vec![0usize; q as usize];
        if sets.is_empty() {
            return i64::from(q == 0 && n == 0);
        }
        loop {
            let union = idx.iter().fold(0, |u, &i| u | sets[i]);
            if union == full {
                count += 1;
            }
            let mut k = 0;
            while k < idx.len() && idx[k] + 1 == sets.len() {
                idx[k] = 0;
                k += 1;
            }
            if k == idx.len() {
                return count;
            }
            idx[k] += 1;
        }
    }

    proptest! {
        #[test]
        fn decides_like_exhaustive(n in 0usize..=7, p in 0.0f64..1.0, seed in any::<u64>(), q in 1u32..=4) {
            let g = families::random_gnp(n, p, seed);
            let (yes, _) = ie_decide(&g, q).unwrap();
            prop_assert_eq!(yes, exhaustive_decide(&g, q).unwrap().is_some());
        }

        #[test]
        fn table_counts_independent_sets(n in 0usize..=8, p in 0.0f64..1.0, seed in any::<u64>()) {
            let g = families::random_gnp(n, p, seed);
            let adj = g.adjacency_masks().unwrap();
            let table = tabulate_g(&g).unwrap();
            for w in 0u64..1 << n {
                let brute = (1u64..1 << n)
                    .filter(|&s| s & !w == 0)
                    .filter(|&s| (0..n).all(|v| s >> v & 1 == 0 || adj[v] & s == 0))
                    .count();
                prop_assert_eq!(table.get_mask(w) as usize, brute);
            }
        }

        #[test]
        fn sum_counts_covering_tuples(n in 1usize..=4, p in 0.0f64..1.0, seed in any::<u64>(), q in 1u32..=3) {
            let g = families::random_gnp(n, p, seed);
            prop_assert_eq!(ie_sum(&g, q).unwrap(), BigInt::from(count_covering_tuples(&g, q)));
        }
    }
}
