//! Partial column transversals of a diagram and their α-weights.

use itertools::Itertools;

use crate::error::{domain, Result};
use crate::exactalg::AlphaPoly;
use crate::partitions::{Cell, Partition};

/// A set of cells, at most one per column, sorted by column.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Transversal {
    pub cells: Vec<Cell>,
}

/// Every `k`-transversal of `λ`: column subsets in lexicographic order, then
/// row choices per column as an odometer.
pub fn enumerate_transversals(
    lambda: &Partition,
    k: usize,
) -> impl Iterator<Item = Transversal> + '_ {
    let heights = lambda.conjugate();
    (1..=lambda.first()).combinations(k).flat_map(move |cols| {
        let rows: Vec<std::ops::RangeInclusive<usize>> =
            cols.iter().map(|&c| 1..=heights.part(c)).collect();
        rows.into_iter()
            .multi_cartesian_product()
            .map(move |rs| Transversal {
                cells: cols.iter().zip(rs).map(|(&c, r)| Cell::new(r, c)).collect(),
            })
    })
}

/// Lower hook product of the cell set, arms and legs counted inside `T`.
pub fn transversal_weight(lambda: &Partition, t: &Transversal) -> Result<AlphaPoly> {
    if let Some(c) = t.cells.iter().find(|c| !lambda.contains(**c)) {
        return domain(format!("cell ({}, {}) lies outside {lambda}", c.row, c.col));
    }
    if t.cells.iter().map(|c| c.col).duplicates().next().is_some() {
        return domain("two cells share a column");
    }
    Ok(t.cells
        .iter()
        .map(|c| {
            let arm = t
                .cells
                .iter()
                .filter(|d| d.row == c.row && d.col > c.col)
                .count();
            let leg = t
                .cells
                .iter()
                .filter(|d| d.col == c.col && d.row > c.row)
                .count();
            AlphaPoly::linear(leg as i64 + 1, arm as i64)
        })
        .product())
}

/// `J*_k(λ)/k! = Σ_T w_α(T)` over the `k`-transversals.
pub fn shifted_jack_onerow(lambda: &Partition, k: usize) -> AlphaPoly {
    enumerate_transversals(lambda, k)
        .map(|t| transversal_weight(lambda, &t).expect("enumerated transversals are valid"))
        .sum()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::{int, rat};
    use crate::hooks::{minor_sum, principal_lower_product};
    use crate::partitions::partitions_of;
    use num_bigint::BigInt;

    fn p(s: &str) -> Partition {
        s.parse().unwrap()
    }

    fn cells(v: &[(usize, usize)]) -> Transversal {
        Transversal {
            cells: v.iter().map(|&(r, c)| Cell::new(r, c)).collect(),
        }
    }

    fn elementary(heights: &[usize], k: usize) -> BigInt {
        heights
            .iter()
            .copied()
            .combinations(k)
            .map(|s| s.iter().map(|&h| BigInt::from(h)).product::<BigInt>())
            .sum()
    }

    #[test]
    fn enumeration_examples() {
        assert_eq!(enumerate_transversals(&p("2,1"), 1).count(), 3);
        let empty: Vec<_> = enumerate_transversals(&p("3,2"), 0).collect();
        assert_eq!(empty, vec![Transversal { cells: vec![] }]);
        assert_eq!(enumerate_transversals(&p("2,1"), 3).count(), 0);
        let fig = cells(&[(2, 1), (1, 2), (2, 3), (1, 4)]);
        assert!(enumerate_transversals(&p("4,3,2"), 4).any(|t| t == fig));
    }

    #[test]
    fn weight_examples() {
        let l = p("4,3,2");
        let s = cells(&[(2, 1), (1, 2), (2, 3), (1, 4)]);
        assert_eq!(
            transversal_weight(&l, &s).unwrap(),
            AlphaPoly::linear(1, 1).pow(2)
        );
        let s2 = cells(&[(1, 1), (3, 2)]);
        assert_eq!(transversal_weight(&l, &s2).unwrap(), AlphaPoly::one());
        assert_eq!(
            transversal_weight(&l, &cells(&[])).unwrap(),
            AlphaPoly::one()
        );
        assert!(transversal_weight(&l, &cells(&[(3, 3)])).is_err());
        assert!(transversal_weight(&l, &cells(&[(1, 1), (2, 1)])).is_err());
    }

    #[test]
    fn onerow_examples() {
        for l in [p("2,1"), p("4,3,2"), p("3,3,1")] {
            assert_eq!(
                shifted_jack_onerow(&l, l.first()),
                principal_lower_product(&l)
            );
            assert_eq!(shifted_jack_onerow(&l, 0), AlphaPoly::one());
            assert_eq!(shifted_jack_onerow(&l, l.first() + 1), AlphaPoly::zero());
        }
        assert_eq!(shifted_jack_onerow(&p("2,1"), 1), AlphaPoly::int(3));
    }

    #[test]
    fn onerow_matches_complementary_minor_sum() {
        for n in 0..=9 {
            for l in partitions_of(n).unwrap() {
                if l.first() > 6 {
                    continue;
                }
                let heights = l.conjugate();
                for k in 0..=l.first() {
                    let s = shifted_jack_onerow(&l, k);
                    assert_eq!(s, minor_sum(&l, l.first() - k), "{l} k={k}");
                    assert_eq!(s.eval(&rat(0)), int(elementary(heights.parts(), k)));
                    assert!(s.degree().unwrap_or(0) <= k);
                }
            }
        }
    }
}
