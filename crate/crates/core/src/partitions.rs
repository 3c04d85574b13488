//! Integer partitions, their diagrams and the dominance order.

use std::collections::{BTreeSet, VecDeque};
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{check_cap, domain, Error, Result};

/// Largest `n` accepted by [`partitions_of`].
pub const DEFAULT_PARTITION_CAP: usize = 40;

/// A weakly decreasing sequence of positive integers.
///
/// Parts past the length read as zero through [`Partition::part`].
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Partition {
    parts: Vec<usize>,
}

/// A cell `(row, col)` of a diagram, both 1-based.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Cell {
    pub row: usize,
    pub col: usize,
}

impl Cell {
    pub fn new(row: usize, col: usize) -> Self {
        Cell { row, col }
    }
}

/// Frobenius coordinates `(a | b)` with `a_i = λ_i - i`, `b_i = λ'_i - i`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FrobeniusCoords {
    pub a: Vec<usize>,
    pub b: Vec<usize>,
}

impl FrobeniusCoords {
    pub fn d(&self) -> usize {
        self.a.len()
    }

    /// Rebuilds the partition.
    pub fn to_partition(&self) -> Partition {
        let d = self.d();
        let mut rows: Vec<usize> = (0..d).map(|i| self.a[i] + i + 1).collect();
        let below: Vec<usize> = (0..d).map(|i| self.b[i] + i + 1).collect();
        // rows past the diagonal are read off the columns of height beyond d
        let max_height = below.first().copied().unwrap_or(0);
        for r in d + 1..=max_height {
            rows.push(below.iter().filter(|&&h| h >= r).count());
        }
        Partition::new(rows).expect("Frobenius data always describes a partition")
    }
}

impl Partition {
    /// Builds a partition, dropping trailing zeros. Fails unless weakly decreasing.
    pub fn new(mut parts: Vec<usize>) -> Result<Self> {
        while parts.last() == Some(&0) {
            parts.pop();
        }
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return domain(format!("{parts:?} is not weakly decreasing"));
        }
        if parts.contains(&0) {
            return domain(format!("{parts:?} has an interior zero part"));
        }
        Ok(Partition { parts })
    }

    pub fn empty() -> Self {
        Partition { parts: Vec::new() }
    }

    /// Single-row shape `(n)`.
    pub fn row(n: usize) -> Self {
        Partition::new(vec![n]).unwrap()
    }

    /// Single-column shape `(1^n)`.
    pub fn column(n: usize) -> Self {
        Partition { parts: vec![1; n] }
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    /// `λ_i` for 1-based `i`, zero past the length.
    pub fn part(&self, i: usize) -> usize {
        if i == 0 {
            return 0;
        }
        self.parts.get(i - 1).copied().unwrap_or(0)
    }

    pub fn size(&self) -> usize {
        self.parts.iter().sum()
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// `λ_1`, zero for the empty partition.
    pub fn first(&self) -> usize {
        self.part(1)
    }

    pub fn contains(&self, c: Cell) -> bool {
        c.row >= 1 && c.col >= 1 && c.col <= self.part(c.row)
    }

    pub fn cells(&self) -> impl Iterator<Item = Cell> + '_ {
        self.parts
            .iter()
            .enumerate()
            .flat_map(|(i, &p)| (1..=p).map(move |j| Cell::new(i + 1, j)))
    }

    pub fn conjugate(&self) -> Partition {
        let first = self.first();
        let parts = (1..=first)
            .map(|j| self.parts.iter().take_while(|&&p| p >= j).count())
            .collect();
        Partition { parts }
    }

    /// Arm length of a cell inside the shape.
    pub fn arm(&self, c: Cell) -> usize {
        self.part(c.row) - c.col
    }

    /// Leg length of a cell inside the shape.
    pub fn leg(&self, c: Cell) -> usize {
        self.parts
            .iter()
            .skip(c.row)
            .take_while(|&&p| p >= c.col)
            .count()
    }

    /// Number of parts equal to 1.
    pub fn fixed_points(&self) -> usize {
        self.parts.iter().filter(|&&p| p == 1).count()
    }

    /// True iff no part equals 1.
    pub fn fixed_point_free(&self) -> bool {
        self.fixed_points() == 0
    }

    /// Multiplicities `m_1, m_2, ...` as `(part, count)` pairs, largest first.
    pub fn multiplicities(&self) -> Vec<(usize, usize)> {
        let mut out: Vec<(usize, usize)> = Vec::new();
        for &p in &self.parts {
            match out.last_mut() {
                Some((q, m)) if *q == p => *m += 1,
                _ => out.push((p, 1)),
            }
        }
        out
    }

    /// `μ ⊆ λ` as diagrams.
    pub fn contains_shape(&self, mu: &Partition) -> bool {
        mu.len() <= self.len() && mu.parts.iter().zip(&self.parts).all(|(m, l)| m <= l)
    }

    /// Every part doubled.
    pub fn doubled(&self) -> Partition {
        Partition {
            parts: self.parts.iter().map(|p| 2 * p).collect(),
        }
    }

    /// Rows whose removal leaves a partition.
    pub fn removable_rows(&self) -> Vec<usize> {
        (1..=self.len())
            .filter(|&i| self.part(i) > self.part(i + 1))
            .collect()
    }

    /// Rows to which a cell can be added.
    pub fn addable_rows(&self) -> Vec<usize> {
        (1..=self.len() + 1)
            .filter(|&i| i == 1 || self.part(i - 1) > self.part(i))
            .collect()
    }

    pub fn remove_cell(&self, row: usize) -> Partition {
        let mut parts = self.parts.clone();
        parts[row - 1] -= 1;
        Partition::new(parts).expect("removing a corner keeps a partition")
    }

    pub fn add_cell(&self, row: usize) -> Partition {
        let mut parts = self.parts.clone();
        if row > parts.len() {
            parts.push(1);
        } else {
            parts[row - 1] += 1;
        }
        Partition::new(parts).expect("adding at an inner corner keeps a partition")
    }

    /// Partition with its first column deleted.
    pub fn without_first_column(&self) -> Partition {
        Partition::new(self.parts.iter().map(|p| p - 1).collect()).unwrap()
    }

    /// Rows `1, 3, 5, ...`.
    pub fn odd_rows(&self) -> Partition {
        Partition {
            parts: self.parts.iter().step_by(2).copied().collect(),
        }
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for p in &self.parts {
            if !first {
                f.write_str(",")?;
            }
            write!(f, "{p}")?;
            first = false;
        }
        Ok(())
    }
}

impl FromStr for Partition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.is_empty() {
            return Ok(Partition::empty());
        }
        let parts = s
            .split(',')
            .map(|t| {
                t.parse::<usize>()
                    .ok()
                    .filter(|&p| p > 0)
                    .ok_or_else(|| Error::Parse(format!("shape part {t:?}")))
            })
            .collect::<Result<Vec<_>>>()?;
        Partition::new(parts)
            .map_err(|_| Error::Parse(format!("shape {s:?} is not weakly decreasing")))
    }
}

impl Serialize for Partition {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for Partition {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// All partitions of `n` in reverse-lexicographic order, capped at
/// [`DEFAULT_PARTITION_CAP`].
pub fn partitions_of(n: usize) -> Result<Vec<Partition>> {
    partitions_of_capped(n, DEFAULT_PARTITION_CAP)
}

pub fn partitions_of_capped(n: usize, cap: usize) -> Result<Vec<Partition>> {
    check_cap("partition size", n, cap)?;
    let mut out = Vec::new();
    let mut current = Vec::new();
    fill(n, n, &mut current, &mut out);
    Ok(out)
}

fn fill(rest: usize, max: usize, current: &mut Vec<usize>, out: &mut Vec<Partition>) {
    if rest == 0 {
        out.push(Partition {
            parts: current.clone(),
        });
        return;
    }
    for p in (1..=max.min(rest)).rev() {
        current.push(p);
        fill(rest - p, p, current, out);
        current.pop();
    }
}

/// Dominance `λ ⊵ μ`.
pub fn dominates(lambda: &Partition, mu: &Partition) -> Result<bool> {
    if lambda.size() != mu.size() {
        return domain(format!(
            "dominance needs equal sizes, got |{lambda}| = {} and |{mu}| = {}",
            lambda.size(),
            mu.size()
        ));
    }
    let len = lambda.len().max(mu.len());
    let (mut sl, mut sm) = (0, 0);
    for i in 1..=len {
        sl += lambda.part(i);
        sm += mu.part(i);
        if sm > sl {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Every `ν` reached from `μ` by moving one removable corner to an addable
/// corner in a strictly higher row, in lexicographic order.
pub fn covers_up(mu: &Partition) -> Vec<Partition> {
    let mut out = BTreeSet::new();
    for r in mu.removable_rows() {
        let smaller = mu.remove_cell(r);
        for t in smaller.addable_rows().into_iter().filter(|&t| t < r) {
            out.insert(smaller.add_cell(t));
        }
    }
    out.into_iter().collect()
}

/// Closure of `μ` under [`covers_up`], including `μ`.
pub fn cover_closure(mu: &Partition) -> BTreeSet<Partition> {
    let mut seen = BTreeSet::from([mu.clone()]);
    let mut queue = VecDeque::from([mu.clone()]);
    while let Some(p) = queue.pop_front() {
        for q in covers_up(&p) {
            if seen.insert(q.clone()) {
                queue.push_back(q);
            }
        }
    }
    seen
}

pub fn frobenius(lambda: &Partition) -> FrobeniusCoords {
    let conj = lambda.conjugate();
    let d = (1..=lambda.len())
        .take_while(|&i| lambda.part(i) >= i)
        .count();
    FrobeniusCoords {
        a: (1..=d).map(|i| lambda.part(i) - i).collect(),
        b: (1..=d).map(|i| conj.part(i) - i).collect(),
    }
}

/// The row indices `i ≥ 1` with `i - 1 ≤ λ_i`.
pub fn lattice_rows(lambda: &Partition) -> Vec<usize> {
    (1..=lambda.len().max(1))
        .filter(|&i| i - 1 <= lambda.part(i))
        .collect()
}

/// `ν(λ) = (λ_1 - λ_i + i - 1 : i - 1 ≤ λ_i)`.
pub fn lattice_nu(lambda: &Partition) -> Vec<usize> {
    lattice_rows(lambda)
        .into_iter()
        .map(|i| lambda.first() - lambda.part(i) + i - 1)
        .collect()
}

#[cfg(test)]
pub(crate) mod tests {
    use super::*;
    use proptest::prelude::*;

    fn p(s: &str) -> Partition {
        s.parse().unwrap()
    }

    fn count_partitions(n: usize, max: usize) -> usize {
        if n == 0 {
            return 1;
        }
        (1..=max.min(n)).map(|k| count_partitions(n - k, k)).sum()
    }

    #[test]
    fn enumeration_small_cases() {
        assert_eq!(partitions_of(0).unwrap(), vec![Partition::empty()]);
        let four: Vec<String> = partitions_of(4)
            .unwrap()
            .iter()
            .map(|p| p.to_string())
            .collect();
        assert_eq!(four, ["4", "3,1", "2,2", "2,1,1", "1,1,1,1"]);
        for n in 0..=15 {
            assert_eq!(partitions_of(n).unwrap().len(), count_partitions(n, n));
        }
        assert_eq!(partitions_of(8).unwrap().len(), 22);
        assert!(matches!(partitions_of(41), Err(Error::SizeLimit { .. })));
    }

    #[test]
    fn conjugates() {
        assert_eq!(p("10,6,3,1").conjugate(), p("4,3,3,2,2,2,1,1,1,1"));
        assert_eq!(Partition::row(5).conjugate(), Partition::column(5));
        assert_eq!(p("2,2").conjugate(), p("2,2"));
    }

    #[test]
    fn dominance_examples() {
        assert!(dominates(&p("3,1"), &p("2,2")).unwrap());
        assert!(!dominates(&p("2,2"), &p("3,1")).unwrap());
        assert!(!dominates(&p("2,1,1"), &p("2,2")).unwrap());
        assert!(dominates(&p("2,2"), &p("2,1,1")).unwrap());
        assert!(dominates(&p("2,2"), &p("3")).is_err());
    }

    #[test]
    fn cover_moves() {
        assert_eq!(covers_up(&p("2,2")), vec![p("3,1")]);
        assert!(covers_up(&p("5")).is_empty());
        assert_eq!(covers_up(&p("2,1,1")), vec![p("2,2"), p("3,1")]);
    }

    #[test]
    fn frobenius_examples() {
        let f = frobenius(&p("10,6,3,1"));
        assert_eq!((f.a.clone(), f.b.clone()), (vec![9, 4, 0], vec![3, 1, 0]));
        assert_eq!(f.to_partition(), p("10,6,3,1"));
        let f = frobenius(&p("1"));
        assert_eq!((f.a, f.b), (vec![0], vec![0]));
        let f = frobenius(&p("2,2"));
        assert_eq!((f.a, f.b), (vec![1, 0], vec![1, 0]));
    }

    #[test]
    fn lattice_examples() {
        assert_eq!(lattice_nu(&p("10,6,3,1")), vec![0, 5, 9]);
        assert_eq!(lattice_nu(&Partition::row(7)), vec![0]);
        assert_eq!(lattice_nu(&p("2,2")), vec![0, 1]);
    }

    #[test]
    fn fixed_point_freeness() {
        assert!(p("2,2").fixed_point_free());
        assert!(!p("3,1").fixed_point_free());
        assert!(Partition::empty().fixed_point_free());
    }

    #[test]
    fn text_form() {
        assert_eq!(p("10,6,3,1").to_string(), "10,6,3,1");
        assert_eq!(Partition::empty().to_string(), "");
        assert!("1,2".parse::<Partition>().is_err());
        assert!("2,0".parse::<Partition>().is_err());
        assert!("a".parse::<Partition>().is_err());
    }

    #[test]
    fn dominance_is_a_partial_order() {
        for n in 0..=10 {
            let ps = partitions_of(n).unwrap();
            for a in &ps {
                assert!(dominates(a, a).unwrap());
                for b in &ps {
                    if a != b && dominates(a, b).unwrap() {
                        assert!(!dominates(b, a).unwrap());
                        for c in &ps {
                            if dominates(b, c).unwrap() {
                                assert!(dominates(a, c).unwrap());
                            }
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn cover_closure_is_the_dominance_upset() {
        for n in 0..=9 {
            let ps = partitions_of(n).unwrap();
            for mu in &ps {
                let reach = cover_closure(mu);
                for lambda in &ps {
                    assert_eq!(
                        reach.contains(lambda),
                        dominates(lambda, mu).unwrap(),
                        "{mu} {lambda}"
                    );
                }
            }
        }
    }

    #[test]
    fn conjugation_is_an_involution() {
        for n in 0..=12 {
            for l in partitions_of(n).unwrap() {
                assert_eq!(l.conjugate().conjugate(), l);
            }
        }
    }

    pub(crate) fn arb_partition(max_n: usize) -> impl Strategy<Value = Partition> {
        (0..=max_n).prop_flat_map(|n| {
            let all = partitions_of(n).unwrap();
            (0..all.len()).prop_map(move |i| all[i].clone())
        })
    }

    proptest! {
        #[test]
        fn frobenius_round_trips(l in arb_partition(25)) {
            let f = frobenius(&l);
            prop_assert!(f.a.windows(2).all(|w| w[0] > w[1]));
            prop_assert!(f.b.windows(2).all(|w| w[0] > w[1]));
            prop_assert_eq!(f.to_partition(), l);
        }

        #[test]
        fn lattice_nu_shape(l in arb_partition(25)) {
            let nu = lattice_nu(&l);
            prop_assert_eq!(nu[0], 0);
            prop_assert!(nu.windows(2).all(|w| w[0] < w[1]));
            prop_assert!(nu.iter().all(|&v| v <= l.first()));
        }

        #[test]
        fn text_form_round_trips(l in arb_partition(30)) {
            prop_assert_eq!(l.to_string().parse::<Partition>().unwrap(), l);
        }

        #[test]
        fn legs_match_conjugate(l in arb_partition(20)) {
            let c = l.conjugate();
            for cell in l.cells() {
                prop_assert_eq!(l.leg(cell), c.part(cell.col) - cell.row);
                prop_assert_eq!(l.arm(cell), c.leg(Cell::new(cell.col, cell.row)));
            }
        }
    }
}
