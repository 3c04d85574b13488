//! Colored permutations and matchings, rencontres numbers and counts in the
//! hyperoctahedral group.

use num_bigint::BigInt;
use num_traits::Zero;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{check_cap, domain, Result};
use crate::exactalg::{
    binomial, factorial, int, odd_double_factorial, rat, sign, AlphaPoly, Rational,
};
use crate::partitions::Partition;

/// Largest first row for enumeration over `S_{λ_1}`.
pub const PERMUTATION_CAP: usize = 10;
/// Largest first row for enumeration over perfect matchings of `[2λ_1]`.
pub const MATCHING_CAP: usize = 7;
/// Largest `n` for [`matching_derangement_count`].
pub const MATCHING_COUNT_CAP: usize = 8;
/// Largest `m` for enumeration over the signed permutations of `[m]`.
pub const HYPEROCTAHEDRAL_CAP: usize = 7;
/// Largest first row for the explicit color-by-color enumeration.
pub const MATERIALIZED_CAP: usize = 6;

/// Colored derangement counts `d^λ_1, ..., d^λ_{λ_1}` by number of cycles.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DerangementProfile {
    pub shape: Partition,
    #[serde(rename = "d")]
    pub counts: Vec<u128>,
}

impl DerangementProfile {
    /// `d^λ_k` for `k ≥ 1`, zero out of range.
    pub fn get(&self, k: usize) -> u128 {
        if k == 0 {
            return 0;
        }
        self.counts.get(k - 1).copied().unwrap_or(0)
    }

    /// `D^λ`, the number of colored derangements.
    pub fn total(&self) -> u128 {
        if self.shape.is_empty() {
            return 1;
        }
        self.counts.iter().sum()
    }

    /// `D^λ_α = Σ_k d^λ_k α^{λ_1 - k}`.
    pub fn polynomial(&self) -> AlphaPoly {
        if self.shape.is_empty() {
            return AlphaPoly::one();
        }
        let l1 = self.shape.first();
        AlphaPoly::new(
            (0..l1)
                .map(|e| int(BigInt::from(self.get(l1 - e))))
                .collect(),
        )
    }
}

/// Calls `f` on every permutation of `0..n` with `σ(n-1) = last`.
fn for_each_with_last(n: usize, last: usize, mut f: impl FnMut(&[usize])) {
    let mut rest: Vec<usize> = (0..n).filter(|&v| v != last).collect();
    let mut sigma = vec![0; n];
    sigma[n - 1] = last;
    let m = rest.len();
    let mut c = vec![0usize; m];
    sigma[..m].copy_from_slice(&rest);
    f(&sigma);
    let mut i = 0;
    while i < m {
        if c[i] < i {
            if i % 2 == 0 {
                rest.swap(0, i);
            } else {
                rest.swap(c[i], i);
            }
            sigma[..m].copy_from_slice(&rest);
            f(&sigma);
            c[i] += 1;
            i = 0;
        } else {
            c[i] = 0;
            i += 1;
        }
    }
}

/// Folds over `S_n` in parallel, one chunk per value of `σ(n-1)`, and
/// combines the chunk results in a fixed order.
fn fold_permutations<T: Send>(
    n: usize,
    init: impl Fn() -> T + Sync,
    step: impl Fn(&mut T, &[usize]) + Sync,
    merge: impl Fn(T, T) -> T,
) -> T {
    if n == 0 {
        let mut acc = init();
        step(&mut acc, &[]);
        return acc;
    }
    let parts: Vec<T> = (0..n)
        .into_par_iter()
        .map(|last| {
            let mut acc = init();
            for_each_with_last(n, last, |s| step(&mut acc, s));
            acc
        })
        .collect();
    parts.into_iter().reduce(merge).unwrap()
}

fn add_vecs(mut a: Vec<u128>, b: Vec<u128>) -> Vec<u128> {
    for (x, y) in a.iter_mut().zip(b) {
        *x += y;
    }
    a
}

/// Cycles of `σ` as `(length, largest element)` pairs, 0-based.
fn cycles(sigma: &[usize], buf: &mut Vec<(usize, usize)>) {
    buf.clear();
    let mut seen = 0u64;
    for start in 0..sigma.len() {
        if seen >> start & 1 == 1 {
            continue;
        }
        let (mut len, mut max, mut i) = (0, start, start);
        while seen >> i & 1 == 0 {
            seen |= 1 << i;
            len += 1;
            max = max.max(i);
            i = sigma[i];
        }
        buf.push((len, max));
    }
}

/// Column heights `λ'_1, ..., λ'_{λ_1}` as `u128`.
fn heights(lambda: &Partition) -> Vec<u128> {
    let conj = lambda.conjugate();
    let h: Vec<u128> = conj.parts().iter().map(|&x| x as u128).collect();
    // color lists are nested, so a cycle's colors are those of its largest element
    debug_assert!(h.windows(2).all(|w| w[0] >= w[1]));
    h
}

/// Counts of λ-colored permutations by number of cycles, indexed `0..=λ_1`,
/// with or without the derangement condition.
fn colored_permutation_profile(lambda: &Partition, derange: bool) -> Result<Vec<u128>> {
    let n = lambda.first();
    check_cap("first row for permutation enumeration", n, PERMUTATION_CAP)?;
    let h = heights(lambda);
    Ok(fold_permutations(
        n,
        || (vec![0u128; n + 1], Vec::new()),
        |(acc, buf), sigma| {
            cycles(sigma, buf);
            let mut w: u128 = 1;
            for &(len, max) in buf.iter() {
                w *= if len == 1 && derange {
                    h[max] - 1
                } else {
                    h[max]
                };
            }
            acc[buf.len()] += w;
        },
        |a, b| (add_vecs(a.0, b.0), a.1),
    )
    .0)
}

/// `d^λ_k` for `k = 1..=λ_1` by enumeration of `S_{λ_1}`.
pub fn colored_derangement_counts(lambda: &Partition) -> Result<DerangementProfile> {
    let all = colored_permutation_profile(lambda, true)?;
    Ok(DerangementProfile {
        shape: lambda.clone(),
        counts: all.into_iter().skip(1).collect(),
    })
}

/// λ-colored permutations by number of cycles, indexed `0..=λ_1`.
pub fn colored_permutation_counts(lambda: &Partition) -> Result<Vec<u128>> {
    colored_permutation_profile(lambda, false)
}

/// `D^λ_α` by enumeration.
pub fn jack_derangement_number(lambda: &Partition) -> Result<AlphaPoly> {
    Ok(colored_derangement_counts(lambda)?.polynomial())
}

/// Colored derangements counted one coloring at a time: every assignment of
/// a color from `[λ'_i]` to each element is tested for constant colors on
/// cycles and for no fixed point of color 1.
pub fn colored_derangements_materialized(lambda: &Partition) -> Result<DerangementProfile> {
    let n = lambda.first();
    check_cap(
        "first row for materialized enumeration",
        n,
        MATERIALIZED_CAP,
    )?;
    let h: Vec<usize> = lambda.conjugate().parts().to_vec();
    let mut counts = vec![0u128; n + 1];
    let mut colors = vec![1usize; n];
    let perms = all_permutations(n);
    loop {
        for sigma in &perms {
            let ok =
                (0..n).all(|i| colors[sigma[i]] == colors[i] && !(sigma[i] == i && colors[i] == 1));
            if ok {
                let mut buf = Vec::new();
                cycles(sigma, &mut buf);
                counts[buf.len()] += 1;
            }
        }
        // odometer over colorings
        let mut i = 0;
        while i < n && colors[i] == h[i] {
            colors[i] = 1;
            i += 1;
        }
        if i == n {
            break;
        }
        colors[i] += 1;
    }
    Ok(DerangementProfile {
        shape: lambda.clone(),
        counts: counts.into_iter().skip(1).collect(),
    })
}

fn all_permutations(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    for last in 0..n {
        for_each_with_last(n, last, |s| out.push(s.to_vec()));
    }
    out
}

/// Table `t[k][c] = Σ_{|I| = k} #{(c,σ) : σ has c cycles, every i ∈ I is a
/// fixed point of color 1}`.
pub fn marked_fixed_point_counts(lambda: &Partition) -> Result<Vec<Vec<u128>>> {
    let n = lambda.first();
    check_cap("first row for permutation enumeration", n, PERMUTATION_CAP)?;
    let h = heights(lambda);
    let flat = fold_permutations(
        n,
        || (vec![0u128; (n + 1) * (n + 1)], Vec::new()),
        |(acc, buf), sigma| {
            cycles(sigma, buf);
            let mut rest: u128 = 1;
            // Π over fixed points of (λ'_i + t): coefficient of t^k marks k of them
            let mut marks = vec![1u128];
            for &(len, max) in buf.iter() {
                if len == 1 {
                    let mut next = vec![0u128; marks.len() + 1];
                    for (e, &v) in marks.iter().enumerate() {
                        next[e] += v * h[max];
                        next[e + 1] += v;
                    }
                    marks = next;
                } else {
                    rest *= h[max];
                }
            }
            for (k, &v) in marks.iter().enumerate() {
                acc[k * (n + 1) + buf.len()] += v * rest;
            }
        },
        |a, b| (add_vecs(a.0, b.0), a.1),
    )
    .0;
    Ok(flat.chunks(n + 1).map(|r| r.to_vec()).collect())
}

/// Calls `f` on every perfect matching of `0..2m` as a partner array.
fn for_each_matching(m: usize, f: &mut impl FnMut(&[usize])) {
    let mut partner = vec![usize::MAX; 2 * m];
    fn go(partner: &mut Vec<usize>, f: &mut impl FnMut(&[usize])) {
        let Some(i) = partner.iter().position(|&p| p == usize::MAX) else {
            f(partner);
            return;
        };
        for j in i + 1..partner.len() {
            if partner[j] == usize::MAX {
                partner[i] = j;
                partner[j] = i;
                go(partner, f);
                partner[i] = usize::MAX;
                partner[j] = usize::MAX;
            }
        }
    }
    go(&mut partner, f);
}

/// Cycles of the union of a matching with `{{0,1},{2,3},...}`, as
/// `(number of pairs, largest pair index)`.
fn pair_cycles(partner: &[usize], buf: &mut Vec<(usize, usize)>) {
    buf.clear();
    let m = partner.len() / 2;
    let mut seen = vec![false; m];
    for start in 0..m {
        if seen[start] {
            continue;
        }
        let (mut len, mut max, mut e) = (0, start, 2 * start);
        loop {
            let pair = e / 2;
            seen[pair] = true;
            len += 1;
            max = max.max(pair);
            let next = partner[e] ^ 1;
            if next / 2 == start {
                break;
            }
            e = next;
        }
        buf.push((len, max));
    }
}

fn colored_matching_total(lambda: &Partition, derange: bool) -> Result<u128> {
    let m = lambda.first();
    check_cap("first row for matching enumeration", m, MATCHING_CAP)?;
    let h = heights(lambda);
    let mut total = 0u128;
    let mut buf = Vec::new();
    for_each_matching(m, &mut |partner| {
        pair_cycles(partner, &mut buf);
        total += buf
            .iter()
            .map(|&(len, max)| {
                if len == 1 && derange {
                    h[max] - 1
                } else {
                    h[max]
                }
            })
            .product::<u128>();
    });
    Ok(total)
}

/// `|D'_λ|`: λ-colored perfect matchings of `[2λ_1]` avoiding a color-1
/// block `{2i-1, 2i}`.
pub fn colored_matching_derangements(lambda: &Partition) -> Result<u128> {
    colored_matching_total(lambda, true)
}

/// All λ-colored perfect matchings.
pub fn colored_matching_count(lambda: &Partition) -> Result<u128> {
    colored_matching_total(lambda, false)
}

/// `|D'_{2n}|` by inclusion–exclusion.
pub fn matching_derangement_count(n: usize) -> Result<BigInt> {
    check_cap("matching size", n, MATCHING_COUNT_CAP)?;
    Ok((0..=n)
        .map(|k| {
            let term = binomial(n, k) * odd_double_factorial(n - k);
            if k % 2 == 0 {
                term
            } else {
                -term
            }
        })
        .sum())
}

/// `|D'_{2n}|` by listing matchings of `[2n]` that share no block with the
/// standard one.
pub fn matching_derangement_count_enumerated(n: usize) -> Result<u128> {
    check_cap("matching size", n, MATCHING_CAP)?;
    let mut count = 0u128;
    for_each_matching(n, &mut |p| {
        if (0..n).all(|i| p[2 * i] != 2 * i + 1) {
            count += 1;
        }
    });
    Ok(count)
}

/// `d^{(α)}_{n,k} = Σ_{i ≤ n-k} (-1)^i n!/(k! i!) α^{n-k-i}`, zero for `k > n`.
pub fn rencontres_poly(n: usize, k: usize) -> AlphaPoly {
    if k > n {
        return AlphaPoly::zero();
    }
    let nf = factorial(n);
    let mut coeffs = vec![Rational::zero(); n - k + 1];
    for i in 0..=n - k {
        coeffs[n - k - i] = sign(i) * int(&nf / (factorial(k) * factorial(i)));
    }
    AlphaPoly::new(coeffs)
}

/// `d^{(α)}_{n,k}` at a nonzero rational `α`.
pub fn rencontres(n: usize, k: usize, alpha: &Rational) -> Result<Rational> {
    if alpha.is_zero() {
        return domain("rencontres numbers are not defined at alpha = 0");
    }
    Ok(rencontres_poly(n, k).eval(alpha))
}

/// `d^{(α)}_{n,k} / (α^n n!)`.
pub fn rencontres_prob(n: usize, k: usize, alpha: &Rational) -> Result<Rational> {
    let d = rencontres(n, k, alpha)?;
    Ok(d / (alpha.pow(n as i32) * int(factorial(n))))
}

/// Classical `d_{n,k}`: permutations of `[n]` with exactly `k` fixed points.
pub fn rencontres_classical(n: usize, k: usize) -> BigInt {
    rencontres(n, k, &rat(1)).unwrap().to_integer()
}

/// Counts over the signed permutations of `[m]`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct HyperoctahedralCounts {
    /// Elements with no `i ↦ +i`.
    pub derangements: u128,
    /// Every cycle carries an even number of minus signs.
    pub balanced: u128,
    /// Every cycle carries an odd number of minus signs.
    pub totally_unbalanced: u128,
    /// Balanced elements with no `i ↦ +i`.
    pub balanced_derangements: u128,
}

/// Visits every signed permutation as `(σ, sign mask)` with the cycle list
/// `(length, largest element, balanced, elements mask)`.
fn for_each_signed(m: usize, mut f: impl FnMut(&[(usize, bool, u32)])) -> Result<()> {
    check_cap("signed permutation size", m, HYPEROCTAHEDRAL_CAP)?;
    let perms = all_permutations(m);
    let mut info = Vec::new();
    for sigma in &perms {
        for mask in 0u32..(1 << m) {
            info.clear();
            let mut seen = 0u32;
            for start in 0..m {
                if seen >> start & 1 == 1 {
                    continue;
                }
                let (mut len, mut minus, mut elems, mut i) = (0, 0, 0u32, start);
                while seen >> i & 1 == 0 {
                    seen |= 1 << i;
                    elems |= 1 << i;
                    len += 1;
                    minus += (mask >> i & 1) as usize;
                    i = sigma[i];
                }
                info.push((len, minus % 2 == 0, elems));
            }
            f(&info);
        }
    }
    Ok(())
}

pub fn hyperoctahedral_counts(m: usize) -> Result<HyperoctahedralCounts> {
    let mut out = HyperoctahedralCounts {
        derangements: 0,
        balanced: 0,
        totally_unbalanced: 0,
        balanced_derangements: 0,
    };
    for_each_signed(m, |cyc| {
        // a positive fixed point is a balanced 1-cycle
        let deranged = !cyc.iter().any(|&(len, bal, _)| len == 1 && bal);
        let balanced = cyc.iter().all(|c| c.1);
        out.derangements += deranged as u128;
        out.balanced += balanced as u128;
        out.totally_unbalanced += cyc.iter().all(|c| !c.1) as u128;
        out.balanced_derangements += (deranged && balanced) as u128;
    })?;
    Ok(out)
}

/// Signed derangements of `[m]` whose unbalanced cycles all lie in `[k]`.
pub fn subcube_fixing_derangements(m: usize, k: usize) -> Result<u128> {
    if k > m {
        return domain(format!("subcube dimension {k} exceeds {m}"));
    }
    let inside: u32 = (1u32 << k) - 1;
    let mut count = 0u128;
    for_each_signed(m, |cyc| {
        let deranged = !cyc.iter().any(|&(len, bal, _)| len == 1 && bal);
        let confined = cyc
            .iter()
            .all(|&(_, bal, elems)| bal || elems & !inside == 0);
        count += (deranged && confined) as u128;
    })?;
    Ok(count)
}

/// `Σ_i C(k,i) (2i-1)!! |D'_{2(m-i)}|`.
pub fn subcube_fixing_formula(m: usize, k: usize) -> Result<BigInt> {
    (0..=k.min(m))
        .map(|i| Ok(binomial(k, i) * odd_double_factorial(i) * matching_derangement_count(m - i)?))
        .sum()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::ratio;
    use crate::hooks::{falling_coeffs, principal_lower_product};
    use crate::partitions::{covers_up, partitions_of};

    fn p(s: &str) -> Partition {
        s.parse().unwrap()
    }

    fn small_shapes(max_n: usize, max_first: usize) -> Vec<Partition> {
        (0..=max_n)
            .flat_map(|n| partitions_of(n).unwrap())
            .filter(|l| l.first() <= max_first)
            .collect()
    }

    #[test]
    fn profile_examples() {
        assert_eq!(
            colored_derangement_counts(&p("4")).unwrap().counts,
            vec![6, 3, 0, 0]
        );
        assert_eq!(
            colored_derangement_counts(&p("2,1")).unwrap().counts,
            vec![1, 0]
        );
        assert_eq!(
            colored_derangement_counts(&p("3,2")).unwrap().counts,
            vec![2, 2, 0]
        );
        assert_eq!(
            jack_derangement_number(&p("2,1")).unwrap(),
            AlphaPoly::alpha()
        );
        assert_eq!(
            jack_derangement_number(&p("2,2")).unwrap(),
            AlphaPoly::linear(1, 2)
        );
        let big = jack_derangement_number(&p("10,6,3,1")).unwrap();
        assert_eq!(big.eval_int(1), rat(4242315));
        assert!(colored_derangement_counts(&Partition::row(11)).is_err());
    }

    #[test]
    fn profile_json() {
        let prof = colored_derangement_counts(&p("3,2")).unwrap();
        let s = serde_json::to_string(&prof).unwrap();
        assert_eq!(s, r#"{"shape":"3,2","d":[2,2,0]}"#);
        assert_eq!(
            serde_json::from_str::<DerangementProfile>(&s).unwrap(),
            prof
        );
    }

    #[test]
    fn materialized_matches_counting_shortcut() {
        for l in small_shapes(9, 5) {
            assert_eq!(
                colored_derangements_materialized(&l).unwrap(),
                colored_derangement_counts(&l).unwrap(),
                "{l}"
            );
        }
    }

    #[test]
    fn totals_are_principal_products() {
        for l in small_shapes(12, 6) {
            let perms: u128 = colored_permutation_counts(&l).unwrap().iter().sum();
            assert_eq!(
                rat(perms as i64),
                principal_lower_product(&l).eval_int(1),
                "{l}"
            );
            let matchings = colored_matching_count(&l).unwrap();
            assert_eq!(
                rat(matchings as i64),
                principal_lower_product(&l).eval_int(2),
                "{l}"
            );
        }
    }

    #[test]
    fn matching_derangements_equal_profile_at_two() {
        for l in small_shapes(12, 6) {
            let d = colored_matching_derangements(&l).unwrap();
            let poly = jack_derangement_number(&l).unwrap();
            assert_eq!(rat(d as i64), poly.eval_int(2), "{l}");
        }
        assert_eq!(colored_matching_derangements(&p("2,2")).unwrap(), 5);
        assert_eq!(colored_matching_derangements(&p("1,1")).unwrap(), 1);
        for n in 0..=MATCHING_CAP {
            let plain = colored_matching_derangements(&Partition::row(n)).unwrap();
            assert_eq!(BigInt::from(plain), matching_derangement_count(n).unwrap());
        }
    }

    #[test]
    fn matching_counts() {
        assert_eq!(matching_derangement_count(1).unwrap(), BigInt::from(0));
        assert_eq!(matching_derangement_count(2).unwrap(), BigInt::from(2));
        assert_eq!(matching_derangement_count(4).unwrap(), BigInt::from(60));
        for n in 0..=7 {
            assert_eq!(
                BigInt::from(matching_derangement_count_enumerated(n).unwrap()),
                matching_derangement_count(n).unwrap()
            );
        }
        assert!(matching_derangement_count(9).is_err());
    }

    #[test]
    fn rencontres_examples() {
        assert_eq!(rencontres(4, 0, &rat(1)).unwrap(), rat(9));
        assert_eq!(rencontres(2, 0, &rat(2)).unwrap(), rat(5));
        for n in 0..8 {
            assert_eq!(rencontres_poly(n, n), AlphaPoly::one());
        }
        assert!(rencontres(3, 1, &rat(0)).is_err());
        for a in [ratio(1, 2), rat(1), rat(2), rat(3)] {
            for n in 0..9 {
                let total: Rational = (0..=n).map(|k| rencontres_prob(n, k, &a).unwrap()).sum();
                assert_eq!(total, rat(1));
            }
        }
        // classical d_{n,k} = C(n,k) d_{n-k,0}
        for n in 0..9 {
            for k in 0..=n {
                assert_eq!(
                    rencontres_classical(n, k),
                    binomial(n, k) * rencontres_classical(n - k, 0)
                );
            }
        }
    }

    #[test]
    fn hyperoctahedral_examples() {
        let c4 = hyperoctahedral_counts(4).unwrap();
        assert_eq!(c4.derangements, 233);
        assert_eq!(hyperoctahedral_counts(3).unwrap().balanced, 15);
        for m in 0..=6 {
            let c = hyperoctahedral_counts(m).unwrap();
            assert_eq!(BigInt::from(c.balanced), odd_double_factorial(m));
            assert_eq!(BigInt::from(c.totally_unbalanced), odd_double_factorial(m));
            assert_eq!(
                rat(c.derangements as i64),
                rencontres(m, 0, &rat(2)).unwrap()
            );
            assert_eq!(
                BigInt::from(c.balanced_derangements),
                matching_derangement_count(m).unwrap()
            );
        }
        assert_eq!(subcube_fixing_derangements(2, 2).unwrap(), 5);
        for m in 0..=5 {
            for k in 0..=m {
                assert_eq!(
                    BigInt::from(subcube_fixing_derangements(m, k).unwrap()),
                    subcube_fixing_formula(m, k).unwrap()
                );
            }
        }
    }

    #[test]
    fn alpha_zero_profile() {
        for l in small_shapes(10, 8) {
            if l.is_empty() {
                continue;
            }
            let expected: u128 = l
                .conjugate()
                .parts()
                .iter()
                .map(|&h| h as u128 - 1)
                .product();
            let prof = colored_derangement_counts(&l).unwrap();
            assert_eq!(prof.get(l.first()), expected);
            assert_eq!(prof.polynomial().eval_int(0), rat(expected as i64));
        }
    }

    #[test]
    fn profiles_grow_along_cover_moves() {
        for n in 1..=8 {
            for mu in partitions_of(n).unwrap() {
                let dm = colored_derangement_counts(&mu).unwrap();
                for l in covers_up(&mu)
                    .into_iter()
                    .filter(|l| l.first() == mu.first())
                {
                    let dl = colored_derangement_counts(&l).unwrap();
                    for k in 1..=mu.first().max(l.first()) {
                        assert!(dm.get(k) <= dl.get(k), "{mu} -> {l} at k={k}");
                    }
                }
            }
        }
    }

    #[test]
    fn falling_coefficients_count_marked_fixed_points() {
        for l in small_shapes(12, 6) {
            let c = falling_coeffs(&l);
            let table = marked_fixed_point_counts(&l).unwrap();
            let n = l.first();
            for (k, ck) in c.iter().enumerate() {
                for j in 0..=n - k {
                    let coeff = ck.coeff(n - k - j) * sign(k);
                    assert_eq!(coeff, rat(table[k][k + j] as i64), "{l} k={k} j={j}");
                }
            }
            let sum: AlphaPoly = c.iter().cloned().sum();
            assert_eq!(sum, jack_derangement_number(&l).unwrap());
        }
    }
}
