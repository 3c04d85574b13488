//! Jack characters from first principles and symmetric-group characters.

use std::collections::{BTreeMap, HashMap};

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{check_cap, domain, Error, Result};
use crate::exactalg::{factorial, int, newton_interpolate, AlphaPoly, Rational};
use crate::partitions::{partitions_of, Partition};

/// Largest degree for [`power_to_monomial`].
pub const POWER_TO_MONOMIAL_CAP: usize = 10;
/// Largest degree for [`jack_in_power_basis`].
pub const JACK_CAP: usize = 7;
/// Largest degree for [`mn_character`].
pub const CHARACTER_CAP: usize = 14;
/// Largest degree for [`eta_via_characters`].
pub const CHARACTER_ETA_CAP: usize = 12;

/// Tag of the basis a [`SymFuncExpansion`] is written in.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Basis {
    Monomial,
    PowerSum,
}

/// A homogeneous symmetric function of degree `n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SymFuncExpansion {
    pub n: usize,
    pub basis: Basis,
    pub coeffs: BTreeMap<Partition, Rational>,
}

impl SymFuncExpansion {
    pub fn coeff(&self, mu: &Partition) -> Rational {
        self.coeffs.get(mu).cloned().unwrap_or_else(Rational::zero)
    }
}

/// `z_μ = Π_i i^{m_i} m_i!`.
pub fn z(mu: &Partition) -> BigInt {
    mu.multiplicities()
        .into_iter()
        .map(|(part, m)| BigInt::from(part).pow(m as u32) * factorial(m))
        .product()
}

/// `|C_μ| = |μ|!/z_μ`.
pub fn class_size(mu: &Partition) -> BigInt {
    factorial(mu.size()) / z(mu)
}

/// `p_μ` in the monomial basis, multiplying one power sum at a time:
/// `p_k m_ν = Σ_ρ [mult of the new part in ρ] m_ρ`, with `ρ` obtained by
/// adding `k` to one distinct part of `ν` or appending `k`.
pub fn power_to_monomial(mu: &Partition) -> Result<SymFuncExpansion> {
    check_cap("degree", mu.size(), POWER_TO_MONOMIAL_CAP)?;
    let mut current: BTreeMap<Partition, BigInt> =
        BTreeMap::from([(Partition::empty(), BigInt::one())]);
    for &k in mu.parts() {
        let mut next: BTreeMap<Partition, BigInt> = BTreeMap::new();
        for (nu, c) in &current {
            let mut targets: Vec<usize> = nu.parts().to_vec();
            targets.dedup();
            let mut options: Vec<Vec<usize>> = targets
                .iter()
                .map(|&v| {
                    let mut parts = nu.parts().to_vec();
                    let pos = parts.iter().position(|&p| p == v).unwrap();
                    parts[pos] += k;
                    parts
                })
                .collect();
            let mut appended = nu.parts().to_vec();
            appended.push(k);
            options.push(appended);
            for mut parts in options {
                parts.sort_unstable_by(|a, b| b.cmp(a));
                let new_part_mult =
                    |rho: &[usize], v: usize| rho.iter().filter(|&&p| p == v).count();
                let rho = Partition::new(parts).unwrap();
                let added = rho
                    .parts()
                    .iter()
                    .copied()
                    .find(|&v| new_part_mult(rho.parts(), v) > new_part_mult(nu.parts(), v));
                let m = new_part_mult(rho.parts(), added.unwrap());
                *next.entry(rho).or_default() += c * BigInt::from(m);
            }
        }
        current = next;
    }
    Ok(SymFuncExpansion {
        n: mu.size(),
        basis: Basis::Monomial,
        coeffs: current.into_iter().map(|(k, v)| (k, int(v))).collect(),
    })
}

/// Change of basis data for degree `n`.
struct PowerMonomial {
    shapes: Vec<Partition>,
    /// `to_m[μ][ν] = [m_ν] p_μ`
    to_m: Vec<Vec<Rational>>,
    /// `m_ν = Σ_μ from_m[ν][μ] p_μ`
    from_m: Vec<Vec<Rational>>,
}

fn invert(m: &[Vec<Rational>]) -> Vec<Vec<Rational>> {
    let n = m.len();
    let mut a: Vec<Vec<Rational>> = m
        .iter()
        .enumerate()
        .map(|(i, row)| {
            let mut r = row.clone();
            r.extend((0..n).map(|j| {
                if i == j {
                    Rational::one()
                } else {
                    Rational::zero()
                }
            }));
            r
        })
        .collect();
    for col in 0..n {
        let pivot = (col..n)
            .find(|&r| !a[r][col].is_zero())
            .expect("transition matrix is invertible");
        a.swap(col, pivot);
        let inv = Rational::one() / &a[col][col];
        for x in a[col].iter_mut() {
            *x *= &inv;
        }
        for r in 0..n {
            if r != col && !a[r][col].is_zero() {
                let f = a[r][col].clone();
                let pivot_row = a[col].clone();
                for (x, y) in a[r].iter_mut().zip(&pivot_row) {
                    *x -= &f * y;
                }
            }
        }
    }
    a.into_iter().map(|r| r[n..].to_vec()).collect()
}

impl PowerMonomial {
    fn new(n: usize) -> Result<Self> {
        let shapes = partitions_of(n)?;
        let to_m: Vec<Vec<Rational>> = shapes
            .iter()
            .map(|mu| {
                let e = power_to_monomial(mu)?;
                Ok(shapes.iter().map(|nu| e.coeff(nu)).collect())
            })
            .collect::<Result<_>>()?;
        let from_m = invert(&to_m);
        Ok(PowerMonomial {
            shapes,
            to_m,
            from_m,
        })
    }
}

/// `J_λ` at a fixed rational `α`, in the power-sum basis.
///
/// The monomial basis is orthogonalized from the bottom of the
/// reverse-lexicographic order (a linear extension of dominance) under
/// `⟨p_λ, p_μ⟩ = δ α^{ℓ(λ)} z_λ`, then scaled so that `[m_{1^n}] J_λ = n!`.
pub fn jack_in_power_basis(lambda: &Partition, alpha: &Rational) -> Result<SymFuncExpansion> {
    let n = lambda.size();
    check_cap("degree", n, JACK_CAP)?;
    let pm = PowerMonomial::new(n)?;
    let weight: Vec<Rational> = pm
        .shapes
        .iter()
        .map(|mu| alpha.pow(mu.len() as i32) * int(z(mu)))
        .collect();
    let dot = |u: &[Rational], v: &[Rational]| -> Rational {
        u.iter()
            .zip(v)
            .zip(&weight)
            .map(|((a, b), w)| a * b * w)
            .sum()
    };
    let target = pm.shapes.iter().position(|s| s == lambda).unwrap();
    let singular = || Error::SingularParameter(alpha.to_string());
    let mut done: Vec<(Vec<Rational>, Rational)> = Vec::new();
    let mut result = None;
    for idx in (target..pm.shapes.len()).rev() {
        let mut v = pm.from_m[idx].clone();
        for (u, norm) in &done {
            let c = dot(&v, u) / norm;
            for (x, y) in v.iter_mut().zip(u) {
                *x -= &c * y;
            }
        }
        if idx == target {
            result = Some(v);
            break;
        }
        let norm = dot(&v, &v);
        if norm.is_zero() {
            return Err(singular());
        }
        done.push((v, norm));
    }
    let v = result.unwrap();
    let last = pm.shapes.len() - 1;
    let lowest: Rational = v.iter().zip(&pm.to_m).map(|(c, row)| c * &row[last]).sum();
    if lowest.is_zero() {
        return Err(singular());
    }
    let scale = int(factorial(n)) / lowest;
    Ok(SymFuncExpansion {
        n,
        basis: Basis::PowerSum,
        coeffs: pm
            .shapes
            .iter()
            .zip(v)
            .filter(|(_, c)| !c.is_zero())
            .map(|(s, c)| (s.clone(), c * &scale))
            .collect(),
    })
}

/// Rewrites a power-sum expansion in the monomial basis.
pub fn to_monomial_basis(f: &SymFuncExpansion) -> Result<SymFuncExpansion> {
    if f.basis == Basis::Monomial {
        return Ok(f.clone());
    }
    let mut coeffs: BTreeMap<Partition, Rational> = BTreeMap::new();
    for (mu, c) in &f.coeffs {
        for (nu, d) in power_to_monomial(mu)?.coeffs {
            *coeffs.entry(nu).or_insert_with(Rational::zero) += c * d;
        }
    }
    coeffs.retain(|_, c| !c.is_zero());
    Ok(SymFuncExpansion {
        n: f.n,
        basis: Basis::Monomial,
        coeffs,
    })
}

/// `η^λ_α = Σ_{fp(μ) = 0} θ^λ_α(μ)` from the Gram–Schmidt construction.
pub fn eta_via_jack(lambda: &Partition, alpha: &Rational) -> Result<Rational> {
    let j = jack_in_power_basis(lambda, alpha)?;
    Ok(j.coeffs
        .iter()
        .filter(|(mu, _)| mu.fixed_point_free())
        .map(|(_, c)| c.clone())
        .sum())
}

/// Interpolates [`eta_via_jack`] through the given sample points.
pub fn eta_via_jack_interpolated(lambda: &Partition, samples: &[Rational]) -> Result<AlphaPoly> {
    let points = samples
        .iter()
        .map(|a| Ok((a.clone(), eta_via_jack(lambda, a)?)))
        .collect::<Result<Vec<_>>>()?;
    newton_interpolate(&points)
}

/// Beta numbers `λ_i + L - i` for `L = ℓ(λ)`.
fn beta_set(lambda: &Partition) -> Vec<usize> {
    let l = lambda.len();
    (1..=l).map(|i| lambda.part(i) + l - i).collect()
}

fn from_beta(mut beta: Vec<usize>) -> Partition {
    beta.sort_unstable_by(|a, b| b.cmp(a));
    let l = beta.len();
    Partition::new(
        beta.iter()
            .enumerate()
            .map(|(i, b)| b + i + 1 - l)
            .collect(),
    )
    .unwrap()
}

/// Memoized Murnaghan–Nakayama evaluation.
#[derive(Default)]
pub struct CharacterMemo {
    memo: HashMap<(Partition, Partition), i64>,
}

impl CharacterMemo {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn character(&mut self, lambda: &Partition, mu: &Partition) -> Result<i64> {
        if lambda.size() != mu.size() {
            return domain(format!("character of {lambda} on class {mu}: sizes differ"));
        }
        check_cap("degree", lambda.size(), CHARACTER_CAP)?;
        Ok(self.eval(lambda, mu))
    }

    fn eval(&mut self, lambda: &Partition, mu: &Partition) -> i64 {
        if mu.is_empty() {
            return 1;
        }
        let key = (lambda.clone(), mu.clone());
        if let Some(&v) = self.memo.get(&key) {
            return v;
        }
        let r = mu.part(1);
        let rest = Partition::new(mu.parts()[1..].to_vec()).unwrap();
        let beta = beta_set(lambda);
        let mut total = 0i64;
        for (idx, &b) in beta.iter().enumerate() {
            if b < r || beta.contains(&(b - r)) {
                continue;
            }
            let height = beta.iter().filter(|&&x| x > b - r && x < b).count();
            let mut next = beta.clone();
            next[idx] = b - r;
            let v = self.eval(&from_beta(next), &rest);
            total += if height % 2 == 0 { v } else { -v };
        }
        self.memo.insert(key, total);
        total
    }
}

/// `χ^λ(μ)` by the Murnaghan–Nakayama rule.
pub fn mn_character(lambda: &Partition, mu: &Partition) -> Result<i64> {
    CharacterMemo::new().character(lambda, mu)
}

/// Number of standard tableaux by the hook length formula.
pub fn syt_count(lambda: &Partition) -> BigInt {
    let hooks: BigInt = lambda
        .cells()
        .map(|c| BigInt::from(lambda.arm(c) + lambda.leg(c) + 1))
        .product();
    factorial(lambda.size()) / hooks
}

/// Number of standard tableaux of the skew shape `λ/μ`.
pub fn skew_syt_count(lambda: &Partition, mu: &Partition) -> Result<BigInt> {
    if !lambda.contains_shape(mu) {
        return domain(format!("{mu} is not contained in {lambda}"));
    }
    fn count(l: &Partition, mu: &Partition, memo: &mut HashMap<Partition, BigInt>) -> BigInt {
        if l == mu {
            return BigInt::one();
        }
        if let Some(v) = memo.get(l) {
            return v.clone();
        }
        let total = l
            .removable_rows()
            .into_iter()
            .map(|r| l.remove_cell(r))
            .filter(|s| s.contains_shape(mu))
            .map(|s| count(&s, mu, memo))
            .sum();
        memo.insert(l.clone(), total);
        memo[l].clone()
    }
    Ok(count(lambda, mu, &mut HashMap::new()))
}

/// `η^λ_1 = (1/f^λ) Σ_{fp(μ)=0} |C_μ| χ^λ(μ)`.
pub fn eta_via_characters(lambda: &Partition) -> Result<Rational> {
    let n = lambda.size();
    check_cap("degree", n, CHARACTER_ETA_CAP)?;
    let mut memo = CharacterMemo::new();
    let mut total = BigInt::zero();
    for mu in partitions_of(n)?.iter().filter(|m| m.fixed_point_free()) {
        total += class_size(mu) * memo.character(lambda, mu)?;
    }
    Ok(Rational::new(total, syt_count(lambda)))
}

/// The character table of `S_n`, rows and columns in reverse-lexicographic
/// order.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CharacterTable {
    pub format: String,
    pub n: usize,
    pub shapes: Vec<Partition>,
    pub values: Vec<Vec<i64>>,
}

impl CharacterTable {
    pub const FORMAT: &'static str = "jackd-character-table-v1";

    pub fn build(n: usize) -> Result<Self> {
        check_cap("degree", n, CHARACTER_CAP)?;
        let shapes = partitions_of(n)?;
        let mut memo = CharacterMemo::new();
        let values = shapes
            .iter()
            .map(|l| {
                shapes
                    .iter()
                    .map(|m| memo.character(l, m))
                    .collect::<Result<Vec<_>>>()
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(CharacterTable {
            format: Self::FORMAT.to_string(),
            n,
            shapes,
            values,
        })
    }

    pub fn get(&self, lambda: &Partition, mu: &Partition) -> Option<i64> {
        let i = self.shapes.iter().position(|s| s == lambda)?;
        let j = self.shapes.iter().position(|s| s == mu)?;
        Some(self.values[i][j])
    }

    /// Checks the format tag, the index sets, the trivial row and column
    /// orthogonality.
    pub fn is_valid_for(&self, n: usize) -> bool {
        let Ok(shapes) = partitions_of(n) else {
            return false;
        };
        if self.format != Self::FORMAT || self.n != n || self.shapes != shapes {
            return false;
        }
        let k = shapes.len();
        if self.values.len() != k || self.values.iter().any(|r| r.len() != k) {
            return false;
        }
        if self.values[0].iter().any(|&v| v != 1) {
            return false;
        }
        for (a, shape) in shapes.iter().enumerate() {
            for b in 0..k {
                let s: i128 = (0..k)
                    .map(|i| self.values[i][a] as i128 * self.values[i][b] as i128)
                    .sum();
                let expected = if a == b { z(shape) } else { BigInt::zero() };
                if BigInt::from(s) != expected {
                    return false;
                }
            }
        }
        true
    }
}
