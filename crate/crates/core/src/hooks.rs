//! Hook lengths, principal hook products, minors and their sums.

use crate::error::{domain, Result};
use crate::exactalg::{binomial, int, sign, AlphaPoly, XPoly};
use crate::partitions::{Cell, Partition};

/// Which hook length a cell contributes.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum HookFlavor {
    /// `α·a + l + 1`
    Lower,
    /// `α·(a + 1) + l`
    Upper,
}

fn hook_from(arm: usize, leg: usize, flavor: HookFlavor) -> AlphaPoly {
    match flavor {
        HookFlavor::Lower => AlphaPoly::linear(leg as i64 + 1, arm as i64),
        HookFlavor::Upper => AlphaPoly::linear(leg as i64, arm as i64 + 1),
    }
}

fn check_cell(lambda: &Partition, c: Cell) -> Result<()> {
    if lambda.contains(c) {
        Ok(())
    } else {
        domain(format!("cell ({}, {}) lies outside {lambda}", c.row, c.col))
    }
}

pub fn lower_hook(lambda: &Partition, c: Cell) -> Result<AlphaPoly> {
    check_cell(lambda, c)?;
    Ok(hook_from(lambda.arm(c), lambda.leg(c), HookFlavor::Lower))
}

pub fn upper_hook(lambda: &Partition, c: Cell) -> Result<AlphaPoly> {
    check_cell(lambda, c)?;
    Ok(hook_from(lambda.arm(c), lambda.leg(c), HookFlavor::Upper))
}

/// Lower hooks `h_1, ..., h_{λ_1}` of the first row.
pub fn first_row_hooks(lambda: &Partition) -> Vec<AlphaPoly> {
    (1..=lambda.first())
        .map(|j| {
            hook_from(
                lambda.arm(Cell::new(1, j)),
                lambda.leg(Cell::new(1, j)),
                HookFlavor::Lower,
            )
        })
        .collect()
}

/// `H^1_*(λ)`.
pub fn principal_lower_product(lambda: &Partition) -> AlphaPoly {
    first_row_hooks(lambda).into_iter().product()
}

/// `H^1_*(λ, j) = Π_i (h_i - jα)`.
pub fn shifted_principal_product(lambda: &Partition, j: usize) -> AlphaPoly {
    let shift = AlphaPoly::linear(0, j as i64);
    first_row_hooks(lambda).iter().map(|h| h - &shift).product()
}

/// `𝐇(λ, x) = Π_i (h_i - αx)`.
pub fn bold_h(lambda: &Partition) -> XPoly {
    first_row_hooks(lambda)
        .into_iter()
        .map(XPoly::shifted_factor)
        .product()
}

/// Deletes the given 1-based columns.
pub fn minor(lambda: &Partition, cols: &[usize]) -> Result<Partition> {
    if let Some(&c) = cols.iter().find(|&&c| c == 0 || c > lambda.first()) {
        return domain(format!("column {c} is not a column of {lambda}"));
    }
    let heights: Vec<usize> = lambda
        .conjugate()
        .parts()
        .iter()
        .enumerate()
        .filter(|(i, _)| !cols.contains(&(i + 1)))
        .map(|(_, &h)| h)
        .collect();
    Ok(Partition::new(heights)?.conjugate())
}

/// `H^1_*` of a minor, read off the hooks of `λ`: every surviving column
/// loses `α` per deleted column to its right.
pub fn minor_product_from_hooks(lambda: &Partition, cols: &[usize]) -> AlphaPoly {
    first_row_hooks(lambda)
        .iter()
        .enumerate()
        .filter(|(i, _)| !cols.contains(&(i + 1)))
        .map(|(i, h)| {
            let right = cols.iter().filter(|&&c| c > i + 1).count();
            h - &AlphaPoly::linear(0, right as i64)
        })
        .product()
}

/// Sums of `H^1_*` over the minors with `k` columns deleted, for every `k`.
pub fn minor_sums(lambda: &Partition) -> Vec<AlphaPoly> {
    let hooks = first_row_hooks(lambda);
    let n = hooks.len();
    // dp[t]: columns to the right processed, t of them deleted
    let mut dp = vec![AlphaPoly::zero(); n + 1];
    dp[0] = AlphaPoly::one();
    for (seen, h) in hooks.iter().rev().enumerate() {
        for t in (0..=seen + 1).rev() {
            let keep = &dp[t] * &(h - &AlphaPoly::linear(0, t as i64));
            dp[t] = if t > 0 { keep + &dp[t - 1] } else { keep };
        }
    }
    dp
}

/// `Σ_{|S| = k} H^1_*(λ^{-S})`; zero for `k > λ_1`.
pub fn minor_sum(lambda: &Partition, k: usize) -> AlphaPoly {
    minor_sums(lambda).get(k).cloned().unwrap_or_default()
}

/// `Σ_j (-1)^j C(k,j) Π_i (h_i - jα)`, which equals `α^k k!` times
/// [`minor_sum`].
pub fn column_removal_sum(lambda: &Partition, k: usize) -> AlphaPoly {
    (0..=k)
        .map(|j| shifted_principal_product(lambda, j).scale(&(sign(j) * int(binomial(k, j)))))
        .sum()
}

/// `λ` with its last `j` columns deleted.
pub fn remove_last_columns(lambda: &Partition, j: usize) -> Partition {
    let keep = lambda.first().saturating_sub(j);
    Partition::new(lambda.parts().iter().map(|&p| p.min(keep)).collect()).unwrap()
}

/// `f*_λ(j) = Π_{i=0}^{j} ((j+1)α - h_{λ_1 - i})`, and 1 for `j < 0`.
pub fn f_star(lambda: &Partition, j: i64) -> Result<AlphaPoly> {
    if j < 0 {
        return Ok(AlphaPoly::one());
    }
    let j = j as usize;
    if j >= lambda.first() {
        return domain(format!(
            "f* index {j} must be below the first row length {}",
            lambda.first()
        ));
    }
    let hooks = first_row_hooks(lambda);
    let top = AlphaPoly::linear(0, j as i64 + 1);
    Ok((0..=j)
        .map(|i| &top - &hooks[lambda.first() - 1 - i])
        .product())
}

/// Coefficients `c_k` of `𝐇(λ, x)` in the α-falling factorial basis, by the
/// first-column recurrence.
pub fn falling_coeffs(lambda: &Partition) -> Vec<AlphaPoly> {
    if lambda.is_empty() {
        return vec![AlphaPoly::one()];
    }
    let hat = falling_coeffs(&lambda.without_first_column());
    let l1 = lambda.first() as i64;
    let height = lambda.len() as i64;
    (0..=lambda.first())
        .map(|k| {
            let lead = AlphaPoly::linear(height, l1 - 1 - k as i64);
            let a = hat.get(k).map(|c| &lead * c).unwrap_or_default();
            let b = if k > 0 {
                hat[k - 1].clone()
            } else {
                AlphaPoly::zero()
            };
            a - b
        })
        .collect()
}

/// Lower hooks of row `i` of `λ`, each lowered by `jα`, times the hooks of
/// row `i` of the complement `(λ_1 - λ_r)_r` (read in the reversed shape),
/// each raised by `jα`.
///
/// At `j = 0` this is the extended product `H^i_+(λ)`. Complement factors
/// appear with negative sign in `𝐇(λ, x)`, which is why their shift goes up.
pub fn extended_hook_product(
    lambda: &Partition,
    i: usize,
    j: usize,
    complement: HookFlavor,
) -> Result<AlphaPoly> {
    if i == 0 || i > lambda.len().max(1) {
        return domain(format!(
            "row {i} is not a row of {lambda} or its complement"
        ));
    }
    let conj = lambda.conjugate();
    let shift = AlphaPoly::linear(0, j as i64);
    let own: AlphaPoly = (1..=lambda.part(i))
        .map(|c| {
            &hook_from(
                lambda.arm(Cell::new(i, c)),
                lambda.leg(Cell::new(i, c)),
                HookFlavor::Lower,
            ) - &shift
        })
        .product();
    let comp: AlphaPoly = (lambda.part(i) + 1..=lambda.first())
        .map(|c| {
            let arm = c - lambda.part(i) - 1;
            let leg = i - 1 - conj.part(c);
            &hook_from(arm, leg, complement) + &shift
        })
        .product();
    Ok(own * comp)
}

/// `(-1)^k` times an [`AlphaPoly`].
pub(crate) fn signed(p: AlphaPoly, k: usize) -> AlphaPoly {
    if k.is_multiple_of(2) {
        p
    } else {
        -p
    }
}
