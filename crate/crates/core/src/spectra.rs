//! Closed and semi-closed evaluations of η, immanants and spectrum tables.

use std::fmt;
use std::str::FromStr;

use itertools::Itertools;
use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::colored::{
    jack_derangement_number, rencontres, rencontres_classical, rencontres_prob,
    subcube_fixing_formula,
};
use crate::error::{check_cap, domain, Error, Result};
use crate::exactalg::{
    binomial, det_exact, factorial, int, newton_interpolate, rat, sign, AlphaPoly, Rational,
};
use crate::hooks::{
    extended_hook_product, minor_sums, shifted_principal_product, signed, HookFlavor,
};
use crate::jack_oracle::{skew_syt_count, syt_count, CharacterMemo};
use crate::partitions::{lattice_rows, partitions_of, Partition};

/// Largest `n` for [`spectrum_table`] at symbolic or scalar `α`.
pub const SPECTRUM_CAP: usize = 12;
/// Largest `n` for [`spectrum_table`] at `α = 2`.
pub const SPECTRUM_MATCHING_CAP: usize = 8;
/// Largest degree for [`immanant_polynomial`].
pub const IMMANANT_CAP: usize = 9;
/// Largest degree for [`d_lambda_direct`].
pub const DIRECT_IMMANANT_CAP: usize = 8;
/// Largest first row handled by colored enumeration under [`Method::Auto`].
const AUTO_COLORED_WIDTH: usize = 6;

fn sign_of(lambda: &Partition) -> usize {
    lambda.size() - lambda.first()
}

/// `η^λ_α` by colored derangement enumeration.
pub fn eta(lambda: &Partition) -> Result<AlphaPoly> {
    Ok(signed(jack_derangement_number(lambda)?, sign_of(lambda)))
}

/// `η^λ_α` as the alternating sum of minor sums.
pub fn eta_minor_sum(lambda: &Partition) -> AlphaPoly {
    let total: AlphaPoly = minor_sums(lambda)
        .into_iter()
        .enumerate()
        .map(|(k, s)| signed(s, k))
        .sum();
    signed(total, sign_of(lambda))
}

/// `η^λ_0 = (-1)^{|λ|-λ_1} Π_i (λ'_i - 1)`.
pub fn eta_alpha0(lambda: &Partition) -> Rational {
    let prod: BigInt = lambda
        .conjugate()
        .parts()
        .iter()
        .map(|&h| BigInt::from(h) - 1)
        .product();
    sign(sign_of(lambda)) * int(prod)
}

/// `(-1)^{|λ|-λ_1} (α^n n!)^{-1} Σ_j d^{(α)}_{n,j} H^1_*(λ, j)` at one `α`.
pub fn eta_rencontres_at(lambda: &Partition, n: usize, alpha: &Rational) -> Result<Rational> {
    if n < lambda.first() {
        return domain(format!(
            "rencontres order {n} is below the first row of {lambda}"
        ));
    }
    let mut total = Rational::zero();
    for j in 0..=n {
        total += rencontres(n, j, alpha)? * shifted_principal_product(lambda, j).eval(alpha);
    }
    Ok(sign(sign_of(lambda)) * total / (alpha.pow(n as i32) * int(factorial(n))))
}

/// [`eta_rencontres_at`] sampled at `α = 1, ..., λ_1 + 1` and interpolated.
pub fn eta_rencontres(lambda: &Partition, n: usize) -> Result<AlphaPoly> {
    let points = (1..=lambda.first() as i64 + 1)
        .map(|a| {
            let alpha = rat(a);
            let v = eta_rencontres_at(lambda, n, &alpha)?;
            if !v.is_integer() {
                return Err(Error::Inexact(format!("{lambda} at alpha = {a} gave {v}")));
            }
            Ok((alpha, v))
        })
        .collect::<Result<Vec<_>>>()?;
    newton_interpolate(&points)
}

/// Classical `p_{n,k} = d_{n,k}/n!`.
fn p1(n: usize, k: usize) -> Rational {
    Rational::new(rencontres_classical(n, k), factorial(n))
}

fn p2(n: usize, k: usize) -> Rational {
    rencontres_prob(n, k, &rat(2)).expect("alpha = 2 is nonzero")
}

/// `H^i_+(λ)` at `α = 1`.
fn extended_at_one(lambda: &Partition, i: usize) -> Rational {
    extended_hook_product(lambda, i, 0, HookFlavor::Lower)
        .expect("lattice rows are rows of the shape")
        .eval(&rat(1))
}

/// `η^λ_1 = (-1)^n Σ_{i-1 ≤ λ_i} (-1)^{λ_i} p_{λ_1, λ_1-λ_i+i-1} H^i_+(λ)`.
pub fn eta1_closed(lambda: &Partition) -> Rational {
    if lambda.is_empty() {
        return Rational::one();
    }
    let l1 = lambda.first();
    let total: Rational = lattice_rows(lambda)
        .into_iter()
        .map(|i| {
            let li = lambda.part(i);
            sign(li) * p1(l1, l1 - li + i - 1) * extended_at_one(lambda, i)
        })
        .sum();
    sign(lambda.size()) * total
}

/// Two-row shape `(n-k, k)`:
/// `((-1)^k d_{n-k+1,1} + (-1)^{n-k} d_{k,1}) / (n-2k+1)`.
pub fn eta1_two_row(n: usize, k: usize) -> Result<Rational> {
    if 2 * k > n {
        return domain(format!("({}, {k}) is not a partition", n as i64 - k as i64));
    }
    let top = sign(k) * int(rencontres_classical(n - k + 1, 1))
        + sign(n - k) * int(rencontres_classical(k, 1));
    Ok(top / rat((n - 2 * k + 1) as i64))
}

/// Three-row shape, as a sum of three shifted derangement ratios
/// with `d'_{m,2} = 2 d_{m,2}`.
pub fn eta1_three_row(lambda: &Partition) -> Result<Rational> {
    if lambda.len() != 3 {
        return domain(format!("{lambda} does not have three rows"));
    }
    let (a, b, c) = (
        lambda.part(1) as i64,
        lambda.part(2) as i64,
        lambda.part(3) as i64,
    );
    let n = lambda.size();
    let dp = |m: i64| rat(2) * int(rencontres_classical(m as usize, 2));
    let term = |s: i64, num: Rational, x: i64, y: i64| sign(n - s as usize) * num / rat(x * y);
    Ok(term(a, dp(a + 2), a - c + 2, a - b + 1)
        + term(b, dp(b + 1), a - b + 1, b - c + 1)
        + term(c, dp(c), a - c + 2, b - c + 1))
}

fn renteln_ratio(lambda: &Partition, literal: bool) -> Rational {
    let l = lambda.len();
    if l == 0 {
        return Rational::one();
    }
    let lead = if literal {
        lambda.first()
    } else {
        lambda.size()
    };
    let xs: Vec<Rational> = (1..=l)
        .map(|k| rat(lambda.part(k) as i64 - k as i64))
        .collect();
    let w: Vec<Vec<Rational>> = (1..=l)
        .map(|k| {
            let lk = lambda.part(k);
            let first = sign(lead - lk + k - 1)
                * int(factorial(l - 1) * rencontres_classical(lk + l - k, l - 1));
            std::iter::once(first)
                .chain((0..l - 1).rev().map(|e| xs[k - 1].pow(e as i32)))
                .collect()
        })
        .collect();
    let v: Vec<Vec<Rational>> = xs
        .iter()
        .map(|x| {
            let powers: Vec<Rational> = (0..l).map(|e| x.pow(e as i32)).collect();
            if literal {
                powers
            } else {
                powers.into_iter().rev().collect()
            }
        })
        .collect();
    det_exact(&w).expect("square matrix") / det_exact(&v).expect("square matrix")
}

/// `η^λ_1 = det W(λ) / det V(λ)`.
///
/// Row `k` of `W` is `((-1)^{|λ|-λ_k+k-1} d'_{λ_k+ℓ-k, ℓ-1}, x_k^{ℓ-2}, ..., 1)`
/// with `x_k = λ_k - k` and `d'_{m,r} = r! d_{m,r}`, and
/// `V = (x_i^{ℓ-j})` is the Vandermonde matrix in the same column order.
pub fn eta1_det(lambda: &Partition) -> Rational {
    renteln_ratio(lambda, false)
}

/// The same ratio with first-column signs `(-1)^{λ_1-λ_k+k-1}` and
/// `V = (x_i^{j-1})`; equals `(-1)^{|λ|-λ_1+C(ℓ,2)} η^λ_1`.
pub fn eta1_det_literal(lambda: &Partition) -> Rational {
    renteln_ratio(lambda, true)
}

/// Summand of the `α = 2` closed form for row pair `i`, shift `j`.
fn eta2_term(lambda: &Partition, i: usize, j: usize) -> Rational {
    let l1 = lambda.first();
    let r = 2 * i - 1;
    let off = l1 - lambda.part(r) + i - 1;
    let ext = extended_hook_product(lambda, r, j, HookFlavor::Upper)
        .expect("odd row lies in the shape")
        .eval(&rat(2));
    sign(j) * p2(l1, off + j) * ext.abs()
}

fn eta2_sum(
    lambda: &Partition,
    rows: impl Fn(usize) -> bool,
    shifts: impl Fn(usize, usize, usize) -> bool,
) -> Rational {
    if lambda.is_empty() {
        return Rational::one();
    }
    let mut total = Rational::zero();
    for i in (1..).take_while(|&i| 2 * i - 1 <= lambda.len().max(1)) {
        if !rows(i) {
            continue;
        }
        let r = 2 * i - 1;
        let inner: Rational = (0..=lambda.part(r) - lambda.part(r + 1))
            .filter(|&j| shifts(i, j, lambda.first() - lambda.part(r) + i - 1))
            .map(|j| eta2_term(lambda, i, j))
            .sum();
        total += sign(lambda.part(r)) * inner;
    }
    sign(lambda.size()) * total
}

/// `η^λ_2` from shifted extended hook products over pairs of rows.
///
/// Row pair `i` contributes when `i - 1 ≤ λ_{2i-1}`, with shifts
/// `0 ≤ j ≤ λ_{2i-1} - λ_{2i}` and `λ_1 - λ_{2i-1} + i - 1 + j ≤ λ_1`.
pub fn eta2_closed(lambda: &Partition) -> Rational {
    eta2_sum(
        lambda,
        |i| i - 1 <= lambda.part(2 * i - 1),
        |_, j, off| off + j <= lambda.first(),
    )
}

/// The same sum with row bound `2i - 1 ≤ λ_{2i-1} + 1` and shift bound
/// `2i - 1 + j ≤ λ_1`.
pub fn eta2_closed_literal(lambda: &Partition) -> Rational {
    eta2_sum(
        lambda,
        |i| 2 * i - 1 <= lambda.part(2 * i - 1) + 1,
        |i, j, _| 2 * i - 1 + j <= lambda.first(),
    )
}

/// Two-row shape `(n-k, k)` at `α = 2`:
/// `(-1)^k Σ_i C(k,i) (2i-1)!! |D'_{2(n-k-i)}|`.
pub fn eta2_two_row(n: usize, k: usize) -> Result<Rational> {
    if 2 * k > n {
        return domain(format!("({}, {k}) is not a partition", n as i64 - k as i64));
    }
    Ok(sign(k) * int(subcube_fixing_formula(n - k, k)?))
}

/// `η^λ_2` for shapes whose columns all have even height, from the odd rows
/// `μ`: `Σ_{i-1 ≤ μ_i} (-1)^{μ_i} p^{(2)}_{μ_1, μ_1-μ_i+i-1} 2^{μ_1} H^i_+(μ)`.
pub fn eta2_doubly_even(lambda: &Partition) -> Result<Rational> {
    if lambda.conjugate().parts().iter().any(|h| h % 2 == 1) {
        return domain(format!("{lambda} has a column of odd height"));
    }
    let mu = lambda.odd_rows();
    if mu.is_empty() {
        return Ok(Rational::one());
    }
    let m1 = mu.first();
    let scale = int(BigInt::from(2).pow(m1 as u32));
    Ok(lattice_rows(&mu)
        .into_iter()
        .map(|i| {
            let mi = mu.part(i);
            sign(mi) * p2(m1, m1 - mi + i - 1) * &scale * extended_at_one(&mu, i)
        })
        .sum())
}

/// `d_λ = Σ_{π ∈ D_n} χ^λ(π) = f^λ η^λ_1`.
pub fn d_lambda(lambda: &Partition) -> BigInt {
    (int(syt_count(lambda)) * eta1_closed(lambda)).to_integer()
}

/// [`d_lambda`] summed over the derangements of `[n]` one by one.
pub fn d_lambda_direct(lambda: &Partition) -> Result<BigInt> {
    let n = lambda.size();
    check_cap("degree", n, DIRECT_IMMANANT_CAP)?;
    let mut memo = CharacterMemo::new();
    let mut total = BigInt::zero();
    for perm in (0..n).permutations(n) {
        if perm.iter().enumerate().any(|(i, &p)| i == p) {
            continue;
        }
        total += memo.character(lambda, &cycle_type(&perm))?;
    }
    Ok(total)
}

/// Cycle type of a permutation in one-line notation.
pub fn cycle_type(perm: &[usize]) -> Partition {
    let mut seen = vec![false; perm.len()];
    let mut lens = Vec::new();
    for start in 0..perm.len() {
        let mut len = 0;
        let mut i = start;
        while !seen[i] {
            seen[i] = true;
            i = perm[i];
            len += 1;
        }
        if len > 0 {
            lens.push(len);
        }
    }
    lens.sort_unstable_by(|a, b| b.cmp(a));
    Partition::new(lens).unwrap()
}

/// Hook shape `(j, 1^{n-j})`: `(-1)^{n-j} C(n,j) |D_j| + (-1)^{n-1} C(n-1,j)`.
pub fn d_hook(n: usize, j: usize) -> Result<BigInt> {
    if j == 0 || j > n {
        return domain(format!(
            "({j}, 1^{}) is not a hook of size {n}",
            n as i64 - j as i64
        ));
    }
    let first = binomial(n, j) * rencontres_classical(j, 0);
    let second = binomial(n - 1, j);
    let s = |k: usize| {
        if k.is_multiple_of(2) {
            BigInt::one()
        } else {
            -BigInt::one()
        }
    };
    Ok(s(n - j) * first + s(n - 1) * second)
}

/// Coefficients of `x^0, ..., x^n` in `Imm_λ(xI - K_n) / f^λ`, via branching:
/// `[x^k] = (-1)^{n-k} C(n,k) / f^λ Σ_{μ ⊢ n-k} f^{λ/μ} f^μ η^μ_1`.
pub fn immanant_polynomial(lambda: &Partition) -> Result<Vec<Rational>> {
    let n = lambda.size();
    check_cap("degree", n, IMMANANT_CAP)?;
    let f = int(syt_count(lambda));
    (0..=n)
        .map(|k| {
            let mut inner = Rational::zero();
            for mu in partitions_of(n - k)?
                .iter()
                .filter(|m| lambda.contains_shape(m))
            {
                inner += int(skew_syt_count(lambda, mu)? * syt_count(mu)) * eta1_closed(mu);
            }
            Ok(sign(n - k) * int(binomial(n, k)) * inner / &f)
        })
        .collect()
}

/// A value of the Jack parameter: an indeterminate or a rational.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(into = "String", try_from = "String")]
pub enum AlphaSpec {
    Symbolic,
    Value(Rational),
}

impl AlphaSpec {
    fn is(&self, v: i64) -> bool {
        matches!(self, AlphaSpec::Value(a) if *a == rat(v))
    }
}

impl fmt::Display for AlphaSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            AlphaSpec::Symbolic => f.write_str("sym"),
            AlphaSpec::Value(a) => write!(f, "{a}"),
        }
    }
}

impl FromStr for AlphaSpec {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s.trim() {
            "sym" => Ok(AlphaSpec::Symbolic),
            other => Ok(AlphaSpec::Value(crate::exactalg::parse_rational(other)?)),
        }
    }
}

impl From<AlphaSpec> for String {
    fn from(a: AlphaSpec) -> String {
        a.to_string()
    }
}

impl TryFrom<String> for AlphaSpec {
    type Error = Error;
    fn try_from(s: String) -> Result<Self> {
        s.parse()
    }
}

/// An η value: a polynomial in `α` or a number.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(into = "String", try_from = "String")]
pub enum EtaValue {
    Poly(AlphaPoly),
    Value(Rational),
}

impl fmt::Display for EtaValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            EtaValue::Poly(p) => write!(f, "{p}"),
            EtaValue::Value(v) => write!(f, "{v}"),
        }
    }
}

impl FromStr for EtaValue {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        if s.contains("*a^") {
            Ok(EtaValue::Poly(s.parse()?))
        } else {
            Ok(EtaValue::Value(crate::exactalg::parse_rational(s)?))
        }
    }
}

impl From<EtaValue> for String {
    fn from(v: EtaValue) -> String {
        v.to_string()
    }
}

impl TryFrom<String> for EtaValue {
    type Error = Error;
    fn try_from(s: String) -> Result<Self> {
        s.parse()
    }
}

/// Route used to evaluate η.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Method {
    Auto,
    Colored,
    Minors,
    Rencontres,
    Closed1,
    Det1,
    Closed2,
}

impl Method {
    pub const ALL: [Method; 7] = [
        Method::Auto,
        Method::Colored,
        Method::Minors,
        Method::Rencontres,
        Method::Closed1,
        Method::Det1,
        Method::Closed2,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Method::Auto => "auto",
            Method::Colored => "colored",
            Method::Minors => "minors",
            Method::Rencontres => "rencontres",
            Method::Closed1 => "closed1",
            Method::Det1 => "det1",
            Method::Closed2 => "closed2",
        }
    }
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Method {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Method::ALL
            .into_iter()
            .find(|m| m.name() == s)
            .ok_or_else(|| Error::Parse(format!("method {s:?}")))
    }
}

fn at(alpha: &AlphaSpec, p: AlphaPoly) -> EtaValue {
    match alpha {
        AlphaSpec::Symbolic => EtaValue::Poly(p),
        AlphaSpec::Value(a) => EtaValue::Value(p.eval(a)),
    }
}

/// Evaluates η by the chosen route.
pub fn eta_with(lambda: &Partition, alpha: &AlphaSpec, method: Method) -> Result<EtaValue> {
    let fixed = |v: i64| {
        if alpha.is(v) {
            Ok(())
        } else {
            domain(format!("method requires alpha = {v}, got {alpha}"))
        }
    };
    match method {
        Method::Auto => match alpha {
            AlphaSpec::Symbolic if lambda.first() <= AUTO_COLORED_WIDTH => {
                eta_with(lambda, alpha, Method::Colored)
            }
            _ if alpha.is(1) => eta_with(lambda, alpha, Method::Closed1),
            _ if alpha.is(2) => eta_with(lambda, alpha, Method::Closed2),
            _ => eta_with(lambda, alpha, Method::Minors),
        },
        Method::Colored => Ok(at(alpha, eta(lambda)?)),
        Method::Minors => Ok(at(alpha, eta_minor_sum(lambda))),
        Method::Rencontres => match alpha {
            AlphaSpec::Symbolic => Ok(EtaValue::Poly(eta_rencontres(lambda, lambda.first())?)),
            AlphaSpec::Value(a) => Ok(EtaValue::Value(eta_rencontres_at(
                lambda,
                lambda.first(),
                a,
            )?)),
        },
        Method::Closed1 => fixed(1).map(|_| EtaValue::Value(eta1_closed(lambda))),
        Method::Det1 => fixed(1).map(|_| EtaValue::Value(eta1_det(lambda))),
        Method::Closed2 => fixed(2).map(|_| EtaValue::Value(eta2_closed(lambda))),
    }
}

/// One eigenvalue of a spectrum table.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SpectrumRow {
    pub shape: Partition,
    pub eta: EtaValue,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub mult: Option<u64>,
}

/// `{η^λ}_{λ ⊢ n}` with multiplicities at `α ∈ {1, 2}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SpectrumTable {
    pub n: usize,
    pub alpha: AlphaSpec,
    pub rows: Vec<SpectrumRow>,
}

/// Multiplicity of `η^λ` in the derangement graph spectrum: `(f^λ)²` at
/// `α = 1` and `f^{2λ}` at `α = 2`.
pub fn multiplicity(lambda: &Partition, alpha: &AlphaSpec) -> Option<u64> {
    if alpha.is(1) {
        (syt_count(lambda).pow(2u32)).to_u64()
    } else if alpha.is(2) {
        syt_count(&lambda.doubled()).to_u64()
    } else {
        None
    }
}

/// One row per `λ ⊢ n` in reverse-lexicographic order.
pub fn spectrum_table(n: usize, alpha: &AlphaSpec, method: Method) -> Result<SpectrumTable> {
    let cap = if alpha.is(2) {
        SPECTRUM_MATCHING_CAP
    } else {
        SPECTRUM_CAP
    };
    check_cap("n", n, cap)?;
    let rows = partitions_of(n)?
        .into_par_iter()
        .map(|shape| {
            let eta = eta_with(&shape, alpha, method)?;
            let mult = multiplicity(&shape, alpha);
            Ok(SpectrumRow { shape, eta, mult })
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(SpectrumTable {
        n,
        alpha: alpha.clone(),
        rows,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::colored::{hyperoctahedral_counts, matching_derangement_count};
    use crate::exactalg::ratio;
    use crate::partitions::tests::arb_partition;
    use crate::transversals::shifted_jack_onerow;
    use proptest::prelude::*;

    fn p(s: &str) -> Partition {
        s.parse().unwrap()
    }

    fn one() -> Rational {
        rat(1)
    }

    #[test]
    fn eta_examples() {
        assert_eq!(eta(&p("2,1")).unwrap(), AlphaPoly::linear(0, -1));
        assert_eq!(eta(&p("3,2")).unwrap(), AlphaPoly::from_ints(&[0, 2, 2]));
        assert_eq!(eta(&p("10,6,3,1")).unwrap().eval(&one()), rat(4242315));
        assert_eq!(eta(&Partition::empty()).unwrap(), AlphaPoly::one());
    }

    #[test]
    fn minor_sum_examples() {
        assert_eq!(eta_minor_sum(&p("2,1")), AlphaPoly::linear(0, -1));
        assert_eq!(eta_minor_sum(&p("1,1")), AlphaPoly::int(-1));
        for n in 1..=8 {
            let col = eta_minor_sum(&Partition::column(n)).eval(&rat(0));
            assert_eq!(col, sign(n - 1) * rat(n as i64 - 1));
        }
    }

    #[test]
    fn alpha0_examples() {
        assert_eq!(eta_alpha0(&p("2,1")), rat(0));
        assert_eq!(eta_alpha0(&p("2,2")), rat(1));
        for n in 1..=8 {
            assert_eq!(
                eta_alpha0(&Partition::column(n)),
                sign(n - 1) * rat(n as i64 - 1)
            );
        }
    }

    #[test]
    fn rencontres_examples() {
        assert_eq!(eta_rencontres_at(&p("2,1"), 2, &one()).unwrap(), rat(-1));
        for n in 1..=7 {
            let d = rencontres_classical(n, 0);
            assert_eq!(
                eta_rencontres_at(&Partition::row(n), n, &one()).unwrap(),
                int(d)
            );
        }
        assert_eq!(
            eta_rencontres(&p("3,2"), 3).unwrap(),
            eta_rencontres(&p("3,2"), 5).unwrap()
        );
        assert_eq!(
            eta_rencontres(&p("3,2"), 3).unwrap(),
            eta(&p("3,2")).unwrap()
        );
        assert!(eta_rencontres_at(&p("3,2"), 2, &one()).is_err());
        assert!(eta_rencontres_at(&p("3,2"), 3, &rat(0)).is_err());
    }

    #[test]
    fn closed_form_examples() {
        let big = p("10,6,3,1");
        assert_eq!(eta1_closed(&big), rat(4242315));
        assert_eq!(eta1_det(&big), rat(4242315));
        assert_eq!(lattice_rows(&big), vec![1, 2, 3]);
        let known = Rational::new(factorial(13), BigInt::from(12 * 9 * 5));
        assert_eq!(extended_at_one(&big, 1), known);
        assert_eq!(
            extended_at_one(&big, 2),
            Rational::new(factorial(8) * factorial(4), BigInt::from(7 * 4))
        );
        assert_eq!(p1(10, 9), rat(0));
        for n in 1..=9 {
            assert_eq!(
                eta1_closed(&Partition::row(n)),
                int(rencontres_classical(n, 0))
            );
            assert_eq!(
                eta1_det(&Partition::row(n)),
                int(rencontres_classical(n, 0))
            );
        }
        assert_eq!(eta1_closed(&p("2,2")), rat(3));
        assert_eq!(eta1_det(&p("2,1")), rat(-1));
    }

    #[test]
    fn row_formulas() {
        assert_eq!(eta1_two_row(5, 2).unwrap(), rat(4));
        for n in 2..=10 {
            let d = int(rencontres_classical(n, 0));
            assert_eq!(eta1_two_row(n, 1).unwrap(), -d / rat(n as i64 - 1));
        }
        assert_eq!(
            eta1_three_row(&p("2,2,2")).unwrap(),
            eta(&p("2,2,2")).unwrap().eval(&one())
        );
        assert!(eta1_two_row(3, 2).is_err());
        assert!(eta1_three_row(&p("2,2")).is_err());
    }

    #[test]
    fn row_formulas_match_closed_form() {
        for n in 0..=12 {
            for l in partitions_of(n).unwrap() {
                let closed = eta1_closed(&l);
                if l.len() <= 2 {
                    assert_eq!(eta1_two_row(n, l.part(2)).unwrap(), closed, "{l}");
                }
                if l.len() == 3 {
                    assert_eq!(eta1_three_row(&l).unwrap(), closed, "{l}");
                }
            }
        }
    }

    #[test]
    fn alpha2_examples() {
        assert_eq!(eta2_closed(&p("2")), rat(2));
        assert_eq!(eta2_closed(&p("1,1")), rat(-1));
        assert_eq!(eta2_closed(&p("2,2")), rat(5));
        assert_eq!(eta2_two_row(4, 2).unwrap(), rat(5));
        assert_eq!(eta2_doubly_even(&p("2,2")).unwrap(), rat(5));
        assert_eq!(eta2_doubly_even(&p("1,1,1,1")).unwrap(), rat(-3));
        assert!(eta2_doubly_even(&p("2,1")).is_err());
        for m in 1..=5 {
            let e = hyperoctahedral_counts(m).unwrap().derangements;
            assert_eq!(eta2_two_row(2 * m, m).unwrap(), sign(m) * int(e));
        }
        for n in 1..=8 {
            assert_eq!(
                eta2_closed(&Partition::row(n)),
                int(matching_derangement_count(n).unwrap())
            );
        }
    }

    #[test]
    fn alpha2_routes_agree() {
        for n in 0..=8 {
            for l in partitions_of(n).unwrap() {
                let truth = eta_minor_sum(&l).eval(&rat(2));
                assert_eq!(eta2_closed(&l), truth, "{l}");
                if l.len() <= 2 {
                    assert_eq!(eta2_two_row(n, l.part(2)).unwrap(), truth, "{l}");
                }
                if let Ok(v) = eta2_doubly_even(&l) {
                    assert_eq!(v, truth, "{l}");
                }
            }
        }
    }

    #[test]
    fn lower_complement_flavor_fails() {
        let lower = |l: &Partition| -> Rational {
            let l1 = l.first();
            let mut total = Rational::zero();
            for i in (1..).take_while(|&i| 2 * i - 1 <= l.len()) {
                let r = 2 * i - 1;
                if i - 1 > l.part(r) {
                    continue;
                }
                let off = l1 - l.part(r) + i - 1;
                for j in (0..=l.part(r) - l.part(r + 1)).filter(|j| off + j <= l1) {
                    let ext = extended_hook_product(l, r, j, HookFlavor::Lower)
                        .unwrap()
                        .eval(&rat(2));
                    total += sign(l.part(r)) * sign(j) * p2(l1, off + j) * ext.abs();
                }
            }
            sign(l.size()) * total
        };
        let mismatched = partitions_of(6)
            .unwrap()
            .iter()
            .filter(|l| lower(l) != eta_minor_sum(l).eval(&rat(2)))
            .count();
        assert!(mismatched > 0);
    }

    #[test]
    fn immanant_examples() {
        assert_eq!(d_lambda(&p("1,1,1,1")), BigInt::from(-3));
        assert_eq!(d_lambda(&p("2,1")), BigInt::from(-2));
        assert_eq!(d_hook(4, 2).unwrap(), BigInt::from(3));
        assert_eq!(d_lambda(&p("2,1,1")), BigInt::from(3));
        assert_eq!(
            immanant_polynomial(&p("2")).unwrap(),
            vec![rat(1), rat(0), rat(1)]
        );
        assert!(d_hook(3, 0).is_err());
    }

    #[test]
    fn immanants_match_direct_sums() {
        for n in 1..=6 {
            for l in partitions_of(n).unwrap() {
                assert_eq!(d_lambda(&l), d_lambda_direct(&l).unwrap(), "{l}");
            }
            let expected = {
                // (x - n + 1)(x + 1)^{n-1}
                let mut c = vec![rat(1)];
                for _ in 0..n - 1 {
                    c = std::iter::once(c[0].clone())
                        .chain((1..c.len()).map(|k| &c[k] + &c[k - 1]))
                        .chain(std::iter::once(c[c.len() - 1].clone()))
                        .collect();
                }
                let shift = rat(1 - n as i64);
                let mut out = vec![Rational::zero(); n + 1];
                for (k, a) in c.iter().enumerate() {
                    out[k + 1] += a;
                    out[k] += a * &shift;
                }
                out
            };
            assert_eq!(
                immanant_polynomial(&Partition::column(n)).unwrap(),
                expected
            );
        }
        for n in 1..=8 {
            for j in 1..=n {
                let mut parts = vec![j];
                parts.extend(std::iter::repeat_n(1, n - j));
                assert_eq!(
                    d_hook(n, j).unwrap(),
                    d_lambda(&Partition::new(parts).unwrap())
                );
            }
        }
    }

    #[test]
    fn spectrum_examples() {
        let t = spectrum_table(3, &AlphaSpec::Value(one()), Method::Auto).unwrap();
        let got: Vec<(String, String, Option<u64>)> = t
            .rows
            .iter()
            .map(|r| (r.shape.to_string(), r.eta.to_string(), r.mult))
            .collect();
        assert_eq!(
            got,
            vec![
                ("3".into(), "2".into(), Some(1)),
                ("2,1".into(), "-1".into(), Some(4)),
                ("1,1,1".into(), "2".into(), Some(1)),
            ]
        );
        let t = spectrum_table(2, &AlphaSpec::Value(rat(2)), Method::Auto).unwrap();
        let got: Vec<(String, Option<u64>)> =
            t.rows.iter().map(|r| (r.eta.to_string(), r.mult)).collect();
        assert_eq!(got, vec![("2".into(), Some(1)), ("-1".into(), Some(2))]);
        let t = spectrum_table(4, &AlphaSpec::Symbolic, Method::Auto).unwrap();
        assert_eq!(
            t.rows[0].eta,
            EtaValue::Poly(AlphaPoly::from_ints(&[0, 0, 3, 6]))
        );
        assert!(t.rows.iter().all(|r| r.mult.is_none()));
        assert!(spectrum_table(9, &AlphaSpec::Value(rat(2)), Method::Auto).is_err());
    }

    #[test]
    fn multiplicities_sum_to_vertex_counts() {
        for n in 1..=8 {
            let shapes = partitions_of(n).unwrap();
            let s1: u64 = shapes
                .iter()
                .map(|l| multiplicity(l, &AlphaSpec::Value(rat(1))).unwrap())
                .sum();
            let s2: u64 = shapes
                .iter()
                .map(|l| multiplicity(l, &AlphaSpec::Value(rat(2))).unwrap())
                .sum();
            assert_eq!(BigInt::from(s1), factorial(n));
            assert_eq!(BigInt::from(s2), crate::exactalg::odd_double_factorial(n));
        }
    }

    #[test]
    fn json_form() {
        let t = spectrum_table(2, &AlphaSpec::Value(one()), Method::Auto).unwrap();
        let s = serde_json::to_string(&t).unwrap();
        assert_eq!(
            s,
            r#"{"n":2,"alpha":"1","rows":[{"shape":"2","eta":"1","mult":1},{"shape":"1,1","eta":"-1","mult":1}]}"#
        );
        assert_eq!(serde_json::from_str::<SpectrumTable>(&s).unwrap(), t);
        let t = spectrum_table(4, &AlphaSpec::Symbolic, Method::Minors).unwrap();
        let s = serde_json::to_string(&t).unwrap();
        assert_eq!(serde_json::from_str::<SpectrumTable>(&s).unwrap(), t);
    }

    #[test]
    fn method_dispatch() {
        let l = p("3,2,1");
        let one = AlphaSpec::Value(rat(1));
        let two = AlphaSpec::Value(rat(2));
        let v = eta_with(&l, &one, Method::Colored).unwrap();
        for m in [
            Method::Auto,
            Method::Minors,
            Method::Rencontres,
            Method::Closed1,
            Method::Det1,
        ] {
            assert_eq!(eta_with(&l, &one, m).unwrap(), v, "{m}");
        }
        let v = eta_with(&l, &two, Method::Colored).unwrap();
        for m in [
            Method::Auto,
            Method::Minors,
            Method::Rencontres,
            Method::Closed2,
        ] {
            assert_eq!(eta_with(&l, &two, m).unwrap(), v, "{m}");
        }
        assert!(eta_with(&l, &AlphaSpec::Symbolic, Method::Closed1).is_err());
        assert!(eta_with(&l, &two, Method::Det1).is_err());
        assert!(eta_with(&l, &one, Method::Closed2).is_err());
        let half = AlphaSpec::Value(ratio(1, 2));
        assert_eq!(
            eta_with(&l, &half, Method::Auto).unwrap(),
            eta_with(&l, &half, Method::Rencontres).unwrap()
        );
        assert_eq!("sym".parse::<AlphaSpec>().unwrap(), AlphaSpec::Symbolic);
        assert_eq!(
            "3/6".parse::<AlphaSpec>().unwrap(),
            AlphaSpec::Value(ratio(1, 2))
        );
        assert!("x".parse::<AlphaSpec>().is_err());
        assert_eq!("det1".parse::<Method>().unwrap(), Method::Det1);
    }

    #[test]
    fn symbolic_routes_agree() {
        for n in 0..=7 {
            for l in partitions_of(n).unwrap() {
                let e = eta(&l).unwrap();
                assert_eq!(eta_minor_sum(&l), e, "{l}");
                assert_eq!(eta_rencontres(&l, l.first()).unwrap(), e, "{l}");
                let tr: AlphaPoly = (0..=l.first())
                    .map(|k| signed(shifted_jack_onerow(&l, k), n - k))
                    .sum();
                assert_eq!(tr, e, "{l}");
            }
        }
    }

    proptest! {
        #[test]
        fn alpha1_routes_agree(l in arb_partition(12)) {
            let v = eta_minor_sum(&l).eval(&rat(1));
            prop_assert_eq!(eta1_closed(&l), v.clone());
            prop_assert_eq!(eta1_det(&l), v.clone());
            let flip = sign(sign_of(&l) + l.len() * l.len().saturating_sub(1) / 2);
            prop_assert_eq!(eta1_det_literal(&l), flip * v);
        }

        #[test]
        fn signs_alternate(l in arb_partition(9), a in prop::sample::select(vec![ratio(1, 2), rat(1), rat(2), rat(3)])) {
            prop_assume!(l.size() >= 2);
            let v = eta_minor_sum(&l).eval(&a);
            prop_assert!(v.is_positive() == sign_of(&l).is_multiple_of(2));
            let z = eta_alpha0(&l);
            prop_assert!(z.is_zero() || z.is_positive() == sign_of(&l).is_multiple_of(2));
            prop_assert_eq!(eta_minor_sum(&l).eval(&rat(0)), z);
        }

        #[test]
        fn stable_in_rencontres_order(l in arb_partition(7), extra in 0usize..3) {
            let a = rat(3);
            prop_assert_eq!(
                eta_rencontres_at(&l, l.first(), &a).unwrap(),
                eta_rencontres_at(&l, l.first() + extra, &a).unwrap()
            );
        }
    }
}
