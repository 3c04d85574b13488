//! Exact rationals, polynomials in α and in `x`, finite differences,
//! interpolation and determinants.

use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{domain, Error, Result};

pub type Rational = num_rational::BigRational;

pub fn rat(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

pub fn ratio(p: i64, q: i64) -> Rational {
    Rational::new(BigInt::from(p), BigInt::from(q))
}

pub fn int(n: impl Into<BigInt>) -> Rational {
    Rational::from_integer(n.into())
}

pub fn factorial(n: usize) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, k| acc * k)
}

pub fn binomial(n: usize, k: usize) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    (0..k).fold(BigInt::one(), |acc, i| acc * (n - i) / (i + 1))
}

/// `(2m - 1)!! = 1·3·5···(2m - 1)`, with `(-1)!! = 1`.
pub fn odd_double_factorial(m: usize) -> BigInt {
    (1..=m).fold(BigInt::one(), |acc, i| acc * (2 * i - 1))
}

/// `(-1)^k` as a rational.
pub fn sign(k: usize) -> Rational {
    if k.is_multiple_of(2) {
        Rational::one()
    } else {
        -Rational::one()
    }
}

/// Parses `"p"` or `"p/q"`.
pub fn parse_rational(s: &str) -> Result<Rational> {
    let bad = || Error::Parse(format!("rational {s:?}"));
    let s = s.trim();
    match s.split_once('/') {
        None => s
            .parse::<BigInt>()
            .map(Rational::from_integer)
            .map_err(|_| bad()),
        Some((p, q)) => {
            let p: BigInt = p.trim().parse().map_err(|_| bad())?;
            let q: BigInt = q.trim().parse().map_err(|_| bad())?;
            if q.is_zero() {
                return Err(bad());
            }
            Ok(Rational::new(p, q))
        }
    }
}

/// A polynomial in α with rational coefficients, lowest degree first.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct AlphaPoly {
    coeffs: Vec<Rational>,
}

impl AlphaPoly {
    pub fn new(mut coeffs: Vec<Rational>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        AlphaPoly { coeffs }
    }

    pub fn from_ints(coeffs: &[i64]) -> Self {
        AlphaPoly::new(coeffs.iter().map(|&c| rat(c)).collect())
    }

    pub fn zero() -> Self {
        AlphaPoly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        AlphaPoly::constant(Rational::one())
    }

    pub fn constant(c: Rational) -> Self {
        AlphaPoly::new(vec![c])
    }

    pub fn int(c: i64) -> Self {
        AlphaPoly::constant(rat(c))
    }

    /// The polynomial `α`.
    pub fn alpha() -> Self {
        AlphaPoly::from_ints(&[0, 1])
    }

    /// `c + s·α`.
    pub fn linear(c: i64, s: i64) -> Self {
        AlphaPoly::from_ints(&[c, s])
    }

    /// `α^k`.
    pub fn alpha_pow(k: usize) -> Self {
        let mut coeffs = vec![Rational::zero(); k + 1];
        coeffs[k] = Rational::one();
        AlphaPoly { coeffs }
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    /// Coefficient of `α^k`, zero past the degree.
    pub fn coeff(&self, k: usize) -> Rational {
        self.coeffs.get(k).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn eval(&self, a: &Rational) -> Rational {
        self.coeffs
            .iter()
            .rev()
            .fold(Rational::zero(), |acc, c| acc * a + c)
    }

    pub fn eval_int(&self, a: i64) -> Rational {
        self.eval(&rat(a))
    }

    pub fn scale(&self, c: &Rational) -> Self {
        AlphaPoly::new(self.coeffs.iter().map(|x| x * c).collect())
    }

    /// Multiplies by `α^k`.
    pub fn shift_up(&self, k: usize) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        let mut coeffs = vec![Rational::zero(); k];
        coeffs.extend(self.coeffs.iter().cloned());
        AlphaPoly { coeffs }
    }

    /// Divides by `α^k`, failing unless the division is exact.
    pub fn shift_down(&self, k: usize) -> Result<Self> {
        if self.coeffs.iter().take(k).any(|c| !c.is_zero()) {
            return Err(Error::Inexact(format!("{self} is not divisible by a^{k}")));
        }
        Ok(AlphaPoly::new(
            self.coeffs.iter().skip(k).cloned().collect(),
        ))
    }

    /// Every coefficient is an integer.
    pub fn is_integral(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_integer())
    }

    pub fn pow(&self, k: usize) -> Self {
        (0..k).fold(AlphaPoly::one(), |acc, _| &acc * self)
    }
}

impl fmt::Display for AlphaPoly {
    /// Ascending terms `c*a^k` joined by ` + ` or ` - `; `0` when zero.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if first {
                write!(f, "{c}*a^{k}")?;
                first = false;
            } else if c.is_negative() {
                write!(f, " - {}*a^{k}", -c)?;
            } else {
                write!(f, " + {c}*a^{k}")?;
            }
        }
        if first {
            f.write_str("0")?;
        }
        Ok(())
    }
}

impl std::str::FromStr for AlphaPoly {
    type Err = Error;

    /// Inverse of the `Display` form.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s == "0" {
            return Ok(AlphaPoly::zero());
        }
        let bad = || Error::Parse(format!("polynomial {s:?}"));
        let mut coeffs: Vec<Rational> = Vec::new();
        for term in s.replace(" - ", " + -").split(" + ") {
            let (c, k) = term.split_once("*a^").ok_or_else(bad)?;
            let k: usize = k.parse().map_err(|_| bad())?;
            if coeffs.len() <= k {
                coeffs.resize(k + 1, Rational::zero());
            }
            coeffs[k] += parse_rational(c)?;
        }
        Ok(AlphaPoly::new(coeffs))
    }
}

#[derive(Serialize, Deserialize)]
struct AlphaPolyJson {
    coeffs: Vec<String>,
}

impl Serialize for AlphaPoly {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        AlphaPolyJson {
            coeffs: self.coeffs.iter().map(|c| c.to_string()).collect(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for AlphaPoly {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let raw = AlphaPolyJson::deserialize(d)?;
        let coeffs = raw
            .coeffs
            .iter()
            .map(|c| parse_rational(c))
            .collect::<Result<Vec<_>>>()
            .map_err(serde::de::Error::custom)?;
        Ok(AlphaPoly::new(coeffs))
    }
}

impl Add for &AlphaPoly {
    type Output = AlphaPoly;
    fn add(self, rhs: &AlphaPoly) -> AlphaPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        AlphaPoly::new((0..n).map(|k| self.coeff(k) + rhs.coeff(k)).collect())
    }
}

impl Sub for &AlphaPoly {
    type Output = AlphaPoly;
    fn sub(self, rhs: &AlphaPoly) -> AlphaPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        AlphaPoly::new((0..n).map(|k| self.coeff(k) - rhs.coeff(k)).collect())
    }
}

impl Mul for &AlphaPoly {
    type Output = AlphaPoly;
    fn mul(self, rhs: &AlphaPoly) -> AlphaPoly {
        if self.is_zero() || rhs.is_zero() {
            return AlphaPoly::zero();
        }
        let mut out = vec![Rational::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        AlphaPoly::new(out)
    }
}

impl Neg for &AlphaPoly {
    type Output = AlphaPoly;
    fn neg(self) -> AlphaPoly {
        AlphaPoly::new(self.coeffs.iter().map(|c| -c).collect())
    }
}

macro_rules! forward_owned {
    ($ty:ty, $($tr:ident $m:ident),*) => {$(
        impl $tr for $ty {
            type Output = $ty;
            fn $m(self, rhs: $ty) -> $ty { (&self).$m(&rhs) }
        }
        impl $tr<&$ty> for $ty {
            type Output = $ty;
            fn $m(self, rhs: &$ty) -> $ty { (&self).$m(rhs) }
        }
    )*
        impl Neg for $ty {
            type Output = $ty;
            fn neg(self) -> $ty { -&self }
        }
        impl AddAssign<&$ty> for $ty {
            fn add_assign(&mut self, rhs: &$ty) { *self = &*self + rhs; }
        }
        impl AddAssign for $ty {
            fn add_assign(&mut self, rhs: $ty) { *self = &*self + &rhs; }
        }
        impl std::iter::Sum for $ty {
            fn sum<I: Iterator<Item = $ty>>(iter: I) -> $ty {
                iter.fold(<$ty>::zero(), |acc, x| acc + x)
            }
        }
        impl std::iter::Product for $ty {
            fn product<I: Iterator<Item = $ty>>(iter: I) -> $ty {
                iter.fold(<$ty>::one(), |acc, x| acc * x)
            }
        }
    };
}

forward_owned!(AlphaPoly, Add add, Sub sub, Mul mul);

/// A polynomial in `x` whose coefficients are polynomials in α.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct XPoly {
    coeffs: Vec<AlphaPoly>,
}

impl XPoly {
    pub fn new(mut coeffs: Vec<AlphaPoly>) -> Self {
        while coeffs.last().is_some_and(AlphaPoly::is_zero) {
            coeffs.pop();
        }
        XPoly { coeffs }
    }

    pub fn zero() -> Self {
        XPoly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        XPoly::constant(AlphaPoly::one())
    }

    pub fn constant(c: AlphaPoly) -> Self {
        XPoly::new(vec![c])
    }

    /// The polynomial `x`.
    pub fn x() -> Self {
        XPoly::new(vec![AlphaPoly::zero(), AlphaPoly::one()])
    }

    /// `c - α·x`.
    pub fn shifted_factor(c: AlphaPoly) -> Self {
        XPoly::new(vec![c, -AlphaPoly::alpha()])
    }

    pub fn coeffs(&self) -> &[AlphaPoly] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> AlphaPoly {
        self.coeffs.get(k).cloned().unwrap_or_default()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Value at `x`, still symbolic in α.
    pub fn eval_x(&self, x: &Rational) -> AlphaPoly {
        self.coeffs
            .iter()
            .rev()
            .fold(AlphaPoly::zero(), |acc, c| acc.scale(x) + c)
    }

    pub fn eval_x_int(&self, x: i64) -> AlphaPoly {
        self.eval_x(&rat(x))
    }
}

impl Add for &XPoly {
    type Output = XPoly;
    fn add(self, rhs: &XPoly) -> XPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        XPoly::new((0..n).map(|k| self.coeff(k) + rhs.coeff(k)).collect())
    }
}

impl Sub for &XPoly {
    type Output = XPoly;
    fn sub(self, rhs: &XPoly) -> XPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        XPoly::new((0..n).map(|k| self.coeff(k) - rhs.coeff(k)).collect())
    }
}

impl Mul for &XPoly {
    type Output = XPoly;
    fn mul(self, rhs: &XPoly) -> XPoly {
        if self.is_zero() || rhs.is_zero() {
            return XPoly::zero();
        }
        let mut out = vec![AlphaPoly::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        XPoly::new(out)
    }
}

impl Neg for &XPoly {
    type Output = XPoly;
    fn neg(self) -> XPoly {
        XPoly::new(self.coeffs.iter().map(|c| -c).collect())
    }
}

forward_owned!(XPoly, Add add, Sub sub, Mul mul);

/// `Δ^k[p](0) = Σ_i (-1)^{k-i} C(k,i) p(i)`.
pub fn forward_difference(p: &XPoly, k: usize) -> AlphaPoly {
    if p.degree().is_none_or(|d| k > d) {
        return AlphaPoly::zero();
    }
    (0..=k)
        .map(|i| {
            p.eval_x_int(i as i64)
                .scale(&(sign(k - i) * int(binomial(k, i))))
        })
        .sum()
}

/// Coefficients `c_k` with `p = Σ c_k α^k x(x-1)···(x-k+1)`.
///
/// Synthetic division at the nodes `0, 1, 2, ...` yields the Newton
/// coefficients without any division by α; the final `α^k` is removed by an
/// exact shift that fails loudly if `p` is not of that form.
pub fn falling_factorial_expand(p: &XPoly) -> Result<Vec<AlphaPoly>> {
    let mut rest: Vec<AlphaPoly> = p.coeffs.clone();
    let mut out = Vec::with_capacity(rest.len());
    let mut node = 0i64;
    while !rest.is_empty() {
        // divide rest(x) by (x - node): Horner from the top
        let n = rest.len();
        let mut quotient = vec![AlphaPoly::zero(); n - 1];
        let mut carry = AlphaPoly::zero();
        for k in (0..n).rev() {
            let v = &rest[k] + &carry.scale(&rat(node));
            if k == 0 {
                carry = v;
            } else {
                quotient[k - 1] = v.clone();
                carry = v;
            }
        }
        out.push(carry.shift_down(out.len())?);
        rest = XPoly::new(quotient).coeffs;
        node += 1;
    }
    Ok(out)
}

/// Inverse of [`falling_factorial_expand`].
pub fn falling_factorial_collapse(c: &[AlphaPoly]) -> XPoly {
    let mut basis = XPoly::one();
    let mut out = XPoly::zero();
    for (k, ck) in c.iter().enumerate() {
        out = &out + &(&basis * &XPoly::constant(ck.shift_up(k)));
        basis = &basis * &(&XPoly::x() - &XPoly::constant(AlphaPoly::int(k as i64)));
    }
    out
}

/// Interpolating polynomial of degree `< points.len()` by divided differences.
pub fn newton_interpolate(points: &[(Rational, Rational)]) -> Result<AlphaPoly> {
    let xs: Vec<&Rational> = points.iter().map(|(x, _)| x).collect();
    for i in 0..xs.len() {
        for j in 0..i {
            if xs[i] == xs[j] {
                return domain(format!("duplicate abscissa {}", xs[i]));
            }
        }
    }
    let mut table: Vec<Rational> = points.iter().map(|(_, y)| y.clone()).collect();
    let n = table.len();
    for level in 1..n {
        for i in (level..n).rev() {
            table[i] = (&table[i] - &table[i - 1]) / (xs[i] - xs[i - level]);
        }
    }
    let mut out = AlphaPoly::zero();
    for i in (0..n).rev() {
        out = &(&out * &AlphaPoly::new(vec![-xs[i].clone(), Rational::one()]))
            + &AlphaPoly::constant(table[i].clone());
    }
    Ok(out)
}

/// Fraction-free determinant of an integer matrix.
pub fn det_bareiss(mut m: Vec<Vec<BigInt>>) -> BigInt {
    let n = m.len();
    if n == 0 {
        return BigInt::one();
    }
    let mut negate = false;
    let mut prev = BigInt::one();
    for k in 0..n - 1 {
        if m[k][k].is_zero() {
            let Some(swap) = (k + 1..n).find(|&r| !m[r][k].is_zero()) else {
                return BigInt::zero();
            };
            m.swap(k, swap);
            negate = !negate;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let v = &m[i][j] * &m[k][k] - &m[i][k] * &m[k][j];
                m[i][j] = v.div_floor(&prev);
            }
        }
        prev = m[k][k].clone();
    }
    let d = m[n - 1][n - 1].clone();
    if negate {
        -d
    } else {
        d
    }
}

/// Exact determinant of a rational matrix: rows are cleared of denominators
/// and the integer determinant is rescaled.
pub fn det_exact(m: &[Vec<Rational>]) -> Result<Rational> {
    let n = m.len();
    if m.iter().any(|r| r.len() != n) {
        return domain("determinant of a non-square matrix");
    }
    let mut scale = BigInt::one();
    let rows = m
        .iter()
        .map(|row| {
            let l = row.iter().fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
            scale *= &l;
            row.iter()
                .map(|c| (c * int(l.clone())).to_integer())
                .collect()
        })
        .collect();
    Ok(Rational::new(det_bareiss(rows), scale))
}

/// Exact `f64` approximation of a rational.
pub fn to_f64(r: &Rational) -> f64 {
    r.to_f64().unwrap_or(f64::NAN)
}
