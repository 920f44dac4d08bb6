//! Exact integer Laurent polynomials in one variable `A`, and the localization
//! of that ring at the loop value `d = -A^-2 - A^2`.
//!
//! `LaurentPoly` is the workhorse type: a sparse exponent-to-coefficient map
//! with arbitrary-precision integer coefficients, so bracket computations stay
//! exact at every size this crate handles.  `DRingElem` represents `p * d^k`
//! with `k` possibly negative; division by `d` is deferred until a result is
//! converted back to a plain Laurent polynomial, which is where provably exact
//! cancellations are checked rather than assumed.

use num_bigint::{BigInt, BigUint};
use num_complex::Complex64;
use num_traits::{Signed, ToPrimitive, Zero};
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use crate::error::{Error, Result};

/// Sparse integer Laurent polynomial in the variable `A`.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct LaurentPoly {
    /// exponent -> nonzero coefficient
    terms: BTreeMap<i64, BigInt>,
}

impl LaurentPoly {
    /// The zero polynomial.
    pub fn zero() -> Self {
        Self::default()
    }

    /// The constant polynomial 1.
    pub fn one() -> Self {
        Self::monomial(1, 0)
    }

    /// A single term `c * A^e`.
    pub fn monomial(c: impl Into<BigInt>, e: i64) -> Self {
        let c = c.into();
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(e, c);
        }
        Self { terms }
    }

    /// The loop value `d = -A^-2 - A^2`.
    pub fn d() -> Self {
        Self::from_terms([(-2, BigInt::from(-1)), (2, BigInt::from(-1))])
    }

    /// Builds a polynomial from (exponent, coefficient) pairs, summing repeats.
    pub fn from_terms(pairs: impl IntoIterator<Item = (i64, BigInt)>) -> Self {
        let mut terms: BTreeMap<i64, BigInt> = BTreeMap::new();
        for (e, c) in pairs {
            let entry = terms.entry(e).or_insert_with(BigInt::zero);
            *entry += c;
        }
        terms.retain(|_, c| !c.is_zero());
        Self { terms }
    }

    /// `(-A^b)^t` for integer `t` of either sign.
    pub fn neg_power_of_a(b: i64, t: i64) -> Self {
        let sign = if t.rem_euclid(2) == 0 { 1 } else { -1 };
        Self::monomial(sign, b * t)
    }

    /// True iff this is the zero polynomial.
    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Coefficient of `A^e` (zero if absent).
    pub fn coeff(&self, e: i64) -> BigInt {
        self.terms.get(&e).cloned().unwrap_or_else(BigInt::zero)
    }

    /// Iterates terms in ascending exponent order.
    pub fn iter(&self) -> impl Iterator<Item = (i64, &BigInt)> {
        self.terms.iter().map(|(e, c)| (*e, c))
    }

    /// Number of nonzero terms.
    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Smallest exponent with a nonzero coefficient.
    pub fn min_exp(&self) -> Option<i64> {
        self.terms.keys().next().copied()
    }

    /// Largest exponent with a nonzero coefficient.
    pub fn max_exp(&self) -> Option<i64> {
        self.terms.keys().next_back().copied()
    }

    /// If this is `±A^e`, returns `(coefficient, e)`.
    pub fn as_unit(&self) -> Option<(BigInt, i64)> {
        if self.terms.len() != 1 {
            return None;
        }
        let (&e, c) = self.terms.iter().next().unwrap();
        if c.abs() == BigInt::from(1) {
            Some((c.clone(), e))
        } else {
            None
        }
    }

    /// If this is `c*A^e` for any nonzero `c`, returns `(c, e)`.
    pub fn as_monomial(&self) -> Option<(BigInt, i64)> {
        if self.terms.len() != 1 {
            return None;
        }
        let (&e, c) = self.terms.iter().next().unwrap();
        Some((c.clone(), e))
    }

    /// Multiplies by the monomial `c * A^e` in place-free style.
    pub fn mul_monomial(&self, c: impl Into<BigInt>, e: i64) -> Self {
        let c = c.into();
        if c.is_zero() {
            return Self::zero();
        }
        Self {
            terms: self.terms.iter().map(|(k, v)| (k + e, v * &c)).collect(),
        }
    }

    /// Integer power.  Negative exponents are only defined for units `±A^k`;
    /// anything else errors with "non-invertible".
    pub fn pow(&self, n: i64) -> Result<Self> {
        if n < 0 {
            let (c, e) = self.as_unit().ok_or(Error::NonInvertible)?;
            // (c A^e)^n with c = ±1
            let sign = if c.is_negative() && n.rem_euclid(2) == 1 { -1 } else { 1 };
            return Ok(Self::monomial(sign, e * n));
        }
        let mut result = Self::one();
        let mut base = self.clone();
        let mut k = n as u64;
        while k > 0 {
            if k & 1 == 1 {
                result = &result * &base;
            }
            k >>= 1;
            if k > 0 {
                base = &base * &base;
            }
        }
        Ok(result)
    }

    /// Exact division: returns `self / g` when the remainder is zero, else
    /// the "not divisible" error.  Division by zero is also "not divisible".
    pub fn exact_div(&self, g: &Self) -> Result<Self> {
        if g.is_zero() {
            return Err(Error::NotDivisible);
        }
        if self.is_zero() {
            return Ok(Self::zero());
        }
        let glow = g.min_exp().unwrap();
        let ghigh = g.max_exp().unwrap();
        let flow = self.min_exp().unwrap();
        let fhigh = self.max_exp().unwrap();
        let gdeg = (ghigh - glow) as usize;
        let fdeg = (fhigh - flow) as usize;
        if fdeg < gdeg {
            return Err(Error::NotDivisible);
        }
        // dense ordinary-polynomial long division after clearing min exponents
        let mut rem: Vec<BigInt> = (0..=fdeg as i64)
            .map(|i| self.coeff(flow + i))
            .collect();
        let gc: Vec<BigInt> = (0..=gdeg as i64).map(|i| g.coeff(glow + i)).collect();
        let glead = &gc[gdeg];
        let qdeg = fdeg - gdeg;
        let mut q: Vec<BigInt> = vec![BigInt::zero(); qdeg + 1];
        for i in (0..=qdeg).rev() {
            let c = rem[i + gdeg].clone();
            if c.is_zero() {
                continue;
            }
            if (&c % glead) != BigInt::zero() {
                return Err(Error::NotDivisible);
            }
            let qi = &c / glead;
            for (j, gcj) in gc.iter().enumerate() {
                let t = &qi * gcj;
                rem[i + j] -= t;
            }
            q[i] = qi;
        }
        if rem.iter().any(|c| !c.is_zero()) {
            return Err(Error::NotDivisible);
        }
        Ok(Self::from_terms(
            q.into_iter()
                .enumerate()
                .map(|(i, c)| (flow - glow + i as i64, c)),
        ))
    }

    /// The substitution `A -> A^-1` (diagram mirror image).
    pub fn substitute_a_inv(&self) -> Self {
        Self {
            terms: self.terms.iter().map(|(e, c)| (-e, c.clone())).collect(),
        }
    }

    /// Sum of squared coefficients (the squared L2 norm on the torus).
    pub fn l2_norm_sq(&self) -> BigUint {
        let mut acc = BigUint::zero();
        for c in self.terms.values() {
            acc += (c * c).magnitude().clone();
        }
        acc
    }

    /// Largest `j` such that `d^j` divides this polynomial exactly
    /// (zero divides arbitrarily often; we return 0 for it by convention).
    pub fn d_valuation(&self) -> u32 {
        if self.is_zero() {
            return 0;
        }
        let d = Self::d();
        let mut j = 0;
        let mut cur = self.clone();
        while let Ok(q) = cur.exact_div(&d) {
            cur = q;
            j += 1;
        }
        j
    }

    /// Evaluates at a complex point.  `tol` is the radius around the origin
    /// inside which evaluation of a polynomial with negative exponents is
    /// rejected as a pole.  The floating-point error is bounded by a small
    /// multiple of `eval_scale(|z|) * f64::EPSILON`.
    pub fn eval_complex(&self, z: Complex64, tol: f64) -> Result<Complex64> {
        let has_neg = self.min_exp().is_some_and(|e| e < 0);
        if has_neg && z.norm() <= tol.max(0.0) {
            return Err(Error::PoleAtOrigin);
        }
        // Horner on the nonnegative part in z and the negative part in 1/z.
        let mut pos: Vec<(i64, f64)> = Vec::new();
        let mut neg: Vec<(i64, f64)> = Vec::new();
        for (e, c) in self.iter() {
            let cf = big_to_f64(c);
            if e >= 0 {
                pos.push((e, cf));
            } else {
                neg.push((-e, cf));
            }
        }
        let mut acc = horner(&pos, z);
        if !neg.is_empty() {
            acc += horner(&neg, z.inv());
        }
        Ok(acc)
    }

    /// `sum |c_e| * r^e`: the natural magnitude scale for relative residuals.
    pub fn eval_scale(&self, r: f64) -> f64 {
        self.iter()
            .map(|(e, c)| big_to_f64(&c.abs()) * r.powi(e as i32))
            .sum()
    }

    /// Clears the minimum exponent and returns `(low, coefficients)` with
    /// `self = A^low * sum coefficients[i] * A^i`; `None` for the zero polynomial.
    pub fn to_real_coeffs(&self) -> Option<(i64, Vec<f64>)> {
        let low = self.min_exp()?;
        let high = self.max_exp()?;
        let mut v = vec![0.0; (high - low) as usize + 1];
        for (e, c) in self.iter() {
            v[(e - low) as usize] = big_to_f64(c);
        }
        Some((low, v))
    }

    /// Renders with a different variable letter (used for Jones output in `q`).
    pub fn display_with_var(&self, var: char) -> String {
        format_poly(self, var)
    }
}

fn horner(terms_desc_any: &[(i64, f64)], z: Complex64) -> Complex64 {
    // terms are (exponent >= 0, coeff); sort descending and fill gaps implicitly
    let mut terms: Vec<(i64, f64)> = terms_desc_any.to_vec();
    terms.sort_by_key(|t| std::cmp::Reverse(t.0));
    let mut acc = Complex64::new(0.0, 0.0);
    let mut prev: Option<i64> = None;
    for &(e, c) in &terms {
        if let Some(p) = prev {
            acc *= z.powi((p - e) as i32);
        }
        acc += Complex64::new(c, 0.0);
        prev = Some(e);
    }
    if let Some(p) = prev {
        acc *= z.powi(p as i32);
    }
    acc
}

pub(crate) fn big_to_f64(c: &BigInt) -> f64 {
    c.to_f64().unwrap_or(f64::INFINITY)
}

impl Add for &LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut terms = self.terms.clone();
        for (e, c) in &rhs.terms {
            let entry = terms.entry(*e).or_insert_with(BigInt::zero);
            *entry += c;
        }
        terms.retain(|_, c| !c.is_zero());
        LaurentPoly { terms }
    }
}

impl Sub for &LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, rhs: &LaurentPoly) -> LaurentPoly {
        self + &(-rhs)
    }
}

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        LaurentPoly {
            terms: self.terms.iter().map(|(e, c)| (*e, -c)).collect(),
        }
    }
}

impl Mul for &LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut terms: BTreeMap<i64, BigInt> = BTreeMap::new();
        for (e1, c1) in &self.terms {
            for (e2, c2) in &rhs.terms {
                let entry = terms.entry(e1 + e2).or_insert_with(BigInt::zero);
                *entry += c1 * c2;
            }
        }
        terms.retain(|_, c| !c.is_zero());
        LaurentPoly { terms }
    }
}

fn format_poly(p: &LaurentPoly, var: char) -> String {
    if p.is_zero() {
        return "0".to_string();
    }
    let mut out = String::new();
    for (i, (&e, c)) in p.terms.iter().rev().enumerate() {
        let neg = c.is_negative();
        if i == 0 {
            if neg {
                out.push('-');
            }
        } else {
            out.push_str(if neg { " - " } else { " + " });
        }
        let mag = c.abs();
        let one = mag == BigInt::from(1);
        if e == 0 {
            out.push_str(&mag.to_string());
        } else {
            if !one {
                out.push_str(&mag.to_string());
            }
            out.push(var);
            if e != 1 {
                out.push('^');
                out.push_str(&e.to_string());
            }
        }
    }
    out
}

/// Canonical text form: terms sorted by descending exponent, e.g. `-A^4 - A^-4`.
impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&format_poly(self, 'A'))
    }
}

impl FromStr for LaurentPoly {
    type Err = Error;

    /// Parses the same grammar `Display` emits (plus optional `*` between a
    /// coefficient and `A`, and tolerant whitespace).
    fn from_str(s: &str) -> Result<Self> {
        let bad = |m: &str| Error::GraphFormat(format!("polynomial parse: {m} in {s:?}"));
        let mut terms: Vec<(i64, BigInt)> = Vec::new();
        let chars: Vec<char> = s.chars().collect();
        let mut i = 0;
        let n = chars.len();
        let skip_ws = |i: &mut usize| {
            while *i < n && chars[*i].is_whitespace() {
                *i += 1;
            }
        };
        skip_ws(&mut i);
        if i == n {
            return Err(bad("empty input"));
        }
        let mut first = true;
        while i < n {
            // sign
            let mut sign = 1i32;
            skip_ws(&mut i);
            if i < n && (chars[i] == '+' || chars[i] == '-') {
                if chars[i] == '-' {
                    sign = -1;
                }
                i += 1;
                skip_ws(&mut i);
            } else if !first {
                return Err(bad("expected + or - between terms"));
            }
            first = false;
            // optional integer coefficient
            let start = i;
            while i < n && chars[i].is_ascii_digit() {
                i += 1;
            }
            let coeff_digits: String = chars[start..i].iter().collect();
            skip_ws(&mut i);
            if i < n && chars[i] == '*' {
                i += 1;
                skip_ws(&mut i);
            }
            // optional variable with optional exponent
            let (coeff, exp) = if i < n && (chars[i] == 'A' || chars[i] == 'a') {
                i += 1;
                let mut exp: i64 = 1;
                if i < n && chars[i] == '^' {
                    i += 1;
                    let mut esign = 1i64;
                    if i < n && chars[i] == '-' {
                        esign = -1;
                        i += 1;
                    }
                    let estart = i;
                    while i < n && chars[i].is_ascii_digit() {
                        i += 1;
                    }
                    if estart == i {
                        return Err(bad("missing exponent after ^"));
                    }
                    let digits: String = chars[estart..i].iter().collect();
                    exp = esign
                        * digits
                            .parse::<i64>()
                            .map_err(|_| bad("exponent out of range"))?;
                }
                let c = if coeff_digits.is_empty() {
                    BigInt::from(1)
                } else {
                    BigInt::parse_bytes(coeff_digits.as_bytes(), 10).ok_or_else(|| bad("bad coefficient"))?
                };
                (c, exp)
            } else {
                if coeff_digits.is_empty() {
                    return Err(bad("expected coefficient or A"));
                }
                let c = BigInt::parse_bytes(coeff_digits.as_bytes(), 10)
                    .ok_or_else(|| bad("bad coefficient"))?;
                (c, 0)
            };
            terms.push((exp, BigInt::from(sign) * coeff));
            skip_ws(&mut i);
        }
        Ok(LaurentPoly::from_terms(terms))
    }
}

/// An element `num * d^dexp` of the Laurent ring localized at `d`.
///
/// Negative `dexp` is reduced eagerly while `d` divides the numerator; a
/// residual negative exponent is kept and only rejected when the element must
/// become a plain Laurent polynomial.
#[derive(Debug, Clone)]
pub struct DRingElem {
    num: LaurentPoly,
    dexp: i64,
}

impl DRingElem {
    /// Builds and normalizes `num * d^dexp`.
    pub fn new(num: LaurentPoly, dexp: i64) -> Self {
        let mut el = Self { num, dexp };
        el.reduce();
        el
    }

    /// The zero element.
    pub fn zero() -> Self {
        Self { num: LaurentPoly::zero(), dexp: 0 }
    }

    /// The unit element.
    pub fn one() -> Self {
        Self { num: LaurentPoly::one(), dexp: 0 }
    }

    /// Embeds a plain Laurent polynomial.
    pub fn from_laurent(p: LaurentPoly) -> Self {
        Self { num: p, dexp: 0 }
    }

    /// `d^j` for any integer `j`.
    pub fn d_pow(j: i64) -> Self {
        Self::new(LaurentPoly::one(), j)
    }

    /// Numerator after normalization.
    pub fn numerator(&self) -> &LaurentPoly {
        &self.num
    }

    /// Deferred power of `d` after normalization.
    pub fn d_exponent(&self) -> i64 {
        self.dexp
    }

    /// True iff the element is zero.
    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    fn reduce(&mut self) {
        if self.num.is_zero() {
            self.dexp = 0;
            return;
        }
        let d = LaurentPoly::d();
        while self.dexp < 0 {
            match self.num.exact_div(&d) {
                Ok(q) => {
                    self.num = q;
                    self.dexp += 1;
                }
                Err(_) => break,
            }
        }
    }

    /// Sum, aligning the two d-exponents exactly.
    pub fn add(&self, rhs: &Self) -> Self {
        if self.is_zero() {
            return rhs.clone();
        }
        if rhs.is_zero() {
            return self.clone();
        }
        let e = self.dexp.min(rhs.dexp);
        let d = LaurentPoly::d();
        let a = &self.num * &d.pow(self.dexp - e).expect("nonnegative power");
        let b = &rhs.num * &d.pow(rhs.dexp - e).expect("nonnegative power");
        Self::new(&a + &b, e)
    }

    /// Product.
    pub fn mul(&self, rhs: &Self) -> Self {
        Self::new(&self.num * &rhs.num, self.dexp + rhs.dexp)
    }

    /// Negation.
    pub fn neg(&self) -> Self {
        Self { num: -&self.num, dexp: self.dexp }
    }

    /// Nonnegative power.
    pub fn pow(&self, n: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..n {
            acc = acc.mul(self);
        }
        acc
    }

    /// Converts to a plain Laurent polynomial; a residual negative d-exponent
    /// that does not divide out is a normalization failure.
    pub fn to_laurent(&self) -> Result<LaurentPoly> {
        if self.num.is_zero() {
            return Ok(LaurentPoly::zero());
        }
        if self.dexp >= 0 {
            let d = LaurentPoly::d();
            return Ok(&self.num * &d.pow(self.dexp).expect("nonnegative power"));
        }
        Err(Error::NormalizationFailure(format!(
            "residual d^{} on {}",
            self.dexp, self.num
        )))
    }
}

/// Representation-independent equality: compares after clearing the smaller
/// d-exponent, which never requires division.
impl PartialEq for DRingElem {
    fn eq(&self, other: &Self) -> bool {
        let e = self.dexp.min(other.dexp);
        let d = LaurentPoly::d();
        let a = &self.num * &d.pow(self.dexp - e).expect("nonnegative power");
        let b = &other.num * &d.pow(other.dexp - e).expect("nonnegative power");
        a == b
    }
}

impl Eq for DRingElem {}

impl fmt::Display for DRingElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.dexp == 0 {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({}) * d^{}", self.num, self.dexp)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> LaurentPoly {
        s.parse().unwrap()
    }

    #[test]
    fn monomial_product() {
        // (A + A^-1)^2 = A^2 + 2 + A^-2
        let f = p("A + A^-1");
        assert_eq!(&f * &f, p("A^2 + 2 + A^-2"));
    }

    #[test]
    fn d_squared() {
        let d = LaurentPoly::d();
        assert_eq!(&d * &d, p("A^4 + 2 + A^-4"));
        assert_eq!(d.to_string(), "-A^2 - A^-2");
    }

    #[test]
    fn exact_div_chain_unit() {
        // ((-A^-3)^1 - A^1) / d = A^-1
        let n = p("-A^-3 - A");
        assert_eq!(n.exact_div(&LaurentPoly::d()).unwrap(), p("A^-1"));
    }

    #[test]
    fn exact_div_sheaf_two() {
        // (A^6 - A^-2) / d = -(A^4 - 1)
        let n = p("A^6 - A^-2");
        assert_eq!(n.exact_div(&LaurentPoly::d()).unwrap(), p("-A^4 + 1"));
    }

    #[test]
    fn exact_div_rejects() {
        assert!(matches!(
            p("A").exact_div(&LaurentPoly::d()),
            Err(Error::NotDivisible)
        ));
    }

    #[test]
    fn l2_norm_of_d() {
        assert_eq!(LaurentPoly::d().l2_norm_sq(), BigUint::from(2u32));
    }

    #[test]
    fn eval_d_at_i() {
        // d(i) = -(i^-2) - i^2 = 1 + 1 = 2
        let z = Complex64::new(0.0, 1.0);
        let v = LaurentPoly::d().eval_complex(z, 1e-300).unwrap();
        assert!((v - Complex64::new(2.0, 0.0)).norm() < 1e-12);
    }

    #[test]
    fn eval_pole() {
        let z = Complex64::new(0.0, 0.0);
        assert!(matches!(
            LaurentPoly::d().eval_complex(z, 1e-300),
            Err(Error::PoleAtOrigin)
        ));
        // polynomials without negative exponents evaluate fine at zero
        let v = p("A^2 + 3").eval_complex(z, 1e-300).unwrap();
        assert!((v - Complex64::new(3.0, 0.0)).norm() < 1e-15);
    }

    #[test]
    fn pow_negative_unit() {
        assert_eq!(p("-A^3").pow(-2).unwrap(), p("A^-6"));
        assert_eq!(p("-A^3").pow(-3).unwrap(), p("-A^-9"));
        assert!(matches!(LaurentPoly::d().pow(-1), Err(Error::NonInvertible)));
    }

    #[test]
    fn display_canonical() {
        assert_eq!(p("-A^4 - A^-4").to_string(), "-A^4 - A^-4");
        assert_eq!(p("3A^2 + 2 - A^-2").to_string(), "3A^2 + 2 - A^-2");
        assert_eq!(LaurentPoly::zero().to_string(), "0");
        assert_eq!(p("A").to_string(), "A");
    }

    #[test]
    fn parse_rejects_garbage() {
        assert!("".parse::<LaurentPoly>().is_err());
        assert!("A^".parse::<LaurentPoly>().is_err());
        assert!("A B".parse::<LaurentPoly>().is_err());
    }

    #[test]
    fn mirror_substitution() {
        assert_eq!(p("A^3 - 2A^-1").substitute_a_inv(), p("-2A + A^-3"));
    }

    #[test]
    fn d_valuation_counts() {
        let d = LaurentPoly::d();
        let f = &(&d * &d) * &p("A^2 + 7");
        assert_eq!(f.d_valuation(), 2);
        assert_eq!(p("A^2 + 7").d_valuation(), 0);
    }

    #[test]
    fn dring_reduction_and_equality() {
        // (-A^-3 - A) * d^-1 reduces to A^-1
        let x = DRingElem::new(p("-A^-3 - A"), -1);
        assert_eq!(x.to_laurent().unwrap(), p("A^-1"));
        // A * d^-1 does not reduce, but equals (A*d) * d^-2
        let a = DRingElem::new(p("A"), -1);
        let b = DRingElem::new(&p("A") * &LaurentPoly::d(), -2);
        assert_eq!(a, b);
        assert!(a.to_laurent().is_err());
    }

    #[test]
    fn dring_arithmetic() {
        let d1 = DRingElem::d_pow(1);
        let dm1 = DRingElem::d_pow(-1);
        assert_eq!(d1.mul(&dm1), DRingElem::one());
        let s = d1.add(&dm1); // d + 1/d = (d^2+1)/d
        let expected = DRingElem::new(p("A^4 + 3 + A^-4"), -1);
        assert_eq!(s, expected);
    }
}
