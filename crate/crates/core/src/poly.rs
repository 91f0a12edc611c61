//! Dense univariate polynomials over a [`FieldCtx`](crate::field::FieldCtx).

use std::collections::HashSet;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

use thiserror::Error;

use crate::field::{Field, FieldElement, FieldError};

/// Operand length above which multiplication switches to Karatsuba.
pub const KARATSUBA_THRESHOLD: usize = 32;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PolyError {
    #[error("division by the zero polynomial")]
    DivisionByZero,
    #[error("polynomial is not divisible")]
    NotDivisible,
    #[error("degree bound {bound} is below the degree {degree}")]
    DegreeBound { bound: usize, degree: usize },
    #[error("denominator has zero constant term")]
    NotInvertibleSeries,
    #[error("duplicate interpolation abscissa {0}")]
    DuplicateAbscissa(FieldElement),
    #[error("polynomials over different fields")]
    FieldMismatch,
    #[error("malformed polynomial text: {0}")]
    Parse(String),
    #[error(transparent)]
    Field(#[from] FieldError),
}

/// Polynomial with coefficients lowest degree first and no trailing zeros.
#[derive(Clone)]
pub struct Poly {
    field: Field,
    coeffs: Vec<FieldElement>,
}

impl PartialEq for Poly {
    fn eq(&self, other: &Self) -> bool {
        self.coeffs == other.coeffs && same_field(&self.field, &other.field)
    }
}

impl Eq for Poly {}

impl fmt::Debug for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Poly{:?}", self.coeffs)
    }
}

impl fmt::Display for Poly {
    /// The comma-separated coefficient form, lowest degree first.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self.coeffs.iter().map(|c| c.value().to_string()).collect();
        write!(f, "{}", parts.join(","))
    }
}

#[inline]
pub(crate) fn same_field(a: &Field, b: &Field) -> bool {
    Arc::ptr_eq(a, b) || **a == **b
}

fn trim(v: &mut Vec<FieldElement>) {
    while v.last().is_some_and(|c| c.is_zero()) {
        v.pop();
    }
}

impl Poly {
    pub fn zero(field: &Field) -> Self {
        Poly {
            field: field.clone(),
            coeffs: Vec::new(),
        }
    }

    pub fn one(field: &Field) -> Self {
        Self::constant(field, FieldElement::ONE)
    }

    pub fn constant(field: &Field, c: FieldElement) -> Self {
        Self::from_coeffs(field, vec![c])
    }

    /// The polynomial `x`.
    pub fn x(field: &Field) -> Self {
        Self::monomial(field, FieldElement::ONE, 1)
    }

    /// `c * x^k`.
    pub fn monomial(field: &Field, c: FieldElement, k: usize) -> Self {
        let mut coeffs = vec![FieldElement::ZERO; k + 1];
        coeffs[k] = c;
        Self::from_coeffs(field, coeffs)
    }

    pub fn from_coeffs(field: &Field, mut coeffs: Vec<FieldElement>) -> Self {
        debug_assert!(coeffs.iter().all(|&c| field.contains(c)));
        trim(&mut coeffs);
        Poly {
            field: field.clone(),
            coeffs,
        }
    }

    /// Checked construction from packed integers, lowest degree first.
    pub fn from_values(field: &Field, values: &[u64]) -> Result<Self, PolyError> {
        let coeffs = values
            .iter()
            .map(|&v| field.elem(v))
            .collect::<Result<Vec<_>, _>>()?;
        Ok(Self::from_coeffs(field, coeffs))
    }

    /// Parses the comma-separated textual form.
    pub fn parse(field: &Field, text: &str) -> Result<Self, PolyError> {
        let text = text.trim();
        if text.is_empty() {
            return Ok(Self::zero(field));
        }
        let values = text
            .split(',')
            .map(|t| t.trim().parse::<u64>().map_err(|_| PolyError::Parse(t.to_string())))
            .collect::<Result<Vec<_>, _>>()?;
        Self::from_values(field, &values)
    }

    #[inline]
    pub fn field(&self) -> &Field {
        &self.field
    }

    #[inline]
    pub fn coeffs(&self) -> &[FieldElement] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<FieldElement> {
        self.coeffs
    }

    pub fn coeff(&self, i: usize) -> FieldElement {
        self.coeffs.get(i).copied().unwrap_or(FieldElement::ZERO)
    }

    /// Degree, with `None` standing for the zero polynomial. `Option`'s
    /// ordering places `None` below every finite degree.
    #[inline]
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    #[inline]
    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0] == FieldElement::ONE
    }

    pub fn leading_coeff(&self) -> Option<FieldElement> {
        self.coeffs.last().copied()
    }

    pub fn is_monic(&self) -> bool {
        self.leading_coeff() == Some(FieldElement::ONE)
    }

    fn check(&self, other: &Poly) {
        assert!(
            same_field(&self.field, &other.field),
            "polynomial operands over different fields"
        );
    }

    /// Fallible field compatibility check for callers that want an error
    /// instead of a panic.
    pub fn ensure_same_field(&self, other: &Poly) -> Result<(), PolyError> {
        if same_field(&self.field, &other.field) {
            Ok(())
        } else {
            Err(PolyError::FieldMismatch)
        }
    }

    pub fn add(&self, other: &Poly) -> Poly {
        self.check(other);
        let (long, short) = if self.coeffs.len() >= other.coeffs.len() {
            (self, other)
        } else {
            (other, self)
        };
        let mut coeffs = long.coeffs.clone();
        self.field.add_assign_slice(&mut coeffs, &short.coeffs);
        Poly::from_coeffs(&self.field, coeffs)
    }

    pub fn sub(&self, other: &Poly) -> Poly {
        self.check(other);
        let mut coeffs = self.coeffs.clone();
        if coeffs.len() < other.coeffs.len() {
            coeffs.resize(other.coeffs.len(), FieldElement::ZERO);
        }
        self.field.sub_assign_slice(&mut coeffs, &other.coeffs);
        Poly::from_coeffs(&self.field, coeffs)
    }

    pub fn neg(&self) -> Poly {
        let coeffs = self.coeffs.iter().map(|&c| self.field.neg(c)).collect();
        Poly::from_coeffs(&self.field, coeffs)
    }

    pub fn scale(&self, c: FieldElement) -> Poly {
        if c.is_zero() {
            return Poly::zero(&self.field);
        }
        let mut coeffs = self.coeffs.clone();
        self.field.scale_slice(&mut coeffs, c);
        Poly {
            field: self.field.clone(),
            coeffs,
        }
    }

    /// Multiplication by `x^k`.
    pub fn shift(&self, k: usize) -> Poly {
        if self.is_zero() {
            return self.clone();
        }
        let mut coeffs = vec![FieldElement::ZERO; k];
        coeffs.extend_from_slice(&self.coeffs);
        Poly {
            field: self.field.clone(),
            coeffs,
        }
    }

    /// Reduction modulo `x^n`.
    pub fn truncate(&self, n: usize) -> Poly {
        let coeffs = self.coeffs[..n.min(self.coeffs.len())].to_vec();
        Poly::from_coeffs(&self.field, coeffs)
    }

    pub fn mul(&self, other: &Poly) -> Poly {
        self.mul_with_threshold(other, KARATSUBA_THRESHOLD)
    }

    /// Product using schoolbook below `threshold` operand length and
    /// Karatsuba above; `usize::MAX` forces schoolbook.
    pub fn mul_with_threshold(&self, other: &Poly, threshold: usize) -> Poly {
        self.check(other);
        if self.is_zero() || other.is_zero() {
            return Poly::zero(&self.field);
        }
        let coeffs = mul_slices(&self.field, &self.coeffs, &other.coeffs, threshold.max(2));
        Poly::from_coeffs(&self.field, coeffs)
    }

    pub fn pow(&self, mut e: u64) -> Poly {
        let mut acc = Poly::one(&self.field);
        let mut base = self.clone();
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base);
            }
        }
        acc
    }

    pub fn divmod(&self, divisor: &Poly) -> Result<(Poly, Poly), PolyError> {
        self.check(divisor);
        let db = divisor.degree().ok_or(PolyError::DivisionByZero)?;
        let field = &self.field;
        let mut rem = self.coeffs.clone();
        if rem.len() <= db {
            return Ok((Poly::zero(field), self.clone()));
        }
        let lead_inv = field.inv(divisor.coeffs[db])?;
        let mut quot = vec![FieldElement::ZERO; rem.len() - db];
        for i in (0..quot.len()).rev() {
            let c = rem[i + db];
            if c.is_zero() {
                continue;
            }
            let qc = field.mul(c, lead_inv);
            quot[i] = qc;
            field.sub_scaled(&mut rem[i..i + db + 1], &divisor.coeffs, qc);
        }
        rem.truncate(db);
        Ok((Poly::from_coeffs(field, quot), Poly::from_coeffs(field, rem)))
    }

    pub fn rem(&self, modulus: &Poly) -> Result<Poly, PolyError> {
        Ok(self.divmod(modulus)?.1)
    }

    pub fn exact_div(&self, divisor: &Poly) -> Result<Poly, PolyError> {
        let (q, r) = self.divmod(divisor)?;
        if r.is_zero() {
            Ok(q)
        } else {
            Err(PolyError::NotDivisible)
        }
    }

    pub fn divides(&self, other: &Poly) -> bool {
        other.rem(self).map(|r| r.is_zero()).unwrap_or(false)
    }

    /// Scales to a monic polynomial; the zero polynomial stays zero.
    pub fn monic(&self) -> Poly {
        match self.leading_coeff() {
            None => self.clone(),
            Some(lc) => self.scale(self.field.inv(lc).expect("nonzero leading coefficient")),
        }
    }

    /// Monic greatest common divisor; `gcd(0, 0) = 0`.
    pub fn gcd(&self, other: &Poly) -> Poly {
        self.check(other);
        let mut a = self.clone();
        let mut b = other.clone();
        while !b.is_zero() {
            let r = a.rem(&b).expect("nonzero divisor");
            a = b;
            b = r;
        }
        a.monic()
    }

    pub fn mulmod(&self, other: &Poly, modulus: &Poly) -> Result<Poly, PolyError> {
        self.mul(other).rem(modulus)
    }

    pub fn powmod(&self, mut e: u64, modulus: &Poly) -> Result<Poly, PolyError> {
        let mut acc = Poly::one(&self.field).rem(modulus)?;
        let mut base = self.rem(modulus)?;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mulmod(&base, modulus)?;
            }
            e >>= 1;
            if e > 0 {
                base = base.mulmod(&base, modulus)?;
            }
        }
        Ok(acc)
    }

    /// Horner evaluation.
    pub fn eval(&self, x: FieldElement) -> FieldElement {
        let f = &self.field;
        self.coeffs
            .iter()
            .rev()
            .fold(FieldElement::ZERO, |acc, &c| f.add(f.mul(acc, x), c))
    }

    /// `x^d * p(1/x)`; requires `d >= deg p`.
    pub fn reverse(&self, d: usize) -> Result<Poly, PolyError> {
        match self.degree() {
            None => Ok(self.clone()),
            Some(deg) if deg > d => Err(PolyError::DegreeBound { bound: d, degree: deg }),
            Some(_) => {
                let mut coeffs = vec![FieldElement::ZERO; d + 1];
                for (i, &c) in self.coeffs.iter().enumerate() {
                    coeffs[d - i] = c;
                }
                Ok(Poly::from_coeffs(&self.field, coeffs))
            }
        }
    }

    pub fn derivative(&self) -> Poly {
        let f = &self.field;
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(i, &c)| f.mul(f.from_int(i as i64), c))
            .collect();
        Poly::from_coeffs(f, coeffs)
    }

    /// Power series quotient `num / den mod x^precision`.
    pub fn series_div(num: &Poly, den: &Poly, precision: usize) -> Result<Poly, PolyError> {
        num.check(den);
        let f = &num.field;
        let d0 = den.coeff(0);
        if d0.is_zero() {
            return Err(PolyError::NotInvertibleSeries);
        }
        let d0_inv = f.inv(d0)?;
        let mut out = vec![FieldElement::ZERO; precision];
        let mut work: Vec<FieldElement> = num.coeffs.iter().take(precision).copied().collect();
        work.resize(precision, FieldElement::ZERO);
        for j in 0..precision {
            let c = f.mul(work[j], d0_inv);
            out[j] = c;
            if !c.is_zero() {
                let end = (j + den.coeffs.len()).min(precision);
                f.sub_scaled(&mut work[j..end], &den.coeffs[..end - j], c);
            }
        }
        Ok(Poly::from_coeffs(f, out))
    }

    /// In-place `self -= c * x^shift * other`.
    pub fn sub_scaled_shifted(&mut self, c: FieldElement, shift: usize, other: &Poly) {
        debug_assert!(same_field(&self.field, &other.field));
        if c.is_zero() || other.is_zero() {
            return;
        }
        let need = shift + other.coeffs.len();
        if self.coeffs.len() < need {
            self.coeffs.resize(need, FieldElement::ZERO);
        }
        self.field
            .sub_scaled(&mut self.coeffs[shift..need], &other.coeffs, c);
        trim(&mut self.coeffs);
    }
}

fn mul_slices(
    field: &Field,
    a: &[FieldElement],
    b: &[FieldElement],
    threshold: usize,
) -> Vec<FieldElement> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    if a.len().min(b.len()) < threshold {
        let mut out = vec![FieldElement::ZERO; a.len() + b.len() - 1];
        field.convolve_into(a, b, &mut out);
        return out;
    }
    let h = a.len().max(b.len()) / 2;
    let (a0, a1) = a.split_at(h.min(a.len()));
    let (b0, b1) = b.split_at(h.min(b.len()));
    let mut out = vec![FieldElement::ZERO; a.len() + b.len() - 1];

    let z0 = mul_slices(field, a0, b0, threshold);
    let z2 = mul_slices(field, a1, b1, threshold);
    // (a0 + a1)(b0 + b1) - z0 - z2
    let mut sa = a0.to_vec();
    field.add_assign_slice(&mut sa, a1);
    sa.extend_from_slice(&a1[a0.len().min(a1.len())..]);
    let mut sb = b0.to_vec();
    field.add_assign_slice(&mut sb, b1);
    sb.extend_from_slice(&b1[b0.len().min(b1.len())..]);
    let mut z1 = mul_slices(field, &sa, &sb, threshold);
    field.sub_assign_slice(&mut z1, &z0);
    field.sub_assign_slice(&mut z1, &z2);

    field.add_assign_slice(&mut out, &z0);
    field.add_assign_slice(&mut out[h..], &z1);
    if !z2.is_empty() {
        field.add_assign_slice(&mut out[2 * h..], &z2);
    }
    out
}

/// `prod (x - a)` over the given points; `1` for the empty list.
pub fn root_product(field: &Field, points: &[FieldElement]) -> Poly {
    let mut coeffs = vec![FieldElement::ONE];
    for &a in points {
        // multiply by (x - a)
        let na = field.neg(a);
        coeffs.push(FieldElement::ZERO);
        for i in (0..coeffs.len()).rev() {
            let shifted = if i > 0 { coeffs[i - 1] } else { FieldElement::ZERO };
            coeffs[i] = field.add(shifted, field.mul(coeffs[i], na));
        }
    }
    Poly::from_coeffs(field, coeffs)
}

/// Divides `g` by the linear factor `x - a`, returning only the quotient.
pub(crate) fn div_linear(field: &Field, g: &[FieldElement], a: FieldElement) -> Vec<FieldElement> {
    if g.is_empty() {
        return Vec::new();
    }
    let mut quot = vec![FieldElement::ZERO; g.len() - 1];
    let mut carry = FieldElement::ZERO;
    for i in (1..g.len()).rev() {
        carry = field.add(g[i], field.mul(carry, a));
        quot[i - 1] = carry;
    }
    quot
}

/// The unique polynomial of degree below `points.len()` through the points.
pub fn lagrange_interpolate(
    field: &Field,
    points: &[(FieldElement, FieldElement)],
) -> Result<Poly, PolyError> {
    let mut seen = HashSet::with_capacity(points.len());
    for &(x, _) in points {
        if !seen.insert(x) {
            return Err(PolyError::DuplicateAbscissa(x));
        }
    }
    let xs: Vec<FieldElement> = points.iter().map(|p| p.0).collect();
    let g = root_product(field, &xs);
    let mut acc = vec![FieldElement::ZERO; points.len()];
    for &(x, y) in points {
        if y.is_zero() {
            continue;
        }
        let basis = div_linear(field, g.coeffs(), x);
        let denom = Poly::from_coeffs(field, basis.clone()).eval(x);
        let w = field.div(y, denom)?;
        field.sub_scaled(&mut acc, &basis, field.neg(w));
    }
    Ok(Poly::from_coeffs(field, acc))
}

impl Add for &Poly {
    type Output = Poly;
    fn add(self, rhs: &Poly) -> Poly {
        Poly::add(self, rhs)
    }
}

impl Sub for &Poly {
    type Output = Poly;
    fn sub(self, rhs: &Poly) -> Poly {
        Poly::sub(self, rhs)
    }
}

impl Mul for &Poly {
    type Output = Poly;
    fn mul(self, rhs: &Poly) -> Poly {
        Poly::mul(self, rhs)
    }
}

impl Neg for &Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        Poly::neg(self)
    }
}
