//! Finite fields GF(p^m).
//!
//! Elements are packed base-p integers: digit `i` of the value is the
//! coefficient of `x^i` of the residue representative modulo the field's
//! defining polynomial. Prime fields use direct modular arithmetic; extension
//! fields multiply through log/antilog tables.

use std::fmt;
use std::sync::Arc;

use num_bigint::BigUint;
use thiserror::Error;

/// Largest field size accepted by [`FieldCtx::new`].
pub const DEFAULT_SIZE_CEILING: u64 = 1 << 20;

/// Fields whose size is at most this use a precomputed addition table
/// (odd characteristic extensions only).
const ADD_TABLE_LIMIT: u32 = 1024;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FieldError {
    #[error("characteristic {0} is not prime")]
    NotPrime(u64),
    #[error("extension degree must be at least 1")]
    ZeroDegree,
    #[error("field size {p}^{m} exceeds the ceiling {ceiling}")]
    TooLarge { p: u64, m: u32, ceiling: u64 },
    #[error("modulus must have {expected} coefficients, got {got}")]
    ModulusLength { expected: usize, got: usize },
    #[error("modulus is not monic")]
    ModulusNotMonic,
    #[error("modulus coefficient {0} is not reduced modulo p")]
    ModulusCoefficient(u32),
    #[error("modulus is reducible over GF({0})")]
    Reducible(u32),
    #[error("no irreducible polynomial of degree {m} over GF({p}) found")]
    NoIrreducible { p: u32, m: u32 },
    #[error("value {value} is not an element of GF({q})")]
    OutOfRange { value: u64, q: u32 },
    #[error("division by zero")]
    DivisionByZero,
    #[error("elements belong to different fields")]
    FieldMismatch,
}

/// An element of some [`FieldCtx`], in packed base-p encoding.
#[derive(Clone, Copy, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
#[repr(transparent)]
pub struct FieldElement(u32);

impl FieldElement {
    pub const ZERO: FieldElement = FieldElement(0);
    pub const ONE: FieldElement = FieldElement(1);

    /// Wraps a raw value without checking it against any field.
    #[inline]
    pub const fn from_raw(value: u32) -> Self {
        FieldElement(value)
    }

    #[inline]
    pub const fn value(self) -> u32 {
        self.0
    }

    #[inline]
    pub const fn is_zero(self) -> bool {
        self.0 == 0
    }
}

impl fmt::Debug for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl fmt::Display for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// Shared handle to a field context.
pub type Field = Arc<FieldCtx>;

#[derive(Clone)]
enum Arith {
    Prime,
    Binary {
        log: Vec<u32>,
        exp: Vec<u32>,
    },
    Odd {
        log: Vec<u32>,
        exp: Vec<u32>,
        neg: Vec<u32>,
        add: Option<Vec<u32>>,
    },
}

/// A concrete finite field GF(p^m) together with its arithmetic tables.
#[derive(Clone)]
pub struct FieldCtx {
    p: u32,
    m: u32,
    q: u32,
    modulus: Vec<u32>,
    arith: Arith,
}

impl PartialEq for FieldCtx {
    fn eq(&self, other: &Self) -> bool {
        self.p == other.p && self.m == other.m && self.modulus == other.modulus
    }
}

impl Eq for FieldCtx {}

impl fmt::Debug for FieldCtx {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.m == 1 {
            write!(f, "GF({})", self.p)
        } else {
            write!(f, "GF({}^{}) mod {:?}", self.p, self.m, self.modulus)
        }
    }
}

impl FieldCtx {
    /// Builds GF(p^m). Without a modulus, extension fields use the first
    /// monic irreducible polynomial of degree `m` in lexicographic order of
    /// the lower coefficient vector `(c_{m-1}, ..., c_0)`.
    pub fn new(p: u64, m: u32, modulus: Option<&[u32]>) -> Result<Self, FieldError> {
        Self::with_ceiling(p, m, modulus, DEFAULT_SIZE_CEILING)
    }

    /// Same as [`FieldCtx::new`] returning a shareable handle.
    pub fn shared(p: u64, m: u32, modulus: Option<&[u32]>) -> Result<Field, FieldError> {
        Self::new(p, m, modulus).map(Arc::new)
    }

    pub fn prime(p: u64) -> Result<Field, FieldError> {
        Self::shared(p, 1, None)
    }

    pub fn with_ceiling(
        p: u64,
        m: u32,
        modulus: Option<&[u32]>,
        ceiling: u64,
    ) -> Result<Self, FieldError> {
        if !is_prime(p) {
            return Err(FieldError::NotPrime(p));
        }
        if m == 0 {
            return Err(FieldError::ZeroDegree);
        }
        let q = (0..m)
            .try_fold(1u64, |acc, _| acc.checked_mul(p))
            .filter(|&q| q <= ceiling && q <= u32::MAX as u64)
            .ok_or(FieldError::TooLarge { p, m, ceiling })?;
        let p = p as u32;
        let q = q as u32;

        let modulus = match modulus {
            Some(coeffs) => {
                validate_modulus(p, m, coeffs)?;
                coeffs.to_vec()
            }
            None if m == 1 => vec![0, 1],
            None => first_irreducible(p, m).ok_or(FieldError::NoIrreducible { p, m })?,
        };

        let arith = if m == 1 {
            Arith::Prime
        } else {
            build_tables(p, m, q, &modulus)
        };
        Ok(FieldCtx {
            p,
            m,
            q,
            modulus,
            arith,
        })
    }

    #[inline]
    pub fn characteristic(&self) -> u32 {
        self.p
    }

    #[inline]
    pub fn degree(&self) -> u32 {
        self.m
    }

    #[inline]
    pub fn size(&self) -> u32 {
        self.q
    }

    /// Coefficients of the defining polynomial, lowest degree first.
    pub fn modulus(&self) -> &[u32] {
        &self.modulus
    }

    pub fn is_prime_field(&self) -> bool {
        self.m == 1
    }

    #[inline]
    pub fn contains(&self, a: FieldElement) -> bool {
        a.0 < self.q
    }

    /// Checked conversion from the packed integer encoding.
    pub fn elem(&self, value: u64) -> Result<FieldElement, FieldError> {
        if value < self.q as u64 {
            Ok(FieldElement(value as u32))
        } else {
            Err(FieldError::OutOfRange { value, q: self.q })
        }
    }

    /// Image of an integer under `Z -> GF(p) ⊂ GF(q)`.
    pub fn from_int(&self, value: i64) -> FieldElement {
        FieldElement(value.rem_euclid(self.p as i64) as u32)
    }

    /// Iterator over all field elements in encoding order.
    pub fn elements(&self) -> impl Iterator<Item = FieldElement> {
        (0..self.q).map(FieldElement)
    }

    #[inline]
    pub fn add(&self, a: FieldElement, b: FieldElement) -> FieldElement {
        debug_assert!(self.contains(a) && self.contains(b));
        match &self.arith {
            Arith::Prime => {
                let s = a.0 + b.0;
                FieldElement(if s >= self.p { s - self.p } else { s })
            }
            Arith::Binary { .. } => FieldElement(a.0 ^ b.0),
            Arith::Odd { add: Some(t), .. } => FieldElement(t[(a.0 * self.q + b.0) as usize]),
            Arith::Odd { add: None, .. } => FieldElement(self.digit_add(a.0, b.0)),
        }
    }

    #[inline]
    pub fn neg(&self, a: FieldElement) -> FieldElement {
        match &self.arith {
            Arith::Prime => FieldElement(if a.0 == 0 { 0 } else { self.p - a.0 }),
            Arith::Binary { .. } => a,
            Arith::Odd { neg, .. } => FieldElement(neg[a.0 as usize]),
        }
    }

    #[inline]
    pub fn sub(&self, a: FieldElement, b: FieldElement) -> FieldElement {
        match &self.arith {
            Arith::Prime => FieldElement(if a.0 >= b.0 {
                a.0 - b.0
            } else {
                a.0 + self.p - b.0
            }),
            Arith::Binary { .. } => FieldElement(a.0 ^ b.0),
            _ => self.add(a, self.neg(b)),
        }
    }

    #[inline]
    pub fn mul(&self, a: FieldElement, b: FieldElement) -> FieldElement {
        debug_assert!(self.contains(a) && self.contains(b));
        match &self.arith {
            Arith::Prime => FieldElement(((a.0 as u64 * b.0 as u64) % self.p as u64) as u32),
            Arith::Binary { log, exp } | Arith::Odd { log, exp, .. } => {
                if a.0 == 0 || b.0 == 0 {
                    FieldElement(0)
                } else {
                    FieldElement(exp[(log[a.0 as usize] + log[b.0 as usize]) as usize])
                }
            }
        }
    }

    pub fn inv(&self, a: FieldElement) -> Result<FieldElement, FieldError> {
        if a.0 == 0 {
            return Err(FieldError::DivisionByZero);
        }
        Ok(match &self.arith {
            Arith::Prime => FieldElement(inv_mod(a.0, self.p)),
            Arith::Binary { log, exp } | Arith::Odd { log, exp, .. } => {
                let l = log[a.0 as usize];
                FieldElement(exp[if l == 0 { 0 } else { (self.q - 1 - l) as usize }])
            }
        })
    }

    pub fn div(&self, a: FieldElement, b: FieldElement) -> Result<FieldElement, FieldError> {
        Ok(self.mul(a, self.inv(b)?))
    }

    /// `a^e` by square-and-multiply.
    pub fn pow(&self, a: FieldElement, mut e: u64) -> FieldElement {
        let mut base = a;
        let mut acc = FieldElement::ONE;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            e >>= 1;
        }
        acc
    }

    /// `a^e` for an arbitrarily large exponent.
    pub fn pow_big(&self, a: FieldElement, e: &BigUint) -> FieldElement {
        let mut acc = FieldElement::ONE;
        for i in (0..e.bits()).rev() {
            acc = self.mul(acc, acc);
            if e.bit(i) {
                acc = self.mul(acc, a);
            }
        }
        acc
    }

    /// Discrete log to the table generator, for nonzero elements of an
    /// extension field.
    pub fn log(&self, a: FieldElement) -> Option<u32> {
        match &self.arith {
            Arith::Prime => None,
            Arith::Binary { log, .. } | Arith::Odd { log, .. } => {
                (a.0 != 0).then(|| log[a.0 as usize])
            }
        }
    }

    /// Antilog table lookup: the generator raised to `i mod (q-1)`.
    pub fn antilog(&self, i: u64) -> Option<FieldElement> {
        match &self.arith {
            Arith::Prime => None,
            Arith::Binary { exp, .. } | Arith::Odd { exp, .. } => {
                Some(FieldElement(exp[(i % (self.q as u64 - 1)) as usize]))
            }
        }
    }

    fn digit_add(&self, mut a: u32, mut b: u32) -> u32 {
        let mut out = 0;
        let mut place = 1;
        while a > 0 || b > 0 {
            let d = (a % self.p + b % self.p) % self.p;
            out += d * place;
            place *= self.p;
            a /= self.p;
            b /= self.p;
        }
        out
    }

    // ---- slice kernels used by the polynomial layer ----

    /// `dst[i] -= c * src[i]`.
    pub(crate) fn sub_scaled(&self, dst: &mut [FieldElement], src: &[FieldElement], c: FieldElement) {
        debug_assert!(dst.len() >= src.len());
        if c.is_zero() {
            return;
        }
        match &self.arith {
            Arith::Prime => {
                let p = self.p as u64;
                let nc = (p - c.0 as u64) % p;
                for (d, s) in dst.iter_mut().zip(src) {
                    d.0 = ((d.0 as u64 + nc * s.0 as u64) % p) as u32;
                }
            }
            Arith::Binary { log, exp } => {
                let lc = log[c.0 as usize];
                for (d, s) in dst.iter_mut().zip(src) {
                    if s.0 != 0 {
                        d.0 ^= exp[(lc + log[s.0 as usize]) as usize];
                    }
                }
            }
            Arith::Odd { log, exp, .. } => {
                let lc = log[self.neg(c).0 as usize];
                for (d, s) in dst.iter_mut().zip(src) {
                    if s.0 != 0 {
                        let t = FieldElement(exp[(lc + log[s.0 as usize]) as usize]);
                        *d = self.add(*d, t);
                    }
                }
            }
        }
    }

    /// `dst[i] += src[i]`.
    pub(crate) fn add_assign_slice(&self, dst: &mut [FieldElement], src: &[FieldElement]) {
        for (d, s) in dst.iter_mut().zip(src) {
            *d = self.add(*d, *s);
        }
    }

    /// `dst[i] -= src[i]`.
    pub(crate) fn sub_assign_slice(&self, dst: &mut [FieldElement], src: &[FieldElement]) {
        for (d, s) in dst.iter_mut().zip(src) {
            *d = self.sub(*d, *s);
        }
    }

    pub(crate) fn scale_slice(&self, v: &mut [FieldElement], c: FieldElement) {
        for x in v.iter_mut() {
            *x = self.mul(*x, c);
        }
    }

    /// Schoolbook product `out += a * b`; `out.len() >= a.len() + b.len() - 1`.
    pub(crate) fn convolve_into(&self, a: &[FieldElement], b: &[FieldElement], out: &mut [FieldElement]) {
        if a.is_empty() || b.is_empty() {
            return;
        }
        match &self.arith {
            Arith::Prime => {
                let p = self.p as u64;
                let mut acc: Vec<u64> = out[..a.len() + b.len() - 1].iter().map(|x| x.0 as u64).collect();
                // p < 2^20, so each product is below 2^40 and 2^23 of them fit in a u64.
                let flush_every = 1usize << 23;
                let mut pending = 0usize;
                for (i, ai) in a.iter().enumerate() {
                    if ai.0 == 0 {
                        continue;
                    }
                    let av = ai.0 as u64;
                    for (slot, bj) in acc[i..i + b.len()].iter_mut().zip(b) {
                        *slot += av * bj.0 as u64;
                    }
                    pending += 1;
                    if pending >= flush_every {
                        acc.iter_mut().for_each(|x| *x %= p);
                        pending = 0;
                    }
                }
                for (o, x) in out.iter_mut().zip(acc) {
                    o.0 = (x % p) as u32;
                }
            }
            Arith::Binary { log, exp } => {
                let lb: Vec<Option<u32>> = b.iter().map(|x| (x.0 != 0).then(|| log[x.0 as usize])).collect();
                for (i, ai) in a.iter().enumerate() {
                    if ai.0 == 0 {
                        continue;
                    }
                    let la = log[ai.0 as usize];
                    for (slot, lbj) in out[i..i + b.len()].iter_mut().zip(&lb) {
                        if let Some(l) = lbj {
                            slot.0 ^= exp[(la + l) as usize];
                        }
                    }
                }
            }
            Arith::Odd { log, exp, .. } => {
                let lb: Vec<Option<u32>> = b.iter().map(|x| (x.0 != 0).then(|| log[x.0 as usize])).collect();
                for (i, ai) in a.iter().enumerate() {
                    if ai.0 == 0 {
                        continue;
                    }
                    let la = log[ai.0 as usize];
                    for (slot, lbj) in out[i..i + b.len()].iter_mut().zip(&lb) {
                        if let Some(l) = lbj {
                            *slot = self.add(*slot, FieldElement(exp[(la + l) as usize]));
                        }
                    }
                }
            }
        }
    }
}

// ---- construction helpers ----

pub(crate) fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2u64;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

fn inv_mod(a: u32, p: u32) -> u32 {
    let (mut t, mut new_t) = (0i64, 1i64);
    let (mut r, mut new_r) = (p as i64, a as i64);
    while new_r != 0 {
        let quot = r / new_r;
        (t, new_t) = (new_t, t - quot * new_t);
        (r, new_r) = (new_r, r - quot * new_r);
    }
    t.rem_euclid(p as i64) as u32
}

fn validate_modulus(p: u32, m: u32, coeffs: &[u32]) -> Result<(), FieldError> {
    if coeffs.len() != m as usize + 1 {
        return Err(FieldError::ModulusLength {
            expected: m as usize + 1,
            got: coeffs.len(),
        });
    }
    if let Some(&c) = coeffs.iter().find(|&&c| c >= p) {
        return Err(FieldError::ModulusCoefficient(c));
    }
    if coeffs[m as usize] != 1 {
        return Err(FieldError::ModulusNotMonic);
    }
    if m > 1 && !gfp::is_irreducible(p, coeffs) {
        return Err(FieldError::Reducible(p));
    }
    Ok(())
}

fn first_irreducible(p: u32, m: u32) -> Option<Vec<u32>> {
    let count = (p as u64).pow(m);
    (0..count).find_map(|v| {
        let mut coeffs = Vec::with_capacity(m as usize + 1);
        let mut rest = v;
        for _ in 0..m {
            coeffs.push((rest % p as u64) as u32);
            rest /= p as u64;
        }
        coeffs.push(1);
        gfp::is_irreducible(p, &coeffs).then_some(coeffs)
    })
}

fn unpack(v: u32, p: u32, m: u32) -> Vec<u32> {
    let mut out = Vec::with_capacity(m as usize);
    let mut rest = v;
    for _ in 0..m {
        out.push(rest % p);
        rest /= p;
    }
    out
}

fn pack(digits: &[u32], p: u32) -> u32 {
    digits.iter().rev().fold(0, |acc, &d| acc * p + d)
}

/// Multiplication by polynomial arithmetic modulo the defining polynomial;
/// only used while building the tables.
fn slow_mul(a: u32, b: u32, p: u32, m: u32, modulus: &[u32]) -> u32 {
    let prod = gfp::mul(p, &unpack(a, p, m), &unpack(b, p, m));
    let mut rem = gfp::rem(p, &prod, modulus);
    rem.resize(m as usize, 0);
    pack(&rem, p)
}

fn build_tables(p: u32, m: u32, q: u32, modulus: &[u32]) -> Arith {
    let order = q - 1;
    let factors = prime_factors(order);
    let slow_pow = |a: u32, mut e: u32| {
        let mut base = a;
        let mut acc = 1u32;
        while e > 0 {
            if e & 1 == 1 {
                acc = slow_mul(acc, base, p, m, modulus);
            }
            base = slow_mul(base, base, p, m, modulus);
            e >>= 1;
        }
        acc
    };
    let generator = (2..q)
        .find(|&g| factors.iter().all(|&r| slow_pow(g, order / r) != 1))
        .expect("multiplicative group of a finite field is cyclic");

    let mut exp = vec![0u32; 2 * order as usize];
    let mut log = vec![0u32; q as usize];
    let mut cur = 1u32;
    for i in 0..order {
        exp[i as usize] = cur;
        exp[(i + order) as usize] = cur;
        log[cur as usize] = i;
        cur = slow_mul(cur, generator, p, m, modulus);
    }

    if p == 2 {
        return Arith::Binary { log, exp };
    }
    let neg: Vec<u32> = (0..q)
        .map(|v| pack(&unpack(v, p, m).iter().map(|&d| (p - d) % p).collect::<Vec<_>>(), p))
        .collect();
    let add = (q <= ADD_TABLE_LIMIT).then(|| {
        let digits: Vec<Vec<u32>> = (0..q).map(|v| unpack(v, p, m)).collect();
        let mut table = vec![0u32; (q * q) as usize];
        for a in 0..q {
            for b in 0..q {
                let s: Vec<u32> = digits[a as usize]
                    .iter()
                    .zip(&digits[b as usize])
                    .map(|(x, y)| (x + y) % p)
                    .collect();
                table[(a * q + b) as usize] = pack(&s, p);
            }
        }
        table
    });
    Arith::Odd { log, exp, neg, add }
}

fn prime_factors(mut n: u32) -> Vec<u32> {
    let mut out = Vec::new();
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            out.push(d);
            while n.is_multiple_of(d) {
                n /= d;
            }
        }
        d += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

/// Minimal dense polynomial arithmetic over GF(p), used for modulus
/// validation and table construction.
pub(crate) mod gfp {
    fn trim(mut v: Vec<u32>) -> Vec<u32> {
        while v.last() == Some(&0) {
            v.pop();
        }
        v
    }

    fn inv(a: u32, p: u32) -> u32 {
        super::inv_mod(a, p)
    }

    pub fn mul(p: u32, a: &[u32], b: &[u32]) -> Vec<u32> {
        if a.is_empty() || b.is_empty() {
            return Vec::new();
        }
        let mut out = vec![0u64; a.len() + b.len() - 1];
        for (i, &x) in a.iter().enumerate() {
            for (j, &y) in b.iter().enumerate() {
                out[i + j] = (out[i + j] + x as u64 * y as u64) % p as u64;
            }
        }
        trim(out.into_iter().map(|x| x as u32).collect())
    }

    pub fn rem(p: u32, a: &[u32], b: &[u32]) -> Vec<u32> {
        let b = trim(b.to_vec());
        let mut r = trim(a.to_vec());
        let db = b.len() - 1;
        let lead_inv = inv(b[db], p);
        while r.len() > db {
            let dr = r.len() - 1;
            let c = (r[dr] as u64 * lead_inv as u64 % p as u64) as u32;
            for (i, &bi) in b.iter().enumerate() {
                let idx = dr - db + i;
                r[idx] = ((r[idx] as u64 + (p - c) as u64 * bi as u64) % p as u64) as u32;
            }
            r = trim(r);
        }
        r
    }

    pub fn gcd(p: u32, a: &[u32], b: &[u32]) -> Vec<u32> {
        let mut a = trim(a.to_vec());
        let mut b = trim(b.to_vec());
        while !b.is_empty() {
            let r = rem(p, &a, &b);
            a = b;
            b = r;
        }
        a
    }

    fn eval(p: u32, f: &[u32], x: u32) -> u32 {
        f.iter()
            .rev()
            .fold(0u64, |acc, &c| (acc * x as u64 + c as u64) % p as u64) as u32
    }

    fn powmod(p: u32, base: &[u32], mut e: u64, m: &[u32]) -> Vec<u32> {
        let mut acc = vec![1u32];
        let mut b = rem(p, base, m);
        while e > 0 {
            if e & 1 == 1 {
                acc = rem(p, &mul(p, &acc, &b), m);
            }
            b = rem(p, &mul(p, &b, &b), m);
            e >>= 1;
        }
        acc
    }

    /// Degree ≤ 3: no roots. Higher degree: Ben-Or, gcd(x^(p^i) - x, f) = 1
    /// for all i ≤ deg/2.
    pub fn is_irreducible(p: u32, f: &[u32]) -> bool {
        let f = trim(f.to_vec());
        let deg = f.len().saturating_sub(1);
        if deg == 0 {
            return false;
        }
        if deg == 1 {
            return true;
        }
        if deg <= 3 {
            return (0..p).all(|x| eval(p, &f, x) != 0);
        }
        let x = vec![0u32, 1];
        let mut h = x.clone();
        for _ in 0..deg / 2 {
            h = powmod(p, &h, p as u64, &f);
            let mut diff = h.clone();
            diff.resize(diff.len().max(2), 0);
            diff[1] = (diff[1] + p - 1) % p;
            let g = gcd(p, &f, &trim(diff));
            if g.len() != 1 {
                return false;
            }
        }
        true
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn gf(p: u64, m: u32) -> FieldCtx {
        FieldCtx::new(p, m, None).unwrap()
    }

    #[test]
    fn prime_field_inverse() {
        let f = gf(23, 1);
        let five = f.elem(5).unwrap();
        let fourteen = f.elem(14).unwrap();
        assert_eq!(f.mul(five, fourteen), FieldElement::ONE);
        assert_eq!(f.inv(five).unwrap(), fourteen);
    }

    #[test]
    fn rejects_non_prime_characteristic() {
        assert_eq!(FieldCtx::new(4, 1, None).unwrap_err(), FieldError::NotPrime(4));
        assert_eq!(FieldCtx::new(1, 1, None).unwrap_err(), FieldError::NotPrime(1));
    }

    #[test]
    fn rejects_reducible_modulus() {
        // x^2 + 1 = (x + 1)^2 over GF(2)
        assert_eq!(
            FieldCtx::new(2, 2, Some(&[1, 0, 1])).unwrap_err(),
            FieldError::Reducible(2)
        );
        // x^4 + x^2 + 1 = (x^2 + x + 1)^2, no roots but reducible
        assert_eq!(
            FieldCtx::new(2, 4, Some(&[1, 0, 1, 0, 1])).unwrap_err(),
            FieldError::Reducible(2)
        );
        assert!(matches!(
            FieldCtx::new(2, 2, Some(&[1, 1, 0])),
            Err(FieldError::ModulusNotMonic)
        ));
    }

    #[test]
    fn rejects_oversized_field() {
        assert!(matches!(
            FieldCtx::new(2, 21, None),
            Err(FieldError::TooLarge { .. })
        ));
        assert!(FieldCtx::with_ceiling(2, 21, None, 1 << 21).is_ok());
    }

    #[test]
    fn gf256_reduction_by_modulus() {
        // x^8 + x^4 + x^3 + x^2 + 1
        let f = FieldCtx::new(2, 8, Some(&[1, 0, 1, 1, 1, 0, 0, 0, 1])).unwrap();
        assert_eq!(f.mul(FieldElement(2), FieldElement(128)), FieldElement(29));
    }

    #[test]
    fn default_modulus_is_first_irreducible() {
        assert_eq!(gf(2, 8).modulus(), &[1, 1, 0, 1, 1, 0, 0, 0, 1]);
        assert_eq!(gf(2, 2).modulus(), &[1, 1, 1]);
        // x^2 + 1 is irreducible over GF(3) but x^2 is not; x^2 + 1 comes first
        assert_eq!(gf(3, 2).modulus(), &[1, 0, 1]);
    }

    #[test]
    fn group_order_and_tables() {
        for (p, m) in [(2, 5), (2, 6), (5, 2), (5, 3), (3, 4), (71, 1)] {
            let f = gf(p, m);
            for a in f.elements().skip(1) {
                assert_eq!(f.pow(a, f.size() as u64 - 1), FieldElement::ONE);
                if let Some(l) = f.log(a) {
                    assert_eq!(f.antilog(l as u64), Some(a));
                }
            }
            if !f.is_prime_field() {
                for i in 0..(f.size() as u64 - 1) {
                    assert_eq!(f.log(f.antilog(i).unwrap()), Some(i as u32));
                }
            }
        }
    }

    #[test]
    fn inverse_of_zero_is_error() {
        let f = gf(5, 3);
        assert_eq!(f.inv(FieldElement::ZERO), Err(FieldError::DivisionByZero));
    }

    #[test]
    fn big_exponent_pow_matches_reduced() {
        let f = gf(5, 3);
        let a = f.elem(37).unwrap();
        let e = BigUint::parse_bytes(b"123456789012345678901234567890", 10).unwrap();
        let reduced = (&e % BigUint::from(f.size() - 1)).to_u64_digits();
        let r = reduced.first().copied().unwrap_or(0);
        assert_eq!(f.pow_big(a, &e), f.pow(a, r));
    }

    #[test]
    fn large_odd_extension_without_add_table() {
        // 3^7 = 2187 > ADD_TABLE_LIMIT
        let f = gf(3, 7);
        let a = f.elem(1000).unwrap();
        let b = f.elem(2000).unwrap();
        assert_eq!(f.sub(f.add(a, b), b), a);
        assert_eq!(f.add(a, f.neg(a)), FieldElement::ZERO);
    }

    #[test]
    fn element_range_checked() {
        let f = gf(7, 1);
        assert!(f.elem(7).is_err());
        assert_eq!(f.from_int(-1), FieldElement(6));
    }
}
