//! Generalised Reed–Solomon codes: encoding, received-word bookkeeping and
//! the error locator / evaluator pair.
//!
//! Positions are 0-based in this API; the CLI and file formats present them
//! 1-based.

use std::collections::HashSet;

use rand::seq::index;
use rand::Rng;
use thiserror::Error;

use crate::field::{Field, FieldElement, FieldError};
use crate::poly::{div_linear, root_product, same_field, Poly};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CodeError {
    #[error("need 1 <= k <= n <= q, got n = {n}, k = {k}, q = {q}")]
    Dimensions { n: usize, k: usize, q: u32 },
    #[error("evaluation point {0} repeated")]
    DuplicatePoint(FieldElement),
    #[error("column multiplier at position {0} is zero")]
    ZeroMultiplier(usize),
    #[error("expected {expected} multipliers, got {got}")]
    MultiplierCount { expected: usize, got: usize },
    #[error("word has length {got}, code length is {expected}")]
    WordLength { expected: usize, got: usize },
    #[error("message degree {degree} is not below k = {k}")]
    MessageTooLong { degree: usize, k: usize },
    #[error("error weight {weight} exceeds code length {n}")]
    WeightTooLarge { weight: usize, n: usize },
    #[error("position {0} outside the code")]
    Position(usize),
    #[error("value not in the code's field")]
    FieldMismatch,
    #[error(transparent)]
    Field(#[from] FieldError),
}

#[derive(Debug, Clone)]
pub struct GrsCode {
    field: Field,
    k: usize,
    alphas: Vec<FieldElement>,
    betas: Vec<FieldElement>,
    g: Poly,
    zetas: Vec<FieldElement>,
}

/// Error pattern with its locator and evaluator. Values are stored after
/// division by the column multipliers.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ErrorData {
    pub support: Vec<usize>,
    pub values: Vec<FieldElement>,
    pub locator: Poly,
    pub evaluator: Poly,
}

impl ErrorData {
    pub fn weight(&self) -> usize {
        self.support.len()
    }
}

impl GrsCode {
    pub fn new(
        field: &Field,
        k: usize,
        alphas: Vec<FieldElement>,
        betas: Option<Vec<FieldElement>>,
    ) -> Result<Self, CodeError> {
        let n = alphas.len();
        if k == 0 || k > n || n > field.size() as usize {
            return Err(CodeError::Dimensions {
                n,
                k,
                q: field.size(),
            });
        }
        let mut seen = HashSet::with_capacity(n);
        for &a in &alphas {
            if !field.contains(a) {
                return Err(CodeError::FieldMismatch);
            }
            if !seen.insert(a) {
                return Err(CodeError::DuplicatePoint(a));
            }
        }
        let betas = betas.unwrap_or_else(|| vec![FieldElement::ONE; n]);
        if betas.len() != n {
            return Err(CodeError::MultiplierCount {
                expected: n,
                got: betas.len(),
            });
        }
        if let Some(i) = betas.iter().position(|b| b.is_zero()) {
            return Err(CodeError::ZeroMultiplier(i));
        }
        if betas.iter().any(|&b| !field.contains(b)) {
            return Err(CodeError::FieldMismatch);
        }

        let g = root_product(field, &alphas);
        let zetas = alphas
            .iter()
            .map(|&a| {
                let prod = alphas
                    .iter()
                    .filter(|&&b| b != a)
                    .fold(FieldElement::ONE, |acc, &b| field.mul(acc, field.sub(a, b)));
                field.inv(prod)
            })
            .collect::<Result<Vec<_>, _>>()?;

        Ok(GrsCode {
            field: field.clone(),
            k,
            alphas,
            betas,
            g,
            zetas,
        })
    }

    /// Evaluation points `0, 1, ..., n-1` in the integer encoding, unit
    /// multipliers.
    pub fn with_first_points(field: &Field, n: usize, k: usize) -> Result<Self, CodeError> {
        let alphas = (0..n as u64)
            .map(|v| field.elem(v))
            .collect::<Result<Vec<_>, _>>()
            .map_err(|_| CodeError::Dimensions { n, k, q: field.size() })?;
        Self::new(field, k, alphas, None)
    }

    /// Evaluation points `1, ..., n`, avoiding zero.
    pub fn with_nonzero_points(field: &Field, n: usize, k: usize) -> Result<Self, CodeError> {
        let alphas = (1..=n as u64)
            .map(|v| field.elem(v))
            .collect::<Result<Vec<_>, _>>()
            .map_err(|_| CodeError::Dimensions { n, k, q: field.size() })?;
        Self::new(field, k, alphas, None)
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn n(&self) -> usize {
        self.alphas.len()
    }

    pub fn k(&self) -> usize {
        self.k
    }

    /// Minimum distance `n - k + 1`.
    pub fn d(&self) -> usize {
        self.n() - self.k + 1
    }

    pub fn alphas(&self) -> &[FieldElement] {
        &self.alphas
    }

    pub fn betas(&self) -> &[FieldElement] {
        &self.betas
    }

    /// `G = prod (x - alpha_i)`.
    pub fn g(&self) -> &Poly {
        &self.g
    }

    /// `zeta_i = prod_{j != i} (alpha_i - alpha_j)^-1`.
    pub fn zetas(&self) -> &[FieldElement] {
        &self.zetas
    }

    pub fn has_zero_point(&self) -> bool {
        self.alphas.iter().any(|a| a.is_zero())
    }

    fn check_len(&self, len: usize) -> Result<(), CodeError> {
        if len == self.n() {
            Ok(())
        } else {
            Err(CodeError::WordLength {
                expected: self.n(),
                got: len,
            })
        }
    }

    /// `ev(f) = (beta_i f(alpha_i))_i`.
    pub fn encode(&self, f: &Poly) -> Result<Vec<FieldElement>, CodeError> {
        if !same_field(f.field(), &self.field) {
            return Err(CodeError::FieldMismatch);
        }
        if let Some(deg) = f.degree().filter(|&d| d >= self.k) {
            return Err(CodeError::MessageTooLong { degree: deg, k: self.k });
        }
        Ok(self.evaluate(f))
    }

    /// `ev` without the degree restriction.
    pub(crate) fn evaluate(&self, f: &Poly) -> Vec<FieldElement> {
        self.alphas
            .iter()
            .zip(&self.betas)
            .map(|(&a, &b)| self.field.mul(b, f.eval(a)))
            .collect()
    }

    /// `r'_i = r_i / beta_i`.
    pub fn normalize_received(&self, r: &[FieldElement]) -> Result<Vec<FieldElement>, CodeError> {
        self.check_len(r.len())?;
        if r.iter().any(|&v| !self.field.contains(v)) {
            return Err(CodeError::FieldMismatch);
        }
        r.iter()
            .zip(&self.betas)
            .map(|(&v, &b)| Ok(self.field.div(v, b)?))
            .collect()
    }

    /// Lagrange interpolant `R` of an already normalised word:
    /// `deg R < n`, `R(alpha_i) = r_i`.
    pub fn interpolate(&self, normalized: &[FieldElement]) -> Poly {
        debug_assert_eq!(normalized.len(), self.n());
        let field = &self.field;
        let mut acc = vec![FieldElement::ZERO; self.n()];
        for ((&r, &a), &z) in normalized.iter().zip(&self.alphas).zip(&self.zetas) {
            if r.is_zero() {
                continue;
            }
            let basis = div_linear(field, self.g.coeffs(), a);
            field.sub_scaled(&mut acc, &basis, field.neg(field.mul(r, z)));
        }
        Poly::from_coeffs(field, acc)
    }

    /// Interpolant of the normalised received word.
    pub fn received_interpolant(&self, r: &[FieldElement]) -> Result<Poly, CodeError> {
        Ok(self.interpolate(&self.normalize_received(r)?))
    }

    /// Message polynomial of a codeword, recovered from its first `k`
    /// coordinates. The remaining coordinates are not checked.
    pub fn unencode(&self, c: &[FieldElement]) -> Result<Poly, CodeError> {
        let norm = self.normalize_received(c)?;
        let pts: Vec<_> = self.alphas[..self.k]
            .iter()
            .copied()
            .zip(norm[..self.k].iter().copied())
            .collect();
        crate::poly::lagrange_interpolate(&self.field, &pts)
            .map_err(|_| CodeError::FieldMismatch)
    }

    pub fn is_codeword(&self, c: &[FieldElement]) -> Result<bool, CodeError> {
        let norm = self.normalize_received(c)?;
        Ok(self.interpolate(&norm).degree().is_none_or(|d| d < self.k))
    }

    /// `Lambda = prod_{j in E} (x - alpha_j)`.
    pub fn error_locator(&self, support: &[usize]) -> Result<Poly, CodeError> {
        let pts = support
            .iter()
            .map(|&j| self.alphas.get(j).copied().ok_or(CodeError::Position(j)))
            .collect::<Result<Vec<_>, _>>()?;
        Ok(root_product(&self.field, &pts))
    }

    /// `Omega = -sum_{i in E} e_i zeta_i prod_{j in E, j != i} (x - alpha_j)`
    /// for a normalised error vector.
    pub fn error_evaluator(&self, normalized_error: &[FieldElement]) -> Result<Poly, CodeError> {
        self.check_len(normalized_error.len())?;
        let support: Vec<usize> = (0..self.n()).filter(|&i| !normalized_error[i].is_zero()).collect();
        let locator = self.error_locator(&support)?;
        Ok(self.evaluator_from(&support, normalized_error, &locator))
    }

    fn evaluator_from(&self, support: &[usize], e: &[FieldElement], locator: &Poly) -> Poly {
        let field = &self.field;
        let mut acc = vec![FieldElement::ZERO; support.len()];
        for &i in support {
            let part = div_linear(field, locator.coeffs(), self.alphas[i]);
            field.sub_scaled(&mut acc, &part, field.mul(e[i], self.zetas[i]));
        }
        Poly::from_coeffs(field, acc)
    }

    /// Support, normalised values, locator and evaluator of an error vector.
    pub fn error_data(&self, e: &[FieldElement]) -> Result<ErrorData, CodeError> {
        let norm = self.normalize_received(e)?;
        let support: Vec<usize> = (0..self.n()).filter(|&i| !norm[i].is_zero()).collect();
        let locator = self.error_locator(&support)?;
        let evaluator = self.evaluator_from(&support, &norm, &locator);
        Ok(ErrorData {
            values: support.iter().map(|&i| norm[i]).collect(),
            support,
            locator,
            evaluator,
        })
    }

    pub fn random_message<R: Rng + ?Sized>(&self, rng: &mut R) -> Poly {
        let q = self.field.size();
        let coeffs = (0..self.k)
            .map(|_| FieldElement::from_raw(rng.gen_range(0..q)))
            .collect();
        Poly::from_coeffs(&self.field, coeffs)
    }
}

pub fn hamming_distance(a: &[FieldElement], b: &[FieldElement]) -> usize {
    debug_assert_eq!(a.len(), b.len());
    a.iter().zip(b).filter(|(x, y)| x != y).count()
}

pub fn hamming_weight(a: &[FieldElement]) -> usize {
    a.iter().filter(|x| !x.is_zero()).count()
}

/// Error of weight exactly `weight`: uniformly random support, each value
/// uniform over the nonzero field elements.
pub fn random_error<R: Rng + ?Sized>(
    code: &GrsCode,
    weight: usize,
    rng: &mut R,
) -> Result<Vec<FieldElement>, CodeError> {
    let n = code.n();
    if weight > n {
        return Err(CodeError::WeightTooLarge { weight, n });
    }
    let q = code.field().size();
    let mut e = vec![FieldElement::ZERO; n];
    for pos in index::sample(rng, n, weight) {
        e[pos] = FieldElement::from_raw(rng.gen_range(1..q));
    }
    Ok(e)
}

pub fn add_words(field: &Field, a: &[FieldElement], b: &[FieldElement]) -> Vec<FieldElement> {
    a.iter().zip(b).map(|(&x, &y)| field.add(x, y)).collect()
}

pub fn sub_words(field: &Field, a: &[FieldElement], b: &[FieldElement]) -> Vec<FieldElement> {
    a.iter().zip(b).map(|(&x, &y)| field.sub(x, y)).collect()
}
