//! Power decoding with multiplicities: key-equation module, reduction and
//! recovery of the message.

pub mod bound;
pub mod identities;
pub mod radius;

use num_rational::Ratio;
use thiserror::Error;

use crate::field::{Field, FieldElement};
use crate::grs::{hamming_distance, CodeError, GrsCode};
use crate::matrix::ShiftedPolyMatrix;
use crate::poly::Poly;

pub use bound::{failure_bound_23, FailureBound};
pub use identities::{check_power_key_identities, IdentityReport};
pub use radius::{choose_params, params_admissible, tau_floor, tau_gs, tau_pow, DEFAULT_POWER_CEILING};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DecodeError {
    #[error(transparent)]
    Code(#[from] CodeError),
    #[error("parameters (s, l) = ({s}, {l}) are not admissible for n = {n}, k = {k}")]
    Params { s: usize, l: usize, n: usize, k: usize },
    #[error("syndrome decoding needs nonzero evaluation points")]
    ZeroEvaluationPoint,
    #[error("syndrome decoding needs s < n (s = {s}, n = {n})")]
    MultiplicityTooLarge { s: usize, n: usize },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct DecoderParams {
    pub s: usize,
    pub l: usize,
    /// Drop the `lambda_1 .. lambda_{s-1}` columns.
    pub punctured: bool,
}

impl DecoderParams {
    pub fn new(s: usize, l: usize) -> Self {
        DecoderParams { s, l, punctured: true }
    }

    pub fn full(s: usize, l: usize) -> Self {
        DecoderParams { s, l, punctured: false }
    }

    pub fn validate(&self, code: &GrsCode) -> Result<(), DecodeError> {
        if params_admissible(self.s, self.l, code.n(), code.k(), DEFAULT_POWER_CEILING) {
            Ok(())
        } else {
            Err(DecodeError::Params {
                s: self.s,
                l: self.l,
                n: code.n(),
                k: code.k(),
            })
        }
    }

    pub fn tau_pow(&self, code: &GrsCode) -> Ratio<i64> {
        tau_pow(self.s as i64, self.l as i64, code.n() as i64, code.k() as i64)
    }

    /// Column of `psi_t` in the key module.
    pub fn psi_column(&self, t: usize) -> usize {
        debug_assert!((1..=self.l).contains(&t));
        if self.punctured {
            t
        } else {
            self.s + t - 1
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum FailureReason {
    /// `lambda_0` does not divide `psi_1`.
    DivisionFailed,
    /// The candidate codeword is not at the distance predicted by `lambda_0`.
    DistanceMismatch,
    /// The recovered locator power is not an `s`-th power.
    NotAPower,
}

impl std::fmt::Display for FailureReason {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            FailureReason::DivisionFailed => "division-failed",
            FailureReason::DistanceMismatch => "distance-mismatch",
            FailureReason::NotAPower => "not-a-power",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum DecodeResult {
    Decoded {
        f: Poly,
        codeword: Vec<FieldElement>,
        error_weight: usize,
    },
    Failed {
        reason: FailureReason,
    },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Diagnostics {
    pub deg_lambda0: Option<usize>,
    pub tau: Ratio<i64>,
    pub reduction_steps: usize,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DecodeOutcome {
    pub result: DecodeResult,
    pub diagnostics: Diagnostics,
}

impl DecodeOutcome {
    pub fn is_decoded(&self) -> bool {
        matches!(self.result, DecodeResult::Decoded { .. })
    }

    pub fn message(&self) -> Option<&Poly> {
        match &self.result {
            DecodeResult::Decoded { f, .. } => Some(f),
            DecodeResult::Failed { .. } => None,
        }
    }

    pub fn codeword(&self) -> Option<&[FieldElement]> {
        match &self.result {
            DecodeResult::Decoded { codeword, .. } => Some(codeword),
            DecodeResult::Failed { .. } => None,
        }
    }

    pub fn failure(&self) -> Option<FailureReason> {
        match self.result {
            DecodeResult::Failed { reason } => Some(reason),
            DecodeResult::Decoded { .. } => None,
        }
    }
}

/// A row of the reduced module with the shifts stripped.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SolutionVector {
    /// `lambda_0 .. lambda_{s-1}`; only `lambda_0` for a punctured module.
    pub lambdas: Vec<Poly>,
    /// `psi_1 .. psi_l`.
    pub psis: Vec<Poly>,
}

impl SolutionVector {
    fn from_row(row: &[Poly], params: &DecoderParams) -> Self {
        let lead = if params.punctured { 1 } else { params.s };
        let lc = row[0].leading_coeff().expect("LP row has nonzero lambda_0");
        let field = row[0].field();
        let gamma = field.inv(lc).expect("nonzero");
        let scaled: Vec<Poly> = row.iter().map(|p| p.scale(gamma)).collect();
        SolutionVector {
            lambdas: scaled[..lead].to_vec(),
            psis: scaled[lead..].to_vec(),
        }
    }

    /// Rechecks the key-equation requirements by substitution: the exact
    /// equalities for `t < s`, the congruences modulo `G^s` for `t >= s`,
    /// and the degree conditions. For a punctured vector the missing
    /// `lambda_i` are reconstructed from the exact equalities, and the
    /// condition `deg lambda_0 >= deg lambda_i + i` is not required.
    pub fn satisfies_key_equations(&self, code: &GrsCode, params: &DecoderParams, r_poly: &Poly) -> bool {
        let (s, l, k) = (params.s, params.l, code.k());
        if self.psis.len() != l || self.lambdas.is_empty() || !self.lambdas[0].is_monic() {
            return false;
        }
        let field = code.field();
        let binom = binomial_table(field, l);
        let g = code.g();
        let r_pows = powers(r_poly, l);
        let g_pows = powers(g, s);
        let term = |lambdas: &[Poly], t: usize, i: usize| {
            lambdas[i].mul(&r_pows[t - i].mul(&g_pows[i])).scale(binom[t][i])
        };

        let mut lambdas = self.lambdas.clone();
        let complete = lambdas.len() == s;
        if !complete {
            if lambdas.len() != 1 {
                return false;
            }
            for (t, g_t) in g_pows.iter().enumerate().take(s).skip(1) {
                let mut rest = self.psis[t - 1].clone();
                for i in 0..t {
                    rest = rest.sub(&term(&lambdas, t, i));
                }
                match rest.exact_div(g_t) {
                    Ok(q) => lambdas.push(q),
                    Err(_) => return false,
                }
            }
        }

        let g_s = &g_pows[s];
        for t in 1..=l {
            let upto = t.min(s - 1);
            let mut sum = Poly::zero(field);
            for i in 0..=upto {
                sum = sum.add(&term(&lambdas, t, i));
            }
            let diff = self.psis[t - 1].sub(&sum);
            let ok = if t < s {
                diff.is_zero()
            } else {
                g_s.divides(&diff)
            };
            if !ok {
                return false;
            }
        }

        let d0 = self.lambdas[0].degree().map_or(i64::MIN, |d| d as i64);
        let deg = |p: &Poly| p.degree().map_or(i64::MIN, |d| d as i64);
        if complete && (1..s).any(|i| deg(&lambdas[i]).saturating_add(i as i64) > d0) {
            return false;
        }
        self.psis
            .iter()
            .enumerate()
            .all(|(t, p)| deg(p).saturating_sub(((t + 1) * (k - 1)) as i64) <= d0)
    }
}

/// `C(t, i)` as field elements, for `0 <= i <= t <= l`.
pub(crate) fn binomial_table(field: &Field, l: usize) -> Vec<Vec<FieldElement>> {
    let mut rows: Vec<Vec<FieldElement>> = Vec::with_capacity(l + 1);
    for t in 0..=l {
        let mut row = vec![FieldElement::ONE; t + 1];
        for i in 1..t {
            row[i] = field.add(rows[t - 1][i - 1], rows[t - 1][i]);
        }
        rows.push(row);
    }
    rows
}

/// `[1, p, p^2, ..., p^e]`.
pub(crate) fn powers(p: &Poly, e: usize) -> Vec<Poly> {
    let mut out = Vec::with_capacity(e + 1);
    out.push(Poly::one(p.field()));
    for i in 1..=e {
        let next = out[i - 1].mul(p);
        out.push(next);
    }
    out
}

/// `[1, p, ..., p^e]` reduced modulo `m`.
pub(crate) fn powers_mod(p: &Poly, e: usize, m: &Poly) -> Vec<Poly> {
    let mut out = Vec::with_capacity(e + 1);
    out.push(Poly::one(p.field()).rem(m).expect("nonzero modulus"));
    let base = p.rem(m).expect("nonzero modulus");
    for i in 1..=e {
        let next = out[i - 1].mulmod(&base, m).expect("nonzero modulus");
        out.push(next);
    }
    out
}

/// Shifts `mu_0 = 1 + l(k-1)`, `mu_i = i + l(k-1)`, `eta_t = (l-t)(k-1)`,
/// restricted to the surviving columns.
pub fn key_module_shifts(k: usize, params: &DecoderParams) -> Vec<i64> {
    let (s, l) = (params.s as i64, params.l as i64);
    let k1 = k as i64 - 1;
    let mut shifts = vec![1 + l * k1];
    if !params.punctured {
        shifts.extend((1..s).map(|i| i + l * k1));
    }
    shifts.extend((1..=l).map(|t| (l - t) * k1));
    shifts
}

/// The key-equation module for the interpolant `r_poly` of the normalised
/// received word, with its column shifts.
pub fn build_key_module(code: &GrsCode, params: &DecoderParams, r_poly: &Poly) -> ShiftedPolyMatrix {
    let field = code.field();
    let (s, l) = (params.s, params.l);
    let g = code.g();
    let g_pows = powers(g, s);
    let g_s = &g_pows[s];
    let r_pows = powers_mod(r_poly, l, g_s);
    let binom = binomial_table(field, l);
    let lambda_cols = if params.punctured { 1 } else { s };
    let width = lambda_cols + l;

    let mut rows = Vec::with_capacity(l + 1);
    for i in 0..s {
        let mut row = vec![Poly::zero(field); width];
        if i == 0 || !params.punctured {
            row[i] = Poly::one(field);
        }
        for t in i.max(1)..=l {
            let c = binom[t][i];
            if c.is_zero() {
                continue;
            }
            let entry = r_pows[t - i].mulmod(&g_pows[i], g_s).expect("nonzero modulus");
            row[lambda_cols + t - 1] = entry.scale(c);
        }
        rows.push(row);
    }
    for t in s..=l {
        let mut row = vec![Poly::zero(field); width];
        row[lambda_cols + t - 1] = g_s.clone();
        rows.push(row);
    }
    ShiftedPolyMatrix::new(field, rows, key_module_shifts(code.k(), params))
        .expect("well-formed key module")
}

/// Reduces `module` and returns the row with leading position 0 together
/// with the number of simple transformations.
pub(crate) fn reduce_and_extract(mut module: ShiftedPolyMatrix) -> (Option<Vec<Poly>>, usize) {
    let steps = module.reduce();
    let lp = module.lp_index();
    let row = lp.row(0).map(|i| module.row(i).to_vec());
    (row, steps)
}

/// Final check shared by all decoders: `f` must give a codeword at distance
/// exactly `deg lambda_0 / s` from `r`.
pub(crate) fn conclude(
    code: &GrsCode,
    s: usize,
    r: &[FieldElement],
    f: Poly,
    deg_lambda0: usize,
) -> DecodeResult {
    if f.degree().is_some_and(|d| d >= code.k()) {
        return DecodeResult::Failed {
            reason: FailureReason::DivisionFailed,
        };
    }
    let codeword = code.evaluate(&f);
    let dist = hamming_distance(r, &codeword);
    if dist * s != deg_lambda0 {
        return DecodeResult::Failed {
            reason: FailureReason::DistanceMismatch,
        };
    }
    DecodeResult::Decoded {
        f,
        codeword,
        error_weight: dist,
    }
}

/// Solves the key equations for `r` and returns the normalised solution row.
pub fn solve_key_equations(
    code: &GrsCode,
    params: &DecoderParams,
    r: &[FieldElement],
) -> Result<(SolutionVector, Poly, usize), DecodeError> {
    params.validate(code)?;
    let r_poly = code.received_interpolant(r)?;
    let module = build_key_module(code, params, &r_poly);
    let (row, steps) = reduce_and_extract(module);
    // The locator vector lies in the module and has leading position 0, so a
    // reduced basis always contains a row with that leading position.
    let row = row.expect("reduced key module has a row with leading position 0");
    Ok((SolutionVector::from_row(&row, params), r_poly, steps))
}

/// Decodes `r`; returns a codeword at minimal distance or a failure.
pub fn decode(code: &GrsCode, params: &DecoderParams, r: &[FieldElement]) -> Result<DecodeOutcome, DecodeError> {
    let (sol, _, steps) = solve_key_equations(code, params, r)?;
    let lambda0 = &sol.lambdas[0];
    let deg_lambda0 = lambda0.degree().expect("nonzero lambda_0");
    let diagnostics = Diagnostics {
        deg_lambda0: Some(deg_lambda0),
        tau: params.tau_pow(code),
        reduction_steps: steps,
    };
    let result = match sol.psis[0].exact_div(lambda0) {
        Ok(f) => conclude(code, params.s, r, f, deg_lambda0),
        Err(_) => DecodeResult::Failed {
            reason: FailureReason::DivisionFailed,
        },
    };
    Ok(DecodeOutcome { result, diagnostics })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::FieldCtx;
    use crate::grs::random_error;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn words(v: &[u32]) -> Vec<FieldElement> {
        v.iter().map(|&x| FieldElement::from_raw(x)).collect()
    }

    #[test]
    fn binomials_reduce_mod_characteristic() {
        let f2 = FieldCtx::shared(2, 3, None).unwrap();
        let b = binomial_table(&f2, 4);
        assert_eq!(b[2][1], FieldElement::ZERO);
        assert_eq!(b[3][1], FieldElement::ONE);
        let f7 = FieldCtx::prime(7).unwrap();
        let b = binomial_table(&f7, 8);
        assert_eq!(b[7][3], FieldElement::ZERO);
        assert_eq!(b[5][2], FieldElement::from_raw(3));
    }

    #[test]
    fn gao_module_shape() {
        let f = FieldCtx::prime(11).unwrap();
        let code = GrsCode::with_first_points(&f, 10, 4).unwrap();
        let r = words(&[1, 2, 3, 4, 5, 6, 7, 8, 9, 10]);
        let r_poly = code.received_interpolant(&r).unwrap();
        let m = build_key_module(&code, &DecoderParams::new(1, 1), &r_poly);
        assert_eq!(m.shifts(), &[4, 0]);
        assert_eq!(m.rows()[0], vec![Poly::one(&f), r_poly.clone()]);
        assert_eq!(m.rows()[1], vec![Poly::zero(&f), code.g().clone()]);
    }

    #[test]
    fn simple_power_module_shape() {
        let f = FieldCtx::prime(11).unwrap();
        let code = GrsCode::with_first_points(&f, 10, 3).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        let r = random_error(&code, 10, &mut rng).unwrap();
        let r_poly = code.received_interpolant(&r).unwrap();
        let m = build_key_module(&code, &DecoderParams::new(1, 2), &r_poly);
        let g = code.g();
        assert_eq!(m.shifts(), &[5, 2, 0]);
        assert_eq!(m.rows()[0][1], r_poly);
        assert_eq!(m.rows()[0][2], r_poly.mulmod(&r_poly, g).unwrap());
        assert_eq!(m.rows()[1], vec![Poly::zero(&f), g.clone(), Poly::zero(&f)]);
        assert_eq!(m.rows()[2], vec![Poly::zero(&f), Poly::zero(&f), g.clone()]);
    }

    #[test]
    fn full_module_dimensions() {
        let f = FieldCtx::prime(11).unwrap();
        let code = GrsCode::with_first_points(&f, 10, 4).unwrap();
        let r_poly = code.received_interpolant(&words(&[3; 10])).unwrap();
        let full = build_key_module(&code, &DecoderParams::full(2, 3), &r_poly);
        assert_eq!((full.height(), full.width()), (4, 5));
        assert_eq!(full.shifts(), &[10, 10, 6, 3, 0]);
        let punct = build_key_module(&code, &DecoderParams::new(2, 3), &r_poly);
        assert_eq!((punct.height(), punct.width()), (4, 4));
        assert_eq!(punct.shifts(), &[10, 6, 3, 0]);
    }

    #[test]
    fn zero_errors_decode() {
        let f = FieldCtx::prime(11).unwrap();
        let code = GrsCode::with_first_points(&f, 10, 4).unwrap();
        let msg = Poly::from_values(&f, &[3, 1, 4, 1]).unwrap();
        let c = code.encode(&msg).unwrap();
        for params in [DecoderParams::new(1, 1), DecoderParams::new(2, 3), DecoderParams::full(2, 3)] {
            let out = decode(&code, &params, &c).unwrap();
            assert_eq!(out.message(), Some(&msg));
            assert_eq!(out.diagnostics.deg_lambda0, Some(0));
        }
    }

    #[test]
    fn rejects_inadmissible_params() {
        let f = FieldCtx::prime(11).unwrap();
        let code = GrsCode::with_first_points(&f, 10, 4).unwrap();
        let r = words(&[0; 10]);
        assert!(matches!(
            decode(&code, &DecoderParams::new(1, 4), &r),
            Err(DecodeError::Params { .. })
        ));
        assert!(matches!(
            decode(&code, &DecoderParams::new(1, 1), &r[..9]),
            Err(DecodeError::Code(CodeError::WordLength { .. }))
        ));
    }

    #[test]
    fn worked_example_vectors() {
        let f = FieldCtx::prime(23).unwrap();
        let code = GrsCode::with_first_points(&f, 23, 7).unwrap();
        let c3 = words(&[16, 15, 20, 20, 3, 0, 18, 0, 19, 16, 2, 11, 11, 3, 9, 18, 5, 0, 0, 0, 5, 0, 16]);
        let r3 = words(&[16, 0, 20, 20, 0, 0, 18, 0, 19, 0, 2, 11, 0, 0, 0, 0, 5, 0, 0, 0, 5, 0, 0]);
        let r4 = words(&[0, 2, 9, 1, 0, 0, 6, 0, 0, 0, 5, 0, 0, 0, 0, 0, 0, 4, 8, 15, 0, 0, 12]);
        for params in [DecoderParams::new(2, 3), DecoderParams::full(2, 3)] {
            let out = decode(&code, &params, &r3).unwrap();
            assert_eq!(out.codeword(), Some(c3.as_slice()));
            let out = decode(&code, &params, &r4).unwrap();
            assert!(!out.is_decoded());
        }
    }

    #[test]
    fn solution_rechecks() {
        let f = FieldCtx::prime(11).unwrap();
        let code = GrsCode::with_first_points(&f, 10, 4).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(77);
        for params in [DecoderParams::new(2, 3), DecoderParams::full(2, 3)] {
            for w in 0..=5 {
                let msg = code.random_message(&mut rng);
                let e = random_error(&code, w, &mut rng).unwrap();
                let r = crate::grs::add_words(&f, &code.encode(&msg).unwrap(), &e);
                let (sol, r_poly, _) = solve_key_equations(&code, &params, &r).unwrap();
                assert!(sol.satisfies_key_equations(&code, &params, &r_poly), "{params:?} w={w}");
            }
        }
    }
}
