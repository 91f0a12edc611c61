//! Decoding after re-encoding on the first `k` positions.

use crate::decoder::{
    binomial_table, conclude, powers, powers_mod, reduce_and_extract, DecodeError, DecodeOutcome,
    DecodeResult, DecoderParams, Diagnostics, FailureReason,
};
use crate::field::FieldElement;
use crate::grs::{sub_words, CodeError, GrsCode};
use crate::matrix::ShiftedPolyMatrix;
use crate::poly::{lagrange_interpolate, root_product, Poly};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ReencodedInstance {
    /// Interpolant of the first `k` normalised received coordinates.
    pub f_hat: Poly,
    /// `prod_{i < k} (x - alpha_i)`.
    pub g_hat: Poly,
    /// `r - ev(f_hat)`, zero on the first `k` positions.
    pub r_prime: Vec<FieldElement>,
    /// Interpolant of the normalised `r_prime`.
    pub r_prime_poly: Poly,
}

pub fn reencode(code: &GrsCode, r: &[FieldElement]) -> Result<ReencodedInstance, CodeError> {
    let field = code.field();
    let k = code.k();
    let norm = code.normalize_received(r)?;
    let pts: Vec<_> = code.alphas()[..k]
        .iter()
        .copied()
        .zip(norm[..k].iter().copied())
        .collect();
    let f_hat = lagrange_interpolate(field, &pts).map_err(|_| CodeError::FieldMismatch)?;
    let r_prime = sub_words(field, r, &code.encode(&f_hat)?);
    let r_prime_poly = code.received_interpolant(&r_prime)?;
    Ok(ReencodedInstance {
        f_hat,
        g_hat: root_product(field, &code.alphas()[..k]),
        r_prime,
        r_prime_poly,
    })
}

/// Raw shifts `mu_0 = 1 + l(k-1) - sk`, `mu_i = i + l(k-1) - sk`,
/// `eta_t = (l-t)(k-1) - (s - min(s,t))k`, restricted to the surviving
/// columns. They may be negative.
pub fn reencoded_shifts(k: usize, params: &DecoderParams) -> Vec<i64> {
    let (s, l, k) = (params.s as i64, params.l as i64, k as i64);
    let base = l * (k - 1) - s * k;
    let mut shifts = vec![1 + base];
    if !params.punctured {
        shifts.extend((1..s).map(|i| i + base));
    }
    shifts.extend((1..=l).map(|t| (l - t) * (k - 1) - (s - s.min(t)) * k));
    shifts
}

/// The module with `psi_t` columns divided by `G_hat^min(s,t)`, carrying
/// the raw (unnormalised) shifts.
pub fn build_reencoded_module(
    code: &GrsCode,
    params: &DecoderParams,
    inst: &ReencodedInstance,
) -> ShiftedPolyMatrix {
    let field = code.field();
    let (s, l) = (params.s, params.l);
    let g = code.g();
    let g_pows = powers(g, s);
    let g_s = &g_pows[s];
    let g_hat_pows = powers(&inst.g_hat, s);
    let g_red = g.exact_div(&inst.g_hat).expect("G_hat divides G");
    let g_red_s = g_red.pow(s as u64);
    let r_pows = powers_mod(&inst.r_prime_poly, l, g_s);
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
            let full = r_pows[t - i].mulmod(&g_pows[i], g_s).expect("nonzero modulus");
            let entry = full
                .exact_div(&g_hat_pows[s.min(t)])
                .expect("re-encoded entries are divisible");
            row[lambda_cols + t - 1] = entry.scale(c);
        }
        rows.push(row);
    }
    for t in s..=l {
        let mut row = vec![Poly::zero(field); width];
        row[lambda_cols + t - 1] = g_red_s.clone();
        rows.push(row);
    }
    ShiftedPolyMatrix::new(field, rows, reencoded_shifts(code.k(), params))
        .expect("well-formed re-encoded module")
}

pub fn decode_reencoded(
    code: &GrsCode,
    params: &DecoderParams,
    r: &[FieldElement],
) -> Result<DecodeOutcome, DecodeError> {
    params.validate(code)?;
    let inst = reencode(code, r)?;
    let mut module = build_reencoded_module(code, params, &inst);
    module.normalize_shifts();
    let (row, steps) = reduce_and_extract(module);
    let row = row.expect("reduced key module has a row with leading position 0");

    let lambda0 = row[0].monic();
    let gamma = code
        .field()
        .div(lambda0.leading_coeff().unwrap(), row[0].leading_coeff().unwrap())
        .expect("nonzero");
    let psi1 = row[params.psi_column(1)].scale(gamma);
    let deg_lambda0 = lambda0.degree().expect("nonzero lambda_0");
    let diagnostics = Diagnostics {
        deg_lambda0: Some(deg_lambda0),
        tau: params.tau_pow(code),
        reduction_steps: steps,
    };
    let result = match psi1.mul(&inst.g_hat).exact_div(&lambda0) {
        Ok(f) => conclude(code, params.s, r, f.add(&inst.f_hat), deg_lambda0),
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
    use crate::grs::{add_words, random_error};
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn codeword_reencodes_to_zero() {
        let f = FieldCtx::prime(11).unwrap();
        let code = GrsCode::with_first_points(&f, 10, 4).unwrap();
        let msg = Poly::from_values(&f, &[2, 7, 1]).unwrap();
        let inst = reencode(&code, &code.encode(&msg).unwrap()).unwrap();
        assert_eq!(inst.f_hat, msg);
        assert!(inst.r_prime.iter().all(|v| v.is_zero()));
    }

    #[test]
    fn errors_outside_reencoding_set_survive() {
        let f = FieldCtx::prime(13).unwrap();
        let code = GrsCode::with_nonzero_points(&f, 12, 4).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        let msg = code.random_message(&mut rng);
        let mut e = vec![FieldElement::ZERO; 12];
        e[6] = FieldElement::from_raw(5);
        e[9] = FieldElement::from_raw(1);
        let r = add_words(&f, &code.encode(&msg).unwrap(), &e);
        let inst = reencode(&code, &r).unwrap();
        assert_eq!(inst.r_prime, e);
        assert_eq!(inst.f_hat, msg);
        assert!(inst.g_hat.divides(&inst.r_prime_poly));
    }

    #[test]
    fn agrees_on_reencoding_positions() {
        let f = FieldCtx::prime(11).unwrap();
        let code = GrsCode::with_first_points(&f, 10, 4).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(8);
        let r = random_error(&code, 10, &mut rng).unwrap();
        let inst = reencode(&code, &r).unwrap();
        assert_eq!(&code.encode(&inst.f_hat).unwrap()[..4], &r[..4]);
        assert!(inst.r_prime[..4].iter().all(|v| v.is_zero()));
    }

    #[test]
    fn zero_errors_round_trip() {
        let f = FieldCtx::prime(11).unwrap();
        let code = GrsCode::with_first_points(&f, 10, 4).unwrap();
        let msg = Poly::from_values(&f, &[9, 0, 3, 5]).unwrap();
        for params in [DecoderParams::new(2, 3), DecoderParams::full(2, 3), DecoderParams::new(1, 1)] {
            let out = decode_reencoded(&code, &params, &code.encode(&msg).unwrap()).unwrap();
            assert_eq!(out.message(), Some(&msg));
        }
    }

    #[test]
    fn raw_shift_values() {
        assert_eq!(reencoded_shifts(7, &DecoderParams::full(2, 3)), vec![5, 5, 5, 6, 0]);
        assert_eq!(reencoded_shifts(7, &DecoderParams::new(2, 3)), vec![5, 5, 6, 0]);
    }
}
