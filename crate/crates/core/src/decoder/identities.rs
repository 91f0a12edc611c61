//! Direct verification of the key equations satisfied by the true error
//! locator and evaluator.

use super::{binomial_table, powers};
use crate::grs::{add_words, CodeError, GrsCode};
use crate::poly::Poly;
use crate::field::FieldElement;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IdentityReport {
    /// `Lambda (f - R) = Omega G`.
    pub gao: bool,
    /// `Lambda R^t = Lambda f^t mod G` for `t = 1..=l`.
    pub simple_power: Vec<bool>,
    /// `Lambda^s f^t = sum_i Lambda^{s-i} Omega^i C(t,i) R^{t-i} G^i`, exact
    /// for `t < s` and modulo `G^s` otherwise, for `t = 1..=l`.
    pub multiplicity: Vec<bool>,
}

impl IdentityReport {
    pub fn all_hold(&self) -> bool {
        self.gao && self.simple_power.iter().all(|&b| b) && self.multiplicity.iter().all(|&b| b)
    }
}

/// Checks every identity for the received word `ev(f) + e`.
pub fn check_power_key_identities(
    code: &GrsCode,
    f: &Poly,
    e: &[FieldElement],
    s: usize,
    l: usize,
) -> Result<IdentityReport, CodeError> {
    assert!(s >= 1, "multiplicity must be positive");
    let field = code.field();
    let c = code.encode(f)?;
    let r = add_words(field, &c, e);
    let r_poly = code.received_interpolant(&r)?;
    let data = code.error_data(e)?;
    let (lambda, omega) = (&data.locator, &data.evaluator);
    let g = code.g();

    let gao = lambda.mul(&f.sub(&r_poly)) == omega.mul(g);

    let r_pows = powers(&r_poly, l);
    let f_pows = powers(f, l);
    let simple_power = (1..=l)
        .map(|t| g.divides(&lambda.mul(&r_pows[t].sub(&f_pows[t]))))
        .collect();

    let binom = binomial_table(field, l);
    let lambda_pows = powers(lambda, s);
    let omega_pows = powers(omega, s);
    let g_pows = powers(g, s);
    let multiplicity = (1..=l)
        .map(|t| {
            let lhs = lambda_pows[s].mul(&f_pows[t]);
            let mut rhs = Poly::zero(field);
            for i in 0..=t.min(s - 1) {
                let term = lambda_pows[s - i]
                    .mul(&omega_pows[i])
                    .mul(&r_pows[t - i])
                    .mul(&g_pows[i])
                    .scale(binom[t][i]);
                rhs = rhs.add(&term);
            }
            let diff = lhs.sub(&rhs);
            if t < s {
                diff.is_zero()
            } else {
                g_pows[s].divides(&diff)
            }
        })
        .collect();

    Ok(IdentityReport {
        gao,
        simple_power,
        multiplicity,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::FieldCtx;
    use crate::grs::random_error;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn no_errors_collapse() {
        let f = FieldCtx::prime(11).unwrap();
        let code = GrsCode::with_first_points(&f, 10, 4).unwrap();
        let msg = Poly::from_values(&f, &[1, 2, 3]).unwrap();
        let rep = check_power_key_identities(&code, &msg, &[FieldElement::ZERO; 10], 2, 3).unwrap();
        assert!(rep.all_hold());
        assert_eq!(rep.multiplicity.len(), 3);
    }

    #[test]
    fn random_instances_hold() {
        let f = FieldCtx::prime(11).unwrap();
        let code = GrsCode::with_first_points(&f, 10, 4).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        for (s, l) in [(2, 3), (1, 3)] {
            for w in 0..=10 {
                let msg = code.random_message(&mut rng);
                let e = random_error(&code, w, &mut rng).unwrap();
                assert!(check_power_key_identities(&code, &msg, &e, s, l).unwrap().all_hold());
            }
        }
    }

    #[test]
    fn received_word_as_error_of_zero_message() {
        let f = FieldCtx::prime(11).unwrap();
        let code = GrsCode::with_first_points(&f, 10, 4).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        let msg = code.random_message(&mut rng);
        let e = random_error(&code, 2, &mut rng).unwrap();
        let r = add_words(&f, &code.encode(&msg).unwrap(), &e);
        let rep = check_power_key_identities(&code, &Poly::zero(&f), &r, 2, 3).unwrap();
        assert!(rep.all_hold());
    }
}
