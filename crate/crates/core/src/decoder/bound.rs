//! Failure probability bound for `(s, l) = (2, 3)`.

use num_traits::Float;

use super::radius::tau_pow;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FailureBound<F> {
    pub value: F,
    /// `eps` lies outside `d/2 <= eps < tau_pow(2, 3)`, where the bound is not
    /// claimed to hold.
    pub vacuous: bool,
}

fn lit<F: Float>(v: f64) -> F {
    F::from(v).expect("float literal")
}

/// Two-branch upper bound on the failure probability at `eps` errors, with
/// natural logarithms. The value is returned even when it exceeds 1.
pub fn failure_bound_23<F: Float>(n: u64, k: u64, q: u64, eps: u64) -> FailureBound<F> {
    let tau = tau_pow(2i64, 3, n as i64, k as i64);
    let tau_f: F = lit::<F>(*tau.numer() as f64) / lit(*tau.denom() as f64);
    let (n_f, k1, q_f, e) = (
        lit::<F>(n as f64),
        lit::<F>(k as f64 - 1.0),
        lit::<F>(q as f64),
        lit::<F>(eps as f64),
    );
    let ln_q = q_f.ln();
    let four = lit::<F>(4.0);
    let split = lit::<F>(0.6) * n_f - lit::<F>(0.8) * k1;
    let value = if e >= split {
        let exponent = (tau_f - e) - (lit::<F>(0.29) * e / ln_q - lit(0.25));
        four * q_f.powf(lit::<F>(-8.0) * exponent)
    } else {
        let d = n_f - k1;
        let exponent = (d + lit::<F>(3.0) * k1) / lit(5.0)
            - (e * lit::<F>(10.0).ln() / ln_q + F::one());
        four * q_f.powf(-exponent)
    };
    let d = n as i64 - k as i64 + 1;
    let in_range = 2 * eps as i64 >= d && num_rational::Ratio::from_integer(eps as i64) < tau;
    FailureBound {
        value,
        vacuous: !in_range,
    }
}
