//! Power decoding through generalised syndromes. Requires nonzero
//! evaluation points and `s < n`; the module is never punctured.

use crate::decoder::{
    binomial_table, conclude, reduce_and_extract, DecodeError, DecodeOutcome, DecodeResult,
    DecoderParams, Diagnostics, FailureReason,
};
use crate::field::FieldElement;
use crate::grs::GrsCode;
use crate::matrix::ShiftedPolyMatrix;
use crate::poly::{root_product, Poly};

/// `S^(i,t)` for `0 <= i < s`, `1 <= t <= l`, with their precisions.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SyndromeSet {
    pub s: usize,
    pub l: usize,
    /// `R^(i,t) = R^{t-i} mod G^{s-i}`, indexed `[i][t - 1]`; zero for `i > t`.
    pub reduced_powers: Vec<Vec<Poly>>,
    /// `rev R^(i,t) / rev(G)^{s-i} mod x^{rho_t}`, indexed `[i][t - 1]`.
    pub syndromes: Vec<Vec<Poly>>,
    /// `rho_t`, indexed `[t - 1]`.
    pub precisions: Vec<usize>,
}

impl SyndromeSet {
    pub fn syndrome(&self, i: usize, t: usize) -> &Poly {
        &self.syndromes[i][t - 1]
    }

    pub fn precision(&self, t: usize) -> usize {
        self.precisions[t - 1]
    }

    /// Offset `iota_{i,t}`: `0` for `t = s`, `i` for `t > s`; unused below.
    pub fn offset(&self, i: usize, t: usize) -> usize {
        if t > self.s {
            i
        } else {
            0
        }
    }
}

/// Reversal degree used for `R^(i,t)`.
pub fn reversal_bound(n: usize, s: usize, i: usize, t: usize) -> usize {
    if t <= s {
        (t - i) * (n - 1)
    } else {
        (s - i) * n - 1
    }
}

/// `rho_t`: `t(n - k)` for `t <= s`, `sn - t(k-1) - 1` otherwise.
pub fn precision(n: usize, k: usize, s: usize, t: usize) -> usize {
    if t <= s {
        t * (n - k)
    } else {
        s * n - t * (k - 1) - 1
    }
}

fn check_preconditions(code: &GrsCode, params: &DecoderParams) -> Result<(), DecodeError> {
    params.validate(code)?;
    if code.has_zero_point() {
        return Err(DecodeError::ZeroEvaluationPoint);
    }
    if params.s >= code.n() {
        return Err(DecodeError::MultiplicityTooLarge {
            s: params.s,
            n: code.n(),
        });
    }
    Ok(())
}

pub fn compute_syndromes(
    code: &GrsCode,
    params: &DecoderParams,
    r_poly: &Poly,
) -> Result<SyndromeSet, DecodeError> {
    check_preconditions(code, params)?;
    let field = code.field();
    let (n, k, s, l) = (code.n(), code.k(), params.s, params.l);
    let g = code.g();
    let rev_g = g.reverse(n).expect("deg G = n");
    let g_pows = crate::decoder::powers(g, s);
    let rev_g_pows = crate::decoder::powers(&rev_g, s);
    let precisions: Vec<usize> = (1..=l).map(|t| precision(n, k, s, t)).collect();

    let mut reduced_powers = Vec::with_capacity(s);
    let mut syndromes = Vec::with_capacity(s);
    for i in 0..s {
        let modulus = &g_pows[s - i];
        let r_red = r_poly.rem(modulus).expect("nonzero modulus");
        let mut reds = Vec::with_capacity(l);
        let mut syns = Vec::with_capacity(l);
        let mut acc = Poly::one(field);
        let mut e = 0;
        for t in 1..=l {
            if i > t {
                reds.push(Poly::zero(field));
                syns.push(Poly::zero(field));
                continue;
            }
            while e < t - i {
                acc = acc.mulmod(&r_red, modulus).expect("nonzero modulus");
                e += 1;
            }
            let acc_red = acc.rem(modulus).expect("nonzero modulus");
            let rev = acc_red
                .reverse(reversal_bound(n, s, i, t))
                .expect("reduced power within its reversal bound");
            let syn = Poly::series_div(&rev, &rev_g_pows[s - i], precisions[t - 1])
                .expect("rev G is a unit");
            reds.push(acc_red);
            syns.push(syn);
        }
        reduced_powers.push(reds);
        syndromes.push(syns);
    }
    Ok(SyndromeSet {
        s,
        l,
        reduced_powers,
        syndromes,
        precisions,
    })
}

/// Column weights `(1; 1, 2, .., s-1; ceil(s tau) x (s-1); s; 1 x (l-s))`.
pub fn syndrome_shifts(code: &GrsCode, params: &DecoderParams) -> Vec<i64> {
    let (s, l) = (params.s, params.l);
    let big = (params.tau_pow(code) * s as i64).ceil().to_integer();
    let mut shifts = vec![1];
    shifts.extend((1..s).map(|i| i as i64));
    shifts.extend(std::iter::repeat_n(big, s - 1));
    shifts.push(s as i64);
    shifts.extend(std::iter::repeat_n(1, l - s));
    shifts
}

pub fn build_syndrome_module(
    code: &GrsCode,
    params: &DecoderParams,
    syn: &SyndromeSet,
) -> ShiftedPolyMatrix {
    let field = code.field();
    let (s, l) = (params.s, params.l);
    let binom = binomial_table(field, l);
    let width = s + l;
    let mut rows = Vec::with_capacity(width);
    for i in 0..s {
        let mut row = vec![Poly::zero(field); width];
        row[i] = Poly::one(field);
        for t in i.max(1)..=l {
            let c = binom[t][i];
            if c.is_zero() {
                continue;
            }
            let rho = syn.precision(t);
            row[s + t - 1] = syn.syndrome(i, t).shift(syn.offset(i, t)).truncate(rho).scale(c);
        }
        rows.push(row);
    }
    for t in 1..=l {
        let mut row = vec![Poly::zero(field); width];
        row[s + t - 1] = Poly::monomial(field, FieldElement::ONE, syn.precision(t));
        rows.push(row);
    }
    ShiftedPolyMatrix::new(field, rows, syndrome_shifts(code, params))
        .expect("well-formed syndrome module")
}

/// Checks the syndrome congruences for a locator/evaluator pair with
/// `deg Lambda = eps`: for `t < s` the reversed sums vanish modulo
/// `x^{rho_t}`, and for `t >= s` they reduce to some `g_t` with
/// `deg g_s <= eps s - s` and `deg g_t <= eps s - 1` beyond.
pub fn check_syndrome_congruences(
    code: &GrsCode,
    syn: &SyndromeSet,
    locator: &Poly,
    evaluator: &Poly,
) -> bool {
    let field = code.field();
    let (s, l) = (syn.s, syn.l);
    let eps = locator.degree().unwrap_or(0);
    let binom = binomial_table(field, l);
    let mut reversed = Vec::with_capacity(s);
    for i in 0..s {
        let prod = locator.pow((s - i) as u64).mul(&evaluator.pow(i as u64));
        let rev = if prod.is_zero() {
            Poly::zero(field)
        } else {
            match (s * eps).checked_sub(i).map(|d| prod.reverse(d)) {
                Some(Ok(p)) => p,
                _ => return false,
            }
        };
        reversed.push(rev);
    }
    (1..=l).all(|t| {
        let rho = syn.precision(t);
        let mut sum = Poly::zero(field);
        for i in 0..=t.min(s - 1) {
            let term = reversed[i]
                .mul(&syn.syndrome(i, t).shift(syn.offset(i, t)))
                .scale(binom[t][i]);
            sum = sum.add(&term);
        }
        let g = sum.truncate(rho);
        let bound = if t == s { (s * eps) as i64 - s as i64 } else { (s * eps) as i64 - 1 };
        match t.cmp(&s) {
            std::cmp::Ordering::Less => g.is_zero(),
            _ => g.degree().is_none_or(|d| d as i64 <= bound),
        }
    })
}

/// Monic `c` with `c^s = p`, for monic `p`.
fn sth_root(code: &GrsCode, p: &Poly, s: usize) -> Option<Poly> {
    if s == 1 {
        return Some(p.clone());
    }
    let dp = p.derivative();
    let candidate = if dp.is_zero() {
        let roots: Vec<FieldElement> = code
            .alphas()
            .iter()
            .copied()
            .filter(|&a| p.eval(a).is_zero())
            .collect();
        root_product(code.field(), &roots)
    } else {
        p.exact_div(&p.gcd(&dp)).ok()?
    };
    (candidate.pow(s as u64) == *p).then_some(candidate)
}

fn failed(reason: FailureReason, diagnostics: Diagnostics) -> DecodeOutcome {
    DecodeOutcome {
        result: DecodeResult::Failed { reason },
        diagnostics,
    }
}

pub fn decode_syndrome(
    code: &GrsCode,
    params: &DecoderParams,
    r: &[FieldElement],
) -> Result<DecodeOutcome, DecodeError> {
    let params = DecoderParams {
        punctured: false,
        ..*params
    };
    check_preconditions(code, &params)?;
    let s = params.s;
    let r_poly = code.received_interpolant(r)?;
    let syn = compute_syndromes(code, &params, &r_poly)?;
    let module = build_syndrome_module(code, &params, &syn);
    let (row, steps) = reduce_and_extract(module);
    let mut diagnostics = Diagnostics {
        deg_lambda0: None,
        tau: params.tau_pow(code),
        reduction_steps: steps,
    };
    let Some(row) = row else {
        return Ok(failed(FailureReason::NotAPower, diagnostics));
    };

    let c0 = row[0].coeff(0);
    if c0.is_zero() {
        return Ok(failed(FailureReason::NotAPower, diagnostics));
    }
    let gamma = code.field().inv(c0).expect("nonzero");
    let v0 = row[0].scale(gamma);
    let deg = v0.degree().expect("nonzero");
    diagnostics.deg_lambda0 = Some(deg);
    if deg % s != 0 {
        return Ok(failed(FailureReason::NotAPower, diagnostics));
    }
    let eps = deg / s;
    let lambda_s = v0.reverse(deg).expect("degree bound");
    let Some(lambda) = sth_root(code, &lambda_s, s) else {
        return Ok(failed(FailureReason::NotAPower, diagnostics));
    };

    let omega = if eps == 0 {
        Poly::zero(code.field())
    } else if s >= 2 {
        let v1 = row[1].scale(gamma);
        let Ok(prod) = v1.reverse(s * eps - 1) else {
            return Ok(failed(FailureReason::DivisionFailed, diagnostics));
        };
        match prod.exact_div(&lambda.pow(s as u64 - 1)) {
            Ok(o) => o,
            Err(_) => return Ok(failed(FailureReason::DivisionFailed, diagnostics)),
        }
    } else {
        let g1 = row[s].scale(gamma);
        match g1.reverse(eps - 1) {
            Ok(p) => p.neg(),
            Err(_) => return Ok(failed(FailureReason::DivisionFailed, diagnostics)),
        }
    };

    let upsilon = code.g().exact_div(&lambda);
    let Ok(upsilon) = upsilon else {
        return Ok(failed(FailureReason::DivisionFailed, diagnostics));
    };
    let f = r_poly.add(&omega.mul(&upsilon));
    Ok(DecodeOutcome {
        result: conclude(code, s, r, f, deg),
        diagnostics,
    })
}
