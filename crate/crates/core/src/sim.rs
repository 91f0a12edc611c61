//! Seeded Monte-Carlo estimation of the decoding failure rate.

use std::io::Write;
use std::time::{Duration, Instant};

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use thiserror::Error;

use crate::decoder::{DecodeError, DecoderParams};
use crate::field::FieldElement;
use crate::grs::{add_words, random_error, GrsCode};
use crate::variants::Variant;

pub const CSV_HEADER: [&str; 12] = [
    "n", "k", "q", "s", "l", "variant", "tau", "trials", "fail_no_result", "fail_wrong", "pf", "seed",
];

#[derive(Debug, Error)]
pub enum SimError {
    #[error("error weight {tau} exceeds code length {n}")]
    Weight { tau: usize, n: usize },
    #[error("at least one trial is required")]
    NoTrials,
    #[error("cannot build a thread pool: {0}")]
    Pool(#[from] rayon::ThreadPoolBuildError),
    #[error(transparent)]
    Decode(#[from] DecodeError),
    #[error(transparent)]
    Csv(#[from] csv::Error),
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

#[derive(Debug, Clone)]
pub struct SimConfig {
    pub code: GrsCode,
    pub params: DecoderParams,
    pub variant: Variant,
    pub taus: Vec<usize>,
    pub trials: usize,
    pub seed: u64,
    /// Worker threads; 0 uses the rayon default.
    pub jobs: usize,
}

/// `floor(tau_pow) - 1`, `floor(tau_pow)`, `floor(tau_pow) + 1`, clipped to
/// `0..=n`.
pub fn default_taus(code: &GrsCode, params: &DecoderParams) -> Vec<usize> {
    let t = params.tau_pow(code).floor().to_integer();
    (t - 1..=t + 1)
        .filter(|&v| v >= 0 && v as usize <= code.n())
        .map(|v| v as usize)
        .collect()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct TauStats {
    pub tau: usize,
    pub trials: usize,
    pub correct: usize,
    pub no_result: usize,
    pub wrong: usize,
}

impl TauStats {
    pub fn failures(&self) -> usize {
        self.no_result + self.wrong
    }

    pub fn pf(&self) -> f64 {
        self.failures() as f64 / self.trials as f64
    }

    fn merge(mut self, o: TauStats) -> TauStats {
        self.trials += o.trials;
        self.correct += o.correct;
        self.no_result += o.no_result;
        self.wrong += o.wrong;
        self
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct TrialStats {
    pub per_tau: Vec<TauStats>,
    pub wall: Duration,
}

/// Generator for trial `index` at weight `tau`: the master seed selects the
/// key, `(tau, index)` the stream. Independent of scheduling.
pub fn trial_rng(seed: u64, tau: usize, index: usize) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(((tau as u64) << 32) | index as u64);
    rng
}

enum Class {
    Correct,
    NoResult,
    Wrong,
}

fn one_trial(cfg: &SimConfig, tau: usize, index: usize) -> Result<Class, DecodeError> {
    let mut rng = trial_rng(cfg.seed, tau, index);
    let code = &cfg.code;
    let msg = code.random_message(&mut rng);
    let e = random_error(code, tau, &mut rng)?;
    let sent = code.encode(&msg)?;
    let r = add_words(code.field(), &sent, &e);
    let out = cfg.variant.decode(code, &cfg.params, &r)?;
    Ok(match out.codeword() {
        Some(c) if c == sent.as_slice() => Class::Correct,
        Some(_) => Class::Wrong,
        None => Class::NoResult,
    })
}

pub fn run_trials(cfg: &SimConfig) -> Result<TrialStats, SimError> {
    if cfg.trials == 0 {
        return Err(SimError::NoTrials);
    }
    let n = cfg.code.n();
    if let Some(&tau) = cfg.taus.iter().find(|&&t| t > n) {
        return Err(SimError::Weight { tau, n });
    }
    // Surface parameter and precondition errors before spawning work.
    cfg.variant
        .decode(&cfg.code, &cfg.params, &vec![FieldElement::ZERO; n])?;

    let pool = rayon::ThreadPoolBuilder::new().num_threads(cfg.jobs).build()?;
    let start = Instant::now();
    let per_tau = pool.install(|| {
        cfg.taus
            .iter()
            .map(|&tau| {
                (0..cfg.trials)
                    .into_par_iter()
                    .map(|i| {
                        let class = one_trial(cfg, tau, i)?;
                        let mut st = TauStats {
                            tau,
                            trials: 1,
                            ..TauStats::default()
                        };
                        match class {
                            Class::Correct => st.correct = 1,
                            Class::NoResult => st.no_result = 1,
                            Class::Wrong => st.wrong = 1,
                        }
                        Ok(st)
                    })
                    .try_reduce(
                        || TauStats {
                            tau,
                            ..TauStats::default()
                        },
                        |a, b| Ok(a.merge(b)),
                    )
            })
            .collect::<Result<Vec<_>, DecodeError>>()
    })?;
    Ok(TrialStats {
        per_tau,
        wall: start.elapsed(),
    })
}

/// Writes one CSV row per weight, header included. Contains no timing, so
/// equal configurations give byte-identical output.
pub fn write_csv<W: Write>(out: W, cfg: &SimConfig, stats: &TrialStats) -> Result<(), SimError> {
    let mut w = csv::Writer::from_writer(out);
    w.write_record(CSV_HEADER)?;
    let code = &cfg.code;
    for st in &stats.per_tau {
        w.write_record([
            code.n().to_string(),
            code.k().to_string(),
            code.field().size().to_string(),
            cfg.params.s.to_string(),
            cfg.params.l.to_string(),
            cfg.variant.to_string(),
            st.tau.to_string(),
            st.trials.to_string(),
            st.no_result.to_string(),
            st.wrong.to_string(),
            format!("{:.6}", st.pf()),
            cfg.seed.to_string(),
        ])?;
    }
    w.flush()?;
    Ok(())
}
