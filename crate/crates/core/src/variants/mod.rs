//! Alternative formulations of the same decoder.

pub mod reencode;
pub mod syndrome;

use std::fmt;
use std::str::FromStr;

use crate::decoder::{decode, DecodeError, DecodeOutcome, DecoderParams};
use crate::field::FieldElement;
use crate::grs::GrsCode;

pub use reencode::{decode_reencoded, reencode, ReencodedInstance};
pub use syndrome::{check_syndrome_congruences, compute_syndromes, decode_syndrome, SyndromeSet};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub enum Variant {
    #[default]
    Gao,
    Reencoded,
    Syndrome,
}

impl Variant {
    pub const ALL: [Variant; 3] = [Variant::Gao, Variant::Reencoded, Variant::Syndrome];

    pub fn name(self) -> &'static str {
        match self {
            Variant::Gao => "gao",
            Variant::Reencoded => "reencoded",
            Variant::Syndrome => "syndrome",
        }
    }

    pub fn decode(
        self,
        code: &GrsCode,
        params: &DecoderParams,
        r: &[FieldElement],
    ) -> Result<DecodeOutcome, DecodeError> {
        match self {
            Variant::Gao => decode(code, params, r),
            Variant::Reencoded => decode_reencoded(code, params, r),
            Variant::Syndrome => decode_syndrome(code, params, r),
        }
    }
}

impl fmt::Display for Variant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Variant {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Variant::ALL
            .into_iter()
            .find(|v| v.name() == s)
            .ok_or_else(|| format!("unknown variant '{s}' (expected gao, reencoded or syndrome)"))
    }
}
