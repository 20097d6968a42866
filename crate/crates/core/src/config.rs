//! JSON configuration and output records for the command-line tool.

use std::sync::Arc;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::codec::{CodecError, FoldedCode, FoldedWord};
use crate::decoder::{DecodeResult, DecoderParams, DEFAULT_ENUMERATION_CAP};
use crate::function_field::{
    AffineMap, FunctionFieldBackend, FunctionFieldError, HermitianBackend, RationalBackend,
};
use crate::gf::{Elem, FieldError, Gf};

#[derive(Debug, Error)]
pub enum ConfigError {
    #[error("invalid JSON: {0}")]
    Json(#[from] serde_json::Error),
    #[error(transparent)]
    Field(#[from] FieldError),
    #[error(transparent)]
    FunctionField(#[from] FunctionFieldError),
    #[error(transparent)]
    Codec(#[from] CodecError),
    #[error("{0}")]
    Invalid(String),
}

/// σ: X -> scale·X + shift, both hex field elements.
#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
#[serde(deny_unknown_fields)]
pub struct SigmaSpec {
    pub scale: String,
    #[serde(default = "zero_hex")]
    pub shift: String,
}

fn zero_hex() -> String {
    "0x0".into()
}

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
#[serde(tag = "kind", rename_all = "lowercase", deny_unknown_fields)]
pub enum BackendSpec {
    /// GF(q)(X); σ defaults to scaling by the primitive element.
    Rational {
        q: u64,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        modulus: Option<Vec<u32>>,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        sigma: Option<SigmaSpec>,
    },
    /// y^ℓ + y = x^(ℓ+1) over GF(ℓ²).
    Hermitian { ell: u32 },
}

impl BackendSpec {
    pub fn build(&self) -> Result<Arc<dyn FunctionFieldBackend>, ConfigError> {
        match self {
            BackendSpec::Rational { q, modulus, sigma } => {
                let (p, k) = crate::gf::prime_power(*q)
                    .ok_or_else(|| ConfigError::Invalid(format!("q = {q} is not a prime power")))?;
                let field = Gf::new(p, k, modulus.as_deref())?;
                let backend = match sigma {
                    None => RationalBackend::new(field),
                    Some(s) => {
                        let alpha = field.parse_hex(&s.scale)?;
                        let beta = field.parse_hex(&s.shift)?;
                        RationalBackend::with_sigma(field, AffineMap { alpha, beta })?
                    }
                };
                Ok(Arc::new(backend))
            }
            BackendSpec::Hermitian { ell } => Ok(Arc::new(HermitianBackend::with_ell(*ell)?)),
        }
    }
}

/// Contents of params.json.
#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
#[serde(deny_unknown_fields)]
pub struct CodeParams {
    pub backend: BackendSpec,
    pub m: usize,
    #[serde(rename = "N")]
    pub n: usize,
    pub l: u32,
}

impl CodeParams {
    pub fn from_json(s: &str) -> Result<CodeParams, ConfigError> {
        Ok(serde_json::from_str(s)?)
    }

    pub fn build(&self) -> Result<FoldedCode, ConfigError> {
        Ok(FoldedCode::new(
            self.backend.build()?,
            self.m,
            self.n,
            self.l,
        )?)
    }
}

/// Contents of --dparams.
#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
#[serde(deny_unknown_fields)]
pub struct DecodeConfig {
    pub s: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub cap: Option<u64>,
}

impl DecodeConfig {
    pub fn from_json(s: &str) -> Result<DecodeConfig, ConfigError> {
        Ok(serde_json::from_str(s)?)
    }

    pub fn cap(&self) -> u128 {
        self.cap.map_or(DEFAULT_ENUMERATION_CAP, u128::from)
    }
}

/// Contents of list.json.
#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct ListOutput {
    pub candidates: Vec<Vec<String>>,
    pub kappa: u32,
    pub kappa_formula: i64,
    pub threshold_t: usize,
    pub affine_dim: Option<usize>,
}

impl ListOutput {
    pub fn new(field: &Gf, params: &DecoderParams, result: &DecodeResult) -> ListOutput {
        ListOutput {
            candidates: result
                .candidates
                .iter()
                .map(|c| message_to_hex(field, c))
                .collect(),
            kappa: params.kappa,
            kappa_formula: params.kappa_formula,
            threshold_t: params.threshold_t,
            affine_dim: result.affine_dim(),
        }
    }
}

pub fn message_to_hex(field: &Gf, msg: &[Elem]) -> Vec<String> {
    msg.iter().map(|&e| field.to_hex(e)).collect()
}

/// Hex symbols separated by whitespace or commas.
pub fn parse_message(field: &Gf, text: &str) -> Result<Vec<Elem>, ConfigError> {
    text.split(|c: char| c.is_whitespace() || c == ',')
        .filter(|s| !s.is_empty())
        .map(|s| field.parse_hex(s).map_err(ConfigError::from))
        .collect()
}

pub fn word_to_json(word: &FoldedWord) -> String {
    serde_json::to_string_pretty(&word.to_hex_rows()).expect("strings serialize")
}

pub fn word_from_json(field: &Gf, text: &str) -> Result<FoldedWord, ConfigError> {
    let rows: Vec<Vec<String>> = serde_json::from_str(text)?;
    Ok(FoldedWord::from_hex_rows(field, &rows)?)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn params_round_trip() {
        let text = r#"{"backend":{"kind":"rational","q":16},"m":4,"N":3,"l":2}"#;
        let p = CodeParams::from_json(text).unwrap();
        assert_eq!(p.n, 3);
        let code = p.build().unwrap();
        assert_eq!(code.dimension(), 3);
        let again = CodeParams::from_json(&serde_json::to_string(&p).unwrap()).unwrap();
        assert_eq!(again, p);
    }

    #[test]
    fn unknown_keys_rejected() {
        assert!(CodeParams::from_json(
            r#"{"backend":{"kind":"rational","q":16},"m":4,"N":3,"l":2,"x":1}"#
        )
        .is_err());
        assert!(CodeParams::from_json(
            r#"{"backend":{"kind":"rational","q":16,"z":0},"m":4,"N":3,"l":2}"#
        )
        .is_err());
        assert!(DecodeConfig::from_json(r#"{"s":2,"t":1}"#).is_err());
        assert_eq!(
            DecodeConfig::from_json(r#"{"s":2}"#).unwrap().cap(),
            DEFAULT_ENUMERATION_CAP
        );
    }

    #[test]
    fn translation_and_hermitian() {
        let p = CodeParams::from_json(
            r#"{"backend":{"kind":"rational","q":4,"sigma":{"scale":"0x1","shift":"0x1"}},"m":2,"N":2,"l":1}"#,
        )
        .unwrap();
        assert_eq!(p.build().unwrap().dimension(), 2);
        let h =
            CodeParams::from_json(r#"{"backend":{"kind":"hermitian","ell":2},"m":3,"N":2,"l":2}"#)
                .unwrap();
        assert!(h.build().is_ok());
    }

    #[test]
    fn message_parsing() {
        let f = Gf::with_order(16).unwrap();
        let m = parse_message(&f, "0x1, 0x9\n0xf").unwrap();
        assert_eq!(message_to_hex(&f, &m), vec!["0x1", "0x9", "0xf"]);
        assert!(parse_message(&f, "0x10").is_err());
    }
}
