//! Serializable decomposition reports and their independent verifier.
//!
//! The JSON layout is stable and versioned:
//!
//! ```json
//! {
//!   "schema": 1,
//!   "input": "6x^7+3x^4+...",
//!   "parts": ["...", "..."],
//!   "certificates": [ { "kind": "prime_evaluation", "data": { "prime": 31 } },
//!                     { "kind": "hyper_monolithic_gcd1" } ],
//!   "trace": { "branch": "nagura", "prime": 31, "alpha": 1, "beta": 5,
//!              "peel_amount": 17, "intermediates": { ... } }
//! }
//! ```
//!
//! `verify_report` re-parses every polynomial, re-adds the parts, and
//! re-checks both certificates from scratch; it never trusts the producer.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::cert::{verify_certificate, IrreducibilityCertificate};
use crate::decompose::DecompositionResult;
use crate::poly::LaurentPoly;
use crate::text::{format_poly, parse_poly, ParseError};

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct TraceReport {
    pub branch: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub prime: Option<u64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub alpha: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub beta: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub peel_amount: Option<u64>,
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub intermediates: BTreeMap<String, serde_json::Value>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct DecompositionReport {
    pub schema: u32,
    pub input: String,
    pub parts: [String; 2],
    pub certificates: Vec<IrreducibilityCertificate>,
    pub trace: TraceReport,
}

/// Builds the serializable report for a decomposition of `input`.
pub fn report_for(input: &LaurentPoly, result: &DecompositionResult) -> DecompositionReport {
    let mut intermediates: BTreeMap<String, serde_json::Value> = result
        .trace
        .intermediates
        .iter()
        .map(|(name, poly)| (name.clone(), serde_json::Value::String(format_poly(poly))))
        .collect();
    if let Some(c) = result.trace.min_coefficient {
        intermediates.insert("min_coefficient".to_string(), serde_json::Value::from(c));
    }
    DecompositionReport {
        schema: SCHEMA_VERSION,
        input: format_poly(input),
        parts: [format_poly(&result.part_a), format_poly(&result.part_b)],
        certificates: vec![result.cert_a.clone(), result.cert_b.clone()],
        trace: TraceReport {
            branch: result.trace.branch.as_str().to_string(),
            prime: result.trace.prime,
            alpha: result.trace.split.map(|s| s.alpha),
            beta: result.trace.split.map(|s| s.beta),
            peel_amount: result.trace.peel_amount,
            intermediates,
        },
    }
}

#[derive(Debug, Clone, PartialEq, Error)]
pub enum VerifyError {
    #[error("unsupported schema version {0}")]
    UnsupportedSchema(u32),
    #[error("cannot parse {field}: {source}")]
    BadPolynomial { field: &'static str, source: ParseError },
    #[error("parts do not sum to the input")]
    SumMismatch,
    #[error("expected exactly two certificates, found {0}")]
    CertificateCount(usize),
    #[error("certificate for part {index} does not verify against it")]
    CertificateInvalid { index: usize },
}

/// Re-checks a report end to end: grammar, part sum, and both certificates.
pub fn verify_report(report: &DecompositionReport) -> Result<(), VerifyError> {
    if report.schema != SCHEMA_VERSION {
        return Err(VerifyError::UnsupportedSchema(report.schema));
    }
    let input = parse_poly(&report.input)
        .map_err(|source| VerifyError::BadPolynomial { field: "input", source })?;
    let part_a = parse_poly(&report.parts[0])
        .map_err(|source| VerifyError::BadPolynomial { field: "parts[0]", source })?;
    let part_b = parse_poly(&report.parts[1])
        .map_err(|source| VerifyError::BadPolynomial { field: "parts[1]", source })?;
    if part_a.add(&part_b) != input {
        return Err(VerifyError::SumMismatch);
    }
    if report.certificates.len() != 2 {
        return Err(VerifyError::CertificateCount(report.certificates.len()));
    }
    for (index, (part, cert)) in [(&part_a, &report.certificates[0]), (&part_b, &report.certificates[1])]
        .into_iter()
        .enumerate()
    {
        if !verify_certificate(part, cert) {
            return Err(VerifyError::CertificateInvalid { index });
        }
    }
    Ok(())
}
