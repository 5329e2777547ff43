//! Field spec strings: `gf2:<n>:<modulus>`, `f2t`, `f2t-tower:<m>`.

use std::fmt;

use arf_core::{BinaryField, TowerField};

use crate::error::{CliError, Result};

/// A parsed field context.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum FieldSpec {
    Binary(BinaryField),
    Tower(TowerField),
}

fn parse_uint(s: &str, what: &str) -> Result<u32> {
    if s.is_empty() || !s.bytes().all(|b| b.is_ascii_digit()) {
        return Err(CliError::parse(format!("expected decimal {what}, found {s:?}")));
    }
    s.parse()
        .map_err(|_| CliError::parse(format!("{what} {s} out of range")))
}

/// Parses a field spec; tower levels above `max_level` are rejected.
pub fn parse_field_spec(s: &str, max_level: u32) -> Result<FieldSpec> {
    let s = s.trim();
    if s == "f2t" {
        return Ok(FieldSpec::Tower(TowerField::with_cap(0, max_level)?));
    }
    if let Some(level) = s.strip_prefix("f2t-tower:") {
        let level = parse_uint(level, "tower level")?;
        return Ok(FieldSpec::Tower(TowerField::with_cap(level, max_level)?));
    }
    if let Some(rest) = s.strip_prefix("gf2:") {
        let (n, modulus) = rest
            .split_once(':')
            .ok_or_else(|| CliError::parse(format!("expected gf2:<n>:<modulus>, found {s:?}")))?;
        let n = parse_uint(n, "extension degree")?;
        let modulus = parse_uint(modulus, "modulus")?;
        return Ok(FieldSpec::Binary(BinaryField::new(n, modulus)?));
    }
    Err(CliError::parse(format!("unknown field spec {s:?}")))
}

impl fmt::Display for FieldSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldSpec::Binary(k) => write!(f, "gf2:{}:{}", k.degree(), k.modulus()),
            FieldSpec::Tower(k) if k.level() == 0 => write!(f, "f2t"),
            FieldSpec::Tower(k) => write!(f, "f2t-tower:{}", k.level()),
        }
    }
}
