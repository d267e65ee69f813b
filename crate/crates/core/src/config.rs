//! Flat `key = value` run configuration.
//!
//! Blank lines and lines starting with `#` are ignored. Keys may appear once.
//! Every key is optional; see [`RunConfig::default`].

use std::collections::BTreeMap;
use std::path::PathBuf;
use std::str::FromStr;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::expand::{Cutoff, QuadratureConfig};
use crate::numcore::Rational;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum OutputFormat {
    Json,
    Csv,
}

impl FromStr for OutputFormat {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim().to_ascii_lowercase().as_str() {
            "json" => Ok(OutputFormat::Json),
            "csv" => Ok(OutputFormat::Csv),
            other => Err(Error::Parse(format!("unknown format {other:?}"))),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum CaseSelection {
    A,
    B,
}

impl FromStr for CaseSelection {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim() {
            "A" | "a" => Ok(CaseSelection::A),
            "B" | "b" => Ok(CaseSelection::B),
            other => Err(Error::Parse(format!("unknown case {other:?}"))),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct RunConfig {
    /// Relative tolerance for closed-form comparisons.
    pub rel_tol: f64,
    /// Tolerance for quadrature-backed comparisons.
    pub quad_check_tol: f64,
    #[serde(skip)]
    pub quadrature: QuadratureConfig,
    pub format: OutputFormat,
    pub out: Option<PathBuf>,
    pub case: CaseSelection,
    pub b_values: Vec<Rational>,
    pub n_max: usize,
    /// Lift the `n ≤ 8` caps of the verification suite.
    pub extended: bool,
}

impl Default for RunConfig {
    fn default() -> Self {
        RunConfig {
            rel_tol: 1e-12,
            quad_check_tol: 1e-8,
            quadrature: QuadratureConfig::default(),
            format: OutputFormat::Json,
            out: None,
            case: CaseSelection::A,
            b_values: vec![Rational::new(3, 2)],
            n_max: 5,
            extended: false,
        }
    }
}

pub const KEYS: &[&str] = &[
    "rel_tol",
    "quad_check_tol",
    "quad.rel_tol",
    "quad.abs_tol",
    "quad.panel_order",
    "quad.cutoff",
    "quad.max_panels",
    "format",
    "out",
    "case",
    "b",
    "n_max",
    "extended",
];

/// Split config text into a key/value map, rejecting malformed lines,
/// unknown keys and duplicates.
pub fn parse_pairs(text: &str) -> Result<BTreeMap<String, String>> {
    let mut map = BTreeMap::new();
    for (lineno, raw) in text.lines().enumerate() {
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let (k, v) = line
            .split_once('=')
            .ok_or_else(|| Error::Parse(format!("line {}: expected key = value", lineno + 1)))?;
        let key = k.trim();
        if !KEYS.contains(&key) {
            return Err(Error::Parse(format!("line {}: unknown key {key:?}", lineno + 1)));
        }
        if map.insert(key.to_string(), v.trim().to_string()).is_some() {
            return Err(Error::Parse(format!("line {}: duplicate key {key:?}", lineno + 1)));
        }
    }
    Ok(map)
}

fn num<T: FromStr>(key: &str, v: &str) -> Result<T> {
    v.parse().map_err(|_| Error::Parse(format!("{key}: cannot parse {v:?}")))
}

fn positive(key: &str, v: &str) -> Result<f64> {
    let x: f64 = num(key, v)?;
    if !(x.is_finite() && x > 0.0) {
        return Err(Error::Parse(format!("{key} must be positive and finite, got {v:?}")));
    }
    Ok(x)
}

fn boolean(key: &str, v: &str) -> Result<bool> {
    match v.to_ascii_lowercase().as_str() {
        "true" | "yes" | "1" | "on" => Ok(true),
        "false" | "no" | "0" | "off" => Ok(false),
        _ => Err(Error::Parse(format!("{key}: expected a boolean, got {v:?}"))),
    }
}

/// Comma separated `B` values, each exact (`1.5`, `-1/2`, `7.3`).
pub fn parse_b_list(v: &str) -> Result<Vec<Rational>> {
    let out: Vec<Rational> = v.split(',').map(|s| s.trim().parse()).collect::<Result<_>>()?;
    if out.is_empty() {
        return Err(Error::Parse("empty B list".into()));
    }
    Ok(out)
}

impl RunConfig {
    /// Apply one key to this configuration.
    pub fn set(&mut self, key: &str, v: &str) -> Result<()> {
        match key {
            "rel_tol" => self.rel_tol = positive(key, v)?,
            "quad_check_tol" => self.quad_check_tol = positive(key, v)?,
            "quad.rel_tol" => self.quadrature.rel_tol = positive(key, v)?,
            "quad.abs_tol" => self.quadrature.abs_tol = positive(key, v)?,
            "quad.panel_order" => self.quadrature.panel_order = num(key, v)?,
            "quad.cutoff" => {
                self.quadrature.cutoff = if v.eq_ignore_ascii_case("auto") { Cutoff::Auto } else { Cutoff::Fixed(positive(key, v)?) }
            }
            "quad.max_panels" => self.quadrature.max_panels = num(key, v)?,
            "format" => self.format = v.parse()?,
            "out" => self.out = if v.is_empty() { None } else { Some(PathBuf::from(v)) },
            "case" => self.case = v.parse()?,
            "b" => self.b_values = parse_b_list(v)?,
            "n_max" => self.n_max = num(key, v)?,
            "extended" => self.extended = boolean(key, v)?,
            _ => return Err(Error::Parse(format!("unknown key {key:?}"))),
        }
        Ok(())
    }

    pub fn from_text(text: &str) -> Result<Self> {
        let mut cfg = RunConfig::default();
        for (k, v) in parse_pairs(text)? {
            cfg.set(&k, &v)?;
        }
        cfg.quadrature.validate()?;
        Ok(cfg)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_all_keys() {
        let text = "# run\nrel_tol = 1e-10\nquad.cutoff = 30\nquad.panel_order=21\nformat = csv\ncase = B\nb = -0.5, 3/2, 7.3\nn_max = 8\nextended = yes\nout = /tmp/x\n";
        let c = RunConfig::from_text(text).unwrap();
        assert_eq!(c.rel_tol, 1e-10);
        assert_eq!(c.quadrature.cutoff, Cutoff::Fixed(30.0));
        assert_eq!(c.format, OutputFormat::Csv);
        assert_eq!(c.b_values, vec![Rational::new(-1, 2), Rational::new(3, 2), Rational::new(73, 10)]);
        assert!(c.extended);
    }

    #[test]
    fn rejects_bad_input() {
        for text in ["foo = 1", "rel_tol", "rel_tol = -1", "rel_tol = 1\nrel_tol = 2", "format = xml", "quad.panel_order = 9", "b = 1/0"] {
            assert!(RunConfig::from_text(text).is_err(), "{text:?}");
        }
        assert_eq!(RunConfig::from_text("").unwrap(), RunConfig::default());
    }
}
