//! Parameter grids for the identity suite.
//!
//! Text format, one `key=value` per line, `#` starts a comment:
//!
//! ```text
//! p=1,2,3
//! q=-2,-1,1,2
//! ab=0:1,2:p,1:1,2:3
//! nmax=10
//! rmax=6
//! extended=false
//! ```
//!
//! A seed may be the literal `p`, standing for the current value of `p`.
//! Missing keys take the default grid's value; an empty list yields an empty
//! grid.

use std::fmt;
use std::path::Path;

use thiserror::Error;

use crate::sequences::HoradamParams;

#[derive(Debug, Error)]
pub enum GridError {
    #[error("cannot read grid file {path}: {source}")]
    Io { path: String, source: std::io::Error },
    #[error("grid line {line}: {message}")]
    Syntax { line: usize, message: String },
    #[error("grid contains q = 0")]
    ZeroQ,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SeedSpec {
    Literal(i64),
    /// The value of `p` at the grid point.
    P,
}

impl SeedSpec {
    pub fn resolve(self, p: i64) -> i64 {
        match self {
            SeedSpec::Literal(v) => v,
            SeedSpec::P => p,
        }
    }
}

impl fmt::Display for SeedSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SeedSpec::Literal(v) => write!(f, "{v}"),
            SeedSpec::P => f.write_str("p"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GridConfig {
    pub p: Vec<i64>,
    pub q: Vec<i64>,
    pub ab: Vec<(SeedSpec, SeedSpec)>,
    /// Upper bound for positional indices (`n`, `m`, and `r` where it is a position).
    pub nmax: i64,
    /// Upper bound for offset indices (`r`, `s`).
    pub rmax: i64,
    /// Also probe Catalan, Cassini and d'Ocagne at negative indices.
    pub extended: bool,
}

impl Default for GridConfig {
    fn default() -> Self {
        GridConfig {
            p: vec![1, 2, 3],
            q: vec![-2, -1, 1, 2],
            ab: vec![
                (SeedSpec::Literal(0), SeedSpec::Literal(1)),
                (SeedSpec::Literal(2), SeedSpec::P),
                (SeedSpec::Literal(1), SeedSpec::Literal(1)),
                (SeedSpec::Literal(2), SeedSpec::Literal(3)),
            ],
            nmax: 10,
            rmax: 6,
            extended: false,
        }
    }
}

fn parse_seed(tok: &str) -> Option<SeedSpec> {
    match tok.trim() {
        "p" => Some(SeedSpec::P),
        t => t.parse().ok().map(SeedSpec::Literal),
    }
}

fn split_list(value: &str) -> impl Iterator<Item = &str> {
    value.split(',').map(str::trim).filter(|t| !t.is_empty())
}

impl GridConfig {
    pub fn parse(text: &str) -> Result<Self, GridError> {
        let mut cfg = GridConfig::default();
        for (idx, raw) in text.lines().enumerate() {
            let line_no = idx + 1;
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let syntax = |message: String| GridError::Syntax { line: line_no, message };
            let (key, value) = line
                .split_once('=')
                .ok_or_else(|| syntax(format!("expected key=value, got {line:?}")))?;
            let (key, value) = (key.trim(), value.trim());
            let ints = |value: &str| -> Result<Vec<i64>, GridError> {
                split_list(value)
                    .map(|t| t.parse::<i64>().map_err(|_| syntax(format!("bad integer {t:?} for {key}"))))
                    .collect()
            };
            let bound = |value: &str| -> Result<i64, GridError> {
                match value.parse::<i64>() {
                    Ok(v) if v >= 0 => Ok(v),
                    _ => Err(syntax(format!("{key} must be a non-negative integer, got {value:?}"))),
                }
            };
            match key {
                "p" => cfg.p = ints(value)?,
                "q" => cfg.q = ints(value)?,
                "ab" => {
                    cfg.ab = split_list(value)
                        .map(|pair| {
                            let (a, b) = pair
                                .split_once(':')
                                .ok_or_else(|| syntax(format!("seed pair {pair:?} is not a:b")))?;
                            match (parse_seed(a), parse_seed(b)) {
                                (Some(a), Some(b)) => Ok((a, b)),
                                _ => Err(syntax(format!("bad seed pair {pair:?}"))),
                            }
                        })
                        .collect::<Result<_, _>>()?
                }
                "nmax" => cfg.nmax = bound(value)?,
                "rmax" => cfg.rmax = bound(value)?,
                "extended" => {
                    cfg.extended = match value {
                        "true" | "1" | "yes" => true,
                        "false" | "0" | "no" => false,
                        other => return Err(syntax(format!("extended must be true or false, got {other:?}"))),
                    }
                }
                other => return Err(syntax(format!("unknown key {other:?}"))),
            }
        }
        cfg.validate()?;
        Ok(cfg)
    }

    pub fn load(path: &Path) -> Result<Self, GridError> {
        let text = std::fs::read_to_string(path)
            .map_err(|source| GridError::Io { path: path.display().to_string(), source })?;
        Self::parse(&text)
    }

    pub fn validate(&self) -> Result<(), GridError> {
        if self.q.contains(&0) {
            return Err(GridError::ZeroQ);
        }
        Ok(())
    }

    /// `(p, q)` pairs in grid order, skipping `p² + 4q = 0`.
    pub fn pq_pairs(&self) -> Vec<(i64, i64)> {
        let mut out = Vec::new();
        for &p in &self.p {
            for &q in &self.q {
                if HoradamParams::fibonacci(p, q).is_ok() {
                    out.push((p, q));
                }
            }
        }
        out
    }

    /// Every valid `(p, q, a, b)` in grid order.
    pub fn points(&self) -> Vec<HoradamParams> {
        let mut out = Vec::new();
        for (p, q) in self.pq_pairs() {
            for &(a, b) in &self.ab {
                out.push(HoradamParams { p, q, a: a.resolve(p), b: b.resolve(p) });
            }
        }
        out
    }

    /// Renders the grid in the text format accepted by [`GridConfig::parse`].
    pub fn to_text(&self) -> String {
        let join = |v: &[i64]| v.iter().map(i64::to_string).collect::<Vec<_>>().join(",");
        let ab = self.ab.iter().map(|(a, b)| format!("{a}:{b}")).collect::<Vec<_>>().join(",");
        format!(
            "p={}\nq={}\nab={}\nnmax={}\nrmax={}\nextended={}\n",
            join(&self.p),
            join(&self.q),
            ab,
            self.nmax,
            self.rmax,
            self.extended
        )
    }
}
