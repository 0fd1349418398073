use std::str::FromStr;

use rayon::prelude::*;
use serde::Serialize;

use super::grid::{GridConfig, GridError};
use super::{evaluate, IdentityCase, IdentityKind, VerificationReport};
use crate::binet::make_context;
use crate::sequences::HoradamParams;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SuiteSelection {
    All,
    One(IdentityKind),
}

impl SuiteSelection {
    pub fn identities(self) -> Vec<IdentityKind> {
        match self {
            SuiteSelection::All => IdentityKind::ALL.to_vec(),
            SuiteSelection::One(k) => vec![k],
        }
    }
}

impl FromStr for SuiteSelection {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        if s == "all" {
            Ok(SuiteSelection::All)
        } else {
            s.parse().map(SuiteSelection::One)
        }
    }
}

const EXTENDED_RANGE: std::ops::RangeInclusive<i64> = -5..=5;

/// Index tuples inside the stated domain, bounded by the grid.
fn stated_indices(identity: IdentityKind, nmax: i64, rmax: i64) -> Vec<Vec<i64>> {
    let mut out = Vec::new();
    match identity {
        IdentityKind::Catalan => {
            for m in 0..=nmax {
                for r in 0..=m.min(rmax) {
                    out.push(vec![m, r]);
                }
            }
        }
        IdentityKind::Cassini => out.extend((1..=nmax).map(|m| vec![m])),
        IdentityKind::Docagne => {
            for r in 0..=nmax {
                for m in 0..=nmax {
                    out.push(vec![r, m]);
                }
            }
        }
        IdentityKind::AdjacentCommutator | IdentityKind::SquareDifference | IdentityKind::DiagCommutator => {
            out.extend((0..=nmax).map(|n| vec![n]))
        }
        IdentityKind::LucasFibExchange => {
            for n in 0..=nmax {
                for r in 0..=rmax {
                    for s in 0..=rmax {
                        out.push(vec![n, r, s]);
                    }
                }
            }
        }
        IdentityKind::HoradamCommutator => {
            for n in 0..=nmax {
                for m in n..=nmax {
                    out.push(vec![n, m]);
                }
            }
        }
    }
    out
}

/// Negative-index probes for the identities whose derivation does not depend
/// on the sign of the indices.
fn extended_indices(identity: IdentityKind) -> Vec<Vec<i64>> {
    let mut out = Vec::new();
    match identity {
        IdentityKind::Catalan | IdentityKind::Docagne => {
            for x in EXTENDED_RANGE {
                for y in EXTENDED_RANGE {
                    if x.min(y) < 0 {
                        out.push(vec![x, y]);
                    }
                }
            }
        }
        IdentityKind::Cassini => out.extend((*EXTENDED_RANGE.start()..=0).map(|m| vec![m])),
        _ => {}
    }
    out
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct IdentitySummary {
    pub identity: IdentityKind,
    pub cases: usize,
    pub printed_pass: usize,
    pub reference_pass: usize,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SuiteSummary {
    pub cases: usize,
    pub reference_failures: usize,
    pub printed_failures: usize,
    pub extended_cases: usize,
    pub extended_failures: usize,
    pub by_identity: Vec<IdentitySummary>,
}

#[derive(Debug, Clone, PartialEq)]
pub struct SuiteReport {
    /// Cases inside the stated domains, ordered by identity, parameters, indices.
    pub reports: Vec<VerificationReport>,
    /// Extended-domain probes, same ordering. Not part of the pass criterion.
    pub extended: Vec<VerificationReport>,
}

impl SuiteReport {
    /// Every stated-domain case meets its reference form.
    pub fn success(&self) -> bool {
        self.reports.iter().all(VerificationReport::reference_pass)
    }

    /// Cases where the printed right side disagrees with the left side.
    pub fn printed_failures(&self) -> impl Iterator<Item = &VerificationReport> {
        self.reports.iter().filter(|r| !r.printed_pass)
    }

    pub fn summary(&self) -> SuiteSummary {
        let mut by_identity: Vec<IdentitySummary> = Vec::new();
        for rep in &self.reports {
            let identity = rep.case.identity;
            let entry = match by_identity.iter_mut().find(|s| s.identity == identity) {
                Some(entry) => entry,
                None => {
                    by_identity.push(IdentitySummary { identity, cases: 0, printed_pass: 0, reference_pass: 0 });
                    by_identity.last_mut().expect("just pushed")
                }
            };
            entry.cases += 1;
            entry.printed_pass += usize::from(rep.printed_pass);
            entry.reference_pass += usize::from(rep.reference_pass());
        }
        SuiteSummary {
            cases: self.reports.len(),
            reference_failures: self.reports.iter().filter(|r| !r.reference_pass()).count(),
            printed_failures: self.printed_failures().count(),
            extended_cases: self.extended.len(),
            extended_failures: self.extended.iter().filter(|r| !r.reference_pass()).count(),
            by_identity,
        }
    }
}

struct Job {
    identity: IdentityKind,
    params: HoradamParams,
}

impl Job {
    fn run(&self, grid: &GridConfig) -> (Vec<VerificationReport>, Vec<VerificationReport>) {
        let ctx = make_context(&self.params).expect("grid points are validated");
        let eval = |indices: Vec<i64>, extended: bool| {
            let mut case = IdentityCase::new(self.identity, indices, self.params);
            if extended {
                case = case.extended();
            }
            evaluate(&ctx, case).expect("generated indices respect arity and domain")
        };
        let stated = stated_indices(self.identity, grid.nmax, grid.rmax)
            .into_iter()
            .map(|idx| eval(idx, false))
            .collect();
        let extended = if grid.extended {
            extended_indices(self.identity).into_iter().map(|idx| eval(idx, true)).collect()
        } else {
            Vec::new()
        };
        (stated, extended)
    }
}

/// Runs the selected identities over the grid. Grid points are evaluated in
/// parallel; the result order is fixed by identity, then grid order, then
/// index tuple.
pub fn run_suite(grid: &GridConfig, selection: SuiteSelection) -> Result<SuiteReport, GridError> {
    grid.validate()?;
    let points = grid.points();
    let seedless: Vec<HoradamParams> = grid
        .pq_pairs()
        .into_iter()
        .map(|(p, q)| HoradamParams { p, q, a: 0, b: 1 })
        .collect();
    let jobs: Vec<Job> = selection
        .identities()
        .into_iter()
        .flat_map(|identity| {
            let params = if identity.ignores_seeds() { &seedless } else { &points };
            params.iter().map(move |&params| Job { identity, params })
        })
        .collect();
    let results: Vec<_> = jobs.par_iter().map(|job| job.run(grid)).collect();
    let mut report = SuiteReport { reports: Vec::new(), extended: Vec::new() };
    for (stated, extended) in results {
        report.reports.extend(stated);
        report.extended.extend(extended);
    }
    Ok(report)
}
