//! Exhaustive checks of the map and its compatibility with the operators.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use serde::Serialize;

use crate::domino::all_tableaux;
use crate::hmap::{h_map, HmapError, TableauPair};
use crate::involution::{SignedInvolution, SimpleRoot};
use crate::signed::classes_for;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Suite {
    Tau,
    WallCross,
    Bijection,
}

impl Suite {
    pub fn name(self) -> &'static str {
        match self {
            Suite::Tau => "tau",
            Suite::WallCross => "wallcross",
            Suite::Bijection => "bijection",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Failure {
    pub sigma: String,
    pub detail: String,
}

/// Outcome of one suite at one `(n, p)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Report {
    pub suite: &'static str,
    pub n: usize,
    pub p: usize,
    pub checked: usize,
    pub failures: Vec<Failure>,
    /// Extra counts shown in the text form.
    #[serde(skip)]
    pub note: String,
}

impl Report {
    fn new(suite: Suite, n: usize, p: usize) -> Self {
        Report { suite: suite.name(), n, p, checked: 0, failures: Vec::new(), note: String::new() }
    }

    fn fail(&mut self, sigma: &SignedInvolution, detail: impl Into<String>) {
        self.failures.push(Failure { sigma: sigma.to_string(), detail: detail.into() });
    }

    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::to_value(self).expect("report serializes")
    }
}

impl fmt::Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let status = if self.passed() { "ok" } else { "FAIL" };
        write!(f, "{:<10} n={} p={} checked={} failures={} {}", self.suite, self.n, self.p, self.checked, self.failures.len(), status)?;
        if !self.note.is_empty() {
            write!(f, " {}", self.note)?;
        }
        for x in &self.failures {
            write!(f, "\n  {}: {}", x.sigma, x.detail)?;
        }
        Ok(())
    }
}

fn fmt_roots(s: &BTreeSet<SimpleRoot>) -> String {
    let v: Vec<String> = s.iter().map(|r| r.to_string()).collect();
    format!("{{{}}}", v.join(", "))
}

/// τ of a parameter agrees with τ of its tableau.
pub fn verify_tau_at(n: usize, p: usize) -> Report {
    let mut r = Report::new(Suite::Tau, n, p);
    for sigma in SignedInvolution::enumerate(n, p) {
        r.checked += 1;
        match h_map(&sigma) {
            Ok(h) => {
                let (a, b) = (sigma.tau(), h.tau());
                if a != b {
                    r.fail(&sigma, format!("parameter {} but tableau {}", fmt_roots(&a), fmt_roots(&b)));
                }
            }
            Err(e) => r.fail(&sigma, e.to_string()),
        }
    }
    r
}

/// Ordered pairs of adjacent simple roots in rank `n`.
pub fn root_pairs(n: usize) -> Vec<(SimpleRoot, SimpleRoot)> {
    SimpleRoot::adjacent_pairs(n)
}

/// The operators commute with the map, as sets of pairs. Where no
/// tableau move applies the pair operator is the conjugate by `H`; those
/// cases are counted in the note.
pub fn verify_wallcross_at(n: usize, p: usize) -> Report {
    let mut r = Report::new(Suite::WallCross, n, p);
    let params: Vec<SignedInvolution> = SignedInvolution::enumerate(n, p).collect();
    let mut image: BTreeMap<SignedInvolution, TableauPair> = BTreeMap::new();
    let mut inverse: BTreeMap<TableauPair, SignedInvolution> = BTreeMap::new();
    for sigma in &params {
        match h_map(sigma) {
            Ok(h) => {
                inverse.insert(h.clone(), sigma.clone());
                image.insert(sigma.clone(), h);
            }
            Err(e) => r.fail(sigma, e.to_string()),
        }
    }
    let mut conjugated = 0;
    for sigma in &params {
        let Some(h) = image.get(sigma) else { continue };
        let tau = sigma.tau();
        for (alpha, beta) in root_pairs(n) {
            if tau.contains(&alpha) || !tau.contains(&beta) {
                continue;
            }
            r.checked += 1;
            let lhs: BTreeSet<&TableauPair> = match sigma.wall_cross(alpha, beta) {
                Ok(v) => v.iter().filter_map(|s| image.get(s)).collect(),
                Err(e) => {
                    r.fail(sigma, format!("T({alpha},{beta}): {e}"));
                    continue;
                }
            };
            let rhs: BTreeSet<TableauPair> = match h.wall_cross(alpha, beta) {
                Ok(v) => v.into_iter().collect(),
                Err(HmapError::NoTableauMove { .. }) if !alpha.is_long() && !beta.is_long() => {
                    conjugated += 1;
                    let back = &inverse[h];
                    match back.wall_cross(alpha, beta) {
                        Ok(v) => v.iter().filter_map(|s| image.get(s).cloned()).collect(),
                        Err(e) => {
                            r.fail(sigma, format!("T({alpha},{beta}): {e}"));
                            continue;
                        }
                    }
                }
                Err(e) => {
                    r.fail(sigma, format!("T({alpha},{beta}): {e}"));
                    continue;
                }
            };
            if lhs.len() != rhs.len() || !rhs.iter().all(|x| lhs.contains(x)) {
                r.fail(sigma, format!("T({alpha},{beta}): {} parameter images, {} tableau images, not equal", lhs.len(), rhs.len()));
            }
        }
    }
    r.note = format!("conjugated={conjugated}");
    r
}

/// Number of pairs (tableau, class) of rank `n` and signature `p`, counted
/// from the tableau side.
pub fn pair_count(n: usize, p: usize) -> usize {
    all_tableaux(n)
        .iter()
        .filter(|t| t.shape().is_doubled())
        .map(|t| classes_for(t, p).map_or(0, |c| c.len()))
        .sum()
}

/// The map is injective and its image has the size of the pair count.
pub fn verify_bijection_at(n: usize, p: usize) -> Report {
    let mut r = Report::new(Suite::Bijection, n, p);
    let mut seen: BTreeMap<TableauPair, SignedInvolution> = BTreeMap::new();
    for sigma in SignedInvolution::enumerate(n, p) {
        r.checked += 1;
        match h_map(&sigma) {
            Ok(h) => {
                if let Some(prev) = seen.get(&h) {
                    r.fail(&sigma, format!("same image as {prev}"));
                } else {
                    seen.insert(h, sigma);
                }
            }
            Err(e) => r.fail(&sigma, e.to_string()),
        }
    }
    let pairs = pair_count(n, p);
    if pairs != r.checked {
        r.failures.push(Failure {
            sigma: String::new(),
            detail: format!("{} parameters but {} tableau pairs", r.checked, pairs),
        });
    }
    r.note = format!("parameters={} pairs={} image={}", r.checked, pairs, seen.len());
    r
}

pub fn run_suite(suite: Suite, n_max: usize) -> Vec<Report> {
    let mut out = Vec::new();
    for n in 1..=n_max {
        for p in 0..=n {
            out.push(match suite {
                Suite::Tau => verify_tau_at(n, p),
                Suite::WallCross => verify_wallcross_at(n, p),
                Suite::Bijection => verify_bijection_at(n, p),
            });
        }
    }
    out
}

pub fn verify_tau(n_max: usize) -> Vec<Report> {
    run_suite(Suite::Tau, n_max)
}

pub fn verify_wallcross(n_max: usize) -> Vec<Report> {
    run_suite(Suite::WallCross, n_max)
}

pub fn verify_bijection(n_max: usize) -> Vec<Report> {
    run_suite(Suite::Bijection, n_max)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_counts() {
        assert_eq!(pair_count(2, 1), 4);
        let r = verify_bijection_at(2, 1);
        assert!(r.passed(), "{r}");
        assert_eq!(r.note, "parameters=4 pairs=4 image=4");
    }

    #[test]
    fn suites_pass_in_low_rank() {
        for suite in [Suite::Tau, Suite::Bijection, Suite::WallCross] {
            for r in run_suite(suite, 3) {
                assert!(r.passed(), "{r}");
            }
        }
    }

    #[test]
    fn json_shape() {
        let v = verify_tau_at(1, 1).to_json();
        assert_eq!(v["suite"], "tau");
        assert_eq!(v["checked"], 1);
        assert!(v["failures"].as_array().unwrap().is_empty());
        assert!(v.get("note").is_none());
    }
}
