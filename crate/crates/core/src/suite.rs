//! Named verification suites and their reports.

use std::fmt::Write as _;
use std::str::FromStr;
use std::time::{Duration, Instant};

use serde_json::{json, Value};

use crate::exact::mpoly::MAX_VARS;
use crate::exact::{Exact, Ground, Sampled};
use crate::fockrep::relations::{verify_psi_recursion, verify_relation, Relation, RelationParams};
use crate::fockrep::{verify_coefficient_oracles, verify_gamma};
use crate::partitions::TieBreak;
use crate::report::{first_failure, Check};
use crate::shufflealg::{
    generator, k_element, verify_associativity, verify_homomorphism, verify_k_commute,
    verify_order_independence, verify_wheel, ShuffleElement,
};
use crate::symfun::macdonald::{
    verify_bases, verify_newton, verify_orthogonality, verify_pieri, verify_pieri_single,
    verify_tie_break,
};
use crate::symfun::{BasisTables, MacdonaldTable};
use crate::theta::{
    verify_c_ratio, verify_heisenberg_commute, verify_intertwining, verify_single_box, verify_theta,
};
use crate::Error;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Suite {
    Relations,
    Shuffle,
    Macdonald,
    Theta,
    All,
}

impl Suite {
    pub fn name(self) -> &'static str {
        match self {
            Suite::Relations => "relations",
            Suite::Shuffle => "shuffle",
            Suite::Macdonald => "macdonald",
            Suite::Theta => "theta",
            Suite::All => "all",
        }
    }
}

impl FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        match s {
            "relations" => Ok(Suite::Relations),
            "shuffle" => Ok(Suite::Shuffle),
            "macdonald" => Ok(Suite::Macdonald),
            "theta" => Ok(Suite::Theta),
            "all" => Ok(Suite::All),
            _ => Err(Error::InvalidArgument(format!("unknown suite {s:?}"))),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Mode {
    Exact,
    Sampled,
}

impl Mode {
    pub fn name(self) -> &'static str {
        match self {
            Mode::Exact => "exact",
            Mode::Sampled => "sampled",
        }
    }
}

#[derive(Clone, Debug)]
pub struct SuiteConfig {
    pub max_size: usize,
    pub series_order: usize,
    pub mode: Mode,
    pub seed: u64,
}

impl Default for SuiteConfig {
    fn default() -> Self {
        SuiteConfig {
            max_size: 5,
            series_order: 8,
            mode: Mode::Exact,
            seed: 0,
        }
    }
}

#[derive(Clone, Debug)]
pub struct VerificationReport {
    pub suite: String,
    pub config: SuiteConfig,
    pub checks: Vec<Check>,
    pub elapsed: Duration,
}

impl VerificationReport {
    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(Check::passed)
    }

    pub fn first_failure(&self) -> Option<&Check> {
        first_failure(&self.checks)
    }

    pub fn to_json(&self, timings: bool) -> Value {
        let passed = self.checks.iter().filter(|c| c.passed()).count();
        let checks: Vec<Value> = self
            .checks
            .iter()
            .map(|c| {
                let mut v = json!({
                    "id": c.id,
                    "anchor": c.anchor,
                    "status": if c.passed() { "PASS" } else { "FAIL" },
                });
                if let Some(w) = &c.witness {
                    v["witness"] = json!(w);
                }
                if let Some(n) = &c.note {
                    v["note"] = json!(n);
                }
                if timings {
                    v["elapsed_ms"] = json!(c.elapsed.as_secs_f64() * 1e3);
                }
                v
            })
            .collect();
        let mut params = json!({
            "max_size": self.config.max_size,
            "series_order": self.config.series_order,
            "mode": self.config.mode.name(),
        });
        if self.config.mode == Mode::Sampled {
            params["seed"] = json!(self.config.seed);
        }
        let mut out = json!({
            "schema": 1,
            "suite": self.suite,
            "parameters": params,
            "totals": {
                "checks": self.checks.len(),
                "passed": passed,
                "failed": self.checks.len() - passed,
            },
            "checks": checks,
        });
        if timings {
            out["elapsed_ms"] = json!(self.elapsed.as_secs_f64() * 1e3);
        }
        out
    }

    pub fn to_text(&self, timings: bool) -> String {
        let mut s = String::new();
        for c in &self.checks {
            let status = if c.passed() { "PASS" } else { "FAIL" };
            let _ = write!(s, "{status} {}  ({})", c.id, c.anchor);
            if let Some(n) = &c.note {
                let _ = write!(s, " {n}");
            }
            if timings {
                let _ = write!(s, " [{:.1} ms]", c.elapsed.as_secs_f64() * 1e3);
            }
            s.push('\n');
            if let Some(w) = &c.witness {
                let _ = writeln!(s, "    witness: {w}");
            }
        }
        let passed = self.checks.iter().filter(|c| c.passed()).count();
        let _ = write!(s, "{}: {passed}/{} passed", self.suite, self.checks.len());
        if timings {
            let _ = write!(s, " in {:.2} s", self.elapsed.as_secs_f64());
        }
        s.push('\n');
        s
    }
}

pub fn run_suite(suite: Suite, config: &SuiteConfig) -> Result<VerificationReport, Error> {
    if config.max_size == 0 || config.series_order == 0 {
        return Err(Error::InvalidArgument(
            "max-size and series-order must be positive".into(),
        ));
    }
    let start = Instant::now();
    let checks = match config.mode {
        Mode::Exact => collect(&Exact::new(), suite, config)?,
        Mode::Sampled => collect(&Sampled::from_seed(config.seed), suite, config)?,
    };
    Ok(VerificationReport {
        suite: suite.name().to_string(),
        config: config.clone(),
        checks,
        elapsed: start.elapsed(),
    })
}

fn collect<G: Ground>(g: &G, suite: Suite, config: &SuiteConfig) -> Result<Vec<Check>, Error> {
    let n = config.max_size;
    match suite {
        Suite::Relations => relations(g, n, config.series_order),
        Suite::Shuffle => shuffle(g, n),
        Suite::Macdonald => macdonald(g, n),
        Suite::Theta => theta(g, n),
        Suite::All => {
            let mut out = relations(g, n, config.series_order)?;
            out.extend(shuffle(g, n)?);
            out.extend(macdonald(g, n)?);
            out.extend(theta(g, n)?);
            Ok(out)
        }
    }
}

pub fn relations<G: Ground>(g: &G, n_max: usize, order: usize) -> Result<Vec<Check>, Error> {
    let params = RelationParams {
        i_range: -2..=2,
        j_range: -2..=2,
        n_max,
        series_order: order,
    };
    let mut out = Vec::new();
    for rel in Relation::ALL {
        out.extend(verify_relation(g, rel, &params)?);
    }
    out.extend(verify_psi_recursion(g, n_max, order));
    out.extend(verify_coefficient_oracles(g, n_max, -2..=2));
    out.extend((0..=3).map(|s| verify_gamma(g, s, n_max)));
    Ok(out)
}

/// The degree-one generators `x^-1, x^0, x^1`.
pub fn degree_one_generators<G: Ground>() -> Vec<(String, ShuffleElement<G::F>)> {
    (-1..=1).map(|r| (format!("x^{r}"), generator(r))).collect()
}

pub fn shuffle<G: Ground>(g: &G, n_max: usize) -> Result<Vec<Check>, Error> {
    let ones = degree_one_generators::<G>();
    let mut gens = ones.clone();
    gens.push(("K2".to_string(), k_element(g, 2)?));
    let mut out = verify_associativity(g, &ones);
    out.extend(verify_wheel(g, &[-1, 0, 1]));
    for (fname, f) in &gens {
        for (hname, h) in &gens {
            out.push(verify_homomorphism(
                g,
                (fname.as_str(), f),
                (hname.as_str(), h),
                n_max,
            ));
        }
    }
    let k3 = ("K3".to_string(), k_element(g, 3)?);
    for (name, f) in gens.iter().chain([&k3]) {
        out.push(verify_order_independence(g, (name.as_str(), f), n_max));
    }
    let top = n_max.min(MAX_VARS);
    for m in 1..=top {
        for k in m..=top - m {
            out.extend(verify_k_commute(g, m, k, n_max));
        }
    }
    Ok(out)
}

pub fn macdonald<G: Ground>(g: &G, degree: usize) -> Result<Vec<Check>, Error> {
    let gq = g.qt();
    let tables = BasisTables::new(degree + 3);
    let table = MacdonaldTable::build(&gq, &tables, degree, TieBreak::ReverseLex)?;
    let mut out = verify_orthogonality(&gq, &tables, &table);
    out.push(verify_tie_break(&gq, &tables, &table));
    out.extend(verify_pieri(&gq, &tables, &table));
    out.push(verify_pieri_single(&gq, degree + 1));
    out.push(verify_newton(degree + 3));
    out.push(verify_bases(&gq, &tables));
    Ok(out)
}

pub fn theta<G: Ground>(g: &G, max_size: usize) -> Result<Vec<Check>, Error> {
    let mut out = vec![verify_c_ratio(g, max_size), verify_single_box(g, max_size)];
    for n in 1..=max_size.min(3) {
        out.push(verify_theta(g, n, max_size));
    }
    let top = max_size.min(3);
    out.extend(verify_heisenberg_commute(g, top, max_size));
    let gq = g.qt();
    let tables = BasisTables::new(max_size);
    let table = MacdonaldTable::build(&gq, &tables, max_size, TieBreak::ReverseLex)?;
    for i in 1..=top {
        out.push(verify_intertwining(g, &tables, &table, i));
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_suites_pass_in_both_modes() {
        for mode in [Mode::Exact, Mode::Sampled] {
            let config = SuiteConfig {
                max_size: 2,
                series_order: 4,
                mode,
                seed: 7,
            };
            let r = run_suite(Suite::All, &config).unwrap();
            assert!(r.all_passed(), "{}", r.to_text(false));
        }
    }

    #[test]
    fn bounds_are_validated() {
        let config = SuiteConfig {
            max_size: 0,
            ..SuiteConfig::default()
        };
        assert!(run_suite(Suite::Theta, &config).is_err());
        assert!("nope".parse::<Suite>().is_err());
    }
}
