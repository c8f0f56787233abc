use std::fmt;

use serde::Serialize;

/// Maximum number of failure descriptions kept per check.
const MAX_RECORDED: usize = 8;

/// Outcome of one named identity checked over a finite index set.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct AxiomCheck {
    pub name: String,
    pub checked: usize,
    pub failed: usize,
    pub failures: Vec<String>,
    /// How the index set was covered, when not exhaustively.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub scope: Option<String>,
}

impl AxiomCheck {
    pub fn passed(&self) -> bool {
        self.failed == 0
    }
}

/// Pass/fail record for a suite of identities.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct AxiomReport {
    pub checks: Vec<AxiomCheck>,
}

impl AxiomReport {
    pub fn new() -> Self {
        Self::default()
    }

    /// Record a check from a list of failure descriptions (empty = pass).
    pub fn record(&mut self, name: &str, checked: usize, failures: Vec<String>) {
        self.record_scoped(name, checked, failures, None);
    }

    pub fn record_scoped(&mut self, name: &str, checked: usize, failures: Vec<String>, scope: Option<String>) {
        let failed = failures.len();
        self.checks.push(AxiomCheck {
            name: name.to_string(),
            checked,
            failed,
            failures: failures.into_iter().take(MAX_RECORDED).collect(),
            scope,
        });
    }

    pub fn extend(&mut self, other: AxiomReport) {
        self.checks.extend(other.checks);
    }

    pub fn len(&self) -> usize {
        self.checks.len()
    }

    pub fn is_empty(&self) -> bool {
        self.checks.is_empty()
    }

    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(AxiomCheck::passed)
    }

    pub fn passed_count(&self) -> usize {
        self.checks.iter().filter(|c| c.passed()).count()
    }

    pub fn get(&self, name: &str) -> Option<&AxiomCheck> {
        self.checks.iter().find(|c| c.name == name)
    }

    pub fn failed_names(&self) -> Vec<&str> {
        self.checks
            .iter()
            .filter(|c| !c.passed())
            .map(|c| c.name.as_str())
            .collect()
    }
}

impl fmt::Display for AxiomReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for c in &self.checks {
            let status = if c.passed() { "ok" } else { "FAIL" };
            write!(f, "{:<28} {:>4}  ({} checked, {} failed)", c.name, status, c.checked, c.failed)?;
            match &c.scope {
                Some(scope) => writeln!(f, " [{scope}]")?,
                None => writeln!(f)?,
            }
            for msg in &c.failures {
                writeln!(f, "    {msg}")?;
            }
        }
        Ok(())
    }
}

/// Which members of an index set a check visits.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub enum Coverage {
    /// Every index.
    Exhaustive,
    /// A seeded uniform sample of indices.
    Sampled { samples: usize, seed: u64 },
    /// Exhaustive when the estimated work is within `budget` elementary
    /// operations, otherwise sampled.
    Auto { budget: f64, samples: usize, seed: u64 },
}

impl Default for Coverage {
    fn default() -> Self {
        Coverage::Auto {
            budget: 2.0e7,
            samples: 4000,
            seed: 0x5eed,
        }
    }
}

impl Coverage {
    /// Indices to visit out of `0..n`, in increasing order, and a description
    /// of the coverage when it is not exhaustive. `salt` decorrelates the
    /// samples drawn for different checks.
    pub fn select(&self, n: usize, cost_per_item: f64, salt: u64) -> (Vec<usize>, Option<String>) {
        use rand::SeedableRng;
        let sampled = match *self {
            Coverage::Exhaustive => None,
            Coverage::Sampled { samples, seed } => Some((samples, seed)),
            Coverage::Auto { budget, samples, seed } => (cost_per_item * n as f64 > budget).then_some((samples, seed)),
        };
        match sampled {
            Some((k, seed)) if k < n => {
                let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed.wrapping_add(salt.wrapping_mul(0x9e37_79b9_7f4a_7c15)));
                let mut idx = rand::seq::index::sample(&mut rng, n, k).into_vec();
                idx.sort_unstable();
                (idx, Some(format!("sampled {k} of {n}")))
            }
            _ => ((0..n).collect(), None),
        }
    }
}

/// Stable salt for a check name.
pub fn salt(name: &str) -> u64 {
    name.bytes().fold(0xcbf2_9ce4_8422_2325, |h, b| (h ^ b as u64).wrapping_mul(0x100_0000_01b3))
}
