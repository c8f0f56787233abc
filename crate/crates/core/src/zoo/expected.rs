use crate::hopf::{QcqsBundle, SparseVec};
use crate::report::AxiomReport;
use crate::scalar::Scalar;

/// A second labeled basis, each vector written in the structural basis.
#[derive(Debug, Clone)]
pub struct AltBasis {
    pub labels: Vec<String>,
    pub vectors: Vec<SparseVec>,
}

/// Closed-form data for an example algebra, to be checked against the
/// generically derived bundle. Integrals are stored with the solver's
/// normalization.
#[derive(Debug, Clone, Default)]
pub struct ExpectedData {
    pub lambda: Option<Vec<Scalar>>,
    pub lambda_right: Option<Vec<Scalar>>,
    pub big_lambda: Option<SparseVec>,
    /// Row-major d×d table of ev(b_i ⊗ b_j).
    pub ev: Option<Vec<Scalar>>,
    pub coev: Option<SparseVec>,
    /// (input, expected c(input)) pairs in A ⊗ A.
    pub braid: Vec<(SparseVec, SparseVec)>,
    pub cosemisimple: Option<bool>,
    /// Scale c such that cλ is the preferred functional (λ_q for Ū_q).
    pub preferred_lambda_scale: Option<Scalar>,
    pub alt_basis: Option<AltBasis>,
}

impl ExpectedData {
    /// Entrywise comparison against a bundle; only fields that are present are checked.
    pub fn compare(&self, b: &QcqsBundle) -> AxiomReport {
        let mut report = AxiomReport::new();
        let d = b.dim();
        let vec_fails = |expected: &[Scalar], actual: &[Scalar]| -> Vec<String> {
            if expected.len() != actual.len() {
                return vec![format!("length {} vs {}", expected.len(), actual.len())];
            }
            expected
                .iter()
                .zip(actual)
                .enumerate()
                .filter(|(_, (e, a))| e != a)
                .map(|(i, (e, a))| format!("index {i}: expected {e}, derived {a}"))
                .collect()
        };
        if let Some(l) = &self.lambda {
            report.record("lambda", d, vec_fails(l, b.lambda()));
        }
        if let Some(l) = &self.lambda_right {
            report.record("lambda_right", d, vec_fails(l, &b.integrals().lambda_right));
        }
        if let Some(big) = &self.big_lambda {
            let fails = if big != b.big_lambda() {
                vec![format!(
                    "expected {}, derived {}",
                    b.algebra().format_element(big),
                    b.algebra().format_element(b.big_lambda())
                )]
            } else {
                vec![]
            };
            report.record("Lambda", 1, fails);
        }
        if let Some(ev) = &self.ev {
            let derived: Vec<Scalar> = (0..d * d).map(|ij| b.ev(ij / d, ij % d).clone()).collect();
            report.record("ev", d * d, vec_fails(ev, &derived));
        }
        if let Some(u) = &self.coev {
            let fails = if u != b.coev() {
                vec!["expected copairing differs from U_λ".to_string()]
            } else {
                vec![]
            };
            report.record("coev", 1, fails);
        }
        if !self.braid.is_empty() {
            let fails = self
                .braid
                .iter()
                .enumerate()
                .filter(|(_, (input, output))| b.braid(input) != *output)
                .map(|(k, _)| format!("braiding check {k}"))
                .collect();
            report.record("braid", self.braid.len(), fails);
        }
        if let Some(c) = self.cosemisimple {
            let fails = if c != b.integrals().cosemisimple {
                vec![format!("expected cosemisimple = {c}")]
            } else {
                vec![]
            };
            report.record("cosemisimple", 1, fails);
        }
        report
    }
}
