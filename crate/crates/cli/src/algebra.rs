use std::path::PathBuf;

use clap::{Args, ValueEnum};
use hbk_core::hopf::{read_hopf, verify_hopf, HopfPresentation};
use hbk_core::scalar::Scalar;
use hbk_core::zoo::{builtin_group, group_algebra, kac_b4m, quantum_double, uq_sl2_root};

use crate::Failure;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Family {
    Group,
    Double,
    B4m,
    Uq,
    Raw,
}

/// Which Hopf algebra to load.
#[derive(Debug, Clone, Args)]
pub struct AlgebraSpec {
    /// Algebra family.
    #[arg(long, value_enum)]
    pub family: Family,
    /// Group for `group` and `double`, e.g. S3, Z6, D4, Z2xZ2.
    #[arg(long)]
    pub group: Option<String>,
    /// Parameter m > 2 of B_{4m}.
    #[arg(long)]
    pub m: Option<usize>,
    /// Order n ≥ 3 of the root of unity for Ū_q.
    #[arg(long)]
    pub n: Option<u32>,
    /// Use q = ζ_n^k for Ū_q.
    #[arg(long, default_value_t = 1, allow_negative_numbers = true)]
    pub power: i64,
    /// Use the conjugate root q̄ = ζ_n^{-1} for Ū_q.
    #[arg(long)]
    pub conj: bool,
    /// Normalize λ as λ_q = c_q⁻¹λ for Ū_q instead of the default.
    #[arg(long)]
    pub lambda_q: bool,
    /// Structure-constant file for `raw`.
    #[arg(long)]
    pub file: Option<PathBuf>,
}

/// A verified presentation plus the preferred rescaling of λ, if any.
pub struct Loaded {
    pub hopf: HopfPresentation,
    pub lambda_scale: Option<Scalar>,
}

fn need<T>(v: Option<T>, flag: &str, family: &str) -> Result<T, Failure> {
    v.ok_or_else(|| Failure::Usage(format!("--family {family} requires --{flag}")))
}

impl AlgebraSpec {
    pub fn load(&self) -> Result<Loaded, Failure> {
        let usage = |e: &dyn std::fmt::Display| Failure::Usage(e.to_string());
        let mut lambda_scale = None;
        let hopf = match self.family {
            Family::Group | Family::Double => {
                let g = builtin_group(&need(self.group.clone(), "group", "group/double")?).map_err(|e| usage(&e))?;
                let built = if self.family == Family::Group {
                    group_algebra(&g)
                } else {
                    quantum_double(&g)
                };
                built.map_err(|e| usage(&e))?.0
            }
            Family::B4m => kac_b4m(need(self.m, "m", "b4m")?).map_err(|e| usage(&e))?.0,
            Family::Uq => {
                let n = need(self.n, "n", "uq")?;
                let power = if self.conj { -self.power } else { self.power };
                let u = uq_sl2_root(n, power).map_err(|e| usage(&e))?;
                if self.lambda_q {
                    lambda_scale = u.expected.preferred_lambda_scale.clone();
                }
                u.hopf
            }
            Family::Raw => {
                let path = need(self.file.clone(), "file", "raw")?;
                let text = std::fs::read_to_string(&path)
                    .map_err(|e| Failure::Usage(format!("cannot read {}: {e}", path.display())))?;
                read_hopf(&text).map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))?
            }
        };
        if self.lambda_q && self.family != Family::Uq {
            return Err(Failure::Usage("--lambda-q applies only to --family uq".into()));
        }
        Ok(Loaded { hopf, lambda_scale })
    }
}

/// Runs the Hopf axiom suite and turns failures into an error naming them.
pub fn check_axioms(h: &HopfPresentation) -> Result<hbk_core::report::AxiomReport, Failure> {
    let report = verify_hopf(h);
    if report.all_passed() {
        Ok(report)
    } else {
        Err(Failure::Computation(format!("Hopf axioms fail:\n{report}")))
    }
}
