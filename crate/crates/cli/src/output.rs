use hbk_core::eval::InvariantResult;
use hbk_core::hopf::QcqsBundle;
use hbk_core::report::AxiomReport;
use hbk_core::scalar::{format_scalar_coeffs, Scalar};
use serde::Serialize;

#[derive(Debug, Clone, Serialize)]
#[serde(tag = "type", content = "data", rename_all = "lowercase")]
pub enum Value {
    Rational(String),
    Cyclotomic { conductor: u32, coeffs: Vec<String> },
}

impl Value {
    pub fn new(x: &Scalar) -> Self {
        match x.as_rational() {
            Some(r) => Value::Rational(r.to_string()),
            None => Value::Cyclotomic {
                conductor: x.conductor(),
                coeffs: format_scalar_coeffs(x).split(',').map(str::to_string).collect(),
            },
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct AlgebraSummary {
    pub name: String,
    pub dim: usize,
    pub conductor: u32,
    pub unimodular: bool,
    pub cosemisimple: bool,
    pub assumption15: bool,
    pub trace_s2: Value,
}

impl AlgebraSummary {
    pub fn new(b: &QcqsBundle) -> Self {
        let h = b.algebra();
        AlgebraSummary {
            name: h.name().to_string(),
            dim: h.dim(),
            conductor: h.conductor(),
            unimodular: b.integrals().unimodular,
            cosemisimple: b.integrals().cosemisimple,
            assumption15: b.lambda_symmetry().assumption15,
            trace_s2: Value::new(&h.trace_s2()),
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct TangleResult {
    pub tangle: String,
    /// v_A(H).
    pub value: Value,
    /// F_A(H), for closed tangles.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub functor_value: Option<Value>,
    pub caps: usize,
    pub cups: usize,
    /// Cap positions at which v was evaluated in the horn sweep.
    pub horn_checked: Vec<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub horn_independent: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub scaling_holds: Option<bool>,
    #[serde(skip)]
    pub exact: Scalar,
    #[serde(skip)]
    pub exact_f: Option<Scalar>,
}

impl TangleResult {
    pub fn new(name: &str, v: &InvariantResult, f: Option<&InvariantResult>) -> Self {
        TangleResult {
            tangle: name.to_string(),
            value: Value::new(&v.value),
            functor_value: f.map(|f| Value::new(&f.value)),
            caps: v.cap_count,
            cups: v.cup_count,
            horn_checked: v.horned_position.into_iter().collect(),
            horn_independent: None,
            scaling_holds: None,
            exact: v.value.clone(),
            exact_f: f.map(|f| f.value.clone()),
        }
    }
}

#[derive(Debug, Clone, Default, Serialize)]
pub struct Suites {
    #[serde(skip_serializing_if = "Option::is_none")]
    pub hopf: Option<AxiomReport>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub yd: Option<AxiomReport>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub relations: Option<AxiomReport>,
}

impl Suites {
    pub fn all_passed(&self) -> bool {
        [&self.hopf, &self.yd, &self.relations]
            .into_iter()
            .flatten()
            .all(AxiomReport::all_passed)
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct RunReport {
    pub algebra: AlgebraSummary,
    pub results: Vec<TangleResult>,
    pub suites: Suites,
}

/// Exact value, with an optional labeled decimal approximation.
pub fn show(x: &Scalar, decimal: Option<usize>) -> String {
    match decimal {
        None => x.to_string(),
        Some(k) => {
            let (re, im) = x.approx();
            let approx = if im == 0.0 || x.as_rational().is_some() {
                format!("{re:.k$}")
            } else {
                format!("{re:.k$} {} {:.k$}i", if im < 0.0 { '-' } else { '+' }, im.abs())
            };
            format!("{x}  (approximately {approx})")
        }
    }
}

pub fn print_summary(a: &AlgebraSummary) {
    let tr = match &a.trace_s2 {
        Value::Rational(s) => s.clone(),
        Value::Cyclotomic { coeffs, .. } => coeffs.join(","),
    };
    println!("algebra      {}", a.name);
    println!("dimension    {}", a.dim);
    if a.conductor > 1 {
        println!("field        Q(z), z = exp(2πi/{})", a.conductor);
    }
    println!("unimodular   {}", a.unimodular);
    println!("cosemisimple {}", a.cosemisimple);
    println!("λ(z)=λ(S(z)) on Z(A): {}", a.assumption15);
    println!("trace S²     {tr}");
}

pub fn print_suite(title: &str, r: &AxiomReport) {
    println!("{title}: {}/{} passed", r.passed_count(), r.len());
    for line in r.to_string().lines() {
        println!("  {line}");
    }
}
