//! Plain-text structure constants:
//!
//! ```text
//! hopf v1 dim=D conductor=N [name=...]
//! LABELS
//! i : label
//! MULT
//! i j -> k : c0,c1,...
//! UNIT
//! -> k : c
//! COMULT
//! i -> j k : c
//! COUNIT
//! i : c
//! ANTIPODE
//! i -> k : c
//! ANTIPODE_INV
//! i -> k : c
//! ```
//!
//! Coefficients are comma-separated rationals in the power basis of Q(ζ_N).
//! Lines starting with `#` are ignored. Entries not listed are zero.

use std::fmt::Write as _;

use super::{HopfData, HopfError, HopfPresentation, SparseVec};
use crate::scalar::{format_scalar_coeffs, parse_scalar, DenseMatrix, Scalar};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("line {line}: {msg}")]
pub struct HopfFileError {
    pub line: usize,
    pub msg: String,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Section {
    Labels,
    Mult,
    Unit,
    Comult,
    Counit,
    Antipode,
    AntipodeInv,
}

fn section(name: &str) -> Option<Section> {
    Some(match name {
        "LABELS" => Section::Labels,
        "MULT" => Section::Mult,
        "UNIT" => Section::Unit,
        "COMULT" => Section::Comult,
        "COUNIT" => Section::Counit,
        "ANTIPODE" => Section::Antipode,
        "ANTIPODE_INV" => Section::AntipodeInv,
        _ => return None,
    })
}

/// Serializes a presentation; [`read_hopf`] reads it back.
pub fn write_hopf(h: &HopfPresentation) -> String {
    let d = h.dim();
    let mut out = String::new();
    let name = h.name().replace(char::is_whitespace, "_");
    writeln!(out, "hopf v1 dim={d} conductor={} name={name}", h.conductor()).unwrap();
    let c = format_scalar_coeffs;
    out.push_str("LABELS\n");
    for (i, l) in h.labels().iter().enumerate() {
        writeln!(out, "{i} : {l}").unwrap();
    }
    out.push_str("MULT\n");
    for i in 0..d {
        for j in 0..d {
            for (k, x) in h.mul_basis(i, j).iter() {
                writeln!(out, "{i} {j} -> {k} : {}", c(x)).unwrap();
            }
        }
    }
    out.push_str("UNIT\n");
    for (k, x) in h.unit().iter() {
        writeln!(out, "-> {k} : {}", c(x)).unwrap();
    }
    out.push_str("COMULT\n");
    for i in 0..d {
        for (j, k, x) in h.comult_terms(i) {
            writeln!(out, "{i} -> {j} {k} : {}", c(x)).unwrap();
        }
    }
    out.push_str("COUNIT\n");
    for i in 0..d {
        let x = h.counit_basis(i);
        if !x.is_zero() {
            writeln!(out, "{i} : {}", c(x)).unwrap();
        }
    }
    for (title, f) in [("ANTIPODE", true), ("ANTIPODE_INV", false)] {
        out.push_str(title);
        out.push('\n');
        for i in 0..d {
            let col = if f { h.antipode_basis(i) } else { h.antipode_inv_basis(i) };
            for (k, x) in col.iter() {
                writeln!(out, "{i} -> {k} : {}", c(x)).unwrap();
            }
        }
    }
    out
}

fn indices(text: &str, count: usize, d: usize, line: usize) -> Result<Vec<usize>, HopfFileError> {
    let err = |msg: String| HopfFileError { line, msg };
    let parts: Vec<&str> = text.split_whitespace().collect();
    if parts.len() != count {
        return Err(err(format!("expected {count} indices, found `{}`", text.trim())));
    }
    parts
        .iter()
        .map(|p| {
            let i: usize = p.parse().map_err(|_| err(format!("bad index `{p}`")))?;
            if i >= d {
                return Err(err(format!("index {i} out of range (dim {d})")));
            }
            Ok(i)
        })
        .collect()
}

/// Parses the text format. The result is structurally checked but its
/// axioms are not; run [`super::verify_hopf`] before use.
pub fn read_hopf(text: &str) -> Result<HopfPresentation, HopfFileError> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(n, l)| (n + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));
    let (hline, header) = lines.next().ok_or(HopfFileError {
        line: 1,
        msg: "empty file".into(),
    })?;
    let herr = |msg: &str| HopfFileError {
        line: hline,
        msg: msg.to_string(),
    };
    let mut words = header.split_whitespace();
    if words.next() != Some("hopf") || words.next() != Some("v1") {
        return Err(herr("header must start with `hopf v1`"));
    }
    let (mut dim, mut conductor, mut name) = (None, None, "raw".to_string());
    for w in words {
        match w.split_once('=') {
            Some(("dim", v)) => dim = v.parse::<usize>().ok(),
            Some(("conductor", v)) => conductor = v.parse::<u32>().ok().filter(|n| *n >= 1),
            Some(("name", v)) => name = v.to_string(),
            _ => return Err(herr(&format!("unknown header field `{w}`"))),
        }
    }
    let d = dim.filter(|d| *d > 0).ok_or_else(|| herr("missing or invalid dim"))?;
    let n = conductor.ok_or_else(|| herr("missing or invalid conductor"))?;

    let mut labels: Vec<String> = (0..d).map(|i| format!("b{i}")).collect();
    let mut mult: Vec<Vec<(usize, Scalar)>> = vec![Vec::new(); d * d];
    let mut unit = Vec::new();
    let mut comult: Vec<Vec<(usize, usize, Scalar)>> = vec![Vec::new(); d];
    let mut counit = vec![Scalar::zero(n); d];
    let mut s = DenseMatrix::zeros(d, d, n);
    let mut sinv = DenseMatrix::zeros(d, d, n);
    let mut current = None;
    for (line, l) in lines {
        if let Some(sec) = section(l) {
            current = Some(sec);
            continue;
        }
        let err = |msg: String| HopfFileError { line, msg };
        let sec = current.ok_or_else(|| err("entry before any section".into()))?;
        let (lhs, rhs) = l.rsplit_once(':').ok_or_else(|| err("missing `:`".into()))?;
        if sec == Section::Labels {
            let i = indices(lhs, 1, d, line)?[0];
            labels[i] = rhs.trim().to_string();
            continue;
        }
        let x = parse_scalar(n, rhs.trim()).map_err(|e| err(format!("bad coefficient: {e}")))?;
        let (from, to) = match lhs.split_once("->") {
            Some((a, b)) => (a, b),
            None => (lhs, ""),
        };
        match sec {
            Section::Labels => unreachable!(),
            Section::Mult => {
                let ij = indices(from, 2, d, line)?;
                let k = indices(to, 1, d, line)?[0];
                mult[ij[0] * d + ij[1]].push((k, x));
            }
            Section::Unit => unit.push((indices(to, 1, d, line)?[0], x)),
            Section::Comult => {
                let i = indices(from, 1, d, line)?[0];
                let jk = indices(to, 2, d, line)?;
                comult[i].push((jk[0], jk[1], x));
            }
            Section::Counit => counit[indices(from, 1, d, line)?[0]] = x,
            Section::Antipode | Section::AntipodeInv => {
                let i = indices(from, 1, d, line)?[0];
                let k = indices(to, 1, d, line)?[0];
                let m = if sec == Section::Antipode { &mut s } else { &mut sinv };
                m[(k, i)] = x;
            }
        }
    }
    let data = HopfData {
        name,
        labels,
        conductor: n,
        mult: mult.into_iter().map(SparseVec::from_pairs).collect(),
        unit: SparseVec::from_pairs(unit),
        comult,
        counit,
        antipode: s,
        antipode_inv: sinv,
    };
    HopfPresentation::new(data).map_err(|e: HopfError| HopfFileError {
        line: 0,
        msg: e.to_string(),
    })
}
