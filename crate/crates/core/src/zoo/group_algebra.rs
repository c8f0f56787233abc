use super::{tensor2, ExpectedData, GroupTable, ZooError};
use crate::hopf::{HopfData, HopfPresentation, SparseVec};
use crate::scalar::{DenseMatrix, Scalar};

fn basis(i: usize) -> SparseVec {
    SparseVec::basis(i, 1)
}

/// kG with Δ(g) = g⊗g, ε(g) = 1, S(g) = g⁻¹.
pub fn group_algebra(g: &GroupTable) -> Result<(HopfPresentation, ExpectedData), ZooError> {
    let n = g.order();
    let one = Scalar::int(1);
    let mut mult = Vec::with_capacity(n * n);
    for a in 0..n {
        for b in 0..n {
            mult.push(basis(g.mul(a, b)));
        }
    }
    let mut s = DenseMatrix::zeros(n, n, 1);
    for a in 0..n {
        s[(g.inv(a), a)] = one.clone();
    }
    let h = HopfPresentation::new(HopfData {
        name: format!("k{}", g.name()),
        labels: g.labels().to_vec(),
        conductor: 1,
        mult,
        unit: basis(g.identity()),
        comult: (0..n).map(|a| vec![(a, a, one.clone())]).collect(),
        counit: vec![one.clone(); n],
        antipode: s.clone(),
        antipode_inv: s,
    })?;

    let e = g.identity();
    let delta = |x: bool| Scalar::int(x as i64);
    let expected = ExpectedData {
        lambda: Some((0..n).map(|a| delta(a == e)).collect()),
        lambda_right: Some((0..n).map(|a| delta(a == e)).collect()),
        big_lambda: Some((0..n).map(|a| (a, one.clone())).collect()),
        ev: Some((0..n * n).map(|ab| delta(g.mul(ab / n, ab % n) == e)).collect()),
        coev: Some((0..n).map(|a| (a * n + g.inv(a), one.clone())).collect()),
        braid: (0..n * n)
            .map(|ab| {
                let (a, b) = (ab / n, ab % n);
                let conj = g.mul(g.mul(a, b), g.inv(a));
                (basis(ab), basis(conj * n + a))
            })
            .collect(),
        cosemisimple: Some(true),
        ..Default::default()
    };
    Ok((h, expected))
}

/// D(kG) on the basis a⊗e_g, stored at index a·|G| + g.
pub fn quantum_double(g: &GroupTable) -> Result<(HopfPresentation, ExpectedData), ZooError> {
    let n = g.order();
    let d = n * n;
    let idx = |a: usize, x: usize| a * n + x;
    let one = Scalar::int(1);
    let conj = |b: usize, h: usize| g.mul(g.mul(b, h), g.inv(b));
    let labels: Vec<String> = (0..d)
        .map(|i| format!("{}⊗e[{}]", g.labels()[i / n], g.labels()[i % n]))
        .collect();

    let mut mult = Vec::with_capacity(d * d);
    for i in 0..d {
        let (a, x) = (i / n, i % n);
        for j in 0..d {
            let (b, h) = (j / n, j % n);
            mult.push(if x == conj(b, h) { basis(idx(g.mul(a, b), h)) } else { SparseVec::new() });
        }
    }
    let e = g.identity();
    let unit: SparseVec = (0..n).map(|x| (idx(e, x), one.clone())).collect();
    let comult = (0..d)
        .map(|i| {
            let (a, x) = (i / n, i % n);
            (0..n)
                .map(|h| (idx(a, h), idx(a, g.mul(g.inv(h), x)), one.clone()))
                .collect()
        })
        .collect();
    let counit = (0..d).map(|i| Scalar::int((i % n == e) as i64)).collect();
    let mut s = DenseMatrix::zeros(d, d, 1);
    for i in 0..d {
        let (a, x) = (i / n, i % n);
        s[(idx(g.inv(a), g.mul(g.mul(a, g.inv(x)), g.inv(a))), i)] = one.clone();
    }
    let s_inv = s.inverse().expect("antipode of D(kG) is a permutation");
    let h = HopfPresentation::new(HopfData {
        name: format!("D(k{})", g.name()),
        labels,
        conductor: 1,
        mult,
        unit,
        comult,
        counit,
        antipode: s,
        antipode_inv: s_inv,
    })?;

    // integrals rescaled to |G|⁻¹λ and |G|Λ so that λ(1) = 1
    let order = Scalar::int(n as i64);
    let inv_order = Scalar::frac(1, n as i64);
    let lambda: Vec<Scalar> = (0..d)
        .map(|i| if i / n == e { inv_order.clone() } else { Scalar::int(0) })
        .collect();
    let big_lambda: SparseVec = (0..n).map(|a| (idx(a, e), order.clone())).collect();
    // ev((a⊗e_g)⊗(b⊗e_h)) = δ_{1,ab} δ_{g,bhb⁻¹} / |G|
    let ev = (0..d * d)
        .map(|ij| {
            let (i, j) = (ij / d, ij % d);
            let (a, x, b, h) = (i / n, i % n, j / n, j % n);
            if g.mul(a, b) == e && x == conj(b, h) {
                inv_order.clone()
            } else {
                Scalar::int(0)
            }
        })
        .collect();
    let coev: SparseVec = (0..d)
        .map(|i| {
            let (a, x) = (i / n, i % n);
            (i * d + idx(g.inv(a), conj(a, x)), order.clone())
        })
        .collect();
    let braid = (0..d * d)
        .map(|ij| {
            let (i, j) = (ij / d, ij % d);
            let (a, x, b, h) = (i / n, i % n, j / n, j % n);
            let left = idx(conj(a, b), conj(a, h));
            let hbh = g.mul(g.mul(g.mul(h, b), g.inv(h)), g.inv(b));
            let right = idx(a, g.mul(hbh, x));
            (basis(ij), tensor2(&basis(left), &basis(right), d))
        })
        .collect();
    let expected = ExpectedData {
        lambda: Some(lambda),
        big_lambda: Some(big_lambda),
        ev: Some(ev),
        coev: Some(coev),
        braid,
        cosemisimple: Some(true),
        ..Default::default()
    };
    Ok((h, expected))
}
