use rustc_hash::FxHashMap;

use crate::scalar::Scalar;

/// Sparse vector over a basis, sorted by index, zero coefficients never stored.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash)]
pub struct SparseVec {
    entries: Vec<(usize, Scalar)>,
}

impl SparseVec {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn basis(i: usize, conductor: u32) -> Self {
        SparseVec {
            entries: vec![(i, Scalar::one(conductor))],
        }
    }

    /// Builds from arbitrary (index, coefficient) pairs, merging duplicates.
    pub fn from_pairs(pairs: impl IntoIterator<Item = (usize, Scalar)>) -> Self {
        let mut acc = Accumulator::new();
        for (i, c) in pairs {
            acc.add(i, &c);
        }
        acc.finish()
    }

    pub fn from_dense(v: &[Scalar]) -> Self {
        SparseVec {
            entries: v
                .iter()
                .enumerate()
                .filter(|(_, c)| !c.is_zero())
                .map(|(i, c)| (i, c.clone()))
                .collect(),
        }
    }

    pub fn to_dense(&self, dim: usize, conductor: u32) -> Vec<Scalar> {
        let mut v = vec![Scalar::zero(conductor); dim];
        for (i, c) in &self.entries {
            v[*i] = c.clone();
        }
        v
    }

    pub fn iter(&self) -> impl Iterator<Item = &(usize, Scalar)> {
        self.entries.iter()
    }

    pub fn entries(&self) -> &[(usize, Scalar)] {
        &self.entries
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn get(&self, i: usize) -> Option<&Scalar> {
        self.entries
            .binary_search_by_key(&i, |(k, _)| *k)
            .ok()
            .map(|p| &self.entries[p].1)
    }

    pub fn scale(&self, c: &Scalar) -> SparseVec {
        if c.is_zero() {
            return SparseVec::new();
        }
        SparseVec {
            entries: self.entries.iter().map(|(i, v)| (*i, v * c)).collect(),
        }
    }

    pub fn add(&self, other: &SparseVec) -> SparseVec {
        let mut acc = Accumulator::new();
        acc.add_vec(self, None);
        acc.add_vec(other, None);
        acc.finish()
    }

    pub fn sub(&self, other: &SparseVec) -> SparseVec {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> SparseVec {
        SparseVec {
            entries: self.entries.iter().map(|(i, v)| (*i, -v)).collect(),
        }
    }

    /// If `self = c · other` for some scalar c, returns c. Both zero gives 0.
    pub fn ratio_to(&self, other: &SparseVec) -> Option<Scalar> {
        if self.len() != other.len() {
            return None;
        }
        let Some(((i0, a0), (j0, b0))) = self.entries.first().zip(other.entries.first()) else {
            return Some(Scalar::int(0));
        };
        if i0 != j0 {
            return None;
        }
        let c = a0 / b0;
        let ok = self
            .entries
            .iter()
            .zip(&other.entries)
            .all(|((i, a), (j, b))| i == j && *a == b * &c);
        ok.then_some(c)
    }

    pub fn map_indices(&self, f: impl Fn(usize) -> usize) -> SparseVec {
        SparseVec::from_pairs(self.entries.iter().map(|(i, c)| (f(*i), c.clone())))
    }
}

impl FromIterator<(usize, Scalar)> for SparseVec {
    fn from_iter<T: IntoIterator<Item = (usize, Scalar)>>(iter: T) -> Self {
        Self::from_pairs(iter)
    }
}

/// Hash-map accumulator for building sparse vectors term by term.
#[derive(Debug, Default)]
pub struct Accumulator {
    map: FxHashMap<usize, Scalar>,
}

impl Accumulator {
    pub fn new() -> Self {
        Self::default()
    }

    #[inline]
    pub fn add(&mut self, i: usize, c: &Scalar) {
        if c.is_zero() {
            return;
        }
        match self.map.get_mut(&i) {
            Some(v) => *v += c,
            None => {
                self.map.insert(i, c.clone());
            }
        }
    }

    #[inline]
    pub fn add_product(&mut self, i: usize, a: &Scalar, b: &Scalar) {
        if a.is_zero() || b.is_zero() {
            return;
        }
        let p = a * b;
        self.add(i, &p);
    }

    /// Adds `coeff · v` (or `v` when `coeff` is `None`).
    pub fn add_vec(&mut self, v: &SparseVec, coeff: Option<&Scalar>) {
        for (i, c) in v.iter() {
            match coeff {
                Some(k) => self.add_product(*i, c, k),
                None => self.add(*i, c),
            }
        }
    }

    pub fn finish(self) -> SparseVec {
        let mut entries: Vec<(usize, Scalar)> =
            self.map.into_iter().filter(|(_, c)| !c.is_zero()).collect();
        entries.sort_unstable_by_key(|(i, _)| *i);
        SparseVec { entries }
    }
}
