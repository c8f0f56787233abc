use std::fmt;

use super::ZooError;

/// A finite group as a Cayley table.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GroupTable {
    name: String,
    labels: Vec<String>,
    mult: Vec<usize>,
    inverse: Vec<usize>,
    identity: usize,
}

impl GroupTable {
    /// Validates a Cayley table: closure, associativity, identity, inverses.
    pub fn from_table(name: impl Into<String>, table: Vec<Vec<usize>>, labels: Option<Vec<String>>) -> Result<Self, ZooError> {
        let n = table.len();
        let not_group = |msg: String| Err(ZooError::NotAGroup(msg));
        if n == 0 {
            return not_group("empty table".into());
        }
        if let Some((r, _)) = table.iter().enumerate().find(|(_, row)| row.len() != n) {
            return not_group(format!("row {r} has the wrong length"));
        }
        for (a, row) in table.iter().enumerate() {
            if let Some((b, c)) = row.iter().enumerate().find(|(_, c)| **c >= n) {
                return not_group(format!("product {a}*{b} = {c} is out of range"));
            }
        }
        let identity = match (0..n).find(|&e| (0..n).all(|g| table[e][g] == g && table[g][e] == g)) {
            Some(e) => e,
            None => return not_group("no identity element".into()),
        };
        let mut inverse = vec![0; n];
        for g in 0..n {
            match (0..n).find(|&h| table[g][h] == identity && table[h][g] == identity) {
                Some(h) => inverse[g] = h,
                None => return not_group(format!("element {g} has no inverse")),
            }
        }
        for a in 0..n {
            for b in 0..n {
                let ab = table[a][b];
                for c in 0..n {
                    if table[ab][c] != table[a][table[b][c]] {
                        return not_group(format!("associativity fails at triple ({a}, {b}, {c})"));
                    }
                }
            }
        }
        let labels = labels.unwrap_or_else(|| (0..n).map(|i| format!("g{i}")).collect());
        Ok(GroupTable {
            name: name.into(),
            labels,
            mult: table.into_iter().flatten().collect(),
            inverse,
            identity,
        })
    }

    /// Cayley-table file: the order N, then N rows of N indices. Element 0 must be the identity.
    pub fn from_cayley_text(name: &str, text: &str) -> Result<Self, ZooError> {
        let mut tokens = text
            .lines()
            .map(|l| l.split('#').next().unwrap_or(""))
            .flat_map(str::split_whitespace);
        let parse = |t: Option<&str>| -> Result<usize, ZooError> {
            let t = t.ok_or_else(|| ZooError::Parse("Cayley table ended early".into()))?;
            t.parse().map_err(|_| ZooError::Parse(format!("bad table entry {t:?}")))
        };
        let n = parse(tokens.next())?;
        let mut table = vec![vec![0; n]; n];
        for row in table.iter_mut() {
            for x in row.iter_mut() {
                *x = parse(tokens.next())?;
            }
        }
        if let Some(t) = tokens.next() {
            return Err(ZooError::Parse(format!("trailing data {t:?} after Cayley table")));
        }
        let g = Self::from_table(name, table, None)?;
        if g.identity != 0 {
            return Err(ZooError::NotAGroup(format!("element 0 is not the identity (element {} is)", g.identity)));
        }
        Ok(g)
    }

    pub fn cyclic(n: usize) -> Result<Self, ZooError> {
        if n == 0 {
            return Err(ZooError::Parse("cyclic group needs n ≥ 1".into()));
        }
        let table = (0..n).map(|a| (0..n).map(|b| (a + b) % n).collect()).collect();
        let labels = (0..n)
            .map(|k| match k {
                0 => "1".to_string(),
                1 => "g".to_string(),
                _ => format!("g^{k}"),
            })
            .collect();
        Self::from_table(format!("Z{n}"), table, Some(labels))
    }

    /// Dihedral group of order 2n, elements r^k s^j at index j·n + k.
    pub fn dihedral(n: usize) -> Result<Self, ZooError> {
        if n < 2 {
            return Err(ZooError::Parse("dihedral group needs n ≥ 2".into()));
        }
        let idx = |k: usize, j: usize| j * n + k;
        let mut table = vec![vec![0; 2 * n]; 2 * n];
        for j in 0..2 {
            for k in 0..n {
                for j2 in 0..2 {
                    for k2 in 0..n {
                        let kk = if j == 0 { k + k2 } else { k + n - k2 } % n;
                        table[idx(k, j)][idx(k2, j2)] = idx(kk, (j + j2) % 2);
                    }
                }
            }
        }
        let labels = (0..2 * n)
            .map(|i| {
                let (k, j) = (i % n, i / n);
                let r = match k {
                    0 => String::new(),
                    1 => "r".to_string(),
                    _ => format!("r^{k}"),
                };
                match (r.is_empty(), j) {
                    (true, 0) => "1".to_string(),
                    (true, _) => "s".to_string(),
                    (false, 0) => r,
                    (false, _) => format!("{r}s"),
                }
            })
            .collect();
        Self::from_table(format!("D{n}"), table, Some(labels))
    }

    /// Symmetric group on n ≤ 5 letters; permutations in lexicographic order,
    /// product (στ)(x) = σ(τ(x)).
    pub fn symmetric(n: usize) -> Result<Self, ZooError> {
        if n == 0 || n > 5 {
            return Err(ZooError::Parse("symmetric group supported for 1 ≤ n ≤ 5".into()));
        }
        let mut perms = vec![(0..n).collect::<Vec<usize>>()];
        loop {
            let mut p = perms.last().unwrap().clone();
            let Some(i) = (0..n.saturating_sub(1)).rev().find(|&i| p[i] < p[i + 1]) else { break };
            let j = (i + 1..n).rev().find(|&j| p[j] > p[i]).unwrap();
            p.swap(i, j);
            p[i + 1..].reverse();
            perms.push(p);
        }
        let index = |p: &[usize]| perms.iter().position(|q| q == p).unwrap();
        let table = perms
            .iter()
            .map(|s| {
                perms
                    .iter()
                    .map(|t| index(&t.iter().map(|&x| s[x]).collect::<Vec<_>>()))
                    .collect()
            })
            .collect();
        let labels = perms.iter().map(|p| cycle_notation(p)).collect();
        Self::from_table(format!("S{n}"), table, Some(labels))
    }

    pub fn direct_product(&self, other: &GroupTable) -> Result<Self, ZooError> {
        let (n1, n2) = (self.order(), other.order());
        let table = (0..n1 * n2)
            .map(|x| {
                (0..n1 * n2)
                    .map(|y| self.mul(x / n2, y / n2) * n2 + other.mul(x % n2, y % n2))
                    .collect()
            })
            .collect();
        let labels = (0..n1 * n2)
            .map(|x| format!("({},{})", self.labels[x / n2], other.labels[x % n2]))
            .collect();
        Self::from_table(format!("{}x{}", self.name, other.name), table, Some(labels))
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn order(&self) -> usize {
        self.inverse.len()
    }

    pub fn identity(&self) -> usize {
        self.identity
    }

    #[inline]
    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.mult[a * self.order() + b]
    }

    #[inline]
    pub fn inv(&self, a: usize) -> usize {
        self.inverse[a]
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn is_abelian(&self) -> bool {
        let n = self.order();
        (0..n).all(|a| (0..n).all(|b| self.mul(a, b) == self.mul(b, a)))
    }

    /// Rows of the Cayley table.
    pub fn table(&self) -> Vec<Vec<usize>> {
        self.mult.chunks(self.order()).map(<[usize]>::to_vec).collect()
    }
}

impl fmt::Display for GroupTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} (order {})", self.name, self.order())
    }
}

fn cycle_notation(p: &[usize]) -> String {
    let mut seen = vec![false; p.len()];
    let mut out = String::new();
    for s in 0..p.len() {
        if seen[s] || p[s] == s {
            continue;
        }
        let mut cyc = vec![s + 1];
        seen[s] = true;
        let mut x = p[s];
        while x != s {
            seen[x] = true;
            cyc.push(x + 1);
            x = p[x];
        }
        out.push('(');
        out.push_str(&cyc.iter().map(usize::to_string).collect::<Vec<_>>().join(" "));
        out.push(')');
    }
    if out.is_empty() {
        "()".into()
    } else {
        out
    }
}

/// Parses names like `cyclic(3)`, `Z6`, `Z/2`, `S3`, `symmetric(4)`, `D4`,
/// `dihedral(5)` and products `Z2xZ3`.
pub fn builtin_group(spec: &str) -> Result<GroupTable, ZooError> {
    let mut factors = Vec::new();
    let mut depth = 0usize;
    let mut start = 0;
    let s = spec.trim();
    for (i, ch) in s.char_indices() {
        match ch {
            '(' => depth += 1,
            ')' => depth = depth.saturating_sub(1),
            'x' | '×' | '*' if depth == 0 => {
                factors.push(&s[start..i]);
                start = i + ch.len_utf8();
            }
            _ => {}
        }
    }
    factors.push(&s[start..]);
    let mut groups = factors.into_iter().map(single_group);
    let mut g = groups.next().unwrap()?;
    for h in groups {
        g = g.direct_product(&h?)?;
    }
    Ok(g)
}

fn single_group(spec: &str) -> Result<GroupTable, ZooError> {
    let t = spec.trim();
    let bad = || ZooError::Parse(format!("unknown group {t:?}"));
    let num = |s: &str| s.trim().parse::<usize>().map_err(|_| bad());
    if let Some(rest) = t.strip_suffix(')') {
        let (head, arg) = rest.split_once('(').ok_or_else(bad)?;
        let n = num(arg)?;
        return match head.trim().to_ascii_lowercase().as_str() {
            "cyclic" | "z" | "c" => GroupTable::cyclic(n),
            "dihedral" | "d" => GroupTable::dihedral(n),
            "symmetric" | "s" => GroupTable::symmetric(n),
            _ => Err(bad()),
        };
    }
    let mut chars = t.chars();
    let head = chars.next().ok_or_else(bad)?;
    let rest = chars.as_str().trim_start_matches('/');
    let n = num(rest)?;
    match head {
        'Z' | 'z' | 'C' => GroupTable::cyclic(n),
        'D' => GroupTable::dihedral(n),
        'S' => GroupTable::symmetric(n),
        _ => Err(bad()),
    }
}
