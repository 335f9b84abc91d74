use std::fmt;

use super::RootDataError;

/// Subset of the node set `{0, .., 63}` as a bitmask.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct NodeSet(pub u64);

impl NodeSet {
    pub const EMPTY: Self = Self(0);

    pub fn full(n: usize) -> Self {
        Self(if n >= 64 { u64::MAX } else { (1u64 << n) - 1 })
    }

    pub fn single(i: usize) -> Self {
        Self(1 << i)
    }

    pub fn contains(self, i: usize) -> bool {
        self.0 >> i & 1 == 1
    }

    pub fn with(self, i: usize) -> Self {
        Self(self.0 | 1 << i)
    }

    pub fn without(self, i: usize) -> Self {
        Self(self.0 & !(1 << i))
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn union(self, other: Self) -> Self {
        Self(self.0 | other.0)
    }

    pub fn intersection(self, other: Self) -> Self {
        Self(self.0 & other.0)
    }

    pub fn minus(self, other: Self) -> Self {
        Self(self.0 & !other.0)
    }

    pub fn is_subset(self, other: Self) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn iter(self) -> impl Iterator<Item = usize> {
        (0..64).filter(move |&i| self.contains(i))
    }

    /// All subsets of `self`, in increasing bitmask order.
    pub fn subsets(self) -> impl Iterator<Item = NodeSet> {
        let full = self.0;
        let mut next = Some(0u64);
        std::iter::from_fn(move || {
            let cur = next?;
            next = if cur == full {
                None
            } else {
                Some((cur.wrapping_sub(full)) & full)
            };
            Some(NodeSet(cur))
        })
    }
}

impl FromIterator<usize> for NodeSet {
    fn from_iter<T: IntoIterator<Item = usize>>(iter: T) -> Self {
        iter.into_iter().fold(Self::EMPTY, |s, i| s.with(i))
    }
}

impl fmt::Debug for NodeSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

impl fmt::Display for NodeSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.iter().map(|i| i.to_string()).collect();
        write!(f, "{{{}}}", parts.join(","))
    }
}

/// A generalized Cartan matrix on nodes `0..n`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct CartanMatrix {
    a: Vec<Vec<i64>>,
}

impl CartanMatrix {
    pub fn new(a: Vec<Vec<i64>>) -> Result<Self, RootDataError> {
        let n = a.len();
        if n == 0 || n > 63 {
            return Err(RootDataError::Invalid(format!("size {n} outside 1..=63")));
        }
        for (i, row) in a.iter().enumerate() {
            if row.len() != n {
                return Err(RootDataError::Invalid(format!(
                    "row {i} has length {}",
                    row.len()
                )));
            }
            if row[i] != 2 {
                return Err(RootDataError::Invalid(format!(
                    "diagonal entry ({i},{i}) is {}",
                    row[i]
                )));
            }
            for (j, &v) in row.iter().enumerate() {
                if i == j {
                    continue;
                }
                if v > 0 {
                    return Err(RootDataError::Invalid(format!(
                        "entry ({i},{j}) = {v} is positive"
                    )));
                }
                if (v == 0) != (a[j][i] == 0) {
                    return Err(RootDataError::Invalid(format!(
                        "entries ({i},{j}) and ({j},{i}) are not both zero or both nonzero"
                    )));
                }
            }
        }
        Ok(Self { a })
    }

    /// Parses a JSON integer matrix such as `[[2,-1],[-1,2]]`.
    pub fn from_json(text: &str) -> Result<Self, RootDataError> {
        let a: Vec<Vec<i64>> =
            serde_json::from_str(text).map_err(|e| RootDataError::Invalid(e.to_string()))?;
        Self::new(a)
    }

    /// Spherical Cartan matrix of type `A_n`.
    pub fn finite_a(n: usize) -> Result<Self, RootDataError> {
        if n == 0 {
            return Err(RootDataError::Invalid("A_0 is empty".into()));
        }
        let a = (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| match i.abs_diff(j) {
                        0 => 2,
                        1 => -1,
                        _ => 0,
                    })
                    .collect()
            })
            .collect();
        Self::new(a)
    }

    /// Named presets `"A~n"` (for `n >= 2`) and `"G~2"`.
    pub fn preset(name: &str) -> Result<Self, RootDataError> {
        if name == "G~2" {
            return Self::new(vec![vec![2, -1, 0], vec![-1, 2, -1], vec![0, -3, 2]]);
        }
        if let Some(n) = name
            .strip_prefix("A~")
            .and_then(|s| s.parse::<usize>().ok())
        {
            if n >= 2 {
                return Ok(super::affinize(&Self::finite_a(n)?)?.affine);
            }
        }
        Err(RootDataError::UnknownPreset(name.to_string()))
    }

    pub fn size(&self) -> usize {
        self.a.len()
    }

    pub fn get(&self, i: usize, j: usize) -> i64 {
        self.a[i][j]
    }

    pub fn rows(&self) -> &[Vec<i64>] {
        &self.a
    }

    pub fn nodes(&self) -> NodeSet {
        NodeSet::full(self.size())
    }

    /// Principal submatrix on `nodes`, in increasing node order.
    pub fn submatrix(&self, nodes: NodeSet) -> Vec<Vec<i64>> {
        let idx: Vec<usize> = nodes.iter().collect();
        idx.iter()
            .map(|&i| idx.iter().map(|&j| self.a[i][j]).collect())
            .collect()
    }

    /// Whether the principal submatrix on `nodes` is of finite type, i.e. all
    /// of its principal minors are positive.
    pub fn is_finite_type(&self, nodes: NodeSet) -> bool {
        nodes
            .subsets()
            .filter(|s| !s.is_empty())
            .all(|s| determinant(&self.submatrix(s)) > 0)
    }

    /// Proper subsets `J` of the node set whose submatrix has finite type.
    pub fn spherical_subsets(&self) -> Vec<NodeSet> {
        let all = self.nodes();
        all.subsets()
            .filter(|&s| s != all && self.is_finite_type(s))
            .collect()
    }

    /// Every subset of size `k` is spherical.
    pub fn is_k_spherical(&self, k: usize) -> bool {
        self.nodes()
            .subsets()
            .filter(|s| s.len() == k)
            .all(|s| self.is_finite_type(s))
    }

    /// Every spherical subset lies in a spherical subset of size `k`.
    pub fn is_purely_k_spherical(&self, k: usize) -> bool {
        let all = self.nodes();
        let maximal: Vec<NodeSet> = all
            .subsets()
            .filter(|s| s.len() == k && self.is_finite_type(*s))
            .collect();
        all.subsets()
            .filter(|&s| self.is_finite_type(s))
            .all(|s| maximal.iter().any(|m| s.is_subset(*m)))
    }
}

/// Exact determinant by fraction-free Gaussian elimination.
pub(crate) fn determinant(m: &[Vec<i64>]) -> i128 {
    let n = m.len();
    if n == 0 {
        return 1;
    }
    let mut a: Vec<Vec<i128>> = m
        .iter()
        .map(|r| r.iter().map(|&v| v as i128).collect())
        .collect();
    let mut sign = 1;
    let mut prev = 1i128;
    for k in 0..n - 1 {
        if a[k][k] == 0 {
            match (k + 1..n).find(|&r| a[r][k] != 0) {
                Some(r) => {
                    a.swap(k, r);
                    sign = -sign;
                }
                None => return 0,
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
            }
        }
        prev = a[k][k];
    }
    sign * a[n - 1][n - 1]
}
