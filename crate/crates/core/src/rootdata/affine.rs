use super::{classify_pair, positive_roots_of, CartanMatrix, Rank2Type, Root, RootDataError};

/// Untwisted affinization of a spherical type `A_n` matrix, with the new
/// node `0` carrying `alpha_0 = delta - gamma`.
#[derive(Debug, Clone)]
pub struct AffinizationData {
    pub spherical: CartanMatrix,
    pub highest_root: Root,
    pub affine: CartanMatrix,
}

impl AffinizationData {
    /// Rank-2 types of all pairs `{i, j}`, `i < j`, of the affine matrix.
    pub fn pair_types(&self) -> Vec<((usize, usize), Rank2Type)> {
        let n = self.affine.size();
        let mut out = Vec::new();
        for i in 0..n {
            for j in i + 1..n {
                let ty = classify_pair(&self.affine, i, j).expect("affine A_n is 2-spherical");
                out.push(((i, j), ty));
            }
        }
        out
    }
}

fn is_type_a(m: &CartanMatrix) -> bool {
    let n = m.size();
    let mut degree = vec![0; n];
    let mut edges = 0;
    for i in 0..n {
        for j in i + 1..n {
            match (m.get(i, j), m.get(j, i)) {
                (0, 0) => {}
                (-1, -1) => {
                    degree[i] += 1;
                    degree[j] += 1;
                    edges += 1;
                }
                _ => return false,
            }
        }
    }
    // a path: a tree with maximal degree 2
    edges + 1 == n && degree.iter().all(|&d| d <= 2) && m.is_finite_type(m.nodes())
}

pub fn affinize(spherical: &CartanMatrix) -> Result<AffinizationData, RootDataError> {
    let n = spherical.size();
    if n < 2 || !is_type_a(spherical) {
        return Err(RootDataError::Unsupported(
            "affinization is implemented for spherical type A_n with n >= 2".into(),
        ));
    }
    let roots = positive_roots_of(spherical, spherical.nodes())?;
    let highest_root = roots
        .iter()
        .max_by_key(|r| r.iter().sum::<i64>())
        .expect("nonempty root system")
        .clone();
    let mut a = vec![vec![0i64; n + 1]; n + 1];
    for i in 0..n {
        for j in 0..n {
            a[i + 1][j + 1] = spherical.get(i, j);
        }
    }
    a[0][0] = 2;
    // <gamma^vee, alpha_j> and <alpha_j^vee, gamma>; type A is simply laced
    for j in 0..n {
        let pairing: i64 = (0..n).map(|i| highest_root[i] * spherical.get(i, j)).sum();
        a[0][j + 1] = -pairing;
        a[j + 1][0] = -pairing;
    }
    let affine = CartanMatrix::new(a)?;
    Ok(AffinizationData {
        spherical: spherical.clone(),
        highest_root,
        affine,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn a2_cycle() {
        let data = affinize(&CartanMatrix::finite_a(2).unwrap()).unwrap();
        assert_eq!(data.highest_root, vec![1, 1]);
        assert_eq!(
            data.affine.rows(),
            &[vec![2, -1, -1], vec![-1, 2, -1], vec![-1, -1, 2]]
        );
        assert!(data.pair_types().iter().all(|(_, t)| *t == Rank2Type::A2));
    }

    #[test]
    fn a3_cycle() {
        let data = affinize(&CartanMatrix::finite_a(3).unwrap()).unwrap();
        assert_eq!(data.highest_root, vec![1, 1, 1]);
        for ((i, j), ty) in data.pair_types() {
            let adjacent = (j - i) % 4 == 1 || (i == 0 && j == 3);
            let expected = if adjacent {
                Rank2Type::A2
            } else {
                Rank2Type::A1xA1
            };
            assert_eq!(ty, expected, "pair {i},{j}");
        }
    }

    #[test]
    fn rejects_other_types() {
        let b2 = CartanMatrix::new(vec![vec![2, -1], vec![-2, 2]]).unwrap();
        assert!(matches!(affinize(&b2), Err(RootDataError::Unsupported(_))));
        let a1 = CartanMatrix::finite_a(1).unwrap();
        assert!(affinize(&a1).is_err());
    }
}
