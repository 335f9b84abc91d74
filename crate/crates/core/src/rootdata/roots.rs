use std::collections::HashSet;

use super::{CartanMatrix, NodeSet, Rank2Type, RootDataError};

/// Coefficients of a root over the simple roots of a subsystem.
pub type Root = Vec<i64>;

fn height(r: &[i64]) -> i64 {
    r.iter().sum()
}

/// Height first, then the larger coefficient vector first.
fn sort_roots(roots: &mut [Root]) {
    roots.sort_by(|a, b| height(a).cmp(&height(b)).then_with(|| b.cmp(a)));
}

/// Positive roots of a rank-2 type over `(a, b)`, with `a` short.
pub fn positive_roots(ty: Rank2Type) -> Vec<Root> {
    let coeffs: &[[i64; 2]] = match ty {
        Rank2Type::A1xA1 => &[[1, 0], [0, 1]],
        Rank2Type::A2 => &[[1, 0], [0, 1], [1, 1]],
        Rank2Type::B2 => &[[1, 0], [0, 1], [1, 1], [2, 1]],
        Rank2Type::G2 => &[[1, 0], [0, 1], [1, 1], [2, 1], [3, 1], [3, 2]],
    };
    coeffs.iter().map(|c| c.to_vec()).collect()
}

/// Positive roots of the finite-type subsystem on `nodes`, by root strings:
/// for a positive root `beta` and simple `alpha_i`, the `alpha_i`-string
/// `beta - r alpha_i, .., beta + s alpha_i` satisfies `r - s = <beta, alpha_i^vee>`.
pub fn positive_roots_of(gcm: &CartanMatrix, nodes: NodeSet) -> Result<Vec<Root>, RootDataError> {
    if !gcm.is_finite_type(nodes) {
        return Err(RootDataError::Unsupported(format!(
            "subsystem on {nodes} is not of finite type"
        )));
    }
    let a = gcm.submatrix(nodes);
    let n = a.len();
    let simple: Vec<Root> = (0..n)
        .map(|i| (0..n).map(|j| i64::from(i == j)).collect())
        .collect();
    let mut known: HashSet<Root> = simple.iter().cloned().collect();
    let mut layer = simple.clone();
    while !layer.is_empty() {
        let mut next = Vec::new();
        for beta in &layer {
            for i in 0..n {
                let pairing: i64 = (0..n).map(|j| beta[j] * a[i][j]).sum();
                let mut r = 0;
                let mut probe = beta.clone();
                loop {
                    probe[i] -= 1;
                    if known.contains(&probe) {
                        r += 1;
                    } else {
                        break;
                    }
                }
                if r - pairing > 0 {
                    let mut up = beta.clone();
                    up[i] += 1;
                    if known.insert(up.clone()) {
                        next.push(up);
                    }
                }
            }
        }
        layer = next;
    }
    let mut roots: Vec<Root> = known.into_iter().collect();
    sort_roots(&mut roots);
    Ok(roots)
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Oracle: closure of the simple roots under the simple reflections.
    fn reflection_closure(a: &[Vec<i64>]) -> usize {
        let n = a.len();
        let mut seen: HashSet<Root> = HashSet::new();
        let mut stack: Vec<Root> = (0..n)
            .map(|i| (0..n).map(|j| i64::from(i == j)).collect())
            .collect();
        while let Some(r) = stack.pop() {
            if !seen.insert(r.clone()) {
                continue;
            }
            for i in 0..n {
                let pairing: i64 = (0..n).map(|j| r[j] * a[i][j]).sum();
                let mut s = r.clone();
                s[i] -= pairing;
                if !seen.contains(&s) {
                    stack.push(s);
                }
            }
        }
        seen.iter().filter(|r| r.iter().all(|&c| c >= 0)).count()
    }

    #[test]
    fn rank2_counts_match_closure() {
        let cases = [
            (vec![vec![2, 0], vec![0, 2]], Rank2Type::A1xA1),
            (vec![vec![2, -1], vec![-1, 2]], Rank2Type::A2),
            (vec![vec![2, -1], vec![-2, 2]], Rank2Type::B2),
            (vec![vec![2, -1], vec![-3, 2]], Rank2Type::G2),
        ];
        for (a, ty) in cases {
            let gcm = CartanMatrix::new(a.clone()).unwrap();
            let roots = positive_roots_of(&gcm, gcm.nodes()).unwrap();
            assert_eq!(roots.len(), reflection_closure(&a), "{ty}");
            assert_eq!(roots.len(), ty.num_positive_roots());
        }
    }

    #[test]
    fn oriented_rank2_lists() {
        // node 0 short: A[0][1] = -3
        let g2 = CartanMatrix::new(vec![vec![2, -3], vec![-1, 2]]).unwrap();
        assert_eq!(
            positive_roots_of(&g2, g2.nodes()).unwrap(),
            positive_roots(Rank2Type::G2)
        );
        let b2 = CartanMatrix::new(vec![vec![2, -2], vec![-1, 2]]).unwrap();
        assert_eq!(
            positive_roots_of(&b2, b2.nodes()).unwrap(),
            positive_roots(Rank2Type::B2)
        );
        let a2 = CartanMatrix::finite_a(2).unwrap();
        assert_eq!(
            positive_roots_of(&a2, a2.nodes()).unwrap(),
            positive_roots(Rank2Type::A2)
        );
    }

    #[test]
    fn spherical_subsets_of_affine_types() {
        for name in ["A~2", "A~3", "A~4", "G~2"] {
            let gcm = CartanMatrix::preset(name).unwrap();
            for j in gcm.spherical_subsets() {
                let roots = positive_roots_of(&gcm, j).unwrap();
                assert_eq!(
                    roots.len(),
                    reflection_closure(&gcm.submatrix(j)),
                    "{name} {j}"
                );
            }
        }
    }

    #[test]
    fn type_a_counts() {
        for n in 1..=6 {
            let a = CartanMatrix::finite_a(n).unwrap();
            assert_eq!(
                positive_roots_of(&a, a.nodes()).unwrap().len(),
                n * (n + 1) / 2
            );
        }
    }

    #[test]
    fn rejects_infinite_type() {
        let a = CartanMatrix::preset("A~2").unwrap();
        assert!(positive_roots_of(&a, a.nodes()).is_err());
    }
}
