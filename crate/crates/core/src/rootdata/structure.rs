use std::collections::HashMap;

use super::{positive_roots, Rank2Type, Root};

/// One factor `u_root(c * s^i * t^j)` of the commutator `[u_A(s), u_B(t)]`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CommTerm {
    pub root: usize,
    pub i: u32,
    pub j: u32,
    pub c: i64,
}

type RawTerm = ([i64; 2], u32, u32, i64);
type RawEntry = ([i64; 2], [i64; 2], &'static [RawTerm]);

const A2: &[RawEntry] = &[
    ([1, 0], [0, 1], &[([1, 1], 1, 1, 1)]),
    ([0, 1], [1, 0], &[([1, 1], 1, 1, -1)]),
];

const B2: &[RawEntry] = &[
    ([1, 0], [0, 1], &[([1, 1], 1, 1, 1), ([2, 1], 2, 1, -1)]),
    ([1, 0], [1, 1], &[([2, 1], 1, 1, 2)]),
    ([0, 1], [1, 0], &[([1, 1], 1, 1, -1), ([2, 1], 1, 2, 1)]),
    ([1, 1], [1, 0], &[([2, 1], 1, 1, -2)]),
];

const G2: &[RawEntry] = &[
    (
        [1, 0],
        [0, 1],
        &[
            ([1, 1], 1, 1, 1),
            ([2, 1], 2, 1, -1),
            ([3, 1], 3, 1, 1),
            ([3, 2], 3, 2, -2),
        ],
    ),
    (
        [1, 0],
        [1, 1],
        &[([2, 1], 1, 1, 2), ([3, 1], 2, 1, -3), ([3, 2], 1, 2, 3)],
    ),
    ([1, 0], [2, 1], &[([3, 1], 1, 1, 3)]),
    (
        [0, 1],
        [1, 0],
        &[
            ([1, 1], 1, 1, -1),
            ([2, 1], 1, 2, 1),
            ([3, 1], 1, 3, -1),
            ([3, 2], 2, 3, -1),
        ],
    ),
    ([0, 1], [3, 1], &[([3, 2], 1, 1, 1)]),
    (
        [1, 1],
        [1, 0],
        &[([2, 1], 1, 1, -2), ([3, 1], 1, 2, 3), ([3, 2], 2, 1, -3)],
    ),
    ([1, 1], [2, 1], &[([3, 2], 1, 1, -3)]),
    ([2, 1], [1, 0], &[([3, 1], 1, 1, -3)]),
    ([2, 1], [1, 1], &[([3, 2], 1, 1, 3)]),
    ([3, 1], [0, 1], &[([3, 2], 1, 1, -1)]),
];

/// Commutator expansions `[u_A(s), u_B(t)] = prod u_G(C s^i t^j)` for every
/// ordered pair of positive roots of a rank-2 type, with `[x, y] = x^-1 y^-1 x y`.
///
/// Root vectors follow `e_{a+b} = [e_a, e_b]`, `e_{2a+b} = [e_a, e_{a+b}]/2`,
/// `e_{3a+b} = [e_a, e_{2a+b}]/3`, `e_{3a+2b} = [e_b, e_{3a+b}]`, so all
/// extraspecial signs are `+1`. Factors of each expansion are listed in root
/// order; pairs not in the table commute.
#[derive(Debug, Clone)]
pub struct StructureConstantTable {
    ty: Rank2Type,
    roots: Vec<Root>,
    entries: HashMap<(usize, usize), Vec<CommTerm>>,
}

impl StructureConstantTable {
    pub fn new(ty: Rank2Type) -> Self {
        let roots = positive_roots(ty);
        let index = |r: [i64; 2]| {
            roots
                .iter()
                .position(|x| x[..] == r[..])
                .expect("table roots are positive roots")
        };
        let raw: &[RawEntry] = match ty {
            Rank2Type::A1xA1 => &[],
            Rank2Type::A2 => A2,
            Rank2Type::B2 => B2,
            Rank2Type::G2 => G2,
        };
        let entries = raw
            .iter()
            .map(|&(a, b, terms)| {
                let terms = terms
                    .iter()
                    .map(|&(g, i, j, c)| CommTerm {
                        root: index(g),
                        i,
                        j,
                        c,
                    })
                    .collect();
                ((index(a), index(b)), terms)
            })
            .collect();
        Self { ty, roots, entries }
    }

    pub fn rank2_type(&self) -> Rank2Type {
        self.ty
    }

    pub fn roots(&self) -> &[Root] {
        &self.roots
    }

    /// Expansion of `[u_{roots[a]}(s), u_{roots[b]}(t)]`; empty when they commute.
    pub fn commutator(&self, a: usize, b: usize) -> &[CommTerm] {
        self.entries.get(&(a, b)).map_or(&[], Vec::as_slice)
    }
}
