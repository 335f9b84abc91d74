use std::collections::{HashMap, HashSet, VecDeque};

use hdx_core::algebra::{enumerate_monic, is_irreducible, BaseField, Elem, Field, Poly};
use hdx_core::complex::WeightedGraph;
use hdx_core::groups::{FiniteGroup, GroupElement, UnipotentGroup};
use hdx_core::rootdata::Rank2Type;
use hdx_core::spectra::{rank2_link, spectrum};
use proptest::prelude::*;

const SMALL_FIELDS: [(u64, usize); 14] = [
    (2, 1),
    (3, 1),
    (2, 2),
    (5, 1),
    (7, 1),
    (2, 3),
    (3, 2),
    (11, 1),
    (13, 1),
    (2, 4),
    (17, 1),
    (19, 1),
    (23, 1),
    (5, 2),
];

#[test]
fn field_axioms_exhaustive() {
    for (p, m) in SMALL_FIELDS {
        let k = BaseField::with_default_modulus(p, m).unwrap();
        let q = k.order();
        assert_eq!(q, p.pow(m as u32));
        for a in k.elements() {
            assert_eq!(k.add(a, 0), a);
            assert_eq!(k.mul(a, 1), a);
            assert_eq!(k.add(a, k.neg(a)), 0);
            if a != 0 {
                assert_eq!(k.mul(a, k.inv(a).unwrap()), 1, "q={q} a={a}");
            }
            for b in k.elements() {
                assert_eq!(k.add(a, b), k.add(b, a));
                assert_eq!(k.mul(a, b), k.mul(b, a));
                assert!(k.mul(a, b) < q);
                for c in k.elements() {
                    assert_eq!(k.add(k.add(a, b), c), k.add(a, k.add(b, c)));
                    assert_eq!(k.mul(k.mul(a, b), c), k.mul(a, k.mul(b, c)));
                    assert_eq!(k.mul(a, k.add(b, c)), k.add(k.mul(a, b), k.mul(a, c)));
                }
            }
        }
        assert!(k.inv(0).is_err());
    }
}

/// Monic polynomials of degree `n` that are products of two monic factors
/// of positive degree.
fn reducible_set(k: &BaseField, n: usize) -> HashSet<Poly> {
    let mut out = HashSet::new();
    for d in 1..=n / 2 {
        let left: Vec<Poly> = enumerate_monic(k, d).collect();
        let right: Vec<Poly> = enumerate_monic(k, n - d).collect();
        for a in &left {
            for b in &right {
                out.insert(a.mul(b, k));
            }
        }
    }
    out
}

#[test]
fn irreducibility_matches_product_sets() {
    for (p, m) in [(2, 1), (3, 1), (2, 2), (5, 1)] {
        let k = BaseField::with_default_modulus(p, m).unwrap();
        for n in 1..=4 {
            let reducible = reducible_set(&k, n);
            for g in enumerate_monic(&k, n) {
                assert_eq!(
                    is_irreducible(&g, &k).unwrap(),
                    !reducible.contains(&g),
                    "{g}"
                );
            }
        }
    }
}

fn mobius(n: u64) -> i64 {
    let (mut n, mut r, mut d) = (n, 1, 2);
    while d * d <= n {
        if n % d == 0 {
            n /= d;
            if n % d == 0 {
                return 0;
            }
            r = -r;
        }
        d += 1;
    }
    if n > 1 {
        -r
    } else {
        r
    }
}

#[test]
fn irreducible_counts_follow_necklace_formula() {
    for (p, m) in [(2, 1), (3, 1), (2, 2), (5, 1)] {
        let k = BaseField::with_default_modulus(p, m).unwrap();
        let q = k.order() as i64;
        for n in 1..=4u64 {
            let expected: i64 = (1..=n)
                .filter(|d| n % d == 0)
                .map(|d| mobius(d) * q.pow((n / d) as u32))
                .sum::<i64>()
                / n as i64;
            let count = enumerate_monic(&k, n as usize)
                .filter(|g| is_irreducible(g, &k).unwrap())
                .count() as i64;
            assert_eq!(count, expected, "q={q} n={n}");
        }
    }
}

type Mat = Vec<Vec<u64>>;

fn mat_mul(a: &Mat, b: &Mat, p: u64) -> Mat {
    let n = a.len();
    (0..n)
        .map(|i| {
            (0..n)
                .map(|j| (0..n).map(|l| a[i][l] * b[l][j]).sum::<u64>() % p)
                .collect()
        })
        .collect()
}

fn identity(n: usize) -> Mat {
    (0..n)
        .map(|i| (0..n).map(|j| u64::from(i == j)).collect())
        .collect()
}

/// `u_a(1)` and `u_b(1)` in `SL_3` (A2) or `Sp_4` (B2, `a` short).
fn matrix_generators(ty: Rank2Type, p: u64) -> [Mat; 2] {
    let n = if ty == Rank2Type::A2 { 3 } else { 4 };
    let mut a = identity(n);
    let mut b = identity(n);
    a[0][1] = 1;
    b[1][2] = 1;
    if ty == Rank2Type::B2 {
        a[2][3] = p - 1;
    }
    [a, b]
}

/// Pairs every normal form with a matrix by a joint breadth-first search
/// from matched generators; panics unless the pairing is a bijection.
fn matrix_model(u: &UnipotentGroup, p: u64) -> HashMap<GroupElement, Mat> {
    let gens = matrix_generators(u.rank2_type(), p);
    let word_gens = [u.root_element(0, 1), u.root_element(1, 1)];
    let mut map = HashMap::from([(u.identity(), identity(gens[0].len()))]);
    let mut seen_mats = HashSet::from([identity(gens[0].len())]);
    let mut queue = VecDeque::from([u.identity()]);
    while let Some(x) = queue.pop_front() {
        let mx = map[&x].clone();
        for (g, mg) in word_gens.iter().zip(&gens) {
            let y = u.mul(&x, g);
            let my = mat_mul(&mx, mg, p);
            match map.get(&y) {
                Some(prev) => assert_eq!(prev, &my, "collection disagrees with the matrix group"),
                None => {
                    assert!(
                        seen_mats.insert(my.clone()),
                        "two normal forms share a matrix"
                    );
                    map.insert(y.clone(), my);
                    queue.push_back(y);
                }
            }
        }
    }
    assert_eq!(map.len() as u128, u.order());
    map
}

fn mat_power(m: &Mat, e: u64, p: u64) -> Mat {
    (0..e).fold(identity(m.len()), |acc, _| mat_mul(&acc, m, p))
}

fn check_words(ty: Rank2Type, p: u64, word: &[(usize, Elem)]) {
    let u = UnipotentGroup::new(ty, BaseField::with_default_modulus(p, 1).unwrap());
    let model = matrix_model(&u, p);
    let gens = matrix_generators(ty, p);
    let nf = u.collect(word.to_vec());
    let product = word.iter().fold(identity(gens[0].len()), |acc, &(r, l)| {
        mat_mul(&acc, &mat_power(&gens[r], l, p), p)
    });
    assert_eq!(model[&nf], product);
}

fn word_strategy(p: u64) -> impl Strategy<Value = Vec<(usize, Elem)>> {
    prop::collection::vec((0usize..2, 0..p), 0..24)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn a2_collection_matches_sl3(p in prop::sample::select(vec![3u64, 5, 7]), seed in word_strategy(7)) {
        let word: Vec<(usize, Elem)> = seed.into_iter().map(|(r, l)| (r, l % p)).collect();
        check_words(Rank2Type::A2, p, &word);
    }

    #[test]
    fn b2_collection_matches_sp4(p in prop::sample::select(vec![3u64, 5]), seed in word_strategy(5)) {
        let word: Vec<(usize, Elem)> = seed.into_iter().map(|(r, l)| (r, l % p)).collect();
        check_words(Rank2Type::B2, p, &word);
    }

    #[test]
    fn bipartite_spectrum_is_symmetric(
        a in 1usize..8,
        b in 1usize..8,
        raw in prop::collection::vec((0usize..64, 0usize..64, 1u64..5), 1..40),
    ) {
        let mut edges: Vec<(u32, u32, u64)> =
            raw.into_iter().map(|(x, y, w)| ((x % a) as u32, (a + y % b) as u32, w)).collect();
        // every vertex gets an edge so the walk is defined
        for x in 0..a {
            edges.push((x as u32, a as u32, 1));
        }
        for y in 0..b {
            edges.push((0, (a + y) as u32, 1));
        }
        let g = WeightedGraph::new(a + b, edges);
        let ev = spectrum(&g);
        let n = ev.len();
        for i in 0..n {
            prop_assert!((ev[i] + ev[n - 1 - i]).abs() < 1e-9, "{:?}", ev);
        }
    }
}

#[test]
fn lambda2_decreases_with_p() {
    for ty in [Rank2Type::A2, Rank2Type::B2] {
        let values: Vec<f64> = [5u64, 7, 11, 13]
            .iter()
            .map(|&p| {
                rank2_link(ty, &BaseField::with_default_modulus(p, 1).unwrap(), None)
                    .unwrap()
                    .lambda2
            })
            .collect();
        assert!(values.windows(2).all(|w| w[1] < w[0]), "{ty}: {values:?}");
    }
}
