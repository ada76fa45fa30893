//! Property tests backed by independent oracles: Tarjan's SCC algorithm
//! for weak irreducibility, exhaustive enumeration for the modular solver,
//! and the structure-theorem count for solution sets.

use evk::eigenvariety::{analyze, enumerate_ps0};
use evk::linalg::{
    brute_force_solve_mod, composition_length, derive_modm_divisors, smith_normal_form, solve_mod,
};
use evk::tensor::SymTensorSupport;
use evk::IntMatrix;
use num::{BigInt, BigRational, BigUint, One, Signed, Zero};
use proptest::prelude::*;
use std::collections::BTreeSet;

// ---------------------------------------------------------------------------
// independent oracle: Tarjan's strongly connected components

fn tarjan_scc_count(n: usize, adj: &[Vec<usize>]) -> usize {
    struct State<'a> {
        adj: &'a [Vec<usize>],
        index: usize,
        indices: Vec<Option<usize>>,
        lowlink: Vec<usize>,
        on_stack: Vec<bool>,
        stack: Vec<usize>,
        count: usize,
    }
    fn connect(s: &mut State, v: usize) {
        s.indices[v] = Some(s.index);
        s.lowlink[v] = s.index;
        s.index += 1;
        s.stack.push(v);
        s.on_stack[v] = true;
        for &w in &s.adj[v] {
            if s.indices[w].is_none() {
                connect(s, w);
                s.lowlink[v] = s.lowlink[v].min(s.lowlink[w]);
            } else if s.on_stack[w] {
                s.lowlink[v] = s.lowlink[v].min(s.indices[w].unwrap());
            }
        }
        if s.lowlink[v] == s.indices[v].unwrap() {
            s.count += 1;
            while let Some(w) = s.stack.pop() {
                s.on_stack[w] = false;
                if w == v {
                    break;
                }
            }
        }
    }
    let mut s = State {
        adj,
        index: 0,
        indices: vec![None; n],
        lowlink: vec![0; n],
        on_stack: vec![false; n],
        stack: Vec::new(),
        count: 0,
    };
    for v in 0..n {
        if s.indices[v].is_none() {
            connect(&mut s, v);
        }
    }
    s.count
}

/// The digraph of a support: an arc i -> j whenever a nonzero entry starts
/// at i and contains j among its remaining indices.
fn support_digraph(a: &SymTensorSupport) -> Vec<Vec<usize>> {
    let n = a.dim();
    let mut adj: Vec<BTreeSet<usize>> = vec![BTreeSet::new(); n];
    for (key, _) in a.entries() {
        let mults = key.multiplicities();
        for &(i, ci) in &mults {
            for &(j, _) in &mults {
                if i != j || ci >= 2 {
                    adj[i - 1].insert(j - 1);
                }
            }
        }
    }
    adj.into_iter().map(|s| s.into_iter().collect()).collect()
}

// ---------------------------------------------------------------------------
// strategies

fn support_strategy() -> impl Strategy<Value = SymTensorSupport> {
    (2usize..=4, 1usize..=6).prop_flat_map(|(m, n)| {
        proptest::collection::vec(proptest::collection::vec(1..=n, m), 1..=6).prop_map(
            move |mut tuples| {
                for t in &mut tuples {
                    t.sort_unstable();
                }
                SymTensorSupport::from_uniform_entries(m, n, tuples, BigRational::one())
                    .expect("canonical uniform entries never conflict")
            },
        )
    })
}

fn matrix_strategy() -> impl Strategy<Value = IntMatrix> {
    (1usize..=4, 1usize..=4).prop_flat_map(|(r, c)| {
        proptest::collection::vec(-6i64..=6, r * c).prop_map(move |data| {
            let rows: Vec<Vec<i64>> = data.chunks(c).map(|ch| ch.to_vec()).collect();
            IntMatrix::from_rows(&rows)
        })
    })
}

fn connected_hypergraph_strategy() -> impl Strategy<Value = SymTensorSupport> {
    // chain edges so the result is connected by construction
    (2usize..=3, 1usize..=4).prop_flat_map(|(m, chain)| {
        proptest::collection::vec(proptest::collection::vec(1usize..=100, m - 1), chain).prop_map(
            move |raw| {
                let mut edges: Vec<Vec<usize>> = Vec::new();
                let mut n = m;
                edges.push((1..=m).collect());
                for fresh in raw {
                    // each new edge hooks onto an existing vertex
                    let anchor = fresh[0] % n + 1;
                    let mut e = vec![anchor];
                    for _ in 1..m {
                        n += 1;
                        e.push(n);
                    }
                    edges.push(e);
                }
                SymTensorSupport::from_uniform_entries(m, n, edges, BigRational::one())
                    .expect("valid edges")
            },
        )
    })
}

// ---------------------------------------------------------------------------
// tensor properties

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn incidence_rows_sum_to_order(a in support_strategy()) {
        let b = a.incidence_matrix();
        for i in 0..b.rows() {
            let sum: BigInt = b.row(i).iter().sum();
            prop_assert_eq!(sum, BigInt::from(a.order() as u64));
        }
    }

    #[test]
    fn weak_irreducibility_matches_scc_oracle(a in support_strategy()) {
        let adj = support_digraph(&a);
        let touched = (0..a.dim()).all(|v| !adj[v].is_empty() || adj.iter().any(|r| r.contains(&v)));
        let strongly_connected = touched && tarjan_scc_count(a.dim(), &adj) == 1;
        prop_assert_eq!(a.is_weakly_irreducible(), strongly_connected);
    }

    #[test]
    fn incidence_is_input_order_independent(a in support_strategy(), seed in any::<u64>()) {
        // rebuilding from shuffled raw tuples gives the identical matrix
        let mut tuples: Vec<Vec<usize>> = a.entries().map(|(k, _)| k.indices().to_vec()).collect();
        let k = tuples.len();
        tuples.rotate_left((seed as usize) % k.max(1));
        let rebuilt = SymTensorSupport::from_uniform_entries(
            a.order(), a.dim(), tuples, BigRational::one()).unwrap();
        prop_assert_eq!(a.incidence_matrix(), rebuilt.incidence_matrix());
    }

    #[test]
    fn mutual_subpatterns_are_equal(a in support_strategy(), b in support_strategy()) {
        if a.order() == b.order() && a.dim() == b.dim() {
            let ab = a.is_subpattern_of(&b).unwrap();
            let ba = b.is_subpattern_of(&a).unwrap();
            if ab && ba {
                let ka: Vec<_> = a.entries().map(|(k, _)| k.indices().to_vec()).collect();
                let kb: Vec<_> = b.entries().map(|(k, _)| k.indices().to_vec()).collect();
                prop_assert_eq!(ka, kb);
            }
        }
    }
}

// ---------------------------------------------------------------------------
// exact linear algebra properties

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn snf_transforms_reconstruct(b in matrix_strategy()) {
        let snf = smith_normal_form(&b);
        prop_assert_eq!(snf.p().mul(&b).mul(snf.q()), snf.diagonal_matrix());
        prop_assert_eq!(snf.p().determinant().abs(), BigInt::one());
        prop_assert_eq!(snf.q().determinant().abs(), BigInt::one());
        let d = snf.diagonal();
        for w in d.windows(2) {
            prop_assert!((&w[1] % &w[0]).is_zero(), "divisibility chain broken");
        }
        for s in d {
            prop_assert!(s.is_positive());
        }
    }

    #[test]
    fn solver_matches_brute_force(b in matrix_strategy(), m in 2u64..=5, rhs_seed in any::<u64>()) {
        let rhs: Vec<u64> = (0..b.rows())
            .map(|i| (rhs_seed >> (3 * i)) % m)
            .collect();
        let sol = solve_mod(&b, &rhs, m).unwrap();
        let brute = brute_force_solve_mod(&b, &rhs, m, 100_000).unwrap();
        prop_assert_eq!(sol.solution_count(), BigUint::from(brute.len()));
        let enumerated: BTreeSet<Vec<u64>> = sol.iter().collect();
        let brute_set: BTreeSet<Vec<u64>> = brute.into_iter().collect();
        prop_assert_eq!(enumerated, brute_set);
    }

    #[test]
    fn homogeneous_count_matches_structure_theorem(b in matrix_strategy(), m in 2u64..=5) {
        let snf = smith_normal_form(&b);
        let (divisors, free_rank) = derive_modm_divisors(&snf, m, b.cols());
        let mut expect = BigUint::from(m).pow(free_rank as u32);
        for d in &divisors {
            prop_assert_eq!(m % d, 0, "divisor must divide the modulus");
            expect *= BigUint::from(*d);
        }
        let brute = brute_force_solve_mod(&b, &vec![0; b.rows()], m, 100_000).unwrap();
        prop_assert_eq!(expect, BigUint::from(brute.len()));
    }
}

// ---------------------------------------------------------------------------
// eigenvariety properties

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn phase_module_matches_brute_force(a in connected_hypergraph_strategy()) {
        let m = a.order() as u64;
        let b = a.incidence_matrix();
        let es = analyze(&a).unwrap();
        // s divides m^{n-1} and is strictly below it
        let cap = BigUint::from(m).pow((a.dim() - 1) as u32);
        prop_assert_eq!(&cap % es.stabilizing_index(), BigUint::from(0u32));
        prop_assert!(*es.stabilizing_index() < cap);

        if BigUint::from(m).pow(a.dim() as u32) <= BigUint::from(100_000u32) {
            let brute = brute_force_solve_mod(&b, &vec![0; b.rows()], m, 100_000).unwrap();
            prop_assert_eq!(
                BigUint::from(m) * es.stabilizing_index(),
                BigUint::from(brute.len())
            );
            let normalized: BTreeSet<Vec<u64>> = brute
                .iter()
                .map(|x| x.iter().map(|&v| (v + m - x[0]) % m).collect())
                .collect();
            let enumerated: BTreeSet<Vec<u64>> = enumerate_ps0(&es, 100_000)
                .unwrap()
                .into_iter()
                .map(|p| p.phases().to_vec())
                .collect();
            prop_assert_eq!(normalized, enumerated);
        }
    }

    #[test]
    fn unit_divisor_bound_and_prime_case(a in connected_hypergraph_strategy()) {
        let m = a.order() as u64;
        let es = analyze(&a).unwrap();
        let n = a.dim();
        let t = es.unit_divisor_count();

        // s <= m^{n-1-t}, gamma <= (n-1-t) cl(m), equality iff no nontrivial divisors
        let bound = BigUint::from(m).pow((n - 1 - t) as u32);
        prop_assert!(*es.stabilizing_index() <= bound);
        prop_assert!(es.stabilizing_dimension() <= (n - 1 - t) as u64 * composition_length(m));
        let tight = es.stabilizing_index() == &bound;
        prop_assert_eq!(tight, es.zm_divisors().is_empty());

        // every reported divisor divides m
        for d in es.zm_divisors() {
            prop_assert_eq!(m % d, 0);
        }

        // prime order: gamma = n - 1 - rank over Z_m and s = m^gamma
        if m == 2 || m == 3 {
            let rank = t + es.zm_divisors().len();
            prop_assert_eq!(es.stabilizing_dimension(), (n - 1 - rank) as u64);
            let spow = BigUint::from(m).pow(es.stabilizing_dimension() as u32);
            prop_assert_eq!(es.stabilizing_index(), &spow);
        }
    }

    #[test]
    fn phase_module_is_a_group(a in connected_hypergraph_strategy()) {
        let es = analyze(&a).unwrap();
        if *es.stabilizing_index() <= BigUint::from(64u32) {
            let points = enumerate_ps0(&es, 64).unwrap();
            let set: BTreeSet<Vec<u64>> = points.iter().map(|p| p.phases().to_vec()).collect();
            prop_assert_eq!(set.len(), points.len(), "enumeration repeats an element");
            for p in &points {
                prop_assert!(set.contains(p.neg().phases()));
                for q in &points {
                    prop_assert!(set.contains(p.add(q).phases()));
                }
            }
        }
    }
}

// ---------------------------------------------------------------------------
// format round-trip

proptest! {
    #![proptest_config(ProptestConfig::with_cases(32))]

    #[test]
    fn hypergraph_text_roundtrip(a in connected_hypergraph_strategy()) {
        let edges: Vec<Vec<usize>> = a.entries().map(|(k, _)| k.indices().to_vec()).collect();
        let g = evk::hypergraph::UniformHypergraph::new(a.order(), a.dim(), edges).unwrap();
        let text = evk::io::write_hypergraph(&g);
        let evk::io::FileContent::Hypergraph(parsed) = evk::io::parse_input(&text).unwrap() else {
            panic!("expected hypergraph");
        };
        prop_assert_eq!(evk::io::write_hypergraph(&parsed), text);
    }
}
