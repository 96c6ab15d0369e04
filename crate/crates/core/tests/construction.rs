use proptest::prelude::*;

use stable_kneser::classgraph::build_sck;
use stable_kneser::hamilton::{align_indexing, spanning_tree, CycleStructure};
use stable_kneser::verify::verify_vertices;
use stable_kneser::{assemble_hamiltonian, Construction, Params};

fn params_strategy() -> impl Strategy<Value = Params> {
    (2u32..=4, 1u32..=4, 1u32..=7).prop_map(|(s, k, r)| Params::new(s * k + r, k, s).unwrap())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn constructed_cycles_verify(p in params_strategy()) {
        let cycle = assemble_hamiltonian(&p).unwrap();
        let report = verify_vertices(&p, &cycle);
        prop_assert!(report.ok, "{} {:?}", p, report);
    }

    #[test]
    fn each_splice_removes_one_cycle(p in params_strategy()) {
        let g = build_sck(&p);
        let t = spanning_tree(&g).unwrap();
        let idx = align_indexing(&g, &t).unwrap();
        let mut cs = CycleStructure::seed(&idx).unwrap();
        prop_assert_eq!(cs.cycle_count(), g.catalog.len());
        cs.set_consumed(t.root, 0);
        for &b in &t.order {
            let base = u64::from(cs.consumed(b).unwrap());
            for (alpha, &c) in t.children[b].iter().enumerate() {
                let before = cs.cycle_count();
                cs.splice(b, c, base + alpha as u64 + 1, &idx).unwrap();
                prop_assert_eq!(cs.cycle_count(), before - 1);
            }
        }
        prop_assert_eq!(cs.cycle_count(), 1);
    }

    #[test]
    fn tree_degree_stays_below_class_order(p in params_strategy()) {
        let g = build_sck(&p);
        let t = spanning_tree(&g).unwrap();
        for idx in 0..g.catalog.len() {
            prop_assert!(t.tree_degree(idx) <= g.class(idx).order as usize);
            if let Some((b, _)) = t.parent[idx] {
                prop_assert_eq!(t.level[idx], t.level[b] + 1);
            }
        }
    }
}

#[test]
fn alignment_sweeps_full_period_on_small_instances() {
    for (n, k, s) in [(9, 3, 2), (12, 4, 2), (14, 4, 3), (16, 4, 2), (17, 3, 4)] {
        let p = Params::new(n, k, s).unwrap();
        let c = Construction::build(&p).unwrap();
        for child in 0..c.sck.catalog.len() {
            let Some((parent, _)) = c.tree.parent[child] else { continue };
            let (a, b) = (i64::from(c.indexing.orders[parent]), i64::from(c.indexing.orders[child]));
            let lcm = a * b / gcd(a, b);
            for i in 0..lcm {
                assert!(c.indexing.member(parent, i).is_adjacent(&c.indexing.member(child, i)));
            }
        }
    }
}

fn gcd(a: i64, b: i64) -> i64 {
    if b == 0 { a } else { gcd(b, a % b) }
}

#[test]
fn output_is_deterministic() {
    let p = Params::new(15, 4, 2).unwrap();
    assert_eq!(assemble_hamiltonian(&p).unwrap(), assemble_hamiltonian(&p).unwrap());
}

#[test]
fn cycle_starts_at_the_root_anchor() {
    let p = Params::new(13, 3, 3).unwrap();
    let c = Construction::build(&p).unwrap();
    assert_eq!(c.cycle[0], c.sck.class(c.tree.root).base_vertex);
    assert_eq!(c.cycle[0].to_string(), "{1,4,7}");
}

#[test]
fn wide_ground_sets_use_multiword_masks() {
    // n > 64 exercises the multi-word vertex encoding
    let p = Params::new(70, 2, 30).unwrap();
    let cycle = assemble_hamiltonian(&p).unwrap();
    assert!(verify_vertices(&p, &cycle).ok);
    let p = Params::new(131, 3, 43).unwrap();
    assert!(verify_vertices(&p, &assemble_hamiltonian(&p).unwrap()).ok);
}
