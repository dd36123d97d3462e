mod common;

use mstp::{
    gen_from_3sat, gen_from_clique, gen_from_clique_vc, gen_from_hampath, has_hamiltonian_path, lift_witness,
    reduce_ede_to_vdv, reduce_eie_to_viv, solve_xp, verify_solution, CnfFormula, Literal, Measure, MulticoloredGraph,
    StaticGraph,
};
use proptest::prelude::*;

fn literal(vars: usize) -> impl Strategy<Value = Literal> {
    (0..vars, any::<bool>()).prop_map(|(var, positive)| Literal { var, positive })
}

fn formula() -> impl Strategy<Value = CnfFormula> {
    (1usize..=2).prop_flat_map(|vars| {
        prop::collection::vec([literal(vars), literal(vars), literal(vars)], 0..=2)
            .prop_map(move |clauses| CnfFormula::new(vars, clauses).unwrap())
    })
}

fn partite(max_part: usize) -> impl Strategy<Value = MulticoloredGraph> {
    prop::collection::vec(1..=max_part, 3).prop_flat_map(|sizes| {
        let mut parts = Vec::new();
        let mut next = 0;
        for s in &sizes {
            parts.push((next..next + s).collect::<Vec<usize>>());
            next += s;
        }
        let mut cross = Vec::new();
        for p in 0..3 {
            for q in p + 1..3 {
                for &u in &parts[p] {
                    for &v in &parts[q] {
                        cross.push((u, v));
                    }
                }
            }
        }
        let len = cross.len();
        prop::collection::vec(any::<bool>(), len).prop_map(move |mask| {
            let edges = cross.iter().zip(mask).filter(|(_, m)| *m).map(|(&e, _)| e).collect();
            MulticoloredGraph::new(parts.clone(), edges).unwrap()
        })
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(100))]

    #[test]
    fn edge_to_vertex_difference(inst in common::instance(2..=5, 1..=3, 0..=4, 0..=3, Just(Measure::Ede))) {
        let art = reduce_ede_to_vdv(&inst).unwrap();
        prop_assert_eq!(art.instance.k, inst.k + inst.k.saturating_sub(1) * (inst.ell + 1));
        prop_assert_eq!(art.instance.ell, (inst.ell + 1) * (inst.ell + 1) - 1);
        prop_assert_eq!(art.instance.measure, Measure::Vdv);
        let src = solve_xp(&inst).unwrap();
        let dst = solve_xp(&art.instance).unwrap();
        prop_assert_eq!(src.is_some(), dst.is_some());
        if let Some(w) = dst {
            let lifted = lift_witness(&art, &w).unwrap();
            prop_assert!(verify_solution(&inst, &lifted).accepted());
        }
    }

    #[test]
    fn edge_to_vertex_intersection(inst in common::instance(2..=5, 1..=3, 0..=4, 0..=3, Just(Measure::Eie))) {
        let art = reduce_eie_to_viv(&inst).unwrap();
        prop_assert_eq!(art.instance.k, (2 * inst.k).saturating_sub(1));
        prop_assert_eq!(art.instance.ell, inst.ell);
        prop_assert_eq!(art.instance.measure, Measure::Viv);
        let src = solve_xp(&inst).unwrap();
        let dst = solve_xp(&art.instance).unwrap();
        prop_assert_eq!(src.is_some(), dst.is_some());
        if let Some(w) = dst {
            let lifted = lift_witness(&art, &w).unwrap();
            prop_assert!(verify_solution(&inst, &lifted).accepted());
        }
    }

    #[test]
    fn hamiltonian_generator(n in 0usize..=5, mask in any::<u16>()) {
        let pairs: Vec<(usize, usize)> = (0..n).flat_map(|a| (a + 1..n).map(move |b| (a, b))).collect();
        let edges = pairs.iter().enumerate().filter(|(i, _)| mask >> i & 1 == 1).map(|(_, &e)| e);
        let g = StaticGraph::new(n, edges).unwrap();
        let inst = gen_from_hampath(&g).unwrap();
        prop_assert_eq!(solve_xp(&inst).unwrap().is_some(), has_hamiltonian_path(&g));
    }

    #[test]
    fn clique_generators(g in partite(2)) {
        let want = g.has_multicolored_clique();
        prop_assert_eq!(solve_xp(&gen_from_clique(&g).unwrap()).unwrap().is_some(), want);
        prop_assert_eq!(solve_xp(&gen_from_clique_vc(&g).unwrap()).unwrap().is_some(), want);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn sat_generator(f in formula(), ede in any::<bool>()) {
        let m = if ede { Measure::Ede } else { Measure::Eie };
        let inst = gen_from_3sat(&f, m).unwrap();
        prop_assert_eq!(solve_xp(&inst).unwrap().is_some(), f.is_satisfiable());
    }
}

#[test]
fn unsatisfiable_formula_is_no() {
    // all four sign patterns over x0, x1
    let c = |a: bool, b: bool| [Literal { var: 0, positive: a }, Literal { var: 1, positive: b }, Literal { var: 0, positive: a }];
    let f = CnfFormula::new(2, vec![c(true, true), c(true, false), c(false, true), c(false, false)]).unwrap();
    assert!(!f.is_satisfiable());
    for m in [Measure::Ede, Measure::Eie] {
        assert!(solve_xp(&gen_from_3sat(&f, m).unwrap()).unwrap().is_none());
    }
}
