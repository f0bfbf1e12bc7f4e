use descartes_core::rational::rat;
use descartes_core::realize::{
    concatenate, lemma_derivative_check, realize_by_blocks, realize_series_pair,
    realize_series_single, verify_witness, BaseBlock, Witness,
};
use descartes_core::{act, sigma_k_pattern, Combo, GroupElement, PairPN};
use proptest::prelude::*;

fn block() -> impl Strategy<Value = BaseBlock> {
    prop::sample::select(BaseBlock::ALL.to_vec())
}

fn chain(blocks: &[BaseBlock]) -> Witness {
    let mut acc = blocks[0].witness();
    for b in &blocks[1..] {
        acc = concatenate(&acc, &b.witness()).unwrap();
    }
    acc
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn concatenation_adds_degrees_and_pairs(xs in prop::collection::vec(block(), 1..=3), ys in prop::collection::vec(block(), 1..=3)) {
        let a = chain(&xs);
        let b = chain(&ys);
        let w = concatenate(&a, &b).unwrap();
        prop_assert_eq!(w.combo().degree(), a.combo().degree() + b.combo().degree());
        prop_assert_eq!(w.combo().pair, a.combo().pair + b.combo().pair);
        prop_assert_eq!(&w.combo().pattern, &a.combo().pattern.concatenated(&b.combo().pattern));
        prop_assert!(verify_witness(w.poly(), w.combo()));
    }

    #[test]
    fn transport_is_consistent(xs in prop::collection::vec(block(), 1..=4)) {
        let w = chain(&xs);
        for g in GroupElement::ALL {
            let t = w.transport(g).expect("images of realized combos are realized");
            prop_assert_eq!(t.combo(), &act(g, w.combo()));
            // and back again
            let back = t.transport(g).unwrap();
            prop_assert_eq!(back.combo(), w.combo());
        }
    }

    #[test]
    fn block_plans_realize_their_combo(xs in prop::collection::vec(block(), 1..=4)) {
        let target = chain(&xs).combo().clone();
        let w = realize_by_blocks(&target).expect("a block chain is its own plan");
        prop_assert_eq!(w.combo(), &target);
    }

    #[test]
    fn derivative_rows_positive(half in 2usize..=7, k_seed in 0usize..100, num in 1i64..=99_000) {
        let d = 2 * half + 1;
        let k = 1 + k_seed % ((d - 3) / 2);
        let a0 = rat(1000 + num, 1000);
        let rows = lemma_derivative_check(d, k, &a0).unwrap();
        prop_assert_eq!(rows.len(), d);
        for r in rows {
            prop_assert!(r.is_positive());
            prop_assert!(r.w <= r.v && r.v < r.u);
        }
    }
}

#[test]
fn series_constructions_verify_up_to_eleven() {
    for d in [5, 7, 9, 11] {
        for k in 1..=(d - 3) / 2 {
            let pattern = sigma_k_pattern(d, k).unwrap();
            let w = realize_series_single(d, k).unwrap();
            assert_eq!(
                w.combo(),
                &Combo::new(pattern.clone(), PairPN::new(1, 0)).unwrap()
            );
            for l in 0..=k {
                for r in 1..=(d - 2 * k - 1) / 2 {
                    let w = realize_series_pair(d, k, l, r).unwrap();
                    assert!(verify_witness(w.poly(), w.combo()));
                    assert_eq!(w.combo().pattern, pattern);
                    assert_eq!(w.combo().pair, PairPN::new(2 * l + 1, 2 * r));
                }
            }
        }
    }
}
