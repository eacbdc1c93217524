use diminish_core::framework::unary::{
    CanonicalKernel, DoublingKernel, DropOne, Halving, OracleKernel, TruncatingKernel,
    UnaryInstance, UnaryThreshold,
};
use diminish_core::framework::{
    accelerated_solve, diminish_kernelize_loop, strong_loop, strong_round_length, Factor,
    LoopTrace, Problem,
};
use proptest::prelude::*;

fn instance() -> impl Strategy<Value = UnaryInstance> {
    (proptest::collection::vec(any::<bool>(), 0..=64), 0u64..=32)
        .prop_map(|(bits, k)| UnaryInstance::new(bits, k))
}

fn check_trace(trace: &LoopTrace, inst: &UnaryInstance, c_base: u64) {
    assert_eq!(trace.verdict, inst.ones() >= inst.k);
    assert!(trace.rounds.len() as u64 <= inst.k.max(1));
    for r in &trace.rounds {
        assert!(r.k_after < r.k_before, "{r:?}");
    }
    assert!(trace.final_k <= c_base.max(inst.k));
}

fn base(i: &UnaryInstance) -> diminish_core::Result<bool> {
    UnaryThreshold.decide(i)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn strict_loop_matches_counting(inst in instance(), c_base in 1u64..=3) {
        for trace in [
            diminish_kernelize_loop(&UnaryThreshold, &DropOne, &CanonicalKernel, c_base, base, &inst).unwrap(),
            diminish_kernelize_loop(&UnaryThreshold, &DropOne, &TruncatingKernel, c_base, base, &inst).unwrap(),
        ] {
            check_trace(&trace, &inst, c_base);
        }
    }

    #[test]
    fn strong_loop_matches_counting(inst in instance(), c_base in 1u64..=3) {
        let kernels = [
            OracleKernel { factor: Factor::integer(2) },
            OracleKernel { factor: Factor::integer(3) },
        ];
        for kern in &kernels {
            let trace = strong_loop(&UnaryThreshold, &Halving, kern, c_base, base, &inst).unwrap();
            check_trace(&trace, &inst, c_base);
        }
        // Doubling can undo a round that ends at k = 1, so the base case has
        // to start at 2.
        let c_base = c_base.max(2);
        let trace = strong_loop(&UnaryThreshold, &Halving, &DoublingKernel, c_base, base, &inst).unwrap();
        check_trace(&trace, &inst, c_base);
        for r in &trace.rounds {
            prop_assert!(r.applications <= 2);
        }
    }

    #[test]
    fn acceleration_reaches_the_target(inst in instance(), f in 2u64..=8) {
        let trace = accelerated_solve(&UnaryThreshold, &Halving, base, |_| f, 0, &inst).unwrap();
        prop_assert_eq!(trace.verdict, inst.ones() >= inst.k);
        if trace.applications == trace.planned {
            prop_assert!(trace.k_after <= inst.k.div_ceil(f));
        } else {
            prop_assert!(trace.k_after <= UnaryThreshold.floor());
        }
    }
}

#[test]
fn round_length_hand_values() {
    let two = Factor::integer(2);
    assert_eq!(strong_round_length(two, Factor::integer(2)), 2);
    assert_eq!(strong_round_length(two, Factor::integer(3)), 3);
}

#[test]
fn loops_refuse_the_wrong_kernel_kind() {
    let inst = UnaryInstance::parse_bits("1111", 3).unwrap();
    assert!(diminish_kernelize_loop(&UnaryThreshold, &DropOne, &DoublingKernel, 1, base, &inst).is_err());
    assert!(strong_loop(&UnaryThreshold, &Halving, &CanonicalKernel, 1, base, &inst).is_err());
    assert!(strong_loop(&UnaryThreshold, &DropOne, &DoublingKernel, 1, base, &inst).is_err());
}

#[test]
fn small_inputs_are_solved_directly() {
    let inst = UnaryInstance::parse_bits("1101", 3).unwrap();
    let trace = accelerated_solve(&UnaryThreshold, &Halving, base, |_| 4, 100, &inst).unwrap();
    assert!(trace.direct && trace.verdict);
    assert_eq!(trace.applications, 0);
}
