use maslovkit::linalg::RingMatrix;
use maslovkit::pauli::{
    apply, is_isotropic, is_lagrangian, lagrangian_report, same_module, Circuit, CliffordUnitary,
    PauliModule, StabilizerModule,
};
use maslovkit::presets::{cluster_circuit, cluster_module, product_state};
use maslovkit::ring::RingDescriptor;
use maslovkit::sample;
use proptest::prelude::*;
use rand::rngs::StdRng;
use rand::SeedableRng;

fn f5x() -> RingDescriptor {
    RingDescriptor::laurent(5, 1).unwrap()
}

/// `U† λ⁻ U = λ⁻`, computed from scratch.
fn preserves_lambda(u: &RingMatrix, n: usize) -> bool {
    let lam = PauliModule::new(u.ring(), n).unwrap().lambda_minus();
    &(&u.dagger() * &lam) * u == lam
}

fn start_modules(n: usize) -> Vec<StabilizerModule> {
    let m = PauliModule::new(f5x(), n).unwrap();
    let mut out = vec![m.standard_lagrangian(), m.dual_lagrangian()];
    if n == 1 {
        out.push(cluster_module());
    }
    // isotropic but not Lagrangian: the first column of L only
    out.push(StabilizerModule::new(m, m.standard_lagrangian().generators().column(0)).unwrap());
    out
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(100))]

    #[test]
    fn words_preserve_lagrangians(seed in any::<u64>(), n in 1usize..3, len in 1usize..5) {
        let mut rng = StdRng::seed_from_u64(seed);
        let word = sample::gate_word(&mut rng, f5x(), n, len);
        let ambient = PauliModule::new(f5x(), n).unwrap();
        let u = Circuit::new(word).unitary(ambient).unwrap();
        prop_assert!(preserves_lambda(u.matrix(), n));
        prop_assert!((u.compose(&u.inverse()).unwrap()).matrix().is_identity());
        for s in start_modules(n) {
            let t = apply(&u, &s).unwrap();
            prop_assert_eq!(is_isotropic(&s), is_isotropic(&t));
            prop_assert_eq!(is_lagrangian(&s).unwrap(), is_lagrangian(&t).unwrap());
            let back = apply(&u.inverse(), &t).unwrap();
            prop_assert!(same_module(&back, &s).unwrap());
        }
    }
}

#[test]
fn cluster_from_product_state() {
    let out = cluster_circuit().apply(&product_state()).unwrap();
    assert!(same_module(&out, &cluster_module()).unwrap());
    let rep = lagrangian_report(&cluster_module()).unwrap();
    assert!(rep.isotropic && rep.coisotropic && rep.summand && rep.lagrangian);
}

#[test]
fn non_unitary_matrices_are_rejected() {
    let r = f5x();
    let m = RingMatrix::from_ints(r, &[&[1, 1], &[1, 1]]);
    assert!(CliffordUnitary::new(m).is_err());
    let m = RingMatrix::from_ints(r, &[&[2, 0], &[0, 2]]);
    assert!(!preserves_lambda(&m, 1));
    assert!(CliffordUnitary::new(m).is_err());
}
