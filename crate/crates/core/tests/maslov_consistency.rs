use maslovkit::forms::{
    hyperbolic_form, in_fundamental_ideal, witt_add, witt_class, HermitianForm,
};
use maslovkit::linalg::RingMatrix;
use maslovkit::pauli::{diag_identity_decomposition, same_module};
use maslovkit::ring::RingDescriptor;
use maslovkit::sample;
use maslovkit::sturm::{
    lambda_flip_homotopy, loop_from_pair, maslov_index, trivmas_homotopy, validate_loop,
};
use proptest::prelude::*;
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

fn pair(rng: &mut StdRng, p: u64, n: usize) -> (HermitianForm, HermitianForm) {
    (
        sample::nondegenerate_form(rng, p, n),
        sample::nondegenerate_form(rng, p, n),
    )
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(100))]

    #[test]
    fn maslov_of_pair_loop(seed in any::<u64>(), p in prop::sample::select(vec![5u64, 7]), n in 1usize..4) {
        let mut rng = StdRng::seed_from_u64(seed);
        let (q0, q1) = pair(&mut rng, p, n);
        let lp = loop_from_pair(&q0, &q1).unwrap();
        let got = maslov_index(&lp).unwrap().witt.unwrap();
        let expected = witt_class(&q1.direct_sum(&q0.inverse().unwrap().neg()).unwrap()).unwrap();
        prop_assert_eq!(got, expected);
        prop_assert!(in_fundamental_ideal(&got));
        // the loop sits at L at both ends
        let base = RingDescriptor::prime_field(p).unwrap();
        let l = lp.lagrangian_at(base.element(0)).unwrap();
        prop_assert!(same_module(&l, &lp.lagrangian_at(base.element(1)).unwrap()).unwrap());
    }

    #[test]
    fn stabilization_and_additivity(seed in any::<u64>(), p in prop::sample::select(vec![3u64, 5, 7])) {
        let mut rng = StdRng::seed_from_u64(seed);
        let (n1, n2) = (rng.gen_range(1..3), rng.gen_range(1..3));
        let (a0, a1) = pair(&mut rng, p, n1);
        let (b0, b1) = pair(&mut rng, p, n2);
        let la = loop_from_pair(&a0, &a1).unwrap();
        let lb = loop_from_pair(&b0, &b1).unwrap();
        let ma = maslov_index(&la).unwrap().witt.unwrap();
        let mb = maslov_index(&lb).unwrap().witt.unwrap();
        for k in 1..3 {
            let st = validate_loop(la.stabilized(k).sequence()).unwrap();
            prop_assert_eq!(maslov_index(&st).unwrap().witt.unwrap(), ma);
        }
        let sum = la.direct_sum(&lb).unwrap();
        prop_assert_eq!(maslov_index(&sum).unwrap().witt.unwrap(), witt_add(&ma, &mb).unwrap());
    }

    #[test]
    fn explicit_homotopies(seed in any::<u64>(), n in 1usize..3) {
        let mut rng = StdRng::seed_from_u64(seed);
        let r = RingDescriptor::laurent(5, 1).unwrap();
        let one = r.element(1);
        // invertible hermitian: a† diag(c) a
        let a = sample::invertible_matrix(&mut rng, r, n, 2);
        let c: Vec<i64> = (0..n).map(|_| rng.gen_range(1..5)).collect();
        let q = HermitianForm::diagonal(r, &c).congruence(&a).unwrap();
        let e = trivmas_homotopy(&q, one).unwrap();
        let qq = q.direct_sum(&q.inverse().unwrap().neg()).unwrap();
        prop_assert_eq!(qq.congruence(&e).unwrap(), hyperbolic_form(n, 1, r));

        let e = lambda_flip_homotopy(one, n, r).unwrap();
        let lam = hyperbolic_form(n, 1, r);
        prop_assert_eq!(lam.congruence(&e).unwrap(), lam.neg());

        let factors = diag_identity_decomposition(&a).unwrap();
        prop_assert_eq!(factors.len(), 6);
        let prod = factors.iter().fold(RingMatrix::identity(r, 2 * n), |acc, f| &acc * f);
        let expected = RingMatrix::direct_sum(r, &[&a, &a.inverse().unwrap()]).unwrap();
        prop_assert_eq!(prod, expected);
    }
}

#[test]
fn trivial_pair_gives_zero() {
    for p in [3u64, 5, 7, 11] {
        let r = RingDescriptor::prime_field(p).unwrap();
        for n in 1..4 {
            let q = HermitianForm::diagonal(r, &vec![1; n]);
            let m = maslov_index(&loop_from_pair(&q, &q).unwrap()).unwrap();
            assert!(m.witt.unwrap().is_zero(), "p={p} n={n}");
        }
    }
}
