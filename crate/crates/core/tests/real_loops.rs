use maslovkit::realmaslov::*;
use maslovkit::Error;

fn poly(c: &[f64]) -> RealPolynomial {
    RealPolynomial::new(c.to_vec()).unwrap()
}

#[test]
fn shipped_example() {
    let p = paper_example();
    let seq = sturm_residues(&p).unwrap();
    assert_eq!(seq.quotients.len(), 3);
    assert!(seq.quotients.iter().all(|q| q.degree() <= 1));
    assert!(factorization_error(&p, &seq, 20) < 1e-6);
    assert_eq!(real_maslov(&p).unwrap(), 1);
}

#[test]
fn degree_counts_roots_in_the_unit_interval() {
    // (T - 0.25)(T - 0.5)(T - 0.75)(T - 2)
    let roots = [0.25, 0.5, 0.75, 2.0];
    let mut c = vec![1.0];
    for r in roots {
        let mut next = vec![0.0; c.len() + 1];
        for (k, &ck) in c.iter().enumerate() {
            next[k + 1] += ck;
            next[k] -= r * ck;
        }
        c = next;
    }
    assert_eq!(real_maslov(&poly(&c)).unwrap(), 3);
    assert_eq!(real_maslov(&poly(&[-2.0, 1.0])).unwrap(), 0);
    assert_eq!(real_maslov(&poly(&[1.0, 0.0, 1.0])).unwrap(), 0);
}

#[test]
fn signature_matches_direct_eigenvalues() {
    // S(t) for P = T² - T - 1 at t = 0, 1, checked by hand: both definite of the same sign
    let p = poly(&[-1.0, -1.0, 1.0]);
    let seq = sturm_residues(&p).unwrap();
    let s0 = residue_signature_form(&seq, 0.0);
    let s1 = residue_signature_form(&seq, 1.0);
    assert_eq!(signature(&s0).unwrap(), signature(&s1).unwrap());
    let det = |m: &nalgebra::DMatrix<f64>| m.determinant();
    // det S(t) is P(t) up to the constant tail
    for (s, t) in [(&s0, 0.0), (&s1, 1.0)] {
        assert!((det(s) * seq.tail - p.eval(t)).abs() < 1e-9);
    }
}

#[test]
fn rejected_inputs() {
    assert!(matches!(
        sturm_residues(&poly(&[1.0 / 9.0, -2.0 / 3.0, 1.0])),
        Err(Error::DegenerateInput(_))
    ));
    assert_eq!(real_maslov(&poly(&[0.0, 1.0])), Err(Error::EndpointRoot));
    assert_eq!(real_maslov(&poly(&[-1.0, 1.0])), Err(Error::EndpointRoot));
    assert!(RealPolynomial::new(vec![0.0, 0.0]).is_err());
    assert!(RealPolynomial::new(vec![f64::NAN]).is_err());
    assert!(sturm_residues(&poly(&[3.0])).is_err());
}
