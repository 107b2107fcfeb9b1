//! Seeded random objects for property checks and the acceptance suite.

use rand::Rng;

use crate::forms::HermitianForm;
use crate::linalg::RingMatrix;
use crate::pauli::Gate;
use crate::ring::{LaurentPolynomial, RingDescriptor};

/// Exponents of every variable lie in `lo..=lo + spread`. Dense in one
/// variable, `spread + 1` random terms in several. The ring must not carry
/// `T`.
pub fn poly<R: Rng>(rng: &mut R, ring: RingDescriptor, lo: i32, spread: u32) -> LaurentPolynomial {
    assert!(!ring.has_t(), "sampling is over T-free rings");
    let p = ring.p() as i64;
    match ring.vars() {
        0 => LaurentPolynomial::constant(ring, rng.gen_range(0..p)),
        1 => {
            let coeffs: Vec<i64> = (0..=spread).map(|_| rng.gen_range(0..p)).collect();
            LaurentPolynomial::univariate(ring, lo, &coeffs)
        }
        d => {
            let terms: Vec<(Vec<i32>, i64)> = (0..=spread)
                .map(|_| {
                    let e = (0..d)
                        .map(|_| lo + rng.gen_range(0..=spread as i32))
                        .collect();
                    (e, rng.gen_range(0..p))
                })
                .collect();
            LaurentPolynomial::from_terms(ring, terms).expect("exponents match the ring")
        }
    }
}

pub fn matrix<R: Rng>(
    rng: &mut R,
    ring: RingDescriptor,
    rows: usize,
    cols: usize,
    spread: u32,
) -> RingMatrix {
    let half = (spread / 2) as i32;
    RingMatrix::from_fn(ring, rows, cols, |_, _| poly(rng, ring, -half, spread))
}

/// `A + A†`, always `+`hermitian.
pub fn hermitian_form<R: Rng>(
    rng: &mut R,
    ring: RingDescriptor,
    n: usize,
    spread: u32,
) -> HermitianForm {
    let a = matrix(rng, ring, n, n, spread);
    HermitianForm::plus(&a + &a.dagger()).expect("a + a† is hermitian")
}

/// Symmetric and nondegenerate over `F_p`, by rejection.
pub fn nondegenerate_form<R: Rng>(rng: &mut R, p: u64, n: usize) -> HermitianForm {
    let ring = RingDescriptor::prime_field(p).expect("prime");
    loop {
        let q = hermitian_form(rng, ring, n, 0);
        if q.is_nondegenerate() {
            return q;
        }
    }
}

/// A product of elementary row operations and monomial scalings; every
/// entry has spread at most `max_spread`.
pub fn invertible_matrix<R: Rng>(
    rng: &mut R,
    ring: RingDescriptor,
    n: usize,
    max_spread: u32,
) -> RingMatrix {
    let spread_ok = |m: &RingMatrix| m.entries().all(|f| f.spread().unwrap_or(0) <= max_spread);
    let p = ring.p() as i64;
    let mut a = RingMatrix::identity(ring, n);
    for i in 0..n {
        let k = if ring.vars() > 0 {
            rng.gen_range(-1..=1)
        } else {
            0
        };
        let c = rng.gen_range(1..p);
        let unit = if ring.vars() > 0 {
            LaurentPolynomial::var_pow(ring, 1, k).scale_int(c)
        } else {
            LaurentPolynomial::constant(ring, c)
        };
        a.set(i, i, unit);
    }
    for _ in 0..3 * n {
        if n < 2 {
            break;
        }
        let i = rng.gen_range(0..n);
        let j = (i + rng.gen_range(1..n)) % n;
        let lo = rng.gen_range(-1..=0);
        let f = poly(rng, ring, lo, 1);
        let mut e = RingMatrix::identity(ring, n);
        e.set(i, j, f);
        let next = &e * &a;
        if spread_ok(&next) {
            a = next;
        }
    }
    a
}

/// Random elementary and hyperbolic gates of rank `n`.
pub fn gate_word<R: Rng>(rng: &mut R, ring: RingDescriptor, n: usize, len: usize) -> Vec<Gate> {
    (0..len)
        .map(|_| match rng.gen_range(0..3) {
            0 => Gate::E0(hermitian_form(rng, ring, n, 2)),
            1 => Gate::E1(hermitian_form(rng, ring, n, 2)),
            _ => Gate::H(invertible_matrix(rng, ring, n, 2)),
        })
        .collect()
}
