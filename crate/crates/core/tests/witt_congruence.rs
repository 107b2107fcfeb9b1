//! Witt classes against a brute-force congruence search over GL_n(F_p).

use maslovkit::forms::{hyperbolic_form, witt_add, witt_class, HermitianForm, WittClass};
use maslovkit::linalg::RingMatrix;
use maslovkit::ring::RingDescriptor;
use proptest::prelude::*;

type Mat = Vec<Vec<i64>>;

fn det(m: &Mat, p: i64) -> i64 {
    let v = match m.len() {
        1 => m[0][0],
        2 => m[0][0] * m[1][1] - m[0][1] * m[1][0],
        3 => {
            m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1])
                - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0])
                + m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0])
        }
        _ => unreachable!(),
    };
    v.rem_euclid(p)
}

fn all_matrices(n: usize, p: i64) -> impl Iterator<Item = Mat> {
    let total = (p as u64).pow((n * n) as u32);
    (0..total).map(move |mut code| {
        let mut m = vec![vec![0; n]; n];
        for row in m.iter_mut() {
            for x in row.iter_mut() {
                *x = (code % p as u64) as i64;
                code /= p as u64;
            }
        }
        m
    })
}

fn symmetric(n: usize, p: i64) -> Vec<Mat> {
    all_matrices(n, p)
        .filter(|m| (0..n).all(|i| (0..n).all(|j| m[i][j] == m[j][i])))
        .filter(|m| det(m, p) != 0)
        .collect()
}

/// `Aᵀ F A`.
fn congruent_image(f: &Mat, a: &Mat, p: i64) -> Mat {
    let n = f.len();
    let mut out = vec![vec![0; n]; n];
    for i in 0..n {
        for j in 0..n {
            let mut s = 0;
            for k in 0..n {
                for l in 0..n {
                    s += a[k][i] * f[k][l] * a[l][j];
                }
            }
            out[i][j] = s.rem_euclid(p);
        }
    }
    out
}

/// Orbit labels of all nondegenerate symmetric forms under congruence.
fn orbit_labels(n: usize, p: i64) -> Vec<(Mat, usize)> {
    let forms = symmetric(n, p);
    let gl: Vec<Mat> = all_matrices(n, p).filter(|a| det(a, p) != 0).collect();
    let mut label: Vec<Option<usize>> = vec![None; forms.len()];
    let mut next = 0;
    for i in 0..forms.len() {
        if label[i].is_some() {
            continue;
        }
        for a in &gl {
            let img = congruent_image(&forms[i], a, p);
            let j = forms
                .iter()
                .position(|f| *f == img)
                .expect("image is nondegenerate");
            label[j] = Some(next);
        }
        next += 1;
    }
    forms
        .into_iter()
        .zip(label.into_iter().map(Option::unwrap))
        .collect()
}

fn to_form(m: &Mat, p: u64) -> HermitianForm {
    let ring = RingDescriptor::prime_field(p).unwrap();
    let rows: Vec<&[i64]> = m.iter().map(|r| r.as_slice()).collect();
    HermitianForm::plus(RingMatrix::from_ints(ring, &rows)).unwrap()
}

#[test]
fn witt_class_separates_congruence_orbits() {
    for (p, max_n) in [(3u64, 3usize), (5, 2), (7, 2)] {
        for n in 1..=max_n {
            let labelled = orbit_labels(n, p as i64);
            let classes: Vec<WittClass> = labelled
                .iter()
                .map(|(m, _)| witt_class(&to_form(m, p)).unwrap())
                .collect();
            // two orbits per dimension: determinant square class
            let orbits = labelled.iter().map(|(_, l)| *l).max().unwrap() + 1;
            assert_eq!(orbits, 2, "p={p} n={n}");
            for a in 0..labelled.len() {
                for b in (a + 1..labelled.len()).step_by(7) {
                    assert_eq!(
                        labelled[a].1 == labelled[b].1,
                        classes[a] == classes[b],
                        "p={p} n={n} {:?} {:?}",
                        labelled[a].0,
                        labelled[b].0
                    );
                }
            }
        }
    }
}

#[test]
fn hyperbolic_forms_are_zero() {
    for p in [3, 5, 7, 11, 13] {
        let r = RingDescriptor::prime_field(p).unwrap();
        for n in 1..4 {
            assert!(witt_class(&hyperbolic_form(n, 1, r)).unwrap().is_zero());
        }
    }
}

fn form_strategy(p: u64) -> impl Strategy<Value = HermitianForm> {
    (1usize..4)
        .prop_flat_map(move |n| prop::collection::vec(0..p as i64, n * n).prop_map(move |v| (n, v)))
        .prop_filter_map("degenerate", move |(n, v)| {
            let m: Mat = (0..n)
                .map(|i| (0..n).map(|j| v[i.min(j) * n + i.max(j)]).collect())
                .collect();
            (det(&m, p as i64) != 0).then(|| to_form(&m, p))
        })
}

proptest! {
    #[test]
    fn class_of_sum_is_sum_of_classes(
        (a, b) in prop::sample::select(vec![3u64, 5, 7, 13])
            .prop_flat_map(|p| (form_strategy(p), form_strategy(p))),
    ) {
        let sum = witt_class(&a.direct_sum(&b).unwrap()).unwrap();
        let expected = witt_add(&witt_class(&a).unwrap(), &witt_class(&b).unwrap()).unwrap();
        prop_assert_eq!(sum, expected);
        // q ⊕ -q is metabolic
        prop_assert!(witt_class(&a.direct_sum(&a.neg()).unwrap()).unwrap().is_zero());
        prop_assert_eq!(witt_class(&a.neg()).unwrap(), witt_class(&a).unwrap().neg());
    }
}
