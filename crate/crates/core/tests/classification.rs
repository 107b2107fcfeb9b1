use maslovkit::forms::in_fundamental_ideal;
use maslovkit::lgroups::*;
use maslovkit::sample;
use maslovkit::sturm::{loop_from_pair, maslov_index};
use rand::rngs::StdRng;
use rand::SeedableRng;

fn g(s: &str) -> FiniteAbelianGroup {
    FiniteAbelianGroup::parse(s).unwrap()
}

#[test]
fn loop_classification_table() {
    for p in [3u64, 5, 7, 11, 13, 17, 19] {
        for d in 0..4 {
            assert!(classify_loops(d, p).unwrap().is_trivial());
        }
        let expected = if p % 4 == 1 { g("Z/2+Z/2") } else { g("Z/4") };
        assert_eq!(classify_loops(4, p).unwrap(), expected, "p={p}");
    }
}

#[test]
fn orders_follow_binomial_unrolling() {
    for p in [3u64, 5] {
        let w = witt_group(p).unwrap().order();
        for d in 0..=6u32 {
            for n in 0..4u32 {
                let copies: u32 = (0..=d)
                    .filter(|k| k % 4 == n)
                    .map(|k| {
                        let mut c = 1u64;
                        for i in 0..k {
                            c = c * (d - i) as u64 / (i + 1) as u64;
                        }
                        c as u32
                    })
                    .sum();
                assert_eq!(lgroup(n as i64, d, p).unwrap().order(), w.pow(copies));
            }
        }
        assert_eq!(lgroup(0, 4, p).unwrap().order(), 16);
    }
}

#[test]
fn zero_dimensional_maslov_lands_in_the_ideal() {
    let mut rng = StdRng::seed_from_u64(11);
    for p in [3u64, 5, 7] {
        let ideal = fundamental_ideal_group(0, p).unwrap();
        assert_eq!(ideal, g("Z/2"));
        for _ in 0..20 {
            let q0 = sample::nondegenerate_form(&mut rng, p, 2);
            let q1 = sample::nondegenerate_form(&mut rng, p, 2);
            let w = maslov_index(&loop_from_pair(&q0, &q1).unwrap())
                .unwrap()
                .witt
                .unwrap();
            assert!(in_fundamental_ideal(&w));
        }
    }
}

#[test]
fn table_rows() {
    let t = classification_table(13, 4).unwrap();
    assert_eq!(t.p_mod_4, 1);
    let last = t.classification.last().unwrap();
    assert_eq!(last.loops, g("Z/2+Z/2"));
    assert_eq!(last.fundamental_ideal, g("Z/2+Z/2+Z/2"));
    assert_eq!(last.provenance, Provenance::Theorem);
    assert!(t.lgroups.iter().all(|r| r.validated));
}
