//! ±hermitian forms, diagonalization over `F_p` and the Witt group `W⁺(F_p)`.

use std::fmt;

use crate::error::{Error, Result};
use crate::linalg::RingMatrix;
use crate::ring::{least_non_residue, FieldElement, LaurentPolynomial, RingDescriptor};

/// A square matrix `M` with `dagger(M) = sign · M`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct HermitianForm {
    matrix: RingMatrix,
    sign: i8,
}

impl HermitianForm {
    /// Validating constructor.
    pub fn new(matrix: RingMatrix, sign: i8) -> Result<Self> {
        let form = Self::unchecked(matrix, sign)?;
        if !check_hermitian(&form) {
            return Err(Error::Form(format!(
                "matrix is not {}hermitian",
                if sign > 0 { "+" } else { "-" }
            )));
        }
        Ok(form)
    }

    /// A +hermitian form.
    pub fn plus(matrix: RingMatrix) -> Result<Self> {
        Self::new(matrix, 1)
    }

    /// Wraps a square matrix without checking the symmetry condition; see
    /// [`check_hermitian`].
    pub fn unchecked(matrix: RingMatrix, sign: i8) -> Result<Self> {
        if sign != 1 && sign != -1 {
            return Err(Error::Form(format!("sign must be ±1, got {sign}")));
        }
        if !matrix.is_square() {
            return Err(Error::Form(format!(
                "form matrix must be square, got {}x{}",
                matrix.rows(),
                matrix.cols()
            )));
        }
        Ok(HermitianForm { matrix, sign })
    }

    /// `diag(entries)` as a +hermitian form.
    pub fn diagonal(ring: RingDescriptor, entries: &[i64]) -> Self {
        let n = entries.len();
        let m = RingMatrix::from_fn(ring, n, n, |i, j| {
            LaurentPolynomial::constant(ring, if i == j { entries[i] } else { 0 })
        });
        HermitianForm { matrix: m, sign: 1 }
    }

    pub fn zero(ring: RingDescriptor, n: usize) -> Self {
        HermitianForm {
            matrix: RingMatrix::zeros(ring, n, n),
            sign: 1,
        }
    }

    pub fn matrix(&self) -> &RingMatrix {
        &self.matrix
    }

    pub fn into_matrix(self) -> RingMatrix {
        self.matrix
    }

    pub fn sign(&self) -> i8 {
        self.sign
    }

    pub fn dim(&self) -> usize {
        self.matrix.rows()
    }

    pub fn ring(&self) -> RingDescriptor {
        self.matrix.ring()
    }

    pub fn direct_sum(&self, other: &Self) -> Result<Self> {
        if self.sign != other.sign {
            return Err(Error::Form(
                "direct sum of forms with different signs".into(),
            ));
        }
        Ok(HermitianForm {
            matrix: RingMatrix::direct_sum(self.ring(), &[&self.matrix, &other.matrix])?,
            sign: self.sign,
        })
    }

    pub fn neg(&self) -> Self {
        HermitianForm {
            matrix: -&self.matrix,
            sign: self.sign,
        }
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self> {
        if self.sign != other.sign {
            return Err(Error::Form("sum of forms with different signs".into()));
        }
        Ok(HermitianForm {
            matrix: self.matrix.checked_add(&other.matrix)?,
            sign: self.sign,
        })
    }

    /// `dagger(a) · F · a`.
    pub fn congruence(&self, a: &RingMatrix) -> Result<Self> {
        let m = a.dagger().checked_mul(&self.matrix)?.checked_mul(a)?;
        Ok(HermitianForm {
            matrix: m,
            sign: self.sign,
        })
    }

    pub fn determinant(&self) -> LaurentPolynomial {
        self.matrix.det().expect("form matrices are square")
    }

    /// The determinant is a unit of the ring.
    pub fn is_nondegenerate(&self) -> bool {
        self.determinant().is_unit()
    }

    /// The form with matrix `M⁻¹` (again ±hermitian).
    pub fn inverse(&self) -> Result<Self> {
        match self.matrix.inverse() {
            Ok(m) => Ok(HermitianForm {
                matrix: m,
                sign: self.sign,
            }),
            Err(Error::NotAUnit) | Err(Error::DivisionByZero) => Err(Error::DegenerateForm),
            Err(e) => Err(e),
        }
    }

    pub fn eval_t(&self, t: FieldElement) -> Self {
        HermitianForm {
            matrix: self.matrix.eval_t(t),
            sign: self.sign,
        }
    }

    pub fn lift_t(&self) -> Self {
        HermitianForm {
            matrix: self.matrix.lift_t(),
            sign: self.sign,
        }
    }

    pub fn invariants(&self) -> FormInvariants {
        FormInvariants {
            rank_parity: (self.dim() % 2) as u8,
            determinant: self.determinant(),
        }
    }
}

/// `dagger(M) = sign · M`.
pub fn check_hermitian(form: &HermitianForm) -> bool {
    form.matrix.is_hermitian(form.sign as i64)
}

/// Invariants computable over any ring: rank parity and determinant.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FormInvariants {
    pub rank_parity: u8,
    pub determinant: LaurentPolynomial,
}

/// `[[0, I], [sign·I, 0]]` on `L ⊕ L*` of rank `2n`.
pub fn hyperbolic_form(n: usize, sign: i8, ring: RingDescriptor) -> HermitianForm {
    let id = RingMatrix::identity(ring, n);
    let z = RingMatrix::zeros(ring, n, n);
    let lower = if sign > 0 { id.clone() } else { -&id };
    let matrix = RingMatrix::from_blocks(&z, &id, &lower, &z).expect("square blocks");
    HermitianForm { matrix, sign }
}

fn require_prime_field(form: &HermitianForm) -> Result<u64> {
    let ring = form.ring();
    if !ring.is_field() {
        return Err(Error::UnsupportedRing(format!(
            "Witt classification is only decided over F_p, got {ring}"
        )));
    }
    if form.sign != 1 {
        return Err(Error::Form("expected a +hermitian form".into()));
    }
    if !check_hermitian(form) {
        return Err(Error::Form("matrix is not symmetric".into()));
    }
    Ok(ring.p())
}

/// Diagonal entries of a congruent diagonal form.
pub fn diagonalize(form: &HermitianForm) -> Result<Vec<FieldElement>> {
    let p = require_prime_field(form)?;
    let n = form.dim();
    let mut b: Vec<Vec<FieldElement>> = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| form.matrix.get(i, j).constant_term())
                .collect()
        })
        .collect();
    let mut live: Vec<usize> = (0..n).collect();
    let mut out = Vec::with_capacity(n);
    while !live.is_empty() {
        let pivot = match live.iter().position(|&i| !b[i][i].is_zero()) {
            Some(k) => live[k],
            None => {
                // all self-pairings vanish: polarize e_i ↦ e_i + e_j
                let (i, j) = live
                    .iter()
                    .flat_map(|&i| live.iter().map(move |&j| (i, j)))
                    .find(|&(i, j)| i < j && !b[i][j].is_zero())
                    .ok_or(Error::DegenerateForm)?;
                for &r in &live {
                    let v = b[r][i] + b[r][j];
                    b[r][i] = v;
                }
                for &c in &live {
                    let v = b[i][c] + b[j][c];
                    b[i][c] = v;
                }
                i
            }
        };
        let a = b[pivot][pivot];
        let a_inv = a.inv()?;
        live.retain(|&k| k != pivot);
        for &r in &live {
            for &c in &live {
                let v = b[r][c] - b[r][pivot] * b[pivot][c] * a_inv;
                b[r][c] = v;
            }
        }
        out.push(a);
    }
    debug_assert!(out.iter().all(|a| a.modulus() == p));
    Ok(out)
}

/// Element of `W⁺(F_p)`, stored as rank parity and the square class of the
/// signed discriminant `(-1)^(n(n-1)/2) · det`.
///
/// For `p ≡ 1 mod 4` the group is `Z/2 ⊕ Z/2` with componentwise addition.
/// For `p ≡ 3 mod 4` it is `Z/4`, the class with parity `r` and
/// discriminant bit `s` being `r + 2s`; `⟨1⟩ = 1`, `⟨θ⟩ = 3`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct WittClass {
    p: u64,
    rank_parity: u8,
    disc_class: u8,
}

impl WittClass {
    pub fn zero(p: u64) -> Self {
        WittClass {
            p,
            rank_parity: 0,
            disc_class: 0,
        }
    }

    /// The class of `⟨1⟩`.
    pub fn one(p: u64) -> Self {
        WittClass {
            p,
            rank_parity: 1,
            disc_class: 0,
        }
    }

    /// The class of `⟨θ⟩`.
    pub fn theta(p: u64) -> Self {
        WittClass {
            p,
            rank_parity: 1,
            disc_class: 1,
        }
    }

    pub fn from_parts(p: u64, rank_parity: u8, disc_class: u8) -> Self {
        WittClass {
            p,
            rank_parity: rank_parity & 1,
            disc_class: disc_class & 1,
        }
    }

    /// Class of the diagonal form `⟨a_1, …, a_n⟩`, all `a_i ≠ 0`.
    pub fn of_diagonal(p: u64, entries: &[FieldElement]) -> Result<Self> {
        let n = entries.len();
        let mut disc = FieldElement::new(1, p)?;
        for &a in entries {
            if a.is_zero() {
                return Err(Error::DegenerateForm);
            }
            disc = disc * a;
        }
        if (n * n.saturating_sub(1) / 2) % 2 == 1 {
            disc = -disc;
        }
        Ok(WittClass {
            p,
            rank_parity: (n % 2) as u8,
            disc_class: u8::from(!disc.is_square()?),
        })
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    pub fn rank_parity(&self) -> u8 {
        self.rank_parity
    }

    pub fn disc_class(&self) -> u8 {
        self.disc_class
    }

    pub fn is_zero(&self) -> bool {
        self.rank_parity == 0 && self.disc_class == 0
    }

    fn cyclic(&self) -> bool {
        self.p % 4 == 3
    }

    /// Position in `Z/4` (only meaningful for `p ≡ 3 mod 4`).
    fn z4(&self) -> u8 {
        self.rank_parity + 2 * self.disc_class
    }

    fn from_z4(p: u64, k: u8) -> Self {
        let k = k % 4;
        WittClass::from_parts(p, k & 1, k >> 1)
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self> {
        if self.p != other.p {
            return Err(Error::RingMismatch(format!(
                "Witt classes over F_{} and F_{}",
                self.p, other.p
            )));
        }
        Ok(if self.cyclic() {
            Self::from_z4(self.p, self.z4() + other.z4())
        } else {
            WittClass::from_parts(
                self.p,
                self.rank_parity ^ other.rank_parity,
                self.disc_class ^ other.disc_class,
            )
        })
    }

    pub fn neg(&self) -> Self {
        if self.cyclic() {
            Self::from_z4(self.p, 4 - self.z4())
        } else {
            *self
        }
    }

    pub fn checked_sub(&self, other: &Self) -> Result<Self> {
        self.checked_add(&other.neg())
    }

    /// Canonical name: `0 <1> <t> <1>+<t>` for `p ≡ 1 mod 4`, `0 1 2 3`
    /// otherwise.
    pub fn name(&self) -> String {
        if self.cyclic() {
            return self.z4().to_string();
        }
        match (self.rank_parity, self.disc_class) {
            (0, 0) => "0",
            (1, 0) => "<1>",
            (1, 1) => "<t>",
            _ => "<1>+<t>",
        }
        .to_string()
    }

    pub fn from_name(p: u64, name: &str) -> Result<Self> {
        RingDescriptor::prime_field(p)?;
        let bad = || Error::Parse(format!("unknown Witt class {name:?} for p = {p}"));
        if p % 4 == 3 {
            let k: u8 = name.parse().map_err(|_| bad())?;
            if k > 3 {
                return Err(bad());
            }
            return Ok(Self::from_z4(p, k));
        }
        match name {
            "0" => Ok(Self::zero(p)),
            "<1>" => Ok(Self::one(p)),
            "<t>" => Ok(Self::theta(p)),
            "<1>+<t>" => Ok(Self::from_parts(p, 0, 1)),
            _ => Err(bad()),
        }
    }

    /// All four elements, in canonical order.
    pub fn elements(p: u64) -> Vec<Self> {
        if p % 4 == 3 {
            (0..4).map(|k| Self::from_z4(p, k)).collect()
        } else {
            vec![
                Self::zero(p),
                Self::one(p),
                Self::theta(p),
                Self::from_parts(p, 0, 1),
            ]
        }
    }
}

impl fmt::Display for WittClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.name())
    }
}

pub fn witt_class(form: &HermitianForm) -> Result<WittClass> {
    let p = require_prime_field(form)?;
    WittClass::of_diagonal(p, &diagonalize(form)?)
}

pub fn witt_add(a: &WittClass, b: &WittClass) -> Result<WittClass> {
    a.checked_add(b)
}

/// Membership in the ideal of even-rank classes.
pub fn in_fundamental_ideal(c: &WittClass) -> bool {
    c.rank_parity == 0
}

/// The canonical non-residue `θ` as a 1×1 form.
pub fn theta_form(p: u64) -> Result<HermitianForm> {
    let ring = RingDescriptor::prime_field(p)?;
    let t = least_non_residue(p)?;
    Ok(HermitianForm::diagonal(ring, &[t.value() as i64]))
}

/// Two nondegenerate +hermitian forms of equal rank on the same module.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FormTriple {
    q0: HermitianForm,
    q1: HermitianForm,
}

impl FormTriple {
    pub fn new(q0: HermitianForm, q1: HermitianForm) -> Result<Self> {
        q0.ring().check_same(&q1.ring())?;
        if q0.dim() != q1.dim() {
            return Err(Error::Shape(format!(
                "triple forms of rank {} and {}",
                q0.dim(),
                q1.dim()
            )));
        }
        for q in [&q0, &q1] {
            if q.sign() != 1 || !check_hermitian(q) {
                return Err(Error::Form("triple entries must be +hermitian".into()));
            }
            if !q.is_nondegenerate() {
                return Err(Error::DegenerateForm);
            }
        }
        Ok(FormTriple { q0, q1 })
    }

    pub fn q0(&self) -> &HermitianForm {
        &self.q0
    }

    pub fn q1(&self) -> &HermitianForm {
        &self.q1
    }

    pub fn swapped(&self) -> Self {
        FormTriple {
            q0: self.q1.clone(),
            q1: self.q0.clone(),
        }
    }
}

/// `[L; q0, q1] ↦ [q0] − [q1]`.
pub fn triple_delta(t: &FormTriple) -> Result<WittClass> {
    witt_class(&t.q0)?.checked_sub(&witt_class(&t.q1)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn fp(p: u64) -> RingDescriptor {
        RingDescriptor::prime_field(p).unwrap()
    }

    fn squares(p: u64) -> Vec<u64> {
        (1..p).map(|x| x * x % p).collect()
    }

    #[test]
    fn hermitian_checks() {
        let r = fp(5);
        assert!(check_hermitian(&hyperbolic_form(1, 1, r)));
        assert!(check_hermitian(&hyperbolic_form(1, -1, r)));
        assert_eq!(
            hyperbolic_form(1, -1, r).matrix(),
            &RingMatrix::from_ints(r, &[&[0, 1], &[-1, 0]])
        );
        let h2 = hyperbolic_form(2, 1, r);
        assert_eq!(
            h2.matrix().submatrix(0, 2, 2, 2),
            RingMatrix::identity(r, 2)
        );
        assert_eq!(
            h2.matrix().submatrix(2, 0, 2, 2),
            RingMatrix::identity(r, 2)
        );
        let rx = RingDescriptor::laurent(5, 1).unwrap();
        let xm = RingMatrix::from_rows(rx, vec![vec![LaurentPolynomial::var(rx, 1)]]).unwrap();
        assert!(!check_hermitian(
            &HermitianForm::unchecked(xm.clone(), 1).unwrap()
        ));
        assert!(matches!(HermitianForm::plus(xm), Err(Error::Form(_))));
    }

    #[test]
    fn diagonalization_examples() {
        let r = fp(5);
        let theta = least_non_residue(5).unwrap().value() as i64;
        let d = diagonalize(&HermitianForm::diagonal(r, &[1, theta])).unwrap();
        assert_eq!(
            d.iter().map(|a| a.value()).collect::<Vec<_>>(),
            vec![1, theta as u64]
        );
        let d = diagonalize(&hyperbolic_form(1, 1, r)).unwrap();
        assert_eq!(d.len(), 2);
        // square classes of [2, 3]: the product is -1 up to squares
        let prod = (d[0] * d[1]).value();
        let target = 2 * 3 % 5;
        assert!(squares(5).iter().any(|s| s * target % 5 == prod));
        // ⟨c²a⟩ ~ ⟨a⟩
        let d = diagonalize(&HermitianForm::diagonal(r, &[4 * 2])).unwrap();
        assert_eq!(d[0].is_square().unwrap(), r.element(2).is_square().unwrap());
    }

    #[test]
    fn degenerate_and_unsupported() {
        let r = fp(7);
        assert_eq!(
            diagonalize(&HermitianForm::diagonal(r, &[1, 0])),
            Err(Error::DegenerateForm)
        );
        let rx = RingDescriptor::laurent(7, 1).unwrap();
        assert!(matches!(
            witt_class(&hyperbolic_form(1, 1, rx)),
            Err(Error::UnsupportedRing(_))
        ));
    }

    #[test]
    fn witt_examples() {
        for p in [3, 5, 7, 11, 13] {
            assert!(witt_class(&hyperbolic_form(1, 1, fp(p))).unwrap().is_zero());
            assert!(witt_class(&hyperbolic_form(3, 1, fp(p))).unwrap().is_zero());
        }
        let c = witt_class(&HermitianForm::diagonal(fp(7), &[1, 1])).unwrap();
        assert_eq!(c.name(), "2");
        assert_eq!(
            c,
            WittClass::one(7).checked_add(&WittClass::one(7)).unwrap()
        );
        let c = witt_class(&HermitianForm::diagonal(fp(5), &[1, 2])).unwrap();
        assert!(!c.is_zero() && in_fundamental_ideal(&c));
        assert_eq!(c.name(), "<1>+<t>");
    }

    #[test]
    fn group_laws() {
        assert!(WittClass::one(7)
            .checked_add(&WittClass::theta(7))
            .unwrap()
            .is_zero());
        assert!(WittClass::one(5)
            .checked_add(&WittClass::one(5))
            .unwrap()
            .is_zero());
        assert!(WittClass::theta(5)
            .checked_add(&WittClass::theta(5))
            .unwrap()
            .is_zero());
        for p in [5u64, 7] {
            for a in WittClass::elements(p) {
                assert_eq!(a.checked_add(&WittClass::zero(p)).unwrap(), a);
                assert!(a.checked_add(&a.neg()).unwrap().is_zero());
                assert_eq!(WittClass::from_name(p, &a.name()).unwrap(), a);
            }
        }
        // Z/4 table: generated by <1>
        let one = WittClass::one(7);
        let mut acc = WittClass::zero(7);
        for k in 0..8 {
            assert_eq!(acc.name(), (k % 4).to_string());
            acc = acc.checked_add(&one).unwrap();
        }
        // Z/2 ⊕ Z/2: every element has order ≤ 2
        for a in WittClass::elements(13) {
            assert!(a.checked_add(&a).unwrap().is_zero());
        }
        assert!(WittClass::one(5).checked_add(&WittClass::one(7)).is_err());
    }

    #[test]
    fn fundamental_ideal() {
        assert!(in_fundamental_ideal(&WittClass::zero(5)));
        assert!(!in_fundamental_ideal(&WittClass::one(5)));
        let c = witt_class(&HermitianForm::diagonal(fp(5), &[1, 2])).unwrap();
        assert!(in_fundamental_ideal(&c));
    }

    #[test]
    fn triples() {
        let r = fp(5);
        let q = HermitianForm::diagonal(r, &[1, 3]);
        assert!(triple_delta(&FormTriple::new(q.clone(), q).unwrap())
            .unwrap()
            .is_zero());
        let t = FormTriple::new(
            HermitianForm::diagonal(r, &[1]),
            HermitianForm::diagonal(r, &[2]),
        )
        .unwrap();
        let delta = triple_delta(&t).unwrap();
        // subtract invariants: (1,0) - (1,1) = (0,1)
        assert_eq!(delta, WittClass::from_parts(5, 0, 1));
        assert!(in_fundamental_ideal(&delta));
        assert_eq!(triple_delta(&t.swapped()).unwrap(), delta.neg());
        let t7 = FormTriple::new(
            HermitianForm::diagonal(fp(7), &[1]),
            HermitianForm::diagonal(fp(7), &[3]),
        )
        .unwrap();
        let d7 = triple_delta(&t7).unwrap();
        assert_eq!(triple_delta(&t7.swapped()).unwrap(), d7.neg());
        assert_eq!(d7.name(), "2");
        assert!(FormTriple::new(
            HermitianForm::diagonal(r, &[1]),
            HermitianForm::diagonal(r, &[0])
        )
        .is_err());
    }

    fn arb_invertible(p: u64, n: usize) -> impl Strategy<Value = RingMatrix> {
        prop::collection::vec(0i64..p as i64, n * n)
            .prop_map(move |v| {
                RingMatrix::from_fn(fp(p), n, n, |i, j| {
                    LaurentPolynomial::constant(fp(p), v[i * n + j])
                })
            })
            .prop_filter("invertible", |m| m.is_unit_matrix())
    }

    fn arb_form(p: u64, n: usize) -> impl Strategy<Value = HermitianForm> {
        prop::collection::vec(0i64..p as i64, n * n)
            .prop_map(move |v| {
                let r = fp(p);
                let m = RingMatrix::from_fn(r, n, n, |i, j| {
                    let (a, b) = (i.min(j), i.max(j));
                    LaurentPolynomial::constant(r, v[a * n + b])
                });
                HermitianForm::plus(m).unwrap()
            })
            .prop_filter("nondegenerate", |f| f.is_nondegenerate())
    }

    proptest! {
        #[test]
        fn congruence_invariance(f in arb_form(7, 3), a in arb_invertible(7, 3)) {
            let g = f.congruence(&a).unwrap();
            prop_assert_eq!(witt_class(&g).unwrap(), witt_class(&f).unwrap());
        }

        #[test]
        fn hyperbolic_stabilization(f in arb_form(5, 2)) {
            let g = f.direct_sum(&hyperbolic_form(1, 1, fp(5))).unwrap();
            prop_assert_eq!(witt_class(&g).unwrap(), witt_class(&f).unwrap());
        }

        #[test]
        fn additivity(f in arb_form(11, 2), g in arb_form(11, 1)) {
            let s = f.direct_sum(&g).unwrap();
            let expected = witt_add(&witt_class(&f).unwrap(), &witt_class(&g).unwrap()).unwrap();
            prop_assert_eq!(witt_class(&s).unwrap(), expected);
        }

        #[test]
        fn diagonal_form_is_congruent(f in arb_form(13, 3)) {
            // det changes by a square under congruence
            let d = diagonalize(&f).unwrap();
            let prod = d.iter().fold(fp(13).element(1), |acc, &a| acc * a);
            let det = f.determinant().constant_term();
            prop_assert_eq!((prod * det).is_square().unwrap(), true);
        }
    }
}
