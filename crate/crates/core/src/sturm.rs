//! Sturm sequences, transversal witnesses, based loops of Lagrangians and the
//! generalized Maslov index.

use crate::error::{Error, Result};
use crate::forms::{check_hermitian, witt_class, FormInvariants, HermitianForm, WittClass};
use crate::linalg::RingMatrix;
use crate::pauli::{
    apply, elementary_unitary, same_module, CliffordUnitary, Elementary, PauliModule,
    StabilizerModule,
};
use crate::ring::{FieldElement, LaurentPolynomial, RingDescriptor};

/// `E_k = E0` for even `k`, `E1` for odd `k`.
pub fn elementary_kind(k: usize) -> Elementary {
    if k % 2 == 0 {
        Elementary::E0
    } else {
        Elementary::E1
    }
}

/// `(q_m, …, q_n)`, the `k`-th form living on `L` (even `k`) or `L*` (odd `k`).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SturmSequence {
    ring: RingDescriptor,
    n: usize,
    start: usize,
    forms: Vec<HermitianForm>,
}

impl SturmSequence {
    pub fn new(start: usize, forms: Vec<HermitianForm>) -> Result<Self> {
        let first = forms
            .first()
            .ok_or_else(|| Error::Shape("use SturmSequence::empty for no forms".into()))?;
        let (ring, n) = (first.ring(), first.dim());
        for (i, q) in forms.iter().enumerate() {
            ring.check_same(&q.ring())?;
            if q.dim() != n {
                return Err(Error::Shape(format!(
                    "form {} has rank {}, expected {n}",
                    start + i,
                    q.dim()
                )));
            }
            if q.sign() != 1 || !check_hermitian(q) {
                return Err(Error::Form(format!("form {} is not +hermitian", start + i)));
            }
        }
        if n == 0 {
            return Err(Error::Shape("forms of rank 0".into()));
        }
        Ok(SturmSequence {
            ring,
            n,
            start,
            forms,
        })
    }

    pub fn empty(ring: RingDescriptor, n: usize, start: usize) -> Self {
        SturmSequence {
            ring,
            n,
            start,
            forms: Vec::new(),
        }
    }

    pub fn ring(&self) -> RingDescriptor {
        self.ring
    }

    /// Rank `N` of every form.
    pub fn rank(&self) -> usize {
        self.n
    }

    pub fn start(&self) -> usize {
        self.start
    }

    /// Last index, `None` when empty.
    pub fn end(&self) -> Option<usize> {
        (!self.forms.is_empty()).then(|| self.start + self.forms.len() - 1)
    }

    pub fn forms(&self) -> &[HermitianForm] {
        &self.forms
    }

    pub fn len(&self) -> usize {
        self.forms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.forms.is_empty()
    }

    pub fn eval_t(&self, t: FieldElement) -> Self {
        SturmSequence {
            ring: self.ring.without_t(),
            n: self.n,
            start: self.start,
            forms: self.forms.iter().map(|q| q.eval_t(t)).collect(),
        }
    }

    pub fn lift_t(&self) -> Self {
        SturmSequence {
            ring: self.ring.with_t(),
            n: self.n,
            start: self.start,
            forms: self.forms.iter().map(HermitianForm::lift_t).collect(),
        }
    }

    /// Drops the last form.
    pub fn truncated(&self) -> Self {
        let mut out = self.clone();
        out.forms.pop();
        out
    }

    /// Appends zero forms; `E_k(0)` is the identity.
    pub fn padded(&self, extra: usize) -> Self {
        let mut out = self.clone();
        for _ in 0..extra {
            out.forms.push(HermitianForm::zero(self.ring, self.n));
        }
        out
    }

    /// Position-wise direct sum of two sequences of equal type.
    pub fn direct_sum(&self, other: &Self) -> Result<Self> {
        self.ring.check_same(&other.ring)?;
        if self.start != other.start || self.len() != other.len() {
            return Err(Error::Shape(
                "direct sum needs sequences of equal type".into(),
            ));
        }
        let forms = self
            .forms
            .iter()
            .zip(&other.forms)
            .map(|(a, b)| a.direct_sum(b))
            .collect::<Result<Vec<_>>>()?;
        Ok(SturmSequence {
            ring: self.ring,
            n: self.n + other.n,
            start: self.start,
            forms,
        })
    }
}

/// `E(q̲) = E_m(q_m) ⋯ E_n(q_n)`.
pub fn sturm_unitary(seq: &SturmSequence) -> Result<CliffordUnitary> {
    let ambient = PauliModule::new(seq.ring, seq.n)?;
    let mut u = CliffordUnitary::identity(ambient);
    for (i, q) in seq.forms.iter().enumerate() {
        let e = elementary_unitary(elementary_kind(seq.start + i), q)?;
        u = u.compose(&e)?;
    }
    Ok(u)
}

/// Block tridiagonal form with diagonal blocks `(-1)^k q_k` and identity
/// blocks beside the diagonal.
pub fn sturm_tridiagonal(seq: &SturmSequence) -> HermitianForm {
    let (ring, n) = (seq.ring, seq.n);
    let len = seq.forms.len();
    let mut m = RingMatrix::zeros(ring, len * n, len * n);
    let id = RingMatrix::identity(ring, n);
    for (i, q) in seq.forms.iter().enumerate() {
        let block = if (seq.start + i) % 2 == 0 {
            q.matrix().clone()
        } else {
            -q.matrix()
        };
        m.set_block(i * n, i * n, &block);
        if i + 1 < len {
            m.set_block(i * n, (i + 1) * n, &id);
            m.set_block((i + 1) * n, i * n, &id);
        }
    }
    HermitianForm::plus(m).expect("tridiagonal of +hermitian blocks is +hermitian")
}

/// `x_{k-1} + (-1)^k q_k x_k + x_{k+1}`.
pub fn three_term_residual(
    k: usize,
    q: &HermitianForm,
    prev: &RingMatrix,
    cur: &RingMatrix,
    next: &RingMatrix,
) -> Result<RingMatrix> {
    let mut qx = q.matrix().checked_mul(cur)?;
    if k % 2 == 1 {
        qx = -&qx;
    }
    prev.checked_add(&qx)?.checked_add(next)
}

/// `(-1)^(k-1) σ_{k-1} E_k(q_k) σ_k⁻¹ (x_k, x_{k+1})`, where `σ_j` is the
/// identity for even `j` and the matrix of `λ⁻` for odd `j`.
pub fn two_term_step(
    k: usize,
    q: &HermitianForm,
    cur: &RingMatrix,
    next: &RingMatrix,
) -> Result<(RingMatrix, RingMatrix)> {
    let ring = q.ring();
    let n = q.dim();
    let ambient = PauliModule::new(ring, n)?;
    let sigma = ambient.lambda_minus();
    let sigma_inv = -&sigma;
    let mut v = RingMatrix::vstack(ring, &[cur, next])?;
    if k % 2 == 1 {
        v = &sigma_inv * &v;
    }
    v = elementary_unitary(elementary_kind(k), q)?.matrix() * &v;
    if k % 2 == 0 {
        v = -&(&sigma * &v);
    }
    Ok((v.submatrix(0, 0, n, 1), v.submatrix(n, 0, n, 1)))
}

/// Output of [`transversal_witness`] for a sequence of type `(0, 2n)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TransversalWitness {
    /// `[[1, 0], [S(q̲′), 1]] · (L ⊕ L_{1,2n-1})`, or `L*` when `n = 0`.
    pub witness: StabilizerModule,
    /// `S(q̲′)`; empty when `n = 0`.
    pub form: HermitianForm,
    /// `E(q̲)·L ⊕ L_{1,2n-1}`.
    pub target: StabilizerModule,
}

fn require_type_0_even(seq: &SturmSequence) -> Result<usize> {
    if seq.start != 0 || seq.forms.len() % 2 == 0 {
        return Err(Error::Shape(format!(
            "expected a sequence of type (0, 2n), got start {} and {} forms",
            seq.start,
            seq.forms.len()
        )));
    }
    Ok((seq.forms.len() - 1) / 2)
}

pub fn transversal_witness(seq: &SturmSequence) -> Result<TransversalWitness> {
    let half = require_type_0_even(seq)?;
    let (ring, n) = (seq.ring, seq.n);
    let lambda = sturm_unitary(seq)?.matrix().columns(0..n);
    if half == 0 {
        let ambient = PauliModule::new(ring, n)?;
        return Ok(TransversalWitness {
            witness: ambient.dual_lagrangian(),
            form: HermitianForm::zero(ring, 0),
            target: StabilizerModule::new(ambient, lambda)?,
        });
    }
    let blocks = 2 * half;
    let big = blocks * n;
    let ambient = PauliModule::new(ring, big)?;
    let form = sturm_tridiagonal(&seq.truncated());
    let graph = RingMatrix::vstack(ring, &[&RingMatrix::identity(ring, big), form.matrix()])?;
    let mut target = RingMatrix::zeros(ring, 2 * big, big);
    // Λ in the coordinates of L_0 ⊕ L_0*
    target.set_block(0, 0, &lambda.submatrix(0, 0, n, n));
    target.set_block(big, 0, &lambda.submatrix(n, 0, n, n));
    target.set_block(n, n, &RingMatrix::identity(ring, big - n));
    Ok(TransversalWitness {
        witness: StabilizerModule::new(ambient, graph)?,
        form,
        target: StabilizerModule::new(ambient, target)?,
    })
}

/// A validated based loop: a type `(0, 2n)` sequence over `R[T]` with
/// `E(q̲)(0)·L = L = E(q̲)(1)·L`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LagrangianLoop {
    seq: SturmSequence,
}

impl LagrangianLoop {
    pub fn sequence(&self) -> &SturmSequence {
        &self.seq
    }

    pub fn rank(&self) -> usize {
        self.seq.n
    }

    /// `E(q̲)(t)·L`.
    pub fn lagrangian_at(&self, t: FieldElement) -> Result<StabilizerModule> {
        let u = sturm_unitary(&self.seq.eval_t(t))?;
        apply(&u, &u.ambient().standard_lagrangian())
    }

    /// Position-wise direct sum after padding both to the same length.
    pub fn direct_sum(&self, other: &Self) -> Result<Self> {
        let len = self.seq.len().max(other.seq.len());
        let a = self.seq.padded(len - self.seq.len());
        let b = other.seq.padded(len - other.seq.len());
        Ok(LagrangianLoop {
            seq: a.direct_sum(&b)?,
        })
    }

    /// Appends `2k` zero forms.
    pub fn stabilized(&self, k: usize) -> Self {
        LagrangianLoop {
            seq: self.seq.padded(2 * k),
        }
    }
}

/// Pads to type `(0, 2n)` with `n ≥ 1` and checks the loop condition at both
/// endpoints.
pub fn validate_loop(seq: &SturmSequence) -> Result<LagrangianLoop> {
    if seq.start != 0 {
        return Err(Error::NotALoop(format!(
            "sequence must start at index 0, starts at {}",
            seq.start
        )));
    }
    let mut seq = seq.lift_t();
    if seq.forms.len() % 2 == 0 {
        seq = seq.padded(1);
    }
    if seq.forms.len() == 1 {
        seq = seq.padded(2);
    }
    let base = seq.ring.without_t();
    for t in [0, 1] {
        let u = sturm_unitary(&seq.eval_t(base.element(t)))?;
        let at_l = if base.vars() <= 1 {
            let l = u.ambient().standard_lagrangian();
            same_module(&apply(&u, &l)?, &l)?
        } else {
            u.block(1, 0).is_zero()
        };
        if !at_l {
            return Err(Error::NotALoop(format!("E(q)({t})·L differs from L")));
        }
    }
    Ok(LagrangianLoop { seq })
}

fn require_nondegenerate_plus(q: &HermitianForm, name: &str) -> Result<()> {
    if q.sign() != 1 || !check_hermitian(q) {
        return Err(Error::Form(format!("{name} is not +hermitian")));
    }
    if q.ring().has_t() {
        return Err(Error::Domain(format!("{name} must not depend on T")));
    }
    if !q.is_nondegenerate() {
        return Err(Error::DegenerateForm);
    }
    Ok(())
}

/// The loop `l̂(q0, q1)`, encoded as the type `(0, 2)` sequence
/// `(S, Y + 1, -1)` with `S = (1-T)q0 + T q1` and
/// `Y = (T-1)q0⁻¹ - T q1⁻¹`.
///
/// `E1(1)E0(-1)` maps `L` to `L*`, so this is the path
/// `E0(S)E1(Y)·L*` read from the standard Lagrangian.
pub fn loop_from_pair(q0: &HermitianForm, q1: &HermitianForm) -> Result<LagrangianLoop> {
    require_nondegenerate_plus(q0, "q0")?;
    require_nondegenerate_plus(q1, "q1")?;
    q0.ring().check_same(&q1.ring())?;
    if q0.dim() != q1.dim() {
        return Err(Error::Shape(format!(
            "q0 has rank {}, q1 has rank {}",
            q0.dim(),
            q1.dim()
        )));
    }
    let ring = q0.ring().with_t();
    let n = q0.dim();
    let t = LaurentPolynomial::t(ring);
    let one = LaurentPolynomial::one(ring);
    let a0 = q0.lift_t();
    let a1 = q1.lift_t();
    let b0 = q0.inverse()?.lift_t();
    let b1 = q1.inverse()?.lift_t();
    let s = a0.matrix().scale(&(&one - &t)) + a1.matrix().scale(&t);
    let y = b0.matrix().scale(&(&t - &one)) - b1.matrix().scale(&t);
    let id = RingMatrix::identity(ring, n);
    let forms = vec![
        HermitianForm::plus(s)?,
        HermitianForm::plus(&y + &id)?,
        HermitianForm::plus(-&id)?,
    ];
    validate_loop(&SturmSequence::new(0, forms)?)
}

/// The Maslov index: the form `S(1) ⊕ -S(0)⁻¹` with `S(T) = S(q̲′)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MaslovResult {
    pub form: HermitianForm,
    /// Present over `F_p` only.
    pub witt: Option<WittClass>,
    pub invariants: FormInvariants,
}

pub fn maslov_index(lp: &LagrangianLoop) -> Result<MaslovResult> {
    let s = sturm_tridiagonal(&lp.seq.truncated());
    let base = lp.seq.ring.without_t();
    let s0 = s.eval_t(base.element(0));
    let s1 = s.eval_t(base.element(1));
    if !s1.is_nondegenerate() {
        return Err(Error::InternalInvariantViolation(
            "S(1) is degenerate".into(),
        ));
    }
    let s0_inv = s0
        .inverse()
        .map_err(|_| Error::InternalInvariantViolation("S(0) is degenerate".into()))?;
    let form = s1.direct_sum(&s0_inv.neg())?;
    let witt = if base.is_field() {
        Some(witt_class(&form)?)
    } else {
        None
    };
    let invariants = form.invariants();
    Ok(MaslovResult {
        form,
        witt,
        invariants,
    })
}

fn half(ring: RingDescriptor) -> FieldElement {
    ring.element(2).inv().expect("p is odd")
}

/// Congruence `e(t) = [[1, t q⁻¹], [0, 1]] · [[1, 0], [-t q/2, 1]]`; at
/// `t = 1`, `dagger(e) (q ⊕ -q⁻¹) e = λ⁺`.
pub fn trivmas_homotopy(q: &HermitianForm, t: FieldElement) -> Result<RingMatrix> {
    if q.ring().has_t() {
        return Err(Error::Domain("q must not depend on T".into()));
    }
    let ring = q.ring();
    let n = q.dim();
    let q_inv = q.inverse()?;
    let tc = LaurentPolynomial::from_field(ring, t);
    let tc_half = LaurentPolynomial::from_field(ring, t * half(ring));
    let id = RingMatrix::identity(ring, n);
    let z = RingMatrix::zeros(ring, n, n);
    let upper = RingMatrix::from_blocks(&id, &q_inv.matrix().scale(&tc), &z, &id)?;
    let lower = RingMatrix::from_blocks(&id, &z, &-&q.matrix().scale(&tc_half), &id)?;
    Ok(&upper * &lower)
}

/// `dagger(e(t)) (q ⊕ -q⁻¹) e(t)`: the five-factor path of forms.
pub fn trivmas_form(q: &HermitianForm, t: FieldElement) -> Result<HermitianForm> {
    let e = trivmas_homotopy(q, t)?;
    q.direct_sum(&q.inverse()?.neg())?.congruence(&e)
}

/// `e(t) = E0(t/2) E1(-t) E0(t) E1(-t/2)` on rank `n` blocks; the path
/// `dagger(e(t)) λ⁺ e(t)` ends at `-λ⁺`.
pub fn lambda_flip_homotopy(t: FieldElement, n: usize, ring: RingDescriptor) -> Result<RingMatrix> {
    if t.modulus() != ring.p() {
        return Err(Error::RingMismatch(format!(
            "t in F_{} for {ring}",
            t.modulus()
        )));
    }
    let scalar = |c: FieldElement| {
        HermitianForm::plus(RingMatrix::scalar(
            ring,
            n,
            &LaurentPolynomial::from_field(ring, c),
        ))
    };
    let h = half(ring);
    let word = [
        (Elementary::E0, t * h),
        (Elementary::E1, -t),
        (Elementary::E0, t),
        (Elementary::E1, -(t * h)),
    ];
    let mut e = RingMatrix::identity(ring, 2 * n);
    for (kind, c) in word {
        e = &e * elementary_unitary(kind, &scalar(c)?)?.matrix();
    }
    Ok(e)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::forms::{hyperbolic_form, in_fundamental_ideal, witt_add};
    use crate::pauli::is_transversal;

    fn fp(p: u64) -> RingDescriptor {
        RingDescriptor::prime_field(p).unwrap()
    }

    fn diag(p: u64, e: &[i64]) -> HermitianForm {
        HermitianForm::diagonal(fp(p), e)
    }

    #[test]
    fn sturm_unitaries() {
        let r = fp(5);
        assert!(sturm_unitary(&SturmSequence::empty(r, 1, 0))
            .unwrap()
            .matrix()
            .is_identity());
        let q0 = diag(5, &[2]);
        let q1 = diag(5, &[3]);
        let e = sturm_unitary(&SturmSequence::new(0, vec![q0.clone()]).unwrap()).unwrap();
        assert_eq!(e, elementary_unitary(Elementary::E0, &q0).unwrap());
        let e =
            sturm_unitary(&SturmSequence::new(0, vec![q0.clone(), q1.clone()]).unwrap()).unwrap();
        // [[1,0],[2,1]]·[[1,3],[0,1]] = [[1,3],[2,7]]
        assert_eq!(e.matrix(), &RingMatrix::from_ints(r, &[&[1, 3], &[2, 7]]));
    }

    #[test]
    fn tridiagonal_forms() {
        let r = fp(7);
        let q0 = diag(7, &[2]);
        let q1 = diag(7, &[3]);
        assert_eq!(
            sturm_tridiagonal(&SturmSequence::new(0, vec![q0.clone()]).unwrap()),
            q0
        );
        let s = sturm_tridiagonal(&SturmSequence::new(0, vec![q0, q1]).unwrap());
        assert_eq!(s.matrix(), &RingMatrix::from_ints(r, &[&[2, 1], &[1, -3]]));
        let z =
            sturm_tridiagonal(&SturmSequence::new(0, vec![diag(7, &[0]), diag(7, &[0])]).unwrap());
        assert_eq!(z, hyperbolic_form(1, 1, r));
    }

    #[test]
    fn recurrence_matches_two_term_form() {
        let r = RingDescriptor::laurent(5, 1).unwrap();
        let x = LaurentPolynomial::var(r, 1);
        let q = HermitianForm::plus(
            RingMatrix::from_rows(
                r,
                vec![
                    vec![&x + &x.involute(), LaurentPolynomial::constant(r, 2)],
                    vec![
                        LaurentPolynomial::constant(r, 2),
                        LaurentPolynomial::constant(r, 1),
                    ],
                ],
            )
            .unwrap(),
        )
        .unwrap();
        let cur = RingMatrix::column_vector(r, vec![x.clone(), LaurentPolynomial::constant(r, 3)]);
        let next = RingMatrix::column_vector(r, vec![LaurentPolynomial::constant(r, 1), x.pow(2)]);
        for k in 1..5 {
            let (prev, same) = two_term_step(k, &q, &cur, &next).unwrap();
            assert_eq!(same, cur);
            assert!(three_term_residual(k, &q, &prev, &cur, &next)
                .unwrap()
                .is_zero());
            let wrong = &prev + &cur;
            assert!(!three_term_residual(k, &q, &wrong, &cur, &next)
                .unwrap()
                .is_zero());
        }
    }

    #[test]
    fn witness_base_case_and_zero_sequence() {
        let r = fp(5);
        let w = transversal_witness(&SturmSequence::new(0, vec![diag(5, &[3])]).unwrap()).unwrap();
        assert_eq!(w.form.dim(), 0);
        assert!(is_transversal(&w.witness, &w.target).unwrap());
        let zeros = SturmSequence::new(0, vec![diag(5, &[0]); 3]).unwrap();
        let w = transversal_witness(&zeros).unwrap();
        assert_eq!(w.form, hyperbolic_form(1, 1, r));
        assert!(is_transversal(&w.witness, &w.target).unwrap());
    }

    #[test]
    fn witness_for_all_small_sequences() {
        // every (q0, q1, q2) over F_3 with N = 1
        for a in 0..3 {
            for b in 0..3 {
                for c in 0..3 {
                    let seq =
                        SturmSequence::new(0, vec![diag(3, &[a]), diag(3, &[b]), diag(3, &[c])])
                            .unwrap();
                    let w = transversal_witness(&seq).unwrap();
                    assert!(
                        is_transversal(&w.witness, &w.target).unwrap(),
                        "{a} {b} {c}"
                    );
                }
            }
        }
    }

    #[test]
    fn loop_validation() {
        let r = fp(5);
        let constant = SturmSequence::new(0, vec![diag(5, &[0]); 3]).unwrap();
        let lp = validate_loop(&constant).unwrap();
        assert!(maslov_index(&lp).unwrap().witt.unwrap().is_zero());
        // E1(q) is upper triangular and fixes L; the graph of q is E0(q)·L
        let upper =
            SturmSequence::new(0, vec![diag(5, &[0]), diag(5, &[2]), diag(5, &[0])]).unwrap();
        assert!(validate_loop(&upper).is_ok());
        let bad = SturmSequence::new(0, vec![diag(5, &[2]), diag(5, &[0]), diag(5, &[0])]).unwrap();
        assert!(matches!(validate_loop(&bad), Err(Error::NotALoop(_))));
        let lp = validate_loop(&SturmSequence::new(0, vec![diag(5, &[0])]).unwrap()).unwrap();
        assert_eq!(lp.sequence().len(), 3);
        let l = lp.lagrangian_at(r.element(1)).unwrap();
        assert!(same_module(&l, &PauliModule::new(r, 1).unwrap().standard_lagrangian()).unwrap());
    }

    #[test]
    fn pair_loops() {
        let p = 5;
        let q = diag(p, &[1]);
        let lp = loop_from_pair(&q, &q).unwrap();
        assert!(maslov_index(&lp).unwrap().witt.unwrap().is_zero());
        let h = hyperbolic_form(1, 1, fp(p));
        assert!(maslov_index(&loop_from_pair(&h, &h).unwrap())
            .unwrap()
            .witt
            .unwrap()
            .is_zero());
        let q1 = diag(p, &[2]);
        let m = maslov_index(&loop_from_pair(&q, &q1).unwrap())
            .unwrap()
            .witt
            .unwrap();
        let expected = witt_class(&diag(p, &[2, -1])).unwrap();
        assert_eq!(m, expected);
        assert!(!m.is_zero() && in_fundamental_ideal(&m));
        assert!(matches!(
            loop_from_pair(&q, &diag(p, &[0])),
            Err(Error::DegenerateForm)
        ));
    }

    #[test]
    fn pair_loops_over_laurent_ring() {
        let r = RingDescriptor::laurent(7, 1).unwrap();
        let x = LaurentPolynomial::var(r, 1);
        let q0 = HermitianForm::diagonal(r, &[1]);
        let q1 = HermitianForm::plus(
            RingMatrix::from_rows(
                r,
                vec![
                    vec![LaurentPolynomial::zero(r), x.clone()],
                    vec![x.involute(), LaurentPolynomial::zero(r)],
                ],
            )
            .unwrap(),
        )
        .unwrap();
        assert!(q1.is_nondegenerate());
        let _ = q0;
        let lp = loop_from_pair(&q1, &q1).unwrap();
        let m = maslov_index(&lp).unwrap();
        assert!(m.witt.is_none());
        assert_eq!(m.invariants.rank_parity, 0);
    }

    #[test]
    fn stabilization_and_sums() {
        let p = 7;
        let a = loop_from_pair(&diag(p, &[1]), &diag(p, &[3])).unwrap();
        let b = loop_from_pair(&diag(p, &[2, 1]), &diag(p, &[1, 1])).unwrap();
        let ma = maslov_index(&a).unwrap().witt.unwrap();
        let mb = maslov_index(&b).unwrap().witt.unwrap();
        assert_eq!(maslov_index(&a.stabilized(2)).unwrap().witt.unwrap(), ma);
        let sum = a.direct_sum(&b).unwrap();
        assert_eq!(
            maslov_index(&sum).unwrap().witt.unwrap(),
            witt_add(&ma, &mb).unwrap()
        );
        let constant =
            validate_loop(&SturmSequence::new(0, vec![diag(p, &[0, 0]); 5]).unwrap()).unwrap();
        assert_eq!(
            maslov_index(&a.direct_sum(&constant).unwrap())
                .unwrap()
                .witt
                .unwrap(),
            ma
        );
    }

    #[test]
    fn trivmas_congruence() {
        for (p, v) in [(5, 1), (7, 2)] {
            let r = fp(p);
            let q = diag(p, &[v]);
            assert!(trivmas_homotopy(&q, r.element(0)).unwrap().is_identity());
            let e = trivmas_homotopy(&q, r.element(1)).unwrap();
            let f = q.direct_sum(&q.inverse().unwrap().neg()).unwrap();
            assert_eq!(f.congruence(&e).unwrap(), hyperbolic_form(1, 1, r));
            assert_eq!(
                trivmas_form(&q, r.element(1)).unwrap(),
                hyperbolic_form(1, 1, r)
            );
            for t in 0..p as i64 {
                assert!(trivmas_homotopy(&q, r.element(t)).unwrap().is_unit_matrix());
            }
        }
    }

    #[test]
    fn lambda_flip() {
        for n in [1, 2] {
            let r = fp(5);
            assert!(lambda_flip_homotopy(r.element(0), n, r)
                .unwrap()
                .is_identity());
            let e = lambda_flip_homotopy(r.element(1), n, r).unwrap();
            let h = hyperbolic_form(n, 1, r);
            assert_eq!(h.congruence(&e).unwrap(), h.neg());
        }
    }
}
