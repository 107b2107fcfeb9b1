//! The Pauli module `L ⊕ L*`, stabilizer submodules and λ⁻-unitaries.

use crate::error::{Error, Result};
use crate::forms::{check_hermitian, hyperbolic_form, HermitianForm};
use crate::linalg::{
    kernel_basis, require_euclidean, smith_normal_form, span_contains, RingMatrix,
};
use crate::ring::{FieldElement, LaurentPolynomial, RingDescriptor};

/// `(R^N) ⊕ (R^N)*` with the anti-hermitian pairing `λ⁻`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct PauliModule {
    ring: RingDescriptor,
    n: usize,
}

impl PauliModule {
    pub fn new(ring: RingDescriptor, n: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::Shape("a Pauli module needs N >= 1".into()));
        }
        Ok(PauliModule { ring, n })
    }

    pub fn ring(&self) -> RingDescriptor {
        self.ring
    }

    /// Number of qudit species per site.
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn rank(&self) -> usize {
        2 * self.n
    }

    /// The matrix `[[0, I], [-I, 0]]`.
    pub fn lambda_minus(&self) -> RingMatrix {
        hyperbolic_form(self.n, -1, self.ring).into_matrix()
    }

    /// `L`: the first `N` coordinates.
    pub fn standard_lagrangian(&self) -> StabilizerModule {
        let g = RingMatrix::vstack(
            self.ring,
            &[
                &RingMatrix::identity(self.ring, self.n),
                &RingMatrix::zeros(self.ring, self.n, self.n),
            ],
        )
        .expect("same widths");
        StabilizerModule {
            ambient: *self,
            generators: g,
        }
    }

    /// `L*`: the last `N` coordinates.
    pub fn dual_lagrangian(&self) -> StabilizerModule {
        let g = RingMatrix::vstack(
            self.ring,
            &[
                &RingMatrix::zeros(self.ring, self.n, self.n),
                &RingMatrix::identity(self.ring, self.n),
            ],
        )
        .expect("same widths");
        StabilizerModule {
            ambient: *self,
            generators: g,
        }
    }

    pub fn full(&self) -> StabilizerModule {
        StabilizerModule {
            ambient: *self,
            generators: RingMatrix::identity(self.ring, self.rank()),
        }
    }

    fn check_vector(&self, v: &RingMatrix) -> Result<()> {
        if v.rows() != self.rank() || v.cols() != 1 {
            return Err(Error::Shape(format!(
                "expected a {}x1 column, got {}x{}",
                self.rank(),
                v.rows(),
                v.cols()
            )));
        }
        self.ring.check_same(&v.ring())
    }

    fn ambient_of(matrix: &RingMatrix) -> Result<Self> {
        if !matrix.is_square() || matrix.rows() % 2 != 0 {
            return Err(Error::Shape(format!(
                "expected a 2N x 2N matrix, got {}x{}",
                matrix.rows(),
                matrix.cols()
            )));
        }
        Self::new(matrix.ring(), matrix.rows() / 2)
    }
}

/// Submodule of the Pauli module given by generator columns.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StabilizerModule {
    ambient: PauliModule,
    generators: RingMatrix,
}

impl StabilizerModule {
    /// Zero columns are dropped.
    pub fn new(ambient: PauliModule, generators: RingMatrix) -> Result<Self> {
        if generators.rows() != ambient.rank() {
            return Err(Error::Shape(format!(
                "generators have {} rows, ambient rank is {}",
                generators.rows(),
                ambient.rank()
            )));
        }
        ambient.ring.check_same(&generators.ring())?;
        let keep: Vec<usize> = (0..generators.cols())
            .filter(|&j| !generators.column(j).is_zero())
            .collect();
        let generators = if keep.len() == generators.cols() {
            generators
        } else {
            RingMatrix::from_fn(ambient.ring, generators.rows(), keep.len(), |i, j| {
                generators.get(i, keep[j]).clone()
            })
        };
        Ok(StabilizerModule {
            ambient,
            generators,
        })
    }

    /// Module generated by the given columns.
    pub fn from_columns(ambient: PauliModule, columns: &[RingMatrix]) -> Result<Self> {
        let refs: Vec<&RingMatrix> = columns.iter().collect();
        let g = if refs.is_empty() {
            RingMatrix::zeros(ambient.ring, ambient.rank(), 0)
        } else {
            RingMatrix::hstack(ambient.ring, &refs)?
        };
        Self::new(ambient, g)
    }

    pub fn ambient(&self) -> PauliModule {
        self.ambient
    }

    pub fn generators(&self) -> &RingMatrix {
        &self.generators
    }

    pub fn eval_t(&self, t: FieldElement) -> Self {
        StabilizerModule {
            ambient: PauliModule {
                ring: self.ambient.ring.without_t(),
                n: self.ambient.n,
            },
            generators: self.generators.eval_t(t),
        }
    }

    fn gram(&self) -> RingMatrix {
        &(&self.generators.dagger() * &self.ambient.lambda_minus()) * &self.generators
    }
}

/// Checks `dagger(M) · λ⁻ · M = λ⁻` at construction.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CliffordUnitary {
    ambient: PauliModule,
    matrix: RingMatrix,
}

impl CliffordUnitary {
    pub fn new(matrix: RingMatrix) -> Result<Self> {
        let ambient = PauliModule::ambient_of(&matrix)?;
        let lm = ambient.lambda_minus();
        if &(&matrix.dagger() * &lm) * &matrix != lm {
            return Err(Error::NotUnitary("dagger(M) λ⁻ M differs from λ⁻".into()));
        }
        Ok(CliffordUnitary { ambient, matrix })
    }

    pub fn identity(ambient: PauliModule) -> Self {
        CliffordUnitary {
            ambient,
            matrix: RingMatrix::identity(ambient.ring, ambient.rank()),
        }
    }

    pub fn ambient(&self) -> PauliModule {
        self.ambient
    }

    pub fn matrix(&self) -> &RingMatrix {
        &self.matrix
    }

    /// `self · other`: apply `other` first.
    pub fn compose(&self, other: &Self) -> Result<Self> {
        if self.ambient != other.ambient {
            return Err(Error::Shape("unitaries on different Pauli modules".into()));
        }
        Ok(CliffordUnitary {
            ambient: self.ambient,
            matrix: self.matrix.checked_mul(&other.matrix)?,
        })
    }

    /// `M⁻¹ = -λ⁻ · dagger(M) · λ⁻`.
    pub fn inverse(&self) -> Self {
        let lm = self.ambient.lambda_minus();
        CliffordUnitary {
            ambient: self.ambient,
            matrix: -&(&(&lm * &self.matrix.dagger()) * &lm),
        }
    }

    pub fn eval_t(&self, t: FieldElement) -> Self {
        CliffordUnitary {
            ambient: PauliModule {
                ring: self.ambient.ring.without_t(),
                n: self.ambient.n,
            },
            matrix: self.matrix.eval_t(t),
        }
    }

    /// The `N × N` block at block position `(i, j)`, `i, j ∈ {0, 1}`.
    pub fn block(&self, i: usize, j: usize) -> RingMatrix {
        let n = self.ambient.n;
        self.matrix.submatrix(i * n, j * n, n, n)
    }
}

/// `dagger(v) · λ⁻ · w`.
pub fn pairing(v: &RingMatrix, w: &RingMatrix) -> Result<LaurentPolynomial> {
    if v.rows() % 2 != 0 || v.rows() == 0 {
        return Err(Error::Shape(format!("vector of odd length {}", v.rows())));
    }
    let ambient = PauliModule::new(v.ring(), v.rows() / 2)?;
    ambient.check_vector(v)?;
    ambient.check_vector(w)?;
    let s = v
        .dagger()
        .checked_mul(&ambient.lambda_minus())?
        .checked_mul(w)?;
    Ok(s.get(0, 0).clone())
}

/// Exponent of `ω` in the group commutator of the two Pauli operators.
pub fn commutation_phase(v: &RingMatrix, w: &RingMatrix) -> Result<FieldElement> {
    pairing(v, w)?.augment()
}

pub fn is_isotropic(s: &StabilizerModule) -> bool {
    s.gram().is_zero()
}

/// `S⊥ ⊂ S`.
pub fn is_coisotropic(s: &StabilizerModule) -> Result<bool> {
    require_euclidean(s.ambient.ring)?;
    let constraints = &s.generators.dagger() * &s.ambient.lambda_minus();
    let perp = kernel_basis(&constraints)?;
    if perp.cols() == 0 {
        return Ok(true);
    }
    if s.generators.cols() == 0 {
        return Ok(false);
    }
    span_contains(&s.generators, &perp)
}

/// The column span is a direct summand: every nonzero invariant factor is a
/// unit.
pub fn is_direct_summand(s: &StabilizerModule) -> Result<bool> {
    require_euclidean(s.ambient.ring)?;
    if s.generators.cols() == 0 {
        return Ok(true);
    }
    let snf = smith_normal_form(&s.generators)?;
    Ok(snf.unit_factors() == snf.rank())
}

fn span_rank(g: &RingMatrix) -> Result<usize> {
    if g.cols() == 0 {
        return Ok(0);
    }
    Ok(smith_normal_form(g)?.rank())
}

/// The four booleans reported by `lagrangian check`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct LagrangianReport {
    pub isotropic: bool,
    pub coisotropic: bool,
    pub summand: bool,
    pub lagrangian: bool,
}

pub fn lagrangian_report(s: &StabilizerModule) -> Result<LagrangianReport> {
    require_euclidean(s.ambient.ring)?;
    let isotropic = is_isotropic(s);
    let coisotropic = is_coisotropic(s)?;
    let summand = is_direct_summand(s)?;
    let rank_ok = span_rank(&s.generators)? == s.ambient.n;
    Ok(LagrangianReport {
        isotropic,
        coisotropic,
        summand,
        lagrangian: isotropic && coisotropic && summand && rank_ok,
    })
}

pub fn is_lagrangian(s: &StabilizerModule) -> Result<bool> {
    Ok(lagrangian_report(s)?.lagrangian)
}

/// `S1 + S2` is the whole Pauli module.
pub fn is_transversal(s1: &StabilizerModule, s2: &StabilizerModule) -> Result<bool> {
    if s1.ambient != s2.ambient {
        return Err(Error::Shape("modules in different Pauli modules".into()));
    }
    require_euclidean(s1.ambient.ring)?;
    let g = RingMatrix::hstack(s1.ambient.ring, &[&s1.generators, &s2.generators])?;
    if g.cols() == 0 {
        return Ok(false);
    }
    Ok(smith_normal_form(&g)?.unit_factors() == s1.ambient.rank())
}

/// Equal column spans (mutual containment).
pub fn same_module(s1: &StabilizerModule, s2: &StabilizerModule) -> Result<bool> {
    if s1.ambient != s2.ambient {
        return Err(Error::Shape("modules in different Pauli modules".into()));
    }
    require_euclidean(s1.ambient.ring)?;
    let contains = |a: &StabilizerModule, b: &StabilizerModule| -> Result<bool> {
        if b.generators.cols() == 0 {
            return Ok(true);
        }
        if a.generators.cols() == 0 {
            return Ok(false);
        }
        span_contains(&a.generators, &b.generators)
    };
    Ok(contains(s1, s2)? && contains(s2, s1)?)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Elementary {
    E0,
    E1,
}

/// `E0(q) = [[1, 0], [q, 1]]`, `E1(q) = [[1, q], [0, 1]]`.
pub fn elementary_unitary(which: Elementary, q: &HermitianForm) -> Result<CliffordUnitary> {
    if q.sign() != 1 || !check_hermitian(q) {
        return Err(Error::Form(
            "elementary unitaries need a +hermitian form".into(),
        ));
    }
    let ring = q.ring();
    let n = q.dim();
    let ambient = PauliModule::new(ring, n)?;
    let id = RingMatrix::identity(ring, n);
    let z = RingMatrix::zeros(ring, n, n);
    let matrix = match which {
        Elementary::E0 => RingMatrix::from_blocks(&id, &z, q.matrix(), &id)?,
        Elementary::E1 => RingMatrix::from_blocks(&id, q.matrix(), &z, &id)?,
    };
    Ok(CliffordUnitary { ambient, matrix })
}

/// `diag(a, dagger(a)⁻¹)`.
pub fn hyperbolic_unitary(a: &RingMatrix) -> Result<CliffordUnitary> {
    if !a.is_square() {
        return Err(Error::Shape("hyperbolic map needs a square matrix".into()));
    }
    if !a.is_unit_matrix() {
        return Err(Error::NotAUnit);
    }
    let ring = a.ring();
    let n = a.rows();
    let ambient = PauliModule::new(ring, n)?;
    let matrix = RingMatrix::direct_sum(ring, &[a, &a.dagger().inverse()?])?;
    Ok(CliffordUnitary { ambient, matrix })
}

pub fn apply(u: &CliffordUnitary, s: &StabilizerModule) -> Result<StabilizerModule> {
    if u.ambient != s.ambient {
        return Err(Error::Shape(format!(
            "unitary on rank {} module applied to rank {} module",
            u.ambient.rank(),
            s.ambient.rank()
        )));
    }
    StabilizerModule::new(s.ambient, u.matrix.checked_mul(&s.generators)?)
}

/// Six block-elementary factors whose product is `diag(a, a⁻¹)`:
///
/// `[[1,a],[0,1]] [[1,0],[-a⁻¹,1]] [[1,a],[0,1]] [[1,0],[1,1]] [[1,-1],[0,1]] [[1,0],[1,1]]`.
///
/// The factors built from `a` are λ⁻-unitary only when `a` is hermitian, so
/// they are returned as plain matrices.
pub fn diag_identity_decomposition(a: &RingMatrix) -> Result<Vec<RingMatrix>> {
    if !a.is_square() {
        return Err(Error::Shape(
            "diagonal identity needs a square matrix".into(),
        ));
    }
    let a_inv = a.inverse()?;
    let ring = a.ring();
    let n = a.rows();
    let id = RingMatrix::identity(ring, n);
    let z = RingMatrix::zeros(ring, n, n);
    let upper = |b: &RingMatrix| RingMatrix::from_blocks(&id, b, &z, &id);
    let lower = |b: &RingMatrix| RingMatrix::from_blocks(&id, &z, b, &id);
    Ok(vec![
        upper(a)?,
        lower(&-&a_inv)?,
        upper(a)?,
        lower(&id)?,
        upper(&-&id)?,
        lower(&id)?,
    ])
}

/// One gate of a Clifford circuit.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Gate {
    E0(HermitianForm),
    E1(HermitianForm),
    H(RingMatrix),
}

impl Gate {
    pub fn unitary(&self) -> Result<CliffordUnitary> {
        match self {
            Gate::E0(q) => elementary_unitary(Elementary::E0, q),
            Gate::E1(q) => elementary_unitary(Elementary::E1, q),
            Gate::H(a) => hyperbolic_unitary(a),
        }
    }
}

/// Gates applied in list order: the first gate acts first.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Circuit {
    pub gates: Vec<Gate>,
}

impl Circuit {
    pub fn new(gates: Vec<Gate>) -> Self {
        Circuit { gates }
    }

    /// `U = g_k ⋯ g_1`.
    pub fn unitary(&self, ambient: PauliModule) -> Result<CliffordUnitary> {
        let mut u = CliffordUnitary::identity(ambient);
        for g in &self.gates {
            u = g.unitary()?.compose(&u)?;
        }
        Ok(u)
    }

    pub fn apply(&self, s: &StabilizerModule) -> Result<StabilizerModule> {
        apply(&self.unitary(s.ambient())?, s)
    }
}
