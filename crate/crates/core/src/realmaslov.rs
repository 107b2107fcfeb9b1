//! Classical Maslov index of loops `T ↦ [P(T) : P'(T)]` in `RP¹`, via the
//! Sturm chain of `P` and the signature of a tridiagonal form.

use nalgebra::{DMatrix, SymmetricEigen};

use crate::error::{Error, Result};

/// Relative tolerance for zero tests on coefficients and values.
pub const ZERO_TOL: f64 = 1e-9;
/// Eigenvalues below `EIGEN_GUARD · ‖S‖` are treated as degenerate.
pub const EIGEN_GUARD: f64 = 1e-7;

/// Real polynomial, coefficients lowest degree first, no trailing zeros.
#[derive(Clone, Debug, PartialEq)]
pub struct RealPolynomial {
    coeffs: Vec<f64>,
}

impl RealPolynomial {
    /// Trailing coefficients below `ZERO_TOL` relative to the largest are
    /// dropped. All-zero input is rejected.
    pub fn new(coeffs: Vec<f64>) -> Result<Self> {
        if coeffs.iter().any(|c| !c.is_finite()) {
            return Err(Error::Domain("coefficients must be finite".into()));
        }
        let scale = coeffs.iter().fold(0.0f64, |m, c| m.max(c.abs()));
        if scale == 0.0 {
            return Err(Error::DegenerateInput("zero polynomial".into()));
        }
        let mut coeffs = coeffs;
        while coeffs.last().is_some_and(|c| c.abs() <= ZERO_TOL * scale) {
            coeffs.pop();
        }
        Ok(RealPolynomial { coeffs })
    }

    pub fn coefficients(&self) -> &[f64] {
        &self.coeffs
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn eval(&self, t: f64) -> f64 {
        self.coeffs.iter().rev().fold(0.0, |acc, &c| acc * t + c)
    }

    pub fn derivative(&self) -> Option<RealPolynomial> {
        let d: Vec<f64> = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(k, &c)| k as f64 * c)
            .collect();
        RealPolynomial::new(d).ok()
    }

    pub fn scale(&self, c: f64) -> RealPolynomial {
        RealPolynomial {
            coeffs: self.coeffs.iter().map(|x| x * c).collect(),
        }
    }

    fn norm(&self) -> f64 {
        self.coeffs.iter().map(|c| c.abs()).sum()
    }

    /// Quotient and remainder; the remainder is `None` when it vanishes
    /// within tolerance relative to `self`.
    fn div_rem(&self, g: &RealPolynomial) -> (RealPolynomial, Option<RealPolynomial>) {
        let mut r = self.coeffs.clone();
        let dg = g.degree();
        let lead = g.coeffs[dg];
        let qlen = r.len().saturating_sub(dg).max(1);
        let mut q = vec![0.0; qlen];
        if r.len() > dg {
            for k in (dg..r.len()).rev() {
                let c = r[k] / lead;
                q[k - dg] = c;
                for (j, &gj) in g.coeffs.iter().enumerate() {
                    r[k - dg + j] -= c * gj;
                }
            }
        }
        r.truncate(dg.max(1));
        let tol = ZERO_TOL * self.norm().max(g.norm());
        let rem = if r.iter().all(|c| c.abs() <= tol) {
            None
        } else {
            // strip negligible leading terms before normalizing
            while r.last().is_some_and(|c| c.abs() <= tol) {
                r.pop();
            }
            Some(RealPolynomial { coeffs: r })
        };
        (RealPolynomial { coeffs: q }, rem)
    }
}

/// The Sturm chain of `P` written as quotients: `P_{k-1} = q_k P_k - P_{k+1}`
/// with `P_0 = P`, `P_1 = P'`, ending in the nonzero constant `tail`.
#[derive(Clone, Debug, PartialEq)]
pub struct ResidueSequence {
    pub quotients: Vec<RealPolynomial>,
    pub tail: f64,
}

impl ResidueSequence {
    /// `M(q_1(t)) ⋯ M(q_m(t)) · (tail, 0)ᵀ` with `M(q) = [[q, -1], [1, 0]]`.
    pub fn linearization(&self, t: f64) -> (f64, f64) {
        self.quotients
            .iter()
            .rev()
            .fold((self.tail, 0.0), |(a, b), q| (q.eval(t) * a - b, a))
    }
}

pub fn sturm_residues(p: &RealPolynomial) -> Result<ResidueSequence> {
    let dp = match p.derivative() {
        Some(d) if p.degree() >= 1 => d,
        _ => return Err(Error::DegenerateInput("polynomial of degree 0".into())),
    };
    let mut quotients = Vec::new();
    let (mut prev, mut cur) = (p.clone(), dp);
    loop {
        if cur.degree() == 0 {
            let (q, _) = prev.div_rem(&cur);
            quotients.push(q);
            return Ok(ResidueSequence {
                quotients,
                tail: cur.coeffs[0],
            });
        }
        let (q, rem) = prev.div_rem(&cur);
        quotients.push(q);
        match rem {
            None => {
                return Err(Error::DegenerateInput(
                    "P and P' share a root: repeated roots".into(),
                ))
            }
            Some(r) => {
                let next = r.scale(-1.0);
                prev = cur;
                cur = next;
            }
        }
    }
}

/// Tridiagonal matrix with `q_i(t)` on the diagonal and `-1` beside it.
pub fn residue_signature_form(seq: &ResidueSequence, t: f64) -> DMatrix<f64> {
    let m = seq.quotients.len();
    DMatrix::from_fn(m, m, |i, j| {
        if i == j {
            seq.quotients[i].eval(t)
        } else if i.abs_diff(j) == 1 {
            -1.0
        } else {
            0.0
        }
    })
}

/// Signature of a real symmetric matrix by eigenvalue signs.
pub fn signature(s: &DMatrix<f64>) -> Result<i64> {
    if s.nrows() == 0 {
        return Ok(0);
    }
    let norm = s.norm();
    let eig = SymmetricEigen::new(s.clone()).eigenvalues;
    let mut sig = 0i64;
    for &l in eig.iter() {
        if l.abs() < EIGEN_GUARD * norm || norm == 0.0 {
            return Err(Error::DegenerateInput(format!(
                "eigenvalue {l:e} inside the guard band"
            )));
        }
        sig += if l > 0.0 { 1 } else { -1 };
    }
    Ok(sig)
}

fn check_endpoints(p: &RealPolynomial) -> Result<()> {
    let tol = ZERO_TOL * p.norm();
    for t in [0.0, 1.0] {
        if p.eval(t).abs() <= tol {
            return Err(Error::EndpointRoot);
        }
    }
    Ok(())
}

/// `½ sign(S(1) ⊕ -S(0))`.
pub fn real_maslov(p: &RealPolynomial) -> Result<i64> {
    check_endpoints(p)?;
    let seq = sturm_residues(p)?;
    let total = signature(&residue_signature_form(&seq, 1.0))?
        - signature(&residue_signature_form(&seq, 0.0))?;
    if total % 2 != 0 {
        return Err(Error::InternalInvariantViolation(format!(
            "odd signature {total}"
        )));
    }
    Ok(total / 2)
}

/// Largest relative deviation between `(P(t), P'(t))` and the linearization
/// over `points` equally spaced samples of `[0, 1]`.
pub fn factorization_error(p: &RealPolynomial, seq: &ResidueSequence, points: usize) -> f64 {
    let dp = p
        .derivative()
        .unwrap_or(RealPolynomial { coeffs: vec![0.0] });
    (0..points)
        .map(|i| {
            let t = if points > 1 {
                i as f64 / (points - 1) as f64
            } else {
                0.0
            };
            let (a, b) = (p.eval(t), dp.eval(t));
            let (x, y) = seq.linearization(t);
            let scale = a.hypot(b).max(f64::MIN_POSITIVE);
            (a - x).hypot(b - y) / scale
        })
        .fold(0.0, f64::max)
}

/// `4u³ - 6u² + 1` with `u = T + 1/√2`, expanded in `T`.
pub fn paper_example() -> RealPolynomial {
    let a = std::f64::consts::FRAC_1_SQRT_2;
    RealPolynomial::new(vec![2.0 * a - 2.0, 6.0 - 12.0 * a, 12.0 * a - 6.0, 4.0]).expect("nonzero")
}
