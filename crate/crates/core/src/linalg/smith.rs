//! Smith normal form over the Euclidean rings `F_p` and `F_p[x^±]`.

use super::matrix::RingMatrix;
use crate::error::{Error, Result};
use crate::ring::{LaurentPolynomial, RingDescriptor};

/// `U · G · V = D` with `U`, `V` invertible and `D` diagonal, every nonzero
/// diagonal entry dividing the next one.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SmithDecomposition {
    pub u: RingMatrix,
    pub d: RingMatrix,
    pub v: RingMatrix,
}

impl SmithDecomposition {
    /// Diagonal entries of `D`.
    pub fn invariant_factors(&self) -> Vec<LaurentPolynomial> {
        let k = self.d.rows().min(self.d.cols());
        (0..k).map(|i| self.d.get(i, i).clone()).collect()
    }

    /// Rank over the fraction field.
    pub fn rank(&self) -> usize {
        self.invariant_factors()
            .iter()
            .take_while(|f| !f.is_zero())
            .count()
    }

    /// Number of invariant factors that are units.
    pub fn unit_factors(&self) -> usize {
        self.invariant_factors()
            .iter()
            .filter(|f| f.is_unit())
            .count()
    }
}

pub(crate) fn require_euclidean(ring: RingDescriptor) -> Result<()> {
    if ring.has_t() || ring.vars() > 1 {
        return Err(Error::UnsupportedRing(format!(
            "exact module decisions need F_p or F_p[x^±], got {ring}"
        )));
    }
    Ok(())
}

fn find_pivot(d: &RingMatrix, t: usize) -> Option<(usize, usize)> {
    let mut best: Option<(u32, usize, usize)> = None;
    for i in t..d.rows() {
        for j in t..d.cols() {
            if let Some(s) = d.get(i, j).spread() {
                if best.is_none_or(|(b, _, _)| s < b) {
                    best = Some((s, i, j));
                }
            }
        }
    }
    best.map(|(_, i, j)| (i, j))
}

pub fn smith_normal_form(g: &RingMatrix) -> Result<SmithDecomposition> {
    let ring = g.ring();
    require_euclidean(ring)?;
    let (m, n) = (g.rows(), g.cols());
    let mut d = g.clone();
    let mut u = RingMatrix::identity(ring, m);
    let mut v = RingMatrix::identity(ring, n);

    for t in 0..m.min(n) {
        while let Some((pi, pj)) = find_pivot(&d, t) {
            d.swap_rows(t, pi);
            u.swap_rows(t, pi);
            d.swap_cols(t, pj);
            v.swap_cols(t, pj);
            let pivot = d.get(t, t).clone();

            let mut leftover = false;
            for i in t + 1..m {
                let (q, r) = d.get(i, t).div_rem(&pivot)?;
                let q = -&q;
                d.add_row_multiple(i, t, &q);
                u.add_row_multiple(i, t, &q);
                leftover |= !r.is_zero();
            }
            for j in t + 1..n {
                let (q, r) = d.get(t, j).div_rem(&pivot)?;
                let q = -&q;
                d.add_col_multiple(j, t, &q);
                v.add_col_multiple(j, t, &q);
                leftover |= !r.is_zero();
            }
            if leftover {
                continue;
            }
            // pivot must divide the remaining block
            let offender = (t + 1..m).find(|&i| {
                (t + 1..n).any(|j| {
                    let e = d.get(i, j);
                    !e.is_zero() && !e.div_rem(&pivot).map(|(_, r)| r.is_zero()).unwrap_or(false)
                })
            });
            match offender {
                Some(i) => {
                    let one = LaurentPolynomial::one(ring);
                    d.add_row_multiple(t, i, &one);
                    u.add_row_multiple(t, i, &one);
                }
                None => break,
            }
        }
    }

    for t in 0..m.min(n) {
        let e = d.get(t, t);
        if e.is_zero() {
            continue;
        }
        let (_, unit) = e.unit_normalize()?;
        let inv = unit.inverse()?;
        d.scale_row(t, &inv);
        u.scale_row(t, &inv);
    }
    Ok(SmithDecomposition { u, d, v })
}

/// Columns generating `{v : G v = 0}`; an `n × 0` matrix when trivial.
pub fn kernel_basis(g: &RingMatrix) -> Result<RingMatrix> {
    let snf = smith_normal_form(g)?;
    let r = snf.rank();
    Ok(snf.v.columns(r..g.cols()))
}

/// Some `Y` with `G · Y = B`, or `None` if a column of `B` is outside the
/// column span of `G`.
pub fn solve(g: &RingMatrix, b: &RingMatrix) -> Result<Option<RingMatrix>> {
    if g.rows() != b.rows() {
        return Err(Error::Shape(format!(
            "solve: {} equations but right-hand side has {} rows",
            g.rows(),
            b.rows()
        )));
    }
    g.ring().check_same(&b.ring())?;
    let snf = smith_normal_form(g)?;
    let c = &snf.u * b;
    let factors = snf.invariant_factors();
    let r = snf.rank();
    let mut z = RingMatrix::zeros(g.ring(), g.cols(), b.cols());
    for col in 0..b.cols() {
        for i in 0..g.rows() {
            let ci = c.get(i, col);
            if i >= r {
                if !ci.is_zero() {
                    return Ok(None);
                }
                continue;
            }
            let (q, rem) = ci.div_rem(&factors[i])?;
            if !rem.is_zero() {
                return Ok(None);
            }
            z.set(i, col, q);
        }
    }
    Ok(Some(&snf.v * &z))
}

/// Whether every column of `h` lies in the column span of `g`.
pub fn span_contains(g: &RingMatrix, h: &RingMatrix) -> Result<bool> {
    Ok(solve(g, h)?.is_some())
}
