use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use crate::error::{Error, Result};
use crate::ring::{FieldElement, LaurentPolynomial, RingDescriptor};

/// Dense matrix over a Laurent ring, stored row-major.
///
/// Zero-sized dimensions are allowed so that an empty kernel or an empty
/// block has a representation.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct RingMatrix {
    ring: RingDescriptor,
    rows: usize,
    cols: usize,
    entries: Vec<LaurentPolynomial>,
}

impl RingMatrix {
    pub fn zeros(ring: RingDescriptor, rows: usize, cols: usize) -> Self {
        RingMatrix {
            ring,
            rows,
            cols,
            entries: vec![LaurentPolynomial::zero(ring); rows * cols],
        }
    }

    pub fn identity(ring: RingDescriptor, n: usize) -> Self {
        Self::scalar(ring, n, &LaurentPolynomial::one(ring))
    }

    /// `c · I_n`.
    pub fn scalar(ring: RingDescriptor, n: usize, c: &LaurentPolynomial) -> Self {
        let mut m = Self::zeros(ring, n, n);
        for i in 0..n {
            m.set(i, i, c.clone());
        }
        m
    }

    pub fn from_fn<F>(ring: RingDescriptor, rows: usize, cols: usize, mut f: F) -> Self
    where
        F: FnMut(usize, usize) -> LaurentPolynomial,
    {
        let mut entries = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                let e = f(i, j);
                assert_eq!(e.ring(), ring, "entry from another ring");
                entries.push(e);
            }
        }
        RingMatrix {
            ring,
            rows,
            cols,
            entries,
        }
    }

    pub fn from_rows(ring: RingDescriptor, rows: Vec<Vec<LaurentPolynomial>>) -> Result<Self> {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        let mut entries = Vec::with_capacity(r * c);
        for row in rows {
            if row.len() != c {
                return Err(Error::Shape("ragged rows".into()));
            }
            for e in row {
                ring.check_same(&e.ring())?;
                entries.push(e);
            }
        }
        Ok(RingMatrix {
            ring,
            rows: r,
            cols: c,
            entries,
        })
    }

    /// Constant matrix from integer rows.
    pub fn from_ints(ring: RingDescriptor, rows: &[&[i64]]) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, |row| row.len());
        Self::from_fn(ring, r, c, |i, j| {
            LaurentPolynomial::constant(ring, rows[i][j])
        })
    }

    /// Column vector.
    pub fn column_vector(ring: RingDescriptor, v: Vec<LaurentPolynomial>) -> Self {
        let n = v.len();
        let mut it = v.into_iter();
        Self::from_fn(ring, n, 1, |_, _| it.next().unwrap())
    }

    pub fn ring(&self) -> RingDescriptor {
        self.ring
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &LaurentPolynomial {
        assert!(
            i < self.rows && j < self.cols,
            "index ({i},{j}) out of range"
        );
        &self.entries[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, value: LaurentPolynomial) {
        assert!(
            i < self.rows && j < self.cols,
            "index ({i},{j}) out of range"
        );
        assert_eq!(value.ring(), self.ring, "entry from another ring");
        self.entries[i * self.cols + j] = value;
    }

    pub fn entries(&self) -> impl Iterator<Item = &LaurentPolynomial> {
        self.entries.iter()
    }

    pub fn to_rows(&self) -> Vec<Vec<LaurentPolynomial>> {
        (0..self.rows)
            .map(|i| self.entries[i * self.cols..(i + 1) * self.cols].to_vec())
            .collect()
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(LaurentPolynomial::is_zero)
    }

    pub fn is_identity(&self) -> bool {
        *self == Self::identity(self.ring, self.rows)
    }

    fn map<F: Fn(&LaurentPolynomial) -> LaurentPolynomial>(
        &self,
        ring: RingDescriptor,
        f: F,
    ) -> Self {
        RingMatrix {
            ring,
            rows: self.rows,
            cols: self.cols,
            entries: self.entries.iter().map(f).collect(),
        }
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.ring, self.cols, self.rows, |i, j| {
            self.get(j, i).clone()
        })
    }

    /// Transpose with the involution applied entrywise.
    pub fn dagger(&self) -> Self {
        Self::from_fn(self.ring, self.cols, self.rows, |i, j| {
            self.get(j, i).involute()
        })
    }

    pub fn eval_t(&self, t: FieldElement) -> Self {
        self.map(self.ring.without_t(), |e| e.eval_t(t))
    }

    pub fn lift_t(&self) -> Self {
        self.map(self.ring.with_t(), LaurentPolynomial::lift_t)
    }

    pub fn scale(&self, c: &LaurentPolynomial) -> Self {
        self.map(self.ring, |e| e * c)
    }

    pub fn scale_int(&self, c: i64) -> Self {
        self.map(self.ring, |e| e.scale_int(c))
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self> {
        self.ring.check_same(&other.ring)?;
        if (self.rows, self.cols) != (other.rows, other.cols) {
            return Err(Error::Shape(format!(
                "cannot add {}x{} and {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let entries = self
            .entries
            .iter()
            .zip(&other.entries)
            .map(|(a, b)| a + b)
            .collect();
        Ok(RingMatrix {
            entries,
            ..self.clone()
        })
    }

    pub fn checked_sub(&self, other: &Self) -> Result<Self> {
        self.checked_add(&-other)
    }

    pub fn checked_mul(&self, other: &Self) -> Result<Self> {
        if self.ring != other.ring {
            return Err(Error::Shape(format!(
                "ring mismatch in product: {} vs {}",
                self.ring, other.ring
            )));
        }
        if self.cols != other.rows {
            return Err(Error::Shape(format!(
                "cannot multiply {}x{} by {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let mut out = Self::zeros(self.ring, self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = other.get(k, j);
                    if b.is_zero() {
                        continue;
                    }
                    let idx = i * other.cols + j;
                    out.entries[idx] = &out.entries[idx] + &(a * b);
                }
            }
        }
        Ok(out)
    }

    /// The `nr × nc` block starting at `(r0, c0)`.
    pub fn submatrix(&self, r0: usize, c0: usize, nr: usize, nc: usize) -> Self {
        assert!(
            r0 + nr <= self.rows && c0 + nc <= self.cols,
            "block out of range"
        );
        Self::from_fn(self.ring, nr, nc, |i, j| self.get(r0 + i, c0 + j).clone())
    }

    pub fn column(&self, j: usize) -> Self {
        self.submatrix(0, j, self.rows, 1)
    }

    pub fn columns(&self, range: std::ops::Range<usize>) -> Self {
        self.submatrix(0, range.start, self.rows, range.len())
    }

    /// Writes `block` into `self` with its top-left corner at `(r0, c0)`.
    pub fn set_block(&mut self, r0: usize, c0: usize, block: &RingMatrix) {
        for i in 0..block.rows {
            for j in 0..block.cols {
                self.set(r0 + i, c0 + j, block.get(i, j).clone());
            }
        }
    }

    pub fn hstack(ring: RingDescriptor, parts: &[&RingMatrix]) -> Result<Self> {
        let rows = parts.first().map_or(0, |m| m.rows);
        let mut cols = 0;
        for m in parts {
            ring.check_same(&m.ring)?;
            if m.rows != rows {
                return Err(Error::Shape("hstack: row counts differ".into()));
            }
            cols += m.cols;
        }
        let mut out = Self::zeros(ring, rows, cols);
        let mut c0 = 0;
        for m in parts {
            out.set_block(0, c0, m);
            c0 += m.cols;
        }
        Ok(out)
    }

    pub fn vstack(ring: RingDescriptor, parts: &[&RingMatrix]) -> Result<Self> {
        let transposed: Vec<RingMatrix> = parts.iter().map(|m| m.transpose()).collect();
        let refs: Vec<&RingMatrix> = transposed.iter().collect();
        Ok(Self::hstack(ring, &refs)?.transpose())
    }

    /// `[[a, b], [c, d]]` from four blocks of compatible shapes.
    pub fn from_blocks(a: &Self, b: &Self, c: &Self, d: &Self) -> Result<Self> {
        let ring = a.ring;
        let top = Self::hstack(ring, &[a, b])?;
        let bottom = Self::hstack(ring, &[c, d])?;
        Self::vstack(ring, &[&top, &bottom])
    }

    /// Block diagonal matrix.
    pub fn direct_sum(ring: RingDescriptor, parts: &[&RingMatrix]) -> Result<Self> {
        let rows = parts.iter().map(|m| m.rows).sum();
        let cols = parts.iter().map(|m| m.cols).sum();
        let mut out = Self::zeros(ring, rows, cols);
        let (mut r0, mut c0) = (0, 0);
        for m in parts {
            ring.check_same(&m.ring)?;
            out.set_block(r0, c0, m);
            r0 += m.rows;
            c0 += m.cols;
        }
        Ok(out)
    }

    pub(crate) fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.entries.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    pub(crate) fn swap_cols(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for i in 0..self.rows {
            self.entries.swap(i * self.cols + a, i * self.cols + b);
        }
    }

    /// `row[target] += factor · row[src]`.
    pub(crate) fn add_row_multiple(
        &mut self,
        target: usize,
        src: usize,
        factor: &LaurentPolynomial,
    ) {
        if factor.is_zero() {
            return;
        }
        for j in 0..self.cols {
            let s = self.get(src, j);
            if s.is_zero() {
                continue;
            }
            let v = self.get(target, j) + &(factor * s);
            self.entries[target * self.cols + j] = v;
        }
    }

    /// `col[target] += factor · col[src]`.
    pub(crate) fn add_col_multiple(
        &mut self,
        target: usize,
        src: usize,
        factor: &LaurentPolynomial,
    ) {
        if factor.is_zero() {
            return;
        }
        for i in 0..self.rows {
            let s = self.get(i, src);
            if s.is_zero() {
                continue;
            }
            let v = self.get(i, target) + &(factor * s);
            self.entries[i * self.cols + target] = v;
        }
    }

    pub(crate) fn scale_row(&mut self, i: usize, factor: &LaurentPolynomial) {
        for j in 0..self.cols {
            let v = self.get(i, j) * factor;
            self.entries[i * self.cols + j] = v;
        }
    }

    fn require_square(&self, what: &str) -> Result<()> {
        if self.is_square() {
            Ok(())
        } else {
            Err(Error::Shape(format!(
                "{what} needs a square matrix, got {}x{}",
                self.rows, self.cols
            )))
        }
    }

    /// Coefficients `[1, c_1, …, c_n]` of `det(t·I − A)`, highest power
    /// first, by Berkowitz's division-free recursion.
    pub fn characteristic_coefficients(&self) -> Result<Vec<LaurentPolynomial>> {
        self.require_square("characteristic polynomial")?;
        let n = self.rows;
        let ring = self.ring;
        let one = LaurentPolynomial::one(ring);
        if n == 0 {
            return Ok(vec![one]);
        }
        let mut p = vec![one.clone(), -self.get(n - 1, n - 1)];
        for k in (0..n - 1).rev() {
            let m = n - k - 1;
            let a = self.get(k, k);
            let r = self.submatrix(k, k + 1, 1, m);
            let c = self.submatrix(k + 1, k, m, 1);
            let a1 = self.submatrix(k + 1, k + 1, m, m);
            // Toeplitz column: 1, -a, -R C, -R A1 C, …, -R A1^(m-1) C
            let mut t = Vec::with_capacity(m + 2);
            t.push(one.clone());
            t.push(-a);
            let mut v = c;
            for _ in 0..m {
                t.push(-(&r * &v).get(0, 0));
                v = &a1 * &v;
            }
            let mut next = vec![LaurentPolynomial::zero(ring); m + 2];
            for (i, slot) in next.iter_mut().enumerate() {
                for (j, pj) in p.iter().enumerate().take(i + 1) {
                    if !pj.is_zero() && !t[i - j].is_zero() {
                        *slot = &*slot + &(&t[i - j] * pj);
                    }
                }
            }
            p = next;
        }
        Ok(p)
    }

    pub fn det(&self) -> Result<LaurentPolynomial> {
        let c = self.characteristic_coefficients()?;
        let n = self.rows;
        Ok(if n % 2 == 0 { c[n].clone() } else { -&c[n] })
    }

    /// Classical adjoint via Cayley–Hamilton, exact over any commutative ring.
    pub fn adjugate(&self) -> Result<Self> {
        let c = self.characteristic_coefficients()?;
        let n = self.rows;
        let ring = self.ring;
        if n == 0 {
            return Ok(Self::zeros(ring, 0, 0));
        }
        // Horner: A^(n-1) + c_1 A^(n-2) + … + c_(n-1) I
        let mut acc = Self::identity(ring, n);
        for coeff in c.iter().take(n).skip(1) {
            acc = &(&acc * self) + &Self::scalar(ring, n, coeff);
        }
        Ok(if n % 2 == 1 { acc } else { -&acc })
    }

    /// True iff the determinant is a unit of the ring.
    pub fn is_unit_matrix(&self) -> bool {
        self.is_square() && self.det().map(|d| d.is_unit()).unwrap_or(false)
    }

    pub fn inverse(&self) -> Result<Self> {
        self.require_square("inverse")?;
        let det = self.det()?;
        if det.is_zero() {
            return Err(Error::NotAUnit);
        }
        let inv = det.inverse()?;
        Ok(self.adjugate()?.scale(&inv))
    }

    /// `dagger(self) == sign · self`.
    pub fn is_hermitian(&self, sign: i64) -> bool {
        self.is_square() && self.dagger() == self.scale_int(sign)
    }
}

pub fn mat_mul(a: &RingMatrix, b: &RingMatrix) -> Result<RingMatrix> {
    a.checked_mul(b)
}

pub fn dagger(a: &RingMatrix) -> RingMatrix {
    a.dagger()
}

pub fn is_unit_matrix(a: &RingMatrix) -> bool {
    a.is_unit_matrix()
}

impl fmt::Display for RingMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<String> = self
            .to_rows()
            .iter()
            .map(|row| {
                let cells: Vec<String> = row.iter().map(|e| e.to_string()).collect();
                format!("[{}]", cells.join(", "))
            })
            .collect();
        write!(f, "[{}]", rows.join(", "))
    }
}

impl fmt::Debug for RingMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{}x{} over {}: {}",
            self.rows, self.cols, self.ring, self
        )
    }
}

impl<'a> Mul<&'a RingMatrix> for &'a RingMatrix {
    type Output = RingMatrix;
    fn mul(self, rhs: &RingMatrix) -> RingMatrix {
        self.checked_mul(rhs).expect("matrix product")
    }
}

impl<'a> Add<&'a RingMatrix> for &'a RingMatrix {
    type Output = RingMatrix;
    fn add(self, rhs: &RingMatrix) -> RingMatrix {
        self.checked_add(rhs).expect("matrix sum")
    }
}

impl<'a> Sub<&'a RingMatrix> for &'a RingMatrix {
    type Output = RingMatrix;
    fn sub(self, rhs: &RingMatrix) -> RingMatrix {
        self.checked_sub(rhs).expect("matrix difference")
    }
}

impl Neg for &RingMatrix {
    type Output = RingMatrix;
    fn neg(self) -> RingMatrix {
        self.map(self.ring, |e| -e)
    }
}

impl Mul for RingMatrix {
    type Output = RingMatrix;
    fn mul(self, rhs: RingMatrix) -> RingMatrix {
        &self * &rhs
    }
}

impl Add for RingMatrix {
    type Output = RingMatrix;
    fn add(self, rhs: RingMatrix) -> RingMatrix {
        &self + &rhs
    }
}

impl Sub for RingMatrix {
    type Output = RingMatrix;
    fn sub(self, rhs: RingMatrix) -> RingMatrix {
        &self - &rhs
    }
}

impl Neg for RingMatrix {
    type Output = RingMatrix;
    fn neg(self) -> RingMatrix {
        -&self
    }
}
