//! Sparse Laurent polynomials over `F_p` with the inversion involution.

use std::collections::btree_map::Entry;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use super::field::{add_mod, inv_mod, mul_mod, neg_mod, reduce, FieldElement, RingDescriptor};
use crate::error::{Error, Result};

/// Exponent tuple: one entry per spatial variable, then the `T` exponent.
pub type Exponent = Vec<i32>;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PolyOp {
    Add,
    Mul,
    Neg,
}

/// Element of `F_p[x_1^±, …, x_d^±]` or of its extension by `T`.
///
/// Terms are kept in a sorted map without zero coefficients, so structural
/// equality is ring equality.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct LaurentPolynomial {
    ring: RingDescriptor,
    terms: BTreeMap<Exponent, u64>,
}

impl LaurentPolynomial {
    pub fn zero(ring: RingDescriptor) -> Self {
        LaurentPolynomial {
            ring,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(ring: RingDescriptor) -> Self {
        Self::constant(ring, 1)
    }

    pub fn constant(ring: RingDescriptor, c: i64) -> Self {
        let mut out = Self::zero(ring);
        out.insert(vec![0; ring.arity()], reduce(c, ring.p()));
        out
    }

    pub fn from_field(ring: RingDescriptor, c: FieldElement) -> Self {
        debug_assert_eq!(c.modulus(), ring.p());
        Self::constant(ring, c.value() as i64)
    }

    pub fn monomial(ring: RingDescriptor, exps: &[i32], c: i64) -> Result<Self> {
        Self::check_exponent(ring, exps)?;
        let mut out = Self::zero(ring);
        out.insert(exps.to_vec(), reduce(c, ring.p()));
        Ok(out)
    }

    /// Builds a polynomial from `(exponent, coefficient)` pairs; repeated
    /// exponents are summed.
    pub fn from_terms<I>(ring: RingDescriptor, terms: I) -> Result<Self>
    where
        I: IntoIterator<Item = (Exponent, i64)>,
    {
        let mut out = Self::zero(ring);
        for (e, c) in terms {
            Self::check_exponent(ring, &e)?;
            out.accumulate(e, reduce(c, ring.p()));
        }
        Ok(out)
    }

    /// `c_0 x^lo + c_1 x^(lo+1) + …` in a ring with exactly one spatial
    /// variable and no `T`.
    pub fn univariate(ring: RingDescriptor, lo: i32, coeffs: &[i64]) -> Self {
        assert!(
            ring.vars() == 1 && !ring.has_t(),
            "univariate needs F_p[x^±]"
        );
        let mut out = Self::zero(ring);
        for (i, &c) in coeffs.iter().enumerate() {
            out.accumulate(vec![lo + i as i32], reduce(c, ring.p()));
        }
        out
    }

    /// The spatial variable `x_i` (1-based).
    pub fn var(ring: RingDescriptor, i: usize) -> Self {
        Self::var_pow(ring, i, 1)
    }

    pub fn var_pow(ring: RingDescriptor, i: usize, k: i32) -> Self {
        assert!(i >= 1 && i <= ring.vars(), "no variable x{i} in {ring}");
        let mut e = vec![0; ring.arity()];
        e[i - 1] = k;
        let mut out = Self::zero(ring);
        out.insert(e, 1);
        out
    }

    /// The loop parameter `T`.
    pub fn t(ring: RingDescriptor) -> Self {
        assert!(ring.has_t(), "{ring} has no T");
        let mut e = vec![0; ring.arity()];
        e[ring.vars()] = 1;
        let mut out = Self::zero(ring);
        out.insert(e, 1);
        out
    }

    fn check_exponent(ring: RingDescriptor, e: &[i32]) -> Result<()> {
        if e.len() != ring.arity() {
            return Err(Error::Shape(format!(
                "exponent of length {} in {ring}",
                e.len()
            )));
        }
        if ring.has_t() && e[ring.vars()] < 0 {
            return Err(Error::Domain("negative power of T".into()));
        }
        Ok(())
    }

    fn insert(&mut self, e: Exponent, c: u64) {
        if c != 0 {
            self.terms.insert(e, c);
        }
    }

    fn accumulate(&mut self, e: Exponent, c: u64) {
        if c == 0 {
            return;
        }
        let p = self.ring.p();
        match self.terms.entry(e) {
            Entry::Vacant(slot) => {
                slot.insert(c);
            }
            Entry::Occupied(mut slot) => {
                let sum = add_mod(*slot.get(), c, p);
                if sum == 0 {
                    slot.remove();
                } else {
                    *slot.get_mut() = sum;
                }
            }
        }
    }

    pub fn ring(&self) -> RingDescriptor {
        self.ring
    }

    pub fn p(&self) -> u64 {
        self.ring.p()
    }

    /// Nonzero terms in exponent order.
    pub fn terms(&self) -> impl Iterator<Item = (&Exponent, FieldElement)> + '_ {
        let p = self.p();
        self.terms
            .iter()
            .map(move |(e, &c)| (e, FieldElement::from_raw(c, p)))
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        *self == Self::one(self.ring)
    }

    pub fn coeff(&self, e: &[i32]) -> FieldElement {
        FieldElement::from_raw(self.terms.get(e).copied().unwrap_or(0), self.p())
    }

    /// The coefficient of the all-zero exponent, whatever the ring.
    pub fn constant_term(&self) -> FieldElement {
        self.coeff(&vec![0; self.ring.arity()])
    }

    /// True when the polynomial has no nonconstant terms.
    pub fn is_constant(&self) -> bool {
        self.terms.keys().all(|e| e.iter().all(|&k| k == 0))
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self> {
        self.ring.check_same(&other.ring)?;
        let mut out = self.clone();
        for (e, &c) in &other.terms {
            out.accumulate(e.clone(), c);
        }
        Ok(out)
    }

    pub fn checked_sub(&self, other: &Self) -> Result<Self> {
        self.checked_add(&other.neg_ref())
    }

    pub fn checked_mul(&self, other: &Self) -> Result<Self> {
        self.ring.check_same(&other.ring)?;
        let p = self.p();
        let mut acc: BTreeMap<Exponent, u64> = BTreeMap::new();
        for (e1, &c1) in &self.terms {
            for (e2, &c2) in &other.terms {
                let e: Exponent = e1.iter().zip(e2).map(|(a, b)| a + b).collect();
                let slot = acc.entry(e).or_insert(0);
                *slot = add_mod(*slot, mul_mod(c1, c2, p), p);
            }
        }
        acc.retain(|_, c| *c != 0);
        Ok(LaurentPolynomial {
            ring: self.ring,
            terms: acc,
        })
    }

    fn neg_ref(&self) -> Self {
        let p = self.p();
        LaurentPolynomial {
            ring: self.ring,
            terms: self
                .terms
                .iter()
                .map(|(e, &c)| (e.clone(), neg_mod(c, p)))
                .collect(),
        }
    }

    pub fn scale(&self, c: FieldElement) -> Self {
        let p = self.p();
        let mut out = Self::zero(self.ring);
        for (e, &v) in &self.terms {
            out.insert(e.clone(), mul_mod(v, c.value() % p, p));
        }
        out
    }

    pub fn scale_int(&self, c: i64) -> Self {
        self.scale(FieldElement::from_raw(reduce(c, self.p()), self.p()))
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut acc = Self::one(self.ring);
        for _ in 0..k {
            acc = &acc * self;
        }
        acc
    }

    /// Negates every spatial exponent; `T` is fixed.
    pub fn involute(&self) -> Self {
        let d = self.ring.vars();
        LaurentPolynomial {
            ring: self.ring,
            terms: self
                .terms
                .iter()
                .map(|(e, &c)| {
                    let mut e = e.clone();
                    for k in e.iter_mut().take(d) {
                        *k = -*k;
                    }
                    (e, c)
                })
                .collect(),
        }
    }

    /// The augmentation: coefficient of the zero exponent.
    pub fn augment(&self) -> Result<FieldElement> {
        if self.ring.has_t() {
            return Err(Error::Domain(
                "augmentation needs a T-free polynomial; evaluate T first".into(),
            ));
        }
        Ok(self.constant_term())
    }

    /// Substitutes `T = t`. Polynomials without `T` are returned unchanged.
    pub fn eval_t(&self, t: FieldElement) -> Self {
        if !self.ring.has_t() {
            return self.clone();
        }
        let p = self.p();
        let d = self.ring.vars();
        let mut out = Self::zero(self.ring.without_t());
        for (e, &c) in &self.terms {
            let tk = t.pow(e[d] as u64).value();
            out.accumulate(e[..d].to_vec(), mul_mod(c, tk, p));
        }
        out
    }

    /// Embeds a `T`-free polynomial into the ring extended by `T`.
    pub fn lift_t(&self) -> Self {
        if self.ring.has_t() {
            return self.clone();
        }
        LaurentPolynomial {
            ring: self.ring.with_t(),
            terms: self
                .terms
                .iter()
                .map(|(e, &c)| {
                    let mut e = e.clone();
                    e.push(0);
                    (e, c)
                })
                .collect(),
        }
    }

    /// Highest power of `T` (0 for `T`-free or zero polynomials).
    pub fn t_degree(&self) -> u32 {
        if !self.ring.has_t() {
            return 0;
        }
        let d = self.ring.vars();
        self.terms.keys().map(|e| e[d] as u32).max().unwrap_or(0)
    }

    pub fn is_monomial(&self) -> bool {
        self.terms.len() == 1
    }

    /// Units of `F_p[x^±][T]` are the nonzero monomials free of `T`.
    pub fn is_unit(&self) -> bool {
        if !self.is_monomial() {
            return false;
        }
        let (e, _) = self.terms.iter().next().unwrap();
        !self.ring.has_t() || e[self.ring.vars()] == 0
    }

    pub fn inverse(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        if !self.is_unit() {
            return Err(Error::NotAUnit);
        }
        let (e, &c) = self.terms.iter().next().unwrap();
        let inv = inv_mod(c, self.p()).ok_or(Error::DivisionByZero)?;
        let e: Exponent = e.iter().map(|k| -k).collect();
        let mut out = Self::zero(self.ring);
        out.insert(e, inv);
        Ok(out)
    }

    fn require_univariate(&self) -> Result<()> {
        if self.ring.has_t() || self.ring.vars() > 1 {
            return Err(Error::UnsupportedRing(format!(
                "Euclidean division needs F_p or F_p[x^±], got {}",
                self.ring
            )));
        }
        Ok(())
    }

    /// Lowest and highest exponent in a ring with at most one variable.
    fn exponent_range(&self) -> Option<(i32, i32)> {
        if self.ring.vars() == 0 {
            return if self.is_zero() { None } else { Some((0, 0)) };
        }
        let lo = self.terms.keys().next()?[0];
        let hi = self.terms.keys().next_back()?[0];
        Some((lo, hi))
    }

    /// Euclidean size over `F_p[x^±]`: max exponent minus min exponent.
    /// `None` for zero.
    pub fn spread(&self) -> Option<u32> {
        if self.ring.vars() == 1 && !self.ring.has_t() {
            return self.exponent_range().map(|(lo, hi)| (hi - lo) as u32);
        }
        if self.is_zero() {
            return None;
        }
        // Largest coordinate-wise extent; only used as a sampling bound.
        let arity = self.ring.arity();
        let mut worst = 0;
        for k in 0..arity {
            let lo = self.terms.keys().map(|e| e[k]).min().unwrap();
            let hi = self.terms.keys().map(|e| e[k]).max().unwrap();
            worst = worst.max((hi - lo) as u32);
        }
        Some(worst)
    }

    /// `(q, r)` with `self = q·g + r` and `spread(r) < spread(g)` (or `r = 0`).
    pub fn div_rem(&self, g: &Self) -> Result<(Self, Self)> {
        self.ring.check_same(&g.ring)?;
        self.require_univariate()?;
        if g.is_zero() {
            return Err(Error::DivisionByZero);
        }
        if self.is_zero() {
            return Ok((Self::zero(self.ring), Self::zero(self.ring)));
        }
        let p = self.p();
        if self.ring.vars() == 0 {
            let q = self.scale(g.constant_term().inv()?);
            return Ok((q, Self::zero(self.ring)));
        }
        let (a, _) = self.exponent_range().unwrap();
        let (b, bhi) = g.exponent_range().unwrap();
        let gdeg = (bhi - b) as usize;
        // dense ordinary polynomials f~ and g~
        let shifted = |f: &Self, lo: i32| -> Vec<u64> {
            let (_, hi) = f.exponent_range().unwrap();
            let mut v = vec![0u64; (hi - lo) as usize + 1];
            for (e, &c) in &f.terms {
                v[(e[0] - lo) as usize] = c;
            }
            v
        };
        let mut r = shifted(self, a);
        let gv = shifted(g, b);
        let lead_inv = inv_mod(gv[gdeg], p).ok_or(Error::DivisionByZero)?;
        let mut q = vec![0u64; r.len().saturating_sub(gdeg).max(1)];
        if r.len() > gdeg {
            for k in (gdeg..r.len()).rev() {
                let c = mul_mod(r[k], lead_inv, p);
                if c == 0 {
                    continue;
                }
                q[k - gdeg] = c;
                for (j, &gj) in gv.iter().enumerate() {
                    let idx = k - gdeg + j;
                    r[idx] = add_mod(r[idx], neg_mod(mul_mod(c, gj, p), p), p);
                }
            }
        }
        let qs: Vec<i64> = q.iter().map(|&c| c as i64).collect();
        let rs: Vec<i64> = r.iter().map(|&c| c as i64).collect();
        Ok((
            Self::univariate(self.ring, a - b, &qs),
            Self::univariate(self.ring, a, &rs),
        ))
    }

    /// Splits off a unit: returns `(n, u)` with `self = u·n`, `n` having
    /// lowest exponent 0 and leading coefficient 1 (univariate rings).
    pub fn unit_normalize(&self) -> Result<(Self, Self)> {
        self.require_univariate()?;
        if self.is_zero() {
            return Ok((self.clone(), Self::one(self.ring)));
        }
        let (lo, _) = self.exponent_range().unwrap();
        let lead = self.terms.values().next_back().copied().unwrap();
        let unit = if self.ring.vars() == 0 {
            Self::constant(self.ring, lead as i64)
        } else {
            Self::monomial(self.ring, &[lo], lead as i64)?
        };
        let normal = self * &unit.inverse()?;
        Ok((normal, unit))
    }

    pub fn is_hermitian(&self) -> bool {
        self.involute() == *self
    }
}

pub fn poly_arith(
    f: &LaurentPolynomial,
    g: &LaurentPolynomial,
    op: PolyOp,
) -> Result<LaurentPolynomial> {
    match op {
        PolyOp::Add => f.checked_add(g),
        PolyOp::Mul => f.checked_mul(g),
        PolyOp::Neg => Ok(f.neg_ref()),
    }
}

impl fmt::Display for LaurentPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let d = self.ring.vars();
        let mut first = true;
        for (e, &c) in &self.terms {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            let mut factors = Vec::new();
            for (i, &k) in e.iter().enumerate() {
                let name = if i < d {
                    format!("x{}", i + 1)
                } else {
                    "T".to_string()
                };
                match k {
                    0 => {}
                    1 => factors.push(name),
                    _ => factors.push(format!("{name}^{k}")),
                }
            }
            if factors.is_empty() {
                write!(f, "{c}")?;
            } else if c == 1 {
                write!(f, "{}", factors.join("*"))?;
            } else {
                write!(f, "{c}*{}", factors.join("*"))?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for LaurentPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} in {}", self, self.ring)
    }
}

impl<'a> Add<&'a LaurentPolynomial> for &'a LaurentPolynomial {
    type Output = LaurentPolynomial;
    fn add(self, rhs: &LaurentPolynomial) -> LaurentPolynomial {
        self.checked_add(rhs).expect("ring mismatch in +")
    }
}

impl<'a> Sub<&'a LaurentPolynomial> for &'a LaurentPolynomial {
    type Output = LaurentPolynomial;
    fn sub(self, rhs: &LaurentPolynomial) -> LaurentPolynomial {
        self.checked_sub(rhs).expect("ring mismatch in -")
    }
}

impl<'a> Mul<&'a LaurentPolynomial> for &'a LaurentPolynomial {
    type Output = LaurentPolynomial;
    fn mul(self, rhs: &LaurentPolynomial) -> LaurentPolynomial {
        self.checked_mul(rhs).expect("ring mismatch in *")
    }
}

impl Neg for &LaurentPolynomial {
    type Output = LaurentPolynomial;
    fn neg(self) -> LaurentPolynomial {
        self.neg_ref()
    }
}

impl Add for LaurentPolynomial {
    type Output = LaurentPolynomial;
    fn add(self, rhs: LaurentPolynomial) -> LaurentPolynomial {
        &self + &rhs
    }
}

impl Sub for LaurentPolynomial {
    type Output = LaurentPolynomial;
    fn sub(self, rhs: LaurentPolynomial) -> LaurentPolynomial {
        &self - &rhs
    }
}

impl Mul for LaurentPolynomial {
    type Output = LaurentPolynomial;
    fn mul(self, rhs: LaurentPolynomial) -> LaurentPolynomial {
        &self * &rhs
    }
}

impl Neg for LaurentPolynomial {
    type Output = LaurentPolynomial;
    fn neg(self) -> LaurentPolynomial {
        self.neg_ref()
    }
}
