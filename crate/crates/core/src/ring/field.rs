//! Prime fields of odd characteristic and the descriptor of the Laurent rings
//! built on top of them.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use crate::error::{Error, Result};

pub(crate) fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n % 2 == 0 {
        return n == 2;
    }
    let mut k = 3u64;
    while k.saturating_mul(k) <= n {
        if n % k == 0 {
            return false;
        }
        k += 2;
    }
    true
}

pub(crate) fn reduce(value: i64, p: u64) -> u64 {
    value.rem_euclid(p as i64) as u64
}

pub(crate) fn mul_mod(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

pub(crate) fn add_mod(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 + b as u128) % p as u128) as u64
}

pub(crate) fn neg_mod(a: u64, p: u64) -> u64 {
    if a == 0 {
        0
    } else {
        p - a
    }
}

pub(crate) fn pow_mod(mut base: u64, mut exp: u64, p: u64) -> u64 {
    let mut acc = 1 % p;
    base %= p;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mul_mod(acc, base, p);
        }
        base = mul_mod(base, base, p);
        exp >>= 1;
    }
    acc
}

/// Inverse of a nonzero residue, by the extended Euclidean algorithm.
pub(crate) fn inv_mod(a: u64, p: u64) -> Option<u64> {
    let a = a % p;
    if a == 0 {
        return None;
    }
    let (mut r0, mut r1) = (p as i128, a as i128);
    let (mut s0, mut s1) = (0i128, 1i128);
    while r1 != 0 {
        let q = r0 / r1;
        (r0, r1) = (r1, r0 - q * r1);
        (s0, s1) = (s1, s0 - q * s1);
    }
    if r0 != 1 {
        return None;
    }
    Some(s0.rem_euclid(p as i128) as u64)
}

/// Which ring a polynomial or matrix lives in: `F_p[x_1^±, …, x_d^±]`,
/// optionally extended by the loop parameter `T` (polynomial, fixed by the
/// involution).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct RingDescriptor {
    p: u64,
    vars: usize,
    has_t: bool,
}

impl RingDescriptor {
    pub fn new(p: u64, vars: usize, has_t: bool) -> Result<Self> {
        if p == 2 {
            return Err(Error::Domain(
                "p = 2 is not supported: 2 must be invertible".into(),
            ));
        }
        if !is_prime(p) {
            return Err(Error::Domain(format!("{p} is not a prime")));
        }
        Ok(RingDescriptor { p, vars, has_t })
    }

    /// The prime field `F_p`.
    pub fn prime_field(p: u64) -> Result<Self> {
        Self::new(p, 0, false)
    }

    /// `F_p[x_1^±, …, x_d^±]`.
    pub fn laurent(p: u64, d: usize) -> Result<Self> {
        Self::new(p, d, false)
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    /// Number of involuted (spatial) variables.
    pub fn vars(&self) -> usize {
        self.vars
    }

    pub fn has_t(&self) -> bool {
        self.has_t
    }

    /// Length of an exponent tuple: spatial variables, then `T` if present.
    pub fn arity(&self) -> usize {
        self.vars + usize::from(self.has_t)
    }

    pub fn with_t(self) -> Self {
        RingDescriptor {
            has_t: true,
            ..self
        }
    }

    pub fn without_t(self) -> Self {
        RingDescriptor {
            has_t: false,
            ..self
        }
    }

    pub fn is_field(&self) -> bool {
        self.vars == 0 && !self.has_t
    }

    pub fn element(&self, value: i64) -> FieldElement {
        FieldElement {
            value: reduce(value, self.p),
            modulus: self.p,
        }
    }

    pub(crate) fn check_same(&self, other: &RingDescriptor) -> Result<()> {
        if self == other {
            Ok(())
        } else {
            Err(Error::RingMismatch(format!("{self} vs {other}")))
        }
    }
}

impl fmt::Display for RingDescriptor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "F_{}", self.p)?;
        if self.vars > 0 {
            let names: Vec<String> = (1..=self.vars).map(|i| format!("x{i}^±")).collect();
            write!(f, "[{}]", names.join(","))?;
        }
        if self.has_t {
            write!(f, "[T]")?;
        }
        Ok(())
    }
}

/// A residue modulo an odd prime.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct FieldElement {
    value: u64,
    modulus: u64,
}

/// Selector for [`field_arith`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FieldOp {
    Add,
    Mul,
    Inv,
    Neg,
}

impl FieldElement {
    pub fn new(value: i64, p: u64) -> Result<Self> {
        RingDescriptor::prime_field(p)?;
        Ok(FieldElement {
            value: reduce(value, p),
            modulus: p,
        })
    }

    pub(crate) fn from_raw(value: u64, p: u64) -> Self {
        FieldElement {
            value: value % p,
            modulus: p,
        }
    }

    pub fn value(&self) -> u64 {
        self.value
    }

    pub fn modulus(&self) -> u64 {
        self.modulus
    }

    pub fn is_zero(&self) -> bool {
        self.value == 0
    }

    /// Representative in `(-p/2, p/2]`.
    pub fn signed(&self) -> i64 {
        if self.value > self.modulus / 2 {
            self.value as i64 - self.modulus as i64
        } else {
            self.value as i64
        }
    }

    fn same_field(&self, other: &FieldElement) -> Result<()> {
        if self.modulus == other.modulus {
            Ok(())
        } else {
            Err(Error::RingMismatch(format!(
                "F_{} vs F_{}",
                self.modulus, other.modulus
            )))
        }
    }

    pub fn checked_add(&self, other: &FieldElement) -> Result<FieldElement> {
        self.same_field(other)?;
        Ok(Self::from_raw(
            add_mod(self.value, other.value, self.modulus),
            self.modulus,
        ))
    }

    pub fn checked_mul(&self, other: &FieldElement) -> Result<FieldElement> {
        self.same_field(other)?;
        Ok(Self::from_raw(
            mul_mod(self.value, other.value, self.modulus),
            self.modulus,
        ))
    }

    pub fn inv(&self) -> Result<FieldElement> {
        inv_mod(self.value, self.modulus)
            .map(|v| Self::from_raw(v, self.modulus))
            .ok_or(Error::DivisionByZero)
    }

    pub fn pow(&self, exp: u64) -> FieldElement {
        Self::from_raw(pow_mod(self.value, exp, self.modulus), self.modulus)
    }

    /// Euler's criterion. Zero has no square class.
    pub fn is_square(&self) -> Result<bool> {
        if self.value == 0 {
            return Err(Error::Domain("square class of zero is undefined".into()));
        }
        Ok(self.pow((self.modulus - 1) / 2).value == 1)
    }
}

impl fmt::Display for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.value)
    }
}

impl Add for FieldElement {
    type Output = FieldElement;
    fn add(self, rhs: FieldElement) -> FieldElement {
        self.checked_add(&rhs).expect("field mismatch")
    }
}

impl Sub for FieldElement {
    type Output = FieldElement;
    fn sub(self, rhs: FieldElement) -> FieldElement {
        self + (-rhs)
    }
}

impl Mul for FieldElement {
    type Output = FieldElement;
    fn mul(self, rhs: FieldElement) -> FieldElement {
        self.checked_mul(&rhs).expect("field mismatch")
    }
}

impl Neg for FieldElement {
    type Output = FieldElement;
    fn neg(self) -> FieldElement {
        Self::from_raw(neg_mod(self.value, self.modulus), self.modulus)
    }
}

/// Exact residue arithmetic. `b` is ignored by the unary operations.
pub fn field_arith(a: FieldElement, b: FieldElement, op: FieldOp) -> Result<FieldElement> {
    match op {
        FieldOp::Add => a.checked_add(&b),
        FieldOp::Mul => a.checked_mul(&b),
        FieldOp::Inv => a.inv(),
        FieldOp::Neg => Ok(-a),
    }
}

pub fn is_square(a: FieldElement) -> Result<bool> {
    a.is_square()
}

/// The smallest positive quadratic non-residue mod `p`; the canonical `θ`.
pub fn least_non_residue(p: u64) -> Result<FieldElement> {
    RingDescriptor::prime_field(p)?;
    (2..p)
        .map(|k| FieldElement::from_raw(k, p))
        .find(|a| !a.is_square().unwrap_or(true))
        .ok_or_else(|| Error::InternalInvariantViolation(format!("no non-residue mod {p}")))
}
