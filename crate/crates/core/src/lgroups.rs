//! L-groups of Laurent extensions of `F_p`, fundamental ideals and the
//! loop classification table.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::ring::RingDescriptor;

/// Largest lattice dimension for which the recursion is backed by theory.
pub const VALIDATED_MAX_DIM: u32 = 4;

/// Finite abelian group in invariant-factor form: each order divides the
/// next. Empty means trivial, so isomorphism is equality.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct FiniteAbelianGroup {
    cyclic_orders: Vec<u64>,
}

fn factor(mut n: u64) -> Vec<(u64, u64)> {
    let mut out = Vec::new();
    let mut q = 2;
    while q * q <= n {
        if n % q == 0 {
            let mut pk = 1;
            while n % q == 0 {
                n /= q;
                pk *= q;
            }
            out.push((q, pk));
        }
        q += 1;
    }
    if n > 1 {
        out.push((n, n));
    }
    out
}

impl FiniteAbelianGroup {
    pub fn trivial() -> Self {
        FiniteAbelianGroup {
            cyclic_orders: Vec::new(),
        }
    }

    pub fn cyclic(n: u64) -> Self {
        Self::from_cyclic(&[n])
    }

    /// Canonicalizes an arbitrary direct sum of cyclic groups. Orders 0 and 1
    /// contribute nothing.
    pub fn from_cyclic(orders: &[u64]) -> Self {
        // primary parts, grouped by prime, largest power first
        let mut primary: std::collections::BTreeMap<u64, Vec<u64>> = Default::default();
        for &n in orders.iter().filter(|&&n| n > 1) {
            for (q, pk) in factor(n) {
                primary.entry(q).or_default().push(pk);
            }
        }
        let len = primary.values().map(Vec::len).max().unwrap_or(0);
        let mut factors = vec![1u64; len];
        for powers in primary.values_mut() {
            powers.sort_unstable_by(|a, b| b.cmp(a));
            for (i, pk) in powers.iter().enumerate() {
                factors[len - 1 - i] *= pk;
            }
        }
        FiniteAbelianGroup {
            cyclic_orders: factors,
        }
    }

    pub fn cyclic_orders(&self) -> &[u64] {
        &self.cyclic_orders
    }

    pub fn order(&self) -> u64 {
        self.cyclic_orders.iter().product()
    }

    pub fn is_trivial(&self) -> bool {
        self.cyclic_orders.is_empty()
    }

    pub fn direct_sum(&self, other: &Self) -> Self {
        let mut all = self.cyclic_orders.clone();
        all.extend_from_slice(&other.cyclic_orders);
        Self::from_cyclic(&all)
    }

    pub fn parse(s: &str) -> Result<Self> {
        let s = s.trim();
        if s == "0" {
            return Ok(Self::trivial());
        }
        let orders = s
            .split('+')
            .map(|part| {
                part.trim()
                    .strip_prefix("Z/")
                    .and_then(|n| n.parse::<u64>().ok())
                    .filter(|&n| n >= 2)
                    .ok_or_else(|| Error::Parse(format!("bad cyclic summand {part:?}")))
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(Self::from_cyclic(&orders))
    }
}

impl fmt::Display for FiniteAbelianGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.cyclic_orders.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .cyclic_orders
            .iter()
            .map(|n| format!("Z/{n}"))
            .collect();
        write!(f, "{}", parts.join("+"))
    }
}

fn check_prime(p: u64) -> Result<()> {
    RingDescriptor::prime_field(p).map(|_| ())
}

fn check_dim(d: u32) -> Result<()> {
    if d > VALIDATED_MAX_DIM {
        return Err(Error::Unsupported(format!(
            "dimension {d} exceeds the validated range 0..={VALIDATED_MAX_DIM}"
        )));
    }
    Ok(())
}

/// The Witt group of `+`hermitian forms over `F_p`.
pub fn witt_group(p: u64) -> Result<FiniteAbelianGroup> {
    check_prime(p)?;
    Ok(if p % 4 == 1 {
        FiniteAbelianGroup::from_cyclic(&[2, 2])
    } else {
        FiniteAbelianGroup::cyclic(4)
    })
}

pub fn lgroup_base(n: u32, p: u64) -> Result<FiniteAbelianGroup> {
    if n > 3 {
        return Err(Error::Domain(format!("L-group index {n} not in 0..=3")));
    }
    let w = witt_group(p)?;
    Ok(if n == 0 {
        w
    } else {
        FiniteAbelianGroup::trivial()
    })
}

fn binomial(n: u32, k: u32) -> u64 {
    (0..k).fold(1u64, |acc, i| acc * (n - i) as u64 / (i + 1) as u64)
}

/// `L_n(F_p^d) = L_n(F_p^{d-1}) ⊕ L_{n-1}(F_p^{d-1})`, unrolled. Any `d` is
/// computed; see [`is_validated`] for the trusted range.
pub fn lgroup(n: i64, d: u32, p: u64) -> Result<FiniteAbelianGroup> {
    let n = n.rem_euclid(4) as u32;
    let w = witt_group(p)?;
    let mut orders = Vec::new();
    // only L_0 of the base is nonzero: it appears C(d, k) times with k ≡ n
    for k in (n..=d).step_by(4) {
        for _ in 0..binomial(d, k) {
            orders.extend_from_slice(w.cyclic_orders());
        }
    }
    Ok(FiniteAbelianGroup::from_cyclic(&orders))
}

pub fn is_validated(d: u32) -> bool {
    d <= VALIDATED_MAX_DIM
}

/// Where a table entry comes from.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Provenance {
    Recursion,
    /// Taken from a theorem whose construction is not carried out here.
    Theorem,
}

pub fn fundamental_ideal_group(d: u32, p: u64) -> Result<FiniteAbelianGroup> {
    Ok(fundamental_ideal_with_provenance(d, p)?.0)
}

pub fn fundamental_ideal_with_provenance(
    d: u32,
    p: u64,
) -> Result<(FiniteAbelianGroup, Provenance)> {
    check_prime(p)?;
    check_dim(d)?;
    let z2 = FiniteAbelianGroup::cyclic(2);
    Ok(if d < 4 {
        (z2, Provenance::Recursion)
    } else {
        (z2.direct_sum(&witt_group(p)?), Provenance::Theorem)
    })
}

/// Loops modulo shifts and zero-dimensional loops: the cokernel of the
/// canonical `Z/2` in the fundamental ideal.
pub fn classify_loops(d: u32, p: u64) -> Result<FiniteAbelianGroup> {
    check_prime(p)?;
    check_dim(d)?;
    if d < 4 {
        Ok(FiniteAbelianGroup::trivial())
    } else {
        witt_group(p)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LGroupRow {
    pub n: u32,
    pub d: u32,
    pub group: FiniteAbelianGroup,
    pub validated: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassificationRow {
    pub d: u32,
    pub fundamental_ideal: FiniteAbelianGroup,
    pub loops: FiniteAbelianGroup,
    pub provenance: Provenance,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassificationTable {
    pub p: u64,
    pub p_mod_4: u64,
    pub lgroups: Vec<LGroupRow>,
    pub classification: Vec<ClassificationRow>,
}

/// Rows for every `(n, d)` with `d ≤ max_d`; classification rows stop at
/// the validated range.
pub fn classification_table(p: u64, max_d: u32) -> Result<ClassificationTable> {
    check_prime(p)?;
    let mut lgroups = Vec::new();
    for d in 0..=max_d {
        for n in 0..4 {
            lgroups.push(LGroupRow {
                n,
                d,
                group: lgroup(n as i64, d, p)?,
                validated: is_validated(d),
            });
        }
    }
    let mut classification = Vec::new();
    for d in 0..=max_d.min(VALIDATED_MAX_DIM) {
        let (fundamental_ideal, provenance) = fundamental_ideal_with_provenance(d, p)?;
        classification.push(ClassificationRow {
            d,
            fundamental_ideal,
            loops: classify_loops(d, p)?,
            provenance,
        });
    }
    Ok(ClassificationTable {
        p,
        p_mod_4: p % 4,
        lgroups,
        classification,
    })
}
