//! Named fixtures shipped with the library and the CLI.

use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::forms::HermitianForm;
use crate::linalg::RingMatrix;
use crate::pauli::{Circuit, Gate, PauliModule, StabilizerModule};
use crate::realmaslov::{paper_example, RealPolynomial};
use crate::ring::{LaurentPolynomial, RingDescriptor};
use crate::sturm::{loop_from_pair, LagrangianLoop};
use crate::wire;

#[derive(Clone, Debug, PartialEq)]
pub enum Preset {
    Stabilizer(StabilizerModule),
    Circuit(Circuit),
    Pair(HermitianForm, HermitianForm),
    Loop(LagrangianLoop),
    Real(RealPolynomial),
}

impl Preset {
    pub fn kind(&self) -> &'static str {
        match self {
            Preset::Stabilizer(_) => "stabilizer",
            Preset::Circuit(_) => "circuit",
            Preset::Pair(..) => "pair",
            Preset::Loop(_) => "loop",
            Preset::Real(_) => "real",
        }
    }

    pub fn to_json(&self) -> Value {
        match self {
            Preset::Stabilizer(s) => json!(wire::stabilizer_to_json(s)),
            Preset::Circuit(c) => json!(wire::circuit_to_json(c)),
            Preset::Pair(q0, q1) => json!({
                "q0": wire::form_to_json(q0),
                "q1": wire::form_to_json(q1),
            }),
            Preset::Loop(lp) => json!(wire::loop_to_json(lp)),
            Preset::Real(p) => json!({ "coefficients": p.coefficients() }),
        }
    }
}

pub const PRESETS: &[(&str, &str)] = &[
    (
        "cluster-module",
        "cluster stabilizer over F_5[x^±], generated by (x + x^-1, 1)",
    ),
    (
        "product-state",
        "product-state stabilizer over F_5[x^±], generated by (1, 0)",
    ),
    (
        "cluster-circuit",
        "elementary circuit taking product-state to cluster-module",
    ),
    ("lhat-f3-trivial", "pair q0 = q1 = <1> over F_3"),
    ("lhat-f5", "pair q0 = <1>, q1 = <2> over F_5"),
    ("lhat-f7", "pair q0 = diag(1, 3), q1 = diag(2, 2) over F_7"),
    ("lhat-f5-loop", "the loop built from lhat-f5"),
    ("paper-example", "4u^3 - 6u^2 + 1 with u = T + 1/sqrt(2)"),
];

fn f5x() -> RingDescriptor {
    RingDescriptor::laurent(5, 1).expect("5 is prime")
}

fn field(p: u64) -> RingDescriptor {
    RingDescriptor::prime_field(p).expect("prime")
}

pub fn cluster_module() -> StabilizerModule {
    let r = f5x();
    let x = LaurentPolynomial::var(r, 1);
    let gen = RingMatrix::column_vector(r, vec![&x + &x.involute(), LaurentPolynomial::one(r)]);
    StabilizerModule::new(PauliModule::new(r, 1).expect("N = 1"), gen).expect("one column")
}

pub fn product_state() -> StabilizerModule {
    PauliModule::new(f5x(), 1)
        .expect("N = 1")
        .standard_lagrangian()
}

/// `E0(1) E1(-1) E0(1)` exchanges `L` and `L*`; `E1(x + x⁻¹)` then tilts
/// `L*` onto the cluster module.
pub fn cluster_circuit() -> Circuit {
    let r = f5x();
    let x = LaurentPolynomial::var(r, 1);
    let h = RingMatrix::from_rows(r, vec![vec![&x + &x.involute()]]).expect("1x1");
    let one = HermitianForm::diagonal(r, &[1]);
    Circuit::new(vec![
        Gate::E0(one.clone()),
        Gate::E1(HermitianForm::diagonal(r, &[-1])),
        Gate::E0(one),
        Gate::E1(HermitianForm::plus(h).expect("x + x^-1 is hermitian")),
    ])
}

fn pair(name: &str) -> Option<(HermitianForm, HermitianForm)> {
    Some(match name {
        "lhat-f3-trivial" => (
            HermitianForm::diagonal(field(3), &[1]),
            HermitianForm::diagonal(field(3), &[1]),
        ),
        "lhat-f5" => (
            HermitianForm::diagonal(field(5), &[1]),
            HermitianForm::diagonal(field(5), &[2]),
        ),
        "lhat-f7" => (
            HermitianForm::diagonal(field(7), &[1, 3]),
            HermitianForm::diagonal(field(7), &[2, 2]),
        ),
        _ => return None,
    })
}

pub fn preset(name: &str) -> Result<Preset> {
    if let Some((q0, q1)) = pair(name) {
        return Ok(Preset::Pair(q0, q1));
    }
    Ok(match name {
        "cluster-module" => Preset::Stabilizer(cluster_module()),
        "product-state" => Preset::Stabilizer(product_state()),
        "cluster-circuit" => Preset::Circuit(cluster_circuit()),
        "lhat-f5-loop" => {
            let (q0, q1) = pair("lhat-f5").expect("listed");
            Preset::Loop(loop_from_pair(&q0, &q1)?)
        }
        "paper-example" => Preset::Real(paper_example()),
        _ => {
            return Err(Error::Parse(format!(
                "unknown preset {name:?}; known: {}",
                PRESETS
                    .iter()
                    .map(|(n, _)| *n)
                    .collect::<Vec<_>>()
                    .join(", ")
            )))
        }
    })
}
