//! JSON encodings. Each domain type has a plain serde mirror here plus
//! checked conversions in both directions.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::forms::{FormInvariants, HermitianForm, WittClass};
use crate::linalg::RingMatrix;
use crate::pauli::{
    Circuit, CliffordUnitary, Gate, LagrangianReport, PauliModule, StabilizerModule,
};
use crate::ring::{LaurentPolynomial, RingDescriptor};
use crate::sturm::{LagrangianLoop, MaslovResult, SturmSequence};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RingJson {
    pub p: u64,
    pub vars: Vec<String>,
    #[serde(rename = "T", default)]
    pub t: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TermJson {
    pub e: Vec<i32>,
    pub c: i64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PolyJson {
    pub p: u64,
    pub vars: Vec<String>,
    #[serde(rename = "T", default)]
    pub t: bool,
    pub terms: Vec<TermJson>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct MatrixJson {
    pub rows: usize,
    pub cols: usize,
    pub entries: Vec<Vec<PolyJson>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FormJson {
    pub rows: usize,
    pub cols: usize,
    pub entries: Vec<Vec<PolyJson>>,
    pub sign: i8,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct WittJson {
    pub p: u64,
    pub class: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct StabilizerJson {
    #[serde(rename = "N")]
    pub n: usize,
    pub ring: RingJson,
    pub generators: MatrixJson,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct UnitaryJson {
    #[serde(rename = "N")]
    pub n: usize,
    pub matrix: MatrixJson,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", content = "payload")]
pub enum GateJson {
    E0(FormJson),
    E1(FormJson),
    H(MatrixJson),
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct LoopJson {
    #[serde(rename = "N")]
    pub n: usize,
    pub ring: RingJson,
    pub sturm: Vec<FormJson>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct InvariantsJson {
    pub rank_parity: u8,
    pub determinant: PolyJson,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MaslovJson {
    pub form: FormJson,
    pub witt: Option<WittJson>,
    pub invariants: InvariantsJson,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReportJson {
    pub isotropic: bool,
    pub coisotropic: bool,
    pub summand: bool,
    pub lagrangian: bool,
}

fn var_names(n: usize) -> Vec<String> {
    (1..=n).map(|i| format!("x{i}")).collect()
}

pub fn ring_to_json(r: RingDescriptor) -> RingJson {
    RingJson {
        p: r.p(),
        vars: var_names(r.vars()),
        t: r.has_t(),
    }
}

fn ring_from_parts(p: u64, vars: &[String], t: bool) -> Result<RingDescriptor> {
    if vars != var_names(vars.len()).as_slice() {
        return Err(Error::Parse(format!(
            "variables must be named x1..x{}, got {vars:?}",
            vars.len()
        )));
    }
    RingDescriptor::new(p, vars.len(), t)
}

pub fn ring_from_json(r: &RingJson) -> Result<RingDescriptor> {
    ring_from_parts(r.p, &r.vars, r.t)
}

/// Terms are emitted in exponent order with canonical coefficients `0..p`.
pub fn poly_to_json(f: &LaurentPolynomial) -> PolyJson {
    let r = ring_to_json(f.ring());
    PolyJson {
        p: r.p,
        vars: r.vars,
        t: r.t,
        terms: f
            .terms()
            .map(|(e, c)| TermJson {
                e: e.clone(),
                c: c.value() as i64,
            })
            .collect(),
    }
}

pub fn poly_from_json(j: &PolyJson) -> Result<LaurentPolynomial> {
    let ring = ring_from_parts(j.p, &j.vars, j.t)?;
    for term in &j.terms {
        if term.e.len() != ring.arity() {
            return Err(Error::Parse(format!(
                "exponent {:?} has length {}, ring expects {}",
                term.e,
                term.e.len(),
                ring.arity()
            )));
        }
        if ring.has_t() && term.e[ring.vars()] < 0 {
            return Err(Error::Parse("negative power of T".into()));
        }
    }
    LaurentPolynomial::from_terms(ring, j.terms.iter().map(|t| (t.e.clone(), t.c)))
}

fn entries_to_json(m: &RingMatrix) -> Vec<Vec<PolyJson>> {
    m.to_rows()
        .iter()
        .map(|row| row.iter().map(poly_to_json).collect())
        .collect()
}

pub fn matrix_to_json(m: &RingMatrix) -> MatrixJson {
    MatrixJson {
        rows: m.rows(),
        cols: m.cols(),
        entries: entries_to_json(m),
    }
}

fn matrix_from_parts(
    rows: usize,
    cols: usize,
    entries: &[Vec<PolyJson>],
    ring: Option<RingDescriptor>,
) -> Result<RingMatrix> {
    if entries.len() != rows || entries.iter().any(|r| r.len() != cols) {
        return Err(Error::Parse(format!(
            "entries do not form a {rows}x{cols} array"
        )));
    }
    let parsed: Vec<Vec<LaurentPolynomial>> = entries
        .iter()
        .map(|r| r.iter().map(poly_from_json).collect::<Result<_>>())
        .collect::<Result<_>>()?;
    let ring = match (ring, parsed.first().and_then(|r| r.first())) {
        (Some(r), _) => r,
        (None, Some(f)) => f.ring(),
        (None, None) => return Err(Error::Parse("empty matrix needs a ring".into())),
    };
    for f in parsed.iter().flatten() {
        ring.check_same(&f.ring())?;
    }
    if rows == 0 {
        return Ok(RingMatrix::zeros(ring, 0, cols));
    }
    RingMatrix::from_rows(ring, parsed)
}

/// `ring` is required only when the matrix has no entries.
pub fn matrix_from_json(j: &MatrixJson, ring: Option<RingDescriptor>) -> Result<RingMatrix> {
    matrix_from_parts(j.rows, j.cols, &j.entries, ring)
}

pub fn form_to_json(q: &HermitianForm) -> FormJson {
    let m = q.matrix();
    FormJson {
        rows: m.rows(),
        cols: m.cols(),
        entries: entries_to_json(m),
        sign: q.sign(),
    }
}

pub fn form_from_json(j: &FormJson, ring: Option<RingDescriptor>) -> Result<HermitianForm> {
    let m = matrix_from_parts(j.rows, j.cols, &j.entries, ring)?;
    HermitianForm::new(m, j.sign)
}

pub fn witt_to_json(w: &WittClass) -> WittJson {
    WittJson {
        p: w.p(),
        class: w.name(),
    }
}

pub fn witt_from_json(j: &WittJson) -> Result<WittClass> {
    WittClass::from_name(j.p, &j.class)
}

pub fn stabilizer_to_json(s: &StabilizerModule) -> StabilizerJson {
    StabilizerJson {
        n: s.ambient().n(),
        ring: ring_to_json(s.ambient().ring()),
        generators: matrix_to_json(s.generators()),
    }
}

pub fn stabilizer_from_json(j: &StabilizerJson) -> Result<StabilizerModule> {
    let ring = ring_from_json(&j.ring)?;
    let ambient = PauliModule::new(ring, j.n)?;
    StabilizerModule::new(ambient, matrix_from_json(&j.generators, Some(ring))?)
}

pub fn unitary_to_json(u: &CliffordUnitary) -> UnitaryJson {
    UnitaryJson {
        n: u.ambient().n(),
        matrix: matrix_to_json(u.matrix()),
    }
}

pub fn unitary_from_json(j: &UnitaryJson) -> Result<CliffordUnitary> {
    let m = matrix_from_json(&j.matrix, None)?;
    if m.rows() != 2 * j.n {
        return Err(Error::Shape(format!(
            "unitary of size {} does not act on N = {}",
            m.rows(),
            j.n
        )));
    }
    CliffordUnitary::new(m)
}

pub fn circuit_to_json(c: &Circuit) -> Vec<GateJson> {
    c.gates
        .iter()
        .map(|g| match g {
            Gate::E0(q) => GateJson::E0(form_to_json(q)),
            Gate::E1(q) => GateJson::E1(form_to_json(q)),
            Gate::H(a) => GateJson::H(matrix_to_json(a)),
        })
        .collect()
}

pub fn circuit_from_json(gates: &[GateJson]) -> Result<Circuit> {
    let gates = gates
        .iter()
        .map(|g| {
            Ok(match g {
                GateJson::E0(q) => Gate::E0(form_from_json(q, None)?),
                GateJson::E1(q) => Gate::E1(form_from_json(q, None)?),
                GateJson::H(a) => Gate::H(matrix_from_json(a, None)?),
            })
        })
        .collect::<Result<_>>()?;
    Ok(Circuit::new(gates))
}

/// Forms are written over the ring with `T`.
pub fn loop_to_json(lp: &LagrangianLoop) -> LoopJson {
    let seq = lp.sequence();
    LoopJson {
        n: seq.rank(),
        ring: ring_to_json(seq.ring()),
        sturm: seq.forms().iter().map(form_to_json).collect(),
    }
}

/// Parses a Sturm sequence starting at index 0; the result is not yet
/// validated as a loop.
pub fn sturm_from_json(j: &LoopJson) -> Result<SturmSequence> {
    let ring = ring_from_json(&j.ring)?;
    if j.n == 0 {
        return Err(Error::Shape("loops need N >= 1".into()));
    }
    if j.sturm.is_empty() {
        return Ok(SturmSequence::empty(ring, j.n, 0));
    }
    let forms = j
        .sturm
        .iter()
        .map(|f| form_from_json(f, Some(ring)))
        .collect::<Result<Vec<_>>>()?;
    let seq = SturmSequence::new(0, forms)?;
    if seq.rank() != j.n {
        return Err(Error::Shape(format!(
            "forms have rank {}, N = {}",
            seq.rank(),
            j.n
        )));
    }
    Ok(seq)
}

pub fn invariants_to_json(inv: &FormInvariants) -> InvariantsJson {
    InvariantsJson {
        rank_parity: inv.rank_parity,
        determinant: poly_to_json(&inv.determinant),
    }
}

pub fn maslov_to_json(m: &MaslovResult) -> MaslovJson {
    MaslovJson {
        form: form_to_json(&m.form),
        witt: m.witt.as_ref().map(witt_to_json),
        invariants: invariants_to_json(&m.invariants),
    }
}

pub fn report_to_json(r: &LagrangianReport) -> ReportJson {
    ReportJson {
        isotropic: r.isotropic,
        coisotropic: r.coisotropic,
        summand: r.summand,
        lagrangian: r.lagrangian,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn f5x() -> RingDescriptor {
        RingDescriptor::laurent(5, 1).unwrap()
    }

    #[test]
    fn poly_round_trip() {
        let r = f5x().with_t();
        let f = LaurentPolynomial::from_terms(r, vec![(vec![-1, 0], 3), (vec![2, 1], -1)]).unwrap();
        let j = poly_to_json(&f);
        let text = serde_json::to_string(&j).unwrap();
        assert_eq!(
            text,
            r#"{"p":5,"vars":["x1"],"T":true,"terms":[{"e":[-1,0],"c":3},{"e":[2,1],"c":4}]}"#
        );
        let back: PolyJson = serde_json::from_str(&text).unwrap();
        assert_eq!(poly_from_json(&back).unwrap(), f);
    }

    #[test]
    fn rejects_bad_input() {
        let bad = PolyJson {
            p: 5,
            vars: vec!["y".into()],
            t: false,
            terms: vec![],
        };
        assert!(matches!(poly_from_json(&bad), Err(Error::Parse(_))));
        let bad = PolyJson {
            p: 5,
            vars: vec!["x1".into()],
            t: false,
            terms: vec![TermJson {
                e: vec![1, 1],
                c: 1,
            }],
        };
        assert!(poly_from_json(&bad).is_err());
        let bad = PolyJson {
            p: 4,
            vars: vec![],
            t: false,
            terms: vec![],
        };
        assert!(matches!(poly_from_json(&bad), Err(Error::Domain(_))));
    }

    #[test]
    fn matrix_and_form_round_trip() {
        let r = f5x();
        let x = LaurentPolynomial::var(r, 1);
        let h = &x + &x.involute();
        let m = RingMatrix::from_rows(
            r,
            vec![
                vec![h.clone(), LaurentPolynomial::one(r)],
                vec![LaurentPolynomial::one(r), h],
            ],
        )
        .unwrap();
        let q = HermitianForm::plus(m.clone()).unwrap();
        let j = form_to_json(&q);
        assert_eq!(form_from_json(&j, None).unwrap(), q);
        assert_eq!(matrix_from_json(&matrix_to_json(&m), None).unwrap(), m);
        let mut skew = j.clone();
        skew.sign = -1;
        assert!(form_from_json(&skew, None).is_err());
    }

    #[test]
    fn gate_tagging() {
        let q = HermitianForm::diagonal(f5x(), &[1]);
        let c = Circuit::new(vec![Gate::E0(q)]);
        let v = serde_json::to_value(circuit_to_json(&c)).unwrap();
        assert_eq!(v[0]["kind"], "E0");
        assert_eq!(v[0]["payload"]["sign"], 1);
        let back: Vec<GateJson> = serde_json::from_value(v).unwrap();
        assert_eq!(circuit_from_json(&back).unwrap(), c);
    }

    #[test]
    fn witt_names() {
        let w = WittClass::theta(5);
        let j = witt_to_json(&w);
        assert_eq!(j.class, "<t>");
        assert_eq!(witt_from_json(&j).unwrap(), w);
    }
}
