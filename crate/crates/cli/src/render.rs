//! Command results: a JSON value plus an optional text rendering of it.

use std::io::IsTerminal;

use maslovkit::forms::WittClass;
use maslovkit::lgroups::{ClassificationTable, FiniteAbelianGroup, Provenance};
use maslovkit::pauli::{LagrangianReport, StabilizerModule};
use maslovkit::sturm::{LagrangianLoop, MaslovResult};
use maslovkit::wire;
use serde_json::{json, Value};

type TextFn = Box<dyn Fn(&Paint) -> String>;

pub struct Output {
    json: Value,
    text: Option<TextFn>,
}

impl Output {
    pub fn new(json: Value, text: String) -> Self {
        Output {
            json,
            text: Some(Box::new(move |_| text.clone())),
        }
    }

    fn styled(json: Value, text: impl Fn(&Paint) -> String + 'static) -> Self {
        Output {
            json,
            text: Some(Box::new(text)),
        }
    }

    pub fn json_only(json: Value) -> Self {
        Output { json, text: None }
    }

    pub fn json_text(&self) -> String {
        serde_json::to_string_pretty(&self.json).expect("values serialize")
    }

    pub fn text(&self, color: bool) -> String {
        match &self.text {
            Some(f) => f(&Paint { color }),
            None => self.json_text(),
        }
    }
}

/// `MASLOVKIT_COLOR=never` disables color; anything else means auto.
pub fn color_enabled() -> bool {
    match std::env::var("MASLOVKIT_COLOR") {
        Ok(v) if v == "never" => false,
        _ => std::io::stdout().is_terminal(),
    }
}

pub struct Paint {
    color: bool,
}

impl Paint {
    fn wrap(&self, code: &str, s: &str) -> String {
        if self.color {
            format!("\x1b[{code}m{s}\x1b[0m")
        } else {
            s.to_string()
        }
    }

    fn bold(&self, s: &str) -> String {
        self.wrap("1", s)
    }

    fn flag(&self, b: bool) -> String {
        if b {
            self.wrap("32", "true")
        } else {
            self.wrap("31", "false")
        }
    }
}

fn rows(pairs: &[(&str, String)]) -> String {
    let width = pairs.iter().map(|(k, _)| k.len()).max().unwrap_or(0);
    pairs
        .iter()
        .map(|(k, v)| format!("{k:<width$}  {v}"))
        .collect::<Vec<_>>()
        .join("\n")
}

pub fn witt(w: &WittClass) -> Output {
    Output::new(json!(wire::witt_to_json(w)), w.name())
}

fn maslov_rows(m: &MaslovResult) -> Vec<(&'static str, String)> {
    vec![
        (
            "witt",
            m.witt
                .map(|w| w.name())
                .unwrap_or_else(|| "n/a (ring is not F_p)".into()),
        ),
        ("rank parity", m.invariants.rank_parity.to_string()),
        ("determinant", m.invariants.determinant.to_string()),
        ("form", m.form.matrix().to_string()),
    ]
}

pub fn maslov(m: &MaslovResult) -> Output {
    Output::new(json!(wire::maslov_to_json(m)), rows(&maslov_rows(m)))
}

pub fn pair(lp: &LagrangianLoop, m: &MaslovResult) -> Output {
    let seq = lp.sequence();
    let mut r = vec![(
        "loop",
        format!(
            "N = {} over {}, {} forms",
            seq.rank(),
            seq.ring(),
            seq.len()
        ),
    )];
    r.extend(maslov_rows(m));
    Output::new(
        json!({ "loop": wire::loop_to_json(lp), "maslov": wire::maslov_to_json(m) }),
        rows(&r),
    )
}

pub fn report(r: &LagrangianReport) -> Output {
    let r = *r;
    Output::styled(json!(wire::report_to_json(&r)), move |paint| {
        rows(&[
            ("isotropic", paint.flag(r.isotropic)),
            ("coisotropic", paint.flag(r.coisotropic)),
            ("summand", paint.flag(r.summand)),
            ("lagrangian", paint.flag(r.lagrangian)),
        ])
    })
}

pub fn stabilizer(s: &StabilizerModule) -> Output {
    let a = s.ambient();
    Output::new(
        json!(wire::stabilizer_to_json(s)),
        rows(&[
            ("module", format!("N = {} over {}", a.n(), a.ring())),
            ("generators", s.generators().to_string()),
        ]),
    )
}

/// Runs of more than four equal summands print as `(Z/n)^k`.
fn group_text(g: &FiniteAbelianGroup) -> String {
    if g.is_trivial() {
        return "0".into();
    }
    let mut parts = Vec::new();
    let orders = g.cyclic_orders();
    let mut i = 0;
    while i < orders.len() {
        let run = orders[i..].iter().take_while(|&&o| o == orders[i]).count();
        if run > 4 {
            parts.push(format!("(Z/{})^{run}", orders[i]));
        } else {
            parts.extend(std::iter::repeat_n(format!("Z/{}", orders[i]), run));
        }
        i += run;
    }
    parts.join("+")
}

pub fn table(t: &ClassificationTable) -> Output {
    let t = t.clone();
    Output::styled(json!(t), move |paint| {
        let mut out = vec![paint.bold(&format!("p = {} ({} mod 4)", t.p, t.p_mod_4))];
        out.push(String::new());
        let gw = t
            .lgroups
            .iter()
            .map(|r| group_text(&r.group).len())
            .chain([10])
            .max()
            .unwrap_or(0);
        out.push(paint.bold(&format!("{:>2}  {:>2}  {:<gw$}", "n", "d", "L_n(F_p^d)")));
        for row in &t.lgroups {
            let note = if row.validated { "" } else { "unvalidated" };
            out.push(format!(
                "{:>2}  {:>2}  {:<gw$}  {note}",
                row.n,
                row.d,
                group_text(&row.group)
            ));
        }
        out.push(String::new());
        out.push(paint.bold(&format!(
            "{:>2}  {:<17}  {:<9}  {}",
            "d", "fundamental ideal", "loops", "source"
        )));
        for row in &t.classification {
            let source = match row.provenance {
                Provenance::Recursion => "recursion",
                Provenance::Theorem => "theorem",
            };
            out.push(format!(
                "{:>2}  {:<17}  {:<9}  {source}",
                row.d,
                group_text(&row.fundamental_ideal),
                group_text(&row.loops)
            ));
        }
        let out: Vec<&str> = out.iter().map(|l| l.trim_end()).collect();
        out.join("\n").trim_end().to_string()
    })
}

pub fn preset_list(items: Vec<(&str, &str, &str)>) -> Output {
    let json = Value::Array(
        items
            .iter()
            .map(|(n, k, d)| json!({ "name": n, "kind": k, "description": d }))
            .collect(),
    );
    let width = items.iter().map(|(n, _, _)| n.len()).max().unwrap_or(0);
    let text = items
        .iter()
        .map(|(n, k, d)| format!("{n:<width$}  {k:<10}  {d}"))
        .collect::<Vec<_>>()
        .join("\n");
    Output::new(json, text)
}
