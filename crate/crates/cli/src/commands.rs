//! Verb dispatch.

use std::path::PathBuf;

use arf_core::arf::{arf_computation, arf_diagram_check, witt_class, witt_decompose, wu_route};
use arf_core::tower::{as_member_at, lemma0_descend, lemma0_forward, DEFAULT_MAX_LEVEL};
use arf_core::{
    ArtinSchreier, AsClassFF, BinaryField, Error, QuadForm, SquareRoots, TowerElem, TowerField,
};
use serde_json::{json, Value};

use crate::error::{CliError, Result};
use crate::expr::{format_tower_elem, parse_bin_elem, parse_tower_elem};
use crate::field_spec::{parse_field_spec, FieldSpec};
use crate::form_file::{
    class_ff_to_json, class_to_json, load_form, vector_to_json, AnyForm, JsonField,
};
use crate::report::Report;
use crate::selftest::{self, SelftestConfig};

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum Verb {
    Arf,
    Parf,
    Symplectic,
    Witt,
    AsSolve,
    ClassEq,
    Descend,
    DiagramCheck,
    Selftest,
}

impl Verb {
    pub fn name(self) -> &'static str {
        match self {
            Verb::Arf => "arf",
            Verb::Parf => "parf",
            Verb::Symplectic => "symplectic",
            Verb::Witt => "witt",
            Verb::AsSolve => "as-solve",
            Verb::ClassEq => "class-eq",
            Verb::Descend => "descend",
            Verb::DiagramCheck => "diagram-check",
            Verb::Selftest => "selftest",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Command {
    pub verb: Verb,
    pub field: Option<String>,
    pub form: Option<PathBuf>,
    pub exprs: Vec<String>,
    pub level: Option<u32>,
    pub seed: Option<u64>,
    /// Highest tower level any input may reach.
    pub max_level: u32,
    pub corrupt_modulus: bool,
}

impl Command {
    pub fn new(verb: Verb) -> Self {
        Self {
            verb,
            field: None,
            form: None,
            exprs: Vec::new(),
            level: None,
            seed: None,
            max_level: DEFAULT_MAX_LEVEL,
            corrupt_modulus: false,
        }
    }

    /// Checks that the payload fits the verb, before any computation.
    pub fn validate(&self) -> Result<()> {
        let verb = self.verb.name();
        let usage = |msg: &str| Err(CliError::Usage(format!("{verb}: {msg}")));
        let takes_form = matches!(
            self.verb,
            Verb::Arf | Verb::Parf | Verb::Symplectic | Verb::Witt | Verb::DiagramCheck
        );
        let exprs = match self.verb {
            Verb::AsSolve | Verb::Descend => 1,
            Verb::ClassEq => 2,
            _ => 0,
        };
        if takes_form && self.form.is_none() {
            return usage("--form is required");
        }
        if !takes_form && self.form.is_some() {
            return usage("--form is not accepted");
        }
        if self.exprs.len() != exprs {
            return usage(&format!("expected {exprs} --expr, found {}", self.exprs.len()));
        }
        if matches!(self.verb, Verb::AsSolve | Verb::ClassEq) && self.field.is_none() {
            return usage("--field is required");
        }
        if self.verb == Verb::DiagramCheck && self.level.is_none() {
            return usage("--level is required");
        }
        if self.level.is_some() && !matches!(self.verb, Verb::DiagramCheck | Verb::Parf) {
            return usage("--level is not accepted");
        }
        if self.seed.is_some() && self.verb != Verb::Selftest {
            return usage("--seed is only accepted by selftest");
        }
        if self.corrupt_modulus && self.verb != Verb::Selftest {
            return usage("--inject-corrupt-modulus is only accepted by selftest");
        }
        if self.verb == Verb::Selftest && self.field.is_some() {
            return usage("--field is not accepted");
        }
        Ok(())
    }

    fn field_spec(&self) -> Result<Option<FieldSpec>> {
        self.field
            .as_deref()
            .map(|s| parse_field_spec(s, self.max_level))
            .transpose()
    }

    fn load_form(&self) -> Result<AnyForm> {
        let path = self.form.as_ref().expect("validated");
        let form = load_form(path, self.max_level)?;
        if let Some(spec) = self.field_spec()? {
            if spec != form.field_spec() {
                return Err(CliError::Usage(format!(
                    "--field {spec} does not match the form field {}",
                    form.field_spec()
                )));
            }
        }
        Ok(form)
    }
}

/// Runs a command. Decision verbs with a negative answer return a report
/// flagged `negative`; errors are returned as `Err`.
pub fn run(cmd: &Command) -> Result<Report> {
    cmd.validate()?;
    match cmd.verb {
        Verb::Arf => arf(cmd),
        Verb::Parf => parf(cmd),
        Verb::Symplectic => symplectic(cmd),
        Verb::Witt => witt(cmd),
        Verb::AsSolve => as_solve(cmd),
        Verb::ClassEq => class_eq(cmd),
        Verb::Descend => descend(cmd),
        Verb::DiagramCheck => diagram_check(cmd),
        Verb::Selftest => Ok(selftest(cmd)),
    }
}

fn columns<F: JsonField>(k: &F, vs: impl Iterator<Item = Vec<F::Elem>>) -> Value {
    Value::Array(vs.map(|v| vector_to_json(k, &v)).collect())
}

fn arf(cmd: &Command) -> Result<Report> {
    let form = cmd.load_form()?;
    let field = Some(form.field_spec().to_string());
    let (result, witnesses) = match &form {
        AnyForm::Binary(q) => {
            let c = arf_computation(q)?;
            let k = q.field();
            (
                json!({ "class": class_to_json(k, &c.class), "trivial": c.class.is_zero() }),
                json!({
                    "e": columns(k, (0..c.basis.pairs()).map(|i| c.basis.e(i))),
                    "f": columns(k, (0..c.basis.pairs()).map(|i| c.basis.f(i))),
                    "sum": k.elem_to_json(&c.sum),
                }),
            )
        }
        AnyForm::Tower(q) => {
            let c = arf_computation(q)?;
            let k = q.field();
            (
                json!({ "class": class_ff_to_json(&c.class), "trivial": c.class.is_zero() }),
                json!({
                    "e": columns(k, (0..c.basis.pairs()).map(|i| c.basis.e(i))),
                    "f": columns(k, (0..c.basis.pairs()).map(|i| c.basis.f(i))),
                    "sum": k.elem_to_json(&c.sum),
                }),
            )
        }
    };
    Ok(Report::new(cmd.verb.name(), field, result, witnesses))
}

fn wu_report<F>(q: &QuadForm<F>, class: Value, trivial: bool) -> Result<(Value, Value)>
where
    F: JsonField + SquareRoots + ArtinSchreier,
{
    let w = wu_route(q)?;
    let k = q.field();
    Ok((
        json!({ "class": class, "trivial": trivial }),
        json!({
            "lagrangian": columns(k, (0..w.basis.pairs()).map(|i| w.basis.e(i))),
            "wu_vector": vector_to_json(k, w.wu.vector()),
            "q_wu": k.elem_to_json(&w.value),
        }),
    ))
}

/// Over F₂(t) the square roots live one level up, so the Wu route runs over
/// `K_{m+1}` unless `--level` says otherwise.
fn parf(cmd: &Command) -> Result<Report> {
    let form = cmd.load_form()?;
    let (field, (result, witnesses)) = match &form {
        AnyForm::Binary(q) => {
            if cmd.level.is_some() {
                return Err(CliError::Usage("parf: --level applies to F2(t) forms only".into()));
            }
            let w = wu_route(q)?;
            let class = class_to_json(q.field(), &w.class);
            (form.field_spec(), wu_report(q, class, w.class.is_zero())?)
        }
        AnyForm::Tower(q) => {
            let base = q.field().level();
            let m = cmd.level.unwrap_or(base + 1);
            if m < base {
                return Err(CliError::Usage(format!(
                    "parf: --level {m} is below the form level {base}"
                )));
            }
            let lifted = q.with_field(q.field().at_level(m)?)?;
            let w = wu_route(&lifted)?;
            let class = class_ff_to_json(&w.class);
            (
                FieldSpec::Tower(lifted.field().clone()),
                wu_report(&lifted, class, w.class.is_zero())?,
            )
        }
    };
    Ok(Report::new(cmd.verb.name(), Some(field.to_string()), result, witnesses))
}

fn symplectic(cmd: &Command) -> Result<Report> {
    fn go<F: JsonField>(q: &QuadForm<F>) -> Result<(Value, Value)> {
        let k = q.field();
        let s = q.symplectic_basis()?;
        let moved = q.base_change(s.matrix())?;
        Ok((
            json!({
                "e": columns(k, (0..s.pairs()).map(|i| s.e(i))),
                "f": columns(k, (0..s.pairs()).map(|i| s.f(i))),
            }),
            json!({
                "q_e": vector_to_json(k, &(0..s.pairs()).map(|i| moved.diag()[2 * i].clone()).collect::<Vec<_>>()),
                "q_f": vector_to_json(k, &(0..s.pairs()).map(|i| moved.diag()[2 * i + 1].clone()).collect::<Vec<_>>()),
            }),
        ))
    }
    let form = cmd.load_form()?;
    let (result, witnesses) = match &form {
        AnyForm::Binary(q) => go(q)?,
        AnyForm::Tower(q) => go(q)?,
    };
    Ok(Report::new(
        cmd.verb.name(),
        Some(form.field_spec().to_string()),
        result,
        witnesses,
    ))
}

fn witt(cmd: &Command) -> Result<Report> {
    let form = cmd.load_form()?;
    let AnyForm::Binary(q) = &form else {
        return Err(CliError::Usage("witt: requires a finite field gf2:<n>:<modulus>".into()));
    };
    let class = witt_class(q)?;
    let d = witt_decompose(q)?;
    let k = q.field();
    Ok(Report::new(
        cmd.verb.name(),
        Some(form.field_spec().to_string()),
        json!({
            "hyperbolic_planes": d.hyperbolic_count,
            "anisotropic_dim": class.anisotropic_dim,
            "arf_bit": class.arf_bit,
            "neutral": d.is_neutral(),
        }),
        json!({ "anisotropic_basis": columns(k, d.anisotropic_basis.iter().cloned()) }),
    ))
}

/// Parses a tower element that must already live in `k`.
fn tower_elem_in(s: &str, k: &TowerField) -> Result<TowerElem> {
    let x = parse_tower_elem(s, k.cap())?;
    if x.level() > k.level() {
        return Err(Error::LevelCapExceeded {
            level: x.level(),
            cap: k.level(),
        }
        .into());
    }
    Ok(x)
}

fn binary_field(spec: &FieldSpec) -> Option<&BinaryField> {
    match spec {
        FieldSpec::Binary(k) => Some(k),
        FieldSpec::Tower(_) => None,
    }
}

fn as_solve(cmd: &Command) -> Result<Report> {
    let spec = cmd.field_spec()?.expect("validated");
    let expr = &cmd.exprs[0];
    let (result, witnesses, found) = match &spec {
        FieldSpec::Binary(k) => {
            let a = parse_bin_elem(expr, k)?;
            let x = k.as_solve(a);
            (
                json!({ "solution": x.map(|x| x.0) }),
                json!({ "class": class_to_json(k, &k.cokernel_rep(a)) }),
                x.is_some(),
            )
        }
        FieldSpec::Tower(k) => {
            let a = tower_elem_in(expr, k)?;
            let x = as_member_at(&a, k.level());
            (
                json!({ "solution": x.as_ref().map(format_tower_elem) }),
                json!({ "input": format_tower_elem(&a) }),
                x.is_some(),
            )
        }
    };
    let mut report = Report::new(cmd.verb.name(), Some(spec.to_string()), result, witnesses);
    report.negative = !found;
    Ok(report)
}

fn class_eq(cmd: &Command) -> Result<Report> {
    let spec = cmd.field_spec()?.expect("validated");
    let (result, witnesses, equal) = if let Some(k) = binary_field(&spec) {
        let a = parse_bin_elem(&cmd.exprs[0], k)?;
        let b = parse_bin_elem(&cmd.exprs[1], k)?;
        let x = k.as_solve(k.add(a, b));
        (
            json!({ "equal": x.is_some() }),
            json!({
                "classes": [class_to_json(k, &k.cokernel_rep(a)), class_to_json(k, &k.cokernel_rep(b))],
                "difference_preimage": x.map(|x| x.0),
            }),
            x.is_some(),
        )
    } else {
        let FieldSpec::Tower(k) = &spec else { unreachable!() };
        let a = tower_elem_in(&cmd.exprs[0], k)?;
        let b = tower_elem_in(&cmd.exprs[1], k)?;
        let ca = AsClassFF::new(a.clone(), k.level());
        let cb = AsClassFF::new(b.clone(), k.level());
        let equal = arf_core::tower::class_eq(&ca, &cb);
        let x = as_member_at(&a.add(&b), k.level());
        debug_assert_eq!(x.is_some(), equal);
        (
            json!({ "equal": equal }),
            json!({ "difference_preimage": x.as_ref().map(format_tower_elem) }),
            equal,
        )
    };
    let mut report = Report::new(cmd.verb.name(), Some(spec.to_string()), result, witnesses);
    report.negative = !equal;
    Ok(report)
}

fn descend(cmd: &Command) -> Result<Report> {
    let k = match cmd.field_spec()? {
        None => TowerField::with_cap(cmd.max_level, cmd.max_level)?,
        Some(FieldSpec::Tower(k)) => k,
        Some(FieldSpec::Binary(_)) => {
            return Err(CliError::Usage("descend: requires f2t or f2t-tower:<m>".into()))
        }
    };
    let x = tower_elem_in(&cmd.exprs[0], &k)?;
    let d = lemma0_descend(&x);
    let y = TowerElem::base(d.y.clone());
    let identity = d.witness.artin_schreier().add(&y) == x;
    let class = lemma0_forward(&d.y, x.height())?;
    Ok(Report::new(
        cmd.verb.name(),
        Some(FieldSpec::Tower(k).to_string()),
        json!({ "y": format_tower_elem(&y), "height": x.height() }),
        json!({
            "witness": format_tower_elem(&d.witness),
            "identity_holds": identity,
            "class_of_y": class_ff_to_json(&class),
        }),
    ))
}

fn diagram_check(cmd: &Command) -> Result<Report> {
    let form = cmd.load_form()?;
    let AnyForm::Tower(q) = &form else {
        return Err(CliError::Usage("diagram-check: requires an f2t form".into()));
    };
    let m = cmd.level.expect("validated");
    if m > cmd.max_level {
        return Err(Error::LevelCapExceeded {
            level: m,
            cap: cmd.max_level,
        }
        .into());
    }
    let holds = arf_diagram_check(q, m)?;
    let arf = arf_computation(q)?.class;
    let lifted = AsClassFF::new(arf.rep().clone(), arf.ambient().max(m));
    let mut report = Report::new(
        cmd.verb.name(),
        Some(form.field_spec().to_string()),
        json!({ "commutes": holds }),
        json!({ "arf_class_lifted": class_ff_to_json(&lifted), "level": m }),
    );
    report.negative = !holds;
    Ok(report)
}

fn selftest(cmd: &Command) -> Report {
    let config = SelftestConfig {
        seed: cmd.seed.unwrap_or(selftest::DEFAULT_SEED),
        corrupt_modulus: cmd.corrupt_modulus,
    };
    let rows = selftest::run_all(&config);
    let failed = rows.iter().filter(|r| !r.passed()).count();
    let mut text = selftest::render_table(&rows);
    text.push_str(&format!(
        "seed {:#x}: {} of {} criteria passed\n",
        config.seed,
        rows.len() - failed,
        rows.len()
    ));
    let mut report = Report::new(
        cmd.verb.name(),
        None,
        json!({ "passed": failed == 0, "criteria": rows }),
        json!({ "seed": config.seed }),
    );
    report.negative = failed > 0;
    report.text = Some(text);
    report
}
