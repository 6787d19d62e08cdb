use std::fmt::Write;

use serde_json::{json, Value};
use uthopf::gl_bridge::{verify_induction_hom, GlHopf};
use uthopf::hopf::scf::{self, ElementDisplay, TensorDisplay};
use uthopf::hopf::{axiom_suite, oracle_suite, specialize, GradedCf};
use uthopf::{Engine, Error, Laurent, Nuio, Rational, Report, Result, Scalar};

use crate::{Cli, Command, Format, GlCommand, NuioCommand, ScfCommand, UtCommand, VerifyCommand};

pub struct Output {
    pub text: String,
    pub code: u8,
}

fn ok(text: String) -> Result<Output> {
    Ok(Output { text, code: 0 })
}

fn json_text(v: &Value) -> String {
    serde_json::to_string_pretty(v).expect("serializable") + "\n"
}

pub fn run(cli: Cli) -> Result<Output> {
    let format = cli.format;
    match cli.command {
        Command::Nuio(NuioCommand::List { n, dyck }) => nuio_list(n, dyck, format),
        Command::Scf(cmd) => scf_command(cmd, format),
        Command::Ut(UtCommand::Specialize { q, operands }) => {
            let [x] = operands.exactly::<1>()?;
            let engine = Engine::new(q)?;
            graded(&specialize(&engine, &x)?, q, format)
        }
        Command::Gl(GlCommand::Induce { q, operands }) => {
            let [x] = operands.exactly::<1>()?;
            let engine = Engine::new(q)?;
            let hopf = GlHopf::new(&engine);
            graded(&hopf.induce(&specialize(&engine, &x)?)?, q, format)
        }
        Command::Verify(cmd) => verify(cmd, format),
    }
}

fn nuio_list(n: usize, dyck: bool, format: Format) -> Result<Output> {
    let all = Nuio::enumerate(n);
    match format {
        Format::Json => {
            let items: Vec<Value> = all
                .iter()
                .map(|p| {
                    let mut v = serde_json::to_value(p).expect("serializable");
                    if dyck {
                        v["dyck"] = json!(p.to_dyck().as_str());
                    }
                    v
                })
                .collect();
            ok(json_text(&Value::Array(items)))
        }
        Format::Text => {
            let mut out = String::new();
            for p in &all {
                let pairs: Vec<String> = p
                    .strict_pairs()
                    .iter()
                    .map(|(a, b)| format!("{a}<{b}"))
                    .collect();
                let _ = write!(out, "{{{}}}", pairs.join(","));
                if dyck {
                    let _ = write!(out, " {}", p.to_dyck().as_str());
                }
                out.push('\n');
            }
            ok(out)
        }
    }
}

fn scf_command(cmd: ScfCommand, format: Format) -> Result<Output> {
    let element = |x: &scf::ScfElement| match format {
        Format::Json => json_text(&scf::element_to_json(x)),
        Format::Text => ElementDisplay(x).to_string(),
    };
    match cmd {
        ScfCommand::Product(ops) => {
            let [x, y] = ops.exactly::<2>()?;
            ok(element(&scf::product(&x, &y)))
        }
        ScfCommand::Coproduct {
            operands,
            by_subset: true,
        } => {
            let [x] = operands.exactly::<1>()?;
            ok(subset_expansion(&x, format))
        }
        ScfCommand::Coproduct { operands, .. } => {
            let [x] = operands.exactly::<1>()?;
            let d = scf::coproduct(&x);
            ok(match format {
                Format::Json => json_text(&scf::tensor_to_json(&d)),
                Format::Text => TensorDisplay(&d).to_string(),
            })
        }
        ScfCommand::Antipode(ops) => {
            let [x] = ops.exactly::<1>()?;
            ok(element(&scf::antipode(&x)))
        }
        ScfCommand::Dagger(ops) => {
            let [x] = ops.exactly::<1>()?;
            ok(element(&scf::dagger(&x)))
        }
    }
}

fn subset_expansion(x: &scf::ScfElement, format: Format) -> String {
    let mut rows = Vec::new();
    for (pi, c) in x.iter() {
        for t in scf::subset_terms(pi) {
            let coeff = c * &Laurent::t_pow(t.exponent as i32);
            rows.push((pi.clone(), t, coeff));
        }
    }
    match format {
        Format::Json => {
            let terms: Vec<Value> = rows
                .iter()
                .map(|(pi, t, c)| {
                    let coeff: serde_json::Map<String, Value> =
                        c.terms().map(|(e, v)| (e.to_string(), json!(v.render()))).collect();
                    json!({"source": pi, "subset": t.subset, "left": t.left, "right": t.right, "coeff": coeff})
                })
                .collect();
            json_text(&json!({ "terms": terms }))
        }
        Format::Text => {
            let mut out = String::new();
            for (pi, t, c) in &rows {
                let single = scf::ScfTensor::term((t.left.clone(), t.right.clone()), c.clone());
                let line = TensorDisplay(&single).to_string();
                let sub: Vec<String> = t.subset.iter().map(ToString::to_string).collect();
                let _ = write!(out, "{pi} I={{{}}}: {line}", sub.join(","));
            }
            out
        }
    }
}

fn graded(x: &GradedCf<Rational>, q: u32, format: Format) -> Result<Output> {
    match format {
        Format::Json => {
            let components: Vec<Value> = x
                .components()
                .iter()
                .map(|(n, f)| json!({"degree": n, "class_function": f.to_json()}))
                .collect();
            ok(json_text(&json!({"q": q, "components": components})))
        }
        Format::Text => {
            let mut out = String::new();
            if x.is_zero() {
                out.push_str("0\n");
            }
            for (n, f) in x.components() {
                let _ = writeln!(out, "degree {n}: {}", f.group().label());
                for (c, v) in f.values().iter().enumerate() {
                    let g = f.group();
                    let rep = g.class_rep_matrix(c as u32).digits();
                    let _ = writeln!(
                        out,
                        "  class {c} rep {rep} size {}: {}",
                        g.class_size(c as u32),
                        v.render()
                    );
                }
            }
            ok(out)
        }
    }
}

fn verify(cmd: VerifyCommand, format: Format) -> Result<Output> {
    let report = match cmd {
        VerifyCommand::MonoidAxioms { n, q } => axiom_suite(&Engine::new(q)?, n)?,
        VerifyCommand::Oracle { n, q } => oracle_suite(&Engine::new(q)?, n)?,
        VerifyCommand::InductionHom { n, q, extended } => {
            if n >= 4 && !extended {
                return Err(Error::Precondition(
                    "degree 4 and above needs --extended".into(),
                ));
            }
            verify_induction_hom(&Engine::new(q)?, n)?
        }
        VerifyCommand::Noncocommutativity => scf::noncommutativity_report(),
    };
    let code = if report.passed() { 0 } else { 1 };
    let text = match format {
        Format::Json => json_text(&serde_json::to_value(&report).expect("serializable")),
        Format::Text => report_text(&report),
    };
    Ok(Output { text, code })
}

fn report_text(report: &Report) -> String {
    let mut out = String::new();
    for e in &report.entries {
        let status = if e.passed() { "PASS" } else { "FAIL" };
        let _ = writeln!(out, "{status} {} {}", e.check, e.instance);
    }
    for (check, pass, fail) in report.tally() {
        let _ = writeln!(out, "{check}: {pass} passed, {fail} failed");
    }
    out
}
