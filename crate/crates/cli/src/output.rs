use std::fmt::Write;

use crate::certificate::{Certificate, KlOutput, Outputs, SupportOutput, VerifyOutput};
use crate::config::Format;
use crate::error::CliError;

pub fn render(cert: &Certificate, format: Format) -> Result<String, CliError> {
    Ok(match format {
        Format::Json => {
            let mut s = serde_json::to_string_pretty(cert)?;
            s.push('\n');
            s
        }
        Format::Csv => match &cert.outputs {
            Outputs::Verify(v) => verify_csv(v),
            _ => {
                return Err(CliError::Input(
                    "csv output is only available for verify".into(),
                ))
            }
        },
        Format::Text => match &cert.outputs {
            Outputs::Support(s) => support_text(s),
            Outputs::Verify(v) => verify_text(cert, v),
            Outputs::Kl(k) => kl_text(k),
        },
    })
}

fn join<T: ToString>(xs: &[T]) -> String {
    xs.iter()
        .map(|x| x.to_string())
        .collect::<Vec<_>>()
        .join(",")
}

fn word(xs: &[usize]) -> String {
    if xs.is_empty() {
        "e".into()
    } else {
        join(xs)
    }
}

fn csv_field(s: &str) -> String {
    if s.contains([',', '"', '\n']) {
        format!("\"{}\"", s.replace('"', "\"\""))
    } else {
        s.to_string()
    }
}

fn verify_csv(v: &VerifyOutput) -> String {
    let mut out = String::from("weight,verdict,s,w_length,a_count,psi_multiplicity_d,psi_multiplicity_f,borel_bound,full_bound,error\n");
    let opt = |x: Option<String>| x.unwrap_or_default();
    for r in &v.weights {
        let row = [
            join(&r.weight),
            r.verdict.as_str().to_string(),
            opt(r.s.map(|x| x.to_string())),
            opt(r.w_length.map(|x| x.to_string())),
            opt(r.a_count.map(|x| x.to_string())),
            opt(r.psi_multiplicity_d.map(|x| x.to_string())),
            opt(r.psi_multiplicity_f.map(|x| x.to_string())),
            opt(r.borel_bound.map(|x| x.to_string())),
            opt(r.full_bound.map(|x| x.to_string())),
            opt(r.error.clone()),
        ];
        let row: Vec<String> = row.iter().map(|f| csv_field(f)).collect();
        out.push_str(&row.join(","));
        out.push('\n');
    }
    out
}

fn support_text(s: &SupportOutput) -> String {
    let mut out = String::new();
    let _ = writeln!(
        out,
        "{}{} ell={} mode={} module={} weight=({})",
        s.family,
        s.rank,
        s.ell,
        s.mode,
        s.module,
        join(&s.weight)
    );
    let _ = writeln!(
        out,
        "J = {{{}}}  conjugator = {}",
        join(&s.j),
        word(&s.conjugator_word)
    );
    let _ = writeln!(out, "support = {}  dimension = {}", s.orbit, s.dimension);
    if s.conditional_on_lcf {
        let _ = writeln!(
            out,
            "conditional on Lusztig's character formula (reduced weight ({}))",
            join(&s.weight_reduced)
        );
    }
    out
}

fn verify_text(cert: &Certificate, v: &VerifyOutput) -> String {
    let mut out = String::new();
    for r in &v.weights {
        let _ = write!(out, "({}) {}", join(&r.weight), r.verdict.as_str());
        if let (Some(s), Some(lhs)) = (r.s, &r.derivative_at_zeta) {
            let _ = write!(out, "  s={s}  D^(s)(zeta) = {lhs}");
        }
        if let Some(e) = &r.error {
            let _ = write!(out, "  [{e}]");
        }
        out.push('\n');
    }
    let s = &v.summary;
    let _ = writeln!(
        out,
        "{} weights: {} passed, {} failed, {} over capacity{}  ({} KL columns computed, {} loaded)",
        s.total,
        s.passed,
        s.failed,
        s.capacity_exceeded,
        if s.complete { "" } else { " (incomplete)" },
        cert.cache.columns_computed,
        cert.cache.columns_loaded
    );
    out
}

fn kl_text(k: &KlOutput) -> String {
    let mut out = String::new();
    let _ = writeln!(
        out,
        "y = {} (length {})  w = {} (length {})",
        word(&k.y_word),
        k.y_length,
        word(&k.w_word),
        k.w_length
    );
    if let Some(p) = &k.parabolic {
        let _ = writeln!(out, "parabolic I = {{{}}}", join(p));
    }
    let _ = writeln!(out, "y <= w: {}", k.bruhat_leq);
    match (&k.polynomial, k.value_at_one) {
        (Some(p), Some(v)) => {
            let _ = writeln!(out, "P = {p}  P(1) = {v}");
        }
        _ => out.push_str("P not computed: KL length capacity exceeded\n"),
    }
    out
}
