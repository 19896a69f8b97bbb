use rayon::prelude::*;

use suppvar::affine_weyl::{bruhat_leq, AffineWeylElement};
use suppvar::gendim::{d_poly, derivative_certificate, multiplicity_and_complexity};
use suppvar::kl::KlTable;
use suppvar::root_system::{Mode, RootSystem, Weight, WeylElement};
use suppvar::support::{irreducible_support, weyl_module_support, ModuleKind};
use suppvar::Error;

use crate::certificate::{
    KlOutput, Outputs, Summary, SupportOutput, Verdict, VerifyOutput, WeightReport,
};
use crate::config::{parse_labels, RunConfig};
use crate::error::CliError;

pub fn mode_name(mode: Mode) -> &'static str {
    match mode {
        Mode::Quantum => "quantum",
        Mode::Modular => "modular",
    }
}

pub fn module_name(kind: ModuleKind) -> &'static str {
    match kind {
        ModuleKind::Irreducible => "irreducible",
        ModuleKind::Weyl => "weyl",
    }
}

pub fn cmd_support(cfg: &RunConfig) -> Result<(Outputs, Verdict), CliError> {
    let weight = cfg
        .weight
        .as_ref()
        .ok_or_else(|| CliError::Input("support needs --weight".into()))?;
    let d = match cfg.module {
        ModuleKind::Irreducible => irreducible_support(&cfg.rs, weight, cfg.level)?,
        ModuleKind::Weyl => weyl_module_support(&cfg.rs, weight, cfg.level)?,
    };
    let ct = cfg.rs.cartan_type();
    let out = SupportOutput {
        family: ct.family.to_string(),
        rank: ct.rank,
        ell: d.ell,
        mode: mode_name(d.mode).into(),
        module: module_name(d.module_kind).into(),
        orbit: d.orbit_label(),
        weight: d.lambda.0,
        weight_reduced: d.lambda_reduced.0,
        j: d.j,
        conjugator_word: d.conjugator_word,
        dimension: d.dimension,
        phi_lambda_size: d.phi_lambda_size,
        conditional_on_lcf: d.conditional_on_lcf,
    };
    Ok((Outputs::Support(out), Verdict::Pass))
}

fn verify_weight(cfg: &RunConfig, table: &mut KlTable, weight: &Weight) -> WeightReport {
    let mut r = WeightReport::new(weight.0.clone());
    match derivative_certificate(&cfg.rs, cfg.level, weight) {
        Ok(c) => {
            if !c.lhs_nonzero {
                r.mark(Verdict::Fail, format!("D^({})(zeta) vanishes", c.s));
            } else if !c.equal {
                r.mark(
                    Verdict::Fail,
                    format!(
                        "D^({})(zeta) = {} differs from the closed form {}",
                        c.s, c.lhs, c.rhs
                    ),
                );
            }
            r.lambda_minus = Some(c.lambda_minus.0);
            r.w_length = Some(c.w_length);
            r.a_count = Some(c.a_count);
            r.s = Some(c.s);
            r.derivative_at_zeta = Some(c.lhs.to_string());
            r.closed_form = Some(c.rhs.to_string());
        }
        Err(e) => r.mark(Verdict::Fail, e.to_string()),
    }
    match d_poly(&cfg.rs, weight).and_then(|d| d.psi_multiplicity(cfg.level.ell())) {
        Ok(m) => {
            r.psi_multiplicity_d = Some(m);
            let s = cfg
                .rs
                .phi_lambda(weight, cfg.level)
                .map(|p| p.num_positive(&cfg.rs));
            if !matches!(s, Ok(s) if s == m as usize) {
                r.mark(
                    Verdict::Fail,
                    format!("Psi-multiplicity of D_lambda is {m}, not |Phi^+_lambda|"),
                );
            }
        }
        Err(e) => r.mark(Verdict::Fail, e.to_string()),
    }
    match multiplicity_and_complexity(&cfg.rs, cfg.level, table, weight) {
        Ok(c) => {
            r.character = Some(c.character.to_string());
            r.psi_multiplicity_f = Some(c.n);
            r.f_derivative_at_zeta = Some(c.f_derivative_at_zeta.to_string());
            r.borel_bound = Some(c.borel_bound);
            r.full_bound = Some(c.full_bound);
        }
        Err(e @ Error::Capacity { .. }) => r.mark(Verdict::CapacityExceeded, e.to_string()),
        Err(e) => r.mark(Verdict::Fail, e.to_string()),
    }
    r
}

/// Run the sweep, returning the reports in sweep order and the enlarged table.
pub fn cmd_verify(
    cfg: &RunConfig,
    table: KlTable,
) -> Result<(Outputs, Verdict, KlTable), CliError> {
    let weights = cfg.sweep();
    let (reports, table) = if cfg.jobs <= 1 || weights.len() <= 1 {
        let mut table = table;
        let reports = weights
            .iter()
            .map(|w| verify_weight(cfg, &mut table, w))
            .collect();
        (reports, table)
    } else {
        sweep_parallel(cfg, table, &weights)?
    };
    let summary = Summary::of(&reports);
    let verdict = reports
        .iter()
        .fold(Verdict::Pass, |v, r| v.combine(r.verdict));
    Ok((
        Outputs::Verify(VerifyOutput {
            summary,
            weights: reports,
        }),
        verdict,
        table,
    ))
}

fn sweep_parallel(
    cfg: &RunConfig,
    table: KlTable,
    weights: &[Weight],
) -> Result<(Vec<WeightReport>, KlTable), CliError> {
    let jobs = cfg.jobs.min(weights.len());
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(jobs)
        .build()
        .map_err(|e| CliError::Input(format!("cannot start {jobs} workers: {e}")))?;
    // Interleave so each worker sees small and large weights alike.
    let workers: Vec<(KlTable, Vec<(usize, WeightReport)>)> = pool.install(|| {
        (0..jobs)
            .into_par_iter()
            .map(|k| {
                let mut local = table.clone();
                let reports = (k..weights.len())
                    .step_by(jobs)
                    .map(|i| (i, verify_weight(cfg, &mut local, &weights[i])))
                    .collect();
                (local, reports)
            })
            .collect()
    });
    let mut merged = table;
    let mut indexed = Vec::with_capacity(weights.len());
    for (local, reports) in workers {
        merged.merge(&local)?;
        indexed.extend(reports);
    }
    indexed.sort_by_key(|(i, _)| *i);
    Ok((indexed.into_iter().map(|(_, r)| r).collect(), merged))
}

/// Parse `0,1,2` (generator word), `e`, or `theta=1,0;x=2,1`.
pub fn parse_element(rs: &RootSystem, ell: u32, s: &str) -> Result<AffineWeylElement, CliError> {
    let s = s.trim();
    if !s.contains('=') {
        return Ok(AffineWeylElement::from_word(rs, ell, &parse_labels(s)?)?);
    }
    let mut theta = None;
    let mut x = Vec::new();
    for part in s.split(';') {
        let (key, value) = part
            .split_once('=')
            .ok_or_else(|| CliError::Input(format!("cannot parse element part {part:?}")))?;
        match key.trim() {
            "theta" => {
                let coords: Vec<i64> = value
                    .split(',')
                    .map(|c| c.trim().parse())
                    .collect::<Result<_, _>>()
                    .map_err(|_| CliError::Input(format!("cannot parse theta {value:?}")))?;
                theta = Some(coords);
            }
            "x" => x = parse_labels(value)?,
            other => {
                return Err(CliError::Input(format!(
                    "unknown element field {other:?}; use theta and x"
                )))
            }
        }
    }
    let theta = theta.unwrap_or_else(|| vec![0; rs.rank()]);
    if theta.len() != rs.rank() {
        return Err(Error::DimensionMismatch {
            expected: rs.rank(),
            got: theta.len(),
        }
        .into());
    }
    if x.contains(&0) {
        return Err(CliError::Input(
            "x is a finite Weyl group word over labels 1..rank".into(),
        ));
    }
    let x = WeylElement::from_word(rs, &x)?;
    Ok(AffineWeylElement::from_parts(theta, x, ell))
}

pub fn cmd_kl(
    cfg: &RunConfig,
    table: &mut KlTable,
    y: &str,
    w: &str,
    parabolic: Option<&str>,
) -> Result<(Outputs, Verdict), CliError> {
    let ell = cfg.level.ell();
    let ye = parse_element(&cfg.rs, ell, y)?;
    let we = parse_element(&cfg.rs, ell, w)?;
    let labels = parabolic.map(parse_labels).transpose()?;
    let poly = match &labels {
        Some(l) => table.parabolic_kl(l, &ye, &we),
        None => table.kl_poly(&ye, &we),
    };
    let (poly, verdict) = match poly {
        Ok(p) => (Some(p), Verdict::Pass),
        Err(Error::Capacity { .. }) => (None, Verdict::CapacityExceeded),
        Err(e) => return Err(e.into()),
    };
    let out = KlOutput {
        y_word: ye.reduced_word(&cfg.rs),
        w_word: we.reduced_word(&cfg.rs),
        y_length: ye.length(&cfg.rs),
        w_length: we.length(&cfg.rs),
        bruhat_leq: bruhat_leq(&cfg.rs, &ye, &we)?,
        parabolic: labels,
        coefficients: poly.as_ref().map(|p| p.coeffs().to_vec()),
        value_at_one: poly.as_ref().map(|p| p.eval_at_one()),
        polynomial: poly.as_ref().map(|p| p.to_string()),
    };
    Ok((Outputs::Kl(out), verdict))
}

#[cfg(test)]
mod tests {
    use super::*;
    use suppvar::root_system::Family;

    #[test]
    fn element_forms_agree() {
        let rs = RootSystem::build(Family::A, 2).unwrap();
        let a = parse_element(&rs, 5, "1,2").unwrap();
        let b = parse_element(&rs, 5, "theta=0,0;x=1,2").unwrap();
        assert_eq!(a, b);
        assert_eq!(
            parse_element(&rs, 5, "e").unwrap(),
            AffineWeylElement::identity(&rs, 5)
        );
        let t = parse_element(&rs, 5, "theta=1,1").unwrap();
        assert_eq!(t.theta(), &[1, 1]);
        assert!(parse_element(&rs, 5, "theta=1").is_err());
        assert!(parse_element(&rs, 5, "x=0").is_err());
        assert!(parse_element(&rs, 5, "3").is_err());
    }
}
