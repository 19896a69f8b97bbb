//! WebAssembly bindings for the browser demo in `www/`.
//!
//! Every export takes plain strings and numbers and returns a JSON string,
//! either the result or `{"error": "..."}`.

use serde::Serialize;
use wasm_bindgen::prelude::*;

use suppvar::affine_weyl::{bruhat_leq, AffineWeylElement};
use suppvar::gendim::{derivative_certificate, irreducible_character, weyl_generic_dim};
use suppvar::kl::KlTable;
use suppvar::root_system::{Family, Level, Mode, RootSystem, Weight};
use suppvar::support::{irreducible_support, weyl_module_support};

/// KL length cap for browser requests.
const DEMO_MAX_KL_LENGTH: u32 = 24;

#[derive(Serialize)]
struct ErrorJson {
    error: String,
}

fn respond<T: Serialize>(r: Result<T, String>) -> String {
    let json = match r {
        Ok(v) => serde_json::to_string(&v),
        Err(error) => serde_json::to_string(&ErrorJson { error }),
    };
    json.unwrap_or_else(|e| format!("{{\"error\":\"{e}\"}}"))
}

fn setup(
    family: &str,
    rank: usize,
    ell: u32,
    modular: bool,
) -> Result<(RootSystem, Level), String> {
    let f = Family::parse(family).ok_or_else(|| format!("unknown Cartan type {family:?}"))?;
    let rs = RootSystem::build(f, rank).map_err(|e| e.to_string())?;
    let mode = if modular {
        Mode::Modular
    } else {
        Mode::Quantum
    };
    let level = Level::new(&rs, ell, mode).map_err(|e| e.to_string())?;
    Ok((rs, level))
}

fn parse_weight(rs: &RootSystem, s: &str) -> Result<Weight, String> {
    let coords = s
        .split(',')
        .map(|c| c.trim().parse::<i64>())
        .collect::<Result<Vec<_>, _>>()
        .map_err(|_| format!("cannot parse weight {s:?}"))?;
    let w = Weight(coords);
    rs.check_weight(&w).map_err(|e| e.to_string())?;
    if !w.is_dominant() {
        return Err(format!("weight {w} is not dominant"));
    }
    Ok(w)
}

fn parse_word(s: &str) -> Result<Vec<usize>, String> {
    let s = s.trim();
    if s.is_empty() || s == "e" {
        return Ok(Vec::new());
    }
    s.split(',')
        .map(|c| c.trim().parse::<usize>())
        .collect::<Result<_, _>>()
        .map_err(|_| format!("cannot parse word {s:?}"))
}

#[derive(Debug, Serialize)]
pub struct GridPoint {
    pub weight: Vec<i64>,
    pub j: Vec<usize>,
    pub orbit: String,
    pub dimension: usize,
    pub phi_lambda_size: usize,
}

#[derive(Debug, Serialize)]
pub struct Grid {
    pub cartan_type: String,
    pub ell: u32,
    pub num_roots: usize,
    /// Planar images of the two fundamental weights.
    pub basis: [[f64; 2]; 2],
    /// Coroots of the positive roots in the simple-coroot basis; the walls
    /// are `<lambda + rho, coroot> = k ell`.
    pub coroots: Vec<Vec<i64>>,
    pub points: Vec<GridPoint>,
}

/// Support varieties of every dominant weight with coordinates up to `bound`
/// in a rank-2 type.
pub fn support_grid_impl(
    family: &str,
    ell: u32,
    bound: u32,
    modular: bool,
    weyl: bool,
) -> Result<Grid, String> {
    let (rs, level) = setup(family, 2, ell, modular)?;
    if bound > 200 {
        return Err("bound is limited to 200".into());
    }
    let mut points = Vec::new();
    for a in 0..=bound as i64 {
        for b in 0..=bound as i64 {
            let w = Weight(vec![a, b]);
            let d = if weyl {
                weyl_module_support(&rs, &w, level)
            } else {
                irreducible_support(&rs, &w, level)
            }
            .map_err(|e| e.to_string())?;
            points.push(GridPoint {
                weight: w.0,
                orbit: d.orbit_label(),
                j: d.j,
                dimension: d.dimension,
                phi_lambda_size: d.phi_lambda_size,
            });
        }
    }
    let f = |x: i64, y: i64| {
        let r = rs.inner(&Weight(vec![x, y]), &Weight(vec![x, y]));
        *r.numer() as f64 / *r.denom() as f64
    };
    // Gram entries of the fundamental weights, then a planar realisation.
    let (g11, g22) = (f(1, 0), f(0, 1));
    let g12 = (f(1, 1) - g11 - g22) / 2.0;
    let e1 = [g11.sqrt(), 0.0];
    let x2 = g12 / e1[0];
    let e2 = [x2, (g22 - x2 * x2).max(0.0).sqrt()];
    Ok(Grid {
        cartan_type: rs.cartan_type().to_string(),
        ell,
        num_roots: rs.num_roots(),
        basis: [e1, e2],
        coroots: rs
            .positive_ids()
            .map(|id| rs.root(id).coroot.clone())
            .collect(),
        points,
    })
}

#[wasm_bindgen]
pub fn support_grid(family: &str, ell: u32, bound: u32, modular: bool, weyl: bool) -> String {
    respond(support_grid_impl(family, ell, bound, modular, weyl))
}

#[derive(Debug, Serialize)]
pub struct WeightCheck {
    pub weight: Vec<i64>,
    pub ell: u32,
    pub lambda_minus: Vec<i64>,
    pub s: usize,
    pub derivative_at_zeta: String,
    pub closed_form: String,
    pub identity_holds: bool,
    pub weyl_generic_dim: String,
    pub weyl_dim: String,
    /// Absent when the Kazhdan-Lusztig length cap is hit.
    pub character: Option<String>,
    pub irreducible_generic_dim: Option<String>,
    pub irreducible_dim: Option<String>,
    pub note: Option<String>,
}

pub fn check_weight_impl(
    family: &str,
    rank: usize,
    ell: u32,
    weight: &str,
) -> Result<WeightCheck, String> {
    let (rs, level) = setup(family, rank, ell, false)?;
    let lambda = parse_weight(&rs, weight)?;
    let cert = derivative_certificate(&rs, level, &lambda).map_err(|e| e.to_string())?;
    let weyl = weyl_generic_dim(&rs, &lambda).map_err(|e| e.to_string())?;
    let mut table = KlTable::with_max_length(&rs, ell, DEMO_MAX_KL_LENGTH);
    let (character, irr, irr_dim, note) =
        match irreducible_character(&rs, level, &mut table, &lambda) {
            Ok(ch) => {
                let g = ch.generic_dim(&rs).map_err(|e| e.to_string())?;
                (
                    Some(ch.to_string()),
                    Some(g.to_string()),
                    Some(g.eval_at_one().to_string()),
                    None,
                )
            }
            Err(e) => (None, None, None, Some(e.to_string())),
        };
    Ok(WeightCheck {
        weight: lambda.0,
        ell,
        lambda_minus: cert.lambda_minus.0,
        s: cert.s,
        identity_holds: cert.equal && cert.lhs_nonzero,
        derivative_at_zeta: cert.lhs.to_string(),
        closed_form: cert.rhs.to_string(),
        weyl_dim: weyl.eval_at_one().to_string(),
        weyl_generic_dim: weyl.to_string(),
        character,
        irreducible_generic_dim: irr,
        irreducible_dim: irr_dim,
        note,
    })
}

#[wasm_bindgen]
pub fn check_weight(family: &str, rank: usize, ell: u32, weight: &str) -> String {
    respond(check_weight_impl(family, rank, ell, weight))
}

#[derive(Debug, Serialize)]
pub struct KlResult {
    pub y_word: Vec<usize>,
    pub w_word: Vec<usize>,
    pub bruhat_leq: bool,
    pub coefficients: Vec<i64>,
    pub polynomial: String,
}

pub fn kl_polynomial_impl(
    family: &str,
    rank: usize,
    ell: u32,
    y: &str,
    w: &str,
) -> Result<KlResult, String> {
    let (rs, _) = setup(family, rank, ell, false)?;
    let ye = AffineWeylElement::from_word(&rs, ell, &parse_word(y)?).map_err(|e| e.to_string())?;
    let we = AffineWeylElement::from_word(&rs, ell, &parse_word(w)?).map_err(|e| e.to_string())?;
    let mut table = KlTable::with_max_length(&rs, ell, DEMO_MAX_KL_LENGTH);
    let p = table.kl_poly(&ye, &we).map_err(|e| e.to_string())?;
    Ok(KlResult {
        y_word: ye.reduced_word(&rs),
        w_word: we.reduced_word(&rs),
        bruhat_leq: bruhat_leq(&rs, &ye, &we).map_err(|e| e.to_string())?,
        coefficients: p.coeffs().to_vec(),
        polynomial: p.to_string(),
    })
}

#[wasm_bindgen]
pub fn kl_polynomial(family: &str, rank: usize, ell: u32, y: &str, w: &str) -> String {
    respond(kl_polynomial_impl(family, rank, ell, y, w))
}
