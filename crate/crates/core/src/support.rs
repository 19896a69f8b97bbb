//! Support varieties `G . u_J`: from `Phi_lambda` to a canonical standard
//! parabolic subset `J` of the simple roots and a conjugating Weyl group element.

use std::collections::{BTreeMap, VecDeque};
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::gendim::CharacterCombination;
use crate::root_system::{
    integer_null_space, Level, Mode, RootId, RootSubset, RootSystem, Weight, WeylElement,
};

/// Largest Weyl group order for which [`conjugacy_invariance_check`] searches all of `W`.
pub const BRUTE_FORCE_LIMIT: usize = 1152;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum ModuleKind {
    Irreducible,
    Weyl,
}

impl fmt::Display for ModuleKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            ModuleKind::Irreducible => "irreducible",
            ModuleKind::Weyl => "weyl",
        })
    }
}

/// A standard parabolic subset `J` (labels `1..=rank`, sorted) with `w(Phi_J) = Phi`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Conjugation {
    pub j: Vec<usize>,
    pub w: WeylElement,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SupportVarietyDescriptor {
    pub lambda: Weight,
    /// The weight whose root subsystem was used (`lambda mod p` in modular mode).
    pub lambda_reduced: Weight,
    pub ell: u32,
    pub j: Vec<usize>,
    /// Reduced word of the conjugator, shortest in its coset `w W_J`.
    pub conjugator_word: Vec<usize>,
    /// `|Phi| - |Phi_J|`.
    pub dimension: usize,
    /// `|Phi_lambda|`.
    pub phi_lambda_size: usize,
    pub mode: Mode,
    pub module_kind: ModuleKind,
    pub conditional_on_lcf: bool,
}

impl SupportVarietyDescriptor {
    pub fn conjugator(&self, rs: &RootSystem) -> Result<WeylElement> {
        WeylElement::from_word(rs, &self.conjugator_word)
    }

    /// Roots of `u_J`: the negatives of `Phi^+ \ Phi_J^+`.
    pub fn nilradical_roots(&self, rs: &RootSystem) -> Vec<RootId> {
        nilradical_roots(rs, &self.j)
    }

    /// `G . u_J` for display, e.g. `G.u_{1,3}`.
    pub fn orbit_label(&self) -> String {
        let parts: Vec<String> = self.j.iter().map(|i| i.to_string()).collect();
        format!("G.u_{{{}}}", parts.join(","))
    }
}

pub fn nilradical_roots(rs: &RootSystem, j: &[usize]) -> Vec<RootId> {
    let phi_j = rs.standard_subsystem(j);
    rs.positive_ids()
        .filter(|&a| !phi_j.contains(a))
        .map(|a| rs.negate(a))
        .collect()
}

fn simple_index(rs: &RootSystem, a: RootId) -> Option<usize> {
    (1..=rs.rank()).find(|&i| rs.simple(i) == a)
}

/// Shortest representative of `w W_J`.
fn shortest_in_coset(rs: &RootSystem, mut w: WeylElement, j: &[usize]) -> WeylElement {
    while let Some(&i) = j
        .iter()
        .find(|&&i| !rs.is_positive(w.apply_root(rs, rs.simple(i))))
    {
        w = w.mul(&rs.simple_reflection(i));
    }
    w
}

/// One conjugating subset: push a generic vector orthogonal to `phi` into the
/// dominant chamber; its stabilizer is then standard parabolic.
fn some_standard_conjugate(rs: &RootSystem, phi: &RootSubset) -> Result<Conjugation> {
    if !phi.is_symmetric(rs) || !phi.is_closed(rs) {
        return Err(Error::AssumptionViolation(
            "root subset is not a closed subsystem".into(),
        ));
    }
    let n = rs.rank();
    let base = phi.simple_system(rs);
    let rows: Vec<Vec<i64>> = base.iter().map(|&b| rs.root(b).coroot.clone()).collect();
    let null = integer_null_space(&rows, n);
    let in_span = |a: RootId| null.iter().all(|v| rs.pair(v, a) == 0);
    let span_roots = RootSubset::new(rs.all_ids().filter(|&a| in_span(a)).collect());
    if span_roots != *phi {
        return Err(Error::AssumptionViolation(format!(
            "subsystem of {} roots is not W-conjugate to a standard parabolic subsystem",
            phi.len()
        )));
    }
    let outside: Vec<RootId> = rs.all_ids().filter(|&a| !phi.contains(a)).collect();
    let generic = (2i64..)
        .map(|t| {
            let mut v = vec![0i64; n];
            let mut c = 1i64;
            for basis in &null {
                for (vi, bi) in v.iter_mut().zip(basis) {
                    *vi += c * bi;
                }
                c *= t;
            }
            v
        })
        .take(4096)
        .find(|v| outside.iter().all(|&a| rs.pair(v, a) != 0))
        .ok_or_else(|| Error::InvariantViolation("no generic vector found".into()))?;

    let mut v = generic;
    let mut u = WeylElement::identity(n);
    while let Some(i) = (0..n).find(|&i| v[i] < 0) {
        let s = rs.simple_reflection(i + 1);
        v = s.apply_weight(&v);
        u = s.mul(&u);
    }
    let j: Vec<usize> = (1..=n).filter(|&i| v[i - 1] == 0).collect();
    let w = u.inverse(rs);
    if rs.standard_subsystem(&j).map(rs, &w) != *phi {
        return Err(Error::InvariantViolation(
            "dominant stabilizer does not match the subsystem".into(),
        ));
    }
    Ok(Conjugation { j, w })
}

/// The elementary move `K -> -w_0^{K+s}(K)` and its element `w_0^{K+s} w_0^K`.
fn elementary_move(rs: &RootSystem, k: &[usize], s: usize) -> (Vec<usize>, WeylElement) {
    let mut l = k.to_vec();
    l.push(s);
    l.sort_unstable();
    let m = rs.longest_parabolic(&l).mul(&rs.longest_parabolic(k));
    let mut image: Vec<usize> = k
        .iter()
        .map(|&i| {
            simple_index(rs, m.apply_root(rs, rs.simple(i)))
                .expect("move maps simple roots to simple roots")
        })
        .collect();
    image.sort_unstable();
    (image, m)
}

/// All standard parabolic subsets `K` with `Phi_K` conjugate to `Phi_J`, each
/// with `g` such that `g(Phi_J) = Phi_K`.
pub fn standard_conjugates(rs: &RootSystem, j: &[usize]) -> BTreeMap<Vec<usize>, WeylElement> {
    let mut start = j.to_vec();
    start.sort_unstable();
    let mut found = BTreeMap::from([(start.clone(), WeylElement::identity(rs.rank()))]);
    let mut queue = VecDeque::from([start]);
    while let Some(k) = queue.pop_front() {
        let g = found[&k].clone();
        for s in (1..=rs.rank()).filter(|s| !k.contains(s)) {
            let (k2, m) = elementary_move(rs, &k, s);
            if !found.contains_key(&k2) {
                found.insert(k2.clone(), m.mul(&g));
                queue.push_back(k2);
            }
        }
    }
    found
}

/// Canonical `J` (lexicographically least among conjugates) and `w` with `w(Phi_J) = phi`.
pub fn find_j(rs: &RootSystem, phi: &RootSubset) -> Result<Conjugation> {
    let first = some_standard_conjugate(rs, phi)?;
    let conjugates = standard_conjugates(rs, &first.j);
    let (j, g) = conjugates
        .into_iter()
        .next()
        .expect("the starting subset is present");
    let w = shortest_in_coset(rs, first.w.mul(&g.inverse(rs)), &j);
    Ok(Conjugation { j, w })
}

fn descriptor(
    rs: &RootSystem,
    lambda: &Weight,
    level: Level,
    kind: ModuleKind,
) -> Result<SupportVarietyDescriptor> {
    rs.check_weight(lambda)?;
    if !lambda.is_dominant() {
        return Err(Error::NotDominant(lambda.0.clone()));
    }
    let ell = level.ell() as i64;
    let reduced = match level.mode() {
        Mode::Quantum => lambda.clone(),
        Mode::Modular => Weight(lambda.0.iter().map(|c| c.rem_euclid(ell)).collect()),
    };
    let phi = rs.phi_lambda(&reduced, level)?;
    let conj = find_j(rs, &phi)?;
    let phi_j = rs.standard_subsystem(&conj.j);
    Ok(SupportVarietyDescriptor {
        lambda: lambda.clone(),
        lambda_reduced: reduced,
        ell: level.ell(),
        conjugator_word: conj.w.reduced_word(rs),
        j: conj.j,
        dimension: rs.num_roots() - phi_j.len(),
        phi_lambda_size: phi.len(),
        mode: level.mode(),
        module_kind: kind,
        conditional_on_lcf: level.mode() == Mode::Modular,
    })
}

/// Support variety of the irreducible module of highest weight `lambda`.
pub fn irreducible_support(
    rs: &RootSystem,
    lambda: &Weight,
    level: Level,
) -> Result<SupportVarietyDescriptor> {
    descriptor(rs, lambda, level, ModuleKind::Irreducible)
}

/// Support variety of the Weyl module of highest weight `lambda`.
pub fn weyl_module_support(
    rs: &RootSystem,
    lambda: &Weight,
    level: Level,
) -> Result<SupportVarietyDescriptor> {
    descriptor(rs, lambda, level, ModuleKind::Weyl)
}

fn brute_force_conjugate(rs: &RootSystem, a: &RootSubset, b: &RootSubset) -> bool {
    a.len() == b.len() && rs.weyl_group_elements().iter().any(|x| a.map(rs, x) == *b)
}

/// Whether `Phi_J` and `Phi_K` are `W`-conjugate: by searching `W` when it is
/// small, and through the elementary moves otherwise.
pub fn conjugacy_invariance_check(rs: &RootSystem, j: &[usize], k: &[usize]) -> Result<bool> {
    for &i in j.iter().chain(k) {
        if i == 0 || i > rs.rank() {
            return Err(Error::InvalidWord(format!(
                "simple root label {i} out of range"
            )));
        }
    }
    if j.len() != k.len() {
        return Ok(false);
    }
    let mut k_sorted = k.to_vec();
    k_sorted.sort_unstable();
    k_sorted.dedup();
    if weyl_group_order(rs) <= BRUTE_FORCE_LIMIT {
        return Ok(brute_force_conjugate(
            rs,
            &rs.standard_subsystem(j),
            &rs.standard_subsystem(&k_sorted),
        ));
    }
    Ok(standard_conjugates(rs, j).contains_key(&k_sorted))
}

fn weyl_group_order(rs: &RootSystem) -> usize {
    // product of (exponent + 1); the degrees are read off the number of roots of each height
    let mut by_height: BTreeMap<i64, usize> = BTreeMap::new();
    for a in rs.positive_ids() {
        *by_height.entry(rs.root(a).height).or_default() += 1;
    }
    let counts: Vec<usize> = by_height.values().copied().collect();
    let mut order = 1usize;
    for (k, _) in counts.iter().enumerate() {
        let here = counts[k];
        let next = counts.get(k + 1).copied().unwrap_or(0);
        for _ in next..here {
            order = order.saturating_mul(k + 2);
        }
    }
    order
}

/// Whether all weights of the combination have `W`-conjugate root subsystems.
pub fn linkage_check(
    rs: &RootSystem,
    level: Level,
    combination: &CharacterCombination,
) -> Result<bool> {
    let mut canonical: Option<Vec<usize>> = None;
    for t in &combination.terms {
        let j = find_j(rs, &rs.phi_lambda(&t.weight, level)?)?.j;
        match &canonical {
            None => canonical = Some(j),
            Some(c) if *c != j => return Ok(false),
            Some(_) => {}
        }
    }
    Ok(true)
}
