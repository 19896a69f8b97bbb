//! The affine Weyl group `W_l = Q x| W` acting on weights by the dot action.
//!
//! Elements are stored canonically as `t_{l theta} x` with `theta` in simple-root
//! coefficients. The Coxeter generators are labelled `0` for the affine
//! reflection `s_{alpha_0,-1}` and `1..=rank` for the simple reflections.

use std::collections::{HashMap, HashSet};
use std::fmt;

use crate::error::{Error, Result};
use crate::root_system::{Level, RootSystem, Weight, WeylElement};

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct AffineWeylElement {
    theta: Vec<i64>,
    x: WeylElement,
    level: u32,
}

impl AffineWeylElement {
    pub fn identity(rs: &RootSystem, level: u32) -> AffineWeylElement {
        AffineWeylElement {
            theta: vec![0; rs.rank()],
            x: WeylElement::identity(rs.rank()),
            level,
        }
    }

    /// `t_{l theta} x`, with `theta` in simple-root coefficients.
    pub fn from_parts(theta: Vec<i64>, x: WeylElement, level: u32) -> AffineWeylElement {
        AffineWeylElement { theta, x, level }
    }

    pub fn translation(rs: &RootSystem, theta: Vec<i64>, level: u32) -> AffineWeylElement {
        AffineWeylElement {
            theta,
            x: WeylElement::identity(rs.rank()),
            level,
        }
    }

    /// Coxeter generator by label: `0` is `s_{alpha_0,-1} = t_{-l alpha_0} s_{alpha_0}`.
    pub fn generator(rs: &RootSystem, level: u32, label: usize) -> Result<AffineWeylElement> {
        if label > rs.rank() {
            return Err(Error::InvalidWord(format!(
                "generator label {label} out of range 0..={}",
                rs.rank()
            )));
        }
        if label == 0 {
            let a0 = rs.highest_short_root();
            Ok(AffineWeylElement {
                theta: rs.root(a0).coeffs.iter().map(|c| -c).collect(),
                x: WeylElement::reflection(rs, a0),
                level,
            })
        } else {
            Ok(AffineWeylElement {
                theta: vec![0; rs.rank()],
                x: rs.simple_reflection(label),
                level,
            })
        }
    }

    /// `s_{w[0]} s_{w[1]} ...`.
    pub fn from_word(rs: &RootSystem, level: u32, word: &[usize]) -> Result<AffineWeylElement> {
        let gens = generators(rs, level);
        let mut w = AffineWeylElement::identity(rs, level);
        for &g in word {
            let s = gens.get(g).ok_or_else(|| {
                Error::InvalidWord(format!(
                    "generator label {g} out of range 0..={}",
                    rs.rank()
                ))
            })?;
            w = w.compose(s);
        }
        Ok(w)
    }

    pub fn theta(&self) -> &[i64] {
        &self.theta
    }

    pub fn finite_part(&self) -> &WeylElement {
        &self.x
    }

    pub fn level(&self) -> u32 {
        self.level
    }

    pub fn is_identity(&self) -> bool {
        self.theta.iter().all(|&c| c == 0) && self.x.is_identity()
    }

    /// `t_{l theta} x * t_{l theta'} x' = t_{l (theta + x theta')} x x'`.
    pub fn mul(&self, other: &AffineWeylElement) -> Result<AffineWeylElement> {
        if self.level != other.level {
            return Err(Error::LevelMismatch {
                left: self.level,
                right: other.level,
            });
        }
        Ok(self.compose(other))
    }

    pub(crate) fn compose(&self, other: &AffineWeylElement) -> AffineWeylElement {
        let moved = self.x.apply_root_coords(&other.theta);
        AffineWeylElement {
            theta: self.theta.iter().zip(&moved).map(|(a, b)| a + b).collect(),
            x: self.x.mul(&other.x),
            level: self.level,
        }
    }

    pub fn inverse(&self, rs: &RootSystem) -> AffineWeylElement {
        let xinv = self.x.inverse(rs);
        let t = xinv.apply_root_coords(&self.theta);
        AffineWeylElement {
            theta: t.iter().map(|c| -c).collect(),
            x: xinv,
            level: self.level,
        }
    }

    /// The translation part `theta` as a weight.
    pub fn theta_weight(&self, rs: &RootSystem) -> Weight {
        rs.root_coords_to_weight(&self.theta)
    }

    /// Action on `E` (not shifted): `v -> x v + l theta`.
    pub fn apply(&self, rs: &RootSystem, v: &Weight) -> Weight {
        let xv = self.x.apply_weight(&v.0);
        let t = self.theta_weight(rs);
        let l = self.level as i64;
        Weight(xv.iter().zip(&t.0).map(|(a, b)| a + l * b).collect())
    }

    /// `w . lambda = w(lambda + rho) - rho`.
    pub fn dot(&self, rs: &RootSystem, lambda: &Weight) -> Weight {
        self.apply(rs, &lambda.add(&rs.rho())).sub(&rs.rho())
    }

    /// Length via the count of affine hyperplanes separating the antidominant
    /// alcove from its image:
    /// `sum_{a > 0, x^-1 a > 0} |<theta, a^v>| + sum_{a > 0, x^-1 a < 0} |<theta, a^v> + 1|`.
    pub fn length(&self, rs: &RootSystem) -> u32 {
        let t = self.theta_weight(rs);
        let mut len = 0i64;
        for b in rs.all_ids() {
            let a = self.x.apply_root(rs, b);
            if !rs.is_positive(a) {
                continue;
            }
            let p = rs.pair(&t.0, a);
            len += if rs.is_positive(b) {
                p.abs()
            } else {
                (p + 1).abs()
            };
        }
        len as u32
    }

    /// `l(x) + 2 ht(theta)`, valid when `theta` is dominant.
    pub fn dominant_length_formula(&self, rs: &RootSystem) -> u32 {
        (self.x.length(rs) as i64 + 2 * self.theta.iter().sum::<i64>()) as u32
    }

    pub fn has_dominant_translation(&self, rs: &RootSystem) -> bool {
        self.theta_weight(rs).is_dominant()
    }

    /// Reduced word obtained by repeatedly stripping the lowest-label right descent.
    pub fn reduced_word(&self, rs: &RootSystem) -> Vec<usize> {
        let gens = generators(rs, self.level);
        let mut w = self.clone();
        let mut len = w.length(rs);
        let mut rev = Vec::with_capacity(len as usize);
        while len > 0 {
            let (label, next, l) = gens
                .iter()
                .enumerate()
                .map(|(g, s)| {
                    let ws = w.compose(s);
                    let l = ws.length(rs);
                    (g, ws, l)
                })
                .find(|(_, _, l)| *l < len)
                .expect("a nontrivial element has a right descent");
            rev.push(label);
            w = next;
            len = l;
        }
        rev.reverse();
        rev
    }
}

impl fmt::Display for AffineWeylElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "t[{:?}]{:?}", self.theta, self.x.matrix_on_weights())
    }
}

/// `S_l` in label order.
pub fn generators(rs: &RootSystem, level: u32) -> Vec<AffineWeylElement> {
    (0..=rs.rank())
        .map(|g| AffineWeylElement::generator(rs, level, g).expect("label in range"))
        .collect()
}

pub fn dot_action(
    rs: &RootSystem,
    level: Level,
    w: &AffineWeylElement,
    lambda: &Weight,
) -> Result<Weight> {
    if w.level != level.ell() {
        return Err(Error::LevelMismatch {
            left: w.level,
            right: level.ell(),
        });
    }
    rs.check_weight(lambda)?;
    Ok(w.dot(rs, lambda))
}

/// Labels of the generators fixing `lambda` under the dot action.
pub fn stabilizer_generators(rs: &RootSystem, ell: u32, lambda: &Weight) -> Vec<usize> {
    let shifted = lambda.add(&rs.rho());
    let mut out = Vec::new();
    if rs.pair(&shifted.0, rs.highest_short_root()) == -(ell as i64) {
        out.push(0);
    }
    out.extend((1..=rs.rank()).filter(|&i| shifted.0[i - 1] == 0));
    out
}

/// Whether `lambda` lies in the closure of the antidominant alcove.
pub fn in_closed_fundamental_alcove(rs: &RootSystem, ell: u32, lambda: &Weight) -> bool {
    let shifted = lambda.add(&rs.rho());
    let l = ell as i64;
    rs.positive_ids().all(|a| {
        let p = rs.pair(&shifted.0, a);
        -l <= p && p <= 0
    })
}

/// The fundamental-domain data attached to a dominant weight.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AlcoveReduction {
    pub lambda: Weight,
    pub lambda_minus: Weight,
    /// Minimal element with `w . lambda_minus = lambda`.
    pub w: AffineWeylElement,
    /// Generator labels of `I = W_{l, lambda_minus} cap S_l`.
    pub stabilizer: Vec<usize>,
    /// Number of `alpha > 0` with `<lambda_minus + rho, alpha^v> = -l`.
    pub a_count: usize,
}

/// Walk `lambda` into the closed antidominant alcove and return the minimal
/// dominant element for the resulting `lambda_minus`.
pub fn reduce_to_fundamental(
    rs: &RootSystem,
    lambda: &Weight,
    level: Level,
) -> Result<AlcoveReduction> {
    rs.check_weight(lambda)?;
    if !lambda.is_dominant() {
        return Err(Error::NotDominant(lambda.0.clone()));
    }
    let ell = level.ell();
    let l = ell as i64;
    let gens = generators(rs, ell);
    let a0 = rs.highest_short_root();
    let rho = rs.rho();
    let mut mu = lambda.add(&rho);
    let mut w = AffineWeylElement::identity(rs, ell);
    let mut steps = 0usize;
    loop {
        let violated = if rs.pair(&mu.0, a0) < -l {
            Some(0)
        } else {
            (1..=rs.rank()).find(|&i| mu.0[i - 1] > 0)
        };
        let Some(g) = violated else { break };
        mu = gens[g].apply(rs, &mu);
        w = w.compose(&gens[g]);
        steps += 1;
        if steps > 1_000_000 {
            return Err(Error::InvariantViolation(
                "alcove walk did not terminate".into(),
            ));
        }
    }
    let lambda_minus = mu.sub(&rho);
    let stabilizer = stabilizer_generators(rs, ell, &lambda_minus);
    let mut len = w.length(rs);
    'descend: loop {
        for &g in &stabilizer {
            let ws = w.compose(&gens[g]);
            let lws = ws.length(rs);
            if lws < len {
                w = ws;
                len = lws;
                continue 'descend;
            }
        }
        break;
    }
    let shifted = lambda_minus.add(&rho);
    let a_count = rs
        .positive_ids()
        .filter(|&a| rs.pair(&shifted.0, a) == -l)
        .count();
    Ok(AlcoveReduction {
        lambda: lambda.clone(),
        lambda_minus,
        w,
        stabilizer,
        a_count,
    })
}

/// All `y` in `W_l^I` (minimal in `y W_{l,I}`) with `l(y) <= max_length`,
/// ordered by length. `W_l^I` is closed under removing a left factor, so the
/// layers are grown by left multiplication.
pub fn enumerate_dominant_coset(
    rs: &RootSystem,
    level: Level,
    lambda_minus: &Weight,
    stabilizer: &[usize],
    max_length: u32,
) -> Result<Vec<AffineWeylElement>> {
    rs.check_weight(lambda_minus)?;
    if !in_closed_fundamental_alcove(rs, level.ell(), lambda_minus) {
        return Err(Error::AssumptionViolation(format!(
            "{lambda_minus} is not in the closed antidominant alcove"
        )));
    }
    let gens = generators(rs, level.ell());
    let is_minimal = |y: &AffineWeylElement, ly: u32| {
        stabilizer
            .iter()
            .all(|&g| y.compose(&gens[g]).length(rs) > ly)
    };
    let mut out = vec![AffineWeylElement::identity(rs, level.ell())];
    let mut layer = out.clone();
    for len in 1..=max_length {
        let mut next = Vec::new();
        let mut seen = HashSet::new();
        for y in &layer {
            for s in &gens {
                let ys = s.compose(y);
                if ys.length(rs) == len && !seen.contains(&ys) && is_minimal(&ys, len) {
                    seen.insert(ys.clone());
                    next.push(ys);
                }
            }
        }
        if next.is_empty() {
            break;
        }
        out.extend(next.iter().cloned());
        layer = next;
    }
    Ok(out)
}

/// Dense handle for an interned element of [`AffineWeylGroup`].
pub type ElemId = u32;

const UNKNOWN: u32 = u32::MAX;

/// Interning table for elements of `W_l` with cached lengths, generator
/// multiplication, and a Bruhat-order memo.
#[derive(Debug, Clone)]
pub struct AffineWeylGroup {
    rs: RootSystem,
    level: u32,
    gens: Vec<AffineWeylElement>,
    elems: Vec<AffineWeylElement>,
    lengths: Vec<u32>,
    ids: HashMap<AffineWeylElement, ElemId>,
    left: Vec<Vec<u32>>,
    right: Vec<Vec<u32>>,
    bruhat: HashMap<(ElemId, ElemId), bool>,
}

impl AffineWeylGroup {
    pub fn new(rs: &RootSystem, level: u32) -> AffineWeylGroup {
        let mut g = AffineWeylGroup {
            rs: rs.clone(),
            level,
            gens: generators(rs, level),
            elems: Vec::new(),
            lengths: Vec::new(),
            ids: HashMap::new(),
            left: Vec::new(),
            right: Vec::new(),
            bruhat: HashMap::new(),
        };
        g.intern(&AffineWeylElement::identity(rs, level));
        g
    }

    pub fn root_system(&self) -> &RootSystem {
        &self.rs
    }

    pub fn level(&self) -> u32 {
        self.level
    }

    pub fn num_generators(&self) -> usize {
        self.gens.len()
    }

    pub fn identity(&self) -> ElemId {
        0
    }

    pub fn len(&self) -> usize {
        self.elems.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elems.is_empty()
    }

    pub fn intern(&mut self, e: &AffineWeylElement) -> ElemId {
        if let Some(&id) = self.ids.get(e) {
            return id;
        }
        let id = self.elems.len() as ElemId;
        self.lengths.push(e.length(&self.rs));
        self.elems.push(e.clone());
        self.ids.insert(e.clone(), id);
        self.left.push(vec![UNKNOWN; self.gens.len()]);
        self.right.push(vec![UNKNOWN; self.gens.len()]);
        id
    }

    pub fn lookup(&self, e: &AffineWeylElement) -> Option<ElemId> {
        self.ids.get(e).copied()
    }

    pub fn element(&self, id: ElemId) -> &AffineWeylElement {
        &self.elems[id as usize]
    }

    pub fn length(&self, id: ElemId) -> u32 {
        self.lengths[id as usize]
    }

    /// `s_g * w`.
    pub fn lmul(&mut self, g: usize, w: ElemId) -> ElemId {
        let cached = self.left[w as usize][g];
        if cached != UNKNOWN {
            return cached;
        }
        let e = self.gens[g].compose(&self.elems[w as usize]);
        let id = self.intern(&e);
        self.left[w as usize][g] = id;
        self.left[id as usize][g] = w;
        id
    }

    /// `w * s_g`.
    pub fn rmul(&mut self, w: ElemId, g: usize) -> ElemId {
        let cached = self.right[w as usize][g];
        if cached != UNKNOWN {
            return cached;
        }
        let e = self.elems[w as usize].compose(&self.gens[g]);
        let id = self.intern(&e);
        self.right[w as usize][g] = id;
        self.right[id as usize][g] = w;
        id
    }

    /// Lowest-label `s` with `l(s w) < l(w)`.
    pub fn first_left_descent(&mut self, w: ElemId) -> Option<usize> {
        let lw = self.length(w);
        (0..self.gens.len()).find(|&g| {
            let sw = self.lmul(g, w);
            self.length(sw) < lw
        })
    }

    pub fn is_left_descent(&mut self, g: usize, w: ElemId) -> bool {
        let sw = self.lmul(g, w);
        self.length(sw) < self.length(w)
    }

    pub fn is_right_descent(&mut self, w: ElemId, g: usize) -> bool {
        let ws = self.rmul(w, g);
        self.length(ws) < self.length(w)
    }

    /// Bruhat order by the lifting property: for `s w < w`,
    /// `y <= w` iff `s y <= s w` (when `s y < y`) or `y <= s w` (otherwise).
    pub fn bruhat_leq(&mut self, y: ElemId, w: ElemId) -> bool {
        if y == w {
            return true;
        }
        let (ly, lw) = (self.length(y), self.length(w));
        if ly >= lw {
            return false;
        }
        if ly == 0 {
            return true;
        }
        if let Some(&b) = self.bruhat.get(&(y, w)) {
            return b;
        }
        let s = self.first_left_descent(w).expect("w is not the identity");
        let sw = self.lmul(s, w);
        let sy = self.lmul(s, y);
        let result = if self.length(sy) < ly {
            self.bruhat_leq(sy, sw)
        } else {
            self.bruhat_leq(y, sw)
        };
        self.bruhat.insert((y, w), result);
        result
    }

    pub fn bruhat_memo_len(&self) -> usize {
        self.bruhat.len()
    }

    /// Elements of the finite parabolic subgroup generated by `labels`.
    pub fn parabolic_elements(&mut self, labels: &[usize]) -> Result<Vec<ElemId>> {
        if labels.len() >= self.gens.len() {
            return Err(Error::AssumptionViolation(
                "parabolic subgroup must be proper to be finite".into(),
            ));
        }
        let mut out = vec![self.identity()];
        let mut seen: HashSet<ElemId> = out.iter().copied().collect();
        let mut i = 0;
        while i < out.len() {
            let x = out[i];
            i += 1;
            for &g in labels {
                let y = self.rmul(x, g);
                if seen.insert(y) {
                    out.push(y);
                }
            }
        }
        Ok(out)
    }

    pub fn word_of(&self, id: ElemId) -> Vec<usize> {
        self.elems[id as usize].reduced_word(&self.rs)
    }
}

/// Bruhat order between two elements, using a fresh memo table.
pub fn bruhat_leq(rs: &RootSystem, y: &AffineWeylElement, w: &AffineWeylElement) -> Result<bool> {
    if y.level != w.level {
        return Err(Error::LevelMismatch {
            left: y.level,
            right: w.level,
        });
    }
    let mut g = AffineWeylGroup::new(rs, w.level);
    let (yi, wi) = (g.intern(y), g.intern(w));
    Ok(g.bruhat_leq(yi, wi))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::root_system::Family;
    use std::collections::VecDeque;

    fn setup(f: Family, n: usize, ell: u32) -> (RootSystem, Level) {
        let rs = RootSystem::build(f, n).unwrap();
        let level = Level::quantum(&rs, ell).unwrap();
        (rs, level)
    }

    /// Breadth-first Cayley-graph distances from the identity.
    fn ball(rs: &RootSystem, ell: u32, radius: u32) -> HashMap<AffineWeylElement, u32> {
        let gens = generators(rs, ell);
        let id = AffineWeylElement::identity(rs, ell);
        let mut dist = HashMap::from([(id.clone(), 0)]);
        let mut q = VecDeque::from([id]);
        while let Some(w) = q.pop_front() {
            let d = dist[&w];
            if d == radius {
                continue;
            }
            for s in &gens {
                let ws = w.compose(s);
                if !dist.contains_key(&ws) {
                    dist.insert(ws.clone(), d + 1);
                    q.push_back(ws);
                }
            }
        }
        dist
    }

    #[test]
    fn generators_are_involutions_of_length_one() {
        for (f, n, ell) in [
            (Family::A, 1, 5),
            (Family::A, 2, 5),
            (Family::B, 2, 7),
            (Family::G, 2, 7),
            (Family::C, 3, 7),
        ] {
            let (rs, _) = setup(f, n, ell);
            for s in generators(&rs, ell) {
                assert_eq!(s.length(&rs), 1);
                assert!(s.compose(&s).is_identity());
            }
        }
    }

    #[test]
    fn dot_action_examples() {
        let (a1, l5) = setup(Family::A, 1, 5);
        let id = AffineWeylElement::identity(&a1, 5);
        assert_eq!(
            dot_action(&a1, l5, &id, &Weight(vec![3])).unwrap(),
            Weight(vec![3])
        );
        let s = AffineWeylElement::generator(&a1, 5, 1).unwrap();
        assert_eq!(s.dot(&a1, &Weight(vec![-6])), Weight(vec![4]));
        // s_{alpha,-1} fixes lambda^- on the -l wall
        let s0 = AffineWeylElement::generator(&a1, 5, 0).unwrap();
        assert_eq!(s0.dot(&a1, &Weight(vec![-6])), Weight(vec![-6]));
        let other = AffineWeylElement::identity(&a1, 7);
        assert!(matches!(
            dot_action(&a1, l5, &other, &Weight(vec![0])),
            Err(Error::LevelMismatch { .. })
        ));
    }

    #[test]
    fn length_examples() {
        let (a1, _) = setup(Family::A, 1, 5);
        assert_eq!(AffineWeylElement::identity(&a1, 5).length(&a1), 0);
        let t = AffineWeylElement::translation(&a1, vec![1], 5);
        assert_eq!(t.length(&a1), 2);
        assert_eq!(t.dominant_length_formula(&a1), 2);
        assert_eq!(
            AffineWeylElement::generator(&a1, 5, 0).unwrap().length(&a1),
            1
        );
    }

    #[test]
    fn length_matches_bfs_distance() {
        for (f, n, ell, r) in [
            (Family::A, 1, 5, 10),
            (Family::A, 2, 5, 8),
            (Family::B, 2, 7, 8),
            (Family::G, 2, 7, 8),
            (Family::A, 3, 5, 5),
        ] {
            let (rs, _) = setup(f, n, ell);
            for (w, d) in ball(&rs, ell, r) {
                assert_eq!(w.length(&rs), d, "{f}{n} {w}");
                if w.has_dominant_translation(&rs) {
                    assert_eq!(w.dominant_length_formula(&rs), d);
                }
            }
        }
    }

    #[test]
    fn composition_law_and_inverse() {
        let (rs, _) = setup(Family::B, 2, 7);
        let a = AffineWeylElement::from_word(&rs, 7, &[0, 1, 2, 0]).unwrap();
        let b = AffineWeylElement::from_word(&rs, 7, &[2, 1, 0]).unwrap();
        let ab = a.mul(&b).unwrap();
        let mu = Weight(vec![3, -2]);
        assert_eq!(ab.apply(&rs, &mu), a.apply(&rs, &b.apply(&rs, &mu)));
        assert!(a.compose(&a.inverse(&rs)).is_identity());
        let word = ab.reduced_word(&rs);
        assert_eq!(word.len() as u32, ab.length(&rs));
        assert_eq!(AffineWeylElement::from_word(&rs, 7, &word).unwrap(), ab);
    }

    #[test]
    fn reduce_examples() {
        let (a2, l5) = setup(Family::A, 2, 5);
        let red = reduce_to_fundamental(&a2, &Weight(vec![0, 0]), l5).unwrap();
        assert_eq!(red.lambda_minus, Weight(vec![-2, -2]));
        assert_eq!(
            red.w,
            AffineWeylElement::from_parts(vec![0, 0], a2.longest_element(), 5)
        );
        assert_eq!(red.w.length(&a2), 3);
        assert!(red.stabilizer.is_empty());

        let (a1, l5) = setup(Family::A, 1, 5);
        let red = reduce_to_fundamental(&a1, &Weight(vec![4]), l5).unwrap();
        assert_eq!(red.lambda_minus, Weight(vec![-6]));
        assert_eq!(red.w, AffineWeylElement::generator(&a1, 5, 1).unwrap());
        assert_eq!(red.stabilizer, vec![0]);
        assert_eq!(red.a_count, 1);

        let red = reduce_to_fundamental(&a1, &Weight(vec![3]), l5).unwrap();
        assert_eq!(red.lambda_minus, Weight(vec![-5]));
        assert_eq!(red.w, AffineWeylElement::generator(&a1, 5, 1).unwrap());
        assert!(red.stabilizer.is_empty());

        assert!(matches!(
            reduce_to_fundamental(&a1, &Weight(vec![-1]), l5),
            Err(Error::NotDominant(_))
        ));
    }

    #[test]
    fn reduction_is_minimal_against_enumeration() {
        for (f, n, ell, bound, radius) in [
            (Family::A, 1, 5, 10, 8),
            (Family::A, 2, 5, 7, 8),
            (Family::B, 2, 7, 8, 8),
        ] {
            let (rs, level) = setup(f, n, ell);
            let ball = ball(&rs, ell, radius);
            let mut lam = vec![0i64; n];
            loop {
                let lambda = Weight(lam.clone());
                let red = reduce_to_fundamental(&rs, &lambda, level).unwrap();
                assert!(in_closed_fundamental_alcove(&rs, ell, &red.lambda_minus));
                assert_eq!(red.w.dot(&rs, &red.lambda_minus), lambda);
                assert!(red.w.has_dominant_translation(&rs));
                let lw = red.w.length(&rs);
                if lw < radius {
                    let best = ball
                        .iter()
                        .filter(|(y, _)| y.dot(&rs, &red.lambda_minus) == lambda)
                        .map(|(_, d)| *d)
                        .min()
                        .unwrap();
                    assert_eq!(best, lw, "{f}{n} {lambda}");
                }
                let mut k = 0;
                while k < n {
                    lam[k] += 1;
                    if lam[k] < bound {
                        break;
                    }
                    lam[k] = 0;
                    k += 1;
                }
                if k == n {
                    break;
                }
            }
        }
    }

    #[test]
    fn enumerate_coset_examples() {
        let (a1, l5) = setup(Family::A, 1, 5);
        let e = enumerate_dominant_coset(&a1, l5, &Weight(vec![-6]), &[0], 0).unwrap();
        assert_eq!(e, vec![AffineWeylElement::identity(&a1, 5)]);
        // wall weight: e, s_1, s_0 s_1
        let e = enumerate_dominant_coset(&a1, l5, &Weight(vec![-6]), &[0], 2).unwrap();
        assert_eq!(e.len(), 3);
        assert_eq!(e[2], AffineWeylElement::from_word(&a1, 5, &[0, 1]).unwrap());
        // regular weight: all five elements of length <= 2
        let e = enumerate_dominant_coset(&a1, l5, &Weight(vec![-4]), &[], 2).unwrap();
        assert_eq!(e.len(), 5);
        let lens: Vec<u32> = e.iter().map(|y| y.length(&a1)).collect();
        assert!(lens.windows(2).all(|p| p[0] <= p[1]));
    }

    fn subword_leq(
        rs: &RootSystem,
        ell: u32,
        y: &AffineWeylElement,
        w: &AffineWeylElement,
    ) -> bool {
        let word = w.reduced_word(rs);
        let gens = generators(rs, ell);
        (0u32..(1 << word.len())).any(|mask| {
            let mut p = AffineWeylElement::identity(rs, ell);
            for (i, &g) in word.iter().enumerate() {
                if mask & (1 << i) != 0 {
                    p = p.compose(&gens[g]);
                }
            }
            &p == y
        })
    }

    #[test]
    fn bruhat_matches_subword_criterion() {
        for (f, n, ell, r) in [
            (Family::A, 1, 5, 6),
            (Family::A, 2, 5, 5),
            (Family::B, 2, 7, 5),
        ] {
            let (rs, _) = setup(f, n, ell);
            let elems: Vec<AffineWeylElement> = ball(&rs, ell, r).into_keys().collect();
            let mut g = AffineWeylGroup::new(&rs, ell);
            for w in &elems {
                let wi = g.intern(w);
                for y in &elems {
                    let yi = g.intern(y);
                    assert_eq!(g.bruhat_leq(yi, wi), subword_leq(&rs, ell, y, w), "{f}{n}");
                }
            }
        }
    }

    #[test]
    fn bruhat_examples() {
        let (a2, _) = setup(Family::A, 2, 5);
        let w = AffineWeylElement::from_word(&a2, 5, &[0, 1, 2]).unwrap();
        let e = AffineWeylElement::identity(&a2, 5);
        assert!(bruhat_leq(&a2, &e, &w).unwrap());
        assert!(bruhat_leq(&a2, &w, &w).unwrap());
        let longer = AffineWeylElement::from_word(&a2, 5, &[0, 1, 2, 0]).unwrap();
        assert!(!bruhat_leq(&a2, &longer, &w).unwrap());
    }

    #[test]
    fn short_reflections_length_bound() {
        for (f, n) in [
            (Family::A, 2),
            (Family::A, 3),
            (Family::A, 4),
            (Family::B, 2),
            (Family::B, 3),
            (Family::B, 4),
            (Family::C, 3),
            (Family::C, 4),
            (Family::D, 4),
            (Family::F, 4),
            (Family::G, 2),
        ] {
            let rs = RootSystem::build(f, n).unwrap();
            for b in rs.positive_ids() {
                let s = WeylElement::reflection(&rs, b);
                assert!((s.length(&rs) as i64) < 2 * rs.root(b).height, "{f}{n}");
            }
        }
    }

    #[test]
    fn minimal_dominant_sign_pattern() {
        for (f, n, ell, bound) in [
            (Family::A, 2, 5, 10),
            (Family::B, 2, 7, 14),
            (Family::G, 2, 7, 14),
        ] {
            let (rs, level) = setup(f, n, ell);
            for a in 0..bound {
                for b in 0..bound {
                    let red = reduce_to_fundamental(&rs, &Weight(vec![a, b]), level).unwrap();
                    let shifted = red.lambda_minus.add(&rs.rho());
                    for al in rs.positive_ids() {
                        let p = rs.pair(&shifted.0, al);
                        if p % ell as i64 != 0 {
                            continue;
                        }
                        let neg = !rs.is_positive(red.w.finite_part().apply_root(&rs, al));
                        assert_eq!(neg, p == -(ell as i64));
                    }
                }
            }
        }
    }
}
