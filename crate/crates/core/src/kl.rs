//! Kazhdan-Lusztig polynomials of the affine Weyl group, computed column by
//! column with the descent recursion, and their parabolic alternating sums.

use std::collections::{HashMap, HashSet};
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::affine_weyl::{AffineWeylElement, AffineWeylGroup, ElemId};
use crate::error::{Error, Result};
use crate::root_system::{CartanType, RootSystem, WeylElement};

pub const DEFAULT_MAX_LENGTH: u32 = 14;
pub const CACHE_FORMAT_VERSION: u32 = 1;

/// Integer polynomial in `q`, constant term first, without trailing zeros.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
#[serde(transparent)]
pub struct KlPoly(Vec<i64>);

impl KlPoly {
    pub fn zero() -> KlPoly {
        KlPoly(Vec::new())
    }

    pub fn one() -> KlPoly {
        KlPoly(vec![1])
    }

    pub fn from_coeffs(mut c: Vec<i64>) -> KlPoly {
        while c.last() == Some(&0) {
            c.pop();
        }
        KlPoly(c)
    }

    pub fn coeffs(&self) -> &[i64] {
        &self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.0.len().checked_sub(1)
    }

    pub fn coeff(&self, k: usize) -> i64 {
        self.0.get(k).copied().unwrap_or(0)
    }

    pub fn eval_at_one(&self) -> i64 {
        self.0.iter().sum()
    }

    pub fn is_nonnegative(&self) -> bool {
        self.0.iter().all(|&c| c >= 0)
    }

    /// `self += sign * q^shift * other`.
    fn add_shifted(&mut self, other: &KlPoly, shift: usize, factor: i64) {
        if other.0.len() + shift > self.0.len() {
            self.0.resize(other.0.len() + shift, 0);
        }
        for (i, c) in other.0.iter().enumerate() {
            self.0[i + shift] += factor * c;
        }
        while self.0.last() == Some(&0) {
            self.0.pop();
        }
    }
}

impl fmt::Display for KlPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (k, &c) in self.0.iter().enumerate().rev() {
            if c == 0 {
                continue;
            }
            if !first {
                f.write_str(if c < 0 { " - " } else { " + " })?;
            } else if c < 0 {
                f.write_str("-")?;
            }
            first = false;
            let a = c.abs();
            match (k, a) {
                (0, _) => write!(f, "{a}")?,
                (1, 1) => f.write_str("q")?,
                (1, _) => write!(f, "{a}q")?,
                (_, 1) => write!(f, "q^{k}")?,
                _ => write!(f, "{a}q^{k}")?,
            }
        }
        Ok(())
    }
}

#[derive(Debug, Clone, Default)]
struct Column {
    /// `P_{y,w}` for every `y <= w`.
    polys: HashMap<ElemId, KlPoly>,
    /// `(z, mu(z, w))` for `z < w` with `mu != 0`.
    mu: Vec<(ElemId, i64)>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
pub struct KlStats {
    pub columns: usize,
    pub columns_computed: usize,
    pub columns_loaded: usize,
}

/// Canonical, level-independent serialization of an affine Weyl group element.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct ElemKey {
    pub theta: Vec<i64>,
    /// Reduced word of the finite part, labels `1..=rank`.
    pub word: Vec<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CachedColumn {
    pub w: ElemKey,
    pub entries: Vec<(ElemKey, KlPoly)>,
}

/// Serializable snapshot of a [`KlTable`].
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct KlCache {
    pub format_version: u32,
    pub cartan_type: CartanType,
    pub ell: u32,
    pub columns: Vec<CachedColumn>,
}

/// Memo of Kazhdan-Lusztig columns `w -> (y -> P_{y,w})` for one `(type, l)`.
#[derive(Debug, Clone)]
pub struct KlTable {
    group: AffineWeylGroup,
    columns: HashMap<ElemId, Column>,
    max_length: u32,
    computed: usize,
    loaded: usize,
}

impl KlTable {
    pub fn new(rs: &RootSystem, level: u32) -> KlTable {
        KlTable::with_max_length(rs, level, DEFAULT_MAX_LENGTH)
    }

    pub fn with_max_length(rs: &RootSystem, level: u32, max_length: u32) -> KlTable {
        KlTable {
            group: AffineWeylGroup::new(rs, level),
            columns: HashMap::new(),
            max_length,
            computed: 0,
            loaded: 0,
        }
    }

    pub fn group(&self) -> &AffineWeylGroup {
        &self.group
    }

    pub fn group_mut(&mut self) -> &mut AffineWeylGroup {
        &mut self.group
    }

    pub fn level(&self) -> u32 {
        self.group.level()
    }

    pub fn max_length(&self) -> u32 {
        self.max_length
    }

    pub fn set_max_length(&mut self, cap: u32) {
        self.max_length = cap;
    }

    pub fn stats(&self) -> KlStats {
        KlStats {
            columns: self.columns.len(),
            columns_computed: self.computed,
            columns_loaded: self.loaded,
        }
    }

    pub fn clear(&mut self) {
        self.columns.clear();
        self.computed = 0;
        self.loaded = 0;
    }

    fn check_level(&self, e: &AffineWeylElement) -> Result<()> {
        if e.level() != self.level() {
            return Err(Error::LevelMismatch {
                left: e.level(),
                right: self.level(),
            });
        }
        Ok(())
    }

    pub fn intern(&mut self, e: &AffineWeylElement) -> Result<ElemId> {
        self.check_level(e)?;
        Ok(self.group.intern(e))
    }

    pub fn kl_poly(&mut self, y: &AffineWeylElement, w: &AffineWeylElement) -> Result<KlPoly> {
        let y = self.intern(y)?;
        let w = self.intern(w)?;
        self.kl_poly_ids(y, w)
    }

    pub fn kl_poly_ids(&mut self, y: ElemId, w: ElemId) -> Result<KlPoly> {
        self.ensure_column(w)?;
        Ok(self.columns[&w].polys.get(&y).cloned().unwrap_or_default())
    }

    /// The Bruhat interval `[e, w]`.
    pub fn lower_interval(&mut self, w: ElemId) -> Result<Vec<ElemId>> {
        self.ensure_column(w)?;
        let mut ys: Vec<ElemId> = self.columns[&w].polys.keys().copied().collect();
        ys.sort_by_key(|&y| (self.group.length(y), y));
        Ok(ys)
    }

    /// `mu(z, w)` for every `z < w` where it is nonzero.
    pub fn mu_list(&mut self, w: ElemId) -> Result<Vec<(ElemId, i64)>> {
        self.ensure_column(w)?;
        Ok(self.columns[&w].mu.clone())
    }

    fn ensure_column(&mut self, w: ElemId) -> Result<()> {
        if self.columns.contains_key(&w) {
            return Ok(());
        }
        let lw = self.group.length(w);
        if lw > self.max_length {
            return Err(Error::Capacity {
                length: lw,
                cap: self.max_length,
            });
        }
        let Some(s) = self.group.first_left_descent(w) else {
            let polys = HashMap::from([(w, KlPoly::one())]);
            self.columns.insert(
                w,
                Column {
                    polys,
                    mu: Vec::new(),
                },
            );
            self.computed += 1;
            return Ok(());
        };
        let v = self.group.lmul(s, w);
        self.ensure_column(v)?;
        let corrections: Vec<(ElemId, i64)> = self.columns[&v]
            .mu
            .clone()
            .into_iter()
            .filter(|&(z, _)| self.group.is_left_descent(s, z))
            .collect();
        for &(z, _) in &corrections {
            self.ensure_column(z)?;
        }

        let mut domain: Vec<(ElemId, ElemId, bool)> = Vec::new();
        let mut seen = HashSet::new();
        let below_v: Vec<ElemId> = self.columns[&v].polys.keys().copied().collect();
        for y in below_v {
            let sy = self.group.lmul(s, y);
            for (a, b) in [(y, sy), (sy, y)] {
                if seen.insert(a) {
                    let descent = self.group.length(b) < self.group.length(a);
                    domain.push((a, b, descent));
                }
            }
        }

        let col_v = &self.columns[&v];
        let mut polys = HashMap::with_capacity(domain.len());
        for (y, sy, descent) in domain {
            let c = usize::from(descent);
            let mut p = KlPoly::zero();
            if let Some(q) = col_v.polys.get(&sy) {
                p.add_shifted(q, 1 - c, 1);
            }
            if let Some(q) = col_v.polys.get(&y) {
                p.add_shifted(q, c, 1);
            }
            for &(z, m) in &corrections {
                if let Some(q) = self.columns[&z].polys.get(&y) {
                    let shift = (lw - self.group.length(z)) / 2;
                    p.add_shifted(q, shift as usize, -m);
                }
            }
            if p.is_zero() {
                return Err(Error::InvariantViolation(format!(
                    "P_(y,w) vanished on the Bruhat interval of {}",
                    w
                )));
            }
            polys.insert(y, p);
        }
        let mu = mu_from_polys(&self.group, w, &polys);
        self.columns.insert(w, Column { polys, mu });
        self.computed += 1;
        Ok(())
    }

    /// `P^{I,-1}_{y,w} = sum_{x in W_I, yx <= w} (-1)^{l(x)} P_{yx,w}` for `y, w`
    /// minimal in their left cosets of `W_I`.
    pub fn parabolic_kl(
        &mut self,
        labels: &[usize],
        y: &AffineWeylElement,
        w: &AffineWeylElement,
    ) -> Result<KlPoly> {
        let y = self.intern(y)?;
        let w = self.intern(w)?;
        self.parabolic_kl_ids(labels, y, w)
    }

    pub fn parabolic_kl_ids(&mut self, labels: &[usize], y: ElemId, w: ElemId) -> Result<KlPoly> {
        if labels.iter().any(|&g| g >= self.group.num_generators()) {
            return Err(Error::InvalidWord(format!(
                "parabolic labels {labels:?} out of range"
            )));
        }
        for e in [y, w] {
            if labels.iter().any(|&g| self.group.is_right_descent(e, g)) {
                return Err(Error::NotMinimalInCoset);
            }
        }
        self.ensure_column(w)?;
        let ly = self.group.length(y);
        let coset = right_coset(&mut self.group, y, labels);
        let col = &self.columns[&w].polys;
        let mut p = KlPoly::zero();
        for yx in coset {
            if let Some(q) = col.get(&yx) {
                let sign = if (self.group.length(yx) - ly) % 2 == 0 {
                    1
                } else {
                    -1
                };
                p.add_shifted(q, 0, sign);
            }
        }
        if !p.is_nonnegative() {
            return Err(Error::InvariantViolation(format!(
                "parabolic KL polynomial {p} has a negative coefficient"
            )));
        }
        Ok(p)
    }

    pub fn elem_key(&self, id: ElemId) -> ElemKey {
        let e = self.group.element(id);
        ElemKey {
            theta: e.theta().to_vec(),
            word: e.finite_part().reduced_word(self.group.root_system()),
        }
    }

    pub fn elem_from_key(&self, key: &ElemKey) -> Result<AffineWeylElement> {
        let rs = self.group.root_system();
        if key.theta.len() != rs.rank() {
            return Err(Error::DimensionMismatch {
                expected: rs.rank(),
                got: key.theta.len(),
            });
        }
        let x = WeylElement::from_word(rs, &key.word)?;
        Ok(AffineWeylElement::from_parts(
            key.theta.clone(),
            x,
            self.level(),
        ))
    }

    pub fn export(&self) -> KlCache {
        let mut ids: Vec<ElemId> = self.columns.keys().copied().collect();
        ids.sort_by_key(|&w| (self.group.length(w), w));
        let columns = ids
            .into_iter()
            .map(|w| {
                let mut entries: Vec<(ElemId, &KlPoly)> = self.columns[&w]
                    .polys
                    .iter()
                    .map(|(y, p)| (*y, p))
                    .collect();
                entries.sort_by_key(|&(y, _)| (self.group.length(y), y));
                CachedColumn {
                    w: self.elem_key(w),
                    entries: entries
                        .into_iter()
                        .map(|(y, p)| (self.elem_key(y), p.clone()))
                        .collect(),
                }
            })
            .collect();
        KlCache {
            format_version: CACHE_FORMAT_VERSION,
            cartan_type: self.group.root_system().cartan_type(),
            ell: self.level(),
            columns,
        }
    }

    /// Load columns from a snapshot of the same group; returns how many were new.
    pub fn import(&mut self, cache: &KlCache) -> Result<usize> {
        if cache.format_version != CACHE_FORMAT_VERSION {
            return Err(Error::InvalidWord(format!(
                "unsupported cache format {}",
                cache.format_version
            )));
        }
        let ct = self.group.root_system().cartan_type();
        if cache.cartan_type != ct {
            return Err(Error::InvalidWord(format!(
                "cache is for type {}, expected {ct}",
                cache.cartan_type
            )));
        }
        if cache.ell != self.level() {
            return Err(Error::LevelMismatch {
                left: cache.ell,
                right: self.level(),
            });
        }
        let mut added = 0;
        for col in &cache.columns {
            let we = self.elem_from_key(&col.w)?;
            let w = self.group.intern(&we);
            if self.columns.contains_key(&w) {
                continue;
            }
            let mut polys = HashMap::with_capacity(col.entries.len());
            for (key, p) in &col.entries {
                let ye = self.elem_from_key(key)?;
                polys.insert(self.group.intern(&ye), p.clone());
            }
            let mu = mu_from_polys(&self.group, w, &polys);
            self.columns.insert(w, Column { polys, mu });
            added += 1;
        }
        self.loaded += added;
        Ok(added)
    }

    /// Absorb the columns of a table built independently for the same group.
    pub fn merge(&mut self, other: &KlTable) -> Result<usize> {
        self.import(&other.export())
    }
}

fn mu_from_polys(
    group: &AffineWeylGroup,
    w: ElemId,
    polys: &HashMap<ElemId, KlPoly>,
) -> Vec<(ElemId, i64)> {
    let lw = group.length(w);
    let mut mu: Vec<(ElemId, i64)> = polys
        .iter()
        .filter_map(|(&z, p)| {
            let d = lw - group.length(z);
            if d % 2 == 1 {
                let m = p.coeff(((d - 1) / 2) as usize);
                (m != 0).then_some((z, m))
            } else {
                None
            }
        })
        .collect();
    mu.sort_unstable();
    mu
}

/// `{ y x : x in W_I }`, built by right multiplication inside the coset.
fn right_coset(group: &mut AffineWeylGroup, y: ElemId, labels: &[usize]) -> Vec<ElemId> {
    let mut out = vec![y];
    let mut seen: HashSet<ElemId> = HashSet::from([y]);
    let mut i = 0;
    while i < out.len() {
        let a = out[i];
        i += 1;
        for &g in labels {
            let b = group.rmul(a, g);
            if seen.insert(b) {
                out.push(b);
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::root_system::Family;

    fn ball(group: &mut AffineWeylGroup, radius: u32) -> Vec<ElemId> {
        let mut out = vec![group.identity()];
        let mut seen = HashSet::from([group.identity()]);
        let mut i = 0;
        while i < out.len() {
            let a = out[i];
            i += 1;
            if group.length(a) == radius {
                continue;
            }
            for g in 0..group.num_generators() {
                let b = group.rmul(a, g);
                if seen.insert(b) {
                    out.push(b);
                }
            }
        }
        out
    }

    /// Independent oracle: KL polynomials from the Hecke-algebra characterization.
    /// `C'_w = sum_y P_{y,w} T_y` is the unique bar-invariant element with
    /// `deg P_{y,w} <= (l(w)-l(y)-1)/2`, built from `C'_s C'_v` via the right
    /// multiplication recursion and the inverse `R`-polynomials.
    fn oracle_by_right_recursion(
        group: &mut AffineWeylGroup,
        elems: &[ElemId],
    ) -> HashMap<(ElemId, ElemId), KlPoly> {
        // P_{y,w} = q^{1-c} P_{ys,v} + q^c P_{y,v} - sum_{z s < z} mu(z,v) q^{(l(w)-l(z))/2} P_{y,z}
        // with w = v s, c = [y s < y].
        let mut sorted = elems.to_vec();
        sorted.sort_by_key(|&e| group.length(e));
        let mut table: HashMap<(ElemId, ElemId), KlPoly> = HashMap::new();
        let get = |t: &HashMap<(ElemId, ElemId), KlPoly>, y: ElemId, w: ElemId| {
            t.get(&(y, w)).cloned().unwrap_or_default()
        };
        for &w in &sorted {
            let lw = group.length(w);
            if lw == 0 {
                table.insert((w, w), KlPoly::one());
                continue;
            }
            let s = (0..group.num_generators())
                .rev()
                .find(|&g| group.is_right_descent(w, g))
                .unwrap();
            let v = group.rmul(w, s);
            let lv = lw - 1;
            let candidates: Vec<ElemId> = sorted
                .iter()
                .copied()
                .filter(|&z| group.length(z) < lv && (lv - group.length(z)) % 2 == 1)
                .collect();
            let mus: Vec<(ElemId, i64)> = candidates
                .into_iter()
                .filter_map(|z| {
                    let m = get(&table, z, v).coeff(((lv - group.length(z) - 1) / 2) as usize);
                    (m != 0 && group.is_right_descent(z, s)).then_some((z, m))
                })
                .collect();
            for &y in &sorted {
                if group.length(y) > lw {
                    break;
                }
                let ys = group.rmul(y, s);
                let c = usize::from(group.length(ys) < group.length(y));
                let mut p = KlPoly::zero();
                p.add_shifted(&get(&table, ys, v), 1 - c, 1);
                p.add_shifted(&get(&table, y, v), c, 1);
                for &(z, m) in &mus {
                    p.add_shifted(
                        &get(&table, y, z),
                        ((lw - group.length(z)) / 2) as usize,
                        -m,
                    );
                }
                if !p.is_zero() {
                    table.insert((y, w), p);
                }
            }
        }
        table
    }

    #[test]
    fn display() {
        assert_eq!(
            KlPoly::from_coeffs(vec![1, 2, 0, 1]).to_string(),
            "q^3 + 2q + 1"
        );
        assert_eq!(KlPoly::zero().to_string(), "0");
    }

    #[test]
    fn trivial_values() {
        let rs = RootSystem::build(Family::A, 2).unwrap();
        let mut t = KlTable::new(&rs, 5);
        let w = AffineWeylElement::from_word(&rs, 5, &[0, 1, 2, 0]).unwrap();
        assert_eq!(t.kl_poly(&w, &w).unwrap(), KlPoly::one());
        let y = AffineWeylElement::from_word(&rs, 5, &[1, 2, 1]).unwrap();
        assert!(!crate::affine_weyl::bruhat_leq(&rs, &y, &w).unwrap());
        assert_eq!(t.kl_poly(&y, &w).unwrap(), KlPoly::zero());
        let other = AffineWeylElement::identity(&rs, 7);
        assert!(matches!(
            t.kl_poly(&other, &w),
            Err(Error::LevelMismatch { .. })
        ));
    }

    #[test]
    fn affine_a1_is_all_ones() {
        let rs = RootSystem::build(Family::A, 1).unwrap();
        let mut t = KlTable::new(&rs, 5);
        let elems = ball(t.group_mut(), 8);
        for &w in &elems {
            for &y in &elems {
                let p = t.kl_poly_ids(y, w).unwrap();
                let leq = t.group_mut().bruhat_leq(y, w);
                assert_eq!(p, if leq { KlPoly::one() } else { KlPoly::zero() });
            }
        }
    }

    fn check_against_oracle(family: Family, rank: usize, ell: u32, radius: u32) {
        let rs = RootSystem::build(family, rank).unwrap();
        let mut t = KlTable::new(&rs, ell);
        let elems = ball(t.group_mut(), radius);
        let oracle = oracle_by_right_recursion(t.group_mut(), &elems);
        for &w in &elems {
            let lw = t.group().length(w);
            for &y in &elems {
                let p = t.kl_poly_ids(y, w).unwrap();
                assert_eq!(
                    p,
                    oracle.get(&(y, w)).cloned().unwrap_or_default(),
                    "{family:?}{rank} y={y} w={w}"
                );
                let leq = t.group_mut().bruhat_leq(y, w);
                assert_eq!(!p.is_zero(), leq);
                if leq {
                    assert_eq!(p.coeff(0), 1);
                    assert!(p.is_nonnegative());
                    let ly = t.group().length(y);
                    if y != w {
                        assert!(2 * (p.degree().unwrap() as u32) < lw - ly);
                    }
                }
            }
        }
    }

    #[test]
    fn left_and_right_recursions_agree() {
        check_against_oracle(Family::A, 2, 5, 7);
        check_against_oracle(Family::B, 2, 7, 7);
        check_against_oracle(Family::G, 2, 7, 7);
    }

    #[test]
    fn positivity_and_degree_sweep() {
        for (family, rank, ell) in [(Family::A, 1, 5), (Family::A, 2, 5)] {
            let rs = RootSystem::build(family, rank).unwrap();
            let mut t = KlTable::new(&rs, ell);
            let elems = ball(t.group_mut(), 8);
            for &w in &elems {
                for y in t.lower_interval(w).unwrap() {
                    let p = t.kl_poly_ids(y, w).unwrap();
                    assert!(p.is_nonnegative());
                    assert_eq!(p.coeff(0), 1);
                }
            }
        }
    }

    #[test]
    fn nontrivial_polynomials_appear() {
        let rs = RootSystem::build(Family::A, 2).unwrap();
        let mut t = KlTable::new(&rs, 5);
        let elems = ball(t.group_mut(), 6);
        let mut found = false;
        for &w in &elems {
            for y in t.lower_interval(w).unwrap() {
                found |= t.kl_poly_ids(y, w).unwrap().degree().unwrap_or(0) > 0;
            }
        }
        assert!(found);
    }

    #[test]
    fn parabolic_examples() {
        let rs = RootSystem::build(Family::A, 2).unwrap();
        let mut t = KlTable::new(&rs, 5);
        let elems = ball(t.group_mut(), 6);
        for &w in &elems {
            for &y in &elems {
                assert_eq!(
                    t.parabolic_kl_ids(&[], y, w).unwrap(),
                    t.kl_poly_ids(y, w).unwrap()
                );
            }
        }
        let labels = [1usize];
        let minimal: Vec<ElemId> = elems
            .iter()
            .copied()
            .filter(|&e| !t.group_mut().is_right_descent(e, 1))
            .collect();
        for &w in &minimal {
            assert_eq!(t.parabolic_kl_ids(&labels, w, w).unwrap(), KlPoly::one());
            for &y in &minimal {
                let p = t.parabolic_kl_ids(&labels, y, w).unwrap();
                if !t.group_mut().bruhat_leq(y, w) {
                    assert!(p.is_zero());
                }
            }
        }
        let s1 = t.group_mut().rmul(0, 1);
        assert_eq!(
            t.parabolic_kl_ids(&labels, s1, s1),
            Err(Error::NotMinimalInCoset)
        );
    }

    #[test]
    fn capacity_is_explicit() {
        let rs = RootSystem::build(Family::A, 1).unwrap();
        let mut t = KlTable::with_max_length(&rs, 5, 3);
        let w = AffineWeylElement::from_word(&rs, 5, &[0, 1, 0, 1]).unwrap();
        assert_eq!(
            t.kl_poly(&w, &w),
            Err(Error::Capacity { length: 4, cap: 3 })
        );
        assert!(t.kl_poly(&w, &w).unwrap_err().is_capacity());
    }

    #[test]
    fn cache_round_trip_is_transparent() {
        let rs = RootSystem::build(Family::B, 2).unwrap();
        let mut warm = KlTable::new(&rs, 7);
        let elems = ball(warm.group_mut(), 6);
        for &w in &elems {
            warm.lower_interval(w).unwrap();
        }
        let cache = warm.export();
        let json = serde_json::to_string(&cache).unwrap();
        let back: KlCache = serde_json::from_str(&json).unwrap();
        assert_eq!(back, cache);

        let mut loaded = KlTable::new(&rs, 7);
        assert_eq!(loaded.import(&back).unwrap(), cache.columns.len());
        let mut cold = KlTable::new(&rs, 7);
        let mut probe = KlTable::new(&rs, 7);
        for e in ball(probe.group_mut(), 7) {
            let we = probe.group().element(e).clone();
            for y in ball(probe.group_mut(), 5) {
                let ye = probe.group().element(y).clone();
                assert_eq!(
                    loaded.kl_poly(&ye, &we).unwrap(),
                    cold.kl_poly(&ye, &we).unwrap()
                );
            }
        }
        assert!(loaded.stats().columns_loaded > 0);

        let mut wrong = KlTable::new(&rs, 11);
        assert!(wrong.import(&cache).is_err());
    }

    #[test]
    fn elem_keys_round_trip() {
        let rs = RootSystem::build(Family::G, 2).unwrap();
        let mut t = KlTable::new(&rs, 7);
        for e in ball(t.group_mut(), 6) {
            let key = t.elem_key(e);
            assert_eq!(&t.elem_from_key(&key).unwrap(), t.group().element(e));
        }
    }
}
