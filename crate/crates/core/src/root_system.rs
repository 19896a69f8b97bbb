//! Finite root systems of simple type, their weight lattices and Weyl groups.
//!
//! Roots are stored by their integer coefficients in the simple-root basis,
//! weights by their integer coordinates in the fundamental-weight basis. The
//! inner product is normalized so that short roots have squared length 2, which
//! makes `d_alpha = <alpha, alpha> / 2` an integer in `{1, 2, 3}`.

use std::collections::{HashMap, HashSet, VecDeque};
use std::fmt;

use num_rational::Rational64;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, LevelViolation, Result};

pub const MAX_RANK: usize = 8;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Family {
    A,
    B,
    C,
    D,
    E,
    F,
    G,
}

impl Family {
    pub fn parse(label: &str) -> Option<Family> {
        match label.trim().to_ascii_uppercase().as_str() {
            "A" => Some(Family::A),
            "B" => Some(Family::B),
            "C" => Some(Family::C),
            "D" => Some(Family::D),
            "E" => Some(Family::E),
            "F" => Some(Family::F),
            "G" => Some(Family::G),
            _ => None,
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let c = match self {
            Family::A => "A",
            Family::B => "B",
            Family::C => "C",
            Family::D => "D",
            Family::E => "E",
            Family::F => "F",
            Family::G => "G",
        };
        f.write_str(c)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct CartanType {
    pub family: Family,
    pub rank: usize,
}

impl CartanType {
    pub fn new(family: Family, rank: usize) -> Result<CartanType> {
        let ok = match family {
            Family::A => (1..=MAX_RANK).contains(&rank),
            Family::B | Family::C => (2..=MAX_RANK).contains(&rank),
            Family::D => (4..=MAX_RANK).contains(&rank),
            Family::E => (6..=8).contains(&rank),
            Family::F => rank == 4,
            Family::G => rank == 2,
        };
        if ok {
            Ok(CartanType { family, rank })
        } else {
            Err(Error::InvalidCartanType {
                family: family.to_string(),
                rank,
            })
        }
    }

    /// Bad primes of the root system (Springer-Steinberg table).
    ///
    /// A: none; B, C, D: 2; E6, E7, F4, G2: 2, 3; E8: 2, 3, 5.
    pub fn bad_primes(&self) -> &'static [u32] {
        match (self.family, self.rank) {
            (Family::A, _) => &[],
            (Family::B | Family::C | Family::D, _) => &[2],
            (Family::E, 8) => &[2, 3, 5],
            (Family::E | Family::F | Family::G, _) => &[2, 3],
        }
    }

    /// Number of positive roots, from the classical closed formulas.
    pub fn classical_positive_root_count(&self) -> usize {
        let n = self.rank;
        match self.family {
            Family::A => n * (n + 1) / 2,
            Family::B | Family::C => n * n,
            Family::D => n * (n - 1),
            Family::E => match n {
                6 => 36,
                7 => 63,
                _ => 120,
            },
            Family::F => 24,
            Family::G => 6,
        }
    }

    /// Dynkin diagram: squared lengths of the simple roots (short = 2) and
    /// bonded pairs, in Bourbaki numbering.
    fn diagram(&self) -> (Vec<i64>, Vec<(usize, usize)>) {
        let n = self.rank;
        let chain: Vec<(usize, usize)> = (0..n.saturating_sub(1)).map(|i| (i, i + 1)).collect();
        match self.family {
            Family::A => (vec![2; n], chain),
            Family::B => {
                let mut norms = vec![4; n];
                norms[n - 1] = 2;
                (norms, chain)
            }
            Family::C => {
                let mut norms = vec![2; n];
                norms[n - 1] = 4;
                (norms, chain)
            }
            Family::D => {
                let mut edges: Vec<(usize, usize)> = (0..n - 2).map(|i| (i, i + 1)).collect();
                edges.push((n - 3, n - 1));
                (vec![2; n], edges)
            }
            Family::E => {
                let mut edges = vec![(0, 2), (1, 3), (2, 3)];
                edges.extend((3..n - 1).map(|i| (i, i + 1)));
                (vec![2; n], edges)
            }
            Family::F => (vec![4, 4, 2, 2], chain),
            Family::G => (vec![2, 6], chain),
        }
    }
}

impl fmt::Display for CartanType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.family, self.rank)
    }
}

/// Index of a root in [`RootSystem::roots`]. Positive roots come first.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct RootId(pub usize);

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Root {
    /// Coefficients in the simple-root basis.
    pub coeffs: Vec<i64>,
    /// Coefficients of the coroot in the simple-coroot basis.
    pub coroot: Vec<i64>,
    /// Coordinates in the fundamental-weight basis.
    pub weight: Vec<i64>,
    /// `<alpha, alpha>`.
    pub norm: i64,
    /// `<alpha, alpha> / <alpha_0, alpha_0>`.
    pub d: i64,
    pub height: i64,
}

/// An integral weight in fundamental-weight coordinates.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Weight(pub Vec<i64>);

impl Weight {
    pub fn zero(rank: usize) -> Weight {
        Weight(vec![0; rank])
    }

    pub fn coords(&self) -> &[i64] {
        &self.0
    }

    pub fn rank(&self) -> usize {
        self.0.len()
    }

    pub fn is_dominant(&self) -> bool {
        self.0.iter().all(|&c| c >= 0)
    }

    pub fn add(&self, other: &Weight) -> Weight {
        Weight(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    pub fn sub(&self, other: &Weight) -> Weight {
        Weight(self.0.iter().zip(&other.0).map(|(a, b)| a - b).collect())
    }

    pub fn scale(&self, k: i64) -> Weight {
        Weight(self.0.iter().map(|a| a * k).collect())
    }
}

impl fmt::Display for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|c| c.to_string()).collect();
        write!(f, "({})", parts.join(","))
    }
}

impl From<Vec<i64>> for Weight {
    fn from(v: Vec<i64>) -> Self {
        Weight(v)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Mode {
    Quantum,
    Modular,
}

/// A validated level: an odd `ell > h` coprime to the bad primes, and prime
/// in modular mode.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Level {
    ell: u32,
    mode: Mode,
}

impl Level {
    pub fn new(rs: &RootSystem, ell: u32, mode: Mode) -> Result<Level> {
        rs.validate_ell(ell, mode)?;
        Ok(Level { ell, mode })
    }

    pub fn quantum(rs: &RootSystem, ell: u32) -> Result<Level> {
        Level::new(rs, ell, Mode::Quantum)
    }

    pub fn ell(&self) -> u32 {
        self.ell
    }

    pub fn mode(&self) -> Mode {
        self.mode
    }
}

pub fn is_prime(n: u32) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2u32;
    while d.saturating_mul(d) <= n {
        if n % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

/// Immutable Cartan data for one simple type.
#[derive(Debug, Clone)]
pub struct RootSystem {
    cartan_type: CartanType,
    /// `cartan[i][j] = <alpha_i, alpha_j^vee>`.
    cartan: Vec<Vec<i64>>,
    /// `gram[i][j] = <alpha_i, alpha_j>`.
    gram: Vec<Vec<i64>>,
    cartan_inv: Vec<Vec<Rational64>>,
    roots: Vec<Root>,
    num_positive: usize,
    index: HashMap<Vec<i64>, RootId>,
    highest_short: RootId,
    highest: RootId,
    coxeter_number: u32,
}

impl RootSystem {
    pub fn build(family: Family, rank: usize) -> Result<RootSystem> {
        let cartan_type = CartanType::new(family, rank)?;
        let n = rank;
        let (norms, edges) = cartan_type.diagram();
        let mut gram = vec![vec![0i64; n]; n];
        for i in 0..n {
            gram[i][i] = norms[i];
        }
        for &(i, j) in &edges {
            let b = -norms[i].max(norms[j]) / 2;
            gram[i][j] = b;
            gram[j][i] = b;
        }
        let cartan: Vec<Vec<i64>> = (0..n)
            .map(|i| (0..n).map(|j| 2 * gram[i][j] / gram[j][j]).collect())
            .collect();
        let cartan_inv = invert(&cartan);

        let positive = positive_roots(&cartan);
        let mut roots = Vec::with_capacity(2 * positive.len());
        for coeffs in &positive {
            roots.push(make_root(coeffs.clone(), &gram, &cartan));
        }
        for coeffs in &positive {
            roots.push(make_root(
                coeffs.iter().map(|c| -c).collect(),
                &gram,
                &cartan,
            ));
        }
        let num_positive = positive.len();
        let index = roots
            .iter()
            .enumerate()
            .map(|(i, r)| (r.coeffs.clone(), RootId(i)))
            .collect();

        let highest_short = (0..num_positive)
            .filter(|&i| roots[i].d == 1)
            .max_by_key(|&i| roots[i].height)
            .map(RootId)
            .expect("every root system has short roots");
        let highest = (0..num_positive)
            .max_by_key(|&i| roots[i].height)
            .map(RootId)
            .expect("nonempty");
        let coxeter_number = (roots[highest_short.0].coroot.iter().sum::<i64>() + 1) as u32;

        Ok(RootSystem {
            cartan_type,
            cartan,
            gram,
            cartan_inv,
            roots,
            num_positive,
            index,
            highest_short,
            highest,
            coxeter_number,
        })
    }

    pub fn cartan_type(&self) -> CartanType {
        self.cartan_type
    }

    pub fn rank(&self) -> usize {
        self.cartan_type.rank
    }

    pub fn cartan_matrix(&self) -> &[Vec<i64>] {
        &self.cartan
    }

    pub fn gram_matrix(&self) -> &[Vec<i64>] {
        &self.gram
    }

    pub fn roots(&self) -> &[Root] {
        &self.roots
    }

    pub fn root(&self, id: RootId) -> &Root {
        &self.roots[id.0]
    }

    pub fn num_roots(&self) -> usize {
        self.roots.len()
    }

    pub fn num_positive(&self) -> usize {
        self.num_positive
    }

    pub fn positive_ids(&self) -> impl Iterator<Item = RootId> {
        (0..self.num_positive).map(RootId)
    }

    pub fn all_ids(&self) -> impl Iterator<Item = RootId> {
        (0..self.roots.len()).map(RootId)
    }

    pub fn is_positive(&self, id: RootId) -> bool {
        id.0 < self.num_positive
    }

    pub fn negate(&self, id: RootId) -> RootId {
        if id.0 < self.num_positive {
            RootId(id.0 + self.num_positive)
        } else {
            RootId(id.0 - self.num_positive)
        }
    }

    /// Simple root `alpha_i`, with `i` in `1..=rank`.
    pub fn simple(&self, i: usize) -> RootId {
        let mut e = vec![0; self.rank()];
        e[i - 1] = 1;
        self.index[&e]
    }

    pub fn root_id(&self, coeffs: &[i64]) -> Option<RootId> {
        self.index.get(coeffs).copied()
    }

    /// The highest short root `alpha_0`.
    pub fn highest_short_root(&self) -> RootId {
        self.highest_short
    }

    pub fn highest_root(&self) -> RootId {
        self.highest
    }

    pub fn coxeter_number(&self) -> u32 {
        self.coxeter_number
    }

    pub fn bad_primes(&self) -> &'static [u32] {
        self.cartan_type.bad_primes()
    }

    pub fn rho(&self) -> Weight {
        Weight(vec![1; self.rank()])
    }

    /// `rho` computed as the half-sum of positive roots.
    pub fn rho_from_roots(&self) -> Weight {
        let mut sum = vec![0i64; self.rank()];
        for r in &self.roots[..self.num_positive] {
            for (s, w) in sum.iter_mut().zip(&r.weight) {
                *s += w;
            }
        }
        Weight(sum.into_iter().map(|c| c / 2).collect())
    }

    pub fn check_weight(&self, w: &Weight) -> Result<()> {
        if w.rank() != self.rank() {
            return Err(Error::DimensionMismatch {
                expected: self.rank(),
                got: w.rank(),
            });
        }
        Ok(())
    }

    /// `<lambda, alpha^vee>` for a root given by id.
    pub fn pair(&self, lambda: &[i64], alpha: RootId) -> i64 {
        self.roots[alpha.0]
            .coroot
            .iter()
            .zip(lambda)
            .map(|(c, l)| c * l)
            .sum()
    }

    /// `<lambda, alpha^vee>` where `alpha` is given by simple-root coefficients.
    pub fn pairing(&self, lambda: &Weight, alpha: &[i64]) -> Result<i64> {
        self.check_weight(lambda)?;
        let id = self
            .root_id(alpha)
            .ok_or_else(|| Error::NotARoot(alpha.to_vec()))?;
        Ok(self.pair(&lambda.0, id))
    }

    /// A root viewed as a weight.
    pub fn root_weight(&self, id: RootId) -> Weight {
        Weight(self.roots[id.0].weight.clone())
    }

    /// Root-lattice coefficients to fundamental-weight coordinates.
    pub fn root_coords_to_weight(&self, m: &[i64]) -> Weight {
        let n = self.rank();
        Weight(
            (0..n)
                .map(|j| (0..n).map(|i| m[i] * self.cartan[i][j]).sum())
                .collect(),
        )
    }

    /// Fundamental-weight coordinates to (rational) simple-root coefficients.
    pub fn weight_to_root_coords(&self, lambda: &Weight) -> Vec<Rational64> {
        let n = self.rank();
        (0..n)
            .map(|i| {
                (0..n).fold(Rational64::zero(), |acc, j| {
                    acc + self.cartan_inv[j][i] * Rational64::from_integer(lambda.0[j])
                })
            })
            .collect()
    }

    /// Integer simple-root coefficients of an element of the root lattice.
    pub fn root_lattice_coords(&self, lambda: &Weight) -> Result<Vec<i64>> {
        self.check_weight(lambda)?;
        self.weight_to_root_coords(lambda)
            .into_iter()
            .map(|r| {
                if r.is_integer() {
                    Ok(r.to_integer())
                } else {
                    Err(Error::NotInRootLattice(lambda.0.clone()))
                }
            })
            .collect()
    }

    /// Height of an element of the root lattice given in weight coordinates.
    pub fn height(&self, theta: &Weight) -> Result<i64> {
        Ok(self.root_lattice_coords(theta)?.iter().sum())
    }

    /// Exact inner product `<lambda, mu>` of two weights.
    pub fn inner(&self, lambda: &Weight, mu: &Weight) -> Rational64 {
        let r = self.weight_to_root_coords(lambda);
        r.iter()
            .enumerate()
            .fold(Rational64::zero(), |acc, (i, ri)| {
                let d_i = self.gram[i][i] / 2;
                acc + *ri * Rational64::from_integer(d_i * mu.0[i])
            })
    }

    /// The three expressions of the weighted height, in order:
    /// `sum r_alpha d_alpha`, `2<lambda,rho>/<alpha_0,alpha_0>`,
    /// `(1/2) sum_{alpha > 0} d_alpha <lambda, alpha^vee>`.
    pub fn weighted_height_forms(&self, lambda: &Weight) -> [Rational64; 3] {
        let r = self.weight_to_root_coords(lambda);
        let first = r
            .iter()
            .enumerate()
            .fold(Rational64::zero(), |acc, (i, ri)| {
                acc + *ri * Rational64::from_integer(self.gram[i][i] / 2)
            });
        let a0 = self.roots[self.highest_short.0].norm;
        let second = Rational64::from_integer(2) * self.inner(lambda, &self.rho())
            / Rational64::from_integer(a0);
        let sum: i64 = self
            .positive_ids()
            .map(|a| self.roots[a.0].d * self.pair(&lambda.0, a))
            .sum();
        let third = Rational64::new(sum, 2);
        [first, second, third]
    }

    /// Twice the weighted height, which is always an integer.
    pub fn weighted_height(&self, lambda: &Weight) -> Result<i64> {
        self.check_weight(lambda)?;
        let sum: i64 = self
            .positive_ids()
            .map(|a| self.roots[a.0].d * self.pair(&lambda.0, a))
            .sum();
        Ok(sum)
    }

    pub fn validate_ell(&self, ell: u32, mode: Mode) -> Result<()> {
        let mut violations = Vec::new();
        if ell == 0 {
            violations.push(LevelViolation::Zero);
        } else {
            if ell % 2 == 0 {
                violations.push(LevelViolation::Even);
            }
            if ell <= self.coxeter_number {
                violations.push(LevelViolation::NotAboveCoxeter {
                    coxeter_number: self.coxeter_number,
                });
            }
            for &p in self.bad_primes() {
                if ell % p == 0 {
                    violations.push(LevelViolation::SharesBadPrime { prime: p });
                }
            }
            if mode == Mode::Modular && !is_prime(ell) {
                violations.push(LevelViolation::NotPrime);
            }
        }
        if violations.is_empty() {
            Ok(())
        } else {
            Err(Error::InvalidLevel { ell, violations })
        }
    }

    /// Roots `alpha` with `<lambda + rho, alpha^vee> = 0 mod ell`.
    pub fn phi_lambda(&self, lambda: &Weight, level: Level) -> Result<RootSubset> {
        self.check_weight(lambda)?;
        Ok(self.phi_lambda_unchecked(lambda, level.ell()))
    }

    pub(crate) fn phi_lambda_unchecked(&self, lambda: &Weight, ell: u32) -> RootSubset {
        let shifted = lambda.add(&self.rho());
        let ell = ell as i64;
        RootSubset::new(
            self.all_ids()
                .filter(|&a| self.pair(&shifted.0, a).rem_euclid(ell) == 0)
                .collect(),
        )
    }

    /// Positive roots of the standard parabolic subsystem spanned by `J`
    /// (labels in `1..=rank`), together with their negatives.
    pub fn standard_subsystem(&self, j: &[usize]) -> RootSubset {
        let ids = self
            .all_ids()
            .filter(|&a| {
                self.roots[a.0]
                    .coeffs
                    .iter()
                    .enumerate()
                    .all(|(i, &c)| c == 0 || j.contains(&(i + 1)))
            })
            .collect();
        RootSubset::new(ids)
    }

    /// Sum of two roots, if it is a root.
    pub fn root_sum(&self, a: RootId, b: RootId) -> Option<RootId> {
        let s: Vec<i64> = self.roots[a.0]
            .coeffs
            .iter()
            .zip(&self.roots[b.0].coeffs)
            .map(|(x, y)| x + y)
            .collect();
        self.root_id(&s)
    }

    pub fn simple_reflection(&self, i: usize) -> WeylElement {
        WeylElement::reflection(self, self.simple(i))
    }

    pub fn longest_element(&self) -> WeylElement {
        self.longest_parabolic(&(1..=self.rank()).collect::<Vec<_>>())
    }

    /// Longest element of the parabolic subgroup generated by `J`.
    pub fn longest_parabolic(&self, j: &[usize]) -> WeylElement {
        let mut x = WeylElement::identity(self.rank());
        loop {
            let next = j
                .iter()
                .find(|&&i| self.is_positive(x.apply_root(self, self.simple(i))));
            match next {
                Some(&i) => x = x.mul(&self.simple_reflection(i)),
                None => return x,
            }
        }
    }

    /// Brute-force enumeration of the Weyl group, in breadth-first order.
    pub fn weyl_group_elements(&self) -> Vec<WeylElement> {
        let gens: Vec<WeylElement> = (1..=self.rank())
            .map(|i| self.simple_reflection(i))
            .collect();
        let id = WeylElement::identity(self.rank());
        let mut seen = HashSet::new();
        seen.insert(id.clone());
        let mut out = vec![id.clone()];
        let mut queue = VecDeque::from([id]);
        while let Some(x) = queue.pop_front() {
            for g in &gens {
                let y = x.mul(g);
                if seen.insert(y.clone()) {
                    out.push(y.clone());
                    queue.push_back(y);
                }
            }
        }
        out
    }
}

/// A set of roots, kept sorted by id.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct RootSubset {
    ids: Vec<RootId>,
}

impl RootSubset {
    pub fn new(mut ids: Vec<RootId>) -> RootSubset {
        ids.sort();
        ids.dedup();
        RootSubset { ids }
    }

    pub fn ids(&self) -> &[RootId] {
        &self.ids
    }

    pub fn len(&self) -> usize {
        self.ids.len()
    }

    pub fn is_empty(&self) -> bool {
        self.ids.is_empty()
    }

    pub fn contains(&self, id: RootId) -> bool {
        self.ids.binary_search(&id).is_ok()
    }

    pub fn positive(&self, rs: &RootSystem) -> Vec<RootId> {
        self.ids
            .iter()
            .copied()
            .filter(|&a| rs.is_positive(a))
            .collect()
    }

    pub fn num_positive(&self, rs: &RootSystem) -> usize {
        self.ids.iter().filter(|&&a| rs.is_positive(a)).count()
    }

    pub fn is_symmetric(&self, rs: &RootSystem) -> bool {
        self.ids.iter().all(|&a| self.contains(rs.negate(a)))
    }

    /// Whether `a + b` lies in the set whenever `a`, `b` do and `a + b` is a root.
    pub fn is_closed(&self, rs: &RootSystem) -> bool {
        self.ids.iter().all(|&a| {
            self.ids.iter().all(|&b| match rs.root_sum(a, b) {
                Some(c) => self.contains(c),
                None => true,
            })
        })
    }

    /// Positive members that are not the sum of two positive members.
    pub fn simple_system(&self, rs: &RootSystem) -> Vec<RootId> {
        let pos = self.positive(rs);
        pos.iter()
            .copied()
            .filter(|&c| {
                !pos.iter()
                    .any(|&a| pos.iter().any(|&b| rs.root_sum(a, b) == Some(c)))
            })
            .collect()
    }

    pub fn map(&self, rs: &RootSystem, x: &WeylElement) -> RootSubset {
        RootSubset::new(self.ids.iter().map(|&a| x.apply_root(rs, a)).collect())
    }

    pub fn coeffs(&self, rs: &RootSystem) -> Vec<Vec<i64>> {
        self.ids
            .iter()
            .map(|&a| rs.root(a).coeffs.clone())
            .collect()
    }
}

/// An element of the finite Weyl group, stored by its integer matrices on
/// fundamental-weight coordinates and on simple-root coefficients.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct WeylElement {
    rank: usize,
    on_weights: Vec<i64>,
    on_roots: Vec<i64>,
}

impl WeylElement {
    pub fn identity(rank: usize) -> WeylElement {
        let mut m = vec![0; rank * rank];
        for i in 0..rank {
            m[i * rank + i] = 1;
        }
        WeylElement {
            rank,
            on_weights: m.clone(),
            on_roots: m,
        }
    }

    /// Orthogonal reflection `s_beta`.
    pub fn reflection(rs: &RootSystem, beta: RootId) -> WeylElement {
        let n = rs.rank();
        let r = rs.root(beta);
        let mut on_weights = vec![0; n * n];
        let mut on_roots = vec![0; n * n];
        // s(v) = v - <v, beta^vee> beta
        for j in 0..n {
            for k in 0..n {
                let delta = i64::from(j == k);
                on_weights[j * n + k] = delta - r.weight[j] * r.coroot[k];
                // <alpha_k, beta^vee> = sum_i coroot_i * C[k][i]
                let ak: i64 = (0..n).map(|i| r.coroot[i] * rs.cartan[k][i]).sum();
                on_roots[j * n + k] = delta - r.coeffs[j] * ak;
            }
        }
        WeylElement {
            rank: n,
            on_weights,
            on_roots,
        }
    }

    /// Product of simple reflections `s_{w[0]} s_{w[1]} ...` (labels `1..=rank`).
    pub fn from_word(rs: &RootSystem, word: &[usize]) -> Result<WeylElement> {
        let mut x = WeylElement::identity(rs.rank());
        for &i in word {
            if i == 0 || i > rs.rank() {
                return Err(Error::InvalidWord(format!(
                    "simple reflection label {i} out of range"
                )));
            }
            x = x.mul(&rs.simple_reflection(i));
        }
        Ok(x)
    }

    pub fn is_identity(&self) -> bool {
        *self == WeylElement::identity(self.rank)
    }

    pub fn mul(&self, other: &WeylElement) -> WeylElement {
        let n = self.rank;
        let prod = |a: &[i64], b: &[i64]| {
            let mut c = vec![0; n * n];
            for i in 0..n {
                for k in 0..n {
                    let aik = a[i * n + k];
                    if aik != 0 {
                        for j in 0..n {
                            c[i * n + j] += aik * b[k * n + j];
                        }
                    }
                }
            }
            c
        };
        WeylElement {
            rank: n,
            on_weights: prod(&self.on_weights, &other.on_weights),
            on_roots: prod(&self.on_roots, &other.on_roots),
        }
    }

    pub fn apply_weight(&self, v: &[i64]) -> Vec<i64> {
        let n = self.rank;
        (0..n)
            .map(|i| (0..n).map(|k| self.on_weights[i * n + k] * v[k]).sum())
            .collect()
    }

    pub fn apply_root_coords(&self, m: &[i64]) -> Vec<i64> {
        let n = self.rank;
        (0..n)
            .map(|i| (0..n).map(|k| self.on_roots[i * n + k] * m[k]).sum())
            .collect()
    }

    pub fn apply_root(&self, rs: &RootSystem, a: RootId) -> RootId {
        let image = self.apply_root_coords(&rs.root(a).coeffs);
        rs.root_id(&image).expect("Weyl group permutes the roots")
    }

    /// Number of positive roots sent to negative roots.
    pub fn length(&self, rs: &RootSystem) -> u32 {
        rs.positive_ids()
            .filter(|&a| !rs.is_positive(self.apply_root(rs, a)))
            .count() as u32
    }

    /// Reduced word obtained by repeatedly stripping the lowest right descent.
    pub fn reduced_word(&self, rs: &RootSystem) -> Vec<usize> {
        let mut x = self.clone();
        let mut rev = Vec::new();
        while let Some(i) =
            (1..=rs.rank()).find(|&i| !rs.is_positive(x.apply_root(rs, rs.simple(i))))
        {
            rev.push(i);
            x = x.mul(&rs.simple_reflection(i));
        }
        rev.reverse();
        rev
    }

    pub fn inverse(&self, rs: &RootSystem) -> WeylElement {
        let mut word = self.reduced_word(rs);
        word.reverse();
        WeylElement::from_word(rs, &word).expect("labels come from a reduced word")
    }

    pub fn matrix_on_weights(&self) -> &[i64] {
        &self.on_weights
    }

    /// Whether the reflection preserves `<.,.>` on the sampled weight pair.
    pub fn preserves_inner(&self, rs: &RootSystem, a: &Weight, b: &Weight) -> bool {
        let xa = Weight(self.apply_weight(&a.0));
        let xb = Weight(self.apply_weight(&b.0));
        rs.inner(a, b) == rs.inner(&xa, &xb)
    }
}

fn make_root(coeffs: Vec<i64>, gram: &[Vec<i64>], cartan: &[Vec<i64>]) -> Root {
    let n = coeffs.len();
    let norm: i64 = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| coeffs[i] * gram[i][j] * coeffs[j])
                .sum::<i64>()
        })
        .sum();
    let coroot = (0..n).map(|i| coeffs[i] * gram[i][i] / norm).collect();
    let weight = (0..n)
        .map(|j| (0..n).map(|i| coeffs[i] * cartan[i][j]).sum())
        .collect();
    let height = coeffs.iter().sum();
    Root {
        coeffs,
        coroot,
        weight,
        norm,
        d: norm / 2,
        height,
    }
}

/// Positive roots via root strings, sorted by height then coefficients.
fn positive_roots(cartan: &[Vec<i64>]) -> Vec<Vec<i64>> {
    let n = cartan.len();
    let mut found: Vec<Vec<i64>> = (0..n)
        .map(|i| {
            let mut e = vec![0; n];
            e[i] = 1;
            e
        })
        .collect();
    let mut set: HashSet<Vec<i64>> = found.iter().cloned().collect();
    let mut next = 0;
    while next < found.len() {
        let beta = found[next].clone();
        next += 1;
        for i in 0..n {
            let is_simple_i = beta
                .iter()
                .enumerate()
                .all(|(k, &c)| c == i64::from(k == i));
            if is_simple_i {
                continue;
            }
            let mut q = 0;
            loop {
                let mut v = beta.clone();
                v[i] -= q + 1;
                if set.contains(&v) {
                    q += 1;
                } else {
                    break;
                }
            }
            let pairing: i64 = (0..n).map(|k| beta[k] * cartan[k][i]).sum();
            if q - pairing > 0 {
                let mut v = beta.clone();
                v[i] += 1;
                if set.insert(v.clone()) {
                    found.push(v);
                }
            }
        }
    }
    found.sort_by(|a, b| {
        let ha: i64 = a.iter().sum();
        let hb: i64 = b.iter().sum();
        ha.cmp(&hb).then_with(|| b.cmp(a))
    });
    found
}

fn invert(m: &[Vec<i64>]) -> Vec<Vec<Rational64>> {
    let n = m.len();
    let mut a: Vec<Vec<Rational64>> = m
        .iter()
        .map(|row| row.iter().map(|&x| Rational64::from_integer(x)).collect())
        .collect();
    let mut inv: Vec<Vec<Rational64>> = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| {
                    if i == j {
                        Rational64::one()
                    } else {
                        Rational64::zero()
                    }
                })
                .collect()
        })
        .collect();
    for col in 0..n {
        let pivot = (col..n)
            .find(|&r| !a[r][col].is_zero())
            .expect("Cartan matrix is invertible");
        a.swap(col, pivot);
        inv.swap(col, pivot);
        let p = a[col][col];
        for j in 0..n {
            a[col][j] /= p;
            inv[col][j] /= p;
        }
        for r in 0..n {
            if r != col && !a[r][col].is_zero() {
                let f = a[r][col];
                for j in 0..n {
                    let (x, y) = (a[col][j], inv[col][j]);
                    a[r][j] -= f * x;
                    inv[r][j] -= f * y;
                }
            }
        }
    }
    inv
}

/// Rational null space basis of the rows, scaled to integer vectors.
pub(crate) fn integer_null_space(rows: &[Vec<i64>], n: usize) -> Vec<Vec<i64>> {
    let mut a: Vec<Vec<Rational64>> = rows
        .iter()
        .map(|r| r.iter().map(|&x| Rational64::from_integer(x)).collect())
        .collect();
    let mut pivots = Vec::new();
    let mut row = 0;
    for col in 0..n {
        if row >= a.len() {
            break;
        }
        let Some(p) = (row..a.len()).find(|&r| !a[r][col].is_zero()) else {
            continue;
        };
        a.swap(row, p);
        let pv = a[row][col];
        for j in 0..n {
            a[row][j] /= pv;
        }
        for r in 0..a.len() {
            if r != row && !a[r][col].is_zero() {
                let f = a[r][col];
                for j in 0..n {
                    let x = a[row][j];
                    a[r][j] -= f * x;
                }
            }
        }
        pivots.push(col);
        row += 1;
    }
    let free: Vec<usize> = (0..n).filter(|c| !pivots.contains(c)).collect();
    free.iter()
        .map(|&fc| {
            let mut v = vec![Rational64::zero(); n];
            v[fc] = Rational64::one();
            for (r, &pc) in pivots.iter().enumerate() {
                v[pc] = -a[r][fc];
            }
            let lcm = v
                .iter()
                .fold(1i64, |acc, x| num_integer::lcm(acc, *x.denom()));
            v.iter()
                .map(|x| (x * Rational64::from_integer(lcm)).to_integer())
                .collect()
        })
        .collect()
}
