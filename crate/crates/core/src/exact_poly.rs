//! Exact Laurent polynomials over `Z`, cyclotomic polynomials, and the ring
//! `Z[t]/(Psi_l(t))` in which values at a primitive `l`-th root of unity live.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::{Arc, Mutex, OnceLock};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Finite-support map exponent -> nonzero integer coefficient.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
pub struct LaurentPoly {
    terms: BTreeMap<i64, BigInt>,
}

impl LaurentPoly {
    pub fn zero() -> LaurentPoly {
        LaurentPoly::default()
    }

    pub fn one() -> LaurentPoly {
        LaurentPoly::monomial(1, 0)
    }

    pub fn monomial(c: impl Into<BigInt>, exp: i64) -> LaurentPoly {
        let mut p = LaurentPoly::zero();
        p.add_term(exp, c.into());
        p
    }

    pub fn t() -> LaurentPoly {
        LaurentPoly::monomial(1, 1)
    }

    pub fn from_terms<I, C>(terms: I) -> LaurentPoly
    where
        I: IntoIterator<Item = (i64, C)>,
        C: Into<BigInt>,
    {
        let mut p = LaurentPoly::zero();
        for (e, c) in terms {
            p.add_term(e, c.into());
        }
        p
    }

    /// `t^k - t^-k`.
    pub fn binomial_difference(k: i64) -> LaurentPoly {
        LaurentPoly::from_terms([(k, 1), (-k, -1)])
    }

    fn add_term(&mut self, exp: i64, c: BigInt) {
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry(exp).or_insert_with(BigInt::zero);
        *entry += c;
        if entry.is_zero() {
            self.terms.remove(&exp);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (i64, &BigInt)> {
        self.terms.iter().map(|(e, c)| (*e, c))
    }

    pub fn coeff(&self, exp: i64) -> BigInt {
        self.terms.get(&exp).cloned().unwrap_or_default()
    }

    pub fn min_exp(&self) -> Option<i64> {
        self.terms.keys().next().copied()
    }

    pub fn max_exp(&self) -> Option<i64> {
        self.terms.keys().next_back().copied()
    }

    pub fn scale(&self, k: &BigInt) -> LaurentPoly {
        if k.is_zero() {
            return LaurentPoly::zero();
        }
        LaurentPoly {
            terms: self.terms.iter().map(|(e, c)| (*e, c * k)).collect(),
        }
    }

    /// Multiply by `t^k`.
    pub fn shift(&self, k: i64) -> LaurentPoly {
        LaurentPoly {
            terms: self.terms.iter().map(|(e, c)| (e + k, c.clone())).collect(),
        }
    }

    /// Value at `t = 1` (sum of coefficients).
    pub fn eval_at_one(&self) -> BigInt {
        self.terms.values().sum()
    }

    /// Formal `s`-th derivative.
    pub fn derivative(&self, s: u32) -> LaurentPoly {
        let mut out = LaurentPoly::zero();
        for (&e, c) in &self.terms {
            let mut factor = BigInt::one();
            for i in 0..s as i64 {
                factor *= e - i;
            }
            out.add_term(e - s as i64, c * factor);
        }
        out
    }

    /// Split as `t^m * g(t)` with `g` a polynomial, `g(0) != 0`; dense coefficients of `g`.
    fn normalize(&self) -> (i64, Vec<BigInt>) {
        let lo = self.min_exp().unwrap_or(0);
        let hi = self.max_exp().unwrap_or(0);
        let mut dense = vec![BigInt::zero(); (hi - lo + 1) as usize];
        for (&e, c) in &self.terms {
            dense[(e - lo) as usize] = c.clone();
        }
        (lo, dense)
    }

    fn from_dense(shift: i64, dense: &[BigInt]) -> LaurentPoly {
        LaurentPoly::from_terms(
            dense
                .iter()
                .enumerate()
                .map(|(i, c)| (i as i64 + shift, c.clone())),
        )
    }

    /// `Some(q)` with `self = q * divisor` when the division is exact in
    /// `Z[t, t^-1]`, `None` otherwise.
    pub fn exact_div(&self, divisor: &LaurentPoly) -> Result<Option<LaurentPoly>> {
        if divisor.is_zero() {
            return Err(Error::DivisionByZero);
        }
        if self.is_zero() {
            return Ok(Some(LaurentPoly::zero()));
        }
        let (fs, f) = self.normalize();
        let (gs, g) = divisor.normalize();
        Ok(poly_exact_div(&f, &g).map(|q| LaurentPoly::from_dense(fs - gs, &q)))
    }

    /// Image under `t -> zeta`, a primitive `ell`-th root of unity.
    pub fn eval_at_zeta(&self, ell: u32) -> CyclotomicInt {
        let mut folded = vec![BigInt::zero(); ell as usize];
        for (&e, c) in &self.terms {
            folded[e.rem_euclid(ell as i64) as usize] += c;
        }
        CyclotomicInt::from_cyclic(ell, folded)
    }

    /// Largest `m` such that `Psi_ell(t)^m` divides `self` in `Z[t, t^-1]`.
    pub fn psi_multiplicity(&self, ell: u32) -> Result<u32> {
        if self.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        let psi = cyclotomic(ell);
        let (_, mut g) = self.normalize();
        let mut m = 0;
        while let Some(q) = poly_exact_div(&g, &psi) {
            g = q;
            m += 1;
        }
        Ok(m)
    }

    /// Least `s` with a nonzero value of the `s`-th derivative at `zeta`.
    pub fn zeta_vanishing_order(&self, ell: u32) -> Result<u32> {
        if self.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        let mut s = 0;
        let mut d = self.clone();
        while d.eval_at_zeta(ell).is_zero() {
            s += 1;
            d = d.derivative(1);
        }
        Ok(s)
    }
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (&e, c) in self.terms.iter().rev() {
            let neg = c.is_negative();
            let abs = c.abs();
            if first {
                if neg {
                    f.write_str("-")?;
                }
            } else {
                f.write_str(if neg { " - " } else { " + " })?;
            }
            first = false;
            let unit = abs.is_one();
            match e {
                0 => write!(f, "{abs}")?,
                1 if unit => f.write_str("t")?,
                1 => write!(f, "{abs}t")?,
                _ if unit => write!(f, "t^{e}")?,
                _ => write!(f, "{abs}t^{e}")?,
            }
        }
        Ok(())
    }
}

impl Add for &LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        for (&e, c) in &rhs.terms {
            out.add_term(e, c.clone());
        }
        out
    }
}

impl Sub for &LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        for (&e, c) in &rhs.terms {
            out.add_term(e, -c);
        }
        out
    }
}

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        LaurentPoly {
            terms: self.terms.iter().map(|(e, c)| (*e, -c)).collect(),
        }
    }
}

impl Mul for &LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = LaurentPoly::zero();
        for (&e1, c1) in &self.terms {
            for (&e2, c2) in &rhs.terms {
                out.add_term(e1 + e2, c1 * c2);
            }
        }
        out
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr for LaurentPoly {
            type Output = LaurentPoly;
            fn $m(self, rhs: LaurentPoly) -> LaurentPoly {
                (&self).$m(&rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

/// Exact division of dense polynomials (constant term first) over `Z`.
fn poly_exact_div(f: &[BigInt], g: &[BigInt]) -> Option<Vec<BigInt>> {
    let f = trim(f);
    let g = trim(g);
    assert!(!g.is_empty(), "divisor must be nonzero");
    if f.is_empty() {
        return Some(Vec::new());
    }
    if f.len() < g.len() {
        return None;
    }
    let mut rem = f.to_vec();
    let lead = g.last().unwrap();
    let qlen = f.len() - g.len() + 1;
    let mut q = vec![BigInt::zero(); qlen];
    for i in (0..qlen).rev() {
        let top = &rem[i + g.len() - 1];
        if top.is_zero() {
            continue;
        }
        let (c, r) = top.div_rem(lead);
        if !r.is_zero() {
            return None;
        }
        for (j, gj) in g.iter().enumerate() {
            rem[i + j] -= &c * gj;
        }
        q[i] = c;
    }
    if rem.iter().all(|c| c.is_zero()) {
        Some(q)
    } else {
        None
    }
}

fn trim(p: &[BigInt]) -> &[BigInt] {
    let end = p.iter().rposition(|c| !c.is_zero()).map_or(0, |i| i + 1);
    &p[..end]
}

fn cyclotomic_cache() -> &'static Mutex<HashMap<u32, Arc<Vec<BigInt>>>> {
    static CACHE: OnceLock<Mutex<HashMap<u32, Arc<Vec<BigInt>>>>> = OnceLock::new();
    CACHE.get_or_init(|| Mutex::new(HashMap::new()))
}

fn cyclotomic_shared(ell: u32) -> Arc<Vec<BigInt>> {
    assert!(ell >= 1, "cyclotomic index must be positive");
    if let Some(p) = cyclotomic_cache().lock().unwrap().get(&ell) {
        return p.clone();
    }
    let mut num = vec![BigInt::zero(); ell as usize + 1];
    num[0] = BigInt::from(-1);
    num[ell as usize] = BigInt::one();
    for d in (1..ell).filter(|d| ell % d == 0) {
        num = poly_exact_div(&num, &cyclotomic_shared(d)).expect("Psi_d divides t^l - 1");
    }
    let p = Arc::new(num);
    cyclotomic_cache().lock().unwrap().insert(ell, p.clone());
    p
}

/// Dense coefficients (constant first) of the `ell`-th cyclotomic polynomial,
/// by dividing `t^ell - 1` by `Psi_d` for every proper divisor `d`.
pub fn cyclotomic(ell: u32) -> Vec<BigInt> {
    cyclotomic_shared(ell).as_ref().clone()
}

pub fn cyclotomic_poly(ell: u32) -> LaurentPoly {
    LaurentPoly::from_dense(0, &cyclotomic(ell))
}

/// A residue class in `Z[t]/(Psi_ell(t))`, stored reduced (degree below `phi(ell)`).
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct CyclotomicInt {
    ell: u32,
    coeffs: Vec<BigInt>,
}

impl CyclotomicInt {
    pub fn zero(ell: u32) -> CyclotomicInt {
        let deg = cyclotomic_shared(ell).len() - 1;
        CyclotomicInt {
            ell,
            coeffs: vec![BigInt::zero(); deg],
        }
    }

    pub fn from_integer(ell: u32, n: impl Into<BigInt>) -> CyclotomicInt {
        let mut v = vec![BigInt::zero(); ell as usize];
        v[0] = n.into();
        CyclotomicInt::from_cyclic(ell, v)
    }

    /// `zeta^k` for any integer `k`.
    pub fn zeta_pow(ell: u32, k: i64) -> CyclotomicInt {
        LaurentPoly::monomial(1, k).eval_at_zeta(ell)
    }

    /// Reduce a residue modulo `t^ell - 1` (length `ell`, constant first).
    fn from_cyclic(ell: u32, mut v: Vec<BigInt>) -> CyclotomicInt {
        let psi = cyclotomic_shared(ell);
        let deg = psi.len() - 1;
        for i in (deg..v.len()).rev() {
            if v[i].is_zero() {
                continue;
            }
            let c = std::mem::take(&mut v[i]);
            for (j, pj) in psi.iter().enumerate().take(deg) {
                v[i - deg + j] -= &c * pj;
            }
        }
        v.truncate(deg);
        v.resize(deg, BigInt::zero());
        CyclotomicInt { ell, coeffs: v }
    }

    pub fn ell(&self) -> u32 {
        self.ell
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero())
    }

    pub fn is_one(&self) -> bool {
        *self == CyclotomicInt::from_integer(self.ell, 1)
    }

    pub fn scale(&self, k: &BigInt) -> CyclotomicInt {
        CyclotomicInt {
            ell: self.ell,
            coeffs: self.coeffs.iter().map(|c| c * k).collect(),
        }
    }

    pub fn pow(&self, mut e: u64) -> CyclotomicInt {
        let mut base = self.clone();
        let mut acc = CyclotomicInt::from_integer(self.ell, 1);
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            base = &base * &base;
            e >>= 1;
        }
        acc
    }

    /// The reduced representative as a polynomial in `zeta`.
    pub fn to_poly(&self) -> LaurentPoly {
        LaurentPoly::from_dense(0, &self.coeffs)
    }
}

impl fmt::Display for CyclotomicInt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = self.to_poly().to_string().replace('t', "z");
        f.write_str(&s)
    }
}

impl Add for &CyclotomicInt {
    type Output = CyclotomicInt;
    fn add(self, rhs: &CyclotomicInt) -> CyclotomicInt {
        assert_eq!(self.ell, rhs.ell, "cyclotomic levels differ");
        CyclotomicInt {
            ell: self.ell,
            coeffs: self
                .coeffs
                .iter()
                .zip(&rhs.coeffs)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }
}

impl Sub for &CyclotomicInt {
    type Output = CyclotomicInt;
    fn sub(self, rhs: &CyclotomicInt) -> CyclotomicInt {
        assert_eq!(self.ell, rhs.ell, "cyclotomic levels differ");
        CyclotomicInt {
            ell: self.ell,
            coeffs: self
                .coeffs
                .iter()
                .zip(&rhs.coeffs)
                .map(|(a, b)| a - b)
                .collect(),
        }
    }
}

impl Neg for &CyclotomicInt {
    type Output = CyclotomicInt;
    fn neg(self) -> CyclotomicInt {
        CyclotomicInt {
            ell: self.ell,
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl Mul for &CyclotomicInt {
    type Output = CyclotomicInt;
    fn mul(self, rhs: &CyclotomicInt) -> CyclotomicInt {
        assert_eq!(self.ell, rhs.ell, "cyclotomic levels differ");
        let ell = self.ell as usize;
        let mut v = vec![BigInt::zero(); ell];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                v[(i + j) % ell] += a * b;
            }
        }
        CyclotomicInt::from_cyclic(self.ell, v)
    }
}
