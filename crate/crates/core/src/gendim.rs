//! Generic dimensions: `D_lambda(t)`, Weyl and irreducible characters as
//! signed combinations of Weyl modules, and the exact evaluations at `zeta`.

use std::fmt;

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use crate::affine_weyl::{reduce_to_fundamental, AffineWeylElement, AlcoveReduction};
use crate::error::{Error, Result};
use crate::exact_poly::{CyclotomicInt, LaurentPoly};
use crate::kl::KlTable;
use crate::root_system::{Level, RootSystem, Weight};

/// `D_lambda(t) = prod_{alpha > 0} (t^{d_a <lambda+rho, a^v>} - t^{-d_a <lambda+rho, a^v>})`.
pub fn d_poly(rs: &RootSystem, lambda: &Weight) -> Result<LaurentPoly> {
    rs.check_weight(lambda)?;
    let shifted = lambda.add(&rs.rho());
    let mut p = LaurentPoly::one();
    for a in rs.positive_ids() {
        let k = rs.root(a).d * rs.pair(&shifted.0, a);
        p = &p * &LaurentPoly::binomial_difference(k);
    }
    Ok(p)
}

/// `D_lambda / D_0`, the generic dimension of a module with Weyl character `chi(lambda)`.
pub fn weyl_generic_dim(rs: &RootSystem, lambda: &Weight) -> Result<LaurentPoly> {
    rs.check_weight(lambda)?;
    if !lambda.is_dominant() {
        return Err(Error::NotDominant(lambda.0.clone()));
    }
    let num = d_poly(rs, lambda)?;
    let den = d_poly(rs, &Weight::zero(rs.rank()))?;
    num.exact_div(&den)?.ok_or_else(|| {
        Error::InvariantViolation(format!("D_0 does not divide D_lambda for {lambda}"))
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CharacterTerm {
    pub sign: i8,
    pub multiplicity: u64,
    pub weight: Weight,
}

/// `sum sign * multiplicity * ch Delta(weight)` over dominant weights.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CharacterCombination {
    pub ell: u32,
    pub terms: Vec<CharacterTerm>,
}

impl CharacterCombination {
    pub fn generic_dim(&self, rs: &RootSystem) -> Result<LaurentPoly> {
        let mut total = LaurentPoly::zero();
        for t in &self.terms {
            let c = BigInt::from(t.sign) * BigInt::from(t.multiplicity);
            total = &total + &weyl_generic_dim(rs, &t.weight)?.scale(&c);
        }
        Ok(total)
    }

    /// `sum sign * multiplicity * D_weight(t)`.
    pub fn d_combination(&self, rs: &RootSystem) -> Result<LaurentPoly> {
        let mut total = LaurentPoly::zero();
        for t in &self.terms {
            let c = BigInt::from(t.sign) * BigInt::from(t.multiplicity);
            total = &total + &d_poly(rs, &t.weight)?.scale(&c);
        }
        Ok(total)
    }
}

impl fmt::Display for CharacterCombination {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, t) in self.terms.iter().enumerate() {
            let sign = if t.sign < 0 { "-" } else { "+" };
            if i == 0 {
                if t.sign < 0 {
                    f.write_str("-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            if t.multiplicity != 1 {
                write!(f, "{}", t.multiplicity)?;
            }
            write!(f, "D{}", t.weight)?;
        }
        Ok(())
    }
}

fn check_table(table: &KlTable, level: Level) -> Result<()> {
    if table.level() != level.ell() {
        return Err(Error::LevelMismatch {
            left: table.level(),
            right: level.ell(),
        });
    }
    Ok(())
}

/// The character of the irreducible of highest weight `lambda` in terms of
/// Weyl characters, from parabolic Kazhdan-Lusztig polynomials at `q = 1`.
pub fn irreducible_character(
    rs: &RootSystem,
    level: Level,
    table: &mut KlTable,
    lambda: &Weight,
) -> Result<CharacterCombination> {
    check_table(table, level)?;
    let red = reduce_to_fundamental(rs, lambda, level)?;
    character_from_reduction(rs, table, &red)
}

pub(crate) fn character_from_reduction(
    rs: &RootSystem,
    table: &mut KlTable,
    red: &AlcoveReduction,
) -> Result<CharacterCombination> {
    let w = table.intern(&red.w)?;
    let lw = table.group().length(w);
    let mut ys = table.lower_interval(w)?;
    ys.reverse();
    let mut terms = Vec::new();
    for y in ys {
        let minimal = !red
            .stabilizer
            .iter()
            .any(|&g| table.group_mut().is_right_descent(y, g));
        if !minimal {
            continue;
        }
        let mu = table.group().element(y).dot(rs, &red.lambda_minus);
        if !mu.is_dominant() {
            continue;
        }
        let p = table.parabolic_kl_ids(&red.stabilizer, y, w)?;
        let m = p.eval_at_one();
        if m == 0 {
            continue;
        }
        let sign = if (lw - table.group().length(y)) % 2 == 0 {
            1
        } else {
            -1
        };
        terms.push(CharacterTerm {
            sign,
            multiplicity: m as u64,
            weight: mu,
        });
    }
    Ok(CharacterCombination {
        ell: table.level(),
        terms,
    })
}

pub fn irreducible_generic_dim(
    rs: &RootSystem,
    level: Level,
    table: &mut KlTable,
    lambda: &Weight,
) -> Result<LaurentPoly> {
    irreducible_character(rs, level, table, lambda)?.generic_dim(rs)
}

fn positive_count(rs: &RootSystem, lambda: &Weight, level: Level) -> Result<usize> {
    Ok(rs.phi_lambda(lambda, level)?.num_positive(rs))
}

/// `E_{lambda^-}(zeta) = prod_{alpha in Phi^+ \ Phi^+_{lambda^-}} (zeta^k - zeta^-k)`,
/// `k = d_a <lambda^- + rho, a^v>`.
pub fn e_factor(rs: &RootSystem, level: Level, lambda_minus: &Weight) -> Result<CyclotomicInt> {
    let phi = rs.phi_lambda(lambda_minus, level)?;
    let shifted = lambda_minus.add(&rs.rho());
    let ell = level.ell();
    let mut acc = CyclotomicInt::from_integer(ell, 1);
    for a in rs.positive_ids().filter(|a| !phi.contains(*a)) {
        let k = rs.root(a).d * rs.pair(&shifted.0, a);
        acc = &acc * &LaurentPoly::binomial_difference(k).eval_at_zeta(ell);
    }
    Ok(acc)
}

/// Closed form of `D_lambda^{(s)}(zeta)` with `s = |Phi^+_lambda|`.
pub fn derivative_closed_form(
    rs: &RootSystem,
    level: Level,
    lambda: &Weight,
) -> Result<CyclotomicInt> {
    let red = reduce_to_fundamental(rs, lambda, level)?;
    rhs_from_reduction(rs, level, &red)
}

fn rhs_from_reduction(
    rs: &RootSystem,
    level: Level,
    red: &AlcoveReduction,
) -> Result<CyclotomicInt> {
    let ell = level.ell();
    let phi = rs.phi_lambda(&red.lambda, level)?;
    let shifted = red.lambda.add(&rs.rho());
    let positive = phi.positive(rs);
    let s = positive.len();
    let mut scalar: BigInt = (1..=s as u64).map(BigInt::from).product();
    for &a in &positive {
        scalar *= 2 * rs.root(a).d * rs.pair(&shifted.0, a);
    }
    let sign_exp = red.w.length(rs) as i64 - red.a_count as i64;
    if sign_exp.rem_euclid(2) == 1 {
        scalar = -scalar;
    }
    let e = e_factor(rs, level, &red.lambda_minus)?;
    let rhs = &CyclotomicInt::zeta_pow(ell, -(s as i64)).scale(&scalar) * &e;
    if rhs.is_zero() {
        return Err(Error::InvariantViolation(format!(
            "closed form vanishes at {}",
            red.lambda
        )));
    }
    Ok(rhs)
}

/// Both sides of the differentiated generic dimension identity at `zeta`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DerivativeCertificate {
    pub lambda: Weight,
    pub ell: u32,
    pub lambda_minus: Weight,
    pub w_length: u32,
    pub a_count: usize,
    pub s: usize,
    pub lhs: CyclotomicInt,
    pub rhs: CyclotomicInt,
    pub equal: bool,
    pub lhs_nonzero: bool,
}

impl DerivativeCertificate {
    pub fn passed(&self) -> bool {
        self.equal && self.lhs_nonzero
    }
}

/// Evaluate both sides; a mismatch or a vanishing left side is an error.
pub fn verify_derivative_identity(
    rs: &RootSystem,
    level: Level,
    lambda: &Weight,
) -> Result<DerivativeCertificate> {
    let cert = derivative_certificate(rs, level, lambda)?;
    if !cert.passed() {
        return Err(Error::VerificationFailure {
            what: format!(
                "D^(s)_lambda(zeta) at lambda = {lambda}, ell = {}",
                level.ell()
            ),
            lhs: cert.lhs.to_string(),
            rhs: cert.rhs.to_string(),
        });
    }
    Ok(cert)
}

/// Like [`verify_derivative_identity`] but returns the certificate whatever the verdict.
pub fn derivative_certificate(
    rs: &RootSystem,
    level: Level,
    lambda: &Weight,
) -> Result<DerivativeCertificate> {
    let red = reduce_to_fundamental(rs, lambda, level)?;
    let s = positive_count(rs, lambda, level)?;
    let lhs = d_poly(rs, lambda)?
        .derivative(s as u32)
        .eval_at_zeta(level.ell());
    let rhs = match rhs_from_reduction(rs, level, &red) {
        Ok(r) => r,
        Err(Error::InvariantViolation(_)) => CyclotomicInt::zero(level.ell()),
        Err(e) => return Err(e),
    };
    Ok(DerivativeCertificate {
        lambda: lambda.clone(),
        ell: level.ell(),
        w_length: red.w.length(rs),
        a_count: red.a_count,
        lambda_minus: red.lambda_minus,
        s,
        equal: lhs == rhs,
        lhs_nonzero: !lhs.is_zero(),
        lhs,
        rhs,
    })
}

/// Cyclotomic multiplicity of `f = D_0 * dim_t L(lambda)` and the dimension
/// bounds it implies.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ComplexityReport {
    pub lambda: Weight,
    pub ell: u32,
    pub character: CharacterCombination,
    /// `Psi_l`-multiplicity of `f`.
    pub n: u32,
    /// `|Phi^+_{lambda^-}|`.
    pub s: usize,
    /// `f^{(s)}(zeta)`.
    pub f_derivative_at_zeta: CyclotomicInt,
    /// `|Phi^+| - s`.
    pub borel_bound: usize,
    /// `|Phi| - |Phi_{lambda^-}|`.
    pub full_bound: usize,
}

pub fn multiplicity_and_complexity(
    rs: &RootSystem,
    level: Level,
    table: &mut KlTable,
    lambda: &Weight,
) -> Result<ComplexityReport> {
    check_table(table, level)?;
    let red = reduce_to_fundamental(rs, lambda, level)?;
    let character = character_from_reduction(rs, table, &red)?;
    let f = character.d_combination(rs)?;
    let n = f.psi_multiplicity(level.ell())?;
    let phi_minus = rs.phi_lambda(&red.lambda_minus, level)?;
    let s = phi_minus.num_positive(rs);
    let f_derivative_at_zeta = f.derivative(s as u32).eval_at_zeta(level.ell());
    if n as usize != s {
        return Err(Error::InvariantViolation(format!(
            "Psi_{}-multiplicity of f is {n}, expected {s} at lambda = {lambda}",
            level.ell()
        )));
    }
    if f_derivative_at_zeta.is_zero() {
        return Err(Error::InvariantViolation(format!(
            "f^({s})(zeta) vanishes at lambda = {lambda}"
        )));
    }
    Ok(ComplexityReport {
        lambda: lambda.clone(),
        ell: level.ell(),
        character,
        n,
        s,
        f_derivative_at_zeta,
        borel_bound: rs.num_positive() - s,
        full_bound: rs.num_roots() - phi_minus.len(),
    })
}

/// Whether `|Phi^+_{y . lambda^-}|` equals `|Phi^+_{lambda^-}|` for every sampled `y`.
pub fn s_invariance_check(
    rs: &RootSystem,
    level: Level,
    lambda_minus: &Weight,
    sample: &[AffineWeylElement],
) -> Result<bool> {
    let s = positive_count(rs, lambda_minus, level)?;
    for y in sample {
        if y.level() != level.ell() {
            return Err(Error::LevelMismatch {
                left: y.level(),
                right: level.ell(),
            });
        }
        if positive_count(rs, &y.dot(rs, lambda_minus), level)? != s {
            return Ok(false);
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::affine_weyl::enumerate_dominant_coset;
    use crate::root_system::Family;
    use num_rational::Ratio;
    use num_traits::{One, Zero};

    fn w(v: &[i64]) -> Weight {
        Weight(v.to_vec())
    }

    fn lp(terms: &[(i64, i64)]) -> LaurentPoly {
        LaurentPoly::from_terms(terms.iter().copied())
    }

    /// Weyl's product formula, computed with rationals.
    fn weyl_dim_oracle(rs: &RootSystem, lambda: &Weight) -> BigInt {
        let rho = rs.rho();
        let shifted = lambda.add(&rho);
        let mut r = Ratio::from_integer(BigInt::one());
        for a in rs.positive_ids() {
            r *= Ratio::new(
                BigInt::from(rs.pair(&shifted.0, a)),
                BigInt::from(rs.pair(&rho.0, a)),
            );
        }
        assert!(r.is_integer());
        r.to_integer()
    }

    fn dominant_box(rank: usize, bound: i64) -> Vec<Weight> {
        let mut out = vec![Vec::new()];
        for _ in 0..rank {
            out = out
                .into_iter()
                .flat_map(|v: Vec<i64>| (0..=bound).map(move |c| [v.clone(), vec![c]].concat()))
                .collect();
        }
        out.into_iter().map(Weight).collect()
    }

    #[test]
    fn d_poly_examples() {
        let a1 = RootSystem::build(Family::A, 1).unwrap();
        assert_eq!(d_poly(&a1, &w(&[0])).unwrap(), lp(&[(1, 1), (-1, -1)]));
        assert_eq!(d_poly(&a1, &w(&[4])).unwrap(), lp(&[(5, 1), (-5, -1)]));
        let a2 = RootSystem::build(Family::A, 2).unwrap();
        let b1 = LaurentPoly::binomial_difference(1);
        let expected = &(&b1 * &b1) * &LaurentPoly::binomial_difference(2);
        assert_eq!(d_poly(&a2, &w(&[0, 0])).unwrap(), expected);
    }

    #[test]
    fn weyl_generic_dim_examples() {
        let a1 = RootSystem::build(Family::A, 1).unwrap();
        for m in 0..8i64 {
            let expected = LaurentPoly::from_terms((0..=m).map(|k| (m - 2 * k, 1)));
            let g = weyl_generic_dim(&a1, &w(&[m])).unwrap();
            assert_eq!(g, expected);
            assert_eq!(g.eval_at_one(), BigInt::from(m + 1));
        }
        let a2 = RootSystem::build(Family::A, 2).unwrap();
        assert_eq!(
            weyl_generic_dim(&a2, &w(&[0, 0])).unwrap(),
            LaurentPoly::one()
        );
        assert_eq!(
            weyl_generic_dim(&a2, &w(&[1, 1])).unwrap().eval_at_one(),
            BigInt::from(8)
        );
        assert_eq!(
            weyl_generic_dim(&a2, &w(&[-1, 1])),
            Err(Error::NotDominant(vec![-1, 1]))
        );
    }

    #[test]
    fn weyl_generic_dim_matches_product_formula() {
        for (family, rank, bound) in [
            (Family::A, 2, 4),
            (Family::B, 2, 4),
            (Family::G, 2, 3),
            (Family::C, 3, 2),
            (Family::A, 3, 2),
        ] {
            let rs = RootSystem::build(family, rank).unwrap();
            for lambda in dominant_box(rank, bound) {
                let g = weyl_generic_dim(&rs, &lambda).unwrap();
                assert_eq!(
                    g.eval_at_one(),
                    weyl_dim_oracle(&rs, &lambda),
                    "{family:?}{rank} {lambda}"
                );
            }
        }
    }

    #[test]
    fn irreducible_character_examples_a1() {
        let rs = RootSystem::build(Family::A, 1).unwrap();
        let level = Level::quantum(&rs, 5).unwrap();
        let mut table = KlTable::new(&rs, 5);
        let ch = irreducible_character(&rs, level, &mut table, &w(&[4])).unwrap();
        assert_eq!(
            ch.terms,
            vec![CharacterTerm {
                sign: 1,
                multiplicity: 1,
                weight: w(&[4])
            }]
        );
        let ch = irreducible_character(&rs, level, &mut table, &w(&[6])).unwrap();
        assert_eq!(
            ch.terms,
            vec![
                CharacterTerm {
                    sign: 1,
                    multiplicity: 1,
                    weight: w(&[6])
                },
                CharacterTerm {
                    sign: -1,
                    multiplicity: 1,
                    weight: w(&[2])
                },
            ]
        );
        assert_eq!(ch.to_string(), "D(6) - D(2)");
        let ch = irreducible_character(&rs, level, &mut table, &w(&[2])).unwrap();
        assert_eq!(ch.terms.len(), 1);

        let g = irreducible_generic_dim(&rs, level, &mut table, &w(&[4])).unwrap();
        assert_eq!(
            g,
            LaurentPoly::binomial_difference(5)
                .exact_div(&LaurentPoly::binomial_difference(1))
                .unwrap()
                .unwrap()
        );
        assert_eq!(g.eval_at_one(), BigInt::from(5));
        let g = irreducible_generic_dim(&rs, level, &mut table, &w(&[6])).unwrap();
        assert_eq!(g.eval_at_one(), BigInt::from(4));
    }

    /// Independent enumeration: walk all `y` in the dominant coset set, keep
    /// those with `y <= w` and a dominant image, and take parabolic values.
    #[test]
    fn irreducible_character_matches_coset_enumeration() {
        let rs = RootSystem::build(Family::A, 2).unwrap();
        let level = Level::quantum(&rs, 5).unwrap();
        let mut table = KlTable::new(&rs, 5);
        for lambda in dominant_box(2, 7) {
            let red = reduce_to_fundamental(&rs, &lambda, level).unwrap();
            let lw = red.w.length(&rs);
            let coset =
                enumerate_dominant_coset(&rs, level, &red.lambda_minus, &red.stabilizer, lw)
                    .unwrap();
            let mut expected = Vec::new();
            for y in coset.iter().rev() {
                let mu = y.dot(&rs, &red.lambda_minus);
                if !mu.is_dominant() || !crate::affine_weyl::bruhat_leq(&rs, y, &red.w).unwrap() {
                    continue;
                }
                let m = table
                    .parabolic_kl(&red.stabilizer, y, &red.w)
                    .unwrap()
                    .eval_at_one();
                if m != 0 {
                    let sign = if (lw - y.length(&rs)) % 2 == 0 { 1 } else { -1 };
                    expected.push((sign, m as u64, mu));
                }
            }
            let ch = irreducible_character(&rs, level, &mut table, &lambda).unwrap();
            let mut got: Vec<_> = ch
                .terms
                .iter()
                .map(|t| (t.sign, t.multiplicity, t.weight.clone()))
                .collect();
            got.sort();
            expected.sort();
            assert_eq!(got, expected, "{lambda}");
            assert!(ch
                .terms
                .iter()
                .any(|t| t.weight == lambda && t.sign == 1 && t.multiplicity == 1));

            let dim = ch.generic_dim(&rs).unwrap().eval_at_one();
            assert!(dim > BigInt::zero());
            assert!(dim <= weyl_dim_oracle(&rs, &lambda));
        }
    }

    #[test]
    fn minimal_weights_give_single_terms() {
        let rs = RootSystem::build(Family::B, 2).unwrap();
        let level = Level::quantum(&rs, 7).unwrap();
        let mut table = KlTable::new(&rs, 7);
        let a0 = rs.highest_short_root();
        let lowest = dominant_box(2, 6)
            .into_iter()
            .filter(|l| rs.pair(&l.add(&rs.rho()).0, a0) <= 7);
        for lambda in lowest {
            let ch = irreducible_character(&rs, level, &mut table, &lambda).unwrap();
            assert_eq!(
                ch.terms,
                vec![CharacterTerm {
                    sign: 1,
                    multiplicity: 1,
                    weight: lambda.clone()
                }]
            );
            assert_eq!(
                ch.generic_dim(&rs).unwrap(),
                weyl_generic_dim(&rs, &lambda).unwrap()
            );
        }
    }

    #[test]
    fn derivative_identity_examples() {
        let a1 = RootSystem::build(Family::A, 1).unwrap();
        let level = Level::quantum(&a1, 5).unwrap();
        let rhs = derivative_closed_form(&a1, level, &w(&[4])).unwrap();
        let oracle = lp(&[(4, 5), (-6, 5)]).eval_at_zeta(5);
        assert_eq!(rhs, oracle);
        assert_eq!(rhs, CyclotomicInt::zeta_pow(5, -1).scale(&BigInt::from(10)));
        let cert = verify_derivative_identity(&a1, level, &w(&[4])).unwrap();
        assert_eq!(cert.s, 1);
        assert!(cert.passed());

        let a2 = RootSystem::build(Family::A, 2).unwrap();
        let level = Level::quantum(&a2, 5).unwrap();
        let rhs = derivative_closed_form(&a2, level, &w(&[0, 0])).unwrap();
        assert_eq!(rhs, d_poly(&a2, &w(&[0, 0])).unwrap().eval_at_zeta(5));
    }

    #[test]
    fn derivative_identity_sweeps() {
        for (family, ell, bound) in [(Family::A, 5, 10), (Family::B, 7, 9), (Family::G, 7, 8)] {
            let rs = RootSystem::build(family, 2).unwrap();
            let level = Level::quantum(&rs, ell).unwrap();
            for lambda in dominant_box(2, bound) {
                let cert = verify_derivative_identity(&rs, level, &lambda).unwrap();
                let mult = d_poly(&rs, &lambda).unwrap().psi_multiplicity(ell).unwrap();
                assert_eq!(mult as usize, cert.s);
                if cert.s == 0 {
                    let red = reduce_to_fundamental(&rs, &lambda, level).unwrap();
                    assert_eq!(red.a_count, 0);
                    let mut e = e_factor(&rs, level, &red.lambda_minus).unwrap();
                    if red.w.length(&rs) % 2 == 1 {
                        e = -&e;
                    }
                    assert_eq!(d_poly(&rs, &lambda).unwrap().eval_at_zeta(ell), e);
                }
            }
            assert_eq!(
                d_poly(&rs, &Weight::zero(2))
                    .unwrap()
                    .psi_multiplicity(ell)
                    .unwrap(),
                0
            );
        }
    }

    #[test]
    fn complexity_examples() {
        let a1 = RootSystem::build(Family::A, 1).unwrap();
        let level = Level::quantum(&a1, 5).unwrap();
        let mut table = KlTable::new(&a1, 5);
        let r = multiplicity_and_complexity(&a1, level, &mut table, &w(&[4])).unwrap();
        assert_eq!((r.n, r.s, r.borel_bound, r.full_bound), (1, 1, 0, 0));
        let r = multiplicity_and_complexity(&a1, level, &mut table, &w(&[6])).unwrap();
        assert_eq!((r.n, r.borel_bound), (0, 1));

        let a2 = RootSystem::build(Family::A, 2).unwrap();
        let level = Level::quantum(&a2, 5).unwrap();
        let mut table = KlTable::new(&a2, 5);
        let r = multiplicity_and_complexity(&a2, level, &mut table, &w(&[4, 0])).unwrap();
        assert_eq!((r.n, r.s, r.borel_bound, r.full_bound), (1, 1, 2, 4));
        let r = multiplicity_and_complexity(&a2, level, &mut table, &w(&[1, 1])).unwrap();
        assert_eq!((r.n, r.borel_bound), (0, 3));
        assert!(matches!(
            multiplicity_and_complexity(
                &a2,
                Level::quantum(&a2, 7).unwrap(),
                &mut table,
                &w(&[0, 0])
            ),
            Err(Error::LevelMismatch { .. })
        ));
    }

    #[test]
    fn s_invariance_examples() {
        let a1 = RootSystem::build(Family::A, 1).unwrap();
        let level = Level::quantum(&a1, 5).unwrap();
        let id = [AffineWeylElement::identity(&a1, 5)];
        assert!(s_invariance_check(&a1, level, &w(&[-6]), &id).unwrap());
        let sample = enumerate_dominant_coset(&a1, level, &w(&[-6]), &[0], 6).unwrap();
        assert!(s_invariance_check(&a1, level, &w(&[-6]), &sample).unwrap());
        assert_eq!(positive_count(&a1, &w(&[-6]), level).unwrap(), 1);

        let a2 = RootSystem::build(Family::A, 2).unwrap();
        let level = Level::quantum(&a2, 5).unwrap();
        let sample = enumerate_dominant_coset(&a2, level, &w(&[-2, -2]), &[], 5).unwrap();
        assert!(s_invariance_check(&a2, level, &w(&[-2, -2]), &sample).unwrap());
        assert_eq!(positive_count(&a2, &w(&[-2, -2]), level).unwrap(), 0);
    }
}
