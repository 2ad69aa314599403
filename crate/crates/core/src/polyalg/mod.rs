//! Sparse multivariate polynomials over exact rationals, plus exact linear
//! algebra over any [`Scalar`] field.
//!
//! Monomials are exponent vectors ordered graded-lexicographically (total
//! degree first, then lex) so that iteration, printing and hashing are
//! deterministic. Polynomial rings carry variable names and per-variable
//! weights; operations on polynomials from different rings are errors, never
//! coercions.

mod matrix;
mod text;

pub use matrix::{solve_linear, ExactMatrix, RankKernel};
pub use text::{parse_polynomial, ParseError};

use crate::exactnum::Rational;
use num_traits::{One, Zero};
use std::collections::BTreeMap;
use std::fmt;
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum PolyError {
    #[error("polynomial rings differ: {0:?} vs {1:?}")]
    RingMismatch(Vec<String>, Vec<String>),
    #[error("expected {expected} substitution targets, got {got}")]
    SubstitutionArity { expected: usize, got: usize },
    #[error("expected {expected} values, got {got}")]
    EvaluationArity { expected: usize, got: usize },
    #[error("comultiplication matrix needs degree >= 5, got {0}")]
    DegreeTooSmall(u32),
    #[error("bidegree slices need exactly 4 variables, got {0}")]
    NotFourVariables(usize),
}

/// Exponent vector with graded-lex ordering: higher total degree first is NOT
/// encoded here; `Ord` is (total degree, then lexicographic), ascending, so a
/// `BTreeMap` iterated in reverse yields the usual graded-lex leading term
/// first.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Monomial(pub Vec<u32>);

impl Monomial {
    pub fn total_degree(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn weighted_degree(&self, weights: &[u32]) -> u64 {
        self.0
            .iter()
            .zip(weights)
            .map(|(e, w)| *e as u64 * *w as u64)
            .sum()
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        (self.total_degree(), &self.0).cmp(&(other.total_degree(), &other.0))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

/// Variable names and weights shared by the polynomials of one ring.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PolyRing {
    names: Vec<String>,
    weights: Vec<u32>,
}

impl PolyRing {
    pub fn new(names: &[&str], weights: &[u32]) -> PolyRing {
        assert_eq!(names.len(), weights.len());
        assert!(weights.iter().all(|w| *w > 0), "weights must be positive");
        PolyRing {
            names: names.iter().map(|s| s.to_string()).collect(),
            weights: weights.to_vec(),
        }
    }

    /// All weights 1.
    pub fn unweighted(names: &[&str]) -> PolyRing {
        let weights = vec![1; names.len()];
        PolyRing {
            names: names.iter().map(|s| s.to_string()).collect(),
            weights,
        }
    }

    pub fn nvars(&self) -> usize {
        self.names.len()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn weights(&self) -> &[u32] {
        &self.weights
    }

    pub fn var_index(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }
}

/// Sparse polynomial with exact rational coefficients. Zero coefficients are
/// never stored.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Polynomial {
    ring: PolyRing,
    terms: BTreeMap<Monomial, Rational>,
}

impl Polynomial {
    pub fn zero(ring: &PolyRing) -> Polynomial {
        Polynomial {
            ring: ring.clone(),
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(ring: &PolyRing, value: Rational) -> Polynomial {
        let mut p = Polynomial::zero(ring);
        if !value.is_zero() {
            p.terms.insert(Monomial(vec![0; ring.nvars()]), value);
        }
        p
    }

    pub fn variable(ring: &PolyRing, index: usize) -> Polynomial {
        assert!(index < ring.nvars());
        let mut exps = vec![0; ring.nvars()];
        exps[index] = 1;
        let mut p = Polynomial::zero(ring);
        p.terms.insert(Monomial(exps), Rational::one());
        p
    }

    pub fn monomial(ring: &PolyRing, exps: Vec<u32>, coeff: Rational) -> Polynomial {
        assert_eq!(exps.len(), ring.nvars());
        let mut p = Polynomial::zero(ring);
        if !coeff.is_zero() {
            p.terms.insert(Monomial(exps), coeff);
        }
        p
    }

    pub fn ring(&self) -> &PolyRing {
        &self.ring
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Terms in descending graded-lex order (leading term first).
    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Rational)> {
        self.terms.iter().rev()
    }

    pub fn coefficient(&self, mono: &Monomial) -> Rational {
        self.terms.get(mono).cloned().unwrap_or_else(Rational::zero)
    }

    fn check_ring(&self, other: &Polynomial) -> Result<(), PolyError> {
        if self.ring == other.ring {
            Ok(())
        } else {
            Err(PolyError::RingMismatch(
                self.ring.names.clone(),
                other.ring.names.clone(),
            ))
        }
    }

    pub fn add(&self, other: &Polynomial) -> Result<Polynomial, PolyError> {
        self.check_ring(other)?;
        let mut out = self.clone();
        for (m, c) in &other.terms {
            let entry = out.terms.entry(m.clone()).or_insert_with(Rational::zero);
            *entry += c;
            if entry.is_zero() {
                out.terms.remove(m);
            }
        }
        Ok(out)
    }

    pub fn sub(&self, other: &Polynomial) -> Result<Polynomial, PolyError> {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Polynomial {
        Polynomial {
            ring: self.ring.clone(),
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect(),
        }
    }

    pub fn scale(&self, factor: &Rational) -> Polynomial {
        if factor.is_zero() {
            return Polynomial::zero(&self.ring);
        }
        Polynomial {
            ring: self.ring.clone(),
            terms: self
                .terms
                .iter()
                .map(|(m, c)| (m.clone(), c * factor))
                .collect(),
        }
    }

    pub fn mul(&self, other: &Polynomial) -> Result<Polynomial, PolyError> {
        self.check_ring(other)?;
        let mut out = Polynomial::zero(&self.ring);
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                let exps: Vec<u32> = ma.0.iter().zip(&mb.0).map(|(a, b)| a + b).collect();
                let m = Monomial(exps);
                let entry = out.terms.entry(m.clone()).or_insert_with(Rational::zero);
                *entry += ca * cb;
                if entry.is_zero() {
                    out.terms.remove(&m);
                }
            }
        }
        Ok(out)
    }

    pub fn pow(&self, exp: u32) -> Polynomial {
        let mut acc = Polynomial::constant(&self.ring, Rational::one());
        for _ in 0..exp {
            acc = acc.mul(self).expect("same ring");
        }
        acc
    }

    /// Ring homomorphism sending variable `i` to `targets[i]`. All targets must
    /// share one ring, which becomes the ring of the image.
    pub fn substitute(&self, targets: &[Polynomial]) -> Result<Polynomial, PolyError> {
        if targets.len() != self.ring.nvars() {
            return Err(PolyError::SubstitutionArity {
                expected: self.ring.nvars(),
                got: targets.len(),
            });
        }
        for t in &targets[1..] {
            targets[0].check_ring(t)?;
        }
        let target_ring = targets[0].ring.clone();
        let mut out = Polynomial::zero(&target_ring);
        for (m, c) in &self.terms {
            let mut term = Polynomial::constant(&target_ring, c.clone());
            for (i, e) in m.0.iter().enumerate() {
                if *e > 0 {
                    term = term.mul(&targets[i].pow(*e))?;
                }
            }
            out = out.add(&term)?;
        }
        Ok(out)
    }

    pub fn evaluate(&self, values: &[Rational]) -> Result<Rational, PolyError> {
        if values.len() != self.ring.nvars() {
            return Err(PolyError::EvaluationArity {
                expected: self.ring.nvars(),
                got: values.len(),
            });
        }
        let mut acc = Rational::zero();
        for (m, c) in &self.terms {
            let mut term = c.clone();
            for (i, e) in m.0.iter().enumerate() {
                for _ in 0..*e {
                    term *= &values[i];
                }
            }
            acc += term;
        }
        Ok(acc)
    }

    /// Max weighted degree over the terms; None for the zero polynomial.
    pub fn weighted_degree(&self) -> Option<u64> {
        self.terms
            .keys()
            .map(|m| m.weighted_degree(&self.ring.weights))
            .max()
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        text::format_polynomial(self, f)
    }
}

/// All exponent vectors of the given weighted degree, in descending graded-lex
/// order (matching polynomial term iteration).
pub fn enumerate_monomials(nvars: usize, weights: &[u32], degree: u64) -> Vec<Monomial> {
    assert_eq!(nvars, weights.len());
    let mut out = Vec::new();
    let mut current = vec![0u32; nvars];
    descend(&mut out, &mut current, 0, weights, degree);
    out.sort();
    out.reverse();
    out
}

fn descend(out: &mut Vec<Monomial>, current: &mut Vec<u32>, var: usize, weights: &[u32], left: u64) {
    if var == weights.len() {
        if left == 0 {
            out.push(Monomial(current.clone()));
        }
        return;
    }
    let w = weights[var] as u64;
    let max = left / w;
    for e in 0..=max {
        current[var] = e as u32;
        descend(out, current, var + 1, weights, left - e * w);
    }
    current[var] = 0;
}

/// Monomials in 4 variables, bihomogeneous of degree `d1` in the first pair
/// and `d2` in the second.
pub fn enumerate_bidegree(d1: u32, d2: u32) -> Vec<Monomial> {
    let mut out = Vec::new();
    for a in (0..=d1).rev() {
        for c in (0..=d2).rev() {
            out.push(Monomial(vec![a, d1 - a, c, d2 - c]));
        }
    }
    out.sort();
    out.reverse();
    out
}

/// Matrix of the symmetric-power comultiplication S^(d-4) -> S^(d-5) (x) U for
/// a 4-dimensional space U: a monomial m maps to sum_i e_i(m) (m/x_i) (x) x_i.
/// Rows are (monomial of degree d-5, variable) pairs, columns are monomials of
/// degree d-4, both in graded-lex order.
pub fn comultiplication_matrix(degree: u32) -> Result<ExactMatrix<Rational>, PolyError> {
    if degree < 5 {
        return Err(PolyError::DegreeTooSmall(degree));
    }
    let unit = [1u32; 4];
    let cols = enumerate_monomials(4, &unit, (degree - 4) as u64);
    let rows = enumerate_monomials(4, &unit, (degree - 5) as u64);
    let row_index: BTreeMap<&Monomial, usize> =
        rows.iter().enumerate().map(|(i, m)| (m, i)).collect();
    let mut matrix = ExactMatrix::filled(rows.len() * 4, cols.len(), Rational::zero());
    for (j, m) in cols.iter().enumerate() {
        for v in 0..4 {
            if m.0[v] == 0 {
                continue;
            }
            let mut reduced = m.0.clone();
            reduced[v] -= 1;
            let i = row_index[&Monomial(reduced)];
            matrix.set(i * 4 + v, j, crate::exactnum::rat_int(m.0[v] as i64));
        }
    }
    Ok(matrix)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::{rat, rat_int};

    fn xyzu() -> PolyRing {
        PolyRing::unweighted(&["x", "y", "z", "u"])
    }

    #[test]
    fn monomial_count_degree_6_four_vars() {
        let monos = enumerate_monomials(4, &[1, 1, 1, 1], 6);
        assert_eq!(monos.len(), 84); // C(9,3)
    }

    #[test]
    fn monomial_count_weighted() {
        let monos = enumerate_monomials(5, &[1, 1, 1, 1, 2], 2);
        assert_eq!(monos.len(), 11);
    }

    #[test]
    fn monomial_counts_match_binomial() {
        // C(d + v - 1, v - 1) for unit weights.
        fn binom(n: u64, k: u64) -> u64 {
            let mut out = 1u64;
            for i in 0..k {
                out = out * (n - i) / (i + 1);
            }
            out
        }
        for v in 1..=6usize {
            for d in 0..=20u64 {
                let count = enumerate_monomials(v, &vec![1; v], d).len() as u64;
                assert_eq!(count, binom(d + v as u64 - 1, v as u64 - 1), "v={v} d={d}");
            }
        }
    }

    #[test]
    fn bidegree_counts() {
        assert_eq!(enumerate_bidegree(6, 6).len(), 49);
        assert_eq!(enumerate_bidegree(1, 2).len(), 6);
    }

    #[test]
    fn enumeration_is_strictly_decreasing() {
        let monos = enumerate_monomials(4, &[1, 1, 1, 2], 6);
        for pair in monos.windows(2) {
            assert!(pair[0] > pair[1]);
        }
    }

    #[test]
    fn arithmetic_basics() {
        let ring = xyzu();
        let x = Polynomial::variable(&ring, 0);
        let y = Polynomial::variable(&ring, 1);
        let p = x.add(&y).unwrap().pow(2);
        // (x+y)^2 = x^2 + 2xy + y^2
        assert_eq!(p.num_terms(), 3);
        assert_eq!(
            p.coefficient(&Monomial(vec![1, 1, 0, 0])),
            rat_int(2)
        );
        let q = p.sub(&p).unwrap();
        assert!(q.is_zero());
    }

    #[test]
    fn ring_mismatch_rejected() {
        let a = Polynomial::variable(&xyzu(), 0);
        let b = Polynomial::variable(&PolyRing::unweighted(&["a", "b"]), 0);
        assert!(matches!(a.add(&b), Err(PolyError::RingMismatch(_, _))));
    }

    #[test]
    fn evaluation_matches_substitution_by_constants() {
        let ring = xyzu();
        let x = Polynomial::variable(&ring, 0);
        let u = Polynomial::variable(&ring, 3);
        let p = x.pow(3).add(&u.scale(&rat(1, 2))).unwrap();
        let vals = [rat_int(2), rat_int(0), rat_int(0), rat_int(4)];
        assert_eq!(p.evaluate(&vals).unwrap(), rat_int(10));
    }

    #[test]
    fn quadric_relation_substitution_identity() {
        // Substituting the two quadric relations into the ambient weighted
        // sextic and clearing denominators: u stands for 1/(2a), v for
        // 1/(2b), so a^-3 = 8u^3 and a^-1 b^-2 = 8uv^2.
        let ring = PolyRing::unweighted(&["x1", "y1", "x2", "y2", "hp", "hm", "u", "v"]);
        let parse = |s: &str| super::text::parse_polynomial(s, &ring).unwrap();
        let source = parse("x1^6 + y1^6 + x2^6 + y2^6 + hp^3 + hp*hm^2");
        let plus = parse("x1*y1 + x2*y2");
        let minus = parse("x1*y1 - x2*y2");
        let targets = vec![
            parse("x1"),
            parse("y1"),
            parse("x2"),
            parse("y2"),
            plus.mul(&parse("u")).unwrap(),
            minus.mul(&parse("v")).unwrap(),
            parse("u"),
            parse("v"),
        ];
        let substituted = source.substitute(&targets).unwrap().scale(&rat_int(8));
        let quartic_free = parse("8*x1^6 + 8*y1^6 + 8*x2^6 + 8*y2^6");
        let cubic = plus.pow(3).mul(&parse("8*u^3")).unwrap();
        let mixed = plus
            .mul(&minus.pow(2))
            .unwrap()
            .mul(&parse("8*u*v^2"))
            .unwrap();
        let target = quartic_free.add(&cubic).unwrap().add(&mixed).unwrap();
        assert!(substituted.sub(&target).unwrap().is_zero());

        // Identity substitution leaves a polynomial untouched.
        let idents: Vec<Polynomial> =
            (0..8).map(|i| Polynomial::variable(&ring, i)).collect();
        let sq = parse("x1^2");
        assert_eq!(sq.substitute(&idents).unwrap(), sq);
    }

    #[test]
    fn comultiplication_cokernel_dims() {
        for (d, expected_coker) in [(5u32, 0usize), (6, 6), (7, 20)] {
            let m = comultiplication_matrix(d).unwrap();
            let rk = m.rank_kernel();
            assert_eq!(rk.rank, m.cols(), "full column rank at degree {d}");
            assert_eq!(m.rows() - rk.rank, expected_coker, "cokernel at degree {d}");
        }
    }

    #[test]
    fn comultiplication_full_column_rank_range() {
        for d in 5..=10u32 {
            let m = comultiplication_matrix(d).unwrap();
            assert_eq!(m.rank_kernel().rank, m.cols(), "degree {d}");
        }
    }

    #[test]
    fn comultiplication_rejects_small_degree() {
        assert_eq!(
            comultiplication_matrix(4),
            Err(PolyError::DegreeTooSmall(4))
        );
    }

    use proptest::prelude::*;

    type TermData = (i64, i64, [u32; 3]);

    fn term_strategy() -> impl Strategy<Value = TermData> {
        (-9i64..=9, 1i64..=4, [0u32..=2, 0u32..=2, 0u32..=2])
    }

    fn build(ring: &PolyRing, terms: &[TermData]) -> Polynomial {
        let mut out = Polynomial::zero(ring);
        for (num, den, exps) in terms {
            let term = Polynomial::monomial(ring, exps.to_vec(), rat(*num, *den));
            out = out.add(&term).expect("same ring");
        }
        out
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(200))]

        // Substitution is a ring homomorphism: it distributes over sums and
        // products.
        #[test]
        fn substitution_distributes(
            p_terms in proptest::collection::vec(term_strategy(), 0..4),
            q_terms in proptest::collection::vec(term_strategy(), 0..4),
            target_terms in [
                proptest::collection::vec(term_strategy(), 0..3),
                proptest::collection::vec(term_strategy(), 0..3),
                proptest::collection::vec(term_strategy(), 0..3),
            ],
        ) {
            let ring = PolyRing::unweighted(&["x", "y", "z"]);
            let p = build(&ring, &p_terms);
            let q = build(&ring, &q_terms);
            let targets: Vec<Polynomial> =
                target_terms.iter().map(|t| build(&ring, t)).collect();
            let sub = |poly: &Polynomial| poly.substitute(&targets).expect("three targets");
            prop_assert_eq!(
                sub(&p.add(&q).unwrap()),
                sub(&p).add(&sub(&q)).unwrap()
            );
            prop_assert_eq!(
                sub(&p.mul(&q).unwrap()),
                sub(&p).mul(&sub(&q)).unwrap()
            );
        }
    }
}
