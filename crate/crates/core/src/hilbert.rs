//! Section counts on weighted projective spaces, Hilbert functions of
//! hypersurfaces via the restriction sequence, and exact fitting of odd cubic
//! Hilbert polynomials H(p) = alpha p^3 + beta p.

use crate::exactnum::{rat_int, Rational};
use crate::polyalg::{solve_linear, ExactMatrix};
use num_traits::Zero;
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum HilbertError {
    #[error("duplicate sample at p = {0}")]
    DuplicateSampleP(i64),
    #[error("need at least 2 samples, got {0}")]
    NotEnoughSamples(usize),
    #[error("samples do not pin down a unique odd cubic")]
    UnderdeterminedSamples,
    #[error("no odd cubic interpolates the samples")]
    InconsistentSamples,
}

/// Number of monomials of the given weighted degree; degrees below zero count
/// zero sections. This is the dimension of H^0 of the degree-d twist on the
/// weighted projective space with these weights.
pub fn weighted_sections_dim(weights: &[u32], degree: i64) -> u64 {
    if degree < 0 {
        return 0;
    }
    let degree = degree as usize;
    // Complete-knapsack count of exponent vectors of each weighted degree.
    let mut counts = vec![0u64; degree + 1];
    counts[0] = 1;
    for &w in weights {
        let w = w as usize;
        assert!(w > 0, "weights must be positive");
        for d in w..=degree {
            counts[d] += counts[d - w];
        }
    }
    counts[degree]
}

/// Hilbert function of a degree-`hyp_degree` hypersurface in the weighted
/// space, graded by the degree-`twist_degree` twist: the restriction sequence
/// gives N(twist*p) - N(twist*p - hyp_degree), with N vanishing in negative
/// degrees. Negative p counts zero by convention.
pub fn hypersurface_hilbert(
    ambient_weights: &[u32],
    hyp_degree: u32,
    twist_degree: u32,
    p: i64,
) -> u64 {
    if p < 0 {
        return 0;
    }
    let graded = twist_degree as i64 * p;
    weighted_sections_dim(ambient_weights, graded)
        - weighted_sections_dim(ambient_weights, graded - hyp_degree as i64)
}

/// H(p) = alpha p^3 + beta p, the shape forced by vanishing even terms.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OddCubic {
    pub alpha: Rational,
    pub beta: Rational,
}

impl OddCubic {
    pub fn eval(&self, p: i64) -> Rational {
        let p = rat_int(p);
        &self.alpha * &p * &p * &p + &self.beta * &p
    }
}

/// Interpolation data: pairs (p, H(p)) with distinct p.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HilbertSamples {
    pairs: Vec<(i64, i64)>,
}

impl HilbertSamples {
    pub fn new(pairs: Vec<(i64, i64)>) -> Result<HilbertSamples, HilbertError> {
        for (i, (p, _)) in pairs.iter().enumerate() {
            if pairs[..i].iter().any(|(q, _)| q == p) {
                return Err(HilbertError::DuplicateSampleP(*p));
            }
        }
        Ok(HilbertSamples { pairs })
    }

    pub fn pairs(&self) -> &[(i64, i64)] {
        &self.pairs
    }
}

/// The unique odd cubic through the samples. Extra samples are consistency
/// constraints: any sample set needing even-degree terms, or not pinning down
/// (alpha, beta), is an error rather than a best fit.
pub fn fit_odd_cubic(samples: &HilbertSamples) -> Result<OddCubic, HilbertError> {
    let pairs = samples.pairs();
    if pairs.len() < 2 {
        return Err(HilbertError::NotEnoughSamples(pairs.len()));
    }
    let mut matrix = ExactMatrix::filled(pairs.len(), 2, Rational::zero());
    let mut rhs = Vec::with_capacity(pairs.len());
    for (row, (p, value)) in pairs.iter().enumerate() {
        matrix.set(row, 0, rat_int(*p).pow(3));
        matrix.set(row, 1, rat_int(*p));
        rhs.push(rat_int(*value));
    }
    if matrix.rank() < 2 {
        return Err(HilbertError::UnderdeterminedSamples);
    }
    let solution = solve_linear(&matrix, &rhs).ok_or(HilbertError::InconsistentSamples)?;
    let [alpha, beta] = <[Rational; 2]>::try_from(solution).expect("two unknowns");
    Ok(OddCubic { alpha, beta })
}
