//! Knudsen-Mumford degree bookkeeping for a fibration with odd cubic Hilbert
//! function: the degree d_p of the determinant line of p-th powers, its exact
//! decomposition into the two basic line-bundle degrees, orbifold covering
//! factors, and conversion into pairings with the tautological classes.

use crate::exactnum::{rat, rat_int, Rational};
use crate::hilbert::OddCubic;
use crate::polyalg::{solve_linear, ExactMatrix};
use num_traits::Zero;

/// Exponent of the degree-2 determinant factor: N2(p) = pb^3/3 - pb/12 with
/// pb = p - 1/2.
pub fn n2_exponent(p: i64) -> Rational {
    let pb = rat_int(p) - rat(1, 2);
    &pb * &pb * &pb / rat_int(3) - pb / rat_int(12)
}

/// Exponent of the degree-0 determinant factor: N0(p) = -2 pb.
pub fn n0_exponent(p: i64) -> Rational {
    (rat_int(p) - rat(1, 2)) * rat_int(-2)
}

/// Degree contributed at power p: d_p = p H(p) - (p-1) H(p-1).
pub fn km_degree(hilbert: &OddCubic, p: i64) -> Rational {
    rat_int(p) * hilbert.eval(p) - rat_int(p - 1) * hilbert.eval(p - 1)
}

/// Degrees of the two basic line bundles on the base.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct KMDegrees {
    pub deg_l0: Rational,
    pub deg_l2: Rational,
}

/// Solves deg_l2 * N2(p) + deg_l0 * N0(p) = d_p / cover_factor as an identity
/// in p, by matching the pb^3 and pb coefficients; the solution is verified
/// against km_degree at p = 1..=20. The covering factor divides out a cyclic
/// base reparametrization.
pub fn km_pairings(hilbert: &OddCubic, cover_factor: u32) -> KMDegrees {
    assert!(cover_factor > 0, "covering factor must be positive");
    let m = rat_int(cover_factor as i64);
    // d_p = alpha (4 pb^3 + pb) + 2 beta pb, so matching coefficients of
    // pb^3 and pb in deg_l2 (pb^3/3 - pb/12) + deg_l0 (-2 pb) gives two
    // equations in the two unknowns (deg_l2, deg_l0).
    let mut matrix = ExactMatrix::filled(2, 2, Rational::zero());
    matrix.set(0, 0, rat(1, 3));
    matrix.set(1, 0, rat(-1, 12));
    matrix.set(1, 1, rat_int(-2));
    let rhs = [
        rat_int(4) * &hilbert.alpha / &m,
        (&hilbert.alpha + rat_int(2) * &hilbert.beta) / &m,
    ];
    let solution = solve_linear(&matrix, &rhs).expect("coefficient matrix is invertible");
    let [deg_l2, deg_l0] = <[Rational; 2]>::try_from(solution).expect("two unknowns");
    let degrees = KMDegrees { deg_l0, deg_l2 };
    for p in 1..=20 {
        let decomposed = &degrees.deg_l2 * n2_exponent(p) + &degrees.deg_l0 * n0_exponent(p);
        assert_eq!(decomposed, km_degree(hilbert, p) / &m, "identity check at p={p}");
    }
    degrees
}

/// Pairings of one cohomology class against the ordered divisor basis
/// (D_II, D_III).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PairingVector {
    values: [Rational; 2],
}

impl PairingVector {
    pub fn new(d_ii: Rational, d_iii: Rational) -> PairingVector {
        PairingVector { values: [d_ii, d_iii] }
    }

    pub fn d_ii(&self) -> &Rational {
        &self.values[0]
    }

    pub fn d_iii(&self) -> &Rational {
        &self.values[1]
    }

    pub fn is_zero(&self) -> bool {
        self.values.iter().all(|v| v.is_zero())
    }
}

/// The exact scalar r with v = r * u, if one exists. Pairing against a basis
/// of H_2 determines a class, so componentwise proportionality of pairing
/// vectors is proportionality of the classes.
pub fn proportionality_ratio(u: &PairingVector, v: &PairingVector) -> Option<Rational> {
    let pivot = u.values.iter().position(|x| !x.is_zero())?;
    let ratio = &v.values[pivot] / &u.values[pivot];
    for (ui, vi) in u.values.iter().zip(&v.values) {
        if *vi != ui * &ratio {
            return None;
        }
    }
    Some(ratio)
}

/// Pairings of the virtual class against the two line bundles, from its ratio
/// against the degree-2 class: (ratio * <L2, L2>, ratio * <L0, L2>), with
/// <L0, L2> expressed through the proportionality factor L0 = l0_vs_l2 * L2.
pub fn virtual_pairings(
    ratio_zeta_vs_l2: &Rational,
    l2_square: &Rational,
    l0_vs_l2: &Rational,
) -> (Rational, Rational) {
    let zeta_l2 = ratio_zeta_vs_l2 * l2_square;
    let zeta_l0 = ratio_zeta_vs_l2 * l0_vs_l2 * l2_square;
    (zeta_l2, zeta_l0)
}

/// Converts line-bundle pairings to tautological-class pairings via
/// L2 = -(1/2) I(c1^3) and L0 = 24 I(c1 c2).
pub fn mmm_from_km(zeta_l2: &Rational, zeta_l0: &Rational) -> (Rational, Rational) {
    (zeta_l2 * rat_int(-2), zeta_l0 / rat_int(24))
}
