//! Characteristic-number arithmetic for four-manifolds and complex surfaces:
//! the self-dual index, the real index mu, hypersurface Chern numbers, graded
//! ring dimension counts, Riemann-Roch on curves, adjunction genera, and the
//! dimension bookkeeping around the moduli arguments.

use crate::exactnum::{rat_int, Rational};
use crate::polyalg::comultiplication_matrix;
use crate::report::{CheckReport, Provenance};
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum InvariantError {
    #[error("(c1^2 + c2)/12 = {0} is not an integer")]
    NonIntegralChi(Rational),
    #[error("graded generators must have positive degree")]
    ZeroGeneratorDegree,
    #[error("adjunction pairing {0} is odd")]
    OddAdjunctionPairing(i64),
}

/// Index of the self-dual deformation complex: (29 sigma - 15 e)/2.
pub fn selfdual_index(sigma: i64, e: i64) -> Rational {
    rat_int(29 * sigma - 15 * e) / rat_int(2)
}

/// Real index of the surface deformation problem on the (a, b) = (c1^2, chi)
/// plane.
pub fn mu_ab(a: i64, b: i64) -> i64 {
    20 * b - 4 * a
}

/// Chern and index numbers of a complex surface, all tied together by
/// Riemann-Roch: chi = (c1^2 + c2)/12, sigma = (c1^2 - 2 c2)/3,
/// mu = 2(10 chi - 2 c1^2) = -(3 c2 + 7 sigma).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FourManifoldNumbers {
    pub c1sq: i64,
    pub c2: i64,
    pub sigma: i64,
    pub chi_hol: Rational,
    pub mu: i64,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SurfaceKind {
    Explicit { c1sq: i64, c2: i64 },
    /// Smooth degree-d hypersurface in projective 3-space.
    Hypersurface { degree: u32 },
}

pub fn surface_numbers(kind: &SurfaceKind) -> Result<FourManifoldNumbers, InvariantError> {
    let (c1sq, c2) = match *kind {
        SurfaceKind::Explicit { c1sq, c2 } => (c1sq, c2),
        SurfaceKind::Hypersurface { degree } => {
            let d = i64::from(degree);
            (d * (d - 4) * (d - 4), d * (d * d - 4 * d + 6))
        }
    };
    let chi_hol = rat_int(c1sq + c2) / rat_int(12);
    if !chi_hol.is_integer() {
        return Err(InvariantError::NonIntegralChi(chi_hol));
    }
    let chi = i64::try_from(chi_hol.to_integer()).expect("small chi");
    // Integral chi forces 3 | c1sq - 2 c2.
    let sigma = (c1sq - 2 * c2) / 3;
    let mu = 2 * (10 * chi - 2 * c1sq);
    debug_assert_eq!(mu, -(3 * c2 + 7 * sigma));
    Ok(FourManifoldNumbers { c1sq, c2, sigma, chi_hol, mu })
}

impl FourManifoldNumbers {
    pub fn chi_integer(&self) -> i64 {
        i64::try_from(self.chi_hol.to_integer()).expect("small chi")
    }
}

/// Degrees of the free generators of a graded polynomial ring.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GradedGenerators {
    degrees: Vec<u64>,
}

impl GradedGenerators {
    pub fn new(degrees: Vec<u64>) -> Result<GradedGenerators, InvariantError> {
        if degrees.contains(&0) {
            return Err(InvariantError::ZeroGeneratorDegree);
        }
        Ok(GradedGenerators { degrees })
    }

    /// Generators of the rank-2 characteristic-class ring: one for each pair
    /// (p, q) with p, q >= 0 and p + 2q >= 3, of degree 2(p + 2q - 2);
    /// the index range p + 2q >= 3 keeps every degree positive. Only
    /// generators of degree <= max_degree are materialized.
    pub fn rank_two_ring(max_degree: u64) -> GradedGenerators {
        let mut degrees = Vec::new();
        let mut total = 3u64;
        while 2 * (total - 2) <= max_degree {
            let count = total / 2 + 1;
            degrees.extend(std::iter::repeat(2 * (total - 2)).take(count as usize));
            total += 1;
        }
        GradedGenerators { degrees }
    }

    pub fn degrees(&self) -> &[u64] {
        &self.degrees
    }
}

/// Number of monomials of the given total degree in the free commutative
/// ring on the generators.
pub fn graded_ring_dimension(gens: &GradedGenerators, target_degree: u64) -> u64 {
    let target = target_degree as usize;
    let mut counts = vec![0u64; target + 1];
    counts[0] = 1;
    for &degree in gens.degrees() {
        let step = degree as usize;
        for d in step..=target {
            counts[d] += counts[d - step];
        }
    }
    counts[target]
}

/// Riemann-Roch on a smooth curve: chi of a degree-d line bundle is
/// d - g + 1; h^0 equals chi once d exceeds 2g - 2 (h^1 vanishes), and is
/// not determined by the degree alone below that.
pub fn riemann_roch_curve(genus: u64, degree: i64) -> (i64, Option<i64>) {
    let g = genus as i64;
    let chi = degree - g + 1;
    let h0 = (degree > 2 * g - 2).then_some(chi);
    (chi, h0)
}

/// A curve class on one of the surfaces that appear in the degeneration
/// arguments, with enough intersection data to run adjunction.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum AdjunctionInput {
    /// Class m.H on a smooth cubic surface (H^2 = 3, K = -H).
    CubicSurface { hyperplane_multiple: i64 },
    /// Class (a, b) on the smooth quadric (K = (-2, -2)).
    Quadric { bidegree: (i64, i64) },
    /// A member of a q-th pluricanonical pencil: 2g - 2 = q(q+1) c1^2.
    PluricanonicalPencil { power: i64, c1sq: i64 },
    /// Raw intersection data C.C and C.K.
    Explicit { self_intersection: i64, canonical_pairing: i64 },
}

pub fn adjunction_genus(input: &AdjunctionInput) -> Result<i64, InvariantError> {
    let two_g_minus_2 = match *input {
        AdjunctionInput::CubicSurface { hyperplane_multiple: m } => 3 * m * (m - 1),
        AdjunctionInput::Quadric { bidegree: (a, b) } => 2 * a * b - 2 * a - 2 * b,
        AdjunctionInput::PluricanonicalPencil { power: q, c1sq } => q * (q + 1) * c1sq,
        AdjunctionInput::Explicit { self_intersection, canonical_pairing } => {
            self_intersection + canonical_pairing
        }
    };
    if two_g_minus_2 % 2 != 0 {
        return Err(InvariantError::OddAdjunctionPairing(two_g_minus_2));
    }
    Ok(two_g_minus_2 / 2 + 1)
}

/// The arithmetic ledger of dimension counts scattered through the moduli
/// discussions, each recomputed here and compared with its published value.
pub fn dimension_ledger() -> Vec<CheckReport> {
    let mut out = Vec::new();
    let mut entry = |id: &str, section: &str, provenance, expected: i64, computed: i64| {
        out.push(CheckReport::compare(id, section, provenance, &expected, &computed));
    };

    // Matching pairs of cubic surfaces with isomorphic curves.
    entry("gluing-match", "sec4.r7", Provenance::Paper, 17, 22 + 22 - 27);
    // Smoothings of the normal crossing: gluing data plus sections of the
    // normal bundle product, computed with Riemann-Roch at (g, d) = (10, 54).
    let (_, h0) = riemann_roch_curve(10, 54);
    entry(
        "smoothing-total",
        "sec4.r7",
        Provenance::Paper,
        62,
        h0.expect("54 > 2g - 2") + 17,
    );
    // Moduli of smooth sextics: projective sextic coefficients minus the
    // projectivities.
    let d = 6i64;
    let actual = (d + 1) * (d + 2) * (d + 3) / 6 - 16;
    entry("sextic-actual-dim", "sec4.r1", Provenance::Paper, 68, actual);
    // The virtual dimension is the actual one minus the obstruction space,
    // whose dimension is the exact cokernel of the comultiplication map.
    let comult = comultiplication_matrix(6).expect("degree 6 is large enough");
    let coker = comult.rows() - comult.rank_kernel().rank;
    entry(
        "sextic-virtual-dim",
        "sec4.r1",
        Provenance::Paper,
        62,
        actual - coker as i64,
    );
    // The same obstruction space is the wedge square of a 4-dimensional
    // kernel.
    entry("wedge-fibre-dim", "sec4.r7", Provenance::Paper, 6, (4 * 3) / 2);
    // Genus-25 curve moduli and the bidegree-(6,6) locus inside it.
    entry("genus25-moduli-dim", "sec5.4", Provenance::Paper, 72, 3 * 25 - 3);
    entry("bidegree-moduli-dim", "sec5.4", Provenance::Paper, 42, 49 - 1 - 6);
    entry(
        "nonembedded-deformations",
        "sec5.4",
        Provenance::Paper,
        30,
        5 * 3 + 3 * 5,
    );
    // Reversed-orientation K3: moduli Grassmannian versus the index.
    entry("neg-grassmannian-dim", "sec3.ex2", Provenance::Paper, 57, 3 * 19);
    let index = selfdual_index(16, 24);
    assert!(index.is_integer());
    entry(
        "k3-obstruction-rank",
        "sec3.ex2",
        Provenance::Paper,
        5,
        3 * 19 - i64::try_from(index.to_integer()).expect("small index"),
    );
    // Charge-k instanton pairs: 8k - 60 + 52 collapses to 8k - 8.
    for k in 1..=10i64 {
        assert_eq!(8 * k - 60 + 52, 8 * k - 8);
    }
    entry("instanton-pairs", "sec3", Provenance::Derived, 0, 8 * 1 - 60 + 52);
    out
}
