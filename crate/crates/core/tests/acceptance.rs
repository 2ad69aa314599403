//! Acceptance gate: one test per published criterion, so the test listing
//! reads as a pass/fail line per criterion. Tolerances are pinned here and
//! must not be loosened to make a line green.

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use sextic_core::exactnum::{rat, rat_int, Rational};
use sextic_core::grouprep::{
    character_average, curve_symmetry_group, invariant_basis, sextic_symmetry_group,
    SpaceDescriptor, SymFactor,
};
use sextic_core::hilbert::{fit_odd_cubic, hypersurface_hilbert, HilbertSamples, OddCubic};
use sextic_core::invariants4d::{
    adjunction_genus, dimension_ledger, graded_ring_dimension, mu_ab, riemann_roch_curve,
    selfdual_index, surface_numbers, AdjunctionInput, GradedGenerators, SurfaceKind,
};
use sextic_core::kmline::{
    km_degree, km_pairings, mmm_from_km, proportionality_ratio, virtual_pairings, PairingVector,
};
use sextic_core::polyalg::{
    comultiplication_matrix, enumerate_bidegree, parse_polynomial, solve_linear, ExactMatrix,
    PolyRing, Polynomial,
};
use sextic_core::registry;
use sextic_core::report::{self, Status};
use sextic_core::smoothcheck::{
    discriminant_eval, pencil_cubic, quadratic_factor_roots, singular_points_search,
    SurfaceParams,
};
use sextic_core::toric::{
    chart_cone, edge_lattice_lengths, even_sum_sublattice, fan_and_intersections,
    moment_polygon, polygon_area, support_numbers, ChartRelations,
};

const SEARCH_TOL: f64 = 1e-9;
const ROOT_TOL: f64 = 1e-12;

#[test]
fn criterion_1_invariant_dimensions() {
    let sextic_group = sextic_symmetry_group();
    let curve_group = curve_symmetry_group();

    let sym6 = SpaceDescriptor::SymPower { degree: 6 };
    assert_eq!(invariant_basis(&sextic_group, &sym6).unwrap().len(), 4);
    assert_eq!(character_average(&sextic_group, &sym6).unwrap(), 4);

    let wedge = SpaceDescriptor::DualWedgeSquare;
    let wedge_basis = invariant_basis(&sextic_group, &wedge).unwrap();
    assert_eq!(wedge_basis.len(), 1);
    assert_eq!(character_average(&sextic_group, &wedge).unwrap(), 1);
    // Over the ordered wedge basis e01..e23 the invariant must be a multiple
    // of e01 + e23, the symplectic-type pairing dx1^dy1 + dx2^dy2.
    let vector = &wedge_basis[0];
    assert!(!vector[0].is_zero());
    assert_eq!(vector[0], vector[5]);
    for middle in &vector[1..5] {
        assert!(middle.is_zero(), "stray wedge component");
    }

    let bidegree = SpaceDescriptor::Bihomogeneous { left: 6, right: 6 };
    let bidegree_basis = invariant_basis(&curve_group, &bidegree).unwrap();
    assert_eq!(bidegree_basis.len(), 5);
    assert_eq!(character_average(&curve_group, &bidegree).unwrap(), 5);
    // Exponent support: the homogeneous forms of 1, s^6, t^6, s^6 t^6, s^3 t^3.
    let monomials = enumerate_bidegree(6, 6);
    let mut support: Vec<Vec<u32>> = Vec::new();
    for vector in &bidegree_basis {
        for (idx, value) in vector.iter().enumerate() {
            if !value.is_zero() && !support.contains(&monomials[idx].0) {
                support.push(monomials[idx].0.clone());
            }
        }
    }
    support.sort();
    let expected: Vec<Vec<u32>> = vec![
        vec![0, 6, 0, 6],
        vec![0, 6, 6, 0],
        vec![3, 3, 3, 3],
        vec![6, 0, 0, 6],
        vec![6, 0, 6, 0],
    ];
    assert_eq!(support, expected);

    let tensor_sum = SpaceDescriptor::Sum(vec![
        SpaceDescriptor::TensorSym {
            factors: vec![
                SymFactor { vars: vec![0, 1], degree: 4 },
                SymFactor { vars: vec![2, 3], degree: 2 },
            ],
        },
        SpaceDescriptor::TensorSym {
            factors: vec![
                SymFactor { vars: vec![0, 1], degree: 2 },
                SymFactor { vars: vec![2, 3], degree: 4 },
            ],
        },
    ]);
    assert_eq!(invariant_basis(&curve_group, &tensor_sum).unwrap().len(), 2);
    assert_eq!(character_average(&curve_group, &tensor_sum).unwrap(), 2);
}

#[test]
fn criterion_2_hilbert_function() {
    let weights = [1, 1, 1, 1, 2];
    let mut samples = Vec::new();
    for p in 1..=50i64 {
        let counted = hypersurface_hilbert(&weights, 6, 2, p);
        let closed_form = (4 * p * p * p + 7 * p) as u64;
        assert_eq!(counted, closed_form, "p = {p}");
        if p <= 4 {
            samples.push((p, counted as i64));
        }
    }
    let fit = fit_odd_cubic(&HilbertSamples::new(samples).unwrap()).unwrap();
    assert_eq!(fit.alpha, rat_int(4));
    assert_eq!(fit.beta, rat_int(7));
}

#[test]
fn criterion_3_km_degrees() {
    let canonical = OddCubic { alpha: rat_int(4), beta: rat_int(7) };
    let cover6 = km_pairings(&canonical, 6);
    assert_eq!(cover6.deg_l0, rat(-11, 6));
    assert_eq!(cover6.deg_l2, rat_int(8));
    let cover4 = km_pairings(&canonical, 4);
    assert_eq!(cover4.deg_l0, rat(-11, 4));
    assert_eq!(cover4.deg_l2, rat_int(12));

    // d_p = alpha (4 pb^3 + pb) + 2 beta pb with pb = p - 1/2, as an exact
    // identity over random coefficient pairs.
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    for _ in 0..20 {
        let alpha = rat(rng.gen_range(-60..=60), rng.gen_range(1..=12));
        let beta = rat(rng.gen_range(-60..=60), rng.gen_range(1..=12));
        let hilbert = OddCubic { alpha: alpha.clone(), beta: beta.clone() };
        for p in 1..=20i64 {
            let pb = rat_int(p) - rat(1, 2);
            let expected =
                &alpha * (rat_int(4) * &pb * &pb * &pb + &pb) + rat_int(2) * &beta * &pb;
            assert_eq!(km_degree(&hilbert, p), expected, "p = {p}");
        }
    }
}

#[test]
fn criterion_4_toric_intersection_numbers() {
    let polygon = moment_polygon();
    let lattice = even_sum_sublattice();
    let (std_area, norm_area) = polygon_area(&polygon, &lattice);
    assert_eq!(std_area, rat_int(18));
    assert_eq!(norm_area, rat_int(9));
    let omega_sq = rat_int(2) * &norm_area;
    assert_eq!(omega_sq, rat_int(18));
    let l2_sq_area_route = rat_int(16) * &omega_sq;
    assert_eq!(l2_sq_area_route, rat_int(288));

    let lengths = edge_lattice_lengths(&polygon, &lattice).unwrap();
    let o_iii = polygon.edge_index((0, 0), (-4, 0)).unwrap();
    let o_ii = polygon.edge_index((0, 0), (0, -6)).unwrap();
    assert_eq!((lengths[o_iii], lengths[o_ii]), (2, 3));

    // The chart relations must reproduce the moment polygon vertex for vertex.
    let relations = ChartRelations { exponents: [[3, 0], [1, 1]] };
    let chart = chart_cone(&relations, Some(0), (2, 6)).unwrap();
    assert_eq!(chart.vertices(), polygon.vertices());

    // Intersection-matrix route to the polarization square.
    let (_, matrix) = fan_and_intersections(&polygon, &lattice).unwrap();
    let mut sub = ExactMatrix::filled(2, 2, rat_int(0));
    sub.set(0, 0, matrix.get(o_ii, o_ii).clone());
    sub.set(0, 1, matrix.get(o_ii, o_iii).clone());
    sub.set(1, 0, matrix.get(o_iii, o_ii).clone());
    sub.set(1, 1, matrix.get(o_iii, o_iii).clone());
    let class = solve_linear(&sub, &[rat_int(12), rat_int(8)]).unwrap();
    let l2_sq_matrix_route: Rational = (0..2)
        .map(|i| (0..2).map(|j| &class[i] * &class[j] * sub.get(i, j)).sum::<Rational>())
        .sum();
    assert_eq!(l2_sq_matrix_route, l2_sq_area_route);

    // Third route through the support numbers and edge lengths.
    let supports = support_numbers(&polygon, &lattice).unwrap();
    let support_route: i64 = supports.iter().zip(&lengths).map(|(a, l)| a * *l as i64).sum();
    assert_eq!(support_route, 18);
}

#[test]
fn criterion_5_virtual_class_ledger() {
    let l2 = PairingVector::new(rat_int(12), rat_int(8));
    let l0 = PairingVector::new(rat(-11, 4), rat(-11, 6));
    let zeta = PairingVector::new(rat(-1, 4), rat(-1, 6));
    let l0_ratio = proportionality_ratio(&l2, &l0).unwrap();
    let zeta_ratio = proportionality_ratio(&l2, &zeta).unwrap();
    assert_eq!(zeta_ratio, rat(-1, 48));

    let (zeta_l2, zeta_l0) = virtual_pairings(&zeta_ratio, &rat_int(288), &l0_ratio);
    assert_eq!(zeta_l2, rat_int(-6));
    assert_eq!(zeta_l0, rat(11, 8));

    let (sigma1, c1c2) = mmm_from_km(&zeta_l2, &zeta_l0);
    assert_eq!(sigma1, rat_int(12));
    assert_eq!(c1c2, rat(11, 192));

    // The two published values this arithmetic contradicts stay flagged, not
    // silently corrected and not failing.
    let reports = registry::all_checks(0);
    for id in ["km-mmm-c1c2", "km-pd-print"] {
        let entry = reports.iter().find(|r| r.id == id).expect("registered check");
        assert_eq!(entry.status, Status::KnownDiscrepancy, "{id}");
    }
}

#[test]
fn criterion_6_index_arithmetic() {
    assert_eq!(selfdual_index(2, 4), rat_int(-1));
    assert_eq!(selfdual_index(16, 24), rat_int(52));
    assert_eq!(mu_ab(24, 11), 124);
    assert_eq!(mu_ab(24, 11), 2 * 62);

    let sextic = surface_numbers(&SurfaceKind::Hypersurface { degree: 6 }).unwrap();
    assert_eq!(sextic.chi_integer(), 11);
    assert_eq!(sextic.c1sq, 24);
    let comult = comultiplication_matrix(6).unwrap();
    let obstruction = comult.rows() - comult.rank_kernel().rank;
    assert_eq!(obstruction, 6);
    assert_eq!(68 - obstruction as i64, 62);

    assert_eq!(graded_ring_dimension(&GradedGenerators::rank_two_ring(8), 8), 30);
    assert_eq!(riemann_roch_curve(10, 54), (45, Some(45)));
    assert_eq!(
        adjunction_genus(&AdjunctionInput::CubicSurface { hyperplane_multiple: 3 }),
        Ok(10)
    );
    assert_eq!(adjunction_genus(&AdjunctionInput::Quadric { bidegree: (6, 6) }), Ok(25));

    let ledger = dimension_ledger();
    let computed = |id: &str| {
        let entry = ledger.iter().find(|r| r.id == id).expect("ledger entry");
        assert_eq!(entry.status, Status::Match, "{id}");
        entry.computed.clone()
    };
    assert_eq!(computed("sextic-actual-dim"), "68");
    assert_eq!(computed("sextic-virtual-dim"), "62");
    assert_eq!(computed("gluing-match"), "17");
    assert_eq!(computed("bidegree-moduli-dim"), "42");
    assert_eq!(computed("genus25-moduli-dim"), "72");
    assert_eq!(computed("nonembedded-deformations"), "30");
    assert_eq!(computed("neg-grassmannian-dim"), "57");
    for k in 1..=10i64 {
        assert_eq!(8 * k - 60 + 52, 8 * k - 8, "charge {k}");
    }
}

/// Deliberately failing where the target verdicts disagree with the oracle
/// verdicts pinned by smt-search-b54 and smt-search-equal: the search cannot
/// find a singular point on the smooth B = -5/4 surface, and it does find
/// certified singular points at (1, 1). Left red rather than weakened.
#[test]
fn criterion_7_discriminant_and_search() {
    let mut failures: Vec<String> = Vec::new();

    let b54 = SurfaceParams::new(rat_int(0), rat(-5, 4));
    let branch = SurfaceParams::new(rat(-5, 12), rat_int(7));
    let equal = SurfaceParams::from_ints(1, 1);
    if discriminant_eval(&b54, (1, 1)) != rat_int(0) {
        failures.push("discriminant at (0, -5/4) is nonzero".to_owned());
    }
    if discriminant_eval(&branch, (1, 1)) != rat_int(0) {
        failures.push("discriminant at (-5/12, 7) is nonzero".to_owned());
    }
    if discriminant_eval(&equal, (1, 1)) == rat_int(0) {
        failures.push("discriminant at (1, 1) vanishes".to_owned());
    }

    let hits_b54 = singular_points_search(&b54, 1000, SEARCH_TOL, 0);
    if !hits_b54.iter().any(|h| h.residual < SEARCH_TOL) {
        failures.push(format!(
            "no singular point with residual < {SEARCH_TOL:e} at (0, -5/4) in 1000 attempts"
        ));
    }
    let hits_fermat = singular_points_search(&SurfaceParams::from_ints(0, 0), 1000, SEARCH_TOL, 0);
    if !hits_fermat.is_empty() {
        failures.push(format!("{} singular points at (0, 0)", hits_fermat.len()));
    }
    let hits_equal = singular_points_search(&equal, 1000, SEARCH_TOL, 0);
    if !hits_equal.is_empty() {
        failures.push(format!("{} singular points at (1, 1)", hits_equal.len()));
    }

    // lambda+- roots of the quadratic factor kill the pencil cubic to within
    // the root tolerance; draws keep |A + B| >= 2 so the factorization stays
    // well conditioned.
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    let mut worst: f64 = 0.0;
    for _ in 0..100 {
        let (a, b) = loop {
            let a: i64 = rng.gen_range(-4..=4);
            let b: i64 = rng.gen_range(-4..=4);
            if a != 0 && b != 0 && (a + b).abs() >= 2 {
                break (a, b);
            }
        };
        let params = SurfaceParams::from_ints(a, b);
        let (r1, r2) = quadratic_factor_roots(&params).unwrap();
        worst = worst.max(pencil_cubic(&params, r1).norm());
        worst = worst.max(pencil_cubic(&params, r2).norm());
    }
    if !(worst < ROOT_TOL) {
        failures.push(format!("worst lambda root residual {worst:.3e} >= {ROOT_TOL:e}"));
    }

    assert!(failures.is_empty(), "{}", failures.join("; "));
}

#[test]
fn criterion_8_substitution_identity() {
    let ring = PolyRing::unweighted(&["x1", "y1", "x2", "y2", "hp", "hm", "u", "v"]);
    let parse = |s: &str| parse_polynomial(s, &ring).unwrap();
    let source = parse("x1^6 + y1^6 + x2^6 + y2^6 + hp^3 + hp*hm^2");
    let plus = parse("x1*y1 + x2*y2");
    let minus = parse("x1*y1 - x2*y2");
    let u = Polynomial::variable(&ring, 6);
    let v = Polynomial::variable(&ring, 7);
    let targets = vec![
        Polynomial::variable(&ring, 0),
        Polynomial::variable(&ring, 1),
        Polynomial::variable(&ring, 2),
        Polynomial::variable(&ring, 3),
        plus.mul(&u).unwrap(),
        minus.mul(&v).unwrap(),
        u.clone(),
        v.clone(),
    ];
    let substituted = source.substitute(&targets).unwrap().scale(&rat_int(8));
    let expansion = parse("8*x1^6 + 8*y1^6 + 8*x2^6 + 8*y2^6")
        .add(&plus.pow(3).mul(&u.pow(3)).unwrap().scale(&rat_int(8)))
        .unwrap()
        .add(
            &plus
                .mul(&minus.pow(2))
                .unwrap()
                .mul(&u.mul(&v.pow(2)).unwrap())
                .unwrap()
                .scale(&rat_int(8)),
        )
        .unwrap();
    let difference = substituted.sub(&expansion).unwrap();
    assert!(difference.is_zero(), "difference = {difference}");
}

#[test]
fn criterion_9_determinism() {
    let (first, first_code) = registry::verify_paper(None, 7);
    let (second, second_code) = registry::verify_paper(None, 7);
    assert_eq!(first_code, 0);
    assert_eq!(second_code, 0);
    let first_json = report::to_json(&first).unwrap();
    assert_eq!(first_json, report::to_json(&second).unwrap());
    // schema round-trip
    let reparsed = report::from_json(&first_json).unwrap();
    assert_eq!(reparsed, first);
    assert_eq!(report::to_json(&reparsed).unwrap(), first_json);
}
