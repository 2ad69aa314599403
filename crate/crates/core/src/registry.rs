//! Registry of every published value the library reproduces. Each check
//! recomputes its quantity from scratch and reports expected vs computed;
//! `verify_paper` is the single entry point the CLI and the test suite share.

use crate::exactnum::{euler_phi, rat, rat_int, Cyclotomic, Rational};
use crate::grouprep::{
    character_average, curve_symmetry_group, determinant_character, invariant_basis,
    sextic_symmetry_group, FiniteGroup, SpaceDescriptor, SymFactor,
};
use crate::hilbert::{fit_odd_cubic, hypersurface_hilbert, HilbertSamples, OddCubic};
use crate::invariants4d::{
    adjunction_genus, dimension_ledger, graded_ring_dimension, mu_ab, riemann_roch_curve,
    selfdual_index, surface_numbers, AdjunctionInput, GradedGenerators, SurfaceKind,
};
use crate::kmline::{
    km_pairings, mmm_from_km, proportionality_ratio, virtual_pairings, PairingVector,
};
use crate::polyalg::{
    comultiplication_matrix, enumerate_bidegree, enumerate_monomials, parse_polynomial,
    solve_linear, ExactMatrix, PolyRing, Polynomial,
};
use crate::report::{self, CheckReport, Provenance};
use crate::smoothcheck::{
    discriminant_eval, pencil_cubic, quadratic_factor_roots, singular_points_search,
    SingularHit, SurfaceParams,
};
use crate::toric::{
    chart_cone, edge_lattice_lengths, even_sum_sublattice, fan_and_intersections,
    moment_polygon, polygon_area, support_numbers, ChartRelations,
};
use num_complex::Complex64;
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

/// The only ids allowed to carry the known-discrepancy status: the two sign
/// slips in the virtual-class arithmetic and the divisor-naming swap.
pub const DISCREPANCY_IDS: [&str; 3] = ["km-mmm-c1c2", "km-pd-print", "tor-naming"];

const SEARCH_ATTEMPTS: u32 = 500;
const SEARCH_TOL: f64 = 1e-9;

pub fn all_checks(seed: u64) -> Vec<CheckReport> {
    let mut out = Vec::new();
    cyclotomic_checks(&mut out);
    polynomial_checks(&mut out);
    group_checks(&mut out);
    hilbert_checks(&mut out);
    km_checks(&mut out, seed);
    toric_checks(&mut out);
    index_checks(&mut out);
    out.extend(dimension_ledger());
    smooth_checks(&mut out, seed);
    out
}

/// Runs the registry (optionally filtered), sorted by id. Exit code 0 when
/// every report passes, 1 on any mismatch, 2 when a filter matches nothing.
pub fn verify_paper(filter: Option<&str>, seed: u64) -> (Vec<CheckReport>, i32) {
    let mut reports = all_checks(seed);
    if let Some(pattern) = filter {
        reports.retain(|r| matches_filter(&r.id, pattern));
    }
    reports.sort_by(|a, b| a.id.cmp(&b.id));
    let code = if filter.is_some() && reports.is_empty() {
        2
    } else {
        report::exit_code(&reports)
    };
    (reports, code)
}

/// `*` matches any run of characters; everything else is literal.
pub fn matches_filter(id: &str, pattern: &str) -> bool {
    fn step(id: &[u8], pattern: &[u8]) -> bool {
        match pattern.split_first() {
            None => id.is_empty(),
            Some((b'*', rest)) => (0..=id.len()).any(|k| step(&id[k..], rest)),
            Some((&c, rest)) => {
                id.split_first().is_some_and(|(&d, tail)| d == c && step(tail, rest))
            }
        }
    }
    step(id.as_bytes(), pattern.as_bytes())
}

fn cyclo_str(value: &Cyclotomic) -> String {
    value.to_rational().map_or_else(|| value.to_string(), |r| r.to_string())
}

fn cyclotomic_checks(out: &mut Vec<CheckReport>) {
    out.push(CheckReport::compare(
        "exact-phi12",
        "sec5.4",
        Provenance::Trivial,
        &4,
        &euler_phi(12),
    ));
    let zeta6 = Cyclotomic::root_of_unity(6, 1).expect("order 6");
    out.push(CheckReport::compare(
        "exact-zeta6-cube",
        "sec5.1",
        Provenance::Trivial,
        &"-1".to_owned(),
        &cyclo_str(&zeta6.pow(3)),
    ));
    let zeta12 = Cyclotomic::root_of_unity(12, 1).expect("order 12");
    out.push(CheckReport::compare(
        "exact-zeta12-order",
        "sec5.4",
        Provenance::Trivial,
        &12,
        &zeta12.multiplicative_order().expect("root of unity"),
    ));
    let embedded = zeta6.embed(12).expect("6 divides 12");
    let agree = if embedded == zeta12.pow(2) { "equal" } else { "differ" };
    out.push(CheckReport::compare(
        "exact-zeta6-embed",
        "sec5.4",
        Provenance::Derived,
        &"equal",
        &agree,
    ));
}

fn comult_cokernel(degree: u32) -> (usize, usize) {
    let matrix = comultiplication_matrix(degree).expect("degree in supported range");
    let rank = matrix.rank_kernel().rank;
    (rank, matrix.rows() - rank)
}

fn polynomial_checks(out: &mut Vec<CheckReport>) {
    out.push(CheckReport::compare(
        "poly-bidegree-66-count",
        "sec5.4",
        Provenance::Paper,
        &49,
        &enumerate_bidegree(6, 6).len(),
    ));
    out.push(CheckReport::compare(
        "poly-sextic-monomials",
        "sec4.r1",
        Provenance::Derived,
        &84,
        &enumerate_monomials(4, &[1, 1, 1, 1], 6).len(),
    ));
    let (rank6, coker6) = comult_cokernel(6);
    out.push(CheckReport::compare(
        "poly-comult-rank-d6",
        "sec4.r1",
        Provenance::Paper,
        &10,
        &rank6,
    ));
    out.push(CheckReport::compare(
        "poly-comult-coker-d6",
        "sec4.r1",
        Provenance::Paper,
        &6,
        &coker6,
    ));
    out.push(CheckReport::compare(
        "poly-comult-coker-d5",
        "sec4.r1",
        Provenance::Derived,
        &0,
        &comult_cokernel(5).1,
    ));
    out.push(CheckReport::compare(
        "poly-comult-coker-d7",
        "sec4.r1",
        Provenance::Derived,
        &20,
        &comult_cokernel(7).1,
    ));
    out.push(substitution_identity_check());
}

/// The denominator-cleared quadric substitution: plugging the two quadrics
/// (scaled by fresh variables u, v standing for the reciprocal coefficients)
/// into the weighted sextic and clearing by 8 must land exactly on the stated
/// expansion. The check reports the difference polynomial, which must print
/// as zero.
fn substitution_identity_check() -> CheckReport {
    let ring = PolyRing::unweighted(&["x1", "y1", "x2", "y2", "hp", "hm", "u", "v"]);
    let parse = |s: &str| parse_polynomial(s, &ring).expect("registry literal");
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
        plus.mul(&u).expect("same ring"),
        minus.mul(&v).expect("same ring"),
        u.clone(),
        v.clone(),
    ];
    let substituted = source
        .substitute(&targets)
        .expect("targets cover every variable")
        .scale(&rat_int(8));
    let expansion = parse("8*x1^6 + 8*y1^6 + 8*x2^6 + 8*y2^6")
        .add(&plus.pow(3).mul(&u.pow(3)).expect("same ring").scale(&rat_int(8)))
        .expect("same ring")
        .add(
            &plus
                .mul(&minus.pow(2))
                .expect("same ring")
                .mul(&u.mul(&v.pow(2)).expect("same ring"))
                .expect("same ring")
                .scale(&rat_int(8)),
        )
        .expect("same ring");
    let difference = substituted.sub(&expansion).expect("same ring");
    CheckReport::compare(
        "poly-substitution-identity",
        "sec5.2",
        Provenance::Paper,
        &"0".to_owned(),
        &difference.to_string(),
    )
}

fn invariant_dimension(group: &FiniteGroup, space: &SpaceDescriptor) -> usize {
    invariant_basis(group, space).expect("shipped generators act on the space").len()
}

fn group_checks(out: &mut Vec<CheckReport>) {
    let sextic_group = sextic_symmetry_group();
    let curve_group = curve_symmetry_group();
    out.push(CheckReport::compare(
        "grp-g-order",
        "sec5.1",
        Provenance::Derived,
        &72,
        &sextic_group.order(),
    ));
    out.push(CheckReport::compare(
        "grp-h-order",
        "sec5.4",
        Provenance::Derived,
        &72,
        &curve_group.order(),
    ));

    let sym6 = SpaceDescriptor::SymPower { degree: 6 };
    out.push(CheckReport::compare(
        "grp-sextic-dim",
        "sec5.1",
        Provenance::Paper,
        &4,
        &invariant_dimension(&sextic_group, &sym6),
    ));
    out.push(CheckReport::compare(
        "grp-sextic-charavg",
        "sec5.1",
        Provenance::Derived,
        &4,
        &character_average(&sextic_group, &sym6).expect("integral average"),
    ));

    let wedge = SpaceDescriptor::DualWedgeSquare;
    let wedge_basis = invariant_basis(&sextic_group, &wedge).expect("wedge action");
    out.push(CheckReport::compare(
        "grp-wedge-dim",
        "sec5.1",
        Provenance::Paper,
        &1,
        &wedge_basis.len(),
    ));
    // Coordinates over the ordered wedge basis e01, e02, e03, e12, e13, e23,
    // normalized so the leading entry is 1: the symplectic-type invariant.
    let vector = &wedge_basis[0];
    let pivot = vector.iter().find(|c| !c.is_zero()).expect("basis vector is nonzero");
    let inverse = pivot.inv().expect("nonzero entry");
    let entries: Vec<String> = vector
        .iter()
        .map(|c| cyclo_str(&c.try_mul(&inverse).expect("same order")))
        .collect();
    out.push(CheckReport::compare(
        "grp-wedge-vector",
        "sec5.1",
        Provenance::Paper,
        &"[1, 0, 0, 0, 0, 1]".to_owned(),
        &format!("[{}]", entries.join(", ")),
    ));

    let bidegree = SpaceDescriptor::Bihomogeneous { left: 6, right: 6 };
    let bidegree_basis = invariant_basis(&curve_group, &bidegree).expect("bidegree action");
    out.push(CheckReport::compare(
        "grp-bidegree-dim",
        "sec5.4",
        Provenance::Paper,
        &5,
        &bidegree_basis.len(),
    ));
    out.push(CheckReport::compare(
        "grp-bidegree-charavg",
        "sec5.4",
        Provenance::Derived,
        &5,
        &character_average(&curve_group, &bidegree).expect("integral average"),
    ));
    // Exponent support of the invariant slice: the homogeneous forms of
    // 1, s^6, t^6, s^6 t^6, s^3 t^3.
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
    let rendered: Vec<String> = support
        .iter()
        .map(|e| format!("({}, {}, {}, {})", e[0], e[1], e[2], e[3]))
        .collect();
    out.push(CheckReport::compare(
        "grp-bidegree-monomials",
        "sec5.4",
        Provenance::Paper,
        &"[(0, 6, 0, 6), (0, 6, 6, 0), (3, 3, 3, 3), (6, 0, 0, 6), (6, 0, 6, 0)]".to_owned(),
        &format!("[{}]", rendered.join(", ")),
    ));

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
    out.push(CheckReport::compare(
        "grp-tensor-dim",
        "sec5.4",
        Provenance::Paper,
        &2,
        &invariant_dimension(&curve_group, &tensor_sum),
    ));

    let one = Cyclotomic::one(sextic_group.ambient_order());
    let determinant_ones =
        determinant_character(&sextic_group).iter().filter(|d| **d == one).count();
    out.push(CheckReport::compare(
        "grp-det-sextic",
        "sec5.1",
        Provenance::Derived,
        &72,
        &determinant_ones,
    ));
}

fn hilbert_checks(out: &mut Vec<CheckReport>) {
    let weights = [1, 1, 1, 1, 2];
    for (id, p, expected) in [("hil-h1", 1, 11), ("hil-h2", 2, 46), ("hil-h5", 5, 535)] {
        out.push(CheckReport::compare(
            id,
            "sec5.3",
            Provenance::Derived,
            &expected,
            &hypersurface_hilbert(&weights, 6, 2, p),
        ));
    }
    let samples = HilbertSamples::new(vec![(1, 11), (2, 46)]).expect("distinct sample points");
    let fit = fit_odd_cubic(&samples).expect("consistent samples");
    out.push(CheckReport::compare(
        "hil-cubic-fit",
        "sec5.3",
        Provenance::Paper,
        &"(4, 7)".to_owned(),
        &format!("({}, {})", fit.alpha, fit.beta),
    ));
    let closed_form = |p: i64| (4 * p * p * p + 7 * p) as u64;
    let passes = (1..=50)
        .filter(|&p| hypersurface_hilbert(&weights, 6, 2, p) == closed_form(p))
        .count();
    out.push(CheckReport::compare(
        "hil-sweep",
        "sec5.3",
        Provenance::Derived,
        &"50/50".to_owned(),
        &format!("{passes}/50"),
    ));
}

fn km_checks(out: &mut Vec<CheckReport>, seed: u64) {
    let canonical = OddCubic { alpha: rat_int(4), beta: rat_int(7) };
    let cover6 = km_pairings(&canonical, 6);
    out.push(CheckReport::compare(
        "km-pairings-cover6",
        "sec5.3",
        Provenance::Paper,
        &"(-11/6, 8)".to_owned(),
        &format!("({}, {})", cover6.deg_l0, cover6.deg_l2),
    ));
    let cover4 = km_pairings(&canonical, 4);
    out.push(CheckReport::compare(
        "km-pairings-cover4",
        "sec5.3",
        Provenance::Paper,
        &"(-11/4, 12)".to_owned(),
        &format!("({}, {})", cover4.deg_l0, cover4.deg_l2),
    ));

    // Cover-1 closed form deg_l0 = -(alpha + beta), deg_l2 = 12 alpha, spot
    // checked on seeded random coefficient pairs.
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0x6b6d);
    let mut passes = 0;
    for _ in 0..10 {
        let alpha = rat(rng.gen_range(-9..=9), rng.gen_range(1..=5));
        let beta = rat(rng.gen_range(-9..=9), rng.gen_range(1..=5));
        let degrees = km_pairings(&OddCubic { alpha: alpha.clone(), beta: beta.clone() }, 1);
        if degrees.deg_l2 == rat_int(12) * &alpha && degrees.deg_l0 == -(&alpha + &beta) {
            passes += 1;
        }
    }
    out.push(CheckReport::compare(
        "km-symbolic-cover1",
        "sec5.3",
        Provenance::Paper,
        &"10/10".to_owned(),
        &format!("{passes}/10"),
    ));

    // Pairing vectors against (D_II, D_III); the published degree pairs above
    // are the inputs, the ratios below are what the virtual-class arithmetic
    // needs.
    let l2_pairings = PairingVector::new(rat_int(12), rat_int(8));
    let l0_pairings = PairingVector::new(rat(-11, 4), rat(-11, 6));
    let l0_ratio = proportionality_ratio(&l2_pairings, &l0_pairings).expect("proportional");
    out.push(CheckReport::compare(
        "km-ratio-l0-l2",
        "sec5.3",
        Provenance::Paper,
        &rat(-11, 48),
        &l0_ratio,
    ));
    let zeta_pairings = PairingVector::new(rat(-1, 4), rat(-1, 6));
    let zeta_ratio = proportionality_ratio(&l2_pairings, &zeta_pairings).expect("proportional");
    out.push(CheckReport::compare(
        "km-zeta-ratio",
        "sec5.3",
        Provenance::Derived,
        &rat(-1, 48),
        &zeta_ratio,
    ));

    let (zeta_l2, zeta_l0) = virtual_pairings(&zeta_ratio, &rat_int(288), &l0_ratio);
    out.push(CheckReport::compare(
        "km-virtual-l2",
        "sec5.3",
        Provenance::Paper,
        &rat_int(-6),
        &zeta_l2,
    ));
    out.push(CheckReport::compare(
        "km-virtual-l0",
        "sec5.3",
        Provenance::Paper,
        &rat(11, 8),
        &zeta_l0,
    ));

    let (sigma1, c1c2) = mmm_from_km(&zeta_l2, &zeta_l0);
    out.push(CheckReport::compare(
        "km-mmm-sigma1",
        "sec5.3",
        Provenance::Paper,
        &rat_int(12),
        &sigma1,
    ));
    out.push(CheckReport::known_discrepancy("km-mmm-c1c2", "sec5.3", "-11/192", c1c2));
    out.push(CheckReport::known_discrepancy(
        "km-pd-print",
        "sec5.3",
        "(1/48, -1/11)",
        format!("({}, {})", zeta_ratio, &zeta_ratio / &l0_ratio),
    ));
}

fn toric_checks(out: &mut Vec<CheckReport>) {
    let polygon = moment_polygon();
    let lattice = even_sum_sublattice();
    let (std_area, norm_area) = polygon_area(&polygon, &lattice);
    out.push(CheckReport::compare(
        "tor-area-std",
        "sec5.3",
        Provenance::Derived,
        &rat_int(18),
        &std_area,
    ));
    out.push(CheckReport::compare(
        "tor-area-norm",
        "sec5.3",
        Provenance::Derived,
        &rat_int(9),
        &norm_area,
    ));
    let omega_sq = rat_int(2) * &norm_area;
    out.push(CheckReport::compare(
        "tor-omega-sq",
        "sec5.3",
        Provenance::Paper,
        &rat_int(18),
        &omega_sq,
    ));
    out.push(CheckReport::compare(
        "tor-l2-sq",
        "sec5.3",
        Provenance::Paper,
        &rat_int(288),
        &(rat_int(16) * &omega_sq),
    ));

    let lengths = edge_lattice_lengths(&polygon, &lattice).expect("vertices in the lattice");
    let o_iii = polygon.edge_index((0, 0), (-4, 0)).expect("edge exists");
    let o_ii = polygon.edge_index((0, 0), (0, -6)).expect("edge exists");
    out.push(CheckReport::compare(
        "tor-edge-o-iii",
        "sec5.3",
        Provenance::Derived,
        &2,
        &lengths[o_iii],
    ));
    out.push(CheckReport::compare(
        "tor-edge-o-ii",
        "sec5.3",
        Provenance::Derived,
        &3,
        &lengths[o_ii],
    ));

    let (fan, matrix) = fan_and_intersections(&polygon, &lattice).expect("smooth moment data");
    let dets: Vec<String> = fan.cone_determinants().iter().map(|d| d.to_string()).collect();
    out.push(CheckReport::compare(
        "tor-cone-dets",
        "sec5.3",
        Provenance::Derived,
        &"[3, 2, 2, 3]".to_owned(),
        &format!("[{}]", dets.join(", ")),
    ));

    // Sub-matrix in the (D_II, D_III) basis; the naming follows the
    // computation-consistent assignment (see tor-naming below).
    let mut sub = ExactMatrix::filled(2, 2, rat_int(0));
    sub.set(0, 0, matrix.get(o_ii, o_ii).clone());
    sub.set(0, 1, matrix.get(o_ii, o_iii).clone());
    sub.set(1, 0, matrix.get(o_iii, o_ii).clone());
    sub.set(1, 1, matrix.get(o_iii, o_iii).clone());
    let rows: Vec<String> = (0..2)
        .map(|i| format!("[{}, {}]", sub.get(i, 0), sub.get(i, 1)))
        .collect();
    out.push(CheckReport::compare(
        "tor-matrix-sub",
        "sec5.3",
        Provenance::Derived,
        &"[[0, 1/2], [1/2, 1/6]]".to_owned(),
        &format!("[{}]", rows.join(", ")),
    ));

    let class = solve_linear(&sub, &[rat_int(12), rat_int(8)]).expect("unimodular sub-basis");
    out.push(CheckReport::compare(
        "tor-polarization-coords",
        "sec5.3",
        Provenance::Derived,
        &"(8, 24)".to_owned(),
        &format!("({}, {})", class[0], class[1]),
    ));
    let self_pairing: Rational = (0..2)
        .map(|i| (0..2).map(|j| &class[i] * &class[j] * sub.get(i, j)).sum::<Rational>())
        .sum();
    out.push(CheckReport::compare(
        "tor-l2-sq-matrix",
        "sec5.3",
        Provenance::Paper,
        &rat_int(288),
        &self_pairing,
    ));

    let supports = support_numbers(&polygon, &lattice).expect("lattice data");
    let support_route: i64 = supports.iter().zip(&lengths).map(|(a, l)| a * *l as i64).sum();
    out.push(CheckReport::compare(
        "tor-support-route",
        "sec5.3",
        Provenance::Derived,
        &18,
        &support_route,
    ));

    let relations = ChartRelations { exponents: [[3, 0], [1, 1]] };
    let chart = chart_cone(&relations, Some(0), (2, 6)).expect("bounded chart");
    let vertices: Vec<String> =
        chart.vertices().iter().map(|(x, y)| format!("({x}, {y})")).collect();
    out.push(CheckReport::compare(
        "tor-chart-vertices",
        "sec5.2",
        Provenance::Paper,
        &"[(-4, 0), (-2, -6), (0, -6), (0, 0)]".to_owned(),
        &format!("[{}]", vertices.join(", ")),
    ));

    out.push(CheckReport::known_discrepancy(
        "tor-naming",
        "sec5.3",
        "D_II = edge O-III, D_III = edge O-II",
        "D_II = edge O-II, D_III = edge O-III",
    ));
}

fn index_checks(out: &mut Vec<CheckReport>) {
    out.push(CheckReport::compare(
        "idx-selfdual-cp2",
        "sec3.ex1",
        Provenance::Paper,
        &rat_int(-1),
        &selfdual_index(2, 4),
    ));
    out.push(CheckReport::compare(
        "idx-selfdual-k3",
        "sec3.ex2",
        Provenance::Paper,
        &rat_int(52),
        &selfdual_index(16, 24),
    ));
    out.push(CheckReport::compare(
        "idx-mu-sextic",
        "sec4.r2",
        Provenance::Derived,
        &124,
        &mu_ab(24, 11),
    ));

    let sextic =
        surface_numbers(&SurfaceKind::Hypersurface { degree: 6 }).expect("integral chi");
    out.push(CheckReport::compare(
        "idx-sextic-c1sq",
        "sec4.r1",
        Provenance::Derived,
        &24,
        &sextic.c1sq,
    ));
    out.push(CheckReport::compare(
        "idx-sextic-c2",
        "sec4.r1",
        Provenance::Derived,
        &108,
        &sextic.c2,
    ));
    out.push(CheckReport::compare(
        "idx-sextic-sigma",
        "sec4.r1",
        Provenance::Derived,
        &-64,
        &sextic.sigma,
    ));
    out.push(CheckReport::compare(
        "idx-sextic-chi",
        "sec4.r1",
        Provenance::Derived,
        &11,
        &sextic.chi_integer(),
    ));

    out.push(CheckReport::compare(
        "idx-graded-deg8",
        "sec2.2",
        Provenance::Paper,
        &30,
        &graded_ring_dimension(&GradedGenerators::rank_two_ring(8), 8),
    ));
    out.push(CheckReport::compare(
        "idx-graded-deg2",
        "sec2.2",
        Provenance::Derived,
        &2,
        &graded_ring_dimension(&GradedGenerators::rank_two_ring(2), 2),
    ));

    let (chi, sections) = riemann_roch_curve(10, 54);
    out.push(CheckReport::compare(
        "idx-rr-genus10",
        "sec4.r7",
        Provenance::Paper,
        &"(45, 45)".to_owned(),
        &format!("({chi}, {})", sections.map_or_else(|| "-".to_owned(), |n| n.to_string())),
    ));

    out.push(CheckReport::compare(
        "idx-genus-cubic",
        "sec4.r7",
        Provenance::Paper,
        &10,
        &adjunction_genus(&AdjunctionInput::CubicSurface { hyperplane_multiple: 3 })
            .expect("even pairing"),
    ));
    out.push(CheckReport::compare(
        "idx-genus-quadric",
        "sec5.4",
        Provenance::Paper,
        &25,
        &adjunction_genus(&AdjunctionInput::Quadric { bidegree: (6, 6) }).expect("even pairing"),
    ));
    out.push(CheckReport::compare(
        "idx-genus-conic",
        "sec4.r7",
        Provenance::Derived,
        &0,
        &adjunction_genus(&AdjunctionInput::Quadric { bidegree: (1, 1) }).expect("even pairing"),
    ));
}

fn classify(hits: &[SingularHit]) -> &'static str {
    if hits.is_empty() {
        "smooth"
    } else {
        "singular"
    }
}

fn smooth_checks(out: &mut Vec<CheckReport>, seed: u64) {
    let b54 = SurfaceParams::new(rat_int(0), rat(-5, 4));
    out.push(CheckReport::compare(
        "smt-disc-zero-b54",
        "sec5.1",
        Provenance::Derived,
        &rat_int(0),
        &discriminant_eval(&b54, (1, 1)),
    ));
    let branch = SurfaceParams::new(rat(-5, 12), rat_int(7));
    out.push(CheckReport::compare(
        "smt-disc-zero-branch",
        "sec5.1",
        Provenance::Derived,
        &rat_int(0),
        &discriminant_eval(&branch, (1, 1)),
    ));
    let equal = SurfaceParams::from_ints(1, 1);
    out.push(CheckReport::compare(
        "smt-disc-generic",
        "sec5.1",
        Provenance::Derived,
        &rat_int(12393),
        &discriminant_eval(&equal, (1, 1)),
    ));

    // Moduli symmetry (A,B,eps) -> (-A,-B,-eps) on seeded random parameters.
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0x736d_7464);
    let mut passes = 0;
    for _ in 0..100 {
        let a = rat(rng.gen_range(-20..=20), rng.gen_range(1..=9));
        let b = rat(rng.gen_range(-20..=20), rng.gen_range(1..=9));
        let s1 = if rng.gen_range(0..2) == 0 { 1i8 } else { -1 };
        let s2 = if rng.gen_range(0..2) == 0 { 1i8 } else { -1 };
        let direct = discriminant_eval(&SurfaceParams::new(a.clone(), b.clone()), (s1, s2));
        let mirrored = discriminant_eval(&SurfaceParams::new(-a, -b), (-s1, -s2));
        if direct == mirrored {
            passes += 1;
        }
    }
    out.push(CheckReport::compare(
        "smt-disc-symmetry",
        "sec5.1",
        Provenance::Derived,
        &"100/100".to_owned(),
        &format!("{passes}/100"),
    ));

    // Search verdicts record what the searches actually establish: the
    // printed-formula zeros at B = -5/4 and (-5/12, 7) sit on smooth
    // surfaces, while (1,1) and B = -3/2 carry certified singular points.
    let search_cases: [(&str, SurfaceParams, &str, Provenance); 4] = [
        ("smt-search-fermat", SurfaceParams::from_ints(0, 0), "smooth", Provenance::Trivial),
        ("smt-search-b54", b54.clone(), "smooth", Provenance::Derived),
        ("smt-search-equal", equal.clone(), "singular", Provenance::Derived),
        (
            "smt-search-b32",
            SurfaceParams::new(rat_int(0), rat(-3, 2)),
            "singular",
            Provenance::Derived,
        ),
    ];
    for (idx, (id, params, expected, provenance)) in search_cases.iter().enumerate() {
        let hits =
            singular_points_search(params, SEARCH_ATTEMPTS, SEARCH_TOL, seed ^ (idx as u64 + 1));
        out.push(CheckReport::compare(id, "sec5.1", *provenance, expected, &classify(&hits)));
    }

    let first = singular_points_search(&equal, 200, SEARCH_TOL, seed ^ 0x5eed);
    let second = singular_points_search(&equal, 200, SEARCH_TOL, seed ^ 0x5eed);
    let identical = first.len() == second.len()
        && first.iter().zip(&second).all(|(a, b)| {
            a.residual == b.residual && a.point.iter().zip(&b.point).all(|(p, q)| p == q)
        });
    out.push(CheckReport::compare(
        "smt-search-determinism",
        "sec5.1",
        Provenance::Trivial,
        &"identical",
        &if identical { "identical" } else { "different" },
    ));

    let lambda_residual = |params: &SurfaceParams| -> f64 {
        let (r1, r2) = quadratic_factor_roots(params).expect("A + B nonzero");
        pencil_cubic(params, r1).norm().max(pencil_cubic(params, r2).norm())
    };
    out.push(CheckReport::float_within(
        "smt-lambda-roots-11",
        "sec5.4",
        Provenance::Derived,
        1e-12,
        lambda_residual(&equal),
    ));

    // Draws follow the conditioning bound worked out for the root check:
    // nonzero integers in [-4, 4] with |A + B| >= 2.
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0x6c61_6d62);
    let mut worst: f64 = 0.0;
    for _ in 0..100 {
        let (a, b) = loop {
            let a: i64 = rng.gen_range(-4..=4);
            let b: i64 = rng.gen_range(-4..=4);
            if a != 0 && b != 0 && (a + b).abs() >= 2 {
                break (a, b);
            }
        };
        worst = worst.max(lambda_residual(&SurfaceParams::from_ints(a, b)));
    }
    out.push(CheckReport::float_within(
        "smt-lambda-sweep",
        "sec5.4",
        Provenance::Derived,
        1e-12,
        worst,
    ));

    let p32 = SurfaceParams::from_ints(3, -2);
    let at_one = pencil_cubic(&p32, Complex64::new(1.0, 0.0));
    out.push(CheckReport::float_within(
        "smt-pencil-8a",
        "sec5.4",
        Provenance::Trivial,
        1e-12,
        (at_one - Complex64::new(24.0, 0.0)).norm(),
    ));
}
