//! Lattice polygons with a designated sublattice, normalized areas, edge
//! lattice lengths, fans of inward normals, boundary-divisor intersection
//! matrices of simplicial toric surfaces, and derivation of a moment polygon
//! from monomial chart relations.
//!
//! All fan computations happen in coordinates of the designated sublattice;
//! orbifold (non-smooth) cones produce rational intersection numbers rather
//! than errors.

use crate::exactnum::{rat_int, Rational};
use crate::polyalg::ExactMatrix;
use num_traits::Zero;
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ToricError {
    #[error("lattice basis is singular")]
    SingularLatticeBasis,
    #[error("a polygon needs at least 3 vertices, got {0}")]
    TooFewVertices(usize),
    #[error("vertices are not strictly convex in cyclic order")]
    NotConvex,
    #[error("vertex {0:?} does not lie in the designated sublattice")]
    VertexNotInLattice((i64, i64)),
    #[error("fan is degenerate")]
    DegenerateFan,
    #[error("chart region is unbounded")]
    UnboundedRegion,
    #[error("chart region has a non-integral vertex ({0}, {1})")]
    NonIntegralVertex(Rational, Rational),
}

fn gcd_i64(a: i64, b: i64) -> i64 {
    let (mut a, mut b) = (a.abs(), b.abs());
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

fn det2(a: (i64, i64), b: (i64, i64)) -> i64 {
    a.0 * b.1 - a.1 * b.0
}

/// A finite-index sublattice of Z^2, stored as two generators in positively
/// oriented order (the constructor swaps them if needed), so that lattice
/// coordinates preserve the orientation of polygons.
#[derive(Debug, Clone)]
pub struct SubLattice {
    basis: [(i64, i64); 2],
}

impl SubLattice {
    pub fn new(v1: (i64, i64), v2: (i64, i64)) -> Result<SubLattice, ToricError> {
        match det2(v1, v2) {
            0 => Err(ToricError::SingularLatticeBasis),
            d if d < 0 => Ok(SubLattice { basis: [v2, v1] }),
            _ => Ok(SubLattice { basis: [v1, v2] }),
        }
    }

    pub fn standard() -> SubLattice {
        SubLattice { basis: [(1, 0), (0, 1)] }
    }

    /// The sublattice of points whose pairing with `functional` is even.
    pub fn from_even_functional(functional: (i64, i64)) -> SubLattice {
        let parity = (functional.0.rem_euclid(2), functional.1.rem_euclid(2));
        let basis = match parity {
            (0, 0) => [(1, 0), (0, 1)],
            (1, 0) => [(2, 0), (0, 1)],
            (0, 1) => [(1, 0), (0, 2)],
            (1, 1) => [(1, 1), (0, 2)],
            _ => unreachable!(),
        };
        SubLattice { basis }
    }

    pub fn basis(&self) -> [(i64, i64); 2] {
        self.basis
    }

    pub fn determinant(&self) -> i64 {
        det2(self.basis[0], self.basis[1])
    }

    /// Index of the sublattice in Z^2.
    pub fn index(&self) -> i64 {
        self.determinant()
    }

    /// Coordinates of a point in the lattice basis, if the point lies in the
    /// lattice.
    pub fn to_coords(&self, point: (i64, i64)) -> Option<(i64, i64)> {
        let d = self.determinant();
        let n_num = det2(point, self.basis[1]);
        let m_num = det2(self.basis[0], point);
        if n_num % d != 0 || m_num % d != 0 {
            return None;
        }
        Some((n_num / d, m_num / d))
    }

    pub fn from_coords(&self, coords: (i64, i64)) -> (i64, i64) {
        (
            coords.0 * self.basis[0].0 + coords.1 * self.basis[1].0,
            coords.0 * self.basis[0].1 + coords.1 * self.basis[1].1,
        )
    }

    pub fn contains(&self, point: (i64, i64)) -> bool {
        self.to_coords(point).is_some()
    }

    /// Hermite-style canonical basis, used for equality: columns
    /// ((a, c), (0, d)) with a, d > 0 and 0 <= c < d.
    fn canonical_basis(&self) -> [(i64, i64); 2] {
        let [u, v] = self.basis;
        // Column operations: make the second generator's first coordinate 0.
        let g = gcd_i64(u.0, v.0);
        let (mut h1, mut h2);
        if g == 0 {
            // Both generators vertical is impossible (det != 0), so this
            // branch means u.0 = v.0 = 0 never happens; keep for totality.
            h1 = u;
            h2 = v;
        } else {
            // Extended gcd on the first coordinates.
            let (mut s, mut t, mut r0, mut r1) = (1i64, 0i64, u.0, v.0);
            let (mut s1, mut t1) = (0i64, 1i64);
            while r1 != 0 {
                let q = r0.div_euclid(r1);
                (r0, r1) = (r1, r0 - q * r1);
                (s, s1) = (s1, s - q * s1);
                (t, t1) = (t1, t - q * t1);
            }
            h1 = (s * u.0 + t * v.0, s * u.1 + t * v.1);
            h2 = (
                (u.0 / r0) * v.0 - (v.0 / r0) * u.0,
                (u.0 / r0) * v.1 - (v.0 / r0) * u.1,
            );
        }
        if h1.0 < 0 {
            h1 = (-h1.0, -h1.1);
        }
        if h2.1 < 0 {
            h2 = (-h2.0, -h2.1);
        }
        debug_assert_eq!(h2.0, 0);
        debug_assert!(h2.1 > 0);
        h1.1 = h1.1.rem_euclid(h2.1);
        [h1, h2]
    }
}

impl PartialEq for SubLattice {
    fn eq(&self, other: &Self) -> bool {
        self.canonical_basis() == other.canonical_basis()
    }
}

impl Eq for SubLattice {}

/// Convex lattice polygon, stored counterclockwise starting from the
/// lexicographically smallest vertex, optionally with a designated sublattice
/// containing all vertices.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LatticePolygon {
    vertices: Vec<(i64, i64)>,
    lattice: Option<SubLattice>,
}

impl LatticePolygon {
    /// Accepts the vertex cycle in either orientation, reorients it
    /// counterclockwise, and rotates it to the canonical starting vertex.
    /// Rejects fewer than 3 vertices and any three collinear neighbours.
    pub fn new(vertices: Vec<(i64, i64)>) -> Result<LatticePolygon, ToricError> {
        if vertices.len() < 3 {
            return Err(ToricError::TooFewVertices(vertices.len()));
        }
        let mut vertices = vertices;
        let doubled: i64 = shoelace_doubled(&vertices);
        if doubled == 0 {
            return Err(ToricError::NotConvex);
        }
        if doubled < 0 {
            vertices.reverse();
        }
        let n = vertices.len();
        for i in 0..n {
            let a = vertices[i];
            let b = vertices[(i + 1) % n];
            let c = vertices[(i + 2) % n];
            let turn = det2((b.0 - a.0, b.1 - a.1), (c.0 - b.0, c.1 - b.1));
            if turn <= 0 {
                return Err(ToricError::NotConvex);
            }
        }
        let start = (0..n)
            .min_by_key(|&i| vertices[i])
            .expect("nonempty vertex list");
        vertices.rotate_left(start);
        Ok(LatticePolygon { vertices, lattice: None })
    }

    /// Attaches a designated sublattice; every vertex must lie in it.
    pub fn with_lattice(mut self, lattice: SubLattice) -> Result<LatticePolygon, ToricError> {
        if let Some(v) = self.vertices.iter().find(|v| !lattice.contains(**v)) {
            return Err(ToricError::VertexNotInLattice(*v));
        }
        self.lattice = Some(lattice);
        Ok(self)
    }

    pub fn vertices(&self) -> &[(i64, i64)] {
        &self.vertices
    }

    pub fn lattice(&self) -> Option<&SubLattice> {
        self.lattice.as_ref()
    }

    pub fn translate(&self, offset: (i64, i64)) -> LatticePolygon {
        let vertices = self
            .vertices
            .iter()
            .map(|v| (v.0 + offset.0, v.1 + offset.1))
            .collect();
        LatticePolygon::new(vertices)
            .expect("translation preserves validity")
            .attach_option(self.lattice.clone())
    }

    fn attach_option(mut self, lattice: Option<SubLattice>) -> LatticePolygon {
        self.lattice = lattice;
        self
    }

    /// Edge index (in canonical edge order) of the edge with the given
    /// endpoints, in either direction.
    pub fn edge_index(&self, a: (i64, i64), b: (i64, i64)) -> Option<usize> {
        let n = self.vertices.len();
        (0..n).find(|&i| {
            let p = self.vertices[i];
            let q = self.vertices[(i + 1) % n];
            (p, q) == (a, b) || (p, q) == (b, a)
        })
    }

}

fn shoelace_doubled(vertices: &[(i64, i64)]) -> i64 {
    let n = vertices.len();
    (0..n)
        .map(|i| det2(vertices[i], vertices[(i + 1) % n]))
        .sum()
}

/// (standard shoelace area, area normalized by the sublattice index).
pub fn polygon_area(poly: &LatticePolygon, lat: &SubLattice) -> (Rational, Rational) {
    let standard = rat_int(shoelace_doubled(poly.vertices())) / rat_int(2);
    let normalized = &standard / rat_int(lat.index());
    (standard, normalized)
}

/// Per edge, the number of lattice steps: the edge vector divided by the
/// primitive sublattice vector in its direction.
pub fn edge_lattice_lengths(
    poly: &LatticePolygon,
    lat: &SubLattice,
) -> Result<Vec<u64>, ToricError> {
    let n = poly.vertices().len();
    let mut out = Vec::with_capacity(n);
    for i in 0..n {
        let p = poly.vertices()[i];
        let q = poly.vertices()[(i + 1) % n];
        let pc = lat.to_coords(p).ok_or(ToricError::VertexNotInLattice(p))?;
        let qc = lat.to_coords(q).ok_or(ToricError::VertexNotInLattice(q))?;
        out.push(gcd_i64(qc.0 - pc.0, qc.1 - pc.1) as u64);
    }
    Ok(out)
}

/// Fan of primitive inward edge normals in lattice coordinates, one ray per
/// edge in canonical edge order; two-dimensional cones are consecutive pairs.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Fan {
    rays: Vec<(i64, i64)>,
}

impl Fan {
    pub fn rays(&self) -> &[(i64, i64)] {
        &self.rays
    }

    pub fn cones(&self) -> Vec<((i64, i64), (i64, i64))> {
        let n = self.rays.len();
        (0..n).map(|i| (self.rays[i], self.rays[(i + 1) % n])).collect()
    }

    /// |det| of each cone's ray pair: 1 for smooth cones, the orbifold
    /// multiplicity otherwise.
    pub fn cone_determinants(&self) -> Vec<i64> {
        self.cones().iter().map(|(a, b)| det2(*a, *b).abs()).collect()
    }
}

fn primitive(v: (i64, i64)) -> (i64, i64) {
    let g = gcd_i64(v.0, v.1);
    (v.0 / g, v.1 / g)
}

fn lattice_edges(poly: &LatticePolygon, lat: &SubLattice) -> Result<Vec<(i64, i64)>, ToricError> {
    let n = poly.vertices().len();
    let mut coords = Vec::with_capacity(n);
    for &v in poly.vertices() {
        coords.push(lat.to_coords(v).ok_or(ToricError::VertexNotInLattice(v))?);
    }
    Ok((0..n)
        .map(|i| {
            let p = coords[i];
            let q = coords[(i + 1) % n];
            (q.0 - p.0, q.1 - p.1)
        })
        .collect())
}

/// Fan of the polygon and the symmetric divisor intersection matrix, indexed
/// by edges in canonical order. Self-intersections come from the wall
/// relation around each ray: for neighbours u, w of v,
/// D_v^2 = -det(u, w) / (det(u, v) det(v, w)); adjacent divisors meet in
/// 1/det of their cone, distant ones are disjoint.
pub fn fan_and_intersections(
    poly: &LatticePolygon,
    lat: &SubLattice,
) -> Result<(Fan, ExactMatrix<Rational>), ToricError> {
    let edges = lattice_edges(poly, lat)?;
    // Inward normal of a counterclockwise edge is the edge rotated by +90.
    let rays: Vec<(i64, i64)> = edges.iter().map(|e| primitive((-e.1, e.0))).collect();
    let n = rays.len();
    for i in 0..n {
        for j in (i + 1)..n {
            if rays[i] == rays[j] {
                return Err(ToricError::DegenerateFan);
            }
        }
        if det2(rays[i], rays[(i + 1) % n]) <= 0 {
            return Err(ToricError::DegenerateFan);
        }
    }
    let mut matrix = ExactMatrix::filled(n, n, Rational::zero());
    for i in 0..n {
        let prev = rays[(i + n - 1) % n];
        let next = rays[(i + 1) % n];
        let self_int = rat_int(-det2(prev, next))
            / rat_int(det2(prev, rays[i]) * det2(rays[i], next));
        matrix.set(i, i, self_int);
        let adjacent = rat_int(1) / rat_int(det2(rays[i], next));
        matrix.set(i, (i + 1) % n, adjacent.clone());
        matrix.set((i + 1) % n, i, adjacent);
    }
    Ok((Fan { rays }, matrix))
}

/// Support numbers of the polygon: a_i with the polygon equal to
/// {x : <x, ray_i> >= -a_i} in lattice coordinates. The polarization divisor
/// is sum a_i D_i.
pub fn support_numbers(poly: &LatticePolygon, lat: &SubLattice) -> Result<Vec<i64>, ToricError> {
    let edges = lattice_edges(poly, lat)?;
    let n = poly.vertices().len();
    let mut out = Vec::with_capacity(n);
    for i in 0..n {
        let ray = primitive((-edges[i].1, edges[i].0));
        let v = lat
            .to_coords(poly.vertices()[i])
            .ok_or(ToricError::VertexNotInLattice(poly.vertices()[i]))?;
        out.push(-(ray.0 * v.0 + ray.1 * v.1));
    }
    Ok(out)
}

/// Monomial relation data for a two-parameter chart: `exponents[i][j]` is the
/// exponent of chart variable j in the inverse of base parameter i, so the
/// monomial with base exponents (-p, -q) has chart exponent vector
/// (p, q) * exponents.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ChartRelations {
    pub exponents: [[i64; 2]; 2],
}

/// Region cut out by holomorphy of the chart monomial (all chart exponents
/// nonnegative) and the caps p <= C1, q <= C2, translated so the cap corner
/// sits at the origin. When `sign_invariant_var` names a chart variable, the
/// returned polygon carries the sublattice where that variable's exponent is
/// even; otherwise it carries the standard lattice.
pub fn chart_cone(
    relations: &ChartRelations,
    sign_invariant_var: Option<usize>,
    caps: (i64, i64),
) -> Result<LatticePolygon, ToricError> {
    let e = &relations.exponents;
    // normal . x >= rhs for each constraint.
    let constraints: [((i64, i64), i64); 4] = [
        ((e[0][0], e[1][0]), 0),
        ((e[0][1], e[1][1]), 0),
        ((-1, 0), -caps.0),
        ((0, -1), -caps.1),
    ];
    // Bounded iff the recession cone is trivial: no nonzero direction
    // satisfies every homogeneous inequality. Extreme candidates lie along
    // constraint boundaries.
    for (normal, _) in &constraints {
        for d in [(normal.1, -normal.0), (-normal.1, normal.0)] {
            if d == (0, 0) {
                continue;
            }
            if constraints.iter().all(|(n, _)| n.0 * d.0 + n.1 * d.1 >= 0) {
                return Err(ToricError::UnboundedRegion);
            }
        }
    }
    let mut points: Vec<(i64, i64)> = Vec::new();
    for i in 0..constraints.len() {
        for j in (i + 1)..constraints.len() {
            let (ni, ci) = constraints[i];
            let (nj, cj) = constraints[j];
            let d = det2(ni, nj);
            if d == 0 {
                continue;
            }
            let x = rat_int(ci * nj.1 - ni.1 * cj) / rat_int(d);
            let y = rat_int(ni.0 * cj - ci * nj.0) / rat_int(d);
            let feasible = constraints.iter().all(|(n, c)| {
                rat_int(n.0) * &x + rat_int(n.1) * &y >= rat_int(*c)
            });
            if !feasible {
                continue;
            }
            if !x.is_integer() || !y.is_integer() {
                return Err(ToricError::NonIntegralVertex(x, y));
            }
            let p = (
                i64::try_from(x.to_integer()).expect("small vertex"),
                i64::try_from(y.to_integer()).expect("small vertex"),
            );
            if !points.contains(&p) {
                points.push(p);
            }
        }
    }
    if points.len() < 3 {
        return Err(ToricError::TooFewVertices(points.len()));
    }
    order_counterclockwise(&mut points);
    let translated: Vec<(i64, i64)> = points
        .iter()
        .map(|p| (p.0 - caps.0, p.1 - caps.1))
        .collect();
    let lattice = match sign_invariant_var {
        Some(var) => SubLattice::from_even_functional((e[0][var], e[1][var])),
        None => SubLattice::standard(),
    };
    LatticePolygon::new(translated)?.with_lattice(lattice)
}

fn order_counterclockwise(points: &mut [(i64, i64)]) {
    let n = points.len() as i64;
    let cx: i64 = points.iter().map(|p| p.0).sum();
    let cy: i64 = points.iter().map(|p| p.1).sum();
    // Compare directions from the centroid (scaled by n to stay integral).
    let key = |p: &(i64, i64)| (p.0 * n - cx, p.1 * n - cy);
    let half = |d: (i64, i64)| i32::from(d.1 < 0 || (d.1 == 0 && d.0 < 0));
    points.sort_by(|a, b| {
        let (da, db) = (key(a), key(b));
        half(da)
            .cmp(&half(db))
            .then_with(|| 0.cmp(&det2(da, db)))
    });
}

/// The moment polygon of the compactified moduli surface: vertices
/// O = (0,0), III = (-4,0), IV = (-2,-6), II = (0,-6).
pub fn moment_polygon() -> LatticePolygon {
    LatticePolygon::new(vec![(0, 0), (-4, 0), (-2, -6), (0, -6)])
        .expect("valid quadrilateral")
        .with_lattice(even_sum_sublattice())
        .expect("vertices have even coordinate sum")
}

/// The index-2 sublattice of points with even coordinate sum.
pub fn even_sum_sublattice() -> SubLattice {
    SubLattice::new((1, 1), (1, -1)).expect("nonsingular")
}
