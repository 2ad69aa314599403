//! Finite groups acting by monomial maps (a variable permutation composed
//! with diagonal root-of-unity characters), their induced matrices on graded
//! spaces, and exact invariant-subspace bases.
//!
//! A [`MonomialMap`] is the algebra substitution `x_i -> zeta^(k_i) x_(perm(i))`.
//! Composition is composition of substitutions, so the matrix of a composite
//! on any graded space is the product of the matrices. Invariant subspaces
//! are computed from the generators alone and cross-checked against two
//! independent oracles: the fixed-point property over the whole group and the
//! character average.

use crate::exactnum::{lcm, rat_int, Cyclotomic, NumError, Rational};
use crate::polyalg::ExactMatrix;
use num_traits::{One, Signed};
use std::collections::{HashMap, HashSet, VecDeque};
use thiserror::Error;

pub const DEFAULT_CLOSURE_BOUND: usize = 1_000_000;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GroupError {
    #[error("permutation {0:?} is not a bijection")]
    BadPermutation(Vec<usize>),
    #[error("permutation has {perm} entries but there are {chars} characters")]
    ArityMismatch { perm: usize, chars: usize },
    #[error("maps act on different variable counts: {0} vs {1}")]
    VariableCountMismatch(usize, usize),
    #[error("no generators given")]
    NoGenerators,
    #[error("group closure exceeded the bound of {0} elements")]
    ClosureBound(usize),
    #[error("generator line {line}: {reason}")]
    BadGeneratorLine { line: usize, reason: String },
    #[error("character average {0} is not a non-negative integer")]
    NonIntegralAverage(String),
    #[error(transparent)]
    Num(#[from] NumError),
}

/// `x_i -> zeta_order^(exps[i]) * x_(perm[i])`, with every character written
/// to one common root order.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct MonomialMap {
    perm: Vec<usize>,
    order: u32,
    exps: Vec<u32>,
}

impl MonomialMap {
    /// Builds a map from a permutation and per-variable characters
    /// `(root order n, exponent k)`; characters are rewritten to the lcm of
    /// the given orders.
    pub fn new(perm: Vec<usize>, chars: &[(u32, i64)]) -> Result<MonomialMap, GroupError> {
        if perm.len() != chars.len() {
            return Err(GroupError::ArityMismatch {
                perm: perm.len(),
                chars: chars.len(),
            });
        }
        let mut seen = vec![false; perm.len()];
        for &p in &perm {
            if p >= perm.len() || seen[p] {
                return Err(GroupError::BadPermutation(perm.clone()));
            }
            seen[p] = true;
        }
        let mut order = 1;
        for &(n, _) in chars {
            if n == 0 {
                return Err(GroupError::Num(NumError::ZeroOrder));
            }
            order = lcm(order, n);
        }
        let exps = chars
            .iter()
            .map(|&(n, k)| {
                let reduced = k.rem_euclid(n as i64) as u32;
                reduced * (order / n)
            })
            .collect();
        Ok(MonomialMap { perm, order, exps })
    }

    pub fn identity(nvars: usize, order: u32) -> MonomialMap {
        MonomialMap {
            perm: (0..nvars).collect(),
            order,
            exps: vec![0; nvars],
        }
    }

    pub fn nvars(&self) -> usize {
        self.perm.len()
    }

    pub fn order(&self) -> u32 {
        self.order
    }

    pub fn permutation(&self) -> &[usize] {
        &self.perm
    }

    /// Character of variable `i` as an exact root of unity.
    pub fn character(&self, i: usize) -> Cyclotomic {
        Cyclotomic::root_of_unity(self.order, self.exps[i] as i64).expect("order is nonzero")
    }

    /// Rewrites the characters at a root order that is a multiple of the
    /// current one.
    pub fn with_order(&self, target: u32) -> Result<MonomialMap, GroupError> {
        if target == 0 || target % self.order != 0 {
            return Err(GroupError::Num(NumError::NotASubfield(self.order, target)));
        }
        let factor = target / self.order;
        Ok(MonomialMap {
            perm: self.perm.clone(),
            order: target,
            exps: self.exps.iter().map(|e| e * factor).collect(),
        })
    }

    /// Composition of substitutions: `self.compose(other)` first substitutes
    /// by `other`, then by `self`, so induced matrices satisfy
    /// `rho(a.compose(b)) = rho(a) * rho(b)`.
    pub fn compose(&self, other: &MonomialMap) -> Result<MonomialMap, GroupError> {
        if self.nvars() != other.nvars() {
            return Err(GroupError::VariableCountMismatch(
                self.nvars(),
                other.nvars(),
            ));
        }
        let order = lcm(self.order, other.order);
        let a = other.with_order(order)?;
        let b = self.with_order(order)?;
        // x_i -(a)-> z^(a.exps[i]) x_(a.perm[i]) -(b)-> gains b's character at
        // the already-permuted index.
        let perm = a.perm.iter().map(|&i| b.perm[i]).collect();
        let exps = a
            .exps
            .iter()
            .zip(&a.perm)
            .map(|(&e, &i)| (e + b.exps[i]) % order)
            .collect();
        Ok(MonomialMap { perm, order, exps })
    }

    /// Determinant on the variable space: permutation sign times the product
    /// of the characters.
    pub fn determinant(&self) -> Cyclotomic {
        let total: u32 = self.exps.iter().fold(0, |acc, e| (acc + e) % self.order);
        let root = Cyclotomic::root_of_unity(self.order, total as i64).expect("order is nonzero");
        if permutation_sign(&self.perm) < 0 {
            root.neg()
        } else {
            root
        }
    }

    /// One line of the group definition file format.
    pub fn to_line(&self) -> String {
        let perm: Vec<String> = self.perm.iter().map(|p| p.to_string()).collect();
        let chars: Vec<String> = self
            .exps
            .iter()
            .map(|e| format!("({},{})", self.order, e))
            .collect();
        format!("perm=[{}] chars=[{}]", perm.join(","), chars.join(","))
    }
}

fn permutation_sign(perm: &[usize]) -> i32 {
    let mut sign = 1;
    for i in 0..perm.len() {
        for j in (i + 1)..perm.len() {
            if perm[i] > perm[j] {
                sign = -sign;
            }
        }
    }
    sign
}

/// Parses the group definition format: one generator per line as
/// `perm=[...] chars=[(n,k),...]`. Blank lines and `#` comments are skipped.
pub fn parse_generators(text: &str) -> Result<Vec<MonomialMap>, GroupError> {
    let mut out = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let fail = |reason: &str| GroupError::BadGeneratorLine {
            line: idx + 1,
            reason: reason.to_string(),
        };
        let rest = line.strip_prefix("perm=[").ok_or_else(|| fail("expected `perm=[`"))?;
        let (perm_text, rest) = rest
            .split_once(']')
            .ok_or_else(|| fail("unterminated permutation list"))?;
        let perm: Vec<usize> = perm_text
            .split(',')
            .map(|t| t.trim().parse::<usize>())
            .collect::<Result<_, _>>()
            .map_err(|_| fail("permutation entries must be nonnegative integers"))?;
        let rest = rest
            .trim()
            .strip_prefix("chars=[")
            .ok_or_else(|| fail("expected `chars=[`"))?;
        let chars_text = rest
            .strip_suffix(']')
            .ok_or_else(|| fail("unterminated character list"))?;
        let mut chars = Vec::new();
        for piece in chars_text.split("),") {
            let piece = piece
                .trim()
                .trim_start_matches('(')
                .trim_end_matches(')');
            let (n, k) = piece
                .split_once(',')
                .ok_or_else(|| fail("characters must be written as (n,k)"))?;
            let n: u32 = n
                .trim()
                .parse()
                .map_err(|_| fail("character order must be a positive integer"))?;
            let k: i64 = k
                .trim()
                .parse()
                .map_err(|_| fail("character exponent must be an integer"))?;
            chars.push((n, k));
        }
        out.push(MonomialMap::new(perm, &chars).map_err(|e| GroupError::BadGeneratorLine {
            line: idx + 1,
            reason: e.to_string(),
        })?);
    }
    Ok(out)
}

/// A finite group of monomial maps, stored as the full element list in
/// breadth-first discovery order. Construction guarantees closure under
/// composition and the presence of the identity.
#[derive(Debug, Clone)]
pub struct FiniteGroup {
    ambient_order: u32,
    generators: Vec<MonomialMap>,
    elements: Vec<MonomialMap>,
}

pub fn group_closure(generators: &[MonomialMap]) -> Result<FiniteGroup, GroupError> {
    group_closure_bounded(generators, DEFAULT_CLOSURE_BOUND)
}

pub fn group_closure_bounded(
    generators: &[MonomialMap],
    bound: usize,
) -> Result<FiniteGroup, GroupError> {
    let first = generators.first().ok_or(GroupError::NoGenerators)?;
    let nvars = first.nvars();
    let mut ambient = 1;
    for g in generators {
        if g.nvars() != nvars {
            return Err(GroupError::VariableCountMismatch(nvars, g.nvars()));
        }
        ambient = lcm(ambient, g.order());
    }
    let generators: Vec<MonomialMap> = generators
        .iter()
        .map(|g| g.with_order(ambient))
        .collect::<Result<_, _>>()?;
    let identity = MonomialMap::identity(nvars, ambient);
    let mut seen: HashSet<MonomialMap> = HashSet::new();
    let mut elements = Vec::new();
    let mut queue = VecDeque::new();
    seen.insert(identity.clone());
    elements.push(identity.clone());
    queue.push_back(identity);
    while let Some(current) = queue.pop_front() {
        for g in &generators {
            let next = g.compose(&current)?;
            if seen.insert(next.clone()) {
                if seen.len() > bound {
                    return Err(GroupError::ClosureBound(bound));
                }
                elements.push(next.clone());
                queue.push_back(next);
            }
        }
    }
    Ok(FiniteGroup {
        ambient_order: ambient,
        generators,
        elements,
    })
}

impl FiniteGroup {
    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn nvars(&self) -> usize {
        self.generators[0].nvars()
    }

    /// Common root order of all characters.
    pub fn ambient_order(&self) -> u32 {
        self.ambient_order
    }

    pub fn generators(&self) -> &[MonomialMap] {
        &self.generators
    }

    pub fn elements(&self) -> &[MonomialMap] {
        &self.elements
    }

    pub fn contains(&self, map: &MonomialMap) -> bool {
        self.elements.iter().any(|e| e == map)
    }

    /// Order of the full monomial group on the same variables and root order:
    /// nvars! * ambient_order^nvars. The closure order always divides this.
    pub fn ambient_monomial_group_order(&self) -> u128 {
        let n = self.nvars() as u128;
        let mut factorial = 1u128;
        for i in 2..=n {
            factorial *= i;
        }
        factorial * (self.ambient_order as u128).pow(self.nvars() as u32)
    }
}

/// One symmetric-power factor of a tensor product: the variables spanning the
/// subspace and the power.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SymFactor {
    pub vars: Vec<usize>,
    pub degree: u32,
}

/// Finite-dimensional graded spaces the groups act on. Monomial bases are
/// ordered descending graded-lex; the exterior-square basis is
/// `e_i ^ e_j, i < j` in lexicographic order of `(i, j)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SpaceDescriptor {
    /// Polynomials of total degree `degree` in all variables.
    SymPower { degree: u32 },
    /// Exterior square of the dual variable space, basis `e_i ^ e_j`.
    DualWedgeSquare,
    /// Tensor product of symmetric powers of disjoint variable subspaces.
    TensorSym { factors: Vec<SymFactor> },
    /// Four variables paired `(0,1)` and `(2,3)`, bihomogeneous of the given
    /// degrees.
    Bihomogeneous { left: u32, right: u32 },
    /// Direct sum; the action is block diagonal.
    Sum(Vec<SpaceDescriptor>),
}

/// Basis element of one (non-sum) summand.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
enum BasisElem {
    Exps(Vec<u32>),
    Wedge(usize, usize),
}

/// Flattened basis of a descriptor: elements tagged by summand, with a
/// per-summand index for looking up images.
struct SpaceBasis {
    elems: Vec<(usize, BasisElem)>,
    lookup: Vec<HashMap<BasisElem, usize>>,
}

fn leaf_basis(space: &SpaceDescriptor, nvars: usize) -> Vec<BasisElem> {
    match space {
        SpaceDescriptor::SymPower { degree } => {
            crate::polyalg::enumerate_monomials(nvars, &vec![1; nvars], *degree as u64)
                .into_iter()
                .map(|m| BasisElem::Exps(m.0))
                .collect()
        }
        SpaceDescriptor::DualWedgeSquare => {
            let mut out = Vec::new();
            for i in 0..nvars {
                for j in (i + 1)..nvars {
                    out.push(BasisElem::Wedge(i, j));
                }
            }
            out
        }
        SpaceDescriptor::TensorSym { factors } => {
            let mut used = vec![false; nvars];
            for f in factors {
                for &v in &f.vars {
                    assert!(v < nvars && !used[v], "factor variable sets must be disjoint");
                    used[v] = true;
                }
            }
            let mut acc: Vec<Vec<u32>> = vec![vec![0; nvars]];
            for f in factors {
                let monos = crate::polyalg::enumerate_monomials(
                    f.vars.len(),
                    &vec![1; f.vars.len()],
                    f.degree as u64,
                );
                let mut next = Vec::with_capacity(acc.len() * monos.len());
                for base in &acc {
                    for m in &monos {
                        let mut e = base.clone();
                        for (slot, &v) in f.vars.iter().enumerate() {
                            e[v] = m.0[slot];
                        }
                        next.push(e);
                    }
                }
                acc = next;
            }
            acc.into_iter().map(BasisElem::Exps).collect()
        }
        SpaceDescriptor::Bihomogeneous { left, right } => {
            assert_eq!(nvars, 4, "bihomogeneous slices pair variables (0,1) and (2,3)");
            crate::polyalg::enumerate_bidegree(*left, *right)
                .into_iter()
                .map(|m| BasisElem::Exps(m.0))
                .collect()
        }
        SpaceDescriptor::Sum(_) => unreachable!("sums are flattened before leaf enumeration"),
    }
}

impl SpaceDescriptor {
    fn leaves(&self) -> Vec<&SpaceDescriptor> {
        match self {
            SpaceDescriptor::Sum(parts) => parts.iter().flat_map(|p| p.leaves()).collect(),
            other => vec![other],
        }
    }

    pub fn dimension(&self, nvars: usize) -> usize {
        self.leaves()
            .iter()
            .map(|leaf| leaf_basis(leaf, nvars).len())
            .sum()
    }

    fn basis(&self, nvars: usize) -> SpaceBasis {
        let mut elems = Vec::new();
        let mut lookup = Vec::new();
        for (s, leaf) in self.leaves().into_iter().enumerate() {
            let mut map = HashMap::new();
            for elem in leaf_basis(leaf, nvars) {
                map.insert(elem.clone(), elems.len());
                elems.push((s, elem));
            }
            lookup.push(map);
        }
        SpaceBasis { elems, lookup }
    }
}

/// Image of one basis element under the substitution: a root-of-unity
/// exponent and the target element.
fn act_on_elem(map: &MonomialMap, elem: &BasisElem) -> (u32, i32, BasisElem) {
    let perm = map.permutation();
    match elem {
        BasisElem::Exps(e) => {
            let mut target = vec![0u32; e.len()];
            let mut exponent = 0u64;
            for (i, &ei) in e.iter().enumerate() {
                target[perm[i]] = ei;
                exponent += ei as u64 * map.exps[i] as u64;
            }
            ((exponent % map.order() as u64) as u32, 1, BasisElem::Exps(target))
        }
        BasisElem::Wedge(i, j) => {
            let (p, q) = (perm[*i], perm[*j]);
            let exponent = (map.exps[*i] + map.exps[*j]) % map.order();
            if p < q {
                (exponent, 1, BasisElem::Wedge(p, q))
            } else {
                (exponent, -1, BasisElem::Wedge(q, p))
            }
        }
    }
}

/// Matrix of the substitution on the canonical basis of `space`; columns are
/// images of basis elements. Panics if the map fails to preserve the space,
/// which cannot happen for a group action on one of its invariant gradings.
pub fn induced_action(map: &MonomialMap, space: &SpaceDescriptor) -> ExactMatrix<Cyclotomic> {
    let basis = space.basis(map.nvars());
    let zero = Cyclotomic::zero(map.order());
    let mut matrix = ExactMatrix::filled(basis.elems.len(), basis.elems.len(), zero);
    for (col, (summand, elem)) in basis.elems.iter().enumerate() {
        let (exponent, sign, image) = act_on_elem(map, elem);
        let row = *basis.lookup[*summand]
            .get(&image)
            .expect("map must preserve the graded space");
        let mut value =
            Cyclotomic::root_of_unity(map.order(), exponent as i64).expect("order is nonzero");
        if sign < 0 {
            value = value.neg();
        }
        matrix.set(row, col, value);
    }
    matrix
}

/// Fixed space of a single substitution, read off the cycle structure: the
/// map permutes basis elements with scalar factors, so each cycle whose
/// factors multiply to 1 contributes exactly one fixed vector (accumulate the
/// factors along the cycle), and cycles with a nontrivial product contribute
/// nothing.
fn generator_fixed_basis(
    map: &MonomialMap,
    space: &SpaceDescriptor,
) -> Result<Vec<Vec<Cyclotomic>>, GroupError> {
    let basis = space.basis(map.nvars());
    let dim = basis.elems.len();
    let zero = Cyclotomic::zero(map.order());
    let mut seen = vec![false; dim];
    let mut fixed = Vec::new();
    for start in 0..dim {
        if seen[start] {
            continue;
        }
        let mut cycle = vec![(start, Cyclotomic::one(map.order()))];
        let mut scalar = Cyclotomic::one(map.order());
        let mut at = start;
        loop {
            seen[at] = true;
            let (summand, elem) = &basis.elems[at];
            let (exponent, sign, image) = act_on_elem(map, elem);
            let mut factor = Cyclotomic::root_of_unity(map.order(), i64::from(exponent))?;
            if sign < 0 {
                factor = factor.neg();
            }
            // v[next] = factor * v[at] makes the image match the original.
            scalar = scalar.try_mul(&factor)?;
            let next = *basis.lookup[*summand].get(&image).expect("map preserves the space");
            if next == start {
                break;
            }
            cycle.push((next, scalar.clone()));
            at = next;
        }
        if scalar == Cyclotomic::one(map.order()) {
            let mut vector = vec![zero.clone(); dim];
            for (idx, value) in cycle {
                vector[idx] = value;
            }
            fixed.push(vector);
        }
    }
    Ok(fixed)
}

/// Basis of the joint fixed space of the group on `space`: the fixed space of
/// the first generator (cycle analysis, no elimination), then cut down by
/// each further generator through the kernel of `(rho(gen) - I)` restricted
/// to the current basis. Representation matrices are monomial, so the
/// restricted matrices stay small.
pub fn invariant_basis(
    group: &FiniteGroup,
    space: &SpaceDescriptor,
) -> Result<Vec<Vec<Cyclotomic>>, GroupError> {
    let dim = space.dimension(group.nvars());
    let order = group.ambient_order();
    let zero = Cyclotomic::zero(order);
    let mut generators = group.generators().iter();
    let first = generators.next().ok_or(GroupError::NoGenerators)?;
    let mut basis = generator_fixed_basis(first, space)?;
    for gen in generators {
        if basis.is_empty() {
            break;
        }
        let action = induced_action(gen, space);
        let mut residual = ExactMatrix::filled(dim, basis.len(), zero.clone());
        for (col, vector) in basis.iter().enumerate() {
            let image = action.apply(vector);
            for row in 0..dim {
                residual.set(row, col, image[row].try_sub(&vector[row])?);
            }
        }
        let mut refined = Vec::new();
        for combo in residual.rank_kernel().kernel {
            let mut vector = vec![zero.clone(); dim];
            for (coeff, base) in combo.iter().zip(&basis) {
                if coeff.is_zero() {
                    continue;
                }
                for (slot, entry) in vector.iter_mut().zip(base) {
                    *slot = slot.try_add(&coeff.try_mul(entry)?)?;
                }
            }
            refined.push(vector);
        }
        basis = refined;
    }
    Ok(basis)
}

/// Independent oracle: (1/|G|) * sum of traces, which must be a non-negative
/// integer equal to the invariant dimension.
pub fn character_average(group: &FiniteGroup, space: &SpaceDescriptor) -> Result<usize, GroupError> {
    let basis = space.basis(group.nvars());
    let mut total = Cyclotomic::zero(group.ambient_order());
    for element in group.elements() {
        for (_, elem) in &basis.elems {
            let (exponent, sign, image) = act_on_elem(element, elem);
            if image == *elem {
                let mut value = Cyclotomic::root_of_unity(group.ambient_order(), exponent as i64)?;
                if sign < 0 {
                    value = value.neg();
                }
                total = total.try_add(&value)?;
            }
        }
    }
    let average = total.scale(&(Rational::one() / rat_int(group.order() as i64)));
    match average.to_rational() {
        Some(value) if value.is_integer() && !value.is_negative() => {
            Ok(value.to_integer().try_into().expect("small dimension"))
        }
        _ => Err(GroupError::NonIntegralAverage(average.to_string())),
    }
}

/// Independent oracle: every vector is fixed by every element of the group,
/// not just the generators.
pub fn fixed_by_all(
    group: &FiniteGroup,
    space: &SpaceDescriptor,
    vectors: &[Vec<Cyclotomic>],
) -> bool {
    group.elements().iter().all(|element| {
        let m = induced_action(element, space);
        vectors.iter().all(|v| &m.apply(v) == v)
    })
}

/// Determinant of every element on the variable space, in element order.
pub fn determinant_character(group: &FiniteGroup) -> Vec<Cyclotomic> {
    group.elements().iter().map(|e| e.determinant()).collect()
}

/// Generators shipped with the repository (`groups/G.txt`): the monomial
/// symmetry group of the sextic family, generated by two opposite-character
/// diagonal maps of order 6 and the swap of the two variable pairs.
pub fn sextic_symmetry_generators() -> Vec<MonomialMap> {
    parse_generators(include_str!("../../../groups/G.txt")).expect("shipped file is well-formed")
}

/// Generators shipped with the repository (`groups/H.txt`): the diagonal
/// order-12 character group acting on bidegree-(6,6) curves, the pairs of
/// exponents congruent mod 2.
pub fn curve_symmetry_generators() -> Vec<MonomialMap> {
    parse_generators(include_str!("../../../groups/H.txt")).expect("shipped file is well-formed")
}

pub fn sextic_symmetry_group() -> FiniteGroup {
    group_closure(&sextic_symmetry_generators()).expect("shipped generators close")
}

pub fn curve_symmetry_group() -> FiniteGroup {
    group_closure(&curve_symmetry_generators()).expect("shipped generators close")
}
