//! Data model for two-body frustration-free instances: projector constraints on
//! qubit pairs, the Hamiltonian construction from a target state, SLOCC
//! conjugation of instances, and canonicalization of raw constraint lists.

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::linalg::{
    self, kron_vec, orthonormalize, partial_trace_pair, swap_pair_vector, CMatrix, CVector,
    HermitianOp, PureState, C64, RANK_TOL,
};

/// An unordered qubit pair, stored as (i, j) with 1 <= i < j.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Pair {
    i: usize,
    j: usize,
}

impl Pair {
    pub fn new(a: usize, b: usize) -> Result<Self> {
        if a == b || a == 0 || b == 0 {
            return Err(Error::QubitIndex { detail: format!("pair ({a},{b}) must name two distinct qubits >= 1") });
        }
        Ok(Self { i: a.min(b), j: a.max(b) })
    }

    pub fn i(&self) -> usize {
        self.i
    }

    pub fn j(&self) -> usize {
        self.j
    }

    pub fn contains(&self, q: usize) -> bool {
        self.i == q || self.j == q
    }

    /// The other endpoint, given one endpoint.
    pub fn partner(&self, q: usize) -> usize {
        if q == self.i {
            self.j
        } else {
            self.i
        }
    }
}

impl std::fmt::Display for Pair {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "({},{})", self.i, self.j)
    }
}

/// A two-qubit projector constraint, stored by an orthonormal list of range
/// vectors (the forbidden subspace). Rank is the list length, 0..=4. Vectors
/// are oriented with qubit min(i,j) as the left tensor factor.
#[derive(Debug, Clone, PartialEq)]
pub struct Constraint {
    pair: Pair,
    range: Vec<CVector>,
}

/// Pairwise orthonormality slack accepted on constructed constraints.
pub const ORTHONORMAL_TOL: f64 = 1e-10;

impl Constraint {
    pub fn new(pair: Pair, range: Vec<CVector>) -> Result<Self> {
        if range.len() > 4 {
            return Err(Error::InvalidState(format!(
                "constraint on {pair} has {} range vectors, at most 4 allowed",
                range.len()
            )));
        }
        for (k, v) in range.iter().enumerate() {
            if v.len() != 4 {
                return Err(Error::InvalidState(format!(
                    "range vector {k} on {pair} has dimension {}, expected 4",
                    v.len()
                )));
            }
            if (v.norm() - 1.0).abs() > ORTHONORMAL_TOL {
                return Err(Error::InvalidState(format!(
                    "range vector {k} on {pair} has norm {:.12}, expected 1",
                    v.norm()
                )));
            }
            for (l, w) in range.iter().enumerate().take(k) {
                let overlap = w.dotc(v).norm();
                if overlap > ORTHONORMAL_TOL {
                    return Err(Error::InvalidState(format!(
                        "range vectors {l} and {k} on {pair} overlap by {overlap:.3e}"
                    )));
                }
            }
        }
        Ok(Self { pair, range })
    }

    /// Build from endpoints in either order; vectors given with `a` as the left
    /// factor are swapped into canonical orientation when a > b.
    pub fn from_unordered(a: usize, b: usize, range: Vec<CVector>) -> Result<Self> {
        let pair = Pair::new(a, b)?;
        let oriented = if a < b { range } else { range.iter().map(swap_pair_vector).collect() };
        Self::new(pair, oriented)
    }

    /// Extract the support of a PSD operator as a constraint range.
    pub fn from_psd_operator(pair: Pair, op: &HermitianOp, tol: f64) -> Result<Self> {
        let (values, vectors) = op.eigen();
        let lmax = values.last().copied().unwrap_or(0.0).max(0.0);
        let lmin = values.first().copied().unwrap_or(0.0);
        if lmin < -(tol * lmax + 1e-12) {
            return Err(Error::NotPositiveSemidefinite { min_eigenvalue: lmin });
        }
        let range: Vec<CVector> = values
            .iter()
            .zip(vectors)
            .filter(|(v, _)| **v > tol * lmax)
            .map(|(_, vec)| vec)
            .collect();
        Self::new(pair, range)
    }

    pub fn pair(&self) -> Pair {
        self.pair
    }

    pub fn rank(&self) -> usize {
        self.range.len()
    }

    pub fn range(&self) -> &[CVector] {
        &self.range
    }

    /// The 4×4 projector Σ |φ⟩⟨φ| over the range vectors.
    pub fn projector(&self) -> HermitianOp {
        HermitianOp::from_outer_sum(4, &self.range)
    }

    /// Orthonormal basis of the allowed (kernel) subspace, dimension 4 − rank.
    pub fn kernel_basis(&self) -> Vec<CVector> {
        let p = self.projector();
        let complement = HermitianOp::new(CMatrix::identity(4, 4) - p.matrix()).expect("projector complement");
        let (values, vectors) = complement.eigen();
        values
            .into_iter()
            .zip(vectors)
            .filter(|(v, _)| *v > 0.5)
            .map(|(_, vec)| vec)
            .collect()
    }

    /// Energy ⟨ψ|Π|ψ⟩ = Σ |⟨φ|ψ⟩|² of a two-qubit state against this projector.
    pub fn energy_of_pair_state(&self, psi: &CVector) -> f64 {
        self.range.iter().map(|phi| phi.dotc(psi).norm_sqr()).sum()
    }

    /// Energy Tr[Π ρ] of a two-qubit density matrix against this projector.
    pub fn energy_of_pair_density(&self, rho: &CMatrix) -> f64 {
        self.range.iter().map(|phi| (phi.adjoint() * rho * phi)[(0, 0)].re).sum()
    }
}

/// A canonicalized two-body instance: qubit count, at most one constraint per
/// pair, and provenance flags.
#[derive(Debug, Clone, PartialEq)]
pub struct Instance {
    n: usize,
    constraints: BTreeMap<Pair, Constraint>,
    is_h_psi: bool,
}

impl Instance {
    pub fn empty(n: usize) -> Self {
        Self { n, constraints: BTreeMap::new(), is_h_psi: false }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn is_h_psi(&self) -> bool {
        self.is_h_psi
    }

    pub fn set_h_psi_flag(&mut self, value: bool) {
        self.is_h_psi = value;
    }

    pub fn len(&self) -> usize {
        self.constraints.len()
    }

    pub fn is_empty(&self) -> bool {
        self.constraints.is_empty()
    }

    pub fn constraint(&self, pair: Pair) -> Option<&Constraint> {
        self.constraints.get(&pair)
    }

    /// Constraints in ascending pair order.
    pub fn constraints(&self) -> impl Iterator<Item = &Constraint> {
        self.constraints.values()
    }

    pub fn pairs(&self) -> impl Iterator<Item = Pair> + '_ {
        self.constraints.keys().copied()
    }

    /// Lowest pair whose constraint has the given rank, if any.
    pub fn lowest_pair_of_rank(&self, rank: usize) -> Option<Pair> {
        self.constraints.values().find(|c| c.rank() == rank).map(|c| c.pair())
    }

    pub fn max_rank(&self) -> usize {
        self.constraints.values().map(|c| c.rank()).max().unwrap_or(0)
    }

    pub(crate) fn remove_constraint(&mut self, pair: Pair) -> Option<Constraint> {
        self.constraints.remove(&pair)
    }

    pub(crate) fn insert_constraint(&mut self, c: Constraint) {
        self.constraints.insert(c.pair(), c);
    }
}

/// The frustration-free Hamiltonian of a state: for every qubit pair, the
/// projector onto the orthogonal complement of the support of the two-particle
/// reduced density matrix. Rank-0 terms are dropped; the result is flagged as
/// an H_Ψ construction.
pub fn build_h_psi(state: &PureState, tol: f64) -> Result<Instance> {
    let n = state.n();
    if n < 2 {
        return Err(Error::InvalidState("H_Ψ construction needs at least two qubits".into()));
    }
    let mut inst = Instance::empty(n);
    inst.is_h_psi = true;
    for i in 1..=n {
        for j in (i + 1)..=n {
            let rho = partial_trace_pair(state, (i, j))?;
            let (values, vectors) = rho.eigen();
            let lmax = values.last().copied().unwrap_or(0.0).max(0.0);
            // Range of Π = eigenvectors of ρ below the support threshold.
            let range: Vec<CVector> = values
                .iter()
                .zip(vectors)
                .filter(|(v, _)| **v <= tol * lmax)
                .map(|(_, vec)| vec)
                .collect();
            if !range.is_empty() {
                inst.insert_constraint(Constraint::new(Pair::new(i, j)?, range)?);
            }
        }
    }
    Ok(inst)
}

/// Conjugate every term by the local operators: Π ↦ (L_i ⊗ L_j)† Π (L_i ⊗ L_j),
/// then re-projectorize onto the support. Conjugation by invertible maps
/// preserves the kernel dimension, so ranks are preserved.
pub fn slocc_transform(inst: &Instance, locals: &[CMatrix]) -> Result<Instance> {
    if locals.len() != inst.n() {
        return Err(Error::Usage(format!(
            "expected {} local operators, got {}",
            inst.n(),
            locals.len()
        )));
    }
    for (q, l) in locals.iter().enumerate() {
        if l.nrows() != 2 || l.ncols() != 2 {
            return Err(Error::Usage(format!("local operator on qubit {} is not 2x2", q + 1)));
        }
        let det = (l[(0, 0)] * l[(1, 1)] - l[(0, 1)] * l[(1, 0)]).norm();
        if det <= 1e-10 {
            return Err(Error::SingularLocal { qubit: q + 1, det });
        }
    }
    let mut out = Instance::empty(inst.n());
    for c in inst.constraints() {
        let pair = c.pair();
        let l = kron_mat(&locals[pair.i() - 1], &locals[pair.j() - 1]);
        let conj = l.adjoint() * c.projector().matrix() * &l;
        let new_c = Constraint::from_psd_operator(pair, &HermitianOp::new(conj)?, RANK_TOL)?;
        debug_assert_eq!(new_c.rank(), c.rank(), "SLOCC conjugation must preserve rank");
        if new_c.rank() > 0 {
            out.insert_constraint(new_c);
        }
    }
    Ok(out)
}

/// Kronecker product with `a` on the most significant qubit.
pub fn kron_mat(a: &CMatrix, b: &CMatrix) -> CMatrix {
    a.kronecker(b)
}

/// Merge raw constraints into a canonical instance: constraints on the same
/// pair are combined by the span of their ranges, rank-0 entries are dropped,
/// and rank-4 entries are retained (they encode unsatisfiability).
pub fn canonicalize(raw: Vec<Constraint>, n: usize) -> Result<Instance> {
    let mut grouped: BTreeMap<Pair, Vec<CVector>> = BTreeMap::new();
    for c in raw {
        let pair = c.pair();
        if pair.j() > n {
            return Err(Error::QubitIndex { detail: format!("pair {pair} out of range for n = {n}") });
        }
        grouped.entry(pair).or_default().extend(c.range().iter().cloned());
    }
    let mut inst = Instance::empty(n);
    for (pair, vectors) in grouped {
        let basis = orthonormalize(&vectors, RANK_TOL);
        if !basis.is_empty() {
            inst.insert_constraint(Constraint::new(pair, basis)?);
        }
    }
    Ok(inst)
}

/// Per-constraint energies ⟨ψ|Π⊗I|ψ⟩ of a full n-qubit state, in pair order.
/// Works for any n (no dense matrix is formed).
pub fn constraint_energies(inst: &Instance, state: &PureState) -> Result<Vec<(Pair, f64)>> {
    if state.n() != inst.n() {
        return Err(Error::Usage(format!(
            "state has {} qubits but instance has {}",
            state.n(),
            inst.n()
        )));
    }
    let mut out = Vec::with_capacity(inst.len());
    for c in inst.constraints() {
        let rho = partial_trace_pair(state, (c.pair().i(), c.pair().j()))?;
        out.push((c.pair(), c.energy_of_pair_density(rho.matrix()).max(0.0)));
    }
    Ok(out)
}

/// Helpers shared by tests and generators: canonical two-qubit basis vectors.
pub fn basis_vector4(index: usize) -> CVector {
    let mut v = CVector::zeros(4);
    v[index] = C64::new(1.0, 0.0);
    v
}

/// |ψ⁻⟩ = (|01⟩ − |10⟩)/√2.
pub fn singlet() -> CVector {
    let r = 1.0 / 2.0_f64.sqrt();
    CVector::from_column_slice(&[C64::new(0.0, 0.0), C64::new(r, 0.0), C64::new(-r, 0.0), C64::new(0.0, 0.0)])
}

/// Assemble a full n-qubit product state from disjoint blocks of 1 or 2 qubits.
/// Blocks are given as (sorted qubit list, state on those qubits).
pub fn assemble_blocks(n: usize, blocks: &[(Vec<usize>, CVector)]) -> Result<PureState> {
    let mut covered = vec![false; n + 1];
    for (qs, state) in blocks {
        if state.len() != 1 << qs.len() {
            return Err(Error::InvalidState(format!(
                "block on {qs:?} has {} amplitudes, expected {}",
                state.len(),
                1 << qs.len()
            )));
        }
        for &q in qs {
            if q == 0 || q > n || covered[q] {
                return Err(Error::InvalidState(format!("block qubit {q} missing or repeated")));
            }
            covered[q] = true;
        }
    }
    if covered.iter().skip(1).any(|c| !c) {
        return Err(Error::InvalidState("blocks do not cover all qubits".into()));
    }
    let dim = 1usize << n;
    let mut amps = CVector::from_element(dim, C64::new(1.0, 0.0));
    for idx in 0..dim {
        let mut value = C64::new(1.0, 0.0);
        for (qs, state) in blocks {
            let mut local = 0usize;
            for &q in qs {
                local = (local << 1) | ((idx >> (n - q)) & 1);
            }
            value *= state[local];
        }
        amps[idx] = value;
    }
    PureState::new(n, amps)
}
