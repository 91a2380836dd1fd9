//! Independent brute-force verification: dense Hamiltonians, ground spaces,
//! per-constraint energies, genuine-entanglement certification, and the
//! three-qubit SLOCC dichotomy via the 3-tangle.
//!
//! Everything here deliberately avoids the solver's reduction machinery so the
//! two can cross-check each other.

use crate::error::{Error, Result};
use crate::instance::{constraint_energies, Instance, Pair};
use crate::linalg::{orthonormalize, zero_eigenspace, CMatrix, CVector, HermitianOp, PureState, C64};

/// Dense matrices are capped at 2^12 × 2^12.
pub const ORACLE_CAP: usize = 12;

/// Default eigenvalue threshold for "annihilated".
pub const GROUND_TOL: f64 = 1e-9;

/// Default second-eigenvalue threshold for "entangled across a cut".
pub const GENUINE_TOL: f64 = 1e-9;

/// Ground-space summary produced by dense diagonalization.
#[derive(Debug, Clone)]
pub struct GroundSpaceReport {
    pub is_frustration_free: bool,
    pub dimension: usize,
    pub basis: Vec<PureState>,
    pub min_eigenvalue: f64,
}

impl GroundSpaceReport {
    /// Norm of the component of `state` outside the ground space.
    pub fn membership_residual(&self, state: &PureState) -> f64 {
        let basis: Vec<CVector> = self.basis.iter().map(|s| s.amps().clone()).collect();
        crate::linalg::residual_outside_span(state.amps(), &basis)
    }
}

#[inline]
fn insert_zero_bit(x: usize, pos: usize) -> usize {
    ((x >> pos) << (pos + 1)) | (x & ((1 << pos) - 1))
}

/// Σ over constraints of the projector extended by identity on the remaining
/// qubits, as a dense 2^n × 2^n matrix.
pub fn dense_hamiltonian(inst: &Instance) -> Result<HermitianOp> {
    let n = inst.n();
    if n > ORACLE_CAP {
        return Err(Error::Capacity { n, cap: ORACLE_CAP });
    }
    let dim = 1usize << n;
    let mut h = CMatrix::zeros(dim, dim);
    for c in inst.constraints() {
        let p = c.projector();
        let pm = p.matrix();
        let pos_i = n - c.pair().i();
        let pos_j = n - c.pair().j();
        let rest = 1usize << (n - 2);
        for z in 0..rest {
            let base = insert_zero_bit(insert_zero_bit(z, pos_j), pos_i);
            for rb in 0..4usize {
                let row = base | ((rb >> 1) << pos_i) | ((rb & 1) << pos_j);
                for cb in 0..4usize {
                    let col = base | ((cb >> 1) << pos_i) | ((cb & 1) << pos_j);
                    h[(row, col)] += pm[(rb, cb)];
                }
            }
        }
    }
    HermitianOp::new(h)
}

/// Diagonalize the dense Hamiltonian and report its zero eigenspace.
pub fn ground_space(inst: &Instance, tol: f64) -> Result<GroundSpaceReport> {
    let h = dense_hamiltonian(inst)?;
    let (values, _) = h.eigen();
    let min_eigenvalue = values.first().copied().unwrap_or(0.0);
    let basis_vecs = zero_eigenspace(&h, tol);
    let basis = basis_vecs
        .into_iter()
        .map(|v| PureState::new(inst.n(), v))
        .collect::<Result<Vec<_>>>()?;
    Ok(GroundSpaceReport {
        is_frustration_free: min_eigenvalue <= tol,
        dimension: basis.len(),
        basis,
        min_eigenvalue,
    })
}

/// Per-constraint energies ‖Π|ψ⟩‖², in pair order. No dense matrix is formed,
/// so this works beyond the oracle cap.
pub fn energy_residuals(inst: &Instance, state: &PureState) -> Result<Vec<(Pair, f64)>> {
    constraint_energies(inst, state)
}

/// Total energy ⟨ψ|H|ψ⟩.
pub fn total_energy(inst: &Instance, state: &PureState) -> Result<f64> {
    Ok(energy_residuals(inst, state)?.iter().map(|(_, e)| e).sum())
}

/// True iff the state is entangled across every bipartition: for each cut, the
/// reduced density matrix has a second eigenvalue above `tol`.
pub fn genuinely_entangled(state: &PureState, tol: f64) -> bool {
    let n = state.n();
    if n < 2 {
        return false;
    }
    // Subsets of {2..n} joined with qubit 1 enumerate each cut exactly once.
    let rest_qubits: Vec<usize> = (2..=n).collect();
    let subsets = 1usize << (n - 1);
    for pick in 0..subsets {
        let mut side: Vec<usize> = vec![1];
        for (k, &q) in rest_qubits.iter().enumerate() {
            if (pick >> k) & 1 == 1 {
                side.push(q);
            }
        }
        if side.len() == n {
            continue; // not a cut
        }
        if second_reduced_eigenvalue(state, &side) <= tol {
            return false;
        }
    }
    true
}

/// Second-largest eigenvalue of the reduced density matrix of `side`.
fn second_reduced_eigenvalue(state: &PureState, side: &[usize]) -> f64 {
    let n = state.n();
    let in_side: Vec<bool> = {
        let mut v = vec![false; n + 1];
        for &q in side {
            v[q] = true;
        }
        v
    };
    let rows = 1usize << side.len();
    let cols = 1usize << (n - side.len());
    // Gather amplitudes into a rows × cols matrix indexed by the cut.
    let mut m = CMatrix::zeros(rows, cols);
    for idx in 0..(1usize << n) {
        let mut r = 0usize;
        let mut c = 0usize;
        for q in 1..=n {
            let bit = (idx >> (n - q)) & 1;
            if in_side[q] {
                r = (r << 1) | bit;
            } else {
                c = (c << 1) | bit;
            }
        }
        m[(r, c)] = state.amp(idx);
    }
    // Spectrum of ρ_side = M M† equals that of M† M; use the smaller Gram.
    let gram = if rows <= cols { &m * m.adjoint() } else { m.adjoint() * &m };
    let eig = gram.symmetric_eigen();
    let mut values: Vec<f64> = eig.eigenvalues.iter().copied().collect();
    values.sort_by(|a, b| b.partial_cmp(a).unwrap());
    values.get(1).copied().unwrap_or(0.0)
}

/// Three-qubit SLOCC classes distinguishable by local invertible operations.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Slocc3Class {
    GhzClass,
    WClass,
    Biseparable,
}

impl std::fmt::Display for Slocc3Class {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Slocc3Class::GhzClass => write!(f, "GHZ-class"),
            Slocc3Class::WClass => write!(f, "W-class"),
            Slocc3Class::Biseparable => write!(f, "biseparable/product"),
        }
    }
}

/// 3-tangle of a normalized three-qubit state: four times the magnitude of the
/// degree-4 hyperdeterminant of the 2×2×2 amplitude tensor. 1 for GHZ, 0 for W
/// and for anything biseparable.
pub fn three_tangle(state: &PureState) -> Result<f64> {
    if state.n() != 3 {
        return Err(Error::Usage(format!("3-tangle needs a 3-qubit state, got n = {}", state.n())));
    }
    let a = |index: usize| state.amp(index);
    let (a000, a001, a010, a011) = (a(0), a(1), a(2), a(3));
    let (a100, a101, a110, a111) = (a(4), a(5), a(6), a(7));
    let d1 = a000 * a000 * a111 * a111
        + a001 * a001 * a110 * a110
        + a010 * a010 * a101 * a101
        + a100 * a100 * a011 * a011;
    let d2 = a000 * a111 * a011 * a100
        + a000 * a111 * a101 * a010
        + a000 * a111 * a110 * a001
        + a011 * a100 * a101 * a010
        + a011 * a100 * a110 * a001
        + a101 * a010 * a110 * a001;
    let d3 = a000 * a110 * a101 * a011 + a111 * a001 * a010 * a100;
    let hdet = d1 - d2 * 2.0 + d3 * 4.0;
    Ok(4.0 * hdet.norm())
}

/// Classify a three-qubit state: biseparable when some cut is product,
/// otherwise GHZ-class when the 3-tangle exceeds `tangle_tol`, else W-class.
pub fn slocc3_classify(state: &PureState, tangle_tol: f64) -> Result<Slocc3Class> {
    if state.n() != 3 {
        return Err(Error::Usage(format!("SLOCC classification needs n = 3, got {}", state.n())));
    }
    if !genuinely_entangled(state, GENUINE_TOL) {
        return Ok(Slocc3Class::Biseparable);
    }
    if three_tangle(state)? > tangle_tol {
        Ok(Slocc3Class::GhzClass)
    } else {
        Ok(Slocc3Class::WClass)
    }
}

/// Intersection of the lifted pair supports supp(ρ_ij ⊗ I) of a state,
/// computed by sequential subspace intersection rather than by diagonalizing
/// the summed Hamiltonian. Returns an orthonormal basis.
pub fn support_intersection(state: &PureState, tol: f64) -> Result<Vec<CVector>> {
    let n = state.n();
    if n > ORACLE_CAP {
        return Err(Error::Capacity { n, cap: ORACLE_CAP });
    }
    let dim = 1usize << n;
    // Start from the full space.
    let mut basis: Vec<CVector> = (0..dim)
        .map(|k| {
            let mut v = CVector::zeros(dim);
            v[k] = C64::new(1.0, 0.0);
            v
        })
        .collect();
    for i in 1..=n {
        for j in (i + 1)..=n {
            let rho = crate::linalg::partial_trace_pair(state, (i, j))?;
            let (support, rank) = crate::linalg::support_projector(&rho, crate::linalg::RANK_TOL)?;
            if rank == 4 {
                continue;
            }
            basis = intersect_with_lifted_support(&basis, support.matrix(), n, (i, j), tol);
            if basis.is_empty() {
                return Ok(basis);
            }
        }
    }
    Ok(basis)
}

/// Intersect span(basis) with the kernel of (I − Q)⊗I for a 4×4 support
/// projector Q on the given pair.
fn intersect_with_lifted_support(
    basis: &[CVector],
    support: &CMatrix,
    n: usize,
    pair: (usize, usize),
    tol: f64,
) -> Vec<CVector> {
    let p = basis.len();
    // d_k = (I − Q⊗I) b_k; combinations with Σ c_k d_k = 0 stay inside.
    let defects: Vec<CVector> = basis.iter().map(|b| b - &apply_pair_operator(support, b, n, pair)).collect();
    let mut gram = CMatrix::zeros(p, p);
    for r in 0..p {
        for c in 0..p {
            gram[(r, c)] = defects[r].dotc(&defects[c]);
        }
    }
    let eig = gram.symmetric_eigen();
    let mut kept: Vec<CVector> = Vec::new();
    for k in 0..p {
        if eig.eigenvalues[k] <= tol {
            let combo = eig.eigenvectors.column(k);
            let mut v = CVector::zeros(basis[0].len());
            for (bk, b) in basis.iter().enumerate() {
                v += b * combo[bk];
            }
            kept.push(v);
        }
    }
    orthonormalize(&kept, 0.5)
}

/// Apply a 4×4 operator acting on the given qubit pair to a full state vector.
fn apply_pair_operator(op: &CMatrix, v: &CVector, n: usize, pair: (usize, usize)) -> CVector {
    let (i, j) = pair;
    let pos_i = n - i;
    let pos_j = n - j;
    let rest = 1usize << (n - 2);
    let mut out = CVector::zeros(v.len());
    for z in 0..rest {
        let base = insert_zero_bit(insert_zero_bit(z, pos_j), pos_i);
        for rb in 0..4usize {
            let row = base | ((rb >> 1) << pos_i) | ((rb & 1) << pos_j);
            let mut acc = C64::new(0.0, 0.0);
            for cb in 0..4usize {
                let col = base | ((cb >> 1) << pos_i) | ((cb & 1) << pos_j);
                acc += op[(rb, cb)] * v[col];
            }
            out[row] = acc;
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::instance::{basis_vector4, build_h_psi, canonicalize, Constraint};
    use crate::linalg::RANK_TOL;

    fn c(re: f64) -> C64 {
        C64::new(re, 0.0)
    }

    fn ghz(n: usize) -> PureState {
        let mut amps = CVector::zeros(1 << n);
        let r = 1.0 / 2.0_f64.sqrt();
        amps[0] = c(r);
        amps[(1 << n) - 1] = c(r);
        PureState::new(n, amps).unwrap()
    }

    fn w3() -> PureState {
        let mut amps = CVector::zeros(8);
        let a = 1.0 / 3.0_f64.sqrt();
        for idx in [1, 2, 4] {
            amps[idx] = c(a);
        }
        PureState::new(3, amps).unwrap()
    }

    #[test]
    fn dense_hamiltonian_of_empty_instance_is_zero() {
        let h = dense_hamiltonian(&Instance::empty(2)).unwrap();
        assert!(h.matrix().norm() < 1e-15);
    }

    #[test]
    fn dense_hamiltonian_single_00_constraint() {
        let con = Constraint::new(Pair::new(1, 2).unwrap(), vec![basis_vector4(0)]).unwrap();
        let inst = canonicalize(vec![con], 2).unwrap();
        let h = dense_hamiltonian(&inst).unwrap();
        let mut expect = CMatrix::zeros(4, 4);
        expect[(0, 0)] = c(1.0);
        assert!((h.matrix() - expect).norm() < 1e-14);
    }

    #[test]
    fn ground_space_of_h_w_is_span_w_000() {
        let inst = build_h_psi(&w3(), RANK_TOL).unwrap();
        let report = ground_space(&inst, GROUND_TOL).unwrap();
        assert!(report.is_frustration_free);
        assert_eq!(report.dimension, 2);
        let zero = PureState::basis_state(3, 0).unwrap();
        assert!(report.membership_residual(&zero) < 1e-9);
        assert!(report.membership_residual(&w3()) < 1e-9);
    }

    #[test]
    fn ground_space_of_h_ghz3_is_span_000_111() {
        let inst = build_h_psi(&ghz(3), RANK_TOL).unwrap();
        let report = ground_space(&inst, GROUND_TOL).unwrap();
        assert!(report.is_frustration_free);
        assert_eq!(report.dimension, 2);
        for idx in [0usize, 7] {
            let b = PureState::basis_state(3, idx).unwrap();
            assert!(report.membership_residual(&b) < 1e-9);
        }
    }

    #[test]
    fn rank_four_pair_is_frustrated() {
        let con = Constraint::new(Pair::new(1, 2).unwrap(), (0..4).map(basis_vector4).collect()).unwrap();
        let inst = canonicalize(vec![con], 2).unwrap();
        let report = ground_space(&inst, GROUND_TOL).unwrap();
        assert!(!report.is_frustration_free);
        assert_eq!(report.dimension, 0);
    }

    #[test]
    fn residuals_of_golden_states_against_h_w() {
        let inst = build_h_psi(&w3(), RANK_TOL).unwrap();
        let zero = PureState::basis_state(3, 0).unwrap();
        for (_, e) in energy_residuals(&inst, &zero).unwrap() {
            assert!(e < 1e-12);
        }
        let ones = PureState::basis_state(3, 7).unwrap();
        let worst = energy_residuals(&inst, &ones).unwrap().iter().map(|(_, e)| *e).fold(0.0, f64::max);
        assert!(worst > 0.1);
    }

    #[test]
    fn genuine_entanglement_fixtures() {
        assert!(genuinely_entangled(&w3(), GENUINE_TOL));
        assert!(genuinely_entangled(&ghz(4), GENUINE_TOL));
        // |0⟩ ⊗ Bell is product across the {1}|{2,3} cut.
        let bell2 = ghz(2);
        let zero = PureState::basis_state(1, 0).unwrap();
        assert!(!genuinely_entangled(&zero.tensor(&bell2), GENUINE_TOL));
    }

    #[test]
    fn tangle_and_classification_fixtures() {
        assert!((three_tangle(&ghz(3)).unwrap() - 1.0).abs() < 1e-12);
        assert!(three_tangle(&w3()).unwrap() < 1e-12);
        assert_eq!(slocc3_classify(&ghz(3), 1e-8).unwrap(), Slocc3Class::GhzClass);
        assert_eq!(slocc3_classify(&w3(), 1e-8).unwrap(), Slocc3Class::WClass);
        let zero = PureState::basis_state(1, 0).unwrap();
        assert_eq!(slocc3_classify(&zero.tensor(&ghz(2)), 1e-8).unwrap(), Slocc3Class::Biseparable);
    }

    #[test]
    fn support_intersection_matches_ground_space_for_w() {
        let basis = support_intersection(&w3(), GROUND_TOL).unwrap();
        assert_eq!(basis.len(), 2);
        let inst = build_h_psi(&w3(), RANK_TOL).unwrap();
        let report = ground_space(&inst, GROUND_TOL).unwrap();
        for v in &basis {
            let s = PureState::new(3, v.clone()).unwrap();
            assert!(report.membership_residual(&s) < 1e-9);
        }
    }
}
