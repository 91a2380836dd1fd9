//! Small dense complex linear algebra for few-qubit systems: partial traces,
//! support projectors, zero eigenspaces, and the two entanglement computations
//! the reductions rely on (product states in 2-dimensional two-qubit subspaces
//! and pure-state concurrence).
//!
//! Basis convention used everywhere: qubit 1 is the most significant bit of the
//! basis index, so |001⟩ on three qubits is index 1 and |100⟩ is index 4.
//! Two-qubit operators on a pair (i, j) with i < j order the basis
//! |00⟩, |01⟩, |10⟩, |11⟩ with qubit i as the left tensor factor.

use crate::error::{Error, Result};
use nalgebra::{DMatrix, DVector};
use num_complex::Complex64;

pub type C64 = Complex64;
pub type CVector = DVector<C64>;
pub type CMatrix = DMatrix<C64>;

/// Normalization slack accepted on constructed states.
pub const NORM_TOL: f64 = 1e-12;
/// Hermiticity slack accepted on constructed operators.
pub const HERMITICITY_TOL: f64 = 1e-12;
/// Default relative eigenvalue threshold separating support from kernel.
pub const RANK_TOL: f64 = 1e-8;

/// A normalized pure state of `n` qubits.
#[derive(Debug, Clone, PartialEq)]
pub struct PureState {
    n: usize,
    amps: CVector,
}

impl PureState {
    /// Build a state from raw amplitudes and normalize it. The length must be
    /// exactly 2^n and the vector must not be numerically zero.
    pub fn new(n: usize, amps: CVector) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidState("state needs at least one qubit".into()));
        }
        let dim = 1usize << n;
        if amps.len() != dim {
            return Err(Error::InvalidState(format!(
                "amplitude vector has length {}, expected 2^{} = {}",
                amps.len(),
                n,
                dim
            )));
        }
        let norm = amps.norm();
        if norm < 1e-12 {
            return Err(Error::InvalidState("amplitude vector is numerically zero".into()));
        }
        Ok(Self { n, amps: amps.unscale(norm) })
    }

    pub fn from_slice(n: usize, amps: &[C64]) -> Result<Self> {
        Self::new(n, CVector::from_column_slice(amps))
    }

    /// Computational basis state |index⟩.
    pub fn basis_state(n: usize, index: usize) -> Result<Self> {
        let dim = 1usize << n;
        if index >= dim {
            return Err(Error::InvalidState(format!("basis index {index} out of range for n = {n}")));
        }
        let mut amps = CVector::zeros(dim);
        amps[index] = C64::new(1.0, 0.0);
        Self::new(n, amps)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn dim(&self) -> usize {
        self.amps.len()
    }

    pub fn amps(&self) -> &CVector {
        &self.amps
    }

    pub fn amp(&self, index: usize) -> C64 {
        self.amps[index]
    }

    /// ⟨self|other⟩.
    pub fn inner(&self, other: &PureState) -> C64 {
        self.amps.dotc(&other.amps)
    }

    /// Tensor product with `other`; `self` supplies the most significant qubits.
    pub fn tensor(&self, other: &PureState) -> PureState {
        let amps = kron_vec(&self.amps, &other.amps);
        PureState { n: self.n + other.n, amps }
    }
}

/// A Hermitian operator stored densely. Construction symmetrizes after
/// checking the asymmetry is within [`HERMITICITY_TOL`] of zero.
#[derive(Debug, Clone, PartialEq)]
pub struct HermitianOp {
    mat: CMatrix,
}

impl HermitianOp {
    pub fn new(mat: CMatrix) -> Result<Self> {
        if mat.nrows() != mat.ncols() {
            return Err(Error::InvalidState(format!(
                "operator is {}x{}, expected square",
                mat.nrows(),
                mat.ncols()
            )));
        }
        let asym = (&mat - mat.adjoint()).norm();
        let scale = mat.norm().max(1.0);
        if asym > HERMITICITY_TOL * scale * 10.0 {
            return Err(Error::NotHermitian { asymmetry: asym });
        }
        let sym = (&mat + mat.adjoint()).unscale(2.0);
        Ok(Self { mat: sym })
    }

    pub fn zeros(dim: usize) -> Self {
        Self { mat: CMatrix::zeros(dim, dim) }
    }

    pub fn identity(dim: usize) -> Self {
        Self { mat: CMatrix::identity(dim, dim) }
    }

    /// Σ_k |v_k⟩⟨v_k| over the given vectors.
    pub fn from_outer_sum(dim: usize, vectors: &[CVector]) -> Self {
        let mut mat = CMatrix::zeros(dim, dim);
        for v in vectors {
            mat += v * v.adjoint();
        }
        Self { mat }
    }

    pub fn dim(&self) -> usize {
        self.mat.nrows()
    }

    pub fn matrix(&self) -> &CMatrix {
        &self.mat
    }

    pub fn into_matrix(self) -> CMatrix {
        self.mat
    }

    pub fn trace(&self) -> f64 {
        self.mat.trace().re
    }

    /// Eigendecomposition with eigenvalues sorted ascending. Eigenvectors are
    /// returned as orthonormal columns matching the eigenvalue order.
    pub fn eigen(&self) -> (Vec<f64>, Vec<CVector>) {
        let eig = self.mat.clone().symmetric_eigen();
        let mut order: Vec<usize> = (0..eig.eigenvalues.len()).collect();
        order.sort_by(|&a, &b| eig.eigenvalues[a].partial_cmp(&eig.eigenvalues[b]).unwrap());
        let values = order.iter().map(|&k| eig.eigenvalues[k]).collect();
        let vectors = order.iter().map(|&k| eig.eigenvectors.column(k).into_owned()).collect();
        (values, vectors)
    }

    /// Frobenius distance between P² and P.
    pub fn idempotency_residual(&self) -> f64 {
        (&self.mat * &self.mat - &self.mat).norm()
    }

    pub fn apply(&self, v: &CVector) -> CVector {
        &self.mat * v
    }
}

/// Insert a 0 bit at position `pos` (counted from the least significant bit).
#[inline]
fn insert_zero_bit(x: usize, pos: usize) -> usize {
    ((x >> pos) << (pos + 1)) | (x & ((1 << pos) - 1))
}

/// Two-particle reduced density matrix of qubits `(i, j)`, 1-based with i < j.
/// The result is the 4×4 density matrix with qubit i as the left tensor factor.
pub fn partial_trace_pair(state: &PureState, pair: (usize, usize)) -> Result<HermitianOp> {
    let (i, j) = pair;
    let n = state.n();
    if i < 1 || j > n || i >= j {
        return Err(Error::QubitIndex {
            detail: format!("pair ({i},{j}) invalid for n = {n}; need 1 <= i < j <= n"),
        });
    }
    let pos_i = n - i;
    let pos_j = n - j;
    let rest = 1usize << (n - 2);
    let mut rho = CMatrix::zeros(4, 4);
    for z in 0..rest {
        // Re-insert the traced-out pair positions, lowest position first.
        let base = insert_zero_bit(insert_zero_bit(z, pos_j), pos_i);
        let mut sub = [C64::new(0.0, 0.0); 4];
        for (ab, slot) in sub.iter_mut().enumerate() {
            let (a, b) = (ab >> 1, ab & 1);
            *slot = state.amp(base | (a << pos_i) | (b << pos_j));
        }
        for r in 0..4 {
            for c in 0..4 {
                rho[(r, c)] += sub[r] * sub[c].conj();
            }
        }
    }
    HermitianOp::new(rho)
}

/// Projector onto the support of a PSD matrix: the span of eigenvectors whose
/// eigenvalue exceeds `tol` times the largest eigenvalue. Returns the projector
/// and its rank. Rejects matrices with significantly negative eigenvalues.
pub fn support_projector(rho: &HermitianOp, tol: f64) -> Result<(HermitianOp, usize)> {
    let (values, vectors) = rho.eigen();
    let lmax = values.last().copied().unwrap_or(0.0).max(0.0);
    let lmin = values.first().copied().unwrap_or(0.0);
    if lmin < -(tol * lmax + 1e-14) {
        return Err(Error::NotPositiveSemidefinite { min_eigenvalue: lmin });
    }
    let threshold = tol * lmax;
    let kept: Vec<CVector> = values
        .iter()
        .zip(vectors)
        .filter(|(v, _)| **v > threshold)
        .map(|(_, vec)| vec)
        .collect();
    let rank = kept.len();
    Ok((HermitianOp::from_outer_sum(rho.dim(), &kept), rank))
}

/// Orthonormal basis of the eigenspace with eigenvalue at most `tol` (absolute).
pub fn zero_eigenspace(h: &HermitianOp, tol: f64) -> Vec<CVector> {
    let (values, vectors) = h.eigen();
    let raw: Vec<CVector> = values
        .iter()
        .zip(vectors)
        .filter(|(v, _)| **v <= tol)
        .map(|(_, vec)| vec)
        .collect();
    // The eigensolver already returns an orthonormal set; one Gram-Schmidt pass
    // guards the degenerate-eigenvalue case.
    orthonormalize(&raw, 0.5)
}

/// Modified Gram-Schmidt. Vectors whose residual norm after projection falls
/// below `drop_tol` (relative to their input norm) are discarded.
pub fn orthonormalize(vectors: &[CVector], drop_tol: f64) -> Vec<CVector> {
    let mut basis: Vec<CVector> = Vec::new();
    for v in vectors {
        let scale = v.norm();
        if scale < 1e-300 {
            continue;
        }
        let mut w = v.clone();
        for b in &basis {
            let overlap = b.dotc(&w);
            w -= b * overlap;
        }
        // Second pass for numerical orthogonality.
        for b in &basis {
            let overlap = b.dotc(&w);
            w -= b * overlap;
        }
        let norm = w.norm();
        if norm > drop_tol * scale {
            basis.push(w.unscale(norm));
        }
    }
    basis
}

/// Norm of the component of `v` outside the span of an orthonormal `basis`.
pub fn residual_outside_span(v: &CVector, basis: &[CVector]) -> f64 {
    let mut w = v.clone();
    for b in basis {
        let overlap = b.dotc(&w);
        w -= b * overlap;
    }
    w.norm()
}

/// Exchange the two tensor factors of a two-qubit vector: |ab⟩ → |ba⟩.
pub fn swap_pair_vector(v: &CVector) -> CVector {
    CVector::from_column_slice(&[v[0], v[2], v[1], v[3]])
}

/// Kronecker product of two vectors; `a` supplies the most significant bits.
pub fn kron_vec(a: &CVector, b: &CVector) -> CVector {
    let mut out = CVector::zeros(a.len() * b.len());
    for (ia, va) in a.iter().enumerate() {
        for (ib, vb) in b.iter().enumerate() {
            out[ia * b.len() + ib] = va * vb;
        }
    }
    out
}

/// Reshape a two-qubit vector into its 2×2 amplitude matrix M[α][γ] = v[2α+γ].
fn as_matrix2(v: &CVector) -> [[C64; 2]; 2] {
    [[v[0], v[1]], [v[2], v[3]]]
}

fn det2(m: &[[C64; 2]; 2]) -> C64 {
    m[0][0] * m[1][1] - m[0][1] * m[1][0]
}

/// Factor a (near) rank-1 2×2 amplitude matrix as M ≈ a bᵀ with unit factors.
/// Returns the factors and the relative size of the discarded singular value.
pub fn factor_rank_one(m: &[[C64; 2]; 2]) -> (CVector, CVector, f64) {
    // Right singular direction from the 2×2 Gram matrix M†M.
    let mut gram = CMatrix::zeros(2, 2);
    for r in 0..2 {
        for c in 0..2 {
            let mut s = C64::new(0.0, 0.0);
            for k in 0..2 {
                s += m[k][r].conj() * m[k][c];
            }
            gram[(r, c)] = s;
        }
    }
    let eig = gram.symmetric_eigen();
    let (top, low) = if eig.eigenvalues[0] >= eig.eigenvalues[1] { (0, 1) } else { (1, 0) };
    let v = eig.eigenvectors.column(top).into_owned();
    // M = σ u v†  ⇒  a = M v (∝ u), b = conj(v), so that a bᵀ = σ u v†.
    let b = CVector::from_column_slice(&[v[0].conj(), v[1].conj()]);
    let mut a = CVector::from_column_slice(&[
        m[0][0] * v[0] + m[0][1] * v[1],
        m[1][0] * v[0] + m[1][1] * v[1],
    ]);
    let na = a.norm();
    let leak = (eig.eigenvalues[low].max(0.0) / eig.eigenvalues[top].max(1e-300)).sqrt();
    if na < 1e-300 {
        return (CVector::from_column_slice(&[C64::new(1.0, 0.0), C64::new(0.0, 0.0)]), b, 1.0);
    }
    a = a.unscale(na);
    (a, b, leak)
}

/// A product state a ⊗ b inside the span of two orthonormal two-qubit vectors.
///
/// Reshaping x·b0 + y·b1 into a 2×2 matrix makes its determinant a quadratic in
/// (x : y); any projective root gives a rank-1 matrix whose factors are (a, b).
/// Over the complex numbers a root always exists.
pub fn product_state_in_2d(b0: &CVector, b1: &CVector) -> Result<(CVector, CVector)> {
    if b0.len() != 4 || b1.len() != 4 {
        return Err(Error::InvalidState("product_state_in_2d expects two-qubit vectors".into()));
    }
    let m0 = as_matrix2(b0);
    let m1 = as_matrix2(b1);
    let a_coef = det2(&m0);
    let c_coef = det2(&m1);
    // det(x M0 + y M1) = A x² + B xy + C y² with the mixed term below.
    let b_coef = m0[0][0] * m1[1][1] + m1[0][0] * m0[1][1] - m0[0][1] * m1[1][0] - m1[0][1] * m0[1][0];

    let mut candidates: Vec<(C64, C64)> = Vec::new();
    let tiny = 1e-14;
    if a_coef.norm() <= tiny && b_coef.norm() <= tiny && c_coef.norm() <= tiny {
        // Degenerate quadratic: every member of the span is product.
        candidates.push((C64::new(1.0, 0.0), C64::new(0.0, 0.0)));
    } else if a_coef.norm() <= tiny * (b_coef.norm() + c_coef.norm()).max(1.0) {
        // Vanishing leading coefficient: (x : y) = (1 : 0) is a root.
        candidates.push((C64::new(1.0, 0.0), C64::new(0.0, 0.0)));
        if b_coef.norm() > tiny {
            // The linear root of B x + C y = 0 with y = 1.
            candidates.push((-c_coef / b_coef, C64::new(1.0, 0.0)));
        }
    } else {
        let disc = (b_coef * b_coef - a_coef * c_coef * 4.0).sqrt();
        let two_a = a_coef * 2.0;
        candidates.push(((-b_coef + disc) / two_a, C64::new(1.0, 0.0)));
        candidates.push(((-b_coef - disc) / two_a, C64::new(1.0, 0.0)));
    }

    let mut best: Option<(CVector, CVector, f64)> = None;
    for (x, y) in candidates {
        let mut member = b0 * x + b1 * y;
        let norm = member.norm();
        if norm < 1e-300 {
            continue;
        }
        member = member.unscale(norm);
        let (a, b, leak) = factor_rank_one(&as_matrix2(&member));
        if best.as_ref().map_or(true, |(_, _, l)| leak < *l) {
            best = Some((a, b, leak));
        }
    }
    let (a, b, _) = best.ok_or_else(|| {
        Error::InternalInconsistency("no usable root while factoring a 2-dim subspace".into())
    })?;
    Ok((a, b))
}

/// Pure-state concurrence of a normalized two-qubit vector:
/// |⟨ψ|σy⊗σy|ψ*⟩| = 2 |ψ₀ψ₃ − ψ₁ψ₂|. Zero exactly for product states.
pub fn concurrence(psi: &CVector) -> f64 {
    debug_assert_eq!(psi.len(), 4);
    2.0 * (psi[0] * psi[3] - psi[1] * psi[2]).norm()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(re: f64, im: f64) -> C64 {
        C64::new(re, im)
    }

    fn state(n: usize, entries: &[(usize, f64)]) -> PureState {
        let mut amps = CVector::zeros(1 << n);
        for &(idx, v) in entries {
            amps[idx] = c(v, 0.0);
        }
        PureState::new(n, amps).unwrap()
    }

    pub(crate) fn ghz3() -> PureState {
        state(3, &[(0, 1.0), (7, 1.0)])
    }

    pub(crate) fn w3() -> PureState {
        state(3, &[(1, 1.0), (2, 1.0), (4, 1.0)])
    }

    #[test]
    fn basis_ordering_puts_qubit_one_most_significant() {
        let w = w3();
        // |001⟩, |010⟩, |100⟩ live at indices 1, 2, 4.
        let a = 1.0 / 3.0_f64.sqrt();
        for idx in [1, 2, 4] {
            assert!((w.amp(idx).re - a).abs() < 1e-12);
        }
        assert!(w.amp(0).norm() < 1e-15);
    }

    #[test]
    fn partial_trace_of_product_state_is_pure() {
        let s = state(3, &[(0, 1.0)]); // |000⟩
        let rho = partial_trace_pair(&s, (1, 2)).unwrap();
        assert!((rho.matrix()[(0, 0)].re - 1.0).abs() < 1e-12);
        assert!((rho.trace() - 1.0).abs() < 1e-12);
        assert!(rho.idempotency_residual() < 1e-12);
    }

    #[test]
    fn partial_trace_ghz_pair() {
        let rho = partial_trace_pair(&ghz3(), (1, 2)).unwrap();
        // ½(|00⟩⟨00| + |11⟩⟨11|)
        for r in 0..4 {
            for col in 0..4 {
                let expect = if (r, col) == (0, 0) || (r, col) == (3, 3) { 0.5 } else { 0.0 };
                assert!((rho.matrix()[(r, col)] - c(expect, 0.0)).norm() < 1e-12);
            }
        }
    }

    #[test]
    fn partial_trace_w_pair() {
        let rho = partial_trace_pair(&w3(), (1, 2)).unwrap();
        // (1/3)|00⟩⟨00| + (2/3)|ψ⁺⟩⟨ψ⁺|
        let mut expect = CMatrix::zeros(4, 4);
        expect[(0, 0)] = c(1.0 / 3.0, 0.0);
        for r in [1, 2] {
            for col in [1, 2] {
                expect[(r, col)] = c(1.0 / 3.0, 0.0);
            }
        }
        assert!((rho.matrix() - expect).norm() < 1e-12);
    }

    #[test]
    fn partial_trace_rejects_bad_pairs() {
        let s = ghz3();
        assert!(partial_trace_pair(&s, (2, 2)).is_err());
        assert!(partial_trace_pair(&s, (0, 2)).is_err());
        assert!(partial_trace_pair(&s, (1, 4)).is_err());
        assert!(partial_trace_pair(&s, (2, 1)).is_err());
    }

    #[test]
    fn support_projector_ghz_pair_has_rank_two() {
        let rho = partial_trace_pair(&ghz3(), (1, 2)).unwrap();
        let (p, rank) = support_projector(&rho, RANK_TOL).unwrap();
        assert_eq!(rank, 2);
        assert!(p.idempotency_residual() < 1e-10);
        // Projector onto span{|00⟩, |11⟩}.
        assert!((p.matrix()[(0, 0)].re - 1.0).abs() < 1e-10);
        assert!((p.matrix()[(3, 3)].re - 1.0).abs() < 1e-10);
        assert!(p.matrix()[(1, 1)].norm() < 1e-10);
    }

    #[test]
    fn support_projector_identity_and_pure() {
        let quarter = HermitianOp::new(CMatrix::identity(4, 4).unscale(4.0)).unwrap();
        let (p, rank) = support_projector(&quarter, RANK_TOL).unwrap();
        assert_eq!(rank, 4);
        assert!((p.matrix() - CMatrix::identity(4, 4)).norm() < 1e-10);

        let mut pure = CMatrix::zeros(4, 4);
        pure[(1, 1)] = c(1.0, 0.0); // |01⟩⟨01|
        let (_, rank) = support_projector(&HermitianOp::new(pure).unwrap(), RANK_TOL).unwrap();
        assert_eq!(rank, 1);
    }

    #[test]
    fn support_projector_rejects_negative_matrices() {
        let mut m = CMatrix::identity(2, 2);
        m[(1, 1)] = c(-1.0, 0.0);
        let err = support_projector(&HermitianOp::new(m).unwrap(), RANK_TOL);
        assert!(matches!(err, Err(Error::NotPositiveSemidefinite { .. })));
    }

    #[test]
    fn zero_eigenspace_of_diagonal() {
        let diag = CMatrix::from_diagonal(&CVector::from_column_slice(&[
            c(0.0, 0.0),
            c(1.0, 0.0),
            c(2.0, 0.0),
            c(0.0, 0.0),
        ]));
        let basis = zero_eigenspace(&HermitianOp::new(diag).unwrap(), 1e-9);
        assert_eq!(basis.len(), 2);
        for v in &basis {
            assert!(v[1].norm() < 1e-10 && v[2].norm() < 1e-10);
        }
    }

    #[test]
    fn product_state_in_span_00_11() {
        let b0 = CVector::from_column_slice(&[c(1.0, 0.0), c(0.0, 0.0), c(0.0, 0.0), c(0.0, 0.0)]);
        let b1 = CVector::from_column_slice(&[c(0.0, 0.0), c(0.0, 0.0), c(0.0, 0.0), c(1.0, 0.0)]);
        let (a, b) = product_state_in_2d(&b0, &b1).unwrap();
        let prod = kron_vec(&a, &b);
        assert!(residual_outside_span(&prod, &[b0, b1]) < 1e-10);
        assert!(concurrence(&prod) < 1e-10);
    }

    #[test]
    fn product_state_in_span_01_bell() {
        // span{|01⟩, (|00⟩+|11⟩)/√2}: the only product direction is |01⟩ = |0⟩⊗|1⟩.
        let b0 = CVector::from_column_slice(&[c(0.0, 0.0), c(1.0, 0.0), c(0.0, 0.0), c(0.0, 0.0)]);
        let r = 1.0 / 2.0_f64.sqrt();
        let b1 = CVector::from_column_slice(&[c(r, 0.0), c(0.0, 0.0), c(0.0, 0.0), c(r, 0.0)]);
        let (a, b) = product_state_in_2d(&b0, &b1).unwrap();
        assert!(a[1].norm() < 1e-8, "left factor should be |0⟩");
        assert!(b[0].norm() < 1e-8, "right factor should be |1⟩");
        let prod = kron_vec(&a, &b);
        assert!(residual_outside_span(&prod, &[b0, b1]) < 1e-10);
    }

    #[test]
    fn product_state_in_span_of_two_bells() {
        // span{Φ⁺, Ψ⁺} contains |+⟩⊗|+⟩ (root x = y of det = (x²−y²)/2).
        let r = 1.0 / 2.0_f64.sqrt();
        let b0 = CVector::from_column_slice(&[c(r, 0.0), c(0.0, 0.0), c(0.0, 0.0), c(r, 0.0)]);
        let b1 = CVector::from_column_slice(&[c(0.0, 0.0), c(r, 0.0), c(r, 0.0), c(0.0, 0.0)]);
        let (a, b) = product_state_in_2d(&b0, &b1).unwrap();
        let prod = kron_vec(&a, &b);
        assert!(residual_outside_span(&prod, &[b0, b1]) < 1e-10);
        assert!(concurrence(&prod) < 1e-10);
        // Both factors proportional to |+⟩: equal-magnitude components.
        assert!((a[0].norm() - a[1].norm()).abs() < 1e-8);
        assert!((b[0].norm() - b[1].norm()).abs() < 1e-8);
    }

    #[test]
    fn concurrence_values() {
        let r = 1.0 / 2.0_f64.sqrt();
        let bell = CVector::from_column_slice(&[c(r, 0.0), c(0.0, 0.0), c(0.0, 0.0), c(r, 0.0)]);
        assert!((concurrence(&bell) - 1.0).abs() < 1e-12);
        let zz = CVector::from_column_slice(&[c(1.0, 0.0), c(0.0, 0.0), c(0.0, 0.0), c(0.0, 0.0)]);
        assert!(concurrence(&zz) < 1e-12);
        let zplus = CVector::from_column_slice(&[c(r, 0.0), c(r, 0.0), c(0.0, 0.0), c(0.0, 0.0)]);
        assert!(concurrence(&zplus) < 1e-12);
    }

    #[test]
    fn support_projector_reproduces_rho() {
        // PρP = ρ for a random-ish PSD matrix.
        let a = CMatrix::from_fn(4, 4, |r, c_| c((r * 7 + c_ * 3) as f64 * 0.1 - 0.8, (r as f64 - c_ as f64) * 0.05));
        let psd = HermitianOp::new(&a * a.adjoint()).unwrap();
        let (p, _) = support_projector(&psd, RANK_TOL).unwrap();
        let back = p.matrix() * psd.matrix() * p.matrix();
        assert!((back - psd.matrix()).norm() < 1e-9);
    }
}
