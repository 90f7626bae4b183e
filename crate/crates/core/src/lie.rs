//! Real Lie algebras of skew-Hermitian matrices.
//!
//! Matrices are treated as vectors of a real inner-product space with
//! `⟨A, B⟩ = Re Tr(A†B)`. Every dimension decision goes through one relative
//! tolerance: a candidate direction counts as new when the residual of its
//! unit-normalized form, after projecting out the current basis, exceeds it.

use alloc::vec::Vec;

use crate::qalg::{bracket, partial_trace, ComplexMatrix, Subsystem};
use crate::{Error, Result};

/// Orthonormal basis of a real subspace of `u(n)`.
///
/// Bases produced by [`orthonormalize`] and [`closure`] are traceless;
/// [`invariant_space`] and [`trace_a_image`] may contain a multiple of `i·1`.
#[derive(Clone, Debug, PartialEq)]
pub struct LieBasis {
    dim: usize,
    elements: Vec<ComplexMatrix>,
}

impl LieBasis {
    pub fn empty(dim: usize) -> Self {
        LieBasis {
            dim,
            elements: Vec::new(),
        }
    }

    /// Matrix size `n` of the elements.
    pub fn matrix_dim(&self) -> usize {
        self.dim
    }

    /// Dimension of the spanned subspace.
    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn elements(&self) -> &[ComplexMatrix] {
        &self.elements
    }

    pub fn iter(&self) -> core::slice::Iter<'_, ComplexMatrix> {
        self.elements.iter()
    }

    /// Orthogonal projection of `m` onto the span.
    pub fn project(&self, m: &ComplexMatrix) -> ComplexMatrix {
        let mut p = ComplexMatrix::zeros(m.dim());
        for e in &self.elements {
            p.axpy(e.inner_re(m), e);
        }
        p
    }

    /// `‖m − P m‖ / ‖m‖`, zero for `m = 0`.
    pub fn relative_residual(&self, m: &ComplexMatrix) -> f64 {
        let norm = m.frobenius_norm();
        if norm == 0.0 {
            return 0.0;
        }
        let mut r = m.scale_re(1.0 / norm);
        for _ in 0..2 {
            for e in &self.elements {
                r.axpy(-e.inner_re(&r), e);
            }
        }
        r.frobenius_norm()
    }

    /// Membership test with relative tolerance `tol`.
    pub fn contains(&self, m: &ComplexMatrix, tol: f64) -> bool {
        m.dim() == self.dim && self.relative_residual(m) < tol
    }

    /// Mutual containment of spans.
    pub fn same_span(&self, other: &LieBasis, tol: f64) -> bool {
        self.len() == other.len()
            && self.is_subspace_of(other, tol)
            && other.is_subspace_of(self, tol)
    }

    pub fn is_subspace_of(&self, other: &LieBasis, tol: f64) -> bool {
        self.elements.iter().all(|e| other.contains(e, tol))
    }

    /// Largest `‖[E_i, E_j] − P[E_i, E_j]‖` over basis pairs; zero for a subalgebra.
    pub fn closure_defect(&self) -> f64 {
        let mut worst = 0.0f64;
        for (i, a) in self.elements.iter().enumerate() {
            for b in &self.elements[..i] {
                let c = bracket(a, b);
                let r = &c - &self.project(&c);
                worst = worst.max(r.frobenius_norm());
            }
        }
        worst
    }
}

impl<'a> IntoIterator for &'a LieBasis {
    type Item = &'a ComplexMatrix;
    type IntoIter = core::slice::Iter<'a, ComplexMatrix>;

    fn into_iter(self) -> Self::IntoIter {
        self.elements.iter()
    }
}

/// Incremental Gram–Schmidt with a second re-orthogonalization pass.
struct Builder {
    basis: LieBasis,
    tol: f64,
    cap: usize,
}

impl Builder {
    fn new(dim: usize, tol: f64, cap: usize) -> Self {
        Builder {
            basis: LieBasis::empty(dim),
            tol,
            cap,
        }
    }

    fn full(&self) -> bool {
        self.basis.len() >= self.cap
    }

    /// Adds `m / scale` if it leaves a residual above the tolerance.
    fn push(&mut self, m: &ComplexMatrix, scale: f64) -> bool {
        if self.full() || scale == 0.0 || !scale.is_finite() {
            return false;
        }
        let mut r = m.scale_re(1.0 / scale);
        for _ in 0..2 {
            for e in &self.basis.elements {
                r.axpy(-e.inner_re(&r), e);
            }
        }
        let n = r.frobenius_norm();
        if n > self.tol {
            self.basis.elements.push(r.scale_re(1.0 / n));
            true
        } else {
            false
        }
    }

    fn push_normalized(&mut self, m: &ComplexMatrix) -> bool {
        self.push(m, m.frobenius_norm())
    }
}

fn check_dims(mats: &[ComplexMatrix]) -> Result<usize> {
    let dim = mats.first().map_or(0, ComplexMatrix::dim);
    if let Some(m) = mats.iter().find(|m| m.dim() != dim) {
        return Err(Error::DimensionMismatch {
            left: dim,
            right: m.dim(),
        });
    }
    Ok(dim)
}

/// Orthonormal basis of the real span of skew-Hermitian `mats`.
pub fn orthonormalize(mats: &[ComplexMatrix], tol: f64) -> Result<LieBasis> {
    let dim = check_dims(mats)?;
    for m in mats {
        let residual = m.skew_hermitian_residual();
        if residual > tol * m.frobenius_norm().max(1.0) {
            return Err(Error::NotSkewHermitian { residual });
        }
    }
    let mut b = Builder::new(dim, tol, dim * dim);
    for m in mats {
        b.push_normalized(m);
    }
    Ok(b.basis)
}

/// Lie algebra generated by `generators` (skew-Hermitian, traceless).
///
/// Each new basis element is bracketed with every earlier one, in order,
/// until no sweep adds a direction or the span reaches `su(n)`.
pub fn closure(generators: &[ComplexMatrix], tol: f64) -> LieBasis {
    let dim = generators.first().map_or(0, ComplexMatrix::dim);
    debug_assert!(generators.iter().all(|g| g.dim() == dim));
    let mut b = Builder::new(dim, tol, (dim * dim).saturating_sub(1));
    for g in generators {
        b.push_normalized(g);
    }
    let mut i = 0;
    while i < b.basis.len() && !b.full() {
        for j in 0..i {
            // operands are unit-norm, so the bracket is already on the input scale
            let c = bracket(&b.basis.elements[i], &b.basis.elements[j]);
            b.push(&c, 1.0);
            if b.full() {
                break;
            }
        }
        i += 1;
    }
    b.basis
}

/// Smallest `ad_L`-invariant subspace containing `seed`.
pub fn invariant_space(l: &LieBasis, seed: &ComplexMatrix, tol: f64) -> LieBasis {
    let dim = seed.dim();
    let mut v = Builder::new(dim, tol, dim * dim);
    v.push_normalized(seed);
    let mut i = 0;
    while i < v.basis.len() && !v.full() {
        let current = v.basis.elements[i].clone();
        for e in l {
            let c = bracket(e, &current);
            v.push(&c, 1.0);
        }
        i += 1;
    }
    v.basis
}

/// Orthonormal basis of `Tr_A(V)` inside `u(2)`.
pub fn trace_a_image(v: &LieBasis, tol: f64) -> Result<LieBasis> {
    let mut b = Builder::new(2, tol, 4);
    for m in v {
        let t = partial_trace(m, Subsystem::S)?;
        // Tr_A of a unit vector has norm at most √2
        b.push(&t, 1.0);
    }
    Ok(b.basis)
}
