//! Canonical subspaces of `Q^m` and the exact elimination routines behind them.
//!
//! A [`Subspace`] always stores its basis in reduced row-echelon form, so two
//! subspaces are equal exactly when their representations are equal.

use num_traits::{One, Zero};

use crate::error::{EvoError, Result};
use crate::matrix::Matrix;
use crate::scalar::Scalar;

/// Reduces `rows` (all of length `width`) in place to reduced row-echelon
/// form, drops zero rows and returns the pivot column of each kept row.
pub fn rref(rows: &mut Vec<Vec<Scalar>>, width: usize) -> Vec<usize> {
    let mut pivots = Vec::new();
    let mut next = 0;
    for col in 0..width {
        if next == rows.len() {
            break;
        }
        let Some(found) = (next..rows.len()).find(|&r| !rows[r][col].is_zero()) else {
            continue;
        };
        rows.swap(next, found);
        let inv = rows[next][col].recip();
        if !inv.is_one() {
            for x in rows[next].iter_mut().skip(col) {
                *x *= &inv;
            }
        }
        let pivot_row = rows[next].clone();
        for (r, row) in rows.iter_mut().enumerate() {
            if r == next || row[col].is_zero() {
                continue;
            }
            let factor = row[col].clone();
            for (x, p) in row.iter_mut().zip(&pivot_row).skip(col) {
                if !p.is_zero() {
                    *x -= &factor * p;
                }
            }
        }
        pivots.push(col);
        next += 1;
    }
    rows.truncate(next);
    pivots
}

/// Basis of `{x : A x = 0}` where `A` has the given rows and `width` columns.
pub fn nullspace(equations: &[Vec<Scalar>], width: usize) -> Vec<Vec<Scalar>> {
    let mut rows: Vec<Vec<Scalar>> = equations
        .iter()
        .filter(|r| r.iter().any(|x| !x.is_zero()))
        .cloned()
        .collect();
    let pivots = rref(&mut rows, width);
    let mut is_pivot = vec![false; width];
    for &p in &pivots {
        is_pivot[p] = true;
    }
    (0..width)
        .filter(|&c| !is_pivot[c])
        .map(|free| {
            let mut v = vec![Scalar::zero(); width];
            v[free] = Scalar::one();
            for (row, &p) in rows.iter().zip(&pivots) {
                v[p] = -row[free].clone();
            }
            v
        })
        .collect()
}

/// Coefficients `c` with `sum_k c_k basis[k] = target`, if any.
pub fn solve_combination(basis: &[Vec<Scalar>], target: &[Scalar]) -> Option<Vec<Scalar>> {
    let k = basis.len();
    let width = target.len();
    // Augmented system: one equation per coordinate, unknowns c_0..c_{k-1}.
    let mut rows: Vec<Vec<Scalar>> = (0..width)
        .map(|i| {
            let mut row: Vec<Scalar> = basis.iter().map(|b| b[i].clone()).collect();
            row.push(target[i].clone());
            row
        })
        .collect();
    let pivots = rref(&mut rows, k + 1);
    if pivots.last() == Some(&k) {
        return None;
    }
    let mut c = vec![Scalar::zero(); k];
    for (row, &p) in rows.iter().zip(&pivots) {
        c[p] = row[k].clone();
    }
    Some(c)
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Subspace {
    ambient: usize,
    basis: Vec<Vec<Scalar>>,
    pivots: Vec<usize>,
}

impl Subspace {
    pub fn zero(ambient: usize) -> Self {
        Subspace {
            ambient,
            basis: Vec::new(),
            pivots: Vec::new(),
        }
    }

    pub fn full(ambient: usize) -> Self {
        Self::span(ambient, (0..ambient).map(|i| unit_vector(ambient, i)))
            .expect("unit vectors have the ambient length")
    }

    /// Span of arbitrary vectors of length `ambient`.
    pub fn span<I>(ambient: usize, vectors: I) -> Result<Self>
    where
        I: IntoIterator<Item = Vec<Scalar>>,
    {
        let mut rows = Vec::new();
        for v in vectors {
            if v.len() != ambient {
                return Err(EvoError::DimensionMismatch {
                    expected: ambient,
                    found: v.len(),
                });
            }
            if v.iter().any(|x| !x.is_zero()) {
                rows.push(v);
            }
        }
        let pivots = rref(&mut rows, ambient);
        Ok(Subspace {
            ambient,
            basis: rows,
            pivots,
        })
    }

    /// Span of matrices, flattened row-major.
    pub fn span_matrices<'a, I>(rows: usize, cols: usize, matrices: I) -> Result<Self>
    where
        I: IntoIterator<Item = &'a Matrix>,
    {
        let mut vs = Vec::new();
        for m in matrices {
            if (m.rows(), m.cols()) != (rows, cols) {
                return Err(EvoError::DimensionMismatch {
                    expected: rows * cols,
                    found: m.rows() * m.cols(),
                });
            }
            vs.push(m.as_flat().to_vec());
        }
        Self::span(rows * cols, vs)
    }

    /// Solution space of the homogeneous system with the given equations.
    pub fn kernel_of(equations: &[Vec<Scalar>], ambient: usize) -> Self {
        Self::span(ambient, nullspace(equations, ambient)).expect("nullspace vectors fit")
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn is_zero(&self) -> bool {
        self.basis.is_empty()
    }

    pub fn basis(&self) -> &[Vec<Scalar>] {
        &self.basis
    }

    /// Leading coordinate of each basis vector; these are the free
    /// parameters of the subspace.
    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    /// Basis vectors reshaped into `rows x cols` matrices.
    pub fn basis_matrices(&self, rows: usize, cols: usize) -> Vec<Matrix> {
        assert_eq!(rows * cols, self.ambient);
        self.basis
            .iter()
            .map(|v| Matrix::from_flat(rows, cols, v.clone()).expect("shape checked"))
            .collect()
    }

    /// Coordinates of `v` in the canonical basis, or `None` if `v` is outside.
    ///
    /// In rref the coordinate along basis vector `k` is read off at its
    /// pivot, so only a reconstruction check is needed.
    pub fn coordinates(&self, v: &[Scalar]) -> Option<Vec<Scalar>> {
        if v.len() != self.ambient {
            return None;
        }
        let coords: Vec<Scalar> = self.pivots.iter().map(|&p| v[p].clone()).collect();
        let mut rest = v.to_vec();
        for (c, b) in coords.iter().zip(&self.basis) {
            if c.is_zero() {
                continue;
            }
            for (x, y) in rest.iter_mut().zip(b) {
                if !y.is_zero() {
                    *x -= c * y;
                }
            }
        }
        rest.iter().all(Zero::is_zero).then_some(coords)
    }

    pub fn contains(&self, v: &[Scalar]) -> bool {
        self.coordinates(v).is_some()
    }

    pub fn contains_matrix(&self, m: &Matrix) -> bool {
        self.contains(m.as_flat())
    }

    pub fn is_subspace_of(&self, other: &Subspace) -> bool {
        self.ambient == other.ambient && self.basis.iter().all(|b| other.contains(b))
    }

    pub fn sum(&self, other: &Subspace) -> Result<Subspace> {
        self.check_ambient(other)?;
        Subspace::span(
            self.ambient,
            self.basis.iter().chain(&other.basis).cloned(),
        )
    }

    /// Exact intersection.
    ///
    /// `other` is cut out by the linear functionals in its orthogonal
    /// complement; the intersection is the set of combinations of `self`'s
    /// basis annihilated by all of them.
    pub fn intersection(&self, other: &Subspace) -> Result<Subspace> {
        self.check_ambient(other)?;
        let functionals = nullspace(&other.basis, self.ambient);
        if functionals.is_empty() {
            return Ok(self.clone());
        }
        let equations: Vec<Vec<Scalar>> = functionals
            .iter()
            .map(|f| self.basis.iter().map(|b| dot(f, b)).collect())
            .collect();
        let combos = nullspace(&equations, self.basis.len());
        Subspace::span(
            self.ambient,
            combos.into_iter().map(|c| {
                let mut v = vec![Scalar::zero(); self.ambient];
                for (ck, b) in c.iter().zip(&self.basis) {
                    if ck.is_zero() {
                        continue;
                    }
                    for (x, y) in v.iter_mut().zip(b) {
                        *x += ck * y;
                    }
                }
                v
            }),
        )
    }

    fn check_ambient(&self, other: &Subspace) -> Result<()> {
        if self.ambient != other.ambient {
            return Err(EvoError::DimensionMismatch {
                expected: self.ambient,
                found: other.ambient,
            });
        }
        Ok(())
    }
}

pub fn unit_vector(len: usize, i: usize) -> Vec<Scalar> {
    let mut v = vec![Scalar::zero(); len];
    v[i] = Scalar::one();
    v
}

pub fn dot(a: &[Scalar], b: &[Scalar]) -> Scalar {
    a.iter()
        .zip(b)
        .filter(|(x, y)| !x.is_zero() && !y.is_zero())
        .fold(Scalar::zero(), |acc, (x, y)| acc + x * y)
}
