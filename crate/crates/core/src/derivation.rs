//! Derivations, their Lie bracket, and inner derivations.
//!
//! A derivation is stored as an `n x n` [`Matrix`] with column `i` equal to
//! `d(e_i)`. Spaces of derivations are [`Subspace`]s of `Q^{n^2}` using the
//! row-major flattening of that matrix, so entry `d_ji` sits at coordinate
//! `(j - 1) n + (i - 1)`.

use num_traits::Zero;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::algebra::{AlgebraElement, EvolutionAlgebra};
use crate::error::{EvoError, Result};
use crate::matrix::{DerivationMatrix, Matrix};
use crate::scalar::{sample_int, Scalar};
use crate::subspace::{solve_combination, Subspace};

/// `d(e_i e_j) - d(e_i) e_j - e_i d(e_j)` for every pair `i <= j`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LeibnizDefect {
    pub entries: Vec<((usize, usize), AlgebraElement)>,
}

impl LeibnizDefect {
    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(|(_, v)| v.is_zero())
    }

    /// Defect at the 0-based pair `(i, j)`, `i <= j`.
    pub fn at(&self, i: usize, j: usize) -> Option<&AlgebraElement> {
        let key = (i.min(j), i.max(j));
        self.entries.iter().find(|(k, _)| *k == key).map(|(_, v)| v)
    }

    fn flatten(self) -> Vec<Scalar> {
        self.entries.into_iter().flat_map(|(_, v)| v.into_coords()).collect()
    }
}

fn check_square(e: &EvolutionAlgebra, d: &Matrix) -> Result<()> {
    if !d.is_square() || d.rows() != e.dim() {
        return Err(EvoError::DimensionMismatch {
            expected: e.dim(),
            found: if d.rows() == e.dim() { d.cols() } else { d.rows() },
        });
    }
    Ok(())
}

pub fn leibniz_defect(e: &EvolutionAlgebra, d: &DerivationMatrix) -> Result<LeibnizDefect> {
    check_square(e, d)?;
    let n = e.dim();
    let images: Vec<Vec<Scalar>> = (0..n).map(|i| d.column(i)).collect();
    let mut entries = Vec::with_capacity(n * (n + 1) / 2);
    for i in 0..n {
        let ei = AlgebraElement::basis(n, i);
        for j in i..n {
            let ej = AlgebraElement::basis(n, j);
            let product = if i == j {
                e.square_of_basis(i).to_vec()
            } else {
                vec![Scalar::zero(); n]
            };
            let lhs = AlgebraElement::new(d.apply(&product));
            let a = e.mul_unchecked(&images[i], ej.coords());
            let b = e.mul_unchecked(ei.coords(), &images[j]);
            entries.push(((i, j), &(&lhs - &a) - &b));
        }
    }
    Ok(LeibnizDefect { entries })
}

pub fn is_derivation(e: &EvolutionAlgebra, d: &DerivationMatrix) -> Result<bool> {
    Ok(leibniz_defect(e, d)?.is_zero())
}

/// `D(E)` as the kernel of the Leibniz conditions.
///
/// The defect is linear in `d`, so the coefficient column of unknown `d_ji`
/// is the defect of the matrix unit at `(j, i)`.
pub fn derivation_space(e: &EvolutionAlgebra) -> Subspace {
    let n = e.dim();
    let columns: Vec<Vec<Scalar>> = (0..n * n)
        .map(|u| {
            let unit = Matrix::unit(n, n, u / n, u % n);
            leibniz_defect(e, &unit).expect("unit has the right shape").flatten()
        })
        .collect();
    let neq = columns.first().map_or(0, Vec::len);
    let equations: Vec<Vec<Scalar>> = (0..neq)
        .map(|r| columns.iter().map(|c| c[r].clone()).collect())
        .collect();
    Subspace::kernel_of(&equations, n * n)
}

/// Canonical basis of `D(E)` as matrices.
pub fn derivation_basis(e: &EvolutionAlgebra) -> Vec<DerivationMatrix> {
    let n = e.dim();
    derivation_space(e).basis_matrices(n, n)
}

/// `[d, d'] = d∘d' - d'∘d`.
pub fn bracket(d: &DerivationMatrix, d2: &DerivationMatrix) -> Result<DerivationMatrix> {
    if !d.is_square() || d.rows() != d2.rows() || d.cols() != d2.cols() {
        return Err(EvoError::DimensionMismatch {
            expected: d.rows(),
            found: d2.rows(),
        });
    }
    d.commutator(d2)
}

/// Span of all pairwise brackets of `basis` (matrices of side `n`).
pub fn derived_subalgebra(n: usize, basis: &[DerivationMatrix]) -> Result<Subspace> {
    let mut brackets = Vec::new();
    for (k, a) in basis.iter().enumerate() {
        for b in &basis[k + 1..] {
            brackets.push(bracket(a, b)?);
        }
    }
    Subspace::span_matrices(n, n, &brackets)
}

/// Structure constants `[b_i, b_j] = sum_k c[i][j][k] b_k`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LieStructure {
    pub dim: usize,
    pub constants: Vec<Vec<Vec<Scalar>>>,
}

impl LieStructure {
    pub fn is_abelian(&self) -> bool {
        self.constants.iter().flatten().flatten().all(Zero::is_zero)
    }

    pub fn is_antisymmetric(&self) -> bool {
        (0..self.dim).all(|i| {
            (0..self.dim).all(|j| {
                (0..self.dim).all(|k| self.constants[i][j][k] == -self.constants[j][i][k].clone())
            })
        })
    }

    /// `[[a,b],c] + [[b,c],a] + [[c,a],b] = 0` on basis triples.
    pub fn satisfies_jacobi(&self) -> bool {
        let n = self.dim;
        let c = &self.constants;
        for i in 0..n {
            for j in 0..n {
                for k in 0..n {
                    for m in 0..n {
                        let mut total = Scalar::zero();
                        for l in 0..n {
                            if !c[i][j][l].is_zero() && !c[l][k][m].is_zero() {
                                total += &c[i][j][l] * &c[l][k][m];
                            }
                            if !c[j][k][l].is_zero() && !c[l][i][m].is_zero() {
                                total += &c[j][k][l] * &c[l][i][m];
                            }
                            if !c[k][i][l].is_zero() && !c[l][j][m].is_zero() {
                                total += &c[k][i][l] * &c[l][j][m];
                            }
                        }
                        if !total.is_zero() {
                            return false;
                        }
                    }
                }
            }
        }
        true
    }

    /// Dimension of the derived algebra: rank of the bracket vectors.
    pub fn derived_dim(&self) -> usize {
        let vectors = self.constants.iter().flatten().cloned();
        Subspace::span(self.dim, vectors).map(|s| s.dim()).unwrap_or(0)
    }
}

/// Structure constants of `span(basis)` relative to `basis`.
pub fn lie_structure(basis: &[DerivationMatrix]) -> Result<LieStructure> {
    let dim = basis.len();
    let flat: Vec<Vec<Scalar>> = basis.iter().map(|m| m.as_flat().to_vec()).collect();
    if let Some(first) = basis.first() {
        let span = Subspace::span_matrices(first.rows(), first.cols(), basis)?;
        if span.dim() != dim {
            return Err(EvoError::InvalidInput(
                "basis matrices are linearly dependent".into(),
            ));
        }
    }
    let mut constants = vec![vec![vec![Scalar::zero(); dim]; dim]; dim];
    for i in 0..dim {
        for j in i + 1..dim {
            let br = bracket(&basis[i], &basis[j])?;
            let coords = solve_combination(&flat, br.as_flat()).ok_or(EvoError::NotClosed)?;
            constants[j][i] = coords.iter().map(|x| -x.clone()).collect();
            constants[i][j] = coords;
        }
    }
    let ls = LieStructure { dim, constants };
    debug_assert!(ls.is_antisymmetric());
    Ok(ls)
}

/// `R_a : x ↦ xa`; column `i` is `e_i a = a_i e_i^2`.
pub fn right_mult(e: &EvolutionAlgebra, a: &AlgebraElement) -> Result<Matrix> {
    if a.len() != e.dim() {
        return Err(EvoError::DimensionMismatch {
            expected: e.dim(),
            found: a.len(),
        });
    }
    let n = e.dim();
    Ok(Matrix::from_fn(n, n, |k, i| {
        &a.coords()[i] * e.structure().get(i, k)
    }))
}

/// `R(E) + [R(E), R(E)]`, spanned by generator maps `R_{e_i}` and their brackets.
pub fn lie_transformation_space(e: &EvolutionAlgebra) -> Subspace {
    let n = e.dim();
    let gens: Vec<Matrix> = (0..n)
        .map(|i| right_mult(e, &AlgebraElement::basis(n, i)).expect("basis vector fits"))
        .collect();
    let mut all = gens.clone();
    for i in 0..n {
        for j in i + 1..n {
            all.push(gens[i].commutator(&gens[j]).expect("square"));
        }
    }
    Subspace::span_matrices(n, n, &all).expect("all matrices are n x n")
}

/// `In(E) = D(E) ∩ L(E)`; requires a power-associative (hence Jordan) algebra.
pub fn inner_derivations(e: &EvolutionAlgebra) -> Result<Subspace> {
    if !e.is_power_associative() {
        return Err(EvoError::NotPowerAssociative);
    }
    derivation_space(e).intersection(&lie_transformation_space(e))
}

/// Explicit pieces `H`, `L`, `g` of the derivation algebra of an associative
/// nilalgebra with one-dimensional annihilator `K e_n`, where
/// `e_i^2 = alpha_i e_n` for `i < n`.
#[derive(Clone, Debug)]
pub struct Ann1Basis {
    pub n: usize,
    /// `h_ji = e_ji - alpha_i^{-1} alpha_j e_ij`, `1 <= i < j <= n-1`.
    pub h_generators: Vec<Matrix>,
    /// `e_nj`, `1 <= j <= n-1`.
    pub l_generators: Vec<Matrix>,
    /// `e_11 + ... + e_{n-1,n-1} + 2 e_nn`.
    pub g: Matrix,
    pub h: Subspace,
    pub l: Subspace,
}

impl Ann1Basis {
    pub fn full_span(&self) -> Subspace {
        let n = self.n;
        Subspace::span_matrices(
            n,
            n,
            self.h_generators
                .iter()
                .chain(&self.l_generators)
                .chain(std::iter::once(&self.g)),
        )
        .expect("n x n")
    }

    pub fn h_plus_l(&self) -> Subspace {
        self.h.sum(&self.l).expect("same ambient")
    }
}

pub fn expected_basis_ann1(n: usize, alphas: &[Scalar]) -> Result<Ann1Basis> {
    if n < 3 {
        return Err(EvoError::InvalidInput(format!("need n >= 3, got {n}")));
    }
    if alphas.len() != n - 1 {
        return Err(EvoError::DimensionMismatch {
            expected: n - 1,
            found: alphas.len(),
        });
    }
    if let Some(k) = alphas.iter().position(Zero::is_zero) {
        return Err(EvoError::InvalidInput(format!("alpha_{} must be nonzero", k + 1)));
    }
    let mut h_generators = Vec::new();
    for i in 0..n - 1 {
        for j in i + 1..n - 1 {
            let mut h = Matrix::unit(n, n, j, i);
            h.set(i, j, -(&alphas[j] / &alphas[i]));
            h_generators.push(h);
        }
    }
    let l_generators: Vec<Matrix> = (0..n - 1).map(|j| Matrix::unit(n, n, n - 1, j)).collect();
    let mut g = Matrix::identity(n);
    g.set(n - 1, n - 1, Scalar::from_integer(2.into()));
    let h = Subspace::span_matrices(n, n, &h_generators)?;
    let l = Subspace::span_matrices(n, n, &l_generators)?;
    Ok(Ann1Basis {
        n,
        h_generators,
        l_generators,
        g,
        h,
        l,
    })
}

/// True iff `d` is nilpotent of index exactly `dim E`, i.e. a single
/// nilpotent Jordan block, so `e_0, d e_0, ..., d^{n-1} e_0` is an adapted basis.
pub fn adn_witness_check(e: &EvolutionAlgebra, d: &DerivationMatrix) -> Result<bool> {
    if !is_derivation(e, d)? {
        return Err(EvoError::NotDerivation);
    }
    Ok(has_full_index(d))
}

fn has_full_index(d: &DerivationMatrix) -> bool {
    d.trace().is_zero() && d.nilpotency_index() == Some(d.rows() as u32)
}

/// Random search for an ADN witness among integer combinations (coefficients
/// in `-3..=3`) of the canonical derivation basis.
pub fn adn_search(e: &EvolutionAlgebra, trials: usize, seed: u64) -> Option<DerivationMatrix> {
    let basis = derivation_basis(e);
    if basis.is_empty() {
        return None;
    }
    let n = e.dim();
    let traces: Vec<Scalar> = basis.iter().map(Matrix::trace).collect();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..trials {
        let coeffs: Vec<Scalar> = basis.iter().map(|_| sample_int(&mut rng, -3, 3)).collect();
        // nilpotent maps are traceless
        let trace = coeffs.iter().zip(&traces).fold(Scalar::zero(), |acc, (c, t)| acc + c * t);
        if !trace.is_zero() {
            continue;
        }
        let mut d = Matrix::zeros(n, n);
        for (b, c) in basis.iter().zip(&coeffs) {
            if !c.is_zero() {
                d = &d + &b.scale(c);
            }
        }
        if has_full_index(&d) {
            debug_assert!(is_derivation(e, &d).unwrap_or(false));
            return Some(d);
        }
    }
    None
}

/// `[D, I] ⊆ I` for subspaces of `n x n` matrices.
pub fn is_ideal(n: usize, algebra: &Subspace, ideal: &Subspace) -> bool {
    let a = algebra.basis_matrices(n, n);
    let b = ideal.basis_matrices(n, n);
    a.iter().all(|x| {
        b.iter()
            .all(|y| ideal.contains_matrix(&x.commutator(y).expect("square")))
    })
}

/// Every pairwise bracket of the basis lies back in the space.
pub fn is_bracket_closed(n: usize, space: &Subspace) -> bool {
    is_ideal(n, space, space)
}
