//! Evolution algebras in a natural basis.
//!
//! An evolution algebra of dimension `n` is fixed by its structure matrix:
//! row `i` holds the coordinates of `e_i^2`, and distinct basis vectors
//! multiply to zero.

use std::fmt;
use std::ops::{Add, Sub};

use num_traits::{One, Zero};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::error::{EvoError, Result};
use crate::matrix::Matrix;
use crate::polynomial::Polynomial;
use crate::scalar::{format_scalar, sample_int, Scalar};
use crate::subspace::{unit_vector, Subspace};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct AlgebraElement(Vec<Scalar>);

impl AlgebraElement {
    pub fn new(coords: Vec<Scalar>) -> Self {
        AlgebraElement(coords)
    }

    pub fn zero(n: usize) -> Self {
        AlgebraElement(vec![Scalar::zero(); n])
    }

    /// Natural basis vector `e_{i+1}` (0-based index).
    pub fn basis(n: usize, i: usize) -> Self {
        AlgebraElement(unit_vector(n, i))
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn coords(&self) -> &[Scalar] {
        &self.0
    }

    pub fn into_coords(self) -> Vec<Scalar> {
        self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(Zero::is_zero)
    }

    pub fn scale(&self, c: &Scalar) -> Self {
        AlgebraElement(self.0.iter().map(|x| x * c).collect())
    }
}

impl<'a> Add for &'a AlgebraElement {
    type Output = AlgebraElement;
    fn add(self, rhs: &'a AlgebraElement) -> AlgebraElement {
        AlgebraElement(self.0.iter().zip(&rhs.0).map(|(a, b)| a + b).collect())
    }
}

impl<'a> Sub for &'a AlgebraElement {
    type Output = AlgebraElement;
    fn sub(self, rhs: &'a AlgebraElement) -> AlgebraElement {
        AlgebraElement(self.0.iter().zip(&rhs.0).map(|(a, b)| a - b).collect())
    }
}

impl fmt::Display for AlgebraElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms: Vec<String> = self
            .0
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(i, c)| {
                if c.is_one() {
                    format!("e{}", i + 1)
                } else if (-c).is_one() {
                    format!("-e{}", i + 1)
                } else {
                    format!("{}*e{}", format_scalar(c), i + 1)
                }
            })
            .collect();
        if terms.is_empty() {
            write!(f, "0")
        } else {
            write!(f, "{}", terms.join(" + ").replace("+ -", "- "))
        }
    }
}

/// Outcome of the nil test.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum NilVerdict {
    /// Every element satisfies `x^index = 0`, and `index` is least.
    Nil { index: usize },
    /// This element has no vanishing principal power.
    NotNil { witness: AlgebraElement },
    Inconclusive,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct EvolutionAlgebra {
    structure: Matrix,
}

impl EvolutionAlgebra {
    pub fn new(structure: Matrix) -> Result<Self> {
        if !structure.is_square() {
            return Err(EvoError::InvalidInput(format!(
                "structure matrix must be square, got {}x{}",
                structure.rows(),
                structure.cols()
            )));
        }
        if structure.rows() == 0 {
            return Err(EvoError::InvalidInput(
                "an evolution algebra needs dimension at least 1".into(),
            ));
        }
        Ok(EvolutionAlgebra { structure })
    }

    pub fn from_rows(rows: Vec<Vec<Scalar>>) -> Result<Self> {
        Self::new(Matrix::from_rows(rows)?)
    }

    /// The algebra with all products zero.
    pub fn zero_algebra(n: usize) -> Result<Self> {
        Self::new(Matrix::zeros(n, n))
    }

    pub fn dim(&self) -> usize {
        self.structure.rows()
    }

    pub fn structure(&self) -> &Matrix {
        &self.structure
    }

    /// Coordinates of `e_i^2` (0-based `i`).
    pub fn square_of_basis(&self, i: usize) -> &[Scalar] {
        self.structure.row(i)
    }

    fn check(&self, x: &AlgebraElement) -> Result<()> {
        if x.len() != self.dim() {
            return Err(EvoError::DimensionMismatch {
                expected: self.dim(),
                found: x.len(),
            });
        }
        Ok(())
    }

    /// `xy = sum_i x_i y_i e_i^2`.
    pub fn mul(&self, x: &AlgebraElement, y: &AlgebraElement) -> Result<AlgebraElement> {
        self.check(x)?;
        self.check(y)?;
        Ok(self.mul_unchecked(x.coords(), y.coords()))
    }

    pub(crate) fn mul_unchecked(&self, x: &[Scalar], y: &[Scalar]) -> AlgebraElement {
        let n = self.dim();
        let mut out = vec![Scalar::zero(); n];
        for i in 0..n {
            if x[i].is_zero() || y[i].is_zero() {
                continue;
            }
            let w = &x[i] * &y[i];
            for (o, a) in out.iter_mut().zip(self.structure.row(i)) {
                if !a.is_zero() {
                    *o += &w * a;
                }
            }
        }
        AlgebraElement(out)
    }

    /// Left-nested power: `x^1 = x`, `x^{k+1} = x^k x`.
    pub fn principal_power(&self, x: &AlgebraElement, k: usize) -> Result<AlgebraElement> {
        self.check(x)?;
        if k == 0 {
            return Err(EvoError::InvalidInput(
                "principal powers start at 1; there is no unit element".into(),
            ));
        }
        let mut p = x.clone();
        for _ in 1..k {
            p = self.mul_unchecked(p.coords(), x.coords());
        }
        Ok(p)
    }

    /// `E^1 ⊇ E^2 ⊇ ...` with `E^{k+1} = E^k E`, stopping at zero or at the
    /// first step that does not drop in dimension.
    pub fn power_chain(&self) -> Vec<Subspace> {
        let n = self.dim();
        let mut chain = vec![Subspace::full(n)];
        loop {
            let last = chain.last().expect("chain is never empty");
            if last.is_zero() {
                break;
            }
            let products = last.basis().iter().flat_map(|b| {
                (0..n).map(move |i| self.mul_unchecked(b, &unit_vector(n, i)).into_coords())
            });
            let next = Subspace::span(n, products).expect("products have length n");
            if next.dim() == last.dim() {
                break;
            }
            chain.push(next);
        }
        chain
    }

    /// Least `k` with `E^k = 0`, if the power chain reaches zero.
    pub fn nilpotency_index(&self) -> Option<usize> {
        let chain = self.power_chain();
        chain.last().filter(|s| s.is_zero()).map(|_| chain.len())
    }

    /// Span of the basis vectors with zero square.
    pub fn annihilator(&self) -> Subspace {
        let n = self.dim();
        Subspace::span(n, self.annihilator_indices().into_iter().map(|i| unit_vector(n, i)))
            .expect("unit vectors have length n")
    }

    pub fn annihilator_indices(&self) -> Vec<usize> {
        (0..self.dim())
            .filter(|&i| self.structure.row(i).iter().all(Zero::is_zero))
            .collect()
    }

    /// `(e_i e_j) e_k = e_i (e_j e_k)` on all basis triples.
    pub fn is_associative(&self) -> bool {
        let n = self.dim();
        let basis: Vec<Vec<Scalar>> = (0..n).map(|i| unit_vector(n, i)).collect();
        let zero = vec![Scalar::zero(); n];
        let prod = |i: usize, j: usize| -> Vec<Scalar> {
            if i == j {
                self.structure.row(i).to_vec()
            } else {
                zero.clone()
            }
        };
        for i in 0..n {
            for j in 0..n {
                let ij = prod(i, j);
                for k in 0..n {
                    let left = self.mul_unchecked(&ij, &basis[k]);
                    let jk = prod(j, k);
                    let right = self.mul_unchecked(&basis[i], &jk);
                    if left != right {
                        return false;
                    }
                }
            }
        }
        true
    }

    /// Coordinates of the generic element `x = sum_i x_i e_i`.
    pub fn generic_element(&self) -> Vec<Polynomial> {
        let n = self.dim();
        (0..n).map(|i| Polynomial::var(n, i)).collect()
    }

    /// Product of two elements with polynomial coordinates.
    pub fn mul_symbolic(&self, x: &[Polynomial], y: &[Polynomial]) -> Vec<Polynomial> {
        let n = self.dim();
        let mut out = vec![Polynomial::zero(n); n];
        for i in 0..n {
            if x[i].is_zero() || y[i].is_zero() {
                continue;
            }
            let w = &x[i] * &y[i];
            for (k, a) in self.structure.row(i).iter().enumerate() {
                if !a.is_zero() {
                    out[k] = &out[k] + &w.scale(a);
                }
            }
        }
        out
    }

    /// Albert's criterion in characteristic 0: `x^2 x^2 = x^4` for the generic
    /// element, compared coefficient by coefficient.
    pub fn is_power_associative(&self) -> bool {
        let x = self.generic_element();
        let x2 = self.mul_symbolic(&x, &x);
        let x3 = self.mul_symbolic(&x2, &x);
        let x4 = self.mul_symbolic(&x3, &x);
        let x2x2 = self.mul_symbolic(&x2, &x2);
        x4 == x2x2
    }

    /// Nil test on the generic element, bounded by `dim + 1`.
    pub fn is_nil(&self) -> NilVerdict {
        let n = self.dim();
        let x = self.generic_element();
        let mut power = x.clone();
        for k in 1..=n + 1 {
            if k > 1 {
                power = self.mul_symbolic(&power, &x);
            }
            if power.iter().all(Polynomial::is_zero) {
                return NilVerdict::Nil { index: k };
            }
        }
        match self.non_nil_witness() {
            Some(witness) => NilVerdict::NotNil { witness },
            None => NilVerdict::Inconclusive,
        }
    }

    /// An element provably without a vanishing power.
    ///
    /// Accepted certificates: `x^2 = c x` with `c != 0` (then `x^k = c^{k-1} x`),
    /// or, in a power-associative algebra, `x^{n+1} != 0` (a nilpotent element
    /// of the associative subalgebra `K[x]`, which has dimension at most `n`,
    /// satisfies `x^{n+1} = 0`).
    fn non_nil_witness(&self) -> Option<AlgebraElement> {
        let n = self.dim();
        let power_assoc = self.is_power_associative();
        let mut candidates: Vec<AlgebraElement> = (0..n).map(|i| AlgebraElement::basis(n, i)).collect();
        let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
        candidates.extend((0..64).map(|_| {
            AlgebraElement::new((0..n).map(|_| sample_int(&mut rng, -3, 3)).collect())
        }));
        candidates.into_iter().find(|x| {
            if x.is_zero() {
                return false;
            }
            let sq = self.mul_unchecked(x.coords(), x.coords());
            if is_nonzero_multiple(&sq, x) {
                return true;
            }
            power_assoc
                && !self
                    .principal_power(x, n + 1)
                    .expect("length checked")
                    .is_zero()
        })
    }

    /// Restriction of the structure matrix to a set of indices. The span of
    /// those basis vectors must be closed under squaring for this to be a
    /// subalgebra; callers pass components of the support graph.
    pub fn restrict(&self, indices: &[usize]) -> Result<EvolutionAlgebra> {
        EvolutionAlgebra::new(self.structure.select(indices, indices))
    }

    /// Algebra whose `k`-th basis vector is the old `e_{order[k]}`.
    pub fn permuted(&self, order: &[usize]) -> Result<EvolutionAlgebra> {
        let mut seen = vec![false; self.dim()];
        if order.len() != self.dim() || order.iter().any(|&i| i >= seen.len() || std::mem::replace(&mut seen[i], true)) {
            return Err(EvoError::InvalidInput("not a permutation of the basis".into()));
        }
        self.restrict(order)
    }

    /// Block-diagonal direct sum, `self` first.
    pub fn direct_sum(&self, other: &EvolutionAlgebra) -> EvolutionAlgebra {
        let (p, q) = (self.dim(), other.dim());
        let m = Matrix::from_fn(p + q, p + q, |r, c| match (r < p, c < p) {
            (true, true) => self.structure.get(r, c).clone(),
            (false, false) => other.structure.get(r - p, c - p).clone(),
            _ => Scalar::zero(),
        });
        EvolutionAlgebra { structure: m }
    }
}

fn is_nonzero_multiple(y: &AlgebraElement, x: &AlgebraElement) -> bool {
    let Some(i) = x.coords().iter().position(|c| !c.is_zero()) else {
        return false;
    };
    let c = &y.coords()[i] / &x.coords()[i];
    !c.is_zero() && *y == x.scale(&c)
}

impl fmt::Display for EvolutionAlgebra {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let n = self.dim();
        let parts: Vec<String> = (0..n)
            .map(|i| {
                format!(
                    "e{}^2 = {}",
                    i + 1,
                    AlgebraElement::new(self.structure.row(i).to_vec())
                )
            })
            .collect();
        write!(f, "{}", parts.join(", "))
    }
}
