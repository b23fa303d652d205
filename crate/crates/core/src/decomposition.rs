//! Natural-basis decompositions and the block description of derivations.
//!
//! Decomposability is decided relative to the given natural basis: two basis
//! vectors are linked when one appears in the square of the other, and the
//! connected components of that graph span ideals whose direct sum is `E`.

use num_traits::Zero;

use crate::algebra::{AlgebraElement, EvolutionAlgebra, NilVerdict};
use crate::derivation::{derivation_space, is_derivation};
use crate::error::{EvoError, Result};
use crate::matrix::{DerivationMatrix, Matrix};
use crate::scalar::Scalar;
use crate::subspace::Subspace;

/// Connected components of the support graph, each sorted, ordered by
/// smallest member. Indices are 0-based.
pub fn support_components(e: &EvolutionAlgebra) -> Vec<Vec<usize>> {
    let n = e.dim();
    let s = e.structure();
    let linked = |i: usize, k: usize| !s.get(i, k).is_zero() || !s.get(k, i).is_zero();
    let mut label = vec![usize::MAX; n];
    let mut components = Vec::new();
    for start in 0..n {
        if label[start] != usize::MAX {
            continue;
        }
        let id = components.len();
        let mut members = vec![start];
        let mut stack = vec![start];
        label[start] = id;
        while let Some(i) = stack.pop() {
            for k in 0..n {
                if k != i && label[k] == usize::MAX && linked(i, k) {
                    label[k] = id;
                    members.push(k);
                    stack.push(k);
                }
            }
        }
        members.sort_unstable();
        components.push(members);
    }
    components
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Component {
    pub indices: Vec<usize>,
    pub algebra: EvolutionAlgebra,
}

pub fn decompose(e: &EvolutionAlgebra) -> Vec<Component> {
    support_components(e)
        .into_iter()
        .map(|indices| {
            let algebra = e.restrict(&indices).expect("components are non-empty");
            Component { indices, algebra }
        })
        .collect()
}

pub fn is_indecomposable(e: &EvolutionAlgebra) -> bool {
    support_components(e).len() == 1
}

/// `Hom⁰(I1, I2)`: maps `h` with `h(I1^2) = 0` and `h(I1) ⊆ ann(I2)`, as
/// `dim I2 x dim I1` matrices flattened row-major.
pub fn hom0(i1: &EvolutionAlgebra, i2: &EvolutionAlgebra) -> Subspace {
    let (p, q) = (i1.dim(), i2.dim());
    let idx = |m: usize, k: usize| m * p + k;
    let mut equations = Vec::new();
    // h(e_i^2) = sum_k a_ik h(e_k) = 0, one equation per output coordinate m.
    for i in 0..p {
        let sq = i1.square_of_basis(i);
        if sq.iter().all(Zero::is_zero) {
            continue;
        }
        for m in 0..q {
            let mut row = vec![Scalar::zero(); p * q];
            for (k, a) in sq.iter().enumerate() {
                row[idx(m, k)] = a.clone();
            }
            equations.push(row);
        }
    }
    // Image inside ann(I2): no component along basis vectors with nonzero square.
    let ann: Vec<usize> = i2.annihilator_indices();
    for m in (0..q).filter(|m| !ann.contains(m)) {
        for k in 0..p {
            let mut row = vec![Scalar::zero(); p * q];
            row[idx(m, k)] = Scalar::from_integer(1.into());
            equations.push(row);
        }
    }
    Subspace::kernel_of(&equations, p * q)
}

/// Blocks of a derivation of `I1 ⊕ I2`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Quadruple {
    /// `I1 -> I1`
    pub f: Matrix,
    /// `I2 -> I2`
    pub g: Matrix,
    /// `I1 -> I2`
    pub ell: Matrix,
    /// `I2 -> I1`
    pub k: Matrix,
}

impl Quadruple {
    pub fn zero(p: usize, q: usize) -> Self {
        Quadruple {
            f: Matrix::zeros(p, p),
            g: Matrix::zeros(q, q),
            ell: Matrix::zeros(q, p),
            k: Matrix::zeros(p, q),
        }
    }

    pub fn dims(&self) -> (usize, usize) {
        (self.f.rows(), self.g.rows())
    }

    pub fn is_zero(&self) -> bool {
        self.f.is_zero() && self.g.is_zero() && self.ell.is_zero() && self.k.is_zero()
    }

    fn check(&self) -> Result<(usize, usize)> {
        let (p, q) = (self.f.rows(), self.g.rows());
        let ok = self.f.cols() == p
            && self.g.cols() == q
            && (self.ell.rows(), self.ell.cols()) == (q, p)
            && (self.k.rows(), self.k.cols()) == (p, q);
        if !ok {
            return Err(EvoError::InvalidInput(format!(
                "quadruple blocks do not fit a {p} + {q} split"
            )));
        }
        Ok((p, q))
    }
}

/// Block matrix `[[f, k], [ell, g]]`.
pub fn assemble(q: &Quadruple) -> Result<DerivationMatrix> {
    let (p, r) = q.check()?;
    Ok(Matrix::from_fn(p + r, p + r, |row, col| {
        match (row < p, col < p) {
            (true, true) => q.f.get(row, col).clone(),
            (true, false) => q.k.get(row, col - p).clone(),
            (false, true) => q.ell.get(row - p, col).clone(),
            (false, false) => q.g.get(row - p, col - p).clone(),
        }
    }))
}

/// Splits `d` after the first `first_dim` basis vectors.
pub fn disassemble(d: &DerivationMatrix, first_dim: usize) -> Result<Quadruple> {
    if !d.is_square() || first_dim > d.rows() {
        return Err(EvoError::InvalidInput(format!(
            "cannot split a {}x{} matrix after {first_dim}",
            d.rows(),
            d.cols()
        )));
    }
    let a: Vec<usize> = (0..first_dim).collect();
    let b: Vec<usize> = (first_dim..d.rows()).collect();
    Ok(Quadruple {
        f: d.select(&a, &a),
        g: d.select(&b, &b),
        ell: d.select(&b, &a),
        k: d.select(&a, &b),
    })
}

/// Blocks of `[d, d']` computed from the blocks of `d` and `d'`.
pub fn quadruple_bracket(a: &Quadruple, b: &Quadruple) -> Result<Quadruple> {
    let dims = a.check()?;
    if b.check()? != dims {
        return Err(EvoError::InvalidInput("quadruples have different splits".into()));
    }
    let f = &a.f.commutator(&b.f)? + &(&(&a.k * &b.ell) - &(&b.k * &a.ell));
    let ell = &(&(&a.ell * &b.f) - &(&b.ell * &a.f)) + &(&(&a.g * &b.ell) - &(&b.g * &a.ell));
    let g = &a.g.commutator(&b.g)? + &(&(&a.ell * &b.k) - &(&b.ell * &a.k));
    let k = &(&(&a.k * &b.g) - &(&b.k * &a.g)) + &(&(&a.f * &b.k) - &(&b.f * &a.k));
    Ok(Quadruple { f, g, ell, k })
}

fn assemble_spaces(
    p: usize,
    q: usize,
    d1: &Subspace,
    d2: &Subspace,
    h12: &Subspace,
    h21: &Subspace,
) -> Subspace {
    let n = p + q;
    let mut gens = Vec::new();
    for f in d1.basis_matrices(p, p) {
        let mut z = Quadruple::zero(p, q);
        z.f = f;
        gens.push(z);
    }
    for g in d2.basis_matrices(q, q) {
        let mut z = Quadruple::zero(p, q);
        z.g = g;
        gens.push(z);
    }
    for ell in h12.basis_matrices(q, p) {
        let mut z = Quadruple::zero(p, q);
        z.ell = ell;
        gens.push(z);
    }
    for k in h21.basis_matrices(p, q) {
        let mut z = Quadruple::zero(p, q);
        z.k = k;
        gens.push(z);
    }
    let mats: Vec<Matrix> = gens
        .iter()
        .map(|z| assemble(z).expect("blocks built to fit"))
        .collect();
    Subspace::span_matrices(n, n, &mats).expect("n x n")
}

/// `D(I1) × D(I2) × Hom⁰(I1, I2) × Hom⁰(I2, I1)` assembled into derivations
/// of `I1 ⊕ I2` (with `I1` first).
pub fn derivation_space_of_sum(i1: &EvolutionAlgebra, i2: &EvolutionAlgebra) -> Subspace {
    assemble_spaces(
        i1.dim(),
        i2.dim(),
        &derivation_space(i1),
        &derivation_space(i2),
        &hom0(i1, i2),
        &hom0(i2, i1),
    )
}

/// Dimension breakdown of one two-block split.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BlockDims {
    pub d_first: usize,
    pub d_rest: usize,
    pub hom_first_rest: usize,
    pub hom_rest_first: usize,
}

impl BlockDims {
    pub fn total(&self) -> usize {
        self.d_first + self.d_rest + self.hom_first_rest + self.hom_rest_first
    }
}

/// Derivations of `E` assembled block by block over its support components,
/// grouped as (first component) vs (rest) and recursing on the rest.
///
/// Returns the basis order used (components concatenated) and the space of
/// derivations of `E` permuted into that order.
pub fn derivation_space_by_blocks(e: &EvolutionAlgebra) -> Result<(Vec<usize>, Subspace)> {
    let comps = decompose(e);
    let order: Vec<usize> = comps.iter().flat_map(|c| c.indices.clone()).collect();
    let algebras: Vec<EvolutionAlgebra> = comps.into_iter().map(|c| c.algebra).collect();
    Ok((order, blocks_recursive(&algebras)))
}

fn blocks_recursive(parts: &[EvolutionAlgebra]) -> Subspace {
    match parts {
        [] => unreachable!("an algebra has at least one component"),
        [only] => derivation_space(only),
        [first, rest @ ..] => {
            let rest_alg = rest[1..]
                .iter()
                .fold(rest[0].clone(), |acc, x| acc.direct_sum(x));
            let rest_space = blocks_recursive(rest);
            assemble_spaces(
                first.dim(),
                rest_alg.dim(),
                &derivation_space(first),
                &rest_space,
                &hom0(first, &rest_alg),
                &hom0(&rest_alg, first),
            )
        }
    }
}

/// Dimension identity for the (first component) vs (rest) split, or `None`
/// for an indecomposable algebra.
pub fn first_split_dims(e: &EvolutionAlgebra) -> Option<BlockDims> {
    let comps = decompose(e);
    if comps.len() < 2 {
        return None;
    }
    let first = &comps[0].algebra;
    let rest_idx: Vec<usize> = comps[1..].iter().flat_map(|c| c.indices.clone()).collect();
    let rest = e.restrict(&rest_idx).expect("non-empty");
    Some(BlockDims {
        d_first: derivation_space(first).dim(),
        d_rest: derivation_space(&rest).dim(),
        hom_first_rest: hom0(first, &rest).dim(),
        hom_rest_first: hom0(&rest, first).dim(),
    })
}

/// `E = K u_1 ⊕ ... ⊕ K u_s ⊕ N` with orthogonal idempotents and nil `N`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WedderburnSplit {
    pub idempotents: Vec<AlgebraElement>,
    /// Basis index carrying each idempotent.
    pub idempotent_indices: Vec<usize>,
    /// Restriction to the nil part; `None` when `E` is semisimple.
    pub radical: Option<EvolutionAlgebra>,
    pub radical_indices: Vec<usize>,
}

/// Detects singleton components `e_i^2 = c e_i` (`c != 0`) as idempotents
/// `u = e_i / c`; everything else must be nil.
pub fn wedderburn(e: &EvolutionAlgebra) -> Result<WedderburnSplit> {
    if !e.is_power_associative() {
        return Err(EvoError::NotPowerAssociative);
    }
    let n = e.dim();
    let mut idempotents = Vec::new();
    let mut idempotent_indices = Vec::new();
    let mut radical_indices = Vec::new();
    for comp in support_components(e) {
        if let [i] = comp[..] {
            let c = e.structure().get(i, i);
            if !c.is_zero() {
                idempotents.push(AlgebraElement::basis(n, i).scale(&c.recip()));
                idempotent_indices.push(i);
                continue;
            }
        }
        radical_indices.extend(comp);
    }
    radical_indices.sort_unstable();
    let radical = if radical_indices.is_empty() {
        None
    } else {
        let r = e.restrict(&radical_indices)?;
        match r.is_nil() {
            NilVerdict::Nil { .. } => Some(r),
            NilVerdict::NotNil { .. } => {
                return Err(EvoError::Unsupported(
                    "non-nil part is not a sum of one-dimensional idempotent components".into(),
                ))
            }
            NilVerdict::Inconclusive => {
                return Err(EvoError::Unsupported(
                    "could not certify the remaining part as nil".into(),
                ))
            }
        }
    };
    Ok(WedderburnSplit {
        idempotents,
        idempotent_indices,
        radical,
        radical_indices,
    })
}

/// Every derivation kills the idempotents, preserves the radical and
/// restricts to a derivation of it, and `dim D(E) = dim D(N)`.
pub fn derivations_vanish_on_semisimple(e: &EvolutionAlgebra) -> Result<bool> {
    let split = wedderburn(e)?;
    let n = e.dim();
    let space = derivation_space(e);
    let rad = &split.radical_indices;
    for d in space.basis_matrices(n, n) {
        if split
            .idempotent_indices
            .iter()
            .any(|&i| d.column(i).iter().any(|x| !x.is_zero()))
        {
            return Ok(false);
        }
        let leaks = split
            .idempotent_indices
            .iter()
            .any(|&u| rad.iter().any(|&r| !d.get(u, r).is_zero()));
        if leaks {
            return Ok(false);
        }
        if let Some(radical) = &split.radical {
            if !is_derivation(radical, &d.select(rad, rad))? {
                return Ok(false);
            }
        }
    }
    let radical_dim = split.radical.as_ref().map_or(0, |r| derivation_space(r).dim());
    Ok(space.dim() == radical_dim)
}
