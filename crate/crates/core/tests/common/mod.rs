#![allow(dead_code)]

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use evoalg::{EvolutionAlgebra, Matrix, Scalar};

pub fn q(n: i64) -> Scalar {
    BigRational::from_integer(BigInt::from(n))
}

pub fn qr(n: i64, d: i64) -> Scalar {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

pub fn alg(rows: &[&[i64]]) -> EvolutionAlgebra {
    EvolutionAlgebra::from_rows(rows.iter().map(|r| r.iter().map(|&x| q(x)).collect()).collect()).unwrap()
}

/// Leibniz equations written out term by term for every basis pair `(i, j)`,
/// `i <= j`, with unknown `D[k][m]` at index `k * n + m` (`d(e_m)` has
/// `D[k][m]` along `e_k`).
///
/// `d(e_i e_j) = d(e_i) e_j + e_i d(e_j)`, coordinate `t`:
/// `[i == j] sum_m a_im D[t][m] - D[j][i] a_jt - D[i][j] a_it = 0`.
pub fn oracle_equations(a: &[Vec<Scalar>]) -> Vec<Vec<Scalar>> {
    let n = a.len();
    let mut eqs = Vec::new();
    for i in 0..n {
        for j in i..n {
            for t in 0..n {
                let mut row = vec![Scalar::zero(); n * n];
                if i == j {
                    for m in 0..n {
                        row[t * n + m] += &a[i][m];
                    }
                }
                row[j * n + i] -= &a[j][t];
                row[i * n + j] -= &a[i][t];
                eqs.push(row);
            }
        }
    }
    eqs
}

/// Kernel basis by plain forward elimination and back substitution.
pub fn oracle_kernel(eqs: &[Vec<Scalar>], width: usize) -> Vec<Vec<Scalar>> {
    let mut m: Vec<Vec<Scalar>> = eqs.to_vec();
    let mut pivot_cols = Vec::new();
    let mut r = 0;
    for c in 0..width {
        let Some(p) = (r..m.len()).find(|&k| !m[k][c].is_zero()) else {
            continue;
        };
        m.swap(r, p);
        for k in r + 1..m.len() {
            if m[k][c].is_zero() {
                continue;
            }
            let f = &m[k][c] / &m[r][c];
            for x in c..width {
                let v = &f * &m[r][x];
                m[k][x] -= v;
            }
        }
        pivot_cols.push(c);
        r += 1;
    }
    let free: Vec<usize> = (0..width).filter(|c| !pivot_cols.contains(c)).collect();
    let mut out = Vec::new();
    for &f in &free {
        let mut v = vec![Scalar::zero(); width];
        v[f] = Scalar::one();
        for (row, &pc) in pivot_cols.iter().enumerate().rev() {
            let mut s = Scalar::zero();
            for x in pc + 1..width {
                s += &m[row][x] * &v[x];
            }
            v[pc] = -s / &m[row][pc];
        }
        out.push(v);
    }
    out
}

pub fn satisfies(eqs: &[Vec<Scalar>], v: &[Scalar]) -> bool {
    eqs.iter().all(|row| {
        row.iter()
            .zip(v)
            .fold(Scalar::zero(), |acc, (a, b)| acc + a * b)
            .is_zero()
    })
}

pub fn structure_rows(e: &EvolutionAlgebra) -> Vec<Vec<Scalar>> {
    (0..e.dim()).map(|i| e.square_of_basis(i).to_vec()).collect()
}

/// Outcome of comparing the engine with the oracle on one algebra.
pub fn agrees_with_oracle(e: &EvolutionAlgebra) -> Result<(), String> {
    let n = e.dim();
    let eqs = oracle_equations(&structure_rows(e));
    let kernel = oracle_kernel(&eqs, n * n);
    if !kernel.iter().all(|v| satisfies(&eqs, v)) {
        return Err("oracle self-check failed".into());
    }
    let space = evoalg::derivation::derivation_space(e);
    if space.dim() != kernel.len() {
        return Err(format!("{e}: engine dim {} vs oracle dim {}", space.dim(), kernel.len()));
    }
    if !space.basis().iter().all(|v| satisfies(&eqs, v)) {
        return Err(format!("{e}: engine basis violates the Leibniz equations"));
    }
    Ok(())
}

/// Every structure matrix with entries from `values`.
pub fn all_algebras(n: usize, values: &[i64]) -> impl Iterator<Item = EvolutionAlgebra> + '_ {
    let cells = n * n;
    let total = values.len().pow(cells as u32);
    (0..total).map(move |mut code| {
        let mut data = Vec::with_capacity(cells);
        for _ in 0..cells {
            data.push(q(values[code % values.len()]));
            code /= values.len();
        }
        EvolutionAlgebra::new(Matrix::from_flat(n, n, data).unwrap()).unwrap()
    })
}

/// A derivation written as `d(e_i) = sum_j coeff(j, i) e_j`, linear in named
/// free parameters. `entries` lists `(row j, col i, [(param, coefficient)])`
/// with 1-based indices.
pub struct Shape {
    pub n: usize,
    pub params: Vec<(usize, usize)>,
    pub entries: Vec<(usize, usize, Vec<((usize, usize), Scalar)>)>,
}

impl Shape {
    pub fn new(n: usize, params: &[(usize, usize)]) -> Self {
        Shape {
            n,
            params: params.to_vec(),
            entries: Vec::new(),
        }
    }

    /// Adds `coeff * d_p` to entry `(row, col)` (1-based, `d(e_col)` along `e_row`).
    pub fn term(mut self, row: usize, col: usize, p: (usize, usize), coeff: Scalar) -> Self {
        assert!(self.params.contains(&p), "unknown parameter d{}{}", p.0, p.1);
        self.entries.push((row, col, vec![(p, coeff)]));
        self
    }

    /// The matrix obtained by setting one parameter to 1 and the rest to 0.
    pub fn generator(&self, p: (usize, usize)) -> Matrix {
        let mut m = Matrix::zeros(self.n, self.n);
        for (row, col, terms) in &self.entries {
            for (q, c) in terms {
                if *q == p {
                    let cur = m.get(row - 1, col - 1).clone();
                    m.set(row - 1, col - 1, cur + c);
                }
            }
        }
        m
    }

    pub fn generators(&self) -> Vec<Matrix> {
        self.params.iter().map(|&p| self.generator(p)).collect()
    }

    pub fn span(&self) -> evoalg::Subspace {
        evoalg::Subspace::span_matrices(self.n, self.n, &self.generators()).unwrap()
    }

    /// Row-major flat index of each named parameter.
    pub fn param_positions(&self) -> Vec<usize> {
        let mut v: Vec<usize> = self.params.iter().map(|(j, i)| (j - 1) * self.n + (i - 1)).collect();
        v.sort_unstable();
        v
    }
}

/// `N_{4,6}`: free `d11, d22, d41, d42`.
pub fn shape_n46() -> Shape {
    let (d11, d22, d41, d42) = ((1, 1), (2, 2), (4, 1), (4, 2));
    Shape::new(4, &[d11, d22, d41, d42])
        .term(1, 1, d11, q(1))
        .term(4, 1, d41, q(1))
        .term(2, 2, d22, q(1))
        .term(3, 2, d11, q(2))
        .term(3, 2, d22, q(-1))
        .term(4, 2, d42, q(1))
        .term(2, 3, d11, q(2))
        .term(2, 3, d22, q(-1))
        .term(3, 3, d22, q(1))
        .term(4, 3, d42, q(-1))
        .term(4, 4, d22, q(2))
}

/// `N_{5,9}`: free `d11` and `d4i, d5i` for `i = 1, 2, 3`.
pub fn shape_n59() -> Shape {
    let d11 = (1, 1);
    let mut params = vec![d11];
    for i in 1..=3 {
        params.push((4, i));
        params.push((5, i));
    }
    let mut s = Shape::new(5, &params);
    for i in 1..=3 {
        s = s.term(i, i, d11, q(1)).term(4, i, (4, i), q(1)).term(5, i, (5, i), q(1));
    }
    s.term(4, 4, d11, q(2)).term(5, 5, d11, q(2))
}

/// `N_{6,25}`: free `d11, d22, d51, d52, d54, d61, d62, d64`.
pub fn shape_n625() -> Shape {
    let (d11, d22) = ((1, 1), (2, 2));
    let (d51, d52, d54, d61, d62, d64) = ((5, 1), (5, 2), (5, 4), (6, 1), (6, 2), (6, 4));
    Shape::new(6, &[d11, d22, d51, d52, d54, d61, d62, d64])
        .term(1, 1, d11, q(1))
        .term(5, 1, d51, q(1))
        .term(6, 1, d61, q(1))
        .term(2, 2, d22, q(1))
        .term(3, 2, d11, q(2))
        .term(3, 2, d22, q(-1))
        .term(5, 2, d52, q(1))
        .term(6, 2, d62, q(1))
        .term(2, 3, d11, q(2))
        .term(2, 3, d22, q(-1))
        .term(3, 3, d22, q(1))
        .term(5, 3, d52, q(-1))
        .term(6, 3, d62, q(-1))
        .term(4, 4, d11, q(1))
        .term(5, 4, d54, q(1))
        .term(6, 4, d64, q(1))
        .term(5, 5, d22, q(2))
        .term(6, 6, d11, q(2))
}
