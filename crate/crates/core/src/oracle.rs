//! Brute-force cross-checks that share no code path with the resolvent:
//! exact nullspaces of operator matrices, and the coordinate-space CS
//! differential operator acting on explicit polynomials.

use thiserror::Error;

use crate::boson_fock::FockVector;
use crate::coeffield::{Field, ParamScalar, Symbol};
use crate::matrix::Matrix;
use crate::partitions::Partition;
use crate::spectral_solver::{energy, Model};
use crate::symfunc::MultiPoly;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum OracleError {
    #[error("candidate energy is not an eigenvalue: nullspace is empty")]
    NotEigenvalue,
    #[error("eigenspace has dimension {0}")]
    Degenerate(usize),
    #[error("input polynomial is not symmetric")]
    NonSymmetric,
    #[error("division by (z_{i} - z_{j}) left a remainder")]
    InexactDivision { i: usize, j: usize },
    #[error("matrix is {rows}x{cols}, basis has {basis} labels")]
    Shape { rows: usize, cols: usize, basis: usize },
}

/// A basis of ker(M − E·I), as vectors over `basis`.
#[derive(Clone)]
pub struct Eigenspace<L: Ord, F> {
    pub vectors: Vec<FockVector<L, F>>,
}

impl<L: Ord + Clone + std::fmt::Display, F: Field> std::fmt::Debug for Eigenspace<L, F> {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_list().entries(&self.vectors).finish()
    }
}

impl<L: Ord + Clone + std::fmt::Display, F: Field> Eigenspace<L, F> {
    pub fn dimension(&self) -> usize {
        self.vectors.len()
    }

    pub fn is_degenerate(&self) -> bool {
        self.vectors.len() > 1
    }

    /// The unique eigenvector, or a degeneracy report.
    pub fn unique(&self) -> Result<&FockVector<L, F>, OracleError> {
        match self.vectors.as_slice() {
            [v] => Ok(v),
            vs => Err(OracleError::Degenerate(vs.len())),
        }
    }

    /// Whether `v` lies in the span.
    pub fn contains(&self, v: &FockVector<L, F>) -> bool {
        let labels: Vec<L> = {
            let mut ls: Vec<L> = self.vectors.iter().flat_map(|x| x.labels().cloned()).chain(v.labels().cloned()).collect();
            ls.sort();
            ls.dedup();
            ls
        };
        let column = |x: &FockVector<L, F>| labels.iter().map(|l| x.coeff(l)).collect::<Vec<F>>();
        let cols: Vec<Vec<F>> = self.vectors.iter().map(column).collect();
        let rank = |cs: &[Vec<F>]| {
            if cs.is_empty() {
                return 0;
            }
            Matrix::from_rows(cs.to_vec()).rank()
        };
        let r0 = rank(&cols);
        let mut with = cols.clone();
        with.push(column(v));
        rank(&with) == r0
    }
}

/// ker(M − E·I) by fraction-free elimination; errors when empty.
pub fn nullspace_eigenvector<L: Ord + Clone + std::fmt::Display, F: Field>(
    m: &Matrix<F>,
    e: &F,
    basis: &[L],
) -> Result<Eigenspace<L, F>, OracleError> {
    if m.rows() != m.cols() || m.cols() != basis.len() {
        return Err(OracleError::Shape {
            rows: m.rows(),
            cols: m.cols(),
            basis: basis.len(),
        });
    }
    let ns = m.shift_diagonal(e).nullspace();
    if ns.is_empty() {
        return Err(OracleError::NotEigenvalue);
    }
    Ok(Eigenspace {
        vectors: ns
            .into_iter()
            .map(|x| FockVector::from_pairs(basis.iter().cloned().zip(x)))
            .collect(),
    })
}

/// Restricts a Schur-coordinate matrix to the labels dominance-below or
/// equal to λ; the CS operator preserves this ideal.
pub fn restrict_to_ideal<F: Field>(m: &Matrix<F>, basis: &[Partition], lambda: &Partition) -> (Matrix<F>, Vec<Partition>) {
    let keep: Vec<usize> = (0..basis.len())
        .filter(|&i| basis[i] == *lambda || basis[i].strictly_below(lambda))
        .collect();
    let rows = keep
        .iter()
        .map(|&i| keep.iter().map(|&j| m.get(i, j).clone()).collect())
        .collect();
    (Matrix::from_rows(rows), keep.iter().map(|&i| basis[i].clone()).collect())
}

fn euler_f<F: Field>(f: &MultiPoly<F>, i: usize) -> MultiPoly<F> {
    let mut out = MultiPoly::zero(f.nvars);
    for (e, c) in &f.terms {
        if e[i] > 0 {
            out.add_term(e.clone(), c.mul(&F::from_int(e[i] as i64)));
        }
    }
    out
}

/// Exact quotient g / (z_i − z_j).
fn divide_difference<F: Field>(g: &MultiPoly<F>, i: usize, j: usize) -> Result<MultiPoly<F>, OracleError> {
    let mut rem = g.clone();
    let mut q = MultiPoly::zero(g.nvars);
    loop {
        let lead = rem
            .terms
            .iter()
            .filter(|(e, _)| e[i] > 0)
            .max_by_key(|(e, _)| e[i])
            .map(|(e, c)| (e.clone(), c.clone()));
        let Some((e, c)) = lead else {
            break;
        };
        let mut qe = e.clone();
        qe[i] -= 1;
        let mut shifted = qe.clone();
        shifted[j] += 1;
        rem.add_term(e, c.neg());
        rem.add_term(shifted, c.clone());
        q.add_term(qe, c);
    }
    if rem.is_zero() {
        Ok(q)
    } else {
        Err(OracleError::InexactDivision { i, j })
    }
}

/// Σᵢ(zᵢ∂ᵢ)² f + β Σ_{i<j} (zᵢ+z_j)/(zᵢ−z_j) (zᵢ∂ᵢ − z_j∂_j) f, half of the
/// coordinate-space CS operator. Requires symmetric f.
pub fn apply_cs_differential<F: Field>(f: &MultiPoly<F>, beta: &F) -> Result<MultiPoly<F>, OracleError> {
    if !f.is_symmetric() {
        return Err(OracleError::NonSymmetric);
    }
    let n = f.nvars;
    let d: Vec<MultiPoly<F>> = (0..n).map(|i| euler_f(f, i)).collect();
    let mut out = MultiPoly::zero(n);
    for (i, di) in d.iter().enumerate() {
        out = out.add(&euler_f(di, i));
    }
    for i in 0..n {
        for j in i + 1..n {
            let g = d[i].sub(&d[j]);
            let q = divide_difference(&g, i, j)?;
            let mut sum = MultiPoly::zero(n);
            let mut ei = vec![0; n];
            ei[i] = 1;
            sum.add_term(ei, F::one());
            let mut ej = vec![0; n];
            ej[j] = 1;
            sum.add_term(ej, F::one());
            out = out.add(&q.mul(&sum).scale(beta));
        }
    }
    Ok(out)
}

/// E_λ + b²N|λ|: the differential operator keeps the background term.
pub fn expected_differential_eigenvalue(lambda: &Partition, n: usize) -> ParamScalar {
    let shift = &ParamScalar::symbol(Symbol::B).pow(2) * &ParamScalar::integer((n as u32 * lambda.weight()) as i64);
    energy(Model::Cs, lambda).add(&shift)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::boson_fock::{build_operator, operator_matrix, BosonKind};
    use crate::coeffield::rat;
    use crate::partitions::enumerate_level;
    use num_rational::BigRational;

    fn b2() -> ParamScalar {
        ParamScalar::symbol(Symbol::B).pow(2)
    }
    fn p(v: &[u32]) -> Partition {
        Partition::new(v.to_vec()).unwrap()
    }

    #[test]
    fn level_two_nullspaces() {
        let m = operator_matrix(&build_operator(BosonKind::CsDeformed), 2).unwrap();
        let basis = enumerate_level(2);
        let e1 = &ParamScalar::integer(4) - &(&ParamScalar::integer(2) * &b2());
        let v = nullspace_eigenvector(&m, &e1, &basis).unwrap();
        let v = v.unique().unwrap();
        let expected = FockVector::from_pairs([(p(&[2]), ParamScalar::integer(1)), (p(&[1, 1]), b2())]);
        assert!(Eigenspace { vectors: vec![expected] }.contains(v));
        let e2 = &ParamScalar::integer(2) - &(&ParamScalar::integer(4) * &b2());
        let w = nullspace_eigenvector(&m, &e2, &basis).unwrap();
        let w = w.unique().unwrap();
        assert_eq!(w.coeff(&p(&[2])).add(&w.coeff(&p(&[1, 1]))), ParamScalar::integer(0));
        let bad = nullspace_eigenvector(&m, &ParamScalar::integer(7), &basis);
        assert_eq!(bad.unwrap_err(), OracleError::NotEigenvalue);
    }

    #[test]
    fn identity_is_degenerate() {
        let m = Matrix::<BigRational>::identity(3);
        let s = nullspace_eigenvector(&m, &rat(1, 1), &["a", "b", "c"].map(String::from)).unwrap();
        assert_eq!(s.dimension(), 3);
        assert!(matches!(s.unique(), Err(OracleError::Degenerate(3))));
    }

    #[test]
    fn differential_on_small_inputs() {
        let beta = rat(1, 3);
        let mut f = MultiPoly::<BigRational>::zero(2);
        f.add_term(vec![1, 0], rat(1, 1));
        f.add_term(vec![0, 1], rat(1, 1));
        assert_eq!(apply_cs_differential(&f, &beta).unwrap(), f.scale(&(rat(1, 1) + &beta)));
        let one = MultiPoly::constant(2, rat(1, 1));
        assert!(apply_cs_differential(&one, &beta).unwrap().is_zero());
        let mut g = MultiPoly::<BigRational>::zero(2);
        g.add_term(vec![1, 0], rat(1, 1));
        assert_eq!(apply_cs_differential(&g, &beta).unwrap_err(), OracleError::NonSymmetric);
    }
}
