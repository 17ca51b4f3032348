//! Symmetric functions of fixed degree in the power-sum, monomial and Schur
//! bases, the coherent map from bosonic states, and explicit polynomials in
//! finitely many variables.
//!
//! Conversions work with formal symmetric functions (infinitely many
//! variables). Truncation to N variables happens only in [`evaluate`] and
//! [`expand`].

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::str::FromStr;
use std::sync::{Arc, Mutex, OnceLock};

use num_bigint::BigInt;
use num_rational::BigRational;
use serde::{Deserialize, Serialize};
use serde_json::{json, Value};
use thiserror::Error;

use crate::boson_fock::FockVector;
use crate::coeffield::{Field, ParamScalar};
use crate::matrix::Matrix;
use crate::partitions::{enumerate_level, Partition};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SymError {
    #[error("unknown basis `{0}`")]
    UnknownBasis(String),
    #[error("index {index} has weight different from degree {degree}")]
    DegreeMismatch { index: String, degree: u32 },
    #[error("polynomial JSON: {0}")]
    Json(String),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum SymBasis {
    Powersum,
    Monomial,
    Schur,
}

impl SymBasis {
    pub fn name(self) -> &'static str {
        match self {
            SymBasis::Powersum => "powersum",
            SymBasis::Monomial => "monomial",
            SymBasis::Schur => "schur",
        }
    }

    fn letter(self) -> &'static str {
        match self {
            SymBasis::Powersum => "p",
            SymBasis::Monomial => "m",
            SymBasis::Schur => "s",
        }
    }
}

impl FromStr for SymBasis {
    type Err = SymError;
    fn from_str(s: &str) -> Result<Self, SymError> {
        match s {
            "powersum" => Ok(SymBasis::Powersum),
            "monomial" => Ok(SymBasis::Monomial),
            "schur" => Ok(SymBasis::Schur),
            other => Err(SymError::UnknownBasis(other.to_string())),
        }
    }
}

/// χ^λ(μ) by the Murnaghan-Nakayama rule on beta-sets.
pub fn character(lambda: &Partition, mu: &Partition) -> i64 {
    fn rec(lambda: &[u32], mu: &[u32]) -> i64 {
        let Some((&n, rest)) = mu.split_first() else {
            return i64::from(lambda.is_empty());
        };
        let len = lambda.len();
        let beta: Vec<i64> = lambda.iter().enumerate().map(|(i, &x)| x as i64 + (len - 1 - i) as i64).collect();
        let n = n as i64;
        let mut total = 0;
        for &b in &beta {
            let t = b - n;
            if t < 0 || beta.contains(&t) {
                continue;
            }
            let between = beta.iter().filter(|&&x| t < x && x < b).count();
            let mut nb: Vec<i64> = beta.iter().map(|&x| if x == b { t } else { x }).collect();
            nb.sort_unstable_by(|a, b| b.cmp(a));
            let nl: Vec<u32> = nb
                .iter()
                .enumerate()
                .map(|(i, &x)| (x - (len - 1 - i) as i64) as u32)
                .filter(|&x| x > 0)
                .collect();
            let sign = if between % 2 == 0 { 1 } else { -1 };
            total += sign * rec(&nl, rest);
        }
        total
    }
    rec(lambda.parts(), mu.parts())
}

/// z_μ = Π i^{m_i} m_i!.
pub fn z_mu(mu: &Partition) -> BigInt {
    let mut z = BigInt::from(1);
    let mut counts: BTreeMap<u32, u32> = BTreeMap::new();
    for &p in mu.parts() {
        *counts.entry(p).or_insert(0) += 1;
    }
    for (i, m) in counts {
        for j in 1..=m {
            z *= BigInt::from(i) * BigInt::from(j);
        }
    }
    z
}

/// R_{μλ}: the number of maps sending parts of μ to parts of λ with the
/// block sums matching, so that p_μ = Σ_λ R_{μλ} m_λ.
fn powersum_to_monomial_count(mu: &Partition, lambda: &Partition) -> i64 {
    fn rec(parts: &[u32], room: &mut [u32]) -> i64 {
        let Some((&p, rest)) = parts.split_first() else {
            return i64::from(room.iter().all(|&r| r == 0));
        };
        let mut total = 0;
        for j in 0..room.len() {
            if room[j] >= p {
                room[j] -= p;
                total += rec(rest, room);
                room[j] += p;
            }
        }
        total
    }
    let mut room = lambda.parts().to_vec();
    rec(mu.parts(), &mut room)
}

/// Change-of-basis matrices at one degree. Columns are indexed by the
/// source basis in `enumerate_level` order.
pub struct DegreeTables {
    pub basis: Vec<Partition>,
    /// Column μ: p_μ in Schur coordinates.
    pub p_to_s: Matrix<BigRational>,
    pub s_to_p: Matrix<BigRational>,
    /// Column μ: p_μ in monomial coordinates.
    pub p_to_m: Matrix<BigRational>,
    pub m_to_p: Matrix<BigRational>,
}

impl DegreeTables {
    fn build(k: u32) -> Self {
        let basis = enumerate_level(k);
        let n = basis.len();
        let mut p_to_s = Matrix::<BigRational>::zeros(n, n);
        let mut s_to_p = Matrix::<BigRational>::zeros(n, n);
        let mut p_to_m = Matrix::<BigRational>::zeros(n, n);
        for (j, mu) in basis.iter().enumerate() {
            let z = z_mu(mu);
            for (i, la) in basis.iter().enumerate() {
                let x = character(la, mu);
                p_to_s.set(i, j, BigRational::from_integer(x.into()));
                s_to_p.set(j, i, BigRational::new(x.into(), z.clone()));
                p_to_m.set(i, j, BigRational::from_integer(powersum_to_monomial_count(mu, la).into()));
            }
        }
        let m_to_p = p_to_m.inverse().expect("power sums form a basis");
        DegreeTables {
            basis,
            p_to_s,
            s_to_p,
            p_to_m,
            m_to_p,
        }
    }

    /// Matrix taking coordinates in `from` to coordinates in `to`.
    pub fn change(&self, from: SymBasis, to: SymBasis) -> Matrix<BigRational> {
        let to_p = match from {
            SymBasis::Powersum => Matrix::identity(self.basis.len()),
            SymBasis::Schur => self.s_to_p.clone(),
            SymBasis::Monomial => self.m_to_p.clone(),
        };
        match to {
            SymBasis::Powersum => to_p,
            SymBasis::Schur => self.p_to_s.mul(&to_p),
            SymBasis::Monomial => self.p_to_m.mul(&to_p),
        }
    }
}

/// Cached conversion tables for degree `k`; initialization is race-safe and
/// idempotent.
pub fn tables(k: u32) -> Arc<DegreeTables> {
    static CACHE: OnceLock<Mutex<HashMap<u32, Arc<DegreeTables>>>> = OnceLock::new();
    let cache = CACHE.get_or_init(|| Mutex::new(HashMap::new()));
    if let Some(t) = cache.lock().expect("table cache poisoned").get(&k) {
        return t.clone();
    }
    let built = Arc::new(DegreeTables::build(k));
    cache.lock().expect("table cache poisoned").entry(k).or_insert(built).clone()
}

/// A homogeneous symmetric function with coefficients in `F`.
#[derive(Clone, PartialEq)]
pub struct SymmetricPolynomial<F: Field> {
    pub degree: u32,
    pub basis: SymBasis,
    pub terms: FockVector<Partition, F>,
}

impl<F: Field> fmt::Debug for SymmetricPolynomial<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{} deg {}] {:?}", self.basis.name(), self.degree, self.terms)
    }
}

impl<F: Field> SymmetricPolynomial<F> {
    pub fn new(degree: u32, basis: SymBasis, terms: FockVector<Partition, F>) -> Result<Self, SymError> {
        if let Some(bad) = terms.labels().find(|l| l.weight() != degree) {
            return Err(SymError::DegreeMismatch {
                index: bad.to_string(),
                degree,
            });
        }
        Ok(SymmetricPolynomial { degree, basis, terms })
    }

    pub fn basis_element(basis: SymBasis, index: Partition) -> Self {
        SymmetricPolynomial {
            degree: index.weight(),
            basis,
            terms: FockVector::basis(index),
        }
    }

    pub fn zero(degree: u32, basis: SymBasis) -> Self {
        SymmetricPolynomial {
            degree,
            basis,
            terms: FockVector::zero(),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_zero()
    }

    pub fn coeff(&self, index: &Partition) -> F {
        self.terms.coeff(index)
    }

    pub fn convert(&self, target: SymBasis) -> Self {
        if target == self.basis {
            return self.clone();
        }
        let t = tables(self.degree);
        let m = t.change(self.basis, target);
        let mut out = FockVector::zero();
        for (j, src) in t.basis.iter().enumerate() {
            let c = self.terms.coeff(src);
            if c.is_zero() {
                continue;
            }
            for (i, dst) in t.basis.iter().enumerate() {
                let x = m.get(i, j);
                if !Field::is_zero(x) {
                    out.add_term(dst.clone(), c.mul(&F::from_rational(x)));
                }
            }
        }
        SymmetricPolynomial {
            degree: self.degree,
            basis: target,
            terms: out,
        }
    }

    pub fn scale(&self, c: &F) -> Self {
        SymmetricPolynomial {
            terms: self.terms.scale(c),
            ..self.clone()
        }
    }

    pub fn sub(&self, o: &Self) -> Self {
        let o = o.convert(self.basis);
        SymmetricPolynomial {
            terms: self.terms.sub(&o.terms),
            ..self.clone()
        }
    }
}

/// ã_{-μ}|0⟩ ↦ p_μ with the same coefficients.
pub fn coherent_map<F: Field>(v: &FockVector<Partition, F>) -> Result<SymmetricPolynomial<F>, SymError> {
    let degree = v.labels().next().map_or(0, Partition::weight);
    SymmetricPolynomial::new(degree, SymBasis::Powersum, v.clone())
}

fn pow_rat(x: &BigRational, k: u32) -> BigRational {
    (0..k).fold(BigRational::from_integer(1.into()), |acc, _| acc * x)
}

/// Value of a basis element of `basis` at a point with N = point.len().
fn basis_value(basis: SymBasis, index: &Partition, point: &[BigRational]) -> BigRational {
    match basis {
        SymBasis::Powersum => index
            .parts()
            .iter()
            .map(|&n| point.iter().map(|z| pow_rat(z, n)).sum::<BigRational>())
            .product(),
        SymBasis::Monomial => distinct_exponent_vectors(index, point.len())
            .iter()
            .map(|e| point.iter().zip(e).map(|(z, &k)| pow_rat(z, k)).product::<BigRational>())
            .sum(),
        SymBasis::Schur => {
            let t = tables(index.weight());
            let j = t.basis.iter().position(|x| x == index).expect("index in its own degree");
            t.basis
                .iter()
                .enumerate()
                .map(|(i, mu)| t.s_to_p.get(i, j) * basis_value(SymBasis::Powersum, mu, point))
                .sum()
        }
    }
}

/// Exact value of `f` at `point`, in N = point.len() variables.
pub fn evaluate<F: Field>(f: &SymmetricPolynomial<F>, point: &[BigRational]) -> F {
    f.terms.iter().fold(F::zero(), |acc, (idx, c)| {
        acc.add(&c.mul(&F::from_rational(&basis_value(f.basis, idx, point))))
    })
}

/// All distinct permutations of λ padded with zeros to length n; empty when
/// ℓ(λ) > n.
pub fn distinct_exponent_vectors(lambda: &Partition, n: usize) -> Vec<Vec<u32>> {
    if lambda.len() > n {
        return Vec::new();
    }
    let mut v: Vec<u32> = lambda.parts().to_vec();
    v.resize(n, 0);
    v.sort_unstable();
    let mut out = vec![v.clone()];
    // Lexicographic next-permutation visits each distinct arrangement once.
    loop {
        let Some(i) = (0..n.saturating_sub(1)).rev().find(|&i| v[i] < v[i + 1]) else {
            break;
        };
        let j = (i + 1..n).rev().find(|&j| v[j] > v[i]).expect("successor exists");
        v.swap(i, j);
        v[i + 1..].reverse();
        out.push(v.clone());
    }
    out
}

/// A polynomial in z₁..z_N: exponent vector ↦ coefficient.
#[derive(Clone, PartialEq)]
pub struct MultiPoly<F: Field> {
    pub nvars: usize,
    pub terms: BTreeMap<Vec<u32>, F>,
}

impl<F: Field> fmt::Debug for MultiPoly<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.terms.iter().map(|(e, c)| format!("({c})z^{e:?}")).collect();
        write!(f, "{}", if parts.is_empty() { "0".to_string() } else { parts.join(" + ") })
    }
}

impl<F: Field> MultiPoly<F> {
    pub fn zero(nvars: usize) -> Self {
        MultiPoly {
            nvars,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(nvars: usize, c: F) -> Self {
        let mut p = MultiPoly::zero(nvars);
        p.add_term(vec![0; nvars], c);
        p
    }

    pub fn add_term(&mut self, e: Vec<u32>, c: F) {
        if c.is_zero() {
            return;
        }
        let s = match self.terms.get(&e) {
            Some(x) => x.add(&c),
            None => c,
        };
        if s.is_zero() {
            self.terms.remove(&e);
        } else {
            self.terms.insert(e, s);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add(&self, o: &Self) -> Self {
        let mut r = self.clone();
        for (e, c) in &o.terms {
            r.add_term(e.clone(), c.clone());
        }
        r
    }

    pub fn sub(&self, o: &Self) -> Self {
        let mut r = self.clone();
        for (e, c) in &o.terms {
            r.add_term(e.clone(), c.neg());
        }
        r
    }

    pub fn scale(&self, c: &F) -> Self {
        let mut r = MultiPoly::zero(self.nvars);
        for (e, x) in &self.terms {
            r.add_term(e.clone(), x.mul(c));
        }
        r
    }

    pub fn mul(&self, o: &Self) -> Self {
        let mut r = MultiPoly::zero(self.nvars);
        for (e1, c1) in &self.terms {
            for (e2, c2) in &o.terms {
                let e: Vec<u32> = e1.iter().zip(e2).map(|(a, b)| a + b).collect();
                r.add_term(e, c1.mul(c2));
            }
        }
        r
    }

    /// Swaps variables i and j.
    pub fn swap_vars(&self, i: usize, j: usize) -> Self {
        let mut r = MultiPoly::zero(self.nvars);
        for (e, c) in &self.terms {
            let mut e = e.clone();
            e.swap(i, j);
            r.add_term(e, c.clone());
        }
        r
    }

    pub fn is_symmetric(&self) -> bool {
        (0..self.nvars.saturating_sub(1)).all(|i| self.swap_vars(i, i + 1) == *self)
    }

    pub fn evaluate(&self, point: &[BigRational]) -> F {
        self.terms.iter().fold(F::zero(), |acc, (e, c)| {
            let v: BigRational = point.iter().zip(e).map(|(z, &k)| pow_rat(z, k)).product();
            acc.add(&c.mul(&F::from_rational(&v)))
        })
    }
}

/// The explicit polynomial in `nvars` variables.
pub fn expand<F: Field>(f: &SymmetricPolynomial<F>, nvars: usize) -> MultiPoly<F> {
    let m = f.convert(SymBasis::Monomial);
    let mut out = MultiPoly::zero(nvars);
    for (idx, c) in m.terms.iter() {
        for e in distinct_exponent_vectors(idx, nvars) {
            out.add_term(e, c.clone());
        }
    }
    out
}

impl SymmetricPolynomial<ParamScalar> {
    pub fn to_json(&self) -> Value {
        let terms: Vec<Value> = self
            .terms
            .iter()
            .map(|(idx, c)| json!({"index": idx, "coef": c.to_json()}))
            .collect();
        json!({"degree": self.degree, "basis": self.basis.name(), "terms": terms})
    }

    pub fn from_json(v: &Value) -> Result<Self, SymError> {
        let bad = |m: &str| SymError::Json(m.to_string());
        let degree = v["degree"].as_u64().ok_or_else(|| bad("missing degree"))? as u32;
        let basis: SymBasis = v["basis"].as_str().ok_or_else(|| bad("missing basis"))?.parse()?;
        let mut terms = FockVector::zero();
        for t in v["terms"].as_array().ok_or_else(|| bad("missing terms"))? {
            let idx: Partition = serde_json::from_value(t["index"].clone()).map_err(|e| bad(&e.to_string()))?;
            let c = ParamScalar::from_json(&t["coef"]).map_err(|e| bad(&e.to_string()))?;
            terms.add_term(idx, c);
        }
        SymmetricPolynomial::new(degree, basis, terms)
    }

    /// LaTeX in p_μ / s_λ / m_λ notation, dominant index first.
    pub fn to_latex(&self) -> String {
        if self.terms.is_zero() {
            return "0".to_string();
        }
        let letter = self.basis.letter();
        let mut parts = Vec::new();
        for (idx, c) in self.terms.iter().collect::<Vec<_>>().into_iter().rev() {
            let label: Vec<String> = idx.parts().iter().map(u32::to_string).collect();
            let sym = if idx.is_empty() {
                "1".to_string()
            } else {
                format!("{letter}_{{{}}}", label.join(","))
            };
            let coef = if c.is_one() {
                String::new()
            } else {
                format!("\\left({}\\right)", latex_scalar(c))
            };
            parts.push(format!("{coef}{sym}"));
        }
        parts.join(" + ")
    }
}

fn latex_scalar(c: &ParamScalar) -> String {
    let num = c.numerator().to_string().replace('*', "");
    if c.denominator().is_one() {
        num
    } else {
        format!("\\frac{{{}}}{{{}}}", num, c.denominator().to_string().replace('*', ""))
    }
}
