//! Bosonic Fock spaces over the Heisenberg algebra `[a_n, a_m] = n δ_{n+m,0}`.
//!
//! A basis state is a partition μ per boson family, standing for
//! `a_{-μ₁} a_{-μ₂} ⋯ |0⟩`. On such monomials an annihilator `a_n` acts as
//! `n ∂/∂x_n` and a creator `a_{-n}` as multiplication by `x_n`. Operators are
//! sums of weighted templates; each template enumerates its normal-ordered
//! terms up to a level window, and the enumeration is cached per window.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::str::FromStr;
use std::sync::{Arc, Mutex};

use num_rational::BigRational;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::coeffield::{rat, Field, ParamScalar, Symbol};
use crate::matrix::Matrix;
use crate::partitions::{enumerate_level, Partition};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum FockError {
    #[error("unknown operator kind `{0}`")]
    UnknownKind(String),
    #[error("operator does not conserve the level: image of {source_label} leaves the basis")]
    LevelLeak { source_label: String },
    #[error("vector is not level-homogeneous")]
    Inhomogeneous,
}

/// Labels of monomial basis states, one partition per boson family.
pub trait BosonLabel: Clone + Ord + std::hash::Hash + fmt::Debug + fmt::Display + Send + Sync + 'static {
    fn families() -> usize;
    fn family(&self, f: usize) -> &Partition;
    fn from_families(parts: Vec<Partition>) -> Self;

    fn level(&self) -> u32 {
        (0..Self::families()).map(|f| self.family(f).weight()).sum()
    }
}

impl BosonLabel for Partition {
    fn families() -> usize {
        1
    }
    fn family(&self, _f: usize) -> &Partition {
        self
    }
    fn from_families(mut parts: Vec<Partition>) -> Self {
        parts.pop().unwrap_or_default()
    }
}

/// A pair of partitions, one per layer.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct BiPartition {
    pub layer1: Partition,
    pub layer2: Partition,
}

impl BiPartition {
    pub fn new(layer1: Partition, layer2: Partition) -> Self {
        BiPartition { layer1, layer2 }
    }

    pub fn bilevel(&self) -> (u32, u32) {
        (self.layer1.weight(), self.layer2.weight())
    }
}

impl fmt::Display for BiPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}⊗{}", self.layer1, self.layer2)
    }
}

impl BosonLabel for BiPartition {
    fn families() -> usize {
        2
    }
    fn family(&self, f: usize) -> &Partition {
        if f == 0 {
            &self.layer1
        } else {
            &self.layer2
        }
    }
    fn from_families(mut parts: Vec<Partition>) -> Self {
        let layer2 = parts.pop().unwrap_or_default();
        let layer1 = parts.pop().unwrap_or_default();
        BiPartition { layer1, layer2 }
    }
}

/// A finitely supported vector; zero coefficients are never stored.
#[derive(Clone, PartialEq)]
pub struct FockVector<L: Ord, F> {
    coeffs: BTreeMap<L, F>,
}

impl<L: Ord + Clone + fmt::Display, F: Field> FockVector<L, F> {
    pub fn zero() -> Self {
        FockVector {
            coeffs: BTreeMap::new(),
        }
    }

    pub fn basis(label: L) -> Self {
        let mut v = FockVector::zero();
        v.add_term(label, F::one());
        v
    }

    pub fn from_pairs<I: IntoIterator<Item = (L, F)>>(it: I) -> Self {
        let mut v = FockVector::zero();
        for (l, c) in it {
            v.add_term(l, c);
        }
        v
    }

    pub fn add_term(&mut self, label: L, c: F) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.coeffs.entry(label) {
            Entry::Vacant(e) => {
                e.insert(c);
            }
            Entry::Occupied(mut e) => {
                let s = e.get().add(&c);
                if s.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = s;
                }
            }
        }
    }

    pub fn get(&self, label: &L) -> Option<&F> {
        self.coeffs.get(label)
    }

    pub fn coeff(&self, label: &L) -> F {
        self.coeffs.get(label).cloned().unwrap_or_else(F::zero)
    }

    pub fn iter(&self) -> impl Iterator<Item = (&L, &F)> {
        self.coeffs.iter()
    }

    pub fn labels(&self) -> impl Iterator<Item = &L> {
        self.coeffs.keys()
    }

    pub fn len(&self) -> usize {
        self.coeffs.len()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn scale(&self, c: &F) -> Self {
        if c.is_zero() {
            return FockVector::zero();
        }
        FockVector {
            coeffs: self.coeffs.iter().map(|(l, x)| (l.clone(), x.mul(c))).collect(),
        }
    }

    pub fn add(&self, o: &Self) -> Self {
        let mut r = self.clone();
        for (l, c) in &o.coeffs {
            r.add_term(l.clone(), c.clone());
        }
        r
    }

    pub fn sub(&self, o: &Self) -> Self {
        let mut r = self.clone();
        for (l, c) in &o.coeffs {
            r.add_term(l.clone(), c.neg());
        }
        r
    }

    pub fn map_coeffs<G: Field>(&self, f: impl Fn(&F) -> G) -> FockVector<L, G> {
        FockVector::from_pairs(self.coeffs.iter().map(|(l, c)| (l.clone(), f(c))))
    }

    pub fn try_map_coeffs<G: Field, E>(&self, f: impl Fn(&F) -> Result<G, E>) -> Result<FockVector<L, G>, E> {
        let mut out = FockVector::zero();
        for (l, c) in &self.coeffs {
            out.add_term(l.clone(), f(c)?);
        }
        Ok(out)
    }

    pub fn into_inner(self) -> BTreeMap<L, F> {
        self.coeffs
    }
}

impl<L: Ord + Clone + fmt::Display, F: Field> fmt::Debug for FockVector<L, F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self.coeffs.iter().map(|(l, c)| format!("({c})|{l}⟩")).collect();
        write!(f, "{}", parts.join(" + "))
    }
}

impl<L: Ord + Clone + fmt::Display, F: Field> Default for FockVector<L, F> {
    fn default() -> Self {
        FockVector::zero()
    }
}

/// A bosonic mode `a^{family}_{index}`.
pub type Mode = (u8, i32);

/// A normal-ordered product: all creators, then all annihilators.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BosonTerm {
    pub coeff: BigRational,
    /// `(family, n)` standing for `a_{-n}`, n > 0.
    pub creators: Vec<(u8, u32)>,
    /// `(family, n)` standing for `a_n`, n > 0.
    pub annihilators: Vec<(u8, u32)>,
}

impl BosonTerm {
    pub fn new(coeff: BigRational, creators: Vec<(u8, u32)>, annihilators: Vec<(u8, u32)>) -> Self {
        BosonTerm {
            coeff,
            creators,
            annihilators,
        }
    }

    /// Acts on a monomial given as per-family multiplicity maps.
    fn act(&self, counts: &mut [BTreeMap<u32, u32>]) -> Option<BigRational> {
        let mut c = self.coeff.clone();
        for &(f, n) in &self.annihilators {
            let k = counts[f as usize].get_mut(&n)?;
            if *k == 0 {
                return None;
            }
            c *= BigRational::from_integer((n as i64 * *k as i64).into());
            *k -= 1;
        }
        for &(f, n) in &self.creators {
            *counts[f as usize].entry(n).or_insert(0) += 1;
        }
        Some(c)
    }
}

/// Rewrites an arbitrary word of nonzero modes into normal-ordered terms
/// using `a_n a_{-m} = a_{-m} a_n + n δ_{nm}` within one family.
pub fn normal_order(coeff: BigRational, word: &[Mode]) -> Vec<BosonTerm> {
    fn rec(coeff: BigRational, word: Vec<Mode>, out: &mut Vec<BosonTerm>) {
        let swap = (0..word.len().saturating_sub(1)).find(|&i| word[i].1 > 0 && word[i + 1].1 < 0);
        match swap {
            None => {
                let creators = word.iter().filter(|m| m.1 < 0).map(|&(f, n)| (f, (-n) as u32)).collect();
                let annihilators = word.iter().filter(|m| m.1 > 0).map(|&(f, n)| (f, n as u32)).collect();
                out.push(BosonTerm::new(coeff, creators, annihilators));
            }
            Some(i) => {
                let (x, y) = (word[i], word[i + 1]);
                let mut swapped = word.clone();
                swapped.swap(i, i + 1);
                rec(coeff.clone(), swapped, out);
                if x.0 == y.0 && x.1 == -y.1 {
                    let mut contracted = word.clone();
                    contracted.drain(i..i + 2);
                    rec(coeff * BigRational::from_integer(x.1.into()), contracted, out);
                }
            }
        }
    }
    assert!(word.iter().all(|m| m.1 != 0), "zero modes are scalars, not word letters");
    let mut out = Vec::new();
    rec(coeff, word.to_vec(), &mut out);
    out
}

type Generator<T> = dyn Fn(u32) -> Vec<T> + Send + Sync;

/// A summation template enumerating its terms up to a mode window.
pub struct Template<T = BosonTerm> {
    name: String,
    shift: i32,
    generator: Box<Generator<T>>,
    cache: Mutex<HashMap<u32, Arc<Vec<T>>>>,
}

impl<T> Template<T> {
    /// `shift` is the change of level produced by every term.
    pub fn new(name: impl Into<String>, shift: i32, generator: impl Fn(u32) -> Vec<T> + Send + Sync + 'static) -> Arc<Self> {
        Arc::new(Template {
            name: name.into(),
            shift,
            generator: Box::new(generator),
            cache: Mutex::new(HashMap::new()),
        })
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn shift(&self) -> i32 {
        self.shift
    }

    pub fn terms(&self, window: u32) -> Arc<Vec<T>> {
        let mut cache = self.cache.lock().expect("template cache poisoned");
        cache
            .entry(window)
            .or_insert_with(|| Arc::new((self.generator)(window)))
            .clone()
    }
}

/// Operators on a bosonic Fock space.
#[derive(Clone)]
pub enum OperatorSpec<F> {
    /// Σ weightᵢ · templateᵢ.
    Sum(Vec<(F, Arc<Template>)>),
    /// Multiplies the state with labels μ by Π_f factor_f^{sign·ℓ(μ_f)}.
    LengthScaling { factors: Vec<F>, sign: i32 },
}

impl<F: Field> OperatorSpec<F> {
    pub fn single(t: Arc<Template>) -> Self {
        OperatorSpec::Sum(vec![(F::one(), t)])
    }

    /// Sum of two term operators; panics on diagonal maps.
    pub fn plus(&self, o: &OperatorSpec<F>) -> OperatorSpec<F> {
        match (self, o) {
            (OperatorSpec::Sum(a), OperatorSpec::Sum(b)) => OperatorSpec::Sum(a.iter().chain(b).cloned().collect()),
            _ => panic!("only template sums can be added"),
        }
    }

    pub fn scaled(&self, c: &F) -> OperatorSpec<F> {
        match self {
            OperatorSpec::Sum(a) => OperatorSpec::Sum(a.iter().map(|(w, t)| (w.mul(c), t.clone())).collect()),
            _ => panic!("only template sums can be scaled"),
        }
    }

    pub fn apply<L: BosonLabel>(&self, v: &FockVector<L, F>) -> FockVector<L, F> {
        let mut out = FockVector::zero();
        for (label, c) in v.iter() {
            for (l, x) in self.apply_basis(label).into_inner() {
                out.add_term(l, x.mul(c));
            }
        }
        out
    }

    /// Image of a single basis state.
    pub fn apply_basis<L: BosonLabel>(&self, label: &L) -> FockVector<L, F> {
        match self {
            OperatorSpec::LengthScaling { factors, sign } => {
                let mut c = F::one();
                for (f, factor) in factors.iter().enumerate().take(L::families()) {
                    let k = label.family(f).len() as i32 * sign;
                    c = c.mul(&field_pow(factor, k));
                }
                FockVector::from_pairs([(label.clone(), c)])
            }
            OperatorSpec::Sum(parts) => {
                let level = label.level();
                let base: Vec<BTreeMap<u32, u32>> = (0..L::families())
                    .map(|f| {
                        let mut m = BTreeMap::new();
                        for &p in label.family(f).parts() {
                            *m.entry(p).or_insert(0) += 1;
                        }
                        m
                    })
                    .collect();
                let mut out = FockVector::zero();
                for (w, t) in parts {
                    let window = level.max((level as i64 + t.shift() as i64).max(0) as u32);
                    let mut acc: BTreeMap<L, BigRational> = BTreeMap::new();
                    for term in t.terms(window).iter() {
                        let mut counts = base.clone();
                        if let Some(c) = term.act(&mut counts) {
                            let l = L::from_families(counts.iter().map(counts_to_partition).collect());
                            let e = acc.entry(l).or_insert_with(|| rat(0, 1));
                            *e += c;
                        }
                    }
                    for (l, c) in acc {
                        if !Field::is_zero(&c) {
                            out.add_term(l, w.mul(&F::from_rational(&c)));
                        }
                    }
                }
                out
            }
        }
    }

    /// Matrix on an explicit basis; column j is the image of `basis[j]`.
    pub fn matrix_on<L: BosonLabel>(&self, basis: &[L]) -> Result<Matrix<F>, FockError> {
        let index: HashMap<&L, usize> = basis.iter().enumerate().map(|(i, l)| (l, i)).collect();
        let cols: Vec<Result<Vec<(usize, F)>, FockError>> = basis
            .par_iter()
            .map(|l| {
                let img = self.apply_basis(l);
                img.iter()
                    .map(|(m, c)| {
                        index
                            .get(m)
                            .map(|&i| (i, c.clone()))
                            .ok_or_else(|| FockError::LevelLeak {
                                source_label: l.to_string(),
                            })
                    })
                    .collect()
            })
            .collect();
        let mut m = Matrix::zeros(basis.len(), basis.len());
        for (j, col) in cols.into_iter().enumerate() {
            for (i, c) in col? {
                m.set(i, j, c);
            }
        }
        Ok(m)
    }

    /// Matrix between two bases, for operators that change the level.
    pub fn matrix_between<L: BosonLabel>(&self, source: &[L], target: &[L]) -> Result<Matrix<F>, FockError> {
        let index: HashMap<&L, usize> = target.iter().enumerate().map(|(i, l)| (l, i)).collect();
        let mut m = Matrix::zeros(target.len(), source.len());
        for (j, l) in source.iter().enumerate() {
            for (t, c) in self.apply_basis(l).iter() {
                let i = *index.get(t).ok_or_else(|| FockError::LevelLeak {
                    source_label: l.to_string(),
                })?;
                m.set(i, j, c.clone());
            }
        }
        Ok(m)
    }
}

fn counts_to_partition(m: &BTreeMap<u32, u32>) -> Partition {
    let mut parts = Vec::new();
    for (&n, &k) in m.iter().rev() {
        parts.extend(std::iter::repeat_n(n, k as usize));
    }
    Partition::new(parts).expect("counts give a partition")
}

pub(crate) fn field_pow<F: Field>(x: &F, k: i32) -> F {
    let base = if k < 0 { x.inv().expect("negative power of zero") } else { x.clone() };
    (0..k.unsigned_abs()).fold(F::one(), |acc, _| acc.mul(&base))
}

/// Matrix of a level-conserving operator on `enumerate_level(k)`.
pub fn operator_matrix<F: Field>(op: &OperatorSpec<F>, k: u32) -> Result<Matrix<F>, FockError> {
    op.matrix_on(&enumerate_level(k))
}

/// Σ_{n,m>0} c · a^{f1}_{-n} a^{f2}_{-m} a^{f3}_{n+m}.
pub fn cubic_create(f1: u8, f2: u8, f3: u8, c: BigRational) -> Arc<Template> {
    Template::new(format!("cubic_create[{f1}{f2}{f3}]"), 0, move |w| {
        let mut out = Vec::new();
        for n in 1..w {
            for m in 1..=w - n {
                out.push(BosonTerm::new(c.clone(), vec![(f1, n), (f2, m)], vec![(f3, n + m)]));
            }
        }
        out
    })
}

/// Σ_{n,m>0} c · a_{-n-m} a_n a_m in family `f`.
pub fn cubic_annihilate(f: u8, c: BigRational) -> Arc<Template> {
    Template::new(format!("cubic_annihilate[{f}]"), 0, move |w| {
        let mut out = Vec::new();
        for n in 1..w {
            for m in 1..=w - n {
                out.push(BosonTerm::new(c.clone(), vec![(f, n + m)], vec![(f, n), (f, m)]));
            }
        }
        out
    })
}

/// Σ_{n>0} n a_{-n} a_n when `weighted`, else Σ_{n>0} a_{-n} a_n (the level).
pub fn number(f: u8, weighted: bool) -> Arc<Template> {
    Template::new(format!("number[{f},{weighted}]"), 0, move |w| {
        (1..=w)
            .map(|n| {
                let c = if weighted { rat(n as i64, 1) } else { rat(1, 1) };
                BosonTerm::new(c, vec![(f, n)], vec![(f, n)])
            })
            .collect()
    })
}

/// A fixed word of single-family modes, normal ordered once.
pub fn word(modes: &[i32]) -> Arc<Template> {
    let letters: Vec<Mode> = modes.iter().map(|&n| (0u8, n)).collect();
    let shift = -modes.iter().sum::<i32>();
    let terms = normal_order(rat(1, 1), &letters);
    Template::new(format!("word{modes:?}"), shift, move |_| terms.clone())
}

/// Operator families available through [`build_operator`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum BosonKind {
    /// The Calogero-Sutherland operator in the rescaled modes ã.
    CsDeformed,
    /// The same operator in the original modes, optionally with the
    /// background term `b² N Σ a_{-n} a_n` for N particles.
    CsRaw { background_n: Option<i64> },
    /// The Laughlin operator; `deformed` selects the rescaled modes.
    Laughlin { deformed: bool },
    /// The level operator Σ a_{-n} a_n.
    Level,
    /// ã-to-a map: multiplies μ by b^{-ℓ(μ)}, or b^{ℓ(μ)} when inverted.
    SimilarityD { inverse: bool },
    /// Laughlin analogue: (b/2)^{-ℓ(μ)}, or (b/2)^{ℓ(μ)} when inverted.
    SimilarityDLau { inverse: bool },
}

impl FromStr for BosonKind {
    type Err = FockError;

    fn from_str(s: &str) -> Result<Self, FockError> {
        Ok(match s {
            "cs_deformed" => BosonKind::CsDeformed,
            "cs_raw" => BosonKind::CsRaw { background_n: None },
            "laughlin" => BosonKind::Laughlin { deformed: false },
            "laughlin_deformed" => BosonKind::Laughlin { deformed: true },
            "level" => BosonKind::Level,
            "similarity_D" => BosonKind::SimilarityD { inverse: false },
            "similarity_DLau" => BosonKind::SimilarityDLau { inverse: false },
            other => return Err(FockError::UnknownKind(other.to_string())),
        })
    }
}

fn b() -> ParamScalar {
    ParamScalar::symbol(Symbol::B)
}

/// The operator family in the coupling symbol `b`.
pub fn build_operator(kind: BosonKind) -> OperatorSpec<ParamScalar> {
    let one = rat(1, 1);
    let i = ParamScalar::integer;
    match kind {
        BosonKind::CsDeformed => {
            let b2 = b().pow(2);
            OperatorSpec::Sum(vec![
                (b2.clone(), cubic_create(0, 0, 0, one.clone())),
                (i(1), cubic_annihilate(0, one)),
                (&i(1) - &b2, number(0, true)),
            ])
        }
        BosonKind::CsRaw { background_n } => {
            let mut parts = vec![
                (b(), cubic_create(0, 0, 0, one.clone())),
                (b(), cubic_annihilate(0, one)),
                (&i(1) - &b().pow(2), number(0, true)),
            ];
            if let Some(n) = background_n {
                parts.push((&b().pow(2) * &i(n), number(0, false)));
            }
            OperatorSpec::Sum(parts)
        }
        BosonKind::Laughlin { deformed: true } => {
            let half_b2 = &b().pow(2) * &ParamScalar::rational(1, 2);
            OperatorSpec::Sum(vec![
                (half_b2.clone(), cubic_create(0, 0, 0, one.clone())),
                (i(1), cubic_annihilate(0, one)),
                (&i(1) - &half_b2, number(0, true)),
            ])
        }
        BosonKind::Laughlin { deformed: false } => laughlin_literal(0, &b()),
        BosonKind::Level => OperatorSpec::single(number(0, false)),
        BosonKind::SimilarityD { inverse } => OperatorSpec::LengthScaling {
            factors: vec![b()],
            sign: if inverse { 1 } else { -1 },
        },
        BosonKind::SimilarityDLau { inverse } => OperatorSpec::LengthScaling {
            factors: vec![&b() * &ParamScalar::rational(1, 2)],
            sign: if inverse { 1 } else { -1 },
        },
    }
}

/// (1 − g²/2) Σ n a_{-n}a_n + g Σ (a_{-n}a_{-m}a_{n+m} + ½ a_{-n-m}a_n a_m)
/// in family `f` with coupling `g`.
pub fn laughlin_literal(f: u8, g: &ParamScalar) -> OperatorSpec<ParamScalar> {
    let one = rat(1, 1);
    let half = ParamScalar::rational(1, 2);
    OperatorSpec::Sum(vec![
        (&ParamScalar::integer(1) - &(&g.pow(2) * &half), number(f, true)),
        (g.clone(), cubic_create(f, f, f, one.clone())),
        (g * &half, cubic_annihilate(f, one)),
    ])
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(v: &[u32]) -> Partition {
        Partition::new(v.to_vec()).unwrap()
    }
    fn i(x: i64) -> ParamScalar {
        ParamScalar::integer(x)
    }

    #[test]
    fn cs_examples() {
        let h = build_operator(BosonKind::CsDeformed);
        let b2 = b().pow(2);
        let v = h.apply(&FockVector::basis(p(&[1])));
        assert_eq!(v, FockVector::from_pairs([(p(&[1]), &i(1) - &b2)]));
        let v = h.apply(&FockVector::basis(p(&[2])));
        assert_eq!(
            v,
            FockVector::from_pairs([(p(&[1, 1]), &i(2) * &b2), (p(&[2]), &i(4) * &(&i(1) - &b2))])
        );
        let v = h.apply(&FockVector::basis(p(&[1, 1])));
        assert_eq!(
            v,
            FockVector::from_pairs([(p(&[1, 1]), &i(2) * &(&i(1) - &b2)), (p(&[2]), i(2))])
        );
        assert!(h.apply(&FockVector::<Partition, ParamScalar>::zero()).is_zero());
    }

    #[test]
    fn level_operator() {
        let n = build_operator(BosonKind::Level);
        let v = n.apply(&FockVector::basis(p(&[2, 1])));
        assert_eq!(v, FockVector::from_pairs([(p(&[2, 1]), i(3))]));
        let m = operator_matrix(&n, 4).unwrap();
        assert_eq!(m, Matrix::identity(5).scale(&i(4)));
    }

    #[test]
    fn level_two_matrix() {
        let m = operator_matrix(&build_operator(BosonKind::CsDeformed), 2).unwrap();
        let b2 = b().pow(2);
        let one_m = &i(1) - &b2;
        assert_eq!(*m.get(0, 0), &i(4) * &one_m);
        assert_eq!(*m.get(1, 0), &i(2) * &b2);
        assert_eq!(*m.get(0, 1), i(2));
        assert_eq!(*m.get(1, 1), &i(2) * &one_m);
        assert_eq!(m.trace(), &i(6) * &one_m);
        let det = &m.get(0, 0).mul(m.get(1, 1)) - &m.get(0, 1).mul(m.get(1, 0));
        assert_eq!(det, &(&i(8) * &one_m.pow(2)) - &(&i(4) * &b2));
        assert_eq!(operator_matrix(&build_operator(BosonKind::CsDeformed), 1).unwrap().get(0, 0), &one_m);
    }

    #[test]
    fn normal_ordering_contracts() {
        let t = normal_order(rat(1, 1), &[(0, 2), (0, -2)]);
        assert_eq!(t.len(), 2);
        assert_eq!(t[1], BosonTerm::new(rat(2, 1), vec![], vec![]));
        let w = OperatorSpec::<ParamScalar>::single(word(&[1, -1]));
        let v = w.apply(&FockVector::basis(p(&[1])));
        assert_eq!(v, FockVector::from_pairs([(p(&[1]), i(2))]));
    }

    #[test]
    fn level_leak_detected() {
        let w = OperatorSpec::<ParamScalar>::single(word(&[-1]));
        assert!(matches!(operator_matrix(&w, 2), Err(FockError::LevelLeak { .. })));
        assert!("nonsense".parse::<BosonKind>().is_err());
    }

    #[test]
    fn similarity_scaling() {
        let d = build_operator(BosonKind::SimilarityD { inverse: false });
        let v = d.apply(&FockVector::basis(p(&[1, 1])));
        assert_eq!(v, FockVector::from_pairs([(p(&[1, 1]), b().pow(-2))]));
    }
}
