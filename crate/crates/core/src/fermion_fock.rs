//! Fermionic Fock space: Maya configurations, the charge-zero Schur basis,
//! normal-ordered fermion products, and the fermionized CS Hamiltonian.
//!
//! Half-integer modes are stored doubled, so `-3` is the mode −3/2. A mode
//! is `(kind, idx)` with kind 0 for ψ and 1 for ψ*. Creators carry negative
//! indices. `ψ_k` with k > 0 annihilates `ψ*_{-k}` and `ψ*_k` annihilates
//! `ψ_{-k}`.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::str::FromStr;
use std::sync::Arc;

use num_rational::BigRational;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::boson_fock::{BosonLabel, FockVector, OperatorSpec, Template};
use crate::coeffield::{rat, Field, ParamScalar, Symbol};
use crate::matrix::Matrix;
use crate::partitions::{enumerate_level, FrobeniusCoords, Partition};
use crate::symfunc::tables;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum FermionError {
    #[error("unknown fermionic operator kind `{0}`")]
    UnknownKind(String),
    #[error("invalid Maya state: {0}")]
    InvalidMaya(String),
    #[error("image of {0} leaves the basis")]
    LevelLeak(String),
}

pub const PSI: u8 = 0;
pub const PSI_STAR: u8 = 1;

/// `(kind, doubled index)`.
pub type FMode = (u8, i32);
/// `(layer, kind, doubled index)`.
pub type LMode = (u8, u8, i32);

/// A finite set of occupied creation modes acting on |vac⟩, in canonical
/// order ψ_{n₁}ψ*_{m₁}ψ_{n₂}ψ*_{m₂}⋯ with the most negative modes first.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Config {
    pub psi: Vec<i32>,
    pub psi_star: Vec<i32>,
}

impl Config {
    pub fn vacuum() -> Self {
        Config::default()
    }

    pub fn charge(&self) -> i32 {
        self.psi.len() as i32 - self.psi_star.len() as i32
    }

    /// Σ|r| over occupied modes, doubled.
    pub fn energy2(&self) -> i64 {
        self.psi.iter().chain(&self.psi_star).map(|&x| x.unsigned_abs() as i64).sum()
    }

    pub fn word(&self) -> Vec<FMode> {
        let n = self.psi.len().max(self.psi_star.len());
        let mut w = Vec::with_capacity(self.psi.len() + self.psi_star.len());
        for i in 0..n {
            if let Some(&x) = self.psi.get(i) {
                w.push((PSI, x));
            }
            if let Some(&x) = self.psi_star.get(i) {
                w.push((PSI_STAR, x));
            }
        }
        w
    }

    /// Canonical configuration of a word of distinct creators, with the
    /// sign of the reordering.
    pub fn from_word(word: &[FMode]) -> (i32, Config) {
        let mut psi: Vec<i32> = word.iter().filter(|m| m.0 == PSI).map(|m| m.1).collect();
        let mut psi_star: Vec<i32> = word.iter().filter(|m| m.0 == PSI_STAR).map(|m| m.1).collect();
        psi.sort_unstable();
        psi_star.sort_unstable();
        let cfg = Config { psi, psi_star };
        let target = cfg.word();
        let pos: Vec<usize> = target
            .iter()
            .map(|t| word.iter().position(|w| w == t).expect("same modes"))
            .collect();
        (permutation_sign(&pos), cfg)
    }

    /// The partition of a charge-zero configuration.
    pub fn to_partition(&self) -> Option<Partition> {
        if self.charge() != 0 {
            return None;
        }
        let arms = self.psi.iter().map(|&x| ((-x - 1) / 2) as u32).collect();
        let legs = self.psi_star.iter().map(|&x| ((-x - 1) / 2) as u32).collect();
        FrobeniusCoords { arms, legs }.to_partition().ok()
    }
}

impl fmt::Display for Config {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .word()
            .iter()
            .map(|&(k, x)| format!("{}{}/2", if k == PSI { "ψ" } else { "ψ*" }, x))
            .collect();
        write!(f, "{}|vac⟩", parts.join(""))
    }
}

fn permutation_sign(pos: &[usize]) -> i32 {
    let mut inv = 0;
    for i in 0..pos.len() {
        for j in i + 1..pos.len() {
            if pos[i] > pos[j] {
                inv += 1;
            }
        }
    }
    if inv % 2 == 0 {
        1
    } else {
        -1
    }
}

/// The Schur state |λ⟩ = (−1)^{Σβᵢ} ψ_{-n₁}ψ*_{-m₁}⋯|vac⟩.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MayaState {
    pub partition: Partition,
    pub sign: i32,
    pub modes: Config,
}

pub fn maya_from_partition(lambda: &Partition) -> MayaState {
    let fr = lambda.frobenius();
    let psi = fr.arms.iter().map(|&a| -(2 * a as i32 + 1)).collect();
    let psi_star = fr.legs.iter().map(|&b| -(2 * b as i32 + 1)).collect();
    let sign = if fr.legs.iter().sum::<u32>() % 2 == 0 { 1 } else { -1 };
    MayaState {
        partition: lambda.clone(),
        sign,
        modes: Config { psi, psi_star },
    }
}

/// Inverse of [`maya_from_partition`]; rejects inconsistent records.
pub fn partition_from_maya(m: &MayaState) -> Result<Partition, FermionError> {
    let p = m
        .modes
        .to_partition()
        .ok_or_else(|| FermionError::InvalidMaya("modes do not form a charge-zero state".into()))?;
    if maya_from_partition(&p) != *m {
        return Err(FermionError::InvalidMaya(format!("record disagrees with partition {p}")));
    }
    Ok(p)
}

/// Applies a product of modes (rightmost first) to a creator word in place.
fn act(ops: &[FMode], word: &mut Vec<FMode>) -> Option<i32> {
    let mut sign = 1;
    for &(kind, idx) in ops.iter().rev() {
        if idx < 0 {
            if word.contains(&(kind, idx)) {
                return None;
            }
            word.insert(0, (kind, idx));
        } else {
            let p = word.iter().position(|&m| m == (1 - kind, -idx))?;
            if p % 2 == 1 {
                sign = -sign;
            }
            word.remove(p);
        }
    }
    Some(sign)
}

/// A normal-ordered product of fermion modes, possibly spanning layers.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FermionTerm {
    pub coeff: BigRational,
    pub ops: Vec<LMode>,
}

/// Normal-orders a product within each layer (creators left) and returns
/// the term with the permutation sign folded in. Layers commute.
pub fn normal_order(coeff: BigRational, ops: &[LMode]) -> FermionTerm {
    let layers = ops.iter().map(|o| o.0).max().map_or(0, |m| m + 1);
    let mut out = Vec::with_capacity(ops.len());
    let mut neg = false;
    for layer in 0..layers {
        let sub: Vec<(usize, LMode)> = ops.iter().copied().filter(|o| o.0 == layer).enumerate().collect();
        let order: Vec<usize> = sub
            .iter()
            .filter(|(_, o)| o.2 < 0)
            .chain(sub.iter().filter(|(_, o)| o.2 > 0))
            .map(|(i, _)| *i)
            .collect();
        if permutation_sign(&order) < 0 {
            neg = !neg;
        }
        out.extend(order.iter().map(|&i| sub[i].1));
    }
    FermionTerm {
        coeff: if neg { -coeff } else { coeff },
        ops: out,
    }
}

fn single(ops: &[FMode]) -> Vec<LMode> {
    ops.iter().map(|&(k, i)| (0, k, i)).collect()
}

/// Weighted sum of fermionic templates. Template shifts are in half-units.
#[derive(Clone)]
pub struct FermionOp<F> {
    pub parts: Vec<(F, Arc<Template<FermionTerm>>)>,
}

impl<F: Field> FermionOp<F> {
    pub fn single(t: Arc<Template<FermionTerm>>) -> Self {
        FermionOp {
            parts: vec![(F::one(), t)],
        }
    }

    /// The operator given by one fixed product of modes.
    pub fn word(ops: &[LMode]) -> Self {
        let t = normal_order(rat(1, 1), ops);
        let shift = -ops.iter().map(|o| o.2).sum::<i32>();
        FermionOp::single(Template::new(format!("{ops:?}"), shift, move |_| vec![t.clone()]))
    }

    pub fn plus(&self, o: &Self) -> Self {
        FermionOp {
            parts: self.parts.iter().chain(&o.parts).cloned().collect(),
        }
    }

    pub fn scaled(&self, c: &F) -> Self {
        FermionOp {
            parts: self.parts.iter().map(|(w, t)| (w.mul(c), t.clone())).collect(),
        }
    }

    pub fn map_weights<G: Field>(&self, f: impl Fn(&F) -> G) -> FermionOp<G> {
        FermionOp {
            parts: self.parts.iter().map(|(w, t)| (f(w), t.clone())).collect(),
        }
    }

    /// Image of a Schur basis state, one layer per boson family of `L`.
    pub fn apply_schur_basis<L: BosonLabel>(&self, label: &L) -> FockVector<L, F> {
        let nl = L::families();
        let mayas: Vec<MayaState> = (0..nl).map(|f| maya_from_partition(label.family(f))).collect();
        let words: Vec<Vec<FMode>> = mayas.iter().map(|m| m.modes.word()).collect();
        let sign0: i32 = mayas.iter().map(|m| m.sign).product();
        let e2 = 2 * label.level() as i64;
        let mut out = FockVector::zero();
        for (w, t) in &self.parts {
            let window = e2.max(e2 + t.shift() as i64).max(0) as u32;
            let mut acc: BTreeMap<L, BigRational> = BTreeMap::new();
            'terms: for term in t.terms(window).iter() {
                let mut ws = words.clone();
                let mut sign = sign0;
                for layer in 0..nl {
                    let ops: Vec<FMode> = term.ops.iter().filter(|o| o.0 as usize == layer).map(|o| (o.1, o.2)).collect();
                    if ops.is_empty() {
                        continue;
                    }
                    match act(&ops, &mut ws[layer]) {
                        Some(s) => sign *= s,
                        None => continue 'terms,
                    }
                }
                let mut parts = Vec::with_capacity(nl);
                for w in &ws {
                    let (s, cfg) = Config::from_word(w);
                    let Some(p) = cfg.to_partition() else {
                        continue 'terms;
                    };
                    sign *= s * maya_from_partition(&p).sign;
                    parts.push(p);
                }
                let e = acc.entry(L::from_families(parts)).or_insert_with(|| rat(0, 1));
                if sign > 0 {
                    *e += &term.coeff;
                } else {
                    *e -= &term.coeff;
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

    pub fn apply_schur<L: BosonLabel>(&self, v: &FockVector<L, F>) -> FockVector<L, F> {
        let mut out = FockVector::zero();
        for (l, c) in v.iter() {
            for (m, x) in self.apply_schur_basis(l).into_inner() {
                out.add_term(m, x.mul(c));
            }
        }
        out
    }

    /// Action on single-layer configurations of any charge.
    pub fn apply_config(&self, v: &FockVector<Config, F>) -> FockVector<Config, F> {
        let mut out = FockVector::zero();
        for (cfg, c) in v.iter() {
            let e2 = cfg.energy2();
            let word = cfg.word();
            for (w, t) in &self.parts {
                let window = e2.max(e2 + t.shift() as i64).max(0) as u32;
                for term in t.terms(window).iter() {
                    let ops: Vec<FMode> = term.ops.iter().map(|o| (o.1, o.2)).collect();
                    let mut ws = word.clone();
                    let Some(s1) = act(&ops, &mut ws) else {
                        continue;
                    };
                    let (s2, target) = Config::from_word(&ws);
                    let mut x = F::from_rational(&term.coeff).mul(w).mul(c);
                    if s1 * s2 < 0 {
                        x = x.neg();
                    }
                    out.add_term(target, x);
                }
            }
        }
        out
    }

    /// Matrix on an explicit Schur basis; column j is the image of `basis[j]`.
    pub fn matrix_on<L: BosonLabel>(&self, basis: &[L]) -> Result<Matrix<F>, FermionError> {
        self.matrix_between(basis, basis)
    }

    pub fn matrix_between<L: BosonLabel>(&self, source: &[L], target: &[L]) -> Result<Matrix<F>, FermionError> {
        let index: HashMap<&L, usize> = target.iter().enumerate().map(|(i, l)| (l, i)).collect();
        let cols: Vec<_> = source.par_iter().map(|l| (l, self.apply_schur_basis(l))).collect();
        let mut m = Matrix::zeros(target.len(), source.len());
        for (j, (l, img)) in cols.into_iter().enumerate() {
            for (t, c) in img.iter() {
                let i = *index.get(t).ok_or_else(|| FermionError::LevelLeak(l.to_string()))?;
                m.set(i, j, c.clone());
            }
        }
        Ok(m)
    }

    pub fn schur_matrix(&self, k: u32) -> Result<Matrix<F>, FermionError> {
        self.matrix_on(&enumerate_level(k))
    }
}

fn half(x: i32) -> BigRational {
    rat(x as i64, 2)
}

/// Σ_{k>0} fa(k) ψ_{-k}ψ*_k + fb(k) ψ*_{-k}ψ_k.
pub fn bilinear_diag(
    name: &str,
    fa: impl Fn(&BigRational) -> BigRational + Send + Sync + 'static,
    fb: impl Fn(&BigRational) -> BigRational + Send + Sync + 'static,
) -> Arc<Template<FermionTerm>> {
    Template::new(name, 0, move |w| {
        let mut out = Vec::new();
        for x in (1..=w as i32).step_by(2) {
            let k = half(x);
            let a = fa(&k);
            if !Field::is_zero(&a) {
                out.push(FermionTerm {
                    coeff: a,
                    ops: single(&[(PSI, -x), (PSI_STAR, x)]),
                });
            }
            let b = fb(&k);
            if !Field::is_zero(&b) {
                out.push(FermionTerm {
                    coeff: b,
                    ops: single(&[(PSI_STAR, -x), (PSI, x)]),
                });
            }
        }
        out
    })
}

type QuarticRule = dyn Fn(&[BigRational; 4]) -> Option<BigRational> + Send + Sync;

/// Σ_{r+s+k+l=0} c(r,s,k,l) :ψ_r ψ*_s ψ_k ψ*_l:; `rule` returns the
/// coefficient, or `None` outside the summation range.
pub fn quartic(name: &str, rule: impl Fn(&[BigRational; 4]) -> Option<BigRational> + Send + Sync + 'static) -> Arc<Template<FermionTerm>> {
    let rule: Box<QuarticRule> = Box::new(rule);
    Template::new(name, 0, move |w| {
        let w = w as i32;
        let odd: Vec<i32> = (-w..=w).filter(|x| x.rem_euclid(2) == 1).collect();
        let mut out = Vec::new();
        for &r in &odd {
            for &s in &odd {
                for &k in &odd {
                    let l = -(r + s + k);
                    if l.abs() > w {
                        continue;
                    }
                    let Some(c) = rule(&[half(r), half(s), half(k), half(l)]) else {
                        continue;
                    };
                    if Field::is_zero(&c) {
                        continue;
                    }
                    out.push(normal_order(c, &single(&[(PSI, r), (PSI_STAR, s), (PSI, k), (PSI_STAR, l)])));
                }
            }
        }
        out
    })
}

fn h0() -> Arc<Template<FermionTerm>> {
    let f = |k: &BigRational| k * k + rat(3, 4);
    bilinear_diag("H0", f, move |k| -f(k))
}

fn hd() -> Vec<Arc<Template<FermionTerm>>> {
    let h = rat(1, 2);
    let h2 = h.clone();
    vec![
        bilinear_diag(
            "Hd_bilinear",
            move |k| rat(1, 3) * (k - &h),
            move |k| (k - &h2) * (k + rat(1, 6)),
        ),
        quartic("Hd_quartic", |[r, s, k, l]| {
            let pos = Field::add(k, l) > rat(0, 1);
            (pos && *r == -l && *s == -k).then(|| rat(2, 3) * (rat(2, 1) * k + l))
        }),
    ]
}

fn ht(include_diagonal: bool) -> Arc<Template<FermionTerm>> {
    quartic(if include_diagonal { "Ht_printed" } else { "Ht" }, move |[_r, s, k, l]| {
        let pos = Field::add(k, l) > rat(0, 1);
        let diag = Field::is_zero(&Field::add(k, s));
        (pos && (include_diagonal || !diag)).then(|| rat(2, 1) * k + rat(2, 3) * (s + l))
    })
}

/// The five-case decomposition of H_t. `line1_sign` multiplies the first
/// case; −1 is the consistent choice.
fn ht_cases(line1_sign: i64) -> Arc<Template<FermionTerm>> {
    Template::new(format!("Ht_cases[{line1_sign}]"), 0, move |w| {
        let w = w as i32;
        let mut out = Vec::new();
        let mut push = |c: BigRational, ops: &[FMode]| {
            if !Field::is_zero(&c) {
                out.push(FermionTerm { coeff: c, ops: single(ops) });
            }
        };
        let pos: Vec<i32> = (1..=w).step_by(2).collect();
        for &k in &pos {
            for &r in &pos {
                if k > r {
                    for n in 1..=(r - 1) / 2 {
                        push(
                            rat(line1_sign * (k - r) as i64, 1),
                            &[(PSI_STAR, -(k + 2 * n)), (PSI_STAR, -(r - 2 * n)), (PSI, r), (PSI, k)],
                        );
                    }
                    let kr = (k - r) / 2;
                    for n in 1..=(kr - 1) / 2 {
                        push(
                            rat((r - k + 4 * n) as i64, 1),
                            &[(PSI, -(k - 2 * n)), (PSI, -(r + 2 * n)), (PSI_STAR, r), (PSI_STAR, k)],
                        );
                    }
                    for &s in &pos {
                        push(rat((r - k) as i64, 1), &[(PSI_STAR, -(r + s + k)), (PSI, r), (PSI, k), (PSI_STAR, s)]);
                        push(rat((k - r) as i64, 1), &[(PSI, -k), (PSI_STAR, -s), (PSI, -r), (PSI_STAR, r + s + k)]);
                    }
                }
                for n in 1..=(r - 1) / 2 {
                    push(
                        rat((k + r - 2 * n) as i64, 1),
                        &[(PSI, -(r - 2 * n)), (PSI_STAR, -(k + 2 * n)), (PSI, k), (PSI_STAR, r)],
                    );
                }
            }
        }
        out
    })
}

/// ã_n = Σ_r :ψ_{n-r}ψ*_r:.
pub fn boson_mode(n: i32) -> Arc<Template<FermionTerm>> {
    Template::new(format!("a[{n}]"), -2 * n, move |w| {
        let w = w as i32;
        (-w..=w)
            .filter(|x| x.rem_euclid(2) == 1 && (2 * n - x).abs() <= w)
            .map(|x| normal_order(rat(1, 1), &single(&[(PSI, 2 * n - x), (PSI_STAR, x)])))
            .collect()
    })
}

/// L̃_n = Σ_r (r + n/2) :ψ_{-r}ψ*_{n+r}:.
pub fn virasoro(n: i32) -> Arc<Template<FermionTerm>> {
    Template::new(format!("L[{n}]"), -2 * n, move |w| {
        let w = w as i32;
        (-w..=w)
            .filter(|x| x.rem_euclid(2) == 1 && (2 * n + x).abs() <= w)
            .filter_map(|x| {
                let c = half(x) + half(n);
                (!Field::is_zero(&c)).then(|| normal_order(c, &single(&[(PSI, -x), (PSI_STAR, 2 * n + x)])))
            })
            .collect()
    })
}

fn full_printed_interaction() -> Vec<Arc<Template<FermionTerm>>> {
    let c = |k: &BigRational| rat(2, 3) * rat(1, 16) * (rat(6, 1) * k - rat(1, 1)) * (rat(2, 1) * k - rat(1, 1));
    let d = |k: &BigRational| rat(1, 2) * (k * k - rat(1, 4));
    vec![
        quartic("full_quartic", |[r, s, k, l]| {
            let zero = rat(0, 1);
            (Field::add(r, s) < zero && Field::add(k, l) > zero)
                .then(|| rat(2, 3) * ((s - r) / rat(2, 1) + k - l) + (k + l))
        }),
        bilinear_diag("full_bilinear", move |k| d(k) - c(k), move |k| d(k) + c(k)),
    ]
}

/// Fermionic operator families.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FermionKind {
    H0,
    Hd,
    /// H_t without the k+s=0 terms already contained in H_d.
    Ht,
    /// H_t with the summation range read literally, overlapping H_d.
    HtAsPrinted,
    /// The five-case form of H_t.
    HtCases,
    /// The five-case form with the first case's sign read literally.
    HtCasesPrinted,
    /// H₀ + (1−b²)(quartic + contraction bilinears) in one printed formula.
    FullPrinted,
    /// H₀ + (1−b²)H_d + (1−b²)H_t.
    Decomposed,
    BosonMode(i32),
    Virasoro(i32),
}

impl FromStr for FermionKind {
    type Err = FermionError;

    fn from_str(s: &str) -> Result<Self, FermionError> {
        let arg = |prefix: &str| -> Option<i32> { s.strip_prefix(prefix)?.strip_suffix(')')?.trim().parse().ok() };
        Ok(match s {
            "H0" => FermionKind::H0,
            "Hd" => FermionKind::Hd,
            "Ht" => FermionKind::Ht,
            "Ht_printed" => FermionKind::HtAsPrinted,
            "Ht_cases" => FermionKind::HtCases,
            "Ht_cases_printed" => FermionKind::HtCasesPrinted,
            "full_printed" => FermionKind::FullPrinted,
            "H" => FermionKind::Decomposed,
            _ => {
                if let Some(n) = arg("boson_mode(") {
                    FermionKind::BosonMode(n)
                } else if let Some(n) = arg("virasoro(") {
                    FermionKind::Virasoro(n)
                } else {
                    return Err(FermionError::UnknownKind(s.to_string()));
                }
            }
        })
    }
}

fn one_minus_b2() -> ParamScalar {
    &ParamScalar::integer(1) - &ParamScalar::symbol(Symbol::B).pow(2)
}

pub fn build_fermionic(kind: FermionKind) -> FermionOp<ParamScalar> {
    let one = ParamScalar::integer(1);
    let plain = |ts: Vec<Arc<Template<FermionTerm>>>| FermionOp {
        parts: ts.into_iter().map(|t| (one.clone(), t)).collect(),
    };
    match kind {
        FermionKind::H0 => plain(vec![h0()]),
        FermionKind::Hd => plain(hd()),
        FermionKind::Ht => plain(vec![ht(false)]),
        FermionKind::HtAsPrinted => plain(vec![ht(true)]),
        FermionKind::HtCases => plain(vec![ht_cases(-1)]),
        FermionKind::HtCasesPrinted => plain(vec![ht_cases(1)]),
        FermionKind::BosonMode(n) => plain(vec![boson_mode(n)]),
        FermionKind::Virasoro(n) => plain(vec![virasoro(n)]),
        FermionKind::FullPrinted => {
            let g = one_minus_b2();
            plain(vec![h0()]).plus(&FermionOp {
                parts: full_printed_interaction().into_iter().map(|t| (g.clone(), t)).collect(),
            })
        }
        FermionKind::Decomposed => {
            let g = one_minus_b2();
            let mut inter = hd();
            inter.push(ht(false));
            plain(vec![h0()]).plus(&FermionOp {
                parts: inter.into_iter().map(|t| (g.clone(), t)).collect(),
            })
        }
    }
}

/// A bosonic operator's level-k matrix expressed in Schur coordinates:
/// S · M · S⁻¹ with S the power-sum-to-Schur change of basis.
pub fn boson_matrix_in_schur<F: Field>(op: &OperatorSpec<F>, k: u32) -> Result<Matrix<F>, crate::boson_fock::FockError> {
    let m = crate::boson_fock::operator_matrix(op, k)?;
    let t = tables(k);
    let p2s = t.p_to_s.map(F::from_rational);
    let s2p = t.s_to_p.map(F::from_rational);
    Ok(p2s.mul(&m).mul(&s2p))
}

/// A power-sum-coordinate vector rewritten in Schur coordinates.
pub fn powersum_to_schur<F: Field>(v: &FockVector<Partition, F>) -> FockVector<Partition, F> {
    let degree = v.labels().next().map_or(0, Partition::weight);
    crate::symfunc::SymmetricPolynomial::new(degree, crate::symfunc::SymBasis::Powersum, v.clone())
        .expect("homogeneous vector")
        .convert(crate::symfunc::SymBasis::Schur)
        .terms
}

/// A Schur-coordinate vector rewritten in power-sum coordinates.
pub fn schur_to_powersum<F: Field>(v: &FockVector<Partition, F>) -> FockVector<Partition, F> {
    let degree = v.labels().next().map_or(0, Partition::weight);
    crate::symfunc::SymmetricPolynomial::new(degree, crate::symfunc::SymBasis::Schur, v.clone())
        .expect("homogeneous vector")
        .convert(crate::symfunc::SymBasis::Powersum)
        .terms
}
