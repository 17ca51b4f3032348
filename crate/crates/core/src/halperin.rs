//! The two-layer Halperin Hamiltonian H = H_L(u, a¹) + H_L(v, a²) + H_int in
//! a-modes, with u = √p, v = √q, and its eigenstates built from bi-Jack
//! states by a layer-transfer resolvent.
//!
//! H_int = 2r[(1/v) Σ_{n≥0,m>0} a¹_{-n}a¹_{n-m}a²_m − (1/u) Σ_{n,m>0} a¹_{-m}a²_{-n}a²_{n+m}]
//! moves m boxes from layer 2 to layer 1, so it is nilpotent at fixed total
//! level. The zero mode a¹₀ acts as u·N₁.

use std::collections::{BTreeMap, HashMap};
use std::sync::{Arc, Mutex, OnceLock};

use num_rational::BigRational;
use serde_json::{json, Value};
use thiserror::Error;

use crate::boson_fock::{build_operator, laughlin_literal, BiPartition, BosonKind, BosonTerm, FockVector, OperatorSpec, Template};
use crate::coeffield::{rat, Field, ParamScalar, Symbol};
use crate::fermion_fock::{normal_order, FermionOp, FermionTerm, LMode, PSI, PSI_STAR};
use crate::matrix::Matrix;
use crate::partitions::{enumerate_level, Partition};
use crate::spectral_solver::{eigenstate, Model, SolverError};
use crate::symfunc::tables;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum HalperinError {
    #[error("energy gap to {layer1}⊗{layer2} vanishes identically")]
    Resonance { layer1: Partition, layer2: Partition },
    #[error(transparent)]
    Solver(#[from] SolverError),
}

fn sym(s: Symbol) -> ParamScalar {
    ParamScalar::symbol(s)
}

/// Σ_{n≥1,m≥1, n≠m} a¹_{-n} a¹_{n-m} a²_m, the part of the first H_int sum
/// without zero modes.
fn transfer_first() -> Arc<Template> {
    Template::new("hint_first", 0, |w| {
        let mut out = Vec::new();
        for m in 1..=w {
            for n in 1..=w {
                let (creators, annihilators) = match n.cmp(&m) {
                    std::cmp::Ordering::Less => (vec![(0, n), (0, m - n)], vec![(1, m)]),
                    std::cmp::Ordering::Greater => (vec![(0, n)], vec![(0, n - m), (1, m)]),
                    std::cmp::Ordering::Equal => continue,
                };
                out.push(BosonTerm::new(rat(1, 1), creators, annihilators));
            }
        }
        out
    })
}

/// The zero-mode terms n = 0 and n = m of the first sum with a¹₀ removed:
/// 2 Σ_{m>0} a¹_{-m} a²_m.
fn transfer_zero_mode() -> Arc<Template> {
    Template::new("hint_zero_mode", 0, |w| {
        (1..=w).map(|m| BosonTerm::new(rat(2, 1), vec![(0, m)], vec![(1, m)])).collect()
    })
}

/// Σ_{n,m>0} a¹_{-m} a²_{-n} a²_{n+m}.
fn transfer_second() -> Arc<Template> {
    Template::new("hint_second", 0, |w| {
        let mut out = Vec::new();
        for m in 1..w {
            for n in 1..=w - m {
                out.push(BosonTerm::new(rat(1, 1), vec![(0, m), (1, n)], vec![(1, n + m)]));
            }
        }
        out
    })
}

/// H_int with N₁ particles in layer 1.
pub fn interaction(n1: i64) -> OperatorSpec<ParamScalar> {
    let two_r = &ParamScalar::integer(2) * &sym(Symbol::R);
    let over_v = two_r.mul(&sym(Symbol::V).inv().expect("nonzero"));
    let over_u = two_r.mul(&sym(Symbol::U).inv().expect("nonzero"));
    let mut parts = vec![(over_v.clone(), transfer_first()), (over_u.neg(), transfer_second())];
    if n1 != 0 {
        let zero_mode = &sym(Symbol::U) * &ParamScalar::integer(n1);
        parts.push((over_v.mul(&zero_mode), transfer_zero_mode()));
    }
    OperatorSpec::Sum(parts)
}

/// The full two-layer Hamiltonian.
pub fn build_halperin(n1: i64) -> OperatorSpec<ParamScalar> {
    laughlin_literal(0, &sym(Symbol::U))
        .plus(&laughlin_literal(1, &sym(Symbol::V)))
        .plus(&interaction(n1))
}

/// D^Hal: multiplies λ⊗μ by (u/2)^{∓ℓ(λ)} (v/2)^{∓ℓ(μ)}.
pub fn similarity_dhal(inverse: bool) -> OperatorSpec<ParamScalar> {
    let half = ParamScalar::rational(1, 2);
    OperatorSpec::LengthScaling {
        factors: vec![&sym(Symbol::U) * &half, &sym(Symbol::V) * &half],
        sign: if inverse { 1 } else { -1 },
    }
}

pub fn bilevel_basis(k1: u32, k2: u32) -> Vec<BiPartition> {
    let l2 = enumerate_level(k2);
    enumerate_level(k1)
        .into_iter()
        .flat_map(|a| l2.iter().map(move |b| BiPartition::new(a.clone(), b.clone())))
        .collect()
}

/// All states of total level k, layer-1 level ascending.
pub fn total_basis(k: u32) -> Vec<BiPartition> {
    (0..=k).flat_map(|k1| bilevel_basis(k1, k - k1)).collect()
}

/// Σλᵢ² + Σμⱼ² − (u²/2)Σ(λᵗ)² − (v²/2)Σ(μᵗ)².
pub fn halperin_energy(lambda: &Partition, mu: &Partition) -> ParamScalar {
    let layer = |p: &Partition, s: Symbol| {
        let rows = ParamScalar::integer(p.row_square_sum());
        let cols = ParamScalar::integer(p.hd_energy());
        &rows - &(&(&sym(s).pow(2) * &ParamScalar::rational(1, 2)) * &cols)
    };
    &layer(lambda, Symbol::U) + &layer(mu, Symbol::V)
}

struct JackFrame {
    basis: Vec<Partition>,
    /// Column α: a-mode power-sum coordinates of P_α.
    j: Matrix<ParamScalar>,
    j_inv: Matrix<ParamScalar>,
}

/// Laughlin Jack states of level k in a-modes, in symbol `s`.
fn jack_frame(s: Symbol, k: u32) -> Result<Arc<JackFrame>, SolverError> {
    static CACHE: OnceLock<Mutex<HashMap<(Symbol, u32), Arc<JackFrame>>>> = OnceLock::new();
    let cache = CACHE.get_or_init(|| Mutex::new(HashMap::new()));
    if let Some(f) = cache.lock().expect("cache poisoned").get(&(s, k)) {
        return Ok(f.clone());
    }
    let basis = enumerate_level(k);
    let mut j = Matrix::zeros(basis.len(), basis.len());
    for (col, alpha) in basis.iter().enumerate() {
        let v = layer_jack(s, alpha)?;
        for (row, mu) in basis.iter().enumerate() {
            j.set(row, col, v.coeff(mu));
        }
    }
    let j_inv = j.inverse().expect("Jack states form a basis");
    let frame = Arc::new(JackFrame { basis, j, j_inv });
    Ok(cache.lock().expect("cache poisoned").entry((s, k)).or_insert(frame).clone())
}

/// P_α at coupling s²/2 in a-mode power-sum coordinates.
pub fn layer_jack(s: Symbol, alpha: &Partition) -> Result<FockVector<Partition, ParamScalar>, SolverError> {
    let st = eigenstate(Model::Laughlin, alpha)?;
    let a_modes = build_operator(BosonKind::SimilarityDLau { inverse: false }).apply(&st.powersum_vector());
    Ok(a_modes.map_coeffs(|c| c.rename(Symbol::B, s)))
}

/// Ω⁰ = P_λ(u) ⊗ P_μ(v).
pub fn bi_jack(lambda: &Partition, mu: &Partition) -> Result<FockVector<BiPartition, ParamScalar>, SolverError> {
    let a = layer_jack(Symbol::U, lambda)?;
    let b = layer_jack(Symbol::V, mu)?;
    let mut out = FockVector::zero();
    for (x, c) in a.iter() {
        for (y, d) in b.iter() {
            out.add_term(BiPartition::new(x.clone(), y.clone()), c.mul(d));
        }
    }
    Ok(out)
}

/// A Halperin eigenstate in a-mode power-sum coordinates.
#[derive(Clone, Debug, PartialEq)]
pub struct OmegaState {
    pub lambda: Partition,
    pub mu: Partition,
    pub n1: i64,
    pub energy: ParamScalar,
    pub vector: FockVector<BiPartition, ParamScalar>,
    pub steps: usize,
}

/// Ω = Σ_j [(E − H_L(u) − H_L(v))⁻¹ H_int]^j Ω⁰, with the resolvent applied
/// in the bi-Jack basis where it is diagonal.
pub fn omega_eigenstate(lambda: &Partition, mu: &Partition, n1: i64) -> Result<OmegaState, HalperinError> {
    let e = halperin_energy(lambda, mu);
    let hint = interaction(n1);
    let mut term = bi_jack(lambda, mu)?;
    let mut total = term.clone();
    let mut steps = 0;
    loop {
        let image = hint.apply(&term);
        if image.is_zero() {
            break;
        }
        steps += 1;
        let mut by_level: BTreeMap<(u32, u32), Vec<(BiPartition, ParamScalar)>> = BTreeMap::new();
        for (l, c) in image.iter() {
            by_level.entry(l.bilevel()).or_default().push((l.clone(), c.clone()));
        }
        let mut next = FockVector::zero();
        for ((k1, k2), entries) in by_level {
            let f1 = jack_frame(Symbol::U, k1)?;
            let f2 = jack_frame(Symbol::V, k2)?;
            let i1: HashMap<&Partition, usize> = f1.basis.iter().enumerate().map(|(i, p)| (p, i)).collect();
            let i2: HashMap<&Partition, usize> = f2.basis.iter().enumerate().map(|(i, p)| (p, i)).collect();
            let mut x = Matrix::zeros(f1.basis.len(), f2.basis.len());
            for (l, c) in entries {
                x.set(i1[&l.layer1], i2[&l.layer2], c);
            }
            let mut coords = f1.j_inv.mul(&x).mul(&f2.j_inv.transpose());
            for (a, alpha) in f1.basis.iter().enumerate() {
                for (b, beta) in f2.basis.iter().enumerate() {
                    let c = coords.get(a, b).clone();
                    if c.is_zero() {
                        continue;
                    }
                    let gap = e.sub(&halperin_energy(alpha, beta));
                    let inv = gap.inv().ok_or_else(|| HalperinError::Resonance {
                        layer1: alpha.clone(),
                        layer2: beta.clone(),
                    })?;
                    coords.set(a, b, c.mul(&inv));
                }
            }
            let back = f1.j.mul(&coords).mul(&f2.j.transpose());
            for (a, p1) in f1.basis.iter().enumerate() {
                for (b, p2) in f2.basis.iter().enumerate() {
                    next.add_term(BiPartition::new(p1.clone(), p2.clone()), back.get(a, b).clone());
                }
            }
        }
        total = total.add(&next);
        term = next;
    }
    Ok(OmegaState {
        lambda: lambda.clone(),
        mu: mu.clone(),
        n1,
        energy: e,
        vector: total,
        steps,
    })
}

impl OmegaState {
    pub fn to_json(&self) -> Value {
        let vector: Vec<Value> = self
            .vector
            .iter()
            .collect::<Vec<_>>()
            .into_iter()
            .rev()
            .map(|(l, c)| json!({"layer1": l.layer1, "layer2": l.layer2, "coef": c.to_json()}))
            .collect();
        json!({
            "model": "halperin",
            "lambda": self.lambda,
            "mu": self.mu,
            "N1": self.n1,
            "symbols": {"u": "sqrt(p)", "v": "sqrt(q)", "r": "r"},
            "energy": self.energy.to_json(),
            "energy_text": self.energy.to_string(),
            "vector_basis": "powersum_a_modes",
            "vector": vector,
        })
    }
}

/// Rewrites a two-layer power-sum vector in per-layer Schur coordinates.
pub fn bi_powersum_to_schur<F: Field>(v: &FockVector<BiPartition, F>) -> FockVector<BiPartition, F> {
    bi_change(v, true)
}

pub fn bi_schur_to_powersum<F: Field>(v: &FockVector<BiPartition, F>) -> FockVector<BiPartition, F> {
    bi_change(v, false)
}

fn bi_change<F: Field>(v: &FockVector<BiPartition, F>, to_schur: bool) -> FockVector<BiPartition, F> {
    let column = |p: &Partition| -> Vec<(Partition, BigRational)> {
        let t = tables(p.weight());
        let m = if to_schur { &t.p_to_s } else { &t.s_to_p };
        let j = t.basis.iter().position(|x| x == p).expect("label in its level");
        t.basis
            .iter()
            .enumerate()
            .filter(|(i, _)| !Field::is_zero(m.get(*i, j)))
            .map(|(i, x)| (x.clone(), m.get(i, j).clone()))
            .collect()
    };
    let mut out = FockVector::zero();
    for (l, c) in v.iter() {
        for (a, x) in column(&l.layer1) {
            for (b, y) in column(&l.layer2) {
                out.add_term(BiPartition::new(a.clone(), b), c.mul(&F::from_rational(&(&x * &y))));
            }
        }
    }
    out
}

fn odd_window(w: i32) -> Vec<i32> {
    (-w..=w).filter(|x| x.rem_euclid(2) == 1).collect()
}

fn push(out: &mut Vec<FermionTerm>, c: BigRational, ops: &[LMode]) {
    if !Field::is_zero(&c) {
        out.push(normal_order(c, ops));
    }
}

/// Layer-1 quartic times layer-2 bilinear, the sextic part shared by the
/// derived and printed forms of the first interaction sum.
fn hint1_sextic(out: &mut Vec<FermionTerm>, w: i32, m: i32, restrict: bool) {
    let h = odd_window(w);
    for &r in &h {
        for &s in &h {
            if restrict && r + s > 0 {
                continue;
            }
            for &k in &h {
                let l = -2 * m - r - s - k;
                if l.abs() > w {
                    continue;
                }
                for &u in &h {
                    push(
                        out,
                        rat(1, 1),
                        &[(0, PSI, r), (0, PSI_STAR, s), (0, PSI, k), (0, PSI_STAR, l), (1, PSI, -u), (1, PSI_STAR, 2 * m + u)],
                    );
                }
            }
        }
    }
}

/// Fermionic form of Σ_{n≥1,m>0,n≠m} a¹_{-n}a¹_{n-m}a²_m.
pub fn hint1_fermionic() -> FermionOp<BigRational> {
    FermionOp::single(Template::new("hint1_fermionic", 0, |w| {
        let w = w as i32;
        let h = odd_window(w);
        let mut out = Vec::new();
        for m in 1..=(w + 1) / 2 {
            hint1_sextic(&mut out, w, m, true);
            for &u in &h {
                for rr in (1..=w).step_by(2) {
                    let c = rat((rr + 1) as i64, 2);
                    for (x, y) in [((PSI, -rr), (PSI_STAR, rr - 2 * m)), ((PSI_STAR, -rr), (PSI, rr - 2 * m))] {
                        push(
                            &mut out,
                            c.clone(),
                            &[(0, x.0, x.1), (0, y.0, y.1), (1, PSI, -u), (1, PSI_STAR, 2 * m + u)],
                        );
                    }
                }
            }
        }
        out
    }))
}

/// The first interaction sum with its contraction terms read literally.
pub fn hint1_fermionic_printed() -> FermionOp<BigRational> {
    FermionOp::single(Template::new("hint1_fermionic_printed", 0, |w| {
        let w = w as i32;
        let mut out = Vec::new();
        for m in 1..=(w + 1) / 2 {
            hint1_sextic(&mut out, w, m, true);
            for u in (1..=w).step_by(2) {
                for rr in (1..=w).step_by(2) {
                    let a: [(i64, [LMode; 2]); 2] = [
                        (1, [(1, PSI, -u), (1, PSI_STAR, 2 * m + u)]),
                        (-1, [(1, PSI_STAR, 2 * m - u), (1, PSI, u)]),
                    ];
                    let b: [[LMode; 2]; 2] = [[(0, PSI, -rr), (0, PSI_STAR, rr - 2 * m)], [(0, PSI_STAR, -2 * m - rr), (0, PSI, rr)]];
                    for (ca, oa) in &a {
                        for ob in &b {
                            let ops: Vec<LMode> = oa.iter().chain(ob.iter()).copied().collect();
                            push(&mut out, rat(*ca, 1), &ops);
                        }
                    }
                }
            }
        }
        out
    }))
}

/// Fermionic form of Σ_{n,m>0} a¹_{-m}a²_{-n}a²_{n+m}; `printed` selects the
/// literal contraction terms.
pub fn hint2_fermionic(printed: bool) -> FermionOp<BigRational> {
    FermionOp::single(Template::new(format!("hint2_fermionic[{printed}]"), 0, move |w| {
        let w = w as i32;
        let h = odd_window(w);
        let mut out = Vec::new();
        for m in 1..=(w + 1) / 2 {
            for &r in &h {
                for &s in &h {
                    if r + s >= 0 {
                        continue;
                    }
                    for &k in &h {
                        let l = 2 * m - r - s - k;
                        if l.abs() > w || k + l <= 0 {
                            continue;
                        }
                        for &u in &h {
                            push(
                                &mut out,
                                rat(1, 1),
                                &[(1, PSI, r), (1, PSI_STAR, s), (1, PSI, k), (1, PSI_STAR, l), (0, PSI, -u), (0, PSI_STAR, -2 * m + u)],
                            );
                        }
                    }
                }
            }
            for &u in &h {
                for rr in (1..=w).step_by(2) {
                    let parts: [(BigRational, [LMode; 2]); 2] = if printed {
                        [
                            (rat(1, 1), [(1, PSI, -rr), (1, PSI_STAR, rr + 2 * m)]),
                            (rat(1, 1), [(1, PSI_STAR, 2 * m - rr), (1, PSI, rr)]),
                        ]
                    } else {
                        let c = rat((rr - 1) as i64, 2);
                        [
                            (c.clone(), [(1, PSI, -rr), (1, PSI_STAR, rr + 2 * m)]),
                            (c, [(1, PSI_STAR, -rr), (1, PSI, rr + 2 * m)]),
                        ]
                    };
                    for (c, p) in parts {
                        let ops = [(0, PSI, -u), (0, PSI_STAR, -2 * m + u), p[0], p[1]];
                        push(&mut out, c, &ops);
                    }
                }
            }
        }
        out
    }))
}

/// The fermionic H_int with N₁ = 0.
pub fn interaction_fermionic() -> FermionOp<ParamScalar> {
    let two_r = &ParamScalar::integer(2) * &sym(Symbol::R);
    let over_v = two_r.mul(&sym(Symbol::V).inv().expect("nonzero"));
    let over_u = two_r.mul(&sym(Symbol::U).inv().expect("nonzero"));
    let lift = |op: FermionOp<BigRational>, c: &ParamScalar| op.map_weights(|w| ParamScalar::from_rational(w).mul(c));
    lift(hint1_fermionic(), &over_v).plus(&lift(hint2_fermionic(false), &over_u.neg()))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(v: &[u32]) -> Partition {
        Partition::new(v.to_vec()).unwrap()
    }
    fn bi(a: &[u32], b: &[u32]) -> BiPartition {
        BiPartition::new(p(a), p(b))
    }

    #[test]
    fn interaction_examples() {
        let h = interaction(0);
        assert!(h.apply(&FockVector::basis(bi(&[], &[1]))).is_zero());
        let v = h.apply(&FockVector::basis(bi(&[], &[2])));
        let r = sym(Symbol::R);
        let four_r = &ParamScalar::integer(4) * &r;
        assert_eq!(v.coeff(&bi(&[1], &[1])), four_r.mul(&sym(Symbol::U).inv().unwrap()).neg());
        assert_eq!(v.coeff(&bi(&[1, 1], &[])), four_r.mul(&sym(Symbol::V).inv().unwrap()));
        let full = build_halperin(0).apply(&FockVector::basis(bi(&[], &[1])));
        let e = &ParamScalar::integer(1) - &(&sym(Symbol::V).pow(2) * &ParamScalar::rational(1, 2));
        assert_eq!(full, FockVector::from_pairs([(bi(&[], &[1]), e)]));
    }

    #[test]
    fn bases_and_energies() {
        assert_eq!(bilevel_basis(1, 1), vec![bi(&[1], &[1])]);
        assert_eq!(bilevel_basis(0, 2), vec![bi(&[], &[2]), bi(&[], &[1, 1])]);
        assert_eq!(bilevel_basis(2, 1).len(), 2);
        let half = ParamScalar::rational(1, 2);
        let u2 = sym(Symbol::U).pow(2);
        let v2 = sym(Symbol::V).pow(2);
        assert_eq!(halperin_energy(&p(&[1]), &p(&[1])), &(&ParamScalar::integer(2) - &(&u2 * &half)) - &(&v2 * &half));
        assert_eq!(halperin_energy(&p(&[2, 2, 1, 1]), &p(&[])), &ParamScalar::integer(10) - &(&ParamScalar::integer(10) * &u2));
    }

    #[test]
    fn one_step_transfer() {
        let s = omega_eigenstate(&p(&[]), &p(&[2]), 0).unwrap();
        assert_eq!(s.steps, 2);
        let c = s.vector.coeff(&bi(&[1], &[1]));
        let reduced = c.mul(&sym(Symbol::R).inv().unwrap());
        let mask = reduced.numerator().variables() | reduced.denominator().variables();
        assert_eq!(mask & (1 << Symbol::R.index()), 0);
        assert!(!c.is_zero());
        let single = omega_eigenstate(&p(&[]), &p(&[1]), 0).unwrap();
        assert_eq!(single.vector, bi_jack(&p(&[]), &p(&[1])).unwrap());
    }
}
