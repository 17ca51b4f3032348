//! Closed-form energies and Jack eigenstates by the triangular resolvent.
//!
//! In the Schur basis the CS Hamiltonian splits as `H₀^β + g·H_t` with
//! `H₀^β = H₀ + g·H_d` diagonal and `H_t` strictly dominance-lowering, where
//! g = 1 − b² (CS) or 1 − b²/2 (Laughlin). The eigenstate
//! `P_λ = Σ_j [(E_λ − H₀^β)⁻¹ g H_t]^j s_λ` is then a finite sum.

use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::str::FromStr;
use std::sync::{Arc, Mutex, OnceLock};

use num_rational::BigRational;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use serde_json::{json, Value};
use thiserror::Error;

use crate::boson_fock::{build_operator, BosonKind, FockVector, OperatorSpec};
use crate::coeffield::{Assignment, CoeffError, Field, ParamScalar, Symbol};
use crate::fermion_fock::{build_fermionic, schur_to_powersum, FermionKind};
use crate::partitions::{enumerate_level, Partition};
use crate::symfunc::{tables, SymBasis, SymmetricPolynomial};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SolverError {
    #[error("unknown model `{0}`")]
    UnknownModel(String),
    #[error("resonance: energy gap {factor} vanishes at the requested coupling")]
    Resonance { factor: String },
    #[error("degenerate spectrum at the requested coupling: {lambda} and {other} share an energy")]
    Degenerate { lambda: Partition, other: Partition },
    #[error("cannot normalize the zero vector")]
    ZeroVector,
    #[error("normalizing coefficient vanishes")]
    VanishingNormalizer,
    #[error(transparent)]
    Coeff(#[from] CoeffError),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Model {
    Cs,
    Laughlin,
}

impl Model {
    pub fn name(self) -> &'static str {
        match self {
            Model::Cs => "cs",
            Model::Laughlin => "laughlin",
        }
    }

    /// The bosonic operator in ã-modes whose eigenstates are computed.
    pub fn operator(self) -> OperatorSpec<ParamScalar> {
        match self {
            Model::Cs => build_operator(BosonKind::CsDeformed),
            Model::Laughlin => build_operator(BosonKind::Laughlin { deformed: true }),
        }
    }

    /// The effective Jack coupling as a multiple of b².
    pub fn beta_scale(self) -> BigRational {
        match self {
            Model::Cs => BigRational::from_integer(1.into()),
            Model::Laughlin => BigRational::new(1.into(), 2.into()),
        }
    }

    fn interaction_factor(self) -> ParamScalar {
        let b2 = ParamScalar::symbol(Symbol::B).pow(2);
        let scaled = &b2 * &ParamScalar::from_rational(&self.beta_scale());
        &ParamScalar::integer(1) - &scaled
    }
}

impl FromStr for Model {
    type Err = SolverError;
    fn from_str(s: &str) -> Result<Self, SolverError> {
        match s {
            "cs" => Ok(Model::Cs),
            "laughlin" => Ok(Model::Laughlin),
            other => Err(SolverError::UnknownModel(other.to_string())),
        }
    }
}

/// Σλᵢ² − c·b²Σ(λᵗᵢ)² with c = 1 (CS) or 1/2 (Laughlin).
pub fn energy(model: Model, lambda: &Partition) -> ParamScalar {
    let rows = ParamScalar::integer(lambda.row_square_sum());
    let cols = ParamScalar::integer(lambda.hd_energy());
    let c = ParamScalar::from_rational(&model.beta_scale());
    &rows - &(&(&ParamScalar::symbol(Symbol::B).pow(2) * &c) * &cols)
}

type SparseColumns = HashMap<Partition, Vec<(Partition, BigRational)>>;

/// H_t per level in the Schur basis, cached.
fn ht_columns(k: u32) -> Arc<SparseColumns> {
    static CACHE: OnceLock<Mutex<HashMap<u32, Arc<SparseColumns>>>> = OnceLock::new();
    let cache = CACHE.get_or_init(|| Mutex::new(HashMap::new()));
    if let Some(c) = cache.lock().expect("cache poisoned").get(&k) {
        return c.clone();
    }
    let ht = build_fermionic(FermionKind::Ht).map_weights(|w| w.as_rational().expect("constant weight"));
    let cols: SparseColumns = enumerate_level(k)
        .into_par_iter()
        .map(|l| {
            let img = ht.apply_schur_basis(&l).into_inner().into_iter().collect();
            (l, img)
        })
        .collect();
    let cols = Arc::new(cols);
    cache.lock().expect("cache poisoned").entry(k).or_insert(cols).clone()
}

/// An eigenstate with its energy. `vector` holds Schur coordinates of the
/// ã-mode state.
#[derive(Clone, Debug, PartialEq)]
pub struct Spectrum {
    pub model: Model,
    pub lambda: Partition,
    pub energy: ParamScalar,
    pub vector: FockVector<Partition, ParamScalar>,
    /// Number of nonzero resolvent steps taken.
    pub steps: usize,
    /// Labels whose energy gap entered a denominator.
    pub visited: BTreeSet<Partition>,
    /// The value of b² when specialized.
    pub beta: Option<BigRational>,
}

/// The eigenstate for λ with formal coupling, leading Schur coefficient 1.
pub fn eigenstate(model: Model, lambda: &Partition) -> Result<Spectrum, SolverError> {
    let k = lambda.weight();
    let e = energy(model, lambda);
    let g = model.interaction_factor();
    let ht = ht_columns(k);
    let mut term = FockVector::<Partition, ParamScalar>::basis(lambda.clone());
    let mut total = term.clone();
    let mut visited = BTreeSet::new();
    let mut steps = 0;
    loop {
        let mut next = FockVector::zero();
        for (nu, c) in term.iter() {
            for (mu, x) in &ht[nu] {
                next.add_term(mu.clone(), c.mul(&ParamScalar::from_rational(x)));
            }
        }
        if next.is_zero() {
            break;
        }
        steps += 1;
        let mut scaled = FockVector::zero();
        for (mu, c) in next.iter() {
            let gap = e.sub(&energy(model, mu));
            let inv = gap.inv().ok_or_else(|| SolverError::Resonance {
                factor: gap_text(&gap),
            })?;
            visited.insert(mu.clone());
            scaled.add_term(mu.clone(), c.mul(&g).mul(&inv));
        }
        total = total.add(&scaled);
        term = scaled;
    }
    Ok(Spectrum {
        model,
        lambda: lambda.clone(),
        energy: e,
        vector: total,
        steps,
        visited,
        beta: None,
    })
}

fn gap_text(gap: &ParamScalar) -> String {
    gap.display_beta().unwrap_or_else(|| gap.to_string())
}

/// All eigenstates at level k, in `enumerate_level` order.
pub fn spectrum(model: Model, k: u32) -> Result<Vec<Spectrum>, SolverError> {
    enumerate_level(k).par_iter().map(|l| eigenstate(model, l)).collect()
}

impl Spectrum {
    /// Specializes b² = β. Visited gaps are checked for resonance first,
    /// then other states of the level for accidental degeneracy.
    pub fn specialize(&self, beta: &BigRational) -> Result<Spectrum, SolverError> {
        let at = [Assignment::Square(Symbol::B, beta.clone())];
        for mu in &self.visited {
            let gap = self.energy.sub(&energy(self.model, mu));
            if Field::is_zero(&gap.specialize(&at)?) {
                return Err(SolverError::Resonance {
                    factor: gap_text(&gap),
                });
            }
        }
        let e = self.energy.specialize(&at)?;
        for other in enumerate_level(self.lambda.weight()) {
            let eo = energy(self.model, &other);
            if other != self.lambda && eo != self.energy && eo.specialize(&at)? == e {
                return Err(SolverError::Degenerate {
                    lambda: self.lambda.clone(),
                    other,
                });
            }
        }
        let vector = self
            .vector
            .try_map_coeffs(|c| c.specialize(&at).map(|x| ParamScalar::from_rational(&x)))?;
        Ok(Spectrum {
            energy: ParamScalar::from_rational(&e),
            vector,
            beta: Some(beta.clone()),
            ..self.clone()
        })
    }

    /// Coordinates in the power-sum basis of ã-modes.
    pub fn powersum_vector(&self) -> FockVector<Partition, ParamScalar> {
        schur_to_powersum(&self.vector)
    }

    /// The eigenvector written in `basis`.
    pub fn vector_in(&self, basis: SymBasis) -> SymmetricPolynomial<ParamScalar> {
        SymmetricPolynomial::new(self.lambda.weight(), SymBasis::Schur, self.vector.clone())
            .expect("homogeneous eigenvector")
            .convert(basis)
    }

    pub fn normalized(&self, mode: Normalization) -> Result<Spectrum, SolverError> {
        Ok(Spectrum {
            vector: normalize(&self.vector, mode)?,
            ..self.clone()
        })
    }

    pub fn to_json(&self, basis: SymBasis) -> Value {
        let v = self.vector_in(basis);
        let vector: Vec<Value> = v
            .terms
            .iter()
            .collect::<Vec<_>>()
            .into_iter()
            .rev()
            .map(|(idx, c)| json!({"index": idx, "coef": c.to_json()}))
            .collect();
        let mut out = json!({
            "model": self.model.name(),
            "lambda": self.lambda,
            "energy": self.energy.to_json(),
            "energy_text": self.energy.to_string(),
            "vector_basis": basis.name(),
            "vector": vector,
        });
        if let Some(b) = &self.beta {
            out["beta"] = json!(b.to_string());
        }
        out
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Normalization {
    /// Leading Schur coefficient 1.
    MonicSchur,
    /// Coefficient of ã_{-1}^k equal to 1, that is a_{-1}^k with b^{-k}.
    #[serde(rename = "paper_onek")]
    OneK,
}

impl FromStr for Normalization {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "monic" | "monic_schur" => Ok(Normalization::MonicSchur),
            "paper" | "paper_onek" => Ok(Normalization::OneK),
            other => Err(format!("unknown normalization `{other}`")),
        }
    }
}

/// Rescales a Schur-coordinate vector.
pub fn normalize(v: &FockVector<Partition, ParamScalar>, mode: Normalization) -> Result<FockVector<Partition, ParamScalar>, SolverError> {
    let (lead, _) = v.iter().last().ok_or(SolverError::ZeroVector)?;
    let c = match mode {
        Normalization::MonicSchur => v.coeff(lead),
        Normalization::OneK => {
            let k = lead.weight();
            let ones = Partition::new(vec![1; k as usize]).expect("valid partition");
            let t = tables(k);
            let row = t.basis.iter().position(|x| *x == ones).expect("1^k present");
            t.basis.iter().enumerate().fold(ParamScalar::integer(0), |acc, (j, nu)| {
                acc.add(&v.coeff(nu).mul(&ParamScalar::from_rational(t.s_to_p.get(row, j))))
            })
        }
    };
    let inv = c.inv().ok_or(SolverError::VanishingNormalizer)?;
    Ok(v.scale(&inv))
}

/// The Jack polynomial P_λ at β = b² (CS) or b²/2 (Laughlin) under the
/// ã-coherent map ã_{-n} ↦ p_n. In a-modes this is a_{-n} ↦ s·p_n with
/// s = b or b/2, and the similarity factor s^{-ℓ(μ)} cancels it exactly.
pub fn to_polynomial(spec: &Spectrum) -> SymmetricPolynomial<ParamScalar> {
    let p = spec.powersum_vector();
    let p = match &spec.beta {
        None => p,
        Some(beta) => {
            let at = [Assignment::Square(Symbol::B, beta.clone())];
            p.map_coeffs(|c| c.specialize(&at).map(|x| ParamScalar::from_rational(&x)).unwrap_or_else(|_| c.clone()))
        }
    };
    SymmetricPolynomial::new(spec.lambda.weight(), SymBasis::Powersum, p).expect("homogeneous")
}

/// Distinct-energy check among comparable pairs at level k. Returns the
/// incomparable pairs whose energies coincide formally.
pub fn formal_degeneracies(model: Model, k: u32) -> (bool, Vec<(Partition, Partition)>) {
    let basis = enumerate_level(k);
    let es: BTreeMap<&Partition, ParamScalar> = basis.iter().map(|l| (l, energy(model, l))).collect();
    let mut comparable_ok = true;
    let mut incomparable = Vec::new();
    for (i, a) in basis.iter().enumerate() {
        for b in &basis[i + 1..] {
            if es[a] == es[b] {
                if a.strictly_below(b) || b.strictly_below(a) {
                    comparable_ok = false;
                } else {
                    incomparable.push((a.clone(), b.clone()));
                }
            }
        }
    }
    (comparable_ok, incomparable)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coeffield::rat;

    fn p(v: &[u32]) -> Partition {
        Partition::new(v.to_vec()).unwrap()
    }
    fn b2() -> ParamScalar {
        ParamScalar::symbol(Symbol::B).pow(2)
    }
    fn i(x: i64) -> ParamScalar {
        ParamScalar::integer(x)
    }

    #[test]
    fn energies() {
        assert_eq!(energy(Model::Cs, &p(&[2])), &i(4) - &(&i(2) * &b2()));
        assert_eq!(energy(Model::Cs, &p(&[2, 2, 1, 1])), &i(10) - &(&i(20) * &b2()));
        assert_eq!(energy(Model::Laughlin, &p(&[1])), &i(1) - &(&b2() * &ParamScalar::rational(1, 2)));
        assert_eq!(energy(Model::Cs, &p(&[1, 1])).to_string(), "2-4*b^2");
    }

    #[test]
    fn level_two_states() {
        let s = eigenstate(Model::Cs, &p(&[1, 1])).unwrap();
        assert_eq!(s.vector, FockVector::basis(p(&[1, 1])));
        let s = eigenstate(Model::Cs, &p(&[2])).unwrap();
        let ps = s.powersum_vector();
        let ratio = ps.coeff(&p(&[1, 1])).div(&ps.coeff(&p(&[2]))).unwrap();
        assert_eq!(ratio, b2());
        assert_eq!(s.steps, 1);
    }

    #[test]
    fn resonance_at_minus_one() {
        let s = eigenstate(Model::Cs, &p(&[2])).unwrap();
        let err = s.specialize(&rat(-1, 1)).unwrap_err();
        assert_eq!(err, SolverError::Resonance { factor: "2+2β".into() });
        let ok = s.specialize(&rat(1, 3)).unwrap();
        assert_eq!(ok.energy, ParamScalar::rational(10, 3));
    }

    #[test]
    fn one_k_normalization() {
        let s = eigenstate(Model::Cs, &p(&[2])).unwrap().normalized(Normalization::OneK).unwrap();
        let ps = s.powersum_vector();
        assert_eq!(ps.coeff(&p(&[1, 1])), i(1));
        assert_eq!(ps.coeff(&p(&[2])), b2().pow(-1));
        assert!(normalize(&FockVector::zero(), Normalization::MonicSchur).is_err());
    }

    #[test]
    fn comparable_energies_distinct() {
        for k in 1..=8 {
            let (ok, inc) = formal_degeneracies(Model::Cs, k);
            assert!(ok);
            assert_eq!(inc.len(), [0, 0, 0, 0, 0, 0, 2, 0, 1][k as usize]);
        }
    }
}
