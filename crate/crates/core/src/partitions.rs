//! Integer partitions: transpose, Frobenius coordinates, dominance order,
//! the statistic n(λ) and a handful of exact identities relating them.
//!
//! Partitions are stored as weakly decreasing part sequences. The empty
//! partition is valid everywhere and has every statistic equal to zero.

use std::fmt;

use num_rational::Rational64;
use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum PartitionError {
    #[error("parts must be positive and weakly decreasing, got {0:?}")]
    Invalid(Vec<u32>),
    #[error("weight mismatch: |mu| = {left}, |lambda| = {right}")]
    WeightMismatch { left: u32, right: u32 },
    #[error("arms and legs must be strictly decreasing and of equal length")]
    InvalidFrobenius,
}

/// A partition λ = (λ₁ ≥ λ₂ ≥ … ≥ λ_ℓ ≥ 1).
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<u32>", into = "Vec<u32>")]
pub struct Partition(Vec<u32>);

impl TryFrom<Vec<u32>> for Partition {
    type Error = PartitionError;

    fn try_from(parts: Vec<u32>) -> Result<Self, Self::Error> {
        Partition::new(parts)
    }
}

impl From<Partition> for Vec<u32> {
    fn from(p: Partition) -> Self {
        p.0
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, p) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, ")")
    }
}

/// Result of comparing two partitions of equal weight in dominance order.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum DominanceOrdering {
    Less,
    Equal,
    Greater,
    Incomparable,
}

/// Frobenius coordinates (α | β): arms αᵢ = λᵢ − i and legs βᵢ = λᵗᵢ − i
/// along the main diagonal, both strictly decreasing.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FrobeniusCoords {
    pub arms: Vec<u32>,
    pub legs: Vec<u32>,
}

impl FrobeniusCoords {
    pub fn diagonal(&self) -> usize {
        self.arms.len()
    }

    /// Rebuilds the partition. Rows below the diagonal are read off the legs.
    pub fn to_partition(&self) -> Result<Partition, PartitionError> {
        let d = self.arms.len();
        if self.legs.len() != d
            || self.arms.windows(2).any(|w| w[0] <= w[1])
            || self.legs.windows(2).any(|w| w[0] <= w[1])
        {
            return Err(PartitionError::InvalidFrobenius);
        }
        if d == 0 {
            return Ok(Partition::empty());
        }
        let mut rows: Vec<u32> = (0..d).map(|i| self.arms[i] + i as u32 + 1).collect();
        let cols: Vec<u32> = (0..d).map(|i| self.legs[i] + i as u32 + 1).collect();
        for i in d as u32..cols[0] {
            rows.push(cols.iter().filter(|&&c| c > i).count() as u32);
        }
        Partition::new(rows)
    }
}

/// Exact statistics of a partition.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PartitionStats {
    pub n_lambda: u64,
    pub n_transpose: u64,
    pub d: usize,
    pub weight: u32,
}

impl Partition {
    pub fn new(mut parts: Vec<u32>) -> Result<Self, PartitionError> {
        while parts.last() == Some(&0) {
            parts.pop();
        }
        if parts.contains(&0) || parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(PartitionError::Invalid(parts));
        }
        Ok(Partition(parts))
    }

    pub fn empty() -> Self {
        Partition(Vec::new())
    }

    /// Sorts arbitrary positive parts into a partition.
    pub fn from_unsorted(mut parts: Vec<u32>) -> Self {
        parts.retain(|&p| p > 0);
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition(parts)
    }

    pub fn parts(&self) -> &[u32] {
        &self.0
    }

    pub fn weight(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Part λᵢ with 1-based index, zero past the end.
    pub fn part(&self, i: usize) -> u32 {
        if i == 0 {
            return 0;
        }
        self.0.get(i - 1).copied().unwrap_or(0)
    }

    pub fn transpose(&self) -> Partition {
        let first = self.0.first().copied().unwrap_or(0);
        Partition(
            (0..first)
                .map(|j| self.0.iter().filter(|&&x| x > j).count() as u32)
                .collect(),
        )
    }

    /// Diagonal length d(λ) = #{i : λᵢ ≥ i}.
    pub fn diagonal(&self) -> usize {
        self.0
            .iter()
            .enumerate()
            .take_while(|(i, &x)| x as usize > *i)
            .count()
    }

    pub fn frobenius(&self) -> FrobeniusCoords {
        let t = self.transpose();
        let d = self.diagonal();
        FrobeniusCoords {
            arms: (0..d).map(|i| self.0[i] - i as u32 - 1).collect(),
            legs: (0..d).map(|i| t.0[i] - i as u32 - 1).collect(),
        }
    }

    /// Multiplicity of the part `n`.
    pub fn multiplicity(&self, n: u32) -> usize {
        self.0.iter().filter(|&&x| x == n).count()
    }

    /// Compares μ = `self` against λ = `other` by partial sums.
    pub fn dominance(&self, other: &Partition) -> Result<DominanceOrdering, PartitionError> {
        let (wl, wr) = (self.weight(), other.weight());
        if wl != wr {
            return Err(PartitionError::WeightMismatch {
                left: wl,
                right: wr,
            });
        }
        let n = self.len().max(other.len());
        let (mut a, mut b) = (0u32, 0u32);
        let (mut le, mut ge) = (true, true);
        for i in 1..=n {
            a += self.part(i);
            b += other.part(i);
            le &= a <= b;
            ge &= a >= b;
        }
        Ok(match (le, ge) {
            (true, true) => DominanceOrdering::Equal,
            (true, false) => DominanceOrdering::Less,
            (false, true) => DominanceOrdering::Greater,
            (false, false) => DominanceOrdering::Incomparable,
        })
    }

    /// True when `self` is strictly dominated by `other` (same weight).
    pub fn strictly_below(&self, other: &Partition) -> bool {
        matches!(self.dominance(other), Ok(DominanceOrdering::Less))
    }

    /// n(λ) = Σ (i − 1) λᵢ.
    pub fn n_stat(&self) -> u64 {
        self.0
            .iter()
            .enumerate()
            .map(|(i, &x)| i as u64 * x as u64)
            .sum()
    }

    pub fn stats(&self) -> PartitionStats {
        PartitionStats {
            n_lambda: self.n_stat(),
            n_transpose: self.transpose().n_stat(),
            d: self.diagonal(),
            weight: self.weight(),
        }
    }

    /// Σ λᵢ².
    pub fn row_square_sum(&self) -> i64 {
        self.0.iter().map(|&x| (x as i64) * (x as i64)).sum()
    }

    /// Σ (λᵗᵢ)², the eigenvalue of the diagonal fermionic operator.
    pub fn hd_energy(&self) -> i64 {
        self.transpose().row_square_sum()
    }

    /// Σᵢ (nᵢ² − mᵢ²) over the diagonal, with nᵢ = αᵢ + ½ and mᵢ = βᵢ + ½.
    pub fn free_fermion_energy(&self) -> i64 {
        let f = self.frobenius();
        f.arms
            .iter()
            .zip(&f.legs)
            .map(|(&a, &b)| {
                // (a + ½)² − (b + ½)² = a² + a − b² − b
                let (a, b) = (a as i64, b as i64);
                a * a + a - b * b - b
            })
            .sum()
    }
}

/// All partitions of `k` in descending lexicographic order.
pub fn enumerate_level(k: u32) -> Vec<Partition> {
    fn rec(rest: u32, max: u32, cur: &mut Vec<u32>, out: &mut Vec<Partition>) {
        if rest == 0 {
            out.push(Partition(cur.clone()));
            return;
        }
        for p in (1..=rest.min(max)).rev() {
            cur.push(p);
            rec(rest - p, p, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(k, k, &mut Vec::new(), &mut out);
    out
}

/// Number of elements in the longest chain of the dominance lattice on
/// partitions of `k`.
pub fn longest_chain(k: u32) -> usize {
    let parts = enumerate_level(k);
    // Descending lex order is a linear extension of reverse dominance, so
    // every strictly smaller element appears later in the list.
    let mut best = vec![1usize; parts.len()];
    for j in 0..parts.len() {
        for i in 0..j {
            if parts[j].strictly_below(&parts[i]) {
                best[j] = best[j].max(best[i] + 1);
            }
        }
    }
    best.into_iter().max().unwrap_or(1)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum IdentityKind {
    Kappa,
    Hook,
    ColumnSquare,
    Theorem4,
}

impl IdentityKind {
    pub const ALL: [IdentityKind; 4] = [
        IdentityKind::Kappa,
        IdentityKind::Hook,
        IdentityKind::ColumnSquare,
        IdentityKind::Theorem4,
    ];

    pub fn name(self) -> &'static str {
        match self {
            IdentityKind::Kappa => "kappa",
            IdentityKind::Hook => "hook",
            IdentityKind::ColumnSquare => "column_square",
            IdentityKind::Theorem4 => "theorem4",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IdentityReport {
    pub kind: IdentityKind,
    pub lhs: Rational64,
    pub rhs: Rational64,
}

impl IdentityReport {
    pub fn holds(&self) -> bool {
        self.lhs == self.rhs
    }
}

/// Evaluates both sides of one of the Frobenius-coordinate identities.
///
/// * `Kappa`: 2[n(λᵗ) − n(λ)] = Σ αᵢ(αᵢ+1) − βᵢ(βᵢ+1).
/// * `Hook`: 2[n(λᵗ) + n(λ)] = Σ (αᵢ² + βᵢ² + 4iαᵢ + 4iβᵢ − 3αᵢ − 3βᵢ) + 2d(d−1).
/// * `ColumnSquare`: Σ(λᵗᵢ)² = Σ (βᵢ² + 2iαᵢ − αᵢ + 2iβᵢ) + d².
/// * `Theorem4`: Σ(λᵗᵢ)² as the sum of the bilinear and quartic
///   contributions of the diagonal fermionic operator, written in nᵢ, mᵢ.
///
/// Indices i are 1-based.
pub fn verify_identity(kind: IdentityKind, lambda: &Partition) -> IdentityReport {
    let f = lambda.frobenius();
    let d = f.diagonal() as i64;
    let a: Vec<i64> = f.arms.iter().map(|&x| x as i64).collect();
    let b: Vec<i64> = f.legs.iter().map(|&x| x as i64).collect();
    let st = lambda.stats();
    let (nl, nt) = (st.n_lambda as i64, st.n_transpose as i64);
    let r = |x: i64| Rational64::from_integer(x);
    let (lhs, rhs) = match kind {
        IdentityKind::Kappa => {
            let rhs: i64 = (0..a.len()).map(|i| a[i] * (a[i] + 1) - b[i] * (b[i] + 1)).sum();
            (r(2 * (nt - nl)), r(rhs))
        }
        IdentityKind::Hook => {
            let s: i64 = (0..a.len())
                .map(|i0| {
                    let i = i0 as i64 + 1;
                    let (x, y) = (a[i0], b[i0]);
                    x * x + y * y + 4 * i * x + 4 * i * y - 3 * x - 3 * y
                })
                .sum();
            (r(2 * (nt + nl)), r(s + 2 * d * (d - 1)))
        }
        IdentityKind::ColumnSquare => {
            let s: i64 = (0..a.len())
                .map(|i0| {
                    let i = i0 as i64 + 1;
                    let (x, y) = (a[i0], b[i0]);
                    y * y + 2 * i * x - x + 2 * i * y
                })
                .sum();
            (r(lambda.hd_energy()), r(s + d * d))
        }
        IdentityKind::Theorem4 => {
            let half = Rational64::new(1, 2);
            let n: Vec<Rational64> = a.iter().map(|&x| r(x) + half).collect();
            let m: Vec<Rational64> = b.iter().map(|&y| r(y) + half).collect();
            let third = Rational64::new(1, 3);
            let mut bilinear = r(0);
            for i in 0..n.len() {
                bilinear += third * (n[i] - half) + (m[i] - half) * (m[i] + Rational64::new(1, 6));
            }
            let mut quartic = r(0);
            for i in 0..n.len() {
                for j in 0..n.len() {
                    quartic += r(2) * m[i] + n[j];
                    if i > j {
                        quartic += r(2) * n[i] - n[j];
                    }
                    if i < j {
                        quartic += m[j] - r(2) * m[i];
                    }
                }
            }
            (r(lambda.hd_energy()), bilinear + Rational64::new(2, 3) * quartic)
        }
    };
    IdentityReport { kind, lhs, rhs }
}

/// The Frobenius-coordinate form of the Theorem-4 right-hand side with the
/// prefactor d(λ) applied to the whole bracket:
///
/// Σ[αᵢ/3 + βᵢ² + 2βᵢ/3] + (2/3)·d·[Σ(αᵢ + 2βᵢ + 3/2) + Σ2αᵢ(i−1) − Σ(d−i)αᵢ
/// + Σβᵢ(i−1) − 2Σβᵢ(d−i)].
///
/// With d on the first sum only, this equals Σ(λᵗᵢ)². With d on the whole
/// bracket it does not, e.g. 46/3 instead of 20 at λ = (2,2,1,1).
pub fn theorem4_bracket_variant(lambda: &Partition, d_on_whole_bracket: bool) -> Rational64 {
    let f = lambda.frobenius();
    let d = f.diagonal() as i64;
    let r = |x: i64| Rational64::from_integer(x);
    let mut first = r(0);
    let mut diag_sum = r(0);
    let mut rest = r(0);
    for i0 in 0..f.diagonal() {
        let i = i0 as i64 + 1;
        let (a, b) = (f.arms[i0] as i64, f.legs[i0] as i64);
        first += Rational64::new(a, 3) + r(b * b) + Rational64::new(2 * b, 3);
        diag_sum += r(a + 2 * b) + Rational64::new(3, 2);
        rest += r(2 * a * (i - 1) - (d - i) * a + b * (i - 1) - 2 * b * (d - i));
    }
    let bracket = if d_on_whole_bracket {
        r(d) * (diag_sum + rest)
    } else {
        r(d) * diag_sum + rest
    };
    first + Rational64::new(2, 3) * bracket
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(v: &[u32]) -> Partition {
        Partition::new(v.to_vec()).unwrap()
    }

    #[test]
    fn enumerate_small_levels() {
        assert_eq!(enumerate_level(0), vec![Partition::empty()]);
        assert_eq!(enumerate_level(1), vec![p(&[1])]);
        let l4 = enumerate_level(4);
        assert_eq!(
            l4,
            vec![p(&[4]), p(&[3, 1]), p(&[2, 2]), p(&[2, 1, 1]), p(&[1, 1, 1, 1])]
        );
        let counts: Vec<usize> = (0..=12).map(|k| enumerate_level(k).len()).collect();
        assert_eq!(counts, vec![1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42, 56, 77]);
    }

    #[test]
    fn transpose_examples() {
        assert_eq!(p(&[2, 2, 1, 1]).transpose(), p(&[4, 2]));
        assert_eq!(Partition::empty().transpose(), Partition::empty());
        assert_eq!(p(&[3, 1]).transpose(), p(&[2, 1, 1]));
    }

    #[test]
    fn frobenius_examples() {
        let f = p(&[2, 2, 1, 1]).frobenius();
        assert_eq!((f.arms.clone(), f.legs.clone()), (vec![1, 0], vec![3, 0]));
        assert_eq!(f.to_partition().unwrap(), p(&[2, 2, 1, 1]));
        let f = p(&[1]).frobenius();
        assert_eq!((f.arms, f.legs), (vec![0], vec![0]));
        let f = p(&[3, 2]).frobenius();
        assert_eq!((f.arms, f.legs), (vec![2, 0], vec![1, 0]));
    }

    #[test]
    fn dominance_examples() {
        use DominanceOrdering::*;
        assert_eq!(p(&[2, 1, 1]).dominance(&p(&[2, 2])).unwrap(), Less);
        assert_eq!(p(&[2, 2]).dominance(&p(&[3, 1])).unwrap(), Less);
        assert_eq!(p(&[3, 3]).dominance(&p(&[4, 1, 1])).unwrap(), Incomparable);
        assert!(matches!(
            p(&[2, 1]).dominance(&p(&[2, 2])),
            Err(PartitionError::WeightMismatch { .. })
        ));
    }

    #[test]
    fn stats_examples() {
        let s = p(&[2, 2, 1, 1]).stats();
        assert_eq!((s.n_lambda, s.n_transpose, s.d, s.weight), (7, 2, 2, 6));
        let s = Partition::empty().stats();
        assert_eq!((s.n_lambda, s.n_transpose, s.d, s.weight), (0, 0, 0, 0));
        for k in 1..8u64 {
            let s = p(&[k as u32]).stats();
            assert_eq!((s.n_lambda, s.n_transpose), (0, k * (k - 1) / 2));
        }
    }

    #[test]
    fn identity_examples() {
        let l = p(&[2, 2, 1, 1]);
        let k = verify_identity(IdentityKind::Kappa, &l);
        assert_eq!((k.lhs, k.rhs), (Rational64::from(-10), Rational64::from(-10)));
        let h = verify_identity(IdentityKind::Hook, &l);
        assert_eq!((h.lhs, h.rhs), (Rational64::from(18), Rational64::from(18)));
        let c = verify_identity(IdentityKind::ColumnSquare, &l);
        assert_eq!((c.lhs, c.rhs), (Rational64::from(20), Rational64::from(20)));
        assert!(verify_identity(IdentityKind::Theorem4, &l).holds());
        assert_eq!(theorem4_bracket_variant(&l, true), Rational64::new(46, 3));
        assert_eq!(theorem4_bracket_variant(&l, false), Rational64::from(20));
    }

    #[test]
    fn energies() {
        assert_eq!(p(&[1]).free_fermion_energy(), 0);
        assert_eq!(p(&[2]).free_fermion_energy(), 2);
        assert_eq!(p(&[2, 2, 1, 1]).free_fermion_energy(), -10);
        assert_eq!(p(&[2, 2, 1, 1]).hd_energy(), 20);
        assert_eq!(p(&[1]).hd_energy(), 1);
        assert_eq!(p(&[5]).hd_energy(), 5);
    }

    #[test]
    fn longest_chains() {
        assert_eq!(longest_chain(1), 1);
        assert_eq!(longest_chain(2), 2);
        assert_eq!(longest_chain(4), 5);
        assert_eq!(longest_chain(6), 9);
    }

    #[test]
    fn json_round_trip() {
        let l = p(&[2, 2, 1, 1]);
        let s = serde_json::to_string(&l).unwrap();
        assert_eq!(s, "[2,2,1,1]");
        assert_eq!(serde_json::from_str::<Partition>(&s).unwrap(), l);
        assert!(serde_json::from_str::<Partition>("[1,2]").is_err());
        assert_eq!(serde_json::to_string(&Partition::empty()).unwrap(), "[]");
    }
}
