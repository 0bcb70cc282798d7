//! Brute-force convex roof over pure-state ensembles of a two-qubit density matrix.
//!
//! Every ensemble `{p_i, |ψ_i>}` of `ρ = sum_j μ_j |e_j><e_j|` with `m` members
//! has the form `sqrt(p_i) |ψ_i> = sum_j V_ij sqrt(μ_j) |e_j>` for an `m x r`
//! isometry `V`. The search keeps the subnormalized members `w_i` directly and
//! moves between ensembles with Givens rotations on pairs of members, which
//! preserves the isometry. The per-member score `p_i C(|ψ_i>)` is evaluated
//! from the reduced state of `w_i`, independently of the spin-flip closed forms.

use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha20Rng;
use rand_distr::StandardNormal;

use super::{concurrence_pure, eigen_ensemble};
use crate::density::DensityMatrix;
use crate::error::{Error, Result};
use crate::state::{derive_seed, Partition, PureState};
use crate::tolerance;

const MAX_ENSEMBLE: usize = 8;
const MAX_SWEEPS: usize = 20_000;
const INITIAL_STEP: f64 = 0.4;
/// Random-direction trials per stalled sweep, used to get off kinks of `|·|`.
const RANDOM_TRIALS: usize = 16;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RoofMode {
    Minimize,
    Maximize,
}

#[derive(Debug, Clone, PartialEq)]
pub struct OracleBudget {
    pub restarts: usize,
    /// Members per ensemble; `None` means `max(rank, 4)`.
    pub ensemble_size: Option<usize>,
    /// Rotation step below which a restart stops.
    pub tolerance: f64,
    pub seed: u64,
}

impl Default for OracleBudget {
    fn default() -> Self {
        Self {
            restarts: 32,
            ensemble_size: None,
            tolerance: 1e-6,
            seed: 0,
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct EnsembleMember {
    pub probability: f64,
    pub state: PureState,
}

/// Pure-state ensemble realizing a two-qubit density matrix.
#[derive(Debug, Clone, PartialEq)]
pub struct EnsembleDecomposition {
    qubit_labels: Vec<usize>,
    members: Vec<EnsembleMember>,
}

impl EnsembleDecomposition {
    pub fn members(&self) -> &[EnsembleMember] {
        &self.members
    }

    pub fn qubit_labels(&self) -> &[usize] {
        &self.qubit_labels
    }

    pub fn probability_sum(&self) -> f64 {
        self.members.iter().map(|m| m.probability).sum()
    }

    /// `sum_i p_i C(|ψ_i>)` with the pure-state concurrence.
    pub fn average_concurrence(&self) -> Result<f64> {
        let cut = Partition::new(&[0], &[1])?;
        self.members.iter().try_fold(
            0.0,
            |acc, m| Ok(acc + m.probability * concurrence_pure(&m.state, &cut)?),
        )
    }

    /// Max elementwise deviation of `sum_i p_i |ψ_i><ψ_i|` from `target`.
    pub fn reconstruction_error(&self, target: &DensityMatrix) -> f64 {
        let dim = target.dim();
        let mut worst = 0.0f64;
        for r in 0..dim {
            for c in 0..dim {
                let entry: Complex64 = self
                    .members
                    .iter()
                    .map(|m| m.state.amplitudes()[r] * m.state.amplitudes()[c].conj() * m.probability)
                    .sum();
                worst = worst.max((entry - target.matrix()[(r, c)]).norm());
            }
        }
        worst
    }
}

/// Best `sum_i p_i C(|ψ_i>)` found over ensembles of `dm`, minimized or maximized.
pub fn convex_roof_oracle(
    dm: &DensityMatrix,
    mode: RoofMode,
    budget: &OracleBudget,
) -> Result<(f64, EnsembleDecomposition)> {
    super::check_two_qubit(dm)?;
    let columns = eigen_ensemble(dm)?;
    let rank = columns.len();
    let size = budget.ensemble_size.unwrap_or(rank.max(4));
    if rank == 0 || size < rank || size > MAX_ENSEMBLE {
        return Err(Error::EnsembleSize { size, rank });
    }

    let best_members = if rank == 1 {
        vec![to_array(&columns[0])]
    } else {
        let sign = match mode {
            RoofMode::Minimize => -1.0,
            RoofMode::Maximize => 1.0,
        };
        let mut best: Option<(f64, Vec<[Complex64; 4]>)> = None;
        for restart in 0..budget.restarts.max(1) {
            let mut rng = ChaCha20Rng::seed_from_u64(derive_seed(budget.seed, restart as u64));
            let mut search = Search::new(&columns, size, sign, restart == 0, &mut rng);
            search.run(budget.tolerance, &mut rng);
            let score = search.score();
            if best.as_ref().is_none_or(|(s, _)| score > *s) {
                best = Some((score, search.members));
            }
        }
        best.expect("at least one restart").1
    };

    let decomposition = into_decomposition(dm.qubit_labels().to_vec(), &best_members)?;
    let sum = decomposition.probability_sum();
    let error = decomposition.reconstruction_error(dm);
    if (sum - 1.0).abs() > tolerance::ENSEMBLE_PROBABILITY || error > tolerance::ENSEMBLE_RECONSTRUCTION {
        return Err(Error::Reconstruction(error.max((sum - 1.0).abs())));
    }
    Ok((decomposition.average_concurrence()?, decomposition))
}

/// Coordinate search over Givens rotations of the member list.
struct Search {
    members: Vec<[Complex64; 4]>,
    scores: Vec<f64>,
    sign: f64,
}

impl Search {
    fn new<R: Rng>(columns: &[Vec<Complex64>], size: usize, sign: f64, identity: bool, rng: &mut R) -> Self {
        let isometry = if identity {
            (0..size)
                .map(|i| {
                    (0..columns.len())
                        .map(|j| Complex64::new(f64::from(u8::from(i == j)), 0.0))
                        .collect()
                })
                .collect()
        } else {
            random_isometry(size, columns.len(), rng)
        };
        let members: Vec<[Complex64; 4]> = isometry
            .iter()
            .map(|row: &Vec<Complex64>| {
                let mut w = [Complex64::new(0.0, 0.0); 4];
                for (coefficient, column) in row.iter().zip(columns) {
                    for (slot, e) in w.iter_mut().zip(column) {
                        *slot += coefficient * e;
                    }
                }
                w
            })
            .collect();
        let scores = members.iter().map(weighted_concurrence).collect();
        Self { members, scores, sign }
    }

    fn score(&self) -> f64 {
        self.sign * self.scores.iter().sum::<f64>()
    }

    /// Applies the rotation to members `p`, `q` if it improves the score.
    fn try_rotation(&mut self, p: usize, q: usize, angle: f64, phase: f64) -> bool {
        let (cos, sin) = (angle.cos(), angle.sin());
        let e = Complex64::from_polar(1.0, phase);
        let (wp, wq) = (self.members[p], self.members[q]);
        let mut np = [Complex64::new(0.0, 0.0); 4];
        let mut nq = np;
        for k in 0..4 {
            np[k] = wp[k] * cos - e * sin * wq[k];
            nq[k] = e.conj() * sin * wp[k] + wq[k] * cos;
        }
        let (sp, sq) = (weighted_concurrence(&np), weighted_concurrence(&nq));
        let gain = self.sign * (sp + sq - self.scores[p] - self.scores[q]);
        if gain > 1e-15 {
            self.members[p] = np;
            self.members[q] = nq;
            self.scores[p] = sp;
            self.scores[q] = sq;
            true
        } else {
            false
        }
    }

    fn run<R: Rng>(&mut self, tolerance: f64, rng: &mut R) {
        let m = self.members.len();
        let mut step = INITIAL_STEP;
        for _ in 0..MAX_SWEEPS {
            let mut improved = false;
            for p in 0..m {
                for q in p + 1..m {
                    for (angle, phase) in [
                        (step, 0.0),
                        (-step, 0.0),
                        (step, std::f64::consts::FRAC_PI_2),
                        (-step, std::f64::consts::FRAC_PI_2),
                    ] {
                        if self.try_rotation(p, q, angle, phase) {
                            improved = true;
                            break;
                        }
                    }
                }
            }
            if !improved {
                for _ in 0..RANDOM_TRIALS {
                    let p = rng.random_range(0..m);
                    let q = (p + rng.random_range(1..m)) % m;
                    let phase = rng.random_range(0.0..std::f64::consts::TAU);
                    let angle = if rng.random::<bool>() { step } else { -step };
                    improved |= self.try_rotation(p, q, angle, phase);
                }
            }
            if !improved {
                step *= 0.5;
                if step < tolerance {
                    break;
                }
            }
        }
    }
}

/// `p C(|ψ>)` for the subnormalized member `w = sqrt(p) |ψ>`, from
/// `C = sqrt(2 (1 - Tr ρ_A²))` scaled through `ρ̂_A = p ρ_A`.
fn weighted_concurrence(w: &[Complex64; 4]) -> f64 {
    let a = w[0].norm_sqr() + w[1].norm_sqr();
    let d = w[2].norm_sqr() + w[3].norm_sqr();
    let b = w[0] * w[2].conj() + w[1] * w[3].conj();
    let p = a + d;
    let purity = a * a + d * d + 2.0 * b.norm_sqr();
    (2.0 * (p * p - purity)).max(0.0).sqrt()
}

/// Haar-random `rows x cols` isometry (orthonormal columns), via Gram-Schmidt
/// on complex Gaussian columns. Returned row-major.
fn random_isometry<R: Rng>(rows: usize, cols: usize, rng: &mut R) -> Vec<Vec<Complex64>> {
    let mut basis: Vec<Vec<Complex64>> = Vec::with_capacity(cols);
    while basis.len() < cols {
        let mut v: Vec<Complex64> = (0..rows)
            .map(|_| Complex64::new(rng.sample(StandardNormal), rng.sample(StandardNormal)))
            .collect();
        for u in &basis {
            let overlap: Complex64 = u.iter().zip(&v).map(|(a, b)| a.conj() * b).sum();
            v.iter_mut().zip(u).for_each(|(x, a)| *x -= overlap * a);
        }
        let norm = v.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt();
        if norm > 1e-8 {
            v.iter_mut().for_each(|x| *x /= norm);
            basis.push(v);
        }
    }
    (0..rows).map(|i| basis.iter().map(|col| col[i]).collect()).collect()
}

fn to_array(v: &[Complex64]) -> [Complex64; 4] {
    [v[0], v[1], v[2], v[3]]
}

fn into_decomposition(qubit_labels: Vec<usize>, members: &[[Complex64; 4]]) -> Result<EnsembleDecomposition> {
    let mut out = Vec::with_capacity(members.len());
    for w in members {
        let probability: f64 = w.iter().map(|z| z.norm_sqr()).sum();
        if probability <= 1e-15 {
            continue;
        }
        let state = PureState::normalized(2, w.to_vec())?;
        out.push(EnsembleMember { probability, state });
    }
    Ok(EnsembleDecomposition {
        qubit_labels,
        members: out,
    })
}
