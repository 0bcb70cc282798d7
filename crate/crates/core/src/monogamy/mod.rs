//! Monogamy bounds on bipartite concurrences of an N-qubit pure state.
//!
//! Qubits play fixed roles: qubit 0 is `A`, qubit 1 is `B` and qubit `i + 1`
//! is `C_i`. Reorder a state with [`PureState::permute_qubits`] to assign
//! roles differently. All quantities below are squared concurrences.
//!
//! | bound | statement |
//! |---|---|
//! | [`Analysis::theorem1_lower`] | `C²(AB|C..) >= max{Σ[C²(AC_i) - C_a²(BC_i)], Σ[C²(BC_i) - C_a²(AC_i)]}` |
//! | [`Analysis::theorem2_upper`] | `C²(AB|C..) <= 2C_a²(AB) + Σ[C_a²(AC_i) + C_a²(BC_i)]` |
//! | [`Analysis::inequality_chain`] | `|C²(A|..) - C²(B|..)| <= C²(AB|..) <= C²(A|..) + C²(B|..)` |
//! | [`Analysis::corollary1_lower`] | `C²(ABC_1|..) >= theorem-1 bound - Σ_{j≠C_1} C_a²(C_1 j)` |
//! | [`Analysis::corollary2_lower`] | `C²(ABC_1|..) >= Σ_{j≠C_1} C²(C_1 j) - theorem-2 bound` |
//! | [`Analysis::corollary2_upper`] | `C²(ABC_1|..) <= theorem-2 bound + Σ_{j≠C_1} C_a²(C_1 j)` |

pub mod report;
pub mod wclass;

use serde::Serialize;

use crate::entanglement::{bipartite_concurrence_squared, concurrence_of_assistance, spin_flip_spectrum};
use crate::error::{Error, Result};
use crate::state::PureState;

pub const ROLE_A: usize = 0;
pub const ROLE_B: usize = 1;
pub const ROLE_C1: usize = 2;

/// Role name of a qubit: `A`, `B`, `C1`, `C2`, ...
pub fn role_name(qubit: usize) -> String {
    match qubit {
        ROLE_A => "A".to_string(),
        ROLE_B => "B".to_string(),
        k => format!("C{}", k - 1),
    }
}

/// A lower bound as computed, possibly negative.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct LowerBound {
    pub raw: f64,
}

impl LowerBound {
    /// `max(0, raw)`: a squared concurrence is never negative.
    pub fn clamped(&self) -> f64 {
        self.raw.max(0.0)
    }
}

/// `lower <= mid <= upper`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct InequalityChain {
    pub lower: f64,
    pub mid: f64,
    pub upper: f64,
}

impl InequalityChain {
    pub fn holds(&self, tolerance: f64) -> bool {
        self.mid - self.lower >= -tolerance && self.upper - self.mid >= -tolerance
    }
}

/// Planar vectors with `c_vec = a_vec + b_vec` and lengths `a`, `b`, `c`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct TriangleVectors {
    pub a_vec: [f64; 2],
    pub b_vec: [f64; 2],
    pub c_vec: [f64; 2],
}

/// Below this `c` the construction falls back to antiparallel `a_vec`, `b_vec`.
const DEGENERATE_SIDE: f64 = 1e-12;

impl TriangleVectors {
    /// Places `c_vec` on the first axis and `a_vec` above it.
    pub fn from_lengths(a: f64, b: f64, c: f64) -> Self {
        if c <= DEGENERATE_SIDE {
            return Self {
                a_vec: [a, 0.0],
                b_vec: [-a, 0.0],
                c_vec: [0.0, 0.0],
            };
        }
        let ax = (c * c + a * a - b * b) / (2.0 * c);
        let ay = kahan_area16(a, b, c).max(0.0).sqrt() / (2.0 * c);
        Self {
            a_vec: [ax, ay],
            b_vec: [c - ax, -ay],
            c_vec: [c, 0.0],
        }
    }

    pub fn lengths(&self) -> [f64; 3] {
        let len = |v: [f64; 2]| v[0].hypot(v[1]);
        [len(self.a_vec), len(self.b_vec), len(self.c_vec)]
    }
}

/// `a² - a_x²`, the squared height of `a_vec`; negative when no triangle with
/// sides `a`, `b`, `c` exists.
pub fn triangle_discriminant(a: f64, b: f64, c: f64) -> f64 {
    if c <= DEGENERATE_SIDE {
        return -(a - b).powi(2);
    }
    kahan_area16(a, b, c) / (4.0 * c * c)
}

/// `16 · area²` of the triangle with the given sides, in Kahan's cancellation-free
/// ordering; negative when the sides violate the triangle inequality.
fn kahan_area16(a: f64, b: f64, c: f64) -> f64 {
    let mut s = [a, b, c];
    s.sort_unstable_by(|p, q| q.total_cmp(p));
    let [x, y, z] = s;
    (x + (y + z)) * (z - (x - y)) * (z + (x - y)) * (x + (y - z))
}

/// Pairwise `C` and `C_a` for every two-qubit marginal, plus the bipartite
/// concurrences the bounds use. Build once, query every bound.
#[derive(Debug, Clone)]
pub struct Analysis {
    n_qubits: usize,
    concurrence: Vec<f64>,
    assistance: Vec<f64>,
    a_rest: f64,
    b_rest: f64,
    ab_rest: f64,
    abc1_rest: Option<f64>,
}

impl Analysis {
    /// Requires at least three qubits (roles `A`, `B`, `C_1`).
    pub fn new(state: &PureState) -> Result<Self> {
        let n = state.n_qubits();
        require_qubits(n, 3)?;
        let mut concurrence = vec![0.0; n * n];
        let mut assistance = vec![0.0; n * n];
        for p in 0..n {
            for q in p + 1..n {
                let rho = state.partial_trace(&[p, q])?;
                let l = spin_flip_spectrum(&rho)?;
                let c = (l[0] - l[1] - l[2] - l[3]).max(0.0);
                let ca: f64 = l.iter().sum();
                debug_assert!((ca - concurrence_of_assistance(&rho)?).abs() < 1e-15);
                for (i, j) in [(p, q), (q, p)] {
                    concurrence[i * n + j] = c;
                    assistance[i * n + j] = ca;
                }
            }
        }
        Ok(Self {
            n_qubits: n,
            concurrence,
            assistance,
            a_rest: bipartite_concurrence_squared(state, &[ROLE_A])?,
            b_rest: bipartite_concurrence_squared(state, &[ROLE_B])?,
            ab_rest: bipartite_concurrence_squared(state, &[ROLE_A, ROLE_B])?,
            abc1_rest: if n >= 4 {
                Some(bipartite_concurrence_squared(state, &[ROLE_A, ROLE_B, ROLE_C1])?)
            } else {
                None
            },
        })
    }

    pub fn n_qubits(&self) -> usize {
        self.n_qubits
    }

    /// `C(ρ_pq)`.
    pub fn concurrence(&self, p: usize, q: usize) -> f64 {
        self.concurrence[p * self.n_qubits + q]
    }

    /// `C_a(ρ_pq)`.
    pub fn assistance(&self, p: usize, q: usize) -> f64 {
        self.assistance[p * self.n_qubits + q]
    }

    pub fn c2(&self, p: usize, q: usize) -> f64 {
        self.concurrence(p, q).powi(2)
    }

    pub fn ca2(&self, p: usize, q: usize) -> f64 {
        self.assistance(p, q).powi(2)
    }

    /// `C²(A | rest)`.
    pub fn a_rest(&self) -> f64 {
        self.a_rest
    }

    /// `C²(B | rest)`.
    pub fn b_rest(&self) -> f64 {
        self.b_rest
    }

    /// `C²(AB | C_1 ... C_{N-2})`.
    pub fn ab_rest(&self) -> f64 {
        self.ab_rest
    }

    /// `C²(ABC_1 | C_2 ... C_{N-2})`, defined for four or more qubits.
    pub fn abc1_rest(&self) -> Result<f64> {
        self.abc1_rest.ok_or(Error::TooFewQubits {
            min: 4,
            found: self.n_qubits,
        })
    }

    fn c_roles(&self) -> std::ops::Range<usize> {
        ROLE_C1..self.n_qubits
    }

    fn c1_partners(&self) -> impl Iterator<Item = usize> + '_ {
        (0..self.n_qubits).filter(|&j| j != ROLE_C1)
    }

    pub fn theorem1_lower(&self) -> LowerBound {
        let from_a: f64 = self.c_roles().map(|c| self.c2(ROLE_A, c) - self.ca2(ROLE_B, c)).sum();
        let from_b: f64 = self.c_roles().map(|c| self.c2(ROLE_B, c) - self.ca2(ROLE_A, c)).sum();
        LowerBound {
            raw: from_a.max(from_b),
        }
    }

    pub fn theorem2_upper(&self) -> f64 {
        2.0 * self.ca2(ROLE_A, ROLE_B)
            + self
                .c_roles()
                .map(|c| self.ca2(ROLE_A, c) + self.ca2(ROLE_B, c))
                .sum::<f64>()
    }

    pub fn inequality_chain(&self) -> InequalityChain {
        InequalityChain {
            lower: (self.a_rest - self.b_rest).abs(),
            mid: self.ab_rest,
            upper: self.a_rest + self.b_rest,
        }
    }

    pub fn triangle_vectors(&self) -> TriangleVectors {
        TriangleVectors::from_lengths(self.a_rest, self.b_rest, self.ab_rest)
    }

    pub fn triangle_discriminant(&self) -> f64 {
        triangle_discriminant(self.a_rest, self.b_rest, self.ab_rest)
    }

    pub fn corollary1_lower(&self) -> Result<LowerBound> {
        require_qubits(self.n_qubits, 4)?;
        let assisted: f64 = self.c1_partners().map(|j| self.ca2(ROLE_C1, j)).sum();
        Ok(LowerBound {
            raw: self.theorem1_lower().raw - assisted,
        })
    }

    pub fn corollary2_lower(&self) -> Result<LowerBound> {
        require_qubits(self.n_qubits, 4)?;
        let shared: f64 = self.c1_partners().map(|j| self.c2(ROLE_C1, j)).sum();
        Ok(LowerBound {
            raw: shared - self.theorem2_upper(),
        })
    }

    pub fn corollary2_upper(&self) -> Result<f64> {
        require_qubits(self.n_qubits, 4)?;
        let assisted: f64 = self.c1_partners().map(|j| self.ca2(ROLE_C1, j)).sum();
        Ok(self.theorem2_upper() + assisted)
    }
}

fn require_qubits(found: usize, min: usize) -> Result<()> {
    if found >= min {
        Ok(())
    } else {
        Err(Error::TooFewQubits { min, found })
    }
}

pub fn theorem1_lower(state: &PureState) -> Result<LowerBound> {
    Ok(Analysis::new(state)?.theorem1_lower())
}

pub fn theorem2_upper(state: &PureState) -> Result<f64> {
    Ok(Analysis::new(state)?.theorem2_upper())
}

pub fn inequality_chain(state: &PureState) -> Result<InequalityChain> {
    Ok(Analysis::new(state)?.inequality_chain())
}

pub fn triangle_vectors(state: &PureState) -> Result<TriangleVectors> {
    Ok(Analysis::new(state)?.triangle_vectors())
}

pub fn corollary1_lower(state: &PureState) -> Result<LowerBound> {
    require_qubits(state.n_qubits(), 4)?;
    Analysis::new(state)?.corollary1_lower()
}

pub fn corollary2_lower(state: &PureState) -> Result<LowerBound> {
    require_qubits(state.n_qubits(), 4)?;
    Analysis::new(state)?.corollary2_lower()
}

pub fn corollary2_upper(state: &PureState) -> Result<f64> {
    require_qubits(state.n_qubits(), 4)?;
    Analysis::new(state)?.corollary2_upper()
}
