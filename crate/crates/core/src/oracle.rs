//! Brute-force minimization over one component of the consistent complex.
//!
//! The feasible set for focus `x` is the simplex of (admissible) mass
//! functions supported on the ultrafilter `{B ⊇ {x}}`. Any such function is a
//! convex combination `Σ_k w_k e_k` of categorical functions, and every
//! embedding is linear in the masses, so the objective is
//! `‖t - Φ w‖_p` with `t` the embedded source and `Φ` the embedded vertices.
//! Nothing here uses the closed forms except to report the gap.
//!
//! Search stages:
//! 1. full grid over the simplex (compositions of `1/step`);
//! 2. refinement rounds: pattern search on a local cube grid, step ×0.2 per round,
//!    continued until the step drops below the tolerance;
//! 3. seeded random restarts, each descended with the same schedule;
//! 4. for L2, pairwise coordinate descent with exact line search.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::belief_approx::{
    focused_transform, global_l1_belief, global_l2_belief, global_linf_belief, partial_linf_belief,
};
use crate::error::{Error, Result};
use crate::evidence::{FrameSubset, MassAssignment, MassFunction, PseudoMassFunction};
use crate::geometry::{embed, EmbeddingSpace, Norm, SpaceKind};
use crate::mass_approx::{
    global_l1_mass, global_l2_mass, global_linf_mass, partial_l1_mass, partial_l2_mass,
    partial_linf_mass,
};
use crate::sampling::dirichlet_on;
use crate::selection::argmin_set;

/// Largest frame the oracle accepts.
pub const MAX_ORACLE_FRAME: usize = 4;

/// Upper bound on the number of points of the initial grid.
const GRID_BUDGET: usize = 60_000;

/// Upper bound on the number of points of one local cube.
const CUBE_BUDGET: usize = 2_500;

const SHRINK: f64 = 0.2;
const MAX_PATTERN_ITERATIONS: usize = 500;
const MAX_DESCENT_SWEEPS: usize = 10_000;

/// Every norm/space pair with a closed-form solution.
pub const SUPPORTED_COMBINATIONS: [(Norm, SpaceKind); 7] = [
    (Norm::L1, SpaceKind::MassN2),
    (Norm::LInf, SpaceKind::MassN2),
    (Norm::L2, SpaceKind::MassN1),
    (Norm::L2, SpaceKind::MassN2),
    (Norm::L1, SpaceKind::Belief),
    (Norm::L2, SpaceKind::Belief),
    (Norm::LInf, SpaceKind::Belief),
];

#[derive(Clone, Debug, PartialEq)]
pub struct OracleConfig {
    pub grid_step: f64,
    pub refinement_rounds: usize,
    pub random_restarts: usize,
    pub tolerance: f64,
    pub seed: u64,
}

impl Default for OracleConfig {
    fn default() -> Self {
        Self {
            grid_step: 0.02,
            refinement_rounds: 3,
            random_restarts: 16,
            tolerance: 1e-6,
            seed: 0,
        }
    }
}

impl OracleConfig {
    pub fn validate(&self) -> Result<()> {
        if !(self.grid_step > 0.0 && self.grid_step <= 1.0) {
            return Err(Error::InvalidConfig(format!(
                "grid step {} must lie in (0, 1]",
                self.grid_step
            )));
        }
        if self.tolerance.is_nan() || self.tolerance <= 0.0 {
            return Err(Error::InvalidConfig(format!(
                "tolerance {} must be positive",
                self.tolerance
            )));
        }
        Ok(())
    }

    /// Grid step after the configured refinement rounds.
    pub fn final_grid_step(&self) -> f64 {
        self.grid_step * SHRINK.powi(self.refinement_rounds as i32)
    }

    /// Acceptance bound on `|oracle - closed form|`.
    pub fn gap_bound(&self) -> f64 {
        self.tolerance.max(10.0 * self.final_grid_step())
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct OracleReport {
    pub focus: usize,
    pub norm: Norm,
    pub space: SpaceKind,
    pub oracle_distance: f64,
    pub closed_form_distance: f64,
    pub oracle_point: PseudoMassFunction,
    pub max_gap: f64,
    /// `max_gap ≤ 10 · tolerance`.
    pub converged: bool,
    pub evaluations: usize,
}

/// Closed-form partial distance for a supported norm/space pair.
pub fn closed_form_distance(
    m: &MassFunction,
    x: usize,
    norm: Norm,
    space: SpaceKind,
) -> Result<f64> {
    match (norm, space) {
        (Norm::L1, SpaceKind::MassN2) => Ok(partial_l1_mass(m, x)?.distance),
        (Norm::LInf, SpaceKind::MassN2) => Ok(partial_linf_mass(m, x)?.distance),
        (Norm::L2, SpaceKind::MassN1 | SpaceKind::MassN2) => {
            Ok(partial_l2_mass(m, x, space)?.distance)
        }
        (Norm::L1, SpaceKind::Belief) => Ok(focused_transform(m, x)?.distance_l1),
        (Norm::L2, SpaceKind::Belief) => Ok(focused_transform(m, x)?.distance_l2),
        (Norm::LInf, SpaceKind::Belief) => Ok(partial_linf_belief(m, x)?.distance),
        _ => Err(unsupported(norm, space)),
    }
}

/// Optima chosen by the library's global selector.
pub fn library_optima(m: &MassFunction, norm: Norm, space: SpaceKind) -> Result<Vec<usize>> {
    Ok(match (norm, space) {
        (Norm::L1, SpaceKind::MassN2) => global_l1_mass(m)?.optima,
        (Norm::LInf, SpaceKind::MassN2) => global_linf_mass(m)?.optima,
        (Norm::L2, SpaceKind::MassN1 | SpaceKind::MassN2) => global_l2_mass(m, space)?.optima,
        (Norm::L1, SpaceKind::Belief) => global_l1_belief(m)?.optima,
        (Norm::L2, SpaceKind::Belief) => global_l2_belief(m)?.optima,
        (Norm::LInf, SpaceKind::Belief) => global_linf_belief(m)?.optima,
        _ => return Err(unsupported(norm, space)),
    })
}

fn unsupported(norm: Norm, space: SpaceKind) -> Error {
    Error::UnsupportedCombination {
        norm: norm.to_string(),
        space: space.to_string(),
    }
}

/// Objective `w ↦ ‖t - Φ w‖_p` over the ultrafilter simplex.
struct Problem {
    norm: Norm,
    target: Vec<f64>,
    /// Row-major `dim × k`.
    matrix: Vec<f64>,
    dim: usize,
    k: usize,
}

impl Problem {
    fn new(m: &MassFunction, filter: &[FrameSubset], norm: Norm, space: SpaceKind) -> Result<Self> {
        let embedding = EmbeddingSpace::new(space, m.frame().clone());
        let target = embed(m, &embedding)?.coords().to_vec();
        let columns = filter
            .iter()
            .map(|b| {
                let vertex = MassFunction::categorical(m.frame().clone(), *b)?;
                Ok(embed(&vertex, &embedding)?.coords().to_vec())
            })
            .collect::<Result<Vec<_>>>()?;
        let dim = target.len();
        let k = filter.len();
        let mut matrix = vec![0.0; dim * k];
        for (j, col) in columns.iter().enumerate() {
            for (i, v) in col.iter().enumerate() {
                matrix[i * k + j] = *v;
            }
        }
        Ok(Self {
            norm,
            target,
            matrix,
            dim,
            k,
        })
    }

    fn residual(&self, w: &[f64]) -> Vec<f64> {
        (0..self.dim)
            .map(|i| {
                let row = &self.matrix[i * self.k..(i + 1) * self.k];
                self.target[i] - row.iter().zip(w).map(|(a, b)| a * b).sum::<f64>()
            })
            .collect()
    }

    fn eval(&self, w: &[f64]) -> f64 {
        self.norm.apply(self.residual(w))
    }
}

/// Search state over free coordinates; the last weight is `1 - Σ free`.
struct Search<'a> {
    problem: &'a Problem,
    evaluations: usize,
}

impl Search<'_> {
    fn weights(free: &[f64]) -> Vec<f64> {
        let mut w = free.to_vec();
        w.push(1.0 - free.iter().sum::<f64>());
        w
    }

    fn feasible(free: &[f64]) -> bool {
        free.iter().all(|v| *v >= 0.0) && free.iter().sum::<f64>() <= 1.0 + 1e-15
    }

    fn value(&mut self, free: &[f64]) -> f64 {
        self.evaluations += 1;
        self.problem.eval(&Self::weights(free))
    }

    /// Best point of the integer grid `{w = c / steps}` over the simplex.
    fn grid(&mut self, steps: usize) -> (Vec<f64>, f64) {
        let free_dims = self.problem.k - 1;
        let mut counts = vec![0usize; free_dims];
        let mut best = (vec![0.0; free_dims], f64::INFINITY);
        self.grid_rec(&mut counts, 0, steps, steps, &mut best);
        best
    }

    fn grid_rec(
        &mut self,
        counts: &mut [usize],
        depth: usize,
        remaining: usize,
        steps: usize,
        best: &mut (Vec<f64>, f64),
    ) {
        if depth == counts.len() {
            let free: Vec<f64> = counts.iter().map(|c| *c as f64 / steps as f64).collect();
            let v = self.value(&free);
            if v < best.1 {
                *best = (free, v);
            }
            return;
        }
        for c in 0..=remaining {
            counts[depth] = c;
            self.grid_rec(counts, depth + 1, remaining - c, steps, best);
        }
        counts[depth] = 0;
    }

    /// Pattern search on the cube `{free + h·k, k ∈ [-r, r]^d}` until no
    /// cube point improves the incumbent.
    fn cube_descent(
        &mut self,
        mut free: Vec<f64>,
        mut value: f64,
        h: f64,
        radius: i64,
    ) -> (Vec<f64>, f64) {
        let d = free.len();
        if d == 0 {
            return (free, value);
        }
        let side = (2 * radius + 1) as usize;
        let total = side.pow(d as u32);
        for _ in 0..MAX_PATTERN_ITERATIONS {
            let mut best: Option<(Vec<f64>, f64)> = None;
            let mut candidate = vec![0.0; d];
            for index in 0..total {
                let mut rest = index;
                let mut moved = false;
                for (i, c) in candidate.iter_mut().enumerate() {
                    let offset = (rest % side) as i64 - radius;
                    rest /= side;
                    moved |= offset != 0;
                    *c = free[i] + h * offset as f64;
                }
                if !moved || !Self::feasible(&candidate) {
                    continue;
                }
                let v = self.value(&candidate);
                if v < best.as_ref().map_or(value, |b| b.1) - 1e-15 {
                    best = Some((candidate.clone(), v));
                }
            }
            match best {
                Some((p, v)) => {
                    free = p;
                    value = v;
                }
                None => break,
            }
        }
        (free, value)
    }

    /// Runs the shrinking step schedule starting from `h`.
    fn refine(
        &mut self,
        mut free: Vec<f64>,
        mut value: f64,
        start_step: f64,
        radius: i64,
        rounds: usize,
        tolerance: f64,
    ) -> (Vec<f64>, f64) {
        let mut h = start_step;
        (free, value) = self.cube_descent(free, value, h, radius);
        let mut round = 0;
        while round < rounds || h > tolerance {
            h *= SHRINK;
            round += 1;
            (free, value) = self.cube_descent(free, value, h, radius);
        }
        (free, value)
    }

    /// Pairwise exact line search for the squared L2 objective.
    fn pairwise_descent(&mut self, free: Vec<f64>, tolerance: f64) -> (Vec<f64>, f64) {
        let p = self.problem;
        let k = p.k;
        let mut w = Self::weights(&free);
        let col = |j: usize| (0..p.dim).map(move |i| p.matrix[i * k + j]);
        for _ in 0..MAX_DESCENT_SWEEPS {
            let before = p.eval(&w);
            for i in 0..k {
                for j in 0..k {
                    if i == j {
                        continue;
                    }
                    // Move t from w_j to w_i.
                    let r = p.residual(&w);
                    let dir: Vec<f64> = col(i).zip(col(j)).map(|(a, b)| a - b).collect();
                    let norm_sq: f64 = dir.iter().map(|v| v * v).sum();
                    if norm_sq < 1e-18 {
                        continue;
                    }
                    let t = (r.iter().zip(&dir).map(|(a, b)| a * b).sum::<f64>() / norm_sq)
                        .clamp(-w[i], w[j]);
                    w[i] += t;
                    w[j] -= t;
                    self.evaluations += 1;
                }
            }
            let after = p.eval(&w);
            if before - after <= tolerance * tolerance {
                break;
            }
        }
        for v in w.iter_mut() {
            *v = v.max(0.0);
        }
        let total: f64 = w.iter().sum();
        w.iter_mut().for_each(|v| *v /= total);
        let free = w[..k - 1].to_vec();
        let value = self.value(&free);
        (free, value)
    }
}

fn grid_steps(k: usize, grid_step: f64) -> usize {
    let mut steps = (1.0 / grid_step).round().max(1.0) as usize;
    while steps > 1 && compositions(steps, k) > GRID_BUDGET {
        steps -= 1;
    }
    steps
}

/// Number of ways to write `steps` as an ordered sum of `k` nonnegative parts.
fn compositions(steps: usize, k: usize) -> usize {
    let (n, r) = (steps + k - 1, k - 1);
    let mut c: u128 = 1;
    for i in 0..r {
        c = c * (n - i) as u128 / (i + 1) as u128;
        if c > usize::MAX as u128 {
            return usize::MAX;
        }
    }
    c as usize
}

fn cube_radius(free_dims: usize) -> i64 {
    let mut radius = 5i64;
    while radius > 1 && ((2 * radius + 1) as usize).pow(free_dims as u32) > CUBE_BUDGET {
        radius -= 1;
    }
    radius
}

/// Minimizes the chosen norm over admissible mass functions focused on `x`
/// and compares the minimum with the closed-form distance.
pub fn brute_force_partial(
    m: &MassFunction,
    x: usize,
    norm: Norm,
    space: SpaceKind,
    cfg: &OracleConfig,
) -> Result<OracleReport> {
    cfg.validate()?;
    let frame = m.frame();
    if frame.len() > MAX_ORACLE_FRAME {
        return Err(Error::OracleFrameTooLarge(frame.len()));
    }
    frame.check_element(x)?;
    let closed = closed_form_distance(m, x, norm, space)?;

    let filter: Vec<FrameSubset> = frame.ultrafilter(x).collect();
    let problem = Problem::new(m, &filter, norm, space)?;
    let mut search = Search {
        problem: &problem,
        evaluations: 0,
    };
    let free_dims = filter.len() - 1;
    let radius = cube_radius(free_dims);

    let steps = grid_steps(filter.len(), cfg.grid_step);
    let coarse = 1.0 / steps as f64;
    let (free, value) = search.grid(steps);
    let (mut best, mut best_value) = search.refine(
        free,
        value,
        coarse * SHRINK,
        radius,
        cfg.refinement_rounds,
        cfg.tolerance,
    );

    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed ^ ((x as u64) << 32));
    for _ in 0..cfg.random_restarts {
        let start = dirichlet_on(frame, &filter, &mut rng);
        let free: Vec<f64> = filter[..free_dims].iter().map(|b| start.mass(*b)).collect();
        let value = search.value(&free);
        let (p, v) = search.refine(free, value, coarse, 1, cfg.refinement_rounds, cfg.tolerance);
        if v < best_value {
            best = p;
            best_value = v;
        }
    }

    if norm == Norm::L2 {
        let (p, v) = search.pairwise_descent(best.clone(), cfg.tolerance);
        if v < best_value {
            best = p;
            best_value = v;
        }
    }

    let weights = Search::weights(&best);
    let point = PseudoMassFunction::new(
        frame.clone(),
        filter.iter().copied().zip(weights).collect::<Vec<_>>(),
    )?;
    let max_gap = (best_value - closed).abs();
    Ok(OracleReport {
        focus: x,
        norm,
        space,
        oracle_distance: best_value,
        closed_form_distance: closed,
        oracle_point: point,
        max_gap,
        converged: max_gap <= 10.0 * cfg.tolerance,
        evaluations: search.evaluations,
    })
}

/// Library optima versus oracle optima for one norm/space pair.
#[derive(Clone, Debug, PartialEq)]
pub struct GlobalCheck {
    pub norm: Norm,
    pub space: SpaceKind,
    pub library_optima: Vec<usize>,
    pub oracle_optima: Vec<usize>,
    pub reports: Vec<OracleReport>,
    pub agrees: bool,
}

/// Runs the oracle on every element and compares the argmin sets.
///
/// Sets agree when every library optimum is an oracle near-minimizer and
/// every oracle near-minimizer is a closed-form near-minimizer, both within
/// `10 · tolerance`.
pub fn global_check(
    m: &MassFunction,
    norm: Norm,
    space: SpaceKind,
    cfg: &OracleConfig,
) -> Result<GlobalCheck> {
    let reports = (0..m.frame().len())
        .map(|x| brute_force_partial(m, x, norm, space, cfg))
        .collect::<Result<Vec<_>>>()?;
    let library = library_optima(m, norm, space)?;
    let slack = 10.0 * cfg.tolerance;
    let oracle_values: Vec<f64> = reports.iter().map(|r| r.oracle_distance).collect();
    let closed_values: Vec<f64> = reports.iter().map(|r| r.closed_form_distance).collect();
    let oracle = argmin_set(&oracle_values, slack);
    let closed_near = argmin_set(&closed_values, slack);
    let agrees = library.iter().all(|x| oracle.contains(x))
        && oracle.iter().all(|x| closed_near.contains(x));
    Ok(GlobalCheck {
        norm,
        space,
        library_optima: library,
        oracle_optima: oracle,
        reports,
        agrees,
    })
}

pub fn exhaustive_global_check(
    m: &MassFunction,
    norm: Norm,
    space: SpaceKind,
    cfg: &OracleConfig,
) -> Result<bool> {
    Ok(global_check(m, norm, space, cfg)?.agrees)
}
