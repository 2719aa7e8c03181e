//! A small dense Levenberg–Marquardt solver.
//!
//! The solver works on any [`LeastSquaresProblem`]; it minimizes
//! `½‖r(p)‖²` with Marquardt's diagonal scaling, dividing the damping by ten
//! after an accepted step and multiplying it by ten after a rejected one.

use nalgebra::{DMatrix, DVector};

pub trait LeastSquaresProblem {
    fn num_params(&self) -> usize;
    fn num_residuals(&self) -> usize;
    fn residuals(&self, params: &DVector<f64>) -> DVector<f64>;
    /// Row `i` holds the partial derivatives of residual `i`.
    fn jacobian(&self, params: &DVector<f64>) -> DMatrix<f64>;
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct LmConfig {
    pub max_iterations: usize,
    /// Converged once every gradient component is below this in magnitude.
    pub gradient_tolerance: f64,
    pub initial_damping: f64,
}

impl Default for LmConfig {
    fn default() -> Self {
        Self { max_iterations: 200, gradient_tolerance: 1e-12, initial_damping: 1e-3 }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Termination {
    SmallGradient,
    SmallCostChange,
    MaxIterations,
}

#[derive(Clone, Debug)]
pub struct LmReport {
    pub params: DVector<f64>,
    /// `½‖r‖²` at `params`.
    pub cost: f64,
    pub iterations: usize,
    pub termination: Termination,
}

impl LmReport {
    pub fn converged(&self) -> bool {
        self.termination != Termination::MaxIterations
    }
}

const RELATIVE_COST_TOLERANCE: f64 = 1e-12;
const MAX_DAMPING: f64 = 1e32;

fn half_sq_norm(r: &DVector<f64>) -> f64 {
    0.5 * r.norm_squared()
}

pub fn minimize<P: LeastSquaresProblem>(
    problem: &P,
    initial: DVector<f64>,
    config: &LmConfig,
) -> LmReport {
    let mut params = initial;
    let mut residuals = problem.residuals(&params);
    let mut cost = half_sq_norm(&residuals);
    let mut damping = config.initial_damping;
    let mut jac = problem.jacobian(&params);

    for iteration in 1..=config.max_iterations {
        let jtj = jac.transpose() * &jac;
        let gradient = jac.transpose() * &residuals;
        if gradient.amax() < config.gradient_tolerance {
            return LmReport {
                params,
                cost,
                iterations: iteration - 1,
                termination: Termination::SmallGradient,
            };
        }

        let mut augmented = jtj.clone();
        for i in 0..augmented.nrows() {
            let d = jtj[(i, i)].max(f64::EPSILON);
            augmented[(i, i)] += damping * d;
        }
        let step = match augmented.cholesky() {
            Some(chol) => chol.solve(&(-&gradient)),
            None => {
                damping *= 10.0;
                if damping > MAX_DAMPING {
                    break;
                }
                continue;
            }
        };

        let candidate = &params + &step;
        let candidate_residuals = problem.residuals(&candidate);
        let candidate_cost = half_sq_norm(&candidate_residuals);

        if candidate_cost.is_finite() && candidate_cost <= cost {
            let decrease = cost - candidate_cost;
            params = candidate;
            residuals = candidate_residuals;
            let previous = cost;
            cost = candidate_cost;
            jac = problem.jacobian(&params);
            damping = (damping / 10.0).max(1e-300);
            if decrease <= RELATIVE_COST_TOLERANCE * previous {
                return LmReport {
                    params,
                    cost,
                    iterations: iteration,
                    termination: Termination::SmallCostChange,
                };
            }
        } else {
            // A rejected step that changes the cost by a rounding-level amount
            // means we are sitting at the optimum.
            if candidate_cost.is_finite()
                && candidate_cost - cost <= RELATIVE_COST_TOLERANCE * cost
                && step.amax() <= 1e-14 * params.amax().max(1.0)
            {
                return LmReport {
                    params,
                    cost,
                    iterations: iteration,
                    termination: Termination::SmallCostChange,
                };
            }
            damping *= 10.0;
            if damping > MAX_DAMPING {
                break;
            }
        }
    }

    LmReport {
        params,
        cost,
        iterations: config.max_iterations,
        termination: Termination::MaxIterations,
    }
}
