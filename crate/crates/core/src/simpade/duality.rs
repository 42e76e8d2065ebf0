use super::{ProblemInstance, SolutionSpec};
use crate::adjrow::adjoint_first_row;
use crate::appbasis::popov_basis;
use crate::error::{Error, Result};
use crate::ffpoly::Poly;
use crate::polymat::{PolyMatrix, Shift};

/// Solver for moduli `g_i = x^d`: the `N`-Popov approximant basis `G` of
/// `(1, S_1, ..., S_n)^T` at order `d` determines the solutions through the
/// first row of `adj(G)`, with degrees `δ_i = Σ η - Σ N - η_i` where `η` are
/// the `N`-row degrees of `G`.
pub fn duality_sim_pade(instance: &ProblemInstance) -> Result<SolutionSpec> {
    let d = instance.uniform_power_of_x().ok_or_else(|| {
        Error::Precondition("all moduli must equal x^d for a common d".into())
    })?;
    let f = instance.field();
    let n = instance.n();

    let mut b = PolyMatrix::zero(f, n + 1, 1);
    b.set(0, 0, Poly::one(f));
    for i in 0..n {
        b.set(i + 1, 0, instance.series()[i].clone());
    }
    let bounds: Vec<i64> = instance.bounds().iter().map(|&v| v as i64).collect();
    let g = popov_basis(d, &b, &Shift::new(bounds.clone()))?;
    let adj = adjoint_first_row(&g.basis)?;

    let eta: i64 = g.degrees.iter().sum();
    let total: i64 = bounds.iter().sum();
    let mut spec = SolutionSpec::default();
    for (i, &eta_i) in g.degrees.iter().enumerate() {
        let delta = eta - total - eta_i;
        if delta < 0 {
            spec.lambdas.push(adj.row[i].clone());
            spec.deltas.push(delta);
        }
    }
    Ok(spec)
}
