use super::direct::direct_sim_pade;
use super::{spec_from_rows, ProblemInstance, SolutionSpec};
use crate::appbasis::neg_min_basis;
use crate::error::Result;
use crate::ffpoly::Poly;
use crate::polymat::{PolyMatrix, Shift};

/// Divide and conquer on the series: solve the first `ceil(n/2)` and the
/// remaining series separately (both with bound `N_0`), then intersect the
/// two solution modules through a minimal approximant basis of
///
/// ```text
/// R = [  1     1  ]
///     [ -λ_1   0  ]
///     [  0   -λ_2 ]
/// ```
///
/// with shift `(-N_0 | δ_1 | δ_2)` at order `N_0 + max deg g_i - 1`.
pub fn recursive_sim_pade(instance: &ProblemInstance) -> Result<SolutionSpec> {
    let n = instance.n();
    if n == 1 {
        return direct_sim_pade(instance);
    }
    let half = n.div_ceil(2);
    let first = recursive_sim_pade(&instance.sub_instance(0..half)?)?;
    let second = recursive_sim_pade(&instance.sub_instance(half..n)?)?;
    combine(instance, &first, &second)
}

fn combine(
    instance: &ProblemInstance,
    first: &SolutionSpec,
    second: &SolutionSpec,
) -> Result<SolutionSpec> {
    if first.is_empty() || second.is_empty() {
        return Ok(SolutionSpec::default());
    }
    let order = instance.bounds()[0] + instance.max_modulus_degree() - 1;
    let (r, shift) = intersection_matrix(instance, first, second);
    let neg = neg_min_basis(order, &r, &shift)?;
    Ok(spec_from_rows(&neg.basis, neg.degrees))
}

/// The matrix `R` and shift used to intersect two solution modules.
pub fn intersection_matrix(
    instance: &ProblemInstance,
    first: &SolutionSpec,
    second: &SolutionSpec,
) -> (PolyMatrix, Shift) {
    let f = instance.field();
    let (k1, k2) = (first.k(), second.k());
    let mut r = PolyMatrix::zero(f, 1 + k1 + k2, 2);
    r.set(0, 0, Poly::one(f));
    r.set(0, 1, Poly::one(f));
    for (j, l) in first.lambdas.iter().enumerate() {
        r.set(1 + j, 0, -l);
    }
    for (j, l) in second.lambdas.iter().enumerate() {
        r.set(1 + k1 + j, 1, -l);
    }
    let mut shift = vec![-(instance.bounds()[0] as i64)];
    shift.extend_from_slice(&first.deltas);
    shift.extend_from_slice(&second.deltas);
    (r, Shift::new(shift))
}
