use super::{spec_from_rows, ProblemInstance, SolutionSpec};
use crate::appbasis::neg_min_basis;
use crate::error::Result;
use crate::ffpoly::Poly;
use crate::polymat::{PolyMatrix, Shift};

/// Solution specification from a single minimal approximant basis of
/// `H = [-S; I; diag(g)]` with shift `-(N_0, ..., N_n, N_0 - 1, ..., N_0 - 1)`
/// at order `N_0 + max deg g_i - 1`.
pub fn direct_sim_pade(instance: &ProblemInstance) -> Result<SolutionSpec> {
    let f = instance.field();
    let n = instance.n();
    let n0 = instance.bounds()[0] as i64;

    let mut h = PolyMatrix::zero(f, 2 * n + 1, n);
    for i in 0..n {
        h.set(0, i, -&instance.series()[i]);
        h.set(1 + i, i, Poly::one(f));
        h.set(1 + n + i, i, instance.moduli()[i].clone());
    }
    let mut shift: Vec<i64> = instance.bounds().iter().map(|&b| -(b as i64)).collect();
    shift.extend(std::iter::repeat_n(-(n0 - 1), n));
    let order = instance.bounds()[0] + instance.max_modulus_degree() - 1;

    let neg = neg_min_basis(order, &h, &Shift::new(shift))?;
    Ok(spec_from_rows(&neg.basis, neg.degrees))
}
