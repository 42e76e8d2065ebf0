//! Invariant checks over randomly generated inputs. Each returns a
//! description of the first violated property.

use rand::Rng;
use rand_chacha::ChaCha8Rng;
use simpade_core::adjrow::adjoint_first_row;
use simpade_core::appbasis::{neg_min_basis, pm_basis, popov_basis};
use simpade_core::oracle::{oracle_solution_space, spec_matches_oracle};
use simpade_core::polymat::{
    determinant, is_popov, is_row_reduced, popov_canonical, row_space_equal, row_space_membership,
    shifted_row_degrees,
};
use simpade_core::simpade::check_spec;
use simpade_core::{
    complete, direct_sim_pade, duality_sim_pade, recursive_sim_pade, Poly, PolyMatrix, ProblemInstance,
    Shift, SolutionSpec,
};

use super::*;

pub type Check = Result<(), String>;

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Check {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

/// Nullspace of `rows` (each of length `cols`) by RREF over GF(p); returns
/// a basis of `{v : rows * v = 0}`.
pub fn nullspace(mut rows: Vec<Vec<u64>>, cols: usize, p: u64) -> Vec<Vec<u64>> {
    let inv = |a: u64| {
        let (mut r, mut b, mut e) = (1u64, a, p - 2);
        while e > 0 {
            if e & 1 == 1 {
                r = ((r as u128 * b as u128) % p as u128) as u64;
            }
            b = ((b as u128 * b as u128) % p as u128) as u64;
            e >>= 1;
        }
        r
    };
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r == rows.len() {
            break;
        }
        let Some(k) = (r..rows.len()).find(|&k| rows[k][c] != 0) else {
            continue;
        };
        rows.swap(r, k);
        let iv = inv(rows[r][c]);
        for v in rows[r].iter_mut() {
            *v = ((*v as u128 * iv as u128) % p as u128) as u64;
        }
        for k in 0..rows.len() {
            if k != r && rows[k][c] != 0 {
                let f = rows[k][c];
                for j in 0..cols {
                    let sub = ((f as u128 * rows[r][j] as u128) % p as u128) as u64;
                    rows[k][j] = (rows[k][j] + p - sub) % p;
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    (0..cols)
        .filter(|c| !pivots.contains(c))
        .map(|free| {
            let mut v = vec![0u64; cols];
            v[free] = 1;
            for (i, &pc) in pivots.iter().enumerate() {
                v[pc] = (p - rows[i][free]) % p;
            }
            v
        })
        .collect()
}

/// Random `n x m` input with `m <= n`, order `d`, shift entries in `[-10, 10]`.
pub fn rand_approx_input(rng: &mut ChaCha8Rng, max_n: usize, max_d: usize) -> (PolyMatrix, usize, Shift) {
    let p = [2u64, 3, 97][rng.gen_range(0..3)];
    let f = gf(p);
    let n = rng.gen_range(1..=max_n);
    let m = rng.gen_range(1..=n);
    let d = rng.gen_range(0..=max_d);
    let a = rand_matrix(rng, f, n, m, d.max(1));
    let s = Shift::new((0..n).map(|_| rng.gen_range(-10..=10)).collect());
    (a, d, s)
}

/// Order-basis invariants, the two-stage pipelines, and Popov canonicity.
pub fn check_approximant_case(rng: &mut ChaCha8Rng) -> Check {
    let (a, d, s) = rand_approx_input(rng, 6, 64);
    let f = a.field();
    let (n, m) = (a.rows(), a.cols());
    let ctx = format!("p={} n={n} m={m} d={d} s={:?}", f.modulus(), s.entries());

    let res = pm_basis(d, &a, &s).map_err(|e| format!("{ctx}: pm_basis failed: {e}"))?;
    let fm = &res.basis;
    ensure(fm.mul(&a).unwrap().truncate(d).is_zero(), || format!("{ctx}: F A != 0 mod x^d"))?;
    let det = determinant(fm).unwrap();
    let dd = det.degree().ok_or_else(|| format!("{ctx}: det F = 0"))?;
    ensure(det == Poly::monomial(f, det.leading_coeff(), dd), || format!("{ctx}: det F not c x^D"))?;
    ensure(dd <= m * d, || format!("{ctx}: D = {dd} > m d"))?;
    ensure(is_row_reduced(fm, &s).unwrap(), || format!("{ctx}: F not s-row reduced"))?;
    ensure(
        shifted_row_degrees(fm, &s).unwrap().finite() == Some(res.degrees.clone()),
        || format!("{ctx}: tracked degrees differ from rowdeg_s F"),
    )?;

    let pop = popov_basis(d, &a, &s).unwrap();
    ensure(is_popov(&pop.basis, &s).unwrap(), || format!("{ctx}: popov_basis not Popov"))?;
    let pdet = determinant(&pop.basis).unwrap();
    ensure(pdet == Poly::monomial(f, 1, dd), || format!("{ctx}: det of Popov basis is not x^D"))?;
    ensure(popov_canonical(fm, &s).unwrap() == pop.basis, || format!("{ctx}: Popov form of pm_basis differs"))?;
    let ops = rng.gen_range(1..=20);
    let u = rand_unimodular(rng, f, n, ops);
    ensure(
        popov_canonical(&u.mul(&pop.basis).unwrap(), &s).unwrap() == pop.basis,
        || format!("{ctx}: Popov form not invariant under unimodular perturbation"),
    )?;

    if m >= 2 {
        let split = rng.gen_range(1..m);
        let a1 = a.select_cols(&(0..split).collect::<Vec<_>>());
        let a2 = a.select_cols(&(split..m).collect::<Vec<_>>());

        let r1 = pm_basis(d, &a1, &s).unwrap();
        let r2 = pm_basis(d, &r1.basis.mul(&a2).unwrap(), &Shift::new(r1.degrees.clone())).unwrap();
        let prod = r2.basis.mul(&r1.basis).unwrap();
        ensure(
            shifted_row_degrees(&prod, &s).unwrap().finite() == Some(r2.degrees.clone()),
            || format!("{ctx}: rowdeg_s F2 F1 != delta_2"),
        )?;
        ensure(
            is_row_reduced(&prod, &s).unwrap() && row_space_equal(&prod, &s, fm, &s).unwrap(),
            || format!("{ctx}: two-stage basis spans a different module"),
        )?;

        let n1 = neg_min_basis(d, &a1, &s).unwrap();
        let n2 = neg_min_basis(d, &n1.basis.mul(&a2).unwrap(), &Shift::new(n1.degrees.clone())).unwrap();
        let pruned = n2.basis.mul(&n1.basis).unwrap();
        let full_neg = neg_min_basis(d, &a, &s).unwrap();
        ensure(
            shifted_row_degrees(&pruned, &s).unwrap().finite() == Some(n2.degrees.clone()),
            || format!("{ctx}: pruned pipeline degrees differ"),
        )?;
        ensure(
            is_row_reduced(&pruned, &s).unwrap() && row_space_equal(&pruned, &s, &full_neg.basis, &s).unwrap(),
            || format!("{ctx}: pruned pipeline spans a different module"),
        )?;
    }
    Ok(())
}

/// Every approximant of bounded degree found by coefficient linear algebra
/// lies in the row space of the computed basis.
pub fn check_approximant_completeness(rng: &mut ChaCha8Rng) -> Check {
    let (a, d, s) = rand_approx_input(rng, 3, 8);
    let p = a.field().modulus();
    let (n, m) = (a.rows(), a.cols());
    let len = rng.gen_range(1..=4);
    let res = pm_basis(d, &a, &s).unwrap();

    // Unknown (i, k): coefficient k of entry i; condition (j, t): coefficient
    // t < d of column j of p A.
    let cols = n * len;
    let mut rows = Vec::new();
    let ac = a.to_coeffs();
    for j in 0..m {
        for t in 0..d {
            let mut row = vec![0u64; cols];
            for i in 0..n {
                for k in 0..len.min(t + 1) {
                    row[i * len + k] = ac[i][j].get(t - k).copied().unwrap_or(0);
                }
            }
            rows.push(row);
        }
    }
    for v in nullspace(rows, cols, p) {
        let vec: Vec<Poly> = (0..n).map(|i| Poly::new(a.field(), v[i * len..(i + 1) * len].to_vec())).collect();
        ensure(
            row_space_membership(&vec, &res.basis, &s).unwrap(),
            || format!("p={p} n={n} m={m} d={d}: kernel vector {vec:?} not in row space"),
        )?;
    }
    Ok(())
}

/// Adjoint row of a random Popov approximant basis against cofactors.
pub fn check_adjoint_case(rng: &mut ChaCha8Rng) -> Check {
    let p = [2u64, 3, 97][rng.gen_range(0..3)];
    let n = rng.gen_range(1..=5);
    let g = rand_popov_basis(rng, p, n, 10);
    let f = g.field();
    let coeffs = g.to_coeffs();
    let ctx = format!("p={p} n={n} G={coeffs:?}");

    let det = cofactor_det(&coeffs, p);
    let res = adjoint_first_row(&g).map_err(|e| format!("{ctx}: {e}"))?;
    let mut xd = vec![0u64; res.exponent + 1];
    xd[res.exponent] = 1;
    ensure(det == xd, || format!("{ctx}: D = {} but det = {det:?}", res.exponent))?;
    let expected = cofactor_adjoint_first_row(&coeffs, p);
    let got: Vec<Vec<u64>> = res.row.iter().map(|p| p.coeffs().to_vec()).collect();
    ensure(got == expected, || format!("{ctx}: adjoint row {got:?} != cofactor {expected:?}"))?;
    let wf = g.left_mul_vector(&res.row).unwrap();
    let mut target = vec![Poly::zero(f); n];
    target[0] = Poly::monomial(f, 1, res.exponent);
    ensure(wf == target, || format!("{ctx}: w F != x^D e_1"))?;
    ensure(
        res.row.iter().all(|w| w.degree().is_none_or(|k| k <= res.exponent)),
        || format!("{ctx}: adjoint entry exceeds degree D"),
    )
}

fn sorted(v: &[i64]) -> Vec<i64> {
    let mut v = v.to_vec();
    v.sort();
    v
}

fn check_one_spec(name: &str, spec: &SolutionSpec, inst: &ProblemInstance, ctx: &str) -> Check {
    for c in check_spec(spec, inst) {
        ensure(c.passed, || format!("{ctx}: {name}: {} failed ({})", c.name, c.detail))?;
    }
    ensure(spec_matches_oracle(spec, inst).unwrap(), || format!("{ctx}: {name}: span differs from oracle"))?;
    let dim = oracle_solution_space(inst).unwrap().dim as i64;
    ensure(spec.dimension() == dim, || {
        format!("{ctx}: {name}: sum(-delta) = {} but oracle dim = {dim}", spec.dimension())
    })
}

/// All solvers against the oracle and against each other.
pub fn check_solvers_on(inst: &ProblemInstance) -> Check {
    let ctx = format!(
        "p={} S={:?} g={:?} N={:?}",
        inst.field().modulus(),
        inst.series(),
        inst.moduli(),
        inst.bounds()
    );
    let mut specs = vec![
        ("direct", direct_sim_pade(inst).map_err(|e| format!("{ctx}: direct: {e}"))?),
        ("recursive", recursive_sim_pade(inst).map_err(|e| format!("{ctx}: recursive: {e}"))?),
    ];
    if inst.uniform_power_of_x().is_some() {
        specs.push(("duality", duality_sim_pade(inst).map_err(|e| format!("{ctx}: duality: {e}"))?));
    }
    for (name, spec) in &specs {
        check_one_spec(name, spec, inst, &ctx)?;
    }
    let s = inst.neg_bounds_shift();
    let (base_name, base) = &specs[0];
    let base_rows = complete(&base.lambdas, inst);
    for (name, spec) in &specs[1..] {
        let rows = complete(&spec.lambdas, inst);
        ensure(
            row_space_equal(&rows, &s, &base_rows, &s).unwrap(),
            || format!("{ctx}: {name} and {base_name} span different modules"),
        )?;
        ensure(sorted(&spec.deltas) == sorted(&base.deltas), || {
            format!("{ctx}: {name} deltas {:?} vs {base_name} {:?}", spec.deltas, base.deltas)
        })?;
    }
    Ok(())
}

/// The degree formula of the duality solver against the directly computed
/// row degrees of the completion.
pub fn check_duality_degree_law(inst: &ProblemInstance) -> Check {
    let spec = duality_sim_pade(inst).map_err(|e| e.to_string())?;
    let rows = complete(&spec.lambdas, inst);
    let degs = shifted_row_degrees(&rows, &inst.neg_bounds_shift()).unwrap().finite();
    ensure(degs == Some(spec.deltas.clone()), || {
        format!("N={:?}: formula {:?} vs rowdeg {:?}", inst.bounds(), spec.deltas, degs)
    })
}
