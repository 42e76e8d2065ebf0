//! Problem instances, solution specifications, and the three solvers.

mod direct;
mod duality;
mod recursive;

use crate::error::{Error, Result};
use crate::ffpoly::{Poly, PrimeField};
use crate::polymat::{is_row_reduced, shifted_row_degrees, PolyMatrix, Shift};

pub use direct::direct_sim_pade;
pub use duality::duality_sim_pade;
pub use recursive::{intersection_matrix, recursive_sim_pade};

/// A validated simultaneous Padé instance `(S, g, N)` over GF(p).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ProblemInstance {
    field: PrimeField,
    series: Vec<Poly>,
    moduli: Vec<Poly>,
    bounds: Vec<usize>,
}

impl ProblemInstance {
    /// Checks `n >= 1`, nonzero moduli, `deg S_i < deg g_i`,
    /// `1 <= N_0 <= max deg g_i` and `N_i <= deg g_i`. Oversized series are
    /// rejected, never reduced.
    pub fn new(series: Vec<Poly>, moduli: Vec<Poly>, bounds: Vec<usize>) -> Result<Self> {
        let inst = Self::new_unchecked(series, moduli, bounds)?;
        let max_deg = inst.max_modulus_degree();
        let n0 = inst.bounds[0];
        if n0 < 1 {
            return Err(Error::InvalidInstance("N_0 must be at least 1".into()));
        }
        if n0 > max_deg {
            return Err(Error::InvalidInstance(format!(
                "N_0 = {n0} exceeds the largest modulus degree {max_deg}"
            )));
        }
        Ok(inst)
    }

    /// Per-series checks only; `N_0` may exceed the moduli degrees. Used for
    /// the sub-problems of the recursive solver.
    pub(crate) fn new_unchecked(
        series: Vec<Poly>,
        moduli: Vec<Poly>,
        bounds: Vec<usize>,
    ) -> Result<Self> {
        let n = series.len();
        if n == 0 {
            return Err(Error::InvalidInstance("at least one series is required".into()));
        }
        if moduli.len() != n {
            return Err(Error::InvalidInstance(format!(
                "{n} series but {} moduli",
                moduli.len()
            )));
        }
        if bounds.len() != n + 1 {
            return Err(Error::InvalidInstance(format!(
                "{n} series need {} degree bounds, got {}",
                n + 1,
                bounds.len()
            )));
        }
        let field = series[0].field();
        for p in series.iter().chain(&moduli) {
            if p.field() != field {
                return Err(Error::FieldMismatch(field.modulus(), p.field().modulus()));
            }
        }
        for (i, (s, g)) in series.iter().zip(&moduli).enumerate() {
            let Some(dg) = g.degree() else {
                return Err(Error::InvalidInstance(format!("modulus g_{} is zero", i + 1)));
            };
            if s.degree().is_some_and(|ds| ds >= dg) {
                return Err(Error::InvalidInstance(format!(
                    "deg S_{} = {} is not below deg g_{} = {dg}",
                    i + 1,
                    s.degree().unwrap(),
                    i + 1
                )));
            }
            if bounds[i + 1] > dg {
                return Err(Error::InvalidInstance(format!(
                    "N_{} = {} exceeds deg g_{} = {dg}",
                    i + 1,
                    bounds[i + 1],
                    i + 1
                )));
            }
        }
        Ok(ProblemInstance {
            field,
            series,
            moduli,
            bounds,
        })
    }

    /// Builds an instance from raw ascending coefficient lists. Coefficients
    /// must already lie in `0..p`.
    pub fn from_coeffs(
        p: u64,
        series: &[Vec<u64>],
        moduli: &[Vec<u64>],
        bounds: &[usize],
    ) -> Result<Self> {
        let field = PrimeField::new(p)?;
        let to_poly = |name: &str, lists: &[Vec<u64>]| -> Result<Vec<Poly>> {
            lists
                .iter()
                .enumerate()
                .map(|(i, c)| {
                    if let Some(&bad) = c.iter().find(|&&v| v >= p) {
                        return Err(Error::InvalidInstance(format!(
                            "{name}_{}: coefficient {bad} is not below p = {p}",
                            i + 1
                        )));
                    }
                    Ok(Poly::new(field, c.clone()))
                })
                .collect()
        };
        Self::new(to_poly("S", series)?, to_poly("g", moduli)?, bounds.to_vec())
    }

    pub fn field(&self) -> PrimeField {
        self.field
    }

    /// Number of series `n`.
    pub fn n(&self) -> usize {
        self.series.len()
    }

    pub fn series(&self) -> &[Poly] {
        &self.series
    }

    pub fn moduli(&self) -> &[Poly] {
        &self.moduli
    }

    /// `(N_0, N_1, ..., N_n)`.
    pub fn bounds(&self) -> &[usize] {
        &self.bounds
    }

    pub fn max_modulus_degree(&self) -> usize {
        self.moduli
            .iter()
            .map(|g| g.degree().expect("validated"))
            .max()
            .expect("n >= 1")
    }

    /// `d` if every modulus equals `x^d`.
    pub fn uniform_power_of_x(&self) -> Option<usize> {
        let d = self.moduli[0].degree()?;
        let target = Poly::monomial(self.field, 1, d);
        self.moduli.iter().all(|g| *g == target).then_some(d)
    }

    /// The shift `-N`.
    pub fn neg_bounds_shift(&self) -> Shift {
        Shift::new(self.bounds.iter().map(|&b| -(b as i64)).collect())
    }

    pub(crate) fn sub_instance(&self, range: std::ops::Range<usize>) -> Result<Self> {
        let mut bounds = vec![self.bounds[0]];
        bounds.extend_from_slice(&self.bounds[range.start + 1..range.end + 1]);
        Self::new_unchecked(
            self.series[range.clone()].to_vec(),
            self.moduli[range].to_vec(),
            bounds,
        )
    }
}

/// A column `λ` of generators with their `(-N)`-row degrees.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct SolutionSpec {
    pub lambdas: Vec<Poly>,
    pub deltas: Vec<i64>,
}

impl SolutionSpec {
    pub fn k(&self) -> usize {
        self.lambdas.len()
    }

    pub fn is_empty(&self) -> bool {
        self.lambdas.is_empty()
    }

    /// Dimension over GF(p) of the solution space: `sum(-δ_i)`.
    pub fn dimension(&self) -> i64 {
        self.deltas.iter().map(|&d| -d).sum()
    }
}

/// `k x (n+1)` matrix with rows `[λ_j | rem(λ_j S_1, g_1) | ... ]`.
pub fn complete(lambdas: &[Poly], instance: &ProblemInstance) -> PolyMatrix {
    let f = instance.field();
    let n = instance.n();
    let mut m = PolyMatrix::zero(f, lambdas.len(), n + 1);
    for (j, lambda) in lambdas.iter().enumerate() {
        m.set(j, 0, lambda.clone());
        for i in 0..n {
            let prod = lambda * &instance.series[i];
            let r = prod
                .rem(&instance.moduli[i])
                .expect("validated moduli are nonzero");
            m.set(j, i + 1, r);
        }
    }
    m
}

/// Whether `v = (λ, φ_1, ..., φ_n)` is a nonzero solution: `λ S_i ≡ φ_i mod
/// g_i`, `deg λ < N_0` and `deg φ_i < N_i`.
pub fn verify_solution(v: &[Poly], instance: &ProblemInstance) -> Result<bool> {
    let n = instance.n();
    if v.len() != n + 1 {
        return Err(Error::Dimension(format!(
            "solution vector of length {} for n = {n}",
            v.len()
        )));
    }
    if v.iter().all(Poly::is_zero) {
        return Ok(false);
    }
    for (p, &b) in v.iter().zip(&instance.bounds) {
        if p.degree().is_some_and(|d| d >= b) {
            return Ok(false);
        }
    }
    for i in 0..n {
        let lhs = &(&v[0] * &instance.series[i]) - &v[i + 1];
        if !lhs.rem(&instance.moduli[i])?.is_zero() {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Outcome of one named invariant in [`check_spec`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SpecCheck {
    pub name: &'static str,
    pub passed: bool,
    pub detail: String,
}

/// Checks the structural invariants of a specification against an
/// instance: matching lengths, negative deltas, `deg λ < N_0`, every
/// completion row a solution, and the completion `(-N)`-row reduced with
/// row degrees equal to the deltas.
pub fn check_spec(spec: &SolutionSpec, instance: &ProblemInstance) -> Vec<SpecCheck> {
    let mut out = Vec::new();
    let mut push = |name, passed, detail: String| out.push(SpecCheck { name, passed, detail });

    let lengths_ok = spec.lambdas.len() == spec.deltas.len();
    push(
        "lengths",
        lengths_ok,
        format!("{} lambdas, {} deltas", spec.lambdas.len(), spec.deltas.len()),
    );
    let bad_delta = spec.deltas.iter().position(|&d| d >= 0);
    push(
        "negative-deltas",
        bad_delta.is_none(),
        match bad_delta {
            Some(i) => format!("delta[{i}] = {} is not negative", spec.deltas[i]),
            None => "all deltas negative".into(),
        },
    );
    let n0 = instance.bounds[0];
    let bad_deg = spec
        .lambdas
        .iter()
        .position(|l| l.degree().is_some_and(|d| d >= n0));
    push(
        "lambda-degree",
        bad_deg.is_none(),
        match bad_deg {
            Some(i) => format!("deg lambda[{i}] >= N_0 = {n0}"),
            None => format!("all lambdas of degree < {n0}"),
        },
    );

    let completion = complete(&spec.lambdas, instance);
    let bad_row = (0..completion.rows())
        .find(|&i| !verify_solution(completion.row(i), instance).unwrap_or(false));
    push(
        "congruence-and-degree",
        bad_row.is_none(),
        match bad_row {
            Some(i) => format!("completion row {i} is not a solution"),
            None => "every completion row is a solution".into(),
        },
    );

    let s = instance.neg_bounds_shift();
    let reduced = is_row_reduced(&completion, &s).unwrap_or(false);
    push(
        "row-reduced",
        reduced,
        if reduced {
            "completion is (-N)-row reduced".into()
        } else {
            "completion is not (-N)-row reduced".into()
        },
    );
    let degs = shifted_row_degrees(&completion, &s)
        .ok()
        .and_then(|d| d.finite());
    let degs_ok = lengths_ok && degs.as_deref() == Some(&spec.deltas[..]);
    push(
        "row-degrees",
        degs_ok,
        match degs {
            Some(d) => format!("rowdeg = {d:?}, deltas = {:?}", spec.deltas),
            None => "completion has a zero row".into(),
        },
    );
    out
}

/// First column and degrees of a matrix of approximants.
fn spec_from_rows(basis: &PolyMatrix, degrees: Vec<i64>) -> SolutionSpec {
    SolutionSpec {
        lambdas: basis.column(0),
        deltas: degrees,
    }
}
