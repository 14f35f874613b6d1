//! Weak Lefschetz verdicts.
//!
//! With `k = ⌊D/2⌋`, an algebra has the WLP exactly when `×L : A_k -> A_{k+1}`
//! is bijective (odd `D`), or `×L : A_{k-1} -> A_k` is injective (even `D`),
//! for some linear form `L`. Two independent oracles decide this:
//!
//! * `hessian`: the rank over the function field of `Hess^k(F)` (odd `D`)
//!   or of the mixed Hessian `Hess^{k-1,k}(F)` (even `D`);
//! * `multmap`: multiplication matrices for concrete forms, falling back to
//!   the matrix of a generic form.
//!
//! A positive verdict may rest on one explicit form. A negative verdict is
//! only ever issued after exact elimination over the polynomial ring.

use std::fmt;
use std::str::FromStr;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::algebra::AlgebraView;
use crate::arith::{random_point, ExactMatrix, PolyMatrix, SCREEN_DRAWS};
use crate::error::{Error, Result};
use crate::family::FamilyParams;
use crate::poly::LinearForm;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Verdict {
    #[serde(rename = "has-wlp")]
    HasWlp,
    #[serde(rename = "no-wlp")]
    NoWlp,
}

impl Verdict {
    pub fn as_str(self) -> &'static str {
        match self {
            Verdict::HasWlp => "has-wlp",
            Verdict::NoWlp => "no-wlp",
        }
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Method {
    Hessian,
    Multmap,
    #[default]
    Both,
}

impl Method {
    pub fn as_str(self) -> &'static str {
        match self {
            Method::Hessian => "hessian",
            Method::Multmap => "multmap",
            Method::Both => "both",
        }
    }
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for Method {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "hessian" => Ok(Method::Hessian),
            "multmap" => Ok(Method::Multmap),
            "both" => Ok(Method::Both),
            _ => Err(Error::Parse(format!("unknown method {s:?}"))),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Certificate {
    /// Full rank at one explicit linear form.
    LinearForm,
    /// Rank over the polynomial ring.
    Symbolic,
}

impl fmt::Display for Certificate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Certificate::LinearForm => "linear-form",
            Certificate::Symbolic => "symbolic",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Witness {
    pub certificate: Certificate,
    pub linear_form: Option<LinearForm>,
    pub rank: usize,
    pub dims: [usize; 2],
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct OracleOutcome {
    pub verdict: Verdict,
    pub witness: Witness,
}

/// Outcome for a linear form supplied by the caller.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GivenForm {
    pub linear_form: LinearForm,
    pub rank: usize,
    pub dims: [usize; 2],
    pub lefschetz: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct WlpReport {
    pub params: Option<FamilyParams>,
    #[serde(rename = "F")]
    pub f: String,
    #[serde(rename = "D")]
    pub d: u32,
    pub k: u32,
    pub verdict: Verdict,
    pub method: Method,
    pub witness: Witness,
    pub given_form: Option<GivenForm>,
    pub hessian: Option<OracleOutcome>,
    pub multmap: Option<OracleOutcome>,
    /// `None` unless both oracles ran.
    pub oracles_agree: Option<bool>,
}

impl WlpReport {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }
}

#[derive(Clone, Debug, Default)]
pub struct WlpOptions {
    pub method: Method,
    pub linear_form: Option<LinearForm>,
    pub seed: u64,
}

/// Stream seed for one parameter point, so sweeps do not depend on
/// scheduling.
pub fn point_seed(seed: u64, p: &FamilyParams) -> u64 {
    p.tuple().iter().fold(seed ^ 0x9E37_79B9_7F4A_7C15, |h, &v| splitmix(h ^ u64::from(v)))
}

fn splitmix(mut z: u64) -> u64 {
    z = z.wrapping_add(0x9E37_79B9_7F4A_7C15);
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    z ^ (z >> 31)
}

pub fn wlp_check(view: &AlgebraView, params: Option<FamilyParams>, opts: &WlpOptions) -> Result<WlpReport> {
    if let Some(l) = &opts.linear_form {
        if l.nvars() != view.nvars() {
            return Err(Error::VarcountMismatch { left: view.nvars(), right: l.nvars() });
        }
    }
    let d = view.socle_degree();
    let k = view.middle();
    let given_form = opts.linear_form.as_ref().map(|l| given_form_check(view, l)).transpose()?;
    let hessian = matches!(opts.method, Method::Hessian | Method::Both)
        .then(|| hessian_oracle(view, opts.linear_form.as_ref(), &mut ChaCha8Rng::seed_from_u64(opts.seed)))
        .transpose()?;
    let multmap = matches!(opts.method, Method::Multmap | Method::Both)
        .then(|| multmap_oracle(view, opts.linear_form.as_ref(), &mut ChaCha8Rng::seed_from_u64(splitmix(opts.seed))))
        .transpose()?;
    let oracles_agree = match (&hessian, &multmap) {
        (Some(h), Some(m)) => Some(h.verdict == m.verdict),
        _ => None,
    };
    let primary = hessian.as_ref().or(multmap.as_ref()).expect("at least one oracle runs");
    Ok(WlpReport {
        params,
        f: view.dual_generator().to_string(),
        d,
        k,
        verdict: primary.verdict,
        method: opts.method,
        witness: primary.witness.clone(),
        given_form,
        hessian,
        multmap,
        oracles_agree,
    })
}

/// The map that decides the WLP for this socle degree: `(source degree,
/// maximal rank)`. `None` when the algebra has a single degree.
fn critical_map(view: &AlgebraView) -> Option<(u32, usize)> {
    let (d, k) = (view.socle_degree(), view.middle());
    if d == 0 {
        None
    } else if d % 2 == 1 {
        Some((k, view.hilbert(k)))
    } else {
        Some((k - 1, view.hilbert(k - 1)))
    }
}

fn trivial() -> OracleOutcome {
    OracleOutcome {
        verdict: Verdict::HasWlp,
        witness: Witness { certificate: Certificate::Symbolic, linear_form: None, rank: 0, dims: [0, 0] },
    }
}

/// Rank of the deciding multiplication map at `l`.
fn form_rank(view: &AlgebraView, l: &LinearForm) -> Result<(usize, [usize; 2], bool)> {
    let Some((src, full)) = critical_map(view) else {
        return Ok((0, [0, 0], true));
    };
    let m = view.mult_map_matrix(l, src)?;
    let rank = m.rank();
    let dims = [m.rows(), m.cols()];
    if view.socle_degree().is_multiple_of(2) {
        let k = view.middle();
        let surj = view.mult_map_matrix(l, k)?;
        let onto = surj.rank() == view.hilbert(k + 1);
        if onto != (rank == full) {
            return Err(Error::Spec(format!(
                "injectivity in degree {} and surjectivity in degree {k} disagree for {l}",
                k - 1
            )));
        }
    }
    Ok((rank, dims, rank == full))
}

fn given_form_check(view: &AlgebraView, l: &LinearForm) -> Result<GivenForm> {
    let (rank, dims, lefschetz) = form_rank(view, l)?;
    Ok(GivenForm { linear_form: l.clone(), rank, dims, lefschetz })
}

fn screen_forms<'a>(
    given: Option<&'a LinearForm>,
    rng: &'a mut ChaCha8Rng,
    n: usize,
) -> impl Iterator<Item = LinearForm> + 'a {
    given.cloned().into_iter().chain((0..SCREEN_DRAWS).map(move |_| LinearForm::new(random_point(rng, n))))
}

fn hessian_matrix(view: &AlgebraView) -> Result<PolyMatrix> {
    let k = view.middle();
    if view.socle_degree() % 2 == 1 {
        view.hessian(k)
    } else {
        view.mixed_hessian(k - 1, k)
    }
}

fn hessian_oracle(view: &AlgebraView, given: Option<&LinearForm>, rng: &mut ChaCha8Rng) -> Result<OracleOutcome> {
    if view.socle_degree() == 0 {
        return Ok(trivial());
    }
    let h = hessian_matrix(view)?;
    let full = h.rows().min(h.cols());
    let dims = [h.rows(), h.cols()];
    for l in screen_forms(given, rng, view.nvars()) {
        let rank = h.evaluate(l.coefficients())?.rank();
        if rank == full {
            let witness = Witness { certificate: Certificate::LinearForm, linear_form: Some(l), rank, dims };
            return Ok(OracleOutcome { verdict: Verdict::HasWlp, witness });
        }
    }
    Ok(symbolic_outcome(&h, full))
}

fn multmap_oracle(view: &AlgebraView, given: Option<&LinearForm>, rng: &mut ChaCha8Rng) -> Result<OracleOutcome> {
    let Some((src, full)) = critical_map(view) else {
        return Ok(trivial());
    };
    for l in screen_forms(given, rng, view.nvars()) {
        let (rank, dims, ok) = form_rank(view, &l)?;
        if ok {
            let witness = Witness { certificate: Certificate::LinearForm, linear_form: Some(l), rank, dims };
            return Ok(OracleOutcome { verdict: Verdict::HasWlp, witness });
        }
    }
    let generic = view.generic_mult_map(src)?;
    Ok(symbolic_outcome(&generic, full))
}

fn symbolic_outcome(m: &PolyMatrix, full: usize) -> OracleOutcome {
    let rank = m.symbolic_rank_exact();
    let verdict = if rank == full { Verdict::HasWlp } else { Verdict::NoWlp };
    OracleOutcome {
        verdict,
        witness: Witness { certificate: Certificate::Symbolic, linear_form: None, rank, dims: [m.rows(), m.cols()] },
    }
}

/// `(L-rank of the deciding map, its maximal rank)` for a specific form.
pub fn linear_form_rank(view: &AlgebraView, l: &LinearForm) -> Result<(usize, usize)> {
    let (rank, dims, _) = form_rank(view, l)?;
    Ok((rank, dims[0].min(dims[1])))
}

/// Hessian of the deciding degree evaluated at `l`.
pub fn evaluated_hessian(view: &AlgebraView, l: &LinearForm) -> Result<ExactMatrix> {
    hessian_matrix(view)?.evaluate(l.coefficients())
}
