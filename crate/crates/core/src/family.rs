//! The six-parameter family
//! `I = (x^a, y^b - x^α z^γ, z^c, x^(a-α) y^(b-β), y^(b-β) z^(c-γ))`
//! of Gorenstein ideals in `K[x, y, z]`.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::arith::{rat, PolyMatrix};
use crate::error::{Error, Result};
use crate::poly::{Monomial, Polynomial};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct FamilyParams {
    pub a: u32,
    pub b: u32,
    pub c: u32,
    pub alpha: u32,
    pub beta: u32,
    pub gamma: u32,
}

impl FamilyParams {
    pub fn new(a: u32, b: u32, c: u32, alpha: u32, beta: u32, gamma: u32) -> Result<Self> {
        let fail = |constraint| Err(Error::InvalidParams { constraint });
        if !(1..a).contains(&alpha) {
            return fail("1 <= alpha <= a-1");
        }
        if !(1..b).contains(&beta) {
            return fail("1 <= beta <= b-1");
        }
        if !(1..c).contains(&gamma) {
            return fail("1 <= gamma <= c-1");
        }
        if alpha + gamma != b {
            return fail("alpha+gamma != b");
        }
        debug_assert!(b + 2 <= a + c);
        Ok(Self { a, b, c, alpha, beta, gamma })
    }

    pub fn tuple(&self) -> [u32; 6] {
        [self.a, self.b, self.c, self.alpha, self.beta, self.gamma]
    }

    pub fn socle_degree(&self) -> u32 {
        self.a + self.b + self.c - self.beta - 3
    }

    /// Exchange the roles of x and z.
    pub fn swap_xz(&self) -> Self {
        Self { a: self.c, b: self.b, c: self.a, alpha: self.gamma, beta: self.beta, gamma: self.alpha }
    }

    /// Same family with β replaced, if still valid.
    pub fn with_beta(&self, beta: u32) -> Result<Self> {
        Self::new(self.a, self.b, self.c, self.alpha, beta, self.gamma)
    }
}

impl fmt::Display for FamilyParams {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let [a, b, c, al, be, ga] = self.tuple();
        write!(f, "({a},{b},{c},{al},{be},{ga})")
    }
}

/// All valid parameter points with `a, b, c` in the given inclusive ranges.
pub fn enumerate(a: (u32, u32), b: (u32, u32), c: (u32, u32)) -> Vec<FamilyParams> {
    let mut out = Vec::new();
    for a in a.0.max(2)..=a.1 {
        for b in b.0.max(2)..=b.1 {
            for c in c.0.max(2)..=c.1 {
                for alpha in 1..a {
                    if alpha >= b {
                        break;
                    }
                    let gamma = b - alpha;
                    if gamma >= c {
                        continue;
                    }
                    for beta in 1..b {
                        out.push(FamilyParams { a, b, c, alpha, beta, gamma });
                    }
                }
            }
        }
    }
    out
}

pub fn validate(a: u32, b: u32, c: u32, alpha: u32, beta: u32, gamma: u32) -> Result<FamilyParams> {
    FamilyParams::new(a, b, c, alpha, beta, gamma)
}

pub fn socle_degree(p: &FamilyParams) -> u32 {
    p.socle_degree()
}

fn mono(x: u32, y: u32, z: u32) -> Polynomial {
    Polynomial::monomial(Monomial::new(&[x, y, z]))
}

/// `[x^a, y^b - x^α z^γ, z^c, x^(a-α) y^(b-β), y^(b-β) z^(c-γ)]`.
pub fn ideal_generators(p: &FamilyParams) -> Vec<Polynomial> {
    let FamilyParams { a, b, c, alpha, beta, gamma } = *p;
    vec![
        mono(a, 0, 0),
        mono(0, b, 0).sub(&mono(alpha, 0, gamma)).expect("same ring"),
        mono(0, 0, c),
        mono(a - alpha, b - beta, 0),
        mono(0, b - beta, c - gamma),
    ]
}

/// Number of terms minus one in the dual generator.
pub fn dual_terms(p: &FamilyParams) -> u32 {
    ((p.a - 1) / p.alpha).min((p.c - 1) / p.gamma)
}

/// `F = Σ_{i=0}^{m} x^(a-1-iα) y^((i+1)b-1-β) z^(c-1-iγ)`.
pub fn dual_generator(p: &FamilyParams) -> Polynomial {
    let FamilyParams { a, b, c, alpha, beta, gamma } = *p;
    let mut f = Polynomial::zero(3);
    for i in 0..=dual_terms(p) {
        f.add_term(Monomial::new(&[a - 1 - i * alpha, (i + 1) * b - 1 - beta, c - 1 - i * gamma]), rat(1));
    }
    f
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ResolutionShifts {
    pub ranks: [usize; 4],
    /// Twists of the free modules, one list per homological degree.
    pub twists: [Vec<u32>; 4],
}

pub fn resolution_shifts(p: &FamilyParams) -> ResolutionShifts {
    let FamilyParams { a, b, c, alpha, beta, gamma } = *p;
    ResolutionShifts {
        ranks: [1, 5, 5, 1],
        twists: [
            vec![0],
            vec![a, b, c, a + gamma - beta, c + alpha - beta],
            vec![a + b - beta, a + c - beta, b + c - beta, a + gamma, c + alpha],
            vec![a + b + c - beta],
        ],
    }
}

/// `binom(n, 2)` with the convention that it vanishes for `n < 2`.
fn binom2(n: i64) -> i64 {
    if n < 2 {
        0
    } else {
        n * (n - 1) / 2
    }
}

/// Dimension of `[R(-t)]_j` for three variables.
fn twisted_dim(j: i64, t: i64) -> i64 {
    binom2(j - t + 2)
}

pub fn hilbert_from_resolution(p: &FamilyParams, j: u32) -> u64 {
    let j = i64::from(j);
    let shifts = resolution_shifts(p);
    let mut h = 0i64;
    for (step, twists) in shifts.twists.iter().enumerate() {
        let s: i64 = twists.iter().map(|&t| twisted_dim(j, i64::from(t))).sum();
        h += if step % 2 == 0 { s } else { -s };
    }
    debug_assert!(h >= 0);
    h as u64
}

/// `[H(0), ..., H(D)]` from the resolution.
pub fn hilbert_vector(p: &FamilyParams) -> Vec<u64> {
    (0..=p.socle_degree()).map(|j| hilbert_from_resolution(p, j)).collect()
}

/// Hilbert function of `K[x,y,z]` modulo a regular sequence of degrees
/// `d1, d2, d3`, from the Koszul complex.
pub fn hilbert_complete_intersection(d1: u32, d2: u32, d3: u32, j: u32) -> u64 {
    let (d1, d2, d3, j) = (i64::from(d1), i64::from(d2), i64::from(d3), i64::from(j));
    let h = twisted_dim(j, 0) - twisted_dim(j, d1) - twisted_dim(j, d2) - twisted_dim(j, d3)
        + twisted_dim(j, d1 + d2)
        + twisted_dim(j, d1 + d3)
        + twisted_dim(j, d2 + d3)
        - twisted_dim(j, d1 + d2 + d3);
    h as u64
}

/// Closed-form Hilbert values available for sub-families.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum ClosedForm {
    /// `c = 2`, `a >= b`: the algebra itself at `⌊D/2⌋`.
    C2Family,
    /// `c = 2`, `a >= b`: the complete intersection `(x^a, y^b - x^(b-1) z, z^2)`.
    C2CompleteIntersection,
    /// `b = 3`, `a >= c`: the complete intersection `(x^a, y^3 - x^α z^γ, z^c)`.
    B3CompleteIntersection,
    /// `b = 3`, `β = 1`, `a >= c`: the algebra at `⌊D/2⌋`.
    B3BetaOne,
    /// `c = 3`, `a >= b - 1`: the complete intersection `(x^a, y^b - x^α z^γ, z^3)`.
    C3CompleteIntersection,
    /// `c = 3`: the algebra at `⌊D/2⌋`.
    C3Family,
}

impl ClosedForm {
    pub const ALL: [ClosedForm; 6] = [
        ClosedForm::C2Family,
        ClosedForm::C2CompleteIntersection,
        ClosedForm::B3CompleteIntersection,
        ClosedForm::B3BetaOne,
        ClosedForm::C3CompleteIntersection,
        ClosedForm::C3Family,
    ];

    pub fn name(self) -> &'static str {
        match self {
            ClosedForm::C2Family => "c2-family",
            ClosedForm::C2CompleteIntersection => "c2-complete-intersection",
            ClosedForm::B3CompleteIntersection => "b3-complete-intersection",
            ClosedForm::B3BetaOne => "b3-beta-one",
            ClosedForm::C3CompleteIntersection => "c3-complete-intersection",
            ClosedForm::C3Family => "c3-family",
        }
    }
}

/// Which Hilbert function a closed form describes.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum ClosedFormTarget {
    Algebra,
    CompleteIntersection([u32; 3]),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct ClosedFormValue {
    pub target: ClosedFormTarget,
    pub k: u32,
    pub value: u64,
    /// Set when the closed form also asserts `H(k-1) = H(k)`.
    pub value_at_k_minus_1: Option<u64>,
}

impl ClosedFormValue {
    /// The same Hilbert function evaluated independently.
    pub fn recompute(&self, p: &FamilyParams, j: u32) -> u64 {
        match self.target {
            ClosedFormTarget::Algebra => hilbert_from_resolution(p, j),
            ClosedFormTarget::CompleteIntersection([d1, d2, d3]) => hilbert_complete_intersection(d1, d2, d3, j),
        }
    }
}

pub fn hilbert_closed_form(p: &FamilyParams, which: ClosedForm) -> Result<ClosedFormValue> {
    let FamilyParams { a, b, c, alpha, beta, gamma } = *p;
    let (ai, bi, ci, be) = (i64::from(a), i64::from(b), i64::from(c), i64::from(beta));
    let na = |why: &str| Err(Error::NotApplicable(format!("{}: {why}", which.name())));
    let eq_if = |cond: bool, v: i64| cond.then_some(v as u64);
    let algebra = |value: i64, eq: bool| {
        let k = p.socle_degree() / 2;
        Ok(ClosedFormValue {
            target: ClosedFormTarget::Algebra,
            k,
            value: value as u64,
            value_at_k_minus_1: eq_if(eq, value),
        })
    };
    let ci_value = |degs: [u32; 3], k: u32, value: i64, eq: bool| {
        Ok(ClosedFormValue {
            target: ClosedFormTarget::CompleteIntersection(degs),
            k,
            value: value as u64,
            value_at_k_minus_1: eq_if(eq, value),
        })
    };
    match which {
        ClosedForm::C2Family => {
            if c != 2 || a < b {
                return na("requires c = 2 and a >= b");
            }
            let v = if be <= ai - bi { 2 * bi - be } else { ai + bi - 2 * be + 1 };
            algebra(v, be < ai - bi)
        }
        ClosedForm::C2CompleteIntersection => {
            if c != 2 || a < b {
                return na("requires c = 2 and a >= b");
            }
            let v = if a > b { 2 * bi } else { 2 * bi - 1 };
            ci_value([a, b, 2], (a + b - 1) / 2, v, a >= b + 3)
        }
        ClosedForm::B3CompleteIntersection => {
            if b != 3 || a < c {
                return na("requires b = 3 and a >= c");
            }
            let v = match a - c {
                0 => 3 * ci - 2,
                1 => 3 * ci - 1,
                _ => 3 * ci,
            };
            ci_value([a, 3, c], (a + c) / 2, v, a >= c + 4)
        }
        ClosedForm::B3BetaOne => {
            if b != 3 || beta != 1 || a < c {
                return na("requires b = 3, beta = 1 and a >= c");
            }
            let v = if a == c { 3 * ci - 3 } else { 3 * ci - 3 + i64::from(alpha) };
            algebra(v, a >= c + 3)
        }
        ClosedForm::C3CompleteIntersection => {
            if c != 3 || a + 1 < b {
                return na("requires c = 3 and a >= b-1");
            }
            let v = match ai - bi {
                -1 => 3 * bi - 4,
                0 => 3 * bi - 2,
                1 => 3 * bi - 1,
                _ => 3 * bi,
            };
            ci_value([a, b, 3], (a + b) / 2, v, a >= b + 4)
        }
        ClosedForm::C3Family => {
            if c != 3 {
                return na("requires c = 3");
            }
            let d = ai - bi;
            let v = if gamma == 1 {
                if d == 0 && be == 1 {
                    3 * bi - 3
                } else if be <= d {
                    3 * bi - be
                } else if be == d + 1 && be >= 2 {
                    3 * bi - be - 1
                } else {
                    2 * ai + bi - 3 * be + 2
                }
            } else if d == -1 && be == 1 {
                3 * bi - 4
            } else if d == 0 && be == 1 {
                3 * bi - 3
            } else if be <= d + 1 && d != 0 {
                3 * bi - 2 * be
            } else if be >= d + 2 && d + 2 >= 2 {
                ai + 2 * bi - 3 * be + 2
            } else {
                return na("gamma = 2 with a = b-1 and beta >= 2 is not covered");
            };
            algebra(v, 1 <= be && be <= d - 2)
        }
    }
}

/// The 5x5 skew-symmetric matrix of the second syzygy map, entries as
/// displayed for this family.
pub fn skew_matrix_m(p: &FamilyParams) -> PolyMatrix {
    let FamilyParams { a, b, c, alpha, beta, gamma } = *p;
    let z0 = Polynomial::zero(3);
    let yb = mono(0, b - beta, 0);
    let xa = mono(alpha, 0, 0);
    let zg = mono(0, 0, gamma);
    let ybeta = mono(0, beta, 0);
    let xr = mono(a - alpha, 0, 0);
    let zr = mono(0, 0, c - gamma);
    #[rustfmt::skip]
    let entries = vec![
        z0.clone(), yb.clone(), z0.clone(), xa.neg(), z0.clone(),
        yb.neg(), z0.clone(), zg.clone(), z0.clone(), z0.clone(),
        z0.clone(), zg.neg(), z0.clone(), ybeta.clone(), xr.neg(),
        xa, z0.clone(), ybeta.neg(), z0.clone(), zr.clone(),
        z0.clone(), z0.clone(), xr, zr.neg(), z0,
    ];
    PolyMatrix::from_entries_unchecked(5, 5, 3, entries)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PfaffianCheck {
    /// `(-1)^i Pf(M with row and column i deleted)`.
    pub signed_pfaffians: Vec<Polynomial>,
    /// Each signed Pfaffian is ± the generator it matches.
    pub pfaffians_match_generators: bool,
    /// The Pfaffian row vector times `M` vanishes.
    pub row_times_m_vanishes: bool,
}

fn pfaffian4(m: &PolyMatrix, idx: [usize; 4]) -> Polynomial {
    let e = |i: usize, j: usize| m.get(idx[i], idx[j]);
    let t = |i, j, k, l| e(i, j).multiply(e(k, l)).expect("same ring");
    t(0, 1, 2, 3).sub(&t(0, 2, 1, 3)).and_then(|s| s.add(&t(0, 3, 1, 2))).expect("same ring")
}

/// Checks that the generators are, up to sign and order, the 4x4
/// Pfaffians of the skew matrix and that they form a syzygy with it.
pub fn pfaffian_check(p: &FamilyParams) -> PfaffianCheck {
    let m = skew_matrix_m(p);
    let gens = ideal_generators(p);
    let signed: Vec<Polynomial> = (0..5)
        .map(|i| {
            let rest: Vec<usize> = (0..5).filter(|&j| j != i).collect();
            let pf = pfaffian4(&m, [rest[0], rest[1], rest[2], rest[3]]);
            if i % 2 == 0 {
                pf
            } else {
                pf.neg()
            }
        })
        .collect();
    let matches = signed.iter().all(|pf| gens.iter().any(|g| *pf == *g || *pf == g.neg()))
        && gens.iter().all(|g| signed.iter().any(|pf| *pf == *g || *pf == g.neg()));
    let vanishes = (0..5).all(|j| {
        (0..5)
            .try_fold(Polynomial::zero(3), |acc, i| acc.add(&signed[i].multiply(m.get(i, j))?))
            .map(|s| s.is_zero())
            .unwrap_or(false)
    });
    PfaffianCheck { signed_pfaffians: signed, pfaffians_match_generators: matches, row_times_m_vanishes: vanishes }
}
