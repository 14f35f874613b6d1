use std::fmt;
use std::io::Write;
use std::str::FromStr;
use std::time::Instant;

use rayon::prelude::*;
use serde::Serialize;

use crate::algebra::algebra_from_dual;
use crate::error::{Error, Result};
use crate::family::{dual_generator, enumerate, hilbert_closed_form, hilbert_vector, ClosedForm, FamilyParams};
use crate::wlp::{point_seed, wlp_check, Method, Verdict, WlpOptions};

pub const DEFAULT_MAX_BOUND: u32 = 14;

/// Inclusive integer interval.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Range {
    pub lo: u32,
    pub hi: u32,
}

impl Range {
    pub fn new(lo: u32, hi: u32) -> Result<Self> {
        if lo > hi {
            return Err(Error::Parse(format!("empty range {lo}:{hi}")));
        }
        Ok(Self { lo, hi })
    }
}

impl FromStr for Range {
    type Err = Error;

    /// `lo:hi` or a single value.
    fn from_str(s: &str) -> Result<Self> {
        let num = |t: &str| t.trim().parse::<u32>().map_err(|_| Error::Parse(format!("bad range {s:?}")));
        match s.split_once(':') {
            Some((lo, hi)) => Range::new(num(lo)?, num(hi)?),
            None => {
                let v = num(s)?;
                Range::new(v, v)
            }
        }
    }
}

impl fmt::Display for Range {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:{}", self.lo, self.hi)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SweepSpec {
    pub a: Range,
    pub b: Range,
    pub c: Range,
    /// Keep only points with `min(a, b, c)` equal to this.
    pub min_eq: Option<u32>,
    /// Keep only points with `a >= c`.
    pub a_ge_c: bool,
    pub method: Method,
    pub seed: u64,
    pub max_bound: u32,
}

impl SweepSpec {
    pub fn new(a: Range, b: Range, c: Range) -> Self {
        Self { a, b, c, min_eq: None, a_ge_c: false, method: Method::Both, seed: 0, max_bound: DEFAULT_MAX_BOUND }
    }

    pub fn validate(&self) -> Result<()> {
        for (name, r) in [("a", self.a), ("b", self.b), ("c", self.c)] {
            if r.hi > self.max_bound {
                return Err(Error::Spec(format!("{name} range {r} exceeds the bound {}", self.max_bound)));
            }
        }
        Ok(())
    }

    /// Valid points in parameter-tuple order.
    pub fn points(&self) -> Vec<FamilyParams> {
        let mut pts: Vec<FamilyParams> =
            enumerate((self.a.lo, self.a.hi), (self.b.lo, self.b.hi), (self.c.lo, self.c.hi))
                .into_iter()
                .filter(|p| self.min_eq.is_none_or(|m| p.a.min(p.b).min(p.c) == m))
                .filter(|p| !self.a_ge_c || p.a >= p.c)
                .collect();
        pts.sort_by_key(FamilyParams::tuple);
        pts
    }
}

/// Points where the WLP is asserted: the smallest of `a, b, c` is 2 or 3.
pub fn in_assertion_region(p: &FamilyParams) -> bool {
    matches!(p.a.min(p.b).min(p.c), 2 | 3)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SweepRow {
    pub params: FamilyParams,
    #[serde(rename = "D")]
    pub d: u32,
    pub k: u32,
    pub verdict: Verdict,
    pub method: Method,
    pub oracles_agree: Option<bool>,
    pub h_vector: Vec<u64>,
    /// Resolution and contraction-rank Hilbert functions coincide.
    pub hilbert_agree: bool,
    /// Every applicable closed form reproduces its Hilbert value.
    pub closed_forms_agree: bool,
    pub elapsed_ms: u64,
}

pub fn sweep_point(p: &FamilyParams, method: Method, seed: u64) -> Result<SweepRow> {
    let start = Instant::now();
    let view = algebra_from_dual(&dual_generator(p))?;
    let h = hilbert_vector(p);
    let hilbert_agree = view.hilbert_vector() == h;
    let closed_forms_agree = ClosedForm::ALL.iter().all(|&w| match hilbert_closed_form(p, w) {
        Ok(v) => v.recompute(p, v.k) == v.value && v.value_at_k_minus_1.is_none_or(|x| v.recompute(p, v.k - 1) == x),
        Err(_) => true,
    });
    let opts = WlpOptions { method, linear_form: None, seed: point_seed(seed, p) };
    let r = wlp_check(&view, Some(*p), &opts)?;
    Ok(SweepRow {
        params: *p,
        d: r.d,
        k: r.k,
        verdict: r.verdict,
        method,
        oracles_agree: r.oracles_agree,
        h_vector: h,
        hilbert_agree,
        closed_forms_agree,
        elapsed_ms: start.elapsed().as_millis() as u64,
    })
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct SweepSummary {
    pub points: usize,
    pub has_wlp: usize,
    pub no_wlp: usize,
    pub oracle_disagreements: usize,
    pub hilbert_mismatches: usize,
    pub closed_form_mismatches: usize,
    pub assertion_region_points: usize,
    /// Points in the assertion region without the WLP.
    pub assertion_violations: Vec<FamilyParams>,
}

impl SweepSummary {
    pub fn from_rows(rows: &[SweepRow]) -> Self {
        let mut s = SweepSummary { points: rows.len(), ..Default::default() };
        for r in rows {
            match r.verdict {
                Verdict::HasWlp => s.has_wlp += 1,
                Verdict::NoWlp => s.no_wlp += 1,
            }
            s.oracle_disagreements += usize::from(r.oracles_agree == Some(false));
            s.hilbert_mismatches += usize::from(!r.hilbert_agree);
            s.closed_form_mismatches += usize::from(!r.closed_forms_agree);
            if in_assertion_region(&r.params) {
                s.assertion_region_points += 1;
                if r.verdict == Verdict::NoWlp {
                    s.assertion_violations.push(r.params);
                }
            }
        }
        s
    }

    pub fn passed(&self) -> bool {
        self.assertion_violations.is_empty()
            && self.oracle_disagreements == 0
            && self.hilbert_mismatches == 0
            && self.closed_form_mismatches == 0
    }
}

impl fmt::Display for SweepSummary {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "points                  {}", self.points)?;
        writeln!(f, "has-wlp                 {}", self.has_wlp)?;
        writeln!(f, "no-wlp                  {}", self.no_wlp)?;
        writeln!(f, "oracle disagreements    {}", self.oracle_disagreements)?;
        writeln!(f, "hilbert mismatches      {}", self.hilbert_mismatches)?;
        writeln!(f, "closed-form mismatches  {}", self.closed_form_mismatches)?;
        writeln!(f, "assertion-region points {}", self.assertion_region_points)?;
        for p in &self.assertion_violations {
            writeln!(f, "VIOLATION               {p} has no WLP although min(a,b,c) <= 3")?;
        }
        Ok(())
    }
}

pub fn run_sweep(spec: &SweepSpec) -> Result<(Vec<SweepRow>, SweepSummary)> {
    spec.validate()?;
    let pts = spec.points();
    let rows: Vec<SweepRow> =
        super::with_pool(|| pts.par_iter().map(|p| sweep_point(p, spec.method, spec.seed)).collect::<Result<_>>())?;
    let summary = SweepSummary::from_rows(&rows);
    Ok((rows, summary))
}

pub const CSV_HEADER: [&str; 13] =
    ["a", "b", "c", "alpha", "beta", "gamma", "D", "k", "verdict", "method", "oracles_agree", "h_vector", "elapsed_ms"];

pub fn write_csv<W: Write>(rows: &[SweepRow], out: W) -> Result<()> {
    let io = |e: csv::Error| Error::Spec(format!("csv: {e}"));
    let mut w = csv::Writer::from_writer(out);
    w.write_record(CSV_HEADER).map_err(io)?;
    for r in rows {
        let mut rec: Vec<String> = r.params.tuple().iter().map(ToString::to_string).collect();
        rec.push(r.d.to_string());
        rec.push(r.k.to_string());
        rec.push(r.verdict.to_string());
        rec.push(r.method.to_string());
        rec.push(r.oracles_agree.map_or(String::new(), |b| b.to_string()));
        rec.push(r.h_vector.iter().map(ToString::to_string).collect::<Vec<_>>().join(" "));
        rec.push(r.elapsed_ms.to_string());
        w.write_record(&rec).map_err(io)?;
    }
    w.flush().map_err(|e| Error::Spec(format!("csv: {e}")))?;
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn range_parsing() {
        assert_eq!("2:12".parse::<Range>().unwrap(), Range { lo: 2, hi: 12 });
        assert_eq!("5".parse::<Range>().unwrap(), Range { lo: 5, hi: 5 });
        assert!("7:3".parse::<Range>().is_err());
        assert!("x".parse::<Range>().is_err());
    }

    #[test]
    fn bound_guard() {
        let s = SweepSpec::new(Range::new(2, 15).unwrap(), Range::new(2, 3).unwrap(), Range::new(2, 3).unwrap());
        assert!(s.validate().is_err());
    }

    #[test]
    fn small_sweep() {
        let mut s = SweepSpec::new(Range::new(2, 6).unwrap(), Range::new(2, 2).unwrap(), Range::new(2, 6).unwrap());
        s.a_ge_c = true;
        let (rows, sum) = run_sweep(&s).unwrap();
        assert_eq!(rows.len(), 15);
        assert!(sum.passed());
        assert_eq!(sum.has_wlp, 15);
        let mut buf = Vec::new();
        write_csv(&rows, &mut buf).unwrap();
        let text = String::from_utf8(buf).unwrap();
        assert!(text.starts_with("a,b,c,alpha,beta,gamma,D,k,verdict,method,oracles_agree,h_vector,elapsed_ms\n"));
        assert_eq!(text.lines().count(), 16);
    }
}
