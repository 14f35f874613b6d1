use serde::Serialize;

use crate::algebra::algebra_from_dual;
use crate::family::{
    dual_generator, hilbert_vector, ideal_generators, resolution_shifts, FamilyParams, ResolutionShifts,
};
use crate::semigroup::AperyData;
use crate::wlp::{Witness, WlpReport};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AlgebraInfo {
    pub params: FamilyParams,
    pub generators: Vec<String>,
    #[serde(rename = "D")]
    pub d: u32,
    #[serde(rename = "F")]
    pub f: String,
    pub h_vector: Vec<u64>,
    /// Hilbert values from contraction ranks.
    pub h_vector_contraction: Vec<u64>,
    pub hilbert_agree: bool,
    pub resolution_shifts: ResolutionShifts,
}

pub fn algebra_info(p: &FamilyParams) -> AlgebraInfo {
    let f = dual_generator(p);
    let h = hilbert_vector(p);
    let hc = algebra_from_dual(&f).expect("family dual generators are homogeneous").hilbert_vector();
    AlgebraInfo {
        params: *p,
        generators: ideal_generators(p).iter().map(ToString::to_string).collect(),
        d: p.socle_degree(),
        f: f.to_string(),
        hilbert_agree: h == hc,
        h_vector: h,
        h_vector_contraction: hc,
        resolution_shifts: resolution_shifts(p),
    }
}

fn join<T: ToString>(v: &[T], sep: &str) -> String {
    v.iter().map(ToString::to_string).collect::<Vec<_>>().join(sep)
}

pub fn render_info(info: &AlgebraInfo) -> String {
    let mut s = String::new();
    s += &format!("params      {}\n", info.params);
    s += &format!("generators  {}\n", info.generators.join(", "));
    s += &format!("D           {}\n", info.d);
    s += &format!("F           {}\n", info.f);
    s += &format!("h-vector    ({})\n", join(&info.h_vector, ","));
    if !info.hilbert_agree {
        s += &format!("MISMATCH    contraction ranks give ({})\n", join(&info.h_vector_contraction, ","));
    }
    let t = &info.resolution_shifts.twists;
    s += &format!(
        "resolution  0 <- R <- R({{{}}}) <- R({{{}}}) <- R({}) <- 0\n",
        join(&t[1], ","),
        join(&t[2], ","),
        t[3][0]
    );
    s
}

pub fn render_apery(d: &AperyData) -> String {
    let mut s = format!("generators        {}\n", join(&d.generators, " "));
    s += &format!("apery             {{{}}}\n", join(&d.apery, ", "));
    s += &format!("orders            {}\n", join(&d.orders, " "));
    s += &format!("m_pure_symmetric  {}\n", d.m_pure_symmetric);
    if let Some(w) = &d.witness {
        let n = d.apery.len();
        let (i, j) = (w.index - 1, n - w.index);
        let what = match w.condition {
            crate::semigroup::SymmetryFailure::Sum => {
                format!("{} + {} != {}", d.apery[i], d.apery[j], d.apery[n - 1])
            }
            crate::semigroup::SymmetryFailure::Order => {
                format!("ord {} + ord {} != {}", d.apery[i], d.apery[j], d.orders[n - 1])
            }
        };
        s += &format!("witness           i={} ({})\n", w.index, what);
    }
    s
}

fn render_witness(w: &Witness) -> String {
    let form = w.linear_form.as_ref().map_or(String::new(), |l| format!(" L = {l}"));
    format!("{}{form}, rank {} of {}x{}", w.certificate, w.rank, w.dims[0], w.dims[1])
}

pub fn render_wlp(r: &WlpReport) -> String {
    let mut s = String::new();
    if let Some(p) = &r.params {
        s += &format!("params        {p}\n");
    }
    s += &format!("F             {}\n", r.f);
    s += &format!("D             {}\n", r.d);
    s += &format!("k             {}\n", r.k);
    if let Some(g) = &r.given_form {
        let state = if g.lefschetz { "is a Lefschetz element" } else { "is not a Lefschetz element" };
        s += &format!("given form    L = {} {state} (rank {} of {}x{})\n", g.linear_form, g.rank, g.dims[0], g.dims[1]);
    }
    for (name, o) in [("hessian", &r.hessian), ("multmap", &r.multmap)] {
        if let Some(o) = o {
            s += &format!("{name:<14}{} via {}\n", o.verdict, render_witness(&o.witness));
        }
    }
    if let Some(agree) = r.oracles_agree {
        s += &format!("oracles agree {agree}\n");
    }
    s += &format!("verdict       {}\n", r.verdict);
    s
}
