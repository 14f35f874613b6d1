//! Sparse multivariate polynomials over the rationals and the contraction
//! action `x^a ∘ x^b = x^(b-a)` (zero unless `a <= b` componentwise).
//!
//! Monomials are ordered graded-lexicographically with `x > y > z`; every
//! enumeration and every printed polynomial follows that order, largest
//! monomial first.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use smallvec::SmallVec;

use crate::arith::ring::ExactRing;
use crate::arith::Rational;
use crate::error::{Error, Result};

type Exps = SmallVec<[u32; 4]>;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Monomial {
    exps: Exps,
}

impl Monomial {
    pub fn new(exps: &[u32]) -> Self {
        Self { exps: Exps::from_slice(exps) }
    }

    pub fn one(nvars: usize) -> Self {
        Self { exps: smallvec::smallvec![0; nvars] }
    }

    pub fn var(nvars: usize, i: usize) -> Self {
        let mut m = Self::one(nvars);
        m.exps[i] = 1;
        m
    }

    pub fn exponents(&self) -> &[u32] {
        &self.exps
    }

    pub fn nvars(&self) -> usize {
        self.exps.len()
    }

    pub fn degree(&self) -> u32 {
        self.exps.iter().sum()
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        debug_assert_eq!(self.nvars(), other.nvars());
        Monomial { exps: self.exps.iter().zip(&other.exps).map(|(a, b)| a + b).collect() }
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.exps.iter().zip(&other.exps).all(|(a, b)| a <= b)
    }

    /// `other / self`, when `self` divides `other`.
    pub fn contract_into(&self, other: &Monomial) -> Option<Monomial> {
        if !self.divides(other) {
            return None;
        }
        Some(Monomial { exps: self.exps.iter().zip(&other.exps).map(|(a, b)| b - a).collect() })
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree().cmp(&other.degree()).then_with(|| self.exps.cmp(&other.exps))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// All monomials of total degree `d` in `nvars` variables, largest first.
pub fn monomials_of_degree(nvars: usize, d: u32) -> Vec<Monomial> {
    fn fill(out: &mut Vec<Monomial>, prefix: &mut Exps, left: usize, d: u32) {
        if left == 1 {
            prefix.push(d);
            out.push(Monomial { exps: prefix.clone() });
            prefix.pop();
            return;
        }
        for e in (0..=d).rev() {
            prefix.push(e);
            fill(out, prefix, left - 1, d - e);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    if nvars == 0 {
        if d == 0 {
            out.push(Monomial::one(0));
        }
        return out;
    }
    fill(&mut out, &mut Exps::new(), nvars, d);
    out
}

pub(crate) fn var_name(nvars: usize, i: usize) -> String {
    const NAMES: [&str; 4] = ["x", "y", "z", "w"];
    if nvars <= 4 {
        NAMES[i].to_string()
    } else {
        format!("x{i}")
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Polynomial {
    nvars: usize,
    terms: BTreeMap<Monomial, Rational>,
}

impl Polynomial {
    pub fn zero(nvars: usize) -> Self {
        Self { nvars, terms: BTreeMap::new() }
    }

    pub fn constant(nvars: usize, c: Rational) -> Self {
        Self::term(Monomial::one(nvars), c)
    }

    pub fn one(nvars: usize) -> Self {
        Self::constant(nvars, Rational::one())
    }

    pub fn term(m: Monomial, c: Rational) -> Self {
        let mut p = Self::zero(m.nvars());
        if !c.is_zero() {
            p.terms.insert(m, c);
        }
        p
    }

    pub fn monomial(m: Monomial) -> Self {
        Self::term(m, Rational::one())
    }

    pub fn var(nvars: usize, i: usize) -> Self {
        Self::monomial(Monomial::var(nvars, i))
    }

    pub fn from_terms<I>(nvars: usize, terms: I) -> Result<Self>
    where
        I: IntoIterator<Item = (Monomial, Rational)>,
    {
        let mut p = Self::zero(nvars);
        for (m, c) in terms {
            if m.nvars() != nvars {
                return Err(Error::VarcountMismatch { left: nvars, right: m.nvars() });
            }
            p.add_term(m, c);
        }
        Ok(p)
    }

    /// Adds `c * m` in place; `m` must have the polynomial's variable count.
    pub fn add_term(&mut self, m: Monomial, c: Rational) {
        debug_assert_eq!(m.nvars(), self.nvars);
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms, largest monomial first.
    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Rational)> {
        self.terms.iter().rev()
    }

    pub fn coefficient(&self, m: &Monomial) -> Rational {
        self.terms.get(m).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn constant_term(&self) -> Rational {
        self.coefficient(&Monomial::one(self.nvars))
    }

    pub fn leading(&self) -> Option<(&Monomial, &Rational)> {
        self.terms.iter().next_back()
    }

    /// Total degree; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<u32> {
        self.terms.keys().next_back().map(Monomial::degree)
    }

    /// The common degree of all terms, if the polynomial is nonzero and
    /// homogeneous.
    pub fn homogeneous_degree(&self) -> Option<u32> {
        let d = self.degree()?;
        self.terms.keys().all(|m| m.degree() == d).then_some(d)
    }

    pub fn is_homogeneous(&self) -> bool {
        self.is_zero() || self.homogeneous_degree().is_some()
    }

    fn check(&self, other: &Polynomial) -> Result<()> {
        if self.nvars != other.nvars {
            return Err(Error::VarcountMismatch { left: self.nvars, right: other.nvars });
        }
        Ok(())
    }

    pub fn add(&self, other: &Polynomial) -> Result<Polynomial> {
        self.check(other)?;
        let mut p = self.clone();
        for (m, c) in &other.terms {
            p.add_term(m.clone(), c.clone());
        }
        Ok(p)
    }

    pub fn sub(&self, other: &Polynomial) -> Result<Polynomial> {
        self.check(other)?;
        let mut p = self.clone();
        for (m, c) in &other.terms {
            p.add_term(m.clone(), -c);
        }
        Ok(p)
    }

    pub fn neg(&self) -> Polynomial {
        Polynomial { nvars: self.nvars, terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect() }
    }

    pub fn scale(&self, s: &Rational) -> Polynomial {
        if s.is_zero() {
            return Polynomial::zero(self.nvars);
        }
        Polynomial { nvars: self.nvars, terms: self.terms.iter().map(|(m, c)| (m.clone(), c * s)).collect() }
    }

    pub fn multiply(&self, other: &Polynomial) -> Result<Polynomial> {
        self.check(other)?;
        let mut p = Polynomial::zero(self.nvars);
        for (m1, c1) in &self.terms {
            for (m2, c2) in &other.terms {
                p.add_term(m1.mul(m2), c1 * c2);
            }
        }
        Ok(p)
    }

    /// `self ∘ target`.
    pub fn contract(&self, target: &Polynomial) -> Result<Polynomial> {
        self.check(target)?;
        let mut p = Polynomial::zero(self.nvars);
        for (m1, c1) in &self.terms {
            for (m2, c2) in &target.terms {
                if let Some(q) = m1.contract_into(m2) {
                    p.add_term(q, c1 * c2);
                }
            }
        }
        Ok(p)
    }

    pub fn evaluate(&self, point: &[Rational]) -> Result<Rational> {
        if point.len() != self.nvars {
            return Err(Error::LengthMismatch { expected: self.nvars, got: point.len() });
        }
        let mut acc = Rational::zero();
        for (m, c) in &self.terms {
            let mut t = c.clone();
            for (x, &e) in point.iter().zip(m.exponents()) {
                if e > 0 {
                    t *= num_traits::pow(x.clone(), e as usize);
                }
            }
            acc += t;
        }
        Ok(acc)
    }

    /// Exact quotient `self / d`, or `None` if `d` does not divide `self`.
    pub fn div_exact(&self, d: &Polynomial) -> Option<Polynomial> {
        if self.nvars != d.nvars {
            return None;
        }
        let (dm, dc) = d.leading()?;
        let mut rem = self.clone();
        let mut q = Polynomial::zero(self.nvars);
        while let Some((rm, rc)) = rem.leading() {
            let qm = dm.contract_into(rm)?;
            let qc = rc / dc;
            let t = Polynomial::term(qm, qc);
            rem = rem.sub(&t.multiply(d).ok()?).ok()?;
            q = q.add(&t).ok()?;
        }
        Some(q)
    }

    /// Multiply by the least common multiple of the denominators, returning
    /// integer coefficients for the terms in descending order.
    pub(crate) fn integer_terms(&self) -> Vec<(Monomial, BigInt)> {
        let lcm = self.terms.values().fold(BigInt::one(), |acc, c| num_integer::Integer::lcm(&acc, c.denom()));
        self.terms().map(|(m, c)| (m.clone(), c.numer() * (&lcm / c.denom()))).collect()
    }

    pub fn parse(s: &str, nvars: usize) -> Result<Polynomial> {
        parse::parse(s, nvars)
    }
}

/// `p * q`.
pub fn multiply(p: &Polynomial, q: &Polynomial) -> Result<Polynomial> {
    p.multiply(q)
}

/// `f ∘ target` for the coefficient-free contraction.
pub fn contract(f: &Polynomial, target: &Polynomial) -> Result<Polynomial> {
    f.contract(target)
}

/// Whether `f ∘ target = 0`.
pub fn annihilates(f: &Polynomial, target: &Polynomial) -> bool {
    f.contract(target).map(|p| p.is_zero()).unwrap_or(false)
}

pub fn evaluate(p: &Polynomial, point: &[Rational]) -> Result<Rational> {
    p.evaluate(point)
}

fn fmt_rational(c: &Rational) -> String {
    if c.is_integer() {
        c.numer().to_string()
    } else {
        format!("{}/{}", c.numer(), c.denom())
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (idx, (m, c)) in self.terms().enumerate() {
            let neg = c.is_negative();
            match (idx, neg) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            let mag = c.abs();
            let vars: Vec<String> = m
                .exponents()
                .iter()
                .enumerate()
                .filter(|(_, &e)| e > 0)
                .map(|(i, &e)| {
                    let v = var_name(self.nvars, i);
                    if e == 1 {
                        v
                    } else {
                        format!("{v}^{e}")
                    }
                })
                .collect();
            if vars.is_empty() {
                write!(f, "{}", fmt_rational(&mag))?;
            } else if mag.is_one() {
                write!(f, "{}", vars.join("*"))?;
            } else {
                write!(f, "{}*{}", fmt_rational(&mag), vars.join("*"))?;
            }
        }
        Ok(())
    }
}

impl ExactRing for Polynomial {
    fn zero_like(&self) -> Self {
        Polynomial::zero(self.nvars)
    }
    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
    fn cross_div(a: &Self, b: &Self, c: &Self, d: &Self, e: &Self) -> Option<Self> {
        let num = a.multiply(b).ok()?.sub(&c.multiply(d).ok()?).ok()?;
        let q = num.div_exact(e);
        debug_assert!(q.is_some(), "inexact Bareiss division");
        q
    }
    fn neg(&self) -> Option<Self> {
        Some(Polynomial::neg(self))
    }
    fn weight(&self) -> usize {
        self.terms.len()
    }
}

/// A linear form `c_1 x_1 + ... + c_n x_n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LinearForm {
    coefficients: Vec<Rational>,
}

impl LinearForm {
    pub fn new(coefficients: Vec<Rational>) -> Self {
        Self { coefficients }
    }

    pub fn from_ints(coefficients: &[i64]) -> Self {
        Self { coefficients: coefficients.iter().map(|&c| Rational::from_integer(c.into())).collect() }
    }

    pub fn coefficients(&self) -> &[Rational] {
        &self.coefficients
    }

    pub fn nvars(&self) -> usize {
        self.coefficients.len()
    }

    pub fn is_zero(&self) -> bool {
        self.coefficients.iter().all(Zero::is_zero)
    }

    pub fn to_polynomial(&self) -> Polynomial {
        let n = self.nvars();
        let terms = self.coefficients.iter().enumerate().map(|(i, c)| (Monomial::var(n, i), c.clone()));
        Polynomial::from_terms(n, terms).expect("matching varcount")
    }
}

impl FromStr for LinearForm {
    type Err = Error;

    /// Whitespace- or comma-separated coefficients, each an integer or `p/q`.
    fn from_str(s: &str) -> Result<Self> {
        let coefficients = s
            .split(|c: char| c == ',' || c.is_whitespace())
            .filter(|t| !t.is_empty())
            .map(|t| rational_serde::parse_rational(t).ok_or_else(|| Error::Parse(format!("bad coefficient {t:?}"))))
            .collect::<Result<Vec<_>>>()?;
        Ok(Self { coefficients })
    }
}

impl fmt::Display for LinearForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_polynomial())
    }
}

/// Rationals in JSON: integers as numbers, everything else as `"p/q"`.
pub(crate) mod rational_serde {
    use super::*;
    use serde::de::Error as _;

    #[derive(Serialize, Deserialize)]
    #[serde(untagged)]
    enum Repr {
        Int(i64),
        Text(String),
    }

    pub fn to_repr(c: &Rational) -> serde_json::Value {
        if c.is_integer() {
            if let Ok(v) = i64::try_from(c.numer()) {
                return serde_json::Value::from(v);
            }
        }
        serde_json::Value::from(fmt_rational(c))
    }

    pub fn serialize_vec<S: Serializer>(v: &[Rational], s: S) -> std::result::Result<S::Ok, S::Error> {
        let reprs: Vec<serde_json::Value> = v.iter().map(to_repr).collect();
        reprs.serialize(s)
    }

    pub fn parse_rational(t: &str) -> Option<Rational> {
        let t = t.trim();
        match t.split_once('/') {
            Some((n, d)) => {
                let n: BigInt = n.trim().parse().ok()?;
                let d: BigInt = d.trim().parse().ok()?;
                if Zero::is_zero(&d) {
                    return None;
                }
                Some(Rational::new(n, d))
            }
            None => Some(Rational::from_integer(t.parse().ok()?)),
        }
    }

    pub fn deserialize_vec<'de, D: Deserializer<'de>>(d: D) -> std::result::Result<Vec<Rational>, D::Error> {
        let reprs = Vec::<Repr>::deserialize(d)?;
        reprs
            .into_iter()
            .map(|r| match r {
                Repr::Int(v) => Ok(Rational::from_integer(v.into())),
                Repr::Text(t) => parse_rational(&t).ok_or_else(|| D::Error::custom(format!("bad rational {t:?}"))),
            })
            .collect()
    }
}

/// Serialized as its display string.
impl Serialize for Polynomial {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl Serialize for LinearForm {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        rational_serde::serialize_vec(&self.coefficients, s)
    }
}

impl<'de> Deserialize<'de> for LinearForm {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        Ok(LinearForm { coefficients: rational_serde::deserialize_vec(d)? })
    }
}

mod parse {
    use super::*;

    fn var_index(name: &str, nvars: usize) -> Option<usize> {
        (0..nvars).find(|&i| var_name(nvars, i) == name)
    }

    fn parse_term(t: &str, nvars: usize) -> Result<(Monomial, Rational)> {
        let bad = || Error::Parse(format!("bad term {t:?}"));
        let mut coeff = Rational::one();
        let mut exps: Exps = smallvec::smallvec![0; nvars];
        for factor in t.split('*') {
            let factor = factor.trim();
            if factor.is_empty() {
                return Err(bad());
            }
            if factor.starts_with(|c: char| c.is_ascii_digit()) {
                coeff *= rational_serde::parse_rational(factor).ok_or_else(bad)?;
                continue;
            }
            let (name, e) = match factor.split_once('^') {
                Some((n, e)) => (n.trim(), e.trim().parse::<u32>().map_err(|_| bad())?),
                None => (factor, 1),
            };
            let i = var_index(name, nvars).ok_or_else(|| Error::Parse(format!("unknown variable {name:?}")))?;
            exps[i] += e;
        }
        Ok((Monomial { exps }, coeff))
    }

    pub(super) fn parse(s: &str, nvars: usize) -> Result<Polynomial> {
        let s = s.trim();
        if s.is_empty() {
            return Err(Error::Parse("empty polynomial".into()));
        }
        let mut p = Polynomial::zero(nvars);
        let mut sign = Rational::one();
        let mut current = String::new();
        let flush = |current: &mut String, sign: &Rational, p: &mut Polynomial| -> Result<()> {
            let t = current.trim();
            if t.is_empty() {
                return Err(Error::Parse(format!("dangling sign in {s:?}")));
            }
            let (m, c) = parse_term(t, nvars)?;
            p.add_term(m, c * sign);
            current.clear();
            Ok(())
        };
        let mut prev_sig: Option<char> = None;
        for ch in s.chars() {
            let is_binary_sign = (ch == '+' || ch == '-') && !matches!(prev_sig, Some('^') | Some('*') | Some('/'));
            if is_binary_sign {
                if prev_sig.is_none() {
                    // leading sign
                    if ch == '-' {
                        sign = -sign;
                    }
                } else {
                    flush(&mut current, &sign, &mut p)?;
                    sign = if ch == '-' { -Rational::one() } else { Rational::one() };
                }
            } else {
                current.push(ch);
            }
            if !ch.is_whitespace() {
                prev_sig = Some(ch);
            }
        }
        flush(&mut current, &sign, &mut p)?;
        Ok(p)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Polynomial {
        Polynomial::parse(s, 3).unwrap()
    }

    #[test]
    fn multiply_examples() {
        assert_eq!(p("x + y").multiply(&p("x - y")).unwrap(), p("x^2 - y^2"));
        let f = p("x^2*z + x*y^2");
        assert_eq!(Polynomial::one(3).multiply(&f).unwrap(), f);
        assert_eq!(p("y^2 - x*z").multiply(&p("y")).unwrap(), p("y^3 - x*y*z"));
        let two = Polynomial::parse("x + y", 2).unwrap();
        assert!(matches!(two.multiply(&f), Err(Error::VarcountMismatch { .. })));
    }

    #[test]
    fn contract_examples() {
        let f = p("x^2*z + x*y^2");
        assert_eq!(p("x").contract(&p("x^2*z")).unwrap(), p("x*z"));
        assert!(p("y").contract(&p("x^2*z")).unwrap().is_zero());
        assert_eq!(p("x*y").contract(&f).unwrap(), p("y"));
        // no factorial coefficients
        assert_eq!(p("x").contract(&p("x^3")).unwrap(), p("x^2"));
    }

    #[test]
    fn annihilator_examples() {
        let f = p("x^2*z + x*y^2");
        assert!(annihilates(&p("z^2"), &f));
        assert!(!annihilates(&p("x"), &f));
        assert_eq!(p("x").contract(&f).unwrap(), p("x*z + y^2"));
        assert!(annihilates(&p("y^2 - x*z"), &f));
    }

    #[test]
    fn evaluate_examples() {
        let one = Rational::one();
        let f = p("x^2*z + x*y^2");
        assert_eq!(f.evaluate(&[one.clone(), one.clone(), one.clone()]).unwrap(), Rational::from_integer(2.into()));
        let g = p("3*x^2 + 7");
        let z = vec![Rational::zero(); 3];
        assert_eq!(g.evaluate(&z).unwrap(), Rational::from_integer(7.into()));
        let pt: Vec<Rational> = [2, 0, 0].iter().map(|&v| Rational::from_integer(BigInt::from(v))).collect();
        assert_eq!(p("-x^3").evaluate(&pt).unwrap(), Rational::from_integer((-8).into()));
        assert!(matches!(g.evaluate(&pt[..2]), Err(Error::LengthMismatch { .. })));
    }

    #[test]
    fn monomial_enumeration() {
        let names =
            |v: Vec<Monomial>| -> Vec<String> { v.into_iter().map(|m| Polynomial::monomial(m).to_string()).collect() };
        assert_eq!(names(monomials_of_degree(3, 1)), ["x", "y", "z"]);
        let deg2 = names(monomials_of_degree(3, 2));
        assert_eq!(deg2.len(), 6);
        assert_eq!(&deg2[..3], ["x^2", "x*y", "x*z"]);
        assert_eq!(names(monomials_of_degree(2, 3)), ["x^3", "x^2*y", "x*y^2", "y^3"]);
        assert_eq!(monomials_of_degree(3, 5).len(), 21);
    }

    #[test]
    fn display_and_parse() {
        let f = p("x*y^2 + x^2*z");
        assert_eq!(f.to_string(), "x^2*z + x*y^2");
        assert_eq!(p("-x^3").to_string(), "-x^3");
        assert_eq!(p("1*x^2*y^0*z^1 - 3/2*x + 1").to_string(), "x^2*z - 3/2*x + 1");
        assert_eq!(Polynomial::zero(3).to_string(), "0");
        assert!(Polynomial::parse("x + q", 3).is_err());
        assert!(Polynomial::parse("x +", 3).is_err());
    }

    #[test]
    fn exact_division() {
        let a = p("x^2 - y^2");
        assert_eq!(a.div_exact(&p("x - y")).unwrap(), p("x + y"));
        assert!(p("x^2 + y^2").div_exact(&p("x - y")).is_none());
    }

    #[test]
    fn homogeneity() {
        assert_eq!(p("x^2*z + x*y^2").homogeneous_degree(), Some(3));
        assert_eq!(p("x^2 + y").homogeneous_degree(), None);
        assert!(Polynomial::zero(3).is_homogeneous());
    }
}
