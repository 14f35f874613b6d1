//! Numerical semigroups on four generators.

use std::fmt;

use num_integer::Integer;
use serde::Serialize;

use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(transparent)]
pub struct SemigroupSpec {
    generators: [u64; 4],
}

impl SemigroupSpec {
    /// Generators are sorted ascending; they must be positive with gcd 1.
    pub fn new(mut generators: [u64; 4]) -> Result<Self> {
        if generators.contains(&0) {
            return Err(Error::InvalidGenerators("generators must be positive".into()));
        }
        if generators.iter().fold(0u64, |g, &a| g.gcd(&a)) != 1 {
            return Err(Error::InvalidGenerators("generators must have gcd 1".into()));
        }
        generators.sort_unstable();
        Ok(Self { generators })
    }

    pub fn generators(&self) -> [u64; 4] {
        self.generators
    }

    pub fn multiplicity(&self) -> u64 {
        self.generators[0]
    }

    /// Generators that are sums of the others (the set is then not minimal).
    pub fn redundant_generators(&self) -> Vec<u64> {
        (0..4)
            .filter(|&i| {
                let g = self.generators[i];
                let others: Vec<u64> = (0..4).filter(|&j| j != i).map(|j| self.generators[j]).collect();
                // a duplicate counts as redundant once
                if (0..i).any(|j| self.generators[j] == g) {
                    return true;
                }
                let mut reach = vec![false; g as usize + 1];
                reach[0] = true;
                for n in 1..=g as usize {
                    reach[n] = others.iter().any(|&o| o as usize <= n && o != g && reach[n - o as usize]);
                }
                reach[g as usize]
            })
            .map(|i| self.generators[i])
            .collect()
    }

    /// Membership table for `0..=limit`.
    fn table(&self, limit: u64) -> Vec<bool> {
        let mut t = vec![false; limit as usize + 1];
        t[0] = true;
        for n in 1..t.len() {
            t[n] = self.generators.iter().any(|&g| g as usize <= n && t[n - g as usize]);
        }
        t
    }

    /// Table covering every Apéry element: grown until each residue class
    /// mod a₁ has a member, never beyond a₁·a₄.
    fn apery_table(&self) -> Vec<bool> {
        let a1 = self.multiplicity();
        let cap = a1 * self.generators[3];
        let mut limit = self.generators[3].max(a1);
        loop {
            let t = self.table(limit);
            let mut seen = vec![false; a1 as usize];
            for (n, &m) in t.iter().enumerate() {
                if m {
                    seen[n % a1 as usize] = true;
                }
            }
            if seen.iter().all(|&s| s) || limit >= cap {
                return t;
            }
            limit = (limit * 2).min(cap);
        }
    }
}

impl fmt::Display for SemigroupSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let g = self.generators;
        write!(f, "<{}, {}, {}, {}>", g[0], g[1], g[2], g[3])
    }
}

pub fn contains(s: &SemigroupSpec, n: i64) -> Result<bool> {
    if n < 0 {
        return Err(Error::NegativeInput(n));
    }
    Ok(s.table(n as u64)[n as usize])
}

/// Smallest member in each residue class mod a₁, sorted ascending.
pub fn apery_set(s: &SemigroupSpec) -> Vec<u64> {
    let a1 = s.multiplicity() as usize;
    let t = s.apery_table();
    let mut best: Vec<Option<u64>> = vec![None; a1];
    for (n, &m) in t.iter().enumerate() {
        if m && best[n % a1].is_none() {
            best[n % a1] = Some(n as u64);
        }
    }
    let mut ap: Vec<u64> = best.into_iter().map(|b| b.expect("every residue class is reached below a1*a4")).collect();
    ap.sort_unstable();
    ap
}

/// Orders of `0..=limit`; `None` for non-members.
fn order_table(s: &SemigroupSpec, limit: u64) -> Vec<Option<u64>> {
    let mut ord: Vec<Option<u64>> = vec![None; limit as usize + 1];
    ord[0] = Some(0);
    for n in 1..ord.len() {
        ord[n] =
            s.generators.iter().filter(|&&g| g as usize <= n).filter_map(|&g| ord[n - g as usize]).max().map(|o| o + 1);
    }
    ord
}

/// Largest number of generators summing to `n`.
pub fn order(s: &SemigroupSpec, n: i64) -> Result<u64> {
    if n < 0 {
        return Err(Error::NegativeInput(n));
    }
    order_table(s, n as u64)[n as usize].ok_or(Error::NotAMember(n as u64))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum SymmetryFailure {
    Sum,
    Order,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SymmetryWitness {
    /// 1-based index i with ωᵢ paired against ω_{a₁−i+1}.
    pub index: usize,
    pub condition: SymmetryFailure,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AperyData {
    pub generators: [u64; 4],
    pub apery: Vec<u64>,
    pub orders: Vec<u64>,
    pub m_pure_symmetric: bool,
    pub witness: Option<SymmetryWitness>,
}

pub fn apery_data(s: &SemigroupSpec) -> AperyData {
    let apery = apery_set(s);
    let top = *apery.last().expect("apery set is nonempty");
    let table = order_table(s, top);
    let orders: Vec<u64> = apery.iter().map(|&w| table[w as usize].expect("apery elements are members")).collect();
    let witness = symmetry_witness(&apery, &orders);
    AperyData { generators: s.generators, apery, orders, m_pure_symmetric: witness.is_none(), witness }
}

fn symmetry_witness(apery: &[u64], orders: &[u64]) -> Option<SymmetryWitness> {
    let n = apery.len();
    (0..n).find_map(|i| {
        let j = n - 1 - i;
        let condition = if apery[i] + apery[j] != apery[n - 1] {
            SymmetryFailure::Sum
        } else if orders[i] + orders[j] != orders[n - 1] {
            SymmetryFailure::Order
        } else {
            return None;
        };
        Some(SymmetryWitness { index: i + 1, condition })
    })
}

/// `(verdict, first violation)`.
pub fn is_m_pure_symmetric(s: &SemigroupSpec) -> (bool, Option<SymmetryWitness>) {
    let d = apery_data(s);
    (d.m_pure_symmetric, d.witness)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn spec(g: [u64; 4]) -> SemigroupSpec {
        SemigroupSpec::new(g).unwrap()
    }

    /// Membership by enumerating bounded coefficient vectors.
    fn brute_members(g: [u64; 4], limit: u64) -> Vec<bool> {
        let mut m = vec![false; limit as usize + 1];
        for l0 in 0..=limit / g[0] {
            for l1 in 0..=limit / g[1] {
                for l2 in 0..=limit / g[2] {
                    for l3 in 0..=limit / g[3] {
                        let v = l0 * g[0] + l1 * g[1] + l2 * g[2] + l3 * g[3];
                        if v <= limit {
                            m[v as usize] = true;
                        }
                    }
                }
            }
        }
        m
    }

    fn brute_apery(g: [u64; 4]) -> Vec<u64> {
        let limit = g[0] * g[3];
        let m = brute_members(g, limit);
        let mut ap: Vec<u64> =
            (0..=limit).filter(|&n| m[n as usize] && (n < g[0] || !m[(n - g[0]) as usize])).collect();
        ap.sort_unstable();
        ap
    }

    #[test]
    fn validation() {
        assert!(SemigroupSpec::new([2, 4, 6, 8]).is_err());
        assert!(SemigroupSpec::new([0, 1, 2, 3]).is_err());
        assert_eq!(spec([11, 6, 5, 4]).generators(), [4, 5, 6, 11]);
    }

    #[test]
    fn membership_examples() {
        let s = spec([4, 5, 6, 11]);
        assert!(contains(&s, 0).unwrap());
        assert!(!contains(&s, 7).unwrap());
        assert!(contains(&s, 11).unwrap());
        assert_eq!(contains(&s, -1), Err(Error::NegativeInput(-1)));
    }

    #[test]
    fn apery_examples() {
        assert_eq!(apery_set(&spec([4, 5, 6, 11])), vec![0, 5, 6, 11]);
        assert_eq!(apery_set(&spec([4, 5, 6, 7])), vec![0, 5, 6, 7]);
        assert_eq!(apery_set(&spec([2, 3, 4, 5])), vec![0, 3]);
    }

    #[test]
    fn order_examples() {
        let s = spec([4, 5, 6, 11]);
        assert_eq!(order(&s, 0).unwrap(), 0);
        assert_eq!(order(&s, 11).unwrap(), 2);
        assert_eq!(order(&s, 5).unwrap(), 1);
        assert_eq!(order(&s, 7), Err(Error::NotAMember(7)));
    }

    #[test]
    fn symmetry_examples() {
        let d = apery_data(&spec([4, 5, 6, 11]));
        assert!(d.m_pure_symmetric);
        assert_eq!(d.orders, vec![0, 1, 1, 2]);
        let (ok, w) = is_m_pure_symmetric(&spec([4, 5, 6, 7]));
        assert!(!ok);
        assert_eq!(w, Some(SymmetryWitness { index: 2, condition: SymmetryFailure::Sum }));
        assert!(is_m_pure_symmetric(&spec([2, 3, 4, 5])).0);
    }

    #[test]
    fn redundancy() {
        assert_eq!(spec([4, 5, 6, 11]).redundant_generators(), vec![11]);
        assert!(spec([4, 5, 6, 7]).redundant_generators().is_empty());
        assert_eq!(spec([3, 3, 4, 5]).redundant_generators(), vec![3]);
    }

    #[test]
    fn apery_matches_brute_force_small() {
        for a1 in 1..=8u64 {
            for a2 in a1..=30 {
                for a3 in (a2..=30).step_by(3) {
                    for a4 in (a3..=30).step_by(5) {
                        let g = [a1, a2, a3, a4];
                        let Ok(s) = SemigroupSpec::new(g) else { continue };
                        let ap = apery_set(&s);
                        assert_eq!(ap, brute_apery(g), "{g:?}");
                        assert_eq!(ap.len() as u64, a1);
                    }
                }
            }
        }
    }

    fn valid_spec() -> impl Strategy<Value = SemigroupSpec> {
        (1u64..=8, 1u64..=30, 1u64..=30, 1u64..=30)
            .prop_filter_map("gcd 1", |(a, b, c, d)| SemigroupSpec::new([a, a.max(b), a.max(c), a.max(d)]).ok())
    }

    proptest! {
        #[test]
        fn apery_invariants(s in valid_spec()) {
            let a1 = s.multiplicity();
            let ap = apery_set(&s);
            prop_assert_eq!(ap.len() as u64, a1);
            prop_assert_eq!(ap[0], 0);
            prop_assert_eq!(&ap, &brute_apery(s.generators()));
            for &w in &ap {
                prop_assert!(contains(&s, w as i64).unwrap());
                prop_assert!(w < a1 || !contains(&s, (w - a1) as i64).unwrap());
            }
        }

        #[test]
        fn order_superadditive(s in valid_spec(), m in 0i64..80, n in 0i64..80) {
            if contains(&s, m).unwrap() && contains(&s, n).unwrap() {
                prop_assert!(order(&s, m + n).unwrap() >= order(&s, m).unwrap() + order(&s, n).unwrap());
            }
        }
    }
}
