//! Artinian Gorenstein algebras `R / Ann(F)` given by a homogeneous dual
//! generator `F`.
//!
//! Degree `d` of the algebra is modelled by the span of the contractions
//! `m ∘ F` over monomials `m` of degree `d`. A basis is the greedy prefix,
//! in a fixed monomial order, of monomials with independent contractions.

use std::collections::{BTreeSet, HashMap};
use std::sync::OnceLock;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};

use crate::arith::bareiss;
use crate::arith::echelon::{SparseEchelon, SparseRow};
use crate::arith::ring::IntRing;
use crate::arith::{ExactMatrix, PolyMatrix, Rational};
use crate::error::{Error, Result};
use crate::poly::{LinearForm, Monomial, Polynomial};

/// Order in which monomials are offered to the greedy basis selection.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub enum BasisOrder {
    /// Graded lexicographic, largest first (`x^d` leads).
    #[default]
    Grlex,
    /// Graded lexicographic, smallest first.
    ReverseGrlex,
}

#[derive(Debug)]
struct Degree {
    basis: Vec<Monomial>,
    /// Unreduced contraction rows of the basis monomials.
    rows: Vec<SparseRow<BigInt>>,
    /// Columns on which the basis rows restrict to an invertible block.
    pivots: Vec<u64>,
    keys: HashMap<Monomial, u64>,
}

#[derive(Debug)]
pub struct AlgebraView {
    f: Polynomial,
    socle: u32,
    order: BasisOrder,
    /// `F` scaled to integer coefficients.
    f_int: Vec<(Monomial, BigInt)>,
    degrees: Vec<OnceLock<Degree>>,
}

pub fn algebra_from_dual(f: &Polynomial) -> Result<AlgebraView> {
    AlgebraView::new(f.clone(), BasisOrder::Grlex)
}

impl AlgebraView {
    pub fn new(f: Polynomial, order: BasisOrder) -> Result<Self> {
        if f.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        let socle = f.homogeneous_degree().ok_or(Error::NotHomogeneous)?;
        let f_int = f.integer_terms();
        let degrees = (0..=socle).map(|_| OnceLock::new()).collect();
        Ok(Self { f, socle, order, f_int, degrees })
    }

    pub fn dual_generator(&self) -> &Polynomial {
        &self.f
    }

    pub fn socle_degree(&self) -> u32 {
        self.socle
    }

    pub fn nvars(&self) -> usize {
        self.f.nvars()
    }

    pub fn order(&self) -> BasisOrder {
        self.order
    }

    /// `⌊D/2⌋`.
    pub fn middle(&self) -> u32 {
        self.socle / 2
    }

    fn check_degree(&self, d: u32) -> Result<()> {
        if d > self.socle {
            return Err(Error::DegreeOutOfRange { degree: d as usize, max: self.socle as usize });
        }
        Ok(())
    }

    pub fn basis(&self, d: u32) -> Result<&[Monomial]> {
        self.check_degree(d)?;
        Ok(&self.degree(d).basis)
    }

    /// `dim [A]_d`; zero above the socle degree.
    pub fn hilbert(&self, d: u32) -> usize {
        if d > self.socle {
            0
        } else {
            self.degree(d).basis.len()
        }
    }

    pub fn hilbert_vector(&self) -> Vec<u64> {
        (0..=self.socle).map(|d| self.hilbert(d) as u64).collect()
    }

    fn degree(&self, d: u32) -> &Degree {
        self.degrees[d as usize].get_or_init(|| self.build_degree(d))
    }

    /// Monomials of degree `d` dividing some term of `F`, in basis order.
    fn candidates(&self, d: u32) -> Vec<Monomial> {
        fn divisors(t: &[u32], d: u32, prefix: &mut Vec<u32>, out: &mut BTreeSet<Monomial>) {
            let i = prefix.len();
            if i + 1 == t.len() {
                if d <= t[i] {
                    prefix.push(d);
                    out.insert(Monomial::new(prefix));
                    prefix.pop();
                }
                return;
            }
            let rest: u32 = t[i + 1..].iter().sum();
            for e in d.saturating_sub(rest)..=t[i].min(d) {
                prefix.push(e);
                divisors(t, d - e, prefix, out);
                prefix.pop();
            }
        }
        let mut set = BTreeSet::new();
        for (m, _) in &self.f_int {
            if self.nvars() == 0 {
                set.insert(m.clone());
            } else {
                divisors(m.exponents(), d, &mut Vec::with_capacity(self.nvars()), &mut set);
            }
        }
        match self.order {
            BasisOrder::Grlex => set.into_iter().rev().collect(),
            BasisOrder::ReverseGrlex => set.into_iter().collect(),
        }
    }

    fn build_degree(&self, d: u32) -> Degree {
        let cands = self.candidates(d);
        let mut keys = HashMap::new();
        let rows: Vec<SparseRow<BigInt>> = cands
            .iter()
            .map(|m| {
                let mut row: SparseRow<BigInt> = self
                    .f_int
                    .iter()
                    .filter_map(|(t, c)| m.contract_into(t).map(|q| (q, c)))
                    .map(|(q, c)| {
                        let next = keys.len() as u64;
                        (*keys.entry(q).or_insert(next), c.clone())
                    })
                    .collect();
                row.sort_unstable_by_key(|e| e.0);
                row
            })
            .collect();
        let (chosen, mut pivots) =
            greedy_small(&rows).unwrap_or_else(|| greedy(rows.clone()).expect("big integers never overflow"));
        pivots.sort_unstable();
        let mut basis = Vec::new();
        let mut kept = Vec::new();
        for ((m, row), keep) in cands.into_iter().zip(rows).zip(chosen) {
            if keep {
                basis.push(m);
                kept.push(row);
            }
        }
        Degree { basis, rows: kept, pivots, keys }
    }

    /// `m ∘ F`.
    pub fn contraction(&self, m: &Monomial) -> Polynomial {
        Polynomial::monomial(m.clone()).contract(&self.f).expect("same ring")
    }

    /// Matrix of the pairing `[A]_i x [A]_{D-i} -> [A]_D`, entries `(u w) ∘ F`.
    pub fn pairing_matrix(&self, i: u32) -> Result<ExactMatrix> {
        self.check_degree(i)?;
        let left = &self.degree(i).basis;
        let right = &self.degree(self.socle - i).basis;
        Ok(ExactMatrix::from_fn(left.len(), right.len(), |r, c| self.f.coefficient(&left[r].mul(&right[c]))))
    }

    pub fn hessian(&self, d: u32) -> Result<PolyMatrix> {
        if d > self.middle() {
            return Err(Error::DegreeOutOfRange { degree: d as usize, max: self.middle() as usize });
        }
        self.mixed_hessian(d, d)
    }

    /// `((u_i w_j) ∘ F)` over the bases in degrees `d` and `k`.
    pub fn mixed_hessian(&self, d: u32, k: u32) -> Result<PolyMatrix> {
        if d + k > self.socle {
            return Err(Error::DegreeOutOfRange { degree: (d + k) as usize, max: self.socle as usize });
        }
        let left = &self.degree(d).basis;
        let right = &self.degree(k).basis;
        let mut entries = Vec::with_capacity(left.len() * right.len());
        for u in left {
            for w in right {
                entries.push(self.contraction(&u.mul(w)));
            }
        }
        PolyMatrix::new(left.len(), right.len(), self.nvars(), entries)
    }

    /// Matrix of `×L : [A]_i -> [A]_{i+1}`; column `u` holds the coordinates
    /// of `(L u) ∘ F` in the contractions of the degree `i+1` basis.
    pub fn mult_map_matrix(&self, l: &LinearForm, i: u32) -> Result<ExactMatrix> {
        if i >= self.socle {
            return Err(Error::DegreeOutOfRange { degree: i as usize, max: self.socle as usize - 1 });
        }
        if l.nvars() != self.nvars() {
            return Err(Error::VarcountMismatch { left: self.nvars(), right: l.nvars() });
        }
        let src = self.degree(i);
        let dst = self.degree(i + 1);
        let (h, n) = (dst.basis.len(), src.basis.len());
        let lcm = l.coefficients().iter().fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
        let lint: Vec<BigInt> = l.coefficients().iter().map(|c| c.numer() * (&lcm / c.denom())).collect();

        // integer targets (lcm · L · u) ∘ F_int, keyed by dst columns
        let mut targets: Vec<HashMap<u64, BigInt>> = Vec::with_capacity(n);
        for u in &src.basis {
            let mut t: HashMap<u64, BigInt> = HashMap::new();
            for (v, lv) in lint.iter().enumerate() {
                if lv.is_zero() {
                    continue;
                }
                let xu = u.mul(&Monomial::var(self.nvars(), v));
                for (term, c) in &self.f_int {
                    if let Some(q) = xu.contract_into(term) {
                        let key = *dst.keys.get(&q).ok_or_else(|| {
                            Error::InconsistentSystem(format!("{q:?} outside the degree {} span", i + 1))
                        })?;
                        *t.entry(key).or_default() += lv * c;
                    }
                }
            }
            t.retain(|_, v| !v.is_zero());
            targets.push(t);
        }
        if h == 0 {
            if targets.iter().any(|t| !t.is_empty()) {
                return Err(Error::InconsistentSystem("nonzero image in a zero space".into()));
            }
            return Ok(ExactMatrix::zeros(0, n));
        }

        // B_P^T c = t_P on the pivot columns
        let col_of: HashMap<u64, usize> = dst.pivots.iter().enumerate().map(|(p, &k)| (k, p)).collect();
        let mut a = vec![BigInt::zero(); h * h];
        for (j, row) in dst.rows.iter().enumerate() {
            for (k, v) in row {
                if let Some(&p) = col_of.get(k) {
                    a[p * h + j] = v.clone();
                }
            }
        }
        let mut b = vec![BigInt::zero(); h * n];
        for (u, t) in targets.iter().enumerate() {
            for (k, v) in t {
                if let Some(&p) = col_of.get(k) {
                    b[p * n + u] = v.clone();
                }
            }
        }
        let solved = solve_small(h, &a, n, &b)
            .unwrap_or_else(|| bareiss::solve(h, &a, n, &b, BigInt::one()).expect("big integers never overflow"))
            .ok_or_else(|| Error::InconsistentSystem("basis block on pivot columns is singular".into()))?;

        // the solution must reproduce every column, not just the pivots
        for (u, t) in targets.iter().enumerate() {
            let mut acc: HashMap<u64, BigInt> = HashMap::new();
            for (j, row) in dst.rows.iter().enumerate() {
                let cj = &solved.scaled[j * n + u];
                if cj.is_zero() {
                    continue;
                }
                for (k, v) in row {
                    *acc.entry(*k).or_default() += cj * v;
                }
            }
            acc.retain(|_, v| !v.is_zero());
            let expected: HashMap<u64, BigInt> = t.iter().map(|(k, v)| (*k, v * &solved.scale)).collect();
            if acc != expected {
                return Err(Error::InconsistentSystem(format!("image of basis element {u} is not in the span")));
            }
        }
        let denom = &solved.scale * &lcm;
        Ok(ExactMatrix::from_fn(h, n, |j, u| Rational::new(solved.scaled[j * n + u].clone(), denom.clone())))
    }

    /// `Σ_v t_v M_v` with `M_v` the matrix of multiplication by the `v`-th
    /// variable: the multiplication map for a generic linear form.
    pub fn generic_mult_map(&self, i: u32) -> Result<PolyMatrix> {
        let nv = self.nvars();
        let per_var: Vec<ExactMatrix> = (0..nv)
            .map(|v| {
                let mut e = vec![0i64; nv];
                e[v] = 1;
                self.mult_map_matrix(&LinearForm::from_ints(&e), i)
            })
            .collect::<Result<_>>()?;
        let (rows, cols) = (self.hilbert(i + 1), self.hilbert(i));
        let mut entries = Vec::with_capacity(rows * cols);
        for r in 0..rows {
            for c in 0..cols {
                let terms = per_var.iter().enumerate().map(|(v, m)| (Monomial::var(nv, v), m.get(r, c).clone()));
                entries.push(Polynomial::from_terms(nv, terms)?);
            }
        }
        PolyMatrix::new(rows, cols, nv, entries)
    }

    /// The algebra with dual generator `ell ∘ F`.
    pub fn quotient_dual(&self, ell: &Polynomial) -> Result<AlgebraView> {
        let g = ell.contract(&self.f)?;
        if g.is_zero() {
            return Err(Error::ZeroContraction);
        }
        AlgebraView::new(g, self.order)
    }
}

fn greedy<T: IntRing>(rows: Vec<SparseRow<T>>) -> Option<(Vec<bool>, Vec<u64>)> {
    let mut ech = SparseEchelon::new();
    let mut chosen = Vec::with_capacity(rows.len());
    for row in rows {
        chosen.push(ech.insert(row)?);
    }
    Some((chosen, ech.pivot_keys().collect()))
}

fn greedy_small(rows: &[SparseRow<BigInt>]) -> Option<(Vec<bool>, Vec<u64>)> {
    let small: Option<Vec<SparseRow<i64>>> =
        rows.iter().map(|r| r.iter().map(|(k, v)| v.to_i64().map(|v| (*k, v))).collect()).collect();
    greedy(small?)
}

fn solve_small(h: usize, a: &[BigInt], n: usize, b: &[BigInt]) -> Option<Option<bareiss::Solved<BigInt>>> {
    let a: Vec<i64> = a.iter().map(ToPrimitive::to_i64).collect::<Option<_>>()?;
    let b: Vec<i64> = b.iter().map(ToPrimitive::to_i64).collect::<Option<_>>()?;
    let s = bareiss::solve(h, &a, n, &b, 1i64)?;
    Some(s.map(|s| bareiss::Solved {
        scale: BigInt::from(s.scale),
        scaled: s.scaled.into_iter().map(BigInt::from).collect(),
    }))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::rat;
    use crate::family::{dual_generator, hilbert_vector, FamilyParams};

    fn p(s: &str) -> Polynomial {
        Polynomial::parse(s, 3).unwrap()
    }

    fn view(s: &str) -> AlgebraView {
        algebra_from_dual(&p(s)).unwrap()
    }

    #[test]
    fn hilbert_examples() {
        assert_eq!(view("x^2*z + x*y^2").hilbert_vector(), vec![1, 3, 3, 1]);
        assert_eq!(view("x^5").hilbert_vector(), vec![1; 6]);
        let fp = FamilyParams::new(4, 3, 2, 2, 1, 1).unwrap();
        let v = algebra_from_dual(&dual_generator(&fp)).unwrap();
        assert_eq!(v.hilbert_vector(), hilbert_vector(&fp));
    }

    #[test]
    fn rejects_bad_duals() {
        assert_eq!(algebra_from_dual(&p("x^2 + y")).unwrap_err(), Error::NotHomogeneous);
        assert_eq!(algebra_from_dual(&p("0")).unwrap_err(), Error::ZeroPolynomial);
    }

    #[test]
    fn rational_coefficients() {
        let v = algebra_from_dual(&p("1/2*x^2*z - 3/4*x*y^2")).unwrap();
        assert_eq!(v.hilbert_vector(), vec![1, 3, 3, 1]);
        let m = v.mult_map_matrix(&LinearForm::from_ints(&[1, 1, 1]), 1).unwrap();
        assert_eq!(m.rank(), 3);
    }

    #[test]
    fn hessian_example() {
        let v = view("x^2*z + x*y^2");
        assert_eq!(v.basis(1).unwrap(), &[Monomial::var(3, 0), Monomial::var(3, 1), Monomial::var(3, 2)]);
        let h = v.hessian(1).unwrap();
        let expect: Vec<Polynomial> = ["z", "y", "x", "y", "x", "0", "x", "0", "0"].iter().map(|s| p(s)).collect();
        assert_eq!(h.entries(), &expect[..]);
        assert_eq!(h.determinant().unwrap(), p("-x^3"));
        assert_eq!(v.hessian(0).unwrap().entries(), &[p("x^2*z + x*y^2")]);
        assert!(v.hessian(2).is_err());
    }

    #[test]
    fn mixed_hessian_examples() {
        let fp = FamilyParams::new(2, 2, 2, 1, 1, 1).unwrap();
        let v = algebra_from_dual(&dual_generator(&fp)).unwrap();
        assert_eq!(v.hilbert_vector(), vec![1, 3, 1]);
        let m = v.mixed_hessian(0, 1).unwrap();
        assert_eq!((m.rows(), m.cols()), (1, 3));
        assert_eq!(m.symbolic_rank(), 1);
        assert_eq!(v.mixed_hessian(1, 1).unwrap(), v.hessian(1).unwrap());
        assert!(v.mixed_hessian(2, 1).is_err());
    }

    #[test]
    fn pairing_examples() {
        let v = view("x^2*z + x*y^2");
        for i in 0..=3 {
            let m = v.pairing_matrix(i).unwrap();
            assert_eq!(m.rank(), m.rows());
        }
        assert_eq!(v.pairing_matrix(1).unwrap().transpose(), v.pairing_matrix(2).unwrap());
        assert!(v.pairing_matrix(4).is_err());
    }

    #[test]
    fn mult_map_examples() {
        let v = view("x^2*z + x*y^2");
        assert!(v.mult_map_matrix(&LinearForm::from_ints(&[0, 0, 0]), 1).unwrap().is_zero());
        assert_eq!(v.mult_map_matrix(&LinearForm::from_ints(&[1, 1, 1]), 1).unwrap().rank(), 3);
        assert!(v.mult_map_matrix(&LinearForm::from_ints(&[1, 1, 1]), 3).is_err());
        // x: A_0 -> A_1 sends 1 to the class of x, the first basis element
        let m = v.mult_map_matrix(&LinearForm::from_ints(&[1, 0, 0]), 0).unwrap();
        assert_eq!(m.entries(), &[rat(1), rat(0), rat(0)]);
    }

    #[test]
    fn generic_mult_map_is_linear() {
        let v = view("x^2*z + x*y^2");
        let g = v.generic_mult_map(1).unwrap();
        let l = LinearForm::from_ints(&[2, -3, 5]);
        assert_eq!(g.evaluate(l.coefficients()).unwrap(), v.mult_map_matrix(&l, 1).unwrap());
    }

    #[test]
    fn quotient_examples() {
        let fp = FamilyParams::new(6, 4, 3, 2, 1, 2).unwrap();
        let v = algebra_from_dual(&dual_generator(&fp)).unwrap();
        let q = v.quotient_dual(&p("y")).unwrap();
        assert_eq!(q.dual_generator(), &dual_generator(&fp.with_beta(2).unwrap()));
        assert_eq!(q.socle_degree(), v.socle_degree() - 1);
        assert_eq!(v.quotient_dual(&p("1")).unwrap().dual_generator(), v.dual_generator());
        assert_eq!(v.quotient_dual(&p("x^6")).unwrap_err(), Error::ZeroContraction);
    }

    #[test]
    fn basis_order_does_not_change_ranks() {
        let fp = FamilyParams::new(5, 4, 3, 2, 1, 2).unwrap();
        let f = dual_generator(&fp);
        let a = AlgebraView::new(f.clone(), BasisOrder::Grlex).unwrap();
        let b = AlgebraView::new(f, BasisOrder::ReverseGrlex).unwrap();
        assert_eq!(a.hilbert_vector(), b.hilbert_vector());
        assert_ne!(a.basis(2).unwrap(), b.basis(2).unwrap());
        for d in 0..=a.middle() {
            assert_eq!(a.hessian(d).unwrap().symbolic_rank(), b.hessian(d).unwrap().symbolic_rank());
        }
    }
}
