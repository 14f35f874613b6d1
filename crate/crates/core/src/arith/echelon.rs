//! Incremental sparse row echelon over an integer ring.
//!
//! Rows are sorted `(column key, value)` lists. Inserting a row reduces it
//! against stored pivots by fraction-free combination, removes its content
//! and keeps it if anything survives.

use std::collections::HashMap;

use super::ring::IntRing;

pub(crate) type SparseRow<T> = Vec<(u64, T)>;

#[derive(Debug, Clone)]
pub(crate) struct SparseEchelon<T> {
    pivots: HashMap<u64, SparseRow<T>>,
}

impl<T: IntRing> SparseEchelon<T> {
    pub fn new() -> Self {
        Self { pivots: HashMap::new() }
    }

    #[cfg(test)]
    pub fn rank(&self) -> usize {
        self.pivots.len()
    }

    /// Leading keys of the stored rows.
    pub fn pivot_keys(&self) -> impl Iterator<Item = u64> + '_ {
        self.pivots.keys().copied()
    }

    /// `Some(true)` if the row was independent of the stored ones, `None` on
    /// overflow (the echelon is then unusable).
    pub fn insert(&mut self, mut row: SparseRow<T>) -> Option<bool> {
        loop {
            let Some((lead_key, lead)) = row.first().cloned() else {
                return Some(false);
            };
            match self.pivots.get(&lead_key) {
                None => {
                    normalize(&mut row);
                    self.pivots.insert(lead_key, row);
                    return Some(true);
                }
                Some(p) => {
                    let plead = p[0].1.clone();
                    row = combine(&plead, &row, &lead, p)?;
                    normalize(&mut row);
                }
            }
        }
    }
}

/// `a*x - b*y` on sparse rows.
fn combine<T: IntRing>(a: &T, x: &SparseRow<T>, b: &T, y: &SparseRow<T>) -> Option<SparseRow<T>> {
    let zero = a.zero_like();
    let mut out = Vec::with_capacity(x.len() + y.len());
    let (mut i, mut j) = (0, 0);
    while i < x.len() || j < y.len() {
        let (key, xv, yv) = match (x.get(i), y.get(j)) {
            (Some(&(kx, ref vx)), Some(&(ky, ref vy))) if kx == ky => {
                i += 1;
                j += 1;
                (kx, vx, vy)
            }
            (Some(&(kx, ref vx)), Some(&(ky, _))) if kx < ky => {
                i += 1;
                (kx, vx, &zero)
            }
            (Some(&(kx, ref vx)), None) => {
                i += 1;
                (kx, vx, &zero)
            }
            (_, Some(&(ky, ref vy))) => {
                j += 1;
                (ky, &zero, vy)
            }
            (None, None) => unreachable!(),
        };
        let v = T::combine(a, xv, b, yv)?;
        if !v.is_zero() {
            out.push((key, v));
        }
    }
    Some(out)
}

fn normalize<T: IntRing>(row: &mut SparseRow<T>) {
    let Some(first) = row.first() else { return };
    let mut g = first.1.gcd(&first.1.zero_like());
    for (_, v) in row.iter().skip(1) {
        if g.is_one() {
            break;
        }
        g = g.gcd(v);
    }
    if row[0].1.is_negative() {
        g = g.neg().expect("gcd negation");
    }
    if !g.is_one() {
        for (_, v) in row.iter_mut() {
            *v = v.div_exact(&g);
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn dependent_rows_detected() {
        let mut e = SparseEchelon::<i64>::new();
        assert_eq!(e.insert(vec![(0, 1), (2, 1)]), Some(true));
        assert_eq!(e.insert(vec![(1, 2), (2, 2)]), Some(true));
        // 2*r1 + r2
        assert_eq!(e.insert(vec![(0, 2), (1, 2), (2, 4)]), Some(false));
        assert_eq!(e.insert(vec![(2, 5)]), Some(true));
        assert_eq!(e.rank(), 3);
    }
}
