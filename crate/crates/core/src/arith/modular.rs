//! Rank modulo the Mersenne prime 2^61 - 1.
//!
//! For an integer matrix the rank modulo a prime never exceeds the rank over
//! the rationals, so a full-rank answer here certifies full rank exactly.

use num_bigint::BigInt;
use num_traits::{Signed, ToPrimitive};

const P: u64 = (1 << 61) - 1;

fn mul(a: u64, b: u64) -> u64 {
    let prod = (a as u128) * (b as u128);
    let lo = (prod as u64) & P;
    let hi = (prod >> 61) as u64;
    let s = lo + hi;
    if s >= P {
        s - P
    } else {
        s
    }
}

fn sub(a: u64, b: u64) -> u64 {
    if a >= b {
        a - b
    } else {
        a + P - b
    }
}

fn pow(mut b: u64, mut e: u64) -> u64 {
    let mut acc = 1;
    while e > 0 {
        if e & 1 == 1 {
            acc = mul(acc, b);
        }
        b = mul(b, b);
        e >>= 1;
    }
    acc
}

fn inv(a: u64) -> u64 {
    pow(a, P - 2)
}

fn reduce(x: &BigInt) -> u64 {
    let m = BigInt::from(P);
    let mut r = x % &m;
    if r.is_negative() {
        r += &m;
    }
    r.to_u64().expect("residue fits in u64")
}

pub(crate) fn rank(rows: usize, cols: usize, entries: &[BigInt]) -> usize {
    let mut a: Vec<u64> = entries.iter().map(reduce).collect();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(p) = (r..rows).find(|&i| a[i * cols + c] != 0) else { continue };
        if p != r {
            for j in 0..cols {
                a.swap(p * cols + j, r * cols + j);
            }
        }
        let pinv = inv(a[r * cols + c]);
        for i in r + 1..rows {
            let f = mul(a[i * cols + c], pinv);
            if f == 0 {
                continue;
            }
            for j in c..cols {
                let v = mul(f, a[r * cols + j]);
                a[i * cols + j] = sub(a[i * cols + j], v);
            }
        }
        r += 1;
    }
    r
}
