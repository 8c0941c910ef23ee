//! Exhaustive codeword enumeration and the MacWilliams transform.
//!
//! Messages are split by the values of their first few digits; each prefix
//! is walked by an odometer that updates the codeword by one scaled row
//! per step. Prefix results are merged in prefix order, so the outcome
//! does not depend on how rayon schedules them.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use rayon::prelude::*;

use crate::field::Field;

/// Aim for at least this many independent prefixes.
const MIN_TASKS: u64 = 64;

/// Visits every codeword sum m_i rows[i] (the zero word included) and folds
/// the visits into an accumulator.
pub fn fold_codewords<A, I, V, M>(
    field: &Field,
    rows: &[Vec<u32>],
    workers: Option<usize>,
    init: I,
    visit: V,
    merge: M,
) -> A
where
    A: Send,
    I: Fn() -> A + Sync,
    V: Fn(&mut A, &[u32]) + Sync,
    M: Fn(A, A) -> A + Sync,
{
    let k = rows.len();
    let len = rows.first().map_or(0, |r| r.len());
    let q = field.order();
    let mut t = 0usize;
    let mut tasks = 1u64;
    while t < k && tasks < MIN_TASKS {
        t += 1;
        tasks *= q;
    }
    let run = |prefix: u64| {
        let mut acc = init();
        let mut word = vec![0u32; len];
        let mut x = prefix;
        for row in &rows[..t] {
            let d = (x % q) as u32;
            x /= q;
            if d != 0 {
                axpy(field, &mut word, d, row);
            }
        }
        let tail = &rows[t..];
        let mut digits = vec![0u32; tail.len()];
        loop {
            visit(&mut acc, &word);
            // odometer step
            let mut j = 0;
            loop {
                if j == tail.len() {
                    return acc;
                }
                let old = digits[j];
                let new = if old as u64 + 1 == q { 0 } else { old + 1 };
                digits[j] = new;
                axpy(field, &mut word, field.sub(new, old), &tail[j]);
                if new != 0 {
                    break;
                }
                j += 1;
            }
        }
    };
    let go = || {
        (0..tasks)
            .into_par_iter()
            .map(run)
            .collect::<Vec<A>>()
            .into_iter()
            .reduce(&merge)
            .unwrap_or_else(&init)
    };
    match workers {
        Some(w) if w > 0 => rayon::ThreadPoolBuilder::new()
            .num_threads(w)
            .build()
            .expect("thread pool")
            .install(go),
        _ => go(),
    }
}

#[inline]
fn axpy(field: &Field, word: &mut [u32], a: u32, row: &[u32]) {
    if field.p() == 2 && a == 1 {
        for (w, &r) in word.iter_mut().zip(row) {
            *w ^= r;
        }
        return;
    }
    for (w, &r) in word.iter_mut().zip(row) {
        if r != 0 {
            *w = field.add(*w, field.mul(a, r));
        }
    }
}

/// Number of codewords of each Hamming weight 0..=len.
pub fn weight_distribution(field: &Field, rows: &[Vec<u32>], len: usize, workers: Option<usize>) -> Vec<u64> {
    fold_codewords(
        field,
        rows,
        workers,
        || vec![0u64; len + 1],
        |acc, w| acc[w.iter().filter(|&&c| c != 0).count()] += 1,
        |mut a, b| {
            for (x, y) in a.iter_mut().zip(b) {
                *x += y;
            }
            a
        },
    )
}

/// Least positive weight with a nonzero coefficient in the weight enumerator
/// of the dual of a code whose weight distribution is `dist` (length n + 1,
/// so n = dist.len() - 1), alphabet size q. None when the dual is zero.
pub fn macwilliams_min_weight(dist: &[u64], q: u64) -> Option<usize> {
    let n = dist.len() - 1;
    let total: u64 = dist.iter().sum();
    let binom = binomials(n);
    let qm1 = BigInt::from(q - 1);
    let mut pow_qm1 = vec![BigInt::one(); n + 1];
    for i in 1..=n {
        pow_qm1[i] = &pow_qm1[i - 1] * &qm1;
    }
    for i in 1..=n {
        // sum_j B_j K_i(j), K_i(j) = sum_s (-1)^s (q-1)^(i-s) C(j,s) C(n-j,i-s)
        let mut sum = BigInt::zero();
        for (j, &bj) in dist.iter().enumerate() {
            if bj == 0 {
                continue;
            }
            let mut k = BigInt::zero();
            for s in 0..=i.min(j) {
                if i - s > n - j {
                    continue;
                }
                let term = &binom[j][s] * &binom[n - j][i - s] * &pow_qm1[i - s];
                if s % 2 == 0 {
                    k += term;
                } else {
                    k -= term;
                }
            }
            sum += k * BigInt::from(bj);
        }
        debug_assert!(!sum.is_negative());
        debug_assert!((&sum % BigInt::from(total)).is_zero());
        if !sum.is_zero() {
            return Some(i);
        }
    }
    None
}

fn binomials(n: usize) -> Vec<Vec<BigInt>> {
    let mut t = vec![vec![BigInt::zero(); n + 1]; n + 1];
    for i in 0..=n {
        t[i][0] = BigInt::one();
        for j in 1..=i {
            t[i][j] = &t[i - 1][j - 1] + &t[i - 1][j];
        }
    }
    t
}
