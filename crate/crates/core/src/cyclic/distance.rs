//! Minimum Hamming distance of cyclic codes: exact enumeration, dual
//! enumeration plus MacWilliams, the BCH bound, and a randomized upper
//! bound.

use std::fmt;
use std::str::FromStr;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Serialize, Serializer};

use super::enumerate::{macwilliams_min_weight, weight_distribution};
use super::{CyclicCode, SplittingField};
use crate::error::{Error, Result};
use crate::field::gcd_u64;
use crate::linalg::RowSpace;

pub const DEFAULT_BUDGET: u64 = 1 << 24;
pub const DEFAULT_MC_SAMPLES: u64 = 100_000;

/// A weight or distance; the zero code has distance +inf.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Distance {
    Finite(u64),
    Infinite,
}

impl Distance {
    pub fn finite(self) -> Option<u64> {
        match self {
            Distance::Finite(d) => Some(d),
            Distance::Infinite => None,
        }
    }

    pub fn is_infinite(self) -> bool {
        self == Distance::Infinite
    }

    pub fn add(self, other: Distance) -> Distance {
        match (self, other) {
            (Distance::Finite(a), Distance::Finite(b)) => Distance::Finite(a + b),
            _ => Distance::Infinite,
        }
    }

    pub fn scale(self, c: u64) -> Distance {
        match self {
            Distance::Finite(a) => Distance::Finite(a * c),
            Distance::Infinite if c == 0 => Distance::Finite(0),
            Distance::Infinite => Distance::Infinite,
        }
    }

    /// Ceiling division by a positive integer.
    pub fn div_ceil(self, c: u64) -> Distance {
        match self {
            Distance::Finite(a) => Distance::Finite(a.div_ceil(c)),
            Distance::Infinite => Distance::Infinite,
        }
    }
}

impl fmt::Display for Distance {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Distance::Finite(d) => write!(f, "{d}"),
            Distance::Infinite => f.write_str("inf"),
        }
    }
}

impl Serialize for Distance {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        match self {
            Distance::Finite(d) => s.serialize_u64(*d),
            Distance::Infinite => s.serialize_str("inf"),
        }
    }
}

/// How a distance bound was obtained.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Method {
    ExactEnumeration,
    DualEnumeration,
    Bch,
    MonteCarlo,
    /// BCH lower bound paired with a randomized upper bound.
    #[serde(rename = "bch+monte-carlo")]
    BchMonteCarlo,
    ZeroCode,
}

impl Method {
    pub fn label(self) -> &'static str {
        match self {
            Method::ExactEnumeration => "exact-enumeration",
            Method::DualEnumeration => "dual-enumeration",
            Method::Bch => "bch",
            Method::MonteCarlo => "monte-carlo",
            Method::BchMonteCarlo => "bch+monte-carlo",
            Method::ZeroCode => "zero-code",
        }
    }

    /// Methods whose result is the true distance.
    pub fn is_exact(self) -> bool {
        matches!(
            self,
            Method::ExactEnumeration | Method::DualEnumeration | Method::ZeroCode
        )
    }
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.label())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct DistanceBound {
    pub lower: Distance,
    pub upper: Distance,
    pub method: Method,
}

impl DistanceBound {
    pub fn exact(d: u64, method: Method) -> DistanceBound {
        DistanceBound {
            lower: Distance::Finite(d),
            upper: Distance::Finite(d),
            method,
        }
    }

    pub fn zero_code() -> DistanceBound {
        DistanceBound {
            lower: Distance::Infinite,
            upper: Distance::Infinite,
            method: Method::ZeroCode,
        }
    }

    pub fn is_exact(&self) -> bool {
        self.method.is_exact()
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum Strategy {
    #[default]
    Auto,
    Exact,
    DualExact,
    Bch,
    MonteCarlo,
}

impl FromStr for Strategy {
    type Err = Error;

    fn from_str(s: &str) -> Result<Strategy> {
        Ok(match s {
            "auto" => Strategy::Auto,
            "exact" => Strategy::Exact,
            "dual-exact" => Strategy::DualExact,
            "bch" => Strategy::Bch,
            "monte-carlo" => Strategy::MonteCarlo,
            _ => return Err(Error::Parse(format!("unknown distance strategy {s:?}"))),
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct DistanceOptions {
    /// Most codewords any exact strategy may enumerate.
    pub budget: u64,
    pub mc_samples: u64,
    pub seed: u64,
    /// Worker threads for enumeration; None uses the global pool.
    pub workers: Option<usize>,
}

impl Default for DistanceOptions {
    fn default() -> Self {
        DistanceOptions {
            budget: DEFAULT_BUDGET,
            mc_samples: DEFAULT_MC_SAMPLES,
            seed: 0,
            workers: None,
        }
    }
}

/// q^k, saturating.
pub(crate) fn space_size(q: u64, k: usize) -> u128 {
    (q as u128).checked_pow(k as u32).unwrap_or(u128::MAX)
}

pub fn min_distance(code: &CyclicCode, strategy: Strategy, opts: &DistanceOptions) -> Result<DistanceBound> {
    if code.is_zero_code() {
        return Ok(DistanceBound::zero_code());
    }
    let q = code.field().order();
    let dim = code.dimension();
    let codim = code.n() - dim;
    let within = |k: usize| space_size(q, k) <= opts.budget as u128;
    let exceeded = |k: usize| Error::BudgetExceeded {
        needed: space_size(q, k),
        budget: opts.budget,
    };
    match strategy {
        Strategy::Exact if !within(dim) => Err(exceeded(dim)),
        Strategy::DualExact if !within(codim) => Err(exceeded(codim)),
        Strategy::Exact => Ok(exact(code, opts)),
        Strategy::DualExact => Ok(dual_exact(code, opts)),
        Strategy::Bch => Ok(DistanceBound {
            lower: Distance::Finite(bch_bound(code)),
            upper: Distance::Infinite,
            method: Method::Bch,
        }),
        Strategy::MonteCarlo => Ok(DistanceBound {
            lower: Distance::Finite(1),
            upper: Distance::Finite(monte_carlo_upper(code, opts)),
            method: Method::MonteCarlo,
        }),
        Strategy::Auto if within(dim) => Ok(exact(code, opts)),
        Strategy::Auto if within(codim) => Ok(dual_exact(code, opts)),
        Strategy::Auto => {
            let lo = bch_bound(code);
            let hi = monte_carlo_upper(code, opts);
            debug_assert!(lo <= hi);
            Ok(DistanceBound {
                lower: Distance::Finite(lo),
                upper: Distance::Finite(hi),
                method: Method::BchMonteCarlo,
            })
        }
    }
}

fn exact(code: &CyclicCode, opts: &DistanceOptions) -> DistanceBound {
    let dist = weight_distribution(code.field(), &code.generator_rows(), code.n(), opts.workers);
    let d = (1..dist.len()).find(|&w| dist[w] > 0).expect("nonzero code") as u64;
    DistanceBound::exact(d, Method::ExactEnumeration)
}

fn dual_exact(code: &CyclicCode, opts: &DistanceOptions) -> DistanceBound {
    let dual = code.dual();
    let dist = weight_distribution(code.field(), &dual.generator_rows(), code.n(), opts.workers);
    let d = macwilliams_min_weight(&dist, code.field().order()).expect("nonzero code") as u64;
    DistanceBound::exact(d, Method::DualEnumeration)
}

/// delta = 1 + the longest run b, b+a, ..., b+(l-1)a (mod n) of root
/// exponents, over all starts b and steps a coprime to n. Falls back to 1
/// when the splitting field exceeds the supported field size.
pub fn bch_bound(code: &CyclicCode) -> u64 {
    let n = code.n();
    let Ok(sf) = SplittingField::new(code.field(), n) else {
        return 1;
    };
    let mut is_root = vec![false; n];
    for e in sf.root_exponents(code.generator()) {
        is_root[e] = true;
    }
    longest_progression(&is_root) as u64 + 1
}

/// Longest cyclic arithmetic progression inside the marked set, steps
/// coprime to n. The set must not be everything.
pub(crate) fn longest_progression(marked: &[bool]) -> usize {
    let n = marked.len();
    if !marked.contains(&true) {
        return 0;
    }
    let mut best = 0;
    for a in 1..n.max(2) {
        if gcd_u64(a as u64, n as u64) != 1 {
            continue;
        }
        // walk the single cycle 0, a, 2a, ... starting at an unmarked point
        let Some(start) = (0..n).find(|&i| !marked[(i * a) % n]) else {
            return n;
        };
        let mut run = 0;
        for k in 1..=n {
            if marked[((start + k) * a) % n] {
                run += 1;
                best = best.max(run);
            } else {
                run = 0;
            }
        }
    }
    best
}

/// Randomized information-set search: each round row-reduces the generator
/// matrix under a random column order and scores every basis row and every
/// pair of rows. Every scored word is a nonzero codeword, so the minimum
/// is an upper bound on the distance.
fn monte_carlo_upper(code: &CyclicCode, opts: &DistanceOptions) -> u64 {
    let field = code.field();
    let n = code.n();
    let rows = code.generator_rows();
    let weight = |v: &[u32]| v.iter().filter(|&&c| c != 0).count() as u64;
    let mut best = code.generator().weight() as u64;
    let mut rng = ChaCha8Rng::seed_from_u64(opts.seed);
    let mut scored = 0u64;
    let mut perm: Vec<usize> = (0..n).collect();
    let q = field.order();
    while scored < opts.mc_samples {
        perm.shuffle(&mut rng);
        let permuted: Vec<Vec<u32>> = rows.iter().map(|r| perm.iter().map(|&j| r[j]).collect()).collect();
        let basis = RowSpace::from_rows(field, n, &permuted).basis().to_vec();
        for b in &basis {
            best = best.min(weight(b));
        }
        scored += basis.len() as u64;
        'pairs: for i in 0..basis.len() {
            for j in i + 1..basis.len() {
                if scored >= opts.mc_samples {
                    break 'pairs;
                }
                let alpha = if q == 2 { 1 } else { rng.gen_range(1..q) as u32 };
                let w = basis[i]
                    .iter()
                    .zip(&basis[j])
                    .filter(|(&x, &y)| field.add(x, field.mul(alpha, y)) != 0)
                    .count() as u64;
                best = best.min(w);
                scored += 1;
            }
        }
        if basis.len() == 1 {
            break;
        }
    }
    best
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::Field;
    use crate::poly::{divisors_of_xn_minus_1, Poly};

    fn code(p: u64, text: &str, n: usize) -> CyclicCode {
        let f = Field::new(p, 1).unwrap();
        CyclicCode::new(&Poly::parse(&f, text).unwrap(), n).unwrap()
    }

    #[test]
    fn hamming_code_distance() {
        let c = code(2, "x^3 + x + 1", 7);
        let opts = DistanceOptions::default();
        for s in [Strategy::Exact, Strategy::DualExact, Strategy::Auto] {
            let b = min_distance(&c, s, &opts).unwrap();
            assert_eq!((b.lower, b.upper), (Distance::Finite(3), Distance::Finite(3)));
        }
        assert_eq!(bch_bound(&c), 3);
        let mc = min_distance(&c, Strategy::MonteCarlo, &opts).unwrap();
        assert_eq!(mc.upper, Distance::Finite(3));
    }

    #[test]
    fn repetition_full_and_zero_codes() {
        let opts = DistanceOptions::default();
        let rep = code(2, "x^6+x^5+x^4+x^3+x^2+x+1", 7);
        assert_eq!(
            min_distance(&rep, Strategy::Auto, &opts).unwrap().lower,
            Distance::Finite(7)
        );
        let full = code(2, "1", 7);
        let b = min_distance(&full, Strategy::Exact, &opts).unwrap();
        assert_eq!(b, DistanceBound::exact(1, Method::ExactEnumeration));
        assert_eq!(
            min_distance(&full, Strategy::DualExact, &opts).unwrap().lower,
            Distance::Finite(1)
        );
        let zero = code(2, "x^7 + 1", 7);
        assert_eq!(
            min_distance(&zero, Strategy::Auto, &opts).unwrap(),
            DistanceBound::zero_code()
        );
    }

    #[test]
    fn forced_exact_respects_budget() {
        let c = code(2, "x + 1", 31);
        let opts = DistanceOptions {
            budget: 1 << 10,
            ..Default::default()
        };
        assert!(matches!(
            min_distance(&c, Strategy::Exact, &opts),
            Err(Error::BudgetExceeded { .. })
        ));
        // auto falls back to the dual
        let b = min_distance(&c, Strategy::Auto, &opts).unwrap();
        assert_eq!(b, DistanceBound::exact(2, Method::DualEnumeration));
    }

    #[test]
    fn progression_search() {
        let mut m = vec![false; 15];
        for e in [1, 2, 4, 8] {
            m[e] = true;
        }
        assert_eq!(longest_progression(&m), 2);
        for e in [3, 6, 9, 12] {
            m[e] = true;
        }
        // 1,2,3,4 consecutive
        assert_eq!(longest_progression(&m), 4);
        // step 2 finds 1, 3, 5
        let mut s = vec![false; 7];
        for e in [1, 3, 5] {
            s[e] = true;
        }
        assert_eq!(longest_progression(&s), 3);
    }

    #[test]
    fn bounds_sandwich_exact_for_all_small_divisors() {
        let opts = DistanceOptions {
            mc_samples: 2_000,
            ..Default::default()
        };
        for (p, n) in [
            (2u64, 7usize),
            (2, 9),
            (2, 15),
            (2, 17),
            (2, 21),
            (3, 8),
            (3, 11),
            (3, 13),
            (2, 23),
        ] {
            let f = Field::new(p, 1).unwrap();
            for g in divisors_of_xn_minus_1(&f, n).unwrap() {
                let c = CyclicCode::new(&g, n).unwrap();
                if c.is_zero_code() {
                    continue;
                }
                let ex = min_distance(&c, Strategy::Exact, &opts).unwrap();
                let du = min_distance(&c, Strategy::DualExact, &opts).unwrap();
                assert_eq!(ex.lower, du.lower, "{g} n={n}");
                let bch = min_distance(&c, Strategy::Bch, &opts).unwrap();
                let mc = min_distance(&c, Strategy::MonteCarlo, &opts).unwrap();
                assert!(bch.lower <= ex.lower, "{g} n={n}");
                assert!(ex.lower <= mc.upper, "{g} n={n}");
            }
        }
    }
}
