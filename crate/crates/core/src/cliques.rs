//! Exact K_s counting and closed-form clique-count expressions.

use num_bigint::BigUint;
use num_rational::BigRational;
use num_traits::{One, Zero};
use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::forest::LinearForest;
use crate::graph::{bit, bits, low_mask, Graph};

/// C(a, b) as an exact integer; zero when b > a.
pub fn binomial(a: u64, b: u64) -> BigUint {
    if b > a {
        return BigUint::zero();
    }
    let b = b.min(a - b);
    let mut acc = BigUint::one();
    for i in 0..b {
        acc *= a - i;
        acc /= i + 1;
    }
    acc
}

/// C(a, b) with C(a, b) = 0 for b < 0 or b > a.
pub fn binomial_signed(a: i64, b: i64) -> BigUint {
    if a < 0 || b < 0 || b > a {
        BigUint::zero()
    } else {
        binomial(a as u64, b as u64)
    }
}

/// C(a, b) for a ≤ 64; every such value fits in a u64.
pub(crate) fn binomial_small(a: usize, b: usize) -> u64 {
    if b > a {
        return 0;
    }
    let b = b.min(a - b);
    let mut acc: u128 = 1;
    for i in 0..b {
        acc = acc * (a - i) as u128 / (i + 1) as u128;
    }
    acc as u64
}

fn is_clique(adj: &[u64], set: u64) -> bool {
    bits(set).all(|v| adj[v] & set == set & !bit(v))
}

/// Number of r-cliques inside the vertex set `cand`.
pub(crate) fn count_within(adj: &[u64], cand: u64, r: usize) -> u64 {
    let c = cand.count_ones() as usize;
    match r {
        0 => return 1,
        _ if c < r => return 0,
        1 => return c as u64,
        2 => return bits(cand).map(|v| (adj[v] & cand).count_ones() as u64).sum::<u64>() / 2,
        _ => {}
    }
    if is_clique(adj, cand) {
        return binomial_small(c, r);
    }
    let mut total = 0;
    let mut rest = cand;
    while rest != 0 {
        let v = rest.trailing_zeros() as usize;
        rest &= rest - 1;
        if (rest.count_ones() as usize) < r - 1 {
            break;
        }
        total += count_within(adj, rest & adj[v], r - 1);
    }
    total
}

/// 𝒩_s(G) as a machine word (never overflows for n ≤ 64).
pub fn count_cliques_u64(g: &Graph, s: usize) -> u64 {
    let adj = g.rows();
    let n = g.order();
    if s <= 2 || n < 32 {
        return count_within(adj, low_mask(n), s);
    }
    // Branch on the lowest vertex of each clique; each branch is independent.
    (0..n)
        .into_par_iter()
        .map(|v| count_within(adj, adj[v] & !low_mask(v + 1), s - 1))
        .sum()
}

/// 𝒩_s(G): the number of vertex subsets of size `s` inducing a complete
/// graph.
pub fn count_cliques(g: &Graph, s: usize) -> BigUint {
    BigUint::from(count_cliques_u64(g, s))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum CountSource {
    Enumerated,
    Formula,
}

/// A clique count together with how it was obtained.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CountReport {
    pub s: usize,
    #[serde(with = "crate::serde_big")]
    pub value: BigUint,
    pub source: CountSource,
}

impl CountReport {
    pub fn enumerated(g: &Graph, s: usize) -> Self {
        CountReport {
            s,
            value: count_cliques(g, s),
            source: CountSource::Enumerated,
        }
    }
}

fn require_s(s: usize) -> Result<()> {
    if s == 0 {
        Err(Error::InvalidParameter("clique order s must be at least 1".into()))
    } else {
        Ok(())
    }
}

/// 𝒩_s(G_F(n)) in closed form:
/// C(δ, s) + (n − δ)·C(δ, s − 1) + [all paths odd]·C(δ, s − 2).
pub fn gf_formula(f: &LinearForest, n: usize, s: usize) -> Result<BigUint> {
    require_s(s)?;
    let d = f.delta() as i64;
    if (n as i64) < d + 2 {
        return Err(Error::InvalidParameter(format!(
            "G_F(n) for F = {f} needs n >= {}, got {n}",
            d + 2
        )));
    }
    let s = s as i64;
    let mut value = binomial_signed(d, s) + BigUint::from(n as i64 as u64 - d as u64) * binomial_signed(d, s - 1);
    if f.all_odd() {
        value += binomial_signed(d, s - 2);
    }
    Ok(value)
}

/// The upper bound n/(ℓ−1)·C(ℓ−1, s) on the number of K_s in a P_ℓ-free
/// graph of order n.
pub fn luo_bound(ell: usize, s: usize, n: usize) -> Result<BigRational> {
    require_s(s)?;
    if ell < 2 {
        return Err(Error::InvalidParameter(format!("path order must be at least 2, got {ell}")));
    }
    let num = BigUint::from(n) * binomial((ell - 1) as u64, s as u64);
    Ok(BigRational::new(num.into(), BigUint::from(ell - 1).into()))
}

/// 𝒩_s of ⌊n/(ℓ−1)⌋K_{ℓ−1} ∪ K_{n mod (ℓ−1)}:
/// ⌊n/(ℓ−1)⌋·C(ℓ−1, s) + C(n mod (ℓ−1), s).
pub fn path_turan_lower(ell: usize, s: usize, n: usize) -> Result<BigUint> {
    if ell < 2 {
        return Err(Error::InvalidParameter(format!("path order must be at least 2, got {ell}")));
    }
    let block = (ell - 1) as u64;
    let n = n as u64;
    Ok(BigUint::from(n / block) * binomial(block, s as u64) + binomial(n % block, s as u64))
}

/// ex(n, K_s, F) as given by the main clique-count theorem for linear
/// forests, for n above its threshold.
///
/// `path_turan` is ex(n, K_s, P_{ℓ₁}), which the expression needs but which
/// has no general closed form; callers supply it from search or elsewhere.
pub fn theorem_value(f: &LinearForest, n: usize, s: usize, path_turan: &BigUint) -> Result<BigUint> {
    if let Some(why) = f.hypothesis_violation() {
        return Err(Error::Hypothesis(why));
    }
    require_s(s)?;
    let d = f.delta();
    if s > d + 1 {
        return Err(Error::Hypothesis(format!(
            "s = {s} exceeds delta_F + 1 = {} for F = {f}",
            d + 1
        )));
    }
    match f.twin_odd_order() {
        Some(ell) if s == d + 1 => {
            if n == 0 {
                return Err(Error::InvalidParameter("n must be positive".into()));
            }
            let block = ell - 1;
            let mu = u64::from((n - 1) % block == ell - 2);
            Ok(BigUint::from(((n - 1) / block) as u64 * ell as u64 + mu))
        }
        Some(_) => gf_formula(f, n, s),
        None => Ok(gf_formula(f, n, s)?.max(path_turan.clone())),
    }
}

/// Smallest integer n with n ≥ 5·C(|F|−1, s)² / ((|F|−1)·C(δ_F, s−1)) + δ_F.
pub fn threshold_n(f: &LinearForest, s: usize) -> Result<BigUint> {
    require_s(s)?;
    let d = f.delta();
    if s > d + 1 {
        return Err(Error::Hypothesis(format!(
            "s = {s} exceeds delta_F + 1 = {} for F = {f}",
            d + 1
        )));
    }
    let m = (f.total_order() - 1) as u64;
    let c = binomial(m, s as u64);
    let num = BigUint::from(5u32) * &c * &c;
    let den = BigUint::from(m) * binomial(d as u64, (s - 1) as u64);
    let ceil = (num + &den - BigUint::one()) / den;
    Ok(ceil + BigUint::from(d))
}
