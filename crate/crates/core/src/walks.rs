//! Hook-walk counts and t-Plancherel weights.
//!
//! `F_{λ/μ}` counts maximal chains of t-hook additions from `μ` to `λ`;
//! through the Littlewood decomposition it is a multinomial times a product of
//! skew tableau counts of the quotients. `G_λ` is the reciprocal of the product
//! of the hook lengths divisible by `t`.

use std::collections::HashMap;

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::littlewood::{core_offsets, decompose, recompose_with, t_hook_removals, CoreOffsets};
use crate::partition::{enumerate_partitions, skew_count, Partition};
use crate::rational::{factorial, multinomial, ExactRational};

/// `f_λ = |λ|! / H_λ`.
pub fn f_lambda(lambda: &Partition) -> BigUint {
    let (q, r) = factorial(lambda.size()).div_rem(&lambda.hook_product());
    assert!(
        r.is_zero(),
        "hook product does not divide |λ|! for {lambda}"
    );
    q
}

fn not_above(lambda: &Partition, mu: &Partition, t: usize) -> Error {
    Error::NotAbove {
        lambda: lambda.to_string(),
        mu: mu.to_string(),
        t,
    }
}

/// `F_{λ/μ}` from the product formula over the quotients.
pub fn f_skew(lambda: &Partition, mu: &Partition, t: usize) -> Result<BigUint> {
    let dl = decompose(lambda, t)?;
    let dm = decompose(mu, t)?;
    if dl.core != dm.core
        || dl
            .quotients
            .iter()
            .zip(&dm.quotients)
            .any(|(a, b)| !a.contains(b))
    {
        return Err(not_above(lambda, mu, t));
    }
    let mut sizes = Vec::with_capacity(t);
    let mut product = BigUint::one();
    for (outer, inner) in dl.quotients.iter().zip(&dm.quotients) {
        sizes.push(outer.size() - inner.size());
        let mut memo = HashMap::new();
        product *= skew_count(outer, inner, &mut memo);
    }
    Ok(multinomial(&sizes) * product)
}

/// `F_{λ/μ}` from its defining recursion over single t-hook removals, without
/// reference to quotients.
pub fn f_skew_recursive(lambda: &Partition, mu: &Partition, t: usize) -> BigUint {
    fn go(
        nu: &Partition,
        mu: &Partition,
        t: usize,
        memo: &mut HashMap<Partition, BigUint>,
    ) -> BigUint {
        if nu.size() <= mu.size() {
            return if nu == mu {
                BigUint::one()
            } else {
                BigUint::zero()
            };
        }
        if let Some(v) = memo.get(nu) {
            return v.clone();
        }
        let total = t_hook_removals(nu, t)
            .iter()
            .map(|down| go(down, mu, t, memo))
            .sum::<BigUint>();
        memo.insert(nu.clone(), total.clone());
        total
    }
    if t == 0 || !(lambda.size() - mu.size().min(lambda.size())).is_multiple_of(t) {
        return BigUint::zero();
    }
    go(lambda, mu, t, &mut HashMap::new())
}

/// `G_λ = 1 / ∏_{h ∈ H_t(λ)} h`.
pub fn g_lambda(lambda: &Partition, t: usize) -> ExactRational {
    let denom = lambda
        .hooks()
        .into_iter()
        .filter(|h| h % t == 0)
        .fold(BigInt::one(), |acc, h| acc * BigInt::from(h));
    BigRational::new(BigInt::one(), denom)
}

/// One partition of a layer, together with its quotients.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LayerPoint {
    pub quotients: Vec<Partition>,
    pub lambda: Partition,
}

impl LayerPoint {
    /// `F_{λ/μ}` when `μ` is the t-core of `λ`: the multinomial of the
    /// quotient sizes times `∏ f_{λ^i}`.
    pub fn walk_count(&self) -> BigUint {
        let sizes: Vec<usize> = self.quotients.iter().map(Partition::size).collect();
        self.quotients
            .iter()
            .fold(multinomial(&sizes), |acc, q| acc * f_lambda(q))
    }
}

/// Iterates the layer `{λ : core(λ) = μ, |λ/μ| = nt}` by walking compositions
/// `n = n_0 + … + n_{t−1}`, then tuples of partitions of the `n_i`, then
/// recomposing.
pub struct Layer {
    offsets: CoreOffsets,
    by_size: Vec<Vec<Partition>>,
    composition: Option<Vec<usize>>,
    odometer: Vec<usize>,
}

impl Layer {
    pub fn new(mu: &Partition, t: usize, n: usize) -> Result<Self> {
        let offsets = core_offsets(mu, t)?;
        let by_size = (0..=n).map(|k| enumerate_partitions(k).collect()).collect();
        let mut first = vec![0; t];
        first[t - 1] = n;
        Ok(Layer {
            offsets,
            by_size,
            composition: Some(first),
            odometer: vec![0; t],
        })
    }

    fn advance(&mut self) {
        let Some(comp) = self.composition.as_mut() else {
            return;
        };
        // Odometer over the partition lists of the current composition.
        for slot in (0..comp.len()).rev() {
            self.odometer[slot] += 1;
            if self.odometer[slot] < self.by_size[comp[slot]].len() {
                return;
            }
            self.odometer[slot] = 0;
        }
        // Next composition in colexicographic order: move one unit from the
        // last nonzero slot (not the first) to its left neighbour and push the
        // rest back to the end.
        let t = comp.len();
        match (1..t).rev().find(|&s| comp[s] > 0) {
            None => self.composition = None,
            Some(s) => {
                let rest = comp[s] - 1;
                comp[s] = 0;
                comp[s - 1] += 1;
                comp[t - 1] += rest;
            }
        }
    }
}

impl Iterator for Layer {
    type Item = LayerPoint;

    fn next(&mut self) -> Option<LayerPoint> {
        let comp = self.composition.as_ref()?;
        let quotients: Vec<Partition> = comp
            .iter()
            .zip(&self.odometer)
            .map(|(&size, &idx)| self.by_size[size][idx].clone())
            .collect();
        let lambda = recompose_with(&self.offsets, &quotients);
        self.advance();
        Some(LayerPoint { quotients, lambda })
    }
}

pub fn enumerate_layer(
    mu: &Partition,
    t: usize,
    n: usize,
) -> Result<impl Iterator<Item = Partition>> {
    Ok(Layer::new(mu, t, n)?.map(|p| p.lambda))
}
