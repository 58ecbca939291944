//! The t-hook order, the difference operator `D_t`, t-Plancherel averages
//! `P_g(n) = Σ F_{λ/μ} g(λ)` and forward-difference polynomiality
//! certificates.

use std::collections::{BTreeMap, HashMap};
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::littlewood::{decompose, t_hook_additions};
use crate::partition::Partition;
use crate::rational::{binomial, rat_big, rat_uint, ExactRational};
use crate::stats::{q_tuple, StatSpec};
use crate::walks::{g_lambda, Layer};

/// A function of partitions with exact rational values.
pub trait PartitionFn: Sync {
    fn eval(&self, lambda: &Partition) -> ExactRational;
}

impl<F> PartitionFn for F
where
    F: Fn(&Partition) -> ExactRational + Sync,
{
    fn eval(&self, lambda: &Partition) -> ExactRational {
        self(lambda)
    }
}

/// `[G_λ ·] ∏ stat_u(λ) · ∏_i q_{ν^i}(λ^i)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Statistic {
    pub t: usize,
    pub weight_g: bool,
    pub factors: Vec<StatSpec>,
    pub q_exponents: Option<Vec<Partition>>,
}

impl Statistic {
    /// `G_λ` alone.
    pub fn weight(t: usize) -> Self {
        Statistic {
            t,
            weight_g: true,
            factors: Vec::new(),
            q_exponents: None,
        }
    }

    /// `G_λ` times the given power sums.
    pub fn weighted(t: usize, factors: Vec<StatSpec>) -> Self {
        Statistic {
            factors,
            ..Self::weight(t)
        }
    }

    /// `G_λ ∏_i q_{ν^i}(λ^i)`.
    pub fn weighted_q(t: usize, exponents: Vec<Partition>) -> Self {
        Statistic {
            q_exponents: Some(exponents),
            ..Self::weight(t)
        }
    }

    pub fn without_weight(mut self) -> Self {
        self.weight_g = false;
        self
    }

    /// Total size `Σ|ν^i|` of the q-exponents.
    pub fn q_weight(&self) -> usize {
        self.q_exponents
            .as_ref()
            .map_or(0, |e| e.iter().map(Partition::size).sum())
    }

    /// A degree in `n` that the average cannot exceed.
    ///
    /// Each power sum of exponent `p` contributes `p + 1`; q-exponents of total
    /// size `w` contribute `⌈w/2⌉`, one less than the order at which `D_t`
    /// powers of `G·∏q` vanish.
    pub fn degree_bound(&self) -> usize {
        let sums: usize = self.factors.iter().map(|f| f.power as usize + 1).sum();
        sums + self.q_weight().div_ceil(2)
    }
}

/// Smallest `r` with `r ≥ w/2 + 1` for q-exponents of total size `w`.
pub fn q_vanishing_order(q_weight: usize) -> usize {
    q_weight.div_ceil(2) + 1
}

impl PartitionFn for Statistic {
    fn eval(&self, lambda: &Partition) -> ExactRational {
        let mut acc = if self.weight_g {
            g_lambda(lambda, self.t)
        } else {
            ExactRational::one()
        };
        if !self.factors.is_empty() {
            let cells = lambda.cell_stats();
            let prod: BigInt = self.factors.iter().map(|f| f.eval_cells(&cells)).product();
            acc *= rat_big(prod);
        }
        if let Some(exps) = &self.q_exponents {
            let dec = decompose(lambda, self.t).expect("t is positive");
            acc *= rat_big(q_tuple(&dec.quotients, exps));
        }
        acc
    }
}

impl fmt::Display for Statistic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut terms: Vec<String> = Vec::new();
        if self.weight_g {
            terms.push(format!("G[t={}]", self.t));
        }
        terms.extend(self.factors.iter().map(|s| format!("({s})")));
        if let Some(exps) = &self.q_exponents {
            let list: Vec<String> = exps.iter().map(|p| p.to_string()).collect();
            terms.push(format!("q[{}]", list.join(";")));
        }
        if terms.is_empty() {
            f.write_str("1")
        } else {
            f.write_str(&terms.join("*"))
        }
    }
}

/// Every partition one t-hook above `lambda`, sorted.
pub fn covers(lambda: &Partition, t: usize) -> Vec<Partition> {
    let mut out = t_hook_additions(lambda, t);
    out.sort();
    out.dedup();
    out
}

/// `D_t g(λ) = Σ_{λ⁺} g(λ⁺) − g(λ)`.
pub fn apply_dt(g: &dyn PartitionFn, lambda: &Partition, t: usize) -> ExactRational {
    covers(lambda, t)
        .iter()
        .map(|up| g.eval(up))
        .sum::<ExactRational>()
        - g.eval(lambda)
}

/// `D_t^r g(μ)` by direct recursion on the definition, memoized per
/// partition and order.
pub fn apply_dt_power_recursive(
    g: &dyn PartitionFn,
    mu: &Partition,
    t: usize,
    r: usize,
) -> ExactRational {
    fn go(
        g: &dyn PartitionFn,
        nu: &Partition,
        t: usize,
        r: usize,
        memo: &mut HashMap<(Partition, usize), ExactRational>,
    ) -> ExactRational {
        if r == 0 {
            return g.eval(nu);
        }
        if let Some(v) = memo.get(&(nu.clone(), r)) {
            return v.clone();
        }
        let mut total = -go(g, nu, t, r - 1, memo);
        for up in covers(nu, t) {
            total += go(g, &up, t, r - 1, memo);
        }
        memo.insert((nu.clone(), r), total.clone());
        total
    }
    go(g, mu, t, r, &mut HashMap::new())
}

/// Levels `0..=n` above any `μ` in the t-hook order, with `F_{λ/μ}` pushed
/// forward along covers.
pub fn upper_levels(mu: &Partition, t: usize, n: usize) -> Vec<BTreeMap<Partition, BigInt>> {
    let mut levels = Vec::with_capacity(n + 1);
    let mut current = BTreeMap::from([(mu.clone(), BigInt::one())]);
    for _ in 0..n {
        let mut next: BTreeMap<Partition, BigInt> = BTreeMap::new();
        for (lambda, f) in &current {
            for up in covers(lambda, t) {
                *next.entry(up).or_default() += f;
            }
        }
        levels.push(std::mem::replace(&mut current, next));
    }
    levels.push(current);
    levels
}

/// `P_g(k)` for `k = 0..=n` over the upper levels of an arbitrary `μ`.
pub fn plancherel_averages_general(
    g: &dyn PartitionFn,
    mu: &Partition,
    t: usize,
    n: usize,
) -> Vec<ExactRational> {
    upper_levels(mu, t, n)
        .into_iter()
        .map(|level| {
            level
                .iter()
                .map(|(lambda, f)| rat_big(f.clone()) * g.eval(lambda))
                .sum()
        })
        .collect()
}

/// `Σ_{k=0}^{r} (−1)^{r+k} C(r,k) P(k)`.
pub fn inverse_binomial_transform(values: &[ExactRational], r: usize) -> ExactRational {
    let mut total = ExactRational::zero();
    for (k, v) in values.iter().enumerate().take(r + 1) {
        let term = rat_uint(&binomial(r, k)) * v;
        if (r + k).is_multiple_of(2) {
            total += term;
        } else {
            total -= term;
        }
    }
    total
}

/// `Σ_{k=0}^{n} C(n,k) D^k` given `D^k` for `k = 0..=n`.
pub fn binomial_transform(powers: &[ExactRational], n: usize) -> ExactRational {
    powers
        .iter()
        .enumerate()
        .take(n + 1)
        .map(|(k, d)| rat_uint(&binomial(n, k)) * d)
        .sum()
}

/// `D_t^r g(μ)`, computed by recursion and by the alternating binomial
/// transform of the averages `P_g(0..=r)`; the two must agree.
pub fn apply_dt_power(
    g: &dyn PartitionFn,
    mu: &Partition,
    t: usize,
    r: usize,
) -> Result<ExactRational> {
    let recursive = apply_dt_power_recursive(g, mu, t, r);
    let averages = plancherel_averages_general(g, mu, t, r);
    let transform = inverse_binomial_transform(&averages, r);
    if recursive != transform {
        return Err(Error::InconsistentOperator {
            r,
            recursive: recursive.to_string(),
            transform: transform.to_string(),
        });
    }
    Ok(recursive)
}

/// `P_g(n) = Σ F_{λ/μ} g(λ)` over the layer of the t-core `μ`, enumerated in
/// quotient space.
pub fn plancherel_average(
    g: &dyn PartitionFn,
    mu: &Partition,
    t: usize,
    n: usize,
) -> Result<ExactRational> {
    Ok(Layer::new(mu, t, n)?
        .map(|pt| rat_uint(&pt.walk_count()) * g.eval(&pt.lambda))
        .sum())
}

/// Same as [`plancherel_average`], with the layer split across the current
/// rayon pool.
pub fn plancherel_average_par(
    g: &dyn PartitionFn,
    mu: &Partition,
    t: usize,
    n: usize,
) -> Result<ExactRational> {
    let points: Vec<_> = Layer::new(mu, t, n)?.collect();
    Ok(points
        .par_iter()
        .map(|pt| rat_uint(&pt.walk_count()) * g.eval(&pt.lambda))
        .reduce(ExactRational::zero, |a, b| a + b))
}

/// `Σ F_{λ/μ} · D_t g(λ)` over the layer of `μ`.
pub fn average_of_difference(
    g: &dyn PartitionFn,
    mu: &Partition,
    t: usize,
    n: usize,
) -> Result<ExactRational> {
    let dg = |lambda: &Partition| apply_dt(g, lambda, t);
    plancherel_average(&dg, mu, t, n)
}

/// Rows of forward differences: row `k` holds `Δ^k P(j)` for the valid `j`.
pub fn forward_differences(values: &[ExactRational]) -> Vec<Vec<ExactRational>> {
    let mut rows = vec![values.to_vec()];
    while rows.last().is_some_and(|r| r.len() > 1) {
        let prev = rows.last().unwrap();
        let next = prev.windows(2).map(|w| &w[1] - &w[0]).collect();
        rows.push(next);
    }
    rows
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Verdict {
    Certified,
    Refuted,
}

/// Exact values `P(0..=m)` with their forward differences. `certified` means
/// every difference of order `degree + 1` vanishes on the sampled window;
/// globality beyond the window rests on the polynomiality theorem for the
/// statistic family, and is not claimed by the table itself.
#[derive(Clone, Debug, Serialize)]
pub struct DifferenceTable {
    #[serde(serialize_with = "ser_vec")]
    pub values: Vec<ExactRational>,
    #[serde(serialize_with = "ser_rows")]
    pub diffs: Vec<Vec<ExactRational>>,
    pub degree: usize,
    pub verdict: Verdict,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<usize>,
    pub window: [usize; 2],
    /// Smallest `k` whose difference row vanishes on the window, if any.
    pub min_vanishing_order: Option<usize>,
    /// `P(n+1) − P(n) = P_{D_t g}(n)` held at every consecutive pair.
    pub telescoping: bool,
}

fn ser_vec<S: serde::Serializer>(
    v: &[ExactRational],
    s: S,
) -> std::result::Result<S::Ok, S::Error> {
    s.collect_seq(v.iter().map(|x| x.to_string()))
}

fn ser_rows<S: serde::Serializer>(
    v: &[Vec<ExactRational>],
    s: S,
) -> std::result::Result<S::Ok, S::Error> {
    s.collect_seq(
        v.iter()
            .map(|row| row.iter().map(|x| x.to_string()).collect::<Vec<_>>()),
    )
}

impl DifferenceTable {
    pub fn is_certified(&self) -> bool {
        self.verdict == Verdict::Certified && self.telescoping
    }

    /// Builds the table from precomputed values without the telescoping check.
    pub fn from_values(values: Vec<ExactRational>, degree: usize) -> Self {
        let rows = forward_differences(&values);
        let m = values.len().saturating_sub(1);
        let witness = rows
            .get(degree + 1)
            .and_then(|row| row.iter().position(|v| !v.is_zero()));
        let min_vanishing_order =
            (0..rows.len()).find(|&k| rows[k..].iter().all(|r| r.iter().all(Zero::is_zero)));
        DifferenceTable {
            diffs: rows.into_iter().skip(1).collect(),
            values,
            degree,
            verdict: if witness.is_none() {
                Verdict::Certified
            } else {
                Verdict::Refuted
            },
            witness,
            window: [0, m],
            min_vanishing_order,
            telescoping: true,
        }
    }
}

/// Samples `P_g(0..=degree+safety)` over the layers of the t-core `μ` and
/// certifies that differences of order `degree + 1` vanish. Each consecutive
/// pair is also checked against an independent evaluation of `P_{D_t g}`.
pub fn certify_polynomiality(
    g: &dyn PartitionFn,
    mu: &Partition,
    t: usize,
    degree: usize,
    safety: usize,
) -> Result<DifferenceTable> {
    let m = degree + safety.max(1);
    let values = (0..=m)
        .map(|n| plancherel_average_par(g, mu, t, n))
        .collect::<Result<Vec<_>>>()?;
    let mut table = DifferenceTable::from_values(values, degree);
    for n in 0..m {
        let step = &table.values[n + 1] - &table.values[n];
        if step != average_of_difference(g, mu, t, n)? {
            table.telescoping = false;
            break;
        }
    }
    Ok(table)
}
