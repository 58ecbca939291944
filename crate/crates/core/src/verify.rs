//! Named verification suites over exact grids.
//!
//! Every check compares two exact values computed along different routes and
//! records the first mismatch as a witness. Grids are walked in a fixed order
//! so reports are reproducible.

use std::collections::BTreeMap;
use std::fmt::Display;
use std::str::FromStr;
use std::time::Instant;

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Zero};
use rand::rngs::StdRng;
use rand::seq::SliceRandom;
use rand::SeedableRng;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::littlewood::{b_k_pairs, core_offsets, decompose, recompose, residue_hook_count};
use crate::operators::{
    apply_dt, apply_dt_power, apply_dt_power_recursive, binomial_transform, certify_polynomiality,
    inverse_binomial_transform, plancherel_average, plancherel_average_par,
    plancherel_averages_general, q_vanishing_order, PartitionFn, Statistic,
};
use crate::partition::{enumerate_partitions, partitions_up_to, syt_count_oracle, Partition};
use crate::rational::{binomial, factorial, multinomial, rat, rat_big, rat_uint, ExactRational};
use crate::stats::{
    content_delta, corners, grow_quotient, hook_delta_power, hook_delta_total, q_k, stat_eval,
    StatKind, StatSpec,
};
use crate::walks::{f_lambda, Layer};

/// A failing check: what was evaluated and both sides.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Witness {
    pub check: String,
    pub inputs: String,
    pub lhs: String,
    pub rhs: String,
}

/// Counts checks and keeps the first failure.
#[derive(Debug, Default)]
pub struct Checker {
    pub checks: u64,
    pub failures: u64,
    pub first_failure: Option<Witness>,
}

impl Checker {
    pub fn new() -> Self {
        Self::default()
    }

    /// Records `lhs == rhs`. `inputs` is only rendered on failure.
    pub fn eq<T: PartialEq + Display>(
        &mut self,
        check: &str,
        inputs: impl FnOnce() -> String,
        lhs: T,
        rhs: T,
    ) -> bool {
        self.checks += 1;
        if lhs == rhs {
            return true;
        }
        self.failures += 1;
        if self.first_failure.is_none() {
            self.first_failure = Some(Witness {
                check: check.to_string(),
                inputs: inputs(),
                lhs: lhs.to_string(),
                rhs: rhs.to_string(),
            });
        }
        false
    }

    /// Records a computation that returned an error as a failure.
    pub fn error(&mut self, check: &str, inputs: impl FnOnce() -> String, err: &Error) {
        self.checks += 1;
        self.failures += 1;
        if self.first_failure.is_none() {
            self.first_failure = Some(Witness {
                check: check.to_string(),
                inputs: inputs(),
                lhs: err.to_string(),
                rhs: String::new(),
            });
        }
    }

    pub fn passed(&self) -> bool {
        self.failures == 0
    }

    fn absorb(&mut self, other: Checker) {
        self.checks += other.checks;
        self.failures += other.failures;
        if self.first_failure.is_none() {
            self.first_failure = other.first_failure;
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Suite {
    Bijection,
    Fundamental,
    PerPartition,
    Averages,
    Operators,
    Polynomiality,
}

impl Suite {
    pub const ALL: [Suite; 6] = [
        Suite::Bijection,
        Suite::Fundamental,
        Suite::PerPartition,
        Suite::Averages,
        Suite::Operators,
        Suite::Polynomiality,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Bijection => "bijection",
            Suite::Fundamental => "fundamental",
            Suite::PerPartition => "per-partition",
            Suite::Averages => "averages",
            Suite::Operators => "operators",
            Suite::Polynomiality => "polynomiality",
        }
    }
}

impl FromStr for Suite {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        Suite::ALL
            .into_iter()
            .find(|suite| suite.name() == s)
            .ok_or_else(|| {
                let names: Vec<_> = Suite::ALL.iter().map(|s| s.name()).collect();
                format!("unknown suite {s:?} (expected one of {})", names.join(", "))
            })
    }
}

/// Optional overrides for a suite's grid; unset fields take the suite's
/// defaults.
#[derive(Clone, Debug, Default)]
pub struct SuiteParams {
    pub max_size: Option<usize>,
    pub ts: Option<Vec<usize>>,
    pub ns: Option<Vec<usize>>,
    pub seed: u64,
}

impl SuiteParams {
    fn max_size(&self, default: usize) -> usize {
        self.max_size.unwrap_or(default)
    }

    fn ts(&self, default: &[usize]) -> Vec<usize> {
        self.ts.clone().unwrap_or_else(|| default.to_vec())
    }

    fn n_max(&self, default: usize) -> usize {
        self.ns
            .as_ref()
            .and_then(|ns| ns.iter().copied().max())
            .unwrap_or(default)
    }

    fn ns(&self, default: std::ops::RangeInclusive<usize>) -> Vec<usize> {
        self.ns.clone().unwrap_or_else(|| default.collect())
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct SuiteReport {
    pub suite: &'static str,
    pub grid: BTreeMap<String, String>,
    pub checks: u64,
    pub failures: u64,
    pub first_failure: Option<Witness>,
    pub wall_time_ms: u64,
}

impl SuiteReport {
    pub fn passed(&self) -> bool {
        self.failures == 0
    }
}

fn list(xs: &[usize]) -> String {
    xs.iter()
        .map(usize::to_string)
        .collect::<Vec<_>>()
        .join(",")
}

fn p(parts: &[i64]) -> Partition {
    Partition::new(parts).expect("literal partition")
}

pub fn run_suite(suite: Suite, params: &SuiteParams) -> Result<SuiteReport> {
    let start = Instant::now();
    let mut c = Checker::new();
    let mut grid = BTreeMap::new();
    let mut note = |k: &str, v: String| {
        grid.insert(k.to_string(), v);
    };
    match suite {
        Suite::Bijection => {
            let (m, ts) = (params.max_size(20), params.ts(&[1, 2, 3, 4, 5]));
            note("max_size", m.to_string());
            note("t", list(&ts));
            bijection(&mut c, m, &ts)?;
        }
        Suite::Fundamental => {
            let m = params.max_size(12);
            let sq = params.n_max(8);
            note("max_size", m.to_string());
            note("sum_f2_n", sq.to_string());
            running_examples(&mut c)?;
            hook_formula(&mut c, m, sq)?;
        }
        Suite::PerPartition => {
            let m = params.max_size(18);
            let ts = params.ts(&[2, 3, 4]);
            let n = params.n_max(3);
            note("max_size", m.to_string());
            note("t", list(&ts));
            note("layer_n", n.to_string());
            note(
                "increments",
                format!("{} per t, seed {}", INCREMENT_SAMPLES, params.seed),
            );
            square_identities_empty_core(&mut c, m, &ts)?;
            hook_content_square_sum(&mut c, m)?;
            hook_content_square_cores(&mut c, &ts, n)?;
            let inc_ts: Vec<usize> = params.ts.clone().unwrap_or_else(|| vec![1, 2, 3, 4]);
            increments(&mut c, &inc_ts, INCREMENT_SAMPLES, params.seed)?;
        }
        Suite::Averages => {
            let ts = params.ts(&[2, 3]);
            let ns = params.ns(0..=4);
            note("t", list(&ts));
            note("n", list(&ns));
            closed_form_averages(&mut c, &ts, &ns)?;
        }
        Suite::Operators => {
            let m = params.max_size(14);
            let ts = params.ts(&[1, 2, 3, 4]);
            let n = params.n_max(4);
            note("max_size", m.to_string());
            note("t", list(&ts));
            note("n", n.to_string());
            dt_weight_vanishes(&mut c, m, &ts);
            let small: Vec<usize> = ts.iter().copied().filter(|&t| t <= 3).collect();
            layer_weight_sums(&mut c, &small, n)?;
            multinomial_identity(&mut c, &small, n + 1);
            transform_pair(&mut c, &small, n)?;
        }
        Suite::Polynomiality => {
            let ts = params.ts(&[2, 3]);
            note("t", list(&ts));
            note("q_weight", "0..4".to_string());
            note("classical_n", "0..8".to_string());
            mixed_certificates(&mut c, &ts)?;
            q_statistic_vanishing(&mut c, &ts, 4)?;
            classical_certificates(&mut c, 8)?;
        }
    }
    Ok(SuiteReport {
        suite: suite.name(),
        grid,
        checks: c.checks,
        failures: c.failures,
        first_failure: c.first_failure,
        wall_time_ms: start.elapsed().as_millis() as u64,
    })
}

/// Decompose then recompose, the size identity, and `{h/t : t | h} = ⊎ H(λ^i)`.
pub fn bijection(c: &mut Checker, max_size: usize, ts: &[usize]) -> Result<()> {
    for &t in ts {
        for lambda in partitions_up_to(max_size) {
            let dec = decompose(&lambda, t)?;
            let who = || format!("λ={lambda} t={t}");
            c.eq(
                "recompose",
                who,
                recompose(&dec.core, &dec.quotients, t)?,
                lambda.clone(),
            );
            c.eq("core_is_t_core", who, dec.core.is_t_core(t), true);
            c.eq("size", who, dec.size(), lambda.size());
            let mut divided: Vec<usize> = lambda
                .hooks()
                .into_iter()
                .filter(|h| h % t == 0)
                .map(|h| h / t)
                .collect();
            divided.sort_unstable();
            let mut quotient_hooks: Vec<usize> =
                dec.quotients.iter().flat_map(Partition::hooks).collect();
            quotient_hooks.sort_unstable();
            c.eq("hook_division", who, list(&divided), list(&quotient_hooks));
        }
    }
    Ok(())
}

/// The worked examples: the decomposition of `(18,7,6)`, hooks and corners of
/// `(6,3,2,2)`, and the offsets of `(5,3,1,1)`.
pub fn running_examples(c: &mut Checker) -> Result<()> {
    let dec = decompose(&p(&[18, 7, 6]), 3)?;
    c.eq("core(18,7,6)", || "t=3".into(), dec.core, p(&[3, 1]));
    c.eq(
        "quotients(18,7,6)",
        || "t=3".into(),
        format!("{:?}", dec.quotients),
        format!("{:?}", vec![p(&[2]), Partition::empty(), p(&[5, 2])]),
    );

    let l = p(&[6, 3, 2, 2]);
    c.eq(
        "hooks(6,3,2,2)",
        String::new,
        list(&l.hooks()),
        "9,8,5,3,2,1,5,4,1,3,2,2,1".into(),
    );
    c.eq("7-core(6,3,2,2)", String::new, l.is_t_core(7), true);
    let cd = corners(&l);
    c.eq(
        "x(6,3,2,2)",
        String::new,
        format!("{:?}", cd.x),
        "[-4, 0, 2, 6]".into(),
    );
    c.eq(
        "y(6,3,2,2)",
        String::new,
        format!("{:?}", cd.y),
        "[-2, 1, 5]".into(),
    );
    c.eq("q1(6,3,2,2)", String::new, q_k(&l, 1), BigInt::zero());
    c.eq("q2(6,3,2,2)", String::new, q_k(&l, 2), BigInt::from(26));

    let off = core_offsets(&p(&[5, 3, 1, 1]), 3)?;
    c.eq(
        "b(5,3,1,1)",
        || "t=3".into(),
        format!("{:?}", off.b),
        "[0, 7, -4]".into(),
    );
    c.eq(
        "d(5,3,1,1)",
        || "t=3".into(),
        format!("{:?}", off.d),
        "[0, 2, -2]".into(),
    );
    c.eq(
        "sum_d(5,3,1,1)",
        || "t=3".into(),
        off.d.iter().sum::<i64>(),
        0,
    );
    Ok(())
}

/// `f_λ = |λ|!/H_λ` against tableau counting, and `Σ f_λ² = n!`.
pub fn hook_formula(c: &mut Checker, max_size: usize, sum_max: usize) -> Result<()> {
    for lambda in partitions_up_to(max_size) {
        let oracle = syt_count_oracle(&lambda, &Partition::empty())?;
        c.eq(
            "hook_length_formula",
            || format!("λ={lambda}"),
            f_lambda(&lambda),
            oracle,
        );
    }
    for n in 0..=sum_max {
        let total: BigUint = enumerate_partitions(n).map(|l| f_lambda(&l).pow(2)).sum();
        c.eq("sum_f_squared", || format!("n={n}"), total, factorial(n));
    }
    Ok(())
}

fn paired(kind: StatKind, t: usize, k: usize) -> StatSpec {
    StatSpec {
        kind,
        t,
        residue: k,
        power: 2,
        paired: true,
    }
}

/// For empty t-core: paired square sums of hooks minus contents equal
/// `2t²(Σ n_i n_{i+k} + Σ n_i n_{i+t−k})`.
pub fn square_identities_empty_core(c: &mut Checker, max_size: usize, ts: &[usize]) -> Result<()> {
    for &t in ts {
        for lambda in partitions_up_to(max_size) {
            let dec = decompose(&lambda, t)?;
            if !dec.core.is_empty() {
                continue;
            }
            let n = dec.quotient_sizes();
            let cells = lambda.cell_stats();
            for k in 0..t {
                let lhs = paired(StatKind::Hook, t, k).eval_cells(&cells)
                    - paired(StatKind::Content, t, k).eval_cells(&cells);
                let mut s: usize = (0..t - k).map(|i| n[i] * n[i + k]).sum();
                s += (0..k).map(|i| n[i] * n[i + t - k]).sum::<usize>();
                let rhs = BigInt::from(2 * t * t * s);
                c.eq(
                    "hook_content_square",
                    || format!("λ={lambda} t={t} k={k}"),
                    lhs,
                    rhs,
                );
            }
        }
    }
    Ok(())
}

/// `Σh² − Σc² = |λ|²`.
pub fn hook_content_square_sum(c: &mut Checker, max_size: usize) -> Result<()> {
    for lambda in partitions_up_to(max_size) {
        let cells = lambda.cell_stats();
        let lhs: i64 = cells
            .iter()
            .map(|x| (x.hook * x.hook) as i64 - x.content * x.content)
            .sum();
        let size = lambda.size() as i64;
        c.eq(
            "hook_minus_content",
            || format!("λ={lambda}"),
            lhs,
            size * size,
        );
    }
    Ok(())
}

/// Per-partition square identities over layers of nonempty t-cores, with the
/// `q_3` correction terms.
pub fn hook_content_square_cores(c: &mut Checker, ts: &[usize], n_max: usize) -> Result<()> {
    let cores = [p(&[1]), p(&[2]), p(&[5, 3, 1, 1])];
    for mu in &cores {
        for &t in ts.iter().filter(|&&t| t >= 2 && mu.is_t_core(t)) {
            let off = core_offsets(mu, t)?;
            let (b, d) = (&off.b, &off.d);
            let tt = rat(t as i64);
            let mu_cells = mu.cell_stats();
            for n in 0..=n_max {
                for pt in Layer::new(mu, t, n)? {
                    let lambda = &pt.lambda;
                    let cells = lambda.cell_stats();
                    let ns: Vec<ExactRational> =
                        pt.quotients.iter().map(|q| rat(q.size() as i64)).collect();
                    let q3: Vec<ExactRational> =
                        pt.quotients.iter().map(|q| rat_big(q_k(q, 3))).collect();
                    let dr: Vec<ExactRational> = d.iter().map(|&x| rat(x)).collect();
                    let third = rat(1) / rat(3);

                    for k in 1..t {
                        let diff = |cs: &[crate::partition::CellStat]| {
                            paired(StatKind::Hook, t, k).eval_cells(cs)
                                - paired(StatKind::Content, t, k).eval_cells(cs)
                        };
                        let lhs = rat_big(diff(&cells) - diff(&mu_cells));
                        let mut rhs = ExactRational::zero();
                        for (i, j) in b_k_pairs(t, k) {
                            let bi = rat(b[i]);
                            let bj = rat(b[j]);
                            rhs += rat(2) * &tt * &tt * &ns[i] * &ns[j];
                            rhs += &tt * (&bj + rat(j as i64) - rat(2) * &bi) * &dr[j] * &ns[i];
                            rhs += &tt * (&bi + rat(i as i64) - rat(2) * &bj) * &dr[i] * &ns[j];
                            rhs -= &third * &tt * &tt * (&dr[j] * &q3[i] + &dr[i] * &q3[j]);
                        }
                        c.eq(
                            "hook_content_square_core",
                            || format!("λ={lambda} μ={mu} t={t} k={k}"),
                            lhs,
                            rhs,
                        );
                    }

                    let h0 = StatSpec::hook(t, 0, 2, false);
                    let c0 = StatSpec::content(t, 0, 2);
                    let lhs = rat_big(h0.eval_cells(&cells) - c0.eval_cells(&cells));
                    let mut rhs = ExactRational::zero();
                    for i in 0..t {
                        rhs +=
                            &ns[i] * &ns[i] - &dr[i] * &dr[i] * &ns[i] - &third * &dr[i] * &q3[i];
                    }
                    rhs = rhs * &tt * &tt - rat_big(c0.eval_cells(&mu_cells));
                    c.eq(
                        "hook_content_square_zero",
                        || format!("λ={lambda} μ={mu} t={t}"),
                        lhs,
                        rhs,
                    );
                }
            }
        }
    }
    Ok(())
}

pub const INCREMENT_SAMPLES: usize = 100;

/// Random single-box additions to a quotient: predicted content and hook
/// changes against recomputation on the grown partition.
pub fn increments(c: &mut Checker, ts: &[usize], samples: usize, seed: u64) -> Result<()> {
    let mut rng = StdRng::seed_from_u64(seed);
    let pool: Vec<Partition> = partitions_up_to(12).collect();
    for &t in ts {
        for _ in 0..samples {
            let lambda = pool.choose(&mut rng).expect("nonempty pool");
            let dec = decompose(lambda, t)?;
            let i = (0..t)
                .collect::<Vec<_>>()
                .choose(&mut rng)
                .copied()
                .unwrap_or(0);
            let x = corners(&dec.quotients[i]).x;
            let cnt = *x.choose(&mut rng).expect("a partition has an inner corner");
            let grown = grow_quotient(&dec, i, cnt)?;
            let plus = grown.recompose();
            let who = || format!("λ={lambda} t={t} quotient={i} content={cnt}");

            let mut added = plus.contents();
            for v in lambda.contents() {
                let pos = added.iter().position(|&a| a == v).expect("λ ⊂ λ⁺");
                added.swap_remove(pos);
            }
            added.sort_unstable();
            let mut predicted = content_delta(&dec, i, cnt)?;
            predicted.sort_unstable();
            c.eq(
                "content_delta",
                who,
                format!("{added:?}"),
                format!("{predicted:?}"),
            );

            for r in 0..=2u32 {
                for k in 0..t {
                    let spec = StatSpec::hook(t, k, 2 * r, k != 0);
                    let direct = stat_eval(&plus, &spec) - stat_eval(lambda, &spec);
                    let formula = hook_delta_power(&dec, i, cnt, k, r)?;
                    c.eq(
                        "hook_delta_power",
                        || format!("{} k={k} r={r}", who()),
                        formula,
                        direct,
                    );
                }
                let all = StatSpec::hook(1, 0, 2 * r, false);
                let direct = stat_eval(&plus, &all) - stat_eval(lambda, &all);
                c.eq(
                    "hook_delta_total",
                    || format!("{} r={r}", who()),
                    hook_delta_total(&dec, i, cnt, r)?,
                    direct,
                );
            }
        }
    }
    Ok(())
}

/// The cores averaged over for a given `t`.
pub fn average_cores(t: usize) -> Vec<Partition> {
    match t {
        2 => vec![Partition::empty(), p(&[1])],
        3 => vec![Partition::empty(), p(&[5, 3, 1, 1]), p(&[3, 1])],
        _ => {
            let mut out = vec![Partition::empty()];
            out.extend(
                partitions_up_to(12)
                    .filter(|m| !m.is_empty() && m.is_t_core(t))
                    .take(2),
            );
            out
        }
    }
}

fn binom_r(n: usize, k: usize) -> ExactRational {
    rat_uint(&binomial(n, k))
}

/// Closed forms for weighted square sums of hooks and contents.
pub fn closed_form_averages(c: &mut Checker, ts: &[usize], ns: &[usize]) -> Result<()> {
    for &t in ts {
        let tt = rat(t as i64);
        for mu in average_cores(t) {
            let off = core_offsets(&mu, t)?;
            let mu_size = rat(mu.size() as i64);
            let mu_cells = mu.cell_stats();
            let core_term = |s: &StatSpec| rat_big(s.eval_cells(&mu_cells));
            for &n in ns {
                let nn = rat(n as i64);
                let cn2 = binom_r(n, 2);
                let mut check = |name: &str, spec: StatSpec, rhs: ExactRational| -> Result<()> {
                    let g = Statistic::weighted(t, vec![spec]);
                    let lhs = plancherel_average_par(&g, &mu, t, n)?;
                    c.eq(name, || format!("μ={mu} t={t} n={n} stat={spec}"), lhs, rhs);
                    Ok(())
                };

                for k in 1..t {
                    let spec = StatSpec::hook(t, k, 2, true);
                    let mu_k = residue_hook_count(&mu, t, k)? + residue_hook_count(&mu, t, t - k)?;
                    let lin = rat((2 * k * (t - k)) as i64) + rat(4) * &tt * rat(mu_k as i64);
                    let rhs = rat(6) * &tt * &cn2 + lin * &nn + core_term(&spec);
                    check("hook_square_paired", spec, rhs)?;
                }

                check(
                    "hook_square_zero",
                    StatSpec::hook(t, 0, 2, false),
                    &nn * &tt * &tt + rat(3) * &tt * &cn2,
                )?;

                let all_h = StatSpec::hook(1, 0, 2, false);
                let rhs = rat(3) * &tt * &tt * &nn * &nn / rat(2)
                    + &nn * &tt * (&tt * &tt - rat(3) * &tt - rat(1) + rat(24) * &mu_size) / rat(6)
                    + core_term(&all_h);
                check("hook_square_all", all_h, rhs)?;

                let all_c = StatSpec::content(1, 0, 2);
                if mu.is_empty() {
                    for k in 0..t {
                        let rhs = &tt * &cn2 + rat((k * (t - k) * n) as i64);
                        check(
                            "content_square_class_empty",
                            StatSpec::content(t, k, 2),
                            rhs,
                        )?;
                    }
                    let rhs = &tt * &tt * &cn2 + (&tt * &tt * &tt - &tt) * &nn / rat(6);
                    check("content_square_all_empty", all_c, rhs)?;
                }

                for k in 0..t {
                    let spec = StatSpec::content(t, k, 2);
                    let s: i64 = (0..t)
                        .map(|i| {
                            let ip = (i + t - k) % t;
                            (off.b[i] - ip as i64).pow(2)
                        })
                        .sum();
                    let rhs = &tt * &cn2 + rat(s) / &tt * &nn + core_term(&spec);
                    check("content_square_class", spec, rhs)?;
                }

                let rhs = &tt * &tt * &cn2
                    + (&tt * &tt * &tt - &tt) * &nn / rat(6)
                    + rat(2) * &tt * &nn * &mu_size
                    + core_term(&all_c);
                check("content_square_all", all_c, rhs)?;
            }
        }
    }
    Ok(())
}

/// `D_t G_λ = 0`.
pub fn dt_weight_vanishes(c: &mut Checker, max_size: usize, ts: &[usize]) {
    for &t in ts {
        let g = Statistic::weight(t);
        for lambda in partitions_up_to(max_size) {
            c.eq(
                "dt_weight",
                || format!("λ={lambda} t={t}"),
                apply_dt(&g, &lambda, t),
                ExactRational::zero(),
            );
        }
    }
}

/// The empty core and the first two nonempty t-cores.
pub fn sample_cores(t: usize) -> Vec<Partition> {
    let mut out = vec![Partition::empty()];
    out.extend(
        partitions_up_to(12)
            .filter(|m| !m.is_empty() && m.is_t_core(t))
            .take(2),
    );
    out
}

/// `Σ_layer F·G = 1`.
pub fn layer_weight_sums(c: &mut Checker, ts: &[usize], n_max: usize) -> Result<()> {
    for &t in ts {
        let g = Statistic::weight(t);
        for mu in sample_cores(t) {
            for n in 0..=n_max {
                let total = plancherel_average(&g, &mu, t, n)?;
                c.eq(
                    "layer_weight_sum",
                    || format!("μ={mu} t={t} n={n}"),
                    total,
                    rat(1),
                );
            }
        }
    }
    Ok(())
}

/// `Σ multinomial · ∏ f²/|λ^i|! = t^n` over t-tuples of partitions, evaluated
/// without reference to any layer.
pub fn multinomial_identity(c: &mut Checker, ts: &[usize], n_max: usize) {
    for &t in ts {
        let by_size: Vec<ExactRational> = (0..=n_max)
            .map(|m| {
                let s: BigUint = enumerate_partitions(m).map(|l| f_lambda(&l).pow(2)).sum();
                rat_uint(&s) / rat_uint(&factorial(m))
            })
            .collect();
        for n in 0..=n_max {
            let mut total = ExactRational::zero();
            for comp in compositions(n, t) {
                let weight = comp
                    .iter()
                    .fold(ExactRational::one(), |acc, &m| acc * &by_size[m]);
                total += rat_uint(&multinomial(&comp)) * weight;
            }
            let rhs = rat_uint(&BigUint::from(t).pow(n as u32));
            c.eq(
                "multinomial_identity",
                || format!("t={t} n={n}"),
                total,
                rhs,
            );
        }
    }
}

fn compositions(n: usize, parts: usize) -> Vec<Vec<usize>> {
    if parts == 0 {
        return if n == 0 { vec![vec![]] } else { vec![] };
    }
    let mut out = Vec::new();
    for first in 0..=n {
        for mut rest in compositions(n - first, parts - 1) {
            rest.insert(0, first);
            out.push(rest);
        }
    }
    out
}

/// Statistics exercised by the operator checks.
pub fn operator_statistics(t: usize) -> Vec<Statistic> {
    let mut out = vec![
        Statistic::weight(t),
        Statistic::weighted(t, vec![StatSpec::hook(t, 0, 2, false)]),
        Statistic::weighted(t, vec![StatSpec::content(t, 0, 2)]),
        Statistic::weighted(
            t,
            vec![StatSpec::content(1, 0, 1), StatSpec::hook(1, 0, 2, false)],
        ),
        Statistic::weighted(t, vec![StatSpec::content(t, 0, 1)]).without_weight(),
    ];
    if t > 1 {
        out.push(Statistic::weighted(t, vec![StatSpec::hook(t, 1, 2, true)]));
    }
    out
}

/// Grid of cores for the transform checks.
pub fn transform_cores(t: usize) -> Vec<Partition> {
    match t {
        2 => vec![Partition::empty(), p(&[1])],
        3 => vec![Partition::empty(), p(&[5, 3, 1, 1])],
        _ => vec![Partition::empty()],
    }
}

/// `P_g(n) = Σ C(n,k) D^k g(μ)` and its inverse, plus the telescoping step
/// `P_g(n+1) − P_g(n) = P_{D_t g}(n)`.
pub fn transform_pair(c: &mut Checker, ts: &[usize], n_max: usize) -> Result<()> {
    for &t in ts {
        for mu in transform_cores(t) {
            for g in operator_statistics(t) {
                let values: Vec<ExactRational> = (0..=n_max)
                    .map(|n| plancherel_average(&g, &mu, t, n))
                    .collect::<Result<_>>()?;
                let general = plancherel_averages_general(&g, &mu, t, n_max);
                let mut powers = Vec::with_capacity(n_max + 1);
                for r in 0..=n_max {
                    let recursive = apply_dt_power_recursive(&g, &mu, t, r);
                    let transform = inverse_binomial_transform(&general, r);
                    c.eq(
                        "dt_power_routes",
                        || format!("g={g} μ={mu} t={t} r={r}"),
                        recursive.clone(),
                        transform,
                    );
                    powers.push(recursive);
                }
                for n in 0..=n_max {
                    let who = || format!("g={g} μ={mu} t={t} n={n}");
                    c.eq(
                        "forward_transform",
                        who,
                        binomial_transform(&powers, n),
                        values[n].clone(),
                    );
                    c.eq(
                        "inverse_transform",
                        who,
                        inverse_binomial_transform(&values, n),
                        powers[n].clone(),
                    );
                    if n < n_max {
                        let dg = |l: &Partition| apply_dt(&g, l, t);
                        let step = plancherel_average(&dg, &mu, t, n)?;
                        c.eq("telescoping", who, &values[n + 1] - &values[n], step);
                    }
                }
            }
        }
    }
    Ok(())
}

/// Ten products of paired hook powers and content powers.
pub fn mixed_statistics(t: usize) -> Vec<Statistic> {
    let h = |j, pow, paired| StatSpec::hook(t, j, pow, paired);
    let cc = |j, pow| StatSpec::content(t, j, pow);
    let w = |f: Vec<StatSpec>| Statistic::weighted(t, f);
    vec![
        w(vec![h(1, 2, true), cc(0, 1), cc(1, 1)]),
        w(vec![h(0, 2, false), cc(1, 2)]),
        w(vec![h(1, 2, true), cc(0, 2)]),
        w(vec![h(0, 4, false)]),
        w(vec![h(1, 4, true)]),
        w(vec![cc(0, 3), cc(1, 1)]),
        w(vec![cc(1, 4)]),
        w(vec![h(0, 2, false), h(1, 2, true)]),
        w(vec![StatSpec::content(1, 0, 2), StatSpec::content(1, 0, 2)]),
        w(vec![StatSpec::hook(1, 0, 2, false), cc(0, 2)]),
    ]
}

/// Certifies `P_g` over the layers of the empty core.
fn record_certificate(
    c: &mut Checker,
    name: &str,
    who: &dyn Fn() -> String,
    g: &dyn PartitionFn,
    t: usize,
    d: usize,
    s: usize,
) -> Result<Vec<ExactRational>> {
    let table = certify_polynomiality(g, &Partition::empty(), t, d, s)?;
    c.eq(
        name,
        who,
        format!("{:?}", table.verdict),
        "Certified".to_string(),
    );
    c.eq("telescoping", who, table.telescoping, true);
    Ok(table.values)
}

/// Vanishing differences of order `bound + 1` on `[0, bound + 3]`.
pub fn mixed_certificates(c: &mut Checker, ts: &[usize]) -> Result<()> {
    for &t in ts {
        for g in mixed_statistics(t) {
            let d = g.degree_bound();
            let who = || format!("g={g} t={t} d={d}");
            record_certificate(c, "mixed_certificate", &who, &g, t, d, 3)?;
        }
    }
    Ok(())
}

fn exponent_tuples(t: usize, weight: usize) -> Vec<Vec<Partition>> {
    let mut out = Vec::new();
    for comp in compositions(weight, t) {
        let mut tuples: Vec<Vec<Partition>> = vec![vec![]];
        for &m in &comp {
            let options: Vec<Partition> = enumerate_partitions(m).collect();
            tuples = tuples
                .into_iter()
                .flat_map(|prefix| {
                    options.iter().map(move |o| {
                        let mut next = prefix.clone();
                        next.push(o.clone());
                        next
                    })
                })
                .collect();
        }
        out.extend(tuples);
    }
    out
}

/// `D_t^r (G·∏ q_{ν^i}(λ^i)) = 0` from the predicted order on, at every
/// partition of size at most 4; the averages over the empty core are
/// certified at the matching degree.
pub fn q_statistic_vanishing(c: &mut Checker, ts: &[usize], max_weight: usize) -> Result<()> {
    let bases: Vec<Partition> = partitions_up_to(4).collect();
    for &t in ts {
        for w in 0..=max_weight {
            let r = q_vanishing_order(w);
            for exps in exponent_tuples(t, w) {
                let g = Statistic::weighted_q(t, exps.clone());
                for base in &bases {
                    let who = || format!("ν={exps:?} λ={base} t={t} r={r}");
                    match apply_dt_power(&g, base, t, r) {
                        Ok(v) => {
                            c.eq("q_vanishing", who, v, ExactRational::zero());
                        }
                        Err(e) => c.error("q_vanishing", who, &e),
                    }
                }
                let who = || format!("ν={exps:?} t={t}");
                record_certificate(c, "q_certificate", &who, &g, t, g.degree_bound(), 2)?;
            }
        }
    }
    Ok(())
}

/// Classical (`t = 1`) averages of `p_1`, `p_2` on contents and on squared
/// hooks, certified on `[0, n_max]` and compared with `(1/n!) Σ f² Q`.
pub fn classical_certificates(c: &mut Checker, n_max: usize) -> Result<()> {
    let stats = [
        StatSpec::content(1, 0, 1),
        StatSpec::content(1, 0, 2),
        StatSpec::hook(1, 0, 2, false),
        StatSpec::hook(1, 0, 4, false),
    ];
    for spec in stats {
        let g = Statistic::weighted(1, vec![spec]);
        let d = g.degree_bound();
        let who = || format!("stat={spec} d={d}");
        let values = record_certificate(
            c,
            "classical_certificate",
            &who,
            &g,
            1,
            d,
            n_max.saturating_sub(d).max(1),
        )?;
        for (n, v) in values.iter().enumerate().take(n_max + 1) {
            let sum: BigInt = enumerate_partitions(n)
                .map(|l| BigInt::from(f_lambda(&l).pow(2)) * stat_eval(&l, &spec))
                .sum();
            let direct = rat_big(sum) / rat_uint(&factorial(n));
            c.eq(
                "classical_direct",
                || format!("stat={spec} n={n}"),
                v.clone(),
                direct,
            );
        }
    }
    Ok(())
}

/// Runs a check group into a fresh checker, for callers that report groups
/// separately.
pub fn group(f: impl FnOnce(&mut Checker) -> Result<()>) -> Checker {
    let mut c = Checker::new();
    if let Err(e) = f(&mut c) {
        c.error("internal", String::new, &e);
    }
    c
}

/// Merges group checkers.
pub fn merge(groups: impl IntoIterator<Item = Checker>) -> Checker {
    let mut all = Checker::new();
    for g in groups {
        all.absorb(g);
    }
    all
}
