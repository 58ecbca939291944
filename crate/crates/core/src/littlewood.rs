//! t-hooks, t-cores, t-quotients and the Littlewood bijection
//! `λ ↔ (t-core; λ^0, …, λ^{t−1})`, read off the 01-sequence one residue
//! class at a time.

use num_bigint::BigInt;
use num_rational::BigRational;
use serde::Serialize;

use crate::boundary::BoundarySequence;
use crate::error::{Error, Result};
use crate::partition::Partition;

/// Offsets of a t-core: `b_i` is the first 1 in residue class `i` of its
/// 01-sequence and `b_i = t·d_i + i`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CoreOffsets {
    #[serde(skip)]
    pub t: usize,
    pub b: Vec<i64>,
    pub d: Vec<i64>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LittlewoodDecomposition {
    pub t: usize,
    pub core: Partition,
    pub quotients: Vec<Partition>,
    #[serde(flatten)]
    pub offsets: CoreOffsets,
}

impl LittlewoodDecomposition {
    pub fn quotient_sizes(&self) -> Vec<usize> {
        self.quotients.iter().map(Partition::size).collect()
    }

    /// `Σ|λ^i|`, the number of t-hooks above the core.
    pub fn weight(&self) -> usize {
        self.quotients.iter().map(Partition::size).sum()
    }

    /// `|λ| = |core| + t·Σ|λ^i|`.
    pub fn size(&self) -> usize {
        self.core.size() + self.t * self.weight()
    }

    pub fn recompose(&self) -> Partition {
        recompose_with(&self.offsets, &self.quotients)
    }
}

fn check_t(t: usize) -> Result<()> {
    if t == 0 {
        Err(Error::ZeroModulus)
    } else {
        Ok(())
    }
}

/// Residue class `i` of `z`, as its own sequence `j ↦ z_{tj+i}` (unbalanced).
fn residue_subsequence(z: &BoundarySequence, t: usize, i: usize) -> BoundarySequence {
    let t = t as i64;
    let i = i as i64;
    let jlo = (z.lo() - i).div_euclid(t) - 1;
    let jhi = (z.hi() - i).div_euclid(t) + 1;
    BoundarySequence::from_fn(jlo, jhi, |j| z.get(t * j + i))
}

pub fn decompose(lambda: &Partition, t: usize) -> Result<LittlewoodDecomposition> {
    check_t(t)?;
    let z = BoundarySequence::encode(lambda);
    let mut quotients = Vec::with_capacity(t);
    let mut d = Vec::with_capacity(t);
    for i in 0..t {
        let sub = residue_subsequence(&z, t, i);
        d.push(sub.charge());
        quotients.push(sub.rebalanced().decode()?);
    }
    let b: Vec<i64> = d
        .iter()
        .enumerate()
        .map(|(i, &di)| t as i64 * di + i as i64)
        .collect();
    let offsets = CoreOffsets { t, b, d };
    let core = core_from_offsets(&offsets);
    Ok(LittlewoodDecomposition {
        t,
        core,
        quotients,
        offsets,
    })
}

fn core_from_offsets(offsets: &CoreOffsets) -> Partition {
    let t = offsets.t as i64;
    let lo = offsets.b.iter().min().copied().unwrap_or(0) - t;
    let hi = offsets.b.iter().max().copied().unwrap_or(0) + t;
    BoundarySequence::from_fn(lo, hi, |k| k >= offsets.b[k.rem_euclid(t) as usize])
        .decode()
        .expect("offsets with zero sum give a balanced sequence")
}

pub fn t_core(lambda: &Partition, t: usize) -> Result<Partition> {
    Ok(decompose(lambda, t)?.core)
}

pub fn t_quotients(lambda: &Partition, t: usize) -> Result<Vec<Partition>> {
    Ok(decompose(lambda, t)?.quotients)
}

/// Reads `b_i = min{j ≡ i (mod t) : z_j = 1}` straight off the 01-sequence
/// of a t-core.
pub fn core_offsets(mu: &Partition, t: usize) -> Result<CoreOffsets> {
    mu.check_t_core(t)?;
    let z = BoundarySequence::encode(mu);
    let tt = t as i64;
    let mut b = Vec::with_capacity(t);
    for i in 0..tt {
        let mut j = i + tt * (z.lo() - i).div_euclid(tt) - tt;
        while !z.get(j) {
            j += tt;
        }
        b.push(j);
    }
    let d = b
        .iter()
        .enumerate()
        .map(|(i, &bi)| (bi - i as i64) / tt)
        .collect();
    Ok(CoreOffsets { t, b, d })
}

/// Inverse of [`decompose`].
pub fn recompose(core: &Partition, quotients: &[Partition], t: usize) -> Result<Partition> {
    let offsets = core_offsets(core, t)?;
    if quotients.len() != t {
        return Err(Error::QuotientCount {
            expected: t,
            got: quotients.len(),
        });
    }
    Ok(recompose_with(&offsets, quotients))
}

pub(crate) fn recompose_with(offsets: &CoreOffsets, quotients: &[Partition]) -> Partition {
    let t = offsets.t as i64;
    let seqs: Vec<BoundarySequence> = quotients.iter().map(BoundarySequence::encode).collect();
    let mut lo = i64::MAX;
    let mut hi = i64::MIN;
    for (seq, &b) in seqs.iter().zip(&offsets.b) {
        lo = lo.min(t * seq.lo() + b - t);
        hi = hi.max(t * (seq.hi() + 1) + b);
    }
    BoundarySequence::from_fn(lo, hi, |k| {
        let r = k.rem_euclid(t) as usize;
        seqs[r].get((k - offsets.b[r]) / t)
    })
    .decode()
    .expect("quotients over a t-core give a balanced sequence")
}

/// All partitions obtained from `lambda` by adding one t-hook.
pub fn t_hook_additions(lambda: &Partition, t: usize) -> Vec<Partition> {
    let z = BoundarySequence::encode(lambda);
    let t = t as i64;
    (z.lo() - t..=z.hi())
        .filter(|&i| !z.get(i) && z.get(i + t))
        .map(|i| z.swapped(i, i + t).decode().expect("swap keeps balance"))
        .collect()
}

/// All partitions obtained from `lambda` by removing one t-hook.
pub fn t_hook_removals(lambda: &Partition, t: usize) -> Vec<Partition> {
    let z = BoundarySequence::encode(lambda);
    let t = t as i64;
    (z.lo()..=z.hi() - t)
        .filter(|&i| z.get(i) && !z.get(i + t))
        .map(|i| z.swapped(i, i + t).decode().expect("swap keeps balance"))
        .collect()
}

/// `|λ(k)|`: the number of hook lengths congruent to `k` mod `t`.
pub fn residue_hook_count(lambda: &Partition, t: usize, k: usize) -> Result<usize> {
    check_t(t)?;
    if k >= t {
        return Err(Error::ResidueOutOfRange { residue: k, t });
    }
    Ok(lambda.hooks().into_iter().filter(|h| h % t == k).count())
}

/// `C(x, 2) = x(x − 1)/2` for any integer `x`.
pub fn binom2(x: i64) -> i64 {
    x * (x - 1) / 2
}

/// The multiset `B_k` of index pairs `(i, i+k)` and `(i, i+t−k)`; when
/// `k = t − k` both halves are kept.
pub fn b_k_pairs(t: usize, k: usize) -> Vec<(usize, usize)> {
    if k == 0 || k >= t {
        return Vec::new();
    }
    let mut out: Vec<(usize, usize)> = (0..t - k).map(|i| (i, i + k)).collect();
    out.extend((0..k).map(|i| (i, i + t - k)));
    out
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BkCheck {
    pub name: &'static str,
    pub k: Option<usize>,
    #[serde(serialize_with = "crate::rational::serialize_rational")]
    pub lhs: BigRational,
    #[serde(serialize_with = "crate::rational::serialize_rational")]
    pub rhs: BigRational,
}

impl BkCheck {
    pub fn passed(&self) -> bool {
        self.lhs == self.rhs
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct BkReport {
    pub t: usize,
    pub core: Partition,
    pub checks: Vec<BkCheck>,
}

impl BkReport {
    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(BkCheck::passed)
    }
}

fn int(x: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(x))
}

/// Evaluates both sides of the identities relating the offsets `d_i` of a
/// t-core to the pairs `B_k` and to the size of the core.
pub fn bk_identities(mu: &Partition, t: usize) -> Result<BkReport> {
    let off = core_offsets(mu, t)?;
    let (b, d) = (&off.b, &off.d);
    let tt = t as i64;
    let mut checks = Vec::new();
    let check = |name, k, lhs: i64, rhs: i64| BkCheck {
        name,
        k,
        lhs: int(lhs),
        rhs: int(rhs),
    };

    checks.push(check("sum_d", None, d.iter().sum(), 0));
    for k in 1..t {
        let pairs = b_k_pairs(t, k);
        let kk = k as i64;
        let sq: i64 = pairs
            .iter()
            .map(|&(i, j)| (j as i64 - i as i64).pow(2))
            .sum();
        checks.push(check("bk1", Some(k), sq, tt * kk * (tt - kk)));

        let lhs: i64 = pairs
            .iter()
            .map(|&(i, j)| (2 * j as i64 - 2 * i as i64) * (d[i] - d[j]))
            .sum();
        let rhs: i64 = pairs.iter().map(|&(i, j)| tt * (d[i] - d[j])).sum();
        checks.push(check("bk2", Some(k), lhs, rhs));

        let direct = residue_hook_count(mu, t, k)? + residue_hook_count(mu, t, t - k)?;
        let formula: i64 = pairs.iter().map(|&(i, j)| binom2(d[i] - d[j])).sum();
        checks.push(check("residue_hooks", Some(k), direct as i64, formula));
    }

    let pairs_lt = || (0..t).flat_map(move |i| (i + 1..t).map(move |j| (i, j)));
    let lhs = tt * d.iter().map(|x| x * x).sum::<i64>();
    let rhs = pairs_lt().map(|(i, j)| (d[i] - d[j]).pow(2)).sum();
    checks.push(check("bk3", None, lhs, rhs));

    let lhs = -2 * d.iter().enumerate().map(|(i, x)| i as i64 * x).sum::<i64>();
    let rhs = pairs_lt().map(|(i, j)| d[i] - d[j]).sum();
    checks.push(check("bk4", None, lhs, rhs));

    let size = mu.size() as i64;
    let binoms = pairs_lt().map(|(i, j)| binom2(d[i] - d[j])).sum();
    checks.push(check("size_binomial", None, binoms, size));
    // (t/2)Σd² + Σ i·d_i, kept exact by doubling both sides.
    let quad = tt * d.iter().map(|x| x * x).sum::<i64>()
        + 2 * d.iter().enumerate().map(|(i, x)| i as i64 * x).sum::<i64>();
    checks.push(BkCheck {
        name: "size_quadratic",
        k: None,
        lhs: int(quad) / int(2),
        rhs: int(size),
    });
    let offsets_sum: i64 = pairs_lt()
        .map(|(i, j)| (b[i] - b[j]).pow(2) - (i as i64 - j as i64).pow(2))
        .sum();
    checks.push(BkCheck {
        name: "size_offsets",
        k: None,
        lhs: int(offsets_sum) / int(2 * tt * tt),
        rhs: int(size),
    });
    Ok(BkReport {
        t,
        core: mu.clone(),
        checks,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partition::partitions_up_to;
    use num_traits::Zero;

    fn p(parts: &[i64]) -> Partition {
        Partition::new(parts).unwrap()
    }

    #[test]
    fn running_example_decomposition() {
        let dec = decompose(&p(&[18, 7, 6]), 3).unwrap();
        assert_eq!(dec.core, p(&[3, 1]));
        assert_eq!(dec.quotients, vec![p(&[2]), Partition::empty(), p(&[5, 2])]);
        assert_eq!(dec.size(), 31);
        assert_eq!(dec.recompose(), p(&[18, 7, 6]));
        let json = serde_json::to_string(&dec).unwrap();
        assert_eq!(
            json,
            r#"{"t":3,"core":"3,1","quotients":["2","-","5,2"],"b":[0,-2,5],"d":[0,-1,1]}"#
        );
    }

    #[test]
    fn core_examples() {
        assert_eq!(t_core(&p(&[6, 3, 2, 2]), 7).unwrap(), p(&[6, 3, 2, 2]));
        assert_eq!(t_core(&p(&[6, 3, 2, 2]), 1).unwrap(), Partition::empty());
        assert_eq!(
            t_quotients(&p(&[6, 3, 2, 2]), 1).unwrap(),
            vec![p(&[6, 3, 2, 2])]
        );
        assert_eq!(
            t_quotients(&Partition::empty(), 4).unwrap(),
            vec![Partition::empty(); 4]
        );
        let q = t_quotients(&p(&[2]), 2).unwrap();
        assert_eq!(q.iter().filter(|x| x.is_empty()).count(), 1);
        assert!(q.contains(&p(&[1])));
        assert_eq!(t_core(&p(&[1]), 0), Err(Error::ZeroModulus));
    }

    #[test]
    fn offsets_examples() {
        let off = core_offsets(&p(&[5, 3, 1, 1]), 3).unwrap();
        assert_eq!(off.b, vec![0, 7, -4]);
        assert_eq!(off.d, vec![0, 2, -2]);
        let off = core_offsets(&Partition::empty(), 4).unwrap();
        assert_eq!(off.b, vec![0, 1, 2, 3]);
        assert_eq!(off.d, vec![0; 4]);
        let off = core_offsets(&p(&[1]), 2).unwrap();
        assert_eq!(off.b, vec![2, -1]);
        assert_eq!(off.d, vec![1, -1]);
        assert!(matches!(
            core_offsets(&p(&[2]), 2),
            Err(Error::NotTCore { .. })
        ));
        // The decomposition's offsets agree with the direct scan.
        assert_eq!(
            decompose(&p(&[5, 3, 1, 1]), 3).unwrap().offsets,
            core_offsets(&p(&[5, 3, 1, 1]), 3).unwrap()
        );
    }

    #[test]
    fn recompose_examples() {
        let l = recompose(&p(&[3, 1]), &[p(&[2]), Partition::empty(), p(&[5, 2])], 3).unwrap();
        assert_eq!(l, p(&[18, 7, 6]));
        let e = Partition::empty();
        assert_eq!(recompose(&e, &[e.clone(), e.clone()], 2).unwrap(), e);
        let l = recompose(&e, &[p(&[1]), p(&[1])], 2).unwrap();
        assert_eq!(l.size(), 4);
        assert_eq!(t_quotients(&l, 2).unwrap(), vec![p(&[1]), p(&[1])]);
        assert!(recompose(&p(&[2]), &[e.clone(), e.clone()], 2).is_err());
        assert!(recompose(&e, std::slice::from_ref(&e), 2).is_err());
    }

    #[test]
    fn hook_moves() {
        let mut covers = t_hook_additions(&Partition::empty(), 2);
        covers.sort();
        assert_eq!(covers, vec![p(&[1, 1]), p(&[2])]);
        assert_eq!(t_hook_additions(&Partition::empty(), 1), vec![p(&[1])]);
        let covers = t_hook_additions(&p(&[3, 1]), 3);
        assert_eq!(covers.len(), 3);
        for c in &covers {
            let dec = decompose(c, 3).unwrap();
            assert_eq!(dec.core, p(&[3, 1]));
            assert_eq!(dec.weight(), 1);
            assert!(t_hook_removals(c, 3).contains(&p(&[3, 1])));
        }
        assert!(t_hook_removals(&p(&[3, 1]), 3).is_empty());
    }

    #[test]
    fn residue_counts() {
        let mu = p(&[5, 3, 1, 1]);
        assert_eq!(residue_hook_count(&mu, 3, 0).unwrap(), 0);
        let d = core_offsets(&mu, 3).unwrap().d;
        let direct =
            residue_hook_count(&mu, 3, 1).unwrap() + residue_hook_count(&mu, 3, 2).unwrap();
        let formula: i64 = b_k_pairs(3, 1)
            .iter()
            .map(|&(i, j)| binom2(d[i] - d[j]))
            .sum();
        assert_eq!(direct as i64, formula);

        let l = p(&[18, 7, 6]);
        let core = p(&[3, 1]);
        let lhs = residue_hook_count(&l, 3, 1).unwrap() + residue_hook_count(&l, 3, 2).unwrap()
            - residue_hook_count(&core, 3, 1).unwrap()
            - residue_hook_count(&core, 3, 2).unwrap();
        assert_eq!(lhs, 18);
    }

    #[test]
    fn bk_examples() {
        assert_eq!(b_k_pairs(3, 1), vec![(0, 1), (1, 2), (0, 2)]);
        assert_eq!(b_k_pairs(4, 2), vec![(0, 2), (1, 3), (0, 2), (1, 3)]);
        let rep = bk_identities(&p(&[5, 3, 1, 1]), 3).unwrap();
        assert!(rep.all_passed(), "{rep:?}");
        let bk1 = rep
            .checks
            .iter()
            .find(|c| c.name == "bk1" && c.k == Some(1))
            .unwrap();
        assert_eq!(bk1.lhs, int(6));
        let size = rep
            .checks
            .iter()
            .find(|c| c.name == "size_binomial")
            .unwrap();
        assert_eq!(size.lhs, int(10));
        let rep = bk_identities(&Partition::empty(), 4).unwrap();
        assert!(rep.all_passed());
        assert!(rep
            .checks
            .iter()
            .filter(|c| ["bk2", "bk3", "bk4"].contains(&c.name))
            .all(|c| c.lhs.is_zero()));
    }

    #[test]
    fn bk_identities_on_small_cores() {
        for t in 1..=5 {
            for mu in partitions_up_to(15).filter(|m| m.is_t_core(t)) {
                let rep = bk_identities(&mu, t).unwrap();
                assert!(rep.all_passed(), "{mu} t={t}: {rep:?}");
            }
        }
    }
}
