//! The bi-infinite 01-sequence of a partition boundary.
//!
//! Walking the boundary from the bottom to the right, vertical edges read 0
//! and horizontal edges read 1. Index 0 sits where the number of 1's to the
//! left equals the number of 0's to the right. Concretely, the 0's are at the
//! positions `λ_k - k` for `k ≥ 1`.
//!
//! Only a finite window is stored: every index below `lo` reads 0 and every
//! index past the window reads 1.

use std::fmt;

use crate::error::{Error, Result};
use crate::partition::Partition;

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct BoundarySequence {
    lo: i64,
    bits: Vec<bool>,
}

impl BoundarySequence {
    /// Builds a canonical sequence from an arbitrary window starting at `lo`.
    /// Leading 0's and trailing 1's are absorbed into the implicit tails.
    pub fn from_window(mut lo: i64, bits: &[bool]) -> Self {
        let start = bits.iter().position(|&b| b).unwrap_or(bits.len());
        lo += start as i64;
        let bits = &bits[start..];
        let end = bits.iter().rposition(|&b| !b).map_or(0, |e| e + 1);
        BoundarySequence {
            lo,
            bits: bits[..end].to_vec(),
        }
    }

    /// Builds a canonical sequence reading `z(i)` on `lo..=hi`.
    pub fn from_fn(lo: i64, hi: i64, z: impl Fn(i64) -> bool) -> Self {
        let bits: Vec<bool> = (lo..=hi).map(z).collect();
        Self::from_window(lo, &bits)
    }

    pub fn encode(lambda: &Partition) -> Self {
        let rows = lambda.len() as i64;
        if rows == 0 {
            return BoundarySequence {
                lo: 0,
                bits: Vec::new(),
            };
        }
        let lo = -rows;
        let hi = lambda.part(0) as i64 - 1;
        let mut bits = vec![true; (hi - lo + 1) as usize];
        for (k, &part) in lambda.parts().iter().enumerate() {
            let pos = part as i64 - (k as i64 + 1);
            bits[(pos - lo) as usize] = false;
        }
        BoundarySequence { lo, bits }
    }

    /// Inverse of [`encode`](Self::encode). The sequence must be balanced.
    pub fn decode(&self) -> Result<Partition> {
        let charge = self.charge();
        if charge != 0 {
            return Err(Error::Unbalanced { charge });
        }
        Ok(self.decode_unchecked())
    }

    fn decode_unchecked(&self) -> Partition {
        let parts: Vec<usize> = self
            .zeros_desc()
            .enumerate()
            .map(|(k, pos)| (pos + k as i64 + 1) as usize)
            .collect();
        Partition::from_sorted(parts)
    }

    /// First stored index.
    pub fn lo(&self) -> i64 {
        self.lo
    }

    /// Last stored index (`lo - 1` for an empty window).
    pub fn hi(&self) -> i64 {
        self.lo + self.bits.len() as i64 - 1
    }

    /// `z_i`, as `true` for 1.
    pub fn get(&self, i: i64) -> bool {
        if i < self.lo {
            false
        } else {
            self.bits
                .get((i - self.lo) as usize)
                .copied()
                .unwrap_or(true)
        }
    }

    /// `#{i ≥ 0 : z_i = 0} − #{i < 0 : z_i = 1}`; zero exactly when balanced.
    pub fn charge(&self) -> i64 {
        let zeros = self.bits.iter().filter(|&&b| !b).count() as i64;
        zeros + self.lo
    }

    /// The same sequence re-indexed so that it is balanced.
    pub fn rebalanced(&self) -> Self {
        BoundarySequence {
            lo: self.lo - self.charge(),
            bits: self.bits.clone(),
        }
    }

    fn zeros_desc(&self) -> impl Iterator<Item = i64> + '_ {
        self.bits
            .iter()
            .enumerate()
            .rev()
            .filter(|(_, &b)| !b)
            .map(move |(k, _)| self.lo + k as i64)
    }

    /// All pairs `i < j` with `z_i = 1`, `z_j = 0`. Each pair is one cell of
    /// the diagram, with hook length `j − i`.
    pub fn inversion_pairs(&self) -> Vec<(i64, i64)> {
        let mut out = Vec::new();
        for (a, &za) in self.bits.iter().enumerate() {
            if !za {
                continue;
            }
            for (b, &zb) in self.bits.iter().enumerate().skip(a + 1) {
                if !zb {
                    out.push((self.lo + a as i64, self.lo + b as i64));
                }
            }
        }
        out
    }

    /// Contents of the inner corners (`z_{k−1}z_k = 01`) and outer corners
    /// (`z_{k−1}z_k = 10`), both ascending.
    pub fn corner_contents(&self) -> (Vec<i64>, Vec<i64>) {
        let mut inner = Vec::new();
        let mut outer = Vec::new();
        for k in self.lo..=self.hi() + 1 {
            match (self.get(k - 1), self.get(k)) {
                (false, true) => inner.push(k),
                (true, false) => outer.push(k),
                _ => {}
            }
        }
        (inner, outer)
    }

    /// Exchanges `z_i` and `z_j`.
    pub fn swapped(&self, i: i64, j: i64) -> Self {
        let (zi, zj) = (self.get(i), self.get(j));
        let lo = self.lo.min(i).min(j);
        let hi = self.hi().max(i).max(j);
        Self::from_fn(lo, hi, |k| {
            if k == i {
                zj
            } else if k == j {
                zi
            } else {
                self.get(k)
            }
        })
    }
}

impl fmt::Display for BoundarySequence {
    /// Renders `⋯0…|…1⋯` with the bar between indices −1 and 0.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let from = self.lo.min(0) - 2;
        let to = self.hi().max(-1) + 2;
        f.write_str("⋯")?;
        for i in from..=to {
            if i == 0 {
                f.write_str("|")?;
            }
            f.write_str(if self.get(i) { "1" } else { "0" })?;
        }
        f.write_str("⋯")
    }
}

impl fmt::Debug for BoundarySequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partition::partitions_up_to;

    fn p(parts: &[i64]) -> Partition {
        Partition::new(parts).unwrap()
    }

    #[test]
    fn encode_running_examples() {
        let z = BoundarySequence::encode(&p(&[5, 3, 1, 1]));
        assert_eq!(z.to_string(), "⋯001001|1011011⋯");
        let z = BoundarySequence::encode(&p(&[18, 7, 6]));
        assert!(z.to_string().starts_with("⋯00111|1110101111111111101"));
        assert_eq!(z.charge(), 0);
        let e = BoundarySequence::encode(&Partition::empty());
        assert_eq!(e.to_string(), "⋯00|11⋯");
        assert!((-5..0).all(|i| !e.get(i)) && (0..5).all(|i| e.get(i)));
    }

    #[test]
    fn decode_examples() {
        let bits: Vec<bool> = "1001101101".chars().map(|c| c == '1').collect();
        let z = BoundarySequence::from_window(-4, &bits);
        assert_eq!(z.decode().unwrap(), p(&[5, 3, 1, 1]));
        assert_eq!(
            BoundarySequence::from_window(0, &[]).decode().unwrap(),
            Partition::empty()
        );
        let shifted = BoundarySequence::from_window(-3, &bits);
        assert_eq!(shifted.decode(), Err(Error::Unbalanced { charge: 1 }));
        assert_eq!(shifted.rebalanced().decode().unwrap(), p(&[5, 3, 1, 1]));
    }

    #[test]
    fn round_trip_to_twenty() {
        for l in partitions_up_to(20) {
            assert_eq!(BoundarySequence::encode(&l).decode().unwrap(), l);
        }
    }

    #[test]
    fn inversion_pairs_are_cells() {
        let one = BoundarySequence::encode(&p(&[1]));
        assert_eq!(one.inversion_pairs(), vec![(-1, 0)]);
        assert!(BoundarySequence::encode(&Partition::empty())
            .inversion_pairs()
            .is_empty());
        let l = p(&[5, 3, 1, 1]);
        let pairs = BoundarySequence::encode(&l).inversion_pairs();
        assert_eq!(pairs.len(), 10);
        let mut from_pairs: Vec<usize> = pairs.iter().map(|(i, j)| (j - i) as usize).collect();
        from_pairs.sort();
        let mut hooks = l.hooks();
        hooks.sort();
        assert_eq!(from_pairs, hooks);
    }

    #[test]
    fn corner_examples() {
        let z = BoundarySequence::encode(&p(&[6, 3, 2, 2]));
        assert_eq!(z.corner_contents(), (vec![-4, 0, 2, 6], vec![-2, 1, 5]));
        let z = BoundarySequence::encode(&Partition::empty());
        assert_eq!(z.corner_contents(), (vec![0], vec![]));
        let z = BoundarySequence::encode(&p(&[3]));
        assert_eq!(z.corner_contents(), (vec![-1, 3], vec![2]));
    }

    #[test]
    fn content_reading_matches_cells() {
        // A 0 at index i closes a row whose last cell has content i; a 1 at
        // index i closes a column whose bottom cell has content i + 1.
        for l in partitions_up_to(15) {
            let z = BoundarySequence::encode(&l);
            let cells = l.cell_stats();
            for i in z.lo()..=z.hi() {
                if !z.get(i) {
                    let row_end = cells
                        .iter()
                        .any(|c| c.content == i && c.col == l.part(c.row - 1));
                    assert!(row_end, "{l} index {i}");
                } else {
                    let col_end = cells
                        .iter()
                        .any(|c| c.content == i + 1 && c.row == l.conjugate().part(c.col - 1));
                    assert!(col_end, "{l} index {i}");
                }
            }
        }
    }

    #[test]
    fn corners_interleave() {
        for l in partitions_up_to(14) {
            let (x, y) = BoundarySequence::encode(&l).corner_contents();
            assert_eq!(x.len(), y.len() + 1);
            for (k, yk) in y.iter().enumerate() {
                assert!(x[k] < *yk && *yk < x[k + 1]);
            }
        }
    }
}
