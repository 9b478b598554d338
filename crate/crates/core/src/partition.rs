//! Integer partitions as conjugacy classes of the symmetric group.
//!
//! A partition of `n` is stored as its multiplicity vector: `counts[i - 1]`
//! is the number of parts equal to `i` (cycles of length `i`). Each class
//! carries the weight `class_size * 2^c`, where `c` is the number of orbits
//! of a class representative on vertex pairs; summed over all classes the
//! weights give `n! * g_n`.

use std::fmt;

use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::One;

use crate::error::{Error, Result};
use crate::graph::Permutation;

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Partition {
    counts: Vec<u32>,
}

impl Partition {
    /// `counts[i - 1] = k_i`; requires `sum(i * k_i) == counts.len()`.
    pub fn from_counts(counts: Vec<u32>) -> Result<Self> {
        let total: usize = counts
            .iter()
            .enumerate()
            .map(|(i, &k)| (i + 1) * k as usize)
            .sum();
        if total != counts.len() {
            return Err(Error::invalid(format!(
                "multiplicities {counts:?} sum to {total}, expected {}",
                counts.len()
            )));
        }
        Ok(Self { counts })
    }

    /// Builds the partition of `sum(parts)` with the given parts (any order).
    pub fn from_parts(parts: &[u32]) -> Result<Self> {
        if parts.contains(&0) {
            return Err(Error::invalid("partition parts must be positive"));
        }
        let n: usize = parts.iter().map(|&p| p as usize).sum();
        let mut counts = vec![0u32; n];
        for &p in parts {
            counts[p as usize - 1] += 1;
        }
        Ok(Self { counts })
    }

    pub fn identity(n: usize) -> Self {
        let mut counts = vec![0; n];
        if n > 0 {
            counts[0] = n as u32;
        }
        Self { counts }
    }

    pub fn n(&self) -> usize {
        self.counts.len()
    }

    pub fn counts(&self) -> &[u32] {
        &self.counts
    }

    /// Number of parts of size `i` (`k_i`); zero outside `1..=n`.
    pub fn multiplicity(&self, i: usize) -> u32 {
        if i == 0 {
            0
        } else {
            self.counts.get(i - 1).copied().unwrap_or(0)
        }
    }

    /// Parts in non-increasing order.
    pub fn parts(&self) -> Vec<u32> {
        let mut parts = Vec::new();
        for (i, &k) in self.counts.iter().enumerate().rev() {
            parts.extend(std::iter::repeat_n((i + 1) as u32, k as usize));
        }
        parts
    }

    fn with_fixed_points(n: usize, parts: &[u32]) -> Self {
        let mut counts = vec![0u32; n];
        let mut moved = 0usize;
        for &p in parts {
            counts[p as usize - 1] += 1;
            moved += p as usize;
        }
        if n > moved {
            counts[0] += (n - moved) as u32;
        }
        Self { counts }
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.parts().iter().map(u32::to_string).collect();
        write!(f, "[{}]", parts.join(","))
    }
}

pub fn euler_phi(i: u64) -> u64 {
    assert!(i >= 1, "phi is defined on positive integers");
    let mut result = i;
    let mut m = i;
    let mut p = 2;
    while p * p <= m {
        if m.is_multiple_of(p) {
            while m.is_multiple_of(p) {
                m /= p;
            }
            result -= result / p;
        }
        p += 1;
    }
    if m > 1 {
        result -= result / m;
    }
    result
}

pub fn factorial(n: usize) -> BigUint {
    (1..=n as u64).fold(BigUint::one(), |acc, k| acc * k)
}

/// Weight data for one conjugacy class.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClassWeight {
    pub partition: Partition,
    /// `n! / prod(i^k_i * k_i!)`
    pub class_size: BigUint,
    /// `l[i - 1] = sum of k_j over multiples j of i`
    pub l: Vec<u64>,
    /// Orbits of a class member on unordered vertex pairs.
    pub c: u64,
    /// `class_size * 2^c`
    pub w: BigUint,
}

pub fn class_size(p: &Partition) -> BigUint {
    let mut denom = BigUint::one();
    for (idx, &k) in p.counts().iter().enumerate() {
        let i = (idx + 1) as u64;
        for m in 1..=k as u64 {
            denom *= i * m;
        }
    }
    let (q, r) = factorial(p.n()).div_rem(&denom);
    debug_assert!(r == BigUint::from(0u8));
    q
}

/// Pair-orbit count from the divisor-cycle counts `l`.
pub fn pair_orbit_count(p: &Partition) -> u64 {
    orbit_count_from_l(&divisor_cycle_counts(p))
}

fn divisor_cycle_counts(p: &Partition) -> Vec<u64> {
    let n = p.n();
    (1..=n)
        .map(|i| (i..=n).step_by(i).map(|j| p.multiplicity(j) as u64).sum())
        .collect()
}

fn orbit_count_from_l(l: &[u64]) -> u64 {
    let at = |i: usize| l.get(i - 1).copied().unwrap_or(0) as u128;
    let mut twice: u128 = (1..=l.len())
        .map(|i| at(i) * at(i) * euler_phi(i as u64) as u128)
        .sum();
    twice += at(2);
    let twice = twice
        .checked_sub(at(1))
        .expect("orbit count numerator is nonnegative");
    assert!(twice % 2 == 0, "pair-orbit numerator {twice} is odd");
    (twice / 2) as u64
}

pub fn class_weight(p: &Partition) -> ClassWeight {
    let l = divisor_cycle_counts(p);
    let c = orbit_count_from_l(&l);
    let class_size = class_size(p);
    let w = &class_size << c as usize;
    ClassWeight {
        partition: p.clone(),
        class_size,
        l,
        c,
        w,
    }
}

/// Partitions of `k` with no part equal to 1, largest part first, then
/// recursively on the remainder (reverse lexicographic order).
pub fn partitions_no_ones(k: usize) -> Vec<Partition> {
    NoOnes::new(k)
        .map(|parts| Partition::with_fixed_points(k, &parts))
        .collect()
}

/// Every partition of `n`, by decreasing number of fixed points; within a
/// fixed count, in [`partitions_no_ones`] order of the moved part.
pub fn partition_stream(n: usize) -> PartitionStream {
    assert!(n >= 1);
    PartitionStream {
        n,
        moved: 0,
        inner: NoOnes::new(0),
    }
}

#[derive(Clone, Debug)]
pub struct PartitionStream {
    n: usize,
    moved: usize,
    inner: NoOnes,
}

impl Iterator for PartitionStream {
    type Item = Partition;

    fn next(&mut self) -> Option<Partition> {
        loop {
            if let Some(parts) = self.inner.next() {
                return Some(Partition::with_fixed_points(self.n, &parts));
            }
            self.moved += if self.moved == 0 { 2 } else { 1 };
            if self.moved > self.n {
                return None;
            }
            self.inner = NoOnes::new(self.moved);
        }
    }
}

/// Can `rest` be written as a sum of parts in `2..=max_part`?
fn fillable(rest: u32, max_part: u32) -> bool {
    rest == 0 || (rest >= 2 && max_part >= 2 && (max_part >= 3 || rest.is_multiple_of(2)))
}

/// Largest (in reverse lex order) fill of `rest` with parts in `2..=max_part`.
fn fill(parts: &mut Vec<u32>, mut rest: u32, mut max_part: u32) {
    while rest > 0 {
        let m = (2..=max_part.min(rest))
            .rev()
            .find(|&m| fillable(rest - m, m))
            .expect("caller checked fillable");
        parts.push(m);
        rest -= m;
        max_part = m;
    }
}

#[derive(Clone, Debug)]
struct NoOnes {
    current: Option<Vec<u32>>,
    started: bool,
}

impl NoOnes {
    fn new(k: usize) -> Self {
        let k = k as u32;
        let current = fillable(k, k).then(|| {
            let mut parts = Vec::new();
            fill(&mut parts, k, k);
            parts
        });
        Self {
            current,
            started: false,
        }
    }
}

impl Iterator for NoOnes {
    type Item = Vec<u32>;

    fn next(&mut self) -> Option<Vec<u32>> {
        if !self.started {
            self.started = true;
            return self.current.clone();
        }
        let parts = self.current.as_mut()?;
        let mut tail: u32 = 0;
        for pos in (0..parts.len()).rev() {
            let x = parts[pos];
            for y in (2..x).rev() {
                let rest = tail + (x - y);
                if fillable(rest, y) {
                    parts.truncate(pos);
                    parts.push(y);
                    fill(parts, rest, y);
                    return Some(parts.clone());
                }
            }
            tail += x;
        }
        self.current = None;
        None
    }
}

/// A permutation with cycle type `p`: cycles on consecutive labels, longest
/// cycles first.
pub fn representative_permutation(p: &Partition) -> Permutation {
    let n = p.n();
    let mut images = Vec::with_capacity(n);
    let mut start = 0;
    for len in p.parts() {
        let len = len as usize;
        images.extend(start + 1..start + len);
        images.push(start);
        start += len;
    }
    Permutation::from_images(images).expect("cycles cover 0..n")
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::HashSet;

    fn parts(p: &Partition) -> Vec<u32> {
        p.parts()
    }

    #[test]
    fn phi_values() {
        assert_eq!(euler_phi(1), 1);
        assert_eq!(euler_phi(2), 1);
        assert_eq!(euler_phi(6), 2);
        for i in 1..200u64 {
            let brute = (1..=i).filter(|&k| k.gcd(&i) == 1).count() as u64;
            assert_eq!(euler_phi(i), brute, "phi({i})");
        }
    }

    #[test]
    fn weights_for_s4() {
        let id = class_weight(&Partition::identity(4));
        assert_eq!(id.class_size, BigUint::from(1u8));
        assert_eq!(id.l[0], 4);
        assert_eq!(id.c, 6);
        assert_eq!(id.w, BigUint::from(64u8));

        let t = class_weight(&Partition::from_parts(&[2, 1, 1]).unwrap());
        assert_eq!(t.class_size, BigUint::from(6u8));
        assert_eq!((t.l[0], t.l[1]), (3, 1));
        assert_eq!(t.c, 4);
        assert_eq!(t.w, BigUint::from(96u8));

        let four = class_weight(&Partition::from_parts(&[4]).unwrap());
        assert_eq!(four.class_size, BigUint::from(6u8));
        assert_eq!(four.c, 2);
        assert_eq!(four.w, BigUint::from(24u8));
    }

    /// Brute force over S_4: class sizes by cycle type and pair orbits of
    /// each element.
    #[test]
    fn s4_by_enumeration() {
        let mut perms = Vec::new();
        for a in 0..4 {
            for b in 0..4 {
                for c in 0..4 {
                    for d in 0..4 {
                        let v = vec![a, b, c, d];
                        if v.iter().collect::<HashSet<_>>().len() == 4 {
                            perms.push(Permutation::from_images(v).unwrap());
                        }
                    }
                }
            }
        }
        assert_eq!(perms.len(), 24);
        for p in partition_stream(4) {
            let members: Vec<_> = perms
                .iter()
                .filter(|g| g.cycle_type() == p.counts())
                .collect();
            let cw = class_weight(&p);
            assert_eq!(BigUint::from(members.len()), cw.class_size, "{p}");
            for g in members {
                let mut seen = HashSet::new();
                let mut orbits = 0;
                for i in 0..4 {
                    for j in i + 1..4 {
                        if seen.contains(&(i, j)) {
                            continue;
                        }
                        orbits += 1;
                        let (mut x, mut y) = (i, j);
                        while seen.insert((x.min(y), x.max(y))) {
                            x = g.image(x);
                            y = g.image(y);
                        }
                    }
                }
                assert_eq!(orbits as u64, cw.c, "{p}");
            }
        }
    }

    #[test]
    fn no_ones_examples() {
        let zero = partitions_no_ones(0);
        assert_eq!(zero.len(), 1);
        assert!(parts(&zero[0]).is_empty());
        assert!(partitions_no_ones(1).is_empty());
        let six: Vec<Vec<u32>> = partitions_no_ones(6).iter().map(parts).collect();
        assert_eq!(six, vec![vec![6], vec![4, 2], vec![3, 3], vec![2, 2, 2]]);
    }

    /// Recursive reference: largest part first, recurse on the remainder.
    fn recursive_no_ones(k: u32, max: u32, prefix: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if k == 0 {
            out.push(prefix.clone());
            return;
        }
        for m in (2..=max.min(k)).rev() {
            prefix.push(m);
            recursive_no_ones(k - m, m, prefix, out);
            prefix.pop();
        }
    }

    #[test]
    fn no_ones_matches_recursion() {
        for k in 0..=30u32 {
            let mut expected = Vec::new();
            recursive_no_ones(k, k, &mut Vec::new(), &mut expected);
            let got: Vec<Vec<u32>> = NoOnes::new(k as usize).collect();
            assert_eq!(got, expected, "k = {k}");
        }
    }

    #[test]
    fn stream_order_n4() {
        let got: Vec<Vec<u32>> = partition_stream(4).map(|p| parts(&p)).collect();
        assert_eq!(
            got,
            vec![
                vec![1, 1, 1, 1],
                vec![2, 1, 1],
                vec![3, 1],
                vec![4],
                vec![2, 2]
            ]
        );
        let one: Vec<Vec<u32>> = partition_stream(1).map(|p| parts(&p)).collect();
        assert_eq!(one, vec![vec![1]]);
        let total: BigUint = partition_stream(4).map(|p| class_weight(&p).w).sum();
        assert_eq!(total, BigUint::from(264u32));
    }

    #[test]
    fn stream_counts_are_partition_numbers() {
        // p(n) for n = 1..=30
        let pn = [
            1u64, 2, 3, 5, 7, 11, 15, 22, 30, 42, 56, 77, 101, 135, 176, 231, 297, 385, 490, 627,
            792, 1002, 1255, 1575, 1958, 2436, 3010, 3718, 4565, 5604,
        ];
        for n in 1..=30 {
            let all: Vec<Partition> = partition_stream(n).collect();
            assert_eq!(all.len() as u64, pn[n - 1]);
            let distinct: HashSet<_> = all.iter().collect();
            assert_eq!(distinct.len(), all.len());
            let mut last_fixed = u32::MAX;
            for p in &all {
                assert_eq!(p.n(), n);
                assert!(p.multiplicity(1) <= last_fixed);
                last_fixed = p.multiplicity(1);
            }
        }
    }

    #[test]
    fn class_sizes_sum_to_factorial() {
        for n in 1..=30 {
            let total: BigUint = partition_stream(n).map(|p| class_size(&p)).sum();
            assert_eq!(total, factorial(n), "n = {n}");
        }
    }

    #[test]
    fn identity_orbit_count() {
        for n in 1..=100u64 {
            assert_eq!(
                pair_orbit_count(&Partition::identity(n as usize)),
                n * (n - 1) / 2
            );
        }
    }

    #[test]
    fn representative_examples() {
        assert_eq!(
            representative_permutation(&Partition::identity(5)),
            Permutation::identity(5)
        );
        let four = representative_permutation(&Partition::from_parts(&[4]).unwrap());
        assert_eq!(four, Permutation::from_cycles(4, &[&[0, 1, 2, 3]]).unwrap());
        let mixed = representative_permutation(&Partition::from_parts(&[1, 3, 2]).unwrap());
        assert_eq!(
            mixed,
            Permutation::from_cycles(6, &[&[0, 1, 2], &[3, 4]]).unwrap()
        );
    }

    #[test]
    fn representative_cycle_type_roundtrip() {
        use rand::seq::SliceRandom;
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(11);
        let by_n: Vec<Vec<Partition>> = (0..=30)
            .map(|n| {
                if n == 0 {
                    vec![]
                } else {
                    partition_stream(n).collect()
                }
            })
            .collect();
        for _ in 0..1000 {
            let n = rng.gen_range(1..=30);
            let p = by_n[n].choose(&mut rng).unwrap();
            assert_eq!(representative_permutation(p).cycle_type(), p.counts());
        }
    }

    #[test]
    fn rejects_malformed() {
        assert!(Partition::from_counts(vec![1, 1]).is_err());
        assert!(Partition::from_counts(vec![0, 1]).is_ok());
        assert!(Partition::from_parts(&[0, 2]).is_err());
    }
}
