//! Regenerates `src/gn_table.txt`: unlabeled graph counts `g_1..g_N`.
//!
//! Independent of `compute_gn`: pair-orbit counts are accumulated
//! incrementally from gcds of cycle lengths while walking the partition
//! tree, and `n!/z` is carried down the tree by exact small divisions.
//!
//! Usage: `cargo run --release --example gn_table -- 100 > crates/core/src/gn_table.txt`

use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::{One, Zero};

struct Walk {
    n: usize,
    divisors: Vec<Vec<usize>>,
    phi: Vec<u64>,
    /// parts seen so far divisible by d
    divisible: Vec<u64>,
    /// (fixed points, orbit count) -> sum of n!/z over moved parts
    acc: Vec<Vec<BigUint>>,
}

impl Walk {
    fn new(n: usize) -> Self {
        let mut divisors = vec![Vec::new(); n + 1];
        for d in 1..=n {
            for m in (d..=n).step_by(d) {
                divisors[m].push(d);
            }
        }
        let phi = (0..=n as u64)
            .map(|i| {
                if i == 0 {
                    0
                } else {
                    (1..=i).filter(|k| k.gcd(&i) == 1).count() as u64
                }
            })
            .collect();
        let pairs = n * n.saturating_sub(1) / 2;
        Walk {
            n,
            divisors,
            phi,
            divisible: vec![0; n + 1],
            acc: vec![vec![BigUint::zero(); pairs + 1]; n + 1],
        }
    }

    /// `moved`: points in parts >= 2, `parts`: how many such parts,
    /// `c`: orbits among moved points, `value`: n! / z(moved parts),
    /// `last`/`mult`: the latest part size and its multiplicity.
    fn visit(&mut self, moved: usize, parts: u64, c: u64, value: &BigUint, last: usize, mult: u64) {
        let f = (self.n - moved) as u64;
        let full_c = c + f * f.saturating_sub(1) / 2 + f * parts;
        self.acc[f as usize][full_c as usize] += value;
        let max = last.min(self.n - moved);
        for i in (2..=max).rev() {
            let k = if i == last { mult + 1 } else { 1 };
            let cross: u64 = self.divisors[i]
                .iter()
                .map(|&d| self.phi[d] * self.divisible[d])
                .sum();
            let child_c = c + (i / 2) as u64 + cross;
            let (child, r) = value.div_rem(&BigUint::from(i as u64 * k));
            debug_assert!(r.is_zero());
            for d in self.divisors[i].clone() {
                self.divisible[d] += 1;
            }
            self.visit(moved + i, parts + 1, child_c, &child, i, k);
            for d in self.divisors[i].clone() {
                self.divisible[d] -= 1;
            }
        }
    }

    fn count(mut self) -> BigUint {
        let n = self.n;
        let nf: BigUint = (1..=n as u64).product();
        self.visit(0, 0, 0, &nf.clone(), n, 0);
        let mut total = BigUint::zero();
        let mut ffact = BigUint::one();
        for f in 0..=n {
            if f > 0 {
                ffact *= f as u64;
            }
            for (c, v) in self.acc[f].iter().enumerate() {
                if v.is_zero() {
                    continue;
                }
                let (q, r) = v.div_rem(&ffact);
                assert!(r.is_zero(), "f = {f}, c = {c}");
                total += q << c;
            }
        }
        let (g, r) = total.div_rem(&nf);
        assert!(r.is_zero(), "n = {n}");
        g
    }
}

fn main() {
    let max: usize = std::env::args()
        .nth(1)
        .map_or(100, |a| a.parse().expect("max n"));
    println!("# n g_n: unlabeled simple graphs on n vertices");
    for n in 1..=max {
        let g = Walk::new(n).count();
        println!("{n} {g}");
        eprintln!("n = {n} done");
    }
}
