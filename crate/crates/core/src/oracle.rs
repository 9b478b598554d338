//! Exact counts by Burnside's lemma and brute-force solvability checks.
//!
//! For an isomorphism-invariant property `Q`, the number of unlabeled
//! `n`-vertex graphs with `Q` is
//! `(1/n!) * sum over classes of class_size * #{G fixed by rep : Q(G)}`.
//! Fixed graphs of a representative are unions of its pair orbits, visited
//! here in Gray-code order so consecutive graphs differ by one orbit.

use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::Zero;
use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::gf2::rank_packed;
use crate::graph::{pair_at, Graph, Permutation};
use crate::partition::{class_size, factorial, partition_stream, representative_permutation};
use crate::sampler::{pair_orbits, PairOrbits};

pub const EXACT_MAX_N: usize = 8;
pub const FIXED_GRAPHS_MAX_ORBITS: usize = 30;
pub const BRUTE_FORCE_MAX_N: usize = 5;

/// Unlabeled graph counts on `n` vertices by property.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ExactCountRow {
    pub n: usize,
    #[serde(serialize_with = "decimal")]
    pub total: BigUint,
    #[serde(serialize_with = "decimal")]
    pub solvable: BigUint,
    #[serde(serialize_with = "decimal")]
    pub connected: BigUint,
    #[serde(serialize_with = "decimal")]
    pub connected_solvable: BigUint,
}

fn decimal<S: serde::Serializer>(v: &BigUint, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.collect_str(v)
}

/// Every graph fixed by `g`, once each, in Gray-code order of orbit subsets.
pub fn enumerate_fixed_graphs(g: &Permutation) -> Result<FixedGraphs> {
    let orbits = pair_orbits(g);
    if orbits.len() > FIXED_GRAPHS_MAX_ORBITS {
        return Err(Error::UnsupportedSize {
            what: "pair orbits for fixed-graph enumeration",
            value: orbits.len(),
            limit: FIXED_GRAPHS_MAX_ORBITS,
        });
    }
    let current = Graph::empty(g.degree().max(1));
    Ok(FixedGraphs {
        total: 1 << orbits.len(),
        orbits,
        current,
        index: 0,
    })
}

pub struct FixedGraphs {
    orbits: PairOrbits,
    current: Graph,
    index: u64,
    total: u64,
}

impl Iterator for FixedGraphs {
    type Item = Graph;

    fn next(&mut self) -> Option<Graph> {
        if self.index >= self.total {
            return None;
        }
        if self.index > 0 {
            let flip = self.index.trailing_zeros() as usize;
            for &p in self.orbits.orbit(flip) {
                let p = p as usize;
                let on = self.current.pair(p);
                self.current.set_pair(p, !on);
            }
        }
        self.index += 1;
        Some(self.current.clone())
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let left = (self.total - self.index) as usize;
        (left, Some(left))
    }
}

/// Checks every configuration against every press set by direct simulation.
pub fn brute_force_universally_solvable(g: &Graph) -> Result<bool> {
    let n = g.vertex_count();
    if n > BRUTE_FORCE_MAX_N {
        return Err(Error::UnsupportedSize {
            what: "vertex count for brute-force solvability",
            value: n,
            limit: BRUTE_FORCE_MAX_N,
        });
    }
    let press_effect = |presses: u32| -> u32 {
        let mut lights = 0u32;
        for v in 0..n {
            if presses >> v & 1 == 1 {
                lights ^= 1 << v;
                for u in 0..n {
                    if g.has_edge(u, v) {
                        lights ^= 1 << u;
                    }
                }
            }
        }
        lights
    };
    let reachable: Vec<u32> = (0..1u32 << n).map(press_effect).collect();
    Ok((0..1u32 << n).all(|config| reachable.contains(&config)))
}

/// Byte `i` of the word is adjacency row `i`.
fn orbit_row_masks(orbits: &PairOrbits) -> Vec<u64> {
    orbits
        .iter()
        .map(|orbit| {
            orbit.iter().fold(0u64, |acc, &p| {
                let (i, j) = pair_at(p as usize);
                acc | 1 << (8 * i + j) | 1 << (8 * j + i)
            })
        })
        .collect()
}

#[derive(Clone, Copy, Default, Debug, PartialEq, Eq)]
struct Tally {
    solvable: u64,
    connected: u64,
    connected_solvable: u64,
}

impl std::ops::Add for Tally {
    type Output = Tally;
    fn add(self, o: Tally) -> Tally {
        Tally {
            solvable: self.solvable + o.solvable,
            connected: self.connected + o.connected,
            connected_solvable: self.connected_solvable + o.connected_solvable,
        }
    }
}

const DIAGONAL: u64 = 0x8040_2010_0804_0201;

#[inline]
fn rows_connected(rows: u64, n: usize) -> bool {
    let full = ((1u16 << n) - 1) as u8;
    let mut seen = 1u8;
    let mut frontier = 1u8;
    while frontier != 0 {
        let v = frontier.trailing_zeros();
        frontier &= frontier - 1;
        let fresh = (rows >> (8 * v)) as u8 & !seen;
        seen |= fresh;
        frontier |= fresh;
    }
    seen == full
}

/// Gray-code indices `start..end` of one class.
fn tally_range(masks: &[u64], n: usize, start: u64, end: u64) -> Tally {
    let gray = start ^ (start >> 1);
    let mut rows = masks
        .iter()
        .enumerate()
        .filter(|(k, _)| gray >> k & 1 == 1)
        .fold(0u64, |acc, (_, &m)| acc ^ m);
    let mut tally = Tally::default();
    let mut t = start;
    loop {
        let mut scratch = (rows ^ DIAGONAL).to_le_bytes();
        let solvable = rank_packed(&mut scratch[..n], n) == n;
        let connected = rows_connected(rows, n);
        tally.solvable += solvable as u64;
        tally.connected += connected as u64;
        tally.connected_solvable += (solvable && connected) as u64;
        t += 1;
        if t == end {
            break;
        }
        rows ^= masks[t.trailing_zeros() as usize];
    }
    tally
}

const CHUNK_LOG2: u32 = 22;

/// Counts of unlabeled graphs on `n <= 8` vertices: all, universally
/// solvable, connected, and both.
pub fn exact_counts(n: usize) -> Result<ExactCountRow> {
    if n == 0 {
        return Err(Error::invalid("n must be positive"));
    }
    if n > EXACT_MAX_N {
        return Err(Error::UnsupportedSize {
            what: "n for exact counts",
            value: n,
            limit: EXACT_MAX_N,
        });
    }
    struct Unit {
        class: usize,
        start: u64,
        end: u64,
    }
    let classes: Vec<(BigUint, u32, Vec<u64>)> = partition_stream(n)
        .map(|p| {
            let orbits = pair_orbits(&representative_permutation(&p));
            (
                class_size(&p),
                orbits.len() as u32,
                orbit_row_masks(&orbits),
            )
        })
        .collect();
    let mut units = Vec::new();
    for (class, (_, c, _)) in classes.iter().enumerate() {
        let total = 1u64 << c;
        let step = 1u64 << CHUNK_LOG2;
        let mut start = 0;
        while start < total {
            let end = (start + step).min(total);
            units.push(Unit { class, start, end });
            start = end;
        }
    }
    let per_unit: Vec<(usize, Tally)> = units
        .par_iter()
        .map(|u| (u.class, tally_range(&classes[u.class].2, n, u.start, u.end)))
        .collect();
    let mut per_class = vec![Tally::default(); classes.len()];
    for (class, t) in per_unit {
        per_class[class] = per_class[class] + t;
    }

    let mut sums = [
        BigUint::zero(),
        BigUint::zero(),
        BigUint::zero(),
        BigUint::zero(),
    ];
    for ((size, c, _), t) in classes.iter().zip(&per_class) {
        sums[0] += size << *c as usize;
        sums[1] += size * t.solvable;
        sums[2] += size * t.connected;
        sums[3] += size * t.connected_solvable;
    }
    let nf = factorial(n);
    let mut out = Vec::with_capacity(4);
    for (what, s) in ["total", "solvable", "connected", "connected_solvable"]
        .iter()
        .zip(sums)
    {
        let (q, r) = s.div_rem(&nf);
        if !r.is_zero() {
            return Err(Error::internal(format!(
                "Burnside sum for {what} at n = {n} is not divisible by n!"
            )));
        }
        out.push(q);
    }
    let [total, solvable, connected, connected_solvable]: [BigUint; 4] =
        out.try_into().expect("four sums");
    Ok(ExactCountRow {
        n,
        total,
        solvable,
        connected,
        connected_solvable,
    })
}
