//! Uniform sampling of unlabeled graphs (Dixon and Wilf).
//!
//! A conjugacy class of `S_n` is chosen with probability
//! `class_size * 2^c / (n! * g_n)`, then a graph is drawn uniformly from the
//! graphs fixed by a class representative by flipping one fair coin per
//! orbit of the representative on vertex pairs. The induced distribution on
//! isomorphism classes is uniform.
//!
//! Class selection draws an exact integer `T` in `[0, n! * g_n)` and walks
//! the partition stream accumulating weights until the running sum exceeds
//! `T`. No floating point is involved.

use std::collections::BTreeMap;
use std::fs;
use std::io::Write as _;
use std::path::{Path, PathBuf};
use std::sync::{Mutex, OnceLock};

use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::Zero;
use rand::RngCore;

use crate::error::{Error, Result};
use crate::graph::{pair_count, pair_index, Graph, Permutation};
use crate::partition::{
    class_weight, factorial, partition_stream, representative_permutation, Partition,
    PartitionStream,
};

/// Largest `n` for which [`compute_gn`] enumerates all partitions.
pub const COMPUTE_GN_MAX_N: usize = 60;

/// `g_1..g_4`; any table or cache must agree with these.
pub const PINNED_GN_PREFIX: [u64; 4] = [1, 2, 4, 11];

const EMBEDDED_GN: &str = include_str!("gn_table.txt");

/// Unlabeled graph counts `g_1..g_max_n`.
#[derive(Clone, Debug)]
pub struct GraphCountTable {
    values: Vec<BigUint>,
}

impl GraphCountTable {
    /// The table shipped with the crate (`n <= 100`).
    pub fn embedded() -> &'static GraphCountTable {
        static TABLE: OnceLock<GraphCountTable> = OnceLock::new();
        TABLE.get_or_init(|| {
            let records = parse_gn_records(EMBEDDED_GN).expect("embedded g_n table parses");
            let values: Vec<BigUint> = records.into_values().collect();
            let table = GraphCountTable { values };
            table
                .check_prefix()
                .expect("embedded g_n table matches pinned prefix");
            table
        })
    }

    pub fn max_n(&self) -> usize {
        self.values.len()
    }

    pub fn get(&self, n: usize) -> Option<&BigUint> {
        n.checked_sub(1).and_then(|i| self.values.get(i))
    }

    fn check_prefix(&self) -> Result<()> {
        for (i, &expected) in PINNED_GN_PREFIX.iter().enumerate() {
            if let Some(v) = self.values.get(i) {
                if *v != BigUint::from(expected) {
                    return Err(Error::internal(format!(
                        "g_{} = {v}, expected {expected}",
                        i + 1
                    )));
                }
            }
        }
        Ok(())
    }
}

/// Parses `n value` lines (decimal, `#` comments allowed). `n` must be
/// contiguous from 1.
fn parse_gn_records(text: &str) -> Result<BTreeMap<usize, BigUint>> {
    let mut out = BTreeMap::new();
    let mut offset = 0;
    for line in text.split_inclusive('\n') {
        let start = offset;
        offset += line.len();
        let body = line.split('#').next().unwrap_or("").trim();
        if body.is_empty() {
            continue;
        }
        let bad = |message: String| Error::Parse {
            offset: start,
            message,
        };
        let mut fields = body.split_whitespace();
        let (Some(n), Some(v), None) = (fields.next(), fields.next(), fields.next()) else {
            return Err(bad(format!("expected `n value`, got {body:?}")));
        };
        let n: usize = n
            .parse()
            .map_err(|_| bad(format!("bad vertex count {n:?}")))?;
        let v: BigUint = v.parse().map_err(|_| bad(format!("bad count {v:?}")))?;
        if n != out.len() + 1 {
            return Err(bad(format!(
                "records must be contiguous from n = 1, found n = {n}"
            )));
        }
        out.insert(n, v);
    }
    Ok(out)
}

/// `g_n` as the total class weight divided by `n!`.
pub fn compute_gn(n: usize) -> Result<BigUint> {
    if n == 0 {
        return Err(Error::invalid("n must be positive"));
    }
    if n > COMPUTE_GN_MAX_N {
        return Err(Error::UnsupportedSize {
            what: "n for g_n enumeration",
            value: n,
            limit: COMPUTE_GN_MAX_N,
        });
    }
    let total: BigUint = partition_stream(n).map(|p| class_weight(&p).w).sum();
    let (q, r) = total.div_rem(&factorial(n));
    if !r.is_zero() {
        return Err(Error::internal(format!(
            "total class weight for n = {n} is not divisible by n!"
        )));
    }
    Ok(q)
}

/// Where `g_n` values come from: computed exactly for `n <= 60` (memoized,
/// optionally persisted to a cache file) and the embedded table above that.
#[derive(Debug, Default)]
pub struct GnSource {
    cache_path: Option<PathBuf>,
    memo: Mutex<BTreeMap<usize, BigUint>>,
}

/// Environment variable naming the `g_n` cache file.
pub const GN_CACHE_ENV: &str = "LIGHTS_OUT_GN_CACHE";

impl GnSource {
    pub fn in_memory() -> Self {
        Self::default()
    }

    pub fn with_cache_file(path: impl Into<PathBuf>) -> Self {
        Self {
            cache_path: Some(path.into()),
            memo: Mutex::default(),
        }
    }

    /// Cache file from `LIGHTS_OUT_GN_CACHE`, else `$XDG_CACHE_HOME` or
    /// `$HOME/.cache`; in-memory only if none of those are set.
    pub fn from_env() -> Self {
        if let Some(p) = std::env::var_os(GN_CACHE_ENV) {
            return Self::with_cache_file(p);
        }
        let base = std::env::var_os("XDG_CACHE_HOME")
            .map(PathBuf::from)
            .or_else(|| std::env::var_os("HOME").map(|h| PathBuf::from(h).join(".cache")));
        match base {
            Some(b) => Self::with_cache_file(b.join("lights-out").join("gn.txt")),
            None => Self::in_memory(),
        }
    }

    pub fn cache_path(&self) -> Option<&Path> {
        self.cache_path.as_deref()
    }

    pub fn get(&self, n: usize) -> Result<BigUint> {
        if n == 0 {
            return Err(Error::invalid("n must be positive"));
        }
        if let Some(v) = self.memo.lock().expect("memo lock").get(&n) {
            return Ok(v.clone());
        }
        let value = if n <= COMPUTE_GN_MAX_N {
            match self.read_cache()?.remove(&n) {
                Some(v) => v,
                None => {
                    let v = compute_gn(n)?;
                    self.write_cache(n, &v)?;
                    v
                }
            }
        } else {
            let table = GraphCountTable::embedded();
            table.get(n).cloned().ok_or(Error::UnsupportedSize {
                what: "n for g_n lookup",
                value: n,
                limit: table.max_n(),
            })?
        };
        self.memo
            .lock()
            .expect("memo lock")
            .insert(n, value.clone());
        Ok(value)
    }

    fn read_cache(&self) -> Result<BTreeMap<usize, BigUint>> {
        let Some(path) = &self.cache_path else {
            return Ok(BTreeMap::new());
        };
        let text = match fs::read_to_string(path) {
            Ok(t) => t,
            Err(e) if e.kind() == std::io::ErrorKind::NotFound => return Ok(BTreeMap::new()),
            Err(e) => return Err(e.into()),
        };
        let records = parse_gn_records(&text)
            .map_err(|e| Error::invalid(format!("g_n cache {}: {e}", path.display())))?;
        let table = GraphCountTable::embedded();
        for (&n, v) in &records {
            let pinned = PINNED_GN_PREFIX.get(n - 1).map(|&p| BigUint::from(p));
            if pinned.as_ref().is_some_and(|p| p != v) || table.get(n).is_some_and(|t| t != v) {
                return Err(Error::invalid(format!(
                    "g_n cache {}: g_{n} = {v} disagrees with known values",
                    path.display()
                )));
            }
        }
        Ok(records)
    }

    /// Cache records are contiguous, so everything up to `n` is stored.
    fn write_cache(&self, n: usize, value: &BigUint) -> Result<()> {
        let Some(path) = &self.cache_path else {
            return Ok(());
        };
        let mut records = self.read_cache()?;
        for m in records.len() + 1..n {
            let v = compute_gn(m)?;
            records.insert(m, v);
        }
        records.insert(n, value.clone());
        if let Some(dir) = path.parent() {
            fs::create_dir_all(dir)?;
        }
        let tmp = path.with_extension("tmp");
        let mut f = fs::File::create(&tmp)?;
        for (m, v) in &records {
            writeln!(f, "{m} {v}")?;
        }
        f.sync_all()?;
        fs::rename(&tmp, path)?;
        let mut memo = self.memo.lock().expect("memo lock");
        for (m, v) in records {
            memo.entry(m).or_insert(v);
        }
        Ok(())
    }
}

/// Uniform integer in `[0, bound)` by rejection on whole 32-bit blocks.
pub fn uniform_below<R: RngCore + ?Sized>(bound: &BigUint, rng: &mut R) -> BigUint {
    assert!(!bound.is_zero(), "empty range");
    let bits = bound.bits();
    let blocks = bits.div_ceil(32) as usize;
    let top_bits = bits - 32 * (blocks as u64 - 1);
    let top_mask = if top_bits == 32 {
        u32::MAX
    } else {
        (1u32 << top_bits) - 1
    };
    let mut digits = vec![0u32; blocks];
    loop {
        for d in digits.iter_mut() {
            *d = rng.next_u32();
        }
        digits[blocks - 1] &= top_mask;
        let t = BigUint::new(digits.clone());
        if &t < bound {
            return t;
        }
    }
}

/// Orbits of a permutation on vertex pairs, stored flat. Orbits are ordered
/// by their smallest pair index.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PairOrbits {
    n: usize,
    pairs: Vec<u32>,
    starts: Vec<u32>,
}

impl PairOrbits {
    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn len(&self) -> usize {
        self.starts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.starts.is_empty()
    }

    /// Pair indices of orbit `k`.
    pub fn orbit(&self, k: usize) -> &[u32] {
        let start = self.starts[k] as usize;
        let end = self
            .starts
            .get(k + 1)
            .map_or(self.pairs.len(), |&e| e as usize);
        &self.pairs[start..end]
    }

    pub fn iter(&self) -> impl Iterator<Item = &[u32]> + '_ {
        (0..self.len()).map(move |k| self.orbit(k))
    }

    /// The fixed graph whose edge set is the union of the orbits with a true
    /// coin. Missing coins count as false.
    pub fn graph_from_coins(&self, coins: impl IntoIterator<Item = bool>) -> Graph {
        let mut g = Graph::empty(self.n.max(1));
        for (orbit, heads) in self.iter().zip(coins) {
            if heads {
                for &p in orbit {
                    g.set_pair(p as usize, true);
                }
            }
        }
        g
    }

    /// Graph for orbit subset `mask` (bit `k` selects orbit `k`).
    pub fn graph_from_mask(&self, mask: u64) -> Graph {
        self.graph_from_coins((0..self.len()).map(|k| k < 64 && mask >> k & 1 == 1))
    }
}

/// Orbits of `{i, j} -> {g(i), g(j)}` on all pairs, by walking each
/// unvisited pair to closure.
pub fn pair_orbits(g: &Permutation) -> PairOrbits {
    let n = g.degree();
    let total = pair_count(n);
    let mut visited = vec![0u64; total.div_ceil(64)];
    let mut pairs = Vec::with_capacity(total);
    let mut starts = Vec::new();
    let mut idx = 0usize;
    for hi in 1..n {
        for lo in 0..hi {
            if visited[idx / 64] >> (idx % 64) & 1 == 0 {
                starts.push(pairs.len() as u32);
                let (mut x, mut y) = (lo, hi);
                let mut p = idx;
                while visited[p / 64] >> (p % 64) & 1 == 0 {
                    visited[p / 64] |= 1 << (p % 64);
                    pairs.push(p as u32);
                    x = g.image(x);
                    y = g.image(y);
                    p = pair_index(x, y);
                }
            }
            idx += 1;
        }
    }
    PairOrbits { n, pairs, starts }
}

/// One fair coin per orbit, drawn 64 at a time in orbit order.
pub fn sample_from_orbits<R: RngCore + ?Sized>(orbits: &PairOrbits, rng: &mut R) -> Graph {
    let mut g = Graph::empty(orbits.n.max(1));
    let mut word = 0u64;
    for (k, orbit) in orbits.iter().enumerate() {
        if k % 64 == 0 {
            word = rng.next_u64();
        }
        if word >> (k % 64) & 1 == 1 {
            for &p in orbit {
                g.set_pair(p as usize, true);
            }
        }
    }
    g
}

/// A uniformly random graph fixed by `g`.
pub fn sample_fixed_graph<R: RngCore + ?Sized>(g: &Permutation, rng: &mut R) -> Graph {
    sample_from_orbits(&pair_orbits(g), rng)
}

/// Cached prefix of the partition stream with cumulative weights.
///
/// The prefix is extended until the uncovered weight is below `2^-64` of the
/// total (or the cap is reached); draws landing past it continue the walk
/// from where the prefix ended.
#[derive(Debug)]
pub struct PartitionSelector {
    n: usize,
    total: BigUint,
    prefix: Vec<SelectorEntry>,
    resume: Option<(PartitionStream, BigUint)>,
}

#[derive(Debug)]
struct SelectorEntry {
    partition: Partition,
    cumulative: BigUint,
    orbits: OnceLock<PairOrbits>,
}

const SELECTOR_PREFIX_CAP: usize = 1 << 14;

impl PartitionSelector {
    pub fn new(n: usize, gn: &BigUint) -> Result<Self> {
        if n == 0 {
            return Err(Error::invalid("n must be positive"));
        }
        let total = factorial(n) * gn;
        let slack = &total >> 64u32;
        let mut stream = partition_stream(n);
        let mut prefix = Vec::new();
        let mut sum = BigUint::zero();
        let mut exhausted = true;
        while prefix.len() < SELECTOR_PREFIX_CAP {
            let Some(p) = stream.next() else {
                break;
            };
            sum += class_weight(&p).w;
            prefix.push(SelectorEntry {
                partition: p,
                cumulative: sum.clone(),
                orbits: OnceLock::new(),
            });
            if &sum + &slack >= total {
                exhausted = false;
                break;
            }
        }
        if sum > total || (exhausted && prefix.len() < SELECTOR_PREFIX_CAP && sum != total) {
            return Err(Error::internal(format!(
                "class weights for n = {n} sum to {sum}, expected n! * g_n = {total}"
            )));
        }
        let resume = (sum < total).then_some((stream, sum));
        Ok(Self {
            n,
            total,
            prefix,
            resume,
        })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// `n! * g_n`
    pub fn total_weight(&self) -> &BigUint {
        &self.total
    }

    /// First partition whose cumulative weight exceeds `t`.
    pub fn select_with_draw(&self, t: &BigUint) -> Result<Partition> {
        self.locate(t).map(|hit| match hit {
            Hit::Cached(i) => self.prefix[i].partition.clone(),
            Hit::Tail(p) => p,
        })
    }

    pub fn select<R: RngCore + ?Sized>(&self, rng: &mut R) -> Result<Partition> {
        self.select_with_draw(&uniform_below(&self.total, rng))
    }

    /// Dixon-Wilf draw: weighted class, then one coin per pair orbit.
    pub fn sample_graph<R: RngCore + ?Sized>(&self, rng: &mut R) -> Result<Graph> {
        let t = uniform_below(&self.total, rng);
        match self.locate(&t)? {
            Hit::Cached(i) => {
                let entry = &self.prefix[i];
                let orbits = entry
                    .orbits
                    .get_or_init(|| pair_orbits(&representative_permutation(&entry.partition)));
                Ok(sample_from_orbits(orbits, rng))
            }
            Hit::Tail(p) => Ok(sample_fixed_graph(&representative_permutation(&p), rng)),
        }
    }

    /// Rejection sampling on connectivity. Returns the graph and the number
    /// of rejected draws.
    pub fn sample_connected_graph<R: RngCore + ?Sized>(&self, rng: &mut R) -> Result<(Graph, u64)> {
        let mut rejected = 0;
        loop {
            let g = self.sample_graph(rng)?;
            if g.is_connected() {
                return Ok((g, rejected));
            }
            rejected += 1;
        }
    }

    fn locate(&self, t: &BigUint) -> Result<Hit> {
        if t >= &self.total {
            return Err(Error::invalid(format!(
                "draw {t} is outside [0, {})",
                self.total
            )));
        }
        let i = self.prefix.partition_point(|e| &e.cumulative <= t);
        if i < self.prefix.len() {
            return Ok(Hit::Cached(i));
        }
        let Some((stream, sum)) = &self.resume else {
            return Err(Error::internal(
                "partition stream exhausted before reaching the draw",
            ));
        };
        let mut sum = sum.clone();
        for p in stream.clone() {
            sum += class_weight(&p).w;
            if &sum > t {
                return Ok(Hit::Tail(p));
            }
        }
        Err(Error::internal(
            "partition stream exhausted before reaching the draw",
        ))
    }
}

enum Hit {
    Cached(usize),
    Tail(Partition),
}

/// Process-wide in-memory `g_n` source.
pub fn default_gn_source() -> &'static GnSource {
    static SOURCE: OnceLock<GnSource> = OnceLock::new();
    SOURCE.get_or_init(GnSource::in_memory)
}

/// One class draw followed by one coin per orbit.
pub fn sample_uniform_graph<R: RngCore + ?Sized>(n: usize, rng: &mut R) -> Result<Graph> {
    selector_for(n)?.sample_graph(rng)
}

pub fn sample_uniform_connected_graph<R: RngCore + ?Sized>(n: usize, rng: &mut R) -> Result<Graph> {
    Ok(selector_for(n)?.sample_connected_graph(rng)?.0)
}

/// Shared selector per `n`, backed by [`default_gn_source`].
pub fn selector_for(n: usize) -> Result<std::sync::Arc<PartitionSelector>> {
    static CACHE: OnceLock<Mutex<BTreeMap<usize, std::sync::Arc<PartitionSelector>>>> =
        OnceLock::new();
    let cache = CACHE.get_or_init(Mutex::default);
    if let Some(s) = cache.lock().expect("selector cache").get(&n) {
        return Ok(s.clone());
    }
    let gn = default_gn_source().get(n)?;
    let s = std::sync::Arc::new(PartitionSelector::new(n, &gn)?);
    cache
        .lock()
        .expect("selector cache")
        .entry(n)
        .or_insert_with(|| s.clone());
    Ok(s)
}
