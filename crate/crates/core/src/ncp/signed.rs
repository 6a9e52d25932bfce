//! Mirror-symmetric partitions of `[±n]`: the type-B and type-D models.

use std::fmt;

use crate::error::{Error, Result};

use super::partition_a::{enumerate_nc_a, is_noncrossing_a, rotate_a, binomial, SetPartitionA};

/// Position of a signed point on the circle `1, …, n, -1, …, -n` (0-based).
fn circle_position(x: i32, n: usize) -> usize {
    let a = x.unsigned_abs() as usize;
    if x > 0 {
        a - 1
    } else {
        n + a - 1
    }
}

/// Canonical order of elements: `1, -1, 2, -2, …`.
fn element_key(x: i32) -> (u32, bool) {
    (x.unsigned_abs(), x < 0)
}

fn is_zero(block: &[i32]) -> bool {
    block.iter().any(|&x| block.contains(&-x))
}

/// Shared storage: validated, mirror-closed blocks in canonical order.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
struct SignedBlocks {
    n: usize,
    blocks: Vec<Vec<i32>>,
}

impl SignedBlocks {
    fn new(n: usize, blocks: Vec<Vec<i32>>, allow_single_pair: bool) -> Result<Self> {
        let ni = n as i32;
        let mut seen = std::collections::HashSet::new();
        for b in &blocks {
            if b.is_empty() {
                return Err(Error::InvalidPartition("empty block".into()));
            }
            for &x in b {
                if x == 0 || x.abs() > ni {
                    return Err(Error::InvalidPartition(format!("element {x} outside [±{n}]")));
                }
                if !seen.insert(x) {
                    return Err(Error::InvalidPartition(format!("element {x} repeated")));
                }
            }
        }
        if seen.len() != 2 * n {
            return Err(Error::InvalidPartition("blocks do not cover [±n]".into()));
        }
        let out = Self::canonical(n, blocks);
        let sets: std::collections::HashSet<Vec<i32>> = out.blocks.iter().cloned().collect();
        let mut zeros = 0;
        for b in &out.blocks {
            let mut neg: Vec<i32> = b.iter().map(|x| -x).collect();
            neg.sort_by_key(|&x| element_key(x));
            if !sets.contains(&neg) {
                return Err(Error::InvalidPartition(format!("mirror of block {b:?} is not a block")));
            }
            if is_zero(b) {
                zeros += 1;
                if b.len() == 2 && !allow_single_pair {
                    return Err(Error::InvalidPartition(format!("zero block {b:?} is a single pair")));
                }
            }
        }
        if zeros > 1 {
            return Err(Error::InvalidPartition("more than one zero block".into()));
        }
        Ok(out)
    }

    fn canonical(n: usize, mut blocks: Vec<Vec<i32>>) -> Self {
        for b in &mut blocks {
            b.sort_by_key(|&x| element_key(x));
        }
        blocks.sort_by(|a, b| {
            let ka: Vec<_> = a.iter().map(|&x| element_key(x)).collect();
            let kb: Vec<_> = b.iter().map(|&x| element_key(x)).collect();
            ka.cmp(&kb)
        });
        Self { n, blocks }
    }

    fn relabel(&self, f: impl Fn(i32) -> i32) -> Self {
        Self::canonical(self.n, self.blocks.iter().map(|b| b.iter().map(|&x| f(x)).collect()).collect())
    }

    fn zero_block(&self) -> Option<&Vec<i32>> {
        self.blocks.iter().find(|b| is_zero(b))
    }

    fn write(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, b) in self.blocks.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            let s: Vec<String> = b.iter().map(ToString::to_string).collect();
            write!(f, "{{{}}}", s.join(","))?;
        }
        write!(f, "}}")
    }
}

/// A `D_n`-partition: mirror-symmetric partition of `[±n]` with at most one
/// zero block, which is never a single pair `{i, -i}`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct DPartition(SignedBlocks);

impl DPartition {
    pub fn new(n: usize, blocks: Vec<Vec<i32>>) -> Result<Self> {
        if n < 2 {
            return Err(Error::InvalidPartition(format!("D-partitions need n >= 2, got {n}")));
        }
        SignedBlocks::new(n, blocks, false).map(Self)
    }

    pub fn singletons(n: usize) -> Self {
        let blocks = (1..=n as i32).flat_map(|i| [vec![i], vec![-i]]).collect();
        Self(SignedBlocks::canonical(n, blocks))
    }

    /// The partition with a single zero block `[±n]`.
    pub fn full(n: usize) -> Self {
        let ni = n as i32;
        Self(SignedBlocks::canonical(n, vec![(1..=ni).chain((1..=ni).map(|i| -i)).collect()]))
    }

    pub fn n(&self) -> usize {
        self.0.n
    }

    pub fn blocks(&self) -> &[Vec<i32>] {
        &self.0.blocks
    }

    pub fn zero_block(&self) -> Option<&Vec<i32>> {
        self.0.zero_block()
    }

    pub fn is_zero_block(block: &[i32]) -> bool {
        is_zero(block)
    }
}

impl fmt::Debug for DPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "D")?;
        self.0.write(f)
    }
}

/// A `B_n`-partition: as a `D_n`-partition but a single-pair zero block is allowed.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BPartition(SignedBlocks);

impl BPartition {
    pub fn new(n: usize, blocks: Vec<Vec<i32>>) -> Result<Self> {
        SignedBlocks::new(n, blocks, true).map(Self)
    }

    pub fn n(&self) -> usize {
        self.0.n
    }

    pub fn blocks(&self) -> &[Vec<i32>] {
        &self.0.blocks
    }

    pub fn zero_block(&self) -> Option<&Vec<i32>> {
        self.0.zero_block()
    }

    /// The same blocks on the `2n` circle points `1, …, n, -1, …, -n`
    /// numbered `1, …, 2n`.
    pub fn to_circle(&self) -> SetPartitionA {
        let n = self.0.n;
        let blocks = self.0.blocks.iter().map(|b| b.iter().map(|&x| circle_position(x, n) + 1).collect()).collect();
        SetPartitionA::new(2 * n, blocks).expect("signed blocks cover the circle")
    }
}

impl fmt::Debug for BPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "B")?;
        self.0.write(f)
    }
}

/// Noncrossing `B_n`-partitions: the partitions of the `2n`-gon that are
/// stable under the half turn.
pub fn enumerate_nc_b(n: usize) -> Vec<BPartition> {
    let to_signed = |i: usize| if i <= n { i as i32 } else { -((i - n) as i32) };
    let mut out: Vec<BPartition> = enumerate_nc_a(2 * n)
        .into_iter()
        .filter(|p| rotate_a(p, n as i64) == *p)
        .map(|p| {
            let blocks = p.blocks().iter().map(|b| b.iter().map(|&i| to_signed(i)).collect()).collect();
            BPartition::new(n, blocks).expect("half-turn invariant partitions are B-partitions")
        })
        .collect();
    out.sort();
    out
}

/// `|NC^B(n)| = binom(2n, n)`.
pub fn count_nc_b(n: usize) -> u128 {
    binomial(2 * n, n)
}

/// One step of the rotation `1 → 2 → … → n-1 → -1 → … → -(n-1) → 1`, fixing `±n`.
pub fn rho_point(x: i32, n: usize) -> i32 {
    let m = n as i32 - 1;
    match x {
        x if x.abs() > m => x,
        x if x > 0 && x < m => x + 1,
        x if x > 0 => -1,
        x if x > -m => x - 1,
        _ => 1,
    }
}

pub fn rho(p: &DPartition) -> DPartition {
    let n = p.n();
    DPartition(p.0.relabel(|x| rho_point(x, n)))
}

pub fn rho_pow(p: &DPartition, k: i64) -> DPartition {
    let n = p.n();
    let period = 2 * (n as i64 - 1);
    let steps = k.rem_euclid(period);
    DPartition(p.0.relabel(|mut x| {
        for _ in 0..steps {
            x = rho_point(x, n);
        }
        x
    }))
}

/// Swaps `n` and `-n`; a zero block contains both and is unchanged.
pub fn sigma(p: &DPartition) -> DPartition {
    let ni = p.n() as i32;
    DPartition(p.0.relabel(|x| if x.abs() == ni { -x } else { x }))
}

pub fn sigma_pow(p: &DPartition, k: i64) -> DPartition {
    if k.rem_euclid(2) == 0 {
        p.clone()
    } else {
        sigma(p)
    }
}

/// Necessary condition for a `D_n`-partition to be noncrossing: a zero
/// block contains `±n`, and the boundary parts of distinct blocks do not
/// cross on the `(2n-2)`-gon.
pub fn boundary_noncrossing_d(p: &DPartition) -> bool {
    let n = p.n();
    let ni = n as i32;
    if let Some(z) = p.zero_block() {
        if !z.contains(&ni) {
            return false;
        }
    }
    let blocks: Vec<Vec<usize>> = p
        .blocks()
        .iter()
        .map(|b| b.iter().filter(|x| x.abs() < ni).map(|&x| circle_position(x, n - 1) + 1).collect::<Vec<_>>())
        .filter(|b| !b.is_empty())
        .collect();
    match SetPartitionA::new(2 * n - 2, blocks) {
        Ok(q) => is_noncrossing_a(&q),
        Err(_) => false,
    }
}
