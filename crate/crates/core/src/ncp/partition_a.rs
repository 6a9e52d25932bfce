//! Circular set partitions of `[n]` and the type-A noncrossing model.

use std::fmt;

use crate::error::{Error, Result};
use crate::root_coxeter::Permutation;

/// A set partition of `{1, …, n}` in canonical form: blocks sorted
/// ascending, blocks ordered by their minimum.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SetPartitionA {
    n: usize,
    blocks: Vec<Vec<usize>>,
}

impl SetPartitionA {
    pub fn new(n: usize, blocks: Vec<Vec<usize>>) -> Result<Self> {
        let mut seen = vec![false; n + 1];
        for b in &blocks {
            if b.is_empty() {
                return Err(Error::InvalidPartition("empty block".into()));
            }
            for &x in b {
                if x == 0 || x > n {
                    return Err(Error::InvalidPartition(format!("element {x} outside 1..={n}")));
                }
                if seen[x] {
                    return Err(Error::InvalidPartition(format!("element {x} repeated")));
                }
                seen[x] = true;
            }
        }
        if let Some(x) = (1..=n).find(|&x| !seen[x]) {
            return Err(Error::InvalidPartition(format!("element {x} not covered")));
        }
        Ok(Self::canonical(n, blocks))
    }

    fn canonical(n: usize, mut blocks: Vec<Vec<usize>>) -> Self {
        for b in &mut blocks {
            b.sort_unstable();
        }
        blocks.sort_unstable();
        Self { n, blocks }
    }

    pub fn singletons(n: usize) -> Self {
        Self { n, blocks: (1..=n).map(|i| vec![i]).collect() }
    }

    pub fn full(n: usize) -> Self {
        Self { n, blocks: vec![(1..=n).collect()] }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn blocks(&self) -> &[Vec<usize>] {
        &self.blocks
    }

    pub fn num_blocks(&self) -> usize {
        self.blocks.len()
    }

    /// `labels[i]` is the index of the block containing `i` (index 0 unused).
    pub fn block_labels(&self) -> Vec<usize> {
        let mut labels = vec![usize::MAX; self.n + 1];
        for (k, b) in self.blocks.iter().enumerate() {
            for &x in b {
                labels[x] = k;
            }
        }
        labels
    }

    /// Chords joining cyclically consecutive elements of each block, as `(a, b)` with `a < b`.
    pub fn chords(&self) -> Vec<(usize, usize, usize)> {
        let mut out = Vec::new();
        for (k, b) in self.blocks.iter().enumerate() {
            match b.len() {
                0 | 1 => {}
                2 => out.push((b[0], b[1], k)),
                len => {
                    for i in 0..len {
                        let (x, y) = (b[i], b[(i + 1) % len]);
                        out.push((x.min(y), x.max(y), k));
                    }
                }
            }
        }
        out
    }

    /// The permutation whose cycles are the blocks, each read in increasing order.
    pub fn to_permutation(&self) -> Permutation {
        Permutation::from_cycles(self.n, &self.blocks)
    }

    pub fn from_permutation(p: &Permutation) -> Self {
        Self::canonical(p.n(), p.cycles())
    }
}

impl fmt::Debug for SetPartitionA {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
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

/// No two chords of distinct blocks interleave around the circle.
pub fn is_noncrossing_a(p: &SetPartitionA) -> bool {
    let chords = p.chords();
    for (i, &(a, b, x)) in chords.iter().enumerate() {
        for &(c, d, y) in &chords[i + 1..] {
            if x != y && ((a < c && c < b && b < d) || (c < a && a < d && d < b)) {
                return false;
            }
        }
    }
    true
}

/// All noncrossing partitions of `[n]`, in canonical order.
pub fn enumerate_nc_a(n: usize) -> Vec<SetPartitionA> {
    fn go(i: usize, n: usize, open: &mut Vec<usize>, blocks: &mut Vec<Vec<usize>>, out: &mut Vec<SetPartitionA>) {
        if i > n {
            out.push(SetPartitionA::canonical(n, blocks.clone()));
            return;
        }
        // join an open block, closing every block opened after it
        for depth in 0..open.len() {
            let b = open[depth];
            let saved: Vec<usize> = open.drain(depth + 1..).collect();
            blocks[b].push(i);
            go(i + 1, n, open, blocks, out);
            blocks[b].pop();
            open.extend(saved);
        }
        blocks.push(vec![i]);
        open.push(blocks.len() - 1);
        go(i + 1, n, open, blocks, out);
        open.pop();
        blocks.pop();
    }
    let mut out = Vec::new();
    go(1, n, &mut Vec::new(), &mut Vec::new(), &mut out);
    out.sort_unstable();
    out
}

/// Relabels `i ↦ ((i + k - 1) mod n) + 1`.
pub fn rotate_a(p: &SetPartitionA, k: i64) -> SetPartitionA {
    let n = p.n as i64;
    let blocks = p
        .blocks
        .iter()
        .map(|b| b.iter().map(|&i| ((i as i64 - 1 + k).rem_euclid(n) + 1) as usize).collect())
        .collect();
    SetPartitionA::canonical(p.n, blocks)
}

/// Kreweras complement on the interlaced points `1', …, n'`, with `i'`
/// between `i` and `i + 1`. Returned as a partition of `[n]` where `i`
/// stands for `i'`.
pub fn kreweras_alpha(p: &SetPartitionA) -> Result<SetPartitionA> {
    if !is_noncrossing_a(p) {
        return Err(Error::Crossing);
    }
    let n = p.n;
    let c = Permutation::from_cycles(n, &[(1..=n).collect()]);
    let k = p.to_permutation().inverse().compose(&c);
    Ok(SetPartitionA::from_permutation(&k))
}

/// Inverse of [`kreweras_alpha`].
pub fn kreweras_alpha_inv(q: &SetPartitionA) -> Result<SetPartitionA> {
    if !is_noncrossing_a(q) {
        return Err(Error::Crossing);
    }
    let n = q.n;
    let c = Permutation::from_cycles(n, &[(1..=n).collect()]);
    let p = c.compose(&q.to_permutation().inverse());
    Ok(SetPartitionA::from_permutation(&p))
}

/// Reduces a rotation-invariant partition of `[h]` modulo `s`.
pub fn project_f(p: &SetPartitionA, s: usize) -> Result<SetPartitionA> {
    let h = p.n;
    if s == 0 || h % s != 0 {
        return Err(Error::BadDivisor(format!("{s} does not divide {h}")));
    }
    if rotate_a(p, s as i64) != *p {
        return Err(Error::NotInvariant { step: s });
    }
    let reduce = |x: usize| (x - 1) % s + 1;
    let mut blocks: Vec<Vec<usize>> = p
        .blocks
        .iter()
        .map(|b| {
            let mut r: Vec<usize> = b.iter().map(|&x| reduce(x)).collect();
            r.sort_unstable();
            r.dedup();
            r
        })
        .collect();
    blocks.sort_unstable();
    blocks.dedup();
    SetPartitionA::new(s, blocks)
}

/// Lifts `w` on `[s]` to `[x s]` with block `big` blown up to `big + sZ`
/// and every other block repeated in the `x` copies of its gap.
fn lift_with_big_block(w: &SetPartitionA, big: usize, x: usize) -> SetPartitionA {
    let s = w.n;
    let h = s * x;
    let b = &w.blocks[big];
    let first = b[0];
    let mut blocks = vec![(1..=h).filter(|&j| b.contains(&((j - 1) % s + 1))).collect::<Vec<_>>()];
    for (k, c) in w.blocks.iter().enumerate() {
        if k == big {
            continue;
        }
        // place the block inside one arc (first, first + s] of the big block
        let base: Vec<usize> = c.iter().map(|&e| if e < first { e + s } else { e }).collect();
        for j in 0..x {
            blocks.push(base.iter().map(|&e| (e + j * s - 1) % h + 1).collect());
        }
    }
    SetPartitionA::canonical(h, blocks)
}

/// The `s + 1` rotation-invariant noncrossing partitions of `[x s]` that
/// project to `w`.
pub fn construct_fiber(w: &SetPartitionA, x: usize) -> Result<Vec<SetPartitionA>> {
    if x <= 1 {
        return Err(Error::BadDivisor(format!("multiplier {x} must exceed 1")));
    }
    let comp = kreweras_alpha(w)?;
    let mut out: Vec<SetPartitionA> = (0..w.num_blocks()).map(|k| lift_with_big_block(w, k, x)).collect();
    for k in 0..comp.num_blocks() {
        let v = lift_with_big_block(&comp, k, x);
        out.push(kreweras_alpha_inv(&v)?);
    }
    Ok(out)
}

/// Catalan number `C_n`.
pub fn catalan(n: usize) -> u128 {
    binomial(2 * n, n) / (n as u128 + 1)
}

pub fn binomial(n: usize, k: usize) -> u128 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    (0..k).fold(1u128, |acc, i| acc * (n - i) as u128 / (i as u128 + 1))
}
