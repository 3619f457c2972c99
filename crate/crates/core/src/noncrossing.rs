//! Non-crossing partitions, their graded lattice, the Kreweras endomorphism,
//! the bijection to chord diagrams, and the Temperley-Lieb generator action
//! on formal sums of partitions.

use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::chords::ChordDiagram;
use crate::lincomb::LinComb;
use crate::rings::LaurentPoly;

/// A non-crossing set partition of `[1, n]` in canonical block form: each
/// block ascending, blocks sorted by their minima.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Debug, Hash)]
pub struct NcPartition {
    n: usize,
    blocks: Vec<Vec<usize>>,
}

/// Formal sum of partitions (or other basis objects) with Laurent-polynomial
/// coefficients.
pub type NcSum = LinComb<NcPartition, LaurentPoly>;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum PartitionError {
    NotAPartition,
    Crossing,
    SizeMismatch,
    Parse(String),
}

impl fmt::Display for PartitionError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PartitionError::NotAPartition => write!(f, "blocks do not partition [1, n]"),
            PartitionError::Crossing => write!(f, "partition is crossing"),
            PartitionError::SizeMismatch => write!(f, "operands have different n"),
            PartitionError::Parse(s) => write!(f, "parse error: {}", s),
        }
    }
}

impl NcPartition {
    pub fn new(n: usize, mut blocks: Vec<Vec<usize>>) -> Result<Self, PartitionError> {
        for b in blocks.iter_mut() {
            b.sort_unstable();
        }
        blocks.retain(|b| !b.is_empty());
        blocks.sort();
        let mut seen = vec![false; n + 1];
        for b in &blocks {
            for &x in b {
                if x == 0 || x > n || seen[x] {
                    return Err(PartitionError::NotAPartition);
                }
                seen[x] = true;
            }
        }
        if seen[1..].iter().any(|&s| !s) {
            return Err(PartitionError::NotAPartition);
        }
        let p = NcPartition { n, blocks };
        if p.is_crossing() {
            return Err(PartitionError::Crossing);
        }
        Ok(p)
    }

    /// The partition of `[1, n]` into singletons (the minimal element).
    pub fn singletons(n: usize) -> Self {
        NcPartition {
            n,
            blocks: (1..=n).map(|i| vec![i]).collect(),
        }
    }

    /// The one-block partition `12...n` (the maximal element).
    pub fn full(n: usize) -> Self {
        NcPartition {
            n,
            blocks: vec![(1..=n).collect()],
        }
    }

    fn is_crossing(&self) -> bool {
        // i < j < k < l with i,k in one block, j,l in another.
        for (a, b1) in self.blocks.iter().enumerate() {
            for (b, b2) in self.blocks.iter().enumerate() {
                if a == b {
                    continue;
                }
                for w in b1.windows(2) {
                    let inside = b2.iter().any(|&x| x > w[0] && x < w[1]);
                    let outside = b2.iter().any(|&x| x < w[0] || x > w[1]);
                    if inside && outside {
                        return true;
                    }
                }
            }
        }
        false
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

    /// Rank `n - (number of blocks)`.
    pub fn rank(&self) -> usize {
        self.n - self.blocks.len()
    }

    /// Index of the block containing `x`.
    pub fn block_of(&self, x: usize) -> usize {
        self.blocks
            .iter()
            .position(|b| b.binary_search(&x).is_ok())
            .expect("element within range")
    }

    /// Cyclic successor of `x` within its block (wraps to the block minimum).
    pub fn succ(&self, x: usize) -> usize {
        let b = &self.blocks[self.block_of(x)];
        match b.binary_search(&x) {
            Ok(i) if i + 1 < b.len() => b[i + 1],
            Ok(_) => b[0],
            Err(_) => unreachable!(),
        }
    }

    /// Relabel every element through `f` (must be a bijection of `[1, n]`).
    pub fn relabel<F: Fn(usize) -> usize>(&self, f: F) -> NcPartition {
        let blocks: Vec<Vec<usize>> = self
            .blocks
            .iter()
            .map(|b| b.iter().map(|&x| f(x)).collect())
            .collect();
        NcPartition::new(self.n, blocks).expect("relabel by a symmetry keeps validity")
    }

    /// Shift every label by +1 mod n.
    pub fn shift_up(&self) -> NcPartition {
        let n = self.n;
        self.relabel(|x| x % n + 1)
    }

    /// Shift every label by -1 mod n.
    pub fn shift_down(&self) -> NcPartition {
        let n = self.n;
        self.relabel(|x| if x == 1 { n } else { x - 1 })
    }

    /// Merge the blocks containing `x` and `y` (no crossing check: callers
    /// must guarantee the result is non-crossing).
    pub fn merge_blocks_of(&self, x: usize, y: usize) -> NcPartition {
        let bx = self.block_of(x);
        let by = self.block_of(y);
        if bx == by {
            return self.clone();
        }
        let mut blocks = self.blocks.clone();
        let merged: Vec<usize> = {
            let mut m = blocks[bx].clone();
            m.extend(blocks[by].iter().copied());
            m.sort_unstable();
            m
        };
        let (lo, hi) = if bx < by { (bx, by) } else { (by, bx) };
        blocks.remove(hi);
        blocks.remove(lo);
        blocks.push(merged);
        NcPartition::new(self.n, blocks).expect("merge produced a crossing partition")
    }

    /// The pair set of the partition: for each block `(b1,...,bp)` the pairs
    /// `(b_s, b_{s+1})` and `(b_p, b_1)`; a singleton contributes `(b, b)`.
    pub fn pair_set(&self) -> Vec<(usize, usize)> {
        let mut pairs = Vec::with_capacity(self.n);
        for b in &self.blocks {
            for w in b.windows(2) {
                pairs.push((w[0], w[1]));
            }
            pairs.push((*b.last().unwrap(), b[0]));
        }
        pairs.sort_unstable();
        pairs
    }
}

impl fmt::Display for NcPartition {
    /// Compact form `136/2/4/5/78` for n <= 9, comma-separated inside blocks
    /// otherwise.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let compact = self.n <= 9;
        for (k, b) in self.blocks.iter().enumerate() {
            if k > 0 {
                write!(f, "/")?;
            }
            for (i, x) in b.iter().enumerate() {
                if !compact && i > 0 {
                    write!(f, ",")?;
                }
                write!(f, "{}", x)?;
            }
        }
        Ok(())
    }
}

/// Parse the textual block form; `n` may exceed the largest mentioned label
/// only if every block is explicit, so we require all of `[1, n]` to appear.
pub fn parse_partition(n: usize, text: &str) -> Result<NcPartition, PartitionError> {
    let mut blocks = Vec::new();
    for part in text.split('/') {
        let mut block = Vec::new();
        if part.contains(',') || n > 9 {
            for item in part.split(',') {
                let x: usize = item
                    .trim()
                    .parse()
                    .map_err(|_| PartitionError::Parse(String::from(item)))?;
                block.push(x);
            }
        } else {
            for c in part.trim().chars() {
                let d = c
                    .to_digit(10)
                    .ok_or_else(|| PartitionError::Parse(String::from(part)))?;
                block.push(d as usize);
            }
        }
        blocks.push(block);
    }
    NcPartition::new(n, blocks)
}

/// All non-crossing partitions of `[1, n]`.
pub fn enumerate_ncp(n: usize) -> Vec<NcPartition> {
    fn go(elements: &[usize]) -> Vec<Vec<Vec<usize>>> {
        if elements.is_empty() {
            return vec![Vec::new()];
        }
        let e0 = elements[0];
        let rest = &elements[1..];
        let mut out = Vec::new();
        // Choose the companions of e0 among the remaining elements. The
        // segments between consecutive companions partition independently,
        // as does the tail after the largest companion.
        let k = rest.len();
        for mask in 0u64..(1 << k) {
            let mut block = vec![e0];
            let mut segments: Vec<Vec<usize>> = Vec::new();
            let mut current = Vec::new();
            for (i, &x) in rest.iter().enumerate() {
                if mask & (1 << i) != 0 {
                    block.push(x);
                    segments.push(core::mem::take(&mut current));
                } else {
                    current.push(x);
                }
            }
            segments.push(current);
            // Cartesian product of the segment partitions.
            let mut acc: Vec<Vec<Vec<usize>>> = vec![vec![block.clone()]];
            for seg in &segments {
                let sub = go(seg);
                let mut next = Vec::new();
                for a in &acc {
                    for s in &sub {
                        let mut combined = a.clone();
                        combined.extend(s.iter().cloned());
                        next.push(combined);
                    }
                }
                acc = next;
            }
            out.extend(acc);
        }
        out
    }
    let elements: Vec<usize> = (1..=n).collect();
    let mut result: Vec<NcPartition> = go(&elements)
        .into_iter()
        .map(|blocks| NcPartition::new(n, blocks).expect("construction is non-crossing"))
        .collect();
    result.sort();
    result.dedup();
    result
}

/// `nu` covers `pi`: rank increases by one and `nu` merges exactly two
/// blocks of `pi`.
pub fn covers(pi: &NcPartition, nu: &NcPartition) -> Result<bool, PartitionError> {
    if pi.n() != nu.n() {
        return Err(PartitionError::SizeMismatch);
    }
    if nu.rank() != pi.rank() + 1 {
        return Ok(false);
    }
    leq(pi, nu)
}

/// Lattice order: `pi <= nu` iff every block of `pi` is contained in a block
/// of `nu` (refinement).
pub fn leq(pi: &NcPartition, nu: &NcPartition) -> Result<bool, PartitionError> {
    if pi.n() != nu.n() {
        return Err(PartitionError::SizeMismatch);
    }
    Ok(pi.blocks().iter().all(|b| {
        let target = nu.block_of(b[0]);
        b.iter().all(|&x| nu.block_of(x) == target)
    }))
}

/// The Kreweras endomorphism, computed from the pair set `I(pi)` of all
/// `(j, t)`: `t` is the successor of `j-1` (cyclically, within its block)
/// unless `j-1` lies in the block of `j`, in which case `t = j`. Connected
/// components of the pairs are the blocks of the image.
pub fn kreweras(pi: &NcPartition) -> NcPartition {
    let n = pi.n();
    let mut uf = UnionFind::new(n + 1);
    for j in 1..=n {
        let prev = if j == 1 { n } else { j - 1 };
        let t = if pi.block_of(prev) == pi.block_of(j) {
            j
        } else {
            pi.succ(prev)
        };
        uf.union(j, t);
    }
    let mut groups: Vec<Vec<usize>> = vec![Vec::new(); n + 1];
    for x in 1..=n {
        groups[uf.find(x)].push(x);
    }
    let blocks: Vec<Vec<usize>> = groups.into_iter().filter(|g| !g.is_empty()).collect();
    NcPartition::new(n, blocks).expect("Kreweras image is non-crossing")
}

/// Inverse Kreweras endomorphism: label shift by -1 composed with the
/// endomorphism, using that its square is the +1 label rotation.
pub fn kreweras_inv(pi: &NcPartition) -> NcPartition {
    kreweras(pi).shift_down()
}

/// The bijection to chord diagrams: each pair `(i, j)` of the pair set is an
/// arch from point `i` to point `(j-1)'` mod n, where the point `k` sits at
/// position `2k-1` and `k'` at position `2k`.
pub fn psi(pi: &NcPartition) -> ChordDiagram {
    let n = pi.n();
    let mut arches = Vec::with_capacity(n);
    for (i, j) in pi.pair_set() {
        let jm = if j == 1 { n } else { j - 1 };
        let a = 2 * i - 1;
        let b = 2 * jm;
        arches.push(if a < b { (a, b) } else { (b, a) });
    }
    ChordDiagram::from_arches(2 * n, arches).expect("psi image is planar")
}

/// Inverse of `psi`: an arch from `i` to `j'` says `i` and `j+1` are cyclic
/// neighbours in a block.
pub fn psi_inv(c: &ChordDiagram) -> Result<NcPartition, PartitionError> {
    if !c.num_points.is_multiple_of(2) || c.is_decorated() {
        return Err(PartitionError::NotAPartition);
    }
    let n = c.num_points / 2;
    let mut uf = UnionFind::new(n + 1);
    for &(a, b) in &c.arches {
        // One endpoint is odd (an unprimed label), the other even (primed).
        let (i, j) = if a % 2 == 1 {
            (a.div_ceil(2), b / 2)
        } else {
            (b.div_ceil(2), a / 2)
        };
        let next = j % n + 1;
        uf.union(i, next);
    }
    let mut groups: Vec<Vec<usize>> = vec![Vec::new(); n + 1];
    for x in 1..=n {
        groups[uf.find(x)].push(x);
    }
    let blocks: Vec<Vec<usize>> = groups.into_iter().filter(|g| !g.is_empty()).collect();
    NcPartition::new(n, blocks)
}

/// The merge operator: joins the blocks of `i` and `i+1` (cyclically; `i = n`
/// joins the blocks of `n` and `1`), or multiplies by `tau` when they
/// already coincide.
pub fn f_op(i: usize, pi: &NcPartition) -> NcSum {
    let n = pi.n();
    assert!(i >= 1 && i <= n);
    let j = i % n + 1;
    if pi.block_of(i) == pi.block_of(j) {
        NcSum::term(pi.clone(), LaurentPoly::tau())
    } else {
        NcSum::basis(pi.merge_blocks_of(i, j))
    }
}

/// The Temperley-Lieb generator `F_i`, `1 <= i <= 2n-1`, acting on a single
/// partition: the merge operator conjugated by the Kreweras endomorphism.
pub fn generator_f_basis(i: usize, pi: &NcPartition) -> NcSum {
    let n = pi.n();
    assert!(i >= 1 && i < 2 * n, "generator index out of range");
    let mut x = pi.clone();
    for _ in 0..(i - 1) {
        x = kreweras_inv(&x);
    }
    let merged = f_op(1, &x);
    merged.map_basis(|p| {
        let mut y = p.clone();
        for _ in 0..(i - 1) {
            y = kreweras(&y);
        }
        NcSum::basis(y)
    })
}

/// `F_i` extended linearly to formal sums.
pub fn generator_f(i: usize, x: &NcSum) -> NcSum {
    x.map_basis(|pi| generator_f_basis(i, pi))
}

pub(crate) struct UnionFind {
    parent: Vec<usize>,
}

impl UnionFind {
    pub fn new(size: usize) -> Self {
        UnionFind {
            parent: (0..size).collect(),
        }
    }

    pub fn find(&mut self, x: usize) -> usize {
        if self.parent[x] != x {
            let root = self.find(self.parent[x]);
            self.parent[x] = root;
        }
        self.parent[x]
    }

    pub fn union(&mut self, a: usize, b: usize) {
        let ra = self.find(a);
        let rb = self.find(b);
        if ra != rb {
            self.parent[ra] = rb;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::string::ToString;

    fn p(n: usize, s: &str) -> NcPartition {
        parse_partition(n, s).unwrap()
    }

    #[test]
    fn enumerate_small() {
        let nc3 = enumerate_ncp(3);
        let words: Vec<String> = nc3.iter().map(|x| x.to_string()).collect();
        assert_eq!(words, vec!["1/2/3", "1/23", "12/3", "123", "13/2"]);
        assert_eq!(enumerate_ncp(1).len(), 1);
        // Catalan numbers.
        assert_eq!(enumerate_ncp(4).len(), 14);
        assert_eq!(enumerate_ncp(5).len(), 42);
        // 13/24 is excluded.
        assert!(parse_partition(4, "13/24").is_err());
        assert!(enumerate_ncp(4).iter().all(|x| x.to_string() != "13/24"));
    }

    #[test]
    fn rank_and_covers() {
        assert_eq!(p(6, "134/2/56").rank(), 3);
        assert!(covers(&p(3, "1/2/3"), &p(3, "13/2")).unwrap());
        assert!(!covers(&p(4, "1/2/3/4"), &p(4, "14/23")).unwrap());
        assert!(leq(&p(4, "1/2/3/4"), &p(4, "14/23")).unwrap());
    }

    #[test]
    fn leq_is_reflexive_transitive_closure_of_covers() {
        for n in 1..=5usize {
            let all = enumerate_ncp(n);
            // Closure of covers.
            let idx = |x: &NcPartition| all.iter().position(|y| y == x).unwrap();
            let m = all.len();
            let mut reach = vec![vec![false; m]; m];
            for (i, x) in all.iter().enumerate() {
                reach[i][i] = true;
                for (j, y) in all.iter().enumerate() {
                    if covers(x, y).unwrap() {
                        reach[i][j] = true;
                    }
                }
            }
            for k in 0..m {
                for i in 0..m {
                    for j in 0..m {
                        if reach[i][k] && reach[k][j] {
                            reach[i][j] = true;
                        }
                    }
                }
            }
            for x in &all {
                for y in &all {
                    assert_eq!(reach[idx(x)][idx(y)], leq(x, y).unwrap());
                }
            }
        }
    }

    #[test]
    fn kreweras_worked_examples() {
        assert_eq!(kreweras(&p(8, "136/2/4/5/78")), p(8, "17/23/456/8"));
        assert_eq!(kreweras(&p(9, "12/35/4/69/78")), p(9, "136/2/45/79/8"));
    }

    #[test]
    fn kreweras_rotation_and_order() {
        for pi in enumerate_ncp(4) {
            // rho^2 is the +1 label rotation.
            assert_eq!(kreweras(&kreweras(&pi)), pi.shift_up());
            // rho^{2n} is the identity.
            let mut x = pi.clone();
            for _ in 0..8 {
                x = kreweras(&x);
            }
            assert_eq!(x, pi);
            assert_eq!(kreweras_inv(&kreweras(&pi)), pi);
            assert_eq!(kreweras(&kreweras_inv(&pi)), pi);
        }
    }

    #[test]
    fn kreweras_rank_complement() {
        for n in 1..=6usize {
            for pi in enumerate_ncp(n) {
                assert_eq!(kreweras(&pi).rank() + pi.rank(), n - 1);
            }
        }
    }

    #[test]
    fn kreweras_reverses_covers() {
        for n in 1..=4usize {
            let all = enumerate_ncp(n);
            for x in &all {
                for y in &all {
                    if covers(x, y).unwrap() {
                        assert!(covers(&kreweras(y), &kreweras(x)).unwrap());
                    }
                }
            }
        }
    }

    #[test]
    fn psi_worked_examples() {
        use crate::chords::matching_to_path;
        let c = psi(&p(4, "12/3/4"));
        assert_eq!(c.arches, vec![(1, 2), (3, 8), (4, 5), (6, 7)]);
        assert_eq!(matching_to_path(&c).to_string(), "URUURURR");
        // The full block gives the sawtooth of short arches.
        let c = psi(&NcPartition::full(3));
        assert_eq!(c.arches, vec![(1, 2), (3, 4), (5, 6)]);
        // Singletons: each element pairs with the previous primed point.
        let c = psi(&NcPartition::singletons(3));
        assert_eq!(c.arches, vec![(1, 6), (2, 3), (4, 5)]);
    }

    #[test]
    fn psi_round_trip() {
        for pi in enumerate_ncp(5) {
            assert_eq!(psi_inv(&psi(&pi)).unwrap(), pi);
        }
    }

    #[test]
    fn f_examples() {
        let pi = p(8, "13/2/456/78");
        let tau = LaurentPoly::tau();
        assert_eq!(f_op(4, &pi), NcSum::term(pi.clone(), tau.clone()));
        assert_eq!(f_op(5, &pi), NcSum::term(pi.clone(), tau.clone()));
        assert_eq!(f_op(7, &pi), NcSum::term(pi.clone(), tau));
        assert_eq!(f_op(1, &pi), NcSum::basis(p(8, "123/456/78")));
        assert_eq!(f_op(6, &pi), NcSum::basis(p(8, "13/2/45678")));
    }

    #[test]
    fn f5_worked_example() {
        assert_eq!(
            generator_f_basis(5, &p(3, "1/2/3")),
            NcSum::basis(p(3, "13/2"))
        );
    }

    #[test]
    fn temperley_lieb_relations() {
        let tau = LaurentPoly::tau();
        for n in 2..=4usize {
            let all = enumerate_ncp(n);
            for pi in &all {
                let basis = NcSum::basis(pi.clone());
                for i in 1..=(2 * n - 1) {
                    // F_i^2 = tau F_i
                    let fi = generator_f(i, &basis);
                    assert_eq!(generator_f(i, &fi), fi.scale(&tau));
                    // F_i F_{i+1} F_i = F_i and F_{i+1} F_i F_{i+1} = F_{i+1}
                    if i + 1 <= 2 * n - 1 {
                        let a = generator_f(i, &generator_f(i + 1, &fi));
                        assert_eq!(a, fi);
                        let fi1 = generator_f(i + 1, &basis);
                        let b = generator_f(i + 1, &generator_f(i, &fi1));
                        assert_eq!(b, fi1);
                    }
                    // Commutation for |i - j| > 1
                    for j in (i + 2)..=(2 * n - 1) {
                        let ab = generator_f(i, &generator_f(j, &basis));
                        let ba = generator_f(j, &generator_f(i, &basis));
                        assert_eq!(ab, ba);
                    }
                }
            }
        }
    }
}
