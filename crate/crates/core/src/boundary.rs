//! Symmetric non-crossing partitions (plain and primed), their chord-diagram
//! bijections, the boundary generators, and the state conversions used by
//! the isomorphism verifiers against the diagram algebras.
//!
//! Throughout, the operational symmetry is the `epsilon = 0` reflection
//! `i -> n + 2 - i (mod n)`; the `epsilon = 1` family is reached through
//! the Kreweras endomorphism.

use alloc::collections::BTreeSet;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigInt;
use num_traits::One;

use crate::chains::{psi_r, RChain};
use crate::chords::{enumerate_cond_a_diagrams, ChordDiagram};
use crate::diagram::{HalfDiagram, Parity};
use crate::lincomb::LinComb;
use crate::noncrossing::{
    enumerate_ncp, kreweras, kreweras_inv, leq, NcPartition, NcSum, PartitionError,
};
use crate::rings::LaurentPoly;

/// The reflection `i -> n + 2 - epsilon - i`, with labels mod n.
pub fn reflect(n: usize, epsilon: usize, i: usize) -> usize {
    let v = (2 * n + 2 - epsilon - i - 1) % n;
    v + 1
}

/// Is the partition symmetric under the reflection for this `epsilon`?
pub fn is_symmetric(pi: &NcPartition, epsilon: usize) -> bool {
    let n = pi.n();
    let image = pi.relabel(|i| reflect(n, epsilon, i));
    image == *pi
}

/// All symmetric non-crossing partitions for the given `epsilon`.
pub fn enumerate_snc(n: usize, epsilon: usize) -> Vec<NcPartition> {
    enumerate_ncp(n)
        .into_iter()
        .filter(|p| is_symmetric(p, epsilon))
        .collect()
}

/// The closed-form count `binom(n, floor(n/2))`.
pub fn count_snc(n: usize) -> BigInt {
    let mut num = BigInt::one();
    let mut den = BigInt::one();
    let k = n / 2;
    for i in 0..k {
        num *= BigInt::from(n - i);
        den *= BigInt::from(i + 1);
    }
    num / den
}

// --- primed machinery --------------------------------------------------------

/// Parity classes of the order `1 > n > 2 > n-1 > ...`: the first half
/// `{1, ..., floor(n/2)}` is odd, the rest even.
pub fn class_is_odd(b: usize, n: usize) -> bool {
    b <= n / 2
}

/// Position of `b` in the linear order `1 > n > 2 > n-1 > ...` (0 = top).
pub fn order1_index(b: usize, n: usize) -> usize {
    if class_is_odd(b, n) {
        2 * (b - 1)
    } else {
        2 * (n - b) + 1
    }
}

/// The symmetric members of the pair set: elements `b` whose pair `(b, c)`
/// has `b + c = n + 2`, reading the singleton pair `(1, 1)` as `(1, n+1)`.
pub fn e_sym(pi: &NcPartition) -> Vec<usize> {
    let n = pi.n();
    let mut out = Vec::new();
    for (b, c) in pi.pair_set() {
        let c_eff = if b == 1 && c == 1 { n + 1 } else { c };
        if b + c_eff == n + 2 {
            out.push(b);
        }
    }
    out.sort_unstable();
    out
}

/// The symmetric members sorted decreasing in the linear order.
pub fn s_sym(pi: &NcPartition) -> Vec<usize> {
    let n = pi.n();
    let mut v = e_sym(pi);
    v.sort_by_key(|&b| order1_index(b, n));
    v
}

/// A symmetric non-crossing partition with primed integers: the primed set
/// is a downward-closed prefix of the symmetric members in the linear
/// order.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Debug, Hash)]
pub struct PrimedSymNcPartition {
    pub base: NcPartition,
    pub primed: BTreeSet<usize>,
}

/// Formal sum of primed partitions.
pub type PrimedSum = LinComb<PrimedSymNcPartition, LaurentPoly>;

impl PrimedSymNcPartition {
    pub fn new(base: NcPartition, primed: BTreeSet<usize>) -> Result<Self, PartitionError> {
        let p = PrimedSymNcPartition { base, primed };
        if !p.is_valid() {
            return Err(PartitionError::Crossing);
        }
        Ok(p)
    }

    pub fn unprimed(base: NcPartition) -> Self {
        PrimedSymNcPartition {
            base,
            primed: BTreeSet::new(),
        }
    }

    pub fn n(&self) -> usize {
        self.base.n()
    }

    /// Validity: the base is symmetric and the primed set is a prefix of
    /// the symmetric member sequence.
    pub fn is_valid(&self) -> bool {
        if !is_symmetric(&self.base, 0) {
            return false;
        }
        let seq = s_sym(&self.base);
        let k = self.primed.len();
        if k > seq.len() {
            return false;
        }
        let prefix: BTreeSet<usize> = seq[..k].iter().copied().collect();
        prefix == self.primed
    }
}

impl fmt::Display for PrimedSymNcPartition {
    /// Apostrophe after a primed element, e.g. `1'/2/34'/5`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let n = self.n();
        let compact = n <= 9;
        for (k, b) in self.base.blocks().iter().enumerate() {
            if k > 0 {
                write!(f, "/")?;
            }
            for (i, x) in b.iter().enumerate() {
                if !compact && i > 0 {
                    write!(f, ",")?;
                }
                write!(f, "{}", x)?;
                if self.primed.contains(x) {
                    write!(f, "'")?;
                }
            }
        }
        Ok(())
    }
}

/// All primed symmetric partitions of size `n`; their number is `2^n`.
pub fn enumerate_primed(n: usize) -> Vec<PrimedSymNcPartition> {
    let mut out = Vec::new();
    for base in enumerate_snc(n, 0) {
        let seq = s_sym(&base);
        for k in 0..=seq.len() {
            let primed: BTreeSet<usize> = seq[..k].iter().copied().collect();
            out.push(PrimedSymNcPartition {
                base: base.clone(),
                primed,
            });
        }
    }
    out.sort();
    out
}

// --- mark transport under the Kreweras endomorphism ---------------------------

/// Transport of prime marks under the endomorphism: a mark rides its pair,
/// so it moves to the successor of its carrier.
fn marks_rho(marks: &BTreeSet<usize>, pi: &NcPartition) -> BTreeSet<usize> {
    marks.iter().map(|&m| pi.succ(m)).collect()
}

/// Transport under the inverse endomorphism: `m -> succ(m) - 1 (mod n)`.
fn marks_rho_inv(marks: &BTreeSet<usize>, pi: &NcPartition) -> BTreeSet<usize> {
    let n = pi.n();
    marks
        .iter()
        .map(|&m| {
            let s = pi.succ(m);
            if s == 1 {
                n
            } else {
                s - 1
            }
        })
        .collect()
}

// --- one-boundary generators ---------------------------------------------------

/// The base map of the one-boundary family for `1 <= p <= n-1`: merge the
/// blocks at the seam and at its mirror, with the weights of the three
/// block-pattern cases.
fn g_1b_base(p: usize, pi: &NcPartition) -> (LaurentPoly, NcPartition) {
    let n = pi.n();
    assert!(p >= 1 && p < n);
    let b = |x: usize| pi.block_of(((x - 1) % n) + 1);
    if b(1) == b(2) && b(n + 2 - p) == b(n + 1 - p) {
        return (LaurentPoly::tau(), pi.clone());
    }
    let merged = pi
        .merge_blocks_of(1, 2)
        .merge_blocks_of(n + 1 - p, if n + 2 - p > n { 1 } else { n + 2 - p });
    if b(1) == b(n + 2 - p) && b(1) != b(2) && b(2) == b(n + 1 - p) {
        (LaurentPoly::tau_p(p, n), merged)
    } else {
        (LaurentPoly::one(), merged)
    }
}

/// The boundary map `g_n`: split the middle block (n even), merge the two
/// middle blocks (n odd), or produce the boundary weight.
fn g_n_base(pi: &NcPartition) -> (LaurentPoly, NcPartition) {
    let n = pi.n();
    if n.is_multiple_of(2) {
        let mid = n / 2 + 1;
        let block = &pi.blocks()[pi.block_of(mid)];
        if block.len() != 1 {
            let mut blocks: Vec<Vec<usize>> = pi
                .blocks()
                .iter()
                .map(|b| b.iter().copied().filter(|&x| x != mid).collect())
                .collect();
            blocks.push(vec![mid]);
            let split = NcPartition::new(n, blocks).expect("splitting keeps non-crossing");
            return (LaurentPoly::one(), split);
        }
    } else {
        let a = n.div_ceil(2);
        let bidx = (n + 3) / 2;
        if pi.block_of(a) != pi.block_of(bidx) {
            return (LaurentPoly::one(), pi.merge_blocks_of(a, bidx));
        }
    }
    (
        LaurentPoly::minus_x_plus_xinv(crate::rings::VAR_QN),
        pi.clone(),
    )
}

/// The one-boundary generator `G_i`, `1 <= i <= n`, on a single symmetric
/// partition; the bulk generators conjugate the base maps by the Kreweras
/// endomorphism.
pub fn generator_g1_basis(i: usize, pi: &NcPartition) -> NcSum {
    let n = pi.n();
    assert!(i >= 1 && i <= n, "generator index out of range");
    if i == n {
        let (c, p) = g_n_base(pi);
        return NcSum::term(p, c);
    }
    let mut x = pi.clone();
    for _ in 0..(i - 1) {
        x = kreweras_inv(&x);
    }
    let (c, p) = g_1b_base(i, &x);
    let mut y = p;
    for _ in 0..(i - 1) {
        y = kreweras(&y);
    }
    NcSum::term(y, c)
}

/// `G_i` extended linearly to formal sums of symmetric partitions.
pub fn generator_g1(i: usize, x: &NcSum) -> NcSum {
    x.map_basis(|pi| generator_g1_basis(i, pi))
}

// --- two-boundary generators ----------------------------------------------------

/// Cyclic predecessor of `x` within its block.
fn pred(pi: &NcPartition, x: usize) -> usize {
    let block = &pi.blocks()[pi.block_of(x)];
    let idx = block.binary_search(&x).unwrap();
    if idx == 0 {
        *block.last().unwrap()
    } else {
        block[idx - 1]
    }
}

/// Merge the blocks at the seam `(a, b)` (`b` the cyclic neighbour of `a`)
/// and transport the prime marks: the two removed pairs `(a, succ a)` and
/// `(pred b, b)` rewire into `(pred b, succ a)`, and a dot on either rides
/// onto the new strand.
fn merge_with_marks(
    pi: &NcPartition,
    marks: &BTreeSet<usize>,
    a: usize,
    b: usize,
) -> (NcPartition, BTreeSet<usize>) {
    if pi.block_of(a) == pi.block_of(b) {
        return (pi.clone(), marks.clone());
    }
    let pb = pred(pi, b);
    let merged = pi.merge_blocks_of(a, b);
    let mut m2 = marks.clone();
    if m2.remove(&a) {
        assert!(!marks.contains(&pb), "two dots cannot ride one strand");
        m2.insert(pb);
    }
    (merged, m2)
}

/// The two-boundary base map for `1 <= p <= n-1` on a partition with prime
/// marks. In the boundary configuration, the dots on the two consumed
/// strands select the weight: none gives the right weight, one gives theta,
/// two give the left weight; otherwise the dots ride through the merges.
fn g_2b_base(
    p: usize,
    pi: &NcPartition,
    marks: &BTreeSet<usize>,
) -> (LaurentPoly, NcPartition, BTreeSet<usize>) {
    let n = pi.n();
    assert!(p >= 1 && p < n);
    let wrap = |x: usize| ((x - 1) % n) + 1;
    let b = |x: usize| pi.block_of(wrap(x));
    if b(1) == b(2) && b(n + 2 - p) == b(n + 1 - p) {
        assert!(
            !marks.contains(&1) && !marks.contains(&pred(pi, 2)),
            "a loop cannot consume a dot"
        );
        return (LaurentPoly::tau(), pi.clone(), marks.clone());
    }
    let boundary_case = b(1) == b(n + 2 - p) && b(1) != b(2) && b(2) == b(n + 1 - p);
    if boundary_case {
        // The consumed strands are the pairs (1, succ 1) and (pred 2, 2).
        let pb = pred(pi, 2);
        let d1 = marks.contains(&1);
        let d2 = marks.contains(&pb);
        let mut m2 = marks.clone();
        m2.remove(&1);
        m2.remove(&pb);
        let merged = pi.merge_blocks_of(1, 2);
        let coef = match (d1, d2) {
            (false, false) => LaurentPoly::tau_p(p, n),
            (true, true) => LaurentPoly::tau_p_prime(p),
            _ => LaurentPoly::theta(),
        };
        return (coef, merged, m2);
    }
    let (m1, marks1) = merge_with_marks(pi, marks, 1, 2);
    let (m2, marks2) = merge_with_marks(&m1, &marks1, n + 1 - p, wrap(n + 2 - p));
    (LaurentPoly::one(), m2, marks2)
}

/// The two-boundary `g_n`: as in the one-boundary case, with a theta case
/// when the middle element is primed.
fn g_n_2b(
    pi: &NcPartition,
    marks: &BTreeSet<usize>,
) -> (LaurentPoly, NcPartition, BTreeSet<usize>) {
    let n = pi.n();
    let mid = n / 2 + 1;
    if n.is_multiple_of(2) {
        let block = &pi.blocks()[pi.block_of(mid)];
        if block.len() != 1 {
            let mut blocks: Vec<Vec<usize>> = pi
                .blocks()
                .iter()
                .map(|b| b.iter().copied().filter(|&x| x != mid).collect())
                .collect();
            blocks.push(vec![mid]);
            let split = NcPartition::new(n, blocks).expect("splitting keeps non-crossing");
            return (LaurentPoly::one(), split, marks.clone());
        }
    } else {
        let a = n.div_ceil(2);
        let bidx = (n + 3) / 2;
        if pi.block_of(a) != pi.block_of(bidx) {
            return (LaurentPoly::one(), pi.merge_blocks_of(a, bidx), marks.clone());
        }
    }
    if marks.contains(&mid) {
        let mut m2 = marks.clone();
        m2.remove(&mid);
        return (LaurentPoly::theta(), pi.clone(), m2);
    }
    (
        LaurentPoly::minus_x_plus_xinv(crate::rings::VAR_QN),
        pi.clone(),
        marks.clone(),
    )
}

/// The left-boundary map `g_0`: reads the pair of 1.
fn g_0_2b(
    pi: &NcPartition,
    marks: &BTreeSet<usize>,
) -> (LaurentPoly, NcPartition, BTreeSet<usize>) {
    let n = pi.n();
    let n1 = pi.succ(1);
    if n1 == 1 {
        if marks.contains(&1) {
            (
                LaurentPoly::minus_x_plus_xinv(crate::rings::VAR_Q0),
                pi.clone(),
                marks.clone(),
            )
        } else {
            let mut m2 = marks.clone();
            m2.insert(1);
            (LaurentPoly::theta(), pi.clone(), m2)
        }
    } else {
        // Split {1} off its block and add primes on 1 and n + 2 - n1.
        let mut blocks: Vec<Vec<usize>> = pi
            .blocks()
            .iter()
            .map(|b| b.iter().copied().filter(|&x| x != 1).collect())
            .collect();
        blocks.push(vec![1]);
        let split = NcPartition::new(n, blocks).expect("splitting keeps non-crossing");
        let mut m2 = marks.clone();
        m2.insert(1);
        m2.insert(n + 2 - n1);
        (LaurentPoly::one(), split, m2)
    }
}

/// The two-boundary generator `G_i`, `0 <= i <= n`, on a primed symmetric
/// partition.
pub fn generator_g2_basis(i: usize, pi: &PrimedSymNcPartition) -> PrimedSum {
    let n = pi.n();
    assert!(i <= n, "generator index out of range");
    let (coef, base, marks) = if i == 0 {
        g_0_2b(&pi.base, &pi.primed)
    } else if i == n {
        g_n_2b(&pi.base, &pi.primed)
    } else {
        let mut part = pi.base.clone();
        let mut marks = pi.primed.clone();
        for _ in 0..(i - 1) {
            marks = marks_rho_inv(&marks, &part);
            part = kreweras_inv(&part);
        }
        let (c, p2, m2) = g_2b_base(i, &part, &marks);
        let mut part = p2;
        let mut marks = m2;
        for _ in 0..(i - 1) {
            marks = marks_rho(&marks, &part);
            part = kreweras(&part);
        }
        (c, part, marks)
    };
    let out = PrimedSymNcPartition::new(base, marks)
        .expect("generator image is an admissible primed partition");
    PrimedSum::term(out, coef)
}

/// `G_i` extended linearly to formal sums of primed partitions.
pub fn generator_g2(i: usize, x: &PrimedSum) -> PrimedSum {
    x.map_basis(|pi| generator_g2_basis(i, pi))
}

// --- chains with boundary generators --------------------------------------------

/// Formal sum of symmetric chains.
pub type SymChainSum = LinComb<RChain, LaurentPoly>;

/// All increasing r-chains of symmetric partitions (`epsilon = 0`).
pub fn enumerate_symmetric_chains(n: usize, r: usize) -> Vec<RChain> {
    let all = enumerate_snc(n, 0);
    let mut chains: Vec<Vec<NcPartition>> = all.iter().map(|p| vec![p.clone()]).collect();
    for _ in 1..r {
        let mut next = Vec::new();
        for c in &chains {
            let last = c.last().unwrap();
            for q in &all {
                if leq(last, q).unwrap() {
                    let mut c2 = c.clone();
                    c2.push(q.clone());
                    next.push(c2);
                }
            }
        }
        chains = next;
    }
    let mut out: Vec<RChain> = chains
        .into_iter()
        .map(|parts| RChain::new(parts).expect("increasing by construction"))
        .collect();
    out.sort();
    out
}

/// The one-boundary chain generator: odd `i` acts on the last `s`
/// coordinates, even `i` on the first `s`.
pub fn generator_gs1_basis(i: usize, s: usize, chain: &RChain) -> SymChainSum {
    let r = chain.r();
    assert!(s >= 1 && s <= r);
    let mut coef = LaurentPoly::one();
    let mut parts = chain.parts().to_vec();
    let range: Vec<usize> = if i % 2 == 1 {
        ((r - s)..r).collect()
    } else {
        (0..s).collect()
    };
    for k in range {
        let image = generator_g1_basis(i, &parts[k]);
        let (p, c) = image.single().expect("single-term image");
        coef = coef.mul(c);
        parts[k] = p.clone();
    }
    SymChainSum::term(
        RChain::new(parts).expect("generator image stays increasing"),
        coef,
    )
}

/// A primed chain: coordinatewise primed symmetric partitions subject to
/// the increase condition (after forgetting primes) and the prime
/// propagation condition between consecutive coordinates.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Debug)]
pub struct PrimedChain {
    pub parts: Vec<PrimedSymNcPartition>,
}

/// Formal sum of primed chains.
pub type PrimedChainSum = LinComb<PrimedChain, LaurentPoly>;

impl PrimedChain {
    pub fn new(parts: Vec<PrimedSymNcPartition>) -> Result<Self, PartitionError> {
        let c = PrimedChain { parts };
        if !c.is_valid() {
            return Err(PartitionError::Crossing);
        }
        Ok(c)
    }

    pub fn n(&self) -> usize {
        self.parts[0].n()
    }

    pub fn r(&self) -> usize {
        self.parts.len()
    }

    /// Coordinatewise validity, the increase of the bases, and the prime
    /// propagation: the dotted symmetric arches of the superposed diagram
    /// form a prefix of the nesting order, outermost first.
    pub fn is_valid(&self) -> bool {
        for p in &self.parts {
            if !p.is_valid() {
                return false;
            }
        }
        for w in self.parts.windows(2) {
            if !leq(&w[0].base, &w[1].base).unwrap_or(false) {
                return false;
            }
        }
        dotted_arches_are_a_prefix(&self.parts)
    }
}

/// Sort key of the symmetric arch of pair `b` at coordinate `j` in the
/// superposed nesting order (outermost first): the linear order of `b`
/// first; within a pair the coordinates nest by the side the unprimed
/// endpoint falls on.
fn nesting_key(b: usize, j: usize, n: usize, r: usize) -> (usize, usize) {
    let tie = if 2 * b < n + 2 { j } else { r + 1 - j };
    (order1_index(b, n), tie)
}

/// Global prime-propagation: the dotted members, over all coordinates, are
/// an outer-closed prefix of the nested symmetric arches.
fn dotted_arches_are_a_prefix(parts: &[PrimedSymNcPartition]) -> bool {
    let n = parts[0].n();
    let r = parts.len();
    let mut arches: Vec<((usize, usize), bool)> = Vec::new();
    for (idx, p) in parts.iter().enumerate() {
        let j = idx + 1;
        for b in e_sym(&p.base) {
            arches.push((nesting_key(b, j, n, r), p.primed.contains(&b)));
        }
    }
    arches.sort();
    let first_undotted = arches.iter().position(|(_, d)| !*d);
    match first_undotted {
        None => true,
        Some(k) => arches[k..].iter().all(|(_, d)| !*d),
    }
}

impl fmt::Display for PrimedChain {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                write!(f, ";")?;
            }
            write!(f, "{}", p)?;
        }
        write!(f, "]")
    }
}

/// Prime propagation between two consecutive coordinates, as the two-chain
/// instance of the prefix condition.
pub fn condition_b(a: &PrimedSymNcPartition, b: &PrimedSymNcPartition) -> bool {
    dotted_arches_are_a_prefix(&[a.clone(), b.clone()])
}

/// All primed r-chains: coordinatewise extension with a final global
/// admissibility filter.
pub fn enumerate_primed_chains(n: usize, r: usize) -> Vec<PrimedChain> {
    let singles = enumerate_primed(n);
    let mut chains: Vec<Vec<PrimedSymNcPartition>> =
        singles.iter().map(|p| vec![p.clone()]).collect();
    for _ in 1..r {
        let mut next = Vec::new();
        for c in &chains {
            let last = c.last().unwrap();
            for q in &singles {
                if leq(&last.base, &q.base).unwrap() && condition_b(last, q) {
                    let mut c2 = c.clone();
                    c2.push(q.clone());
                    next.push(c2);
                }
            }
        }
        chains = next;
    }
    let mut out: Vec<PrimedChain> = chains
        .into_iter()
        .map(|parts| PrimedChain { parts })
        .filter(|c| c.is_valid())
        .collect();
    out.sort();
    out
}

/// The two-boundary chain generator with the parity-split coordinate rule.
pub fn generator_gs2_basis(i: usize, s: usize, chain: &PrimedChain) -> PrimedChainSum {
    let r = chain.r();
    assert!(s >= 1 && s <= r);
    let mut coef = LaurentPoly::one();
    let mut parts = chain.parts.clone();
    let range: Vec<usize> = if i % 2 == 1 {
        ((r - s)..r).collect()
    } else {
        (0..s).collect()
    };
    for k in range {
        let image = generator_g2_basis(i, &parts[k]);
        let (p, c) = image.single().expect("single-term image");
        coef = coef.mul(c);
        parts[k] = p.clone();
    }
    PrimedChainSum::term(
        PrimedChain::new(parts).expect("generator image satisfies the chain conditions"),
        coef,
    )
}

// --- counts ------------------------------------------------------------------

/// The symmetric-diagram count, two ways: by filtering the constrained
/// diagrams for mirror symmetry, and by counting symmetric chains.
pub fn count_b(n: usize, r: usize) -> (BigInt, BigInt) {
    let direct = enumerate_cond_a_diagrams(2 * r * n, r)
        .into_iter()
        .filter(|c| c.is_symmetric())
        .count();
    let chains = enumerate_symmetric_chains(n, r).len();
    (BigInt::from(direct), BigInt::from(chains))
}

// --- chord-diagram side --------------------------------------------------------

/// The decorated chord diagram of a primed chain: the superposition of the
/// coordinates with dots on the arches of primed members.
pub fn primed_chain_chord(chain: &PrimedChain) -> ChordDiagram {
    let base = RChain::new(chain.parts.iter().map(|p| p.base.clone()).collect())
        .expect("bases form a chain");
    let mut c = psi_r(&base);
    let n = chain.n();
    let r = chain.r();
    for (idx, part) in chain.parts.iter().enumerate() {
        let slot = idx + 1;
        for &b in &part.primed {
            // The arch of the pair (b, succ b) at this coordinate's slot.
            let j = part.base.succ(b);
            let jm = if j == 1 { n } else { j - 1 };
            let x = 2 * r * (b - 1) + slot;
            let y = 2 * r * jm - slot + 1;
            let arch = if x < y { (x, y) } else { (y, x) };
            debug_assert!(c.arches.contains(&arch));
            c.dots.push(arch);
        }
    }
    c.dots.sort_unstable();
    c
}

/// Cut a symmetric decorated diagram along the vertical middle line into a
/// module state: arches in the left half survive, crossing arches become
/// wall stubs (dotted ones leftward). Stub parities are positional: a stub
/// attached to bundle `i` is odd on the left wall when `i` is odd, and odd
/// on the right wall when `i` has the parity of `n` (odd counted from that
/// wall).
pub fn cut_to_state(c: &ChordDiagram, n: usize, r: usize) -> HalfDiagram {
    let half = r * n;
    debug_assert_eq!(c.num_points, 2 * half);
    let mut arches = Vec::new();
    let mut right: Vec<(usize, Parity)> = Vec::new();
    let mut left: Vec<(usize, Parity)> = Vec::new();
    for &(x, y) in &c.arches {
        if y <= half {
            arches.push((x, y));
        } else if x > half {
            // Mirror copy; dropped.
        } else {
            let bundle = (x - 1) / r + 1;
            let dotted = c.dots.contains(&(x, y));
            if dotted {
                let flag = if bundle % 2 == 1 {
                    Parity::Odd
                } else {
                    Parity::Even
                };
                left.push((x, flag));
            } else {
                let flag = if bundle % 2 == n % 2 {
                    Parity::Odd
                } else {
                    Parity::Even
                };
                right.push((x, flag));
            }
        }
    }
    HalfDiagram::from_parts(n, r, &arches, &right, &left).expect("cut of a symmetric diagram")
}

/// The state of a plain symmetric partition (no primes), for the
/// one-boundary isomorphism.
pub fn snc_state(pi: &NcPartition) -> HalfDiagram {
    let chain = PrimedChain {
        parts: vec![PrimedSymNcPartition::unprimed(pi.clone())],
    };
    cut_to_state(&primed_chain_chord(&chain), pi.n(), 1)
}

/// The state of a symmetric chain (no primes).
pub fn snc_chain_state(chain: &RChain) -> HalfDiagram {
    let primed = PrimedChain {
        parts: chain
            .parts()
            .iter()
            .map(|p| PrimedSymNcPartition::unprimed(p.clone()))
            .collect(),
    };
    cut_to_state(&primed_chain_chord(&primed), chain.n(), chain.r())
}

/// The state of a primed chain.
pub fn primed_chain_state(chain: &PrimedChain) -> HalfDiagram {
    cut_to_state(&primed_chain_chord(chain), chain.n(), chain.r())
}

/// The reduced symmetric diagram of a symmetric partition: the left half of
/// its chord diagram with right-end points on the cut arches.
pub fn snc_reduced_chord(pi: &NcPartition) -> ChordDiagram {
    snc_state(pi).to_chord()
}

/// Rebuild a primed chain from a module state: mirror the stubs into
/// crossing arches (dotted for left ends), invert the superposition, and
/// read the primes off the dotted arches.
pub fn state_to_primed_chain(
    st: &HalfDiagram,
    n: usize,
    r: usize,
) -> Result<PrimedChain, PartitionError> {
    let c = st.to_chord();
    let total = 2 * r * n;
    let mut arches: Vec<(usize, usize)> = Vec::new();
    let mut dots: Vec<(usize, usize)> = Vec::new();
    for &(x, y) in &c.arches {
        arches.push((x, y));
        arches.push((total + 1 - y, total + 1 - x));
    }
    for &p in &c.right_ends {
        arches.push((p, total + 1 - p));
    }
    for &p in &c.left_ends {
        arches.push((p, total + 1 - p));
        dots.push((p, total + 1 - p));
    }
    let full = ChordDiagram::from_arches(total, arches).map_err(|_| PartitionError::Crossing)?;
    let base = crate::chains::psi_r_inv(&full, r)?;
    let mut parts: Vec<PrimedSymNcPartition> = base
        .parts()
        .iter()
        .map(|p| PrimedSymNcPartition::unprimed(p.clone()))
        .collect();
    for &(x, y) in &dots {
        // Identify the coordinate and the pair's first member.
        let bundle0 = (x - 1) / r;
        let within = (x - 1) % r;
        let (b, slot) = if bundle0.is_multiple_of(2) {
            (bundle0 / 2 + 1, within + 1)
        } else {
            let b0 = (y - 1) / r;
            debug_assert_eq!(b0 % 2, 0);
            (b0 / 2 + 1, (y - 1) % r + 1)
        };
        parts[slot - 1].primed.insert(b);
    }
    PrimedChain::new(parts)
}

/// Rebuild a symmetric partition from its reduced diagram by mirroring the
/// cut arches.
pub fn reduced_chord_to_snc(c: &ChordDiagram) -> Result<NcPartition, PartitionError> {
    if !c.left_ends.is_empty() || !c.dots.is_empty() {
        return Err(PartitionError::NotAPartition);
    }
    let half = c.num_points;
    let mut arches: Vec<(usize, usize)> = Vec::new();
    for &(x, y) in &c.arches {
        arches.push((x, y));
        arches.push((2 * half + 1 - y, 2 * half + 1 - x));
    }
    for &p in &c.right_ends {
        arches.push((p, 2 * half + 1 - p));
    }
    let full = ChordDiagram::from_arches(2 * half, arches).map_err(|_| PartitionError::Crossing)?;
    crate::noncrossing::psi_inv(&full)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::chains::enumerate_chains;
    use crate::noncrossing::{parse_partition, psi};
    use alloc::string::ToString;

    fn p(n: usize, s: &str) -> NcPartition {
        parse_partition(n, s).unwrap()
    }

    #[test]
    fn snc_counts_and_examples() {
        let s41: Vec<String> = enumerate_snc(4, 1).iter().map(|x| x.to_string()).collect();
        assert_eq!(
            s41,
            vec!["1/2/3/4", "1/23/4", "12/34", "1234", "14/2/3", "14/23"]
        );
        assert_eq!(enumerate_snc(5, 0).len(), 10);
        assert_eq!(enumerate_snc(1, 0).len(), 1);
        for n in 1..=8 {
            assert_eq!(BigInt::from(enumerate_snc(n, 0).len()), count_snc(n));
            assert_eq!(BigInt::from(enumerate_snc(n, 1).len()), count_snc(n));
        }
    }

    #[test]
    fn snc_recurrences() {
        // A(2m) = 2 A(2m-1); A(2m+1) = 2 A(2m) - C(m).
        let catalan = |m: usize| {
            let mut num = BigInt::one();
            let mut den = BigInt::one();
            for k in 0..m {
                num *= BigInt::from(2 * m - k);
                den *= BigInt::from(k + 1);
            }
            num / den / BigInt::from(m + 1)
        };
        for m in 1..=5usize {
            assert_eq!(count_snc(2 * m), BigInt::from(2) * count_snc(2 * m - 1));
            assert_eq!(
                count_snc(2 * m + 1),
                BigInt::from(2) * count_snc(2 * m) - catalan(m)
            );
        }
    }

    #[test]
    fn rho_maps_between_epsilon_classes() {
        // The inverse endomorphism carries the epsilon = 0 family onto the
        // epsilon = 1 family.
        for n in 2..=6usize {
            let s0 = enumerate_snc(n, 0);
            let s1: BTreeSet<NcPartition> = enumerate_snc(n, 1).into_iter().collect();
            let images: BTreeSet<NcPartition> = s0.iter().map(kreweras_inv).collect();
            assert_eq!(images, s1, "n = {}", n);
        }
    }

    #[test]
    fn psi_of_symmetric_is_symmetric() {
        for pi in enumerate_snc(5, 0) {
            assert!(psi(&pi).is_symmetric());
        }
    }

    #[test]
    fn s_sym_worked_example() {
        assert_eq!(s_sym(&p(5, "1/2/34/5")), vec![1, 4, 3]);
        assert_eq!(e_sym(&p(5, "1/2/34/5")), vec![1, 3, 4]);
    }

    #[test]
    fn primed_counts() {
        for n in 1..=8usize {
            assert_eq!(enumerate_primed(n).len(), 1usize << n);
        }
        // The eight listed members at n = 3.
        let listed: Vec<String> = enumerate_primed(3).iter().map(|x| x.to_string()).collect();
        for want in [
            "1/23", "1'/23", "1'/23'", "1'/2'3'", "1/2/3", "1'/2/3", "123", "12'3",
        ] {
            assert!(listed.contains(&String::from(want)), "missing {}", want);
        }
    }

    #[test]
    fn four_primed_variants() {
        let base = p(5, "1/2/34/5");
        let variants: Vec<PrimedSymNcPartition> = enumerate_primed(5)
            .into_iter()
            .filter(|x| x.base == base)
            .collect();
        assert_eq!(variants.len(), 4);
    }

    #[test]
    fn g1_on_singletons() {
        // The third case merges the seam blocks with coefficient one.
        let pi = NcPartition::singletons(4);
        let out = generator_g1_basis(1, &pi);
        let (q, c) = out.single().unwrap();
        assert_eq!(c, &LaurentPoly::one());
        assert_eq!(q, &p(4, "124/3"));
    }

    #[test]
    fn gn_merges_middle_blocks() {
        let out = generator_g1_basis(5, &NcPartition::singletons(5));
        let (q, c) = out.single().unwrap();
        assert_eq!(c, &LaurentPoly::one());
        assert_eq!(q, &p(5, "1/2/34/5"));
    }

    #[test]
    fn g1_weight_cases() {
        // Both seams internal: a single tau.
        let pi = p(4, "1234");
        let out = generator_g1_basis(1, &pi);
        assert_eq!(out, NcSum::term(pi, LaurentPoly::tau()));
        // Mirror-paired seams: the parity weight.
        let pi = p(2, "1/2");
        let out = generator_g1_basis(1, &pi);
        assert_eq!(out, NcSum::term(p(2, "12"), LaurentPoly::tau_p(1, 2)));
    }

    #[test]
    fn g_symmetry_is_preserved() {
        for n in 2..=5usize {
            for pi in enumerate_snc(n, 0) {
                for i in 1..=n {
                    let out = generator_g1_basis(i, &pi);
                    for (q, _) in out.iter() {
                        assert!(is_symmetric(q, 0), "G_{} on {} gave {}", i, pi, q);
                    }
                }
            }
        }
    }

    #[test]
    fn g0_worked_examples() {
        // Splitting case.
        let pi = PrimedSymNcPartition::unprimed(p(7, "13456/2/7"));
        let out = generator_g2_basis(0, &pi);
        let (q, c) = out.single().unwrap();
        assert_eq!(c, &LaurentPoly::one());
        assert_eq!(q.to_string(), "1'/2/3456'/7");
        // Weight and theta cases at the singleton seam.
        let pi = PrimedSymNcPartition::unprimed(p(3, "1/2/3"));
        let out = generator_g2_basis(0, &pi);
        let (q, c) = out.single().unwrap();
        assert_eq!(c, &LaurentPoly::theta());
        assert_eq!(q.to_string(), "1'/2/3");
        let out2 = generator_g2_basis(0, q);
        let (q2, c2) = out2.single().unwrap();
        assert_eq!(c2, &LaurentPoly::minus_x_plus_xinv(crate::rings::VAR_Q0));
        assert_eq!(q2, q);
    }

    #[test]
    fn g2_outputs_are_admissible() {
        for n in 2..=5usize {
            for pi in enumerate_primed(n) {
                for i in 0..=n {
                    let out = generator_g2_basis(i, &pi);
                    for (q, _) in out.iter() {
                        assert!(q.is_valid(), "G_{} on {} gave {}", i, pi, q);
                    }
                }
            }
        }
    }

    #[test]
    fn primed_chain_example() {
        // Seven admissible primed 3-chains over the all-singleton base.
        let base = p(2, "1/2");
        let chains: Vec<PrimedChain> = enumerate_primed_chains(2, 3)
            .into_iter()
            .filter(|c| c.parts.iter().all(|x| x.base == base))
            .collect();
        assert_eq!(chains.len(), 7);
        // The rejected marking.
        let full = PrimedSymNcPartition::new(
            base.clone(),
            [1usize, 2].into_iter().collect(),
        )
        .unwrap();
        let one = PrimedSymNcPartition::new(base.clone(), [1usize].into_iter().collect()).unwrap();
        assert!(PrimedChain::new(vec![full, one.clone(), one]).is_err());
    }

    #[test]
    fn count_b_examples() {
        assert_eq!(count_b(2, 2).0, BigInt::from(3));
        assert_eq!(count_b(3, 2).0, BigInt::from(6));
        assert_eq!(count_b(4, 2).0, BigInt::from(17));
        for (n, r) in [(2, 2), (3, 2), (2, 3), (4, 1), (5, 1), (4, 2)] {
            let (direct, chains) = count_b(n, r);
            assert_eq!(direct, chains, "B at ({}, {})", n, r);
        }
        // r = 1 reduces to the symmetric partition count.
        for n in 1..=6 {
            assert_eq!(count_b(n, 1).0, count_snc(n));
        }
    }

    #[test]
    fn primed_chain_count_matches_dotted_diagrams() {
        // The primed chains are counted by the dotted symmetric diagrams:
        // each symmetric diagram contributes one plus its crossing count.
        use crate::diagram::count_vk;
        for (n, r) in [(2, 1), (3, 1), (2, 2), (3, 2)] {
            let dotted: usize = enumerate_symmetric_chains(n, r)
                .iter()
                .map(|c| 1 + psi_r(c).crossing_arches().len())
                .sum();
            assert_eq!(enumerate_primed_chains(n, r).len(), dotted);
            let (v, _) = count_vk(n, r);
            assert_eq!(BigInt::from(dotted), v);
        }
    }

    #[test]
    fn reduced_chord_round_trip() {
        for pi in enumerate_snc(5, 0) {
            let red = snc_reduced_chord(&pi);
            assert_eq!(reduced_chord_to_snc(&red).unwrap(), pi);
        }
    }

    #[test]
    fn state_round_trip() {
        for (n, r) in [(3, 1), (4, 1), (2, 2), (3, 2)] {
            for chain in enumerate_primed_chains(n, r) {
                let st = primed_chain_state(&chain);
                assert_eq!(state_to_primed_chain(&st, n, r).unwrap(), chain);
            }
        }
    }

    #[test]
    fn symmetric_chains_superpose_symmetrically() {
        for c in enumerate_symmetric_chains(3, 2) {
            assert!(psi_r(&c).is_symmetric());
        }
        // And the enumeration agrees with filtering all chains.
        let all: Vec<RChain> = enumerate_chains(3, 2)
            .into_iter()
            .filter(|c| c.parts().iter().all(|p| is_symmetric(p, 0)))
            .collect();
        assert_eq!(all, enumerate_symmetric_chains(3, 2));
    }
}
