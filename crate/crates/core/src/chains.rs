//! Increasing r-chains of non-crossing partitions, the bijections to r-Dyck
//! paths and constrained chord diagrams, cover-exclusive Dyck tilings, the
//! extended Kreweras endomorphism, and the Fuss-Catalan generators.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::chords::ChordDiagram;
use crate::lincomb::LinComb;
use crate::noncrossing::{
    enumerate_ncp, kreweras, kreweras_inv, leq, f_op, psi, NcPartition, PartitionError,
};
use crate::paths::{RDyckPath, Step};
use crate::rings::LaurentPoly;

/// An increasing r-chain `pi_1 <= pi_2 <= ... <= pi_r` in the lattice of
/// non-crossing partitions of `[1, n]`.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Debug, Hash)]
pub struct RChain {
    parts: Vec<NcPartition>,
}

/// Formal sum of chains with Laurent-polynomial coefficients.
pub type ChainSum = LinComb<RChain, LaurentPoly>;

impl RChain {
    pub fn new(parts: Vec<NcPartition>) -> Result<Self, PartitionError> {
        assert!(!parts.is_empty());
        for w in parts.windows(2) {
            if !leq(&w[0], &w[1])? {
                return Err(PartitionError::Crossing);
            }
        }
        Ok(RChain { parts })
    }

    pub fn n(&self) -> usize {
        self.parts[0].n()
    }

    pub fn r(&self) -> usize {
        self.parts.len()
    }

    pub fn parts(&self) -> &[NcPartition] {
        &self.parts
    }
}

impl fmt::Display for RChain {
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

/// All increasing r-chains over `[1, n]`.
pub fn enumerate_chains(n: usize, r: usize) -> Vec<RChain> {
    let all = enumerate_ncp(n);
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
    let mut out: Vec<RChain> = chains.into_iter().map(|parts| RChain { parts }).collect();
    out.sort();
    out
}

/// Extended Kreweras endomorphism on chains: reverse the coordinates and
/// apply the endomorphism to each.
pub fn extended_kreweras(chain: &RChain) -> RChain {
    let parts: Vec<NcPartition> = chain.parts.iter().rev().map(kreweras).collect();
    RChain::new(parts).expect("cover reversal keeps the chain increasing")
}

/// Inverse extended Kreweras endomorphism.
pub fn extended_kreweras_inv(chain: &RChain) -> RChain {
    let parts: Vec<NcPartition> = chain.parts.iter().rev().map(kreweras_inv).collect();
    RChain::new(parts).expect("cover reversal keeps the chain increasing")
}

// --- kappa: chain -> r-Dyck path ------------------------------------------

fn word_insert(host: &[Step], inserted: &[Step], after: usize) -> Vec<Step> {
    let mut out = Vec::with_capacity(host.len() + inserted.len());
    out.extend_from_slice(&host[..after]);
    out.extend_from_slice(inserted);
    out.extend_from_slice(&host[after..]);
    out
}

fn up_positions(word: &[Step]) -> Vec<usize> {
    word.iter()
        .enumerate()
        .filter(|(_, s)| **s == Step::U)
        .map(|(i, _)| i + 1)
        .collect()
}

fn word_from_ups(len: usize, ups: &[usize]) -> Vec<Step> {
    let mut w = vec![Step::R; len];
    for &p in ups {
        w[p - 1] = Step::U;
    }
    w
}

/// Shift every U except the first one position to the left.
fn shift_ups_left(word: &[Step]) -> Vec<Step> {
    let ups = up_positions(word);
    assert_eq!(ups.first(), Some(&1));
    let mut new_ups = vec![1usize];
    for &p in &ups[1..] {
        assert!(p >= 3, "shift would collide with the leading U");
        new_ups.push(p - 1);
    }
    word_from_ups(word.len(), &new_ups)
}

/// Shift every U except the first one position to the right; fails if that
/// does not give back a word (collision with R-count is impossible, but the
/// caller still validates the result as a path).
fn shift_ups_right(word: &[Step]) -> Option<Vec<Step>> {
    let ups = up_positions(word);
    if ups.first() != Some(&1) {
        return None;
    }
    let mut new_ups = vec![1usize];
    for &p in &ups[1..] {
        if p + 1 > word.len() {
            return None;
        }
        new_ups.push(p + 1);
    }
    let mut seen = vec![false; word.len() + 1];
    for &p in &new_ups {
        if seen[p] {
            return None;
        }
        seen[p] = true;
    }
    Some(word_from_ups(word.len(), &new_ups))
}

/// The level-one word of a block with `l + 1` elements:
/// `U R^{r-1} (U R^r)^l R`.
fn base_block_word(r: usize, block_len: usize) -> Vec<Step> {
    let l = block_len - 1;
    let mut w = Vec::with_capacity((r + 1) * block_len);
    w.push(Step::U);
    w.extend(core::iter::repeat_n(Step::R, r - 1));
    for _ in 0..l {
        w.push(Step::U);
        w.extend(core::iter::repeat_n(Step::R, r));
    }
    w.push(Step::R);
    w
}

/// Merge the per-block words of the given blocks (sorted by minimum) by
/// inserting each next word after `a(r+1)` letters of the accumulated word,
/// where `a` counts accumulated elements smaller than the inserted minimum.
fn insert_merge(r: usize, items: &[(Vec<usize>, Vec<Step>)]) -> (Vec<usize>, Vec<Step>) {
    let mut acc_elems = items[0].0.clone();
    let mut acc_word = items[0].1.clone();
    for (elems, word) in &items[1..] {
        let a = acc_elems.iter().filter(|&&q| q < elems[0]).count();
        acc_word = word_insert(&acc_word, word, a * (r + 1));
        acc_elems.extend(elems.iter().copied());
        acc_elems.sort_unstable();
    }
    (acc_elems, acc_word)
}

/// The bijection from increasing r-chains to r-Dyck paths.
///
/// Level 1 assigns each block its base word; at each later level the merged
/// blocks' words are combined by insertion and the non-leading U steps move
/// one position left; the final merge across the top-level blocks inserts
/// without the shift.
pub fn kappa(chain: &RChain) -> RDyckPath {
    let r = chain.r();
    let n = chain.n();
    // words[b] = (elements, word) for each current block b.
    let mut words: Vec<(Vec<usize>, Vec<Step>)> = chain.parts[0]
        .blocks()
        .iter()
        .map(|b| (b.clone(), base_block_word(r, b.len())))
        .collect();
    for level in 1..r {
        let target = &chain.parts[level];
        let mut next: Vec<(Vec<usize>, Vec<Step>)> = Vec::new();
        for block in target.blocks() {
            let mut members: Vec<(Vec<usize>, Vec<Step>)> = words
                .iter()
                .filter(|(elems, _)| block.contains(&elems[0]))
                .cloned()
                .collect();
            members.sort_by(|a, b| a.0[0].cmp(&b.0[0]));
            let (elems, merged) = insert_merge(r, &members);
            debug_assert_eq!(&elems, block);
            next.push((elems, shift_ups_left(&merged)));
        }
        next.sort_by(|a, b| a.0[0].cmp(&b.0[0]));
        words = next;
    }
    // Final merge across the blocks of the top coordinate, without a shift.
    let (elems, word) = insert_merge(r, &words);
    debug_assert_eq!(elems, (1..=n).collect::<Vec<usize>>());
    RDyckPath::new(r, word).expect("kappa produces a valid path")
}

/// Inverse of `kappa`.
///
/// Parses the word into insertion factors (each factor is a valid r-Dyck
/// word occupying a non-crossing set of `(r+1)`-letter chunks), recovers the
/// top partition from the chunk sets, un-shifts each factor and recurses.
/// Candidate parses are verified against the forward map; exactly one chain
/// survives.
pub fn kappa_inv(p: &RDyckPath) -> Result<RChain, PartitionError> {
    let r = p.r();
    let n = p.size();
    let mut found: Vec<RChain> = Vec::new();
    let elements: Vec<usize> = (1..=n).collect();
    for parts in parse_merge(p.word(), r, &elements, r) {
        let chain = RChain { parts };
        if &kappa(&chain) == p {
            found.push(chain);
        }
    }
    found.sort();
    found.dedup();
    match found.len() {
        1 => Ok(found.into_iter().next().unwrap()),
        0 => Err(PartitionError::Parse(alloc::string::String::from(
            "no chain maps to this path",
        ))),
        _ => unreachable!("kappa is injective"),
    }
}

/// All ways to read `word` as an insertion-merge of factor words over the
/// given global elements, then recursively parse each factor at the level
/// below. Returns candidate partition-sequences `(pi_1, ..., pi_level)`
/// restricted to `elements`.
fn parse_merge(
    word: &[Step],
    r: usize,
    elements: &[usize],
    level: usize,
) -> Vec<Vec<NcPartition>> {
    let m = elements.len();
    let chunk = r + 1;
    debug_assert_eq!(word.len(), m * chunk);

    // Candidate chunk partitions: non-crossing partitions of the m chunks
    // whose concatenated words are valid r-Dyck paths.
    let mut results = Vec::new();
    for cp in enumerate_ncp(m) {
        let mut factor_words: Vec<Vec<Step>> = Vec::new();
        let mut ok = true;
        for b in cp.blocks() {
            let mut w = Vec::with_capacity(b.len() * chunk);
            for &c in b {
                w.extend_from_slice(&word[(c - 1) * chunk..c * chunk]);
            }
            if RDyckPath::new(r, w.clone()).is_err() {
                ok = false;
                break;
            }
            factor_words.push(w);
        }
        if !ok {
            continue;
        }
        // This chunk partition is the current-level partition (restricted).
        let here: Vec<Vec<usize>> = cp
            .blocks()
            .iter()
            .map(|b| b.iter().map(|&c| elements[c - 1]).collect())
            .collect();

        // For the final (unshifted) merge the factors are level-r block
        // words; for an internal call the factors ARE the block words.
        // Recurse into each factor: un-shift, then parse one level down.
        if level == 1 {
            // Factors must be level-one base words.
            let all_base = cp
                .blocks()
                .iter()
                .zip(factor_words.iter())
                .all(|(b, w)| w == &base_block_word(r, b.len()));
            if all_base {
                let pi = partition_from_blocks(elements, &here);
                results.push(vec![pi]);
            }
            continue;
        }

        let mut per_factor: Vec<Vec<Vec<NcPartition>>> = Vec::new();
        let mut dead = false;
        for (b, w) in cp.blocks().iter().zip(factor_words.iter()) {
            let sub_elements: Vec<usize> = b.iter().map(|&c| elements[c - 1]).collect();
            // Each factor of the final merge is a level-`level` block word.
            let sub = parse_block_word(w, r, &sub_elements, level);
            if sub.is_empty() {
                dead = true;
                break;
            }
            per_factor.push(sub);
        }
        if dead {
            continue;
        }
        // Combine the factors' candidate sub-chains (cartesian product,
        // merging partitions over disjoint element sets).
        let pi_top = partition_from_blocks(elements, &here);
        let mut combos: Vec<Vec<NcPartition>> = vec![Vec::new()];
        let lower_levels = level - 1;
        for sub in &per_factor {
            let mut next = Vec::new();
            for acc in &combos {
                for cand in sub {
                    debug_assert_eq!(cand.len(), lower_levels);
                    let mut merged = acc.clone();
                    if merged.is_empty() {
                        merged = cand.clone();
                    } else {
                        for (i, p) in cand.iter().enumerate() {
                            merged[i] = union_partitions(&merged[i], p);
                        }
                    }
                    next.push(merged);
                }
            }
            combos = next;
        }
        for mut lower in combos {
            // Elements not named by any factor's lower partitions: none, the
            // factors cover all elements.
            lower.push(pi_top.clone());
            results.push(lower);
        }
    }
    results
}

/// Parse a level-`level` block word: un-shift it, then read the result as an
/// insertion-merge of level-`level-1` block words.
fn parse_block_word(
    word: &[Step],
    r: usize,
    elements: &[usize],
    level: usize,
) -> Vec<Vec<NcPartition>> {
    if level == 1 {
        if word == base_block_word(r, elements.len()).as_slice() {
            let n = elements.iter().copied().max().unwrap();
            let _ = n;
            return vec![Vec::new()];
        }
        return Vec::new();
    }
    let unshifted = match shift_ups_right(word) {
        Some(w) if RDyckPath::new(r, w.clone()).is_ok() => w,
        _ => return Vec::new(),
    };
    // The unshifted word is a merge of level-(level-1) block words.
    let m = elements.len();
    let chunk = r + 1;
    let mut results = Vec::new();
    for cp in enumerate_ncp(m) {
        let mut factor_words: Vec<Vec<Step>> = Vec::new();
        let mut ok = true;
        for b in cp.blocks() {
            let mut w = Vec::with_capacity(b.len() * chunk);
            for &c in b {
                w.extend_from_slice(&unshifted[(c - 1) * chunk..c * chunk]);
            }
            if RDyckPath::new(r, w.clone()).is_err() {
                ok = false;
                break;
            }
            factor_words.push(w);
        }
        if !ok {
            continue;
        }
        let here: Vec<Vec<usize>> = cp
            .blocks()
            .iter()
            .map(|b| b.iter().map(|&c| elements[c - 1]).collect())
            .collect();
        let mut per_factor: Vec<Vec<Vec<NcPartition>>> = Vec::new();
        let mut dead = false;
        for (b, w) in cp.blocks().iter().zip(factor_words.iter()) {
            let sub_elements: Vec<usize> = b.iter().map(|&c| elements[c - 1]).collect();
            let sub = parse_block_word(w, r, &sub_elements, level - 1);
            if sub.is_empty() {
                dead = true;
                break;
            }
            per_factor.push(sub);
        }
        if dead {
            continue;
        }
        let pi_here = partition_from_blocks(elements, &here);
        let mut combos: Vec<Vec<NcPartition>> = vec![Vec::new()];
        for sub in &per_factor {
            let mut next = Vec::new();
            for acc in &combos {
                for cand in sub {
                    let mut merged = acc.clone();
                    if merged.is_empty() {
                        merged = cand.clone();
                    } else {
                        for (i, p) in cand.iter().enumerate() {
                            merged[i] = union_partitions(&merged[i], p);
                        }
                    }
                    next.push(merged);
                }
            }
            combos = next;
        }
        for mut lower in combos {
            lower.push(pi_here.clone());
            results.push(lower);
        }
    }
    results
}

/// Build a partial partition on the named elements only. Elements outside
/// are added as singletons at combination time; here we keep a partition on
/// the ambient `[1, max]` with foreign elements as singletons so unions are
/// easy.
fn partition_from_blocks(elements: &[usize], blocks: &[Vec<usize>]) -> NcPartition {
    let n = *elements.iter().max().unwrap();
    let mut all: Vec<Vec<usize>> = blocks.to_vec();
    let named: alloc::collections::BTreeSet<usize> = elements.iter().copied().collect();
    for x in 1..=n {
        if !named.contains(&x) {
            all.push(vec![x]);
        }
    }
    NcPartition::new(n, all).expect("factor blocks are non-crossing")
}

/// Union of two partitions on possibly different ambient sizes whose
/// non-singleton blocks are disjoint.
fn union_partitions(a: &NcPartition, b: &NcPartition) -> NcPartition {
    let n = a.n().max(b.n());
    let mut blocks: Vec<Vec<usize>> = a
        .blocks()
        .iter()
        .filter(|bl| bl.len() > 1)
        .cloned()
        .collect();
    let mut used: alloc::collections::BTreeSet<usize> =
        blocks.iter().flatten().copied().collect();
    for bl in b.blocks().iter().filter(|bl| bl.len() > 1) {
        blocks.push(bl.clone());
        used.extend(bl.iter().copied());
    }
    for x in 1..=n {
        if !used.contains(&x) {
            blocks.push(vec![x]);
        }
    }
    NcPartition::new(n, blocks).expect("disjoint unions stay non-crossing")
}

// --- psi^(r) and phi -------------------------------------------------------

/// Position of the `slot`-th point from left in the unprimed bundle `i`.
fn unprimed_slot(r: usize, i: usize, slot: usize) -> usize {
    2 * r * (i - 1) + slot
}

/// Position of the `slot`-th point from right in the primed bundle `j'`.
fn primed_slot(r: usize, j: usize, slot: usize) -> usize {
    2 * r * j - slot + 1
}

/// Superposition of per-coordinate chord diagrams: the coordinate placed at
/// `slot` occupies the slot-th point from the left in unprimed bundles and
/// from the right in primed bundles.
fn superpose(n: usize, r: usize, layers: &[(usize, ChordDiagram)]) -> ChordDiagram {
    let mut arches = Vec::with_capacity(r * n);
    for (slot, c) in layers {
        debug_assert_eq!(c.num_points, 2 * n);
        for &(a, b) in &c.arches {
            // Odd position = unprimed label, even = primed.
            let (i, j) = if a % 2 == 1 {
                (a.div_ceil(2), b / 2)
            } else {
                (b.div_ceil(2), a / 2)
            };
            let x = unprimed_slot(r, i, *slot);
            let y = primed_slot(r, j, *slot);
            arches.push(if x < y { (x, y) } else { (y, x) });
        }
    }
    ChordDiagram::from_arches(2 * r * n, arches).expect("superposition of a chain is planar")
}

/// The bijection from chains to constrained chord diagrams: coordinate `s`
/// of the chain contributes the image of `psi` at slot `s`.
pub fn psi_r(chain: &RChain) -> ChordDiagram {
    let n = chain.n();
    let r = chain.r();
    let layers: Vec<(usize, ChordDiagram)> = chain
        .parts()
        .iter()
        .enumerate()
        .map(|(k, p)| (k + 1, psi(p)))
        .collect();
    superpose(n, r, &layers)
}

/// Inverse of `psi_r`.
pub fn psi_r_inv(c: &ChordDiagram, r: usize) -> Result<RChain, PartitionError> {
    if !c.num_points.is_multiple_of(2 * r) {
        return Err(PartitionError::NotAPartition);
    }
    let n = c.num_points / (2 * r);
    let mut layers: Vec<Vec<(usize, usize)>> = vec![Vec::new(); r + 1];
    for &(a, b) in &c.arches {
        let ((la, pa), sa) = bundle_of(r, a);
        let ((lb, pb), sb) = bundle_of(r, b);
        if pa == pb || sa != sb {
            // Ruled out by the endpoint congruence on valid inputs.
            return Err(PartitionError::Crossing);
        }
        let (un, pr) = if pa { (lb, la) } else { (la, lb) };
        let arch = (2 * un - 1, 2 * pr);
        let arch = if arch.0 < arch.1 {
            arch
        } else {
            (arch.1, arch.0)
        };
        layers[sa].push(arch);
    }
    let mut parts = Vec::with_capacity(r);
    for s in 1..=r {
        let arches = core::mem::take(&mut layers[s]);
        if arches.len() != n {
            return Err(PartitionError::NotAPartition);
        }
        let cd = ChordDiagram::from_arches(2 * n, arches).map_err(|_| PartitionError::Crossing)?;
        parts.push(crate::noncrossing::psi_inv(&cd)?);
    }
    RChain::new(parts)
}

/// `(bundle index (1-based), primed?)` and the slot within the bundle:
/// unprimed slots count from the left, primed slots from the right.
fn bundle_of(r: usize, pos: usize) -> ((usize, bool), usize) {
    let bundle0 = (pos - 1) / r; // 0-based among 2n bundles
    let label = bundle0 / 2 + 1;
    let primed = bundle0 % 2 == 1;
    let within = (pos - 1) % r; // 0-based from the left
    let slot = if primed { r - within } else { within + 1 };
    ((label, primed), slot)
}

/// The second bijection: the coordinate `s` contributes the chord diagram of
/// the level-one bijection applied to it, placed at slot `r - s + 1`.
///
/// The level-one map sends a partition to the diagram whose word is the
/// image of `kappa` at `r = 1`; equivalently `psi` composed with the
/// Kreweras endomorphism.
pub fn phi(chain: &RChain) -> ChordDiagram {
    let n = chain.n();
    let r = chain.r();
    let layers: Vec<(usize, ChordDiagram)> = chain
        .parts()
        .iter()
        .enumerate()
        .map(|(k, p)| (r - k, psi(&kreweras(p))))
        .collect();
    superpose(n, r, &layers)
}

// --- cover-exclusive Dyck tilings ------------------------------------------

/// A cover-exclusive Dyck tiling above the lowest path `(U^r R^r)^n`,
/// recorded as the list of tile anchors `(down step index, up step index)`
/// in insertion order, together with the resulting top-path height profile.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Debug)]
pub struct CoverExclusiveTiling {
    pub n: usize,
    pub r: usize,
    /// Anchors `(down step index, up step index)` into the lowest path.
    pub tiles: Vec<(usize, usize)>,
    heights: Vec<i64>,
}

/// Heights of `(U^r R^r)^n` at integer points `0..=2rn`.
fn lambda0_heights(n: usize, r: usize) -> Vec<i64> {
    let mut h = Vec::with_capacity(2 * r * n + 1);
    h.push(0);
    for _ in 0..n {
        for _ in 0..r {
            h.push(h.last().unwrap() + 1);
        }
        for _ in 0..r {
            h.push(h.last().unwrap() - 1);
        }
    }
    h
}

/// Word position (1-based) of the `d`-th down step of `(U^r R^r)^n`.
fn down_step_position(r: usize, d: usize) -> usize {
    let block = (d - 1) / r; // 0-based
    let within = (d - 1) % r;
    2 * r * block + r + within + 1
}

/// Word position (1-based) of the `u`-th up step of `(U^r R^r)^n`.
fn up_step_position(r: usize, u: usize) -> usize {
    let block = (u - 1) / r;
    let within = (u - 1) % r;
    2 * r * block + within + 1
}

/// Build the cover-exclusive Dyck tiling of a chain: coordinates are
/// processed from the top one down, blocks in order of increasing maximum,
/// and each consecutive block pair `(q_s, q_{s+1})` at level `i` anchors a
/// tile between the `r(q_s - 1) + r - i + 1`-th down step and the
/// `r(q_{s+1} - 1) + i`-th up step.
pub fn build_tiling(chain: &RChain) -> CoverExclusiveTiling {
    let n = chain.n();
    let r = chain.r();
    let lambda0 = lambda0_heights(n, r);
    let mut h = lambda0.clone();
    let mut tiles = Vec::new();
    for (idx, part) in chain.parts().iter().enumerate().rev() {
        let level = idx + 1;
        let mut blocks: Vec<&Vec<usize>> = part.blocks().iter().collect();
        blocks.sort_by_key(|b| *b.last().unwrap());
        for block in blocks {
            for w in block.windows(2) {
                let d = r * (w[0] - 1) + r - level + 1;
                let u = r * (w[1] - 1) + level;
                place_tile(&mut h, &lambda0, r, d, u);
                tiles.push((d, u));
            }
        }
    }
    CoverExclusiveTiling {
        n,
        r,
        tiles,
        heights: h,
    }
}

/// Ride a tile on the current profile between the diagonal rays of the
/// anchor steps and raise the covered columns by two.
///
/// The end diamonds of the ribbon are the furthest-southeast free cells on
/// the rays through the anchor steps: the profile-height-minus-ray gap is
/// monotone along a ray, so the resting cell is the largest `k` at which
/// the profile meets the ray.
fn place_tile(h: &mut [i64], lambda0: &[i64], r: usize, d: usize, u: usize) {
    let len = h.len() as i64 - 1;
    // Down step d occupies x in [pd-1, pd]; its ray passes (pd + k, y0-1-k).
    let pd = down_step_position(r, d) as i64;
    let y0 = lambda0[pd as usize - 1];
    let mut k = len - pd;
    let a = loop {
        assert!(pd + k >= 0, "tile ray ran off the left edge");
        let x = (pd + k) as usize;
        if h[x] <= y0 - 1 - k {
            assert_eq!(h[x], y0 - 1 - k, "profile crosses the anchor ray");
            break x;
        }
        k -= 1;
    };
    // Up step u occupies x in [pu-1, pu]; its ray passes (pu-1-k, y1-k).
    let pu = up_step_position(r, u) as i64;
    let y1 = lambda0[pu as usize - 1];
    let mut k = pu - 1;
    let b = loop {
        assert!(pu - 1 - k <= len, "tile ray ran off the right edge");
        let x = (pu - 1 - k) as usize;
        if h[x] <= y1 - k {
            assert_eq!(h[x], y1 - k, "profile crosses the anchor ray");
            break x;
        }
        k -= 1;
    };
    assert!(a <= b, "tile anchors out of order");
    for x in a..=b {
        h[x] += 2;
    }
    debug_assert!(h.windows(2).all(|w| (w[0] - w[1]).abs() == 1));
    debug_assert!(h.iter().zip(lambda0.iter()).all(|(a, b)| a >= b));
}

/// The top Dyck path of a tiling, as a word.
pub fn tiling_top_path(t: &CoverExclusiveTiling) -> Vec<Step> {
    t.heights
        .windows(2)
        .map(|w| if w[1] > w[0] { Step::U } else { Step::R })
        .collect()
}

// --- Fuss-Catalan generators -----------------------------------------------

/// The level-one merge on the last `s` coordinates of a chain.
fn f1_s(s: usize, chain: &RChain) -> ChainSum {
    let r = chain.r();
    assert!(s >= 1 && s <= r);
    let mut coef = LaurentPoly::one();
    let mut parts = chain.parts().to_vec();
    for part in parts.iter_mut().skip(r - s) {
        let image = f_op(1, part);
        let (p, c) = image.single().expect("f acts by a single term");
        coef = coef.mul(c);
        *part = p.clone();
    }
    ChainSum::term(
        RChain::new(parts).expect("merging a suffix keeps the chain increasing"),
        coef,
    )
}

/// The generator `F_i^(s)`, `1 <= i <= 2n-1`, `1 <= s <= r`, on a basis
/// chain: the suffix merge conjugated by the extended Kreweras endomorphism.
pub fn generator_fs_basis(i: usize, s: usize, chain: &RChain) -> ChainSum {
    let n = chain.n();
    assert!(i >= 1 && i < 2 * n, "generator index out of range");
    let mut x = chain.clone();
    for _ in 0..(i - 1) {
        x = extended_kreweras_inv(&x);
    }
    let merged = f1_s(s, &x);
    merged.map_basis(|c| {
        let mut y = c.clone();
        for _ in 0..(i - 1) {
            y = extended_kreweras(&y);
        }
        ChainSum::basis(y)
    })
}

/// `F_i^(s)` extended linearly.
pub fn generator_fs(i: usize, s: usize, x: &ChainSum) -> ChainSum {
    x.map_basis(|c| generator_fs_basis(i, s, c))
}
