//! Chord diagrams: planar perfect matchings on labeled boundary points,
//! the constrained family satisfying the endpoint congruence, generalized
//! (r+1)-point diagrams, their rotations, and conversions to and from paths.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::paths::{RDyckPath, Step};

/// A chord diagram on `2m` labeled points: a set of planar arches, plus
/// optional decorations (right-end points, left-end points, dots on arches)
/// used by the boundary machinery. Every point lies in exactly one arch or
/// carries exactly one end decoration.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Debug, Hash)]
pub struct ChordDiagram {
    pub num_points: usize,
    /// Arches `(i, j)` with `1 <= i < j <= num_points`, sorted by `i`.
    pub arches: Vec<(usize, usize)>,
    /// Points attached to the right wall, ascending.
    pub right_ends: Vec<usize>,
    /// Points attached to the left wall, ascending.
    pub left_ends: Vec<usize>,
    /// Dotted arches (must be members of `arches`).
    pub dots: Vec<(usize, usize)>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ChordError {
    PointCoverage,
    Crossing,
    BadArch,
    DotNotAnArch,
}

impl fmt::Display for ChordError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ChordError::PointCoverage => write!(f, "every point must be used exactly once"),
            ChordError::Crossing => write!(f, "arches cross"),
            ChordError::BadArch => write!(f, "arch endpoints out of range or not increasing"),
            ChordError::DotNotAnArch => write!(f, "dotted pair is not an arch"),
        }
    }
}

impl ChordDiagram {
    /// An undecorated diagram from a set of arches.
    pub fn from_arches(num_points: usize, mut arches: Vec<(usize, usize)>) -> Result<Self, ChordError> {
        arches.sort_unstable();
        let d = ChordDiagram {
            num_points,
            arches,
            right_ends: Vec::new(),
            left_ends: Vec::new(),
            dots: Vec::new(),
        };
        d.validate()?;
        Ok(d)
    }

    pub fn validate(&self) -> Result<(), ChordError> {
        let mut used = vec![0usize; self.num_points + 1];
        for &(i, j) in &self.arches {
            if i == 0 || j == 0 || i >= j || j > self.num_points {
                return Err(ChordError::BadArch);
            }
            used[i] += 1;
            used[j] += 1;
        }
        for &p in self.right_ends.iter().chain(self.left_ends.iter()) {
            if p == 0 || p > self.num_points {
                return Err(ChordError::BadArch);
            }
            used[p] += 1;
        }
        if used[1..].iter().any(|&c| c != 1) {
            return Err(ChordError::PointCoverage);
        }
        for &(i, j) in &self.arches {
            for &(k, l) in &self.arches {
                if i < k && k < j && j < l {
                    return Err(ChordError::Crossing);
                }
            }
        }
        for d in &self.dots {
            if !self.arches.contains(d) {
                return Err(ChordError::DotNotAnArch);
            }
        }
        Ok(())
    }

    pub fn is_decorated(&self) -> bool {
        !self.right_ends.is_empty() || !self.left_ends.is_empty() || !self.dots.is_empty()
    }

    /// Mirror image under `p -> num_points + 1 - p`.
    pub fn mirror(&self) -> ChordDiagram {
        let n = self.num_points;
        let flip = |p: usize| n + 1 - p;
        let mut arches: Vec<(usize, usize)> = self
            .arches
            .iter()
            .map(|&(i, j)| {
                let (a, b) = (flip(j), flip(i));
                (a, b)
            })
            .collect();
        arches.sort_unstable();
        let mut dots: Vec<(usize, usize)> = self
            .dots
            .iter()
            .map(|&(i, j)| (flip(j), flip(i)))
            .collect();
        dots.sort_unstable();
        let mut right_ends: Vec<usize> = self.left_ends.iter().map(|&p| flip(p)).collect();
        right_ends.sort_unstable();
        let mut left_ends: Vec<usize> = self.right_ends.iter().map(|&p| flip(p)).collect();
        left_ends.sort_unstable();
        ChordDiagram {
            num_points: n,
            arches,
            right_ends,
            left_ends,
            dots,
        }
    }

    /// True if the undecorated diagram is symmetric along the vertical
    /// middle line.
    pub fn is_symmetric(&self) -> bool {
        let m = self.mirror();
        m.arches == self.arches
    }

    /// Arches crossing the vertical middle line (between `n` and `n+1` for
    /// `2n` points), ordered innermost first.
    pub fn crossing_arches(&self) -> Vec<(usize, usize)> {
        let half = self.num_points / 2;
        let mut v: Vec<(usize, usize)> = self
            .arches
            .iter()
            .copied()
            .filter(|&(i, j)| i <= half && j > half)
            .collect();
        // Innermost = largest left endpoint.
        v.sort_by(|a, b| b.0.cmp(&a.0));
        v
    }
}

/// Condition (A1): every arch `(i, j)` satisfies `i + j - 1 == 0 (mod 2r)`.
pub fn check_cond_a(c: &ChordDiagram, r: usize) -> bool {
    c.arches.iter().all(|&(i, j)| (i + j - 1) % (2 * r) == 0)
}

/// Dyck path (r = 1) -> planar matching: U positions become arch openers.
pub fn path_to_matching(p: &RDyckPath) -> ChordDiagram {
    assert_eq!(p.r(), 1);
    word_to_matching(p.word())
}

/// Parenthesis-matching of a balanced `{U,R}` word.
pub fn word_to_matching(word: &[Step]) -> ChordDiagram {
    let mut stack = Vec::new();
    let mut arches = Vec::new();
    for (k, s) in word.iter().enumerate() {
        match s {
            Step::U => stack.push(k + 1),
            Step::R => {
                let i = stack.pop().expect("word must be balanced");
                arches.push((i, k + 1));
            }
        }
    }
    assert!(stack.is_empty(), "word must be balanced");
    ChordDiagram::from_arches(word.len(), arches).expect("matched word is planar")
}

/// Matching -> Dyck path: openers become U.
pub fn matching_to_path(c: &ChordDiagram) -> RDyckPath {
    let word = matching_to_word(c);
    RDyckPath::new(1, word).expect("planar matching gives a Dyck path")
}

/// The `{U,R}` word of an undecorated diagram: openers U, closers R.
pub fn matching_to_word(c: &ChordDiagram) -> Vec<Step> {
    assert!(!c.is_decorated());
    let mut word = vec![Step::R; c.num_points];
    for &(i, _) in &c.arches {
        word[i - 1] = Step::U;
    }
    word
}

/// A generalized chord diagram: `n` disjoint blocks of `r+1` points covering
/// `[1, (r+1)n]`, mutually non-crossing as arcs through their sorted points.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Debug)]
pub struct GenChordDiagram {
    pub n: usize,
    pub r: usize,
    /// Blocks sorted by minimum; each block ascending.
    pub blocks: Vec<Vec<usize>>,
}

impl GenChordDiagram {
    pub fn new(n: usize, r: usize, mut blocks: Vec<Vec<usize>>) -> Result<Self, ChordError> {
        for b in blocks.iter_mut() {
            b.sort_unstable();
        }
        blocks.sort();
        let d = GenChordDiagram { n, r, blocks };
        d.validate()?;
        Ok(d)
    }

    fn validate(&self) -> Result<(), ChordError> {
        let total = (self.r + 1) * self.n;
        let mut used = vec![false; total + 1];
        if self.blocks.len() != self.n {
            return Err(ChordError::PointCoverage);
        }
        for b in &self.blocks {
            if b.len() != self.r + 1 {
                return Err(ChordError::PointCoverage);
            }
            for &p in b {
                if p == 0 || p > total || used[p] {
                    return Err(ChordError::PointCoverage);
                }
                used[p] = true;
            }
        }
        // Non-crossing: consecutive elements of a block delimit intervals
        // that other blocks must not straddle.
        for b1 in &self.blocks {
            for b2 in &self.blocks {
                if b1 == b2 {
                    continue;
                }
                for w in b1.windows(2) {
                    let inside = b2.iter().filter(|&&p| p > w[0] && p < w[1]).count();
                    if inside != 0 && inside != b2.len() {
                        let fully_inside_b1 =
                            b2.iter().all(|&p| p > b1[0] && p < *b1.last().unwrap());
                        if !fully_inside_b1 || inside != 0 {
                            // b2 straddles the gap (w0, w1): crossing unless
                            // it is entirely within this gap.
                            let all_in_gap = b2.iter().all(|&p| p > w[0] && p < w[1]);
                            if !all_in_gap {
                                return Err(ChordError::Crossing);
                            }
                        }
                    }
                }
            }
        }
        Ok(())
    }
}

/// Generalized chord diagram -> r-Dyck path: U at block minima.
pub fn gen_chord_to_path(g: &GenChordDiagram) -> RDyckPath {
    let len = (g.r + 1) * g.n;
    let ups: Vec<usize> = g.blocks.iter().map(|b| b[0]).collect();
    RDyckPath::from_up_positions(g.r, len, &ups).expect("valid generalized chord diagram")
}

/// r-Dyck path -> generalized chord diagram, by repeatedly taking `r+1`
/// successive increasing integers starting from each U position, largest
/// first.
pub fn path_to_gen_chord(p: &RDyckPath) -> GenChordDiagram {
    let r = p.r();
    let n = p.size();
    let ups = p.up_positions();
    let total = (r + 1) * n;
    let mut available = vec![true; total + 1];
    let mut blocks: Vec<Vec<usize>> = Vec::with_capacity(n);
    for &a in ups.iter().rev() {
        let mut block = Vec::with_capacity(r + 1);
        let mut x = a;
        while block.len() < r + 1 {
            debug_assert!(x <= total, "path validity guarantees r+1 available points");
            if available[x] {
                block.push(x);
                available[x] = false;
            }
            x += 1;
        }
        blocks.push(block);
    }
    blocks.sort();
    GenChordDiagram { n, r, blocks }
}

/// Rotation on chord diagrams: every endpoint shifts by +1 mod the number
/// of points.
pub fn rotate_sigma(c: &ChordDiagram) -> ChordDiagram {
    assert!(!c.is_decorated(), "rotation is defined on undecorated diagrams");
    let n = c.num_points;
    let shift = |p: usize| p % n + 1;
    let arches = c
        .arches
        .iter()
        .map(|&(i, j)| {
            let (a, b) = (shift(i), shift(j));
            if a < b {
                (a, b)
            } else {
                (b, a)
            }
        })
        .collect();
    ChordDiagram::from_arches(n, arches).expect("rotation preserves planarity")
}

/// Rotation on the constrained family: `sigma^(r) = sigma^r`.
pub fn rotate_sigma_r(c: &ChordDiagram, r: usize) -> Result<ChordDiagram, ChordError> {
    if !check_cond_a(c, r) {
        return Err(ChordError::BadArch);
    }
    let mut out = c.clone();
    for _ in 0..r {
        out = rotate_sigma(&out);
    }
    Ok(out)
}

/// Rotation on generalized chord diagrams: block elements shift by +1 mod
/// `(r+1)n`.
pub fn rotate_tilde(g: &GenChordDiagram) -> GenChordDiagram {
    let total = (g.r + 1) * g.n;
    let mut blocks: Vec<Vec<usize>> = g
        .blocks
        .iter()
        .map(|b| {
            let mut nb: Vec<usize> = b.iter().map(|&p| p % total + 1).collect();
            nb.sort_unstable();
            nb
        })
        .collect();
    blocks.sort();
    GenChordDiagram {
        n: g.n,
        r: g.r,
        blocks,
    }
}

/// All planar perfect matchings on `2m` points satisfying condition (A1)
/// for the given `r` (the set with `2m = 2rn` realizes the constrained
/// diagram family of size n).
pub fn enumerate_cond_a_diagrams(points: usize, r: usize) -> Vec<ChordDiagram> {
    let mut out = Vec::new();
    let mut partner = vec![0usize; points + 1];
    fn go(
        partner: &mut Vec<usize>,
        points: usize,
        r: usize,
        out: &mut Vec<ChordDiagram>,
    ) {
        let i = match (1..=points).find(|&p| partner[p] == 0) {
            None => {
                let mut arches = Vec::new();
                for p in 1..=points {
                    if partner[p] > p {
                        arches.push((p, partner[p]));
                    }
                }
                out.push(ChordDiagram {
                    num_points: points,
                    arches,
                    right_ends: Vec::new(),
                    left_ends: Vec::new(),
                    dots: Vec::new(),
                });
                return;
            }
            Some(i) => i,
        };
        // Match i with some j > i; the span (i, j) must contain an even
        // number of free points (they must pair among themselves).
        for j in (i + 1)..=points {
            if partner[j] != 0 {
                continue;
            }
            if (i + j - 1) % (2 * r) != 0 {
                continue;
            }
            let inside_free = ((i + 1)..j).filter(|&p| partner[p] == 0).count();
            if inside_free % 2 != 0 {
                continue;
            }
            // Planarity: no already-placed arch may straddle (i, j).
            let ok = ((i + 1)..j).all(|p| {
                let q = partner[p];
                q == 0 || (q > i && q < j)
            });
            if !ok {
                continue;
            }
            partner[i] = j;
            partner[j] = i;
            go(partner, points, r, out);
            partner[i] = 0;
            partner[j] = 0;
        }
    }
    go(&mut partner, points, r, &mut out);
    out
}

/// All half-diagrams with arches and boundary stubs on `rn` points:
/// every point is in an arch or carries a left/right end; arches satisfy
/// condition (A1), no stub sits under an arch, and all left ends are left
/// of all right ends. This realizes the two-boundary state set.
pub fn enumerate_two_boundary_states(n: usize, r: usize) -> Vec<ChordDiagram> {
    let points = r * n;
    let mut out = Vec::new();
    // Recursive over positions: a point is a stub or opens an arch; no arch
    // may span a stub, and stubs later split into a left prefix and a right
    // suffix.
    fn go(
        pos: usize,
        points: usize,
        r: usize,
        partner: &mut Vec<usize>, // 0 free, usize::MAX stub, else arch partner
        out: &mut Vec<(Vec<(usize, usize)>, Vec<usize>)>,
    ) {
        let i = match (1..=points).find(|&p| partner[p] == 0) {
            None => {
                let mut arches = Vec::new();
                let mut stubs = Vec::new();
                for p in 1..=points {
                    if partner[p] == usize::MAX {
                        stubs.push(p);
                    } else if partner[p] > p && partner[p] != usize::MAX {
                        arches.push((p, partner[p]));
                    }
                }
                out.push((arches, stubs));
                return;
            }
            Some(i) => i,
        };
        let _ = pos;
        // Option 1: i is a stub; it must not sit under an already placed
        // arch (arches opening left of i have been decided already).
        let uncovered = (1..i).all(|p| {
            let q = partner[p];
            q == usize::MAX || q == 0 || q < i
        });
        if uncovered {
            partner[i] = usize::MAX;
            go(0, points, r, partner, out);
            partner[i] = 0;
        }
        // Option 2: arch (i, j); nothing inside may be a stub, and the
        // inside must pair internally.
        for j in (i + 1)..=points {
            if partner[j] != 0 {
                continue;
            }
            if (i + j - 1) % (2 * r) != 0 {
                continue;
            }
            let inside_ok = ((i + 1)..j).all(|p| {
                let q = partner[p];
                q != usize::MAX && (q == 0 || (q > i && q < j))
            });
            if !inside_ok {
                continue;
            }
            let inside_free = ((i + 1)..j).filter(|&p| partner[p] == 0).count();
            if inside_free % 2 != 0 {
                continue;
            }
            partner[i] = j;
            partner[j] = i;
            go(0, points, r, partner, out);
            partner[i] = 0;
            partner[j] = 0;
        }
    }

    let mut raw = Vec::new();
    let mut partner = vec![0usize; points + 1];
    go(0, points, r, &mut partner, &mut raw);

    for (arches, stubs) in raw {
        // Every split of the stub list into a left prefix and right suffix.
        for k in 0..=stubs.len() {
            let left: Vec<usize> = stubs[..k].to_vec();
            let right: Vec<usize> = stubs[k..].to_vec();
            out.push(ChordDiagram {
                num_points: points,
                arches: arches.clone(),
                right_ends: right,
                left_ends: left,
                dots: Vec::new(),
            });
        }
    }
    out.sort();
    out.dedup();
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::paths::{enumerate_paths, fuss_catalan};
    use alloc::string::ToString;
    use num_bigint::BigInt;

    #[test]
    fn path_matching_examples() {
        let p = RDyckPath::parse(1, "URUURR").unwrap();
        let c = path_to_matching(&p);
        assert_eq!(c.arches, vec![(1, 2), (3, 6), (4, 5)]);
        let p = RDyckPath::parse(1, "UURURR").unwrap();
        let c = path_to_matching(&p);
        assert_eq!(c.arches, vec![(1, 6), (2, 3), (4, 5)]);
        // (UR)^n gives short arches
        let p = RDyckPath::parse(1, "URURUR").unwrap();
        let c = path_to_matching(&p);
        assert_eq!(c.arches, vec![(1, 2), (3, 4), (5, 6)]);
    }

    #[test]
    fn matching_round_trip() {
        for p in enumerate_paths(4, 1) {
            assert_eq!(matching_to_path(&path_to_matching(&p)), p);
        }
    }

    #[test]
    fn gen_chord_examples() {
        let g = GenChordDiagram::new(2, 2, vec![vec![1, 2, 3], vec![4, 5, 6]]).unwrap();
        assert_eq!(gen_chord_to_path(&g).to_string(), "URRURR");
        let g = GenChordDiagram::new(2, 2, vec![vec![1, 2, 6], vec![3, 4, 5]]).unwrap();
        assert_eq!(gen_chord_to_path(&g).to_string(), "URURRR");
        let p = RDyckPath::parse(2, "UURRRR").unwrap();
        let g = path_to_gen_chord(&p);
        assert_eq!(g.blocks, vec![vec![1, 5, 6], vec![2, 3, 4]]);
    }

    #[test]
    fn gen_chord_round_trip() {
        for r in 1..=3usize {
            for n in 1..=4usize {
                if n * r > 9 {
                    continue;
                }
                for p in enumerate_paths(n, r) {
                    assert_eq!(gen_chord_to_path(&path_to_gen_chord(&p)), p);
                }
            }
        }
    }

    #[test]
    fn sigma_worked_example() {
        let c = ChordDiagram::from_arches(6, vec![(1, 2), (3, 6), (4, 5)]).unwrap();
        let s = rotate_sigma(&c);
        assert_eq!(s.arches, vec![(1, 4), (2, 3), (5, 6)]);
    }

    #[test]
    fn sigma_full_rotation_is_identity() {
        let c = ChordDiagram::from_arches(6, vec![(1, 2), (3, 6), (4, 5)]).unwrap();
        let mut s = c.clone();
        for _ in 0..6 {
            s = rotate_sigma(&s);
        }
        assert_eq!(s, c);
        let single = ChordDiagram::from_arches(2, vec![(1, 2)]).unwrap();
        assert_eq!(rotate_sigma(&single), single);
    }

    #[test]
    fn sigma_tilde_worked_example() {
        let g = GenChordDiagram::new(2, 2, vec![vec![1, 2, 3], vec![4, 5, 6]]).unwrap();
        let s = rotate_tilde(&g);
        assert_eq!(s.blocks, vec![vec![1, 5, 6], vec![2, 3, 4]]);
    }

    #[test]
    fn sigma_tilde_order() {
        let g = GenChordDiagram::new(2, 2, vec![vec![1, 2, 3], vec![4, 5, 6]]).unwrap();
        let mut s = g.clone();
        for _ in 0..6 {
            s = rotate_tilde(&s);
        }
        assert_eq!(s, g);
    }

    #[test]
    fn cond_a_examples() {
        // The displayed member of the constrained family (n=3, r=2).
        let yes = ChordDiagram::from_arches(
            12,
            vec![(1, 12), (2, 3), (4, 9), (5, 8), (6, 7), (10, 11)],
        )
        .unwrap();
        assert!(check_cond_a(&yes, 2));
        // The diagram of the non-member example: chords 1-2 and 2'-3'.
        let no = ChordDiagram::from_arches(
            12,
            vec![(1, 6), (2, 3), (4, 5), (7, 12), (8, 9), (10, 11)],
        )
        .unwrap();
        assert!(!check_cond_a(&no, 2));
        // r = 1: every planar matching pairs odd with even positions.
        for p in enumerate_paths(4, 1) {
            assert!(check_cond_a(&path_to_matching(&p), 1));
        }
    }

    #[test]
    fn cond_a_count_is_fuss_catalan() {
        for r in 1..=3usize {
            for n in 1..=3usize {
                if 2 * r * n > 14 {
                    continue;
                }
                let diagrams = enumerate_cond_a_diagrams(2 * r * n, r);
                assert_eq!(BigInt::from(diagrams.len()), fuss_catalan(n, r));
            }
        }
    }

    #[test]
    fn sigma_r_preserves_cond_a() {
        for d in enumerate_cond_a_diagrams(12, 2) {
            let rotated = rotate_sigma_r(&d, 2).unwrap();
            assert!(check_cond_a(&rotated, 2));
        }
    }

    #[test]
    fn two_boundary_states_small() {
        // Nine diagrams for (n, r) = (2, 2).
        assert_eq!(enumerate_two_boundary_states(2, 2).len(), 9);
    }
}
