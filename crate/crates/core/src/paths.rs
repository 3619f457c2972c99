//! Generalized (r-)Dyck paths, r-Young tableaux, the modified jeu de taquin
//! rotation, and Fuss-Catalan counting.

use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigInt;
use num_traits::One;

/// A single step of a lattice path. `R` sorts before `U` so that derived
/// path orderings agree with the lexicographic order of the words.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Debug, Hash)]
pub enum Step {
    R,
    U,
}

/// An r-Dyck path of size n: a word over `{U, R}` of length `(r+1)n` with
/// `n` ups and `rn` rights that never goes below the line `y = x/r`.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Debug, Hash)]
pub struct RDyckPath {
    r: usize,
    word: Vec<Step>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum PathError {
    BadLength,
    BadLetter(char),
    NotAboveLine,
    WrongStepCounts,
}

impl fmt::Display for PathError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PathError::BadLength => write!(f, "word length is not a multiple of r+1"),
            PathError::BadLetter(c) => write!(f, "unexpected letter {:?}", c),
            PathError::NotAboveLine => write!(f, "path goes below the line y = x/r"),
            PathError::WrongStepCounts => write!(f, "wrong number of U or R steps"),
        }
    }
}

impl RDyckPath {
    /// Validate a word as an r-Dyck path.
    pub fn new(r: usize, word: Vec<Step>) -> Result<Self, PathError> {
        assert!(r >= 1);
        if !word.len().is_multiple_of(r + 1) {
            return Err(PathError::BadLength);
        }
        let n = word.len() / (r + 1);
        let ups = word.iter().filter(|s| **s == Step::U).count();
        if ups != n {
            return Err(PathError::WrongStepCounts);
        }
        // Prefix condition: u >= t/r, i.e. r*u - t >= 0.
        let mut h: i64 = 0;
        for s in &word {
            match s {
                Step::U => h += r as i64,
                Step::R => h -= 1,
            }
            if h < 0 {
                return Err(PathError::NotAboveLine);
            }
        }
        Ok(RDyckPath { r, word })
    }

    /// Parse a plain `{U,R}` string; exponent shorthand `UR^3` is accepted.
    pub fn parse(r: usize, text: &str) -> Result<Self, PathError> {
        let mut word = Vec::new();
        let chars: Vec<char> = text.chars().collect();
        let mut i = 0;
        while i < chars.len() {
            let c = chars[i];
            let step = match c {
                'U' | 'u' => Step::U,
                'R' | 'r' => Step::R,
                ' ' => {
                    i += 1;
                    continue;
                }
                other => return Err(PathError::BadLetter(other)),
            };
            i += 1;
            let mut count = 1usize;
            if i < chars.len() && chars[i] == '^' {
                i += 1;
                let start = i;
                while i < chars.len() && chars[i].is_ascii_digit() {
                    i += 1;
                }
                if start == i {
                    return Err(PathError::BadLetter('^'));
                }
                count = chars[start..i]
                    .iter()
                    .collect::<String>()
                    .parse()
                    .map_err(|_| PathError::BadLetter('^'))?;
            }
            word.extend(core::iter::repeat_n(step, count));
        }
        RDyckPath::new(r, word)
    }

    pub fn r(&self) -> usize {
        self.r
    }

    pub fn size(&self) -> usize {
        self.word.len() / (self.r + 1)
    }

    pub fn word(&self) -> &[Step] {
        &self.word
    }

    /// Positions (1-based) of the U steps.
    pub fn up_positions(&self) -> Vec<usize> {
        self.word
            .iter()
            .enumerate()
            .filter(|(_, s)| **s == Step::U)
            .map(|(i, _)| i + 1)
            .collect()
    }

    /// Rebuild a path of the same shape from 1-based U positions.
    pub fn from_up_positions(r: usize, len: usize, ups: &[usize]) -> Result<Self, PathError> {
        let mut word = vec![Step::R; len];
        for &p in ups {
            if p == 0 || p > len || word[p - 1] == Step::U {
                return Err(PathError::WrongStepCounts);
            }
            word[p - 1] = Step::U;
        }
        RDyckPath::new(r, word)
    }
}

impl fmt::Display for RDyckPath {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for s in &self.word {
            write!(f, "{}", if *s == Step::U { 'U' } else { 'R' })?;
        }
        Ok(())
    }
}

/// An r-Young tableau of size n: first row of `n` increasing integers (the
/// U positions) over a second row of `rn` increasing integers (the R
/// positions), together partitioning `[1, (r+1)n]`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct RYoungTableau {
    pub r: usize,
    pub first_row: Vec<usize>,
    pub second_row: Vec<usize>,
}

impl RYoungTableau {
    pub fn size(&self) -> usize {
        self.first_row.len()
    }
}

/// The Fuss-Catalan number `binom(n(r+1), n) / (nr + 1)`, exactly.
pub fn fuss_catalan(n: usize, r: usize) -> BigInt {
    assert!(r >= 1);
    let mut num = BigInt::one();
    let mut den = BigInt::one();
    for k in 0..n {
        num *= BigInt::from((r + 1) * n - k);
        den *= BigInt::from(k + 1);
    }
    let binom = num / den;
    binom / BigInt::from(n * r + 1)
}

/// All r-Dyck paths of size n, lexicographically sorted (U < R).
pub fn enumerate_paths(n: usize, r: usize) -> Vec<RDyckPath> {
    let len = (r + 1) * n;
    let mut out = Vec::new();
    let mut word: Vec<Step> = Vec::with_capacity(len);
    fn go(word: &mut Vec<Step>, len: usize, r: usize, n: usize, ups: usize, h: i64, out: &mut Vec<RDyckPath>) {
        if word.len() == len {
            out.push(RDyckPath {
                r,
                word: word.clone(),
            });
            return;
        }
        if ups < n {
            word.push(Step::U);
            go(word, len, r, n, ups + 1, h + r as i64, out);
            word.pop();
        }
        if h >= 1 {
            word.push(Step::R);
            go(word, len, r, n, ups, h - 1, out);
            word.pop();
        }
    }
    if n == 0 {
        out.push(RDyckPath { r, word: Vec::new() });
        return out;
    }
    go(&mut word, len, r, n, 0, 0, &mut out);
    out.sort();
    out
}

/// Path -> tableau: first row takes the U positions, second row the R
/// positions.
pub fn path_to_tableau(p: &RDyckPath) -> RYoungTableau {
    let mut first = Vec::new();
    let mut second = Vec::new();
    for (i, s) in p.word().iter().enumerate() {
        if *s == Step::U {
            first.push(i + 1);
        } else {
            second.push(i + 1);
        }
    }
    RYoungTableau {
        r: p.r(),
        first_row: first,
        second_row: second,
    }
}

/// Tableau -> path: inverse of `path_to_tableau`.
pub fn tableau_to_path(t: &RYoungTableau) -> Result<RDyckPath, PathError> {
    let len = t.first_row.len() + t.second_row.len();
    RDyckPath::from_up_positions(t.r, len, &t.first_row)
}

/// The modified jeu de taquin rotation on r-Dyck paths.
///
/// Deletes the largest entry, slides the hole to the leftmost first-row
/// rectangle (in the second row, the larger of the left and upper neighbour
/// moves in; first-row rectangles slide as single cells), increments all
/// entries, and inserts 1.
pub fn jdt_rotate(p: &RDyckPath) -> RDyckPath {
    let r = p.r();
    let n = p.size();
    let t = path_to_tableau(p);
    let total = (r + 1) * n;

    // Tableau state: first row as n rectangles, second row as rn cells.
    // Entries 0 denote the hole.
    let mut row1 = t.first_row.clone();
    let mut row2 = t.second_row.clone();

    // (Heart 1): delete the entry (r+1)n. It is always the last cell of the
    // second row (the final step of a path is R).
    debug_assert_eq!(*row2.last().unwrap(), total);
    let mut hole = Hole::Row2(r * n - 1);
    *row2.last_mut().unwrap() = 0;

    // (Heart 2)-(Heart 3): slide until the leftmost rectangle of the first
    // row is empty.
    loop {
        match hole {
            Hole::Row2(j) => {
                // Rectangle above second-row cell j (0-based) is ceil((j+1)/r).
                let rect = j / r;
                if j == 0 {
                    // First column: move the integer above down.
                    row2[j] = row1[rect];
                    row1[rect] = 0;
                    hole = Hole::Row1(rect);
                } else {
                    let left = row2[j - 1];
                    let above = row1[rect];
                    debug_assert!(left != above);
                    if left > above {
                        row2[j] = left;
                        row2[j - 1] = 0;
                        hole = Hole::Row2(j - 1);
                    } else {
                        row2[j] = above;
                        row1[rect] = 0;
                        hole = Hole::Row1(rect);
                    }
                }
            }
            Hole::Row1(k) => {
                if k == 0 {
                    break;
                }
                // First row: move the integer in the rectangle to the left.
                row1[k] = row1[k - 1];
                row1[k - 1] = 0;
                hole = Hole::Row1(k - 1);
            }
        }
    }

    // (Heart 4)-(Heart 5): increment all entries and put 1 in the hole.
    let mut first: Vec<usize> = row1.iter().map(|&v| v + 1).collect();
    let second: Vec<usize> = row2
        .iter()
        .filter(|&&v| v != 0)
        .map(|&v| v + 1)
        .collect();
    first[0] = 1;
    first.sort_unstable();
    let tab = RYoungTableau {
        r,
        first_row: first,
        second_row: second,
    };
    tableau_to_path(&tab).expect("jeu de taquin must produce a valid path")
}

enum Hole {
    Row1(usize),
    Row2(usize),
}
