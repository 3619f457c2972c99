//! The planar diagram calculus: basis diagrams with bundled strands and
//! optional boundary end points, the stacking product with all reduction
//! factors, the generators, basis enumeration, and dimension counts.
//!
//! A diagram on `m` bundled points per edge with bundle size `r` is stored
//! as a perfect matching on the boundary walk of its rectangle: bottom
//! strand slots left to right, right-wall stubs bottom to top, top slots
//! right to left, left-wall stubs top to bottom. Planarity is
//! non-crossingness in this cyclic order.

use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigInt;

use crate::chords::{enumerate_cond_a_diagrams, ChordDiagram};
use crate::lincomb::LinComb;
use crate::rings::{LaurentPoly, Ring, VAR_Q0, VAR_QN};

/// Which walls may carry end points.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Debug, Hash)]
pub enum BoundaryMode {
    None,
    Right,
    Both,
}

/// Parity class of a wall stub; drives the boundary reduction weights.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Debug, Hash)]
pub enum Parity {
    Odd,
    Even,
}

impl Parity {
    pub fn flip(self) -> Parity {
        match self {
            Parity::Odd => Parity::Even,
            Parity::Even => Parity::Odd,
        }
    }
}

/// Reduction weights for the stacking product, over a pluggable ring.
///
/// `r_even_odd` is the factor for a right-wall strand whose lower stub is
/// even and upper stub odd (canonically `-(qn + qn^-1)`), `r_odd_even` the
/// reversed pattern (canonically `q qn^-1 + q^-1 qn`); the `l_*` fields are
/// the left-wall analogues in `q0`. `theta` enables the removal of
/// left-to-right strands; without it such strands are kept in the diagram.
#[derive(Clone, Debug)]
pub struct Weights<R: Ring> {
    pub tau: R,
    pub r_even_odd: R,
    pub r_odd_even: R,
    pub l_even_odd: R,
    pub l_odd_even: R,
    pub theta: Option<R>,
}

impl Weights<LaurentPoly> {
    /// The canonical Laurent-polynomial weights; `star1` enables the
    /// theta-reduction of left-to-right strands.
    pub fn canonical(star1: bool) -> Self {
        Weights {
            tau: LaurentPoly::tau(),
            r_even_odd: LaurentPoly::minus_x_plus_xinv(VAR_QN),
            r_odd_even: LaurentPoly::q_mixed(VAR_QN),
            l_even_odd: LaurentPoly::minus_x_plus_xinv(VAR_Q0),
            l_odd_even: LaurentPoly::q_mixed(VAR_Q0),
            theta: if star1 { Some(LaurentPoly::theta()) } else { None },
        }
    }
}

/// A basis diagram of the algebra.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Debug, Hash)]
pub struct AlgebraDiagram {
    pub m: usize,
    pub r: usize,
    pub boundary: BoundaryMode,
    n_right: usize,
    n_left: usize,
    /// Involution on walk positions.
    pairing: Vec<usize>,
    /// Stub parities, bottom to top along each wall.
    right_flags: Vec<Parity>,
    left_flags: Vec<Parity>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum DiagramError {
    IndexOutOfRange,
    BoundaryMismatch,
    ShapeMismatch,
    NotPlanar,
    ThetaRequired,
}

impl fmt::Display for DiagramError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            DiagramError::IndexOutOfRange => write!(f, "generator index out of range"),
            DiagramError::BoundaryMismatch => {
                write!(f, "generator not allowed in this boundary mode")
            }
            DiagramError::ShapeMismatch => write!(f, "operands have different shapes"),
            DiagramError::NotPlanar => write!(f, "diagram is not planar"),
            DiagramError::ThetaRequired => {
                write!(f, "this operation requires the theta reduction to be enabled")
            }
        }
    }
}

impl AlgebraDiagram {
    fn slots(&self) -> usize {
        self.m * self.r
    }

    fn bot(&self, i: usize) -> usize {
        i
    }

    fn rstub(&self, k: usize) -> usize {
        self.slots() + k
    }

    fn top(&self, i: usize) -> usize {
        self.slots() + self.n_right + (self.slots() - 1 - i)
    }

    fn lstub(&self, k: usize) -> usize {
        2 * self.slots() + self.n_right + (self.n_left - 1 - k)
    }

    fn total(&self) -> usize {
        2 * self.slots() + self.n_right + self.n_left
    }

    pub fn num_right_stubs(&self) -> usize {
        self.n_right
    }

    pub fn num_left_stubs(&self) -> usize {
        self.n_left
    }

    fn classify(&self, walk: usize) -> Node {
        let s = self.slots();
        if walk < s {
            Node::Bot(walk)
        } else if walk < s + self.n_right {
            Node::RStub(walk - s)
        } else if walk < 2 * s + self.n_right {
            Node::Top(2 * s + self.n_right - 1 - walk)
        } else {
            Node::LStub(self.total() - 1 - walk)
        }
    }

    fn check_planar(&self) -> Result<(), DiagramError> {
        let n = self.total();
        for a in 0..n {
            let b = self.pairing[a];
            if b >= n || self.pairing[b] != a || a == b {
                return Err(DiagramError::NotPlanar);
            }
        }
        for a in 0..n {
            let b = self.pairing[a];
            if a >= b {
                continue;
            }
            for c in (a + 1)..b {
                let d = self.pairing[c];
                if d < a || d > b {
                    return Err(DiagramError::NotPlanar);
                }
            }
        }
        Ok(())
    }

    /// The identity diagram: every bottom slot runs straight to its top slot.
    pub fn identity(m: usize, r: usize, boundary: BoundaryMode) -> Self {
        let slots = m * r;
        let mut d = AlgebraDiagram {
            m,
            r,
            boundary,
            n_right: 0,
            n_left: 0,
            pairing: vec![0usize; 2 * slots],
            right_flags: Vec::new(),
            left_flags: Vec::new(),
        };
        for i in 0..slots {
            let (a, b) = (d.bot(i), d.top(i));
            d.pairing[a] = b;
            d.pairing[b] = a;
        }
        d
    }

    /// Horizontal flip (bottom and top exchanged); stub parities flip.
    pub fn hflip(&self) -> AlgebraDiagram {
        let map = |node: Node| -> Node {
            match node {
                Node::Bot(i) => Node::Top(i),
                Node::Top(i) => Node::Bot(i),
                Node::RStub(k) => Node::RStub(self.n_right - 1 - k),
                Node::LStub(k) => Node::LStub(self.n_left - 1 - k),
            }
        };
        let mut out = AlgebraDiagram {
            m: self.m,
            r: self.r,
            boundary: self.boundary,
            n_right: self.n_right,
            n_left: self.n_left,
            pairing: vec![0; self.total()],
            right_flags: self.right_flags.iter().rev().map(|p| p.flip()).collect(),
            left_flags: self.left_flags.iter().rev().map(|p| p.flip()).collect(),
        };
        for a in 0..self.total() {
            let b = self.pairing[a];
            let na = out.node_index(map(self.classify(a)));
            let nb = out.node_index(map(self.classify(b)));
            out.pairing[na] = nb;
            out.pairing[nb] = na;
        }
        out
    }

    fn node_index(&self, n: Node) -> usize {
        match n {
            Node::Bot(i) => self.bot(i),
            Node::RStub(k) => self.rstub(k),
            Node::Top(i) => self.top(i),
            Node::LStub(k) => self.lstub(k),
        }
    }

    /// Bundle (1-based) a strand slot belongs to.
    fn bundle_of_slot(&self, i: usize) -> usize {
        i / self.r + 1
    }

    /// Build a diagram from explicit parts. Points are numbered 1..2rm with
    /// the bottom slots first (left to right) and then the top slots (left
    /// to right); `strands` pair such points, `right`/`left` list the wall
    /// stubs in wall order (bottom to top) as `(point, parity)`.
    pub fn from_parts(
        m: usize,
        r: usize,
        boundary: BoundaryMode,
        strands: &[(usize, usize)],
        right: &[(usize, Parity)],
        left: &[(usize, Parity)],
    ) -> Result<Self, DiagramError> {
        let slots = m * r;
        let mut d = AlgebraDiagram {
            m,
            r,
            boundary,
            n_right: right.len(),
            n_left: left.len(),
            pairing: vec![usize::MAX; 2 * slots + right.len() + left.len()],
            right_flags: right.iter().map(|(_, f)| *f).collect(),
            left_flags: left.iter().map(|(_, f)| *f).collect(),
        };
        let node = |d: &AlgebraDiagram, p: usize| -> Result<usize, DiagramError> {
            if p >= 1 && p <= slots {
                Ok(d.bot(p - 1))
            } else if p > slots && p <= 2 * slots {
                Ok(d.top(p - slots - 1))
            } else {
                Err(DiagramError::IndexOutOfRange)
            }
        };
        for &(a, b) in strands {
            let x = node(&d, a)?;
            let y = node(&d, b)?;
            d.pairing[x] = y;
            d.pairing[y] = x;
        }
        for (k, &(p, _)) in right.iter().enumerate() {
            let x = node(&d, p)?;
            let y = d.rstub(k);
            d.pairing[x] = y;
            d.pairing[y] = x;
        }
        for (k, &(p, _)) in left.iter().enumerate() {
            let x = node(&d, p)?;
            let y = d.lstub(k);
            d.pairing[x] = y;
            d.pairing[y] = x;
        }
        if d.pairing.contains(&usize::MAX) {
            return Err(DiagramError::NotPlanar);
        }
        d.check_planar()?;
        Ok(d)
    }

    /// The strand pairs and wall stubs of the diagram, in the numbering of
    /// `from_parts`.
    pub fn parts(&self) -> (Vec<(usize, usize)>, Vec<(usize, Parity)>, Vec<(usize, Parity)>) {
        let slots = self.slots();
        let point = |node: Node| -> Option<usize> {
            match node {
                Node::Bot(i) => Some(i + 1),
                Node::Top(i) => Some(slots + i + 1),
                _ => None,
            }
        };
        let mut strands = Vec::new();
        for p in 0..2 * slots {
            let walk = if p < slots { self.bot(p) } else { self.top(p - slots) };
            let q = self.pairing[walk];
            if let (Some(a), Some(b)) = (point(self.classify(walk)), point(self.classify(q))) {
                if a < b {
                    strands.push((a, b));
                }
            }
        }
        strands.sort_unstable();
        let mut right = Vec::new();
        for k in 0..self.n_right {
            let q = self.pairing[self.rstub(k)];
            // Wall-to-wall strands (possible without the theta rule) are
            // reported with point 0.
            right.push((
                point(self.classify(q)).unwrap_or(0),
                self.right_flags[k],
            ));
        }
        let mut left = Vec::new();
        for k in 0..self.n_left {
            let q = self.pairing[self.lstub(k)];
            left.push((point(self.classify(q)).unwrap_or(0), self.left_flags[k]));
        }
        (strands, right, left)
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
enum Node {
    Bot(usize),
    Top(usize),
    RStub(usize),
    LStub(usize),
}

/// Formal linear combination of diagrams.
pub type AlgebraElement<R> = LinComb<AlgebraDiagram, R>;

/// The generator `E_i^(s)`: bulk cap-cup for `1 <= i <= m-1`, right-end
/// diagram for `i = m` (boundary modes `Right`/`Both`), left-end diagram
/// for `i = 0` (mode `Both` only). `s = 0` yields the identity.
pub fn generator_e(
    i: usize,
    s: usize,
    m: usize,
    r: usize,
    boundary: BoundaryMode,
) -> Result<AlgebraDiagram, DiagramError> {
    if s == 0 {
        return Ok(AlgebraDiagram::identity(m, r, boundary));
    }
    if s > r || m == 0 {
        return Err(DiagramError::IndexOutOfRange);
    }
    let slots = m * r;
    let link = |d: &mut AlgebraDiagram, a: usize, b: usize| {
        d.pairing[a] = b;
        d.pairing[b] = a;
    };
    let close_through = |d: &mut AlgebraDiagram| {
        for x in 0..d.slots() {
            if d.pairing[d.bot(x)] == usize::MAX {
                let (a, b) = (d.bot(x), d.top(x));
                d.pairing[a] = b;
                d.pairing[b] = a;
            }
        }
    };
    if i >= 1 && i < m {
        // Bulk: rightmost s strands of bundle i cup with the leftmost s of
        // bundle i+1, nested; everything else runs through.
        let mut d = AlgebraDiagram {
            m,
            r,
            boundary,
            n_right: 0,
            n_left: 0,
            pairing: vec![usize::MAX; 2 * slots],
            right_flags: Vec::new(),
            left_flags: Vec::new(),
        };
        let base_i = (i - 1) * r;
        let base_j = i * r;
        for j in 0..s {
            let x = base_i + (r - s) + j;
            let y = base_j + (s - 1 - j);
            let (bx, by) = (d.bot(x), d.bot(y));
            link(&mut d, bx, by);
            let (tx, ty) = (d.top(x), d.top(y));
            link(&mut d, tx, ty);
        }
        close_through(&mut d);
        d.check_planar()?;
        Ok(d)
    } else if i == m {
        if boundary == BoundaryMode::None {
            return Err(DiagramError::BoundaryMismatch);
        }
        // Rightmost s strands of bundle m end on the right wall: bottom
        // stubs odd, top stubs even.
        let mut d = AlgebraDiagram {
            m,
            r,
            boundary,
            n_right: 2 * s,
            n_left: 0,
            pairing: vec![usize::MAX; 2 * slots + 2 * s],
            right_flags: Vec::new(),
            left_flags: Vec::new(),
        };
        for j in 0..s {
            // Wall order bottom to top: slot rm-1 attaches lowest.
            let slot = slots - 1 - j;
            let (a, b) = (d.bot(slot), d.rstub(j));
            link(&mut d, a, b);
            d.right_flags.push(Parity::Odd);
        }
        for j in 0..s {
            let slot = slots - s + j;
            let (a, b) = (d.top(slot), d.rstub(s + j));
            link(&mut d, a, b);
            d.right_flags.push(Parity::Even);
        }
        close_through(&mut d);
        d.check_planar()?;
        Ok(d)
    } else if i == 0 {
        if boundary != BoundaryMode::Both {
            return Err(DiagramError::BoundaryMismatch);
        }
        // Leftmost s strands of bundle 1 end on the left wall.
        let mut d = AlgebraDiagram {
            m,
            r,
            boundary,
            n_right: 0,
            n_left: 2 * s,
            pairing: vec![usize::MAX; 2 * slots + 2 * s],
            right_flags: Vec::new(),
            left_flags: Vec::new(),
        };
        for j in 0..s {
            let (a, b) = (d.bot(j), d.lstub(j));
            link(&mut d, a, b);
            d.left_flags.push(Parity::Odd);
        }
        for j in 0..s {
            let slot = s - 1 - j;
            let (a, b) = (d.top(slot), d.lstub(s + j));
            link(&mut d, a, b);
            d.left_flags.push(Parity::Even);
        }
        close_through(&mut d);
        d.check_planar()?;
        Ok(d)
    } else {
        Err(DiagramError::IndexOutOfRange)
    }
}

/// Composite endpoint during strand tracing: `side` false is the lower
/// diagram.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
enum End {
    XBot(usize),
    YTop(usize),
    XR(usize),
    YR(usize),
    XL(usize),
    YL(usize),
}

/// Multiply two basis diagrams: stack `y` on top of `x`, remove loops and
/// wall strands with their weights, and collect the surviving diagram.
/// A `None` diagram means the coefficient vanished.
pub fn multiply_diagrams<R: Ring>(
    w: &Weights<R>,
    x: &AlgebraDiagram,
    y: &AlgebraDiagram,
) -> Result<(R, Option<AlgebraDiagram>), DiagramError> {
    if x.m != y.m || x.r != y.r || x.boundary != y.boundary {
        return Err(DiagramError::ShapeMismatch);
    }
    let slots = x.slots();
    let mut coef = R::one();
    let mut visited_x = vec![false; x.total()];
    let mut visited_y = vec![false; y.total()];

    // Follow a strand from a composite endpoint to the opposite endpoint;
    // `None` means the strand closed into a loop.
    let trace = |start_side: bool,
                     start_walk: usize,
                     visited_x: &mut Vec<bool>,
                     visited_y: &mut Vec<bool>|
     -> Option<End> {
        let mut side = start_side;
        let mut walk = start_walk;
        loop {
            if side {
                visited_y[walk] = true;
            } else {
                visited_x[walk] = true;
            }
            let w2 = if side { y.pairing[walk] } else { x.pairing[walk] };
            if side {
                visited_y[w2] = true;
            } else {
                visited_x[w2] = true;
            }
            // Jump across the interface x.Top(i) <-> y.Bot(i), or stop.
            let jumped = if !side {
                match x.classify(w2) {
                    Node::Top(i) => Some((true, y.bot(i))),
                    _ => None,
                }
            } else {
                match y.classify(w2) {
                    Node::Bot(i) => Some((false, x.top(i))),
                    _ => None,
                }
            };
            match jumped {
                Some((s3, w3)) => {
                    let seen = if s3 { visited_y[w3] } else { visited_x[w3] };
                    if seen {
                        return None;
                    }
                    side = s3;
                    walk = w3;
                }
                None => {
                    return Some(if !side {
                        match x.classify(w2) {
                            Node::Bot(i) => End::XBot(i),
                            Node::RStub(k) => End::XR(k),
                            Node::LStub(k) => End::XL(k),
                            Node::Top(_) => unreachable!(),
                        }
                    } else {
                        match y.classify(w2) {
                            Node::Top(i) => End::YTop(i),
                            Node::RStub(k) => End::YR(k),
                            Node::LStub(k) => End::YL(k),
                            Node::Bot(_) => unreachable!(),
                        }
                    });
                }
            }
        }
    };

    let mut strands: Vec<(End, End)> = Vec::new();
    let mut starts: Vec<(bool, usize, End)> = Vec::new();
    for i in 0..slots {
        starts.push((false, x.bot(i), End::XBot(i)));
        starts.push((true, y.top(i), End::YTop(i)));
    }
    for k in 0..x.n_right {
        starts.push((false, x.rstub(k), End::XR(k)));
    }
    for k in 0..x.n_left {
        starts.push((false, x.lstub(k), End::XL(k)));
    }
    for k in 0..y.n_right {
        starts.push((true, y.rstub(k), End::YR(k)));
    }
    for k in 0..y.n_left {
        starts.push((true, y.lstub(k), End::YL(k)));
    }
    for (side, walk, this_end) in starts {
        let seen = if side { visited_y[walk] } else { visited_x[walk] };
        if seen {
            continue;
        }
        let other = trace(side, walk, &mut visited_x, &mut visited_y)
            .expect("strand from a boundary node is open");
        strands.push((this_end, other));
    }
    // Remaining unvisited interface nodes belong to closed loops.
    for i in 0..slots {
        if !visited_x[x.top(i)] {
            let closed = trace(false, x.top(i), &mut visited_x, &mut visited_y);
            debug_assert!(closed.is_none());
            coef = coef.mul(&w.tau);
        }
    }

    // Wall positions: x's stubs sit below y's on both walls.
    let rinfo = |e: &End| -> Option<(usize, Parity)> {
        match e {
            End::XR(k) => Some((*k, x.right_flags[*k])),
            End::YR(k) => Some((x.n_right + *k, y.right_flags[*k])),
            _ => None,
        }
    };
    let linfo = |e: &End| -> Option<(usize, Parity)> {
        match e {
            End::XL(k) => Some((*k, x.left_flags[*k])),
            End::YL(k) => Some((x.n_left + *k, y.left_flags[*k])),
            _ => None,
        }
    };

    let mut survivors: Vec<(End, End)> = Vec::new();
    for (a, b) in strands {
        match (rinfo(&a), rinfo(&b), linfo(&a), linfo(&b)) {
            (Some((pa, fa)), Some((pb, fb)), _, _) => {
                let (lower, upper) = if pa < pb { (fa, fb) } else { (fb, fa) };
                let factor = match (lower, upper) {
                    (Parity::Even, Parity::Odd) => &w.r_even_odd,
                    (Parity::Odd, Parity::Even) => &w.r_odd_even,
                    _ => panic!("same-parity right-wall strand"),
                };
                coef = coef.mul(factor);
            }
            (_, _, Some((pa, fa)), Some((pb, fb))) => {
                let (lower, upper) = if pa < pb { (fa, fb) } else { (fb, fa) };
                let factor = match (lower, upper) {
                    (Parity::Even, Parity::Odd) => &w.l_even_odd,
                    (Parity::Odd, Parity::Even) => &w.l_odd_even,
                    _ => panic!("same-parity left-wall strand"),
                };
                coef = coef.mul(factor);
            }
            (Some(_), None, None, Some(_)) | (None, Some(_), Some(_), None) => match &w.theta {
                Some(th) => coef = coef.mul(th),
                None => survivors.push((a, b)),
            },
            _ => survivors.push((a, b)),
        }
    }

    if coef.is_zero() {
        return Ok((coef, None));
    }

    // Assemble the composite: surviving x stubs first, then y's.
    let mut right_nodes: Vec<(End, Parity)> = Vec::new();
    let mut left_nodes: Vec<(End, Parity)> = Vec::new();
    let present =
        |e: &End, survivors: &Vec<(End, End)>| survivors.iter().any(|(a, b)| a == e || b == e);
    for k in 0..x.n_right {
        let e = End::XR(k);
        if present(&e, &survivors) {
            right_nodes.push((e, x.right_flags[k]));
        }
    }
    for k in 0..y.n_right {
        let e = End::YR(k);
        if present(&e, &survivors) {
            right_nodes.push((e, y.right_flags[k]));
        }
    }
    for k in 0..x.n_left {
        let e = End::XL(k);
        if present(&e, &survivors) {
            left_nodes.push((e, x.left_flags[k]));
        }
    }
    for k in 0..y.n_left {
        let e = End::YL(k);
        if present(&e, &survivors) {
            left_nodes.push((e, y.left_flags[k]));
        }
    }

    let n_right = right_nodes.len();
    let n_left = left_nodes.len();
    let mut out = AlgebraDiagram {
        m: x.m,
        r: x.r,
        boundary: x.boundary,
        n_right,
        n_left,
        pairing: vec![usize::MAX; 2 * slots + n_right + n_left],
        right_flags: right_nodes.iter().map(|(_, f)| *f).collect(),
        left_flags: left_nodes.iter().map(|(_, f)| *f).collect(),
    };
    let locate = |e: &End, out: &AlgebraDiagram| -> usize {
        match e {
            End::XBot(i) => out.bot(*i),
            End::YTop(i) => out.top(*i),
            _ => {
                if let Some(p) = right_nodes.iter().position(|(x, _)| x == e) {
                    out.rstub(p)
                } else {
                    let p = left_nodes.iter().position(|(x, _)| x == e).unwrap();
                    out.lstub(p)
                }
            }
        }
    };
    for (a, b) in &survivors {
        let na = locate(a, &out);
        let nb = locate(b, &out);
        out.pairing[na] = nb;
        out.pairing[nb] = na;
    }
    out.check_planar()?;
    Ok((coef, Some(out)))
}

/// Product of formal sums of diagrams.
pub fn multiply<R: Ring>(
    w: &Weights<R>,
    x: &AlgebraElement<R>,
    y: &AlgebraElement<R>,
) -> Result<AlgebraElement<R>, DiagramError> {
    let mut out = AlgebraElement::zero();
    for (dx, cx) in x.iter() {
        for (dy, cy) in y.iter() {
            let (c, d) = multiply_diagrams(w, dx, dy)?;
            if let Some(d) = d {
                out.add_term(d, cx.mul(cy).mul(&c));
            }
        }
    }
    Ok(out)
}

// --- states (half diagrams) --------------------------------------------------

/// A module state: a half diagram on `m` bundles with arches and wall stubs
/// but no top edge.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Debug, Hash)]
pub struct HalfDiagram {
    pub m: usize,
    pub r: usize,
    n_right: usize,
    n_left: usize,
    /// Walk: bottom slots left to right, right stubs bottom to top, left
    /// stubs top to bottom.
    pairing: Vec<usize>,
    right_flags: Vec<Parity>,
    left_flags: Vec<Parity>,
}

impl HalfDiagram {
    fn slots(&self) -> usize {
        self.m * self.r
    }

    fn bot(&self, i: usize) -> usize {
        i
    }

    fn rstub(&self, k: usize) -> usize {
        self.slots() + k
    }

    fn lstub(&self, k: usize) -> usize {
        self.slots() + self.n_right + (self.n_left - 1 - k)
    }

    fn total(&self) -> usize {
        self.slots() + self.n_right + self.n_left
    }

    fn classify(&self, walk: usize) -> HalfNode {
        if walk < self.slots() {
            HalfNode::Bot(walk)
        } else if walk < self.slots() + self.n_right {
            HalfNode::RStub(walk - self.slots())
        } else {
            HalfNode::LStub(self.total() - 1 - walk)
        }
    }

    fn check_planar(&self) -> Result<(), DiagramError> {
        let n = self.total();
        for a in 0..n {
            let b = self.pairing[a];
            if b >= n || self.pairing[b] != a || a == b {
                return Err(DiagramError::NotPlanar);
            }
        }
        for a in 0..n {
            let b = self.pairing[a];
            if a >= b {
                continue;
            }
            for c in (a + 1)..b {
                let d = self.pairing[c];
                if d < a || d > b {
                    return Err(DiagramError::NotPlanar);
                }
            }
        }
        Ok(())
    }

    /// Build a state from arches (1-based point pairs) plus right and left
    /// stubs given as `(point, parity)`. Stub wall order is forced by
    /// planarity: right stubs sort by descending point, left by ascending.
    pub fn from_parts(
        m: usize,
        r: usize,
        arches: &[(usize, usize)],
        right: &[(usize, Parity)],
        left: &[(usize, Parity)],
    ) -> Result<Self, DiagramError> {
        let slots = m * r;
        let mut right: Vec<(usize, Parity)> = right.to_vec();
        right.sort_by(|a, b| b.0.cmp(&a.0));
        let mut left: Vec<(usize, Parity)> = left.to_vec();
        left.sort_by_key(|a| a.0);
        let n_right = right.len();
        let n_left = left.len();
        let mut d = HalfDiagram {
            m,
            r,
            n_right,
            n_left,
            pairing: vec![usize::MAX; slots + n_right + n_left],
            right_flags: right.iter().map(|(_, f)| *f).collect(),
            left_flags: left.iter().map(|(_, f)| *f).collect(),
        };
        for &(a, b) in arches {
            let (x, y) = (d.bot(a - 1), d.bot(b - 1));
            d.pairing[x] = y;
            d.pairing[y] = x;
        }
        for (k, &(p, _)) in right.iter().enumerate() {
            let (x, y) = (d.bot(p - 1), d.rstub(k));
            d.pairing[x] = y;
            d.pairing[y] = x;
        }
        for (k, &(p, _)) in left.iter().enumerate() {
            let (x, y) = (d.bot(p - 1), d.lstub(k));
            d.pairing[x] = y;
            d.pairing[y] = x;
        }
        if d.pairing.contains(&usize::MAX) {
            return Err(DiagramError::NotPlanar);
        }
        d.check_planar()?;
        Ok(d)
    }

    /// A state without stubs from an undecorated chord diagram.
    pub fn from_chord(m: usize, r: usize, c: &ChordDiagram) -> Result<Self, DiagramError> {
        if c.num_points != m * r || c.is_decorated() {
            return Err(DiagramError::ShapeMismatch);
        }
        Self::from_parts(m, r, &c.arches, &[], &[])
    }

    /// The decorated chord diagram of a state (flags are dropped).
    pub fn to_chord(&self) -> ChordDiagram {
        let mut arches = Vec::new();
        let mut right_ends = Vec::new();
        let mut left_ends = Vec::new();
        for a in 0..self.slots() {
            let b = self.pairing[a];
            match self.classify(b) {
                HalfNode::Bot(j) => {
                    if a < j {
                        arches.push((a + 1, j + 1));
                    }
                }
                HalfNode::RStub(_) => right_ends.push(a + 1),
                HalfNode::LStub(_) => left_ends.push(a + 1),
            }
        }
        ChordDiagram {
            num_points: self.slots(),
            arches,
            right_ends,
            left_ends,
            dots: Vec::new(),
        }
    }

    /// Stub parities by point: `(point, is_left, parity)`.
    pub fn stub_flags(&self) -> Vec<(usize, bool, Parity)> {
        let mut out = Vec::new();
        for k in 0..self.n_right {
            let p = self.pairing[self.rstub(k)];
            out.push((p + 1, false, self.right_flags[k]));
        }
        for k in 0..self.n_left {
            let p = self.pairing[self.lstub(k)];
            out.push((p + 1, true, self.left_flags[k]));
        }
        out.sort();
        out
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
enum HalfNode {
    Bot(usize),
    RStub(usize),
    LStub(usize),
}

/// Formal sum of states.
pub type StateSum<R> = LinComb<HalfDiagram, R>;

/// Act with a basis diagram on a state (the state is stacked on top).
pub fn act_diagram<R: Ring>(
    w: &Weights<R>,
    x: &AlgebraDiagram,
    st: &HalfDiagram,
) -> Result<(R, Option<HalfDiagram>), DiagramError> {
    if x.m != st.m || x.r != st.r {
        return Err(DiagramError::ShapeMismatch);
    }
    let slots = x.slots();
    let mut visited_x = vec![false; x.total()];
    let mut visited_s = vec![false; st.total()];
    let mut coef = R::one();

    #[derive(Clone, Copy, PartialEq, Eq, Debug)]
    enum E2 {
        XBot(usize),
        XR(usize),
        XL(usize),
        SR(usize),
        SL(usize),
    }

    let trace = |start_side: bool,
                     start_walk: usize,
                     visited_x: &mut Vec<bool>,
                     visited_s: &mut Vec<bool>|
     -> Option<E2> {
        let mut side = start_side;
        let mut walk = start_walk;
        loop {
            if side {
                visited_s[walk] = true;
            } else {
                visited_x[walk] = true;
            }
            let w2 = if side { st.pairing[walk] } else { x.pairing[walk] };
            if side {
                visited_s[w2] = true;
            } else {
                visited_x[w2] = true;
            }
            let jumped = if !side {
                match x.classify(w2) {
                    Node::Top(i) => Some((true, st.bot(i))),
                    _ => None,
                }
            } else {
                match st.classify(w2) {
                    HalfNode::Bot(i) => Some((false, x.top(i))),
                    _ => None,
                }
            };
            match jumped {
                Some((s3, w3)) => {
                    let seen = if s3 { visited_s[w3] } else { visited_x[w3] };
                    if seen {
                        return None;
                    }
                    side = s3;
                    walk = w3;
                }
                None => {
                    return Some(if side {
                        match st.classify(w2) {
                            HalfNode::RStub(k) => E2::SR(k),
                            HalfNode::LStub(k) => E2::SL(k),
                            HalfNode::Bot(_) => unreachable!(),
                        }
                    } else {
                        match x.classify(w2) {
                            Node::Bot(i) => E2::XBot(i),
                            Node::RStub(k) => E2::XR(k),
                            Node::LStub(k) => E2::XL(k),
                            Node::Top(_) => unreachable!(),
                        }
                    });
                }
            }
        }
    };

    let mut strands: Vec<(E2, E2)> = Vec::new();
    let mut starts: Vec<(bool, usize, E2)> = Vec::new();
    for i in 0..slots {
        starts.push((false, x.bot(i), E2::XBot(i)));
    }
    for k in 0..x.n_right {
        starts.push((false, x.rstub(k), E2::XR(k)));
    }
    for k in 0..x.n_left {
        starts.push((false, x.lstub(k), E2::XL(k)));
    }
    for k in 0..st.n_right {
        starts.push((true, st.rstub(k), E2::SR(k)));
    }
    for k in 0..st.n_left {
        starts.push((true, st.lstub(k), E2::SL(k)));
    }
    for (side, walk, e) in starts {
        let seen = if side { visited_s[walk] } else { visited_x[walk] };
        if seen {
            continue;
        }
        let other = trace(side, walk, &mut visited_x, &mut visited_s)
            .expect("strand from a boundary node is open");
        strands.push((e, other));
    }
    for i in 0..slots {
        if !visited_x[x.top(i)] {
            let closed = trace(false, x.top(i), &mut visited_x, &mut visited_s);
            debug_assert!(closed.is_none());
            coef = coef.mul(&w.tau);
        }
    }

    let rinfo = |e: &E2| -> Option<(usize, Parity)> {
        match e {
            E2::XR(k) => Some((*k, x.right_flags[*k])),
            E2::SR(k) => Some((x.n_right + *k, st.right_flags[*k])),
            _ => None,
        }
    };
    let linfo = |e: &E2| -> Option<(usize, Parity)> {
        match e {
            E2::XL(k) => Some((*k, x.left_flags[*k])),
            E2::SL(k) => Some((x.n_left + *k, st.left_flags[*k])),
            _ => None,
        }
    };

    let mut survivors: Vec<(E2, E2)> = Vec::new();
    for (a, b) in strands {
        match (rinfo(&a), rinfo(&b), linfo(&a), linfo(&b)) {
            (Some((pa, fa)), Some((pb, fb)), _, _) => {
                let (lower, upper) = if pa < pb { (fa, fb) } else { (fb, fa) };
                let factor = match (lower, upper) {
                    (Parity::Even, Parity::Odd) => &w.r_even_odd,
                    (Parity::Odd, Parity::Even) => &w.r_odd_even,
                    _ => panic!("same-parity right-wall strand"),
                };
                coef = coef.mul(factor);
            }
            (_, _, Some((pa, fa)), Some((pb, fb))) => {
                let (lower, upper) = if pa < pb { (fa, fb) } else { (fb, fa) };
                let factor = match (lower, upper) {
                    (Parity::Even, Parity::Odd) => &w.l_even_odd,
                    (Parity::Odd, Parity::Even) => &w.l_odd_even,
                    _ => panic!("same-parity left-wall strand"),
                };
                coef = coef.mul(factor);
            }
            (Some(_), None, None, Some(_)) | (None, Some(_), Some(_), None) => match &w.theta {
                Some(th) => coef = coef.mul(th),
                None => survivors.push((a, b)),
            },
            _ => survivors.push((a, b)),
        }
    }

    if coef.is_zero() {
        return Ok((coef, None));
    }

    let mut right_nodes: Vec<(E2, Parity)> = Vec::new();
    let mut left_nodes: Vec<(E2, Parity)> = Vec::new();
    let present =
        |e: &E2, survivors: &Vec<(E2, E2)>| survivors.iter().any(|(a, b)| a == e || b == e);
    for k in 0..x.n_right {
        let e = E2::XR(k);
        if present(&e, &survivors) {
            right_nodes.push((e, x.right_flags[k]));
        }
    }
    for k in 0..st.n_right {
        let e = E2::SR(k);
        if present(&e, &survivors) {
            right_nodes.push((e, st.right_flags[k]));
        }
    }
    for k in 0..x.n_left {
        let e = E2::XL(k);
        if present(&e, &survivors) {
            left_nodes.push((e, x.left_flags[k]));
        }
    }
    for k in 0..st.n_left {
        let e = E2::SL(k);
        if present(&e, &survivors) {
            left_nodes.push((e, st.left_flags[k]));
        }
    }

    let n_right = right_nodes.len();
    let n_left = left_nodes.len();
    let mut out = HalfDiagram {
        m: x.m,
        r: x.r,
        n_right,
        n_left,
        pairing: vec![usize::MAX; slots + n_right + n_left],
        right_flags: right_nodes.iter().map(|(_, f)| *f).collect(),
        left_flags: left_nodes.iter().map(|(_, f)| *f).collect(),
    };
    let locate = |e: &E2, out: &HalfDiagram| -> usize {
        match e {
            E2::XBot(i) => out.bot(*i),
            _ => {
                if let Some(p) = right_nodes.iter().position(|(x, _)| x == e) {
                    out.rstub(p)
                } else {
                    let p = left_nodes.iter().position(|(x, _)| x == e).unwrap();
                    out.lstub(p)
                }
            }
        }
    };
    for (a, b) in &survivors {
        let na = locate(a, &out);
        let nb = locate(b, &out);
        out.pairing[na] = nb;
        out.pairing[nb] = na;
    }
    out.check_planar()?;
    Ok((coef, Some(out)))
}

/// Act with a formal sum of diagrams on a formal sum of states.
pub fn act<R: Ring>(
    w: &Weights<R>,
    x: &AlgebraElement<R>,
    state: &StateSum<R>,
) -> Result<StateSum<R>, DiagramError> {
    let mut out = StateSum::zero();
    for (dx, cx) in x.iter() {
        for (st, cs) in state.iter() {
            let (c, d) = act_diagram(w, dx, st)?;
            if let Some(d) = d {
                out.add_term(d, cx.mul(cs).mul(&c));
            }
        }
    }
    Ok(out)
}

// --- basis enumeration -------------------------------------------------------

/// All basis diagrams. The bulk basis is enumerated directly through the
/// folded chord diagrams; the boundary bases are the closure of the
/// generators under multiplication.
pub fn enumerate_basis(
    m: usize,
    r: usize,
    boundary: BoundaryMode,
    star1: bool,
) -> Result<Vec<AlgebraDiagram>, DiagramError> {
    match boundary {
        BoundaryMode::None => Ok(enumerate_basis_bulk(m, r)),
        BoundaryMode::Right => Ok(closure_basis(m, r, boundary, star1)),
        BoundaryMode::Both => {
            if !star1 {
                return Err(DiagramError::ThetaRequired);
            }
            Ok(closure_basis(m, r, boundary, true))
        }
    }
}

/// Bulk basis: planar matchings of the folded diagram satisfying the
/// endpoint congruence.
fn enumerate_basis_bulk(m: usize, r: usize) -> Vec<AlgebraDiagram> {
    let slots = m * r;
    let mut out = Vec::new();
    for c in enumerate_cond_a_diagrams(2 * slots, r) {
        // Fold position p (1-based): bottom slot i is p = i + 1, top slot i
        // is p = 2rm - i.
        let mut d = AlgebraDiagram {
            m,
            r,
            boundary: BoundaryMode::None,
            n_right: 0,
            n_left: 0,
            pairing: vec![usize::MAX; 2 * slots],
            right_flags: Vec::new(),
            left_flags: Vec::new(),
        };
        let unfold = |p: usize, d: &AlgebraDiagram| -> usize {
            if p <= slots {
                d.bot(p - 1)
            } else {
                d.top(2 * slots - p)
            }
        };
        for &(p, q) in &c.arches {
            let a = unfold(p, &d);
            let b = unfold(q, &d);
            d.pairing[a] = b;
            d.pairing[b] = a;
        }
        debug_assert!(d.check_planar().is_ok());
        out.push(d);
    }
    out.sort();
    out
}

/// Closure of the generators under left multiplication, starting from the
/// identity.
fn closure_basis(m: usize, r: usize, boundary: BoundaryMode, star1: bool) -> Vec<AlgebraDiagram> {
    let w = Weights::canonical(star1);
    let mut gens: Vec<AlgebraDiagram> = Vec::new();
    let lo = if boundary == BoundaryMode::Both { 0 } else { 1 };
    for i in lo..=m {
        for s in 1..=r {
            gens.push(generator_e(i, s, m, r, boundary).unwrap());
        }
    }
    let mut basis: Vec<AlgebraDiagram> = vec![AlgebraDiagram::identity(m, r, boundary)];
    let mut queue: Vec<AlgebraDiagram> = basis.clone();
    while let Some(d) = queue.pop() {
        for g in &gens {
            let (_, nd) = multiply_diagrams(&w, &d, g).expect("shapes agree");
            if let Some(nd) = nd {
                if !basis.contains(&nd) {
                    basis.push(nd.clone());
                    queue.push(nd);
                }
            }
        }
    }
    basis.sort();
    basis
}

/// The dimension of the algebra: the number of basis diagrams.
pub fn dimension(
    m: usize,
    r: usize,
    boundary: BoundaryMode,
    star1: bool,
) -> Result<BigInt, DiagramError> {
    Ok(BigInt::from(enumerate_basis(m, r, boundary, star1)?.len()))
}

// --- symmetric-diagram counts ------------------------------------------------

/// `V` and `K` counts from weighted symmetric-diagram sums: `V` sums
/// `1 + (midline crossings)` over symmetric constrained diagrams of size
/// `n`, `K` sums the folded-diagram weight over the vertically symmetric
/// folds of constrained diagrams of size `2n`.
pub fn count_vk(n: usize, r: usize) -> (BigInt, BigInt) {
    let mut v = BigInt::from(0u8);
    for c in enumerate_cond_a_diagrams(2 * r * n, r) {
        if c.is_symmetric() {
            v += BigInt::from(1 + c.crossing_arches().len());
        }
    }
    let mut k = BigInt::from(0u8);
    let half = 2 * r * n; // points per edge of the fold
    for c in enumerate_cond_a_diagrams(2 * half, r) {
        let flip = |p: usize| -> usize {
            if p <= half {
                half + 1 - p
            } else {
                3 * half + 1 - p
            }
        };
        let symmetric = c.arches.iter().all(|&(a, b)| {
            let (x, y) = (flip(a), flip(b));
            let arch = if x < y { (x, y) } else { (y, x) };
            c.arches.binary_search(&arch).is_ok()
        });
        if !symmetric {
            continue;
        }
        let vertical = c
            .arches
            .iter()
            .filter(|&&(a, b)| a <= half && b > half)
            .count();
        let wt = if vertical > 0 {
            BigInt::from(vertical / 2)
        } else {
            let mid_bottom = half / 2;
            let v_down = 1 + c
                .arches
                .iter()
                .filter(|&&(a, b)| a <= mid_bottom && b > mid_bottom && b <= half)
                .count();
            let mid_top = half + half / 2;
            let v_up = 1 + c
                .arches
                .iter()
                .filter(|&&(a, b)| a > half && a <= mid_top && b > mid_top)
                .count();
            BigInt::from(v_down * v_up)
        };
        k += wt;
    }
    (v, k)
}

/// The count of flip-symmetric one-boundary diagrams with at most `2r`
/// end points, all attached to bundles of the same parity as `m`.
pub fn gamma_count(m: usize, r: usize) -> BigInt {
    let basis = enumerate_basis(m, r, BoundaryMode::Right, false).expect("right mode");
    let mut count = 0usize;
    for d in &basis {
        if d.n_right > 2 * r {
            continue;
        }
        if d.hflip() != *d {
            continue;
        }
        let mut ok = true;
        for kk in 0..d.n_right {
            let p = d.pairing[d.rstub(kk)];
            let bundle = match d.classify(p) {
                Node::Bot(i) | Node::Top(i) => d.bundle_of_slot(i),
                _ => {
                    ok = false;
                    break;
                }
            };
            if bundle % 2 != m % 2 {
                ok = false;
                break;
            }
        }
        if ok {
            count += 1;
        }
    }
    BigInt::from(count)
}

// --- relation verification ---------------------------------------------------

/// Outcome of one checked relation.
#[derive(Clone, Debug)]
pub struct RelationCheck {
    pub description: String,
    pub pass: bool,
}

/// Check every relation family of the bulk algebra presentation by diagram
/// multiplication: squares, commutations, and the two braid-like families
/// with their case splits.
pub fn verify_relations(m: usize, r: usize) -> Vec<RelationCheck> {
    use core::fmt::Write;
    let w: Weights<LaurentPoly> = Weights::canonical(false);
    let boundary = BoundaryMode::None;
    let gen = |i: usize, s: usize| -> AlgebraElement<LaurentPoly> {
        AlgebraElement::basis(generator_e(i, s, m, r, boundary).unwrap())
    };
    let mul = |a: &AlgebraElement<LaurentPoly>, b: &AlgebraElement<LaurentPoly>| {
        multiply(&w, a, b).unwrap()
    };
    let tau_pow = |k: usize| LaurentPoly::tau().pow(k as u32);
    let mut checks: Vec<RelationCheck> = Vec::new();

    // E_i^(s) E_i^(s') = tau^min E_i^(max)
    for i in 1..m {
        for s in 1..=r {
            for s2 in 1..=r {
                let lhs = mul(&gen(i, s), &gen(i, s2));
                let rhs = gen(i, s.max(s2)).scale(&tau_pow(s.min(s2)));
                let mut d = String::new();
                let _ = write!(
                    d,
                    "E{}^({}) E{}^({}) = tau^{} E{}^({})",
                    i,
                    s,
                    i,
                    s2,
                    s.min(s2),
                    i,
                    s.max(s2)
                );
                checks.push(RelationCheck {
                    description: d,
                    pass: lhs == rhs,
                });
            }
        }
    }
    // Commutation: |i-j| > 1 always; |i-j| = 1 when s + s' <= r.
    for i in 1..m {
        for j in 1..m {
            for s in 1..=r {
                for s2 in 1..=r {
                    let far = i.abs_diff(j) > 1;
                    let near = i.abs_diff(j) == 1 && s + s2 <= r;
                    if !(far || near) {
                        continue;
                    }
                    let lhs = mul(&gen(i, s), &gen(j, s2));
                    let rhs = mul(&gen(j, s2), &gen(i, s));
                    let mut d = String::new();
                    let _ = write!(d, "E{}^({}) E{}^({}) commute", i, s, j, s2);
                    checks.push(RelationCheck {
                        description: d,
                        pass: lhs == rhs,
                    });
                }
            }
        }
    }
    // E_i E_{i+1} E_i family with its case split.
    for i in 1..m.saturating_sub(1) {
        for s in 1..=r {
            for s2 in 1..=r {
                for s3 in 1..=r {
                    let lhs = mul(&mul(&gen(i, s), &gen(i + 1, s2)), &gen(i, s3));
                    let rhs = if s == r && s3 == r {
                        Some(gen(i, r).scale(&tau_pow(r - s2)))
                    } else if s <= s3 && s3 < r && s + s2 >= r {
                        Some(mul(&gen(i + 1, r - s), &gen(i, s3)).scale(&tau_pow(r - s2)))
                    } else if r > s && s >= s3 && s3 + s >= r {
                        Some(mul(&gen(i, s), &gen(i + 1, r - s3)).scale(&tau_pow(r - s2)))
                    } else {
                        None
                    };
                    if let Some(rhs) = rhs {
                        let mut d = String::new();
                        let _ = write!(
                            d,
                            "E{}^({}) E{}^({}) E{}^({}) reduction",
                            i,
                            s,
                            i + 1,
                            s2,
                            i,
                            s3
                        );
                        checks.push(RelationCheck {
                            description: d,
                            pass: lhs == rhs,
                        });
                    }
                }
            }
        }
    }
    // E_{i+1} E_i E_{i+1} family.
    for i in 1..m.saturating_sub(1) {
        for s in 1..=r {
            for s2 in 1..=r {
                for s3 in 1..=r {
                    let lhs = mul(&mul(&gen(i + 1, s), &gen(i, s2)), &gen(i + 1, s3));
                    let rhs = if s == r && s3 == r {
                        Some(gen(i + 1, r).scale(&tau_pow(r - s2)))
                    } else if s <= s3 && s3 < r && s + s2 >= r {
                        Some(mul(&gen(i, r - s), &gen(i + 1, s3)).scale(&tau_pow(r - s2)))
                    } else if r > s && s >= s3 && s3 + s2 >= r {
                        Some(mul(&gen(i + 1, s), &gen(i, r - s3)).scale(&tau_pow(r - s2)))
                    } else {
                        None
                    };
                    if let Some(rhs) = rhs {
                        let mut d = String::new();
                        let _ = write!(
                            d,
                            "E{}^({}) E{}^({}) E{}^({}) reduction",
                            i + 1,
                            s,
                            i,
                            s2,
                            i + 1,
                            s3
                        );
                        checks.push(RelationCheck {
                            description: d,
                            pass: lhs == rhs,
                        });
                    }
                }
            }
        }
    }
    checks
}
