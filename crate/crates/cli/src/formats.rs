//! Text and JSON serializations of the domain objects.

use fusscat_core::boundary::{PrimedChain, PrimedSymNcPartition};
use fusscat_core::chains::RChain;
use fusscat_core::chords::ChordDiagram;
use fusscat_core::diagram::{AlgebraDiagram, AlgebraElement, BoundaryMode, HalfDiagram, Parity};
use fusscat_core::noncrossing::{parse_partition, NcPartition};
use fusscat_core::paths::Step;
use fusscat_core::rings::{BigRational, LaurentPoly};
use num_bigint::BigInt;
use serde_json::{json, Map, Value};
use std::collections::BTreeSet;
use std::str::FromStr;

pub fn word_string(w: &[Step]) -> String {
    w.iter()
        .map(|s| if *s == Step::U { 'U' } else { 'R' })
        .collect()
}

// --- Laurent polynomials -------------------------------------------------------

/// JSON form: list of `{"exp": [e_q, e_qn, e_q0, e_t], "coef": "<int>"}`.
pub fn laurent_to_json(p: &LaurentPoly) -> Value {
    let terms: Vec<Value> = p
        .terms()
        .map(|(exp, coef)| {
            json!({
                "exp": [exp[0], exp[1], exp[2], exp[3]],
                "coef": coef.to_string(),
            })
        })
        .collect();
    Value::Array(terms)
}

#[cfg_attr(not(test), allow(dead_code))] // parse side of the documented format; exercised by the round-trip tests
pub fn laurent_from_json(v: &Value) -> Result<LaurentPoly, String> {
    let arr = v.as_array().ok_or("expected an array of terms")?;
    let mut out = LaurentPoly::zero();
    for t in arr {
        let exp = t
            .get("exp")
            .and_then(|e| e.as_array())
            .ok_or("term missing exp")?;
        if exp.len() != 4 {
            return Err("exp must have four entries".into());
        }
        let mut es = [0i32; 4];
        for (i, e) in exp.iter().enumerate() {
            es[i] = e.as_i64().ok_or("bad exponent")? as i32;
        }
        let coef = t
            .get("coef")
            .and_then(|c| c.as_str())
            .ok_or("term missing coef")?;
        let coef = BigInt::from_str(coef).map_err(|e| e.to_string())?;
        out = out.add(&LaurentPoly::monomial(es, coef));
    }
    Ok(out)
}

// --- chord diagrams ------------------------------------------------------------

pub fn chord_to_json(c: &ChordDiagram) -> Value {
    json!({
        "points": c.num_points,
        "arches": c.arches.iter().map(|&(a, b)| json!([a, b])).collect::<Vec<_>>(),
        "right_ends": c.right_ends,
        "left_ends": c.left_ends,
        "dots": c.dots.iter().map(|&(a, b)| json!([a, b])).collect::<Vec<_>>(),
    })
}

pub fn chord_from_json(v: &Value) -> Result<ChordDiagram, String> {
    let points = v
        .get("points")
        .and_then(|x| x.as_u64())
        .ok_or("missing points")? as usize;
    let pairs = |key: &str| -> Result<Vec<(usize, usize)>, String> {
        match v.get(key) {
            None => Ok(Vec::new()),
            Some(arr) => arr
                .as_array()
                .ok_or_else(|| format!("{} must be an array", key))?
                .iter()
                .map(|p| {
                    let p = p.as_array().ok_or("pair must be an array")?;
                    Ok((
                        p[0].as_u64().ok_or("bad point")? as usize,
                        p[1].as_u64().ok_or("bad point")? as usize,
                    ))
                })
                .collect(),
        }
    };
    let ints = |key: &str| -> Result<Vec<usize>, String> {
        match v.get(key) {
            None => Ok(Vec::new()),
            Some(arr) => arr
                .as_array()
                .ok_or_else(|| format!("{} must be an array", key))?
                .iter()
                .map(|p| Ok(p.as_u64().ok_or("bad point")? as usize))
                .collect(),
        }
    };
    let c = ChordDiagram {
        num_points: points,
        arches: pairs("arches")?,
        right_ends: ints("right_ends")?,
        left_ends: ints("left_ends")?,
        dots: pairs("dots")?,
    };
    c.validate().map_err(|e| e.to_string())?;
    Ok(c)
}

/// A small multi-line arc sketch of an undecorated diagram.
pub fn chord_ascii(c: &ChordDiagram) -> String {
    let n = c.num_points;
    // Depth of each arch = nesting level.
    let mut rows: Vec<Vec<char>> = Vec::new();
    let mut depth_of = vec![0usize; c.arches.len()];
    for (k, &(a, b)) in c.arches.iter().enumerate() {
        let mut d = 0;
        for &(x, y) in &c.arches {
            if x < a && b < y {
                d += 1;
            }
        }
        depth_of[k] = d;
        if d + 1 > rows.len() {
            rows.resize(d + 1, Vec::new());
        }
    }
    let maxd = rows.len();
    let width = 2 * n;
    let mut grid = vec![vec![' '; width]; maxd];
    for (k, &(a, b)) in c.arches.iter().enumerate() {
        let row = maxd - 1 - depth_of[k];
        let (x0, x1) = (2 * (a - 1), 2 * (b - 1));
        grid[row][x0] = '.';
        grid[row][x1] = '.';
        for x in (x0 + 1)..x1 {
            if grid[row][x] == ' ' {
                grid[row][x] = '_';
            }
        }
    }
    let mut out = String::new();
    for row in grid {
        out.push_str(&row.into_iter().collect::<String>());
        out.push('\n');
    }
    for p in 1..=n {
        out.push_str(&format!(
            "{}{}",
            if c.left_ends.contains(&p) {
                "<"
            } else if c.right_ends.contains(&p) {
                ">"
            } else {
                "*"
            },
            " "
        ));
    }
    out.push('\n');
    out
}

// --- algebra diagrams and elements ----------------------------------------------

fn parity_str(p: Parity) -> &'static str {
    match p {
        Parity::Odd => "odd",
        Parity::Even => "even",
    }
}

#[cfg_attr(not(test), allow(dead_code))] // parse side of the documented format; exercised by the round-trip tests
fn parity_from(s: &str) -> Result<Parity, String> {
    match s {
        "odd" => Ok(Parity::Odd),
        "even" => Ok(Parity::Even),
        _ => Err(format!("bad parity {:?}", s)),
    }
}

/// Diagram JSON: the chord schema on points 1..2rm (bottom slots then top
/// slots, both left to right) extended by `bottom_stubs`/`top_stubs` (the
/// stub-carrying points per edge). Wall stubs are listed bottom-to-top with
/// their parities.
pub fn algebra_diagram_to_json(d: &AlgebraDiagram) -> Value {
    let (strands, right, left) = d.parts();
    let slots = d.m * d.r;
    let stub_points = |v: &Vec<(usize, Parity)>, bottom: bool| -> Vec<usize> {
        v.iter()
            .map(|&(p, _)| p)
            .filter(|&p| if bottom { p >= 1 && p <= slots } else { p > slots })
            .collect()
    };
    let mut bottom_stubs: Vec<usize> = stub_points(&right, true);
    bottom_stubs.extend(stub_points(&left, true));
    bottom_stubs.sort_unstable();
    let mut top_stubs: Vec<usize> = stub_points(&right, false);
    top_stubs.extend(stub_points(&left, false));
    top_stubs.sort_unstable();
    json!({
        "points": 2 * slots,
        "bundles": d.m,
        "bundle_size": d.r,
        "boundary": match d.boundary {
            BoundaryMode::None => "none",
            BoundaryMode::Right => "right",
            BoundaryMode::Both => "both",
        },
        "arches": strands.iter().map(|&(a, b)| json!([a, b])).collect::<Vec<_>>(),
        "right_ends": right
            .iter()
            .map(|&(p, f)| json!({"point": p, "parity": parity_str(f)}))
            .collect::<Vec<_>>(),
        "left_ends": left
            .iter()
            .map(|&(p, f)| json!({"point": p, "parity": parity_str(f)}))
            .collect::<Vec<_>>(),
        "bottom_stubs": bottom_stubs,
        "top_stubs": top_stubs,
    })
}

#[cfg_attr(not(test), allow(dead_code))] // parse side of the documented format; exercised by the round-trip tests
pub fn algebra_diagram_from_json(v: &Value) -> Result<AlgebraDiagram, String> {
    let m = v.get("bundles").and_then(|x| x.as_u64()).ok_or("missing bundles")? as usize;
    let r = v
        .get("bundle_size")
        .and_then(|x| x.as_u64())
        .ok_or("missing bundle_size")? as usize;
    let boundary = match v.get("boundary").and_then(|x| x.as_str()) {
        Some("none") => BoundaryMode::None,
        Some("right") => BoundaryMode::Right,
        Some("both") => BoundaryMode::Both,
        _ => return Err("missing boundary".into()),
    };
    let strands: Vec<(usize, usize)> = v
        .get("arches")
        .and_then(|x| x.as_array())
        .ok_or("missing arches")?
        .iter()
        .map(|p| {
            let p = p.as_array().ok_or("pair must be an array")?;
            Ok::<(usize, usize), String>((
                p[0].as_u64().ok_or("bad point")? as usize,
                p[1].as_u64().ok_or("bad point")? as usize,
            ))
        })
        .collect::<Result<_, _>>()?;
    let ends = |key: &str| -> Result<Vec<(usize, Parity)>, String> {
        match v.get(key) {
            None => Ok(Vec::new()),
            Some(arr) => arr
                .as_array()
                .ok_or("ends must be an array")?
                .iter()
                .map(|e| {
                    let p = e.get("point").and_then(|x| x.as_u64()).ok_or("bad end")? as usize;
                    let f = parity_from(e.get("parity").and_then(|x| x.as_str()).ok_or("bad end")?)?;
                    Ok((p, f))
                })
                .collect(),
        }
    };
    AlgebraDiagram::from_parts(m, r, boundary, &strands, &ends("right_ends")?, &ends("left_ends")?)
        .map_err(|e| e.to_string())
}

pub fn element_to_json(x: &AlgebraElement<LaurentPoly>) -> Value {
    let terms: Vec<Value> = x
        .iter()
        .map(|(d, c)| {
            json!({
                "diagram": algebra_diagram_to_json(d),
                "coef": laurent_to_json(c),
            })
        })
        .collect();
    Value::Array(terms)
}

#[cfg_attr(not(test), allow(dead_code))] // parse side of the documented format; exercised by the round-trip tests
pub fn element_from_json(v: &Value) -> Result<AlgebraElement<LaurentPoly>, String> {
    let arr = v.as_array().ok_or("expected an array of terms")?;
    let mut out = AlgebraElement::zero();
    for t in arr {
        let d = algebra_diagram_from_json(t.get("diagram").ok_or("term missing diagram")?)?;
        let c = laurent_from_json(t.get("coef").ok_or("term missing coef")?)?;
        out.add_term(d, c);
    }
    Ok(out)
}

// --- states ---------------------------------------------------------------------

pub fn state_to_json(st: &HalfDiagram) -> Value {
    let c = st.to_chord();
    let mut v = chord_to_json(&c);
    let flags: Vec<Value> = st
        .stub_flags()
        .iter()
        .map(|&(p, left, f)| {
            json!({"point": p, "wall": if left { "left" } else { "right" }, "parity": parity_str(f)})
        })
        .collect();
    v.as_object_mut()
        .unwrap()
        .insert("end_parities".into(), Value::Array(flags));
    v
}

// --- rationals and reports -------------------------------------------------------

pub fn rational_string(x: &BigRational) -> String {
    if x.denom() == &BigInt::from(1) {
        x.numer().to_string()
    } else {
        format!("{}/{}", x.numer(), x.denom())
    }
}

pub fn report_to_json(r: &fusscat_core::integrability::Report) -> Value {
    let samples: Vec<Value> = r
        .samples
        .iter()
        .map(|s| {
            let mut params = Map::new();
            for (k, v) in &s.params {
                params.insert(k.clone(), Value::String(rational_string(v)));
            }
            json!({"params": Value::Object(params), "pass": s.pass})
        })
        .collect();
    json!({
        "what": r.what,
        "seed": r.seed,
        "samples": samples,
        "all_pass": r.all_pass(),
    })
}

// --- text parsing ------------------------------------------------------------------

/// Parse `136/2/4/5/78` or the comma form; `n` inferred from the largest
/// element unless given.
pub fn parse_ncp(text: &str, n: Option<usize>) -> Result<NcPartition, String> {
    let inferred = infer_n(text)?;
    let n = n.unwrap_or(inferred);
    parse_partition(n, text).map_err(|e| e.to_string())
}

fn infer_n(text: &str) -> Result<usize, String> {
    let mut max = 0usize;
    for part in text.split(['/', ';', '[', ']']) {
        if part.is_empty() {
            continue;
        }
        if part.contains(',') {
            for item in part.split(',') {
                let item = item.trim().trim_end_matches('\'');
                if item.is_empty() {
                    continue;
                }
                let x: usize = item.parse().map_err(|_| format!("bad element {:?}", item))?;
                max = max.max(x);
            }
        } else {
            for ch in part.chars() {
                if let Some(d) = ch.to_digit(10) {
                    max = max.max(d as usize);
                } else if ch != '\'' {
                    return Err(format!("unexpected character {:?}", ch));
                }
            }
        }
    }
    if max == 0 {
        return Err("empty partition".into());
    }
    Ok(max)
}

/// Parse a primed partition like `1'/2/34'/5`.
pub fn parse_primed(text: &str, n: Option<usize>) -> Result<PrimedSymNcPartition, String> {
    let inferred = infer_n(text)?;
    let n = n.unwrap_or(inferred);
    let compact = n <= 9 && !text.contains(',');
    let mut blocks: Vec<Vec<usize>> = Vec::new();
    let mut primed: BTreeSet<usize> = BTreeSet::new();
    for part in text.split('/') {
        let mut block = Vec::new();
        if compact {
            let chars: Vec<char> = part.trim().chars().collect();
            let mut i = 0;
            while i < chars.len() {
                let d = chars[i]
                    .to_digit(10)
                    .ok_or_else(|| format!("bad element in {:?}", part))?;
                let x = d as usize;
                i += 1;
                if i < chars.len() && chars[i] == '\'' {
                    primed.insert(x);
                    i += 1;
                }
                block.push(x);
            }
        } else {
            for item in part.split(',') {
                let item = item.trim();
                let (core, p) = match item.strip_suffix('\'') {
                    Some(c) => (c, true),
                    None => (item, false),
                };
                let x: usize = core.parse().map_err(|_| format!("bad element {:?}", item))?;
                if p {
                    primed.insert(x);
                }
                block.push(x);
            }
        }
        blocks.push(block);
    }
    let base = NcPartition::new(n, blocks).map_err(|e| e.to_string())?;
    PrimedSymNcPartition::new(base, primed)
        .map_err(|_| "not an admissible primed symmetric partition".to_string())
}

/// Parse a chain like `[1/2/3/4;14/23;1234]`.
pub fn parse_chain(text: &str, n: Option<usize>) -> Result<RChain, String> {
    let inner = text.trim().trim_start_matches('[').trim_end_matches(']');
    let inferred = infer_n(inner)?;
    let n = n.unwrap_or(inferred);
    let parts: Result<Vec<NcPartition>, String> = inner
        .split(';')
        .map(|p| parse_partition(n, p.trim()).map_err(|e| e.to_string()))
        .collect();
    RChain::new(parts?).map_err(|e| e.to_string())
}

/// Parse a primed chain like `[1'/2;1'/2']`.
pub fn parse_primed_chain(text: &str, n: Option<usize>) -> Result<PrimedChain, String> {
    let inner = text.trim().trim_start_matches('[').trim_end_matches(']');
    let inferred = infer_n(inner)?;
    let n = n.unwrap_or(inferred);
    let parts: Result<Vec<PrimedSymNcPartition>, String> = inner
        .split(';')
        .map(|p| parse_primed(p.trim(), Some(n)))
        .collect();
    PrimedChain::new(parts?).map_err(|_| "primed chain violates the chain conditions".to_string())
}

#[cfg(test)]
mod tests {
    use super::*;
    use fusscat_core::boundary::enumerate_primed;
    use fusscat_core::diagram::{enumerate_basis, BoundaryMode};
    use fusscat_core::noncrossing::enumerate_ncp;
    use fusscat_core::paths::enumerate_paths;
    use fusscat_core::rings::{VAR_Q, VAR_QN};

    #[test]
    fn laurent_json_round_trip() {
        let p = LaurentPoly::tau()
            .mul(&LaurentPoly::q_mixed(VAR_QN))
            .add(&LaurentPoly::var_pow(VAR_Q, -3))
            .add(&LaurentPoly::theta());
        let v = laurent_to_json(&p);
        assert_eq!(laurent_from_json(&v).unwrap(), p);
    }

    #[test]
    fn chord_json_round_trip() {
        for p in enumerate_paths(4, 1) {
            let c = fusscat_core::chords::path_to_matching(&p);
            let v = chord_to_json(&c);
            assert_eq!(chord_from_json(&v).unwrap(), c);
        }
        // A decorated diagram.
        let c = ChordDiagram {
            num_points: 4,
            arches: vec![(2, 3)],
            right_ends: vec![4],
            left_ends: vec![1],
            dots: vec![(2, 3)],
        };
        c.validate().unwrap();
        assert_eq!(chord_from_json(&chord_to_json(&c)).unwrap(), c);
    }

    #[test]
    fn element_json_round_trip() {
        for (m, r, b, star1) in [
            (3usize, 1usize, BoundaryMode::Right, false),
            (2, 2, BoundaryMode::Both, true),
        ] {
            for d in enumerate_basis(m, r, b, star1).unwrap() {
                let e = AlgebraElement::<LaurentPoly>::term(d, LaurentPoly::tau());
                let v = element_to_json(&e);
                assert_eq!(element_from_json(&v).unwrap(), e);
            }
        }
    }

    #[test]
    fn text_parsers() {
        for pi in enumerate_ncp(5) {
            assert_eq!(parse_ncp(&pi.to_string(), None).unwrap(), pi);
        }
        for p in enumerate_primed(4) {
            assert_eq!(parse_primed(&p.to_string(), None).unwrap(), p);
        }
        let c = parse_chain("[1/2/3/4;14/23;1234]", None).unwrap();
        assert_eq!(c.to_string(), "[1/2/3/4;14/23;1234]");
        let pc = parse_primed_chain("[1'/2;1'/2']", None).unwrap();
        assert_eq!(pc.to_string(), "[1'/2;1'/2']");
    }
}
