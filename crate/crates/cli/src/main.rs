//! Command-line front end: enumeration, bijections, generator actions, and
//! verification suites with machine-readable output.

mod formats;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use fusscat_core::boundary::{
    count_b, count_snc, enumerate_primed, enumerate_primed_chains, enumerate_snc,
    enumerate_symmetric_chains, generator_g1_basis, generator_g2_basis, generator_gs1_basis,
    generator_gs2_basis, primed_chain_state, snc_chain_state, PrimedChain,
};
use fusscat_core::chains::{
    build_tiling, enumerate_chains, extended_kreweras, kappa, kappa_inv, phi, psi_r, psi_r_inv,
    tiling_top_path, RChain,
};
use fusscat_core::chords::{
    check_cond_a, matching_to_path, matching_to_word, path_to_matching, rotate_sigma,
    rotate_sigma_r,
};
use fusscat_core::diagram::{
    act, dimension, enumerate_basis, generator_e, verify_relations, AlgebraElement, BoundaryMode,
    HalfDiagram, StateSum, Weights,
};
use fusscat_core::integrability::{verify_conditions, verify_re, verify_ybe, KBranch};
use fusscat_core::lincomb::LinComb;
use fusscat_core::noncrossing::{enumerate_ncp, kreweras, kreweras_inv, psi, psi_inv};
use fusscat_core::paths::{enumerate_paths, fuss_catalan, jdt_rotate, RDyckPath};
use fusscat_core::rings::LaurentPoly;

use formats::*;

#[derive(Parser)]
#[command(
    name = "fusscat",
    about = "Exact combinatorics of non-crossing partitions, generalized Dyck paths, \
             and the Temperley-Lieb / Fuss-Catalan diagram algebras",
    version
)]
struct Cli {
    /// Output format.
    #[arg(long, global = true, default_value = "text")]
    format: Format,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum CountWhat {
    /// Fuss-Catalan number.
    Fc,
    /// Non-crossing partitions.
    Ncp,
    /// Increasing r-chains.
    Chains,
    /// Symmetric non-crossing partitions.
    Snc,
    /// Primed symmetric partitions.
    Primed,
    /// Symmetric constrained diagrams.
    B,
    /// Two-boundary state count.
    V,
    /// Folded-diagram weight sum.
    K,
    /// Algebra dimension.
    Dim,
    /// Cover-exclusive tilings.
    Tilings,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum EnumWhat {
    Paths,
    Ncp,
    Chains,
    Snc,
    Primed,
    Basis,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum MapFn {
    Psi,
    PsiInv,
    Kappa,
    KappaInv,
    Phi,
    Kreweras,
    KrewerasInv,
    Xi,
    Sigma,
    Tiling,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Algebra {
    Tl,
    Fc,
    #[value(name = "1bfc")]
    OneBfc,
    #[value(name = "2bfc")]
    TwoBfc,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum VerifyWhat {
    TlRelations,
    FcRelations,
    #[value(name = "iso-1b")]
    Iso1b,
    #[value(name = "iso-2b")]
    Iso2b,
    Dims,
    Ybe,
    Re,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Branch {
    #[value(name = "generic+")]
    GenericPlus,
    #[value(name = "generic-")]
    GenericMinus,
    DegenerateE,
    DegenerateO,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum BoundaryArg {
    None,
    Right,
    Both,
}

#[derive(Subcommand)]
enum Command {
    /// Exact counts: Fuss-Catalan numbers and the dimension family.
    Count {
        #[arg(long)]
        what: CountWhat,
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 1)]
        r: usize,
        #[arg(long, default_value_t = 0)]
        epsilon: usize,
        #[arg(long, default_value = "none")]
        boundary: BoundaryArg,
        /// Enable the theta reduction of wall-to-wall strands.
        #[arg(long, default_value_t = false)]
        star1: bool,
    },
    /// List combinatorial families.
    Enumerate {
        #[arg(long)]
        what: EnumWhat,
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 1)]
        r: usize,
        #[arg(long, default_value_t = 0)]
        epsilon: usize,
        #[arg(long, default_value = "none")]
        boundary: BoundaryArg,
        #[arg(long, default_value_t = false)]
        star1: bool,
    },
    /// Apply a bijection or rotation to one object.
    Map {
        #[arg(long = "fn")]
        function: MapFn,
        #[arg(long)]
        input: String,
        #[arg(long)]
        n: Option<usize>,
        #[arg(long, default_value_t = 1)]
        r: usize,
    },
    /// Act with a generator word on a module state.
    Act {
        #[arg(long)]
        algebra: Algebra,
        /// Comma list like `E2^2,E3^1,E1^2` (leftmost acts last).
        #[arg(long)]
        word: String,
        /// A path word for tl/fc, a (primed) partition or chain for the
        /// boundary algebras. Without a state the product of the word is
        /// returned as an element of the algebra on `--n` bundled points.
        #[arg(long)]
        state: Option<String>,
        #[arg(long)]
        n: Option<usize>,
        #[arg(long, default_value_t = 1)]
        r: usize,
    },
    /// Run a verification sweep; exits 1 when a check fails.
    Verify {
        #[arg(long)]
        what: VerifyWhat,
        #[arg(long, default_value_t = 3)]
        m: usize,
        #[arg(long, default_value_t = 3)]
        n: usize,
        #[arg(long, default_value_t = 1)]
        r: usize,
        #[arg(long, default_value_t = 100)]
        samples: usize,
        #[arg(long, default_value_t = 7)]
        seed: u64,
        #[arg(long, default_value = "generic+")]
        branch: Branch,
        #[arg(long, default_value = "none")]
        boundary: BoundaryArg,
        #[arg(long, default_value_t = false)]
        star1: bool,
    },
}

fn main() {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => std::process::exit(code),
        Err(msg) => {
            eprintln!("error: {}", msg);
            std::process::exit(2);
        }
    }
}

fn bmode(b: BoundaryArg) -> BoundaryMode {
    match b {
        BoundaryArg::None => BoundaryMode::None,
        BoundaryArg::Right => BoundaryMode::Right,
        BoundaryArg::Both => BoundaryMode::Both,
    }
}

fn run(cli: Cli) -> Result<i32, String> {
    let fmt = cli.format;
    match cli.command {
        Command::Count {
            what,
            n,
            r,
            epsilon,
            boundary,
            star1,
        } => {
            let value: Value = match what {
                CountWhat::Fc => json!(fuss_catalan(n, r).to_string()),
                CountWhat::Ncp => json!(enumerate_ncp(n).len()),
                CountWhat::Chains => json!(enumerate_chains(n, r).len()),
                CountWhat::Snc => {
                    json!({
                        "closed_form": count_snc(n).to_string(),
                        "enumerated": enumerate_snc(n, epsilon).len(),
                    })
                }
                CountWhat::Primed => json!(enumerate_primed(n).len()),
                CountWhat::B => {
                    let (direct, chains) = count_b(n, r);
                    json!({"diagrams": direct.to_string(), "chains": chains.to_string()})
                }
                CountWhat::V => {
                    let (v, _) = fusscat_core::diagram::count_vk(n, r);
                    json!(v.to_string())
                }
                CountWhat::K => {
                    let (_, k) = fusscat_core::diagram::count_vk(n, r);
                    json!(k.to_string())
                }
                CountWhat::Dim => {
                    let d = dimension(n, r, bmode(boundary), star1).map_err(|e| e.to_string())?;
                    json!(d.to_string())
                }
                CountWhat::Tilings => {
                    let mut ts: Vec<_> = enumerate_chains(n, r).iter().map(build_tiling).collect();
                    ts.sort();
                    ts.dedup();
                    json!(ts.len())
                }
            };
            emit(fmt, &value);
            Ok(0)
        }
        Command::Enumerate {
            what,
            n,
            r,
            epsilon,
            boundary,
            star1,
        } => {
            let value: Value = match what {
                EnumWhat::Paths => Value::Array(
                    enumerate_paths(n, r)
                        .iter()
                        .map(|p| json!(p.to_string()))
                        .collect(),
                ),
                EnumWhat::Ncp => Value::Array(
                    enumerate_ncp(n).iter().map(|p| json!(p.to_string())).collect(),
                ),
                EnumWhat::Chains => Value::Array(
                    enumerate_chains(n, r)
                        .iter()
                        .map(|c| json!(c.to_string()))
                        .collect(),
                ),
                EnumWhat::Snc => Value::Array(
                    enumerate_snc(n, epsilon)
                        .iter()
                        .map(|p| json!(p.to_string()))
                        .collect(),
                ),
                EnumWhat::Primed => {
                    if r == 1 {
                        Value::Array(
                            enumerate_primed(n)
                                .iter()
                                .map(|p| json!(p.to_string()))
                                .collect(),
                        )
                    } else {
                        Value::Array(
                            enumerate_primed_chains(n, r)
                                .iter()
                                .map(|p| json!(p.to_string()))
                                .collect(),
                        )
                    }
                }
                EnumWhat::Basis => {
                    let basis =
                        enumerate_basis(n, r, bmode(boundary), star1).map_err(|e| e.to_string())?;
                    Value::Array(basis.iter().map(algebra_diagram_to_json).collect())
                }
            };
            emit_list(fmt, &value);
            Ok(0)
        }
        Command::Map {
            function,
            input,
            n,
            r,
        } => {
            let value = run_map(function, &input, n, r, fmt)?;
            emit(fmt, &value);
            Ok(0)
        }
        Command::Act {
            algebra,
            word,
            state,
            n,
            r,
        } => {
            let value = match state {
                Some(state) => run_act(algebra, &word, &state, n, r)?,
                None => run_product(algebra, &word, n, r)?,
            };
            emit(fmt, &value);
            Ok(0)
        }
        Command::Verify {
            what,
            m,
            n,
            r,
            samples,
            seed,
            branch,
            boundary,
            star1,
        } => run_verify(what, m, n, r, samples, seed, branch, boundary, star1, fmt),
    }
}

fn emit(fmt: Format, v: &Value) {
    match fmt {
        Format::Json => println!("{}", serde_json::to_string_pretty(v).unwrap()),
        Format::Text => match v {
            Value::String(s) => println!("{}", s),
            Value::Array(items) => {
                for it in items {
                    match it {
                        Value::String(s) => println!("{}", s),
                        other => println!("{}", other),
                    }
                }
            }
            Value::Object(map) => {
                for (k, val) in map {
                    match val {
                        Value::String(s) => println!("{}: {}", k, s),
                        other => println!("{}: {}", k, other),
                    }
                }
            }
            other => println!("{}", other),
        },
    }
}

fn emit_list(fmt: Format, v: &Value) {
    emit(fmt, v);
}

fn run_map(function: MapFn, input: &str, n: Option<usize>, r: usize, fmt: Format) -> Result<Value, String> {
    match function {
        MapFn::Psi => {
            if r == 1 {
                let pi = parse_ncp(input, n)?;
                let c = psi(&pi);
                Ok(map_chord_output(&c, fmt))
            } else {
                let chain = parse_chain(input, n)?;
                if chain.r() != r {
                    return Err("chain length does not match --r".into());
                }
                let c = psi_r(&chain);
                Ok(map_chord_output(&c, fmt))
            }
        }
        MapFn::PsiInv => {
            let c = if input.trim_start().starts_with('{') {
                let v: serde_json::Value =
                    serde_json::from_str(input).map_err(|e| e.to_string())?;
                chord_from_json(&v)?
            } else {
                let p = RDyckPath::parse(1, input).map_err(|e| e.to_string())?;
                path_to_matching(&p)
            };
            if r == 1 {
                let pi = psi_inv(&c).map_err(|e| e.to_string())?;
                Ok(json!(pi.to_string()))
            } else {
                if !check_cond_a(&c, r) {
                    return Err("input does not satisfy the endpoint congruence".into());
                }
                let chain = psi_r_inv(&c, r).map_err(|e| e.to_string())?;
                Ok(json!(chain.to_string()))
            }
        }
        MapFn::Kappa => {
            let chain = parse_chain(input, n)?;
            Ok(json!(kappa(&chain).to_string()))
        }
        MapFn::KappaInv => {
            let p = RDyckPath::parse(r, input).map_err(|e| e.to_string())?;
            let chain = kappa_inv(&p).map_err(|e| e.to_string())?;
            Ok(json!(chain.to_string()))
        }
        MapFn::Phi => {
            let chain = parse_chain(input, n)?;
            let c = phi(&chain);
            Ok(map_chord_output(&c, fmt))
        }
        MapFn::Kreweras => {
            if input.contains(';') || input.contains('[') {
                let chain = parse_chain(input, n)?;
                Ok(json!(extended_kreweras(&chain).to_string()))
            } else {
                let pi = parse_ncp(input, n)?;
                Ok(json!(kreweras(&pi).to_string()))
            }
        }
        MapFn::KrewerasInv => {
            if input.contains(';') || input.contains('[') {
                let chain = parse_chain(input, n)?;
                Ok(json!(
                    fusscat_core::chains::extended_kreweras_inv(&chain).to_string()
                ))
            } else {
                let pi = parse_ncp(input, n)?;
                Ok(json!(kreweras_inv(&pi).to_string()))
            }
        }
        MapFn::Xi => {
            let p = RDyckPath::parse(r, input).map_err(|e| e.to_string())?;
            Ok(json!(jdt_rotate(&p).to_string()))
        }
        MapFn::Sigma => {
            let p = RDyckPath::parse(1, input).map_err(|e| e.to_string())?;
            let c = path_to_matching(&p);
            let rotated = if r == 1 {
                rotate_sigma(&c)
            } else {
                rotate_sigma_r(&c, r).map_err(|e| e.to_string())?
            };
            Ok(json!(matching_to_path(&rotated).to_string()))
        }
        MapFn::Tiling => {
            let chain = parse_chain(input, n)?;
            let t = build_tiling(&chain);
            Ok(json!({
                "tiles": t.tiles.iter().map(|&(d, u)| json!([d, u])).collect::<Vec<_>>(),
                "top_path": word_string(&tiling_top_path(&t)),
            }))
        }
    }
}

fn map_chord_output(c: &fusscat_core::chords::ChordDiagram, fmt: Format) -> Value {
    let mut out = serde_json::Map::new();
    out.insert("diagram".into(), chord_to_json(c));
    if !c.is_decorated() {
        out.insert("word".into(), json!(word_string(&matching_to_word(c))));
    }
    if fmt == Format::Text {
        out.insert("sketch".into(), json!(chord_ascii(c)));
    }
    Value::Object(out)
}

fn parse_word(word: &str) -> Result<Vec<(usize, usize)>, String> {
    let mut out = Vec::new();
    for item in word.split(',') {
        let item = item.trim();
        let rest = item
            .strip_prefix('E')
            .or_else(|| item.strip_prefix('e'))
            .ok_or_else(|| format!("bad generator {:?}", item))?;
        let (i, s) = match rest.split_once('^') {
            Some((i, s)) => (
                i.parse::<usize>().map_err(|_| format!("bad index in {:?}", item))?,
                s.parse::<usize>().map_err(|_| format!("bad rank in {:?}", item))?,
            ),
            None => (
                rest.parse::<usize>().map_err(|_| format!("bad index in {:?}", item))?,
                1,
            ),
        };
        out.push((i, s));
    }
    Ok(out)
}

/// Multiply a generator word out as an element of the algebra.
fn run_product(algebra: Algebra, word: &str, n: Option<usize>, r: usize) -> Result<Value, String> {
    let gens = parse_word(word)?;
    let m = n.ok_or("element products need --n (the number of bundled points)")?;
    let (rr, mode, star1) = match algebra {
        Algebra::Tl => (1, BoundaryMode::None, false),
        Algebra::Fc => (r, BoundaryMode::None, false),
        Algebra::OneBfc => (r, BoundaryMode::Right, false),
        Algebra::TwoBfc => (r, BoundaryMode::Both, true),
    };
    let w: Weights<LaurentPoly> = Weights::canonical(star1);
    let mut acc = AlgebraElement::basis(fusscat_core::diagram::AlgebraDiagram::identity(
        m, rr, mode,
    ));
    for &(i, s) in &gens {
        let g = AlgebraElement::basis(generator_e(i, s, m, rr, mode).map_err(|e| e.to_string())?);
        acc = fusscat_core::diagram::multiply(&w, &acc, &g).map_err(|e| e.to_string())?;
    }
    Ok(element_to_json(&acc))
}

fn run_act(algebra: Algebra, word: &str, state: &str, n: Option<usize>, r: usize) -> Result<Value, String> {
    let gens = parse_word(word)?;
    match algebra {
        Algebra::Tl | Algebra::Fc => {
            let r = if algebra == Algebra::Tl { 1 } else { r };
            let p = RDyckPath::parse(r, state).map_err(|e| e.to_string())?;
            let nn = p.size();
            let m = 2 * nn;
            let c = fusscat_core::chords::path_to_gen_chord(&p);
            let _ = c;
            let chord = fusscat_core::chords::word_to_matching(p.word());
            if !check_cond_a(&chord, r) {
                return Err("state does not satisfy the endpoint congruence".into());
            }
            let st = HalfDiagram::from_chord(m, r, &chord).map_err(|e| e.to_string())?;
            let w: Weights<LaurentPoly> = Weights::canonical(false);
            let mut sum = StateSum::basis(st);
            for &(i, s) in gens.iter().rev() {
                if i == 0 || i >= m {
                    return Err("generator index out of range".into());
                }
                let e = AlgebraElement::basis(
                    generator_e(i, s, m, r, BoundaryMode::None).map_err(|e| e.to_string())?,
                );
                sum = act(&w, &e, &sum).map_err(|e| e.to_string())?;
            }
            let mut terms = Vec::new();
            for (d, coef) in sum.iter() {
                let chord = d.to_chord();
                terms.push(json!({
                    "state": word_string(&matching_to_word(&chord)),
                    "diagram": state_to_json(d),
                    "coef": laurent_to_json(coef),
                    "coef_text": coef.to_string(),
                }));
            }
            Ok(Value::Array(terms))
        }
        Algebra::OneBfc => {
            let chain = if state.contains(';') || state.contains('[') {
                parse_chain(state, n)?
            } else {
                RChain::new(vec![parse_ncp(state, n)?]).map_err(|e| e.to_string())?
            };
            if chain.r() != r {
                return Err("state rank does not match --r".into());
            }
            let nn = chain.n();
            let mut sum: LinComb<RChain, LaurentPoly> = LinComb::basis(chain);
            for &(i, s) in gens.iter().rev() {
                if i == 0 || i > nn {
                    return Err("generator index out of range".into());
                }
                sum = sum.map_basis(|c| {
                    if r == 1 {
                        generator_g1_basis(i, &c.parts()[0]).map_basis(|q| {
                            LinComb::basis(RChain::new(vec![q.clone()]).unwrap())
                        })
                    } else {
                        generator_gs1_basis(i, s, c)
                    }
                });
            }
            let mut terms = Vec::new();
            for (c, coef) in sum.iter() {
                terms.push(json!({
                    "state": c.to_string(),
                    "diagram": state_to_json(&snc_chain_state(c)),
                    "coef": laurent_to_json(coef),
                    "coef_text": coef.to_string(),
                }));
            }
            Ok(Value::Array(terms))
        }
        Algebra::TwoBfc => {
            let chain = if state.contains(';') || state.contains('[') {
                parse_primed_chain(state, n)?
            } else {
                PrimedChain::new(vec![parse_primed(state, n)?])
                    .map_err(|_| "invalid primed partition".to_string())?
            };
            if chain.r() != r {
                return Err("state rank does not match --r".into());
            }
            let nn = chain.n();
            let mut sum: LinComb<PrimedChain, LaurentPoly> = LinComb::basis(chain);
            for &(i, s) in gens.iter().rev() {
                if i > nn {
                    return Err("generator index out of range".into());
                }
                sum = sum.map_basis(|c| {
                    if r == 1 {
                        generator_g2_basis(i, &c.parts[0]).map_basis(|q| {
                            LinComb::basis(PrimedChain::new(vec![q.clone()]).unwrap())
                        })
                    } else {
                        generator_gs2_basis(i, s, c)
                    }
                });
            }
            let mut terms = Vec::new();
            for (c, coef) in sum.iter() {
                terms.push(json!({
                    "state": c.to_string(),
                    "diagram": state_to_json(&primed_chain_state(c)),
                    "coef": laurent_to_json(coef),
                    "coef_text": coef.to_string(),
                }));
            }
            Ok(Value::Array(terms))
        }
    }
}

#[allow(clippy::too_many_arguments)]
fn run_verify(
    what: VerifyWhat,
    m: usize,
    n: usize,
    r: usize,
    samples: usize,
    seed: u64,
    branch: Branch,
    boundary: BoundaryArg,
    star1: bool,
    fmt: Format,
) -> Result<i32, String> {
    match what {
        VerifyWhat::TlRelations | VerifyWhat::FcRelations => {
            let rr = if what == VerifyWhat::TlRelations { 1 } else { r };
            let checks = verify_relations(m, rr);
            let pass = checks.iter().all(|c| c.pass);
            let v = json!({
                "what": "relations",
                "m": m,
                "r": rr,
                "checks": checks
                    .iter()
                    .map(|c| json!({"relation": c.description, "pass": c.pass}))
                    .collect::<Vec<_>>(),
                "all_pass": pass,
            });
            emit(fmt, &v);
            Ok(if pass { 0 } else { 1 })
        }
        VerifyWhat::Iso1b => {
            let wb: Weights<LaurentPoly> = Weights::canonical(false);
            let mut failures = 0usize;
            let mut checks = 0usize;
            if r == 1 {
                for pi in enumerate_snc(n, 0) {
                    let st = StateSum::basis(fusscat_core::boundary::snc_state(&pi));
                    for i in 1..=n {
                        let lhs: StateSum<LaurentPoly> = generator_g1_basis(i, &pi)
                            .map_basis(|q| StateSum::basis(fusscat_core::boundary::snc_state(q)));
                        let e = AlgebraElement::basis(
                            generator_e(i, 1, n, 1, BoundaryMode::Right).map_err(|e| e.to_string())?,
                        );
                        let rhs = act(&wb, &e, &st).map_err(|e| e.to_string())?;
                        checks += 1;
                        if lhs != rhs {
                            failures += 1;
                        }
                    }
                }
            } else {
                for chain in enumerate_symmetric_chains(n, r) {
                    let st = StateSum::basis(snc_chain_state(&chain));
                    for i in 1..=n {
                        for s in 1..=r {
                            let lhs: StateSum<LaurentPoly> = generator_gs1_basis(i, s, &chain)
                                .map_basis(|q| StateSum::basis(snc_chain_state(q)));
                            let e = AlgebraElement::basis(
                                generator_e(i, s, n, r, BoundaryMode::Right)
                                    .map_err(|e| e.to_string())?,
                            );
                            let rhs = act(&wb, &e, &st).map_err(|e| e.to_string())?;
                            checks += 1;
                            if lhs != rhs {
                                failures += 1;
                            }
                        }
                    }
                }
            }
            let v = json!({"what": "iso-1b", "n": n, "r": r, "checks": checks, "failures": failures});
            emit(fmt, &v);
            Ok(if failures == 0 { 0 } else { 1 })
        }
        VerifyWhat::Iso2b => {
            let wt: Weights<LaurentPoly> = Weights::canonical(true);
            let mut failures = 0usize;
            let mut checks = 0usize;
            let chains: Vec<PrimedChain> = if r == 1 {
                enumerate_primed(n)
                    .into_iter()
                    .map(|p| PrimedChain::new(vec![p]).unwrap())
                    .collect()
            } else {
                enumerate_primed_chains(n, r)
            };
            for chain in chains {
                let st = StateSum::basis(primed_chain_state(&chain));
                for i in 0..=n {
                    for s in 1..=r {
                        let lhs: StateSum<LaurentPoly> = if r == 1 {
                            generator_g2_basis(i, &chain.parts[0]).map_basis(|q| {
                                let c = PrimedChain::new(vec![q.clone()]).unwrap();
                                StateSum::basis(primed_chain_state(&c))
                            })
                        } else {
                            generator_gs2_basis(i, s, &chain)
                                .map_basis(|q| StateSum::basis(primed_chain_state(q)))
                        };
                        let e = AlgebraElement::basis(
                            generator_e(i, s, n, r, BoundaryMode::Both).map_err(|e| e.to_string())?,
                        );
                        let rhs = act(&wt, &e, &st).map_err(|e| e.to_string())?;
                        checks += 1;
                        if lhs != rhs {
                            failures += 1;
                        }
                    }
                }
            }
            let v = json!({"what": "iso-2b", "n": n, "r": r, "checks": checks, "failures": failures});
            emit(fmt, &v);
            Ok(if failures == 0 { 0 } else { 1 })
        }
        VerifyWhat::Dims => {
            let mode = bmode(boundary);
            let d = dimension(m, r, mode, star1).map_err(|e| e.to_string())?;
            let (expected, source) = match mode {
                BoundaryMode::None => (fuss_catalan(m, r), "fuss_catalan(m, r)"),
                BoundaryMode::Right => (count_b(2 * m, r).0, "symmetric diagram count B_{2m}"),
                BoundaryMode::Both => {
                    (fusscat_core::diagram::count_vk(m, r).1, "folded-diagram weight sum K_m")
                }
            };
            let pass = d == expected;
            let v = json!({
                "what": "dims",
                "m": m,
                "r": r,
                "boundary": match mode {
                    BoundaryMode::None => "none",
                    BoundaryMode::Right => "right",
                    BoundaryMode::Both => "both",
                },
                "dimension": d.to_string(),
                "expected": expected.to_string(),
                "expected_source": source,
                "pass": pass,
            });
            emit(fmt, &v);
            Ok(if pass { 0 } else { 1 })
        }
        VerifyWhat::Ybe => {
            let report = verify_ybe(samples, seed);
            let pass = report.all_pass();
            emit(fmt, &report_to_json(&report));
            Ok(if pass { 0 } else { 1 })
        }
        VerifyWhat::Re => {
            let b = match branch {
                Branch::GenericPlus => KBranch::Generic { plus_sign: true },
                Branch::GenericMinus => KBranch::Generic { plus_sign: false },
                Branch::DegenerateE => KBranch::DegenerateE,
                Branch::DegenerateO => KBranch::DegenerateO,
            };
            let re = verify_re(samples, seed, b);
            let cond = verify_conditions(samples, seed, b);
            let pass = re.all_pass() && cond.all_pass();
            let v = json!({
                "reflection_equation": report_to_json(&re),
                "scalar_conditions": report_to_json(&cond),
                "all_pass": pass,
            });
            emit(fmt, &v);
            Ok(if pass { 0 } else { 1 })
        }
    }
}
