use std::path::Path;

use anyhow::{Context, Result};
use serde_json::json;
use slicecert_core::catalog;
use slicecert_core::certify::{certify, lbeta_bundle, pair_label, CertifyOptions, DerivedPair, Verdict};
use slicecert_core::diagram::LinkDiagram;
use slicecert_core::json::{to_canonical, JsonInt};
use slicecert_core::milnor::{is_homotopically_trivial, is_ht_plus_pair, mu_bar, resolve_labels, HomotopyVerdict};
use slicecert_core::scalc::{
    good_basis_form_check, moves_to_json, normalize_sequence, reduce_to_null, s_equivalent_bounded, EquivalenceCaps,
    ReductionSites, SearchOutcome,
};
use slicecert_core::seifert::{parse_matrix_file, validate};
use slicecert_core::{Bundle, Int, MoveSequence, SeifertMatrix};

use crate::io::{
    digest_of, load_closed_diagram, load_diagram, load_matrix, load_moves, read_text, usage, write_artifact,
    write_file, EXIT_FAILED, EXIT_INCONCLUSIVE, EXIT_OK,
};
use crate::{CatalogAction, CertifyArgs, Command};

pub fn run(cmd: Command) -> Result<u8> {
    match cmd {
        Command::Validate { matrix } => validate_cmd(&matrix),
        Command::Reduce { matrix, budget, front_only, output } => {
            reduce(&matrix, budget, front_only, output.as_deref())
        }
        Command::Goodbasis { matrix, output } => goodbasis(&matrix, output.as_deref()),
        Command::Replay { matrix, moves, expect, output } => {
            replay(&matrix, &moves, expect.as_deref(), output.as_deref())
        }
        Command::Normalize { matrix, moves, output } => normalize(&matrix, &moves, output.as_deref()),
        Command::Mu { diagram, index, depth, output } => mu(&diagram, &index, depth, output.as_deref()),
        Command::Ht { diagram, output } => ht(&diagram, output.as_deref()),
        Command::Htplus { diagram, sublink, link, output } => {
            htplus(&diagram, sublink.as_deref(), link.as_deref(), output.as_deref())
        }
        Command::Certify(args) => certify_cmd(args),
        Command::Lbeta { beta, bundle_out, output, depth } => {
            lbeta(&beta, bundle_out.as_deref(), output.as_deref(), depth)
        }
        Command::Catalog { action } => catalog_cmd(action),
        Command::Sequiv { a, b, budget, size_cap, entry_cap, enlarge_entry_cap, output } => {
            let caps = EquivalenceCaps { size_cap, entry_cap, enlarge_entry_cap, node_budget: budget };
            sequiv(&a, &b, &caps, output.as_deref())
        }
    }
}

fn validate_cmd(path: &Path) -> Result<u8> {
    let text = read_text(path)?;
    let cand = parse_matrix_file::<Int>(&text).with_context(|| format!("matrix {}", path.display()))?;
    let report = validate(&cand).with_context(|| format!("matrix {}", path.display()))?;
    let side = cand.rows.len();
    if report.valid() {
        println!(
            "valid: {}-component boundary link Seifert matrix, side {side}, blocks {:?}",
            cand.block_sizes.len(),
            cand.block_sizes
        );
        return Ok(EXIT_OK);
    }
    println!("invalid: {} violation(s)", report.violations.len());
    for v in &report.violations {
        println!("  blocks ({}, {}): {}", v.blocks.0 + 1, v.blocks.1 + 1, v.detail);
    }
    Ok(EXIT_FAILED)
}

fn search_summary(what: &str, outcome: &SearchOutcome<Int>, output: Option<&Path>) -> Result<u8> {
    match outcome {
        SearchOutcome::Found(seq) => {
            println!("{what}: found, {} moves", seq.moves.len());
            if write_artifact(output, &seq.moves_to_json())? {
                println!("moves written to {}", output.expect("written").display());
            }
            Ok(EXIT_OK)
        }
        SearchOutcome::Exhausted { nodes } => {
            println!("{what}: none within the search space ({nodes} states)");
            Ok(EXIT_FAILED)
        }
        SearchOutcome::BudgetExceeded { nodes } => {
            println!("{what}: inconclusive, budget exhausted after {nodes} states");
            Ok(EXIT_INCONCLUSIVE)
        }
    }
}

fn reduce(path: &Path, budget: usize, front_only: bool, output: Option<&Path>) -> Result<u8> {
    let (a, _) = load_matrix(path)?;
    let sites = if front_only { ReductionSites::Front } else { ReductionSites::Any };
    let outcome = reduce_to_null(&a, budget, sites);
    search_summary("reduction to the null matrix", &outcome, output)
}

fn goodbasis(path: &Path, output: Option<&Path>) -> Result<u8> {
    let (a, _) = load_matrix(path)?;
    let Some(gb) = good_basis_form_check(&a)? else {
        println!("no good-basis ordering of the aligned pairs");
        return Ok(EXIT_FAILED);
    };
    let order: Vec<String> = gb.order.iter().map(|&p| pair_label(p)).collect();
    println!("good basis: order {}", if order.is_empty() { "(empty)".to_string() } else { order.join(" ") });
    println!("signs: {:?}", gb.signs);
    let moves: serde_json::Value =
        serde_json::from_str(&moves_to_json::<Int>(&gb.reduction_moves())).expect("moves serialize");
    let doc = json!({ "order": order, "signs": gb.signs, "reductions": moves });
    write_artifact(output, &to_canonical(&doc))?;
    Ok(EXIT_OK)
}

fn replay(path: &Path, moves: &Path, expect: Option<&Path>, output: Option<&Path>) -> Result<u8> {
    let (a, _) = load_matrix(path)?;
    let seq = MoveSequence::new(a, load_moves(moves)?);
    let end = seq.end()?;
    println!("replayed {} moves; end matrix side {}, blocks {:?}", seq.moves.len(), end.side(), end.block_sizes());
    write_artifact(output, &end.to_json())?;
    if let Some(e) = expect {
        let (target, _) = load_matrix(e)?;
        if target != end {
            println!("end matrix differs from {}", e.display());
            return Ok(EXIT_FAILED);
        }
        println!("end matrix matches {}", e.display());
    }
    Ok(EXIT_OK)
}

fn normalize(path: &Path, moves: &Path, output: Option<&Path>) -> Result<u8> {
    let (a, _) = load_matrix(path)?;
    let seq = MoveSequence::new(a, load_moves(moves)?);
    let out = normalize_sequence(&seq)?;
    println!("normalized {} moves into {}; monotone: {}", seq.moves.len(), out.moves.len(), out.is_monotone());
    write_artifact(output, &out.moves_to_json())?;
    Ok(EXIT_OK)
}

fn mu(path: &Path, index: &[usize], depth: Option<usize>, output: Option<&Path>) -> Result<u8> {
    let (d, _) = load_closed_diagram(path)?;
    if index.contains(&0) {
        return Err(usage("indices are 1-based"));
    }
    let idx: Vec<usize> = index.iter().map(|i| i - 1).collect();
    let e = mu_bar::<Int>(&d, &idx, depth)?;
    println!("{} = {} (indeterminacy {})", e.name(), e.value, e.indeterminacy);
    let doc = json!({
        "index": index,
        "value": JsonInt(e.value.clone()),
        "raw": JsonInt(e.raw.clone()),
        "indeterminacy": JsonInt(e.indeterminacy.clone()),
    });
    write_artifact(output, &to_canonical(&doc))?;
    Ok(EXIT_OK)
}

fn verdict_line(v: &HomotopyVerdict<Int>) -> String {
    match v.witness() {
        None => format!("homotopically trivial ({} invariants vanish)", v.table.entries.len()),
        Some(w) => format!("not homotopically trivial: {} = {}", w.name(), w.value),
    }
}

fn ht(path: &Path, output: Option<&Path>) -> Result<u8> {
    let (d, _) = load_closed_diagram(path)?;
    let v = is_homotopically_trivial::<Int>(&d)?;
    println!("{}", verdict_line(&v));
    write_artifact(output, &to_canonical(&v.table.to_json_value()))?;
    Ok(if v.trivial { EXIT_OK } else { EXIT_FAILED })
}

fn labels_or_all(d: &LinkDiagram, labels: Option<&[String]>) -> Result<Vec<usize>> {
    match labels {
        Some(l) => Ok(resolve_labels(d, l)?),
        None => Ok((0..d.components()).collect()),
    }
}

fn htplus(path: &Path, sublink: Option<&[String]>, link: Option<&[String]>, output: Option<&Path>) -> Result<u8> {
    let (d, _) = load_closed_diagram(path)?;
    let k = labels_or_all(&d, sublink)?;
    let j = labels_or_all(&d, link)?;
    let v = is_ht_plus_pair::<Int>(&d, &j, &k)?;
    for (label, part) in &v.parts {
        println!("K ∪ {label}+: {}", verdict_line(part));
    }
    println!("{}", if v.holds { "pair is homotopically trivial+" } else { "pair is not homotopically trivial+" });
    let parts: Vec<serde_json::Value> = v
        .parts
        .iter()
        .map(|(l, p)| json!({ "component": l, "trivial": p.trivial, "table": p.table.to_json_value() }))
        .collect();
    let doc = json!({ "holds": v.holds, "parts": parts });
    write_artifact(output, &to_canonical(&doc))?;
    Ok(if v.holds { EXIT_OK } else { EXIT_FAILED })
}

fn verdict_code(v: Verdict) -> u8 {
    match v {
        Verdict::CertifiedFreelySlice => EXIT_OK,
        Verdict::Inconclusive => EXIT_INCONCLUSIVE,
        Verdict::HypothesisFailed => EXIT_FAILED,
    }
}

fn report(cert: &slicecert_core::certify::Certificate, output: Option<&Path>) -> Result<u8> {
    println!("verdict: {}", cert.verdict.as_str());
    if let Some(leaf) = cert.failing_leaf() {
        println!("at {}: {}", leaf.name, leaf.detail);
    }
    if write_artifact(output, &cert.to_json())? {
        println!("certificate written to {}", output.expect("written").display());
    }
    Ok(verdict_code(cert.verdict))
}

fn certify_cmd(args: CertifyArgs) -> Result<u8> {
    let opts = CertifyOptions { depth: args.depth };
    if let Some(bundle) = &args.bundle {
        let text = read_text(bundle)?;
        let b = Bundle::from_json(&text).with_context(|| format!("bundle {}", bundle.display()))?;
        let mut cert = b.certify(&opts);
        cert.inputs = [("bundle".to_string(), digest_of(&text))].into_iter().collect();
        return report(&cert, args.output.as_deref());
    }
    let matrix = args.matrix.as_ref().expect("clap requires a matrix without --bundle");
    if args.derived.len() % 2 == 1 {
        return Err(usage("--derived takes the a and b diagram of each pair, an even number of files"));
    }
    let (a, digest) = load_matrix(matrix)?;
    let mut inputs = vec![("matrix".to_string(), digest)];
    let mut derived = Vec::new();
    for (j, pair) in args.derived.chunks(2).enumerate() {
        let (da, ha) = load_closed_diagram(&pair[0])?;
        let (db, hb) = load_closed_diagram(&pair[1])?;
        inputs.push((format!("derived.{}.a", j + 1), ha));
        inputs.push((format!("derived.{}.b", j + 1), hb));
        derived.push(DerivedPair { a: da, b: db });
    }
    let mut cert = certify(&a, &derived, &opts);
    cert.inputs = inputs.into_iter().collect();
    report(&cert, args.output.as_deref())
}

fn lbeta(path: &Path, bundle_out: Option<&Path>, output: Option<&Path>, depth: Option<usize>) -> Result<u8> {
    let (beta, digest) = load_diagram(path)?;
    let b: Bundle = lbeta_bundle(&beta)?;
    let bundle_text = b.to_json();
    if write_artifact(bundle_out, &bundle_text)? {
        println!("bundle written to {}", bundle_out.expect("written").display());
    }
    let mut cert = b.certify(&CertifyOptions { depth });
    cert.inputs = [("beta".to_string(), digest), ("bundle".to_string(), digest_of(&bundle_text))].into_iter().collect();
    report(&cert, output)
}

fn catalog_cmd(action: CatalogAction) -> Result<u8> {
    match action {
        CatalogAction::List => {
            for e in catalog::entries() {
                e.payload()?;
                println!("{:<18} {:<8} {}  {}", e.name, e.kind.as_str(), &e.sha256[..12], e.description);
            }
        }
        CatalogAction::Export { name, output } => {
            let e = catalog::get(&name)?;
            let text = e.payload()?;
            match output {
                Some(p) => {
                    write_file(&p, text)?;
                    println!("{} ({}) written to {}", e.name, e.kind.as_str(), p.display());
                }
                None => print!("{text}"),
            }
        }
    }
    Ok(EXIT_OK)
}

fn sequiv(a: &Path, b: &Path, caps: &EquivalenceCaps, output: Option<&Path>) -> Result<u8> {
    let (ma, _): (SeifertMatrix, _) = load_matrix(a)?;
    let (mb, _) = load_matrix(b)?;
    let outcome = s_equivalent_bounded(&ma, &mb, caps)?;
    match outcome {
        // Running out of a bounded space says nothing about inequivalence.
        SearchOutcome::Exhausted { nodes } => {
            println!("S-equivalence: not found within the caps ({nodes} states); inconclusive");
            Ok(EXIT_INCONCLUSIVE)
        }
        other => search_summary("S-equivalence", &other, output),
    }
}
