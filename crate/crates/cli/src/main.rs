use std::fs;
use std::io::{self, Read, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{anyhow, bail, Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};
use sha2::{Digest, Sha256};

use cotwist::io::{
    cocycle_from_json, cocycle_to_json, group_from_json, module_report, order_from_json, presentation_from_json,
    presentation_to_json, tensor_to_json, to_canonical_string, PresentationDoc,
};
use cotwist::rep::{all_modules, check_omnibus, is_simple, ladder, verify_relations, MatrixModule};
use cotwist::{
    braided_tensor, build_a, build_b, build_e, catalog, cocycle_to_twist, parse_expression, run_case, run_suite,
    suite_to_json, twist_coproduct, twist_presentation, verify_homomorphism, AlgebraMap, Bicharacter, CatalogName,
    CatalogParams, Error, GradingGroup, Sign, Status, TwoCocycle,
};

const DEFAULT_ORDER: u32 = 4;

#[derive(Parser)]
#[command(name = "cotwist", version, about = "Cocycle twists of graded algebra presentations")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct Output {
    /// Write the result here instead of stdout.
    #[arg(short, long)]
    output: Option<PathBuf>,
}

#[derive(Args)]
struct Input {
    /// Presentation JSON file; stdin when omitted or `-`.
    input: Option<PathBuf>,
}

#[derive(Clone, Copy, ValueEnum)]
enum FamilyArg {
    E,
    A,
    B,
}

#[derive(Clone, Copy, ValueEnum)]
enum SignArg {
    Plus,
    Minus,
}

#[derive(Subcommand)]
enum Command {
    /// Check the two-cocycle identity exhaustively.
    CheckCocycle {
        /// `builtin:sigma_V`, `builtin:bilinear_q:<matrix>` or a JSON file with `grading` and `cocycle`.
        #[arg(long)]
        cocycle: String,
        /// Cyclotomic order N for built-in cocycles.
        #[arg(long)]
        order: Option<u32>,
        #[command(flatten)]
        out: Output,
    },
    /// Twist a presentation (and its coproduct, if any) by a cocycle.
    Twist {
        #[command(flatten)]
        input: Input,
        /// Built-in cocycle, `builtin:trivial`, `builtin:suggested` (the input's suggested twist) or a JSON file.
        #[arg(long)]
        cocycle: String,
        #[command(flatten)]
        out: Output,
    },
    /// Normal form of an expression modulo the presentation's relations.
    Normalize {
        #[command(flatten)]
        input: Input,
        #[arg(long)]
        expr: String,
        #[command(flatten)]
        out: Output,
    },
    /// Confluence of the relations and the homomorphism property of the coproduct.
    Verify {
        #[command(flatten)]
        input: Input,
        #[command(flatten)]
        out: Output,
    },
    /// Emit a built-in presentation; lists the names when none is given.
    Catalog {
        name: Option<String>,
        #[arg(long)]
        n: Option<usize>,
        /// Exponent matrix as JSON, e.g. `[[0,1],[0,0]]`.
        #[arg(long)]
        alpha: Option<String>,
        #[arg(long)]
        r: Option<u64>,
        #[arg(long)]
        order: Option<u32>,
        #[command(flatten)]
        out: Output,
    },
    /// Build and check the module families E_n, A_n^±, B_n^±.
    Modules {
        #[arg(long, value_enum)]
        family: Option<FamilyArg>,
        /// A single n (otherwise 0..=max-n).
        #[arg(long)]
        n: Option<usize>,
        #[arg(long, default_value_t = 4)]
        max_n: usize,
        #[arg(long, value_enum)]
        sign: Option<SignArg>,
        #[arg(long)]
        order: Option<u32>,
        #[command(flatten)]
        out: Output,
    },
    /// The Drinfeld twist F of a cocycle on a finite group.
    TwistToTensor {
        #[arg(long)]
        cocycle: String,
        #[arg(long)]
        order: Option<u32>,
        #[command(flatten)]
        out: Output,
    },
    /// Run the acceptance battery.
    Suite {
        #[arg(long)]
        order: Option<u32>,
        /// Run a single case.
        #[arg(long)]
        case: Option<String>,
        #[command(flatten)]
        out: Output,
    },
}

/// A finished command: its JSON output and whether every check passed.
struct Done {
    value: Value,
    ok: bool,
}

struct Loaded {
    value: Value,
    sha256: String,
}

fn sha256_hex(bytes: &[u8]) -> String {
    format!("{:x}", Sha256::digest(bytes))
}

fn read_bytes(path: Option<&Path>) -> Result<(String, Vec<u8>)> {
    match path {
        None => read_stdin(),
        Some(p) if p == Path::new("-") => read_stdin(),
        Some(p) => Ok((p.display().to_string(), fs::read(p).with_context(|| format!("cannot read {}", p.display()))?)),
    }
}

fn read_stdin() -> Result<(String, Vec<u8>)> {
    let mut buf = Vec::new();
    io::stdin().read_to_end(&mut buf).context("cannot read stdin")?;
    Ok(("<stdin>".into(), buf))
}

fn load_json(path: Option<&Path>) -> Result<Loaded> {
    let (name, bytes) = read_bytes(path)?;
    let value: Value = serde_json::from_slice(&bytes)
        .map_err(|e| anyhow!("{name}:{}:{}: {e}", e.line(), e.column()))?;
    Ok(Loaded { value, sha256: sha256_hex(&bytes) })
}

fn load_presentation(input: &Input) -> Result<(PresentationDoc, Loaded)> {
    let loaded = load_json(input.input.as_deref())?;
    let name = input.input.as_ref().map_or("<stdin>".to_string(), |p| p.display().to_string());
    let doc = presentation_from_json(&loaded.value).with_context(|| format!("in {name}"))?;
    Ok((doc, loaded))
}

fn provenance(inputs: &[&Loaded], extra: Value) -> Value {
    let mut v = json!({
        "tool": "cotwist",
        "version": env!("CARGO_PKG_VERSION"),
        "inputs": inputs.iter().map(|l| json!({ "sha256": l.sha256 })).collect::<Vec<_>>(),
    });
    if let (Some(obj), Value::Object(more)) = (v.as_object_mut(), extra) {
        obj.extend(more);
    }
    v
}

fn report(case: &str, ok: bool, details: Value, prov: Value) -> Done {
    let status = if ok { Status::Pass } else { Status::Fail };
    Done { value: json!({ "case": case, "status": status.as_str(), "details": details, "provenance": prov }), ok }
}

/// Resolves a cocycle argument. `group` is the grading it must live on
/// (when known) and `doc` the input document for `builtin:suggested`.
fn resolve_cocycle(
    spec: &str,
    order: u32,
    group: Option<&GradingGroup>,
    doc: Option<&Value>,
) -> Result<(TwoCocycle, Option<Loaded>)> {
    let (sigma, loaded) = if spec == "builtin:sigma_V" {
        (TwoCocycle::sigma_v(order)?, None)
    } else if let Some(m) = spec.strip_prefix("builtin:bilinear_q:") {
        let matrix: Vec<Vec<i64>> =
            serde_json::from_str(m).with_context(|| format!("bilinear_q matrix `{m}` is not an integer matrix"))?;
        (TwoCocycle::bilinear_q(GradingGroup::free(matrix.len()), order, matrix)?, None)
    } else if spec == "builtin:trivial" {
        let g = group.ok_or_else(|| anyhow!("builtin:trivial needs a presentation to take the grading from"))?;
        (TwoCocycle::trivial(g.clone(), order)?, None)
    } else if spec == "builtin:suggested" {
        let g = group.ok_or_else(|| anyhow!("builtin:suggested needs a presentation"))?;
        let c = doc
            .and_then(|d| d.pointer("/provenance/suggested_cocycle"))
            .ok_or_else(|| anyhow!("input has no provenance.suggested_cocycle"))?;
        (cocycle_from_json(c, g, order, "provenance.suggested_cocycle")?, None)
    } else if spec.starts_with("builtin:") {
        bail!("unknown built-in cocycle `{spec}`");
    } else {
        let loaded = load_json(Some(Path::new(spec)))?;
        let v = &loaded.value;
        let sigma = if let Some(c) = v.get("cocycle") {
            let g = group_from_json(v.get("grading").ok_or_else(|| anyhow!("{spec}: missing `grading`"))?, "grading")?;
            let order = if v.get("scalar").is_some() { order_from_json(v)? } else { order };
            cocycle_from_json(c, &g, order, "cocycle")
        } else {
            let g = group.ok_or_else(|| anyhow!("{spec}: a bare cocycle needs a `grading`"))?;
            cocycle_from_json(v, g, order, "$")
        }
        .with_context(|| format!("in {spec}"))?;
        (sigma, Some(loaded))
    };
    if let Some(g) = group {
        if sigma.group() != g {
            bail!("cocycle lives on {} but the presentation is graded by {}", sigma.group(), g);
        }
    }
    if sigma.order() != order {
        bail!("cocycle uses N = {} but N = {order} is required", sigma.order());
    }
    Ok((sigma, loaded))
}

fn check_cocycle(spec: &str, order: Option<u32>) -> Result<Done> {
    let order = order.unwrap_or(DEFAULT_ORDER);
    let (sigma, loaded) = match resolve_cocycle(spec, order, None, None) {
        Err(e) if !spec.starts_with("builtin:") => {
            // File cocycles carry their own N; retry with it.
            let v = load_json(Some(Path::new(spec)))?.value;
            let n = order_from_json(&v).map_err(|_| e)?;
            resolve_cocycle(spec, n, None, None)?
        }
        r => r?,
    };
    let check = sigma.check()?;
    let details = json!({
        "cocycle": cocycle_to_json(&sigma),
        "valid": check.valid,
        "triples_checked": check.triples_checked,
        "witness": check.witness.map(|w| w.iter().map(|g| json!(g.coords())).collect::<Vec<_>>()),
    });
    let inputs: Vec<&Loaded> = loaded.iter().collect();
    Ok(report("check-cocycle", check.valid, details, provenance(&inputs, json!({ "cocycle_spec": spec }))))
}

fn twist(input: &Input, spec: &str) -> Result<Done> {
    let (doc, loaded) = load_presentation(input)?;
    let p = &doc.presentation;
    let (sigma, cloaded) = resolve_cocycle(spec, p.order(), Some(p.gens.group()), Some(&loaded.value))?;
    let twisted = twist_presentation(p, &sigma)?;
    let coproduct = doc.coproduct.as_ref().map(|c| twist_coproduct(c, &sigma)).transpose()?;
    let mut inputs = vec![&loaded];
    inputs.extend(cloaded.iter());
    let prov = provenance(&inputs, json!({ "cocycle_spec": spec, "cocycle_applied": cocycle_to_json(&sigma) }));
    let out = presentation_to_json(&PresentationDoc { presentation: twisted, coproduct }, Some(prov));
    Ok(Done { value: out, ok: true })
}

fn normalize(input: &Input, expr: &str) -> Result<Done> {
    let (doc, loaded) = load_presentation(input)?;
    let p = &doc.presentation;
    let e = parse_expression(expr, &p.gens).with_context(|| format!("in --expr `{expr}`"))?;
    let sys = p.rewrite_system()?;
    let conf = sys.check_local_confluence()?;
    let nf = sys.normalize(&e)?;
    let details = json!({
        "expression": e.render(&p.gens),
        "normal_form": nf.render(&p.gens),
        "confluent": conf.confluent,
        "ambiguities_checked": conf.ambiguities_checked,
    });
    Ok(report("normalize", true, details, provenance(&[&loaded], json!({ "expression": expr }))))
}

fn verify(input: &Input) -> Result<Done> {
    let (doc, loaded) = load_presentation(input)?;
    let p = &doc.presentation;
    let conf = p.rewrite_system()?.check_local_confluence()?;
    let mut ok = conf.confluent;
    let mut details = json!({
        "relations": p.render_relations(),
        "confluent": conf.confluent,
        "ambiguities_checked": conf.ambiguities_checked,
        "confluence_witness": conf.witness.as_ref().map(|a| format!("{a:?}")),
    });
    if let Some(delta) = &doc.coproduct {
        let b = match &p.cocycle {
            Some(c) => c.derived_bicharacter()?,
            None => Bicharacter::trivial(p.gens.group().clone(), p.order())?,
        };
        let square = braided_tensor(p, p, &b)?;
        let map = AlgebraMap::new(delta.source.clone(), square.gens.clone(), delta.images.clone())?;
        let coproduct = match verify_homomorphism(&map, p, &square) {
            Ok(h) => {
                ok &= h.holds;
                json!({
                    "holds": h.holds,
                    "failures": h.failures.iter().map(|(k, nf)| json!({
                        "relation": p.relations[*k].render(&p.gens),
                        "normal_form": nf.render(&square.gens),
                    })).collect::<Vec<_>>(),
                })
            }
            Err(Error::NonConfluent(w)) => {
                ok = false;
                json!({ "holds": Value::Null, "error": format!("target rewrite system is not confluent: {w}") })
            }
            Err(e) => return Err(e.into()),
        };
        details["coproduct"] = coproduct;
    }
    Ok(report("verify", ok, details, provenance(&[&loaded], json!({}))))
}

fn catalog_cmd(
    name: Option<&str>,
    n: Option<usize>,
    alpha: Option<&str>,
    r: Option<u64>,
    order: Option<u32>,
) -> Result<Done> {
    let Some(name) = name else {
        let names: Vec<&str> = CatalogName::ALL.iter().map(|c| c.as_str()).collect();
        return Ok(Done { value: json!({ "catalog": names }), ok: true });
    };
    let cname: CatalogName = name.parse()?;
    let alpha = alpha
        .map(|a| serde_json::from_str::<Vec<Vec<i64>>>(a).with_context(|| format!("--alpha `{a}` is not an integer matrix")))
        .transpose()?;
    let params = CatalogParams { n, alpha, r, order };
    let entry = catalog(cname, &params)?;
    let prov = provenance(
        &[],
        json!({
            "catalog": cname.as_str(),
            "params": { "n": n, "alpha": params.alpha, "r": r, "order": order },
            "suggested_cocycle": cocycle_to_json(&entry.twist),
        }),
    );
    let doc = PresentationDoc { presentation: entry.presentation, coproduct: entry.coproduct };
    Ok(Done { value: presentation_to_json(&doc, Some(prov)), ok: true })
}

fn module_ok(m: &MatrixModule) -> Result<bool> {
    Ok(verify_relations(m)? && is_simple(m)? && ladder(m)?.all_ok() && check_omnibus(m)?.all_ok())
}

fn modules_cmd(
    family: Option<FamilyArg>,
    n: Option<usize>,
    max_n: usize,
    sign: Option<SignArg>,
    order: Option<u32>,
) -> Result<Done> {
    let order = order.unwrap_or(DEFAULT_ORDER);
    let signs: Vec<Sign> = match sign {
        None => Sign::BOTH.to_vec(),
        Some(SignArg::Plus) => vec![Sign::Plus],
        Some(SignArg::Minus) => vec![Sign::Minus],
    };
    let mods: Vec<MatrixModule> = match (family, n) {
        (None, None) => all_modules(max_n, order)?,
        _ => {
            let families = family.map_or(vec![FamilyArg::E, FamilyArg::A, FamilyArg::B], |f| vec![f]);
            let ns: Vec<usize> = n.map_or((0..=max_n).collect(), |k| vec![k]);
            let mut out = Vec::new();
            for f in families {
                for &k in &ns {
                    match f {
                        FamilyArg::E => out.push(build_e(k, order)?),
                        FamilyArg::A if k == 0 && n.is_none() => {}
                        FamilyArg::A => {
                            for &s in &signs {
                                out.push(build_a(k, s, order)?);
                            }
                        }
                        FamilyArg::B => {
                            for &s in &signs {
                                out.push(build_b(k, s, order)?);
                            }
                        }
                    }
                }
            }
            out
        }
    };
    let mut ok = true;
    let mut reports = Vec::with_capacity(mods.len());
    for m in &mods {
        let good = module_ok(m)?;
        ok &= good;
        let mut r = module_report(m)?;
        r["ok"] = Value::Bool(good);
        reports.push(r);
    }
    Ok(report("modules", ok, json!({ "modules": reports }), provenance(&[], json!({ "order": order }))))
}

fn twist_to_tensor(spec: &str, order: Option<u32>) -> Result<Done> {
    let order = order.unwrap_or(DEFAULT_ORDER);
    let (sigma, loaded) = resolve_cocycle(spec, order, None, None)?;
    let f = cocycle_to_twist(&sigma)?;
    let inputs: Vec<&Loaded> = loaded.iter().collect();
    Ok(report(
        "twist-to-tensor",
        true,
        json!({ "cocycle": cocycle_to_json(&sigma), "tensor": tensor_to_json(&f) }),
        provenance(&inputs, json!({ "cocycle_spec": spec })),
    ))
}

fn suite(order: Option<u32>, case: Option<&str>) -> Result<Done> {
    let order = order.unwrap_or(DEFAULT_ORDER);
    let reports = match case {
        Some(c) => vec![run_case(c, order)?],
        None => run_suite(order),
    };
    let ok = reports.iter().all(|r| r.status == Status::Pass);
    let mut value = suite_to_json(&reports);
    value["provenance"] = provenance(&[], json!({ "order": order }));
    Ok(Done { value, ok })
}

fn execute(cli: Cli) -> Result<(Done, Option<PathBuf>)> {
    Ok(match cli.command {
        Command::CheckCocycle { cocycle, order, out } => (check_cocycle(&cocycle, order)?, out.output),
        Command::Twist { input, cocycle, out } => (twist(&input, &cocycle)?, out.output),
        Command::Normalize { input, expr, out } => (normalize(&input, &expr)?, out.output),
        Command::Verify { input, out } => (verify(&input)?, out.output),
        Command::Catalog { name, n, alpha, r, order, out } => {
            (catalog_cmd(name.as_deref(), n, alpha.as_deref(), r, order)?, out.output)
        }
        Command::Modules { family, n, max_n, sign, order, out } => {
            (modules_cmd(family, n, max_n, sign, order)?, out.output)
        }
        Command::TwistToTensor { cocycle, order, out } => (twist_to_tensor(&cocycle, order)?, out.output),
        Command::Suite { order, case, out } => (suite(order, case.as_deref())?, out.output),
    })
}

fn emit(value: &Value, path: Option<&Path>) -> Result<()> {
    let text = to_canonical_string(value);
    match path {
        Some(p) => fs::write(p, text).with_context(|| format!("cannot write {}", p.display())),
        None => {
            let mut out = io::stdout().lock();
            out.write_all(text.as_bytes())?;
            out.flush()?;
            Ok(())
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match execute(cli).and_then(|(done, path)| emit(&done.value, path.as_deref()).map(|_| done.ok)) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
