//! Command-line front end: load instance files, run the analyses and the
//! claim suite, and emit human-readable or machine-readable reports.
//!
//! Exit codes are a stable contract: 0 success, 1 counterexample found,
//! 2 invalid input, 3 unsupported operation, 4 I/O failure.

use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::process::ExitCode;
use std::sync::Arc;

use serde_json::Value;

use zsmod_core::decomposition::{is_direct_family_in, Lattice, Level, Witness};
use zsmod_core::error::Error;
use zsmod_core::greens::Greens;
use zsmod_core::json::{
    complement_class_to_json, quotient_to_json, semiring_from_json, submodule_to_json,
    vector_from_json,
};
use zsmod_core::module::{Budget, Enumeration, FreeModule, Submodule, Subset, Vector};
use zsmod_core::oracle::{generate_corpus, run_claims, ClaimStatus, CorpusConfig};
use zsmod_core::semiring::Semiring;

const USAGE: &str = "\
zsmod - exact decomposition theory for modules over semirings lacking zero sums

USAGE:
    zsmod <COMMAND> [ARGS] [FLAGS]

COMMANDS:
    analyze <FILE> <W> <T>   classify the complement pair (W, T) from the file
    decompose <FILE>         list the indecomposable direct summands
    dsoc <FILE>              compute the decomposition socle and its complement
    idempotents <FILE>       list idempotents, primitivity, and a partition of one
    quotient <FILE>          build the quotient by Green's congruence
    verify                   run the theorem suite over the generated corpus

FLAGS:
    --json                   machine-readable output
    --seed <u64>             corpus seed for verify (default 0)
    --budget <n>             ambient element cap (default 4096)
    --claims <a,b,...>       run only claims matching these ids or prefixes
    --out <path>             write counterexample certificates here (verify)
";

struct Flags {
    json: bool,
    seed: u64,
    budget: usize,
    claims: Option<Vec<String>>,
    out: Option<String>,
}

enum CliError {
    Input(String),
    Unsupported(String),
    Io(String),
}

impl CliError {
    fn code(&self) -> u8 {
        match self {
            CliError::Input(_) => 2,
            CliError::Unsupported(_) => 3,
            CliError::Io(_) => 4,
        }
    }

    fn message(&self) -> &str {
        match self {
            CliError::Input(m) | CliError::Unsupported(m) | CliError::Io(m) => m,
        }
    }
}

/// Operation-stage errors: the file was valid, the requested computation is
/// impossible (infinite carrier, budget, unmet hypothesis).
fn op_err(e: Error) -> CliError {
    CliError::Unsupported(e.to_string())
}

/// File-stage errors: anything wrong with the input itself.
fn input_err(e: Error) -> CliError {
    CliError::Input(e.to_string())
}

fn main() -> ExitCode {
    let args: Vec<String> = std::env::args().skip(1).collect();
    match run(&args) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {}", e.message());
            ExitCode::from(e.code())
        }
    }
}

fn parse_flags(args: &[String]) -> Result<(Vec<String>, Flags), CliError> {
    let mut positional = Vec::new();
    let mut flags = Flags {
        json: false,
        seed: 0,
        budget: 4096,
        claims: None,
        out: None,
    };
    let mut it = args.iter();
    while let Some(arg) = it.next() {
        match arg.as_str() {
            "--json" => flags.json = true,
            "--seed" => {
                let v = it
                    .next()
                    .ok_or_else(|| CliError::Input("--seed needs a value".into()))?;
                flags.seed = v
                    .parse()
                    .map_err(|_| CliError::Input(format!("invalid --seed value `{v}`")))?;
            }
            "--budget" => {
                let v = it
                    .next()
                    .ok_or_else(|| CliError::Input("--budget needs a value".into()))?;
                flags.budget = v
                    .parse()
                    .map_err(|_| CliError::Input(format!("invalid --budget value `{v}`")))?;
            }
            "--claims" => {
                let v = it
                    .next()
                    .ok_or_else(|| CliError::Input("--claims needs a value".into()))?;
                flags.claims = Some(v.split(',').map(|s| s.trim().to_string()).collect());
            }
            "--out" => {
                let v = it
                    .next()
                    .ok_or_else(|| CliError::Input("--out needs a value".into()))?;
                flags.out = Some(v.clone());
            }
            other if other.starts_with("--") => {
                return Err(CliError::Input(format!("unknown flag `{other}`")));
            }
            other => positional.push(other.to_string()),
        }
    }
    Ok((positional, flags))
}

fn run(args: &[String]) -> Result<u8, CliError> {
    let (positional, flags) = parse_flags(args)?;
    let Some(command) = positional.first() else {
        eprint!("{USAGE}");
        return Ok(2);
    };
    match command.as_str() {
        "analyze" => cmd_analyze(&positional[1..], &flags),
        "decompose" => cmd_decompose(&positional[1..], &flags),
        "dsoc" => cmd_dsoc(&positional[1..], &flags),
        "idempotents" => cmd_idempotents(&positional[1..], &flags),
        "quotient" => cmd_quotient(&positional[1..], &flags),
        "verify" => cmd_verify(&flags),
        "help" | "--help" | "-h" => {
            print!("{USAGE}");
            Ok(0)
        }
        other => {
            eprintln!("error: unknown command `{other}`");
            eprint!("{USAGE}");
            Ok(2)
        }
    }
}

/// A parsed and validated instance file.
struct InstanceFile {
    semiring: Arc<Semiring>,
    rank: usize,
    module: FreeModule,
    submodules: BTreeMap<String, Submodule>,
    query_module: Option<String>,
}

fn load_instance(path: &str, budget: &Budget) -> Result<InstanceFile, CliError> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| CliError::Io(format!("cannot read `{path}`: {e}")))?;
    let value: Value = serde_json::from_str(&text)
        .map_err(|e| CliError::Input(format!("`{path}` is not valid JSON: {e}")))?;
    let obj = value
        .as_object()
        .ok_or_else(|| CliError::Input("instance file must be a JSON object".into()))?;
    let semiring = Arc::new(
        semiring_from_json(
            obj.get("semiring")
                .ok_or_else(|| CliError::Input("missing field `semiring`".into()))?,
        )
        .map_err(input_err)?,
    );
    let axioms = semiring.verify_axioms();
    if let Some(violation) = axioms.violations.first() {
        return Err(CliError::Input(format!(
            "field `semiring` is not a semiring: {} fails at ({})",
            violation.axiom,
            violation.witness.join(", ")
        )));
    }
    let rank = obj
        .get("rank")
        .and_then(Value::as_u64)
        .ok_or_else(|| CliError::Input("missing or invalid field `rank`".into()))?
        as usize;
    if rank == 0 || rank > 16 {
        return Err(CliError::Input(
            "field `rank` must be between 1 and 16".into(),
        ));
    }
    let module = FreeModule::new(Arc::clone(&semiring), rank);
    let mut submodules = BTreeMap::new();
    if let Some(subs) = obj.get("submodules") {
        let map = subs
            .as_object()
            .ok_or_else(|| CliError::Input("field `submodules` must be an object".into()))?;
        for (name, gens) in map {
            let arr = gens.as_array().ok_or_else(|| {
                CliError::Input(format!("submodule `{name}` must be a generator list"))
            })?;
            let generators: Vec<Vector> = arr
                .iter()
                .map(|g| vector_from_json(&semiring, rank, g))
                .collect::<Result<_, _>>()
                .map_err(|e| CliError::Input(format!("submodule `{name}`: {e}")))?;
            let span = module.span(&generators, budget).map_err(op_err)?;
            submodules.insert(name.clone(), span);
        }
    }
    let query_module = obj
        .get("query")
        .and_then(|q| q.get("module"))
        .and_then(Value::as_str)
        .map(str::to_string);
    if let Some(name) = &query_module {
        if !submodules.contains_key(name) {
            return Err(CliError::Input(format!(
                "query module `{name}` is not among the named submodules"
            )));
        }
    }
    Ok(InstanceFile {
        semiring,
        rank,
        module,
        submodules,
        query_module,
    })
}

impl InstanceFile {
    fn enumeration(&self, budget: &Budget) -> Result<Arc<Enumeration>, CliError> {
        Ok(Arc::new(self.module.enumeration(budget).map_err(op_err)?))
    }

    /// The ambient for module-level commands: the full free module, or the
    /// submodule named by the file's query parameters.
    fn ambient(&self, en: &Enumeration) -> Result<Subset, CliError> {
        match &self.query_module {
            None => Ok(en.full_set()),
            Some(name) => en.subset_of(&self.submodules[name]).map_err(op_err),
        }
    }

    fn named_subset(&self, en: &Enumeration, name: &str) -> Result<Subset, CliError> {
        let s = self.submodules.get(name).ok_or_else(|| {
            CliError::Input(format!("submodule `{name}` is not defined in the file"))
        })?;
        en.subset_of(s).map_err(op_err)
    }
}

fn emit(out: String) -> Result<u8, CliError> {
    print!("{out}");
    Ok(0)
}

fn emit_json(v: &Value) -> Result<u8, CliError> {
    let text = serde_json::to_string_pretty(v)
        .map_err(|e| CliError::Io(format!("serialization failed: {e}")))?;
    println!("{text}");
    Ok(0)
}

fn cmd_analyze(args: &[String], flags: &Flags) -> Result<u8, CliError> {
    let [path, w_name, t_name] = args else {
        return Err(CliError::Input(
            "analyze needs <FILE> <W> <T>: an instance file and two submodule names".into(),
        ));
    };
    let budget = Budget {
        max_elements: flags.budget,
        ..Budget::default()
    };
    let file = load_instance(path, &budget)?;
    let en = file.enumeration(&budget)?;
    let ambient = file.ambient(&en)?;
    let w = file.named_subset(&en, w_name)?;
    let t = file.named_subset(&en, t_name)?;
    let class = zsmod_core::decomposition::classify_in(&en, &ambient, &w, &t).map_err(op_err)?;
    if flags.json {
        return emit_json(&complement_class_to_json(&en, &class));
    }
    let mut out = String::new();
    let _ = writeln!(out, "level: {}", class.level.name());
    if let Some(witness) = &class.witness {
        let v = |id: usize| en.label(id);
        let line = match witness {
            Witness::NotSpanning { missing } => {
                format!("witness: {} is not in W + T", v(*missing))
            }
            Witness::NonzeroIntersection { common } => {
                format!("witness: {} is a nonzero element of W ∩ T", v(*common))
            }
            Witness::NotWeak { w, t1, t2 } => format!(
                "witness: {} + {} = {} lands back in T",
                v(*w),
                v(*t1),
                v(*t2)
            ),
            Witness::NotSemidirect { w1, t1, w2, t2 } => format!(
                "witness: {} + {} = {} + {} with different W-parts",
                v(*w1),
                v(*t1),
                v(*w2),
                v(*t2)
            ),
            Witness::NotDirect { w, t1, t2 } => format!(
                "witness: {} + {} = {} + {} with different T-parts",
                v(*w),
                v(*t1),
                v(*w),
                v(*t2)
            ),
        };
        let _ = writeln!(out, "{line}");
    }
    emit(out)
}

fn render_submodule(en: &Enumeration, s: &Subset) -> String {
    let gens = en.canonical_generator_ids(s);
    if gens.is_empty() {
        return format!("{{{}}}", en.label(en.zero_id()));
    }
    let parts: Vec<String> = gens.into_iter().map(|id| en.label(id)).collect();
    format!("span{{{}}}", parts.join(", "))
}

fn cmd_decompose(args: &[String], flags: &Flags) -> Result<u8, CliError> {
    let [path] = args else {
        return Err(CliError::Input("decompose needs <FILE>".into()));
    };
    let budget = Budget {
        max_elements: flags.budget,
        ..Budget::default()
    };
    let file = load_instance(path, &budget)?;
    let en = file.enumeration(&budget)?;
    let ambient = file.ambient(&en)?;
    let lat = Lattice::new(&en, ambient.clone(), &budget).map_err(op_err)?;
    let summands = lat.indecomposable_summands();
    let complete = is_direct_family_in(&en, &ambient, &summands);
    if flags.json {
        let report = zsmod_core::decomposition::DecompositionReport {
            parts: summands,
            kind: Level::Direct,
            certified: complete,
        };
        return emit_json(&zsmod_core::json::decomposition_report_to_json(
            &en, &report,
        ));
    }
    let mut out = String::new();
    let _ = writeln!(out, "indecomposable direct summands: {}", summands.len());
    for s in &summands {
        let _ = writeln!(
            out,
            "  {} ({} elements)",
            render_submodule(&en, s),
            s.count()
        );
    }
    let _ = writeln!(
        out,
        "direct sum of all summands covers the module: {complete}"
    );
    emit(out)
}

fn cmd_dsoc(args: &[String], flags: &Flags) -> Result<u8, CliError> {
    let [path] = args else {
        return Err(CliError::Input("dsoc needs <FILE>".into()));
    };
    let budget = Budget {
        max_elements: flags.budget,
        ..Budget::default()
    };
    let file = load_instance(path, &budget)?;
    let en = file.enumeration(&budget)?;
    let ambient = file.ambient(&en)?;
    let lat = Lattice::new(&en, ambient, &budget).map_err(op_err)?;
    let report = lat.dsoc().map_err(op_err)?;
    if flags.json {
        return emit_json(&serde_json::json!({
            "dsoc": submodule_to_json(&en.submodule(&report.socle)),
            "complement": report
                .complement
                .as_ref()
                .map(|c| submodule_to_json(&en.submodule(c))),
            "summands": report
                .summands
                .iter()
                .map(|s| submodule_to_json(&en.submodule(s)))
                .collect::<Vec<_>>(),
            "units_property_checked": report.units_property_checked,
        }));
    }
    let mut out = String::new();
    let _ = writeln!(
        out,
        "dsoc: {} ({} of {} elements)",
        render_submodule(&en, &report.socle),
        report.socle.count(),
        lat.ambient().count()
    );
    let _ = writeln!(out, "indecomposable summands: {}", report.summands.len());
    for s in &report.summands {
        let _ = writeln!(out, "  {}", render_submodule(&en, s));
    }
    if let Some(c) = &report.complement {
        let _ = writeln!(out, "direct complement: {}", render_submodule(&en, c));
    }
    emit(out)
}

fn cmd_idempotents(args: &[String], flags: &Flags) -> Result<u8, CliError> {
    let [path] = args else {
        return Err(CliError::Input("idempotents needs <FILE>".into()));
    };
    let budget = Budget {
        max_elements: flags.budget,
        ..Budget::default()
    };
    let file = load_instance(path, &budget)?;
    let sr = &file.semiring;
    let idems = sr.idempotents().map_err(op_err)?;
    let partition = sr.partition_of_one().map_err(op_err)?;
    if flags.json {
        return emit_json(&serde_json::json!({
            "idempotents": idems
                .iter()
                .map(|i| serde_json::json!({
                    "value": zsmod_core::json::elem_to_json(sr, &i.value),
                    "primitive": i.primitive,
                }))
                .collect::<Vec<_>>(),
            "partition": partition.as_ref().map(|p| {
                p.iter()
                    .map(|i| zsmod_core::json::elem_to_json(sr, &i.value))
                    .collect::<Vec<_>>()
            }),
        }));
    }
    let mut out = String::new();
    let _ = writeln!(out, "idempotents: {}", idems.len());
    for i in &idems {
        let tag = if i.primitive { " (primitive)" } else { "" };
        let _ = writeln!(out, "  {}{}", sr.label(&i.value), tag);
    }
    match &partition {
        Some(p) => {
            let labels: Vec<String> = p.iter().map(|i| sr.label(&i.value)).collect();
            let _ = writeln!(out, "partition of one: {{{}}}", labels.join(", "));
        }
        None => {
            let _ = writeln!(out, "partition of one: none");
        }
    }
    emit(out)
}

fn cmd_quotient(args: &[String], flags: &Flags) -> Result<u8, CliError> {
    let [path] = args else {
        return Err(CliError::Input("quotient needs <FILE>".into()));
    };
    let budget = Budget {
        max_elements: flags.budget,
        ..Budget::default()
    };
    let file = load_instance(path, &budget)?;
    let en = file.enumeration(&budget)?;
    let ambient = file.ambient(&en)?;
    let greens = Greens::new(&en, ambient);
    let quotient = greens.quotient().map_err(op_err)?;
    if flags.json {
        return emit_json(&quotient_to_json(&en, &quotient));
    }
    let mut out = String::new();
    let _ = writeln!(out, "classes: {}", quotient.class_count());
    for class in &quotient.classes {
        let labels: Vec<String> = class.iter().map(|&id| en.label(id)).collect();
        let _ = writeln!(out, "  {{{}}}", labels.join(", "));
    }
    let _ = writeln!(out, "quotient is upper bound: {}", quotient.ub);
    let _ = writeln!(
        out,
        "module was already upper bound: {}",
        quotient.ambient_is_ub
    );
    if file.rank == 1 {
        let qsr =
            zsmod_core::greens::quotient_semiring(&file.semiring, &budget).map_err(op_err)?;
        let _ = writeln!(
            out,
            "quotient semiring carrier size: {}",
            qsr.carrier_size().unwrap_or(0)
        );
    }
    emit(out)
}

fn cmd_verify(flags: &Flags) -> Result<u8, CliError> {
    let config = CorpusConfig {
        budget: Budget {
            max_elements: flags.budget,
            max_submodules: 5000,
            max_family: 4,
        },
        ..CorpusConfig::default()
    };
    if let Some(filter) = &flags.claims {
        let registry = zsmod_core::oracle::claim_registry();
        for token in filter {
            if !registry
                .iter()
                .any(|c| c.id == token || c.id.starts_with(token.as_str()))
            {
                return Err(CliError::Input(format!(
                    "`{token}` matches no registered claim"
                )));
            }
        }
    }
    let corpus = generate_corpus(flags.seed, &config).map_err(input_err)?;
    let results = run_claims(&corpus, flags.claims.as_deref()).map_err(op_err)?;

    let counterexamples: Vec<&zsmod_core::oracle::ClaimResult> = results
        .iter()
        .filter(|r| r.status == ClaimStatus::Counterexample)
        .collect();
    if let Some(path) = &flags.out {
        if !counterexamples.is_empty() {
            let certs: Vec<Value> = counterexamples
                .iter()
                .filter_map(|r| r.certificate.clone())
                .collect();
            let body = serde_json::to_string_pretty(&Value::Array(certs))
                .map_err(|e| CliError::Io(format!("serialization failed: {e}")))?;
            std::fs::write(path, body + "\n")
                .map_err(|e| CliError::Io(format!("cannot write `{path}`: {e}")))?;
        }
    }

    if flags.json {
        let doc = serde_json::json!({
            "corpus": corpus.to_json(),
            "claims": zsmod_core::oracle::results_to_json(&results),
        });
        let text = serde_json::to_string_pretty(&doc)
            .map_err(|e| CliError::Io(format!("serialization failed: {e}")))?;
        println!("{text}");
    } else {
        let mut out = String::new();
        let _ = writeln!(
            out,
            "{:<36} {:<16} {:>9} {:>15} {:>6}",
            "claim", "status", "instances", "configurations", "skips"
        );
        for r in &results {
            let _ = writeln!(
                out,
                "{:<36} {:<16} {:>9} {:>15} {:>6}",
                r.claim_id,
                r.status.name(),
                r.instances_checked,
                r.configurations,
                r.skips.len()
            );
        }
        let verified = results
            .iter()
            .filter(|r| r.status == ClaimStatus::Verified)
            .count();
        let _ = writeln!(
            out,
            "{} of {} claims verified; {} counterexamples; corpus seed {} ({} members, {} of {} random proposals discarded)",
            verified,
            results.len(),
            counterexamples.len(),
            corpus.seed,
            corpus.members.len(),
            corpus.discarded,
            corpus.attempts
        );
        print!("{out}");
    }
    Ok(if counterexamples.is_empty() { 0 } else { 1 })
}
