//! Subcommand dispatch: each command parses a workspace document, calls into
//! the library, and renders either a human-readable report or, with
//! `--porcelain`, one `key=value` pair per line. All output is deterministic.

use std::fmt::Write as _;
use std::io::Read;

use clap::{ArgGroup, Args, Parser, Subcommand};
use softset::{
    classify_morphism, classify_object, coseparator_witness, enumerate_hom, epi_counterexample,
    generate_object_family, hom_count, mono_counterexample, oracle_is_coseparator, oracle_is_epi,
    oracle_is_initial, oracle_is_mono, oracle_is_separator, oracle_is_terminal, separator_witness,
    CancellationCounterexample, SoftMorphism, SoftSet, Workspace,
};

#[derive(Parser)]
#[command(
    name = "softset",
    version,
    about = "Soft sets over a finite universe: classification, hom-sets, witnesses, oracle checks"
)]
pub struct Cli {
    /// Machine-readable output: one key=value pair per line
    #[arg(long, global = true)]
    pub porcelain: bool,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand)]
pub enum Command {
    /// Parse a workspace document and report its contents
    Validate {
        /// Workspace file, or `-` for stdin
        file: String,
    },
    /// Decide the special-object properties of one soft set
    ClassifyObject {
        file: String,
        /// Soft set to classify
        #[arg(long)]
        name: String,
    },
    /// Decide the special-morphism properties of one morphism
    ClassifyMorphism {
        file: String,
        /// Morphism to classify
        #[arg(long)]
        name: String,
    },
    /// Count or list the soft morphisms between two soft sets
    Hom(HomArgs),
    /// Construct counterexample and witness morphisms
    #[command(subcommand)]
    Witness(WitnessCommand),
    /// Print every soft set with at most K parameters over the file's universe
    Family {
        file: String,
        /// Parameter count bound for the generated family
        #[arg(long, default_value_t = 2)]
        max_params: usize,
    },
    /// Compare every characterization against its brute-force oracle
    OracleCheck {
        file: String,
        /// Parameter count bound for the oracle's quantification family
        #[arg(long, default_value_t = 2)]
        max_params: usize,
    },
}

#[derive(Args)]
#[command(group(ArgGroup::new("mode").required(true)))]
pub struct HomArgs {
    file: String,
    /// Print only the number of morphisms
    #[arg(long, group = "mode")]
    count: bool,
    /// Print every morphism
    #[arg(long, group = "mode")]
    list: bool,
    /// Source soft set
    source: String,
    /// Target soft set
    target: String,
}

#[derive(Subcommand)]
pub enum WitnessCommand {
    /// For a non-epi morphism: distinct morphisms that agree after it
    Epi {
        file: String,
        #[arg(long)]
        morphism: String,
    },
    /// For a non-mono morphism: distinct morphisms it cannot tell apart
    Mono {
        file: String,
        #[arg(long)]
        morphism: String,
    },
    /// A morphism out of a separator distinguishing a distinct parallel pair
    Separator {
        file: String,
        /// The separator soft set
        #[arg(long)]
        object: String,
        /// First morphism of the parallel pair
        #[arg(long)]
        left: String,
        /// Second morphism of the parallel pair
        #[arg(long)]
        right: String,
    },
    /// A morphism into a co-separator distinguishing a distinct parallel pair
    Coseparator {
        file: String,
        #[arg(long)]
        object: String,
        #[arg(long)]
        left: String,
        #[arg(long)]
        right: String,
    },
}

/// Successful command output. `verified` is false only when an oracle
/// comparison found a disagreement, which maps to exit code 1.
pub struct Outcome {
    pub output: String,
    pub verified: bool,
}

fn ok(output: String) -> Result<Outcome, String> {
    Ok(Outcome {
        output,
        verified: true,
    })
}

pub fn run(cli: &Cli) -> Result<Outcome, String> {
    match &cli.command {
        Command::Validate { file } => validate(file, cli.porcelain),
        Command::ClassifyObject { file, name } => classify_object_cmd(file, name, cli.porcelain),
        Command::ClassifyMorphism { file, name } => {
            classify_morphism_cmd(file, name, cli.porcelain)
        }
        Command::Hom(args) => hom(args, cli.porcelain),
        Command::Witness(kind) => witness(kind, cli.porcelain),
        Command::Family { file, max_params } => family(file, *max_params, cli.porcelain),
        Command::OracleCheck { file, max_params } => oracle_check(file, *max_params, cli.porcelain),
    }
}

fn load(file: &str) -> Result<Workspace, String> {
    let text = if file == "-" {
        let mut buffer = String::new();
        std::io::stdin()
            .read_to_string(&mut buffer)
            .map_err(|e| format!("reading stdin: {e}"))?;
        buffer
    } else {
        std::fs::read_to_string(file).map_err(|e| format!("reading {file}: {e}"))?
    };
    Workspace::parse(&text).map_err(|e| e.to_string())
}

fn find_soft_set<'a>(w: &'a Workspace, name: &str) -> Result<&'a SoftSet, String> {
    w.soft_set(name)
        .ok_or_else(|| format!("no soft set named `{name}` in the workspace"))
}

fn find_morphism<'a>(w: &'a Workspace, name: &str) -> Result<&'a SoftMorphism, String> {
    w.morphism(name)
        .ok_or_else(|| format!("no morphism named `{name}` in the workspace"))
}

fn yes_no(value: bool) -> &'static str {
    if value {
        "yes"
    } else {
        "no"
    }
}

/// `a1->b1,a2->b2` in source parameter order; empty for an empty map.
fn encode_map(m: &SoftMorphism) -> String {
    m.map_pairs()
        .map(|(a, b)| format!("{a}->{b}"))
        .collect::<Vec<_>>()
        .join(",")
}

fn validate(file: &str, porcelain: bool) -> Result<Outcome, String> {
    let w = load(file)?;
    let mut out = String::new();
    if porcelain {
        let _ = writeln!(out, "universe_size={}", w.universe().len());
        let _ = writeln!(out, "soft_sets={}", w.soft_sets().len());
        let _ = writeln!(out, "morphisms={}", w.morphisms().len());
    } else {
        let _ = writeln!(out, "universe size: {}", w.universe().len());
        let _ = writeln!(out, "soft sets: {}", w.soft_sets().len());
        let _ = writeln!(out, "morphisms: {}", w.morphisms().len());
    }
    ok(out)
}

fn classify_object_cmd(file: &str, name: &str, porcelain: bool) -> Result<Outcome, String> {
    let w = load(file)?;
    let c = classify_object(find_soft_set(&w, name)?);
    let mut out = String::new();
    let rows = [
        ("initial", "initial", c.is_initial),
        ("terminal", "terminal", c.is_terminal),
        ("zero", "zero", c.is_zero),
        ("separator", "separator", c.is_separator),
        ("coseparator", "co-separator", c.is_coseparator),
    ];
    for (key, label, value) in rows {
        if porcelain {
            let _ = writeln!(out, "{key}={}", yes_no(value));
        } else {
            let _ = writeln!(out, "{label}: {}", yes_no(value));
        }
    }
    if let Some((c1, c2)) = &c.coseparator_witness_params {
        if porcelain {
            let _ = writeln!(out, "coseparator_witness={c1} {c2}");
        } else {
            let _ = writeln!(out, "co-separator witness: {c1} {c2}");
        }
    }
    ok(out)
}

fn classify_morphism_cmd(file: &str, name: &str, porcelain: bool) -> Result<Outcome, String> {
    let w = load(file)?;
    let c = classify_morphism(find_morphism(&w, name)?);
    let mut out = String::new();
    let rows = [
        ("epi", c.is_epi),
        ("mono", c.is_mono),
        ("bimorphism", c.is_bimorphism),
        ("iso", c.is_iso),
    ];
    for (key, value) in rows {
        if porcelain {
            let _ = writeln!(out, "{key}={}", yes_no(value));
        } else {
            let _ = writeln!(out, "{key}: {}", yes_no(value));
        }
    }
    ok(out)
}

fn hom(args: &HomArgs, porcelain: bool) -> Result<Outcome, String> {
    let w = load(&args.file)?;
    let source = find_soft_set(&w, &args.source)?;
    let target = find_soft_set(&w, &args.target)?;
    let mut out = String::new();
    if args.count {
        let n = hom_count(source, target).map_err(|e| e.to_string())?;
        if porcelain {
            let _ = writeln!(out, "count={n}");
        } else {
            let _ = writeln!(out, "count: {n}");
        }
        return ok(out);
    }
    let morphisms = enumerate_hom(source, target).map_err(|e| e.to_string())?;
    if porcelain {
        let _ = writeln!(out, "count={}", morphisms.len());
        for (i, m) in morphisms.iter().enumerate() {
            let _ = writeln!(out, "m{i}={}", encode_map(m));
        }
    } else {
        let _ = writeln!(out, "count: {}", morphisms.len());
        for (i, m) in morphisms.iter().enumerate() {
            let _ = writeln!(out);
            let _ = writeln!(out, "morphism m{i} : {} -> {}", args.source, args.target);
            for (a, b) in m.map_pairs() {
                let _ = writeln!(out, "map {a} -> {b}");
            }
            let _ = writeln!(out, "end");
        }
    }
    ok(out)
}

/// Puts a counterexample into a printable workspace. The auxiliary object is
/// renamed if the user's soft set happens to share its name; `aux_is_target`
/// says which end of the pair the auxiliary sits at.
fn counterexample_workspace(
    cx: &CancellationCounterexample,
    aux_is_target: bool,
) -> Result<Workspace, String> {
    let user_set = if aux_is_target {
        cx.left.source().clone()
    } else {
        cx.left.target().clone()
    };
    let mut aux = cx.auxiliary.clone();
    if aux.name() == user_set.name() {
        aux = aux.renamed(format!("{}2", aux.name()));
    }
    let rebuild = |m: &SoftMorphism| {
        let (source, target) = if aux_is_target {
            (user_set.clone(), aux.clone())
        } else {
            (aux.clone(), user_set.clone())
        };
        SoftMorphism::from_indices(source, m.map_indices().to_vec(), target)
            .map_err(|e| e.to_string())
    };
    let left = rebuild(&cx.left)?;
    let right = rebuild(&cx.right)?;
    let mut w = Workspace::new(user_set.universe().clone());
    let (first, second) = if aux_is_target {
        (user_set, aux)
    } else {
        (aux, user_set)
    };
    w.add_soft_set(first).map_err(|e| e.to_string())?;
    w.add_soft_set(second).map_err(|e| e.to_string())?;
    w.add_morphism("left", left).map_err(|e| e.to_string())?;
    w.add_morphism("right", right).map_err(|e| e.to_string())?;
    Ok(w)
}

fn counterexample_output(
    kind: &str,
    cx: &CancellationCounterexample,
    aux_is_target: bool,
    porcelain: bool,
) -> Result<Outcome, String> {
    let w = counterexample_workspace(cx, aux_is_target)?;
    if !porcelain {
        return ok(w.print());
    }
    let mut out = String::new();
    let _ = writeln!(out, "kind={kind}");
    let _ = writeln!(out, "aux={}", cx.auxiliary.params().join(" "));
    let _ = writeln!(out, "left={}", encode_map(&cx.left));
    let _ = writeln!(out, "right={}", encode_map(&cx.right));
    ok(out)
}

/// Puts a (co-)separator witness into a printable workspace.
fn witness_output(kind: &str, gamma: &SoftMorphism, porcelain: bool) -> Result<Outcome, String> {
    if porcelain {
        let mut out = String::new();
        let _ = writeln!(out, "kind={kind}");
        let _ = writeln!(out, "witness={}", encode_map(gamma));
        return ok(out);
    }
    let mut w = Workspace::new(gamma.source().universe().clone());
    w.add_soft_set(gamma.source().clone())
        .map_err(|e| e.to_string())?;
    if gamma.target() != gamma.source() {
        w.add_soft_set(gamma.target().clone())
            .map_err(|e| e.to_string())?;
    }
    w.add_morphism("witness", gamma.clone())
        .map_err(|e| e.to_string())?;
    ok(w.print())
}

fn witness(kind: &WitnessCommand, porcelain: bool) -> Result<Outcome, String> {
    match kind {
        WitnessCommand::Epi { file, morphism } => {
            let w = load(file)?;
            let m = find_morphism(&w, morphism)?;
            let cx = epi_counterexample(m).map_err(|e| e.to_string())?;
            counterexample_output("epi", &cx, true, porcelain)
        }
        WitnessCommand::Mono { file, morphism } => {
            let w = load(file)?;
            let m = find_morphism(&w, morphism)?;
            let cx = mono_counterexample(m).map_err(|e| e.to_string())?;
            counterexample_output("mono", &cx, false, porcelain)
        }
        WitnessCommand::Separator {
            file,
            object,
            left,
            right,
        } => {
            let w = load(file)?;
            let sep = find_soft_set(&w, object)?;
            let alpha = find_morphism(&w, left)?;
            let beta = find_morphism(&w, right)?;
            let gamma = separator_witness(sep, alpha, beta).map_err(|e| e.to_string())?;
            witness_output("separator", &gamma, porcelain)
        }
        WitnessCommand::Coseparator {
            file,
            object,
            left,
            right,
        } => {
            let w = load(file)?;
            let cosep = find_soft_set(&w, object)?;
            let alpha = find_morphism(&w, left)?;
            let beta = find_morphism(&w, right)?;
            let gamma = coseparator_witness(cosep, alpha, beta).map_err(|e| e.to_string())?;
            witness_output("coseparator", &gamma, porcelain)
        }
    }
}

fn family(file: &str, max_params: usize, porcelain: bool) -> Result<Outcome, String> {
    let w = load(file)?;
    let family = generate_object_family(w.universe(), max_params);
    if porcelain {
        let mut out = String::new();
        let _ = writeln!(out, "count={}", family.len());
        let names: Vec<&str> = family.iter().map(|s| s.name()).collect();
        let _ = writeln!(out, "members={}", names.join(" "));
        return ok(out);
    }
    let mut doc = Workspace::new(w.universe().clone());
    for member in &family {
        doc.add_soft_set(member.clone())
            .map_err(|e| e.to_string())?;
    }
    ok(doc.print())
}

struct Comparison {
    label: &'static str,
    key: &'static str,
    agree: usize,
    mismatches: Vec<String>,
}

impl Comparison {
    fn new(label: &'static str, key: &'static str) -> Self {
        Comparison {
            label,
            key,
            agree: 0,
            mismatches: Vec::new(),
        }
    }

    fn record(&mut self, subject: String, characterization: bool, oracle: bool) {
        if characterization == oracle {
            self.agree += 1;
        } else {
            self.mismatches.push(format!(
                "{} {subject}: characterization={} oracle={}",
                self.label,
                yes_no(characterization),
                yes_no(oracle)
            ));
        }
    }
}

fn oracle_check(file: &str, max_params: usize, porcelain: bool) -> Result<Outcome, String> {
    let w = load(file)?;
    let family = generate_object_family(w.universe(), max_params);
    let err = |e: softset::Error| e.to_string();

    let mut initial = Comparison::new("initial", "initial_agree");
    let mut terminal = Comparison::new("terminal", "terminal_agree");
    let mut separator = Comparison::new("separator", "separator_agree");
    let mut coseparator = Comparison::new("co-separator", "coseparator_agree");
    for s in &family {
        let name = s.name().to_string();
        initial.record(
            name.clone(),
            s.is_initial(),
            oracle_is_initial(s, &family).map_err(err)?,
        );
        terminal.record(
            name.clone(),
            s.is_terminal(),
            oracle_is_terminal(s, &family).map_err(err)?,
        );
        separator.record(
            name.clone(),
            s.is_separator(),
            oracle_is_separator(s, &family).map_err(err)?,
        );
        coseparator.record(
            name,
            s.is_coseparator(),
            oracle_is_coseparator(s, &family).map_err(err)?,
        );
    }

    let mut epi = Comparison::new("epi", "epi_agree");
    let mut mono = Comparison::new("mono", "mono_agree");
    let mut morphism_total = 0usize;
    for source in &family {
        for target in &family {
            for m in enumerate_hom(source, target).map_err(err)? {
                morphism_total += 1;
                let subject = format!("{m}");
                epi.record(
                    subject.clone(),
                    m.is_epi(),
                    oracle_is_epi(&m, &family).map_err(err)?,
                );
                mono.record(
                    subject,
                    m.is_mono(),
                    oracle_is_mono(&m, &family).map_err(err)?,
                );
            }
        }
    }

    let object_groups = [&initial, &terminal, &separator, &coseparator];
    let morphism_groups = [&epi, &mono];
    let all_agree = object_groups
        .iter()
        .chain(morphism_groups.iter())
        .all(|c| c.mismatches.is_empty());

    let mut out = String::new();
    if porcelain {
        let _ = writeln!(out, "objects={}", family.len());
        for c in object_groups {
            let _ = writeln!(out, "{}={}", c.key, c.agree);
        }
        let _ = writeln!(out, "morphisms={morphism_total}");
        for c in morphism_groups {
            let _ = writeln!(out, "{}={}", c.key, c.agree);
        }
        let _ = writeln!(out, "ok={all_agree}");
    } else {
        let _ = writeln!(out, "objects: {}", family.len());
        for c in object_groups {
            let _ = writeln!(out, "{}: {}/{} agree", c.label, c.agree, family.len());
        }
        let _ = writeln!(out, "morphisms: {morphism_total}");
        for c in morphism_groups {
            let _ = writeln!(out, "{}: {}/{} agree", c.label, c.agree, morphism_total);
        }
        for c in object_groups.iter().chain(morphism_groups.iter()) {
            for mismatch in &c.mismatches {
                let _ = writeln!(out, "mismatch: {mismatch}");
            }
        }
        let _ = writeln!(
            out,
            "result: {}",
            if all_agree {
                "ok"
            } else {
                "disagreement found"
            }
        );
    }
    Ok(Outcome {
        output: out,
        verified: all_agree,
    })
}
