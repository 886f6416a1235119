//! The `bicat` command line: reads structure files and runs checks on the
//! named definitions.
//!
//! Exit codes: 0 when every check passes, 1 when a mathematical check fails
//! (the report carries the witness), 2 for parse errors, unknown names and
//! other structural problems.

pub mod format;
pub mod report;

use std::collections::HashSet;
use std::path::PathBuf;
use std::sync::Arc;
use std::time::Instant;

use bicat_core::cylinder::{is_costrict, lax_cylinder, BatteryBounds, Costrictness};
use bicat_core::icon::{validate_icon, vcomp_icons, Icon};
use bicat_core::internal::is_fibration;
use bicat_core::laxfun::{classify, compose_lax, validate_lax_functor, LaxFunctor};
use bicat_core::monoidal::validate_monoidal;
use bicat_core::nerve::{check_simplicial_identities, two_nerve};
use bicat_core::oplax::{
    classify_oplax, interchange_check, strictness_by_witness, validate_oplax, vcomp_oplax, Interchange,
    InterchangeWitness, OplaxNat,
};
use bicat_core::{
    cat::validate_category, corpus, criteria, internal::is_equivalence_in_bicat2, oracle, validate_bicategory,
    FiniteBicategory, OneCell, Strict2Category, StructureError, ValidationReport,
};
use clap::{Parser, Subcommand};
use thiserror::Error;

use crate::format::{Document, FormatError, Item, Writer};
use crate::report::Report;

#[derive(Debug, Error)]
pub enum CliError {
    #[error(transparent)]
    Format(#[from] FormatError),

    #[error(transparent)]
    Structure(#[from] StructureError),

    #[error("{0}")]
    Usage(String),

    #[error("cannot write {path}: {source}")]
    Output {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },
}

#[derive(Debug, Parser)]
#[command(name = "bicat", version, about = "Checks finite bicategories, lax functors, icons and oplax transformations")]
pub struct Cli {
    /// Structure files to load (repeatable).
    #[arg(short, long = "file", global = true)]
    pub files: Vec<PathBuf>,

    /// A structure file or a directory of `.bicat` files loaded before `--file`.
    #[arg(long, env = "BICAT_CORPUS", global = true)]
    pub corpus: Option<PathBuf>,

    /// Also write the report to this file.
    #[arg(short, long, global = true)]
    pub output: Option<PathBuf>,

    /// Leave out the timing section.
    #[arg(long, global = true)]
    pub no_timing: bool,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Validate any definition against its laws.
    Validate { name: String },
    /// Classify a lax functor (strict, normal homomorphism, homomorphism, lax).
    Classify { functor: String },
    /// Compose two lax functors, icons or oplax transformations: `g` after `f`.
    Compose { g: String, f: String },
    /// Check the icon laws.
    CheckIcon { icon: String },
    /// Check the oplax transformation laws and classify the transformation.
    CheckOplax { transformation: String },
    /// Check the interchange law for `beta` against `alpha`.
    Interchange { beta: String, alpha: String },
    /// Decide strictness through walking-arrow witnesses.
    Strictness { transformation: String },
    /// Decide costrictness: passes the battery, or is refuted by a cylinder.
    Costrict { transformation: String },
    /// Build the lax cylinder of a 2-category and audit it.
    Cylinder { two_category: String },
    /// Build the truncated 2-nerve and check the simplicial identities.
    Nerve {
        bicategory: String,
        #[arg(long, default_value_t = 2)]
        level: usize,
    },
    /// Decide whether a lax functor is an equivalence of bicategories.
    Equivalence { functor: String },
    /// Decide whether a 1-cell of a 2-category is a fibration.
    Fibration { two_category: String, one_cell: String },
    /// Run the bundled corpus checks.
    Corpus {
        #[command(subcommand)]
        action: CorpusAction,
    },
}

#[derive(Debug, Subcommand)]
pub enum CorpusAction {
    /// Run every acceptance criterion.
    RunAll,
    /// Print the builtin definition keys.
    List,
}

/// Runs a parsed command line and returns the exit code and the rendered
/// report (or error message).
pub fn run(cli: &Cli) -> (i32, String) {
    let start = Instant::now();
    let result = load(cli).and_then(|doc| execute(&cli.command, &doc));
    match result {
        Ok(mut report) => {
            report.elapsed = start.elapsed();
            let text = report.render(!cli.no_timing);
            if let Some(path) = &cli.output {
                if let Err(source) = std::fs::write(path, &text) {
                    let e = CliError::Output {
                        path: path.clone(),
                        source,
                    };
                    return (2, format!("error: {e}\n"));
                }
            }
            (report.exit_code(), text)
        }
        Err(e) => (2, format!("error: {e}\n")),
    }
}

/// Parses `args` (without the program name) and runs them.
pub fn run_args<I, S>(args: I) -> (i32, String)
where
    I: IntoIterator<Item = S>,
    S: Into<std::ffi::OsString> + Clone,
{
    let argv = std::iter::once(std::ffi::OsString::from("bicat")).chain(args.into_iter().map(Into::into));
    match Cli::try_parse_from(argv) {
        Ok(cli) => run(&cli),
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            (code, e.to_string())
        }
    }
}

fn load(cli: &Cli) -> Result<Document, CliError> {
    let mut doc = Document::new();
    if let Some(c) = &cli.corpus {
        doc.load_path(c)?;
    }
    for f in &cli.files {
        doc.load_path(f)?;
    }
    Ok(doc)
}

fn law_check(report: &mut Report, name: String, r: &ValidationReport) -> bool {
    let detail = r.violations.iter().map(|v| v.to_string()).collect();
    report.check(name, r.is_ok(), detail)
}

/// Validates a definition and everything it is built from, once each.
struct Prerequisites<'a> {
    report: &'a mut Report,
    seen: HashSet<String>,
}

impl Prerequisites<'_> {
    fn bicategory(&mut self, b: &FiniteBicategory) -> Result<bool, CliError> {
        if !self.seen.insert(format!("bicategory {}", b.name())) {
            return Ok(true);
        }
        let r = validate_bicategory(b)?;
        Ok(law_check(self.report, format!("bicategory `{}` is coherent", b.name()), &r))
    }

    fn functor(&mut self, label: &str, f: &LaxFunctor) -> Result<bool, CliError> {
        let ends = self.bicategory(&f.source)? & self.bicategory(&f.target)?;
        if !ends || !self.seen.insert(format!("functor {label}")) {
            return Ok(ends);
        }
        let r = validate_lax_functor(f)?;
        Ok(law_check(self.report, format!("lax functor `{label}` satisfies its axioms"), &r))
    }

    fn icon(&mut self, label: &str, a: &Icon) -> Result<bool, CliError> {
        let ends = self.functor(&format!("source of {label}"), &a.source)?
            & self.functor(&format!("target of {label}"), &a.target)?;
        if !ends {
            return Ok(false);
        }
        let r = validate_icon(a)?;
        Ok(law_check(self.report, format!("icon `{label}` satisfies its axioms"), &r))
    }

    fn oplax(&mut self, label: &str, u: &OplaxNat) -> Result<bool, CliError> {
        let ends = self.functor(&format!("source of {label}"), &u.source)?
            & self.functor(&format!("target of {label}"), &u.target)?;
        if !ends {
            return Ok(false);
        }
        let r = validate_oplax(u)?;
        Ok(law_check(self.report, format!("oplax transformation `{label}` satisfies its axioms"), &r))
    }

    fn item(&mut self, label: &str, item: &Item) -> Result<bool, CliError> {
        match item {
            Item::Category(c) => {
                let r = validate_category(c);
                Ok(law_check(self.report, format!("category `{label}` satisfies the category laws"), &r))
            }
            Item::Bicategory(b) => self.bicategory(b),
            Item::Monoidal(v) => {
                let r = validate_monoidal(v)?;
                Ok(law_check(self.report, format!("monoidal category `{label}` is coherent"), &r))
            }
            Item::Functor(f) => self.functor(label, f),
            Item::Icon(a) => self.icon(label, a),
            Item::Oplax(u) => self.oplax(label, u),
        }
    }
}

fn prerequisites(report: &mut Report) -> Prerequisites<'_> {
    Prerequisites {
        report,
        seen: HashSet::new(),
    }
}

fn strict(b: &Arc<FiniteBicategory>) -> Result<Strict2Category, CliError> {
    Ok(Strict2Category::new(b.clone())?)
}

fn find_one_cell(b: &FiniteBicategory, token: &str) -> Result<OneCell, CliError> {
    let hits: Vec<OneCell> = b
        .all_one_cells()
        .into_iter()
        .filter(|&f| b.q1(f) == token || b.one_cell_name(f) == token)
        .collect();
    match hits.as_slice() {
        [f] => Ok(*f),
        [] => Err(StructureError::Unknown {
            kind: "1-cell",
            name: token.to_string(),
        }
        .into()),
        _ => Err(CliError::Usage(format!(
            "1-cell `{token}` is ambiguous; qualify it as SOURCE->TARGET:NAME"
        ))),
    }
}

fn describe_interchange(u: &OplaxNat, w: &InterchangeWitness) -> String {
    let a = &u.source.source;
    match w {
        InterchangeWitness::Component(x) => format!("components differ at object {}", a.object_name(*x)),
        InterchangeWitness::Constraint(f) => format!("constraints differ at 1-cell {}", a.q1(*f)),
    }
}

pub fn execute(command: &Command, doc: &Document) -> Result<Report, CliError> {
    let mut report = Report::new(command_line(command));
    match command {
        Command::Validate { name } => {
            prerequisites(&mut report).item(name, doc.get(name)?)?;
        }
        Command::Classify { functor } => {
            let f = doc.functor(functor)?;
            if prerequisites(&mut report).functor(functor, f)? {
                report.note(format!("class: {}", classify(f)));
            }
        }
        Command::Compose { g, f } => compose(doc, g, f, &mut report)?,
        Command::CheckIcon { icon } => {
            prerequisites(&mut report).icon(icon, doc.icon(icon)?)?;
        }
        Command::CheckOplax { transformation } => {
            let u = doc.oplax(transformation)?;
            if prerequisites(&mut report).oplax(transformation, u)? {
                report.note(format!("class: {}", classify_oplax(u)));
            }
        }
        Command::Interchange { beta, alpha } => {
            let (b, a) = (doc.oplax(beta)?, doc.oplax(alpha)?);
            let mut p = prerequisites(&mut report);
            if p.oplax(beta, b)? & p.oplax(alpha, a)? {
                let detail = match interchange_check(b, a)? {
                    Interchange::Holds => vec![],
                    Interchange::Fails(w) => vec![format!("witness: {}", describe_interchange(a, &w))],
                };
                let holds = detail.is_empty();
                report.check(format!("interchange of `{beta}` with `{alpha}`"), holds, detail);
            }
        }
        Command::Strictness { transformation } => {
            let u = doc.oplax(transformation)?;
            if prerequisites(&mut report).oplax(transformation, u)? {
                let v = strictness_by_witness(u)?;
                let b = &u.source.source;
                let detail = v.witnesses.iter().map(|f| format!("witness: non-identity constraint at {}", b.q1(*f))).collect();
                report.check(
                    "witness verdict matches the constraints",
                    v.strict == classify_oplax(u).strict,
                    vec![],
                );
                report.check(format!("`{transformation}` is strict"), v.strict, detail);
            }
        }
        Command::Costrict { transformation } => {
            let u = doc.oplax(transformation)?;
            if prerequisites(&mut report).oplax(transformation, u)? {
                let targets = corpus::strict_bicategories();
                match is_costrict(u, &targets, &BatteryBounds::default())? {
                    Costrictness::Costrict { battery_checked } => {
                        report.note(format!("battery: {battery_checked} transformations, including the cylinder crossing"));
                        report.check(format!("`{transformation}` is costrict"), true, vec![]);
                    }
                    Costrictness::NotCostrict(r) => {
                        let a = &u.source.source;
                        let detail = vec![
                            format!("component at {} is not an identity", a.object_name(r.object)),
                            format!("witness: {} against the crossing of the cylinder on {}", describe_interchange(u, &r.witness), r.cylinder.base.name()),
                            format!("replayed: {}", r.replay(u)?),
                        ];
                        report.check(format!("`{transformation}` is costrict"), false, detail);
                    }
                    Costrictness::Contradiction { witness, .. } => {
                        let detail = vec![format!("an icon failed interchange: {}", describe_interchange(u, &witness))];
                        report.check(format!("`{transformation}` is costrict"), false, detail);
                    }
                }
            }
        }
        Command::Cylinder { two_category } => {
            let b = doc.bicategory(two_category)?;
            if prerequisites(&mut report).bicategory(b)? {
                let cyl = lax_cylinder(&strict(b)?)?;
                report.note(format!("total: {}", cyl.total));
                report.note(format!("quotient: {}", cyl.audit));
                report.check("quotient is a congruence", cyl.audit.is_congruence(), vec![]);
                if b.num_objects() <= 3 {
                    for x in b.objects() {
                        for y in b.objects() {
                            let cmp = oracle::compare_cylinder_with_free(&cyl, x, y, 16);
                            report.check(
                                format!(
                                    "cross hom ({}, {}) matches the free presentation ({} objects, {} morphisms)",
                                    b.object_name(x),
                                    b.object_name(y),
                                    cmp.objects,
                                    cmp.closed_classes
                                ),
                                cmp.agrees(),
                                cmp.failures.iter().map(|f| format!("{f:?}")).collect(),
                            );
                        }
                    }
                }
            }
        }
        Command::Nerve { bicategory, level } => {
            let b = doc.bicategory(bicategory)?;
            if prerequisites(&mut report).bicategory(b)? {
                let x = two_nerve(b, *level)?;
                for l in &x.levels {
                    report.note(format!("level {}: {} simplices, {} morphisms", l.n, l.simplices.len(), l.icons.len()));
                }
                let (checked, failures) = check_simplicial_identities(&x)?;
                let detail = failures.iter().map(|f| format!("{} at level {}", f.identity, f.level)).collect();
                report.check(format!("{checked} simplicial identities hold"), failures.is_empty(), detail);
            }
        }
        Command::Equivalence { functor } => {
            let f = doc.functor(functor)?;
            if prerequisites(&mut report).functor(functor, f)? {
                let v = is_equivalence_in_bicat2(f);
                for c in &v.certified {
                    report.note(format!("certified: {c}"));
                }
                let detail = v.failure.iter().map(|(c, w)| format!("{c} fails: {w}")).collect();
                report.check(format!("`{functor}` is an equivalence"), v.verdict, detail);
            }
        }
        Command::Fibration { two_category, one_cell } => {
            let b = doc.bicategory(two_category)?;
            if prerequisites(&mut report).bicategory(b)? {
                let p = find_one_cell(b, one_cell)?;
                let v = is_fibration(&strict(b)?, p)?;
                let detail = if v.holds() { vec![] } else { vec![v.describe(b)] };
                report.check(format!("{} is a fibration", b.q1(p)), v.holds(), detail);
            }
        }
        Command::Corpus { action } => match action {
            CorpusAction::RunAll => {
                for o in criteria::run_all() {
                    let mut detail = vec![o.summary.clone()];
                    detail.extend(o.failures.iter().cloned());
                    report.check(format!("criterion {} {}", o.number, o.title), o.passed, detail);
                }
            }
            CorpusAction::List => {
                for k in format::BUILTINS {
                    report.note(k);
                }
            }
        },
    }
    Ok(report)
}

fn command_line(command: &Command) -> String {
    match command {
        Command::Validate { name } => format!("validate {name}"),
        Command::Classify { functor } => format!("classify {functor}"),
        Command::Compose { g, f } => format!("compose {g} {f}"),
        Command::CheckIcon { icon } => format!("check-icon {icon}"),
        Command::CheckOplax { transformation } => format!("check-oplax {transformation}"),
        Command::Interchange { beta, alpha } => format!("interchange {beta} {alpha}"),
        Command::Strictness { transformation } => format!("strictness {transformation}"),
        Command::Costrict { transformation } => format!("costrict {transformation}"),
        Command::Cylinder { two_category } => format!("cylinder {two_category}"),
        Command::Nerve { bicategory, level } => format!("nerve {bicategory} --level {level}"),
        Command::Equivalence { functor } => format!("equivalence {functor}"),
        Command::Fibration { two_category, one_cell } => format!("fibration {two_category} {one_cell}"),
        Command::Corpus { action: CorpusAction::RunAll } => "corpus run-all".into(),
        Command::Corpus { action: CorpusAction::List } => "corpus list".into(),
    }
}

fn compose(doc: &Document, g: &str, f: &str, report: &mut Report) -> Result<(), CliError> {
    let name = format!("{g}.{f}");
    match (doc.get(g)?, doc.get(f)?) {
        (Item::Functor(gg), Item::Functor(ff)) => {
            let mut p = prerequisites(report);
            if p.functor(g, gg)? & p.functor(f, ff)? {
                let h = compose_lax(gg, ff)?;
                let r = validate_lax_functor(&h)?;
                law_check(report, format!("composite `{name}` satisfies the axioms"), &r);
                report.note(format!("class: {}", classify(&h)));
                let mut w = Writer::new();
                w.functor(&name, &h);
                report.output = Some(w.finish());
            }
        }
        (Item::Icon(b), Item::Icon(a)) => {
            let mut p = prerequisites(report);
            if p.icon(g, b)? & p.icon(f, a)? {
                let c = vcomp_icons(b, a)?;
                let r = validate_icon(&c)?;
                law_check(report, format!("composite `{name}` satisfies the icon axioms"), &r);
                let mut w = Writer::new();
                w.icon(&name, &c);
                report.output = Some(w.finish());
            }
        }
        (Item::Oplax(v), Item::Oplax(u)) => {
            let mut p = prerequisites(report);
            if p.oplax(g, v)? & p.oplax(f, u)? {
                let c = vcomp_oplax(v, u)?;
                let r = validate_oplax(&c)?;
                law_check(report, format!("composite `{name}` satisfies the oplax axioms"), &r);
                report.note(format!("class: {}", classify_oplax(&c)));
                let mut w = Writer::new();
                w.oplax(&name, &c);
                report.output = Some(w.finish());
            }
        }
        (x, y) => {
            return Err(CliError::Usage(format!("cannot compose a {} after a {}", x.kind(), y.kind())));
        }
    }
    Ok(())
}
