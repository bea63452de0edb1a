//! `galh1`: real Galois cohomology of named or custom reductive groups.

use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_bigint::BigInt;
use serde_json::{json, Value};

use galh1::catalog::{build, table_names, FormName, NamedForm, Table};
use galh1::cohomology::{
    h1_count, srf_profile, CentralInvariantGroup, GeneratorSet, InvariantCocharacter,
};
use galh1::fibers::{fiber_report_with, mass_formula_check, FiberReport, IsogenyH1Map};
use galh1::innerclass::InnerClass;
use galh1::input::parse_group;
use galh1::intlin::RatVector;
use galh1::rootdata::{fundamental_group_invariants, isogeny_datum, IsogenyKind, IsogenyMap};
use galh1::{Error, Result};

#[derive(Parser)]
#[command(
    name = "galh1",
    version,
    about = "Real Galois cohomology of reductive groups"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Count H¹(σ, G) and list class representatives.
    H1(GroupArgs),
    /// Regenerate the four tables and compare with the expected values.
    Tables(TableArgs),
    /// Fibers of H¹ along the adjoint quotient (or from the simply connected cover).
    Fibers(GroupArgs),
    /// Print the root datum, inner class and central invariant.
    Describe(GroupArgs),
    /// |H¹| for every central invariant class of the inner class.
    Profile(GroupArgs),
}

#[derive(Args)]
#[group(id = "selector", required = true, multiple = false, args = ["group", "file"])]
struct GroupArgs {
    /// Catalog name, e.g. "su(2,1)" or "ad.e7.split".
    #[arg(long)]
    group: Option<String>,
    /// Custom group file.
    #[arg(long)]
    file: Option<PathBuf>,
    #[command(flatten)]
    common: Common,
}

#[derive(Args)]
struct TableArgs {
    /// Size bound for the generated tables.
    #[arg(long, default_value_t = 8)]
    max_rank: usize,
    #[command(flatten)]
    common: Common,
}

#[derive(Args)]
struct Common {
    /// Emit JSON (sorted keys, rationals as "num/den").
    #[arg(long)]
    json: bool,
    /// Weyl group acting on the strong classes.
    #[arg(long, value_enum, default_value_t = Gens::Wi)]
    gens: Gens,
}

#[derive(Clone, Copy, ValueEnum)]
enum Gens {
    Wi,
    W0,
}

impl Gens {
    fn set(self) -> GeneratorSet {
        match self {
            Gens::Wi => GeneratorSet::Wi,
            Gens::W0 => GeneratorSet::W0,
        }
    }
}

/// A group selected on the command line.
struct Selected {
    label: String,
    ic: InnerClass,
    zeta: InvariantCocharacter,
    form: Option<NamedForm>,
}

fn select(args: &GroupArgs) -> Result<Selected> {
    if let Some(name) = &args.group {
        let name: FormName = name.parse()?;
        let form = build(name)?;
        return Ok(Selected {
            label: name.to_string(),
            ic: form.ic.clone(),
            zeta: form.zeta.clone(),
            form: Some(form),
        });
    }
    let path = args.file.as_ref().expect("clap enforces one selector");
    let text = fs::read_to_string(path).map_err(|e| Error::Parse {
        line: 0,
        message: format!("{}: {e}", path.display()),
    })?;
    let spec = parse_group(&text)?;
    let label = spec
        .datum
        .name()
        .map_or_else(|| path.display().to_string(), str::to_string);
    Ok(Selected {
        label,
        ic: spec.ic,
        zeta: spec.zeta,
        form: None,
    })
}

fn rat(x: &num_rational::BigRational) -> String {
    format!("{}/{}", x.numer(), x.denom())
}

fn rat_vec(v: &RatVector) -> Value {
    Value::from(v.to_rationals().iter().map(rat).collect::<Vec<_>>())
}

fn ints(v: &[BigInt]) -> Value {
    Value::from(v.iter().map(ToString::to_string).collect::<Vec<_>>())
}

fn show_ints(v: &[BigInt]) -> String {
    format!(
        "[{}]",
        v.iter()
            .map(ToString::to_string)
            .collect::<Vec<_>>()
            .join(", ")
    )
}

fn print_json(v: &Value) {
    println!(
        "{}",
        serde_json::to_string_pretty(v).expect("JSON values serialize")
    );
}

fn run_h1(args: &GroupArgs) -> Result<()> {
    let g = select(args)?;
    let set = args.common.gens.set();
    let r = h1_count(&g.zeta, set)?;
    let class = CentralInvariantGroup::new(&g.ic).class_of(g.zeta.zeta())?;
    let expected = g.form.as_ref().and_then(|f| f.expected_h1);
    if args.common.json {
        print_json(&json!({
            "group": g.label,
            "h1": r.count,
            "expected_h1": expected,
            "invariant_class": ints(&class),
            "zeta": rat_vec(g.zeta.zeta()),
            "representatives": r.representatives.iter().map(rat_vec).collect::<Vec<_>>(),
            "orbit_sizes": r.orbit_sizes,
            "strong_class_set_size": r.set_size,
        }));
        return Ok(());
    }
    println!("|H1| = {}", r.count);
    println!("group: {}", g.label);
    println!("invariant class: {}", show_ints(&class));
    println!("zeta: {}", g.zeta.zeta());
    println!("|F(zeta)| = {}", r.set_size);
    println!("representatives (orbit size):");
    for (u, s) in r.representatives.iter().zip(&r.orbit_sizes) {
        println!("  {u} ({s})");
    }
    Ok(())
}

fn run_describe(args: &GroupArgs) -> Result<()> {
    let g = select(args)?;
    let d = g.ic.datum();
    let (_, factors) = galh1::cohomology::central_invariant_classgroup(&g.ic);
    let imaginary = g.ic.imaginary_root_subsystem();
    let pi1 = fundamental_group_invariants(d);
    if args.common.json {
        let rows = |m: &galh1::intlin::IntMatrix| -> Value {
            m.rows().map(ints).collect::<Vec<_>>().into()
        };
        print_json(&json!({
            "group": g.label,
            "rank": d.rank(),
            "semisimple_rank": d.semisimple_rank(),
            "type": d.type_label(),
            "cartan_matrix": d.cartan_matrix(),
            "roots": d.root_system().len(),
            "fundamental_group": ints(&pi1),
            "delta_perm": g.ic.perm(),
            "tau0": rows(g.ic.tau0()),
            "equal_rank": g.ic.is_equal_rank(),
            "imaginary_roots": imaginary.roots.len(),
            "central_invariant_group": ints(&factors),
            "zeta": rat_vec(g.zeta.zeta()),
            "expected_h1": g.form.as_ref().and_then(|f| f.expected_h1),
            "expected_pi0": g.form.as_ref().and_then(|f| f.expected_pi0),
        }));
        return Ok(());
    }
    println!("group: {}", g.label);
    println!(
        "type: {} (rank {}, semisimple rank {})",
        d.type_label(),
        d.rank(),
        d.semisimple_rank()
    );
    println!("roots: {}", d.root_system().len());
    println!("cartan matrix: {:?}", d.cartan_matrix());
    println!("fundamental group: {}", show_ints(&pi1));
    println!("delta: {:?}", g.ic.perm());
    println!(
        "tau0: [{}]",
        g.ic.tau0()
            .rows()
            .map(show_ints)
            .collect::<Vec<_>>()
            .join(", ")
    );
    println!("equal rank: {}", g.ic.is_equal_rank());
    println!("imaginary roots: {}", imaginary.roots.len());
    println!("central invariant group: {}", show_ints(&factors));
    println!("zeta: {}", g.zeta.zeta());
    if let Some(f) = &g.form {
        if let Some(e) = f.expected_h1 {
            println!("expected |H1|: {e}");
        }
        if let Some(e) = f.expected_pi0 {
            println!("expected |pi0|: {e}");
        }
    }
    Ok(())
}

fn run_profile(args: &GroupArgs) -> Result<()> {
    let g = select(args)?;
    let entries = srf_profile(&g.ic, args.common.gens.set());
    if args.common.json {
        let rows: Vec<Value> = entries
            .iter()
            .map(|e| match &e.h1 {
                Ok((z, r)) => json!({"class": ints(&e.class), "zeta": rat_vec(z.zeta()), "h1": r.count, "error": null}),
                Err(err) => json!({"class": ints(&e.class), "zeta": null, "h1": null, "error": err.name()}),
            })
            .collect();
        print_json(&json!({"group": g.label, "classes": rows}));
        return Ok(());
    }
    println!("group: {}", g.label);
    for e in &entries {
        match &e.h1 {
            Ok((z, r)) => println!(
                "class {}: |H1| = {} (zeta {})",
                show_ints(&e.class),
                r.count,
                z.zeta()
            ),
            Err(err) => println!("class {}: {}", show_ints(&e.class), err.name()),
        }
    }
    Ok(())
}

/// The isogeny to use for a selected group: the cover of an adjoint
/// catalog form, otherwise the adjoint quotient.
fn isogeny_for(g: &Selected) -> Result<(InnerClass, InvariantCocharacter, IsogenyMap, String)> {
    if let Some((sc, f)) = g.form.as_ref().and_then(|f| f.cover.as_ref()) {
        return Ok((
            sc.ic.clone(),
            sc.zeta.clone(),
            f.clone(),
            sc.name.to_string(),
        ));
    }
    let (_, f) = isogeny_datum(g.ic.datum(), IsogenyKind::Adjoint)?;
    Ok((g.ic.clone(), g.zeta.clone(), f, g.label.clone()))
}

fn run_fibers(args: &GroupArgs) -> Result<()> {
    let g = select(args)?;
    let (ic, zeta, f, source) = isogeny_for(&g)?;
    let (report, map): (FiberReport, IsogenyH1Map) =
        fiber_report_with(&f, &ic, &zeta, args.common.gens.set())?;
    let mass = mass_formula_check(&f, &ic, &zeta)?;
    let selected = g
        .form
        .as_ref()
        .filter(|x| x.cover.is_some())
        .and_then(|x| report.target_index(&map, &x.strong_rep));
    if args.common.json {
        let targets: Vec<Value> = report
            .targets
            .iter()
            .enumerate()
            .map(|(i, t)| {
                json!({
                    "index": i,
                    "representative": rat_vec(&t.representative),
                    "invariant": ints(&t.invariant),
                    "in_image": t.in_image,
                    "fiber_size": t.fiber_size,
                    "pi0": t.pi0.as_ref().map(ToString::to_string),
                })
            })
            .collect();
        print_json(&json!({
            "source": source,
            "selected_target": selected,
            "source_h1": report.source_total,
            "source_invariant": ints(&report.source_invariant),
            "kernel_h1_order": report.center_h1_order.to_string(),
            "targets": targets,
            "mass_formula": {"lhs": mass.lhs.to_string(), "rhs": rat(&mass.rhs), "holds": mass.holds()},
        }));
        return Ok(());
    }
    println!("source: {source} (|H1| = {})", report.source_total);
    println!("kernel |H1(A)| = {}", report.center_h1_order);
    println!("source invariant: {}", show_ints(&report.source_invariant));
    for (i, t) in report.targets.iter().enumerate() {
        let mark = if selected == Some(i) { " *" } else { "" };
        let pi0 = t
            .pi0
            .as_ref()
            .map_or_else(|| "-".to_string(), ToString::to_string);
        println!(
            "target {i}{mark}: {} invariant {} in_image {} fiber {} pi0 {pi0}",
            t.representative,
            show_ints(&t.invariant),
            t.in_image,
            t.fiber_size
        );
    }
    println!(
        "mass formula: {} = {} ({})",
        mass.lhs,
        galh1::intlin::format_rational(&mass.rhs),
        if mass.holds() { "holds" } else { "fails" }
    );
    Ok(())
}

/// One generated table cell.
struct Cell {
    name: FormName,
    expected_h1: Option<u64>,
    h1: std::result::Result<u64, &'static str>,
    expected_pi0: Option<u64>,
    pi0: Option<std::result::Result<u64, &'static str>>,
}

impl Cell {
    fn matches(&self) -> bool {
        let h1 = self.h1.ok() == self.expected_h1 && self.expected_h1.is_some();
        let pi0 = match (self.expected_pi0, &self.pi0) {
            (Some(e), Some(Ok(got))) => e == *got,
            (Some(_), _) => false,
            (None, _) => true,
        };
        h1 && pi0
    }
}

fn component_group(form: &NamedForm, set: GeneratorSet) -> Result<u64> {
    let (sc, f) = form
        .cover
        .as_ref()
        .ok_or(Error::UnknownName(form.name.to_string()))?;
    let (report, map) = fiber_report_with(f, &sc.ic, &sc.zeta, set)?;
    let t = report
        .target_index(&map, &form.strong_rep)
        .ok_or(Error::NotClosed)?;
    let pi0 = report.targets[t].pi0.clone().ok_or(Error::NotClosed)?;
    u64::try_from(pi0).map_err(|_| Error::TooLarge {
        size: "pi0".into(),
        cap: u64::MAX.to_string(),
    })
}

fn cell(name: FormName, set: GeneratorSet) -> Cell {
    let form = build(name);
    let h1 = form.as_ref().map_err(Error::name).and_then(|f| {
        h1_count(&f.zeta, set)
            .map(|r| r.count as u64)
            .map_err(|e| e.name())
    });
    let expected_pi0 = name.expected_pi0();
    let pi0 = expected_pi0.map(|_| {
        form.as_ref()
            .map_err(Error::name)
            .and_then(|f| component_group(f, set).map_err(|e| e.name()))
    });
    Cell {
        name,
        expected_h1: name.expected_h1(),
        h1,
        expected_pi0,
        pi0,
    }
}

fn run_tables(args: &TableArgs) -> Result<bool> {
    let set = args.common.gens.set();
    let tables: Vec<(Table, Vec<Cell>)> = Table::ALL
        .iter()
        .map(|&t| {
            (
                t,
                table_names(t, args.max_rank)
                    .into_iter()
                    .map(|n| cell(n, set))
                    .collect(),
            )
        })
        .collect();
    let all = tables
        .iter()
        .all(|(_, cells)| cells.iter().all(Cell::matches));
    let shown = |r: &std::result::Result<u64, &'static str>| -> Value {
        match r {
            Ok(v) => json!(v),
            Err(e) => json!(e),
        }
    };
    if args.common.json {
        let mut out = serde_json::Map::new();
        for (t, cells) in &tables {
            let rows: Vec<Value> = cells
                .iter()
                .map(|c| {
                    json!({
                        "name": c.name.to_string(),
                        "expected_h1": c.expected_h1,
                        "h1": shown(&c.h1),
                        "expected_pi0": c.expected_pi0,
                        "pi0": c.pi0.as_ref().map(shown),
                        "match": c.matches(),
                    })
                })
                .collect();
            out.insert(t.key().to_string(), rows.into());
        }
        print_json(&json!({"max_rank": args.max_rank, "all_match": all, "tables": out}));
        return Ok(all);
    }
    let text = |r: &std::result::Result<u64, &'static str>| match r {
        Ok(v) => v.to_string(),
        Err(e) => e.to_string(),
    };
    for (t, cells) in &tables {
        let bad = cells.iter().filter(|c| !c.matches()).count();
        println!("== {} ({} rows, {} mismatches)", t.key(), cells.len(), bad);
        for c in cells {
            let exp = c
                .expected_h1
                .map_or_else(|| "-".to_string(), |v| v.to_string());
            let mut line = format!(
                "{:<18} |H1| {:>3} expected {:>3}",
                c.name.to_string(),
                text(&c.h1),
                exp
            );
            if let (Some(e), Some(p)) = (c.expected_pi0, &c.pi0) {
                line += &format!("  pi0 {:>2} expected {:>2}", text(p), e);
            }
            line += if c.matches() { "  ok" } else { "  MISMATCH" };
            println!("{line}");
        }
    }
    println!(
        "{}",
        if all {
            "all tables match"
        } else {
            "tables differ from expected values"
        }
    );
    Ok(all)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let outcome = match &cli.command {
        Command::H1(a) => run_h1(a).map(|_| true),
        Command::Describe(a) => run_describe(a).map(|_| true),
        Command::Profile(a) => run_profile(a).map(|_| true),
        Command::Fibers(a) => run_fibers(a).map(|_| true),
        Command::Tables(a) => run_tables(a),
    };
    match outcome {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(3),
        Err(e) => {
            eprintln!("error: {}: {e}", e.name());
            ExitCode::from(1)
        }
    }
}
