use std::fmt::Write as _;
use std::process::ExitCode;

use atomkit::census::{self, DyckPath};
use atomkit::equivalence;
use atomkit::export;
use atomkit::hecke;
use atomkit::orders::{self, ProbeReport};
use atomkit::structure;
use atomkit::tableaux::{self, Status};
use atomkit::{Error, OrderKind, SignedInvolution, SignedPermutation};
use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;

#[derive(Parser)]
#[command(
    name = "atomkit",
    version,
    about = "Atoms of involutions in the hyperoctahedral group"
)]
struct Cli {
    #[command(subcommand)]
    verb: Verb,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
    Dot,
    Tsv,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Suite {
    Identities,
    Oracle,
    Hecke,
    Shape,
    Census,
    Dyck,
}

#[derive(Subcommand)]
enum Verb {
    /// Inverse atoms A(z)^-1 of an involution.
    Atoms {
        #[arg(short = 'z', allow_hyphen_values = true)]
        z: String,
        /// Print A(z) instead of A(z)^-1.
        #[arg(long)]
        inverse: bool,
        /// Use the exhaustive scan over W_n.
        #[arg(long)]
        brute: bool,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Inverse Hecke atoms, by exhaustive scan.
    HeckeAtoms {
        #[arg(short = 'z', allow_hyphen_values = true)]
        z: String,
        #[arg(long)]
        inverse: bool,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Hasse diagram of A(z)^-1 under one of the orders.
    Hasse {
        #[arg(short = 'z', allow_hyphen_values = true)]
        z: String,
        #[arg(long, default_value = "ltB")]
        order: OrderKind,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Noncrossing symmetric perfect matchings of ±Neg(z).
    Ncsp {
        #[arg(short = 'z', allow_hyphen_values = true)]
        z: String,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Shape of an inverse atom.
    Shape {
        #[arg(short = 'w', allow_hyphen_values = true)]
        w: String,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Nested descent data and graph of an inverse atom.
    Nested {
        #[arg(short = 'w', allow_hyphen_values = true)]
        w: String,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Counts of atomic involutions against closed forms.
    Census {
        #[arg(short = 'n')]
        n: usize,
        #[arg(long)]
        check: bool,
        #[arg(long, value_enum, default_value = "tsv")]
        format: Format,
    },
    /// Reduced words of w, or involution words of z with --involution.
    Words {
        #[arg(short = 'w', allow_hyphen_values = true)]
        w: String,
        #[arg(long)]
        count: bool,
        #[arg(long)]
        involution: bool,
    },
    /// Run one of the self-checks.
    Verify {
        #[arg(long, value_enum)]
        suite: Suite,
        #[arg(short = 'n')]
        n: usize,
    },
    /// Poset probes on one involution, or on every involution of rank n.
    Probe {
        #[arg(short = 'z', allow_hyphen_values = true, conflicts_with = "n")]
        z: Option<String>,
        #[arg(short = 'n')]
        n: Option<usize>,
        #[arg(long, default_value = "lllB")]
        order: OrderKind,
        /// Only list involutions whose poset is not a lattice.
        #[arg(long)]
        lattice: bool,
        #[arg(long)]
        paranoid: bool,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.verb) {
        Ok((out, ok)) => {
            print!("{out}");
            if ok {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(if e.is_parse() { 2 } else { 1 })
        }
    }
}

fn involution(text: &str) -> atomkit::Result<SignedInvolution> {
    SignedInvolution::parse(text)
}

fn lines<T: std::fmt::Display>(items: impl IntoIterator<Item = T>) -> String {
    items.into_iter().map(|x| format!("{x}\n")).collect()
}

fn unsupported(verb: &str, f: Format) -> Error {
    let name = f.to_possible_value().map(|v| v.get_name().to_string());
    Error::InvalidArgument(format!(
        "{verb} does not support --format {}",
        name.unwrap_or_default()
    ))
}

fn pretty(v: serde_json::Value) -> String {
    format!(
        "{}\n",
        serde_json::to_string_pretty(&v).expect("json values serialize")
    )
}

type Output = atomkit::Result<(String, bool)>;

fn run(verb: Verb) -> Output {
    match verb {
        Verb::Atoms {
            z,
            inverse,
            brute,
            format,
        } => {
            let z = involution(&z)?;
            let mut ws = if brute {
                let mut a = hecke::atoms_brute(&z)?;
                if !inverse {
                    a = a.iter().map(|w| w.inverse()).collect();
                }
                a
            } else if inverse {
                orders::atoms(&z)
            } else {
                orders::atoms_fast(&z)
            };
            ws.sort();
            emit_perms("atoms", &ws, format)
        }
        Verb::HeckeAtoms { z, inverse, format } => {
            let z = involution(&z)?;
            let mut ws = hecke::hecke_atoms_brute(&z)?;
            if !inverse {
                ws = ws.iter().map(|w| w.inverse()).collect();
            }
            ws.sort();
            emit_perms("hecke-atoms", &ws, format)
        }
        Verb::Hasse { z, order, format } => {
            let z = involution(&z)?;
            let h = orders::hasse(&z, order);
            let out = match format {
                Format::Dot => export::hasse_dot(&h),
                Format::Json => pretty(export::hasse_json(&h)),
                Format::Text => {
                    let mut s = String::new();
                    for (i, w) in h.elements.iter().enumerate() {
                        writeln!(s, "{i}\t{w}").unwrap();
                    }
                    for &(i, j, k) in &h.covers {
                        writeln!(s, "{i} -> {j}\t{k}").unwrap();
                    }
                    s
                }
                f => return Err(unsupported("hasse", f)),
            };
            Ok((out, true))
        }
        Verb::Ncsp { z, format } => {
            let z = involution(&z)?;
            let ms = structure::ncsp(&z, None);
            let out = match format {
                Format::Text => lines(&ms),
                Format::Json => pretty(json!(ms)),
                f => return Err(unsupported("ncsp", f)),
            };
            Ok((out, true))
        }
        Verb::Shape { w, format } => {
            let w = SignedPermutation::parse(&w)?;
            let m = structure::shape(&w)?;
            let out = match format {
                Format::Text => format!("{m}\n"),
                Format::Json => pretty(json!(m)),
                f => return Err(unsupported("shape", f)),
            };
            Ok((out, true))
        }
        Verb::Nested { w, format } => {
            let w = SignedPermutation::parse(&w)?;
            let out = match format {
                Format::Dot => export::nested_dot(&structure::nested_descent_graph(w.window())?),
                Format::Json => {
                    let d = structure::nested_data(&w)?;
                    let z = structure::recover_involution(&w)?;
                    let g = structure::nested_descent_graph(w.window())?;
                    pretty(json!({
                        "ndes": d.ndes,
                        "nfix": d.nfix,
                        "nneg": d.nneg,
                        "shape": structure::shape(&w)?,
                        "z": z.perm(),
                        "graph": export::nested_json(&g),
                    }))
                }
                Format::Text => {
                    let d = structure::nested_data(&w)?;
                    let z = structure::recover_involution(&w)?;
                    let pairs = |v: &[(i32, i32)]| {
                        v.iter()
                            .map(|(b, a)| format!("({b},{a})"))
                            .collect::<Vec<_>>()
                            .join(" ")
                    };
                    let nums = |v: &[i32]| {
                        v.iter()
                            .map(|x| x.to_string())
                            .collect::<Vec<_>>()
                            .join(",")
                    };
                    format!(
                        "ndes\t{}\nnfix\t{}\nnneg\t{}\nshape\t{}\nz\t{}\n",
                        pairs(&d.ndes),
                        nums(&d.nfix),
                        nums(&d.nneg),
                        structure::shape(&w)?,
                        z
                    )
                }
                f => return Err(unsupported("nested", f)),
            };
            Ok((out, true))
        }
        Verb::Census { n, check, format } => {
            let rows = census::census(n, check)?;
            let opt = |x: Option<usize>| x.map(|v| v.to_string()).unwrap_or_else(|| "-".into());
            let ok = rows.iter().all(|r| r.matches() != Some(false));
            let out = match format {
                Format::Tsv | Format::Text => {
                    let mut s = String::from("n\tclass\tr\tk\tenumerated\tformula\tmatch\n");
                    for r in &rows {
                        writeln!(
                            s,
                            "{}\t{}\t{}\t{}\t{}\t{}\t{}",
                            r.n,
                            r.class,
                            opt(r.r),
                            opt(r.k),
                            r.enumerated
                                .as_ref()
                                .map(|e| e.to_string())
                                .unwrap_or_else(|| "-".into()),
                            r.formula,
                            r.matches()
                                .map(|m| m.to_string())
                                .unwrap_or_else(|| "-".into()),
                        )
                        .unwrap();
                    }
                    s
                }
                Format::Json => pretty(json!(rows
                    .iter()
                    .map(|r| json!({
                        "n": r.n,
                        "class": r.class.name(),
                        "r": r.r,
                        "k": r.k,
                        "enumerated": r.enumerated.as_ref().map(|e| e.to_string()),
                        "formula": r.formula.to_string(),
                        "match": r.matches(),
                    }))
                    .collect::<Vec<_>>())),
                f => return Err(unsupported("census", f)),
            };
            Ok((out, ok))
        }
        Verb::Words {
            w,
            count,
            involution: inv,
        } => {
            let out = if inv {
                let z = involution(&w)?;
                if count {
                    format!("{}\n", tableaux::rhat(&z))
                } else {
                    words_text(&tableaux::rhat_words(&z)?)
                }
            } else {
                let w = SignedPermutation::parse(&w)?;
                if count {
                    format!("{}\n", tableaux::count_reduced_words(&w))
                } else {
                    words_text(&tableaux::reduced_words(&w)?)
                }
            };
            Ok((out, true))
        }
        Verb::Verify { suite, n } => verify(suite, n),
        Verb::Probe {
            z,
            n,
            order,
            lattice,
            paranoid,
            format,
        } => {
            let zs = match (z, n) {
                (Some(z), _) => vec![involution(&z)?],
                (None, Some(n)) => SignedInvolution::all(n),
                (None, None) => {
                    return Err(Error::InvalidArgument("probe needs -z or -n".into()));
                }
            };
            probe(&zs, order, lattice, paranoid, format)
        }
    }
}

fn emit_perms(verb: &str, ws: &[SignedPermutation], format: Format) -> Output {
    let out = match format {
        Format::Text => lines(ws),
        Format::Json => pretty(export::permutations_json(ws)),
        f => return Err(unsupported(verb, f)),
    };
    Ok((out, true))
}

fn words_text(words: &[Vec<usize>]) -> String {
    lines(words.iter().map(|w| {
        w.iter()
            .map(|s| s.to_string())
            .collect::<Vec<_>>()
            .join(",")
    }))
}

fn verify(suite: Suite, n: usize) -> Output {
    let mut out = String::new();
    let mut ok = true;
    let mut line = |label: String, pass: bool| {
        ok &= pass;
        writeln!(out, "{label}: {}", if pass { "pass" } else { "FAIL" }).unwrap();
    };
    match suite {
        Suite::Identities => {
            for c in tableaux::verify_identities(n) {
                ok &= c.status != Status::Fail;
                writeln!(out, "{c}").unwrap();
            }
            return Ok((out, ok));
        }
        Suite::Oracle => {
            for m in 1..=n {
                let mut bad = 0;
                let all = SignedInvolution::all(m);
                for z in &all {
                    let mut brute: Vec<_> =
                        hecke::atoms_brute(z)?.iter().map(|w| w.inverse()).collect();
                    brute.sort();
                    if brute != orders::atoms_fast(z) {
                        bad += 1;
                    }
                }
                line(
                    format!("oracle n={m}: {} involutions, {bad} mismatches", all.len()),
                    bad == 0,
                );
            }
        }
        Suite::Hecke => {
            for m in 1..=n {
                line(
                    format!("hecke classes n={m}"),
                    equivalence::verify_hecke_classes(m)?,
                );
            }
        }
        Suite::Shape => {
            for m in 1..=n {
                let all = SignedInvolution::all(m);
                let bad = all
                    .iter()
                    .filter(|z| orders::components_a(z).len() != structure::ncsp(z, None).len())
                    .count();
                line(
                    format!("shape n={m}: {} involutions, {bad} mismatches", all.len()),
                    bad == 0,
                );
            }
        }
        Suite::Census => {
            for m in 1..=n {
                let rows = census::census(m, true)?;
                let bad = rows.iter().filter(|r| r.matches() == Some(false)).count();
                line(
                    format!("census n={m}: {} rows, {bad} mismatches", rows.len()),
                    bad == 0,
                );
            }
        }
        Suite::Dyck => {
            for m in 1..=n {
                for k in 0..=m / 2 {
                    let pairs = census::dyck_bijection(m, k)?;
                    let good = pairs
                        .iter()
                        .all(|(p, z)| DyckPath::from_involution(z).ok().as_ref() == Some(p));
                    line(format!("dyck n={m} k={k}: {} paths", pairs.len()), good);
                }
            }
        }
    }
    Ok((out, ok))
}

fn probe(
    zs: &[SignedInvolution],
    order: OrderKind,
    lattice_only: bool,
    paranoid: bool,
    format: Format,
) -> Output {
    let mut reports: Vec<(String, ProbeReport)> = Vec::new();
    for z in zs {
        let r = orders::poset_probe(z, order, paranoid)?;
        if lattice_only && r.lattice {
            continue;
        }
        reports.push((z.to_string(), r));
    }
    let out = match format {
        Format::Json => pretty(json!({
            "order": order.name(),
            "probed": zs.len(),
            "reports": reports
                .iter()
                .map(|(z, r)| json!({ "z": z, "report": r }))
                .collect::<Vec<_>>(),
        })),
        Format::Text | Format::Tsv => {
            let b = |x: bool| if x { "yes" } else { "no" };
            let mut s = String::from(
                "z\tsize\tcovers\tcomponents\tgraded\tbounded\tlattice\tmeets\tjoins\n",
            );
            for (z, r) in &reports {
                let graded = match r.graded_paranoid {
                    Some(p) => format!("{}/{}", b(r.graded), b(p)),
                    None => b(r.graded).to_string(),
                };
                writeln!(
                    s,
                    "{z}\t{}\t{}\t{}\t{graded}\t{}\t{}\t{}\t{}",
                    r.size,
                    r.covers,
                    r.components,
                    b(r.bounded),
                    b(r.lattice),
                    b(r.lower_semilattice),
                    b(r.upper_semilattice)
                )
                .unwrap();
            }
            if lattice_only {
                writeln!(
                    s,
                    "# {} of {} posets are not lattices",
                    reports.len(),
                    zs.len()
                )
                .unwrap();
            }
            s
        }
        f => return Err(unsupported("probe", f)),
    };
    Ok((out, true))
}
