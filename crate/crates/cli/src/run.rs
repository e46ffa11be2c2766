use serde_json::json;

use kmbraid_core::affine::AffineAlgebra;
use kmbraid_core::algebra::render::{format_element, format_wedges, Style};
use kmbraid_core::algebra::TensorElement;
use kmbraid_core::bialgebra::{
    canonical_r, verify_lie_bialgebra, verify_quasitriangular, Bialgebra, KacMoody,
};
use kmbraid_core::braiding::{
    current_algebra_view, node_deletion_view, BraidedLieBialgebra, CarrierSide,
};
use kmbraid_core::cartan::{affinize, CartanMatrix};
use kmbraid_core::dbos::{Bosonisation, DoubleBosonisation};
use kmbraid_core::error::{BialgebraError, Error};
use kmbraid_core::expr::{parse_element, SymbolTable};
use kmbraid_core::finite::ChevalleyAlgebra;
use kmbraid_core::golden;
use kmbraid_core::report::Report;
use kmbraid_core::spec::AlgebraSpec;
use kmbraid_core::table::{self, DeltaMap, TableFormat};

use crate::{AlgebraCommand, Cli, Command, GoldenCommand};

/// Verification failures and computation errors exit 1; everything the user
/// typed wrong exits 2.
pub fn exit_code(e: &Error) -> u8 {
    match e {
        Error::Bialgebra(_) | Error::Dbos(_) => 1,
        _ => 2,
    }
}

fn usage(msg: impl Into<String>) -> Error {
    Error::Usage(msg.into())
}

fn window(src: Option<&str>) -> Result<(i64, i64), Error> {
    let src = src.ok_or_else(|| usage("this spec needs --window lo..hi"))?;
    let bad = || usage(format!("window `{src}` is not of the form lo..hi"));
    let (lo, hi) = src.split_once("..").ok_or_else(bad)?;
    let lo: i64 = lo.trim().parse().map_err(|_| bad())?;
    let hi: i64 = hi.trim().parse().map_err(|_| bad())?;
    if lo > hi {
        return Err(usage(format!("window `{src}` is empty")));
    }
    Ok((lo, hi))
}

/// Prints one summary line per report and the JSON of each failing report
/// on stderr.
fn finish(reports: &[Report]) -> bool {
    let mut ok = true;
    for r in reports {
        println!(
            "{} {}",
            if r.passed() { "PASS" } else { "FAIL" },
            r.summary()
        );
        if !r.passed() {
            ok = false;
            eprintln!("{}", serde_json::to_string(r).expect("report serializes"));
        }
    }
    ok
}

fn deletion(
    spec: &AlgebraSpec,
    node: Option<&str>,
) -> Result<BraidedLieBialgebra<ChevalleyAlgebra>, Error> {
    let node = node.ok_or_else(|| usage(format!("`{spec}` needs --delete <node>")))?;
    node_deletion_view(spec.cartan(), node)
}

pub fn dispatch(cli: Cli) -> Result<bool, Error> {
    let style = if cli.unicode {
        Style::Unicode
    } else {
        Style::Ascii
    };
    match cli.command {
        Command::Cartan { name, json } => {
            let m = CartanMatrix::named(&name)?;
            if json {
                println!("{}", serde_json::to_string(&m.to_json())?);
            } else {
                print!("{m}");
                let d = m.symmetrize()?.d;
                let d: Vec<String> = d.iter().map(|x| x.to_string()).collect();
                println!("symmetrizer: {}", d.join(" "));
            }
        }
        Command::Affinize { name, json } => {
            let m = affinize(&CartanMatrix::named(&name)?)?;
            if json {
                println!("{}", serde_json::to_string(&m.to_json())?);
            } else {
                print!("{m}");
            }
        }
        Command::Algebra {
            command: AlgebraCommand::Build { spec, format },
        } => build(&AlgebraSpec::parse(&spec)?, &format)?,
        Command::Cobracket { spec, expr } => {
            let out = match AlgebraSpec::parse(&spec)? {
                AlgebraSpec::Finite(c) => cobracket(ChevalleyAlgebra::new(&c)?, &expr, style)?,
                AlgebraSpec::Affine(c) => cobracket(AffineAlgebra::new(&c)?, &expr, style)?,
            };
            println!("{out}");
        }
        Command::Braided {
            spec,
            expr,
            carrier,
        } => {
            let spec = AlgebraSpec::parse(&spec)?;
            let out = match &spec {
                AlgebraSpec::Finite(_) => {
                    braided(&deletion(&spec, carrier.delete.as_deref())?, &expr, style)?
                }
                AlgebraSpec::Affine(c) => {
                    let view = current_algebra_view(c)?;
                    let x = parse_element(&expr, view.algebra())?;
                    if x.keys().all(|s| s.degree() < 0) && !x.is_zero() {
                        braided(&view.with_side(CarrierSide::Negative), &expr, style)?
                    } else {
                        braided(&view, &expr, style)?
                    }
                }
            };
            println!("{out}");
        }
        Command::Table {
            spec,
            max_degree,
            format,
            map,
            carrier,
        } => {
            if max_degree < 1 {
                return Err(usage("--max-degree must be at least 1"));
            }
            let spec = AlgebraSpec::parse(&spec)?;
            print!(
                "{}",
                table_for(
                    &spec,
                    max_degree,
                    format,
                    map,
                    carrier.delete.as_deref(),
                    style
                )?
            );
        }
        Command::Verify {
            suite,
            spec,
            window: w,
            carrier,
        } => {
            let spec = AlgebraSpec::parse(&spec)?;
            return verify(&suite, &spec, w.as_deref(), carrier.delete.as_deref());
        }
        Command::Dbos {
            spec,
            delete,
            affinization,
            window: w,
        } => {
            let spec = AlgebraSpec::parse(&spec)?;
            return if affinization {
                dbos_affine(&spec, window(w.as_deref())?)
            } else if delete.is_some() {
                dbos_finite(&spec, delete.as_deref())
            } else {
                Err(usage("dbos needs --delete <node> or --affinization"))
            };
        }
        Command::Golden {
            command: GoldenCommand::Compare { file, spec, map },
        } => {
            let entries = golden::load(&file)?;
            let map = map.unwrap_or_else(|| DeltaMap::from_file_name(&file));
            let spec = AlgebraSpec::parse(&spec)?;
            let report = match (&spec, map) {
                (AlgebraSpec::Affine(c), DeltaMap::Cobracket) => {
                    let b = Bialgebra::new(AffineAlgebra::new(c)?);
                    golden::compare(&file, b.algebra(), &entries, |s| b.cobracket_symbol(s))?
                }
                (AlgebraSpec::Affine(c), DeltaMap::Braided) => {
                    let v = current_algebra_view(c)?;
                    golden::compare(&file, v.algebra(), &entries, |s| {
                        v.braided_cobracket_symbol(s)
                    })?
                }
                (AlgebraSpec::Finite(c), DeltaMap::Cobracket) => {
                    let b = Bialgebra::new(ChevalleyAlgebra::new(c)?);
                    golden::compare(&file, b.algebra(), &entries, |s| b.cobracket_symbol(s))?
                }
                (AlgebraSpec::Finite(_), DeltaMap::Braided) => {
                    return Err(usage("braided goldens need an affine spec"));
                }
            };
            return Ok(finish(&[report]));
        }
    }
    Ok(true)
}

fn build(spec: &AlgebraSpec, format: &str) -> Result<(), Error> {
    match (spec, format) {
        (AlgebraSpec::Finite(c), "json") => {
            println!(
                "{}",
                serde_json::to_string(&ChevalleyAlgebra::new(c)?.structure_dump())?
            );
        }
        (AlgebraSpec::Finite(c), "latex") => print!("{}", ChevalleyAlgebra::new(c)?.latex_table()),
        (AlgebraSpec::Affine(c), "json" | "text") => {
            let alg = AffineAlgebra::new(c)?;
            let gens: Vec<_> = alg
                .serre_generators()
                .iter()
                .map(|t| {
                    json!({
                        "e": format_element(&alg, &t.e),
                        "f": format_element(&alg, &t.f),
                        "h": format_element(&alg, &t.h),
                    })
                })
                .collect();
            if format == "json" {
                let out = json!({
                    "cartan": alg.affine_cartan().to_json(),
                    "dim_h": c.n() + 2,
                    "generators": gens,
                });
                println!("{out}");
            } else {
                println!("dim H = {}", c.n() + 2);
                for (i, g) in gens.iter().enumerate() {
                    println!("e{i} = {}", g["e"].as_str().unwrap_or_default());
                    println!("f{i} = {}", g["f"].as_str().unwrap_or_default());
                    println!("h{i} = {}", g["h"].as_str().unwrap_or_default());
                }
            }
        }
        (_, other) => {
            return Err(usage(format!(
                "format `{other}` is not available for `{spec}`"
            )))
        }
    }
    Ok(())
}

fn cobracket<A: SymbolTable + KacMoody>(alg: A, expr: &str, style: Style) -> Result<String, Error> {
    let x = parse_element(expr, &alg)?;
    let b = Bialgebra::new(alg);
    let d = b.cobracket(&x)?;
    Ok(format_wedges(b.algebra(), &d, style))
}

fn braided<A: SymbolTable + KacMoody>(
    view: &BraidedLieBialgebra<A>,
    expr: &str,
    style: Style,
) -> Result<String, Error> {
    let alg = view.algebra();
    let x = parse_element(expr, alg)?;
    if let Some(s) = x.keys().find(|s| !view.in_carrier(s)) {
        return Err(usage(format!(
            "`{}` is not in the carrier",
            alg.symbol_name(s)
        )));
    }
    Ok(format_wedges(alg, &view.braided_cobracket(&x)?, style))
}

fn rows<S: Clone + Ord>(
    symbols: &[S],
    delta: impl Fn(&S) -> Result<TensorElement<S>, BialgebraError>,
) -> Result<Vec<table::Row<S>>, Error> {
    symbols.iter().map(|s| Ok((s.clone(), delta(s)?))).collect()
}

fn table_for(
    spec: &AlgebraSpec,
    n: i64,
    format: TableFormat,
    map: DeltaMap,
    node: Option<&str>,
    style: Style,
) -> Result<String, Error> {
    Ok(match (spec, map) {
        (AlgebraSpec::Affine(c), _) => {
            let view = current_algebra_view(c)?;
            let alg = view.algebra();
            let symbols: Vec<_> = (1..=n)
                .flat_map(|i| alg.finite().basis().into_iter().map(move |x| (i, x)))
                .map(|(i, x)| alg.loop_sym(i, x))
                .collect();
            let rows = match map {
                DeltaMap::Cobracket => rows(&symbols, |s| view.bialgebra().cobracket_symbol(s))?,
                DeltaMap::Braided => rows(&symbols, |s| view.braided_cobracket_symbol(s))?,
            };
            table::render(alg, &rows, map, format, style)
        }
        (AlgebraSpec::Finite(c), DeltaMap::Cobracket) => {
            let b = Bialgebra::new(ChevalleyAlgebra::new(c)?);
            let rows = rows(&b.algebra().basis(), |s| b.cobracket_symbol(s))?;
            table::render(b.algebra(), &rows, map, format, style)
        }
        (AlgebraSpec::Finite(_), DeltaMap::Braided) => {
            let view = deletion(spec, node)?;
            let rows = rows(&view.carrier_window(-n, -1), |s| {
                view.braided_cobracket_symbol(s)
            })?;
            table::render(view.algebra(), &rows, map, format, style)
        }
    })
}

fn verify(
    suite: &str,
    spec: &AlgebraSpec,
    w: Option<&str>,
    node: Option<&str>,
) -> Result<bool, Error> {
    let reports = match (suite, spec) {
        ("bialgebra", AlgebraSpec::Finite(c)) => {
            vec![verify_lie_bialgebra(
                &Bialgebra::new(ChevalleyAlgebra::new(c)?),
                0,
                0,
            )?]
        }
        ("bialgebra", AlgebraSpec::Affine(c)) => {
            let (lo, hi) = window(w)?;
            vec![verify_lie_bialgebra(
                &Bialgebra::new(AffineAlgebra::new(c)?),
                lo,
                hi,
            )?]
        }
        ("quasitriangular", AlgebraSpec::Finite(c)) => {
            let b = Bialgebra::new(ChevalleyAlgebra::new(c)?);
            let q = canonical_r(&b)?;
            let alg = b.algebra();
            let delta = |s: &_| b.cobracket_symbol(s).expect("finite cobracket");
            vec![verify_quasitriangular(
                &alg.label(),
                alg,
                &alg.basis(),
                &q.r,
                &delta,
            )]
        }
        ("braided", AlgebraSpec::Finite(_)) => {
            let view = deletion(spec, node)?;
            let (lo, hi) = match w {
                Some(w) => window(Some(w))?,
                None => (
                    -(view.algebra().root_system().positive_roots().len() as i64),
                    -1,
                ),
            };
            vec![view.verify(lo, hi)?]
        }
        ("braided", AlgebraSpec::Affine(c)) => {
            let (lo, hi) = window(w)?;
            let view = current_algebra_view(c)?;
            let view = match (lo >= 1, hi <= -1) {
                (true, _) => view,
                (_, true) => view.with_side(CarrierSide::Negative),
                _ => return Err(usage("a braided window must not contain degree 0")),
            };
            vec![view.verify(lo, hi)?]
        }
        ("dbos", AlgebraSpec::Finite(_)) => return dbos_finite(spec, node),
        ("dbos", AlgebraSpec::Affine(_)) => return dbos_affine(spec, window(w)?),
        ("bosonisation", AlgebraSpec::Finite(_)) => {
            let view = deletion(spec, node)?;
            let lo = match w {
                Some(w) => window(Some(w))?.0,
                None => -(view.algebra().root_system().positive_roots().len() as i64),
            };
            vec![Bosonisation::build(&view).compare(lo)?]
        }
        ("bosonisation", AlgebraSpec::Affine(c)) => {
            let (lo, _) = window(w)?;
            let view = current_algebra_view(c)?.with_side(CarrierSide::Negative);
            vec![Bosonisation::build(&view).compare(lo)?]
        }
        ("quasitriangular", AlgebraSpec::Affine(_)) => {
            return Err(usage("quasitriangular needs a finite spec"));
        }
        (other, _) => return Err(usage(format!("unknown suite `{other}`"))),
    };
    Ok(finish(&reports))
}

fn dbos_finite(spec: &AlgebraSpec, node: Option<&str>) -> Result<bool, Error> {
    if spec.is_affine() {
        return Err(usage("--delete needs a finite spec"));
    }
    let view = deletion(spec, node)?;
    let d = DoubleBosonisation::build(&view, 0)?;
    let lo = d.pairing().min_degree();
    Ok(finish(&[
        d.compare_brackets(lo, -lo)?,
        d.compare_cobrackets(lo, -lo)?,
        d.verify_pairing(-lo)?,
        d.verify_axioms()?,
        d.verify_r_new()?,
    ]))
}

fn dbos_affine(spec: &AlgebraSpec, (lo, hi): (i64, i64)) -> Result<bool, Error> {
    let view = current_algebra_view(spec.cartan())?.with_side(CarrierSide::Negative);
    let w = lo.abs().max(hi.abs()).max(1);
    let d = DoubleBosonisation::build(&view, w)?;
    Ok(finish(&[
        d.compare_brackets(lo, hi)?,
        d.compare_cobrackets(lo, hi)?,
        d.verify_pairing(w)?,
    ]))
}
