//! Subcommand implementations. Each returns a [`CommandResult`] whose
//! `result` payload is fully computed before anything is printed.

use brauer_core::arith::{prime_power, squarefree_part, to_i64};
use brauer_core::brauer::{algebraic_tables, geometric_brauer, sqrt_in_cyclotomic, transcendental_bound, twist_invariants};
use brauer_core::cubic::{class_vector, HYPERPLANE};
use brauer_core::rational::eckardt::DEFAULT_PRECISION_CAP;
use brauer_core::rational::{example_report_with_cap, parse_rational, search_shift};
use brauer_core::{BoundaryDescriptor, CubicLattice, QPoly};
use num_bigint::BigInt;
use serde_json::{json, Value};

use crate::config::Config;
use crate::{CliError, Command, CommandResult};

fn to_value<T: serde::Serialize>(x: &T) -> Value {
    serde_json::to_value(x).expect("serializable")
}

fn missing(flag: &str) -> CliError {
    CliError::Usage(format!("missing required flag --{flag}"))
}

pub fn dispatch(command: &Command, config: &Config) -> Result<CommandResult, CliError> {
    match command {
        Command::Lines => Ok(lines()),
        Command::Trios => Ok(trios()),
        Command::Weyl => weyl(),
        Command::Tables(args) => {
            let case = match args.case {
                Some(c) => c as usize,
                None => config.tables.case.ok_or_else(|| missing("case"))?,
            };
            if !(1..=3).contains(&case) {
                return Err(CliError::Usage(format!("--case must be 1, 2 or 3, got {case}")));
            }
            tables(case)
        }
        Command::Classify(args) => {
            let boundary =
                args.boundary.clone().or_else(|| config.classify.boundary.clone()).ok_or_else(|| missing("boundary"))?;
            classify(&boundary)
        }
        Command::Invariants(args) => {
            let d = args.d.or(config.invariants.d).ok_or_else(|| missing("d"))?;
            let n = args.n.or(config.invariants.n).ok_or_else(|| missing("n"))?;
            invariants(d, n)
        }
        Command::Example(args) => {
            let poly = args.poly.clone().or_else(|| config.example.poly.clone()).ok_or_else(|| missing("poly"))?;
            let a = args.a.clone().or_else(|| config.example.a.clone());
            let auto_a = args.auto_a.or(config.example.auto_a);
            let cap = args.precision_cap.or(config.example.precision_cap).unwrap_or(DEFAULT_PRECISION_CAP);
            let shift = match (a, auto_a) {
                (Some(_), Some(_)) => return Err(CliError::Usage("give either --a or --auto-a, not both".into())),
                (None, None) => return Err(CliError::Usage("one of --a or --auto-a is required".into())),
                (Some(a), None) => Shift::Given(a),
                (None, Some(b)) => Shift::Search(b),
            };
            example(&poly, shift, cap)
        }
    }
}

fn lines() -> CommandResult {
    let lattice = CubicLattice::new();
    let lines: Vec<Value> = lattice
        .lines()
        .iter()
        .enumerate()
        .map(|(i, l)| {
            json!({
                "index": i,
                "class": l,
                "self_intersection": l.self_intersection(),
                "degree": l.dot(&HYPERPLANE),
            })
        })
        .collect();
    CommandResult {
        command: "lines".into(),
        inputs: json!({}),
        result: json!({ "count": lines.len(), "hyperplane": HYPERPLANE, "lines": lines }),
        anchor: "the 27 lines on a smooth cubic surface".into(),
    }
}

fn trios() -> CommandResult {
    let lattice = CubicLattice::new();
    let trios: Vec<Value> = lattice
        .trios()
        .iter()
        .enumerate()
        .map(|(i, t)| json!({ "index": i, "lines": t.indices, "classes": t.classes }))
        .collect();
    CommandResult {
        command: "trios".into(),
        inputs: json!({}),
        result: json!({ "count": trios.len(), "trios": trios }),
        anchor: "the 45 tritangent trios of lines".into(),
    }
}

fn weyl() -> Result<CommandResult, CliError> {
    let lattice = CubicLattice::new();
    let h = class_vector(&HYPERPLANE);
    let mut generators = Vec::new();
    for (k, m) in lattice.generator_matrices().iter().enumerate() {
        let name = if k < 5 { format!("swap e{} e{}", k + 1, k + 2) } else { "cremona at e1 e2 e3".into() };
        let perm = lattice.permutation_of(m)?;
        generators.push(json!({
            "name": name,
            "isometry": CubicLattice::is_isometry(m),
            "fixes_hyperplane": m.mul_vec(&h) == h,
            "permutes_lines": true,
            "line_cycle_type": perm.cycle_type(),
            "order": perm.order(),
        }));
    }
    let group = lattice.weyl_group();
    let trio = &lattice.trios()[0];
    let stabilizer = lattice.trio_stabilizer(trio);
    Ok(CommandResult {
        command: "weyl".into(),
        inputs: json!({}),
        result: json!({
            "order": group.order() as u64,
            "transitive_on_lines": group.orbit(0).len() == 27,
            "generators": generators,
            "trio_stabilizer": { "trio": trio.indices, "order": stabilizer.order() as u64 },
        }),
        anchor: "W(E6) of order 51840 acting on the 27 lines".into(),
    })
}

fn tables(case: usize) -> Result<CommandResult, CliError> {
    let pairs = algebraic_tables(case)?;
    let orbits = match case {
        1 => "one Galois orbit",
        2 => "two Galois orbits",
        _ => "three Galois orbits",
    };
    Ok(CommandResult {
        command: "tables".into(),
        inputs: json!({ "case": case }),
        result: json!({ "case": case, "count": pairs.len(), "pairs": to_value(&pairs) }),
        anchor: format!("pairs (Br1(U), Br(X)) when the boundary trio forms {orbits}"),
    })
}

fn classify(boundary: &str) -> Result<CommandResult, CliError> {
    let descriptor = BoundaryDescriptor::from_json(boundary).map_err(|e| CliError::Usage(e.to_string()))?;
    let geometric = geometric_brauer(&descriptor);
    let bound = transcendental_bound(&descriptor)?;
    Ok(CommandResult {
        command: "classify".into(),
        inputs: json!({ "boundary": to_value(&descriptor) }),
        result: json!({
            "descriptor": descriptor.to_string(),
            "geometric_brauer": to_value(&geometric),
            "geometric_brauer_text": geometric.to_string(),
            "transcendental_bound": to_value(&bound),
        }),
        anchor: "geometric Brauer group of U and the bound on Br(U)/Br1(U) over Q".into(),
    })
}

fn invariants(d: i64, n: u64) -> Result<CommandResult, CliError> {
    let group = twist_invariants(d, n)?;
    let (p, i) = prime_power(n).ok_or(brauer_core::Error::BadModulus(n as i64))?;
    let class = to_i64(&squarefree_part(&BigInt::from(d))?)?;
    let sqrt_in = class == 1 || sqrt_in_cyclotomic(class, p, i);
    Ok(CommandResult {
        command: "invariants".into(),
        inputs: json!({ "d": d, "n": n }),
        result: json!({
            "square_class": class,
            "prime": p,
            "exponent": i,
            "sqrt_d_in_cyclotomic": sqrt_in,
            "invariants": to_value(&group),
        }),
        anchor: "Galois invariants of the twisted module M_d/nM_d(-1) over Q".into(),
    })
}

pub enum Shift {
    Given(String),
    Search(u32),
}

fn example(poly: &str, shift: Shift, cap: u32) -> Result<CommandResult, CliError> {
    let f: QPoly = poly.parse().map_err(|e: brauer_core::Error| CliError::Usage(format!("--poly: {e}")))?;
    let (report, inputs, search) = match shift {
        Shift::Given(a) => {
            let a = parse_rational(&a).map_err(|e| CliError::Usage(format!("--a: {e}")))?;
            let report = example_report_with_cap(&f, &a, cap)?;
            let inputs = json!({ "poly": f.to_csv(), "a": report.a, "precision_cap": cap });
            (report, inputs, Value::Null)
        }
        Shift::Search(bound) => {
            let report = search_shift(&f, bound, cap)?;
            let inputs = json!({ "poly": f.to_csv(), "auto_a": bound, "precision_cap": cap });
            let search = json!({ "bound": bound, "found_a": report.a });
            (report, inputs, search)
        }
    };
    let mut result = to_value(&report);
    result["search"] = search;
    Ok(CommandResult {
        command: "example".into(),
        inputs,
        result,
        anchor: "Br(U)/Br1(U) for three lines cut out by F(t) and F(t-a)".into(),
    })
}
