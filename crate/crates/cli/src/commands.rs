use parity_wilson::config::{CaseSelection, RunConfig};
use parity_wilson::expand::{dual_route, parity_coefficients, reconstruction_residual, CoefficientConvention};
use parity_wilson::lorentz::{algebra_audit, build_rep, n0_extraction, RepLabel};
use parity_wilson::numcore::{Complex, Rational};
use parity_wilson::spectral::{
    casoratian, conjecture_scan, eigenfunction_case_a, eigenfunction_case_b, g_on_lattice, lattice_residuals,
    residual_master, second_solution_exact, BValue, EigenpairRecord, LatticeFunction, PolynomialPart, ScanConfig,
};
use parity_wilson::verify::{fmt17, run_suite, traceability_csv, traceability_json, Suite, SuiteOptions};
use parity_wilson::wilson::{
    monic_from_hypergeometric, monic_from_recurrence, recurrence_table_symbolic, symbolic_case_b_table, MonicTable,
    RecurrenceForm, WilsonFamily,
};
use serde_json::{json, Value};

use crate::output::Payload;
use crate::{Command, FamilyArgs, Failure};

pub fn name(cmd: &Command) -> &'static str {
    match cmd {
        Command::Poly { .. } => "poly",
        Command::Eigen { .. } => "eigen",
        Command::Residual { .. } => "residual",
        Command::SecondSolution { .. } => "second-solution",
        Command::Coeffs { .. } => "coeffs",
        Command::Reconstruct { .. } => "reconstruct",
        Command::Lorentz { .. } => "lorentz",
        Command::Scan { .. } => "scan",
        Command::Verify { .. } => "verify",
        Command::Traceability => "traceability",
    }
}

type Outcome = Result<(Payload, bool), Failure>;

fn usage<T>(msg: impl Into<String>) -> Result<T, Failure> {
    Err(Failure::Usage(msg.into()))
}

/// `None` means a symbolic `B`.
enum Family {
    A,
    B(Option<Rational>),
}

fn family(args: &FamilyArgs, cfg: &RunConfig) -> Result<Family, Failure> {
    match args.case.unwrap_or(cfg.case) {
        CaseSelection::A => {
            if args.b.is_some() {
                return usage("--b applies to case B only");
            }
            Ok(Family::A)
        }
        CaseSelection::B => match args.b.as_deref() {
            Some(s) if s.eq_ignore_ascii_case("symbolic") => Ok(Family::B(None)),
            Some(s) => match s.parse::<Rational>() {
                Ok(b) => Ok(Family::B(Some(b))),
                Err(e) => usage(format!("--b: {e}")),
            },
            None => Ok(Family::B(Some(cfg.b_values[0].clone()))),
        },
    }
}

fn concrete(f: Family) -> Result<WilsonFamily, Failure> {
    match f {
        Family::A => Ok(WilsonFamily::case_a()),
        Family::B(Some(b)) => Ok(WilsonFamily::case_b(b)?),
        Family::B(None) => usage("this subcommand needs a numeric --b"),
    }
}

fn convention(s: &str) -> Result<CoefficientConvention, Failure> {
    match s {
        "corrected" => Ok(CoefficientConvention::Corrected),
        "printed" => Ok(CoefficientConvention::Printed),
        other => usage(format!("unknown convention {other:?}; expected corrected or printed")),
    }
}

fn complex_json(z: Complex) -> Value {
    json!({"re": z.re, "im": z.im})
}

pub fn dispatch(cmd: Command, cfg: &RunConfig) -> Outcome {
    match cmd {
        Command::Poly { family: f, n, recurrence } => poly(family(&f, cfg)?, n.unwrap_or(cfg.n_max), recurrence.as_deref()),
        Command::Eigen { family: f, n } => eigen(family(&f, cfg)?, n.unwrap_or(cfg.n_max)),
        Command::Residual { family: f, n, ell1, m, w } => residual(family(&f, cfg)?, n.unwrap_or(cfg.n_max), ell1, m, w.as_deref()),
        Command::SecondSolution { n, z0, length } => second(n.unwrap_or(cfg.n_max), &z0, length),
        Command::Coeffs { family: f, n_max, convention: c, dual } => {
            coeffs(concrete(family(&f, cfg)?)?, n_max.unwrap_or(cfg.n_max), convention(&c)?, dual, cfg)
        }
        Command::Reconstruct { family: f, n_max, convention: c } => {
            reconstruct(concrete(family(&f, cfg)?)?, n_max.unwrap_or(12), convention(&c)?, cfg)
        }
        Command::Lorentz { rep } => lorentz(&rep),
        Command::Scan { b, m, n, degree } => {
            let b = b.unwrap_or_else(|| cfg.b_values[0].to_f64());
            let n = n.unwrap_or(cfg.n_max.min(3));
            scan(b, m, n, degree.unwrap_or(n))
        }
        Command::Verify { suite, extended } => verify(&suite, extended, cfg),
        Command::Traceability => Ok((Payload { json: traceability_json(), csv: traceability_csv() }, true)),
    }
}

fn poly(f: Family, n: usize, recurrence: Option<&str>) -> Outcome {
    let form = match recurrence {
        None => None,
        Some("corrected") => Some(RecurrenceForm::Corrected),
        Some("printed") => Some(RecurrenceForm::AsPrinted),
        Some(other) => return usage(format!("unknown recurrence {other:?}; expected corrected or printed")),
    };
    let table = match (f, form) {
        (Family::B(None), None) => symbolic_case_b_table(n),
        (Family::B(None), Some(form)) => MonicTable::SymbolicB { polys: recurrence_table_symbolic(false, form, n) },
        (f, Some(form)) => monic_from_recurrence(&concrete(f)?, n, form)?,
        (f, None) => {
            let family = concrete(f)?;
            let polys = (0..=n).map(|k| monic_from_hypergeometric(&family, k)).collect::<Result<_, _>>()?;
            MonicTable::Exact { family, polys }
        }
    };
    Ok((Payload { json: table.to_json(), csv: table.to_csv() }, true))
}

fn record(f: Family, n: usize) -> Result<EigenpairRecord, Failure> {
    Ok(match f {
        Family::A => eigenfunction_case_a(n),
        Family::B(None) => eigenfunction_case_b(n, &BValue::Symbolic)?,
        Family::B(Some(b)) => eigenfunction_case_b(n, &BValue::Exact(b))?,
    })
}

fn eigen(f: Family, n: usize) -> Outcome {
    let rec = record(f, n)?;
    let json = rec.to_json();
    let head = format!("{},{},{}", rec.n, rec.ell1, rec.alpha);
    let mut csv = String::from("n,ell1,alpha,power,b_power,coeff\n");
    match &rec.part {
        PolynomialPart::PrefactorOnly => csv.push_str(&format!("{head},0,,1\n")),
        PolynomialPart::InW(p) => {
            for (k, c) in p.coeffs().iter().enumerate() {
                csv.push_str(&format!("{head},{k},,{c}\n"));
            }
        }
        PolynomialPart::InWB(p) => {
            for (k, c) in p.coeffs().iter().enumerate() {
                for (j, cj) in c.coeffs().iter().enumerate() {
                    csv.push_str(&format!("{head},{k},{j},{cj}\n"));
                }
            }
        }
    }
    Ok((Payload { json, csv }, true))
}

fn parse_list(s: &str) -> Result<Vec<f64>, Failure> {
    s.split(',')
        .map(|t| t.trim().parse::<f64>().map_err(|_| Failure::Usage(format!("cannot parse W value {t:?}"))))
        .collect()
}

fn residual(f: Family, n: usize, ell1: Option<f64>, m: f64, w: Option<&str>) -> Outcome {
    let b = match &f {
        Family::A => 0.0,
        Family::B(Some(b)) => b.to_f64(),
        Family::B(None) => return usage("residual needs a numeric --b"),
    };
    let rec = record(f, n)?;
    let ell1 = ell1.unwrap_or(rec.ell1 as f64);
    let grid = match w {
        Some(s) => parse_list(s)?,
        None => (0..10).map(|j| 1.1 - b + 0.8 * j as f64).collect(),
    };
    let eval = rec.evaluator(b);
    let mut rows = Vec::new();
    let mut csv = String::from("W,re,im,abs\n");
    for w in grid {
        let r = residual_master(&eval, b, m, ell1, w)?;
        csv.push_str(&format!("{},{},{},{}\n", fmt17(w), fmt17(r.re), fmt17(r.im), fmt17(r.norm())));
        rows.push(json!({"W": w, "residual": complex_json(r), "abs": r.norm()}));
    }
    let json = json!({"n": n, "B": b, "M": m, "ell1": ell1, "points": rows});
    Ok((Payload { json, csv }, true))
}

fn second(n: usize, z0: &str, length: usize) -> Outcome {
    let z0r: Rational = z0.parse().map_err(|e| Failure::Usage(format!("--z0: {e}")))?;
    let (u, h) = second_solution_exact(n, &z0r, length)?;
    let anchor = z0r.to_f64();
    let hf = LatticeFunction { anchor, values: h.iter().map(|v| Complex::new(v.to_f64(), 0.0)).collect() };
    let g = g_on_lattice(n, anchor, length)?;
    let cas = casoratian(&g, &hf);
    let res = lattice_residuals(&hf, (2 * n + 1) as f64);
    let mut points = Vec::new();
    let mut csv = String::from("z,u,h,g,casoratian,residual\n");
    for k in 0..length {
        let z = &z0r + Rational::from_integer(k as i64);
        let c = cas.get(k).map(|(_, c)| c.re);
        let r = k.checked_sub(1).and_then(|i| res.get(i)).map(|(_, r)| *r);
        points.push(json!({
            "z": z,
            "u": u[k],
            "h": h[k],
            "h_float": h[k].to_f64(),
            "g": g.values[k].re,
            "casoratian": c,
            "residual": r,
        }));
        let opt = |x: Option<f64>| x.map(fmt17).unwrap_or_default();
        csv.push_str(&format!("{z},{},{},{},{},{}\n", u[k], h[k], fmt17(g.values[k].re), opt(c), opt(r)));
    }
    Ok((Payload { json: json!({"n": n, "z0": z0r, "points": points}), csv }, true))
}

fn coeffs(family: WilsonFamily, n_max: usize, conv: CoefficientConvention, dual: bool, cfg: &RunConfig) -> Outcome {
    let table = parity_coefficients(&family, n_max, conv, &cfg.quadrature)?;
    let mut json = table.to_json();
    let mut csv = String::from("n,re,im,error\n");
    for e in &table.entries {
        csv.push_str(&format!("{},{},{},{}\n", e.n, fmt17(e.value.re), fmt17(e.value.im), fmt17(e.error)));
    }
    if dual {
        let entries = dual_route(&family, n_max, conv, &cfg.quadrature)?;
        json["dual_route"] = serde_json::to_value(&entries).map_err(|e| Failure::Compute(e.to_string()))?;
    }
    Ok((Payload { json, csv }, true))
}

fn reconstruct(family: WilsonFamily, n_max: usize, conv: CoefficientConvention, cfg: &RunConfig) -> Outcome {
    let r = reconstruction_residual(&family, n_max, conv, &cfg.quadrature)?;
    let json = json!({
        "family": family.label(),
        "residuals": r.residuals,
        "errors": r.errors,
        "drop_ratio": r.drop_ratio(),
        "nonincreasing": r.is_nonincreasing(),
    });
    Ok((Payload { json, csv: r.to_csv() }, true))
}

fn lorentz(rep: &str) -> Outcome {
    let label: RepLabel = rep.parse().map_err(|e| Failure::Usage(format!("--rep: {e}")))?;
    let rep = build_rep(label)?;
    let audit = algebra_audit(&rep);
    let n0 = n0_extraction(&rep);
    let mut csv = String::from("id,residual\n");
    for e in &audit.entries {
        csv.push_str(&format!("{},{}\n", e.id, fmt17(e.residual)));
    }
    for (id, v) in [
        ("n0-consistent", n0.residual_consistent),
        ("n0-printed", n0.residual_printed),
        ("n1-definition", n0.n1_residual),
        ("n2-trace", n0.n2_trace),
    ] {
        csv.push_str(&format!("{id},{}\n", fmt17(v)));
    }
    let mut json = serde_json::to_value(&audit).map_err(|e| Failure::Compute(e.to_string()))?;
    json["n0"] = serde_json::to_value(&n0).map_err(|e| Failure::Compute(e.to_string()))?;
    json["max_residual"] = json!(audit.max_residual());
    Ok((Payload { json, csv }, true))
}

fn scan(b: f64, m: f64, n: usize, degree: usize) -> Outcome {
    let r = conjecture_scan(b, m, n, degree, &ScanConfig::default_for(b))?;
    let json = serde_json::to_value(&r).map_err(|e| Failure::Compute(e.to_string()))?;
    let csv = format!(
        "b,m,n,degree,ell1_sq,residual,iterations,converged\n{},{},{},{},{},{},{},{}\n",
        fmt17(b),
        fmt17(m),
        n,
        degree,
        fmt17(r.ell1_sq),
        fmt17(r.residual),
        r.iterations,
        r.converged
    );
    Ok((Payload { json, csv }, true))
}

fn verify(suite: &str, extended: bool, cfg: &RunConfig) -> Outcome {
    let suite: Suite = suite.parse().map_err(|e| Failure::Usage(format!("--suite: {e}")))?;
    let mut opts = SuiteOptions::from(cfg);
    if extended && !opts.extended {
        opts = SuiteOptions::capped(cfg.quadrature, cfg.quad_check_tol, true);
    }
    let report = run_suite(suite, &opts);
    let ok = report.passed();
    Ok((Payload { json: report.to_json(), csv: report.to_csv() }, ok))
}
