//! `bounds` command: relative-bound estimation, hypothesis evaluation, and
//! the divergence witness.

use crate::args::{BoundsArgs, Builtin};
use crate::reports::{envelope, fmt_f64, ReportWriter};
use plate_elasticity::{
    build_plate_hamiltonian, mirror_block_family, mirror_plate_hamiltonian, plate_block_family,
    plate_self_family,
};
use relative_bounds::{
    nonclosedness_witness, perturbation_hypothesis_report, RelBoundEstimate,
};
use serde_json::json;

pub const ANCHOR_BOUND: &str = "a = lim_{λ→∞} sup_N ‖S_N (T_N − iλ)⁻¹‖";
pub const ANCHOR_WITNESS: &str = "‖A x_N‖² = π²N while H u_N = 0";

fn parse_usize_list(s: &str) -> Result<Vec<usize>, String> {
    s.split(',')
        .map(str::trim)
        .filter(|t| !t.is_empty())
        .map(|t| t.parse::<usize>().map_err(|_| format!("bad integer '{t}'")))
        .collect()
}

fn parse_f64_list(s: &str) -> Result<Vec<f64>, String> {
    s.split(',')
        .map(str::trim)
        .filter(|t| !t.is_empty())
        .map(|t| t.parse::<f64>().map_err(|_| format!("bad number '{t}'")))
        .collect()
}

fn grid_csv(est: &RelBoundEstimate) -> (String, Vec<String>) {
    let mut header = String::from("lambda");
    for n in &est.n_schedule {
        header.push_str(&format!(",N{n}"));
    }
    header.push_str(",n_limit,tail_gap,tail_converged");
    let rows = est
        .lambda_schedule
        .iter()
        .enumerate()
        .map(|(i, lam)| {
            let mut row = fmt_f64(*lam);
            for v in &est.grid[i] {
                row.push_str(&format!(",{}", fmt_f64(*v)));
            }
            row.push_str(&format!(
                ",{},{},{}",
                fmt_f64(est.n_limit[i]),
                fmt_f64(est.tail_gap[i]),
                est.tail_converged[i]
            ));
            row
        })
        .collect();
    (header, rows)
}

pub fn run(args: &BoundsArgs) -> Result<bool, String> {
    if args.tol <= 0.0 {
        return Err("--tol must be positive".into());
    }
    let writer = ReportWriter::from_output(&args.output)?;
    let n_schedule = parse_usize_list(&args.n_schedule)?;
    let lambda_schedule = parse_f64_list(&args.lambda_schedule)?;
    let witness_schedule = parse_usize_list(&args.witness_schedule)?;
    let base_n = *n_schedule
        .first()
        .ok_or("empty --n-schedule".to_string())?;

    let (family, h, input_desc) = match args.input.builtin {
        Some(Builtin::Plate) => (
            plate_block_family(),
            build_plate_hamiltonian(base_n),
            json!({ "builtin": "plate", "base_truncation": base_n }),
        ),
        Some(Builtin::Mirror) => (
            mirror_block_family(),
            mirror_plate_hamiltonian(base_n),
            json!({ "builtin": "mirror", "base_truncation": base_n }),
        ),
        Some(Builtin::Random) | None => {
            return Err(
                "bounds needs a truncation family: pass --builtin plate or --builtin mirror".into(),
            )
        }
    };

    let report = perturbation_hypothesis_report(&h, &family, &lambda_schedule, &n_schedule)
        .map_err(|e| e.to_string())?;
    let witness = nonclosedness_witness(&plate_self_family(), &witness_schedule)
        .map_err(|e| e.to_string())?;

    let pass = report.sound;
    for est in [
        &report.bound_c_on_a,
        &report.bound_b_on_astar,
        &report.bound_a_on_c,
        &report.bound_astar_on_b,
    ] {
        println!(
            "bound {}: {:.6} classified {}",
            est.label,
            est.extrapolated_bound,
            est.classification.describe()
        );
    }
    for s in &report.criteria {
        if s.satisfied {
            println!(
                "{}: hypothesis '{}' satisfied, conclusion check {}",
                if s.conclusion_pass == Some(true) { "PASS" } else { "FAIL" },
                s.name,
                if s.conclusion_pass == Some(true) { "passed" } else { "failed" },
            );
        }
    }
    println!(
        "witness: slope {:.6} ({}defective)",
        witness.divergence_slope,
        if witness.closure_defective { "" } else { "not " }
    );

    if writer.wants_json() {
        let payload = json!({
            "anchor_bound": ANCHOR_BOUND,
            "anchor_witness": ANCHOR_WITNESS,
            "n_schedule": n_schedule,
            "lambda_schedule": lambda_schedule,
            "hypothesis_report": serde_json::to_value(&report).expect("serializable"),
            "witness": serde_json::to_value(&witness).expect("serializable"),
        });
        writer.write_json("bounds", &envelope("bounds", None, &input_desc, pass, payload))?;
    }
    if writer.wants_csv() {
        for (tag, est) in [
            ("c_on_a", &report.bound_c_on_a),
            ("b_on_astar", &report.bound_b_on_astar),
            ("a_on_c", &report.bound_a_on_c),
            ("astar_on_b", &report.bound_astar_on_b),
        ] {
            let (header, rows) = grid_csv(est);
            writer.write_csv(&format!("bounds_{tag}"), &header, &rows)?;
        }
        let rows: Vec<String> = witness
            .n_schedule
            .iter()
            .enumerate()
            .map(|(i, n)| {
                format!(
                    "{n},{},{},{}",
                    fmt_f64(witness.graph_norm_sq[i]),
                    fmt_f64(witness.image_norm[i]),
                    fmt_f64(witness.x_norm_sq[i])
                )
            })
            .collect();
        writer.write_csv("bounds_witness", "N,graph_norm_sq,image_norm,x_norm_sq", &rows)?;
    }
    Ok(pass)
}
