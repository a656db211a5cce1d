//! Plate commands: spectrum, per-mode evolution solves, and the
//! manufactured-solution verification pipeline.

use crate::args::{PlateSolveArgs, PlateSpectrumArgs, PlateVerifyArgs};
use crate::reports::{envelope, fmt_f64, ReportWriter};
use operator_core::{c64, vec_norm, Complex64};
use plate_elasticity::{
    build_plate_hamiltonian, hsquared_check, manufactured_fields, mode_decompose, pde_residual,
    reconstruct_displacement, solve_mode_ivp, spectrum, Forcing, PlateProblem, Poly,
};
use serde_json::{json, Value};
use std::f64::consts::PI;

pub const ANCHOR_SPECTRUM: &str = "σ(H) = {kπ : k ∈ Z}";
pub const ANCHOR_HSQ: &str = "H² = diag(A², A²)";
pub const ANCHOR_EVOLUTION: &str = "du/dx = H u + f";

pub fn run_spectrum(args: &PlateSpectrumArgs) -> Result<bool, String> {
    let writer = ReportWriter::from_output(&args.output)?;
    if args.modes == 0 {
        return Err("--modes must be positive".into());
    }
    let h = build_plate_hamiltonian(args.modes);
    let rep = spectrum(&h).map_err(|e| e.to_string())?;
    let hsq = hsquared_check(&h).map_err(|e| e.to_string())?;
    let spectrum_tol = 1e-8 * args.modes as f64 * PI;
    let spectrum_pass = rep.max_abs_error <= spectrum_tol && rep.symmetry_defect <= 1e-9;
    let hsq_pass = hsq.structure_pass && hsq.mapping_defect <= 1e-8 && hsq.reference_defect <= 1e-8;
    let pass = spectrum_pass && hsq_pass;

    println!(
        "{}: plate spectrum N={} max |error| = {:.3e} (tolerance {:.3e})",
        if spectrum_pass { "PASS" } else { "FAIL" },
        args.modes,
        rep.max_abs_error,
        spectrum_tol
    );
    println!(
        "{}: H² structure deviation {:.3e}, spectral mapping defect {:.3e}",
        if hsq_pass { "PASS" } else { "FAIL" },
        hsq.block_deviation,
        hsq.mapping_defect
    );

    if writer.wants_json() {
        let payload = json!({
            "anchor_spectrum": ANCHOR_SPECTRUM,
            "anchor_hsquared": ANCHOR_HSQ,
            "spectrum": serde_json::to_value(&rep).expect("serializable"),
            "hsquared": serde_json::to_value(&hsq).expect("serializable"),
        });
        writer.write_json(
            "spectrum",
            &envelope(
                "plate-spectrum",
                None,
                &json!({"modes": args.modes}),
                pass,
                payload,
            ),
        )?;
    }
    if writer.wants_csv() {
        let rows: Vec<String> = rep
            .computed
            .iter()
            .zip(&rep.reference)
            .enumerate()
            .map(|(i, (z, r))| {
                format!(
                    "{i},{},{},{},{}",
                    fmt_f64(z.re),
                    fmt_f64(z.im),
                    fmt_f64(*r),
                    fmt_f64((z - Complex64::new(*r, 0.0)).norm())
                )
            })
            .collect();
        writer.write_csv(
            "spectrum",
            "index,computed_re,computed_im,reference,abs_error",
            &rows,
        )?;
    }
    if args.export_h {
        let path = writer.dir().join("h_matrix.mtx");
        operator_core::write_matrix_market(&h.dense(), &path).map_err(|e| e.to_string())?;
    }
    Ok(pass)
}

pub fn run_solve(args: &PlateSolveArgs) -> Result<bool, String> {
    let writer = ReportWriter::from_output(&args.output)?;
    let problem = PlateProblem::from_path(&args.problem).map_err(|e| e.to_string())?;
    let h = build_plate_hamiltonian(problem.n_modes);
    let systems = mode_decompose(&h).map_err(|e| e.to_string())?;

    let mut modes: Vec<usize> = problem
        .loads
        .keys()
        .chain(problem.initial_states.keys())
        .copied()
        .collect();
    modes.sort_unstable();
    modes.dedup();
    if modes.is_empty() {
        return Err("the problem config carries no load.mode.* or init.u.* data to solve".into());
    }

    let mut summaries = Vec::new();
    for &m in &modes {
        let sys = &systems[m];
        let u0: Vec<Complex64> = problem
            .initial_states
            .get(&m)
            .map(|v| v.iter().map(|&x| c64(x, 0.0)).collect())
            .unwrap_or_else(|| vec![Complex64::new(0.0, 0.0); 4]);
        let forcing = match problem.loads.get(&m) {
            Some(q) => Forcing::Polynomial(vec![
                Poly::zero(),
                Poly::zero(),
                q.scale(1.0 / problem.rigidity_d),
                Poly::zero(),
            ]),
            None => Forcing::Zero,
        };
        let traj = solve_mode_ivp(sys, &u0, problem.span_h, forcing).map_err(|e| e.to_string())?;
        let samples = traj.sample(args.samples.max(2)).map_err(|e| e.to_string())?;
        if writer.wants_csv() {
            let rows: Vec<String> = samples
                .iter()
                .map(|(x, u)| {
                    let mut row = fmt_f64(*x);
                    for z in u {
                        row.push_str(&format!(",{},{}", fmt_f64(z.re), fmt_f64(z.im)));
                    }
                    row
                })
                .collect();
            writer.write_csv(
                &format!("trajectory_mode_{m}"),
                "x,u1_re,u1_im,u2_re,u2_im,u3_re,u3_im,u4_re,u4_im",
                &rows,
            )?;
        }
        let endpoint = samples.last().expect("samples nonempty");
        println!(
            "mode {m}: |u({})| = {:.6e}",
            problem.span_h,
            vec_norm(&endpoint.1)
        );
        summaries.push(json!({
            "mode": m,
            "anchor": ANCHOR_EVOLUTION,
            "x_end": problem.span_h,
            "endpoint": endpoint.1.iter().map(|z| json!({"re": z.re, "im": z.im})).collect::<Vec<_>>(),
        }));
    }
    if writer.wants_json() {
        writer.write_json(
            "plate_solve",
            &envelope(
                "plate-solve",
                None,
                &json!({"problem": args.problem.display().to_string(), "modes": modes}),
                true,
                Value::Array(summaries),
            ),
        )?;
    }
    Ok(true)
}

pub fn run_verify(args: &PlateVerifyArgs) -> Result<bool, String> {
    let writer = ReportWriter::from_output(&args.output)?;
    let modes: Vec<usize> = args
        .modes_list
        .split(',')
        .map(str::trim)
        .filter(|t| !t.is_empty())
        .map(|t| t.parse::<usize>().map_err(|_| format!("bad mode '{t}'")))
        .collect::<Result<_, _>>()?;
    if modes.contains(&0) {
        return Err("sine modes start at 1".into());
    }
    let span = args.span;
    if span <= 0.0 || args.rigidity <= 0.0 {
        return Err("--span and --rigidity must be positive".into());
    }
    let max_mode = *modes.iter().max().unwrap_or(&1);
    let h = build_plate_hamiltonian(max_mode.max(1));
    let systems = mode_decompose(&h).map_err(|e| e.to_string())?;

    let profiles: Vec<(String, Poly)> = vec![
        ("x^2".into(), Poly::from_coeffs(vec![0.0, 0.0, 1.0])),
        (
            "x^3 - h x".into(),
            Poly::from_coeffs(vec![0.0, -span, 0.0, 1.0]),
        ),
        (
            "degree-6".into(),
            Poly::from_coeffs(vec![0.25, -1.0, 0.5, 0.0, -0.125, 2.0, 0.75]),
        ),
    ];

    let mut rows = Vec::new();
    let mut csv = Vec::new();
    let mut pass = true;
    for &m in &modes {
        for (name, phi) in &profiles {
            let ms = manufactured_fields(m, phi, span, args.rigidity).map_err(|e| e.to_string())?;
            let sys = &systems[m];
            let traj = solve_mode_ivp(
                sys,
                &ms.state_at(0.0),
                span,
                Forcing::Polynomial(ms.forcing_polys()),
            )
            .map_err(|e| e.to_string())?;
            let got = traj.eval(span).map_err(|e| e.to_string())?;
            let expect = ms.state_at(span);
            let diff: Vec<Complex64> = got.iter().zip(&expect).map(|(a, b)| a - b).collect();
            let endpoint_rel = vec_norm(&diff) / vec_norm(&expect).max(1.0);

            let residual = pde_residual(
                &[(m, phi.clone())],
                &[(m, ms.load.clone())],
                span,
                args.rigidity,
            );
            let q_max = ms.load.max_abs_on_grid(span, 33).max(1e-30);
            let residual_rel = residual / q_max;

            let disp = reconstruct_displacement(m, &ms.fields[0], span, phi.eval(0.0), phi.eval(span))
                .map_err(|e| e.to_string())?;
            let mut recon_err: f64 = 0.0;
            for i in 0..=32 {
                let x = span * i as f64 / 32.0;
                recon_err = recon_err.max((disp.eval(x) - phi.eval(x)).abs());
            }

            let ok = endpoint_rel <= 1e-8 && residual_rel <= 1e-8 && recon_err <= 1e-9;
            pass &= ok;
            println!(
                "{}: mode {m} profile {name}: endpoint {endpoint_rel:.3e}, pde {residual_rel:.3e}, reconstruction {recon_err:.3e}",
                if ok { "PASS" } else { "FAIL" }
            );
            rows.push(json!({
                "mode": m,
                "profile": name,
                "anchor": ANCHOR_EVOLUTION,
                "endpoint_rel_error": endpoint_rel,
                "pde_residual_rel": residual_rel,
                "reconstruction_max_error": recon_err,
                "pass": ok,
            }));
            csv.push(format!(
                "{m},{name},{},{},{},{ok}",
                fmt_f64(endpoint_rel),
                fmt_f64(residual_rel),
                fmt_f64(recon_err)
            ));
        }
    }
    if writer.wants_json() {
        writer.write_json(
            "plate_verify",
            &envelope(
                "plate-verify",
                None,
                &json!({"modes": modes, "span": span, "rigidity": args.rigidity}),
                pass,
                Value::Array(rows),
            ),
        )?;
    }
    if writer.wants_csv() {
        writer.write_csv(
            "plate_verify",
            "mode,profile,endpoint_rel_error,pde_residual_rel,reconstruction_max_error,pass",
            &csv,
        )?;
    }
    Ok(pass)
}
