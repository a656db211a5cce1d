//! End-to-end manufactured-solution verification: evolution solve against the
//! exact trajectory, governing-equation residual, displacement recovery, and
//! the finite-difference flow check.

use operator_core::{c64, vec_norm, Complex64};
use plate_elasticity::{
    build_plate_hamiltonian, manufactured_fields, mode_decompose, pde_residual,
    reconstruct_displacement, solve_mode_ivp, Forcing, Poly,
};

fn profiles(h: f64) -> Vec<Poly> {
    vec![
        // x^2
        Poly::from_coeffs(vec![0.0, 0.0, 1.0]),
        // x^3 - h x
        Poly::from_coeffs(vec![0.0, -h, 0.0, 1.0]),
        // degree-6 polynomial
        Poly::from_coeffs(vec![0.25, -1.0, 0.5, 0.0, -0.125, 2.0, 0.75]),
    ]
}

#[test]
fn manufactured_solve_reproduces_endpoint_and_displacement() {
    let span_h = 1.0;
    let rigidity = 1.0;
    let n_modes = 4;
    let hmat = build_plate_hamiltonian(n_modes);
    let systems = mode_decompose(&hmat).unwrap();
    for m in 1..=3usize {
        for phi in profiles(span_h) {
            let ms = manufactured_fields(m, &phi, span_h, rigidity).unwrap();
            assert!(ms.max_ode_residual_coeff() <= 1e-9 * phi.max_abs_coeff().max(1.0));

            let sys = &systems[m];
            let u0 = ms.state_at(0.0);
            let traj = solve_mode_ivp(sys, &u0, span_h, Forcing::Polynomial(ms.forcing_polys()))
                .unwrap();
            let got = traj.eval(span_h).unwrap();
            let expect = ms.state_at(span_h);
            let diff: Vec<Complex64> = got.iter().zip(&expect).map(|(a, b)| a - b).collect();
            let scale = vec_norm(&expect).max(1.0);
            assert!(
                vec_norm(&diff) <= 1e-8 * scale,
                "mode {m}: endpoint error {} (scale {scale})",
                vec_norm(&diff)
            );

            // governing-equation residual of the manufactured displacement
            let r = pde_residual(
                &[(m, phi.clone())],
                &[(m, ms.load.clone())],
                span_h,
                rigidity,
            );
            let q_max = ms.load.max_abs_on_grid(span_h, 33).max(1e-30);
            assert!(r <= 1e-8 * q_max, "mode {m}: pde residual {r}");

            // displacement recovery from u1 and the edge values of phi
            let disp = reconstruct_displacement(
                m,
                &ms.fields[0],
                span_h,
                phi.eval(0.0),
                phi.eval(span_h),
            )
            .unwrap();
            for i in 0..=16 {
                let x = span_h * i as f64 / 16.0;
                assert!(
                    (disp.eval(x) - phi.eval(x)).abs() <= 1e-9,
                    "mode {m} at x={x}: {} vs {}",
                    disp.eval(x),
                    phi.eval(x)
                );
            }
        }
    }
}

#[test]
fn flow_matches_finite_differences() {
    let span_h = 1.0;
    let n_modes = 3;
    let hmat = build_plate_hamiltonian(n_modes);
    let systems = mode_decompose(&hmat).unwrap();
    let phi = Poly::from_coeffs(vec![0.0, -1.0, 0.0, 1.0]);
    let m = 2usize;
    let ms = manufactured_fields(m, &phi, span_h, 1.0).unwrap();
    let sys = &systems[m];
    let traj = solve_mode_ivp(
        sys,
        &ms.state_at(0.0),
        span_h,
        Forcing::Polynomial(ms.forcing_polys()),
    )
    .unwrap();
    let step = 1e-5;
    for i in 1..8 {
        let x = span_h * i as f64 / 8.0;
        let up = traj.eval(x + step).unwrap();
        let dn = traj.eval(x - step).unwrap();
        let u = traj.eval(x).unwrap();
        let rhs = {
            let hu = sys.h_matrix.matvec(&u);
            let f: Vec<Complex64> = ms
                .forcing_polys()
                .iter()
                .map(|p| c64(p.eval(x), 0.0))
                .collect();
            hu.iter().zip(&f).map(|(a, b)| a + b).collect::<Vec<_>>()
        };
        for k in 0..4 {
            let dudx = (up[k] - dn[k]) / c64(2.0 * step, 0.0);
            assert!(
                (dudx - rhs[k]).norm() <= 5e-5,
                "component {k} at x={x}: {} vs {}",
                dudx,
                rhs[k]
            );
        }
    }
}

#[test]
fn u3_is_the_x_derivative_of_u1() {
    for m in 1..=3usize {
        let phi = Poly::from_coeffs(vec![0.1, 0.2, -0.3, 1.0, 0.5]);
        let ms = manufactured_fields(m, &phi, 1.0, 1.0).unwrap();
        let diff = ms.fields[0].derivative().sub(&ms.fields[2]);
        assert!(diff.max_abs_coeff() <= 1e-12, "mode {m}");
    }
}

#[test]
fn perturbed_displacement_fails_the_pde_residual() {
    let span_h = 1.0;
    let m = 1usize;
    let phi = Poly::from_coeffs(vec![0.0, 0.0, 1.0]);
    let ms = manufactured_fields(m, &phi, span_h, 1.0).unwrap();
    let perturbed = phi.add(&Poly::from_coeffs(vec![0.0, 1e-3]));
    let r = pde_residual(&[(m, perturbed)], &[(m, ms.load.clone())], span_h, 1.0);
    let expect = (std::f64::consts::PI).powi(4) * 1e-3 * span_h;
    assert!((r - expect).abs() <= 1e-8 * expect, "{r} vs {expect}");
}
