//! Resolution of operator inputs: built-in generators or Matrix Market files.

use crate::args::{Builtin, InputArgs};
use block_matrix::{mirror_hamiltonian, random::random_hamiltonian, BlockOp, HamiltonianOp};
use operator_core::{read_matrix_market, OperatorRep};
use plate_elasticity::build_plate_hamiltonian;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde_json::{json, Value};
use std::path::PathBuf;

pub type CliResult<T> = Result<T, String>;

fn file_blocks(input: &InputArgs) -> Vec<(&'static str, &Option<PathBuf>)> {
    vec![("a", &input.a), ("b", &input.b), ("c", &input.c), ("d", &input.d)]
}

fn any_files(input: &InputArgs) -> bool {
    file_blocks(input).iter().any(|(_, p)| p.is_some())
}

fn read_block(name: &str, path: &PathBuf) -> CliResult<OperatorRep> {
    read_matrix_market(path).map_err(|e| format!("block {name} ({}): {e}", path.display()))
}

/// Build a Hamiltonian from the input selection. Returns the operator and a
/// JSON descriptor of where it came from.
pub fn resolve_hamiltonian(input: &InputArgs, tol: f64) -> CliResult<(HamiltonianOp, Value)> {
    match (input.builtin, any_files(input)) {
        (Some(_), true) => Err("choose either --builtin or file inputs, not both".into()),
        (None, false) => Err("no input: pass --builtin or the --a/--b/--c files".into()),
        (Some(Builtin::Plate), false) => {
            if input.modes == 0 {
                return Err("--modes must be positive".into());
            }
            let h = build_plate_hamiltonian(input.modes);
            Ok((h, json!({ "builtin": "plate", "modes": input.modes })))
        }
        (Some(Builtin::Mirror), false) => {
            if input.modes == 0 {
                return Err("--modes must be positive".into());
            }
            let a = plate_elasticity::build_a(input.modes);
            let h = mirror_hamiltonian(&a, tol).map_err(|e| e.to_string())?;
            Ok((h, json!({ "builtin": "mirror", "modes": input.modes })))
        }
        (Some(Builtin::Random), false) => {
            if input.modes == 0 {
                return Err("--modes must be positive".into());
            }
            let mut rng = ChaCha8Rng::seed_from_u64(input.seed);
            let h = random_hamiltonian(&mut rng, input.modes, tol);
            Ok((
                h,
                json!({ "builtin": "random", "block_dim": input.modes, "seed": input.seed }),
            ))
        }
        (None, true) => {
            let a = input.a.as_ref().ok_or("file input needs --a")?;
            let b = input.b.as_ref().ok_or("file input needs --b")?;
            let c = input.c.as_ref().ok_or("file input needs --c")?;
            let a = read_block("a", a)?;
            let b = read_block("b", b)?;
            let c = read_block("c", c)?;
            let h = HamiltonianOp::new(a, b, c, tol).map_err(|e| e.to_string())?;
            if let Some(dp) = &input.d {
                let d = read_block("d", dp)?;
                let expect = h.d();
                let dev = d
                    .matrix()
                    .sub(expect.matrix())
                    .frobenius_norm();
                if dev > tol * expect.frobenius_norm().max(1.0) {
                    return Err(format!(
                        "block d disagrees with -a* (deviation {dev:.3e}); a Hamiltonian operator matrix fixes d = -a*"
                    ));
                }
            }
            let files: Vec<String> = file_blocks(input)
                .iter()
                .filter_map(|(n, p)| p.as_ref().map(|p| format!("{n}={}", p.display())))
                .collect();
            Ok((h, json!({ "files": files })))
        }
    }
}

/// Build a general block operator matrix (factorize paths). Built-ins expand
/// to the blocks of the corresponding Hamiltonian.
pub fn resolve_block_op(input: &InputArgs, tol: f64) -> CliResult<(BlockOp, Value)> {
    if input.builtin.is_some() {
        let (h, desc) = resolve_hamiltonian(input, tol)?;
        return Ok((h.as_block_op(), desc));
    }
    let need = |name: &'static str, p: &Option<PathBuf>| -> CliResult<OperatorRep> {
        let p = p.as_ref().ok_or(format!("factorize with files needs --{name}"))?;
        read_block(name, p)
    };
    let a = need("a", &input.a)?;
    let b = need("b", &input.b)?;
    let c = need("c", &input.c)?;
    let d = need("d", &input.d)?;
    let files: Vec<String> = file_blocks(input)
        .iter()
        .filter_map(|(n, p)| p.as_ref().map(|p| format!("{n}={}", p.display())))
        .collect();
    let m = BlockOp::new(a, b, c, d).map_err(|e| e.to_string())?;
    Ok((m, json!({ "files": files })))
}
