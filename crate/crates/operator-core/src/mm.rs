//! Matrix Market exchange format, "complex general" flavor.
//!
//! Reads both `coordinate` and `array` layouts (`real general` files are
//! promoted to complex). The writer emits the `array` layout with
//! 17-significant-digit decimals and LF line endings, so write/read
//! round-trips are entrywise exact.

use crate::basis::BasisTag;
use crate::error::{CoreError, Result};
use crate::matrix::{c64, CMat};
use crate::rep::OperatorRep;
use num_complex::Complex64;
use std::fs;
use std::io::Write;
use std::path::Path;

pub fn read_matrix_market(path: impl AsRef<Path>) -> Result<OperatorRep> {
    let text = fs::read_to_string(path.as_ref())?;
    parse_matrix_market(&text)
}

pub fn parse_matrix_market(text: &str) -> Result<OperatorRep> {
    let mut lines = text.lines().enumerate();

    let (header_line_no, header) = lines
        .next()
        .ok_or_else(|| CoreError::ParseError {
            line: 1,
            message: "empty file".into(),
        })
        .map(|(i, l)| (i + 1, l))?;
    let tokens: Vec<&str> = header.split_whitespace().collect();
    if tokens.len() < 5 || tokens[0] != "%%MatrixMarket" || tokens[1] != "matrix" {
        return Err(CoreError::ParseError {
            line: header_line_no,
            message: "header must start with '%%MatrixMarket matrix'".into(),
        });
    }
    let layout = tokens[2];
    let field = tokens[3];
    let symmetry = tokens[4];
    if layout != "coordinate" && layout != "array" {
        return Err(CoreError::ParseError {
            line: header_line_no,
            message: format!("unsupported layout '{layout}' (expected coordinate or array)"),
        });
    }
    if field != "complex" && field != "real" {
        return Err(CoreError::ParseError {
            line: header_line_no,
            message: format!("unsupported field '{field}' (expected complex or real)"),
        });
    }
    if symmetry != "general" {
        return Err(CoreError::ParseError {
            line: header_line_no,
            message: format!("unsupported symmetry '{symmetry}' (expected general)"),
        });
    }
    let complex = field == "complex";

    // size line: first non-comment, non-blank line
    let mut size_line = None;
    for (i, l) in lines.by_ref() {
        let t = l.trim();
        if t.is_empty() || t.starts_with('%') {
            continue;
        }
        size_line = Some((i + 1, t.to_string()));
        break;
    }
    let (size_line_no, size_text) = size_line.ok_or(CoreError::ParseError {
        line: header_line_no,
        message: "missing size line".into(),
    })?;
    let dims: Vec<&str> = size_text.split_whitespace().collect();
    let expected_dims = if layout == "coordinate" { 3 } else { 2 };
    if dims.len() != expected_dims {
        return Err(CoreError::ParseError {
            line: size_line_no,
            message: format!(
                "size line must have {expected_dims} integers, got {}",
                dims.len()
            ),
        });
    }
    let parse_dim = |s: &str, line: usize| -> Result<usize> {
        s.parse::<usize>().map_err(|_| CoreError::ParseError {
            line,
            message: format!("cannot parse dimension '{s}'"),
        })
    };
    let nrows = parse_dim(dims[0], size_line_no)?;
    let ncols = parse_dim(dims[1], size_line_no)?;
    let mut mat = CMat::zeros(nrows, ncols);

    let parse_f64 = |s: &str, line: usize| -> Result<f64> {
        s.parse::<f64>().map_err(|_| CoreError::ParseError {
            line,
            message: format!("cannot parse number '{s}'"),
        })
    };

    if layout == "coordinate" {
        let nnz = parse_dim(dims[2], size_line_no)?;
        let mut seen = 0usize;
        for (i, l) in lines {
            let line_no = i + 1;
            let t = l.trim();
            if t.is_empty() || t.starts_with('%') {
                continue;
            }
            let parts: Vec<&str> = t.split_whitespace().collect();
            let want = if complex { 4 } else { 3 };
            if parts.len() != want {
                return Err(CoreError::ParseError {
                    line: line_no,
                    message: format!("entry must have {want} fields, got {}", parts.len()),
                });
            }
            seen += 1;
            if seen > nnz {
                return Err(CoreError::ParseError {
                    line: line_no,
                    message: format!("more than the declared {nnz} entries"),
                });
            }
            let r = parse_dim(parts[0], line_no)?;
            let c = parse_dim(parts[1], line_no)?;
            if r < 1 || r > nrows || c < 1 || c > ncols {
                return Err(CoreError::DimensionError {
                    expected: format!("indices within {nrows}x{ncols}"),
                    got: format!("({r}, {c}) at line {line_no}"),
                });
            }
            let re = parse_f64(parts[2], line_no)?;
            let im = if complex {
                parse_f64(parts[3], line_no)?
            } else {
                0.0
            };
            let cur = mat[(r - 1, c - 1)];
            mat[(r - 1, c - 1)] = cur + c64(re, im);
        }
        if seen != nnz {
            return Err(CoreError::ParseError {
                line: size_line_no,
                message: format!("declared {nnz} entries but found {seen}"),
            });
        }
    } else {
        // array layout: column-major dense listing
        let total = nrows * ncols;
        let mut count = 0usize;
        for (i, l) in lines {
            let line_no = i + 1;
            let t = l.trim();
            if t.is_empty() || t.starts_with('%') {
                continue;
            }
            let parts: Vec<&str> = t.split_whitespace().collect();
            let want = if complex { 2 } else { 1 };
            if parts.len() != want {
                return Err(CoreError::ParseError {
                    line: line_no,
                    message: format!("entry must have {want} fields, got {}", parts.len()),
                });
            }
            if count >= total {
                return Err(CoreError::ParseError {
                    line: line_no,
                    message: format!("more than the declared {total} entries"),
                });
            }
            let re = parse_f64(parts[0], line_no)?;
            let im = if complex {
                parse_f64(parts[1], line_no)?
            } else {
                0.0
            };
            let col = count / nrows;
            let row = count % nrows;
            mat[(row, col)] = c64(re, im);
            count += 1;
        }
        if count != total {
            return Err(CoreError::ParseError {
                line: size_line_no,
                message: format!("declared {total} entries but found {count}"),
            });
        }
    }

    OperatorRep::new(
        mat,
        BasisTag::Abstract(ncols),
        BasisTag::Abstract(nrows),
        nrows.max(ncols).max(1),
    )
}

/// Write in `array complex general` layout.
pub fn write_matrix_market(op: &OperatorRep, path: impl AsRef<Path>) -> Result<()> {
    let mut out = String::new();
    format_matrix_market(op, &mut out);
    let mut f = fs::File::create(path.as_ref())?;
    f.write_all(out.as_bytes())?;
    Ok(())
}

pub fn format_matrix_market(op: &OperatorRep, out: &mut String) {
    use std::fmt::Write as _;
    let m = op.matrix();
    out.push_str("%%MatrixMarket matrix array complex general\n");
    let _ = writeln!(out, "{} {}", m.nrows(), m.ncols());
    for j in 0..m.ncols() {
        for i in 0..m.nrows() {
            let z: Complex64 = m[(i, j)];
            let _ = writeln!(out, "{:.16e} {:.16e}", z.re, z.im);
        }
    }
}
