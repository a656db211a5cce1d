//! Parser for complex literals of the form `a+bi` (also `a`, `bi`, `i`,
//! `-i`, `a-bi`, with scientific notation in either part).

use num_complex::Complex64;

pub fn parse_complex(s: &str) -> Result<Complex64, String> {
    let t: String = s.chars().filter(|c| !c.is_whitespace()).collect();
    if t.is_empty() {
        return Err("empty complex literal".into());
    }
    if !t.ends_with('i') && !t.ends_with('I') {
        return t
            .parse::<f64>()
            .map(|re| Complex64::new(re, 0.0))
            .map_err(|_| format!("cannot parse real literal '{s}'"));
    }
    let body = &t[..t.len() - 1];
    // split at the last +/- that is not part of an exponent and not leading
    let bytes = body.as_bytes();
    let mut split = None;
    for k in (1..bytes.len()).rev() {
        let c = bytes[k] as char;
        if (c == '+' || c == '-') && !matches!(bytes[k - 1] as char, 'e' | 'E') {
            split = Some(k);
            break;
        }
    }
    let (re_str, im_str) = match split {
        Some(k) => (&body[..k], &body[k..]),
        None => ("", body),
    };
    let re = if re_str.is_empty() {
        0.0
    } else {
        re_str
            .parse::<f64>()
            .map_err(|_| format!("cannot parse real part of '{s}'"))?
    };
    let im = match im_str {
        "" | "+" => 1.0,
        "-" => -1.0,
        other => other
            .parse::<f64>()
            .map_err(|_| format!("cannot parse imaginary part of '{s}'"))?,
    };
    Ok(Complex64::new(re, im))
}

pub fn parse_complex_list(s: &str) -> Result<Vec<Complex64>, String> {
    s.split(',')
        .map(str::trim)
        .filter(|t| !t.is_empty())
        .map(parse_complex)
        .collect()
}
