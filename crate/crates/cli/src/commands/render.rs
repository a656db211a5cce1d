//! `render` command: regenerate plot-ready CSV tables from JSON reports.

use crate::args::RenderArgs;
use crate::reports::{fmt_f64, ReportWriter};
use serde_json::Value;
use std::path::Path;

fn load_json(dir: &Path, name: &str) -> Option<Value> {
    let path = dir.join(format!("{name}.json"));
    let text = std::fs::read_to_string(path).ok()?;
    serde_json::from_str(&text).ok()
}

pub fn run(args: &RenderArgs) -> Result<bool, String> {
    let writer = ReportWriter::from_output(&args.output)?;
    let dir = &args.reports;
    let mut rendered = 0usize;

    if let Some(v) = load_json(dir, "criteria").or_else(|| load_json(dir, "validate")) {
        let rows: Vec<String> = v["results"]
            .as_array()
            .map(|rows| {
                rows.iter()
                    .flat_map(|r| {
                        let criterion = r["criterion"].as_str().unwrap_or("?").to_string();
                        let lre = r["lambda"]["re"].as_f64();
                        let lim = r["lambda"]["im"].as_f64();
                        r["metrics"]
                            .as_array()
                            .cloned()
                            .unwrap_or_default()
                            .into_iter()
                            .map(move |m| {
                                format!(
                                    "{criterion},{},{},{},{}",
                                    lre.map(fmt_f64).unwrap_or_default(),
                                    lim.map(fmt_f64).unwrap_or_default(),
                                    m["name"].as_str().unwrap_or("?"),
                                    m["value"].as_f64().map(fmt_f64).unwrap_or_default()
                                )
                            })
                            .collect::<Vec<_>>()
                    })
                    .collect()
            })
            .unwrap_or_default();
        writer.write_csv(
            "render_criteria",
            "criterion,lambda_re,lambda_im,metric,value",
            &rows,
        )?;
        rendered += 1;
    }

    if let Some(v) = load_json(dir, "bounds") {
        let report = &v["results"]["hypothesis_report"];
        for tag in ["bound_c_on_a", "bound_b_on_astar", "bound_a_on_c", "bound_astar_on_b"] {
            let est = &report[tag];
            let (Some(lams), Some(ns), Some(grid)) = (
                est["lambda_schedule"].as_array(),
                est["n_schedule"].as_array(),
                est["grid"].as_array(),
            ) else {
                continue;
            };
            let mut header = String::from("lambda");
            for n in ns {
                header.push_str(&format!(",N{n}"));
            }
            let rows: Vec<String> = lams
                .iter()
                .zip(grid)
                .map(|(lam, row)| {
                    let mut line = lam.as_f64().map(fmt_f64).unwrap_or_default();
                    for v in row.as_array().cloned().unwrap_or_default() {
                        line.push_str(&format!(",{}", v.as_f64().map(fmt_f64).unwrap_or_default()));
                    }
                    line
                })
                .collect();
            writer.write_csv(&format!("render_{tag}"), &header, &rows)?;
        }
        rendered += 1;
    }

    if let Some(v) = load_json(dir, "spectrum") {
        let spectrum = &v["results"]["spectrum"];
        let computed = spectrum["computed"].as_array().cloned().unwrap_or_default();
        let reference = spectrum["reference"].as_array().cloned().unwrap_or_default();
        let rows: Vec<String> = computed
            .iter()
            .zip(&reference)
            .enumerate()
            .map(|(i, (z, r))| {
                format!(
                    "{i},{},{},{}",
                    z["re"].as_f64().map(fmt_f64).unwrap_or_default(),
                    z["im"].as_f64().map(fmt_f64).unwrap_or_default(),
                    r.as_f64().map(fmt_f64).unwrap_or_default()
                )
            })
            .collect();
        writer.write_csv("render_spectrum", "index,computed_re,computed_im,reference", &rows)?;
        rendered += 1;
    }

    if rendered == 0 {
        return Err(format!(
            "missing report: no criteria.json, validate.json, bounds.json or spectrum.json under {}",
            dir.display()
        ));
    }
    println!("rendered {rendered} report(s) into {}", writer.dir().display());
    Ok(true)
}
