//! Rendering of command results as plain text, JSON or CSV.

use std::fmt::Display;

use clap::ValueEnum;
use jackd_core::colored::DerangementProfile;
use jackd_core::{AlphaSpec, EtaValue, Method, Partition, Rational, SpectrumTable};
use serde::Serialize;

use crate::suites::Report;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
    Plain,
}

fn json(value: &impl Serialize) -> String {
    let mut s = serde_json::to_string(value).expect("output types serialize");
    s.push('\n');
    s
}

fn csv<const N: usize>(header: [&str; N], rows: impl IntoIterator<Item = [String; N]>) -> String {
    let mut w = csv::WriterBuilder::new()
        .terminator(csv::Terminator::Any(b'\n'))
        .from_writer(Vec::new());
    w.write_record(header).expect("in-memory write");
    for row in rows {
        w.write_record(&row).expect("in-memory write");
    }
    String::from_utf8(w.into_inner().expect("in-memory flush")).expect("records are UTF-8")
}

fn tsv<const N: usize>(header: [&str; N], rows: impl IntoIterator<Item = [String; N]>) -> String {
    let mut out = header.join("\t");
    out.push('\n');
    for row in rows {
        out.push_str(&row.join("\t"));
        out.push('\n');
    }
    out
}

fn table<const N: usize>(fmt: Format, header: [&str; N], rows: Vec<[String; N]>) -> String {
    match fmt {
        Format::Csv => csv(header, rows),
        _ => tsv(header, rows),
    }
}

#[derive(Serialize)]
struct EtaOut<'a> {
    shape: &'a Partition,
    alpha: &'a AlphaSpec,
    method: &'a str,
    eta: &'a EtaValue,
}

pub fn eta(
    fmt: Format,
    shape: &Partition,
    alpha: &AlphaSpec,
    method: Method,
    value: &EtaValue,
) -> String {
    match fmt {
        Format::Plain => format!("{value}\n"),
        Format::Json => json(&EtaOut {
            shape,
            alpha,
            method: method.name(),
            eta: value,
        }),
        Format::Csv => csv(
            ["shape", "alpha", "method", "eta"],
            [[
                shape.to_string(),
                alpha.to_string(),
                method.name().to_string(),
                value.to_string(),
            ]],
        ),
    }
}

pub fn spectrum(fmt: Format, t: &SpectrumTable) -> String {
    if fmt == Format::Json {
        return json(t);
    }
    let rows = t
        .rows
        .iter()
        .map(|r| {
            [
                r.shape.to_string(),
                r.eta.to_string(),
                r.mult.map(|m| m.to_string()).unwrap_or_default(),
            ]
        })
        .collect();
    table(fmt, ["shape", "eta", "mult"], rows)
}

pub fn profile(fmt: Format, p: &DerangementProfile) -> String {
    if fmt == Format::Json {
        return json(p);
    }
    let rows = p
        .counts
        .iter()
        .enumerate()
        .map(|(i, d)| [(i + 1).to_string(), d.to_string()])
        .collect();
    table(fmt, ["k", "d"], rows)
}

#[derive(Serialize)]
struct ImmanantOut<'a> {
    shape: &'a Partition,
    d_lambda: String,
    coeffs: Vec<String>,
}

pub fn immanant(fmt: Format, shape: &Partition, d: &impl Display, coeffs: &[Rational]) -> String {
    match fmt {
        Format::Json => json(&ImmanantOut {
            shape,
            d_lambda: d.to_string(),
            coeffs: coeffs.iter().map(|c| c.to_string()).collect(),
        }),
        Format::Csv => csv(
            ["k", "coeff"],
            coeffs
                .iter()
                .enumerate()
                .map(|(k, c)| [k.to_string(), c.to_string()]),
        ),
        Format::Plain => {
            let rows = coeffs
                .iter()
                .enumerate()
                .map(|(k, c)| [k.to_string(), c.to_string()]);
            format!("d_lambda\t{d}\n{}", tsv(["k", "coeff"], rows))
        }
    }
}

pub fn check(fmt: Format, r: &Report) -> String {
    match fmt {
        Format::Json => json(r),
        Format::Csv => csv(
            ["suite", "name", "pass", "detail"],
            r.results.iter().map(|o| {
                [
                    o.suite.to_string(),
                    o.name.clone(),
                    o.pass.to_string(),
                    o.detail.clone(),
                ]
            }),
        ),
        Format::Plain => {
            let mut out = String::new();
            for o in &r.results {
                let status = if o.pass { "PASS" } else { "FAIL" };
                out.push_str(&format!(
                    "{status} {}: {} ({})\n",
                    o.suite, o.name, o.detail
                ));
            }
            let failed = r.results.iter().filter(|o| !o.pass).count();
            if failed == 0 {
                out.push_str(&format!("all {} checks passed\n", r.results.len()));
            } else {
                out.push_str(&format!("{failed} of {} checks failed\n", r.results.len()));
            }
            out
        }
    }
}
