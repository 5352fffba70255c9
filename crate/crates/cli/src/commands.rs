//! Subcommand implementations. Each returns its textual output plus a
//! process exit code: 0 success, 1 verification failure, 2 usage error,
//! 3 numeric failure in the eigensolver.

use serde_json::json;

use gel_core::classify::classify_energy;
use gel_core::error::Error as CoreError;
use gel_core::graph::Graph;
use gel_core::harness::{self, enumerate, markdown_summary, to_jsonl, VerifyParams};
use gel_core::io;
use gel_core::limits::CHARPOLY_MAX_ORDER;
use gel_core::spectral::{
    cospectral, energy_closed_form, exact_integer_spectrum, spectrum, ExactSpectrum,
};

use crate::expr::parse_expr;

pub const EXIT_OK: i32 = 0;
pub const EXIT_VERIFICATION: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_NUMERIC: i32 = 3;

pub struct Outcome {
    pub output: String,
    pub code: i32,
}

impl Outcome {
    fn ok(output: String) -> Self {
        Outcome {
            output,
            code: EXIT_OK,
        }
    }
    fn failed(output: String, code: i32) -> Self {
        Outcome { output, code }
    }
}

fn core_exit_code(e: &CoreError) -> i32 {
    match e {
        CoreError::NumericFailure { .. } => EXIT_NUMERIC,
        _ => EXIT_USAGE,
    }
}

fn with_graph(expr_text: &str, f: impl FnOnce(Graph) -> Result<Outcome, CoreError>) -> Outcome {
    let expr = match parse_expr(expr_text) {
        Ok(e) => e,
        Err(e) => return Outcome::failed(e.to_string(), EXIT_USAGE),
    };
    match expr.build().and_then(f) {
        Ok(out) => out,
        Err(e) => Outcome::failed(e.to_string(), core_exit_code(&e)),
    }
}

/// `x` to 10 significant digits, trailing zeros trimmed; exact integers
/// print without a decimal point.
pub fn format_real(x: f64) -> String {
    if x == 0.0 {
        return "0".to_string();
    }
    let magnitude = x.abs().log10().floor() as i32;
    let decimals = (9 - magnitude).clamp(0, 17) as usize;
    let mut s = format!("{x:.decimals$}");
    if s.contains('.') {
        while s.ends_with('0') {
            s.pop();
        }
        if s.ends_with('.') {
            s.pop();
        }
    }
    s
}

pub fn build(expr: &str, out: &str, json_mode: bool) -> Outcome {
    with_graph(expr, |g| {
        let g6 = io::to_graph6(&g);
        if json_mode {
            let body = json!({
                "expr": g.label_or_order(),
                "order": g.order(),
                "size": g.size(),
                "g6": g6,
            });
            return Ok(Outcome::ok(body.to_string()));
        }
        let text = match out {
            "edgelist" => io::to_edge_list(&g),
            _ => format!("{g6}\n"),
        };
        Ok(Outcome::ok(text))
    })
}

pub fn spectrum_cmd(expr: &str, exact: bool, json_mode: bool) -> Outcome {
    with_graph(expr, |g| {
        let s = spectrum(&g)?;
        if exact {
            if g.order() > CHARPOLY_MAX_ORDER {
                return Ok(Outcome::failed(
                    format!(
                        "exact spectra are available up to order {CHARPOLY_MAX_ORDER}, got {}",
                        g.order()
                    ),
                    EXIT_VERIFICATION,
                ));
            }
            return match exact_integer_spectrum(&g, s.values())? {
                ExactSpectrum::Integral(groups) => {
                    if json_mode {
                        let body = json!({ "exact": groups });
                        Ok(Outcome::ok(body.to_string()))
                    } else {
                        let lines: Vec<String> = groups
                            .iter()
                            .map(|(v, m)| format!("{v} {m}"))
                            .collect();
                        Ok(Outcome::ok(lines.join("\n") + "\n"))
                    }
                }
                ExactSpectrum::NonIntegral => Ok(Outcome::failed(
                    "graph is not integral; no exact integer spectrum exists".into(),
                    EXIT_VERIFICATION,
                )),
            };
        }
        if json_mode {
            let body = json!({
                "values": s.values(),
                "grouped": s.grouped(),
            });
            return Ok(Outcome::ok(body.to_string()));
        }
        let lines: Vec<String> = s
            .grouped()
            .iter()
            .map(|(v, m)| format!("{} {m}", format_real(*v)))
            .collect();
        Ok(Outcome::ok(lines.join("\n") + "\n"))
    })
}

pub fn energy_cmd(expr: &str, json_mode: bool) -> Outcome {
    with_graph(expr, |g| {
        let s = spectrum(&g)?;
        let closed = if g.order() <= CHARPOLY_MAX_ORDER && s.integer_like() {
            energy_closed_form(&g)?
        } else {
            None
        };
        if json_mode {
            let body = json!({
                "order": g.order(),
                "energy": s.energy(),
                "energy_exact": closed,
            });
            return Ok(Outcome::ok(body.to_string()));
        }
        let text = match closed {
            Some(e) => format!("{e}\n"),
            None => format!("{}\n", format_real(s.energy())),
        };
        Ok(Outcome::ok(text))
    })
}

pub fn classify_cmd(expr: &str, csv: bool, json_mode: bool) -> Outcome {
    with_graph(expr, |g| {
        let r = classify_energy(&g)?;
        if json_mode {
            return Ok(Outcome::ok(serde_json::to_string(&r).expect("serializes")));
        }
        if csv {
            return Ok(Outcome::ok(r.csv_row() + "\n"));
        }
        let mut out = String::new();
        out.push_str(&format!("graph: {}\n", g.label_or_order()));
        out.push_str(&format!("order: {}\n", r.order));
        match r.energy_exact {
            Some(e) => out.push_str(&format!("energy: {e}\n")),
            None => out.push_str(&format!("energy: {}\n", format_real(r.energy))),
        }
        out.push_str(&format!("flags: {}\n", r.flag_names().join(" ")));
        out.push_str(&format!(
            "integral: {}\n",
            match r.integral {
                Some(b) => b.to_string(),
                None => "undecided".into(),
            }
        ));
        out.push_str(&format!(
            "arithmetic: {}\n",
            if r.exact_arithmetic { "exact" } else { "numeric" }
        ));
        Ok(Outcome::ok(out))
    })
}

pub fn pair_cmd(expr1: &str, expr2: &str, json_mode: bool) -> Outcome {
    let parse = |t: &str| parse_expr(t).map_err(|e| e.to_string());
    let (a, b) = match (parse(expr1), parse(expr2)) {
        (Ok(a), Ok(b)) => (a, b),
        (Err(e), _) | (_, Err(e)) => return Outcome::failed(e, EXIT_USAGE),
    };
    let run = || -> Result<Outcome, CoreError> {
        let (g, h) = (a.build()?, b.build()?);
        let cert = gel_core::certify_pair(&g, &h)?;
        if json_mode {
            return Ok(Outcome::ok(
                serde_json::to_string(&cert).expect("serializes"),
            ));
        }
        let mut out = String::new();
        out.push_str(&format!("verdict: {:?}\n", cert.verdict));
        out.push_str(&format!("same_order: {}\n", cert.same_order));
        match cert.energies_exact {
            Some((x, y)) => out.push_str(&format!("energies: {x} {y} (exact)\n")),
            None => out.push_str(&format!(
                "energies: {} {}\n",
                format_real(cert.energies.0),
                format_real(cert.energies.1)
            )),
        }
        out.push_str(&format!("cospectral: {}\n", cert.cospectral));
        out.push_str(&format!(
            "isomorphic: {}\n",
            match cert.isomorphic {
                Some(b) => b.to_string(),
                None => "undecided".into(),
            }
        ));
        Ok(Outcome::ok(out))
    };
    match run() {
        Ok(o) => o,
        Err(e) => Outcome::failed(e.to_string(), core_exit_code(&e)),
    }
}

fn parse_range(text: &str) -> Result<(usize, usize), String> {
    if let Some((a, b)) = text.split_once("..") {
        let lo: usize = a.trim().parse().map_err(|_| format!("bad range start {a:?}"))?;
        let hi: usize = b.trim().parse().map_err(|_| format!("bad range end {b:?}"))?;
        if lo > hi {
            return Err(format!("empty range {text:?}"));
        }
        Ok((lo, hi))
    } else {
        let k: usize = text.trim().parse().map_err(|_| format!("bad range {text:?}"))?;
        Ok((k, k))
    }
}

pub struct VerifyArgs<'a> {
    pub id: &'a str,
    pub seed: Option<&'a str>,
    pub seed2: Option<&'a str>,
    pub m: Option<&'a str>,
    pub n: Option<&'a str>,
    pub p: Option<&'a str>,
}

pub fn verify_cmd(args: &VerifyArgs, json_mode: bool) -> Outcome {
    let mut params = VerifyParams::default();
    for (slot, text) in [(&mut params.m, args.m), (&mut params.n, args.n), (&mut params.p, args.p)]
    {
        if let Some(t) = text {
            match parse_range(t) {
                Ok(r) => *slot = Some(r),
                Err(e) => return Outcome::failed(e, EXIT_USAGE),
            }
        }
    }
    for (slot, text) in [(&mut params.seed, args.seed), (&mut params.second, args.seed2)] {
        if let Some(t) = text {
            match parse_expr(t).map_err(|e| e.to_string()).and_then(|e| {
                e.build().map_err(|err| err.to_string())
            }) {
                Ok(g) => *slot = Some(g),
                Err(e) => return Outcome::failed(e, EXIT_USAGE),
            }
        }
    }
    match harness::verify_by_id(args.id, &params) {
        Ok(Some(verdicts)) => {
            let failures = verdicts.iter().filter(|v| !v.pass).count();
            let output = if json_mode {
                to_jsonl(&verdicts)
            } else {
                let mut out = String::new();
                for v in &verdicts {
                    out.push_str(&format!(
                        "{} {} [{}] expected [{}] observed [{}]\n",
                        if v.pass { "PASS" } else { "FAIL" },
                        v.theorem_id,
                        v.instance,
                        v.expected,
                        v.observed
                    ));
                    if let Some(w) = &v.witness {
                        out.push_str(&format!("  witness: {w}\n"));
                    }
                }
                out.push('\n');
                out.push_str(&markdown_summary(&verdicts));
                out
            };
            if failures == 0 {
                Outcome::ok(output)
            } else {
                Outcome::failed(output, EXIT_VERIFICATION)
            }
        }
        Ok(None) => Outcome::failed(
            format!(
                "unknown claim id {:?}; known ids: {}",
                args.id,
                harness::known_ids().join(", ")
            ),
            EXIT_USAGE,
        ),
        Err(e) => Outcome::failed(e.to_string(), core_exit_code(&e)),
    }
}

pub fn enumerate_cmd(n: usize, flag: &str, json_mode: bool) -> Outcome {
    let selector: enumerate::FlagSelector = match flag.parse() {
        Ok(f) => f,
        Err(e) => return Outcome::failed(e, EXIT_USAGE),
    };
    match enumerate::enumerate_small(n, selector) {
        Ok(hits) => {
            if json_mode {
                let rows: Vec<serde_json::Value> = hits
                    .iter()
                    .map(|h| {
                        json!({
                            "g6": io::to_graph6(&h.graph),
                            "mask": h.mask,
                            "order": h.graph.order(),
                            "size": h.graph.size(),
                            "energy": h.energy,
                            "energy_exact": h.energy_exact,
                            "integral": h.integral,
                            "connected": h.connected,
                            "max_degree": h.max_degree,
                            "labeled_count": h.labeled_count,
                        })
                    })
                    .collect();
                return Outcome::ok(
                    rows.iter()
                        .map(|r| r.to_string())
                        .collect::<Vec<_>>()
                        .join("\n"),
                );
            }
            let mut out = format!("{} class(es)\n", hits.len());
            for h in &hits {
                out.push_str(&format!(
                    "{} energy={} connected={} max_degree={} integral={} labeled={}\n",
                    io::to_graph6(&h.graph),
                    match h.energy_exact {
                        Some(e) => e.to_string(),
                        None => format_real(h.energy),
                    },
                    h.connected,
                    h.max_degree,
                    h.integral,
                    h.labeled_count
                ));
            }
            Outcome::ok(out)
        }
        Err(e) => Outcome::failed(e.to_string(), core_exit_code(&e)),
    }
}

/// graph6 round-trip identity used by the CLI tests: re-reading `build`
/// output yields a graph cospectral with the original.
pub fn roundtrip_check(expr_text: &str) -> Result<bool, CoreError> {
    let g = parse_expr(expr_text)
        .map_err(|e| CoreError::Graph6(e.to_string()))?
        .build()?;
    let back = io::from_graph6(io::to_graph6(&g).trim())?;
    cospectral(&g, &back)
}
