//! Certificate bundles: a directory holding `result.json` (an [`IrResult`])
//! and `witnesses/<canonical graph6>.txt`, one good colouring per host of the
//! witness order.

use std::collections::BTreeSet;
use std::fs;
use std::path::Path;

use crate::arrow::{decide_arrowing, verify_coloring, Outcome};
use crate::canon::canonical_form;
use crate::coloring::EdgeColoring;
use crate::enumerate::{collect, GenFilter};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::graph6::encode;
use crate::ramsey::{IrResult, IrValue, Method};

pub const RESULT_FILE: &str = "result.json";
pub const WITNESS_DIR: &str = "witnesses";

pub fn write_bundle(result: &IrResult, dir: &Path) -> Result<()> {
    let wdir = dir.join(WITNESS_DIR);
    fs::create_dir_all(&wdir)?;
    for (host, coloring) in &result.witnesses {
        fs::write(wdir.join(format!("{}.txt", encode(host))), coloring.to_witness(host))?;
    }
    fs::write(dir.join(RESULT_FILE), serde_json::to_string_pretty(result)? + "\n")?;
    Ok(())
}

/// What [`certify`] checked.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CertifyReport {
    pub value: IrValue,
    pub witnesses: usize,
    pub arrow_host_confirmed: bool,
}

fn fail(msg: impl Into<String>) -> Error {
    Error::Certificate(msg.into())
}

/// Re-validates a bundle from scratch: every witness is a canonical host
/// with a good colouring, the witnesses cover every host of their order
/// (connected hosts for the connected reduction), and the arrowing host is
/// decided again.
pub fn certify(dir: &Path) -> Result<CertifyReport> {
    let text = fs::read_to_string(dir.join(RESULT_FILE))?;
    let result: IrResult = serde_json::from_str(&text)?;
    let (g, h) = (&result.red, &result.blue);

    let mut keys = BTreeSet::new();
    let wdir = dir.join(WITNESS_DIR);
    if wdir.is_dir() {
        let mut entries: Vec<_> = fs::read_dir(&wdir)?.collect::<std::io::Result<_>>()?;
        entries.sort_by_key(|e| e.file_name());
        for entry in entries {
            let (host, coloring) = EdgeColoring::parse_witness(&fs::read_to_string(entry.path())?)?;
            let name = entry.file_name().to_string_lossy().into_owned();
            check_witness(&host, &coloring, g, h, &name)?;
            keys.insert(encode(&host));
        }
    }
    if keys.len() != result.witness_count {
        return Err(fail(format!("{} witnesses on disk, result lists {}", keys.len(), result.witness_count)));
    }
    if let Some(n) = result.witness_order {
        let connected_only = matches!(result.method, Method::ConnectedReduction { .. });
        let expected: BTreeSet<String> = if n == 0 {
            [encode(&Graph::new(0))].into()
        } else {
            collect(n, &GenFilter { connected_only, ..Default::default() })?.iter().map(encode).collect()
        };
        if keys != expected {
            let missing = expected.difference(&keys).count();
            let extra = keys.difference(&expected).count();
            return Err(fail(format!("witness set for order {n}: {missing} missing, {extra} unexpected")));
        }
    }

    let mut arrow_host_confirmed = false;
    if let Some(cert) = &result.arrow_certificate {
        let v = decide_arrowing(&cert.host, g, h, result.budget.max(cert.stats.budget));
        if v.outcome != Outcome::Arrows {
            return Err(fail(format!("host {} is not confirmed to arrow: {}", encode(&cert.host), v.outcome.label())));
        }
        arrow_host_confirmed = true;
    }
    if let IrValue::Exact(v) = result.value {
        let host_order = result.arrow_certificate.as_ref().map(|c| c.host.order());
        if host_order != Some(v) || result.witness_order.map(|n| n + 1) != Some(v) {
            return Err(fail(format!("exact value {v} needs an order-{v} host and order-{} witnesses", v - 1)));
        }
    }
    Ok(CertifyReport { value: result.value, witnesses: keys.len(), arrow_host_confirmed })
}

fn check_witness(host: &Graph, c: &EdgeColoring, g: &Graph, h: &Graph, name: &str) -> Result<()> {
    if &canonical_form(host) != host {
        return Err(fail(format!("{name}: host is not in canonical form")));
    }
    if name != format!("{}.txt", encode(host)) {
        return Err(fail(format!("{name}: file name does not match the host")));
    }
    if !verify_coloring(host, c, g, h)?.is_good() {
        return Err(fail(format!("{name}: colouring is not good")));
    }
    Ok(())
}
