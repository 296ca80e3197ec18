//! Machine-readable outputs: the JSON check report and the sweep CSV.

use std::io::Write;

use serde::{Deserialize, Serialize};

use crate::identities::IdentityReport;
use crate::numeric::SweepRow;
use crate::rational::format_rational;
use crate::turan::{SignCertificate, Verdict};

pub const TOOL_VERSION: &str = env!("CARGO_PKG_VERSION");

pub const CSV_HEADER: [&str; 7] = ["n", "a", "b", "x", "delta", "sign", "est_rel_err"];

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Status {
    Pass,
    Fail,
    NotCertified,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Parameters {
    pub n: u32,
    pub a: String,
    pub b: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum Details {
    Identity { residual: Vec<String> },
    Certificate(Box<SignCertificate>),
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckResult {
    pub name: String,
    pub parameters: Parameters,
    pub status: Status,
    pub details: Details,
}

impl CheckResult {
    pub fn from_identity(rep: &IdentityReport) -> Self {
        CheckResult {
            name: rep.name.clone(),
            parameters: Parameters {
                n: rep.n,
                a: format_rational(rep.fam.a()),
                b: format_rational(rep.fam.b()),
            },
            status: if rep.holds { Status::Pass } else { Status::Fail },
            details: Details::Identity {
                residual: rep.residual.to_strings(),
            },
        }
    }

    /// `expected` is the verdict that counts as a pass; anything else is
    /// reported as `fail_status`.
    pub fn from_certificate(
        name: &str,
        parameters: Parameters,
        cert: SignCertificate,
        expected: Verdict,
        fail_status: Status,
    ) -> Self {
        CheckResult {
            name: name.to_string(),
            parameters,
            status: if cert.verdict == expected {
                Status::Pass
            } else {
                fail_status
            },
            details: Details::Certificate(Box::new(cert)),
        }
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Summary {
    pub pass: usize,
    pub fail: usize,
    pub not_certified: usize,
}

/// Echo of the command line that produced a report.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConfigEcho {
    pub command: String,
    pub n_max: u32,
    pub a: Vec<String>,
    pub b: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Report {
    pub version: String,
    pub config: ConfigEcho,
    pub results: Vec<CheckResult>,
    pub summary: Summary,
}

impl Report {
    pub fn new(config: ConfigEcho, results: Vec<CheckResult>) -> Self {
        let mut summary = Summary::default();
        for r in &results {
            match r.status {
                Status::Pass => summary.pass += 1,
                Status::Fail => summary.fail += 1,
                Status::NotCertified => summary.not_certified += 1,
            }
        }
        Report {
            version: TOOL_VERSION.to_string(),
            config,
            results,
            summary,
        }
    }

    pub fn all_pass(&self) -> bool {
        self.summary.fail == 0 && self.summary.not_certified == 0
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("report serializes");
        s.push('\n');
        s
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for r in &self.results {
            let tag = match r.status {
                Status::Pass => "PASS",
                Status::Fail => "FAIL",
                Status::NotCertified => "NOT-CERTIFIED",
            };
            out.push_str(&format!(
                "{tag} {} n={} a={} b={}",
                r.name, r.parameters.n, r.parameters.a, r.parameters.b
            ));
            match &r.details {
                Details::Identity { residual } if r.status != Status::Pass => {
                    out.push_str(&format!(" residual=[{}]", residual.join(", ")));
                }
                Details::Certificate(c) => {
                    out.push_str(&format!(
                        " multiplicity_at_base={} root_count_inside={} sample_sign={}",
                        c.multiplicity_at_base, c.root_count_inside, c.sample_sign
                    ));
                    if let Some(d) = &c.diagnostic {
                        out.push_str(&format!(" ({d})"));
                    }
                }
                _ => {}
            }
            out.push('\n');
        }
        out.push_str(&format!(
            "summary: pass={} fail={} not_certified={}\n",
            self.summary.pass, self.summary.fail, self.summary.not_certified
        ));
        out
    }
}

/// binary64 with 17 significant digits.
pub fn format_f64(v: f64) -> String {
    if v.is_finite() {
        format!("{v:.16e}")
    } else {
        v.to_string()
    }
}

pub fn write_sweep_csv<W: Write>(rows: &[SweepRow], out: W) -> csv::Result<()> {
    let mut w = csv::WriterBuilder::new()
        .terminator(csv::Terminator::Any(b'\n'))
        .from_writer(out);
    w.write_record(CSV_HEADER)?;
    for r in rows {
        w.write_record([
            r.n.to_string(),
            format_rational(r.fam.a()),
            format_rational(r.fam.b()),
            format_f64(r.x),
            format_f64(r.delta_value),
            r.sign.to_string(),
            format_f64(r.est_rel_err),
        ])?;
    }
    w.flush()?;
    Ok(())
}
