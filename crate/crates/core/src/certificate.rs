//! Text form of [`Certificate`] and the independent checker [`verify`].

use crate::engine::{Certificate, EngineStats, Evidence};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::minors::{validate_model, MinorModel};
use crate::pathwidth::{validate_decomposition, PathDecomposition};
use crate::report::{ValidationReport, Violation};

impl Certificate {
    /// `certificate decomposition|model <|F|> <w>` followed by the
    /// `pathdecomp` or `model` body. The host is needed to print edge images.
    pub fn write(&self, host: &Graph) -> String {
        let (kind, body) = match &self.evidence {
            Evidence::Decomposition(d) => ("decomposition", d.to_string()),
            Evidence::Model(m) => ("model", m.write(host)),
        };
        format!("certificate {kind} {} {}\n{body}", self.forest_size, self.w)
    }

    /// Reads a certificate for host `g` and forest `f`. Header values are
    /// taken as written; [`verify`] compares them against `f`.
    pub fn parse(text: &str, g: &Graph, f: &Graph) -> Result<Self> {
        let mut lines = text.lines().enumerate().map(|(i, l)| (i + 1, l));
        let (ln, header) = lines
            .by_ref()
            .find(|(_, l)| !l.trim().is_empty())
            .ok_or_else(|| Error::parse(1, "empty certificate"))?;
        let fields: Vec<&str> = header.split_whitespace().collect();
        let (kind, size, w) = match fields.as_slice() {
            ["certificate", kind, size, w] => (
                *kind,
                size.parse::<usize>()
                    .map_err(|_| Error::parse(ln, "|F| is not an integer"))?,
                w.parse::<isize>()
                    .map_err(|_| Error::parse(ln, "w is not an integer"))?,
            ),
            _ => {
                return Err(Error::parse(
                    ln,
                    "expected `certificate decomposition|model <|F|> <w>`",
                ))
            }
        };
        let body_header = lines
            .next()
            .ok_or_else(|| Error::parse(ln + 1, "missing certificate body"))?;
        let evidence = match kind {
            "decomposition" => {
                Evidence::Decomposition(PathDecomposition::parse_lines(body_header, &mut lines)?)
            }
            "model" => Evidence::Model(MinorModel::parse_lines(f, g, body_header, &mut lines)?),
            other => {
                return Err(Error::parse(
                    ln,
                    format!("unknown certificate kind `{other}`"),
                ))
            }
        };
        if let Some((extra, _)) = lines.find(|(_, l)| !l.trim().is_empty()) {
            return Err(Error::parse(
                extra,
                "trailing content after the certificate",
            ));
        }
        Ok(Certificate {
            forest_size: size,
            w,
            evidence,
            stats: EngineStats::default(),
        })
    }
}

/// Checks a certificate for `(g, f)` from scratch: a decomposition must be
/// valid with width at most `|F| - 2`; a model must be a valid model of `f`
/// in `g`.
pub fn verify(g: &Graph, f: &Graph, cert: &Certificate) -> ValidationReport {
    let mut report = ValidationReport::default();
    let bound = f.n() as isize - 2;
    if cert.forest_size != f.n() {
        report.push(Violation::HeaderMismatch {
            field: "|F|",
            expected: f.n() as isize,
            found: cert.forest_size as isize,
        });
    }
    if cert.w != bound {
        report.push(Violation::HeaderMismatch {
            field: "w",
            expected: bound,
            found: cert.w,
        });
    }
    match &cert.evidence {
        Evidence::Decomposition(d) => {
            report.extend(validate_decomposition(g, d));
            if d.width() > bound {
                report.push(Violation::WidthExceeded {
                    width: d.width(),
                    max: bound,
                });
            }
        }
        Evidence::Model(m) => {
            if &m.pattern != f {
                report.push(Violation::HeaderMismatch {
                    field: "pattern edges",
                    expected: f.m() as isize,
                    found: m.pattern.m() as isize,
                });
            }
            report.extend(validate_model(g, m));
        }
    }
    report
}
