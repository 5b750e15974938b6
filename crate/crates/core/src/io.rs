//! JSON matrix files.
//!
//! A file holds one matrix: `{"scale": "...", "entries": [[...], ...]}`.
//! Point matrices use plain numbers for entries; interval matrices use
//! two-element `[lo, hi]` arrays and may carry an explicit `"n"`. In
//! interval matrices the diagonal may be written as `null` (defaulted to the
//! identity point) and lower-triangle entries may be `null` (defaulted by
//! reciprocity from their mirror); everything that is spelled out is
//! validated and kept as given, never overwritten.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::group::{AloGroup, IsoMap, ScaleId, Tolerance};
use crate::ipcm::Ipcm;
use crate::pcm::Pcm;

#[derive(Debug, Deserialize, Serialize)]
struct RawMatrix {
    scale: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    n: Option<usize>,
    entries: Vec<Vec<RawCell>>,
}

#[derive(Clone, Copy, Debug, Deserialize, Serialize)]
#[serde(untagged)]
enum RawCell {
    Number(f64),
    Pair([f64; 2]),
    Missing,
}

/// A parsed matrix file: either a point matrix or an interval matrix.
#[derive(Clone, Debug)]
pub enum MatrixFile {
    Pcm(Pcm),
    Ipcm(Ipcm),
}

impl MatrixFile {
    /// Parses a matrix file. When `scale_override` is given it replaces the
    /// scale declared in the file, and every value is re-validated against
    /// the new domain.
    pub fn from_json_str(
        json: &str,
        scale_override: Option<ScaleId>,
        tol: Tolerance,
    ) -> Result<MatrixFile> {
        let raw: RawMatrix = serde_json::from_str(json)?;
        let scale = match scale_override {
            Some(id) => id,
            None => raw.scale.parse()?,
        };
        let group = AloGroup::builtin(scale).ok_or_else(|| {
            Error::InvalidArgument(format!("scale {scale} cannot be used in files"))
        })?;

        let n = raw.entries.len();
        if let Some(declared) = raw.n {
            if declared != n {
                return Err(Error::Format(format!(
                    "declared order {declared} does not match the {n} entry rows"
                )));
            }
        }
        for (i, row) in raw.entries.iter().enumerate() {
            if row.len() != n {
                return Err(Error::Format(format!(
                    "row {} has {} entries, expected {n}",
                    i + 1,
                    row.len()
                )));
            }
        }

        let interval_form = raw
            .entries
            .iter()
            .flatten()
            .any(|cell| !matches!(cell, RawCell::Number(_)));
        if !interval_form {
            let rows: Vec<Vec<f64>> = raw
                .entries
                .iter()
                .map(|row| {
                    row.iter()
                        .map(|cell| match cell {
                            RawCell::Number(v) => *v,
                            _ => unreachable!(),
                        })
                        .collect()
                })
                .collect();
            return Ok(MatrixFile::Pcm(Pcm::from_rows(&group, &rows, tol)?));
        }

        let identity = group.identity().value();
        let mut rows: Vec<Vec<[f64; 2]>> = Vec::with_capacity(n);
        for i in 0..n {
            let mut row = Vec::with_capacity(n);
            for j in 0..n {
                let pair = match raw.entries[i][j] {
                    RawCell::Pair([lo, hi]) => [lo, hi],
                    RawCell::Number(v) => [v, v],
                    RawCell::Missing if i == j => [identity, identity],
                    RawCell::Missing if i > j => match raw.entries[j][i] {
                        RawCell::Pair([lo, hi]) => reciprocal_pair(&group, lo, hi)?,
                        RawCell::Number(v) => reciprocal_pair(&group, v, v)?,
                        RawCell::Missing => {
                            return Err(Error::Format(format!(
                                "entry ({r}, {c}) is null and its mirror ({c}, {r}) is too",
                                r = i + 1,
                                c = j + 1
                            )))
                        }
                    },
                    RawCell::Missing => {
                        return Err(Error::Format(format!(
                            "entry ({}, {}) is null; only diagonal and lower-triangle \
                             entries may be omitted",
                            i + 1,
                            j + 1
                        )))
                    }
                };
                row.push(pair);
            }
            rows.push(row);
        }
        Ok(MatrixFile::Ipcm(Ipcm::from_rows(&group, &rows, tol)?))
    }

    /// Serializes the matrix in fully explicit form.
    pub fn to_json_string(&self) -> String {
        let raw = match self {
            MatrixFile::Pcm(pcm) => RawMatrix {
                scale: pcm.group().id().name().to_string(),
                n: None,
                entries: pcm
                    .rows()
                    .into_iter()
                    .map(|row| row.into_iter().map(RawCell::Number).collect())
                    .collect(),
            },
            MatrixFile::Ipcm(ipcm) => RawMatrix {
                scale: ipcm.group().id().name().to_string(),
                n: Some(ipcm.order()),
                entries: ipcm
                    .rows()
                    .into_iter()
                    .map(|row| row.into_iter().map(RawCell::Pair).collect())
                    .collect(),
            },
        };
        let mut out = serde_json::to_string_pretty(&raw).expect("matrix serializes");
        out.push('\n');
        out
    }

    pub fn group(&self) -> &AloGroup {
        match self {
            MatrixFile::Pcm(pcm) => pcm.group(),
            MatrixFile::Ipcm(ipcm) => ipcm.group(),
        }
    }

    pub fn order(&self) -> usize {
        match self {
            MatrixFile::Pcm(pcm) => pcm.order(),
            MatrixFile::Ipcm(ipcm) => ipcm.order(),
        }
    }

    /// "point" or "interval".
    pub fn kind(&self) -> &'static str {
        match self {
            MatrixFile::Pcm(_) => "point",
            MatrixFile::Ipcm(_) => "interval",
        }
    }

    /// The matrix viewed as an interval matrix; point matrices embed as
    /// point intervals.
    pub fn to_ipcm(&self) -> Ipcm {
        match self {
            MatrixFile::Pcm(pcm) => Ipcm::from_pcm(pcm),
            MatrixFile::Ipcm(ipcm) => ipcm.clone(),
        }
    }

    /// Maps every value through the isomorphism, preserving the point or
    /// interval kind.
    pub fn transport(&self, iso: &IsoMap, tol: Tolerance) -> Result<MatrixFile> {
        match self {
            MatrixFile::Pcm(pcm) => {
                if iso.source().id() != pcm.group().id() {
                    return Err(Error::ScaleMismatch {
                        expected: iso.source().id(),
                        found: pcm.group().id(),
                    });
                }
                let n = pcm.order();
                let mut entries = Vec::with_capacity(n * n);
                for i in 0..n {
                    for j in 0..n {
                        entries.push(iso.apply(pcm.entry(i, j))?);
                    }
                }
                Pcm::from_elements(iso.target().clone(), n, entries, tol).map(MatrixFile::Pcm)
            }
            MatrixFile::Ipcm(ipcm) => ipcm.transport(iso).map(MatrixFile::Ipcm),
        }
    }
}

fn reciprocal_pair(group: &AloGroup, lo: f64, hi: f64) -> Result<[f64; 2]> {
    let inv_hi = group.inv(group.element(hi)?)?;
    let inv_lo = group.inv(group.element(lo)?)?;
    Ok([inv_hi.value(), inv_lo.value()])
}
