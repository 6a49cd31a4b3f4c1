//! The SCA structure-constant format.
//!
//! ```text
//! SCA/1
//! kind lie
//! dim 3
//! parity 0 0 0
//! label 1 h
//! label 2 e
//! label 3 f
//! sc 1 2 2 2
//! sc 2 1 2 -2
//! ...
//! end
//! ```
//!
//! Indices are 1-based and `sc i j k c` means that `b_k` appears in
//! `b_i b_j` with coefficient `c`. Coefficients are written in lowest terms
//! (`p` or `p/q` with `q > 1`). The unit of an associative or Jordan algebra is
//! `unit i` when it is a basis vector and `unit i:c j:c ...` otherwise.
//! Everything after `#` on a line is a comment.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use supergrade_core::exact::linalg::zero_vector;
use supergrade_core::exact::Rational;
use supergrade_core::superalg::{
    validate_assoc, validate_jordan, validate_lie, Algebra, AssocSuperalgebra, JordanSuperalgebra, Kind,
    LieSuperalgebra, Parity, StructureTable, SuperSpace,
};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("line {line}: {message}")]
pub struct ParseError {
    pub line: usize,
    pub message: String,
}

fn err<T>(line: usize, message: impl Into<String>) -> Result<T, ParseError> {
    Err(ParseError { line, message: message.into() })
}

fn index(line: usize, tok: &str, dim: usize) -> Result<usize, ParseError> {
    match tok.parse::<usize>() {
        Ok(i) if (1..=dim).contains(&i) => Ok(i - 1),
        _ => err(line, format!("index {tok:?} is not in 1..={dim}")),
    }
}

fn coefficient(line: usize, tok: &str) -> Result<Rational, ParseError> {
    let c = Rational::parse_canonical(tok).or_else(|e| err(line, format!("coefficient {tok:?}: {e}")))?;
    if c.is_zero() {
        return err(line, "zero coefficients are omitted, not written");
    }
    Ok(c)
}

/// Lines with comments stripped, numbered from 1, blank lines dropped.
fn content_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines()
        .enumerate()
        .map(|(n, l)| (n + 1, l.split('#').next().unwrap_or("").trim()))
        .filter(|(_, l)| !l.is_empty())
}

/// Strict parse of an SCA document. The table is not validated against its
/// kind's axioms; see [`read_algebra`].
pub fn parse_sca(text: &str) -> Result<StructureTable, ParseError> {
    let mut lines = content_lines(text);
    let mut header = |want: &str| -> Result<(usize, Vec<&str>), ParseError> {
        let Some((n, l)) = lines.next() else {
            return err(0, format!("unexpected end of input, expected {want:?}"));
        };
        let toks: Vec<&str> = l.split_whitespace().collect();
        if toks[0] != want {
            return err(n, format!("expected {want:?}, found {:?}", toks[0]));
        }
        Ok((n, toks))
    };
    let (n, toks) = header("SCA/1")?;
    if toks.len() != 1 {
        return err(n, "trailing tokens after SCA/1");
    }
    let (n, toks) = header("kind")?;
    let kind = match toks.as_slice() {
        [_, k] => Kind::from_name(k).ok_or_else(|| ParseError { line: n, message: format!("unknown kind {k:?}") })?,
        _ => return err(n, "expected `kind lie|assoc|jordan`"),
    };
    let (n, toks) = header("dim")?;
    let dim = match toks.as_slice() {
        [_, d] => d.parse::<usize>().or_else(|_| err(n, format!("bad dimension {d:?}")))?,
        _ => return err(n, "expected `dim N`"),
    };
    let (n, toks) = header("parity")?;
    if toks.len() != dim + 1 {
        return err(n, format!("expected {dim} parities, found {}", toks.len() - 1));
    }
    let mut parities = Vec::with_capacity(dim);
    for t in &toks[1..] {
        parities.push(match *t {
            "0" => Parity::Even,
            "1" => Parity::Odd,
            _ => return err(n, format!("parity {t:?} is not 0 or 1")),
        });
    }
    let mut unit: Option<Vec<Rational>> = None;
    let mut labels: Vec<Option<String>> = vec![None; dim];
    let mut entries: BTreeMap<(usize, usize), BTreeMap<usize, Rational>> = BTreeMap::new();
    let mut ended = false;
    let mut last_line = n;
    for (n, l) in lines.by_ref() {
        last_line = n;
        let toks: Vec<&str> = l.split_whitespace().collect();
        match toks[0] {
            "end" if toks.len() == 1 => {
                ended = true;
                break;
            }
            "unit" => {
                if unit.is_some() {
                    return err(n, "duplicate unit line");
                }
                let mut u = zero_vector(dim);
                match toks.as_slice() {
                    [_, i] if !i.contains(':') => u[index(n, i, dim)?] = Rational::one(),
                    [_, terms @ ..] if !terms.is_empty() => {
                        for t in terms {
                            let Some((i, c)) = t.split_once(':') else {
                                return err(n, format!("unit term {t:?} is not `index:coefficient`"));
                            };
                            let i = index(n, i, dim)?;
                            if !u[i].is_zero() {
                                return err(n, format!("unit index {} repeated", i + 1));
                            }
                            u[i] = coefficient(n, c)?;
                        }
                    }
                    _ => return err(n, "expected `unit i` or `unit i:c ...`"),
                }
                unit = Some(u);
            }
            "label" => {
                let rest = l["label".len()..].trim_start();
                let (i, name) = rest.split_once(char::is_whitespace).unwrap_or((rest, ""));
                let i = index(n, i, dim)?;
                let name = name.trim();
                if name.is_empty() {
                    return err(n, "empty label");
                }
                if labels[i].replace(name.to_string()).is_some() {
                    return err(n, format!("basis vector {} labelled twice", i + 1));
                }
            }
            "sc" => {
                let [_, i, j, k, c] = toks.as_slice() else {
                    return err(n, "expected `sc i j k coefficient`");
                };
                let (i, j, k) = (index(n, i, dim)?, index(n, j, dim)?, index(n, k, dim)?);
                if parities[i] + parities[j] != parities[k] {
                    return err(n, format!("sc {} {} {} breaks the grading", i + 1, j + 1, k + 1));
                }
                let c = coefficient(n, c)?;
                if entries.entry((i, j)).or_default().insert(k, c).is_some() {
                    return err(n, format!("duplicate entry for ({}, {}, {})", i + 1, j + 1, k + 1));
                }
            }
            other => return err(n, format!("unexpected line starting with {other:?}")),
        }
    }
    if !ended {
        return err(last_line, "missing `end`");
    }
    if let Some((n, _)) = lines.next() {
        return err(n, "content after `end`");
    }
    let mut space = SuperSpace::new(parities);
    if !space.set_labels(labels) {
        return err(0, "labels are not distinct");
    }
    let mut t = StructureTable::new(space, kind);
    for ((i, j), row) in entries {
        t.set_product(i, j, row.into_iter().collect()).or_else(|e| err(0, e.to_string()))?;
    }
    t.set_unit(unit).or_else(|e| err(0, e.to_string()))?;
    Ok(t)
}

/// Canonical serialization: labels in index order, entries sorted by
/// `(i, j, k)`, coefficients in lowest terms.
pub fn write_sca(t: &StructureTable) -> String {
    let mut out = String::new();
    let d = t.dim();
    writeln!(out, "SCA/1").unwrap();
    writeln!(out, "kind {}", t.kind().name()).unwrap();
    writeln!(out, "dim {d}").unwrap();
    let bits: Vec<String> = (0..d).map(|i| t.parity(i).bit().to_string()).collect();
    if d == 0 {
        writeln!(out, "parity").unwrap();
    } else {
        writeln!(out, "parity {}", bits.join(" ")).unwrap();
    }
    if let Some(u) = t.unit() {
        let nz: Vec<(usize, &Rational)> = u.iter().enumerate().filter(|(_, c)| !c.is_zero()).collect();
        match nz.as_slice() {
            [(i, c)] if c.is_one() => writeln!(out, "unit {}", i + 1).unwrap(),
            _ => {
                let terms: Vec<String> = nz.iter().map(|(i, c)| format!("{}:{c}", i + 1)).collect();
                writeln!(out, "unit {}", terms.join(" ")).unwrap();
            }
        }
    }
    for i in 0..d {
        if let Some(l) = t.space().label(i) {
            writeln!(out, "label {} {l}", i + 1).unwrap();
        }
    }
    let mut entries: Vec<(usize, usize, usize, &Rational)> = t.entries().collect();
    entries.sort_by_key(|&(i, j, k, _)| (i, j, k));
    for (i, j, k, c) in entries {
        writeln!(out, "sc {} {} {} {c}", i + 1, j + 1, k + 1).unwrap();
    }
    writeln!(out, "end").unwrap();
    out
}

/// A parsed document after the validator of its kind has accepted it.
#[derive(Clone, Debug)]
pub enum Validated {
    Lie(LieSuperalgebra),
    Assoc(AssocSuperalgebra),
    Jordan(JordanSuperalgebra),
}

impl Validated {
    pub fn table(&self) -> &StructureTable {
        match self {
            Validated::Lie(l) => l.table(),
            Validated::Assoc(a) => a.table(),
            Validated::Jordan(j) => j.table(),
        }
    }
}

pub fn validate(t: StructureTable) -> Result<Validated, supergrade_core::Error> {
    Ok(match t.kind() {
        Kind::Lie => Validated::Lie(validate_lie(t)?),
        Kind::Assoc => Validated::Assoc(validate_assoc(t)?),
        Kind::Jordan => Validated::Jordan(validate_jordan(t)?),
    })
}
