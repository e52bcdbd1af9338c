//! Line-oriented text formats for algebras and linear maps.
//!
//! Algebra:
//!
//! ```text
//! field GF 3
//! dim 3
//! basis 1 v1 v2
//! unit 1 0 0
//! family spin
//! sc 1 1 1 1
//! ```
//!
//! `sc i j k c` (1-based) says `b_i b_j` has coefficient `c` on `b_k`.
//! Omitted constants are zero. The optional `family` line (`spin`, or
//! `albert mu m1 m2 m3 gamma g1 g2 g3`) lets a reader rebuild the metadata
//! that norms and Peirce frames need; the rebuilt constants must match the
//! file.
//!
//! Map: `map n` then `k j c` lines, coefficient `c` of `b_k` in `D(b_j)`.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use crate::algebra::{AlgebraTable, Family, LinearMap};
use crate::constructions::{albert_type, spin_factor, CdParams, GammaParams};
use crate::error::{Error, Result};
use crate::exactmath::{FieldSpec, Matrix, Scalar};

fn perr(line: usize, message: impl Into<String>) -> Error {
    Error::Parse { line, message: message.into() }
}

pub fn write_field(f: FieldSpec) -> String {
    match f.modulus() {
        None => "Q".into(),
        Some(p) => format!("GF {p}"),
    }
}

fn join(v: &[Scalar]) -> String {
    v.iter().map(ToString::to_string).collect::<Vec<_>>().join(" ")
}

pub fn write_algebra(t: &AlgebraTable) -> String {
    let mut s = String::new();
    writeln!(s, "field {}", write_field(t.field())).unwrap();
    writeln!(s, "dim {}", t.dim()).unwrap();
    if let Some(l) = t.labels() {
        writeln!(s, "basis {}", l.join(" ")).unwrap();
    }
    if let Some(u) = t.unit() {
        writeln!(s, "unit {}", join(u.coords())).unwrap();
    }
    match t.family() {
        Family::Generic => {}
        Family::Spin { .. } => writeln!(s, "family spin").unwrap(),
        Family::Albert(a) => {
            writeln!(s, "family albert mu {} gamma {}", join(a.cd.mu()), join(a.gamma.gamma())).unwrap()
        }
    }
    for (i, j, k, c) in t.constants() {
        writeln!(s, "sc {} {} {} {}", i + 1, j + 1, k + 1, c).unwrap();
    }
    s
}

fn parse_index(tok: &str, dim: usize, line: usize) -> Result<usize> {
    let i: usize = tok.parse().map_err(|_| perr(line, format!("bad index `{tok}`")))?;
    if i == 0 || i > dim {
        return Err(perr(line, format!("index {i} outside 1..{dim}")));
    }
    Ok(i - 1)
}

fn parse_scalars(f: FieldSpec, toks: &[&str], line: usize) -> Result<Vec<Scalar>> {
    toks.iter().map(|t| f.parse(t).map_err(|e| perr(line, e.to_string()))).collect()
}

/// Parses the header lines shared by every reader: returns the field and
/// the remaining numbered lines.
fn numbered(text: &str) -> Vec<(usize, Vec<&str>)> {
    text.lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.split('#').next().unwrap_or("").split_whitespace().collect::<Vec<_>>()))
        .filter(|(_, toks)| !toks.is_empty())
        .collect()
}

pub fn read_algebra(text: &str) -> Result<AlgebraTable> {
    let lines = numbered(text);
    let mut field = None;
    let mut dim = None;
    for (n, toks) in &lines {
        match toks[0] {
            "field" => {
                if field.is_some() {
                    return Err(perr(*n, "duplicate field line"));
                }
                let spec = toks[1..].join(" ");
                field = Some(spec.parse::<FieldSpec>().map_err(|e| perr(*n, e.to_string()))?);
            }
            "dim" => {
                if dim.is_some() || toks.len() != 2 {
                    return Err(perr(*n, "expected a single `dim n` line"));
                }
                let d: usize = toks[1].parse().map_err(|_| perr(*n, "bad dimension"))?;
                if d == 0 {
                    return Err(perr(*n, "dimension must be positive"));
                }
                dim = Some(d);
            }
            _ => {}
        }
    }
    let field = field.ok_or_else(|| perr(0, "missing field line"))?;
    let dim = dim.ok_or_else(|| perr(0, "missing dim line"))?;

    let mut labels = None;
    let mut unit = None;
    let mut family: Option<(usize, Vec<&str>)> = None;
    let mut constants = BTreeMap::new();
    for (n, toks) in &lines {
        match toks[0] {
            "field" | "dim" => {}
            "basis" => {
                if labels.is_some() || toks.len() != dim + 1 {
                    return Err(perr(*n, format!("expected one basis line with {dim} names")));
                }
                labels = Some(toks[1..].iter().map(|s| s.to_string()).collect::<Vec<_>>());
            }
            "unit" => {
                if unit.is_some() || toks.len() != dim + 1 {
                    return Err(perr(*n, format!("expected one unit line with {dim} scalars")));
                }
                unit = Some(parse_scalars(field, &toks[1..], *n)?);
            }
            "family" => {
                if family.is_some() {
                    return Err(perr(*n, "duplicate family line"));
                }
                family = Some((*n, toks[1..].to_vec()));
            }
            "sc" => {
                if toks.len() != 5 {
                    return Err(perr(*n, "expected `sc i j k c`"));
                }
                let key = (parse_index(toks[1], dim, *n)?, parse_index(toks[2], dim, *n)?, parse_index(toks[3], dim, *n)?);
                let c = field.parse(toks[4]).map_err(|e| perr(*n, e.to_string()))?;
                if constants.insert(key, c).is_some() {
                    return Err(perr(*n, "duplicate structure constant"));
                }
            }
            other => return Err(perr(*n, format!("unknown keyword `{other}`"))),
        }
    }
    let mut t = AlgebraTable::from_constants(field, dim, constants.into_iter().map(|((i, j, k), c)| (i, j, k, c)))?;
    if let Some((n, toks)) = family {
        let rebuilt = rebuild_family(field, &t, &toks, n)?;
        if !rebuilt.same_constants(&t) {
            return Err(perr(n, "structure constants do not match the declared family"));
        }
        t = rebuilt;
    }
    // the file's own labels and unit win over the rebuilt ones
    if let Some(l) = labels {
        t = t.with_labels(l)?;
    }
    if let Some(u) = unit {
        t = t.with_unit(u).map_err(|e| perr(0, e.to_string()))?;
    }
    Ok(t)
}

fn rebuild_family(field: FieldSpec, t: &AlgebraTable, toks: &[&str], line: usize) -> Result<AlgebraTable> {
    match toks {
        ["spin"] => {
            let n = t.dim() - 1;
            let mut g = Matrix::zeros(field, n, n);
            for i in 0..n {
                for j in 0..n {
                    g.set(i, j, t.constant(i + 1, j + 1, 0));
                }
            }
            spin_factor(&g).map_err(|e| perr(line, e.to_string()))
        }
        ["albert", "mu", m1, m2, m3, "gamma", g1, g2, g3] => {
            let mu = parse_scalars(field, &[m1, m2, m3], line)?;
            let gamma = parse_scalars(field, &[g1, g2, g3], line)?;
            let cd = CdParams::new([mu[0].clone(), mu[1].clone(), mu[2].clone()]).map_err(|e| perr(line, e.to_string()))?;
            let gp = GammaParams::new([gamma[0].clone(), gamma[1].clone(), gamma[2].clone()])
                .map_err(|e| perr(line, e.to_string()))?;
            albert_type(field, &cd, &gp).map_err(|e| perr(line, e.to_string()))
        }
        _ => Err(perr(line, "expected `family spin` or `family albert mu a b c gamma x y z`")),
    }
}

pub fn write_map(d: &LinearMap) -> String {
    let mut s = format!("map {}\n", d.dim());
    for j in 0..d.dim() {
        for k in 0..d.dim() {
            let c = d.matrix().get(k, j);
            if !c.is_zero() {
                writeln!(s, "{} {} {}", k + 1, j + 1, c).unwrap();
            }
        }
    }
    s
}

pub fn read_map(text: &str, field: FieldSpec) -> Result<LinearMap> {
    let lines = numbered(text);
    let Some((hn, header)) = lines.first() else {
        return Err(perr(0, "empty map file"));
    };
    if header.len() != 2 || header[0] != "map" {
        return Err(perr(*hn, "expected `map n` header"));
    }
    let n: usize = header[1].parse().map_err(|_| perr(*hn, "bad map dimension"))?;
    let mut m = Matrix::zeros(field, n, n);
    let mut seen = std::collections::HashSet::new();
    for (ln, toks) in &lines[1..] {
        if toks.len() != 3 {
            return Err(perr(*ln, "expected `k j c`"));
        }
        let k = parse_index(toks[0], n, *ln)?;
        let j = parse_index(toks[1], n, *ln)?;
        if !seen.insert((k, j)) {
            return Err(perr(*ln, "duplicate map entry"));
        }
        m.set(k, j, field.parse(toks[2]).map_err(|e| perr(*ln, e.to_string()))?);
    }
    LinearMap::new(m)
}

/// Coordinates separated by commas and/or whitespace.
pub fn parse_element(text: &str, field: FieldSpec, dim: usize) -> Result<Vec<Scalar>> {
    let toks: Vec<&str> = text.split(|c: char| c == ',' || c.is_whitespace()).filter(|s| !s.is_empty()).collect();
    if toks.len() != dim {
        return Err(perr(0, format!("element has {} coordinates, algebra has dimension {dim}", toks.len())));
    }
    parse_scalars(field, &toks, 0)
}

/// Comma-separated scalars, e.g. a diagonal `1,1,2`.
pub fn parse_list(text: &str, field: FieldSpec) -> Result<Vec<Scalar>> {
    let toks: Vec<&str> = text.split(',').map(str::trim).filter(|s| !s.is_empty()).collect();
    if toks.is_empty() {
        return Err(perr(0, "empty list"));
    }
    parse_scalars(field, &toks, 0)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::{field_algebra, matrix_algebra};

    #[test]
    fn spin_round_trip() {
        let f = FieldSpec::prime(3).unwrap();
        let j = spin_factor(&Matrix::identity(f, 2)).unwrap();
        let text = write_algebra(&j);
        assert_eq!(
            text,
            "field GF 3\ndim 3\nbasis 1 v1 v2\nunit 1 0 0\nfamily spin\nsc 1 1 1 1\nsc 1 2 2 1\nsc 1 3 3 1\n\
             sc 2 1 2 1\nsc 2 2 1 1\nsc 3 1 3 1\nsc 3 3 1 1\n"
        );
        let back = read_algebra(&text).unwrap();
        assert_eq!(back, j);
        assert!(back.spin_form().is_some());
        assert_eq!(write_algebra(&back), text);
    }

    #[test]
    fn reader_accepts_any_order_and_rejects_duplicates() {
        let text = "sc 1 1 1 1/2\ndim 1\nfield Q\n";
        let t = read_algebra(text).unwrap();
        assert_eq!(t.constant(0, 0, 0), FieldSpec::Rationals.from_ratio(1, 2).unwrap());
        assert!(matches!(read_algebra("field Q\ndim 1\nsc 1 1 1 1\nsc 1 1 1 2\n"), Err(Error::Parse { line: 4, .. })));
        assert!(matches!(read_algebra("field Q\ndim 1\nsc 1 2 1 1\n"), Err(Error::Parse { .. })));
        assert!(matches!(read_algebra("dim 1\n"), Err(Error::Parse { .. })));
        assert!(matches!(read_algebra("field GF 4\ndim 1\n"), Err(Error::Parse { .. })));
        assert!(matches!(read_algebra("field Q\ndim 1\nfamily spin\nsc 1 1 1 2\n"), Err(Error::Parse { .. })));
    }

    #[test]
    fn map_round_trip() {
        let f = FieldSpec::prime(5).unwrap();
        let d = LinearMap::new(Matrix::from_i64(f, &[&[0, 0, 0], &[0, 0, 4], &[0, 1, 0]])).unwrap();
        let text = write_map(&d);
        assert_eq!(text, "map 3\n3 2 1\n2 3 4\n");
        assert_eq!(read_map(&text, f).unwrap(), d);
        assert!(read_map("map 2\n1 1 1\n1 1 2\n", f).is_err());
    }

    #[test]
    fn matrix_algebra_round_trip() {
        let f = FieldSpec::prime(3).unwrap();
        let m2 = matrix_algebra(&field_algebra(f), 2).unwrap();
        let text = write_algebra(&m2);
        assert_eq!(text.lines().filter(|l| l.starts_with("sc")).count(), 8);
        assert_eq!(write_algebra(&read_algebra(&text).unwrap()), text);
    }

    #[test]
    fn elements() {
        let q = FieldSpec::Rationals;
        assert_eq!(parse_element("1, -1/2 0", q, 3).unwrap()[1], q.from_ratio(-1, 2).unwrap());
        assert!(parse_element("1,2", q, 3).is_err());
    }
}
