//! Text formats: patterns, maps, family specs.
//!
//! Every format ignores blank lines and `#` comments, so a leading
//! `# rotint-v1` line is accepted everywhere.

use std::path::{Path, PathBuf};

use rotint_core::families::{FamilyKind, FamilySpec};
use rotint_core::poly::Polynomial;
use rotint_core::{PlMap, Rational, UnimodalMap};

pub const VERSION_LINE: &str = "# rotint-v1";

#[derive(Debug, thiserror::Error)]
pub enum FormatError {
    #[error("line {line}: {msg}")]
    Line { line: usize, msg: String },
    #[error("{0}")]
    Content(String),
    #[error("{path}: {source}")]
    Io { path: PathBuf, source: std::io::Error },
}

fn at(line: usize, msg: impl Into<String>) -> FormatError {
    FormatError::Line { line, msg: msg.into() }
}

/// Non-empty lines with comments removed, numbered from 1.
fn content_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines().enumerate().filter_map(|(i, l)| {
        let l = l.split('#').next().unwrap_or("").trim();
        (!l.is_empty()).then_some((i + 1, l))
    })
}

pub fn read_file(path: &Path) -> Result<String, FormatError> {
    std::fs::read_to_string(path).map_err(|source| FormatError::Io { path: path.to_path_buf(), source })
}

/// One line of 1-based images.
pub fn parse_pattern(text: &str) -> Result<Vec<usize>, FormatError> {
    let mut lines = content_lines(text);
    let (n, line) = lines.next().ok_or_else(|| FormatError::Content("empty pattern file".into()))?;
    if let Some((m, _)) = lines.next() {
        return Err(at(m, "a pattern file holds a single line"));
    }
    line.split_whitespace()
        .map(|t| t.parse::<usize>().map_err(|_| at(n, format!("not a positive integer: {t:?}"))))
        .collect()
}

pub fn write_pattern(images: &[usize]) -> String {
    let body: Vec<String> = images.iter().map(|i| i.to_string()).collect();
    format!("{VERSION_LINE}\n{}\n", body.join(" "))
}

fn rational(line: usize, t: &str) -> Result<Rational, FormatError> {
    t.parse().map_err(|_| at(line, format!("not a rational: {t:?}")))
}

/// Map files hold either `x y` breakpoints on `[0, 1]` or a single
/// `poly c0 c1 ...` line of polynomial coefficients, lowest degree first.
pub fn parse_map(text: &str) -> Result<UnimodalMap, FormatError> {
    let lines: Vec<(usize, &str)> = content_lines(text).collect();
    if let Some((n, first)) = lines.first() {
        if let Some(rest) = first.strip_prefix("poly") {
            if lines.len() > 1 {
                return Err(at(lines[1].0, "a polynomial map file holds a single line"));
            }
            let coeffs = rest.split_whitespace().map(|t| rational(*n, t)).collect::<Result<Vec<_>, _>>()?;
            return UnimodalMap::polynomial(Polynomial::new(coeffs)).map_err(|e| at(*n, e.to_string()));
        }
    }
    let map = parse_pl_map(text)?;
    UnimodalMap::piecewise_linear(map).map_err(|e| FormatError::Content(e.to_string()))
}

/// `x y` lines with strictly increasing `x` from `0` to `1`.
pub fn parse_pl_map(text: &str) -> Result<PlMap, FormatError> {
    let mut pts = Vec::new();
    for (n, line) in content_lines(text) {
        let toks: Vec<&str> = line.split_whitespace().collect();
        if toks.len() != 2 {
            return Err(at(n, "expected `x y`"));
        }
        let (x, y) = (rational(n, toks[0])?, rational(n, toks[1])?);
        if let Some((px, _)) = pts.last() {
            if &x <= px {
                return Err(at(n, "x must increase strictly"));
            }
        }
        pts.push((x, y));
    }
    match (pts.first(), pts.last()) {
        (Some((x0, _)), Some((x1, _))) if x0.is_zero() && x1 == &Rational::one() && pts.len() >= 2 => {}
        _ => return Err(FormatError::Content("breakpoints must run from x = 0 to x = 1".into())),
    }
    PlMap::new(pts).map_err(|e| FormatError::Content(e.to_string()))
}

pub fn write_pl_map(map: &PlMap) -> String {
    let mut out = String::from(VERSION_LINE);
    out.push('\n');
    for (x, y) in map.points() {
        out.push_str(&format!("{x} {y}\n"));
    }
    out
}

/// `kind=...`, `param lo hi steps`, and `base=`/`target=` map paths
/// resolved against `dir`.
pub fn parse_family(text: &str, dir: &Path) -> Result<FamilySpec, FormatError> {
    let mut kind = None;
    let mut param = None;
    let mut base = None;
    let mut target = None;
    for (n, line) in content_lines(text) {
        let (key, value) = match line.split_once('=') {
            Some((k, v)) => (k.trim(), v.trim()),
            None => line.split_once(char::is_whitespace).map(|(k, v)| (k.trim(), v.trim())).unwrap_or((line, "")),
        };
        match key {
            "kind" => kind = Some((n, value.to_string())),
            "param" => {
                let toks: Vec<&str> = value.split_whitespace().collect();
                if toks.len() != 3 {
                    return Err(at(n, "expected `param lo hi steps`"));
                }
                let steps = toks[2].parse::<usize>().map_err(|_| at(n, "steps must be a positive integer"))?;
                param = Some((n, rational(n, toks[0])?, rational(n, toks[1])?, steps));
            }
            "base" => base = Some((n, dir.join(value))),
            "target" => target = Some((n, dir.join(value))),
            other => return Err(at(n, format!("unknown key {other:?}"))),
        }
    }
    let (kn, kind) = kind.ok_or_else(|| FormatError::Content("missing `kind=`".into()))?;
    let (pn, lo, hi, steps) = param.ok_or_else(|| FormatError::Content("missing `param lo hi steps`".into()))?;
    let load = |entry: Option<(usize, PathBuf)>, what: &str| -> Result<String, FormatError> {
        let (_, path) = entry.ok_or_else(|| at(kn, format!("kind {kind} needs `{what}=`")))?;
        read_file(&path)
    };
    let kind = match kind.as_str() {
        "quadratic" => FamilyKind::Quadratic,
        "scaled" => FamilyKind::Scaled(parse_map(&load(base, "base")?)?),
        "pl-interp" => FamilyKind::Interpolated {
            base: parse_pl_map(&load(base, "base")?)?,
            target: parse_pl_map(&load(target, "target")?)?,
        },
        other => return Err(at(kn, format!("unknown family kind {other:?}"))),
    };
    FamilySpec::new(kind, lo, hi, steps).map_err(|e| at(pn, e.to_string()))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn pattern_round_trip() {
        let text = write_pattern(&[3, 5, 4, 2, 1]);
        assert!(text.starts_with(VERSION_LINE));
        assert_eq!(parse_pattern(&text).unwrap(), vec![3, 5, 4, 2, 1]);
        assert_eq!(parse_pattern("2 3 1 # cycle\n\n").unwrap(), vec![2, 3, 1]);
        assert!(parse_pattern("2 x 1").is_err());
        assert!(parse_pattern("2 1\n1 2").is_err());
        assert!(parse_pattern("# nothing").is_err());
    }

    #[test]
    fn map_round_trip() {
        let text = "# rotint-v1\n0 0\n1/2 1\n1 0\n";
        let m = parse_pl_map(text).unwrap();
        assert_eq!(parse_pl_map(&write_pl_map(&m)).unwrap(), m);
        assert!(parse_pl_map("0 0\n1/2 1\n1/2 0\n1 0").is_err());
        assert!(parse_pl_map("1/4 0\n1 0").is_err());
        assert!(parse_pl_map("0 0 0\n1 0").is_err());
        assert!(matches!(parse_pl_map("0 0\n1/0 1"), Err(FormatError::Line { line: 2, .. })));
    }

    #[test]
    fn polynomial_maps() {
        let m = parse_map("poly 0 4 -4").unwrap();
        assert!(m.as_polynomial().is_some());
        assert!(parse_map("poly 0 4 -4\n0 0").is_err());
        assert!(parse_map("poly 0 5 -5").is_err());
    }

    #[test]
    fn family_files() {
        let dir = tempfile::tempdir().unwrap();
        std::fs::write(dir.path().join("tent.map"), "0 0\n1/2 1\n1 0\n").unwrap();
        let spec = parse_family("kind=quadratic\nparam 7/2 4 3\n", dir.path()).unwrap();
        assert_eq!(spec.grid().len(), 3);
        let spec = parse_family("# rotint-v1\nkind = scaled\nbase = tent.map\nparam 3/4 1 5", dir.path()).unwrap();
        assert!(matches!(spec.kind, FamilyKind::Scaled(_)));
        assert!(parse_family("kind=scaled\nparam 1 2 3", dir.path()).is_err());
        assert!(parse_family("kind=cubic\nparam 1 2 3", dir.path()).is_err());
        assert!(parse_family("kind=quadratic\nparam 4 3 3", dir.path()).is_err());
    }
}
