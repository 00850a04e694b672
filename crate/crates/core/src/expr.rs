//! Textual root expressions such as `e1+e3`, `(e1-e2-e3+e4)/2` or `3a1+2a2`.
//!
//! `e<k>` terms are coordinates of the Euclidean realization and `a<k>` terms
//! are fundamental roots. Coefficients are integers, optionally followed by
//! `/2`; a whole expression may be wrapped as `(...)/2`. Whitespace is ignored.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::rootsys::{Family, Root, RootSystem};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Basis {
    Euclidean,
    Fundamental,
}

/// A parsed linear combination with doubled coefficients, not yet tied to a
/// root system.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RootExpr {
    basis: Basis,
    /// `(k, 2 * coefficient)` with `k` one-based.
    terms: Vec<(usize, i32)>,
}

fn parse_err(expr: &str, reason: impl Into<String>) -> Error {
    Error::Parse {
        expr: expr.to_string(),
        reason: reason.into(),
    }
}

fn take_digits(s: &[u8], pos: &mut usize) -> Option<u32> {
    let start = *pos;
    while *pos < s.len() && s[*pos].is_ascii_digit() {
        *pos += 1;
    }
    std::str::from_utf8(&s[start..*pos]).ok()?.parse().ok()
}

impl RootExpr {
    pub fn basis(&self) -> Basis {
        self.basis
    }

    /// Resolves to a catalogued positive root of `rs`.
    pub fn resolve(&self, rs: &RootSystem) -> Result<Root> {
        let text = self.to_string();
        let dim = match self.basis {
            Basis::Euclidean => rs.ambient_dim(),
            Basis::Fundamental => rs.rank(),
        };
        let mut v = vec![0i32; dim];
        for &(k, c) in &self.terms {
            if k == 0 || k > dim {
                return Err(parse_err(
                    &text,
                    format!("index {k} out of range 1..={dim} for {}", rs.id()),
                ));
            }
            v[k - 1] += c;
        }
        let root = match self.basis {
            Basis::Euclidean => rs.is_root(&v),
            Basis::Fundamental => {
                if v.iter().any(|c| c % 2 != 0) {
                    return Err(parse_err(
                        &text,
                        "fundamental coefficients must be integers",
                    ));
                }
                let f: Vec<i32> = v.iter().map(|c| c / 2).collect();
                rs.positives().find(|&r| rs.fcoords(r) == f)
            }
        };
        match root {
            Some(r) if r.is_positive() => Ok(r),
            Some(_) => Err(parse_err(
                &text,
                format!("not a positive root of {}", rs.id()),
            )),
            None => Err(parse_err(&text, format!("not a root of {}", rs.id()))),
        }
    }

    /// The Euclidean form of `r`, using `(...)/2` when some coordinate is odd.
    pub fn euclidean(rs: &RootSystem, r: Root) -> RootExpr {
        let terms = rs
            .dcoords(r)
            .into_iter()
            .enumerate()
            .filter(|(_, c)| *c != 0)
            .map(|(i, c)| (i + 1, c))
            .collect();
        RootExpr {
            basis: Basis::Euclidean,
            terms,
        }
    }

    pub fn fundamental(rs: &RootSystem, r: Root) -> RootExpr {
        let terms = rs
            .fcoords(r)
            .into_iter()
            .enumerate()
            .filter(|(_, c)| *c != 0)
            .map(|(i, c)| (i + 1, 2 * c))
            .collect();
        RootExpr {
            basis: Basis::Fundamental,
            terms,
        }
    }
}

impl FromStr for RootExpr {
    type Err = Error;

    fn from_str(input: &str) -> Result<Self> {
        let s: String = input.chars().filter(|c| !c.is_whitespace()).collect();
        if s.is_empty() {
            return Err(parse_err(input, "empty expression"));
        }
        let (body, halved) = match s.strip_prefix('(').and_then(|t| t.strip_suffix(")/2")) {
            Some(inner) => (inner.to_string(), true),
            None => (s.clone(), false),
        };
        let b = body.as_bytes();
        let mut pos = 0;
        let mut terms = Vec::new();
        let mut basis = None;
        while pos < b.len() {
            let mut sign = 1;
            if b[pos] == b'+' || b[pos] == b'-' {
                if b[pos] == b'-' {
                    sign = -1;
                }
                pos += 1;
            } else if pos > 0 {
                return Err(parse_err(
                    input,
                    format!("expected `+` or `-` at offset {pos}"),
                ));
            }
            let coeff = take_digits(b, &mut pos).unwrap_or(1) as i32;
            let mut halves = 0;
            if b.get(pos) == Some(&b'/') {
                pos += 1;
                if take_digits(b, &mut pos) != Some(2) {
                    return Err(parse_err(input, "only `/2` denominators are allowed"));
                }
                halves += 1;
            }
            let this = match b.get(pos) {
                Some(b'e') => Basis::Euclidean,
                Some(b'a') => Basis::Fundamental,
                _ => {
                    return Err(parse_err(
                        input,
                        format!("expected `e<k>` or `a<k>` at offset {pos}"),
                    ))
                }
            };
            pos += 1;
            if *basis.get_or_insert(this) != this {
                return Err(parse_err(input, "cannot mix `e` and `a` terms"));
            }
            let k = take_digits(b, &mut pos).ok_or_else(|| parse_err(input, "missing index"))?;
            if b.get(pos) == Some(&b'/') {
                pos += 1;
                if take_digits(b, &mut pos) != Some(2) {
                    return Err(parse_err(input, "only `/2` denominators are allowed"));
                }
                halves += 1;
            }
            if halves + halved as i32 > 1 {
                return Err(parse_err(input, "coefficient halved twice"));
            }
            let doubled = if halves + halved as i32 == 1 {
                coeff
            } else {
                2 * coeff
            };
            terms.push((k as usize, sign * doubled));
        }
        Ok(RootExpr {
            basis: basis.ok_or_else(|| parse_err(input, "no terms"))?,
            terms,
        })
    }
}

impl fmt::Display for RootExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let letter = match self.basis {
            Basis::Euclidean => 'e',
            Basis::Fundamental => 'a',
        };
        let halved = self.terms.iter().any(|(_, c)| c % 2 != 0);
        let mut body = String::new();
        for (i, &(k, c)) in self.terms.iter().enumerate() {
            let c = if halved { c } else { c / 2 };
            if c < 0 {
                body.push('-');
            } else if i > 0 {
                body.push('+');
            }
            if c.abs() != 1 {
                body.push_str(&c.abs().to_string());
            }
            body.push(letter);
            body.push_str(&k.to_string());
        }
        if body.is_empty() {
            body.push('0');
        }
        if halved {
            write!(f, "({body})/2")
        } else {
            f.write_str(&body)
        }
    }
}

pub fn parse_root(rs: &RootSystem, text: &str) -> Result<Root> {
    text.parse::<RootExpr>()?.resolve(rs)
}

/// Comma-separated list of root expressions.
pub fn parse_roots(rs: &RootSystem, text: &str) -> Result<Vec<Root>> {
    text.split(',')
        .filter(|t| !t.trim().is_empty())
        .map(|t| parse_root(rs, t))
        .collect()
}

pub fn format_root(rs: &RootSystem, r: Root) -> String {
    RootExpr::euclidean(rs, r).to_string()
}

/// Fundamental coordinates for G2, whose Euclidean realization is rarely
/// the one people write; Euclidean coordinates everywhere else.
pub fn display_root(rs: &RootSystem, r: Root) -> String {
    match rs.id().family {
        Family::G => RootExpr::fundamental(rs, r).to_string(),
        _ => format_root(rs, r),
    }
}

/// Expands every `±` into both signs: `e1±e4` gives `e1+e4` and `e1-e4`.
pub fn expand_pm(text: &str) -> Vec<String> {
    match text.find('±') {
        None => vec![text.to_string()],
        Some(i) => {
            let rest = &text[i + '±'.len_utf8()..];
            ['+', '-']
                .iter()
                .flat_map(|s| expand_pm(&format!("{}{}{}", &text[..i], s, rest)))
                .collect()
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sys(s: &str) -> RootSystem {
        RootSystem::new(s.parse().unwrap())
    }

    #[test]
    fn parses_euclidean_and_fundamental() {
        let f4 = sys("F4");
        let r = parse_root(&f4, "(e1-e2-e3+e4)/2").unwrap();
        assert_eq!(f4.dcoords(r), vec![1, -1, -1, 1]);
        assert_eq!(parse_root(&f4, "e1/2 - e2/2 - e3/2 + e4/2").unwrap(), r);
        let g2 = sys("G2");
        let r = parse_root(&g2, "3a1 + 2a2").unwrap();
        assert_eq!(g2.fcoords(r), vec![3, 2]);
        assert_eq!(RootExpr::fundamental(&g2, r).to_string(), "3a1+2a2");
    }

    #[test]
    fn rejects_bad_input() {
        let b3 = sys("B3");
        for bad in [
            "",
            "e1+",
            "x1",
            "e1+a2",
            "e4",
            "e1+e2+e3",
            "-e1",
            "e1/3",
            "(e1/2+e2)/2",
        ] {
            assert!(
                matches!(parse_root(&b3, bad), Err(Error::Parse { .. })),
                "{bad}"
            );
        }
    }

    #[test]
    fn display_round_trip() {
        for id in ["B3", "F4", "G2", "E6", "C2"] {
            let rs = sys(id);
            for r in rs.positives() {
                let text = format_root(&rs, r);
                assert_eq!(parse_root(&rs, &text).unwrap(), r, "{id} {text}");
                assert_eq!(parse_root(&rs, &display_root(&rs, r)).unwrap(), r);
            }
        }
    }

    #[test]
    fn pm_expansion() {
        assert_eq!(expand_pm("e1±e4"), vec!["e1+e4", "e1-e4"]);
        assert_eq!(expand_pm("(e1-e2±e3±e4)/2").len(), 4);
        assert_eq!(expand_pm("e2"), vec!["e2"]);
    }
}
