//! The LSA structure-constants text format.
//!
//! ```text
//! # comments run to end of line
//! dims <m> <n>
//! bracket <i> <j> <k> <num>/<den>
//! ```
//!
//! Only entries with `i <= j` are written, and `i == j` only for odd `i`. The
//! loader fills `c[j][i][k]` by super skew-symmetry and validates the result.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use num_traits::Zero;

use crate::algebra::{LieSuperalgebra, ValidationReport};
use crate::error::{Error, Result};
use crate::rational::{self, Rational};
use crate::violation::{Identity, Violation};

pub fn load(text: &str) -> Result<LieSuperalgebra> {
    load_named(text, "lsa")
}

pub fn load_named(text: &str, name: &str) -> Result<LieSuperalgebra> {
    let mut dims: Option<(usize, usize)> = None;
    let mut entries: BTreeMap<(usize, usize, usize), Rational> = BTreeMap::new();

    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        let content = raw.split('#').next().unwrap_or("").trim();
        if content.is_empty() {
            continue;
        }
        let tokens: Vec<&str> = content.split_whitespace().collect();
        let parse_err = |message: String| Error::Parse { line, message };
        let index = |tok: &str| -> Result<usize> {
            tok.parse()
                .map_err(|_| parse_err(format!("`{tok}` is not a nonnegative integer")))
        };
        match (dims, tokens.as_slice()) {
            (None, ["dims", m, n]) => dims = Some((index(m)?, index(n)?)),
            (None, _) => return Err(parse_err("expected `dims <m> <n>` header".into())),
            (Some(_), ["dims", ..]) => return Err(parse_err("duplicate `dims` header".into())),
            (Some((m, n)), ["bracket", i, j, k, value]) => {
                let (i, j, k) = (index(i)?, index(j)?, index(k)?);
                let dim = m + n;
                if i >= dim || j >= dim || k >= dim {
                    return Err(parse_err(format!("index out of range for dimension {dim}")));
                }
                let value = rational::parse(value)
                    .ok_or_else(|| parse_err(format!("`{value}` is not a rational")))?;
                if i > j {
                    return Err(Error::Format {
                        line,
                        message: format!("entry ({i},{j},{k}) has i > j; write it as ({j},{i},{k})"),
                    });
                }
                if i == j && i < m && !value.is_zero() {
                    // [x, x] = -[x, x] for even x
                    return Err(Error::Invalid(ValidationReport {
                        violations: vec![Violation {
                            identity: Identity::SkewSymmetry,
                            indices: vec![i, i, k],
                            component: k,
                            lhs: value.clone(),
                            rhs: -value,
                        }],
                    }));
                }
                if entries.insert((i, j, k), value).is_some() {
                    return Err(Error::Format {
                        line,
                        message: format!("duplicate entry ({i},{j},{k})"),
                    });
                }
            }
            (Some(_), _) => {
                return Err(parse_err(
                    "expected `bracket <i> <j> <k> <value>`".into(),
                ))
            }
        }
    }

    let (m, n) = dims.ok_or(Error::Parse {
        line: text.lines().count().max(1),
        message: "missing `dims <m> <n>` header".into(),
    })?;
    let dim = m + n;
    let mut constants = rational::zeros(dim * dim * dim);
    let parity_bit = |i: usize| usize::from(i >= m);
    for ((i, j, k), value) in entries {
        let sign = if parity_bit(i) * parity_bit(j) == 1 { 1 } else { -1 };
        constants[(j * dim + i) * dim + k] = &value * rational::int(sign);
        constants[(i * dim + j) * dim + k] = value;
    }
    LieSuperalgebra::from_constants(name, m, n, constants)?.validated()
}

/// Canonical text form: header, then nonzero `i <= j` entries in index order.
pub fn dump(algebra: &LieSuperalgebra) -> String {
    let mut out = String::new();
    let n = algebra.dim();
    writeln!(out, "dims {} {}", algebra.dim_even(), algebra.dim_odd()).unwrap();
    for i in 0..n {
        for j in i..n {
            if i == j && !algebra.parity(i).is_odd() {
                continue;
            }
            for (k, c) in algebra.basis_bracket(i, j).iter().enumerate() {
                if !c.is_zero() {
                    writeln!(out, "bracket {i} {j} {k} {c}").unwrap();
                }
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::{make, verified_catalog, AlgebraSpec};

    #[test]
    fn round_trip_catalog() {
        for spec in verified_catalog() {
            let l = make(&spec).unwrap();
            let text = dump(&l);
            let back = load(&text).unwrap();
            assert_eq!(back.constants(), l.constants());
            assert_eq!(dump(&back), text);
        }
    }

    #[test]
    fn sl2_text() {
        let text = dump(&make(&AlgebraSpec::Sl2).unwrap());
        assert_eq!(
            text,
            "dims 3 0\nbracket 0 1 1 2\nbracket 0 2 2 -2\nbracket 1 2 0 1\n"
        );
    }

    #[test]
    fn comments_and_shorthand() {
        let text = "# sl2\n dims 3 0  # header\n\nbracket 0 1 1 4/2\nbracket 0 2 2 -2/1\nbracket 1 2 0 1\n";
        let l = load(text).unwrap();
        assert_eq!(l.constants(), make(&AlgebraSpec::Sl2).unwrap().constants());
    }

    #[test]
    fn even_square_rejected_as_skew_violation() {
        let err = load("dims 1 0\nbracket 0 0 0 1\n").unwrap_err();
        match err {
            Error::Invalid(report) => assert!(report.has(Identity::SkewSymmetry)),
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn grading_violation_names_indices() {
        let err = load("dims 1 1\nbracket 0 1 0 1\n").unwrap_err();
        match err {
            Error::Invalid(report) => {
                let v = report.violations.iter().find(|v| v.identity == Identity::Grading).unwrap();
                assert_eq!(v.indices, vec![0, 1, 0]);
            }
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn descending_entry_is_format_error() {
        let err = load("dims 3 0\nbracket 1 0 1 -2\n").unwrap_err();
        assert!(matches!(err, Error::Format { line: 2, .. }));
    }

    #[test]
    fn parse_errors_carry_line_numbers() {
        assert!(matches!(load("bracket 0 1 1 2\n"), Err(Error::Parse { line: 1, .. })));
        assert!(matches!(load("dims 2 0\nbracket 0 1 5 1\n"), Err(Error::Parse { line: 2, .. })));
        assert!(matches!(load("dims 2 0\n\nbracket 0 1 1 x\n"), Err(Error::Parse { line: 3, .. })));
        assert!(matches!(load("# empty\n"), Err(Error::Parse { .. })));
    }

    #[test]
    fn odd_square_allowed() {
        // abelian-ish (1|1) with [x, x] = 2h and h central: valid
        let l = load("dims 1 1\nbracket 1 1 0 2\n").unwrap();
        assert_eq!(l.constant(1, 1, 0), &rational::int(2));
    }
}
