//! Built-in algebras.
//!
//! `gl(m|n)` and `sl(m|n)` are built from elementary matrices with the super
//! bracket `[X, Y] = XY - (-1)^{|X||Y|} YX`; structure constants are read off
//! by solving for coordinates in the chosen basis. All catalog algebras are
//! split over the rationals.

use std::fmt;
use std::str::FromStr;

use crate::algebra::LieSuperalgebra;
use crate::error::{Error, Result};
use crate::linalg::{self, Matrix};
use crate::parity::Parity;
use crate::rational::{self, Rational};

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum AlgebraSpec {
    Abelian(usize, usize),
    Sl2,
    Gl(usize, usize),
    Sl(usize, usize),
    DirectSum(Box<AlgebraSpec>, Box<AlgebraSpec>),
}

impl AlgebraSpec {
    pub fn sum(a: AlgebraSpec, b: AlgebraSpec) -> Self {
        AlgebraSpec::DirectSum(Box::new(a), Box::new(b))
    }

    /// Parses whitespace-separated tokens: `abelian M N`, `sl2`, `gl M N`,
    /// `sl M N`, `sum A B`. A single token in display form (`gl(1|1)`,
    /// `sl2+sl2`) is accepted too.
    pub fn from_tokens<S: AsRef<str>>(tokens: &[S]) -> Result<Self> {
        let tokens: Vec<&str> = tokens.iter().map(AsRef::as_ref).collect();
        if let [single] = tokens.as_slice() {
            if single.contains('(') || single.contains('+') {
                return single.parse();
            }
        }
        let mut pos = 0;
        let spec = parse_prefix(&tokens, &mut pos)?;
        if pos != tokens.len() {
            return Err(Error::Input(format!(
                "unexpected trailing arguments: {}",
                tokens[pos..].join(" ")
            )));
        }
        Ok(spec)
    }
}

fn parse_prefix(tokens: &[&str], pos: &mut usize) -> Result<AlgebraSpec> {
    let Some(&head) = tokens.get(*pos) else {
        return Err(Error::Input("missing algebra name".into()));
    };
    *pos += 1;
    let count = |pos: &mut usize| -> Result<usize> {
        let tok = tokens
            .get(*pos)
            .ok_or_else(|| Error::Input(format!("`{head}` needs two nonnegative integer parameters")))?;
        *pos += 1;
        tok.parse()
            .map_err(|_| Error::Input(format!("`{tok}` is not a nonnegative integer")))
    };
    match head {
        "sl2" => Ok(AlgebraSpec::Sl2),
        "abelian" => Ok(AlgebraSpec::Abelian(count(pos)?, count(pos)?)),
        "gl" => Ok(AlgebraSpec::Gl(count(pos)?, count(pos)?)),
        "sl" => Ok(AlgebraSpec::Sl(count(pos)?, count(pos)?)),
        "sum" | "direct_sum" => {
            let a = parse_prefix(tokens, pos)?;
            let b = parse_prefix(tokens, pos)?;
            Ok(AlgebraSpec::sum(a, b))
        }
        other => Err(Error::Input(format!("unknown algebra `{other}`"))),
    }
}

impl fmt::Display for AlgebraSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            AlgebraSpec::Abelian(m, n) => write!(f, "abelian({m}|{n})"),
            AlgebraSpec::Sl2 => f.write_str("sl2"),
            AlgebraSpec::Gl(m, n) => write!(f, "gl({m}|{n})"),
            AlgebraSpec::Sl(m, n) => write!(f, "sl({m}|{n})"),
            AlgebraSpec::DirectSum(a, b) => write!(f, "{a}+{b}"),
        }
    }
}

impl FromStr for AlgebraSpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let mut parts = s.split('+').map(str::trim);
        let first = parse_atom(parts.next().unwrap_or(""))?;
        parts.try_fold(first, |acc, part| Ok(AlgebraSpec::sum(acc, parse_atom(part)?)))
    }
}

fn parse_atom(s: &str) -> Result<AlgebraSpec> {
    if s == "sl2" {
        return Ok(AlgebraSpec::Sl2);
    }
    let bad = || Error::Input(format!("cannot parse algebra `{s}`"));
    let (name, rest) = s.split_once('(').ok_or_else(bad)?;
    let inner = rest.strip_suffix(')').ok_or_else(bad)?;
    let (m, n) = inner.split_once(['|', ',']).ok_or_else(bad)?;
    let m: usize = m.trim().parse().map_err(|_| bad())?;
    let n: usize = n.trim().parse().map_err(|_| bad())?;
    match name {
        "abelian" => Ok(AlgebraSpec::Abelian(m, n)),
        "gl" => Ok(AlgebraSpec::Gl(m, n)),
        "sl" => Ok(AlgebraSpec::Sl(m, n)),
        _ => Err(bad()),
    }
}

/// Builds and validates the algebra named by `spec`.
pub fn make(spec: &AlgebraSpec) -> Result<LieSuperalgebra> {
    let algebra = match spec {
        AlgebraSpec::Abelian(m, n) => LieSuperalgebra::zero_brackets(spec.to_string(), *m, *n),
        AlgebraSpec::Sl2 => sl2(),
        AlgebraSpec::Gl(m, n) => {
            let (even, odd) = gl_basis(*m, *n);
            from_matrix_basis(spec.to_string(), m + n, even, odd)
        }
        AlgebraSpec::Sl(m, n) => {
            if m == n {
                return Err(Error::Input(format!(
                    "sl({m}|{m}) has a nontrivial center (the identity has supertrace zero) \
                     and is not in the verified catalog"
                )));
            }
            let (even, odd) = sl_basis(*m, *n);
            from_matrix_basis(spec.to_string(), m + n, even, odd)
        }
        AlgebraSpec::DirectSum(a, b) => make(a)?.direct_sum(&make(b)?)?,
    };
    algebra.validated()
}

/// Parses tokens and builds the algebra in one step.
pub fn make_named<S: AsRef<str>>(tokens: &[S]) -> Result<LieSuperalgebra> {
    make(&AlgebraSpec::from_tokens(tokens)?)
}

/// The algebras covered by the acceptance suite.
pub fn verified_catalog() -> Vec<AlgebraSpec> {
    vec![
        AlgebraSpec::Abelian(2, 1),
        AlgebraSpec::Sl2,
        AlgebraSpec::Gl(1, 1),
        AlgebraSpec::Gl(2, 1),
        AlgebraSpec::Sl(2, 1),
        AlgebraSpec::sum(AlgebraSpec::Sl2, AlgebraSpec::Sl2),
    ]
}

/// Basis `h, e, f` with `[h,e] = 2e`, `[h,f] = -2f`, `[e,f] = h`.
fn sl2() -> LieSuperalgebra {
    let table = [
        ((0, 1), (1, 2)),
        ((1, 0), (1, -2)),
        ((0, 2), (2, -2)),
        ((2, 0), (2, 2)),
        ((1, 2), (0, 1)),
        ((2, 1), (0, -1)),
    ];
    LieSuperalgebra::from_fn("sl2", 3, 0, |i, j, k| {
        table
            .iter()
            .find(|((a, b), (c, _))| (*a, *b, *c) == (i, j, k))
            .map_or_else(|| rational::int(0), |(_, (_, v))| rational::int(*v))
    })
}

fn elementary(size: usize, i: usize, j: usize) -> Matrix {
    let mut e = Matrix::zeros(size, size);
    e[(i, j)] = rational::int(1);
    e
}

fn row_parity(m: usize, i: usize) -> Parity {
    if i < m {
        Parity::Even
    } else {
        Parity::Odd
    }
}

/// Elementary matrices split by parity, each in lexicographic order.
fn gl_basis(m: usize, n: usize) -> (Vec<Matrix>, Vec<Matrix>) {
    let size = m + n;
    let mut even = Vec::new();
    let mut odd = Vec::new();
    for i in 0..size {
        for j in 0..size {
            let e = elementary(size, i, j);
            match row_parity(m, i) + row_parity(m, j) {
                Parity::Even => even.push(e),
                Parity::Odd => odd.push(e),
            }
        }
    }
    (even, odd)
}

/// Supertrace-zero diagonals `E_ii - (-1)^{p_i + p_{i+1}} E_{i+1,i+1}` first,
/// then the even off-diagonal elementary matrices; odd part as in `gl`.
fn sl_basis(m: usize, n: usize) -> (Vec<Matrix>, Vec<Matrix>) {
    let size = m + n;
    let mut even = Vec::new();
    for i in 0..size.saturating_sub(1) {
        let mut h = elementary(size, i, i);
        let s = (row_parity(m, i) + row_parity(m, i + 1)).sign();
        h[(i + 1, i + 1)] = rational::int(-s);
        even.push(h);
    }
    let (gl_even, odd) = gl_basis(m, n);
    even.extend(gl_even.into_iter().filter(|e| {
        // drop the diagonal units
        !(0..size).any(|i| e[(i, i)] != rational::int(0))
    }));
    (even, odd)
}

fn from_matrix_basis(
    name: String,
    size: usize,
    even: Vec<Matrix>,
    odd: Vec<Matrix>,
) -> LieSuperalgebra {
    let dim_even = even.len();
    let dim_odd = odd.len();
    let basis: Vec<(Matrix, Parity)> = even
        .into_iter()
        .map(|e| (e, Parity::Even))
        .chain(odd.into_iter().map(|e| (e, Parity::Odd)))
        .collect();
    let dim = basis.len();
    let flat_len = size * size;
    let mut columns = Matrix::zeros(flat_len, dim);
    for (c, (b, _)) in basis.iter().enumerate() {
        for (r, x) in b.as_flat().iter().enumerate() {
            columns[(r, c)] = x.clone();
        }
    }
    let mut constants: Vec<Rational> = Vec::with_capacity(dim * dim * dim);
    for (x, px) in &basis {
        for (y, py) in &basis {
            let xy = x.mul(y).expect("square matrices");
            let yx = y.mul(x).expect("square matrices");
            let sign = rational::int((*px * *py).sign());
            let br: Vec<Rational> = xy
                .as_flat()
                .iter()
                .zip(yx.as_flat())
                .map(|(a, b)| a - &sign * b)
                .collect();
            let coords = linalg::solve(&columns, &br)
                .expect("system dimensions agree")
                .expect("matrix basis is closed under the bracket");
            constants.extend(coords);
        }
    }
    LieSuperalgebra::from_constants(name, dim_even, dim_odd, constants)
        .expect("cubic constant table")
}
