//! The QPC v1 text format.
//!
//! ```text
//! QPC v1
//! q=<p>^<k>[;mod=c0,c1,...]
//! m=<m>
//! kind=linear|switched
//! ```
//!
//! A linear file continues with `dim=<k>` and k generator rows. A switched
//! file continues with `i=<coordinate>` (0-based), the `n - [m]_q - 1` rows
//! of the RREF basis of `R_i`, the `[m]_q - m` extension rows fixing the
//! coset order, and `lambda=<digits>` with one base-q digit per coset in
//! ascending t. Rows are space-separated element indices of length `q^m`.
//! Lambda digits use `0-9a-z`.

use std::sync::Arc;

use crate::error::{Error, Result};
use crate::field::Field;
use crate::geometry::AffineSpace;
use crate::grm::LinearCode;
use crate::linalg::{parse_row, row_to_text, FqMatrix};
use crate::switching::{apply_switch, SwitchedCode, SwitchingFrame};

pub const HEADER: &str = "QPC v1";
const DIGITS: &[u8] = b"0123456789abcdefghijklmnopqrstuvwxyz";

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum QpcFile {
    Linear {
        field: Field,
        m: usize,
        generator: FqMatrix,
    },
    Switched {
        field: Field,
        m: usize,
        i: usize,
        ri_basis: FqMatrix,
        extension: FqMatrix,
        lambdas: Vec<u8>,
    },
}

pub fn lambda_to_digits(lambdas: &[u8]) -> Result<String> {
    lambdas
        .iter()
        .map(|&l| {
            DIGITS
                .get(l as usize)
                .map(|&c| c as char)
                .ok_or_else(|| Error::invalid(format!("lambda digit {l} exceeds base 36")))
        })
        .collect()
}

pub fn lambda_from_digits(field: &Field, s: &str) -> Result<Vec<u8>> {
    s.chars()
        .map(|c| {
            let d = c
                .to_digit(36)
                .ok_or_else(|| Error::invalid(format!("`{c}` is not a lambda digit")))?;
            field.elem(d as usize)
        })
        .collect()
}

impl QpcFile {
    pub fn from_linear(code: &LinearCode, m: usize) -> Self {
        QpcFile::Linear {
            field: code.field().clone(),
            m,
            generator: code.generator().clone(),
        }
    }

    pub fn from_switched(sw: &SwitchedCode) -> Self {
        let frame = sw.frame();
        QpcFile::Switched {
            field: frame.space().field().clone(),
            m: frame.space().m(),
            i: frame.coordinate(),
            ri_basis: frame.ri().basis().clone(),
            extension: frame.partition().extension().clone(),
            lambdas: sw.lambdas().to_vec(),
        }
    }

    pub fn field(&self) -> &Field {
        match self {
            QpcFile::Linear { field, .. } | QpcFile::Switched { field, .. } => field,
        }
    }

    pub fn m(&self) -> usize {
        match self {
            QpcFile::Linear { m, .. } | QpcFile::Switched { m, .. } => *m,
        }
    }

    pub fn space(&self) -> Result<AffineSpace> {
        AffineSpace::new(self.field(), self.m())
    }

    pub fn to_text(&self) -> Result<String> {
        let mut s = String::new();
        s.push_str(HEADER);
        s.push('\n');
        s.push_str(&format!(
            "q={}\nm={}\n",
            self.field().descriptor(),
            self.m()
        ));
        match self {
            QpcFile::Linear { generator, .. } => {
                s.push_str("kind=linear\n");
                s.push_str(&format!("dim={}\n", generator.rows()));
                s.push_str(&generator.to_text());
            }
            QpcFile::Switched {
                i,
                ri_basis,
                extension,
                lambdas,
                ..
            } => {
                s.push_str("kind=switched\n");
                s.push_str(&format!("i={i}\n"));
                s.push_str(&ri_basis.to_text());
                s.push_str(&extension.to_text());
                s.push_str(&format!("lambda={}\n", lambda_to_digits(lambdas)?));
            }
        }
        Ok(s)
    }

    pub fn parse(text: &str) -> Result<Self> {
        let mut rd = Reader::new(text);
        let (ln, header) = rd.next("header")?;
        if header != HEADER {
            return Err(Error::Parse {
                line: ln,
                msg: format!("expected `{HEADER}`"),
            });
        }
        let (ln, v) = rd.value("q")?;
        let field = Field::from_descriptor(v).map_err(|e| Error::Parse {
            line: ln,
            msg: e.to_string(),
        })?;
        let (ln, v) = rd.value("m")?;
        let m = parse_num(ln, v)?;
        if m == 0 {
            return Err(Error::Parse {
                line: ln,
                msg: "m must be at least 1".into(),
            });
        }
        let q = field.q();
        let n = q
            .checked_pow(m as u32)
            .filter(|&n| n <= 1 << 24)
            .ok_or(Error::Parse {
                line: ln,
                msg: "q^m too large".into(),
            })?;
        let (ln, kind) = rd.value("kind")?;
        let file = match kind {
            "linear" => {
                let (ln, v) = rd.value("dim")?;
                let dim = parse_num(ln, v)?;
                if dim > n {
                    return Err(Error::Parse {
                        line: ln,
                        msg: format!("dim {dim} exceeds length {n}"),
                    });
                }
                let generator = rd.rows(&field, n, dim)?;
                QpcFile::Linear {
                    field,
                    m,
                    generator,
                }
            }
            "switched" => {
                if q < 3 {
                    return Err(Error::Parse {
                        line: ln,
                        msg: "switched codes need q >= 3".into(),
                    });
                }
                let (ln, v) = rd.value("i")?;
                let i = parse_num(ln, v)?;
                if i >= n {
                    return Err(Error::Parse {
                        line: ln,
                        msg: format!("coordinate {i} out of range"),
                    });
                }
                let q_analog = (n - 1) / (q - 1);
                let ri_basis = rd.rows(&field, n, n - q_analog - 1)?;
                let extension = rd.rows(&field, n, q_analog - m)?;
                let (ln, v) = rd.value("lambda")?;
                let lambdas = lambda_from_digits(&field, v).map_err(|e| Error::Parse {
                    line: ln,
                    msg: e.to_string(),
                })?;
                let t_count = (q as u128).checked_pow((q_analog - m) as u32);
                if t_count != Some(lambdas.len() as u128) {
                    return Err(Error::Parse {
                        line: ln,
                        msg: format!(
                            "{} lambda digits, expected q^{}",
                            lambdas.len(),
                            q_analog - m
                        ),
                    });
                }
                QpcFile::Switched {
                    field,
                    m,
                    i,
                    ri_basis,
                    extension,
                    lambdas,
                }
            }
            other => {
                return Err(Error::Parse {
                    line: ln,
                    msg: format!("unknown kind `{other}`"),
                })
            }
        };
        rd.finish()?;
        Ok(file)
    }

    /// The linear code of a `kind=linear` file.
    pub fn to_linear_code(&self) -> Result<LinearCode> {
        match self {
            QpcFile::Linear { generator, .. } => {
                let code = LinearCode::from_generator(generator)?;
                if code.dim() != generator.rows() {
                    return Err(Error::invalid("generator rows are linearly dependent"));
                }
                Ok(code)
            }
            QpcFile::Switched { .. } => Err(Error::invalid("file holds a switched code")),
        }
    }

    /// Rebuilds the switched code, checking that the stored `R_i` basis is
    /// the one the construction produces.
    pub fn to_switched(&self, leader_cap: usize) -> Result<SwitchedCode> {
        match self {
            QpcFile::Switched {
                i,
                ri_basis,
                extension,
                lambdas,
                ..
            } => {
                let space = self.space()?;
                let frame: Arc<SwitchingFrame> =
                    SwitchingFrame::with_extension(&space, *i, extension.clone(), leader_cap)?;
                if frame.ri().basis() != ri_basis {
                    return Err(Error::invalid(format!(
                        "stored R_{i} basis differs from the constructed one"
                    )));
                }
                apply_switch(&frame, lambdas.clone())
            }
            QpcFile::Linear { .. } => Err(Error::invalid("file holds a linear code")),
        }
    }
}

struct Reader<'a> {
    lines: std::iter::Enumerate<std::str::Lines<'a>>,
    last: usize,
}

impl<'a> Reader<'a> {
    fn new(text: &'a str) -> Self {
        Reader {
            lines: text.lines().enumerate(),
            last: 0,
        }
    }

    fn next(&mut self, what: &str) -> Result<(usize, &'a str)> {
        match self.lines.next() {
            Some((k, l)) => {
                self.last = k + 1;
                Ok((k + 1, l.trim_end_matches('\r')))
            }
            None => Err(Error::Parse {
                line: self.last + 1,
                msg: format!("unexpected end of file, expected {what}"),
            }),
        }
    }

    fn value(&mut self, key: &str) -> Result<(usize, &'a str)> {
        let (ln, l) = self.next(key)?;
        let v = l
            .strip_prefix(key)
            .and_then(|rest| rest.strip_prefix('='))
            .ok_or_else(|| Error::Parse {
                line: ln,
                msg: format!("expected `{key}=...`, found `{l}`"),
            })?;
        Ok((ln, v))
    }

    fn rows(&mut self, field: &Field, n: usize, count: usize) -> Result<FqMatrix> {
        let mut rows = Vec::with_capacity(count);
        for _ in 0..count {
            let (ln, l) = self.next("matrix row")?;
            let row = parse_row(field, l).map_err(|msg| Error::Parse { line: ln, msg })?;
            if row.len() != n {
                return Err(Error::Parse {
                    line: ln,
                    msg: format!("row has {} entries, expected {n}", row.len()),
                });
            }
            rows.push(row);
        }
        FqMatrix::from_rows(field, n, &rows)
    }

    fn finish(mut self) -> Result<()> {
        match self.lines.find(|(_, l)| !l.trim().is_empty()) {
            Some((k, l)) => Err(Error::Parse {
                line: k + 1,
                msg: format!("trailing content `{l}`"),
            }),
            None => Ok(()),
        }
    }
}

fn parse_num(line: usize, s: &str) -> Result<usize> {
    s.trim().parse().map_err(|_| Error::Parse {
        line,
        msg: format!("`{s}` is not a number"),
    })
}

/// Text of a single row, for callers printing vectors.
pub fn vector_to_text(v: &[u8]) -> String {
    row_to_text(v)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::grm::build_target_code;
    use crate::linalg::DEFAULT_LEADER_CAP;

    #[test]
    fn linear_round_trip() {
        let space = AffineSpace::new(&Field::new(3, 1).unwrap(), 2).unwrap();
        let code = build_target_code(&space).unwrap();
        let file = QpcFile::from_linear(&code, 2);
        let text = file.to_text().unwrap();
        assert!(text.starts_with("QPC v1\nq=3^1\nm=2\nkind=linear\ndim=6\n"));
        let back = QpcFile::parse(&text).unwrap();
        assert_eq!(back, file);
        assert!(back.to_linear_code().unwrap().same_code(&code));
    }

    #[test]
    fn switched_round_trip() {
        let space = AffineSpace::new(&Field::new(2, 2).unwrap(), 2).unwrap();
        let frame = SwitchingFrame::new(&space, 3, DEFAULT_LEADER_CAP).unwrap();
        let lambdas: Vec<u8> = (0..64).map(|t| (t * 7 % 4) as u8).collect();
        let sw = apply_switch(&frame, lambdas).unwrap();
        let file = QpcFile::from_switched(&sw);
        let text = file.to_text().unwrap();
        assert!(text.contains("q=2^2;mod=1,1,1\n"));
        let back = QpcFile::parse(&text).unwrap();
        assert_eq!(back, file);
        let sw2 = back.to_switched(DEFAULT_LEADER_CAP).unwrap();
        assert_eq!(sw2.lambdas(), sw.lambdas());
        assert_eq!(back.to_text().unwrap(), text);
    }

    #[test]
    fn malformed_inputs() {
        assert!(QpcFile::parse("").is_err());
        assert!(QpcFile::parse("QPC v2\n").is_err());
        assert!(QpcFile::parse("QPC v1\nq=3^1\nm=1\nkind=linear\ndim=1\n1 1\n").is_err());
        assert!(QpcFile::parse("QPC v1\nq=3^1\nm=1\nkind=linear\ndim=1\n1 1 3\n").is_err());
        assert!(QpcFile::parse("QPC v1\nq=3^1\nm=1\nkind=other\n").is_err());
        let ok = "QPC v1\nq=3^1\nm=1\nkind=linear\ndim=1\n1 1 1\n";
        assert!(QpcFile::parse(ok).is_ok());
        assert!(QpcFile::parse(&format!("{ok}0 0 0\n")).is_err());
    }

    #[test]
    fn lambda_digits() {
        let f = Field::new(5, 1).unwrap();
        assert_eq!(lambda_to_digits(&[0, 4, 2]).unwrap(), "042");
        assert_eq!(lambda_from_digits(&f, "042").unwrap(), vec![0, 4, 2]);
        assert!(lambda_from_digits(&f, "05").is_err());
    }
}
