//! Folded AG codes: message f in L(lD) goes to N columns of m symbols,
//! column i being (f(P_i), f(P_i^σ), ..., f(P_i^{σ^{m-1}})).

use std::fmt;
use std::sync::Arc;

use num_rational::Ratio;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

use crate::function_field::{Function, FunctionFieldBackend, FunctionFieldError, Place, RRBasis};
use crate::gf::{Elem, FieldError, Gf};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CodecError {
    #[error("need {needed} disjoint windows of length {m}, the σ-orbits only fit {available}")]
    InsufficientPlaces {
        needed: usize,
        available: usize,
        m: usize,
    },
    #[error("le = {le} must be below mN = {mn}")]
    DegreeTooLarge { le: u64, mn: u64 },
    #[error("invalid code parameters: {0}")]
    InvalidParams(String),
    #[error("expected {expected} symbols, got {got}")]
    LengthMismatch { expected: usize, got: usize },
    #[error("column index {index} out of range for N = {n}")]
    IndexOutOfRange { index: usize, n: usize },
    #[error("words have different shapes")]
    ShapeMismatch,
    #[error(transparent)]
    FunctionField(#[from] FunctionFieldError),
    #[error(transparent)]
    Field(#[from] FieldError),
}

/// N columns of m symbols. Used for codewords and received words alike.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct FoldedWord {
    pub columns: Vec<Vec<Elem>>,
}

pub type Codeword = FoldedWord;
pub type ReceivedWord = FoldedWord;

impl FoldedWord {
    pub fn zeros(n: usize, m: usize) -> FoldedWord {
        FoldedWord {
            columns: vec![vec![Elem::ZERO; m]; n],
        }
    }

    pub fn n(&self) -> usize {
        self.columns.len()
    }

    pub fn m(&self) -> usize {
        self.columns.first().map_or(0, Vec::len)
    }

    pub fn to_hex_rows(&self) -> Vec<Vec<String>> {
        self.columns
            .iter()
            .map(|c| c.iter().map(|e| e.to_string()).collect())
            .collect()
    }

    pub fn from_hex_rows(field: &Gf, rows: &[Vec<String>]) -> Result<FoldedWord, CodecError> {
        let m = rows.first().map_or(0, Vec::len);
        let columns = rows
            .iter()
            .map(|r| {
                if r.len() != m {
                    return Err(CodecError::ShapeMismatch);
                }
                r.iter()
                    .map(|s| field.parse_hex(s).map_err(CodecError::from))
                    .collect()
            })
            .collect::<Result<Vec<Vec<Elem>>, CodecError>>()?;
        Ok(FoldedWord { columns })
    }
}

impl fmt::Display for FoldedWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cols: Vec<String> = self
            .columns
            .iter()
            .map(|c| {
                format!(
                    "[{}]",
                    c.iter()
                        .map(|e| e.to_string())
                        .collect::<Vec<_>>()
                        .join(" ")
                )
            })
            .collect();
        write!(f, "{}", cols.join(" "))
    }
}

/// Number of columns where the words differ.
pub fn column_distance(a: &FoldedWord, b: &FoldedWord) -> Result<usize, CodecError> {
    if a.n() != b.n()
        || a.columns
            .iter()
            .zip(&b.columns)
            .any(|(x, y)| x.len() != y.len())
    {
        return Err(CodecError::ShapeMismatch);
    }
    Ok(a.columns
        .iter()
        .zip(&b.columns)
        .filter(|(x, y)| x != y)
        .count())
}

/// Replaces each listed column by a different random column.
pub fn corrupt(
    field: &Gf,
    word: &FoldedWord,
    error_columns: &[usize],
    seed: u64,
) -> Result<FoldedWord, CodecError> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    corrupt_with(field, word, error_columns, &mut rng)
}

pub fn corrupt_with<R: Rng>(
    field: &Gf,
    word: &FoldedWord,
    error_columns: &[usize],
    rng: &mut R,
) -> Result<FoldedWord, CodecError> {
    let n = word.n();
    if let Some(&index) = error_columns.iter().find(|&&i| i >= n) {
        return Err(CodecError::IndexOutOfRange { index, n });
    }
    let q = field.order();
    let mut out = word.clone();
    for &i in error_columns {
        let col = &mut out.columns[i];
        let mut offset: Vec<Elem> = (0..col.len()).map(|_| Elem(rng.gen_range(0..q))).collect();
        if offset.iter().all(|e| e.is_zero()) {
            let j = rng.gen_range(0..col.len());
            offset[j] = Elem(rng.gen_range(1..q));
        }
        for (c, o) in col.iter_mut().zip(offset) {
            *c = field.add(*c, o);
        }
    }
    Ok(out)
}

/// `count` distinct column indices below n, sorted.
pub fn random_positions<R: Rng>(n: usize, count: usize, rng: &mut R) -> Vec<usize> {
    let mut v = rand::seq::index::sample(rng, n, count.min(n)).into_vec();
    v.sort_unstable();
    v
}

/// A folded code over a backend.
#[derive(Clone)]
pub struct FoldedCode {
    backend: Arc<dyn FunctionFieldBackend>,
    m: usize,
    n: usize,
    l: u32,
    basis: RRBasis,
    windows: Vec<Vec<Place>>,
    anchor: Place,
    /// evals[i][j][b] = z_b(P_i^{σ^j}).
    evals: Vec<Vec<Vec<Elem>>>,
}

impl fmt::Debug for FoldedCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("FoldedCode")
            .field("backend", &self.backend)
            .field("m", &self.m)
            .field("n", &self.n)
            .field("l", &self.l)
            .field("k", &self.dimension())
            .finish()
    }
}

impl FoldedCode {
    pub fn new(
        backend: Arc<dyn FunctionFieldBackend>,
        m: usize,
        n: usize,
        l: u32,
    ) -> Result<FoldedCode, CodecError> {
        if m == 0 || n == 0 {
            return Err(CodecError::InvalidParams("m and N must be positive".into()));
        }
        let e = backend.divisor_degree() as u64;
        let le = l as u64 * e;
        let mn = (m * n) as u64;
        if le >= mn {
            return Err(CodecError::DegreeTooLarge { le, mn });
        }
        let orbits = backend.orbits();
        let mut windows = Vec::new();
        for o in &orbits {
            for k in 0..o.len() / m {
                windows.push(o.places[k * m..(k + 1) * m].to_vec());
            }
        }
        if windows.len() < n {
            return Err(CodecError::InsufficientPlaces {
                needed: n,
                available: windows.len(),
                m,
            });
        }
        windows.truncate(n);
        let used: std::collections::BTreeSet<Place> = windows.iter().flatten().copied().collect();
        let all: Vec<Place> = orbits
            .iter()
            .flat_map(|o| o.places.iter().copied())
            .collect();
        let anchor = all
            .iter()
            .filter(|p| !used.contains(p))
            .chain(all.iter().filter(|p| used.contains(p)))
            .find(|p| backend.fixed_parameter(p).is_ok())
            .copied()
            .ok_or_else(|| {
                CodecError::InvalidParams("no place admits a σ-fixed local parameter".into())
            })?;
        let basis = backend.rr_basis(l)?;
        let evals = windows
            .iter()
            .map(|w| {
                w.iter()
                    .map(|p| {
                        basis
                            .functions
                            .iter()
                            .map(|z| backend.evaluate(z, p))
                            .collect::<Result<Vec<_>, _>>()
                    })
                    .collect::<Result<Vec<_>, _>>()
            })
            .collect::<Result<Vec<_>, _>>()?;
        Ok(FoldedCode {
            backend,
            m,
            n,
            l,
            basis,
            windows,
            anchor,
            evals,
        })
    }

    pub fn backend(&self) -> &Arc<dyn FunctionFieldBackend> {
        &self.backend
    }

    pub fn field(&self) -> &Gf {
        self.backend.field()
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn l(&self) -> u32 {
        self.l
    }

    pub fn e(&self) -> u32 {
        self.backend.divisor_degree()
    }

    pub fn genus(&self) -> u32 {
        self.backend.genus()
    }

    /// dim L(lD).
    pub fn dimension(&self) -> usize {
        self.basis.dimension()
    }

    pub fn basis(&self) -> &RRBasis {
        &self.basis
    }

    /// windows[i][j] = P_i^{σ^j}.
    pub fn windows(&self) -> &[Vec<Place>] {
        &self.windows
    }

    /// The place used for local expansions.
    pub fn anchor(&self) -> Place {
        self.anchor
    }

    /// (le - g + 1) / (Nm).
    pub fn rate_bound(&self) -> Ratio<i64> {
        let le = self.l as i64 * self.e() as i64;
        Ratio::new(le - self.genus() as i64 + 1, (self.n * self.m) as i64)
    }

    /// k / (Nm).
    pub fn rate(&self) -> Ratio<i64> {
        Ratio::new(self.dimension() as i64, (self.n * self.m) as i64)
    }

    /// N - le/m, possibly fractional.
    pub fn distance_bound(&self) -> Ratio<i64> {
        let le = self.l as i64 * self.e() as i64;
        Ratio::from_integer(self.n as i64) - Ratio::new(le, self.m as i64)
    }

    /// The integer distance guaranteed by the bound.
    pub fn distance_bound_ceil(&self) -> i64 {
        self.distance_bound().ceil().to_integer()
    }

    pub fn message_function(&self, message: &[Elem]) -> Result<Function, CodecError> {
        self.check_len(message)?;
        Ok(self.basis.combine(self.field(), message))
    }

    fn check_len(&self, message: &[Elem]) -> Result<(), CodecError> {
        if message.len() != self.dimension() {
            return Err(CodecError::LengthMismatch {
                expected: self.dimension(),
                got: message.len(),
            });
        }
        Ok(())
    }

    pub fn encode(&self, message: &[Elem]) -> Result<Codeword, CodecError> {
        self.check_len(message)?;
        let f = self.field();
        let columns = self
            .evals
            .iter()
            .map(|col| {
                col.iter()
                    .map(|row| {
                        row.iter()
                            .zip(message)
                            .fold(Elem::ZERO, |acc, (&z, &c)| f.add(acc, f.mul(z, c)))
                    })
                    .collect()
            })
            .collect();
        Ok(FoldedWord { columns })
    }

    pub fn random_message<R: Rng>(&self, rng: &mut R) -> Vec<Elem> {
        let q = self.field().order();
        (0..self.dimension())
            .map(|_| Elem(rng.gen_range(0..q)))
            .collect()
    }

    /// Smallest column weight of a nonzero codeword, by enumerating all q^k
    /// messages. `None` when q^k exceeds 2^16.
    pub fn minimum_distance_exhaustive(&self) -> Option<usize> {
        let q = self.field().order() as u64;
        let total = q.checked_pow(self.dimension() as u32)?;
        if total > 1 << 16 {
            return None;
        }
        let zero = FoldedWord::zeros(self.n, self.m);
        (1..total)
            .map(|idx| {
                let msg = index_to_message(idx, q, self.dimension());
                column_distance(&self.encode(&msg).unwrap(), &zero).unwrap()
            })
            .min()
    }
}

/// Base-q digits of idx as a message of length k.
pub fn index_to_message(mut idx: u64, q: u64, k: usize) -> Vec<Elem> {
    (0..k)
        .map(|_| {
            let d = (idx % q) as u32;
            idx /= q;
            Elem(d)
        })
        .collect()
}
