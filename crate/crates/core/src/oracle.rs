//! Matrix realizations of the classical algebras over the prime field
//! F_p, p = 2^61 − 1, used to measure Richardson orbits independently of the
//! root combinatorics.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::classical::{flag_to_marked, natural_dimension, Partition};
use crate::error::{Error, Result};
use crate::parabolics::{dim_nilradical, MarkedDiagram};
use crate::rootkit::{Family, LieType};

pub const PRIME: u64 = (1 << 61) - 1;

fn add(a: u64, b: u64) -> u64 {
    let s = a + b;
    if s >= PRIME {
        s - PRIME
    } else {
        s
    }
}

fn sub(a: u64, b: u64) -> u64 {
    if a >= b {
        a - b
    } else {
        a + PRIME - b
    }
}

fn mul(a: u64, b: u64) -> u64 {
    ((u128::from(a) * u128::from(b)) % u128::from(PRIME)) as u64
}

fn pow(mut a: u64, mut e: u64) -> u64 {
    let mut r = 1;
    while e > 0 {
        if e & 1 == 1 {
            r = mul(r, a);
        }
        a = mul(a, a);
        e >>= 1;
    }
    r
}

fn inv(a: u64) -> u64 {
    pow(a, PRIME - 2)
}

fn from_i64(v: i64) -> u64 {
    if v >= 0 {
        (v as u64) % PRIME
    } else {
        sub(0, ((-v) as u64) % PRIME)
    }
}

/// Dense square matrix over F_p.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Matrix {
    pub size: usize,
    pub entries: Vec<u64>,
}

impl Matrix {
    pub fn zero(size: usize) -> Self {
        Matrix {
            size,
            entries: vec![0; size * size],
        }
    }

    pub fn get(&self, i: usize, j: usize) -> u64 {
        self.entries[i * self.size + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: u64) {
        self.entries[i * self.size + j] = v;
    }

    pub fn mul(&self, other: &Matrix) -> Matrix {
        let n = self.size;
        let mut out = Matrix::zero(n);
        for i in 0..n {
            for k in 0..n {
                let a = self.get(i, k);
                if a == 0 {
                    continue;
                }
                for j in 0..n {
                    let b = other.get(k, j);
                    if b != 0 {
                        let idx = i * n + j;
                        out.entries[idx] = add(out.entries[idx], mul(a, b));
                    }
                }
            }
        }
        out
    }

    pub fn add_scaled(&mut self, other: &Matrix, c: u64) {
        for (x, &y) in self.entries.iter_mut().zip(&other.entries) {
            *x = add(*x, mul(c, y));
        }
    }

    pub fn bracket(&self, other: &Matrix) -> Matrix {
        let ab = self.mul(other);
        let ba = other.mul(self);
        Matrix {
            size: self.size,
            entries: ab.entries.iter().zip(&ba.entries).map(|(&a, &b)| sub(a, b)).collect(),
        }
    }

    pub fn transpose(&self) -> Matrix {
        let n = self.size;
        let mut out = Matrix::zero(n);
        for i in 0..n {
            for j in 0..n {
                out.set(j, i, self.get(i, j));
            }
        }
        out
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(|&x| x == 0)
    }

    pub fn rank(&self) -> usize {
        rank_of_rows(self.entries.chunks(self.size).map(|r| r.to_vec()).collect())
    }
}

/// Rank of a list of row vectors by Gaussian elimination.
pub fn rank_of_rows(mut rows: Vec<Vec<u64>>) -> usize {
    let Some(width) = rows.first().map(Vec::len) else {
        return 0;
    };
    let mut rank = 0;
    for col in 0..width {
        let Some(pivot) = (rank..rows.len()).find(|&r| rows[r][col] != 0) else {
            continue;
        };
        rows.swap(rank, pivot);
        let scale = inv(rows[rank][col]);
        for x in rows[rank].iter_mut() {
            *x = mul(*x, scale);
        }
        let pivot_row = rows[rank].clone();
        for (r, row) in rows.iter_mut().enumerate() {
            if r != rank && row[col] != 0 {
                let f = row[col];
                for (x, &p) in row.iter_mut().zip(&pivot_row) {
                    *x = sub(*x, mul(f, p));
                }
            }
        }
        rank += 1;
        if rank == rows.len() {
            break;
        }
    }
    rank
}

/// A basis element together with its eigenvalue under the diagonal torus
/// coordinates, recorded as a pair of matrix positions.
#[derive(Clone, Debug)]
struct BasisElement {
    matrix: Matrix,
    /// (row, column) of a nonzero entry; the ad-eigenvalue for a diagonal h is
    /// h[row] − h[column]. None for Cartan elements.
    position: Option<(usize, usize)>,
}

#[derive(Clone, Debug)]
pub struct MatrixAlgebraRealization {
    pub lie_type: LieType,
    pub size: usize,
    /// The Gram matrix of the invariant form; `None` for type A.
    pub form: Option<Matrix>,
    basis: Vec<BasisElement>,
}

fn unit(n: usize, i: usize, j: usize, v: u64) -> Matrix {
    let mut m = Matrix::zero(n);
    m.set(i, j, v);
    m
}

impl MatrixAlgebraRealization {
    pub fn new(t: LieType) -> Result<Self> {
        let size = natural_dimension(t)
            .ok_or_else(|| Error::Realization(format!("{t} has no matrix model here")))?;
        let n = size;
        let anti = |i: usize| n - 1 - i;
        let mut basis = Vec::new();
        let form = match t.family() {
            Family::A => {
                for i in 0..n {
                    for j in 0..n {
                        if i != j {
                            basis.push(BasisElement {
                                matrix: unit(n, i, j, 1),
                                position: Some((i, j)),
                            });
                        }
                    }
                }
                for i in 0..n - 1 {
                    let mut h = unit(n, i, i, 1);
                    h.set(i + 1, i + 1, sub(0, 1));
                    basis.push(BasisElement { matrix: h, position: None });
                }
                None
            }
            Family::B | Family::D => {
                // X = J S with J the antidiagonal and S skew: row J(a) of S.
                let mut j = Matrix::zero(n);
                for i in 0..n {
                    j.set(i, anti(i), 1);
                }
                for a in 0..n {
                    for b in a + 1..n {
                        let mut x = Matrix::zero(n);
                        x.set(anti(a), b, 1);
                        x.set(anti(b), a, sub(0, 1));
                        let position = if anti(a) == b { None } else { Some((anti(a), b)) };
                        basis.push(BasisElement { matrix: x, position });
                    }
                }
                Some(j)
            }
            Family::C => {
                // J = [[0, K], [−K, 0]], X = J⁻¹ S = −J S with S symmetric.
                let half = n / 2;
                let mut j = Matrix::zero(n);
                for i in 0..half {
                    j.set(i, anti(i), 1);
                    j.set(anti(i), i, sub(0, 1));
                }
                let minus_j = {
                    let mut m = j.clone();
                    for x in m.entries.iter_mut() {
                        *x = sub(0, *x);
                    }
                    m
                };
                for a in 0..n {
                    for b in a..n {
                        let mut s = unit(n, a, b, 1);
                        s.set(b, a, 1);
                        let x = minus_j.mul(&s);
                        let position = if anti(a) == b { None } else { Some((anti(a), b)) };
                        basis.push(BasisElement { matrix: x, position });
                    }
                }
                Some(j)
            }
            _ => unreachable!("natural_dimension covers the classical families"),
        };
        let real = MatrixAlgebraRealization {
            lie_type: t,
            size,
            form,
            basis,
        };
        if real.basis.len() != t.dimension() {
            return Err(Error::Realization(format!(
                "basis of size {} for {t}, expected {}",
                real.basis.len(),
                t.dimension()
            )));
        }
        Ok(real)
    }

    pub fn dimension(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> impl Iterator<Item = &Matrix> {
        self.basis.iter().map(|b| &b.matrix)
    }

    /// Whether m lies in the algebra: trace zero, or XᵀJ + JX = 0.
    pub fn contains(&self, m: &Matrix) -> bool {
        match &self.form {
            None => (0..self.size).fold(0, |acc, i| add(acc, m.get(i, i))) == 0,
            Some(j) => {
                let lhs = m.transpose().mul(j);
                let rhs = j.mul(m);
                lhs.entries.iter().zip(&rhs.entries).all(|(&a, &b)| add(a, b) == 0)
            }
        }
    }

    /// Diagonal of the grading element with α_s(h) = 1 for marked s and 0
    /// otherwise, scaled by two for C and D to stay integral.
    fn grading_diagonal(&self, md: &MarkedDiagram) -> Vec<i64> {
        let n = self.lie_type.rank();
        let g: Vec<i64> = (1..=n).map(|s| i64::from(md.marks.contains(s))).collect();
        match self.lie_type.family() {
            Family::A => {
                let mut d = vec![0i64; n + 1];
                for i in (0..n).rev() {
                    d[i] = d[i + 1] + g[i];
                }
                d
            }
            family => {
                let mut c = vec![0i64; n];
                match family {
                    Family::B => {
                        c[n - 1] = 2 * g[n - 1];
                    }
                    Family::C => {
                        c[n - 1] = g[n - 1];
                    }
                    _ => {
                        c[n - 2] = g[n - 2] + g[n - 1];
                        c[n - 1] = g[n - 1] - g[n - 2];
                    }
                }
                let start = if family == Family::D { n - 2 } else { n - 1 };
                for i in (0..start).rev() {
                    c[i] = c[i + 1] + 2 * g[i];
                }
                let mut d: Vec<i64> = c.clone();
                if family == Family::B {
                    d.push(0);
                }
                d.extend(c.iter().rev().map(|x| -x));
                d
            }
        }
    }
}

/// Basis of the nilradical of the standard parabolic: the root vectors with
/// positive eigenvalue under its grading element.
pub fn parabolic_nilradical_matrices(
    real: &MatrixAlgebraRealization,
    md: &MarkedDiagram,
) -> Result<Vec<Matrix>> {
    if md.lie_type != real.lie_type {
        return Err(Error::TypeMismatch(md.lie_type.to_string(), real.lie_type.to_string()));
    }
    let d = real.grading_diagonal(md);
    let out: Vec<Matrix> = real
        .basis
        .iter()
        .filter(|b| b.position.is_some_and(|(i, j)| d[i] - d[j] > 0))
        .map(|b| b.matrix.clone())
        .collect();
    let expected = dim_nilradical(md);
    if out.len() != expected {
        return Err(Error::Realization(format!(
            "nilradical of {} has {} matrices but {expected} roots",
            md.marks,
            out.len()
        )));
    }
    Ok(out)
}

/// Nilradical basis for a flag composition.
pub fn flag_nilradical_matrices(real: &MatrixAlgebraRealization, flag: &[usize]) -> Result<Vec<Matrix>> {
    let md = flag_to_marked(real.lie_type, flag)?;
    parabolic_nilradical_matrices(real, &md[0])
}

pub fn random_combination(basis: &[Matrix], size: usize, rng: &mut ChaCha8Rng) -> Matrix {
    let mut x = Matrix::zero(size);
    for b in basis {
        let c = rng.gen_range(1..PRIME);
        x.add_scaled(b, c);
    }
    x
}

/// Jordan type of a nilpotent matrix from the ranks of its powers.
pub fn jordan_type(x: &Matrix) -> Result<Partition> {
    let n = x.size;
    let mut ranks = vec![n];
    let mut power = x.clone();
    while *ranks.last().expect("nonempty") > 0 {
        if ranks.len() > n + 1 {
            return Err(Error::Realization("matrix is not nilpotent".into()));
        }
        ranks.push(power.rank());
        power = power.mul(x);
    }
    // number of parts ≥ k is r_{k−1} − r_k
    let at_least: Vec<usize> = ranks.windows(2).map(|w| w[0] - w[1]).collect();
    let mut parts = Vec::new();
    for k in 0..at_least.len() {
        let next = at_least.get(k + 1).copied().unwrap_or(0);
        for _ in 0..at_least[k] - next {
            parts.push(k + 1);
        }
    }
    Partition::new(parts)
}

const DRAWS: usize = 3;
const ROUNDS: usize = 4;

/// Jordan type of a generic element of the span; draws must agree.
pub fn generic_jordan_type(real: &MatrixAlgebraRealization, basis: &[Matrix], seed: u64) -> Result<Partition> {
    Ok(generic_element(real, basis, seed)?.1)
}

/// A generic element of the span with its Jordan type.
pub fn generic_element(
    real: &MatrixAlgebraRealization,
    basis: &[Matrix],
    seed: u64,
) -> Result<(Matrix, Partition)> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut seen = Vec::new();
    for round in 0..ROUNDS {
        let mut draws: Vec<(Matrix, Partition)> = Vec::new();
        for _ in 0..DRAWS {
            let x = random_combination(basis, real.size, &mut rng);
            let jt = jordan_type(&x)?;
            draws.push((x, jt));
        }
        draws.sort_by(|a, b| b.1.cmp(&a.1));
        if draws.iter().all(|d| d.1 == draws[0].1) {
            log::debug!("seed {seed}: draws agree in round {round} on {}", draws[0].1);
            return Ok(draws.swap_remove(0));
        }
        seen.extend(draws.into_iter().map(|d| d.1.to_string()));
    }
    Err(Error::NonGeneric(format!("seed {seed}: {}", seen.join(" "))))
}

/// dim of {m ∈ g : [m, x] = 0}.
pub fn centralizer_dimension(real: &MatrixAlgebraRealization, x: &Matrix) -> usize {
    let rows: Vec<Vec<u64>> = real.basis().map(|b| b.bracket(x).entries).collect();
    real.dimension() - rank_of_rows(rows)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct OracleReport {
    pub lie_type: LieType,
    pub marks: MarkedDiagram,
    pub seed: u64,
    pub jordan_type: Partition,
    pub dim_u: usize,
    pub centralizer_dim: usize,
    pub dim_orbit: usize,
}

pub fn richardson_orbit(md: &MarkedDiagram, seed: u64) -> Result<OracleReport> {
    let real = MatrixAlgebraRealization::new(md.lie_type)?;
    let basis = parabolic_nilradical_matrices(&real, md)?;
    let (x, jordan_type) = generic_element(&real, &basis, seed)?;
    let centralizer_dim = centralizer_dimension(&real, &x);
    Ok(OracleReport {
        lie_type: md.lie_type,
        marks: *md,
        seed,
        jordan_type,
        dim_u: basis.len(),
        centralizer_dim,
        dim_orbit: real.dimension() - centralizer_dim,
    })
}

/// Needed by callers that build matrices from signed integers.
pub fn field_element(v: i64) -> u64 {
    from_i64(v)
}
