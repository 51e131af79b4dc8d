//! Hom dimensions computed from explicit matrices over a prime field, as an
//! independent check of the table.

use crate::error::{Error, Result};
use crate::objects::{Indecomposable, S2Object};

/// Dense matrix over `F_p`, row-major.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    p: u64,
    data: Vec<u64>,
}

impl Matrix {
    pub fn zeros(rows: usize, cols: usize, p: u64) -> Self {
        Matrix {
            rows,
            cols,
            p,
            data: vec![0; rows * cols],
        }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> u64 {
        self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: u64) {
        self.data[i * self.cols + j] = v % self.p;
    }

    pub fn mul(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.cols, other.rows);
        let mut out = Matrix::zeros(self.rows, other.cols, self.p);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a == 0 {
                    continue;
                }
                for j in 0..other.cols {
                    let v = (out.get(i, j) + a * other.get(k, j)) % self.p;
                    out.set(i, j, v);
                }
            }
        }
        out
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|&x| x == 0)
    }

    /// Rank by Gaussian elimination, pivoting on the first nonzero entry.
    pub fn rank(&self) -> usize {
        let p = self.p;
        let mut m = self.data.clone();
        let cols = self.cols;
        let mut rank = 0;
        for col in 0..cols {
            let Some(piv) = (rank..self.rows).find(|&r| m[r * cols + col] != 0) else {
                continue;
            };
            if piv != rank {
                for j in 0..cols {
                    m.swap(piv * cols + j, rank * cols + j);
                }
            }
            let inv = inverse(m[rank * cols + col], p);
            for j in col..cols {
                m[rank * cols + j] = m[rank * cols + j] * inv % p;
            }
            for r in 0..self.rows {
                if r == rank {
                    continue;
                }
                let f = m[r * cols + col];
                if f == 0 {
                    continue;
                }
                for j in col..cols {
                    let sub = f * m[rank * cols + j] % p;
                    m[r * cols + j] = (m[r * cols + j] + p - sub) % p;
                }
            }
            rank += 1;
            if rank == self.rows {
                break;
            }
        }
        rank
    }
}

fn inverse(a: u64, p: u64) -> u64 {
    // Fermat
    let (mut base, mut exp, mut acc) = (a % p, p - 2, 1u64);
    while exp > 0 {
        if exp & 1 == 1 {
            acc = acc * base % p;
        }
        base = base * base % p;
        exp >>= 1;
    }
    acc
}

pub fn is_prime(p: u64) -> bool {
    p >= 2
        && (2..)
            .take_while(|d| d * d <= p)
            .all(|d| !p.is_multiple_of(d))
}

/// An object as a triple: subspace operator, ambient operator, embedding.
#[derive(Clone, Debug)]
pub struct RealizedObject {
    pub subspace: Matrix,
    pub ambient: Matrix,
    pub embedding: Matrix,
}

impl RealizedObject {
    /// `T` restricted to the subspace agrees with the subspace operator.
    pub fn is_consistent(&self) -> bool {
        let lhs = self.embedding.mul(&self.subspace);
        let rhs = self.ambient.mul(&self.embedding);
        lhs == rhs
    }
}

/// Adds a nilpotent Jordan block of size `size` at offset `at`: `T e_i = e_{i+1}`.
fn jordan(m: &mut Matrix, at: usize, size: usize) {
    for i in 0..size.saturating_sub(1) {
        m.set(at + i + 1, at + i, 1);
    }
}

/// Block-diagonal assembly. `P_ℓ^m` embeds `u_j ↦ e_{m-ℓ+j}`; `B2(m, r)`
/// sends its generator to `e_{m-2} + e'_{r-1}` and `u_1` to `e_{m-1}`.
pub fn realize(object: &S2Object, p: u64) -> Result<RealizedObject> {
    if !is_prime(p) {
        return Err(Error::InvalidPrime(p));
    }
    let (beta, _) = object.object_type();
    let alpha = object.alpha();
    let (nb, na) = (beta.weight() as usize, alpha.weight() as usize);
    let mut subspace = Matrix::zeros(na, na, p);
    let mut ambient = Matrix::zeros(nb, nb, p);
    let mut embedding = Matrix::zeros(nb, na, p);
    let (mut b0, mut a0) = (0usize, 0usize);
    for s in object.summands() {
        let amb = s.ambient_parts();
        let ell = s.subspace_dim() as usize;
        jordan(&mut subspace, a0, ell);
        let mut at = b0;
        for &size in &amb {
            jordan(&mut ambient, at, size as usize);
            at += size as usize;
        }
        match *s {
            Indecomposable::B2 { m, r } => {
                let (m, r) = (m as usize, r as usize);
                embedding.set(b0 + m - 2, a0, 1);
                embedding.set(b0 + m + r - 1, a0, 1);
                embedding.set(b0 + m - 1, a0 + 1, 1);
            }
            _ => {
                let m = amb[0] as usize;
                for j in 0..ell {
                    embedding.set(b0 + m - ell + j, a0 + j, 1);
                }
            }
        }
        b0 = at;
        a0 += ell;
    }
    Ok(RealizedObject {
        subspace,
        ambient,
        embedding,
    })
}

/// `dim Hom(X, Y)` over `F_p`: pairs `(h1, h2)` with `h1 A_X = A_Y h1`,
/// `h2 B_X = B_Y h2` and `F_Y h1 = h2 F_X`, counted as unknowns minus rank.
pub fn oracle_hom_dim(x: &S2Object, y: &S2Object, p: u64) -> Result<u64> {
    let rx = realize(x, p)?;
    let ry = realize(y, p)?;
    let (ax, ay) = (rx.subspace.rows(), ry.subspace.rows());
    let (bx, by) = (rx.ambient.rows(), ry.ambient.rows());
    // unknowns: h1 (ay × ax) then h2 (by × bx)
    let h1 = |i: usize, j: usize| i * ax + j;
    let h2 = |i: usize, j: usize| ay * ax + i * bx + j;
    let unknowns = ay * ax + by * bx;
    let mut rows: Vec<Vec<(usize, u64)>> = Vec::new();

    // (h1 A_X - A_Y h1)[i][j] = Σ_k h1[i][k] A_X[k][j] - Σ_k A_Y[i][k] h1[k][j]
    for i in 0..ay {
        for j in 0..ax {
            let mut eq = Vec::new();
            for k in 0..ax {
                eq.push((h1(i, k), rx.subspace.get(k, j)));
            }
            for k in 0..ay {
                eq.push((h1(k, j), p - ry.subspace.get(i, k)));
            }
            rows.push(eq);
        }
    }
    for i in 0..by {
        for j in 0..bx {
            let mut eq = Vec::new();
            for k in 0..bx {
                eq.push((h2(i, k), rx.ambient.get(k, j)));
            }
            for k in 0..by {
                eq.push((h2(k, j), p - ry.ambient.get(i, k)));
            }
            rows.push(eq);
        }
    }
    // (F_Y h1 - h2 F_X)[i][j]
    for i in 0..by {
        for j in 0..ax {
            let mut eq = Vec::new();
            for k in 0..ay {
                eq.push((h1(k, j), ry.embedding.get(i, k)));
            }
            for k in 0..bx {
                eq.push((h2(i, k), p - rx.embedding.get(k, j)));
            }
            rows.push(eq);
        }
    }
    let mut system = Matrix::zeros(rows.len(), unknowns, p);
    for (r, eq) in rows.iter().enumerate() {
        for &(c, v) in eq {
            let cur = system.get(r, c);
            system.set(r, c, cur + v % p);
        }
    }
    Ok((unknowns - system.rank()) as u64)
}
