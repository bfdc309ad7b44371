//! Independent reference computations. Nothing here calls the library's
//! exterior algebra, linear algebra or cohomology code: forms are dense
//! coefficient vectors over sorted index tuples, `d` is evaluated from the
//! cochain formula, and ranks come from a separate elimination.

#![allow(dead_code)]

use num_bigint::BigInt;
use num_rational::BigRational as Q;
use num_traits::{One, Zero};

pub fn q(n: i64) -> Q {
    Q::from_integer(BigInt::from(n))
}

/// All strictly increasing `p`-tuples of `0..n`, lexicographic.
pub fn tuples(n: usize, p: usize) -> Vec<Vec<usize>> {
    fn go(start: usize, n: usize, p: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == p {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            cur.push(i);
            go(i + 1, n, p, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(0, n, p, &mut Vec::new(), &mut out);
    out
}

fn binomial(n: usize, k: usize) -> usize {
    if k > n {
        return 0;
    }
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

/// Sorts `idx`, returning the permutation sign, or `None` on a repeat.
pub fn sort_sign(idx: &[usize]) -> Option<(bool, Vec<usize>)> {
    let mut v = idx.to_vec();
    let mut neg = false;
    for i in 0..v.len() {
        for j in 0..v.len() - 1 - i {
            if v[j] == v[j + 1] {
                return None;
            }
            if v[j] > v[j + 1] {
                v.swap(j, j + 1);
                neg = !neg;
            }
        }
    }
    if v.windows(2).any(|w| w[0] == w[1]) {
        return None;
    }
    Some((neg, v))
}

/// Structure constants as a dense cube `c[i][j][k]` for `[e_i, e_j] = Σ c e_k`.
#[derive(Clone, Debug)]
pub struct Brackets {
    pub n: usize,
    pub c: Vec<Vec<Vec<Q>>>,
}

impl Brackets {
    pub fn new(n: usize, entries: &[(usize, usize, usize, Q)]) -> Self {
        let mut c = vec![vec![vec![Q::zero(); n]; n]; n];
        for (i, j, k, v) in entries {
            c[*i][*j][*k] = v.clone();
            c[*j][*i][*k] = -v.clone();
        }
        Brackets { n, c }
    }

    /// `ω(e_{idx[0]}, …)` for a `p`-form with coefficients over `tuples(n, p)`.
    fn eval(&self, omega: &[Q], p: usize, idx: &[usize]) -> Q {
        match sort_sign(idx) {
            None => Q::zero(),
            Some((neg, sorted)) => {
                let pos = tuples(self.n, p).iter().position(|t| *t == sorted).unwrap();
                if neg {
                    -omega[pos].clone()
                } else {
                    omega[pos].clone()
                }
            }
        }
    }

    /// `(dω)(X_0..X_p) = Σ_{a<b} (−1)^{a+b} ω([X_a, X_b], X_0..X̂_a..X̂_b..X_p)`.
    pub fn d(&self, omega: &[Q], p: usize) -> Vec<Q> {
        tuples(self.n, p + 1)
            .iter()
            .map(|x| {
                let mut total = Q::zero();
                for a in 0..x.len() {
                    for b in a + 1..x.len() {
                        let rest: Vec<usize> = x
                            .iter()
                            .enumerate()
                            .filter(|(i, _)| *i != a && *i != b)
                            .map(|(_, v)| *v)
                            .collect();
                        for k in 0..self.n {
                            let c = &self.c[x[a]][x[b]][k];
                            if c.is_zero() {
                                continue;
                            }
                            let mut args = vec![k];
                            args.extend(&rest);
                            let v = c * self.eval(omega, p, &args);
                            if (a + b) % 2 == 0 {
                                total += v;
                            } else {
                                total -= v;
                            }
                        }
                    }
                }
                total
            })
            .collect()
    }

    /// Matrix of `d` on `p`-forms: rows over `(p+1)`-tuples.
    pub fn d_matrix(&self, p: usize) -> Vec<Vec<Q>> {
        let cols = binomial(self.n, p);
        let rows = binomial(self.n, p + 1);
        let mut m = vec![vec![Q::zero(); cols]; rows];
        for j in 0..cols {
            let mut e = vec![Q::zero(); cols];
            e[j] = Q::one();
            for (i, v) in self.d(&e, p).into_iter().enumerate() {
                m[i][j] = v;
            }
        }
        m
    }

    pub fn jacobi_holds(&self) -> bool {
        (0..self.n).all(|k| {
            let mut e = vec![Q::zero(); self.n];
            e[k] = Q::one();
            self.d(&self.d(&e, 1), 2).iter().all(Zero::is_zero)
        })
    }

    pub fn betti(&self) -> Vec<usize> {
        let n = self.n;
        (0..=n)
            .map(|p| {
                let kernel = binomial(n, p) - if p < n { rank(&self.d_matrix(p)) } else { 0 };
                let image = if p > 0 {
                    rank(&self.d_matrix(p - 1))
                } else {
                    0
                };
                kernel - image
            })
            .collect()
    }
}

/// Row rank by plain Gaussian elimination.
pub fn rank(m: &[Vec<Q>]) -> usize {
    let mut a: Vec<Vec<Q>> = m.to_vec();
    let rows = a.len();
    let cols = a.first().map_or(0, Vec::len);
    let mut r = 0;
    for c in 0..cols {
        let Some(p) = (r..rows).find(|&i| !a[i][c].is_zero()) else {
            continue;
        };
        a.swap(r, p);
        for i in 0..rows {
            if i != r && !a[i][c].is_zero() {
                let f = &a[i][c] / &a[r][c];
                for j in c..cols {
                    let t = &f * &a[r][j];
                    a[i][j] -= t;
                }
            }
        }
        r += 1;
        if r == rows {
            break;
        }
    }
    r
}

pub fn det(m: &[Vec<Q>]) -> Q {
    let n = m.len();
    let mut a = m.to_vec();
    let mut d = Q::one();
    for c in 0..n {
        let Some(p) = (c..n).find(|&i| !a[i][c].is_zero()) else {
            return Q::zero();
        };
        if p != c {
            a.swap(p, c);
            d = -d;
        }
        d *= a[c][c].clone();
        for i in c + 1..n {
            let f = &a[i][c] / &a[c][c];
            for j in c..n {
                let t = &f * &a[c][j];
                a[i][j] -= t;
            }
        }
    }
    d
}

pub fn transpose(m: &[Vec<Q>]) -> Vec<Vec<Q>> {
    let cols = m.first().map_or(0, Vec::len);
    (0..cols)
        .map(|j| m.iter().map(|r| r[j].clone()).collect())
        .collect()
}

pub fn matmul(a: &[Vec<Q>], b: &[Vec<Q>]) -> Vec<Vec<Q>> {
    let inner = b.len();
    let cols = b.first().map_or(0, Vec::len);
    a.iter()
        .map(|r| {
            (0..cols)
                .map(|j| (0..inner).fold(Q::zero(), |acc, k| acc + &r[k] * &b[k][j]))
                .collect()
        })
        .collect()
}

/// Inverse by Gauss–Jordan on `[m | I]`.
pub fn inverse(m: &[Vec<Q>]) -> Vec<Vec<Q>> {
    let n = m.len();
    let mut a: Vec<Vec<Q>> = m
        .iter()
        .enumerate()
        .map(|(i, r)| {
            let mut row = r.clone();
            row.extend((0..n).map(|j| if i == j { Q::one() } else { Q::zero() }));
            row
        })
        .collect();
    for c in 0..n {
        let p = (c..n).find(|&i| !a[i][c].is_zero()).expect("singular");
        a.swap(c, p);
        let inv = Q::one() / &a[c][c];
        for x in a[c].iter_mut() {
            *x = &*x * &inv;
        }
        for i in 0..n {
            if i != c && !a[i][c].is_zero() {
                let f = a[i][c].clone();
                for j in 0..2 * n {
                    let t = &f * &a[c][j];
                    a[i][j] -= t;
                }
            }
        }
    }
    a.into_iter().map(|r| r[n..].to_vec()).collect()
}

/// `p`-th compound matrix: minors over `tuples(n, p)` rows and columns.
pub fn compound(m: &[Vec<Q>], p: usize) -> Vec<Vec<Q>> {
    let n = m.len();
    let ts = tuples(n, p);
    ts.iter()
        .map(|r| {
            ts.iter()
                .map(|c| {
                    if p == 0 {
                        return Q::one();
                    }
                    let sub: Vec<Vec<Q>> = r
                        .iter()
                        .map(|&i| c.iter().map(|&j| m[i][j].clone()).collect())
                        .collect();
                    det(&sub)
                })
                .collect()
        })
        .collect()
}

/// Gram matrix of `p`-forms in structure coordinates for the metric whose
/// orthonormal coframe has rows `coframe`.
pub fn form_gram(coframe: &[Vec<Q>], p: usize) -> Vec<Vec<Q>> {
    let g1 = inverse(&matmul(&transpose(coframe), coframe));
    compound(&g1, p)
}

/// Harmonic dimension per grade computed as `ker d ∩ ker d*`, with `d*` the
/// metric adjoint of `d`. Agrees with the Hodge-theoretic notion on
/// unimodular algebras.
pub fn adjoint_harmonic_dims(b: &Brackets, coframe: &[Vec<Q>]) -> Vec<usize> {
    let n = b.n;
    (0..=n)
        .map(|p| {
            let mut stacked: Vec<Vec<Q>> = Vec::new();
            if p < n {
                stacked.extend(b.d_matrix(p));
            }
            if p > 0 {
                // d*_p = G_{p-1}^{-1} D_{p-1}^T G_p
                let gp = form_gram(coframe, p);
                let gq = inverse(&form_gram(coframe, p - 1));
                let adj = matmul(&matmul(&gq, &transpose(&b.d_matrix(p - 1))), &gp);
                stacked.extend(adj);
            }
            binomial(n, p) - rank(&stacked)
        })
        .collect()
}

/// Whether a `p`-form (dense coefficients) is harmonic for the adjoint.
pub fn is_adjoint_harmonic(b: &Brackets, coframe: &[Vec<Q>], omega: &[Q], p: usize) -> bool {
    let n = b.n;
    let closed = p == n || b.d(omega, p).iter().all(Zero::is_zero);
    let coclosed = p == 0 || {
        let gp = form_gram(coframe, p);
        let gq = inverse(&form_gram(coframe, p - 1));
        let adj = matmul(&matmul(&gq, &transpose(&b.d_matrix(p - 1))), &gp);
        adj.iter().all(|r| {
            r.iter()
                .zip(omega)
                .fold(Q::zero(), |acc, (a, x)| acc + a * x)
                .is_zero()
        })
    };
    closed && coclosed
}

/// Invariant cohomology dims of a group given by generators `gens`
/// (matrices acting on 1-forms as columns), via `dim Z^G − dim d((Λ^{p−1})^G)`.
pub fn invariant_dims(b: &Brackets, gens: &[Vec<Vec<Q>>]) -> Vec<usize> {
    let n = b.n;
    let fixed_basis = |p: usize| -> Vec<Vec<Q>> {
        let size = binomial(n, p);
        let mut eqs: Vec<Vec<Q>> = Vec::new();
        for g in gens {
            let mut m = compound(g, p);
            for (i, row) in m.iter_mut().enumerate() {
                row[i] -= Q::one();
            }
            eqs.extend(m);
        }
        nullspace(&eqs, size)
    };
    (0..=n)
        .map(|p| {
            let size = binomial(n, p);
            let mut eqs: Vec<Vec<Q>> = Vec::new();
            for g in gens {
                let mut m = compound(g, p);
                for (i, row) in m.iter_mut().enumerate() {
                    row[i] -= Q::one();
                }
                eqs.extend(m);
            }
            if p < n {
                eqs.extend(b.d_matrix(p));
            }
            let z = size - rank(&eqs);
            let bdim = if p == 0 {
                0
            } else {
                let images: Vec<Vec<Q>> =
                    fixed_basis(p - 1).iter().map(|v| b.d(v, p - 1)).collect();
                rank(&images)
            };
            z - bdim
        })
        .collect()
}

/// Nullspace basis of `eqs` (rows) in `Q^size`.
pub fn nullspace(eqs: &[Vec<Q>], size: usize) -> Vec<Vec<Q>> {
    let mut a: Vec<Vec<Q>> = eqs.to_vec();
    let rows = a.len();
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..size {
        let Some(p) = (r..rows).find(|&i| !a[i][c].is_zero()) else {
            continue;
        };
        a.swap(r, p);
        let inv = Q::one() / &a[r][c];
        for j in 0..size {
            a[r][j] = &a[r][j] * &inv;
        }
        for i in 0..rows {
            if i != r && !a[i][c].is_zero() {
                let f = a[i][c].clone();
                for j in 0..size {
                    let t = &f * &a[r][j];
                    a[i][j] -= t;
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    (0..size)
        .filter(|c| !pivots.contains(c))
        .map(|free| {
            let mut v = vec![Q::zero(); size];
            v[free] = Q::one();
            for (row, &pc) in pivots.iter().enumerate() {
                v[pc] = -a[row][free].clone();
            }
            v
        })
        .collect()
}

/// One character value: real part over symbols plus constant, and `im/2π`.
#[derive(Clone, Debug)]
pub struct CharValue {
    pub re: Vec<Q>,
    pub im2pi: Q,
}

/// Betti numbers by checking every subset directly: the summed real part must
/// lie in the span of the relations (rank test) and the summed imaginary part
/// must be an integer, for every generator.
pub fn brute_force_betti(relations: &[Vec<Q>], table: &[Vec<CharValue>], n: usize) -> Vec<usize> {
    let base_rank = rank(relations);
    let mut betti = vec![0; n + 1];
    for mask in 0u32..(1u32 << n) {
        let trivial = table.iter().all(|row| {
            let width = row.first().map_or(0, |w| w.re.len());
            let mut re = vec![Q::zero(); width];
            let mut im = Q::zero();
            for (i, w) in row.iter().enumerate() {
                if mask >> i & 1 == 1 {
                    for (a, b) in re.iter_mut().zip(&w.re) {
                        *a += b;
                    }
                    im += &w.im2pi;
                }
            }
            let mut with = relations.to_vec();
            with.push(re);
            im.is_integer() && rank(&with) == base_rank
        });
        if trivial {
            betti[mask.count_ones() as usize] += 1;
        }
    }
    betti
}
