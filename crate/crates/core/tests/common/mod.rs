//! Reference implementations used as test oracles. Nothing here calls into
//! the library's linear algebra.
#![allow(dead_code)]

use gbem::{PartyDims, PureState, C64};
use nalgebra::{DMatrix, DVector};
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rand_distr::StandardNormal;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn gaussian(rng: &mut impl Rng) -> f64 {
    rng.sample(StandardNormal)
}

pub fn complex_gaussian(rng: &mut impl Rng) -> C64 {
    C64::new(gaussian(rng), gaussian(rng))
}

pub fn random_amplitudes(rng: &mut impl Rng, total: usize) -> Vec<C64> {
    let v: Vec<C64> = (0..total).map(|_| complex_gaussian(rng)).collect();
    let norm = v.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt();
    v.into_iter().map(|z| z / norm).collect()
}

pub fn random_pure(rng: &mut impl Rng, dims: &[usize]) -> PureState {
    let dims = PartyDims::new(dims.to_vec()).unwrap();
    let amps = random_amplitudes(rng, dims.total());
    PureState::new(dims, DVector::from_vec(amps)).unwrap()
}

/// Haar-distributed unitary from Gram-Schmidt on complex Gaussian columns.
pub fn random_unitary(rng: &mut impl Rng, d: usize) -> DMatrix<C64> {
    let mut cols: Vec<Vec<C64>> = Vec::with_capacity(d);
    while cols.len() < d {
        let mut v: Vec<C64> = (0..d).map(|_| complex_gaussian(rng)).collect();
        for c in &cols {
            let overlap: C64 = c.iter().zip(&v).map(|(a, b)| a.conj() * b).sum();
            for (x, y) in v.iter_mut().zip(c) {
                *x -= overlap * y;
            }
        }
        let norm = v.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt();
        if norm > 1e-8 {
            cols.push(v.into_iter().map(|z| z / norm).collect());
        }
    }
    DMatrix::from_fn(d, d, |i, j| cols[j][i])
}

/// Cyclic Jacobi sweep on a real symmetric matrix; ascending eigenvalues.
pub fn jacobi_eigenvalues(mut a: Vec<Vec<f64>>) -> Vec<f64> {
    let n = a.len();
    for _sweep in 0..100 {
        let off: f64 = (0..n)
            .flat_map(|i| (0..n).filter(move |&j| j != i).map(move |j| (i, j)))
            .map(|(i, j)| a[i][j] * a[i][j])
            .sum();
        if off < 1e-30 {
            break;
        }
        for p in 0..n {
            for q in p + 1..n {
                if a[p][q].abs() < 1e-300 {
                    continue;
                }
                let theta = (a[q][q] - a[p][p]) / (2.0 * a[p][q]);
                let t = theta.signum() / (theta.abs() + (theta * theta + 1.0).sqrt());
                let t = if theta == 0.0 { 1.0 } else { t };
                let c = 1.0 / (t * t + 1.0).sqrt();
                let s = t * c;
                for row in a.iter_mut() {
                    let (rp, rq) = (row[p], row[q]);
                    row[p] = c * rp - s * rq;
                    row[q] = s * rp + c * rq;
                }
                let (row_p, row_q) = (a[p].clone(), a[q].clone());
                for k in 0..n {
                    a[p][k] = c * row_p[k] - s * row_q[k];
                    a[q][k] = s * row_p[k] + c * row_q[k];
                }
            }
        }
    }
    let mut eig: Vec<f64> = (0..n).map(|i| a[i][i]).collect();
    eig.sort_by(|x, y| x.partial_cmp(y).unwrap());
    eig
}

/// Eigenvalues of a Hermitian matrix through its real embedding
/// `[[Re, −Im], [Im, Re]]`, whose spectrum repeats each eigenvalue twice.
pub fn hermitian_eigs(m: &DMatrix<C64>) -> Vec<f64> {
    let n = m.nrows();
    let mut big = vec![vec![0.0; 2 * n]; 2 * n];
    for i in 0..n {
        for j in 0..n {
            let z = m[(i, j)];
            big[i][j] = z.re;
            big[i + n][j + n] = z.re;
            big[i][j + n] = -z.im;
            big[i + n][j] = z.im;
        }
    }
    jacobi_eigenvalues(big).into_iter().step_by(2).collect()
}

pub fn digits(mut index: usize, dims: &[usize]) -> Vec<usize> {
    let mut out = vec![0; dims.len()];
    for k in (0..dims.len()).rev() {
        out[k] = index % dims[k];
        index /= dims[k];
    }
    out
}

fn compose(digits: &[usize], dims: &[usize], parties: &[usize]) -> usize {
    parties.iter().fold(0, |acc, &k| acc * dims[k] + digits[k])
}

/// Canonical bipartitions as member lists containing party 0.
pub fn cuts(n: usize) -> Vec<Vec<usize>> {
    (1u32..(1u32 << n) - 1)
        .filter(|m| m & 1 == 1)
        .map(|m| (0..n).filter(|&k| m >> k & 1 == 1).collect())
        .collect()
}

pub fn complement(n: usize, members: &[usize]) -> Vec<usize> {
    (0..n).filter(|k| !members.contains(k)).collect()
}

/// Reduced density matrix of a pure vector on `keep` by direct summation.
pub fn reduced(amps: &[C64], dims: &[usize], keep: &[usize]) -> DMatrix<C64> {
    let rest = complement(dims.len(), keep);
    let dk: usize = keep.iter().map(|&k| dims[k]).product();
    let mut out = DMatrix::zeros(dk, dk);
    for (i, a) in amps.iter().enumerate() {
        let di = digits(i, dims);
        for (j, b) in amps.iter().enumerate() {
            let dj = digits(j, dims);
            if rest.iter().all(|&k| di[k] == dj[k]) {
                out[(compose(&di, dims, keep), compose(&dj, dims, keep))] += a * b.conj();
            }
        }
    }
    out
}

/// Schmidt probabilities of the smaller side, nonincreasing.
pub fn spectrum(psi: &PureState, members: &[usize]) -> Vec<f64> {
    let dims = psi.dims().as_slice();
    let amps: Vec<C64> = psi.amplitudes().iter().copied().collect();
    let rest = complement(dims.len(), members);
    let d1: usize = members.iter().map(|&k| dims[k]).product();
    let d2: usize = rest.iter().map(|&k| dims[k]).product();
    let side = if d1 <= d2 { members.to_vec() } else { rest };
    let mut eig = hermitian_eigs(&reduced(&amps, dims, &side));
    eig.reverse();
    eig.into_iter().map(|x| x.clamp(0.0, 1.0)).collect()
}

pub const RANK_EPS: f64 = 1e-10;

pub fn concurrence(lam: &[f64]) -> f64 {
    let d = lam.len() as f64;
    let s2: f64 = lam.iter().map(|x| x * x).sum();
    (d / (d - 1.0) * (1.0 - s2)).max(0.0).sqrt()
}

pub fn negativity(lam: &[f64]) -> f64 {
    let s: f64 = lam.iter().map(|x| x.sqrt()).sum();
    s * s - 1.0
}

pub fn g_concurrence(lam: &[f64]) -> f64 {
    let kept: Vec<f64> = lam.iter().copied().filter(|&x| x > RANK_EPS).collect();
    let m = kept.len() as f64;
    if kept.len() < 2 {
        return 0.0;
    }
    m * kept.iter().product::<f64>().powf(1.0 / m)
}

pub fn geometric(lam: &[f64]) -> f64 {
    1.0 - lam[0]
}

/// Index of the measure in the order concurrence, negativity, G-concurrence,
/// geometric.
pub fn measure(kind: usize, lam: &[f64]) -> f64 {
    match kind {
        0 => concurrence(lam),
        1 => negativity(lam),
        2 => g_concurrence(lam),
        _ => geometric(lam),
    }
}

pub fn gbem(psi: &PureState, kind: usize) -> f64 {
    let all = cuts(psi.parties());
    let values: Vec<f64> = all.iter().map(|g| measure(kind, &spectrum(psi, g))).collect();
    values.iter().product::<f64>().powf(1.0 / values.len() as f64)
}

/// Partial transpose on the parties in `members` by index relabeling.
pub fn partial_transpose(m: &DMatrix<C64>, dims: &[usize], members: &[usize]) -> DMatrix<C64> {
    let n = m.nrows();
    let all: Vec<usize> = (0..dims.len()).collect();
    let mut out = DMatrix::zeros(n, n);
    for i in 0..n {
        for j in 0..n {
            let mut di = digits(i, dims);
            let mut dj = digits(j, dims);
            for &k in members {
                std::mem::swap(&mut di[k], &mut dj[k]);
            }
            out[(compose(&di, dims, &all), compose(&dj, dims, &all))] = m[(i, j)];
        }
    }
    out
}

pub fn trace_norm(m: &DMatrix<C64>) -> f64 {
    hermitian_eigs(m).iter().map(|x| x.abs()).sum()
}

/// System density matrix of `cos α|0000⟩ + sin α|1111⟩` after each excited
/// qubit has independently kept its excitation with amplitude √p or handed it
/// to its own environment qubit with amplitude √(1−p).
pub fn damped_ghz4_by_purification(alpha: f64, p: f64) -> DMatrix<C64> {
    const N: usize = 4;
    let dim = 1 << N;
    // joint amplitudes indexed by (system, environment)
    let mut joint = vec![vec![C64::new(0.0, 0.0); dim]; dim];
    for (s, amp) in [(0usize, alpha.cos()), (dim - 1, alpha.sin())] {
        for env in 0..dim {
            if env & !s != 0 {
                continue;
            }
            let moved = env.count_ones() as i32;
            let stayed = s.count_ones() as i32 - moved;
            let w = amp * p.sqrt().powi(stayed) * (1.0 - p).sqrt().powi(moved);
            joint[s ^ env][env] += C64::new(w, 0.0);
        }
    }
    DMatrix::from_fn(dim, dim, |i, j| {
        (0..dim).map(|e| joint[i][e] * joint[j][e].conj()).sum()
    })
}

pub fn binomial(n: usize, k: usize) -> usize {
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

/// Bipartition count from the odd/even binomial sums.
pub fn bipartition_count(n: usize) -> usize {
    if n % 2 == 1 {
        (1..=(n - 1) / 2).map(|m| binomial(n, m)).sum()
    } else {
        (1..n / 2).map(|m| binomial(n, m)).sum::<usize>() + binomial(n, n / 2) / 2
    }
}
