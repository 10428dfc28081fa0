//! Dense reference algebra used as a test oracle.
//!
//! Works with full 32-coefficient arrays in the diagonal basis
//! `(e1, e2, e3, e+, e-)`. Null-basis blades are built by antisymmetrising
//! geometric products over all factor permutations and the change of basis is
//! inverted numerically, so nothing here shares code with the library's
//! table generator.
#![allow(clippy::needless_range_loop)]
#![allow(dead_code)]

use nalgebra::{SMatrix, SVector};

pub type Dense = [f64; 32];
type Mat32 = SMatrix<f64, 32, 32>;

const METRIC: [f64; 5] = [1.0, 1.0, 1.0, 1.0, -1.0];

fn basis_product(a: usize, b: usize) -> (usize, f64) {
    // walk factors of b into a one at a time, counting transpositions
    let mut sign = 1.0;
    let mut cur = a;
    for j in 0..5 {
        if b & (1 << j) == 0 {
            continue;
        }
        let higher = (cur >> (j + 1)).count_ones();
        if higher % 2 == 1 {
            sign = -sign;
        }
        if cur & (1 << j) != 0 {
            sign *= METRIC[j];
            cur &= !(1 << j);
        } else {
            cur |= 1 << j;
        }
    }
    (cur, sign)
}

/// Geometric product of two diagonal-basis multivectors.
pub fn gp_diag(a: &Dense, b: &Dense) -> Dense {
    let mut out = [0.0; 32];
    for i in 0..32 {
        if a[i] == 0.0 {
            continue;
        }
        for j in 0..32 {
            if b[j] == 0.0 {
                continue;
            }
            let (k, s) = basis_product(i, j);
            out[k] += s * a[i] * b[j];
        }
    }
    out
}

fn vector_diag(v: [f64; 5]) -> Dense {
    let mut d = [0.0; 32];
    for (j, c) in v.iter().enumerate() {
        d[1 << j] += c;
    }
    d
}

/// Null basis vector `k` (0 = e0, 1..3 = e1..e3, 4 = einf) in diagonal coordinates.
fn null_vector(k: usize) -> Dense {
    match k {
        0 => vector_diag([0.0, 0.0, 0.0, -0.5, 0.5]),
        1 => vector_diag([1.0, 0.0, 0.0, 0.0, 0.0]),
        2 => vector_diag([0.0, 1.0, 0.0, 0.0, 0.0]),
        3 => vector_diag([0.0, 0.0, 1.0, 0.0, 0.0]),
        4 => vector_diag([0.0, 0.0, 0.0, 1.0, 1.0]),
        _ => unreachable!(),
    }
}

fn permutations(items: &[usize]) -> Vec<(Vec<usize>, f64)> {
    if items.len() <= 1 {
        return vec![(items.to_vec(), 1.0)];
    }
    let mut out = Vec::new();
    for i in 0..items.len() {
        let mut rest = items.to_vec();
        let head = rest.remove(i);
        let sign = if i % 2 == 0 { 1.0 } else { -1.0 };
        for (mut p, s) in permutations(&rest) {
            p.insert(0, head);
            out.push((p, s * sign));
        }
    }
    out
}

fn factorial(n: usize) -> f64 {
    (1..=n).map(|k| k as f64).product()
}

/// Null-basis blade expressed in the diagonal basis via antisymmetrised products.
fn null_blade_diag(blade: usize) -> Dense {
    let factors: Vec<usize> = (0..5).filter(|j| blade & (1 << j) != 0).collect();
    let mut acc = [0.0; 32];
    for (perm, sign) in permutations(&factors) {
        let mut prod = [0.0; 32];
        prod[0] = 1.0;
        for k in perm {
            prod = gp_diag(&prod, &null_vector(k));
        }
        for i in 0..32 {
            acc[i] += sign * prod[i];
        }
    }
    let n = factorial(factors.len());
    acc.map(|c| c / n)
}

pub struct DenseCga {
    to_diag: Mat32,
    to_null: Mat32,
}

impl DenseCga {
    pub fn new() -> Self {
        let mut to_diag = Mat32::zeros();
        for j in 0..32 {
            let col = null_blade_diag(j);
            for i in 0..32 {
                to_diag[(i, j)] = col[i];
            }
        }
        let to_null = to_diag.try_inverse().expect("change of basis is invertible");
        DenseCga { to_diag, to_null }
    }

    fn diag(&self, a: &Dense) -> Dense {
        let v = self.to_diag * SVector::<f64, 32>::from_row_slice(a);
        let mut out = [0.0; 32];
        out.copy_from_slice(v.as_slice());
        out
    }

    fn null(&self, a: &Dense) -> Dense {
        let v = self.to_null * SVector::<f64, 32>::from_row_slice(a);
        let mut out = [0.0; 32];
        out.copy_from_slice(v.as_slice());
        out
    }

    /// Geometric product of null-basis coefficient arrays.
    pub fn gp(&self, a: &Dense, b: &Dense) -> Dense {
        self.null(&gp_diag(&self.diag(a), &self.diag(b)))
    }

    pub fn grade_part(a: &Dense, k: u32) -> Dense {
        let mut out = [0.0; 32];
        for i in 0..32 {
            if (i as u32).count_ones() == k {
                out[i] = a[i];
            }
        }
        out
    }

    fn graded_product(&self, a: &Dense, b: &Dense, select: impl Fn(u32, u32) -> Option<u32>) -> Dense {
        let mut out = [0.0; 32];
        for i in 0..32 {
            if a[i] == 0.0 {
                continue;
            }
            for j in 0..32 {
                if b[j] == 0.0 {
                    continue;
                }
                let (gi, gj) = ((i as u32).count_ones(), (j as u32).count_ones());
                let Some(k) = select(gi, gj) else { continue };
                let mut ea = [0.0; 32];
                let mut eb = [0.0; 32];
                ea[i] = a[i];
                eb[j] = b[j];
                let p = Self::grade_part(&self.gp(&ea, &eb), k);
                for m in 0..32 {
                    out[m] += p[m];
                }
            }
        }
        out
    }

    pub fn outer(&self, a: &Dense, b: &Dense) -> Dense {
        self.graded_product(a, b, |ga, gb| if ga + gb <= 5 { Some(ga + gb) } else { None })
    }

    /// Inner product with the convention that scalar operands give zero.
    pub fn inner(&self, a: &Dense, b: &Dense) -> Dense {
        self.graded_product(a, b, |ga, gb| {
            if ga == 0 || gb == 0 {
                None
            } else {
                Some(ga.abs_diff(gb))
            }
        })
    }

    pub fn reverse(a: &Dense) -> Dense {
        let mut out = *a;
        for i in 0..32 {
            let k = (i as u32).count_ones();
            if (k * (k.saturating_sub(1)) / 2) % 2 == 1 {
                out[i] = -out[i];
            }
        }
        out
    }

    pub fn sandwich(&self, v: &Dense, x: &Dense) -> Dense {
        self.gp(&self.gp(v, x), &Self::reverse(v))
    }

    /// Left-multiplication operator `x -> a x` as a 32 x 32 matrix.
    pub fn left_matrix(&self, a: &Dense) -> Mat32 {
        let mut m = Mat32::zeros();
        for j in 0..32 {
            let mut e = [0.0; 32];
            e[j] = 1.0;
            let col = self.gp(a, &e);
            for i in 0..32 {
                m[(i, j)] = col[i];
            }
        }
        m
    }

    /// `exp(a)` via a scaled-and-squared Taylor series of the left
    /// multiplication matrix applied to the scalar 1.
    pub fn exp(&self, a: &Dense) -> Dense {
        let m = self.left_matrix(a);
        let norm = m.abs().max();
        let mut squarings = 0;
        let mut scale = 1.0;
        while norm * scale > 0.25 {
            scale *= 0.5;
            squarings += 1;
        }
        let ms = m * scale;
        let mut term = Mat32::identity();
        let mut sum = Mat32::identity();
        for k in 1..30 {
            term = term * ms / k as f64;
            sum += term;
        }
        for _ in 0..squarings {
            sum = sum * sum;
        }
        let mut out = [0.0; 32];
        for i in 0..32 {
            out[i] = sum[(i, 0)];
        }
        out
    }
}

pub fn max_abs_diff(a: &Dense, b: &Dense) -> f64 {
    a.iter().zip(b).map(|(x, y)| (x - y).abs()).fold(0.0, f64::max)
}
