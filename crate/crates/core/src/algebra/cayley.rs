//! Cayley tables for the geometric, outer and inner products.
//!
//! The null basis `{e0, e1, e2, e3, einf}` has a non-diagonal metric
//! (`e0 . einf = -1`), so the tables are generated in the diagonal basis
//! `{e1, e2, e3, e+, e-}` with signature `(+, +, +, +, -)` and converted back
//! through `einf = e- + e+` and `e0 = (e- - e+) / 2`. The outer and inner
//! tables are grade projections of the geometric table.

use std::sync::OnceLock;

use super::blade::{grade, BLADE_COUNT};

/// One signed result blade of a blade-by-blade product.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Term {
    pub blade: u8,
    pub sign: i8,
}

/// Which bilinear product a table encodes.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Product {
    Geometric,
    Outer,
    Inner,
}

/// Blade-pair product table, 32 x 32 entries.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CayleyTable {
    offsets: Vec<u16>,
    terms: Vec<Term>,
}

impl CayleyTable {
    fn from_entries(entries: &[Vec<Term>]) -> Self {
        debug_assert_eq!(entries.len(), BLADE_COUNT * BLADE_COUNT);
        let mut offsets = Vec::with_capacity(entries.len() + 1);
        let mut terms = Vec::new();
        offsets.push(0);
        for e in entries {
            terms.extend_from_slice(e);
            offsets.push(terms.len() as u16);
        }
        CayleyTable { offsets, terms }
    }

    /// Result terms for the product of blade `a` with blade `b`.
    #[inline]
    pub fn entry(&self, a: u8, b: u8) -> &[Term] {
        let i = a as usize * BLADE_COUNT + b as usize;
        &self.terms[self.offsets[i] as usize..self.offsets[i + 1] as usize]
    }

    /// Number of blade pairs in the table (always 1024).
    pub fn len(&self) -> usize {
        self.offsets.len() - 1
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }
}

/// The three product tables of the algebra.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CayleyTables {
    pub geometric: CayleyTable,
    pub outer: CayleyTable,
    pub inner: CayleyTable,
}

impl CayleyTables {
    pub fn table(&self, product: Product) -> &CayleyTable {
        match product {
            Product::Geometric => &self.geometric,
            Product::Outer => &self.outer,
            Product::Inner => &self.inner,
        }
    }
}

/// Process-wide tables, generated on first use.
pub fn tables() -> &'static CayleyTables {
    static TABLES: OnceLock<CayleyTables> = OnceLock::new();
    TABLES.get_or_init(generate_cayley_tables)
}

// Diagonal-basis metric for (e1, e2, e3, e+, e-).
const METRIC: [f64; 5] = [1.0, 1.0, 1.0, 1.0, -1.0];

type Dense = [f64; BLADE_COUNT];

/// Sign of reordering the concatenation `a b` of two sorted factor lists into
/// canonical ascending order.
fn reorder_sign(a: u8, b: u8) -> f64 {
    let mut swaps = 0;
    let mut a = a >> 1;
    while a != 0 {
        swaps += (a & b).count_ones();
        a >>= 1;
    }
    if swaps % 2 == 0 {
        1.0
    } else {
        -1.0
    }
}

/// Geometric product of two blades in the diagonal basis.
fn diagonal_product(a: u8, b: u8) -> (u8, f64) {
    let mut sign = reorder_sign(a, b);
    let common = a & b;
    for (bit, m) in METRIC.iter().enumerate() {
        if common & (1 << bit) != 0 {
            sign *= m;
        }
    }
    (a ^ b, sign)
}

/// Outer product of the given vectors, each expressed in some 5-vector target
/// basis, expanded over the target basis blades. Metric free.
fn wedge_expand(vectors: &[[f64; 5]]) -> Dense {
    let mut acc = [0.0; BLADE_COUNT];
    acc[0] = 1.0;
    for v in vectors {
        let mut next = [0.0; BLADE_COUNT];
        for (blade, &c) in acc.iter().enumerate() {
            if c == 0.0 {
                continue;
            }
            for (j, &vj) in v.iter().enumerate() {
                let bit = 1u8 << j;
                if vj == 0.0 || blade as u8 & bit != 0 {
                    continue;
                }
                let out = blade as u8 | bit;
                next[out as usize] += c * vj * reorder_sign(blade as u8, bit);
            }
        }
        acc = next;
    }
    acc
}

fn factors(blade: u8, basis: &[[f64; 5]; 5]) -> Vec<[f64; 5]> {
    (0..5).filter(|j| blade & (1 << j) != 0).map(|j| basis[j]).collect()
}

/// Generates the geometric, outer and inner product tables.
///
/// Deterministic; every non-zero coefficient is an integer (in practice +-1).
pub fn generate_cayley_tables() -> CayleyTables {
    // null basis vectors in diagonal coordinates
    let null_in_diag: [[f64; 5]; 5] = [
        [0.0, 0.0, 0.0, -0.5, 0.5], // e0 = (e- - e+) / 2
        [1.0, 0.0, 0.0, 0.0, 0.0],
        [0.0, 1.0, 0.0, 0.0, 0.0],
        [0.0, 0.0, 1.0, 0.0, 0.0],
        [0.0, 0.0, 0.0, 1.0, 1.0], // einf = e- + e+
    ];
    // diagonal basis vectors in null coordinates
    let diag_in_null: [[f64; 5]; 5] = [
        [0.0, 1.0, 0.0, 0.0, 0.0],
        [0.0, 0.0, 1.0, 0.0, 0.0],
        [0.0, 0.0, 0.0, 1.0, 0.0],
        [-1.0, 0.0, 0.0, 0.0, 0.5], // e+ = einf / 2 - e0
        [1.0, 0.0, 0.0, 0.0, 0.5],  // e- = einf / 2 + e0
    ];

    let to_diag: Vec<Dense> = (0..BLADE_COUNT as u8)
        .map(|b| wedge_expand(&factors(b, &null_in_diag)))
        .collect();
    let to_null: Vec<Dense> = (0..BLADE_COUNT as u8)
        .map(|b| wedge_expand(&factors(b, &diag_in_null)))
        .collect();

    let mut geometric = Vec::with_capacity(BLADE_COUNT * BLADE_COUNT);
    let mut outer = Vec::with_capacity(BLADE_COUNT * BLADE_COUNT);
    let mut inner = Vec::with_capacity(BLADE_COUNT * BLADE_COUNT);

    for a in 0..BLADE_COUNT as u8 {
        for b in 0..BLADE_COUNT as u8 {
            let mut diag = [0.0; BLADE_COUNT];
            for (i, &ca) in to_diag[a as usize].iter().enumerate() {
                if ca == 0.0 {
                    continue;
                }
                for (j, &cb) in to_diag[b as usize].iter().enumerate() {
                    if cb == 0.0 {
                        continue;
                    }
                    let (k, s) = diagonal_product(i as u8, j as u8);
                    diag[k as usize] += s * ca * cb;
                }
            }
            let mut null = [0.0; BLADE_COUNT];
            for (k, &c) in diag.iter().enumerate() {
                if c == 0.0 {
                    continue;
                }
                for (m, &t) in to_null[k].iter().enumerate() {
                    null[m] += c * t;
                }
            }

            let terms: Vec<Term> = null
                .iter()
                .enumerate()
                .filter(|(_, c)| c.abs() > 1e-9)
                .map(|(m, &c)| {
                    let r = c.round();
                    assert!(
                        (c - r).abs() < 1e-9 && r.abs() <= i8::MAX as f64,
                        "non-integral Cayley coefficient {c}"
                    );
                    Term { blade: m as u8, sign: r as i8 }
                })
                .collect();

            let (ga, gb) = (grade(a), grade(b));
            outer.push(
                terms.iter().copied().filter(|t| grade(t.blade) == ga + gb).collect(),
            );
            inner.push(if ga == 0 || gb == 0 {
                Vec::new()
            } else {
                terms
                    .iter()
                    .copied()
                    .filter(|t| grade(t.blade) == ga.abs_diff(gb))
                    .collect()
            });
            geometric.push(terms);
        }
    }

    CayleyTables {
        geometric: CayleyTable::from_entries(&geometric),
        outer: CayleyTable::from_entries(&outer),
        inner: CayleyTable::from_entries(&inner),
    }
}
