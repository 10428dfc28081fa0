//! Product plans: the flattened list of coefficient multiplications needed to
//! evaluate one product between two blade sets.
//!
//! A plan is built by folding the Cayley table over every blade pair of the
//! operands. The resulting blade set is the OR of all table results, further
//! restricted to an optional output filter so that blades outside a declared
//! subspace are never evaluated. Plans are cached per
//! `(product, lhs, rhs, filter)` key and shared between threads.

use std::collections::HashMap;
use std::sync::{Arc, OnceLock, RwLock};

use super::blade::BladeSet;
use super::cayley::{tables, Product};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub(crate) struct PlanTerm {
    pub lhs: u8,
    pub rhs: u8,
    pub out: u8,
    pub negate: bool,
}

#[derive(Debug)]
pub(crate) struct ProductPlan {
    pub out: BladeSet,
    pub terms: Vec<PlanTerm>,
}

type PlanKey = (Product, u32, u32, u32);

fn cache() -> &'static RwLock<HashMap<PlanKey, Arc<ProductPlan>>> {
    static CACHE: OnceLock<RwLock<HashMap<PlanKey, Arc<ProductPlan>>>> = OnceLock::new();
    CACHE.get_or_init(Default::default)
}

/// Blade set of `lhs (op) rhs` as predicted by the Cayley table.
pub fn result_blades(product: Product, lhs: BladeSet, rhs: BladeSet) -> BladeSet {
    let table = tables().table(product);
    let mut out = BladeSet::EMPTY;
    for a in lhs.iter() {
        for b in rhs.iter() {
            for t in table.entry(a, b) {
                out = out.union(BladeSet::single(t.blade));
            }
        }
    }
    out
}

fn build(product: Product, lhs: BladeSet, rhs: BladeSet, filter: BladeSet) -> ProductPlan {
    let table = tables().table(product);
    let out = result_blades(product, lhs, rhs).intersection(filter);
    let mut terms = Vec::new();
    for (ia, a) in lhs.iter().enumerate() {
        for (ib, b) in rhs.iter().enumerate() {
            for t in table.entry(a, b) {
                if let Some(io) = out.position(t.blade) {
                    terms.push(PlanTerm {
                        lhs: ia as u8,
                        rhs: ib as u8,
                        out: io as u8,
                        negate: t.sign < 0,
                    });
                }
            }
        }
    }
    ProductPlan { out, terms }
}

pub(crate) fn plan(
    product: Product,
    lhs: BladeSet,
    rhs: BladeSet,
    filter: BladeSet,
) -> Arc<ProductPlan> {
    let key = (product, lhs.mask(), rhs.mask(), filter.mask());
    if let Some(p) = cache().read().expect("plan cache poisoned").get(&key) {
        return Arc::clone(p);
    }
    let built = Arc::new(build(product, lhs, rhs, filter));
    let mut guard = cache().write().expect("plan cache poisoned");
    Arc::clone(guard.entry(key).or_insert(built))
}
