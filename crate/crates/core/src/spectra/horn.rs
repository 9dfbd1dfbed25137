//! Horn triple sets `T_r^n`.
//!
//! `U_r^n` holds the triples `(I, J, K)` of `r`-subsets of `{1..n}` with
//! `|I| + |J| = |K| + r(r+1)/2`, where `|I|` is the sum of the elements.
//! `T_1^n = U_1^n`, and for `r ≥ 2` a triple of `U_r^n` belongs to `T_r^n`
//! when, for every `p < r` and every `(F, G, H) ∈ T_p^r`,
//!
//! ```text
//! Σ_{f∈F} i_f + Σ_{g∈G} j_g ≤ Σ_{h∈H} k_h + p(p+1)/2
//! ```
//!
//! with `i_1 < … < i_r` the elements of `I` (likewise for `J`, `K`).
//! All arithmetic is on integers.

use std::collections::HashMap;
use std::sync::{Arc, OnceLock, RwLock};

use crate::error::{Error, Result};

pub const MAX_HORN_N: usize = 6;

/// Strictly increasing 1-based indices.
pub type IndexSet = Vec<usize>;

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct HornTriple {
    pub i: IndexSet,
    pub j: IndexSet,
    pub k: IndexSet,
}

impl HornTriple {
    pub fn new(i: IndexSet, j: IndexSet, k: IndexSet) -> Self {
        Self { i, j, k }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HornTripleSet {
    pub n: usize,
    pub r: usize,
    pub triples: Vec<HornTriple>,
}

impl HornTripleSet {
    pub fn len(&self) -> usize {
        self.triples.len()
    }

    pub fn is_empty(&self) -> bool {
        self.triples.is_empty()
    }

    pub fn contains(&self, t: &HornTriple) -> bool {
        self.triples.binary_search(t).is_ok()
    }
}

pub fn weight(s: &[usize]) -> usize {
    s.iter().sum()
}

/// All `r`-subsets of `{1..n}` in lexicographic order.
pub fn subsets(n: usize, r: usize) -> Vec<IndexSet> {
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(r);
    fn rec(start: usize, n: usize, r: usize, cur: &mut Vec<usize>, out: &mut Vec<IndexSet>) {
        if cur.len() == r {
            out.push(cur.clone());
            return;
        }
        for x in start..=n {
            if n - x + 1 < r - cur.len() {
                break;
            }
            cur.push(x);
            rec(x + 1, n, r, cur, out);
            cur.pop();
        }
    }
    rec(1, n, r, &mut cur, &mut out);
    out
}

/// `U_r^n` in lexicographic order.
pub fn u_set(n: usize, r: usize) -> Vec<HornTriple> {
    let subs = subsets(n, r);
    let offset = r * (r + 1) / 2;
    let mut out = Vec::new();
    for i in &subs {
        for j in &subs {
            let target = weight(i) + weight(j);
            if target < offset {
                continue;
            }
            for k in &subs {
                if weight(k) + offset == target {
                    out.push(HornTriple::new(i.clone(), j.clone(), k.clone()));
                }
            }
        }
    }
    out
}

fn inner_condition_holds(t: &HornTriple, p: usize, base: &[HornTriple]) -> bool {
    let offset = p * (p + 1) / 2;
    base.iter().all(|fgh| {
        let lhs: usize = fgh.i.iter().map(|&f| t.i[f - 1]).sum::<usize>()
            + fgh.j.iter().map(|&g| t.j[g - 1]).sum::<usize>();
        let rhs: usize = fgh.k.iter().map(|&h| t.k[h - 1]).sum::<usize>() + offset;
        lhs <= rhs
    })
}

type HornCache = RwLock<HashMap<(usize, usize), Arc<HornTripleSet>>>;

fn cache() -> &'static HornCache {
    static CACHE: OnceLock<HornCache> = OnceLock::new();
    CACHE.get_or_init(|| RwLock::new(HashMap::new()))
}

/// `T_r^n` for `1 ≤ r < n ≤ 6`, in lexicographic order.
pub fn horn_sets(n: usize, r: usize) -> Result<Arc<HornTripleSet>> {
    if !(1 <= r && r < n && n <= MAX_HORN_N) {
        return Err(Error::InvalidArgument(format!(
            "horn sets need 1 <= r < n <= {MAX_HORN_N}, got n = {n}, r = {r}"
        )));
    }
    if let Some(hit) = cache().read().expect("horn cache poisoned").get(&(n, r)) {
        return Ok(Arc::clone(hit));
    }
    let mut triples = u_set(n, r);
    if r >= 2 {
        let bases: Vec<(usize, Arc<HornTripleSet>)> = (1..r)
            .map(|p| horn_sets(r, p).map(|s| (p, s)))
            .collect::<Result<_>>()?;
        triples.retain(|t| {
            bases
                .iter()
                .all(|(p, base)| inner_condition_holds(t, *p, &base.triples))
        });
    }
    let set = Arc::new(HornTripleSet { n, r, triples });
    cache()
        .write()
        .expect("horn cache poisoned")
        .entry((n, r))
        .or_insert_with(|| Arc::clone(&set));
    Ok(set)
}
