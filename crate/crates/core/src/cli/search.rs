//! Exhaustive or sampled search over 1-generator codes.
//!
//! Candidates are generator tuples whose entries have degree at most
//! `max_deg` (and below the block length), numbered in mixed radix with the
//! first coefficient of the first block varying fastest. Only the dimension
//! is used to prune: a candidate is skipped when the incumbent for its
//! dimension already meets the Singleton limit. Every distance in the table
//! is computed by enumeration.

use std::collections::{BTreeMap, HashSet};
use std::time::Instant;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::analysis::{enumerate_weights, FqSubspace, Metric};
use crate::codes::gqc_new;
use crate::error::{Error, Result};
use crate::gf::Field;
use crate::onegen::{distance_lower_bound, OneGenSpec};
use crate::poly::RPoly;
use crate::rring::{RElem, Ring};

#[derive(Clone, Debug)]
pub struct SearchConfig {
    pub field: Field,
    pub blocks: Vec<usize>,
    pub max_deg: usize,
    pub metric: Metric,
    pub budget: u64,
    pub seed: Option<u64>,
    pub cap: usize,
    pub timing: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SearchRow {
    pub blocks: String,
    pub generator: String,
    pub n: usize,
    pub k: usize,
    pub d: usize,
    pub bound: Option<usize>,
    pub time_ms: Option<u128>,
}

#[derive(Clone, Debug, Serialize)]
pub struct SearchTable {
    pub rows: Vec<SearchRow>,
    /// Size of the candidate space.
    pub candidates: u128,
    /// Candidates examined.
    pub examined: u64,
    /// Distinct codes whose distance was computed.
    pub evaluated: u64,
    pub truncated: bool,
}

impl SearchTable {
    pub fn to_csv(&self) -> String {
        let mut s = String::from("blocks,generator,n,k,d,bound,time_ms\n");
        for r in &self.rows {
            let bound = r.bound.map_or(String::new(), |b| b.to_string());
            let t = r.time_ms.map_or(String::new(), |t| t.to_string());
            s.push_str(&format!("\"{}\",\"{}\",{},{},{},{},{}\n", r.blocks, r.generator, r.n, r.k, r.d, bound, t));
        }
        if self.truncated {
            s.push_str(&format!("# truncated: examined {} of {} candidates\n", self.examined, self.candidates));
        }
        s
    }
}

/// Largest possible distance for a code of F_q-dimension k.
fn singleton(metric: Metric, symbols: usize, k: usize) -> usize {
    match metric {
        Metric::Hamming => symbols + 1 - k.div_ceil(2),
        Metric::Lee | Metric::GrayHamming => 2 * symbols + 1 - k,
    }
}

pub fn search(cfg: &SearchConfig) -> Result<SearchTable> {
    cfg.metric.check(&cfg.field)?;
    if cfg.blocks.is_empty() || cfg.blocks.contains(&0) {
        return Err(Error::Precondition("blocks must be nonempty and positive".into()));
    }
    let f = &cfg.field;
    let r = Ring::new(f.clone());
    let elems: Vec<RElem> = r.elements().collect();
    let radix = elems.len() as u128;
    let lens: Vec<usize> = cfg.blocks.iter().map(|&m| m.min(cfg.max_deg + 1)).collect();
    let digits: usize = lens.iter().sum();
    let candidates = (0..digits).try_fold(1u128, |acc, _| acc.checked_mul(radix)).unwrap_or(u128::MAX);
    let symbols: usize = cfg.blocks.iter().sum();

    let decode = |mut idx: u128| -> Vec<RPoly> {
        lens.iter()
            .map(|&len| {
                RPoly::new(
                    (0..len)
                        .map(|_| {
                            let e = elems[(idx % radix) as usize];
                            idx /= radix;
                            e
                        })
                        .collect(),
                )
            })
            .collect()
    };

    let exhaustive = candidates <= cfg.budget as u128;
    let indices: Box<dyn Iterator<Item = u128>> = match (exhaustive, cfg.seed) {
        (true, _) => Box::new(1..candidates),
        (false, Some(seed)) => {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            Box::new((0..cfg.budget).map(move |_| rng.gen_range(1..candidates)))
        }
        (false, None) => Box::new(1..=(cfg.budget as u128).min(candidates - 1)),
    };

    let mut best: BTreeMap<usize, SearchRow> = BTreeMap::new();
    let mut seen: HashSet<FqSubspace> = HashSet::new();
    let (mut examined, mut evaluated) = (0u64, 0u64);
    for idx in indices {
        examined += 1;
        let gen = decode(idx);
        let code = gqc_new(f, &cfg.blocks, vec![gen.clone()])?;
        let span = code.span();
        let k = span.dim();
        if k == 0 || k > cfg.cap || !seen.insert(span.clone()) {
            continue;
        }
        if best.get(&k).is_some_and(|b| b.d >= singleton(cfg.metric, symbols, k)) {
            continue;
        }
        let start = Instant::now();
        let we = enumerate_weights(&span, f, cfg.metric, symbols, cfg.cap)?;
        let d = we.min_distance().expect("nonzero code");
        evaluated += 1;
        if best.get(&k).is_some_and(|b| b.d >= d) {
            continue;
        }
        let bound = OneGenSpec::new(f, &cfg.blocks, gen.clone()).and_then(|s| distance_lower_bound(&s, cfg.metric, cfg.cap)).ok().map(|b| b.bound);
        let time_ms = cfg.timing.then(|| start.elapsed().as_millis());
        let blocks = cfg.blocks.iter().map(|m| m.to_string()).collect::<Vec<_>>().join(",");
        best.insert(k, SearchRow { blocks, generator: code.format_tuple(&gen), n: cfg.metric.length(symbols), k, d, bound, time_ms });
    }
    Ok(SearchTable { rows: best.into_values().collect(), candidates, examined, evaluated, truncated: !exhaustive })
}
