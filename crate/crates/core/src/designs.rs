//! Simple incidence designs on indexed point sets: canonical block lists,
//! complement designs, exhaustive t-design verification, and the Steiner
//! and complete-design predicates.

use alloc::collections::BTreeSet;
use alloc::string::String;
use alloc::vec::Vec;

use num_bigint::BigUint;

use crate::codes::binomial;
use crate::error::{Error, Result};

/// A simple design: v points 0..v−1 and a deduplicated, sorted list of
/// sorted blocks. Optional labels name the points for presentation.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Design {
    pub v: u16,
    pub blocks: Vec<Vec<u16>>,
    pub labels: Option<Vec<String>>,
}

/// Outcome of the exhaustive t-subset count.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum LambdaResult {
    Uniform(u64),
    /// First t-set in lex order together with the first later t-set whose
    /// count differs.
    Nonuniform {
        a: Vec<u16>,
        count_a: u64,
        b: Vec<u16>,
        count_b: u64,
    },
}

impl Design {
    pub fn new(v: u16, blocks: Vec<Vec<u16>>) -> Result<Self> {
        let mut canon: Vec<Vec<u16>> = Vec::with_capacity(blocks.len());
        for mut b in blocks {
            b.sort_unstable();
            if b.windows(2).any(|w| w[0] == w[1]) {
                return Err(Error::BadParameter(String::from(
                    "block contains a repeated point",
                )));
            }
            if let Some(&bad) = b.iter().find(|&&i| i >= v) {
                return Err(Error::BlockOutOfRange { index: bad, v });
            }
            canon.push(b);
        }
        canon.sort_unstable();
        canon.dedup();
        Ok(Design {
            v,
            blocks: canon,
            labels: None,
        })
    }

    pub fn with_labels(mut self, labels: Vec<String>) -> Result<Self> {
        if labels.len() != self.v as usize {
            return Err(Error::BadParameter(String::from(
                "label count must equal the point count",
            )));
        }
        self.labels = Some(labels);
        Ok(self)
    }

    /// Replaces every block by its complement in {0,…,v−1}; an involution.
    pub fn complement(&self) -> Design {
        let blocks = self
            .blocks
            .iter()
            .map(|b| {
                let inside: BTreeSet<u16> = b.iter().copied().collect();
                (0..self.v).filter(|i| !inside.contains(i)).collect()
            })
            .collect();
        let mut d = Design {
            v: self.v,
            blocks,
            labels: self.labels.clone(),
        };
        d.blocks.sort_unstable();
        d
    }

    /// Counts, for every t-subset of points, the blocks containing it.
    /// Requires constant block size k ≥ t; exhaustive over all C(v,t)
    /// subsets in lex order.
    pub fn t_design_lambda(&self, t: usize) -> Result<LambdaResult> {
        if self.blocks.is_empty() {
            return Err(Error::BadParameter(String::from("design has no blocks")));
        }
        let k = self.blocks[0].len();
        if self.blocks.iter().any(|b| b.len() != k) {
            return Err(Error::MixedBlockSizes);
        }
        if t == 0 || t > k {
            return Err(Error::InvalidT { t, k });
        }
        let mut subset: Vec<u16> = (0..t as u16).collect();
        let mut first: Option<(Vec<u16>, u64)> = None;
        loop {
            let count = self
                .blocks
                .iter()
                .filter(|b| contains_sorted(b, &subset))
                .count() as u64;
            match &first {
                None => first = Some((subset.clone(), count)),
                Some((a, ca)) if *ca != count => {
                    return Ok(LambdaResult::Nonuniform {
                        a: a.clone(),
                        count_a: *ca,
                        b: subset,
                        count_b: count,
                    })
                }
                _ => {}
            }
            // next t-subset of {0,…,v−1} in lex order
            let mut i = t;
            loop {
                if i == 0 {
                    let (_, ca) = first.expect("at least one subset was counted");
                    return Ok(LambdaResult::Uniform(ca));
                }
                i -= 1;
                if subset[i] < self.v - (t - i) as u16 {
                    subset[i] += 1;
                    for j in i + 1..t {
                        subset[j] = subset[j - 1] + 1;
                    }
                    break;
                }
            }
        }
    }

    pub fn is_steiner(&self, t: usize) -> Result<bool> {
        Ok(self.t_design_lambda(t)? == LambdaResult::Uniform(1))
    }

    /// True iff the blocks are exactly all w-subsets of the points.
    pub fn is_complete(&self, w: usize) -> bool {
        self.blocks.iter().all(|b| b.len() == w)
            && BigUint::from(self.blocks.len()) == binomial(self.v as u64, w as u64)
    }
}

fn contains_sorted(block: &[u16], subset: &[u16]) -> bool {
    let mut it = block.iter();
    subset.iter().all(|s| it.any(|b| b == s))
}
