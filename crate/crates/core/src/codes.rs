//! Exact linear-code engine over a subfield alphabet: full message
//! enumeration with mergeable range scans, weight enumerators, minimum
//! supports with the scalar-class quotient, constacyclicity and MDS checks,
//! and the exact-support count formula for MDS codes.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use num_bigint::{BigInt, BigUint, Sign};
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::gf::{FieldCtx, FieldElem};
use crate::linalg::{nullspace, rank, RowSpace};

/// Default cap on full-space enumerations (message count Q^k).
pub const DEFAULT_ENUM_BUDGET: u64 = 100_000_000;

/// Alphabets are materialized for enumeration; sizes beyond this are
/// rejected outright.
const MAX_ALPHABET: u64 = 1 << 16;

/// A k-dimensional length-n code over the subfield F_Q of the ambient
/// field, held by a generator matrix with independent rows. Entries live in
/// the ambient field but are validated to lie in the alphabet.
#[derive(Clone, Debug)]
pub struct LinearCode {
    ctx: FieldCtx,
    alphabet_q: u64,
    alphabet: Vec<FieldElem>,
    n: usize,
    k: usize,
    generator: Vec<Vec<FieldElem>>,
    multiplier: Option<FieldElem>,
}

impl LinearCode {
    /// `multiplier` is an optional constacyclic tag λ ∈ F_Q*; it is
    /// validated here and asserted by [`LinearCode::is_constacyclic`].
    pub fn new(
        ctx: &FieldCtx,
        alphabet_q: u64,
        generator: Vec<Vec<FieldElem>>,
        multiplier: Option<FieldElem>,
    ) -> Result<Self> {
        if alphabet_q > MAX_ALPHABET {
            return Err(Error::AlphabetTooLarge(alphabet_q));
        }
        let alphabet = ctx.subfield_elements(alphabet_q)?;
        let k = generator.len();
        if k == 0 {
            return Err(Error::BadParameter(String::from(
                "generator must have at least one row",
            )));
        }
        let n = generator[0].len();
        if n == 0 || generator.iter().any(|r| r.len() != n) {
            return Err(Error::BadParameter(String::from(
                "generator rows must be nonempty and of equal length",
            )));
        }
        if n > u16::MAX as usize {
            return Err(Error::BadParameter(format!("length {n} too large")));
        }
        for row in &generator {
            for &e in row {
                if !ctx.is_in_subfield(e, alphabet_q)? {
                    return Err(Error::EntryOutsideAlphabet);
                }
            }
        }
        if rank(ctx, &generator) != k {
            return Err(Error::DependentRows);
        }
        if let Some(l) = multiplier {
            if l.is_zero() || !ctx.is_in_subfield(l, alphabet_q)? {
                return Err(Error::InvalidMultiplier);
            }
        }
        Ok(LinearCode {
            ctx: ctx.clone(),
            alphabet_q,
            alphabet,
            n,
            k,
            generator,
            multiplier,
        })
    }

    pub fn ctx(&self) -> &FieldCtx {
        &self.ctx
    }

    pub fn alphabet_q(&self) -> u64 {
        self.alphabet_q
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn generator(&self) -> &[Vec<FieldElem>] {
        &self.generator
    }

    pub fn multiplier(&self) -> Option<FieldElem> {
        self.multiplier
    }

    /// Q^k, the number of messages.
    pub fn message_count(&self) -> u128 {
        (self.alphabet_q as u128)
            .checked_pow(self.k as u32)
            .unwrap_or(u128::MAX)
    }

    pub fn check_budget(&self, budget: u64) -> Result<()> {
        let needed = self.message_count();
        if needed > budget as u128 {
            return Err(Error::BudgetExceeded { needed, budget });
        }
        Ok(())
    }

    /// Message at index m: base-Q digits of m over the alphabet's canonical
    /// element order, most significant digit first.
    pub fn message(&self, m: u64) -> Vec<FieldElem> {
        let mut digits = alloc::vec![0u64; self.k];
        let mut rest = m;
        for i in (0..self.k).rev() {
            digits[i] = rest % self.alphabet_q;
            rest /= self.alphabet_q;
        }
        digits.iter().map(|&d| self.alphabet[d as usize]).collect()
    }

    pub fn codeword(&self, m: u64) -> Vec<FieldElem> {
        let msg = self.message(m);
        let mut word = alloc::vec![self.ctx.zero(); self.n];
        for (u, row) in msg.iter().zip(&self.generator) {
            for (w, &g) in word.iter_mut().zip(row) {
                *w = self.ctx.add(*w, self.ctx.mul(*u, g));
            }
        }
        word
    }

    /// Scans message indices in [start, end), in index order. Results from
    /// disjoint ranges merge associatively, so callers may partition the
    /// space. Range bounds are validated; the budget guard applies only to
    /// the whole-space wrappers.
    pub fn scan_range(
        &self,
        start: u64,
        end: u64,
        fixed_weight: Option<usize>,
    ) -> Result<ScanResult> {
        if (end as u128) > self.message_count() || start > end {
            return Err(Error::BadParameter(format!(
                "scan range {start}..{end} exceeds the message space"
            )));
        }
        let mut result = ScanResult::empty(self.n, fixed_weight);
        if start == end {
            return Ok(result);
        }
        // per-row scaled copies: scaled[i][a] = alphabet[a] * row_i
        let q = self.alphabet_q as usize;
        let scaled: Vec<Vec<Vec<FieldElem>>> = self
            .generator
            .iter()
            .map(|row| {
                self.alphabet
                    .iter()
                    .map(|&a| row.iter().map(|&g| self.ctx.mul(a, g)).collect())
                    .collect()
            })
            .collect();
        // digit odometer with prefix sums: prefix[i] = sum of the first i
        // scaled rows; the codeword is prefix[k]
        let mut digits = alloc::vec![0usize; self.k];
        let mut rest = start;
        for i in (0..self.k).rev() {
            digits[i] = (rest % self.alphabet_q) as usize;
            rest /= self.alphabet_q;
        }
        let zero_row = alloc::vec![self.ctx.zero(); self.n];
        let mut prefix: Vec<Vec<FieldElem>> = alloc::vec![zero_row; self.k + 1];
        for i in 0..self.k {
            prefix[i + 1] = add_rows(&self.ctx, &prefix[i], &scaled[i][digits[i]]);
        }
        let mut m = start;
        loop {
            result.record(m, &prefix[self.k])?;
            m += 1;
            if m == end {
                break;
            }
            // advance the odometer; `pos` is the highest digit that changed
            let mut pos = self.k - 1;
            loop {
                digits[pos] += 1;
                if digits[pos] < q {
                    break;
                }
                digits[pos] = 0;
                pos -= 1;
            }
            for i in pos..self.k {
                prefix[i + 1] = add_rows(&self.ctx, &prefix[i], &scaled[i][digits[i]]);
            }
        }
        Ok(result)
    }

    /// Whole-space scan under the budget guard.
    pub fn scan(&self, fixed_weight: Option<usize>, budget: u64) -> Result<ScanResult> {
        self.check_budget(budget)?;
        self.scan_range(0, self.message_count() as u64, fixed_weight)
    }

    pub fn enumerate_weights(&self, budget: u64) -> Result<WeightEnum> {
        let scan = self.scan(None, budget)?;
        Ok(self.weights_from_scan(&scan))
    }

    /// Weight distribution view of a finished whole-space scan.
    pub fn weights_from_scan(&self, scan: &ScanResult) -> WeightEnum {
        let mut counts = BTreeMap::new();
        for (w, &c) in scan.tallies.iter().enumerate() {
            if c > 0 {
                counts.insert(w, BigUint::from(c));
            }
        }
        let we = WeightEnum { counts };
        debug_assert_eq!(we.total(), BigUint::from(self.message_count()));
        we
    }

    /// Distinct supports of the minimum-weight words. Their number must be
    /// A_d/(Q−1): two minimum words with equal support are proportional, so
    /// supports partition the minimum words into scalar classes of size Q−1.
    pub fn minimum_supports(&self, budget: u64) -> Result<SupportSet> {
        let scan = self.scan(None, budget)?;
        self.min_supports_from_scan(&scan)
    }

    /// Minimum-support view of a finished whole-space scan, with the
    /// scalar-class quotient law asserted.
    pub fn min_supports_from_scan(&self, scan: &ScanResult) -> Result<SupportSet> {
        let d = scan
            .min_weight
            .ok_or_else(|| Error::Invariant(String::from("no nonzero codeword found")))?;
        let a_d = scan.tallies[d];
        let classes = a_d / (self.alphabet_q - 1);
        if !a_d.is_multiple_of(self.alphabet_q - 1) || scan.min_supports.len() as u64 != classes {
            return Err(Error::ScalarClassMismatch {
                min_words: a_d,
                q: self.alphabet_q,
            });
        }
        Ok(SupportSet {
            n: self.n,
            sets: scan.min_supports.iter().cloned().collect(),
        })
    }

    /// Complements of the minimum supports in {0,…,n−1}.
    pub fn minimum_zero_sets(&self, budget: u64) -> Result<SupportSet> {
        Ok(self.minimum_supports(budget)?.complement())
    }

    /// Distinct supports of the weight-w words, with the number of words on
    /// each support.
    pub fn supports_at_weight(&self, w: usize, budget: u64) -> Result<BTreeMap<Vec<u16>, u64>> {
        if w == 0 || w > self.n {
            return Err(Error::BadParameter(format!(
                "weight {w} outside 1..={}",
                self.n
            )));
        }
        let scan = self.scan(Some(w), budget)?;
        Ok(scan.fixed_supports)
    }

    /// True iff every w-subset of coordinates is the exact support of some
    /// codeword, i.e. the weight-w support family is the complete design.
    pub fn support_saturation(&self, w: usize, budget: u64) -> Result<bool> {
        let supports = self.supports_at_weight(w, budget)?;
        Ok(BigUint::from(supports.len()) == binomial(self.n as u64, w as u64))
    }

    /// True iff τ_λ maps the code into itself, where
    /// τ_λ(c₀,…,c_{n−1}) = (c₁,…,c_{n−1},λc₀); checked on the generator
    /// rows against the row space.
    pub fn is_constacyclic(&self, lambda: FieldElem) -> Result<bool> {
        if lambda.is_zero() || !self.ctx.is_in_subfield(lambda, self.alphabet_q)? {
            return Err(Error::InvalidMultiplier);
        }
        let space = RowSpace::new(&self.ctx, &self.generator);
        for row in &self.generator {
            let mut shifted: Vec<FieldElem> = row[1..].to_vec();
            shifted.push(self.ctx.mul(lambda, row[0]));
            if !space.contains(&self.ctx, &shifted) {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// MDS test: every k-subset of generator columns is independent
    /// (equivalent to d = n−k+1). When the message space fits the budget the
    /// verdict is cross-checked against the enumerated minimum weight.
    pub fn is_mds(&self, budget: u64) -> Result<bool> {
        let mut cols = alloc::vec![0usize; self.k];
        let verdict = self.column_subsets_independent(&mut cols, 0, 0);
        if self.message_count() <= budget as u128 {
            let scan = self.scan(None, budget)?;
            let enumerated = scan.min_weight == Some(self.n - self.k + 1);
            if enumerated != verdict {
                return Err(Error::Invariant(String::from(
                    "rank-based and enumerated MDS verdicts disagree",
                )));
            }
        }
        Ok(verdict)
    }

    fn column_subsets_independent(&self, cols: &mut [usize], depth: usize, from: usize) -> bool {
        if depth == self.k {
            let rows: Vec<Vec<FieldElem>> = self
                .generator
                .iter()
                .map(|r| cols.iter().map(|&c| r[c]).collect())
                .collect();
            return rank(&self.ctx, &rows) == self.k;
        }
        for c in from..=(self.n - (self.k - depth)) {
            cols[depth] = c;
            if !self.column_subsets_independent(cols, depth + 1, c + 1) {
                return false;
            }
        }
        true
    }

    /// Exact number of codewords whose support equals the given coordinate
    /// set, via the solution space of "all outside coordinates vanish"
    /// (dimension small for the supports of interest). No full enumeration.
    pub fn exact_support_count_on(&self, support: &[u16]) -> Result<u64> {
        let set: BTreeSet<u16> = support.iter().copied().collect();
        if set.len() != support.len() || support.is_empty() {
            return Err(Error::BadParameter(String::from(
                "support must be a nonempty set",
            )));
        }
        if set.iter().any(|&i| i as usize >= self.n) {
            return Err(Error::BadParameter(String::from(
                "support index out of range",
            )));
        }
        // left kernel on the outside columns: u with (uG)_j = 0 for j not
        // in the support
        let outside_t: Vec<Vec<FieldElem>> = (0..self.n)
            .filter(|j| !set.contains(&(*j as u16)))
            .map(|j| self.generator.iter().map(|r| r[j]).collect())
            .collect();
        let basis = if outside_t.is_empty() {
            // whole message space
            (0..self.k)
                .map(|i| {
                    let mut e = alloc::vec![self.ctx.zero(); self.k];
                    e[i] = self.ctx.one();
                    e
                })
                .collect()
        } else {
            nullspace(&self.ctx, &outside_t)
        };
        let dim = basis.len() as u32;
        let combos = (self.alphabet_q as u128)
            .checked_pow(dim)
            .unwrap_or(u128::MAX);
        if combos > 1 << 24 {
            return Err(Error::BudgetExceeded {
                needed: combos,
                budget: 1 << 24,
            });
        }
        let mut count = 0u64;
        let mut digits = alloc::vec![0usize; dim as usize];
        'outer: loop {
            // u = sum digits[i] * basis[i]; count it if uG has full support
            // on the set
            let mut u = alloc::vec![self.ctx.zero(); self.k];
            for (i, &d) in digits.iter().enumerate() {
                let a = self.alphabet[d];
                for (uj, &bj) in u.iter_mut().zip(&basis[i]) {
                    *uj = self.ctx.add(*uj, self.ctx.mul(a, bj));
                }
            }
            let full = set.iter().all(|&j| {
                let mut e = self.ctx.zero();
                for (ui, row) in u.iter().zip(&self.generator) {
                    e = self.ctx.add(e, self.ctx.mul(*ui, row[j as usize]));
                }
                !e.is_zero()
            });
            if full {
                count += 1;
            }
            let mut pos = dim as usize;
            loop {
                if pos == 0 {
                    break 'outer;
                }
                digits[pos - 1] += 1;
                if digits[pos - 1] < self.alphabet_q as usize {
                    break;
                }
                digits[pos - 1] = 0;
                pos -= 1;
            }
        }
        Ok(count)
    }
}

fn add_rows(ctx: &FieldCtx, a: &[FieldElem], b: &[FieldElem]) -> Vec<FieldElem> {
    a.iter().zip(b).map(|(&x, &y)| ctx.add(x, y)).collect()
}

/// Mergeable result of a message-range scan.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ScanResult {
    /// tallies[w] = number of scanned codewords of weight w.
    pub tallies: Vec<u64>,
    /// Least nonzero weight seen.
    pub min_weight: Option<usize>,
    /// Supports of the words attaining `min_weight`.
    pub min_supports: BTreeSet<Vec<u16>>,
    /// Smallest message index attaining `min_weight`.
    pub min_witness: Option<u64>,
    /// The fixed target weight, if one was requested.
    pub fixed_weight: Option<usize>,
    /// support → word count at the fixed target weight.
    pub fixed_supports: BTreeMap<Vec<u16>, u64>,
}

impl ScanResult {
    fn empty(n: usize, fixed_weight: Option<usize>) -> Self {
        ScanResult {
            tallies: alloc::vec![0; n + 1],
            min_weight: None,
            min_supports: BTreeSet::new(),
            min_witness: None,
            fixed_weight,
            fixed_supports: BTreeMap::new(),
        }
    }

    fn record(&mut self, index: u64, word: &[FieldElem]) -> Result<()> {
        let support: Vec<u16> = word
            .iter()
            .enumerate()
            .filter(|(_, e)| !e.is_zero())
            .map(|(i, _)| i as u16)
            .collect();
        let w = support.len();
        self.tallies[w] = self.tallies[w].checked_add(1).ok_or(Error::TallyOverflow)?;
        if w > 0 && self.min_weight.is_none_or(|m| w <= m) {
            if self.min_weight != Some(w) {
                self.min_weight = Some(w);
                self.min_supports.clear();
                self.min_witness = None;
            }
            self.min_supports.insert(support.clone());
            if self.min_witness.is_none_or(|i| index < i) {
                self.min_witness = Some(index);
            }
        }
        if self.fixed_weight == Some(w) {
            *self.fixed_supports.entry(support).or_insert(0) += 1;
        }
        Ok(())
    }

    /// Combines results of disjoint ranges; associative and commutative.
    pub fn merge(mut self, other: ScanResult) -> Result<ScanResult> {
        if self.tallies.len() != other.tallies.len() || self.fixed_weight != other.fixed_weight {
            return Err(Error::BadParameter(String::from(
                "merging scans of different codes or targets",
            )));
        }
        for (t, &o) in self.tallies.iter_mut().zip(&other.tallies) {
            *t = t.checked_add(o).ok_or(Error::TallyOverflow)?;
        }
        match (self.min_weight, other.min_weight) {
            (Some(a), Some(b)) if a == b => {
                self.min_supports.extend(other.min_supports);
                self.min_witness = self.min_witness.min(other.min_witness);
            }
            (None, Some(_)) | (Some(_), Some(_))
                if other.min_weight < self.min_weight || self.min_weight.is_none() =>
            {
                self.min_weight = other.min_weight;
                self.min_supports = other.min_supports;
                self.min_witness = other.min_witness;
            }
            _ => {}
        }
        for (s, c) in other.fixed_supports {
            let e = self.fixed_supports.entry(s).or_insert(0);
            *e = e.checked_add(c).ok_or(Error::TallyOverflow)?;
        }
        Ok(self)
    }
}

/// Weight distribution with arbitrary-precision counts.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct WeightEnum {
    pub counts: BTreeMap<usize, BigUint>,
}

impl WeightEnum {
    pub fn count(&self, w: usize) -> BigUint {
        self.counts.get(&w).cloned().unwrap_or_else(BigUint::zero)
    }

    pub fn total(&self) -> BigUint {
        self.counts.values().sum()
    }

    pub fn min_nonzero_weight(&self) -> Option<usize> {
        self.counts.keys().copied().find(|&w| w > 0)
    }
}

/// A deduplicated list of coordinate subsets of {0,…,n−1}.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct SupportSet {
    pub n: usize,
    pub sets: Vec<Vec<u16>>,
}

impl SupportSet {
    pub fn complement(&self) -> SupportSet {
        let sets = self
            .sets
            .iter()
            .map(|s| {
                let inside: BTreeSet<u16> = s.iter().copied().collect();
                (0..self.n as u16).filter(|i| !inside.contains(i)).collect()
            })
            .collect();
        SupportSet { n: self.n, sets }
    }

    pub fn len(&self) -> usize {
        self.sets.len()
    }

    pub fn is_empty(&self) -> bool {
        self.sets.is_empty()
    }
}

pub fn binomial(n: u64, k: u64) -> BigUint {
    if k > n {
        return BigUint::zero();
    }
    let mut acc = BigUint::one();
    for i in 0..k.min(n - k) {
        acc = acc * BigUint::from(n - i) / BigUint::from(i + 1);
    }
    acc
}

/// Gaussian binomial [n r]_q, the number of r-dimensional subspaces of an
/// n-dimensional space over F_q.
pub fn gaussian_binomial(q: u64, n: u32, r: u32) -> BigUint {
    if r > n {
        return BigUint::zero();
    }
    let q = BigUint::from(q);
    let mut num = BigUint::one();
    let mut den = BigUint::one();
    for i in 0..r {
        num *= q.pow(n - i) - BigUint::one();
        den *= q.pow(i + 1) - BigUint::one();
    }
    num / den
}

/// E_{q,d}(w) = Σ_{i=0}^{w−d} (−1)^i C(w,i) (q^{w−d+1−i} − 1): the exact
/// number of codewords of an MDS code with minimum distance d whose support
/// equals a fixed w-subset. Positive throughout d ≤ w ≤ q.
pub fn mds_exact_support_count(q: u64, d: usize, w: usize) -> Result<BigUint> {
    if w < d || w > q as usize {
        return Err(Error::BadParameter(format!(
            "weight {w} outside the MDS support range {d}..={q}"
        )));
    }
    let mut acc = BigInt::zero();
    let qb = BigInt::from(q);
    for i in 0..=(w - d) {
        let term = BigInt::from_biguint(Sign::Plus, binomial(w as u64, i as u64))
            * (qb.pow((w - d + 1 - i) as u32) - BigInt::one());
        if i % 2 == 0 {
            acc += term;
        } else {
            acc -= term;
        }
    }
    acc.to_biguint()
        .ok_or_else(|| Error::Invariant(String::from("negative exact-support count")))
}
