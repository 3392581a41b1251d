use std::time::Instant;

use geomcodes::codes::{binomial, mds_exact_support_count, LinearCode, ScanResult, WeightEnum};
use geomcodes::designs::{Design, LambdaResult};
use geomcodes::families::{
    build_mds, build_op18, build_op27, lift_code, lift_formula, op18_classify_scanned,
    op27_classify_scanned, op28_construct, op28_context, op28_exhaustive_necessity, op28_exists,
    projective_order, rank_kernel_weight,
};
use geomcodes::pg3::elliptic_quadric;
use geomcodes::util::SplitMix64;
use geomcodes::{Error, FieldElem};
use num_bigint::BigUint;
use serde_json::{json, Value};

use crate::report::{read_blocks, write_blocks, Report};

/// Per-invocation knobs shared by every subcommand.
pub struct RunCfg {
    pub budget: u64,
    pub threads: usize,
}

/// Failures that abort a run before any claim can be judged.
pub enum CliError {
    /// Exit 2: the invocation itself is invalid.
    Param(String),
    /// Exit 3: the run needs a larger enumeration than the budget allows.
    Budget { needed: u128, budget: u64 },
}

/// Errors raised while setting a run up (or while asking for more
/// enumeration than allowed) map onto the exit-code contract.
fn abort(e: Error) -> CliError {
    match e {
        Error::BudgetExceeded { needed, budget } => CliError::Budget { needed, budget },
        other => CliError::Param(other.to_string()),
    }
}

fn big(value: &BigUint) -> Value {
    Value::String(value.to_string())
}

/// Splits the message space across worker threads and merges the partial
/// scans in thread order, so the result is identical to a single scan.
pub fn parallel_scan(
    code: &LinearCode,
    fixed_weight: Option<usize>,
    budget: u64,
    threads: usize,
) -> Result<ScanResult, Error> {
    code.check_budget(budget)?;
    let total = code.message_count() as u64;
    let workers = (threads.max(1) as u64).min(total.max(1));
    if workers == 1 {
        return code.scan_range(0, total, fixed_weight);
    }
    let parts = std::thread::scope(|scope| {
        let handles: Vec<_> = (0..workers)
            .map(|i| {
                let start = total / workers * i + (total % workers).min(i);
                let end = total / workers * (i + 1) + (total % workers).min(i + 1);
                scope.spawn(move || code.scan_range(start, end, fixed_weight))
            })
            .collect();
        handles
            .into_iter()
            .map(|h| h.join().expect("scan worker panicked"))
            .collect::<Vec<_>>()
    });
    let mut merged: Option<ScanResult> = None;
    for part in parts {
        let part = part?;
        merged = Some(match merged {
            None => part,
            Some(acc) => acc.merge(part)?,
        });
    }
    Ok(merged.expect("at least one worker ran"))
}

/// Renders a weight distribution as `1 + A·z^w + …`, skipping zero terms.
fn enumerator_string<I>(pairs: I) -> String
where
    I: IntoIterator<Item = (usize, BigUint)>,
{
    let mut out = String::new();
    for (w, count) in pairs {
        if count == BigUint::from(0u32) {
            continue;
        }
        if !out.is_empty() {
            out.push_str(" + ");
        }
        if w == 0 {
            out.push_str(&count.to_string());
        } else {
            out.push_str(&format!("{count}z^{w}"));
        }
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

fn weights_string(weights: &WeightEnum) -> String {
    enumerator_string(weights.counts.iter().map(|(&w, c)| (w, c.clone())))
}

/// Number of F_{q0}-sublines of PG(1, q): q(q²−1) / (q0(q0²−1)).
fn subline_count(q: u64, q0: u64) -> u64 {
    let num = (q as u128) * ((q as u128) * (q as u128) - 1);
    let den = (q0 as u128) * ((q0 as u128) * (q0 as u128) - 1);
    assert_eq!(num % den, 0, "subline count must be integral");
    (num / den) as u64
}

/// λ at t = 3 of the blockwise complement of a Steiner system with b
/// blocks of size k on v points: b·C(v−k,3) / C(v,3), when integral.
fn complement_lambda(b: u64, v: u64, k: u64) -> Value {
    let num = BigUint::from(b) * binomial(v - k, 3);
    let den = binomial(v, 3);
    if &num % &den == BigUint::from(0u32) {
        big(&(num / den))
    } else {
        Value::String(format!("{num}/{den} (not integral)"))
    }
}

fn gcd(mut a: u128, mut b: u128) -> u128 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

/// All w-subsets of {0,…,n−1} in ascending lexicographic order.
fn combinations(n: u16, w: usize) -> Vec<Vec<u16>> {
    assert!(w >= 1 && w <= n as usize);
    let mut out = Vec::new();
    let mut idx: Vec<u16> = (0..w as u16).collect();
    'outer: loop {
        out.push(idx.clone());
        let mut i = w - 1;
        loop {
            if idx[i] < n - (w - i) as u16 {
                idx[i] += 1;
                for j in i + 1..w {
                    idx[j] = idx[j - 1] + 1;
                }
                continue 'outer;
            }
            if i == 0 {
                break 'outer;
            }
            i -= 1;
        }
    }
    out
}

/// Emits a design's blocks next to the report and records the path.
fn emit_blocks(
    report: &mut Report,
    path: Option<&str>,
    blocks: &[Vec<u16>],
) -> Result<(), CliError> {
    if let Some(path) = path {
        write_blocks(path, blocks)
            .map_err(|e| CliError::Param(format!("cannot write blocks to {path}: {e}")))?;
        report.blocks_path = Some(path.to_string());
    }
    Ok(())
}

/// Builds the length-(q+1) cyclic code over F_{p^m}, enumerates it, and
/// certifies that the minimum zero sets are exactly the F_{p^s}-sublines
/// of PG(1, p^m) and that their complements form a 3-design.
pub fn run_op18(
    p: u64,
    m: u32,
    s: u32,
    emit: Option<&str>,
    cfg: &RunCfg,
) -> Result<Report, CliError> {
    let start = Instant::now();
    let mut report = Report::new(
        "op18",
        json!({"p": p, "m": m, "s": s, "budget": cfg.budget}),
    );
    let code = build_op18(p, m, s).map_err(abort)?;
    let q = code.alphabet_q();
    let q0 = p.pow(s);
    let scan = parallel_scan(&code, None, cfg.budget, cfg.threads).map_err(abort)?;
    match op18_classify_scanned(&code, p, m, s, cfg.budget, &scan) {
        Err(Error::BudgetExceeded { needed, budget }) => {
            return Err(CliError::Budget { needed, budget })
        }
        Err(e) => report.claim_check(
            "minimum zero sets pull back to the full subline census",
            json!("every minimum zero set is an F_{q0}-subline and the collection is the census"),
            json!(e.to_string()),
            false,
        ),
        Ok(family) => {
            let lines = subline_count(q, q0);
            report.claim_eq(
                "codewords enumerated",
                big(&BigUint::from(q).pow(4)),
                big(&family.weights.total()),
            );
            report.claim_eq(
                "minimum weight",
                json!(q - q0),
                json!(family.min_weight as u64),
            );
            report.claim_eq(
                "words at the minimum weight",
                big(&(BigUint::from(lines) * (q - 1))),
                big(&family.weights.count(family.min_weight)),
            );
            report.claim_eq(
                "minimum supports",
                json!(lines),
                json!(family.sublines.len() as u64),
            );
            report.claim_check(
                "minimum zero sets pull back to the full subline census",
                json!(format!("all {lines} sublines of PG(1, {q}) over F_{q0}")),
                json!("certified"),
                true,
            );
            let steiner = family
                .zero_design
                .is_steiner(3)
                .map_err(|e| CliError::Param(e.to_string()))?;
            report.claim_eq(
                "zero-set design is a Steiner 3-design",
                json!(true),
                json!(steiner),
            );
            report.claim_eq(
                "support design lambda at t = 3",
                complement_lambda(lines, q + 1, q0 + 1),
                json!(family.support_lambda.to_string()),
            );
            report.artifact("enumerator", json!(weights_string(&family.weights)));
            report.artifact(
                "support_design",
                json!(format!(
                    "3-({}, {}, {})",
                    q + 1,
                    q - q0,
                    family.support_lambda
                )),
            );
            emit_blocks(&mut report, emit, &family.support_design.blocks)?;
        }
    }
    Ok(report.seal(start))
}

/// Builds the length-(q²+1) negacyclic code over F_{q²}, enumerates it, and
/// certifies the triple equality: minimum zero sets = Baer sublines of
/// PG(1, q²) = secant plane sections of an elliptic quadric.
pub fn run_op27(q: u64, emit: Option<&str>, cfg: &RunCfg) -> Result<Report, CliError> {
    let start = Instant::now();
    let mut report = Report::new("op27", json!({"q": q, "budget": cfg.budget}));
    let code = build_op27(q).map_err(abort)?;
    let q2 = q * q;
    let scan = parallel_scan(&code, None, cfg.budget, cfg.threads).map_err(abort)?;
    match op27_classify_scanned(&code, q, cfg.budget, &scan) {
        Err(Error::BudgetExceeded { needed, budget }) => {
            return Err(CliError::Budget { needed, budget })
        }
        Err(e) => report.claim_check(
            "minimum zero sets transport to the full Baer-subline census",
            json!("every transported zero set is a Baer subline and the collection is the census"),
            json!(e.to_string()),
            false,
        ),
        Ok(family) => {
            let baer = q * (q2 + 1);
            report.claim_eq(
                "codewords enumerated",
                big(&BigUint::from(q).pow(8)),
                big(&family.weights.total()),
            );
            report.claim_eq(
                "minimum weight",
                json!(q2 - q),
                json!(family.min_weight as u64),
            );
            report.claim_eq(
                "words at the minimum weight",
                big(&(BigUint::from(baer) * (q2 - 1))),
                big(&family.weights.count(family.min_weight)),
            );
            report.claim_eq(
                "minimum zero sets are Baer sublines",
                json!(baer),
                json!(family.sublines.len() as u64),
            );
            report.claim_eq(
                "Baer sublines match secant quadric sections",
                json!(baer),
                json!(family.secant_sections as u64),
            );
            report.claim_check(
                "coordinate transport is a bijection onto the unit circle",
                json!("certified during classification"),
                json!("certified"),
                true,
            );
            let steiner = family
                .zero_design
                .is_steiner(3)
                .map_err(|e| CliError::Param(e.to_string()))?;
            report.claim_eq(
                "zero-set design is a Steiner 3-design",
                json!(true),
                json!(steiner),
            );
            report.claim_eq(
                "support design lambda at t = 3",
                complement_lambda(baer, q2 + 1, q + 1),
                json!(family.support_lambda.to_string()),
            );
            report.artifact("enumerator", json!(weights_string(&family.weights)));
            report.artifact(
                "support_design",
                json!(format!(
                    "3-({}, {}, {})",
                    q2 + 1,
                    q2 - q,
                    family.support_lambda
                )),
            );
            emit_blocks(&mut report, emit, &family.support_design.blocks)?;
        }
    }
    Ok(report.seal(start))
}

/// Checks one multiplier λ (given as an index into the canonical
/// enumeration of F_q) or sweeps all of them: a length-(q²+1)
/// λ-constacyclic ovoid code exists exactly when λ is a nonsquare.
pub fn run_op28(
    q: u64,
    lambda: Option<u64>,
    exhaustive: bool,
    cfg: &RunCfg,
) -> Result<Report, CliError> {
    let start = Instant::now();
    let ctx = op28_context(q).map_err(abort)?;
    let subfield = ctx.subfield_elements(q).map_err(abort)?;
    if let Some(k) = lambda {
        let mut report = Report::new("op28", json!({"q": q, "lambda": k, "budget": cfg.budget}));
        if k == 0 || k >= q {
            return Err(CliError::Param(format!(
                "lambda index {k} outside the nonzero range 1..{q}"
            )));
        }
        let lam = subfield[k as usize];
        report.artifact("lambda_tower_index", json!(ctx.elem_index(lam)));
        if !op28_exists(&ctx, q, lam).map_err(abort)? {
            let verdict = format!("no code exists: {k} is a square in F_{q}*");
            report.claim_eq("existence", json!(verdict.clone()), json!(verdict));
            return Ok(report.seal(start));
        }
        report.claim_eq(
            "existence",
            json!(format!("a code exists: {k} is a nonsquare in F_{q}*")),
            json!(format!("a code exists: {k} is a nonsquare in F_{q}*")),
        );
        match op28_construct(&ctx, q, lam) {
            Err(e) => report.claim_check(
                "construction",
                json!("generator columns form an ovoid and the code is λ-constacyclic"),
                json!(e.to_string()),
                false,
            ),
            Ok(witness) => {
                report.claim_check(
                    "generator columns form an ovoid of PG(3, q)",
                    json!(format!("{} points, no three collinear", q * q + 1)),
                    json!("certified"),
                    true,
                );
                let shift = witness
                    .code
                    .is_constacyclic(lam)
                    .map_err(|e| CliError::Param(e.to_string()))?;
                report.claim_eq("code is λ-constacyclic", json!(true), json!(shift));
                let order = projective_order(&ctx, witness.theta, q)
                    .map_err(|e| CliError::Param(e.to_string()))?;
                report.claim_eq("projective order of θ", json!(q * q + 1), json!(order));
                let formula = lift_formula(q, 1).map_err(abort)?;
                let scan =
                    parallel_scan(&witness.code, None, cfg.budget, cfg.threads).map_err(abort)?;
                let weights = witness.code.weights_from_scan(&scan);
                report.claim_eq(
                    "weight enumerator",
                    json!(enumerator_string(formula.pairs())),
                    json!(weights_string(&weights)),
                );
                match witness.code.min_supports_from_scan(&scan) {
                    Ok(supports) => report.claim_eq(
                        "minimum supports",
                        json!(q * q * q + q),
                        json!(supports.len() as u64),
                    ),
                    Err(e) => report.claim_check(
                        "minimum supports",
                        json!(q * q * q + q),
                        json!(e.to_string()),
                        false,
                    ),
                }
                report.artifact("enumerator", json!(weights_string(&weights)));
                report.artifact("b", json!(witness.b));
                report.artifact("c", json!(witness.c));
                report.artifact("theta_tower_index", json!(ctx.elem_index(witness.theta)));
                report.artifact("v_tower_index", json!(ctx.elem_index(witness.v)));
            }
        }
        return Ok(report.seal(start));
    }
    if !exhaustive {
        return Err(CliError::Param(String::from(
            "op28 needs either --lambda <K> or --exhaustive",
        )));
    }
    let mut report = Report::new("op28", json!({"q": q, "budget": cfg.budget}));
    let mut matched = 0u64;
    let mut mismatch: Option<String> = None;
    for (k, &lam) in subfield.iter().enumerate().skip(1) {
        let criterion = op28_exists(&ctx, q, lam).map_err(abort)?;
        let verdict = match op28_construct(&ctx, q, lam) {
            Ok(_) => Ok(true),
            Err(Error::LambdaIsSquare) => Ok(false),
            Err(e) => Err(e),
        };
        match verdict {
            Ok(constructed) if constructed == criterion => matched += 1,
            Ok(constructed) => {
                mismatch.get_or_insert(format!(
                    "multiplier #{k}: square-class criterion says {criterion}, construction says {constructed}"
                ));
            }
            Err(e) => {
                mismatch.get_or_insert(format!("multiplier #{k}: {e}"));
            }
        }
    }
    report.claim_check(
        "construction succeeds exactly for the nonsquare multipliers",
        json!(format!("{} verdicts match", q - 1)),
        match &mismatch {
            None => json!(format!("{matched} verdicts match")),
            Some(detail) => json!(detail),
        },
        mismatch.is_none() && matched == q - 1,
    );
    match op28_exhaustive_necessity(&ctx, q) {
        Ok(clean) => report.claim_eq(
            "no admissible multiplier over the whole tower is a square",
            json!(true),
            json!(clean),
        ),
        Err(e) => report.claim_check(
            "no admissible multiplier over the whole tower is a square",
            json!(true),
            json!(e.to_string()),
            false,
        ),
    }
    let battery: Vec<u128> = [1u32, 2, 3, 6]
        .iter()
        .map(|&r| gcd((q as u128) * (q as u128) + 1, (q as u128).pow(r) - 1))
        .collect();
    report.claim_eq(
        "gcd(q²+1, q^r−1) = 2 for r in {1, 2, 3, 6}",
        json!([2, 2, 2, 2]),
        json!(battery.iter().map(|&g| g as u64).collect::<Vec<u64>>()),
    );
    Ok(report.seal(start))
}

/// Evaluates the closed-form weight enumerator of the degree-e alphabet
/// lift of a q²+1-point ovoid code; with brute force, cross-checks it
/// against full enumeration and rank-kernel weights.
pub fn run_lift(q: u64, e: u32, brute_force: bool, cfg: &RunCfg) -> Result<Report, CliError> {
    let start = Instant::now();
    let mut report = Report::new(
        "lift",
        json!({"q": q, "e": e, "brute_force": brute_force, "budget": cfg.budget}),
    );
    let formula = lift_formula(q, e).map_err(abort)?;
    report.claim_eq(
        "z = 1 identity: coefficients sum to q^(4e)",
        big(&BigUint::from(q).pow(4 * e)),
        big(&formula.total()),
    );
    report.artifact("enumerator", json!(enumerator_string(formula.pairs())));
    if brute_force {
        let ctx = op28_context(q).map_err(abort)?;
        let basis: [FieldElem; 4] = ctx
            .canonical_power_basis(q, 4)
            .map_err(abort)?
            .try_into()
            .expect("a degree-4 power basis has 4 elements");
        let ovoid = elliptic_quadric(&ctx, &basis).map_err(abort)?;
        let code = lift_code(&ctx, &ovoid, e).map_err(abort)?;
        let scan = parallel_scan(&code, None, cfg.budget, cfg.threads).map_err(abort)?;
        let weights = code.weights_from_scan(&scan);
        report.claim_eq(
            "enumeration matches the closed-form enumerator",
            json!(enumerator_string(formula.pairs())),
            json!(weights_string(&weights)),
        );
        let total = code.message_count() as u64;
        let samples = 1000.min(total - 1);
        let mut rng = SplitMix64::new(0x11F7_CAFE);
        let mut agree = 0u64;
        let mut first_split: Option<String> = None;
        for _ in 0..samples {
            let m = 1 + rng.below(total - 1);
            let message: [FieldElem; 4] = code
                .message(m)
                .try_into()
                .expect("ovoid codes have 4 generator rows");
            match rank_kernel_weight(&ctx, &ovoid, e, &message) {
                Ok(rank_weight) => {
                    let hamming = code.codeword(m).iter().filter(|c| !c.is_zero()).count();
                    if rank_weight == hamming {
                        agree += 1;
                    } else {
                        first_split.get_or_insert(format!(
                            "message {m}: rank-kernel weight {rank_weight}, Hamming weight {hamming}"
                        ));
                    }
                }
                Err(e) => {
                    first_split.get_or_insert(format!("message {m}: {e}"));
                }
            }
        }
        report.claim_check(
            "rank-kernel weight equals Hamming weight on sampled messages",
            json!(format!("{samples} of {samples}")),
            match &first_split {
                None => json!(format!("{agree} of {samples}")),
                Some(detail) => json!(detail),
            },
            first_split.is_none() && agree == samples,
        );
    }
    Ok(report.seal(start))
}

/// Builds the length-(q−1)/2 negacyclic code of dimension k, certifies it
/// as MDS, and verifies its minimum supports saturate every coordinate
/// subset; over budget the verdict rests on the rank certificate,
/// per-support count positivity, and sampled exact counts.
pub fn run_mds(
    q: u64,
    k: usize,
    design_t: Option<usize>,
    emit: Option<&str>,
    cfg: &RunCfg,
) -> Result<Report, CliError> {
    let start = Instant::now();
    let mut report = Report::new(
        "mds",
        json!({"q": q, "k": k, "design_t": design_t, "budget": cfg.budget}),
    );
    let code = build_mds(q, k).map_err(abort)?;
    let n = code.n();
    let d = n - k + 1;
    if let Some(t) = design_t {
        if t == 0 || t > d {
            return Err(CliError::Param(format!(
                "design order t = {t} outside the block-size range 1..={d}"
            )));
        }
    }
    report.artifact("length", json!(n as u64));
    report.artifact("dimension", json!(k as u64));
    report.artifact("distance", json!(d as u64));
    let rank_mds = code.is_mds(0).map_err(|e| CliError::Param(e.to_string()))?;
    report.claim_eq(
        "rank certificate: every k columns are independent (MDS)",
        json!(true),
        json!(rank_mds),
    );
    let within_budget = code.check_budget(cfg.budget).is_ok();
    let count_at = |w: usize| mds_exact_support_count(q, d, w).expect("d and w are in range");
    if within_budget {
        report.artifact("route", json!("enumeration"));
        let scan = parallel_scan(&code, Some(d), cfg.budget, cfg.threads).map_err(abort)?;
        let weights = code.weights_from_scan(&scan);
        report.claim_eq(
            "codewords enumerated",
            big(&BigUint::from(q).pow(k as u32)),
            big(&weights.total()),
        );
        report.claim_eq(
            "minimum distance meets the Singleton bound",
            json!(d as u64),
            json!(weights.min_nonzero_weight().map(|w| w as u64)),
        );
        let mut expected_pairs = vec![(0usize, BigUint::from(1u32))];
        for w in d..=n {
            expected_pairs.push((w, binomial(n as u64, w as u64) * count_at(w)));
        }
        report.claim_eq(
            "weight distribution matches the closed form",
            json!(enumerator_string(expected_pairs)),
            json!(weights_string(&weights)),
        );
        report.claim_eq(
            "supports at the minimum distance saturate",
            big(&binomial(n as u64, d as u64)),
            json!(scan.fixed_supports.len().to_string()),
        );
        let per_support = count_at(d);
        let counts: Vec<u64> = scan.fixed_supports.values().copied().collect();
        let uniform = counts.iter().all(|&c| BigUint::from(c) == per_support);
        report.claim_check(
            "every minimum support carries the same word count",
            big(&per_support),
            if uniform {
                big(&per_support)
            } else {
                json!(format!(
                    "counts range over {:?}",
                    counts.iter().collect::<std::collections::BTreeSet<_>>()
                ))
            },
            uniform && !counts.is_empty(),
        );
        report.artifact("enumerator", json!(weights_string(&weights)));
        let blocks: Vec<Vec<u16>> = scan.fixed_supports.keys().cloned().collect();
        if let Some(t) = design_t {
            let design = Design::new(n as u16, blocks.clone())
                .map_err(|e| CliError::Param(e.to_string()))?;
            report.claim_eq(
                "minimum supports form the complete block family",
                json!(true),
                json!(design.is_complete(d)),
            );
            design_lambda_claim(&mut report, &design, t, n, d);
        }
        emit_blocks(&mut report, emit, &blocks)?;
    } else {
        report.artifact("route", json!("bounded"));
        let positive = (d..=n).all(|w| count_at(w) > BigUint::from(0u32));
        report.claim_eq(
            "per-support word count is positive at every weight",
            json!(true),
            json!(positive),
        );
        let per_support = count_at(d);
        let mut rng = SplitMix64::new(0xACCE_0006 ^ q);
        let mut agree = 0u64;
        let mut first_split: Option<String> = None;
        for _ in 0..50 {
            let subset = rng.subset(n as u16, d as u16);
            match code.exact_support_count_on(&subset) {
                Ok(count) if BigUint::from(count) == per_support => agree += 1,
                Ok(count) => {
                    first_split.get_or_insert(format!(
                        "support {subset:?} carries {count} words, expected {per_support}"
                    ));
                }
                Err(e) => {
                    first_split.get_or_insert(format!("support {subset:?}: {e}"));
                }
            }
        }
        report.claim_check(
            "sampled minimum supports carry exactly the closed-form count",
            json!("50 of 50"),
            match &first_split {
                None => json!(format!("{agree} of 50")),
                Some(detail) => json!(detail),
            },
            first_split.is_none() && agree == 50,
        );
        let blocks = combinations(n as u16, d);
        if let Some(t) = design_t {
            let design = Design::new(n as u16, blocks.clone())
                .map_err(|e| CliError::Param(e.to_string()))?;
            design_lambda_claim(&mut report, &design, t, n, d);
        }
        emit_blocks(&mut report, emit, &blocks)?;
    }
    Ok(report.seal(start))
}

/// Claims that the block family is a t-design with λ = C(n−t, d−t), the
/// value forced on the complete d-subset family.
fn design_lambda_claim(report: &mut Report, design: &Design, t: usize, n: usize, d: usize) {
    let expected = binomial((n - t) as u64, (d - t) as u64);
    match design.t_design_lambda(t) {
        Ok(LambdaResult::Uniform(lambda)) => report.claim_eq(
            &format!("t-design lambda at t = {t}"),
            big(&expected),
            json!(lambda.to_string()),
        ),
        Ok(LambdaResult::Nonuniform {
            a,
            count_a,
            b,
            count_b,
        }) => report.claim_check(
            &format!("t-design lambda at t = {t}"),
            big(&expected),
            json!(format!(
                "{a:?} lies in {count_a} blocks but {b:?} lies in {count_b}"
            )),
            false,
        ),
        Err(e) => report.claim_check(
            &format!("t-design lambda at t = {t}"),
            big(&expected),
            json!(e.to_string()),
            false,
        ),
    }
}

/// Reads a blocks file and checks it is a t-design: uniform block size and
/// a t-subset count independent of the chosen t points.
pub fn run_design_verify(path: &str, t: usize, v: Option<u16>) -> Result<Report, CliError> {
    let start = Instant::now();
    let blocks = read_blocks(path).map_err(CliError::Param)?;
    let max_index = blocks
        .iter()
        .flat_map(|b| b.iter().copied())
        .max()
        .expect("read_blocks rejects empty files");
    let v = match v {
        Some(v) if v > max_index => v,
        Some(v) => {
            return Err(CliError::Param(format!(
                "v = {v} does not cover the largest point index {max_index}"
            )))
        }
        None => max_index + 1,
    };
    let mut report = Report::new("design-verify", json!({"blocks": path, "t": t, "v": v}));
    let sizes: std::collections::BTreeSet<usize> = blocks.iter().map(Vec::len).collect();
    report.claim_check(
        "uniform block size",
        json!("one block size"),
        json!(sizes.iter().copied().collect::<Vec<usize>>()),
        sizes.len() == 1,
    );
    let smallest = *sizes.iter().next().expect("at least one block");
    if t == 0 || t > smallest {
        return Err(CliError::Param(format!(
            "design order t = {t} outside the block-size range 1..={smallest}"
        )));
    }
    let design = Design::new(v, blocks).map_err(|e| CliError::Param(e.to_string()))?;
    report.artifact("v", json!(v));
    report.artifact("blocks", json!(design.blocks.len()));
    match design.t_design_lambda(t) {
        Ok(LambdaResult::Uniform(lambda)) => {
            report.claim_check(
                &format!("every {t}-subset of points lies in equally many blocks"),
                json!("uniform"),
                json!(format!("uniform with lambda = {lambda}")),
                true,
            );
            report.artifact("lambda", json!(lambda));
            report.artifact("steiner", json!(lambda == 1));
        }
        Ok(LambdaResult::Nonuniform {
            a,
            count_a,
            b,
            count_b,
        }) => report.claim_check(
            &format!("every {t}-subset of points lies in equally many blocks"),
            json!("uniform"),
            json!(format!(
                "{a:?} lies in {count_a} blocks but {b:?} lies in {count_b}"
            )),
            false,
        ),
        Err(e) => report.claim_check(
            &format!("every {t}-subset of points lies in equally many blocks"),
            json!("uniform"),
            json!(e.to_string()),
            false,
        ),
    }
    Ok(report.seal(start))
}
