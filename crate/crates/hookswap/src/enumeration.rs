//! Exhaustive generation of partitions and pointed partitions, exact
//! distribution tables, and the verification suites that check every
//! structural claim by brute force.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use crate::bijections::{phi, zeta};
use crate::partition::{Partition, PointedPartition, StatTuple};
use crate::qseries::{pealing_identity_gap, pointed_class_gf, q_pochhammer_finite_inv};
use crate::rimhook::{peal, unpeal, PealingResult};

/// All partitions of `n`, each exactly once, in decreasing lexicographic
/// order. `n = 0` yields only the empty partition.
pub fn partitions_of(n: usize) -> Vec<Partition> {
    fn extend(remaining: usize, cap: usize, prefix: &mut Vec<usize>, out: &mut Vec<Partition>) {
        if remaining == 0 {
            out.push(Partition::new(prefix.clone()).expect("generated parts are sorted"));
            return;
        }
        for part in (1..=cap.min(remaining)).rev() {
            prefix.push(part);
            extend(remaining - part, part, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    extend(n, n, &mut Vec::new(), &mut out);
    out
}

/// All pointed partitions of `n`: partitions in decreasing lexicographic
/// order, cells in row-major order within each.
pub fn pointed_partitions_of(n: usize) -> Vec<PointedPartition> {
    let mut out = Vec::new();
    for_each_pointed(n, |p, cell| {
        out.push(PointedPartition::new(p.clone(), cell).expect("enumerated cell is valid"));
    });
    out
}

/// Streams every pointed partition of `n` without materializing the list.
pub fn for_each_pointed(n: usize, mut f: impl FnMut(&Partition, crate::partition::Cell)) {
    for p in partitions_of(n) {
        for cell in p.cells() {
            f(&p, cell);
        }
    }
}

/// The statistic a distribution table is keyed by.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum KeyKind {
    /// `(arm, leg, coarm)` triples.
    ArmLegCoarm,
    /// `(hook, part_len)` pairs.
    HookPart,
    /// `(arm, coarm)` pairs.
    ArmCoarm,
    /// `(arm, leg)` pairs.
    ArmLeg,
}

impl KeyKind {
    /// Number of components in a key.
    pub fn arity(self) -> usize {
        match self {
            KeyKind::ArmLegCoarm => 3,
            _ => 2,
        }
    }

    /// Extracts the key of one cell's statistics.
    pub fn key(self, s: &StatTuple) -> Vec<usize> {
        match self {
            KeyKind::ArmLegCoarm => [s.arm, s.leg, s.coarm].to_vec(),
            KeyKind::HookPart => [s.hook, s.part_len].to_vec(),
            KeyKind::ArmCoarm => [s.arm, s.coarm].to_vec(),
            KeyKind::ArmLeg => [s.arm, s.leg].to_vec(),
        }
    }
}

/// Exact counts of pointed partitions of `n` per statistic tuple.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct DistTable {
    pub n: usize,
    pub kind: KeyKind,
    counts: BTreeMap<Vec<usize>, u64>,
}

impl DistTable {
    pub fn count(&self, key: &[usize]) -> u64 {
        self.counts.get(key).copied().unwrap_or(0)
    }

    /// Entries sorted by key tuple.
    pub fn iter(&self) -> impl Iterator<Item = (&[usize], u64)> {
        self.counts.iter().map(|(k, &v)| (k.as_slice(), v))
    }

    pub fn len(&self) -> usize {
        self.counts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.counts.is_empty()
    }

    /// Sum of all counts; equals the number of pointed partitions of `n`.
    pub fn total(&self) -> u64 {
        self.counts.values().sum()
    }
}

/// Tallies the `kind` statistics over every pointed partition of `n`.
pub fn distribution(n: usize, kind: KeyKind) -> DistTable {
    let mut counts = BTreeMap::new();
    for_each_pointed(n, |p, cell| {
        let s = p.stats(cell).expect("enumerated cell is valid");
        *counts.entry(kind.key(&s)).or_insert(0) += 1;
    });
    DistTable { n, kind, counts }
}

/// Number of pointed partitions of `n` whose cell has the given
/// `(arm, leg, coarm)` statistics, by direct filtering.
pub fn f_count(n: usize, arm: usize, leg: usize, coarm: usize) -> u64 {
    let mut total = 0;
    for_each_pointed(n, |p, cell| {
        let s = p.stats(cell).expect("enumerated cell is valid");
        if (s.arm, s.leg, s.coarm) == (arm, leg, coarm) {
            total += 1;
        }
    });
    total
}

/// Default cap on stored counterexample descriptions per report.
pub const DEFAULT_FAILURE_CAP: usize = 10;

/// Outcome of one verification suite. `passed` holds exactly when no
/// failure was observed; at most `cap` counterexamples are retained.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct VerifyReport {
    pub check: String,
    pub scope: String,
    pub cases: u64,
    pub failure_count: u64,
    pub failures: Vec<String>,
    cap: usize,
}

impl VerifyReport {
    fn new(check: &str, scope: String, cap: usize) -> Self {
        VerifyReport {
            check: String::from(check),
            scope,
            cases: 0,
            failure_count: 0,
            failures: Vec::new(),
            cap,
        }
    }

    pub fn passed(&self) -> bool {
        self.failure_count == 0
    }

    fn case(&mut self) {
        self.cases += 1;
    }

    fn check(&mut self, ok: bool, describe: impl FnOnce() -> String) {
        self.case();
        if !ok {
            self.failure_count += 1;
            if self.failures.len() < self.cap {
                self.failures.push(describe());
            }
        }
    }
}

/// Runs the exhaustive suites. `failure_cap` bounds the counterexamples
/// stored per report.
#[derive(Clone, Copy, Debug)]
pub struct Verifier {
    pub failure_cap: usize,
}

impl Default for Verifier {
    fn default() -> Self {
        Verifier {
            failure_cap: DEFAULT_FAILURE_CAP,
        }
    }
}

impl Verifier {
    /// `phi` is a weight-preserving involution sending `(arm, leg, coarm)`
    /// to `(arm, coarm, leg)` — hence `(hook, part_len)` to
    /// `(part_len, hook)` — on every pointed partition of `n <= n_max`.
    pub fn involution(&self, n_max: usize) -> VerifyReport {
        let mut report = VerifyReport::new("involution", format!("n <= {n_max}"), self.failure_cap);
        for n in 0..=n_max {
            for_each_pointed(n, |p, cell| {
                let pp = PointedPartition::new(p.clone(), cell).expect("valid cell");
                let s = pp.stats();
                let image = phi(&pp);
                let t = image.stats();
                let ok = image.weight() == n
                    && (t.arm, t.leg, t.coarm) == (s.arm, s.coarm, s.leg)
                    && (t.hook, t.part_len) == (s.part_len, s.hook)
                    && phi(&image) == pp;
                report.check(ok, || format!("phi misbehaves on ({p}; {cell})"));
            });
        }
        report
    }

    /// The `(arm, leg, coarm)` table of each `n <= n_max` is invariant
    /// under swapping leg and coarm.
    pub fn symmetry(&self, n_max: usize) -> VerifyReport {
        let mut report = VerifyReport::new("symmetry", format!("n <= {n_max}"), self.failure_cap);
        for n in 0..=n_max {
            let table = distribution(n, KeyKind::ArmLegCoarm);
            for (key, count) in table.iter() {
                let mirrored = [key[0], key[2], key[1]];
                report.check(count == table.count(&mirrored), || {
                    format!(
                        "n={n}: count{key:?} = {count} but count{mirrored:?} = {}",
                        table.count(&mirrored)
                    )
                });
            }
        }
        report
    }

    /// The `(arm, coarm)` and `(arm, leg)` tables of each `n <= n_max`
    /// are equal, and each count depends only on the sum of its key.
    pub fn supersymmetry(&self, n_max: usize) -> VerifyReport {
        let mut report =
            VerifyReport::new("supersymmetry", format!("n <= {n_max}"), self.failure_cap);
        for n in 0..=n_max {
            let by_coarm = distribution(n, KeyKind::ArmCoarm);
            let by_leg = distribution(n, KeyKind::ArmLeg);
            report.check(by_coarm.iter().eq(by_leg.iter()), || {
                format!("n={n}: (arm, coarm) and (arm, leg) tables differ")
            });
            for table in [&by_coarm, &by_leg] {
                let mut by_sum: BTreeMap<usize, u64> = BTreeMap::new();
                for (key, count) in table.iter() {
                    by_sum.entry(key[0] + key[1]).or_insert(count);
                }
                for (key, count) in table.iter() {
                    let expected = by_sum[&(key[0] + key[1])];
                    report.check(count == expected, || {
                        format!(
                            "n={n}: count{key:?} = {count} differs from {expected} in its sum class"
                        )
                    });
                }
                // Every key with the same sum must be present: a missing
                // key is a zero count, which only matches if all are zero.
                for (key, count) in table.iter() {
                    if count == 0 {
                        continue;
                    }
                    let sum = key[0] + key[1];
                    for first in 0..=sum {
                        let probe = [first, sum - first];
                        report.check(table.count(&probe) == count, || {
                            format!(
                                "n={n}: count{probe:?} = {} differs from count{key:?} = {count}",
                                table.count(&probe)
                            )
                        });
                    }
                }
            }
        }
        report
    }

    /// The class generating series matches brute-force counts: the
    /// coefficient of `q^n` in the `(arm, leg, coarm)` series equals the
    /// table count for every `n <= n_max` and statistics up to the caps.
    pub fn generating_function(
        &self,
        arm_max: usize,
        leg_max: usize,
        coarm_max: usize,
        n_max: usize,
    ) -> VerifyReport {
        let mut report = VerifyReport::new(
            "generating-function",
            format!("arm <= {arm_max}, leg <= {leg_max}, coarm <= {coarm_max}, n <= {n_max}"),
            self.failure_cap,
        );
        let tables: Vec<DistTable> = (0..=n_max)
            .map(|n| distribution(n, KeyKind::ArmLegCoarm))
            .collect();
        for arm in 0..=arm_max {
            for leg in 0..=leg_max {
                for coarm in 0..=coarm_max {
                    let series = pointed_class_gf(arm, leg, coarm, n_max);
                    for (n, table) in tables.iter().enumerate() {
                        let counted = table.count(&[arm, leg, coarm]);
                        let coefficient = series.coeff(n);
                        report.check(
                            i64::try_from(counted).is_ok_and(|c| c == coefficient),
                            || {
                                format!(
                                    "class ({arm},{leg},{coarm}): coefficient of q^{n} is \
                                     {coefficient}, enumeration counts {counted}"
                                )
                            },
                        );
                    }
                }
            }
        }
        report
    }

    /// Pealing round-trips: every partition of `n <= n_max` with parts
    /// bounded by the box columns peals and un-peals back to itself with
    /// all recorded invariants intact, every admissible
    /// (remainder, strips) pair is reproduced by pealing its un-pealing,
    /// and the weight-level counts agree with the series expansion.
    pub fn pealing(&self, n_max: usize, rows_max: usize, cols_max: usize) -> VerifyReport {
        let mut report = VerifyReport::new(
            "pealing",
            format!("n <= {n_max}, box rows <= {rows_max}, box cols <= {cols_max}"),
            self.failure_cap,
        );
        for rows in 0..=rows_max {
            for cols in 0..=cols_max {
                let mut bounded_per_weight = alloc::vec![0u64; n_max + 1];
                for (n, tally) in bounded_per_weight.iter_mut().enumerate() {
                    for p in partitions_of(n) {
                        if p.part(1) > cols {
                            continue;
                        }
                        *tally += 1;
                        let res = peal(&p, rows, cols).expect("parts are bounded");
                        report.check(pealing_result_is_sound(&p, &res), || {
                            format!("peal breaks an invariant on {p} with box {rows}x{cols}")
                        });
                        let back = unpeal(&res.reduced, &res.strip_lengths, rows, cols);
                        report.check(back.as_ref() == Ok(&p), || {
                            format!("unpeal(peal({p})) diverges with box {rows}x{cols}")
                        });
                    }
                }

                // Opposite direction: enumerate admissible pairs directly.
                let mut pairs_per_weight = alloc::vec![0u64; n_max + 1];
                for reduced in boxed_partitions(rows, cols, n_max) {
                    let budget = n_max - reduced.weight();
                    for strips in strip_sequences(rows + 1, rows + cols, budget) {
                        let total = reduced.weight() + strips.iter().sum::<usize>();
                        pairs_per_weight[total] += 1;
                        let rebuilt = unpeal(&reduced, &strips, rows, cols)
                            .expect("enumerated pair is admissible");
                        let again = peal(&rebuilt, rows, cols).expect("unpeal stays bounded");
                        report.check(
                            again.reduced == reduced && again.strip_lengths == strips,
                            || {
                                format!(
                                    "peal(unpeal({reduced}; {strips:?})) diverges with box \
                                     {rows}x{cols}"
                                )
                            },
                        );
                    }
                }

                // Count identity per weight, cross-checked against the
                // series expansion of the bounded-part generating function.
                let series = q_pochhammer_finite_inv(cols, n_max);
                for (n, (&bounded, &pairs)) in
                    bounded_per_weight.iter().zip(&pairs_per_weight).enumerate()
                {
                    report.check(bounded == pairs, || {
                        format!(
                            "box {rows}x{cols}, n={n}: {bounded} bounded partitions vs \
                             {pairs} pairs"
                        )
                    });
                    report.check(
                        i64::try_from(bounded).is_ok_and(|c| c == series.coeff(n)),
                        || {
                            format!(
                                "box {rows}x{cols}, n={n}: series says {}, enumeration {bounded}",
                                series.coeff(n)
                            )
                        },
                    );
                }
            }
        }
        report
    }

    /// The pealing count identity holds as an identity of truncated
    /// series for all boxes up to the caps.
    pub fn remark(&self, rows_max: usize, cols_max: usize, degree: usize) -> VerifyReport {
        let mut report = VerifyReport::new(
            "remark",
            format!("box rows <= {rows_max}, 1 <= box cols <= {cols_max}, degree {degree}"),
            self.failure_cap,
        );
        for rows in 0..=rows_max {
            for cols in 1..=cols_max {
                let gap = pealing_identity_gap(rows, cols, degree);
                report.check(gap.is_zero(), || {
                    let first = (0..=degree).find(|&d| gap.coeff(d) != 0);
                    format!("box {rows}x{cols}: identity gap is nonzero, first at degree {first:?}")
                });
            }
        }
        report
    }

    /// `zeta` maps each `(arm, leg)` class of `n <= n_max` injectively
    /// onto every class with the same statistic sum (up to `sum_max`), so
    /// the class sizes agree.
    pub fn zeta_transport(&self, n_max: usize, sum_max: usize) -> VerifyReport {
        let mut report = VerifyReport::new(
            "zeta",
            format!("n <= {n_max}, arm + leg <= {sum_max}"),
            self.failure_cap,
        );
        for n in 0..=n_max {
            let mut classes: BTreeMap<(usize, usize), Vec<PointedPartition>> = BTreeMap::new();
            for_each_pointed(n, |p, cell| {
                let s = p.stats(cell).expect("valid cell");
                if s.arm + s.leg <= sum_max {
                    classes
                        .entry((s.arm, s.leg))
                        .or_default()
                        .push(PointedPartition::new(p.clone(), cell).expect("valid cell"));
                }
            });
            for sum in 0..=sum_max {
                let of = |arm: usize| {
                    classes
                        .get(&(arm, sum - arm))
                        .map(Vec::as_slice)
                        .unwrap_or(&[])
                };
                for arm in 0..=sum {
                    for new_arm in 0..=sum {
                        let source = of(arm);
                        let target = of(new_arm);
                        let mut images = BTreeSet::new();
                        for pp in source {
                            let image = zeta(pp, new_arm, sum - new_arm)
                                .expect("statistic sum is preserved");
                            let t = image.stats();
                            report.check(
                                (t.arm, t.leg) == (new_arm, sum - new_arm) && image.weight() == n,
                                || {
                                    format!(
                                        "n={n}: zeta({pp}) lands outside class \
                                         ({new_arm},{})",
                                        sum - new_arm
                                    )
                                },
                            );
                            images.insert(image);
                        }
                        report.check(images.len() == source.len(), || {
                            format!(
                                "n={n}: zeta is not injective from ({arm},{}) to ({new_arm},{})",
                                sum - arm,
                                sum - new_arm
                            )
                        });
                        report.check(source.len() == target.len(), || {
                            format!(
                                "n={n}: |class ({arm},{})| = {} but |class ({new_arm},{})| = {}",
                                sum - arm,
                                source.len(),
                                sum - new_arm,
                                target.len()
                            )
                        });
                    }
                }
            }
        }
        report
    }
}

fn pealing_result_is_sound(original: &Partition, res: &PealingResult) -> bool {
    let PealingResult {
        reduced,
        strip_lengths,
        box_rows,
        box_cols,
    } = res;
    reduced.len() <= *box_rows
        && reduced.part(1) <= *box_cols
        && strip_lengths.windows(2).all(|w| w[0] <= w[1])
        && strip_lengths
            .iter()
            .all(|&r| (box_rows + 1..=box_rows + box_cols).contains(&r))
        && reduced.weight() + strip_lengths.iter().sum::<usize>() == original.weight()
}

/// All partitions with at most `rows` parts, each at most `cols`, of
/// weight at most `weight_max`.
fn boxed_partitions(rows: usize, cols: usize, weight_max: usize) -> Vec<Partition> {
    let mut out = Vec::new();
    for n in 0..=weight_max.min(rows * cols) {
        for p in partitions_of(n) {
            if p.len() <= rows && p.part(1) <= cols {
                out.push(p);
            }
        }
    }
    out
}

/// All weakly increasing sequences with entries in `[lo, hi]` and sum at
/// most `budget` (the empty sequence included).
fn strip_sequences(lo: usize, hi: usize, budget: usize) -> Vec<Vec<usize>> {
    fn extend(
        lo: usize,
        hi: usize,
        budget: usize,
        prefix: &mut Vec<usize>,
        out: &mut Vec<Vec<usize>>,
    ) {
        out.push(prefix.clone());
        let min_next = prefix.last().copied().unwrap_or(lo).max(lo);
        for value in min_next..=hi.min(budget) {
            prefix.push(value);
            extend(lo, hi, budget - value, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    if lo > hi {
        out.push(Vec::new());
        return out;
    }
    extend(lo, hi, budget, &mut Vec::new(), &mut out);
    out
}

/// Convenience wrappers over [`Verifier`] with the default failure cap.
pub fn verify_involution(n_max: usize) -> VerifyReport {
    Verifier::default().involution(n_max)
}

pub fn verify_symmetry(n_max: usize) -> VerifyReport {
    Verifier::default().symmetry(n_max)
}

pub fn verify_supersymmetry(n_max: usize) -> VerifyReport {
    Verifier::default().supersymmetry(n_max)
}

pub fn verify_gf(arm_max: usize, leg_max: usize, coarm_max: usize, n_max: usize) -> VerifyReport {
    Verifier::default().generating_function(arm_max, leg_max, coarm_max, n_max)
}

pub fn verify_pealing(n_max: usize, rows_max: usize, cols_max: usize) -> VerifyReport {
    Verifier::default().pealing(n_max, rows_max, cols_max)
}

pub fn verify_remark(rows_max: usize, cols_max: usize, degree: usize) -> VerifyReport {
    Verifier::default().remark(rows_max, cols_max, degree)
}

pub fn verify_zeta(n_max: usize, sum_max: usize) -> VerifyReport {
    Verifier::default().zeta_transport(n_max, sum_max)
}
