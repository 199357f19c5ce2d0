//! The five-region decomposition of a pointed partition, the reversible
//! transformation into its boxed form, the conjugation step, and the
//! involution `phi` that exchanges hook length and part length, together
//! with the row shift `tau` and the composite `zeta`.
//!
//! For a pointed partition with statistics `(arm, leg, coarm)`, writing
//! `x = coarm + 1` and `y` for the marked part index, the regions are:
//! rows before `y` (all longer than the marked row), an
//! `(leg + 1) x (coarm + 1)` rectangle covering the marked row block, the
//! marked row's tail of length `arm`, the tails of the `leg` rows above,
//! and the remaining short rows. Merging them back in that order is the
//! inverse.

use alloc::vec;
use alloc::vec::Vec;

use crate::error::Error;
use crate::partition::{Cell, Partition, PointedPartition};
use crate::rimhook::{peal, unpeal};

/// The `(arm, leg, coarm)` statistics a decomposition is indexed by.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub struct Context {
    pub arm: usize,
    pub leg: usize,
    pub coarm: usize,
}

impl Context {
    /// The context of the conjugation step: leg and coarm trade places.
    pub fn swapped(self) -> Context {
        Context {
            arm: self.arm,
            leg: self.coarm,
            coarm: self.leg,
        }
    }

    /// The rectangle region determined by this context:
    /// `leg + 1` rows of length `coarm + 1`.
    pub fn rectangle(self) -> Partition {
        Partition::new(vec![self.coarm + 1; self.leg + 1]).expect("constant rows")
    }

    /// The marked row's tail: a single row of length `arm`, empty when the
    /// arm is zero.
    pub fn arm_row(self) -> Partition {
        if self.arm == 0 {
            Partition::empty()
        } else {
            Partition::new(vec![self.arm]).expect("single positive part")
        }
    }
}

/// The five regions of a pointed partition. Region letters in the JSON
/// trace encoding: `short_rows` = "A", `leg_tails` = "B", `long_rows` =
/// "C", `rect` = "D", `arm_tail` = "E".
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Quintuple {
    /// Rows past the leg block; every part is at most `ctx.coarm`.
    pub short_rows: Partition,
    /// Tails of the leg rows beyond the rectangle; at most `ctx.leg`
    /// parts, each at most `ctx.arm`.
    pub leg_tails: Partition,
    /// Rows before the marked one; every part is at least
    /// `ctx.coarm + ctx.arm + 1`.
    pub long_rows: Partition,
    /// The `(leg + 1) x (coarm + 1)` rectangle.
    pub rect: Partition,
    /// The marked row's tail: one part equal to `ctx.arm`, or empty.
    pub arm_tail: Partition,
    pub ctx: Context,
}

impl Quintuple {
    /// Total number of cells across the five regions.
    pub fn weight(&self) -> usize {
        self.short_rows.weight()
            + self.leg_tails.weight()
            + self.long_rows.weight()
            + self.rect.weight()
            + self.arm_tail.weight()
    }

    /// Checks the region shapes against the context.
    pub fn validate(&self) -> Result<(), Error> {
        let Context { arm, leg, coarm } = self.ctx;
        if self.short_rows.part(1) > coarm {
            return Err(Error::Invariant("short rows must have parts at most coarm"));
        }
        if self.leg_tails.len() > leg || self.leg_tails.part(1) > arm {
            return Err(Error::Invariant("leg tails must fit in a leg x arm box"));
        }
        if self.long_rows.parts().iter().any(|&p| p < coarm + arm + 1) {
            return Err(Error::Invariant(
                "long rows must have parts at least coarm + arm + 1",
            ));
        }
        if self.rect != self.ctx.rectangle() {
            return Err(Error::Invariant(
                "rect must be a (leg + 1) x (coarm + 1) rectangle",
            ));
        }
        if self.arm_tail != self.ctx.arm_row() {
            return Err(Error::Invariant(
                "arm tail must be a single row of length arm",
            ));
        }
        Ok(())
    }
}

/// The boxed form of a decomposition: the short rows are replaced by their
/// pealing remainder and the removed strip lengths are merged into the
/// long rows. JSON trace letters: `reduced` = "At", `merged_rows` = "Ct";
/// the rest as in [`Quintuple`].
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct TildeQuintuple {
    /// Pealing remainder of the short rows; fits in an `arm x coarm` box.
    pub reduced: Partition,
    pub leg_tails: Partition,
    /// Long rows with the removed strip lengths merged in; every part is
    /// at least `ctx.arm + 1`.
    pub merged_rows: Partition,
    pub rect: Partition,
    pub arm_tail: Partition,
    pub ctx: Context,
}

impl TildeQuintuple {
    pub fn weight(&self) -> usize {
        self.reduced.weight()
            + self.leg_tails.weight()
            + self.merged_rows.weight()
            + self.rect.weight()
            + self.arm_tail.weight()
    }

    pub fn validate(&self) -> Result<(), Error> {
        let Context { arm, leg, coarm } = self.ctx;
        if self.reduced.len() > arm || self.reduced.part(1) > coarm {
            return Err(Error::Invariant(
                "reduced rows must fit in an arm x coarm box",
            ));
        }
        if self.leg_tails.len() > leg || self.leg_tails.part(1) > arm {
            return Err(Error::Invariant("leg tails must fit in a leg x arm box"));
        }
        if self.merged_rows.parts().iter().any(|&p| p < arm + 1) {
            return Err(Error::Invariant(
                "merged rows must have parts at least arm + 1",
            ));
        }
        if self.rect != self.ctx.rectangle() {
            return Err(Error::Invariant(
                "rect must be a (leg + 1) x (coarm + 1) rectangle",
            ));
        }
        if self.arm_tail != self.ctx.arm_row() {
            return Err(Error::Invariant(
                "arm tail must be a single row of length arm",
            ));
        }
        Ok(())
    }
}

/// Splits a pointed partition into its five regions. Total: the region
/// weights always sum to the weight of the partition.
pub fn decompose(pp: &PointedPartition) -> Quintuple {
    let s = pp.stats();
    let ctx = Context {
        arm: s.arm,
        leg: s.leg,
        coarm: s.coarm,
    };
    let y = pp.cell().y;
    let parts = pp.partition().parts();

    let long_rows = Partition::from_raw(parts[..y - 1].to_vec());
    let leg_tails = Partition::from_raw(
        parts[y..y + ctx.leg]
            .iter()
            .map(|&p| p - (ctx.coarm + 1))
            .filter(|&p| p > 0)
            .collect(),
    );
    let short_rows = Partition::from_raw(parts[y + ctx.leg..].to_vec());

    Quintuple {
        short_rows,
        leg_tails,
        long_rows,
        rect: ctx.rectangle(),
        arm_tail: ctx.arm_row(),
        ctx,
    }
}

/// Inverse of [`decompose`]: stacks long rows, the marked row, the leg
/// rows, and the short rows; the marked cell sits at column `coarm + 1` of
/// the first row after the long ones.
pub fn recompose(q: &Quintuple) -> Result<PointedPartition, Error> {
    q.validate()?;
    let Context { arm, leg, coarm } = q.ctx;
    let mut parts = q.long_rows.parts().to_vec();
    parts.push(coarm + 1 + arm);
    for j in 0..leg {
        parts.push(coarm + 1 + q.leg_tails.part(j + 1));
    }
    parts.extend_from_slice(q.short_rows.parts());
    let cell = Cell::new(coarm + 1, q.long_rows.len() + 1);
    let pp = PointedPartition::new(Partition::from_raw(parts), cell)
        .expect("marked cell lies in the rectangle");
    debug_assert_eq!(pp.weight(), q.weight());
    Ok(pp)
}

/// Peals the short rows into an `arm x coarm` box and merges the removed
/// strip lengths into the long rows.
pub fn to_tilde(q: &Quintuple) -> Result<TildeQuintuple, Error> {
    q.validate()?;
    let pealed = peal(&q.short_rows, q.ctx.arm, q.ctx.coarm)
        .expect("validated short rows fit the column bound");
    let mut merged = q.long_rows.parts().to_vec();
    merged.extend(pealed.strip_lengths.iter().rev().copied());
    Ok(TildeQuintuple {
        reduced: pealed.reduced,
        leg_tails: q.leg_tails.clone(),
        merged_rows: Partition::from_raw(merged),
        rect: q.rect.clone(),
        arm_tail: q.arm_tail.clone(),
        ctx: q.ctx,
    })
}

/// Inverse of [`to_tilde`]: moves the parts of size at most `arm + coarm`
/// out of the merged rows and feeds them back through [`unpeal`].
pub fn from_tilde(tq: &TildeQuintuple) -> Result<Quintuple, Error> {
    tq.validate()?;
    let Context { arm, coarm, .. } = tq.ctx;
    let threshold = arm + coarm;
    let parts = tq.merged_rows.parts();
    let cut = parts.partition_point(|&p| p > threshold);
    let long_rows = Partition::from_raw(parts[..cut].to_vec());
    let strip_lengths: Vec<usize> = parts[cut..].iter().rev().copied().collect();
    let short_rows = unpeal(&tq.reduced, &strip_lengths, arm, coarm)
        .expect("validated merged rows yield admissible strips");
    Ok(Quintuple {
        short_rows,
        leg_tails: tq.leg_tails.clone(),
        long_rows,
        rect: tq.rect.clone(),
        arm_tail: tq.arm_tail.clone(),
        ctx: tq.ctx,
    })
}

/// The conjugation step: conjugates the boxed remainder, the leg tails,
/// and the rectangle, swapping leg and coarm in the context. Applying it
/// twice is the identity.
pub fn rho(tq: &TildeQuintuple) -> TildeQuintuple {
    TildeQuintuple {
        reduced: tq.leg_tails.conjugate(),
        leg_tails: tq.reduced.conjugate(),
        merged_rows: tq.merged_rows.clone(),
        rect: tq.rect.conjugate(),
        arm_tail: tq.arm_tail.clone(),
        ctx: tq.ctx.swapped(),
    }
}

/// Every intermediate object of one application of [`phi`], in order.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct PhiTrace {
    pub quintuple: Quintuple,
    pub tilde: TildeQuintuple,
    pub swapped: TildeQuintuple,
    pub back: Quintuple,
    pub image: PointedPartition,
}

/// Runs the full composition and keeps the intermediates for inspection.
pub fn phi_trace(pp: &PointedPartition) -> PhiTrace {
    let quintuple = decompose(pp);
    let tilde = to_tilde(&quintuple).expect("decomposition satisfies the region invariants");
    let swapped = rho(&tilde);
    let back = from_tilde(&swapped).expect("conjugated form satisfies the region invariants");
    let image = recompose(&back).expect("recovered regions satisfy the invariants");
    PhiTrace {
        quintuple,
        tilde,
        swapped,
        back,
        image,
    }
}

/// The involution on pointed partitions exchanging hook length and part
/// length: a cell with statistics `(arm, leg, coarm)` maps to one with
/// `(arm, coarm, leg)`, so `(hook, part_len)` becomes `(part_len, hook)`.
/// Weight is preserved and `phi(phi(pp)) == pp`.
pub fn phi(pp: &PointedPartition) -> PointedPartition {
    phi_trace(pp).image
}

/// Moves the marked cell along its row to the position with statistics
/// `(new_arm, new_coarm)`; requires `arm + coarm` to be preserved. The
/// partition itself is unchanged.
pub fn tau(
    pp: &PointedPartition,
    new_arm: usize,
    new_coarm: usize,
) -> Result<PointedPartition, Error> {
    let s = pp.stats();
    if s.arm + s.coarm != new_arm + new_coarm {
        return Err(Error::TargetSumMismatch {
            current: s.arm + s.coarm,
            target: new_arm + new_coarm,
        });
    }
    let cell = Cell::new(new_coarm + 1, pp.cell().y);
    Ok(PointedPartition::new(pp.partition().clone(), cell)
        .expect("target column stays within the marked row"))
}

/// Transports a pointed partition from one `(arm, leg)` class to another
/// with the same sum: conjugated row shift `phi . tau . phi`.
pub fn zeta(
    pp: &PointedPartition,
    new_arm: usize,
    new_leg: usize,
) -> Result<PointedPartition, Error> {
    let s = pp.stats();
    if s.arm + s.leg != new_arm + new_leg {
        return Err(Error::TargetSumMismatch {
            current: s.arm + s.leg,
            target: new_arm + new_leg,
        });
    }
    let swapped = phi(pp);
    let moved = tau(&swapped, new_arm, new_leg).expect("phi preserves arm + leg as arm + coarm");
    Ok(phi(&moved))
}
