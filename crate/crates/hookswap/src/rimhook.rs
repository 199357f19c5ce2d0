//! Hooks, rim hooks (border strips), strip removal, and the pealing
//! bijection between partitions with bounded parts and pairs
//! (boxed remainder, weakly increasing strip lengths).

use alloc::vec::Vec;

use crate::error::Error;
use crate::partition::{Cell, Partition};

/// The cells of the hook of `cell`: the cell itself, the cells to its right
/// in the same row, and the cells above it (larger part index) in the same
/// column. Listed from the top of the column down, then along the row.
pub fn hook_cells(p: &Partition, cell: Cell) -> Result<Vec<Cell>, Error> {
    let s = p.stats(cell)?;
    let mut cells = Vec::with_capacity(s.hook);
    for y in (cell.y..=cell.y + s.leg).rev() {
        cells.push(Cell::new(cell.x, y));
    }
    for x in cell.x + 1..=p.part(cell.y) {
        cells.push(Cell::new(x, cell.y));
    }
    Ok(cells)
}

/// A border strip: consecutive cells share a side, and every cell touches
/// the boundary of the diagram it was taken from.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct RimHook {
    cells: Vec<Cell>,
}

impl RimHook {
    pub fn cells(&self) -> &[Cell] {
        &self.cells
    }

    /// Number of cells in the strip.
    pub fn len(&self) -> usize {
        self.cells.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cells.is_empty()
    }

    /// Number of distinct rows; equals `leg + 1` for the strip of a cell.
    pub fn height(&self) -> usize {
        distinct(self.cells.iter().map(|c| c.y))
    }

    /// Number of distinct columns; equals `arm + 1` for the strip of a cell.
    pub fn width(&self) -> usize {
        distinct(self.cells.iter().map(|c| c.x))
    }
}

fn distinct(values: impl Iterator<Item = usize>) -> usize {
    let mut seen: Vec<usize> = values.collect();
    seen.sort_unstable();
    seen.dedup();
    seen.len()
}

/// The rim hook of `cell`: the border strip running from the topmost cell
/// of the cell's column to the last cell of its row. It has the same
/// length, height, and width as the hook of `cell`.
pub fn rim_hook(p: &Partition, cell: Cell) -> Result<RimHook, Error> {
    let s = p.stats(cell)?;
    let top = cell.y + s.leg;
    let mut cells = Vec::with_capacity(s.hook);
    for y in (cell.y..=top).rev() {
        // Row y of the strip spans from the column where the row above
        // ends to the end of row y itself.
        let lo = if y == top { cell.x } else { p.part(y + 1) };
        for x in lo..=p.part(y) {
            cells.push(Cell::new(x, y));
        }
    }
    debug_assert_eq!(cells.len(), s.hook);
    Ok(RimHook { cells })
}

/// Removes the rim hook of `cell`, leaving a partition. The weight drops
/// by the hook length of `cell`.
pub fn remove_rim_hook(p: &Partition, cell: Cell) -> Result<Partition, Error> {
    let s = p.stats(cell)?;
    let top = cell.y + s.leg;
    let mut parts = Vec::with_capacity(p.len());
    parts.extend_from_slice(&p.parts()[..cell.y - 1]);
    // Row y keeps what lies below the row above it, shifted in by one.
    for y in cell.y..top {
        parts.push(p.part(y + 1) - 1);
    }
    parts.push(cell.x - 1);
    parts.extend_from_slice(&p.parts()[top..]);
    parts.retain(|&q| q > 0);
    Ok(Partition::from_raw(parts))
}

/// Outcome of [`peal`]: the remainder fits in a `box_rows x box_cols` box
/// and the recorded strip lengths are weakly increasing in
/// `[box_rows + 1, box_rows + box_cols]`. The original weight equals
/// `reduced.weight()` plus the sum of the strip lengths.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct PealingResult {
    pub reduced: Partition,
    pub strip_lengths: Vec<usize>,
    pub box_rows: usize,
    pub box_cols: usize,
}

/// Repeatedly removes the rim hook of the column-1 cell with exactly
/// `box_rows` rows above it (a strip of height `box_rows + 1` reaching the
/// top of the diagram) until at most `box_rows` rows remain. Requires all
/// parts of `p` to be at most `box_cols`.
pub fn peal(p: &Partition, box_rows: usize, box_cols: usize) -> Result<PealingResult, Error> {
    if p.part(1) > box_cols {
        return Err(Error::PartExceedsBox {
            largest: p.part(1),
            bound: box_cols,
        });
    }
    let mut current = p.clone();
    let mut strip_lengths = Vec::new();
    while current.len() > box_rows {
        let anchor = Cell::new(1, current.len() - box_rows);
        let s = current.stats(anchor).expect("anchor is in column 1");
        debug_assert_eq!(s.leg, box_rows);
        strip_lengths.push(s.hook);
        current = remove_rim_hook(&current, anchor).expect("anchor is in the diagram");
    }
    debug_assert!(strip_lengths.windows(2).all(|w| w[0] <= w[1]));
    Ok(PealingResult {
        reduced: current,
        strip_lengths,
        box_rows,
        box_cols,
    })
}

/// Inverse of [`peal`]. Re-inserts the strips in reverse recording order:
/// each step finds the first row shorter than `r - box_rows`, splices a new
/// row of that length there, and lengthens the next `box_rows` rows by one.
pub fn unpeal(
    reduced: &Partition,
    strip_lengths: &[usize],
    box_rows: usize,
    box_cols: usize,
) -> Result<Partition, Error> {
    if reduced.len() > box_rows {
        return Err(Error::Invariant(
            "reduced partition must have at most box_rows parts",
        ));
    }
    if reduced.part(1) > box_cols {
        return Err(Error::PartExceedsBox {
            largest: reduced.part(1),
            bound: box_cols,
        });
    }
    for (i, &r) in strip_lengths.iter().enumerate() {
        if r < box_rows + 1 || r > box_rows + box_cols {
            return Err(Error::Invariant(
                "strip lengths must lie in [box_rows + 1, box_rows + box_cols]",
            ));
        }
        if i > 0 && strip_lengths[i - 1] > r {
            return Err(Error::Invariant("strip lengths must be weakly increasing"));
        }
    }

    let mut parts: Vec<usize> = reduced.parts().to_vec();
    for &r in strip_lengths.iter().rev() {
        let new_row = r - box_rows;
        let insert_at = parts.partition_point(|&q| q >= new_row);
        // Valid inputs guarantee the lengthened rows cover every part at
        // or past the insertion point.
        debug_assert!(parts.len() <= insert_at + box_rows);
        let mut next = Vec::with_capacity(insert_at + box_rows + 1);
        next.extend_from_slice(&parts[..insert_at]);
        next.push(new_row);
        for offset in 0..box_rows {
            let old = parts.get(insert_at + offset).copied().unwrap_or(0);
            next.push(old + 1);
        }
        parts = next;
    }
    Ok(Partition::from_raw(parts))
}

#[cfg(test)]
mod tests {
    use alloc::vec;

    use super::*;

    fn p(parts: &[usize]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    /// Brute-force oracle: scan every cell of the diagram and keep the ones
    /// in the hook of `v`.
    fn hook_cells_by_scan(lambda: &Partition, v: Cell) -> Vec<Cell> {
        lambda
            .cells()
            .filter(|c| (c.y == v.y && c.x >= v.x) || (c.x == v.x && c.y > v.y))
            .collect()
    }

    #[test]
    fn hook_cells_of_a_single_cell() {
        assert_eq!(
            hook_cells(&p(&[1]), Cell::new(1, 1)).unwrap(),
            vec![Cell::new(1, 1)]
        );
    }

    #[test]
    fn hook_cells_match_the_scan_oracle() {
        for (parts, v) in [
            (&[4, 2][..], Cell::new(1, 1)),
            (&[3, 3, 3][..], Cell::new(2, 2)),
            (&[5, 5, 4, 4, 3, 2, 2, 2, 1, 1][..], Cell::new(1, 7)),
        ] {
            let lambda = p(parts);
            let mut got = hook_cells(&lambda, v).unwrap();
            let mut want = hook_cells_by_scan(&lambda, v);
            got.sort_unstable();
            want.sort_unstable();
            assert_eq!(got, want);
            assert_eq!(got.len(), lambda.stats(v).unwrap().hook);
        }
    }

    #[test]
    fn hook_cardinalities_from_the_examples() {
        assert_eq!(hook_cells(&p(&[4, 2]), Cell::new(1, 1)).unwrap().len(), 5);
        assert_eq!(
            hook_cells(&p(&[3, 3, 3]), Cell::new(2, 2)).unwrap().len(),
            3
        );
    }

    #[test]
    fn rim_hook_of_a_single_cell() {
        let strip = rim_hook(&p(&[1]), Cell::new(1, 1)).unwrap();
        assert_eq!(strip.cells(), &[Cell::new(1, 1)]);
        assert_eq!((strip.len(), strip.height(), strip.width()), (1, 1, 1));
    }

    #[test]
    fn rim_hook_shares_the_hook_dimensions() {
        let lambda = p(&[5, 5, 4, 4, 3, 2, 2, 2, 1, 1]);
        let v = Cell::new(1, 7);
        let s = lambda.stats(v).unwrap();
        let strip = rim_hook(&lambda, v).unwrap();
        assert_eq!(strip.len(), 5);
        assert_eq!(strip.height(), 4);
        assert_eq!(strip.width(), 2);
        assert_eq!(strip.len(), s.hook);
        assert_eq!(strip.height(), s.leg + 1);
        assert_eq!(strip.width(), s.arm + 1);
    }

    #[test]
    fn rim_hook_cells_are_connected_boundary_cells() {
        let lambda = p(&[6, 4, 4, 2, 1]);
        for v in lambda.cells() {
            let strip = rim_hook(&lambda, v).unwrap();
            for w in strip.cells().windows(2) {
                let dx = w[0].x.abs_diff(w[1].x);
                let dy = w[0].y.abs_diff(w[1].y);
                assert_eq!(dx + dy, 1, "strip cells must share a side");
            }
            for c in strip.cells() {
                // Boundary: no cell diagonally up-right.
                assert!(!lambda.contains(Cell::new(c.x + 1, c.y + 1)));
            }
            assert_eq!(strip.height() + strip.width(), strip.len() + 1);
        }
    }

    #[test]
    fn removal_steps_of_the_worked_pealing() {
        let a = p(&[5, 5, 4, 4, 3, 2, 2, 2, 1, 1]);
        let after = remove_rim_hook(&a, Cell::new(1, 7)).unwrap();
        assert_eq!(after, p(&[5, 5, 4, 4, 3, 2, 1]));

        let third = remove_rim_hook(&p(&[5, 5, 4, 2, 1]), Cell::new(1, 2)).unwrap();
        assert_eq!(third, p(&[5, 3, 1]));
        assert_eq!(third.weight(), p(&[5, 5, 4, 2, 1]).weight() - 8);
    }

    #[test]
    fn removing_the_only_cell_leaves_the_empty_partition() {
        assert_eq!(
            remove_rim_hook(&p(&[1]), Cell::new(1, 1)).unwrap(),
            Partition::empty()
        );
    }

    #[test]
    fn general_removal_drops_exactly_the_hook_length() {
        let lambda = p(&[6, 4, 4, 2, 1]);
        for v in lambda.cells() {
            let s = lambda.stats(v).unwrap();
            let removed = remove_rim_hook(&lambda, v).unwrap();
            assert_eq!(removed.weight() + s.hook, lambda.weight());
        }
    }

    #[test]
    fn peal_reproduces_the_worked_example() {
        let res = peal(&p(&[5, 5, 4, 4, 3, 2, 2, 2, 1, 1]), 3, 5).unwrap();
        assert_eq!(res.reduced, p(&[5, 3, 1]));
        assert_eq!(res.strip_lengths, vec![5, 7, 8]);
    }

    #[test]
    fn peal_of_the_empty_partition_is_empty() {
        for (rows, cols) in [(0, 0), (2, 3), (4, 1)] {
            let res = peal(&Partition::empty(), rows, cols).unwrap();
            assert_eq!(res.reduced, Partition::empty());
            assert!(res.strip_lengths.is_empty());
        }
    }

    #[test]
    fn peal_small_case_frozen_by_hand_simulation() {
        // (2,2,1,1) with box 1x2: strip of height 2 at the top twice,
        // leaving the single row (1); lengths 2 then 3.
        let res = peal(&p(&[2, 2, 1, 1]), 1, 2).unwrap();
        assert_eq!(res.reduced, p(&[1]));
        assert_eq!(res.strip_lengths, vec![2, 3]);
        assert!(res.reduced.len() <= 1 && res.reduced.part(1) <= 2);
        assert_eq!(
            res.reduced.weight() + res.strip_lengths.iter().sum::<usize>(),
            6
        );
        assert_eq!(
            unpeal(&res.reduced, &res.strip_lengths, 1, 2).unwrap(),
            p(&[2, 2, 1, 1])
        );
    }

    #[test]
    fn peal_rejects_oversized_parts() {
        assert_eq!(
            peal(&p(&[4, 1]), 2, 3),
            Err(Error::PartExceedsBox {
                largest: 4,
                bound: 3
            })
        );
    }

    #[test]
    fn unpeal_reproduces_the_worked_example() {
        let a = unpeal(&p(&[5, 3, 1]), &[5, 7, 8], 3, 5).unwrap();
        assert_eq!(a, p(&[5, 5, 4, 4, 3, 2, 2, 2, 1, 1]));
    }

    #[test]
    fn unpeal_of_nothing_is_empty() {
        assert_eq!(
            unpeal(&Partition::empty(), &[], 2, 3).unwrap(),
            Partition::empty()
        );
    }

    #[test]
    fn unpeal_single_insertion() {
        let a = unpeal(&p(&[2]), &[4], 1, 3).unwrap();
        assert_eq!(a, p(&[3, 3]));
        assert_eq!(a.weight(), 6);
        assert!(a.part(1) <= 3);
        let back = peal(&a, 1, 3).unwrap();
        assert_eq!(back.reduced, p(&[2]));
        assert_eq!(back.strip_lengths, vec![4]);
    }

    #[test]
    fn unpeal_rejects_bad_inputs() {
        // Too many rows for the box.
        assert!(unpeal(&p(&[1, 1]), &[], 1, 2).is_err());
        // Part wider than the box.
        assert!(unpeal(&p(&[3]), &[], 1, 2).is_err());
        // Strip length out of range.
        assert!(unpeal(&p(&[1]), &[1], 1, 2).is_err());
        assert!(unpeal(&p(&[1]), &[4], 1, 2).is_err());
        // Decreasing strip lengths.
        assert!(unpeal(&p(&[1]), &[3, 2], 1, 2).is_err());
    }
}
