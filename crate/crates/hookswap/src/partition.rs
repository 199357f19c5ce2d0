//! Partitions, diagram cells, and cell statistics.
//!
//! A partition is a weakly decreasing sequence of positive integers; its
//! Ferrers diagram has one left-justified row of cells per part. Cells are
//! addressed as `(x, y)` where `x` is the 1-based column and `y` the 1-based
//! part index. The leg of a cell counts cells in rows with *larger* part
//! index in the same column, so row `y + 1` sits "above" row `y`.

use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use crate::error::Error;

/// A partition: weakly decreasing positive parts. May be empty.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Partition {
    parts: Vec<usize>,
}

impl Partition {
    /// Builds a partition after validating that `parts` is weakly decreasing
    /// and strictly positive. The empty sequence is the empty partition.
    pub fn new(parts: Vec<usize>) -> Result<Self, Error> {
        for (i, &p) in parts.iter().enumerate() {
            if p == 0 {
                return Err(Error::PartNotPositive { index: i });
            }
            if i > 0 && parts[i - 1] < p {
                return Err(Error::PartsNotDecreasing {
                    index: i,
                    prev: parts[i - 1],
                    next: p,
                });
            }
        }
        Ok(Partition { parts })
    }

    /// The empty partition (weight 0, no cells).
    pub fn empty() -> Self {
        Partition { parts: Vec::new() }
    }

    /// Wraps parts that are already known to be valid.
    pub(crate) fn from_raw(parts: Vec<usize>) -> Self {
        debug_assert!(parts.iter().all(|&p| p > 0));
        debug_assert!(parts.windows(2).all(|w| w[0] >= w[1]));
        Partition { parts }
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    /// Number of parts.
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// Sum of all parts.
    pub fn weight(&self) -> usize {
        self.parts.iter().sum()
    }

    /// Length of row `y` (1-based); 0 outside the diagram.
    pub fn part(&self, y: usize) -> usize {
        if y == 0 {
            0
        } else {
            self.parts.get(y - 1).copied().unwrap_or(0)
        }
    }

    /// The conjugate partition: part `i` counts the parts of `self` that
    /// are `>= i`. Transposes the diagram.
    pub fn conjugate(&self) -> Partition {
        let columns = self.part(1);
        let parts = (1..=columns)
            .map(|i| self.parts.partition_point(|&p| p >= i))
            .collect();
        Partition::from_raw(parts)
    }

    /// Whether `cell` lies in the diagram.
    pub fn contains(&self, cell: Cell) -> bool {
        cell.x >= 1 && cell.y >= 1 && cell.x <= self.part(cell.y)
    }

    /// All cells of the diagram, ordered by part index then column.
    pub fn cells(&self) -> impl Iterator<Item = Cell> + '_ {
        self.parts
            .iter()
            .enumerate()
            .flat_map(|(i, &p)| (1..=p).map(move |x| Cell { x, y: i + 1 }))
    }

    /// The six statistics of `cell` inside this partition.
    pub fn stats(&self, cell: Cell) -> Result<StatTuple, Error> {
        if !self.contains(cell) {
            return Err(Error::CellOutOfDiagram { cell });
        }
        let arm = self.part(cell.y) - cell.x;
        let coarm = cell.x - 1;
        let coleg = cell.y - 1;
        // Rows with a cell in column x form a prefix, so the leg is the
        // number of such rows past y.
        let leg = self.parts.partition_point(|&p| p >= cell.x) - cell.y;
        Ok(StatTuple {
            arm,
            leg,
            coarm,
            coleg,
            hook: leg + arm + 1,
            part_len: coarm + arm + 1,
        })
    }
}

impl fmt::Display for Partition {
    /// Text encoding: comma-separated parts, empty string for the empty
    /// partition. Example: `5,3,1`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Partition({self})")
    }
}

impl FromStr for Partition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        if s.trim().is_empty() {
            return Ok(Partition::empty());
        }
        let parts = s
            .split(',')
            .map(|piece| piece.trim().parse::<usize>().map_err(Error::from))
            .collect::<Result<Vec<_>, _>>()?;
        Partition::new(parts)
    }
}

/// A cell of a Ferrers diagram: 1-based column `x` and part index `y`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct Cell {
    pub x: usize,
    pub y: usize,
}

impl Cell {
    pub fn new(x: usize, y: usize) -> Self {
        Cell { x, y }
    }
}

impl fmt::Display for Cell {
    /// Text encoding: `x,y`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{},{}", self.x, self.y)
    }
}

impl FromStr for Cell {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        let mut pieces = s.split(',');
        let (Some(xs), Some(ys), None) = (pieces.next(), pieces.next(), pieces.next()) else {
            return Err(Error::CellEncoding);
        };
        let x = xs.trim().parse::<usize>()?;
        let y = ys.trim().parse::<usize>()?;
        if x == 0 || y == 0 {
            return Err(Error::CellEncoding);
        }
        Ok(Cell { x, y })
    }
}

/// The six statistics of a cell: arm, leg, coarm, coleg, and the derived
/// hook length (`leg + arm + 1`) and part length (`coarm + arm + 1`).
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub struct StatTuple {
    pub arm: usize,
    pub leg: usize,
    pub coarm: usize,
    pub coleg: usize,
    pub hook: usize,
    pub part_len: usize,
}

/// A partition with one distinguished cell of its diagram.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct PointedPartition {
    partition: Partition,
    cell: Cell,
}

impl PointedPartition {
    /// Validates that `cell` lies in the diagram of `partition`.
    pub fn new(partition: Partition, cell: Cell) -> Result<Self, Error> {
        if !partition.contains(cell) {
            return Err(Error::CellOutOfDiagram { cell });
        }
        Ok(PointedPartition { partition, cell })
    }

    pub fn partition(&self) -> &Partition {
        &self.partition
    }

    pub fn cell(&self) -> Cell {
        self.cell
    }

    pub fn weight(&self) -> usize {
        self.partition.weight()
    }

    /// Statistics of the distinguished cell. Infallible: the cell was
    /// validated at construction.
    pub fn stats(&self) -> StatTuple {
        self.partition
            .stats(self.cell)
            .expect("cell validated at construction")
    }

    pub fn into_parts(self) -> (Partition, Cell) {
        (self.partition, self.cell)
    }
}

impl fmt::Display for PointedPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}; {})", self.partition, self.cell)
    }
}

#[cfg(test)]
mod tests {
    use alloc::string::ToString;
    use alloc::vec;

    use super::*;

    fn p(parts: &[usize]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    #[test]
    fn accepts_the_101_cell_partition() {
        let lambda = p(&[12, 10, 10, 9, 9, 8, 7, 7, 5, 5, 4, 4, 3, 2, 2, 2, 1, 1]);
        assert_eq!(lambda.weight(), 101);
        assert_eq!(lambda.len(), 18);
    }

    #[test]
    fn accepts_the_empty_partition() {
        let e = Partition::new(vec![]).unwrap();
        assert_eq!(e.weight(), 0);
        assert!(e.is_empty());
        assert_eq!(e, Partition::empty());
    }

    #[test]
    fn rejects_increasing_parts() {
        assert_eq!(
            Partition::new(vec![3, 5]),
            Err(Error::PartsNotDecreasing {
                index: 1,
                prev: 3,
                next: 5
            })
        );
    }

    #[test]
    fn rejects_zero_parts() {
        assert_eq!(
            Partition::new(vec![2, 0]),
            Err(Error::PartNotPositive { index: 1 })
        );
    }

    #[test]
    fn weight_sums_parts() {
        assert_eq!(p(&[5, 5, 4, 4, 3, 2, 2, 2, 1, 1]).weight(), 29);
        assert_eq!(Partition::empty().weight(), 0);
    }

    #[test]
    fn conjugate_matches_worked_values() {
        assert_eq!(p(&[2, 1, 1]).conjugate(), p(&[3, 1]));
        assert_eq!(p(&[5, 3, 1]).conjugate(), p(&[3, 2, 2, 1, 1]));
        assert_eq!(Partition::empty().conjugate(), Partition::empty());
    }

    #[test]
    fn stats_of_the_example_cell() {
        let lambda = p(&[12, 10, 10, 9, 9, 8, 7, 7, 5, 5, 4, 4, 3, 2, 2, 2, 1, 1]);
        let s = lambda.stats(Cell::new(6, 5)).unwrap();
        assert_eq!((s.arm, s.leg, s.coarm), (3, 3, 5));
        assert_eq!(s.hook, 7);
        assert_eq!(s.part_len, 9);
    }

    #[test]
    fn stats_of_a_single_cell() {
        let s = p(&[1]).stats(Cell::new(1, 1)).unwrap();
        assert_eq!(
            s,
            StatTuple {
                arm: 0,
                leg: 0,
                coarm: 0,
                coleg: 0,
                hook: 1,
                part_len: 1
            }
        );
    }

    #[test]
    fn stats_along_a_single_row() {
        let lambda = p(&[4]);
        let expected = [(4, 4), (3, 4), (2, 4), (1, 4)];
        for (x, &(h, pl)) in (1..=4).zip(&expected) {
            let s = lambda.stats(Cell::new(x, 1)).unwrap();
            assert_eq!((s.hook, s.part_len), (h, pl));
        }
    }

    #[test]
    fn stats_rejects_cells_outside_the_diagram() {
        let lambda = p(&[3, 1]);
        for cell in [
            Cell::new(2, 2),
            Cell::new(4, 1),
            Cell::new(1, 3),
            Cell::new(0, 1),
        ] {
            assert_eq!(lambda.stats(cell), Err(Error::CellOutOfDiagram { cell }));
        }
    }

    #[test]
    fn cells_are_ordered_by_row_then_column() {
        let lambda = p(&[2, 1]);
        let cells: Vec<_> = lambda.cells().collect();
        assert_eq!(
            cells,
            vec![Cell::new(1, 1), Cell::new(2, 1), Cell::new(1, 2)]
        );
    }

    #[test]
    fn text_encoding_round_trips() {
        let lambda = p(&[5, 3, 1]);
        assert_eq!(lambda.to_string(), "5,3,1");
        assert_eq!("5,3,1".parse::<Partition>().unwrap(), lambda);
        assert_eq!("".parse::<Partition>().unwrap(), Partition::empty());
        assert_eq!(Partition::empty().to_string(), "");
        assert!("3,5".parse::<Partition>().is_err());
        assert!("-2".parse::<Partition>().is_err());

        let cell = Cell::new(6, 5);
        assert_eq!(cell.to_string(), "6,5");
        assert_eq!("6,5".parse::<Cell>().unwrap(), cell);
        assert!("6".parse::<Cell>().is_err());
        assert!("6,5,4".parse::<Cell>().is_err());
        assert!("0,1".parse::<Cell>().is_err());
    }

    #[test]
    fn pointed_partition_validates_its_cell() {
        let lambda = p(&[3, 1]);
        assert!(PointedPartition::new(lambda.clone(), Cell::new(3, 1)).is_ok());
        assert!(PointedPartition::new(lambda, Cell::new(2, 2)).is_err());
    }
}
