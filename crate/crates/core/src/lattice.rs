//! Lattices, cell states and spatio-temporal traces.
//!
//! A lattice is a dense 1D ring or 2D torus of small integer cell states.
//! All boundary handling is periodic; offsets wrap around the extents.

use std::fmt;

use crate::error::{Error, Result};

/// A single cell state, encoded as a small signed integer.
///
/// The empty/dead code of an alphabet is its minimum state (−1 for the
/// traffic automata, 0 for binary ones).
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CellState(pub i16);

impl fmt::Display for CellState {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// The cell-state alphabet of an automaton, with the character used for each
/// state in the trace text format.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Alphabet {
    entries: Vec<(CellState, char)>,
}

impl Alphabet {
    /// Build an alphabet from (state, display char) pairs.
    pub fn new(mut entries: Vec<(CellState, char)>) -> Result<Self> {
        if entries.is_empty() {
            return Err(Error::InvalidParameter("alphabet must be non-empty".into()));
        }
        entries.sort_by_key(|(s, _)| *s);
        for pair in entries.windows(2) {
            if pair[0].0 == pair[1].0 {
                return Err(Error::InvalidParameter(format!(
                    "duplicate alphabet state {}",
                    pair[0].0
                )));
            }
            if pair[0].1 == pair[1].1 {
                return Err(Error::InvalidParameter(format!(
                    "duplicate alphabet character '{}'",
                    pair[0].1
                )));
            }
        }
        Ok(Alphabet { entries })
    }

    /// Binary occupancy alphabet: 0 = '.', 1 = '#'.
    pub fn binary() -> Self {
        Alphabet {
            entries: vec![(CellState(0), '.'), (CellState(1), '#')],
        }
    }

    /// Traffic alphabet for a given maximum velocity: −1 = '.' (empty) and
    /// digits '0'..'9' for vehicle velocities.
    pub fn traffic(v_max: u8) -> Self {
        let mut entries = vec![(CellState(-1), '.')];
        for v in 0..=v_max {
            entries.push((CellState(v as i16), (b'0' + v) as char));
        }
        Alphabet { entries }
    }

    pub fn states(&self) -> impl Iterator<Item = CellState> + '_ {
        self.entries.iter().map(|(s, _)| *s)
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn contains(&self, state: CellState) -> bool {
        self.entries.iter().any(|(s, _)| *s == state)
    }

    /// The designated empty/dead state: the alphabet minimum.
    pub fn quiescent(&self) -> CellState {
        self.entries[0].0
    }

    pub fn is_binary(&self) -> bool {
        self.entries.len() == 2
            && self.entries[0].0 == CellState(0)
            && self.entries[1].0 == CellState(1)
    }

    pub fn char_for(&self, state: CellState) -> Option<char> {
        self.entries
            .iter()
            .find(|(s, _)| *s == state)
            .map(|(_, c)| *c)
    }

    pub fn state_for(&self, ch: char) -> Option<CellState> {
        self.entries
            .iter()
            .find(|(_, c)| *c == ch)
            .map(|(s, _)| *s)
    }

    pub fn entries(&self) -> &[(CellState, char)] {
        &self.entries
    }

    fn describe(&self) -> String {
        let codes: Vec<String> = self.entries.iter().map(|(s, _)| s.to_string()).collect();
        format!("{{{}}}", codes.join(","))
    }

    pub(crate) fn check_state(&self, state: CellState) -> Result<()> {
        if self.contains(state) {
            Ok(())
        } else {
            Err(Error::AlphabetMismatch {
                state: state.0,
                alphabet: self.describe(),
            })
        }
    }
}

/// A relative cell position. `dy` is 0 for one-dimensional lattices.
///
/// Ordering is row-major reading order: by `dy`, then `dx`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Offset {
    pub dx: i32,
    pub dy: i32,
}

impl Offset {
    pub const fn new(dx: i32, dy: i32) -> Self {
        Offset { dx, dy }
    }

    pub const fn x(dx: i32) -> Self {
        Offset { dx, dy: 0 }
    }

    pub const CENTER: Offset = Offset { dx: 0, dy: 0 };

    /// Chebyshev distance to the central cell.
    pub fn chebyshev(&self) -> u32 {
        self.dx.unsigned_abs().max(self.dy.unsigned_abs())
    }
}

impl PartialOrd for Offset {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Offset {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        (self.dy, self.dx).cmp(&(other.dy, other.dx))
    }
}

/// A dense periodic lattice: a ring (1D) or torus (2D) of cell states.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Lattice {
    rows: usize,
    cols: usize,
    dims: u8,
    cells: Vec<CellState>,
}

impl Lattice {
    /// One-dimensional ring filled with a constant state.
    pub fn ring(width: usize, fill: CellState) -> Result<Self> {
        if width == 0 {
            return Err(Error::InvalidParameter("lattice width must be > 0".into()));
        }
        Ok(Lattice {
            rows: 1,
            cols: width,
            dims: 1,
            cells: vec![fill; width],
        })
    }

    /// Two-dimensional torus filled with a constant state.
    pub fn torus(rows: usize, cols: usize, fill: CellState) -> Result<Self> {
        if rows == 0 || cols == 0 {
            return Err(Error::InvalidParameter(
                "lattice extents must be > 0".into(),
            ));
        }
        Ok(Lattice {
            rows,
            cols,
            dims: 2,
            cells: vec![fill; rows * cols],
        })
    }

    pub fn from_states(dims: u8, rows: usize, cols: usize, cells: Vec<CellState>) -> Result<Self> {
        if cells.len() != rows * cols {
            return Err(Error::InvalidParameter(format!(
                "cell count {} does not match extents {}x{}",
                cells.len(),
                rows,
                cols
            )));
        }
        if dims == 1 && rows != 1 {
            return Err(Error::InvalidParameter(
                "1D lattice must have a single row".into(),
            ));
        }
        Ok(Lattice {
            rows,
            cols,
            dims,
            cells,
        })
    }

    pub fn dims(&self) -> u8 {
        self.dims
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn len(&self) -> usize {
        self.cells.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cells.is_empty()
    }

    pub fn cells(&self) -> &[CellState] {
        &self.cells
    }

    pub fn get(&self, index: usize) -> CellState {
        self.cells[index]
    }

    pub fn set(&mut self, index: usize, state: CellState) {
        self.cells[index] = state;
    }

    /// State of the cell at `offset` relative to linear position `index`,
    /// with periodic wrap-around.
    pub fn get_offset(&self, index: usize, offset: Offset) -> CellState {
        self.cells[self.offset_index(index, offset)]
    }

    pub fn offset_index(&self, index: usize, offset: Offset) -> usize {
        let row = (index / self.cols) as i64;
        let col = (index % self.cols) as i64;
        let r = (row + offset.dy as i64).rem_euclid(self.rows as i64) as usize;
        let c = (col + offset.dx as i64).rem_euclid(self.cols as i64) as usize;
        r * self.cols + c
    }

    /// Number of cells whose state differs from `state`.
    pub fn count_not(&self, state: CellState) -> usize {
        self.cells.iter().filter(|&&s| s != state).count()
    }

    pub fn same_extents(&self, other: &Lattice) -> bool {
        self.rows == other.rows && self.cols == other.cols && self.dims == other.dims
    }
}

/// An ordered sequence of lattice configurations over discrete time.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Trace {
    alphabet: Alphabet,
    steps: Vec<Lattice>,
}

impl Trace {
    pub fn new(alphabet: Alphabet, steps: Vec<Lattice>) -> Result<Self> {
        if steps.is_empty() {
            return Err(Error::TooFewSteps {
                required: 1,
                got: 0,
            });
        }
        let first = &steps[0];
        for lat in &steps {
            if !lat.same_extents(first) {
                return Err(Error::InvalidParameter(
                    "all trace steps must share extents".into(),
                ));
            }
            for &s in lat.cells() {
                alphabet.check_state(s)?;
            }
        }
        Ok(Trace { alphabet, steps })
    }

    pub fn alphabet(&self) -> &Alphabet {
        &self.alphabet
    }

    pub fn len(&self) -> usize {
        self.steps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.steps.is_empty()
    }

    pub fn step(&self, t: usize) -> &Lattice {
        &self.steps[t]
    }

    pub fn steps(&self) -> &[Lattice] {
        &self.steps
    }

    pub fn dims(&self) -> u8 {
        self.steps[0].dims()
    }

    /// Collapse to binary occupancy: any state ≥ 0 becomes 1, the rest 0.
    /// Used to export traffic traces where only empty/occupied matters.
    pub fn to_binary_occupancy(&self) -> Trace {
        let steps = self
            .steps
            .iter()
            .map(|lat| {
                let cells = lat
                    .cells()
                    .iter()
                    .map(|s| CellState(i16::from(s.0 >= 0)))
                    .collect();
                Lattice::from_states(lat.dims(), lat.rows(), lat.cols(), cells)
                    .expect("extents preserved")
            })
            .collect();
        Trace {
            alphabet: Alphabet::binary(),
            steps,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s(v: i16) -> CellState {
        CellState(v)
    }

    #[test]
    fn ring_offset_wraps() {
        let mut lat = Lattice::ring(5, s(0)).unwrap();
        lat.set(0, s(1));
        lat.set(4, s(2));
        assert_eq!(lat.get_offset(0, Offset::x(-1)), s(2));
        assert_eq!(lat.get_offset(4, Offset::x(1)), s(1));
        assert_eq!(lat.get_offset(2, Offset::x(0)), s(0));
    }

    #[test]
    fn torus_offset_wraps_both_axes() {
        let mut lat = Lattice::torus(3, 4, s(0)).unwrap();
        lat.set(0, s(1));
        // cell (2,3) sees (0,0) at offset (+1,+1)
        let idx = 2 * 4 + 3;
        assert_eq!(lat.get_offset(idx, Offset::new(1, 1)), s(1));
    }

    #[test]
    fn alphabet_rejects_duplicates() {
        assert!(Alphabet::new(vec![(s(0), '.'), (s(0), '#')]).is_err());
        assert!(Alphabet::new(vec![(s(0), '.'), (s(1), '.')]).is_err());
    }

    #[test]
    fn quiescent_is_minimum() {
        assert_eq!(Alphabet::traffic(2).quiescent(), s(-1));
        assert_eq!(Alphabet::binary().quiescent(), s(0));
    }

    #[test]
    fn trace_rejects_mismatched_extents() {
        let a = Lattice::ring(5, s(0)).unwrap();
        let b = Lattice::ring(6, s(0)).unwrap();
        assert!(Trace::new(Alphabet::binary(), vec![a, b]).is_err());
    }

    #[test]
    fn trace_rejects_foreign_states() {
        let a = Lattice::ring(3, s(7)).unwrap();
        assert!(Trace::new(Alphabet::binary(), vec![a]).is_err());
    }

    #[test]
    fn binary_occupancy_view() {
        let lat = Lattice::from_states(
            1,
            1,
            4,
            vec![s(-1), s(0), s(2), s(-1)],
        )
        .unwrap();
        let trace = Trace::new(Alphabet::traffic(2), vec![lat]).unwrap();
        let bin = trace.to_binary_occupancy();
        let got: Vec<i16> = bin.step(0).cells().iter().map(|c| c.0).collect();
        assert_eq!(got, vec![0, 1, 1, 0]);
        assert!(bin.alphabet().is_binary());
    }

    #[test]
    fn offset_order_is_reading_order() {
        let mut offs = vec![
            Offset::new(1, 0),
            Offset::new(-1, -1),
            Offset::new(0, 0),
            Offset::new(1, -1),
        ];
        offs.sort();
        assert_eq!(
            offs,
            vec![
                Offset::new(-1, -1),
                Offset::new(1, -1),
                Offset::new(0, 0),
                Offset::new(1, 0),
            ]
        );
    }
}
