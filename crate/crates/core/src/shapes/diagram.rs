use serde::{Deserialize, Serialize};

use super::composition::Composition;

/// Statistics of one cell `(row, col)` of the diagram of a composition
/// (both one-based).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct CellStats {
    pub row: usize,
    pub col: u32,
    pub arm: u32,
    pub leg: u32,
    pub coarm: u32,
    pub coleg: u32,
}

/// One entry per cell, rows first, then columns.
pub fn diagram_stats(alpha: &Composition) -> Vec<CellStats> {
    let a = alpha.parts();
    let n = a.len();
    let mut out = Vec::with_capacity(alpha.size() as usize);
    for i in 0..n {
        let ai = a[i];
        let coleg = (i + 1..n).filter(|&k| a[k] > ai).count() + (0..i).filter(|&k| a[k] >= ai).count();
        for j in 1..=ai {
            let leg = (i + 1..n).filter(|&k| j <= a[k] && a[k] <= ai).count()
                + (0..i).filter(|&k| j <= a[k] + 1 && a[k] + 1 <= ai).count();
            out.push(CellStats {
                row: i + 1,
                col: j,
                arm: ai - j,
                leg: leg as u32,
                coarm: j - 1,
                coleg: coleg as u32,
            });
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn stats(v: &[u32]) -> Vec<(u32, u32, u32, u32)> {
        diagram_stats(&Composition::new(v.to_vec()).unwrap())
            .into_iter()
            .map(|s| (s.arm, s.leg, s.coarm, s.coleg))
            .collect()
    }

    #[test]
    fn empty_diagram() {
        assert!(stats(&[0, 0, 0]).is_empty());
    }

    #[test]
    fn hand_counted_cells() {
        assert_eq!(stats(&[0, 1]), vec![(0, 1, 0, 0)]);
        assert_eq!(stats(&[2, 1]), vec![(1, 1, 0, 0), (0, 0, 1, 0), (0, 0, 0, 1)]);
        let cells = diagram_stats(&Composition::new(vec![2, 1]).unwrap());
        assert_eq!((cells[2].row, cells[2].col), (2, 1));
    }

    #[test]
    fn single_row_is_classical() {
        // n = 1: legs and colegs vanish, arms count down, coarms count up.
        assert_eq!(stats(&[3]), vec![(2, 0, 0, 0), (1, 0, 1, 0), (0, 0, 2, 0)]);
    }
}
