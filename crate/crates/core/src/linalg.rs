//! Exact square linear solves over [`Scalar`] by fraction-free (Bareiss)
//! elimination.

use crate::error::{Error, Result};
use crate::scalars::Scalar;

/// Solve `m · x = b` for square nonsingular `m`.
///
/// Pivots on the first nonzero entry of each column, so the result depends
/// only on the input. A zero column below the diagonal is reported as
/// [`Error::SingularSystem`].
pub fn solve(mut m: Vec<Vec<Scalar>>, mut b: Vec<Scalar>) -> Result<Vec<Scalar>> {
    let n = m.len();
    if b.len() != n || m.iter().any(|row| row.len() != n) {
        return Err(Error::DimensionError(format!(
            "linear system is not square: {} rows, rhs {}",
            n,
            b.len()
        )));
    }
    let mut prev = Scalar::one();
    for k in 0..n {
        let Some(p) = (k..n).find(|&i| !m[i][k].is_zero()) else {
            return Err(Error::SingularSystem(format!(
                "no pivot in column {} of a {n}x{n} system",
                k + 1
            )));
        };
        if p != k {
            m.swap(p, k);
            b.swap(p, k);
        }
        let pivot = m[k][k].clone();
        for i in k + 1..n {
            let factor = m[i][k].clone();
            for j in k + 1..n {
                let v = &(&pivot * &m[i][j]) - &(&factor * &m[k][j]);
                m[i][j] = v.checked_div(&prev)?;
            }
            let v = &(&pivot * &b[i]) - &(&factor * &b[k]);
            b[i] = v.checked_div(&prev)?;
            m[i][k] = Scalar::zero();
        }
        prev = pivot;
    }
    let mut x = vec![Scalar::zero(); n];
    for k in (0..n).rev() {
        let mut acc = b[k].clone();
        for j in k + 1..n {
            if !m[k][j].is_zero() && !x[j].is_zero() {
                acc = &acc - &(&m[k][j] * &x[j]);
            }
        }
        x[k] = acc.checked_div(&m[k][k])?;
    }
    Ok(x)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalars::Gen;

    fn s(v: i64) -> Scalar {
        Scalar::int(v)
    }

    #[test]
    fn small_integer_system() {
        // 2x + y = 5, x + 3y = 10
        let x = solve(vec![vec![s(2), s(1)], vec![s(1), s(3)]], vec![s(5), s(10)]).unwrap();
        assert_eq!(x, vec![s(1), s(3)]);
    }

    #[test]
    fn needs_row_swap() {
        let x = solve(vec![vec![s(0), s(1)], vec![s(1), s(0)]], vec![s(7), s(8)]).unwrap();
        assert_eq!(x, vec![s(8), s(7)]);
    }

    #[test]
    fn symbolic_system() {
        let r = Scalar::gen(Gen::R);
        // x + r y = 1, r x + y = 0
        let x = solve(
            vec![vec![s(1), r.clone()], vec![r.clone(), s(1)]],
            vec![s(1), s(0)],
        )
        .unwrap();
        let det = &s(1) - &(&r * &r);
        assert_eq!(x[0], s(1).checked_div(&det).unwrap());
        assert_eq!(x[1], (-r).checked_div(&det).unwrap());
    }

    #[test]
    fn singular_detected() {
        let e = solve(vec![vec![s(1), s(2)], vec![s(2), s(4)]], vec![s(1), s(2)]).unwrap_err();
        assert!(matches!(e, Error::SingularSystem(_)));
    }
}
