//! Kernels on explicit augmented rows `(a_1, …, a_d | c)`.

use std::collections::HashSet;

use crate::arith::Field;

/// Scales a row so its first nonzero coefficient is 1. Rows with a zero
/// coefficient part are returned unchanged.
pub(crate) fn normalized<F: Field>(row: &[F]) -> Vec<F> {
    let last = row.len() - 1;
    match row[..last].iter().position(|x| !x.is_zero()) {
        Some(p) if !row[p].is_one() => {
            let inv = row[p].inv();
            row.iter().map(|x| x.mul(&inv)).collect()
        }
        _ => row.to_vec(),
    }
}

/// Keeps the first row of every class of rows equal up to scaling.
pub(crate) fn dedup<F: Field>(rows: Vec<Vec<F>>) -> Vec<Vec<F>> {
    let mut seen = HashSet::new();
    rows.into_iter().filter(|r| seen.insert(normalized(r))).collect()
}

/// The arrangement induced on row `j`'s hyperplane, written in the
/// remaining `d-1` coordinates. Rows that contain or miss the hyperplane are
/// dropped and duplicates merged.
pub(crate) fn restrict<F: Field>(rows: &[Vec<F>], j: usize) -> Vec<Vec<F>> {
    let h = &rows[j];
    let last = h.len() - 1;
    let p = h[..last]
        .iter()
        .position(|x| !x.is_zero())
        .expect("hyperplane has a nonzero coefficient");
    let inv = h[p].inv();
    let mut out = Vec::with_capacity(rows.len().saturating_sub(1));
    for (i, r) in rows.iter().enumerate() {
        if i == j {
            continue;
        }
        let factor = r[p].mul(&inv);
        let projected: Vec<F> = (0..=last)
            .filter(|&c| c != p)
            .map(|c| if factor.is_zero() { r[c].clone() } else { r[c].sub_mul(&factor, &h[c]) })
            .collect();
        if projected[..last - 1].iter().any(|x| !x.is_zero()) {
            out.push(projected);
        }
    }
    dedup(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::Rational;

    fn row(v: &[i64]) -> Vec<Rational> {
        v.iter().map(|&x| Rational::from_integer(x)).collect()
    }

    #[test]
    fn restrict_running_example_to_x_eq_0() {
        // y - x = 1, x = 0, x + y = 1, y = 0
        let rows = vec![row(&[-1, 1, 1]), row(&[1, 0, 0]), row(&[1, 1, 1]), row(&[0, 1, 0])];
        let r = restrict(&rows, 1);
        // on x = 0 both y = 1 lines coincide
        assert_eq!(r, vec![row(&[1, 1]), row(&[1, 0])]);
    }

    #[test]
    fn dedup_up_to_scaling() {
        let rows = vec![row(&[2, 4, 6]), row(&[1, 2, 3]), row(&[-1, -2, -3]), row(&[1, 2, 4])];
        assert_eq!(dedup(rows).len(), 2);
    }
}
