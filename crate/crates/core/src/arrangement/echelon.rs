use crate::arith::Field;

/// Outcome of adding an augmented row to an echelon basis.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub(crate) enum Insert {
    /// The row raised the rank.
    Independent,
    /// The row was already in the span.
    Dependent,
    /// The row produced `0 = c` with `c ≠ 0`; the flat is now empty.
    Inconsistent,
}

/// Reduced row echelon form of augmented rows `(a_1, …, a_d | c)`.
///
/// Pivots are 1 and their columns are zero in every other row, so two
/// spans are equal exactly when their `Echelon`s are equal.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub(crate) struct Echelon<F> {
    cols: usize,
    rows: Vec<Vec<F>>,
    pivots: Vec<usize>,
    consistent: bool,
}

/// Reduced status of a row modulo a consistent flat.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub(crate) enum Reduced<F> {
    /// Nonzero coefficient part, scaled so its first nonzero entry is 1.
    Proper(Vec<F>),
    /// The hyperplane contains the flat.
    Redundant,
    /// The hyperplane misses the flat.
    Empty,
}

impl<F: Field> Echelon<F> {
    /// The empty basis for rows with `cols` entries (`d` coefficients plus
    /// the constant).
    pub(crate) fn new(cols: usize) -> Self {
        Echelon {
            cols,
            rows: Vec::new(),
            pivots: Vec::new(),
            consistent: true,
        }
    }

    pub(crate) fn from_rows<'a>(cols: usize, rows: impl IntoIterator<Item = &'a Vec<F>>) -> Self {
        let mut e = Echelon::new(cols);
        for r in rows {
            e.insert(r);
        }
        e
    }

    pub(crate) fn rows(&self) -> &[Vec<F>] {
        &self.rows
    }

    /// Pivot column of each row, ascending.
    pub(crate) fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    pub(crate) fn is_consistent(&self) -> bool {
        self.consistent
    }

    /// Rank of the coefficient part, i.e. the codimension of the flat.
    pub(crate) fn rank(&self) -> usize {
        self.pivots.iter().filter(|&&p| p + 1 < self.cols).count()
    }

    /// `row` minus its projection onto the basis.
    pub(crate) fn reduce(&self, row: &[F]) -> Vec<F> {
        let mut r = row.to_vec();
        for (b, &p) in self.rows.iter().zip(&self.pivots) {
            if r[p].is_zero() {
                continue;
            }
            let factor = r[p].clone();
            for (x, y) in r.iter_mut().zip(b).skip(p) {
                if !y.is_zero() {
                    *x = x.sub_mul(&factor, y);
                }
            }
        }
        r
    }

    pub(crate) fn insert(&mut self, row: &[F]) -> Insert {
        let mut r = self.reduce(row);
        let Some(p) = r.iter().position(|x| !x.is_zero()) else {
            return Insert::Dependent;
        };
        scale_to_unit(&mut r, p);
        for b in &mut self.rows {
            if b[p].is_zero() {
                continue;
            }
            let factor = b[p].clone();
            for (x, y) in b.iter_mut().zip(&r).skip(p) {
                if !y.is_zero() {
                    *x = x.sub_mul(&factor, y);
                }
            }
        }
        let at = self.pivots.partition_point(|&q| q < p);
        self.pivots.insert(at, p);
        self.rows.insert(at, r);
        if p + 1 == self.cols {
            self.consistent = false;
            Insert::Inconsistent
        } else {
            Insert::Independent
        }
    }

    /// Classifies a hyperplane against this (consistent) flat.
    pub(crate) fn classify(&self, row: &[F]) -> Reduced<F> {
        debug_assert!(self.consistent);
        let mut r = self.reduce(row);
        let last = self.cols - 1;
        match r[..last].iter().position(|x| !x.is_zero()) {
            Some(p) => {
                scale_to_unit(&mut r, p);
                Reduced::Proper(r)
            }
            None if r[last].is_zero() => Reduced::Redundant,
            None => Reduced::Empty,
        }
    }
}

fn scale_to_unit<F: Field>(r: &mut [F], p: usize) {
    if r[p].is_one() {
        return;
    }
    let inv = r[p].inv();
    for x in r.iter_mut().skip(p) {
        if !x.is_zero() {
            *x = x.mul(&inv);
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::Rational;

    fn row(v: &[i64]) -> Vec<Rational> {
        v.iter().map(|&x| Rational::from_integer(x)).collect()
    }

    #[test]
    fn canonical_and_order_independent() {
        let rows = [row(&[1, 1, 0, 2]), row(&[0, 2, 1, 1]), row(&[1, 3, 1, 3])];
        let a = Echelon::from_rows(4, rows.iter());
        let b = Echelon::from_rows(4, [&rows[2], &rows[0]]);
        assert_eq!(a, b);
        assert_eq!(a.rank(), 2);
        assert!(a.is_consistent());
    }

    #[test]
    fn detects_inconsistency() {
        let mut e = Echelon::from_rows(3, [&row(&[1, 0, 1]), &row(&[0, 1, 1])]);
        assert_eq!(e.insert(&row(&[1, 1, 2])), Insert::Dependent);
        assert_eq!(e.insert(&row(&[1, 1, 3])), Insert::Inconsistent);
        assert!(!e.is_consistent());
        assert_eq!(e.rank(), 2);
    }

    #[test]
    fn classification() {
        // flat x = 0 in the plane
        let e = Echelon::from_rows(3, [&row(&[1, 0, 0])]);
        assert_eq!(e.classify(&row(&[2, 0, 0])), Reduced::Redundant);
        assert_eq!(e.classify(&row(&[3, 0, 1])), Reduced::Empty);
        assert_eq!(e.classify(&row(&[1, 2, 2])), Reduced::Proper(row(&[0, 1, 1])));
        assert_eq!(e.classify(&row(&[5, -3, -3])), Reduced::Proper(row(&[0, 1, 1])));
    }
}
