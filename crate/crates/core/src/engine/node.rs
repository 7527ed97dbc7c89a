use std::collections::HashSet;

use crate::arith::Field;
use crate::arrangement::echelon::{Echelon, Reduced};
use crate::perm::IndexSet;

/// The first two indices `j ≥ k` whose restriction to `L_I` is a proper
/// hyperplane not repeated among `j+1, …, n-1`.
pub(crate) fn leading_unique<F: Field>(rows: &[Vec<F>], set: &IndexSet, k: usize) -> Option<(usize, Option<usize>)> {
    let cols = rows.first().map_or(1, |r| r.len());
    let flat = Echelon::from_rows(cols, set.iter().map(|i| &rows[i]));
    debug_assert!(flat.is_consistent(), "nodes only restrict to nonempty flats");
    let reduced: Vec<Reduced<F>> = rows[k..].iter().map(|r| flat.classify(r)).collect();
    let mut later: HashSet<&Vec<F>> = HashSet::with_capacity(reduced.len());
    let (mut first, mut second) = (None, None);
    for (j, r) in reduced.iter().enumerate().rev() {
        if let Reduced::Proper(v) = r {
            if later.insert(v) {
                second = first;
                first = Some(j + k);
            }
        }
    }
    first.map(|u| (u, second))
}
