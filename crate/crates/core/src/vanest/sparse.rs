use std::collections::{BTreeMap, HashMap};

use num_traits::{One, Zero};

use crate::linalg::Rational;

pub(crate) type SparseVec = BTreeMap<usize, Rational>;

pub(crate) fn unit(i: usize) -> SparseVec {
    BTreeMap::from([(i, Rational::one())])
}

fn axpy(v: &mut SparseVec, s: &Rational, w: &SparseVec) {
    for (k, x) in w {
        let e = v.entry(*k).or_insert_with(Rational::zero);
        *e += s * x;
        if e.is_zero() {
            v.remove(k);
        }
    }
}

/// Incremental row echelon form of sparse vectors; each row is normalized
/// with leading coefficient 1 at its smallest key, and carries the
/// combination of inserted vectors that produced it.
#[derive(Default)]
pub(crate) struct Echelon {
    rows: Vec<(SparseVec, SparseVec)>,
    pivot_of: HashMap<usize, usize>,
}

impl Echelon {
    #[cfg(test)]
    pub(crate) fn rank(&self) -> usize {
        self.rows.len()
    }

    pub(crate) fn reduce(&self, v: &mut SparseVec, combo: &mut SparseVec) {
        let mut cursor = 0;
        loop {
            let hit = v.range(cursor..).find(|(k, _)| self.pivot_of.contains_key(k)).map(|(k, c)| (*k, c.clone()));
            let Some((k, c)) = hit else { break };
            let (row, row_combo) = &self.rows[self.pivot_of[&k]];
            let s = -c;
            axpy(v, &s, row);
            axpy(combo, &s, row_combo);
            match k.checked_add(1) {
                Some(c) => cursor = c,
                None => break,
            }
        }
    }

    /// Adds `v`; if it is dependent on the rows, returns the combination
    /// `combo - (...)` that maps to zero.
    pub(crate) fn insert(&mut self, mut v: SparseVec, mut combo: SparseVec) -> Option<SparseVec> {
        self.reduce(&mut v, &mut combo);
        let Some((&pivot, lead)) = v.iter().next() else {
            return Some(combo);
        };
        let inv = Rational::one() / lead;
        for x in v.values_mut() {
            *x *= &inv;
        }
        for x in combo.values_mut() {
            *x *= &inv;
        }
        self.pivot_of.insert(pivot, self.rows.len());
        self.rows.push((v, combo));
        None
    }
}
