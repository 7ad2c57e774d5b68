//! Exact rational row reduction for the small spaces of the free Lie ring.
use num_rational::BigRational;
use num_traits::{One, Zero};

pub(crate) type Q = BigRational;

/// Subspace of `Q^n` in reduced row echelon form.
#[derive(Clone, Debug)]
pub(crate) struct Subspace {
    n: usize,
    rows: Vec<(usize, Vec<Q>)>,
}

impl Subspace {
    pub fn new(n: usize) -> Self {
        Subspace { n, rows: Vec::new() }
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    pub fn pivots(&self) -> impl Iterator<Item = usize> + '_ {
        self.rows.iter().map(|r| r.0)
    }

    /// Canonical residue of `v` modulo the subspace.
    pub fn reduce(&self, v: &[Q]) -> Vec<Q> {
        let mut v = v.to_vec();
        for (p, row) in &self.rows {
            if !v[*p].is_zero() {
                let k = v[*p].clone();
                for (x, r) in v.iter_mut().zip(row) {
                    if !r.is_zero() {
                        *x -= &k * r;
                    }
                }
            }
        }
        v
    }

    pub fn contains(&self, v: &[Q]) -> bool {
        self.reduce(v).iter().all(Zero::is_zero)
    }

    /// Returns true if the subspace grew.
    pub fn insert(&mut self, v: &[Q]) -> bool {
        assert_eq!(v.len(), self.n);
        let mut v = self.reduce(v);
        let Some(p) = v.iter().position(|x| !x.is_zero()) else { return false };
        let inv = Q::one() / &v[p];
        for x in v.iter_mut() {
            *x *= &inv;
        }
        for (_, row) in self.rows.iter_mut() {
            if !row[p].is_zero() {
                let k = row[p].clone();
                for (x, r) in row.iter_mut().zip(&v) {
                    if !r.is_zero() {
                        *x -= &k * r;
                    }
                }
            }
        }
        self.rows.push((p, v));
        true
    }
}

/// Coordinates with respect to a list of vectors, tracking how each
/// echelon row combines the originals.
#[derive(Clone, Debug)]
pub(crate) struct Coordinates {
    k: usize,
    rows: Vec<(usize, Vec<Q>, Vec<Q>)>,
    /// For each original that reduced to zero: its index and the
    /// combination of earlier originals it equals.
    pub dependencies: Vec<(usize, Vec<Q>)>,
}

impl Coordinates {
    pub fn new(vectors: &[Vec<Q>]) -> Self {
        let k = vectors.len();
        let mut c = Coordinates { k, rows: Vec::new(), dependencies: Vec::new() };
        for (i, v) in vectors.iter().enumerate() {
            let mut combo = vec![Q::zero(); k];
            combo[i] = Q::one();
            let (v, combo) = c.reduce(v.clone(), combo);
            match v.iter().position(|x| !x.is_zero()) {
                None => {
                    // v_i - sum(...) = 0, so v_i = -(combo without i)
                    let mut dep: Vec<Q> = combo.iter().map(|x| -x).collect();
                    dep[i] = Q::zero();
                    c.dependencies.push((i, dep));
                }
                Some(p) => c.push(p, v, combo),
            }
        }
        c
    }

    fn reduce(&self, mut v: Vec<Q>, mut combo: Vec<Q>) -> (Vec<Q>, Vec<Q>) {
        for (p, row, rc) in &self.rows {
            if !v[*p].is_zero() {
                let k = v[*p].clone();
                for (x, r) in v.iter_mut().zip(row) {
                    if !r.is_zero() {
                        *x -= &k * r;
                    }
                }
                for (x, r) in combo.iter_mut().zip(rc) {
                    if !r.is_zero() {
                        *x -= &k * r;
                    }
                }
            }
        }
        (v, combo)
    }

    fn push(&mut self, p: usize, mut v: Vec<Q>, mut combo: Vec<Q>) {
        let inv = Q::one() / &v[p];
        v.iter_mut().for_each(|x| *x *= &inv);
        combo.iter_mut().for_each(|x| *x *= &inv);
        for (_, row, rc) in self.rows.iter_mut() {
            if !row[p].is_zero() {
                let k = row[p].clone();
                for (x, r) in row.iter_mut().zip(&v) {
                    *x -= &k * r;
                }
                for (x, r) in rc.iter_mut().zip(&combo) {
                    *x -= &k * r;
                }
            }
        }
        self.rows.push((p, v, combo));
    }

    /// `x` with `sum x_i v_i = target`, if the target lies in the span.
    /// Unique when the originals are independent.
    pub fn solve(&self, target: &[Q]) -> Option<Vec<Q>> {
        let (rest, combo) = self.reduce(target.to_vec(), vec![Q::zero(); self.k]);
        rest.iter().all(Zero::is_zero).then(|| combo.iter().map(|x| -x).collect())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(v: &[i64]) -> Vec<Q> {
        v.iter().map(|&x| Q::from_integer(x.into())).collect()
    }

    #[test]
    fn subspace_residues() {
        let mut s = Subspace::new(3);
        assert!(s.insert(&q(&[1, 1, 0])));
        assert!(!s.insert(&q(&[2, 2, 0])));
        assert!(s.insert(&q(&[0, 1, 1])));
        assert_eq!(s.dim(), 2);
        assert!(s.contains(&q(&[1, 0, -1])));
        assert!(!s.contains(&q(&[0, 0, 1])));
    }

    #[test]
    fn coordinates_and_dependencies() {
        let c = Coordinates::new(&[q(&[1, 0, 0]), q(&[1, 2, 0]), q(&[3, 4, 0])]);
        assert_eq!(c.dependencies.len(), 1);
        let (i, dep) = &c.dependencies[0];
        assert_eq!(*i, 2);
        assert_eq!(dep, &q(&[1, 2, 0]));
        assert!(c.solve(&q(&[0, 0, 1])).is_none());
        let d = Coordinates::new(&[q(&[2, 0]), q(&[1, 1])]);
        let x = d.solve(&q(&[3, 1])).unwrap();
        assert_eq!(x, vec![Q::new(1.into(), 1.into()), Q::from_integer(1.into())]);
    }
}
