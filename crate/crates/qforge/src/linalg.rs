//! Dense exact linear algebra over a [`Field`].
//!
//! Everything here is deterministic: row spaces keep their echelon basis
//! sorted by pivot column, so dimensions, membership tests and nullspaces do
//! not depend on insertion order beyond the span itself.

use crate::field::Field;


/// A subspace of F^cols maintained as a reduced row-echelon basis.
#[derive(Clone, Debug)]
pub struct RowSpace<F> {
    cols: usize,
    rows: Vec<Vec<F>>,
    pivots: Vec<usize>,
}

impl<F: Field> RowSpace<F> {
    pub fn new(cols: usize) -> Self {
        RowSpace { cols, rows: Vec::new(), pivots: Vec::new() }
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    /// Echelon basis rows, sorted by pivot column.
    pub fn basis(&self) -> &[Vec<F>] {
        &self.rows
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    /// Eliminate all pivot columns from `v` in place.
    pub fn reduce(&self, v: &mut [F]) {
        assert_eq!(v.len(), self.cols);
        for (row, &p) in self.rows.iter().zip(&self.pivots) {
            let c = v[p];
            if !c.is_zero() {
                for (x, y) in v.iter_mut().zip(row) {
                    *x = *x - c * *y;
                }
            }
        }
    }

    pub fn contains(&self, v: &[F]) -> bool {
        let mut w = v.to_vec();
        self.reduce(&mut w);
        w.iter().all(|x| x.is_zero())
    }

    pub fn contains_space(&self, other: &RowSpace<F>) -> bool {
        other.basis().iter().all(|r| self.contains(r))
    }

    /// Insert `v` if independent of the current span. Returns whether the
    /// dimension grew.
    pub fn insert(&mut self, v: Vec<F>) -> bool {
        let mut w = v;
        self.reduce(&mut w);
        let Some(p) = w.iter().position(|x| !x.is_zero()) else {
            return false;
        };
        let inv = w[p].inv().expect("nonzero pivot");
        for x in w.iter_mut() {
            *x = *x * inv;
        }
        // keep the basis fully reduced
        for row in self.rows.iter_mut() {
            let c = row[p];
            if !c.is_zero() {
                for (x, y) in row.iter_mut().zip(&w) {
                    *x = *x - c * *y;
                }
            }
        }
        let at = self.pivots.partition_point(|&q| q < p);
        self.pivots.insert(at, p);
        self.rows.insert(at, w);
        true
    }

    pub fn insert_all<I: IntoIterator<Item = Vec<F>>>(&mut self, vs: I) {
        for v in vs {
            self.insert(v);
        }
    }

    /// Intersection with another subspace of the same ambient space.
    pub fn intersect(&self, other: &RowSpace<F>) -> RowSpace<F> {
        // Solve x in self with x in other by the kernel of the stacked
        // coordinate map: glue (c_self | c_other) and kernel out.
        assert_eq!(self.cols, other.cols);
        let a = self.dim();
        let rows: Vec<Vec<F>> = (0..self.cols)
            .map(|j| {
                let mut r: Vec<F> = self.rows.iter().map(|row| row[j]).collect();
                r.extend(other.rows.iter().map(|row| F::zero() - row[j]));
                r
            })
            .collect();
        // kernel of the transposed pair picks coefficient vectors (u, w) with
        // sum_i u_i b_i = sum_j w_j c_j; the left half spans the intersection
        let mut glue = Vec::new();
        for mut k in nullspace(&rows, a + other.dim()) {
            let mut v = vec![F::zero(); self.cols];
            for (i, c) in k.drain(..a).enumerate() {
                if !c.is_zero() {
                    for (x, y) in v.iter_mut().zip(&self.rows[i]) {
                        *x = *x + c * *y;
                    }
                }
            }
            glue.push(v);
        }
        let mut out = RowSpace::new(self.cols);
        out.insert_all(glue);
        out
    }
}

/// Rank of a list of vectors.
pub fn rank<F: Field>(rows: &[Vec<F>], cols: usize) -> usize {
    let mut sp = RowSpace::new(cols);
    for r in rows {
        sp.insert(r.clone());
    }
    sp.dim()
}

/// Basis of `{x : rows * x = 0}` where each row is a linear functional.
pub fn nullspace<F: Field>(rows: &[Vec<F>], cols: usize) -> Vec<Vec<F>> {
    let mut sp = RowSpace::new(cols);
    for r in rows {
        sp.insert(r.clone());
    }
    let pivot_set: Vec<usize> = sp.pivots().to_vec();
    let mut out = Vec::new();
    for free in 0..cols {
        if pivot_set.binary_search(&free).is_ok() {
            continue;
        }
        let mut v = vec![F::zero(); cols];
        v[free] = F::one();
        for (row, &p) in sp.basis().iter().zip(sp.pivots()) {
            v[p] = F::zero() - row[free];
        }
        out.push(v);
    }
    out
}

/// Solve `A x = b` for one solution plus a kernel basis; `None` if
/// inconsistent. `a` holds the rows of A.
pub fn solve_affine<F: Field>(
    a: &[Vec<F>],
    b: &[F],
    cols: usize,
) -> Option<(Vec<F>, Vec<Vec<F>>)> {
    assert_eq!(a.len(), b.len());
    // eliminate on the augmented system
    let mut sp = RowSpace::new(cols + 1);
    for (row, &rhs) in a.iter().zip(b) {
        let mut aug = row.clone();
        aug.push(rhs);
        sp.insert(aug);
    }
    if sp.pivots().contains(&cols) {
        return None; // a row reduced to 0 = 1
    }
    let mut x = vec![F::zero(); cols];
    for (row, &p) in sp.basis().iter().zip(sp.pivots()) {
        x[p] = row[cols];
    }
    let plain: Vec<Vec<F>> = sp.basis().iter().map(|r| r[..cols].to_vec()).collect();
    let kernel = nullspace(&plain, cols);
    Some((x, kernel))
}

/// Rank of a square matrix given row-major; used for nondegeneracy tests.
pub fn matrix_rank<F: Field>(data: &[F], n: usize) -> usize {
    let rows: Vec<Vec<F>> = (0..n).map(|i| data[i * n..(i + 1) * n].to_vec()).collect();
    rank(&rows, n)
}

/// Bit-sliced row space over a characteristic-2 field, kept in reduced
/// echelon form.
///
/// Vectors are stored as one u64 plane per coefficient bit, so row updates
/// are word-wide XORs. Requires the field's integer encoding to be additive
/// (`from_index(x ^ y) = from_index(x) + from_index(y)`), which holds for the
/// GF(2^m) types; asserted in debug builds. Used by the dense ideal oracle,
/// where ambient dimensions reach a few thousand.
pub struct PackedRowSpace<F> {
    cols: usize,
    planes: usize,
    words: usize,
    rows: Vec<Vec<u64>>, // `planes` consecutive blocks of `words` u64s each
    pivots: Vec<usize>,
    _marker: std::marker::PhantomData<F>,
}

impl<F: Field> PackedRowSpace<F> {
    pub fn new(cols: usize) -> Self {
        let planes = (64 - (F::order() - 1).leading_zeros()) as usize;
        debug_assert_eq!(1u64 << planes, F::order(), "order must be a power of 2");
        debug_assert!(F::elements().iter().all(|&x| {
            F::elements()
                .iter()
                .all(|&y| F::from_index(x.to_index() ^ y.to_index()) == Some(x + y))
        }));
        let words = cols.max(1).div_ceil(64);
        PackedRowSpace {
            cols,
            planes,
            words,
            rows: Vec::new(),
            pivots: Vec::new(),
            _marker: std::marker::PhantomData,
        }
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    /// Pack a sparse vector of (column, coefficient) pairs.
    pub fn pack(&self, v: &[(usize, F)]) -> Vec<u64> {
        let mut row = vec![0u64; self.planes * self.words];
        for &(col, c) in v {
            debug_assert!(col < self.cols);
            let bits = c.to_index();
            for p in 0..self.planes {
                if bits >> p & 1 == 1 {
                    row[p * self.words + col / 64] ^= 1 << (col % 64);
                }
            }
        }
        row
    }

    fn entry(planes: usize, words: usize, row: &[u64], col: usize) -> F {
        let mut bits = 0u64;
        for p in 0..planes {
            bits |= (row[p * words + col / 64] >> (col % 64) & 1) << p;
        }
        F::from_index(bits).unwrap()
    }

    /// dst += c * src, word-wise. Plane j of c*src is the XOR of source
    /// planes i with bit j of c * from_index(1 << i) set.
    fn axpy(planes: usize, words: usize, dst: &mut [u64], c: F, src: &[u64]) {
        for i in 0..planes {
            let image = (c * F::from_index(1 << i).unwrap()).to_index();
            for j in 0..planes {
                if image >> j & 1 == 1 {
                    let s = i * words;
                    let d = j * words;
                    for w in 0..words {
                        dst[d + w] ^= src[s + w];
                    }
                }
            }
        }
    }

    fn first_nonzero(&self, row: &[u64]) -> Option<usize> {
        for w in 0..self.words {
            let mut any = 0u64;
            for p in 0..self.planes {
                any |= row[p * self.words + w];
            }
            if any != 0 {
                return Some(w * 64 + any.trailing_zeros() as usize);
            }
        }
        None
    }

    /// Eliminate all pivot columns from `row` in place.
    pub fn reduce(&self, row: &mut [u64]) {
        for (k, &p) in self.pivots.iter().enumerate() {
            let c = Self::entry(self.planes, self.words, row, p);
            if !c.is_zero() {
                Self::axpy(self.planes, self.words, row, F::zero() - c, &self.rows[k]);
            }
        }
    }

    pub fn contains(&self, v: &[(usize, F)]) -> bool {
        let mut row = self.pack(v);
        self.reduce(&mut row);
        self.first_nonzero(&row).is_none()
    }

    /// Insert if independent; returns whether the dimension grew.
    pub fn insert(&mut self, v: &[(usize, F)]) -> bool {
        let mut row = self.pack(v);
        self.reduce(&mut row);
        let Some(p) = self.first_nonzero(&row) else {
            return false;
        };
        let lead = Self::entry(self.planes, self.words, &row, p);
        if !lead.is_one() {
            let mut scaled = vec![0u64; row.len()];
            Self::axpy(self.planes, self.words, &mut scaled, lead.inv().unwrap(), &row);
            row = scaled;
        }
        // forward echelon is enough: every row leads at its pivot, so
        // ascending elimination in `reduce` only ever pushes mass rightwards
        let at = self.pivots.partition_point(|&q| q < p);
        self.pivots.insert(at, p);
        self.rows.insert(at, row);
        true
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::F4;
    use num_traits::{One, Zero};

    fn v(xs: &[u16]) -> Vec<F4> {
        xs.iter().map(|&x| F4::new(x)).collect()
    }

    #[test]
    fn echelon_insert_and_membership() {
        let mut sp = RowSpace::new(3);
        assert!(sp.insert(v(&[1, 2, 0])));
        assert!(sp.insert(v(&[0, 1, 1])));
        assert!(!sp.insert(v(&[1, 3, 1]))); // sum of the first two
        assert_eq!(sp.dim(), 2);
        assert!(sp.contains(&v(&[1, 3, 1])));
        assert!(!sp.contains(&v(&[0, 0, 1])));
    }

    #[test]
    fn nullspace_solves() {
        // x0 + w*x1 = 0, x2 free
        let rows = vec![v(&[1, 2, 0])];
        let ns = nullspace(&rows, 3);
        assert_eq!(ns.len(), 2);
        for k in &ns {
            let s = k[0] + F4::new(2) * k[1];
            assert!(s.is_zero());
        }
    }

    #[test]
    fn affine_solver() {
        // x0 + x1 = 1, x1 = w  -> x0 = 1 + w
        let a = vec![v(&[1, 1]), v(&[0, 1])];
        let b = v(&[1, 2]);
        let (x, k) = solve_affine(&a, &b, 2).unwrap();
        assert!(k.is_empty());
        assert_eq!(x[0], F4::one() + F4::new(2));
        assert_eq!(x[1], F4::new(2));

        let bad = solve_affine(&[v(&[0, 0])], &v(&[1]), 2);
        assert!(bad.is_none());
    }

    #[test]
    fn intersection_of_planes() {
        let mut a = RowSpace::new(3);
        a.insert_all([v(&[1, 0, 0]), v(&[0, 1, 0])]);
        let mut b = RowSpace::new(3);
        b.insert_all([v(&[0, 1, 0]), v(&[0, 0, 1])]);
        let c = a.intersect(&b);
        assert_eq!(c.dim(), 1);
        assert!(c.contains(&v(&[0, 1, 0])));
    }
}
