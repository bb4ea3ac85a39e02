//! Finite 2x2 matrix groups over small odd fields: GL/SL/PGL/PSL
//! constructions, Sylow 2-subgroups, dihedral/quaternion recognition,
//! centers, and the Dickson embedding of PGL_2(F_q) into PSL_2(F_{q^2}).
//!
//! Groups are stored by full element enumeration; at most 117600 elements
//! are ever needed (SL_2 over F_49), so brute force with table-based field
//! arithmetic is the simplest correct choice.

use std::collections::{HashMap, HashSet};
use std::rc::Rc;

#[derive(Debug, thiserror::Error, PartialEq, Eq)]
pub enum GroupError {
    #[error("unsupported field order {0}; expected an odd prime power at most 49")]
    BadFieldOrder(u16),
    #[error("q must be an odd prime power at most 9, got {0}")]
    BadQ(u16),
    #[error("the Dickson construction here needs an odd prime q in {{3, 5, 7}}, got {0}")]
    BadDicksonQ(u16),
}

/// Table-based arithmetic for GF(p^k), p odd. GF(9) is realized as
/// GF(3)[x]/(x^2+1), GF(25) as GF(5)[x]/(x^2+2), GF(49) as GF(7)[x]/(x^2+1);
/// an element a + b x is encoded as the integer a + b p.
pub struct OddField {
    pub order: u16,
    pub p: u16,
    add: Vec<u16>,
    mul: Vec<u16>,
    neg: Vec<u16>,
    inv: Vec<u16>, // inv[0] unused
}

impl OddField {
    pub fn new(order: u16) -> Result<Rc<Self>, GroupError> {
        let (p, b) = match order {
            3 | 5 | 7 => (order, 0),
            9 => (3, 1),  // x^2 = -1
            25 => (5, 2), // x^2 = -2
            49 => (7, 1), // x^2 = -1
            _ => return Err(GroupError::BadFieldOrder(order)),
        };
        let n = order as usize;
        let digits = |x: u16| (x % p, x / p);
        let enc = |a: u16, bb: u16| a % p + (bb % p) * p;
        let mut add = vec![0u16; n * n];
        let mut mul = vec![0u16; n * n];
        for x in 0..order {
            for y in 0..order {
                let (a0, a1) = digits(x);
                let (b0, b1) = digits(y);
                add[(x as usize) * n + y as usize] = enc((a0 + b0) % p, (a1 + b1) % p);
                // (a0 + a1 t)(b0 + b1 t) with t^2 = -b
                let lo = (a0 * b0 + (p - b % p) % p * a1 % p * b1) % p;
                let hi = (a0 * b1 + a1 * b0) % p;
                mul[(x as usize) * n + y as usize] = enc(lo, hi);
            }
        }
        let neg: Vec<u16> = (0..order)
            .map(|x| {
                let (a, bb) = digits(x);
                enc((p - a % p) % p, (p - bb % p) % p)
            })
            .collect();
        let mut inv = vec![0u16; n];
        for x in 1..order {
            for y in 1..order {
                if mul[(x as usize) * n + y as usize] == 1 {
                    inv[x as usize] = y;
                    break;
                }
            }
            debug_assert_ne!(inv[x as usize], 0, "irreducible modulus");
        }
        Ok(Rc::new(OddField { order, p, add, mul, neg, inv }))
    }

    #[inline]
    pub fn add(&self, x: u16, y: u16) -> u16 {
        self.add[(x as usize) * self.order as usize + y as usize]
    }

    #[inline]
    pub fn mul(&self, x: u16, y: u16) -> u16 {
        self.mul[(x as usize) * self.order as usize + y as usize]
    }

    #[inline]
    pub fn neg(&self, x: u16) -> u16 {
        self.neg[x as usize]
    }

    #[inline]
    pub fn sub(&self, x: u16, y: u16) -> u16 {
        self.add(x, self.neg(y))
    }

    #[inline]
    pub fn inv(&self, x: u16) -> u16 {
        debug_assert_ne!(x, 0);
        self.inv[x as usize]
    }

    /// A square root, if one exists.
    pub fn sqrt(&self, x: u16) -> Option<u16> {
        (0..self.order).find(|&s| self.mul(s, s) == x)
    }

    /// Embed the prime subfield element (or more generally a digit-0 value).
    pub fn embed_base(&self, a: u16) -> u16 {
        a % self.p
    }
}

/// A 2x2 matrix packed as four 8-bit entries (row major).
pub type Packed = u32;

fn pack(e: [u16; 4]) -> Packed {
    (e[0] as u32) | (e[1] as u32) << 8 | (e[2] as u32) << 16 | (e[3] as u32) << 24
}

fn unpack(m: Packed) -> [u16; 4] {
    [
        (m & 0xff) as u16,
        (m >> 8 & 0xff) as u16,
        (m >> 16 & 0xff) as u16,
        (m >> 24 & 0xff) as u16,
    ]
}

fn mat_mul(f: &OddField, x: Packed, y: Packed) -> Packed {
    let a = unpack(x);
    let b = unpack(y);
    pack([
        f.add(f.mul(a[0], b[0]), f.mul(a[1], b[2])),
        f.add(f.mul(a[0], b[1]), f.mul(a[1], b[3])),
        f.add(f.mul(a[2], b[0]), f.mul(a[3], b[2])),
        f.add(f.mul(a[2], b[1]), f.mul(a[3], b[3])),
    ])
}

fn mat_det(f: &OddField, x: Packed) -> u16 {
    let a = unpack(x);
    f.sub(f.mul(a[0], a[3]), f.mul(a[1], a[2]))
}

fn mat_inv(f: &OddField, x: Packed) -> Packed {
    let a = unpack(x);
    let d = f.inv(mat_det(f, x));
    pack([
        f.mul(d, a[3]),
        f.mul(d, f.neg(a[1])),
        f.mul(d, f.neg(a[2])),
        f.mul(d, a[0]),
    ])
}

fn identity() -> Packed {
    pack([1, 0, 0, 1])
}

fn scalar(l: u16) -> Packed {
    pack([l, 0, 0, l])
}

/// How elements are canonicalized: plain matrices, or classes modulo a
/// finite set of central scalar matrices.
#[derive(Clone)]
enum Canon {
    Exact,
    ModCentral(Rc<Vec<Packed>>),
}

/// A finite group of 2x2 matrices (or classes of them modulo central
/// scalars), stored by explicit element enumeration in sorted order.
#[derive(Clone)]
pub struct MatrixGroup {
    field: Rc<OddField>,
    canon: Canon,
    elements: Vec<Packed>,
}

impl MatrixGroup {
    fn canonize(&self, m: Packed) -> Packed {
        match &self.canon {
            Canon::Exact => m,
            Canon::ModCentral(set) => set
                .iter()
                .map(|&z| mat_mul(&self.field, m, z))
                .min()
                .expect("nonempty central set"),
        }
    }

    fn from_elements(field: Rc<OddField>, canon: Canon, raw: Vec<Packed>) -> Self {
        let mut g = MatrixGroup { field, canon, elements: Vec::new() };
        let mut set: Vec<Packed> = raw.iter().map(|&m| g.canonize(m)).collect();
        set.sort_unstable();
        set.dedup();
        g.elements = set;
        g
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn elements(&self) -> &[Packed] {
        &self.elements
    }

    pub fn field(&self) -> &Rc<OddField> {
        &self.field
    }

    pub fn identity(&self) -> Packed {
        self.canonize(identity())
    }

    pub fn contains(&self, m: Packed) -> bool {
        self.elements.binary_search(&self.canonize(m)).is_ok()
    }

    pub fn mul(&self, x: Packed, y: Packed) -> Packed {
        self.canonize(mat_mul(&self.field, x, y))
    }

    pub fn inv(&self, x: Packed) -> Packed {
        self.canonize(mat_inv(&self.field, x))
    }

    pub fn element_order(&self, x: Packed) -> usize {
        let e = self.identity();
        let mut cur = self.canonize(x);
        let mut n = 1;
        while cur != e {
            cur = self.mul(cur, x);
            n += 1;
            debug_assert!(n <= self.order());
        }
        n
    }

    /// Number of elements of order exactly 2.
    pub fn involution_count(&self) -> usize {
        let e = self.identity();
        self.elements
            .iter()
            .filter(|&&x| x != e && self.mul(x, x) == e)
            .count()
    }

    /// Full closure-and-inverse check over every element pair.
    pub fn verify_closure(&self) -> bool {
        self.elements.iter().all(|&x| self.contains(mat_inv(&self.field, x)))
            && self
                .elements
                .iter()
                .all(|&x| self.elements.iter().all(|&y| self.contains(mat_mul(&self.field, x, y))))
    }

    /// Subgroup generated by a set, by product saturation.
    pub fn generated(&self, gens: &[Packed]) -> Vec<Packed> {
        let mut seen: HashSet<Packed> = HashSet::new();
        let mut work = vec![self.identity()];
        seen.insert(self.identity());
        while let Some(x) = work.pop() {
            for &g in gens {
                let y = self.mul(x, g);
                if seen.insert(y) {
                    work.push(y);
                }
            }
        }
        let mut out: Vec<Packed> = seen.into_iter().collect();
        out.sort_unstable();
        out
    }

    fn subgroup(&self, elements: Vec<Packed>) -> MatrixGroup {
        MatrixGroup {
            field: Rc::clone(&self.field),
            canon: self.canon.clone(),
            elements,
        }
    }

    /// A Sylow 2-subgroup, grown deterministically: repeatedly adjoin the
    /// first 2-element (in element order) that normalizes the current
    /// 2-subgroup, until the full 2-part is reached.
    pub fn sylow2(&self) -> MatrixGroup {
        let mut two_part = 1usize;
        let mut n = self.order();
        while n % 2 == 0 {
            two_part *= 2;
            n /= 2;
        }
        let mut h: Vec<Packed> = vec![self.identity()];
        'grow: while h.len() < two_part {
            for &x in &self.elements {
                if h.binary_search(&x).is_ok() {
                    continue;
                }
                if !self.element_order(x).is_power_of_two() {
                    continue;
                }
                // x normalizes H?
                let xi = self.inv(x);
                let normalizes = h
                    .iter()
                    .all(|&t| h.binary_search(&self.mul(self.mul(x, t), xi)).is_ok());
                if !normalizes {
                    continue;
                }
                let mut gens = h.clone();
                gens.push(x);
                let bigger = self.generated(&gens);
                debug_assert!(bigger.len().is_power_of_two());
                debug_assert!(bigger.len() > h.len());
                h = bigger;
                continue 'grow;
            }
            unreachable!("a proper 2-subgroup always extends inside its normalizer");
        }
        self.subgroup(h)
    }

    /// The center, by a commuting test against every element.
    pub fn center(&self) -> MatrixGroup {
        let z: Vec<Packed> = self
            .elements
            .iter()
            .copied()
            .filter(|&x| self.elements.iter().all(|&y| self.mul(x, y) == self.mul(y, x)))
            .collect();
        self.subgroup(z)
    }

    /// The quotient by the center, as classes modulo the central matrices.
    /// Any canonicalization already in force is composed in.
    pub fn quotient_by_center(&self) -> MatrixGroup {
        let center = self.center();
        let mut set: Vec<Packed> = match &self.canon {
            Canon::Exact => center.elements.clone(),
            Canon::ModCentral(old) => old
                .iter()
                .flat_map(|&s| center.elements.iter().map(move |&z| (s, z)))
                .map(|(s, z)| mat_mul(&self.field, s, z))
                .collect(),
        };
        set.sort_unstable();
        set.dedup();
        MatrixGroup::from_elements(
            Rc::clone(&self.field),
            Canon::ModCentral(Rc::new(set)),
            self.elements.clone(),
        )
    }
}

/// The recognized shapes of a finite 2-group.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TwoGroupShape {
    Cyclic,
    Klein,
    Dihedral,
    Semidihedral,
    GeneralizedQuaternion,
    Other,
}

impl TwoGroupShape {
    pub fn name(self) -> &'static str {
        match self {
            TwoGroupShape::Cyclic => "cyclic",
            TwoGroupShape::Klein => "klein",
            TwoGroupShape::Dihedral => "dihedral",
            TwoGroupShape::Semidihedral => "semidihedral",
            TwoGroupShape::GeneralizedQuaternion => "generalized_quaternion",
            TwoGroupShape::Other => "other",
        }
    }
}

/// Classify a 2-group by locating a cyclic subgroup of index 2 and testing
/// the defining relations of the dihedral, generalized quaternion and
/// semidihedral presentations.
pub fn classify_2group(h: &MatrixGroup) -> TwoGroupShape {
    let n = h.order();
    assert!(n.is_power_of_two(), "not a 2-group");
    if n <= 2 {
        return TwoGroupShape::Cyclic;
    }
    let orders: Vec<usize> = h.elements().iter().map(|&x| h.element_order(x)).collect();
    if orders.iter().any(|&o| o == n) {
        return TwoGroupShape::Cyclic;
    }
    if n == 4 {
        return TwoGroupShape::Klein; // noncyclic of order 4
    }
    let e = h.identity();
    for (i, &t) in h.elements().iter().enumerate() {
        if orders[i] != n / 2 {
            continue;
        }
        // powers of t
        let mut cyc = vec![e];
        let mut cur = t;
        while cur != e {
            cyc.push(cur);
            cur = h.mul(cur, t);
        }
        let t_inv = h.inv(t);
        let t_half = cyc[n / 4]; // t^(|t|/2)
        let t_sd = cyc[n / 4 - 1]; // t^(|t|/2 - 1)
        for &s in h.elements().iter().filter(|s| !cyc.contains(s)) {
            let conj = h.mul(h.mul(s, t), h.inv(s));
            let ss = h.mul(s, s);
            if conj == t_inv && ss == e {
                return TwoGroupShape::Dihedral;
            }
            if conj == t_inv && ss == t_half {
                return TwoGroupShape::GeneralizedQuaternion;
            }
            if conj == t_sd && ss == e {
                return TwoGroupShape::Semidihedral;
            }
        }
    }
    TwoGroupShape::Other
}

/// The four standard constructions over GF(q), q an odd prime power at most
/// nine, by full enumeration with verified order.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum GroupKind {
    GL2,
    SL2,
    PGL2,
    PSL2,
}

pub fn construct(kind: GroupKind, q: u16) -> Result<MatrixGroup, GroupError> {
    if !matches!(q, 3 | 5 | 7 | 9) {
        return Err(GroupError::BadQ(q));
    }
    Ok(construct_unchecked(kind, q))
}

fn construct_unchecked(kind: GroupKind, q: u16) -> MatrixGroup {
    let f = OddField::new(q).expect("supported field");
    let mut raw = Vec::new();
    for a in 0..q {
        for b in 0..q {
            for c in 0..q {
                for d in 0..q {
                    let m = pack([a, b, c, d]);
                    let det = mat_det(&f, m);
                    let keep = match kind {
                        GroupKind::GL2 | GroupKind::PGL2 => det != 0,
                        GroupKind::SL2 | GroupKind::PSL2 => det == 1,
                    };
                    if keep {
                        raw.push(m);
                    }
                }
            }
        }
    }
    let canon = match kind {
        GroupKind::GL2 | GroupKind::SL2 => Canon::Exact,
        GroupKind::PGL2 => {
            let scalars: Vec<Packed> = (1..q).map(scalar).collect();
            Canon::ModCentral(Rc::new(scalars))
        }
        GroupKind::PSL2 => Canon::ModCentral(Rc::new(vec![identity(), scalar(f.neg(1))])),
    };
    MatrixGroup::from_elements(f, canon, raw)
}

/// The Dickson embedding data at an odd prime q: the subgroup
/// H_q < PSL_2(F_{q^2}) isomorphic to PGL_2(F_q), and its full preimage
/// Ghat_q < SL_2(F_{q^2}) under the central quotient map.
pub struct Dickson {
    pub q: u16,
    pub h: MatrixGroup,
    pub ghat: MatrixGroup,
    pub sl2_order: usize,
    pub psl2_order: usize,
    /// Certified by an explicit bijective homomorphism from PGL_2(F_q).
    pub h_isomorphic_to_pgl: bool,
}

pub fn dickson_subgroup(q: u16) -> Result<Dickson, GroupError> {
    if !matches!(q, 3 | 5 | 7) {
        return Err(GroupError::BadDicksonQ(q));
    }
    let big = OddField::new(q * q).expect("supported field");
    let pm = Rc::new(vec![identity(), scalar(big.neg(1))]);

    // scale each invertible matrix over F_q to determinant 1 inside F_{q^2}
    // and projectivize; every base-field determinant has a square root in
    // the quadratic extension
    let mut h_raw = Vec::new();
    let mut h_map: HashMap<Packed, Packed> = HashMap::new(); // PGL class -> H class
    let pgl = construct(GroupKind::PGL2, q)?;
    let f = OddField::new(q).expect("supported field");
    for a in 0..q {
        for b in 0..q {
            for c in 0..q {
                for d in 0..q {
                    let m = pack([a, b, c, d]);
                    if mat_det(&f, m) == 0 {
                        continue;
                    }
                    let lifted = pack([
                        big.embed_base(a),
                        big.embed_base(b),
                        big.embed_base(c),
                        big.embed_base(d),
                    ]);
                    let det = mat_det(&big, lifted);
                    let s = big.sqrt(det).expect("base determinants are squares upstairs");
                    let si = big.inv(s);
                    let scaled = mat_mul(&big, scalar(si), lifted);
                    debug_assert_eq!(mat_det(&big, scaled), 1);
                    let class = pm
                        .iter()
                        .map(|&z| mat_mul(&big, scaled, z))
                        .min()
                        .expect("class");
                    h_raw.push(class);
                    h_map.insert(pgl.canonize(m), class);
                }
            }
        }
    }
    let h = MatrixGroup::from_elements(
        Rc::clone(&big),
        Canon::ModCentral(Rc::clone(&pm)),
        h_raw,
    );

    // certify the isomorphism PGL_2(F_q) -> H_q on every pair
    let mut iso = h_map.len() == pgl.order() && h.order() == pgl.order();
    if iso {
        let images: HashSet<Packed> = h_map.values().copied().collect();
        iso &= images.len() == pgl.order();
        'pairs: for &x in pgl.elements() {
            for &y in pgl.elements() {
                let lhs = h_map[&pgl.mul(x, y)];
                let rhs = h.mul(h_map[&x], h_map[&y]);
                if lhs != rhs {
                    iso = false;
                    break 'pairs;
                }
            }
        }
    }

    // the full preimage in SL_2(F_{q^2})
    let h_set: HashSet<Packed> = h.elements().iter().copied().collect();
    let mut ghat_raw = Vec::new();
    let mut sl2_order = 0usize;
    let q2 = q * q;
    for a in 0..q2 {
        for b in 0..q2 {
            for c in 0..q2 {
                for d in 0..q2 {
                    let m = pack([a, b, c, d]);
                    if mat_det(&big, m) != 1 {
                        continue;
                    }
                    sl2_order += 1;
                    let class = pm.iter().map(|&z| mat_mul(&big, m, z)).min().expect("class");
                    if h_set.contains(&class) {
                        ghat_raw.push(m);
                    }
                }
            }
        }
    }
    let ghat = MatrixGroup::from_elements(Rc::clone(&big), Canon::Exact, ghat_raw);

    Ok(Dickson {
        q,
        h,
        ghat,
        sl2_order,
        psl2_order: sl2_order / 2,
        h_isomorphic_to_pgl: iso,
    })
}

/// 2-adic valuation.
pub fn two_part(n: usize) -> usize {
    let mut t = 1;
    let mut m = n;
    while m % 2 == 0 {
        t *= 2;
        m /= 2;
    }
    t
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn field_tables_are_fields() {
        for q in [3u16, 5, 7, 9, 25, 49] {
            let f = OddField::new(q).unwrap();
            for x in 0..q {
                assert_eq!(f.add(x, f.neg(x)), 0);
                if x != 0 {
                    assert_eq!(f.mul(x, f.inv(x)), 1);
                }
                for y in 0..q {
                    assert_eq!(f.mul(x, y), f.mul(y, x));
                    for z in 0..q {
                        assert_eq!(f.mul(f.mul(x, y), z), f.mul(x, f.mul(y, z)));
                        assert_eq!(
                            f.mul(x, f.add(y, z)),
                            f.add(f.mul(x, y), f.mul(x, z))
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn orders_of_the_standard_groups() {
        assert_eq!(construct(GroupKind::GL2, 3).unwrap().order(), 48);
        assert_eq!(construct(GroupKind::PGL2, 3).unwrap().order(), 24);
        assert_eq!(construct(GroupKind::SL2, 9).unwrap().order(), 720);
        assert_eq!(construct(GroupKind::PSL2, 9).unwrap().order(), 360);
        assert_eq!(construct(GroupKind::PGL2, 5).unwrap().order(), 120);
        assert_eq!(construct(GroupKind::PGL2, 7).unwrap().order(), 336);
        assert!(construct(GroupKind::GL2, 4).is_err());
        assert!(construct(GroupKind::GL2, 11).is_err());
    }

    #[test]
    fn closure_checks() {
        for q in [3u16, 5] {
            for kind in [GroupKind::GL2, GroupKind::SL2, GroupKind::PGL2, GroupKind::PSL2] {
                assert!(construct(kind, q).unwrap().verify_closure());
            }
        }
    }

    #[test]
    fn sylow_subgroups_of_pgl() {
        let expectations = [(3u16, 8usize), (5, 8), (7, 16)];
        for (q, order) in expectations {
            let g = construct(GroupKind::PGL2, q).unwrap();
            let syl = g.sylow2();
            assert_eq!(syl.order(), order);
            assert_eq!(syl.order(), two_part(q as usize * (q as usize * q as usize - 1)));
            assert_eq!(classify_2group(&syl), TwoGroupShape::Dihedral);
            // dihedral of order 2^d has 2^(d-1)+1 involutions
            assert_eq!(syl.involution_count(), syl.order() / 2 + 1);
        }
    }

    #[test]
    fn sl2_has_quaternion_sylows() {
        let g = construct(GroupKind::SL2, 9).unwrap();
        let syl = g.sylow2();
        assert_eq!(syl.order(), 16);
        assert_eq!(classify_2group(&syl), TwoGroupShape::GeneralizedQuaternion);
        assert_eq!(syl.involution_count(), 1);
    }

    #[test]
    fn classifier_recognizes_the_small_shapes() {
        // the quaternion group of order 8 inside SL_2(F_3)
        let g = construct(GroupKind::SL2, 3).unwrap();
        let syl = g.sylow2();
        assert_eq!(syl.order(), 8);
        assert_eq!(classify_2group(&syl), TwoGroupShape::GeneralizedQuaternion);
        // cyclic: powers of an order-4 element
        let i4 = g
            .elements()
            .iter()
            .copied()
            .find(|&x| g.element_order(x) == 4)
            .unwrap();
        let c4 = g.subgroup(g.generated(&[i4]));
        assert_eq!(classify_2group(&c4), TwoGroupShape::Cyclic);
        // klein four group inside PGL_2(F_3)
        let pgl = construct(GroupKind::PGL2, 3).unwrap();
        let invs: Vec<Packed> = pgl
            .elements()
            .iter()
            .copied()
            .filter(|&x| pgl.element_order(x) == 2)
            .collect();
        let four = pgl
            .subgroup(pgl.generated(&[invs[0], invs[1]]));
        if four.order() == 4 {
            assert_eq!(classify_2group(&four), TwoGroupShape::Klein);
        }
    }

    #[test]
    fn dickson_at_q3() {
        let d = dickson_subgroup(3).unwrap();
        assert_eq!(d.h.order(), 24);
        assert!(d.h_isomorphic_to_pgl);
        assert_eq!(d.ghat.order(), 48);
        assert_eq!(d.sl2_order, 720); // 9 * 8 * 10
        assert_eq!(d.psl2_order, 360);
        assert!(d.ghat.verify_closure());

        let center = d.ghat.center();
        assert_eq!(center.order(), 2);
        let minus_i = scalar(d.ghat.field().neg(1));
        assert!(center.elements().contains(&minus_i));

        let syl = d.ghat.sylow2();
        assert_eq!(syl.order(), 16);
        assert_eq!(classify_2group(&syl), TwoGroupShape::GeneralizedQuaternion);
        assert_eq!(syl.involution_count(), 1);
        // the unique involution is -I
        let e = syl.identity();
        let inv = syl
            .elements()
            .iter()
            .copied()
            .find(|&x| x != e && syl.mul(x, x) == e)
            .unwrap();
        assert_eq!(inv, minus_i);

        let quo = d.ghat.quotient_by_center();
        assert_eq!(quo.order(), 24);
        assert_eq!(classify_2group(&quo.sylow2()), TwoGroupShape::Dihedral);

        // the center of H = PGL_2(F_3) is trivial
        assert_eq!(d.h.center().order(), 1);

        assert!(dickson_subgroup(9).is_err());
    }

    #[test]
    fn dickson_at_q5() {
        let d = dickson_subgroup(5).unwrap();
        assert_eq!(d.h.order(), 120);
        assert_eq!(d.ghat.order(), 240);
        assert!(d.h_isomorphic_to_pgl);
        assert_eq!(d.ghat.center().order(), 2);
        let syl = d.ghat.sylow2();
        assert_eq!(syl.order(), 16);
        assert_eq!(classify_2group(&syl), TwoGroupShape::GeneralizedQuaternion);
    }
}
