//! Exact arithmetic in the binary fields GF(2^m) for m = 1..=8.
//!
//! Elements are polynomial residues over GF(2), stored as the bit pattern of
//! the residue. One irreducible modulus per degree is fixed in [`MODULI`]
//! (the Conway polynomials), so serialized values are stable across versions:
//! an element prints as the integer `0..2^m` encoding its bit pattern and
//! parses back identically.

use std::fmt;
use std::hash::Hash;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num_traits::{One, Zero};

/// Irreducible modulus for each extension degree, indexed by `m`.
///
/// `MODULI[m]` is the bit pattern of a degree-`m` Conway polynomial over
/// GF(2), e.g. `MODULI[2] = 0b111` is x^2 + x + 1.
pub const MODULI: [u16; 9] = [
    0,           // unused
    0b11,        // x + 1
    0b111,       // x^2 + x + 1
    0b1011,      // x^3 + x + 1
    0b10011,     // x^4 + x + 1
    0b100101,    // x^5 + x^2 + 1
    0b1011011,   // x^6 + x^4 + x^3 + x + 1
    0b10000011,  // x^7 + x + 1
    0b100011101, // x^8 + x^4 + x^3 + x^2 + 1
];

/// Coefficient fields for the algebra machinery.
///
/// Everything downstream (linear algebra, Groebner completion, module
/// searches) is generic over this trait; the concrete instances are the
/// aliases `F2`, `F4`, ..., `F256` at the crate root.
pub trait Field:
    Copy
    + Eq
    + Ord
    + Hash
    + fmt::Debug
    + fmt::Display
    + Zero
    + One
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Neg<Output = Self>
    + Send
    + Sync
    + 'static
{
    /// Number of field elements.
    fn order() -> u64;

    /// Multiplicative inverse; `None` for zero.
    fn inv(self) -> Option<Self>;

    /// The element encoded by `x`, if `x < order()`.
    fn from_index(x: u64) -> Option<Self>;

    /// The encoding of this element as an integer `0..order()`.
    fn to_index(self) -> u64;

    /// All field elements in encoding order.
    fn elements() -> Vec<Self> {
        (0..Self::order()).map(|x| Self::from_index(x).unwrap()).collect()
    }
}

/// An element of GF(2^M), `1 <= M <= 8`.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Gf<const M: usize>(u16);

impl<const M: usize> Gf<M> {
    const MASK: u16 = (1 << M) - 1;

    /// Element with the given bit pattern; bits above degree M are masked off.
    pub fn new(value: u16) -> Self {
        Gf(value & Self::MASK)
    }

    /// Bit pattern of the residue.
    pub fn value(self) -> u16 {
        self.0
    }

    /// The class of x, a generator when M > 1.
    pub fn generator() -> Self {
        if M == 1 {
            Gf(1)
        } else {
            Gf(2)
        }
    }

    fn reduce(mut acc: u32) -> u16 {
        let modulus = MODULI[M] as u32;
        let mut bit = 31 - acc.leading_zeros().min(31);
        while acc >= 1 << M {
            if acc & (1 << bit) != 0 {
                acc ^= modulus << (bit - M as u32);
            }
            bit -= 1;
        }
        acc as u16
    }

    /// a^n by square-and-multiply.
    pub fn pow(self, mut n: u64) -> Self {
        let mut base = self;
        let mut acc = Gf(1);
        while n > 0 {
            if n & 1 == 1 {
                acc = acc * base;
            }
            base = base * base;
            n >>= 1;
        }
        acc
    }
}

impl<const M: usize> Add for Gf<M> {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        Gf(self.0 ^ rhs.0)
    }
}

impl<const M: usize> Sub for Gf<M> {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        // characteristic 2
        self + rhs
    }
}

impl<const M: usize> Neg for Gf<M> {
    type Output = Self;
    fn neg(self) -> Self {
        self
    }
}

impl<const M: usize> Mul for Gf<M> {
    type Output = Self;
    fn mul(self, rhs: Self) -> Self {
        let mut acc = 0u32;
        let a = self.0 as u32;
        for i in 0..M {
            if rhs.0 & (1 << i) != 0 {
                acc ^= a << i;
            }
        }
        Gf(Self::reduce(acc))
    }
}

impl<const M: usize> Zero for Gf<M> {
    fn zero() -> Self {
        Gf(0)
    }
    fn is_zero(&self) -> bool {
        self.0 == 0
    }
}

impl<const M: usize> One for Gf<M> {
    fn one() -> Self {
        Gf(1)
    }
}

impl<const M: usize> Field for Gf<M> {
    fn order() -> u64 {
        1 << M
    }

    fn inv(self) -> Option<Self> {
        if self.0 == 0 {
            None
        } else {
            // a^(2^M - 2) = a^{-1} in the unit group of order 2^M - 1
            Some(self.pow((1 << M) - 2))
        }
    }

    fn from_index(x: u64) -> Option<Self> {
        if x < 1 << M {
            Some(Gf(x as u16))
        } else {
            None
        }
    }

    fn to_index(self) -> u64 {
        self.0 as u64
    }
}

impl<const M: usize> fmt::Display for Gf<M> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl<const M: usize> fmt::Debug for Gf<M> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}#gf{}", self.0, 1u32 << M)
    }
}

impl<const M: usize> FromStr for Gf<M> {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let x: u64 = s
            .parse()
            .map_err(|_| format!("not a field element: {s:?}"))?;
        Gf::from_index(x).ok_or_else(|| format!("{x} out of range for GF({})", 1u32 << M))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::{F16, F2, F256, F4, F8};

    /// Independent multiplication oracle: carry-less schoolbook product
    /// followed by long division by the modulus, all on u64 bit patterns.
    fn mul_oracle(a: u16, b: u16, m: usize) -> u16 {
        let mut prod: u64 = 0;
        for i in 0..16 {
            if b & (1 << i) != 0 {
                prod ^= (a as u64) << i;
            }
        }
        let modulus = MODULI[m] as u64;
        for bit in (m as u32..64).rev() {
            if prod & (1 << bit) != 0 {
                prod ^= modulus << (bit - m as u32);
            }
        }
        prod as u16
    }

    #[test]
    fn gf4_multiplication_table() {
        // The full 16-entry table of GF(4) with modulus x^2 + x + 1,
        // frozen from the oracle: w * w = w + 1, w * w^2 = 1.
        let expected: [[u16; 4]; 4] = [[0, 0, 0, 0], [0, 1, 2, 3], [0, 2, 3, 1], [0, 3, 1, 2]];
        for a in 0..4u16 {
            for b in 0..4u16 {
                assert_eq!(mul_oracle(a, b, 2), expected[a as usize][b as usize]);
                assert_eq!(
                    (F4::new(a) * F4::new(b)).value(),
                    expected[a as usize][b as usize]
                );
            }
        }
    }

    #[test]
    fn characteristic_two() {
        assert_eq!(F2::one() + F2::one(), F2::zero());
        let w = F4::generator();
        assert_eq!(w + w, F4::zero());
        // w + 1 = w^2 under x^2 + x + 1
        assert_eq!(w + F4::one(), w * w);
    }

    #[test]
    fn inverses() {
        assert_eq!(F4::one().inv(), Some(F4::one()));
        let w = F4::generator();
        assert_eq!(w.inv(), Some(w * w));
        assert_eq!(F4::zero().inv(), None);
        for m_run in [3usize, 8] {
            match m_run {
                3 => {
                    for a in F8::elements().into_iter().filter(|a| !a.is_zero()) {
                        assert_eq!(a * a.inv().unwrap(), F8::one());
                    }
                }
                _ => {
                    for a in F256::elements().into_iter().filter(|a| !a.is_zero()) {
                        assert_eq!(a * a.inv().unwrap(), F256::one());
                    }
                }
            }
        }
    }

    #[test]
    fn ring_axioms_exhaustive_small() {
        // associativity, commutativity, distributivity for m <= 4
        fn check<const M: usize>() {
            let all = Gf::<M>::elements();
            for &a in &all {
                for &b in &all {
                    assert_eq!(a * b, b * a);
                    assert_eq!(a + b, b + a);
                    for &c in &all {
                        assert_eq!((a * b) * c, a * (b * c));
                        assert_eq!((a + b) + c, a + (b + c));
                        assert_eq!(a * (b + c), a * b + a * c);
                    }
                }
            }
        }
        check::<1>();
        check::<2>();
        check::<3>();
        check::<4>();
    }

    #[test]
    fn frobenius_is_additive() {
        for a in F16::elements() {
            for b in F16::elements() {
                assert_eq!((a + b) * (a + b), a * a + b * b);
            }
        }
    }

    #[test]
    fn unit_group_order() {
        // a^(2^m - 1) = 1 for a != 0
        for a in F8::elements().into_iter().filter(|a| !a.is_zero()) {
            assert_eq!(a.pow(7), F8::one());
        }
        for a in F256::elements().into_iter().filter(|a| !a.is_zero()) {
            assert_eq!(a.pow(255), F256::one());
        }
    }

    #[test]
    fn text_form_round_trips() {
        for a in F256::elements() {
            let s = a.to_string();
            assert_eq!(s.parse::<F256>().unwrap(), a);
        }
        assert!("4".parse::<F4>().is_err());
        assert!("x".parse::<F4>().is_err());
    }
}
