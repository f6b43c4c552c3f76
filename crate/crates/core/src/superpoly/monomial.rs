//! Super-monomials: a commuting part (exponents on even variables) times an
//! ordered product of distinct odd variables, stored in ascending order.

use std::cmp::Ordering;

use smallvec::SmallVec;

pub type Exponents = SmallVec<[u16; 12]>;

/// Canonical monomial `x^e * o_{i1} * ... * o_{ik}` with `i1 < ... < ik`.
///
/// The odd factors are held as a bitmask over odd-variable indices, so at most
/// 64 odd variables per ring.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SuperMonomial {
    even: Exponents,
    odd: u64,
}

/// Number of odd factors of `a` with index larger than `j`.
#[inline]
fn odd_above(a: u64, j: u32) -> u32 {
    if j >= 63 {
        0
    } else {
        (a >> (j + 1)).count_ones()
    }
}

/// Parity of the number of transpositions needed to sort `a * b` (odd parts only).
#[inline]
pub(crate) fn koszul_sign(a: u64, b: u64) -> bool {
    let mut parity = 0u32;
    let mut rest = b;
    while rest != 0 {
        let j = rest.trailing_zeros();
        parity ^= odd_above(a, j) & 1;
        rest &= rest - 1;
    }
    parity == 1
}

impl SuperMonomial {
    pub fn one(n_even: usize) -> Self {
        SuperMonomial { even: smallvec::smallvec![0; n_even], odd: 0 }
    }

    pub fn from_parts(even: &[u16], odd_mask: u64) -> Self {
        SuperMonomial { even: Exponents::from_slice(even), odd: odd_mask }
    }

    /// Builds a monomial from an exponent vector and a list of odd indices,
    /// returning `None` if an odd index repeats.
    pub fn from_odd_list(even: &[u16], odd: &[usize]) -> Option<Self> {
        let mut mask = 0u64;
        for &j in odd {
            assert!(j < 64, "at most 64 odd variables are supported");
            if mask & (1 << j) != 0 {
                return None;
            }
            mask |= 1 << j;
        }
        Some(Self::from_parts(even, mask))
    }

    pub fn even_var(n_even: usize, i: usize) -> Self {
        let mut m = Self::one(n_even);
        m.even[i] = 1;
        m
    }

    pub fn odd_var(n_even: usize, j: usize) -> Self {
        assert!(j < 64, "at most 64 odd variables are supported");
        SuperMonomial { even: smallvec::smallvec![0; n_even], odd: 1 << j }
    }

    pub fn even_exp(&self) -> &[u16] {
        &self.even
    }

    pub fn odd_mask(&self) -> u64 {
        self.odd
    }

    /// Odd variable indices in increasing order.
    pub fn odd_set(&self) -> Vec<usize> {
        let mut out = Vec::with_capacity(self.odd.count_ones() as usize);
        let mut rest = self.odd;
        while rest != 0 {
            out.push(rest.trailing_zeros() as usize);
            rest &= rest - 1;
        }
        out
    }

    pub fn degree(&self) -> u32 {
        self.even.iter().map(|&e| e as u32).sum::<u32>() + self.odd.count_ones()
    }

    pub fn odd_degree(&self) -> u32 {
        self.odd.count_ones()
    }

    /// Z/2 degree: number of odd factors mod 2.
    pub fn parity(&self) -> u8 {
        (self.odd.count_ones() & 1) as u8
    }

    pub fn is_one(&self) -> bool {
        self.odd == 0 && self.even.iter().all(|&e| e == 0)
    }

    pub fn is_purely_even(&self) -> bool {
        self.odd == 0
    }

    /// `self * other = sign * product`; `None` when an odd factor repeats.
    /// The boolean is `true` for a minus sign.
    pub fn mul(&self, other: &Self) -> Option<(bool, Self)> {
        if self.odd & other.odd != 0 {
            return None;
        }
        let neg = koszul_sign(self.odd, other.odd);
        let even = self.even.iter().zip(other.even.iter()).map(|(a, b)| a + b).collect();
        Some((neg, SuperMonomial { even, odd: self.odd | other.odd }))
    }

    /// Divisibility ignoring sign: every exponent fits and the odd set is contained.
    pub fn divides(&self, other: &Self) -> bool {
        self.odd & !other.odd == 0 && self.even.iter().zip(other.even.iter()).all(|(a, b)| a <= b)
    }

    /// For `self | other`, returns `(neg, q)` with `q * self = (-1)^neg * other`.
    pub fn quotient(&self, other: &Self) -> (bool, Self) {
        debug_assert!(self.divides(other));
        let even = other.even.iter().zip(self.even.iter()).map(|(a, b)| a - b).collect();
        let q = SuperMonomial { even, odd: other.odd & !self.odd };
        (koszul_sign(q.odd, self.odd), q)
    }

    pub fn lcm(&self, other: &Self) -> Self {
        let even = self.even.iter().zip(other.even.iter()).map(|(a, b)| *a.max(b)).collect();
        SuperMonomial { even, odd: self.odd | other.odd }
    }

    pub fn is_coprime(&self, other: &Self) -> bool {
        self.odd & other.odd == 0 && self.even.iter().zip(other.even.iter()).all(|(a, b)| *a == 0 || *b == 0)
    }
}

/// A monomial order on super-monomials. All orders refine total degree on each
/// block and are compatible with multiplication whenever the product is nonzero.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum TermOrder {
    /// Degree reverse lexicographic on the exponent vector
    /// `(even_1, ..., even_r, odd_1, ..., odd_s)` with the first variable largest.
    DegRevLex,
    /// Product of two degrevlex orders: the marked block is compared first.
    /// Any monomial involving a marked variable exceeds every monomial that doesn't.
    Elimination { even: Vec<bool>, odd: u64 },
}

fn drl_masked(a: &SuperMonomial, b: &SuperMonomial, even_keep: impl Fn(usize) -> bool, odd_keep: u64) -> Ordering {
    let deg = |m: &SuperMonomial| -> u32 {
        m.even.iter().enumerate().filter(|(i, _)| even_keep(*i)).map(|(_, &e)| e as u32).sum::<u32>()
            + (m.odd & odd_keep).count_ones()
    };
    match deg(a).cmp(&deg(b)) {
        Ordering::Equal => {}
        o => return o,
    }
    let diff = (a.odd ^ b.odd) & odd_keep;
    if diff != 0 {
        let top = 63 - diff.leading_zeros();
        // the monomial carrying the last differing variable is smaller
        return if a.odd & (1 << top) != 0 { Ordering::Less } else { Ordering::Greater };
    }
    for i in (0..a.even.len()).rev() {
        if !even_keep(i) {
            continue;
        }
        match a.even[i].cmp(&b.even[i]) {
            Ordering::Equal => continue,
            Ordering::Less => return Ordering::Greater,
            Ordering::Greater => return Ordering::Less,
        }
    }
    Ordering::Equal
}

impl TermOrder {
    pub fn compare(&self, a: &SuperMonomial, b: &SuperMonomial) -> Ordering {
        match self {
            TermOrder::DegRevLex => drl_masked(a, b, |_| true, u64::MAX),
            TermOrder::Elimination { even, odd } => {
                match drl_masked(a, b, |i| even[i], *odd) {
                    Ordering::Equal => drl_masked(a, b, |i| !even[i], !*odd),
                    o => o,
                }
            }
        }
    }

    /// True if `m` involves a variable of the eliminated block.
    pub fn touches_block(&self, m: &SuperMonomial) -> bool {
        match self {
            TermOrder::DegRevLex => false,
            TermOrder::Elimination { even, odd } => {
                m.odd & odd != 0 || m.even.iter().zip(even.iter()).any(|(e, &flag)| flag && *e > 0)
            }
        }
    }

    pub fn is_degree_compatible(&self) -> bool {
        matches!(self, TermOrder::DegRevLex)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn odd(n_even: usize, idx: &[usize]) -> SuperMonomial {
        SuperMonomial::from_odd_list(&vec![0; n_even], idx).unwrap()
    }

    #[test]
    fn koszul_swap() {
        let b1 = odd(0, &[1]);
        let b2 = odd(0, &[2]);
        let (neg, p) = b1.mul(&b2).unwrap();
        assert!(!neg);
        assert_eq!(p, odd(0, &[1, 2]));
        let (neg, p) = b2.mul(&b1).unwrap();
        assert!(neg);
        assert_eq!(p, odd(0, &[1, 2]));
        assert!(b1.mul(&b1).is_none());
    }

    #[test]
    fn even_part_commutes() {
        // x^2 * (x b3) = x^3 b3 with no sign
        let x2 = SuperMonomial::from_parts(&[2], 0);
        let xb3 = SuperMonomial::from_parts(&[1], 1 << 3);
        let (neg, p) = x2.mul(&xb3).unwrap();
        assert!(!neg);
        assert_eq!(p, SuperMonomial::from_parts(&[3], 1 << 3));
    }

    #[test]
    fn sign_counts_interleavings() {
        // (o0 o2) * (o1 o3) = -(o0 o1 o2 o3): o1 passes o2
        let a = odd(0, &[0, 2]);
        let b = odd(0, &[1, 3]);
        let (neg, _) = a.mul(&b).unwrap();
        assert!(neg);
        // (o1 o3) * (o0 o2): o0 passes o1,o3; o2 passes o3 -> 3 swaps
        let (neg, _) = b.mul(&a).unwrap();
        assert!(neg);
        let c = odd(0, &[2, 3]);
        let d = odd(0, &[0, 1]);
        assert!(!c.mul(&d).unwrap().0);
    }

    #[test]
    fn quotient_sign_roundtrip() {
        let m = odd(1, &[0, 1, 3]);
        let l = odd(1, &[1]);
        let (neg, q) = l.quotient(&m);
        let (neg2, back) = q.mul(&l).unwrap();
        assert_eq!(back, m);
        assert_eq!(neg, neg2);
    }

    #[test]
    fn degrevlex_basics() {
        let ord = TermOrder::DegRevLex;
        let x1x2 = SuperMonomial::from_parts(&[1, 1], 0);
        let x1sq = SuperMonomial::from_parts(&[2, 0], 0);
        assert_eq!(ord.compare(&x1sq, &x1x2), Ordering::Greater);
        let cube = SuperMonomial::from_parts(&[0, 3], 0);
        assert_eq!(ord.compare(&cube, &x1sq), Ordering::Greater);
        assert_eq!(ord.compare(&x1x2, &x1x2), Ordering::Equal);
        // odd variables come last in the exponent vector, so they are smallest
        let xa = SuperMonomial::from_parts(&[1, 0], 1);
        assert_eq!(ord.compare(&x1x2, &xa), Ordering::Greater);
    }

    #[test]
    fn elimination_order_eliminates() {
        let ord = TermOrder::Elimination { even: vec![true, false], odd: 0 };
        let t = SuperMonomial::from_parts(&[1, 0], 0);
        let y3 = SuperMonomial::from_parts(&[0, 3], 0);
        assert_eq!(ord.compare(&t, &y3), Ordering::Greater);
        assert!(ord.touches_block(&t) && !ord.touches_block(&y3));
    }
}
