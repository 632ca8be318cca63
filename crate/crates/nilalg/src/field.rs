//! Arithmetic in small finite fields `F_{p^m}`.
//!
//! An element is a single integer in `[0, q)`; its base-`p` digits are the
//! coefficients of the representing polynomial, constant term least
//! significant. For `m > 1` the modulus is the monic irreducible of degree
//! `m` with minimal coefficient encoding, so element encodings mean the same
//! thing in every run and every implementation of the same rule.

use std::fmt;

use crate::{Error, Result};

/// An element of a finite field, stored as its integer encoding.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct FieldElement(pub u32);

impl fmt::Display for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// The field `F_{p^m}` together with its deterministic modulus.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct FieldSpec {
    p: u32,
    m: u32,
    q: u32,
    /// Monic modulus coefficients, constant term first, leading 1 included.
    /// Empty when `m == 1`.
    modulus: Vec<u32>,
}

/// Construct `F_{p^m}`, choosing the modulus deterministically: among the
/// monic irreducible polynomials of degree `m` over `F_p`, take the one
/// whose coefficient encoding (constant term least significant, leading
/// coefficient excluded) is minimal.
pub fn make_field(p: u32, m: u32) -> Result<FieldSpec> {
    if m == 0 {
        return Err(Error::InvalidExponent);
    }
    if !is_prime(p) {
        return Err(Error::NotPrime(p as u64));
    }
    let q = (p as u128)
        .checked_pow(m)
        .filter(|&q| q <= u32::MAX as u128)
        .ok_or(Error::FieldTooLarge((p as u128).saturating_pow(m)))?
        as u32;
    let modulus = if m == 1 {
        Vec::new()
    } else {
        find_modulus(p, m).expect("an irreducible polynomial of every degree exists")
    };
    Ok(FieldSpec { p, m, q, modulus })
}

fn is_prime(n: u32) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2u32;
    while (d as u64) * (d as u64) <= n as u64 {
        if n % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

/// First irreducible monic polynomial of degree `m` in encoding order.
fn find_modulus(p: u32, m: u32) -> Option<Vec<u32>> {
    let count = (p as u64).pow(m);
    for enc in 0..count {
        let mut poly = digits_of(enc, p, m as usize);
        poly.push(1); // monic
        if poly_is_irreducible(&poly, p) {
            return Some(poly);
        }
    }
    None
}

fn digits_of(mut v: u64, p: u32, len: usize) -> Vec<u32> {
    let mut out = vec![0u32; len];
    for d in out.iter_mut() {
        *d = (v % p as u64) as u32;
        v /= p as u64;
    }
    out
}

/// Remainder of `num` modulo monic `den`, coefficients mod `p`.
fn poly_rem(num: &[u32], den: &[u32], p: u32) -> Vec<u32> {
    let mut rem: Vec<u32> = num.to_vec();
    let dd = den.len() - 1;
    while rem.len() > dd {
        let lead = *rem.last().unwrap() % p;
        let shift = rem.len() - 1 - dd;
        if lead != 0 {
            for (j, &dc) in den.iter().enumerate() {
                let idx = shift + j;
                let sub = (lead as u64 * dc as u64) % p as u64;
                rem[idx] = ((rem[idx] as u64 + p as u64 - sub) % p as u64) as u32;
            }
        }
        rem.pop();
    }
    while rem.len() > 1 && *rem.last().unwrap() % p == 0 {
        rem.pop();
    }
    rem
}

fn poly_is_irreducible(poly: &[u32], p: u32) -> bool {
    let deg = poly.len() - 1;
    if deg == 0 {
        return false;
    }
    // A reducible monic polynomial has a monic divisor of degree <= deg/2.
    for d in 1..=deg / 2 {
        let count = (p as u64).pow(d as u32);
        for enc in 0..count {
            let mut div = digits_of(enc, p, d);
            div.push(1);
            let rem = poly_rem(poly, &div, p);
            if rem.iter().all(|&c| c % p == 0) {
                return false;
            }
        }
    }
    true
}

impl FieldSpec {
    pub fn p(&self) -> u32 {
        self.p
    }

    pub fn m(&self) -> u32 {
        self.m
    }

    pub fn q(&self) -> u32 {
        self.q
    }

    pub fn characteristic(&self) -> u32 {
        self.p
    }

    /// Modulus coefficients (constant first, leading 1 included); `None` for
    /// prime fields.
    pub fn modulus(&self) -> Option<&[u32]> {
        if self.m == 1 {
            None
        } else {
            Some(&self.modulus)
        }
    }

    pub fn zero(&self) -> FieldElement {
        FieldElement(0)
    }

    pub fn one(&self) -> FieldElement {
        FieldElement(1)
    }

    /// The element with the given encoding. Panics if out of range.
    pub fn element(&self, v: u32) -> FieldElement {
        assert!(v < self.q, "encoding {} out of range for field of order {}", v, self.q);
        FieldElement(v)
    }

    /// All `q` elements in increasing encoding order.
    pub fn elements(&self) -> impl Iterator<Item = FieldElement> {
        (0..self.q).map(FieldElement)
    }

    fn digits(&self, x: FieldElement) -> Vec<u32> {
        digits_of(x.0 as u64, self.p, self.m as usize)
    }

    fn from_digits(&self, d: &[u32]) -> FieldElement {
        let mut v = 0u64;
        for &c in d.iter().rev() {
            v = v * self.p as u64 + (c % self.p) as u64;
        }
        FieldElement(v as u32)
    }

    pub fn add(&self, x: FieldElement, y: FieldElement) -> FieldElement {
        debug_assert!(x.0 < self.q && y.0 < self.q);
        if self.m == 1 {
            return FieldElement((x.0 + y.0) % self.p);
        }
        let (dx, dy) = (self.digits(x), self.digits(y));
        let sum: Vec<u32> = dx.iter().zip(&dy).map(|(&a, &b)| (a + b) % self.p).collect();
        self.from_digits(&sum)
    }

    pub fn neg(&self, x: FieldElement) -> FieldElement {
        debug_assert!(x.0 < self.q);
        if self.m == 1 {
            return FieldElement((self.p - x.0) % self.p);
        }
        let d: Vec<u32> = self.digits(x).iter().map(|&a| (self.p - a) % self.p).collect();
        self.from_digits(&d)
    }

    pub fn sub(&self, x: FieldElement, y: FieldElement) -> FieldElement {
        self.add(x, self.neg(y))
    }

    pub fn mul(&self, x: FieldElement, y: FieldElement) -> FieldElement {
        debug_assert!(x.0 < self.q && y.0 < self.q);
        if self.m == 1 {
            return FieldElement(((x.0 as u64 * y.0 as u64) % self.p as u64) as u32);
        }
        let (dx, dy) = (self.digits(x), self.digits(y));
        let m = self.m as usize;
        let mut prod = vec![0u64; 2 * m - 1];
        for (i, &a) in dx.iter().enumerate() {
            if a == 0 {
                continue;
            }
            for (j, &b) in dy.iter().enumerate() {
                prod[i + j] = (prod[i + j] + a as u64 * b as u64) % self.p as u64;
            }
        }
        // Reduce modulo the monic modulus, top coefficient down.
        for i in (m..prod.len()).rev() {
            let c = prod[i] % self.p as u64;
            if c != 0 {
                for (j, &mc) in self.modulus.iter().enumerate().take(m) {
                    let idx = i - m + j;
                    let sub = (c * mc as u64) % self.p as u64;
                    prod[idx] = (prod[idx] + self.p as u64 - sub) % self.p as u64;
                }
            }
            prod[i] = 0;
        }
        let digits: Vec<u32> = prod[..m].iter().map(|&c| c as u32).collect();
        self.from_digits(&digits)
    }

    pub fn pow(&self, x: FieldElement, mut e: u64) -> FieldElement {
        let mut base = x;
        let mut acc = self.one();
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            e >>= 1;
        }
        acc
    }

    /// Multiplicative inverse. Panics on zero.
    pub fn inv(&self, x: FieldElement) -> FieldElement {
        assert!(x.0 != 0, "inverse of zero");
        self.pow(x, self.q as u64 - 2)
    }

    pub fn div(&self, x: FieldElement, y: FieldElement) -> FieldElement {
        self.mul(x, self.inv(y))
    }

    /// The set `{x^2 : x in F}`, sorted by encoding; contains zero.
    pub fn squares(&self) -> Vec<FieldElement> {
        let mut sq: Vec<FieldElement> = self.elements().map(|x| self.mul(x, x)).collect();
        sq.sort();
        sq.dedup();
        sq
    }

    /// Image `W` of the map `T -> T^2 + T` in characteristic 2, plus the
    /// minimal-encoding element of the nontrivial coset `F \ W`.
    pub fn artin_schreier_image(&self) -> Result<(Vec<FieldElement>, FieldElement)> {
        if self.p != 2 {
            return Err(Error::OddCharacteristic);
        }
        let mut image: Vec<FieldElement> =
            self.elements().map(|t| self.add(self.mul(t, t), t)).collect();
        image.sort();
        image.dedup();
        let rep = self
            .elements()
            .find(|x| image.binary_search(x).is_err())
            .expect("the image is a proper subgroup");
        Ok((image, rep))
    }

    /// Smallest-encoding generator of the multiplicative group.
    pub fn primitive_element(&self) -> FieldElement {
        'outer: for v in 1..self.q {
            let x = FieldElement(v);
            let mut acc = x;
            for _ in 1..self.q - 1 {
                if acc == self.one() {
                    continue 'outer;
                }
                acc = self.mul(acc, x);
            }
            if acc == self.one() {
                return x;
            }
        }
        unreachable!("the multiplicative group of a finite field is cyclic")
    }
}

impl fmt::Display for FieldSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.m == 1 {
            write!(f, "GF({})", self.p)
        } else {
            write!(f, "GF({}^{})", self.p, self.m)
        }
    }
}
