//! Small finite fields GF(p^m), q ≤ 64, as log/antilog tables.
//!
//! Field elements are encoded as integers in `0..q`: the polynomial
//! `c_0 + c_1 x + … + c_{m-1} x^{m-1}` over `F_p` is the integer
//! `c_0 + c_1 p + … + c_{m-1} p^{m-1}` (little-endian base-`p` digits).
//!
//! The generator is `α = x` for extension fields (`α =` least primitive
//! root for prime fields). The defining polynomial is found by searching
//! monic degree-`m` polynomials in increasing encoded order and taking the
//! first whose residue class of `x` has multiplicative order `q - 1`; that
//! single test implies both irreducibility and primitivity, and it makes
//! the table fully self-verifying at construction time.

use crate::{Error, Result};

/// Log/antilog tables for GF(p^m).
#[derive(Debug, Clone)]
pub struct FiniteFieldTable {
    p: usize,
    m: u32,
    q: usize,
    /// Monic defining polynomial, coefficients low-to-high (length m+1).
    modulus: Vec<usize>,
    /// `antilog[i] = α^i` for `i` in `0..q-1`.
    antilog: Vec<usize>,
    /// `log[x]` for `x` in `1..q`; `log[0]` stays `None`.
    log: Vec<Option<usize>>,
}

fn is_prime(p: usize) -> bool {
    p >= 2 && (2..p).take_while(|d| d * d <= p).all(|d| p % d != 0)
}

impl FiniteFieldTable {
    pub fn new(p: usize, m: u32) -> Result<Self> {
        if !is_prime(p) {
            return Err(Error::BadArgument(format!(
                "field characteristic {p} is not prime"
            )));
        }
        let q = p
            .checked_pow(m)
            .filter(|&q| (2..=64).contains(&q))
            .ok_or_else(|| {
                Error::BadArgument(format!("field size {p}^{m} outside the supported 2..=64"))
            })?;
        if m == 1 {
            // Prime field: α is the least primitive root.
            for alpha in 2..p.max(3) {
                if let Some(table) = Self::try_prime_field(p, alpha) {
                    return Ok(table);
                }
            }
            if p == 2 {
                // GF(2): the unit group is trivial; α = 1, modulus x - 1.
                return Ok(FiniteFieldTable {
                    p,
                    m,
                    q,
                    modulus: vec![1, 1],
                    antilog: vec![1],
                    log: vec![None, Some(0)],
                });
            }
            return Err(Error::NoPrimitivePolynomial(p, m));
        }
        // Extension field: search for the first monic polynomial whose x is
        // a primitive element. Constant terms of zero can never work.
        for low in 1..q {
            let mut modulus = digits(low, p, m as usize);
            modulus.push(1);
            if modulus[0] == 0 {
                continue;
            }
            if let Some(table) = Self::try_extension(p, m, q, modulus) {
                return Ok(table);
            }
        }
        Err(Error::NoPrimitivePolynomial(p, m))
    }

    fn try_prime_field(p: usize, alpha: usize) -> Option<Self> {
        let mut antilog = Vec::with_capacity(p - 1);
        let mut log = vec![None; p];
        let mut value = 1usize;
        for i in 0..(p - 1) {
            if log[value].is_some() {
                return None; // order of alpha is smaller than p - 1
            }
            log[value] = Some(i);
            antilog.push(value);
            value = value * alpha % p;
        }
        if value != 1 {
            return None;
        }
        Some(FiniteFieldTable {
            p,
            m: 1,
            q: p,
            modulus: vec![p - alpha, 1],
            antilog,
            log,
        })
    }

    fn try_extension(p: usize, m: u32, q: usize, modulus: Vec<usize>) -> Option<Self> {
        let deg = m as usize;
        let mut antilog = Vec::with_capacity(q - 1);
        let mut log = vec![None; q];
        let mut cur = vec![0usize; deg];
        cur[0] = 1; // α^0 = 1
        for i in 0..(q - 1) {
            let enc = encode(&cur, p);
            if enc == 0 || log[enc].is_some() {
                return None;
            }
            log[enc] = Some(i);
            antilog.push(enc);
            cur = mul_by_x(&cur, &modulus, p);
        }
        if encode(&cur, p) != 1 {
            return None;
        }
        Some(FiniteFieldTable {
            p,
            m,
            q,
            modulus,
            antilog,
            log,
        })
    }

    pub fn p(&self) -> usize {
        self.p
    }

    pub fn m(&self) -> u32 {
        self.m
    }

    pub fn q(&self) -> usize {
        self.q
    }

    /// Defining polynomial, coefficients low-to-high.
    pub fn modulus(&self) -> &[usize] {
        &self.modulus
    }

    /// Digit-wise (vector) addition.
    pub fn add(&self, a: usize, b: usize) -> usize {
        debug_assert!(a < self.q && b < self.q);
        let da = digits(a, self.p, self.m as usize);
        let db = digits(b, self.p, self.m as usize);
        let sum: Vec<usize> = da
            .iter()
            .zip(&db)
            .map(|(x, y)| (x + y) % self.p)
            .collect();
        encode(&sum, self.p)
    }

    pub fn neg(&self, a: usize) -> usize {
        let da = digits(a, self.p, self.m as usize);
        let neg: Vec<usize> = da.iter().map(|&x| (self.p - x) % self.p).collect();
        encode(&neg, self.p)
    }

    pub fn sub(&self, a: usize, b: usize) -> usize {
        self.add(a, self.neg(b))
    }

    pub fn mul(&self, a: usize, b: usize) -> usize {
        if a == 0 || b == 0 {
            return 0;
        }
        let la = self.log[a].expect("nonzero element has a log");
        let lb = self.log[b].expect("nonzero element has a log");
        self.antilog[(la + lb) % (self.q - 1)]
    }

    pub fn inv(&self, a: usize) -> usize {
        assert!(a != 0, "zero has no inverse");
        let la = self.log[a].unwrap();
        self.antilog[(self.q - 1 - la) % (self.q - 1)]
    }

    /// `α^i` (exponent taken modulo q-1).
    pub fn pow_alpha(&self, i: usize) -> usize {
        self.antilog[i % (self.q - 1)]
    }

    /// Discrete log base α of a nonzero element.
    pub fn log(&self, a: usize) -> Option<usize> {
        if a == 0 {
            None
        } else {
            self.log[a]
        }
    }

    /// Little-endian base-p digits (the coordinate vector over F_p).
    pub fn element_digits(&self, a: usize) -> Vec<usize> {
        digits(a, self.p, self.m as usize)
    }
}

fn digits(mut value: usize, p: usize, len: usize) -> Vec<usize> {
    let mut out = vec![0usize; len];
    for slot in out.iter_mut() {
        *slot = value % p;
        value /= p;
    }
    out
}

fn encode(digits: &[usize], p: usize) -> usize {
    digits.iter().rev().fold(0, |acc, &d| acc * p + d)
}

/// Multiply a length-m coefficient vector by x, reduce by the monic modulus.
fn mul_by_x(coeffs: &[usize], modulus: &[usize], p: usize) -> Vec<usize> {
    let m = coeffs.len();
    let mut out = vec![0usize; m];
    let carry = coeffs[m - 1];
    for i in 1..m {
        out[i] = coeffs[i - 1];
    }
    // x^m ≡ -(modulus - x^m): subtract carry * modulus[i] from each slot.
    for i in 0..m {
        out[i] = (out[i] + (p - modulus[i] % p) * carry) % p;
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn gf8_uses_the_expected_cubic() {
        let f = FiniteFieldTable::new(2, 3).unwrap();
        // x^3 + x + 1, low-to-high.
        assert_eq!(f.modulus(), &[1, 1, 0, 1]);
        assert_eq!(f.q(), 8);
        // α = x = 2; α^3 = x + 1 = 3.
        assert_eq!(f.pow_alpha(1), 2);
        assert_eq!(f.pow_alpha(3), 3);
        assert_eq!(f.pow_alpha(7), 1);
    }

    #[test]
    fn gf9_search_result() {
        let f = FiniteFieldTable::new(3, 2).unwrap();
        // x^2 + x + 2 is the first primitive quadratic over F_3.
        assert_eq!(f.modulus(), &[2, 1, 1]);
        // α^4 must be the unique element of order 2, i.e. -1 = 2.
        assert_eq!(f.pow_alpha(4), 2);
    }

    #[test]
    fn prime_fields() {
        let f7 = FiniteFieldTable::new(7, 1).unwrap();
        assert_eq!(f7.pow_alpha(1), 3); // least primitive root of 7
        let f5 = FiniteFieldTable::new(5, 1).unwrap();
        assert_eq!(f5.pow_alpha(1), 2);
        let f2 = FiniteFieldTable::new(2, 1).unwrap();
        assert_eq!(f2.mul(1, 1), 1);
        assert_eq!(f2.add(1, 1), 0);
    }

    #[test]
    fn field_axioms_sampled() {
        for (p, m) in [(2usize, 2u32), (2, 3), (3, 2), (5, 1), (7, 1), (2, 4)] {
            let f = FiniteFieldTable::new(p, m).unwrap();
            let q = f.q();
            for a in 0..q {
                assert_eq!(f.add(a, f.neg(a)), 0);
                assert_eq!(f.mul(a, 1), a);
                if a != 0 {
                    assert_eq!(f.mul(a, f.inv(a)), 1);
                    // Fermat: a^(q-1) = 1 via logs.
                    assert_eq!(f.pow_alpha(f.log(a).unwrap() * (q - 1)), 1);
                }
                for b in 0..q {
                    assert_eq!(f.add(a, b), f.add(b, a));
                    assert_eq!(f.mul(a, b), f.mul(b, a));
                    for c in 0..q {
                        assert_eq!(f.mul(a, f.add(b, c)), f.add(f.mul(a, b), f.mul(a, c)));
                    }
                }
            }
        }
    }

    #[test]
    fn rejects_bad_parameters() {
        assert!(FiniteFieldTable::new(4, 1).is_err());
        assert!(FiniteFieldTable::new(6, 2).is_err());
        assert!(FiniteFieldTable::new(2, 7).is_err()); // 128 > 64
        assert!(FiniteFieldTable::new(3, 4).is_err()); // 81 > 64
    }

    #[test]
    fn all_supported_sizes_construct() {
        for (p, m) in [
            (2usize, 1u32),
            (2, 2),
            (2, 3),
            (2, 4),
            (2, 5),
            (2, 6),
            (3, 1),
            (3, 2),
            (3, 3),
            (5, 1),
            (5, 2),
            (7, 1),
            (7, 2),
            (11, 1),
            (13, 1),
            (61, 1),
        ] {
            let f = FiniteFieldTable::new(p, m).unwrap();
            assert_eq!(f.q(), p.pow(m));
        }
    }
}
