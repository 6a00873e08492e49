//! Exact arithmetic in small finite fields GF(p^k).
//!
//! Elements are plain integer codes in `[0, p^k)`: the polynomial
//! `a_0 + a_1 x + ... + a_{k-1} x^{k-1}` is encoded as `sum a_i p^i`, so
//! code 0 is the additive zero and code 1 the multiplicative one. The
//! modulus used for each `(p, k)` is the first irreducible monic polynomial
//! of degree `k` in ascending code order, which makes all encodings stable
//! across runs (for GF(4) this is `x^2 + x + 1`).

use crate::{Error, Result};
use std::fmt;
use std::sync::Arc;

/// Element code. Fields are capped at order 2^16 so `u16` always fits.
pub type Scalar = u16;

/// Hard cap on the field order accepted by [`FieldSpec::make`].
pub const MAX_FIELD_ORDER: u64 = 1 << 16;

/// Orders up to this use dense add/mul/inv lookup tables; larger fields
/// fall back to log/antilog tables for multiplication.
const DENSE_TABLE_LIMIT: u64 = 256;

/// A finite field GF(p^k) with its arithmetic tables.
pub struct FieldSpec {
    pub p: u64,
    pub k: u32,
    pub order: u64,
    /// Monic modulus, `modulus[i]` the coefficient of `x^i`, length k+1.
    pub modulus: Vec<u64>,
    add_table: Vec<Scalar>,
    mul_table: Vec<Scalar>,
    inv_table: Vec<Scalar>,
    neg_table: Vec<Scalar>,
    /// discrete log / antilog with respect to a fixed generator, used when
    /// the dense tables are not built.
    log_table: Vec<u32>,
    exp_table: Vec<Scalar>,
}

impl PartialEq for FieldSpec {
    fn eq(&self, other: &Self) -> bool {
        self.p == other.p && self.k == other.k && self.modulus == other.modulus
    }
}
impl Eq for FieldSpec {}

impl fmt::Debug for FieldSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "FieldSpec({})", self.name())
    }
}

fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

/// Polynomials over GF(p) as digit vectors, little endian, for building the
/// modulus and the multiplication tables.
fn poly_of_code(mut code: u64, p: u64, len: usize) -> Vec<u64> {
    let mut v = vec![0; len];
    for d in v.iter_mut() {
        *d = code % p;
        code /= p;
    }
    v
}

fn code_of_poly(poly: &[u64], p: u64) -> u64 {
    poly.iter().rev().fold(0, |acc, &d| acc * p + d)
}

fn poly_deg(poly: &[u64]) -> Option<usize> {
    poly.iter().rposition(|&c| c != 0)
}

/// Remainder of `a` modulo the monic polynomial `m` over GF(p).
fn poly_rem(a: &[u64], m: &[u64], p: u64) -> Vec<u64> {
    let md = poly_deg(m).expect("monic modulus");
    let mut r = a.to_vec();
    loop {
        match poly_deg(&r) {
            Some(d) if d >= md => {
                let c = r[d];
                for i in 0..=md {
                    r[d - md + i] = (r[d - md + i] + (p - c % p) * m[i]) % p;
                }
            }
            _ => break,
        }
    }
    r.truncate(md);
    r.resize(md, 0);
    r
}

fn poly_mul(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
    let mut out = vec![0; a.len() + b.len()];
    for (i, &x) in a.iter().enumerate() {
        if x == 0 {
            continue;
        }
        for (j, &y) in b.iter().enumerate() {
            out[i + j] = (out[i + j] + x * y) % p;
        }
    }
    out
}

/// Trial division by every monic polynomial of degree at most k/2.
fn is_irreducible(m: &[u64], p: u64) -> bool {
    let k = match poly_deg(m) {
        Some(d) => d,
        None => return false,
    };
    if k == 0 {
        return false;
    }
    for d in 1..=(k / 2) {
        let count = p.pow(d as u32);
        for tail in 0..count {
            let mut cand = poly_of_code(tail, p, d + 1);
            cand[d] = 1;
            let r = poly_rem(m, &cand, p);
            if poly_deg(&r).is_none() {
                return false;
            }
        }
    }
    true
}

/// First irreducible monic polynomial of degree k over GF(p), in ascending
/// code order of the lower coefficients.
fn default_modulus(p: u64, k: u32) -> Vec<u64> {
    if k == 1 {
        return vec![0, 1];
    }
    let count = p.pow(k);
    for tail in 0..count {
        let mut cand = poly_of_code(tail, p, k as usize + 1);
        cand[k as usize] = 1;
        if is_irreducible(&cand, p) {
            return cand;
        }
    }
    unreachable!("an irreducible polynomial of every degree exists")
}

impl FieldSpec {
    /// Builds GF(p^k) with the fixed default modulus for `(p, k)`.
    pub fn make(p: u64, k: u32) -> Result<Arc<FieldSpec>> {
        Self::with_modulus(p, k, None)
    }

    /// Builds GF(p^k) with a user-supplied monic modulus (little-endian
    /// coefficients of length k+1), verified irreducible by trial division.
    pub fn with_modulus(p: u64, k: u32, modulus: Option<Vec<u64>>) -> Result<Arc<FieldSpec>> {
        if !is_prime(p) {
            return Err(Error::NonPrime(p));
        }
        if k < 1 {
            return Err(Error::InvalidDegree);
        }
        let order = (p as u128).pow(k);
        if order > MAX_FIELD_ORDER as u128 {
            return Err(Error::FieldTooLarge {
                order: order.min(u64::MAX as u128) as u64,
                max: MAX_FIELD_ORDER,
            });
        }
        let order = order as u64;
        let modulus = match modulus {
            Some(m) => {
                let m: Vec<u64> = m.iter().map(|&c| c % p).collect();
                if poly_deg(&m) != Some(k as usize) || m[k as usize] != 1 || !is_irreducible(&m, p)
                {
                    return Err(Error::ReducibleModulus { p });
                }
                m
            }
            None => default_modulus(p, k),
        };

        let mut f = FieldSpec {
            p,
            k,
            order,
            modulus,
            add_table: Vec::new(),
            mul_table: Vec::new(),
            inv_table: Vec::new(),
            neg_table: Vec::new(),
            log_table: Vec::new(),
            exp_table: Vec::new(),
        };
        f.build_tables();
        Ok(Arc::new(f))
    }

    /// Parses names of the form `GF(p)` or `GF(p^k)`.
    pub fn parse(name: &str) -> Result<Arc<FieldSpec>> {
        let inner = name
            .trim()
            .strip_prefix("GF(")
            .and_then(|s| s.strip_suffix(')'))
            .ok_or_else(|| Error::UnknownGroupId(format!("bad field name {name:?}")))?;
        let (p, k) = match inner.split_once('^') {
            Some((p, k)) => (
                p.parse::<u64>()
                    .map_err(|_| Error::UnknownGroupId(format!("bad field name {name:?}")))?,
                k.parse::<u32>()
                    .map_err(|_| Error::UnknownGroupId(format!("bad field name {name:?}")))?,
            ),
            None => {
                let q = inner
                    .parse::<u64>()
                    .map_err(|_| Error::UnknownGroupId(format!("bad field name {name:?}")))?;
                // accept composite orders like GF(4) by factoring q = p^k
                let mut p = q;
                let mut k = 1;
                for cand in 2..=q {
                    if cand * cand > q {
                        break;
                    }
                    if q % cand == 0 {
                        p = cand;
                        let mut m = q;
                        k = 0;
                        while m > 1 {
                            if m % cand != 0 {
                                return Err(Error::NonPrime(q));
                            }
                            m /= cand;
                            k += 1;
                        }
                        break;
                    }
                }
                (p, k)
            }
        };
        FieldSpec::make(p, k)
    }

    /// Canonical display name, `GF(p)` or `GF(p^k)`.
    pub fn name(&self) -> String {
        if self.k == 1 {
            format!("GF({})", self.p)
        } else {
            format!("GF({}^{})", self.p, self.k)
        }
    }

    fn raw_add(&self, a: u64, b: u64) -> u64 {
        // digitwise addition base p
        let (mut a, mut b) = (a, b);
        let mut out = 0;
        let mut mult = 1;
        for _ in 0..self.k {
            out += ((a + b) % self.p) * mult;
            a /= self.p;
            b /= self.p;
            mult *= self.p;
        }
        out
    }

    fn raw_mul(&self, a: u64, b: u64) -> u64 {
        let pa = poly_of_code(a, self.p, self.k as usize);
        let pb = poly_of_code(b, self.p, self.k as usize);
        let prod = poly_mul(&pa, &pb, self.p);
        code_of_poly(&poly_rem(&prod, &self.modulus, self.p), self.p)
    }

    fn build_tables(&mut self) {
        let n = self.order;
        self.neg_table = (0..n)
            .map(|a| {
                let mut out = 0;
                let mut x = a;
                let mut mult = 1;
                for _ in 0..self.k {
                    out += ((self.p - x % self.p) % self.p) * mult;
                    x /= self.p;
                    mult *= self.p;
                }
                out as Scalar
            })
            .collect();
        if n <= DENSE_TABLE_LIMIT {
            self.add_table = (0..n * n)
                .map(|i| self.raw_add(i / n, i % n) as Scalar)
                .collect();
            self.mul_table = (0..n * n)
                .map(|i| self.raw_mul(i / n, i % n) as Scalar)
                .collect();
            let mut inv = vec![0 as Scalar; n as usize];
            for a in 1..n {
                for b in 1..n {
                    if self.mul_table[(a * n + b) as usize] == 1 {
                        inv[a as usize] = b as Scalar;
                        break;
                    }
                }
            }
            self.inv_table = inv;
        } else {
            // log/antilog with respect to the least primitive element
            let mut gen = 0;
            'outer: for g in 2..n {
                let mut seen = vec![false; n as usize];
                let mut x = 1u64;
                let mut c = 0u64;
                loop {
                    if seen[x as usize] {
                        break;
                    }
                    seen[x as usize] = true;
                    c += 1;
                    x = self.raw_mul(x, g);
                    if x == 1 {
                        break;
                    }
                }
                if c == n - 1 {
                    gen = g;
                    break 'outer;
                }
            }
            assert!(gen != 0, "multiplicative group is cyclic");
            let mut log = vec![0u32; n as usize];
            let mut exp = vec![0 as Scalar; (n - 1) as usize];
            let mut x = 1u64;
            for e in 0..(n - 1) {
                log[x as usize] = e as u32;
                exp[e as usize] = x as Scalar;
                x = self.raw_mul(x, gen);
            }
            self.log_table = log;
            self.exp_table = exp;
        }
    }

    #[inline]
    pub fn add(&self, a: Scalar, b: Scalar) -> Scalar {
        if !self.add_table.is_empty() {
            self.add_table[a as usize * self.order as usize + b as usize]
        } else {
            self.raw_add(a as u64, b as u64) as Scalar
        }
    }

    #[inline]
    pub fn neg(&self, a: Scalar) -> Scalar {
        self.neg_table[a as usize]
    }

    #[inline]
    pub fn sub(&self, a: Scalar, b: Scalar) -> Scalar {
        self.add(a, self.neg(b))
    }

    #[inline]
    pub fn mul(&self, a: Scalar, b: Scalar) -> Scalar {
        if !self.mul_table.is_empty() {
            self.mul_table[a as usize * self.order as usize + b as usize]
        } else if a == 0 || b == 0 {
            0
        } else {
            let m = self.order - 1;
            let e = (self.log_table[a as usize] as u64 + self.log_table[b as usize] as u64) % m;
            self.exp_table[e as usize]
        }
    }

    pub fn inv(&self, a: Scalar) -> Result<Scalar> {
        if a == 0 {
            return Err(Error::ZeroInverse);
        }
        if !self.inv_table.is_empty() {
            Ok(self.inv_table[a as usize])
        } else {
            let m = self.order - 1;
            let e = (m - self.log_table[a as usize] as u64) % m;
            Ok(self.exp_table[e as usize])
        }
    }

    pub fn pow(&self, a: Scalar, mut e: u64) -> Scalar {
        let mut base = a;
        let mut acc: Scalar = 1;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            e >>= 1;
        }
        acc
    }

    /// All element codes in ascending order.
    pub fn enumerate(&self) -> impl Iterator<Item = Scalar> + '_ {
        (0..self.order).map(|c| c as Scalar)
    }
}
