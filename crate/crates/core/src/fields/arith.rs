//! Machine-integer helpers for prime fields and GF(p^k).

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::ToPrimitive;

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2u64;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

pub fn is_squarefree(n: i64) -> bool {
    let mut m = n.unsigned_abs();
    let mut d = 2u64;
    while d * d <= m {
        if m.is_multiple_of(d * d) {
            return false;
        }
        if m.is_multiple_of(d) {
            m /= d;
        }
        d += 1;
    }
    true
}

pub fn mod_pow(mut base: u64, mut exp: u64, p: u64) -> u64 {
    let mut acc = 1 % p;
    base %= p;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = acc * base % p;
        }
        base = base * base % p;
        exp >>= 1;
    }
    acc
}

/// Inverse of a nonzero residue via Fermat.
pub fn mod_inv(a: u64, p: u64) -> u64 {
    debug_assert!(!a.is_multiple_of(p));
    mod_pow(a, p - 2, p)
}

pub fn reduce_bigint(n: &BigInt, p: u64) -> u64 {
    n.mod_floor(&BigInt::from(p)).to_u64().unwrap()
}

/// Reduces a coefficient vector modulo the monic `modulus`, returning
/// exactly `deg(modulus)` coefficients.
pub fn ext_reduce(mut c: Vec<u64>, modulus: &[u64], p: u64) -> Vec<u64> {
    let k = modulus.len() - 1;
    if c.len() > k {
        for i in (k..c.len()).rev() {
            let lead = c[i];
            if lead != 0 {
                for (j, &m) in modulus[..k].iter().enumerate() {
                    let idx = i - k + j;
                    c[idx] = (c[idx] + (p - lead) * m) % p;
                }
            }
        }
    }
    c.resize(k, 0);
    c
}

pub fn ext_mul(a: &[u64], b: &[u64], modulus: &[u64], p: u64) -> Vec<u64> {
    let mut prod = vec![0u64; a.len() + b.len() - 1];
    for (i, &x) in a.iter().enumerate() {
        if x == 0 {
            continue;
        }
        for (j, &y) in b.iter().enumerate() {
            prod[i + j] = (prod[i + j] + x * y) % p;
        }
    }
    ext_reduce(prod, modulus, p)
}

pub fn ext_pow(a: &[u64], mut exp: u64, modulus: &[u64], p: u64) -> Vec<u64> {
    let k = modulus.len() - 1;
    let mut acc = vec![0u64; k];
    acc[0] = 1;
    let mut base = a.to_vec();
    while exp > 0 {
        if exp & 1 == 1 {
            acc = ext_mul(&acc, &base, modulus, p);
        }
        base = ext_mul(&base, &base, modulus, p);
        exp >>= 1;
    }
    acc
}

/// Formats a polynomial with coefficients in [0, p), highest degree first:
/// `t^2+t+1`, `2*x^3+1`.
pub fn format_zp_poly(c: &[u64], var: char) -> String {
    let mut out = String::new();
    for (e, &coef) in c.iter().enumerate().rev() {
        if coef == 0 {
            continue;
        }
        if !out.is_empty() {
            out.push('+');
        }
        match (e, coef) {
            (0, _) => out.push_str(&coef.to_string()),
            (1, 1) => out.push(var),
            (1, _) => out.push_str(&format!("{coef}*{var}")),
            (_, 1) => out.push_str(&format!("{var}^{e}")),
            _ => out.push_str(&format!("{coef}*{var}^{e}")),
        }
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}
