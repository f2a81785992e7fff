//! Dense univariate polynomials over a prime field `F_p`, `p < 2^32`.
//!
//! Coefficients are stored lowest degree first and kept reduced; the zero
//! polynomial is the empty vector.

pub fn pow_mod(mut b: u64, mut e: u64, p: u64) -> u64 {
    let mut acc = 1 % p;
    b %= p;
    while e > 0 {
        if e & 1 == 1 {
            acc = acc * b % p;
        }
        b = b * b % p;
        e >>= 1;
    }
    acc
}

pub fn inv_mod(a: u64, p: u64) -> u64 {
    debug_assert!(!a.is_multiple_of(p));
    pow_mod(a, p - 2, p)
}

pub fn is_prime(n: u64) -> bool {
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

/// The first `count` primes that are at least `from`.
pub fn primes_from(from: u64, count: usize) -> Vec<u64> {
    (from..).filter(|&n| is_prime(n)).take(count).collect()
}

pub type Fpx = Vec<u64>;

pub fn trim(mut a: Fpx) -> Fpx {
    while a.last() == Some(&0) {
        a.pop();
    }
    a
}

pub fn degree(a: &[u64]) -> Option<usize> {
    if a.is_empty() {
        None
    } else {
        Some(a.len() - 1)
    }
}

pub fn sub(a: &[u64], b: &[u64], p: u64) -> Fpx {
    let n = a.len().max(b.len());
    let out = (0..n)
        .map(|i| {
            let x = a.get(i).copied().unwrap_or(0);
            let y = b.get(i).copied().unwrap_or(0);
            (x + p - y) % p
        })
        .collect();
    trim(out)
}

pub fn mul(a: &[u64], b: &[u64], p: u64) -> Fpx {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![0u64; a.len() + b.len() - 1];
    for (i, &x) in a.iter().enumerate() {
        if x == 0 {
            continue;
        }
        for (j, &y) in b.iter().enumerate() {
            out[i + j] = (out[i + j] + x * y) % p;
        }
    }
    trim(out)
}

pub fn rem(a: &[u64], b: &[u64], p: u64) -> Fpx {
    divrem(a, b, p).1
}

pub fn divrem(a: &[u64], b: &[u64], p: u64) -> (Fpx, Fpx) {
    let db = degree(b).expect("division by zero polynomial");
    let inv = inv_mod(b[db], p);
    let mut r = a.to_vec();
    if r.len() <= db {
        return (Vec::new(), trim(r));
    }
    let mut q = vec![0u64; r.len() - db];
    for k in (db..r.len()).rev() {
        let c = r[k] * inv % p;
        q[k - db] = c;
        if c == 0 {
            continue;
        }
        for (j, &bj) in b.iter().enumerate() {
            let idx = k - db + j;
            r[idx] = (r[idx] + p - c * bj % p) % p;
        }
    }
    r.truncate(db);
    (trim(q), trim(r))
}

pub fn monic(a: &[u64], p: u64) -> Fpx {
    match a.last() {
        None => Vec::new(),
        Some(&lc) => {
            let inv = inv_mod(lc, p);
            a.iter().map(|&c| c * inv % p).collect()
        }
    }
}

pub fn gcd(a: &[u64], b: &[u64], p: u64) -> Fpx {
    let (mut x, mut y) = (trim(a.to_vec()), trim(b.to_vec()));
    while !y.is_empty() {
        let r = rem(&x, &y, p);
        x = y;
        y = r;
    }
    monic(&x, p)
}

pub fn derivative(a: &[u64], p: u64) -> Fpx {
    trim(a.iter().enumerate().skip(1).map(|(i, &c)| (i as u64 % p) * c % p).collect())
}

/// `base^e mod m`.
pub fn powmod_poly(base: &[u64], mut e: u64, m: &[u64], p: u64) -> Fpx {
    let mut acc: Fpx = vec![1];
    let mut b = rem(base, m, p);
    while e > 0 {
        if e & 1 == 1 {
            acc = rem(&mul(&acc, &b, p), m, p);
        }
        b = rem(&mul(&b, &b, p), m, p);
        e >>= 1;
    }
    acc
}

/// Interpolates the polynomial of degree `< values.len()` taking `values[i]`
/// at `i` (Newton divided differences).
pub fn interpolate(values: &[u64], p: u64) -> Fpx {
    let n = values.len();
    assert!((n as u64) < p);
    let mut coef = values.to_vec();
    for j in 1..n {
        for i in (j..n).rev() {
            let num = (coef[i] + p - coef[i - 1]) % p;
            coef[i] = num * inv_mod(j as u64, p) % p;
        }
    }
    // Horner on the Newton basis prod (x - k)
    let mut out: Fpx = Vec::new();
    for i in (0..n).rev() {
        // out = out * (x - i) + coef[i]
        let mut next = vec![0u64; out.len() + 1];
        for (k, &c) in out.iter().enumerate() {
            next[k + 1] = (next[k + 1] + c) % p;
            next[k] = (next[k] + p - c * (i as u64 % p) % p) % p;
        }
        next[0] = (next[0] + coef[i]) % p;
        out = trim(next);
    }
    out
}

/// Degrees of the irreducible factors of a squarefree polynomial of
/// positive degree (distinct-degree factorization), ascending.
pub fn factor_degrees_squarefree(f: &[u64], p: u64) -> Vec<usize> {
    let mut f = monic(f, p);
    let mut out = Vec::new();
    let x: Fpx = vec![0, 1];
    let mut h = x.clone();
    let mut d = 0usize;
    while degree(&f).unwrap_or(0) > 0 {
        d += 1;
        if 2 * d > degree(&f).unwrap() {
            out.push(degree(&f).unwrap());
            break;
        }
        h = powmod_poly(&h, p, &f, p);
        let g = gcd(&sub(&h, &x, p), &f, p);
        let dg = degree(&g).unwrap_or(0);
        if dg > 0 {
            out.extend(std::iter::repeat_n(d, dg / d));
            f = divrem(&f, &g, p).0;
            h = rem(&h, &f, p);
        }
    }
    out
}

pub fn is_squarefree(f: &[u64], p: u64) -> bool {
    let df = derivative(f, p);
    if df.is_empty() {
        return false;
    }
    degree(&gcd(f, &df, p)) == Some(0)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn interpolation_recovers_polynomial() {
        let p = 10007;
        let f: Fpx = vec![3, 0, 5, 1];
        let vals: Vec<u64> = (0..4u64)
            .map(|s| f.iter().rev().fold(0, |acc, &c| (acc * s + c) % p))
            .collect();
        assert_eq!(interpolate(&vals, p), f);
    }

    #[test]
    fn ddf_degrees() {
        let p = 7;
        // (x + 1)(x + 2)(x^2 + 1): x^2 + 1 is irreducible mod 7
        let f = mul(&mul(&[1, 1], &[2, 1], p), &[1, 0, 1], p);
        assert!(is_squarefree(&f, p));
        assert_eq!(factor_degrees_squarefree(&f, p), vec![1, 1, 2]);
        let g = mul(&[1, 1], &[1, 1], p);
        assert!(!is_squarefree(&g, p));
    }

    #[test]
    fn primes_above_ten_thousand() {
        assert_eq!(primes_from(10007, 3), vec![10007, 10009, 10037]);
    }
}
