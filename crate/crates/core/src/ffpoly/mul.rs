//! Coefficient-vector multiplication kernels.
//!
//! Schoolbook below [`KARATSUBA_THRESHOLD`], Karatsuba up to
//! [`NTT_THRESHOLD`], and a number-theoretic transform over up to three
//! word-sized NTT primes (recombined by CRT) beyond that. The NTT path is
//! only taken when the exact integer convolution is guaranteed to be smaller
//! than the product of the primes used. Matrix products get their own
//! transform-domain path so each entry is transformed once.

use super::field::PrimeField;

pub const KARATSUBA_THRESHOLD: usize = 32;
pub const NTT_THRESHOLD: usize = 160;
/// Lower crossover for matrix products, where each transform is reused.
pub const MAT_NTT_THRESHOLD: usize = 48;

const NTT_PRIMES: [(u64, u64); 3] = [(998_244_353, 3), (167_772_161, 3), (469_762_049, 3)];
const NTT_MAX_LOG: u32 = 23;

pub(crate) fn mul_coeffs(field: PrimeField, a: &[u64], b: &[u64]) -> Vec<u64> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let (short, long) = if a.len() <= b.len() { (a, b) } else { (b, a) };
    if short.len() < KARATSUBA_THRESHOLD {
        return schoolbook(field, short, long);
    }
    if short.len() >= NTT_THRESHOLD {
        if let Some(primes) = ntt_prime_count(field, short.len(), a.len() + b.len() - 1) {
            return ntt_mul(field, a, b, primes);
        }
    }
    unbalanced_karatsuba(field, short, long)
}

pub(crate) fn schoolbook(field: PrimeField, a: &[u64], b: &[u64]) -> Vec<u64> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let p = field.modulus();
    let mut acc = vec![0u128; a.len() + b.len() - 1];
    for (i, &x) in a.iter().enumerate() {
        if x == 0 {
            continue;
        }
        for (slot, &y) in acc[i..].iter_mut().zip(b) {
            *slot += (x * y) as u128;
        }
    }
    acc.into_iter().map(|v| (v % p as u128) as u64).collect()
}

fn unbalanced_karatsuba(field: PrimeField, short: &[u64], long: &[u64]) -> Vec<u64> {
    let n = short.len();
    let mut out = vec![0u64; short.len() + long.len() - 1];
    let mut padded = Vec::with_capacity(n);
    for (c, chunk) in long.chunks(n).enumerate() {
        padded.clear();
        padded.extend_from_slice(chunk);
        padded.resize(n, 0);
        let prod = karatsuba(field, short, &padded);
        let offset = c * n;
        for (k, v) in prod.into_iter().enumerate() {
            if offset + k < out.len() {
                out[offset + k] = field.add(out[offset + k], v);
            }
        }
    }
    out
}

// a.len() == b.len()
fn karatsuba(field: PrimeField, a: &[u64], b: &[u64]) -> Vec<u64> {
    let n = a.len();
    if n < KARATSUBA_THRESHOLD {
        return schoolbook(field, a, b);
    }
    let h = n / 2;
    let (a0, a1) = a.split_at(h);
    let (b0, b1) = b.split_at(h);
    let z0 = karatsuba(field, a0, b0);
    let z2 = karatsuba(field, a1, b1);
    let mut sa = a1.to_vec();
    let mut sb = b1.to_vec();
    for i in 0..h {
        sa[i] = field.add(sa[i], a0[i]);
        sb[i] = field.add(sb[i], b0[i]);
    }
    let mut z1 = karatsuba(field, &sa, &sb);
    for (i, v) in z0.iter().enumerate() {
        z1[i] = field.sub(z1[i], *v);
    }
    for (i, v) in z2.iter().enumerate() {
        z1[i] = field.sub(z1[i], *v);
    }
    let mut out = vec![0u64; 2 * n - 1];
    for (i, v) in z0.into_iter().enumerate() {
        out[i] = v;
    }
    for (i, v) in z2.into_iter().enumerate() {
        out[i + 2 * h] = field.add(out[i + 2 * h], v);
    }
    for (i, v) in z1.into_iter().enumerate() {
        if i + h < out.len() {
            out[i + h] = field.add(out[i + h], v);
        }
    }
    out
}

/// Number of NTT primes needed so that their product exceeds the largest
/// possible integer convolution coefficient, or `None` if the transform is
/// too long or three primes do not suffice.
fn ntt_prime_count(field: PrimeField, short_len: usize, out_len: usize) -> Option<usize> {
    let size = out_len.next_power_of_two();
    if size.trailing_zeros() > NTT_MAX_LOG {
        return None;
    }
    let pm1 = (field.modulus() - 1) as u128;
    let bound = pm1 * pm1 * short_len as u128;
    let mut prod: u128 = 1;
    for (k, &(q, _)) in NTT_PRIMES.iter().enumerate() {
        prod = prod.checked_mul(q as u128)?;
        if prod > bound {
            return Some(k + 1);
        }
    }
    None
}

fn pow_mod(mut a: u64, mut e: u64, m: u64) -> u64 {
    let mut r = 1u64;
    a %= m;
    while e > 0 {
        if e & 1 == 1 {
            r = r * a % m;
        }
        a = a * a % m;
        e >>= 1;
    }
    r
}

// The modulus is a const parameter so reductions compile to multiplications.
fn ntt<const M: u64>(a: &mut [u64], invert: bool, g: u64) {
    let n = a.len();
    let mut j = 0;
    for i in 1..n {
        let mut bit = n >> 1;
        while j & bit != 0 {
            j ^= bit;
            bit >>= 1;
        }
        j |= bit;
        if i < j {
            a.swap(i, j);
        }
    }
    // Powers of a primitive n-th root; stage `len` uses every (n/len)-th one.
    let mut w = pow_mod(g, (M - 1) / n as u64, M);
    if invert {
        w = pow_mod(w, M - 2, M);
    }
    let mut roots = Vec::with_capacity(n / 2);
    let mut t = 1u64;
    for _ in 0..n / 2 {
        roots.push(t);
        t = t * w % M;
    }
    let mut len = 2;
    while len <= n {
        let half = len / 2;
        let step = n / len;
        for chunk in a.chunks_mut(len) {
            let (lo, hi) = chunk.split_at_mut(half);
            for k in 0..half {
                let u = lo[k];
                let v = hi[k] * roots[k * step] % M;
                lo[k] = if u + v >= M { u + v - M } else { u + v };
                hi[k] = if u >= v { u - v } else { u + M - v };
            }
        }
        len <<= 1;
    }
    if invert {
        let n_inv = pow_mod(n as u64, M - 2, M);
        for x in a.iter_mut() {
            *x = *x * n_inv % M;
        }
    }
}

fn forward<const M: u64>(src: &[u64], g: u64, size: usize) -> Vec<u64> {
    let mut f = vec![0u64; size];
    for (d, s) in f.iter_mut().zip(src) {
        *d = s % M;
    }
    ntt::<M>(&mut f, false, g);
    f
}

fn ntt_convolve<const M: u64>(a: &[u64], b: &[u64], g: u64, size: usize) -> Vec<u64> {
    let mut fa = forward::<M>(a, g, size);
    let fb = forward::<M>(b, g, size);
    for (x, y) in fa.iter_mut().zip(&fb) {
        *x = *x * y % M;
    }
    ntt::<M>(&mut fa, true, g);
    fa
}

fn ntt_mul(field: PrimeField, a: &[u64], b: &[u64], primes: usize) -> Vec<u64> {
    let out_len = a.len() + b.len() - 1;
    let size = out_len.next_power_of_two();
    let residues: Vec<Vec<u64>> = (0..primes)
        .map(|i| {
            let g = NTT_PRIMES[i].1;
            match i {
                0 => ntt_convolve::<{ NTT_PRIMES[0].0 }>(a, b, g, size),
                1 => ntt_convolve::<{ NTT_PRIMES[1].0 }>(a, b, g, size),
                _ => ntt_convolve::<{ NTT_PRIMES[2].0 }>(a, b, g, size),
            }
        })
        .collect();
    let refs: Vec<&[u64]> = residues.iter().map(|r| &r[..out_len]).collect();
    Garner::new(field, primes).combine(&refs)
}

/// Mixed-radix CRT from residues modulo the first few NTT primes, reduced mod p.
struct Garner {
    p: u64,
    primes: usize,
    // inv[i] = (m_0 ... m_{i-1})^{-1} mod m_i, radix[i] = m_0 ... m_{i-1} mod p
    inv: [u64; 3],
    radix: [u64; 3],
}

impl Garner {
    fn new(field: PrimeField, primes: usize) -> Garner {
        let p = field.modulus();
        let mut inv = [0u64; 3];
        let mut radix = [0u64; 3];
        for i in 0..primes {
            let mi = NTT_PRIMES[i].0;
            let mut prod = 1u64;
            let mut r = 1u64;
            for j in 0..i {
                prod = prod * (NTT_PRIMES[j].0 % mi) % mi;
                r = r * (NTT_PRIMES[j].0 % p) % p;
            }
            inv[i] = pow_mod(prod, mi - 2, mi);
            radix[i] = r;
        }
        Garner { p, primes, inv, radix }
    }

    fn combine(&self, residues: &[&[u64]]) -> Vec<u64> {
        let p = self.p;
        if self.primes == 1 {
            return residues[0].iter().map(|&x| x % p).collect();
        }
        let len = residues[0].len();
        let mut out = Vec::with_capacity(len);
        for k in 0..len {
            let mut digits = [0u64; 3];
            for i in 0..self.primes {
                let mi = NTT_PRIMES[i].0;
                let mut partial = 0u64;
                let mut prod = 1u64;
                for j in 0..i {
                    partial = (partial + digits[j] % mi * prod) % mi;
                    prod = prod * (NTT_PRIMES[j].0 % mi) % mi;
                }
                let x = (residues[i][k] + mi - partial) % mi;
                digits[i] = x * self.inv[i] % mi;
            }
            let mut value = 0u64;
            for i in 0..self.primes {
                value = (value + digits[i] % p * self.radix[i]) % p;
            }
            out.push(value);
        }
        out
    }
}

/// Product of an `r x k` and a `k x c` matrix of coefficient vectors (row
/// major), transforming every entry once and accumulating in the transform
/// domain. `None` when the entries are too short for the transform to pay
/// off or no prime set bounds the accumulated sums.
pub(crate) fn mat_mul_coeffs(
    field: PrimeField,
    a: &[&[u64]],
    b: &[&[u64]],
    (r, k, c): (usize, usize, usize),
) -> Option<Vec<Vec<u64>>> {
    let la = a.iter().map(|e| e.len()).max().unwrap_or(0);
    let lb = b.iter().map(|e| e.len()).max().unwrap_or(0);
    if la.min(lb) < MAT_NTT_THRESHOLD || k == 0 {
        return None;
    }
    let out_len = la + lb - 1;
    let primes = ntt_prime_count(field, la.min(lb) * k, out_len)?;
    let size = out_len.next_power_of_two();
    let residues: Vec<Vec<Vec<u64>>> = (0..primes)
        .map(|i| {
            let g = NTT_PRIMES[i].1;
            match i {
                0 => mat_convolve::<{ NTT_PRIMES[0].0 }>(a, b, (r, k, c), g, size),
                1 => mat_convolve::<{ NTT_PRIMES[1].0 }>(a, b, (r, k, c), g, size),
                _ => mat_convolve::<{ NTT_PRIMES[2].0 }>(a, b, (r, k, c), g, size),
            }
        })
        .collect();
    let garner = Garner::new(field, primes);
    Some(
        (0..r * c)
            .map(|e| {
                let refs: Vec<&[u64]> = residues.iter().map(|res| &res[e][..out_len]).collect();
                garner.combine(&refs)
            })
            .collect(),
    )
}

fn mat_convolve<const M: u64>(
    a: &[&[u64]],
    b: &[&[u64]],
    (r, k, c): (usize, usize, usize),
    g: u64,
    size: usize,
) -> Vec<Vec<u64>> {
    let fwd = |e: &&[u64]| if e.is_empty() { None } else { Some(forward::<M>(e, g, size)) };
    let fa: Vec<Option<Vec<u64>>> = a.iter().map(fwd).collect();
    let fb: Vec<Option<Vec<u64>>> = b.iter().map(fwd).collect();
    let mut out = Vec::with_capacity(r * c);
    for i in 0..r {
        for j in 0..c {
            let mut acc = vec![0u64; size];
            let mut any = false;
            for t in 0..k {
                if let (Some(x), Some(y)) = (&fa[i * k + t], &fb[t * c + j]) {
                    any = true;
                    for ((s, &u), &v) in acc.iter_mut().zip(x).zip(y) {
                        *s = (*s + u * v % M) % M;
                    }
                }
            }
            if any {
                ntt::<M>(&mut acc, true, g);
            }
            out.push(acc);
        }
    }
    out
}
