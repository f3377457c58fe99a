//! Arithmetic and linear algebra over a prime field `F_p`, `p < 2³²`.

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

pub fn pow_mod(base: u64, mut exp: u64, p: u64) -> u64 {
    let mut acc = 1 % p;
    let mut b = base % p;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = acc * b % p;
        }
        b = b * b % p;
        exp >>= 1;
    }
    acc
}

/// Inverse of a nonzero residue (Fermat).
pub fn inv_mod(a: u64, p: u64) -> u64 {
    debug_assert!(!a.is_multiple_of(p), "inverse of zero");
    pow_mod(a, p - 2, p)
}

fn prime_factors(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            out.push(d);
            while n.is_multiple_of(d) {
                n /= d;
            }
        }
        d += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

/// Smallest generator of `F_p^×`.
pub fn primitive_root(p: u64) -> u64 {
    if p == 2 {
        return 1;
    }
    let factors = prime_factors(p - 1);
    (2..p)
        .find(|&g| factors.iter().all(|&q| pow_mod(g, (p - 1) / q, p) != 1))
        .expect("prime fields have primitive roots")
}

/// Multiplicative order of a nonzero residue.
pub fn order_mod(a: u64, p: u64) -> u64 {
    let mut order = p - 1;
    for q in prime_factors(p - 1) {
        while order.is_multiple_of(q) && pow_mod(a, order / q, p) == 1 {
            order /= q;
        }
    }
    order
}

pub type Matrix = Vec<Vec<u64>>;

/// Row-reduces in place; returns pivot columns.
pub fn rref(m: &mut Matrix, p: u64) -> Vec<usize> {
    let rows = m.len();
    let cols = m.first().map_or(0, Vec::len);
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(sel) = (r..rows).find(|&i| m[i][c] != 0) else {
            continue;
        };
        m.swap(r, sel);
        let inv = inv_mod(m[r][c], p);
        for x in m[r].iter_mut() {
            *x = *x * inv % p;
        }
        for i in 0..rows {
            if i != r && m[i][c] != 0 {
                let f = m[i][c];
                for j in 0..cols {
                    m[i][j] = (m[i][j] + (p - f) * m[r][j]) % p;
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    m.truncate(r);
    pivots
}

/// Basis of `{x : A x = 0}` for a `rows × cols` matrix.
pub fn nullspace(a: &Matrix, cols: usize, p: u64) -> Vec<Vec<u64>> {
    let mut m = a.clone();
    let pivots = rref(&mut m, p);
    let free: Vec<usize> = (0..cols).filter(|c| !pivots.contains(c)).collect();
    free.iter()
        .map(|&f| {
            let mut v = vec![0u64; cols];
            v[f] = 1;
            for (r, &pc) in pivots.iter().enumerate() {
                v[pc] = (p - m[r][f]) % p;
            }
            v
        })
        .collect()
}

/// Characteristic polynomial `det(xI − M)`, coefficients low to high, via
/// reduction to Hessenberg form.
pub fn charpoly(m: &Matrix, p: u64) -> Vec<u64> {
    let n = m.len();
    let mut h = m.clone();
    for k in 1..n.saturating_sub(1) {
        let Some(i) = (k..n).find(|&i| h[i][k - 1] != 0) else {
            continue;
        };
        if i != k {
            h.swap(i, k);
            for row in h.iter_mut() {
                row.swap(i, k);
            }
        }
        let tinv = inv_mod(h[k][k - 1], p);
        for i in k + 1..n {
            let u = h[i][k - 1] * tinv % p;
            if u == 0 {
                continue;
            }
            for j in 0..n {
                h[i][j] = (h[i][j] + (p - u) * h[k][j]) % p;
            }
            for row in h.iter_mut() {
                row[k] = (row[k] + u * row[i]) % p;
            }
        }
    }

    let mut polys: Vec<Vec<u64>> = vec![vec![1]];
    for k in 1..=n {
        // (x − h[k-1][k-1]) · p_{k-1}
        let prev = &polys[k - 1];
        let mut next = vec![0u64; k + 1];
        for (j, &c) in prev.iter().enumerate() {
            next[j + 1] = (next[j + 1] + c) % p;
            next[j] = (next[j] + (p - h[k - 1][k - 1]) * c) % p;
        }
        let mut t = 1u64;
        for i in 1..k {
            t = t * h[k - i][k - i - 1] % p;
            let f = t * h[k - i - 1][k - 1] % p;
            if f == 0 {
                continue;
            }
            for (j, &c) in polys[k - i - 1].iter().enumerate() {
                next[j] = (next[j] + (p - f) * c) % p;
            }
        }
        polys.push(next);
    }
    polys.pop().expect("nonempty")
}

pub fn eval_poly(poly: &[u64], x: u64, p: u64) -> u64 {
    poly.iter().rev().fold(0, |acc, &c| (acc * x + c) % p)
}

/// All roots in `F_p` of a nonzero polynomial, by exhaustive scan.
pub fn roots(poly: &[u64], p: u64) -> Vec<u64> {
    (0..p).filter(|&x| eval_poly(poly, x, p) == 0).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn primes_and_roots() {
        assert!(is_prime(31) && is_prime(1021) && !is_prime(1) && !is_prime(91));
        assert_eq!(primitive_root(7), 3);
        assert_eq!(primitive_root(31), 3);
        assert_eq!(order_mod(2, 7), 3);
        assert_eq!(inv_mod(3, 7), 5);
    }

    #[test]
    fn charpoly_matches_determinant_expansion() {
        let p = 101;
        // [[2,1],[3,4]]: x² − 6x + 5
        assert_eq!(
            charpoly(&vec![vec![2, 1], vec![3, 4]], p),
            vec![5, 101 - 6, 1]
        );
        // companion-like 3×3 with known roots 1, 2, 3
        let m = vec![vec![0, 0, 6], vec![1, 0, 101 - 11], vec![0, 1, 6]];
        let cp = charpoly(&m, p);
        assert_eq!(roots(&cp, p), vec![1, 2, 3]);
        // a matrix that needs row swaps during Hessenberg reduction
        let m = vec![vec![1, 2, 3], vec![0, 4, 5], vec![7, 0, 6]];
        let cp = charpoly(&m, p);
        for x in 0..p {
            let det = {
                let a: Vec<Vec<i64>> = (0..3)
                    .map(|i| {
                        (0..3)
                            .map(|j| {
                                if i == j {
                                    x as i64 - m[i][j] as i64
                                } else {
                                    -(m[i][j] as i64)
                                }
                            })
                            .collect()
                    })
                    .collect();
                a[0][0] * (a[1][1] * a[2][2] - a[1][2] * a[2][1])
                    - a[0][1] * (a[1][0] * a[2][2] - a[1][2] * a[2][0])
                    + a[0][2] * (a[1][0] * a[2][1] - a[1][1] * a[2][0])
            };
            assert_eq!(eval_poly(&cp, x, p), det.rem_euclid(p as i64) as u64);
        }
    }

    #[test]
    fn nullspace_dimension() {
        let p = 7;
        let a = vec![vec![1, 2, 3], vec![2, 4, 6]];
        let ns = nullspace(&a, 3, p);
        assert_eq!(ns.len(), 2);
        for v in ns {
            for row in &a {
                let dot: u64 = row.iter().zip(&v).map(|(x, y)| x * y).sum();
                assert_eq!(dot % p, 0);
            }
        }
    }
}
