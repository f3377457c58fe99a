/// The finite field `F_q`, `q = p^f`, built from the lexicographically least
/// irreducible monic polynomial of degree `f` over `F_p`.
///
/// Elements are encoded as integers `Σ c_i p^i` where `c_i` is the
/// coefficient of `x^i`.
#[derive(Clone, Debug)]
pub struct FiniteField {
    p: u32,
    f: u32,
    q: u32,
    modulus: Vec<u32>,
    add: Vec<u32>,
    mul: Vec<u32>,
    generator: u32,
    // exp[i] = ν^i, log[ν^i] = i
    exp: Vec<u32>,
    log: Vec<u32>,
}

fn digits(mut x: u32, p: u32, len: usize) -> Vec<u32> {
    let mut out = vec![0; len];
    for d in out.iter_mut() {
        *d = x % p;
        x /= p;
    }
    out
}

fn encode(coeffs: &[u32], p: u32) -> u32 {
    coeffs.iter().rev().fold(0, |acc, &c| acc * p + c)
}

// Remainder of a by monic b over F_p; coefficients low to high.
fn poly_rem(a: &[u32], b: &[u32], p: u32) -> Vec<u32> {
    let mut r = a.to_vec();
    let db = b.len() - 1;
    while r.len() > db {
        let lead = *r.last().expect("nonempty");
        let shift = r.len() - 1 - db;
        if lead != 0 {
            for (j, &c) in b.iter().enumerate() {
                r[shift + j] = (r[shift + j] + p - lead * c % p) % p;
            }
        }
        r.pop();
    }
    r
}

fn is_irreducible(modulus: &[u32], p: u32) -> bool {
    let f = modulus.len() - 1;
    for deg in 1..=f / 2 {
        for t in 0..p.pow(deg as u32) {
            let mut g = digits(t, p, deg);
            g.push(1);
            if poly_rem(modulus, &g, p).iter().all(|&c| c == 0) {
                return false;
            }
        }
    }
    true
}

/// `(p, f)` with `q = p^f`, if `q` is a prime power.
pub fn prime_power(q: u32) -> Option<(u32, u32)> {
    if q < 2 {
        return None;
    }
    let p = (2..=q).find(|d| q.is_multiple_of(*d))?;
    let mut rest = q;
    let mut f = 0;
    while rest.is_multiple_of(p) {
        rest /= p;
        f += 1;
    }
    (rest == 1).then_some((p, f))
}

impl FiniteField {
    pub fn new(q: u32) -> Option<Self> {
        let (p, f) = prime_power(q)?;
        let fu = f as usize;
        let modulus = (0..q)
            .map(|t| {
                let mut m = digits(t, p, fu);
                m.push(1);
                m
            })
            .find(|m| is_irreducible(m, p))
            .expect("irreducible polynomials exist in every degree");

        let qu = q as usize;
        let mut add = vec![0u32; qu * qu];
        let mut mul = vec![0u32; qu * qu];
        for a in 0..q {
            let da = digits(a, p, fu);
            for b in 0..q {
                let db = digits(b, p, fu);
                let sum: Vec<u32> = da.iter().zip(&db).map(|(x, y)| (x + y) % p).collect();
                add[(a * q + b) as usize] = encode(&sum, p);
                let mut prod = vec![0u32; 2 * fu - 1];
                for (i, x) in da.iter().enumerate() {
                    for (j, y) in db.iter().enumerate() {
                        prod[i + j] = (prod[i + j] + x * y) % p;
                    }
                }
                let mut r = poly_rem(&prod, &modulus, p);
                r.resize(fu, 0);
                mul[(a * q + b) as usize] = encode(&r, p);
            }
        }

        let mut field = Self {
            p,
            f,
            q,
            modulus,
            add,
            mul,
            generator: 0,
            exp: Vec::new(),
            log: vec![0; qu],
        };
        let generator = (1..q)
            .find(|&g| field.multiplicative_order(g) == q - 1)
            .expect("multiplicative group is cyclic");
        field.generator = generator;
        let mut x = 1;
        for i in 0..q - 1 {
            field.exp.push(x);
            field.log[x as usize] = i;
            x = field.mul(x, generator);
        }
        Some(field)
    }

    pub fn characteristic(&self) -> u32 {
        self.p
    }

    pub fn degree(&self) -> u32 {
        self.f
    }

    pub fn order(&self) -> u32 {
        self.q
    }

    /// Modulus coefficients, constant term first, monic.
    pub fn modulus(&self) -> &[u32] {
        &self.modulus
    }

    /// The smallest (by encoding) generator of the multiplicative group.
    pub fn generator(&self) -> u32 {
        self.generator
    }

    pub fn add(&self, a: u32, b: u32) -> u32 {
        self.add[(a * self.q + b) as usize]
    }

    pub fn mul(&self, a: u32, b: u32) -> u32 {
        self.mul[(a * self.q + b) as usize]
    }

    pub fn neg(&self, a: u32) -> u32 {
        (0..self.q)
            .find(|&b| self.add(a, b) == 0)
            .expect("additive inverse")
    }

    pub fn inv(&self, a: u32) -> u32 {
        assert!(a != 0, "inverse of zero");
        self.exp[((self.q - 1 - self.log[a as usize]) % (self.q - 1)) as usize]
    }

    pub fn pow(&self, a: u32, e: u64) -> u32 {
        if a == 0 {
            return u32::from(e == 0);
        }
        let l = self.log[a as usize] as u64 * e % (self.q as u64 - 1);
        self.exp[l as usize]
    }

    pub fn frobenius(&self, a: u32) -> u32 {
        self.pow(a, self.p as u64)
    }

    /// `ν^i` for the fixed generator `ν`.
    pub fn generator_power(&self, i: u32) -> u32 {
        self.exp[(i % (self.q - 1)) as usize]
    }

    /// Exponent `i` with `ν^i = a`, for nonzero `a`.
    pub fn log(&self, a: u32) -> u32 {
        assert!(a != 0, "log of zero");
        self.log[a as usize]
    }

    fn multiplicative_order(&self, g: u32) -> u32 {
        let mut x = g;
        let mut k = 1;
        while x != 1 {
            x = self.mul(x, g);
            k += 1;
            if k > self.q {
                return 0;
            }
        }
        k
    }

    pub fn is_square(&self, a: u32) -> bool {
        a == 0 || self.p == 2 || self.log(a).is_multiple_of(2)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn prime_powers() {
        assert_eq!(prime_power(16), Some((2, 4)));
        assert_eq!(prime_power(9), Some((3, 2)));
        assert_eq!(prime_power(7), Some((7, 1)));
        assert_eq!(prime_power(12), None);
        assert_eq!(prime_power(1), None);
    }

    #[test]
    fn least_irreducible_moduli() {
        assert_eq!(FiniteField::new(4).unwrap().modulus(), &[1, 1, 1]);
        assert_eq!(FiniteField::new(8).unwrap().modulus(), &[1, 1, 0, 1]);
        assert_eq!(FiniteField::new(9).unwrap().modulus(), &[1, 0, 1]);
        assert_eq!(FiniteField::new(16).unwrap().modulus(), &[1, 1, 0, 0, 1]);
        assert_eq!(FiniteField::new(5).unwrap().modulus(), &[0, 1]);
    }

    #[test]
    fn field_axioms_hold_exhaustively() {
        for q in [4, 5, 7, 8, 9, 16, 25, 27] {
            let f = FiniteField::new(q).unwrap();
            for a in 0..q {
                assert_eq!(f.add(a, f.neg(a)), 0);
                if a != 0 {
                    assert_eq!(f.mul(a, f.inv(a)), 1);
                }
                for b in 0..q {
                    assert_eq!(f.mul(a, b), f.mul(b, a));
                    for c in 0..q {
                        assert_eq!(f.mul(a, f.add(b, c)), f.add(f.mul(a, b), f.mul(a, c)));
                    }
                }
            }
            let g = f.generator();
            let powers: std::collections::BTreeSet<u32> =
                (0..q - 1).map(|i| f.generator_power(i)).collect();
            assert_eq!(powers.len() as u32, q - 1);
            assert_eq!(f.pow(g, (q - 1) as u64), 1);
            // Frobenius is additive
            for a in 0..q {
                for b in 0..q {
                    assert_eq!(
                        f.frobenius(f.add(a, b)),
                        f.add(f.frobenius(a), f.frobenius(b))
                    );
                }
            }
        }
    }
}
