//! Dirichlet characters with exact root-of-unity values.
//!
//! A character mod q stores, for each residue coprime to q, the exponent e
//! of its value exp(2πi·e/den) over a shared denominator `den`. Products and
//! conjugates act on exponents, so they are exact; complex values are only
//! materialized on demand.

use num_complex::Complex64;

use super::{factorize, gcd, lcm};
use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct DirichletCharacter {
    modulus: u64,
    denominator: u64,
    /// Indexed by residue mod `modulus`; `None` where gcd(n, q) > 1.
    exponents: Vec<Option<u64>>,
}

/// exp(2πi·num/den), exact at multiples of a quarter turn.
pub fn root_of_unity(num: u64, den: u64) -> Complex64 {
    let num = num % den;
    if (4 * num) % den == 0 {
        return match 4 * num / den {
            0 => Complex64::new(1.0, 0.0),
            1 => Complex64::new(0.0, 1.0),
            2 => Complex64::new(-1.0, 0.0),
            _ => Complex64::new(0.0, -1.0),
        };
    }
    let angle = std::f64::consts::TAU * (num as f64) / (den as f64);
    Complex64::from_polar(1.0, angle)
}

impl DirichletCharacter {
    pub fn modulus(&self) -> u64 {
        self.modulus
    }

    pub fn denominator(&self) -> u64 {
        self.denominator
    }

    /// Angle of χ(n) as a fraction num/den of a full turn, or `None` if χ(n) = 0.
    pub fn angle(&self, n: i64) -> Option<(u64, u64)> {
        let r = n.rem_euclid(self.modulus as i64) as usize;
        self.exponents[r].map(|e| (e, self.denominator))
    }

    pub fn value(&self, n: i64) -> Complex64 {
        match self.angle(n) {
            Some((e, d)) => root_of_unity(e, d),
            None => Complex64::new(0.0, 0.0),
        }
    }

    /// χ(n)^k, computed on exponents.
    pub fn value_pow(&self, n: i64, k: u64) -> Complex64 {
        match self.angle(n) {
            Some((e, d)) => root_of_unity((e % d) * (k % d) % d, d),
            None => Complex64::new(0.0, 0.0),
        }
    }

    /// χ(−1) ∈ {+1, −1}.
    pub fn parity(&self) -> i8 {
        match self.angle(-1) {
            Some((0, _)) => 1,
            Some((e, d)) if 2 * e == d => -1,
            _ => unreachable!("χ(−1) is ±1"),
        }
    }

    pub fn is_real(&self) -> bool {
        self.exponents
            .iter()
            .flatten()
            .all(|&e| (2 * e) % self.denominator == 0)
    }

    pub fn is_principal(&self) -> bool {
        self.exponents.iter().flatten().all(|&e| e == 0)
    }

    pub fn conj(&self) -> Self {
        let d = self.denominator;
        Self {
            modulus: self.modulus,
            denominator: d,
            exponents: self
                .exponents
                .iter()
                .map(|e| e.map(|e| (d - e % d) % d))
                .collect(),
        }
    }

    /// Pointwise product, a character modulo lcm of the two moduli.
    pub fn product(&self, other: &Self) -> Self {
        let modulus = lcm(self.modulus, other.modulus);
        let den = lcm(self.denominator, other.denominator);
        let (sa, sb) = (den / self.denominator, den / other.denominator);
        let exponents = (0..modulus as i64)
            .map(|n| match (self.angle(n), other.angle(n)) {
                (Some((a, _)), Some((b, _))) => Some((a * sa + b * sb) % den),
                _ => None,
            })
            .collect();
        Self {
            modulus,
            denominator: den,
            exponents,
        }
        .reduced()
    }

    /// Same character with the smallest possible angle denominator.
    fn reduced(mut self) -> Self {
        let g = self
            .exponents
            .iter()
            .flatten()
            .fold(self.denominator, |g, &e| gcd(g, e));
        if g > 1 {
            self.denominator /= g;
            for e in self.exponents.iter_mut().flatten() {
                *e /= g;
            }
        }
        self
    }

    /// Conductor: the modulus of the primitive character inducing χ.
    pub fn conductor(&self) -> u64 {
        let q = self.modulus;
        let mut divisors: Vec<u64> = (1..=q).filter(|d| q % d == 0).collect();
        divisors.sort_unstable();
        for d in divisors {
            let trivial_on_kernel = (0..q)
                .filter(|a| a % d == 1 % d)
                .all(|a| matches!(self.exponents[a as usize], Some(0) | None));
            if trivial_on_kernel {
                return d;
            }
        }
        q
    }

    /// Value of the primitive character inducing χ, at n.
    pub fn primitive_value(&self, n: i64) -> Complex64 {
        let f = self.conductor() as i64;
        if gcd(n.unsigned_abs(), f as u64) != 1 {
            return Complex64::new(0.0, 0.0);
        }
        let q = self.modulus as i64;
        let mut m = n.rem_euclid(f);
        // Lift n mod f to a residue coprime to q; χ is constant on such lifts.
        for _ in 0..q.max(1) {
            if gcd(m.rem_euclid(q) as u64, q as u64) == 1 {
                return self.value(m);
            }
            m += f;
        }
        unreachable!("a unit lift exists by CRT")
    }

    pub fn same_values(&self, other: &Self) -> bool {
        self.modulus == other.modulus && self.clone().reduced() == other.clone().reduced()
    }
}

/// One cyclic factor of (ℤ/qℤ)^×: discrete-log table mod `modulus` for a
/// generator of order `order`.
struct CyclicFactor {
    modulus: u64,
    order: u64,
    log: Vec<Option<u64>>,
}

impl CyclicFactor {
    fn from_generator(modulus: u64, generator: u64, order: u64) -> Self {
        let mut log = vec![None; modulus as usize];
        let mut x = 1 % modulus;
        for e in 0..order {
            log[x as usize] = Some(e);
            x = x * generator % modulus;
        }
        Self { modulus, order, log }
    }
}

fn primitive_root_mod_prime(p: u64) -> u64 {
    let factors = factorize(p - 1);
    (2..p)
        .find(|&g| {
            factors
                .iter()
                .all(|&(r, _)| pow_mod(g, (p - 1) / r, p) != 1)
        })
        .unwrap_or(1)
}

fn pow_mod(mut b: u64, mut e: u64, m: u64) -> u64 {
    let mut r = 1 % m;
    b %= m;
    while e > 0 {
        if e & 1 == 1 {
            r = r * b % m;
        }
        b = b * b % m;
        e >>= 1;
    }
    r
}

/// Generators of (ℤ/qℤ)^× as independent cyclic factors, each paired with
/// a reduction of residues mod q to that factor's prime-power modulus.
fn cyclic_factors(q: u64) -> Vec<CyclicFactor> {
    let mut out = Vec::new();
    for (p, a) in factorize(q) {
        let pa = p.pow(a);
        if p == 2 {
            match a {
                1 => {}
                2 => out.push(CyclicFactor::from_generator(4, 3, 2)),
                _ => {
                    // (ℤ/2^a)^× = ⟨−1⟩ × ⟨5⟩; log the −1 component separately.
                    let mut minus = vec![None; pa as usize];
                    let mut five = vec![None; pa as usize];
                    let order5 = pa / 4;
                    let mut x = 1u64;
                    for e in 0..order5 {
                        minus[x as usize] = Some(0);
                        five[x as usize] = Some(e);
                        let y = pa - x;
                        minus[y as usize] = Some(1);
                        five[y as usize] = Some(e);
                        x = x * 5 % pa;
                    }
                    out.push(CyclicFactor { modulus: pa, order: 2, log: minus });
                    out.push(CyclicFactor { modulus: pa, order: order5, log: five });
                }
            }
        } else {
            let mut g = primitive_root_mod_prime(p);
            if a > 1 && pow_mod(g, p - 1, p * p) == 1 {
                g += p;
            }
            out.push(CyclicFactor::from_generator(pa, g, pa / p * (p - 1)));
        }
    }
    out
}

/// All φ(q) Dirichlet characters mod q, principal character first.
///
/// Characters are indexed in mixed radix over the cyclic factors of
/// (ℤ/qℤ)^×: odd prime powers by a primitive root, 4 by ⟨−1⟩, and 2^a for
/// a ≥ 3 by ⟨−1⟩ × ⟨5⟩.
pub fn character_group(q: u64) -> Vec<DirichletCharacter> {
    assert!(q >= 1, "modulus must be positive");
    let factors = cyclic_factors(q);
    let den = factors.iter().fold(1, |d, f| lcm(d, f.order));
    let logs: Vec<Option<Vec<u64>>> = (0..q)
        .map(|n| {
            if gcd(n, q) != 1 {
                return None;
            }
            factors
                .iter()
                .map(|f| f.log[(n % f.modulus) as usize])
                .collect()
        })
        .collect();
    let count: u64 = factors.iter().map(|f| f.order).product();
    let mut out = Vec::with_capacity(count as usize);
    for idx in 0..count {
        let mut digits = Vec::with_capacity(factors.len());
        let mut rest = idx;
        for f in &factors {
            digits.push(rest % f.order);
            rest /= f.order;
        }
        let exponents = logs
            .iter()
            .map(|l| {
                l.as_ref().map(|l| {
                    factors
                        .iter()
                        .zip(&digits)
                        .zip(l)
                        .map(|((f, &j), &e)| j * e % f.order * (den / f.order))
                        .sum::<u64>()
                        % den
                })
            })
            .collect();
        out.push(
            DirichletCharacter {
                modulus: q,
                denominator: den,
                exponents,
            }
            .reduced(),
        );
    }
    out
}

/// Character of ℚ(√D)/ℚ: n ↦ (D/n), as a character mod |D|.
pub fn kronecker_character(disc: i64) -> Result<DirichletCharacter> {
    let q = disc.unsigned_abs();
    if q < 2 {
        return Err(Error::Domain(format!("{disc} is not a discriminant")));
    }
    let exponents = (0..q)
        .map(|n| match super::kronecker_symbol(disc, n) {
            0 => None,
            1 => Some(0),
            _ => Some(1),
        })
        .collect();
    let chi = DirichletCharacter {
        modulus: q,
        denominator: 2,
        exponents,
    };
    let known = character_group(q).into_iter().any(|c| c.same_values(&chi));
    if !known {
        return Err(Error::Domain(format!("(D/·) for D = {disc} is not a character mod {q}")));
    }
    Ok(chi.reduced())
}
