//! Ground arithmetic over ℚ and quadratic fields: prime ideals, Kronecker
//! symbols, Dirichlet character groups and the prime-divisor count ω.

mod characters;

pub use characters::{character_group, kronecker_character, root_of_unity, DirichletCharacter};

use crate::archimedean::PlaceKind;
use crate::error::{Error, Result};

/// ℚ or a quadratic field ℚ(√d) with `d` squarefree.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum NumberField {
    Rational,
    Quadratic(i64),
}

impl NumberField {
    pub fn quadratic(d: i64) -> Result<Self> {
        if d == 0 || d == 1 {
            return Err(Error::Domain(format!("ℚ(√{d}) is not a quadratic field")));
        }
        if !is_squarefree(d.unsigned_abs()) {
            return Err(Error::Domain(format!("{d} is not squarefree")));
        }
        Ok(NumberField::Quadratic(d))
    }

    /// Field discriminant D_F (signed); 1 for ℚ.
    pub fn discriminant(&self) -> i64 {
        match *self {
            NumberField::Rational => 1,
            NumberField::Quadratic(d) => {
                if d.rem_euclid(4) == 1 {
                    d
                } else {
                    4 * d
                }
            }
        }
    }

    pub fn abs_discriminant(&self) -> u64 {
        self.discriminant().unsigned_abs()
    }

    pub fn degree(&self) -> u32 {
        match self {
            NumberField::Rational => 1,
            NumberField::Quadratic(_) => 2,
        }
    }

    /// Archimedean places, real places first.
    pub fn places(&self) -> Vec<PlaceKind> {
        match *self {
            NumberField::Rational => vec![PlaceKind::Real],
            NumberField::Quadratic(d) if d > 0 => vec![PlaceKind::Real, PlaceKind::Real],
            NumberField::Quadratic(_) => vec![PlaceKind::Complex],
        }
    }
}

/// Identifies a prime ideal: the rational prime below it and, for split
/// primes, which of the two conjugate ideals (0 or 1).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct IdealKey {
    pub prime: u64,
    pub index: u8,
}

impl IdealKey {
    pub fn new(prime: u64, index: u8) -> Self {
        Self { prime, index }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct PrimeIdeal {
    pub residue_prime: u64,
    pub norm: u64,
    pub residue_degree: u8,
    pub ramified: bool,
    pub index: u8,
}

impl PrimeIdeal {
    pub fn key(&self) -> IdealKey {
        IdealKey::new(self.residue_prime, self.index)
    }

    pub fn log_norm(&self) -> f64 {
        (self.norm as f64).ln()
    }

    /// Ordering key: norm, then residue prime, then conjugate index.
    fn sort_key(&self) -> (u64, u64, u8) {
        (self.norm, self.residue_prime, self.index)
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct PrimeIdealTable {
    pub field: NumberField,
    pub entries: Vec<PrimeIdeal>,
}

impl PrimeIdealTable {
    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn iter(&self) -> std::slice::Iter<'_, PrimeIdeal> {
        self.entries.iter()
    }
}

/// All prime ideals of `field` with norm at most `x`, sorted by norm.
pub fn prime_ideals_up_to(field: NumberField, x: f64) -> Result<PrimeIdealTable> {
    if !(x >= 2.0) || !x.is_finite() {
        return Err(Error::Domain(format!("cutoff X = {x} must be a finite number ≥ 2")));
    }
    let limit = x.floor() as u64;
    let mut entries = Vec::new();
    match field {
        NumberField::Rational => {
            for p in primes_up_to(limit) {
                entries.push(PrimeIdeal {
                    residue_prime: p,
                    norm: p,
                    residue_degree: 1,
                    ramified: false,
                    index: 0,
                });
            }
        }
        NumberField::Quadratic(_) => {
            let disc = field.discriminant();
            for p in primes_up_to(limit) {
                match kronecker_symbol(disc, p) {
                    0 => entries.push(PrimeIdeal {
                        residue_prime: p,
                        norm: p,
                        residue_degree: 1,
                        ramified: true,
                        index: 0,
                    }),
                    1 => {
                        for index in 0..2 {
                            entries.push(PrimeIdeal {
                                residue_prime: p,
                                norm: p,
                                residue_degree: 1,
                                ramified: false,
                                index,
                            });
                        }
                    }
                    _ => {
                        if let Some(norm) = p.checked_mul(p).filter(|&n| n <= limit) {
                            entries.push(PrimeIdeal {
                                residue_prime: p,
                                norm,
                                residue_degree: 2,
                                ramified: false,
                                index: 0,
                            });
                        }
                    }
                }
            }
        }
    }
    entries.sort_by_key(PrimeIdeal::sort_key);
    Ok(PrimeIdealTable { field, entries })
}

/// Looks up the prime ideal of `field` with the given key.
pub fn prime_ideal(field: NumberField, key: IdealKey) -> Result<PrimeIdeal> {
    let p = key.prime;
    if !is_prime(p) {
        return Err(Error::Domain(format!("{p} is not prime")));
    }
    let ideal = |norm, residue_degree, ramified| PrimeIdeal {
        residue_prime: p,
        norm,
        residue_degree,
        ramified,
        index: key.index,
    };
    let found = match field {
        NumberField::Rational => (key.index == 0).then(|| ideal(p, 1, false)),
        NumberField::Quadratic(_) => match kronecker_symbol(field.discriminant(), p) {
            0 => (key.index == 0).then(|| ideal(p, 1, true)),
            1 => (key.index < 2).then(|| ideal(p, 1, false)),
            _ => (key.index == 0).then(|| ideal(p * p, 2, false)),
        },
    };
    found.ok_or(Error::Domain(format!(
        "no prime ideal above {p} with index {}",
        key.index
    )))
}

/// Kronecker symbol (D/n), the completely multiplicative extension of the
/// Jacobi symbol to all n ≥ 1.
pub fn kronecker_symbol(d: i64, n: u64) -> i8 {
    if n == 0 {
        return if d.unsigned_abs() == 1 { 1 } else { 0 };
    }
    let mut n = n;
    let mut result: i8 = 1;
    let twos = n.trailing_zeros();
    if twos > 0 {
        if d % 2 == 0 {
            return 0;
        }
        n >>= twos;
        if twos % 2 == 1 && matches!(d.rem_euclid(8), 3 | 5) {
            result = -result;
        }
    }
    if n == 1 {
        return result;
    }
    let a = d.rem_euclid(n as i64) as u64;
    result * jacobi(a, n)
}

/// Jacobi symbol (a/n) for odd n.
fn jacobi(mut a: u64, mut n: u64) -> i8 {
    debug_assert!(n % 2 == 1);
    let mut result = 1i8;
    a %= n;
    while a != 0 {
        while a % 2 == 0 {
            a /= 2;
            if matches!(n % 8, 3 | 5) {
                result = -result;
            }
        }
        std::mem::swap(&mut a, &mut n);
        if a % 4 == 3 && n % 4 == 3 {
            result = -result;
        }
        a %= n;
    }
    if n == 1 {
        result
    } else {
        0
    }
}

/// Number of distinct prime divisors.
pub fn omega(n: u64) -> u32 {
    factorize(n).len() as u32
}

/// Prime factorization by trial division, as (prime, exponent) ascending.
pub fn factorize(mut n: u64) -> Vec<(u64, u32)> {
    let mut out = Vec::new();
    let mut p = 2u64;
    while p.saturating_mul(p) <= n {
        if n % p == 0 {
            let mut e = 0;
            while n % p == 0 {
                n /= p;
                e += 1;
            }
            out.push((p, e));
        }
        p += if p == 2 { 1 } else { 2 };
    }
    if n > 1 {
        out.push((n, 1));
    }
    out
}

pub fn is_prime(n: u64) -> bool {
    n >= 2 && factorize(n).first() == Some(&(n, 1))
}

fn is_squarefree(n: u64) -> bool {
    factorize(n).iter().all(|&(_, e)| e == 1)
}

/// Sieve of Eratosthenes.
pub fn primes_up_to(limit: u64) -> Vec<u64> {
    if limit < 2 {
        return Vec::new();
    }
    let n = limit as usize;
    let mut composite = vec![false; n + 1];
    let mut i = 2usize;
    while i * i <= n {
        if !composite[i] {
            let mut j = i * i;
            while j <= n {
                composite[j] = true;
                j += i;
            }
        }
        i += 1;
    }
    (2..=n).filter(|&k| !composite[k]).map(|k| k as u64).collect()
}

pub fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

pub fn lcm(a: u64, b: u64) -> u64 {
    a / gcd(a, b) * b
}

#[cfg(test)]
mod tests {
    use super::*;

    fn norms(t: &PrimeIdealTable) -> Vec<u64> {
        t.entries.iter().map(|e| e.norm).collect()
    }

    #[test]
    fn rational_primes_to_ten() {
        let t = prime_ideals_up_to(NumberField::Rational, 10.0).unwrap();
        assert_eq!(norms(&t), vec![2, 3, 5, 7]);
    }

    #[test]
    fn gaussian_field_splitting() {
        let f = NumberField::quadratic(-1).unwrap();
        assert_eq!(f.discriminant(), -4);
        let t = prime_ideals_up_to(f, 6.0).unwrap();
        assert_eq!(t.len(), 3);
        assert_eq!(t.entries[0].norm, 2);
        assert!(t.entries[0].ramified);
        assert!(t.entries[1..].iter().all(|e| e.norm == 5 && !e.ramified));
        assert_eq!(t.entries[1].index, 0);
        assert_eq!(t.entries[2].index, 1);
        // 3 is inert, norm 9 > 6
        assert!(t.entries.iter().all(|e| e.residue_prime != 3));
        let t = prime_ideals_up_to(f, 9.0).unwrap();
        assert!(t.entries.iter().any(|e| e.residue_prime == 3 && e.norm == 9));
    }

    #[test]
    fn eleven_splits_in_q_sqrt5() {
        let f = NumberField::quadratic(5).unwrap();
        assert_eq!(f.discriminant(), 5);
        let t = prime_ideals_up_to(f, 12.0).unwrap();
        let elevens: Vec<_> = t.entries.iter().filter(|e| e.residue_prime == 11).collect();
        assert_eq!(elevens.len(), 2);
        assert!(elevens.iter().all(|e| e.norm == 11));
    }

    #[test]
    fn cutoff_below_two_is_rejected() {
        assert!(matches!(
            prime_ideals_up_to(NumberField::Rational, 1.5),
            Err(Error::Domain(_))
        ));
    }

    #[test]
    fn kronecker_examples() {
        assert_eq!(kronecker_symbol(-4, 5), 1);
        assert_eq!(kronecker_symbol(-4, 2), 0);
        assert_eq!(kronecker_symbol(5, 11), 1);
        assert_eq!(kronecker_symbol(5, 2), -1);
        assert_eq!(kronecker_symbol(-3, 1), 1);
        assert_eq!(kronecker_symbol(-4, 3), -1);
    }

    #[test]
    fn kronecker_matches_euler_criterion_at_odd_primes() {
        for d in [-23i64, -7, -4, -3, 5, 8, 12, 13, 17] {
            for p in primes_up_to(200).into_iter().filter(|&p| p > 2) {
                let a = d.rem_euclid(p as i64) as u64;
                let mut e = 1u64;
                for _ in 0..(p - 1) / 2 {
                    e = e * a % p;
                }
                let expected = match e {
                    0 => 0,
                    1 => 1,
                    _ => -1,
                };
                assert_eq!(kronecker_symbol(d, p), expected, "d={d} p={p}");
            }
        }
    }

    #[test]
    fn omega_examples() {
        assert_eq!(omega(1), 0);
        assert_eq!(omega(12), 2);
        assert_eq!(omega(30030), 6);
        assert_eq!(omega(97), 1);
    }

    #[test]
    fn field_invariants() {
        assert_eq!(NumberField::Rational.places(), vec![PlaceKind::Real]);
        let real = NumberField::quadratic(2).unwrap();
        assert_eq!(real.discriminant(), 8);
        assert_eq!(real.places().len(), 2);
        let imag = NumberField::quadratic(-5).unwrap();
        assert_eq!(imag.discriminant(), -20);
        assert_eq!(imag.places(), vec![PlaceKind::Complex]);
        for f in [NumberField::Rational, real, imag] {
            let r1 = f.places().iter().filter(|p| **p == PlaceKind::Real).count() as u32;
            let r2 = f.places().len() as u32 - r1;
            assert_eq!(f.degree(), r1 + 2 * r2);
        }
        assert!(NumberField::quadratic(12).is_err());
        assert!(NumberField::quadratic(1).is_err());
    }

    #[test]
    fn split_prime_count_matches_kronecker_classification() {
        for d in (-50i64..=50).filter(|&d| NumberField::quadratic(d).is_ok()) {
            let f = NumberField::quadratic(d).unwrap();
            let x = 10_000.0;
            let t = prime_ideals_up_to(f, x).unwrap();
            let disc = f.discriminant();
            let mut expected = 0;
            for p in primes_up_to(10_000) {
                match kronecker_symbol(disc, p) {
                    0 => expected += 1,
                    1 => expected += 2,
                    _ => {
                        if p * p <= 10_000 {
                            expected += 1
                        }
                    }
                }
            }
            assert_eq!(t.len(), expected, "d = {d}");
        }
    }

    #[test]
    fn tables_are_prefix_monotone() {
        let f = NumberField::quadratic(-7).unwrap();
        let small = prime_ideals_up_to(f, 500.0).unwrap();
        let big = prime_ideals_up_to(f, 2000.0).unwrap();
        assert_eq!(&big.entries[..small.len()], &small.entries[..]);
    }

    #[test]
    fn ideal_lookup_agrees_with_table() {
        let f = NumberField::quadratic(-5).unwrap();
        let t = prime_ideals_up_to(f, 300.0).unwrap();
        for e in &t.entries {
            assert_eq!(prime_ideal(f, e.key()).unwrap(), *e);
        }
    }
}
