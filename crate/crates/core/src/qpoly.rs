//! Exact integer-coefficient polynomials in q.
//!
//! Coefficients may be negative (the polynomials computed here are not
//! always positive); zero coefficients are never stored.  Text rendering
//! lists monomials in decreasing exponent, e.g. `q^6 + 2*q^5 + q^4`.

use crate::error::{add, choose2, mul, Error, Result};
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use std::collections::BTreeMap;
use std::fmt;

/// Polynomial in q with exact integer coefficients.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct QPolynomial {
    // exponent -> nonzero coefficient
    coeffs: BTreeMap<i64, i64>,
}

impl QPolynomial {
    pub fn zero() -> Self {
        QPolynomial { coeffs: BTreeMap::new() }
    }

    pub fn one() -> Self {
        QPolynomial::monomial(0, 1)
    }

    /// c * q^e
    pub fn monomial(exponent: i64, coefficient: i64) -> Self {
        assert!(exponent >= 0, "negative exponent {exponent}");
        let mut coeffs = BTreeMap::new();
        if coefficient != 0 {
            coeffs.insert(exponent, coefficient);
        }
        QPolynomial { coeffs }
    }

    pub fn from_coeffs(pairs: &[(i64, i64)]) -> Self {
        let mut p = QPolynomial::zero();
        for &(e, c) in pairs {
            p.add_term(e, c);
        }
        p
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Max stored exponent; 0 for the zero polynomial.
    pub fn degree(&self) -> i64 {
        self.coeffs.keys().next_back().copied().unwrap_or(0)
    }

    pub fn coeff(&self, exponent: i64) -> i64 {
        self.coeffs.get(&exponent).copied().unwrap_or(0)
    }

    pub fn terms(&self) -> impl Iterator<Item = (i64, i64)> + '_ {
        self.coeffs.iter().map(|(&e, &c)| (e, c))
    }

    pub fn add_term(&mut self, exponent: i64, coefficient: i64) {
        assert!(exponent >= 0, "negative exponent {exponent}");
        if coefficient == 0 {
            return;
        }
        let slot = self.coeffs.entry(exponent).or_insert(0);
        *slot = add(*slot, coefficient);
        if *slot == 0 {
            self.coeffs.remove(&exponent);
        }
    }

    pub fn plus(&self, other: &QPolynomial) -> QPolynomial {
        let mut out = self.clone();
        for (e, c) in other.terms() {
            out.add_term(e, c);
        }
        out
    }

    pub fn minus(&self, other: &QPolynomial) -> QPolynomial {
        let mut out = self.clone();
        for (e, c) in other.terms() {
            out.add_term(e, -c);
        }
        out
    }

    pub fn times(&self, other: &QPolynomial) -> QPolynomial {
        let mut out = QPolynomial::zero();
        for (e1, c1) in self.terms() {
            for (e2, c2) in other.terms() {
                out.add_term(add(e1, e2), mul(c1, c2));
            }
        }
        out
    }

    pub fn scale(&self, c: i64) -> QPolynomial {
        let mut out = QPolynomial::zero();
        for (e, c0) in self.terms() {
            out.add_term(e, mul(c0, c));
        }
        out
    }

    /// Multiply by q^e.
    pub fn shift(&self, e: i64) -> QPolynomial {
        let mut out = QPolynomial::zero();
        for (e0, c0) in self.terms() {
            out.add_term(add(e0, e), c0);
        }
        out
    }

    /// Exact evaluation at an integer point.
    pub fn eval(&self, q: i64) -> i64 {
        let mut total = 0;
        for (e, c) in self.terms() {
            let mut power = 1i64;
            for _ in 0..e {
                power = mul(power, q);
            }
            total = add(total, mul(c, power));
        }
        total
    }

    /// True when every coefficient is nonnegative.
    pub fn is_nonnegative(&self) -> bool {
        self.coeffs.values().all(|&c| c >= 0)
    }

    /// Coefficientwise comparison self ≤ other.
    pub fn le_coefficientwise(&self, other: &QPolynomial) -> bool {
        other.minus(self).is_nonnegative()
    }
}

impl fmt::Display for QPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (&e, &c) in self.coeffs.iter().rev() {
            let mag = c.abs();
            if first {
                if c < 0 {
                    write!(f, "-")?;
                }
                first = false;
            } else if c < 0 {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            match (e, mag) {
                (0, m) => write!(f, "{m}")?,
                (1, 1) => write!(f, "q")?,
                (1, m) => write!(f, "{m}*q")?,
                (e, 1) => write!(f, "q^{e}")?,
                (e, m) => write!(f, "{m}*q^{e}")?,
            }
        }
        Ok(())
    }
}

impl Serialize for QPolynomial {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        // Canonical JSON: object mapping stringified exponents to coefficients.
        let map: BTreeMap<String, i64> =
            self.coeffs.iter().map(|(&e, &c)| (e.to_string(), c)).collect();
        map.serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for QPolynomial {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let map = BTreeMap::<String, i64>::deserialize(deserializer)?;
        let mut p = QPolynomial::zero();
        for (e, c) in map {
            let e: i64 = e.parse().map_err(|_| D::Error::custom("bad exponent"))?;
            if e < 0 {
                return Err(D::Error::custom("negative exponent"));
            }
            p.add_term(e, c);
        }
        Ok(p)
    }
}

/// Gaussian binomial coefficient [a choose b]_q, zero when b > a.
pub fn q_binomial(a: i64, b: i64) -> QPolynomial {
    assert!(a >= 0 && b >= 0, "q_binomial of negative arguments");
    if b > a {
        return QPolynomial::zero();
    }
    // Pascal recursion [a,b] = [a-1,b-1] + q^b [a-1,b], row by row.
    let b = b.min(a - b);
    let mut row: Vec<QPolynomial> = vec![QPolynomial::one()];
    for _n in 1..=a {
        let mut next = Vec::with_capacity((b + 1) as usize);
        next.push(QPolynomial::one());
        for k in 1..=b.min(row.len() as i64) {
            let left = &row[(k - 1) as usize];
            let right = if (k as usize) < row.len() {
                row[k as usize].shift(k)
            } else {
                QPolynomial::zero()
            };
            next.push(left.plus(&right));
        }
        row = next;
    }
    row.into_iter().nth(b as usize).unwrap_or_else(QPolynomial::zero)
}

/// q^N p(1/q): the exponent map e ↦ N − e.  Requires N ≥ deg p.
pub fn mirror(p: &QPolynomial, pivot: i64) -> Result<QPolynomial> {
    if !p.is_zero() && pivot < p.degree() {
        return Err(Error::MirrorRange { degree: p.degree(), pivot });
    }
    let mut out = QPolynomial::zero();
    for (e, c) in p.terms() {
        out.add_term(pivot - e, c);
    }
    Ok(out)
}

/// Ordinary binomial coefficient, exact.
pub fn binomial(n: i64, k: i64) -> i64 {
    if k < 0 || k > n || n < 0 {
        return 0;
    }
    if k == 2 {
        return choose2(n);
    }
    let k = k.min(n - k);
    let mut acc = 1i64;
    for i in 0..k {
        acc = mul(acc, n - i) / (i + 1);
    }
    acc
}
