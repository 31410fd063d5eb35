//! Integer Laurent polynomials in `v` — the ring `A = Z[v, v^-1]`.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// An element of `A = Z[v, v^-1]`, stored as a finitely supported map from
/// exponent to coefficient. No zero coefficients are ever stored.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Laurent {
    coeffs: BTreeMap<i64, BigInt>,
}

impl Laurent {
    pub fn zero() -> Self {
        Laurent::default()
    }

    pub fn one() -> Self {
        Laurent::from_int(1)
    }

    pub fn from_int<T: Into<BigInt>>(n: T) -> Self {
        Laurent::monomial(0, n.into())
    }

    /// `c * v^k`
    pub fn monomial(k: i64, c: BigInt) -> Self {
        let mut m = BTreeMap::new();
        if !c.is_zero() {
            m.insert(k, c);
        }
        Laurent { coeffs: m }
    }

    /// `v^k`
    pub fn v_pow(k: i64) -> Self {
        Laurent::monomial(k, BigInt::one())
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs.get(&0).map_or(false, |c| c.is_one())
    }

    /// `±v^k` — the units of `A`.
    pub fn is_unit(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs.values().next().unwrap().abs().is_one()
    }

    pub fn coeff(&self, k: i64) -> BigInt {
        self.coeffs.get(&k).cloned().unwrap_or_else(BigInt::zero)
    }

    pub fn terms(&self) -> impl Iterator<Item = (&i64, &BigInt)> {
        self.coeffs.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.coeffs.len()
    }

    /// Lowest exponent with nonzero coefficient; `None` for the zero element.
    pub fn min_exp(&self) -> Option<i64> {
        self.coeffs.keys().next().copied()
    }

    pub fn max_exp(&self) -> Option<i64> {
        self.coeffs.keys().next_back().copied()
    }

    pub fn leading_coeff(&self) -> BigInt {
        self.max_exp().map_or_else(BigInt::zero, |e| self.coeff(e))
    }

    fn insert_add(map: &mut BTreeMap<i64, BigInt>, k: i64, c: BigInt) {
        if c.is_zero() {
            return;
        }
        match map.entry(k) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    /// Multiply by `v^k`.
    pub fn shift(&self, k: i64) -> Self {
        Laurent {
            coeffs: self.coeffs.iter().map(|(e, c)| (e + k, c.clone())).collect(),
        }
    }

    /// Substitute `v -> v^d` (used for `v_α = v^{(α|α)/2}`).
    pub fn stretch(&self, d: i64) -> Self {
        Laurent {
            coeffs: self.coeffs.iter().map(|(e, c)| (e * d, c.clone())).collect(),
        }
    }

    /// The bar involution `v -> v^-1`.
    pub fn bar(&self) -> Self {
        Laurent {
            coeffs: self.coeffs.iter().map(|(e, c)| (-e, c.clone())).collect(),
        }
    }

    /// Evaluate at `v = 1` (augmentation `A -> Z`).
    pub fn eval_one(&self) -> BigInt {
        self.coeffs.values().sum()
    }

    /// Content: gcd of the integer coefficients (non-negative).
    pub fn content(&self) -> BigInt {
        let mut g = BigInt::zero();
        for c in self.coeffs.values() {
            g = num_integer::gcd(g, c.clone());
        }
        g
    }

    /// Exact division; errors when `self` is not a multiple of `other`.
    ///
    /// Division is only defined when exact: `A` is not a field and silent
    /// promotion to `Q(v)` would mask integrality failures.
    pub fn div_exact(&self, other: &Laurent) -> Result<Laurent> {
        if other.is_zero() {
            return Err(Error::InexactDivision("division by zero".into()));
        }
        if self.is_zero() {
            return Ok(Laurent::zero());
        }
        // Reduce to ordinary polynomial division by shifting both operands to
        // have lowest exponent 0, then divide leading terms downward.
        let a_shift = self.min_exp().unwrap();
        let b_shift = other.min_exp().unwrap();
        let mut rem = self.shift(-a_shift);
        let den = other.shift(-b_shift);
        let den_deg = den.max_exp().unwrap();
        let den_lead = den.leading_coeff();
        let mut quo = BTreeMap::new();
        while !rem.is_zero() {
            let rd = rem.max_exp().unwrap();
            if rd < den_deg {
                return Err(Error::InexactDivision(format!(
                    "{} does not divide {}",
                    other, self
                )));
            }
            let rl = rem.leading_coeff();
            let (q, r) = num_integer::div_rem(rl.clone(), den_lead.clone());
            if !r.is_zero() {
                return Err(Error::InexactDivision(format!(
                    "leading coefficient {} not divisible by {}",
                    rl, den_lead
                )));
            }
            let mono = Laurent::monomial(rd - den_deg, q.clone());
            rem = &rem - &(&mono * &den);
            Laurent::insert_add(&mut quo, rd - den_deg, q);
        }
        Ok(Laurent { coeffs: quo }.shift(b_shift - a_shift).shift(0))
    }

    /// Primitive part and content with sign normalized so the leading
    /// coefficient of the primitive part is positive.
    pub fn primitive(&self) -> (BigInt, Laurent) {
        if self.is_zero() {
            return (BigInt::zero(), Laurent::zero());
        }
        let mut c = self.content();
        if self.leading_coeff().is_negative() {
            c = -c;
        }
        let prim = Laurent {
            coeffs: self
                .coeffs
                .iter()
                .map(|(e, x)| (*e, x / &c))
                .collect(),
        };
        (c, prim)
    }

    /// Gcd in `Z[v]` up to units, computed on shifted-to-polynomial
    /// representatives via a primitive remainder sequence. The result is
    /// primitive with positive leading coefficient and lowest exponent 0.
    pub fn gcd(&self, other: &Laurent) -> Laurent {
        if self.is_zero() {
            return other.primitive().1.shift(-other.min_exp().unwrap_or(0));
        }
        if other.is_zero() {
            return self.primitive().1.shift(-self.min_exp().unwrap_or(0));
        }
        let ca = self.primitive();
        let cb = other.primitive();
        let mut a = ca.1.shift(-ca.1.min_exp().unwrap());
        let mut b = cb.1.shift(-cb.1.min_exp().unwrap());
        let content_gcd = num_integer::gcd(ca.0.abs(), cb.0.abs());
        while !b.is_zero() {
            let r = a.pseudo_rem(&b);
            a = b;
            b = r.primitive().1;
            if !b.is_zero() {
                b = b.shift(-b.min_exp().unwrap());
            }
        }
        let mut g = a;
        if g.leading_coeff().is_negative() {
            g = -&g;
        }
        // Fold in the integer content gcd so that gcd(2p, 2q) = 2 gcd(p, q).
        &g * &Laurent::from_int(content_gcd)
    }

    /// Pseudo-remainder of `self` by `div` (both with min_exp 0, div nonzero).
    fn pseudo_rem(&self, div: &Laurent) -> Laurent {
        let mut rem = self.clone();
        let dd = div.max_exp().unwrap();
        let dl = div.leading_coeff();
        while let Some(rd) = rem.max_exp() {
            if rd < dd {
                break;
            }
            let rl = rem.leading_coeff();
            // rem := dl*rem - rl*v^(rd-dd)*div kills the leading term.
            let scaled = Laurent {
                coeffs: rem.coeffs.iter().map(|(e, c)| (*e, c * &dl)).collect(),
            };
            let sub = Laurent {
                coeffs: div
                    .coeffs
                    .iter()
                    .map(|(e, c)| (*e + rd - dd, c * &rl))
                    .collect(),
            };
            rem = &scaled - &sub;
        }
        rem
    }

    /// Evaluate the Laurent polynomial at `v = x` in any commutative-ring
    /// evaluation provided by closures (used for cyclotomic specialization).
    pub fn fold<T>(
        &self,
        mut pow: impl FnMut(i64) -> T,
        mut scale: impl FnMut(&BigInt, T) -> T,
        mut add: impl FnMut(T, T) -> T,
        zero: T,
    ) -> T {
        let mut acc = zero;
        for (e, c) in &self.coeffs {
            let t = scale(c, pow(*e));
            acc = add(acc, t);
        }
        acc
    }
}

impl Add for &Laurent {
    type Output = Laurent;
    fn add(self, rhs: &Laurent) -> Laurent {
        let mut out = self.coeffs.clone();
        for (e, c) in &rhs.coeffs {
            Laurent::insert_add(&mut out, *e, c.clone());
        }
        Laurent { coeffs: out }
    }
}

impl Sub for &Laurent {
    type Output = Laurent;
    fn sub(self, rhs: &Laurent) -> Laurent {
        let mut out = self.coeffs.clone();
        for (e, c) in &rhs.coeffs {
            Laurent::insert_add(&mut out, *e, -c.clone());
        }
        Laurent { coeffs: out }
    }
}

impl Neg for &Laurent {
    type Output = Laurent;
    fn neg(self) -> Laurent {
        Laurent {
            coeffs: self.coeffs.iter().map(|(e, c)| (*e, -c.clone())).collect(),
        }
    }
}

impl Mul for &Laurent {
    type Output = Laurent;
    fn mul(self, rhs: &Laurent) -> Laurent {
        let mut out = BTreeMap::new();
        for (e1, c1) in &self.coeffs {
            for (e2, c2) in &rhs.coeffs {
                Laurent::insert_add(&mut out, e1 + e2, c1 * c2);
            }
        }
        Laurent { coeffs: out }
    }
}

impl fmt::Display for Laurent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        // Highest exponent first: "v^2 + 1 - v^-2".
        let mut first = true;
        for (e, c) in self.coeffs.iter().rev() {
            let neg = c.is_negative();
            let mag = c.abs();
            if first {
                if neg {
                    write!(f, "-")?;
                }
                first = false;
            } else if neg {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let unit_coeff = mag.is_one();
            match (*e, unit_coeff) {
                (0, _) => write!(f, "{}", mag)?,
                (1, true) => write!(f, "v")?,
                (1, false) => write!(f, "{}*v", mag)?,
                (_, true) => write!(f, "v^{}", e)?,
                (_, false) => write!(f, "{}*v^{}", mag, e)?,
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Laurent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn lp(pairs: &[(i64, i64)]) -> Laurent {
        pairs.iter().fold(Laurent::zero(), |acc, (e, c)| {
            &acc + &Laurent::monomial(*e, BigInt::from(*c))
        })
    }

    #[test]
    fn arithmetic_basics() {
        let a = lp(&[(2, 1), (0, 1), (-2, 1)]);
        let b = lp(&[(1, 1), (-1, -1)]);
        assert_eq!(&a - &a, Laurent::zero());
        assert_eq!((&a * &b).coeff(3), BigInt::from(1));
        assert!((&b * &b).coeff(0) == BigInt::from(-2));
    }

    #[test]
    fn exact_division() {
        // (v - v^-1)(v + v^-1) = v^2 - v^-2
        let d = lp(&[(1, 1), (-1, -1)]);
        let s = lp(&[(1, 1), (-1, 1)]);
        let p = lp(&[(2, 1), (-2, -1)]);
        assert_eq!(p.div_exact(&d).unwrap(), s);
        assert!(lp(&[(1, 1)]).div_exact(&lp(&[(0, 2)])).is_err());
        assert!(lp(&[(2, 1), (0, 1)]).div_exact(&d).is_err());
    }

    #[test]
    fn gcd_of_quantum_integers() {
        // [2] = v + v^-1, [4] = v^3 + v + v^-1 + v^-3; [2] divides [4].
        let two = lp(&[(1, 1), (-1, 1)]);
        let four = lp(&[(3, 1), (1, 1), (-1, 1), (-3, 1)]);
        let g = two.gcd(&four);
        // gcd is normalized to lowest exponent 0: v^2 + 1.
        assert_eq!(g, lp(&[(2, 1), (0, 1)]));
    }

    #[test]
    fn display_form() {
        let a = lp(&[(2, 1), (0, 1), (-2, -1)]);
        assert_eq!(a.to_string(), "v^2 + 1 - v^-2");
    }
}
