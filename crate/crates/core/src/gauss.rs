//! Formal Gauss-sum arithmetic.
//!
//! A monomial is `q^e * e(phi) * xi^x * prod g(k)^{a_k}` subject to
//! `g(k) = -q^{-1}` for `n | k`, `g(k) g(n-k) = xi^k q^{-1}` and `xi^2 = 1`.
//! Internally each residue pair `{k, n-k}` with `k < n/2` carries one signed
//! exponent, and the self-paired residue `n/2` an exponent in `{0, 1}`; this
//! is a canonical form because the rules make `g(n-k)` equal to
//! `xi^k q^{-1} g(k)^{-1}`.

use std::collections::BTreeMap;
use std::fmt;

use num_complex::Complex64;
use num_rational::Rational64;
use num_traits::{One, Zero};

use crate::whittaker::{r64_to_f64, CharValue};

/// A canonical monomial without its coefficient.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Mono {
    pub q_exp: Rational64,
    /// Phase in `[0, 1/2)`; a phase of `1/2` is a sign and lives in the coefficient.
    pub phase: Rational64,
    pub xi: u8,
    /// `g[k - 1]` for `1 <= k <= n/2`.
    pub g: Vec<i64>,
}

fn half() -> Rational64 {
    Rational64::new(1, 2)
}

fn frac(x: Rational64) -> Rational64 {
    x - x.floor()
}

impl Mono {
    pub fn one(n: i64) -> Mono {
        Mono {
            q_exp: Rational64::zero(),
            phase: Rational64::zero(),
            xi: 0,
            g: vec![0; (n / 2).max(0) as usize],
        }
    }

    /// Product of two monomials with the sign it produces.
    pub fn mul(&self, o: &Mono, n: i64) -> (i64, Mono) {
        let mut m = Mono {
            q_exp: self.q_exp + o.q_exp,
            phase: self.phase + o.phase,
            xi: self.xi ^ o.xi,
            g: self.g.iter().zip(&o.g).map(|(a, b)| a + b).collect(),
        };
        let sign = m.normalize(n);
        (sign, m)
    }

    /// Fold the phase into `[0, 1/2)` and reduce the self-paired exponent and
    /// `xi` for odd `n`; returns the sign produced.
    fn normalize(&mut self, n: i64) -> i64 {
        let mut sign = 1;
        let p = frac(self.phase);
        if p >= half() {
            sign = -sign;
            self.phase = p - half();
        } else {
            self.phase = p;
        }
        if n % 2 == 0 && n > 0 {
            let k = n / 2;
            let e = &mut self.g[(k - 1) as usize];
            let pairs = e.div_euclid(2);
            *e -= 2 * pairs;
            self.q_exp -= Rational64::from(pairs);
            if (k * pairs).rem_euclid(2) == 1 {
                self.xi ^= 1;
            }
        }
        if n % 2 == 1 {
            self.xi = 0;
        }
        sign
    }

    pub fn inv(&self, n: i64) -> (i64, Mono) {
        let mut m = Mono {
            q_exp: -self.q_exp,
            phase: -self.phase,
            xi: self.xi,
            g: self.g.iter().map(|a| -a).collect(),
        };
        let sign = m.normalize(n);
        (sign, m)
    }

    pub fn q_power(n: i64, e: Rational64) -> Mono {
        let mut m = Mono::one(n);
        m.q_exp = e;
        m
    }

    /// Monomial of a character value with the sign from its phase.
    pub fn from_char_value(n: i64, v: &CharValue) -> (i64, Mono) {
        let mut m = Mono::one(n);
        m.q_exp = v.q_exp;
        m.phase = v.phase;
        let s = m.normalize(n);
        (s, m)
    }

    pub fn xi_power(n: i64, e: i64) -> Mono {
        let mut m = Mono::one(n);
        if n % 2 == 0 {
            m.xi = e.rem_euclid(2) as u8;
        }
        m
    }

    /// `g(k)` for any integer `k`, with its sign.
    pub fn g(n: i64, k: i64) -> (i64, Mono) {
        let mut m = Mono::one(n);
        let r = k.rem_euclid(n);
        if r == 0 {
            m.q_exp = -Rational64::one();
            return (-1, m);
        }
        if 2 * r < n {
            m.g[(r - 1) as usize] = 1;
        } else if 2 * r == n {
            m.g[(r - 1) as usize] = 1;
        } else {
            // g(r) = xi^{n-r} q^{-1} g(n-r)^{-1}.
            let k = n - r;
            m.g[(k - 1) as usize] = -1;
            m.q_exp = -Rational64::one();
            if n % 2 == 0 && k % 2 == 1 {
                m.xi = 1;
            }
        }
        (1, m)
    }

    /// Numeric value.
    pub fn eval(&self, q: f64, xi: f64, gvals: &[Complex64]) -> Complex64 {
        let mut v = Complex64::from_polar(
            q.powf(r64_to_f64(self.q_exp)),
            2.0 * std::f64::consts::PI * r64_to_f64(self.phase),
        );
        if self.xi == 1 {
            v *= xi;
        }
        for (i, &a) in self.g.iter().enumerate() {
            if a != 0 {
                v *= gvals[i + 1].powi(a as i32);
            }
        }
        v
    }

    pub fn is_one(&self) -> bool {
        self.q_exp.is_zero() && self.phase.is_zero() && self.xi == 0 && self.g.iter().all(|&a| a == 0)
    }
}

/// A monomial with a sign, in display form: nonnegative
/// exponents on `g(k)` with `k` in `1..n`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct GaussMonomial {
    pub n: i64,
    /// `1`, `-1` or `0`.
    pub sign: i64,
    pub q_exp: Rational64,
    pub phase: Rational64,
    pub xi: u8,
    /// `(k, e)` with `e > 0`, increasing in `k`.
    pub g: Vec<(i64, i64)>,
}

impl GaussMonomial {
    pub fn one(n: i64) -> Self {
        Self::from_mono(n, 1, &Mono::one(n))
    }

    pub fn zero(n: i64) -> Self {
        let mut m = Self::one(n);
        m.sign = 0;
        m
    }

    /// Canonical form of `sign * q^e * e(phase) * xi^x * prod g(k)^{a}` for
    /// arbitrary integer `k` and `a`.
    pub fn canonicalize(
        n: i64,
        sign: i64,
        q_exp: Rational64,
        phase: Rational64,
        xi: i64,
        g: &[(i64, i64)],
    ) -> Self {
        if sign == 0 {
            return Self::zero(n);
        }
        let (s, m) = build(n, sign, q_exp, phase, xi, g);
        Self::from_mono(n, s, &m)
    }

    /// Display form of a canonical monomial.
    pub fn from_mono(n: i64, sign: i64, m: &Mono) -> Self {
        let mut q_exp = m.q_exp;
        let mut xi = m.xi;
        let mut g = vec![];
        for (i, &a) in m.g.iter().enumerate() {
            let k = i as i64 + 1;
            if a > 0 {
                g.push((k, a));
            } else if a < 0 {
                // g(k)^{-b} = g(n-k)^b xi^{kb} q^b.
                let b = -a;
                g.push((n - k, b));
                q_exp += Rational64::from(b);
                if n % 2 == 0 && (k * b) % 2 == 1 {
                    xi ^= 1;
                }
            }
        }
        g.sort_unstable();
        GaussMonomial {
            n,
            sign,
            q_exp,
            phase: m.phase,
            xi,
            g,
        }
    }

    /// Back to the internal canonical form.
    pub fn to_mono(&self) -> (i64, Mono) {
        build(self.n, self.sign, self.q_exp, self.phase, i64::from(self.xi), &self.g)
    }

    pub fn mul(&self, o: &GaussMonomial) -> GaussMonomial {
        let (s1, a) = self.to_mono();
        let (s2, b) = o.to_mono();
        let (s, m) = a.mul(&b, self.n);
        Self::from_mono(self.n, s1 * s2 * s, &m)
    }
}

fn build(
    n: i64,
    sign: i64,
    q_exp: Rational64,
    phase: Rational64,
    xi: i64,
    g: &[(i64, i64)],
) -> (i64, Mono) {
    let mut m = Mono::one(n);
    m.q_exp = q_exp;
    m.phase = phase;
    m.xi = if n % 2 == 0 { xi.rem_euclid(2) as u8 } else { 0 };
    let mut s = sign.signum() * m.normalize(n);
    for &(k, a) in g {
        let (sg, gk) = Mono::g(n, k);
        let (sg, gk) = if a >= 0 {
            (sg, gk)
        } else {
            let (si, inv) = gk.inv(n);
            (sg * si, inv)
        };
        for _ in 0..a.abs() {
            let (sm, prod) = m.mul(&gk, n);
            s *= sg * sm;
            m = prod;
        }
    }
    (s, m)
}

impl fmt::Display for GaussMonomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.sign == 0 {
            return write!(f, "0");
        }
        let mut parts: Vec<String> = vec![];
        if !self.q_exp.is_zero() {
            parts.push(format!("q^({})", self.q_exp));
        }
        if !self.phase.is_zero() {
            parts.push(format!("e({})", self.phase));
        }
        if self.xi == 1 {
            parts.push("xi".into());
        }
        for &(k, e) in &self.g {
            if e == 1 {
                parts.push(format!("g({k})"));
            } else {
                parts.push(format!("g({k})^{e}"));
            }
        }
        let body = if parts.is_empty() { "1".to_string() } else { parts.join("*") };
        if self.sign < 0 {
            write!(f, "-{body}")
        } else {
            write!(f, "{body}")
        }
    }
}

/// Integer combination of canonical monomials.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Poly {
    pub n: i64,
    pub terms: BTreeMap<Mono, i128>,
}

impl Poly {
    pub fn zero(n: i64) -> Self {
        Poly {
            n,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(n: i64) -> Self {
        Self::mono(n, 1, Mono::one(n))
    }

    pub fn mono(n: i64, c: i128, m: Mono) -> Self {
        let mut p = Self::zero(n);
        p.add_term(c, m);
        p
    }

    pub fn add_term(&mut self, c: i128, m: Mono) {
        if c == 0 {
            return;
        }
        let e = self.terms.entry(m.clone()).or_insert(0);
        *e += c;
        if *e == 0 {
            self.terms.remove(&m);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add(&self, o: &Poly) -> Poly {
        let mut p = self.clone();
        for (m, &c) in &o.terms {
            p.add_term(c, m.clone());
        }
        p
    }

    pub fn neg(&self) -> Poly {
        let mut p = self.clone();
        for c in p.terms.values_mut() {
            *c = -*c;
        }
        p
    }

    pub fn sub(&self, o: &Poly) -> Poly {
        self.add(&o.neg())
    }

    pub fn mul(&self, o: &Poly) -> Poly {
        let mut p = Poly::zero(self.n);
        for (a, &ca) in &self.terms {
            for (b, &cb) in &o.terms {
                let (s, m) = a.mul(b, self.n);
                p.add_term(ca * cb * s as i128, m);
            }
        }
        p
    }

    pub fn mul_mono(&self, c: i128, m: &Mono) -> Poly {
        let mut p = Poly::zero(self.n);
        for (a, &ca) in &self.terms {
            let (s, prod) = a.mul(m, self.n);
            p.add_term(ca * c * s as i128, prod);
        }
        p
    }

    /// `1 - x` for a character value `x`.
    pub fn one_minus(n: i64, x: &CharValue) -> Poly {
        let (s, m) = Mono::from_char_value(n, x);
        let mut p = Poly::one(n);
        p.add_term(-(s as i128), m);
        p
    }

    pub fn eval(&self, q: f64, xi: f64, gvals: &[Complex64]) -> Complex64 {
        self.terms
            .iter()
            .map(|(m, &c)| m.eval(q, xi, gvals) * c as f64)
            .sum()
    }

    /// Sum of absolute values of the terms.
    pub fn eval_abs(&self, q: f64, xi: f64, gvals: &[Complex64]) -> f64 {
        self.terms
            .iter()
            .map(|(m, &c)| m.eval(q, xi, gvals).norm() * (c as f64).abs())
            .sum()
    }

    /// Terms as display monomials with their coefficients.
    pub fn monomials(&self) -> Vec<(i128, GaussMonomial)> {
        self.terms
            .iter()
            .map(|(m, &c)| (c.abs(), GaussMonomial::from_mono(self.n, c.signum() as i64, m)))
            .collect()
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (i, (c, m)) in self.monomials().into_iter().enumerate() {
            let s = m.to_string();
            let (neg, body) = match s.strip_prefix('-') {
                Some(b) => (true, b.to_string()),
                None => (false, s),
            };
            let term = if c == 1 {
                body
            } else if body == "1" {
                c.to_string()
            } else {
                format!("{c}*{body}")
            };
            match (i, neg) {
                (0, true) => write!(f, "-{term}")?,
                (0, false) => write!(f, "{term}")?,
                (_, true) => write!(f, " - {term}")?,
                (_, false) => write!(f, " + {term}")?,
            }
        }
        Ok(())
    }
}

/// A quotient `num / prod (1 - x)^m` with denominators from character values.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RatExpr {
    pub num: Poly,
    pub den: BTreeMap<CharValue, u32>,
}

impl RatExpr {
    pub fn zero(n: i64) -> Self {
        RatExpr {
            num: Poly::zero(n),
            den: BTreeMap::new(),
        }
    }

    pub fn from_poly(p: Poly) -> Self {
        RatExpr {
            num: p,
            den: BTreeMap::new(),
        }
    }

    pub fn n(&self) -> i64 {
        self.num.n
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub(crate) fn lift_to(&self, den: &BTreeMap<CharValue, u32>) -> Poly {
        let mut p = self.num.clone();
        for (x, &m) in den {
            let have = self.den.get(x).copied().unwrap_or(0);
            for _ in have..m {
                p = p.mul(&Poly::one_minus(self.n(), x));
            }
        }
        p
    }

    pub fn add(&self, o: &RatExpr) -> RatExpr {
        if o.is_zero() {
            return self.clone();
        }
        if self.is_zero() {
            return o.clone();
        }
        let mut den = self.den.clone();
        for (x, &m) in &o.den {
            let e = den.entry(*x).or_insert(0);
            *e = (*e).max(m);
        }
        let num = self.lift_to(&den).add(&o.lift_to(&den));
        RatExpr { num, den }.tidy()
    }

    pub fn sub(&self, o: &RatExpr) -> RatExpr {
        self.add(&o.neg())
    }

    pub fn neg(&self) -> RatExpr {
        RatExpr {
            num: self.num.neg(),
            den: self.den.clone(),
        }
    }

    pub fn mul(&self, o: &RatExpr) -> RatExpr {
        if self.is_zero() || o.is_zero() {
            return RatExpr::zero(self.n());
        }
        let mut den = self.den.clone();
        for (x, &m) in &o.den {
            *den.entry(*x).or_insert(0) += m;
        }
        RatExpr {
            num: self.num.mul(&o.num),
            den,
        }
        .tidy()
    }

    /// Cancel denominator factors that divide the numerator exactly, using
    /// the rule `(1 - x) | p` iff `p = (1 - x) r` with `r` found by
    /// synthetic division along powers of `x`.
    fn tidy(mut self) -> Self {
        if self.num.is_zero() {
            self.den.clear();
            return self;
        }
        let keys: Vec<CharValue> = self.den.keys().copied().collect();
        for x in keys {
            while self.den.get(&x).copied().unwrap_or(0) > 0 {
                match divide_one_minus(&self.num, &x) {
                    Some(r) => {
                        self.num = r;
                        let e = self.den.get_mut(&x).unwrap();
                        *e -= 1;
                        if *e == 0 {
                            self.den.remove(&x);
                        }
                    }
                    None => break,
                }
            }
        }
        self
    }

    pub fn eval(&self, q: f64, xi: f64, gvals: &[Complex64]) -> Complex64 {
        let mut v = self.num.eval(q, xi, gvals);
        for (x, &m) in &self.den {
            v /= (Complex64::new(1.0, 0.0) - x.eval(q)).powi(m as i32);
        }
        v
    }

    /// Magnitude bound used for numeric thresholds.
    pub fn eval_abs(&self, q: f64, xi: f64, gvals: &[Complex64]) -> f64 {
        let mut v = self.num.eval_abs(q, xi, gvals);
        for (x, &m) in &self.den {
            v /= (Complex64::new(1.0, 0.0) - x.eval(q)).norm().powi(m as i32);
        }
        v
    }

    /// Exact equality as rational functions.
    pub fn equals(&self, o: &RatExpr) -> bool {
        self.sub(o).is_zero()
    }
}

/// `p / (1 - x)` when the division is exact. Only attempted when `x` has a
/// nonzero q-exponent, so that multiplication by `x` moves monomials
/// strictly in one q-direction.
fn divide_one_minus(p: &Poly, x: &CharValue) -> Option<Poly> {
    if x.q_exp.is_zero() {
        return None;
    }
    let n = p.n;
    let (sx, mx) = Mono::from_char_value(n, x);
    let up = x.q_exp > Rational64::zero();
    let bound = if up {
        p.terms.keys().next_back()?.q_exp
    } else {
        p.terms.keys().next()?.q_exp
    };
    // p = r - x r: peel the extreme term of the remainder each step.
    let mut rest = p.clone();
    let mut r = Poly::zero(n);
    loop {
        let next = if up {
            rest.terms.iter().next()
        } else {
            rest.terms.iter().next_back()
        };
        let Some((m, &c)) = next else { break };
        let m = m.clone();
        if (up && m.q_exp > bound) || (!up && m.q_exp < bound) {
            return None;
        }
        r.add_term(c, m.clone());
        rest.add_term(-c, m.clone());
        let (s, shifted) = m.mul(&mx, n);
        rest.add_term(c * (sx * s) as i128, shifted);
    }
    Some(r)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn gm(n: i64, g: &[(i64, i64)]) -> GaussMonomial {
        GaussMonomial::canonicalize(n, 1, Rational64::zero(), Rational64::zero(), 0, g)
    }

    #[test]
    fn rewrite_rules() {
        for n in 1..9 {
            let m = gm(n, &[(n, 1)]);
            assert_eq!(m.sign, -1);
            assert_eq!(m.q_exp, Rational64::from(-1));
            assert!(m.g.is_empty());
            let sq = gm(n, &[(0, 2)]);
            assert_eq!((sq.sign, sq.q_exp), (1, Rational64::from(-2)));
            for k in 1..n {
                let p = gm(n, &[(k, 1), (n - k, 1)]);
                assert_eq!(p.sign, 1);
                assert_eq!(p.q_exp, Rational64::from(-1));
                assert!(p.g.is_empty());
                assert_eq!(p.xi, if n % 2 == 0 { (k % 2) as u8 } else { 0 });
            }
        }
    }

    #[test]
    fn display_form_has_nonnegative_exponents() {
        let m = gm(5, &[(1, -2)]);
        assert_eq!(m.g, vec![(4, 2)]);
        assert_eq!(m.q_exp, Rational64::from(2));
        assert_eq!(m.to_string(), "q^(2)*g(4)^2");
        let back = m.to_mono();
        assert_eq!(GaussMonomial::from_mono(5, back.0, &back.1), m);
    }
}
