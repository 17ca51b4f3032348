//! Multivariate polynomials over ℤ in the fixed symbol set {b, u, v, r}.
//!
//! Monomials carry dense exponent vectors and are kept in a `BTreeMap`, so
//! iteration order is lexicographic with `b` most significant. The gcd first
//! tries the heuristic evaluation/interpolation method and falls back to the
//! classical recursive one: content in the lowest present variable, then a
//! primitive pseudo-remainder sequence on the primitive parts.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::Symbol;

pub const NSYM: usize = 4;
pub type Exponents = [u16; NSYM];

#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct Poly {
    terms: BTreeMap<Exponents, BigInt>,
}

impl Poly {
    pub fn zero() -> Self {
        Poly::default()
    }

    pub fn one() -> Self {
        Poly::constant(BigInt::one())
    }

    pub fn constant(c: BigInt) -> Self {
        let mut p = Poly::zero();
        if !c.is_zero() {
            p.terms.insert([0; NSYM], c);
        }
        p
    }

    pub fn monomial(exps: Exponents, c: BigInt) -> Self {
        let mut p = Poly::zero();
        if !c.is_zero() {
            p.terms.insert(exps, c);
        }
        p
    }

    pub fn symbol(s: Symbol) -> Self {
        let mut e = [0; NSYM];
        e[s.index()] = 1;
        Poly::monomial(e, BigInt::one())
    }

    pub fn from_terms<I: IntoIterator<Item = (Exponents, BigInt)>>(it: I) -> Self {
        let mut p = Poly::zero();
        for (e, c) in it {
            p.add_term(e, c);
        }
        p
    }

    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Exponents, &BigInt)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.as_constant().is_some_and(|c| c.is_one())
    }

    pub fn is_constant(&self) -> bool {
        self.terms.keys().all(|e| *e == [0; NSYM])
    }

    pub fn as_constant(&self) -> Option<BigInt> {
        if self.is_zero() {
            return Some(BigInt::zero());
        }
        if self.is_constant() {
            return self.terms.values().next().cloned();
        }
        None
    }

    fn add_term(&mut self, e: Exponents, c: BigInt) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(e) {
            Entry::Vacant(v) => {
                v.insert(c);
            }
            Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn add(&self, o: &Poly) -> Poly {
        let mut r = self.clone();
        for (e, c) in &o.terms {
            r.add_term(*e, c.clone());
        }
        r
    }

    pub fn sub(&self, o: &Poly) -> Poly {
        let mut r = self.clone();
        for (e, c) in &o.terms {
            r.add_term(*e, -c);
        }
        r
    }

    pub fn neg(&self) -> Poly {
        Poly {
            terms: self.terms.iter().map(|(e, c)| (*e, -c)).collect(),
        }
    }

    pub fn mul(&self, o: &Poly) -> Poly {
        if self.is_zero() || o.is_zero() {
            return Poly::zero();
        }
        if let Some(c) = self.as_constant() {
            return o.scale(&c);
        }
        if let Some(c) = o.as_constant() {
            return self.scale(&c);
        }
        let mut r = Poly::zero();
        for (e1, c1) in &self.terms {
            for (e2, c2) in &o.terms {
                let mut e = [0; NSYM];
                for i in 0..NSYM {
                    e[i] = e1[i] + e2[i];
                }
                r.add_term(e, c1 * c2);
            }
        }
        r
    }

    pub fn scale(&self, c: &BigInt) -> Poly {
        if c.is_zero() {
            return Poly::zero();
        }
        Poly {
            terms: self.terms.iter().map(|(e, x)| (*e, x * c)).collect(),
        }
    }

    pub fn pow(&self, k: u32) -> Poly {
        let mut r = Poly::one();
        for _ in 0..k {
            r = r.mul(self);
        }
        r
    }

    pub fn degree_in(&self, s: usize) -> u16 {
        self.terms.keys().map(|e| e[s]).max().unwrap_or(0)
    }

    pub fn total_degree(&self) -> u32 {
        self.terms
            .keys()
            .map(|e| e.iter().map(|&x| x as u32).sum())
            .max()
            .unwrap_or(0)
    }

    /// Bit mask of symbols with a positive exponent somewhere.
    pub fn variables(&self) -> u8 {
        let mut m = 0u8;
        for e in self.terms.keys() {
            for (i, &x) in e.iter().enumerate() {
                if x > 0 {
                    m |= 1 << i;
                }
            }
        }
        m
    }

    /// Lexicographically leading term.
    pub fn leading(&self) -> Option<(&Exponents, &BigInt)> {
        self.terms.iter().next_back()
    }

    pub fn leading_coefficient(&self) -> BigInt {
        self.leading().map(|(_, c)| c.clone()).unwrap_or_default()
    }

    /// Positive gcd of the integer coefficients, zero for the zero polynomial.
    pub fn content(&self) -> BigInt {
        let mut g = BigInt::zero();
        for c in self.terms.values() {
            g = g.gcd(c);
            if g.is_one() {
                break;
            }
        }
        g
    }

    fn max_norm(&self) -> BigInt {
        self.terms.values().map(|c| c.abs()).max().unwrap_or_default()
    }

    /// Substitutes the integer `x` for symbol `s`.
    fn eval_int(&self, s: usize, x: &BigInt) -> Poly {
        let mut r = Poly::zero();
        let mut powers = vec![BigInt::one()];
        for (e, c) in &self.terms {
            while powers.len() <= e[s] as usize {
                let next = powers.last().expect("nonempty") * x;
                powers.push(next);
            }
            let mut e2 = *e;
            e2[s] = 0;
            r.add_term(e2, c * &powers[e[s] as usize]);
        }
        r
    }

    fn div_int(&self, c: &BigInt) -> Poly {
        Poly {
            terms: self.terms.iter().map(|(e, x)| (*e, x / c)).collect(),
        }
    }

    /// Exact division. Returns `None` when `d` does not divide `self`.
    pub fn div_exact(&self, d: &Poly) -> Option<Poly> {
        if d.is_zero() {
            return None;
        }
        if let Some(c) = d.as_constant() {
            if self.terms.values().all(|x| x.is_multiple_of(&c)) {
                return Some(self.div_int(&c));
            }
            return None;
        }
        let (de, dc) = d.leading().map(|(e, c)| (*e, c.clone()))?;
        let mut rem = self.clone();
        let mut q = Poly::zero();
        while let Some((re, rc)) = rem.leading().map(|(e, c)| (*e, c.clone())) {
            if (0..NSYM).any(|i| re[i] < de[i]) || !rc.is_multiple_of(&dc) {
                return None;
            }
            let mut e = [0; NSYM];
            for i in 0..NSYM {
                e[i] = re[i] - de[i];
            }
            let t = Poly::monomial(e, &rc / &dc);
            rem = rem.sub(&t.mul(d));
            q = q.add(&t);
        }
        Some(q)
    }

    /// Coefficients with respect to symbol `s`; entry k multiplies `s^k`.
    pub fn coeffs_in(&self, s: usize) -> Vec<Poly> {
        let mut out = vec![Poly::zero(); self.degree_in(s) as usize + 1];
        for (e, c) in &self.terms {
            let mut e2 = *e;
            e2[s] = 0;
            out[e[s] as usize].add_term(e2, c.clone());
        }
        out
    }

    fn shift(&self, s: usize, k: u16) -> Poly {
        Poly {
            terms: self
                .terms
                .iter()
                .map(|(e, c)| {
                    let mut e2 = *e;
                    e2[s] += k;
                    (e2, c.clone())
                })
                .collect(),
        }
    }

    fn leading_in(&self, s: usize) -> Poly {
        let d = self.degree_in(s);
        let mut r = Poly::zero();
        for (e, c) in &self.terms {
            if e[s] == d {
                let mut e2 = *e;
                e2[s] = 0;
                r.add_term(e2, c.clone());
            }
        }
        r
    }

    /// Makes the lexicographic leading coefficient positive.
    pub fn normalize_sign(self) -> Poly {
        if self.leading_coefficient().is_negative() {
            self.neg()
        } else {
            self
        }
    }

    fn content_in(&self, s: usize) -> Poly {
        let mut g = Poly::zero();
        for c in self.coeffs_in(s) {
            if c.is_zero() {
                continue;
            }
            g = gcd(&g, &c);
            if g.is_one() {
                break;
            }
        }
        g
    }

    fn primitive_in(&self, s: usize) -> Poly {
        let c = self.content_in(s);
        self.div_exact(&c)
            .expect("content divides its polynomial")
            .normalize_sign()
    }

    fn pseudo_remainder(&self, d: &Poly, s: usize) -> Poly {
        let n = d.degree_in(s);
        let lc = d.leading_in(s);
        let mut r = self.clone();
        while !r.is_zero() && r.degree_in(s) >= n {
            let k = r.degree_in(s) - n;
            let lr = r.leading_in(s);
            r = r.mul(&lc).sub(&d.mul(&lr).shift(s, k));
        }
        r
    }

    /// Substitutes `s = num/den`; returns `(den^D · P(num/den), D)` with D the degree in `s`.
    pub fn substitute(&self, s: usize, num: &BigInt, den: &BigInt) -> (Poly, u16) {
        let d = self.degree_in(s);
        let mut r = Poly::zero();
        for (e, c) in &self.terms {
            let mut e2 = *e;
            e2[s] = 0;
            let k = e[s] as u32;
            let f = c * num.pow(k) * den.pow(d as u32 - k);
            r.add_term(e2, f);
        }
        (r, d)
    }

    /// Substitutes `s² = num/den` for a polynomial even in `s`.
    /// Returns `None` when an odd power of `s` occurs.
    pub fn substitute_square(&self, s: usize, num: &BigInt, den: &BigInt) -> Option<(Poly, u16)> {
        if self.terms.keys().any(|e| e[s] % 2 == 1) {
            return None;
        }
        let half = Poly {
            terms: self
                .terms
                .iter()
                .map(|(e, c)| {
                    let mut e2 = *e;
                    e2[s] /= 2;
                    (e2, c.clone())
                })
                .collect(),
        };
        Some(half.substitute(s, num, den))
    }

    /// Replaces `s²` by `c · s²` in a polynomial even in `s`.
    pub fn rescale_square(&self, s: usize, c: &BigRational) -> Option<(Poly, BigInt)> {
        if self.terms.keys().any(|e| e[s] % 2 == 1) {
            return None;
        }
        let d = self.degree_in(s) as u32 / 2;
        let mut r = Poly::zero();
        for (e, x) in &self.terms {
            let k = e[s] as u32 / 2;
            r.add_term(*e, x * c.numer().pow(k) * c.denom().pow(d - k));
        }
        Some((r, c.denom().pow(d)))
    }

    /// Moves the exponents of symbol `from` onto symbol `to`.
    pub fn rename(&self, from: usize, to: usize) -> Poly {
        Poly::from_terms(self.terms.iter().map(|(e, c)| {
            let mut e2 = *e;
            let x = e2[from];
            e2[from] = 0;
            e2[to] += x;
            (e2, c.clone())
        }))
    }

    pub fn eval_rational(&self, values: &[Option<BigRational>; NSYM]) -> Option<BigRational> {
        let mut acc = BigRational::zero();
        for (e, c) in &self.terms {
            let mut t = BigRational::from_integer(c.clone());
            for i in 0..NSYM {
                if e[i] > 0 {
                    let v = values[i].as_ref()?;
                    t *= num_traits::pow(v.clone(), e[i] as usize);
                }
            }
            acc += t;
        }
        Some(acc)
    }

    /// Formats with `b²` written as `β` when every exponent of `b` is even.
    pub fn display_beta(&self) -> Option<String> {
        if self.terms.keys().any(|e| e[0] % 2 == 1) {
            return None;
        }
        Some(self.format(true))
    }

    fn format(&self, beta: bool) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut ts: Vec<(&Exponents, &BigInt)> = self.terms.iter().collect();
        ts.sort_by_key(|(e, _)| (e.iter().map(|&x| x as u32).sum::<u32>(), **e));
        let mut s = String::new();
        for (i, (e, c)) in ts.iter().enumerate() {
            let mut factors = Vec::new();
            for (k, &x) in e.iter().enumerate() {
                if x == 0 {
                    continue;
                }
                let (name, x) = if beta && k == 0 {
                    ("β", x / 2)
                } else {
                    (Symbol::ALL[k].name(), x)
                };
                if x == 1 {
                    factors.push(name.to_string());
                } else {
                    factors.push(format!("{name}^{x}"));
                }
            }
            let neg = c.is_negative();
            let a = c.abs();
            if i == 0 {
                if neg {
                    s.push('-');
                }
            } else {
                s.push(if neg { '-' } else { '+' });
            }
            let sep = if beta { "" } else { "*" };
            if factors.is_empty() {
                s.push_str(&a.to_string());
            } else if a.is_one() {
                s.push_str(&factors.join("*"));
            } else {
                s.push_str(&format!("{a}{sep}{}", factors.join("*")));
            }
        }
        s
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.format(false))
    }
}

/// Rebuilds a polynomial in `s` from its value at `x`, reading integer
/// coefficients as balanced base-`x` digits.
fn interpolate(h: &Poly, s: usize, x: &BigInt) -> Poly {
    let half = x / 2;
    let mut h = h.clone();
    let mut out = Poly::zero();
    let mut i = 0;
    while !h.is_zero() {
        let mut digit = Poly::zero();
        for (e, c) in &h.terms {
            let mut d = c.mod_floor(x);
            if d > half {
                d -= x;
            }
            digit.add_term(*e, d);
        }
        h = h.sub(&digit).div_int(x);
        out = out.add(&digit.shift(s, i));
        i += 1;
    }
    out
}

fn heuristic_gcd(f: &Poly, g: &Poly) -> Option<Poly> {
    let (cf, cg) = (f.content(), g.content());
    let c = cf.gcd(&cg);
    let vars = f.variables() | g.variables();
    if vars == 0 {
        return Some(Poly::constant(c));
    }
    let s = 7 - vars.leading_zeros() as usize;
    let (f, g) = (f.div_int(&cf), g.div_int(&cg));
    let (fn_, gn) = (f.max_norm(), g.max_norm());
    let bound: BigInt = BigInt::from(2) * fn_.clone().min(gn.clone()) + 29;
    let lf = f.leading_coefficient().abs();
    let lg = g.leading_coefficient().abs();
    // x above twice the smaller norm makes a divisibility-checked candidate exact.
    let mut x = bound.max(BigInt::from(2) * (&fn_ / &lf).min(&gn / &lg) + 2);
    for _ in 0..6 {
        let (ff, gg) = (f.eval_int(s, &x), g.eval_int(s, &x));
        if !ff.is_zero() && !gg.is_zero() {
            let h = interpolate(&heuristic_gcd(&ff, &gg)?, s, &x);
            let h = h.div_int(&h.content()).normalize_sign();
            if f.div_exact(&h).is_some() && g.div_exact(&h).is_some() {
                return Some(h.scale(&c));
            }
        }
        x = BigInt::from(73794) * &x * x.sqrt().sqrt() / 27011;
    }
    None
}

/// Greatest common divisor with positive leading coefficient.
pub fn gcd(a: &Poly, b: &Poly) -> Poly {
    if a.is_zero() {
        return b.clone().normalize_sign();
    }
    if b.is_zero() {
        return a.clone().normalize_sign();
    }
    if a.is_constant() || b.is_constant() {
        return Poly::constant(a.content().gcd(&b.content()));
    }
    if a == b {
        return a.clone().normalize_sign();
    }
    match heuristic_gcd(a, b) {
        Some(g) => g.normalize_sign(),
        None => gcd_prs(a, b),
    }
}

fn gcd_prs(a: &Poly, b: &Poly) -> Poly {
    if a.is_zero() {
        return b.clone().normalize_sign();
    }
    if b.is_zero() {
        return a.clone().normalize_sign();
    }
    if a.is_constant() || b.is_constant() {
        return Poly::constant(a.content().gcd(&b.content()));
    }
    if a == b {
        return a.clone().normalize_sign();
    }
    let (va, vb) = (a.variables(), b.variables());
    let s = (va | vb).trailing_zeros() as usize;
    if va & (1 << s) == 0 {
        return gcd(a, &b.content_in(s));
    }
    if vb & (1 << s) == 0 {
        return gcd(&a.content_in(s), b);
    }
    let (ca, cb) = (a.content_in(s), b.content_in(s));
    let c = gcd(&ca, &cb);
    let mut p = a.div_exact(&ca).expect("content divides");
    let mut q = b.div_exact(&cb).expect("content divides");
    if p.degree_in(s) < q.degree_in(s) {
        std::mem::swap(&mut p, &mut q);
    }
    let g = loop {
        let r = p.pseudo_remainder(&q, s);
        if r.is_zero() {
            break q.primitive_in(s);
        }
        if r.degree_in(s) == 0 {
            break Poly::one();
        }
        p = q;
        q = r.primitive_in(s);
    };
    c.mul(&g).normalize_sign()
}
