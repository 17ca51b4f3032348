//! Canonical rational functions over ℤ[b, u, v, r].

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, ToPrimitive, Zero};
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use serde_json::{json, Map, Value};

use super::poly::{gcd, Exponents, Poly, NSYM};
use super::{CoeffError, Field, Symbol};

/// A value `num / den` with `gcd(num, den) = 1` and the lexicographic leading
/// coefficient of `den` positive. Zero is stored as `0 / 1`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct ParamScalar {
    num: Poly,
    den: Poly,
}

/// One entry of a specialization: either a symbol's value or its square's.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Assignment {
    Value(Symbol, BigRational),
    Square(Symbol, BigRational),
}

impl ParamScalar {
    pub fn new(num: Poly, den: Poly) -> Result<Self, CoeffError> {
        if den.is_zero() {
            return Err(CoeffError::DivisionByZero);
        }
        if num.is_zero() {
            return Ok(ParamScalar::zero_value());
        }
        let g = gcd(&num, &den);
        let (mut num, mut den) = if g.is_one() {
            (num, den)
        } else {
            (
                num.div_exact(&g).expect("gcd divides"),
                den.div_exact(&g).expect("gcd divides"),
            )
        };
        if den.leading_coefficient().is_negative() {
            num = num.neg();
            den = den.neg();
        }
        Ok(ParamScalar { num, den })
    }

    fn zero_value() -> Self {
        ParamScalar {
            num: Poly::zero(),
            den: Poly::one(),
        }
    }

    pub fn from_poly(p: Poly) -> Self {
        ParamScalar {
            num: p,
            den: Poly::one(),
        }
    }

    pub fn symbol(s: Symbol) -> Self {
        ParamScalar::from_poly(Poly::symbol(s))
    }

    pub fn integer(i: i64) -> Self {
        ParamScalar::from_poly(Poly::constant(BigInt::from(i)))
    }

    pub fn rational(n: i64, d: i64) -> Self {
        <ParamScalar as Field>::from_rational(&BigRational::new(n.into(), d.into()))
    }

    pub fn numerator(&self) -> &Poly {
        &self.num
    }

    pub fn denominator(&self) -> &Poly {
        &self.den
    }

    pub fn pow(&self, k: i32) -> Self {
        let base = if k < 0 {
            self.inv_checked().expect("negative power of zero")
        } else {
            self.clone()
        };
        ParamScalar {
            num: base.num.pow(k.unsigned_abs()),
            den: base.den.pow(k.unsigned_abs()),
        }
    }

    fn inv_checked(&self) -> Option<Self> {
        if self.num.is_zero() {
            return None;
        }
        let (mut n, mut d) = (self.den.clone(), self.num.clone());
        if d.leading_coefficient().is_negative() {
            n = n.neg();
            d = d.neg();
        }
        Some(ParamScalar { num: n, den: d })
    }

    /// The constant value, if the scalar involves no symbol.
    pub fn as_rational(&self) -> Option<BigRational> {
        let n = self.num.as_constant()?;
        let d = self.den.as_constant()?;
        Some(BigRational::new(n, d))
    }

    pub fn is_constant(&self) -> bool {
        self.num.is_constant() && self.den.is_constant()
    }

    /// Substitutes one assignment, leaving other symbols formal.
    pub fn substitute(&self, a: &Assignment) -> Result<ParamScalar, CoeffError> {
        let (s, value, square) = match a {
            Assignment::Value(s, v) => (*s, v, false),
            Assignment::Square(s, v) => (*s, v, true),
        };
        let i = s.index();
        let (n, d) = (value.numer(), value.denom());
        let sub = |p: &Poly| -> Result<(Poly, u16), CoeffError> {
            if square {
                p.substitute_square(i, n, d)
                    .ok_or(CoeffError::OddPower(s.name()))
            } else {
                Ok(p.substitute(i, n, d))
            }
        };
        let (pn, dn) = sub(&self.num)?;
        let (pd, dd) = sub(&self.den)?;
        if pd.is_zero() {
            return Err(CoeffError::Resonance {
                denominator: self.denominator_text(square),
            });
        }
        let dpow = |k: u16| Poly::constant(d.pow(k as u32));
        ParamScalar::new(pn.mul(&dpow(dd)), pd.mul(&dpow(dn)))
    }

    fn denominator_text(&self, beta: bool) -> String {
        if beta {
            if let Some(s) = self.den.display_beta() {
                return s;
            }
        }
        self.den.to_string()
    }

    /// Evaluates exactly once every present symbol is assigned.
    pub fn specialize(&self, assignments: &[Assignment]) -> Result<BigRational, CoeffError> {
        let mut x = self.clone();
        for a in assignments {
            x = x.substitute(a)?;
        }
        match x.as_rational() {
            Some(r) => Ok(r),
            None => {
                let vars = x.num.variables() | x.den.variables();
                let i = vars.trailing_zeros() as usize;
                Err(CoeffError::Unassigned(Symbol::ALL[i].name()))
            }
        }
    }

    /// Replaces `s²` by `c·s²`; used to move between couplings b² and b²/2.
    pub fn rescale_square(&self, s: Symbol, c: &BigRational) -> Result<ParamScalar, CoeffError> {
        let i = s.index();
        let (n, fn_) = self.num.rescale_square(i, c).ok_or(CoeffError::OddPower(s.name()))?;
        let (d, fd) = self.den.rescale_square(i, c).ok_or(CoeffError::OddPower(s.name()))?;
        ParamScalar::new(n.scale(&fd), d.scale(&fn_))
    }

    pub fn rename(&self, from: Symbol, to: Symbol) -> ParamScalar {
        ParamScalar::new(self.num.rename(from.index(), to.index()), self.den.rename(from.index(), to.index()))
            .expect("renaming keeps the denominator nonzero")
    }

    /// Text with `b²` shown as `β` when the value is even in `b`.
    pub fn display_beta(&self) -> Option<String> {
        let n = self.num.display_beta()?;
        let d = self.den.display_beta()?;
        Some(if self.den.is_one() {
            n
        } else {
            format!("({n})/({d})")
        })
    }

    pub fn to_json(&self) -> Value {
        json!({ "num": poly_to_json(&self.num), "den": poly_to_json(&self.den) })
    }

    pub fn from_json(v: &Value) -> Result<Self, CoeffError> {
        let num = poly_from_json(v.get("num").ok_or_else(|| CoeffError::Json("missing num".into()))?)?;
        let den = poly_from_json(v.get("den").ok_or_else(|| CoeffError::Json("missing den".into()))?)?;
        ParamScalar::new(num, den)
    }
}

fn poly_to_json(p: &Poly) -> Value {
    let mut ts: Vec<(&Exponents, &BigInt)> = p.terms().collect();
    ts.sort_by_key(|(e, _)| (e.iter().map(|&x| x as u32).sum::<u32>(), **e));
    Value::Array(
        ts.into_iter()
            .map(|(e, c)| {
                let mut m = Map::new();
                for (i, &x) in e.iter().enumerate() {
                    if x > 0 {
                        m.insert(Symbol::ALL[i].name().to_string(), json!(x));
                    }
                }
                let coef = match c.to_i64() {
                    Some(x) => json!(x),
                    None => json!(c.to_string()),
                };
                json!([coef, Value::Object(m)])
            })
            .collect(),
    )
}

fn poly_from_json(v: &Value) -> Result<Poly, CoeffError> {
    let bad = |m: &str| CoeffError::Json(m.to_string());
    let arr = v.as_array().ok_or_else(|| bad("term list must be an array"))?;
    let mut terms = Vec::new();
    for t in arr {
        let pair = t.as_array().filter(|a| a.len() == 2).ok_or_else(|| bad("term must be [coef, exponents]"))?;
        let c: BigInt = match &pair[0] {
            Value::Number(n) => n.as_i64().map(BigInt::from).ok_or_else(|| bad("integer coefficient expected"))?,
            Value::String(s) => s.parse().map_err(|_| bad("integer coefficient expected"))?,
            _ => return Err(bad("integer coefficient expected")),
        };
        let mut e = [0u16; NSYM];
        let obj = pair[1].as_object().ok_or_else(|| bad("exponents must be an object"))?;
        for (k, x) in obj {
            let s = Symbol::from_name(k).ok_or_else(|| bad("unknown symbol"))?;
            e[s.index()] = x.as_u64().and_then(|x| u16::try_from(x).ok()).ok_or_else(|| bad("bad exponent"))?;
        }
        terms.push((e, c));
    }
    Ok(Poly::from_terms(terms))
}

impl Serialize for ParamScalar {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        self.to_json().serialize(s)
    }
}

impl<'de> Deserialize<'de> for ParamScalar {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let v = Value::deserialize(d)?;
        ParamScalar::from_json(&v).map_err(D::Error::custom)
    }
}

impl fmt::Display for ParamScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            write!(f, "{}", self.num)
        } else if self.num.num_terms() == 1 && self.den.num_terms() == 1 {
            write!(f, "{}/{}", self.num, self.den)
        } else {
            write!(f, "({})/({})", self.num, self.den)
        }
    }
}

impl fmt::Debug for ParamScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl Field for ParamScalar {
    fn zero() -> Self {
        ParamScalar::zero_value()
    }

    fn one() -> Self {
        ParamScalar::from_poly(Poly::one())
    }

    fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    fn add(&self, o: &Self) -> Self {
        if self.num.is_zero() {
            return o.clone();
        }
        if o.num.is_zero() {
            return self.clone();
        }
        if self.den == o.den {
            return ParamScalar::new(self.num.add(&o.num), self.den.clone()).expect("nonzero denominator");
        }
        let g = gcd(&self.den, &o.den);
        let a = self.den.div_exact(&g).expect("gcd divides");
        let b = o.den.div_exact(&g).expect("gcd divides");
        let num = self.num.mul(&b).add(&o.num.mul(&a));
        if num.is_zero() {
            return ParamScalar::zero_value();
        }
        let h = gcd(&num, &g);
        let (num, gh) = if h.is_one() {
            (num, g)
        } else {
            (num.div_exact(&h).expect("gcd divides"), g.div_exact(&h).expect("gcd divides"))
        };
        let mut den = a.mul(&b).mul(&gh);
        let mut num = num;
        if den.leading_coefficient().is_negative() {
            num = num.neg();
            den = den.neg();
        }
        ParamScalar { num, den }
    }

    fn sub(&self, o: &Self) -> Self {
        Field::add(self, &Field::neg(o))
    }

    fn mul(&self, o: &Self) -> Self {
        if self.num.is_zero() || o.num.is_zero() {
            return ParamScalar::zero_value();
        }
        let g1 = gcd(&self.num, &o.den);
        let g2 = gcd(&o.num, &self.den);
        let q = |p: &Poly, g: &Poly| if g.is_one() { p.clone() } else { p.div_exact(g).expect("gcd divides") };
        let mut num = q(&self.num, &g1).mul(&q(&o.num, &g2));
        let mut den = q(&self.den, &g2).mul(&q(&o.den, &g1));
        if den.leading_coefficient().is_negative() {
            num = num.neg();
            den = den.neg();
        }
        ParamScalar { num, den }
    }

    fn neg(&self) -> Self {
        ParamScalar {
            num: self.num.neg(),
            den: self.den.clone(),
        }
    }

    fn inv(&self) -> Option<Self> {
        self.inv_checked()
    }

    fn from_rational(r: &BigRational) -> Self {
        if Zero::is_zero(r) {
            return ParamScalar::zero_value();
        }
        let (n, d) = (r.numer().clone(), r.denom().clone());
        let (n, d) = if d.is_negative() { (-n, -d) } else { (n, d) };
        ParamScalar {
            num: Poly::constant(n),
            den: Poly::constant(d),
        }
    }

    fn is_one(&self) -> bool {
        self.num.is_one() && self.den.is_one()
    }
}

impl Add for &ParamScalar {
    type Output = ParamScalar;
    fn add(self, o: &ParamScalar) -> ParamScalar {
        Field::add(self, o)
    }
}

impl Sub for &ParamScalar {
    type Output = ParamScalar;
    fn sub(self, o: &ParamScalar) -> ParamScalar {
        Field::sub(self, o)
    }
}

impl Mul for &ParamScalar {
    type Output = ParamScalar;
    fn mul(self, o: &ParamScalar) -> ParamScalar {
        Field::mul(self, o)
    }
}

impl Neg for &ParamScalar {
    type Output = ParamScalar;
    fn neg(self) -> ParamScalar {
        Field::neg(self)
    }
}

impl Default for ParamScalar {
    fn default() -> Self {
        ParamScalar::zero_value()
    }
}

impl From<i64> for ParamScalar {
    fn from(i: i64) -> Self {
        ParamScalar::integer(i)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coeffield::rat;

    fn b() -> ParamScalar {
        ParamScalar::symbol(Symbol::B)
    }
    fn i(x: i64) -> ParamScalar {
        ParamScalar::integer(x)
    }

    #[test]
    fn specialize_examples() {
        let x = &i(4) - &(&i(2) * &b().pow(2));
        assert_eq!(x.specialize(&[Assignment::Value(Symbol::B, rat(1, 1))]).unwrap(), rat(2, 1));
        let gap = &i(2) + &(&i(2) * &b().pow(2));
        let y = gap.inv().unwrap();
        let e = y.specialize(&[Assignment::Square(Symbol::B, rat(-1, 1))]).unwrap_err();
        assert_eq!(e, CoeffError::Resonance { denominator: "2+2β".into() });
        let z = Field::div(&b().pow(2), &b().pow(2)).unwrap();
        assert!(Field::is_one(&z));
        assert_eq!(z.specialize(&[]).unwrap(), rat(1, 1));
    }

    #[test]
    fn canonical_form() {
        let x = ParamScalar::new(Poly::symbol(Symbol::B).scale(&BigInt::from(-2)), Poly::constant(BigInt::from(-4))).unwrap();
        assert_eq!(x.to_string(), "b/2");
        let y = &(&b() + &i(1)) * &Field::inv(&(&b() + &i(1))).unwrap();
        assert!(Field::is_one(&y));
        let w = Field::div(&(&b().pow(2) - &i(1)), &(&b() - &i(1))).unwrap();
        assert_eq!(w, &b() + &i(1));
    }

    #[test]
    fn json_round_trip() {
        let x = Field::div(&(&i(2) - &(&i(4) * &b().pow(2))), &(&b() + &i(3))).unwrap();
        let v = x.to_json();
        assert_eq!(v["num"], json!([[2, {}], [-4, {"b": 2}]]));
        assert_eq!(ParamScalar::from_json(&v).unwrap(), x);
        let s = serde_json::to_string(&x).unwrap();
        assert_eq!(serde_json::from_str::<ParamScalar>(&s).unwrap(), x);
    }

    #[test]
    fn square_rescaling() {
        let x = &i(4) - &(&i(2) * &b().pow(2));
        let y = x.rescale_square(Symbol::B, &rat(1, 2)).unwrap();
        assert_eq!(y, &i(4) - &b().pow(2));
        assert!(b().rescale_square(Symbol::B, &rat(1, 2)).is_err());
    }
}
