use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use serde_json::{json, Value};

use super::coeff::Coeff;
use crate::error::{Error, Result};

/// A polynomial in `x_1..x_n` with exact integer coefficients. No zero
/// coefficient is ever stored, so derived equality is equality of polynomials.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SparsePoly {
    n: usize,
    terms: BTreeMap<Vec<u32>, Coeff>,
}

impl SparsePoly {
    pub fn zero(n: usize) -> Self {
        SparsePoly { n, terms: BTreeMap::new() }
    }

    pub fn one(n: usize) -> Self {
        SparsePoly::monomial(vec![0; n], Coeff::ONE)
    }

    pub fn monomial(exp: Vec<u32>, coeff: Coeff) -> Self {
        let mut p = SparsePoly::zero(exp.len());
        p.add_term(exp, &coeff);
        p
    }

    /// `x_{i+1}` for 0-based `i`.
    pub fn variable(n: usize, i: usize) -> Self {
        let mut exp = vec![0; n];
        exp[i] = 1;
        SparsePoly::monomial(exp, Coeff::ONE)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Terms in descending lexicographic order of exponent.
    pub fn terms(&self) -> impl Iterator<Item = (&[u32], &Coeff)> + '_ {
        self.terms.iter().rev().map(|(e, c)| (e.as_slice(), c))
    }

    pub fn coefficient(&self, exp: &[u32]) -> Coeff {
        self.terms.get(exp).cloned().unwrap_or(Coeff::ZERO)
    }

    /// Sum of all coefficients, i.e. the value at `x = (1, ..., 1)`.
    pub fn coefficient_sum(&self) -> Coeff {
        self.terms.values().fold(Coeff::ZERO, |acc, c| &acc + c)
    }

    /// Adds `coeff * x^exp` in place.
    pub fn add_term(&mut self, exp: Vec<u32>, coeff: &Coeff) {
        assert_eq!(exp.len(), self.n, "exponent length must equal the variable count");
        if coeff.is_zero() {
            return;
        }
        match self.terms.entry(exp) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(coeff.clone());
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                let s = o.get() + coeff;
                if s.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = s;
                }
            }
        }
    }

    fn check(&self, other: &SparsePoly) -> Result<()> {
        if self.n == other.n {
            Ok(())
        } else {
            Err(Error::VariableMismatch(self.n, other.n))
        }
    }

    pub fn try_add(&self, other: &SparsePoly) -> Result<SparsePoly> {
        self.check(other)?;
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(e.clone(), c);
        }
        Ok(out)
    }

    pub fn try_sub(&self, other: &SparsePoly) -> Result<SparsePoly> {
        self.try_add(&-other)
    }

    pub fn try_mul(&self, other: &SparsePoly) -> Result<SparsePoly> {
        self.check(other)?;
        let mut out = SparsePoly::zero(self.n);
        for (e1, c1) in &self.terms {
            for (e2, c2) in &other.terms {
                let e = e1.iter().zip(e2).map(|(a, b)| a + b).collect();
                out.add_term(e, &(c1 * c2));
            }
        }
        Ok(out)
    }

    pub fn scale(&self, c: &Coeff) -> SparsePoly {
        let mut out = SparsePoly::zero(self.n);
        for (e, c0) in &self.terms {
            out.add_term(e.clone(), &(c0 * c));
        }
        out
    }

    /// Exchanges the variables with 0-based indices `i` and `j`.
    pub fn swap_vars(&self, i: usize, j: usize) -> SparsePoly {
        let mut out = SparsePoly::zero(self.n);
        for (e, c) in &self.terms {
            let mut e = e.clone();
            e.swap(i, j);
            out.add_term(e, c);
        }
        out
    }

    /// Exact quotient by `x_i - x_j` (0-based), or an internal error when the
    /// division leaves a remainder.
    pub fn div_by_difference(&self, i: usize, j: usize) -> Result<SparsePoly> {
        let mut rest = self.clone();
        let mut quot = SparsePoly::zero(self.n);
        // peel off the term with the highest power of x_i until none is left
        while let Some((e, c)) = rest.terms.iter().filter(|(e, _)| e[i] > 0).max_by_key(|(e, _)| e[i]) {
            let (mut e, c) = (e.clone(), c.clone());
            e[i] -= 1;
            quot.add_term(e.clone(), &c);
            let mut lead = e.clone();
            lead[i] += 1;
            rest.add_term(lead, &-&c);
            e[j] += 1;
            rest.add_term(e, &c);
        }
        if rest.is_zero() {
            Ok(quot)
        } else {
            Err(Error::Internal(format!("{self} is not divisible by x{} - x{}", i + 1, j + 1)))
        }
    }

    pub fn to_json_value(&self) -> Value {
        let terms: Vec<Value> = self
            .terms()
            .map(|(e, c)| {
                let coeff = match c.as_i64() {
                    Some(v) => json!(v),
                    None => json!(c.to_string()),
                };
                json!({"exp": e, "coeff": coeff})
            })
            .collect();
        json!({"n": self.n, "terms": terms})
    }

    /// Reads the JSON form; big coefficients may be given as decimal strings.
    pub fn from_json_value(v: &Value) -> Result<SparsePoly> {
        let bad = |m: &str| Error::Parse(format!("polynomial JSON: {m}"));
        let n = v["n"].as_u64().ok_or_else(|| bad("missing n"))? as usize;
        let mut p = SparsePoly::zero(n);
        for t in v["terms"].as_array().ok_or_else(|| bad("missing terms"))? {
            let exp: Vec<u32> = serde_json::from_value(t["exp"].clone()).map_err(|_| bad("bad exp"))?;
            if exp.len() != n {
                return Err(bad("exponent length differs from n"));
            }
            let coeff = match &t["coeff"] {
                Value::Number(x) => Coeff::from(x.as_i64().ok_or_else(|| bad("bad coeff"))?),
                Value::String(s) => Coeff::from(s.parse::<BigInt>().map_err(|_| bad("bad coeff"))?),
                _ => return Err(bad("bad coeff")),
            };
            p.add_term(exp, &coeff);
        }
        Ok(p)
    }
}

impl Neg for &SparsePoly {
    type Output = SparsePoly;

    fn neg(self) -> SparsePoly {
        self.scale(&Coeff::Small(-1))
    }
}

/// Panics when the variable counts differ; see [`SparsePoly::try_add`].
impl Add for &SparsePoly {
    type Output = SparsePoly;

    fn add(self, rhs: &SparsePoly) -> SparsePoly {
        self.try_add(rhs).expect("variable counts must agree")
    }
}

/// Panics when the variable counts differ; see [`SparsePoly::try_sub`].
impl Sub for &SparsePoly {
    type Output = SparsePoly;

    fn sub(self, rhs: &SparsePoly) -> SparsePoly {
        self.try_sub(rhs).expect("variable counts must agree")
    }
}

/// Panics when the variable counts differ; see [`SparsePoly::try_mul`].
impl Mul for &SparsePoly {
    type Output = SparsePoly;

    fn mul(self, rhs: &SparsePoly) -> SparsePoly {
        self.try_mul(rhs).expect("variable counts must agree")
    }
}

impl fmt::Display for SparsePoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (k, (e, c)) in self.terms().enumerate() {
            let neg = c.is_negative();
            let abs = if neg { -c } else { c.clone() };
            match (k, neg) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            let vars: Vec<String> = e
                .iter()
                .enumerate()
                .filter(|(_, &p)| p > 0)
                .map(|(i, &p)| if p == 1 { format!("x{}", i + 1) } else { format!("x{}^{p}", i + 1) })
                .collect();
            match (vars.is_empty(), abs.is_one()) {
                (true, _) => write!(f, "{abs}")?,
                (false, true) => f.write_str(&vars.join("*"))?,
                (false, false) => write!(f, "{abs}*{}", vars.join("*"))?,
            }
        }
        Ok(())
    }
}
