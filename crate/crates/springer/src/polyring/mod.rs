//! Exact sparse multivariate polynomials over arbitrary-precision integers
//! in the three named variable families `y`, `u`, `t`.
//!
//! Polynomials are kept in a unique canonical form (sorted terms, no zero
//! coefficients, no zero exponents), so structural equality is mathematical
//! equality. The term order is graded lexicographic: higher total degree
//! first, ties broken by the exponent of the earliest variable in the
//! sequence `y1, …, yn, u1, …, uℓ, t1, …, tn` (a larger exponent earlier
//! makes a larger monomial).

mod parse;

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::Error;
use crate::Result;

/// Variable family. The declaration order is the term-order priority.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Family {
    Y,
    U,
    T,
}

impl Family {
    pub fn letter(self) -> char {
        match self {
            Family::Y => 'y',
            Family::U => 'u',
            Family::T => 't',
        }
    }

    pub fn from_letter(c: char) -> Option<Family> {
        match c {
            'y' => Some(Family::Y),
            'u' => Some(Family::U),
            't' => Some(Family::T),
            _ => None,
        }
    }
}

/// A variable `y_k`, `u_k`, or `t_k` with 1-based index.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Var {
    pub family: Family,
    pub index: u32,
}

impl Var {
    pub fn new(family: Family, index: u32) -> Var {
        assert!(index >= 1, "variable indices are 1-based");
        Var { family, index }
    }

    pub fn y(index: usize) -> Var {
        Var::new(Family::Y, index as u32)
    }

    pub fn u(index: usize) -> Var {
        Var::new(Family::U, index as u32)
    }

    pub fn t(index: usize) -> Var {
        Var::new(Family::T, index as u32)
    }
}

impl fmt::Display for Var {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.family.letter(), self.index)
    }
}

/// The ambient variable bounds: `n` for the `y` and `t` families, `ell`
/// for the `u` family.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct VarSpace {
    pub n: usize,
    pub ell: usize,
}

impl VarSpace {
    pub fn new(n: usize, ell: usize) -> VarSpace {
        VarSpace { n, ell }
    }

    pub fn contains(&self, v: Var) -> bool {
        let bound = match v.family {
            Family::Y | Family::T => self.n,
            Family::U => self.ell,
        };
        v.index as usize <= bound
    }

    /// Checks every variable of `p` against the bounds.
    pub fn check(&self, p: &Poly) -> Result<()> {
        for (m, _) in p.terms() {
            for &(v, _) in m.exponents() {
                if !self.contains(v) {
                    let bound = match v.family {
                        Family::Y | Family::T => self.n,
                        Family::U => self.ell,
                    };
                    return Err(Error::IndexOutOfRange {
                        index: v.index as usize,
                        bound,
                    });
                }
            }
        }
        Ok(())
    }
}

/// A monomial: a sparse exponent map, sorted by variable, no zero exponents.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Monomial {
    exps: Vec<(Var, u32)>,
}

impl Monomial {
    pub fn one() -> Monomial {
        Monomial { exps: Vec::new() }
    }

    pub fn var(v: Var) -> Monomial {
        Monomial { exps: vec![(v, 1)] }
    }

    /// Builds from arbitrary (variable, exponent) pairs, merging duplicates
    /// and dropping zero exponents.
    pub fn from_pairs<I: IntoIterator<Item = (Var, u32)>>(pairs: I) -> Monomial {
        let mut map: BTreeMap<Var, u32> = BTreeMap::new();
        for (v, e) in pairs {
            if e > 0 {
                *map.entry(v).or_insert(0) += e;
            }
        }
        Monomial {
            exps: map.into_iter().collect(),
        }
    }

    pub fn exponents(&self) -> &[(Var, u32)] {
        &self.exps
    }

    pub fn exponent_of(&self, v: Var) -> u32 {
        self.exps
            .binary_search_by_key(&v, |&(w, _)| w)
            .map(|i| self.exps[i].1)
            .unwrap_or(0)
    }

    pub fn degree(&self) -> u32 {
        self.exps.iter().map(|&(_, e)| e).sum()
    }

    pub fn is_one(&self) -> bool {
        self.exps.is_empty()
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        let mut exps = Vec::with_capacity(self.exps.len() + other.exps.len());
        let (mut i, mut j) = (0, 0);
        while i < self.exps.len() && j < other.exps.len() {
            match self.exps[i].0.cmp(&other.exps[j].0) {
                Ordering::Less => {
                    exps.push(self.exps[i]);
                    i += 1;
                }
                Ordering::Greater => {
                    exps.push(other.exps[j]);
                    j += 1;
                }
                Ordering::Equal => {
                    exps.push((self.exps[i].0, self.exps[i].1 + other.exps[j].1));
                    i += 1;
                    j += 1;
                }
            }
        }
        exps.extend_from_slice(&self.exps[i..]);
        exps.extend_from_slice(&other.exps[j..]);
        Monomial { exps }
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Monomial {
    /// Graded lexicographic order; see the module docs.
    fn cmp(&self, other: &Self) -> Ordering {
        match self.degree().cmp(&other.degree()) {
            Ordering::Equal => {}
            ord => return ord,
        }
        let (mut i, mut j) = (0, 0);
        loop {
            match (self.exps.get(i), other.exps.get(j)) {
                (None, None) => return Ordering::Equal,
                // the other has a positive exponent on an earlier variable
                (None, Some(_)) => return Ordering::Less,
                (Some(_), None) => return Ordering::Greater,
                (Some(&(v1, e1)), Some(&(v2, e2))) => match v1.cmp(&v2) {
                    Ordering::Less => return Ordering::Greater,
                    Ordering::Greater => return Ordering::Less,
                    Ordering::Equal => {
                        if e1 != e2 {
                            return e1.cmp(&e2);
                        }
                        i += 1;
                        j += 1;
                    }
                },
            }
        }
    }
}

/// A polynomial in canonical sparse form: monomial → nonzero coefficient.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct Poly {
    terms: BTreeMap<Monomial, BigInt>,
}

impl Poly {
    pub fn zero() -> Poly {
        Poly {
            terms: BTreeMap::new(),
        }
    }

    pub fn one() -> Poly {
        Poly::constant(BigInt::one())
    }

    pub fn constant<C: Into<BigInt>>(c: C) -> Poly {
        let c = c.into();
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(Monomial::one(), c);
        }
        Poly { terms }
    }

    pub fn var(v: Var) -> Poly {
        Poly::from_term(Monomial::var(v), BigInt::one())
    }

    pub fn from_term(m: Monomial, c: BigInt) -> Poly {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(m, c);
        }
        Poly { terms }
    }

    pub fn from_terms<I: IntoIterator<Item = (Monomial, BigInt)>>(iter: I) -> Poly {
        let mut p = Poly::zero();
        for (m, c) in iter {
            p.add_term(m, c);
        }
        p
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Terms in ascending graded-lex order.
    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &BigInt)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, m: &Monomial) -> BigInt {
        self.terms.get(m).cloned().unwrap_or_else(BigInt::zero)
    }

    /// Total degree; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<u32> {
        self.terms.keys().map(|m| m.degree()).max()
    }

    fn add_term(&mut self, m: Monomial, c: BigInt) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(m) {
            Entry::Vacant(e) => {
                e.insert(c);
            }
            Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    pub fn scale(&self, c: &BigInt) -> Poly {
        if c.is_zero() {
            return Poly::zero();
        }
        Poly {
            terms: self
                .terms
                .iter()
                .map(|(m, a)| (m.clone(), a * c))
                .collect(),
        }
    }

    pub fn pow(&self, e: u32) -> Poly {
        let mut acc = Poly::one();
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    /// The sum of terms of total degree exactly `d`.
    pub fn homogeneous_component(&self, d: u32) -> Poly {
        Poly {
            terms: self
                .terms
                .iter()
                .filter(|(m, _)| m.degree() == d)
                .map(|(m, c)| (m.clone(), c.clone()))
                .collect(),
        }
    }

    pub fn uses_family(&self, fam: Family) -> bool {
        self.terms
            .keys()
            .any(|m| m.exponents().iter().any(|&(v, _)| v.family == fam))
    }

    /// Largest index used in `fam`, 0 when the family is absent.
    pub fn max_index(&self, fam: Family) -> u32 {
        self.terms
            .keys()
            .flat_map(|m| m.exponents().iter())
            .filter(|&&(v, _)| v.family == fam)
            .map(|&(v, _)| v.index)
            .max()
            .unwrap_or(0)
    }

    /// Applies a substitution homomorphism: each assigned variable is
    /// replaced by its image polynomial, unassigned variables are fixed.
    pub fn substitute(&self, sigma: &Substitution) -> Poly {
        let mut power_cache: BTreeMap<(Var, u32), Poly> = BTreeMap::new();
        let mut out = Poly::zero();
        for (m, c) in &self.terms {
            let mut term = Poly::constant(c.clone());
            for &(v, e) in m.exponents() {
                match sigma.image(v) {
                    Some(img) => {
                        let key = (v, e);
                        let powered = power_cache
                            .entry(key)
                            .or_insert_with(|| img.pow(e))
                            .clone();
                        term = &term * &powered;
                    }
                    None => {
                        term = &term * &Poly::from_term(Monomial::from_pairs([(v, e)]), BigInt::one());
                    }
                }
            }
            out = &out + &term;
        }
        out
    }

    /// Evaluates at an integer point; every variable must be assigned.
    pub fn eval_int<F: Fn(Var) -> BigInt>(&self, point: F) -> BigInt {
        let mut acc = BigInt::zero();
        for (m, c) in &self.terms {
            let mut term = c.clone();
            for &(v, e) in m.exponents() {
                term *= point(v).pow(e);
            }
            acc += term;
        }
        acc
    }
}

impl Add for &Poly {
    type Output = Poly;
    fn add(self, rhs: &Poly) -> Poly {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(m.clone(), c.clone());
        }
        out
    }
}

impl Sub for &Poly {
    type Output = Poly;
    fn sub(self, rhs: &Poly) -> Poly {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(m.clone(), -c.clone());
        }
        out
    }
}

impl Neg for &Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        Poly {
            terms: self
                .terms
                .iter()
                .map(|(m, c)| (m.clone(), -c.clone()))
                .collect(),
        }
    }
}

impl Mul for &Poly {
    type Output = Poly;
    fn mul(self, rhs: &Poly) -> Poly {
        let mut out = Poly::zero();
        for (m1, c1) in &self.terms {
            for (m2, c2) in &rhs.terms {
                out.add_term(m1.mul(m2), c1 * c2);
            }
        }
        out
    }
}

macro_rules! forward_owned_binop {
    ($trait:ident, $method:ident) => {
        impl $trait<Poly> for Poly {
            type Output = Poly;
            fn $method(self, rhs: Poly) -> Poly {
                $trait::$method(&self, &rhs)
            }
        }
        impl $trait<&Poly> for Poly {
            type Output = Poly;
            fn $method(self, rhs: &Poly) -> Poly {
                $trait::$method(&self, rhs)
            }
        }
        impl $trait<Poly> for &Poly {
            type Output = Poly;
            fn $method(self, rhs: Poly) -> Poly {
                $trait::$method(self, &rhs)
            }
        }
    };
}

forward_owned_binop!(Add, add);
forward_owned_binop!(Sub, sub);
forward_owned_binop!(Mul, mul);

impl Neg for Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        -&self
    }
}

/// A substitution: a finite map from variables to image polynomials.
/// Unassigned variables map to themselves.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Substitution {
    map: BTreeMap<Var, Poly>,
}

impl Substitution {
    pub fn new() -> Substitution {
        Substitution::default()
    }

    pub fn set(mut self, v: Var, image: Poly) -> Substitution {
        self.map.insert(v, image);
        self
    }

    pub fn image(&self, v: Var) -> Option<&Poly> {
        self.map.get(&v)
    }

    pub fn assignments(&self) -> impl Iterator<Item = (&Var, &Poly)> {
        self.map.iter()
    }

    /// The substitution "apply `self`, then `after`": images of `self` are
    /// rewritten through `after`, and `after`'s other assignments carry over.
    pub fn then(&self, after: &Substitution) -> Substitution {
        let mut map: BTreeMap<Var, Poly> = self
            .map
            .iter()
            .map(|(&v, p)| (v, p.substitute(after)))
            .collect();
        for (&v, p) in &after.map {
            map.entry(v).or_insert_with(|| p.clone());
        }
        Substitution { map }
    }

    /// Sends every `u`-variable with index `1..=ell` to zero.
    pub fn u_to_zero(ell: usize) -> Substitution {
        let mut sub = Substitution::new();
        for j in 1..=ell {
            sub = sub.set(Var::u(j), Poly::zero());
        }
        sub
    }
}

impl fmt::Display for Poly {
    /// Terms in descending graded-lex order; within a monomial, variables
    /// print in alphabetical order (`t`, then `u`, then `y`), indices
    /// ascending.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (pos, (m, c)) in self.terms.iter().rev().enumerate() {
            let negative = c.is_negative();
            let mag = c.abs();
            if pos == 0 {
                if negative {
                    write!(f, "-")?;
                }
            } else if negative {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let mut factors: Vec<(Var, u32)> = m.exponents().to_vec();
            factors.sort_by_key(|&(v, _)| (v.family.letter(), v.index));
            if factors.is_empty() {
                write!(f, "{}", mag)?;
            } else {
                if !mag.is_one() {
                    write!(f, "{}*", mag)?;
                }
                for (k, &(v, e)) in factors.iter().enumerate() {
                    if k > 0 {
                        write!(f, "*")?;
                    }
                    if e == 1 {
                        write!(f, "{}", v)?;
                    } else {
                        write!(f, "{}^{}", v, e)?;
                    }
                }
            }
        }
        Ok(())
    }
}

impl FromStr for Poly {
    type Err = Error;

    fn from_str(s: &str) -> Result<Poly> {
        parse::parse_poly(s)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn poly(s: &str) -> Poly {
        s.parse().unwrap()
    }

    #[test]
    fn arithmetic_examples() {
        let a = poly("y1 + u1");
        let b = poly("y1 - u1");
        assert_eq!(&a + &b, poly("2*y1"));
        assert_eq!(poly("(y1-u1)*(y2-u1)"), poly("y1*y2 - u1*y1 - u1*y2 + u1^2"));
        assert_eq!(-&Poly::zero(), Poly::zero());
        assert!((&a - &a).is_zero());
    }

    #[test]
    fn canonical_zero_is_dropped() {
        let p = &poly("y1*y2") - &poly("y1*y2");
        assert!(p.is_zero());
        assert_eq!(p.num_terms(), 0);
    }

    #[test]
    fn grlex_order_on_display() {
        assert_eq!(poly("u1^2 + y1*y2 - 2*u1*y1").to_string(), "y1*y2 - 2*u1*y1 + u1^2");
        assert_eq!(poly("3 + y1*y2 - u1*y1").to_string(), "y1*y2 - u1*y1 + 3");
        assert_eq!(poly("y2 + y1").to_string(), "y1 + y2");
        assert_eq!(poly("t1 + y1 + u1").to_string(), "y1 + u1 + t1");
    }

    #[test]
    fn homogeneous_components() {
        let p = poly("y1*y2 - u1*y1 + 3");
        assert_eq!(p.homogeneous_component(2), poly("y1*y2 - u1*y1"));
        assert_eq!(p.homogeneous_component(0), poly("3"));
        assert_eq!(p.homogeneous_component(1), Poly::zero());
        let total: Poly = (0..=2).map(|d| p.homogeneous_component(d)).fold(Poly::zero(), |a, b| &a + &b);
        assert_eq!(total, p);
    }

    #[test]
    fn substitution_is_homomorphism() {
        let sub = Substitution::new()
            .set(Var::y(1), poly("u1"))
            .set(Var::y(2), poly("u1"));
        assert_eq!(poly("u1^2 - (y1+y2)*u1 + y1*y2").substitute(&sub), Poly::zero());
        let p = poly("y1^2*y2 - 4");
        assert_eq!(p.substitute(&Substitution::new()), p);
    }

    #[test]
    fn substitution_composes() {
        let sigma = Substitution::new().set(Var::y(1), poly("y2 + t1"));
        let tau = Substitution::new().set(Var::y(2), poly("u1^2")).set(Var::t(1), poly("3"));
        let p = poly("y1^2 - y2 + t1*y1");
        let lhs = p.substitute(&sigma).substitute(&tau);
        let rhs = p.substitute(&sigma.then(&tau));
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn eval_int_matches_substitute() {
        let p = poly("y1^3 - 2*y2*u1 + 7");
        let val = p.eval_int(|v| match (v.family, v.index) {
            (Family::Y, 1) => BigInt::from(2),
            (Family::Y, 2) => BigInt::from(-1),
            (Family::U, 1) => BigInt::from(5),
            _ => BigInt::from(0),
        });
        assert_eq!(val, BigInt::from(8 + 10 + 7));
    }

    #[test]
    fn varspace_checks() {
        let space = VarSpace::new(3, 2);
        assert!(space.check(&poly("y3*u2 + t1")).is_ok());
        assert!(space.check(&poly("y4")).is_err());
        assert!(space.check(&poly("u3")).is_err());
    }
}
