use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};

use crate::linalg::{format_rational, Rational};

/// Exponent vector. Ordered by total degree, then lexicographically.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Monomial {
    exps: Vec<u32>,
}

impl Monomial {
    pub fn one(nvars: usize) -> Self {
        Monomial { exps: vec![0; nvars] }
    }

    pub fn from_exponents(exps: Vec<u32>) -> Self {
        Monomial { exps }
    }

    pub fn var(nvars: usize, i: usize) -> Self {
        let mut exps = vec![0; nvars];
        exps[i] = 1;
        Monomial { exps }
    }

    pub fn nvars(&self) -> usize {
        self.exps.len()
    }

    pub fn exponents(&self) -> &[u32] {
        &self.exps
    }

    pub fn degree(&self) -> usize {
        self.exps.iter().map(|&e| e as usize).sum()
    }

    /// Total degree restricted to the variables `range`.
    pub fn degree_in(&self, range: std::ops::Range<usize>) -> usize {
        self.exps[range].iter().map(|&e| e as usize).sum()
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        Monomial { exps: self.exps.iter().zip(&other.exps).map(|(a, b)| a + b).collect() }
    }

    pub fn eval(&self, point: &[Rational]) -> Rational {
        self.exps
            .iter()
            .zip(point)
            .filter(|(&e, _)| e > 0)
            .fold(Rational::one(), |acc, (&e, x)| acc * num_traits::pow(x.clone(), e as usize))
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.degree().cmp(&other.degree()).then_with(|| self.exps.cmp(&other.exps))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

/// All monomials in `nvars` variables of total degree at most `max_degree`,
/// in increasing order.
pub fn monomials_up_to(nvars: usize, max_degree: usize) -> Vec<Monomial> {
    let mut out = Vec::new();
    for deg in 0..=max_degree {
        let mut cur = vec![0u32; nvars];
        fill(&mut cur, 0, deg as u32, &mut out);
    }
    // `fill` emits each degree in decreasing lexicographic order
    out.sort();
    out
}

fn fill(cur: &mut Vec<u32>, pos: usize, left: u32, out: &mut Vec<Monomial>) {
    if pos == cur.len() {
        if left == 0 {
            out.push(Monomial { exps: cur.clone() });
        }
        return;
    }
    if pos + 1 == cur.len() {
        cur[pos] = left;
        out.push(Monomial { exps: cur.clone() });
        cur[pos] = 0;
        return;
    }
    for e in (0..=left).rev() {
        cur[pos] = e;
        fill(cur, pos + 1, left - e, out);
    }
    cur[pos] = 0;
}

/// Polynomial with exact rational coefficients; zero coefficients are never
/// stored.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct MultiPoly {
    nvars: usize,
    terms: BTreeMap<Monomial, Rational>,
}

impl MultiPoly {
    pub fn zero(nvars: usize) -> Self {
        MultiPoly { nvars, terms: BTreeMap::new() }
    }

    pub fn constant(nvars: usize, c: Rational) -> Self {
        let mut p = Self::zero(nvars);
        p.add_term(Monomial::one(nvars), c);
        p
    }

    pub fn one(nvars: usize) -> Self {
        Self::constant(nvars, Rational::one())
    }

    pub fn var(nvars: usize, i: usize) -> Self {
        Self::monomial(Monomial::var(nvars, i), Rational::one())
    }

    pub fn monomial(m: Monomial, c: Rational) -> Self {
        let mut p = Self::zero(m.nvars());
        p.add_term(m, c);
        p
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn terms(&self) -> &BTreeMap<Monomial, Rational> {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Total degree; 0 for the zero polynomial.
    pub fn degree(&self) -> usize {
        self.terms.keys().next_back().map_or(0, Monomial::degree)
    }

    pub fn coefficient(&self, m: &Monomial) -> Rational {
        self.terms.get(m).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn constant_term(&self) -> Rational {
        self.coefficient(&Monomial::one(self.nvars))
    }

    pub fn add_term(&mut self, m: Monomial, c: Rational) {
        debug_assert_eq!(m.nvars(), self.nvars);
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
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

    pub fn add_scaled(&mut self, other: &MultiPoly, s: &Rational) {
        if s.is_zero() {
            return;
        }
        for (m, c) in &other.terms {
            self.add_term(m.clone(), c * s);
        }
    }

    pub fn scale(&self, s: &Rational) -> MultiPoly {
        if s.is_zero() {
            return Self::zero(self.nvars);
        }
        MultiPoly { nvars: self.nvars, terms: self.terms.iter().map(|(m, c)| (m.clone(), c * s)).collect() }
    }

    pub fn pow(&self, k: u32) -> MultiPoly {
        let mut out = Self::one(self.nvars);
        for _ in 0..k {
            out = &out * self;
        }
        out
    }

    /// Terms of total degree at most `d`.
    pub fn truncate(&self, d: usize) -> MultiPoly {
        self.filter(|m| m.degree() <= d)
    }

    pub fn homogeneous_part(&self, d: usize) -> MultiPoly {
        self.filter(|m| m.degree() == d)
    }

    pub fn filter(&self, keep: impl Fn(&Monomial) -> bool) -> MultiPoly {
        MultiPoly {
            nvars: self.nvars,
            terms: self.terms.iter().filter(|(m, _)| keep(m)).map(|(m, c)| (m.clone(), c.clone())).collect(),
        }
    }

    pub fn eval(&self, point: &[Rational]) -> Rational {
        self.terms.iter().fold(Rational::zero(), |acc, (m, c)| acc + c * m.eval(point))
    }

    /// Moves variable `i` to position `map[i]` in a ring of `nvars` variables.
    pub fn rename(&self, nvars: usize, map: &[usize]) -> MultiPoly {
        let mut out = Self::zero(nvars);
        for (m, c) in &self.terms {
            out.add_term(rename_monomial(m, nvars, map), c.clone());
        }
        out
    }

    /// Shifts all variables by `offset` into a ring of `nvars` variables.
    pub fn shift(&self, nvars: usize, offset: usize) -> MultiPoly {
        let map: Vec<usize> = (0..self.nvars).map(|i| i + offset).collect();
        self.rename(nvars, &map)
    }

    /// `p(images[0], ..., images[n-1])`.
    pub fn substitute(&self, images: &[MultiPoly]) -> MultiPoly {
        assert_eq!(images.len(), self.nvars, "one image per variable");
        let target = images.first().map_or(0, MultiPoly::nvars);
        let mut cache = PowerCache::new(images);
        let mut out = Self::zero(target);
        for (m, c) in &self.terms {
            let term = cache.monomial(m);
            out.add_scaled(&term, c);
        }
        out
    }

    pub fn to_string_with(&self, names: &[String]) -> String {
        if self.terms.is_empty() {
            return "0".into();
        }
        let mut out = String::new();
        for (i, (m, c)) in self.terms.iter().rev().enumerate() {
            let negative = c < &Rational::zero();
            let abs = if negative { -c.clone() } else { c.clone() };
            match (i, negative) {
                (0, true) => out.push('-'),
                (0, false) => {}
                (_, true) => out.push_str(" - "),
                (_, false) => out.push_str(" + "),
            }
            let vars: Vec<String> = m
                .exps
                .iter()
                .enumerate()
                .filter(|(_, &e)| e > 0)
                .map(|(v, &e)| if e == 1 { names[v].clone() } else { format!("{}^{e}", names[v]) })
                .collect();
            if vars.is_empty() {
                out.push_str(&format_rational(&abs));
            } else {
                if !abs.is_one() {
                    out.push_str(&format_rational(&abs));
                    out.push('*');
                }
                out.push_str(&vars.join("*"));
            }
        }
        out
    }
}

pub(crate) fn rename_monomial(m: &Monomial, nvars: usize, map: &[usize]) -> Monomial {
    let mut exps = vec![0; nvars];
    for (i, &e) in m.exps.iter().enumerate() {
        exps[map[i]] += e;
    }
    Monomial { exps }
}

/// Lazily computed powers of a list of substitution images.
pub(crate) struct PowerCache<'a> {
    images: &'a [MultiPoly],
    powers: Vec<Vec<MultiPoly>>,
}

impl<'a> PowerCache<'a> {
    pub(crate) fn new(images: &'a [MultiPoly]) -> Self {
        let powers = images.iter().map(|p| vec![MultiPoly::one(p.nvars())]).collect();
        PowerCache { images, powers }
    }

    pub(crate) fn power(&mut self, i: usize, e: u32) -> &MultiPoly {
        while self.powers[i].len() <= e as usize {
            let next = self.powers[i].last().expect("nonempty") * &self.images[i];
            self.powers[i].push(next);
        }
        &self.powers[i][e as usize]
    }

    pub(crate) fn monomial(&mut self, m: &Monomial) -> MultiPoly {
        let target = self.images.first().map_or(0, MultiPoly::nvars);
        let mut acc = MultiPoly::one(target);
        for (i, &e) in m.exponents().iter().enumerate() {
            if e > 0 {
                acc = &acc * self.power(i, e);
            }
        }
        acc
    }
}

impl Add for &MultiPoly {
    type Output = MultiPoly;
    fn add(self, rhs: &MultiPoly) -> MultiPoly {
        let mut out = self.clone();
        out.add_scaled(rhs, &Rational::one());
        out
    }
}

impl Sub for &MultiPoly {
    type Output = MultiPoly;
    fn sub(self, rhs: &MultiPoly) -> MultiPoly {
        let mut out = self.clone();
        out.add_scaled(rhs, &-Rational::one());
        out
    }
}

impl Neg for &MultiPoly {
    type Output = MultiPoly;
    fn neg(self) -> MultiPoly {
        self.scale(&-Rational::one())
    }
}

impl Mul for &MultiPoly {
    type Output = MultiPoly;
    fn mul(self, rhs: &MultiPoly) -> MultiPoly {
        assert_eq!(self.nvars, rhs.nvars, "polynomial rings differ");
        let mut out = MultiPoly::zero(self.nvars);
        for (m1, c1) in &self.terms {
            for (m2, c2) in &rhs.terms {
                out.add_term(m1.mul(m2), c1 * c2);
            }
        }
        out
    }
}

impl fmt::Display for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let names: Vec<String> = (1..=self.nvars).map(|i| format!("t{i}")).collect();
        write!(f, "{}", self.to_string_with(&names))
    }
}
