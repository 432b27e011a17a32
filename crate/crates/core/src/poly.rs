//! Sparse multivariate polynomials over [`Scalar`].
//!
//! Exponent vectors are stored densely. Terms are kept in a `BTreeMap` keyed
//! by [`Monomial`], whose `Ord` is graded reverse-lexicographic, so two equal
//! polynomials always have identical term maps and iterate in the same order.
//! Variables are indexed from 0.

use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt;
use core::ops::{Add, Mul, Neg, Sub};

use crate::error::{Error, Result};
use crate::quad::QuadExt;
use crate::scalar::Scalar;

/// Exponent vector ordered by graded reverse-lexicographic order.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Monomial(Vec<u32>);

impl Monomial {
    pub fn new(exps: Vec<u32>) -> Self {
        Monomial(exps)
    }

    pub fn one(num_vars: usize) -> Self {
        Monomial(vec![0; num_vars])
    }

    pub fn var(num_vars: usize, i: usize) -> Self {
        let mut e = vec![0; num_vars];
        e[i] = 1;
        Monomial(e)
    }

    pub fn exps(&self) -> &[u32] {
        &self.0
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    /// All monomials of total degree `degree` in `num_vars` variables,
    /// largest first.
    pub fn all_of_degree(num_vars: usize, degree: u32) -> Vec<Monomial> {
        fn rec(out: &mut Vec<Monomial>, cur: &mut Vec<u32>, left: u32, idx: usize) {
            if idx + 1 == cur.len() {
                cur[idx] = left;
                out.push(Monomial(cur.clone()));
                return;
            }
            for e in 0..=left {
                cur[idx] = e;
                rec(out, cur, left - e, idx + 1);
            }
            cur[idx] = 0;
        }
        let mut out = Vec::new();
        if num_vars == 0 {
            if degree == 0 {
                out.push(Monomial(Vec::new()));
            }
            return out;
        }
        rec(&mut out, &mut vec![0; num_vars], degree, 0);
        out.sort_by(|a, b| b.cmp(a));
        out
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree()
            .cmp(&other.degree())
            .then_with(|| {
                // The smaller exponent in the last differing variable wins.
                for (a, b) in self.0.iter().zip(&other.0).rev() {
                    if a != b {
                        return b.cmp(a);
                    }
                }
                Ordering::Equal
            })
            .then_with(|| self.0.len().cmp(&other.0.len()))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.0)
    }
}

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct MultiPoly {
    num_vars: usize,
    terms: BTreeMap<Monomial, Scalar>,
}

impl MultiPoly {
    pub fn zero(num_vars: usize) -> Self {
        MultiPoly {
            num_vars,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(num_vars: usize, c: Scalar) -> Self {
        let mut p = MultiPoly::zero(num_vars);
        p.add_term(Monomial::one(num_vars), c);
        p
    }

    /// The variable `x_i`.
    pub fn var(num_vars: usize, i: usize) -> Result<Self> {
        if i >= num_vars {
            return Err(Error::IndexOutOfRange {
                index: i,
                len: num_vars,
            });
        }
        let mut p = MultiPoly::zero(num_vars);
        p.add_term(Monomial::var(num_vars, i), Scalar::one());
        Ok(p)
    }

    pub fn monomial(num_vars: usize, exps: Vec<u32>, coeff: Scalar) -> Result<Self> {
        let mut p = MultiPoly::zero(num_vars);
        p.push_term(exps, coeff)?;
        Ok(p)
    }

    /// Builds a polynomial from `(exponents, coefficient)` pairs, summing
    /// repeated monomials.
    pub fn from_terms<I>(num_vars: usize, terms: I) -> Result<Self>
    where
        I: IntoIterator<Item = (Vec<u32>, Scalar)>,
    {
        let mut p = MultiPoly::zero(num_vars);
        for (exps, c) in terms {
            p.push_term(exps, c)?;
        }
        Ok(p)
    }

    fn push_term(&mut self, exps: Vec<u32>, coeff: Scalar) -> Result<()> {
        if exps.len() != self.num_vars {
            return Err(Error::LengthMismatch {
                expected: self.num_vars,
                found: exps.len(),
            });
        }
        self.add_term(Monomial(exps), coeff);
        Ok(())
    }

    fn add_term(&mut self, m: Monomial, c: Scalar) {
        if c.is_zero() {
            return;
        }
        use alloc::collections::btree_map::Entry;
        match self.terms.entry(m) {
            Entry::Vacant(v) => {
                v.insert(c);
            }
            Entry::Occupied(mut o) => {
                *o.get_mut() += &c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn num_vars(&self) -> usize {
        self.num_vars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Terms in canonical order, leading (largest) term first.
    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Scalar)> + '_ {
        self.terms.iter().rev()
    }

    pub fn coeff(&self, exps: &[u32]) -> Scalar {
        self.terms
            .get(&Monomial(exps.to_vec()))
            .cloned()
            .unwrap_or_else(Scalar::zero)
    }

    /// Total degree; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<u32> {
        self.terms.keys().map(Monomial::degree).max()
    }

    pub fn is_homogeneous_of(&self, d: u32) -> bool {
        self.terms.keys().all(|m| m.degree() == d)
    }

    /// Degree of a nonzero homogeneous polynomial.
    pub fn homogeneous_degree(&self) -> Option<u32> {
        let d = self.degree()?;
        self.is_homogeneous_of(d).then_some(d)
    }

    pub fn scale(&self, k: &Scalar) -> MultiPoly {
        if k.is_zero() {
            return MultiPoly::zero(self.num_vars);
        }
        MultiPoly {
            num_vars: self.num_vars,
            terms: self.terms.iter().map(|(m, c)| (m.clone(), c * k)).collect(),
        }
    }

    pub fn mul_monomial(&self, m: &Monomial) -> MultiPoly {
        MultiPoly {
            num_vars: self.num_vars,
            terms: self
                .terms
                .iter()
                .map(|(t, c)| (t.mul(m), c.clone()))
                .collect(),
        }
    }

    pub fn pow(&self, exp: u32) -> MultiPoly {
        let mut acc = MultiPoly::constant(self.num_vars, Scalar::one());
        for _ in 0..exp {
            acc = &acc * self;
        }
        acc
    }

    /// Formal partial derivative with respect to `x_i`.
    pub fn partial(&self, i: usize) -> Result<MultiPoly> {
        if i >= self.num_vars {
            return Err(Error::IndexOutOfRange {
                index: i,
                len: self.num_vars,
            });
        }
        let mut out = MultiPoly::zero(self.num_vars);
        for (m, c) in &self.terms {
            let e = m.0[i];
            if e == 0 {
                continue;
            }
            let mut exps = m.0.clone();
            exps[i] -= 1;
            out.add_term(Monomial(exps), c * &Scalar::from(i64::from(e)));
        }
        Ok(out)
    }

    fn check_len(&self, found: usize) -> Result<()> {
        if found != self.num_vars {
            return Err(Error::LengthMismatch {
                expected: self.num_vars,
                found,
            });
        }
        Ok(())
    }

    pub fn eval(&self, point: &[Scalar]) -> Result<Scalar> {
        self.check_len(point.len())?;
        Ok(self
            .terms
            .iter()
            .map(|(m, c)| {
                m.0.iter()
                    .zip(point)
                    .fold(c.clone(), |acc, (&e, x)| acc * x.pow(u64::from(e)))
            })
            .sum())
    }

    /// Evaluation at a point whose coordinates share one radicand.
    pub fn eval_ext(&self, point: &[QuadExt]) -> Result<QuadExt> {
        self.check_len(point.len())?;
        let radicand = match point.first() {
            Some(p) => p.radicand().clone(),
            None => Scalar::zero(),
        };
        let mut acc = QuadExt::zero(radicand.clone());
        for (m, c) in &self.terms {
            let mut t = QuadExt::rational(c.clone(), radicand.clone());
            for (&e, x) in m.0.iter().zip(point) {
                if e > 0 {
                    t = t.mul(&x.pow(u64::from(e)))?;
                }
            }
            acc = acc.add(&t)?;
        }
        Ok(acc)
    }

    /// Swaps variables `i` and `j`.
    pub fn swap_vars(&self, i: usize, j: usize) -> MultiPoly {
        MultiPoly {
            num_vars: self.num_vars,
            terms: self
                .terms
                .iter()
                .map(|(m, c)| {
                    let mut e = m.0.clone();
                    e.swap(i, j);
                    (Monomial(e), c.clone())
                })
                .collect(),
        }
    }

    /// Invariance under every adjacent transposition, which generates the
    /// full symmetric group.
    pub fn is_symmetric(&self) -> bool {
        (1..self.num_vars).all(|i| &self.swap_vars(i - 1, i) == self)
    }

    /// Embeds into `num_vars + extra` variables, shifting existing variables
    /// up by `extra` (new variables come first).
    pub fn prepend_vars(&self, extra: usize) -> MultiPoly {
        MultiPoly {
            num_vars: self.num_vars + extra,
            terms: self
                .terms
                .iter()
                .map(|(m, c)| {
                    let mut e = vec![0; extra];
                    e.extend_from_slice(&m.0);
                    (Monomial(e), c.clone())
                })
                .collect(),
        }
    }

    /// `p(T x)`: substitutes `x_j -> sum_k t[j][k] x_k`.
    pub fn compose_linear(&self, t: &[Vec<Scalar>]) -> Result<MultiPoly> {
        let n = self.num_vars;
        if t.len() != n {
            return Err(Error::LengthMismatch {
                expected: n,
                found: t.len(),
            });
        }
        let mut images = Vec::with_capacity(n);
        for row in t {
            if row.len() != n {
                return Err(Error::LengthMismatch {
                    expected: n,
                    found: row.len(),
                });
            }
            let terms = row.iter().enumerate().map(|(k, c)| {
                let mut e = vec![0; n];
                e[k] = 1;
                (e, c.clone())
            });
            images.push(MultiPoly::from_terms(n, terms)?);
        }
        // Cache powers of each linear image.
        let mut powers: Vec<Vec<MultiPoly>> = images
            .iter()
            .map(|l| vec![MultiPoly::constant(n, Scalar::one()), l.clone()])
            .collect();
        let mut out = MultiPoly::zero(n);
        for (m, c) in &self.terms {
            let mut term = MultiPoly::constant(n, c.clone());
            for (j, &e) in m.0.iter().enumerate() {
                let e = e as usize;
                while powers[j].len() <= e {
                    let next = powers[j].last().expect("nonempty") * &images[j];
                    powers[j].push(next);
                }
                if e > 0 {
                    term = &term * &powers[j][e];
                }
            }
            out = out + term;
        }
        Ok(out)
    }
}

/// The `k`-th elementary symmetric polynomial in `n` variables.
pub fn elem_sym(n: usize, k: usize) -> Result<MultiPoly> {
    if k == 0 || k > n {
        return Err(Error::ElemSymRange { n, k });
    }
    let mut p = MultiPoly::zero(n);
    // Walk all k-subsets of 0..n in lexicographic order.
    let mut idx: Vec<usize> = (0..k).collect();
    loop {
        let mut e = vec![0; n];
        for &i in &idx {
            e[i] = 1;
        }
        p.add_term(Monomial(e), Scalar::one());
        let Some(pos) = (0..k).rev().find(|&p| idx[p] != p + n - k) else {
            break;
        };
        idx[pos] += 1;
        for q in pos + 1..k {
            idx[q] = idx[q - 1] + 1;
        }
    }
    Ok(p)
}

impl Add for MultiPoly {
    type Output = MultiPoly;
    fn add(mut self, rhs: MultiPoly) -> MultiPoly {
        assert_eq!(self.num_vars, rhs.num_vars, "variable count mismatch");
        for (m, c) in rhs.terms {
            self.add_term(m, c);
        }
        self
    }
}

impl Add<&MultiPoly> for &MultiPoly {
    type Output = MultiPoly;
    fn add(self, rhs: &MultiPoly) -> MultiPoly {
        self.clone() + rhs.clone()
    }
}

impl Sub for MultiPoly {
    type Output = MultiPoly;
    fn sub(self, rhs: MultiPoly) -> MultiPoly {
        self + (-rhs)
    }
}

impl Sub<&MultiPoly> for &MultiPoly {
    type Output = MultiPoly;
    fn sub(self, rhs: &MultiPoly) -> MultiPoly {
        self.clone() - rhs.clone()
    }
}

impl Neg for MultiPoly {
    type Output = MultiPoly;
    fn neg(self) -> MultiPoly {
        MultiPoly {
            num_vars: self.num_vars,
            terms: self.terms.into_iter().map(|(m, c)| (m, -c)).collect(),
        }
    }
}

impl Mul<&MultiPoly> for &MultiPoly {
    type Output = MultiPoly;
    fn mul(self, rhs: &MultiPoly) -> MultiPoly {
        assert_eq!(self.num_vars, rhs.num_vars, "variable count mismatch");
        let mut out = MultiPoly::zero(self.num_vars);
        for (ma, ca) in &self.terms {
            for (mb, cb) in &rhs.terms {
                out.add_term(ma.mul(mb), ca * cb);
            }
        }
        out
    }
}

impl Mul for MultiPoly {
    type Output = MultiPoly;
    fn mul(self, rhs: MultiPoly) -> MultiPoly {
        &self * &rhs
    }
}

impl fmt::Debug for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl fmt::Display for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (i, (m, c)) in self.terms().enumerate() {
            if i > 0 {
                f.write_str(" + ")?;
            }
            write!(f, "({c})")?;
            for (v, &e) in m.0.iter().enumerate() {
                match e {
                    0 => {}
                    1 => write!(f, "*x{}", v + 1)?,
                    _ => write!(f, "*x{}^{}", v + 1, e)?,
                }
            }
        }
        Ok(())
    }
}
