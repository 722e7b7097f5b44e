use std::collections::BTreeMap;
use std::fmt;

use super::{Rational, RingError};

/// Exponent vector of a monomial, one entry per variable.
pub type Exponents = Vec<u32>;

/// Sparse multivariate polynomial over the rationals in variables
/// `a1 .. ar`. Zero coefficients are never stored.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct MultiPoly {
    num_vars: usize,
    terms: BTreeMap<Exponents, Rational>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PolyOp {
    Add,
    Mul,
}

impl MultiPoly {
    pub fn zero(num_vars: usize) -> Self {
        MultiPoly { num_vars, terms: BTreeMap::new() }
    }

    pub fn one(num_vars: usize) -> Self {
        Self::constant(num_vars, Rational::one())
    }

    pub fn constant(num_vars: usize, c: Rational) -> Self {
        let mut p = Self::zero(num_vars);
        p.insert(vec![0; num_vars], c);
        p
    }

    /// The variable `a_{index+1}`.
    pub fn var(num_vars: usize, index: usize) -> Result<Self, RingError> {
        if index >= num_vars {
            return Err(RingError::VariableIndex { index, num_vars });
        }
        let mut exps = vec![0; num_vars];
        exps[index] = 1;
        let mut p = Self::zero(num_vars);
        p.insert(exps, Rational::one());
        Ok(p)
    }

    /// Collects `(exponents, coefficient)` pairs, merging duplicates.
    pub fn from_terms<I>(num_vars: usize, terms: I) -> Result<Self, RingError>
    where
        I: IntoIterator<Item = (Exponents, Rational)>,
    {
        let mut p = Self::zero(num_vars);
        for (exps, c) in terms {
            if exps.len() != num_vars {
                return Err(RingError::ExponentLength { expected: num_vars, found: exps.len() });
            }
            p.insert(exps, c);
        }
        Ok(p)
    }

    fn insert(&mut self, exps: Exponents, c: Rational) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(exps) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                let sum = e.get() + &c;
                if sum.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = sum;
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

    /// Number of stored (nonzero) terms.
    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Exponents, &Rational)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, exps: &[u32]) -> Rational {
        self.terms.get(exps).cloned().unwrap_or_else(Rational::zero)
    }

    /// Total degree; `-1` for the zero polynomial.
    pub fn total_degree(&self) -> i64 {
        self.terms
            .keys()
            .map(|e| e.iter().map(|&x| x as i64).sum::<i64>())
            .max()
            .unwrap_or(-1)
    }

    /// Highest power of variable `var` in any term; `-1` for the zero polynomial.
    pub fn degree_in(&self, var: usize) -> Result<i64, RingError> {
        if var >= self.num_vars {
            return Err(RingError::VariableIndex { index: var, num_vars: self.num_vars });
        }
        Ok(self.terms.keys().map(|e| e[var] as i64).max().unwrap_or(-1))
    }

    /// Highest power of any single variable; `-1` for the zero polynomial.
    pub fn max_variable_degree(&self) -> i64 {
        self.terms
            .keys()
            .map(|e| e.iter().max().map_or(0, |&x| x as i64))
            .max()
            .unwrap_or(-1)
    }

    /// The constant value if the polynomial has no non-constant terms.
    pub fn as_constant(&self) -> Option<Rational> {
        match self.terms.len() {
            0 => Some(Rational::zero()),
            1 => {
                let (e, c) = self.terms.iter().next().unwrap();
                e.iter().all(|&x| x == 0).then(|| c.clone())
            }
            _ => None,
        }
    }

    fn check_vars(&self, other: &MultiPoly) -> Result<(), RingError> {
        if self.num_vars != other.num_vars {
            return Err(RingError::VariableCountMismatch {
                left: self.num_vars,
                right: other.num_vars,
            });
        }
        Ok(())
    }

    pub fn add(&self, other: &MultiPoly) -> Result<MultiPoly, RingError> {
        self.check_vars(other)?;
        Ok(self.add_unchecked(other))
    }

    pub fn sub(&self, other: &MultiPoly) -> Result<MultiPoly, RingError> {
        self.check_vars(other)?;
        Ok(self.add_unchecked(&other.neg()))
    }

    pub fn mul(&self, other: &MultiPoly) -> Result<MultiPoly, RingError> {
        self.check_vars(other)?;
        Ok(self.mul_unchecked(other))
    }

    pub fn apply(&self, other: &MultiPoly, op: PolyOp) -> Result<MultiPoly, RingError> {
        match op {
            PolyOp::Add => self.add(other),
            PolyOp::Mul => self.mul(other),
        }
    }

    pub(crate) fn add_unchecked(&self, other: &MultiPoly) -> MultiPoly {
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.insert(e.clone(), c.clone());
        }
        out
    }

    pub(crate) fn mul_unchecked(&self, other: &MultiPoly) -> MultiPoly {
        let mut out = MultiPoly::zero(self.num_vars);
        for (e1, c1) in &self.terms {
            for (e2, c2) in &other.terms {
                let exps = e1.iter().zip(e2).map(|(a, b)| a + b).collect();
                out.insert(exps, c1 * c2);
            }
        }
        out
    }

    pub fn neg(&self) -> MultiPoly {
        MultiPoly {
            num_vars: self.num_vars,
            terms: self.terms.iter().map(|(e, c)| (e.clone(), -c)).collect(),
        }
    }

    pub fn scale(&self, k: &Rational) -> MultiPoly {
        if k.is_zero() {
            return MultiPoly::zero(self.num_vars);
        }
        MultiPoly {
            num_vars: self.num_vars,
            terms: self.terms.iter().map(|(e, c)| (e.clone(), c * k)).collect(),
        }
    }

    pub fn pow(&self, mut exp: u32) -> MultiPoly {
        let mut base = self.clone();
        let mut acc = MultiPoly::one(self.num_vars);
        while exp > 0 {
            if exp & 1 == 1 {
                acc = acc.mul_unchecked(&base);
            }
            exp >>= 1;
            if exp > 0 {
                base = base.mul_unchecked(&base);
            }
        }
        acc
    }

    /// Evaluates at the point `assignment` (one value per variable).
    pub fn eval(&self, assignment: &[Rational]) -> Result<Rational, RingError> {
        if assignment.len() != self.num_vars {
            return Err(RingError::AssignmentLength {
                expected: self.num_vars,
                found: assignment.len(),
            });
        }
        let mut total = Rational::zero();
        for (exps, c) in &self.terms {
            let mut term = c.clone();
            for (x, &e) in assignment.iter().zip(exps) {
                if e > 0 {
                    term = &term * &x.pow(e as i32)?;
                }
            }
            total = total + term;
        }
        Ok(total)
    }

    /// Renames variables: variable `i` becomes variable `perm[i]`.
    pub fn permute_vars(&self, perm: &[usize]) -> Result<MultiPoly, RingError> {
        let mut seen = vec![false; self.num_vars];
        if perm.len() != self.num_vars {
            return Err(RingError::InvalidPermutation);
        }
        for &p in perm {
            if p >= self.num_vars || seen[p] {
                return Err(RingError::InvalidPermutation);
            }
            seen[p] = true;
        }
        let mut out = MultiPoly::zero(self.num_vars);
        for (exps, c) in &self.terms {
            let mut moved = vec![0; self.num_vars];
            for (i, &e) in exps.iter().enumerate() {
                moved[perm[i]] = e;
            }
            out.insert(moved, c.clone());
        }
        Ok(out)
    }

    /// Invariance under every permutation of the variables, checked on the
    /// transposition `(1 2)` and the cycle `(1 2 ... r)`, which generate the
    /// symmetric group.
    pub fn is_symmetric(&self) -> bool {
        let r = self.num_vars;
        if r <= 1 {
            return true;
        }
        let mut swap: Vec<usize> = (0..r).collect();
        swap.swap(0, 1);
        let cycle: Vec<usize> = (0..r).map(|i| (i + 1) % r).collect();
        [swap, cycle]
            .iter()
            .all(|perm| self.permute_vars(perm).map(|p| &p == self).unwrap_or(false))
    }

    /// Fixes variables `keep ..` to `value`, returning a polynomial in the
    /// first `keep` variables.
    pub fn fix_trailing(&self, keep: usize, value: &Rational) -> Result<MultiPoly, RingError> {
        if keep > self.num_vars {
            return Err(RingError::VariableIndex { index: keep, num_vars: self.num_vars });
        }
        let mut out = MultiPoly::zero(keep);
        for (exps, c) in &self.terms {
            let mut coeff = c.clone();
            for &e in &exps[keep..] {
                coeff = &coeff * &value.pow(e as i32)?;
            }
            out.insert(exps[..keep].to_vec(), coeff);
        }
        Ok(out)
    }
}

impl fmt::Display for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        // highest total degree first
        let mut terms: Vec<_> = self.terms.iter().collect();
        terms.sort_by(|(a, _), (b, _)| {
            let da: u32 = a.iter().sum();
            let db: u32 = b.iter().sum();
            db.cmp(&da).then_with(|| b.cmp(a))
        });
        for (i, (exps, c)) in terms.into_iter().enumerate() {
            let neg = c.is_negative();
            let mag = c.abs();
            match (i, neg) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            let monomial: Vec<String> = exps
                .iter()
                .enumerate()
                .filter(|(_, &e)| e > 0)
                .map(|(v, &e)| if e == 1 { format!("a{}", v + 1) } else { format!("a{}^{}", v + 1, e) })
                .collect();
            if monomial.is_empty() {
                write!(f, "{mag}")?;
            } else if mag.is_one() {
                write!(f, "{}", monomial.join("*"))?;
            } else {
                write!(f, "{mag}*{}", monomial.join("*"))?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "MultiPoly[{}]({})", self.num_vars, self)
    }
}
