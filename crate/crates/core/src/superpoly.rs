//! Superpolynomials with exact rational coefficients, the monomial basis, the
//! multiplicative bases and the power-sum machinery (scalar product and `ω`).

use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use hashbrown::HashMap;
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::partition::Partition;
use crate::superpartition::SuperPartition;
use crate::{linalg, Error, Result};

pub type Coeff = BigRational;

/// Shorthand for an integer coefficient.
pub fn int(n: i64) -> Coeff {
    Coeff::from_integer(BigInt::from(n))
}

/// A term `θ_{a_1}…θ_{a_k} x^β` with `a_1 < … < a_k`. Variables are 0-based.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct SuperMonomial {
    thetas: Vec<u8>,
    exponents: Vec<u32>,
}

impl SuperMonomial {
    /// Builds a term, sorting the θ indices. Returns the sign of the
    /// reordering, or `None` when an index repeats (the term vanishes).
    pub fn new(mut thetas: Vec<u8>, exponents: Vec<u32>) -> Option<(i8, SuperMonomial)> {
        let mut sign = 1i8;
        for i in 0..thetas.len() {
            for j in i + 1..thetas.len() {
                if thetas[i] == thetas[j] {
                    return None;
                }
                if thetas[i] > thetas[j] {
                    sign = -sign;
                }
            }
        }
        thetas.sort_unstable();
        Some((sign, SuperMonomial { thetas, exponents }))
    }

    pub fn thetas(&self) -> &[u8] {
        &self.thetas
    }

    pub fn exponents(&self) -> &[u32] {
        &self.exponents
    }

    /// `(bosonic degree, fermionic degree)`.
    pub fn degree(&self) -> (usize, usize) {
        (self.exponents.iter().map(|&e| e as usize).sum(), self.thetas.len())
    }

    /// Product of two terms: the sign and the merged term, or `None` if a θ repeats.
    pub fn mul(&self, other: &SuperMonomial) -> Option<(i8, SuperMonomial)> {
        let mut inversions = 0usize;
        for &b in &other.thetas {
            for &a in &self.thetas {
                if a == b {
                    return None;
                }
                if a > b {
                    inversions += 1;
                }
            }
        }
        let mut thetas = self.thetas.clone();
        thetas.extend_from_slice(&other.thetas);
        thetas.sort_unstable();
        let exponents = self.exponents.iter().zip(&other.exponents).map(|(a, b)| a + b).collect();
        Some((if inversions.is_multiple_of(2) { 1 } else { -1 }, SuperMonomial { thetas, exponents }))
    }

    /// If this is the canonical term `θ_1…θ_m x^Λ` of some `m_Λ`, return `Λ`.
    pub fn canonical_label(&self) -> Option<SuperPartition> {
        let m = self.thetas.len();
        if self.thetas.iter().enumerate().any(|(i, &t)| t as usize != i) || self.exponents.len() < m {
            return None;
        }
        let (ferm, bos) = self.exponents.split_at(m);
        if ferm.windows(2).any(|w| w[0] <= w[1]) || bos.windows(2).any(|w| w[0] < w[1]) {
            return None;
        }
        let ferm = ferm.iter().map(|&e| e as usize).collect();
        let bos = bos.iter().filter(|&&e| e > 0).map(|&e| e as usize).collect();
        SuperPartition::new(ferm, bos).ok()
    }
}

impl fmt::Display for SuperMonomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        let mut sep = |f: &mut fmt::Formatter<'_>| {
            let r = if first { Ok(()) } else { f.write_str("*") };
            first = false;
            r
        };
        for t in &self.thetas {
            sep(f)?;
            write!(f, "θ{}", t + 1)?;
        }
        for (i, &e) in self.exponents.iter().enumerate() {
            if e > 0 {
                sep(f)?;
                write!(f, "x{}", i + 1)?;
                if e > 1 {
                    write!(f, "^{e}")?;
                }
            }
        }
        if first {
            f.write_str("1")?;
        }
        Ok(())
    }
}

/// A superpolynomial in `n_vars` pairs of variables `(x_i, θ_i)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SuperPolynomial {
    n_vars: usize,
    terms: BTreeMap<SuperMonomial, Coeff>,
}

impl SuperPolynomial {
    pub fn zero(n_vars: usize) -> Self {
        SuperPolynomial { n_vars, terms: BTreeMap::new() }
    }

    pub fn one(n_vars: usize) -> Self {
        let mut p = Self::zero(n_vars);
        p.add_term(SuperMonomial { thetas: Vec::new(), exponents: vec![0; n_vars] }, Coeff::one());
        p
    }

    pub fn n_vars(&self) -> usize {
        self.n_vars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&SuperMonomial, &Coeff)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coefficient(&self, term: &SuperMonomial) -> Coeff {
        self.terms.get(term).cloned().unwrap_or_else(Coeff::zero)
    }

    /// Adds `c · term`. Panics if the term lives in a different number of variables.
    pub fn add_term(&mut self, term: SuperMonomial, c: Coeff) {
        assert_eq!(term.exponents.len(), self.n_vars, "term has the wrong number of variables");
        if c.is_zero() {
            return;
        }
        match self.terms.entry(term) {
            alloc::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            alloc::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    fn check_vars(&self, other: &Self) -> Result<()> {
        if self.n_vars != other.n_vars {
            return Err(Error::VariableMismatch(self.n_vars, other.n_vars));
        }
        Ok(())
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check_vars(other)?;
        let mut out = self.clone();
        for (t, c) in &other.terms {
            out.add_term(t.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.add(&other.scale(&-Coeff::one()))
    }

    pub fn scale(&self, c: &Coeff) -> Self {
        let mut out = Self::zero(self.n_vars);
        if c.is_zero() {
            return out;
        }
        for (t, a) in &self.terms {
            out.terms.insert(t.clone(), a * c);
        }
        out
    }

    /// Product with the Grassmann sign rule `θ_i θ_j = -θ_j θ_i`, `θ_i² = 0`.
    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.check_vars(other)?;
        let mut out = Self::zero(self.n_vars);
        for (a, ca) in &self.terms {
            for (b, cb) in &other.terms {
                if let Some((sign, t)) = a.mul(b) {
                    let c = ca * cb;
                    out.add_term(t, if sign < 0 { -c } else { c });
                }
            }
        }
        Ok(out)
    }

    /// Applies the simultaneous transposition `(x_i, θ_i) ↔ (x_{i+1}, θ_{i+1})` (0-based `i`).
    pub fn transpose(&self, i: usize) -> Self {
        let mut out = Self::zero(self.n_vars);
        for (t, c) in &self.terms {
            let mut exps = t.exponents.clone();
            exps.swap(i, i + 1);
            let thetas: Vec<u8> = t
                .thetas
                .iter()
                .map(|&a| match a as usize {
                    a if a == i => a as u8 + 1,
                    a if a == i + 1 => a as u8 - 1,
                    _ => a,
                })
                .collect();
            // the reordering sign is -1 exactly when both θ_i and θ_{i+1} occur
            let (sign, term) = SuperMonomial::new(thetas, exps).expect("renaming keeps θ distinct");
            out.add_term(term, if sign < 0 { -c.clone() } else { c.clone() });
        }
        out
    }

    /// Invariance under all adjacent simultaneous transpositions.
    pub fn is_symmetric(&self) -> bool {
        (0..self.n_vars.saturating_sub(1)).all(|i| self.transpose(i) == *self)
    }
}

impl fmt::Display for SuperPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (i, (t, c)) in self.terms.iter().enumerate() {
            let neg = c.is_negative();
            let a = c.abs();
            match (i, neg) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            if a.is_one() {
                write!(f, "{t}")?;
            } else {
                write!(f, "{a}*{t}")?;
            }
        }
        Ok(())
    }
}

/// The basis an [`Expansion`] is written in.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Basis {
    /// Monomial basis `m_Λ`.
    Monomial,
    /// Schur superpolynomials `s_Λ` (tableau definition).
    Schur,
    /// Dual Schur superpolynomials `s̄_Λ` (dual tableau definition).
    DualSchur,
    /// Power sums `p_Λ`.
    PowerSum,
    /// The basis `H_Λ = p̃_{Λ^a} h_{Λ^s}`.
    H,
}

impl Basis {
    pub fn name(self) -> &'static str {
        match self {
            Basis::Monomial => "monomial",
            Basis::Schur => "schur",
            Basis::DualSchur => "dual-schur",
            Basis::PowerSum => "power-sum",
            Basis::H => "h",
        }
    }
}

/// A linear combination of basis elements indexed by superpartitions of one degree.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Expansion {
    basis: Basis,
    degree: Option<(usize, usize)>,
    terms: BTreeMap<SuperPartition, Coeff>,
}

impl Expansion {
    pub fn new(basis: Basis) -> Self {
        Expansion { basis, degree: None, terms: BTreeMap::new() }
    }

    /// An empty expansion whose degree is fixed in advance.
    pub fn with_degree(basis: Basis, degree: (usize, usize)) -> Self {
        Expansion { basis, degree: Some(degree), terms: BTreeMap::new() }
    }

    pub fn single(basis: Basis, label: SuperPartition, c: Coeff) -> Self {
        let mut e = Self::with_degree(basis, label.degree());
        e.add_term(label, c).expect("degree matches");
        e
    }

    pub fn basis(&self) -> Basis {
        self.basis
    }

    pub fn degree(&self) -> Option<(usize, usize)> {
        self.degree
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in listing order: most dominant label first.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&SuperPartition, &Coeff)> {
        self.terms.iter().rev()
    }

    pub fn coefficient(&self, label: &SuperPartition) -> Coeff {
        self.terms.get(label).cloned().unwrap_or_else(Coeff::zero)
    }

    /// The lexicographically largest label. It is maximal for dominance among the support.
    pub fn leading(&self) -> Option<(&SuperPartition, &Coeff)> {
        self.terms.iter().next_back()
    }

    pub fn add_term(&mut self, label: SuperPartition, c: Coeff) -> Result<()> {
        let d = label.degree();
        match self.degree {
            Some(e) if e != d => return Err(Error::DegreeMismatch(e.0, e.1, d.0, d.1)),
            _ => self.degree = Some(d),
        }
        if c.is_zero() {
            return Ok(());
        }
        match self.terms.entry(label) {
            alloc::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            alloc::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
        Ok(())
    }

    fn check_basis(&self, other: &Self) -> Result<()> {
        if self.basis != other.basis {
            return Err(Error::BasisMismatch { expected: self.basis.name(), got: other.basis.name() });
        }
        Ok(())
    }

    fn expect_basis(&self, basis: Basis) -> Result<()> {
        if self.basis != basis {
            return Err(Error::BasisMismatch { expected: basis.name(), got: self.basis.name() });
        }
        Ok(())
    }

    /// `self + c · other`.
    pub fn add_scaled(&mut self, other: &Self, c: &Coeff) -> Result<()> {
        self.check_basis(other)?;
        for (l, a) in &other.terms {
            self.add_term(l.clone(), a * c)?;
        }
        if self.degree.is_none() {
            self.degree = other.degree;
        }
        Ok(())
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        let mut out = self.clone();
        out.add_scaled(other, &Coeff::one())?;
        Ok(out)
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        let mut out = self.clone();
        out.add_scaled(other, &-Coeff::one())?;
        Ok(out)
    }

    pub fn scale(&self, c: &Coeff) -> Self {
        let mut out = Expansion { basis: self.basis, degree: self.degree, terms: BTreeMap::new() };
        if !c.is_zero() {
            for (l, a) in &self.terms {
                out.terms.insert(l.clone(), a * c);
            }
        }
        out
    }

    /// Reinterprets the coefficients in another basis.
    pub fn relabel(mut self, basis: Basis) -> Self {
        self.basis = basis;
        self
    }

    /// Evaluates a monomial-basis expansion as a polynomial in `n_vars` variables.
    pub fn to_polynomial(&self, n_vars: usize) -> Result<SuperPolynomial> {
        self.expect_basis(Basis::Monomial)?;
        let mut out = SuperPolynomial::zero(n_vars);
        for (l, c) in &self.terms {
            for (t, a) in monomial_basis(l, n_vars)?.terms {
                out.add_term(t, a * c);
            }
        }
        Ok(out)
    }
}

/// The monomial superpolynomial `m_Λ` in `n_vars ≥ ℓ(Λ)` variables.
///
/// Its canonical term `θ_1…θ_m x^Λ` has coefficient `+1`.
pub fn monomial_basis(label: &SuperPartition, n_vars: usize) -> Result<SuperPolynomial> {
    if n_vars < label.len() {
        return Err(Error::TooFewVariables { needed: label.len(), given: n_vars });
    }
    // kinds: the fermionic parts (each unique), then bosonic values with multiplicity
    let m = label.m();
    let mut kinds: Vec<(u32, Option<usize>, usize)> = label.fermionic().iter().enumerate().map(|(k, &a)| (a as u32, Some(k), 1)).collect();
    let mut bos: Vec<usize> = label.bosonic().to_vec();
    bos.extend(core::iter::repeat_n(0, n_vars - label.len()));
    for b in bos {
        match kinds.last_mut() {
            Some(last) if last.1.is_none() && last.0 == b as u32 => last.2 += 1,
            _ => kinds.push((b as u32, None, 1)),
        }
    }
    let mut out = SuperPolynomial::zero(n_vars);
    let mut exps = vec![0u32; n_vars];
    let mut owner: Vec<Option<usize>> = vec![None; n_vars];
    fn rec(
        var: usize,
        kinds: &mut Vec<(u32, Option<usize>, usize)>,
        exps: &mut Vec<u32>,
        owner: &mut Vec<Option<usize>>,
        m: usize,
        out: &mut SuperPolynomial,
    ) {
        if var == exps.len() {
            let seq: Vec<usize> = owner.iter().flatten().copied().collect();
            debug_assert_eq!(seq.len(), m);
            let mut inv = 0;
            for i in 0..seq.len() {
                for j in i + 1..seq.len() {
                    if seq[i] > seq[j] {
                        inv += 1;
                    }
                }
            }
            let thetas = owner.iter().enumerate().filter(|(_, o)| o.is_some()).map(|(i, _)| i as u8).collect();
            let term = SuperMonomial { thetas, exponents: exps.clone() };
            out.add_term(term, int(if inv % 2 == 0 { 1 } else { -1 }));
            return;
        }
        for k in 0..kinds.len() {
            if kinds[k].2 == 0 {
                continue;
            }
            kinds[k].2 -= 1;
            exps[var] = kinds[k].0;
            owner[var] = kinds[k].1;
            rec(var + 1, kinds, exps, owner, m, out);
            kinds[k].2 += 1;
        }
        owner[var] = None;
    }
    rec(0, &mut kinds, &mut exps, &mut owner, m, &mut out);
    Ok(out)
}

/// Reads off the monomial expansion of a symmetric homogeneous superpolynomial
/// from its canonical terms, then checks the result reproduces `p`.
pub fn extract_expansion(p: &SuperPolynomial) -> Result<Expansion> {
    let mut e = Expansion::new(Basis::Monomial);
    for (t, c) in p.terms() {
        if let Some(l) = t.canonical_label() {
            e.add_term(l, c.clone())?;
        }
    }
    if e.to_polynomial(p.n_vars())? != *p {
        return Err(Error::NotSymmetric);
    }
    Ok(e)
}

/// Precomputed data for multiplying two monomial expansions.
///
/// The product is symmetric, so only its canonical terms `θ_1…θ_M x^Ω` are
/// computed. Each such coefficient is a sum over the ways of splitting the
/// term into a term of each factor.
pub struct ProductPlan {
    left: Factor,
    right: Factor,
}

struct Factor {
    n: usize,
    m: usize,
    index: HashMap<Vec<u16>, usize>,
    coeffs: Vec<Coeff>,
}

const SEP: u16 = u16::MAX;

impl Factor {
    fn new(e: &Expansion) -> Self {
        let (n, m) = e.degree.unwrap_or((0, 0));
        let mut index = HashMap::new();
        let mut coeffs = Vec::new();
        for (l, c) in &e.terms {
            let mut key: Vec<u16> = l.fermionic().iter().map(|&a| a as u16).collect();
            key.push(SEP);
            key.extend(l.bosonic().iter().map(|&b| b as u16));
            index.insert(key, coeffs.len());
            coeffs.push(c.clone());
        }
        Factor { n, m, index, coeffs }
    }

    /// Coefficient index and sign of `θ_A x^β` where `A` is given by `mask`.
    fn lookup(&self, exps: &[u32], mask: u64, m_vars: usize, ferm: &mut Vec<u16>, key: &mut Vec<u16>) -> Option<(usize, bool)> {
        ferm.clear();
        key.clear();
        for (i, &e) in exps.iter().enumerate().take(m_vars) {
            if mask >> i & 1 == 1 {
                ferm.push(e as u16);
            }
        }
        let mut inv = 0usize;
        for i in 0..ferm.len() {
            for j in i + 1..ferm.len() {
                match ferm[i].cmp(&ferm[j]) {
                    core::cmp::Ordering::Equal => return None,
                    core::cmp::Ordering::Less => inv += 1,
                    _ => {}
                }
            }
        }
        ferm.sort_unstable_by(|a, b| b.cmp(a));
        key.extend_from_slice(ferm);
        key.push(SEP);
        let start = key.len();
        for (i, &e) in exps.iter().enumerate() {
            if e > 0 && (i >= m_vars || mask >> i & 1 == 0) {
                key.push(e as u16);
            }
        }
        key[start..].sort_unstable_by(|a, b| b.cmp(a));
        self.index.get(key.as_slice()).map(|&i| (i, inv % 2 == 1))
    }
}

impl ProductPlan {
    /// Both factors must be monomial-basis expansions.
    pub fn new(a: &Expansion, b: &Expansion) -> Result<Self> {
        a.expect_basis(Basis::Monomial)?;
        b.expect_basis(Basis::Monomial)?;
        Ok(ProductPlan { left: Factor::new(a), right: Factor::new(b) })
    }

    /// Degree of the product.
    pub fn degree(&self) -> (usize, usize) {
        (self.left.n + self.right.n, self.left.m + self.right.m)
    }

    /// Labels the product may involve.
    pub fn targets(&self) -> Vec<SuperPartition> {
        if self.left.coeffs.is_empty() || self.right.coeffs.is_empty() {
            return Vec::new();
        }
        let (n, m) = self.degree();
        SuperPartition::all(n, m)
    }

    /// Coefficient of `m_Ω` in the product.
    pub fn coefficient(&self, target: &SuperPartition) -> Coeff {
        let total_m = target.m();
        if target.degree() != self.degree() || self.left.coeffs.is_empty() || self.right.coeffs.is_empty() {
            return Coeff::zero();
        }
        let exps: Vec<u32> = target.parts().map(|p| p as u32).collect();
        let mut suffix = vec![0u32; exps.len() + 1];
        for i in (0..exps.len()).rev() {
            suffix[i] = suffix[i + 1] + exps[i];
        }
        let mut counts: HashMap<(usize, usize), i64> = HashMap::new();
        let mut beta = vec![0u32; exps.len()];
        let mut gamma = vec![0u32; exps.len()];
        let mut scratch = (Vec::new(), Vec::new());
        let full: u64 = (1u64 << total_m) - 1;
        for mask in 0..=full {
            if mask.count_ones() as usize != self.left.m {
                continue;
            }
            // sign of θ_A θ_{A^c} → θ_1…θ_M
            let mut merge = 0u32;
            for a in 0..total_m {
                if mask >> a & 1 == 1 {
                    merge += (0..a).filter(|&b| mask >> b & 1 == 0).count() as u32;
                }
            }
            self.split(
                0,
                self.left.n as u32,
                &exps,
                &suffix,
                mask,
                total_m,
                merge % 2 == 1,
                &mut beta,
                &mut gamma,
                &mut scratch,
                &mut counts,
            );
        }
        let mut total = Coeff::zero();
        for ((i, j), n) in counts {
            if n != 0 {
                total += &self.left.coeffs[i] * &self.right.coeffs[j] * int(n);
            }
        }
        total
    }

    #[allow(clippy::too_many_arguments)]
    fn split(
        &self,
        var: usize,
        left_needed: u32,
        exps: &[u32],
        suffix: &[u32],
        mask: u64,
        total_m: usize,
        merge_odd: bool,
        beta: &mut Vec<u32>,
        gamma: &mut Vec<u32>,
        scratch: &mut (Vec<u16>, Vec<u16>),
        counts: &mut HashMap<(usize, usize), i64>,
    ) {
        if var == exps.len() {
            let Some((i, s1)) = self.left.lookup(beta, mask, total_m, &mut scratch.0, &mut scratch.1) else {
                return;
            };
            let comp = !mask & ((1u64 << total_m) - 1);
            let Some((j, s2)) = self.right.lookup(gamma, comp, total_m, &mut scratch.0, &mut scratch.1) else {
                return;
            };
            let neg = s1 ^ s2 ^ merge_odd;
            *counts.entry((i, j)).or_insert(0) += if neg { -1 } else { 1 };
            return;
        }
        let rest = suffix[var + 1];
        let lo = left_needed.saturating_sub(rest);
        let hi = exps[var].min(left_needed);
        for b in lo..=hi {
            beta[var] = b;
            gamma[var] = exps[var] - b;
            self.split(var + 1, left_needed - b, exps, suffix, mask, total_m, merge_odd, beta, gamma, scratch, counts);
        }
    }

    /// The full product expansion.
    pub fn expand(&self) -> Expansion {
        let mut out = Expansion::with_degree(Basis::Monomial, self.degree());
        for t in self.targets() {
            let c = self.coefficient(&t);
            out.add_term(t, c).expect("degree matches");
        }
        out
    }
}

/// Product of two monomial-basis expansions, in the monomial basis.
pub fn product(a: &Expansion, b: &Expansion) -> Result<Expansion> {
    Ok(ProductPlan::new(a, b)?.expand())
}

/// Ordered product of several monomial-basis expansions.
pub fn product_all(factors: &[Expansion]) -> Result<Expansion> {
    let mut acc = Expansion::single(Basis::Monomial, SuperPartition::default(), Coeff::one());
    for f in factors {
        acc = product(&acc, f)?;
    }
    Ok(acc)
}

/// The generating families of the multiplicative bases.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Family {
    /// `p̃_r = Σ θ_i x_i^r`, `p_r = Σ x_i^r`.
    PowerSum,
    /// `ẽ_r = m_{(0;1^r)}`, `e_r = m_{(1^r)}`.
    Elementary,
    /// `h̃_r = Σ_{Λ ⊢ (r|1)} (Λ_1 + 1) m_Λ`, `h_r = Σ_{λ ⊢ r} m_λ`.
    Homogeneous,
}

/// Monomial expansion of a generator `f̃_r` (fermionic) or `f_r` (bosonic, `r ≥ 1`).
pub fn generator(family: Family, r: usize, fermionic: bool) -> Result<Expansion> {
    if !fermionic && r == 0 {
        return Err(Error::InvalidQuery(alloc::string::String::from("bosonic generators are indexed by r >= 1")));
    }
    let sp = |f: Vec<usize>, b: Vec<usize>| SuperPartition::new(f, b).expect("valid generator label");
    let mono = |l: SuperPartition| Expansion::single(Basis::Monomial, l, Coeff::one());
    Ok(match (family, fermionic) {
        (Family::PowerSum, true) => mono(sp(vec![r], vec![])),
        (Family::PowerSum, false) => mono(sp(vec![], vec![r])),
        (Family::Elementary, true) => mono(sp(vec![0], vec![1; r])),
        (Family::Elementary, false) => mono(sp(vec![], vec![1; r])),
        (Family::Homogeneous, true) => {
            let mut e = Expansion::with_degree(Basis::Monomial, (r, 1));
            for l in SuperPartition::all(r, 1) {
                let c = int(l.fermionic()[0] as i64 + 1);
                e.add_term(l, c)?;
            }
            e
        }
        (Family::Homogeneous, false) => {
            let mut e = Expansion::with_degree(Basis::Monomial, (r, 0));
            for l in SuperPartition::all(r, 0) {
                e.add_term(l, Coeff::one())?;
            }
            e
        }
    })
}

/// `p̃_r` or `p_r` as a polynomial in `n_vars` variables.
pub fn power_sum(r: usize, fermionic: bool, n_vars: usize) -> Result<SuperPolynomial> {
    generator(Family::PowerSum, r, fermionic)?.to_polynomial(n_vars)
}

/// Monomial expansion of `f_Λ = f̃_{Λ_1}…f̃_{Λ_m} f_{Λ_{m+1}}…f_{Λ_ℓ}`.
pub fn multiplicative_expansion(label: &SuperPartition, family: Family) -> Result<Expansion> {
    let mut factors = Vec::new();
    for &a in label.fermionic() {
        factors.push(generator(family, a, true)?);
    }
    for &s in label.bosonic() {
        factors.push(generator(family, s, false)?);
    }
    product_all(&factors)
}

/// Monomial expansion of `H_Λ = p̃_{Λ^a} h_{Λ^s}`.
pub fn h_basis_expansion(label: &SuperPartition) -> Result<Expansion> {
    let mut factors = Vec::new();
    for &a in label.fermionic() {
        factors.push(generator(Family::PowerSum, a, true)?);
    }
    for &s in label.bosonic() {
        factors.push(generator(Family::Homogeneous, s, false)?);
    }
    product_all(&factors)
}

/// `f_Λ` as an explicit polynomial, multiplied out factor by factor.
pub fn multiplicative_basis(label: &SuperPartition, family: Family, n_vars: usize) -> Result<SuperPolynomial> {
    let mut acc = SuperPolynomial::one(n_vars);
    for &a in label.fermionic() {
        acc = acc.mul(&generator(family, a, true)?.to_polynomial(n_vars)?)?;
    }
    for &s in label.bosonic() {
        acc = acc.mul(&generator(family, s, false)?.to_polynomial(n_vars)?)?;
    }
    Ok(acc)
}

/// Rewrites a monomial-basis expansion in the power-sum basis.
pub fn to_power_sum(e: &Expansion) -> Result<Expansion> {
    e.expect_basis(Basis::Monomial)?;
    let Some((n, m)) = e.degree else {
        return Ok(Expansion::new(Basis::PowerSum));
    };
    let labels = SuperPartition::all(n, m);
    let pos: BTreeMap<&SuperPartition, usize> = labels.iter().enumerate().map(|(i, l)| (l, i)).collect();
    let k = labels.len();
    let mut a = vec![vec![Coeff::zero(); k]; k];
    for (j, l) in labels.iter().enumerate() {
        let col = multiplicative_expansion(l, Family::PowerSum)?;
        for (r, c) in col.terms() {
            a[pos[r]][j] = c.clone();
        }
    }
    let b: Vec<Coeff> = labels.iter().map(|l| e.coefficient(l)).collect();
    let x = linalg::solve(a, b).ok_or(Error::NotInSpan)?;
    let mut out = Expansion::with_degree(Basis::PowerSum, (n, m));
    for (l, c) in labels.into_iter().zip(x) {
        out.add_term(l, c)?;
    }
    Ok(out)
}

/// Rewrites a power-sum expansion in the monomial basis.
pub fn from_power_sum(e: &Expansion) -> Result<Expansion> {
    e.expect_basis(Basis::PowerSum)?;
    let mut out = match e.degree {
        Some(d) => Expansion::with_degree(Basis::Monomial, d),
        None => Expansion::new(Basis::Monomial),
    };
    for (l, c) in e.terms() {
        out.add_scaled(&multiplicative_expansion(l, Family::PowerSum)?, c)?;
    }
    Ok(out)
}

fn fermionic_sign(m: usize) -> i64 {
    if (m * m.saturating_sub(1) / 2).is_multiple_of(2) {
        1
    } else {
        -1
    }
}

/// Scalar product at `q = t = 1`:
/// `⟨p_Λ, p_Ω⟩ = (-1)^{m(m-1)/2} z_{Λ^s} δ_{ΛΩ}`.
pub fn scalar_product_11(a: &Expansion, b: &Expansion) -> Result<Coeff> {
    a.expect_basis(Basis::PowerSum)?;
    b.expect_basis(Basis::PowerSum)?;
    let mut total = Coeff::zero();
    for (l, ca) in &a.terms {
        if let Some(cb) = b.terms.get(l) {
            let z = BigInt::from(Partition::from_parts(l.bosonic().to_vec()).z());
            total += ca * cb * Coeff::from_integer(z) * int(fermionic_sign(l.m()));
        }
    }
    Ok(total)
}

/// The involution `ω(p_r) = (-1)^{r-1} p_r`, `ω(p̃_r) = (-1)^r p̃_r` on a power-sum expansion.
pub fn omega(e: &Expansion) -> Result<Expansion> {
    e.expect_basis(Basis::PowerSum)?;
    let mut out = e.clone();
    for (l, c) in out.terms.iter_mut() {
        let flips = l.bosonic().iter().map(|r| r - 1).sum::<usize>() + l.fermionic().iter().sum::<usize>();
        if flips % 2 == 1 {
            *c = -c.clone();
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::string::ToString;

    fn sp(s: &str) -> SuperPartition {
        s.parse().unwrap()
    }

    fn term(thetas: &[u8], exps: &[u32]) -> SuperMonomial {
        SuperMonomial::new(thetas.to_vec(), exps.to_vec()).unwrap().1
    }

    #[test]
    fn grassmann_signs() {
        let t1 = term(&[0], &[0, 0]);
        let t2 = term(&[1], &[0, 0]);
        assert_eq!(t1.mul(&t2).unwrap().0, 1);
        assert_eq!(t2.mul(&t1).unwrap().0, -1);
        assert!(t1.mul(&t1).is_none());
        let (s, t) = SuperMonomial::new(vec![2, 0, 1], vec![0; 3]).unwrap();
        assert_eq!((s, t.thetas()), (1, &[0u8, 1, 2][..]));
        assert_eq!(SuperMonomial::new(vec![1, 0], vec![0; 2]).unwrap().0, -1);
    }

    #[test]
    fn small_monomials() {
        // m_{(0;3)} = θ1 x2^3 + θ2 x1^3 in two variables
        let p = monomial_basis(&sp("(0;3)"), 2).unwrap();
        assert_eq!(p.len(), 2);
        assert_eq!(p.coefficient(&term(&[0], &[0, 3])), int(1));
        assert_eq!(p.coefficient(&term(&[1], &[3, 0])), int(1));
        // m_{(1,0;1,1)} in four variables: θ1θ2 (x1 - x2) x3 x4 + …
        let p = monomial_basis(&sp("(1,0;1,1)"), 4).unwrap();
        assert_eq!(p.coefficient(&term(&[0, 1], &[1, 0, 1, 1])), int(1));
        assert_eq!(p.coefficient(&term(&[0, 1], &[0, 1, 1, 1])), int(-1));
        assert_eq!(p.len(), 12);
        assert!(p.is_symmetric());
        assert!(matches!(monomial_basis(&sp("(1,0;1,1)"), 3), Err(Error::TooFewVariables { .. })));
    }

    #[test]
    fn monomials_are_symmetric_and_extract() {
        for m in 0..3 {
            for l in SuperPartition::all(4, m) {
                let p = monomial_basis(&l, l.len() + 1).unwrap();
                assert!(p.is_symmetric(), "{l}");
                let e = extract_expansion(&p).unwrap();
                assert_eq!(e, Expansion::single(Basis::Monomial, l.clone(), int(1)));
            }
        }
    }

    #[test]
    fn extract_rejects_nonsymmetric() {
        let mut p = SuperPolynomial::zero(2);
        p.add_term(term(&[0], &[1, 0]), int(1));
        assert_eq!(extract_expansion(&p), Err(Error::NotSymmetric));
        assert!(!p.is_symmetric());
        assert!(extract_expansion(&SuperPolynomial::zero(3)).unwrap().is_zero());
    }

    #[test]
    fn product_plan_matches_explicit_multiplication() {
        let labels = ["(1;)", "(0;1)", "(;2)", "(1,0;)", "(0;1,1)", "(2;)", "(;1)", "(0;)"];
        for a in labels {
            for b in labels {
                let (ea, eb) = (sp(a), sp(b));
                let n_vars = ea.len() + eb.len();
                let pa = monomial_basis(&ea, n_vars).unwrap();
                let pb = monomial_basis(&eb, n_vars).unwrap();
                let direct = extract_expansion(&pa.mul(&pb).unwrap()).unwrap();
                let fast =
                    product(&Expansion::single(Basis::Monomial, ea, int(1)), &Expansion::single(Basis::Monomial, eb, int(1))).unwrap();
                assert_eq!(direct.terms().collect::<Vec<_>>(), fast.terms().collect::<Vec<_>>(), "{a} * {b}");
            }
        }
    }

    #[test]
    fn fermionic_power_sums_anticommute() {
        let p1 = generator(Family::PowerSum, 1, true).unwrap();
        let p2 = generator(Family::PowerSum, 2, true).unwrap();
        let a = product(&p1, &p2).unwrap();
        let b = product(&p2, &p1).unwrap();
        assert_eq!(a, b.scale(&int(-1)));
        assert!(product(&p1, &p1).unwrap().is_zero());
    }

    #[test]
    fn generators() {
        let h1 = generator(Family::Homogeneous, 1, true).unwrap();
        assert_eq!(h1.coefficient(&sp("(1;)")), int(2));
        assert_eq!(h1.coefficient(&sp("(0;1)")), int(1));
        let h0 = generator(Family::Homogeneous, 0, true).unwrap();
        assert_eq!(h0.terms().map(|(l, c)| (l.to_string(), c.clone())).collect::<Vec<_>>(), vec![("(0;)".into(), int(1))]);
        assert!(generator(Family::PowerSum, 0, false).is_err());
        // explicit and expansion-level multiplicative bases agree
        for l in ["(1,0;1)", "(2;1)", "(0;2,1)"] {
            for fam in [Family::PowerSum, Family::Elementary, Family::Homogeneous] {
                let l = sp(l);
                let poly = multiplicative_basis(&l, fam, 5).unwrap();
                let e = multiplicative_expansion(&l, fam).unwrap();
                assert_eq!(extract_expansion(&poly).unwrap().terms().collect::<Vec<_>>(), e.terms().collect::<Vec<_>>());
            }
        }
    }

    #[test]
    fn power_sum_transition_by_hand() {
        // m_{(;2)} = p_{(;2)},  m_{(;1,1)} = (p_{(;1,1)} - p_{(;2)}) / 2
        let m2 = to_power_sum(&Expansion::single(Basis::Monomial, sp("(;2)"), int(1))).unwrap();
        assert_eq!(m2, Expansion::single(Basis::PowerSum, sp("(;2)"), int(1)));
        let m11 = to_power_sum(&Expansion::single(Basis::Monomial, sp("(;1,1)"), int(1))).unwrap();
        let half = Coeff::new(1.into(), 2.into());
        assert_eq!(m11.coefficient(&sp("(;1,1)")), half);
        assert_eq!(m11.coefficient(&sp("(;2)")), -half);
        // m_{(0;1)} = p̃_0 p_1 - p̃_1
        let m01 = to_power_sum(&Expansion::single(Basis::Monomial, sp("(0;1)"), int(1))).unwrap();
        assert_eq!(m01.coefficient(&sp("(0;1)")), int(1));
        assert_eq!(m01.coefficient(&sp("(1;)")), int(-1));
    }

    #[test]
    fn power_sum_round_trip() {
        for m in 0..3 {
            for l in SuperPartition::all(4, m) {
                let e = Expansion::single(Basis::Monomial, l, int(1));
                assert_eq!(from_power_sum(&to_power_sum(&e).unwrap()).unwrap(), e);
            }
        }
    }

    #[test]
    fn scalar_product_and_omega() {
        let p = |s: &str| Expansion::single(Basis::PowerSum, sp(s), int(1));
        assert_eq!(scalar_product_11(&p("(;2,1,1)"), &p("(;2,1,1)")).unwrap(), int(4));
        assert_eq!(scalar_product_11(&p("(1,0;1)"), &p("(1,0;1)")).unwrap(), int(-1));
        assert_eq!(scalar_product_11(&p("(1;)"), &p("(0;1)")).unwrap(), int(0));
        assert_eq!(omega(&p("(1,0;2)")).unwrap(), p("(1,0;2)").scale(&int(1)));
        assert_eq!(omega(&p("(1;2)")).unwrap(), p("(1;2)").scale(&int(1)));
        assert_eq!(omega(&p("(0;2)")).unwrap(), p("(0;2)").scale(&int(-1)));
        let e = p("(2,1;3)").add(&p("(3,0;1,1,1)")).unwrap();
        assert_eq!(omega(&omega(&e).unwrap()).unwrap(), e);
    }
}
