//! Sparse polynomial arithmetic over exact rationals.
//!
//! Everything lives in one flat variable universe: the affine variables
//! x_{k,j} of the system, their doubled partners y_{k,j} used by Bezoutians,
//! and one generic coefficient indeterminate per (polynomial, support
//! monomial) pair. A [`VarTable`] fixes the id layout and the display names.

use crate::combinatorics::SystemData;
use crate::error::{Error, Result};
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt::Write as _;

pub type Rat = BigRational;

pub fn rat(n: i64, d: i64) -> Rat {
    Rat::new(n.into(), d.into())
}

pub fn rat_int(n: i64) -> Rat {
    Rat::from_integer(n.into())
}

pub type Var = u32;

/// Sparse monomial: (variable, exponent) pairs sorted by variable id,
/// exponents strictly positive.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Default)]
pub struct Mono {
    pairs: Vec<(Var, u32)>,
}

impl Mono {
    pub fn one() -> Self {
        Mono { pairs: Vec::new() }
    }

    pub fn var(v: Var) -> Self {
        Mono { pairs: vec![(v, 1)] }
    }

    pub fn var_pow(v: Var, e: u32) -> Self {
        if e == 0 {
            Mono::one()
        } else {
            Mono { pairs: vec![(v, e)] }
        }
    }

    pub fn from_pairs(mut pairs: Vec<(Var, u32)>) -> Self {
        pairs.retain(|&(_, e)| e > 0);
        pairs.sort_unstable_by_key(|&(v, _)| v);
        for w in pairs.windows(2) {
            assert!(w[0].0 != w[1].0, "duplicate variable in monomial");
        }
        Mono { pairs }
    }

    pub fn is_one(&self) -> bool {
        self.pairs.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = (Var, u32)> + '_ {
        self.pairs.iter().copied()
    }

    pub fn exp(&self, v: Var) -> u32 {
        self.pairs
            .binary_search_by_key(&v, |&(w, _)| w)
            .map(|i| self.pairs[i].1)
            .unwrap_or(0)
    }

    pub fn mul(&self, other: &Mono) -> Mono {
        let mut pairs = Vec::with_capacity(self.pairs.len() + other.pairs.len());
        let (mut i, mut j) = (0, 0);
        while i < self.pairs.len() || j < other.pairs.len() {
            match (self.pairs.get(i), other.pairs.get(j)) {
                (Some(&(va, ea)), Some(&(vb, eb))) => match va.cmp(&vb) {
                    Ordering::Less => {
                        pairs.push((va, ea));
                        i += 1;
                    }
                    Ordering::Greater => {
                        pairs.push((vb, eb));
                        j += 1;
                    }
                    Ordering::Equal => {
                        pairs.push((va, ea + eb));
                        i += 1;
                        j += 1;
                    }
                },
                (Some(&p), None) => {
                    pairs.push(p);
                    i += 1;
                }
                (None, Some(&p)) => {
                    pairs.push(p);
                    j += 1;
                }
                (None, None) => unreachable!(),
            }
        }
        Mono { pairs }
    }

    /// Componentwise quotient; None when some exponent would go negative.
    pub fn checked_div(&self, other: &Mono) -> Option<Mono> {
        let mut pairs = Vec::with_capacity(self.pairs.len());
        let mut i = 0;
        for &(v, e) in &other.pairs {
            loop {
                let &(va, ea) = self.pairs.get(i)?;
                if va < v {
                    pairs.push((va, ea));
                    i += 1;
                } else if va == v {
                    if ea < e {
                        return None;
                    }
                    if ea > e {
                        pairs.push((va, ea - e));
                    }
                    i += 1;
                    break;
                } else {
                    return None;
                }
            }
        }
        pairs.extend_from_slice(&self.pairs[i..]);
        Some(Mono { pairs })
    }

    /// Total degree over the variables selected by `pred`.
    pub fn deg_where(&self, pred: impl Fn(Var) -> bool) -> u32 {
        self.pairs.iter().filter(|&&(v, _)| pred(v)).map(|&(_, e)| e).sum()
    }

    /// The sub-monomial over variables selected by `pred`.
    pub fn restrict(&self, pred: impl Fn(Var) -> bool) -> Mono {
        Mono { pairs: self.pairs.iter().copied().filter(|&(v, _)| pred(v)).collect() }
    }

    pub fn total_deg(&self) -> u32 {
        self.pairs.iter().map(|&(_, e)| e).sum()
    }
}

impl Ord for Mono {
    // Lexicographic with smaller variable id more significant.
    fn cmp(&self, other: &Self) -> Ordering {
        let (mut i, mut j) = (0, 0);
        loop {
            match (self.pairs.get(i), other.pairs.get(j)) {
                (None, None) => return Ordering::Equal,
                (Some(_), None) => return Ordering::Greater,
                (None, Some(_)) => return Ordering::Less,
                (Some(&(va, ea)), Some(&(vb, eb))) => {
                    if va < vb {
                        return Ordering::Greater;
                    }
                    if va > vb {
                        return Ordering::Less;
                    }
                    if ea != eb {
                        return ea.cmp(&eb);
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
    }
}

impl PartialOrd for Mono {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Sparse polynomial with exact rational coefficients; no zero terms stored.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct Poly {
    terms: BTreeMap<Mono, Rat>,
}

impl Poly {
    pub fn zero() -> Self {
        Poly { terms: BTreeMap::new() }
    }

    pub fn one() -> Self {
        Poly::constant(Rat::one())
    }

    pub fn constant(c: Rat) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(Mono::one(), c);
        }
        Poly { terms }
    }

    pub fn var(v: Var) -> Self {
        Poly::monomial(Mono::var(v), Rat::one())
    }

    pub fn monomial(m: Mono, c: Rat) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(m, c);
        }
        Poly { terms }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Mono, &Rat)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Leading term in the monomial order; None for the zero polynomial.
    pub fn leading(&self) -> Option<(&Mono, &Rat)> {
        self.terms.iter().next_back()
    }

    fn insert(&mut self, m: Mono, c: Rat) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
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

    pub fn add(&self, other: &Poly) -> Poly {
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.insert(m.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, other: &Poly) -> Poly {
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.insert(m.clone(), -c.clone());
        }
        out
    }

    pub fn neg(&self) -> Poly {
        Poly { terms: self.terms.iter().map(|(m, c)| (m.clone(), -c.clone())).collect() }
    }

    pub fn mul(&self, other: &Poly) -> Poly {
        let mut out = Poly::zero();
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                out.insert(ma.mul(mb), ca * cb);
            }
        }
        out
    }

    pub fn scale(&self, c: &Rat) -> Poly {
        if c.is_zero() {
            return Poly::zero();
        }
        Poly { terms: self.terms.iter().map(|(m, k)| (m.clone(), k * c)).collect() }
    }

    pub fn pow(&self, e: u32) -> Poly {
        let mut out = Poly::one();
        for _ in 0..e {
            out = out.mul(self);
        }
        out
    }

    /// Exact quotient self / den; fails if the division leaves a remainder.
    pub fn exact_div(&self, den: &Poly) -> Result<Poly> {
        let (dm, dc) = den.leading().ok_or(Error::NotDivisible)?;
        let mut rem = self.clone();
        let mut quo = Poly::zero();
        while let Some((rm, rc)) = rem.leading() {
            let qm = rm.checked_div(dm).ok_or(Error::NotDivisible)?;
            let qc = rc / dc;
            let t = Poly::monomial(qm, qc);
            rem = rem.sub(&t.mul(den));
            quo = quo.add(&t);
        }
        Ok(quo)
    }

    /// Coefficient of `pattern` over the variables selected by `in_vars`;
    /// the result keeps only the remaining variables.
    pub fn coef_where(&self, pattern: &Mono, in_vars: impl Fn(Var) -> bool) -> Poly {
        let mut out = Poly::zero();
        for (m, c) in &self.terms {
            if &m.restrict(&in_vars) == pattern {
                out.insert(m.restrict(|v| !in_vars(v)), c.clone());
            }
        }
        out
    }

    /// Total degree over the selected variables; -1 for the zero polynomial.
    pub fn deg_where(&self, pred: impl Fn(Var) -> bool) -> i64 {
        self.terms.keys().map(|m| m.deg_where(&pred) as i64).max().unwrap_or(-1)
    }

    /// Substitutes whole polynomials for selected variables.
    pub fn subst(&self, repl: impl Fn(Var) -> Option<Poly>) -> Poly {
        let mut out = Poly::zero();
        for (m, c) in &self.terms {
            let mut kept = Vec::new();
            let mut acc = Poly::constant(c.clone());
            for (v, e) in m.iter() {
                match repl(v) {
                    None => kept.push((v, e)),
                    Some(p) => acc = acc.mul(&p.pow(e)),
                }
            }
            out = out.add(&acc.mul(&Poly::monomial(Mono::from_pairs(kept), Rat::one())));
        }
        out
    }

    /// Renames variables; the map must stay injective on the support.
    pub fn rename(&self, map: impl Fn(Var) -> Var) -> Poly {
        let mut out = Poly::zero();
        for (m, c) in &self.terms {
            let pairs = m.iter().map(|(v, e)| (map(v), e)).collect();
            out.insert(Mono::from_pairs(pairs), c.clone());
        }
        out
    }

    /// Evaluates selected variables at rational values, keeping the rest.
    pub fn eval_partial(&self, val: impl Fn(Var) -> Option<Rat>) -> Poly {
        let mut out = Poly::zero();
        for (m, c) in &self.terms {
            let mut coef = c.clone();
            let mut kept = Vec::new();
            for (v, e) in m.iter() {
                match val(v) {
                    None => kept.push((v, e)),
                    Some(r) => {
                        let mut p = Rat::one();
                        for _ in 0..e {
                            p *= &r;
                        }
                        coef *= p;
                    }
                }
            }
            out.insert(Mono::from_pairs(kept), coef);
        }
        out
    }

    /// The constant value of a variable-free polynomial.
    pub fn as_constant(&self) -> Option<Rat> {
        if self.is_zero() {
            return Some(Rat::zero());
        }
        if self.terms.len() == 1 {
            let (m, c) = self.terms.iter().next().unwrap();
            if m.is_one() {
                return Some(c.clone());
            }
        }
        None
    }

    /// Renders with the given variable names, leading term last.
    pub fn render(&self, name: impl Fn(Var) -> String) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut parts: Vec<(u32, Vec<(Var, u32)>, &Rat)> = self
            .terms
            .iter()
            .map(|(m, c)| (m.total_deg(), m.iter().collect(), c))
            .collect();
        parts.sort_by(|a, b| (a.0, &a.1).cmp(&(b.0, &b.1)));
        let mut out = String::new();
        for (idx, (_, vars, c)) in parts.iter().enumerate() {
            let neg = c.is_negative();
            let abs = if neg { -(*c).clone() } else { (*c).clone() };
            if idx == 0 {
                if neg {
                    out.push('-');
                }
            } else {
                out.push_str(if neg { " - " } else { " + " });
            }
            let mut factors = Vec::new();
            if !abs.is_one() || vars.is_empty() {
                factors.push(abs.to_string());
            }
            for &(v, e) in vars {
                if e == 1 {
                    factors.push(name(v));
                } else {
                    factors.push(format!("{}^{}", name(v), e));
                }
            }
            let _ = write!(out, "{}", factors.join("*"));
        }
        out
    }
}

impl std::ops::Add for &Poly {
    type Output = Poly;
    fn add(self, rhs: &Poly) -> Poly {
        Poly::add(self, rhs)
    }
}

impl std::ops::Sub for &Poly {
    type Output = Poly;
    fn sub(self, rhs: &Poly) -> Poly {
        Poly::sub(self, rhs)
    }
}

impl std::ops::Mul for &Poly {
    type Output = Poly;
    fn mul(self, rhs: &Poly) -> Poly {
        Poly::mul(self, rhs)
    }
}

impl std::ops::Neg for &Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        Poly::neg(self)
    }
}

/// Variable id layout for one system: affine x variables first, their y
/// partners next, then the coefficient indeterminates of each polynomial.
#[derive(Clone, Debug)]
pub struct VarTable {
    pub n: usize,
    group_start: Vec<usize>,
    group_of: Vec<usize>,
    sym_offset: Vec<u32>,
    total_syms: u32,
}

impl VarTable {
    pub fn new(data: &SystemData, support_sizes: &[usize]) -> Self {
        let mut group_start = Vec::with_capacity(data.r);
        let mut group_of = Vec::with_capacity(data.n);
        let mut t = 0;
        for (k, &lk) in data.l.iter().enumerate() {
            group_start.push(t);
            for _ in 0..lk {
                group_of.push(k);
                t += 1;
            }
        }
        let mut sym_offset = Vec::with_capacity(support_sizes.len());
        let mut off = 0u32;
        for &sz in support_sizes {
            sym_offset.push(off);
            off += sz as u32;
        }
        VarTable { n: data.n, group_start, group_of, sym_offset, total_syms: off }
    }

    pub fn x(&self, t: usize) -> Var {
        debug_assert!(t < self.n);
        t as Var
    }

    pub fn y(&self, t: usize) -> Var {
        debug_assert!(t < self.n);
        (self.n + t) as Var
    }

    /// Affine index of coordinate j (0-based) in group k.
    pub fn affine(&self, k: usize, j: usize) -> usize {
        self.group_start[k] + j
    }

    pub fn x_group(&self, k: usize, j: usize) -> Var {
        self.x(self.affine(k, j))
    }

    pub fn y_group(&self, k: usize, j: usize) -> Var {
        self.y(self.affine(k, j))
    }

    pub fn sym(&self, i: usize, pos: usize) -> Var {
        2 * self.n as Var + self.sym_offset[i] + pos as Var
    }

    pub fn is_x(&self, v: Var) -> bool {
        (v as usize) < self.n
    }

    pub fn is_y(&self, v: Var) -> bool {
        (v as usize) >= self.n && (v as usize) < 2 * self.n
    }

    pub fn is_xy(&self, v: Var) -> bool {
        (v as usize) < 2 * self.n
    }

    pub fn is_sym(&self, v: Var) -> bool {
        (v as usize) >= 2 * self.n && v < 2 * self.n as Var + self.total_syms
    }

    /// Group of an x or y variable.
    pub fn group_of_var(&self, v: Var) -> usize {
        let t = if self.is_x(v) { v as usize } else { v as usize - self.n };
        self.group_of[t]
    }

    pub fn sym_of(&self, v: Var) -> Option<(usize, usize)> {
        if !self.is_sym(v) {
            return None;
        }
        let rel = v - 2 * self.n as Var;
        let i = match self.sym_offset.binary_search(&rel) {
            Ok(i) => {
                // First poly with this offset (empty supports collapse).
                let mut i = i;
                while i + 1 < self.sym_offset.len() && self.sym_offset[i + 1] == rel {
                    i += 1;
                }
                i
            }
            Err(i) => i - 1,
        };
        Some((i, (rel - self.sym_offset[i]) as usize))
    }

    pub fn sym_count(&self) -> u32 {
        self.total_syms
    }

    fn letter(i: usize) -> String {
        if i < 26 {
            ((b'a' + i as u8) as char).to_string()
        } else {
            format!("f{i}c")
        }
    }

    pub fn name(&self, v: Var) -> String {
        if self.is_x(v) {
            format!("x{}", v as usize + 1)
        } else if self.is_y(v) {
            format!("y{}", v as usize - self.n + 1)
        } else if let Some((i, pos)) = self.sym_of(v) {
            format!("{}{}", Self::letter(i), pos)
        } else {
            format!("v{v}")
        }
    }

    /// Parses a symbol name like "a3" or "c12" back to its variable id.
    pub fn parse_sym(&self, name: &str) -> Option<Var> {
        let (head, digits) = name.split_at(name.find(|c: char| c.is_ascii_digit())?);
        let pos: usize = digits.parse().ok()?;
        let i = if head.len() == 1 {
            (head.bytes().next()? as usize).checked_sub(b'a' as usize)?
        } else {
            head.strip_prefix('f')?.strip_suffix('c')?.parse().ok()?
        };
        if i >= self.sym_offset.len() {
            return None;
        }
        let v = self.sym(i, pos);
        if self.is_sym(v) && self.sym_of(v) == Some((i, pos)) {
            Some(v)
        } else {
            None
        }
    }
}

/// Exponent tuples e in N^l with |e| <= deg, lexicographically ascending
/// with the first coordinate most significant.
pub fn group_monomials(l: usize, deg: i64) -> Vec<Vec<u16>> {
    fn rec(l: usize, deg: i64, cur: &mut Vec<u16>, out: &mut Vec<Vec<u16>>) {
        if cur.len() == l {
            out.push(cur.clone());
            return;
        }
        for e in 0..=deg {
            cur.push(e as u16);
            rec(l, deg - e, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(l, deg, &mut Vec::with_capacity(l), &mut out);
    out
}

/// A generic scaled system: supports in canonical order and the generic
/// polynomials f_i = sum of sym(i, pos) * x^mono.
#[derive(Clone, Debug)]
pub struct System {
    pub data: SystemData,
    pub vars: VarTable,
    pub supports: Vec<Vec<Mono>>,
    pub polys: Vec<Poly>,
}

/// Canonical support of a polynomial of multidegree degs: the per-group lists
/// combined with group 1 cycling fastest.
fn support_monomials(data: &SystemData, vt: &VarTable, degs: &[i64]) -> Vec<Mono> {
    let lists: Vec<Vec<Vec<u16>>> = (0..data.r)
        .map(|k| group_monomials(data.l[k] as usize, degs[k]))
        .collect();
    let mut out = Vec::new();
    let mut idx = vec![0usize; data.r];
    loop {
        let mut pairs = Vec::new();
        for k in 0..data.r {
            for (j, &e) in lists[k][idx[k]].iter().enumerate() {
                if e > 0 {
                    pairs.push((vt.x_group(k, j), e as u32));
                }
            }
        }
        out.push(Mono::from_pairs(pairs));
        let mut k = 0;
        loop {
            if k == data.r {
                return out;
            }
            idx[k] += 1;
            if idx[k] < lists[k].len() {
                break;
            }
            idx[k] = 0;
            k += 1;
        }
    }
}

/// Builds the generic system of type (l, d, s) with fresh coefficient
/// indeterminates in canonical support order.
pub fn make_generic_system(data: &SystemData) -> System {
    let sizes: Vec<usize> = (0..=data.n)
        .map(|i| {
            (0..data.r)
                .map(|k| {
                    crate::combinatorics::binomial(
                        data.s[i] * data.d[k] + data.l[k],
                        data.l[k],
                    ) as usize
                })
                .product()
        })
        .collect();
    let vt = VarTable::new(data, &sizes);
    let mut supports = Vec::with_capacity(data.n + 1);
    let mut polys = Vec::with_capacity(data.n + 1);
    for i in 0..=data.n {
        let degs: Vec<i64> = (0..data.r).map(|k| data.s[i] * data.d[k]).collect();
        let support = support_monomials(data, &vt, &degs);
        assert_eq!(support.len(), sizes[i]);
        let mut f = Poly::zero();
        for (pos, mono) in support.iter().enumerate() {
            f = f.add(&Poly::monomial(mono.clone(), Rat::one()).mul(&Poly::var(vt.sym(i, pos))));
        }
        supports.push(support);
        polys.push(f);
    }
    System { data: data.clone(), vars: vt, supports, polys }
}

impl System {
    /// The coefficient of f_i at an x-monomial: a symbol, or zero outside
    /// the support.
    pub fn coef(&self, i: usize, mono: &Mono) -> Poly {
        let vt = &self.vars;
        self.polys[i].coef_where(mono, |v| vt.is_xy(v))
    }

    pub fn support_index(&self, i: usize, mono: &Mono) -> Option<usize> {
        self.supports[i].iter().position(|m| m == mono)
    }

    /// Replaces the group-k variables of f by their y (or x) partners.
    pub fn substitute_group(&self, f: &Poly, k: usize, to_y: bool) -> Poly {
        let vt = &self.vars;
        f.rename(|v| {
            if vt.is_x(v) && to_y && vt.group_of_var(v) == k {
                vt.y(v as usize)
            } else if vt.is_y(v) && !to_y && vt.group_of_var(v) == k {
                vt.x(v as usize - vt.n)
            } else {
                v
            }
        })
    }
}

/// Determinant of a square polynomial matrix: cofactor expansion up to 4x4,
/// fraction-free elimination above that.
pub fn poly_matrix_det(mat: &[Vec<Poly>]) -> Poly {
    let n = mat.len();
    assert!(mat.iter().all(|row| row.len() == n), "matrix must be square");
    if n == 0 {
        return Poly::one();
    }
    if n <= 4 {
        return det_cofactor(mat);
    }
    det_bareiss(mat)
}

fn det_cofactor(mat: &[Vec<Poly>]) -> Poly {
    let n = mat.len();
    if n == 1 {
        return mat[0][0].clone();
    }
    let mut det = Poly::zero();
    for i in 0..n {
        if mat[i][0].is_zero() {
            continue;
        }
        let minor: Vec<Vec<Poly>> = (0..n)
            .filter(|&r| r != i)
            .map(|r| mat[r][1..].to_vec())
            .collect();
        let term = mat[i][0].mul(&det_cofactor(&minor));
        det = if i % 2 == 0 { det.add(&term) } else { det.sub(&term) };
    }
    det
}

fn det_bareiss(mat: &[Vec<Poly>]) -> Poly {
    let n = mat.len();
    let mut m: Vec<Vec<Poly>> = mat.to_vec();
    let mut sign = false;
    let mut prev = Poly::one();
    for k in 0..n - 1 {
        if m[k][k].is_zero() {
            match (k + 1..n).find(|&i| !m[i][k].is_zero()) {
                Some(i) => {
                    m.swap(k, i);
                    sign = !sign;
                }
                None => return Poly::zero(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let num = m[k][k].mul(&m[i][j]).sub(&m[i][k].mul(&m[k][j]));
                m[i][j] = num.exact_div(&prev).expect("Bareiss division is exact");
            }
        }
        for i in k + 1..n {
            m[i][k] = Poly::zero();
        }
        prev = m[k][k].clone();
    }
    let det = m[n - 1][n - 1].clone();
    if sign {
        det.neg()
    } else {
        det
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::combinatorics::validate_system;

    fn ex5() -> System {
        make_generic_system(&validate_system(&[1, 1], &[1, 1], &[1, 1, 2]).unwrap())
    }

    #[test]
    fn generic_system_labels() {
        let sys = ex5();
        let vt = &sys.vars;
        // f0 = a0 + a1*x1 + a2*x2 + a3*x1*x2 in canonical support order.
        let expect = [
            Mono::one(),
            Mono::var(vt.x(0)),
            Mono::var(vt.x(1)),
            Mono::var(vt.x(0)).mul(&Mono::var(vt.x(1))),
        ];
        assert_eq!(sys.supports[0], expect);
        assert_eq!(vt.name(vt.sym(0, 1)), "a1");
        assert_eq!(vt.name(vt.sym(1, 3)), "b3");
        // f2 has 9 terms, the last one is c8*x1^2*x2^2.
        assert_eq!(sys.supports[2].len(), 9);
        let last = sys.supports[2].last().unwrap();
        assert_eq!(last.exp(vt.x(0)), 2);
        assert_eq!(last.exp(vt.x(1)), 2);
        assert_eq!(vt.name(vt.sym(2, 8)), "c8");
        // Support size formula per polynomial.
        for i in 0..3 {
            let expect: i64 = (0..sys.data.r)
                .map(|k| {
                    crate::combinatorics::binomial(
                        sys.data.s[i] * sys.data.d[k] + sys.data.l[k],
                        sys.data.l[k],
                    )
                })
                .product();
            assert_eq!(sys.supports[i].len() as i64, expect);
        }
    }

    #[test]
    fn unmixed_quadric_labels() {
        // l=(2), d=(2), s=(1,1,1): support order 1, x2, x2^2, x1, x1*x2, x1^2.
        let sys =
            make_generic_system(&validate_system(&[2], &[2], &[1, 1, 1]).unwrap());
        let vt = &sys.vars;
        let names: Vec<String> = sys.supports[2]
            .iter()
            .map(|m| Poly::monomial(m.clone(), Rat::one()).render(|v| vt.name(v)))
            .collect();
        assert_eq!(names, vec!["1", "x2", "x2^2", "x1", "x1*x2", "x1^2"]);
    }

    #[test]
    fn coef_examples() {
        let sys = ex5();
        let vt = &sys.vars;
        let x1x2 = Mono::var(vt.x(0)).mul(&Mono::var(vt.x(1)));
        assert_eq!(sys.coef(0, &x1x2), Poly::var(vt.sym(0, 3)));
        let x1sq = Mono::var_pow(vt.x(0), 2);
        assert!(sys.coef(0, &x1sq).is_zero());
        let big = x1sq.mul(&Mono::var_pow(vt.x(1), 2));
        assert_eq!(sys.coef(2, &big), Poly::var(vt.sym(2, 8)));
    }

    #[test]
    fn ring_ops() {
        let sys = ex5();
        let f = &sys.polys[0];
        assert!(f.add(&f.neg()).is_zero());
        let x1 = Poly::var(sys.vars.x(0));
        let y1 = Poly::var(sys.vars.y(0));
        let prod = x1.sub(&y1).mul(&x1.add(&y1));
        let expect = x1.mul(&x1).sub(&y1.mul(&y1));
        assert_eq!(prod, expect);
        let fg = sys.polys[0].mul(&sys.polys[1]);
        let vt = &sys.vars;
        assert_eq!(fg.deg_where(|v| vt.is_x(v)), 4);
    }

    #[test]
    fn exact_division() {
        let sys = ex5();
        let vt = &sys.vars;
        let x1 = Poly::var(vt.x(0));
        let y1 = Poly::var(vt.y(0));
        let num = x1.mul(&x1).sub(&y1.mul(&y1));
        let den = x1.sub(&y1);
        assert_eq!(num.exact_div(&den).unwrap(), x1.add(&y1));
        assert_eq!(num.exact_div(&x1.add(&y1)).unwrap(), den);
        assert_eq!(num.exact_div(&sys.polys[0]), Err(Error::NotDivisible));
        // Classical 1x1 Bezoutian of two generic linear forms, up to the
        // global sign fixed by the (x - y) divisor orientation.
        let lin = make_generic_system(&validate_system(&[1], &[1], &[1, 1]).unwrap());
        let lt = &lin.vars;
        let f0 = &lin.polys[0];
        let f1 = &lin.polys[1];
        let sub_y = |p: &Poly| lin.substitute_group(p, 0, true);
        let num = f0.mul(&sub_y(f1)).sub(&sub_y(f0).mul(f1));
        let den = Poly::var(lt.x(0)).sub(&Poly::var(lt.y(0)));
        let q = num.exact_div(&den).unwrap();
        let a0b1 = Poly::var(lt.sym(0, 0)).mul(&Poly::var(lt.sym(1, 1)));
        let a1b0 = Poly::var(lt.sym(0, 1)).mul(&Poly::var(lt.sym(1, 0)));
        assert_eq!(q, a1b0.sub(&a0b1));
    }

    #[test]
    fn matrix_det() {
        let sys = ex5();
        let vt = &sys.vars;
        let a0 = Poly::var(vt.sym(0, 0));
        let a1 = Poly::var(vt.sym(0, 1));
        let b0 = Poly::var(vt.sym(1, 0));
        let b1 = Poly::var(vt.sym(1, 1));
        let det = poly_matrix_det(&[vec![a0.clone(), a1.clone()], vec![b0.clone(), b1.clone()]]);
        assert_eq!(det, a0.mul(&b1).sub(&a1.mul(&b0)));
        // Repeated rows annihilate.
        let det =
            poly_matrix_det(&[vec![a0.clone(), a1.clone()], vec![a0.clone(), a1.clone()]]);
        assert!(det.is_zero());
    }

    #[test]
    fn bareiss_matches_cofactor() {
        // 5x5 with small polynomial entries exercises the elimination path.
        let sys = ex5();
        let vt = &sys.vars;
        let e = |i: usize, j: usize| -> Poly {
            let v = vt.sym(2, (3 * i + j) % 9);
            let c = rat_int(((i * 5 + j * 3) % 7) as i64 - 3);
            Poly::var(v).scale(&c).add(&Poly::constant(rat_int((i + 2 * j) as i64 % 3)))
        };
        let mat: Vec<Vec<Poly>> = (0..5).map(|i| (0..5).map(|j| e(i, j)).collect()).collect();
        let expand = |mat: &[Vec<Poly>]| -> Poly { super::det_cofactor(mat) };
        assert_eq!(det_bareiss(&mat), expand(&mat));
    }

    #[test]
    fn substitute_group_examples() {
        let sys = ex5();
        let vt = &sys.vars;
        let f = &sys.polys[0];
        let g = sys.substitute_group(f, 1, true);
        // a0 + a1*x1 + a2*y2 + a3*x1*y2
        let mut expect = Poly::var(vt.sym(0, 0));
        expect = expect.add(&Poly::var(vt.sym(0, 1)).mul(&Poly::var(vt.x(0))));
        expect = expect.add(&Poly::var(vt.sym(0, 2)).mul(&Poly::var(vt.y(1))));
        expect = expect
            .add(&Poly::var(vt.sym(0, 3)).mul(&Poly::var(vt.x(0))).mul(&Poly::var(vt.y(1))));
        assert_eq!(g, expect);
        // Substituting twice equals once; absent group is the identity.
        assert_eq!(sys.substitute_group(&g, 1, true), g);
        assert_eq!(sys.substitute_group(&g, 0, false), g);
    }

    #[test]
    fn specialization_commutes() {
        let sys = ex5();
        let vt = &sys.vars;
        let assign = |v: Var| -> Option<Rat> {
            vt.is_sym(v).then(|| rat((v % 7) as i64 - 3, 1 + (v % 4) as i64))
        };
        let f = &sys.polys[0];
        let g = &sys.polys[2];
        let lhs = f.mul(g).eval_partial(assign);
        let rhs = f.eval_partial(assign).mul(&g.eval_partial(assign));
        assert_eq!(lhs, rhs);
    }
}
