//! Space expressions and the suspension splitting pipeline.

use std::collections::BTreeMap;
use std::fmt;

use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::group::{factorize, is_prime, FgAbGroup};

/// Expression tree over spheres, Moore spaces and `K(C,1)` layers.
///
/// Use the lower-case constructors ([`susp`], [`smash`], [`wedge`],
/// [`product`]) to keep nodes flattened and sorted.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum SpaceExpr {
    Point,
    /// `S^n`, `n >= 1`.
    Sphere(u32),
    /// `K(Z,1)`.
    Circle,
    /// `K(Z/p^r, 1)`.
    Em1 {
        prime: u64,
        exp: u32,
    },
    /// `M(Z/order, dim)` with `order >= 2`, `dim >= 1`.
    Moore {
        order: u64,
        dim: u32,
    },
    Susp(Box<SpaceExpr>),
    Smash(Vec<SpaceExpr>),
    Wedge(Vec<SpaceExpr>),
    Product(Vec<SpaceExpr>),
}

pub fn sphere(n: u32) -> Result<SpaceExpr> {
    if n == 0 {
        return Err(Error::InvalidInput("spheres start in dimension 1".into()));
    }
    Ok(SpaceExpr::Sphere(n))
}

pub fn em1(prime: u64, exp: u32) -> Result<SpaceExpr> {
    if !is_prime(prime) || exp == 0 {
        return Err(Error::InvalidInput(format!("K(Z/{prime}^{exp},1) needs a prime and a positive exponent")));
    }
    Ok(SpaceExpr::Em1 { prime, exp })
}

pub fn moore(order: u64, dim: u32) -> Result<SpaceExpr> {
    if order < 2 || dim == 0 {
        return Err(Error::InvalidInput(format!("M(Z/{order},{dim}) needs order >= 2 and dimension >= 1")));
    }
    Ok(SpaceExpr::Moore { order, dim })
}

pub fn susp(x: SpaceExpr) -> SpaceExpr {
    match x {
        SpaceExpr::Point => SpaceExpr::Point,
        x => SpaceExpr::Susp(Box::new(x)),
    }
}

pub fn susp_n(mut x: SpaceExpr, k: u32) -> SpaceExpr {
    for _ in 0..k {
        x = susp(x);
    }
    x
}

fn flatten(
    xs: Vec<SpaceExpr>,
    pick: fn(SpaceExpr) -> std::result::Result<Vec<SpaceExpr>, SpaceExpr>,
) -> Vec<SpaceExpr> {
    let mut out = Vec::new();
    for x in xs {
        match pick(x) {
            Ok(inner) => out.extend(inner),
            Err(x) => out.push(x),
        }
    }
    out.sort();
    out
}

/// Smash product; a `Point` factor absorbs everything.
pub fn smash(xs: Vec<SpaceExpr>) -> SpaceExpr {
    let mut xs = flatten(xs, |x| match x {
        SpaceExpr::Smash(v) => Ok(v),
        x => Err(x),
    });
    if xs.is_empty() || xs.contains(&SpaceExpr::Point) {
        return SpaceExpr::Point;
    }
    if xs.len() == 1 {
        return xs.pop().expect("one element");
    }
    SpaceExpr::Smash(xs)
}

/// Wedge sum; `Point` summands are dropped.
pub fn wedge(xs: Vec<SpaceExpr>) -> SpaceExpr {
    let mut xs = flatten(xs, |x| match x {
        SpaceExpr::Wedge(v) => Ok(v),
        x => Err(x),
    });
    xs.retain(|x| *x != SpaceExpr::Point);
    match xs.len() {
        0 => SpaceExpr::Point,
        1 => xs.pop().expect("one element"),
        _ => SpaceExpr::Wedge(xs),
    }
}

/// Cartesian product; `Point` factors are dropped. Factors keep their order.
pub fn product(xs: Vec<SpaceExpr>) -> SpaceExpr {
    let mut xs: Vec<SpaceExpr> = xs.into_iter().filter(|x| *x != SpaceExpr::Point).collect();
    match xs.len() {
        0 => SpaceExpr::Point,
        1 => xs.pop().expect("one element"),
        _ => SpaceExpr::Product(xs),
    }
}

/// `K(A,1)` as a product of circles and `K(Z/p^r,1)` factors, one per
/// summand of the primary decomposition.
pub fn em1_of_group(a: &FgAbGroup) -> SpaceExpr {
    let mut factors = Vec::new();
    for (p, exps) in a.primary_parts() {
        factors.extend(exps.into_iter().map(|exp| SpaceExpr::Em1 { prime: p, exp }));
    }
    factors.extend(std::iter::repeat_n(SpaceExpr::Circle, a.free_rank()));
    product(factors)
}

impl fmt::Display for SpaceExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let join = |f: &mut fmt::Formatter<'_>, xs: &[SpaceExpr], sep: &str| -> fmt::Result {
            write!(f, "(")?;
            for (i, x) in xs.iter().enumerate() {
                if i > 0 {
                    write!(f, " {sep} ")?;
                }
                write!(f, "{x}")?;
            }
            write!(f, ")")
        };
        match self {
            SpaceExpr::Point => write!(f, "*"),
            SpaceExpr::Sphere(n) => write!(f, "S^{n}"),
            SpaceExpr::Circle => write!(f, "K(Z,1)"),
            SpaceExpr::Em1 { prime, exp } => write!(f, "K(Z/{},1)", prime.pow(*exp)),
            SpaceExpr::Moore { order, dim } => write!(f, "M(Z/{order},{dim})"),
            SpaceExpr::Susp(x) => {
                let mut k = 1;
                let mut inner = x.as_ref();
                while let SpaceExpr::Susp(y) = inner {
                    k += 1;
                    inner = y;
                }
                if k == 1 {
                    write!(f, "Sigma {inner}")
                } else {
                    write!(f, "Sigma^{k} {inner}")
                }
            }
            SpaceExpr::Smash(xs) => join(f, xs, "/\\"),
            SpaceExpr::Wedge(xs) => join(f, xs, "v"),
            SpaceExpr::Product(xs) => join(f, xs, "x"),
        }
    }
}

/// Connectivity, with `None` for a contractible point.
pub fn connectivity(x: &SpaceExpr) -> Option<u32> {
    match x {
        SpaceExpr::Point => None,
        SpaceExpr::Sphere(n) => Some(n - 1),
        SpaceExpr::Moore { dim, .. } => Some(dim - 1),
        SpaceExpr::Circle | SpaceExpr::Em1 { .. } => Some(0),
        SpaceExpr::Susp(y) => connectivity(y).map(|c| c + 1),
        SpaceExpr::Smash(xs) => {
            let mut total = 0;
            for y in xs {
                total += connectivity(y)?;
            }
            Some(total + xs.len() as u32 - 1)
        }
        SpaceExpr::Wedge(xs) | SpaceExpr::Product(xs) => xs.iter().filter_map(connectivity).min(),
    }
}

// ---------------------------------------------------------------------------
// Normalisation

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
enum Atom {
    Em1(u64, u32),
    /// `M(Z/p^r, 1)`.
    Moore(u64, u32),
    Product(Vec<SpaceExpr>),
}

impl Atom {
    fn prime(&self) -> Option<u64> {
        match self {
            Atom::Em1(p, _) | Atom::Moore(p, _) => Some(*p),
            Atom::Product(_) => None,
        }
    }

    fn to_expr(&self) -> SpaceExpr {
        match self {
            Atom::Em1(prime, exp) => SpaceExpr::Em1 { prime: *prime, exp: *exp },
            Atom::Moore(p, r) => SpaceExpr::Moore { order: p.pow(*r), dim: 1 },
            Atom::Product(xs) => SpaceExpr::Product(xs.clone()),
        }
    }
}

/// `Sigma^susp (atom_1 /\ ... /\ atom_k)`; no atoms means `S^susp`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
struct Term {
    susp: u32,
    atoms: Vec<Atom>,
}

impl Term {
    fn to_expr(&self) -> SpaceExpr {
        if self.atoms.is_empty() {
            return SpaceExpr::Sphere(self.susp);
        }
        if let [Atom::Moore(p, r)] = self.atoms.as_slice() {
            return SpaceExpr::Moore { order: p.pow(*r), dim: self.susp + 1 };
        }
        susp_n(smash(self.atoms.iter().map(Atom::to_expr).collect()), self.susp)
    }
}

fn norm(x: &SpaceExpr) -> Vec<Term> {
    match x {
        SpaceExpr::Point => vec![],
        SpaceExpr::Sphere(n) => vec![Term { susp: *n, atoms: vec![] }],
        SpaceExpr::Circle => vec![Term { susp: 1, atoms: vec![] }],
        SpaceExpr::Em1 { prime, exp } => vec![Term { susp: 0, atoms: vec![Atom::Em1(*prime, *exp)] }],
        SpaceExpr::Moore { order, dim } => {
            factorize(*order).into_iter().map(|(p, r)| Term { susp: dim - 1, atoms: vec![Atom::Moore(p, r)] }).collect()
        }
        SpaceExpr::Susp(y) => norm(y)
            .into_iter()
            .flat_map(|mut t| {
                t.susp += 1;
                expand_term(t)
            })
            .collect(),
        SpaceExpr::Wedge(xs) => xs.iter().flat_map(norm).collect(),
        SpaceExpr::Smash(xs) => {
            let mut acc = vec![Term { susp: 0, atoms: vec![] }];
            for y in xs {
                let ys = norm(y);
                let mut next = Vec::new();
                for a in &acc {
                    for b in &ys {
                        let mut atoms = a.atoms.clone();
                        atoms.extend(b.atoms.iter().cloned());
                        next.push(Term { susp: a.susp + b.susp, atoms });
                    }
                }
                acc = next;
            }
            acc.into_iter().flat_map(expand_term).collect()
        }
        SpaceExpr::Product(xs) => {
            let kept: Vec<SpaceExpr> = xs.iter().map(simplify).filter(|y| *y != SpaceExpr::Point).collect();
            match kept.len() {
                0 => vec![],
                1 => norm(&kept[0]),
                _ => vec![Term { susp: 0, atoms: vec![Atom::Product(kept)] }],
            }
        }
    }
}

/// Applies the rewrites that need at least one suspension.
fn expand_term(mut t: Term) -> Vec<Term> {
    if t.susp == 0 {
        t.atoms.sort();
        return vec![t];
    }
    if let Some(pos) = t.atoms.iter().position(|a| matches!(a, Atom::Product(_))) {
        let Atom::Product(factors) = t.atoms.remove(pos) else { unreachable!() };
        let rest: Vec<SpaceExpr> = t.atoms.iter().map(Atom::to_expr).collect();
        let mut out = Vec::new();
        for mask in 1u32..(1 << factors.len()) {
            let mut parts: Vec<SpaceExpr> =
                (0..factors.len()).filter(|i| mask & (1 << i) != 0).map(|i| factors[i].clone()).collect();
            parts.extend(rest.iter().cloned());
            out.extend(norm(&susp_n(smash(parts), t.susp)));
        }
        return out;
    }
    let mut primes: Vec<u64> = t.atoms.iter().filter_map(Atom::prime).collect();
    primes.dedup();
    primes.sort_unstable();
    primes.dedup();
    if primes.len() > 1 {
        return vec![];
    }
    let moores: Vec<usize> =
        t.atoms.iter().enumerate().filter(|(_, a)| matches!(a, Atom::Moore(..))).map(|(i, _)| i).collect();
    // a pair of Moore atoms with max order > 2 splits into two shifted copies
    for (x, &i) in moores.iter().enumerate() {
        for &j in &moores[x + 1..] {
            let (Atom::Moore(p, r), Atom::Moore(_, s)) = (&t.atoms[i], &t.atoms[j]) else { unreachable!() };
            let (p, lo, hi) = (*p, (*r).min(*s), (*r).max(*s));
            if p.pow(hi) == 2 {
                continue;
            }
            let mut atoms = t.atoms.clone();
            atoms.remove(j);
            atoms[i] = Atom::Moore(p, lo);
            let base = t.susp - 1;
            return [2, 3]
                .into_iter()
                .flat_map(|shift| expand_term(Term { susp: base + shift, atoms: atoms.clone() }))
                .collect();
        }
    }
    t.atoms.sort();
    vec![t]
}

/// Rewrites to a wedge of suspended smashes of atoms: suspended products
/// split, cross-prime smashes vanish, smashes of Moore spaces decompose.
pub fn simplify(x: &SpaceExpr) -> SpaceExpr {
    wedge(norm(x).iter().map(Term::to_expr).collect())
}

/// `Sigma(X_1 x ... x X_k)` as the wedge of suspended smashes of nonempty
/// sub-products, normalised.
pub fn suspend_product(x: &SpaceExpr) -> Result<SpaceExpr> {
    match x {
        SpaceExpr::Susp(inner) if matches!(inner.as_ref(), SpaceExpr::Product(_)) => Ok(simplify(x)),
        _ => Err(Error::InvalidInput(format!("suspend_product expects the suspension of a product, got {x}"))),
    }
}

/// `Sigma^(m+1) (M(Z/p^r,1) /\ M(Z/q^s,1))` rewritten when possible.
pub fn moore_smash(p: u64, r: u32, q: u64, s: u32, m: u32) -> Result<SpaceExpr> {
    let a = moore(p.pow(r), 1)?;
    let b = moore(q.pow(s), 1)?;
    if !is_prime(p) || !is_prime(q) {
        return Err(Error::InvalidInput("moore_smash takes prime powers".into()));
    }
    if p != q {
        return Ok(SpaceExpr::Point);
    }
    if p.pow(r.max(s)) == 2 {
        return Ok(susp_n(smash(vec![a, b]), m + 1));
    }
    let low = p.pow(r.min(s));
    Ok(wedge(vec![moore(low, 3 + m)?, moore(low, 4 + m)?]))
}

// ---------------------------------------------------------------------------
// Smash forms

/// `Sigma^m K(Z/p^r1,1) /\ ... /\ K(Z/p^rt,1)`, or `S^m` when `t = 0`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SmashForm {
    m: u32,
    prime: Option<u64>,
    exps: Vec<u32>,
}

impl SmashForm {
    pub fn new(m: u32, prime: Option<u64>, mut exps: Vec<u32>) -> Result<Self> {
        if m == 0 {
            return Err(Error::InvalidInput("smash forms carry at least one suspension".into()));
        }
        if prime.is_some() == exps.is_empty() {
            return Err(Error::InvalidInput(
                "a prime is given exactly when there are Eilenberg-MacLane factors".into(),
            ));
        }
        if let Some(p) = prime {
            if !is_prime(p) {
                return Err(Error::InvalidInput(format!("{p} is not prime")));
            }
        }
        if exps.contains(&0) {
            return Err(Error::InvalidInput("exponents must be positive".into()));
        }
        exps.sort_unstable();
        Ok(SmashForm { m, prime, exps })
    }

    pub fn sphere(m: u32) -> Result<Self> {
        Self::new(m, None, vec![])
    }

    pub fn m(&self) -> u32 {
        self.m
    }

    pub fn prime(&self) -> Option<u64> {
        self.prime
    }

    pub fn exps(&self) -> &[u32] {
        &self.exps
    }

    pub fn t(&self) -> u32 {
        self.exps.len() as u32
    }

    /// Dimension of the bottom cell, `m + t`.
    pub fn bottom(&self) -> u32 {
        self.m + self.t()
    }

    pub fn is_sphere(&self) -> bool {
        self.prime.is_none()
    }

    pub fn min_exp(&self) -> Option<u32> {
        self.exps.first().copied()
    }

    pub fn to_expr(&self) -> SpaceExpr {
        match self.prime {
            None => SpaceExpr::Sphere(self.m),
            Some(p) => susp_n(smash(self.exps.iter().map(|&exp| SpaceExpr::Em1 { prime: p, exp }).collect()), self.m),
        }
    }

    fn key(&self) -> (u32, Option<u64>, &[u32], u32) {
        (self.bottom(), self.prime, &self.exps, self.m)
    }

    /// `Sigma (X_1 /\ ... /\ X_k)` where `Sigma X_i` is each input; `None` when
    /// primes clash and the smash is contractible.
    fn cross(parts: &[&SmashForm]) -> Option<SmashForm> {
        let mut m = 1;
        let mut prime = None;
        let mut exps = Vec::new();
        for f in parts {
            m += f.m - 1;
            if let Some(p) = f.prime {
                if prime.is_some_and(|q| q != p) {
                    return None;
                }
                prime = Some(p);
            }
            exps.extend(f.exps.iter().copied());
        }
        exps.sort_unstable();
        Some(SmashForm { m, prime, exps })
    }
}

impl PartialOrd for SmashForm {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for SmashForm {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.key().cmp(&other.key())
    }
}

impl fmt::Display for SmashForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let Some(p) = self.prime else {
            return write!(f, "S^{}", self.m);
        };
        match self.m {
            1 => write!(f, "Sigma ")?,
            m => write!(f, "Sigma^{m} ")?,
        }
        let atoms: Vec<String> = self.exps.iter().map(|&r| format!("K(Z/{},1)", p.pow(r))).collect();
        write!(f, "{}", atoms.join(" /\\ "))
    }
}

impl Serialize for SmashForm {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct Repr<'a> {
            text: String,
            m: u32,
            prime: Option<u64>,
            exponents: &'a [u32],
            bottom: u32,
        }
        Repr { text: self.to_string(), m: self.m, prime: self.prime, exponents: &self.exps, bottom: self.bottom() }
            .serialize(s)
    }
}

/// Smash forms with positive multiplicities, in canonical order.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct FormMultiset(BTreeMap<SmashForm, usize>);

impl FormMultiset {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn add(&mut self, f: SmashForm, k: usize) {
        if k > 0 {
            *self.0.entry(f).or_insert(0) += k;
        }
    }

    pub fn get(&self, f: &SmashForm) -> usize {
        self.0.get(f).copied().unwrap_or(0)
    }

    pub fn iter(&self) -> impl Iterator<Item = (&SmashForm, usize)> {
        self.0.iter().map(|(f, &k)| (f, k))
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Number of distinct forms.
    pub fn len(&self) -> usize {
        self.0.len()
    }

    /// Sum of multiplicities.
    pub fn total(&self) -> usize {
        self.0.values().sum()
    }

    /// Each form repeated by its multiplicity, in canonical order.
    pub fn to_list(&self) -> Vec<SmashForm> {
        self.iter().flat_map(|(f, k)| std::iter::repeat_n(f.clone(), k)).collect()
    }

    pub fn from_list(list: impl IntoIterator<Item = SmashForm>) -> Self {
        let mut m = Self::new();
        for f in list {
            m.add(f, 1);
        }
        m
    }

    pub fn to_expr(&self) -> SpaceExpr {
        wedge(self.to_list().iter().map(SmashForm::to_expr).collect())
    }
}

impl FromIterator<(SmashForm, usize)> for FormMultiset {
    fn from_iter<I: IntoIterator<Item = (SmashForm, usize)>>(iter: I) -> Self {
        let mut m = Self::new();
        for (f, k) in iter {
            m.add(f, k);
        }
        m
    }
}

impl fmt::Display for FormMultiset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (form, k) in self.iter() {
            writeln!(f, "{k} x {form}")?;
        }
        Ok(())
    }
}

impl Serialize for FormMultiset {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct Entry<'a> {
            form: &'a SmashForm,
            multiplicity: usize,
        }
        s.collect_seq(self.iter().map(|(form, multiplicity)| Entry { form, multiplicity }))
    }
}

/// Reads a normalised wedge back as smash forms. Fails on Moore or product
/// atoms, or on unsuspended terms.
pub fn to_forms(x: &SpaceExpr) -> Result<FormMultiset> {
    let mut out = FormMultiset::new();
    for t in norm(x) {
        if t.susp == 0 {
            return Err(Error::InvalidInput(format!("{} is not a suspension", t.to_expr())));
        }
        let mut prime = None;
        let mut exps = Vec::new();
        for a in &t.atoms {
            match a {
                Atom::Em1(p, r) => {
                    prime = Some(*p);
                    exps.push(*r);
                }
                _ => return Err(Error::InvalidInput(format!("{} is not a smash of K(Z/p^r,1) factors", t.to_expr()))),
            }
        }
        out.add(SmashForm::new(t.susp, prime, exps)?, 1);
    }
    Ok(out)
}

/// `Sigma^m K(A,1)` as a wedge of smash forms.
pub fn expand_sigma_m(a: &FgAbGroup, m: u32) -> Result<FormMultiset> {
    if m == 0 {
        return Err(Error::InvalidInput("needs at least one suspension".into()));
    }
    to_forms(&susp_n(em1_of_group(a), m))
}

/// `Sigma K(A,1) /\ K(A,1)` as a wedge of smash forms.
pub fn expand_sigma_k_smash(a: &FgAbGroup) -> FormMultiset {
    let k = em1_of_group(a);
    to_forms(&susp(smash(vec![k.clone(), k]))).expect("K(A,1) factors normalise to smash forms")
}

// ---------------------------------------------------------------------------
// Hilton-Milnor

/// Highest degree the Hilton-Milnor cutoff is used for.
pub const MAX_DEGREE: u32 = 5;

/// Summands of `pi_n` of a wedge of suspensions, by the iterated two-factor
/// Hilton-Milnor formula. Terms with bottom cell above `n` are dropped.
pub fn hilton_milnor_pi(w: &FormMultiset, n: u32) -> Result<FormMultiset> {
    if n > MAX_DEGREE {
        return Err(Error::OutOfRange { degree: n, supported: format!("degrees up to {MAX_DEGREE}") });
    }
    if let Some((f, _)) = w.iter().find(|(f, _)| f.bottom() < 2) {
        return Err(Error::InvalidInput(format!("{f} is not the suspension of a connected space")));
    }
    let mut out = FormMultiset::new();
    hm(w.to_list(), n, &mut out);
    Ok(out)
}

fn hm(mut list: Vec<SmashForm>, n: u32, out: &mut FormMultiset) {
    list.retain(|f| f.bottom() <= n);
    list.sort();
    let Some((first, rest)) = list.split_first() else { return };
    out.add(first.clone(), 1);
    // Sigma X^(i) /\ Y_a1 /\ ... /\ Y_aj with i, j >= 1
    let mut inner = Vec::new();
    let mut firsts = vec![first];
    loop {
        let mut grew = false;
        let mut tails: Vec<Vec<&SmashForm>> = rest.iter().map(|y| vec![y]).collect();
        while !tails.is_empty() {
            let mut next = Vec::new();
            for tail in &tails {
                let mut parts = firsts.clone();
                parts.extend(tail.iter().copied());
                let raw_bottom = 1 + parts.iter().map(|f| f.bottom() - 1).sum::<u32>();
                if raw_bottom > n {
                    continue;
                }
                grew = true;
                if let Some(f) = SmashForm::cross(&parts) {
                    inner.push(f);
                }
                for y in rest {
                    let mut t = tail.clone();
                    t.push(y);
                    next.push(t);
                }
            }
            tails = next;
        }
        if !grew {
            break;
        }
        firsts.push(first);
    }
    hm(rest.to_vec(), n, out);
    hm(inner, n, out);
}

#[cfg(test)]
mod tests {
    use super::*;

    fn form(m: u32, prime: Option<u64>, exps: &[u32]) -> SmashForm {
        SmashForm::new(m, prime, exps.to_vec()).unwrap()
    }

    #[test]
    fn constructors_normalise() {
        assert_eq!(susp(SpaceExpr::Point), SpaceExpr::Point);
        assert_eq!(smash(vec![SpaceExpr::Circle, SpaceExpr::Point]), SpaceExpr::Point);
        assert_eq!(wedge(vec![SpaceExpr::Point, SpaceExpr::Circle]), SpaceExpr::Circle);
        let a = smash(vec![SpaceExpr::Sphere(2), smash(vec![SpaceExpr::Circle, SpaceExpr::Sphere(1)])]);
        assert_eq!(a, SpaceExpr::Smash(vec![SpaceExpr::Sphere(1), SpaceExpr::Sphere(2), SpaceExpr::Circle]));
        assert!(sphere(0).is_err());
        assert!(em1(4, 1).is_err());
        assert!(moore(1, 2).is_err());
    }

    #[test]
    fn torus_splitting() {
        let torus = product(vec![SpaceExpr::Circle, SpaceExpr::Circle]);
        let x = suspend_product(&susp(torus)).unwrap();
        assert_eq!(x, wedge(vec![SpaceExpr::Sphere(2), SpaceExpr::Sphere(2), SpaceExpr::Sphere(3)]));
        assert!(suspend_product(&SpaceExpr::Circle).is_err());
    }

    #[test]
    fn circle_times_rp_infinity() {
        let rp = SpaceExpr::Em1 { prime: 2, exp: 1 };
        let x = suspend_product(&susp(product(vec![SpaceExpr::Circle, rp.clone()]))).unwrap();
        let want = wedge(vec![SpaceExpr::Sphere(2), susp(rp.clone()), susp_n(rp, 2)]);
        assert_eq!(x, want);
    }

    #[test]
    fn three_factor_product_has_seven_terms() {
        let fs = vec![
            SpaceExpr::Em1 { prime: 2, exp: 1 },
            SpaceExpr::Em1 { prime: 2, exp: 2 },
            SpaceExpr::Em1 { prime: 2, exp: 3 },
        ];
        let SpaceExpr::Wedge(terms) = suspend_product(&susp(product(fs))).unwrap() else { panic!() };
        assert_eq!(terms.len(), 7);
    }

    #[test]
    fn expansion_examples() {
        let e = expand_sigma_k_smash(&FgAbGroup::cyclic(2));
        assert_eq!(e, FormMultiset::from_list([form(1, Some(2), &[1, 1])]));
        let e = expand_sigma_k_smash(&FgAbGroup::free(1));
        assert_eq!(e, FormMultiset::from_list([form(3, None, &[])]));
        let e = expand_sigma_k_smash(&FgAbGroup::from_cyclic_orders(&[0, 2]));
        let want: FormMultiset = [
            (form(3, None, &[]), 1),
            (form(2, Some(2), &[1]), 2),
            (form(3, Some(2), &[1]), 2),
            (form(1, Some(2), &[1, 1]), 1),
            (form(2, Some(2), &[1, 1]), 2),
            (form(3, Some(2), &[1, 1]), 1),
        ]
        .into_iter()
        .collect();
        assert_eq!(e, want);
    }

    #[test]
    fn cross_primes_vanish() {
        let e = expand_sigma_k_smash(&FgAbGroup::cyclic(6));
        assert_eq!(e, FormMultiset::from_list([form(1, Some(2), &[1, 1]), form(1, Some(3), &[1, 1])]));
    }

    #[test]
    fn moore_smash_cases() {
        assert_eq!(moore_smash(3, 1, 5, 1, 0).unwrap(), SpaceExpr::Point);
        assert_eq!(moore_smash(2, 1, 2, 3, 0).unwrap(), wedge(vec![moore(2, 3).unwrap(), moore(2, 4).unwrap()]));
        let x = moore_smash(2, 1, 2, 1, 0).unwrap();
        assert!(matches!(x, SpaceExpr::Susp(_)));
        assert_eq!(simplify(&x), x);
        let y = susp(smash(vec![moore(4, 1).unwrap(), moore(8, 1).unwrap()]));
        assert_eq!(simplify(&y), wedge(vec![moore(4, 3).unwrap(), moore(4, 4).unwrap()]));
    }

    #[test]
    fn connectivity_rules() {
        assert_eq!(connectivity(&SpaceExpr::Sphere(3)), Some(2));
        assert_eq!(connectivity(&susp_n(SpaceExpr::Em1 { prime: 2, exp: 3 }, 2)), Some(2));
        let m = moore(2, 2).unwrap();
        assert_eq!(connectivity(&smash(vec![m.clone(), m])), Some(3));
        assert_eq!(connectivity(&SpaceExpr::Point), None);
    }

    #[test]
    fn form_display_and_order() {
        assert_eq!(form(3, None, &[]).to_string(), "S^3");
        assert_eq!(form(2, Some(2), &[1]).to_string(), "Sigma^2 K(Z/2,1)");
        assert_eq!(form(1, Some(2), &[3, 1]).to_string(), "Sigma K(Z/2,1) /\\ K(Z/8,1)");
        assert!(form(3, None, &[]) < form(2, Some(2), &[1, 1]));
        assert!(SmashForm::new(0, None, vec![]).is_err());
        assert!(SmashForm::new(1, None, vec![1]).is_err());
        let mut w = FormMultiset::new();
        w.add(form(2, Some(2), &[1]), 2);
        assert_eq!(w.to_string(), "2 x Sigma^2 K(Z/2,1)\n");
    }

    #[test]
    fn hilton_milnor_examples() {
        let s3 = form(3, None, &[]);
        let two = FormMultiset::from_iter([(s3.clone(), 2)]);
        let want = FormMultiset::from_iter([(s3.clone(), 2), (form(5, None, &[]), 1)]);
        assert_eq!(hilton_milnor_pi(&two, 5).unwrap(), want);
        let one = FormMultiset::from_iter([(s3.clone(), 1)]);
        assert_eq!(hilton_milnor_pi(&one, 5).unwrap(), one);
        let e = expand_sigma_k_smash(&FgAbGroup::free(2));
        let h = hilton_milnor_pi(&e, 5).unwrap();
        let want = FormMultiset::from_iter([(s3, 4), (form(4, None, &[]), 4), (form(5, None, &[]), 7)]);
        assert_eq!(h, want);
        assert!(hilton_milnor_pi(&FormMultiset::from_list([form(1, None, &[])]), 5).is_err());
        assert!(hilton_milnor_pi(&one, 6).is_err());
    }
}
