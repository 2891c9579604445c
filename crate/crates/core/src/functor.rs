//! Polynomial functors on finitely generated abelian groups.
//!
//! Closed forms work over a cyclic decomposition, with `0` standing for an
//! infinite cyclic summand (so `gcd` gives the right tensor rule everywhere).
//! The `*_presentation` builders give independent answers from generators and
//! relations, and are what the closed forms get tested against.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::group::FgAbGroup;
use crate::matrix::{smith_normal_form, IntMatrix};
use crate::presentation::{AbMap, AbPresentation, Lattice};

/// Generator cap for the quadratic presentation builders.
pub const MAX_ORACLE_GENERATORS: usize = 12;

fn gcd(a: u64, b: u64) -> u64 {
    a.gcd(&b)
}

/// `Tor(Z/a, Z/b)` with `0` meaning `Z`.
fn tor_cyclic(a: u64, b: u64) -> u64 {
    if a == 0 || b == 0 {
        1
    } else {
        gcd(a, b)
    }
}

fn pairs<T>(v: &[T]) -> impl Iterator<Item = (&T, &T)> {
    v.iter().enumerate().flat_map(move |(i, x)| v[i + 1..].iter().map(move |y| (x, y)))
}

pub fn tensor(a: &FgAbGroup, b: &FgAbGroup) -> FgAbGroup {
    let (ca, cb) = (a.cyclic_orders(), b.cyclic_orders());
    let v: Vec<u64> = ca.iter().flat_map(|&x| cb.iter().map(move |&y| gcd(x, y))).collect();
    FgAbGroup::from_cyclic_orders(&v)
}

pub fn tor(a: &FgAbGroup, b: &FgAbGroup) -> FgAbGroup {
    let (ca, cb) = (a.cyclic_orders(), b.cyclic_orders());
    let v: Vec<u64> = ca.iter().flat_map(|&x| cb.iter().map(move |&y| tor_cyclic(x, y))).collect();
    FgAbGroup::from_cyclic_orders(&v)
}

pub fn lambda2(a: &FgAbGroup) -> FgAbGroup {
    let c = a.cyclic_orders();
    let v: Vec<u64> = pairs(&c).map(|(&x, &y)| gcd(x, y)).collect();
    FgAbGroup::from_cyclic_orders(&v)
}

pub fn lambda3(a: &FgAbGroup) -> FgAbGroup {
    let c = a.cyclic_orders();
    let mut v = Vec::new();
    for i in 0..c.len() {
        for j in i + 1..c.len() {
            for k in j + 1..c.len() {
                v.push(gcd(gcd(c[i], c[j]), c[k]));
            }
        }
    }
    FgAbGroup::from_cyclic_orders(&v)
}

fn gamma2_cyclic(m: u64) -> u64 {
    if m.is_multiple_of(2) {
        2 * m
    } else {
        m
    }
}

/// Whitehead's universal quadratic functor.
pub fn gamma2(a: &FgAbGroup) -> FgAbGroup {
    let c = a.cyclic_orders();
    let mut v: Vec<u64> = c.iter().map(|&m| gamma2_cyclic(m)).collect();
    v.extend(pairs(&c).map(|(&x, &y)| gcd(x, y)));
    FgAbGroup::from_cyclic_orders(&v)
}

/// Symmetric square.
pub fn sp2(a: &FgAbGroup) -> FgAbGroup {
    let c = a.cyclic_orders();
    let mut v = c.clone();
    v.extend(pairs(&c).map(|(&x, &y)| gcd(x, y)));
    FgAbGroup::from_cyclic_orders(&v)
}

/// `A (x)~ A`, the quotient of `A (x) A` by `a(x)b + b(x)a`.
pub fn tilde_sq(a: &FgAbGroup) -> FgAbGroup {
    let c = a.cyclic_orders();
    let mut v: Vec<u64> = c.iter().map(|&m| gcd(m, 2)).collect();
    v.extend(pairs(&c).map(|(&x, &y)| gcd(x, y)));
    FgAbGroup::from_cyclic_orders(&v)
}

/// First derived functor of `Gamma_2`, equal to `H_5(K(A,2))`.
pub fn r2(a: &FgAbGroup) -> FgAbGroup {
    let c = a.primary_cyclic_orders();
    let mut v: Vec<u64> = c.iter().filter(|&&m| m != 0 && m % 2 == 0).map(|_| 2).collect();
    v.extend(pairs(&c).map(|(&x, &y)| tor_cyclic(x, y)));
    FgAbGroup::from_cyclic_orders(&v)
}

/// First derived functor of `(x)~^2` on a cyclic group.
pub fn l1_tilde_sq(a: &FgAbGroup) -> Result<FgAbGroup> {
    if a.num_generators() > 1 {
        return Err(Error::InvalidInput(format!(
            "l1_tilde_sq takes a cyclic group, got {a}; use derived_tilde_sq on a free resolution instead"
        )));
    }
    Ok(match a.cyclic_orders().first() {
        None | Some(0) => FgAbGroup::zero(),
        Some(&n) => FgAbGroup::cyclic(gamma2_cyclic(n)),
    })
}

/// Free `Z/4`-module of rank `k^2` on an elementary 2-group of rank `k`.
pub fn half_square(a2: &FgAbGroup) -> Result<FgAbGroup> {
    if !a2.is_elementary_two() {
        return Err(Error::InvalidInput(format!("half_square needs an elementary abelian 2-group, got {a2}")));
    }
    let k = a2.num_generators();
    Ok(FgAbGroup::from_cyclic_orders(&vec![4; k * k]))
}

// ---------------------------------------------------------------------------
// Presentation builders

fn check_size(p: &AbPresentation) -> Result<()> {
    if p.generators() > MAX_ORACLE_GENERATORS {
        return Err(Error::TooManyGenerators { count: p.generators(), limit: MAX_ORACLE_GENERATORS });
    }
    Ok(())
}

/// Index of `(i, j)` with `i < j` among lexicographically ordered pairs of `0..n`.
fn pair_index(n: usize, i: usize, j: usize) -> usize {
    debug_assert!(i < j && j < n);
    i * n - i * (i + 1) / 2 + (j - i - 1)
}

/// Sorts distinct indices, returning the permutation sign, or `None` on a repeat.
fn sort_signed(idx: &mut [usize]) -> Option<i64> {
    let mut sign = 1;
    for i in 0..idx.len() {
        for j in 0..idx.len() - 1 - i {
            if idx[j] > idx[j + 1] {
                idx.swap(j, j + 1);
                sign = -sign;
            } else if idx[j] == idx[j + 1] {
                return None;
            }
        }
    }
    if idx.windows(2).any(|w| w[0] == w[1]) {
        return None;
    }
    Some(sign)
}

fn relation_columns(p: &AbPresentation) -> Vec<Vec<BigInt>> {
    p.relations().columns()
}

fn presentation(gens: usize, cols: Vec<Vec<BigInt>>) -> AbPresentation {
    AbPresentation::new(gens, IntMatrix::from_columns(gens, &cols)).expect("builder shapes agree")
}

/// `Lambda^2` on generators `e_i ^ e_j`, `i < j`.
pub fn lambda2_presentation(p: &AbPresentation) -> Result<AbPresentation> {
    check_size(p)?;
    let n = p.generators();
    let g = n * n.saturating_sub(1) / 2;
    let mut cols = Vec::new();
    for rho in relation_columns(p) {
        for k in 0..n {
            let mut c = vec![BigInt::zero(); g];
            for (i, x) in rho.iter().enumerate() {
                if i != k && !x.is_zero() {
                    let (lo, hi, s) = if i < k { (i, k, 1) } else { (k, i, -1) };
                    c[pair_index(n, lo, hi)] += x * s;
                }
            }
            cols.push(c);
        }
    }
    Ok(presentation(g, cols))
}

fn triple_table(n: usize) -> BTreeMap<[usize; 3], usize> {
    let mut t = BTreeMap::new();
    for i in 0..n {
        for j in i + 1..n {
            for k in j + 1..n {
                let len = t.len();
                t.insert([i, j, k], len);
            }
        }
    }
    t
}

/// `Lambda^3` on generators `e_i ^ e_j ^ e_k`, `i < j < k`.
pub fn lambda3_presentation(p: &AbPresentation) -> Result<AbPresentation> {
    check_size(p)?;
    let n = p.generators();
    let table = triple_table(n);
    let mut cols = Vec::new();
    for rho in relation_columns(p) {
        for j in 0..n {
            for k in j + 1..n {
                let mut c = vec![BigInt::zero(); table.len()];
                for (i, x) in rho.iter().enumerate() {
                    let mut idx = [i, j, k];
                    if let (false, Some(s)) = (x.is_zero(), sort_signed(&mut idx)) {
                        c[table[&idx]] += x * s;
                    }
                }
                cols.push(c);
            }
        }
    }
    Ok(presentation(table.len(), cols))
}

/// `SP^2` on generators `e_i e_j`, `i <= j`.
pub fn sp2_presentation(p: &AbPresentation) -> Result<AbPresentation> {
    check_size(p)?;
    let n = p.generators();
    let mut table = BTreeMap::new();
    for i in 0..n {
        for j in i..n {
            let len = table.len();
            table.insert((i, j), len);
        }
    }
    let mut cols = Vec::new();
    for rho in relation_columns(p) {
        for k in 0..n {
            let mut c = vec![BigInt::zero(); table.len()];
            for (i, x) in rho.iter().enumerate() {
                c[table[&(i.min(k), i.max(k))]] += x;
            }
            cols.push(c);
        }
    }
    Ok(presentation(table.len(), cols))
}

/// `A (x)~ A` on generators `e_i (x) e_j`, index `i * n + j`.
pub fn tilde_sq_presentation(p: &AbPresentation) -> Result<AbPresentation> {
    check_size(p)?;
    let n = p.generators();
    let mut cols = Vec::new();
    for rho in relation_columns(p) {
        for k in 0..n {
            let mut left = vec![BigInt::zero(); n * n];
            let mut right = vec![BigInt::zero(); n * n];
            for (i, x) in rho.iter().enumerate() {
                left[i * n + k] += x;
                right[k * n + i] += x;
            }
            cols.push(left);
            cols.push(right);
        }
    }
    for i in 0..n {
        for j in i..n {
            let mut c = vec![BigInt::zero(); n * n];
            c[i * n + j] += 1;
            c[j * n + i] += 1;
            cols.push(c);
        }
    }
    Ok(presentation(n * n, cols))
}

/// Index of `gamma(a_i)` and `gamma(a_i, a_j)` in the Whitehead presentation.
struct GammaIndex {
    n: usize,
}

impl GammaIndex {
    fn count(&self) -> usize {
        self.n + self.n * self.n.saturating_sub(1) / 2
    }
    fn single(&self, i: usize) -> usize {
        i
    }
    fn cross(&self, i: usize, j: usize) -> usize {
        let (i, j) = if i < j { (i, j) } else { (j, i) };
        self.n + pair_index(self.n, i, j)
    }
    /// Adds `c * gamma(a_i, a_j)` to `v`, using `gamma(a, a) = 2 gamma(a)`.
    fn add_bilinear(&self, v: &mut [BigInt], i: usize, j: usize, c: &BigInt) {
        if i == j {
            v[self.single(i)] += c * 2;
        } else {
            v[self.cross(i, j)] += c;
        }
    }
    fn names(&self) -> Vec<String> {
        let mut out: Vec<String> = (0..self.n).map(|i| format!("gamma(a{i})")).collect();
        for i in 0..self.n {
            for j in i + 1..self.n {
                out.push(format!("gamma(a{i},a{j})"));
            }
        }
        out
    }
}

/// Whitehead's presentation of `Gamma_2`: generators `gamma(a_i)` then
/// `gamma(a_i, a_j)` for `i < j`; each relator `b` contributes `gamma(b)` and
/// `gamma(a_i, b)` for every `i`.
pub fn gamma2_presentation(p: &AbPresentation) -> Result<AbPresentation> {
    check_size(p)?;
    let n = p.generators();
    let gi = GammaIndex { n };
    let mut cols = Vec::new();
    for rho in relation_columns(p) {
        let mut quad = vec![BigInt::zero(); gi.count()];
        for k in 0..n {
            quad[gi.single(k)] += &rho[k] * &rho[k];
            for l in k + 1..n {
                quad[gi.cross(k, l)] += &rho[k] * &rho[l];
            }
        }
        cols.push(quad);
        for i in 0..n {
            let mut bil = vec![BigInt::zero(); gi.count()];
            for (k, c) in rho.iter().enumerate() {
                gi.add_bilinear(&mut bil, i, k, c);
            }
            cols.push(bil);
        }
    }
    Ok(presentation(gi.count(), cols))
}

pub fn gamma2_oracle(a: &FgAbGroup) -> Result<FgAbGroup> {
    Ok(gamma2_presentation(&AbPresentation::of_group(a))?.canonicalize())
}

pub fn tilde_sq_oracle(a: &FgAbGroup) -> Result<FgAbGroup> {
    Ok(tilde_sq_presentation(&AbPresentation::of_group(a))?.canonicalize())
}

pub fn lambda2_oracle(a: &FgAbGroup) -> Result<FgAbGroup> {
    Ok(lambda2_presentation(&AbPresentation::of_group(a))?.canonicalize())
}

pub fn lambda3_oracle(a: &FgAbGroup) -> Result<FgAbGroup> {
    Ok(lambda3_presentation(&AbPresentation::of_group(a))?.canonicalize())
}

pub fn sp2_oracle(a: &FgAbGroup) -> Result<FgAbGroup> {
    Ok(sp2_presentation(&AbPresentation::of_group(a))?.canonicalize())
}

pub fn tensor_oracle(a: &FgAbGroup, b: &FgAbGroup) -> FgAbGroup {
    AbPresentation::of_group(a).tensor(&AbPresentation::of_group(b)).canonicalize()
}

/// `Tor(A, B)` as the kernel of `R (x) id_B` for the relation matrix `R` of `A`.
pub fn tor_oracle(a: &FgAbGroup, b: &FgAbGroup) -> FgAbGroup {
    let pa = AbPresentation::of_group(a);
    let r = pa.relations().clone();
    let pb = AbPresentation::of_group(b);
    let map = AbMap::new(
        AbPresentation::free(r.cols()).tensor(&pb),
        AbPresentation::free(r.rows()).tensor(&pb),
        r.kron(&IntMatrix::identity(pb.generators())),
    )
    .expect("tensoring a free map is well defined");
    map.kernel().canonicalize()
}

// ---------------------------------------------------------------------------
// Third super-Lie functor

/// The map `A (x) Lambda^2 A -> Lambda^3 A`, `a (x) b^c |-> a^b^c`.
pub fn ls3_map(p: &AbPresentation) -> Result<AbMap> {
    let n = p.generators();
    let l2 = lambda2_presentation(p)?;
    let l3 = lambda3_presentation(p)?;
    let table = triple_table(n);
    let m = l2.generators();
    let mut matrix = IntMatrix::zeros(l3.generators(), n * m);
    for a in 0..n {
        for b in 0..n {
            for c in b + 1..n {
                let mut idx = [a, b, c];
                if let Some(s) = sort_signed(&mut idx) {
                    matrix.set(table[&idx], a * m + pair_index(n, b, c), BigInt::from(s));
                }
            }
        }
    }
    AbMap::new(p.tensor(&l2), l3, matrix)
}

/// `L_s^3(A) = ker(A (x) Lambda^2 A -> Lambda^3 A)`.
pub fn ls3(a: &FgAbGroup) -> Result<FgAbGroup> {
    Ok(ls3_map(&AbPresentation::of_group(a))?.kernel().canonicalize())
}

/// The map `l(a(x)b(x)c) = a(x)b(x)c + b(x)a(x)c - c(x)a(x)b - c(x)b(x)a` on `A^(x)3`.
fn bracket_map(p: &AbPresentation) -> Result<AbMap> {
    let n = p.generators();
    let cube = p.tensor(p).tensor(p);
    let t = |i: usize, j: usize, k: usize| (i * n + j) * n + k;
    let mut matrix = IntMatrix::zeros(n * n * n, n * n * n);
    for a in 0..n {
        for b in 0..n {
            for c in 0..n {
                let col = t(a, b, c);
                for (row, s) in [(t(a, b, c), 1), (t(b, a, c), 1), (t(c, a, b), -1), (t(c, b, a), -1)] {
                    matrix.add_to(row, col, &BigInt::from(s));
                }
            }
        }
    }
    AbMap::new(cube.clone(), cube, matrix)
}

/// `L_s^3(A)` presented on the brackets `{e_i, e_j, e_k}`, generator
/// `(i * n + j) * n + k`.
pub fn ls3_bracket_presentation(p: &AbPresentation) -> Result<AbPresentation> {
    check_size(p)?;
    Ok(bracket_map(p)?.image())
}

/// `L_s^3(A)` computed as the image of the bracket map.
pub fn ls3_via_brackets(a: &FgAbGroup) -> Result<FgAbGroup> {
    Ok(ls3_bracket_presentation(&AbPresentation::of_group(a))?.canonicalize())
}

// ---------------------------------------------------------------------------
// Derived tilde square

fn is_free(p: &AbPresentation) -> bool {
    p.relations().is_zero()
}

/// `(L_0, L_1)` of `(x)~^2` on the cokernel of an injective map of free groups,
/// from the complex `SP^2(A1) -> A1 (x) A0 -> A0 (x)~ A0`.
pub fn derived_tilde_sq(delta: &AbMap) -> Result<(FgAbGroup, FgAbGroup)> {
    if !is_free(delta.source()) || !is_free(delta.target()) {
        return Err(Error::InvalidInput("derived_tilde_sq needs free source and target".into()));
    }
    let (n1, n0) = (delta.source().generators(), delta.target().generators());
    if smith_normal_form(delta.matrix()).rank() != n1 {
        return Err(Error::InvalidInput("derived_tilde_sq needs an injective map".into()));
    }
    let d = delta.matrix();
    let c0 = tilde_sq_presentation(delta.target())?;
    // d1(a_i (x) e_j) = delta(a_i) (x)~ e_j
    let mut d1 = IntMatrix::zeros(n0 * n0, n1 * n0);
    for i in 0..n1 {
        for j in 0..n0 {
            for k in 0..n0 {
                d1.add_to(k * n0 + j, i * n0 + j, d.get(k, i));
            }
        }
    }
    let d1 = AbMap::new(AbPresentation::free(n1 * n0), c0, d1)?;
    // d2(a_i a_j) = a_i (x) delta(a_j) + a_j (x) delta(a_i)
    let mut d2_cols = Vec::new();
    for i in 0..n1 {
        for j in i..n1 {
            let mut c = vec![BigInt::zero(); n1 * n0];
            for k in 0..n0 {
                c[i * n0 + k] += d.get(k, j);
                c[j * n0 + k] += d.get(k, i);
            }
            d2_cols.push(c);
        }
    }
    let l0 = d1.cokernel().canonicalize();
    let lattice: Lattice = d1.kernel_lattice();
    let rels: Vec<Vec<BigInt>> =
        d2_cols.iter().map(|c| lattice.coordinates(c).expect("d1 after d2 vanishes")).collect();
    let l1 = presentation(lattice.rank(), rels).canonicalize();
    Ok((l0, l1))
}

/// Multiplication by `n` on `Z`, the resolution of `Z/n`.
pub fn multiplication_map(n: i64) -> AbMap {
    AbMap::new(AbPresentation::free(1), AbPresentation::free(1), IntMatrix::from_rows(&[vec![n]]))
        .expect("free maps are well defined")
}

// ---------------------------------------------------------------------------
// Gamma_2^2 pushout

/// `Gamma_2^2` for `pi2`, `pi3` and `h: Gamma_2(pi2) -> pi3`.
///
/// `h` must have source `gamma2_presentation(AbPresentation::of_group(pi2))`
/// and target `AbPresentation::of_group(pi3)`.
pub fn gamma2_squared(pi2: &FgAbGroup, pi3: &FgAbGroup, h: &AbMap) -> Result<FgAbGroup> {
    let p2 = AbPresentation::of_group(pi2);
    let p3 = AbPresentation::of_group(pi3);
    if h.target() != &p3 {
        return Err(Error::DimensionMismatch(format!("h must land in the standard presentation of {pi3}")));
    }
    gamma2_squared_presented(&p2, h)
}

/// As [`gamma2_squared`], with `pi2` given by any presentation and `pi3` by `h`'s target.
pub fn gamma2_squared_presented(p2: &AbPresentation, h: &AbMap) -> Result<FgAbGroup> {
    let gp = gamma2_presentation(p2)?;
    let n = p2.generators();
    let gi = GammaIndex { n };
    if h.source() != &gp {
        return Err(Error::DimensionMismatch(format!(
            "h must start at the Whitehead presentation of pi2 on generators [{}]",
            gi.names().join(", ")
        )));
    }
    let z2 = AbPresentation::cyclic_sum(&[2]);
    let ext = p2.direct_sum(&z2);
    let source = gp.tensor(&ext);
    let g = gp.generators();
    let w = n + 1;
    let ls = ls3_bracket_presentation(p2)?;
    let nls = ls.generators();
    let gz2 = gp.tensor(&z2);
    let target = ls.direct_sum(&gz2);
    let triple = |i: usize, j: usize, k: usize| (i * n + j) * n + k;
    let mut q = IntMatrix::zeros(target.generators(), source.generators());
    let minus = BigInt::from(-1);
    for i in 0..n {
        for k in 0..n {
            // gamma(a_i) (x) a_k  |->  -{a_k, a_i, a_i} + gamma(a_i, a_k) (x) 1
            let col = gi.single(i) * w + k;
            q.add_to(triple(k, i, i), col, &minus);
            let mut v = vec![BigInt::zero(); g];
            gi.add_bilinear(&mut v, i, k, &BigInt::one());
            for (r, x) in v.iter().enumerate() {
                q.add_to(nls + r, col, x);
            }
            // gamma(a_i, a_j) (x) a_k  |->  -{a_k, a_i, a_j} - {a_k, a_j, a_i}
            for j in i + 1..n {
                let col = gi.cross(i, j) * w + k;
                q.add_to(triple(k, i, j), col, &minus);
                q.add_to(triple(k, j, i), col, &minus);
            }
        }
    }
    // identity on Gamma_2 (x) Z/2
    for r in 0..g {
        q.add_to(nls + r, r * w + n, &BigInt::one());
    }
    let left = AbMap::new(source.clone(), target, q)?;
    let right = h.tensor(&AbMap::identity(&ext));
    crate::presentation::pushout(&left, &right)
}

/// `gamma2_presentation` of the standard presentation of `a`.
pub fn gamma2_standard_presentation(a: &FgAbGroup) -> Result<AbPresentation> {
    gamma2_presentation(&AbPresentation::of_group(a))
}

// ---------------------------------------------------------------------------
// Named evaluation

/// How a functor value was obtained.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Method {
    ClosedForm,
    PresentationOracle,
    ResolutionOracle,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FunctorValue {
    pub group: FgAbGroup,
    pub method: Method,
}

/// Functor names accepted by [`evaluate`], with their arity.
pub const FUNCTOR_NAMES: &[(&str, usize)] = &[
    ("tensor", 2),
    ("tor", 2),
    ("lambda2", 1),
    ("lambda3", 1),
    ("sp2", 1),
    ("gamma2", 1),
    ("gamma2_oracle", 1),
    ("tilde_sq", 1),
    ("tilde_sq_oracle", 1),
    ("ls3", 1),
    ("r2", 1),
    ("l1_tilde_sq", 1),
    ("derived_tilde_sq", 1),
    ("half_square", 1),
];

/// Evaluates a functor by name.
pub fn evaluate(name: &str, args: &[FgAbGroup]) -> Result<FunctorValue> {
    let arity = FUNCTOR_NAMES.iter().find(|(n, _)| *n == name).map(|(_, a)| *a).ok_or_else(|| {
        let names: Vec<&str> = FUNCTOR_NAMES.iter().map(|(n, _)| *n).collect();
        Error::InvalidInput(format!("unknown functor {name:?}; expected one of {}", names.join(", ")))
    })?;
    if args.len() != arity {
        return Err(Error::InvalidInput(format!("{name} takes {arity} group(s), got {}", args.len())));
    }
    let a = &args[0];
    let closed = |group| Ok(FunctorValue { group, method: Method::ClosedForm });
    let oracle = |group| Ok(FunctorValue { group, method: Method::PresentationOracle });
    match name {
        "tensor" => closed(tensor(a, &args[1])),
        "tor" => closed(tor(a, &args[1])),
        "lambda2" => closed(lambda2(a)),
        "lambda3" => closed(lambda3(a)),
        "sp2" => closed(sp2(a)),
        "gamma2" => closed(gamma2(a)),
        "gamma2_oracle" => oracle(gamma2_oracle(a)?),
        "tilde_sq" => closed(tilde_sq(a)),
        "tilde_sq_oracle" => oracle(tilde_sq_oracle(a)?),
        "ls3" => oracle(ls3(a)?),
        "r2" => closed(r2(a)),
        "l1_tilde_sq" => closed(l1_tilde_sq(a)?),
        "derived_tilde_sq" => {
            let delta = resolution_of(a)?;
            Ok(FunctorValue { group: derived_tilde_sq(&delta)?.1, method: Method::ResolutionOracle })
        }
        "half_square" => closed(half_square(a)?),
        _ => unreachable!("name list and match agree"),
    }
}

/// The diagonal free resolution of the torsion part of `a`.
pub fn resolution_of(a: &FgAbGroup) -> Result<AbMap> {
    let t = a.torsion();
    let n = t.len() + a.free_rank();
    let mut m = IntMatrix::zeros(n, t.len());
    for (i, &d) in t.iter().enumerate() {
        m.set(i, i, BigInt::from(d));
    }
    AbMap::new(AbPresentation::free(t.len()), AbPresentation::free(n), m)
}
