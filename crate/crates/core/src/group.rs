//! Finitely generated abelian groups in invariant factor form.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigUint;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// `Z^free_rank + Z/d1 + ... + Z/dk` with `1 < d1 | d2 | ... | dk`.
///
/// Two groups are isomorphic exactly when their values are equal.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct FgAbGroup {
    free_rank: usize,
    torsion: Vec<u64>,
}

/// Order of a group, which may be infinite.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum GroupOrder {
    Finite(BigUint),
    Infinite,
}

impl fmt::Display for GroupOrder {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GroupOrder::Finite(n) => write!(f, "{n}"),
            GroupOrder::Infinite => write!(f, "infinite"),
        }
    }
}

/// Prime factorisation by trial division, primes ascending.
pub fn factorize(mut n: u64) -> Vec<(u64, u32)> {
    let mut out = Vec::new();
    let mut p = 2u64;
    while p.saturating_mul(p) <= n {
        if n.is_multiple_of(p) {
            let mut e = 0;
            while n.is_multiple_of(p) {
                n /= p;
                e += 1;
            }
            out.push((p, e));
        }
        p += if p == 2 { 1 } else { 2 };
    }
    if n > 1 {
        out.push((n, 1));
    }
    out
}

pub fn is_prime(n: u64) -> bool {
    n >= 2 && factorize(n) == vec![(n, 1)]
}

impl FgAbGroup {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn free(rank: usize) -> Self {
        FgAbGroup { free_rank: rank, torsion: Vec::new() }
    }

    /// Cyclic group `Z/n`, with the convention that `n = 0` gives `Z`.
    pub fn cyclic(n: u64) -> Self {
        Self::from_cyclic_orders(&[n])
    }

    /// Validated constructor from invariant factors.
    pub fn new(free_rank: usize, torsion: Vec<u64>) -> Result<Self> {
        for (i, &d) in torsion.iter().enumerate() {
            if d < 2 {
                return Err(Error::InvalidInput(format!("invariant factor {d} must be at least 2")));
            }
            if i > 0 && d % torsion[i - 1] != 0 {
                return Err(Error::InvalidInput(format!(
                    "invariant factors must form a divisibility chain, {} does not divide {d}",
                    torsion[i - 1]
                )));
            }
        }
        Ok(FgAbGroup { free_rank, torsion })
    }

    /// Direct sum of cyclic groups `Z/n` (with `0` meaning `Z`), in canonical form.
    pub fn from_cyclic_orders(orders: &[u64]) -> Self {
        let free_rank = orders.iter().filter(|&&n| n == 0).count();
        let mut primary: BTreeMap<u64, Vec<u32>> = BTreeMap::new();
        for &n in orders.iter().filter(|&&n| n > 1) {
            for (p, e) in factorize(n) {
                primary.entry(p).or_default().push(e);
            }
        }
        Self::from_primary(free_rank, primary)
    }

    fn from_primary(free_rank: usize, mut primary: BTreeMap<u64, Vec<u32>>) -> Self {
        let len = primary.values().map(Vec::len).max().unwrap_or(0);
        let mut torsion = vec![1u64; len];
        for (p, exps) in primary.iter_mut() {
            exps.sort_unstable_by(|a, b| b.cmp(a));
            for (k, &e) in exps.iter().enumerate() {
                let pe = p.checked_pow(e).expect("group order overflows u64");
                torsion[k] = torsion[k].checked_mul(pe).expect("group order overflows u64");
            }
        }
        torsion.reverse();
        FgAbGroup { free_rank, torsion }
    }

    pub fn free_rank(&self) -> usize {
        self.free_rank
    }

    pub fn torsion(&self) -> &[u64] {
        &self.torsion
    }

    pub fn is_trivial(&self) -> bool {
        self.free_rank == 0 && self.torsion.is_empty()
    }

    pub fn is_finite(&self) -> bool {
        self.free_rank == 0
    }

    /// Minimal number of generators.
    pub fn num_generators(&self) -> usize {
        self.free_rank + self.torsion.len()
    }

    pub fn order(&self) -> GroupOrder {
        if self.free_rank > 0 {
            GroupOrder::Infinite
        } else {
            GroupOrder::Finite(self.torsion.iter().map(|&d| BigUint::from(d)).product())
        }
    }

    /// Order of the torsion subgroup.
    pub fn torsion_order(&self) -> BigUint {
        self.torsion.iter().map(|&d| BigUint::from(d)).product()
    }

    /// Invariant factors followed by one `0` per free summand.
    pub fn cyclic_orders(&self) -> Vec<u64> {
        let mut v = self.torsion.clone();
        v.extend(std::iter::repeat_n(0, self.free_rank));
        v
    }

    /// Prime power orders followed by one `0` per free summand.
    pub fn primary_cyclic_orders(&self) -> Vec<u64> {
        let mut v = Vec::new();
        for (p, exps) in self.primary_parts() {
            v.extend(exps.iter().map(|&e| p.pow(e)));
        }
        v.extend(std::iter::repeat_n(0, self.free_rank));
        v
    }

    /// For each prime, the exponents of the `p`-primary cyclic summands, ascending.
    pub fn primary_parts(&self) -> BTreeMap<u64, Vec<u32>> {
        let mut primary: BTreeMap<u64, Vec<u32>> = BTreeMap::new();
        for &d in &self.torsion {
            for (p, e) in factorize(d) {
                primary.entry(p).or_default().push(e);
            }
        }
        for v in primary.values_mut() {
            v.sort_unstable();
        }
        primary
    }

    /// The `p`-primary part.
    pub fn p_part(&self, p: u64) -> FgAbGroup {
        let mut m = BTreeMap::new();
        if let Some(exps) = self.primary_parts().remove(&p) {
            m.insert(p, exps);
        }
        Self::from_primary(0, m)
    }

    /// Dimension of `A/pA` over the field with `p` elements, ignoring the free part.
    pub fn p_torsion_rank(&self, p: u64) -> usize {
        self.torsion.iter().filter(|&&d| d % p == 0).count()
    }

    /// Splits `A` as `A2 + B` where `A2` collects the `Z/2` summands of the
    /// primary decomposition and `B` has none.
    pub fn split_elementary_two(&self) -> (FgAbGroup, FgAbGroup) {
        let mut parts = self.primary_parts();
        let mut count = 0;
        if let Some(exps) = parts.get_mut(&2) {
            count = exps.iter().filter(|&&e| e == 1).count();
            exps.retain(|&e| e != 1);
            if exps.is_empty() {
                parts.remove(&2);
            }
        }
        let a2 = Self::from_cyclic_orders(&vec![2; count]);
        (a2, Self::from_primary(self.free_rank, parts))
    }

    /// The elementary abelian 2-group made of the `Z/2` summands.
    pub fn two_primary_elementary_part(&self) -> FgAbGroup {
        self.split_elementary_two().0
    }

    /// True for `(Z/2)^k`, including the trivial group.
    pub fn is_elementary_two(&self) -> bool {
        self.free_rank == 0 && self.torsion.iter().all(|&d| d == 2)
    }

    /// True when all torsion has odd order.
    pub fn has_odd_torsion_only(&self) -> bool {
        self.torsion.iter().all(|d| d % 2 == 1)
    }

    pub fn direct_sum(&self, other: &FgAbGroup) -> FgAbGroup {
        let mut v = self.cyclic_orders();
        v.extend(other.cyclic_orders());
        Self::from_cyclic_orders(&v)
    }

    /// Direct sum of `k` copies.
    pub fn times(&self, k: usize) -> FgAbGroup {
        let v: Vec<u64> = (0..k).flat_map(|_| self.cyclic_orders()).collect();
        Self::from_cyclic_orders(&v)
    }

    pub fn sum<'a>(groups: impl IntoIterator<Item = &'a FgAbGroup>) -> FgAbGroup {
        let v: Vec<u64> = groups.into_iter().flat_map(|g| g.cyclic_orders()).collect();
        Self::from_cyclic_orders(&v)
    }
}

impl fmt::Display for FgAbGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_trivial() {
            return write!(f, "0");
        }
        let mut parts = Vec::new();
        match self.free_rank {
            0 => {}
            1 => parts.push("Z".to_string()),
            r => parts.push(format!("Z^{r}")),
        }
        parts.extend(self.torsion.iter().map(|d| format!("Z/{d}")));
        write!(f, "{}", parts.join(" + "))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn canonical_forms() {
        assert_eq!(FgAbGroup::from_cyclic_orders(&[2, 3]), FgAbGroup::cyclic(6));
        assert_eq!(FgAbGroup::from_cyclic_orders(&[4, 6]).torsion(), &[2, 12]);
        assert_eq!(FgAbGroup::from_cyclic_orders(&[1, 1]), FgAbGroup::zero());
        assert_eq!(FgAbGroup::cyclic(0), FgAbGroup::free(1));
        assert!(FgAbGroup::new(0, vec![4, 6]).is_err());
        assert!(FgAbGroup::new(0, vec![1]).is_err());
    }

    #[test]
    fn display() {
        assert_eq!(FgAbGroup::zero().to_string(), "0");
        assert_eq!(FgAbGroup::from_cyclic_orders(&[0, 12, 2]).to_string(), "Z + Z/2 + Z/12");
        assert_eq!(FgAbGroup::free(3).to_string(), "Z^3");
    }

    #[test]
    fn elementary_two_split() {
        let a = FgAbGroup::from_cyclic_orders(&[6, 2, 4, 0]);
        let (a2, b) = a.split_elementary_two();
        assert_eq!(a2, FgAbGroup::from_cyclic_orders(&[2, 2]));
        assert_eq!(b, FgAbGroup::from_cyclic_orders(&[3, 4, 0]));
    }

    #[test]
    fn orders() {
        assert_eq!(FgAbGroup::from_cyclic_orders(&[4, 6]).order(), GroupOrder::Finite(24u32.into()));
        assert_eq!(FgAbGroup::free(1).order(), GroupOrder::Infinite);
        assert_eq!(FgAbGroup::zero().order(), GroupOrder::Finite(1u32.into()));
    }

    proptest! {
        #[test]
        fn canonical_form_is_order_independent(mut v in prop::collection::vec(0u64..40, 0..6)) {
            let a = FgAbGroup::from_cyclic_orders(&v);
            v.reverse();
            prop_assert_eq!(&a, &FgAbGroup::from_cyclic_orders(&v));
            for w in a.torsion().windows(2) {
                prop_assert_eq!(w[1] % w[0], 0);
            }
            prop_assert!(a.torsion().iter().all(|&d| d >= 2));
            let prod: u64 = v.iter().filter(|&&n| n > 0).product();
            prop_assert_eq!(a.torsion_order(), BigUint::from(prod));
        }

        #[test]
        fn primary_orders_rebuild_the_group(v in prop::collection::vec(0u64..40, 0..6)) {
            let a = FgAbGroup::from_cyclic_orders(&v);
            prop_assert_eq!(FgAbGroup::from_cyclic_orders(&a.primary_cyclic_orders()), a);
        }
    }
}
