//! Reduced integral homology of space expressions by the Kunneth formula.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::functor::{tensor, tor};
use crate::group::FgAbGroup;
use crate::space::SpaceExpr;

pub const DEFAULT_CUTOFF: u32 = 7;
pub const MAX_CUTOFF: u32 = 12;

/// Reduced homology in degrees `0..=cutoff`. Degrees above the cutoff are
/// unknown, not zero.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GradedGroups {
    cutoff: u32,
    reduced: Vec<FgAbGroup>,
}

impl GradedGroups {
    fn zero(cutoff: u32) -> Self {
        GradedGroups { cutoff, reduced: vec![FgAbGroup::zero(); cutoff as usize + 1] }
    }

    fn single(cutoff: u32, degree: u32, g: FgAbGroup) -> Self {
        let mut h = Self::zero(cutoff);
        if degree <= cutoff {
            h.reduced[degree as usize] = g;
        }
        h
    }

    pub fn cutoff(&self) -> u32 {
        self.cutoff
    }

    /// Reduced homology in degree `k`.
    pub fn get(&self, k: u32) -> Option<&FgAbGroup> {
        self.reduced.get(k as usize)
    }

    /// Unreduced homology of a connected space.
    pub fn unreduced(&self, k: u32) -> Option<FgAbGroup> {
        let g = self.get(k)?;
        Some(if k == 0 { g.direct_sum(&FgAbGroup::free(1)) } else { g.clone() })
    }

    pub fn degrees(&self) -> impl Iterator<Item = (u32, &FgAbGroup)> {
        self.reduced.iter().enumerate().map(|(k, g)| (k as u32, g))
    }

    fn shift(&self) -> Self {
        let mut h = Self::zero(self.cutoff);
        for k in 1..=self.cutoff as usize {
            h.reduced[k] = self.reduced[k - 1].clone();
        }
        h
    }

    fn sum(&self, other: &Self) -> Self {
        let reduced = self.reduced.iter().zip(&other.reduced).map(|(a, b)| a.direct_sum(b)).collect();
        GradedGroups { cutoff: self.cutoff, reduced }
    }

    /// Reduced Kunneth formula for a smash product.
    fn smash(&self, other: &Self) -> Self {
        let c = self.cutoff as usize;
        let mut out = Self::zero(self.cutoff);
        for i in 0..=c {
            for j in 0..=c - i {
                let (a, b) = (&self.reduced[i], &other.reduced[j]);
                if a.is_trivial() || b.is_trivial() {
                    continue;
                }
                out.reduced[i + j] = out.reduced[i + j].direct_sum(&tensor(a, b));
                if i + j < c {
                    out.reduced[i + j + 1] = out.reduced[i + j + 1].direct_sum(&tor(a, b));
                }
            }
        }
        out
    }
}

/// Unreduced `H_k(K(C,1))` for a cyclic `C`.
pub fn h_em1(c: &FgAbGroup, k: u32) -> Result<FgAbGroup> {
    if c.num_generators() > 1 {
        return Err(Error::InvalidInput(format!("h_em1 takes a cyclic group, got {c}")));
    }
    Ok(match (c.cyclic_orders().first(), k) {
        (_, 0) => FgAbGroup::free(1),
        (None, _) => FgAbGroup::zero(),
        (Some(0), 1) => FgAbGroup::free(1),
        (Some(0), _) => FgAbGroup::zero(),
        (Some(&m), k) if k % 2 == 1 => FgAbGroup::cyclic(m),
        _ => FgAbGroup::zero(),
    })
}

/// Reduced homology of `x` up to `cutoff`.
pub fn homology(x: &SpaceExpr, cutoff: u32) -> Result<GradedGroups> {
    if cutoff > MAX_CUTOFF {
        return Err(Error::OutOfRange { degree: cutoff, supported: format!("homology cutoff at most {MAX_CUTOFF}") });
    }
    Ok(compute(x, cutoff))
}

fn compute(x: &SpaceExpr, c: u32) -> GradedGroups {
    match x {
        SpaceExpr::Point => GradedGroups::zero(c),
        SpaceExpr::Sphere(n) => GradedGroups::single(c, *n, FgAbGroup::free(1)),
        SpaceExpr::Circle => GradedGroups::single(c, 1, FgAbGroup::free(1)),
        SpaceExpr::Moore { order, dim } => GradedGroups::single(c, *dim, FgAbGroup::cyclic(*order)),
        SpaceExpr::Em1 { prime, exp } => {
            let mut h = GradedGroups::zero(c);
            let g = FgAbGroup::cyclic(prime.pow(*exp));
            for k in (1..=c).step_by(2) {
                h.reduced[k as usize] = g.clone();
            }
            h
        }
        SpaceExpr::Susp(y) => compute(y, c).shift(),
        SpaceExpr::Wedge(xs) => xs.iter().fold(GradedGroups::zero(c), |acc, y| acc.sum(&compute(y, c))),
        SpaceExpr::Smash(xs) => {
            let mut it = xs.iter();
            let first = it.next().map_or_else(|| GradedGroups::zero(c), |y| compute(y, c));
            it.fold(first, |acc, y| acc.smash(&compute(y, c)))
        }
        SpaceExpr::Product(xs) => {
            let mut it = xs.iter();
            let first = it.next().map_or_else(|| GradedGroups::zero(c), |y| compute(y, c));
            it.fold(first, |acc, y| {
                let h = compute(y, c);
                acc.sum(&h).sum(&acc.smash(&h))
            })
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::functor::lambda2;
    use crate::space::{em1_of_group, smash, susp, wedge};

    fn g(v: &[u64]) -> FgAbGroup {
        FgAbGroup::from_cyclic_orders(v)
    }

    #[test]
    fn cyclic_building_blocks() {
        assert_eq!(h_em1(&g(&[4]), 3).unwrap(), g(&[4]));
        assert_eq!(h_em1(&g(&[4]), 2).unwrap(), g(&[]));
        assert_eq!(h_em1(&g(&[0]), 1).unwrap(), g(&[0]));
        assert_eq!(h_em1(&g(&[0]), 0).unwrap(), g(&[0]));
        assert!(h_em1(&g(&[2, 2]), 1).is_err());
    }

    #[test]
    fn smash_of_two_projective_spaces() {
        let k = SpaceExpr::Em1 { prime: 2, exp: 1 };
        let h = homology(&smash(vec![k.clone(), k]), 4).unwrap();
        assert_eq!(h.get(2), Some(&g(&[2])));
        assert_eq!(h.get(3), Some(&g(&[2])));
        assert_eq!(h.get(4), Some(&g(&[2, 2])));
        assert_eq!(h.get(5), None);
    }

    #[test]
    fn suspension_of_classifying_space() {
        let a = g(&[2, 4]);
        let h = homology(&susp(em1_of_group(&a)), 4).unwrap();
        assert_eq!(h.get(3), Some(&lambda2(&a)));
        assert_eq!(h.get(2), Some(&a));
    }

    #[test]
    fn wedge_of_spheres() {
        let x = wedge(vec![SpaceExpr::Sphere(3), SpaceExpr::Sphere(5)]);
        let h = homology(&x, 5).unwrap();
        assert_eq!(h.get(5), Some(&g(&[0])));
        assert_eq!(h.unreduced(0), Some(g(&[0])));
        assert!(homology(&x, 13).is_err());
    }

    #[test]
    fn torus() {
        let t = crate::space::product(vec![SpaceExpr::Circle, SpaceExpr::Circle]);
        let h = homology(&t, 3).unwrap();
        assert_eq!(h.get(1), Some(&g(&[0, 0])));
        assert_eq!(h.get(2), Some(&g(&[0])));
        assert_eq!(h.get(3), Some(&g(&[])));
    }
}
