//! Rule sets with exactly one deliberately wrong rule each.

use hocalc_core::homotopy::{PiResult, RegistrySpace, Rules, StandardRules};
use hocalc_core::space::SmashForm;
use hocalc_core::{FgAbGroup, Result};

fn z(n: u64) -> FgAbGroup {
    FgAbGroup::cyclic(n)
}

fn single_even_cyclic(a: &FgAbGroup) -> Option<u64> {
    match a.cyclic_orders().as_slice() {
        [q] if *q != 0 && q % 2 == 0 => Some(*q),
        _ => None,
    }
}

/// Gamma_2 of an even cyclic group returns the group itself.
struct Gamma2EvenCyclic;
impl Rules for Gamma2EvenCyclic {
    fn gamma2(&self, a: &FgAbGroup) -> FgAbGroup {
        single_even_cyclic(a).map_or_else(|| StandardRules.gamma2(a), z)
    }
}

/// The antisymmetric square forgets its Z/2 summands.
struct TildeSqNoTwo;
impl Rules for TildeSqNoTwo {
    fn tilde_sq(&self, a: &FgAbGroup) -> FgAbGroup {
        StandardRules.tensor(a, a)
    }
}

struct Lambda2IsTensor;
impl Rules for Lambda2IsTensor {
    fn lambda2(&self, a: &FgAbGroup) -> FgAbGroup {
        if a.num_generators() >= 2 {
            StandardRules.tensor(a, a)
        } else {
            StandardRules.lambda2(a)
        }
    }
}

struct Lambda3Vanishes;
impl Rules for Lambda3Vanishes {
    fn lambda3(&self, _a: &FgAbGroup) -> FgAbGroup {
        FgAbGroup::zero()
    }
}

struct TorVanishes;
impl Rules for TorVanishes {
    fn tor(&self, _a: &FgAbGroup, _b: &FgAbGroup) -> FgAbGroup {
        FgAbGroup::zero()
    }
}

struct TensorDropsFree;
impl Rules for TensorDropsFree {
    fn tensor(&self, a: &FgAbGroup, b: &FgAbGroup) -> FgAbGroup {
        let t = StandardRules.tensor(a, b);
        FgAbGroup::from_cyclic_orders(t.torsion())
    }
}

struct HalfSquareElementary;
impl Rules for HalfSquareElementary {
    fn half_square(&self, a2: &FgAbGroup) -> Result<FgAbGroup> {
        Ok(StandardRules.tensor(a2, a2))
    }
}

struct L1TildeSqNoShift;
impl Rules for L1TildeSqNoShift {
    fn l1_tilde_sq(&self, a: &FgAbGroup) -> Result<FgAbGroup> {
        Ok(a.clone())
    }
}

struct SphereStemOneVanishes;
impl Rules for SphereStemOneVanishes {
    fn pi_sphere(&self, m: u32, n: u32) -> Result<FgAbGroup> {
        if m >= 3 && n == m + 1 {
            return Ok(FgAbGroup::zero());
        }
        StandardRules.pi_sphere(m, n)
    }
    fn pi_form(&self, f: &SmashForm, n: u32) -> Result<PiResult> {
        let mut r = StandardRules.pi_form(f, n)?;
        if f.is_sphere() {
            r.group = self.pi_sphere(f.m(), n)?;
        }
        Ok(r)
    }
}

/// A form table entry with a single wrong value, selected by `target`.
struct FormEntry {
    m: u32,
    exps: &'static [u32],
    n: u32,
    value: u64,
}
impl Rules for FormEntry {
    fn pi_form(&self, f: &SmashForm, n: u32) -> Result<PiResult> {
        let mut r = StandardRules.pi_form(f, n)?;
        if f.prime() == Some(2) && f.m() == self.m && f.exps() == self.exps && n == self.n {
            r.group = z(self.value);
        }
        Ok(r)
    }
}

/// Serves the stated triple smash value instead of the computed one.
struct TripleSmashStated;
impl Rules for TripleSmashStated {
    fn pi_form(&self, f: &SmashForm, n: u32) -> Result<PiResult> {
        let mut r = StandardRules.pi_form(f, n)?;
        if f.t() == 3 && n == 5 && f.prime() == Some(2) {
            r.group = hocalc_core::homotopy::triple_smash_stated(f.exps());
        }
        Ok(r)
    }
}

struct RegistryWrongK3;
impl Rules for RegistryWrongK3 {
    fn registry(&self, space: &RegistrySpace, n: u32) -> Result<PiResult> {
        let mut r = StandardRules.registry(space, n)?;
        if *space == RegistrySpace::SpecialLinearZ && n == 4 {
            r.group = z(24);
        }
        Ok(r)
    }
}

pub fn mutants() -> Vec<(&'static str, Box<dyn Rules>)> {
    vec![
        ("gamma2 of even cyclic groups", Box::new(Gamma2EvenCyclic)),
        ("antisymmetric square", Box::new(TildeSqNoTwo)),
        ("exterior square", Box::new(Lambda2IsTensor)),
        ("exterior cube", Box::new(Lambda3Vanishes)),
        ("Tor", Box::new(TorVanishes)),
        ("tensor product", Box::new(TensorDropsFree)),
        ("half square", Box::new(HalfSquareElementary)),
        ("L_1 of the antisymmetric square", Box::new(L1TildeSqNoShift)),
        ("first stem of spheres", Box::new(SphereStemOneVanishes)),
        ("pi_4 of a two-cell smash", Box::new(FormEntry { m: 1, exps: &[1, 1], n: 4, value: 2 })),
        ("pi_5 of Sigma^2 K(Z/2,1)", Box::new(FormEntry { m: 2, exps: &[1], n: 5, value: 4 })),
        ("pi_5 of Sigma^3 K(Z/4,1)", Box::new(FormEntry { m: 3, exps: &[2], n: 5, value: 4 })),
        ("pi_5 of a smash pair", Box::new(FormEntry { m: 1, exps: &[1, 3], n: 5, value: 16 })),
        ("triple smash value", Box::new(TripleSmashStated)),
        ("named space table", Box::new(RegistryWrongK3)),
    ]
}
