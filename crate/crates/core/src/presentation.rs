//! Presented abelian groups and homomorphisms between them.
//!
//! A presentation with `n` generators and relation matrix `R` (n x c) stands
//! for `Z^n / im R`. A map is an integer matrix on generators that sends
//! relations into relations.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::group::FgAbGroup;
use crate::matrix::{smith_normal_form, IntMatrix, SmithForm};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AbPresentation {
    generators: usize,
    relations: IntMatrix,
}

/// A sublattice of `Z^n` given by spanning vectors, prepared for membership tests.
pub struct Lattice {
    snf: SmithForm,
}

impl Lattice {
    pub fn new(spanning_columns: &IntMatrix) -> Self {
        Lattice { snf: smith_normal_form(spanning_columns) }
    }

    pub fn rank(&self) -> usize {
        self.snf.rank()
    }

    /// Coordinates of `v` in the lattice basis, or `None` when `v` is outside.
    pub fn coordinates(&self, v: &[BigInt]) -> Option<Vec<BigInt>> {
        let w = self.snf.u.mul_vec(v);
        let r = self.snf.rank();
        if w[r..].iter().any(|x| !x.is_zero()) {
            return None;
        }
        let mut out = Vec::with_capacity(r);
        for (x, d) in w.iter().zip(&self.snf.diag) {
            let (q, rem) = x.div_rem(d);
            if !rem.is_zero() {
                return None;
            }
            out.push(q);
        }
        Some(out)
    }

    pub fn contains(&self, v: &[BigInt]) -> bool {
        self.coordinates(v).is_some()
    }

    /// A basis of the lattice as columns of an `n x rank` matrix.
    pub fn basis(&self) -> IntMatrix {
        let n = self.snf.u_inv.rows();
        let cols: Vec<Vec<BigInt>> = (0..self.rank())
            .map(|i| self.snf.u_inv.column(i).into_iter().map(|x| x * &self.snf.diag[i]).collect())
            .collect();
        IntMatrix::from_columns(n, &cols)
    }
}

/// Integer nullspace of `m` as columns.
pub fn integer_nullspace(m: &IntMatrix) -> IntMatrix {
    let s = smith_normal_form(m);
    let cols: Vec<Vec<BigInt>> = (s.rank()..m.cols()).map(|j| s.v.column(j)).collect();
    IntMatrix::from_columns(m.cols(), &cols)
}

impl AbPresentation {
    pub fn new(generators: usize, relations: IntMatrix) -> Result<Self> {
        if relations.rows() != generators {
            return Err(Error::DimensionMismatch(format!(
                "relation matrix has {} rows but there are {generators} generators",
                relations.rows()
            )));
        }
        Ok(AbPresentation { generators, relations })
    }

    pub fn free(n: usize) -> Self {
        AbPresentation { generators: n, relations: IntMatrix::zeros(n, 0) }
    }

    /// One generator per entry, with `Z/n` relation, where `0` means `Z`.
    pub fn cyclic_sum(orders: &[u64]) -> Self {
        let n = orders.len();
        let cols: Vec<Vec<BigInt>> = orders
            .iter()
            .enumerate()
            .filter(|(_, &d)| d != 0)
            .map(|(i, &d)| {
                let mut c = vec![BigInt::zero(); n];
                c[i] = BigInt::from(d);
                c
            })
            .collect();
        AbPresentation { generators: n, relations: IntMatrix::from_columns(n, &cols) }
    }

    /// The standard presentation on invariant factors, free generators last.
    pub fn of_group(a: &FgAbGroup) -> Self {
        Self::cyclic_sum(&a.cyclic_orders())
    }

    pub fn generators(&self) -> usize {
        self.generators
    }

    pub fn relations(&self) -> &IntMatrix {
        &self.relations
    }

    pub fn relation_lattice(&self) -> Lattice {
        Lattice::new(&self.relations)
    }

    /// The group presented, in invariant factor form.
    pub fn canonicalize(&self) -> FgAbGroup {
        let s = smith_normal_form(&self.relations);
        let torsion: Vec<u64> =
            s.diag.iter().map(|d| d.to_u64().expect("invariant factor exceeds u64")).filter(|&d| d > 1).collect();
        FgAbGroup::new(self.generators - s.rank(), torsion).expect("Smith form is a divisibility chain")
    }

    pub fn direct_sum(&self, other: &AbPresentation) -> AbPresentation {
        AbPresentation {
            generators: self.generators + other.generators,
            relations: self.relations.block_diag(&other.relations),
        }
    }

    /// Tensor product. Generator `(i, j)` has index `i * other.generators + j`.
    pub fn tensor(&self, other: &AbPresentation) -> AbPresentation {
        let left = self.relations.kron(&IntMatrix::identity(other.generators));
        let right = IntMatrix::identity(self.generators).kron(&other.relations);
        AbPresentation { generators: self.generators * other.generators, relations: left.hconcat(&right) }
    }
}

pub fn canonicalize(p: &AbPresentation) -> FgAbGroup {
    p.canonicalize()
}

/// A homomorphism given on generators; `matrix` is `target.generators x source.generators`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AbMap {
    source: AbPresentation,
    target: AbPresentation,
    matrix: IntMatrix,
}

impl AbMap {
    /// Checks shapes and that every source relation maps into the target relations.
    pub fn new(source: AbPresentation, target: AbPresentation, matrix: IntMatrix) -> Result<Self> {
        if matrix.rows() != target.generators || matrix.cols() != source.generators {
            return Err(Error::DimensionMismatch(format!(
                "map matrix is {}x{} but source has {} and target has {} generators",
                matrix.rows(),
                matrix.cols(),
                source.generators,
                target.generators
            )));
        }
        let images = matrix.mul(&source.relations);
        let lattice = target.relation_lattice();
        for (j, col) in images.columns().iter().enumerate() {
            if !lattice.contains(col) {
                return Err(Error::NotWellDefined(format!(
                    "source relation {j} does not map into the target relations"
                )));
            }
        }
        Ok(AbMap { source, target, matrix })
    }

    pub fn identity(p: &AbPresentation) -> Self {
        AbMap { source: p.clone(), target: p.clone(), matrix: IntMatrix::identity(p.generators) }
    }

    pub fn source(&self) -> &AbPresentation {
        &self.source
    }

    pub fn target(&self) -> &AbPresentation {
        &self.target
    }

    pub fn matrix(&self) -> &IntMatrix {
        &self.matrix
    }

    /// `self` after `first`.
    pub fn compose(&self, first: &AbMap) -> Result<AbMap> {
        if first.target != self.source {
            return Err(Error::DimensionMismatch("composable maps need matching presentations".into()));
        }
        Ok(AbMap { source: first.source.clone(), target: self.target.clone(), matrix: self.matrix.mul(&first.matrix) })
    }

    pub fn direct_sum(&self, other: &AbMap) -> AbMap {
        AbMap {
            source: self.source.direct_sum(&other.source),
            target: self.target.direct_sum(&other.target),
            matrix: self.matrix.block_diag(&other.matrix),
        }
    }

    pub fn tensor(&self, other: &AbMap) -> AbMap {
        AbMap {
            source: self.source.tensor(&other.source),
            target: self.target.tensor(&other.target),
            matrix: self.matrix.kron(&other.matrix),
        }
    }

    /// Generators of the kernel as a lattice in source coordinates (columns),
    /// in lattice form ready for coordinate lookups.
    pub fn kernel_lattice(&self) -> Lattice {
        let n = self.source.generators;
        let stacked = self.matrix.hconcat(&self.target.relations);
        let null = integer_nullspace(&stacked);
        let cols: Vec<Vec<BigInt>> = null.columns().into_iter().map(|c| c[..n].to_vec()).collect();
        Lattice::new(&IntMatrix::from_columns(n, &cols))
    }

    /// The kernel, presented on a basis of its preimage lattice, together with
    /// that basis as columns in source coordinates.
    pub fn kernel_with_basis(&self) -> (AbPresentation, IntMatrix) {
        let lattice = self.kernel_lattice();
        let k = lattice.rank();
        let rel_cols: Vec<Vec<BigInt>> = self
            .source
            .relations
            .columns()
            .iter()
            .map(|c| lattice.coordinates(c).expect("source relations lie in the kernel"))
            .collect();
        let relations = IntMatrix::from_columns(k, &rel_cols);
        (AbPresentation { generators: k, relations }, lattice.basis())
    }

    pub fn kernel(&self) -> AbPresentation {
        self.kernel_with_basis().0
    }

    pub fn image(&self) -> AbPresentation {
        let basis = self.kernel_lattice().basis();
        AbPresentation { generators: self.source.generators, relations: basis }
    }

    pub fn cokernel(&self) -> AbPresentation {
        AbPresentation { generators: self.target.generators, relations: self.target.relations.hconcat(&self.matrix) }
    }
}

pub fn kernel(f: &AbMap) -> AbPresentation {
    f.kernel()
}

pub fn image(f: &AbMap) -> AbPresentation {
    f.image()
}

pub fn cokernel(f: &AbMap) -> AbPresentation {
    f.cokernel()
}

/// Pushout of `left <- source -> right`, as a presentation on the
/// generators of `left + right`.
pub fn pushout_presentation(f: &AbMap, g: &AbMap) -> Result<AbPresentation> {
    if f.source != g.source {
        return Err(Error::DimensionMismatch("pushout maps must share a source".into()));
    }
    let target = f.target.direct_sum(&g.target);
    let matrix = f.matrix.vconcat(&g.matrix.neg());
    Ok(AbMap { source: f.source.clone(), target, matrix }.cokernel())
}

pub fn pushout(f: &AbMap, g: &AbMap) -> Result<FgAbGroup> {
    Ok(pushout_presentation(f, g)?.canonicalize())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn g(orders: &[u64]) -> FgAbGroup {
        FgAbGroup::from_cyclic_orders(orders)
    }

    #[test]
    fn canonicalize_examples() {
        let p = AbPresentation::new(2, IntMatrix::from_rows(&[vec![2, 0], vec![0, 3]])).unwrap();
        assert_eq!(p.canonicalize(), g(&[6]));
        let p = AbPresentation::new(3, IntMatrix::from_rows(&[vec![2], vec![4], vec![0]])).unwrap();
        assert_eq!(p.canonicalize(), g(&[0, 0, 2]));
        assert_eq!(AbPresentation::free(0).canonicalize(), FgAbGroup::zero());
        assert!(AbPresentation::new(2, IntMatrix::zeros(3, 1)).is_err());
    }

    #[test]
    fn well_definedness() {
        let z4 = AbPresentation::cyclic_sum(&[4]);
        let z2 = AbPresentation::cyclic_sum(&[2]);
        // Z/4 -> Z/2 reduction is fine, Z/2 -> Z/4 sending 1 to 1 is not
        assert!(AbMap::new(z4.clone(), z2.clone(), IntMatrix::from_rows(&[vec![1]])).is_ok());
        assert!(matches!(
            AbMap::new(z2.clone(), z4.clone(), IntMatrix::from_rows(&[vec![1]])),
            Err(Error::NotWellDefined(_))
        ));
        assert!(AbMap::new(z2, z4, IntMatrix::from_rows(&[vec![2]])).is_ok());
    }

    #[test]
    fn kernel_image_cokernel_of_multiplication() {
        // multiplication by 2 on Z/12
        let z12 = AbPresentation::cyclic_sum(&[12]);
        let f = AbMap::new(z12.clone(), z12, IntMatrix::from_rows(&[vec![2]])).unwrap();
        assert_eq!(f.kernel().canonicalize(), g(&[2]));
        assert_eq!(f.image().canonicalize(), g(&[6]));
        assert_eq!(f.cokernel().canonicalize(), g(&[2]));
    }

    #[test]
    fn kernel_of_free_map() {
        let f = AbMap::new(AbPresentation::free(3), AbPresentation::free(1), IntMatrix::from_rows(&[vec![1, 1, 1]]))
            .unwrap();
        let (k, basis) = f.kernel_with_basis();
        assert_eq!(k.canonicalize(), g(&[0, 0]));
        assert!(f.matrix().mul(&basis).is_zero());
    }

    #[test]
    fn pushout_of_inclusions() {
        // Z -> Z (x2) and Z -> Z (x3) glue to Z
        let z = AbPresentation::free(1);
        let f = AbMap::new(z.clone(), z.clone(), IntMatrix::from_rows(&[vec![2]])).unwrap();
        let h = AbMap::new(z.clone(), z.clone(), IntMatrix::from_rows(&[vec![3]])).unwrap();
        assert_eq!(pushout(&f, &h).unwrap(), g(&[0]));
        let id = AbMap::identity(&z);
        let f = AbMap::new(z.clone(), z.clone(), IntMatrix::from_rows(&[vec![2]])).unwrap();
        assert_eq!(pushout(&f, &f).unwrap(), g(&[0, 2]));
        assert_eq!(pushout(&id, &id).unwrap(), g(&[0]));
        let other = AbMap::identity(&AbPresentation::free(2));
        assert!(pushout(&id, &other).is_err());
    }

    #[test]
    fn tensor_presentation() {
        let a = AbPresentation::cyclic_sum(&[4, 0]);
        let b = AbPresentation::cyclic_sum(&[6]);
        assert_eq!(a.tensor(&b).canonicalize(), g(&[2, 6]));
    }
}
