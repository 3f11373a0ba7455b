//! Finite abelian groups `(Z/m_1) ⊕ … ⊕ (Z/m_r)`, their elements, and their
//! subgroups.
//!
//! Elements are coordinate vectors reduced modulo the factors, written
//! additively. Every other module relies on the canonical ordering defined
//! here: the element `x` sits at the mixed-radix position
//! `Σ_j x_j · Π_{k>j} m_k`, so index 0 is always the identity. The moduli are
//! not required to form a divisibility chain; any cyclic factorization works.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A finite abelian group given as a list of cyclic moduli.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "RawGroupSpec")]
pub struct GroupSpec {
    moduli: Vec<u32>,
}

#[derive(Deserialize)]
struct RawGroupSpec {
    moduli: Vec<u32>,
}

impl TryFrom<RawGroupSpec> for GroupSpec {
    type Error = Error;

    fn try_from(raw: RawGroupSpec) -> Result<Self> {
        GroupSpec::new(raw.moduli)
    }
}

impl GroupSpec {
    pub fn new(moduli: Vec<u32>) -> Result<Self> {
        if moduli.is_empty() {
            return Err(Error::EmptyModuli);
        }
        let mut order: usize = 1;
        for (j, &m) in moduli.iter().enumerate() {
            if m == 0 {
                return Err(Error::ZeroModulus(j));
            }
            order = order.checked_mul(m as usize).ok_or(Error::OrderOverflow)?;
        }
        Ok(GroupSpec { moduli })
    }

    /// Convenience constructor for a single cyclic group `Z/m`.
    pub fn cyclic(m: u32) -> Result<Self> {
        GroupSpec::new(vec![m])
    }

    pub fn moduli(&self) -> &[u32] {
        &self.moduli
    }

    /// Number of cyclic factors.
    pub fn rank(&self) -> usize {
        self.moduli.len()
    }

    /// `|G| = Π m_j`.
    pub fn order(&self) -> usize {
        self.moduli.iter().map(|&m| m as usize).product()
    }

    pub fn identity(&self) -> GroupElement {
        GroupElement {
            coords: vec![0; self.rank()],
        }
    }

    /// Builds an element from raw coordinates, reducing each modulo `m_j`.
    pub fn element(&self, coords: &[u32]) -> Result<GroupElement> {
        if coords.len() != self.rank() {
            return Err(Error::RankMismatch {
                expected: self.rank(),
                got: coords.len(),
            });
        }
        let coords = coords
            .iter()
            .zip(&self.moduli)
            .map(|(&c, &m)| c % m)
            .collect();
        Ok(GroupElement { coords })
    }

    /// Checks that `x` is a reduced element of this group.
    pub fn check(&self, x: &GroupElement) -> Result<()> {
        if x.coords.len() != self.rank() {
            return Err(Error::RankMismatch {
                expected: self.rank(),
                got: x.coords.len(),
            });
        }
        for (j, (&c, &m)) in x.coords.iter().zip(&self.moduli).enumerate() {
            if c >= m {
                return Err(Error::CoordinateOutOfRange {
                    position: j,
                    value: c,
                    modulus: m,
                });
            }
        }
        Ok(())
    }

    /// Coordinatewise addition modulo the factors.
    pub fn add(&self, x: &GroupElement, y: &GroupElement) -> Result<GroupElement> {
        self.check(x)?;
        self.check(y)?;
        let coords = x
            .coords
            .iter()
            .zip(&y.coords)
            .zip(&self.moduli)
            .map(|((&a, &b), &m)| (a + b) % m)
            .collect();
        Ok(GroupElement { coords })
    }

    /// The additive inverse, so `add(x, negate(x))` is the identity.
    pub fn negate(&self, x: &GroupElement) -> Result<GroupElement> {
        self.check(x)?;
        let coords = x
            .coords
            .iter()
            .zip(&self.moduli)
            .map(|(&a, &m)| (m - a) % m)
            .collect();
        Ok(GroupElement { coords })
    }

    pub fn sub(&self, x: &GroupElement, y: &GroupElement) -> Result<GroupElement> {
        let ny = self.negate(y)?;
        self.add(x, &ny)
    }

    /// Canonical mixed-radix index of `x` in `[0, |G|)`.
    pub fn element_index(&self, x: &GroupElement) -> Result<usize> {
        self.check(x)?;
        let mut idx: usize = 0;
        for (&c, &m) in x.coords.iter().zip(&self.moduli) {
            idx = idx * m as usize + c as usize;
        }
        Ok(idx)
    }

    /// Inverse of [`element_index`](Self::element_index); `element_at(0)` is
    /// the identity.
    pub fn element_at(&self, index: usize) -> Result<GroupElement> {
        let order = self.order();
        if index >= order {
            return Err(Error::IndexOutOfRange { index, order });
        }
        let mut coords = vec![0u32; self.rank()];
        let mut rest = index;
        for j in (0..self.rank()).rev() {
            let m = self.moduli[j] as usize;
            coords[j] = (rest % m) as u32;
            rest /= m;
        }
        Ok(GroupElement { coords })
    }

    /// All elements in canonical order.
    pub fn elements(&self) -> Vec<GroupElement> {
        (0..self.order())
            .map(|i| self.element_at(i).expect("index in range"))
            .collect()
    }

    /// The smallest subgroup containing all generators (breadth-first closure
    /// under the group law). An empty generator list yields the trivial
    /// subgroup.
    pub fn subgroup(&self, generators: &[GroupElement]) -> Result<Subgroup> {
        for g in generators {
            self.check(g)?;
        }
        let order = self.order();
        let mut member = vec![false; order];
        let mut worklist = vec![self.identity()];
        member[0] = true;
        while let Some(w) = worklist.pop() {
            for g in generators {
                let next = self.add(&w, g)?;
                let idx = self.element_index(&next)?;
                if !member[idx] {
                    member[idx] = true;
                    worklist.push(next);
                }
            }
        }
        let element_indices: Vec<usize> =
            (0..order).filter(|&i| member[i]).collect();
        let mut position = vec![None; order];
        for (pos, &idx) in element_indices.iter().enumerate() {
            position[idx] = Some(pos);
        }
        let elements = element_indices
            .iter()
            .map(|&i| self.element_at(i).expect("index in range"))
            .collect();
        Ok(Subgroup {
            ambient: self.clone(),
            generators: generators.to_vec(),
            elements,
            element_indices,
            position,
        })
    }

    /// The trivial subgroup `{0}`.
    pub fn trivial_subgroup(&self) -> Subgroup {
        self.subgroup(&[]).expect("empty generator list is valid")
    }

    /// The whole group as a subgroup (generated by the standard basis).
    pub fn full_subgroup(&self) -> Subgroup {
        let gens: Vec<GroupElement> = (0..self.rank())
            .map(|j| {
                let mut coords = vec![0u32; self.rank()];
                coords[j] = 1 % self.moduli[j];
                GroupElement { coords }
            })
            .collect();
        self.subgroup(&gens).expect("basis elements are valid")
    }
}

/// An element of a [`GroupSpec`], stored as reduced coordinates.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct GroupElement {
    coords: Vec<u32>,
}

impl GroupElement {
    pub fn coords(&self) -> &[u32] {
        &self.coords
    }
}

/// A subgroup `H ≤ G`, stored extensionally: the full element list in
/// canonical ambient order plus a membership/position table of length `|G|`.
#[derive(Debug, Clone)]
pub struct Subgroup {
    ambient: GroupSpec,
    generators: Vec<GroupElement>,
    elements: Vec<GroupElement>,
    element_indices: Vec<usize>,
    position: Vec<Option<usize>>,
}

impl Subgroup {
    pub fn ambient(&self) -> &GroupSpec {
        &self.ambient
    }

    pub fn generators(&self) -> &[GroupElement] {
        &self.generators
    }

    /// Members sorted strictly increasing by canonical ambient index.
    pub fn elements(&self) -> &[GroupElement] {
        &self.elements
    }

    /// Canonical ambient indices of the members, ascending.
    pub fn element_indices(&self) -> &[usize] {
        &self.element_indices
    }

    /// `|H|`.
    pub fn order(&self) -> usize {
        self.elements.len()
    }

    /// `[G : H] = |G| / |H|`.
    pub fn index(&self) -> usize {
        self.ambient.order() / self.order()
    }

    pub fn contains(&self, x: &GroupElement) -> Result<bool> {
        Ok(self.position(x)?.is_some())
    }

    /// Position of `x` in the canonical member list, if `x ∈ H`.
    pub fn position(&self, x: &GroupElement) -> Result<Option<usize>> {
        let idx = self
            .ambient
            .element_index(x)
            .map_err(|_| Error::AmbientMismatch)?;
        Ok(self.position[idx])
    }

    /// Position lookup by canonical ambient index.
    pub fn position_of_index(&self, ambient_index: usize) -> Option<usize> {
        self.position.get(ambient_index).copied().flatten()
    }

    pub fn is_trivial(&self) -> bool {
        self.order() == 1
    }

    pub fn is_full(&self) -> bool {
        self.order() == self.ambient.order()
    }
}

impl PartialEq for Subgroup {
    fn eq(&self, other: &Self) -> bool {
        self.ambient == other.ambient && self.element_indices == other.element_indices
    }
}

impl Eq for Subgroup {}
