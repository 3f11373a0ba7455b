//! Characters of a finite abelian group and of its subgroups.
//!
//! Every element `a ∈ G` labels the character
//! `χ_a(x) = Π_j exp(2πi a_j x_j / m_j)`, and these exhaust the dual group.
//! Characters of a subgroup `H` are kept extensionally as unit-modulus value
//! tables over `H`'s canonical element list; two tables are the same
//! character when they agree pointwise within `CHAR_EQ_TOL`.

use num_complex::Complex64;
use std::f64::consts::TAU;

use crate::error::{Error, Result};
use crate::group::{GroupElement, GroupSpec, Subgroup};

/// Pointwise tolerance for regarding two character tables as equal.
pub const CHAR_EQ_TOL: f64 = 1e-9;

/// A character of `G` is labelled by the element `a` with `χ_a`.
pub type CharacterLabel = GroupElement;

/// Per-modulus tables of the roots of unity, so character evaluation inside
/// transform loops is a few table lookups instead of `exp` calls.
pub(crate) struct RootTable {
    moduli: Vec<u32>,
    roots: Vec<Vec<Complex64>>,
}

impl RootTable {
    pub(crate) fn new(spec: &GroupSpec) -> Self {
        let moduli = spec.moduli().to_vec();
        let roots = moduli
            .iter()
            .map(|&m| {
                (0..m)
                    .map(|k| Complex64::from_polar(1.0, TAU * k as f64 / m as f64))
                    .collect()
            })
            .collect();
        RootTable { moduli, roots }
    }

    /// `χ_a(x)` for reduced coordinate slices.
    pub(crate) fn eval(&self, a: &[u32], x: &[u32]) -> Complex64 {
        let mut v = Complex64::new(1.0, 0.0);
        for j in 0..self.moduli.len() {
            let m = self.moduli[j] as u64;
            let k = (a[j] as u64 * x[j] as u64) % m;
            v *= self.roots[j][k as usize];
        }
        v
    }
}

/// Evaluates `χ_a(x) = Π_j exp(2πi a_j x_j / m_j)`.
pub fn char_eval(spec: &GroupSpec, a: &GroupElement, x: &GroupElement) -> Result<Complex64> {
    spec.check(a)?;
    spec.check(x)?;
    Ok(RootTable::new(spec).eval(a.coords(), x.coords()))
}

/// A character of a subgroup, stored as its value table over the subgroup's
/// canonical element list.
#[derive(Debug, Clone)]
pub struct SubgroupCharacter {
    values: Vec<Complex64>,
}

impl SubgroupCharacter {
    /// Validates that `values` defines a character of `h`: unit modulus and
    /// multiplicativity `value(h1+h2) = value(h1)·value(h2)` over all pairs.
    pub fn new(h: &Subgroup, values: Vec<Complex64>) -> Result<Self> {
        if values.len() != h.order() {
            return Err(Error::LengthMismatch {
                expected: h.order(),
                got: values.len(),
            });
        }
        for (k, v) in values.iter().enumerate() {
            if (v.norm() - 1.0).abs() > 1e-12 {
                return Err(Error::InvalidCharacter(format!(
                    "value at position {k} has modulus {}",
                    v.norm()
                )));
            }
        }
        let spec = h.ambient();
        for (i, a) in h.elements().iter().enumerate() {
            for (j, b) in h.elements().iter().enumerate() {
                let sum = spec.add(a, b)?;
                let pos = h.position(&sum)?.expect("subgroup is closed");
                if (values[pos] - values[i] * values[j]).norm() > 1e-10 {
                    return Err(Error::InvalidCharacter(format!(
                        "not multiplicative at positions ({i}, {j})"
                    )));
                }
            }
        }
        Ok(SubgroupCharacter { values })
    }

    /// The trivial character (all ones).
    pub fn trivial(h: &Subgroup) -> Self {
        SubgroupCharacter {
            values: vec![Complex64::new(1.0, 0.0); h.order()],
        }
    }

    pub(crate) fn from_values_unchecked(values: Vec<Complex64>) -> Self {
        SubgroupCharacter { values }
    }

    pub fn values(&self) -> &[Complex64] {
        &self.values
    }

    /// Maximum pointwise distance to another table.
    pub fn distance(&self, other: &SubgroupCharacter) -> f64 {
        self.values
            .iter()
            .zip(&other.values)
            .map(|(a, b)| (a - b).norm())
            .fold(0.0, f64::max)
    }
}

/// Restricts the ambient character `χ_a` to the subgroup `h`:
/// `values[k] = χ_a(h.elements()[k])`.
pub fn restrict(spec: &GroupSpec, a: &CharacterLabel, h: &Subgroup) -> Result<SubgroupCharacter> {
    if h.ambient() != spec {
        return Err(Error::AmbientMismatch);
    }
    spec.check(a)?;
    let table = RootTable::new(spec);
    let values = h
        .elements()
        .iter()
        .map(|x| table.eval(a.coords(), x.coords()))
        .collect();
    Ok(SubgroupCharacter { values })
}

/// All labels `a ∈ G` whose restriction to `h` equals `chi` pointwise within
/// [`CHAR_EQ_TOL`], in canonical label order. The fiber has exactly `[G:H]`
/// members for a valid character; an empty result signals that `chi` is not a
/// character of `h`.
pub fn character_fiber(h: &Subgroup, chi: &SubgroupCharacter) -> Result<Vec<CharacterLabel>> {
    let spec = h.ambient();
    if chi.values.len() != h.order() {
        return Err(Error::LengthMismatch {
            expected: h.order(),
            got: chi.values.len(),
        });
    }
    let table = RootTable::new(spec);
    let mut fiber = Vec::new();
    'labels: for a in spec.elements() {
        for (k, x) in h.elements().iter().enumerate() {
            let v = table.eval(a.coords(), x.coords());
            if (v - chi.values[k]).norm() > CHAR_EQ_TOL {
                continue 'labels;
            }
        }
        fiber.push(a);
    }
    if fiber.is_empty() {
        return Err(Error::EmptyFiber);
    }
    Ok(fiber)
}

/// Constructive character extension. Given `x ∉ H` and a character `chi` of
/// `H`, let `m_x = min{n ≥ 1 : n·x ∈ H}` and `ω = chi(m_x·x)`. The `m_x`
/// solutions of `α^{m_x} = ω` give the pairwise orthogonal extensions
/// `χ_j(k·x + h) = α_j^k · chi(h)` on the subgroup generated by `H` and `x`.
///
/// Roots are ordered deterministically: `α_j = ω^{1/m_x} · exp(2πi j / m_x)`
/// with the principal root first. Returns the enlarged subgroup together
/// with the extension tables on it.
pub fn extend_characters(
    h: &Subgroup,
    x: &GroupElement,
    chi: &SubgroupCharacter,
) -> Result<(Subgroup, Vec<SubgroupCharacter>)> {
    let spec = h.ambient();
    spec.check(x)?;
    if h.contains(x)? {
        return Err(Error::ElementInSubgroup);
    }
    if chi.values.len() != h.order() {
        return Err(Error::LengthMismatch {
            expected: h.order(),
            got: chi.values.len(),
        });
    }

    // m_x = min{n >= 1 : n·x ∈ H}, walking the multiples of x.
    let mut m_x = 1usize;
    let mut mult = x.clone();
    while !h.contains(&mult)? {
        mult = spec.add(&mult, x)?;
        m_x += 1;
    }
    let omega_pos = h.position(&mult)?.expect("m_x·x lies in H");
    let omega = chi.values[omega_pos];
    let theta = omega.arg();

    let mut gens = h.generators().to_vec();
    gens.push(x.clone());
    let hx = spec.subgroup(&gens)?;

    // Decompose each element of H^x as k·x + h with 0 <= k < m_x.
    let mut decomposition = Vec::with_capacity(hx.order());
    for e in hx.elements() {
        let mut found = None;
        let mut kx = spec.identity();
        for k in 0..m_x {
            let rest = spec.sub(e, &kx)?;
            if let Some(pos) = h.position(&rest)? {
                found = Some((k, pos));
                break;
            }
            kx = spec.add(&kx, x)?;
        }
        decomposition.push(found.expect("coset decomposition exists"));
    }

    let m = m_x as f64;
    let characters = (0..m_x)
        .map(|j| {
            let values = decomposition
                .iter()
                .map(|&(k, pos)| {
                    // α_j^k with α_j = exp(i(θ + 2πj)/m_x)
                    let angle = (k as f64) * (theta + TAU * j as f64) / m;
                    Complex64::from_polar(1.0, angle) * chi.values[pos]
                })
                .collect();
            SubgroupCharacter { values }
        })
        .collect();
    Ok((hx, characters))
}

/// `Σ_{ψ ∈ Ĝ_χ} ψ(g)`: `[G:H]·chi(g)` when `g ∈ H`, zero otherwise.
pub fn fiber_sum(
    h: &Subgroup,
    chi: &SubgroupCharacter,
    g: &GroupElement,
) -> Result<Complex64> {
    let spec = h.ambient();
    spec.check(g)?;
    let labels = character_fiber(h, chi)?;
    let table = RootTable::new(spec);
    let mut acc = Complex64::new(0.0, 0.0);
    for a in &labels {
        acc += table.eval(a.coords(), g.coords());
    }
    Ok(acc)
}
