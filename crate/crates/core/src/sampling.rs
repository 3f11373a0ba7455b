//! Sampling and upsampling over a subgroup, and the fiber structure they
//! induce on the dual group.
//!
//! Restricting the `|G|` ambient characters to `H` partitions the labels into
//! `|H|` fibers of size `[G:H]`, one per character of `H`. The enumeration is
//! fixed once here and reused by the modulated filter representation: fibers
//! are ordered by their minimal ambient canonical label, labels ascend inside
//! each fiber, and `χ_ℓ` denotes the shared restriction of fiber `ℓ`. The DFT
//! on `ℓ(H)` is defined against these `χ_ℓ` value tables, so index `ℓ` plays
//! the role of the character label on `H`.

use num_complex::Complex64;
use std::collections::HashMap;
use std::f64::consts::TAU;

use crate::error::{Error, Result};
use crate::group::Subgroup;
use crate::transform::{Signal, Spectrum};

/// `(S_H f)(h) = f(h)`: restriction to the subgroup, indexed by `H`'s
/// canonical element order.
pub fn downsample(f: &Signal, h: &Subgroup) -> Result<Vec<Complex64>> {
    if f.spec() != h.ambient() {
        return Err(Error::AmbientMismatch);
    }
    Ok(h.element_indices()
        .iter()
        .map(|&i| f.values()[i])
        .collect())
}

/// `(S*_H y)(g) = y(g)` on `H` and zero elsewhere.
pub fn upsample(y: &[Complex64], h: &Subgroup) -> Result<Signal> {
    if y.len() != h.order() {
        return Err(Error::LengthMismatch {
            expected: h.order(),
            got: y.len(),
        });
    }
    let mut out = Signal::zero(h.ambient().clone());
    for (&idx, &v) in h.element_indices().iter().zip(y) {
        out.values_mut()[idx] = v;
    }
    Ok(out)
}

/// The partition of ambient character labels into restriction fibers, plus
/// the value tables of the subgroup characters `χ_ℓ`.
#[derive(Debug, Clone)]
pub struct FiberDecomposition {
    fibers: Vec<Vec<usize>>,
    fiber_of_label: Vec<usize>,
    restrictions: Vec<Vec<Complex64>>,
}

impl FiberDecomposition {
    /// Groups the labels by exact restriction equality. The restriction of
    /// `χ_a` to `H` is determined by the integer exponents
    /// `Σ_j a_j h_j (L/m_j) mod L` with `L = lcm(m_j)`, so the grouping is
    /// exact arithmetic, not float comparison.
    pub fn new(h: &Subgroup) -> Self {
        let spec = h.ambient();
        let moduli = spec.moduli();
        let lcm = moduli.iter().fold(1u64, |acc, &m| {
            let m = m as u64;
            acc / gcd(acc, m) * m
        });
        let weights: Vec<u64> = moduli.iter().map(|&m| lcm / m as u64).collect();

        let sub_coords: Vec<&[u32]> = h.elements().iter().map(|e| e.coords()).collect();
        let mut key_to_fiber: HashMap<Vec<u64>, usize> = HashMap::new();
        let mut fibers: Vec<Vec<usize>> = Vec::new();
        let mut fiber_of_label = vec![0usize; spec.order()];
        let mut keys: Vec<Vec<u64>> = Vec::new();

        for (label, a) in spec.elements().iter().enumerate() {
            let key: Vec<u64> = sub_coords
                .iter()
                .map(|hc| {
                    let mut e = 0u64;
                    for j in 0..moduli.len() {
                        e = (e + a.coords()[j] as u64 * hc[j] as u64 % lcm * weights[j]) % lcm;
                    }
                    e
                })
                .collect();
            // labels are scanned in ascending canonical order, so fibers come
            // out sorted by minimal label with ascending members
            let ell = *key_to_fiber.entry(key.clone()).or_insert_with(|| {
                fibers.push(Vec::new());
                keys.push(key);
                fibers.len() - 1
            });
            fibers[ell].push(label);
            fiber_of_label[label] = ell;
        }

        let restrictions = keys
            .iter()
            .map(|key| {
                key.iter()
                    .map(|&e| Complex64::from_polar(1.0, TAU * e as f64 / lcm as f64))
                    .collect()
            })
            .collect();

        FiberDecomposition {
            fibers,
            fiber_of_label,
            restrictions,
        }
    }

    /// Number of fibers, `|H|`.
    pub fn len(&self) -> usize {
        self.fibers.len()
    }

    pub fn is_empty(&self) -> bool {
        self.fibers.is_empty()
    }

    /// Ambient label indices of fiber `ℓ`, ascending.
    pub fn fiber(&self, ell: usize) -> &[usize] {
        &self.fibers[ell]
    }

    pub fn fibers(&self) -> &[Vec<usize>] {
        &self.fibers
    }

    /// Fiber containing the ambient label with canonical index `label`.
    pub fn fiber_of_label(&self, label: usize) -> usize {
        self.fiber_of_label[label]
    }

    /// Value table of `χ_ℓ` over the subgroup's canonical element order.
    pub fn restriction(&self, ell: usize) -> &[Complex64] {
        &self.restrictions[ell]
    }
}

fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

/// DFT on `ℓ(H)` against the fiber-ordered characters:
/// `ŷ(ℓ) = Σ_h y(h) conj(χ_ℓ(h))`.
pub fn dft_on_subgroup(
    y: &[Complex64],
    h: &Subgroup,
    fd: &FiberDecomposition,
) -> Result<Vec<Complex64>> {
    if y.len() != h.order() {
        return Err(Error::LengthMismatch {
            expected: h.order(),
            got: y.len(),
        });
    }
    Ok((0..fd.len())
        .map(|ell| {
            fd.restriction(ell)
                .iter()
                .zip(y)
                .map(|(chi, v)| v * chi.conj())
                .sum()
        })
        .collect())
}

/// Inverse of [`dft_on_subgroup`]: `y(h) = (1/|H|) Σ_ℓ ŷ(ℓ) χ_ℓ(h)`.
pub fn idft_on_subgroup(
    spectrum: &[Complex64],
    h: &Subgroup,
    fd: &FiberDecomposition,
) -> Result<Vec<Complex64>> {
    if spectrum.len() != fd.len() {
        return Err(Error::LengthMismatch {
            expected: fd.len(),
            got: spectrum.len(),
        });
    }
    let scale = 1.0 / h.order() as f64;
    Ok((0..h.order())
        .map(|k| {
            let acc: Complex64 = (0..fd.len())
                .map(|ell| spectrum[ell] * fd.restriction(ell)[k])
                .sum();
            acc * scale
        })
        .collect())
}

/// Fiber averages of an ambient spectrum: output `ℓ` is
/// `(1/[G:H]) Σ_{ψ ∈ Ĝ_{χ_ℓ}} F(ψ)`, which equals the DFT on `ℓ(H)` of the
/// downsampled signal.
pub fn downsample_spectrum(
    spectrum: &Spectrum,
    h: &Subgroup,
    fd: &FiberDecomposition,
) -> Result<Vec<Complex64>> {
    if spectrum.spec() != h.ambient() {
        return Err(Error::AmbientMismatch);
    }
    let scale = 1.0 / h.index() as f64;
    Ok((0..fd.len())
        .map(|ell| {
            let acc: Complex64 = fd.fiber(ell).iter().map(|&a| spectrum.values()[a]).sum();
            acc * scale
        })
        .collect())
}
