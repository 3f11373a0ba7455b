//! Signals on `ℓ(G)` and the DFT, with convolution, involution, and
//! translation.
//!
//! The transform is the plain quadratic sum `f̂(a) = Σ_x f(x) conj(χ_a(x))`
//! against the character table; it is not unitary, so Parseval reads
//! `⟨f₁,f₂⟩ = (1/|G|)⟨f̂₁,f̂₂⟩`. Spectra are indexed by canonical label
//! order, which is the same mixed-radix order used for elements.

use num_complex::Complex64;

use crate::characters::RootTable;
use crate::error::{Error, Result};
use crate::group::{GroupElement, GroupSpec};

/// A complex-valued function on `G`, indexed by canonical element order.
#[derive(Debug, Clone, PartialEq)]
pub struct Signal {
    spec: GroupSpec,
    values: Vec<Complex64>,
}

impl Signal {
    pub fn new(spec: GroupSpec, values: Vec<Complex64>) -> Result<Self> {
        if values.len() != spec.order() {
            return Err(Error::LengthMismatch {
                expected: spec.order(),
                got: values.len(),
            });
        }
        Ok(Signal { spec, values })
    }

    pub fn zero(spec: GroupSpec) -> Self {
        let n = spec.order();
        Signal {
            spec,
            values: vec![Complex64::new(0.0, 0.0); n],
        }
    }

    /// The Kronecker delta at `at`.
    pub fn delta(spec: GroupSpec, at: &GroupElement) -> Result<Self> {
        let idx = spec.element_index(at)?;
        let mut s = Signal::zero(spec);
        s.values[idx] = Complex64::new(1.0, 0.0);
        Ok(s)
    }

    pub fn spec(&self) -> &GroupSpec {
        &self.spec
    }

    pub fn values(&self) -> &[Complex64] {
        &self.values
    }

    pub fn values_mut(&mut self) -> &mut [Complex64] {
        &mut self.values
    }

    /// `⟨f₁,f₂⟩ = Σ_g f₁(g) conj(f₂(g))`.
    pub fn inner(&self, other: &Signal) -> Result<Complex64> {
        if self.spec != other.spec {
            return Err(Error::SpecMismatch);
        }
        Ok(self
            .values
            .iter()
            .zip(&other.values)
            .map(|(a, b)| a * b.conj())
            .sum())
    }

    pub fn norm_sqr(&self) -> f64 {
        self.values.iter().map(|v| v.norm_sqr()).sum()
    }

    pub fn norm(&self) -> f64 {
        self.norm_sqr().sqrt()
    }
}

/// The DFT of a signal, indexed by canonical character label order.
#[derive(Debug, Clone, PartialEq)]
pub struct Spectrum {
    spec: GroupSpec,
    values: Vec<Complex64>,
}

impl Spectrum {
    pub fn new(spec: GroupSpec, values: Vec<Complex64>) -> Result<Self> {
        if values.len() != spec.order() {
            return Err(Error::LengthMismatch {
                expected: spec.order(),
                got: values.len(),
            });
        }
        Ok(Spectrum { spec, values })
    }

    pub fn spec(&self) -> &GroupSpec {
        &self.spec
    }

    pub fn values(&self) -> &[Complex64] {
        &self.values
    }
}

fn all_coords(spec: &GroupSpec) -> Vec<Vec<u32>> {
    spec.elements()
        .into_iter()
        .map(|e| e.coords().to_vec())
        .collect()
}

/// `f̂(a) = Σ_x f(x) conj(χ_a(x))`.
pub fn dft(f: &Signal) -> Spectrum {
    let spec = f.spec();
    let table = RootTable::new(spec);
    let coords = all_coords(spec);
    let values = coords
        .iter()
        .map(|a| {
            let mut acc = Complex64::new(0.0, 0.0);
            for (x, &v) in coords.iter().zip(f.values()) {
                acc += v * table.eval(a, x).conj();
            }
            acc
        })
        .collect();
    Spectrum {
        spec: spec.clone(),
        values,
    }
}

/// `f(x) = (1/|G|) Σ_a f̂(a) χ_a(x)`.
pub fn idft(spectrum: &Spectrum) -> Signal {
    let spec = spectrum.spec();
    let table = RootTable::new(spec);
    let coords = all_coords(spec);
    let scale = 1.0 / spec.order() as f64;
    let values = coords
        .iter()
        .map(|x| {
            let mut acc = Complex64::new(0.0, 0.0);
            for (a, &v) in coords.iter().zip(spectrum.values()) {
                acc += v * table.eval(a, x);
            }
            acc * scale
        })
        .collect();
    Signal {
        spec: spec.clone(),
        values,
    }
}

/// `(f₁*f₂)(x) = Σ_y f₁(y) f₂(x−y)`.
pub fn convolve(f1: &Signal, f2: &Signal) -> Result<Signal> {
    if f1.spec() != f2.spec() {
        return Err(Error::SpecMismatch);
    }
    let spec = f1.spec();
    let elements = spec.elements();
    let mut values = vec![Complex64::new(0.0, 0.0); spec.order()];
    for (xi, x) in elements.iter().enumerate() {
        let mut acc = Complex64::new(0.0, 0.0);
        for (yi, y) in elements.iter().enumerate() {
            let diff = spec.sub(x, y)?;
            let di = spec.element_index(&diff)?;
            acc += f1.values[yi] * f2.values[di];
        }
        values[xi] = acc;
    }
    Ok(Signal {
        spec: spec.clone(),
        values,
    })
}

/// `f̃(g) = conj(f(−g))`; an involution of `ℓ(G)`.
pub fn involution(f: &Signal) -> Signal {
    let spec = f.spec();
    let values = spec
        .elements()
        .iter()
        .map(|g| {
            let ng = spec.negate(g).expect("element of own spec");
            let ni = spec.element_index(&ng).expect("element of own spec");
            f.values[ni].conj()
        })
        .collect();
    Signal {
        spec: spec.clone(),
        values,
    }
}

/// `(T_g f)(g') = f(g' − g)`; norm-preserving with `T_g T_h = T_{g+h}`.
pub fn translate(f: &Signal, g: &GroupElement) -> Result<Signal> {
    let spec = f.spec();
    spec.check(g)?;
    let mut values = vec![Complex64::new(0.0, 0.0); spec.order()];
    for (i, gp) in spec.elements().iter().enumerate() {
        let src = spec.sub(gp, g)?;
        values[i] = f.values[spec.element_index(&src)?];
    }
    Ok(Signal {
        spec: spec.clone(),
        values,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::characters::char_eval;
    use rand::Rng;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    pub(crate) fn random_signal(spec: &GroupSpec, rng: &mut ChaCha8Rng) -> Signal {
        let values = (0..spec.order())
            .map(|_| Complex64::new(rng.random::<f64>() - 0.5, rng.random::<f64>() - 0.5))
            .collect();
        Signal::new(spec.clone(), values).unwrap()
    }

    fn re(values: &[f64], spec: &GroupSpec) -> Signal {
        Signal::new(
            spec.clone(),
            values.iter().map(|&v| Complex64::new(v, 0.0)).collect(),
        )
        .unwrap()
    }

    fn max_abs_diff(a: &[Complex64], b: &[Complex64]) -> f64 {
        a.iter()
            .zip(b)
            .map(|(x, y)| (x - y).norm())
            .fold(0.0, f64::max)
    }

    #[test]
    fn dft_examples() {
        let g = GroupSpec::new(vec![2, 2]).unwrap();
        let f = Signal::delta(g.clone(), &g.identity()).unwrap();
        let spectrum = dft(&f);
        for v in spectrum.values() {
            assert!((v - Complex64::new(1.0, 0.0)).norm() < 1e-12);
        }

        let g = GroupSpec::cyclic(4).unwrap();
        let f = re(&[1.0, 1.0, 1.0, 1.0], &g);
        let spectrum = dft(&f);
        let expected = [4.0, 0.0, 0.0, 0.0];
        for (v, &e) in spectrum.values().iter().zip(&expected) {
            assert!((v - Complex64::new(e, 0.0)).norm() < 1e-12);
        }

        let f = re(&[1.0, 0.0, 1.0, 0.0], &g);
        let spectrum = dft(&f);
        let expected = [2.0, 0.0, 2.0, 0.0];
        for (v, &e) in spectrum.values().iter().zip(&expected) {
            assert!((v - Complex64::new(e, 0.0)).norm() < 1e-12);
        }
    }

    #[test]
    fn idft_examples() {
        let g = GroupSpec::cyclic(4).unwrap();
        let spectrum = Spectrum::new(
            g.clone(),
            vec![
                Complex64::new(4.0, 0.0),
                Complex64::new(0.0, 0.0),
                Complex64::new(0.0, 0.0),
                Complex64::new(0.0, 0.0),
            ],
        )
        .unwrap();
        let f = idft(&spectrum);
        for v in f.values() {
            assert!((v - Complex64::new(1.0, 0.0)).norm() < 1e-12);
        }

        let spectrum = Spectrum::new(
            g.clone(),
            vec![
                Complex64::new(2.0, 0.0),
                Complex64::new(0.0, 0.0),
                Complex64::new(2.0, 0.0),
                Complex64::new(0.0, 0.0),
            ],
        )
        .unwrap();
        let f = idft(&spectrum);
        let expected = re(&[1.0, 0.0, 1.0, 0.0], &g);
        assert!(max_abs_diff(f.values(), expected.values()) < 1e-12);
    }

    #[test]
    fn dft_round_trip_on_random_signals() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for spec in [
            GroupSpec::cyclic(6).unwrap(),
            GroupSpec::new(vec![2, 4]).unwrap(),
            GroupSpec::new(vec![2, 2, 2]).unwrap(),
        ] {
            for _ in 0..5 {
                let f = random_signal(&spec, &mut rng);
                let back = idft(&dft(&f));
                assert!(max_abs_diff(f.values(), back.values()) <= 1e-10);
            }
        }
    }

    #[test]
    fn convolve_examples() {
        let g = GroupSpec::cyclic(4).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        let f = random_signal(&g, &mut rng);

        // delta at identity is the unit of convolution
        let delta = Signal::delta(g.clone(), &g.identity()).unwrap();
        let conv = convolve(&f, &delta).unwrap();
        assert!(max_abs_diff(conv.values(), f.values()) < 1e-12);

        // delta_g * delta_h = delta_{g+h}
        let dg = Signal::delta(g.clone(), &g.element(&[1]).unwrap()).unwrap();
        let dh = Signal::delta(g.clone(), &g.element(&[2]).unwrap()).unwrap();
        let conv = convolve(&dg, &dh).unwrap();
        let expected = Signal::delta(g.clone(), &g.element(&[3]).unwrap()).unwrap();
        assert!(max_abs_diff(conv.values(), expected.values()) < 1e-12);

        let f = re(&[1.0, 1.0, 0.0, 0.0], &g);
        let conv = convolve(&f, &f).unwrap();
        let expected = re(&[1.0, 2.0, 1.0, 0.0], &g);
        assert!(max_abs_diff(conv.values(), expected.values()) < 1e-12);
    }

    #[test]
    fn convolution_theorem() {
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        let spec = GroupSpec::new(vec![2, 4]).unwrap();
        for _ in 0..5 {
            let f1 = random_signal(&spec, &mut rng);
            let f2 = random_signal(&spec, &mut rng);
            let lhs = dft(&convolve(&f1, &f2).unwrap());
            let s1 = dft(&f1);
            let s2 = dft(&f2);
            let scale = s1
                .values()
                .iter()
                .chain(s2.values())
                .map(|v| v.norm())
                .fold(1.0, f64::max);
            for ((l, a), b) in lhs.values().iter().zip(s1.values()).zip(s2.values()) {
                assert!((l - a * b).norm() <= 1e-9 * scale);
            }
        }
    }

    #[test]
    fn involution_examples() {
        let g = GroupSpec::cyclic(4).unwrap();
        // real even signal is fixed
        let f = re(&[2.0, 1.0, 5.0, 1.0], &g);
        assert!(max_abs_diff(involution(&f).values(), f.values()) < 1e-15);

        let mut f = Signal::zero(g.clone());
        f.values_mut()[1] = Complex64::new(0.0, 1.0);
        let tilde = involution(&f);
        let mut expected = Signal::zero(g.clone());
        expected.values_mut()[3] = Complex64::new(0.0, -1.0);
        assert!(max_abs_diff(tilde.values(), expected.values()) < 1e-15);

        // involution is its own inverse, and dft(f̃) = conj(dft f)
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        let f = random_signal(&g, &mut rng);
        assert!(max_abs_diff(involution(&involution(&f)).values(), f.values()) < 1e-15);
        let lhs = dft(&involution(&f));
        let rhs: Vec<Complex64> = dft(&f).values().iter().map(|v| v.conj()).collect();
        assert!(max_abs_diff(lhs.values(), &rhs) < 1e-10);
    }

    #[test]
    fn translate_examples() {
        let g = GroupSpec::cyclic(4).unwrap();
        let f = re(&[1.0, 2.0, 3.0, 4.0], &g);
        let shifted = translate(&f, &g.element(&[1]).unwrap()).unwrap();
        let expected = re(&[4.0, 1.0, 2.0, 3.0], &g);
        assert!(max_abs_diff(shifted.values(), expected.values()) < 1e-15);

        assert_eq!(translate(&f, &g.identity()).unwrap(), f);

        let mut rng = ChaCha8Rng::seed_from_u64(13);
        let spec = GroupSpec::new(vec![2, 4]).unwrap();
        let f = random_signal(&spec, &mut rng);
        for gel in spec.elements() {
            let t = translate(&f, &gel).unwrap();
            assert!((t.norm() - f.norm()).abs() < 1e-12);
            // T_g T_h = T_{g+h}
            for hel in spec.elements() {
                let lhs = translate(&t, &hel).unwrap();
                let rhs = translate(&f, &spec.add(&gel, &hel).unwrap()).unwrap();
                assert!(max_abs_diff(lhs.values(), rhs.values()) < 1e-12);
            }
        }
    }

    #[test]
    fn parseval_identity() {
        let mut rng = ChaCha8Rng::seed_from_u64(17);
        for spec in [
            GroupSpec::cyclic(8).unwrap(),
            GroupSpec::new(vec![3, 3]).unwrap(),
        ] {
            for _ in 0..5 {
                let f1 = random_signal(&spec, &mut rng);
                let f2 = random_signal(&spec, &mut rng);
                let time = f1.inner(&f2).unwrap();
                let s1 = dft(&f1);
                let s2 = dft(&f2);
                let freq: Complex64 = s1
                    .values()
                    .iter()
                    .zip(s2.values())
                    .map(|(a, b)| a * b.conj())
                    .sum();
                let bound = 1e-9 * (f1.norm() * f2.norm() + 1.0);
                assert!((time - freq / spec.order() as f64).norm() <= bound);
            }
        }
    }

    #[test]
    fn correlation_identity_links_convolution_to_inner_products() {
        // (f * f̃_m)(g) = ⟨f, T_g f_m⟩
        let mut rng = ChaCha8Rng::seed_from_u64(19);
        let spec = GroupSpec::new(vec![2, 4]).unwrap();
        let f = random_signal(&spec, &mut rng);
        let fm = random_signal(&spec, &mut rng);
        let corr = convolve(&f, &involution(&fm)).unwrap();
        for (i, g) in spec.elements().iter().enumerate() {
            let ip = f.inner(&translate(&fm, g).unwrap()).unwrap();
            assert!((corr.values()[i] - ip).norm() <= 1e-10);
        }
    }

    #[test]
    fn translation_modulation_duality() {
        // dft(T_g f)(a) = conj(χ_a(g)) · dft(f)(a)
        let mut rng = ChaCha8Rng::seed_from_u64(23);
        let spec = GroupSpec::new(vec![2, 4]).unwrap();
        let f = random_signal(&spec, &mut rng);
        let base = dft(&f);
        for g in spec.elements() {
            let shifted = dft(&translate(&f, &g).unwrap());
            for (a, (s, b)) in spec
                .elements()
                .iter()
                .zip(shifted.values().iter().zip(base.values()))
            {
                let phase = char_eval(&spec, a, &g).unwrap().conj();
                assert!((s - phase * b).norm() <= 1e-10);
            }
        }
    }

    #[test]
    fn length_mismatch_rejected() {
        let g = GroupSpec::cyclic(4).unwrap();
        assert!(Signal::new(g.clone(), vec![Complex64::new(0.0, 0.0); 3]).is_err());
        let other = GroupSpec::cyclic(5).unwrap();
        let f = Signal::zero(g);
        let h = Signal::zero(other);
        assert!(convolve(&f, &h).is_err());
        assert!(f.inner(&h).is_err());
    }
}
