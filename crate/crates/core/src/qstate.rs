//! Exact two-qubit statevector algebra.
//!
//! The protocol works inside a tiny family of states: the four computational
//! basis states |mn⟩ and the four Hadamard-product states
//!
//! ```text
//! |h(x,y)⟩ = ½ (|0⟩ + (−1)^y |1⟩) ⊗ (|0⟩ + (−1)^x |1⟩)
//! ```
//!
//! Note the cross convention: the *first* tensor factor carries `(−1)^y` and
//! the *second* carries `(−1)^x`. Both measurement decoders return pairs in
//! subscript order, so the one-step search identity
//! `amplify(x,y) ∘ phase_flip(m,n)` on `|h(x,y)⟩` lands on |mn⟩ with direct
//! indices. Amplitudes never leave {0, ±1/2, ±1} up to a global sign, which
//! keeps every honest measurement outcome exact in doubles.

use num_complex::Complex64;
use rand::Rng;

/// An ordered pair of bits, as produced by the two measurement decoders.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct BitPair {
    pub first: bool,
    pub second: bool,
}

impl BitPair {
    pub fn new(first: bool, second: bool) -> Self {
        BitPair { first, second }
    }

    fn from_index(k: usize) -> Self {
        BitPair {
            first: k & 0b10 != 0,
            second: k & 0b01 != 0,
        }
    }

    pub fn xor(self, other: BitPair) -> BitPair {
        BitPair {
            first: self.first ^ other.first,
            second: self.second ^ other.second,
        }
    }
}

impl std::fmt::Display for BitPair {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(
            f,
            "{}{}",
            u8::from(self.first),
            u8::from(self.second)
        )
    }
}

/// Basis label (a, b) → amplitude index. First factor is the high bit.
fn idx(a: bool, b: bool) -> usize {
    (usize::from(a) << 1) | usize::from(b)
}

/// A pure two-qubit state: four complex amplitudes over |00⟩,|01⟩,|10⟩,|11⟩.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct TwoQubitState {
    amp: [Complex64; 4],
}

impl TwoQubitState {
    /// The computational basis state |mn⟩.
    pub fn basis(m: bool, n: bool) -> Self {
        let mut amp = [Complex64::new(0.0, 0.0); 4];
        amp[idx(m, n)] = Complex64::new(1.0, 0.0);
        TwoQubitState { amp }
    }

    /// The Hadamard-product state |h(x,y)⟩; amplitude at |ab⟩ is
    /// `(−1)^(y·a ⊕ x·b) / 2`.
    pub fn hadamard(x: bool, y: bool) -> Self {
        let mut amp = [Complex64::new(0.0, 0.0); 4];
        for a in [false, true] {
            for b in [false, true] {
                let negative = (y & a) ^ (x & b);
                amp[idx(a, b)] = Complex64::new(if negative { -0.5 } else { 0.5 }, 0.0);
            }
        }
        TwoQubitState { amp }
    }

    pub fn amplitudes(&self) -> &[Complex64; 4] {
        &self.amp
    }

    /// ⟨self|other⟩.
    pub fn inner(&self, other: &TwoQubitState) -> Complex64 {
        self.amp
            .iter()
            .zip(other.amp.iter())
            .map(|(a, b)| a.conj() * b)
            .sum()
    }

    pub fn norm_sqr(&self) -> f64 {
        self.amp.iter().map(|a| a.norm_sqr()).sum()
    }

    /// Marks |mn⟩ by flipping the sign of its amplitude (the Grover oracle
    /// step). All other amplitudes are untouched, so applying it twice is the
    /// identity, exactly.
    #[must_use]
    pub fn phase_flip(mut self, m: bool, n: bool) -> Self {
        self.amp[idx(m, n)] = -self.amp[idx(m, n)];
        self.check_protocol_set();
        self
    }

    /// Reflects about |h(x,y)⟩ (the Grover diffusion step):
    /// `2⟨h(x,y)|s⟩·|h(x,y)⟩ − s`.
    #[must_use]
    pub fn amplify(self, x: bool, y: bool) -> Self {
        let axis = TwoQubitState::hadamard(x, y);
        let overlap = axis.inner(&self);
        let mut amp = [Complex64::new(0.0, 0.0); 4];
        for k in 0..4 {
            amp[k] = 2.0 * overlap * axis.amp[k] - self.amp[k];
        }
        let out = TwoQubitState { amp };
        out.check_protocol_set();
        out
    }

    /// Outcome probabilities of a per-qubit computational-basis measurement,
    /// indexed by (a, b).
    pub fn z_distribution(&self) -> [f64; 4] {
        [
            self.amp[0].norm_sqr(),
            self.amp[1].norm_sqr(),
            self.amp[2].norm_sqr(),
            self.amp[3].norm_sqr(),
        ]
    }

    /// Outcome probabilities of a per-qubit Hadamard-basis measurement,
    /// indexed by the subscripts (x, y) of |h(x,y)⟩.
    pub fn x_distribution(&self) -> [f64; 4] {
        let mut probs = [0.0; 4];
        for x in [false, true] {
            for y in [false, true] {
                probs[idx(x, y)] = TwoQubitState::hadamard(x, y).inner(self).norm_sqr();
            }
        }
        probs
    }

    /// Measures both qubits in the computational basis; returns (a, b) with
    /// probability |⟨ab|s⟩|².
    pub fn measure_z<R: Rng>(&self, rng: &mut R) -> BitPair {
        BitPair::from_index(sample4(&self.z_distribution(), rng))
    }

    /// Measures both qubits in the Hadamard basis; if the state collapses to
    /// |h(x,y)⟩ the returned pair is (x, y), i.e. subscript order.
    pub fn measure_x<R: Rng>(&self, rng: &mut R) -> BitPair {
        BitPair::from_index(sample4(&self.x_distribution(), rng))
    }

    /// True iff the states agree up to a global phase: |⟨s1|s2⟩| ≥ 1 − tol.
    pub fn equal_up_to_phase(&self, other: &TwoQubitState, tol: f64) -> bool {
        self.inner(other).norm() >= 1.0 - tol
    }

    // Debug-build check: the protocol (and every attack we model) keeps
    // amplitudes in {0, ±1/2, ±1} and states normalized.
    fn check_protocol_set(&self) {
        #[cfg(debug_assertions)]
        {
            const EPS: f64 = 1e-9;
            debug_assert!((self.norm_sqr() - 1.0).abs() < EPS, "state not normalized");
            for a in &self.amp {
                let m = a.norm();
                debug_assert!(
                    m < EPS || (m - 0.5).abs() < EPS || (m - 1.0).abs() < EPS,
                    "amplitude {a} outside the protocol set"
                );
            }
        }
    }
}

fn sample4<R: Rng>(probs: &[f64; 4], rng: &mut R) -> usize {
    let u: f64 = rng.gen();
    let mut acc = 0.0;
    for (k, p) in probs.iter().enumerate() {
        acc += p;
        if u < acc {
            return k;
        }
    }
    3
}
