//! Bit-packed Pauli strings with exact phase tracking.
//!
//! A Pauli operator is stored as `i^e * X^x * Z^z` with per-qubit X/Z bit
//! vectors and a global power of `i` modulo 4 (X applied before Z on each
//! qubit, so `Y = i X Z`). Multiplication picks up `(-1)^(z1.x2)` from
//! commuting `Z^z1` past `X^x2`, which keeps every phase exact.

use std::fmt;

/// Packed bit vector over qubit indices.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct BitVec {
    n: usize,
    words: Vec<u64>,
}

impl BitVec {
    pub fn zeros(n: usize) -> Self {
        BitVec {
            n,
            words: vec![0; n.div_ceil(64)],
        }
    }

    pub fn len(&self) -> usize {
        self.n
    }

    pub fn is_empty(&self) -> bool {
        self.n == 0
    }

    #[inline]
    pub fn get(&self, i: usize) -> bool {
        (self.words[i / 64] >> (i % 64)) & 1 == 1
    }

    #[inline]
    pub fn set(&mut self, i: usize, v: bool) {
        let w = &mut self.words[i / 64];
        if v {
            *w |= 1 << (i % 64);
        } else {
            *w &= !(1 << (i % 64));
        }
    }

    #[inline]
    pub fn flip(&mut self, i: usize) {
        self.words[i / 64] ^= 1 << (i % 64);
    }

    pub fn xor_with(&mut self, other: &BitVec) {
        debug_assert_eq!(self.n, other.n);
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a ^= *b;
        }
    }

    /// Parity of the AND of two vectors.
    pub fn dot(&self, other: &BitVec) -> bool {
        debug_assert_eq!(self.n, other.n);
        self.words
            .iter()
            .zip(&other.words)
            .fold(0u32, |acc, (a, b)| acc ^ (a & b).count_ones())
            & 1
            == 1
    }

    pub fn count_ones(&self) -> u32 {
        self.words.iter().map(|w| w.count_ones()).sum()
    }

    pub fn is_zero(&self) -> bool {
        self.words.iter().all(|w| *w == 0)
    }

    pub fn ones(&self) -> impl Iterator<Item = usize> + '_ {
        (0..self.n).filter(move |&i| self.get(i))
    }

    pub fn words(&self) -> &[u64] {
        &self.words
    }
}

impl fmt::Debug for BitVec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.n {
            write!(f, "{}", if self.get(i) { '1' } else { '0' })?;
        }
        Ok(())
    }
}

/// Single-qubit Pauli letter.
#[derive(Copy, Clone, Debug, PartialEq, Eq)]
pub enum PauliLetter {
    I,
    X,
    Y,
    Z,
}

impl PauliLetter {
    pub fn from_bits(x: bool, z: bool) -> Self {
        match (x, z) {
            (false, false) => PauliLetter::I,
            (true, false) => PauliLetter::X,
            (true, true) => PauliLetter::Y,
            (false, true) => PauliLetter::Z,
        }
    }
}

/// `i^phase_ipow * X^x * Z^z` over a fixed qubit count.
#[derive(Clone, PartialEq, Eq)]
pub struct PauliString {
    pub x: BitVec,
    pub z: BitVec,
    /// Power of i modulo 4.
    pub phase_ipow: u8,
}

impl PauliString {
    pub fn identity(n: usize) -> Self {
        PauliString {
            x: BitVec::zeros(n),
            z: BitVec::zeros(n),
            phase_ipow: 0,
        }
    }

    pub fn len(&self) -> usize {
        self.x.len()
    }

    pub fn is_empty(&self) -> bool {
        self.x.is_empty()
    }

    pub fn single(n: usize, q: usize, letter: PauliLetter) -> Self {
        let mut p = PauliString::identity(n);
        p.set_letter(q, letter);
        p
    }

    /// Set the letter on one qubit, keeping the operator Hermitian
    /// (`Y = i X Z` contributes one power of i).
    pub fn set_letter(&mut self, q: usize, letter: PauliLetter) {
        let before = self.x.get(q) && self.z.get(q);
        let (x, z) = match letter {
            PauliLetter::I => (false, false),
            PauliLetter::X => (true, false),
            PauliLetter::Y => (true, true),
            PauliLetter::Z => (false, true),
        };
        self.x.set(q, x);
        self.z.set(q, z);
        let after = x && z;
        // Maintain i^{number of Y letters} so the string stays (-1)^s-Hermitian.
        if before != after {
            self.phase_ipow = (self.phase_ipow + if after { 1 } else { 3 }) % 4;
        }
    }

    pub fn letter(&self, q: usize) -> PauliLetter {
        PauliLetter::from_bits(self.x.get(q), self.z.get(q))
    }

    pub fn support(&self) -> impl Iterator<Item = usize> + '_ {
        (0..self.len()).filter(move |&q| self.x.get(q) || self.z.get(q))
    }

    pub fn is_identity_letters(&self) -> bool {
        self.x.is_zero() && self.z.is_zero()
    }

    /// Hermitian iff the phase matches the Y-letter count mod 2; the sign is
    /// then `(-1)^s` with `s = (ipow - #Y)/2 mod 2`.
    pub fn hermitian_sign(&self) -> Option<i8> {
        let y_count = self
            .x
            .words()
            .iter()
            .zip(self.z.words())
            .map(|(a, b)| (a & b).count_ones())
            .sum::<u32>();
        let diff = (self.phase_ipow as i32 - y_count as i32).rem_euclid(4);
        match diff {
            0 => Some(1),
            2 => Some(-1),
            _ => None,
        }
    }

    /// Multiply in place: `self = self * rhs`.
    pub fn mul_assign(&mut self, rhs: &PauliString) {
        // Z^{z_self} X^{x_rhs} = (-1)^{z_self . x_rhs} X Z
        let swap = self.z.dot(&rhs.x);
        self.phase_ipow = (self.phase_ipow + rhs.phase_ipow + if swap { 2 } else { 0 }) % 4;
        self.x.xor_with(&rhs.x);
        self.z.xor_with(&rhs.z);
    }

    pub fn mul(&self, rhs: &PauliString) -> PauliString {
        let mut out = self.clone();
        out.mul_assign(rhs);
        out
    }

    pub fn commutes_with(&self, rhs: &PauliString) -> bool {
        !(self.x.dot(&rhs.z) ^ self.z.dot(&rhs.x))
    }

    /// Phase factor (as a power of i) of `P |b>` relative to `|b ^ x_P>` for a
    /// computational basis state `b`.
    pub fn basis_action_ipow(&self, b: &BitVec) -> u8 {
        // X^x Z^z |b> = (-1)^{z.b} |b ^ x>
        let mut e = self.phase_ipow;
        if self.z.dot(b) {
            e = (e + 2) % 4;
        }
        e
    }
}

impl fmt::Debug for PauliString {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let sign = match self.phase_ipow {
            0 => "+",
            1 => "+i",
            2 => "-",
            _ => "-i",
        };
        write!(f, "{sign}")?;
        for q in 0..self.len() {
            let c = match self.letter(q) {
                PauliLetter::I => '_',
                PauliLetter::X => 'X',
                PauliLetter::Y => 'Y',
                PauliLetter::Z => 'Z',
            };
            write!(f, "{c}")?;
        }
        Ok(())
    }
}
