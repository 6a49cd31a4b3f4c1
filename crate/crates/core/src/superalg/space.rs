use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::ops::Add;

use crate::exact::Rational;

/// Element of Z/2.
#[derive(Copy, Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub enum Parity {
    #[default]
    Even,
    Odd,
}

impl Parity {
    pub fn from_bit(bit: u8) -> Option<Parity> {
        match bit {
            0 => Some(Parity::Even),
            1 => Some(Parity::Odd),
            _ => None,
        }
    }

    pub fn bit(self) -> u8 {
        match self {
            Parity::Even => 0,
            Parity::Odd => 1,
        }
    }

    pub fn is_odd(self) -> bool {
        self == Parity::Odd
    }

    /// The Koszul sign `(-1)^{|a||b|}`.
    pub fn sign(a: Parity, b: Parity) -> Rational {
        if a.is_odd() && b.is_odd() {
            -Rational::one()
        } else {
            Rational::one()
        }
    }

    /// `true` when `(-1)^{|a||b|} = -1`.
    pub fn anticommutes(a: Parity, b: Parity) -> bool {
        a.is_odd() && b.is_odd()
    }
}

impl Add for Parity {
    type Output = Parity;
    fn add(self, rhs: Parity) -> Parity {
        if self == rhs {
            Parity::Even
        } else {
            Parity::Odd
        }
    }
}

impl fmt::Display for Parity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.bit())
    }
}

/// A Z/2-graded vector space with a homogeneous basis.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SuperSpace {
    parity: Vec<Parity>,
    labels: Vec<Option<String>>,
}

impl SuperSpace {
    pub fn new(parity: Vec<Parity>) -> Self {
        let labels = vec![None; parity.len()];
        SuperSpace { parity, labels }
    }

    pub fn from_bits(bits: &[u8]) -> Option<Self> {
        bits.iter().map(|&b| Parity::from_bit(b)).collect::<Option<Vec<_>>>().map(Self::new)
    }

    /// Even-only space of dimension `dim`.
    pub fn even(dim: usize) -> Self {
        Self::new(vec![Parity::Even; dim])
    }

    pub fn dim(&self) -> usize {
        self.parity.len()
    }

    pub fn parity(&self, i: usize) -> Parity {
        self.parity[i]
    }

    pub fn parities(&self) -> &[Parity] {
        &self.parity
    }

    pub fn even_dim(&self) -> usize {
        self.parity.iter().filter(|p| **p == Parity::Even).count()
    }

    pub fn odd_dim(&self) -> usize {
        self.dim() - self.even_dim()
    }

    pub fn label(&self, i: usize) -> Option<&str> {
        self.labels[i].as_deref()
    }

    pub fn labels(&self) -> &[Option<String>] {
        &self.labels
    }

    /// Replaces the labels; returns `false` (leaving labels unchanged) if the
    /// length is wrong or two present labels coincide.
    pub fn set_labels(&mut self, labels: Vec<Option<String>>) -> bool {
        if labels.len() != self.dim() {
            return false;
        }
        let mut seen: Vec<&String> = labels.iter().flatten().collect();
        seen.sort();
        if seen.windows(2).any(|w| w[0] == w[1]) {
            return false;
        }
        self.labels = labels;
        true
    }

    pub fn index_of_label(&self, label: &str) -> Option<usize> {
        self.labels.iter().position(|l| l.as_deref() == Some(label))
    }

    /// Parity of a homogeneous vector; `None` if it mixes parities. The zero
    /// vector is reported as even.
    pub fn parity_of(&self, v: &[Rational]) -> Option<Parity> {
        let mut found: Option<Parity> = None;
        for (i, x) in v.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            match found {
                None => found = Some(self.parity[i]),
                Some(p) if p != self.parity[i] => return None,
                _ => {}
            }
        }
        Some(found.unwrap_or(Parity::Even))
    }

    /// Splits `v` into its even and odd parts.
    pub fn split(&self, v: &[Rational]) -> (Vec<Rational>, Vec<Rational>) {
        let mut even = v.to_vec();
        let mut odd = v.to_vec();
        for (i, p) in self.parity.iter().enumerate() {
            match p {
                Parity::Even => odd[i] = Rational::zero(),
                Parity::Odd => even[i] = Rational::zero(),
            }
        }
        (even, odd)
    }
}
