//! Laurent monomials stored as dense exponent vectors.

use std::cmp::Ordering;
use std::hash::{Hash, Hasher};

use smallvec::SmallVec;

use super::symbols::Symbol;

pub(crate) type Exps = SmallVec<[i16; 24]>;

/// Exponent vector indexed by symbol registration order. Trailing zeros are
/// never stored, so structurally equal monomials compare equal regardless of
/// how many symbols existed when they were built.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Mono(pub(crate) Exps);

impl Hash for Mono {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.0.as_slice().hash(state);
    }
}

impl Mono {
    pub fn one() -> Mono {
        Mono(Exps::new())
    }

    pub fn var(s: Symbol, e: i32) -> Mono {
        let mut m = Mono::one();
        m.set(s.index(), e);
        m
    }

    pub fn from_pairs(pairs: &[(Symbol, i32)]) -> Mono {
        let mut m = Mono::one();
        for &(s, e) in pairs {
            let cur = m.get(s.index());
            m.set(s.index(), cur + e);
        }
        m
    }

    fn trim(&mut self) {
        while let Some(&0) = self.0.last() {
            self.0.pop();
        }
    }

    pub fn get(&self, i: usize) -> i32 {
        self.0.get(i).copied().unwrap_or(0) as i32
    }

    pub fn set(&mut self, i: usize, e: i32) {
        let e16 = i16::try_from(e).expect("exponent out of range");
        if i >= self.0.len() {
            if e16 == 0 {
                return;
            }
            self.0.resize(i + 1, 0);
        }
        self.0[i] = e16;
        self.trim();
    }

    pub fn width(&self) -> usize {
        self.0.len()
    }

    pub fn is_one(&self) -> bool {
        self.0.is_empty()
    }

    pub fn degree(&self) -> i32 {
        self.0.iter().map(|&e| e as i32).sum()
    }

    pub fn mul(&self, other: &Mono) -> Mono {
        let (long, short) = if self.0.len() >= other.0.len() {
            (self, other)
        } else {
            (other, self)
        };
        let mut out = long.0.clone();
        for (o, &s) in out.iter_mut().zip(short.0.iter()) {
            *o += s;
        }
        let mut m = Mono(out);
        m.trim();
        m
    }

    pub fn div(&self, other: &Mono) -> Mono {
        self.mul(&other.inv())
    }

    pub fn inv(&self) -> Mono {
        Mono(self.0.iter().map(|&e| -e).collect())
    }

    pub fn pow(&self, k: i32) -> Mono {
        let mut m = Mono(self.0.iter().map(|&e| (e as i32 * k) as i16).collect());
        m.trim();
        m
    }

    /// Componentwise minimum with the implicit zero padding.
    pub fn min(&self, other: &Mono) -> Mono {
        let n = self.0.len().max(other.0.len());
        let mut m = Mono((0..n).map(|i| self.get(i).min(other.get(i)) as i16).collect());
        m.trim();
        m
    }

    pub fn is_nonneg(&self) -> bool {
        self.0.iter().all(|&e| e >= 0)
    }

    /// True if `other` divides `self` in the polynomial (non-Laurent) sense.
    pub fn divisible_by(&self, other: &Mono) -> bool {
        (0..other.0.len()).all(|i| self.get(i) >= other.get(i))
    }

    pub fn support(&self) -> impl Iterator<Item = (usize, i32)> + '_ {
        self.0
            .iter()
            .enumerate()
            .filter(|(_, &e)| e != 0)
            .map(|(i, &e)| (i, e as i32))
    }

    pub fn exps(&self) -> &[i16] {
        &self.0
    }

    /// Graded reverse lexicographic comparison; `Greater` means earlier in
    /// canonical (descending) term order.
    pub fn cmp_grevlex(&self, other: &Mono) -> Ordering {
        match self.degree().cmp(&other.degree()) {
            Ordering::Equal => {}
            o => return o,
        }
        let n = self.0.len().max(other.0.len());
        for i in (0..n).rev() {
            let (a, b) = (self.get(i), other.get(i));
            if a != b {
                return b.cmp(&a);
            }
        }
        Ordering::Equal
    }
}

/// Wrapper ordering monomials so that iteration of a `BTreeMap` visits them
/// in canonical descending order.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Desc(pub Mono);

impl PartialOrd for Desc {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Desc {
    fn cmp(&self, other: &Self) -> Ordering {
        other.0.cmp_grevlex(&self.0)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn grevlex_basics() {
        let q = Symbol::q();
        let t = Symbol::t();
        let q2 = Mono::var(q, 2);
        let qt = Mono::from_pairs(&[(q, 1), (t, 1)]);
        let t2 = Mono::var(t, 2);
        // same degree: q^2 > q t > t^2
        assert_eq!(q2.cmp_grevlex(&qt), Ordering::Greater);
        assert_eq!(qt.cmp_grevlex(&t2), Ordering::Greater);
        assert_eq!(Mono::var(q, 1).cmp_grevlex(&Mono::one()), Ordering::Greater);
    }

    #[test]
    fn trailing_zeros_trimmed() {
        let a = Mono::var(Symbol::letter(3), 2);
        let b = a.div(&a);
        assert!(b.is_one());
        assert_eq!(b, Mono::one());
    }
}
