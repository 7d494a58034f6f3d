//! Second-quantized fermionic operators over spin orbitals.
//!
//! Terms are kept in a fixed normal form: all creations left of all
//! annihilations, indices ascending within each block, with the
//! anticommutation sign folded into the coefficient. Every builder in this
//! crate produces operators in creation-block/annihilation-block shape, so
//! canonicalization never needs Wick contractions.

use std::collections::BTreeMap;
use std::fmt;

use crate::error::{Error, Result};
use crate::scalar::{c_zero, Real, C};

/// A single creation or annihilation operator acting on one spin orbital.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Debug, Hash)]
pub struct LadderOp {
    pub index: usize,
    pub create: bool,
}

impl LadderOp {
    pub fn create(index: usize) -> LadderOp {
        LadderOp { index, create: true }
    }

    pub fn annihilate(index: usize) -> LadderOp {
        LadderOp { index, create: false }
    }
}

impl fmt::Display for LadderOp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.create {
            write!(f, "{}^", self.index)
        } else {
            write!(f, "{}", self.index)
        }
    }
}

/// Linear combination of normal-ordered ladder-operator products.
#[derive(Clone, Debug)]
pub struct FermionOperatorSum<T: Real> {
    n_modes: usize,
    terms: BTreeMap<Vec<LadderOp>, C<T>>,
}

impl<T: Real> FermionOperatorSum<T> {
    pub fn new(n_modes: usize) -> FermionOperatorSum<T> {
        FermionOperatorSum {
            n_modes,
            terms: BTreeMap::new(),
        }
    }

    pub fn n_modes(&self) -> usize {
        self.n_modes
    }

    pub fn n_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Vec<LadderOp>, &C<T>)> {
        self.terms.iter()
    }

    /// Constant (identity) part.
    pub fn scalar_part(&self) -> C<T> {
        self.terms.get(&Vec::new()).copied().unwrap_or_else(c_zero)
    }

    pub fn add_scalar(&mut self, value: C<T>) {
        self.insert(Vec::new(), value);
    }

    /// Adds `coeff * ops` after canonicalizing the operator product.
    ///
    /// `ops` must already have all creations left of all annihilations;
    /// within each block any order is accepted and the reordering sign is
    /// tracked. A repeated index inside a block makes the term vanish.
    pub fn add_term(&mut self, ops: &[LadderOp], coeff: C<T>) -> Result<()> {
        for op in ops {
            if op.index >= self.n_modes {
                return Err(Error::QubitOutOfRange {
                    index: op.index,
                    n_qubits: self.n_modes,
                });
            }
        }
        let split = ops.iter().take_while(|op| op.create).count();
        if ops[split..].iter().any(|op| op.create) {
            return Err(Error::InvalidInput(
                "ladder product must list all creations before all annihilations".into(),
            ));
        }
        let (creations, sign_c) = match sort_block(&ops[..split]) {
            Some(v) => v,
            None => return Ok(()), // repeated creation: term is zero
        };
        let (annihilations, sign_a) = match sort_block(&ops[split..]) {
            Some(v) => v,
            None => return Ok(()),
        };
        let mut key = creations;
        key.extend(annihilations);
        let sign = if sign_c == sign_a { T::one() } else { -T::one() };
        self.insert(key, coeff * C::new(sign, T::zero()));
        Ok(())
    }

    fn insert(&mut self, key: Vec<LadderOp>, coeff: C<T>) {
        let tol = T::of(1e-15);
        match self.terms.entry(key) {
            std::collections::btree_map::Entry::Occupied(mut e) => {
                let v = *e.get() + coeff;
                if v.norm_sqr() < tol * tol {
                    e.remove();
                } else {
                    *e.get_mut() = v;
                }
            }
            std::collections::btree_map::Entry::Vacant(e) => {
                if coeff.norm_sqr() >= tol * tol {
                    e.insert(coeff);
                }
            }
        }
    }

    pub fn add_sum(&mut self, other: &FermionOperatorSum<T>, factor: C<T>) {
        assert_eq!(self.n_modes, other.n_modes);
        for (ops, coeff) in &other.terms {
            self.insert(ops.clone(), *coeff * factor);
        }
    }

    /// Hermitian conjugate: reverse the product, swap creation/annihilation,
    /// conjugate coefficients.
    pub fn adjoint(&self) -> FermionOperatorSum<T> {
        let mut out = FermionOperatorSum::new(self.n_modes);
        for (ops, coeff) in &self.terms {
            let conj: Vec<LadderOp> = ops
                .iter()
                .rev()
                .map(|op| LadderOp {
                    index: op.index,
                    create: !op.create,
                })
                .collect();
            out.add_term(&conj, coeff.conj())
                .expect("adjoint of a canonical term is block-shaped");
        }
        out
    }

    /// Max |coefficient difference| against the adjoint; 0 for Hermitian ops.
    pub fn hermiticity_defect(&self) -> T {
        let adj = self.adjoint();
        let mut worst = T::zero();
        for (ops, coeff) in &self.terms {
            let other = adj.terms.get(ops).copied().unwrap_or_else(c_zero);
            worst = worst.max((*coeff - other).norm());
        }
        for (ops, coeff) in &adj.terms {
            if !self.terms.contains_key(ops) {
                worst = worst.max(coeff.norm());
            }
        }
        worst
    }
}

/// Sorts one block ascending by index; returns None when an index repeats
/// (the product is zero), otherwise the sorted block and the permutation
/// parity (true = even).
fn sort_block(ops: &[LadderOp]) -> Option<(Vec<LadderOp>, bool)> {
    let mut block = ops.to_vec();
    let mut even = true;
    for i in 1..block.len() {
        let mut j = i;
        while j > 0 && block[j - 1].index > block[j].index {
            block.swap(j - 1, j);
            even = !even;
            j -= 1;
        }
    }
    for pair in block.windows(2) {
        if pair[0].index == pair[1].index {
            return None;
        }
    }
    Some((block, even))
}

impl<T: Real> fmt::Display for FermionOperatorSum<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (ops, coeff) in &self.terms {
            write!(f, "({:+.6e} {:+.6e}i) ", coeff.re, coeff.im)?;
            if ops.is_empty() {
                write!(f, "1")?;
            }
            for op in ops {
                write!(f, "a{} ", op)?;
            }
            writeln!(f)?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(re: f64) -> C<f64> {
        C::new(re, 0.0)
    }

    #[test]
    fn reordering_tracks_sign() {
        let mut a = FermionOperatorSum::<f64>::new(4);
        // a+_2 a+_1 = -a+_1 a+_2
        a.add_term(&[LadderOp::create(2), LadderOp::create(1)], c(1.0))
            .unwrap();
        let mut b = FermionOperatorSum::<f64>::new(4);
        b.add_term(&[LadderOp::create(1), LadderOp::create(2)], c(-1.0))
            .unwrap();
        let (ka, va) = a.iter().next().unwrap();
        let (kb, vb) = b.iter().next().unwrap();
        assert_eq!(ka, kb);
        assert_eq!(va, vb);
    }

    #[test]
    fn repeated_index_vanishes() {
        let mut a = FermionOperatorSum::<f64>::new(2);
        a.add_term(&[LadderOp::create(1), LadderOp::create(1)], c(1.0))
            .unwrap();
        assert!(a.is_empty());
    }

    #[test]
    fn mixed_order_rejected() {
        let mut a = FermionOperatorSum::<f64>::new(2);
        let err = a.add_term(&[LadderOp::annihilate(0), LadderOp::create(1)], c(1.0));
        assert!(err.is_err());
    }

    #[test]
    fn adjoint_of_excitation() {
        let mut t = FermionOperatorSum::<f64>::new(4);
        t.add_term(&[LadderOp::create(2), LadderOp::annihilate(0)], c(1.0))
            .unwrap();
        let tdag = t.adjoint();
        let (ops, coeff) = tdag.iter().next().unwrap();
        assert_eq!(ops, &vec![LadderOp::create(0), LadderOp::annihilate(2)]);
        assert_eq!(*coeff, c(1.0));
    }

    #[test]
    fn generator_is_anti_hermitian() {
        let mut t = FermionOperatorSum::<f64>::new(4);
        t.add_term(&[LadderOp::create(2), LadderOp::annihilate(0)], c(1.0))
            .unwrap();
        let mut gen = t.clone();
        gen.add_sum(&t.adjoint(), c(-1.0));
        // (T - T+)+ = -(T - T+)
        let mut neg = gen.adjoint();
        neg.add_sum(&gen, C::new(1.0, 0.0));
        assert!(neg.is_empty());
    }
}
