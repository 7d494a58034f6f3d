//! Molecular-integral ingestion and second-quantized operator assembly.
//!
//! Spin orbitals follow the blocked convention: for `m` spatial orbitals,
//! spin orbital `p < m` is spatial `p` with spin alpha and `p + m` is
//! spatial `p - m` with spin beta. Two-body integrals are held in the
//! physicists-with-swapped-tail layout `h[p,q,r,s] = (ps|qr)` matching the
//! operator sum `1/2 h_pqrs a+_p a+_q a_r a_s`; the chemists-to-physicists
//! reordering happens once at parse time.

pub mod fcidump;
pub mod manifest;

use crate::error::{Error, Result};
use crate::fermion::{FermionOperatorSum, LadderOp};
use crate::scalar::{Real, C};

/// One- and two-electron integrals over blocked spin orbitals, plus the
/// scalar core energy (nuclear repulsion and any folded frozen-core part).
#[derive(Clone, Debug)]
pub struct SpinOrbitalIntegrals<T: Real> {
    n_spatial: usize,
    n_electrons: usize,
    ms2: i64,
    core_energy: T,
    one_body: Vec<T>,
    two_body: Vec<T>,
}

impl<T: Real> SpinOrbitalIntegrals<T> {
    pub fn new(n_spatial: usize, n_electrons: usize, ms2: i64, core_energy: T) -> Self {
        let n = 2 * n_spatial;
        SpinOrbitalIntegrals {
            n_spatial,
            n_electrons,
            ms2,
            core_energy,
            one_body: vec![T::zero(); n * n],
            two_body: vec![T::zero(); n * n * n * n],
        }
    }

    pub fn n_spatial(&self) -> usize {
        self.n_spatial
    }

    pub fn n_spin_orbitals(&self) -> usize {
        2 * self.n_spatial
    }

    pub fn n_electrons(&self) -> usize {
        self.n_electrons
    }

    pub fn ms2(&self) -> i64 {
        self.ms2
    }

    pub fn core_energy(&self) -> T {
        self.core_energy
    }

    fn spatial(&self, p: usize) -> usize {
        if p < self.n_spatial {
            p
        } else {
            p - self.n_spatial
        }
    }

    fn is_alpha(&self, p: usize) -> bool {
        p < self.n_spatial
    }

    fn idx2(&self, p: usize, q: usize) -> usize {
        p * self.n_spin_orbitals() + q
    }

    fn idx4(&self, p: usize, q: usize, r: usize, s: usize) -> usize {
        let n = self.n_spin_orbitals();
        ((p * n + q) * n + r) * n + s
    }

    /// One-body integral over spin orbitals.
    pub fn h1(&self, p: usize, q: usize) -> T {
        self.one_body[self.idx2(p, q)]
    }

    /// Two-body integral `h_pqrs` pairing with `a+_p a+_q a_r a_s`.
    pub fn h2(&self, p: usize, q: usize, r: usize, s: usize) -> T {
        self.two_body[self.idx4(p, q, r, s)]
    }

    /// Loads the spatial one-body matrix element into both spin blocks.
    pub fn set_spatial_h1(&mut self, i: usize, j: usize, value: T) {
        let m = self.n_spatial;
        for (p, q) in [(i, j), (i + m, j + m)] {
            let idx = self.idx2(p, q);
            self.one_body[idx] = value;
        }
    }

    /// Loads one chemists' integral (ij|kl) into every spin-allowed
    /// spin-orbital slot: `h[p,q,r,s] = (PS|QR)` with spin(p)=spin(s),
    /// spin(q)=spin(r).
    pub fn set_spatial_eri(&mut self, i: usize, j: usize, k: usize, l: usize, value: T) {
        let m = self.n_spatial;
        for sp_a in [0, m] {
            for sp_b in [0, m] {
                // p=(i,sa) s=(j,sa) q=(k,sb) r=(l,sb)
                let idx = self.idx4(i + sp_a, k + sp_b, l + sp_b, j + sp_a);
                self.two_body[idx] = value;
            }
        }
    }

    /// Recovers the chemists' spatial integral (ij|kl).
    pub fn spatial_eri(&self, i: usize, j: usize, k: usize, l: usize) -> T {
        let m = self.n_spatial;
        self.two_body[self.idx4(i, k + m, l + m, j)]
    }

    pub fn spatial_h1(&self, i: usize, j: usize) -> T {
        self.one_body[self.idx2(i, j)]
    }

    /// Checks the stored tensors: h1 symmetry, the eightfold symmetry of the
    /// source spatial integrals, and exact zeros on spin-forbidden slots.
    pub fn validate(&self) -> Result<()> {
        let tol = T::of(1e-10);
        let n = self.n_spin_orbitals();
        for p in 0..n {
            for q in 0..p {
                if (self.h1(p, q) - self.h1(q, p)).abs() > tol {
                    return Err(Error::InvalidInput(format!(
                        "one-body tensor not symmetric at ({p},{q})"
                    )));
                }
            }
        }
        for p in 0..n {
            for q in 0..n {
                if self.is_alpha(p) != self.is_alpha(q) && self.h1(p, q) != T::zero() {
                    return Err(Error::InvalidInput(
                        "spin-forbidden one-body element is nonzero".into(),
                    ));
                }
            }
        }
        let m = self.n_spatial;
        for i in 0..m {
            for j in 0..m {
                for k in 0..m {
                    for l in 0..m {
                        let v = self.spatial_eri(i, j, k, l);
                        for (a, b, c, d) in [
                            (j, i, k, l),
                            (i, j, l, k),
                            (j, i, l, k),
                            (k, l, i, j),
                            (l, k, i, j),
                            (k, l, j, i),
                            (l, k, j, i),
                        ] {
                            if (self.spatial_eri(a, b, c, d) - v).abs() > tol {
                                return Err(Error::InvalidInput(format!(
                                    "eightfold symmetry violated at ({i}{j}|{k}{l})"
                                )));
                            }
                        }
                    }
                }
            }
        }
        // spin-forbidden two-body slots
        for p in 0..n {
            for q in 0..n {
                for r in 0..n {
                    for s in 0..n {
                        let allowed = self.is_alpha(p) == self.is_alpha(s)
                            && self.is_alpha(q) == self.is_alpha(r);
                        if !allowed && self.h2(p, q, r, s) != T::zero() {
                            return Err(Error::InvalidInput(
                                "spin-forbidden two-body element is nonzero".into(),
                            ));
                        }
                    }
                }
            }
        }
        Ok(())
    }

    /// Aufbau occupation over spin orbitals: the lowest `n_electrons / 2`
    /// spatial orbitals doubly occupied. Requires a closed-shell reference.
    pub fn aufbau_occupation(&self) -> Result<Vec<bool>> {
        if self.ms2 != 0 {
            return Err(Error::OpenShell(self.ms2));
        }
        if self.n_electrons % 2 != 0 {
            return Err(Error::InvalidInput(format!(
                "odd electron count {} has no closed-shell reference",
                self.n_electrons
            )));
        }
        let pairs = self.n_electrons / 2;
        if pairs > self.n_spatial {
            return Err(Error::InvalidInput(format!(
                "{} electrons exceed {} spatial orbitals",
                self.n_electrons, self.n_spatial
            )));
        }
        let mut occ = vec![false; self.n_spin_orbitals()];
        for i in 0..pairs {
            occ[i] = true;
            occ[i + self.n_spatial] = true;
        }
        Ok(occ)
    }

    /// Energy of a determinant with the given spin-orbital occupation.
    pub fn determinant_energy(&self, occ: &[bool]) -> T {
        let occupied: Vec<usize> = (0..self.n_spin_orbitals()).filter(|&p| occ[p]).collect();
        let mut e = self.core_energy;
        for &i in &occupied {
            e += self.h1(i, i);
        }
        let half = T::of(0.5);
        for &i in &occupied {
            for &j in &occupied {
                e += half * (self.h2(i, j, j, i) - self.h2(i, j, i, j));
            }
        }
        e
    }

    /// Hartree-Fock (aufbau determinant) energy.
    pub fn reference_energy(&self) -> Result<T> {
        Ok(self.determinant_energy(&self.aufbau_occupation()?))
    }

    /// Frozen-core / removed-virtual reduction. Frozen orbitals fold into
    /// the core energy and the active one-body integrals through the
    /// inactive-Fock construction; removed virtuals are simply dropped.
    pub fn apply_active_space(&self, spec: &ActiveSpaceSpec) -> Result<SpinOrbitalIntegrals<T>> {
        spec.validate(self)?;
        let m = self.n_spatial;
        let frozen_so: Vec<usize> = spec
            .frozen_occupied
            .iter()
            .flat_map(|&i| [i, i + m])
            .collect();

        let mut core = self.core_energy;
        for &f in &frozen_so {
            core += self.h1(f, f);
        }
        let half = T::of(0.5);
        for &f in &frozen_so {
            for &g in &frozen_so {
                core += half * (self.h2(f, g, g, f) - self.h2(f, g, f, g));
            }
        }

        let active: Vec<usize> = (0..m)
            .filter(|i| !spec.frozen_occupied.contains(i) && !spec.removed_virtual.contains(i))
            .collect();
        let m_new = active.len();
        let n_e = self.n_electrons - 2 * spec.frozen_occupied.len();
        let mut out = SpinOrbitalIntegrals::new(m_new, n_e, self.ms2, core);

        // map new spin orbital -> old spin orbital
        let old_so = |p: usize| -> usize {
            if p < m_new {
                active[p]
            } else {
                active[p - m_new] + m
            }
        };

        let n_new = 2 * m_new;
        for p in 0..n_new {
            for q in 0..n_new {
                let (op, oq) = (old_so(p), old_so(q));
                let mut v = self.h1(op, oq);
                for &f in &frozen_so {
                    v += self.h2(f, op, oq, f) - self.h2(f, op, f, oq);
                }
                let idx = out.idx2(p, q);
                out.one_body[idx] = v;
            }
        }
        for p in 0..n_new {
            for q in 0..n_new {
                for r in 0..n_new {
                    for s in 0..n_new {
                        let v = self.h2(old_so(p), old_so(q), old_so(r), old_so(s));
                        let idx = out.idx4(p, q, r, s);
                        out.two_body[idx] = v;
                    }
                }
            }
        }
        Ok(out)
    }

    /// Second-quantized Hamiltonian: scalar core term plus
    /// `sum h_pq a+_p a_q + 1/2 sum h_pqrs a+_p a+_q a_r a_s`.
    pub fn build_hamiltonian(&self) -> FermionOperatorSum<T> {
        let n = self.n_spin_orbitals();
        let mut op = FermionOperatorSum::new(n);
        op.add_scalar(C::new(self.core_energy, T::zero()));
        for p in 0..n {
            for q in 0..n {
                let v = self.h1(p, q);
                if v == T::zero() {
                    continue;
                }
                op.add_term(
                    &[LadderOp::create(p), LadderOp::annihilate(q)],
                    C::new(v, T::zero()),
                )
                .expect("one-body term is block-shaped");
            }
        }
        let half = T::of(0.5);
        for p in 0..n {
            for q in 0..n {
                if p == q {
                    continue;
                }
                for r in 0..n {
                    for s in 0..n {
                        if r == s {
                            continue;
                        }
                        let v = self.h2(p, q, r, s);
                        if v == T::zero() {
                            continue;
                        }
                        op.add_term(
                            &[
                                LadderOp::create(p),
                                LadderOp::create(q),
                                LadderOp::annihilate(r),
                                LadderOp::annihilate(s),
                            ],
                            C::new(half * v, T::zero()),
                        )
                        .expect("two-body term is block-shaped");
                    }
                }
            }
        }
        op
    }

    /// Anti-Hermitian UCC excitation generators from the aufbau reference,
    /// one parameter slot per generator, in a fixed enumeration order.
    ///
    /// Returns an empty list when there are no occupied or no virtual spin
    /// orbitals.
    pub fn build_ucc_generators(&self, level: UccLevel) -> Result<Vec<UccGenerator<T>>> {
        let occ_mask = self.aufbau_occupation()?;
        let n = self.n_spin_orbitals();
        let occupied: Vec<usize> = (0..n).filter(|&p| occ_mask[p]).collect();
        let virtuals: Vec<usize> = (0..n).filter(|&p| !occ_mask[p]).collect();
        let mut gens = Vec::new();
        if occupied.is_empty() || virtuals.is_empty() {
            return Ok(gens);
        }
        let alpha = |p: usize| p < self.n_spatial;
        let one = C::new(T::one(), T::zero());
        for &i in &occupied {
            for &a in &virtuals {
                if alpha(i) != alpha(a) {
                    continue;
                }
                let mut t = FermionOperatorSum::new(n);
                t.add_term(&[LadderOp::create(a), LadderOp::annihilate(i)], one)?;
                let mut gen = t.clone();
                gen.add_sum(&t.adjoint(), -one);
                gens.push(UccGenerator {
                    excitation: Excitation::Single { occ: i, virt: a },
                    op: gen,
                });
            }
        }
        if level == UccLevel::SinglesDoubles {
            for (ii, &i) in occupied.iter().enumerate() {
                for &j in &occupied[ii + 1..] {
                    for (aa, &a) in virtuals.iter().enumerate() {
                        for &b in &virtuals[aa + 1..] {
                            let occ_alphas = alpha(i) as usize + alpha(j) as usize;
                            let virt_alphas = alpha(a) as usize + alpha(b) as usize;
                            if occ_alphas != virt_alphas {
                                continue;
                            }
                            let mut t = FermionOperatorSum::new(n);
                            t.add_term(
                                &[
                                    LadderOp::create(a),
                                    LadderOp::create(b),
                                    LadderOp::annihilate(j),
                                    LadderOp::annihilate(i),
                                ],
                                one,
                            )?;
                            let mut gen = t.clone();
                            gen.add_sum(&t.adjoint(), -one);
                            gens.push(UccGenerator {
                                excitation: Excitation::Double {
                                    occ: (i, j),
                                    virt: (a, b),
                                },
                                op: gen,
                            });
                        }
                    }
                }
            }
        }
        Ok(gens)
    }
}

/// Truncation level of the unitary coupled-cluster ansatz.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum UccLevel {
    Singles,
    SinglesDoubles,
}

/// Spin-preserving excitation label.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Excitation {
    Single { occ: usize, virt: usize },
    Double { occ: (usize, usize), virt: (usize, usize) },
}

impl std::fmt::Display for Excitation {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Excitation::Single { occ, virt } => write!(f, "{occ}->{virt}"),
            Excitation::Double { occ, virt } => {
                write!(f, "{},{}->{},{}", occ.0, occ.1, virt.0, virt.1)
            }
        }
    }
}

/// One UCC excitation generator `T_k - T_k^dagger` with its parameter slot
/// implied by position.
#[derive(Clone, Debug)]
pub struct UccGenerator<T: Real> {
    pub excitation: Excitation,
    pub op: FermionOperatorSum<T>,
}

/// Frozen-core / removed-virtual selection over spatial orbitals.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct ActiveSpaceSpec {
    pub frozen_occupied: Vec<usize>,
    pub removed_virtual: Vec<usize>,
}

impl ActiveSpaceSpec {
    pub fn empty() -> ActiveSpaceSpec {
        ActiveSpaceSpec::default()
    }

    pub fn is_empty(&self) -> bool {
        self.frozen_occupied.is_empty() && self.removed_virtual.is_empty()
    }

    fn validate<T: Real>(&self, ints: &SpinOrbitalIntegrals<T>) -> Result<()> {
        if ints.ms2() != 0 {
            return Err(Error::OpenShell(ints.ms2()));
        }
        let m = ints.n_spatial();
        let n_occ = ints.n_electrons() / 2;
        for &i in &self.frozen_occupied {
            if i >= m {
                return Err(Error::InvalidActiveSpace(format!(
                    "frozen orbital {i} out of range ({m} spatial orbitals)"
                )));
            }
            if i >= n_occ {
                return Err(Error::InvalidActiveSpace(format!(
                    "frozen orbital {i} is not doubly occupied in the reference"
                )));
            }
        }
        for &i in &self.removed_virtual {
            if i >= m {
                return Err(Error::InvalidActiveSpace(format!(
                    "removed orbital {i} out of range ({m} spatial orbitals)"
                )));
            }
            if i < n_occ {
                return Err(Error::InvalidActiveSpace(format!(
                    "removed orbital {i} is occupied in the reference"
                )));
            }
        }
        for &i in &self.frozen_occupied {
            if self.removed_virtual.contains(&i) {
                return Err(Error::InvalidActiveSpace(format!(
                    "orbital {i} appears in both frozen and removed sets"
                )));
            }
        }
        let mut f = self.frozen_occupied.clone();
        f.sort_unstable();
        f.dedup();
        if f.len() != self.frozen_occupied.len() {
            return Err(Error::InvalidActiveSpace("duplicate frozen orbital".into()));
        }
        let mut r = self.removed_virtual.clone();
        r.sort_unstable();
        r.dedup();
        if r.len() != self.removed_virtual.len() {
            return Err(Error::InvalidActiveSpace("duplicate removed orbital".into()));
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Tiny two-orbital system with hand-picked integrals.
    fn toy_integrals() -> SpinOrbitalIntegrals<f64> {
        let mut ints = SpinOrbitalIntegrals::new(2, 2, 0, 0.5);
        ints.set_spatial_h1(0, 0, -1.25);
        ints.set_spatial_h1(1, 1, -0.47);
        ints.set_spatial_eri(0, 0, 0, 0, 0.67);
        ints.set_spatial_eri(1, 1, 1, 1, 0.70);
        ints.set_spatial_eri(0, 0, 1, 1, 0.66);
        ints.set_spatial_eri(1, 1, 0, 0, 0.66);
        ints.set_spatial_eri(0, 1, 0, 1, 0.18);
        ints.set_spatial_eri(1, 0, 1, 0, 0.18);
        ints.set_spatial_eri(0, 1, 1, 0, 0.18);
        ints.set_spatial_eri(1, 0, 0, 1, 0.18);
        ints
    }

    #[test]
    fn validate_passes_on_symmetric_input() {
        toy_integrals().validate().unwrap();
    }

    #[test]
    fn aufbau_fills_spatial_pairs() {
        let ints = toy_integrals();
        assert_eq!(ints.aufbau_occupation().unwrap(), vec![true, false, true, false]);
    }

    #[test]
    fn reference_energy_matches_hand_sum() {
        let ints = toy_integrals();
        // E = core + 2 h_00 + (00|00)
        let expected = 0.5 + 2.0 * (-1.25) + 0.67;
        assert!((ints.reference_energy().unwrap() - expected).abs() < 1e-12);
    }

    #[test]
    fn empty_active_space_is_identity() {
        let ints = toy_integrals();
        let reduced = ints.apply_active_space(&ActiveSpaceSpec::empty()).unwrap();
        assert_eq!(reduced.n_spatial(), 2);
        assert_eq!(reduced.n_electrons(), 2);
        assert_eq!(reduced.core_energy(), ints.core_energy());
        assert_eq!(reduced.one_body, ints.one_body);
        assert_eq!(reduced.two_body, ints.two_body);
    }

    #[test]
    fn freeze_everything_leaves_reference_energy() {
        let ints = toy_integrals();
        let spec = ActiveSpaceSpec {
            frozen_occupied: vec![0],
            removed_virtual: vec![1],
        };
        let reduced = ints.apply_active_space(&spec).unwrap();
        assert_eq!(reduced.n_spatial(), 0);
        assert_eq!(reduced.n_electrons(), 0);
        let e_ref = ints.reference_energy().unwrap();
        assert!((reduced.core_energy() - e_ref).abs() < 1e-12);
    }

    #[test]
    fn active_space_rejects_bad_specs() {
        let ints = toy_integrals();
        for spec in [
            ActiveSpaceSpec { frozen_occupied: vec![1], removed_virtual: vec![] },
            ActiveSpaceSpec { frozen_occupied: vec![], removed_virtual: vec![0] },
            ActiveSpaceSpec { frozen_occupied: vec![5], removed_virtual: vec![] },
            ActiveSpaceSpec { frozen_occupied: vec![0, 0], removed_virtual: vec![] },
        ] {
            assert!(ints.apply_active_space(&spec).is_err(), "{spec:?}");
        }
    }

    #[test]
    fn hamiltonian_single_orbital() {
        let mut ints = SpinOrbitalIntegrals::<f64>::new(1, 2, 0, 0.25);
        ints.set_spatial_h1(0, 0, -0.9);
        let h = ints.build_hamiltonian();
        // scalar + a+_0 a_0 + a+_1 a_1
        assert_eq!(h.n_terms(), 3);
        assert_eq!(h.scalar_part(), C::new(0.25, 0.0));
        assert!(h.hermiticity_defect() < 1e-14);
    }

    #[test]
    fn hamiltonian_is_hermitian() {
        let h = toy_integrals().build_hamiltonian();
        assert!(h.hermiticity_defect() < 1e-12);
    }

    #[test]
    fn ucc_counts_for_two_electrons_in_four_spin_orbitals() {
        let ints = toy_integrals();
        let sd = ints.build_ucc_generators(UccLevel::SinglesDoubles).unwrap();
        assert_eq!(sd.len(), 3, "2 singles + 1 double");
        let s = ints.build_ucc_generators(UccLevel::Singles).unwrap();
        assert_eq!(s.len(), 2);
        for g in &sd {
            // anti-Hermitian: G + G^dagger = 0
            let mut sum = g.op.adjoint();
            sum.add_sum(&g.op, C::new(1.0, 0.0));
            assert!(sum.is_empty(), "{}", g.excitation);
        }
    }

    #[test]
    fn ucc_rejects_open_shell() {
        let ints = SpinOrbitalIntegrals::<f64>::new(2, 2, 2, 0.0);
        assert!(ints.build_ucc_generators(UccLevel::Singles).is_err());
    }

    #[test]
    fn ucc_empty_when_no_virtuals() {
        let mut ints = SpinOrbitalIntegrals::<f64>::new(1, 2, 0, 0.0);
        ints.set_spatial_h1(0, 0, -1.0);
        let gens = ints.build_ucc_generators(UccLevel::SinglesDoubles).unwrap();
        assert!(gens.is_empty());
    }
}
