//! Multi-qubit Pauli algebra on a packed symplectic representation.
//!
//! A Pauli word stores one x bit and one z bit per qubit
//! (`I = 00`, `X = 10`, `Y = 11`, `Z = 01`), so products and commutation
//! checks reduce to word-wide bit operations. Hamiltonians reach thousands
//! of terms and grouping is quadratic in the term count, which makes the
//! packed form the difference between milliseconds and minutes.
//!
//! Qubit 0 is the least-significant index bit everywhere in this crate.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use crate::dense::DenseMatrix;
use crate::error::{Error, Result};
use crate::scalar::{default_drop_tolerance, Real, C};

/// Hard ceiling for dense-matrix construction (2^16 x 2^16).
pub const DEFAULT_DENSE_CAP: usize = 16;

const WORD_BITS: usize = 64;

fn words_for(n_qubits: usize) -> usize {
    n_qubits.div_ceil(WORD_BITS)
}

/// Single-qubit Pauli letter.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Debug, Hash)]
pub enum Letter {
    I,
    X,
    Y,
    Z,
}

impl Letter {
    pub fn from_char(c: char) -> Option<Letter> {
        match c {
            'I' => Some(Letter::I),
            'X' => Some(Letter::X),
            'Y' => Some(Letter::Y),
            'Z' => Some(Letter::Z),
            _ => None,
        }
    }

    pub fn to_char(self) -> char {
        match self {
            Letter::I => 'I',
            Letter::X => 'X',
            Letter::Y => 'Y',
            Letter::Z => 'Z',
        }
    }

    fn bits(self) -> (bool, bool) {
        match self {
            Letter::I => (false, false),
            Letter::X => (true, false),
            Letter::Y => (true, true),
            Letter::Z => (false, true),
        }
    }

    fn from_bits(x: bool, z: bool) -> Letter {
        match (x, z) {
            (false, false) => Letter::I,
            (true, false) => Letter::X,
            (true, true) => Letter::Y,
            (false, true) => Letter::Z,
        }
    }
}

/// One of the four units {+1, +i, -1, -i}, stored as a power of i.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Hash, Default)]
pub struct Phase(u8);

impl Phase {
    pub const ONE: Phase = Phase(0);
    pub const I: Phase = Phase(1);
    pub const MINUS_ONE: Phase = Phase(2);
    pub const MINUS_I: Phase = Phase(3);

    pub fn from_i_power(k: u32) -> Phase {
        Phase((k % 4) as u8)
    }

    pub fn i_power(self) -> u8 {
        self.0
    }

    pub fn mul(self, other: Phase) -> Phase {
        Phase((self.0 + other.0) % 4)
    }

    pub fn conj(self) -> Phase {
        Phase((4 - self.0) % 4)
    }

    pub fn to_complex<T: Real>(self) -> C<T> {
        match self.0 {
            0 => C::new(T::one(), T::zero()),
            1 => C::new(T::zero(), T::one()),
            2 => C::new(-T::one(), T::zero()),
            _ => C::new(T::zero(), -T::one()),
        }
    }

    fn token(self) -> &'static str {
        match self.0 {
            0 => "+",
            1 => "+i",
            2 => "-",
            _ => "-i",
        }
    }
}

/// Phase-free word of Pauli letters, one per qubit.
///
/// This is the map key for Hamiltonian terms and the shared-basis type for
/// measurement groups; the phased variant is [`PauliString`].
#[derive(Clone, PartialEq, Eq, Debug, Hash)]
pub struct PauliWord {
    n_qubits: usize,
    x: Vec<u64>,
    z: Vec<u64>,
}

impl PauliWord {
    pub fn identity(n_qubits: usize) -> PauliWord {
        assert!(n_qubits > 0, "a Pauli word needs at least one qubit");
        let w = words_for(n_qubits);
        PauliWord {
            n_qubits,
            x: vec![0; w],
            z: vec![0; w],
        }
    }

    pub fn from_letters(letters: &[Letter]) -> PauliWord {
        let mut word = PauliWord::identity(letters.len());
        for (q, &l) in letters.iter().enumerate() {
            word.set_letter(q, l);
        }
        word
    }

    /// Single non-identity letter on `qubit`, identity elsewhere.
    pub fn single(n_qubits: usize, qubit: usize, letter: Letter) -> PauliWord {
        let mut word = PauliWord::identity(n_qubits);
        word.set_letter(qubit, letter);
        word
    }

    pub fn n_qubits(&self) -> usize {
        self.n_qubits
    }

    pub fn letter(&self, qubit: usize) -> Letter {
        debug_assert!(qubit < self.n_qubits);
        let (w, b) = (qubit / WORD_BITS, qubit % WORD_BITS);
        Letter::from_bits((self.x[w] >> b) & 1 == 1, (self.z[w] >> b) & 1 == 1)
    }

    pub fn set_letter(&mut self, qubit: usize, letter: Letter) {
        assert!(qubit < self.n_qubits);
        let (w, b) = (qubit / WORD_BITS, qubit % WORD_BITS);
        let (xb, zb) = letter.bits();
        self.x[w] = (self.x[w] & !(1 << b)) | ((xb as u64) << b);
        self.z[w] = (self.z[w] & !(1 << b)) | ((zb as u64) << b);
    }

    pub fn letters(&self) -> Vec<Letter> {
        (0..self.n_qubits).map(|q| self.letter(q)).collect()
    }

    pub fn is_identity(&self) -> bool {
        self.x.iter().all(|&w| w == 0) && self.z.iter().all(|&w| w == 0)
    }

    /// Number of non-identity letters.
    pub fn weight(&self) -> usize {
        self.x
            .iter()
            .zip(&self.z)
            .map(|(&x, &z)| (x | z).count_ones() as usize)
            .sum()
    }

    /// Number of Y letters.
    pub fn y_count(&self) -> usize {
        self.x
            .iter()
            .zip(&self.z)
            .map(|(&x, &z)| (x & z).count_ones() as usize)
            .sum()
    }

    /// Ascending qubit indices carrying a non-identity letter.
    pub fn support(&self) -> Vec<usize> {
        (0..self.n_qubits)
            .filter(|&q| self.letter(q) != Letter::I)
            .collect()
    }

    /// Per-word mask of non-identity positions.
    pub(crate) fn support_words(&self) -> Vec<u64> {
        self.x.iter().zip(&self.z).map(|(&x, &z)| x | z).collect()
    }

    pub(crate) fn x_words(&self) -> &[u64] {
        &self.x
    }

    pub(crate) fn z_words(&self) -> &[u64] {
        &self.z
    }

    /// Letter-wise product; returns the bare word and the accumulated power
    /// of i coming from the single-qubit algebra.
    pub fn mul_tracking_phase(&self, other: &PauliWord) -> Result<(PauliWord, Phase)> {
        if self.n_qubits != other.n_qubits {
            return Err(Error::QubitMismatch(self.n_qubits, other.n_qubits));
        }
        // In X^x Z^z form each Y contributes i (Y = i X Z), and commuting
        // Z^z1 past X^x2 contributes (-1)^{|z1 & x2|}.
        let mut swap_minus = 0u32;
        let mut x = vec![0u64; self.x.len()];
        let mut z = vec![0u64; self.z.len()];
        for w in 0..self.x.len() {
            swap_minus += (self.z[w] & other.x[w]).count_ones();
            x[w] = self.x[w] ^ other.x[w];
            z[w] = self.z[w] ^ other.z[w];
        }
        let out = PauliWord {
            n_qubits: self.n_qubits,
            x,
            z,
        };
        let i_power = self.y_count() as u32 + other.y_count() as u32 + 2 * swap_minus
            + (4 * self.n_qubits as u32 - out.y_count() as u32);
        Ok((out, Phase::from_i_power(i_power)))
    }

    /// True iff at every qubit the letters are equal or at least one is I.
    pub fn qubitwise_commutes(&self, other: &PauliWord) -> Result<bool> {
        if self.n_qubits != other.n_qubits {
            return Err(Error::QubitMismatch(self.n_qubits, other.n_qubits));
        }
        for w in 0..self.x.len() {
            let both = (self.x[w] | self.z[w]) & (other.x[w] | other.z[w]);
            let differ = (self.x[w] ^ other.x[w]) | (self.z[w] ^ other.z[w]);
            if both & differ != 0 {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// True iff the words commute as operators: the number of positions where
    /// the letters differ and neither is I must be even.
    pub fn general_commutes(&self, other: &PauliWord) -> Result<bool> {
        if self.n_qubits != other.n_qubits {
            return Err(Error::QubitMismatch(self.n_qubits, other.n_qubits));
        }
        let mut acc = 0u32;
        for w in 0..self.x.len() {
            acc += (self.x[w] & other.z[w]).count_ones();
            acc += (self.z[w] & other.x[w]).count_ones();
        }
        Ok(acc % 2 == 0)
    }
}

impl PartialOrd for PauliWord {
    fn partial_cmp(&self, other: &PauliWord) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Lexicographic by letter sequence, qubit 0 first, I < X < Y < Z.
impl Ord for PauliWord {
    fn cmp(&self, other: &PauliWord) -> Ordering {
        match self.n_qubits.cmp(&other.n_qubits) {
            Ordering::Equal => {}
            ord => return ord,
        }
        for q in 0..self.n_qubits {
            match self.letter(q).cmp(&other.letter(q)) {
                Ordering::Equal => {}
                ord => return ord,
            }
        }
        Ordering::Equal
    }
}

impl fmt::Display for PauliWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for q in 0..self.n_qubits {
            write!(f, "{}", self.letter(q).to_char())?;
        }
        Ok(())
    }
}

impl FromStr for PauliWord {
    type Err = Error;

    fn from_str(s: &str) -> Result<PauliWord> {
        if s.is_empty() {
            return Err(Error::InvalidInput("empty Pauli word".into()));
        }
        let mut letters = Vec::with_capacity(s.len());
        for c in s.chars() {
            letters.push(Letter::from_char(c).ok_or_else(|| {
                Error::InvalidInput(format!("invalid Pauli letter '{c}' in \"{s}\""))
            })?);
        }
        Ok(PauliWord::from_letters(&letters))
    }
}

/// Phase-carrying tensor product of single-qubit Pauli letters.
///
/// Rendered as phase token plus letters, qubit 0 first, e.g. `+i XZY`.
#[derive(Clone, PartialEq, Eq, Debug, Hash)]
pub struct PauliString {
    word: PauliWord,
    phase: Phase,
}

impl PauliString {
    pub fn new(word: PauliWord, phase: Phase) -> PauliString {
        PauliString { word, phase }
    }

    pub fn identity(n_qubits: usize) -> PauliString {
        PauliString {
            word: PauliWord::identity(n_qubits),
            phase: Phase::ONE,
        }
    }

    pub fn from_letters(letters: &[Letter]) -> PauliString {
        PauliString {
            word: PauliWord::from_letters(letters),
            phase: Phase::ONE,
        }
    }

    pub fn n_qubits(&self) -> usize {
        self.word.n_qubits()
    }

    pub fn word(&self) -> &PauliWord {
        &self.word
    }

    pub fn phase(&self) -> Phase {
        self.phase
    }

    pub fn into_parts(self) -> (PauliWord, Phase) {
        (self.word, self.phase)
    }

    /// Canonical group product with accumulated phase.
    pub fn multiply(&self, other: &PauliString) -> Result<PauliString> {
        let (word, extra) = self.word.mul_tracking_phase(&other.word)?;
        Ok(PauliString {
            word,
            phase: self.phase.mul(other.phase).mul(extra),
        })
    }

    pub fn qubitwise_commutes(&self, other: &PauliString) -> Result<bool> {
        self.word.qubitwise_commutes(&other.word)
    }

    pub fn general_commutes(&self, other: &PauliString) -> Result<bool> {
        self.word.general_commutes(&other.word)
    }

    pub fn hermitian_conjugate(&self) -> PauliString {
        // Pauli words are Hermitian; only the phase conjugates.
        PauliString {
            word: self.word.clone(),
            phase: self.phase.conj(),
        }
    }
}

impl fmt::Display for PauliString {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} {}", self.phase.token(), self.word)
    }
}

impl FromStr for PauliString {
    type Err = Error;

    fn from_str(s: &str) -> Result<PauliString> {
        let s = s.trim();
        let (phase, rest) = if let Some(r) = s.strip_prefix("+i") {
            (Phase::I, r)
        } else if let Some(r) = s.strip_prefix("-i") {
            (Phase::MINUS_I, r)
        } else if let Some(r) = s.strip_prefix('+') {
            (Phase::ONE, r)
        } else if let Some(r) = s.strip_prefix('-') {
            (Phase::MINUS_ONE, r)
        } else {
            (Phase::ONE, s)
        };
        let word: PauliWord = rest.trim_start().parse()?;
        Ok(PauliString { word, phase })
    }
}

/// Weighted sum of Pauli words with like terms merged.
///
/// Coefficients with magnitude below the drop tolerance are discarded on
/// insertion. Terms iterate in lexicographic letter order, which makes every
/// downstream artifact (plans, circuits, dumps) deterministic.
#[derive(Clone, Debug)]
pub struct WeightedPauliSum<T: Real> {
    n_qubits: usize,
    terms: BTreeMap<PauliWord, C<T>>,
    hermitian: bool,
    drop_tol: T,
}

impl<T: Real> WeightedPauliSum<T> {
    pub fn new(n_qubits: usize) -> WeightedPauliSum<T> {
        assert!(n_qubits > 0, "a Pauli sum needs at least one qubit");
        WeightedPauliSum {
            n_qubits,
            terms: BTreeMap::new(),
            hermitian: false,
            drop_tol: default_drop_tolerance::<T>(),
        }
    }

    pub fn with_drop_tolerance(n_qubits: usize, drop_tol: T) -> WeightedPauliSum<T> {
        let mut sum = WeightedPauliSum::new(n_qubits);
        sum.drop_tol = drop_tol;
        sum
    }

    pub fn n_qubits(&self) -> usize {
        self.n_qubits
    }

    pub fn n_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_hermitian(&self) -> bool {
        self.hermitian
    }

    pub fn drop_tolerance(&self) -> T {
        self.drop_tol
    }

    /// Add `coeff * word`, merging like terms and dropping below tolerance.
    pub fn add(&mut self, word: PauliWord, coeff: C<T>) {
        assert_eq!(word.n_qubits(), self.n_qubits, "qubit count mismatch");
        let tol2 = self.drop_tol * self.drop_tol;
        match self.terms.entry(word) {
            std::collections::btree_map::Entry::Occupied(mut e) => {
                let v = *e.get() + coeff;
                if v.norm_sqr() < tol2 {
                    e.remove();
                } else {
                    *e.get_mut() = v;
                }
            }
            std::collections::btree_map::Entry::Vacant(e) => {
                if coeff.norm_sqr() >= tol2 {
                    e.insert(coeff);
                }
            }
        }
    }

    /// Add a phased string: the phase folds into the stored coefficient.
    pub fn add_string(&mut self, string: PauliString, coeff: C<T>) {
        let (word, phase) = string.into_parts();
        self.add(word, coeff * phase.to_complex::<T>());
    }

    pub fn add_scaled(&mut self, other: &WeightedPauliSum<T>, factor: C<T>) {
        assert_eq!(other.n_qubits, self.n_qubits, "qubit count mismatch");
        for (word, coeff) in &other.terms {
            self.add(word.clone(), *coeff * factor);
        }
    }

    pub fn scale(&mut self, factor: C<T>) {
        for coeff in self.terms.values_mut() {
            *coeff = *coeff * factor;
        }
    }

    pub fn coefficient(&self, word: &PauliWord) -> C<T> {
        self.terms
            .get(word)
            .copied()
            .unwrap_or_else(crate::scalar::c_zero)
    }

    /// Coefficient of the all-identity word (scalar offset).
    pub fn identity_coefficient(&self) -> C<T> {
        self.coefficient(&PauliWord::identity(self.n_qubits))
    }

    /// Terms in lexicographic letter order.
    pub fn iter(&self) -> impl Iterator<Item = (&PauliWord, &C<T>)> {
        self.terms.iter()
    }

    /// Marks the sum Hermitian after verifying all coefficients are real
    /// within 1e-10.
    pub fn mark_hermitian(&mut self) -> Result<()> {
        let tol = T::of(1e-10);
        for (word, coeff) in &self.terms {
            if coeff.im.abs() > tol {
                return Err(Error::NotHermitian(format!(
                    "term {word} has imaginary coefficient {:e}",
                    coeff.im
                )));
            }
        }
        for coeff in self.terms.values_mut() {
            coeff.im = T::zero();
        }
        self.hermitian = true;
        Ok(())
    }

    /// Real coefficients in term order; requires a Hermitian sum.
    pub fn real_terms(&self) -> Result<Vec<(PauliWord, T)>> {
        if !self.hermitian {
            return Err(Error::NotHermitian(
                "sum was not marked Hermitian".into(),
            ));
        }
        Ok(self
            .terms
            .iter()
            .map(|(w, c)| (w.clone(), c.re))
            .collect())
    }

    /// Dense matrix under the default cap; qubit 0 is the least-significant
    /// index bit.
    pub fn to_dense_matrix(&self) -> Result<DenseMatrix<T>> {
        self.to_dense_matrix_with_cap(DEFAULT_DENSE_CAP)
    }

    pub fn to_dense_matrix_with_cap(&self, cap: usize) -> Result<DenseMatrix<T>> {
        if self.n_qubits > cap {
            return Err(Error::DenseCapExceeded(self.n_qubits, cap));
        }
        let dim = 1usize << self.n_qubits;
        let mut m = DenseMatrix::zeros(dim);
        for (word, coeff) in &self.terms {
            let xm = mask_to_usize(word.x_words());
            let zm = mask_to_usize(word.z_words());
            let i_pow = Phase::from_i_power(word.y_count() as u32).to_complex::<T>();
            for col in 0..dim {
                let row = col ^ xm;
                let sign = if ((col & zm).count_ones()) % 2 == 0 {
                    T::one()
                } else {
                    -T::one()
                };
                let v = *coeff * i_pow * C::new(sign, T::zero());
                m.add(row, col, v);
            }
        }
        Ok(m)
    }

    /// Text table: one `coefficient letters` line per term, lexicographic.
    pub fn render_table(&self) -> String {
        let mut out = String::new();
        for (word, coeff) in &self.terms {
            if self.hermitian {
                out.push_str(&format!("{:+.12e}  {}\n", coeff.re, word));
            } else {
                out.push_str(&format!("({:+.12e} {:+.12e}i)  {}\n", coeff.re, coeff.im, word));
            }
        }
        out
    }
}

fn mask_to_usize(words: &[u64]) -> usize {
    debug_assert!(words.iter().skip(1).all(|&w| w == 0));
    words.first().copied().unwrap_or(0) as usize
}

impl<T: Real> serde::Serialize for WeightedPauliSum<T> {
    fn serialize<S: serde::Serializer>(&self, ser: S) -> std::result::Result<S::Ok, S::Error> {
        use serde::ser::SerializeStruct;
        #[derive(serde::Serialize)]
        struct Term {
            pauli: String,
            re: f64,
            im: f64,
        }
        let terms: Vec<Term> = self
            .terms
            .iter()
            .map(|(w, c)| Term {
                pauli: w.to_string(),
                re: c.re.to_f64_lossy(),
                im: c.im.to_f64_lossy(),
            })
            .collect();
        let mut s = ser.serialize_struct("WeightedPauliSum", 3)?;
        s.serialize_field("n_qubits", &self.n_qubits)?;
        s.serialize_field("hermitian", &self.hermitian)?;
        s.serialize_field("terms", &terms)?;
        s.end()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{c_one, c_zero};

    fn ps(s: &str) -> PauliString {
        s.parse().unwrap()
    }

    #[test]
    fn multiply_single_qubit_table() {
        // XY = iZ
        let p = ps("XI").multiply(&ps("YI")).unwrap();
        assert_eq!(p, ps("+i ZI"));
        // YX = -iZ
        let p = ps("YI").multiply(&ps("XI")).unwrap();
        assert_eq!(p, ps("-i ZI"));
        // ZX = iY, XZ = -iY, YZ = iX, ZY = -iX
        assert_eq!(ps("Z").multiply(&ps("X")).unwrap(), ps("+i Y"));
        assert_eq!(ps("X").multiply(&ps("Z")).unwrap(), ps("-i Y"));
        assert_eq!(ps("Y").multiply(&ps("Z")).unwrap(), ps("+i X"));
        assert_eq!(ps("Z").multiply(&ps("Y")).unwrap(), ps("-i X"));
    }

    #[test]
    fn multiply_identity_is_neutral() {
        for s in ["XZ", "YY", "IZ", "XY"] {
            let p = ps(s);
            assert_eq!(ps("II").multiply(&p).unwrap(), p);
            assert_eq!(p.multiply(&ps("II")).unwrap(), p);
        }
    }

    #[test]
    fn paulis_are_involutions() {
        let p = ps("ZX");
        let sq = p.multiply(&p).unwrap();
        assert_eq!(sq, ps("II"));
    }

    #[test]
    fn multiply_rejects_mismatched_qubit_counts() {
        assert!(ps("X").multiply(&ps("XX")).is_err());
    }

    #[test]
    fn qubitwise_commutation_examples() {
        assert!(ps("ZI").qubitwise_commutes(&ps("IZ")).unwrap());
        assert!(!ps("XX").qubitwise_commutes(&ps("ZZ")).unwrap());
        // anticommuting at two positions: not qubit-wise, but generally commuting
        assert!(!ps("XX").qubitwise_commutes(&ps("YY")).unwrap());
        assert!(ps("XX").general_commutes(&ps("YY")).unwrap());
    }

    #[test]
    fn general_commutation_examples() {
        assert!(!ps("XI").general_commutes(&ps("ZI")).unwrap());
        for s in ["XY", "ZZ", "YI"] {
            assert!(ps(s).general_commutes(&ps(s)).unwrap());
        }
    }

    #[test]
    fn display_round_trip() {
        for s in ["+ XZY", "+i XZY", "- II", "-i YX"] {
            let p: PauliString = s.parse().unwrap();
            assert_eq!(p.to_string(), s);
        }
        // omitted phase defaults to +1
        assert_eq!(ps("XZ"), ps("+ XZ"));
    }

    #[test]
    fn word_ordering_is_lexicographic() {
        let mut words: Vec<PauliWord> = ["ZI", "IX", "IZ", "XI", "YY"]
            .iter()
            .map(|s| s.parse().unwrap())
            .collect();
        words.sort();
        let rendered: Vec<String> = words.iter().map(|w| w.to_string()).collect();
        assert_eq!(rendered, ["IX", "IZ", "XI", "YY", "ZI"]);
    }

    #[test]
    fn sum_merges_like_terms_and_drops_small() {
        let mut sum = WeightedPauliSum::<f64>::new(2);
        let w: PauliWord = "XZ".parse().unwrap();
        sum.add(w.clone(), C::new(0.5, 0.0));
        sum.add(w.clone(), C::new(0.5, 0.0));
        assert_eq!(sum.n_terms(), 1);
        assert_eq!(sum.coefficient(&w), C::new(1.0, 0.0));
        sum.add(w.clone(), C::new(-1.0, 0.0));
        assert_eq!(sum.n_terms(), 0);
    }

    #[test]
    fn hermitian_marking_rejects_imaginary_coefficients() {
        let mut sum = WeightedPauliSum::<f64>::new(1);
        sum.add("X".parse().unwrap(), C::new(0.0, 0.3));
        assert!(sum.mark_hermitian().is_err());
    }

    #[test]
    fn dense_single_z() {
        let mut sum = WeightedPauliSum::<f64>::new(1);
        sum.add("Z".parse().unwrap(), c_one());
        let m = sum.to_dense_matrix().unwrap();
        assert_eq!(m.get(0, 0), C::new(1.0, 0.0));
        assert_eq!(m.get(1, 1), C::new(-1.0, 0.0));
        assert_eq!(m.get(0, 1), c_zero());
    }

    #[test]
    fn dense_number_operator() {
        // 0.5 (I - Z) = diag(0, 1)
        let mut sum = WeightedPauliSum::<f64>::new(1);
        sum.add("I".parse().unwrap(), C::new(0.5, 0.0));
        sum.add("Z".parse().unwrap(), C::new(-0.5, 0.0));
        let m = sum.to_dense_matrix().unwrap();
        assert_eq!(m.get(0, 0), c_zero());
        assert_eq!(m.get(1, 1), C::new(1.0, 0.0));
    }

    #[test]
    fn dense_zz_diagonal() {
        let mut sum = WeightedPauliSum::<f64>::new(2);
        sum.add("ZZ".parse().unwrap(), c_one());
        let m = sum.to_dense_matrix().unwrap();
        let diag: Vec<f64> = (0..4).map(|i| m.get(i, i).re).collect();
        assert_eq!(diag, vec![1.0, -1.0, -1.0, 1.0]);
    }

    #[test]
    fn dense_cap_enforced() {
        let sum = WeightedPauliSum::<f64>::new(17);
        assert!(matches!(
            sum.to_dense_matrix(),
            Err(Error::DenseCapExceeded(17, 16))
        ));
    }

    #[test]
    fn dense_qubit_zero_is_least_significant() {
        // Z on qubit 0 of 2: diag(+1, -1, +1, -1)
        let mut sum = WeightedPauliSum::<f64>::new(2);
        sum.add("ZI".parse().unwrap(), c_one());
        let m = sum.to_dense_matrix().unwrap();
        let diag: Vec<f64> = (0..4).map(|i| m.get(i, i).re).collect();
        assert_eq!(diag, vec![1.0, -1.0, 1.0, -1.0]);
    }
}
