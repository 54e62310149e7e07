//! Explicit generator matrices for small Clifford algebras and their verification.
//!
//! A representation assigns a square matrix to each generator `e_0 .. e_{n-1}`.
//! It extends to blades by ordered products (ascending generator index), and it
//! is an injective algebra map exactly when the generators square to the
//! metric signs, pairwise anticommute, and the `2^n` blade images are real
//! linearly independent.

use std::fmt;
use std::str::FromStr;

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::blade::{product_sign, Sign, Signature};
use crate::division::Quaternion;
use crate::error::{CliffordError, Result};
use crate::matrix::{real_rank, Matrix, RANK_TOLERANCE};
use crate::ring::{ComplexQuaternion, Ring, RingKind};

/// Names of the built-in generator sets.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum BuiltinName {
    Pauli,
    Majorana,
    Dirac,
    Psi41,
    Quat13,
    C23,
    D13,
    Phi0Quat,
    Phi1Quat,
}

impl BuiltinName {
    pub const ALL: [BuiltinName; 9] = [
        BuiltinName::Pauli,
        BuiltinName::Majorana,
        BuiltinName::Dirac,
        BuiltinName::Psi41,
        BuiltinName::Quat13,
        BuiltinName::C23,
        BuiltinName::D13,
        BuiltinName::Phi0Quat,
        BuiltinName::Phi1Quat,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            BuiltinName::Pauli => "pauli",
            BuiltinName::Majorana => "majorana",
            BuiltinName::Dirac => "dirac",
            BuiltinName::Psi41 => "psi41",
            BuiltinName::Quat13 => "quat13",
            BuiltinName::C23 => "c23",
            BuiltinName::D13 => "d13",
            BuiltinName::Phi0Quat => "phi0_quat",
            BuiltinName::Phi1Quat => "phi1_quat",
        }
    }
}

impl fmt::Display for BuiltinName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for BuiltinName {
    type Err = CliffordError;

    fn from_str(s: &str) -> Result<Self> {
        BuiltinName::ALL
            .into_iter()
            .find(|b| b.as_str() == s)
            .ok_or_else(|| CliffordError::UnknownRepresentation(s.to_owned()))
    }
}

/// Generator matrices over one ring, with the signature they are claimed to realize.
#[derive(Debug, Clone, PartialEq)]
pub struct Representation<R> {
    name: String,
    claimed: Signature,
    generators: Vec<Matrix<R>>,
}

impl<R: Ring> Representation<R> {
    pub fn new(name: impl Into<String>, claimed: Signature, generators: Vec<Matrix<R>>) -> Result<Self> {
        if generators.len() != claimed.n() {
            return Err(CliffordError::DimensionMismatch { expected: claimed.n(), found: generators.len() });
        }
        let (rows, cols) = (generators[0].rows(), generators[0].cols());
        for g in &generators {
            if !g.is_square() || g.rows() != rows || g.cols() != cols {
                return Err(CliffordError::ShapeMismatch(rows, cols, g.rows(), g.cols()));
            }
        }
        Ok(Representation { name: name.into(), claimed, generators })
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn claimed_signature(&self) -> Signature {
        self.claimed
    }

    pub fn generators(&self) -> &[Matrix<R>] {
        &self.generators
    }

    /// Matrix size.
    pub fn dim(&self) -> usize {
        self.generators[0].rows()
    }

    pub fn ring(&self) -> RingKind {
        R::KIND
    }

    /// Images of all blades, indexed by binary mask. The image of `{i_1 < ... < i_k}`
    /// is `g_{i_1} ··· g_{i_k}` and the empty blade maps to the identity.
    pub fn extend_to_blades(&self) -> Vec<Matrix<R>> {
        let n = self.generators.len();
        let mut images: Vec<Matrix<R>> = Vec::with_capacity(1 << n);
        images.push(Matrix::identity(self.dim()));
        for mask in 1usize..1 << n {
            let top = usize::BITS as usize - 1 - mask.leading_zeros() as usize;
            let rest = &images[mask ^ (1 << top)];
            images.push(rest.matmul(&self.generators[top]).expect("generators share a square shape"));
        }
        images
    }

    pub fn verify(&self) -> VerificationReport {
        let dim = self.dim();
        let identity = Matrix::<R>::identity(dim);
        let minus_identity = identity.neg();
        let zero = Matrix::<R>::zeros(dim, dim);

        let products: Vec<Vec<Matrix<R>>> = self
            .generators
            .iter()
            .map(|a| self.generators.iter().map(|b| a.matmul(b).expect("square")).collect())
            .collect();

        let realized_squares: Vec<Option<Sign>> = (0..self.generators.len())
            .map(|i| {
                let sq = &products[i][i];
                if *sq == identity {
                    Some(Sign::Plus)
                } else if *sq == minus_identity {
                    Some(Sign::Minus)
                } else {
                    None
                }
            })
            .collect();

        let n = self.generators.len();
        let anticommute_ok = (0..n)
            .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
            .all(|(i, j)| products[i][j].add(&products[j][i]).expect("square") == zero);

        let realized_matches_claimed = match_signature(&realized_squares, &self.claimed);

        let flattened: Vec<Vec<f64>> = self.extend_to_blades().iter().map(Matrix::flatten_real).collect();
        let blade_image_rank = real_rank(&flattened, RANK_TOLERANCE).expect("equal lengths");
        let expected_rank = 1usize << n;
        let ambient_real_dim = identity.ambient_real_dim();

        let relations_hold = anticommute_ok && realized_matches_claimed != SignatureMatch::Mismatch;
        let verdict = match (relations_hold, blade_image_rank == expected_rank) {
            (true, true) if expected_rank == ambient_real_dim => Verdict::Isomorphism,
            (true, true) => Verdict::Monomorphism,
            _ => Verdict::Failure,
        };

        VerificationReport {
            name: self.name.clone(),
            ring: R::KIND,
            dim,
            claimed: self.claimed,
            realized_squares,
            anticommute_ok,
            realized_matches_claimed,
            blade_image_rank,
            expected_rank,
            ambient_real_dim,
            verdict,
        }
    }
}

/// Compares realized generator squares with the claimed metric.
///
/// For a permuted match, `permutation[k]` is the generator that plays the role
/// of `e_k` in the claimed signature: positive generators first, then
/// negative ones, each in their original order.
fn match_signature(realized: &[Option<Sign>], claimed: &Signature) -> SignatureMatch {
    let Some(realized) = realized.iter().copied().collect::<Option<Vec<Sign>>>() else {
        return SignatureMatch::Mismatch;
    };
    if realized == claimed.eta() {
        return SignatureMatch::Exact;
    }
    let positives: Vec<usize> = (0..realized.len()).filter(|&i| realized[i] == Sign::Plus).collect();
    if positives.len() != claimed.p() {
        return SignatureMatch::Mismatch;
    }
    let negatives = (0..realized.len()).filter(|&i| realized[i] == Sign::Minus);
    SignatureMatch::UpToPermutation { permutation: positives.iter().copied().chain(negatives).collect() }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum SignatureMatch {
    Exact,
    UpToPermutation { permutation: Vec<usize> },
    Mismatch,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Verdict {
    Monomorphism,
    Isomorphism,
    Failure,
}

impl Verdict {
    /// Monomorphism or isomorphism.
    pub fn is_injective(self) -> bool {
        self != Verdict::Failure
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct VerificationReport {
    pub name: String,
    pub ring: RingKind,
    pub dim: usize,
    pub claimed: Signature,
    /// `None` where a generator square is not `±1`.
    pub realized_squares: Vec<Option<Sign>>,
    pub anticommute_ok: bool,
    pub realized_matches_claimed: SignatureMatch,
    pub blade_image_rank: usize,
    pub expected_rank: usize,
    pub ambient_real_dim: usize,
    pub verdict: Verdict,
}

impl VerificationReport {
    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("reports always serialize")
    }
}

/// A representation over any of the supported rings.
#[derive(Debug, Clone, PartialEq)]
pub enum AnyRepresentation {
    Real(Representation<f64>),
    Complex(Representation<Complex64>),
    Quaternion(Representation<Quaternion>),
    ComplexQuaternion(Representation<ComplexQuaternion>),
}

macro_rules! dispatch {
    ($self:expr, $rep:ident => $body:expr) => {
        match $self {
            AnyRepresentation::Real($rep) => $body,
            AnyRepresentation::Complex($rep) => $body,
            AnyRepresentation::Quaternion($rep) => $body,
            AnyRepresentation::ComplexQuaternion($rep) => $body,
        }
    };
}

impl AnyRepresentation {
    pub fn name(&self) -> &str {
        dispatch!(self, r => r.name())
    }

    pub fn claimed_signature(&self) -> Signature {
        dispatch!(self, r => r.claimed_signature())
    }

    pub fn ring(&self) -> RingKind {
        dispatch!(self, r => r.ring())
    }

    pub fn dim(&self) -> usize {
        dispatch!(self, r => r.dim())
    }

    pub fn verify(&self) -> VerificationReport {
        dispatch!(self, r => r.verify())
    }

    /// Flattened real coordinates of every blade image, indexed by mask.
    pub fn flattened_blade_images(&self) -> Vec<Vec<f64>> {
        dispatch!(self, r => r.extend_to_blades().iter().map(Matrix::flatten_real).collect())
    }

    /// `image(a)·image(b) = sign(a, b)·image(a ^ b)` for every blade pair.
    pub fn respects_blade_product(&self) -> bool {
        dispatch!(self, r => blade_homomorphism_holds(r))
    }
}

fn blade_homomorphism_holds<R: Ring>(rep: &Representation<R>) -> bool {
    let images = rep.extend_to_blades();
    let negative = rep.claimed.negative_mask();
    (0..images.len()).all(|a| {
        (0..images.len()).all(|b| {
            let lhs = images[a].matmul(&images[b]).expect("square");
            let rhs = &images[a ^ b];
            match product_sign(a as u32, b as u32, negative) {
                Sign::Plus => lhs == *rhs,
                Sign::Minus => lhs == rhs.neg(),
            }
        })
    })
}

fn c(re: f64, im: f64) -> Complex64 {
    Complex64::new(re, im)
}

fn real_rows<const N: usize>(rows: [[f64; N]; N]) -> Matrix<f64> {
    Matrix::from_rows(&rows).expect("square literal")
}

fn complex_rows<const N: usize>(rows: [[Complex64; N]; N]) -> Matrix<Complex64> {
    Matrix::from_rows(&rows).expect("square literal")
}

/// `[[tl, tr], [bl, br]]` from equally sized square blocks.
fn blocks<R: Ring>(tl: &Matrix<R>, tr: &Matrix<R>, bl: &Matrix<R>, br: &Matrix<R>) -> Matrix<R> {
    let m = tl.rows();
    Matrix::from_fn(2 * m, 2 * m, |i, j| {
        let block = match (i < m, j < m) {
            (true, true) => tl,
            (true, false) => tr,
            (false, true) => bl,
            (false, false) => br,
        };
        block.get(i % m, j % m)
    })
}

/// `σ_1, σ_2, σ_3`.
pub fn pauli_matrices() -> [Matrix<Complex64>; 3] {
    let (o, l, i) = (c(0.0, 0.0), c(1.0, 0.0), c(0.0, 1.0));
    [complex_rows([[o, l], [l, o]]), complex_rows([[o, -i], [i, o]]), complex_rows([[l, o], [o, -l]])]
}

/// `A_1 .. A_4`, real 4×4.
pub fn majorana_matrices() -> [Matrix<f64>; 4] {
    [
        real_rows([[1., 0., 0., 0.], [0., 1., 0., 0.], [0., 0., -1., 0.], [0., 0., 0., -1.]]),
        real_rows([[0., 0., 1., 0.], [0., 0., 0., 1.], [1., 0., 0., 0.], [0., 1., 0., 0.]]),
        real_rows([[0., 0., 0., 1.], [0., 0., -1., 0.], [0., -1., 0., 0.], [1., 0., 0., 0.]]),
        real_rows([[0., 0., 0., 1.], [0., 0., 1., 0.], [0., -1., 0., 0.], [-1., 0., 0., 0.]]),
    ]
}

/// `B_1 .. B_4`, complex 4×4.
pub fn dirac_matrices() -> [Matrix<Complex64>; 4] {
    let (o, l, i) = (c(0.0, 0.0), c(1.0, 0.0), c(0.0, 1.0));
    [
        complex_rows([[o, o, o, l], [o, o, l, o], [o, l, o, o], [l, o, o, o]]),
        complex_rows([[o, o, o, -i], [o, o, i, o], [o, -i, o, o], [i, o, o, o]]),
        complex_rows([[o, o, l, o], [o, o, o, -l], [l, o, o, o], [o, -l, o, o]]),
        complex_rows([[o, o, l, o], [o, o, o, l], [-l, o, o, o], [o, -l, o, o]]),
    ]
}

/// `Î, Ĵ, K̂, L` over `ℍ`, 2×2.
pub fn quaternionic_matrices() -> [Matrix<Quaternion>; 4] {
    let z = Quaternion::ZERO;
    let off = |u: Quaternion| Matrix::from_rows(&[[z, u], [u, z]]).expect("square literal");
    [
        off(Quaternion::I),
        off(Quaternion::J),
        off(Quaternion::K),
        Matrix::from_rows(&[[Quaternion::ONE, z], [z, -Quaternion::ONE]]).expect("square literal"),
    ]
}

/// `C_0 .. C_3` over `ℂ ⊗ ℍ`, 2×2.
pub fn complexified_matrices() -> [Matrix<ComplexQuaternion>; 4] {
    let z = ComplexQuaternion::default();
    let one = ComplexQuaternion::from_quaternion(Quaternion::ONE);
    let twisted = |u: Quaternion| {
        let iu = ComplexQuaternion::imaginary(u);
        Matrix::from_rows(&[[z, -iu], [iu, z]]).expect("square literal")
    };
    [
        Matrix::from_rows(&[[z, one], [one, z]]).expect("square literal"),
        twisted(Quaternion::I),
        twisted(Quaternion::J),
        twisted(Quaternion::K),
    ]
}

/// `L` lifted into `ℂ ⊗ ℍ`.
fn complexified_l() -> Matrix<ComplexQuaternion> {
    quaternionic_matrices()[3].map(ComplexQuaternion::from_quaternion)
}

/// `D_0 = [[0, σ_0], [σ_0, 0]]`, `D_j = [[0, -σ_j], [σ_j, 0]]`.
pub fn block_pauli_matrices() -> [Matrix<Complex64>; 4] {
    let zero = Matrix::<Complex64>::zeros(2, 2);
    let sigma0 = Matrix::<Complex64>::identity(2);
    let [s1, s2, s3] = pauli_matrices();
    let d = |s: &Matrix<Complex64>| blocks(&zero, &s.neg(), s, &zero);
    [blocks(&zero, &sigma0, &sigma0, &zero), d(&s1), d(&s2), d(&s3)]
}

fn sig(p: usize, q: usize) -> Signature {
    Signature::new(p, q).expect("catalog signatures are valid")
}

fn entry<R: Ring>(label: &str, claimed: Signature, generators: Vec<Matrix<R>>) -> Representation<R> {
    Representation::new(label, claimed, generators).expect("catalog entries are well formed")
}

/// Looks up a built-in representation by name.
pub fn builtin(name: &str) -> Result<AnyRepresentation> {
    Ok(builtin_by_name(name.parse()?))
}

pub fn builtin_by_name(name: BuiltinName) -> AnyRepresentation {
    let label = name.as_str();
    match name {
        BuiltinName::Pauli => AnyRepresentation::Complex(entry(label, sig(3, 0), pauli_matrices().into())),
        BuiltinName::Majorana => AnyRepresentation::Real(entry(label, sig(3, 1), majorana_matrices().into())),
        BuiltinName::Dirac => AnyRepresentation::Complex(entry(label, sig(3, 1), dirac_matrices().into())),
        BuiltinName::Psi41 => {
            let [b1, b2, b3, b4] = dirac_matrices();
            let a1 = majorana_matrices()[0].map(Complex64::from_real);
            AnyRepresentation::Complex(entry(label, sig(4, 1), vec![b1, b2, b3, a1, b4]))
        }
        BuiltinName::Quat13 => AnyRepresentation::Quaternion(entry(label, sig(1, 3), quaternionic_matrices().into())),
        BuiltinName::C23 => {
            let mut gens: Vec<_> = complexified_matrices().into();
            gens.push(complexified_l());
            AnyRepresentation::ComplexQuaternion(entry(label, sig(2, 3), gens))
        }
        BuiltinName::D13 => AnyRepresentation::Complex(entry(label, sig(1, 3), block_pauli_matrices().into())),
        BuiltinName::Phi0Quat => AnyRepresentation::Complex(entry(
            label,
            sig(0, 2),
            vec![Quaternion::I.phi0_embed(), Quaternion::J.phi0_embed()],
        )),
        BuiltinName::Phi1Quat => AnyRepresentation::Real(entry(
            label,
            sig(0, 2),
            vec![Quaternion::I.phi1_embed(), Quaternion::J.phi1_embed()],
        )),
    }
}

pub fn all_builtins() -> Vec<AnyRepresentation> {
    BuiltinName::ALL.into_iter().map(builtin_by_name).collect()
}

/// Results of the two "`i` times a product of generators" identities and of the
/// rank test showing `i·1` is not in the real span of the Dirac blade images.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct IdentityReport {
    /// `A_1 = i B_1 B_2 B_3 B_4`.
    pub a1_is_i_b1b2b3b4: bool,
    /// `L = i C_0 C_1 C_2 C_3`.
    pub l_is_i_c0c1c2c3: bool,
    pub dirac_rank: usize,
    pub dirac_rank_with_i: usize,
    pub i_outside_dirac_span: bool,
}

impl IdentityReport {
    pub fn all_hold(&self) -> bool {
        self.a1_is_i_b1b2b3b4 && self.l_is_i_c0c1c2c3 && self.i_outside_dirac_span
    }
}

pub fn check_identity_products() -> IdentityReport {
    let product =
        |ms: &[Matrix<Complex64>]| ms.iter().skip(1).fold(ms[0].clone(), |acc, m| acc.matmul(m).expect("square"));
    let b = dirac_matrices();
    let a1 = majorana_matrices()[0].map(Complex64::from_real);
    let a1_is_i_b1b2b3b4 = product(&b).scale(c(0.0, 1.0)) == a1;

    let cs = complexified_matrices();
    let cprod = cs.iter().skip(1).fold(cs[0].clone(), |acc, m| acc.matmul(m).expect("square"));
    let l_is_i_c0c1c2c3 = cprod.scale(ComplexQuaternion::I) == complexified_l();

    let dirac = builtin_by_name(BuiltinName::Dirac);
    let mut images = dirac.flattened_blade_images();
    let dirac_rank = real_rank(&images, RANK_TOLERANCE).expect("equal lengths");
    images.push(Matrix::<Complex64>::identity(4).scale(c(0.0, 1.0)).flatten_real());
    let dirac_rank_with_i = real_rank(&images, RANK_TOLERANCE).expect("equal lengths");

    IdentityReport {
        a1_is_i_b1b2b3b4,
        l_is_i_c0c1c2c3,
        dirac_rank,
        dirac_rank_with_i,
        i_outside_dirac_span: dirac_rank_with_i == dirac_rank + 1,
    }
}

/// One assignment `σ_0 ↦ 1`, `iσ_m ↦ s_m·u_m` with `u = (î, ĵ, k̂)`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CorrespondenceVariant {
    pub signs: [Sign; 3],
    pub multiplicative: bool,
}

/// Checks on the span of `{σ_0, iσ_1, iσ_2, iσ_3}` inside `ℂ^{2×2}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PauliQuaternionReport {
    pub closed: bool,
    pub rank: usize,
    /// All eight sign choices, the unsigned one first.
    pub variants: Vec<CorrespondenceVariant>,
}

impl PauliQuaternionReport {
    /// Whether `iσ_m ↦ u_m` with no sign changes is multiplicative.
    pub fn literal_multiplicative(&self) -> bool {
        self.variants[0].multiplicative
    }
}

pub fn pauli_quaternion_subalgebra() -> PauliQuaternionReport {
    let i = c(0.0, 1.0);
    let [s1, s2, s3] = pauli_matrices();
    let basis = [Matrix::<Complex64>::identity(2), s1.scale(i), s2.scale(i), s3.scale(i)];

    // The basis is orthogonal for Re tr(A^† B), each element having squared length 2.
    let coords = |m: &Matrix<Complex64>| -> [f64; 4] {
        std::array::from_fn(|k| {
            let b = &basis[k];
            let mut tr = c(0.0, 0.0);
            for r in 0..2 {
                for t in 0..2 {
                    tr += b.get(t, r).conj() * m.get(t, r);
                }
            }
            tr.re / 2.0
        })
    };
    let rebuild = |x: [f64; 4]| {
        (0..4).fold(Matrix::<Complex64>::zeros(2, 2), |acc, k| acc.add(&basis[k].scale(c(x[k], 0.0))).expect("2x2"))
    };

    let mut table = [[[0.0; 4]; 4]; 4];
    let mut closed = true;
    for a in 0..4 {
        for b in 0..4 {
            let prod = basis[a].matmul(&basis[b]).expect("2x2");
            let x = coords(&prod);
            closed &= rebuild(x) == prod;
            table[a][b] = x;
        }
    }

    let flattened: Vec<Vec<f64>> = basis.iter().map(Matrix::flatten_real).collect();
    let rank = real_rank(&flattened, RANK_TOLERANCE).expect("equal lengths");

    let units = [Quaternion::ONE, Quaternion::I, Quaternion::J, Quaternion::K];
    let variants = (0..8u32)
        .map(|bits| {
            let signs: [Sign; 3] = std::array::from_fn(|m| Sign::from_parity(bits >> m & 1));
            let image = |k: usize| if k == 0 { units[0] } else { signs[k - 1].apply(units[k]) };
            let map = |x: [f64; 4]| (0..4).fold(Quaternion::ZERO, |acc, k| acc + image(k).scale(x[k]));
            let multiplicative = (0..4).all(|a| (0..4).all(|b| image(a) * image(b) == map(table[a][b])));
            CorrespondenceVariant { signs, multiplicative }
        })
        .collect();

    PauliQuaternionReport { closed, rank, variants }
}
