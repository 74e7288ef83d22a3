//! Cup and cup-`i` products, Steenrod squares, higher Bocksteins, the
//! connecting map `d_2` of `0 → Z/2 → Z/8 → Z/4 → 0`, and Wu and
//! Stiefel–Whitney classes.

mod cup;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{ToPrimitive, Zero};
use thiserror::Error;

use crate::complex_core::{ChainComplex, CohomClass, CohomologyEngine, CohomologyGroup, ComplexError, SimplicialComplex};
use crate::exact_algebra::{kernel_mod, solve_mod, AlgebraError, IntMatrix};

pub(crate) use cup::cup_i_patterns;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum OpsError {
    #[error("{0} needs a simplicial complex, not a synthetic chain complex")]
    NeedsSimplicial(&'static str),
    #[error("cup-i index {0} is negative")]
    NegativeIndex(i64),
    #[error("expected coefficients mod {expected}, got mod {found}")]
    WrongModulus { expected: u64, found: u64 },
    #[error("degree {0} is out of range for this complex")]
    Degree(usize),
    #[error("pairing matrix in degree {0} is singular; the complex is not a closed manifold")]
    SingularPairing(usize),
    #[error(transparent)]
    Complex(#[from] ComplexError),
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
}

/// A complex together with its cohomology engine. Synthetic chain
/// complexes support only coefficient-level operations.
#[derive(Clone, Debug)]
pub struct Space {
    simplicial: Option<SimplicialComplex>,
    engine: CohomologyEngine,
}

/// Value of a higher Bockstein.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Bockstein {
    /// The class is not the reduction of a mod-`2^r` class.
    Undefined,
    /// A representative of `β_r(a)`; well defined modulo the images of the
    /// lower Bocksteins.
    Value(CohomClass),
}

/// Operation kinds that have a matrix in chosen cohomology bases.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Op {
    Sq(usize),
    D2,
    Sq2D2,
    Reduce4To2,
}

impl Op {
    pub fn name(&self) -> String {
        match self {
            Op::Sq(k) => format!("Sq{k}"),
            Op::D2 => "d2".into(),
            Op::Sq2D2 => "Sq2_d2".into(),
            Op::Reduce4To2 => "q_red4to2".into(),
        }
    }

    /// `(degree shift, source modulus, target modulus)`.
    pub fn shape(&self) -> (usize, u64, u64) {
        match self {
            Op::Sq(k) => (*k, 2, 2),
            Op::D2 => (1, 4, 2),
            Op::Sq2D2 => (3, 4, 2),
            Op::Reduce4To2 => (0, 4, 2),
        }
    }
}

/// Matrix of an operation in the canonical bases of source and target
/// (columns are source generators).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OperationMatrix {
    pub name: String,
    pub source: (usize, u64),
    pub target: (usize, u64),
    pub matrix: IntMatrix,
}

impl OperationMatrix {
    pub fn is_zero(&self) -> bool {
        self.matrix.is_zero()
    }
}

/// Wu classes `v_1, v_2` and Stiefel–Whitney classes `w_1, w_2`.
#[derive(Clone, Debug)]
pub struct WuClasses {
    pub v1: CohomClass,
    pub v2: CohomClass,
    pub w1: CohomClass,
    pub w2: CohomClass,
    pub w1_zero: bool,
    pub w2_zero: bool,
}

impl WuClasses {
    pub fn is_spin(&self) -> bool {
        self.w1_zero && self.w2_zero
    }
}

fn big_to_i64(x: &BigInt) -> i64 {
    x.to_i64().expect("coordinate fits in i64")
}

impl Space {
    pub fn simplicial(k: SimplicialComplex) -> Result<Self, OpsError> {
        let engine = CohomologyEngine::for_simplicial(&k)?;
        Ok(Space {
            simplicial: Some(k),
            engine,
        })
    }

    pub fn synthetic(c: ChainComplex) -> Result<Self, OpsError> {
        Ok(Space {
            simplicial: None,
            engine: CohomologyEngine::new(c)?,
        })
    }

    pub fn engine(&self) -> &CohomologyEngine {
        &self.engine
    }

    pub fn complex(&self) -> Option<&SimplicialComplex> {
        self.simplicial.as_ref()
    }

    pub fn dimension(&self) -> usize {
        self.engine.top_degree()
    }

    fn require_simplicial(&self, what: &'static str) -> Result<&SimplicialComplex, OpsError> {
        self.simplicial.as_ref().ok_or(OpsError::NeedsSimplicial(what))
    }

    fn own(&self, a: &CohomClass) -> Result<(), OpsError> {
        if a.complex_id != self.engine.complex().id() {
            return Err(ComplexError::ForeignClass.into());
        }
        Ok(())
    }

    fn expect_modulus(a: &CohomClass, m: u64) -> Result<(), OpsError> {
        if a.modulus != m {
            return Err(OpsError::WrongModulus {
                expected: m,
                found: a.modulus,
            });
        }
        Ok(())
    }

    pub fn cohomology(&self, k: usize, m: u64) -> Result<CohomologyGroup, OpsError> {
        Ok(self.engine.cohomology(k, m)?)
    }

    /// The zero class of `H^k(;Z/m)`.
    pub fn zero_class(&self, k: usize, m: u64) -> Result<CohomClass, OpsError> {
        Ok(self.engine.class(k, m, vec![0; self.engine.complex().rank(k)])?)
    }

    /// The unit class in `H^0`.
    pub fn unit(&self, m: u64) -> Result<CohomClass, OpsError> {
        Ok(self.engine.class(0, m, vec![1; self.engine.complex().rank(0)])?)
    }

    fn zero_or_class(&self, k: usize, m: u64, cochain: Vec<i64>) -> Result<CohomClass, OpsError> {
        if k > self.dimension() {
            return Ok(CohomClass {
                degree: k,
                modulus: m,
                cochain: Vec::new(),
                complex_id: self.engine.complex().id(),
            });
        }
        Ok(self.engine.class(k, m, cochain)?)
    }

    /// Alexander–Whitney cup product `a(front) · b(back)`.
    pub fn cup(&self, a: &CohomClass, b: &CohomClass) -> Result<CohomClass, OpsError> {
        let k = self.require_simplicial("cup product")?;
        self.own(a)?;
        self.own(b)?;
        Self::expect_modulus(b, a.modulus)?;
        let n = a.degree + b.degree;
        if n > self.dimension() {
            return self.zero_or_class(n, a.modulus, Vec::new());
        }
        let pats = cup_i_patterns(a.degree, b.degree, 0);
        let c = cup::apply_patterns(k, &a.cochain, a.degree, &b.cochain, b.degree, &pats, n, a.modulus);
        self.zero_or_class(n, a.modulus, c)
    }

    /// Cochain-level `a ∪_i b` mod 2 on cochains of degrees `p` and `q`;
    /// empty when `p + q - i` exceeds the dimension.
    pub fn cup_i_cochain(&self, a: &[i64], p: usize, b: &[i64], q: usize, i: i64) -> Result<Vec<i64>, OpsError> {
        let k = self.require_simplicial("cup-i product")?;
        if i < 0 {
            return Err(OpsError::NegativeIndex(i));
        }
        let i = i as usize;
        if i > p + q {
            return Ok(Vec::new());
        }
        let n = p + q - i;
        if n > self.dimension() {
            return Ok(Vec::new());
        }
        let pats = cup_i_patterns(p, q, i);
        Ok(cup::apply_patterns(k, a, p, b, q, &pats, n, 2))
    }

    /// `a ∪_i b` on mod-2 classes (as a cochain; not closed in general).
    pub fn cup_i(&self, a: &CohomClass, b: &CohomClass, i: i64) -> Result<Vec<i64>, OpsError> {
        self.own(a)?;
        self.own(b)?;
        Self::expect_modulus(a, 2)?;
        Self::expect_modulus(b, 2)?;
        self.cup_i_cochain(&a.cochain, a.degree, &b.cochain, b.degree, i)
    }

    /// `Sq^k a = a ∪_{deg a − k} a`.
    pub fn sq(&self, k: usize, a: &CohomClass) -> Result<CohomClass, OpsError> {
        self.require_simplicial("Steenrod square")?;
        self.own(a)?;
        Self::expect_modulus(a, 2)?;
        let p = a.degree;
        let target = p + k;
        if k > p || target > self.dimension() {
            let len = if target > self.dimension() { 0 } else { self.engine.complex().rank(target) };
            return self.zero_or_class(target, 2, vec![0; len]);
        }
        let c = self.cup_i_cochain(&a.cochain, p, &a.cochain, p, (p - k) as i64)?;
        self.zero_or_class(target, 2, c)
    }

    /// `Sq^3 = Sq^1 Sq^2`.
    pub fn sq3(&self, a: &CohomClass) -> Result<CohomClass, OpsError> {
        let s2 = self.sq(2, a)?;
        if s2.degree > self.dimension() {
            return self.zero_or_class(a.degree + 3, 2, Vec::new());
        }
        self.sq(1, &s2)
    }

    /// Reduces a class mod `m` to mod `d` for `d | m` (`m = 0` allowed).
    pub fn reduce(&self, a: &CohomClass, d: u64) -> Result<CohomClass, OpsError> {
        self.own(a)?;
        if d < 2 || (a.modulus != 0 && !a.modulus.is_multiple_of(d)) {
            return Err(OpsError::WrongModulus {
                expected: d,
                found: a.modulus,
            });
        }
        let c = a.cochain.iter().map(|&x| x.rem_euclid(d as i64)).collect();
        self.zero_or_class(a.degree, d, c)
    }

    /// Restricts `a` to the reduced complex and returns its integral
    /// lift with entries in `[0, m)` together with `δ'` of that lift.
    fn reduced_lift(&self, a: &CohomClass) -> Result<(IntMatrix, Vec<BigInt>, Vec<BigInt>), OpsError> {
        let k = a.degree;
        let reduced = self.engine.restrict(k, &a.cochain, a.modulus)?;
        let lift: Vec<BigInt> = reduced.into_iter().map(BigInt::from).collect();
        let d = self.engine.reduced_coboundary(k);
        let dl = d.mul_vec(&lift);
        Ok((d, lift, dl))
    }

    /// Moves a reduced cochain of degree `k` with integer entries back to
    /// the original complex as a class mod `m`.
    fn class_from_reduced(&self, k: usize, m: u64, reduced: &[BigInt]) -> Result<CohomClass, OpsError> {
        let mm = BigInt::from(m);
        let small: Vec<i64> = reduced.iter().map(|x| big_to_i64(&x.mod_floor(&mm))).collect();
        let full = self.engine.lift(k, &small, m)?;
        self.zero_or_class(k, m, full)
    }

    /// Higher Bockstein `β_r` on a mod-2 class: find `ã ≡ a (mod 2)` with
    /// `δã ≡ 0 (mod 2^r)`, then return `δã / 2^r (mod 2)`.
    pub fn bockstein(&self, r: u32, a: &CohomClass) -> Result<Bockstein, OpsError> {
        self.own(a)?;
        Self::expect_modulus(a, 2)?;
        assert!((1..=30).contains(&r), "Bockstein index out of range");
        let k = a.degree;
        if k >= self.dimension() {
            return Ok(Bockstein::Value(self.zero_or_class(k + 1, 2, Vec::new())?));
        }
        let (d, lift, dl) = self.reduced_lift(a)?;
        let mut tilde = lift;
        if r > 1 {
            // δ'(a + 2c) ≡ 0 mod 2^r  ⟺  δ'c ≡ −δ'a/2 mod 2^{r−1}
            let rhs: Vec<BigInt> = dl.iter().map(|x: &BigInt| -(x / 2u32)).collect();
            match solve_mod(&d, &rhs, 1u64 << (r - 1))? {
                None => return Ok(Bockstein::Undefined),
                Some(c) => {
                    for (t, ci) in tilde.iter_mut().zip(c) {
                        *t += ci * 2;
                    }
                }
            }
        }
        let dt = d.mul_vec(&tilde);
        let pow = BigInt::from(1u64 << r);
        debug_assert!(dt.iter().all(|x| x.is_multiple_of(&pow)));
        let value: Vec<BigInt> = dt.iter().map(|x| x / &pow).collect();
        Ok(Bockstein::Value(self.class_from_reduced(k + 1, 2, &value)?))
    }

    /// Whether a mod-2 class is the reduction of a mod-`2^s` class.
    pub fn lifts_to_power_of_two(&self, a: &CohomClass, s: u32) -> Result<bool, OpsError> {
        self.own(a)?;
        Self::expect_modulus(a, 2)?;
        if s <= 1 || a.degree >= self.dimension() {
            return Ok(true);
        }
        let (d, _, dl) = self.reduced_lift(a)?;
        let rhs: Vec<BigInt> = dl.iter().map(|x: &BigInt| -(x / 2u32)).collect();
        Ok(solve_mod(&d, &rhs, 1u64 << (s - 1))?.is_some())
    }

    /// `β_r(a)` is defined and nonzero on the `r`-th page: `a` lifts mod
    /// `2^r` but not mod `2^{r+1}`. `None` when undefined.
    pub fn bockstein_nonzero(&self, r: u32, a: &CohomClass) -> Result<Option<bool>, OpsError> {
        if !self.lifts_to_power_of_two(a, r)? {
            return Ok(None);
        }
        Ok(Some(!self.lifts_to_power_of_two(a, r + 1)?))
    }

    /// Connecting map of `0 → Z/2 → Z/8 → Z/4 → 0`: lift the mod-4
    /// cocycle to a mod-8 cochain and return `δã / 4 (mod 2)`.
    pub fn d2(&self, a: &CohomClass) -> Result<CohomClass, OpsError> {
        self.own(a)?;
        Self::expect_modulus(a, 4)?;
        let k = a.degree;
        if k >= self.dimension() {
            return self.zero_or_class(k + 1, 2, Vec::new());
        }
        let (_, _, dl) = self.reduced_lift(a)?;
        let four = BigInt::from(4);
        debug_assert!(dl.iter().all(|x| x.is_multiple_of(&four)));
        let value: Vec<BigInt> = dl.iter().map(|x| x / &four).collect();
        self.class_from_reduced(k + 1, 2, &value)
    }

    /// `Sq^2 ∘ d_2`.
    pub fn sq2_d2(&self, a: &CohomClass) -> Result<CohomClass, OpsError> {
        self.require_simplicial("Sq^2 after d_2")?;
        let d = self.d2(a)?;
        if d.degree > self.dimension() {
            return self.zero_or_class(a.degree + 3, 2, Vec::new());
        }
        self.sq(2, &d)
    }

    /// Applies an operation to a class.
    pub fn apply(&self, op: Op, a: &CohomClass) -> Result<CohomClass, OpsError> {
        match op {
            Op::Sq(k) => self.sq(k, a),
            Op::D2 => self.d2(a),
            Op::Sq2D2 => self.sq2_d2(a),
            Op::Reduce4To2 => {
                Self::expect_modulus(a, 4)?;
                self.reduce(a, 2)
            }
        }
    }

    /// Coordinates of a class in `H^k(;Z/m)`; empty beyond the top degree.
    pub fn coordinates(&self, g: &CohomologyGroup, a: &CohomClass) -> Result<Vec<BigInt>, OpsError> {
        if a.degree > self.dimension() {
            return Ok(Vec::new());
        }
        Ok(self.engine.class_coordinates(g, a)?)
    }

    /// Matrix of `op` from `H^k(;Z/m_s)` to `H^{k+shift}(;Z/m_t)`.
    pub fn operation_matrix(&self, op: Op, k: usize) -> Result<OperationMatrix, OpsError> {
        let (shift, ms, mt) = op.shape();
        let t = k + shift;
        let source = self.cohomology(k, ms)?;
        let rows = if t > self.dimension() { 0 } else { self.cohomology(t, mt)?.rank() };
        let mut matrix = IntMatrix::zeros(rows, source.rank());
        if rows > 0 {
            let target = self.cohomology(t, mt)?;
            for (j, b) in source.basis.iter().enumerate() {
                let img = self.apply(op, b)?;
                for (i, c) in self.coordinates(&target, &img)?.into_iter().enumerate() {
                    matrix.set(i, j, c);
                }
            }
        }
        Ok(OperationMatrix {
            name: op.name(),
            source: (k, ms),
            target: (t, mt),
            matrix,
        })
    }

    /// `⟨x, [M]⟩` for a top-degree mod-2 class: the sum over all facets.
    pub fn evaluate_top(&self, x: &CohomClass) -> Result<u8, OpsError> {
        let k = self.require_simplicial("evaluation on the fundamental class")?;
        Self::expect_modulus(x, 2)?;
        if x.degree != k.dimension() {
            return Ok(0);
        }
        Ok((x.cochain.iter().map(|&v| v.rem_euclid(2)).sum::<i64>() % 2) as u8)
    }

    /// Wu class `v_k`: the solution of `⟨v_k ∪ x, [M]⟩ = ⟨Sq^k x, [M]⟩`
    /// for all `x ∈ H^{n−k}(;Z/2)`.
    pub fn wu_class(&self, k: usize) -> Result<CohomClass, OpsError> {
        let cx = self.require_simplicial("Wu class")?;
        let n = cx.dimension();
        if k > n {
            return Err(OpsError::Degree(k));
        }
        let hk = self.cohomology(k, 2)?;
        let hnk = self.cohomology(n - k, 2)?;
        if hnk.is_trivial() || hk.is_trivial() {
            if hnk.rank() != hk.rank() {
                return Err(OpsError::SingularPairing(k));
            }
            return self.zero_class(k, 2);
        }
        let mut pairing = IntMatrix::zeros(hnk.rank(), hk.rank());
        let mut rhs = Vec::with_capacity(hnk.rank());
        for (j, x) in hnk.basis.iter().enumerate() {
            for (i, a) in hk.basis.iter().enumerate() {
                let v = self.evaluate_top(&self.cup(a, x)?)?;
                pairing.set(j, i, BigInt::from(v));
            }
            rhs.push(BigInt::from(self.evaluate_top(&self.sq(k, x)?)?));
        }
        if hnk.rank() != hk.rank() {
            return Err(OpsError::SingularPairing(k));
        }
        if !kernel_mod(&pairing, 2)?.is_empty() {
            return Err(OpsError::SingularPairing(k));
        }
        let alpha = solve_mod(&pairing, &rhs, 2)?.ok_or(OpsError::SingularPairing(k))?;
        Ok(self.engine.combine(&hk, &alpha)?)
    }

    /// Wu classes `v_1, v_2`, `w_1 = v_1`, `w_2 = v_2 + Sq^1 v_1`.
    pub fn wu_and_sw(&self) -> Result<WuClasses, OpsError> {
        let cx = self.require_simplicial("Stiefel–Whitney classes")?;
        if cx.dimension() < 2 {
            return Err(OpsError::Degree(2));
        }
        let v1 = self.wu_class(1)?;
        let v2 = self.wu_class(2)?;
        let w1 = v1.clone();
        let sq1v1 = self.sq(1, &v1)?;
        let w2 = self.engine.class(
            2,
            2,
            v2.cochain.iter().zip(&sq1v1.cochain).map(|(a, b)| (a + b) % 2).collect(),
        )?;
        let h1 = self.cohomology(1, 2)?;
        let h2 = self.cohomology(2, 2)?;
        let w1_zero = self.coordinates(&h1, &w1)?.iter().all(Zero::is_zero);
        let w2_zero = self.coordinates(&h2, &w2)?.iter().all(Zero::is_zero);
        Ok(WuClasses {
            v1,
            v2,
            w1,
            w2,
            w1_zero,
            w2_zero,
        })
    }
}

#[cfg(test)]
mod tests;
