use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::reduction::Reduction;
use super::{ChainComplex, ComplexError, SimplicialComplex};
use crate::exact_algebra::{smith_form, AbelianGroup, IntMatrix};

/// A cohomology class carried by a representative cocycle on the original
/// complex. `modulus = 0` means integer coefficients.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CohomClass {
    pub degree: usize,
    pub modulus: u64,
    pub cochain: Vec<i64>,
    pub complex_id: u64,
}

impl CohomClass {
    pub fn is_zero_cochain(&self) -> bool {
        self.cochain.iter().all(|&x| x == 0)
    }
}

/// Presentation data for `H^k` of the reduced cochain complex.
#[derive(Clone, Debug)]
struct Dense {
    /// `δ_k` on the reduced complex, used for the cocycle check.
    d: IntMatrix,
    v_inv: IntMatrix,
    /// Kernel coordinates kept: `(index into V^{-1} y, step e_i)`.
    kept: Vec<(usize, BigInt)>,
    u2: IntMatrix,
    gen_rows: Vec<usize>,
    orders: Vec<BigInt>,
    reps: Vec<Vec<BigInt>>,
}

fn big_mod(m: u64) -> BigInt {
    BigInt::from(m)
}

impl Dense {
    /// `d`: reduced `δ_k`, `e`: reduced `δ_{k-1}`.
    fn new(d: IntMatrix, e: &IntMatrix, m: u64) -> Dense {
        let n = d.cols();
        let f = smith_form(&d);
        let mm = big_mod(m);
        let mut kept = Vec::new();
        for i in 0..n {
            match f.diagonal.get(i) {
                Some(s) if m > 0 => {
                    let g = s.gcd(&mm);
                    if !g.is_one() {
                        kept.push((i, &mm / &g));
                    }
                }
                Some(_) => {}
                None => kept.push((i, BigInt::one())),
            }
        }
        // relations: images of δ_{k-1} in kernel coordinates, plus m·(kernel gens)
        let mut rel_cols: Vec<Vec<BigInt>> = Vec::new();
        for j in 0..e.cols() {
            let y = f.v_inv.mul_vec(&e.column(j));
            rel_cols.push(
                kept.iter()
                    .map(|(i, step)| {
                        debug_assert!(y[*i].is_multiple_of(step));
                        &y[*i] / step
                    })
                    .collect(),
            );
        }
        if m > 0 {
            for (t, (i, _)) in kept.iter().enumerate() {
                let order = match f.diagonal.get(*i) {
                    Some(s) => s.gcd(&mm),
                    None => mm.clone(),
                };
                let mut col = vec![BigInt::zero(); kept.len()];
                col[t] = order;
                rel_cols.push(col);
            }
        }
        let p = IntMatrix::from_fn(kept.len(), rel_cols.len(), |r, c| rel_cols[c][r].clone());
        let f2 = smith_form(&p);
        let mut gen_rows = Vec::new();
        let mut orders = Vec::new();
        for j in 0..kept.len() {
            match f2.diagonal.get(j) {
                Some(s) if s.is_one() => {}
                Some(s) => {
                    gen_rows.push(j);
                    orders.push(s.clone());
                }
                None => {
                    gen_rows.push(j);
                    orders.push(BigInt::zero());
                }
            }
        }
        let reps = gen_rows
            .iter()
            .map(|&j| {
                let mut rep = vec![BigInt::zero(); n];
                for (t, (i, step)) in kept.iter().enumerate() {
                    let coef = f2.u_inv.get(t, j) * step;
                    if coef.is_zero() {
                        continue;
                    }
                    for (r, x) in rep.iter_mut().enumerate() {
                        *x += &coef * f.v.get(r, *i);
                    }
                }
                if m > 0 {
                    for x in rep.iter_mut() {
                        *x = x.mod_floor(&mm);
                    }
                }
                rep
            })
            .collect();
        Dense {
            d,
            v_inv: f.v_inv,
            kept,
            u2: f2.u,
            gen_rows,
            orders,
            reps,
        }
    }

    fn group(&self) -> AbelianGroup {
        AbelianGroup {
            free_rank: self.orders.iter().filter(|o| o.is_zero()).count(),
            torsion: self
                .orders
                .iter()
                .filter(|o| !o.is_zero())
                .map(|o| o.magnitude().clone())
                .collect(),
        }
    }

    fn coordinates(&self, z: &[BigInt], m: u64, degree: usize) -> Result<Vec<BigInt>, ComplexError> {
        let mm = big_mod(m);
        let not_cocycle = ComplexError::NotACocycle { degree, modulus: m };
        let dz = self.d.mul_vec(z);
        if dz.iter().any(|x| if m == 0 { !x.is_zero() } else { !x.is_multiple_of(&mm) }) {
            return Err(not_cocycle);
        }
        let y = self.v_inv.mul_vec(z);
        let mut kc = Vec::with_capacity(self.kept.len());
        for (i, step) in &self.kept {
            if !y[*i].is_multiple_of(step) {
                return Err(not_cocycle);
            }
            kc.push(&y[*i] / step);
        }
        let c = self.u2.mul_vec(&kc);
        Ok(self
            .gen_rows
            .iter()
            .zip(&self.orders)
            .map(|(&j, o)| if o.is_zero() { c[j].clone() } else { c[j].mod_floor(o) })
            .collect())
    }
}

/// `H^k(C; Z/m)` with a basis of representative classes matching the
/// canonical generator order of `group`.
#[derive(Clone, Debug)]
pub struct CohomologyGroup {
    pub degree: usize,
    pub modulus: u64,
    pub group: AbelianGroup,
    pub basis: Vec<CohomClass>,
    dense: Dense,
    /// Set in degree 0 of augmented complexes: the constant class is the
    /// last generator and is not visible to the reduced complex.
    constant: bool,
}

impl CohomologyGroup {
    pub fn rank(&self) -> usize {
        self.basis.len()
    }

    pub fn is_trivial(&self) -> bool {
        self.basis.is_empty()
    }

    /// Generator orders as integers (`0` for free generators).
    pub fn orders(&self) -> Vec<BigUint> {
        self.group.generator_orders()
    }
}

/// Orientability and first homology of a closed pseudomanifold.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TopStructure {
    pub orientable: bool,
    pub h1_zero: bool,
    /// Mod-2 fundamental cycle: coefficient 1 on every top simplex.
    pub fundamental_class_mod2: Vec<u8>,
}

/// Cohomology of a fixed chain complex, computed after one integral
/// reduction pass shared by all degrees and coefficients.
#[derive(Clone, Debug)]
pub struct CohomologyEngine {
    complex: ChainComplex,
    reduction: Reduction,
}

impl CohomologyEngine {
    pub fn new(complex: ChainComplex) -> Result<Self, ComplexError> {
        let reduction = Reduction::new(&complex)?;
        Ok(CohomologyEngine { complex, reduction })
    }

    pub fn for_simplicial(k: &SimplicialComplex) -> Result<Self, ComplexError> {
        Self::new(ChainComplex::from_simplicial(k))
    }

    pub fn complex(&self) -> &ChainComplex {
        &self.complex
    }

    pub fn top_degree(&self) -> usize {
        self.complex.top_degree()
    }

    fn level(&self, k: usize) -> usize {
        k + self.reduction.offset()
    }

    fn check_degree(&self, k: usize) -> Result<(), ComplexError> {
        if k > self.top_degree() {
            return Err(ComplexError::DegreeOutOfRange {
                degree: k,
                top: self.top_degree(),
            });
        }
        Ok(())
    }

    /// Number of cells of degree `k` left after reduction.
    pub fn reduced_rank(&self, k: usize) -> usize {
        self.reduction.survivors(self.level(k)).len()
    }

    /// `δ_k` of the reduced complex (`reduced_rank(k+1) × reduced_rank(k)`).
    pub fn reduced_coboundary(&self, k: usize) -> IntMatrix {
        self.reduction.residual_coboundary(self.level(k))
    }

    /// Moves a cochain on the original complex to the reduced complex.
    pub fn restrict(&self, k: usize, cochain: &[i64], modulus: u64) -> Result<Vec<i64>, ComplexError> {
        self.check_cochain(k, cochain)?;
        self.reduction.restrict(self.level(k), cochain, modulus)
    }

    /// Moves a reduced cochain back to the original complex.
    pub fn lift(&self, k: usize, reduced: &[i64], modulus: u64) -> Result<Vec<i64>, ComplexError> {
        if reduced.len() != self.reduced_rank(k) {
            return Err(ComplexError::CochainLength {
                expected: self.reduced_rank(k),
                found: reduced.len(),
            });
        }
        self.reduction.lift(self.level(k), reduced, modulus)
    }

    fn check_cochain(&self, k: usize, cochain: &[i64]) -> Result<(), ComplexError> {
        self.check_degree(k)?;
        if cochain.len() != self.complex.rank(k) {
            return Err(ComplexError::CochainLength {
                expected: self.complex.rank(k),
                found: cochain.len(),
            });
        }
        Ok(())
    }

    pub fn coboundary(&self, k: usize, cochain: &[i64], modulus: u64) -> Result<Vec<i64>, ComplexError> {
        self.check_cochain(k, cochain)?;
        self.complex.coboundary(k, cochain, modulus)
    }

    pub fn is_cocycle(&self, k: usize, cochain: &[i64], modulus: u64) -> Result<bool, ComplexError> {
        Ok(self.coboundary(k, cochain, modulus)?.iter().all(|&x| x == 0))
    }

    /// `H^k(C; Z/m)`, `m = 0` for integer coefficients.
    pub fn cohomology(&self, k: usize, m: u64) -> Result<CohomologyGroup, ComplexError> {
        self.check_degree(k)?;
        if m == 1 {
            return Err(ComplexError::Shape("coefficient modulus 1 is not supported".into()));
        }
        let level = self.level(k);
        let d = self.reduction.residual_coboundary(level);
        let e = if level == 0 {
            IntMatrix::zeros(self.reduction.survivors(0).len(), 0)
        } else {
            self.reduction.residual_coboundary(level - 1)
        };
        let dense = Dense::new(d, &e, m);
        let constant = k == 0 && self.complex.is_augmented();
        let mut basis = Vec::with_capacity(dense.reps.len() + usize::from(constant));
        for rep in &dense.reps {
            let small: Vec<i64> = rep
                .iter()
                .map(|x| x.to_i64().ok_or(ComplexError::CoefficientOverflow))
                .collect::<Result<_, _>>()?;
            basis.push(self.make_class(k, m, self.reduction.lift(level, &small, m)?));
        }
        let mut group = dense.group();
        if constant {
            basis.push(self.make_class(k, m, vec![1; self.complex.rank(0)]));
            group = group.direct_sum(&AbelianGroup::cyclic(m));
        }
        Ok(CohomologyGroup {
            degree: k,
            modulus: m,
            group,
            basis,
            dense,
            constant,
        })
    }

    fn make_class(&self, k: usize, m: u64, cochain: Vec<i64>) -> CohomClass {
        CohomClass {
            degree: k,
            modulus: m,
            cochain,
            complex_id: self.complex.id(),
        }
    }

    /// Wraps a cochain as a class after checking the cocycle condition.
    pub fn class(&self, k: usize, m: u64, cochain: Vec<i64>) -> Result<CohomClass, ComplexError> {
        let cochain: Vec<i64> = if m == 0 {
            cochain
        } else {
            cochain.into_iter().map(|x| x.rem_euclid(m as i64)).collect()
        };
        if !self.is_cocycle(k, &cochain, m)? {
            return Err(ComplexError::NotACocycle { degree: k, modulus: m });
        }
        Ok(self.make_class(k, m, cochain))
    }

    /// Coordinates of a cocycle in the basis of `g`.
    pub fn coordinates(&self, g: &CohomologyGroup, cochain: &[i64]) -> Result<Vec<BigInt>, ComplexError> {
        let k = g.degree;
        let m = g.modulus;
        if !self.is_cocycle(k, cochain, m)? {
            return Err(ComplexError::NotACocycle { degree: k, modulus: m });
        }
        let mut z: Vec<i64> = cochain.to_vec();
        let mut constant_coord = None;
        if g.constant {
            let v0 = self.reduction.base_vertex().map_or(0, |v| v as usize);
            let c0 = z.get(v0).copied().unwrap_or(0);
            for x in z.iter_mut() {
                *x -= c0;
            }
            constant_coord = Some(if m == 0 { BigInt::from(c0) } else { BigInt::from(c0).mod_floor(&big_mod(m)) });
        }
        let reduced = self.reduction.restrict(self.level(k), &z, m)?;
        let reduced: Vec<BigInt> = reduced.into_iter().map(BigInt::from).collect();
        let mut coords = g.dense.coordinates(&reduced, m, k)?;
        coords.extend(constant_coord);
        Ok(coords)
    }

    pub fn class_coordinates(&self, g: &CohomologyGroup, c: &CohomClass) -> Result<Vec<BigInt>, ComplexError> {
        if c.complex_id != self.complex.id() {
            return Err(ComplexError::ForeignClass);
        }
        if c.degree != g.degree || c.modulus != g.modulus {
            return Err(ComplexError::Shape(format!(
                "class in H^{}(;Z/{}) measured against H^{}(;Z/{})",
                c.degree, c.modulus, g.degree, g.modulus
            )));
        }
        self.coordinates(g, &c.cochain)
    }

    /// `Σ coords_j · basis_j`.
    pub fn combine(&self, g: &CohomologyGroup, coords: &[BigInt]) -> Result<CohomClass, ComplexError> {
        assert_eq!(coords.len(), g.basis.len(), "coordinate count mismatch");
        let mut acc = vec![0i128; self.complex.rank(g.degree)];
        for (c, b) in coords.iter().zip(&g.basis) {
            let c = c.to_i64().ok_or(ComplexError::CoefficientOverflow)? as i128;
            if c == 0 {
                continue;
            }
            for (a, &x) in acc.iter_mut().zip(&b.cochain) {
                *a += c * x as i128;
            }
        }
        let cochain = acc
            .into_iter()
            .map(|x| super::chain::reduce_i128(x, g.modulus))
            .collect::<Result<Vec<_>, _>>()?;
        Ok(self.make_class(g.degree, g.modulus, cochain))
    }

    /// Integral homology `H_k(C; Z)`.
    pub fn homology(&self, k: usize) -> Result<AbelianGroup, ComplexError> {
        self.check_degree(k)?;
        let level = self.level(k);
        let n = self.reduction.survivors(level).len();
        let rank_out = smith_form(self.reduction.residual(level)).rank();
        let mut orders: Vec<BigUint> = Vec::new();
        let mut rank_in = 0;
        if level + 1 < self.reduction.levels() {
            let f = smith_form(self.reduction.residual(level + 1));
            rank_in = f.rank();
            orders.extend(f.diagonal.iter().filter(|s| !s.is_one()).map(|s| s.abs().to_biguint().expect("positive")));
        }
        let free = n - rank_out - rank_in;
        orders.extend(std::iter::repeat_n(BigUint::zero(), free));
        let mut h = AbelianGroup::from_cyclic_orders(orders);
        if k == 0 && self.complex.is_augmented() {
            h = h.direct_sum(&AbelianGroup::free(1));
        }
        Ok(h)
    }

    /// Betti numbers `rank H^k(C; Z)` for `k = 0..=n`.
    pub fn betti_numbers(&self) -> Result<Vec<usize>, ComplexError> {
        (0..=self.top_degree()).map(|k| Ok(self.homology(k)?.free_rank)).collect()
    }
}

impl SimplicialComplex {
    /// Orientability and `H_1 = 0` for a closed pseudomanifold.
    pub fn top_structure(&self) -> Result<TopStructure, ComplexError> {
        self.check_pseudomanifold()?;
        let engine = CohomologyEngine::for_simplicial(self)?;
        Self::top_structure_with(self, &engine)
    }

    /// Same as [`SimplicialComplex::top_structure`] reusing an engine.
    pub fn top_structure_with(&self, engine: &CohomologyEngine) -> Result<TopStructure, ComplexError> {
        self.check_pseudomanifold()?;
        let n = self.dimension();
        let orientable = engine.homology(n)? == AbelianGroup::free(1);
        let h1_zero = n < 1 || engine.homology(1)?.is_trivial();
        Ok(TopStructure {
            orientable,
            h1_zero,
            fundamental_class_mod2: vec![1; self.count(n)],
        })
    }
}
