use num_rational::BigRational;
use num_traits::Zero;

use crate::binform::{hessian, BinaryForm};
use crate::error::{AlgebraError, Result};
use crate::ratpoly::{rank, rref, MultiPoly};

/// Exponent pair `(i, j)` of the monomial `z^i w^j`.
pub type Mono = (u32, u32);

/// Monomials of degree `d` in column order: `z^d, z^(d-1) w, ..., w^d`.
pub fn monomials(d: u32) -> Vec<Mono> {
    (0..=d).map(|k| (d - k, k)).collect()
}

/// Row-reduced spanning set of the Jacobian ideal in one degree.
#[derive(Clone, Debug)]
struct Reducer {
    rows: Vec<Vec<BigRational>>,
    pivots: Vec<usize>,
    /// Non-pivot columns, i.e. the quotient basis of this degree.
    free: Vec<usize>,
}

impl Reducer {
    fn reduce(&self, mut v: Vec<BigRational>) -> Vec<BigRational> {
        for (row, &c) in self.rows.iter().zip(&self.pivots) {
            if v[c].is_zero() {
                continue;
            }
            let f = v[c].clone();
            for (x, y) in v.iter_mut().zip(row) {
                if !y.is_zero() {
                    *x -= &f * y;
                }
            }
        }
        self.free.iter().map(|&c| v[c].clone()).collect()
    }
}

/// The graded Milnor algebra `C[z,w] / (Q_z, Q_w)` of a square-free form.
#[derive(Clone, Debug)]
pub struct MilnorAlgebra {
    form: BinaryForm,
    hilbert: Vec<usize>,
    bases: Vec<Vec<Mono>>,
    reducers: Vec<Reducer>,
    offsets: Vec<usize>,
    /// `table[a][b]`: coordinates of `basis[a] · basis[b]` (global indices).
    table: Vec<Vec<Vec<(usize, BigRational)>>>,
}

/// Coefficient rows of `m · g` in degree `d` for every monomial `m` of the
/// complementary degree.
fn ideal_rows(gens: &[&BinaryForm], d: u32) -> Vec<Vec<BigRational>> {
    let mut rows = Vec::new();
    for g in gens {
        let gd = g.degree() as u32;
        if d < gd {
            continue;
        }
        for mj in 0..=(d - gd) as usize {
            let mut row = vec![BigRational::zero(); d as usize + 1];
            for (i, c) in g.coeffs().iter().enumerate() {
                // c z^i w^(gd-i) times z^(d-gd-mj) w^mj; columns are indexed by the w-exponent
                row[gd as usize - i + mj] = c.clone();
            }
            rows.push(row);
        }
    }
    rows
}

impl MilnorAlgebra {
    /// Builds the algebra degree by degree up to `ν = 2(n-2)`. Fails with
    /// [`AlgebraError::NonIsolated`] when the ideal does not fill degree `ν + 1`.
    pub fn build(q: &BinaryForm) -> Result<MilnorAlgebra> {
        let n = q.degree();
        if n < 3 {
            return Err(AlgebraError::domain("Milnor algebra needs degree >= 3"));
        }
        let nu = 2 * (n - 2);
        let (qz, qw) = (q.dz()?, q.dw()?);
        let gens = [&qz, &qw];

        let top = (nu + 1) as u32;
        let filled = rank(&ideal_rows(&gens, top));
        if filled != top as usize + 1 {
            return Err(AlgebraError::NonIsolated(format!(
                "the Jacobian ideal has codimension {} in degree {top}",
                top as usize + 1 - filled
            )));
        }

        let mut hilbert = Vec::with_capacity(nu + 1);
        let mut bases = Vec::with_capacity(nu + 1);
        let mut reducers = Vec::with_capacity(nu + 1);
        for d in 0..=nu as u32 {
            let mut rows = ideal_rows(&gens, d);
            let pivots = rref(&mut rows);
            let free: Vec<usize> = (0..=d as usize).filter(|c| !pivots.contains(c)).collect();
            let cols = monomials(d);
            hilbert.push(free.len());
            bases.push(free.iter().map(|&c| cols[c]).collect());
            reducers.push(Reducer { rows, pivots, free });
        }
        let mut offsets = vec![0];
        for h in &hilbert {
            offsets.push(offsets.last().unwrap() + h);
        }
        let mut alg = MilnorAlgebra {
            form: q.clone(),
            hilbert,
            bases,
            reducers,
            offsets,
            table: Vec::new(),
        };
        alg.table = alg.multiplication_table();
        Ok(alg)
    }

    fn multiplication_table(&self) -> Vec<Vec<Vec<(usize, BigRational)>>> {
        let all: Vec<(usize, Mono)> = self
            .bases
            .iter()
            .enumerate()
            .flat_map(|(d, b)| b.iter().map(move |&m| (d, m)))
            .collect();
        all.iter()
            .map(|&(da, (ai, aj))| {
                all.iter()
                    .map(|&(db, (bi, bj))| {
                        let d = da + db;
                        if d > self.nu() {
                            return Vec::new();
                        }
                        let coords = self.reduce_monomial((ai + bi, aj + bj));
                        coords
                            .into_iter()
                            .enumerate()
                            .filter(|(_, c)| !c.is_zero())
                            .map(|(k, c)| (self.offsets[d] + k, c))
                            .collect()
                    })
                    .collect()
            })
            .collect()
    }

    fn reduce_monomial(&self, (i, j): Mono) -> Vec<BigRational> {
        let d = (i + j) as usize;
        let mut v = vec![BigRational::zero(); d + 1];
        v[j as usize] = BigRational::from_integer(1.into());
        self.reducers[d].reduce(v)
    }

    pub fn form(&self) -> &BinaryForm {
        &self.form
    }

    pub fn degree(&self) -> usize {
        self.form.degree()
    }

    /// Socle degree `ν = 2(n-2)`.
    pub fn nu(&self) -> usize {
        2 * (self.degree() - 2)
    }

    pub fn hilbert(&self) -> &[usize] {
        &self.hilbert
    }

    pub fn dimension(&self) -> usize {
        self.hilbert.iter().sum()
    }

    /// Quotient-basis monomials of degree `d`.
    pub fn basis(&self, d: usize) -> &[Mono] {
        &self.bases[d]
    }

    /// Global index of the first basis element of degree `d`.
    pub fn offset(&self, d: usize) -> usize {
        self.offsets[d]
    }

    /// Coordinates (over the whole basis) of the class of `z^i w^j`.
    pub fn monomial_class(&self, m: Mono) -> Vec<BigRational> {
        let mut out = vec![BigRational::zero(); self.dimension()];
        let d = (m.0 + m.1) as usize;
        if d > self.nu() {
            return out;
        }
        for (k, c) in self.reduce_monomial(m).into_iter().enumerate() {
            out[self.offsets[d] + k] = c;
        }
        out
    }

    /// Coordinates of the class of a polynomial in `z, w` (other variables
    /// must not occur).
    pub fn normal_form(&self, p: &MultiPoly) -> Result<Vec<BigRational>> {
        let vars = p.vars();
        let zi = vars.iter().position(|v| v == "z");
        let wi = vars.iter().position(|v| v == "w");
        let mut out = vec![BigRational::zero(); self.dimension()];
        for (mono, c) in p.terms() {
            for (k, &e) in mono.0.iter().enumerate() {
                if e > 0 && Some(k) != zi && Some(k) != wi {
                    return Err(AlgebraError::domain(format!(
                        "normal_form: unexpected variable {}",
                        vars[k]
                    )));
                }
            }
            let i = zi.map_or(0, |k| mono.0[k]);
            let j = wi.map_or(0, |k| mono.0[k]);
            for (x, y) in out.iter_mut().zip(self.monomial_class((i, j))) {
                if !y.is_zero() {
                    *x += c * y;
                }
            }
        }
        Ok(out)
    }

    /// Coordinates of the class of a binary form in `z, w`.
    pub fn normal_form_of(&self, f: &BinaryForm) -> Vec<BigRational> {
        let n = f.degree() as u32;
        let mut out = vec![BigRational::zero(); self.dimension()];
        for (i, c) in f.coeffs().iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            for (x, y) in out
                .iter_mut()
                .zip(self.monomial_class((i as u32, n - i as u32)))
            {
                if !y.is_zero() {
                    *x += c * y;
                }
            }
        }
        out
    }

    /// Product of two elements given in coordinates, over any coefficient ring.
    pub fn multiply<R: crate::ratpoly::Ring>(&self, x: &[R], y: &[R]) -> Vec<R> {
        let mut out = vec![R::zero(); self.dimension()];
        for (a, xa) in x.iter().enumerate() {
            if xa.is_zero() {
                continue;
            }
            for (b, yb) in y.iter().enumerate() {
                if yb.is_zero() {
                    continue;
                }
                let prod = xa.clone() * yb;
                for (k, c) in &self.table[a][b] {
                    out[*k] = out[*k].clone() + prod.scale(c);
                }
            }
        }
        out
    }

    /// Top-degree coordinate of a coordinate vector.
    pub fn top<'a, R>(&self, x: &'a [R]) -> &'a R {
        &x[self.offsets[self.nu()]]
    }

    /// Gorenstein certificate: the top piece is one-dimensional and spanned by
    /// the Hessian's class, and the multiplication pairing
    /// `A_d × A_(ν-d) → A_ν` is nondegenerate for every `0 < d < ν`, so the
    /// annihilator of the maximal ideal is exactly the top piece.
    pub fn annihilator_check(&self) -> bool {
        let nu = self.nu();
        if self.hilbert[nu] != 1 {
            return false;
        }
        let Ok(h) = hessian(&self.form) else {
            return false;
        };
        let hc = self.normal_form_of(&h);
        let top = self.offsets[nu];
        if hc[top].is_zero() || hc.iter().enumerate().any(|(k, c)| k != top && !c.is_zero()) {
            return false;
        }
        (1..nu).all(|d| {
            let e = nu - d;
            if self.hilbert[d] != self.hilbert[e] {
                return false;
            }
            let pairing: Vec<Vec<BigRational>> = (0..self.hilbert[d])
                .map(|a| {
                    (0..self.hilbert[e])
                        .map(|b| {
                            let row = &self.table[self.offsets[d] + a][self.offsets[e] + b];
                            row.iter()
                                .find(|(k, _)| *k == top)
                                .map_or_else(BigRational::zero, |(_, c)| c.clone())
                        })
                        .collect()
                })
                .collect();
            rank(&pairing) == self.hilbert[d]
        })
    }
}

/// Dimension of the degree-`d` piece of `C[z,w]/(Q_z, Q_w)` computed directly
/// as `(d+1) - rank` of the spanning set `{m Q_z, m Q_w}`; used as an oracle
/// for the reduction data kept by [`MilnorAlgebra`].
pub fn hilbert_by_rank(q: &BinaryForm, d: u32) -> Result<usize> {
    let (qz, qw) = (q.dz()?, q.dw()?);
    let mut rows = Vec::new();
    if d + 1 >= q.degree() as u32 {
        let k = d + 1 - q.degree() as u32;
        for g in [&qz, &qw] {
            for j in 0..=k {
                let m = BinaryForm::monomial(
                    k as usize,
                    (k - j) as usize,
                    BigRational::from_integer(1.into()),
                );
                let p = g.mul(&m);
                rows.push(p.coeffs().iter().rev().cloned().collect::<Vec<_>>());
            }
        }
    }
    Ok(d as usize + 1 - rank(&rows))
}

/// Rank of the span of the classes of all monomials `p` with
/// `1 <= deg p < ν`, i.e. the dimension of the kernel of the canonical
/// projection onto the top piece. Equals `dim - 2` when that kernel is the sum
/// of the graded pieces strictly between degree 0 and the top.
pub fn projection_kernel_rank(alg: &MilnorAlgebra) -> usize {
    let rows: Vec<Vec<BigRational>> = (1..alg.nu() as u32)
        .flat_map(monomials)
        .map(|m| alg.monomial_class(m))
        .collect();
    rank(&rows)
}
