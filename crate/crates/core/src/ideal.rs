//! The quotient ring GF(2^m)[X]/(P) with P irreducible over GF(2), the
//! ideal matrices its multiplications correspond to, and the fold/unfold
//! reshaping between length n1*n2 vectors and n2 x n1 matrices.
//!
//! P has GF(2) coefficients, so reducing X^n2 agrees with an XOR of field
//! elements into the positions of P's set bits.

use crate::field::{builtin_modulus, is_irreducible, poly_degree, FieldContext, FieldElement};
use crate::mat::{ExtMatrix, ExtVector};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum IdealError {
    NoBuiltinModulus(usize),
    ReducibleModulus,
    ShapeMismatch,
}

impl std::fmt::Display for IdealError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            IdealError::NoBuiltinModulus(d) => write!(f, "no built-in degree-{d} modulus"),
            IdealError::ReducibleModulus => write!(f, "ring modulus must be irreducible"),
            IdealError::ShapeMismatch => write!(f, "operand shape mismatch"),
        }
    }
}

impl std::error::Error for IdealError {}

/// GF(2^m)[X]/(P), P irreducible of degree n2 over GF(2).
pub struct IdealRing<'a> {
    pub ctx: &'a FieldContext,
    n2: usize,
    /// P as a GF(2) bit-polynomial, degree bit included.
    p: u128,
}

impl<'a> IdealRing<'a> {
    pub fn new(ctx: &'a FieldContext, n2: usize) -> Result<IdealRing<'a>, IdealError> {
        let p = builtin_modulus(n2 as u32).ok_or(IdealError::NoBuiltinModulus(n2))?;
        Ok(IdealRing { ctx, n2, p })
    }

    pub fn with_modulus(ctx: &'a FieldContext, p: u128) -> Result<IdealRing<'a>, IdealError> {
        if !is_irreducible(p) {
            return Err(IdealError::ReducibleModulus);
        }
        let n2 = poly_degree(p).unwrap() as usize;
        Ok(IdealRing { ctx, n2, p })
    }

    pub fn degree(&self) -> usize {
        self.n2
    }

    pub fn modulus(&self) -> u128 {
        self.p
    }

    /// u(X) v(X) mod P, schoolbook convolution then XOR-reduction.
    pub fn ring_mul(&self, u: &[FieldElement], v: &[FieldElement]) -> ExtVector {
        assert_eq!(u.len(), self.n2);
        assert_eq!(v.len(), self.n2);
        let ctx = self.ctx;
        let mut prod = vec![FieldElement::ZERO; 2 * self.n2 - 1];
        for (i, &ui) in u.iter().enumerate() {
            if ui.is_zero() {
                continue;
            }
            for (j, &vj) in v.iter().enumerate() {
                prod[i + j] = ctx.add(prod[i + j], ctx.mul(ui, vj));
            }
        }
        // reduce: coefficient at degree d >= n2 folds into d - n2 + (bits of P)
        for d in (self.n2..prod.len()).rev() {
            let c = prod[d];
            if c.is_zero() {
                continue;
            }
            prod[d] = FieldElement::ZERO;
            for j in 0..self.n2 {
                if (self.p >> j) & 1 == 1 {
                    prod[d - self.n2 + j] = ctx.add(prod[d - self.n2 + j], c);
                }
            }
        }
        prod.truncate(self.n2);
        prod
    }

    /// The n2 x n2 matrix whose row i is X^i v(X) mod P.
    pub fn ideal_matrix(&self, v: &[FieldElement]) -> ExtMatrix {
        assert_eq!(v.len(), self.n2);
        let mut rows = Vec::with_capacity(self.n2);
        let mut cur = v.to_vec();
        rows.push(cur.clone());
        for _ in 1..self.n2 {
            // multiply by X: shift up, fold the overflow through P
            let top = cur[self.n2 - 1];
            for i in (1..self.n2).rev() {
                cur[i] = cur[i - 1];
            }
            cur[0] = FieldElement::ZERO;
            if !top.is_zero() {
                for j in 0..self.n2 {
                    if (self.p >> j) & 1 == 1 {
                        cur[j] = self.ctx.add(cur[j], top);
                    }
                }
            }
            rows.push(cur.clone());
        }
        ExtMatrix::from_rows(rows)
    }

    /// Column-wise ring product: column j of the result is
    /// ring_mul(v, column j of mat).
    pub fn vec_dot_matrix(&self, v: &[FieldElement], mat: &ExtMatrix) -> Result<ExtMatrix, IdealError> {
        if v.len() != self.n2 || mat.rows() != self.n2 {
            return Err(IdealError::ShapeMismatch);
        }
        let mut out = ExtMatrix::zero(self.n2, mat.cols());
        for c in 0..mat.cols() {
            let col = self.ring_mul(v, &mat.col(c));
            out.set_col(c, &col);
        }
        Ok(out)
    }
}

/// Reshapes a length n1*n2 vector into an n2 x n1 matrix, column j holding
/// the j-th n2-chunk.
pub fn fold(v: &[FieldElement], n2: usize) -> Result<ExtMatrix, IdealError> {
    if n2 == 0 || v.len() % n2 != 0 {
        return Err(IdealError::ShapeMismatch);
    }
    let n1 = v.len() / n2;
    Ok(ExtMatrix::from_fn(n2, n1, |r, c| v[c * n2 + r]))
}

/// Inverse of [`fold`].
pub fn unfold(m: &ExtMatrix) -> ExtVector {
    let mut v = Vec::with_capacity(m.rows() * m.cols());
    for c in 0..m.cols() {
        for r in 0..m.rows() {
            v.push(m[(r, c)]);
        }
    }
    v
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::f2linalg::{rank_weight, sample_element, sample_full_weight, sample_subspace};
    use rand::rngs::StdRng;
    use rand::{Rng, SeedableRng};

    fn unit(n: usize, i: usize) -> ExtVector {
        let mut v = vec![FieldElement::ZERO; n];
        v[i] = FieldElement::ONE;
        v
    }

    fn random_vec(rng: &mut StdRng, m: u32, n: usize) -> ExtVector {
        (0..n).map(|_| sample_element(rng, m)).collect()
    }

    #[test]
    fn ring_mul_unit_and_commutative() {
        let ctx = FieldContext::new(13).unwrap();
        let ring = IdealRing::new(&ctx, 10).unwrap();
        let mut rng = StdRng::seed_from_u64(70);
        for _ in 0..100 {
            let u = random_vec(&mut rng, 13, 10);
            let v = random_vec(&mut rng, 13, 10);
            assert_eq!(ring.ring_mul(&u, &unit(10, 0)), u);
            assert_eq!(ring.ring_mul(&u, &v), ring.ring_mul(&v, &u));
        }
    }

    #[test]
    fn ring_mul_wraparound_is_p_tail() {
        // X * X^(n2-1) = X^n2 = P - X^n2 (mod P), i.e. P's low bits
        let ctx = FieldContext::new(13).unwrap();
        let ring = IdealRing::new(&ctx, 10).unwrap();
        let got = ring.ring_mul(&unit(10, 1), &unit(10, 9));
        // long-division oracle over GF(2)[X]: X^10 mod P
        let red = crate::field::poly_rem(1u128 << 10, ring.modulus());
        for (j, c) in got.iter().enumerate() {
            let bit = (red >> j) & 1 == 1;
            assert_eq!(!c.is_zero(), bit);
            if bit {
                assert_eq!(*c, FieldElement::ONE);
            }
        }
    }

    #[test]
    fn ring_mul_associative() {
        let ctx = FieldContext::new(13).unwrap();
        let ring = IdealRing::new(&ctx, 8).unwrap();
        let mut rng = StdRng::seed_from_u64(71);
        for _ in 0..100 {
            let a = random_vec(&mut rng, 13, 8);
            let b = random_vec(&mut rng, 13, 8);
            let c = random_vec(&mut rng, 13, 8);
            assert_eq!(
                ring.ring_mul(&ring.ring_mul(&a, &b), &c),
                ring.ring_mul(&a, &ring.ring_mul(&b, &c))
            );
        }
    }

    #[test]
    fn ideal_matrix_contract() {
        let ctx = FieldContext::new(13).unwrap();
        let ring = IdealRing::new(&ctx, 9).unwrap();
        let mut rng = StdRng::seed_from_u64(72);
        assert_eq!(ring.ideal_matrix(&unit(9, 0)), ExtMatrix::identity(9));
        for _ in 0..50 {
            let u = random_vec(&mut rng, 13, 9);
            let v = random_vec(&mut rng, 13, 9);
            let im = ring.ideal_matrix(&v);
            assert_eq!(im.row(0), &v[..], "row 0 is v itself");
            // u . IM(v) = ring_mul(u, v)
            assert_eq!(im.vec_mul(&ctx, &u), ring.ring_mul(&u, &v));
        }
    }

    #[test]
    fn vec_dot_matrix_contract() {
        let ctx = FieldContext::new(13).unwrap();
        let ring = IdealRing::new(&ctx, 7).unwrap();
        let mut rng = StdRng::seed_from_u64(73);
        let m = ExtMatrix::from_fn(7, 4, |_, _| sample_element(&mut rng, 13));
        let e0 = unit(7, 0);
        assert_eq!(ring.vec_dot_matrix(&e0, &m).unwrap(), m);
        let v = random_vec(&mut rng, 13, 7);
        let out = ring.vec_dot_matrix(&v, &m).unwrap();
        for c in 0..4 {
            assert_eq!(out.col(c), ring.ring_mul(&v, &m.col(c)));
        }
        // bilinearity via the ideal-matrix expansion
        let w = random_vec(&mut rng, 13, 7);
        let vw: ExtVector = v.iter().zip(&w).map(|(&a, &b)| ctx.add(a, b)).collect();
        let lhs = ring.vec_dot_matrix(&vw, &m).unwrap();
        let rhs = ring
            .vec_dot_matrix(&v, &m)
            .unwrap()
            .add(&ring.vec_dot_matrix(&w, &m).unwrap());
        assert_eq!(lhs, rhs);
        // shape errors
        assert!(ring.vec_dot_matrix(&v[..6], &m).is_err());
    }

    #[test]
    fn fold_unfold_inverse() {
        let mut rng = StdRng::seed_from_u64(74);
        for _ in 0..100 {
            let n2 = 1 + rng.gen::<usize>() % 8;
            let n1 = 1 + rng.gen::<usize>() % 8;
            let v = random_vec(&mut rng, 13, n1 * n2);
            let m = fold(&v, n2).unwrap();
            assert_eq!(m.rows(), n2);
            assert_eq!(m.cols(), n1);
            assert_eq!(unfold(&m), v);
        }
        let z = vec![FieldElement::ZERO; 12];
        assert_eq!(fold(&z, 4).unwrap(), ExtMatrix::zero(4, 3));
        // n1 = 1: the single column is the vector itself
        let v = random_vec(&mut rng, 13, 6);
        let m = fold(&v, 6).unwrap();
        assert_eq!(m.col(0), v);
        assert!(fold(&v, 4).is_err());
    }

    #[test]
    fn fold_preserves_rank_weight() {
        let mut rng = StdRng::seed_from_u64(75);
        for _ in 0..50 {
            let v = random_vec(&mut rng, 13, 12);
            let m = fold(&v, 4).unwrap();
            assert_eq!(rank_weight(m.entries(), 13), rank_weight(&v, 13));
        }
    }

    #[test]
    fn product_support_containment() {
        // supp(v . M) lives in the product space supp(v) * supp(M):
        // dim <= rank_weight(v) * rank_weight(M)
        let ctx = FieldContext::new(19).unwrap();
        let ring = IdealRing::new(&ctx, 8).unwrap();
        let mut rng = StdRng::seed_from_u64(76);
        for _ in 0..50 {
            let sv = sample_subspace(&mut rng, 19, 2, false);
            let sm = sample_subspace(&mut rng, 19, 3, false);
            let v = sample_full_weight(&mut rng, &sv, 1, 8).unwrap();
            let m = sample_full_weight(&mut rng, &sm, 8, 3).unwrap();
            let out = ring.vec_dot_matrix(v.entries(), &m).unwrap();
            assert!(rank_weight(out.entries(), 19) <= 2 * 3);
        }
    }
}
