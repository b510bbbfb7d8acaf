//! Linearized (q-)polynomials over GF(2^m): sums p_i X^(2^i).
//!
//! These are GF(2)-linear maps of the field; under addition and
//! composition they form a non-commutative ring with left Euclidean
//! division, which is everything the Gabidulin decoder needs.

use crate::f2linalg::Subspace;
use crate::field::{FieldContext, FieldElement};

/// Coefficient list, coeffs[i] multiplying X^(2^i); trailing coefficient
/// nonzero unless the polynomial is zero (empty list).
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct QPoly {
    coeffs: Vec<FieldElement>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct DivisionByZero;

impl std::fmt::Display for DivisionByZero {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "left division by the zero q-polynomial")
    }
}

impl std::error::Error for DivisionByZero {}

impl QPoly {
    pub fn zero() -> QPoly {
        QPoly { coeffs: Vec::new() }
    }

    /// The identity map X.
    pub fn identity() -> QPoly {
        QPoly {
            coeffs: vec![FieldElement::ONE],
        }
    }

    /// c * X^(2^degree).
    pub fn monomial(c: FieldElement, degree: usize) -> QPoly {
        if c.is_zero() {
            return QPoly::zero();
        }
        let mut coeffs = vec![FieldElement::ZERO; degree + 1];
        coeffs[degree] = c;
        QPoly { coeffs }
    }

    pub fn from_coeffs(coeffs: Vec<FieldElement>) -> QPoly {
        let mut p = QPoly { coeffs };
        p.trim();
        p
    }

    fn trim(&mut self) {
        while self.coeffs.last().is_some_and(|c| c.is_zero()) {
            self.coeffs.pop();
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// q-degree; None for the zero polynomial (the -infinity sentinel).
    pub fn q_degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeff(&self, i: usize) -> FieldElement {
        self.coeffs.get(i).copied().unwrap_or(FieldElement::ZERO)
    }

    pub fn coeffs(&self) -> &[FieldElement] {
        &self.coeffs
    }

    pub fn is_monic(&self) -> bool {
        self.coeffs.last() == Some(&FieldElement::ONE)
    }

    pub fn add(&self, other: &QPoly) -> QPoly {
        let n = self.coeffs.len().max(other.coeffs.len());
        let coeffs = (0..n)
            .map(|i| FieldElement(self.coeff(i).0 ^ other.coeff(i).0))
            .collect();
        QPoly::from_coeffs(coeffs)
    }

    /// Evaluation: sum p_i a^(2^i).
    pub fn eval(&self, ctx: &FieldContext, a: FieldElement) -> FieldElement {
        let mut acc = FieldElement::ZERO;
        let mut pow = a;
        for (i, &c) in self.coeffs.iter().enumerate() {
            if i > 0 {
                pow = ctx.square(pow);
            }
            if !c.is_zero() {
                acc = ctx.add(acc, ctx.mul(c, pow));
            }
        }
        acc
    }

    /// Composition self(other(X)): coefficient k of the result is
    /// sum_{i+j=k} a_i * b_j^(2^i).
    pub fn compose(&self, ctx: &FieldContext, other: &QPoly) -> QPoly {
        if self.is_zero() || other.is_zero() {
            return QPoly::zero();
        }
        let da = self.coeffs.len() - 1;
        let db = other.coeffs.len() - 1;
        let mut out = vec![FieldElement::ZERO; da + db + 1];
        // b_j^(2^i) built by squaring the whole row once per i
        let mut frob: Vec<FieldElement> = other.coeffs.clone();
        for (i, &a) in self.coeffs.iter().enumerate() {
            if i > 0 {
                for b in frob.iter_mut() {
                    *b = ctx.square(*b);
                }
            }
            if a.is_zero() {
                continue;
            }
            for (j, &b) in frob.iter().enumerate() {
                if !b.is_zero() {
                    out[i + j] = ctx.add(out[i + j], ctx.mul(a, b));
                }
            }
        }
        QPoly::from_coeffs(out)
    }

    /// Left Euclidean division: self = divisor o quotient + remainder with
    /// q_degree(remainder) < q_degree(divisor).
    pub fn left_divide(
        &self,
        ctx: &FieldContext,
        divisor: &QPoly,
    ) -> Result<(QPoly, QPoly), DivisionByZero> {
        if divisor.is_zero() {
            return Err(DivisionByZero);
        }
        let dv = divisor.coeffs.len() - 1;
        let lead_inv = ctx
            .inv(divisor.coeffs[dv])
            .expect("trimmed leading coefficient is nonzero");
        let mut rem = self.clone();
        let mut quot = QPoly::zero();
        while let Some(dr) = rem.q_degree() {
            if dr < dv {
                break;
            }
            let t = dr - dv;
            // (divisor o cX^(2^t)) has leading coefficient v_dv * c^(2^dv),
            // so c = (r_dr / v_dv)^(2^(m - dv)).
            let c = ctx.frobenius(ctx.mul(rem.coeffs[dr], lead_inv), ctx.degree() - (dv as u32 % ctx.degree()));
            let term = QPoly::monomial(c, t);
            quot = quot.add(&term);
            rem = rem.add(&divisor.compose(ctx, &term));
            debug_assert!(rem.q_degree().is_none_or(|d| d < dr));
        }
        Ok((quot, rem))
    }

    /// The unique monic q-polynomial of q-degree dim(S) whose roots are
    /// exactly S, built iteratively over a basis: V <- V^2 + V(b) V.
    pub fn annihilator(ctx: &FieldContext, s: &Subspace) -> QPoly {
        let mut v = QPoly::identity();
        for &b in s.basis() {
            let c = v.eval(ctx, FieldElement(b));
            debug_assert!(!c.is_zero(), "basis element already annihilated");
            // compose (X^2 + cX) with v, i.e. v^2 + c v
            let step = QPoly::from_coeffs(vec![c, FieldElement::ONE]);
            v = step.compose(ctx, &v);
        }
        v
    }

    /// Annihilator of the support of a vector; its q-degree equals the
    /// rank weight.
    pub fn min_support_poly(ctx: &FieldContext, v: &[FieldElement]) -> QPoly {
        let sup = crate::f2linalg::support(v, ctx.degree());
        QPoly::annihilator(ctx, &sup)
    }
}
