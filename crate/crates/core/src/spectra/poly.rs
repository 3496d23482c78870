//! Exact integer polynomials: characteristic polynomials of adjacency
//! matrices, square-free decomposition, and Sturm-chain root counting at
//! rational thresholds. Chains are kept as primitive integer polynomials,
//! rescaled by positive rationals only so that sign sequences are preserved.

use crate::graph::Graph;
use crate::{Int, Rat};

use num_integer::Integer;
use num_traits::{One, Signed, Zero};

/// Coefficients ascending: `coeffs[i]` multiplies `x^i`. Always trimmed.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IntPoly {
    pub coeffs: Vec<Int>,
}

impl IntPoly {
    pub fn new(mut coeffs: Vec<Int>) -> IntPoly {
        while coeffs.len() > 1 && coeffs.last().map_or(false, Zero::is_zero) {
            coeffs.pop();
        }
        if coeffs.is_empty() {
            coeffs.push(Int::zero());
        }
        IntPoly { coeffs }
    }

    pub fn zero() -> IntPoly {
        IntPoly::new(vec![Int::zero()])
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0].is_zero()
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn leading(&self) -> &Int {
        self.coeffs.last().unwrap()
    }

    /// Coefficients descending from x^degree, handy for display and tests.
    pub fn coeffs_desc(&self) -> Vec<Int> {
        self.coeffs.iter().rev().cloned().collect()
    }

    pub fn eval_rat(&self, x: &Rat) -> Rat {
        let mut acc = Rat::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + Rat::from_integer(c.clone());
        }
        acc
    }

    pub fn eval_int(&self, x: &Int) -> Int {
        let mut acc = Int::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    pub fn derivative(&self) -> IntPoly {
        if self.degree() == 0 {
            return IntPoly::zero();
        }
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(i, c)| c * Int::from(i))
            .collect();
        IntPoly::new(coeffs)
    }

    /// Divide out the content; the sign of the leading coefficient is kept.
    pub fn primitive(&self) -> IntPoly {
        if self.is_zero() {
            return self.clone();
        }
        let mut content = Int::zero();
        for c in &self.coeffs {
            content = content.gcd(c);
        }
        IntPoly::new(self.coeffs.iter().map(|c| c / &content).collect())
    }

    /// Exact division by `(x - root)`; `root` must be a root.
    pub fn divide_linear(&self, root: &Rat) -> IntPoly {
        let mut out: Vec<Rat> = Vec::with_capacity(self.degree());
        let mut carry = Rat::zero();
        for c in self.coeffs.iter().rev() {
            carry = carry * root + Rat::from_integer(c.clone());
            out.push(carry.clone());
        }
        let rem = out.pop().unwrap();
        assert!(rem.is_zero(), "divide_linear: not a root");
        out.reverse();
        rat_to_primitive_int(&out)
    }
}

/// Scale a rational-coefficient polynomial by a positive rational so the
/// result is a primitive integer polynomial with the same sign behaviour.
fn rat_to_primitive_int(coeffs: &[Rat]) -> IntPoly {
    let mut denom_lcm = Int::one();
    for c in coeffs {
        denom_lcm = denom_lcm.lcm(c.denom());
    }
    let ints: Vec<Int> = coeffs
        .iter()
        .map(|c| c.numer() * (&denom_lcm / c.denom()))
        .collect();
    IntPoly::new(ints).primitive()
}

/// Remainder of `a / b` over the rationals, returned as a primitive integer
/// polynomial (positive rescaling, signs preserved). `b` must be nonzero.
fn rational_rem(a: &IntPoly, b: &IntPoly) -> IntPoly {
    let mut r: Vec<Rat> = a
        .coeffs
        .iter()
        .map(|c| Rat::from_integer(c.clone()))
        .collect();
    let db = b.degree();
    let lb = Rat::from_integer(b.leading().clone());
    while r.len() > db && !(r.len() == 1 && r[0].is_zero()) {
        let dr = r.len() - 1;
        let factor = r[dr].clone() / lb.clone();
        if !factor.is_zero() {
            for i in 0..=db {
                let t = factor.clone() * Rat::from_integer(b.coeffs[i].clone());
                r[dr - db + i] -= t;
            }
        }
        r.pop();
        while r.len() > 1 && r.last().unwrap().is_zero() {
            r.pop();
        }
        if r.is_empty() {
            r.push(Rat::zero());
        }
    }
    rat_to_primitive_int(&r)
}

/// Primitive polynomial gcd via rational remainders with content stripping.
pub fn poly_gcd(a: &IntPoly, b: &IntPoly) -> IntPoly {
    let mut x = a.primitive();
    let mut y = b.primitive();
    while !y.is_zero() {
        let r = rational_rem(&x, &y);
        x = y;
        y = r;
    }
    // normalize to positive leading coefficient
    if x.leading().is_negative() {
        x = IntPoly::new(x.coeffs.iter().map(|c| -c).collect());
    }
    x
}

/// Exact quotient `a / b` where `b` divides `a` over the integers (the Yun
/// divisions all have this form by Gauss's lemma). The true quotient is
/// returned unscaled so the algorithm's polynomial identities keep holding.
fn exact_quotient(a: &IntPoly, b: &IntPoly) -> IntPoly {
    if a.is_zero() {
        return IntPoly::zero();
    }
    let da = a.degree();
    let db = b.degree();
    assert!(da >= db);
    let mut r: Vec<Rat> = a
        .coeffs
        .iter()
        .map(|c| Rat::from_integer(c.clone()))
        .collect();
    let lb = Rat::from_integer(b.leading().clone());
    let mut q = vec![Rat::zero(); da - db + 1];
    for k in (0..=da - db).rev() {
        let coeff = r[k + db].clone() / lb.clone();
        q[k] = coeff.clone();
        if !coeff.is_zero() {
            for i in 0..=db {
                let t = coeff.clone() * Rat::from_integer(b.coeffs[i].clone());
                r[k + i] -= t;
            }
        }
    }
    debug_assert!(r.iter().all(Zero::is_zero), "exact_quotient: remainder");
    let ints: Vec<Int> = q
        .iter()
        .map(|c| {
            assert!(c.denom().is_one(), "exact_quotient: non-integer quotient");
            c.numer().clone()
        })
        .collect();
    IntPoly::new(ints)
}

/// Yun square-free decomposition: `(factor, multiplicity)` pairs with factors
/// primitive, square-free, pairwise coprime, and
/// `prod factor_i^{mult_i} = input` up to a constant.
pub fn square_free_decomposition(f: &IntPoly) -> Vec<(IntPoly, usize)> {
    let f = f.primitive();
    if f.degree() == 0 {
        return Vec::new();
    }
    let df = f.derivative();
    let a0 = poly_gcd(&f, &df);
    let mut b = exact_quotient(&f, &a0);
    let mut c = exact_quotient(&df, &a0);
    let mut out = Vec::new();
    let mut i = 1;
    loop {
        let db = b.derivative();
        let d = IntPoly::new(sub(&c.coeffs, &db.coeffs));
        if b.degree() == 0 {
            break;
        }
        let p = poly_gcd(&b, &d);
        if p.degree() > 0 {
            out.push((p.clone(), i));
        }
        b = exact_quotient(&b, &p);
        c = exact_quotient(&d, &p);
        i += 1;
    }
    out
}

fn sub(a: &[Int], b: &[Int]) -> Vec<Int> {
    let n = a.len().max(b.len());
    (0..n)
        .map(|i| {
            let x = a.get(i).cloned().unwrap_or_else(Int::zero);
            let y = b.get(i).cloned().unwrap_or_else(Int::zero);
            x - y
        })
        .collect()
}

/// Sturm chain of a square-free polynomial.
fn sturm_chain(f: &IntPoly) -> Vec<IntPoly> {
    let mut chain = vec![f.primitive(), f.derivative().primitive()];
    while !chain.last().unwrap().is_zero() {
        let k = chain.len();
        let r = rational_rem(&chain[k - 2], &chain[k - 1]);
        let neg = IntPoly::new(r.coeffs.iter().map(|c| -c).collect());
        chain.push(neg);
    }
    chain.pop();
    chain
}

fn variations<I: Iterator<Item = i8>>(signs: I) -> usize {
    let mut last = 0i8;
    let mut v = 0;
    for s in signs {
        if s == 0 {
            continue;
        }
        if last != 0 && s != last {
            v += 1;
        }
        last = s;
    }
    v
}

fn sign_of_rat(x: &Rat) -> i8 {
    if x.is_zero() {
        0
    } else if x.is_negative() {
        -1
    } else {
        1
    }
}

fn sign_of_int(x: &Int) -> i8 {
    if x.is_zero() {
        0
    } else if x.is_negative() {
        -1
    } else {
        1
    }
}

/// Number of distinct real roots of square-free `f` strictly greater than `t`.
pub fn sturm_roots_greater(f: &IntPoly, t: &Rat) -> usize {
    let mut f = f.primitive();
    if f.eval_rat(t).is_zero() {
        f = f.divide_linear(t);
    }
    if f.degree() == 0 {
        return 0;
    }
    let chain = sturm_chain(&f);
    let v_t = variations(chain.iter().map(|p| sign_of_rat(&p.eval_rat(t))));
    let v_inf = variations(chain.iter().map(|p| sign_of_int(p.leading())));
    v_t - v_inf
}

/// Exact eigenvalue counts `(greater, equal, less)` of the matrix whose
/// characteristic polynomial is `phi`, relative to threshold `t`.
pub fn counts_from_char_poly(phi: &IntPoly, t: &Rat) -> (usize, usize, usize) {
    let n = phi.degree();
    let mut greater = 0;
    let mut equal = 0;
    for (factor, mult) in square_free_decomposition(phi) {
        greater += mult * sturm_roots_greater(&factor, t);
        if factor.eval_rat(t).is_zero() {
            equal += mult;
        }
    }
    (greater, equal, n - greater - equal)
}

/// Bound for exact characteristic polynomials (larger graphs should use the
/// elimination-based inertia instead).
pub const CHAR_POLY_BOUND: usize = 64;

/// Exact characteristic polynomial `det(xI - A)` of the adjacency matrix,
/// by the trace recursion (all divisions exact over the integers).
pub fn char_poly(g: &Graph) -> crate::Result<IntPoly> {
    let n = g.n();
    if n > CHAR_POLY_BOUND {
        return Err(crate::Error::SizeBound {
            n,
            bound: CHAR_POLY_BOUND,
        });
    }
    let a: Vec<Vec<Int>> = g
        .adjacency_matrix()
        .into_iter()
        .map(|row| row.into_iter().map(Int::from).collect())
        .collect();
    // c[n] = 1; m_1 = A; c_{n-1} = -tr(m_1); m_k = A (m_{k-1} + c_{n-k+1} I)
    let mut coeffs = vec![Int::zero(); n + 1];
    coeffs[n] = Int::one();
    let mut m = a.clone();
    for k in 1..=n {
        if k > 1 {
            let prev = coeffs[n - k + 1].clone();
            let mut shifted = m.clone();
            for (i, row) in shifted.iter_mut().enumerate() {
                row[i] += &prev;
            }
            m = mat_mul(&a, &shifted);
        }
        let tr: Int = (0..n).map(|i| m[i][i].clone()).sum();
        let c = -tr / Int::from(k);
        coeffs[n - k] = c;
    }
    Ok(IntPoly::new(coeffs))
}

fn mat_mul(a: &[Vec<Int>], b: &[Vec<Int>]) -> Vec<Vec<Int>> {
    let n = a.len();
    let mut out = vec![vec![Int::zero(); n]; n];
    for i in 0..n {
        for k in 0..n {
            if a[i][k].is_zero() {
                continue;
            }
            let aik = &a[i][k];
            for j in 0..n {
                if !b[k][j].is_zero() {
                    out[i][j] += aik * &b[k][j];
                }
            }
        }
    }
    out
}

/// Exact determinant of an integer matrix by fraction-free elimination.
pub fn det_int(matrix: &[Vec<Int>]) -> Int {
    let n = matrix.len();
    if n == 0 {
        return Int::one();
    }
    let mut m: Vec<Vec<Int>> = matrix.to_vec();
    let mut denom = Int::one();
    let mut sign = Int::one();
    for k in 0..n - 1 {
        if m[k][k].is_zero() {
            let swap = (k + 1..n).find(|&r| !m[r][k].is_zero());
            match swap {
                Some(r) => {
                    m.swap(k, r);
                    sign = -sign;
                }
                None => return Int::zero(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let v = (&m[k][k] * &m[i][j] - &m[i][k] * &m[k][j]) / &denom;
                m[i][j] = v;
            }
            m[i][k] = Int::zero();
        }
        denom = m[k][k].clone();
    }
    sign * m[n - 1][n - 1].clone()
}

/// Exact rank of an integer matrix (not necessarily square).
pub fn rank_int(matrix: &[Vec<Int>]) -> usize {
    let rows = matrix.len();
    if rows == 0 {
        return 0;
    }
    let cols = matrix[0].len();
    let mut m: Vec<Vec<Rat>> = matrix
        .iter()
        .map(|r| r.iter().map(|x| Rat::from_integer(x.clone())).collect())
        .collect();
    let mut rank = 0;
    let mut row = 0;
    for col in 0..cols {
        let pivot = (row..rows).find(|&r| !m[r][col].is_zero());
        let Some(p) = pivot else { continue };
        m.swap(row, p);
        let pv = m[row][col].clone();
        for r in 0..rows {
            if r != row && !m[r][col].is_zero() {
                let f = m[r][col].clone() / pv.clone();
                for c in col..cols {
                    let t = f.clone() * m[row][c].clone();
                    m[r][c] -= t;
                }
            }
        }
        rank += 1;
        row += 1;
        if row == rows {
            break;
        }
    }
    rank
}

#[cfg(test)]
mod tests {
    use super::*;

    fn poly(desc: &[i64]) -> IntPoly {
        IntPoly::new(desc.iter().rev().map(|&c| Int::from(c)).collect())
    }

    #[test]
    fn char_poly_k2() {
        let k2 = Graph::from_edge_list(2, &[(0, 1)]).unwrap();
        assert_eq!(char_poly(&k2).unwrap(), poly(&[1, 0, -1]));
    }

    #[test]
    fn char_poly_c6_and_trace_conditions() {
        let c6 = Graph::cycle(6);
        let p = char_poly(&c6).unwrap();
        // (x^2-4)(x^2-1)^2 = x^6 - 6x^4 + 9x^2 - 4
        assert_eq!(p, poly(&[1, 0, -6, 0, 9, 0, -4]));
        // coefficient of x^{n-1} = 0, coefficient of x^{n-2} = -m
        assert!(p.coeffs[5].is_zero());
        assert_eq!(p.coeffs[4], Int::from(-6));
    }

    #[test]
    fn char_poly_matches_bareiss_determinant() {
        let g = crate::catalog::heawood();
        let p = char_poly(&g).unwrap();
        for t in -3i64..=3 {
            let mut m: Vec<Vec<Int>> = g
                .adjacency_matrix()
                .iter()
                .map(|row| row.iter().map(|&x| Int::from(-(x as i64))).collect())
                .collect();
            for (i, row) in m.iter_mut().enumerate() {
                row[i] += Int::from(t);
            }
            assert_eq!(p.eval_int(&Int::from(t)), det_int(&m), "t={t}");
        }
    }

    #[test]
    fn square_free_and_sturm_on_c6() {
        // x^6 - 6x^4 + 9x^2 - 4 = (x-2)(x+2)(x-1)^2(x+1)^2
        let p = poly(&[1, 0, -6, 0, 9, 0, -4]);
        let sf = square_free_decomposition(&p);
        let total: usize = sf.iter().map(|(f, m)| f.degree() * m).sum();
        assert_eq!(total, 6);
        let one = Rat::from_integer(Int::from(1));
        let (g, e, l) = counts_from_char_poly(&p, &one);
        assert_eq!((g, e, l), (1, 2, 3));
        let zero = Rat::from_integer(Int::from(0));
        assert_eq!(counts_from_char_poly(&p, &zero), (3, 0, 3));
        let half = Rat::new(Int::from(1), Int::from(2));
        assert_eq!(counts_from_char_poly(&p, &half), (3, 0, 3));
    }

    #[test]
    fn rank_of_singular_matrix() {
        let m = vec![
            vec![Int::from(1), Int::from(2)],
            vec![Int::from(2), Int::from(4)],
        ];
        assert_eq!(rank_int(&m), 1);
    }
}
