//! Exact tensor calculus for ordered-set Frobenius-like algebras.
//!
//! Morphisms X^a -> X^b on an n-dimensional base space are dense rational
//! matrices. The ordered model carries the min multiplication
//! mu(e_a tensor e_b) = e_min(a,b) and the diagonal comultiplication
//! delta(e_a) = e_a tensor e_a. The module checks the four structure axioms,
//! the idempotent algebra of gamma and gamma', the trace identities
//! tr(gamma) = beta alpha and tr(gamma tau) = dim, the splitting of the
//! symmetric square, the associated (2n+1)-dimensional commutative algebra
//! with its trace pairing, orbit-count arithmetic, and the cyclic-transitive
//! tournament count.

use crate::exactnum::{rat, Rational};
use num_traits::{One, Zero};
use serde::Serialize;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum OFrobError {
    #[error("shape mismatch: {0}")]
    ShapeMismatch(String),
}

/// A linear map X^{tensor a} -> X^{tensor b}, X of dimension base_dim,
/// stored as an n^b x n^a rational matrix in the lexicographic tensor basis.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Morphism {
    pub base_dim: usize,
    pub source_arity: usize,
    pub target_arity: usize,
    /// rows[r][c], r < n^target_arity, c < n^source_arity
    pub rows: Vec<Vec<Rational>>,
}

fn pow(n: usize, k: usize) -> usize {
    n.pow(k as u32)
}

impl Morphism {
    pub fn zero(n: usize, a: usize, b: usize) -> Morphism {
        Morphism {
            base_dim: n,
            source_arity: a,
            target_arity: b,
            rows: vec![vec![Rational::zero(); pow(n, a)]; pow(n, b)],
        }
    }

    pub fn identity(n: usize, a: usize) -> Morphism {
        let mut m = Morphism::zero(n, a, a);
        for i in 0..pow(n, a) {
            m.rows[i][i] = Rational::one();
        }
        m
    }

    /// Permutation of tensor factors: factor j of the output is factor
    /// perm[j] of the input.
    pub fn permutation(n: usize, perm: &[usize]) -> Morphism {
        let a = perm.len();
        let mut m = Morphism::zero(n, a, a);
        for c in 0..pow(n, a) {
            // digits of c, most significant factor first
            let mut digits = vec![0usize; a];
            let mut rest = c;
            for j in (0..a).rev() {
                digits[j] = rest % n;
                rest /= n;
            }
            let mut r = 0usize;
            for j in 0..a {
                r = r * n + digits[perm[j]];
            }
            m.rows[r][c] = Rational::one();
        }
        m
    }

    /// The swap on X tensor X.
    pub fn braiding(n: usize) -> Morphism {
        Morphism::permutation(n, &[1, 0])
    }

    /// ev: X tensor X -> 1 via the standard self-pairing.
    pub fn ev(n: usize) -> Morphism {
        let mut m = Morphism::zero(n, 2, 0);
        for i in 0..n {
            m.rows[0][i * n + i] = Rational::one();
        }
        m
    }

    /// cv: 1 -> X tensor X, 1 |-> sum of e_i tensor e_i.
    pub fn cv(n: usize) -> Morphism {
        let mut m = Morphism::zero(n, 0, 2);
        for i in 0..n {
            m.rows[i * n + i][0] = Rational::one();
        }
        m
    }

    pub fn compose(&self, g: &Morphism) -> Result<Morphism, OFrobError> {
        if self.base_dim != g.base_dim || self.source_arity != g.target_arity {
            return Err(OFrobError::ShapeMismatch(format!(
                "compose: ({}->{} on dim {}) after ({}->{} on dim {})",
                self.source_arity,
                self.target_arity,
                self.base_dim,
                g.source_arity,
                g.target_arity,
                g.base_dim
            )));
        }
        let mut out = Morphism::zero(self.base_dim, g.source_arity, self.target_arity);
        for r in 0..out.rows.len() {
            for k in 0..self.rows[r].len() {
                if self.rows[r][k].is_zero() {
                    continue;
                }
                for c in 0..out.rows[r].len() {
                    if !g.rows[k][c].is_zero() {
                        let term = &self.rows[r][k] * &g.rows[k][c];
                        out.rows[r][c] += term;
                    }
                }
            }
        }
        Ok(out)
    }

    pub fn tensor(&self, g: &Morphism) -> Result<Morphism, OFrobError> {
        if self.base_dim != g.base_dim {
            return Err(OFrobError::ShapeMismatch("tensor: base dims differ".into()));
        }
        let n = self.base_dim;
        let (a1, b1, a2, b2) = (
            self.source_arity,
            self.target_arity,
            g.source_arity,
            g.target_arity,
        );
        let mut out = Morphism::zero(n, a1 + a2, b1 + b2);
        for r1 in 0..pow(n, b1) {
            for c1 in 0..pow(n, a1) {
                if self.rows[r1][c1].is_zero() {
                    continue;
                }
                for r2 in 0..pow(n, b2) {
                    for c2 in 0..pow(n, a2) {
                        if g.rows[r2][c2].is_zero() {
                            continue;
                        }
                        out.rows[r1 * pow(n, b2) + r2][c1 * pow(n, a2) + c2] =
                            &self.rows[r1][c1] * &g.rows[r2][c2];
                    }
                }
            }
        }
        Ok(out)
    }

    pub fn add(&self, g: &Morphism) -> Result<Morphism, OFrobError> {
        self.zip_entries(g, |x, y| x + y)
    }

    pub fn sub(&self, g: &Morphism) -> Result<Morphism, OFrobError> {
        self.zip_entries(g, |x, y| x - y)
    }

    fn zip_entries(
        &self,
        g: &Morphism,
        op: impl Fn(&Rational, &Rational) -> Rational,
    ) -> Result<Morphism, OFrobError> {
        if self.base_dim != g.base_dim
            || self.source_arity != g.source_arity
            || self.target_arity != g.target_arity
        {
            return Err(OFrobError::ShapeMismatch("add/sub: shapes differ".into()));
        }
        let mut out = self.clone();
        for (ro, rg) in out.rows.iter_mut().zip(&g.rows) {
            for (x, y) in ro.iter_mut().zip(rg) {
                *x = op(x, y);
            }
        }
        Ok(out)
    }

    pub fn scale(&self, q: &Rational) -> Morphism {
        let mut out = self.clone();
        for row in &mut out.rows {
            for x in row.iter_mut() {
                *x *= q;
            }
        }
        out
    }

    pub fn is_zero(&self) -> bool {
        self.rows.iter().all(|r| r.iter().all(|x| x.is_zero()))
    }

    /// Full trace; requires equal arities.
    pub fn trace(&self) -> Result<Rational, OFrobError> {
        if self.source_arity != self.target_arity {
            return Err(OFrobError::ShapeMismatch("trace: arities differ".into()));
        }
        let mut t = Rational::zero();
        for i in 0..self.rows.len() {
            t += &self.rows[i][i];
        }
        Ok(t)
    }

    /// Contract the last tensor factor: X^k -> X^k becomes
    /// X^{k-1} -> X^{k-1}.
    pub fn partial_trace(&self) -> Result<Morphism, OFrobError> {
        if self.source_arity != self.target_arity || self.source_arity == 0 {
            return Err(OFrobError::ShapeMismatch(
                "partial_trace: needs equal arities >= 1".into(),
            ));
        }
        let n = self.base_dim;
        let k = self.source_arity;
        let mut out = Morphism::zero(n, k - 1, k - 1);
        for r in 0..pow(n, k - 1) {
            for c in 0..pow(n, k - 1) {
                let mut s = Rational::zero();
                for i in 0..n {
                    s += &self.rows[r * n + i][c * n + i];
                }
                out.rows[r][c] = s;
            }
        }
        Ok(out)
    }

    /// The single entry of an arity-(0,0) morphism.
    pub fn as_scalar(&self) -> Result<Rational, OFrobError> {
        if self.source_arity != 0 || self.target_arity != 0 {
            return Err(OFrobError::ShapeMismatch("as_scalar: not 0 -> 0".into()));
        }
        Ok(self.rows[0][0].clone())
    }
}

/// A candidate structure (mu, delta) on an n-dimensional space.
#[derive(Debug, Clone)]
pub struct OFrobAlgebra {
    pub base_dim: usize,
    pub mu: Morphism,
    pub delta: Morphism,
}

impl OFrobAlgebra {
    /// (lambda mu, lambda^{-1} delta) for nonzero lambda.
    pub fn rescale(&self, lambda: &Rational) -> OFrobAlgebra {
        OFrobAlgebra {
            base_dim: self.base_dim,
            mu: self.mu.scale(lambda),
            delta: self.delta.scale(&(Rational::one() / lambda)),
        }
    }
}

/// The min-multiplication, diagonal-comultiplication model on e_0..e_{n-1}
/// (elements ordered by index).
pub fn ordered_model(n: usize) -> OFrobAlgebra {
    let mut mu = Morphism::zero(n, 2, 1);
    for a in 0..n {
        for b in 0..n {
            mu.rows[a.min(b)][a * n + b] = Rational::one();
        }
    }
    let mut delta = Morphism::zero(n, 1, 2);
    for a in 0..n {
        delta.rows[a * n + a][a] = Rational::one();
    }
    OFrobAlgebra {
        base_dim: n,
        mu,
        delta,
    }
}

/// Same space with the order reversed, i.e. max multiplication.
pub fn reversed_model(n: usize) -> OFrobAlgebra {
    let mut mu = Morphism::zero(n, 2, 1);
    for a in 0..n {
        for b in 0..n {
            mu.rows[a.max(b)][a * n + b] = Rational::one();
        }
    }
    let mut delta = Morphism::zero(n, 1, 2);
    for a in 0..n {
        delta.rows[a * n + a][a] = Rational::one();
    }
    OFrobAlgebra {
        base_dim: n,
        mu,
        delta,
    }
}

/// Deliberately non-symmetric multiplication mu(e_a tensor e_b) = e_a with
/// the diagonal comultiplication; fails axiom (a).
pub fn broken_model(n: usize) -> OFrobAlgebra {
    let mut mu = Morphism::zero(n, 2, 1);
    for a in 0..n {
        for b in 0..n {
            mu.rows[a][a * n + b] = Rational::one();
        }
    }
    let mut delta = Morphism::zero(n, 1, 2);
    for a in 0..n {
        delta.rows[a * n + a][a] = Rational::one();
    }
    OFrobAlgebra {
        base_dim: n,
        mu,
        delta,
    }
}

/// gamma = (id tensor mu)(delta tensor id).
pub fn gamma(alg: &OFrobAlgebra) -> Morphism {
    let id = Morphism::identity(alg.base_dim, 1);
    id.tensor(&alg.mu)
        .unwrap()
        .compose(&alg.delta.tensor(&id).unwrap())
        .unwrap()
}

/// gamma' = (mu tensor id)(id tensor delta).
pub fn gamma_prime(alg: &OFrobAlgebra) -> Morphism {
    let id = Morphism::identity(alg.base_dim, 1);
    alg.mu
        .tensor(&id)
        .unwrap()
        .compose(&id.tensor(&alg.delta).unwrap())
        .unwrap()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct AxiomChecks {
    /// (a) mu tau = mu and tau delta = delta
    pub symmetry: bool,
    /// (b) mu is associative and delta is coassociative
    pub associativity: bool,
    /// (c) mu delta = id
    pub mu_delta_identity: bool,
    /// (d) gamma + gamma' = id + delta mu
    pub gamma_relation: bool,
}

impl AxiomChecks {
    pub fn all(&self) -> bool {
        self.symmetry && self.associativity && self.mu_delta_identity && self.gamma_relation
    }
}

pub fn check_axioms(alg: &OFrobAlgebra) -> AxiomChecks {
    let n = alg.base_dim;
    let id = Morphism::identity(n, 1);
    let tau = Morphism::braiding(n);
    let mu = &alg.mu;
    let delta = &alg.delta;

    let symmetry = mu.compose(&tau).unwrap() == *mu && tau.compose(delta).unwrap() == *delta;

    let mu_id = mu.tensor(&id).unwrap();
    let id_mu = id.tensor(mu).unwrap();
    let assoc = mu.compose(&mu_id).unwrap() == mu.compose(&id_mu).unwrap();
    let delta_id = delta.tensor(&id).unwrap();
    let id_delta = id.tensor(delta).unwrap();
    let coassoc = delta_id.compose(delta).unwrap() == id_delta.compose(delta).unwrap();

    let mu_delta_identity = mu.compose(delta).unwrap() == id;

    let lhs = gamma(alg).add(&gamma_prime(alg)).unwrap();
    let rhs = Morphism::identity(n, 2)
        .add(&delta.compose(mu).unwrap())
        .unwrap();
    let gamma_relation = lhs == rhs;

    AxiomChecks {
        symmetry,
        associativity: assoc && coassoc,
        mu_delta_identity,
        gamma_relation,
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct GammaChecks {
    pub gamma_idempotent: bool,
    pub gamma_prime_idempotent: bool,
    pub commute: bool,
    pub product_is_delta_mu: bool,
    pub gamma_prime_is_tau_conjugate: bool,
}

impl GammaChecks {
    pub fn all(&self) -> bool {
        self.gamma_idempotent
            && self.gamma_prime_idempotent
            && self.commute
            && self.product_is_delta_mu
            && self.gamma_prime_is_tau_conjugate
    }
}

pub fn check_gamma_properties(alg: &OFrobAlgebra) -> GammaChecks {
    let g = gamma(alg);
    let gp = gamma_prime(alg);
    let tau = Morphism::braiding(alg.base_dim);
    let dm = alg.delta.compose(&alg.mu).unwrap();
    let ggp = g.compose(&gp).unwrap();
    let gpg = gp.compose(&g).unwrap();
    GammaChecks {
        gamma_idempotent: g.compose(&g).unwrap() == g,
        gamma_prime_idempotent: gp.compose(&gp).unwrap() == gp,
        commute: ggp == gpg,
        product_is_delta_mu: ggp == dm,
        gamma_prime_is_tau_conjugate: tau.compose(&g).unwrap().compose(&tau).unwrap() == gp,
    }
}

/// alpha: 1 -> X, the composite (ev tensor id)(id tensor delta) cv.
pub fn alpha(alg: &OFrobAlgebra) -> Morphism {
    let n = alg.base_dim;
    let id = Morphism::identity(n, 1);
    Morphism::ev(n)
        .tensor(&id)
        .unwrap()
        .compose(&id.tensor(&alg.delta).unwrap())
        .unwrap()
        .compose(&Morphism::cv(n))
        .unwrap()
}

/// beta: X -> 1, the mirror composite ev (id tensor mu)(cv tensor id).
pub fn beta(alg: &OFrobAlgebra) -> Morphism {
    let n = alg.base_dim;
    let id = Morphism::identity(n, 1);
    Morphism::ev(n)
        .compose(&id.tensor(&alg.mu).unwrap())
        .unwrap()
        .compose(&Morphism::cv(n).tensor(&id).unwrap())
        .unwrap()
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TraceChecks {
    #[serde(with = "crate::exactnum::serde_rational")]
    pub trace_gamma: Rational,
    #[serde(with = "crate::exactnum::serde_rational")]
    pub beta_alpha: Rational,
    #[serde(with = "crate::exactnum::serde_rational")]
    pub trace_gamma_tau: Rational,
    pub trace_gamma_equals_beta_alpha: bool,
    pub trace_gamma_tau_equals_dim: bool,
}

pub fn check_traces(alg: &OFrobAlgebra) -> TraceChecks {
    let g = gamma(alg);
    let tau = Morphism::braiding(alg.base_dim);
    let trace_gamma = g.trace().unwrap();
    let beta_alpha = beta(alg)
        .compose(&alpha(alg))
        .unwrap()
        .as_scalar()
        .unwrap();
    let trace_gamma_tau = g.compose(&tau).unwrap().trace().unwrap();
    TraceChecks {
        trace_gamma_equals_beta_alpha: trace_gamma == beta_alpha,
        trace_gamma_tau_equals_dim: trace_gamma_tau == rat(alg.base_dim as i64),
        trace_gamma,
        beta_alpha,
        trace_gamma_tau,
    }
}

/// Verifies the splitting of the symmetric square as the exterior square
/// plus X: with e = (1 + tau)/2, f = (1 - tau)/2, the maps
/// x |-> (4 f gamma x, delta mu x) on the image of e and
/// (y, z) |-> e gamma y + z back are mutually inverse.
pub fn psi2_isomorphism_check(alg: &OFrobAlgebra) -> bool {
    let n = alg.base_dim;
    let half = crate::exactnum::ratio(1, 2);
    let id2 = Morphism::identity(n, 2);
    let tau = Morphism::braiding(n);
    let e = id2.add(&tau).unwrap().scale(&half);
    let f = id2.sub(&tau).unwrap().scale(&half);
    let g = gamma(alg);
    let dm = alg.delta.compose(&alg.mu).unwrap();
    let four = rat(4);

    let fge = f.compose(&g).unwrap().compose(&e).unwrap().scale(&four);
    let ege = |m: &Morphism| e.compose(&g).unwrap().compose(m).unwrap();

    // psi phi = id on the image of e
    let round_trip = ege(&fge).add(&dm.compose(&e).unwrap()).unwrap();
    let c1 = round_trip == e;
    // phi psi = id on the two summands
    let c2 = fge.compose(&ege(&f)).unwrap() == f;
    let c3 = dm.compose(&ege(&f)).unwrap().is_zero();
    let c4 = fge.compose(&dm).unwrap().is_zero();
    let c5 = dm.compose(&dm).unwrap() == dm;
    c1 && c2 && c3 && c4 && c5
}

/// A commutative algebra given by structure constants:
/// products[i][j] is the coordinate vector of basis_i * basis_j.
#[derive(Debug, Clone)]
pub struct StructureAlgebra {
    pub dim: usize,
    pub products: Vec<Vec<Vec<Rational>>>,
    pub unit: usize,
}

/// The (2n+1)-dimensional algebra on X + unit + X^dual. Basis order:
/// e_0..e_{n-1}, u, e*_0..e*_{n-1}. The mixed product of e_a and e*_b is
/// [a=b] e_a - [a=b] u + (the mu-dual part), with X^dual identified with X
/// through the standard pairing.
pub fn build_etale_a(alg: &OFrobAlgebra) -> StructureAlgebra {
    let n = alg.base_dim;
    let dim = 2 * n + 1;
    let unit = n;
    let zero_vec = || vec![Rational::zero(); dim];
    let mut products = vec![vec![zero_vec(); dim]; dim];

    let x_index = |a: usize| a;
    let dual_index = |a: usize| n + 1 + a;

    // unit
    for i in 0..dim {
        let mut v = zero_vec();
        v[i] = Rational::one();
        products[unit][i] = v.clone();
        products[i][unit] = v;
    }
    // X . X through mu
    for a in 0..n {
        for b in 0..n {
            let mut v = zero_vec();
            for c in 0..n {
                v[x_index(c)] = alg.mu.rows[c][a * n + b].clone();
            }
            products[x_index(a)][x_index(b)] = v;
        }
    }
    // X^dual . X^dual through the dual of delta:
    // (e*_a e*_b)(e_c) = (e*_a tensor e*_b)(delta e_c)
    for a in 0..n {
        for b in 0..n {
            let mut v = zero_vec();
            for c in 0..n {
                v[dual_index(c)] = alg.delta.rows[a * n + b][c].clone();
            }
            products[dual_index(a)][dual_index(b)] = v;
        }
    }
    // mixed product: delta-dual part minus pairing part plus mu-dual part
    for a in 0..n {
        for b in 0..n {
            let mut v = zero_vec();
            // delta-dual part in X: sum_c <e*_b, (delta e_a)_second> e_(first)
            for c in 0..n {
                // coefficient of e_c tensor e_b in delta(e_a)
                v[x_index(c)] = alg.delta.rows[c * n + b][a].clone();
            }
            // pairing part in the unit
            if a == b {
                v[unit] = -Rational::one();
            }
            // mu-dual part in X^dual: (e_a e*_b)(e_c) includes e*_b(mu(e_a e_c))
            for c in 0..n {
                v[dual_index(c)] = &v[dual_index(c)] + &alg.mu.rows[b][a * n + c];
            }
            products[x_index(a)][dual_index(b)] = v.clone();
            products[dual_index(b)][x_index(a)] = v;
        }
    }

    StructureAlgebra {
        dim,
        products,
        unit,
    }
}

impl StructureAlgebra {
    fn multiply_vec(&self, x: &[Rational], y: &[Rational]) -> Vec<Rational> {
        let mut out = vec![Rational::zero(); self.dim];
        for i in 0..self.dim {
            if x[i].is_zero() {
                continue;
            }
            for j in 0..self.dim {
                if y[j].is_zero() {
                    continue;
                }
                let c = &x[i] * &y[j];
                for k in 0..self.dim {
                    if !self.products[i][j][k].is_zero() {
                        out[k] += &c * &self.products[i][j][k];
                    }
                }
            }
        }
        out
    }

    /// Matrix of multiplication by basis_i.
    fn left_mult_matrix(&self, i: usize) -> Vec<Vec<Rational>> {
        let mut m = vec![vec![Rational::zero(); self.dim]; self.dim];
        for j in 0..self.dim {
            for k in 0..self.dim {
                m[k][j] = self.products[i][j][k].clone();
            }
        }
        m
    }

    /// Trace form epsilon(x) = tr(multiplication by x) on basis elements.
    pub fn trace_form(&self) -> Vec<Rational> {
        (0..self.dim)
            .map(|i| {
                let m = self.left_mult_matrix(i);
                (0..self.dim).fold(Rational::zero(), |acc, k| acc + &m[k][k])
            })
            .collect()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct AlgebraChecks {
    pub commutative: bool,
    pub associative: bool,
    pub unital: bool,
    pub etale: bool,
}

impl AlgebraChecks {
    pub fn all(&self) -> bool {
        self.commutative && self.associative && self.unital && self.etale
    }
}

fn determinant(mut m: Vec<Vec<Rational>>) -> Rational {
    let dim = m.len();
    let mut det = Rational::one();
    for col in 0..dim {
        let Some(pivot) = (col..dim).find(|&r| !m[r][col].is_zero()) else {
            return Rational::zero();
        };
        if pivot != col {
            m.swap(pivot, col);
            det = -det;
        }
        let p = m[col][col].clone();
        det *= &p;
        for r in col + 1..dim {
            if m[r][col].is_zero() {
                continue;
            }
            let factor = &m[r][col] / &p;
            for c in col..dim {
                let t = &factor * &m[col][c];
                m[r][c] -= t;
            }
        }
    }
    det
}

/// Commutativity, associativity on all basis triples, the unit law, and
/// invertibility of the Gram matrix of (x, y) |-> epsilon(xy).
pub fn check_structure_algebra(alg: &StructureAlgebra) -> AlgebraChecks {
    let dim = alg.dim;
    let basis = |i: usize| {
        let mut v = vec![Rational::zero(); dim];
        v[i] = Rational::one();
        v
    };

    let commutative =
        (0..dim).all(|i| (0..dim).all(|j| alg.products[i][j] == alg.products[j][i]));

    let mut associative = true;
    'assoc: for i in 0..dim {
        for j in 0..dim {
            let ij = alg.products[i][j].clone();
            for k in 0..dim {
                let lhs = alg.multiply_vec(&ij, &basis(k));
                let rhs = alg.multiply_vec(&basis(i), &alg.products[j][k]);
                if lhs != rhs {
                    associative = false;
                    break 'assoc;
                }
            }
        }
    }

    let unital = (0..dim).all(|i| {
        alg.products[alg.unit][i] == basis(i) && alg.products[i][alg.unit] == basis(i)
    });

    let eps = alg.trace_form();
    let mut gram = vec![vec![Rational::zero(); dim]; dim];
    for i in 0..dim {
        for j in 0..dim {
            let prod = &alg.products[i][j];
            let mut s = Rational::zero();
            for k in 0..dim {
                if !prod[k].is_zero() {
                    s += &prod[k] * &eps[k];
                }
            }
            gram[i][j] = s;
        }
    }
    let etale = !determinant(gram).is_zero();

    AlgebraChecks {
        commutative,
        associative,
        unital,
        etale,
    }
}

/// One line of the orbit-count bookkeeping: the invariant-space dimension of
/// the k-th tensor power of A equals a sum over set partitions of {1..k} of
/// orbit counts.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct OrbitIdentity {
    pub tensor_power: usize,
    pub invariant_dimension: u64,
    pub partition_sum: u64,
    pub ok: bool,
}

/// The invariant dimensions 1, 3, 13 of A, A^2, A^3 against the orbit counts
/// 1, 2, 6 of the underlying space, its distinct pairs, and distinct triples:
/// 1 = 1; 3 = 2 + 1; 13 = 6 + 3*2 + 1.
pub fn orbit_count_identity() -> Vec<OrbitIdentity> {
    let invariant_dims = [1u64, 3, 13];
    let orbit_counts = [1u64, 2, 6];
    (1..=3usize)
        .map(|k| {
            // Stirling partition counts S(k, j) weigh the orbit counts of
            // j-element configurations
            let partition_sum: u64 = (1..=k)
                .map(|j| stirling_number(k, j) * orbit_counts[j - 1])
                .sum();
            OrbitIdentity {
                tensor_power: k,
                invariant_dimension: invariant_dims[k - 1],
                partition_sum,
                ok: invariant_dims[k - 1] == partition_sum,
            }
        })
        .collect()
}

/// Stirling number of the second kind S(k, j).
fn stirling_number(k: usize, j: usize) -> u64 {
    if k == 0 && j == 0 {
        return 1;
    }
    if k == 0 || j == 0 || j > k {
        return 0;
    }
    j as u64 * stirling_number(k - 1, j) + stirling_number(k - 1, j - 1)
}

/// Count irreflexive total binary relations on m elements in which x < y and
/// y < z force z < x. The count is 0 for every m >= 4.
pub fn tournament_total_order_check(m: usize) -> u64 {
    let pairs: Vec<(usize, usize)> = (0..m)
        .flat_map(|i| (i + 1..m).map(move |j| (i, j)))
        .collect();
    let mut count = 0u64;
    for mask in 0..(1u64 << pairs.len()) {
        // less[x][y] = true means x < y in the relation
        let mut less = vec![vec![false; m]; m];
        for (bit, &(i, j)) in pairs.iter().enumerate() {
            if mask >> bit & 1 == 1 {
                less[i][j] = true;
            } else {
                less[j][i] = true;
            }
        }
        let mut ok = true;
        'scan: for x in 0..m {
            for y in 0..m {
                if x == y || !less[x][y] {
                    continue;
                }
                for z in 0..m {
                    if z == x || z == y {
                        continue;
                    }
                    if less[y][z] && !less[z][x] {
                        ok = false;
                        break 'scan;
                    }
                }
            }
        }
        if ok {
            count += 1;
        }
    }
    count
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::ratio;
    use proptest::prelude::*;

    #[test]
    fn structural_ops() {
        let n = 3;
        let tau = Morphism::braiding(n);
        assert_eq!(tau.compose(&tau).unwrap(), Morphism::identity(n, 2));
        let evcv = Morphism::ev(n).compose(&Morphism::cv(n)).unwrap();
        assert_eq!(evcv.as_scalar().unwrap(), rat(n as i64));
        let id1 = Morphism::identity(n, 1);
        assert_eq!(id1.tensor(&id1).unwrap(), Morphism::identity(n, 2));
    }

    #[test]
    fn partial_trace_basics() {
        let n = 3;
        assert_eq!(
            Morphism::identity(n, 2).partial_trace().unwrap(),
            Morphism::identity(n, 1).scale(&rat(n as i64))
        );
        assert_eq!(
            Morphism::braiding(n).partial_trace().unwrap(),
            Morphism::identity(n, 1)
        );
        let g = gamma(&ordered_model(3));
        assert_eq!(
            g.partial_trace().unwrap().trace().unwrap(),
            rat(6)
        );
    }

    #[test]
    fn ordered_model_small() {
        let m1 = ordered_model(1);
        assert_eq!(m1.mu.rows, vec![vec![Rational::one()]]);
        assert_eq!(m1.delta.rows, vec![vec![Rational::one()]]);
        let m2 = ordered_model(2);
        // mu(e_{0,1}) = mu(e_{1,0}) = e_0
        assert_eq!(m2.mu.rows[0][1], Rational::one());
        assert_eq!(m2.mu.rows[0][2], Rational::one());
        assert_eq!(m2.mu.rows[1][3], Rational::one());
        // delta has exactly two nonzero entries, on the diagonal pairs
        let nonzero: usize = m2
            .delta
            .rows
            .iter()
            .flatten()
            .filter(|x| !x.is_zero())
            .count();
        assert_eq!(nonzero, 2);
        assert_eq!(m2.delta.rows[0][0], Rational::one());
        assert_eq!(m2.delta.rows[3][1], Rational::one());
    }

    #[test]
    fn axioms_hold_for_ordered_models() {
        for n in 1..=6 {
            assert!(check_axioms(&ordered_model(n)).all(), "n = {n}");
        }
    }

    #[test]
    fn axioms_hold_for_variants() {
        for n in 1..=4 {
            assert!(check_axioms(&ordered_model(n).rescale(&rat(2))).all());
            assert!(check_axioms(&ordered_model(n).rescale(&ratio(-3, 7))).all());
            assert!(check_axioms(&reversed_model(n)).all());
        }
    }

    #[test]
    fn broken_model_fails_symmetry() {
        let checks = check_axioms(&broken_model(3));
        assert!(!checks.symmetry);
        assert!(!checks.all());
    }

    #[test]
    fn gamma_on_basis_is_min_rule() {
        // gamma(e_{a,b}) = e_{a, min(a,b)}
        let n = 3;
        let g = gamma(&ordered_model(n));
        for a in 0..n {
            for b in 0..n {
                for r in 0..n * n {
                    let expected = if r == a * n + a.min(b) {
                        Rational::one()
                    } else {
                        Rational::zero()
                    };
                    assert_eq!(g.rows[r][a * n + b], expected);
                }
            }
        }
    }

    #[test]
    fn gamma_properties_hold() {
        for n in 1..=6 {
            assert!(check_gamma_properties(&ordered_model(n)).all(), "n = {n}");
        }
    }

    #[test]
    fn trace_identities() {
        for n in 1..=6u64 {
            let t = check_traces(&ordered_model(n as usize));
            assert!(t.trace_gamma_equals_beta_alpha, "n = {n}");
            assert!(t.trace_gamma_tau_equals_dim, "n = {n}");
            assert_eq!(t.trace_gamma, rat((n * (n + 1) / 2) as i64));
            assert_eq!(t.trace_gamma_tau, rat(n as i64));
        }
    }

    #[test]
    fn beta_counts_lower_elements() {
        let n = 4;
        let b = beta(&ordered_model(n));
        for idx in 0..n {
            assert_eq!(b.rows[0][idx], rat(idx as i64 + 1));
        }
    }

    #[test]
    fn sym2_splits() {
        for n in 1..=6 {
            assert!(psi2_isomorphism_check(&ordered_model(n)), "n = {n}");
        }
    }

    #[test]
    fn etale_algebra_small() {
        let a = build_etale_a(&ordered_model(1));
        assert_eq!(a.dim, 3);
        let checks = check_structure_algebra(&a);
        assert!(checks.all());
    }

    #[test]
    fn etale_algebra_up_to_5() {
        for n in 1..=5 {
            let checks = check_structure_algebra(&build_etale_a(&ordered_model(n)));
            assert!(checks.all(), "n = {n}: {checks:?}");
        }
    }

    #[test]
    fn mixed_product_n2() {
        // e_0 . e*_0 = e_0 - u + sum over c with min(0,c) = 0 of e*_c
        let a = build_etale_a(&ordered_model(2));
        let p = &a.products[0][3];
        assert_eq!(p[0], Rational::one());
        assert_eq!(p[2], -Rational::one());
        assert_eq!(p[3], Rational::one());
        assert_eq!(p[4], Rational::one());
        // e_1 . e*_0 = e*_0 only (no delta or pairing part)
        let q = &a.products[1][3];
        assert_eq!(q[3], Rational::one());
        assert!(q[0].is_zero() && q[1].is_zero() && q[2].is_zero() && q[4].is_zero());
    }

    #[test]
    fn broken_algebra_not_associative() {
        let checks = check_structure_algebra(&build_etale_a(&broken_model(3)));
        assert!(!checks.associative);
    }

    #[test]
    fn orbit_identities() {
        let ids = orbit_count_identity();
        assert_eq!(ids.len(), 3);
        assert!(ids.iter().all(|i| i.ok));
        assert_eq!(ids[1].partition_sum, 3);
        assert_eq!(ids[2].partition_sum, 13);
    }

    #[test]
    fn tournament_counts() {
        let expected = [1u64, 2, 2, 0, 0, 0];
        for (m, &want) in (1..=6).zip(&expected) {
            assert_eq!(tournament_total_order_check(m), want, "m = {m}");
        }
    }

    fn arb_morphism(n: usize, k: usize) -> impl Strategy<Value = Morphism> {
        let cells = pow(n, k) * pow(n, k);
        prop::collection::vec(-4i64..=4, cells).prop_map(move |vals| {
            let mut m = Morphism::zero(n, k, k);
            for (idx, v) in vals.into_iter().enumerate() {
                m.rows[idx / pow(n, k)][idx % pow(n, k)] = rat(v);
            }
            m
        })
    }

    proptest! {
        #[test]
        fn trace_survives_partial_trace(m in arb_morphism(3, 2)) {
            prop_assert_eq!(
                m.trace().unwrap(),
                m.partial_trace().unwrap().trace().unwrap()
            );
        }

        #[test]
        fn trace_survives_partial_trace_arity3(m in arb_morphism(2, 3)) {
            let once = m.partial_trace().unwrap();
            let twice = once.partial_trace().unwrap();
            prop_assert_eq!(m.trace().unwrap(), twice.trace().unwrap());
        }

        #[test]
        fn rescaling_preserves_axioms(num in 1i64..=5, den in 1i64..=5) {
            let lam = ratio(num, den);
            prop_assert!(check_axioms(&ordered_model(3).rescale(&lam)).all());
        }
    }
}
