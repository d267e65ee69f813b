//! Finite-dimensional matrix realizations of the Lorentz generators and of
//! parity, with residual audits of the operator algebra.

use std::fmt;
use std::str::FromStr;

use nalgebra::DMatrix;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::numcore::{Complex, Rational};

pub type Matrix = DMatrix<Complex>;

/// `2j` for a spin `j`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Spin(pub u32);

impl Spin {
    pub fn value(self) -> f64 {
        self.0 as f64 / 2.0
    }
}

impl fmt::Display for Spin {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0 % 2 == 0 {
            write!(f, "{}", self.0 / 2)
        } else {
            write!(f, "{}/2", self.0)
        }
    }
}

impl FromStr for Spin {
    type Err = Error;

    /// Accepts `1`, `3/2`, `1.5`.
    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::InvalidSpin(s.to_string());
        let t = s.trim();
        let r: Rational = if t.contains('.') {
            let x: f64 = t.parse().map_err(|_| bad())?;
            if !x.is_finite() || (2.0 * x).fract() != 0.0 {
                return Err(bad());
            }
            Rational::from_f64(x).ok_or_else(bad)?
        } else {
            t.parse().map_err(|_| bad())?
        };
        let twice = r * Rational::from_integer(2);
        if !twice.is_integer() || twice.is_negative() {
            return Err(bad());
        }
        let v: u32 = twice.numer().try_into().map_err(|_| bad())?;
        if v > 30 {
            return Err(Error::InvalidSpin(format!("{s} (spins above 15 are not supported)")));
        }
        Ok(Spin(v))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum RepLabel {
    Vector,
    /// `(j1, j2)` when `j1 = j2`, otherwise `(j1, j2) ⊕ (j2, j1)`.
    Spin(Spin, Spin),
}

impl fmt::Display for RepLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RepLabel::Vector => write!(f, "vector"),
            RepLabel::Spin(a, b) if a == b => write!(f, "({a},{b})"),
            RepLabel::Spin(a, b) => write!(f, "({a},{b})+({b},{a})"),
        }
    }
}

impl FromStr for RepLabel {
    type Err = Error;

    /// `vector` or `j1,j2`.
    fn from_str(s: &str) -> Result<Self> {
        let t = s.trim();
        if t.eq_ignore_ascii_case("vector") {
            return Ok(RepLabel::Vector);
        }
        let (a, b) = t.split_once(',').ok_or_else(|| Error::InvalidSpin(s.to_string()))?;
        Ok(RepLabel::Spin(a.parse()?, b.parse()?))
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct LorentzRep {
    pub label: RepLabel,
    pub k: [Matrix; 3],
    pub l: [Matrix; 3],
    pub parity: Matrix,
}

fn levi(i: usize, j: usize, k: usize) -> f64 {
    match (i, j, k) {
        (0, 1, 2) | (1, 2, 0) | (2, 0, 1) => 1.0,
        (0, 2, 1) | (2, 1, 0) | (1, 0, 2) => -1.0,
        _ => 0.0,
    }
}

fn c(re: f64) -> Complex {
    Complex::new(re, 0.0)
}

const I: Complex = Complex::new(0.0, 1.0);

fn comm(a: &Matrix, b: &Matrix) -> Matrix {
    a * b - b * a
}

/// Entrywise max norm.
pub fn max_abs(m: &Matrix) -> f64 {
    m.iter().map(|z| z.norm()).fold(0.0, f64::max)
}

/// The defining 4×4 representation with metric `(+,−,−,−)`.
pub fn build_vector_rep() -> LorentzRep {
    let eta = |a: usize| if a == 0 { 1.0 } else { -1.0 };
    // (J^{μν})^α_β = i(η^{μα}δ^ν_β − η^{να}δ^μ_β)
    let j = |mu: usize, nu: usize| {
        Matrix::from_fn(4, 4, |alpha, beta| {
            let mut v = 0.0;
            if mu == alpha && nu == beta {
                v += eta(mu);
            }
            if nu == alpha && mu == beta {
                v -= eta(nu);
            }
            I * v
        })
    };
    let k = [j(0, 1), j(0, 2), j(0, 3)];
    let l = [j(2, 3), j(3, 1), j(1, 2)];
    let parity = Matrix::from_diagonal(&nalgebra::DVector::from_vec(vec![c(1.0), c(-1.0), c(-1.0), c(-1.0)]));
    LorentzRep { label: RepLabel::Vector, k, l, parity }
}

/// Spin-`j` angular momentum matrices in the basis `m = j, j−1, …, −j`.
fn su2(j: Spin) -> [Matrix; 3] {
    let d = j.0 as usize + 1;
    let jv = j.value();
    let m = |a: usize| jv - a as f64;
    let mut plus = Matrix::zeros(d, d);
    for a in 1..d {
        // J+ |m⟩ = sqrt(j(j+1) − m(m+1)) |m+1⟩
        let mm = m(a);
        plus[(a - 1, a)] = c((jv * (jv + 1.0) - mm * (mm + 1.0)).sqrt());
    }
    let minus = plus.adjoint();
    let jx = (&plus + &minus) * c(0.5);
    let jy = (&plus - &minus) * Complex::new(0.0, -0.5);
    let jz = Matrix::from_fn(d, d, |a, b| if a == b { c(m(a)) } else { c(0.0) });
    [jx, jy, jz]
}

fn kron(a: &Matrix, b: &Matrix) -> Matrix {
    a.kronecker(b)
}

/// Swap of tensor factors `V_p ⊗ V_q → V_q ⊗ V_p`.
fn swap(p: usize, q: usize) -> Matrix {
    let mut s = Matrix::zeros(p * q, p * q);
    for a in 0..p {
        for b in 0..q {
            s[(b * p + a, a * q + b)] = c(1.0);
        }
    }
    s
}

fn block_diag(a: &Matrix, b: &Matrix) -> Matrix {
    let (n, m) = (a.nrows(), b.nrows());
    let mut out = Matrix::zeros(n + m, n + m);
    out.view_mut((0, 0), (n, n)).copy_from(a);
    out.view_mut((n, n), (m, m)).copy_from(b);
    out
}

/// `(j1, j2)` built from two commuting su(2) triples `A`, `B` with
/// `L = A + B` and `K = −i(A − B)`. Parity exchanges the triples: the factor
/// swap when `j1 = j2`, otherwise the exchange of the summands of
/// `(j1, j2) ⊕ (j2, j1)`.
pub fn build_spin_rep(j1: Spin, j2: Spin) -> Result<LorentzRep> {
    let dim = (j1.0 as usize + 1) * (j2.0 as usize + 1) * if j1 == j2 { 1 } else { 2 };
    if dim > 64 {
        return Err(Error::InvalidSpin(format!("({j1},{j2}) has dimension {dim} > 64")));
    }
    let (p, q) = (j1.0 as usize + 1, j2.0 as usize + 1);
    let (s1, s2) = (su2(j1), su2(j2));
    let (id1, id2) = (Matrix::identity(p, p), Matrix::identity(q, q));
    let gens = |sa: &[Matrix; 3], sb: &[Matrix; 3], ia: &Matrix, ib: &Matrix| -> ([Matrix; 3], [Matrix; 3]) {
        let a: Vec<Matrix> = sa.iter().map(|m| kron(m, ib)).collect();
        let b: Vec<Matrix> = sb.iter().map(|m| kron(ia, m)).collect();
        let l = [0, 1, 2].map(|i| &a[i] + &b[i]);
        let k = [0, 1, 2].map(|i| (&a[i] - &b[i]) * (-I));
        (k, l)
    };
    let (k1, l1) = gens(&s1, &s2, &id1, &id2);
    if j1 == j2 {
        return Ok(LorentzRep { label: RepLabel::Spin(j1, j2), k: k1, l: l1, parity: swap(p, q) });
    }
    let (k2, l2) = gens(&s2, &s1, &id2, &id1);
    let k = [0, 1, 2].map(|i| block_diag(&k1[i], &k2[i]));
    let l = [0, 1, 2].map(|i| block_diag(&l1[i], &l2[i]));
    let n = p * q;
    let mut parity = Matrix::zeros(2 * n, 2 * n);
    // first summand is V_p ⊗ V_q, second V_q ⊗ V_p
    parity.view_mut((0, n), (n, n)).copy_from(&swap(q, p));
    parity.view_mut((n, 0), (n, n)).copy_from(&swap(p, q));
    Ok(LorentzRep { label: RepLabel::Spin(j1, j2), k, l, parity })
}

pub fn build_rep(label: RepLabel) -> Result<LorentzRep> {
    match label {
        RepLabel::Vector => Ok(build_vector_rep()),
        RepLabel::Spin(a, b) => build_spin_rep(a, b),
    }
}

/// `W`, `A`, `m`, `B = A − W`, `M = m²`.
#[derive(Debug, Clone, PartialEq)]
pub struct DerivedOperators {
    pub w: Matrix,
    pub a: Matrix,
    pub m: Matrix,
    pub b: Matrix,
    pub mm: Matrix,
}

impl LorentzRep {
    pub fn dim(&self) -> usize {
        self.parity.nrows()
    }

    pub fn derived(&self) -> DerivedOperators {
        let d = self.dim();
        let mut w = Matrix::zeros(d, d);
        let mut a = Matrix::zeros(d, d);
        let mut m = Matrix::zeros(d, d);
        for i in 0..3 {
            w += &self.k[i] * &self.k[i];
            a += &self.l[i] * &self.l[i];
            m += &self.k[i] * &self.l[i];
        }
        let b = &a - &w;
        let mm = &m * &m;
        DerivedOperators { w, a, m, b, mm }
    }

    /// Copy with one entry of `K^{i+1}` shifted by `eps`.
    pub fn with_perturbed_k(&self, i: usize, row: usize, col: usize, eps: f64) -> LorentzRep {
        let mut out = self.clone();
        out.k[i][(row, col)] += c(eps);
        out
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct AuditEntry {
    pub id: String,
    pub residual: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct AuditReport {
    pub rep: String,
    pub dim: usize,
    pub entries: Vec<AuditEntry>,
    /// Value of `B` when it is a multiple of the identity.
    pub b_scalar: Option<f64>,
    /// Value of `M` when it is a multiple of the identity.
    pub m_squared_scalar: Option<f64>,
}

impl AuditReport {
    pub fn max_residual(&self) -> f64 {
        self.entries.iter().map(|e| e.residual).fold(0.0, f64::max)
    }

    pub fn get(&self, id: &str) -> Option<f64> {
        self.entries.iter().find(|e| e.id == id).map(|e| e.residual)
    }
}

fn scalar_value(m: &Matrix, tol: f64) -> Option<f64> {
    let d = m.nrows();
    let s = m.trace() / c(d as f64);
    let off = m - Matrix::identity(d, d) * s;
    (max_abs(&off) <= tol && s.im.abs() <= tol).then_some(s.re)
}

/// Residuals of the commutation relations, the products and their
/// commutators, and the parity relations.
pub fn algebra_audit(rep: &LorentzRep) -> AuditReport {
    let (k, l, p) = (&rep.k, &rep.l, &rep.parity);
    let d = rep.dim();
    let ops = rep.derived();
    let mut entries = Vec::new();
    let mut push = |id: String, r: f64| entries.push(AuditEntry { id, residual: r });
    let eps_sum = |i: usize, j: usize, v: &[Matrix; 3]| {
        let mut out = Matrix::zeros(d, d);
        for (kk, vk) in v.iter().enumerate() {
            let e = levi(i, j, kk);
            if e != 0.0 {
                out += vk * c(e);
            }
        }
        out
    };
    for i in 0..3 {
        let (mut ll, mut kl, mut kk) = (0.0f64, 0.0f64, 0.0f64);
        for j in 0..3 {
            ll = ll.max(max_abs(&(comm(&l[i], &l[j]) - eps_sum(i, j, l) * I)));
            kl = kl.max(max_abs(&(comm(&k[i], &l[j]) - eps_sum(i, j, k) * I)));
            kk = kk.max(max_abs(&(comm(&k[i], &k[j]) + eps_sum(i, j, l) * I)));
        }
        push(format!("LL-commutator-{}", i + 1), ll);
        push(format!("KL-commutator-{}", i + 1), kl);
        push(format!("KK-commutator-{}", i + 1), kk);
    }
    let mut lk = Matrix::zeros(d, d);
    for i in 0..3 {
        lk += &l[i] * &k[i];
    }
    push("m-ordering".into(), max_abs(&(&ops.m - lk)));
    push("products-W-A".into(), max_abs(&comm(&ops.w, &ops.a)));
    push("products-A-m".into(), max_abs(&comm(&ops.a, &ops.m)));
    push("products-m-W".into(), max_abs(&comm(&ops.m, &ops.w)));
    let (mut wk, mut ak, mut zero13, mut bk, mut bl, mut pk, mut pl, mut sec1) = (0.0f64, 0.0f64, 0.0f64, 0.0f64, 0.0f64, 0.0f64, 0.0f64, 0.0f64);
    for i in 0..3 {
        let mut rhs = &k[i] * c(-2.0);
        for j in 0..3 {
            for kk in 0..3 {
                let e = levi(i, j, kk);
                if e != 0.0 {
                    rhs += &l[j] * &k[kk] * (I * (-2.0 * e));
                }
            }
        }
        wk = wk.max(max_abs(&(comm(&ops.w, &k[i]) - &rhs)));
        ak = ak.max(max_abs(&(comm(&ops.a, &k[i]) - &rhs)));
        for z in [comm(&ops.w, &l[i]), comm(&ops.a, &l[i]), comm(&ops.m, &k[i]), comm(&ops.m, &l[i])] {
            zero13 = zero13.max(max_abs(&z));
        }
        bk = bk.max(max_abs(&comm(&ops.b, &k[i])));
        bl = bl.max(max_abs(&comm(&ops.b, &l[i])));
        pk = pk.max(max_abs(&(p * &k[i] * p + &k[i])));
        pl = pl.max(max_abs(&(p * &l[i] * p - &l[i])));
        sec1 = sec1.max(max_abs(&(comm(p, &k[i]) + &k[i] * p * c(2.0))));
    }
    push("W-K-commutator".into(), wk);
    push("A-K-commutator".into(), ak);
    push("products-generators-vanishing".into(), zero13);
    push("B-K-commutator".into(), bk);
    push("B-L-commutator".into(), bl);
    push("B-parity".into(), max_abs(&comm(&ops.b, p)));
    push("m-pseudoscalar".into(), max_abs(&(p * &ops.m * p + &ops.m)));
    let pairs = [
        ("B-M", &ops.b, &ops.mm),
        ("B-W", &ops.b, &ops.w),
        ("M-W", &ops.mm, &ops.w),
        ("B-P", &ops.b, p),
        ("M-P", &ops.mm, p),
        ("W-P", &ops.w, p),
    ];
    for (name, x, y) in pairs {
        push(format!("commuting-set-{name}"), max_abs(&comm(x, y)));
    }
    push("parity-square".into(), max_abs(&(p * p - Matrix::identity(d, d))));
    push("parity-K".into(), pk);
    push("parity-L".into(), pl);
    push("parity-boost-commutator".into(), sec1);
    AuditReport {
        rep: rep.label.to_string(),
        dim: d,
        entries,
        b_scalar: scalar_value(&ops.b, 1e-10),
        m_squared_scalar: scalar_value(&ops.mm, 1e-10),
    }
}

/// Spin-0 extraction from the double boost commutator of parity.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct N0Extraction {
    pub rep: String,
    /// `‖N₀ − (4/3) W 𝒫‖`, the coefficient as printed.
    pub residual_printed: f64,
    /// `‖N₀ + (4/3) W 𝒫‖`, the sign the algebra produces.
    pub residual_consistent: f64,
    /// `‖N₁^i − (−i[𝒫, K^i])‖`, checking the first commutator.
    pub n1_residual: f64,
    /// `‖Σ_i N₂^{ii}‖`.
    pub n2_trace: f64,
    /// `‖N₂^{ij} − N₂^{ji}‖`.
    pub n2_asymmetry: f64,
    #[serde(skip)]
    pub n0: Matrix,
}

pub fn n0_extraction(rep: &LorentzRep) -> N0Extraction {
    let p = &rep.parity;
    let n1: Vec<Matrix> = rep.k.iter().map(|k| k * p * (I * 2.0)).collect();
    let n1_residual = (0..3)
        .map(|i| max_abs(&(&n1[i] - comm(p, &rep.k[i]) * (-I))))
        .fold(0.0, f64::max);
    // T^{ij} = −i[N₁^j, K^i]
    let t: Vec<Vec<Matrix>> = (0..3).map(|i| (0..3).map(|j| comm(&n1[j], &rep.k[i]) * (-I)).collect()).collect();
    let n0 = (&t[0][0] + &t[1][1] + &t[2][2]) * c(1.0 / 3.0);
    let n2 = |i: usize, j: usize| if i == j { &t[i][j] - &n0 } else { t[i][j].clone() };
    let n2_trace = max_abs(&(n2(0, 0) + n2(1, 1) + n2(2, 2)));
    let mut n2_asymmetry = 0.0f64;
    for i in 0..3 {
        for j in 0..3 {
            n2_asymmetry = n2_asymmetry.max(max_abs(&(n2(i, j) - n2(j, i))));
        }
    }
    let wp = rep.derived().w * p;
    N0Extraction {
        rep: rep.label.to_string(),
        residual_printed: max_abs(&(&n0 - &wp * c(4.0 / 3.0))),
        residual_consistent: max_abs(&(&n0 + &wp * c(4.0 / 3.0))),
        n1_residual,
        n2_trace,
        n2_asymmetry,
        n0,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn spin(s: &str) -> Spin {
        s.parse().unwrap()
    }

    #[test]
    fn vector_rep_examples() {
        let v = build_vector_rep();
        assert!(max_abs(&comm(&v.parity, &v.l[2])) == 0.0);
        assert!(max_abs(&(comm(&v.parity, &v.k[0]) + &v.k[0] * &v.parity * c(2.0))) == 0.0);
        assert!(max_abs(&(comm(&v.k[0], &v.k[1]) + &v.l[2] * I)) == 0.0);
    }

    #[test]
    fn audits_clean() {
        for rep in [
            build_vector_rep(),
            build_spin_rep(spin("1/2"), spin("1/2")).unwrap(),
            build_spin_rep(spin("1"), spin("0")).unwrap(),
            build_spin_rep(spin("3/2"), spin("1/2")).unwrap(),
        ] {
            let a = algebra_audit(&rep);
            assert!(a.max_residual() <= 1e-12, "{}: {:?}", a.rep, a.entries);
            let n = n0_extraction(&rep);
            assert!(n.residual_consistent <= 1e-12 && n.n2_trace <= 1e-12 && n.n2_asymmetry <= 1e-12);
            assert!(n.residual_printed > 0.1, "{}", n.rep);
            for li in &rep.l {
                assert!(max_abs(&(li - li.adjoint())) <= 1e-14);
            }
        }
    }

    #[test]
    fn half_half_spin_content() {
        let r = build_spin_rep(spin("1/2"), spin("1/2")).unwrap();
        let mut ev: Vec<f64> = r.l[2].diagonal().iter().map(|z| z.re).collect();
        ev.sort_by(|a, b| b.total_cmp(a));
        assert_eq!(ev, vec![1.0, 0.0, 0.0, -1.0]);
    }

    #[test]
    fn b_scalar_on_doubled_rep() {
        let a = algebra_audit(&build_spin_rep(spin("1"), spin("0")).unwrap());
        assert!(a.b_scalar.is_some());
    }

    #[test]
    fn corrupted_generator_detected() {
        let r = build_vector_rep().with_perturbed_k(0, 0, 1, 1e-3);
        assert!(algebra_audit(&r).max_residual() >= 1e-4);
    }

    #[test]
    fn labels() {
        assert_eq!("vector".parse::<RepLabel>().unwrap(), RepLabel::Vector);
        assert_eq!("1/2,1/2".parse::<RepLabel>().unwrap(), RepLabel::Spin(Spin(1), Spin(1)));
        assert_eq!("1, 0.5".parse::<RepLabel>().unwrap(), RepLabel::Spin(Spin(2), Spin(1)));
        for bad in ["1/3,0", "-1,0", "x", "1", "0.25,1", "99,0"] {
            assert!(bad.parse::<RepLabel>().is_err(), "{bad}");
        }
        assert_eq!(RepLabel::Spin(Spin(2), Spin(0)).to_string(), "(1,0)+(0,1)");
    }
}
