//! Relation families among brackets, the d = 3 Tucker certificate and the
//! low-order secant checks.

use crate::brackets::{expected_s_symmetry, expected_t_symmetry, spinor_system, BracketTensor, SpinorParams, SpinorSystem};
use crate::conjugation::Symmetry;
use crate::error::{Error, Result};
use crate::kinematics::KinematicConfiguration;
use crate::linalg::{combinations, minors, pfaffian, rank, ExactMatrix, ExactTensor3};
use crate::report::SuiteReport;
use crate::scalar::GaussianRational as Q;

/// 1-based bracket lookups into a computed tensor.
struct Lookup<'a>(&'a BracketTensor);

impl Lookup<'_> {
    fn s(&self, i: usize, j: usize) -> &Q {
        self.0.s.get(i - 1, j - 1)
    }

    fn t(&self, i: usize, j: usize, k: usize) -> &Q {
        self.0.t[j - 1].get(i - 1, k - 1)
    }
}

fn all_zero<'a>(vals: impl IntoIterator<Item = &'a Q>) -> (bool, usize) {
    let mut count = 0;
    let mut ok = true;
    for v in vals {
        count += 1;
        ok &= v.is_zero();
    }
    (ok, count)
}

fn zero_check(rep: &mut SuiteReport, name: &str, claim: &str, vals: &[Q]) {
    let (ok, count) = all_zero(vals);
    let bad = vals.iter().filter(|v| !v.is_zero()).count();
    let witness = if ok { format!("{count} generators") } else { format!("{bad} of {count} nonzero") };
    rep.check_with(name, claim, ok, witness);
}

fn pf4(m: [[&Q; 4]; 4]) -> Q {
    &(&(m[0][1] * m[2][3]) - &(m[0][2] * m[1][3])) + &(m[0][3] * m[1][2])
}

/// Pfaffians of every principal `size × size` submatrix avoiding `skip`.
fn pfaffians_avoiding(m: &ExactMatrix, size: usize, skip: Option<usize>) -> Vec<Q> {
    let idx: Vec<usize> = (0..m.rows()).filter(|&i| Some(i) != skip).collect();
    if size > idx.len() {
        return vec![];
    }
    combinations(idx.len(), size)
        .into_iter()
        .map(|c| {
            let rows: Vec<usize> = c.iter().map(|&a| idx[a]).collect();
            pfaffian(&m.submatrix(&rows, &rows)).expect("principal submatrix of a skew matrix")
        })
        .collect()
}

fn minors_avoiding(m: &ExactMatrix, size: usize, skip: Option<usize>) -> Vec<Q> {
    let idx: Vec<usize> = (0..m.rows()).filter(|&i| Some(i) != skip).collect();
    if size > idx.len() {
        return vec![];
    }
    minors(&m.submatrix(&idx, &idx), size)
}

/// The matrix (|1⟩,…,z_j,…,|n⟩)ᵀ · C · P_j · (|1⟩,…,z_j,…,|n⟩) for 1-based
/// `j`. Off slot j its entries are ⟨i j k⟩, in row j they are ⟨j k⟩.
pub fn mixed_pfaffian_matrix(cfg: &KinematicConfiguration, params: &SpinorParams, j: usize) -> Result<ExactMatrix> {
    if cfg.d != 5 {
        return Err(Error::Precondition(format!("the mixed matrix is defined for d = 5, got d = {}", cfg.d)));
    }
    if j == 0 || j > cfg.n {
        return Err(Error::OutOfRange { what: "particle index", value: j, allowed: format!("1..={}", cfg.n) });
    }
    let sys = spinor_system(cfg, params)?;
    Ok(mixed_from_system(&sys, &params.z[j - 1], j))
}

fn mixed_from_system(sys: &SpinorSystem, zj: &[Q], j: usize) -> ExactMatrix {
    let size = sys.c.rows();
    let x = ExactMatrix::from_fn(size, sys.n, |r, i| if i == j - 1 { zj[r].clone() } else { sys.kets[i][r].clone() });
    x.transpose().mul(&sys.c.mul(&sys.ps[j - 1])).mul(&x)
}

/// Structural families valid for every (d, n): linear forms ΣT_j, the
/// rank-forcing Pfaffians or minors of S and of each T_j, and the rank of
/// the flattening (S, T_1, …, T_n).
fn structural(bt: &BracketTensor, conserves: bool) -> SuiteReport {
    let k = bt.d / 2;
    let mut rep = SuiteReport::default();
    if conserves {
        zero_check(&mut rep, "linear/T-sum", "entries of T_1 + ⋯ + T_n", bt.t_sum().entries());
    }
    let s_bound = 1 << k;
    let s_vals = match expected_s_symmetry(bt.d) {
        Symmetry::Symmetric => minors_avoiding(&bt.s, s_bound + 1, None),
        _ => pfaffians_avoiding(&bt.s, s_bound + 2, None),
    };
    if !s_vals.is_empty() {
        zero_check(&mut rep, "S/rank-generators", "minors or Pfaffians of S just above rank 2^k", &s_vals);
    }
    let t_bound = 1 << (k - 1);
    let mut t_vals = vec![];
    for (j, t) in bt.t.iter().enumerate() {
        t_vals.extend(match expected_t_symmetry(bt.d) {
            Symmetry::Symmetric => minors_avoiding(t, t_bound + 1, Some(j)),
            _ => pfaffians_avoiding(t, t_bound + 2, Some(j)),
        });
    }
    if !t_vals.is_empty() {
        zero_check(&mut rep, "T/rank-generators", "minors or Pfaffians of each T_j just above rank 2^(k−1)", &t_vals);
    }
    let [f1, _, _] = bt.tensor().flattenings();
    let r = rank(&f1);
    rep.check_with("flattening/rank", "(S, T_1, …, T_n) has rank ≤ 2^k", r <= s_bound, format!("rank {r}"));
    rep
}

fn curated_3_4(bt: &BracketTensor) -> SuiteReport {
    let b = Lookup(bt);
    let mut rep = SuiteReport::default();
    zero_check(&mut rep, "flatlanders/linear", "the 10 linear forms T_1 + T_2 + T_3 + T_4", bt.t_sum().entries());
    let plucker = pf4([
        [b.s(1, 1), b.s(1, 2), b.s(1, 3), b.s(1, 4)],
        [b.s(2, 1), b.s(2, 2), b.s(2, 3), b.s(2, 4)],
        [b.s(3, 1), b.s(3, 2), b.s(3, 3), b.s(3, 4)],
        [b.s(4, 1), b.s(4, 2), b.s(4, 3), b.s(4, 4)],
    ]);
    zero_check(&mut rep, "flatlanders/plucker", "⟨12⟩⟨34⟩ − ⟨13⟩⟨24⟩ + ⟨14⟩⟨23⟩", &[plucker]);
    let mut binomials = vec![];
    for j in 1..=4 {
        let rest: Vec<usize> = (1..=4).filter(|&a| a != j).collect();
        for rows in combinations(3, 2) {
            for cols in combinations(3, 2) {
                let (i, l) = (rest[rows[0]], rest[rows[1]]);
                let (kk, m) = (rest[cols[0]], rest[cols[1]]);
                binomials.push(&(b.t(i, j, kk) * b.t(l, j, m)) - &(b.t(i, j, m) * b.t(l, j, kk)));
            }
        }
    }
    zero_check(&mut rep, "flatlanders/binomials", "⟨ijk⟩⟨ljm⟩ − ⟨ijm⟩⟨ljk⟩, the 2 × 2 minors of each T_j", &binomials);
    let flat_a = &(b.s(1, 2) * b.t(3, 2, 4)) - &(b.s(3, 4) * b.t(1, 4, 2));
    let flat_b = &(&(b.s(1, 2) * b.t(2, 4, 3)) - &(b.s(1, 3) * b.t(2, 4, 2))) + &(b.s(2, 3) * b.t(1, 4, 2));
    zero_check(&mut rep, "flatlanders/bilinear-a", "⟨12⟩⟨324⟩ − ⟨34⟩⟨142⟩", &[flat_a]);
    zero_check(&mut rep, "flatlanders/bilinear-b", "⟨12⟩⟨243⟩ − ⟨13⟩⟨242⟩ + ⟨23⟩⟨142⟩", &[flat_b]);
    let [f1, _, _] = bt.tensor().flattenings();
    zero_check(&mut rep, "flatlanders/flattening-minors", "3 × 3 minors of the 4 × 20 flattening (S, T_1, …, T_4)", &minors(&f1, 3));
    rep
}

/// The cubic in ⟨ijk⟩ from the rank-4 flattening at d = 5, n = 5.
pub fn d5_cubic(bt: &BracketTensor) -> Result<Q> {
    if bt.d != 5 || bt.n < 5 {
        return Err(Error::Precondition("the cubic needs d = 5 and n >= 5".into()));
    }
    let b = Lookup(bt);
    let t = |w: [usize; 3]| b.t(w[0], w[1], w[2]).clone();
    let terms: [(i64, [usize; 3], [usize; 3], [usize; 3]); 7] = [
        (1, [2, 1, 3], [1, 2, 3], [4, 3, 5]),
        (-1, [2, 1, 3], [3, 2, 5], [1, 3, 4]),
        (1, [2, 1, 3], [3, 2, 4], [1, 3, 5]),
        (1, [3, 1, 4], [1, 2, 3], [2, 3, 5]),
        (-1, [3, 1, 4], [3, 2, 5], [1, 3, 2]),
        (-1, [3, 1, 5], [1, 2, 3], [2, 3, 4]),
        (1, [3, 1, 5], [3, 2, 4], [1, 3, 2]),
    ];
    Ok(terms.iter().fold(Q::zero(), |acc, (sign, a, b, c)| {
        let prod = &(&t(*a) * &t(*b)) * &t(*c);
        if *sign > 0 { &acc + &prod } else { &acc - &prod }
    }))
}

/// The 5 × 5 matrix with first row ⟨1k⟩ and entries ⟨i1k⟩ below, skew.
fn first_mixed_matrix(bt: &BracketTensor) -> ExactMatrix {
    let b = Lookup(bt);
    ExactMatrix::from_fn(5, 5, |r, c| {
        let (i, k) = (r + 1, c + 1);
        match (i, k) {
            _ if i == k => Q::zero(),
            (1, _) => b.s(1, k).clone(),
            (_, 1) => -b.s(1, i).clone(),
            _ if i < k => b.t(i, 1, k).clone(),
            _ => -b.t(k, 1, i).clone(),
        }
    })
}

fn curated_5_5(bt: &BracketTensor, sys: &SpinorSystem, params: &SpinorParams) -> SuiteReport {
    let b = Lookup(bt);
    let mut rep = SuiteReport::default();
    let mut t_pf = vec![];
    for j in 1..=5 {
        let rest: Vec<usize> = (1..=5).filter(|&a| a != j).collect();
        let (i, k, l, m) = (rest[0], rest[1], rest[2], rest[3]);
        let v = &(&(b.t(i, j, k) * b.t(l, j, m)) - &(b.t(i, j, l) * b.t(k, j, m))) + &(b.t(i, j, m) * b.t(k, j, l));
        t_pf.push(v);
    }
    zero_check(&mut rep, "d5/T-pfaffians", "⟨ijk⟩⟨ljm⟩ − ⟨ijl⟩⟨kjm⟩ + ⟨ijm⟩⟨kjl⟩ for each j", &t_pf);
    let mut bilinear = vec![];
    for i in 1..=5 {
        let rest: Vec<usize> = (1..=5).filter(|&a| a != i).collect();
        for c in combinations(4, 3) {
            let (j, k, l) = (rest[c[0]], rest[c[1]], rest[c[2]]);
            let v = &(&(b.s(i, j) * b.t(k, i, l)) - &(b.s(i, k) * b.t(j, i, l))) + &(b.s(i, l) * b.t(j, i, k));
            bilinear.push(v);
        }
    }
    zero_check(&mut rep, "d5/bilinear-pfaffians", "⟨ij⟩⟨kil⟩ − ⟨ik⟩⟨jil⟩ + ⟨il⟩⟨jik⟩, 20 quadrics", &bilinear);
    let special = first_mixed_matrix(bt);
    zero_check(
        &mut rep,
        "d5/special-slice-pfaffians",
        "4 × 4 Pfaffians of the matrix with rows (0, ⟨1k⟩) and (−⟨1i⟩, ⟨i1k⟩)",
        &pfaffians_avoiding(&special, 4, None),
    );
    let mixed_agrees = mixed_from_system(sys, &params.z[0], 1) == special;
    rep.check("d5/special-slice-is-mixed", "that matrix equals the mixed matrix for slot 1", mixed_agrees);
    let cubic = d5_cubic(bt).expect("d = 5, n = 5");
    zero_check(&mut rep, "d5/cubic", "⟨213⟩⟨123⟩⟨435⟩ − ⟨213⟩⟨325⟩⟨134⟩ + ⋯ + ⟨315⟩⟨324⟩⟨132⟩", &[cubic]);
    let st = bt.tensor();
    let printed: Vec<Q> = [0, 1].iter().flat_map(|&i| minors(&st.first_index_slice(i), 4)).collect();
    zero_check(&mut rep, "d5/slice-minors-printed", "4 × 4 minors of the 6 × 5 slices ST[1,:,:] and ST[2,:,:]", &printed);
    let all: Vec<Q> = (0..5).flat_map(|i| minors(&st.first_index_slice(i), 4)).collect();
    zero_check(&mut rep, "d5/slice-minors", "4 × 4 minors of every slice ST[i,:,:]", &all);
    rep
}

fn mixed_checks(sys: &SpinorSystem, bt: &BracketTensor, params: &SpinorParams) -> SuiteReport {
    let mut rep = SuiteReport::default();
    let b = Lookup(bt);
    let mut rank_ok = true;
    let mut entries_ok = true;
    let mut worst = 0;
    for j in 1..=sys.n {
        let m = mixed_from_system(sys, &params.z[j - 1], j);
        let r = rank(&m);
        worst = worst.max(r);
        rank_ok &= r <= 2 && m.is_skew_symmetric();
        for i in 1..=sys.n {
            for k in 1..=sys.n {
                let want = if i == j && k == j {
                    Q::zero()
                } else if i == j {
                    b.s(j, k).clone()
                } else if k == j {
                    -b.s(j, i).clone()
                } else {
                    b.t(i, j, k).clone()
                };
                entries_ok &= m.get(i - 1, k - 1) == &want;
            }
        }
    }
    rep.check_with("mixed/rank", "each mixed matrix is skew of rank ≤ 2", rank_ok, format!("max rank {worst}"));
    rep.check("mixed/entries", "mixed matrix entries are ⟨jk⟩ in slot j and ⟨ijk⟩ elsewhere", entries_ok);
    rep
}

/// Ranks of the n × (n+1) slices obtained by fixing the first index and by
/// fixing the last index.
pub fn slice_rank_report(st: &ExactTensor3) -> (Vec<usize>, Vec<usize>) {
    let [a, _, c] = st.dims();
    let first = (0..a).map(|i| rank(&st.first_index_slice(i))).collect();
    let last = (0..c).map(|k| rank(&st.last_index_slice(k))).collect();
    (first, last)
}

/// Every relation family known for (d, n): structural families always,
/// curated lists at (3, 4) and (5, 5), mixed matrices and slice ranks at d = 5.
pub fn relation_residuals(cfg: &KinematicConfiguration, params: &SpinorParams) -> Result<SuiteReport> {
    let sys = spinor_system(cfg, params)?;
    let bt = BracketTensor::from_system(&sys);
    let mut rep = SuiteReport::new(None, Some(cfg.d), Some(cfg.n));
    rep.extend(structural(&bt, cfg.conserves));
    if cfg.d == 3 && cfg.n == 4 {
        rep.extend(curated_3_4(&bt));
    }
    if cfg.d == 5 {
        rep.extend(mixed_checks(&sys, &bt, params));
        let (first, last) = slice_rank_report(&bt.tensor());
        let worst = first.iter().chain(&last).copied().max().unwrap_or(0);
        rep.check_with("d5/slice-ranks", "first- and last-index slices of ST have rank ≤ 3", worst <= 3, format!("max rank {worst}"));
        if cfg.n == 5 {
            rep.extend(curated_5_5(&bt, &sys, params));
        }
    }
    Ok(rep)
}

/// Exact Tucker certificate at d = 3: S = U₁ᵀK₁U₁ and
/// T_j = U₁ᵀ(−p_{j3}K₂ + (p_{j1}+p_{j2})K₃ + (p_{j1}−p_{j2})K₄)U₁ with U₁ the
/// 2 × n matrix of kets, plus the rank-one factorization of each T_j.
pub fn tucker_certify_d3(cfg: &KinematicConfiguration, params: &SpinorParams) -> Result<SuiteReport> {
    if cfg.d != 3 {
        return Err(Error::Precondition(format!("the Tucker certificate is for d = 3, got d = {}", cfg.d)));
    }
    let sys = spinor_system(cfg, params)?;
    let bt = BracketTensor::from_system(&sys);
    let n = cfg.n;
    let u1 = ExactMatrix::from_fn(2, n, |r, i| sys.kets[i][r].clone());
    let k = [
        ExactMatrix::from_int_rows(&[[0, 1], [-1, 0]]),
        ExactMatrix::from_int_rows(&[[0, 1], [1, 0]]),
        ExactMatrix::from_int_rows(&[[1, 0], [0, 0]]),
        ExactMatrix::from_int_rows(&[[0, 0], [0, 1]]),
    ];
    let mut rep = SuiteReport::new(None, Some(3), Some(n));
    rep.check("tucker/S", "S = U₁ᵀ K₁ U₁", u1.transpose().mul(&k[0]).mul(&u1) == bt.s);
    let mut t_ok = true;
    let mut outer_ok = true;
    let mut rank_ok = true;
    let mut zero_ok = true;
    for j in 0..n {
        let p = cfg.p(j);
        let sum = &p[0] + &p[1];
        let core = k[1].scale(&-p[2].clone()).add(&k[2].scale(&sum)).add(&k[3].scale(&(&p[0] - &p[1])));
        t_ok &= u1.transpose().mul(&core).mul(&u1) == bt.t[j];
        let u = ExactMatrix::from_rows(vec![vec![sum.clone(), -p[2].clone()]])?;
        let v = u.mul(&u1);
        outer_ok &= v.transpose().mul(&v) == bt.t[j].scale(&sum);
        zero_ok &= v.get(0, j).is_zero();
        rank_ok &= rank(&bt.t[j]) <= 1 && bt.t[j].is_symmetric();
    }
    rep.check("tucker/T", "T_j = U₁ᵀ(−p_{j3}K₂ + (p_{j1}+p_{j2})K₃ + (p_{j1}−p_{j2})K₄)U₁", t_ok);
    rep.check("tucker/outer-product", "(p_{j1}+p_{j2}) T_j = (u_jU₁)ᵀ(u_jU₁) with u_j = (p_{j1}+p_{j2}, −p_{j3})", outer_ok);
    rep.check("tucker/zero-coordinate", "the j-th coordinate of u_jU₁ vanishes", zero_ok);
    rep.check("tucker/rank-one", "each T_j is symmetric of rank ≤ 1", rank_ok);
    let [f1, _, _] = bt.tensor().flattenings();
    let fr = rank(&f1);
    rep.check_with("tucker/flattening", "(S, T_1, …, T_n) has rank ≤ 2", fr <= 2, format!("rank {fr}"));
    let ml = bt.tensor().multilinear_rank();
    let within = ml[0] <= 2 && ml[1] <= 4 && ml[2] <= 2;
    rep.check_with("tucker/multilinear-rank", "multilinear rank ≤ (2, 4, 2)", within, format!("{ml:?}"));
    Ok(rep)
}

/// Order-two containment: 4 × 4 Pfaffians of S at d = 3, 6 × 6 Pfaffians at
/// d = 4, 5, symmetric zero-diagonal rank ≤ 8 at d = 6, 7.
pub fn secant_membership(cfg: &KinematicConfiguration, params: &SpinorParams) -> Result<SuiteReport> {
    let sys = spinor_system(cfg, params)?;
    let s = sys.s_matrix();
    let r = rank(&s);
    let mut rep = SuiteReport::new(None, Some(cfg.d), Some(cfg.n));
    match cfg.d {
        3 => {
            zero_check(&mut rep, "pfaffians-4", "4 × 4 Pfaffians of S vanish", &pfaffians_avoiding(&s, 4, None));
            rep.check_with("rank", "S has rank 2", r == 2, format!("rank {r}"));
        }
        4 | 5 => {
            let pf = pfaffians_avoiding(&s, 6, None);
            if !pf.is_empty() {
                zero_check(&mut rep, "pfaffians-6", "6 × 6 Pfaffians of S vanish", &pf);
            }
            rep.check_with("rank", "S has rank ≤ 4", r <= 4, format!("rank {r}"));
        }
        6 | 7 => {
            let diag = (0..cfg.n).all(|i| s.get(i, i).is_zero());
            rep.check("symmetric-zero-diagonal", "S is symmetric with zero diagonal", s.is_symmetric() && diag);
            rep.check_with("rank", "S has rank ≤ 8", r <= 8, format!("rank {r}"));
        }
        d => {
            let bound = 1usize << (d / 2);
            rep.check_with("rank", "S has rank ≤ 2^k", r <= bound, format!("rank {r}"));
        }
    }
    Ok(rep)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::analysis::sample_trial;
    use crate::brackets::build_bracket_tensor;
    use crate::linalg::determinant;

    #[test]
    fn flatlanders_families_vanish() {
        for t in 0..3 {
            let (cfg, params) = sample_trial(3, 4, 21, t).unwrap();
            let rep = relation_residuals(&cfg, &params).unwrap();
            assert!(rep.all_passed(), "{rep}");
            assert!(rep.find("flatlanders/bilinear-a").is_some());
        }
    }

    #[test]
    fn d5_families_vanish() {
        let (cfg, params) = sample_trial(5, 5, 22, 0).unwrap();
        let rep = relation_residuals(&cfg, &params).unwrap();
        assert!(rep.all_passed(), "{rep}");
        assert!(rep.find("d5/cubic").unwrap().passed);
    }

    #[test]
    fn families_detect_a_perturbed_point() {
        // Moving one momentum off conservation breaks the linear forms and
        // the flattening relations but is still a valid bracket evaluation.
        let (mut cfg, params) = sample_trial(3, 4, 23, 0).unwrap();
        cfg.momenta[0] = cfg.momenta[0].scaled(&Q::from_int(2));
        let rep = relation_residuals(&cfg, &params).unwrap();
        assert!(!rep.find("flatlanders/linear").unwrap().passed);
    }

    #[test]
    fn mixed_matrix_rank_two_for_six_particles() {
        let (cfg, params) = sample_trial(5, 6, 24, 0).unwrap();
        let m = mixed_pfaffian_matrix(&cfg, &params, 3).unwrap();
        assert!(m.is_skew_symmetric());
        assert!(rank(&m) <= 2);
        let bt = build_bracket_tensor(&cfg, &params).unwrap();
        assert_eq!(m.get(0, 4), bt.t[2].get(0, 4));
        assert_eq!(m.get(2, 4), bt.s.get(2, 4));
        assert!(mixed_pfaffian_matrix(&cfg, &params, 0).is_err());
    }

    #[test]
    fn mixed_matrix_rejects_other_dimensions() {
        let (cfg, params) = sample_trial(4, 5, 25, 0).unwrap();
        assert!(mixed_pfaffian_matrix(&cfg, &params, 1).is_err());
    }

    #[test]
    fn cubic_matches_a_minor_expansion() {
        // The cubic is a signed sum of degree-3 products; check it is not
        // identically zero off the variety.
        let bt = BracketTensor {
            d: 5,
            n: 5,
            symmetry: crate::brackets::SymmetryLabels { s: "skew".into(), t: "skew".into() },
            s: ExactMatrix::zeros(5, 5),
            t: (0..5).map(|j| ExactMatrix::from_fn(5, 5, |i, k| Q::from_int((i * 7 + j * 3 + k * k) as i64 % 5 - 2))).collect(),
        };
        assert!(!d5_cubic(&bt).unwrap().is_zero());
    }

    #[test]
    fn tucker_certificate_holds() {
        for n in 4..=6 {
            let (cfg, params) = sample_trial(3, n, 26, 0).unwrap();
            let rep = tucker_certify_d3(&cfg, &params).unwrap();
            assert!(rep.all_passed(), "{rep}");
        }
    }

    #[test]
    fn slice_ranks_at_d5() {
        let (cfg, params) = sample_trial(5, 6, 27, 0).unwrap();
        let bt = build_bracket_tensor(&cfg, &params).unwrap();
        let (first, last) = slice_rank_report(&bt.tensor());
        assert!(first.iter().chain(&last).all(|&r| r <= 3));
        assert!(first.contains(&3));
    }

    #[test]
    fn secant_cases() {
        let (cfg, params) = sample_trial(3, 6, 28, 0).unwrap();
        let rep = secant_membership(&cfg, &params).unwrap();
        assert!(rep.all_passed(), "{rep}");
        assert_eq!(rep.find("rank").unwrap().witness.as_deref(), Some("rank 2"));
        for (d, n) in [(5, 7), (6, 9)] {
            let (cfg, params) = sample_trial(d, n, 28, 1).unwrap();
            assert!(secant_membership(&cfg, &params).unwrap().all_passed());
        }
    }

    #[test]
    fn pf4_matches_pfaffian() {
        let m = ExactMatrix::from_fn(4, 4, |i, j| match i.cmp(&j) {
            std::cmp::Ordering::Less => Q::from_int((i * 4 + j) as i64 + 1),
            std::cmp::Ordering::Greater => -Q::from_int((j * 4 + i) as i64 + 1),
            _ => Q::zero(),
        });
        let e = |i: usize, j: usize| m.get(i, j);
        let v = pf4([[e(0, 0), e(0, 1), e(0, 2), e(0, 3)], [e(1, 0), e(1, 1), e(1, 2), e(1, 3)], [e(2, 0), e(2, 1), e(2, 2), e(2, 3)], [e(3, 0), e(3, 1), e(3, 2), e(3, 3)]]);
        assert_eq!(v, pfaffian(&m).unwrap());
        assert_eq!(&v * &v, determinant(&m).unwrap());
    }
}
