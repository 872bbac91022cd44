//! Integer combinatorics of scaled multihomogeneous systems: cohomology
//! dimensions on products of projective spaces, the index sets S_p, P_k, Q_p,
//! the level function q, critical degree and resultant degrees.

use crate::error::{Error, Result};
use num_integer::Integer;

/// The data (l, d, s) of a scaled system, with n = sum(l) and r = len(l).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SystemData {
    pub l: Vec<i64>,
    pub d: Vec<i64>,
    pub s: Vec<i64>,
    pub n: usize,
    pub r: usize,
}

/// Validates raw tuples and derives n, r. Rejects instead of normalizing.
pub fn validate_system(l: &[i64], d: &[i64], s: &[i64]) -> Result<SystemData> {
    if l.is_empty() || l.iter().any(|&v| v <= 0) {
        return Err(Error::NonPositiveEntry("l"));
    }
    if d.len() != l.len() {
        return Err(Error::BadTupleLength { what: "d", expected: l.len(), got: d.len() });
    }
    if d.iter().any(|&v| v <= 0) {
        return Err(Error::NonPositiveEntry("d"));
    }
    if s.iter().any(|&v| v <= 0) {
        return Err(Error::NonPositiveEntry("s"));
    }
    let n: i64 = l.iter().sum();
    let n = n as usize;
    if s.len() != n + 1 {
        return Err(Error::LengthMismatch { expected: n + 1, got: s.len() });
    }
    if s.windows(2).any(|w| w[0] > w[1]) {
        return Err(Error::UnsortedScales);
    }
    let g = s.iter().fold(0i64, |acc, &v| acc.gcd(&v));
    if g != 1 {
        return Err(Error::ScaleGcd(g));
    }
    Ok(SystemData { l: l.to_vec(), d: d.to_vec(), s: s.to_vec(), n, r: l.len() })
}

impl SystemData {
    pub fn sum_s(&self) -> i64 {
        self.s.iter().sum()
    }

    /// Checks length(m) == r.
    pub fn check_m(&self, m: &[i64]) -> Result<()> {
        if m.len() != self.r {
            return Err(Error::BadTupleLength { what: "m", expected: self.r, got: m.len() });
        }
        Ok(())
    }
}

/// rho_k = d_k * sum(s) - l_k - 1.
pub fn critical_degree(sys: &SystemData) -> Vec<i64> {
    let total = sys.sum_s();
    (0..sys.r).map(|k| sys.d[k] * total - sys.l[k] - 1).collect()
}

/// Exact binomial coefficient; zero outside the Pascal triangle.
pub fn binomial(a: i64, k: i64) -> i64 {
    if k < 0 || a < 0 || k > a {
        return 0;
    }
    let k = k.min(a - k);
    let mut acc: i128 = 1;
    for i in 0..k {
        acc = acc * (a - i) as i128 / (i as i128 + 1);
    }
    i64::try_from(acc).expect("binomial overflow")
}

/// n! / (l_1! ... l_r!) for n = sum(l).
pub fn multinomial(l: &[i64]) -> i64 {
    let mut acc: i128 = 1;
    let mut seen = 0i64;
    for &lk in l {
        for j in 1..=lk {
            seen += 1;
            acc = acc * seen as i128 / j as i128;
        }
    }
    i64::try_from(acc).expect("multinomial overflow")
}

/// Dimension of the single nonzero cohomology of O(alpha) on P^l, with its
/// index: (Some(0), C(alpha+l, l)) for alpha >= 0, (Some(l), C(-alpha-1, l))
/// for alpha < -l, and (None, 0) in the vanishing window -l <= alpha < 0.
pub fn bott_dim(l: i64, alpha: i64) -> (Option<i64>, i64) {
    if alpha >= 0 {
        (Some(0), binomial(alpha + l, l))
    } else if alpha < -l {
        (Some(l), binomial(-alpha - 1, l))
    } else {
        (None, 0)
    }
}

/// Product of the per-group Bott dimensions at twist m - z*d, together with
/// the total cohomology index; None if some group lies in its vanishing window.
pub fn kunneth_dim(sys: &SystemData, m: &[i64], z: i64) -> Option<(i64, i64)> {
    let mut q = 0;
    let mut dim = 1i64;
    for k in 0..sys.r {
        let alpha = m[k] - z * sys.d[k];
        let (j, dk) = bott_dim(sys.l[k], alpha);
        match j {
            None => return None,
            Some(jk) => {
                q += jk;
                dim *= dk;
            }
        }
    }
    Some((q, dim))
}

/// Calls `f` on every p-element subset of 0..=n, in lexicographic order.
pub fn for_each_subset(n1: usize, p: usize, mut f: impl FnMut(&[usize])) {
    fn rec(n1: usize, p: usize, start: usize, cur: &mut Vec<usize>, f: &mut impl FnMut(&[usize])) {
        if cur.len() == p {
            f(cur);
            return;
        }
        let need = p - cur.len();
        for i in start..n1 {
            if n1 - i < need {
                break;
            }
            cur.push(i);
            rec(n1, p, i + 1, cur, f);
            cur.pop();
        }
    }
    let mut cur = Vec::with_capacity(p);
    rec(n1, p, 0, &mut cur, &mut f);
}

/// S_p: sorted distinct sums of p entries of s chosen by index; S_0 = {0}.
pub fn sum_set(sys: &SystemData, p: usize) -> Result<Vec<i64>> {
    if p > sys.n + 1 {
        return Err(Error::OutOfRange("p"));
    }
    let mut sums = Vec::new();
    for_each_subset(sys.n + 1, p, |idx| {
        sums.push(idx.iter().map(|&i| sys.s[i]).sum());
    });
    sums.sort_unstable();
    sums.dedup();
    Ok(sums)
}

/// P_k < z, i.e. z > (m_k + l_k) / d_k; valid for empty P_k as well.
pub fn pk_lt(sys: &SystemData, m: &[i64], k: usize, z: i64) -> bool {
    z * sys.d[k] > m[k] + sys.l[k]
}

/// P_k > z, i.e. z <= m_k / d_k; valid for empty P_k as well.
pub fn pk_gt(sys: &SystemData, m: &[i64], k: usize, z: i64) -> bool {
    z * sys.d[k] <= m[k]
}

/// z lies in P_k = (m_k/d_k, (m_k+l_k)/d_k].
pub fn z_in_pk(sys: &SystemData, m: &[i64], k: usize, z: i64) -> bool {
    !pk_lt(sys, m, k, z) && !pk_gt(sys, m, k, z)
}

/// The integers of P_k, possibly empty.
pub fn pk_interval(sys: &SystemData, m: &[i64], k: usize) -> Vec<i64> {
    let lo = m[k].div_floor(&sys.d[k]) + 1;
    let hi = (m[k] + sys.l[k]).div_floor(&sys.d[k]);
    (lo..=hi).collect()
}

/// q(z) = sum of l_k over the groups with P_k < z. Total on all of ZZ.
pub fn q_of(sys: &SystemData, m: &[i64], z: i64) -> i64 {
    (0..sys.r).filter(|&k| pk_lt(sys, m, k, z)).map(|k| sys.l[k]).sum()
}

/// One nonzero contribution to K_{nu,p}: the sum value z, the level nu,
/// the cohomology dimension of a single summand, and how many index sets
/// realize z.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct KnpEntry {
    pub z: i64,
    pub nu: i64,
    pub dim: i64,
    pub mult: i64,
}

/// All z in Q_p with the induced (nu, dim, multiplicity); sorted by z.
pub fn knp_support(sys: &SystemData, m: &[i64], p: usize) -> Result<Vec<KnpEntry>> {
    sys.check_m(m)?;
    if p > sys.n + 1 {
        return Err(Error::OutOfRange("p"));
    }
    let mut mult = std::collections::BTreeMap::<i64, i64>::new();
    for_each_subset(sys.n + 1, p, |idx| {
        let z: i64 = idx.iter().map(|&i| sys.s[i]).sum();
        *mult.entry(z).or_insert(0) += 1;
    });
    let mut out = Vec::new();
    for (z, count) in mult {
        if (0..sys.r).any(|k| z_in_pk(sys, m, k, z)) {
            continue;
        }
        let (q, dim) = kunneth_dim(sys, m, z)
            .expect("z outside all P_k must have nonzero cohomology");
        out.push(KnpEntry { z, nu: p as i64 - q, dim, mult: count });
    }
    Ok(out)
}

/// dim K_{nu} = sum over p and z of dim * mult at the given nu.
pub fn term_dim_at(sys: &SystemData, m: &[i64], nu: i64) -> i64 {
    let mut total = 0;
    for p in 0..=sys.n + 1 {
        for e in knp_support(sys, m, p).expect("p in range") {
            if e.nu == nu {
                total += e.dim * e.mult;
            }
        }
    }
    total
}

/// Per-polynomial degrees of the resultant and their sum.
pub fn resultant_degrees(sys: &SystemData) -> (Vec<i64>, i64) {
    let base = multinomial(&sys.l) as i128
        * sys
            .l
            .iter()
            .zip(&sys.d)
            .map(|(&lk, &dk)| (dk as i128).pow(lk as u32))
            .product::<i128>();
    let prod_s: i128 = sys.s.iter().map(|&v| v as i128).product();
    let per: Vec<i64> = sys
        .s
        .iter()
        .map(|&si| i64::try_from(base * prod_s / si as i128).expect("degree overflow"))
        .collect();
    let total = per.iter().sum();
    (per, total)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sys_ex5() -> SystemData {
        validate_system(&[1, 1], &[1, 1], &[1, 1, 2]).unwrap()
    }

    fn sys_ex44() -> SystemData {
        validate_system(&[2], &[2], &[1, 1, 1]).unwrap()
    }

    #[test]
    fn validate_examples() {
        let s = sys_ex5();
        assert_eq!((s.n, s.r), (2, 2));
        let s = sys_ex44();
        assert_eq!((s.n, s.r), (2, 1));
        assert_eq!(
            validate_system(&[1, 1], &[1, 1], &[2, 2, 2]),
            Err(Error::ScaleGcd(2))
        );
        assert_eq!(
            validate_system(&[1, 1], &[1, 1], &[1, 2, 1]),
            Err(Error::UnsortedScales)
        );
        assert_eq!(
            validate_system(&[1, 1], &[1, 1], &[1, 1, 1, 1]),
            Err(Error::LengthMismatch { expected: 3, got: 4 })
        );
        assert_eq!(
            validate_system(&[1, 0], &[1, 1], &[1, 1, 2]),
            Err(Error::NonPositiveEntry("l"))
        );
    }

    #[test]
    fn critical_degree_examples() {
        assert_eq!(critical_degree(&sys_ex5()), vec![2, 2]);
        assert_eq!(critical_degree(&sys_ex44()), vec![3]);
        let s = validate_system(&[1], &[1], &[1, 1]).unwrap();
        assert_eq!(critical_degree(&s), vec![0]);
    }

    #[test]
    fn bott_examples() {
        assert_eq!(bott_dim(1, 3), (Some(0), 4));
        assert_eq!(bott_dim(1, -3), (Some(1), 2));
        // C(3,2) = 3, cross-checked against the unmixed cubic block sizes.
        assert_eq!(bott_dim(2, -4), (Some(2), 3));
        assert_eq!(bott_dim(1, -1), (None, 0));
        // Exactly one branch fires for every alpha.
        for l in 1..4 {
            for alpha in -8..8 {
                let (j, dim) = bott_dim(l, alpha);
                match j {
                    Some(0) => assert!(alpha >= 0 && dim > 0),
                    Some(jl) => {
                        assert_eq!(jl, l);
                        assert!(alpha < -l && dim > 0);
                    }
                    None => assert!(alpha >= -l && alpha < 0 && dim == 0),
                }
            }
        }
    }

    #[test]
    fn sum_set_examples() {
        let s = sys_ex5();
        // Brute-force oracle: all C(3,2) index pairs of (1,1,2).
        let mut oracle = vec![1 + 1, 1 + 2, 1 + 2];
        oracle.sort_unstable();
        oracle.dedup();
        assert_eq!(sum_set(&s, 2).unwrap(), oracle);
        assert_eq!(sum_set(&s, 2).unwrap(), vec![2, 3]);
        assert_eq!(sum_set(&s, 0).unwrap(), vec![0]);
        let u = sys_ex44();
        assert_eq!(sum_set(&u, 2).unwrap(), vec![2]);
        assert!(sum_set(&u, 4).is_err());
    }

    #[test]
    fn sum_set_cardinality_bounds() {
        for (l, d, s) in [
            (vec![1i64, 1], vec![1i64, 1], vec![1i64, 2, 3]),
            (vec![2], vec![1], vec![1, 1, 2]),
            (vec![1, 2], vec![2, 1], vec![1, 1, 2, 3]),
        ] {
            let sys = validate_system(&l, &d, &s).unwrap();
            for p in 0..=sys.n + 1 {
                let sp = sum_set(&sys, p).unwrap();
                assert!(sp.len() >= 1);
                assert!(sp.len() as i64 <= binomial(sys.n as i64 + 1, p as i64));
            }
        }
        // Unmixed data has S_p = {p}.
        let sys = validate_system(&[1, 2], &[1, 1], &[1, 1, 1, 1]).unwrap();
        for p in 0..=sys.n + 1 {
            assert_eq!(sum_set(&sys, p).unwrap(), vec![p as i64]);
        }
    }

    #[test]
    fn pk_examples() {
        let s = sys_ex5();
        let m = [2, 0];
        assert_eq!(pk_interval(&s, &m, 0), vec![3]);
        assert_eq!(pk_interval(&s, &m, 1), vec![1]);
        let e = validate_system(&[1], &[2], &[1, 1]).unwrap();
        assert_eq!(pk_interval(&e, &[0], 0), Vec::<i64>::new());
        // Predicates stay valid on the empty interval.
        assert!(pk_lt(&e, &[0], 0, 1));
        assert!(pk_gt(&e, &[0], 0, 0));
        // #P_k <= ceil(l_k / d_k).
        for m0 in -4..8 {
            let c = pk_interval(&e, &[m0], 0).len() as i64;
            assert!(c <= (e.l[0] + e.d[0] - 1) / e.d[0]);
        }
    }

    #[test]
    fn q_of_examples() {
        let s = sys_ex5();
        let m = [2, 0];
        assert_eq!(q_of(&s, &m, 2), 1);
        assert_eq!(q_of(&s, &m, 4), 2);
        assert_eq!(q_of(&s, &m, 0), 0);
    }

    #[test]
    fn knp_examples() {
        let s = sys_ex5();
        let m = [2, 0];
        assert_eq!(
            knp_support(&s, &m, 3).unwrap(),
            vec![KnpEntry { z: 4, nu: 1, dim: 3, mult: 1 }]
        );
        assert_eq!(
            knp_support(&s, &m, 2).unwrap(),
            vec![KnpEntry { z: 2, nu: 1, dim: 1, mult: 1 }]
        );
        assert_eq!(
            knp_support(&s, &m, 0).unwrap(),
            vec![KnpEntry { z: 0, nu: 0, dim: 3, mult: 1 }]
        );
    }

    // Independent oracle: enumerate all index sets and multiply per-group
    // Bott dimensions directly, without the Q_p shortcut.
    fn knp_oracle(sys: &SystemData, m: &[i64], p: usize) -> Vec<KnpEntry> {
        let mut by_z = std::collections::BTreeMap::<i64, (i64, i64, i64)>::new();
        for_each_subset(sys.n + 1, p, |idx| {
            let z: i64 = idx.iter().map(|&i| sys.s[i]).sum();
            let mut dim = 1i64;
            let mut q = 0i64;
            for k in 0..sys.r {
                let (j, dk) = bott_dim(sys.l[k], m[k] - z * sys.d[k]);
                dim *= dk;
                q += j.unwrap_or(0);
            }
            if dim != 0 {
                let e = by_z.entry(z).or_insert((q, dim, 0));
                assert_eq!((e.0, e.1), (q, dim));
                e.2 += 1;
            }
        });
        by_z
            .into_iter()
            .map(|(z, (q, dim, mult))| KnpEntry { z, nu: p as i64 - q, dim, mult })
            .collect()
    }

    #[test]
    fn knp_matches_oracle() {
        let systems = [
            validate_system(&[1, 1], &[1, 1], &[1, 1, 2]).unwrap(),
            validate_system(&[2], &[2], &[1, 1, 1]).unwrap(),
            validate_system(&[1, 2], &[2, 1], &[1, 2, 2, 3]).unwrap(),
        ];
        for sys in &systems {
            for trial in 0..40 {
                let m: Vec<i64> = (0..sys.r)
                    .map(|k| ((trial * 7 + k * 13) % 11) as i64 - 3)
                    .collect();
                for p in 0..=sys.n + 1 {
                    assert_eq!(
                        knp_support(sys, &m, p).unwrap(),
                        knp_oracle(sys, &m, p),
                        "sys {:?} m {:?} p {}",
                        sys,
                        m,
                        p
                    );
                }
            }
        }
    }

    #[test]
    fn term_dim_duality() {
        // sum_p dim K_{nu,p}(m) = sum_p dim K_{1-nu,p}(rho - m).
        let systems = [sys_ex5(), sys_ex44()];
        for sys in &systems {
            let rho = critical_degree(sys);
            for trial in 0..30 {
                let m: Vec<i64> = (0..sys.r)
                    .map(|k| ((trial * 5 + k * 3) % 9) as i64 - 2)
                    .collect();
                let dual: Vec<i64> = rho.iter().zip(&m).map(|(a, b)| a - b).collect();
                for nu in -(sys.n as i64)..=(sys.n as i64 + 1) {
                    assert_eq!(
                        term_dim_at(sys, &m, nu),
                        term_dim_at(sys, &dual, 1 - nu)
                    );
                }
            }
        }
    }

    #[test]
    fn resultant_degree_examples() {
        let (per, total) = resultant_degrees(&sys_ex5());
        assert_eq!(per, vec![4, 4, 2]);
        assert_eq!(total, 10);
        let (per, total) = resultant_degrees(&sys_ex44());
        assert_eq!(per, vec![4, 4, 4]);
        assert_eq!(total, 12);
        let lin = validate_system(&[1], &[1], &[1, 1]).unwrap();
        let (per, total) = resultant_degrees(&lin);
        assert_eq!(per, vec![1, 1]);
        assert_eq!(total, 2);
    }
}
