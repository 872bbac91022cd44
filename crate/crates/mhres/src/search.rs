//! Search for determinantal degree vectors: global bounds, the cheap
//! necessary filter, exhaustive enumeration, permutation boxes, the data
//! characterization, pure-formula classification and the r = 1 closed form.

use crate::combinatorics::{
    critical_degree, knp_support, resultant_degrees, SystemData,
};
use crate::error::{Error, Result};

/// A coordinate box of degree vectors, tagged with the group ordering that
/// produced it (positions of groups 1..r, 0-based).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MBox {
    pub lo: Vec<i64>,
    pub hi: Vec<i64>,
    pub order: Vec<usize>,
}

impl MBox {
    pub fn is_empty(&self) -> bool {
        self.lo.iter().zip(&self.hi).any(|(a, b)| a > b)
    }

    pub fn contains(&self, m: &[i64]) -> bool {
        m.iter()
            .zip(self.lo.iter().zip(&self.hi))
            .all(|(v, (lo, hi))| lo <= v && v <= hi)
    }

    /// Doubled center coordinates (exact midpoints carry halves).
    pub fn center2(&self) -> Vec<i64> {
        self.lo.iter().zip(&self.hi).map(|(a, b)| a + b).collect()
    }
}

/// The permutation-free bound box containing every determinantal vector.
pub fn m_bounds(sys: &SystemData) -> MBox {
    let total = sys.sum_s();
    let lo = (0..sys.r).map(|k| (-sys.d[k]).max(-sys.l[k])).collect();
    let hi = (0..sys.r)
        .map(|k| sys.d[k] * total - 1 + (sys.d[k] - sys.l[k]).min(0))
        .collect();
    MBox { lo, hi, order: Vec::new() }
}

/// Cheap necessary condition: false guarantees m is not determinantal.
pub fn cheap_filter(sys: &SystemData, m: &[i64]) -> bool {
    let n = sys.n;
    let top2 = sys.s[n - 1] + sys.s[n];
    let rest: i64 = sys.s[..n.saturating_sub(1)].iter().sum();
    let first = (0..sys.r).any(|k| m[k] < sys.d[k] * top2);
    let second = (0..sys.r).any(|k| m[k] >= sys.d[k] * rest - sys.l[k]);
    first && second
}

/// Dimensions of K_2 and K_{-1}.
pub fn k2_km1_dims(sys: &SystemData, m: &[i64]) -> (i64, i64) {
    let mut k2 = 0;
    let mut km1 = 0;
    for p in 0..=sys.n + 1 {
        for e in knp_support(sys, m, p).expect("p in range") {
            if e.nu == 2 {
                k2 += e.dim * e.mult;
            } else if e.nu == -1 {
                km1 += e.dim * e.mult;
            }
        }
    }
    (k2, km1)
}

/// m is determinantal iff K_2 = K_{-1} = 0.
pub fn is_determinantal_vector(sys: &SystemData, m: &[i64]) -> bool {
    k2_km1_dims(sys, m) == (0, 0)
}

fn k0_dim(sys: &SystemData, m: &[i64]) -> i64 {
    crate::combinatorics::term_dim_at(sys, m, 0)
}

/// Scans the bound box and returns every determinantal m with its matrix
/// dimension, sorted by (dimension, m lexicographic).
pub fn enumerate_det_vectors(sys: &SystemData) -> Vec<(Vec<i64>, i64)> {
    let bounds = m_bounds(sys);
    let mut out = Vec::new();
    let mut m = bounds.lo.clone();
    loop {
        if cheap_filter(sys, &m) && is_determinantal_vector(sys, &m) {
            debug_assert!(bounds.contains(&m));
            out.push((m.clone(), k0_dim(sys, &m)));
        }
        let mut k = 0;
        loop {
            if k == sys.r {
                out.sort_by(|a, b| (a.1, &a.0).cmp(&(b.1, &b.0)));
                return out;
            }
            m[k] += 1;
            if m[k] <= bounds.hi[k] {
                break;
            }
            m[k] = bounds.lo[k];
            k += 1;
        }
    }
}

fn sum_smallest(sys: &SystemData, count: i64) -> i64 {
    let c = count.clamp(0, sys.s.len() as i64) as usize;
    sys.s[..c].iter().sum()
}

fn sum_largest(sys: &SystemData, count: i64) -> i64 {
    let c = count.clamp(0, sys.s.len() as i64) as usize;
    sys.s[sys.s.len() - c..].iter().sum()
}

/// The box of the group ordering `order` (order[pos] = group at position pos).
pub fn box_for_order(sys: &SystemData, order: &[usize]) -> MBox {
    let mut before = vec![0i64; sys.r];
    let mut acc = 0;
    for &k in order {
        before[k] = acc;
        acc += sys.l[k];
    }
    let mut lo = vec![0i64; sys.r];
    let mut hi = vec![0i64; sys.r];
    for k in 0..sys.r {
        let thru = before[k] + sys.l[k];
        lo[k] = sys.d[k] * sum_largest(sys, thru - 1) - sys.l[k];
        hi[k] = sys.d[k] * sum_smallest(sys, before[k] + 2) - 1;
    }
    MBox { lo, hi, order: order.to_vec() }
}

fn for_each_permutation(r: usize, mut f: impl FnMut(&[usize])) {
    fn rec(rest: &mut Vec<usize>, cur: &mut Vec<usize>, f: &mut impl FnMut(&[usize])) {
        if rest.is_empty() {
            f(cur);
            return;
        }
        for i in 0..rest.len() {
            let v = rest.remove(i);
            cur.push(v);
            rec(rest, cur, f);
            cur.pop();
            rest.insert(i, v);
        }
    }
    let mut rest: Vec<usize> = (0..r).collect();
    rec(&mut rest, &mut Vec::with_capacity(r), &mut f);
}

/// All nonempty permutation boxes, deduplicated by interval values.
pub fn det_boxes(sys: &SystemData) -> Vec<MBox> {
    let mut out: Vec<MBox> = Vec::new();
    for_each_permutation(sys.r, |order| {
        let b = box_for_order(sys, order);
        if !b.is_empty() && !out.iter().any(|o| o.lo == b.lo && o.hi == b.hi) {
            out.push(b);
        }
    });
    out
}

/// Whether the data admits a determinantal formula; returns a witnessing
/// group ordering when it does.
pub fn has_deter(sys: &SystemData) -> Option<Vec<usize>> {
    let mut witness = None;
    for_each_permutation(sys.r, |order| {
        if witness.is_none() && !box_for_order(sys, order).is_empty() {
            witness = Some(order.to_vec());
        }
    });
    witness
}

/// Coordinatewise test, necessary for every r and sufficient iff r <= 2.
pub fn necessary_condition_r_le_2(sys: &SystemData) -> bool {
    (0..sys.r).all(|k| {
        sys.d[k] * sum_largest(sys, sys.l[k] - 1) - sys.l[k]
            < sys.d[k] * (sys.s[0] + sys.s[1])
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PureKind {
    Sylvester,
}

/// The explicit pure-formula vectors for scaled data (s != all-ones): they
/// exist precisely for l = (1) and l = (1, 1), and are always Sylvester.
pub fn pure_vectors(sys: &SystemData) -> Result<Vec<(Vec<i64>, PureKind)>> {
    if sys.s.iter().all(|&v| v == 1) {
        return Err(Error::NotScaled);
    }
    let total = sys.sum_s();
    let out = if sys.l == [1] {
        vec![
            (vec![sys.d[0] * (sys.s[0] + sys.s[1]) - 1], PureKind::Sylvester),
            (vec![-1], PureKind::Sylvester),
        ]
    } else if sys.l == [1, 1] {
        vec![
            (vec![-1, sys.d[1] * total - 1], PureKind::Sylvester),
            (vec![sys.d[0] * total - 1, -1], PureKind::Sylvester),
        ]
    } else {
        Vec::new()
    };
    Ok(out)
}

/// Unmixed case: a pure formula exists iff min(l_k, d_k) = 1 for all k.
pub fn unmixed_pure_exists(sys: &SystemData) -> Result<bool> {
    if sys.s.iter().any(|&v| v != 1) {
        return Err(Error::NotUnmixed);
    }
    Ok((0..sys.r).all(|k| sys.l[k] == 1 || sys.d[k] == 1))
}

/// r = 1: open interval whose integer points are exactly the determinantal m.
pub fn homogeneous_interval(sys: &SystemData) -> Result<(i64, i64)> {
    if sys.r != 1 {
        return Err(Error::NotHomogeneous);
    }
    let d = sys.d[0];
    let n = sys.n as i64;
    let tail: i64 = sys.s[2.min(sys.s.len())..].iter().sum();
    Ok((d * tail - n - 1, d * (sys.s[0] + sys.s[1])))
}

/// Empirical report on minimum-dimension vectors and their distance to the
/// box centers. Distances are doubled to stay in exact integers.
#[derive(Clone, Debug)]
pub struct ProbeReport {
    pub min_dim: i64,
    pub argmins: Vec<Vec<i64>>,
    pub boxes: Vec<MBox>,
    /// For each argmin, min over boxes of the L-infinity distance to the
    /// box center, times two.
    pub center_distance2: Vec<i64>,
}

pub fn min_dim_probe(sys: &SystemData) -> Result<ProbeReport> {
    let vectors = enumerate_det_vectors(sys);
    let min_dim = vectors.first().map(|(_, d)| *d).ok_or_else(|| {
        Error::NotDeterminantal(vec![])
    })?;
    let argmins: Vec<Vec<i64>> = vectors
        .iter()
        .take_while(|(_, d)| *d == min_dim)
        .map(|(m, _)| m.clone())
        .collect();
    let boxes = det_boxes(sys);
    let center_distance2 = argmins
        .iter()
        .map(|m| {
            boxes
                .iter()
                .map(|b| {
                    b.center2()
                        .iter()
                        .zip(m)
                        .map(|(c2, v)| (2 * v - c2).abs())
                        .max()
                        .unwrap_or(0)
                })
                .min()
                .unwrap_or(0)
        })
        .collect();
    Ok(ProbeReport { min_dim, argmins, boxes, center_distance2 })
}

/// Matrix dimensions agree along the duality m -> rho - m; exposed for tests
/// and the CLI probe.
pub fn dual_pairs_consistent(sys: &SystemData) -> bool {
    let rho = critical_degree(sys);
    let found = enumerate_det_vectors(sys);
    found.iter().all(|(m, dim)| {
        let dual: Vec<i64> = rho.iter().zip(m).map(|(a, b)| a - b).collect();
        found.iter().any(|(m2, d2)| *m2 == dual && d2 == dim)
    })
}

/// Sum of per-polynomial resultant degrees; the dimension of every
/// determinantal matrix equals it only for pure Sylvester data, but the
/// total degree itself is m-independent.
pub fn total_degree(sys: &SystemData) -> i64 {
    resultant_degrees(sys).1
}
