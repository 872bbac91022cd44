//! The Weyman complex K(l, d, s, m): terms K_nu as lists of cohomology
//! summands in the compact (c_q, e_p) encoding, term dimensions, text
//! rendering and the dual vector.

use crate::combinatorics::{
    critical_degree, for_each_subset, kunneth_dim, q_of, z_in_pk, SystemData,
};
use crate::error::Result;
use serde::Serialize;
use std::collections::BTreeMap;

/// One cohomology summand H^{q}(m - z*d) sitting inside K_{nu,p}, tagged with
/// its index set e_p and the groups c_q contributing top cohomology.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CohSummand {
    pub p: usize,
    pub z: i64,
    pub nu: i64,
    /// Groups with top cohomology (0-based); sum of their l_k equals p - nu.
    pub cq: Vec<usize>,
    /// Polynomial index set of size p.
    pub ep: Vec<usize>,
    pub twist: Vec<i64>,
    pub dim: i64,
}

#[derive(Clone, Debug)]
pub struct WeymanComplex {
    pub data: SystemData,
    pub m: Vec<i64>,
    /// Nonzero terms only; summands sorted by (p, z, e_p).
    pub terms: BTreeMap<i64, Vec<CohSummand>>,
}

/// Builds the complex by enumerating every index set of every cardinality.
pub fn make_complex(sys: &SystemData, m: &[i64]) -> Result<WeymanComplex> {
    sys.check_m(m)?;
    let mut terms: BTreeMap<i64, Vec<CohSummand>> = BTreeMap::new();
    for p in 0..=sys.n + 1 {
        for_each_subset(sys.n + 1, p, |idx| {
            let z: i64 = idx.iter().map(|&i| sys.s[i]).sum();
            if (0..sys.r).any(|k| z_in_pk(sys, m, k, z)) {
                return;
            }
            let (q, dim) = kunneth_dim(sys, m, z).expect("nonzero summand");
            debug_assert_eq!(q, q_of(sys, m, z));
            let summand = CohSummand {
                p,
                z,
                nu: p as i64 - q,
                cq: (0..sys.r).filter(|&k| m[k] - z * sys.d[k] < -sys.l[k]).collect(),
                ep: idx.to_vec(),
                twist: (0..sys.r).map(|k| m[k] - z * sys.d[k]).collect(),
                dim,
            };
            terms.entry(summand.nu).or_default().push(summand);
        });
    }
    for list in terms.values_mut() {
        list.sort_by(|a, b| (a.p, a.z, &a.ep).cmp(&(b.p, b.z, &b.ep)));
    }
    Ok(WeymanComplex { data: sys.clone(), m: m.to_vec(), terms })
}

impl WeymanComplex {
    /// dim K_nu; zero outside the stored range.
    pub fn term_dim(&self, nu: i64) -> i64 {
        self.terms.get(&nu).map(|v| v.iter().map(|s| s.dim).sum()).unwrap_or(0)
    }

    pub fn summands(&self, nu: i64) -> &[CohSummand] {
        self.terms.get(&nu).map(Vec::as_slice).unwrap_or(&[])
    }

    /// "K_{1,2} -> K_{0,1}" style rendering, highest term first.
    pub fn format_blocks(&self) -> String {
        let mut parts = Vec::new();
        for (&nu, list) in self.terms.iter().rev() {
            let mut ps: Vec<usize> = list.iter().map(|s| s.p).collect();
            ps.dedup();
            let labels: Vec<String> =
                ps.iter().map(|p| format!("K_{{{nu},{p}}}")).collect();
            parts.push(labels.join(" + "));
        }
        parts.join(" -> ")
    }

    /// "H^1(1,-3) + H^1(0,-4)^2 -> ..." style rendering with multiplicities.
    pub fn format_cohs(&self) -> String {
        let mut parts = Vec::new();
        for (_, list) in self.terms.iter().rev() {
            let mut pieces: Vec<(usize, Vec<i64>, i64, usize)> = Vec::new();
            for s in list {
                let q = (s.p as i64 - s.nu) as usize;
                match pieces.last_mut() {
                    Some(last) if last.0 == q && last.1 == s.twist && last.2 == s.dim => {
                        last.3 += 1
                    }
                    _ => pieces.push((q, s.twist.clone(), s.dim, 1)),
                }
            }
            let labels: Vec<String> = pieces
                .iter()
                .map(|(q, twist, _, count)| {
                    let tw = twist
                        .iter()
                        .map(|t| t.to_string())
                        .collect::<Vec<_>>()
                        .join(",");
                    if *count > 1 {
                        format!("H^{q}({tw})^{count}")
                    } else {
                        format!("H^{q}({tw})")
                    }
                })
                .collect();
            parts.push(labels.join(" + "));
        }
        parts.join(" -> ")
    }

    pub fn to_json(&self) -> serde_json::Value {
        #[derive(Serialize)]
        struct SummandJson<'a> {
            p: usize,
            z: i64,
            cq: Vec<usize>,
            ep: &'a [usize],
            twist: &'a [i64],
            dim: i64,
        }
        #[derive(Serialize)]
        struct TermJson<'a> {
            nu: i64,
            summands: Vec<SummandJson<'a>>,
        }
        let terms: Vec<TermJson> = self
            .terms
            .iter()
            .rev()
            .map(|(&nu, list)| TermJson {
                nu,
                summands: list
                    .iter()
                    .map(|s| SummandJson {
                        p: s.p,
                        z: s.z,
                        cq: s.cq.iter().map(|k| k + 1).collect(),
                        ep: &s.ep,
                        twist: &s.twist,
                        dim: s.dim,
                    })
                    .collect(),
            })
            .collect();
        serde_json::json!({ "m": self.m, "terms": terms })
    }
}

/// The dual degree vector rho - m; K_nu(m) is dual to K_{1-nu}(rho - m).
pub fn dual_vector(sys: &SystemData, m: &[i64]) -> Vec<i64> {
    critical_degree(sys).iter().zip(m).map(|(r, v)| r - v).collect()
}
