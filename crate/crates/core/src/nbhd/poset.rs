//! Neighbourhood posets evaluated on a probe set.

use std::collections::BTreeSet;
use std::fmt::Write as _;
use std::str::FromStr;

use crate::derived::{hom_complexes, to_proj, DObject};
use crate::quiver::Quiver;
use crate::sodtwist::ExcEmbedding;

use super::{asphericity, classify, frb_codomain_member, right_twist_min, serre_sub_preimage, Kind, NbhdError};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Flavor {
    FrbO,
    FrbOd,
    SphO,
    SphSubcat,
    FrbCodomain,
}

impl Flavor {
    pub fn name(self) -> &'static str {
        match self {
            Flavor::FrbO => "frbO",
            Flavor::FrbOd => "frbOd",
            Flavor::SphO => "sphO",
            Flavor::SphSubcat => "sph-subcat",
            Flavor::FrbCodomain => "frb-codomain",
        }
    }
}

impl FromStr for Flavor {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        Ok(match s {
            "frbO" => Flavor::FrbO,
            "frbOd" => Flavor::FrbOd,
            "sphO" => Flavor::SphO,
            "sph-subcat" => Flavor::SphSubcat,
            "frb-codomain" => Flavor::FrbCodomain,
            _ => return Err(format!("unknown flavor {s:?}")),
        })
    }
}

#[derive(Clone, Debug)]
pub struct NbhdPoset {
    pub flavor: Flavor,
    pub roster: Vec<String>,
    pub probes: Vec<String>,
    /// `membership[r][p]`: probe `p` lies in the neighbourhood of roster entry `r`
    pub membership: Vec<Vec<bool>>,
    /// `(lower, upper)` covering relations between roster entries
    pub hasse: Vec<(usize, usize)>,
    /// roster entries with identical columns
    pub equivalent: Vec<(usize, usize)>,
    /// closure of the columns under intersection and union, as sorted probe index sets
    pub lattice: Vec<Vec<usize>>,
}

impl NbhdPoset {
    pub fn column(&self, r: usize) -> &[bool] {
        &self.membership[r]
    }

    /// `column(r) ⊆ column(s)`.
    pub fn leq(&self, r: usize, s: usize) -> bool {
        self.membership[r]
            .iter()
            .zip(&self.membership[s])
            .all(|(a, b)| !a || *b)
    }

    /// FNV-1a over the probe names, so DOT files over different probe sets
    /// are distinguishable.
    pub fn probe_fingerprint(&self) -> String {
        let mut h: u64 = 0xcbf2_9ce4_8422_2325;
        for name in &self.probes {
            for b in name.bytes().chain([0]) {
                h ^= u64::from(b);
                h = h.wrapping_mul(0x0000_0100_0000_01b3);
            }
        }
        format!("{h:016x}")
    }

    pub fn to_dot(&self) -> String {
        let mut s = String::new();
        let _ = writeln!(s, "digraph nbhd {{");
        let _ = writeln!(s, "  // flavor: {}", self.flavor.name());
        let _ = writeln!(
            s,
            "  // probes: {} ({})",
            self.probes.join(","),
            self.probe_fingerprint()
        );
        for (i, name) in self.roster.iter().enumerate() {
            let _ = writeln!(s, "  n{i} [label=\"{}\"];", name.replace('"', "\\\""));
        }
        for (a, b) in &self.hasse {
            let _ = writeln!(s, "  n{a} -> n{b};");
        }
        s.push_str("}\n");
        s
    }
}

type Edges = Vec<(usize, usize)>;

/// Covering relations and equivalent pairs.
fn hasse(cols: &[Vec<bool>]) -> (Edges, Edges) {
    let n = cols.len();
    let leq = |r: usize, s: usize| cols[r].iter().zip(&cols[s]).all(|(a, b)| !a || *b);
    let lt = |r: usize, s: usize| leq(r, s) && !leq(s, r);
    let mut edges = Vec::new();
    let mut equiv = Vec::new();
    for a in 0..n {
        for b in 0..n {
            if a < b && leq(a, b) && leq(b, a) {
                equiv.push((a, b));
            }
            if lt(a, b) && !(0..n).any(|c| lt(a, c) && lt(c, b)) {
                // one representative per equivalence class on each end
                let first_a = (0..n).find(|&x| leq(x, a) && leq(a, x)).unwrap();
                let first_b = (0..n).find(|&x| leq(x, b) && leq(b, x)).unwrap();
                if first_a == a && first_b == b {
                    edges.push((a, b));
                }
            }
        }
    }
    (edges, equiv)
}

fn lattice(cols: &[Vec<bool>]) -> Vec<Vec<usize>> {
    let sets: BTreeSet<Vec<usize>> = cols
        .iter()
        .map(|c| c.iter().enumerate().filter(|(_, m)| **m).map(|(i, _)| i).collect())
        .collect();
    let mut all: BTreeSet<BTreeSet<usize>> = sets.into_iter().map(|v| v.into_iter().collect()).collect();
    loop {
        let cur: Vec<BTreeSet<usize>> = all.iter().cloned().collect();
        let mut grew = false;
        for x in &cur {
            for y in &cur {
                grew |= all.insert(x.intersection(y).copied().collect());
                grew |= all.insert(x.union(y).copied().collect());
            }
        }
        if !grew {
            break;
        }
    }
    all.into_iter().map(|s| s.into_iter().collect()).collect()
}

/// Evaluates one flavor over `roster × probes` and orders the roster by
/// inclusion of membership columns.
pub fn poset_build(
    q: &Quiver,
    emb: &ExcEmbedding,
    roster: &[(String, DObject)],
    probes: &[(String, DObject)],
    flavor: Flavor,
    seed: u64,
) -> Result<NbhdPoset, NbhdError> {
    if probes.is_empty() {
        return Err(NbhdError::NoProbes);
    }
    for (_, a) in roster {
        if !a.is_zero() && flavor != Flavor::SphSubcat {
            emb.check_image(q, a)?;
        }
    }
    let mut membership = Vec::with_capacity(roster.len());
    match flavor {
        Flavor::FrbO | Flavor::FrbOd | Flavor::SphO => {
            let tps = probes
                .iter()
                .map(|(_, b)| right_twist_min(q, emb, b))
                .collect::<Result<Vec<_>, _>>()?;
            for (_, a) in roster {
                let src = match flavor {
                    Flavor::FrbOd if !a.is_zero() => serre_sub_preimage(q, emb, a, seed)?,
                    Flavor::SphO if !a.is_zero() => {
                        let p = super::detect_in_subcategory(q, emb, a, seed)?;
                        if !matches!(p.kind, Kind::Spherelike(d) if p.cy_degree == Some(d)) {
                            return Err(NbhdError::NotSpherical(format!("{:?}", p.self_hom)));
                        }
                        a.clone()
                    }
                    _ => a.clone(),
                };
                let col = if src.is_zero() {
                    vec![true; probes.len()]
                } else {
                    let ac = to_proj(q, &src)?;
                    tps.iter()
                        .map(|tp| Ok(hom_complexes(q, &ac, tp)?.is_zero()))
                        .collect::<Result<Vec<_>, NbhdError>>()?
                };
                membership.push(col);
            }
        }
        Flavor::SphSubcat => {
            for (_, a) in roster {
                let col = if a.is_zero() {
                    vec![true; probes.len()]
                } else {
                    let dims = crate::derived::hom_graded(q, a, a)?.dims();
                    let Kind::Spherelike(d) = classify(&dims) else {
                        return Err(NbhdError::NotSpherelike { d: 0, dims });
                    };
                    let asp = asphericity(q, a, d)?;
                    probes
                        .iter()
                        .map(|(_, b)| super::sph_subcat_member(q, b, &asp))
                        .collect::<Result<Vec<_>, _>>()?
                };
                membership.push(col);
            }
        }
        Flavor::FrbCodomain => {
            let col = probes
                .iter()
                .map(|(_, b)| frb_codomain_member(q, emb, b))
                .collect::<Result<Vec<_>, _>>()?;
            membership = vec![col; roster.len()];
        }
    }
    let (hasse, equivalent) = hasse(&membership);
    Ok(NbhdPoset {
        flavor,
        roster: roster.iter().map(|(n, _)| n.clone()).collect(),
        probes: probes.iter().map(|(n, _)| n.clone()).collect(),
        lattice: lattice(&membership),
        membership,
        hasse,
        equivalent,
    })
}
