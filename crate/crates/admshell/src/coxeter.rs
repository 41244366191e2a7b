//! Coxeter-type subsets of the admissible set: sigma-supports, spherical
//! subsets K of the affine simple reflections, left-minimal coset
//! representatives, partial Coxeter elements, and the predicate comparing
//! the two subsets they carve out of Adm(mu).
//!
//! Affine nodes are indexed 0..rank for the finite simple reflections and
//! rank+c for the extra node of component c (reflection t^{theta_c^v}
//! s_{theta_c}).

use crate::adm::{build_adm, AdmPoset};
use crate::affine::{inv, length, mul, AffineElt};
use crate::poset::covers_from_leq;
use crate::root_datum::RootDatum;
use crate::AdmError;

pub fn affine_node_count(rd: &RootDatum) -> usize {
    rd.rank + rd.components.len()
}

/// The simple reflection of an affine node as a group element.
pub fn node_reflection(rd: &RootDatum, node: usize) -> AffineElt {
    if node < rd.rank {
        AffineElt::finite(rd, rd.weyl.simple[node])
    } else {
        let theta = rd.components[node - rd.rank].highest_root;
        AffineElt {
            datum_id: rd.id,
            lambda: rd.coroot_in_lattice(theta),
            z: rd.weyl.reflection_of_root[theta],
        }
    }
}

/// Pairing table of the affine diagram: entry (i,j) is the value of node
/// i's simple coroot on node j's simple root (the delta part pairs to 0).
pub fn affine_cartan(rd: &RootDatum) -> Vec<Vec<i64>> {
    let n = affine_node_count(rd);
    let root_of = |node: usize| {
        if node < rd.rank {
            node
        } else {
            rd.neg(rd.components[node - rd.rank].highest_root)
        }
    };
    (0..n)
        .map(|i| {
            let cr = &rd.roots[root_of(i)].coroot;
            (0..n)
                .map(|j| {
                    let rt = &rd.roots[root_of(j)].coords;
                    cr.iter()
                        .enumerate()
                        .map(|(k, &a)| {
                            rt.iter()
                                .enumerate()
                                .map(|(l, &b)| a * b * rd.cartan[k][l])
                                .sum::<i64>()
                        })
                        .sum()
                })
                .collect()
        })
        .collect()
}

/// Check that sigma permutes the affine nodes preserving the pairing table.
pub fn validate_sigma(rd: &RootDatum, sigma: &[usize]) -> Result<(), AdmError> {
    let n = affine_node_count(rd);
    let bad = |m: String| AdmError::Parse(m);
    if sigma.len() != n {
        return Err(bad(format!("sigma must list {n} affine node images")));
    }
    let mut seen = vec![false; n];
    for &i in sigma {
        if i >= n || seen[i] {
            return Err(bad("sigma is not a permutation of the affine nodes".into()));
        }
        seen[i] = true;
    }
    let a = affine_cartan(rd);
    for i in 0..n {
        for j in 0..n {
            if a[sigma[i]][sigma[j]] != a[i][j] {
                return Err(bad(format!(
                    "sigma does not preserve the affine pairing at nodes ({i},{j})"
                )));
            }
        }
    }
    Ok(())
}

fn left_descent(rd: &RootDatum, w: &AffineElt) -> Option<usize> {
    let l = length(rd, w);
    (0..affine_node_count(rd)).find(|&i| length(rd, &mul(rd, &node_reflection(rd, i), w)) < l)
}

/// The length-zero element tau with t^mu in W_aff * tau.
pub fn tau_of(rd: &RootDatum, mu: &[i64]) -> AffineElt {
    let mut w = AffineElt::translation(rd, mu.to_vec());
    while let Some(i) = left_descent(rd, &w) {
        w = mul(rd, &node_reflection(rd, i), &w);
    }
    w
}

/// A reduced word of an affine Weyl group element, by descent stripping.
pub fn affine_word(rd: &RootDatum, w: &AffineElt) -> Result<Vec<usize>, AdmError> {
    let mut word = Vec::new();
    let mut w = w.clone();
    while let Some(i) = left_descent(rd, &w) {
        word.push(i);
        w = mul(rd, &node_reflection(rd, i), &w);
    }
    if w != AffineElt::identity(rd) {
        return Err(AdmError::TheoremViolation(
            "element does not lie in the affine Weyl group".into(),
        ));
    }
    Ok(word)
}

/// The permutation of affine nodes induced by conjugation with the
/// length-zero element tau.
pub fn ad_tau_permutation(rd: &RootDatum, tau: &AffineElt) -> Result<Vec<usize>, AdmError> {
    let n = affine_node_count(rd);
    let tau_inv = inv(rd, tau);
    let refs: Vec<AffineElt> = (0..n).map(|i| node_reflection(rd, i)).collect();
    (0..n)
        .map(|i| {
            let c = mul(rd, &mul(rd, tau, &refs[i]), &tau_inv);
            refs.iter().position(|r| *r == c).ok_or_else(|| {
                AdmError::TheoremViolation(format!(
                    "conjugation by tau does not permute affine node {i}"
                ))
            })
        })
        .collect()
}

/// W_K is finite iff K misses at least one node of each affine component.
pub fn is_spherical(rd: &RootDatum, k: &[usize]) -> bool {
    let n = affine_node_count(rd);
    if k.iter().any(|&i| i >= n) {
        return false;
    }
    rd.components.iter().enumerate().all(|(c, comp)| {
        let nodes = (comp.offset..comp.offset + comp.rank).chain([rd.rank + c]);
        !nodes.into_iter().all(|i| k.contains(&i))
    })
}

/// Subsets of Adm(mu) attached to a length-preserving automorphism sigma
/// and a spherical K: the left-K-minimal elements with spherical
/// sigma-support, and the partial Coxeter elements among them.
pub struct CoxeterSubsets {
    pub tau: AffineElt,
    pub sigma: Vec<usize>,
    pub ad_tau: Vec<usize>,
    /// Orbit id per affine node under Ad(tau) composed with sigma.
    pub orbit: Vec<usize>,
    pub k: Vec<usize>,
    pub kadm0: Vec<AffineElt>,
    pub kadm0_covers: Vec<(usize, usize)>,
    pub kcox: Vec<AffineElt>,
    pub kcox_covers: Vec<(usize, usize)>,
    pub coxeter_type: bool,
}

fn orbit_ids(perm: &[usize]) -> Vec<usize> {
    let mut orbit = vec![usize::MAX; perm.len()];
    let mut next = 0;
    for start in 0..perm.len() {
        if orbit[start] != usize::MAX {
            continue;
        }
        let mut i = start;
        while orbit[i] == usize::MAX {
            orbit[i] = next;
            i = perm[i];
        }
        next += 1;
    }
    orbit
}

pub fn build_coxeter_subsets(
    rd: &RootDatum,
    mu: &[i64],
    sigma: Option<Vec<usize>>,
    k: &[usize],
) -> Result<CoxeterSubsets, AdmError> {
    let n = affine_node_count(rd);
    let sigma = sigma.unwrap_or_else(|| (0..n).collect());
    validate_sigma(rd, &sigma)?;
    if !is_spherical(rd, k) {
        return Err(AdmError::NotSpherical);
    }
    let adm = build_adm(rd, mu.to_vec(), None)?;
    let tau = tau_of(rd, mu);
    let ad_tau = ad_tau_permutation(rd, &tau)?;
    let pi: Vec<usize> = (0..n).map(|i| ad_tau[sigma[i]]).collect();
    let orbit = orbit_ids(&pi);

    let tau_inv = inv(rd, &tau);
    let mut kadm0_idx = Vec::new();
    let mut cox_flags = Vec::new();
    for (i, w) in adm.elements.iter().enumerate() {
        let lw = length(rd, w);
        let minimal = k
            .iter()
            .all(|&s| length(rd, &mul(rd, &node_reflection(rd, s), w)) > lw);
        if !minimal {
            continue;
        }
        let word = affine_word(rd, &mul(rd, w, &tau_inv))?;
        let mut supp: Vec<usize> = word.clone();
        supp.sort_unstable();
        supp.dedup();
        // orbit closure of the support
        let supp_sigma: Vec<usize> = (0..n)
            .filter(|&i| supp.iter().any(|&s| orbit[s] == orbit[i]))
            .collect();
        if !is_spherical(rd, &supp_sigma) {
            continue;
        }
        let mut orbits_used: Vec<usize> = word.iter().map(|&s| orbit[s]).collect();
        orbits_used.sort_unstable();
        orbits_used.dedup();
        kadm0_idx.push(i);
        cox_flags.push(word.len() == supp.len() && word.len() == orbits_used.len());
    }

    let restrict = |idx: &[usize]| -> (Vec<AffineElt>, Vec<(usize, usize)>) {
        let leq = |a: usize, b: usize| adm.poset.leq(idx[a], idx[b]);
        let covers = covers_from_leq(idx.len(), &leq);
        (idx.iter().map(|&i| adm.elements[i].clone()).collect(), covers)
    };
    let (kadm0, kadm0_covers) = restrict(&kadm0_idx);
    let cox_idx: Vec<usize> = kadm0_idx
        .iter()
        .zip(&cox_flags)
        .filter(|(_, &f)| f)
        .map(|(&i, _)| i)
        .collect();
    let (kcox, kcox_covers) = restrict(&cox_idx);
    let coxeter_type = kcox.len() == kadm0.len();
    Ok(CoxeterSubsets {
        tau,
        sigma,
        ad_tau,
        orbit,
        k: k.to_vec(),
        kadm0,
        kadm0_covers,
        kcox,
        kcox_covers,
        coxeter_type,
    })
}

/// The admissible poset a subsets computation is carved from; exposed so
/// callers can reuse it.
pub fn ambient_adm(rd: &RootDatum, mu: &[i64]) -> Result<AdmPoset, AdmError> {
    build_adm(rd, mu.to_vec(), None)
}
