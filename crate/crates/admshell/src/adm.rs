//! Admissible sets: the poset of elements below some translation t^{a(mu)},
//! its augmentation by a synthetic top, the edge labeling, and the
//! weight-criterion machinery used to locate lexicographically minimal
//! chains.
//!
//! The Bruhat order on the extended affine Weyl group is decided by the
//! weight criterion: w <= w' iff some presentation x' t^{lambda'} y' of w'
//! satisfies wt(x,x') + wt(y'^{-1},y^{-1}) <= lambda' - lambda, where
//! x t^lambda y is an acute presentation of w.

use std::collections::HashMap;

use crate::affine::{
    acute_presentations, assemble, check_same_datum, cocovers_bruteforce, covers_classified,
    is_acute, length, reflection_between, AffRoot, AffineElt, MoveCase, Presentation,
};
use crate::labeling::{build_label_set, Label, LabelSet, ReflectionOrder};
use crate::poset::Poset;
use crate::qbg::{build_qbg, leq_coordwise, QbGraph};
use crate::root_datum::RootDatum;
use crate::weyl::{ParabolicData, WeylElt};
use crate::AdmError;

/// Largest admitted poset length <mu, 2rho>.
pub const DEFAULT_LENGTH_CAP: i64 = 48;

#[derive(Debug)]
pub struct AdmPoset {
    pub datum_id: u64,
    /// Dominant cocharacter, in lattice coordinates.
    pub mu: Vec<i64>,
    /// Optional coatom bound: keep only t^{a(mu)} with a <= v.
    pub v: Option<WeylElt>,
    /// <mu, 2rho> = common length of the coatoms.
    pub mu_two_rho: i64,
    pub qbg: QbGraph,
    /// J = {i | <mu, alpha_i> = 0}, the stabilizer parabolic of mu.
    pub par: ParabolicData,
    pub labels: LabelSet,
    /// Poset indices 0..n-1, sorted by (length, element); index n is the
    /// adjoined top.
    pub elements: Vec<AffineElt>,
    index: HashMap<AffineElt, usize>,
    /// (representative a in W^J, poset index of t^{a(mu)}), in W^J order.
    pub coatoms: Vec<(WeylElt, usize)>,
    coatom_rep: HashMap<usize, WeylElt>,
    pub hat0: usize,
    pub hat1: usize,
    pub poset: Poset,
}

/// t^{a(mu)} as an affine element.
pub fn translation_of(rd: &RootDatum, a: WeylElt, mu: &[i64]) -> AffineElt {
    AffineElt::translation(rd, rd.weyl.act_lattice(rd, a, mu))
}

/// Bruhat order on the extended affine Weyl group via the weight criterion.
pub fn bruhat_leq(
    rd: &RootDatum,
    g: &QbGraph,
    a: &AffineElt,
    b: &AffineElt,
) -> Result<bool, AdmError> {
    check_same_datum(rd, a, b)?;
    if a == b {
        return Ok(true);
    }
    if length(rd, a) >= length(rd, b) {
        return Ok(false);
    }
    if rd.coset_tag(&a.lambda) != rd.coset_tag(&b.lambda) {
        return Ok(false);
    }
    let weyl = &rd.weyl;
    let p = acute_presentations(rd, a)
        .into_iter()
        .next()
        .ok_or_else(|| AdmError::NoWitness(format!("no acute presentation of {a:?}")))?;
    let yi = weyl.inv(p.y);
    for x2 in 0..weyl.size() {
        let x2i = weyl.inv(x2);
        let lam2 = weyl.act_lattice(rd, x2i, &b.lambda);
        let y2 = weyl.mul(x2i, b.z);
        let diff: Vec<i64> = lam2.iter().zip(&p.lambda).map(|(&l2, &l)| l2 - l).collect();
        let Some(diff) = rd.to_coroot_coords(&diff) else {
            continue;
        };
        let sum: Vec<i64> = g
            .wt(p.x, x2)
            .iter()
            .zip(g.wt(weyl.inv(y2), yi))
            .map(|(&u, &v)| u + v)
            .collect();
        if leq_coordwise(&sum, &diff) {
            return Ok(true);
        }
    }
    Ok(false)
}

pub fn build_adm(
    rd: &RootDatum,
    mu: Vec<i64>,
    v: Option<WeylElt>,
) -> Result<AdmPoset, AdmError> {
    build_adm_with(rd, mu, v, ReflectionOrder::canonical(rd), DEFAULT_LENGTH_CAP)
}

pub fn build_adm_with(
    rd: &RootDatum,
    mu: Vec<i64>,
    v: Option<WeylElt>,
    order: ReflectionOrder,
    length_cap: i64,
) -> Result<AdmPoset, AdmError> {
    if !rd.is_dominant(&mu) {
        return Err(AdmError::NotDominant);
    }
    let mu_two_rho = rd.pair_two_rho(&mu);
    if mu_two_rho > length_cap {
        return Err(AdmError::CapExceeded(format!(
            "<mu,2rho> = {mu_two_rho} exceeds length cap {length_cap}"
        )));
    }
    let weyl = &rd.weyl;
    let j: Vec<usize> = (0..rd.rank).filter(|&i| rd.pair(&mu, i) == 0).collect();
    let par = ParabolicData::new(weyl, j);
    let reps: Vec<WeylElt> = par
        .min_reps
        .iter()
        .copied()
        .filter(|&a| v.map_or(true, |v| weyl.bruhat_leq(a, v)))
        .collect();

    // downward cover closure from the coatoms
    let mut set: HashMap<AffineElt, ()> = HashMap::new();
    let mut queue: Vec<AffineElt> = Vec::new();
    for &a in &reps {
        let t = translation_of(rd, a, &mu);
        debug_assert_eq!(length(rd, &t), mu_two_rho);
        if set.insert(t.clone(), ()).is_none() {
            queue.push(t);
        }
    }
    let mut cover_pairs: Vec<(AffineElt, AffineElt)> = Vec::new();
    while let Some(w) = queue.pop() {
        for c in cocovers_bruteforce(rd, &w) {
            cover_pairs.push((c.clone(), w.clone()));
            if set.insert(c.clone(), ()).is_none() {
                queue.push(c);
            }
        }
    }

    let mut elements: Vec<AffineElt> = set.into_keys().collect();
    elements.sort_by_key(|w| (length(rd, w), w.clone()));
    let index: HashMap<AffineElt, usize> = elements
        .iter()
        .enumerate()
        .map(|(i, w)| (w.clone(), i))
        .collect();
    let n = elements.len();
    let hat1 = n;

    let mut rank: Vec<u32> = elements.iter().map(|w| length(rd, w) as u32).collect();
    rank.push((mu_two_rho + 1) as u32);
    let mut covers: Vec<(usize, usize)> = cover_pairs
        .iter()
        .map(|(lo, hi)| (index[lo], index[hi]))
        .collect();
    let coatoms: Vec<(WeylElt, usize)> = reps
        .iter()
        .map(|&a| (a, index[&translation_of(rd, a, &mu)]))
        .collect();
    for &(_, ci) in &coatoms {
        covers.push((ci, hat1));
    }
    let poset = Poset::new(n + 1, &covers, rank);

    // unique minimal element of length zero
    let minimal = poset.minimal_elements();
    if minimal != [0] || poset.rank[0] != 0 {
        return Err(AdmError::TheoremViolation(format!(
            "expected a unique length-zero minimum, found minimal set {minimal:?}"
        )));
    }
    // the coatoms are exactly the maximal elements below the top
    for x in 0..n {
        let is_coatom = poset.covers_up[x] == [hat1];
        debug_assert_eq!(
            is_coatom,
            poset.rank[x] as i64 == mu_two_rho,
            "maximal elements must be the translations t^{{a(mu)}}"
        );
    }

    let coatom_rep = coatoms.iter().map(|&(a, ci)| (ci, a)).collect();
    Ok(AdmPoset {
        datum_id: rd.id,
        mu,
        v,
        mu_two_rho,
        qbg: build_qbg(rd),
        labels: build_label_set(&par, order),
        par,
        elements,
        index,
        coatoms,
        coatom_rep,
        hat0: 0,
        hat1,
        poset,
    })
}

impl AdmPoset {
    pub fn size(&self) -> usize {
        self.elements.len()
    }

    pub fn position(&self, w: &AffineElt) -> Option<usize> {
        self.index.get(w).copied()
    }

    /// W^J representative of a coatom poset index.
    pub fn coatom_of(&self, idx: usize) -> Option<WeylElt> {
        self.coatom_rep.get(&idx).copied()
    }

    /// Label of the cover lo <. hi in the augmented poset.
    pub fn edge_label(&self, rd: &RootDatum, lo: usize, hi: usize) -> Result<Label, AdmError> {
        if !self.poset.covers_up[lo].contains(&hi) {
            return Err(AdmError::NotACover);
        }
        if hi == self.hat1 {
            let a = self.coatom_rep[&lo];
            return self.labels.eta_of(a).ok_or(AdmError::NotACover);
        }
        reflection_between(rd, &self.elements[lo], &self.elements[hi])
            .map(Label::Root)
            .ok_or(AdmError::NotACover)
    }

    /// Weight-criterion order on elements; used to cross-check the poset's
    /// cover-closure order.
    pub fn leq_elts(
        &self,
        rd: &RootDatum,
        a: &AffineElt,
        b: &AffineElt,
    ) -> Result<bool, AdmError> {
        bruhat_leq(rd, &self.qbg, a, b)
    }
}

#[derive(Debug)]
pub struct SigmaData {
    pub w: usize,
    pub pres: Presentation,
    /// Sigma_w, as finite Weyl group elements.
    pub sigma: Vec<WeylElt>,
    /// Sigma_w^J, as W^J representatives.
    pub sigma_j: Vec<WeylElt>,
    pub z_min: WeylElt,
    pub a_min: WeylElt,
}

impl AdmPoset {
    /// The sets Sigma_w and Sigma_w^J with their unique minima, computed from
    /// an acute presentation of w and cross-checked against the poset order.
    pub fn sigma_data(
        &self,
        rd: &RootDatum,
        w: usize,
        pres: &Presentation,
    ) -> Result<SigmaData, AdmError> {
        if w >= self.size() || self.poset.rank[w] as i64 >= self.mu_two_rho {
            return Err(AdmError::NotInAdm);
        }
        if !is_acute(rd, pres) {
            return Err(AdmError::NotAcute);
        }
        if assemble(rd, pres) != self.elements[w] {
            return Err(AdmError::NotInAdm);
        }
        let weyl = &rd.weyl;
        let diff: Vec<i64> = self
            .mu
            .iter()
            .zip(&pres.lambda)
            .map(|(&m, &l)| m - l)
            .collect();
        let diff = rd
            .to_coroot_coords(&diff)
            .ok_or(AdmError::IncomparableCosets)?;
        let yi = weyl.inv(pres.y);
        let sigma: Vec<WeylElt> = (0..weyl.size())
            .filter(|&z| {
                let s: Vec<i64> = self
                    .qbg
                    .wt(pres.x, z)
                    .iter()
                    .zip(self.qbg.wt(z, yi))
                    .map(|(&u, &v)| u + v)
                    .collect();
                leq_coordwise(&s, &diff)
            })
            .collect();
        let mut sigma_j: Vec<WeylElt> = sigma
            .iter()
            .map(|&z| self.par.project(weyl, z))
            .collect();
        sigma_j.sort_unstable();
        sigma_j.dedup();

        let z_min = unique_minimum(weyl, &sigma)
            .ok_or_else(|| AdmError::MinNotUnique(format!("Sigma_w at poset index {w}")))?;
        let a_min = unique_minimum(weyl, &sigma_j)
            .ok_or_else(|| AdmError::MinNotUnique(format!("Sigma_w^J at poset index {w}")))?;
        if self.par.project(weyl, z_min) != a_min {
            return Err(AdmError::TheoremViolation(format!(
                "z_min = {} is not in a_min W_J, a_min = {}",
                weyl.name(z_min),
                weyl.name(a_min)
            )));
        }
        // a_min is presentation-independent and must stay below the bound;
        // z_min need not (it depends on the presentation), but the poset is
        // downward closed, so the chain through t^{a_min(mu)} stays inside
        if let Some(v) = self.v {
            if !weyl.bruhat_leq(a_min, v) {
                return Err(AdmError::TheoremViolation(format!(
                    "a_min = {} is not below the bound v = {}",
                    weyl.name(a_min),
                    weyl.name(v)
                )));
            }
        }
        // Sigma_w^J = {a | w <= t^{a(mu)}}, checked against the poset order
        for &(a, ci) in &self.coatoms {
            if sigma_j.contains(&a) != self.poset.leq(w, ci) {
                return Err(AdmError::TheoremViolation(format!(
                    "Sigma_w^J disagrees with the poset order at a = {}",
                    weyl.name(a)
                )));
            }
        }
        Ok(SigmaData {
            w,
            pres: pres.clone(),
            sigma,
            sigma_j,
            z_min,
            a_min,
        })
    }
}

/// The unique Bruhat minimum of a set, if it exists.
fn unique_minimum(weyl: &crate::weyl::WeylGroup, set: &[WeylElt]) -> Option<WeylElt> {
    let m = *set.first()?;
    // elements are listed in a length-refining order, so set[0] is the only
    // candidate; it must actually be below everything
    set.iter().all(|&o| weyl.bruhat_leq(m, o)).then_some(m)
}

#[derive(Debug)]
pub struct TopTwoData {
    pub w: usize,
    /// Poset indices of the two translation covers.
    pub covers: [usize; 2],
    pub z1: WeylElt,
    pub z2: WeylElt,
    pub lambda: Vec<i64>,
    /// wt(z1, z2) in simple-coroot coordinates.
    pub weight: Vec<i64>,
    /// Classification of each covering edge.
    pub cases: Vec<(usize, AffRoot, MoveCase)>,
}

impl AdmPoset {
    /// Structure of the layer directly below the coatoms: every element
    /// there is covered by exactly two translations, witnessed by an acute
    /// presentation z1 t^{mu - wt(z1,z2)} z2^{-1} along a graph edge z1 -> z2.
    pub fn top_two(&self, rd: &RootDatum) -> Result<Vec<TopTwoData>, AdmError> {
        if self.v.is_some() {
            return Err(AdmError::TheoremViolation(
                "top-two structure requires the unrestricted poset".into(),
            ));
        }
        let weyl = &rd.weyl;
        let mut out = Vec::new();
        for w in 0..self.size() {
            if self.poset.rank[w] as i64 != self.mu_two_rho - 1 {
                continue;
            }
            let ups = &self.poset.covers_up[w];
            let both_translations = ups
                .iter()
                .all(|&c| self.elements[c].is_translation(rd));
            if ups.len() != 2 || !both_translations {
                return Err(AdmError::TheoremViolation(format!(
                    "element at index {w} has covers {ups:?}, expected two translations"
                )));
            }
            let mut found = None;
            for p in acute_presentations(rd, &self.elements[w]) {
                let (z1, z2) = (p.x, weyl.inv(p.y));
                if !self.qbg.has_edge(z1, z2) {
                    continue;
                }
                let diff: Vec<i64> = self
                    .mu
                    .iter()
                    .zip(&p.lambda)
                    .map(|(&m, &l)| m - l)
                    .collect();
                let Some(diff) = rd.to_coroot_coords(&diff) else {
                    continue;
                };
                if self.qbg.wt(z1, z2) != diff.as_slice() || self.in_phi_j(rd, &diff) {
                    continue;
                }
                // the classification also lists covers outside the
                // admissible set; only the two translations stay inside
                let cases: Vec<(usize, AffRoot, MoveCase)> = covers_classified(rd, &p)?
                    .into_iter()
                    .filter_map(|(w2, r, case, _)| {
                        self.position(&w2).map(|i| (i, r, case))
                    })
                    .collect();
                if cases.iter().map(|&(i, _, _)| i).collect::<Vec<_>>() != ups.as_slice() {
                    return Err(AdmError::TheoremViolation(format!(
                        "in-poset covers of index {w} differ from its poset covers"
                    )));
                }
                found = Some(TopTwoData {
                    w,
                    covers: [ups[0], ups[1]],
                    z1,
                    z2,
                    lambda: p.lambda.clone(),
                    weight: diff,
                    cases,
                });
                break;
            }
            out.push(found.ok_or_else(|| {
                AdmError::TheoremViolation(format!(
                    "no acute presentation of index {w} witnesses an edge z1 -> z2"
                ))
            })?);
        }
        Ok(out)
    }

    /// Whether a coroot-coordinate vector is the coroot of a root of Phi_J.
    fn in_phi_j(&self, rd: &RootDatum, gamma: &[i64]) -> bool {
        (0..rd.num_positive).any(|r| {
            rd.roots[r].coroot == gamma
                && rd.roots[r]
                    .coords
                    .iter()
                    .enumerate()
                    .all(|(i, &c)| c == 0 || self.par.j.contains(&i))
        })
    }
}

#[derive(Debug)]
pub struct QbgPath {
    /// Graph edges (from, to, move case), from x to y^{-1}.
    pub edges: Vec<(WeylElt, WeylElt, MoveCase)>,
    /// Total weight in simple-coroot coordinates; equals mu - lambda.
    pub weight: Vec<i64>,
    /// The element a*u where the x-leg meets the y-leg.
    pub junction: WeylElt,
}

impl AdmPoset {
    /// Convert a maximal chain of [w, t^{a(mu)}] (top-down poset indices)
    /// into a graph path from x to y^{-1}, threading the cover
    /// classification up the chain.
    pub fn chain_to_qbg_path(
        &self,
        rd: &RootDatum,
        chain: &[usize],
        pres: &Presentation,
    ) -> Result<QbgPath, AdmError> {
        let weyl = &rd.weyl;
        if !is_acute(rd, pres) {
            return Err(AdmError::NotAcute);
        }
        let bottom = *chain.last().ok_or(AdmError::NotACover)?;
        if assemble(rd, pres) != self.elements[bottom] {
            return Err(AdmError::WitnessMismatch(
                "presentation does not assemble to the chain's bottom".into(),
            ));
        }
        let mut cur = pres.clone();
        let mut x_edges: Vec<(WeylElt, WeylElt, MoveCase)> = Vec::new();
        let mut y_edges: Vec<(WeylElt, WeylElt, MoveCase)> = Vec::new();
        for step in (0..chain.len() - 1).rev() {
            let target = &self.elements[chain[step]];
            let hit = covers_classified(rd, &cur)?
                .into_iter()
                .find(|(w2, _, _, _)| w2 == target)
                .ok_or_else(|| {
                    AdmError::CaseClassificationFailed(format!(
                        "chain step to index {} is not a classified cover",
                        chain[step]
                    ))
                })?;
            let (_, _, case, next) = hit;
            match case {
                MoveCase::BruhatX | MoveCase::QuantumX => {
                    x_edges.push((cur.x, next.x, case));
                }
                MoveCase::BruhatY | MoveCase::QuantumY => {
                    y_edges.push((weyl.inv(next.y), weyl.inv(cur.y), case));
                }
            }
            cur = next;
        }
        // at the top t^{a(mu)} the presentation is (a*u, mu, (a*u)^{-1})
        let junction = cur.x;
        debug_assert_eq!(weyl.inv(cur.y), junction);
        debug_assert_eq!(weyl.act_lattice(rd, junction, &cur.lambda), {
            let top = &self.elements[chain[0]];
            top.lambda.clone()
        });
        y_edges.reverse();
        let mut edges = x_edges;
        edges.extend(y_edges);

        let diff: Vec<i64> = cur
            .lambda
            .iter()
            .zip(&pres.lambda)
            .map(|(&t, &b)| t - b)
            .collect();
        let weight = rd
            .to_coroot_coords(&diff)
            .ok_or(AdmError::IncomparableCosets)?;
        // wt(x, y^{-1}) <= mu - lambda
        let yi = weyl.inv(pres.y);
        if !leq_coordwise(self.qbg.wt(pres.x, yi), &weight) {
            return Err(AdmError::TheoremViolation(format!(
                "wt(x, y^-1) exceeds mu - lambda for chain bottom {bottom}"
            )));
        }
        Ok(QbgPath {
            edges,
            weight,
            junction,
        })
    }
}
