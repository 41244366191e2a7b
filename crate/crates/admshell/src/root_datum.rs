//! Based root data: roots, coroots, the pairing with the cocharacter lattice,
//! and the finite Weyl group acting on everything.
//!
//! Roots are stored in simple-root coordinates, coroots in simple-coroot
//! coordinates; both are integer vectors. Cocharacters live in the chosen
//! lattice basis. The positive roots are enumerated in a fixed order
//! (height, then lexicographic), and every deterministic output downstream
//! depends on that order.

use std::collections::HashMap;
use std::sync::atomic::{AtomicU64, Ordering};

use crate::cartan::{cartan_matrix, positive_root_count, CartanSpec, Family, Lattice};
use crate::linalg;
use crate::weyl::WeylGroup;
use crate::AdmError;

static NEXT_DATUM_ID: AtomicU64 = AtomicU64::new(1);

#[derive(Debug, Clone)]
pub struct Root {
    /// Coordinates in the simple-root basis.
    pub coords: Vec<i64>,
    /// Coordinates of the coroot in the simple-coroot basis.
    pub coroot: Vec<i64>,
    pub component: usize,
    pub height: i64,
}

#[derive(Debug, Clone)]
pub struct Component {
    pub family: Family,
    pub rank: usize,
    /// First simple-root index of this component.
    pub offset: usize,
    /// Index of the highest root in the positive-root list.
    pub highest_root: usize,
}

#[derive(Debug)]
pub struct RootDatum {
    pub id: u64,
    pub spec: CartanSpec,
    /// Finite rank (number of simple roots).
    pub rank: usize,
    /// Rank of the cocharacter lattice X_*.
    pub lattice_rank: usize,
    pub components: Vec<Component>,
    pub cartan: Vec<Vec<i64>>,
    /// All roots, positives first; root `i + num_positive` is the negative of root `i`.
    pub roots: Vec<Root>,
    pub num_positive: usize,
    root_index: HashMap<Vec<i64>, usize>,
    /// `pairing[b][j]` = pairing of lattice basis vector b with simple root j.
    pub pairing: Vec<Vec<i64>>,
    /// `coroot_basis[i]` = the i-th simple coroot in lattice coordinates.
    pub coroot_basis: Vec<Vec<i64>>,
    /// Hermite basis of the coroot lattice inside X_*, for coset tags.
    coroot_hnf: Vec<Vec<i64>>,
    /// 2*rho = sum of positive roots, in simple-root coordinates.
    pub two_rho: Vec<i64>,
    pub weyl: WeylGroup,
}

pub fn build_root_datum(spec: CartanSpec) -> Result<RootDatum, AdmError> {
    build_root_datum_bounded(spec, 1_000_000)
}

pub fn build_root_datum_bounded(
    spec: CartanSpec,
    weyl_bound: usize,
) -> Result<RootDatum, AdmError> {
    if spec.components.is_empty() {
        return Err(AdmError::UnknownType("empty type".into()));
    }
    // assemble the block-diagonal Cartan matrix
    let mut components = Vec::new();
    let mut cartan_blocks = Vec::new();
    let mut rank = 0usize;
    for &(family, r) in &spec.components {
        let block = cartan_matrix(family, r)?;
        components.push((family, r, rank));
        cartan_blocks.push(block);
        rank += r;
    }
    let mut cartan = vec![vec![0i64; rank]; rank];
    for ((_, r, off), block) in components.iter().zip(&cartan_blocks) {
        for i in 0..*r {
            for j in 0..*r {
                cartan[off + i][off + j] = block[i][j];
            }
        }
    }

    // reflection closure, tracking (root, coroot) pairs per component
    let comp_of = |coords: &[i64]| -> usize {
        let j = coords.iter().position(|&c| c != 0).unwrap();
        components
            .iter()
            .position(|&(_, r, off)| j >= off && j < off + r)
            .unwrap()
    };
    let mut pos: Vec<(Vec<i64>, Vec<i64>)> = Vec::new();
    let mut seen: HashMap<Vec<i64>, usize> = HashMap::new();
    for i in 0..rank {
        let mut c = vec![0i64; rank];
        let mut d = vec![0i64; rank];
        c[i] = 1;
        d[i] = 1;
        seen.insert(c.clone(), pos.len());
        pos.push((c, d));
    }
    let mut head = 0;
    while head < pos.len() {
        let (c, d) = pos[head].clone();
        head += 1;
        for i in 0..rank {
            // s_i(alpha) = alpha - <alpha, alpha_i^v> alpha_i
            let pair_c: i64 = (0..rank).map(|j| c[j] * cartan[i][j]).sum();
            let mut nc = c.clone();
            nc[i] -= pair_c;
            if nc.iter().all(|&x| x <= 0) {
                continue;
            }
            if !seen.contains_key(&nc) {
                // s_i(alpha^v) = alpha^v - <alpha_i, alpha^v> alpha_i^v
                let pair_d: i64 = (0..rank).map(|j| d[j] * cartan[j][i]).sum();
                let mut nd = d.clone();
                nd[i] -= pair_d;
                seen.insert(nc.clone(), pos.len());
                pos.push((nc, nd));
            }
        }
    }
    // Height ascending, then descending lex so that at height 1 the simple
    // root alpha_i lands at index i.
    pos.sort_by(|a, b| {
        let ha: i64 = a.0.iter().sum();
        let hb: i64 = b.0.iter().sum();
        ha.cmp(&hb).then(b.0.cmp(&a.0))
    });
    for (i, r) in pos.iter().take(rank).enumerate() {
        debug_assert!(
            r.0.iter().enumerate().all(|(j, &c)| c == i64::from(i == j)),
            "simple roots must occupy indices 0..rank"
        );
    }
    let num_positive = pos.len();
    let expected: usize = spec
        .components
        .iter()
        .map(|&(f, r)| positive_root_count(f, r))
        .sum();
    debug_assert_eq!(num_positive, expected, "positive root count mismatch");

    let mut roots = Vec::with_capacity(2 * num_positive);
    for (c, d) in &pos {
        roots.push(Root {
            coords: c.clone(),
            coroot: d.clone(),
            component: comp_of(c),
            height: c.iter().sum(),
        });
    }
    for (c, d) in &pos {
        roots.push(Root {
            coords: c.iter().map(|x| -x).collect(),
            coroot: d.iter().map(|x| -x).collect(),
            component: comp_of(c),
            height: -c.iter().sum::<i64>(),
        });
    }
    let root_index: HashMap<Vec<i64>, usize> = roots
        .iter()
        .enumerate()
        .map(|(i, r)| (r.coords.clone(), i))
        .collect();

    // highest root per component: unique maximal height
    let mut comps = Vec::new();
    for (ci, &(family, r, offset)) in components.iter().enumerate() {
        let mut best = None;
        for (i, root) in roots[..num_positive].iter().enumerate() {
            if root.component == ci
                && best.map_or(true, |b: usize| roots[b].height < root.height)
            {
                best = Some(i);
            }
        }
        let highest_root = best.unwrap();
        let ties = roots[..num_positive]
            .iter()
            .filter(|x| x.component == ci && x.height == roots[highest_root].height)
            .count();
        debug_assert_eq!(ties, 1, "highest root must be unique");
        comps.push(Component {
            family,
            rank: r,
            offset,
            highest_root,
        });
    }

    let two_rho = (0..rank)
        .map(|j| roots[..num_positive].iter().map(|r| r.coords[j]).sum())
        .collect::<Vec<i64>>();

    // lattice: pairing matrix and coroot embedding
    let (pairing, coroot_basis) = match &spec.lattice {
        Lattice::Sc => {
            let p = cartan.clone();
            let r = (0..rank)
                .map(|i| {
                    let mut e = vec![0i64; rank];
                    e[i] = 1;
                    e
                })
                .collect();
            (p, r)
        }
        Lattice::Ad => {
            // basis = fundamental coweights; pairing with alpha_j is coordinate j
            let p = (0..rank)
                .map(|i| {
                    let mut e = vec![0i64; rank];
                    e[i] = 1;
                    e
                })
                .collect();
            let r = cartan.clone();
            (p, r)
        }
        Lattice::Gl => {
            if spec.components.len() != 1 || spec.components[0].0 != Family::A {
                return Err(AdmError::InvalidLattice(
                    "gl lattice requires a single A-type component".into(),
                ));
            }
            let n = rank + 1;
            let mut p = vec![vec![0i64; rank]; n];
            for i in 0..n {
                for j in 0..rank {
                    if i == j {
                        p[i][j] = 1;
                    } else if i == j + 1 {
                        p[i][j] = -1;
                    }
                }
            }
            let mut r = vec![vec![0i64; n]; rank];
            for (i, row) in r.iter_mut().enumerate() {
                row[i] = 1;
                row[i + 1] = -1;
            }
            (p, r)
        }
        Lattice::Custom { basis } => {
            // rows in fundamental-coweight coordinates
            if basis.iter().any(|row| row.len() != rank) {
                return Err(AdmError::InvalidLattice(
                    "basis rows must have length = rank".into(),
                ));
            }
            let p = basis.clone();
            // alpha_i^v = sum_j cartan[i][j] omega_j^v must be an integer
            // combination of the basis rows
            let mut r = Vec::new();
            for i in 0..rank {
                let target: Vec<i64> = cartan[i].clone();
                let sol = linalg::solve_integer(basis, &target).ok_or_else(|| {
                    AdmError::InvalidLattice(format!(
                        "lattice does not contain simple coroot {}",
                        i + 1
                    ))
                })?;
                r.push(sol);
            }
            (p, r)
        }
    };
    // sanity: R * P = cartan
    let m = pairing.len();
    for i in 0..rank {
        for j in 0..rank {
            let v: i64 = (0..m).map(|b| coroot_basis[i][b] * pairing[b][j]).sum();
            if v != cartan[i][j] {
                return Err(AdmError::InvalidLattice(
                    "pairing inconsistent with Cartan matrix".into(),
                ));
            }
        }
    }
    let coroot_hnf = linalg::hermite_basis(&coroot_basis);
    if coroot_hnf.len() != rank {
        return Err(AdmError::InvalidLattice("coroot images not independent".into()));
    }

    let mut rd = RootDatum {
        id: NEXT_DATUM_ID.fetch_add(1, Ordering::Relaxed),
        spec,
        rank,
        lattice_rank: m,
        components: comps,
        cartan,
        roots,
        num_positive,
        root_index,
        pairing,
        coroot_basis,
        coroot_hnf,
        two_rho,
        weyl: WeylGroup::empty(),
    };
    rd.weyl = WeylGroup::build(&rd, weyl_bound)?;
    Ok(rd)
}

impl RootDatum {
    #[inline]
    pub fn is_positive(&self, root: usize) -> bool {
        root < self.num_positive
    }

    /// Index of -alpha.
    #[inline]
    pub fn neg(&self, root: usize) -> usize {
        if root < self.num_positive {
            root + self.num_positive
        } else {
            root - self.num_positive
        }
    }

    pub fn root_of_coords(&self, coords: &[i64]) -> Option<usize> {
        self.root_index.get(coords).copied()
    }

    /// Image of a root under the simple reflection s_i, as a root index.
    pub fn simple_reflect_root(&self, i: usize, root: usize) -> usize {
        let c = &self.roots[root].coords;
        let pair: i64 = (0..self.rank).map(|j| c[j] * self.cartan[i][j]).sum();
        let mut nc = c.clone();
        nc[i] -= pair;
        self.root_index[&nc]
    }

    /// Pairing of a cocharacter (lattice coordinates) with a root.
    pub fn pair(&self, lambda: &[i64], root: usize) -> i64 {
        let c = &self.roots[root].coords;
        let mut acc = 0;
        for (b, &lb) in lambda.iter().enumerate() {
            if lb != 0 {
                for (j, &cj) in c.iter().enumerate() {
                    acc += lb * self.pairing[b][j] * cj;
                }
            }
        }
        acc
    }

    /// Pairing with the j-th simple root.
    pub fn pair_simple(&self, lambda: &[i64], j: usize) -> i64 {
        lambda
            .iter()
            .enumerate()
            .map(|(b, &lb)| lb * self.pairing[b][j])
            .sum()
    }

    pub fn is_dominant(&self, lambda: &[i64]) -> bool {
        (0..self.rank).all(|j| self.pair_simple(lambda, j) >= 0)
    }

    /// <lambda, 2 rho>.
    pub fn pair_two_rho(&self, lambda: &[i64]) -> i64 {
        let mut acc = 0;
        for (b, &lb) in lambda.iter().enumerate() {
            if lb != 0 {
                for (j, &tj) in self.two_rho.iter().enumerate() {
                    acc += lb * self.pairing[b][j] * tj;
                }
            }
        }
        acc
    }

    /// The coroot of `root` in lattice coordinates.
    pub fn coroot_in_lattice(&self, root: usize) -> Vec<i64> {
        let d = &self.roots[root].coroot;
        let mut v = vec![0i64; self.lattice_rank];
        for (i, &di) in d.iter().enumerate() {
            if di != 0 {
                for (b, &rb) in self.coroot_basis[i].iter().enumerate() {
                    v[b] += di * rb;
                }
            }
        }
        v
    }

    /// Express a lattice vector in simple-coroot coordinates, when it lies in
    /// the coroot lattice.
    pub fn to_coroot_coords(&self, v: &[i64]) -> Option<Vec<i64>> {
        linalg::solve_integer(&self.coroot_basis, v)
    }

    /// Canonical representative of `lambda` modulo the coroot lattice: the
    /// coset tag identifying the W_aff-coset of t^lambda.
    pub fn coset_tag(&self, lambda: &[i64]) -> Vec<i64> {
        linalg::reduce_mod(&self.coroot_hnf, lambda)
    }

    /// <alpha^v, 2 rho> for a root index.
    pub fn coroot_two_rho(&self, root: usize) -> i64 {
        // <alpha_j^v, rho> = 1, so this is twice the coroot height
        2 * self.roots[root].coroot.iter().sum::<i64>()
    }

    /// Simple-root coordinate rendering, e.g. `-a1-a2` or `2a1+a2`.
    pub fn root_name(&self, root: usize) -> String {
        let c = &self.roots[root].coords;
        let mut s = String::new();
        for (j, &cj) in c.iter().enumerate() {
            if cj == 0 {
                continue;
            }
            if cj > 0 && !s.is_empty() {
                s.push('+');
            }
            if cj == -1 {
                s.push('-');
            } else if cj != 1 {
                s.push_str(&cj.to_string());
            }
            s.push_str(&format!("a{}", j + 1));
        }
        s
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cartan::Lattice;

    fn rd(f: Family, r: usize) -> RootDatum {
        build_root_datum(CartanSpec::new(f, r, Lattice::Sc)).unwrap()
    }

    #[test]
    fn a1_counts() {
        let d = rd(Family::A, 1);
        assert_eq!(d.num_positive, 1);
        assert_eq!(d.components[0].highest_root, 0);
        let theta_cov = d.coroot_in_lattice(0);
        assert_eq!(d.pair_two_rho(&theta_cov), 2);
    }

    #[test]
    fn a2_counts() {
        let d = rd(Family::A, 2);
        assert_eq!(d.num_positive, 3);
        let theta = d.components[0].highest_root;
        assert_eq!(d.roots[theta].coords, vec![1, 1]);
        let theta_cov = d.coroot_in_lattice(theta);
        assert_eq!(d.pair_two_rho(&theta_cov), 4);
    }

    #[test]
    fn g2_counts() {
        let d = rd(Family::G, 2);
        assert_eq!(d.num_positive, 6);
        let theta = d.components[0].highest_root;
        assert_eq!(d.roots[theta].coords, vec![3, 2]);
    }

    #[test]
    fn classical_counts() {
        for (f, r, n) in [
            (Family::B, 3, 9),
            (Family::C, 3, 9),
            (Family::D, 4, 12),
            (Family::F, 4, 24),
            (Family::A, 4, 10),
        ] {
            assert_eq!(rd(f, r).num_positive, n, "{f}{r}");
        }
    }

    #[test]
    fn pairing_axiom() {
        for (f, r) in [(Family::A, 2), (Family::B, 2), (Family::G, 2), (Family::C, 3)] {
            let d = rd(f, r);
            for i in 0..d.num_positive {
                let cov = d.coroot_in_lattice(i);
                assert_eq!(d.pair(&cov, i), 2, "{f}{r} root {i}");
            }
        }
    }

    #[test]
    fn gl_lattice() {
        let d = build_root_datum(CartanSpec::new(Family::A, 2, Lattice::Gl)).unwrap();
        assert_eq!(d.lattice_rank, 3);
        // mu = e1 is dominant with <mu, a1> = 1, <mu, a2> = 0
        assert_eq!(d.pair_simple(&[1, 0, 0], 0), 1);
        assert_eq!(d.pair_simple(&[1, 0, 0], 1), 0);
        assert!(d.is_dominant(&[1, 0, 0]));
        assert!(!d.is_dominant(&[0, 1, 0]));
        // e1 and e2 are in the same coset mod coroots, e1+e2 is not
        assert_eq!(d.coset_tag(&[1, 0, 0]), d.coset_tag(&[0, 0, 1]));
        assert_ne!(d.coset_tag(&[1, 1, 0]), d.coset_tag(&[1, 0, 0]));
    }

    #[test]
    fn reducible() {
        let d = build_root_datum(CartanSpec {
            components: vec![(Family::A, 2), (Family::A, 1)],
            lattice: Lattice::Sc,
        })
        .unwrap();
        assert_eq!(d.num_positive, 4);
        assert_eq!(d.components.len(), 2);
        assert_eq!(d.roots[d.components[1].highest_root].coords, vec![0, 0, 1]);
    }

    #[test]
    fn bad_custom_lattice() {
        // basis spanning 2 * coweight lattice does not contain the coroots of A1
        let err = build_root_datum(CartanSpec::new(
            Family::A,
            1,
            Lattice::Custom { basis: vec![vec![3]] },
        ));
        assert!(matches!(err, Err(AdmError::InvalidLattice(_))));
    }
}
