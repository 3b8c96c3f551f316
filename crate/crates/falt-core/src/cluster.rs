//! Cluster pictures of `f_n(x) = x (1 - x^n)` at odd primes `p | n`, and the
//! finite-place order of the canonical section over the cluster data.
//!
//! Two independent routes produce the picture: the closed form (roots of
//! unity gather into packs `s_{a,b}` of size `p^a` with known depths) and a
//! brute-force oracle that enumerates ultrametric discs from the pairwise
//! valuation matrix. The Kunzweiler order formula is generic over any
//! picture; a separate closed form specializes it to `f_n`, and the two must
//! agree exactly as rationals.
//!
//! Valuations are normalized by `v(p) = 1`; ramification never appears
//! because the height formula aggregates it away.

use std::collections::BTreeMap;

use rug::ops::Pow;
use rug::Rational;

use crate::exact::{self, gcd, rat};
use crate::{Error, Result};

/// A valuation value: finite rational or the valuation of zero. Kept as a
/// distinct sentinel so infinities can never corrupt a minimum.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Valuation {
    Finite(Rational),
    Infinite,
}

impl Valuation {
    pub fn finite(num: i64, den: i64) -> Self {
        Valuation::Finite(rat(num, den))
    }

    pub fn is_infinite(&self) -> bool {
        matches!(self, Valuation::Infinite)
    }

    pub fn as_finite(&self) -> Option<&Rational> {
        match self {
            Valuation::Finite(r) => Some(r),
            Valuation::Infinite => None,
        }
    }
}

impl PartialOrd for Valuation {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Valuation {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        use Valuation::*;
        match (self, other) {
            (Infinite, Infinite) => std::cmp::Ordering::Equal,
            (Infinite, Finite(_)) => std::cmp::Ordering::Greater,
            (Finite(_), Infinite) => std::cmp::Ordering::Less,
            (Finite(a), Finite(b)) => a.cmp(b),
        }
    }
}

impl std::fmt::Display for Valuation {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Valuation::Finite(r) => write!(f, "{r}"),
            Valuation::Infinite => write!(f, "inf"),
        }
    }
}

/// `v(1 - zeta_n^l)` at an odd prime `p`: infinite when `n | l`, equal to
/// `1/(p^(a-1)(p-1))` when `n/gcd(n,l) = p^a`, zero otherwise. Depends on
/// `l` only through `gcd(n, l)`.
pub fn cyclotomic_valuation(n: u64, l: i64, p: u64) -> Valuation {
    assert!(n >= 1);
    assert!(p % 2 == 1 && exact::is_prime(p), "p must be an odd prime");
    let l_mod = l.rem_euclid(n as i64) as u64;
    if l_mod == 0 {
        return Valuation::Infinite;
    }
    let k = n / gcd(n, l_mod);
    // is k a power of p?
    let mut m = k;
    let mut a = 0u32;
    while m.is_multiple_of(p) {
        m /= p;
        a += 1;
    }
    if m == 1 && a >= 1 {
        let den = p.pow(a - 1) * (p - 1);
        Valuation::Finite(Rational::from((1, den)))
    } else {
        Valuation::Finite(Rational::new())
    }
}

/// What a cluster is, in the closed-form catalogue.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ClusterKind {
    /// The singleton `{0}`.
    RootZero,
    /// All `n + 1` roots.
    FullSet,
    /// The pack `s_{a,b}` of `p^a` roots of unity.
    Pack { a: u32, b: u64 },
}

impl std::fmt::Display for ClusterKind {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            ClusterKind::RootZero => write!(f, "root-zero"),
            ClusterKind::FullSet => write!(f, "full-set"),
            ClusterKind::Pack { a, b } => write!(f, "s_{a}_{b}"),
        }
    }
}

/// One cluster: its roots (ids `0..n` are the exponents of `zeta_n`, id `n`
/// is the root 0), size, depth, and relative depth. Depth of a singleton is
/// infinite (empty minimum); relative depth is absent exactly for the full
/// set.
#[derive(Debug, Clone)]
pub struct Cluster {
    pub kind: ClusterKind,
    pub roots: Vec<u32>,
    pub depth: Valuation,
    pub relative_depth: Option<Valuation>,
}

impl Cluster {
    pub fn size(&self) -> usize {
        self.roots.len()
    }

    pub fn is_proper(&self) -> bool {
        self.roots.len() > 1
    }
}

/// The full cluster picture of `f_n` at `p`.
#[derive(Debug, Clone)]
pub struct ClusterPicture {
    pub n: u64,
    pub p: u64,
    /// Genus `(n - 1) / 2`.
    pub genus: u64,
    pub clusters: Vec<Cluster>,
    /// `v(Disc f_n) = n * ord_p(n)`.
    pub disc_valuation: Rational,
}

impl ClusterPicture {
    /// Clusters and attributes as a canonical map, for oracle comparison.
    pub fn canonical(&self) -> BTreeMap<Vec<u32>, (Valuation, Option<Valuation>)> {
        self.clusters
            .iter()
            .map(|c| {
                let mut roots = c.roots.clone();
                roots.sort_unstable();
                (roots, (c.depth.clone(), c.relative_depth.clone()))
            })
            .collect()
    }
}

fn check_args(n: u64, p: u64) -> Result<u32> {
    if n < 3 || n.is_multiple_of(2) {
        return Err(Error::InvalidArgument(format!(
            "cluster picture needs odd n >= 3, got {n}"
        )));
    }
    if p == 2 {
        return Err(Error::InvalidArgument("residue characteristic 2 is not supported".into()));
    }
    if !exact::is_prime(p) || !n.is_multiple_of(p) {
        return Err(Error::InvalidArgument(format!(
            "p = {p} must be an odd prime dividing n = {n}"
        )));
    }
    Ok(exact::ord_p(n, p))
}

/// Closed-form cluster picture: `{0}`, the full set, and the packs
/// `s_{a,b}` for `0 <= a <= ord_p(n)`, `b mod n/p^a`.
pub fn cluster_picture(n: u64, p: u64) -> Result<ClusterPicture> {
    let np = check_args(n, p)?;
    let mut clusters = Vec::new();

    clusters.push(Cluster {
        kind: ClusterKind::RootZero,
        roots: vec![n as u32],
        depth: Valuation::Infinite,
        relative_depth: Some(Valuation::Infinite),
    });

    for a in 0..=np {
        let pa = p.pow(a);
        let classes = n / pa;
        for b in 0..classes {
            let roots: Vec<u32> = (0..pa).map(|k| ((k * classes + b) % n) as u32).collect();
            let (depth, relative_depth) = if a == 0 {
                (Valuation::Infinite, Some(Valuation::Infinite))
            } else {
                let depth = rat(1, (p.pow(a - 1) * (p - 1)) as i64);
                let rel = if a < np {
                    rat(1, pa as i64)
                } else {
                    depth.clone()
                };
                (Valuation::Finite(depth), Some(Valuation::Finite(rel)))
            };
            clusters.push(Cluster {
                kind: ClusterKind::Pack { a, b },
                roots,
                depth,
                relative_depth,
            });
        }
    }

    clusters.push(Cluster {
        kind: ClusterKind::FullSet,
        roots: (0..=n as u32).collect(),
        depth: Valuation::Finite(Rational::new()),
        relative_depth: None,
    });

    Ok(ClusterPicture {
        n,
        p,
        genus: (n - 1) / 2,
        clusters,
        disc_valuation: Rational::from(n * np as u64),
    })
}

/// Brute-force oracle: enumerate every disc cut of the root set from the
/// pairwise valuation matrix, then read depths off the inclusion lattice.
/// Root ids as in [`Cluster::roots`]. Bounded to `n <= 300`.
pub fn brute_force_clusters(n: u64, p: u64) -> Result<ClusterPicture> {
    let np = check_args(n, p)?;
    if n > 300 {
        return Err(Error::InvalidArgument(format!(
            "brute-force oracle is bounded to n <= 300, got {n}"
        )));
    }
    let count = (n + 1) as usize; // ids 0..n-1 are zeta^id, id n is the root 0

    // pairwise valuations; v(zeta^i - zeta^j) = v(1 - zeta^(j-i)),
    // v(0 - zeta^b) = 0 (roots of unity are units), v(r - r) = infinity
    let val = |i: usize, j: usize| -> Valuation {
        if i == j {
            Valuation::Infinite
        } else if i == count - 1 || j == count - 1 {
            Valuation::Finite(Rational::new())
        } else {
            cyclotomic_valuation(n, j as i64 - i as i64, p)
        }
    };

    // threshold set: 0, every occurring finite value, and infinity (the
    // latter realizes singletons)
    let mut thresholds: Vec<Valuation> = vec![Valuation::Finite(Rational::new()), Valuation::Infinite];
    for i in 0..count {
        for j in (i + 1)..count {
            if let Valuation::Finite(r) = val(i, j) {
                let v = Valuation::Finite(r);
                if !thresholds.contains(&v) {
                    thresholds.push(v);
                }
            }
        }
    }

    // every disc {r' : v(r - r') >= d} over all centers r and thresholds d
    let mut seen: BTreeMap<Vec<u32>, ()> = BTreeMap::new();
    for center in 0..count {
        for d in &thresholds {
            let members: Vec<u32> = (0..count)
                .filter(|&other| val(center, other) >= *d)
                .map(|x| x as u32)
                .collect();
            seen.entry(members).or_insert(());
        }
    }

    // depths: minimal pairwise valuation inside each cluster
    let sets: Vec<Vec<u32>> = seen.into_keys().collect();
    let depths: Vec<Valuation> = sets
        .iter()
        .map(|s| {
            let mut depth = Valuation::Infinite;
            for (idx, &i) in s.iter().enumerate() {
                for &j in &s[idx + 1..] {
                    let v = val(i as usize, j as usize);
                    if v < depth {
                        depth = v;
                    }
                }
            }
            depth
        })
        .collect();

    // relative depths from the inclusion lattice: parent is the smallest
    // strict superset
    let mut clusters = Vec::new();
    for (i, s) in sets.iter().enumerate() {
        let mut parent: Option<usize> = None;
        for (j, t) in sets.iter().enumerate() {
            if t.len() > s.len() && s.iter().all(|x| t.binary_search(x).is_ok())
                && parent.is_none_or(|pj| sets[pj].len() > t.len()) {
                    parent = Some(j);
                }
        }
        let relative_depth = parent.map(|pj| match (&depths[i], &depths[pj]) {
            (Valuation::Infinite, _) => Valuation::Infinite,
            (Valuation::Finite(d), Valuation::Finite(pd)) => Valuation::Finite(Rational::from(d - pd)),
            (Valuation::Finite(_), Valuation::Infinite) => unreachable!("parent deeper than child"),
        });
        let kind = if s.len() == (n + 1) as usize {
            ClusterKind::FullSet
        } else if s == &[n as u32] {
            ClusterKind::RootZero
        } else {
            // recover (a, b) from the pack structure for reporting
            let b = (*s.iter().min().unwrap()) as u64;
            let mut a = 0u32;
            let mut m = s.len() as u64;
            while m.is_multiple_of(p) {
                m /= p;
                a += 1;
            }
            ClusterKind::Pack { a, b }
        };
        clusters.push(Cluster {
            kind,
            roots: s.clone(),
            depth: depths[i].clone(),
            relative_depth,
        });
    }

    Ok(ClusterPicture {
        n,
        p,
        genus: (n - 1) / 2,
        clusters,
        disc_valuation: Rational::from(n * np as u64),
    })
}

/// The order of the canonical section per unit ramification, generic over a
/// cluster picture:
///
/// `g v(Disc f) - (2g+1)/2 [even sum] - (2g+1)/2 [odd sum] - d_R g (2g+2)(2g+1)`
///
/// where the even sum is `delta (|s|-2)|s|` over proper even clusters other
/// than the full set, and the odd sum is `delta (|s|-1)^2` over proper odd
/// clusters.
pub fn kunzweiler_order(picture: &ClusterPicture) -> Result<Rational> {
    let g = picture.genus as i64;
    let full_size = (picture.n + 1) as usize;

    let mut even_sum = Rational::new();
    let mut odd_sum = Rational::new();
    let mut d_full = Rational::new();
    for c in &picture.clusters {
        if !c.is_proper() {
            continue;
        }
        if c.size() == full_size {
            match &c.depth {
                Valuation::Finite(d) => d_full = d.clone(),
                Valuation::Infinite => {
                    return Err(Error::InvalidArgument("full set with infinite depth".into()))
                }
            }
            continue;
        }
        let delta = match c.relative_depth.as_ref().and_then(|v| v.as_finite()) {
            Some(d) => d.clone(),
            None => {
                return Err(Error::InvalidArgument(format!(
                    "proper non-full cluster of size {} lacks a finite relative depth",
                    c.size()
                )))
            }
        };
        let size = c.size() as i64;
        if size % 2 == 0 {
            even_sum += delta * Rational::from((size - 2) * size);
        } else {
            odd_sum += delta * Rational::from((size - 1) * (size - 1));
        }
    }

    let mut order = Rational::from(g) * &picture.disc_valuation;
    let half_weight = rat(2 * g + 1, 2);
    order -= Rational::from(&half_weight * &even_sum);
    order -= Rational::from(&half_weight * &odd_sum);
    order -= d_full * Rational::from(g * (2 * g + 2) * (2 * g + 1));
    Ok(order)
}

/// Closed form for `ord(Lambda_n)/e` at `p | n`:
/// `(n/2) (n (p^(2m) - 1) / (p^(2m-1)(p^2 - 1)) - m)` with `m = ord_p(n)`.
/// Stated for odd `n >= 5`; the `n = 3` case is covered by the height
/// assembly, not here.
pub fn ord_lambda(n: u64, p: u64) -> Result<Rational> {
    if n < 5 {
        return Err(Error::InvalidArgument(format!(
            "ord_lambda is defined for odd n >= 5, got {n}"
        )));
    }
    let m = check_args(n, p)?;
    Ok(ord_lambda_coefficient_times_n(n, p, m))
}

/// `(n/2)(n c_p - m)` with `c_p = (p^(2m)-1)/(p^(2m-1)(p^2-1))`.
pub(crate) fn ord_lambda_coefficient_times_n(n: u64, p: u64, m: u32) -> Rational {
    let c = finite_coefficient(p, m);
    let mut inner = Rational::from(n) * c;
    inner -= Rational::from(m);
    inner * rat(n as i64, 2)
}

/// The per-prime coefficient `(p^(2m) - 1) / (p^(2m-1) (p^2 - 1))`.
pub fn finite_coefficient(p: u64, m: u32) -> Rational {
    assert!(m >= 1);
    let p = rug::Integer::from(p);
    let p2m = p.clone().pow(2 * m);
    let num = rug::Integer::from(&p2m - 1u32);
    let den = rug::Integer::from(&p2m / &p) * (p.clone().square() - 1u32);
    Rational::from((num, den))
}
