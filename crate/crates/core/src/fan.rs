//! Breadth-first exploration of G-fans to a bounded word length.

use std::collections::{BTreeMap, BTreeSet};

use num_bigint::BigInt;
use num_traits::{Signed, Zero};
use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::exchange::ExchangeMatrix;
use crate::io::fan_doc::{self, ConeEntry, FanDocument};
use crate::matrix::{dot, IntMatrix};
use crate::quadratic::QuadraticNumber;
use crate::seed::{shortlex, ConeKey, GCone, Seed};

pub const DEFAULT_DEPTH: usize = 10;
pub const DEFAULT_MAX_CONES: usize = 100_000;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExploreOptions {
    pub depth: usize,
    pub max_cones: usize,
    /// Shuffles the processing order of each level; the result must not
    /// depend on it.
    pub shuffle_seed: Option<u64>,
    pub parallel: bool,
}

impl Default for ExploreOptions {
    fn default() -> Self {
        Self {
            depth: DEFAULT_DEPTH,
            max_cones: DEFAULT_MAX_CONES,
            shuffle_seed: None,
            parallel: true,
        }
    }
}

impl ExploreOptions {
    pub fn with_depth(depth: usize) -> Self {
        Self {
            depth,
            ..Self::default()
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConeRecord {
    pub cone: GCone,
    /// Shortest word reaching the cone found by the search.
    pub word: Vec<usize>,
}

/// A deduplicated set of G-cones with adjacency and frontier facets.
///
/// A frontier facet `(key, k)` is the facet of `key` crossed by mutation in
/// direction `k` whose neighbour lies outside the explored set.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Fan {
    source: ExchangeMatrix,
    depth: usize,
    cones: BTreeMap<ConeKey, ConeRecord>,
    adjacency: BTreeSet<(ConeKey, ConeKey)>,
    frontier: BTreeSet<(ConeKey, usize)>,
}

struct Child {
    parent: ConeKey,
    direction: usize,
    seed: Seed,
    key: ConeKey,
}

fn ordered(a: ConeKey, b: ConeKey) -> (ConeKey, ConeKey) {
    if a <= b {
        (a, b)
    } else {
        (b, a)
    }
}

fn expand(level: &[(ConeKey, Seed)], parallel: bool) -> Result<Vec<Child>> {
    let one = |(key, seed): &(ConeKey, Seed)| -> Result<Vec<Child>> {
        (1..=seed.rank())
            .map(|k| {
                let child = seed.mutate(k)?;
                Ok(Child {
                    parent: key.clone(),
                    direction: k,
                    key: child.g_cone().key,
                    seed: child,
                })
            })
            .collect()
    };
    let nested: Vec<Vec<Child>> = if parallel {
        level.par_iter().map(one).collect::<Result<_>>()?
    } else {
        level.iter().map(one).collect::<Result<_>>()?
    };
    Ok(nested.into_iter().flatten().collect())
}

impl Fan {
    pub fn explore(b: &ExchangeMatrix, opts: &ExploreOptions) -> Result<Fan> {
        let seed = Seed::initial(b.clone());
        let key = seed.g_cone().key;
        let mut fan = Fan {
            source: b.clone(),
            depth: 0,
            cones: BTreeMap::new(),
            adjacency: BTreeSet::new(),
            frontier: BTreeSet::new(),
        };
        fan.cones.insert(
            key.clone(),
            ConeRecord {
                cone: seed.g_cone(),
                word: Vec::new(),
            },
        );
        fan.grow(vec![(key, seed)], opts)?;
        Ok(fan)
    }

    /// Continues an exploration to a larger depth; equal to exploring the
    /// source matrix to that depth directly.
    pub fn extend(&self, opts: &ExploreOptions) -> Result<Fan> {
        if opts.depth < self.depth {
            return Err(Error::InvalidOption(format!(
                "cannot shrink a depth-{} fan to depth {}",
                self.depth, opts.depth
            )));
        }
        let root = Seed::initial(self.source.clone());
        let last: Vec<(ConeKey, Seed)> = self
            .cones
            .iter()
            .filter(|(_, r)| r.word.len() == self.depth)
            .map(|(k, r)| Ok((k.clone(), root.apply_word(&r.word)?)))
            .collect::<Result<_>>()?;
        let mut fan = self.clone();
        fan.frontier.clear();
        fan.grow(last, opts)?;
        Ok(fan)
    }

    fn grow(&mut self, mut level: Vec<(ConeKey, Seed)>, opts: &ExploreOptions) -> Result<()> {
        let mut rng = opts.shuffle_seed.map(ChaCha8Rng::seed_from_u64);
        while self.depth < opts.depth && !level.is_empty() {
            if let Some(rng) = rng.as_mut() {
                level.shuffle(rng);
            }
            let children = expand(&level, opts.parallel)?;
            let mut fresh: BTreeMap<ConeKey, Seed> = BTreeMap::new();
            for child in children {
                if child.key != child.parent {
                    self.adjacency
                        .insert(ordered(child.parent.clone(), child.key.clone()));
                }
                if self.cones.contains_key(&child.key) {
                    continue;
                }
                match fresh.get(&child.key) {
                    Some(s) if shortlex(s.word(), child.seed.word()).is_le() => {}
                    _ => {
                        fresh.insert(child.key, child.seed);
                    }
                }
            }
            if self.cones.len() + fresh.len() > opts.max_cones {
                return Err(Error::ConeBudgetExceeded {
                    limit: opts.max_cones,
                });
            }
            for (key, seed) in &fresh {
                self.cones.insert(
                    key.clone(),
                    ConeRecord {
                        cone: seed.g_cone(),
                        word: seed.word().to_vec(),
                    },
                );
            }
            self.depth += 1;
            level = fresh.into_iter().collect();
        }
        self.depth = self.depth.max(opts.depth);
        // Probe the outermost level for adjacency and unexplored facets.
        for child in expand(&level, opts.parallel)? {
            if self.cones.contains_key(&child.key) {
                if child.key != child.parent {
                    self.adjacency.insert(ordered(child.parent, child.key));
                }
            } else {
                self.frontier.insert((child.parent, child.direction));
            }
        }
        Ok(())
    }

    #[inline]
    pub fn source(&self) -> &ExchangeMatrix {
        &self.source
    }

    #[inline]
    pub fn depth(&self) -> usize {
        self.depth
    }

    pub fn len(&self) -> usize {
        self.cones.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cones.is_empty()
    }

    pub fn cones(&self) -> impl Iterator<Item = (&ConeKey, &ConeRecord)> {
        self.cones.iter()
    }

    pub fn get(&self, key: &ConeKey) -> Option<&ConeRecord> {
        self.cones.get(key)
    }

    pub fn keys(&self) -> BTreeSet<ConeKey> {
        self.cones.keys().cloned().collect()
    }

    pub fn adjacency(&self) -> &BTreeSet<(ConeKey, ConeKey)> {
        &self.adjacency
    }

    pub fn frontier(&self) -> &BTreeSet<(ConeKey, usize)> {
        &self.frontier
    }

    pub fn frontier_keys(&self) -> BTreeSet<ConeKey> {
        self.frontier.iter().map(|(k, _)| k.clone()).collect()
    }

    /// Shortest stored word whose cone is the negative orthant.
    pub fn find_negative_orthant(&self) -> Option<Vec<usize>> {
        self.cones
            .iter()
            .filter(|(k, _)| k.is_negative_orthant())
            .map(|(_, r)| r.word.clone())
            .min_by(|a, b| shortlex(a, b))
    }

    /// Whether some stored cone contains `ray` in its interior (or closure).
    pub fn any_cone_contains(&self, ray: &[QuadraticNumber], strictness: Strictness) -> bool {
        self.cones
            .values()
            .any(|r| cone_contains(&r.cone, ray, strictness))
    }

    pub fn to_json(&self) -> serde_json::Value {
        fan_doc::to_value(&FanDocument {
            source: self.source.clone(),
            depth: self.depth,
            cones: self
                .cones
                .iter()
                .map(|(k, r)| ConeEntry {
                    key: k.to_string(),
                    g: r.cone.ray_matrix(),
                    c: IntMatrix::from_columns(&r.cone.normals).expect("square"),
                    word: r.word.clone(),
                })
                .collect(),
            adjacency: self
                .adjacency
                .iter()
                .map(|(a, b)| (a.to_string(), b.to_string()))
                .collect(),
            frontier: self
                .frontier
                .iter()
                .map(|(k, d)| (k.to_string(), *d))
                .collect(),
        })
    }

    pub fn save(&self) -> String {
        serde_json::to_string_pretty(&self.to_json()).expect("serializable")
    }

    pub fn from_json(v: &serde_json::Value) -> Result<Fan> {
        let doc = fan_doc::from_value(v)?;
        let n = doc.source.rank();
        let mut cones = BTreeMap::new();
        for entry in doc.cones {
            let key: ConeKey = entry.key.parse()?;
            if entry.g.rows() != n || entry.g.cols() != n || entry.c.rows() != n || entry.c.cols() != n {
                return Err(Error::MalformedDocument(format!(
                    "cone {key} has the wrong dimensions"
                )));
            }
            if !entry.g.is_unimodular() {
                return Err(Error::MalformedDocument(format!(
                    "cone {key} has a non-unimodular ray matrix"
                )));
            }
            let cone = GCone {
                rays: entry.g.columns(),
                normals: entry.c.columns(),
                key: ConeKey::from_rays(entry.g.columns()),
            };
            if cone.key != key {
                return Err(Error::MalformedDocument(format!(
                    "cone key {key} does not match its rays"
                )));
            }
            if entry.word.iter().any(|&k| k > n) {
                return Err(Error::MalformedDocument(format!(
                    "word of cone {key} uses a direction above {n}"
                )));
            }
            cones.insert(key, ConeRecord { cone, word: entry.word });
        }
        let known = |s: &str| -> Result<ConeKey> {
            let k: ConeKey = s.parse()?;
            if cones.contains_key(&k) {
                Ok(k)
            } else {
                Err(Error::MalformedDocument(format!("unknown cone key {s}")))
            }
        };
        let adjacency = doc
            .adjacency
            .iter()
            .map(|(a, b)| Ok(ordered(known(a)?, known(b)?)))
            .collect::<Result<_>>()?;
        let frontier = doc
            .frontier
            .iter()
            .map(|(k, d)| Ok((known(k)?, *d)))
            .collect::<Result<_>>()?;
        Ok(Fan {
            source: doc.source,
            depth: doc.depth,
            cones,
            adjacency,
            frontier,
        })
    }

    pub fn load(text: &str) -> Result<Fan> {
        let v: serde_json::Value =
            serde_json::from_str(text).map_err(|e| Error::MalformedDocument(e.to_string()))?;
        Fan::from_json(&v)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Strictness {
    Interior,
    Closure,
}

/// Barycentric coordinates of `ray` in the basis of the cone's rays.
pub fn cone_coordinates(cone: &GCone, ray: &[QuadraticNumber]) -> Vec<QuadraticNumber> {
    let g = cone.ray_matrix();
    assert_eq!(g.rows(), ray.len(), "dimension mismatch");
    let inv = g.inverse_unimodular().expect("G-cones are unimodular");
    (0..inv.rows())
        .map(|i| {
            inv.row(i)
                .iter()
                .zip(ray)
                .filter(|(c, _)| !c.is_zero())
                .fold(QuadraticNumber::zero(), |acc, (c, x)| &acc + &x.scale_int(c))
        })
        .collect()
}

pub fn cone_contains(cone: &GCone, ray: &[QuadraticNumber], strictness: Strictness) -> bool {
    cone_coordinates(cone, ray).iter().all(|x| match strictness {
        Strictness::Interior => x.signum().is_gt(),
        Strictness::Closure => x.signum().is_ge(),
    })
}

fn cross(u: &[BigInt], v: &[BigInt]) -> Vec<BigInt> {
    vec![
        &u[1] * &v[2] - &u[2] * &v[1],
        &u[2] * &v[0] - &u[0] * &v[2],
        &u[0] * &v[1] - &u[1] * &v[0],
    ]
}

/// Whether two simplicial cones have disjoint interiors, decided by looking
/// for a separating hyperplane among facet planes (and, in rank 3, planes
/// spanned by one ray of each cone).
pub fn interiors_disjoint(p: &GCone, q: &GCone) -> bool {
    let n = p.rays.len();
    let facet_normals = |c: &GCone| -> Vec<Vec<BigInt>> {
        let inv = c.ray_matrix().inverse_unimodular().expect("unimodular");
        (0..n).map(|i| inv.row(i).to_vec()).collect()
    };
    let mut candidates = facet_normals(p);
    candidates.extend(facet_normals(q));
    if n == 3 {
        for r in &p.rays {
            for s in &q.rays {
                let h = cross(r, s);
                if h.iter().any(|x| !x.is_zero()) {
                    candidates.push(h);
                }
            }
        }
    }
    candidates.iter().any(|h| {
        let side = |c: &GCone| {
            let vals: Vec<BigInt> = c.rays.iter().map(|r| dot(h, r)).collect();
            (
                vals.iter().all(|x| !x.is_negative()),
                vals.iter().all(|x| !x.is_positive()),
            )
        };
        let (p_ge, p_le) = side(p);
        let (q_ge, q_le) = side(q);
        (p_ge && q_le) || (p_le && q_ge)
    })
}
