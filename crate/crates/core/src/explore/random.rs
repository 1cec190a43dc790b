//! Seeded generators. The same seed always yields the same object.

use std::sync::Arc;

use rand::{RngExt, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::Result;
use crate::topo::{numbered, PartialMap, Problem, Space, TotalMap};

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// `n` points; each ordered pair is related with probability `density`,
/// then the relation is closed under transitivity.
pub fn random_space(n: usize, density: f64, seed: u64) -> Space {
    random_space_with(&mut rng(seed), &format!("R{n}_{seed}"), n, density)
}

pub fn random_space_with(rng: &mut ChaCha8Rng, name: &str, n: usize, density: f64) -> Space {
    let density = density.clamp(0.0, 1.0);
    let mut below = vec![false; n * n];
    for i in 0..n {
        for j in 0..n {
            below[i * n + j] = i == j || rng.random_bool(density);
        }
    }
    for k in 0..n {
        for i in 0..n {
            if below[i * n + k] {
                for j in 0..n {
                    if below[k * n + j] {
                        below[i * n + j] = true;
                    }
                }
            }
        }
    }
    Space::from_closed(name.to_string(), numbered(n), below)
}

/// A uniformly random total map. Fails only if `y` is empty and `x` is not.
pub fn random_map(x: &Arc<Space>, y: &Arc<Space>, seed: u64) -> Result<TotalMap> {
    random_map_with(&mut rng(seed), "r", x, y)
}

pub fn random_map_with(rng: &mut ChaCha8Rng, name: &str, x: &Arc<Space>, y: &Arc<Space>) -> Result<TotalMap> {
    let table = (0..x.len()).map(|_| if y.is_empty() { 0 } else { rng.random_range(0..y.len()) }).collect();
    TotalMap::new(name, x.clone(), y.clone(), table)
}

/// Each point is defined with probability `defined`.
pub fn random_partial_map_with(
    rng: &mut ChaCha8Rng,
    name: &str,
    x: &Arc<Space>,
    y: &Arc<Space>,
    defined: f64,
) -> Result<PartialMap> {
    let table = (0..x.len())
        .map(|_| (!y.is_empty() && rng.random_bool(defined.clamp(0.0, 1.0))).then(|| rng.random_range(0..y.len())))
        .collect();
    PartialMap::new(name, x.clone(), y.clone(), table)
}

pub fn random_partial_map(x: &Arc<Space>, y: &Arc<Space>, defined: f64, seed: u64) -> Result<PartialMap> {
    random_partial_map_with(&mut rng(seed), "r", x, y, defined)
}

/// A problem with up to `members` random partial maps (duplicates collapse).
pub fn random_problem(x: &Arc<Space>, y: &Arc<Space>, members: usize, defined: f64, seed: u64) -> Result<Problem> {
    random_problem_with(&mut rng(seed), "P", x, y, members, defined)
}

pub fn random_problem_with(
    rng: &mut ChaCha8Rng,
    name: &str,
    x: &Arc<Space>,
    y: &Arc<Space>,
    members: usize,
    defined: f64,
) -> Result<Problem> {
    let maps = (0..members)
        .map(|k| random_partial_map_with(rng, &format!("{name}.m{k}"), x, y, defined))
        .collect::<Result<Vec<_>>>()?;
    Problem::new(name, x.clone(), y.clone(), maps)
}
