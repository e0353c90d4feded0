//! Embeddings, weak embeddings and parbeddings between finite hyperspaces.
//!
//! For `n`-indexed `A` and `B`, an *embedding* `f: B -> A` is an injection with
//! `[x]_i = [y]_i ⟺ [f(x)]_i = [f(y)]_i`; a *weak embedding* allows the
//! relations to be permuted. For `A` `n`-indexed and `B` `d`-indexed and
//! `β: n -> d`, a *`β`-parbedding* is an injection with
//! `[x]_{β(i)} = [y]_{β(i)} ⟹ [f(x)]_i = [f(y)]_i`.

mod fcn;
mod search;
mod verify;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::hyperspace::{Coloring, FiniteIndexedHyperspace as Space};
use crate::setsystem::dandy::next_permutation;

pub use fcn::{embeds_all_small_cubes, fcn_estimate, FcnEstimate, FcnValue};
pub use search::{search_map, NodeBudget, Search};
pub use verify::{
    compose_parbeddings, verify_embedding, verify_parbedding, verify_weak_embedding,
};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum MorphismKind {
    #[serde(rename = "embed")]
    Embedding,
    Weak,
    #[serde(rename = "parbed")]
    Parbedding,
}

impl std::str::FromStr for MorphismKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "embed" | "embedding" => Ok(MorphismKind::Embedding),
            "weak" => Ok(MorphismKind::Weak),
            "parbed" | "parbedding" => Ok(MorphismKind::Parbedding),
            other => Err(Error::parse(format!("unknown morphism kind {other:?}"))),
        }
    }
}

/// A map `f: B -> A` together with the relation data of its kind.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MorphismWitness {
    pub kind: MorphismKind,
    /// `map[x] = f(x)`.
    pub map: Vec<usize>,
    /// `π`, for weak embeddings.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub perm: Option<Vec<usize>>,
    /// `β` from `A`'s relation indices to `B`'s, for parbeddings.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub beta: Option<Vec<usize>>,
}

impl MorphismWitness {
    pub fn verify(&self, b: &Space, a: &Space) -> Result<bool> {
        match (self.kind, &self.perm, &self.beta) {
            (MorphismKind::Embedding, None, None) => verify_embedding(b, a, &self.map),
            (MorphismKind::Weak, Some(perm), None) => verify_weak_embedding(b, a, &self.map, perm),
            (MorphismKind::Parbedding, None, Some(beta)) => {
                verify_parbedding(b, a, &self.map, beta)
            }
            _ => Err(Error::invalid("witness fields do not match its kind")),
        }
    }
}

fn same_arity(b: &Space, a: &Space) -> Result<()> {
    if b.n() != a.n() {
        return Err(Error::ArityMismatch {
            expected: a.n(),
            found: b.n(),
        });
    }
    Ok(())
}

/// Lexicographically least embedding of `B` into `A`, if any.
pub fn find_embedding(b: &Space, a: &Space, budget: &mut NodeBudget) -> Result<Search<MorphismWitness>> {
    same_arity(b, a)?;
    let identity: Vec<usize> = (0..a.n()).collect();
    Ok(search_map(b, a, &identity, true, budget).map(|map| MorphismWitness {
        kind: MorphismKind::Embedding,
        map,
        perm: None,
        beta: None,
    }))
}

/// Weak embedding with the lexicographically least `π` that admits one, and
/// the least map for that `π`.
pub fn find_weak_embedding(
    b: &Space,
    a: &Space,
    budget: &mut NodeBudget,
) -> Result<Search<MorphismWitness>> {
    same_arity(b, a)?;
    let mut perm: Vec<usize> = (0..a.n()).collect();
    loop {
        match search_map(b, a, &perm, true, budget) {
            Search::Found(map) => {
                return Ok(Search::Found(MorphismWitness {
                    kind: MorphismKind::Weak,
                    map,
                    perm: Some(perm),
                    beta: None,
                }))
            }
            Search::Indeterminate => return Ok(Search::Indeterminate),
            Search::NotFound => {}
        }
        if !next_permutation(&mut perm) {
            return Ok(Search::NotFound);
        }
    }
}

/// Least map for a fixed `β`.
pub fn find_parbedding_with(
    b: &Space,
    a: &Space,
    beta: &[usize],
    budget: &mut NodeBudget,
) -> Result<Search<MorphismWitness>> {
    if beta.len() != a.n() || beta.iter().any(|&j| j >= b.n()) {
        return Err(Error::invalid(format!(
            "beta {beta:?} is not a map from {{0..{}}} to {{0..{}}}",
            a.n(),
            b.n()
        )));
    }
    Ok(search_map(b, a, beta, false, budget).map(|map| MorphismWitness {
        kind: MorphismKind::Parbedding,
        map,
        perm: None,
        beta: Some(beta.to_vec()),
    }))
}

/// Parbedding with the lexicographically least `β` that admits one.
pub fn find_parbedding(
    b: &Space,
    a: &Space,
    budget: &mut NodeBudget,
) -> Result<Search<MorphismWitness>> {
    let (n, d) = (a.n(), b.n());
    let mut beta = vec![0usize; n];
    loop {
        match find_parbedding_with(b, a, &beta, budget)? {
            Search::NotFound => {}
            other => return Ok(other),
        }
        // next map n -> d in lexicographic order
        let mut pos = n;
        loop {
            if pos == 0 {
                return Ok(Search::NotFound);
            }
            pos -= 1;
            beta[pos] += 1;
            if beta[pos] < d {
                break;
            }
            beta[pos] = 0;
        }
    }
}

pub fn find_morphism(
    kind: MorphismKind,
    b: &Space,
    a: &Space,
    budget: &mut NodeBudget,
) -> Result<Search<MorphismWitness>> {
    match kind {
        MorphismKind::Embedding => find_embedding(b, a, budget),
        MorphismKind::Weak => find_weak_embedding(b, a, budget),
        MorphismKind::Parbedding => find_parbedding(b, a, budget),
    }
}

/// `ψ = β ∘ χ ∘ f`: the coloring of `B` pulled back along a verified
/// `β`-parbedding `f` of `B` into `A`.
pub fn pullback_coloring(
    b: &Space,
    a: &Space,
    chi: &Coloring,
    f: &[usize],
    beta: &[usize],
) -> Result<Coloring> {
    if !verify_parbedding(b, a, f, beta)? {
        return Err(Error::UnverifiedWitness);
    }
    if chi.len() != a.size() || chi.n() != a.n() {
        return Err(Error::PartialColoring {
            colored: chi.len(),
            size: a.size(),
        });
    }
    Coloring::new(b.n(), f.iter().map(|&y| beta[chi.color(y)]).collect())
}
